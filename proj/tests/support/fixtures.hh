#pragma once

#include <string>
#include <vector>

#include <ddet/des.hh>
#include <ddet/desf.hh>
#include <ddet/generators.hh>

namespace fixtures
{
  inline ddet::Des
  three_state()
  {
    return ddet::DesBuilder()
      .event("a")
      .event("b")
      .transition("1", "a", "1")
      .transition("1", "b", "2")
      .transition("2", "a", "3")
      .transition("3", "a", "2")
      .initial("1")
      .initial("2")
      .initial("3")
      .build();
  }

  inline ddet::Spec
  three_state_spec(const ddet::Des& d)
  {
    return ddet::make_spec(d, {{"1", "3"}});
  }

  /// x loops on a and moves on b to y; y moves on a to z, which loops.
  inline ddet::Des
  chain()
  {
    return ddet::DesBuilder()
      .event("a")
      .event("b")
      .transition("x", "a", "x")
      .transition("x", "b", "y")
      .transition("y", "a", "z")
      .transition("z", "a", "z")
      .initial("x")
      .build();
  }

  inline ddet::Spec
  chain_spec(const ddet::Des& d)
  {
    return ddet::make_spec(d, {{"y", "y"}});
  }

  /// Two-state swap under a single event.
  inline ddet::Des
  u1()
  {
    return ddet::DesBuilder()
      .event("a")
      .transition("1", "a", "2")
      .transition("2", "a", "1")
      .initial("1")
      .build();
  }

  /// Two-state DFA over {0,1} whose state flips on every symbol.
  inline ddet::Dfa
  parity_dfa(std::string s0, std::string s1, std::uint32_t initial,
             bool accept0, bool accept1)
  {
    ddet::Dfa d;
    d.states = {std::move(s0), std::move(s1)};
    d.next = {{1, 1}, {0, 0}};
    d.initial = initial;
    d.accepting = {accept0, accept1};
    return d;
  }

  /// Odd-length and even-length DFAs.
  inline std::vector<ddet::Dfa>
  odd_even()
  {
    return {parity_dfa("a", "b", 0, false, true),
            parity_dfa("c", "d", 1, false, true)};
  }

  inline ddet::Cnf3
  phi1()
  {
    return ddet::parse_cnf("(x|y)&(~x|y)");
  }

  inline ddet::Cnf3
  phi2()
  {
    return ddet::parse_cnf("x&~x");
  }

  inline std::string
  example_path(const std::string& name)
  {
    return std::string(DDET_EXAMPLES) + "/" + name;
  }
}
