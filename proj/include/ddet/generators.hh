#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <ddet/des.hh>

namespace ddet
{
  /// Seeded generator with platform-independent draws (the standard
  /// distributions are implementation defined).
  class Rng
  {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi)
    {
      return lo + below(hi - lo + 1);
    }
    bool chance(double p)
    {
      return double(engine_() >> 11) * 0x1.0p-53 < p;
    }

  private:
    std::mt19937_64 engine_;
  };

  // Instances --------------------------------------------------------------

  struct GeneratedInstance
  {
    Des des;
    Spec spec;
    /// One-line description of the construction and its parameters.
    std::string provenance;
  };

  /// Directed acyclic graph with a source and a target vertex.
  struct Dag
  {
    std::size_t vertices = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::uint32_t source = 0;
    std::uint32_t target = 0;
  };

  /// Throws input_error on out-of-range endpoints, cycles, or source ==
  /// target.
  void validate_dag(const Dag& g);

  /// Unary instance over event `a`: states v0..v{n-1} plus a sink `x`.
  /// Every edge (p, r) becomes p -a-> r, every vertex other than the target
  /// gets p -a-> x, and x and the target carry a-self-loops.  Initial state
  /// is the source; the spec is {(target, x)}.  Edges leaving the target
  /// are dropped: they cannot change whether the target is reachable and
  /// would break self-loop determinism.
  ///
  /// Strongly D-detectable iff the target is unreachable from the source.
  GeneratedInstance gen_from_dag(const Dag& g);

  /// Total DFA over {0, 1}.
  struct Dfa
  {
    std::vector<std::string> states;
    /// next[q][symbol]
    std::vector<std::array<std::uint32_t, 2>> next;
    std::uint32_t initial = 0;
    std::vector<bool> accepting;
  };

  /// Reads a DFA from a Des over the observable events `0` and `1`
  /// (marked states accept).  Throws input_error unless the automaton is
  /// total and deterministic with a single initial state.
  Dfa dfa_from_des(const Des& des);
  Des dfa_to_des(const Dfa& dfa);

  /// Nondeterministic union of the DFAs plus a sink q- and a ring
  /// q1+ .. qn+, joined by a fresh event `a` (non-accepting states go to
  /// q-, accepting states of DFA i go to qi+).  Initial states: q- and every
  /// DFA initial state.  Spec: {(q-, q1+)}.
  ///
  /// With \a encode_binary, each DFA transition on 0 becomes b then a and
  /// each transition on 1 becomes b then b through a fresh intermediate
  /// state, so the alphabet is {a, b}.  The sink and ring move on every
  /// event of the resulting alphabet.
  ///
  /// Strongly periodically D-detectable iff the intersection of the DFA
  /// languages is empty.
  GeneratedInstance gen_from_dfa_intersection(std::span<const Dfa> dfas,
                                              bool encode_binary);

  struct Literal
  {
    std::uint32_t variable = 0;
    bool negated = false;

    bool operator==(const Literal&) const = default;
  };

  /// Formula in conjunctive normal form with at most three literals per
  /// clause.
  struct Cnf3
  {
    std::size_t variables = 0;
    std::vector<std::vector<Literal>> clauses;
    /// Optional display names, one per variable.
    std::vector<std::string> names;
  };

  /// Parses e.g. `(x|y)&(~x|y)`.  Negation is `~` or `!`; variables are
  /// numbered by first occurrence.  Throws parse_error.
  Cnf3 parse_cnf(std::string_view text);
  std::string format_cnf(const Cnf3& phi);
  /// Throws input_error on empty formulas or clauses, clauses with more
  /// than three literals, repeated variables within a clause, or variable
  /// indices out of range.
  void validate_cnf(const Cnf3& phi);

  /// The first \a n primes.
  std::vector<std::uint32_t> first_primes(std::size_t n);

  /// Unary instance over event `0` encoding \a phi.  With p_i the i-th
  /// prime, automaton A0 accepts 0^z when z is not 0 or 1 modulo some p_i
  /// (omitted when that language is empty); automaton Ak accepts
  /// 0^{z_k} (0^{P_k})^* where P_k is the product of the primes of clause k
  /// and z_k is the residue falsifying every literal of the clause.
  /// States of automaton i are named `Ai_j`.  The spec pairs every marked
  /// state with every state of a different automaton.
  ///
  /// Strongly periodically D-detectable iff \a phi is satisfiable.
  GeneratedInstance gen_from_3cnf(const Cnf3& phi);

  // Oracles ----------------------------------------------------------------

  /// Exhaustive assignment search; at most 20 variables.
  bool sat_bruteforce(const Cnf3& phi);
  /// Breadth-first search of the product automaton; throws budget_exceeded
  /// beyond \a max_product states.
  bool dfa_intersection_empty(std::span<const Dfa> dfas,
                              std::size_t max_product = 1'000'000);
  /// Whether the target is reachable from the source.
  bool dag_reachable(const Dag& g);

  // Random systems ---------------------------------------------------------

  struct RandomDesParams
  {
    std::uint64_t seed = 1;
    std::size_t states = 1;
    std::size_t events = 1;
    double observable_fraction = 1.0;
    double density = 0.5;
  };

  /// Random system over states s0.. and events e0.. that satisfies both
  /// standing assumptions: unobservable transitions closing a loop are
  /// dropped and deadlocked states get an observable self-loop.  At least
  /// one event is observable.  Deterministic in the parameters.
  Des gen_random_des(const RandomDesParams& params);

  /// Random system whose projection is restricted partially ordered:
  /// forward transitions along a random DAG plus self-loops that are the
  /// only transition of their state under their event.  All events are
  /// observable.
  Des gen_random_rpodes(std::uint64_t seed, std::size_t states,
                        std::size_t events, double density = 0.4);

  /// Random total DFA over {0, 1} with states q0.. and initial q0.
  Dfa gen_random_dfa(Rng& rng, std::size_t states);

  /// Each ordered pair of states is included with \a probability; pairs
  /// (q, q) only when \a reflexive.
  Spec gen_random_spec(Rng& rng, const Des& des, double probability,
                       bool reflexive = false);

  /// Random formula with the given variable count and clause count; each
  /// clause has 1..3 literals over distinct variables.
  Cnf3 gen_random_cnf(Rng& rng, std::size_t variables, std::size_t clauses);
}
