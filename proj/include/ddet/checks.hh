#pragma once

#include <cstddef>
#include <string_view>

#include <ddet/des.hh>
#include <ddet/observer.hh>
#include <ddet/verdict.hh>

namespace ddet
{
  inline constexpr std::size_t default_unary_budget = std::size_t(1) << 22;

  enum class Property
  {
    strong,
    weak,
    strong_periodic,
    weak_periodic,
  };

  std::string_view to_string(Property p);

  struct CheckOptions
  {
    std::size_t max_observer_states = default_observer_budget;
    /// Subset-iteration limit of the single-observable-event fast path.
    std::size_t max_unary_steps = default_unary_budget;
    /// Reject systems that deadlock or loop on unobservable events.  Every
    /// characterization below assumes both conditions.
    bool require_assumptions = true;
  };

  /// Throws input_error naming the violated assumption unless
  /// \a options.require_assumptions is false.
  void enforce_assumptions(const Des& des, const CheckOptions& options);

  // Deciders over the fully expanded observer.  A state is violating when
  // its estimate contains both members of some spec pair, free otherwise.
  //
  //   strong           no violating state is reachable from a cycle
  //   strong periodic  no cycle made only of violating states
  //   weak             some cycle made only of free states
  //   weak periodic    some cycle through a free state
  //
  // Witness tie-breaking: shortest stem, then least in event order.

  Verdict strong_d(const Des& des, const Spec& spec,
                   const CheckOptions& options = {});
  Verdict strong_periodic_d(const Des& des, const Spec& spec,
                            const CheckOptions& options = {});
  Verdict weak_d(const Des& des, const Spec& spec,
                 const CheckOptions& options = {});
  Verdict weak_periodic_d(const Des& des, const Spec& spec,
                          const CheckOptions& options = {});

  Verdict check(Property p, const Des& des, const Spec& spec,
                const CheckOptions& options = {});

  /// Same deciders on an already expanded observer.
  Verdict strong_d(const Observer& obs, const Spec& spec);
  Verdict strong_periodic_d(const Observer& obs, const Spec& spec);
  Verdict weak_d(const Observer& obs, const Spec& spec);
  Verdict weak_periodic_d(const Observer& obs, const Spec& spec);
  Verdict check(Property p, const Observer& obs, const Spec& spec);
}
