#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <ddet/checks.hh>
#include <ddet/des.hh>
#include <ddet/verdict.hh>

namespace ddet
{
  /// Classification of the projected automaton P(G) against the restricted
  /// partial-order conditions: all cycles are self-loops, and a state never
  /// has both a self-loop and another successor under the same event.
  struct RpoReport
  {
    bool is_rpo = false;
    /// States of a cycle of P(G) that is not a self-loop.
    std::optional<std::vector<StateId>> po_violation;
    /// (state, event) exhibiting the forbidden pattern.  The event id
    /// refers to the alphabet of the original system.
    std::optional<std::pair<StateId, EventId>> selfloop_violation;
  };

  RpoReport classify_rpodes(const Des& des);

  struct RpoCheck
  {
    /// Strong periodic D-detectability.
    Verdict periodic;
    /// Strong D-detectability on the same observer, reported alongside.
    Verdict strong;
  };

  /// Strong periodic D-detectability of an rpoDES.  The observer of such a
  /// system has no cycles other than self-loops, so the property fails iff
  /// a reachable violating estimate carries a self-loop.  Throws
  /// input_error if \a des is not an rpoDES and std::logic_error if the
  /// observer turns out not to be partially ordered.
  RpoCheck check_rpodes_strong_periodic_d(const Des& des, const Spec& spec,
                                          const CheckOptions& options = {});
}
