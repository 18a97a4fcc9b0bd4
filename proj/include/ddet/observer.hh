#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include <ddet/des.hh>
#include <ddet/graph.hh>

namespace ddet
{
  inline constexpr std::size_t default_observer_budget = std::size_t(1) << 20;

  /// Subset-construction observer over the observable events of a Des,
  /// materialized on demand.
  ///
  /// Observer states are numbered in discovery order; state 0 is the
  /// initial estimate.  The referenced Des must outlive the observer.
  class Observer
  {
  public:
    using StateNo = std::uint32_t;

    explicit Observer(const Des& des);

    const Des& source() const noexcept { return *des_; }
    StateNo initial() const noexcept { return 0; }
    std::size_t size() const noexcept { return estimates_.size(); }
    const Estimate& estimate(StateNo s) const { return estimates_[s]; }
    std::optional<StateNo> find(const Estimate& est) const;

    /// Observable events, in alphabet order.  Transition slots and graph
    /// labels use the original EventIds.
    const std::vector<EventId>& events() const noexcept { return events_; }

    /// Successor of \a s under observable \a event, computed and memoized
    /// on first use.  Absent when the estimate would be empty.
    std::optional<StateNo> step(StateNo s, EventId event);
    /// Same, addressed by estimate.  Throws input_error if \a state has not
    /// been discovered or \a event is not observable.
    std::optional<Estimate> step(const Estimate& state, EventId event);

    /// Breadth-first expansion of every pending state.  Throws
    /// budget_exceeded as soon as more than \a state_budget states exist.
    void expand_all(std::size_t state_budget = default_observer_budget);
    bool fully_expanded() const noexcept { return pending_ == size(); }

    /// Transition graph of the expanded observer (requires
    /// fully_expanded()).
    LabeledDigraph graph() const;

    /// Checks determinism and reachability of the stored graph; returns an
    /// explanation of the first problem found, or nothing.
    std::optional<std::string> invariant_violation() const;

  private:
    static constexpr std::int64_t unknown = -2;
    static constexpr std::int64_t absent = -1;

    std::size_t slot(EventId e) const;
    StateNo intern(Estimate est);

    const Des* des_;
    std::vector<EventId> events_;
    std::vector<std::int64_t> event_slot_;
    std::vector<Estimate> estimates_;
    std::unordered_map<Estimate, StateNo, EstimateHash> index_;
    /// succ_[s * events_.size() + slot]
    std::vector<std::int64_t> succ_;
    std::size_t pending_ = 0;
    std::size_t budget_ = SIZE_MAX;
  };

  /// Convenience: build and fully expand.
  Observer expanded_observer(const Des& des,
                             std::size_t state_budget = default_observer_budget);
}
