#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <ddet/graph.hh>

namespace ddet
{
  using StateId = std::uint32_t;
  /// A sequence of observable events.
  using Observation = std::vector<EventId>;

  /// Event set partitioned into observable and unobservable events.
  class Alphabet
  {
  public:
    /// Throws input_error on a duplicate or empty name.
    EventId add(std::string name, bool observable);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(EventId e) const { return names_[e]; }
    bool observable(EventId e) const { return observable_[e]; }
    std::optional<EventId> find(std::string_view name) const;

    std::vector<EventId> observable_events() const;
    std::size_t observable_count() const;

    bool operator==(const Alphabet& o) const
    {
      return names_ == o.names_ && observable_ == o.observable_;
    }

  private:
    std::vector<std::string> names_;
    std::vector<bool> observable_;
    std::unordered_map<std::string, EventId> index_;
  };

  struct Transition
  {
    StateId source;
    EventId event;
    StateId target;

    auto operator<=>(const Transition&) const = default;
  };

  /// A discrete event system: a nondeterministic automaton with a set of
  /// initial states over a partitioned alphabet.  Immutable once built.
  ///
  /// States and events are opaque names; StateId/EventId are dense indices
  /// in declaration order.  Transitions are kept sorted by
  /// (source, event, target) without duplicates.
  class Des
  {
  public:
    /// Validates every reference and deduplicates transitions.  When
    /// \a marked is absent every state is marked.
    Des(Alphabet alphabet, std::vector<std::string> states,
        std::vector<Transition> transitions, std::vector<StateId> initial,
        std::optional<std::vector<StateId>> marked = std::nullopt);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t state_count() const noexcept { return states_.size(); }
    const std::string& state_name(StateId q) const { return states_[q]; }
    const std::vector<std::string>& state_names() const noexcept
    {
      return states_;
    }
    std::optional<StateId> find_state(std::string_view name) const;

    std::span<const Transition> transitions() const noexcept
    {
      return transitions_;
    }
    /// Targets of \a q under \a e, ascending.
    std::span<const StateId> successors(StateId q, EventId e) const;
    bool has_outgoing(StateId q) const;

    const std::vector<StateId>& initial() const noexcept { return initial_; }
    const std::vector<StateId>& marked() const noexcept { return marked_; }
    bool is_marked(StateId q) const { return marked_flag_[q]; }
    bool all_marked() const noexcept
    {
      return marked_.size() == states_.size();
    }

    bool operator==(const Des& o) const
    {
      return alphabet_ == o.alphabet_ && states_ == o.states_
             && transitions_ == o.transitions_ && initial_ == o.initial_
             && marked_ == o.marked_;
    }

  private:
    Alphabet alphabet_;
    std::vector<std::string> states_;
    std::unordered_map<std::string, StateId> state_index_;
    std::vector<Transition> transitions_;
    std::vector<StateId> targets_;
    std::vector<std::size_t> offsets_;
    std::vector<StateId> initial_;
    std::vector<StateId> marked_;
    std::vector<bool> marked_flag_;
  };

  /// Name-based incremental construction of a Des.
  class DesBuilder
  {
  public:
    DesBuilder& event(std::string name, bool observable = true);
    /// Declares a state; declaring an existing name is a no-op.
    DesBuilder& state(std::string name);
    /// Endpoints are declared on first use; the event must already exist.
    DesBuilder& transition(std::string_view source, std::string_view event,
                           std::string_view target);
    DesBuilder& initial(std::string_view name);
    DesBuilder& marked(std::string_view name);

    Des build() const;

  private:
    StateId state_id(std::string_view name);

    Alphabet alphabet_;
    std::vector<std::string> states_;
    std::unordered_map<std::string, StateId> index_;
    std::vector<Transition> transitions_;
    std::vector<StateId> initial_;
    std::optional<std::vector<StateId>> marked_;
  };

  /// A set of states, stored as a sorted duplicate-free list.
  class Estimate
  {
  public:
    Estimate() = default;
    /// Sorts and deduplicates.
    explicit Estimate(std::vector<StateId> states);
    Estimate(std::initializer_list<StateId> states)
      : Estimate(std::vector<StateId>(states))
    {
    }

    std::size_t size() const noexcept { return states_.size(); }
    bool empty() const noexcept { return states_.empty(); }
    bool contains(StateId q) const;
    auto begin() const noexcept { return states_.begin(); }
    auto end() const noexcept { return states_.end(); }
    const std::vector<StateId>& states() const noexcept { return states_; }

    auto operator<=>(const Estimate&) const = default;

  private:
    std::vector<StateId> states_;
  };

  struct EstimateHash
  {
    std::size_t operator()(const Estimate& e) const noexcept;
  };

  /// The specification: ordered state pairs that must be told apart.
  /// Membership is symmetric in effect, see is_violating().
  class Spec
  {
  public:
    using Pair = std::pair<StateId, StateId>;

    Spec() = default;
    explicit Spec(std::vector<Pair> pairs);

    const std::vector<Pair>& pairs() const noexcept { return pairs_; }
    bool contains(StateId p, StateId q) const;
    bool empty() const noexcept { return pairs_.empty(); }
    std::size_t size() const noexcept { return pairs_.size(); }

    bool operator==(const Spec&) const = default;

  private:
    std::vector<Pair> pairs_;
  };

  /// Builds a spec from state names; throws input_error on unknown names.
  Spec make_spec(const Des& des,
                 std::initializer_list<std::pair<std::string_view,
                                                 std::string_view>> pairs);
  /// Throws input_error if a pair mentions a state outside \a des.
  void validate_spec(const Des& des, const Spec& spec);

  struct AssumptionReport
  {
    bool deadlock_free = true;
    std::vector<StateId> deadlocked;
    bool no_unobservable_loop = true;
    /// States of one cycle of unobservable transitions, in cycle order.
    std::vector<StateId> unobservable_cycle;

    bool ok() const noexcept { return deadlock_free && no_unobservable_loop; }
  };

  AssumptionReport validate_assumptions(const Des& des);

  /// Closure of \a from under unobservable transitions.
  Estimate unobservable_reach(const Des& des, const Estimate& from);

  /// States possible after observing \a event from somewhere in \a from:
  /// the unobservable closure of the \a event-successors of \a from.
  Estimate advance(const Des& des, const Estimate& from, EventId event);

  /// The initial estimate, unobservable_reach(I).
  Estimate initial_estimate(const Des& des);

  /// States possible after \a observation.  Empty when the observation is
  /// not generated.
  Estimate estimate(const Des& des, std::span<const EventId> observation);

  /// The projected automaton over observable events only.  Event ids are
  /// renumbered (names are kept); state ids are unchanged.  The initial set
  /// is the unobservable closure of the original one, so estimates agree
  /// with the source on every observation, including the empty one.
  Des project(const Des& des);

  /// True iff some spec pair has both components in \a est.
  bool is_violating(const Estimate& est, const Spec& spec);

  /// All ordered pairs of distinct states.
  Spec detectability_spec(const Des& des);

  bool is_unary(const Des& des);

  /// Parses whitespace separated observable event names.
  Observation parse_observation(const Des& des, std::string_view text);
  std::string format_observation(const Des& des,
                                 std::span<const EventId> observation);
  std::string format_estimate(const Des& des, const Estimate& est);

  /// The transition structure as a labelled graph on state ids, restricted
  /// to events for which \a keep returns true.
  LabeledDigraph transition_graph(const Des& des,
                                  const std::function<bool(EventId)>& keep);
}
