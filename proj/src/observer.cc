#include <ddet/observer.hh>

#include <string>

#include <ddet/errors.hh>

namespace ddet
{
  Observer::Observer(const Des& des)
    : des_(&des), events_(des.alphabet().observable_events()),
      event_slot_(des.alphabet().size(), -1)
  {
    for (std::size_t i = 0; i < events_.size(); ++i)
      event_slot_[events_[i]] = static_cast<std::int64_t>(i);
    intern(initial_estimate(des));
  }

  std::size_t
  Observer::slot(EventId e) const
  {
    if (e >= event_slot_.size() || event_slot_[e] < 0)
      throw input_error("event is not an observable event of the system");
    return static_cast<std::size_t>(event_slot_[e]);
  }

  Observer::StateNo
  Observer::intern(Estimate est)
  {
    auto it = index_.find(est);
    if (it != index_.end())
      return it->second;
    auto id = static_cast<StateNo>(estimates_.size());
    index_.emplace(est, id);
    estimates_.push_back(std::move(est));
    succ_.resize(succ_.size() + events_.size(), unknown);
    if (estimates_.size() > budget_)
      throw budget_exceeded("observer state", budget_);
    return id;
  }

  std::optional<Observer::StateNo>
  Observer::find(const Estimate& est) const
  {
    auto it = index_.find(est);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  std::optional<Observer::StateNo>
  Observer::step(StateNo s, EventId event)
  {
    if (s >= estimates_.size())
      throw input_error("unknown observer state");
    std::size_t k = s * events_.size() + slot(event);
    if (succ_[k] == unknown)
      {
        Estimate next = advance(*des_, estimates_[s], event);
        succ_[k] = next.empty() ? absent : std::int64_t(intern(std::move(next)));
      }
    if (succ_[k] == absent)
      return std::nullopt;
    return static_cast<StateNo>(succ_[k]);
  }

  std::optional<Estimate>
  Observer::step(const Estimate& state, EventId event)
  {
    auto s = find(state);
    if (!s)
      throw input_error("estimate is not a discovered observer state");
    auto t = step(*s, event);
    if (!t)
      return std::nullopt;
    return estimates_[*t];
  }

  void
  Observer::expand_all(std::size_t state_budget)
  {
    if (state_budget == 0)
      throw input_error("observer state budget must be at least 1");
    budget_ = state_budget;
    if (size() > budget_)
      throw budget_exceeded("observer state", budget_);
    try
      {
        for (; pending_ < estimates_.size(); ++pending_)
          for (EventId e : events_)
            step(static_cast<StateNo>(pending_), e);
      }
    catch (...)
      {
        budget_ = SIZE_MAX;
        throw;
      }
    budget_ = SIZE_MAX;
  }

  LabeledDigraph
  Observer::graph() const
  {
    if (!fully_expanded())
      throw std::logic_error("observer graph requested before expansion");
    LabeledDigraph g(size());
    const std::size_t ne = events_.size();
    for (std::size_t s = 0; s < size(); ++s)
      for (std::size_t i = 0; i < ne; ++i)
        if (succ_[s * ne + i] >= 0)
          g.add_arc(static_cast<NodeId>(s), events_[i],
                    static_cast<NodeId>(succ_[s * ne + i]));
    g.normalize();
    return g;
  }

  std::optional<std::string>
  Observer::invariant_violation() const
  {
    const std::size_t ne = events_.size();
    for (std::size_t s = 0; s < size(); ++s)
      {
        if (estimates_[s].empty())
          return "observer state " + std::to_string(s) + " is empty";
        for (std::size_t i = 0; i < ne; ++i)
          {
            std::int64_t t = succ_[s * ne + i];
            if (t == unknown)
              continue;
            Estimate expect = advance(*des_, estimates_[s], events_[i]);
            if (t == absent ? !expect.empty()
                            : !(estimates_[std::size_t(t)] == expect))
              return "transition from state " + std::to_string(s)
                     + " disagrees with the subset construction";
          }
      }
    if (fully_expanded())
      {
        LabeledDigraph g = graph();
        BfsTree t = bfs(g, initial());
        if (t.order().size() != size())
          return std::string("observer has unreachable states");
      }
    return std::nullopt;
  }

  Observer
  expanded_observer(const Des& des, std::size_t state_budget)
  {
    Observer obs(des);
    obs.expand_all(state_budget);
    return obs;
  }
}
