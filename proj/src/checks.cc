#include <ddet/checks.hh>

#include <ddet/errors.hh>

#include "witness.hh"

namespace ddet
{
  std::string_view
  to_string(Property p)
  {
    switch (p)
      {
      case Property::strong:
        return "strong";
      case Property::weak:
        return "weak";
      case Property::strong_periodic:
        return "strong periodic";
      case Property::weak_periodic:
        return "weak periodic";
      }
    return "?";
  }

  void
  enforce_assumptions(const Des& des, const CheckOptions& options)
  {
    if (!options.require_assumptions)
      return;
    AssumptionReport r = validate_assumptions(des);
    if (!r.deadlock_free)
      throw input_error("system is not deadlock free (state '"
                        + des.state_name(r.deadlocked.front())
                        + "' has no outgoing transition)");
    if (!r.no_unobservable_loop)
      throw input_error("system has a loop of unobservable events through '"
                        + des.state_name(r.unobservable_cycle.front()) + "'");
  }

  namespace
  {
    NodeMask
    violating_mask(const Observer& obs, const Spec& spec)
    {
      NodeMask m(obs.size());
      for (Observer::StateNo s = 0; s < obs.size(); ++s)
        m[s] = is_violating(obs.estimate(s), spec);
      return m;
    }

    NodeMask
    negate(NodeMask m)
    {
      m.flip();
      return m;
    }

    Observer
    prepare(const Des& des, const Spec& spec, const CheckOptions& options)
    {
      validate_spec(des, spec);
      enforce_assumptions(des, options);
      return expanded_observer(des, options.max_observer_states);
    }
  }

  Verdict
  strong_d(const Observer& obs, const Spec& spec)
  {
    LabeledDigraph g = obs.graph();
    auto path = detail::cycle_reaching(g, obs.initial(),
                                       violating_mask(obs, spec));
    if (!path)
      return {true, obs.size(), std::nullopt};
    return {false, std::nullopt, std::move(path->lasso)};
  }

  Verdict
  strong_periodic_d(const Observer& obs, const Spec& spec)
  {
    LabeledDigraph g = obs.graph();
    auto path = detail::cycle_within(g, obs.initial(),
                                     violating_mask(obs, spec));
    if (!path)
      return {true, obs.size() + 1, std::nullopt};
    return {false, std::nullopt, std::move(path->lasso)};
  }

  Verdict
  weak_d(const Observer& obs, const Spec& spec)
  {
    LabeledDigraph g = obs.graph();
    auto path = detail::cycle_within(g, obs.initial(),
                                     negate(violating_mask(obs, spec)));
    if (!path)
      return {false, std::nullopt, std::nullopt};
    std::uint64_t n = path->lasso.stem.size();
    return {true, n, std::move(path->lasso)};
  }

  Verdict
  weak_periodic_d(const Observer& obs, const Spec& spec)
  {
    LabeledDigraph g = obs.graph();
    NodeMask bad = violating_mask(obs, spec);
    auto path = detail::cycle_through(g, obs.initial(), negate(bad));
    if (!path)
      return {false, std::nullopt, std::nullopt};
    std::uint64_t n = detail::longest_run(*path, bad) + 1;
    return {true, n, std::move(path->lasso)};
  }

  Verdict
  check(Property p, const Observer& obs, const Spec& spec)
  {
    switch (p)
      {
      case Property::strong:
        return strong_d(obs, spec);
      case Property::weak:
        return weak_d(obs, spec);
      case Property::strong_periodic:
        return strong_periodic_d(obs, spec);
      case Property::weak_periodic:
        return weak_periodic_d(obs, spec);
      }
    throw std::logic_error("unknown property");
  }

  Verdict
  check(Property p, const Des& des, const Spec& spec,
        const CheckOptions& options)
  {
    Observer obs = prepare(des, spec, options);
    return check(p, obs, spec);
  }

  Verdict
  strong_d(const Des& des, const Spec& spec, const CheckOptions& options)
  {
    return check(Property::strong, des, spec, options);
  }

  Verdict
  strong_periodic_d(const Des& des, const Spec& spec,
                    const CheckOptions& options)
  {
    return check(Property::strong_periodic, des, spec, options);
  }

  Verdict
  weak_d(const Des& des, const Spec& spec, const CheckOptions& options)
  {
    return check(Property::weak, des, spec, options);
  }

  Verdict
  weak_periodic_d(const Des& des, const Spec& spec,
                  const CheckOptions& options)
  {
    return check(Property::weak_periodic, des, spec, options);
  }
}
