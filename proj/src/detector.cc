#include <ddet/detector.hh>

#include "witness.hh"

namespace ddet
{
  Detector::Detector(const Des& des) : des_(&des)
  {
    intern(initial_estimate(des));
    const std::vector<EventId> events = des.alphabet().observable_events();
    for (NodeId n = 0; n < nodes_.size(); ++n)
      for (EventId e : events)
        {
          Estimate y = advance(des, nodes_[n], e);
          if (y.empty())
            continue;
          if (y.size() <= 2)
            {
              NodeId t = intern(std::move(y));
              graph_.add_arc(n, e, t);
              continue;
            }
          const auto& s = y.states();
          for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
              {
                NodeId t = intern(Estimate{s[i], s[j]});
                graph_.add_arc(n, e, t);
              }
        }
    graph_.normalize();
  }

  NodeId
  Detector::intern(Estimate est)
  {
    auto it = index_.find(est);
    if (it != index_.end())
      return it->second;
    auto id = static_cast<NodeId>(nodes_.size());
    index_.emplace(est, id);
    nodes_.push_back(std::move(est));
    graph_.add_node();
    return id;
  }

  std::optional<NodeId>
  Detector::find(const Estimate& est) const
  {
    auto it = index_.find(est);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  Verdict
  check_strong_d_via_detector(const Detector& det, const Spec& spec)
  {
    NodeMask bad(det.size());
    for (NodeId n = 0; n < det.size(); ++n)
      bad[n] = is_violating(det.node(n), spec);
    auto path = detail::cycle_reaching(det.graph(), det.initial(), bad);
    if (!path)
      return {true, det.size(), std::nullopt};
    return {false, std::nullopt, std::move(path->lasso)};
  }

  Verdict
  check_strong_d_via_detector(const Des& des, const Spec& spec,
                              const CheckOptions& options)
  {
    validate_spec(des, spec);
    enforce_assumptions(des, options);
    return check_strong_d_via_detector(Detector(des), spec);
  }

  Verdict
  check_strong_detectability(const Detector& det, bool periodic)
  {
    NodeMask ambiguous(det.size());
    for (NodeId n = 0; n < det.size(); ++n)
      ambiguous[n] = det.node(n).size() >= 2;
    auto path = periodic
                  ? detail::cycle_within(det.graph(), det.initial(), ambiguous)
                  : detail::cycle_reaching(det.graph(), det.initial(),
                                           ambiguous);
    if (!path)
      return {true, det.size() + (periodic ? 1 : 0), std::nullopt};
    return {false, std::nullopt, std::move(path->lasso)};
  }

  Verdict
  check_strong_detectability(const Des& des, bool periodic,
                             const CheckOptions& options)
  {
    enforce_assumptions(des, options);
    return check_strong_detectability(Detector(des), periodic);
  }
}
