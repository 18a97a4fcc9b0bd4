#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include <ddet/checks.hh>
#include <ddet/des.hh>
#include <ddet/graph.hh>
#include <ddet/verdict.hh>

namespace ddet
{
  /// Polynomial-size substitute for the observer.  The initial node is the
  /// initial estimate; every other node is a set of one or two states.
  /// From a node S and observable event e with Y = advance(S, e) nonempty,
  /// there is one arc to Y when |Y| <= 2 and otherwise one arc to every
  /// two-element subset of Y.
  ///
  /// Nodes are identified by their state set, so an initial estimate of
  /// size at most two is shared with the matching non-initial node.
  class Detector
  {
  public:
    explicit Detector(const Des& des);

    const Des& source() const noexcept { return *des_; }
    NodeId initial() const noexcept { return 0; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const Estimate& node(NodeId n) const { return nodes_[n]; }
    std::optional<NodeId> find(const Estimate& est) const;
    const LabeledDigraph& graph() const noexcept { return graph_; }

  private:
    NodeId intern(Estimate est);

    const Des* des_;
    std::vector<Estimate> nodes_;
    std::unordered_map<Estimate, NodeId, EstimateHash> index_;
    LabeledDigraph graph_;
  };

  /// Fails iff some node y with a violating state set is reachable from a
  /// reachable node x lying on a cycle.  The failure witness runs to x,
  /// loops on x and continues to y.  On success bound_n is the node count.
  Verdict check_strong_d_via_detector(const Detector& det, const Spec& spec);
  Verdict check_strong_d_via_detector(const Des& des, const Spec& spec,
                                      const CheckOptions& options = {});

  /// Strong detectability: fails iff a node of size >= 2 is reachable from
  /// a cycle.  Periodic mode: fails iff some reachable cycle consists only
  /// of nodes of size >= 2.
  Verdict check_strong_detectability(const Detector& det, bool periodic);
  Verdict check_strong_detectability(const Des& des, bool periodic,
                                     const CheckOptions& options = {});
}
