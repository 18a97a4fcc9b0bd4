#pragma once

// Lasso extraction shared by the observer, detector and rpoDES deciders.

#include <optional>
#include <vector>

#include <ddet/graph.hh>
#include <ddet/verdict.hh>

namespace ddet::detail
{
  struct LassoPath
  {
    Lasso lasso;
    /// Nodes at positions 0..|stem|; the last one is the cycle anchor.
    std::vector<NodeId> stem_nodes;
    /// Cycle nodes starting with the anchor.
    std::vector<NodeId> cycle_nodes;
  };

  /// A reachable cycle from which some \a bad node is reachable; the
  /// continuation leads from the anchor to the nearest bad node.
  std::optional<LassoPath> cycle_reaching(const LabeledDigraph& g,
                                          NodeId initial,
                                          const NodeMask& bad);

  /// A reachable cycle lying entirely inside \a mask.
  std::optional<LassoPath> cycle_within(const LabeledDigraph& g,
                                        NodeId initial, const NodeMask& mask);

  /// A reachable cycle visiting some node of \a mask.
  std::optional<LassoPath> cycle_through(const LabeledDigraph& g,
                                         NodeId initial, const NodeMask& mask);

  /// Length of the longest run of consecutive \a bad positions along the
  /// infinite path described by \a path.
  std::size_t longest_run(const LassoPath& path, const NodeMask& bad);
}
