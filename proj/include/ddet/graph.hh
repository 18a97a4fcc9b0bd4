#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ddet
{
  using EventId = std::uint32_t;
  using NodeId = std::uint32_t;

  struct Arc
  {
    EventId label;
    NodeId target;

    auto operator<=>(const Arc&) const = default;
  };

  /// Edge-labelled directed graph.  Observers, detectors and projected
  /// automata are all viewed through this type for cycle analysis.
  class LabeledDigraph
  {
  public:
    explicit LabeledDigraph(std::size_t nodes = 0) : out_(nodes) {}

    NodeId add_node();
    void add_arc(NodeId from, EventId label, NodeId to);

    std::size_t size() const noexcept { return out_.size(); }
    std::size_t arc_count() const noexcept;
    std::span<const Arc> arcs(NodeId n) const { return out_[n]; }

    /// Orders each adjacency list by (label, target) and drops duplicates.
    /// Witness extraction relies on this order for its tie-breaking.
    void normalize();

  private:
    std::vector<std::vector<Arc>> out_;
  };

  /// Node subset selector.  An empty mask selects every node.
  using NodeMask = std::vector<bool>;

  inline bool selected(const NodeMask& mask, NodeId n)
  {
    return mask.empty() || mask[n];
  }

  /// Strongly connected components of the subgraph induced by a mask.
  class SccView
  {
  public:
    static constexpr std::uint32_t none = UINT32_MAX;

    std::size_t component_count() const noexcept { return cyclic_.size(); }
    /// Component of \a n, or `none` when \a n lies outside the mask.
    std::uint32_t component(NodeId n) const { return component_[n]; }
    std::size_t component_size(std::uint32_t c) const { return size_[c]; }
    /// True when the component has at least two nodes or a self-loop.
    bool cyclic(std::uint32_t c) const { return cyclic_[c]; }
    bool on_cycle(NodeId n) const
    {
      return component_[n] != none && cyclic_[component_[n]];
    }

  private:
    friend SccView scc_view(const LabeledDigraph&, const NodeMask&);

    std::vector<std::uint32_t> component_;
    std::vector<std::size_t> size_;
    std::vector<bool> cyclic_;
  };

  /// Tarjan's algorithm (iterative).  Components are numbered in reverse
  /// topological order of the condensation: arcs only go from higher to
  /// lower-or-equal component numbers.
  SccView scc_view(const LabeledDigraph& g, const NodeMask& mask = {});

  /// Breadth-first tree.  Arcs are expanded in adjacency order, so on a
  /// normalized graph every node is reached by its lexicographically least
  /// shortest path.
  class BfsTree
  {
  public:
    bool reached(NodeId n) const { return parent_[n] != unreached; }
    std::size_t depth(NodeId n) const { return depth_[n]; }
    const std::vector<NodeId>& order() const noexcept { return order_; }
    std::vector<EventId> labels_to(NodeId n) const;
    std::vector<NodeId> nodes_to(NodeId n) const;

  private:
    friend BfsTree bfs(const LabeledDigraph&, NodeId, const NodeMask&);
    static constexpr NodeId unreached = UINT32_MAX;
    static constexpr NodeId root = UINT32_MAX - 1;

    NodeId source_ = 0;
    std::vector<NodeId> parent_;
    std::vector<EventId> via_;
    std::vector<std::size_t> depth_;
    std::vector<NodeId> order_;
  };

  BfsTree bfs(const LabeledDigraph& g, NodeId source,
              const NodeMask& mask = {});

  struct Cycle
  {
    /// Nodes visited, starting with the anchor; the closing return to the
    /// anchor is implicit.
    std::vector<NodeId> nodes;
    std::vector<EventId> labels;
  };

  /// Shortest cycle through \a anchor inside the masked subgraph.
  std::optional<Cycle> shortest_cycle(const LabeledDigraph& g, NodeId anchor,
                                      const NodeMask& mask = {});

  /// Nodes from which some node of \a targets is reachable (targets
  /// included).
  NodeMask can_reach(const LabeledDigraph& g, const NodeMask& targets);
}
