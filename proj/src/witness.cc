#include "witness.hh"

#include <algorithm>

namespace ddet::detail
{
  namespace
  {
    LassoPath
    assemble(const BfsTree& from_initial, NodeId anchor, const Cycle& cycle)
    {
      LassoPath p;
      p.lasso.stem = from_initial.labels_to(anchor);
      p.lasso.cycle = cycle.labels;
      p.stem_nodes = from_initial.nodes_to(anchor);
      p.cycle_nodes = cycle.nodes;
      return p;
    }
  }

  std::optional<LassoPath>
  cycle_reaching(const LabeledDigraph& g, NodeId initial, const NodeMask& bad)
  {
    BfsTree tree = bfs(g, initial);
    SccView scc = scc_view(g);
    NodeMask reaches_bad = can_reach(g, bad);
    for (NodeId v : tree.order())
      {
        if (!scc.on_cycle(v) || !reaches_bad[v])
          continue;
        LassoPath p = assemble(tree, v, *shortest_cycle(g, v));
        BfsTree onward = bfs(g, v);
        for (NodeId w : onward.order())
          if (bad[w])
            {
              p.lasso.continuation = onward.labels_to(w);
              break;
            }
        return p;
      }
    return std::nullopt;
  }

  std::optional<LassoPath>
  cycle_within(const LabeledDigraph& g, NodeId initial, const NodeMask& mask)
  {
    BfsTree tree = bfs(g, initial);
    SccView scc = scc_view(g, mask);
    for (NodeId v : tree.order())
      if (scc.on_cycle(v))
        return assemble(tree, v, *shortest_cycle(g, v, mask));
    return std::nullopt;
  }

  std::optional<LassoPath>
  cycle_through(const LabeledDigraph& g, NodeId initial, const NodeMask& mask)
  {
    BfsTree tree = bfs(g, initial);
    SccView scc = scc_view(g);
    for (NodeId v : tree.order())
      if (mask[v] && scc.on_cycle(v))
        return assemble(tree, v, *shortest_cycle(g, v));
    return std::nullopt;
  }

  std::size_t
  longest_run(const LassoPath& path, const NodeMask& bad)
  {
    std::vector<NodeId> seq(path.stem_nodes.begin(),
                            path.stem_nodes.end() - 1);
    for (int round = 0; round < 2; ++round)
      seq.insert(seq.end(), path.cycle_nodes.begin(), path.cycle_nodes.end());
    std::size_t best = 0, run = 0;
    for (NodeId v : seq)
      {
        run = bad[v] ? run + 1 : 0;
        best = std::max(best, run);
      }
    return best;
  }
}
