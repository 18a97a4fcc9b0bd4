#include <ddet/graph.hh>

#include <algorithm>
#include <deque>

namespace ddet
{
  NodeId
  LabeledDigraph::add_node()
  {
    out_.emplace_back();
    return static_cast<NodeId>(out_.size() - 1);
  }

  void
  LabeledDigraph::add_arc(NodeId from, EventId label, NodeId to)
  {
    out_[from].push_back({label, to});
  }

  std::size_t
  LabeledDigraph::arc_count() const noexcept
  {
    std::size_t n = 0;
    for (const auto& a : out_)
      n += a.size();
    return n;
  }

  void
  LabeledDigraph::normalize()
  {
    for (auto& a : out_)
      {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
      }
  }

  SccView
  scc_view(const LabeledDigraph& g, const NodeMask& mask)
  {
    const std::size_t n = g.size();
    constexpr std::uint32_t unvisited = UINT32_MAX;

    SccView view;
    view.component_.assign(n, SccView::none);

    std::vector<std::uint32_t> index(n, unvisited);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<NodeId> stack;
    std::uint32_t next_index = 0;

    struct Frame
    {
      NodeId node;
      std::size_t arc;
    };
    std::vector<Frame> call;

    for (NodeId root = 0; root < n; ++root)
      {
        if (!selected(mask, root) || index[root] != unvisited)
          continue;
        call.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty())
          {
            Frame& f = call.back();
            auto arcs = g.arcs(f.node);
            if (f.arc < arcs.size())
              {
                NodeId w = arcs[f.arc++].target;
                if (!selected(mask, w))
                  continue;
                if (index[w] == unvisited)
                  {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                  }
                else if (on_stack[w])
                  low[f.node] = std::min(low[f.node], index[w]);
                continue;
              }

            NodeId v = f.node;
            call.pop_back();
            if (!call.empty())
              {
                NodeId parent = call.back().node;
                low[parent] = std::min(low[parent], low[v]);
              }
            if (low[v] != index[v])
              continue;

            auto c = static_cast<std::uint32_t>(view.cyclic_.size());
            std::size_t size = 0;
            NodeId w;
            do
              {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                view.component_[w] = c;
                ++size;
              }
            while (w != v);

            bool cyclic = size > 1;
            if (!cyclic)
              for (const Arc& a : g.arcs(v))
                if (a.target == v)
                  {
                    cyclic = true;
                    break;
                  }
            view.size_.push_back(size);
            view.cyclic_.push_back(cyclic);
          }
      }
    return view;
  }

  std::vector<EventId>
  BfsTree::labels_to(NodeId n) const
  {
    std::vector<EventId> labels;
    for (NodeId v = n; parent_[v] != root; v = parent_[v])
      labels.push_back(via_[v]);
    std::reverse(labels.begin(), labels.end());
    return labels;
  }

  std::vector<NodeId>
  BfsTree::nodes_to(NodeId n) const
  {
    std::vector<NodeId> nodes;
    for (NodeId v = n; v != root; v = parent_[v])
      nodes.push_back(v);
    std::reverse(nodes.begin(), nodes.end());
    return nodes;
  }

  BfsTree
  bfs(const LabeledDigraph& g, NodeId source, const NodeMask& mask)
  {
    BfsTree t;
    t.source_ = source;
    t.parent_.assign(g.size(), BfsTree::unreached);
    t.via_.assign(g.size(), 0);
    t.depth_.assign(g.size(), 0);
    if (!selected(mask, source))
      return t;

    t.parent_[source] = BfsTree::root;
    t.order_.push_back(source);
    for (std::size_t head = 0; head < t.order_.size(); ++head)
      {
        NodeId v = t.order_[head];
        for (const Arc& a : g.arcs(v))
          {
            if (!selected(mask, a.target)
                || t.parent_[a.target] != BfsTree::unreached)
              continue;
            t.parent_[a.target] = v;
            t.via_[a.target] = a.label;
            t.depth_[a.target] = t.depth_[v] + 1;
            t.order_.push_back(a.target);
          }
      }
    return t;
  }

  std::optional<Cycle>
  shortest_cycle(const LabeledDigraph& g, NodeId anchor, const NodeMask& mask)
  {
    if (!selected(mask, anchor))
      return std::nullopt;
    BfsTree t = bfs(g, anchor, mask);
    for (NodeId v : t.order())
      for (const Arc& a : g.arcs(v))
        if (a.target == anchor)
          {
            Cycle c;
            c.nodes = t.nodes_to(v);
            c.labels = t.labels_to(v);
            c.labels.push_back(a.label);
            return c;
          }
    return std::nullopt;
  }

  NodeMask
  can_reach(const LabeledDigraph& g, const NodeMask& targets)
  {
    const std::size_t n = g.size();
    std::vector<std::vector<NodeId>> rev(n);
    for (NodeId v = 0; v < n; ++v)
      for (const Arc& a : g.arcs(v))
        rev[a.target].push_back(v);

    NodeMask result(n, false);
    std::deque<NodeId> queue;
    for (NodeId v = 0; v < n; ++v)
      if (targets[v])
        {
          result[v] = true;
          queue.push_back(v);
        }
    while (!queue.empty())
      {
        NodeId v = queue.front();
        queue.pop_front();
        for (NodeId u : rev[v])
          if (!result[u])
            {
              result[u] = true;
              queue.push_back(u);
            }
      }
    return result;
  }
}
