#include <ddet/rpodes.hh>

#include <algorithm>

#include <ddet/errors.hh>
#include <ddet/observer.hh>

namespace ddet
{
  RpoReport
  classify_rpodes(const Des& des)
  {
    Des flat = project(des);
    LabeledDigraph g = transition_graph(flat, [](EventId) { return true; });

    RpoReport r;
    SccView scc = scc_view(g);
    for (StateId q = 0; q < flat.state_count(); ++q)
      if (scc.component_size(scc.component(q)) > 1)
        {
          r.po_violation = shortest_cycle(g, q)->nodes;
          break;
        }

    for (const Transition& t : flat.transitions())
      if (t.source == t.target && flat.successors(t.source, t.event).size() > 1)
        {
          EventId original = *des.alphabet().find(
            flat.alphabet().name(t.event));
          r.selfloop_violation = std::make_pair(t.source, original);
          break;
        }

    r.is_rpo = !r.po_violation && !r.selfloop_violation;
    return r;
  }

  RpoCheck
  check_rpodes_strong_periodic_d(const Des& des, const Spec& spec,
                                 const CheckOptions& options)
  {
    validate_spec(des, spec);
    enforce_assumptions(des, options);
    if (!classify_rpodes(des).is_rpo)
      throw input_error("system is not an rpoDES; use the general checker");

    Observer obs = expanded_observer(des, options.max_observer_states);
    LabeledDigraph g = obs.graph();
    SccView scc = scc_view(g);
    for (NodeId s = 0; s < g.size(); ++s)
      if (scc.component_size(scc.component(s)) > 1)
        throw std::logic_error(
          "observer of an rpoDES has a cycle that is not a self-loop");

    RpoCheck out;
    out.strong = strong_d(obs, spec);

    BfsTree tree = bfs(g, obs.initial());
    for (NodeId s : tree.order())
      {
        if (!is_violating(obs.estimate(s), spec))
          continue;
        auto arcs = g.arcs(s);
        auto loop = std::find_if(arcs.begin(), arcs.end(),
                                 [s](const Arc& a) { return a.target == s; });
        if (loop == arcs.end())
          continue;
        Lasso w;
        w.stem = tree.labels_to(s);
        w.cycle = {loop->label};
        out.periodic = {false, std::nullopt, std::move(w)};
        return out;
      }
    out.periodic = {true, obs.size() + 1, std::nullopt};
    return out;
  }
}
