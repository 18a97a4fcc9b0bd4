#include <ddet/dot.hh>

#include <map>
#include <sstream>

namespace ddet
{
  namespace
  {
    std::string
    quote(const std::string& s)
    {
      std::string out = "\"";
      for (char c : s)
        {
          if (c == '"' || c == '\\')
            out += '\\';
          out += c;
        }
      return out + "\"";
    }

    void
    node(std::ostream& out, std::size_t id, const std::string& label,
         bool doubled, bool initial)
    {
      out << "  n" << id << " [label=" << quote(label)
          << (doubled ? ", shape=doublecircle" : "") << "];\n";
      if (initial)
        out << "  init" << id << " [shape=point];\n  init" << id << " -> n"
            << id << ";\n";
    }

    // Parallel arcs are merged into one edge with a comma-separated label.
    void
    edges(std::ostream& out, const Des& des, const LabeledDigraph& g)
    {
      for (NodeId s = 0; s < g.size(); ++s)
        {
          std::map<NodeId, std::string> merged;
          for (const Arc& a : g.arcs(s))
            {
              std::string& l = merged[a.target];
              if (!l.empty())
                l += ",";
              l += des.alphabet().name(a.label);
            }
          for (const auto& [t, l] : merged)
            out << "  n" << s << " -> n" << t << " [label=" << quote(l)
                << "];\n";
        }
    }
  }

  std::string
  des_dot(const Des& des, const Spec& spec)
  {
    std::ostringstream out;
    out << "digraph des {\n  rankdir=LR;\n  node [shape=circle];\n";
    std::vector<bool> init(des.state_count(), false);
    for (StateId q : des.initial())
      init[q] = true;
    for (StateId q = 0; q < des.state_count(); ++q)
      node(out, q, des.state_name(q), is_violating(Estimate{q}, spec),
           init[q]);
    for (const Transition& t : des.transitions())
      out << "  n" << t.source << " -> n" << t.target << " [label="
          << quote(des.alphabet().name(t.event))
          << (des.alphabet().observable(t.event) ? "" : ", style=dashed")
          << "];\n";
    out << "}\n";
    return out.str();
  }

  std::string
  observer_dot(const Observer& obs, const Spec& spec)
  {
    std::ostringstream out;
    out << "digraph observer {\n  rankdir=LR;\n  node [shape=ellipse];\n";
    for (NodeId s = 0; s < obs.size(); ++s)
      node(out, s, format_estimate(obs.source(), obs.estimate(s)),
           is_violating(obs.estimate(s), spec), s == obs.initial());
    edges(out, obs.source(), obs.graph());
    out << "}\n";
    return out.str();
  }

  std::string
  detector_dot(const Detector& det, const Spec& spec)
  {
    std::ostringstream out;
    out << "digraph detector {\n  rankdir=LR;\n  node [shape=ellipse];\n";
    for (NodeId s = 0; s < det.size(); ++s)
      node(out, s, format_estimate(det.source(), det.node(s)),
           is_violating(det.node(s), spec), s == det.initial());
    edges(out, det.source(), det.graph());
    out << "}\n";
    return out.str();
  }
}
