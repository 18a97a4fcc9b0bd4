#include <ddet/desf.hh>

#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

#include <ddet/errors.hh>

namespace ddet
{
  namespace
  {
    struct Token
    {
      std::string_view text;
      std::size_t column;
    };

    struct Line
    {
      std::size_t number;
      std::size_t key_column;
      std::string_view key;
      std::vector<Token> args;
    };

    bool
    blank(char c)
    {
      return c == ' ' || c == '\t' || c == '\r';
    }

    std::vector<Token>
    tokenize(std::string_view line)
    {
      std::vector<Token> out;
      std::size_t i = 0;
      while (i < line.size())
        {
          while (i < line.size() && blank(line[i]))
            ++i;
          std::size_t start = i;
          while (i < line.size() && !blank(line[i]))
            ++i;
          if (i > start)
            out.push_back({line.substr(start, i - start), start + 1});
        }
      return out;
    }

    class Parser
    {
    public:
      DesfDocument run(std::string_view text);

    private:
      [[noreturn]] static void
      fail(std::size_t line, std::size_t column, const std::string& what)
      {
        throw parse_error(line, column, what);
      }

      StateId state(std::size_t line, const Token& t) const
      {
        auto it = states_.find(std::string(t.text));
        if (it == states_.end())
          fail(line, t.column, "unknown state '" + std::string(t.text) + "'");
        return it->second;
      }

      std::vector<StateId> state_list(const Line& l) const
      {
        std::vector<StateId> out;
        for (const Token& t : l.args)
          out.push_back(state(l.number, t));
        return out;
      }

      Alphabet alphabet_;
      std::vector<std::string> state_names_;
      std::unordered_map<std::string, StateId> states_;
    };

    DesfDocument
    Parser::run(std::string_view text)
    {
      std::vector<Line> lines;
      bool header = false;
      std::size_t number = 0;
      std::size_t pos = 0;
      while (pos <= text.size())
        {
          std::size_t end = text.find('\n', pos);
          if (end == std::string_view::npos)
            end = text.size();
          std::string_view raw = text.substr(pos, end - pos);
          pos = end + 1;
          ++number;
          if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
          std::vector<Token> tokens = tokenize(raw);
          if (tokens.empty())
            continue;

          if (!header)
            {
              if (tokens[0].text != "desf")
                fail(number, tokens[0].column, "expected header 'desf 1'");
              if (tokens.size() != 2 || tokens[1].text != "1")
                fail(number, tokens.size() > 1 ? tokens[1].column : 5,
                     "unsupported DESF version");
              header = true;
              continue;
            }

          const Token& head = tokens[0];
          std::size_t colon = head.text.find(':');
          if (colon == std::string_view::npos)
            fail(number, head.column, "expected 'key:'");
          Line l{number, head.column, head.text.substr(0, colon), {}};
          std::string_view rest = head.text.substr(colon + 1);
          if (!rest.empty())
            l.args.push_back({rest, head.column + colon + 1});
          l.args.insert(l.args.end(), tokens.begin() + 1, tokens.end());
          lines.push_back(std::move(l));
        }
      if (!header)
        fail(number, 1, "missing header 'desf 1'");

      const Line* events = nullptr;
      const Line* states = nullptr;
      const Line* initial = nullptr;
      const Line* marked = nullptr;
      std::vector<const Line*> trans, spec;
      for (const Line& l : lines)
        {
          const Line** single = nullptr;
          if (l.key == "events")
            single = &events;
          else if (l.key == "states")
            single = &states;
          else if (l.key == "initial")
            single = &initial;
          else if (l.key == "marked")
            single = &marked;
          else if (l.key == "trans")
            trans.push_back(&l);
          else if (l.key == "spec")
            spec.push_back(&l);
          else
            fail(l.number, l.key_column,
                 "unknown key '" + std::string(l.key) + "'");
          if (single)
            {
              if (*single)
                fail(l.number, l.key_column,
                     "duplicate '" + std::string(l.key) + "' line");
              *single = &l;
            }
        }
      if (!events)
        fail(number, 1, "missing 'events:' line");
      if (!states)
        fail(number, 1, "missing 'states:' line");
      if (!initial)
        fail(number, 1, "missing 'initial:' line");

      for (const Token& t : events->args)
        {
          std::size_t colon = t.text.rfind(':');
          if (colon == std::string_view::npos || colon == 0)
            fail(events->number, t.column, "expected 'name:o' or 'name:uo'");
          std::string_view kind = t.text.substr(colon + 1);
          if (kind != "o" && kind != "uo")
            fail(events->number, t.column + colon + 1,
                 "event kind must be 'o' or 'uo'");
          std::string name(t.text.substr(0, colon));
          if (alphabet_.find(name))
            fail(events->number, t.column, "duplicate event '" + name + "'");
          alphabet_.add(std::move(name), kind == "o");
        }
      if (alphabet_.size() == 0)
        fail(events->number, events->key_column, "no events declared");

      for (const Token& t : states->args)
        {
          std::string name(t.text);
          if (!states_.emplace(name, StateId(state_names_.size())).second)
            fail(states->number, t.column, "duplicate state '" + name + "'");
          state_names_.push_back(std::move(name));
        }
      if (state_names_.empty())
        fail(states->number, states->key_column, "no states declared");

      std::vector<StateId> init = state_list(*initial);
      if (init.empty())
        fail(initial->number, initial->key_column, "no initial state");
      std::optional<std::vector<StateId>> mark;
      if (marked)
        mark = state_list(*marked);

      std::vector<Transition> ts;
      for (const Line* l : trans)
        {
          if (l->args.size() != 3)
            fail(l->number, l->key_column,
                 "expected 'trans: source event target'");
          StateId src = state(l->number, l->args[0]);
          auto ev = alphabet_.find(l->args[1].text);
          if (!ev)
            fail(l->number, l->args[1].column,
                 "unknown event '" + std::string(l->args[1].text) + "'");
          StateId dst = state(l->number, l->args[2]);
          ts.push_back({src, *ev, dst});
        }

      std::vector<Spec::Pair> pairs;
      for (const Line* l : spec)
        {
          if (l->args.size() != 2)
            fail(l->number, l->key_column, "expected 'spec: p q'");
          pairs.emplace_back(state(l->number, l->args[0]),
                             state(l->number, l->args[1]));
        }

      return {Des(std::move(alphabet_), std::move(state_names_), std::move(ts),
                  std::move(init), std::move(mark)),
              Spec(std::move(pairs))};
    }
  }

  DesfDocument
  parse_desf(std::string_view text)
  {
    return Parser().run(text);
  }

  DesfDocument
  read_desf_file(const std::string& path)
  {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw input_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_desf(buf.str());
  }

  std::string
  serialize_desf(const Des& des, const Spec& spec, std::string_view comment)
  {
    std::ostringstream out;
    std::size_t pos = 0;
    while (pos < comment.size())
      {
        std::size_t end = comment.find('\n', pos);
        if (end == std::string_view::npos)
          end = comment.size();
        out << "# " << comment.substr(pos, end - pos) << '\n';
        pos = end + 1;
      }

    const Alphabet& sigma = des.alphabet();
    out << "desf 1\nevents:";
    for (EventId e = 0; e < sigma.size(); ++e)
      out << ' ' << sigma.name(e) << (sigma.observable(e) ? ":o" : ":uo");
    out << "\nstates:";
    for (const auto& s : des.state_names())
      out << ' ' << s;
    out << "\ninitial:";
    for (StateId q : des.initial())
      out << ' ' << des.state_name(q);
    out << '\n';
    if (!des.all_marked())
      {
        out << "marked:";
        for (StateId q : des.marked())
          out << ' ' << des.state_name(q);
        out << '\n';
      }
    for (const Transition& t : des.transitions())
      out << "trans: " << des.state_name(t.source) << ' '
          << sigma.name(t.event) << ' ' << des.state_name(t.target) << '\n';
    for (auto [p, q] : spec.pairs())
      out << "spec: " << des.state_name(p) << ' ' << des.state_name(q) << '\n';
    return out.str();
  }
}
