#include <ddet/generators.hh>

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include <ddet/errors.hh>

namespace ddet
{
  namespace
  {
    std::string
    vertex_name(std::uint32_t v)
    {
      return "v" + std::to_string(v);
    }
  }

  // DAG reduction ------------------------------------------------------------

  void
  validate_dag(const Dag& g)
  {
    if (g.vertices == 0)
      throw input_error("DAG has no vertices");
    if (g.source >= g.vertices || g.target >= g.vertices)
      throw input_error("DAG source or target out of range");
    if (g.source == g.target)
      throw input_error("DAG source and target must differ");

    std::vector<std::vector<std::uint32_t>> out(g.vertices);
    std::vector<std::size_t> indegree(g.vertices, 0);
    for (auto [p, r] : g.edges)
      {
        if (p >= g.vertices || r >= g.vertices)
          throw input_error("DAG edge endpoint out of range");
        out[p].push_back(r);
        ++indegree[r];
      }
    std::vector<std::uint32_t> ready;
    for (std::uint32_t v = 0; v < g.vertices; ++v)
      if (indegree[v] == 0)
        ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty())
      {
        std::uint32_t v = ready.back();
        ready.pop_back();
        ++seen;
        for (std::uint32_t r : out[v])
          if (--indegree[r] == 0)
            ready.push_back(r);
      }
    if (seen != g.vertices)
      throw input_error("DAG edge relation has a cycle");
  }

  GeneratedInstance
  gen_from_dag(const Dag& g)
  {
    validate_dag(g);
    DesBuilder b;
    b.event("a");
    for (std::uint32_t v = 0; v < g.vertices; ++v)
      b.state(vertex_name(v));
    b.state("x");

    for (auto [p, r] : g.edges)
      if (p != g.target)
        b.transition(vertex_name(p), "a", vertex_name(r));
    for (std::uint32_t v = 0; v < g.vertices; ++v)
      if (v != g.target)
        b.transition(vertex_name(v), "a", "x");
    b.transition("x", "a", "x");
    b.transition(vertex_name(g.target), "a", vertex_name(g.target));
    b.initial(vertex_name(g.source));

    Des des = b.build();
    Spec spec = make_spec(des, {{vertex_name(g.target), "x"}});
    std::string prov = "dag reduction: " + std::to_string(g.vertices)
                       + " vertices, " + std::to_string(g.edges.size())
                       + " edges, s=" + vertex_name(g.source)
                       + ", t=" + vertex_name(g.target);
    return {std::move(des), std::move(spec), std::move(prov)};
  }

  bool
  dag_reachable(const Dag& g)
  {
    validate_dag(g);
    std::vector<std::vector<std::uint32_t>> out(g.vertices);
    for (auto [p, r] : g.edges)
      out[p].push_back(r);
    std::vector<bool> seen(g.vertices, false);
    std::vector<std::uint32_t> stack{g.source};
    seen[g.source] = true;
    while (!stack.empty())
      {
        std::uint32_t v = stack.back();
        stack.pop_back();
        if (v == g.target)
          return true;
        for (std::uint32_t r : out[v])
          if (!seen[r])
            {
              seen[r] = true;
              stack.push_back(r);
            }
      }
    return false;
  }

  // DFAs ---------------------------------------------------------------------

  Dfa
  dfa_from_des(const Des& des)
  {
    const Alphabet& sigma = des.alphabet();
    auto zero = sigma.find("0");
    auto one = sigma.find("1");
    if (!zero || !one || sigma.size() != 2)
      throw input_error("a DFA must have exactly the events 0 and 1");
    if (!sigma.observable(*zero) || !sigma.observable(*one))
      throw input_error("DFA events must be observable");
    if (des.initial().size() != 1)
      throw input_error("a DFA must have exactly one initial state");

    Dfa dfa;
    dfa.states = des.state_names();
    dfa.initial = des.initial().front();
    dfa.next.resize(des.state_count());
    dfa.accepting.resize(des.state_count());
    for (StateId q = 0; q < des.state_count(); ++q)
      {
        dfa.accepting[q] = des.is_marked(q);
        for (int sym = 0; sym < 2; ++sym)
          {
            auto succ = des.successors(q, sym == 0 ? *zero : *one);
            if (succ.size() != 1)
              throw input_error("DFA is not total and deterministic at state "
                                + des.state_name(q) + " on "
                                + std::to_string(sym));
            dfa.next[q][sym] = succ.front();
          }
      }
    return dfa;
  }

  namespace
  {
    void
    validate_dfa(const Dfa& dfa)
    {
      std::size_t n = dfa.states.size();
      if (n == 0)
        throw input_error("DFA has no states");
      if (dfa.next.size() != n || dfa.accepting.size() != n)
        throw input_error("DFA tables do not match its state count");
      if (dfa.initial >= n)
        throw input_error("DFA initial state out of range");
      for (const auto& row : dfa.next)
        if (row[0] >= n || row[1] >= n)
          throw input_error("DFA transition target out of range");
    }
  }

  Des
  dfa_to_des(const Dfa& dfa)
  {
    validate_dfa(dfa);
    DesBuilder b;
    b.event("0").event("1");
    for (const auto& name : dfa.states)
      b.state(name);
    for (std::size_t q = 0; q < dfa.states.size(); ++q)
      for (int sym = 0; sym < 2; ++sym)
        b.transition(dfa.states[q], sym == 0 ? "0" : "1",
                     dfa.states[dfa.next[q][sym]]);
    b.initial(dfa.states[dfa.initial]);
    bool any = false;
    for (std::size_t q = 0; q < dfa.states.size(); ++q)
      if (dfa.accepting[q])
        {
          b.marked(dfa.states[q]);
          any = true;
        }
    if (!any)
      b.marked(dfa.states[dfa.initial]);
    Des des = b.build();
    if (!any)
      {
        // Builder has no way to express an empty marked set directly.
        return Des(des.alphabet(), des.state_names(),
                   {des.transitions().begin(), des.transitions().end()},
                   des.initial(), std::vector<StateId>{});
      }
    return des;
  }

  GeneratedInstance
  gen_from_dfa_intersection(std::span<const Dfa> dfas, bool encode_binary)
  {
    if (dfas.empty())
      throw input_error("intersection reduction needs at least one DFA");
    for (const Dfa& d : dfas)
      validate_dfa(d);

    const std::size_t n = dfas.size();
    DesBuilder b;
    std::vector<std::string> events;
    if (encode_binary)
      events = {"a", "b"};
    else
      events = {"0", "1", "a"};
    for (const auto& e : events)
      b.event(e);

    auto local = [](std::size_t i, const std::string& q) {
      return "d" + std::to_string(i + 1) + "." + q;
    };
    auto plus = [](std::size_t i) { return "q" + std::to_string(i + 1) + "+"; };

    b.state("q-");
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& q : dfas[i].states)
        b.state(local(i, q));
    for (std::size_t i = 0; i < n; ++i)
      b.state(plus(i));

    for (std::size_t i = 0; i < n; ++i)
      {
        const Dfa& d = dfas[i];
        for (std::size_t q = 0; q < d.states.size(); ++q)
          for (int sym = 0; sym < 2; ++sym)
            {
              std::string src = local(i, d.states[q]);
              std::string dst = local(i, d.states[d.next[q][sym]]);
              std::string symbol = sym == 0 ? "0" : "1";
              if (!encode_binary)
                {
                  b.transition(src, symbol, dst);
                  continue;
                }
              std::string mid = src + "/" + symbol + "/"
                                + d.states[d.next[q][sym]];
              b.transition(src, "b", mid);
              b.transition(mid, sym == 0 ? "a" : "b", dst);
            }
        for (std::size_t q = 0; q < d.states.size(); ++q)
          b.transition(local(i, d.states[q]), "a",
                       d.accepting[q] ? plus(i) : "q-");
      }
    for (const auto& e : events)
      {
        b.transition("q-", e, "q-");
        for (std::size_t i = 0; i < n; ++i)
          b.transition(plus(i), e, plus((i + 1) % n));
      }

    b.initial("q-");
    for (std::size_t i = 0; i < n; ++i)
      b.initial(local(i, dfas[i].states[dfas[i].initial]));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t q = 0; q < dfas[i].states.size(); ++q)
        if (dfas[i].accepting[q])
          b.marked(local(i, dfas[i].states[q]));

    Des des = b.build();
    bool no_accepting = std::none_of(
      dfas.begin(), dfas.end(), [](const Dfa& d) {
        return std::find(d.accepting.begin(), d.accepting.end(), true)
               != d.accepting.end();
      });
    if (no_accepting)
      des = Des(des.alphabet(), des.state_names(),
                {des.transitions().begin(), des.transitions().end()},
                des.initial(), std::vector<StateId>{});

    Spec spec = make_spec(des, {{"q-", "q1+"}});
    std::string prov = "intersection reduction: " + std::to_string(n)
                       + " DFAs"
                       + (encode_binary ? ", binary encoding" : "");
    return {std::move(des), std::move(spec), std::move(prov)};
  }

  bool
  dfa_intersection_empty(std::span<const Dfa> dfas, std::size_t max_product)
  {
    if (dfas.empty())
      throw input_error("intersection of zero DFAs");
    for (const Dfa& d : dfas)
      validate_dfa(d);

    using Tuple = std::vector<std::uint32_t>;
    std::map<Tuple, bool> seen;
    std::deque<Tuple> queue;
    Tuple start;
    for (const Dfa& d : dfas)
      start.push_back(d.initial);
    seen.emplace(start, true);
    queue.push_back(start);
    while (!queue.empty())
      {
        Tuple t = std::move(queue.front());
        queue.pop_front();
        bool all = true;
        for (std::size_t i = 0; i < dfas.size(); ++i)
          all = all && dfas[i].accepting[t[i]];
        if (all)
          return false;
        for (int sym = 0; sym < 2; ++sym)
          {
            Tuple u(t.size());
            for (std::size_t i = 0; i < dfas.size(); ++i)
              u[i] = dfas[i].next[t[i]][sym];
            if (seen.emplace(u, true).second)
              {
                if (seen.size() > max_product)
                  throw budget_exceeded("product state", max_product);
                queue.push_back(std::move(u));
              }
          }
      }
    return true;
  }

  // 3CNF reduction -----------------------------------------------------------

  Cnf3
  parse_cnf(std::string_view text)
  {
    Cnf3 phi;
    std::unordered_map<std::string, std::uint32_t> ids;
    std::size_t pos = 0;

    auto fail = [&](const std::string& what) -> parse_error {
      return parse_error(1, pos + 1, what);
    };
    auto skip = [&] {
      while (pos < text.size()
             && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    };
    auto ident_char = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    auto literal = [&]() -> Literal {
      skip();
      bool negated = false;
      while (pos < text.size() && (text[pos] == '~' || text[pos] == '!'))
        {
          negated = !negated;
          ++pos;
          skip();
        }
      std::size_t start = pos;
      while (pos < text.size() && ident_char(text[pos]))
        ++pos;
      if (start == pos)
        throw fail("expected a variable");
      std::string name(text.substr(start, pos - start));
      auto [it, fresh] = ids.emplace(name, std::uint32_t(phi.names.size()));
      if (fresh)
        phi.names.push_back(name);
      return {it->second, negated};
    };

    skip();
    if (pos == text.size())
      throw fail("empty formula");
    while (true)
      {
        skip();
        std::vector<Literal> clause;
        if (pos < text.size() && text[pos] == '(')
          {
            ++pos;
            clause.push_back(literal());
            skip();
            while (pos < text.size() && text[pos] == '|')
              {
                ++pos;
                clause.push_back(literal());
                skip();
              }
            if (pos == text.size() || text[pos] != ')')
              throw fail("expected '|' or ')'");
            ++pos;
          }
        else
          clause.push_back(literal());
        phi.clauses.push_back(std::move(clause));
        skip();
        if (pos == text.size())
          break;
        if (text[pos] != '&')
          throw fail("expected '&'");
        ++pos;
      }
    phi.variables = phi.names.size();
    return phi;
  }

  std::string
  format_cnf(const Cnf3& phi)
  {
    auto name = [&](std::uint32_t v) {
      return v < phi.names.size() ? phi.names[v] : "x" + std::to_string(v + 1);
    };
    std::string out;
    for (std::size_t k = 0; k < phi.clauses.size(); ++k)
      {
        if (k)
          out += "&";
        out += "(";
        for (std::size_t j = 0; j < phi.clauses[k].size(); ++j)
          {
            if (j)
              out += "|";
            const Literal& l = phi.clauses[k][j];
            out += (l.negated ? "~" : "") + name(l.variable);
          }
        out += ")";
      }
    return out;
  }

  void
  validate_cnf(const Cnf3& phi)
  {
    if (phi.variables == 0 || phi.clauses.empty())
      throw input_error("formula has no variables or no clauses");
    for (const auto& clause : phi.clauses)
      {
        if (clause.empty() || clause.size() > 3)
          throw input_error("clause must have one to three literals");
        for (std::size_t i = 0; i < clause.size(); ++i)
          {
            if (clause[i].variable >= phi.variables)
              throw input_error("literal variable out of range");
            for (std::size_t j = 0; j < i; ++j)
              if (clause[i].variable == clause[j].variable)
                throw input_error("clause repeats a variable");
          }
      }
  }

  std::vector<std::uint32_t>
  first_primes(std::size_t n)
  {
    std::vector<std::uint32_t> primes;
    for (std::uint32_t c = 2; primes.size() < n; ++c)
      {
        bool prime = true;
        for (std::uint32_t p : primes)
          {
            if (p * p > c)
              break;
            if (c % p == 0)
              {
                prime = false;
                break;
              }
          }
        if (prime)
          primes.push_back(c);
      }
    return primes;
  }

  GeneratedInstance
  gen_from_3cnf(const Cnf3& phi)
  {
    validate_cnf(phi);
    if (phi.variables > 20)
      throw input_error("3CNF reduction supports at most 20 variables");
    const auto primes = first_primes(phi.variables);

    DesBuilder b;
    b.event("0");
    // automaton index per state, for the spec
    std::vector<std::uint32_t> owner;
    auto name = [](std::size_t a, std::size_t j) {
      return "A" + std::to_string(a) + "_" + std::to_string(j);
    };
    auto add = [&](std::size_t a, std::size_t j) {
      std::string s = name(a, j);
      b.state(s);
      owner.push_back(std::uint32_t(a));
      return s;
    };

    // Chain of `tail` states then a cycle of `period` states starting at
    // position `tail`; that cycle entry is the only accepting state.
    auto lasso = [&](std::size_t a, std::size_t first, const std::string& root,
                     std::uint64_t tail, std::uint64_t period) {
      std::string prev = root;
      std::string entry;
      std::size_t next_index = first;
      for (std::uint64_t pos = 1; pos < tail + period; ++pos)
        {
          std::string cur = add(a, next_index++);
          b.transition(prev, "0", cur);
          if (pos == tail)
            entry = cur;
          prev = cur;
        }
      if (tail == 0)
        entry = root;
      b.transition(prev, "0", entry);
      b.marked(entry);
      return next_index;
    };

    bool has_a0 = std::any_of(primes.begin(), primes.end(),
                              [](std::uint32_t p) { return p > 2; });
    if (has_a0)
      {
        std::string root = add(0, 0);
        b.initial(root);
        std::size_t next = 1;
        for (std::uint32_t p : primes)
          for (std::uint32_t j = 2; j < p; ++j)
            next = lasso(0, next, root, j, p);
      }

    for (std::size_t k = 0; k < phi.clauses.size(); ++k)
      {
        const auto& clause = phi.clauses[k];
        std::uint64_t modulus = 1;
        for (const Literal& l : clause)
          modulus *= primes[l.variable];
        std::uint64_t z = 0;
        for (; z < modulus; ++z)
          {
            bool ok = true;
            for (const Literal& l : clause)
              ok = ok && z % primes[l.variable] == (l.negated ? 1u : 0u);
            if (ok)
              break;
          }
        std::string root = add(k + 1, 0);
        b.initial(root);
        lasso(k + 1, 1, root, z, modulus);
      }

    Des des = b.build();
    std::vector<Spec::Pair> pairs;
    for (StateId p : des.marked())
      for (StateId q = 0; q < des.state_count(); ++q)
        if (owner[p] != owner[q])
          pairs.emplace_back(p, q);
    std::string prov = "3cnf reduction: " + format_cnf(phi) + ", "
                       + std::to_string(phi.variables) + " variables, "
                       + std::to_string(phi.clauses.size()) + " clauses";
    return {std::move(des), Spec(std::move(pairs)), std::move(prov)};
  }

  bool
  sat_bruteforce(const Cnf3& phi)
  {
    validate_cnf(phi);
    if (phi.variables > 20)
      throw budget_exceeded("SAT variable", 20);
    for (std::uint32_t assignment = 0; assignment < (1u << phi.variables);
         ++assignment)
      {
        bool all = true;
        for (const auto& clause : phi.clauses)
          {
            bool some = false;
            for (const Literal& l : clause)
              some = some
                     || (((assignment >> l.variable) & 1u) != 0) != l.negated;
            if (!some)
              {
                all = false;
                break;
              }
          }
        if (all)
          return true;
      }
    return false;
  }

  // Random instances ---------------------------------------------------------

  namespace
  {
    std::vector<StateId>
    random_initial(Rng& rng, std::size_t states)
    {
      std::vector<StateId> init;
      for (StateId q = 0; q < states; ++q)
        if (rng.chance(0.3))
          init.push_back(q);
      if (init.empty())
        init.push_back(StateId(rng.below(states)));
      return init;
    }

    std::vector<std::string>
    numbered(const char* prefix, std::size_t n)
    {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < n; ++i)
        out.push_back(prefix + std::to_string(i));
      return out;
    }
  }

  Des
  gen_random_des(const RandomDesParams& params)
  {
    if (params.states == 0 || params.events == 0)
      throw input_error("random system needs at least one state and event");
    Rng rng(params.seed);

    Alphabet sigma;
    std::vector<bool> observable(params.events);
    for (std::size_t e = 0; e < params.events; ++e)
      observable[e] = rng.chance(params.observable_fraction);
    if (std::find(observable.begin(), observable.end(), true)
        == observable.end())
      observable[rng.below(params.events)] = true;
    for (std::size_t e = 0; e < params.events; ++e)
      sigma.add("e" + std::to_string(e), observable[e]);

    const std::size_t n = params.states;
    std::vector<Transition> trans;
    // hidden[p][q]: q reachable from p by unobservable transitions
    std::vector<std::vector<bool>> hidden(n, std::vector<bool>(n, false));
    for (std::size_t p = 0; p < n; ++p)
      hidden[p][p] = true;

    for (StateId p = 0; p < n; ++p)
      for (EventId e = 0; e < params.events; ++e)
        for (StateId q = 0; q < n; ++q)
          {
            if (!rng.chance(params.density))
              continue;
            if (!observable[e])
              {
                if (hidden[q][p])
                  continue;
                for (std::size_t a = 0; a < n; ++a)
                  if (hidden[a][p])
                    for (std::size_t c = 0; c < n; ++c)
                      if (hidden[q][c])
                        hidden[a][c] = true;
              }
            trans.push_back({p, e, q});
          }

    std::vector<bool> has_out(n, false);
    for (const Transition& t : trans)
      has_out[t.source] = true;
    EventId first_obs = EventId(
      std::find(observable.begin(), observable.end(), true)
      - observable.begin());
    for (StateId q = 0; q < n; ++q)
      if (!has_out[q])
        trans.push_back({q, first_obs, q});

    return Des(std::move(sigma), numbered("s", n), std::move(trans),
               random_initial(rng, n));
  }

  Des
  gen_random_rpodes(std::uint64_t seed, std::size_t states,
                    std::size_t events, double density)
  {
    if (states == 0 || events == 0)
      throw input_error("random system needs at least one state and event");
    Rng rng(seed);
    std::vector<StateId> order(states);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = states; i > 1; --i)
      std::swap(order[i - 1], order[rng.below(i)]);

    Alphabet sigma;
    for (std::size_t e = 0; e < events; ++e)
      sigma.add("e" + std::to_string(e), true);

    std::vector<Transition> trans;
    for (std::size_t i = 0; i < states; ++i)
      for (EventId e = 0; e < events; ++e)
        {
          bool forward = false;
          for (std::size_t j = i + 1; j < states; ++j)
            if (rng.chance(density / 2))
              {
                trans.push_back({order[i], e, order[j]});
                forward = true;
              }
          if (!forward && rng.chance(density))
            trans.push_back({order[i], e, order[i]});
        }

    std::vector<bool> has_out(states, false);
    for (const Transition& t : trans)
      has_out[t.source] = true;
    for (StateId q = 0; q < states; ++q)
      if (!has_out[q])
        trans.push_back({q, EventId(rng.below(events)), q});

    return Des(std::move(sigma), numbered("s", states), std::move(trans),
               random_initial(rng, states));
  }

  Dfa
  gen_random_dfa(Rng& rng, std::size_t states)
  {
    if (states == 0)
      throw input_error("DFA needs at least one state");
    Dfa d;
    d.states = numbered("q", states);
    d.next.resize(states);
    d.accepting.resize(states);
    for (std::size_t q = 0; q < states; ++q)
      {
        d.next[q] = {std::uint32_t(rng.below(states)),
                     std::uint32_t(rng.below(states))};
        d.accepting[q] = rng.chance(0.5);
      }
    d.initial = 0;
    return d;
  }

  Spec
  gen_random_spec(Rng& rng, const Des& des, double probability,
                  bool reflexive)
  {
    std::vector<Spec::Pair> pairs;
    for (StateId p = 0; p < des.state_count(); ++p)
      for (StateId q = 0; q < des.state_count(); ++q)
        if ((p != q || reflexive) && rng.chance(probability))
          pairs.emplace_back(p, q);
    return Spec(std::move(pairs));
  }

  Cnf3
  gen_random_cnf(Rng& rng, std::size_t variables, std::size_t clauses)
  {
    if (variables == 0 || clauses == 0)
      throw input_error("random formula needs variables and clauses");
    Cnf3 phi;
    phi.variables = variables;
    for (std::size_t k = 0; k < clauses; ++k)
      {
        std::size_t width = rng.between(1, std::min<std::size_t>(3, variables));
        std::vector<std::uint32_t> vars(variables);
        std::iota(vars.begin(), vars.end(), 0);
        std::vector<Literal> clause;
        for (std::size_t i = 0; i < width; ++i)
          {
            std::size_t pick = i + rng.below(variables - i);
            std::swap(vars[i], vars[pick]);
            clause.push_back({vars[i], rng.chance(0.5)});
          }
        phi.clauses.push_back(std::move(clause));
      }
    return phi;
  }
}
