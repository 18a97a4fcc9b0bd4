#include <ddet/des.hh>

#include <algorithm>
#include <sstream>

#include <ddet/errors.hh>

namespace ddet
{
  // Alphabet ---------------------------------------------------------------

  EventId
  Alphabet::add(std::string name, bool observable)
  {
    if (name.empty())
      throw input_error("empty event name");
    if (index_.count(name))
      throw input_error("duplicate event '" + name + "'");
    auto id = static_cast<EventId>(names_.size());
    index_.emplace(name, id);
    names_.push_back(std::move(name));
    observable_.push_back(observable);
    return id;
  }

  std::optional<EventId>
  Alphabet::find(std::string_view name) const
  {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  std::vector<EventId>
  Alphabet::observable_events() const
  {
    std::vector<EventId> out;
    for (EventId e = 0; e < names_.size(); ++e)
      if (observable_[e])
        out.push_back(e);
    return out;
  }

  std::size_t
  Alphabet::observable_count() const
  {
    return static_cast<std::size_t>(
      std::count(observable_.begin(), observable_.end(), true));
  }

  // Des --------------------------------------------------------------------

  namespace
  {
    std::vector<StateId>
    sorted_unique(std::vector<StateId> v)
    {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }
  }

  Des::Des(Alphabet alphabet, std::vector<std::string> states,
           std::vector<Transition> transitions, std::vector<StateId> initial,
           std::optional<std::vector<StateId>> marked)
    : alphabet_(std::move(alphabet)), states_(std::move(states)),
      transitions_(std::move(transitions))
  {
    if (alphabet_.size() == 0)
      throw input_error("alphabet is empty");
    if (states_.empty())
      throw input_error("state set is empty");
    for (StateId q = 0; q < states_.size(); ++q)
      {
        if (states_[q].empty())
          throw input_error("empty state name");
        if (!state_index_.emplace(states_[q], q).second)
          throw input_error("duplicate state '" + states_[q] + "'");
      }

    const std::size_t n = states_.size();
    for (const Transition& t : transitions_)
      if (t.source >= n || t.target >= n || t.event >= alphabet_.size())
        throw input_error("transition refers to an unknown state or event");
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                       transitions_.end());

    const std::size_t ne = alphabet_.size();
    offsets_.assign(n * ne + 1, 0);
    targets_.reserve(transitions_.size());
    for (const Transition& t : transitions_)
      {
        ++offsets_[t.source * ne + t.event + 1];
        targets_.push_back(t.target);
      }
    for (std::size_t i = 1; i < offsets_.size(); ++i)
      offsets_[i] += offsets_[i - 1];

    initial_ = sorted_unique(std::move(initial));
    if (initial_.empty())
      throw input_error("initial state set is empty");
    for (StateId q : initial_)
      if (q >= n)
        throw input_error("initial state out of range");

    if (marked)
      {
        marked_ = sorted_unique(std::move(*marked));
        for (StateId q : marked_)
          if (q >= n)
            throw input_error("marked state out of range");
      }
    else
      {
        marked_.resize(n);
        for (StateId q = 0; q < n; ++q)
          marked_[q] = q;
      }
    marked_flag_.assign(n, false);
    for (StateId q : marked_)
      marked_flag_[q] = true;
  }

  std::optional<StateId>
  Des::find_state(std::string_view name) const
  {
    auto it = state_index_.find(std::string(name));
    if (it == state_index_.end())
      return std::nullopt;
    return it->second;
  }

  std::span<const StateId>
  Des::successors(StateId q, EventId e) const
  {
    std::size_t slot = q * alphabet_.size() + e;
    return std::span<const StateId>(targets_).subspan(
      offsets_[slot], offsets_[slot + 1] - offsets_[slot]);
  }

  bool
  Des::has_outgoing(StateId q) const
  {
    const std::size_t ne = alphabet_.size();
    return offsets_[(q + 1) * ne] != offsets_[q * ne];
  }

  // DesBuilder -------------------------------------------------------------

  DesBuilder&
  DesBuilder::event(std::string name, bool observable)
  {
    alphabet_.add(std::move(name), observable);
    return *this;
  }

  StateId
  DesBuilder::state_id(std::string_view name)
  {
    auto it = index_.find(std::string(name));
    if (it != index_.end())
      return it->second;
    auto id = static_cast<StateId>(states_.size());
    states_.emplace_back(name);
    index_.emplace(std::string(name), id);
    return id;
  }

  DesBuilder&
  DesBuilder::state(std::string name)
  {
    state_id(name);
    return *this;
  }

  DesBuilder&
  DesBuilder::transition(std::string_view source, std::string_view event,
                         std::string_view target)
  {
    auto e = alphabet_.find(event);
    if (!e)
      throw input_error("unknown event '" + std::string(event) + "'");
    StateId s = state_id(source);
    StateId t = state_id(target);
    transitions_.push_back({s, *e, t});
    return *this;
  }

  DesBuilder&
  DesBuilder::initial(std::string_view name)
  {
    initial_.push_back(state_id(name));
    return *this;
  }

  DesBuilder&
  DesBuilder::marked(std::string_view name)
  {
    StateId q = state_id(name);
    if (!marked_)
      marked_.emplace();
    marked_->push_back(q);
    return *this;
  }

  Des
  DesBuilder::build() const
  {
    return Des(alphabet_, states_, transitions_, initial_, marked_);
  }

  // Estimate / Spec --------------------------------------------------------

  Estimate::Estimate(std::vector<StateId> states)
    : states_(sorted_unique(std::move(states)))
  {
  }

  bool
  Estimate::contains(StateId q) const
  {
    return std::binary_search(states_.begin(), states_.end(), q);
  }

  std::size_t
  EstimateHash::operator()(const Estimate& e) const noexcept
  {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (StateId q : e)
      {
        h ^= q + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0x100000001b3ULL;
      }
    return static_cast<std::size_t>(h);
  }

  Spec::Spec(std::vector<Pair> pairs) : pairs_(std::move(pairs))
  {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  }

  bool
  Spec::contains(StateId p, StateId q) const
  {
    return std::binary_search(pairs_.begin(), pairs_.end(), Pair{p, q});
  }

  Spec
  make_spec(const Des& des,
            std::initializer_list<std::pair<std::string_view,
                                            std::string_view>> pairs)
  {
    std::vector<Spec::Pair> out;
    for (const auto& [a, b] : pairs)
      {
        auto p = des.find_state(a);
        auto q = des.find_state(b);
        if (!p || !q)
          throw input_error("spec mentions an unknown state");
        out.emplace_back(*p, *q);
      }
    return Spec(std::move(out));
  }

  void
  validate_spec(const Des& des, const Spec& spec)
  {
    for (const auto& [p, q] : spec.pairs())
      if (p >= des.state_count() || q >= des.state_count())
        throw input_error("spec pair refers to a state outside the system");
  }

  // Operations -------------------------------------------------------------

  LabeledDigraph
  transition_graph(const Des& des, const std::function<bool(EventId)>& keep)
  {
    LabeledDigraph g(des.state_count());
    for (const Transition& t : des.transitions())
      if (keep(t.event))
        g.add_arc(t.source, t.event, t.target);
    g.normalize();
    return g;
  }

  AssumptionReport
  validate_assumptions(const Des& des)
  {
    AssumptionReport r;
    for (StateId q = 0; q < des.state_count(); ++q)
      if (!des.has_outgoing(q))
        r.deadlocked.push_back(q);
    r.deadlock_free = r.deadlocked.empty();

    const Alphabet& sigma = des.alphabet();
    LabeledDigraph g = transition_graph(
      des, [&](EventId e) { return !sigma.observable(e); });
    SccView scc = scc_view(g);
    for (StateId q = 0; q < des.state_count(); ++q)
      if (scc.on_cycle(q))
        {
          r.no_unobservable_loop = false;
          r.unobservable_cycle = shortest_cycle(g, q)->nodes;
          break;
        }
    return r;
  }

  namespace
  {
    void
    check_states(const Des& des, const Estimate& est)
    {
      for (StateId q : est)
        if (q >= des.state_count())
          throw input_error("state " + std::to_string(q)
                            + " is not a state of the system");
    }

    // Closes \a seen/\a work in place under unobservable transitions.
    void
    close_in_place(const Des& des, std::vector<bool>& seen,
                   std::vector<StateId>& work)
    {
      const Alphabet& sigma = des.alphabet();
      for (std::size_t i = 0; i < work.size(); ++i)
        {
          StateId q = work[i];
          for (EventId e = 0; e < sigma.size(); ++e)
            {
              if (sigma.observable(e))
                continue;
              for (StateId r : des.successors(q, e))
                if (!seen[r])
                  {
                    seen[r] = true;
                    work.push_back(r);
                  }
            }
        }
    }
  }

  Estimate
  unobservable_reach(const Des& des, const Estimate& from)
  {
    check_states(des, from);
    std::vector<bool> seen(des.state_count(), false);
    std::vector<StateId> work(from.begin(), from.end());
    for (StateId q : work)
      seen[q] = true;
    close_in_place(des, seen, work);
    return Estimate(std::move(work));
  }

  Estimate
  advance(const Des& des, const Estimate& from, EventId event)
  {
    if (event >= des.alphabet().size())
      throw input_error("unknown event id " + std::to_string(event));
    if (!des.alphabet().observable(event))
      throw input_error("event '" + des.alphabet().name(event)
                        + "' is not observable");
    std::vector<bool> seen(des.state_count(), false);
    std::vector<StateId> work;
    for (StateId q : from)
      for (StateId r : des.successors(q, event))
        if (!seen[r])
          {
            seen[r] = true;
            work.push_back(r);
          }
    close_in_place(des, seen, work);
    return Estimate(std::move(work));
  }

  Estimate
  initial_estimate(const Des& des)
  {
    return unobservable_reach(des, Estimate(des.initial()));
  }

  Estimate
  estimate(const Des& des, std::span<const EventId> observation)
  {
    Estimate cur = initial_estimate(des);
    for (EventId e : observation)
      cur = advance(des, cur, e);
    return cur;
  }

  Des
  project(const Des& des)
  {
    const Alphabet& sigma = des.alphabet();
    Alphabet out_sigma;
    std::vector<EventId> new_id(sigma.size(), 0);
    for (EventId e : sigma.observable_events())
      new_id[e] = out_sigma.add(sigma.name(e), true);

    std::vector<Transition> trans;
    for (StateId q = 0; q < des.state_count(); ++q)
      {
        Estimate from = unobservable_reach(des, Estimate{q});
        for (EventId e : sigma.observable_events())
          for (StateId r : advance(des, from, e))
            trans.push_back({q, new_id[e], r});
      }
    std::vector<StateId> init = initial_estimate(des).states();
    return Des(std::move(out_sigma), des.state_names(), std::move(trans),
               std::move(init), des.marked());
  }

  bool
  is_violating(const Estimate& est, const Spec& spec)
  {
    // Scan whichever side is smaller: the spec, or the pairs of est.
    if (spec.size() <= est.size() * est.size())
      {
        for (const auto& [p, q] : spec.pairs())
          if (est.contains(p) && est.contains(q))
            return true;
        return false;
      }
    for (StateId p : est)
      for (StateId q : est)
        if (spec.contains(p, q))
          return true;
    return false;
  }

  Spec
  detectability_spec(const Des& des)
  {
    std::vector<Spec::Pair> pairs;
    const auto n = static_cast<StateId>(des.state_count());
    pairs.reserve(std::size_t(n) * (n ? n - 1 : 0));
    for (StateId p = 0; p < n; ++p)
      for (StateId q = 0; q < n; ++q)
        if (p != q)
          pairs.emplace_back(p, q);
    return Spec(std::move(pairs));
  }

  bool
  is_unary(const Des& des)
  {
    return des.alphabet().observable_count() == 1;
  }

  Observation
  parse_observation(const Des& des, std::string_view text)
  {
    Observation obs;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok)
      {
        auto e = des.alphabet().find(tok);
        if (!e)
          throw input_error("unknown event '" + tok + "'");
        if (!des.alphabet().observable(*e))
          throw input_error("event '" + tok + "' is not observable");
        obs.push_back(*e);
      }
    return obs;
  }

  std::string
  format_observation(const Des& des, std::span<const EventId> observation)
  {
    std::string out;
    for (EventId e : observation)
      {
        if (!out.empty())
          out += ' ';
        out += des.alphabet().name(e);
      }
    return out;
  }

  std::string
  format_estimate(const Des& des, const Estimate& est)
  {
    std::string out = "{";
    bool first = true;
    for (StateId q : est)
      {
        if (!first)
          out += ',';
        first = false;
        out += des.state_name(q);
      }
    return out + "}";
  }
}
