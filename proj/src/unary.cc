#include <ddet/unary.hh>

#include <unordered_map>

#include <ddet/errors.hh>

namespace ddet
{
  BoolMatrix::BoolMatrix(std::size_t dimension)
    : n_(dimension), words_((dimension + 63) / 64),
      bits_(dimension * words_, 0)
  {
  }

  BoolMatrix
  BoolMatrix::identity(std::size_t dimension)
  {
    BoolMatrix m(dimension);
    for (std::size_t i = 0; i < dimension; ++i)
      m.set(i, i);
    return m;
  }

  void
  BoolMatrix::set(std::size_t i, std::size_t j, bool value)
  {
    std::uint64_t bit = std::uint64_t(1) << (j % 64);
    if (value)
      bits_[i * words_ + j / 64] |= bit;
    else
      bits_[i * words_ + j / 64] &= ~bit;
  }

  void
  BoolMatrix::or_row_into(std::size_t row, std::uint64_t* out) const
  {
    const std::uint64_t* src = bits_.data() + row * words_;
    for (std::size_t w = 0; w < words_; ++w)
      out[w] |= src[w];
  }

  BoolMatrix
  BoolMatrix::operator*(const BoolMatrix& rhs) const
  {
    if (rhs.n_ != n_)
      throw input_error("matrix dimensions differ");
    BoolMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      {
        std::uint64_t* dst = out.bits_.data() + i * words_;
        const std::uint64_t* row = bits_.data() + i * words_;
        for (std::size_t w = 0; w < words_; ++w)
          for (std::uint64_t x = row[w]; x; x &= x - 1)
            rhs.or_row_into(w * 64 + std::size_t(__builtin_ctzll(x)), dst);
      }
    return out;
  }

  Estimate
  BoolMatrix::image(const Estimate& from) const
  {
    std::vector<std::uint64_t> acc(words_, 0);
    for (StateId q : from)
      or_row_into(q, acc.data());
    std::vector<StateId> out;
    for (std::size_t w = 0; w < words_; ++w)
      for (std::uint64_t x = acc[w]; x; x &= x - 1)
        out.push_back(static_cast<StateId>(w * 64 + __builtin_ctzll(x)));
    return Estimate(std::move(out));
  }

  namespace
  {
    EventId
    sole_observable_event(const Des& des)
    {
      auto obs = des.alphabet().observable_events();
      if (obs.size() != 1)
        throw input_error("expected exactly one observable event, found "
                          + std::to_string(obs.size()));
      return obs.front();
    }
  }

  BoolMatrix
  transition_matrix(const Des& des)
  {
    EventId a = sole_observable_event(des);
    bool has_hidden = des.alphabet().size() > 1;
    Des flat = has_hidden ? project(des) : des;
    if (has_hidden)
      a = 0;
    BoolMatrix m(flat.state_count());
    for (const Transition& t : flat.transitions())
      if (t.event == a)
        m.set(t.source, t.target);
    return m;
  }

  Estimate
  estimate_at(const BoolMatrix& m, const Estimate& initial, const BigNat& r)
  {
    if (r < 0)
      throw input_error("step count must be nonnegative");
    Estimate cur = initial;
    if (r == 0)
      return cur;
    BoolMatrix power = m;
    const std::size_t top = boost::multiprecision::msb(r);
    for (std::size_t bit = 0;; ++bit)
      {
        if (boost::multiprecision::bit_test(r, bit))
          cur = power.image(cur);
        if (bit == top)
          break;
        power = power * power;
      }
    return cur;
  }

  UnarySequence
  unary_sequence(const Des& des, std::size_t step_budget)
  {
    if (step_budget == 0)
      throw input_error("unary step budget must be at least 1");
    EventId a = sole_observable_event(des);
    UnarySequence seq;
    std::unordered_map<Estimate, std::uint64_t, EstimateHash> seen;
    Estimate cur = initial_estimate(des);
    for (std::uint64_t i = 0;; ++i)
      {
        auto [it, fresh] = seen.emplace(cur, i);
        if (!fresh)
          {
            seq.profile = {it->second, i - it->second};
            return seq;
          }
        if (i >= step_budget)
          throw budget_exceeded("unary step", step_budget);
        seq.estimates.push_back(cur);
        cur = advance(des, cur, a);
      }
  }

  UnaryProfile
  unary_profile(const Des& des, std::size_t step_budget)
  {
    return unary_sequence(des, step_budget).profile;
  }

  UnaryCheck
  check_unary_strong_periodic_d(const Des& des, const Spec& spec,
                                const CheckOptions& options)
  {
    validate_spec(des, spec);
    enforce_assumptions(des, options);
    EventId a = sole_observable_event(des);
    UnarySequence seq = unary_sequence(des, options.max_unary_steps);
    const auto [k, l] = seq.profile;

    UnaryCheck out;
    out.profile = seq.profile;
    for (std::uint64_t m = k; m < k + l; ++m)
      if (!is_violating(seq.estimates[m], spec))
        {
          out.free_position = m;
          out.verdict = {true, k + l + 1, std::nullopt};
          return out;
        }
    Lasso witness;
    witness.stem.assign(k, a);
    witness.cycle.assign(l, a);
    out.verdict = {false, std::nullopt, std::move(witness)};
    return out;
  }
}
