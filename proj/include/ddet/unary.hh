#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <ddet/checks.hh>
#include <ddet/des.hh>
#include <ddet/verdict.hh>

namespace ddet
{
  /// Arbitrary-precision step count.
  using BigNat = boost::multiprecision::cpp_int;

  /// Square boolean matrix with bit-packed rows.  Products are over the
  /// (or, and) semiring.
  class BoolMatrix
  {
  public:
    explicit BoolMatrix(std::size_t dimension = 0);
    static BoolMatrix identity(std::size_t dimension);

    std::size_t dimension() const noexcept { return n_; }
    bool get(std::size_t i, std::size_t j) const
    {
      return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool value = true);

    BoolMatrix operator*(const BoolMatrix& rhs) const;
    /// Row-vector product: the states reachable in one step from \a from.
    Estimate image(const Estimate& from) const;

    bool operator==(const BoolMatrix&) const = default;

  private:
    void or_row_into(std::size_t row, std::uint64_t* out) const;

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
  };

  /// Adjacency under the single observable event of \a des, after
  /// eliminating unobservable events.  Throws input_error unless \a des has
  /// exactly one observable event.
  BoolMatrix transition_matrix(const Des& des);

  /// Image of \a initial under M^r, by repeated squaring.
  Estimate estimate_at(const BoolMatrix& m, const Estimate& initial,
                       const BigNat& r);

  /// The observer of a unary system is a lasso: `tail` estimates followed
  /// by a cycle of `period` estimates.  Both values are minimal.
  struct UnaryProfile
  {
    std::uint64_t tail = 0;
    std::uint64_t period = 1;

    bool operator==(const UnaryProfile&) const = default;
  };

  struct UnarySequence
  {
    UnaryProfile profile;
    /// Estimates at positions 0 .. tail + period - 1.
    std::vector<Estimate> estimates;
  };

  /// Iterates the subset map from the initial estimate until the first
  /// repetition.  Throws budget_exceeded after \a step_budget steps.
  UnarySequence unary_sequence(const Des& des,
                               std::size_t step_budget = default_unary_budget);
  UnaryProfile unary_profile(const Des& des,
                             std::size_t step_budget = default_unary_budget);

  struct UnaryCheck
  {
    Verdict verdict;
    UnaryProfile profile;
    /// First cycle position whose estimate is free, when the property
    /// holds.
    std::optional<std::uint64_t> free_position;
  };

  /// Strong periodic D-detectability of a single-observable-event system:
  /// holds iff some estimate on the cycle part of the lasso is free.
  UnaryCheck check_unary_strong_periodic_d(const Des& des, const Spec& spec,
                                           const CheckOptions& options = {});
}
