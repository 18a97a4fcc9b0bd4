#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <ddet/des.hh>

namespace ddet
{
  /// Finite certificate for an infinite observation: stem, then cycle
  /// repeated forever.  Strong-property failures additionally carry a
  /// continuation that leaves the cycle toward the offending estimate, so
  /// the replayed string is stem . cycle^k . continuation.
  struct Lasso
  {
    Observation stem;
    Observation cycle;
    Observation continuation;

    bool operator==(const Lasso&) const = default;
  };

  struct Verdict
  {
    bool holds = false;
    /// A valid n for the existential bound when the property holds.
    std::optional<std::uint64_t> bound_n;
    /// Counterexample for strong variants, example trajectory for weak
    /// variants.
    std::optional<Lasso> witness;
  };

  /// `stem=<events>; cycle=<events>` with an extra `; then=<events>` when
  /// the continuation is nonempty.  Events are space separated.
  std::string format_lasso(const Des& des, const Lasso& lasso);

  /// Inverse of format_lasso().  Throws parse_error on malformed text and
  /// input_error on unknown or unobservable events.
  Lasso parse_lasso(const Des& des, std::string_view text);
}
