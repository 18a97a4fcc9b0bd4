#pragma once

#include <string>
#include <string_view>

#include <ddet/des.hh>

namespace ddet
{
  /// A system together with its specification, as stored in a DESF file.
  ///
  /// Grammar (one directive per line, `#` starts a comment):
  ///
  ///     desf 1
  ///     events: a:o u:uo
  ///     states: 1 2 3
  ///     initial: 1
  ///     marked: 1 3          (optional; absent means every state)
  ///     trans: 1 a 2         (repeatable)
  ///     spec: 1 3            (repeatable)
  struct DesfDocument
  {
    Des des;
    Spec spec;

    bool operator==(const DesfDocument&) const = default;
  };

  /// Throws parse_error with the line and column of the offending token.
  DesfDocument parse_desf(std::string_view text);

  /// Reads and parses a file; throws input_error if it cannot be opened.
  DesfDocument read_desf_file(const std::string& path);

  /// Canonical text: declaration order for events and states, sorted
  /// transitions and spec pairs.  Each line of \a comment becomes a leading
  /// `#` line.
  std::string serialize_desf(const Des& des, const Spec& spec,
                             std::string_view comment = {});
  inline std::string
  serialize_desf(const DesfDocument& doc, std::string_view comment = {})
  {
    return serialize_desf(doc.des, doc.spec, comment);
  }
}
