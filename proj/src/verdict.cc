#include <ddet/verdict.hh>

#include <ddet/errors.hh>

namespace ddet
{
  std::string
  format_lasso(const Des& des, const Lasso& lasso)
  {
    std::string out = "stem=" + format_observation(des, lasso.stem)
                      + "; cycle=" + format_observation(des, lasso.cycle);
    if (!lasso.continuation.empty())
      out += "; then=" + format_observation(des, lasso.continuation);
    return out;
  }

  Lasso
  parse_lasso(const Des& des, std::string_view text)
  {
    Lasso lasso;
    bool seen_stem = false, seen_cycle = false, seen_then = false;
    std::size_t pos = 0;
    while (pos <= text.size())
      {
        std::size_t end = text.find(';', pos);
        if (end == std::string_view::npos)
          end = text.size();
        std::string_view part = text.substr(pos, end - pos);
        std::size_t col = pos + 1;
        pos = end + 1;

        std::size_t lead = part.find_first_not_of(" \t");
        if (lead == std::string_view::npos)
          {
            if (end == text.size())
              break;
            throw parse_error(1, col, "empty lasso component");
          }
        part.remove_prefix(lead);
        col += lead;
        std::size_t eq = part.find('=');
        if (eq == std::string_view::npos)
          throw parse_error(1, col, "expected key=events");
        std::string_view key = part.substr(0, eq);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t'))
          key.remove_suffix(1);
        Observation events = parse_observation(des, part.substr(eq + 1));
        if (key == "stem" && !seen_stem)
          {
            lasso.stem = std::move(events);
            seen_stem = true;
          }
        else if (key == "cycle" && !seen_cycle)
          {
            lasso.cycle = std::move(events);
            seen_cycle = true;
          }
        else if (key == "then" && !seen_then)
          {
            lasso.continuation = std::move(events);
            seen_then = true;
          }
        else
          throw parse_error(1, col, "unexpected or repeated key '"
                                      + std::string(key) + "'");
      }
    if (!seen_stem || !seen_cycle)
      throw parse_error(1, 1, "lasso needs both stem= and cycle=");
    if (lasso.cycle.empty())
      throw input_error("lasso cycle must be nonempty");
    return lasso;
  }
}
