#ifndef ACTIME_SRC_FORMAT_HPP
#define ACTIME_SRC_FORMAT_HPP

#include <charconv>
#include <string>

namespace actime::detail {

/// Shortest round-trip decimal form of a double; deterministic, so files
/// built from the same values are byte-identical.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

} // namespace actime::detail

#endif // ACTIME_SRC_FORMAT_HPP
