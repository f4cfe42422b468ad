#ifndef MCG_BASE_HPP_
#define MCG_BASE_HPP_

#include <stdexcept>
#include <string>

namespace mcg {

// Library-wide error type. Preconditions and malformed inputs throw this
// (or a subclass) with a human-readable message.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input text did not parse; `position` is a 0-based offset into the input.
struct parse_error : error {
  size_t position;
  parse_error(const std::string& msg, size_t pos)
      : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// A size guard was exceeded (order caps, vertex caps, cycle ceilings).
struct guard_error : error {
  explicit guard_error(const std::string& msg) : error(msg) {}
};

}  // namespace mcg

#endif  // MCG_BASE_HPP_
