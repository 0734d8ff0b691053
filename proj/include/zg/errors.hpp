#ifndef ZG_ERRORS_HPP
#define ZG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zg {

// Error taxonomy mirrors the CLI exit-code contract:
//   MathError   -> exit 1 (inconsistent mathematical input, e.g. non-homomorphism)
//   BudgetError -> exit 2 (resource cap exceeded: cosets, order cap, memory budget)
//   ParseError  -> exit 3 (malformed DSL or JSON input)
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MathError : Error {
  using Error::Error;
};

struct BudgetError : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t position;
  explicit ParseError(const std::string& msg, std::size_t pos = 0)
      : Error(msg), position(pos) {}
};

}  // namespace zg

#endif
