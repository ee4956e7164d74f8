#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace kdg {

/// Sentinels: dim of the zero module, sup of an acyclic complex.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min() / 4;
/// inf of an acyclic complex.
inline constexpr int kPlusInfinity = std::numeric_limits<int>::max() / 4;

inline bool is_infinite(int v) { return v == kMinusInfinity || v == kPlusInfinity; }
std::string int_or_infinity(int v);

/// A computation refused to continue past a configured cap (S-pair degree, search budget).
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed job or violated operation precondition caused by user input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InhomogeneousInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace kdg
