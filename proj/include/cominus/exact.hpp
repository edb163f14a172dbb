#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cominus {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an internal cross-check fails (a bug, or input that violates
/// a documented precondition such as Weyl invariance).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const Rational& v) { return v.str(); }

/// Binomial coefficient as an exact integer; zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// Smallest integer m >= 0 with m*m >= x.
std::int64_t ceil_sqrt(std::int64_t x);

/// True iff x is a perfect square (x >= 0).
bool is_perfect_square(std::int64_t x);

}  // namespace cominus
