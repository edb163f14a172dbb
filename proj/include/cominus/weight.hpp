#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cominus {

/// Integer weight in the fundamental-weight basis (Bourbaki numbering,
/// coordinate i holds the coefficient of lambda_{i+1}).
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : c_(rank, 0) {}
  Weight(std::initializer_list<int> coords) : c_(coords) {}
  explicit Weight(std::vector<int> coords) : c_(std::move(coords)) {}

  /// The fundamental weight lambda_i (1-based node index).
  static Weight fundamental(std::size_t rank, std::size_t node);
  /// Parses the pretty() form, e.g. "-9L1+L2+L3+2L6" or "0".  Throws
  /// std::invalid_argument naming the offending column.
  static Weight parse(std::string_view text, std::size_t rank);

  std::size_t rank() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  std::span<const int> coords() const { return c_; }
  const std::vector<int>& vec() const { return c_; }

  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(int s);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int s, Weight a) { return a *= s; }
  Weight operator-() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    return a.c_ <=> b.c_;
  }

  /// "(-2,0,1,0,0,0)"
  std::string str() const;
  /// "-2L1+L3"; "0" for the zero weight.
  std::string pretty() const;

 private:
  std::vector<int> c_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

}  // namespace cominus
