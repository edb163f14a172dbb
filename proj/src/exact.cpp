#include "cominus/exact.hpp"

namespace cominus {

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::int64_t ceil_sqrt(std::int64_t x) {
  if (x <= 0) return 0;
  // integer Newton iteration for floor(sqrt(x)), then round up
  std::int64_t r = x;
  std::int64_t y = (r + 1) / 2;
  while (y < r) {
    r = y;
    y = (r + x / r) / 2;
  }
  return r * r == x ? r : r + 1;
}

bool is_perfect_square(std::int64_t x) {
  if (x < 0) return false;
  const std::int64_t r = ceil_sqrt(x);
  return r * r == x;
}

}  // namespace cominus
