#pragma once

// Brute-force reference computations that share no code with the library's
// fast paths.

#include "cominus/weight.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

/// Weight multiset of the irreducible A_r module with highest weight hw,
/// counted by semistandard tableaux with entries 1..r+1.
inline std::map<std::vector<int>, std::int64_t> type_a_character(const std::vector<int>& hw) {
  const int r = static_cast<int>(hw.size());
  std::vector<int> shape(r, 0);
  for (int i = r - 1, acc = 0; i >= 0; --i) shape[i] = (acc += hw[i]);
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  std::vector<std::vector<int>> tab(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) tab[i].assign(shape[i], 0);
  std::map<std::vector<int>, std::int64_t> out;
  std::function<void(std::size_t, int)> fill = [&](std::size_t row, int col) {
    if (row == shape.size()) {
      std::vector<int> content(r + 1, 0);
      for (const auto& t : tab)
        for (int x : t) ++content[x - 1];
      std::vector<int> w(r);
      for (int i = 0; i < r; ++i) w[i] = content[i] - content[i + 1];
      ++out[w];
      return;
    }
    if (col == shape[row]) return fill(row + 1, 0);
    int lo = col > 0 ? tab[row][col - 1] : 1;
    if (row > 0) lo = std::max(lo, tab[row - 1][col] + 1);
    for (int x = lo; x <= r + 1; ++x) {
      tab[row][col] = x;
      fill(row, col + 1);
    }
  };
  if (shape.empty()) {
    out[std::vector<int>(r, 0)] = 1;
    return out;
  }
  fill(0, 0);
  return out;
}

/// All partitions of `size` (any shape), by brute recursion.
inline std::vector<std::vector<int>> all_partitions(int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int x = std::min(left, cap); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(size, size);
  return out;
}

/// Frobenius arms/legs counted cell by cell.
inline std::pair<std::vector<int>, std::vector<int>> frobenius_cells(const std::vector<int>& mu) {
  std::vector<int> arms, legs;
  for (std::size_t i = 0; i < mu.size() && mu[i] > static_cast<int>(i); ++i) {
    arms.push_back(mu[i] - static_cast<int>(i) - 1);
    int leg = 0;
    for (std::size_t j = i + 1; j < mu.size(); ++j)
      if (mu[j] > static_cast<int>(i)) ++leg;
    legs.push_back(leg);
  }
  return {arms, legs};
}

}  // namespace oracle
