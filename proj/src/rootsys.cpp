#include "cominus/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace cominus {

namespace {

std::vector<std::vector<int>> build_cartan(const LieType& t) {
  const int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int a, int b) {  // 1-based simply-laced edge
    c[a - 1][b - 1] = -1;
    c[b - 1][a - 1] = -1;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      // alpha_n short
      c[n - 2][n - 1] = -2;
      c[n - 1][n - 2] = -1;
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      // alpha_n long
      c[n - 2][n - 1] = -1;
      c[n - 1][n - 2] = -2;
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case Family::E6:
    case Family::E7:
      link(1, 3);
      link(3, 4);
      link(4, 5);
      link(5, 6);
      link(2, 4);
      if (t.family == Family::E7) link(6, 7);
      break;
  }
  return c;
}

std::vector<int> build_symmetrizer(const LieType& t) {
  std::vector<int> s(t.rank, 1);
  if (t.family == Family::B) {
    std::fill(s.begin(), s.end() - 1, 2);
  } else if (t.family == Family::C) {
    s.back() = 2;
  }
  return s;
}

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw ConsistencyError("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

// (x, alpha) in the integral form (lambda_i, alpha_j) = delta_ij * sym_j.
std::int64_t form_with_root(const Weight& x, const PositiveRoot& a, const std::vector<int>& sym) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < sym.size(); ++j)
    if (a.simple[j]) s += static_cast<std::int64_t>(a.simple[j]) * sym[j] * x[j];
  return s;
}

}  // namespace

LieType LieType::make(Family family, int rank) {
  switch (family) {
    case Family::A:
      if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
      break;
    case Family::B:
    case Family::C:
      if (rank < 2) throw std::invalid_argument("types B and C need rank >= 2");
      break;
    case Family::D:
      if (rank < 3) throw std::invalid_argument("type D needs rank >= 3");
      break;
    case Family::E6:
      if (rank != 6) throw std::invalid_argument("E6 has rank 6");
      break;
    case Family::E7:
      if (rank != 7) throw std::invalid_argument("E7 has rank 7");
      break;
  }
  if (rank > 60) throw std::invalid_argument("rank too large");
  return LieType{family, rank};
}

std::string LieType::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::C: return "C" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
  }
  return "?";
}

RootSystem::RootSystem(LieType type)
    : type_(LieType::make(type.family, type.rank)),
      cartan_(build_cartan(type_)),
      inverse_cartan_(invert(cartan_)),
      sym_(build_symmetrizer(type_)) {
  const int n = rank();
  const int smax = *std::max_element(sym_.begin(), sym_.end());
  for (int s : sym_) norms_.push_back(Rational(2 * s, smax));
  for (int i = 0; i < n; ++i) simple_fund_.emplace_back(cartan_[i]);

  // Closure from the simple roots, layer by layer in height: beta + alpha_i
  // is a root iff the alpha_i-string through beta extends upward, i.e.
  // q = r - <beta, alpha_i^vee> > 0 with r the downward string length.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    layer.push_back(e);
  }
  std::vector<std::vector<int>> all;
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& b : layer) {
      all.push_back(b);
      const Weight f = from_simple_coords(b);
      for (int i = 0; i < n; ++i) {
        int down = 0;
        std::vector<int> c = b;
        while (true) {
          --c[i];
          if (seen.count(c)) ++down;
          else break;
        }
        if (down - f[i] > 0) {
          std::vector<int> up = b;
          ++up[i];
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    int hx = 0, hy = 0;
    for (int v : x) hx += v;
    for (int v : y) hy += v;
    return hx != hy ? hx < hy : x > y;
  });
  for (auto& s : all) {
    PositiveRoot r;
    r.fund = from_simple_coords(s);
    for (int j = 0; j < n; ++j) {
      if (s[j] < 0) throw ConsistencyError("negative coefficient in a positive root");
      r.height += s[j];
      if (s[j]) r.support |= node_bit(j);
    }
    r.simple = std::move(s);
    roots_.push_back(std::move(r));
  }
  if (roots_.size() != expected_positive_root_count())
    throw ConsistencyError("positive root count mismatch for " + type_.name());
}

std::vector<const PositiveRoot*> RootSystem::positive_roots(NodeSet nodes) const {
  std::vector<const PositiveRoot*> out;
  for (const auto& r : roots_)
    if ((r.support & ~nodes) == 0) out.push_back(&r);
  return out;
}

Weight RootSystem::weyl_vector() const { return Weight(std::vector<int>(rank(), 1)); }

Weight RootSystem::from_simple_coords(const std::vector<int>& simple) const {
  if (static_cast<int>(simple.size()) != rank()) throw std::invalid_argument("rank mismatch");
  Weight w(rank());
  for (int i = 0; i < rank(); ++i)
    if (simple[i])
      for (int j = 0; j < rank(); ++j) w[j] += simple[i] * cartan_[i][j];
  return w;
}

std::vector<Rational> RootSystem::to_simple_coords(const Weight& w) const {
  if (static_cast<int>(w.rank()) != rank()) throw std::invalid_argument("rank mismatch");
  // w = sum_i w_i lambda_i and lambda_i = sum_m (C^-1)_{im} alpha_m
  std::vector<Rational> out(rank());
  for (int m = 0; m < rank(); ++m)
    for (int i = 0; i < rank(); ++i)
      if (w[i]) out[m] += w[i] * inverse_cartan_[i][m];
  return out;
}

std::size_t RootSystem::expected_positive_root_count() const {
  const std::size_t r = rank();
  switch (type_.family) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B:
    case Family::C: return r * r;
    case Family::D: return r * (r - 1);
    case Family::E6: return 36;
    case Family::E7: return 63;
  }
  return 0;
}

Rational pairing(const Weight& a, const Weight& b, const RootSystem& rs) {
  const int n = rs.rank();
  if (static_cast<int>(a.rank()) != n || static_cast<int>(b.rank()) != n)
    throw std::invalid_argument("pairing: weight length does not match the rank");
  // <lambda_i, lambda_j> = (C^-1)_{ij} * |alpha_j|^2 / 2
  Rational s = 0;
  for (int i = 0; i < n; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < n; ++j) {
      if (!b[j]) continue;
      s += a[i] * b[j] * rs.inverse_cartan()[i][j] * rs.simple_root_norms()[j] / 2;
    }
  }
  return s;
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.coords().begin(), w.coords().end(), [](int v) { return v >= 0; });
}

bool is_dominant(const Weight& w, NodeSet nodes) {
  for (std::size_t i = 0; i < w.rank(); ++i)
    if (contains(nodes, static_cast<int>(i)) && w[i] < 0) return false;
  return true;
}

Weight reflect(const Weight& w, int node, const RootSystem& rs) {
  Weight r = w;
  const int c = w[node];
  if (c == 0) return r;
  const auto& row = rs.cartan_matrix()[node];
  for (int j = 0; j < rs.rank(); ++j) r[j] -= c * row[j];
  return r;
}

Weight to_dominant(Weight w, const RootSystem& rs, NodeSet nodes, int& reflections) {
  reflections = 0;
  const int n = rs.rank();
  while (true) {
    int i = 0;
    while (i < n && !(contains(nodes, i) && w[i] < 0)) ++i;
    if (i == n) return w;
    const int c = w[i];
    const auto& row = rs.cartan_matrix()[i];
    for (int j = 0; j < n; ++j) w[j] -= c * row[j];
    ++reflections;
  }
}

Weight to_dominant(Weight w, const RootSystem& rs, NodeSet nodes) {
  int unused = 0;
  return to_dominant(std::move(w), rs, nodes, unused);
}

BigInt weyl_dim(const Weight& w, const RootSystem& rs) { return weyl_dim(w, rs, rs.all_nodes()); }

BigInt weyl_dim(const Weight& w, const RootSystem& rs, NodeSet nodes) {
  if (static_cast<int>(w.rank()) != rs.rank()) throw std::invalid_argument("weyl_dim: rank mismatch");
  if (!is_dominant(w, nodes)) throw std::invalid_argument("weyl_dim: weight " + w.str() + " is not dominant");
  // prod over positive roots of (w + rho, alpha) / (rho, alpha); only nodes
  // inside the support of alpha contribute, so rho may be taken all-ones.
  BigInt num = 1, den = 1;
  const auto& sym = rs.symmetrizer();
  for (const auto* a : rs.positive_roots(nodes)) {
    std::int64_t top = 0, bottom = 0;
    for (int j = 0; j < rs.rank(); ++j) {
      if (!a->simple[j]) continue;
      top += static_cast<std::int64_t>(a->simple[j]) * sym[j] * (w[j] + 1);
      bottom += static_cast<std::int64_t>(a->simple[j]) * sym[j];
    }
    num *= top;
    den *= bottom;
  }
  if (num % den != 0) throw ConsistencyError("Weyl dimension is not an integer");
  return num / den;
}

std::vector<Weight> weyl_orbit(const Weight& w, const RootSystem& rs) {
  return weyl_orbit(w, rs, rs.all_nodes());
}

std::vector<Weight> weyl_orbit(const Weight& w, const RootSystem& rs, NodeSet nodes) {
  if (static_cast<int>(w.rank()) != rs.rank()) throw std::invalid_argument("weyl_orbit: rank mismatch");
  std::unordered_set<Weight, WeightHash> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight v = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rs.rank(); ++i) {
      if (!contains(nodes, i) || v[i] == 0) continue;
      Weight u = reflect(v, i, rs);
      if (seen.insert(u).second) queue.push_back(std::move(u));
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

BigInt weyl_group_order(const RootSystem& rs, NodeSet nodes) {
  // Poincare polynomial at t = 1
  BigInt num = 1, den = 1;
  for (const auto* a : rs.positive_roots(nodes)) {
    num *= a->height + 1;
    den *= a->height;
  }
  return num / den;
}

BigInt orbit_size(const Weight& dominant, const RootSystem& rs, NodeSet nodes) {
  if (!is_dominant(dominant, nodes)) throw std::invalid_argument("orbit_size: weight is not dominant");
  NodeSet stab = 0;
  for (int i = 0; i < rs.rank(); ++i)
    if (contains(nodes, i) && dominant[i] == 0) stab |= node_bit(i);
  return weyl_group_order(rs, nodes) / weyl_group_order(rs, stab);
}

std::vector<WeightMult> dominant_multiplicities(const Weight& hw, const RootSystem& rs,
                                                NodeSet nodes) {
  if (static_cast<int>(hw.rank()) != rs.rank()) throw std::invalid_argument("rank mismatch");
  if (!is_dominant(hw, nodes))
    throw std::invalid_argument("highest weight " + hw.str() + " is not dominant");
  const int n = rs.rank();
  const auto roots = rs.positive_roots(nodes);
  const auto& sym = rs.symmetrizer();

  struct Entry {
    Weight w;
    std::vector<int> depth;  // hw - w in simple-root coordinates
    int height{0};
    std::int64_t mult{0};
  };
  std::vector<Entry> entries;
  std::unordered_map<Weight, std::size_t, WeightHash> index;
  entries.push_back({hw, std::vector<int>(n, 0), 0, 1});
  index.emplace(hw, 0);
  // Dominant weights below hw are connected to hw through dominant weights
  // differing by positive roots, so a search inside the chamber finds all.
  for (std::size_t cur = 0; cur < entries.size(); ++cur) {
    for (const auto* a : roots) {
      Weight v = entries[cur].w - a->fund;
      if (!is_dominant(v, nodes) || index.count(v)) continue;
      Entry e{std::move(v), entries[cur].depth, entries[cur].height + a->height, 0};
      for (int j = 0; j < n; ++j) e.depth[j] += a->simple[j];
      index.emplace(e.w, entries.size());
      entries.push_back(std::move(e));
    }
  }
  std::vector<std::size_t> order(entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return entries[a].height < entries[b].height; });

  auto mult_of = [&](const Weight& v) -> std::int64_t {
    auto it = index.find(to_dominant(v, rs, nodes));
    return it == index.end() ? 0 : entries[it->second].mult;
  };

  for (std::size_t idx : order) {
    Entry& e = entries[idx];
    if (e.height == 0) continue;
    // (hw + rho, hw + rho) - (mu + rho, mu + rho) = (hw - mu, hw + mu + 2 rho)
    std::int64_t lhs = 0;
    for (int j = 0; j < n; ++j)
      if (e.depth[j]) lhs += static_cast<std::int64_t>(e.depth[j]) * sym[j] * (hw[j] + e.w[j] + 2);
    std::int64_t rhs = 0;
    for (const auto* a : roots) {
      Weight v = e.w;
      for (int t = 1;; ++t) {
        v += a->fund;
        const std::int64_t m = mult_of(v);
        if (m == 0) break;
        rhs += m * form_with_root(v, *a, sym);
      }
    }
    rhs *= 2;
    if (lhs <= 0 || rhs % lhs != 0)
      throw ConsistencyError("Freudenthal recursion produced a non-integer multiplicity");
    e.mult = rhs / lhs;
  }

  std::vector<WeightMult> out;
  out.reserve(entries.size());
  for (std::size_t idx : order) out.push_back({entries[idx].w, entries[idx].mult});
  return out;
}

std::vector<WeightMult> weight_system(const Weight& hw, const RootSystem& rs) {
  return weight_system(hw, rs, rs.all_nodes());
}

std::vector<WeightMult> weight_system(const Weight& hw, const RootSystem& rs, NodeSet nodes) {
  std::vector<WeightMult> out;
  for (const auto& dm : dominant_multiplicities(hw, rs, nodes))
    for (auto& w : weyl_orbit(dm.weight, rs, nodes)) out.push_back({std::move(w), dm.mult});
  std::sort(out.begin(), out.end(), [](const WeightMult& a, const WeightMult& b) { return a.weight < b.weight; });
  return out;
}

}  // namespace cominus
