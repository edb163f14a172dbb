#include "cominus/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cominus {

namespace {

std::shared_ptr<const RootSystem> ambient_for(Family f, int rank) {
  return std::make_shared<const RootSystem>(LieType::make(f, rank));
}

}  // namespace

std::string to_string(SpaceFamily f) {
  switch (f) {
    case SpaceFamily::Grass: return "Grass";
    case SpaceFamily::QuadricOdd: return "QuadricOdd";
    case SpaceFamily::QuadricEven: return "QuadricEven";
    case SpaceFamily::Lagrangian: return "Lagrangian";
    case SpaceFamily::Spinor: return "Spinor";
    case SpaceFamily::Cayley: return "Cayley";
    case SpaceFamily::Freudenthal: return "Freudenthal";
  }
  return "?";
}

GrassmannianSpec make_spec(SpaceFamily family, std::vector<int> params) {
  GrassmannianSpec s;
  s.family_ = family;
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw std::invalid_argument(to_string(family) + " takes " + std::to_string(count) + " parameter(s)");
  };
  switch (family) {
    case SpaceFamily::Grass: {
      need(2);
      const int k = params[0], n = params[1];
      if (n < 2) throw std::invalid_argument("n out of range (need n >= 2)");
      if (k < 1 || k >= n) throw std::invalid_argument("k out of range (need 1 <= k < n)");
      s.ambient_ = ambient_for(Family::A, n - 1);
      s.marked_node_ = k;
      break;
    }
    case SpaceFamily::QuadricOdd:
    case SpaceFamily::QuadricEven: {
      need(1);
      const int m = params[0];
      if (m < 3) throw std::invalid_argument("m out of range (need m >= 3)");
      if (m % 2 == 1) {
        s.family_ = SpaceFamily::QuadricOdd;
        s.ambient_ = ambient_for(Family::B, (m + 1) / 2);
      } else {
        s.family_ = SpaceFamily::QuadricEven;
        s.ambient_ = ambient_for(Family::D, (m + 2) / 2);
      }
      s.marked_node_ = 1;
      break;
    }
    case SpaceFamily::Lagrangian:
      need(1);
      if (params[0] < 2) throw std::invalid_argument("n out of range (need n >= 2)");
      s.ambient_ = ambient_for(Family::C, params[0]);
      s.marked_node_ = params[0];
      break;
    case SpaceFamily::Spinor:
      need(1);
      if (params[0] < 3) throw std::invalid_argument("n out of range (need n >= 3)");
      s.ambient_ = ambient_for(Family::D, params[0]);
      s.marked_node_ = params[0];
      break;
    case SpaceFamily::Cayley:
      need(0);
      s.ambient_ = ambient_for(Family::E6, 6);
      s.marked_node_ = 1;
      break;
    case SpaceFamily::Freudenthal:
      need(0);
      s.ambient_ = ambient_for(Family::E7, 7);
      s.marked_node_ = 7;
      break;
  }
  s.params_ = std::move(params);

  const int k = s.k_index();
  const int r = s.ambient_->rank();
  Weight sum(r);
  for (const auto& root : s.ambient_->positive_roots()) {
    if (root.simple[k] == 0) continue;
    if (root.simple[k] != 1) throw ConsistencyError("marked node of " + s.name() + " is not cominuscule");
    s.nilradical_.push_back(&root);
    sum += root.fund;
  }
  s.dim_ = static_cast<int>(s.nilradical_.size());
  for (int i = 0; i < r; ++i)
    if (i != k && sum[i] != 0) throw ConsistencyError("sum of nilradical roots is not a multiple of lambda_k");
  s.index_c1_ = sum[k];
  s.cotangent_ = -s.ambient_->simple_root(k);
  return s;
}

GrassmannianSpec make_grass(int k, int n) { return make_spec(SpaceFamily::Grass, {k, n}); }
GrassmannianSpec make_quadric(int m) { return make_spec(SpaceFamily::QuadricOdd, {m}); }
GrassmannianSpec make_lagrangian(int n) { return make_spec(SpaceFamily::Lagrangian, {n}); }
GrassmannianSpec make_spinor(int n) { return make_spec(SpaceFamily::Spinor, {n}); }
GrassmannianSpec make_cayley() { return make_spec(SpaceFamily::Cayley, {}); }
GrassmannianSpec make_freudenthal() { return make_spec(SpaceFamily::Freudenthal, {}); }

std::string GrassmannianSpec::name() const {
  switch (family_) {
    case SpaceFamily::Grass: return "G:" + std::to_string(params_[0]) + ":" + std::to_string(params_[1]);
    case SpaceFamily::QuadricOdd:
    case SpaceFamily::QuadricEven: return "Q:" + std::to_string(params_[0]);
    case SpaceFamily::Lagrangian: return "IG:" + std::to_string(params_[0]);
    case SpaceFamily::Spinor: return "OG:" + std::to_string(params_[0]);
    case SpaceFamily::Cayley: return "E6";
    case SpaceFamily::Freudenthal: return "E7";
  }
  return "?";
}

std::string GrassmannianSpec::description() const {
  const std::string quotient = ambient_->type().name() + "/P" + std::to_string(marked_node_);
  switch (family_) {
    case SpaceFamily::Grass:
      return "Grassmannian G(" + std::to_string(params_[0]) + "," + std::to_string(params_[1]) + ") = " + quotient;
    case SpaceFamily::QuadricOdd:
    case SpaceFamily::QuadricEven:
      return "quadric Q^" + std::to_string(params_[0]) + " = " + quotient;
    case SpaceFamily::Lagrangian:
      return "Lagrangian Grassmannian IG(" + std::to_string(params_[0]) + "," + std::to_string(2 * params_[0]) +
             ") = " + quotient;
    case SpaceFamily::Spinor:
      return "spinor variety OG(" + std::to_string(params_[0]) + "," + std::to_string(2 * params_[0]) + ") = " +
             quotient;
    case SpaceFamily::Cayley: return "Cayley plane " + quotient;
    case SpaceFamily::Freudenthal: return "Freudenthal variety " + quotient;
  }
  return quotient;
}

std::string GrassmannianSpec::levi_description() const {
  // Connected components of the diagram minus the marked node, named by
  // node and root counts.
  const int r = ambient_->rank();
  const NodeSet levi = levi_nodes();
  std::vector<int> comp(r, -1);
  int ncomp = 0;
  for (int start = 0; start < r; ++start) {
    if (!contains(levi, start) || comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = ncomp;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < r; ++u)
        if (contains(levi, u) && comp[u] < 0 && ambient_->cartan(v, u) != 0) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
    }
    ++ncomp;
  }
  std::vector<std::string> names;
  for (int c = 0; c < ncomp; ++c) {
    NodeSet nodes = 0;
    int size = 0;
    int long_nodes = 0;
    const auto& sym = ambient_->symmetrizer();
    const int smax = *std::max_element(sym.begin(), sym.end());
    for (int i = 0; i < r; ++i)
      if (comp[i] == c) {
        nodes |= node_bit(i);
        ++size;
        if (sym[i] == smax) ++long_nodes;
      }
    const std::size_t roots = ambient_->positive_roots(nodes).size();
    const std::size_t n = size;
    std::string name;
    if (long_nodes == 0 || long_nodes == size) {
      if (roots == n * (n + 1) / 2) name = "A" + std::to_string(n);
      else if (roots == n * (n - 1)) name = "D" + std::to_string(n);
      else name = "E" + std::to_string(n);
    } else {
      name = (ambient_->type().family == Family::B ? "B" : "C") + std::to_string(n);
    }
    names.push_back(name);
  }
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : "x") + n;
  return (out.empty() ? std::string("trivial") : out) + " + T1";
}

std::vector<Weight> nilradical_roots(const GrassmannianSpec& spec) {
  std::vector<Weight> out;
  out.reserve(spec.nilradical().size());
  for (const auto* r : spec.nilradical()) out.push_back(r->fund);
  return out;
}

std::vector<GrassmannianSpec> catalog_up_to_rank(int max_rank) {
  std::vector<GrassmannianSpec> out;
  for (int n = 2; n - 1 <= max_rank; ++n)
    for (int k = 1; k < n; ++k) out.push_back(make_grass(k, n));
  for (int m = 3;; ++m) {
    const int rank = m % 2 ? (m + 1) / 2 : (m + 2) / 2;
    if (rank > max_rank) break;
    out.push_back(make_quadric(m));
  }
  for (int n = 2; n <= max_rank; ++n) out.push_back(make_lagrangian(n));
  for (int n = 3; n <= max_rank; ++n) out.push_back(make_spinor(n));
  if (max_rank >= 6) out.push_back(make_cayley());
  if (max_rank >= 7) out.push_back(make_freudenthal());
  return out;
}

Table1Record check_table1(const GrassmannianSpec& spec) {
  Table1Record rec;
  rec.space = spec.name();
  rec.dim = spec.dim();
  rec.index_c1 = spec.index_c1();
  rec.cotangent = spec.cotangent_weight();
  const int rank = spec.ambient().rank();
  auto lam = [&](int node) { return Weight::fundamental(rank, node); };
  switch (spec.family()) {
    case SpaceFamily::Grass: {
      const int k = spec.params()[0], n = spec.params()[1];
      rec.expected_dim = k * (n - k);
      rec.expected_c1 = n;
      Weight w = -2 * lam(k);
      if (k > 1) w += lam(k - 1);
      if (k + 1 <= rank) w += lam(k + 1);
      rec.expected_cotangent = w;
      rec.note = "tabulated as G(k,r) with c1 = r; r read as dim V = n";
      break;
    }
    case SpaceFamily::QuadricOdd: {
      const int r = rank;
      rec.expected_dim = 2 * r - 1;
      rec.expected_c1 = 2 * r - 1;
      rec.note = "cotangent tabulated as a bundle only";
      break;
    }
    case SpaceFamily::QuadricEven: {
      const int r = rank;
      rec.expected_dim = 2 * r - 2;
      rec.expected_c1 = 2 * r - 2;
      rec.note = "cotangent tabulated as a bundle only";
      break;
    }
    case SpaceFamily::Lagrangian: {
      const int r = rank;
      rec.expected_dim = r * (r + 1) / 2;
      rec.expected_c1 = r + 1;
      rec.expected_cotangent = 2 * lam(r - 1) - 2 * lam(r);  // S^2 of E_{lambda_{r-1} - lambda_r}
      break;
    }
    case SpaceFamily::Spinor: {
      const int r = rank;
      rec.expected_dim = r * (r - 1) / 2;
      rec.expected_c1 = 2 * r - 2;
      rec.expected_cotangent = lam(r - 2) - 2 * lam(r);  // Lambda^2 of E_{lambda_{r-1} - lambda_r}
      break;
    }
    case SpaceFamily::Cayley:
      rec.expected_dim = 16;
      rec.expected_c1 = 12;
      rec.expected_cotangent = -2 * lam(1) + lam(3);
      break;
    case SpaceFamily::Freudenthal:
      rec.expected_dim = 27;
      rec.expected_c1 = 18;
      rec.expected_cotangent = -2 * lam(7) + lam(6);
      break;
  }
  rec.dim_ok = rec.dim == rec.expected_dim;
  rec.c1_ok = rec.index_c1 == rec.expected_c1;
  rec.cotangent_ok = !rec.expected_cotangent || *rec.expected_cotangent == rec.cotangent;
  return rec;
}

}  // namespace cominus
