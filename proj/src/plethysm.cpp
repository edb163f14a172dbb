#include "cominus/plethysm.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace cominus {

std::string to_string(DecompositionMethod m) {
  switch (m) {
    case DecompositionMethod::CauchyA: return "CauchyA";
    case DecompositionMethod::HooksC: return "HooksC";
    case DecompositionMethod::HooksD: return "HooksD";
    case DecompositionMethod::VectorQuadric: return "VectorQuadric";
    case DecompositionMethod::WeightDP: return "WeightDP";
    case DecompositionMethod::WeightDPDual: return "WeightDPDual";
  }
  return "?";
}

BigInt WeightMultiset::total() const {
  BigInt t = 0;
  for (const auto& e : entries) t += e.mult;
  return t;
}

BigInt DecompositionReport::rank() const {
  BigInt t = 0;
  for (const auto& s : summands) t += s.levi_dim;
  return t;
}

namespace {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Weights packed into one 128-bit integer, each coordinate offset to be
// nonnegative.  Every partial subset sum stays inside the per-coordinate
// bounds, so adding a packed signed delta never carries between fields.
struct PackedCodec {
  using Key = unsigned __int128;
  using Delta = __int128;
  struct Hash {
    std::size_t operator()(Key k) const noexcept {
      return mix64(static_cast<std::uint64_t>(k) ^ mix64(static_cast<std::uint64_t>(k >> 64)));
    }
  };

  std::vector<int> lo;
  std::vector<int> shift;
  std::vector<int> bits;

  static std::optional<PackedCodec> make(const std::vector<Weight>& fibers, int rank) {
    PackedCodec c;
    c.lo.assign(rank, 0);
    std::vector<int> hi(rank, 0);
    for (const auto& f : fibers)
      for (int i = 0; i < rank; ++i) (f[i] < 0 ? c.lo[i] : hi[i]) += f[i];
    int total = 0;
    for (int i = 0; i < rank; ++i) {
      c.shift.push_back(total);
      c.bits.push_back(std::bit_width(static_cast<unsigned>(hi[i] - c.lo[i])));
      total += c.bits.back();
    }
    if (total > 127) return std::nullopt;
    return c;
  }

  Key encode(const Weight& w) const {
    Key k = 0;
    for (std::size_t i = 0; i < lo.size(); ++i) k |= static_cast<Key>(w[i] - lo[i]) << shift[i];
    return k;
  }
  Weight decode(Key k) const {
    Weight w(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
      const Key mask = (Key{1} << bits[i]) - 1;
      w[i] = static_cast<int>((k >> shift[i]) & mask) + lo[i];
    }
    return w;
  }
  Delta delta(const Weight& f) const {
    Delta d = 0;
    for (std::size_t i = 0; i < lo.size(); ++i) d += static_cast<Delta>(f[i]) * (Delta{1} << shift[i]);
    return d;
  }
  static Key add(Key k, Delta d) { return k + static_cast<Key>(d); }
  int coord(Key k, int i) const {
    const Key mask = (Key{1} << bits[i]) - 1;
    return static_cast<int>((k >> shift[i]) & mask) + lo[i];
  }
};

// Fallback for ranks too large to pack.
struct WeightCodec {
  using Key = Weight;
  using Delta = Weight;
  using Hash = WeightHash;
  Key encode(const Weight& w) const { return w; }
  Weight decode(const Key& k) const { return k; }
  Delta delta(const Weight& f) const { return f; }
  static Key add(const Key& k, const Delta& d) { return k + d; }
  int coord(const Key& k, int i) const { return k[i]; }
};

template <class Codec>
std::vector<std::vector<WeightMult>> run_dp(const Codec& codec, const std::vector<Weight>& fibers, int rank,
                                            int max_p, bool dominant_only, NodeSet levi) {
  using Map = std::unordered_map<typename Codec::Key, std::int64_t, typename Codec::Hash>;
  std::vector<Map> layers(max_p + 1);
  layers[0][codec.encode(Weight(rank))] = 1;
  // When only Levi-dominant weights are wanted, a partial sum is dropped
  // once some Levi coordinate is too negative for the remaining fibers
  // to repair.
  std::vector<int> levi_nodes;
  for (int i = 0; i < rank; ++i)
    if (contains(levi, i)) levi_nodes.push_back(i);
  std::vector<int> headroom(rank, 0);
  for (const auto& f : fibers)
    for (int i = 0; i < rank; ++i) headroom[i] += std::max(f[i], 0);
  int seen = 0;
  for (const auto& f : fibers) {
    const auto d = codec.delta(f);
    ++seen;
    for (int i = 0; i < rank; ++i) headroom[i] -= std::max(f[i], 0);
    for (int p = std::min(seen, max_p); p >= 1; --p) {
      Map& dst = layers[p];
      for (const auto& [key, m] : layers[p - 1]) dst[Codec::add(key, d)] += m;
    }
    if (!dominant_only) continue;
    for (int p = 1; p <= std::min(seen, max_p); ++p)
      std::erase_if(layers[p], [&](const auto& entry) {
        for (int i : levi_nodes)
          if (codec.coord(entry.first, i) + headroom[i] < 0) return true;
        return false;
      });
  }
  std::vector<std::vector<WeightMult>> out(max_p + 1);
  for (int p = 0; p <= max_p; ++p) {
    for (const auto& [key, m] : layers[p]) {
      Weight w = codec.decode(key);
      if (!dominant_only || is_dominant(w, levi)) out[p].push_back({std::move(w), m});
    }
    Map().swap(layers[p]);
    std::sort(out[p].begin(), out[p].end(),
              [](const WeightMult& a, const WeightMult& b) { return a.weight < b.weight; });
  }
  return out;
}

std::vector<Weight> fiber_weights(const GrassmannianSpec& spec) {
  std::vector<Weight> out;
  for (const auto& r : nilradical_roots(spec)) out.push_back(-r);
  return out;
}

std::vector<std::vector<WeightMult>> omega_weights(const GrassmannianSpec& spec, int max_p, bool dominant_only) {
  if (max_p < 0 || max_p > spec.dim()) throw std::invalid_argument("p out of range (need 0 <= p <= dim X)");
  const auto fibers = fiber_weights(spec);
  const int rank = spec.ambient().rank();
  if (auto packed = PackedCodec::make(fibers, rank))
    return run_dp(*packed, fibers, rank, max_p, dominant_only, spec.levi_nodes());
  return run_dp(WeightCodec{}, fibers, rank, max_p, dominant_only, spec.levi_nodes());
}

// Integer functional strictly increasing along positive Levi roots: the
// sum of the Levi simple-root coordinates, cleared of denominators.
std::vector<std::int64_t> levi_height_functional(const RootSystem& rs, NodeSet levi) {
  const int r = rs.rank();
  std::vector<Rational> h(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (contains(levi, j)) h[i] += rs.inverse_cartan()[i][j];
  BigInt den = 1;
  for (const auto& x : h) den = boost::multiprecision::lcm(den, denominator(x));
  std::vector<std::int64_t> out(r);
  for (int i = 0; i < r; ++i) out[i] = static_cast<std::int64_t>(numerator(Rational(h[i] * den)));
  return out;
}

void sort_by_weight(std::vector<IrreducibleSummand>& v) {
  std::stable_sort(v.begin(), v.end(), [](const IrreducibleSummand& a, const IrreducibleSummand& b) {
    return a.highest_weight < b.highest_weight;
  });
}

GrassmannianSpec checked_grass(int k, int n, int p) {
  auto spec = make_grass(k, n);
  if (p < 0 || p > spec.dim()) throw std::invalid_argument("p out of range (need 0 <= p <= k(n-k))");
  return spec;
}

}  // namespace

WeightMultiset omega_p_weights(const GrassmannianSpec& spec, int p) {
  auto grades = omega_weights(spec, p, false);
  return {p, std::move(grades[p])};
}

std::vector<std::vector<WeightMult>> omega_dominant_weights(const GrassmannianSpec& spec, int max_p) {
  return omega_weights(spec, max_p, true);
}

int twist_via_lemma(const GrassmannianSpec& spec, const Weight& levi_weight, int mu_size) {
  const auto& rs = spec.ambient();
  const int k = spec.k_index();
  if (static_cast<int>(levi_weight.rank()) != rs.rank()) throw std::invalid_argument("twist_via_lemma: rank mismatch");
  if (levi_weight[k] != 0)
    throw std::invalid_argument("twist_via_lemma: Levi weight has a nonzero lambda_k coordinate");
  const Weight lam_k = Weight::fundamental(rs.rank(), spec.marked_node());
  const Rational a =
      pairing(mu_size * spec.cotangent_weight() - levi_weight, lam_k, rs) / pairing(lam_k, lam_k, rs);
  if (denominator(a) != 1)
    throw ConsistencyError("twist coefficient " + to_string(a) + " is not an integer for " + levi_weight.pretty());
  return static_cast<int>(numerator(a));
}

IrreducibleSummand make_summand(const GrassmannianSpec& spec, const Weight& highest_weight, int p) {
  IrreducibleSummand s;
  s.highest_weight = highest_weight;
  s.levi_dim = weyl_dim(highest_weight, spec.ambient(), spec.levi_nodes());
  Weight levi_part = highest_weight;
  levi_part[spec.k_index()] = 0;
  s.twist_check = twist_via_lemma(spec, levi_part, p);
  return s;
}

std::vector<IrreducibleSummand> decompose_dominant(std::vector<WeightMult> dominant, const GrassmannianSpec& spec,
                                                   int p) {
  const auto& rs = spec.ambient();
  const NodeSet levi = spec.levi_nodes();
  const auto hv = levi_height_functional(rs, levi);
  auto height = [&](const Weight& w) {
    std::int64_t h = 0;
    for (int i = 0; i < rs.rank(); ++i) h += hv[i] * w[i];
    return h;
  };
  // Highest first; ties broken by the lexicographically largest weight.
  std::map<std::pair<std::int64_t, Weight>, std::int64_t, std::greater<>> pool;
  for (auto& wm : dominant) {
    if (!is_dominant(wm.weight, levi))
      throw std::invalid_argument("decompose: " + wm.weight.pretty() + " is not Levi-dominant");
    if (wm.mult < 0) throw std::invalid_argument("decompose: negative multiplicity");
    if (wm.mult) pool[{height(wm.weight), std::move(wm.weight)}] += wm.mult;
  }
  std::vector<IrreducibleSummand> out;
  while (!pool.empty()) {
    const Weight hw = pool.begin()->first.second;
    const std::int64_t copies = pool.begin()->second;
    for (const auto& dm : dominant_multiplicities(hw, rs, levi)) {
      auto it = pool.find({height(dm.weight), dm.weight});
      if (it == pool.end() || it->second < copies * dm.mult)
        throw ConsistencyError("decompose: multiplicity of " + dm.weight.pretty() + " would go negative");
      it->second -= copies * dm.mult;
      if (it->second == 0) pool.erase(it);
    }
    const auto s = make_summand(spec, hw, p);
    for (std::int64_t c = 0; c < copies; ++c) out.push_back(s);
  }
  sort_by_weight(out);
  return out;
}

std::vector<IrreducibleSummand> decompose(const WeightMultiset& ws, const GrassmannianSpec& spec) {
  std::vector<WeightMult> dominant;
  const NodeSet levi = spec.levi_nodes();
  for (const auto& e : ws.entries)
    if (is_dominant(e.weight, levi)) dominant.push_back(e);
  auto out = decompose_dominant(std::move(dominant), spec, ws.grade);
  BigInt covered = 0;
  for (const auto& s : out) covered += s.levi_dim;
  if (covered != ws.total()) throw ConsistencyError("decompose: input multiset is not Levi-invariant");
  return out;
}

namespace {

std::vector<PartitionSummand> cauchy_for(const GrassmannianSpec& spec, int p) {
  const int k = spec.params()[0], n = spec.params()[1];
  std::vector<PartitionSummand> out;
  for (auto& mu : partitions_in_box(p, k, n - k)) {
    // e-coordinates (-mu_k, ..., -mu_1; mu'_1, ..., mu'_{n-k})
    const Partition conj = dual(mu);
    std::vector<int> e(n);
    for (int i = 0; i < k; ++i) e[i] = -mu.part(k - i);
    for (int j = 0; j < n - k; ++j) e[k + j] = conj.part(j + 1);
    Weight w(n - 1);
    for (int i = 0; i + 1 < n; ++i) w[i] = e[i] - e[i + 1];
    auto s = make_summand(spec, w, p);
    s.partition = mu;
    out.push_back({std::move(mu), std::move(s)});
  }
  return out;
}

}  // namespace

std::vector<PartitionSummand> cauchy_decompose(int k, int n, int p) { return cauchy_for(checked_grass(k, n, p), p); }

std::vector<PartitionSummand> hooks_decompose(const GrassmannianSpec& spec, int p) {
  const bool lagrangian = spec.family() == SpaceFamily::Lagrangian;
  if (!lagrangian && spec.family() != SpaceFamily::Spinor)
    throw std::invalid_argument("hooks_decompose needs IG:n or OG:n");
  if (p < 0 || p > spec.dim()) throw std::invalid_argument("p out of range (need 0 <= p <= dim X)");
  const int n = spec.ambient().rank();
  std::vector<PartitionSummand> out;
  for (auto& mu : lagrangian ? hooks_q1(p, n) : hooks_qm1(p, n)) {
    Weight w(n);
    for (int i = 1; i < n; ++i) w[n - i - 1] = mu.part(i) - mu.part(i + 1);
    w[n - 1] = lagrangian ? -mu.part(1) : -mu.part(1) - mu.part(2);
    auto s = make_summand(spec, w, p);
    s.partition = mu;
    out.push_back({std::move(mu), std::move(s)});
  }
  return out;
}

std::vector<IrreducibleSummand> vector_quadric_decompose(const GrassmannianSpec& spec, int p) {
  if (!spec.is_quadric()) throw std::invalid_argument("vector_quadric_decompose needs Q:m");
  if (p < 0 || p > spec.dim()) throw std::invalid_argument("p out of range (need 0 <= p <= dim X)");
  const int r = spec.ambient().rank();
  const bool odd = spec.family() == SpaceFamily::QuadricOdd;
  // Levi weights of the vector representation in decreasing order, as
  // signed e-indices (0 stands for the zero weight of the odd case).
  std::vector<int> order;
  for (int j = 2; j <= r; ++j) order.push_back(j);
  if (odd) order.push_back(0);
  for (int j = r; j >= 2; --j) order.push_back(-j);

  auto to_fund = [&](const std::vector<int>& e) {
    Weight w(r);
    for (int i = 0; i + 1 < r; ++i) w[i] = e[i] - e[i + 1];
    w[r - 1] = odd ? 2 * e[r - 1] : e[r - 2] + e[r - 1];
    return w;
  };
  auto top_sum = [&](int count) {
    std::vector<int> e(r, 0);
    e[0] = -p;
    for (int i = 0; i < count; ++i) {
      const int j = order[i];
      if (j > 0) ++e[j - 1];
      if (j < 0) --e[-j - 1];
    }
    return e;
  };

  std::vector<IrreducibleSummand> out;
  auto e = top_sum(p);
  out.push_back(make_summand(spec, to_fund(e), p));
  if (!odd && p == r - 1) {
    e[r - 1] = -e[r - 1];
    out.push_back(make_summand(spec, to_fund(e), p));
  }
  sort_by_weight(out);
  return out;
}

std::vector<IrreducibleSummand> dual_summands(const GrassmannianSpec& spec,
                                              const std::vector<IrreducibleSummand>& summands, int p) {
  const auto& rs = spec.ambient();
  const Weight canonical = -spec.index_c1() * Weight::fundamental(rs.rank(), spec.marked_node());
  std::vector<IrreducibleSummand> out;
  for (const auto& s : summands)
    out.push_back(make_summand(spec, to_dominant(-s.highest_weight, rs, spec.levi_nodes()) + canonical,
                               spec.dim() - p));
  sort_by_weight(out);
  return out;
}

namespace {

std::optional<DecompositionMethod> fast_path(const GrassmannianSpec& spec) {
  switch (spec.family()) {
    case SpaceFamily::Grass: return DecompositionMethod::CauchyA;
    case SpaceFamily::Lagrangian: return DecompositionMethod::HooksC;
    case SpaceFamily::Spinor: return DecompositionMethod::HooksD;
    case SpaceFamily::QuadricOdd:
    case SpaceFamily::QuadricEven: return DecompositionMethod::VectorQuadric;
    default: return std::nullopt;
  }
}

std::vector<IrreducibleSummand> run_fast_path(const GrassmannianSpec& spec, DecompositionMethod m, int p) {
  std::vector<IrreducibleSummand> out;
  switch (m) {
    case DecompositionMethod::CauchyA:
      for (auto& ps : cauchy_for(spec, p)) out.push_back(std::move(ps.summand));
      break;
    case DecompositionMethod::HooksC:
    case DecompositionMethod::HooksD:
      for (auto& ps : hooks_decompose(spec, p)) out.push_back(std::move(ps.summand));
      break;
    case DecompositionMethod::VectorQuadric: return vector_quadric_decompose(spec, p);
    default: throw std::logic_error("not a fast path");
  }
  sort_by_weight(out);
  return out;
}

DecompositionReport make_report(const GrassmannianSpec& spec, int p, DecompositionMethod m,
                                std::vector<IrreducibleSummand> summands) {
  DecompositionReport r;
  r.spec = spec;
  r.p = p;
  r.method = m;
  r.summands = std::move(summands);
  r.expected_rank = binomial(spec.dim(), p);
  return r;
}

}  // namespace

DecompositionReport decompose_omega(const GrassmannianSpec& spec, int p, const DecomposeOptions& opts) {
  if (p < 0 || p > spec.dim()) throw std::invalid_argument("p out of range (need 0 <= p <= dim X)");
  if (auto m = fast_path(spec); m && !opts.force_dp) return make_report(spec, p, *m, run_fast_path(spec, *m, p));
  if (opts.use_duality && 2 * p > spec.dim()) {
    const int q = spec.dim() - p;
    auto grades = omega_dominant_weights(spec, q);
    auto base = decompose_dominant(std::move(grades[q]), spec, q);
    return make_report(spec, p, DecompositionMethod::WeightDPDual, dual_summands(spec, base, q));
  }
  auto grades = omega_dominant_weights(spec, p);
  return make_report(spec, p, DecompositionMethod::WeightDP, decompose_dominant(std::move(grades[p]), spec, p));
}

std::vector<DecompositionReport> decompose_all(const GrassmannianSpec& spec, const DecomposeOptions& opts) {
  return decompose_range(spec, spec.dim(), opts);
}

std::vector<DecompositionReport> decompose_range(const GrassmannianSpec& spec, int max_p,
                                                 const DecomposeOptions& opts) {
  const int dim = spec.dim();
  if (max_p < 0 || max_p > dim) throw std::invalid_argument("p out of range (need 0 <= p <= dim X)");
  std::vector<DecompositionReport> out;
  if (auto m = fast_path(spec); m && !opts.force_dp) {
    for (int p = 0; p <= max_p; ++p) out.push_back(make_report(spec, p, *m, run_fast_path(spec, *m, p)));
    return out;
  }
  // Grades above dim/2 come from their complements, which all lie below.
  const int top = opts.use_duality ? std::min(max_p, dim / 2) : max_p;
  auto grades = omega_dominant_weights(spec, top);
  std::vector<std::vector<IrreducibleSummand>> direct(top + 1);
  for (int p = 0; p <= top; ++p) direct[p] = decompose_dominant(std::move(grades[p]), spec, p);
  for (int p = 0; p <= max_p; ++p) {
    if (p <= top)
      out.push_back(make_report(spec, p, DecompositionMethod::WeightDP, direct[p]));
    else
      out.push_back(
          make_report(spec, p, DecompositionMethod::WeightDPDual, dual_summands(spec, direct[dim - p], dim - p)));
  }
  return out;
}

}  // namespace cominus
