#include "llv/fixtures.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>

namespace llv {

long sym_dim(int m, int k) {
  if (k < 0) return 0;
  // C(m + k - 1, k)
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (m + i - 1) / i;
  return r;
}

QuadraticForm k3_form() {
  Vec<Rational> d(22, Rational(-1));
  d[0] = d[1] = d[2] = Rational(1);
  return QuadraticForm::diagonal(d);
}

GradedAlgebra<Rational> k3_ring(const QuadraticForm& gram) {
  if (!gram.nondegenerate()) throw ValidationError("pairing ring needs a nondegenerate gram matrix");
  const int m = static_cast<int>(gram.dim());
  std::vector<std::string> labels{"1"};
  for (int i = 0; i < m; ++i) labels.push_back("a" + std::to_string(i + 1));
  labels.push_back("pt");
  GradedAlgebra<Rational> r(4, {1, 0, m, 0, 1}, labels);
  const std::size_t top = r.offset(4);
  for (std::size_t j = 0; j < r.size(); ++j) {
    r.set_product(0, j, {{static_cast<std::uint32_t>(j), Rational(1)}});
    r.set_product(j, 0, {{static_cast<std::uint32_t>(j), Rational(1)}});
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!gram.gram()(i, j).is_zero()) r.set_product(1 + i, 1 + j, {{static_cast<std::uint32_t>(top), gram.gram()(i, j)}});
  r.set_integration({Rational(1)});
  return r;
}

namespace {

// Exterior algebra on `gens` generators with subsets ordered by size, then lexicographically.
struct Exterior {
  int gens = 0;
  std::vector<std::uint32_t> masks;
  std::map<std::uint32_t, std::size_t> index;
  std::vector<int> dims;

  explicit Exterior(int k) : gens(k), dims(k + 1, 0) {
    for (int size = 0; size <= k; ++size) {
      std::vector<std::uint32_t> level;
      for (std::uint32_t s = 0; s < (1u << k); ++s)
        if (std::popcount(s) == size) level.push_back(s);
      // lexicographic on the sorted index lists
      std::sort(level.begin(), level.end(), [](std::uint32_t a, std::uint32_t b) {
        for (int i = 0; i < 32; ++i) {
          bool x = a & (1u << i), y = b & (1u << i);
          if (x != y) return x;
        }
        return false;
      });
      for (auto s : level) {
        index[s] = masks.size();
        masks.push_back(s);
      }
      dims[size] = static_cast<int>(level.size());
    }
  }

  // e_S ^ e_T = sign e_{S+T}, or 0 when they overlap
  static int wedge_sign(std::uint32_t s, std::uint32_t t) {
    if (s & t) return 0;
    int inv = 0;
    for (int i = 0; i < 32; ++i)
      if (s & (1u << i)) inv += std::popcount(t & ((1u << i) - 1));
    return inv % 2 ? -1 : 1;
  }

  GradedAlgebra<Rational> ring(const std::vector<std::string>& names) const {
    std::vector<std::string> labels;
    for (auto s : masks) {
      std::string l;
      for (int i = 0; i < gens; ++i)
        if (s & (1u << i)) l += (l.empty() ? "" : "^") + names[i];
      labels.push_back(l.empty() ? "1" : l);
    }
    GradedAlgebra<Rational> r(gens, dims, labels);
    for (std::size_t i = 0; i < masks.size(); ++i)
      for (std::size_t j = 0; j < masks.size(); ++j) {
        int sg = wedge_sign(masks[i], masks[j]);
        if (sg == 0) continue;
        r.set_product(i, j, {{static_cast<std::uint32_t>(index.at(masks[i] | masks[j])), Rational(sg)}});
      }
    r.set_integration({Rational(1)});
    return r;
  }
};

}  // namespace

GradedAlgebra<Rational> torus_ring(int g) {
  if (g < 1) throw ValidationError("torus needs g >= 1");
  if (g > 8) throw ValidationError("torus fixture limited to g <= 8");
  std::vector<std::string> names;
  for (int i = 0; i < 2 * g; ++i) names.push_back("x" + std::to_string(i + 1));
  return Exterior(2 * g).ring(names);
}

BigradedAlgebra<Rational> torus_bigraded(int g) {
  if (g < 2 || g % 2 != 0) throw ValidationError("a symplectic torus needs even complex dimension g >= 2");
  if (g > 8) throw ValidationError("torus fixture limited to g <= 8");
  Exterior ext(2 * g);
  std::vector<std::string> names;
  for (int i = 0; i < g; ++i) names.push_back("dz" + std::to_string(i + 1));
  for (int i = 0; i < g; ++i) names.push_back("dzb" + std::to_string(i + 1));
  BigradedAlgebra<Rational> b;
  b.ring = ext.ring(names);
  b.n = g / 2;
  const std::uint32_t hol = (1u << g) - 1;
  for (auto s : ext.masks) b.pq.emplace_back(std::popcount(s & hol), std::popcount(s & ~hol));
  b.sigma = b.ring.zero();
  b.sigma_bar = b.ring.zero();
  for (int k = 0; k + 1 < g; k += 2) {
    b.sigma[ext.index.at((1u << k) | (1u << (k + 1)))] = Rational(1);
    b.sigma_bar[ext.index.at((1u << (g + k)) | (1u << (g + k + 1)))] = Rational(1);
  }
  // conjugation swaps dz_k and dzb_k; reordering the wedge gives the sign
  Matrix<Rational> c(b.ring.size(), b.ring.size());
  for (std::size_t i = 0; i < ext.masks.size(); ++i) {
    std::uint32_t s = ext.masks[i];
    std::uint32_t img = 0;
    int sign = 1;
    std::vector<int> order;
    for (int t = 0; t < 2 * g; ++t)
      if (s & (1u << t)) order.push_back(t < g ? t + g : t - g);
    for (std::size_t x = 0; x < order.size(); ++x)
      for (std::size_t y = x + 1; y < order.size(); ++y)
        if (order[x] > order[y]) sign = -sign;
    for (int t : order) img |= 1u << t;
    c(ext.index.at(img), i) = Rational(sign);
  }
  b.conjugation = c;
  Rational norm = b.ring.integrate(b.ring.power(b.ring.multiply(b.sigma, b.sigma_bar), b.n));
  if (norm.is_zero()) throw MathError("degenerate symplectic top power");
  b.ring = b.ring.with_integration_scaled(Rational(1) / norm);
  return b;
}

namespace {

using Exps = std::vector<int>;

// Monomials of a fixed degree in descending lexicographic order.
struct Monomials {
  std::vector<Exps> list;
  std::map<Exps, std::size_t> index;

  Monomials(int m, int k) {
    Exps cur(m, 0);
    gen(cur, 0, k);
    for (std::size_t i = 0; i < list.size(); ++i) index[list[i]] = i;
  }

 private:
  void gen(Exps& cur, int pos, int left) {
    if (pos == static_cast<int>(cur.size()) - 1) {
      cur[pos] = left;
      list.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[pos] = e;
      gen(cur, pos + 1, left - e);
    }
    cur[pos] = 0;
  }
};

std::string monomial_label(const Exps& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

// Deterministic source of vectors: small supports first (sparse powers keep the
// echelon form small), then dense vectors with entries in [-3, 3].
class SampleStream {
 public:
  SampleStream(int m, std::uint64_t seed) : m_(m), rng_(seed) {}

  Vec<Rational> next() {
    while (support_ <= 3 && support_ <= m_) {
      if (pattern_.empty()) start_support();
      Vec<Rational> v(m_);
      for (std::size_t t = 0; t < idx_.size(); ++t) v[idx_[t]] = Rational(kCoeffs[pattern_[t]]);
      advance();
      return v;
    }
    return random();
  }

  Vec<Rational> random() {
    std::uniform_int_distribution<int> d(-3, 3);
    Vec<Rational> v(m_);
    for (auto& x : v) x = Rational(d(rng_));
    return v;
  }

 private:
  static constexpr int kCoeffs[4] = {1, -1, 2, -2};

  void start_support() {
    idx_.resize(support_);
    for (int t = 0; t < support_; ++t) idx_[t] = t;
    pattern_.assign(support_, 0);
  }

  void advance() {
    // coefficient pattern (first entry fixed to 1), then the next index subset
    for (int t = support_ - 1; t >= 1; --t) {
      if (++pattern_[t] < 4) return;
      pattern_[t] = 0;
    }
    int t = support_ - 1;
    while (t >= 0 && idx_[t] == m_ - support_ + t) --t;
    if (t < 0) {
      ++support_;
      pattern_.clear();
      return;
    }
    ++idx_[t];
    for (int u = t + 1; u < support_; ++u) idx_[u] = idx_[u - 1] + 1;
  }

  int m_;
  std::mt19937_64 rng_;
  int support_ = 1;
  std::vector<int> idx_;
  std::vector<int> pattern_;
};

// Sym^*(Q^m)/I with I generated by (n+1)-st powers of isotropic vectors.
class SymQuotient {
 public:
  SymQuotient(const QuadraticForm& q, int n, const Vec<Rational>& iso, const BogomolovOptions& opt)
      : m_(static_cast<int>(q.dim())), n_(n) {
    for (int k = 0; k <= 2 * n + 1; ++k) mons_.emplace_back(m_, k);
    build_ideal(q, iso, opt);
    build_basis();
  }

  long samples() const { return samples_; }

  // Ring element of a monomial of Sym-degree k.
  Vec<Rational> normal_form(const Exps& e) const {
    int k = 0;
    for (int x : e) k += x;
    Vec<Rational> out(basis_.size());
    if (k > 2 * n_) return out;
    std::size_t col = mons_[k].index.at(e);
    if (std_index_[k][col] >= 0) {
      out[std_index_[k][col]] = Rational(1);
      return out;
    }
    const auto& row = ideal_[k]->row(pivot_row_[k].at(col));
    for (const auto& [j, x] : row)
      if (j != col) out[std_index_[k][j]] = -x;
    return out;
  }

  GradedAlgebra<Rational> ring(const std::vector<std::string>& names) const {
    std::vector<int> dims(4 * n_ + 1, 0);
    std::vector<std::string> labels;
    for (const auto& [k, idx] : basis_) {
      ++dims[2 * k];
      labels.push_back(monomial_label(mons_[k].list[idx], names));
    }
    GradedAlgebra<Rational> r(4 * n_, dims, labels);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = 0; j < basis_.size(); ++j) {
        Exps e = exps(i);
        const Exps f = exps(j);
        for (int t = 0; t < m_; ++t) e[t] += f[t];
        r.set_product(i, j, to_sparse(normal_form(e)));
      }
    r.set_integration({Rational(1)});
    return r;
  }

  const Exps& exps(std::size_t i) const { return mons_[basis_[i].first].list[basis_[i].second]; }
  std::size_t size() const { return basis_.size(); }

 private:
  Vec<Rational> power_of_linear(const Vec<Rational>& a, int k) const {
    Vec<Rational> p{Rational(1)};
    for (int d = 0; d < k; ++d) {
      Vec<Rational> next(mons_[d + 1].list.size());
      for (std::size_t t = 0; t < p.size(); ++t) {
        if (p[t].is_zero()) continue;
        Exps e = mons_[d].list[t];
        for (int i = 0; i < m_; ++i) {
          if (a[i].is_zero()) continue;
          ++e[i];
          next[mons_[d + 1].index.at(e)] += p[t] * a[i];
          --e[i];
        }
      }
      p = std::move(next);
    }
    return p;
  }

  void build_ideal(const QuadraticForm& q, const Vec<Rational>& iso, const BogomolovOptions& opt) {
    ideal_.resize(2 * n_ + 1);
    pivot_row_.resize(2 * n_ + 1);
    const int k0 = n_ + 1;
    const long target = sym_dim(m_, k0) - sym_dim(m_, 2 * n_ - k0);
    auto& first = ideal_[k0];
    first = std::make_unique<SparseEchelon<Rational>>(mons_[k0].list.size());
    const long budget = opt.budget > 0 ? opt.budget : 20 * target + 200;
    SampleStream stream(m_, opt.seed);
    auto isotropic_from = [&](const Vec<Rational>& v) -> std::optional<Vec<Rational>> {
      Rational ve = q.pair(v, iso);
      if (ve.is_zero()) return std::nullopt;
      return v - scale(q(v) / (Rational(2) * ve), iso);
    };
    while (static_cast<long>(first->dim()) < target) {
      if (samples_ >= budget)
        throw MathError("ideal saturation failed: span reached " + std::to_string(first->dim()) + " of predicted " +
                        std::to_string(target) + " within the sampling budget");
      auto alpha = isotropic_from(stream.next());
      if (!alpha) continue;
      ++samples_;
      first->insert(power_of_linear(*alpha, k0));
    }
    // dense random isotropic vectors must already lie in the span
    for (int c = 0; c < opt.confirm;) {
      auto alpha = isotropic_from(stream.random());
      if (!alpha) continue;
      ++c;
      ++samples_;
      if (!first->contains(power_of_linear(*alpha, k0)))
        throw MathError("ideal saturation failed: span exceeds the predicted dimension " + std::to_string(target));
    }
    for (int k = k0 + 1; k <= 2 * n_; ++k) {
      auto& cur = ideal_[k];
      cur = std::make_unique<SparseEchelon<Rational>>(mons_[k].list.size());
      const auto& prev = *ideal_[k - 1];
      for (std::size_t r = 0; r < prev.dim(); ++r)
        for (int i = 0; i < m_; ++i) {
          Vec<Rational> w(mons_[k].list.size());
          for (const auto& [j, x] : prev.row(r)) {
            Exps e = mons_[k - 1].list[j];
            ++e[i];
            w[mons_[k].index.at(e)] += x;
          }
          cur->insert(std::move(w));
        }
      const long want = sym_dim(m_, k) - sym_dim(m_, 2 * n_ - k);
      if (static_cast<long>(cur->dim()) != want)
        throw MathError("ideal saturation failed: degree " + std::to_string(k) + " piece has dimension " +
                        std::to_string(cur->dim()) + ", predicted " + std::to_string(want));
    }
  }

  void build_basis() {
    std_index_.resize(2 * n_ + 1);
    for (int k = 0; k <= 2 * n_; ++k) {
      std::vector<bool> piv(mons_[k].list.size(), false);
      if (ideal_[k])
        for (std::size_t r = 0; r < ideal_[k]->dim(); ++r) {
          piv[ideal_[k]->pivot(r)] = true;
          pivot_row_[k][ideal_[k]->pivot(r)] = r;
        }
      std_index_[k].assign(mons_[k].list.size(), -1);
      for (std::size_t c = 0; c < piv.size(); ++c)
        if (!piv[c]) {
          std_index_[k][c] = static_cast<long>(basis_.size());
          basis_.emplace_back(k, c);
        }
    }
  }

  int m_;
  int n_;
  std::vector<Monomials> mons_;
  std::vector<std::unique_ptr<SparseEchelon<Rational>>> ideal_;
  std::vector<std::map<std::size_t, std::size_t>> pivot_row_;
  std::vector<std::vector<long>> std_index_;
  std::vector<std::pair<int, std::size_t>> basis_;
  long samples_ = 0;
};

Vec<Rational> degree_two(const GradedAlgebra<Rational>& r, const Vec<Rational>& coords) { return r.embed(2, coords); }

}  // namespace

BogomolovModel bogomolov_model(const QuadraticForm& q, int n, const BogomolovOptions& opt) {
  if (n < 1) throw ValidationError("bogomolov model needs n >= 1");
  if (q.dim() < 3) throw DimensionError("bogomolov model needs a quadratic space of dimension >= 3");
  if (!q.nondegenerate()) throw ValidationError("bogomolov model needs a nondegenerate form");
  const int m = static_cast<int>(q.dim());

  BogomolovModel bm;
  bm.n = n;
  bm.q0 = q;
  bm.isotropic = find_isotropic(q);
  auto pp = find_positive_pair(q);
  if (!pp) throw MathError("no admissible positive pair: need orthogonal u, v with q(u) = q(v) > 0");
  bm.u = pp->u;
  bm.v = pp->v;
  bm.pair_norm = pp->norm;

  // orthogonal complement of the positive plane, diagonalized
  Matrix<Rational> two(2, m);
  Vec<Rational> qu = q.gram() * bm.u, qv = q.gram() * bm.v;
  for (int j = 0; j < m; ++j) {
    two(0, j) = qu[j];
    two(1, j) = qv[j];
  }
  auto comp = kernel(two);
  Matrix<Rational> cb = comp.basis();
  Matrix<Rational> restricted = cb * q.gram() * cb.transpose();
  auto dg = congruence_diagonalize(restricted);
  Matrix<Rational> fmat = dg.basis * cb;
  bm.frame = {bm.u, bm.v};
  for (std::size_t i = 0; i < fmat.rows(); ++i) bm.frame.push_back(fmat.row(i));

  Matrix<Rational> qh(m, m);
  qh(0, 1) = qh(1, 0) = Rational(2) * bm.pair_norm;
  for (int i = 2; i < m; ++i) qh(i, i) = dg.diag[i - 2];
  bm.qh = QuadraticForm(qh);

  std::vector<std::string> enames, hnames{"s", "sb"};
  for (int i = 0; i < m; ++i) enames.push_back("e" + std::to_string(i + 1));
  for (int i = 2; i < m; ++i) hnames.push_back("f" + std::to_string(i + 1));

  SymQuotient eq(q, n, bm.isotropic, opt);
  bm.samples_used = eq.samples();
  bm.ring = eq.ring(enames);
  {
    Vec<Rational> u2 = degree_two(bm.ring, bm.u), v2 = degree_two(bm.ring, bm.v);
    Vec<Rational> ss = bm.ring.multiply(u2, u2) + bm.ring.multiply(v2, v2);
    Rational norm = bm.ring.integrate(bm.ring.power(ss, n));
    if (norm.is_zero()) throw MathError("degenerate symplectic top power");
    bm.ring = bm.ring.with_integration_scaled(Rational(1) / norm);
  }

  Vec<Rational> s_iso(m);
  s_iso[0] = Rational(1);
  SymQuotient hq(bm.qh, n, s_iso, opt);
  BigradedAlgebra<Rational> hb;
  hb.ring = hq.ring(hnames);
  hb.n = n;
  for (std::size_t i = 0; i < hq.size(); ++i) {
    const Exps& e = hq.exps(i);
    int rest = 0;
    for (int t = 2; t < m; ++t) rest += e[t];
    hb.pq.emplace_back(2 * e[0] + rest, 2 * e[1] + rest);
  }
  hb.sigma = hb.ring.basis_vector(hb.ring.offset(2));
  hb.sigma_bar = hb.ring.basis_vector(hb.ring.offset(2) + 1);
  Matrix<Rational> conj(hq.size(), hq.size());
  for (std::size_t i = 0; i < hq.size(); ++i) {
    Exps e = hq.exps(i);
    std::swap(e[0], e[1]);
    Vec<Rational> img = hq.normal_form(e);
    for (std::size_t k = 0; k < img.size(); ++k) conj(k, i) = img[k];
  }
  hb.conjugation = conj;
  Rational norm = hb.ring.integrate(hb.ring.power(hb.ring.multiply(hb.sigma, hb.sigma_bar), n));
  if (norm.is_zero()) throw MathError("degenerate symplectic top power");
  hb.ring = hb.ring.with_integration_scaled(Rational(1) / norm);
  bm.hodge = std::move(hb);

  // x = a u + b v + sum c_k f_k  ->  (a - i b)/2 s + (a + i b)/2 sb + sum c_k f_k
  Matrix<Rational> frame_cols = Matrix<Rational>::from_columns(bm.frame, m);
  auto inv = inverse(frame_cols);
  if (!inv) throw MathError("positive frame is singular");
  Matrix<Gaussian> mix = Matrix<Gaussian>::identity(m);
  Gaussian half(Rational(1, 2));
  Gaussian ihalf(Rational(0), Rational(1, 2));
  mix(0, 0) = half;
  mix(0, 1) = -ihalf;
  mix(1, 0) = half;
  mix(1, 1) = ihalf;
  bm.to_hodge = mix * to_gaussian(*inv);
  return bm;
}

}  // namespace llv
