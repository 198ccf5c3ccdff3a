#include "llv/quadratic.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "llv/subspace.hpp"

namespace llv {

std::string to_string(const Signature& s) {
  std::ostringstream os;
  os << "(" << s.pos << "," << s.neg << "," << s.null << ")";
  return os.str();
}

Diagonalization congruence_diagonalize(const Matrix<Rational>& q) {
  if (!is_symmetric(q)) throw ValidationError("quadratic form is not symmetric");
  const std::size_t n = q.rows();
  Matrix<Rational> a = q;
  Matrix<Rational> p = Matrix<Rational>::identity(n);

  auto add_row_col = [&](std::size_t dst, std::size_t src, const Rational& f) {
    // basis_dst += f * basis_src, applied as a congruence
    for (std::size_t j = 0; j < n; ++j)
      if (!a(src, j).is_zero()) a(dst, j) += f * a(src, j);
    for (std::size_t i = 0; i < n; ++i)
      if (!a(i, src).is_zero()) a(i, dst) += f * a(i, src);
    for (std::size_t j = 0; j < n; ++j)
      if (!p(src, j).is_zero()) p(dst, j) += f * p(src, j);
  };
  auto swap_basis = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
    for (std::size_t k = 0; k < n; ++k) std::swap(p(i, k), p(j, k));
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t j = k + 1;
      while (j < n && a(j, j).is_zero()) ++j;
      if (j < n) {
        swap_basis(k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j).is_zero()) ++j;
        if (j == n) continue;
        add_row_col(k, j, Rational(1));
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      add_row_col(i, k, -(a(i, k) / a(k, k)));
    }
  }
  Vec<Rational> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
  return {std::move(p), std::move(d)};
}

Signature symmetric_signature(const Matrix<Rational>& q) {
  Signature s;
  for (const auto& x : congruence_diagonalize(q).diag) {
    int sg = x.sign();
    if (sg > 0) ++s.pos;
    else if (sg < 0) ++s.neg;
    else ++s.null;
  }
  return s;
}

QuadraticForm::QuadraticForm(Matrix<Rational> gram) : gram_(std::move(gram)) {
  if (!is_symmetric(gram_)) throw ValidationError("quadratic form is not symmetric");
}

QuadraticForm QuadraticForm::diagonal(const Vec<Rational>& d) {
  return QuadraticForm(Matrix<Rational>::diagonal(d));
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

QuadraticForm QuadraticForm::parse(std::string_view spec) {
  std::string s(spec);
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("q", 0, "expected 'diag:...' or 'gram:...'");
  std::string kind = s.substr(0, colon);
  std::string body = s.substr(colon + 1);
  if (kind == "diag") {
    Vec<Rational> d;
    for (const auto& t : split(body, ',')) d.push_back(Rational::parse(t));
    return diagonal(d);
  }
  if (kind == "gram") {
    std::vector<Vec<Rational>> rows;
    for (const auto& r : split(body, ';')) {
      Vec<Rational> row;
      for (const auto& t : split(r, ',')) row.push_back(Rational::parse(t));
      rows.push_back(std::move(row));
    }
    if (rows.empty() || rows.size() != rows[0].size()) throw ParseError("q", 0, "gram matrix must be square");
    try {
      return QuadraticForm(Matrix<Rational>::from_rows(rows, rows.size()));
    } catch (const DimensionError&) {
      throw ParseError("q", 0, "gram matrix must be square");
    }
  }
  throw ParseError("q", 0, "unknown form kind '" + kind + "'");
}

std::vector<Vec<Rational>> isotropic_classes(const QuadraticForm& q, std::size_t count, int max_support) {
  const std::size_t m = q.dim();
  const long coeffs[] = {1, -1, 2, -2};
  std::vector<Vec<Rational>> out;
  std::vector<std::size_t> idx;
  std::function<void(std::size_t, std::size_t)> subsets = [&](std::size_t start, std::size_t want) {
    if (out.size() >= count) return;
    if (idx.size() == want) {
      std::vector<int> c(want, 0);
      while (true) {
        // first coefficient from {1, 2} only
        if (coeffs[c[0]] > 0) {
          Vec<Rational> v(m);
          bool all_even = true;
          for (std::size_t t = 0; t < want; ++t) {
            v[idx[t]] = Rational(coeffs[c[t]]);
            all_even = all_even && coeffs[c[t]] % 2 == 0;
          }
          if (!all_even && q(v).is_zero()) {
            out.push_back(std::move(v));
            if (out.size() >= count) return;
          }
        }
        std::size_t t = want;
        while (t > 0 && c[t - 1] == 3) c[--t] = 0;
        if (t == 0) return;
        ++c[t - 1];
      }
    }
    for (std::size_t i = start; i < m; ++i) {
      idx.push_back(i);
      subsets(i + 1, want);
      idx.pop_back();
    }
  };
  for (int s = 2; s <= max_support && out.size() < count; ++s) subsets(0, static_cast<std::size_t>(s));
  return out;
}

Vec<Rational> find_isotropic(const QuadraticForm& q, int bound) {
  const std::size_t m = q.dim();
  Signature sig = q.signature();
  if (sig.pos == 0 || sig.neg == 0) {
    if (sig.null > 0) {
      // a null direction of the diagonalization is isotropic
      auto dg = congruence_diagonalize(q.gram());
      for (std::size_t i = 0; i < m; ++i)
        if (dg.diag[i].is_zero()) return dg.basis.row(i);
    }
    throw MathError("no rational isotropic vectors: form is definite");
  }
  auto dg = congruence_diagonalize(q.gram());
  for (std::size_t i = 0; i < m; ++i)
    if (dg.diag[i].is_zero()) return dg.basis.row(i);

  auto combine = [&](const std::vector<std::size_t>& idx, const Vec<Rational>& c) {
    Vec<Rational> v(m);
    for (std::size_t t = 0; t < idx.size(); ++t)
      if (!c[t].is_zero()) v = v + scale(c[t], dg.basis.row(idx[t]));
    return v;
  };

  // two-term solutions d_i + d_j r^2 = 0
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (dg.diag[i].sign() == dg.diag[j].sign()) continue;
      auto r = (-(dg.diag[i] / dg.diag[j])).sqrt_exact();
      if (r) return combine({i, j}, {Rational(1), *r});
    }

  // bounded integer search on index subsets of size 3..5 with mixed signs
  std::vector<std::size_t> idx;
  std::optional<Vec<Rational>> found;
  std::function<void(std::size_t, std::size_t)> subsets = [&](std::size_t start, std::size_t want) {
    if (found) return;
    if (idx.size() == want) {
      bool p = false, n = false;
      for (auto i : idx) (dg.diag[i].sign() > 0 ? p : n) = true;
      if (!p || !n) return;
      std::vector<int> c(want, -bound);
      c[0] = 1;
      while (!found) {
        Rational val;
        for (std::size_t t = 0; t < want; ++t)
          if (c[t] != 0) val += dg.diag[idx[t]] * Rational(c[t] * c[t]);
        bool all_nonzero = std::all_of(c.begin(), c.end(), [](int x) { return x != 0; });
        if (val.is_zero() && all_nonzero) {
          Vec<Rational> cr;
          for (int x : c) cr.emplace_back(x);
          found = combine(idx, cr);
          return;
        }
        std::size_t t = want - 1;
        while (t > 0 && c[t] == bound) c[t--] = -bound;
        if (t == 0) {
          if (c[0] == bound) return;
          ++c[0];
        } else {
          ++c[t];
        }
      }
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      idx.push_back(i);
      subsets(i + 1, want);
      idx.pop_back();
      if (found) return;
    }
  };
  for (std::size_t want = 3; want <= std::min<std::size_t>(5, m) && !found; ++want) subsets(0, want);
  if (found) return *found;
  throw MathError("no rational isotropic vectors found within the search bound");
}

std::optional<PositivePair> find_positive_pair(const QuadraticForm& q, int bound) {
  auto dg = congruence_diagonalize(q.gram());
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < q.dim(); ++i)
    if (dg.diag[i].sign() > 0) pos.push_back(i);
  if (pos.size() < 2) return std::nullopt;

  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = a + 1; b < pos.size(); ++b) {
      auto r = (dg.diag[pos[a]] / dg.diag[pos[b]]).sqrt_exact();
      if (r) return PositivePair{dg.basis.row(pos[a]), scale(*r, dg.basis.row(pos[b])), dg.diag[pos[a]]};
    }
  if (pos.size() < 3) return std::nullopt;

  // look for u in a positive 3-space whose orthogonal plane has square discriminant
  Vec<Rational> w[3] = {dg.basis.row(pos[0]), dg.basis.row(pos[1]), dg.basis.row(pos[2])};
  for (int x = 0; x <= bound; ++x)
    for (int y = -bound; y <= bound; ++y)
      for (int z = -bound; z <= bound; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        Vec<Rational> u = scale(Rational(x), w[0]) + scale(Rational(y), w[1]) + scale(Rational(z), w[2]);
        Matrix<Rational> row(1, 3);
        for (int t = 0; t < 3; ++t) row(0, t) = q.pair(u, w[t]);
        auto ker = kernel(row);
        Vec<Rational> p1 = scale(ker.basis()(0, 0), w[0]) + scale(ker.basis()(0, 1), w[1]) +
                           scale(ker.basis()(0, 2), w[2]);
        Vec<Rational> p2 = scale(ker.basis()(1, 0), w[0]) + scale(ker.basis()(1, 1), w[1]) +
                           scale(ker.basis()(1, 2), w[2]);
        Matrix<Rational> g{{q(p1), q.pair(p1, p2)}, {q.pair(p1, p2), q(p2)}};
        auto d2 = congruence_diagonalize(g);
        auto r = (d2.diag[0] / d2.diag[1]).sqrt_exact();
        if (!r) continue;
        Vec<Rational> a = scale(d2.basis(0, 0), p1) + scale(d2.basis(0, 1), p2);
        Vec<Rational> b = scale(d2.basis(1, 0), p1) + scale(d2.basis(1, 1), p2);
        return PositivePair{a, scale(*r, b), d2.diag[0]};
      }
  return std::nullopt;
}

}  // namespace llv
