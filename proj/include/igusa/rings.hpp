#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "igusa/arith.hpp"

// The small commutative-ring tower the representation machinery evaluates
// over: exact rationals, sparse polynomials in the d_g variables Y_{ij},
// and dual numbers R[eps]/(eps^2) over either.  Each ring provides
// +, -, *, unary -, ==, plus the free functions ring_is_zero /
// ring_zero_like / ring_one_like / ring_invert (unit inverse, nullopt when
// not a unit).  The *_like forms take a sample so context-carrying rings
// could join in.

namespace igusa {

// ----- rationals -----
inline bool ring_is_zero(const Rat& x) { return sgn(x) == 0; }
inline Rat ring_zero_like(const Rat&) { return Rat(0); }
inline Rat ring_one_like(const Rat&) { return Rat(1); }
inline std::optional<Rat> ring_invert(const Rat& x) {
  if (sgn(x) == 0) return std::nullopt;
  return Rat(Rat(1) / x);
}

// ----- Y-monomials -----

// Exponent vector of length d_g under the fixed bijection
// (i,i) <-> i for i < g, then (k,l), k < l, lexicographically.
using YMono = std::vector<int>;

inline int ymono_degree(const YMono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}
inline YMono ymono_zero(int nvars) { return YMono(nvars, 0); }
inline YMono ymono_mul(const YMono& x, const YMono& y) {
  YMono r(x);
  for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

/// Position of (i,j), i <= j (0-based), in {0..d_g-1}: diagonal first, then
/// off-diagonal pairs in lexicographic order.
int pair_to_index(int i, int j, int g);
/// Inverse of pair_to_index.
std::pair<int, int> index_to_pair(int idx, int g);

// ----- sparse polynomials in the Y variables, rational coefficients -----
struct YPoly {
  int nvars = 0;
  std::map<YMono, Rat> terms;

  YPoly() = default;
  explicit YPoly(int nv) : nvars(nv) {}
  static YPoly constant(int nv, Rat c) {
    YPoly p(nv);
    if (sgn(c) != 0) p.terms.emplace(ymono_zero(nv), std::move(c));
    return p;
  }
  static YPoly variable(int nv, int idx) {
    YPoly p(nv);
    YMono m = ymono_zero(nv);
    m[idx] = 1;
    p.terms.emplace(std::move(m), Rat(1));
    return p;
  }

  friend YPoly operator+(const YPoly& x, const YPoly& y) {
    YPoly r(x);
    r.nvars = x.nvars ? x.nvars : y.nvars;
    for (const auto& [m, c] : y.terms) {
      auto it = r.terms.find(m);
      if (it == r.terms.end()) {
        r.terms.emplace(m, c);
      } else {
        it->second += c;
        if (sgn(it->second) == 0) r.terms.erase(it);
      }
    }
    return r;
  }
  friend YPoly operator-(const YPoly& x) {
    YPoly r(x);
    for (auto& [m, c] : r.terms) c = -c;
    return r;
  }
  friend YPoly operator-(const YPoly& x, const YPoly& y) { return x + (-y); }
  friend YPoly operator*(const YPoly& x, const YPoly& y) {
    YPoly r(x.nvars ? x.nvars : y.nvars);
    for (const auto& [mx, cx] : x.terms)
      for (const auto& [my, cy] : y.terms) {
        Rat c = cx * cy;
        YMono m = ymono_mul(mx, my);
        auto it = r.terms.find(m);
        if (it == r.terms.end()) {
          r.terms.emplace(std::move(m), std::move(c));
        } else {
          it->second += c;
          if (sgn(it->second) == 0) r.terms.erase(it);
        }
      }
    return r;
  }
  friend bool operator==(const YPoly& x, const YPoly& y) { return x.terms == y.terms; }
};

inline bool ring_is_zero(const YPoly& x) { return x.terms.empty(); }
inline YPoly ring_zero_like(const YPoly& s) { return YPoly(s.nvars); }
inline YPoly ring_one_like(const YPoly& s) { return YPoly::constant(s.nvars, Rat(1)); }
inline std::optional<YPoly> ring_invert(const YPoly& x) {
  if (x.terms.size() != 1) return std::nullopt;
  const auto& [m, c] = *x.terms.begin();
  if (ymono_degree(m) != 0) return std::nullopt;
  return YPoly::constant(x.nvars, Rat(1) / c);
}

// ----- dual numbers a + b eps, eps^2 = 0 -----
template <class R>
struct Dual {
  R a, b;

  Dual() = default;
  Dual(R a_, R b_) : a(std::move(a_)), b(std::move(b_)) {}

  friend Dual operator+(const Dual& x, const Dual& y) { return {R(x.a + y.a), R(x.b + y.b)}; }
  friend Dual operator-(const Dual& x, const Dual& y) { return {R(x.a - y.a), R(x.b - y.b)}; }
  friend Dual operator-(const Dual& x) { return {R(-x.a), R(-x.b)}; }
  friend Dual operator*(const Dual& x, const Dual& y) {
    return {R(x.a * y.a), R(x.a * y.b + x.b * y.a)};
  }
  friend bool operator==(const Dual& x, const Dual& y) { return x.a == y.a && x.b == y.b; }
};

template <class R>
bool ring_is_zero(const Dual<R>& x) {
  return ring_is_zero(x.a) && ring_is_zero(x.b);
}
template <class R>
Dual<R> ring_zero_like(const Dual<R>& s) {
  return {ring_zero_like(s.a), ring_zero_like(s.a)};
}
template <class R>
Dual<R> ring_one_like(const Dual<R>& s) {
  return {ring_one_like(s.a), ring_zero_like(s.a)};
}
template <class R>
std::optional<Dual<R>> ring_invert(const Dual<R>& x) {
  auto ia = ring_invert(x.a);
  if (!ia) return std::nullopt;
  return Dual<R>{*ia, R(-(*ia * x.b * *ia))};
}

// ----- dense matrices -----
template <class R>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<R> a;

  Mat() = default;
  Mat(int r, int c, R fill) : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}
  R& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const R& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n, const R& sample) {
    Mat m(n, n, ring_zero_like(sample));
    for (int i = 0; i < n; ++i) m(i, i) = ring_one_like(sample);
    return m;
  }
  Mat transpose() const {
    Mat t(cols, rows, a.empty() ? R() : ring_zero_like(a[0]));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat r(x.rows, y.cols, ring_zero_like(x.a[0]));
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        if (ring_is_zero(x(i, k))) continue;
        for (int j = 0; j < y.cols; ++j) r(i, j) = R(r(i, j) + x(i, k) * y(k, j));
      }
    return r;
  }
  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat r(x);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = R(r.a[i] + y.a[i]);
    return r;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

// Laplace expansion along the first column; the reps only ever see small
// matrices (n <= g or a Wedge order).
template <class R>
R mat_det(const Mat<R>& m) {
  const int n = m.rows;
  if (n == 1) return m(0, 0);
  R acc = ring_zero_like(m(0, 0));
  for (int i = 0; i < n; ++i) {
    if (ring_is_zero(m(i, 0))) continue;
    Mat<R> minor(n - 1, n - 1, ring_zero_like(m(0, 0)));
    for (int r = 0, rr = 0; r < n; ++r) {
      if (r == i) continue;
      for (int c = 1; c < n; ++c) minor(rr, c - 1) = m(r, c);
      ++rr;
    }
    R t = R(m(i, 0) * mat_det(minor));
    acc = (i % 2 == 0) ? R(acc + t) : R(acc - t);
  }
  return acc;
}

// Inverse via adjugate / det.  nullopt when det is not a unit in R.
template <class R>
std::optional<Mat<R>> mat_inverse(const Mat<R>& m) {
  const int n = m.rows;
  R det = mat_det(m);
  auto idet = ring_invert(det);
  if (!idet) return std::nullopt;
  Mat<R> inv(n, n, ring_zero_like(m(0, 0)));
  if (n == 1) {
    inv(0, 0) = *idet;
    return inv;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat<R> minor(n - 1, n - 1, ring_zero_like(m(0, 0)));
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc) = m(r, c);
          ++cc;
        }
        ++rr;
      }
      R cof = mat_det(minor);
      if ((i + j) % 2 == 1) cof = R(-cof);
      inv(j, i) = R(cof * *idet);  // adjugate transposes
    }
  return inv;
}

template <class R>
R ring_pow(const R& x, long e, const R& sample) {
  if (e < 0) {
    auto ix = ring_invert(x);
    if (!ix) throw NotInvertible("negative power of a non-unit");
    return ring_pow(*ix, -e, sample);
  }
  R acc = ring_one_like(sample);
  R base = x;
  while (e > 0) {
    if (e & 1) acc = R(acc * base);
    base = R(base * base);
    e >>= 1;
  }
  return acc;
}

}  // namespace igusa
