#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "igusa/qseries.hpp"
#include "igusa/rep.hpp"

namespace igusa {

/// Element of W (x) k[Y_ij]: a map from Y-monomials to W-vectors, graded by
/// total Y-degree.  S is the scalar ring of the W-vector entries (exact
/// rationals, or q-series for the de Rham layer).
template <class S>
struct Induced {
  Representation rep;
  std::map<YMono, std::vector<S>> terms;

  bool is_zero() const { return terms.empty(); }

  void prune() {
    for (auto it = terms.begin(); it != terms.end();) {
      bool all = true;
      for (const auto& s : it->second)
        if (!scalar_is_zero(s)) {
          all = false;
          break;
        }
      it = all ? terms.erase(it) : std::next(it);
    }
  }

  void add_term(const YMono& m, int slot, const S& c) {
    if (scalar_is_zero(c)) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      std::vector<S> w(rep.rank, scalar_zero_like(c));
      w[slot] = c;
      terms.emplace(m, std::move(w));
    } else {
      it->second[slot] = scalar_add(it->second[slot], c);
    }
  }

  friend Induced operator+(const Induced& x, const Induced& y) {
    Induced r(x);
    for (const auto& [m, w] : y.terms)
      for (size_t j = 0; j < w.size(); ++j) r.add_term(m, static_cast<int>(j), w[j]);
    r.prune();
    return r;
  }
  friend Induced operator-(const Induced& x) {
    Induced r(x);
    for (auto& [m, w] : r.terms)
      for (auto& s : w) s = scalar_neg(s);
    return r;
  }
  friend Induced operator-(const Induced& x, const Induced& y) { return x + (-y); }
  friend bool operator==(const Induced& x, const Induced& y) {
    if (!(x.rep == y.rep)) return false;
    Induced d = x - y;
    return d.is_zero();
  }
};

template <class S>
Induced<S> ind_scale(const Induced<S>& v, const Rat& c) {
  Induced<S> r(v);
  if (sgn(c) == 0) {
    r.terms.clear();
    return r;
  }
  for (auto& [m, w] : r.terms)
    for (auto& s : w) s = scalar_scale(s, c);
  return r;
}

/// w (x) Y^0.
template <class S>
Induced<S> embed_constant(const Representation& rho, const std::vector<S>& w) {
  Induced<S> r{rho, {}};
  YMono m0 = ymono_zero(rho.g * (rho.g + 1) / 2);
  for (size_t j = 0; j < w.size(); ++j) r.add_term(m0, static_cast<int>(j), w[j]);
  r.prune();
  return r;
}

/// The |i| = r component.
template <class S>
Induced<S> grade(const Induced<S>& v, int r) {
  Induced<S> out{v.rep, {}};
  for (const auto& [m, w] : v.terms)
    if (ymono_degree(m) == r) out.terms.emplace(m, w);
  return out;
}

template <class S>
std::map<int, Induced<S>> grade_split(const Induced<S>& v) {
  std::map<int, Induced<S>> out;
  for (const auto& [m, w] : v.terms) {
    int r = ymono_degree(m);
    auto it = out.find(r);
    if (it == out.end()) it = out.emplace(r, Induced<S>{v.rep, {}}).first;
    it->second.terms.emplace(m, w);
  }
  return out;
}

template <class S>
int max_ydegree(const Induced<S>& v) {
  int r = -1;
  for (const auto& [m, w] : v.terms) r = std::max(r, ymono_degree(m));
  return r;
}

// ---------- rational-level engines ----------

/// Image of each W-basis vector w_j (x) Y^m under gamma = (a, b; 0, a^{-t}nu):
/// substitute Y by a^{-1}(b + Y a^{-t} nu), expand, apply rho(a, nu).
/// Throws NotInParabolic when a b^t != b a^t, NotInvertible when det a = 0.
std::vector<Induced<Rat>> q_action_on_monomial(const Representation& rho, const Mat<Rat>& a,
                                               const Mat<Rat>& b, const Rat& nu, const YMono& m);

/// Image of w_j (x) Y^m under the u^- element with symmetric block x:
/// the eps-coefficient of rho(1 + eps Yx) f(Y - eps YxY).
std::vector<Induced<Rat>> uminus_on_monomial(const Representation& rho, const Mat<Rat>& x,
                                             const YMono& m);

Induced<Rat> q_group_action(const Mat<Rat>& a, const Mat<Rat>& b, const Rat& nu,
                            const Induced<Rat>& v);
Induced<Rat> uminus_action(const Mat<Rat>& x, const Induced<Rat>& v);

/// The k-th basis element x_k of S_g under the fixed bijection (1 at the
/// (i,j) and (j,i) entries).
Mat<Rat> sym_unit(int k, int g);

// Scalar-linear extension of a basis-level action.  `image(m) [j]` is the
// rational image of w_j (x) Y^m.
template <class S>
Induced<S> apply_rat_linear(const Induced<S>& v,
                            const std::function<const std::vector<Induced<Rat>>&(const YMono&)>& image) {
  Induced<S> out{v.rep, {}};
  for (const auto& [m, w] : v.terms) {
    const auto& rows = image(m);
    for (size_t j = 0; j < w.size(); ++j) {
      if (scalar_is_zero(w[j])) continue;
      for (const auto& [m2, w2] : rows[j].terms)
        for (size_t j2 = 0; j2 < w2.size(); ++j2) {
          if (sgn(w2[j2]) == 0) continue;
          out.add_term(m2, static_cast<int>(j2), scalar_scale(w[j], w2[j2]));
        }
    }
  }
  out.prune();
  return out;
}

/// Memoized basis-level u^- action for a fixed representation.
class UminusTable {
 public:
  explicit UminusTable(Representation rho) : rho_(std::move(rho)) {}
  const std::vector<Induced<Rat>>& row(int xi, const YMono& m) const;
  const Representation& rep() const { return rho_; }

  template <class S>
  Induced<S> apply(int xi, const Induced<S>& v) const {
    return apply_rat_linear<S>(v, [&](const YMono& m) -> const std::vector<Induced<Rat>>& {
      return row(xi, m);
    });
  }

 private:
  Representation rho_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, YMono>, std::vector<Induced<Rat>>> memo_;
};

/// Memoized basis-level parabolic action for a fixed (a, b, nu).
class QActionTable {
 public:
  QActionTable(Representation rho, Mat<Rat> a, Mat<Rat> b, Rat nu)
      : rho_(std::move(rho)), a_(std::move(a)), b_(std::move(b)), nu_(std::move(nu)) {}
  const std::vector<Induced<Rat>>& row(const YMono& m) const;

  template <class S>
  Induced<S> apply(const Induced<S>& v) const {
    return apply_rat_linear<S>(v, [&](const YMono& m) -> const std::vector<Induced<Rat>>& {
      return row(m);
    });
  }

 private:
  Representation rho_;
  Mat<Rat> a_, b_;
  Rat nu_;
  mutable std::mutex mu_;
  mutable std::map<YMono, std::vector<Induced<Rat>>> memo_;
};

// ---------- exact linear algebra over the graded pieces ----------

std::vector<YMono> monomials_of_degree(int nvars, int r);  // lex order

/// Reduced row echelon data for a list of rational rows, with the
/// transformation back to the original rows.  Deterministic pivoting: first
/// nonzero column, smallest row index.
struct Echelon {
  std::vector<std::vector<Rat>> rows;
  std::vector<int> pivots;
  std::vector<std::vector<Rat>> transform;  // echelon row = sum transform[i][k] * original[k]
};
Echelon echelonize(const std::vector<std::vector<Rat>>& rows);

/// Coordinates of v over the ORIGINAL rows if v lies in their span.
std::optional<std::vector<Rat>> solve_in_span(const Echelon& ech, const std::vector<Rat>& v);

/// Ordered bases of the U(u^-)-orbit of v_lambda, per Y-degree.
struct LBasis {
  Representation rep;
  std::vector<std::vector<Induced<Rat>>> degrees;
  long dimension = 0;
  bool stabilized = false;
};

/// Spans U(u^-) v_lambda degree by degree with exact elimination; stops when
/// a degree yields only zero.  Throws Truncated when max_degree is reached
/// before stabilization.
LBasis generate_L_lambda(const Representation& rho, const std::vector<Rat>& v_lambda,
                         int max_degree);

/// Coordinates of v over the full ordered basis (degree-major), or nullopt.
std::optional<std::vector<Rat>> membership(const Induced<Rat>& v, const LBasis& basis);

/// Coordinate vector of a Y-homogeneous element over
/// monomials_of_degree x W-basis.
std::vector<Rat> coordinates_of(const Induced<Rat>& v, int degree);

}  // namespace igusa
