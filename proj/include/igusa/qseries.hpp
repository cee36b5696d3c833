#pragma once

#include <map>
#include <string>
#include <vector>

#include "igusa/arith.hpp"
#include "igusa/rings.hpp"

namespace igusa {

/// Symmetric g x g exponent matrix.  Stored as the d_g distinguished entries
/// (diagonal first, then the strict upper triangle lexicographically) as
/// integers over the owning series' global denominator D.
struct QIndex {
  std::vector<long long> e;

  QIndex() = default;
  explicit QIndex(std::vector<long long> e_) : e(std::move(e_)) {}
  static QIndex zero(int dg) { return QIndex(std::vector<long long>(dg, 0)); }

  auto operator<=>(const QIndex&) const = default;

  long long trace_numerator(int g) const {
    long long t = 0;
    for (int i = 0; i < g; ++i) t += e[i];
    return t;
  }
  QIndex scaled(long long f) const {
    QIndex r(*this);
    for (auto& x : r.e) x *= f;
    return r;
  }
  friend QIndex operator+(const QIndex& x, const QIndex& y) {
    QIndex r(x);
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += y.e[i];
    return r;
  }
  /// Row-major flattened g x g integer matrix (used for JSON and the
  /// deterministic output ordering).
  std::vector<long long> flatten(int g) const;
};

/// Polynomial in the d_g commuting variables T_1..T_{d_g}, applied to the
/// theta operator family.
struct ThetaPolynomial {
  int dg = 1;
  std::map<std::vector<int>, Rat> terms;  // exponent vector -> coefficient

  ThetaPolynomial() = default;
  explicit ThetaPolynomial(int dg_) : dg(dg_) {}
  static ThetaPolynomial variable(int dg, int i);  // T_i, 1-based
  static ThetaPolynomial constant(int dg, Rat c);

  void add_term(std::vector<int> expo, Rat c);
  Rat eval(const std::vector<Rat>& lambda) const;
  bool is_zero() const { return terms.empty(); }
  Rat constant_term() const;

  friend ThetaPolynomial operator+(const ThetaPolynomial&, const ThetaPolynomial&);
  friend ThetaPolynomial operator-(const ThetaPolynomial&, const ThetaPolynomial&);
  friend ThetaPolynomial operator*(const ThetaPolynomial&, const ThetaPolynomial&);
  friend bool operator==(const ThetaPolynomial& a, const ThetaPolynomial& b) {
    return a.terms == b.terms;
  }
};

/// Sparse formal q-expansion sum a(mu) q^mu over symmetric rational g x g
/// exponents mu = e/D, truncated by the trace bound `truncation`.
struct QSeries {
  PadicContext ctx;
  long long D = 1;
  Rat truncation = Rat(0);
  std::map<QIndex, Rat> terms;

  QSeries(PadicContext c, long long D_, Rat trunc);

  bool is_zero() const { return terms.empty(); }
  int dg() const { return ctx.dg(); }

  /// Adds c * q^(idx/denom); drops the term when over the trace bound.
  void add_term(const QIndex& idx, long long denom, const Rat& c);
  Rat coeff(const QIndex& idx, long long denom) const;
  Rat trace_of(const QIndex& idx) const { return make_rat(idx.trace_numerator(ctx.g), D); }

  /// Lowest-terms global denominator; drops zero coefficients and
  /// over-truncation terms.  All operations return normalized series.
  void normalize();

  friend QSeries operator+(const QSeries&, const QSeries&);
  friend QSeries operator-(const QSeries&, const QSeries&);
  friend QSeries operator-(const QSeries&);
  friend QSeries operator*(const QSeries&, const QSeries&);
  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.D == b.D && a.terms == b.terms;
  }
};

inline bool is_zero(const QSeries& f) { return f.is_zero(); }

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_mul(const QSeries& a, const QSeries& b);
QSeries qs_scale(const QSeries& a, const Rat& c);
QSeries qs_one(const PadicContext& ctx, const Rat& trunc);
QSeries qs_monomial(const PadicContext& ctx, const Rat& trunc, const QIndex& idx, long long denom,
                    const Rat& c);

/// Equality of all coefficients with trace <= bound.
bool qs_equal_up_to(const QSeries& a, const QSeries& b, const Rat& bound);

/// Eigenvalue of theta_i (1-based i in 1..d_g) on q^(idx/D): half the
/// diagonal entry for i <= g, the off-diagonal entry otherwise.
Rat theta_eigenvalue(int i, const QIndex& idx, long long D, const PadicContext& ctx);
std::vector<Rat> theta_eigenvalues(const QIndex& idx, long long D, const PadicContext& ctx);

QSeries theta(int i, const QSeries& f);
QSeries theta_poly(const ThetaPolynomial& P, const QSeries& f);

/// Keeps exactly the terms whose theta_P eigenvalue is a p-adic unit.
/// Throws NonIntegralEigenvalue when an eigenvalue has negative valuation.
QSeries deplete(const ThetaPolynomial& P, const QSeries& f);
bool is_depleted(const ThetaPolynomial& P, const QSeries& f);

/// Exact inverse of theta_P on P-depleted series.  Throws NotDepleted.
QSeries theta_poly_inverse(const ThetaPolynomial& P, const QSeries& f);

/// q^mu -> q^(p mu); terms pushed past the trace bound are dropped.
QSeries frobenius(const QSeries& f);

/// Optional validator for modular-form inputs: every exponent mu must have
/// N*mu integral with even diagonal.
bool is_modular_support(const QSeries& f);

// scalar-ring hooks used by the induced-module template layer
inline bool scalar_is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool scalar_is_zero(const QSeries& x) { return x.is_zero(); }
inline Rat scalar_zero_like(const Rat&) { return Rat(0); }
inline QSeries scalar_zero_like(const QSeries& s) { return QSeries(s.ctx, 1, s.truncation); }
inline Rat scalar_add(const Rat& a, const Rat& b) { return a + b; }
QSeries scalar_add(const QSeries& a, const QSeries& b);
inline Rat scalar_neg(const Rat& a) { return -a; }
inline QSeries scalar_neg(const QSeries& a) { return -a; }
inline Rat scalar_scale(const Rat& a, const Rat& c) { return a * c; }
inline QSeries scalar_scale(const QSeries& a, const Rat& c) { return qs_scale(a, c); }

}  // namespace igusa
