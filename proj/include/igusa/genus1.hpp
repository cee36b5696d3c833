#pragma once

#include <map>
#include <vector>

#include "igusa/qseries.hpp"

namespace igusa {

/// Classical one-variable q-expansion: exponents are non-negative rationals
/// with denominator dividing N.
struct QSeries1 {
  PadicContext ctx;  // uses p and N (g is ignored; the oracle lives at g = 1)
  Rat truncation = Rat(0);
  std::map<Rat, Rat> terms;  // exponent n -> a_n

  QSeries1(PadicContext c, Rat trunc) : ctx(std::move(c)), truncation(std::move(trunc)) {}

  void add_term(const Rat& n, const Rat& c);
  bool is_zero() const { return terms.empty(); }

  friend QSeries1 operator+(const QSeries1& x, const QSeries1& y);
  friend QSeries1 operator-(const QSeries1& x);
  friend bool operator==(const QSeries1& x, const QSeries1& y) { return x.terms == y.terms; }
};

QSeries1 qs1_scale(const QSeries1& f, const Rat& c);

/// q d/dq at the cusp: a_n -> n a_n.
QSeries1 serre_theta(const QSeries1& f);

/// Drops the terms with p | n (constants included).
QSeries1 p_deplete(const QSeries1& f);

/// a_n -> a_n / n; requires p-depleted input (throws NotDepleted).
QSeries1 theta_inverse_1(const QSeries1& f);

/// Solves theta(F_0) = f, theta(F_i) = -(k-1-i) F_{i-1} for i = 1..k-2.
/// All components stay depleted.  Throws NotDepleted.
std::vector<QSeries1> solve_weight_k(int k, const QSeries1& f);

/// The matrix-indexed counterpart at g = 1: exponent n maps to the 1x1
/// symmetric matrix (2n), so the theta_1 eigenvalue is n.  The trace bound
/// doubles accordingly.
QSeries to_matrix_series(const QSeries1& f);

}  // namespace igusa
