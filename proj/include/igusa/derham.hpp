#pragma once

#include "igusa/induced.hpp"
#include "igusa/koszul.hpp"

namespace igusa {

using SeriesInduced = Induced<QSeries>;

template <class S>
bool is_zero(const Induced<S>& v) {
  for (const auto& [m, w] : v.terms)
    for (const auto& s : w)
      if (!scalar_is_zero(s)) return false;
  return true;
}

/// Degree-p form of the trivialized de Rham complex: a map from strictly
/// increasing p-tuples in {1..d_g} to induced elements with q-series
/// coefficients.
struct DeRhamForm {
  PadicContext ctx;
  Representation rep;
  int degree = 0;
  std::map<MultiIndex, SeriesInduced> comps;

  DeRhamForm(PadicContext c, Representation r, int deg)
      : ctx(std::move(c)), rep(std::move(r)), degree(deg) {}

  bool is_zero() const {
    for (const auto& [j, v] : comps)
      if (!igusa::is_zero(v)) return false;
    return true;
  }
  void prune() {
    for (auto it = comps.begin(); it != comps.end();)
      it = igusa::is_zero(it->second) ? comps.erase(it) : std::next(it);
  }
  void set_component(const MultiIndex& j, SeriesInduced v);
  /// Trace bound shared by the scalar coefficients (nullopt for the zero form).
  std::optional<Rat> truncation() const;

  friend DeRhamForm operator+(const DeRhamForm& x, const DeRhamForm& y);
  friend DeRhamForm operator-(const DeRhamForm& x);
  friend DeRhamForm operator-(const DeRhamForm& x, const DeRhamForm& y);
  friend bool operator==(const DeRhamForm& x, const DeRhamForm& y) {
    DeRhamForm d = x - y;
    return d.is_zero();
  }
};

/// Coefficient equality below the trace bound.
bool form_equal_up_to(const DeRhamForm& a, const DeRhamForm& b, const Rat& bound);

std::map<int, DeRhamForm> form_grade_split(const DeRhamForm& F);
int form_max_ydegree(const DeRhamForm& F);  // -1 for the zero form
DeRhamForm form_grade(const DeRhamForm& F, int r);

/// Per-q-index slices of an induced element with series coefficients,
/// over a common denominator.
std::map<QIndex, Induced<Rat>> collect_by_qindex(const SeriesInduced& v, long long& common_den);

struct SolverReport {
  DeRhamForm primitive;
  std::map<int, DeRhamForm> graded;  // Y-grade -> F_i
  int iterations = 0;
  bool residual_ok = false;
};

struct RestrictReport {
  bool input_in_L = false;
  bool primitive_in_L = false;
  std::map<int, bool> per_grade;
  bool ok() const { return input_in_L && primitive_in_L; }
};

/// The trivialized complex over a fixed context and coefficient
/// representation: nabla = Theta + Delta with nabla_i = theta_i (x) 1 +
/// 1 (x) partial_i, realized as the Koszul differential of that family.
class DeRhamEngine {
 public:
  DeRhamEngine(PadicContext ctx, Representation rho);

  const PadicContext& context() const { return ctx_; }
  const Representation& rep() const { return rho_; }
  int n() const { return ctx_.dg(); }

  DeRhamForm zero_form(int degree) const { return DeRhamForm(ctx_, rho_, degree); }

  SeriesInduced apply_theta(int i, const SeriesInduced& v) const;    // 1-based i
  SeriesInduced apply_partial(int i, const SeriesInduced& v) const;  // 1-based i
  SeriesInduced apply_nabla_i(int i, const SeriesInduced& v) const;

  DeRhamForm nabla(const DeRhamForm& F) const;
  DeRhamForm theta_op(const DeRhamForm& F) const;  // horizontal part, any form
  DeRhamForm delta_op(const DeRhamForm& F) const;  // vertical part, any form

  /// The LKey decomposition on a Y-degree-homogeneous form; throws
  /// NotHomogeneous when F is not concentrated in degree ydeg.
  DeRhamForm theta_part(const DeRhamForm& F, int ydeg) const;
  DeRhamForm delta_part(const DeRhamForm& F, int ydeg) const;

  DeRhamForm deplete_form(const ThetaPolynomial& P, const DeRhamForm& F) const;
  bool form_is_depleted(const ThetaPolynomial& P, const DeRhamForm& F) const;
  bool is_closed(const DeRhamForm& F) const;

  /// P = sum_k T_k P_k^*: each monomial is assigned to the smallest index
  /// dividing it.  Throws NonVanishingConstant when P(0) != 0.
  static std::vector<ThetaPolynomial> decompose_P(const ThetaPolynomial& P);

  /// The integration section Theta^{-1}: component at j is
  /// sum_{k not in j} (-1)^{eps_{k^j}(k)} P_k^*(theta)(theta_P^{-1}(f_{k^j})).
  DeRhamForm theta_inverse(const ThetaPolynomial& P, const DeRhamForm& F) const;

  /// F_0 = Theta^{-1}(f_0), F_i = Theta^{-1}(f_i - Delta(F_{i-1})) until
  /// Delta(F_r) = 0 and f_{>r} = 0.  Throws NotClosed / NotDepleted /
  /// NonVanishingConstant / NoTermination.
  SolverReport solve_primitive(const ThetaPolynomial& P, const DeRhamForm& f, int max_grade) const;

  RestrictReport restrict_to_L(const LBasis& basis, const DeRhamForm& f,
                               const SolverReport& report) const;

  /// q^mu -> q^(p mu) on scalars, the Frobenius element m_0 = (p 1_g; 1_g)
  /// on induced values, and one factor p per omega index slot.
  DeRhamForm frobenius_form(const DeRhamForm& F) const;

  bool form_in_L(const LBasis& basis, const DeRhamForm& f) const;

 private:
  PadicContext ctx_;
  Representation rho_;
  UminusTable uminus_;
  QActionTable m0_;

  void check_form(const DeRhamForm& F) const;
  KoszulElement<SeriesInduced> to_koszul(const DeRhamForm& F) const;
  DeRhamForm from_koszul(const KoszulElement<SeriesInduced>& k, int degree) const;
  OperatorFamily<SeriesInduced> family(int which) const;  // 0: nabla, 1: theta, 2: delta
};

}  // namespace igusa
