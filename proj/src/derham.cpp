#include "igusa/derham.hpp"

#include <numeric>

namespace igusa {

void DeRhamForm::set_component(const MultiIndex& j, SeriesInduced v) {
  if (static_cast<int>(j.size()) != degree)
    throw DomainError("BadForm", "multi-index length does not match form degree");
  for (size_t i = 0; i < j.size(); ++i) {
    if (j[i] < 1 || (i + 1 < j.size() && j[i] >= j[i + 1]))
      throw DomainError("BadForm", "multi-index must be strictly increasing");
  }
  if (igusa::is_zero(v))
    comps.erase(j);
  else
    comps[j] = std::move(v);
}

std::optional<Rat> DeRhamForm::truncation() const {
  for (const auto& [j, v] : comps)
    for (const auto& [m, w] : v.terms)
      for (const auto& s : w) return s.truncation;
  return std::nullopt;
}

DeRhamForm operator+(const DeRhamForm& x, const DeRhamForm& y) {
  if (!(x.ctx == y.ctx) || !(x.rep == y.rep) || x.degree != y.degree)
    throw ContextMismatch("form addition needs matching context, rep and degree");
  DeRhamForm r(x);
  for (const auto& [j, v] : y.comps) {
    auto it = r.comps.find(j);
    if (it == r.comps.end())
      r.comps.emplace(j, v);
    else
      it->second = it->second + v;
  }
  r.prune();
  return r;
}

DeRhamForm operator-(const DeRhamForm& x) {
  DeRhamForm r(x);
  for (auto& [j, v] : r.comps) v = -v;
  return r;
}

DeRhamForm operator-(const DeRhamForm& x, const DeRhamForm& y) { return x + (-y); }

bool form_equal_up_to(const DeRhamForm& a, const DeRhamForm& b, const Rat& bound) {
  DeRhamForm d = a - b;
  for (const auto& [j, v] : d.comps)
    for (const auto& [m, w] : v.terms)
      for (const auto& s : w)
        if (!qs_equal_up_to(s, scalar_zero_like(s), bound)) return false;
  return true;
}

std::map<int, DeRhamForm> form_grade_split(const DeRhamForm& F) {
  std::map<int, DeRhamForm> out;
  for (const auto& [j, v] : F.comps)
    for (const auto& [r, piece] : grade_split(v)) {
      auto it = out.find(r);
      if (it == out.end()) it = out.emplace(r, DeRhamForm(F.ctx, F.rep, F.degree)).first;
      it->second.comps[j] = piece;
    }
  for (auto& [r, f] : out) f.prune();
  return out;
}

int form_max_ydegree(const DeRhamForm& F) {
  int r = -1;
  for (const auto& [j, v] : F.comps) r = std::max(r, max_ydegree(v));
  return r;
}

DeRhamForm form_grade(const DeRhamForm& F, int r) {
  DeRhamForm out(F.ctx, F.rep, F.degree);
  for (const auto& [j, v] : F.comps) {
    SeriesInduced piece = grade(v, r);
    if (!igusa::is_zero(piece)) out.comps.emplace(j, std::move(piece));
  }
  return out;
}

std::map<QIndex, Induced<Rat>> collect_by_qindex(const SeriesInduced& v, long long& common_den) {
  long long L = 1;
  for (const auto& [m, w] : v.terms)
    for (const auto& s : w) L = std::lcm(L, s.D);
  common_den = L;
  std::map<QIndex, Induced<Rat>> out;
  for (const auto& [m, w] : v.terms)
    for (size_t j = 0; j < w.size(); ++j)
      for (const auto& [idx, c] : w[j].terms) {
        QIndex key = idx.scaled(L / w[j].D);
        auto it = out.find(key);
        if (it == out.end()) it = out.emplace(key, Induced<Rat>{v.rep, {}}).first;
        it->second.add_term(m, static_cast<int>(j), c);
      }
  for (auto& [k, ind] : out) ind.prune();
  return out;
}

// ---------- engine ----------

namespace {

Mat<Rat> m0_a(int g, long p) {
  Mat<Rat> a(g, g, Rat(0));
  for (int i = 0; i < g; ++i) a(i, i) = Rat(p);
  return a;
}

}  // namespace

DeRhamEngine::DeRhamEngine(PadicContext ctx, Representation rho)
    : ctx_(ctx),
      rho_(std::move(rho)),
      uminus_(rho_),
      m0_(rho_, m0_a(rho_.g, ctx.p), Mat<Rat>(rho_.g, rho_.g, Rat(0)), Rat(ctx.p)) {
  if (rho_.g != ctx_.g) throw ContextMismatch("representation genus != context genus");
}

void DeRhamEngine::check_form(const DeRhamForm& F) const {
  if (!(F.ctx == ctx_) || !(F.rep == rho_))
    throw ContextMismatch("form does not belong to this engine");
  if (F.degree < 0 || F.degree > n())
    throw DomainError("BadForm", "form degree out of range");
}

SeriesInduced DeRhamEngine::apply_theta(int i, const SeriesInduced& v) const {
  SeriesInduced out{v.rep, {}};
  for (const auto& [m, w] : v.terms)
    for (size_t j = 0; j < w.size(); ++j) {
      if (scalar_is_zero(w[j])) continue;
      out.add_term(m, static_cast<int>(j), theta(i, w[j]));
    }
  out.prune();
  return out;
}

SeriesInduced DeRhamEngine::apply_partial(int i, const SeriesInduced& v) const {
  return uminus_.apply(i - 1, v);
}

SeriesInduced DeRhamEngine::apply_nabla_i(int i, const SeriesInduced& v) const {
  return apply_theta(i, v) + apply_partial(i, v);
}

KoszulElement<SeriesInduced> DeRhamEngine::to_koszul(const DeRhamForm& F) const {
  KoszulElement<SeriesInduced> k{n(), F.degree, {}};
  k.comps = F.comps;
  return k;
}

DeRhamForm DeRhamEngine::from_koszul(const KoszulElement<SeriesInduced>& k, int degree) const {
  DeRhamForm F(ctx_, rho_, degree);
  F.comps = k.comps;
  F.prune();
  return F;
}

OperatorFamily<SeriesInduced> DeRhamEngine::family(int which) const {
  OperatorFamily<SeriesInduced> fam;
  fam.n = n();
  for (int i = 1; i <= fam.n; ++i) {
    switch (which) {
      case 0:
        fam.ops.push_back([this, i](const SeriesInduced& v) { return apply_nabla_i(i, v); });
        break;
      case 1:
        fam.ops.push_back([this, i](const SeriesInduced& v) { return apply_theta(i, v); });
        break;
      default:
        fam.ops.push_back([this, i](const SeriesInduced& v) { return apply_partial(i, v); });
    }
  }
  return fam;
}

// Omega^{d_g + 1} = 0: differentials of top-degree forms are the zero form
// of top degree.

DeRhamForm DeRhamEngine::nabla(const DeRhamForm& F) const {
  check_form(F);
  return from_koszul(dK(family(0), to_koszul(F)), std::min(F.degree + 1, n()));
}

DeRhamForm DeRhamEngine::theta_op(const DeRhamForm& F) const {
  check_form(F);
  return from_koszul(dK(family(1), to_koszul(F)), std::min(F.degree + 1, n()));
}

DeRhamForm DeRhamEngine::delta_op(const DeRhamForm& F) const {
  check_form(F);
  return from_koszul(dK(family(2), to_koszul(F)), std::min(F.degree + 1, n()));
}

namespace {

void require_ydeg(const DeRhamForm& F, int ydeg) {
  for (const auto& [j, v] : F.comps)
    for (const auto& [m, w] : v.terms)
      if (ymono_degree(m) != ydeg) throw NotHomogeneous();
}

}  // namespace

DeRhamForm DeRhamEngine::theta_part(const DeRhamForm& F, int ydeg) const {
  check_form(F);
  require_ydeg(F, ydeg);
  return theta_op(F);
}

DeRhamForm DeRhamEngine::delta_part(const DeRhamForm& F, int ydeg) const {
  check_form(F);
  require_ydeg(F, ydeg);
  return delta_op(F);
}

DeRhamForm DeRhamEngine::deplete_form(const ThetaPolynomial& P, const DeRhamForm& F) const {
  check_form(F);
  DeRhamForm out(ctx_, rho_, F.degree);
  for (const auto& [j, v] : F.comps) {
    SeriesInduced nv{v.rep, {}};
    for (const auto& [m, w] : v.terms)
      for (size_t s = 0; s < w.size(); ++s)
        nv.add_term(m, static_cast<int>(s), deplete(P, w[s]));
    nv.prune();
    if (!igusa::is_zero(nv)) out.comps.emplace(j, std::move(nv));
  }
  return out;
}

bool DeRhamEngine::form_is_depleted(const ThetaPolynomial& P, const DeRhamForm& F) const {
  for (const auto& [j, v] : F.comps)
    for (const auto& [m, w] : v.terms)
      for (const auto& s : w)
        if (!is_depleted(P, s)) return false;
  return true;
}

bool DeRhamEngine::is_closed(const DeRhamForm& F) const { return nabla(F).is_zero(); }

std::vector<ThetaPolynomial> DeRhamEngine::decompose_P(const ThetaPolynomial& P) {
  if (sgn(P.constant_term()) != 0) throw NonVanishingConstant();
  std::vector<ThetaPolynomial> parts(P.dg, ThetaPolynomial(P.dg));
  for (const auto& [e, c] : P.terms) {
    int k = -1;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) {
        k = static_cast<int>(i);
        break;
      }
    if (k < 0) continue;  // constant term is zero
    std::vector<int> q(e);
    q[k] -= 1;
    parts[k].add_term(std::move(q), c);
  }
  return parts;
}

DeRhamForm DeRhamEngine::theta_inverse(const ThetaPolynomial& P, const DeRhamForm& F) const {
  check_form(F);
  if (F.degree < 1) return zero_form(0);
  auto parts = decompose_P(P);
  OperatorFamily<SeriesInduced> psi;
  psi.n = n();
  for (int k = 1; k <= psi.n; ++k) {
    const ThetaPolynomial& pk = parts[k - 1];
    psi.ops.push_back([this, &P, pk](const SeriesInduced& v) {
      SeriesInduced out{v.rep, {}};
      for (const auto& [m, w] : v.terms)
        for (size_t j = 0; j < w.size(); ++j) {
          if (scalar_is_zero(w[j])) continue;
          out.add_term(m, static_cast<int>(j), theta_poly(pk, theta_poly_inverse(P, w[j])));
        }
      out.prune();
      return out;
    });
  }
  return from_koszul(delK(psi, to_koszul(F)), F.degree - 1);
}

SolverReport DeRhamEngine::solve_primitive(const ThetaPolynomial& P, const DeRhamForm& f,
                                           int max_grade) const {
  check_form(f);
  if (f.degree < 1 || f.degree > n())
    throw DomainError("BadForm", "solver needs a form degree in 1..d_g");
  if (sgn(P.constant_term()) != 0) throw NonVanishingConstant();
  if (!form_is_depleted(P, f)) throw NotDepleted("solver input must be P-depleted");
  if (!is_closed(f)) throw NotClosed();

  auto grades = form_grade_split(f);
  int max_f = grades.empty() ? -1 : grades.rbegin()->first;

  SolverReport rep{zero_form(f.degree - 1), {}, 0, false};
  DeRhamForm prev = zero_form(f.degree - 1);  // F_{i-1}
  for (int i = 0;; ++i) {
    if (i > max_grade) throw NoTermination("solve_primitive: max_grade = " +
                                           std::to_string(max_grade) + " reached");
    auto it = grades.find(i);
    DeRhamForm ci = it != grades.end() ? it->second : zero_form(f.degree);
    if (i > 0) ci = ci - delta_op(prev);
    DeRhamForm Fi = theta_inverse(P, ci);
    if (!Fi.is_zero()) rep.graded.emplace(i, Fi);
    rep.primitive = rep.primitive + Fi;
    rep.iterations = i;
    bool tail_done = delta_op(Fi).is_zero() && i >= max_f;
    prev = std::move(Fi);
    if (tail_done) break;
  }

  // residual check at the reduced trace bound
  Rat bound(0);
  auto T = f.truncation();
  if (T) {
    Rat maxtrace(0);
    for (const auto& [j, v] : f.comps)
      for (const auto& [m, w] : v.terms)
        for (const auto& s : w)
          for (const auto& [idx, c] : s.terms)
            maxtrace = std::max(maxtrace, make_rat(idx.trace_numerator(ctx_.g), s.D));
    bound = *T - Rat(f.degree) * maxtrace;
    if (sgn(bound) < 0) bound = Rat(0);
  }
  rep.residual_ok = form_equal_up_to(nabla(rep.primitive), f, bound);
  return rep;
}

bool DeRhamEngine::form_in_L(const LBasis& basis, const DeRhamForm& f) const {
  for (const auto& [j, v] : f.comps) {
    long long den = 1;
    for (const auto& [idx, ind] : collect_by_qindex(v, den))
      if (!membership(ind, basis)) return false;
  }
  return true;
}

RestrictReport DeRhamEngine::restrict_to_L(const LBasis& basis, const DeRhamForm& f,
                                           const SolverReport& report) const {
  RestrictReport out;
  out.input_in_L = form_in_L(basis, f);
  out.primitive_in_L = true;
  for (const auto& [i, Fi] : report.graded) {
    bool ok = form_in_L(basis, Fi);
    out.per_grade[i] = ok;
    out.primitive_in_L = out.primitive_in_L && ok;
  }
  return out;
}

DeRhamForm DeRhamEngine::frobenius_form(const DeRhamForm& F) const {
  check_form(F);
  Rat omega_twist = ring_pow(Rat(ctx_.p), F.degree, Rat(1));
  DeRhamForm out(ctx_, rho_, F.degree);
  for (const auto& [j, v] : F.comps) {
    // frobenius on the scalars, then m_0 on the induced values
    SeriesInduced fv{v.rep, {}};
    for (const auto& [m, w] : v.terms)
      for (size_t s = 0; s < w.size(); ++s) fv.add_term(m, static_cast<int>(s), frobenius(w[s]));
    fv.prune();
    SeriesInduced mv = m0_.apply(fv);
    mv = ind_scale(mv, omega_twist);
    if (!igusa::is_zero(mv)) out.comps.emplace(j, std::move(mv));
  }
  return out;
}

}  // namespace igusa
