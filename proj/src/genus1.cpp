#include "igusa/genus1.hpp"

namespace igusa {

void QSeries1::add_term(const Rat& n, const Rat& c) {
  if (sgn(c) == 0) return;
  if (sgn(n) < 0) throw DomainError("BadExponent", "negative exponent in one-variable series");
  Int N(ctx.N);
  if (!mpz_divisible_p(N.get_mpz_t(), n.get_den().get_mpz_t()))
    throw DomainError("BadExponent", "exponent denominator must divide N");
  if (n > truncation) return;
  auto it = terms.find(n);
  if (it == terms.end())
    terms.emplace(n, c);
  else {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

QSeries1 operator+(const QSeries1& x, const QSeries1& y) {
  if (!(x.ctx == y.ctx)) throw ContextMismatch();
  QSeries1 r(x.ctx, std::min(x.truncation, y.truncation));
  for (const auto& [n, c] : x.terms) r.add_term(n, c);
  for (const auto& [n, c] : y.terms) r.add_term(n, c);
  return r;
}

QSeries1 operator-(const QSeries1& x) { return qs1_scale(x, Rat(-1)); }

QSeries1 qs1_scale(const QSeries1& f, const Rat& c) {
  QSeries1 r(f.ctx, f.truncation);
  if (sgn(c) == 0) return r;
  for (const auto& [n, a] : f.terms) r.terms.emplace(n, a * c);
  return r;
}

QSeries1 serre_theta(const QSeries1& f) {
  QSeries1 r(f.ctx, f.truncation);
  for (const auto& [n, a] : f.terms)
    if (sgn(n) != 0) r.terms.emplace(n, a * n);
  return r;
}

QSeries1 p_deplete(const QSeries1& f) {
  QSeries1 r(f.ctx, f.truncation);
  for (const auto& [n, a] : f.terms) {
    auto v = valuation(n, f.ctx);
    if (v && *v == 0) r.terms.emplace(n, a);
  }
  return r;
}

QSeries1 theta_inverse_1(const QSeries1& f) {
  QSeries1 r(f.ctx, f.truncation);
  for (const auto& [n, a] : f.terms) {
    auto v = valuation(n, f.ctx);
    if (!v || *v != 0) throw NotDepleted("exponent " + rat_str(n) + " is divisible by p");
    r.terms.emplace(n, a / n);
  }
  return r;
}

std::vector<QSeries1> solve_weight_k(int k, const QSeries1& f) {
  if (k < 2) throw DomainError("BadWeight", "weight must be >= 2");
  std::vector<QSeries1> F;
  F.reserve(k - 1);
  F.push_back(theta_inverse_1(f));  // theta(F_0) = f
  for (int i = 1; i <= k - 2; ++i) {
    // theta(F_i) = -(k-1-i) F_{i-1}
    F.push_back(theta_inverse_1(qs1_scale(F.back(), Rat(-(k - 1 - i)))));
  }
  return F;
}

QSeries to_matrix_series(const QSeries1& f) {
  PadicContext c1(f.ctx.p, f.ctx.precision, f.ctx.N, 1);
  QSeries r(c1, 1, f.truncation * 2);
  for (const auto& [n, a] : f.terms) {
    Rat beta = n * 2;  // beta_11 = 2n so the theta_1 eigenvalue is n
    QIndex idx(std::vector<long long>{beta.get_num().get_si()});
    r.add_term(idx, static_cast<long long>(beta.get_den().get_si()), a);
  }
  r.normalize();
  return r;
}

}  // namespace igusa
