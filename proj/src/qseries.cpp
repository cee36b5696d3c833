#include "igusa/qseries.hpp"

#include <numeric>

namespace igusa {

int pair_to_index(int i, int j, int g) {
  if (i == j) return i;
  if (i > j) std::swap(i, j);
  int off = 0;
  for (int a = 0; a < i; ++a) off += g - 1 - a;
  return g + off + (j - i - 1);
}

std::pair<int, int> index_to_pair(int idx, int g) {
  if (idx < g) return {idx, idx};
  int off = idx - g;
  for (int a = 0; a < g; ++a) {
    int row = g - 1 - a;
    if (off < row) return {a, a + 1 + off};
    off -= row;
  }
  throw DomainError("BadIndex", "pair index out of range");
}

std::vector<long long> QIndex::flatten(int g) const {
  std::vector<long long> m(static_cast<size_t>(g) * g, 0);
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) {
      long long v = e[pair_to_index(i, j, g)];
      m[static_cast<size_t>(i) * g + j] = v;
      m[static_cast<size_t>(j) * g + i] = v;
    }
  return m;
}

// ---------- ThetaPolynomial ----------

ThetaPolynomial ThetaPolynomial::variable(int dg, int i) {
  if (i < 1 || i > dg) throw IndexOutOfRange();
  ThetaPolynomial p(dg);
  std::vector<int> e(dg, 0);
  e[i - 1] = 1;
  p.terms.emplace(std::move(e), Rat(1));
  return p;
}

ThetaPolynomial ThetaPolynomial::constant(int dg, Rat c) {
  ThetaPolynomial p(dg);
  if (sgn(c) != 0) p.terms.emplace(std::vector<int>(dg, 0), std::move(c));
  return p;
}

void ThetaPolynomial::add_term(std::vector<int> expo, Rat c) {
  auto it = terms.find(expo);
  if (it == terms.end()) {
    if (sgn(c) != 0) terms.emplace(std::move(expo), std::move(c));
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

Rat ThetaPolynomial::eval(const std::vector<Rat>& lambda) const {
  Rat acc(0);
  for (const auto& [e, c] : terms) {
    Rat t = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= lambda[i];
    acc += t;
  }
  return acc;
}

Rat ThetaPolynomial::constant_term() const {
  auto it = terms.find(std::vector<int>(dg, 0));
  return it == terms.end() ? Rat(0) : it->second;
}

ThetaPolynomial operator+(const ThetaPolynomial& a, const ThetaPolynomial& b) {
  ThetaPolynomial r(a);
  for (const auto& [e, c] : b.terms) r.add_term(e, c);
  return r;
}

ThetaPolynomial operator-(const ThetaPolynomial& a, const ThetaPolynomial& b) {
  ThetaPolynomial r(a);
  for (const auto& [e, c] : b.terms) r.add_term(e, -c);
  return r;
}

ThetaPolynomial operator*(const ThetaPolynomial& a, const ThetaPolynomial& b) {
  ThetaPolynomial r(a.dg);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  return r;
}

// ---------- QSeries ----------

QSeries::QSeries(PadicContext c, long long D_, Rat trunc)
    : ctx(c), D(D_), truncation(std::move(trunc)) {
  if (D < 1) throw DomainError("BadDenominator", "global denominator must be positive");
  if (D % ctx.p == 0)
    throw DomainError("BadDenominator", "global denominator must be coprime to p");
  if (sgn(truncation) < 0) throw DomainError("BadTruncation", "trace bound must be >= 0");
}

void QSeries::normalize() {
  for (auto it = terms.begin(); it != terms.end();)
    it = (sgn(it->second) == 0 || trace_of(it->first) > truncation) ? terms.erase(it)
                                                                    : std::next(it);
  long long gg = D;
  for (const auto& [idx, c] : terms) {
    (void)c;
    for (long long v : idx.e) gg = std::gcd(gg, v < 0 ? -v : v);
    if (gg == 1) break;
  }
  if (gg > 1) {
    std::map<QIndex, Rat> nt;
    for (auto& [idx, c] : terms) {
      QIndex k(idx);
      for (auto& v : k.e) v /= gg;
      nt.emplace(std::move(k), std::move(c));
    }
    terms = std::move(nt);
    D /= gg;
  }
  if (terms.empty()) D = 1;
}

void QSeries::add_term(const QIndex& idx, long long denom, const Rat& c) {
  if (static_cast<int>(idx.e.size()) != ctx.dg())
    throw DomainError("BadIndex", "exponent entry count must equal d_g");
  if (sgn(c) == 0) return;
  long long L = std::lcm(D, denom);
  if (L != D) {
    if (L % ctx.p == 0)
      throw DomainError("BadDenominator", "exponent denominator must stay coprime to p");
    long long f = L / D;
    std::map<QIndex, Rat> nt;
    for (auto& [k, v] : terms) nt.emplace(k.scaled(f), std::move(v));
    terms = std::move(nt);
    D = L;
  }
  QIndex k = idx.scaled(L / denom);
  if (trace_of(k) > truncation) return;
  auto it = terms.find(k);
  if (it == terms.end())
    terms.emplace(std::move(k), c);
  else {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

Rat QSeries::coeff(const QIndex& idx, long long denom) const {
  // compare idx/denom with stored keys over D
  long long L = std::lcm(D, denom);
  QIndex want = idx.scaled(L / denom);
  for (const auto& [k, c] : terms)
    if (k.scaled(L / D) == want) return c;
  return Rat(0);
}

namespace {

void require_same_ctx(const QSeries& a, const QSeries& b) {
  if (!(a.ctx == b.ctx)) throw ContextMismatch();
}

}  // namespace

QSeries qs_add(const QSeries& a, const QSeries& b) {
  require_same_ctx(a, b);
  QSeries r(a.ctx, 1, std::min(a.truncation, b.truncation));
  for (const auto& [k, c] : a.terms) r.add_term(k, a.D, c);
  for (const auto& [k, c] : b.terms) r.add_term(k, b.D, c);
  r.normalize();
  return r;
}

QSeries qs_mul(const QSeries& a, const QSeries& b) {
  require_same_ctx(a, b);
  QSeries r(a.ctx, 1, std::min(a.truncation, b.truncation));
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      long long L = std::lcm(a.D, b.D);
      r.add_term(ka.scaled(L / a.D) + kb.scaled(L / b.D), L, ca * cb);
    }
  r.normalize();
  return r;
}

QSeries qs_scale(const QSeries& a, const Rat& c) {
  QSeries r(a);
  if (sgn(c) == 0) {
    r.terms.clear();
    r.D = 1;
    return r;
  }
  for (auto& [k, v] : r.terms) v *= c;
  return r;
}

QSeries qs_one(const PadicContext& ctx, const Rat& trunc) {
  QSeries r(ctx, 1, trunc);
  r.add_term(QIndex::zero(ctx.dg()), 1, Rat(1));
  return r;
}

QSeries qs_monomial(const PadicContext& ctx, const Rat& trunc, const QIndex& idx, long long denom,
                    const Rat& c) {
  QSeries r(ctx, 1, trunc);
  r.add_term(idx, denom, c);
  r.normalize();
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) { return qs_add(a, b); }
QSeries operator-(const QSeries& a, const QSeries& b) { return qs_add(a, qs_scale(b, Rat(-1))); }
QSeries operator-(const QSeries& a) { return qs_scale(a, Rat(-1)); }
QSeries operator*(const QSeries& a, const QSeries& b) { return qs_mul(a, b); }

bool qs_equal_up_to(const QSeries& a, const QSeries& b, const Rat& bound) {
  require_same_ctx(a, b);
  long long L = std::lcm(a.D, b.D);
  std::map<QIndex, Rat> diff;
  for (const auto& [k, c] : a.terms) diff[k.scaled(L / a.D)] += c;
  for (const auto& [k, c] : b.terms) diff[k.scaled(L / b.D)] -= c;
  for (const auto& [k, c] : diff) {
    if (sgn(c) == 0) continue;
    if (make_rat(k.trace_numerator(a.ctx.g), L) <= bound) return false;
  }
  return true;
}

Rat theta_eigenvalue(int i, const QIndex& idx, long long D, const PadicContext& ctx) {
  if (i < 1 || i > ctx.dg()) throw IndexOutOfRange();
  Rat v = make_rat(idx.e[i - 1], D);
  if (i <= ctx.g) v /= 2;
  return v;
}

std::vector<Rat> theta_eigenvalues(const QIndex& idx, long long D, const PadicContext& ctx) {
  std::vector<Rat> lam;
  lam.reserve(ctx.dg());
  for (int i = 1; i <= ctx.dg(); ++i) lam.push_back(theta_eigenvalue(i, idx, D, ctx));
  return lam;
}

QSeries theta(int i, const QSeries& f) {
  QSeries r(f.ctx, f.D, f.truncation);
  for (const auto& [k, c] : f.terms) {
    Rat ev = theta_eigenvalue(i, k, f.D, f.ctx);
    if (sgn(ev) != 0) r.terms.emplace(k, c * ev);
  }
  r.normalize();
  return r;
}

QSeries theta_poly(const ThetaPolynomial& P, const QSeries& f) {
  QSeries r(f.ctx, f.D, f.truncation);
  for (const auto& [k, c] : f.terms) {
    Rat ev = P.eval(theta_eigenvalues(k, f.D, f.ctx));
    if (sgn(ev) != 0) r.terms.emplace(k, c * ev);
  }
  r.normalize();
  return r;
}

QSeries deplete(const ThetaPolynomial& P, const QSeries& f) {
  QSeries r(f.ctx, f.D, f.truncation);
  for (const auto& [k, c] : f.terms) {
    Rat ev = P.eval(theta_eigenvalues(k, f.D, f.ctx));
    auto v = valuation(ev, f.ctx);
    if (v && *v < 0)
      throw NonIntegralEigenvalue("theta_P eigenvalue " + rat_str(ev) +
                                  " has negative p-valuation");
    if (v && *v == 0) r.terms.emplace(k, c);
  }
  r.normalize();
  return r;
}

bool is_depleted(const ThetaPolynomial& P, const QSeries& f) {
  for (const auto& [k, c] : f.terms) {
    (void)c;
    Rat ev = P.eval(theta_eigenvalues(k, f.D, f.ctx));
    auto v = valuation(ev, f.ctx);
    if (!v || *v != 0) return false;
  }
  return true;
}

QSeries theta_poly_inverse(const ThetaPolynomial& P, const QSeries& f) {
  QSeries r(f.ctx, f.D, f.truncation);
  for (const auto& [k, c] : f.terms) {
    Rat ev = P.eval(theta_eigenvalues(k, f.D, f.ctx));
    auto v = valuation(ev, f.ctx);
    if (!v || *v != 0)
      throw NotDepleted("term with theta_P eigenvalue " + rat_str(ev) + " survives");
    r.terms.emplace(k, c / ev);
  }
  r.normalize();
  return r;
}

QSeries frobenius(const QSeries& f) {
  QSeries r(f.ctx, f.D, f.truncation);
  for (const auto& [k, c] : f.terms) {
    QIndex kk = k.scaled(f.ctx.p);
    if (r.trace_of(kk) > r.truncation) continue;
    r.terms.emplace(std::move(kk), c);
  }
  r.normalize();
  return r;
}

bool is_modular_support(const QSeries& f) {
  const long long N = f.ctx.N;
  for (const auto& [k, c] : f.terms) {
    (void)c;
    for (int i = 0; i < f.ctx.dg(); ++i) {
      long long num = k.e[i] * N;  // N * mu entry numerator over D
      if (num % f.D != 0) return false;
      if (i < f.ctx.g && (num / f.D) % 2 != 0) return false;
    }
  }
  return true;
}

QSeries scalar_add(const QSeries& a, const QSeries& b) { return qs_add(a, b); }

}  // namespace igusa
