#pragma once

// shared fixture builders for the de Rham / genus-1 / acceptance suites

#include "igusa/derham.hpp"
#include "igusa/rng.hpp"

namespace igusa::testing {

inline QSeries random_series(const PadicContext& ctx, const Rat& trunc, DetRng& rng, int nterms,
                             long long den = 1) {
  QSeries f(ctx, 1, trunc);
  const int g = ctx.g;
  for (int t = 0; t < nterms; ++t) {
    QIndex idx = QIndex::zero(ctx.dg());
    for (int i = 0; i < g; ++i) idx.e[i] = rng.range(0, 3);
    for (int i = g; i < ctx.dg(); ++i) idx.e[i] = rng.range(-2, 2);
    f.add_term(idx, den, Rat(rng.range(-6, 6)));
  }
  f.normalize();
  return f;
}

/// Random nonzero P-depleted series (retries the draw until depletion keeps
/// something).
inline QSeries random_depleted_series(const PadicContext& ctx, const Rat& trunc,
                                      const ThetaPolynomial& P, DetRng& rng, int nterms) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    QSeries f = deplete(P, random_series(ctx, trunc, rng, nterms));
    if (!f.is_zero()) return f;
  }
  throw std::runtime_error("random_depleted_series: depletion kept nothing");
}

inline SeriesInduced random_series_induced(const Representation& rho, const PadicContext& ctx,
                                           const Rat& trunc, DetRng& rng, int maxdeg,
                                           const ThetaPolynomial* P = nullptr) {
  SeriesInduced v{rho, {}};
  const int dg = ctx.dg();
  for (int t = 0; t < 3; ++t) {
    YMono m(dg, 0);
    int deg = static_cast<int>(rng.range(0, maxdeg));
    for (int d = 0; d < deg; ++d) m[rng.below(dg)] += 1;
    QSeries s = P ? random_depleted_series(ctx, trunc, *P, rng, 3)
                  : random_series(ctx, trunc, rng, 3);
    v.add_term(m, static_cast<int>(rng.below(rho.rank)), s);
  }
  v.prune();
  return v;
}

inline DeRhamForm random_form(const DeRhamEngine& eng, int degree, const Rat& trunc, DetRng& rng,
                              int maxdeg, const ThetaPolynomial* P = nullptr) {
  DeRhamForm F = eng.zero_form(degree);
  // all multi-indices of the given length
  std::vector<MultiIndex> mis;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == degree) {
      mis.push_back(cur);
      return;
    }
    for (int k = next; k <= eng.n(); ++k) {
      cur.push_back(k);
      rec(k + 1);
      cur.pop_back();
    }
  };
  rec(1);
  for (const auto& j : mis) {
    SeriesInduced v =
        random_series_induced(eng.rep(), eng.context(), trunc, rng, maxdeg, P);
    if (!is_zero(v)) F.set_component(j, v);
  }
  return F;
}

/// Form with L_lambda-valued coefficients: random depleted scalars times
/// random basis elements of the generated submodule.
inline DeRhamForm random_L_valued_form(const DeRhamEngine& eng, const LBasis& L, int degree,
                                       const Rat& trunc, const ThetaPolynomial& P, DetRng& rng) {
  DeRhamForm F = eng.zero_form(degree);
  std::vector<MultiIndex> mis;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == degree) {
      mis.push_back(cur);
      return;
    }
    for (int k = next; k <= eng.n(); ++k) {
      cur.push_back(k);
      rec(k + 1);
      cur.pop_back();
    }
  };
  rec(1);
  for (const auto& j : mis) {
    SeriesInduced v{eng.rep(), {}};
    for (const auto& layer : L.degrees)
      for (const auto& b : layer) {
        if (rng.below(2) == 0) continue;
        QSeries s = random_depleted_series(eng.context(), trunc, P, rng, 2);
        for (const auto& [m, w] : b.terms)
          for (size_t slot = 0; slot < w.size(); ++slot) {
            if (sgn(w[slot]) == 0) continue;
            v.add_term(m, static_cast<int>(slot), qs_scale(s, w[slot]));
          }
      }
    v.prune();
    if (!is_zero(v)) F.set_component(j, v);
  }
  return F;
}

}  // namespace igusa::testing
