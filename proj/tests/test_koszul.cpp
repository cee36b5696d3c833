#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "igusa/koszul.hpp"
#include "igusa/rings.hpp"
#include "igusa/rng.hpp"

using namespace igusa;

namespace {

struct Vec {
  std::vector<Rat> v;
  friend Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.v.size(); ++i) r.v[i] += b.v[i];
    return r;
  }
  friend Vec operator-(const Vec& a) {
    Vec r(a);
    for (auto& x : r.v) x = -x;
    return r;
  }
  friend Vec operator-(const Vec& a, const Vec& b) { return a + (-b); }
  friend bool operator==(const Vec& a, const Vec& b) { return a.v == b.v; }
};

bool is_zero(const Vec& x) {
  for (const auto& c : x.v)
    if (sgn(c) != 0) return false;
  return true;
}

using KE = KoszulElement<Vec>;
using Fam = OperatorFamily<Vec>;

Fam matrix_family(const std::vector<Mat<Rat>>& ms) {
  Fam f;
  f.n = static_cast<int>(ms.size());
  for (const auto& m : ms)
    f.ops.push_back([m](const Vec& x) {
      Vec r{std::vector<Rat>(x.v.size(), Rat(0))};
      for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.v[i] += m(i, j) * x.v[j];
      return r;
    });
  return f;
}

Mat<Rat> rand_mat(int dim, DetRng& rng) {
  Mat<Rat> m(dim, dim, Rat(0));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = Rat(rng.range(-3, 3));
  return m;
}

Mat<Rat> rand_diag(int dim, DetRng& rng) {
  Mat<Rat> m(dim, dim, Rat(0));
  for (int i = 0; i < dim; ++i) m(i, i) = Rat(rng.range(-4, 4));
  return m;
}

Vec rand_vec(int dim, DetRng& rng) {
  Vec v{std::vector<Rat>(dim)};
  for (auto& x : v.v) x = Rat(rng.range(-4, 4));
  return v;
}

void fill_element(KE& m, int p, int dim, DetRng& rng) {
  std::function<void(MultiIndex, int)> rec = [&](MultiIndex cur, int next) {
    if (static_cast<int>(cur.size()) == p) {
      m.comps.emplace(cur, rand_vec(dim, rng));
      return;
    }
    for (int k = next; k <= m.n; ++k) {
      MultiIndex c2(cur);
      c2.push_back(k);
      rec(c2, k + 1);
    }
  };
  rec({}, 1);
}

// independent gather-form expansion of the bracket correction:
// Delta(m)_j = sum_{k not in j} sum_l (-1)^{eps_{j minus j_l}(k) + l}
//              [psi_k, phi_{j_l}] (m_{k ^ (j minus j_l)})
KE bracket_oracle(const Fam& psi, const Fam& phi, const KE& m) {
  KE out{m.n, m.degree, {}};
  KE targets{m.n, m.degree, {}};
  // iterate over every possible target index of length degree
  std::function<void(MultiIndex, int)> rec = [&](MultiIndex j, int next) {
    if (static_cast<int>(j.size()) == m.degree) {
      for (int k = 1; k <= m.n; ++k) {
        if (std::find(j.begin(), j.end(), k) != j.end()) continue;
        for (size_t l1 = 1; l1 <= j.size(); ++l1) {
          MultiIndex jml;
          for (size_t t = 0; t < j.size(); ++t)
            if (t != l1 - 1) jml.push_back(j[t]);
          auto ins = multiindex_ops(k, jml);
          auto src = m.comps.find(*ins.insert);
          if (src == m.comps.end()) continue;
          Vec br = psi.op(k)(phi.op(j[l1 - 1])(src->second)) -
                   phi.op(j[l1 - 1])(psi.op(k)(src->second));
          Vec term = ((ins.eps + static_cast<int>(l1)) % 2 == 0) ? br : -br;
          out.accumulate(j, term);
        }
      }
      return;
    }
    for (int k = next; k <= m.n; ++k) {
      MultiIndex c2(j);
      c2.push_back(k);
      rec(c2, k + 1);
    }
  };
  rec({}, 1);
  out.prune();
  return out;
}

}  // namespace

TEST_CASE("multiindex operations") {
  auto r = multiindex_ops(2, MultiIndex{1, 3});
  REQUIRE(r.insert);
  CHECK(*r.insert == MultiIndex{1, 2, 3});
  CHECK(r.eps == 1);
  CHECK(!r.remove);

  r = multiindex_ops(3, MultiIndex{1, 3});
  CHECK(!r.insert);
  CHECK(r.eps == 1);
  REQUIRE(r.remove);
  CHECK(*r.remove == MultiIndex{1});

  r = multiindex_ops(1, MultiIndex{});
  REQUIRE(r.insert);
  CHECK(*r.insert == MultiIndex{1});
  CHECK(r.eps == 0);
}

TEST_CASE("dK on small cases") {
  DetRng rng(1);
  auto phi = matrix_family({rand_mat(3, rng), rand_mat(3, rng)});
  Vec m = rand_vec(3, rng);

  // p = 0: d(m) = (phi_1 m) e_1 + (phi_2 m) e_2
  KE k0{2, 0, {{MultiIndex{}, m}}};
  KE d0 = dK(phi, k0);
  CHECK(d0.comps.at(MultiIndex{1}) == phi.op(1)(m));
  CHECK(d0.comps.at(MultiIndex{2}) == phi.op(2)(m));

  // p = 1: d(m_1 e_1 + m_2 e_2) = (phi_1 m_2 - phi_2 m_1) e_12
  Vec m1 = rand_vec(3, rng), m2 = rand_vec(3, rng);
  KE k1{2, 1, {{MultiIndex{1}, m1}, {MultiIndex{2}, m2}}};
  KE d1 = dK(phi, k1);
  CHECK(d1.comps.at(MultiIndex{1, 2}) == phi.op(1)(m2) - phi.op(2)(m1));

  // dK dK = 0 for commuting scalar (diagonal) families
  auto diag = matrix_family({rand_diag(3, rng), rand_diag(3, rng), rand_diag(3, rng)});
  KE x{3, 0, {{MultiIndex{}, rand_vec(3, rng)}}};
  CHECK(dK(diag, dK(diag, x)).comps.empty());
  KE x1{3, 1, {{MultiIndex{2}, rand_vec(3, rng)}, {MultiIndex{3}, rand_vec(3, rng)}}};
  CHECK(dK(diag, dK(diag, x1)).comps.empty());

  // top degree maps to zero
  KE top{2, 2, {{MultiIndex{1, 2}, m}}};
  CHECK(dK(phi, top).comps.empty());
}

TEST_CASE("delK on small cases") {
  DetRng rng(2);
  auto psi = matrix_family({rand_mat(3, rng), rand_mat(3, rng)});
  Vec m1 = rand_vec(3, rng), m2 = rand_vec(3, rng), x = rand_vec(3, rng);

  // p = 1: del(m_1 e_1 + m_2 e_2) = psi_1 m_1 + psi_2 m_2
  KE k1{2, 1, {{MultiIndex{1}, m1}, {MultiIndex{2}, m2}}};
  KE d = delK(psi, k1);
  CHECK(d.comps.at(MultiIndex{}) == psi.op(1)(m1) + psi.op(2)(m2));

  // p = 2: del(x e_12) = psi_1 x e_2 - psi_2 x e_1
  KE k2{2, 2, {{MultiIndex{1, 2}, x}}};
  KE d2 = delK(psi, k2);
  CHECK(d2.comps.at(MultiIndex{2}) == psi.op(1)(x));
  CHECK(d2.comps.at(MultiIndex{1}) == -psi.op(2)(x));

  // delK delK = 0 for commuting families
  DetRng rng2(3);
  auto diag = matrix_family({rand_diag(3, rng2), rand_diag(3, rng2), rand_diag(3, rng2)});
  KE full{3, 3, {{MultiIndex{1, 2, 3}, rand_vec(3, rng2)}}};
  CHECK(delK(diag, delK(diag, full)).comps.empty());

  // degree zero maps to zero
  KE bot{2, 0, {{MultiIndex{}, x}}};
  CHECK(delK(psi, bot).comps.empty());
}

TEST_CASE("delta_dot") {
  DetRng rng(4);
  std::vector<Mat<Rat>> P = {rand_mat(2, rng), rand_mat(2, rng)};
  std::vector<Mat<Rat>> F = {rand_mat(2, rng), rand_mat(2, rng)};
  auto psi = matrix_family(P), phi = matrix_family(F);
  Vec m = rand_vec(2, rng);

  // p = 0: sum psi_k phi_k; p = n: sum phi_k psi_k
  KE k0{2, 0, {{MultiIndex{}, m}}};
  CHECK(delta_dot(psi, phi, k0).comps.at(MultiIndex{}) ==
        psi.op(1)(phi.op(1)(m)) + psi.op(2)(phi.op(2)(m)));
  KE kt{2, 2, {{MultiIndex{1, 2}, m}}};
  CHECK(delta_dot(psi, phi, kt).comps.at(MultiIndex{1, 2}) ==
        phi.op(1)(psi.op(1)(m)) + phi.op(2)(psi.op(2)(m)));

  // mixed index: e_1 component gets phi_1 psi_1 + psi_2 phi_2
  KE k1{2, 1, {{MultiIndex{1}, m}}};
  CHECK(delta_dot(psi, phi, k1).comps.at(MultiIndex{1}) ==
        phi.op(1)(psi.op(1)(m)) + psi.op(2)(phi.op(2)(m)));
}

TEST_CASE("delta_bracket") {
  DetRng rng(6);
  // commuting (diagonal) families vanish
  auto dpsi = matrix_family({rand_diag(3, rng), rand_diag(3, rng), rand_diag(3, rng)});
  auto dphi = matrix_family({rand_diag(3, rng), rand_diag(3, rng), rand_diag(3, rng)});
  KE k1{3, 1, {{MultiIndex{2}, rand_vec(3, rng)}}};
  CHECK(delta_bracket(dpsi, dphi, k1).comps.empty());

  // n = 1 is degenerate: no (k not in j, l in j) pairs survive
  auto p1 = matrix_family({rand_mat(2, rng)});
  auto f1 = matrix_family({rand_mat(2, rng)});
  KE one{1, 1, {{MultiIndex{1}, rand_vec(2, rng)}}};
  CHECK(delta_bracket(p1, f1, one).comps.empty());
  KE zero0{1, 0, {{MultiIndex{}, rand_vec(2, rng)}}};
  CHECK(delta_bracket(p1, f1, zero0).comps.empty());

  // non-commuting matrix operators match the direct expansion
  for (int n : {2, 3}) {
    std::vector<Mat<Rat>> P, F;
    for (int i = 0; i < n; ++i) {
      P.push_back(rand_mat(2, rng));
      F.push_back(rand_mat(2, rng));
    }
    auto psi = matrix_family(P), phi = matrix_family(F);
    for (int p = 0; p <= n; ++p) {
      KE m{n, p, {}};
      fill_element(m, p, 2, rng);
      CHECK(delta_bracket(psi, phi, m) == bracket_oracle(psi, phi, m));
    }
  }
}

TEST_CASE("homotopy identity") {
  DetRng rng(8);
  for (int n : {1, 2, 3}) {
    for (int dim : {2, 4}) {
      for (int mode = 0; mode < 2; ++mode) {  // diagonal, then non-commuting
        std::vector<Mat<Rat>> P, F;
        for (int i = 0; i < n; ++i) {
          P.push_back(mode == 0 ? rand_diag(dim, rng) : rand_mat(dim, rng));
          F.push_back(mode == 0 ? rand_diag(dim, rng) : rand_mat(dim, rng));
        }
        auto psi = matrix_family(P), phi = matrix_family(F);
        for (int p = 0; p <= n; ++p) {
          KE m{n, p, {}};
          fill_element(m, p, dim, rng);
          KE lhs = delK(psi, dK(phi, m)) + dK(phi, delK(psi, m));
          KE rhs = delta_dot(psi, phi, m) + delta_bracket(psi, phi, m);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("commutativity self-test") {
  DetRng rng(9);
  auto good = matrix_family({rand_diag(3, rng), rand_diag(3, rng)});
  auto bad = matrix_family({rand_mat(3, rng), rand_mat(3, rng)});
  std::vector<Vec> samples = {rand_vec(3, rng), rand_vec(3, rng)};
  CHECK(good.commutes_on(samples));
  CHECK(!bad.commutes_on(samples));
}

TEST_CASE("contraction section") {
  DetRng rng(10);
  // scalar family with Delta_dot = ab != 0, n = 1, p = 1: s^1 = psi/(ab) and
  // d^0 s^1 = id on all of K^1
  Rat a(3), b(5);
  Mat<Rat> ma(1, 1, a), mb(1, 1, b);
  auto phi = matrix_family({ma});
  auto psi = matrix_family({mb});
  std::function<Vec(const Vec&)> inv = [&](const Vec& x) {
    Vec r(x);
    for (auto& t : r.v) t /= (a * b);
    return r;
  };
  Vec m{std::vector<Rat>{Rat(7)}};
  KE k1{1, 1, {{MultiIndex{1}, m}}};
  KE s = contraction_section(psi, inv, ContractionVariant::PreInverse, k1);
  CHECK(dK(phi, s) == k1);
  CHECK(contraction_section(psi, inv, ContractionVariant::PostInverse, k1) == s);

  // zero input stays zero
  KE z{1, 1, {}};
  CHECK(contraction_section(psi, inv, ContractionVariant::PreInverse, z).comps.empty());

  // commuting diagonal families: on dK-cocycles the section splits dK
  for (int n : {2, 3}) {
    std::vector<Mat<Rat>> P, F;
    std::vector<Rat> dot(2, Rat(0));
    for (int i = 0; i < n; ++i) {
      Mat<Rat> dp(2, 2, Rat(0)), df(2, 2, Rat(0));
      for (int d = 0; d < 2; ++d) {
        dp(d, d) = Rat(rng.range(1, 4));  // positive keeps Delta_dot invertible
        df(d, d) = Rat(rng.range(1, 4));
        dot[d] += dp(d, d) * df(d, d);
      }
      P.push_back(dp);
      F.push_back(df);
    }
    auto psi2 = matrix_family(P), phi2 = matrix_family(F);
    std::function<Vec(const Vec&)> inv2 = [dot](const Vec& x) {
      Vec r(x);
      for (size_t d = 0; d < r.v.size(); ++d) r.v[d] /= dot[d];
      return r;
    };
    for (int p = 0; p + 1 <= n; ++p) {
      KE seed{n, p, {}};
      fill_element(seed, p, 2, rng);
      KE cocycle = dK(phi2, seed);
      KE s2 = contraction_section(psi2, inv2, ContractionVariant::PreInverse, cocycle);
      CHECK(dK(phi2, s2) == cocycle);
    }
  }
}
