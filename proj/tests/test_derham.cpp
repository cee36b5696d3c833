#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "igusa/polyparse.hpp"

using namespace igusa;
using namespace igusa::testing;

namespace {

const PadicContext kCtx2(5, 6, 1, 2);
const Rat kT(10);

DeRhamEngine engine2(RepPtr expr) { return DeRhamEngine(kCtx2, Representation(expr, 2)); }

QSeries q1_series(const PadicContext& c1, std::vector<std::pair<long, long>> terms, const Rat& T) {
  // one-variable style entries (n, coeff): index (2n)
  QSeries s(c1, 1, T);
  for (auto [n, c] : terms) s.add_term(QIndex(std::vector<long long>{2 * n}), 1, Rat(c));
  s.normalize();
  return s;
}

}  // namespace

TEST_CASE("nabla reproduces the genus-1 display") {
  PadicContext c1(5, 6, 1, 1);
  for (int k = 2; k <= 6; ++k) {
    Representation chi(rep_sym(k - 2, rep_std()), 1);
    DeRhamEngine eng(c1, chi);
    QSeries s = q1_series(c1, {{1, 3}, {2, -1}, {4, 2}}, Rat(16));
    for (int i = 0; i <= k - 2; ++i) {
      DeRhamForm F = eng.zero_form(0);
      SeriesInduced v{chi, {}};
      v.add_term(YMono{i}, 0, s);
      F.set_component({}, v);
      DeRhamForm nF = eng.nabla(F);
      // expected: theta(s) Y^i + (k-2-i) s Y^{i+1} on the single omega slot
      DeRhamForm want = eng.zero_form(1);
      SeriesInduced w{chi, {}};
      w.add_term(YMono{i}, 0, theta(1, s));
      w.add_term(YMono{i + 1}, 0, qs_scale(s, Rat(k - 2 - i)));
      w.prune();
      want.set_component({1}, w);
      CHECK(nF == want);
    }
  }
}

TEST_CASE("nabla kills flat constants") {
  // trivial rep, constant scalar, Y-degree 0: both theta and partial vanish
  auto eng = engine2(rep_trivial());
  DeRhamForm F = eng.zero_form(0);
  SeriesInduced v{eng.rep(), {}};
  v.add_term(YMono{0, 0, 0}, 0, qs_one(kCtx2, kT));
  F.set_component({}, v);
  CHECK(eng.nabla(F).is_zero());
}

TEST_CASE("nabla squares to zero") {
  DetRng rng(1001);
  for (auto expr : {rep_trivial(), rep_std(), rep_tensor(rep_sym(2, rep_std()), rep_det(1))}) {
    auto eng = engine2(expr);
    for (int deg = 0; deg <= 2; ++deg)
      for (int trial = 0; trial < 4; ++trial) {
        DeRhamForm F = random_form(eng, deg, kT, rng, 3);
        CHECK(eng.nabla(eng.nabla(F)).is_zero());
        CHECK(eng.theta_op(eng.theta_op(F)).is_zero());
        CHECK(eng.nabla(F) == eng.theta_op(F) + eng.delta_op(F));
      }
  }
}

TEST_CASE("theta and delta parts") {
  PadicContext c1(5, 6, 1, 1);
  Representation chi(rep_sym(2, rep_std()), 1);  // k = 4
  DeRhamEngine eng(c1, chi);
  QSeries s = q1_series(c1, {{1, 1}, {3, 2}}, Rat(16));
  DeRhamForm F = eng.zero_form(0);
  SeriesInduced v{chi, {}};
  v.add_term(YMono{1}, 0, s);  // Y-degree 1, k-2-i = 1
  F.set_component({}, v);

  DeRhamForm th = eng.theta_part(F, 1), de = eng.delta_part(F, 1);
  DeRhamForm want_th = eng.zero_form(1), want_de = eng.zero_form(1);
  {
    SeriesInduced w{chi, {}};
    w.add_term(YMono{1}, 0, theta(1, s));
    want_th.set_component({1}, w);
    SeriesInduced u{chi, {}};
    u.add_term(YMono{2}, 0, s);
    want_de.set_component({1}, u);
  }
  CHECK(th == want_th);
  CHECK(de == want_de);
  CHECK(th + de == eng.nabla(F));

  // delta on a form killed by every partial: trivial rep, Y-degree 0
  auto engt = engine2(rep_trivial());
  DeRhamForm flat = engt.zero_form(1);
  SeriesInduced u{engt.rep(), {}};
  u.add_term(YMono{0, 0, 0}, 0, qs_one(kCtx2, kT));
  flat.set_component({2}, u);
  CHECK(engt.delta_part(flat, 0).is_zero());

  // mixed degrees are rejected
  DetRng rng(7);
  auto eng2 = engine2(rep_std());
  DeRhamForm mixed = eng2.zero_form(1);
  SeriesInduced m{eng2.rep(), {}};
  m.add_term(YMono{0, 0, 0}, 0, random_series(kCtx2, kT, rng, 2));
  m.add_term(YMono{1, 0, 0}, 1, random_series(kCtx2, kT, rng, 2));
  mixed.set_component({1}, m);
  CHECK_THROWS_AS(eng2.theta_part(mixed, 0), NotHomogeneous);

  // theta_part + delta_part = nabla on homogeneous random g=2 input
  for (int trial = 0; trial < 5; ++trial) {
    DeRhamForm R = random_form(eng2, 1, kT, rng, 0);  // concentrate in degree 0
    CHECK(eng2.theta_part(R, 0) + eng2.delta_part(R, 0) == eng2.nabla(R));
  }
}

TEST_CASE("theta matches the scalar Koszul complex slotwise") {
  // on w (x) Y^m-pure forms, Theta is the scalar dK of the theta family
  auto eng = engine2(rep_sym(2, rep_std()));
  DetRng rng(77);
  OperatorFamily<QSeries> thetas;
  thetas.n = 3;
  for (int i = 1; i <= 3; ++i)
    thetas.ops.push_back([i](const QSeries& s) { return theta(i, s); });

  YMono m{1, 0, 2};
  int slot = 1;
  KoszulElement<QSeries> scalar{3, 1, {}};
  DeRhamForm F = eng.zero_form(1);
  for (int j = 1; j <= 3; ++j) {
    QSeries s = random_series(kCtx2, kT, rng, 3);
    scalar.accumulate({j}, s);
    SeriesInduced v{eng.rep(), {}};
    v.add_term(m, slot, s);
    F.set_component({j}, v);
  }
  KoszulElement<QSeries> ds = dK(thetas, scalar);
  DeRhamForm dF = eng.theta_op(F);
  for (const auto& [j, s] : ds.comps) {
    SeriesInduced v{eng.rep(), {}};
    v.add_term(m, slot, s);
    CHECK(dF.comps.at(j) == v);
  }
  CHECK(dF.comps.size() == ds.comps.size());
}

TEST_CASE("deplete_form") {
  auto eng = engine2(rep_std());
  ThetaPolynomial P = parse_poly("T1*T2 + T3", 3);
  DetRng rng(1003);
  for (int trial = 0; trial < 5; ++trial) {
    DeRhamForm F = random_form(eng, 1, kT, rng, 2);
    DeRhamForm dF = eng.deplete_form(P, F);
    CHECK(eng.deplete_form(P, dF) == dF);
    CHECK(eng.form_is_depleted(P, dF));
    // subcomplex property: depletion commutes with nabla, Theta and Delta
    CHECK(eng.nabla(dF) == eng.deplete_form(P, eng.nabla(F) - eng.nabla(F - dF)));
    CHECK(eng.deplete_form(P, eng.nabla(dF)) == eng.nabla(dF));
    CHECK(eng.deplete_form(P, eng.theta_op(F)) == eng.theta_op(eng.deplete_form(P, F)));
    CHECK(eng.deplete_form(P, eng.delta_op(F)) == eng.delta_op(eng.deplete_form(P, F)));
  }
}

TEST_CASE("is_closed") {
  auto eng = engine2(rep_std());
  DetRng rng(1007);
  CHECK(eng.is_closed(eng.zero_form(1)));
  for (int trial = 0; trial < 4; ++trial) {
    DeRhamForm G = random_form(eng, 1, kT, rng, 2);
    CHECK(eng.is_closed(eng.nabla(G)));
  }
  // a generic 0-form with a nonconstant scalar is not closed
  DeRhamForm F = eng.zero_form(0);
  SeriesInduced v{eng.rep(), {}};
  QSeries s(kCtx2, 1, kT);
  s.add_term(QIndex(std::vector<long long>{2, 0, 0}), 1, Rat(1));
  v.add_term(YMono{0, 0, 0}, 0, s);
  F.set_component({}, v);
  CHECK(!eng.is_closed(F));
}

TEST_CASE("decompose_P") {
  ThetaPolynomial P = parse_poly("T1*T2 + T3", 3);
  auto parts = DeRhamEngine::decompose_P(P);
  CHECK(parts[0] == parse_poly("T2", 3));
  CHECK(parts[1].is_zero());
  CHECK(parts[2] == parse_poly("1", 3));

  auto single = DeRhamEngine::decompose_P(parse_poly("T1", 3));
  CHECK(single[0] == parse_poly("1", 3));

  CHECK_THROWS_AS(DeRhamEngine::decompose_P(parse_poly("5", 3)), NonVanishingConstant);
  CHECK_THROWS_AS(DeRhamEngine::decompose_P(parse_poly("T1*T2 + 1", 3)), NonVanishingConstant);

  // re-expansion: sum_k T_k P_k^* = P on random polynomials with P(0) = 0
  DetRng rng(1009);
  for (int trial = 0; trial < 10; ++trial) {
    ThetaPolynomial Q(3);
    for (int t = 0; t < 4; ++t) {
      std::vector<int> e(3, 0);
      e[rng.below(3)] += 1;
      if (rng.below(2)) e[rng.below(3)] += 1;
      Q.add_term(e, Rat(rng.range(-3, 3)));
    }
    auto qq = DeRhamEngine::decompose_P(Q);
    ThetaPolynomial back(3);
    for (int k = 0; k < 3; ++k) back = back + ThetaPolynomial::variable(3, k + 1) * qq[k];
    CHECK(back == Q);
  }
}

TEST_CASE("theta_inverse") {
  // g = 1, p-form degree 1, P = T1: the inverse is theta_P^{-1} itself
  PadicContext c1(5, 6, 1, 1);
  Representation chi(rep_sym(2, rep_std()), 1);
  DeRhamEngine eng1(c1, chi);
  ThetaPolynomial P1 = parse_poly("T1", 1);
  QSeries s = q1_series(c1, {{1, 2}, {3, 1}}, Rat(16));
  DeRhamForm f = eng1.zero_form(1);
  SeriesInduced v{chi, {}};
  v.add_term(YMono{0}, 0, s);
  f.set_component({1}, v);
  DeRhamForm Fi = eng1.theta_inverse(P1, f);
  SeriesInduced w{chi, {}};
  w.add_term(YMono{0}, 0, theta_poly_inverse(P1, s));
  DeRhamForm want = eng1.zero_form(0);
  want.set_component({}, w);
  CHECK(Fi == want);

  CHECK(eng1.theta_inverse(P1, eng1.zero_form(1)).is_zero());

  // g = 2: Theta(Theta^{-1}(f)) = f on Theta-closed depleted forms
  DetRng rng(1013);
  for (const char* ps : {"T1", "T1*T2 + T3", "T1 + T2 + T3"}) {
    ThetaPolynomial P = parse_poly(ps, 3);
    for (auto expr : {rep_trivial(), rep_std()}) {
      auto eng = engine2(expr);
      for (int p = 1; p <= 3; ++p)
        for (int trial = 0; trial < 3; ++trial) {
          DeRhamForm G = random_form(eng, p - 1, kT, rng, 2, &P);
          DeRhamForm f2 = eng.theta_op(G);  // Theta-closed by Theta^2 = 0
          if (f2.is_zero()) continue;
          CHECK(eng.theta_op(eng.theta_inverse(P, f2)) == f2);
        }
    }
  }

  // agreement with the generic Koszul contraction on scalar forms
  {
    ThetaPolynomial P = parse_poly("T1*T2 + T3", 3);
    auto parts = DeRhamEngine::decompose_P(P);
    auto eng = engine2(rep_trivial());
    OperatorFamily<SeriesInduced> psi;
    psi.n = 3;
    for (int k = 1; k <= 3; ++k) {
      ThetaPolynomial pk = parts[k - 1];
      psi.ops.push_back([pk](const SeriesInduced& x) {
        SeriesInduced out{x.rep, {}};
        for (const auto& [m, w] : x.terms)
          for (size_t j = 0; j < w.size(); ++j)
            out.add_term(m, static_cast<int>(j), theta_poly(pk, w[j]));
        out.prune();
        return out;
      });
    }
    std::function<SeriesInduced(const SeriesInduced&)> inv = [&P](const SeriesInduced& x) {
      SeriesInduced out{x.rep, {}};
      for (const auto& [m, w] : x.terms)
        for (size_t j = 0; j < w.size(); ++j)
          out.add_term(m, static_cast<int>(j), theta_poly_inverse(P, w[j]));
      out.prune();
      return out;
    };
    for (int trial = 0; trial < 4; ++trial) {
      DeRhamForm f3 = random_form(eng, 2, kT, rng, 1, &P);
      KoszulElement<SeriesInduced> ke{3, 2, f3.comps};
      auto via_koszul =
          contraction_section(psi, inv, ContractionVariant::PreInverse, ke);
      DeRhamForm direct = eng.theta_inverse(P, f3);
      CHECK(via_koszul.comps == direct.comps);
    }
  }

  // non-depleted input is rejected
  {
    auto eng = engine2(rep_trivial());
    ThetaPolynomial P = parse_poly("T1", 3);
    DeRhamForm bad = eng.zero_form(1);
    SeriesInduced u{eng.rep(), {}};
    QSeries nd(kCtx2, 1, kT);
    nd.add_term(QIndex(std::vector<long long>{10, 0, 0}), 1, Rat(1));  // eigenvalue 5
    u.add_term(YMono{0, 0, 0}, 0, nd);
    bad.set_component({1}, u);
    CHECK_THROWS_AS(eng.theta_inverse(P, bad), NotDepleted);
  }
}

TEST_CASE("solver: p = 1 round trip recovers the primitive") {
  DetRng rng(1019);
  ThetaPolynomial P = parse_poly("T1*T2 + T3", 3);
  auto eng = engine2(rep_std());
  for (int trial = 0; trial < 5; ++trial) {
    DeRhamForm G = random_form(eng, 0, kT, rng, 3, &P);
    DeRhamForm f = eng.nabla(G);
    if (!eng.form_is_depleted(P, f)) continue;
    SolverReport rep = eng.solve_primitive(P, f, 64);
    CHECK(rep.residual_ok);
    CHECK(eng.nabla(rep.primitive) == f);
    CHECK(rep.primitive == G);  // ker Theta^0 = 0 on depleted sections
    CHECK(rep.iterations <= form_max_ydegree(G) + 1);
    for (const auto& [i, Fi] : rep.graded) {
      CHECK(form_grade(Fi, i) == Fi);          // homogeneous of grade i
      CHECK(eng.form_is_depleted(P, Fi));      // and still P-depleted
    }
  }
}

TEST_CASE("solver: zero input") {
  auto eng = engine2(rep_std());
  ThetaPolynomial P = parse_poly("T1", 3);
  SolverReport rep = eng.solve_primitive(P, eng.zero_form(2), 16);
  CHECK(rep.primitive.is_zero());
  CHECK(rep.residual_ok);
  CHECK(rep.iterations == 0);
}

TEST_CASE("solver: input validation") {
  DetRng rng(1021);
  auto eng = engine2(rep_std());
  ThetaPolynomial P = parse_poly("T1*T2 + T3", 3);

  // not closed
  for (int attempt = 0; attempt < 8; ++attempt) {
    DeRhamForm F = random_form(eng, 1, kT, rng, 2, &P);
    if (eng.is_closed(F)) continue;
    CHECK_THROWS_AS(eng.solve_primitive(P, F, 16), NotClosed);
    break;
  }

  // not depleted: a closed form with a bad eigenvalue term
  DeRhamForm bad = eng.zero_form(3);  // top degree is always closed
  SeriesInduced u{eng.rep(), {}};
  QSeries nd(kCtx2, 1, kT);
  nd.add_term(QIndex(std::vector<long long>{10, 0, 0}), 1, Rat(1));
  u.add_term(YMono{0, 0, 0}, 0, nd);
  bad.set_component({1, 2, 3}, u);
  CHECK_THROWS_AS(eng.solve_primitive(P, bad, 16), NotDepleted);

  // P with constant term
  CHECK_THROWS_AS(eng.solve_primitive(parse_poly("T1 + 1", 3), eng.zero_form(1), 16),
                  NonVanishingConstant);
}

TEST_CASE("solver: generic V-valued inputs do not terminate for p >= 2") {
  // For form degrees >= 2 the recursion acquires a correction cascade that
  // never dies on generic (non-L-valued) data; the engine reports
  // NoTermination instead of looping.
  DetRng rng(1031);
  ThetaPolynomial P = parse_poly("T1*T2 + T3", 3);
  auto eng = engine2(rep_std());
  DeRhamForm G = random_form(eng, 1, kT, rng, 3, &P);
  DeRhamForm f = eng.nabla(G);
  REQUIRE(eng.form_is_depleted(P, f));
  REQUIRE(!f.is_zero());
  CHECK_THROWS_AS(eng.solve_primitive(P, f, 24), NoTermination);
}

TEST_CASE("solver: L-valued inputs terminate for every degree") {
  DetRng rng(1033);
  ThetaPolynomial P = parse_poly("T1*T2 + T3", 3);
  Representation rho(rep_std(), 2);
  DeRhamEngine eng(kCtx2, rho);
  LBasis L = generate_L_lambda(rho, highest_weight_vector(rho), 16);
  for (int p = 1; p <= 3; ++p)
    for (int trial = 0; trial < 3; ++trial) {
      DeRhamForm G = random_L_valued_form(eng, L, p - 1, kT, P, rng);
      DeRhamForm f = eng.nabla(G);
      if (f.is_zero() || !eng.form_is_depleted(P, f)) continue;
      SolverReport rep = eng.solve_primitive(P, f, 16);
      CHECK(rep.residual_ok);
      CHECK(eng.nabla(rep.primitive) == f);
      auto rr = eng.restrict_to_L(L, f, rep);
      CHECK(rr.input_in_L);
      CHECK(rr.primitive_in_L);
    }
}

TEST_CASE("restrict_to_L flags non-L inputs") {
  DetRng rng(1039);
  ThetaPolynomial P = parse_poly("T1", 3);
  Representation rho(rep_std(), 2);
  DeRhamEngine eng(kCtx2, rho);
  LBasis L = generate_L_lambda(rho, highest_weight_vector(rho), 16);
  // e_2 (x) Y^0 is outside U(u^-) e_1
  DeRhamForm f = eng.zero_form(1);
  SeriesInduced v{rho, {}};
  v.add_term(YMono{0, 0, 0}, 1, random_depleted_series(kCtx2, kT, P, rng, 2));
  f.set_component({1}, v);
  SolverReport rep{eng.zero_form(0), {}, 0, true};
  CHECK(!eng.restrict_to_L(L, f, rep).input_in_L);
}

TEST_CASE("frobenius_form") {
  const long p = 5;
  auto eng = engine2(rep_trivial());
  DetRng rng(1049);

  // trivial rep, degree-r Y-monomials: scalars get q^mu -> q^{p mu},
  // the induced part scales by p^{-r} (0-forms carry no omega twist)
  for (int r = 0; r <= 3; ++r) {
    QSeries s = random_series(kCtx2, kT, rng, 2);
    DeRhamForm F = eng.zero_form(0);
    SeriesInduced v{eng.rep(), {}};
    YMono m(3, 0);
    m[0] = r;
    v.add_term(m, 0, s);
    F.set_component({}, v);
    DeRhamForm got = eng.frobenius_form(F);
    DeRhamForm want = eng.zero_form(0);
    SeriesInduced w{eng.rep(), {}};
    w.add_term(m, 0, qs_scale(frobenius(s), ring_pow(Rat(1, p), r, Rat(1))));
    w.prune();
    want.set_component({}, w);
    CHECK(got == want);
  }

  // constant form: fixed up to the m_0 weight on the W slot
  {
    auto engs = engine2(rep_sim(1));
    DeRhamForm F = engs.zero_form(0);
    SeriesInduced v{engs.rep(), {}};
    v.add_term(YMono{0, 0, 0}, 0, qs_one(kCtx2, kT));
    F.set_component({}, v);
    // rho = nu^1: m_0 multiplies by p
    CHECK(engs.frobenius_form(F) ==
          [&] {
            DeRhamForm w = engs.zero_form(0);
            SeriesInduced u{engs.rep(), {}};
            u.add_term(YMono{0, 0, 0}, 0, qs_scale(qs_one(kCtx2, kT), Rat(p)));
            w.set_component({}, u);
            return w;
          }());
  }

  // section-level commutation nabla_i phi = p phi nabla_i, and the form
  // level identity nabla(phi(F)) = phi(nabla(F)) with the omega twist
  for (auto expr : {rep_trivial(), rep_std()}) {
    auto eng2 = engine2(expr);
    for (int trial = 0; trial < 4; ++trial) {
      DeRhamForm F = random_form(eng2, 0, kT, rng, 2);
      const SeriesInduced& u = F.comps.empty() ? SeriesInduced{eng2.rep(), {}}
                                               : F.comps.begin()->second;
      DeRhamForm phiF = eng2.frobenius_form(F);
      for (int i = 1; i <= 3; ++i) {
        SeriesInduced lhs = eng2.apply_nabla_i(
            i, phiF.comps.empty() ? SeriesInduced{eng2.rep(), {}} : phiF.comps.begin()->second);
        DeRhamForm Fi = eng2.zero_form(0);
        SeriesInduced ni = eng2.apply_nabla_i(i, u);
        if (!is_zero(ni)) Fi.set_component({}, ni);
        DeRhamForm rhs_form = eng2.frobenius_form(Fi);
        SeriesInduced rhs = rhs_form.comps.empty() ? SeriesInduced{eng2.rep(), {}}
                                                   : rhs_form.comps.begin()->second;
        rhs = ind_scale(rhs, Rat(p));
        CHECK(lhs == rhs);
      }
      for (int deg = 0; deg <= 2; ++deg) {
        DeRhamForm R = random_form(eng2, deg, kT, rng, 2);
        CHECK(eng2.nabla(eng2.frobenius_form(R)) == eng2.frobenius_form(eng2.nabla(R)));
      }
    }
  }
}

TEST_CASE("genus 3 smoke: the combinatorics scale past d_g = 3") {
  PadicContext ctx(5, 4, 1, 3);  // d_g = 6
  DetRng rng(3001);
  DeRhamEngine eng(ctx, Representation(rep_std(), 3));
  ThetaPolynomial P = parse_poly("T1 + T4", 6);
  for (int deg : {0, 1}) {
    DeRhamForm F = random_form(eng, deg, Rat(6), rng, 1);
    CHECK(eng.nabla(eng.nabla(F)).is_zero());
    CHECK(eng.theta_op(eng.theta_op(F)).is_zero());
  }
  for (int p = 1; p <= 2; ++p) {
    DeRhamForm G = random_form(eng, p - 1, Rat(6), rng, 1, &P);
    DeRhamForm f = eng.theta_op(G);
    if (!f.is_zero()) CHECK(eng.theta_op(eng.theta_inverse(P, f)) == f);
  }
  DeRhamForm G = random_form(eng, 0, Rat(6), rng, 2, &P);
  DeRhamForm f = eng.nabla(G);
  if (!f.is_zero() && eng.form_is_depleted(P, f)) {
    SolverReport rep = eng.solve_primitive(P, f, 16);
    CHECK(rep.residual_ok);
    CHECK(rep.primitive == G);
  }
}
