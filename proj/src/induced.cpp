#include "igusa/induced.hpp"

namespace igusa {

namespace {

using DP = Dual<YPoly>;

// symmetric matrix of Y-variables
Mat<YPoly> y_matrix(int g) {
  const int dg = g * (g + 1) / 2;
  Mat<YPoly> Y(g, g, YPoly(dg));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) Y(i, j) = YPoly::variable(dg, pair_to_index(i, j, g));
  return Y;
}

Mat<YPoly> embed_rat_matrix(const Mat<Rat>& m, int dg) {
  Mat<YPoly> out(m.rows, m.cols, YPoly(dg));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out(i, j) = YPoly::constant(dg, m(i, j));
  return out;
}

// scatter a W-vector of Y-polynomials into an Induced<Rat>
Induced<Rat> gather(const Representation& rho, const std::vector<YPoly>& w) {
  Induced<Rat> out{rho, {}};
  for (size_t j = 0; j < w.size(); ++j)
    for (const auto& [m, c] : w[j].terms) out.add_term(m, static_cast<int>(j), c);
  out.prune();
  return out;
}

YPoly monomial_value(const Mat<YPoly>& Ysub, const YMono& m, int g) {
  const int dg = g * (g + 1) / 2;
  YPoly acc = YPoly::constant(dg, Rat(1));
  for (int idx = 0; idx < dg; ++idx) {
    auto [i, j] = index_to_pair(idx, g);
    for (int t = 0; t < m[idx]; ++t) acc = acc * Ysub(i, j);
  }
  return acc;
}

DP monomial_value_dual(const Mat<DP>& Ysub, const YMono& m, int g) {
  const int dg = g * (g + 1) / 2;
  DP acc{YPoly::constant(dg, Rat(1)), YPoly(dg)};
  for (int idx = 0; idx < dg; ++idx) {
    auto [i, j] = index_to_pair(idx, g);
    for (int t = 0; t < m[idx]; ++t) acc = acc * Ysub(i, j);
  }
  return acc;
}

}  // namespace

Mat<Rat> sym_unit(int k, int g) {
  Mat<Rat> x(g, g, Rat(0));
  auto [i, j] = index_to_pair(k, g);
  x(i, j) = 1;
  x(j, i) = 1;
  return x;
}

std::vector<Induced<Rat>> q_action_on_monomial(const Representation& rho, const Mat<Rat>& a,
                                               const Mat<Rat>& b, const Rat& nu, const YMono& m) {
  const int g = rho.g;
  const int dg = g * (g + 1) / 2;
  if (sgn(nu) == 0) throw NotInvertible("similitude factor must be a unit");
  // parabolic membership: a b^t = b a^t
  {
    Mat<Rat> abt = a * b.transpose();
    Mat<Rat> bat = b * a.transpose();
    if (!(abt == bat)) throw NotInParabolic();
  }
  auto ainv = mat_inverse(a);
  if (!ainv) throw NotInvertible();
  Mat<Rat> d = ainv->transpose();  // a^{-t}
  for (auto& v : d.a) v *= nu;     // d = a^{-t} nu

  // Y' = a^{-1} (b + Y d) over Y-polynomials
  Mat<YPoly> Y = y_matrix(g);
  Mat<YPoly> Yp = embed_rat_matrix(*ainv, dg) * (embed_rat_matrix(b, dg) + Y * embed_rat_matrix(d, dg));
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j)
      if (!(Yp(i, j) == Yp(j, i)))
        throw DomainError("Internal", "substituted Y matrix is not symmetric");

  Mat<Rat> Mrho = group_action_matrix(rho, a, nu);
  YPoly mono = monomial_value(Yp, m, g);

  std::vector<Induced<Rat>> out;
  out.reserve(rho.rank);
  for (long j = 0; j < rho.rank; ++j) {
    std::vector<YPoly> w(rho.rank, YPoly(dg));
    for (long i = 0; i < rho.rank; ++i) {
      if (sgn(Mrho(static_cast<int>(i), static_cast<int>(j))) == 0) continue;
      w[i] = YPoly::constant(dg, Mrho(static_cast<int>(i), static_cast<int>(j))) * mono;
    }
    out.push_back(gather(rho, w));
  }
  return out;
}

std::vector<Induced<Rat>> uminus_on_monomial(const Representation& rho, const Mat<Rat>& x,
                                             const YMono& m) {
  const int g = rho.g;
  const int dg = g * (g + 1) / 2;
  const YPoly pzero(dg);

  Mat<YPoly> Y = y_matrix(g);
  Mat<YPoly> Yx = Y * embed_rat_matrix(x, dg);
  Mat<YPoly> YxY = Yx * Y;

  // substituted argument Y - eps YxY and twist matrix 1 + eps Yx
  Mat<DP> Ysub(g, g, DP{pzero, pzero});
  Mat<DP> A(g, g, DP{pzero, pzero});
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      Ysub(i, j) = DP{Y(i, j), -YxY(i, j)};
      A(i, j) = DP{i == j ? YPoly::constant(dg, Rat(1)) : pzero, Yx(i, j)};
    }
  Mat<DP> Mrho = group_action_matrix(rho, A, DP{YPoly::constant(dg, Rat(1)), pzero});
  DP mono = monomial_value_dual(Ysub, m, g);

  std::vector<Induced<Rat>> out;
  out.reserve(rho.rank);
  for (long j = 0; j < rho.rank; ++j) {
    std::vector<YPoly> w(rho.rank, pzero);
    for (long i = 0; i < rho.rank; ++i) {
      DP v = Mrho(static_cast<int>(i), static_cast<int>(j)) * mono;
      w[i] = v.b;  // eps-coefficient
    }
    out.push_back(gather(rho, w));
  }
  return out;
}

Induced<Rat> q_group_action(const Mat<Rat>& a, const Mat<Rat>& b, const Rat& nu,
                            const Induced<Rat>& v) {
  QActionTable t(v.rep, a, b, nu);
  return t.apply(v);
}

Induced<Rat> uminus_action(const Mat<Rat>& x, const Induced<Rat>& v) {
  Induced<Rat> out{v.rep, {}};
  for (const auto& [m, w] : v.terms) {
    auto rows = uminus_on_monomial(v.rep, x, m);
    for (size_t j = 0; j < w.size(); ++j) {
      if (sgn(w[j]) == 0) continue;
      Induced<Rat> part = ind_scale(rows[j], w[j]);
      for (const auto& [m2, w2] : part.terms)
        for (size_t j2 = 0; j2 < w2.size(); ++j2) out.add_term(m2, static_cast<int>(j2), w2[j2]);
    }
  }
  out.prune();
  return out;
}

const std::vector<Induced<Rat>>& UminusTable::row(int xi, const YMono& m) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(xi, m);
  auto it = memo_.find(key);
  if (it == memo_.end())
    it = memo_.emplace(key, uminus_on_monomial(rho_, sym_unit(xi, rho_.g), m)).first;
  return it->second;
}

const std::vector<Induced<Rat>>& QActionTable::row(const YMono& m) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = memo_.find(m);
  if (it == memo_.end()) it = memo_.emplace(m, q_action_on_monomial(rho_, a_, b_, nu_, m)).first;
  return it->second;
}

// ---------- exact linear algebra ----------

std::vector<YMono> monomials_of_degree(int nvars, int r) {
  std::vector<YMono> out;
  YMono cur(nvars, 0);
  // lexicographic enumeration of compositions of r into nvars parts
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == nvars - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (nvars == 0) return out;
  rec(0, r);
  return out;
}

Echelon echelonize(const std::vector<std::vector<Rat>>& input) {
  Echelon e;
  const size_t n = input.empty() ? 0 : input[0].size();
  for (size_t r = 0; r < input.size(); ++r) {
    std::vector<Rat> row = input[r];
    std::vector<Rat> tr(input.size(), Rat(0));
    tr[r] = 1;
    // reduce against existing echelon rows
    for (size_t i = 0; i < e.rows.size(); ++i) {
      const Rat& c = row[e.pivots[i]];
      if (sgn(c) == 0) continue;
      Rat f = c;  // echelon pivots are 1
      for (size_t k = 0; k < n; ++k) row[k] -= f * e.rows[i][k];
      for (size_t k = 0; k < tr.size(); ++k) tr[k] -= f * e.transform[i][k];
    }
    int piv = -1;
    for (size_t k = 0; k < n; ++k)
      if (sgn(row[k]) != 0) {
        piv = static_cast<int>(k);
        break;
      }
    if (piv < 0) continue;
    Rat inv = Rat(1) / row[piv];
    for (auto& v : row) v *= inv;
    for (auto& v : tr) v *= inv;
    // back-substitute into earlier rows to keep the form reduced
    for (size_t i = 0; i < e.rows.size(); ++i) {
      const Rat c = e.rows[i][piv];
      if (sgn(c) == 0) continue;
      for (size_t k = 0; k < n; ++k) e.rows[i][k] -= c * row[k];
      for (size_t k = 0; k < tr.size(); ++k) e.transform[i][k] -= c * tr[k];
    }
    e.rows.push_back(std::move(row));
    e.pivots.push_back(piv);
    e.transform.push_back(std::move(tr));
  }
  return e;
}

std::optional<std::vector<Rat>> solve_in_span(const Echelon& ech, const std::vector<Rat>& v) {
  std::vector<Rat> row = v;
  std::vector<Rat> coeff(ech.transform.empty() ? 0 : ech.transform[0].size(), Rat(0));
  for (size_t i = 0; i < ech.rows.size(); ++i) {
    const Rat c = row[ech.pivots[i]];
    if (sgn(c) == 0) continue;
    for (size_t k = 0; k < row.size(); ++k) row[k] -= c * ech.rows[i][k];
    for (size_t k = 0; k < coeff.size(); ++k) coeff[k] += c * ech.transform[i][k];
  }
  for (const auto& x : row)
    if (sgn(x) != 0) return std::nullopt;
  if (coeff.empty()) {
    // empty span: v must be zero (checked above); no coordinates
    return std::vector<Rat>{};
  }
  return coeff;
}

std::vector<Rat> coordinates_of(const Induced<Rat>& v, int degree) {
  const int dg = v.rep.g * (v.rep.g + 1) / 2;
  auto monos = monomials_of_degree(dg, degree);
  std::map<YMono, size_t> pos;
  for (size_t i = 0; i < monos.size(); ++i) pos[monos[i]] = i;
  std::vector<Rat> out(monos.size() * v.rep.rank, Rat(0));
  for (const auto& [m, w] : v.terms) {
    if (ymono_degree(m) != degree)
      throw NotHomogeneous("coordinates_of needs a Y-homogeneous element");
    size_t base = pos.at(m) * v.rep.rank;
    for (size_t j = 0; j < w.size(); ++j) out[base + j] = w[j];
  }
  return out;
}

LBasis generate_L_lambda(const Representation& rho, const std::vector<Rat>& v_lambda,
                         int max_degree) {
  LBasis out;
  out.rep = rho;
  const int dg = rho.g * (rho.g + 1) / 2;

  Induced<Rat> seed = embed_constant(rho, v_lambda);
  if (seed.is_zero()) {
    out.stabilized = true;
    return out;
  }
  out.degrees.push_back({seed});
  out.dimension = 1;

  UminusTable table(rho);
  for (int r = 1;; ++r) {
    if (r > max_degree) throw Truncated("generate_L_lambda: max_degree reached");
    const auto& prev = out.degrees.back();
    std::vector<Induced<Rat>> kept;
    std::vector<std::vector<Rat>> rows;
    Echelon ech;
    for (int xi = 0; xi < dg; ++xi)
      for (const auto& b : prev) {
        Induced<Rat> cand = table.apply(xi, b);
        if (cand.is_zero()) continue;
        std::vector<Rat> co = coordinates_of(cand, r);
        rows.push_back(co);
        Echelon trial = echelonize(rows);
        if (trial.rows.size() == rows.size()) {
          kept.push_back(std::move(cand));
          ech = std::move(trial);
        } else {
          rows.pop_back();
        }
      }
    if (kept.empty()) {
      out.stabilized = true;
      return out;
    }
    out.dimension += static_cast<long>(kept.size());
    out.degrees.push_back(std::move(kept));
  }
}

std::optional<std::vector<Rat>> membership(const Induced<Rat>& v, const LBasis& basis) {
  std::vector<Rat> coords;
  size_t offset = 0;
  std::vector<size_t> offsets;
  for (const auto& deg : basis.degrees) {
    offsets.push_back(offset);
    offset += deg.size();
  }
  coords.assign(basis.dimension, Rat(0));

  auto pieces = grade_split(v);
  for (const auto& [r, piece] : pieces) {
    if (r >= static_cast<int>(basis.degrees.size())) return std::nullopt;
    const auto& deg = basis.degrees[r];
    std::vector<std::vector<Rat>> rows;
    rows.reserve(deg.size());
    for (const auto& b : deg) rows.push_back(coordinates_of(b, r));
    Echelon ech = echelonize(rows);
    auto sol = solve_in_span(ech, coordinates_of(piece, r));
    if (!sol) return std::nullopt;
    for (size_t k = 0; k < sol->size(); ++k) coords[offsets[r] + k] = (*sol)[k];
  }
  return coords;
}

}  // namespace igusa
