#include "igusa/json_io.hpp"

#include <algorithm>

namespace igusa {

namespace {

QIndex index_from_matrix(const Json& m, int g) {
  if (!m.is_array() || static_cast<int>(m.size()) != g)
    throw SyntaxError("index must be a g x g matrix", 0);
  QIndex idx = QIndex::zero(g * (g + 1) / 2);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      long long v = m.at(i).at(j).get<long long>();
      if (m.at(j).at(i).get<long long>() != v) throw SyntaxError("index matrix not symmetric", 0);
      if (j >= i) idx.e[pair_to_index(i, j, g)] = v;
    }
  return idx;
}

}  // namespace

Json qseries_to_json(const QSeries& f) {
  Json j;
  j["g"] = f.ctx.g;
  j["D"] = f.D;
  j["truncation"] = rat_str(f.truncation);
  // deterministic order: lexicographic on the flattened matrix
  std::vector<std::pair<std::vector<long long>, const Rat*>> rows;
  for (const auto& [idx, c] : f.terms) rows.emplace_back(idx.flatten(f.ctx.g), &c);
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Json terms = Json::array();
  for (const auto& [flat, c] : rows) {
    Json t;
    Json m = Json::array();
    for (int i = 0; i < f.ctx.g; ++i) {
      Json row = Json::array();
      for (int jx = 0; jx < f.ctx.g; ++jx)
        row.push_back(flat[static_cast<size_t>(i) * f.ctx.g + jx]);
      m.push_back(row);
    }
    t["index"] = m;
    t["coeff"] = rat_str(*c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

QSeries qseries_from_json(const Json& j, const PadicContext& ctx) {
  int g = j.at("g").get<int>();
  if (g != ctx.g) throw ContextMismatch("series genus does not match the context");
  long long D = j.at("D").get<long long>();
  Rat trunc = parse_rat(j.at("truncation").get<std::string>());
  QSeries f(ctx, 1, trunc);
  for (const auto& t : j.at("terms"))
    f.add_term(index_from_matrix(t.at("index"), g), D,
               parse_rat(t.at("coeff").get<std::string>()));
  f.normalize();
  return f;
}

Json repexpr_to_json(const RepPtr& r) {
  using Kind = RepExpr::Kind;
  Json j;
  switch (r->kind) {
    case Kind::Std:
      j["kind"] = "std";
      break;
    case Kind::Trivial:
      j["kind"] = "trivial";
      break;
    case Kind::Dual:
      j["kind"] = "dual";
      j["of"] = repexpr_to_json(r->lhs);
      break;
    case Kind::Sym:
      j["kind"] = "sym";
      j["k"] = r->k;
      j["of"] = repexpr_to_json(r->lhs);
      break;
    case Kind::Wedge:
      j["kind"] = "wedge";
      j["k"] = r->k;
      j["of"] = repexpr_to_json(r->lhs);
      break;
    case Kind::Tensor:
      j["kind"] = "tensor";
      j["lhs"] = repexpr_to_json(r->lhs);
      j["rhs"] = repexpr_to_json(r->rhs);
      break;
    case Kind::DetPower:
      j["kind"] = "detpower";
      j["m"] = r->k;
      break;
    case Kind::SimTwist:
      j["kind"] = "simtwist";
      j["m"] = r->k;
      break;
  }
  return j;
}

RepPtr repexpr_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "std") return rep_std();
  if (kind == "trivial") return rep_trivial();
  if (kind == "dual") return rep_dual(repexpr_from_json(j.at("of")));
  if (kind == "sym") return rep_sym(j.at("k").get<int>(), repexpr_from_json(j.at("of")));
  if (kind == "wedge") return rep_wedge(j.at("k").get<int>(), repexpr_from_json(j.at("of")));
  if (kind == "tensor")
    return rep_tensor(repexpr_from_json(j.at("lhs")), repexpr_from_json(j.at("rhs")));
  if (kind == "detpower") return rep_det(j.at("m").get<int>());
  if (kind == "simtwist") return rep_sim(j.at("m").get<int>());
  throw SyntaxError("unknown representation kind '" + kind + "'", 0);
}

Json induced_to_json(const Induced<Rat>& v) {
  Json j;
  j["rep"] = repexpr_to_json(v.rep.expr);
  Json terms = Json::array();
  for (const auto& [m, w] : v.terms) {
    Json t;
    t["ymono"] = m;
    Json wv = Json::array();
    for (const auto& c : w) wv.push_back(rat_str(c));
    t["wvec"] = wv;
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

Induced<Rat> induced_from_json(const Json& j, int g) {
  Representation rep(repexpr_from_json(j.at("rep")), g);
  Induced<Rat> v{rep, {}};
  for (const auto& t : j.at("terms")) {
    YMono m = t.at("ymono").get<YMono>();
    const auto& wv = t.at("wvec");
    for (size_t i = 0; i < wv.size(); ++i)
      v.add_term(m, static_cast<int>(i), parse_rat(wv.at(i).get<std::string>()));
  }
  v.prune();
  return v;
}

Json series_induced_to_json(const SeriesInduced& v) {
  Json j;
  j["rep"] = repexpr_to_json(v.rep.expr);
  Json terms = Json::array();
  for (const auto& [m, w] : v.terms) {
    Json t;
    t["ymono"] = m;
    Json wv = Json::array();
    for (const auto& s : w) wv.push_back(qseries_to_json(s));
    t["wvec"] = wv;
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

SeriesInduced series_induced_from_json(const Json& j, const PadicContext& ctx) {
  Representation rep(repexpr_from_json(j.at("rep")), ctx.g);
  SeriesInduced v{rep, {}};
  for (const auto& t : j.at("terms")) {
    YMono m = t.at("ymono").get<YMono>();
    const auto& wv = t.at("wvec");
    for (size_t i = 0; i < wv.size(); ++i)
      v.add_term(m, static_cast<int>(i), qseries_from_json(wv.at(i), ctx));
  }
  v.prune();
  return v;
}

Json form_to_json(const DeRhamForm& F) {
  Json j;
  j["degree"] = F.degree;
  j["rep"] = repexpr_to_json(F.rep.expr);
  Json comps = Json::array();
  for (const auto& [mi, v] : F.comps) {
    Json c;
    c["multiindex"] = mi;
    c["value"] = series_induced_to_json(v);
    comps.push_back(c);
  }
  j["components"] = comps;
  return j;
}

DeRhamForm form_from_json(const Json& j, const PadicContext& ctx) {
  Representation rep(repexpr_from_json(j.at("rep")), ctx.g);
  DeRhamForm F(ctx, rep, j.at("degree").get<int>());
  for (const auto& c : j.at("components")) {
    MultiIndex mi = c.at("multiindex").get<MultiIndex>();
    F.set_component(mi, series_induced_from_json(c.at("value"), ctx));
  }
  // every scalar coefficient must share one trace bound
  std::optional<Rat> T;
  for (const auto& [mi, v] : F.comps)
    for (const auto& [m, w] : v.terms)
      for (const auto& s : w) {
        if (!T) T = s.truncation;
        if (!(*T == s.truncation))
          throw DomainError("BadForm", "components carry different truncation bounds");
      }
  return F;
}

Json solver_report_to_json(const SolverReport& r) {
  Json j;
  j["iterations"] = r.iterations;
  j["residual_ok"] = r.residual_ok;
  j["primitive"] = form_to_json(r.primitive);
  Json graded = Json::array();
  for (const auto& [i, Fi] : r.graded) {
    Json entry;
    entry["grade"] = i;
    entry["form"] = form_to_json(Fi);
    graded.push_back(entry);
  }
  j["graded"] = graded;
  return j;
}

Json qseries1_to_json(const QSeries1& f) {
  Json j;
  j["N"] = f.ctx.N;
  Json terms = Json::array();
  for (const auto& [n, c] : f.terms) {
    Json t;
    t["n"] = rat_str(n);
    t["coeff"] = rat_str(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

QSeries1 qseries1_from_json(const Json& j, const PadicContext& ctx, const Rat& trunc) {
  QSeries1 f(ctx, trunc);
  for (const auto& t : j.at("terms"))
    f.add_term(parse_rat(t.at("n").get<std::string>()),
               parse_rat(t.at("coeff").get<std::string>()));
  return f;
}

}  // namespace igusa
