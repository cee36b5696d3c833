#pragma once

#include <json.hpp>

#include "igusa/derham.hpp"
#include "igusa/genus1.hpp"

namespace igusa {

using Json = nlohmann::ordered_json;

// All serializations are byte-deterministic: term order is lexicographic on
// the flattened index matrices, rationals print as "num/den".

Json qseries_to_json(const QSeries& f);
QSeries qseries_from_json(const Json& j, const PadicContext& ctx);

Json repexpr_to_json(const RepPtr& r);
RepPtr repexpr_from_json(const Json& j);

Json induced_to_json(const Induced<Rat>& v);
Induced<Rat> induced_from_json(const Json& j, int g);

Json series_induced_to_json(const SeriesInduced& v);
SeriesInduced series_induced_from_json(const Json& j, const PadicContext& ctx);

Json form_to_json(const DeRhamForm& F);
DeRhamForm form_from_json(const Json& j, const PadicContext& ctx);

Json solver_report_to_json(const SolverReport& r);

Json qseries1_to_json(const QSeries1& f);
QSeries1 qseries1_from_json(const Json& j, const PadicContext& ctx, const Rat& trunc);

}  // namespace igusa
