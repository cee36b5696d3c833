#pragma once

#include <string>

#include "igusa/genus1.hpp"
#include "igusa/qseries.hpp"

namespace igusa {

/// Parses a polynomial over T1..T<d_g>: integer literals, variables "T<k>",
/// +, -, *, ^ and parentheses.  Throws SyntaxError (with position) and
/// IndexOutOfRange.
ThetaPolynomial parse_poly(const std::string& src, int dg);

/// Parses a one-variable q-expression such as "q", "3*q^2 - q^(1/3)/2",
/// with rational coefficients and exponents.  Used by the g1-solve command.
QSeries1 parse_qexpr1(const std::string& src, const PadicContext& ctx, const Rat& trunc);

}  // namespace igusa
