#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "igusa/errors.hpp"

namespace igusa {

// Exact rational coefficient. mpq_class keeps numerator/denominator coprime
// with positive denominator at all times, which is exactly the invariant the
// engine relies on; p-adic truncation only happens at comparison/output time.
using Rat = mpq_class;
using Int = mpz_class;

/// Working context: an odd prime p, the p-adic precision, the tame level N
/// (coprime to p) and the genus g.  d_g = g(g+1)/2 is the number of theta
/// operators / Y-variables.
struct PadicContext {
  long p = 3;
  int precision = 1;
  long N = 1;
  int g = 1;

  PadicContext(long p_, int precision_, long N_, int g_);
  int dg() const { return g * (g + 1) / 2; }
  bool operator==(const PadicContext&) const = default;
};

/// p-adic valuation of c; std::nullopt encodes +infinity (c = 0).
std::optional<long> valuation(const Rat& c, const PadicContext& ctx);

/// Exact inverse of a p-adic unit.  Throws NotAUnit when v_p(c) != 0.
Rat invert_unit(const Rat& c, const PadicContext& ctx);

/// The unique residue of a p-integral c modulo p^precision, in [0, p^precision).
/// Throws NotIntegral when v_p(c) < 0.
Int reduce_mod(const Rat& c, const PadicContext& ctx);

/// Parses "num/den" (or "num"); normalizes to lowest terms.
Rat parse_rat(const std::string& s);

/// Serializes as "num/den", omitting "/den" when den = 1.
std::string rat_str(const Rat& c);

inline bool is_zero(const Rat& c) { return sgn(c) == 0; }

// gmpxx has no long long constructors; long is 64-bit on every platform
// this builds on.
inline Rat make_rat(long long num, long long den = 1) {
  Rat r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

}  // namespace igusa
