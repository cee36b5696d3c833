#include "igusa/arith.hpp"

namespace igusa {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  mpz_class z(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

// exact v_p of a nonzero integer
long int_valuation(Int n, long p) {
  long v = 0;
  Int q, r;
  Int pz(p);
  while (true) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
    if (r != 0) break;
    n = q;
    ++v;
  }
  return v;
}

}  // namespace

PadicContext::PadicContext(long p_, int precision_, long N_, int g_)
    : p(p_), precision(precision_), N(N_), g(g_) {
  if (p < 3 || !is_prime(p))
    throw DomainError("BadContext", "p must be an odd prime (p = 2 is rejected)");
  if (precision < 1) throw DomainError("BadContext", "precision must be >= 1");
  if (g < 1) throw DomainError("BadContext", "genus must be >= 1");
  if (N < 1 || (2 * N) % p == 0)
    throw DomainError("BadContext", "level N must be positive with gcd(p, 2N) = 1");
}

std::optional<long> valuation(const Rat& c, const PadicContext& ctx) {
  if (sgn(c) == 0) return std::nullopt;
  return int_valuation(c.get_num(), ctx.p) - int_valuation(c.get_den(), ctx.p);
}

Rat invert_unit(const Rat& c, const PadicContext& ctx) {
  auto v = valuation(c, ctx);
  if (!v || *v != 0) throw NotAUnit();
  return Rat(1) / c;
}

Int reduce_mod(const Rat& c, const PadicContext& ctx) {
  auto v = valuation(c, ctx);
  if (v && *v < 0) throw NotIntegral();
  Int mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(ctx.p),
                static_cast<unsigned long>(ctx.precision));
  Int deninv;
  if (mpz_invert(deninv.get_mpz_t(), c.get_den().get_mpz_t(), mod.get_mpz_t()) == 0)
    throw NotIntegral();  // unreachable given the valuation check
  Int r = (c.get_num() % mod) * deninv % mod;
  if (r < 0) r += mod;
  return r;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw SyntaxError("empty rational", 0);
  Rat q;
  if (q.set_str(s, 10) != 0) throw SyntaxError("malformed rational '" + s + "'", 0);
  if (q.get_den() == 0) throw SyntaxError("zero denominator in '" + s + "'", 0);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace igusa
