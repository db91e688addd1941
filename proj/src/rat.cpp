#include "winding/rat.hpp"

namespace winding {

Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Rat rat_pow(const Rat& x, long e) {
  if (e == 0) return 1;
  Rat base = x;
  if (e < 0) {
    if (base == 0) throw DomainError("rat_pow: zero to negative power");
    base = 1 / base;
    e = -e;
  }
  Rat r = 1;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::string rat_str(const Rat& x) {
  return x.get_str();
}

Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw DomainError("parse_rat: bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

double to_double(const Rat& x) { return x.get_d(); }

}  // namespace winding
