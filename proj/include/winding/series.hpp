#pragma once

// Truncated Laurent series over Rat in a single formal variable with
// explicit order bookkeeping. The main instantiation is series in s = sqrt(k)
// (k = 4t), where integer exponents of s encode half-integer powers of k;
// the elliptic layer also uses the same type for series in u = k^2.
//
// A Series value represents  f = sum_{e=lo..order} c[e-lo] s^e + O(s^(order+1)).
// `order` is pessimistic: every arithmetic operation propagates the worst-case
// order of validity of the result, so a coefficient that is readable from the
// object is always exact.

#include <climits>
#include <vector>

#include "winding/rat.hpp"

namespace winding {

class Series {
 public:
  // Order sentinel for exactly-known polynomials (constants, monomials).
  static constexpr long kExact = LONG_MAX / 4;

  Series() : lo_(0), order_(kExact) {}  // exact zero

  static Series zero(long order = kExact);
  static Series constant(const Rat& v, long order = kExact);
  static Series monomial(const Rat& v, long e, long order = kExact);

  long order() const { return order_; }
  // Exponent of the first nonzero tracked coefficient; for a series with no
  // nonzero tracked coefficient returns order()+1 (everything known is zero).
  long valuation() const;
  bool known_zero() const { return valuation() > order_; }

  // Coefficient of s^e; requires e <= order().
  Rat coeff(long e) const;
  // Coefficient of t^n for a series in s with s^2 = k = 4t: [t^n] = 4^n [s^(2n)].
  Rat t_coeff(long n) const;
  // True iff only even exponents of s occur (an honest series in k).
  bool is_k_series() const;

  Series truncated(long order) const;
  Series shifted(long e) const;  // multiply by s^e

  Series operator-() const;
  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator*(const Rat& v) const;
  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  // Comparison of tracked ranges: equal iff coefficients agree through
  // min(order, o.order).
  bool agrees_with(const Series& o) const;

  Series inverse() const;          // requires a nonzero tracked leading coeff
  Series pow(long e) const;        // negative e via inverse
  // Square root: valuation must be even and the leading coefficient an exact
  // rational square.
  Series sqrt() const;

  // Substitute `inner` (valuation >= 1) for the variable of `outer`, where
  // outer is a power series (valuation >= 0). The variables are distinct
  // formal symbols; the result lives in inner's variable.
  static Series compose(const Series& outer, const Series& inner);

  // Compositional inverse g with compose(f, g) = id + O(order+1); requires
  // valuation exactly 1. The result is reported with the given order.
  Series revert(long order) const;

  // Reinterpret the exponents: halve requires all-even exponents (maps a
  // series in s^2 to the same series in s); double is the inverse.
  Series exponent_halved() const;
  Series exponent_doubled() const;

 private:
  long lo_;             // exponent of c_[0]
  long order_;          // inclusive order of validity, >= lo_ + size - 1
  std::vector<Rat> c_;  // dense coefficients lo_ .. lo_+size-1

  void trim();
  friend class SeriesTestPeek;
};

Rat rat_sqrt(const Rat& x);  // exact square root, throws DomainError otherwise

}  // namespace winding
