#include "winding/series.hpp"

#include <algorithm>

namespace winding {

namespace {
long cap_add(long a, long b) {
  if (a >= Series::kExact || b >= Series::kExact) return Series::kExact;
  long s = a + b;
  return s >= Series::kExact ? Series::kExact : s;
}
}  // namespace

Rat rat_sqrt(const Rat& x) {
  if (x < 0) throw DomainError("rat_sqrt: negative");
  const Int num = x.get_num(), den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    throw DomainError("rat_sqrt: not an exact rational square");
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rat(rn, rd);
}

void Series::trim() {
  size_t a = 0, b = c_.size();
  while (b > a && c_[b - 1] == 0) --b;
  while (a < b && c_[a] == 0) ++a;
  if (a > 0 || b < c_.size()) {
    c_ = std::vector<Rat>(c_.begin() + a, c_.begin() + b);
    lo_ += static_cast<long>(a);
  }
  if (c_.empty()) lo_ = 0;
}

Series Series::zero(long order) {
  Series s;
  s.order_ = order;
  return s;
}

Series Series::constant(const Rat& v, long order) {
  return monomial(v, 0, order);
}

Series Series::monomial(const Rat& v, long e, long order) {
  Series s;
  s.order_ = order;
  if (v != 0 && e <= order) {
    s.lo_ = e;
    s.c_ = {v};
  }
  return s;
}

long Series::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return lo_ + static_cast<long>(i);
  // No nonzero tracked coefficient: everything known is zero. Saturating
  // arithmetic must not collapse order()+1 back onto the kExact sentinel,
  // or an exact zero would fail known_zero().
  return order_ >= kExact ? kExact + 1 : order_ + 1;
}

Rat Series::coeff(long e) const {
  if (e > order_) throw DomainError("Series::coeff: beyond tracked order");
  if (e < lo_ || e >= lo_ + static_cast<long>(c_.size())) return 0;
  return c_[e - lo_];
}

Rat Series::t_coeff(long n) const {
  return coeff(2 * n) * rat_pow(4, n);
}

bool Series::is_k_series() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0 && (lo_ + static_cast<long>(i)) % 2 != 0) return false;
  return true;
}

Series Series::truncated(long order) const {
  Series r = *this;
  r.order_ = std::min(order_, order);
  long keep = r.order_ - lo_ + 1;
  if (keep < 0) keep = 0;
  if (keep < static_cast<long>(r.c_.size())) r.c_.resize(keep);
  r.trim();
  return r;
}

Series Series::shifted(long e) const {
  Series r = *this;
  r.lo_ += e;
  r.order_ = cap_add(order_, e);
  return r;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Series Series::operator+(const Series& o) const {
  Series r;
  r.order_ = std::min(order_, o.order_);
  if (c_.empty() && o.c_.empty()) return r;
  long lo = c_.empty() ? o.lo_ : (o.c_.empty() ? lo_ : std::min(lo_, o.lo_));
  long hi = std::min(r.order_,
                     std::max(lo_ + static_cast<long>(c_.size()) - 1,
                              o.lo_ + static_cast<long>(o.c_.size()) - 1));
  if (hi < lo) return r;
  r.lo_ = lo;
  r.c_.assign(hi - lo + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    long e = lo_ + static_cast<long>(i);
    if (e <= hi) r.c_[e - lo] += c_[i];
  }
  for (size_t i = 0; i < o.c_.size(); ++i) {
    long e = o.lo_ + static_cast<long>(i);
    if (e <= hi) r.c_[e - lo] += o.c_[i];
  }
  r.trim();
  return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
  Series r;
  r.order_ = std::min(cap_add(order_, o.valuation()),
                      cap_add(o.order_, valuation()));
  if (c_.empty() || o.c_.empty()) return r;
  long lo = lo_ + o.lo_;
  long hi = std::min(r.order_, lo + static_cast<long>(c_.size() + o.c_.size()) - 2);
  if (hi < lo) return r;
  r.lo_ = lo;
  r.c_.assign(hi - lo + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    long base = lo_ + static_cast<long>(i) + o.lo_;
    long jmax = std::min(static_cast<long>(o.c_.size()) - 1, hi - base);
    for (long j = 0; j <= jmax; ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[base + j - lo] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

Series Series::operator*(const Rat& v) const {
  Series r = *this;
  if (v == 0) {
    r.c_.clear();
    r.lo_ = 0;
    return r;
  }
  for (auto& x : r.c_) x *= v;
  return r;
}

bool Series::agrees_with(const Series& o) const {
  long hi = std::min(order_, o.order_);
  long lo = std::min(lo_, o.lo_);
  // Beyond both stored extents all tracked coefficients are zero; avoid
  // walking out to the exact-order sentinel.
  long hi_stored = std::max(lo_ + static_cast<long>(c_.size()),
                            o.lo_ + static_cast<long>(o.c_.size())) -
                   1;
  hi = std::min(hi, hi_stored);
  if (lo > hi) return true;
  for (long e = lo; e <= hi; ++e)
    if (coeff(e) != o.coeff(e)) return false;
  return true;
}

Series Series::inverse() const {
  long v = valuation();
  if (v > order_) throw DomainError("Series::inverse: no tracked nonzero term");
  // f = c s^v (1 + u);  1/f = s^(-v)/c * (1 - u + u^2 - ...).
  long uorder = order_ - v;  // order of u as a power series
  Rat lead = coeff(v);
  Series u = (shifted(-v) * (1 / lead) - constant(1)).truncated(uorder);
  Series acc = Series::constant(1, uorder);
  Series term = Series::constant(1, uorder);
  long uval = u.valuation();
  if (uval <= uorder) {
    for (long e = 0; e * uval <= uorder; ++e) {
      if (e > 0) {
        term = (term * u).truncated(uorder);
        acc += (e % 2 == 0) ? term : -term;
        if (term.known_zero()) break;
      }
    }
  }
  return (acc * (1 / lead)).shifted(-v).truncated(order_ - 2 * v);
}

Series Series::pow(long e) const {
  if (e == 0) return constant(1, order_ == kExact ? kExact : order_);
  Series base = e < 0 ? inverse() : *this;
  if (e < 0) e = -e;
  Series r = base;
  --e;
  while (e > 0) {
    // plain repeated multiplication keeps order bookkeeping simple and is
    // never a bottleneck at the exponent sizes used here
    r *= base;
    --e;
  }
  return r;
}

Series Series::sqrt() const {
  long v = valuation();
  if (v > order_) {
    // sqrt of something indistinguishable from 0: only exact zero is allowed
    if (order_ == kExact) return Series();
    throw DomainError("Series::sqrt: leading coefficient unknown");
  }
  if (v % 2 != 0) throw DomainError("Series::sqrt: odd valuation");
  Rat lead = rat_sqrt(coeff(v));
  long uorder = order_ - v;
  if (order_ == kExact && lo_ + static_cast<long>(c_.size()) - 1 > v)
    throw DomainError("Series::sqrt: truncate exact polynomials first");
  Series u = (shifted(-v) * (1 / coeff(v)) - constant(1)).truncated(uorder);
  // (1+u)^(1/2) via the binomial series, term-by-term.
  Series acc = Series::constant(1, uorder);
  Series term = Series::constant(1, uorder);
  Rat binom = 1;
  long uval = u.valuation();
  if (uval <= uorder) {
    for (long e = 1; (e - 1) * uval <= uorder; ++e) {
      Rat step(3 - 2 * e, 2 * e);  // C(1/2,e)/C(1/2,e-1) = (1/2-e+1)/e
      step.canonicalize();
      binom *= step;
      term = (term * u).truncated(uorder);
      acc += term * binom;
      if (term.known_zero()) break;
    }
  }
  return (acc * lead).shifted(v / 2).truncated(order_ == kExact ? kExact
                                                                : order_ - v / 2);
}

Series Series::compose(const Series& outer, const Series& inner) {
  long vz = outer.valuation();
  if (vz < 0) throw DomainError("Series::compose: outer must be a power series");
  long vi = inner.valuation();
  if (vi < 1) throw DomainError("Series::compose: inner valuation must be >= 1");

  long order = kExact;
  if (outer.order_ != kExact) {
    if (vi >= kExact)
      order = kExact;  // inner is exactly 0
    else
      order = std::min(order, vi * (outer.order_ + 1) - 1);
  }
  if (inner.order_ != kExact && vz >= 1)
    order = std::min(order, cap_add(inner.order_, vi * (vz - 1)));
  else if (inner.order_ != kExact && vz == 0)
    order = std::min(order, inner.order_);

  long top = std::min(outer.order_,
                      outer.lo_ + static_cast<long>(outer.c_.size()) - 1);
  Series r = Series::zero(order);
  for (long e = top; e >= 0; --e) {
    r = (r * inner).truncated(order);
    Rat ce = (e >= outer.lo_ && e <= top) ? outer.coeff(e) : Rat(0);
    if (ce != 0) r += Series::constant(ce, order);
  }
  return r.truncated(order);
}

namespace {
Series deriv(long lo, long order, const std::vector<Rat>& c) {
  Series r = Series::zero(order == Series::kExact ? Series::kExact : order - 1);
  for (size_t i = 0; i < c.size(); ++i) {
    long e = lo + static_cast<long>(i);
    if (e != 0 && c[i] != 0) r += Series::monomial(c[i] * e, e - 1, r.order());
  }
  return r;
}
}  // namespace

Series Series::revert(long order) const {
  if (valuation() != 1) throw DomainError("Series::revert: valuation must be 1");
  if (order_ != kExact && order_ < order)
    throw DomainError("Series::revert: insufficient input order");
  Series f = truncated(order);
  Series fp = deriv(f.lo_, f.order_, f.c_);
  Series id = Series::monomial(1, 1, order);
  Series g = Series::monomial(1 / f.coeff(1), 1, order);
  for (int it = 0; it < 64; ++it) {
    Series res = (compose(f, g) - id).truncated(order);
    if (res.known_zero()) return g.truncated(order);
    Series step = (res * compose(fp, g).inverse()).truncated(order);
    g = (g - step).truncated(order);
    // keep full working order: Newton correctness comes from the residual
    // check above, not from the pessimistic order propagation
    g.order_ = order;
  }
  throw DomainError("Series::revert: no convergence (malformed input?)");
}

Series Series::exponent_halved() const {
  if (!is_k_series()) throw DomainError("exponent_halved: odd exponent present");
  Series r = Series::zero(order_ == kExact ? kExact : order_ / 2);
  for (size_t i = 0; i < c_.size(); ++i) {
    long e = lo_ + static_cast<long>(i);
    if (c_[i] != 0) r += Series::monomial(c_[i], e / 2, r.order());
  }
  return r;
}

Series Series::exponent_doubled() const {
  Series r = Series::zero(order_ == kExact ? kExact : 2 * order_ + 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    long e = lo_ + static_cast<long>(i);
    if (c_[i] != 0) r += Series::monomial(c_[i], 2 * e, r.order());
  }
  return r;
}

}  // namespace winding
