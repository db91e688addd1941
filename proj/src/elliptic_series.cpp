#include "winding/elliptic_series.hpp"

namespace winding {

namespace {

// (C(2n,n)/4^n)^2, the squared central binomial weight in 2K/pi.
Rat k_weight(long n) {
  Rat c(binomial(2 * n, n), rat_pow(4, n).get_num());
  c.canonicalize();
  return c * c;
}

Series integrate(const Series& f, long order) {
  // term-by-term antiderivative vanishing at 0 (power series input)
  Series r = Series::zero(order);
  for (long e = 0; e <= std::min(order - 1, f.order()); ++e) {
    Rat c = f.coeff(e);
    if (c != 0) r += Series::monomial(c / (e + 1), e + 1, order);
  }
  return r;
}

Series exp_series(const Series& g, long order) {
  // exp of a series with valuation >= 1 via f' = g' f
  if (g.valuation() < 1) throw DomainError("exp_series: valuation must be >= 1");
  std::vector<Rat> f(order + 1);
  f[0] = 1;
  for (long n = 1; n <= order; ++n) {
    Rat acc = 0;
    for (long j = 1; j <= n && j <= g.order(); ++j)
      acc += g.coeff(j) * j * f[n - j];
    f[n] = acc / n;
  }
  Series r = Series::zero(std::min(order, g.order()));
  for (long n = 0; n <= r.order(); ++n)
    if (f[n] != 0) r += Series::monomial(f[n], n, r.order());
  return r;
}

}  // namespace

Series twoK_over_pi_series_u(long u_order) {
  Series r = Series::zero(u_order);
  for (long n = 0; n <= u_order; ++n) r += Series::monomial(k_weight(n), n, u_order);
  return r;
}

Series nome_series_u(long u_order) {
  // d log q / du = 1/(u (1-u) y^2) with y = 2K/pi, so with
  // L = log(16 q / u):  L' = ((1-u)^{-1} y^{-2} - 1)/u,  q = (u/16) e^L.
  long N = u_order + 1;
  Series y = twoK_over_pi_series_u(N);
  Series one_minus_u = Series::constant(1, N) - Series::monomial(1, 1, N);
  Series inner = ((one_minus_u * y * y).inverse() - Series::constant(1, N));
  Series R = inner.shifted(-1).truncated(N - 1);
  Series L = integrate(R, N);
  return (Series::monomial(Rat(1, 16), 1, N) * exp_series(L, N)).truncated(u_order);
}

std::vector<Series> nome_power_table_u(long u_order, long emax) {
  std::vector<Series> p(emax + 1);
  p[0] = Series::constant(1, u_order);
  if (emax >= 1) p[1] = nome_series_u(u_order);
  for (long e = 2; e <= emax; ++e) p[e] = (p[e - 1] * p[1]).truncated(u_order);
  return p;
}

Series EllipticSeriesPack::q4_pow(long j) const {
  return q4.pow(j);
}

EllipticSeriesPack build_series_pack(long order) {
  if (order < 4) throw DomainError("build_series_pack: order must be >= 4");
  // Work at a small internal margin so that the sqrt/inverse order penalties
  // do not eat into the requested order.
  const long W = order + 8;
  EllipticSeriesPack P;
  P.order = order;

  // theta-constant modulus map in the nome variable:
  //   k^2 = 16 q (sum q^{n(n+1)})^4 / (1 + 2 sum q^{n^2})^4,
  // reverted as a series in u = k^2, then re-expanded in s (u = s^4).
  const long Nu = W / 4 + 2;
  Series S2 = Series::zero(Nu), T3 = Series::zero(Nu);
  for (long n = 0; n * (n + 1) <= Nu; ++n)
    S2 += Series::monomial(1, n * (n + 1), Nu);
  T3 += Series::constant(1, Nu);
  for (long n = 1; n * n <= Nu; ++n) T3 += Series::monomial(2, n * n, Nu);
  Series m_of_q =
      (Series::monomial(16, 1, Nu) * S2.pow(4) * T3.pow(4).inverse()).truncated(Nu);
  Series q_of_u = m_of_q.revert(Nu);
  Series q_full = q_of_u.exponent_doubled().exponent_doubled().truncated(W);
  P.q_of_k = q_full.truncated(order);

  // 2K/pi = theta3(q(k))^2; q_of_u has valuation 1 so compose applies in u.
  Series twoK_u = Series::compose(T3, q_of_u).pow(2).truncated(Nu);
  P.twoK_over_pi = twoK_u.exponent_doubled().exponent_doubled().truncated(order);

  P.twoE_over_pi = Series::zero(order);
  for (long n = 0; 4 * n <= order; ++n)
    P.twoE_over_pi += Series::monomial(k_weight(n) / (1 - 2 * n), 4 * n, order);

  Series k2 = Series::monomial(1, 4, W);
  P.k_prime = (Series::constant(1, W) - k2).sqrt().truncated(order);
  Series kp = (Series::constant(1, W) - k2).sqrt();
  P.k1 = ((Series::constant(1, W) - kp) *
          (Series::constant(1, W) + kp).inverse()).truncated(order);
  P.sqrt_k1 = ((Series::constant(1, W) - kp) *
               (Series::constant(1, W) + kp).inverse()).sqrt().truncated(order);
  P.q4 = q_full.sqrt().sqrt().truncated(order);
  P.twoK1_over_pi =
      (P.twoK_over_pi * (Series::constant(1, order) + P.k1).inverse())
          .truncated(order);
  return P;
}

}  // namespace winding
