#pragma once

// Exact elliptic series: nome, complete integrals, Landen modulus, all as
// truncated series over Rat. The working variable is s = sqrt(k); members
// that are honest series in k have only even s-exponents.

#include "winding/series.hpp"

namespace winding {

struct EllipticSeriesPack {
  long order = 0;       // s-order through which all members are valid
  Series q_of_k;        // nome q_k, valuation 4 (= k^2/16 (1 + ...))
  Series twoK_over_pi;  // 2K(k)/pi = theta3(q(k))^2
  Series twoE_over_pi;
  Series k_prime;       // sqrt(1-k^2)
  Series k1;            // (1-k')/(1+k'), valuation 4
  Series sqrt_k1;       // valuation 2
  // Conveniences used throughout the spectral layer:
  Series q4;            // q^(1/4), valuation 1, leading coefficient 1/2
  Series twoK1_over_pi; // 2K(k1)/pi = (2K/pi)/(1+k1)

  // q^(j/4) for any integer j (negative via Laurent inverse).
  Series q4_pow(long j) const;
};

EllipticSeriesPack build_series_pack(long order);

// High-order nome as a series in u = k^2, computed from the logarithmic ODE
// q'/q = 1/(u(1-u)(2K/pi)^2) instead of reversion; used by the large-l
// asymptotics diagnostics. Agrees with the pack's reverted q_of_k.
Series nome_series_u(long u_order);

// 2K/pi as a series in u = k^2 (direct hypergeometric coefficients).
Series twoK_over_pi_series_u(long u_order);

// Table of powers q^1..q^emax as series in u = k^2, from nome_series_u.
std::vector<Series> nome_power_table_u(long u_order, long emax);

}  // namespace winding
