#pragma once

// Excursion generating functions: diagonal walks from the origin back to the
// origin with no intermediate return, refined by their total winding angle
// (the first and last step contribute nothing). Two exact routes (a
// theta-style q-series and an alternating sum over the axis-to-axis walk
// matrices), the angular characteristic function in closed form, cone
// restrictions by reflection, and the t -> 1/4 return-angle limit.

#include <vector>

#include "winding/series.hpp"

namespace winding {

struct IntegerB : std::invalid_argument {
  explicit IntegerB(const std::string& what) : std::invalid_argument(what) {}
};
struct FormDisagreement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// F^(alpha)(t): excursions with full winding angle alpha (quarter units,
// even; all four first steps), from the q-series
//   F = (2 pi / K) sum_{n>=1} (1-q^n)^2 / (1-q^{4n}) q^{n(|alpha|/2 + 1)}
// (exponents in quarter units: |alpha|/2 per quarter pair). Valid through
// t^order.
Series excursion_F_theta(long alpha_quarter, int order);

// Same quantity as an alternating double sum over full-line walk matrices:
//   F = 4 sum_{l,p,m >= 1} (-1)^(l+p+m+1) m W^(|alpha| + 2m)_{2l, 2p}.
Series excursion_F_alternating(long alpha_quarter, int order);

// Angular characteristic function F(t,b) = sum_m F^(m pi/2)(t) cos(b m pi/2)
// at the exactly-summable points b = 0, 1, 2 (extended everywhere by
// F(.,b) = F(.,b+4) = F(.,4-b)):
//   F(t,0) = 1 - pi/2K,  F(t,1) = 1 - 2E/pi,
//   F(t,2) = -1 + 4E/pi - (1-k^2) 2K/pi.
Series excursion_char_exact(int b, int order);

// Float evaluation of F(t,b) for non-integer b by two independent forms
// (a theta-logarithmic-derivative ratio and a Jacobi Zeta form), which must
// agree to 1e-10 (FormDisagreement otherwise). Integer b has poles in both
// forms and throws IntegerB: use excursion_char_exact.
double excursion_char_float(double t, double b);

// F^(alpha, I)(t): excursions whose intermediate winding stays in the open
// cone I = (bm, bp)*pi/4 (bm < 0 < bp, bm < alpha < bp; infinite ends via
// the sentinels), with the first step fixed to (1,1). Assembled by the
// reflection sum (1/4) sum_n (F^(alpha + n d) - F^(2 bp - alpha + n d)),
// d = 2(bp - bm), with one-sided and trivial degenerations at infinite ends.
Series cone_F(long alpha_quarter, long bm, long bp, int order);

// Independent float route: the reflection comb is diagonalized by the
// discrete Fourier transform on the (pi/2) angle grid, giving a finite
// combination of F(t, 4j/D), D = bp - bm. Cross-checks cone_F at a point.
double cone_F_fourier(double t, long alpha_quarter, long bm, long bp);

// The cone (-pi/4, pi/2) at alpha = 0: coefficient table, hypergeometric
// closed form 16^n (5/6)_n (1/2)_n / ((2)_n (5/3)_n) for [t^(2n+2)], and the
// degree-8 algebraicity residual for y = 1 + 2 F^(0,I).
struct GesselReport {
  std::vector<Rat> coeffs;  // [t^(2n+2)] F^(0,(-pi/4, pi/2)), n = 0..
  std::vector<Rat> hyper;   // hypergeometric closed form, same indexing
  bool hyper_ok = false;
  bool residual_zero = false;  // octic polynomial annihilates through t^order
};
GesselReport gessel_check(int order);

// P[total excursion winding = m pi/2] at the critical point t = 1/4:
//   (1/pi) (-psi((|m|+1)/4) + 2 psi((|m|+2)/4) - psi((|m|+3)/4)).
double return_angle_prob(long m);

// The same limit obtained from the resummed q-form of F^(m pi/2),
//   (4/pi)(-log q) sum_p [ 1/(1-q^{M+4p+1}) - 2/(1-q^{M+4p+2})
//                          + 1/(1-q^{M+4p+3}) ],  M = |m|,
// evaluated on the modulus grid k = 1 - 10^-2 .. 1 - 10^-5 and Richardson-
// extrapolated in 1 - q to the q -> 1 limit.
double return_angle_extrapolated(long m);

// Trend diagnostic for the coefficient asymptotics of F(t,b), b in {0,1,2}:
// ratios of the exact [t^(2l)] coefficient to the predicted leading term
//   b=1: 4^{2l}/(2 pi l^2),  b=2: 4^{2l}/(4 pi l^3),
//   b=0: pi 4^{2l}/(l log^2 l),
// reported at l = max_l/2 and l = max_l (no tolerance claimed).
struct AsympRow {
  long l;
  double ratio;
};
std::vector<AsympRow> asymptotics_diagnostic(int b, long max_l);

}  // namespace winding
