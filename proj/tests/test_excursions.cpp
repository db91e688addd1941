#include "doctest.h"

#include <cmath>
#include <vector>

#include "winding/excursions.hpp"
#include "winding/grid.hpp"
#include "winding/oracle.hpp"
#include "winding/series.hpp"

using namespace winding;

TEST_CASE("excursion generating function leading coefficients") {
  Series f0 = excursion_F_theta(0, 6);
  CHECK(f0.t_coeff(0) == 0);
  CHECK(f0.t_coeff(1) == 0);
  CHECK(f0.t_coeff(2) == 4);
  CHECK(f0.t_coeff(3) == 0);
  CHECK(f0.t_coeff(4) == 12);

  Series f2 = excursion_F_theta(2, 6);
  CHECK(f2.t_coeff(2) == 0);
  CHECK(f2.t_coeff(4) == 4);

  CHECK(excursion_F_theta(-2, 6).truncated(8).agrees_with(f2.truncated(8)));
}

TEST_CASE("excursion characteristic function leading coefficients") {
  Series c0 = excursion_char_exact(0, 6);
  CHECK(c0.t_coeff(2) == 4);
  CHECK(c0.t_coeff(4) == 20);
  Series c1 = excursion_char_exact(1, 6);
  CHECK(c1.t_coeff(2) == 4);
  CHECK(c1.t_coeff(4) == 12);
  Series c2 = excursion_char_exact(2, 6);
  CHECK(c2.t_coeff(2) == 4);
  CHECK(c2.t_coeff(4) == 4);
  // Periodicity and reflection symmetry in b.
  CHECK(excursion_char_exact(5, 6).truncated(8).agrees_with(c1.truncated(8)));
  CHECK(excursion_char_exact(-2, 6).truncated(8).agrees_with(c2.truncated(8)));
  CHECK(excursion_char_exact(3, 6).truncated(8).agrees_with(c1.truncated(8)));
}

TEST_CASE("spectral and operator routes agree for excursions") {
  const int order = 14;
  for (long aq : {0L, 2L, 4L, 6L, 8L}) {
    Series f = excursion_F_theta(aq, order).truncated(2 * order);
    Series a = excursion_F_alternating(aq, order).truncated(2 * order);
    INFO("alpha quarters = " << aq);
    CHECK(f.agrees_with(a));
  }
  CHECK_THROWS_AS(excursion_F_alternating(3, 6), DomainError);
}

TEST_CASE("excursion series match the brute-force counts") {
  const int order = 12;
  Series f0 = excursion_F_theta(0, order);
  std::vector<Int> dp =
      count_excursions(0, kAngleMinusInf, kAngleInf, order, false);
  for (int n = 0; n <= order; ++n) CHECK(f0.t_coeff(n) == Rat(dp[n]));
}

TEST_CASE("angular sums of excursion laws reproduce the characteristic "
          "function") {
  const int order = 12;
  for (int b : {0, 1, 2}) {
    Series sum = excursion_F_theta(0, order).truncated(2 * order);
    for (long aq = 2; aq <= 2 * order; aq += 2) {
      long u = aq / 2;
      int w;  // cos(b * u * pi/2) for integer b
      switch (b) {
        case 0: w = 1; break;
        case 1: w = (u % 2 == 0) ? ((u % 4 == 0) ? 1 : -1) : 0; break;
        default: w = (u % 2 == 0) ? 1 : -1; break;
      }
      if (w == 0) continue;
      sum += excursion_F_theta(aq, order).truncated(2 * order) * Rat(2 * w);
    }
    INFO("b = " << b);
    CHECK(sum.agrees_with(excursion_char_exact(b, order).truncated(2 * order)));
  }
}

TEST_CASE("cone restrictions match the brute-force counts") {
  struct Case {
    long a, bm, bp;
  };
  const int order = 12;
  for (Case c : {Case{0, -2, 2}, Case{2, -2, 4}, Case{0, -4, 2}}) {
    Series g = cone_F(c.a, c.bm, c.bp, order);
    std::vector<Int> dp = count_excursions(c.a, c.bm, c.bp, order, true);
    INFO("alpha=" << c.a << " interval=(" << c.bm << "," << c.bp << ")");
    for (int n = 0; n <= order; ++n) CHECK(g.t_coeff(n) == Rat(dp[n]));
  }
}

TEST_CASE("a very wide cone reduces to the unrestricted excursion law") {
  const int order = 10;
  for (long aq : {0L, 2L}) {
    Series wide = cone_F(aq, -1000, 1000, order).truncated(2 * order);
    Series quarter =
        excursion_F_theta(aq, order).truncated(2 * order) * Rat(1, 4);
    CHECK(wide.agrees_with(quarter));
  }
  CHECK_THROWS_AS(cone_F(2, 0, 2, 8), InvalidQuery);
  CHECK_THROWS_AS(cone_F(4, -2, 4, 8), InvalidQuery);
}

TEST_CASE("characteristic function evaluates consistently off integers") {
  // Series evaluation of the b = 4/3 cone coefficients at t = 0.1.
  GesselReport rep = gessel_check(12);
  double t = 0.1, series = 0;
  for (size_t n = 0; n < rep.coeffs.size(); ++n)
    series += to_double(rep.coeffs[n]) * std::pow(t, 2.0 * n + 2);
  double f = excursion_char_float(t, 4.0 / 3.0);
  CHECK(std::fabs(f / 4 - series) < 1e-7);
  // Symmetries b -> -b, 4 - b, b + 4.
  double g = excursion_char_float(0.08, 0.7);
  CHECK(std::fabs(excursion_char_float(0.08, -0.7) - g) < 1e-12);
  CHECK(std::fabs(excursion_char_float(0.08, 3.3) - g) < 1e-12);
  CHECK(std::fabs(excursion_char_float(0.08, 4.7) - g) < 1e-12);
  CHECK_THROWS_AS(excursion_char_float(0.1, 1.0), IntegerB);
  // The discrete Fourier route through integer-spaced b values matches the
  // direct cone evaluation.
  Series cone = cone_F(2, -2, 4, 10);
  double direct = 0;
  for (int n = 0; n <= 10; ++n)
    direct += to_double(cone.t_coeff(n)) * std::pow(0.05, n);
  CHECK(std::fabs(cone_F_fourier(0.05, 2, -2, 4) - direct) < 1e-9);
}

TEST_CASE("quarter-plane walk counts are hypergeometric and algebraic") {
  GesselReport rep = gessel_check(16);
  REQUIRE(rep.coeffs.size() >= 4);
  CHECK(rep.coeffs[0] == 1);
  CHECK(rep.coeffs[1] == 2);
  CHECK(rep.coeffs[2] == 11);
  CHECK(rep.coeffs[3] == 85);
  CHECK(rep.hyper_ok);
  CHECK(rep.residual_zero);
}

TEST_CASE("critical return-angle law matches the digamma closed form") {
  for (long m : {0L, 1L, 2L, 3L, -2L}) {
    INFO("m = " << m);
    CHECK(std::fabs(return_angle_extrapolated(m) - return_angle_prob(m)) <
          1e-6);
  }
  double total = return_angle_prob(0);
  for (long m = 1; m <= 4000; ++m) total += 2 * return_angle_prob(m);
  CHECK(std::fabs(total - 1.0) < 1e-3);
}

TEST_CASE("coefficient growth approaches the predicted asymptotics") {
  for (int b : {1, 2}) {
    auto rows = asymptotics_diagnostic(b, 200);
    REQUIRE(rows.size() == 2);
    CHECK(std::fabs(rows[0].ratio - 1) < 0.05);
    CHECK(std::fabs(rows[1].ratio - 1) < std::fabs(rows[0].ratio - 1));
  }
  auto rows0 = asymptotics_diagnostic(0, 200);
  CHECK(rows0[1].ratio > rows0[0].ratio);  // slow logarithmic approach
  CHECK(rows0[1].ratio > 0.2);
  CHECK(rows0[1].ratio < 1.0);
}
