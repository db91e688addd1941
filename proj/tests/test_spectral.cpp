#include "doctest.h"

#include "winding/blocks.hpp"
#include "winding/oracle.hpp"
#include "winding/spectral.hpp"

using namespace winding;

TEST_CASE("v series examples") {
  long ord = 30;
  EllipticSeriesPack pack = build_series_pack(ord);
  std::vector<Series> vk = v_series(VModulus::k, 4, ord);
  // [z^1] 2pi v_k = (pi/2K) / sqrt(k)
  CHECK(vk[1].agrees_with(pack.twoK_over_pi.inverse().shifted(-1)));
  CHECK(vk[2].known_zero());
  // [z^3] 2pi v_k = (pi/2K) (1+k^2)/(6k) / sqrt(k)
  Series expect3 = pack.twoK_over_pi.inverse() *
                   (Series::constant(1) + Series::monomial(1, 4)) *
                   Series::monomial(Rat(1, 6), -3);
  CHECK(vk[3].agrees_with(expect3));
}

TEST_CASE("landen conjugation of the conformal coordinate") {
  CHECK(landen_conjugation_check(24, 1));
  CHECK(landen_conjugation_check(40, 5));
  CHECK(landen_conjugation_check(30, 7));
}

TEST_CASE("landen conjugation is coefficient-sensitive") {
  long ord = 30;
  std::vector<Series> vk = v_series(VModulus::k, 5, ord);
  std::vector<Series> vk1 = v_series(VModulus::k1, 5, ord);
  vk1[3] += Series::monomial(1, -2);  // deliberate perturbation
  bool all = true;
  for (int n = 1; n <= 5; ++n) {
    Series comp;
    for (int j = 1; j <= n; j += 2) comp += vk1[j] * psi_power_coeff(n, j);
    all = all && comp.agrees_with(vk[n]);
  }
  CHECK(!all);
}

TEST_CASE("basis coefficients and norms") {
  long ord = 40;
  EllipticSeriesPack pack = build_series_pack(ord);
  BasisCoeffTable tb = basis_table(4, 8, ord);
  // <e_1, f_1> = pi/(k K(k)) = 2 s^-2 (pi/2K); leading coefficient 2/k.
  CHECK(tb.at(1, 1).agrees_with(pack.twoK_over_pi.inverse().shifted(-2) * Rat(2)));
  CHECK(tb.at(1, 1).coeff(-2) == 2);
  // Parity: <e_l, f_m> = 0 unless l == m (mod 2).
  for (int l = 1; l <= 4; ++l)
    for (int m = 1; m <= 8; ++m)
      if ((l - m) % 2 != 0) CHECK(tb.at(l, m).known_zero());
  // norm_sq[m] = m (q^-m - q^m)/4 computed from whole-q powers as well.
  for (int m = 1; m <= 8; ++m) {
    Series q = pack.q_of_k;
    Series expect = (q.pow(-m) - q.pow(m)) * Rat(m, 4);
    CHECK(tb.norm_sq[m].agrees_with(expect));
  }
  CHECK(tb.norm_sq[1].coeff(-4) == 4);  // leading 4/k^2
}

TEST_CASE("eigenvalue specializations of the fixed operators") {
  long ord = 40;
  EllipticSeriesPack pack = build_series_pack(ord);
  for (int m = 1; m <= 5; ++m) {
    // J_k = J^(pi/2, -pi/2): 1/(q^(m/2) + q^(-m/2)).
    Series j = eigenvalue(EigenKind::J, 2, -2, 0, m, pack);
    CHECK(j.agrees_with((pack.q4_pow(2 * m) + pack.q4_pow(-2 * m)).inverse()));
    // B_k = B^(0, -pi/2, pi/2): (2K/pi)(1/m)(1-q^m)/(1+q^m).
    Series b = eigenvalue(EigenKind::B, 0, -2, 2, m, pack);
    Series qm = pack.q4_pow(4 * m);
    CHECK(b.agrees_with(pack.twoK_over_pi * Rat(1, m) * (Series::constant(1) - qm) *
                        (Series::constant(1) + qm).inverse()));
    // A_k = A^(pi/2): (pi/2K) m/(q^(-m/2) - q^(m/2)).
    Series a = eigenvalue(EigenKind::A, 2, 0, 0, m, pack);
    CHECK(a.agrees_with(pack.twoK_over_pi.inverse() * Rat(m) *
                        (pack.q4_pow(-2 * m) - pack.q4_pow(2 * m)).inverse()));
    // Infinite-end limits.
    CHECK(eigenvalue(EigenKind::J, 2, kAngleMinusInf, 0, m, pack)
              .agrees_with(pack.q4_pow(2 * m)));
    Series bl = eigenvalue(EigenKind::B, 2, -2, kAngleInf, m, pack);
    CHECK(bl.agrees_with(pack.twoK_over_pi * Rat(1, m) *
                         (pack.q4_pow(2 * m) - pack.q4_pow(6 * m))));
  }
  // Y(pi/2) mode 1 = (2K/pi) q^(1/4·2...): valuation s^2.
  CHECK(eigenvalue(EigenKind::Y, 2, 0, 0, 1, pack).valuation() == 2);
}

TEST_CASE("spectral flagship and quadrant series") {
  WalkQuery q{3, 3, 4, kAngleMinusInf, kAngleInf, 10};
  Series w = spectral_W(q);
  CHECK(w.t_coeff(4) == 0);
  CHECK(w.t_coeff(6) == 10);
  CHECK(w.t_coeff(8) == 280);
  CHECK(w.t_coeff(10) == 5661);
  WalkQuery qj{1, 1, 2, -2, 2, 7};
  Series wj = spectral_W(qj);
  CHECK(wj.agrees_with(j_series(1, 1, 7)));
  WalkQuery qy{1, 1, 0, kAngleMinusInf, kAngleInf, 6};
  Series wy = spectral_W(qy);
  CHECK(wy.t_coeff(0) == 1);
  CHECK(wy.t_coeff(2) == 4);  // (2,+-1) and (0,+-1) round trips
}

TEST_CASE("spectral pipeline agrees with operator assembly") {
  int order = 8;
  BlockContext ctx = make_block_context(order, 4);
  int max_l = order + 4;
  long pack_order = 2L * order + 6L * max_l + 8;
  EllipticSeriesPack pack = build_series_pack(pack_order);
  BasisCoeffTable table =
      basis_table(max_l, static_cast<int>((2L * order + 4L * max_l) / 4 + 3), pack_order);
  struct IntervalSpec {
    long bm, bp;
    bool quarter;
  };
  std::vector<IntervalSpec> ivals = {
      {kAngleMinusInf, kAngleInf, false}, {-2, 2, false},     {0, kAngleInf, false},
      {-2, kAngleInf, false},             {-1, 2, true},      {-1, 3, true},
      {0, 2, false},                      {0, 4, false},      {0, 3, true},
  };
  for (const IntervalSpec& iv : ivals)
    for (long a : {-4L, -2L, 0L, 2L, 4L})
      for (int l = 1; l <= 4; ++l)
        for (int p = l; p <= 4; ++p) {
          if (iv.quarter && (l % 2 != 0 || p % 2 != 0)) continue;
          WalkQuery q{l, p, a, iv.bm, iv.bp, order};
          Series wb, ws;
          try {
            wb = assemble_W_interval(ctx, q);
          } catch (const InvalidQuery&) {
            CHECK_THROWS_AS(spectral_W(q, table, pack), InvalidQuery);
            continue;
          }
          ws = spectral_W(q, table, pack);
          for (int n = 0; n <= order; ++n) CHECK(ws.t_coeff(n) == wb.t_coeff(n));
        }
}

TEST_CASE("orthogonality shadow of the f basis") {
  long orderS = 12;
  int L = 14;
  long pack_order = orderS + 6L * L + 8;
  BasisCoeffTable tb = basis_table(L, 5, pack_order);
  for (int m = 1; m <= 5; ++m)
    for (int mp = 1; mp <= 5; ++mp) {
      Series g;
      for (int l = 1; l <= L; ++l) g += tb.at(l, m) * tb.at(l, mp) * Rat(1, l);
      REQUIRE(g.order() >= orderS);
      if (m != mp) CHECK(g.truncated(orderS).known_zero());
    }
}
