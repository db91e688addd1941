#include "doctest.h"

#include "winding/blocks.hpp"
#include "winding/grid.hpp"

using namespace winding;

TEST_CASE("j_series matches the binomial walk counts") {
  Series j11 = j_series(1, 1, 6);
  CHECK(j11.t_coeff(1) == 1);
  CHECK(j11.t_coeff(2) == 0);
  CHECK(j11.t_coeff(3) == 3);
  CHECK(j11.t_coeff(5) == 20);
  Series j24 = j_series(2, 4, 6);
  CHECK(j24.t_coeff(4) == 4);
  CHECK(j24.t_coeff(2) == 0);
  CHECK(j_series(1, 2, 8).known_zero());
  // Symmetry of l*J_{l,p}.
  for (int l = 1; l <= 5; ++l)
    for (int p = 1; p <= 5; ++p)
      CHECK((j_series(l, p, 8) * Rat(l)).agrees_with(j_series(p, l, 8) * Rat(p)));
}

TEST_CASE("b_series matches the binomial differences") {
  Series b11 = b_series(1, 1, 6);
  CHECK(b11.t_coeff(0) == 1);
  CHECK(b11.t_coeff(2) == 2);
  CHECK(b11.t_coeff(4) == 12);
  Series b22 = b_series(2, 2, 6);
  CHECK(b22.t_coeff(0) == 1);
  CHECK(b22.t_coeff(2) == 4);  // four length-2 out-and-back walks from (2,0)
  Series b13 = b_series(1, 3, 6);
  CHECK(b13.t_coeff(0) == 0);
  CHECK(b13.t_coeff(2) == 2);
  CHECK(b_series(2, 3, 8).known_zero());
  CHECK(b_series(4, 4, 4).t_coeff(0) == 1);
  for (int l = 1; l <= 5; ++l)
    for (int p = 1; p <= 5; ++p)
      CHECK(b_series(l, p, 8).agrees_with(b_series(p, l, 8)));
}

TEST_CASE("axis walk counts") {
  CHECK(axis_walk_count(0, 0) == 1);
  CHECK(axis_walk_count(0, 2) == 2);
  CHECK(axis_walk_count(2, 1) == 1);
  CHECK(axis_walk_count(4, 1) == 0);
  CHECK(axis_walk_count(4, 2) == 1);
  CHECK(axis_walk_count(-4, 2) == 1);
  CHECK(axis_walk_count(0, 4) == 6);
  CHECK(axis_walk_count(0, 3) == 0);
}

TEST_CASE("psi power coefficients") {
  Series c11 = psi_power_coeff(1, 1);
  CHECK(c11.coeff(1) == Rat(1, 2));
  Series c31 = psi_power_coeff(3, 1);
  CHECK(c31.coeff(3) == Rat(1, 8));
  CHECK(psi_power_coeff(2, 1).known_zero());
}

TEST_CASE("Gram identity: l J_{l,p} = sum_n n [x^n]psi^l [x^n]psi^p") {
  int orderT = 12;
  for (int l = 1; l <= 6; ++l)
    for (int p = 1; p <= 6; ++p) {
      Series lhs = (j_series(l, p, orderT) * Rat(l)).truncated(2L * orderT);
      Series rhs = Series::zero(2L * orderT);
      for (int n = 1; n <= orderT; ++n)
        rhs += psi_power_coeff(n, l) * psi_power_coeff(n, p) * Rat(n);
      CHECK(lhs.agrees_with(rhs));
    }
}

TEST_CASE("factorization J = A B in the weighted algebra") {
  BlockContext ctx = make_block_context(10, 4);
  OpMatrix ab = op_product(ctx.amat, ctx.bmat);
  for (int l = 1; l <= ctx.dim; ++l)
    for (int p = 1; p <= ctx.dim; ++p) CHECK(ab.at(l, p).agrees_with(ctx.jmat.at(l, p)));
}

TEST_CASE("A matrix is symmetric with the expected leading terms") {
  BlockContext ctx = make_block_context(10, 4);
  for (int l = 1; l <= ctx.dim; ++l)
    for (int p = 1; p <= ctx.dim; ++p)
      CHECK(ctx.amat.at(l, p).agrees_with(ctx.amat.at(p, l)));
  // <e_1, A e_1> = t + t^3 + ... (single step, then the unique 3-step climb).
  CHECK(ctx.amat.at(1, 1).t_coeff(1) == 1);
  CHECK(ctx.amat.at(1, 1).t_coeff(2) == 0);
  CHECK(ctx.amat.at(1, 1).t_coeff(3) == 1);
}

TEST_CASE("full-line assembly hits the flagship series") {
  BlockContext ctx = make_block_context(10, 3);
  Series w = assemble_W(ctx, 3, 3, 4);
  CHECK(w.t_coeff(0) == 0);
  CHECK(w.t_coeff(6) == 10);
  CHECK(w.t_coeff(8) == 280);
  CHECK(w.t_coeff(10) == 5661);
  // alpha = 0 includes the empty walk.
  Series w0 = assemble_W(ctx, 1, 1, 0);
  CHECK(w0.t_coeff(0) == 1);
  // Symmetries: l<->p and alpha -> -alpha.
  for (long a : {-4L, -2L, 0L, 2L, 4L}) {
    Series w12 = assemble_W(ctx, 1, 3, a);
    Series w21 = assemble_W(ctx, 3, 1, a);
    Series w12m = assemble_W(ctx, 1, 3, -a);
    CHECK(w12.agrees_with(w21));
    CHECK(w12.agrees_with(w12m));
  }
}

TEST_CASE("interval assembly reproduces the defining J and B cases") {
  WalkQuery q;
  q.l = q.p = 1;
  q.order = 8;
  q.alpha = 2;
  q.beta_minus = -2;
  q.beta_plus = 2;
  CHECK(assemble_W_interval(q).agrees_with(j_series(1, 1, 8)));
  q.alpha = 0;
  CHECK(assemble_W_interval(q).agrees_with(b_series(1, 1, 8)));
  q.l = 2;
  q.p = 4;
  q.alpha = -2;
  q.beta_minus = -2;
  q.beta_plus = 2;
  CHECK(assemble_W_interval(q).agrees_with(j_series(2, 4, 8)));
}

TEST_CASE("interval assembly symmetries") {
  BlockContext ctx = make_block_context(8, 6);
  // Reversal invariance: W_{l,p}^(a,(b-,b+)) = W_{p,l}^(a,(a-b+,a-b-)).
  struct Cell {
    int l, p;
    long a, bm, bp;
  };
  std::vector<Cell> cells = {
      {1, 3, 2, -2, 4},  {2, 2, 0, -2, 4},  {3, 1, 4, -2, 4},
      {2, 4, 2, -1, 3},  {1, 1, 2, -4, 2},  {2, 2, 4, -2, 4},
  };
  for (const Cell& c : cells) {
    WalkQuery q{c.l, c.p, c.a, c.bm, c.bp, 8};
    WalkQuery qr{c.p, c.l, c.a, c.a - c.bp, c.a - c.bm, 8};
    CHECK(assemble_W_interval(ctx, q).agrees_with(assemble_W_interval(ctx, qr)));
    // Mirror invariance.
    WalkQuery qm{c.l, c.p, -c.a, -c.bp, -c.bm, 8};
    CHECK(assemble_W_interval(ctx, q).agrees_with(assemble_W_interval(ctx, qm)));
  }
}

TEST_CASE("interval assembly parity of coefficients") {
  BlockContext ctx = make_block_context(8, 4);
  for (int l = 1; l <= 4; ++l)
    for (int p = 1; p <= 4; ++p) {
      WalkQuery q{l, p, 2, -2, kAngleInf, 8};
      Series w = assemble_W_interval(ctx, q);
      // Final winding pi/2 means the walk ends on the y-axis at (0, +-l), so
      // a step-parity count forces l == p (mod 2) and n == l (mod 2) on
      // nonzero terms.
      for (int n = 0; n <= 8; ++n)
        if ((l - p) % 2 != 0 || (n - l) % 2 != 0) CHECK(w.t_coeff(n) == 0);
    }
}

TEST_CASE("invalid queries are rejected") {
  WalkQuery q{1, 1, 2, -2, 2, 6};
  q.alpha = 1;
  CHECK_THROWS_AS(reduce_query(q), InvalidQuery);
  q.alpha = 4;  // outside [-pi/2, pi/2]
  CHECK_THROWS_AS(reduce_query(q), InvalidQuery);
  q.alpha = 2;
  q.beta_minus = -1;  // pi/4 end with odd l,p
  CHECK_THROWS_AS(reduce_query(q), InvalidQuery);
  q.beta_minus = 2;  // closure misses 0
  q.beta_plus = 6;
  CHECK_THROWS_AS(reduce_query(q), InvalidQuery);
  WalkQuery q2{2, 2, 0, 0, 2, 6};  // (0, pi/2) at alpha = 0 is supported
  CHECK(reduce_query(q2).kind == ReducedQuery::Kind::ZeroAtZero);
}
