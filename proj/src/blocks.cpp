#include "winding/blocks.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace winding {

namespace {

// p/n * C(n,(n+l)/2) * C(n,(n+p)/2) / 4^n, canonicalized.
Rat j_coeff(int l, int p, long n) {
  Int num = p * binomial(n, (n + l) / 2) * binomial(n, (n + p) / 2);
  Int den = n;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * static_cast<unsigned long>(n));
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Series j_series(int l, int p, int orderT) {
  if (l < 1 || p < 1) throw DomainError("j_series: endpoints must be >= 1");
  long orderS = 2L * orderT;
  if ((l + p) % 2 != 0) return Series::zero(orderS);
  Series out = Series::zero(orderS);
  for (long n = std::max(l, p); n <= orderT; n += 2)
    out += Series::monomial(j_coeff(l, p, n), 2 * n, orderS);
  return out;
}

Series b_series(int l, int p, int orderT) {
  if (l < 1 || p < 1) throw DomainError("b_series: endpoints must be >= 1");
  long orderS = 2L * orderT;
  if ((l + p) % 2 != 0) return Series::zero(orderS);
  Series out = Series::zero(orderS);
  for (long n = 0; 2 * n <= orderT; ++n) {
    Int c = binomial(2 * n, n) *
            (binomial(2 * n, n + (l - p) / 2) - binomial(2 * n, n + (l + p) / 2));
    if (c == 0) continue;
    Int den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 4 * static_cast<unsigned long>(n));
    Rat r(c, den);
    r.canonicalize();
    out += Series::monomial(r, 4 * n, orderS);
  }
  return out;
}

Int axis_walk_count(long alpha_quarter, int N) {
  if (!angle_finite(alpha_quarter) || alpha_quarter % 2 != 0)
    throw DomainError("axis_walk_count: alpha must be even quarter units");
  if (N < 0) throw DomainError("axis_walk_count: negative length");
  long h = std::labs(alpha_quarter) / 2;  // winding in pi/2 steps
  if (N < h || (N - h) % 2 != 0) return Int(0);
  return binomial(N, (N - h) / 2);
}

Series psi_power_coeff(int n, int p) {
  if (n < 1 || p < 1) throw DomainError("psi_power_coeff: arguments must be >= 1");
  if ((n + p) % 2 != 0 || p > n) return Series();
  Int num = p * binomial(n, (n + p) / 2);
  Int den = n;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n));
  Rat r(num, den);
  r.canonicalize();
  return Series::monomial(r, n);
}

OpMatrix op_product(const OpMatrix& m1, const OpMatrix& m2) {
  if (m1.dim != m2.dim) throw DomainError("op_product: dimension mismatch");
  OpMatrix out(m1.dim);
  for (int l = 1; l <= m1.dim; ++l)
    for (int p = 1; p <= m1.dim; ++p) {
      Series s;
      for (int m = 1; m <= m1.dim; ++m) s += (m1.at(l, m) * m2.at(m, p)) * Rat(1, m);
      out.at(l, p) = s;
    }
  return out;
}

namespace {

// Solves A * B = J in the weighted algebra for A. Splitting B into its
// constant part (matrix elements delta_{l,p}, whose weighted action divides
// column p by p) plus V with positive t-valuation gives the fixed-point
// equation A(l,p) = p (J(l,p) - (A * V)(l,p)), which is exact after enough
// iterations because each one pushes the error valuation up by at least t^2.
OpMatrix a_matrix(const OpMatrix& jm, const OpMatrix& bm, int orderT) {
  int dim = jm.dim;
  long orderS = 2L * orderT;
  OpMatrix v(dim);
  for (int l = 1; l <= dim; ++l)
    for (int p = 1; p <= dim; ++p) {
      Series s = bm.at(l, p);
      if (l == p) s -= Series::constant(1, orderS);
      v.at(l, p) = s;
    }
  OpMatrix a(dim);
  for (int l = 1; l <= dim; ++l)
    for (int p = 1; p <= dim; ++p) a.at(l, p) = jm.at(l, p) * Rat(p);
  for (int j = 0; j <= orderT; ++j) {
    OpMatrix av = op_product(a, v);
    for (int l = 1; l <= dim; ++l)
      for (int p = 1; p <= dim; ++p)
        a.at(l, p) = (jm.at(l, p) - av.at(l, p)) * Rat(p);
  }
  return a;
}

}  // namespace

BlockContext make_block_context(int orderT, int max_lp) {
  if (orderT < 0 || max_lp < 1) throw DomainError("make_block_context: bad arguments");
  BlockContext ctx;
  ctx.orderT = orderT;
  ctx.dim = orderT + max_lp;
  int dim = ctx.dim;
  ctx.jmat = OpMatrix(dim);
  ctx.bmat = OpMatrix(dim);
  for (int l = 1; l <= dim; ++l)
    for (int p = 1; p <= dim; ++p) {
      ctx.jmat.at(l, p) = j_series(l, p, orderT) * Rat(l);
      ctx.bmat.at(l, p) = b_series(l, p, orderT);
    }
  ctx.amat = a_matrix(ctx.jmat, ctx.bmat, orderT);
  ctx.bjn.reserve(orderT + 1);
  ctx.bjn.push_back(ctx.bmat);
  for (int n = 1; n <= orderT; ++n) ctx.bjn.push_back(op_product(ctx.bjn.back(), ctx.jmat));
  return ctx;
}

OpMatrix y_matrix(const BlockContext& ctx, long alpha_quarter) {
  OpMatrix out(ctx.dim);
  long orderS = 2L * ctx.orderT;
  for (int l = 1; l <= ctx.dim; ++l)
    for (int p = 1; p <= ctx.dim; ++p) out.at(l, p) = Series::zero(orderS);
  for (int n = 0; n <= ctx.orderT; ++n) {
    Int c = axis_walk_count(alpha_quarter, n);
    if (c == 0) continue;
    Rat rc(c);
    for (int l = 1; l <= ctx.dim; ++l)
      for (int p = 1; p <= ctx.dim; ++p) out.at(l, p) += ctx.bjn[n].at(l, p) * rc;
  }
  return out;
}

OpMatrix refl_b_matrix(const BlockContext& ctx, long a, long bm, long bp) {
  // Cut the reflection sum where the minimal walk length 2|a'|/pi = |a'|/2
  // exceeds the order bound.
  long amax = 2L * ctx.orderT;
  auto add = [&](OpMatrix& acc, long ap, int sign) {
    ap = std::labs(ap);
    if (ap > amax) return;
    OpMatrix y = y_matrix(ctx, ap);
    for (int l = 1; l <= ctx.dim; ++l)
      for (int p = 1; p <= ctx.dim; ++p) {
        if (sign > 0)
          acc.at(l, p) += y.at(l, p);
        else
          acc.at(l, p) -= y.at(l, p);
      }
  };
  OpMatrix out(ctx.dim);
  long orderS = 2L * ctx.orderT;
  for (int l = 1; l <= ctx.dim; ++l)
    for (int p = 1; p <= ctx.dim; ++p) out.at(l, p) = Series::zero(orderS);
  bool fm = angle_finite(bm), fp = angle_finite(bp);
  if (fm && fp) {
    long d = 2 * (bp - bm);
    for (long n = -(amax / d + 2); n <= amax / d + 2; ++n) {
      add(out, a + n * d, +1);
      add(out, 2 * bp - a + n * d, -1);
    }
  } else if (!fm && fp) {
    add(out, a, +1);
    add(out, 2 * bp - a, -1);
  } else if (fm && !fp) {
    // Single reflection at the finite lower end: subtract walks whose
    // reflected final winding is 2b- - a.
    add(out, a, +1);
    add(out, 2 * bm - a, -1);
  } else {
    throw DomainError("refl_b_matrix: both ends infinite");
  }
  return out;
}

OpMatrix first_return_matrix(const OpMatrix& yc, int orderT) {
  int dim = yc.dim;
  long orderS = 2L * orderT;
  OpMatrix vh(dim);
  for (int l = 1; l <= dim; ++l)
    for (int p = 1; p <= dim; ++p) {
      Series s = yc.at(l, p) * Rat(l);
      if (l == p) s -= Series::constant(l, orderS);
      vh.at(l, p) = s;
    }
  OpMatrix rh = vh;
  for (int j = 0; j <= orderT; ++j) {
    OpMatrix rv = op_product(rh, vh);
    for (int l = 1; l <= dim; ++l)
      for (int p = 1; p <= dim; ++p) rh.at(l, p) = vh.at(l, p) - rv.at(l, p);
  }
  return rh;
}

Series assemble_W(const BlockContext& ctx, int l, int p, long alpha_quarter) {
  if (l < 1 || p < 1 || l > ctx.dim || p > ctx.dim)
    throw InvalidQuery("assemble_W: endpoint out of range");
  return y_matrix(ctx, std::labs(alpha_quarter)).at(l, p);
}

Series assemble_W_interval(const BlockContext& ctx, const WalkQuery& q) {
  ReducedQuery r = reduce_query(q);
  if (q.l > ctx.dim || q.p > ctx.dim || ctx.orderT < q.order)
    throw InvalidQuery("assemble_W_interval: context too small for query");
  long orderS = 2L * ctx.orderT;
  Series out;
  switch (r.kind) {
    case ReducedQuery::Kind::FullLine:
      out = y_matrix(ctx, r.a).at(r.l, r.p);
      break;
    case ReducedQuery::Kind::Interior:
      out = refl_b_matrix(ctx, r.a, r.bm, r.bp).at(r.l, r.p);
      break;
    case ReducedQuery::Kind::JType: {
      OpMatrix m = op_product(ctx.amat, refl_b_matrix(ctx, r.a - 2, r.bm, r.a));
      out = m.at(r.l, r.p) * Rat(1, r.l);
      break;
    }
    case ReducedQuery::Kind::AType: {
      if (r.a == 2) {
        out = ctx.amat.at(r.l, r.p) * Rat(1, static_cast<long>(r.l) * r.p);
      } else {
        OpMatrix m = op_product(
            op_product(ctx.amat, refl_b_matrix(ctx, r.a - 4, -2, r.a - 2)), ctx.amat);
        out = m.at(r.l, r.p) * Rat(1, static_cast<long>(r.l) * r.p);
      }
      break;
    }
    case ReducedQuery::Kind::ZeroAtZero: {
      OpMatrix yc = angle_finite(r.bp) ? refl_b_matrix(ctx, 0, -r.bp, r.bp)
                                       : y_matrix(ctx, 0);
      OpMatrix rh = first_return_matrix(yc, ctx.orderT);
      out = rh.at(r.l, r.p) * Rat(1, 2L * r.l);
      if (r.l == r.p) out += Series::constant(1, orderS);
      break;
    }
  }
  return out.truncated(std::min(out.order(), 2L * q.order));
}

Series assemble_W_interval(const WalkQuery& q) {
  int max_lp = std::max(q.l, q.p);
  BlockContext ctx = make_block_context(q.order, max_lp);
  Series w = assemble_W_interval(ctx, q);
  BlockContext ctx2 = make_block_context(q.order, max_lp + 2);
  Series w2 = assemble_W_interval(ctx2, q);
  if (!w.agrees_with(w2))
    throw std::runtime_error("assemble_W_interval: truncation instability");
  return w;
}

}  // namespace winding
