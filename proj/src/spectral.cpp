#include "winding/spectral.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace winding {

namespace {

// Central binomial / 4^i: the Taylor coefficients of (1 - x)^(-1/2).
Rat half_binom(long i) {
  Int den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * static_cast<unsigned long>(i));
  Rat r(binomial(2 * i, i), den);
  r.canonicalize();
  return r;
}

std::vector<Series> v_series_impl(VModulus modulus, int z_degree,
                                  const EllipticSeriesPack& pack) {
  Series mod_k, inv_sqrt, inv_twoK;
  if (modulus == VModulus::k) {
    mod_k = Series::monomial(1, 2);
    inv_sqrt = Series::monomial(1, -1);
    inv_twoK = pack.twoK_over_pi.inverse();
  } else {
    mod_k = pack.k1;
    inv_sqrt = pack.sqrt_k1.inverse();
    inv_twoK = pack.twoK1_over_pi.inverse();
  }
  int jmax = (z_degree - 1) / 2;
  std::vector<Series> out(z_degree + 1);
  for (long j = 0; j <= jmax; ++j) {
    // [y^(2j)] (m - y^2)^(-1/2) (1 - m y^2)^(-1/2)
    //   = m^(-1/2) sum_i half_binom(i) m^(-i) half_binom(j-i) m^(j-i).
    Series c;
    for (long i = 0; i <= j; ++i) c += mod_k.pow(j - 2 * i) * (half_binom(i) * half_binom(j - i));
    out[2 * j + 1] = c * inv_sqrt * inv_twoK * Rat(1, 2 * j + 1);
  }
  return out;
}

using Poly = std::vector<Series>;  // index = degree in z, coefficients in s

Poly poly_mul(const Poly& a, const Poly& b, int maxdeg) {
  Poly out(maxdeg + 1);
  for (int i = 0; i <= maxdeg && i < static_cast<int>(a.size()); ++i) {
    if (a[i].known_zero()) continue;
    for (int j = 0; i + j <= maxdeg && j < static_cast<int>(b.size()); ++j) {
      if (b[j].known_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  return out;
}

Poly poly_scale(const Poly& a, const Rat& c) {
  Poly out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return out;
}

}  // namespace

std::vector<Series> v_series(VModulus modulus, int z_degree, long order) {
  if (z_degree < 1) throw DomainError("v_series: z_degree must be >= 1");
  return v_series_impl(modulus, z_degree, build_series_pack(order));
}

bool landen_conjugation_check(long order, int z_degree) {
  EllipticSeriesPack pack = build_series_pack(order);
  std::vector<Series> vk = v_series_impl(VModulus::k, z_degree, pack);
  std::vector<Series> vk1 = v_series_impl(VModulus::k1, z_degree, pack);
  for (int n = 1; n <= z_degree; ++n) {
    Series comp;
    for (int j = 1; j <= n; j += 2)
      if (!vk1[j].known_zero()) comp += vk1[j] * psi_power_coeff(n, j);
    if (!comp.agrees_with(vk[n])) return false;
  }
  return true;
}

BasisCoeffTable basis_table(int max_l, int max_m, long order) {
  if (max_l < 1 || max_m < 1) throw DomainError("basis_table: bad dimensions");
  EllipticSeriesPack pack = build_series_pack(order);
  std::vector<Series> vt = v_series_impl(VModulus::k1, max_l, pack);
  Poly vpoly(vt.begin(), vt.begin() + max_l + 1);

  // sin(v~) and cos(v~) from the Taylor series; powers of vt beyond z-degree
  // max_l never contribute.
  Poly sin1(max_l + 1), cos1(max_l + 1);
  cos1[0] = Series::constant(1);
  Poly power = vpoly;
  Int fact = 1;
  for (int r = 1; r <= max_l; ++r) {
    fact *= r;
    Rat c(((r / 2) % 2 == 0) ? 1 : -1, fact);
    c.canonicalize();
    if (r % 2 == 1)
      sin1 = poly_add(sin1, poly_scale(power, c));
    else
      cos1 = poly_add(cos1, poly_scale(power, c));
    if (r < max_l) power = poly_mul(power, vpoly, max_l);
  }

  BasisCoeffTable table;
  table.order = order;
  table.max_l = max_l;
  table.max_m = max_m;
  table.coeff.assign(max_l + 1, std::vector<Series>(max_m + 1));
  table.norm_sq.assign(max_m + 1, Series());

  Poly sinm = sin1, cosm = cos1;
  for (int m = 1; m <= max_m; ++m) {
    if (m > 1) {
      Poly s = poly_add(poly_mul(sinm, cos1, max_l), poly_mul(cosm, sin1, max_l));
      Poly c = poly_add(poly_mul(cosm, cos1, max_l), poly_scale(poly_mul(sinm, sin1, max_l), Rat(-1)));
      sinm = s;
      cosm = c;
    }
    const Poly& f = (m % 2 == 1) ? sinm : cosm;  // cos constant drops for l >= 1
    for (int l = 1; l <= max_l; ++l) {
      Series c = f[l] * Rat(l);
      if ((l - m) % 2 != 0 && !c.known_zero())
        throw std::logic_error("basis_table: parity violation");
      table.coeff[l][m] = c;
    }
    table.norm_sq[m] = (pack.q4_pow(-4L * m) - pack.q4_pow(4L * m)) * Rat(m, 4);
  }
  return table;
}

Series eigenvalue(EigenKind kind, long a, long bm, long bp, int m,
                  const EllipticSeriesPack& pack) {
  if (m < 1) throw DomainError("eigenvalue: mode must be >= 1");
  Series one = Series::constant(1, pack.order);
  switch (kind) {
    case EigenKind::Y:
      if (a < 0 || !angle_finite(a)) throw DomainError("eigenvalue: Y needs a >= 0");
      return pack.twoK_over_pi * pack.q4_pow(static_cast<long>(m) * a) * Rat(1, m);
    case EigenKind::A: {
      if (a < 2 || !angle_finite(a)) throw DomainError("eigenvalue: A needs a >= 2");
      Series qa = pack.q4_pow(static_cast<long>(m) * a);
      return pack.twoK_over_pi.inverse() * qa * (one - qa * qa).inverse() * Rat(m);
    }
    case EigenKind::J: {
      if (a < 0 || !angle_finite(a) || bm >= 0) throw DomainError("eigenvalue: J params");
      Series out = pack.q4_pow(static_cast<long>(m) * a);
      if (angle_finite(bm))
        out = out * (one - pack.q4_pow(-2L * m * bm)) *
              (one - pack.q4_pow(2L * m * (a - bm))).inverse();
      return out;
    }
    case EigenKind::B: {
      if (a < 0 || !angle_finite(a) || bm >= 0 || bp <= a)
        throw DomainError("eigenvalue: B params");
      Series out = pack.twoK_over_pi * Rat(1, m);
      Series core = pack.q4_pow(static_cast<long>(m) * a);
      if (angle_finite(bp)) core -= pack.q4_pow(m * (2 * bp - a));
      out = out * core;
      if (angle_finite(bm)) out = out * (one - pack.q4_pow(-2L * m * bm));
      if (angle_finite(bm) && angle_finite(bp))
        out = out * (one - pack.q4_pow(2L * m * (bp - bm))).inverse();
      return out;
    }
  }
  throw DomainError("eigenvalue: unknown kind");
}

namespace {

// Lazily memoized per-mode series (eigenvalues, inverse norms): the same
// mode data is shared across every (l,p) cell of a query.
struct ModeCache {
  std::function<Series(int)> make;
  std::vector<Series> val;
  std::vector<bool> have;

  const Series& get(int m) {
    if (static_cast<int>(val.size()) <= m) {
      val.resize(m + 1);
      have.resize(m + 1, false);
    }
    if (!have[m]) {
      val[m] = make(m);
      have[m] = true;
    }
    return val[m];
  }
};

Series eigen_sum(int l, int p, long orderS, const BasisCoeffTable& table,
                 ModeCache& lam, ModeCache& ninv) {
  // Conservative mode cutoff: the summand's s-valuation is at least
  // 4m - 2(l+p) (norm^-1 contributes +4m, the coefficients at worst -2l-2p,
  // the eigenvalue >= 0).
  int mstop = static_cast<int>((orderS + 2L * (l + p)) / 4 + 1);
  if (mstop + 2 > table.max_m)
    throw ModeBoundUnstable("eigen_sum: basis table has too few modes");
  // Truncating every factor to T keeps the product valid through orderS:
  // the other factors' valuations total at least -2(l+p).
  long T = orderS + 2L * (l + p) + 2;
  auto cut = [&](const Series& s) { return s.truncated(std::min(s.order(), T)); };
  Series acc;
  auto term = [&](int m) {
    return cut(lam.get(m)) * cut(table.at(l, m)) * cut(table.at(p, m)) *
           cut(ninv.get(m));
  };
  for (int m = ((l % 2 == 0) ? 2 : 1); m <= mstop; m += 2) acc += term(m);
  for (int m = mstop + 1; m <= mstop + 2; ++m) {
    if ((l - m) % 2 != 0) continue;
    Series t = term(m);
    if (t.order() < orderS || !t.truncated(orderS).known_zero())
      throw ModeBoundUnstable("eigen_sum: mode bound not stable");
  }
  if (acc.order() < orderS)
    throw ModeBoundUnstable("eigen_sum: insufficient series order in table");
  return acc.truncated(orderS);
}

Series finalize(Series w, long orderS) {
  w = w.truncated(std::min(w.order(), orderS));
  if (w.valuation() < 0)
    throw std::logic_error("spectral_W: negative valuation survived the eigen-sum");
  if (!w.is_k_series())
    throw std::logic_error("spectral_W: odd powers of s survived the eigen-sum");
  return w;
}

}  // namespace

Series spectral_W(const WalkQuery& q, const BasisCoeffTable& table,
                  const EllipticSeriesPack& pack) {
  ReducedQuery r = reduce_query(q);
  long orderS = 2L * q.order;
  ModeCache ninv{[&](int m) { return table.norm_sq[m].inverse(); }, {}, {}};
  switch (r.kind) {
    case ReducedQuery::Kind::FullLine: {
      ModeCache lam{[&](int m) { return eigenvalue(EigenKind::Y, r.a, 0, 0, m, pack); },
                    {},
                    {}};
      return finalize(eigen_sum(r.l, r.p, orderS, table, lam, ninv), orderS);
    }
    case ReducedQuery::Kind::Interior: {
      ModeCache lam{
          [&](int m) { return eigenvalue(EigenKind::B, r.a, r.bm, r.bp, m, pack); },
          {},
          {}};
      return finalize(eigen_sum(r.l, r.p, orderS, table, lam, ninv), orderS);
    }
    case ReducedQuery::Kind::JType: {
      ModeCache lam{[&](int m) { return eigenvalue(EigenKind::J, r.a, r.bm, 0, m, pack); },
                    {},
                    {}};
      return finalize(eigen_sum(r.l, r.p, orderS, table, lam, ninv) * Rat(1, r.l),
                      orderS);
    }
    case ReducedQuery::Kind::AType: {
      ModeCache lam{[&](int m) { return eigenvalue(EigenKind::A, r.a, 0, 0, m, pack); },
                    {},
                    {}};
      return finalize(eigen_sum(r.l, r.p, orderS, table, lam, ninv) *
                          Rat(1, static_cast<long>(r.l) * r.p),
                      orderS);
    }
    case ReducedQuery::Kind::ZeroAtZero: {
      // Fill the confined-walk matrix for the symmetric interval (-b+, b+)
      // from eigen-sums, then run the shared first-return renewal.
      int dim = q.order + std::max(q.l, q.p);
      if (dim > table.max_l)
        throw ModeBoundUnstable("spectral_W: table too small for first-return matrix");
      ModeCache lam{[&](int m) {
                      return angle_finite(r.bp)
                                 ? eigenvalue(EigenKind::B, 0, -r.bp, r.bp, m, pack)
                                 : eigenvalue(EigenKind::Y, 0, 0, 0, m, pack);
                    },
                    {},
                    {}};
      OpMatrix yc(dim);
      for (int l = 1; l <= dim; ++l)
        for (int p = l; p <= dim; ++p) {
          if ((l - p) % 2 != 0) continue;
          Series w = eigen_sum(l, p, orderS, table, lam, ninv);
          yc.at(l, p) = w;
          yc.at(p, l) = w;
        }
      OpMatrix rh = first_return_matrix(yc, q.order);
      Series out = rh.at(r.l, r.p) * Rat(1, 2L * r.l);
      if (r.l == r.p) out += Series::constant(1, orderS);
      return finalize(out, orderS);
    }
  }
  throw DomainError("spectral_W: unknown reduced kind");
}

Series spectral_W(const WalkQuery& q) {
  ReducedQuery r = reduce_query(q);
  int max_l = std::max(q.l, q.p);
  if (r.kind == ReducedQuery::Kind::ZeroAtZero) max_l += q.order;
  long orderS = 2L * q.order;
  int max_m = static_cast<int>((orderS + 4L * max_l) / 4 + 3);
  long pack_order = orderS + 6L * max_l + 8;
  EllipticSeriesPack pack = build_series_pack(pack_order);
  BasisCoeffTable table = basis_table(max_l, max_m, pack_order);
  return spectral_W(q, table, pack);
}

}  // namespace winding
