#include "winding/excursions.hpp"

#include <cmath>
#include <cstdlib>

#include "winding/blocks.hpp"
#include "winding/elliptic_float.hpp"
#include "winding/elliptic_series.hpp"
#include "winding/grid.hpp"

namespace winding {

namespace {

// Shared core of the q-series route: valid through s^s_order.
Series f_theta(const EllipticSeriesPack& pack, long aq, long s_order) {
  if (aq < 0 || aq % 2 != 0) throw DomainError("excursion F: alpha must be an even quarter count, >= 0");
  Series q = pack.q_of_k.truncated(s_order);
  Series sum = Series::zero(s_order);
  Series qn = Series::constant(Rat(1), s_order);
  for (long n = 1;; ++n) {
    // t-valuation of the n-th term is n(|alpha| + 2) quarters of winding
    // plus the excursion length floor; stop when it exceeds the order.
    if (2 * n * (aq / 2 + 1) > s_order) break;
    qn = (qn * q).truncated(s_order);
    Series one = Series::constant(Rat(1), s_order);
    Series denom = (one + qn + qn * qn + qn * qn * qn).inverse();
    Series term = (one - qn) * denom * qn.pow(aq / 2 + 1);
    sum += term.truncated(s_order);
  }
  Series two_pi_over_K = pack.twoK_over_pi.truncated(s_order).inverse() * Rat(4);
  return (two_pi_over_K * sum).truncated(s_order);
}

}  // namespace

Series excursion_F_theta(long alpha_quarter, int order) {
  long aq = std::labs(alpha_quarter);
  long S = 2L * order;
  EllipticSeriesPack pack = build_series_pack(S + 4);
  return f_theta(pack, aq, S);
}

Series excursion_F_alternating(long alpha_quarter, int order) {
  long aq = std::labs(alpha_quarter);
  if (aq % 2 != 0) throw DomainError("excursion F: alpha must be even");
  int lmax = order / 2;  // endpoints 2l, 2p with max(2l, 2p) <= order
  BlockContext ctx = make_block_context(order, std::max(2 * lmax, 2));
  long S = 2L * order;
  Series sum = Series::zero(S);
  for (long m = 1; aq + 2 * m <= 2L * order; ++m) {
    OpMatrix ym = y_matrix(ctx, aq + 2 * m);
    Series inner = Series::zero(S);
    for (int l = 1; l <= lmax; ++l)
      for (int p = 1; p <= lmax; ++p) {
        Series w = ym.at(2 * l, 2 * p).truncated(S);
        inner += ((l + p) % 2 == 0) ? w : -w;  // (-1)^(l+p)
      }
    Rat c((m % 2 == 0) ? -4 * m : 4 * m);  // 4 (-1)^(m+1) m
    sum += inner * c;
  }
  return sum.truncated(S);
}

Series excursion_char_exact(int b, int order) {
  long S = 2L * order;
  EllipticSeriesPack pack = build_series_pack(S + 4);
  Series one = Series::constant(Rat(1), S);
  switch (((b % 4) + 4) % 4) {
    case 0:
      return one - pack.twoK_over_pi.truncated(S).inverse();
    case 1:
    case 3:
      return one - pack.twoE_over_pi.truncated(S);
    case 2: {
      Series kp2 =
          Series::constant(Rat(1)) - Series::monomial(Rat(1), 4);  // 1 - k^2
      return -one + pack.twoE_over_pi.truncated(S) * Rat(2) -
             kp2 * pack.twoK_over_pi.truncated(S);
    }
  }
  throw DomainError("excursion_char_exact: unreachable");
}

namespace {

// Reduce b to the fundamental domain [0, 2] of b -> b+4, b -> 4-b.
double reduce_b(double b) {
  b = std::fmod(std::fmod(b, 4.0) + 4.0, 4.0);
  return b > 2.0 ? 4.0 - b : b;
}

// Float value of F(t,b) for any b, dispatching integers to the exact
// special forms.
double char_float_any(double t, double b) {
  double r = reduce_b(b);
  if (std::abs(r - std::round(r)) < 1e-9) {
    double k = 4 * t;
    FloatEval ev = agm_eval(k);
    int ib = static_cast<int>(std::lround(r));
    if (ib == 0) return 1 - M_PI / (2 * ev.K);
    if (ib == 1) return 1 - 2 * ev.E / M_PI;
    return -1 + 4 * ev.E / M_PI - (1 - k * k) * 2 * ev.K / M_PI;
  }
  return excursion_char_float(t, b);
}

}  // namespace

double excursion_char_float(double t, double b) {
  if (!(t > 0 && t < 0.25))
    throw DomainError("excursion_char_float: need 0 < t < 1/4");
  double r = reduce_b(b);
  if (std::abs(r - std::round(r)) < 1e-9)
    throw IntegerB("excursion_char_float: integer b; use excursion_char_exact");
  double k = 4 * t;
  FloatEval ev = agm_eval(k);
  double z = M_PI * r / 4;
  double qh = std::sqrt(ev.q);
  double theta_form =
      (1 - M_PI * std::tan(z) / (2 * ev.K) * theta1_dz(z, qh) / theta1(z, qh)) /
      std::cos(M_PI * r / 2);
  double u = ev.K * r / 2;
  SnCnDn s = jacobi_sn_cn_dn(u, k);
  double zeta_form =
      (1 - std::tan(z) * (2 * jacobi_zeta(u, k) + s.cn * s.dn / s.sn)) /
      std::cos(M_PI * r / 2);
  if (std::abs(theta_form - zeta_form) >
      1e-10 * std::max(1.0, std::abs(theta_form)))
    throw FormDisagreement("excursion_char_float: theta and Zeta forms differ");
  return 0.5 * (theta_form + zeta_form);
}

Series cone_F(long alpha_quarter, long bm, long bp, int order) {
  long a = alpha_quarter;
  if (a % 2 != 0) throw InvalidQuery("cone_F: alpha must be even");
  if (!(bm < 0 && 0 < bp) || !(bm < a && a < bp))
    throw InvalidQuery("cone_F: need bm < 0 < bp and bm < alpha < bp");
  long S = 2L * order;
  bool mfin = angle_finite(bm), pfin = angle_finite(bp);
  EllipticSeriesPack pack = build_series_pack(S + 4);
  auto F = [&](long g) { return f_theta(pack, std::labs(g), S); };
  Series out;
  if (!mfin && !pfin) {
    out = F(a);
  } else if (mfin && !pfin) {
    out = F(a) - F(2 * bm - a);
  } else if (!mfin && pfin) {
    out = F(a) - F(2 * bp - a);
  } else {
    long d = 2 * (bp - bm);
    out = Series::zero(S);
    // A term of winding gamma has t-valuation |gamma| + 2.
    long reach = 2L * order;
    for (long n = -(reach + std::labs(a)) / d - 1;
         n <= (reach + std::labs(a)) / d + 1; ++n) {
      long g1 = a + n * d, g2 = 2 * bp - a + n * d;
      if (std::labs(g1) <= reach) out += F(g1);
      if (std::labs(g2) <= reach) out -= F(g2);
    }
  }
  return (out * Rat(1, 4)).truncated(S);
}

double cone_F_fourier(double t, long alpha_quarter, long bm, long bp) {
  if (!angle_finite(bm) || !angle_finite(bp))
    throw InvalidQuery("cone_F_fourier: finite cone required");
  if (!(bm < 0 && 0 < bp) || alpha_quarter % 2 != 0 ||
      !(bm < alpha_quarter && alpha_quarter < bp))
    throw InvalidQuery("cone_F_fourier: bad cone");
  long D = bp - bm;  // index-period of the reflection comb on the pi/2 grid
  double aidx = static_cast<double>(alpha_quarter) / 2;
  double ridx = static_cast<double>(bp) - aidx;
  double sum = 0;
  for (long j = 0; j < D; ++j) {
    double bj = 4.0 * static_cast<double>(j) / static_cast<double>(D);
    double w = std::cos(2 * M_PI * j * aidx / D) -
               std::cos(2 * M_PI * j * ridx / D);
    if (std::abs(w) < 1e-15) continue;
    sum += w * char_float_any(t, bj);
  }
  return sum / (4.0 * static_cast<double>(D));
}

GesselReport gessel_check(int order) {
  GesselReport rep;
  Series g = cone_F(0, -1, 2, order);
  Rat h(1);
  for (int n = 0; 2 * n + 2 <= order; ++n) {
    rep.coeffs.push_back(g.t_coeff(2 * n + 2));
    rep.hyper.push_back(h);
    // c_{n+1}/c_n = 16 (5/6 + n)(1/2 + n) / ((2 + n)(5/3 + n))
    h *= Rat(16) * (Rat(5, 6) + n) * (Rat(1, 2) + n) /
         ((Rat(2) + n) * (Rat(5, 3) + n));
  }
  rep.hyper_ok = rep.coeffs == rep.hyper && !rep.coeffs.empty();
  // Octic algebraicity certificate for y = 1 + 2 F^(0,(-pi/4,pi/2)).
  Series y = Series::constant(Rat(1)) + g * Rat(2);
  auto tp = [](long j) { return Series::monomial(rat_pow(Rat(1, 4), j), 2 * j); };
  Series y2 = y * y, y4 = y2 * y2, y8 = y4 * y4;
  Series res =
      y8 * Rat(27) -
      y4 * (tp(4) * Rat(4608) + tp(2) * Rat(4032) + Series::constant(Rat(18))) +
      y2 * (tp(6) * Rat(-32768) + tp(4) * Rat(67584) + tp(2) * Rat(4224) +
            Series::constant(Rat(-8))) -
      (tp(8) * Rat(65536) + tp(6) * Rat(114688) + tp(4) * Rat(50688) +
       tp(2) * Rat(448) + Series::constant(Rat(1)));
  rep.residual_zero = res.truncated(2L * order).known_zero();
  return rep;
}

double return_angle_prob(long m) {
  double a = static_cast<double>(std::labs(m));
  return (-digamma((a + 1) / 4) + 2 * digamma((a + 2) / 4) -
          digamma((a + 3) / 4)) /
         M_PI;
}

double return_angle_extrapolated(long m) {
  long M = std::labs(m);
  std::vector<double> xs, vs;
  for (int j = 1; j <= 6; ++j) {
    double x = 0.02 * j;  // sample nomes q = 1 - x close to the critical point
    double q = 1 - x;
    double th3 = 1;  // theta_3(0, q), giving 2 pi / K = 4 / theta_3^2
    for (int n = 1;; ++n) {
      double term = 2 * std::pow(q, static_cast<double>(n) * n);
      th3 += term;
      if (term < 1e-17) break;
    }
    double sum = 0;
    for (long p = 0;; ++p) {
      double t1 = 1 / (1 - std::pow(q, static_cast<double>(M + 4 * p + 1)));
      double t2 = 1 / (1 - std::pow(q, static_cast<double>(M + 4 * p + 2)));
      double t3 = 1 / (1 - std::pow(q, static_cast<double>(M + 4 * p + 3)));
      double inc = t1 - 2 * t2 + t3;
      sum += inc;
      if (std::abs(inc) < 1e-16 && p > 4) break;
      if (p > 2000000) throw BudgetExceeded("return_angle_extrapolated");
    }
    xs.push_back(x);
    vs.push_back(4 / (th3 * th3) * sum);
  }
  // Neville extrapolation of the analytic-in-(1-q) values to q = 1.
  size_t n = xs.size();
  for (size_t lvl = 1; lvl < n; ++lvl)
    for (size_t i = 0; i + lvl < n; ++i)
      vs[i] = vs[i + 1] + (vs[i + 1] - vs[i]) * xs[i + lvl] /
                              (xs[i] - xs[i + lvl]);
  return vs[0];
}

namespace {

double log_rat(const Rat& x) {
  if (x <= 0) throw DomainError("log_rat: nonpositive");
  signed long en, ed;
  double mn = mpz_get_d_2exp(&en, x.get_num().get_mpz_t());
  double md = mpz_get_d_2exp(&ed, x.get_den().get_mpz_t());
  return std::log(mn / md) + (en - ed) * std::log(2.0);
}

}  // namespace

std::vector<AsympRow> asymptotics_diagnostic(int b, long max_l) {
  if (max_l < 4 || max_l > 400)
    throw BudgetExceeded("asymptotics_diagnostic: need 4 <= max_l <= 400");
  std::vector<long> ls{max_l / 2, max_l};
  std::vector<AsympRow> rows;
  Series inv_k;  // series in u = k^2, only built for b = 0
  if (b == 0) inv_k = twoK_over_pi_series_u(max_l + 1).inverse();
  for (long l : ls) {
    Rat coeff;  // [t^{2l}] F(t,b) = 16^l [u^l] F
    Rat c2l = Rat(binomial(2 * l, l) * binomial(2 * l, l));
    switch (b) {
      case 0:
        coeff = -inv_k.coeff(l) * rat_pow(Rat(16), l);
        break;
      case 1:
        coeff = c2l / Rat(2 * l - 1);
        break;
      case 2:
        // [u^l](-1 + 4E/pi - (1-u) 2K/pi) with the hypergeometric
        // coefficients of 2E/pi and 2K/pi.
        {
          Rat c2l1 = Rat(binomial(2 * l - 2, l - 1) * binomial(2 * l - 2, l - 1));
          Rat e_l = -c2l / rat_pow(Rat(16), l) / Rat(2 * l - 1);
          Rat k_l = c2l / rat_pow(Rat(16), l);
          Rat k_lm1 = c2l1 / rat_pow(Rat(16), l - 1);
          coeff = (e_l * 2 - k_l + k_lm1) * rat_pow(Rat(16), l);
        }
        break;
      default:
        throw DomainError("asymptotics_diagnostic: b must be 0, 1 or 2");
    }
    double lc = log_rat(coeff);
    double ld = static_cast<double>(l);
    double lp;
    if (b == 0)
      lp = std::log(M_PI) + 2 * ld * std::log(4.0) - std::log(ld) -
           2 * std::log(std::log(ld));
    else if (b == 1)
      lp = 2 * ld * std::log(4.0) - std::log(2 * M_PI * ld * ld);
    else
      lp = 2 * ld * std::log(4.0) - std::log(4 * M_PI * ld * ld * ld);
    rows.push_back({l, std::exp(lc - lp)});
  }
  return rows;
}

}  // namespace winding
