#include "gtable.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <tuple>

#include "specialfun.hpp"

namespace zagreb {

namespace {

double logsumexp(const std::vector<double>& v) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : v) m = std::max(m, x);
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

}  // namespace

GTable::GTable(int k, int r_max, int s_max)
    : k_(k), r_max_(r_max), s_max_(s_max) {
  if (k < 3)
    throw contract_error(
        "g_table: k >= 3 (k = 2 needs a different normalization; only the "
        "mean expansion is available there)");
  if (r_max < 0 || s_max < 0) throw contract_error("g_table: bounds >= 0");
  // row r is needed up to s_max + (r_max - r)(k - 1)
  auto ext = [&](int r) { return s_max + (r_max - r) * (k - 1); };
  logg_.resize(static_cast<std::size_t>(r_max) + 1);
  logg_[0].resize(static_cast<std::size_t>(ext(0)) + 1);
  for (int s = 0; s <= ext(0); ++s)
    logg_[0][s] = log_gamma(s + 1.0) + 0.5 * kLnPi - log_gamma((s + 1.0) / 2.0);
  std::vector<double> terms;
  for (int r = 1; r <= r_max; ++r) {
    logg_[r].resize(static_cast<std::size_t>(ext(r)) + 1);
    {  // s = 0
      terms.clear();
      for (int l = 1; l <= r - 1; ++l)
        terms.push_back(log_binomial(r, l) + logg_[l][0] + logg_[r - l][0] +
                        log_gamma((k * l - 1) / 2.0) +
                        log_gamma((k * (r - l) + 1) / 2.0));
      const double s1 =
          terms.empty()
              ? -std::numeric_limits<double>::infinity()
              : logsumexp(terms) - 0.5 * kLnPi - std::log(double(k) * r - 2.0) -
                    log_gamma((k * r - 1) / 2.0);
      const double s2 = std::log(double(k) * r) + log_gamma(k * r / 2.0 - 1.0) -
                        log_gamma((k * r - 1) / 2.0) + logg_[r - 1][k - 1];
      logg_[r][0] = logsumexp({s1, s2});
    }
    for (int s = 1; s <= ext(r); ++s) {
      terms.clear();
      for (int l = 1; l <= r; ++l)
        terms.push_back(log_binomial(r, l) + logg_[l][0] + logg_[r - l][s] +
                        log_gamma((k * l - 1) / 2.0) +
                        log_gamma((k * (r - l) + s + 1) / 2.0));
      const double s1 = logsumexp(terms) - kLn2 - 0.5 * kLnPi -
                        log_gamma((k * r + s + 1) / 2.0);
      const double inner = logsumexp(
          {std::log(double(k) * r) + logg_[r - 1][k + s - 1],
           std::log(static_cast<double>(s)) + logg_[r][s - 1]});
      const double s2 = log_gamma((k * r + s) / 2.0) -
                        log_gamma((k * r + s + 1) / 2.0) + inner;
      logg_[r][s] = logsumexp({s1, s2});
    }
  }
}

double GTable::log_g(int r, int s) const {
  if (r < 0 || r > r_max_ || s < 0 || s > s_max_)
    throw contract_error("g_table: (r,s) out of range");
  return logg_[r][s];
}

bool GTable::g_overflows(int r, int s) const {
  return log_g(r, s) > std::log(std::numeric_limits<double>::max());
}

double GTable::g(int r, int s) const { return std::exp(log_g(r, s)); }

GTable g_table(int k, int r_max, int s_max) { return GTable(k, r_max, s_max); }

CheckReport g_consistency_check(const GTable& t, double rel_tol) {
  CheckReport rep;
  rep.title = "g-table consistency (k=" + std::to_string(t.k()) + ")";
  const int k = t.k();
  if (t.r_max() >= 1) {
    const double closed = std::log(2.0) + log_gamma(k + 1.0) + 0.5 * kLnPi -
                          std::log(k - 2.0) - log_gamma((k - 1) / 2.0);
    const double rel = std::fabs(std::expm1(t.log_g(1, 0) - closed));
    rep.add("g_{1,0} recurrence vs closed form", rel < rel_tol,
            fmt("recurrence %.12e closed %.12e rel %.3e", std::exp(t.log_g(1, 0)),
                std::exp(closed), rel));
  }
  double worst = 0.0;
  for (int s = 0; s + 2 <= t.s_max(); ++s) {
    const double ratio = t.log_g(0, s + 2) - t.log_g(0, s);
    const double target = std::log(2.0 * (s + 2));
    worst = std::max(worst, std::fabs(std::expm1(ratio - target)));
  }
  if (t.s_max() >= 2)
    rep.add("g_{0,s+2}/g_{0,s} vs Rayleigh ratio 2(s+2)", worst < rel_tol,
            fmt("worst rel %.3e over s <= %d", worst, t.s_max() - 2));
  return rep;
}

CarlemanReport carleman_diagnostic(const GTable& t, int R) {
  if (R < 4 || R > t.r_max())
    throw contract_error("carleman_diagnostic: need 4 <= R <= r_max");
  CarlemanReport out;
  out.k = t.k();
  out.R = R;
  double sum = 0.0;
  for (int r = 1; r <= R; ++r) {
    const double term = std::exp(-t.log_g(r, 0) / (2.0 * r));
    out.terms.push_back(term);
    sum += term;
    out.partial_sums.push_back(sum);
  }
  const int lo = std::max(2, R / 2);
  double min_inv_r = 1e300, max_inv_r = 0, min_pow = 1e300, max_pow = 0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (int r = lo; r <= R; ++r) {
    const double term = out.terms[r - 1];
    const double v1 = term * r;
    const double v2 = term * std::pow(r, t.k() / 4.0);
    min_inv_r = std::min(min_inv_r, v1);
    max_inv_r = std::max(max_inv_r, v1);
    min_pow = std::min(min_pow, v2);
    max_pow = std::max(max_pow, v2);
    const double x = std::log(static_cast<double>(r));
    const double y = std::log(term);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++cnt;
  }
  out.band_ratio_inv_r = max_inv_r / min_inv_r - 1.0;
  out.band_ratio_pow = max_pow / min_pow - 1.0;
  out.fitted_exponent = -(cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  // terms ~ r^{-k/4}: summable iff the decay power exceeds 1
  out.verdict = out.fitted_exponent <= 1.1 ? "divergent-like" : "convergent-like";
  out.report.title = "carleman diagnostic (k=" + std::to_string(t.k()) + ")";
  out.report.add(
      "decay exponent vs k/4", std::fabs(out.fitted_exponent - t.k() / 4.0) < 0.1,
      fmt("fitted %.4f expected %.2f over r in [%d,%d]", out.fitted_exponent,
          t.k() / 4.0, lo, R));
  out.report.add("verdict matches k",
                 (t.k() <= 4) == (out.verdict == "divergent-like"),
                 out.verdict + fmt(" (S_R = %.4f)", sum));
  return out;
}

AppendixBound appendix_bound_check(const GTable& t, double A_max, double step) {
  AppendixBound out;
  const int k = t.k();
  auto violation = [&](double A) {
    // max over entries of log g - ((kr+s) log A + 0.5 log (kr+s)!)
    double worst = -1e300;
    int wr = 0, ws = 0;
    for (int r = 0; r <= t.r_max(); ++r)
      for (int s = 0; s <= t.s_max(); ++s) {
        const double lhs = t.log_g(r, s);
        const double rhs =
            (double(k) * r + s) * std::log(A) + 0.5 * log_gamma(k * r + s + 1.0);
        if (lhs - rhs > worst) {
          worst = lhs - rhs;
          wr = r;
          ws = s;
        }
      }
    return std::tuple<double, int, int>(worst, wr, ws);
  };
  for (double A = 1.0 + step; A <= A_max + 1e-12; A += step) {
    auto [worst, wr, ws] = violation(A);
    if (worst <= 1e-9) {
      out.feasible = true;
      out.A = A;
      out.binding_r = wr;
      out.binding_s = ws;
      break;
    }
    out.max_violation = worst;
    out.binding_r = wr;
    out.binding_s = ws;
  }
  out.report.title = "appendix bound (k=" + std::to_string(k) + ")";
  out.report.add("finite A exists for the built table", out.feasible,
                 out.feasible
                     ? fmt("A = %.2f binding (r,s)=(%d,%d)", out.A,
                           out.binding_r, out.binding_s)
                     : fmt("no A <= %.2f; max log-violation %.3e at (%d,%d)",
                           A_max, out.max_violation, out.binding_r,
                           out.binding_s));
  return out;
}

CheckReport gamma_ratio_grid(int a_max, int b_max) {
  CheckReport rep;
  rep.title = "gamma ratio grid";
  double worst = -1e300;
  int wa = 0, wb = 0;
  for (int a = 1; a <= a_max; ++a)
    for (int b = 1; b <= b_max; ++b) {
      const double v = log_gamma(a / 2.0) + log_gamma(b / 2.0) - 0.5 * kLnPi -
                       log_gamma((a + b - 1) / 2.0);
      if (v > worst) {
        worst = v;
        wa = a;
        wb = b;
      }
    }
  rep.add("Gamma(a/2)Gamma(b/2) <= sqrt(pi) Gamma((a+b-1)/2)", worst <= 1e-12,
          fmt("max log ratio %.3e at (a,b)=(%d,%d)", worst, wa, wb));
  return rep;
}

CheckReport binomial_domination_grid(int r_max, int s_max, int k_min,
                                     int k_max) {
  CheckReport rep;
  rep.title = "binomial domination grid";
  std::int64_t violations = 0;
  for (int k = k_min; k <= k_max; ++k)
    for (int r = 0; r <= r_max; ++r)
      for (int l = 0; l <= r; ++l)
        for (int s = 0; s <= s_max; ++s) {
          const Int lhs = binomial(r, l) * binomial(r, l);
          const Int rhs = binomial(std::int64_t(k) * r + s, std::int64_t(k) * l);
          if (lhs > rhs) ++violations;
        }
  rep.add("binom(r,l)^2 <= binom(kr+s, kl)", violations == 0,
          fmt("%lld violations on the grid", static_cast<long long>(violations)));
  return rep;
}

}  // namespace zagreb
