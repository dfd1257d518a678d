#include "verify.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>

#include "closed_forms.hpp"
#include "constants.hpp"
#include "enumeration.hpp"
#include "exports.hpp"
#include "gtable.hpp"
#include "joint_pmf.hpp"
#include "moment_table.hpp"
#include "montecarlo.hpp"
#include "recurrence.hpp"
#include "rng.hpp"
#include "specialfun.hpp"
#include "transfer.hpp"
#include "trees.hpp"

namespace zagreb {

namespace {

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

CheckReport suite_oracle(std::int64_t n_max) {
  CheckReport rep;
  rep.title = "oracle chain";
  if (n_max <= 0) n_max = 7;
  if (n_max > 9) n_max = 9;
  const int W = 8;
  for (TreeModel model : {TreeModel::NonPlane, TreeModel::Plane}) {
    for (int k : {2, 3, 4}) {
      ExactMomentTable table(model, k, n_max, W);
      bool all_eq = true;
      std::string first_bad;
      for (std::int64_t n = 1; n <= n_max && all_eq; ++n) {
        const EnumerationResult en = enumerate_all(model, k, n);
        if (en.total_weight != count_trees(model, n)) {
          all_eq = false;
          first_bad = fmt("n=%lld enumeration weight mismatch", (long long)n);
          break;
        }
        const JointPMF direct = joint_pmf(model, k, n);
        const JointPMF from_enum = en.to_pmf();
        for (const auto& [i, l] : table.entries()) {
          const Rat a = from_enum.moment(i, l);
          const Rat b = direct.moment(i, l);
          const Rat c = table.at(n, i, l);
          if (a != b || b != c) {
            all_eq = false;
            first_bad = fmt("n=%lld (i,l)=(%d,%d)", (long long)n, i, l);
            break;
          }
        }
      }
      rep.add(fmt("%s k=%d: enumerate == joint_pmf == moment_table (n <= %lld, "
                  "grade <= %d)",
                  model_name(model), k, (long long)n_max, W),
              all_eq, all_eq ? "exact rational equality" : first_bad);
    }
  }
  return rep;
}

CheckReport suite_closed_forms() {
  CheckReport rep;
  rep.title = "closed forms";
  const std::int64_t N = 200;
  {
    ExactMomentTable t(TreeModel::NonPlane, 2, N, 2);
    bool ok = true;
    for (std::int64_t n = 1; n <= N && ok; ++n)
      ok = t.at(n, 0, 1) == harmonic(n - 1);
    rep.add("non-plane E(R_n) = H_{n-1} exactly, n <= 200", ok, "");
  }
  {
    ExactMomentTable t(TreeModel::Plane, 2, N, 2);
    bool ok_r = true, ok_z = true;
    for (std::int64_t n = 1; n <= N; ++n) {
      ok_r = ok_r && t.at(n, 0, 1) == plane_mean_rootdeg(n);
      ok_z = ok_z && t.at(n, 1, 0) == plane_mean_z2(n);
    }
    rep.add("plane E(R_n) = 4^{n-1}/(n C_n) - 1 exactly, n <= 200", ok_r, "");
    rep.add("plane E(Z_n^(2)) = (2n-1)(2H_{2n}-H_n) - 2n - 4^n/(2n C_n) + 2 "
            "exactly, n <= 200",
            ok_z, "");
  }
  {
    const SeriesValue mu = mu_k(2, 10000);
    const double dev = std::fabs(mu.value - 6.0);
    rep.add("mu_2 = 6 at J = 10^4 within 1e-2",
            dev < 1e-2 && dev <= mu.error,
            fmt("mu = %.6f err_est = %.4f |mu - 6| = %.4f", mu.value, mu.error,
                dev));
  }
  {
    // |E(Z_n^(2)) - 2n log n - (4 log 2 + 2 gamma - 2) n| / sqrt(n) stays
    // bounded (the expansion remainder is of square-root order)
    const double c2 = 4.0 * kLn2 + 2.0 * kEulerGamma - 2.0;
    double max_d = 0.0, mean_first = 0.0, mean_second = 0.0;
    int cnt_first = 0, cnt_second = 0;
    for (std::int64_t n = 100; n <= 2000; n += 20) {
      const double e = plane_mean_z2(n).get_d();
      const double nn = static_cast<double>(n);
      const double d =
          std::fabs(e - 2.0 * nn * std::log(nn) - c2 * nn) / std::sqrt(nn);
      max_d = std::max(max_d, d);
      if (n <= 1050) {
        mean_first += d;
        ++cnt_first;
      } else {
        mean_second += d;
        ++cnt_second;
      }
    }
    mean_first /= cnt_first;
    mean_second /= cnt_second;
    rep.add("plane mean expansion remainder bounded over n in [100, 2000]",
            mean_second <= mean_first * 1.05 && max_d < 10.0,
            fmt("remainder/sqrt(n): mean %.4f (n<=1050) -> %.4f (n>1050), "
                "max %.4f",
                mean_first, mean_second, max_d));
  }
  return rep;
}

CheckReport suite_transfer() {
  CheckReport rep;
  rep.title = "transfer lemmas";
  const std::int64_t N = 100000;
  {
    const TransferResult r = transfer_check(TransferLemma::POneSided, 1.0, 0.0, N);
    rep.add("plane one-sided: a_N / sqrt(N) -> sqrt(pi) within 2%",
            r.rel_gap < 0.02,
            fmt("ratio %.5f (a_N/sqrt(N) = %.5f vs %.5f)", r.ratio,
                r.a_n / std::sqrt((double)N), kSqrtPi));
  }
  {
    const TransferResult r =
        transfer_check(TransferLemma::PTwoSidedI, 1.0, 0.5, N);
    rep.add("plane two-sided (i): a_N / (N log N) -> 1/sqrt(pi) within 5%",
            r.rel_gap < 0.05,
            fmt("ratio %.5f; convergence is O(1/log N), gap %.3f at N=1e5",
                r.ratio, r.rel_gap));
  }
  {
    const TransferResult r =
        transfer_check(TransferLemma::NPTwoSidedII, 1.0, 2.0, N);
    rep.add("non-plane two-sided (ii): a_N / N^2 -> 3 within 2%",
            r.rel_gap < 0.02, fmt("a_N / N^2 = %.5f", r.ratio * 3.0));
  }
  return rep;
}

CheckReport suite_clt(std::uint64_t seed, int workers) {
  CheckReport rep;
  rep.title = "non-plane CLT";
  SimConfig cfg;
  cfg.model = TreeModel::NonPlane;
  cfg.k = 2;
  cfg.sizes = {1000, 10000};
  cfg.replicates = 100000;
  cfg.seed = seed;
  cfg.workers = workers;
  const SimSummary sim = simulate(cfg);
  const LimitConstants c = limit_constants(2, 4000);
  rep.absorb(clt_check(sim, c));
  // variance sanity: sample Var(Z)/n against the series envelope
  const auto& last = sim.per_size.back();
  const double sample_vn = last.z_var / static_cast<double>(last.n);
  rep.add("sample Var(Z)/n within the var_k error envelope",
          std::fabs(sample_vn - c.var.value) <= c.var.error,
          fmt("sample %.4f series %.4f +- %.4f", sample_vn, c.var.value,
              c.var.error));
  // worker-count invariance at reduced scale
  {
    SimConfig a = cfg;
    a.sizes = {500};
    a.replicates = 5000;
    a.workers = 1;
    SimConfig b = a;
    b.workers = 3;
    const std::string ja = json_sim_summary(simulate(a));
    const std::string jb = json_sim_summary(simulate(b));
    rep.add("summary independent of worker count", ja == jb,
            fmt("digest %s vs %s", fnv1a_hex(ja).c_str(), fnv1a_hex(jb).c_str()));
  }
  return rep;
}

CheckReport suite_plane_limit(std::uint64_t seed, int workers) {
  CheckReport rep;
  rep.title = "plane limit moments";
  for (int k : {3, 4}) {
    SimConfig cfg;
    cfg.model = TreeModel::Plane;
    cfg.k = k;
    cfg.sizes = {100, 1000, 10000};
    cfg.replicates = 100000;
    cfg.seed = derive_stream(seed, static_cast<std::uint64_t>(k));
    cfg.workers = workers;
    const SimSummary sim = simulate(cfg);
    const GTable g = g_table(k, 4, 4);
    rep.absorb(plane_limit_check(sim, g), fmt("k=%d: ", k));
  }
  return rep;
}

CheckReport suite_appendix() {
  CheckReport rep;
  rep.title = "g-table checks";
  for (int k : {3, 4, 5}) {
    {
      GTable t(k, 2, 22);
      rep.absorb(g_consistency_check(t, 1e-10), fmt("k=%d: ", k));
      // base row against the Rayleigh(sqrt 2) moments through the other route
      double worst = 0.0;
      for (int s = 0; s <= 20; ++s) {
        const double other = s * kLn2 + log_gamma(1.0 + s / 2.0);
        worst = std::max(worst, std::fabs(std::expm1(t.log_g(0, s) - other)));
      }
      rep.add(fmt("k=%d: g_{0,s} = Rayleigh moments to 1e-12, s <= 20", k),
              worst < 1e-12, fmt("worst rel %.3e", worst));
    }
    {
      GTable t(k, 60, 0);
      const CarlemanReport cr = carleman_diagnostic(t, 60);
      if (k == 4)
        rep.add("k=4: term*r stabilizes in a 20% band over r in [30,60]",
                cr.band_ratio_inv_r < 0.20,
                fmt("band spread %.3f verdict %s", cr.band_ratio_inv_r,
                    cr.verdict.c_str()));
      if (k == 5)
        rep.add("k=5: term*r^{5/4} stabilizes in a 20% band over r in [30,60]",
                cr.band_ratio_pow < 0.20,
                fmt("band spread %.3f verdict %s", cr.band_ratio_pow,
                    cr.verdict.c_str()));
      rep.add(fmt("k=%d: Carleman verdict matches the k <= 4 dichotomy", k),
              (k <= 4) == (cr.verdict == "divergent-like"),
              fmt("verdict %s, fitted decay exponent %.3f (k/4 = %.2f)",
                  cr.verdict.c_str(), cr.fitted_exponent, k / 4.0));
    }
    {
      GTable t(k, 30, 10);
      const AppendixBound ab = appendix_bound_check(t);
      rep.absorb(ab.report, fmt("k=%d: ", k));
    }
  }
  rep.absorb(gamma_ratio_grid());
  rep.absorb(binomial_domination_grid());
  return rep;
}

}  // namespace

CheckReport run_suite(const std::string& suite, std::int64_t n_max,
                      std::uint64_t seed, int workers) {
  if (suite == "oracle") return suite_oracle(n_max);
  if (suite == "closed-forms") return suite_closed_forms();
  if (suite == "transfer") return suite_transfer();
  if (suite == "clt") return suite_clt(seed, workers);
  if (suite == "plane-limit") return suite_plane_limit(seed, workers);
  if (suite == "appendix") return suite_appendix();
  throw contract_error("unknown verify suite: " + suite);
}

}  // namespace zagreb
