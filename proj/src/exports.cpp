#include "exports.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace zagreb {

using nlohmann::json;
using nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_split_law(const SplitLaw& law) {
  std::ostringstream os;
  os << "j,numerator,denominator\n";
  for (std::int64_t j = 1; j < law.n; ++j)
    os << j << ',' << rat_num_str(law.pi(j)) << ',' << rat_den_str(law.pi(j))
       << '\n';
  return os.str();
}

std::string csv_joint_pmf(const JointPMF& pmf) {
  std::ostringstream os;
  os << "z,d,numerator,denominator\n";
  for (const auto& [key, p] : pmf.p)
    os << key.first << ',' << key.second << ',' << rat_num_str(p) << ','
       << rat_den_str(p) << '\n';
  return os.str();
}

std::string csv_moment_table(const MomentTable& t) {
  std::ostringstream os;
  if (t.exact) {
    os << "n,i,l,numerator,denominator\n";
    for (std::int64_t n = 1; n <= t.size(); ++n)
      for (const auto& [i, l] : t.ex->entries()) {
        const Rat& q = t.ex->at(n, i, l);
        os << n << ',' << i << ',' << l << ',' << rat_num_str(q) << ','
           << rat_den_str(q) << '\n';
      }
  } else {
    os << "n,i,l,value\n";
    for (std::int64_t n = 1; n <= t.size(); ++n)
      for (const auto& [i, l] : t.fl->entries())
        os << n << ',' << i << ',' << l << ','
           << format_double(static_cast<double>(t.fl->at(n, i, l))) << '\n';
  }
  return os.str();
}

std::string csv_gtable(const GTable& t) {
  std::ostringstream os;
  os << "k,r,s,log_g,g\n";
  for (int r = 0; r <= t.r_max(); ++r)
    for (int s = 0; s <= t.s_max(); ++s) {
      os << t.k() << ',' << r << ',' << s << ','
         << format_double(t.log_g(r, s)) << ',';
      if (!t.g_overflows(r, s)) os << format_double(t.g(r, s));
      os << '\n';
    }
  return os.str();
}

std::string json_constants(const LimitConstants& c) {
  ordered_json j;
  j["k"] = c.k;
  j["mu"] = c.mu.value;
  j["mu_err"] = c.mu.error;
  j["var"] = c.var.value;
  j["var_err"] = c.var.error;
  j["J"] = c.mu.J;
  j["sigma"] = c.sigma();
  j["min_toll"] = c.min_toll;
  j["var_at_J"] = c.var_at_J;
  j["var_at_J_err"] = c.var_at_J_err;
  return j.dump(2) + "\n";
}

namespace {
ordered_json size_summary_json(const SimSummary& sim, const SizeSummary& s) {
  ordered_json j;
  j["n"] = s.n;
  j["replicates"] = s.replicates;
  j["z_mean"] = s.z_mean;
  j["z_var"] = s.z_var;
  j["z_skew"] = s.z_skew;
  j["z_kurt"] = s.z_kurt;
  j["z_se_mean"] = std::sqrt(s.z_var / static_cast<double>(s.replicates));
  j["r_mean"] = s.r_mean;
  j["r_var"] = s.r_var;
  j["zn_moment"] = s.zn_moment;
  j["zn_se"] = s.zn_se;
  j["rn_moment"] = s.rn_moment;
  j["rn_se"] = s.rn_se;
  if (!s.hist.empty()) {
    j["hist_lo"] = s.hist_lo;
    j["hist_hi"] = s.hist_hi;
    j["hist"] = s.hist;
  }
  (void)sim;
  return j;
}
}  // namespace

std::string json_sim_summary(const SimSummary& s) {
  ordered_json j;
  j["model"] = model_name(s.config.model);
  j["k"] = s.config.k;
  j["seed"] = s.config.seed;
  j["replicates"] = s.config.replicates;
  j["z_order"] = s.config.z_order;
  j["r_order"] = s.config.r_order;
  j["sizes"] = json::array();
  for (const auto& ss : s.per_size) j["sizes"].push_back(size_summary_json(s, ss));
  return j.dump(2) + "\n";
}

std::string csv_sim_summary(const SimSummary& s) {
  std::ostringstream os;
  os << "n,stat,order,value,stderr\n";
  auto row = [&os](std::int64_t n, const char* stat, int order, double v,
                   double se) {
    os << n << ',' << stat << ',' << order << ',' << format_double(v) << ','
       << format_double(se) << '\n';
  };
  for (const auto& ss : s.per_size) {
    const double sem = std::sqrt(ss.z_var / static_cast<double>(ss.replicates));
    row(ss.n, "z_mean", 1, ss.z_mean, sem);
    row(ss.n, "z_var", 2, ss.z_var, 0.0);
    row(ss.n, "z_skew", 3, ss.z_skew,
        std::sqrt(6.0 / static_cast<double>(ss.replicates)));
    row(ss.n, "z_kurt", 4, ss.z_kurt,
        std::sqrt(24.0 / static_cast<double>(ss.replicates)));
    row(ss.n, "r_mean", 1, ss.r_mean,
        std::sqrt(ss.r_var / static_cast<double>(ss.replicates)));
    row(ss.n, "r_var", 2, ss.r_var, 0.0);
    for (std::size_t i = 0; i < ss.zn_moment.size(); ++i)
      row(ss.n, "zn_moment", static_cast<int>(i) + 1, ss.zn_moment[i],
          ss.zn_se[i]);
    for (std::size_t i = 0; i < ss.rn_moment.size(); ++i)
      row(ss.n, "rn_moment", static_cast<int>(i) + 1, ss.rn_moment[i],
          ss.rn_se[i]);
  }
  return os.str();
}

std::string csv_histogram(const SizeSummary& s) {
  std::ostringstream os;
  os << "bin_lo,bin_hi,count\n";
  const double width =
      s.hist.empty() ? 0.0
                     : (s.hist_hi - s.hist_lo) / static_cast<double>(s.hist.size());
  for (std::size_t b = 0; b < s.hist.size(); ++b)
    os << format_double(s.hist_lo + width * static_cast<double>(b)) << ','
       << format_double(s.hist_lo + width * static_cast<double>(b + 1)) << ','
       << s.hist[b] << '\n';
  return os.str();
}

std::string json_report(const CheckReport& r) {
  ordered_json j;
  j["title"] = r.title;
  j["passed"] = r.all_passed();
  j["checks"] = json::array();
  ordered_json failures = json::array();
  for (const auto& c : r.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    j["checks"].push_back(cj);
    if (!c.pass) failures.push_back(c.name);
  }
  j["failures"] = failures;
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << content;
  if (!os) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open: " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::string fnv1a_hex(const std::string& content) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : content) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string file_digest(const std::string& path) {
  return fnv1a_hex(read_file(path));
}

}  // namespace zagreb
