#pragma once

#include <string>

#include "constants.hpp"
#include "gtable.hpp"
#include "joint_pmf.hpp"
#include "moment_table.hpp"
#include "montecarlo.hpp"
#include "report.hpp"
#include "split_law.hpp"

namespace zagreb {

// CSV/JSON emission. Exact values print as integer numerator/denominator
// pairs, floats through shortest-round-trip %.17g, so exact-mode files are
// byte-identical across runs and platforms.

std::string csv_split_law(const SplitLaw& law);           // j,numerator,denominator
std::string csv_joint_pmf(const JointPMF& pmf);           // z,d,numerator,denominator
std::string csv_moment_table(const MomentTable& t);       // n,i,l,... per kind
std::string csv_gtable(const GTable& t);                  // k,r,s,log_g,g
std::string json_constants(const LimitConstants& c);
std::string json_sim_summary(const SimSummary& s);
std::string csv_sim_summary(const SimSummary& s);         // n,stat,order,value,stderr
std::string csv_histogram(const SizeSummary& s);          // bin_lo,bin_hi,count
std::string json_report(const CheckReport& r);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// FNV-1a 64-bit content digest, hex; used by the run manifests
std::string fnv1a_hex(const std::string& content);
std::string file_digest(const std::string& path);

std::string format_double(double v);  // %.17g

}  // namespace zagreb
