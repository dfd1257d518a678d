// zagreb-lab: command-line driver over the zagreblab C API.
//
// Every subcommand writes its result files into --outdir together with a
// manifest.json recording the full parameter set, the master seed, and an
// FNV-1a digest of every emitted file. Exit codes: 0 success, 1 validation
// failure (including failed verify checks), 2 resource/environment error,
// 64 usage error.
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zagreblab.h"

namespace {

using nlohmann::ordered_json;

struct Manifest {
  std::string command;
  ordered_json params = ordered_json::object();
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::vector<std::string> outputs;
};

int status_exit(zg_status st) {
  switch (st) {
    case ZG_OK:
      return 0;
    case ZG_ERR_INVALID:
      return 1;
    default:
      return 2;
  }
}

[[noreturn]] void die(zg_status st) {
  std::fprintf(stderr, "error: %s\n", zg_last_error());
  std::exit(status_exit(st));
}

void require_ok(zg_status st) {
  if (st != ZG_OK) die(st);
}

std::string own_string(char* s) {
  std::string out = s ? s : "";
  zg_string_free(s);
  return out;
}

std::string join_path(const std::string& dir, const std::string& name) {
  if (dir.empty() || dir == ".") return name;
  return dir.back() == '/' ? dir + name : dir + "/" + name;
}

void write_manifest(const std::string& outdir, const Manifest& m) {
  ordered_json j;
  j["artifact"] = "zagreb-lab";
  j["version"] = zg_version();
  j["command"] = m.command;
  j["params"] = m.params;
  if (m.has_seed) j["seed"] = m.seed;
  char ts[64];
  std::time_t now = std::time(nullptr);
  std::strftime(ts, sizeof(ts), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  j["timestamp"] = ts;
  j["outputs"] = ordered_json::array();
  for (const auto& path : m.outputs) {
    char* hex = nullptr;
    require_ok(zg_file_digest(path.c_str(), &hex));
    ordered_json e;
    e["path"] = path;
    e["fnv1a64"] = own_string(hex);
    j["outputs"].push_back(e);
  }
  const std::string path = join_path(outdir, "manifest.json");
  FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) {
    std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
    std::exit(2);
  }
  const std::string body = j.dump(2) + "\n";
  std::fwrite(body.data(), 1, body.size(), f);
  std::fclose(f);
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

int env_workers(int flag_workers) {
  if (const char* env = std::getenv("ZAGREB_LAB_THREADS"))
    return std::atoi(env);
  return flag_workers;
}

zg_model parse_model(const std::string& s) {
  if (s == "nonplane" || s == "non-plane") return ZG_NONPLANE;
  if (s == "plane") return ZG_PLANE;
  std::fprintf(stderr, "error: --model must be nonplane or plane\n");
  std::exit(64);
}

int print_report(zg_report* rep) {
  const std::int64_t n = zg_report_size(rep);
  for (std::int64_t i = 0; i < n; ++i)
    std::printf("%s %s: %s\n", zg_report_passed(rep, i) ? "PASS" : "FAIL",
                zg_report_name(rep, i), zg_report_detail(rep, i));
  return zg_report_all_passed(rep) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random recursive trees, generalized Zagreb indices, exact "
               "moment engines and limit-law verification"};
  app.require_subcommand(1);
  std::string outdir = ".";
  app.add_option("--outdir", outdir, "directory for result files")
      ->capture_default_str();

  // generate
  auto* gen = app.add_subcommand("generate", "sample recursive trees");
  std::string g_model = "nonplane";
  std::int64_t g_n = 10;
  std::uint64_t g_seed = 0;
  bool g_has_seed = false;
  std::int64_t g_count = 1;
  bool g_dump = false;
  gen->add_option("--model", g_model, "nonplane|plane");
  gen->add_option("--n", g_n, "tree size")->required();
  gen->add_option("--seed", g_seed)->each([&](const std::string&) {
    g_has_seed = true;
  });
  gen->add_option("--count", g_count, "number of trees");
  gen->add_flag("--dump", g_dump, "write tree_<i>.tsv dumps");

  // index
  auto* idx = app.add_subcommand("index", "Zagreb index of a dumped tree");
  int i_k = 2;
  std::string i_in;
  std::string i_model = "nonplane";
  idx->add_option("--k", i_k, "index order (>= 2)");
  idx->add_option("--in", i_in, "tree dump path")->required();
  idx->add_option("--model", i_model, "nonplane|plane");

  // split-law
  auto* spl = app.add_subcommand("split-law", "exact split-law weights");
  std::string s_model = "nonplane";
  std::int64_t s_n = 10;
  spl->add_option("--model", s_model);
  spl->add_option("--n", s_n)->required();

  // exact
  auto* ex = app.add_subcommand("exact", "mixed-moment table");
  std::string e_model = "nonplane";
  int e_k = 2;
  std::int64_t e_nmax = 100;
  int e_w = 8;
  std::string e_kind = "exact";
  ex->add_option("--model", e_model);
  ex->add_option("--k", e_k);
  ex->add_option("--n-max", e_nmax);
  ex->add_option("--weight-cap", e_w);
  ex->add_option("--kind", e_kind, "exact|float");

  // pmf
  auto* pm = app.add_subcommand("pmf", "exact joint law of (Z, R)");
  std::string p_model = "nonplane";
  int p_k = 2;
  std::int64_t p_n = 8;
  pm->add_option("--model", p_model);
  pm->add_option("--k", p_k);
  pm->add_option("--n", p_n)->required();

  // enumerate
  auto* en = app.add_subcommand("enumerate", "exhaustive history enumeration");
  std::string n_model = "nonplane";
  int n_k = 2;
  std::int64_t n_n = 5;
  en->add_option("--model", n_model);
  en->add_option("--k", n_k);
  en->add_option("--n", n_n)->required();

  // constants
  auto* co = app.add_subcommand("constants", "mu_k and var_k series");
  int c_k = 2;
  std::int64_t c_J = 10000;
  co->add_option("--k", c_k);
  co->add_option("--J", c_J, "series truncation");

  // gtable
  auto* gt = app.add_subcommand("gtable", "plane limit moment table");
  int t_k = 3, t_rmax = 20, t_smax = 10;
  gt->add_option("--k", t_k);
  gt->add_option("--r-max", t_rmax);
  gt->add_option("--s-max", t_smax);

  // simulate
  auto* si = app.add_subcommand("simulate", "seeded Monte Carlo");
  std::string m_model = "nonplane";
  int m_k = 2;
  std::vector<std::int64_t> m_sizes;
  std::int64_t m_reps = 10000;
  std::uint64_t m_seed = 0;
  bool m_has_seed = false;
  int m_workers = 0;
  std::string m_hist;
  si->add_option("--model", m_model);
  si->add_option("--k", m_k);
  si->add_option("--sizes", m_sizes, "tree sizes")->required()->delimiter(',');
  si->add_option("--replicates", m_reps);
  si->add_option("--seed", m_seed)->each([&](const std::string&) {
    m_has_seed = true;
  });
  si->add_option("--workers", m_workers);
  si->add_option("--hist", m_hist, "lo:hi:bins histogram of Z/n^{k/2}");

  // verify
  auto* ve = app.add_subcommand("verify", "acceptance suites");
  std::string v_suite;
  std::int64_t v_nmax = 7;
  std::uint64_t v_seed = 0;
  int v_workers = 0;
  ve->add_option("--suite", v_suite,
                 "oracle|transfer|clt|plane-limit|closed-forms|appendix")
      ->required();
  ve->add_option("--n-max", v_nmax, "oracle suite size cap");
  ve->add_option("--seed", v_seed, "mandatory for reproducibility")->required();
  ve->add_option("--workers", v_workers);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  Manifest man;

  if (gen->parsed()) {
    man.command = "generate";
    if (!g_has_seed) g_seed = entropy_seed();
    man.seed = g_seed;
    man.has_seed = true;
    man.params = {{"model", g_model}, {"n", g_n}, {"count", g_count},
                  {"dump", g_dump}};
    const zg_model model = parse_model(g_model);
    for (std::int64_t i = 0; i < g_count; ++i) {
      zg_tree* t = nullptr;
      // per-tree streams derive from the master seed and the tree index
      const std::uint64_t seed_i = g_seed + static_cast<std::uint64_t>(i);
      require_ok(zg_tree_generate(model, g_n, seed_i, &t));
      std::int64_t lms = 0;
      if (g_n >= 2) require_ok(zg_tree_leftmost_subtree_size(t, &lms));
      std::printf("tree %" PRId64 ": n=%" PRId64 " seed=%" PRIu64
                  " root_degree=%" PRId64 " leftmost_subtree=%" PRId64 "\n",
                  i, g_n, seed_i, zg_tree_root_degree(t), lms);
      if (g_dump) {
        char name[64];
        std::snprintf(name, sizeof(name), "tree_%04" PRId64 ".tsv", i);
        const std::string path = join_path(outdir, name);
        require_ok(zg_tree_write_dump(t, path.c_str()));
        man.outputs.push_back(path);
      }
      zg_tree_free(t);
    }
    write_manifest(outdir, man);
    return 0;
  }

  if (idx->parsed()) {
    man.command = "index";
    man.params = {{"k", i_k}, {"in", i_in}, {"model", i_model}};
    zg_tree* t = nullptr;
    require_ok(zg_tree_read_dump(i_in.c_str(), parse_model(i_model), &t));
    char* v = nullptr;
    char* e = nullptr;
    require_ok(zg_tree_zagreb(t, i_k, 0, &v));
    require_ok(zg_tree_zagreb(t, i_k, 1, &e));
    const std::string vs = own_string(v), es = own_string(e);
    std::printf("vertex_form %s\nedge_form %s\n", vs.c_str(), es.c_str());
    zg_tree_free(t);
    write_manifest(outdir, man);
    return vs == es ? 0 : 1;
  }

  if (spl->parsed()) {
    man.command = "split-law";
    man.params = {{"model", s_model}, {"n", s_n}};
    zg_split_law* law = nullptr;
    require_ok(zg_split_law_compute(parse_model(s_model), s_n, &law));
    const std::string path = join_path(outdir, "split_law.csv");
    require_ok(zg_split_law_write_csv(law, path.c_str()));
    zg_split_law_free(law);
    man.outputs.push_back(path);
    std::printf("wrote %s\n", path.c_str());
    write_manifest(outdir, man);
    return 0;
  }

  if (ex->parsed()) {
    man.command = "exact";
    man.params = {{"model", e_model}, {"k", e_k}, {"n_max", e_nmax},
                  {"weight_cap", e_w}, {"kind", e_kind}};
    if (e_kind != "exact" && e_kind != "float") {
      std::fprintf(stderr, "error: --kind must be exact or float\n");
      return 64;
    }
    zg_moment_table* t = nullptr;
    require_ok(zg_moment_table_compute(parse_model(e_model), e_k, e_nmax, e_w,
                                       e_kind == "exact" ? 0 : 1, &t));
    const std::string path = join_path(outdir, "moment_table.csv");
    require_ok(zg_moment_table_write_csv(t, path.c_str()));
    zg_moment_table_free(t);
    man.outputs.push_back(path);
    std::printf("wrote %s\n", path.c_str());
    write_manifest(outdir, man);
    return 0;
  }

  if (pm->parsed()) {
    man.command = "pmf";
    man.params = {{"model", p_model}, {"k", p_k}, {"n", p_n}};
    zg_joint_pmf* pmf = nullptr;
    require_ok(zg_joint_pmf_compute(parse_model(p_model), p_k, p_n, &pmf));
    const std::string path = join_path(outdir, "pmf.csv");
    require_ok(zg_joint_pmf_write_csv(pmf, path.c_str()));
    std::printf("support size %" PRId64 ", wrote %s\n",
                zg_joint_pmf_entries(pmf), path.c_str());
    zg_joint_pmf_free(pmf);
    man.outputs.push_back(path);
    write_manifest(outdir, man);
    return 0;
  }

  if (en->parsed()) {
    man.command = "enumerate";
    man.params = {{"model", n_model}, {"k", n_k}, {"n", n_n}};
    zg_enumeration* e = nullptr;
    require_ok(zg_enumeration_compute(parse_model(n_model), n_k, n_n, &e));
    char* h = nullptr;
    require_ok(zg_enumeration_histories(e, &h));
    std::printf("%s histories\n", own_string(h).c_str());
    zg_joint_pmf* pmf = nullptr;
    require_ok(zg_enumeration_pmf(e, &pmf));
    const std::string ppath = join_path(outdir, "enum_pmf.csv");
    require_ok(zg_joint_pmf_write_csv(pmf, ppath.c_str()));
    man.outputs.push_back(ppath);
    // exact moments with grade k*i + l <= 8
    const std::string mpath = join_path(outdir, "enum_moments.csv");
    {
      std::string body = "i,l,numerator,denominator\n";
      for (int i = 0; n_k * i <= 8; ++i)
        for (int l = 0; n_k * i + l <= 8; ++l) {
          char *num = nullptr, *den = nullptr;
          require_ok(zg_joint_pmf_moment(pmf, i, l, &num, &den));
          body += std::to_string(i) + "," + std::to_string(l) + "," +
                  own_string(num) + "," + own_string(den) + "\n";
        }
      FILE* f = std::fopen(mpath.c_str(), "wb");
      if (!f) die(ZG_ERR_IO);
      std::fwrite(body.data(), 1, body.size(), f);
      std::fclose(f);
    }
    man.outputs.push_back(mpath);
    std::printf("wrote %s and %s\n", ppath.c_str(), mpath.c_str());
    zg_joint_pmf_free(pmf);
    zg_enumeration_free(e);
    write_manifest(outdir, man);
    return 0;
  }

  if (co->parsed()) {
    man.command = "constants";
    man.params = {{"k", c_k}, {"J", c_J}};
    zg_constants* c = nullptr;
    require_ok(zg_constants_compute(c_k, c_J, &c));
    const std::string path = join_path(outdir, "constants.json");
    require_ok(zg_constants_write_json(c, path.c_str()));
    std::printf("mu_%d = %.6f +- %.2e   var_%d = %.6f +- %.2e   (J = %" PRId64
                ")\n",
                c_k, zg_constants_mu(c), zg_constants_mu_err(c), c_k,
                zg_constants_var(c), zg_constants_var_err(c), c_J);
    zg_constants_free(c);
    man.outputs.push_back(path);
    write_manifest(outdir, man);
    return 0;
  }

  if (gt->parsed()) {
    man.command = "gtable";
    man.params = {{"k", t_k}, {"r_max", t_rmax}, {"s_max", t_smax}};
    zg_gtable* g = nullptr;
    require_ok(zg_gtable_compute(t_k, t_rmax, t_smax, &g));
    const std::string path = join_path(outdir, "gtable.csv");
    require_ok(zg_gtable_write_csv(g, path.c_str()));
    man.outputs.push_back(path);
    int rc = 0;
    zg_report* rep = nullptr;
    require_ok(zg_gtable_consistency_check(g, &rep));
    rc |= print_report(rep);
    const std::string cpath = join_path(outdir, "gtable_consistency.json");
    require_ok(zg_report_write_json(rep, cpath.c_str()));
    man.outputs.push_back(cpath);
    zg_report_free(rep);
    if (t_rmax >= 4) {
      require_ok(zg_gtable_carleman(g, t_rmax, &rep));
      rc |= print_report(rep);
      const std::string kpath = join_path(outdir, "gtable_carleman.json");
      require_ok(zg_report_write_json(rep, kpath.c_str()));
      man.outputs.push_back(kpath);
      zg_report_free(rep);
    }
    double A = 0;
    require_ok(zg_gtable_appendix_bound(g, 16.0, 0.05, &A, &rep));
    rc |= print_report(rep);
    const std::string apath = join_path(outdir, "gtable_appendix.json");
    require_ok(zg_report_write_json(rep, apath.c_str()));
    man.outputs.push_back(apath);
    zg_report_free(rep);
    zg_gtable_free(g);
    std::printf("wrote %s\n", path.c_str());
    write_manifest(outdir, man);
    return rc;
  }

  if (si->parsed()) {
    man.command = "simulate";
    if (!m_has_seed) m_seed = entropy_seed();
    man.seed = m_seed;
    man.has_seed = true;
    man.params = {{"model", m_model}, {"k", m_k}, {"replicates", m_reps},
                  {"workers", m_workers}, {"sizes", m_sizes}};
    zg_sim_spec spec{};
    spec.model = parse_model(m_model);
    spec.k = m_k;
    spec.sizes = m_sizes.data();
    spec.n_sizes = static_cast<int>(m_sizes.size());
    spec.replicates = m_reps;
    spec.seed = m_seed;
    spec.workers = env_workers(m_workers);
    if (!m_hist.empty()) {
      double lo, hi;
      int bins;
      if (std::sscanf(m_hist.c_str(), "%lf:%lf:%d", &lo, &hi, &bins) != 3) {
        std::fprintf(stderr, "error: --hist expects lo:hi:bins\n");
        return 64;
      }
      spec.hist_lo = lo;
      spec.hist_hi = hi;
      spec.hist_bins = bins;
      man.params["hist"] = m_hist;
    }
    zg_sim_summary* s = nullptr;
    require_ok(zg_simulate(&spec, &s));
    const std::string jpath = join_path(outdir, "summary.json");
    const std::string cpath = join_path(outdir, "summary.csv");
    require_ok(zg_sim_summary_write_json(s, jpath.c_str()));
    require_ok(zg_sim_summary_write_csv(s, cpath.c_str()));
    man.outputs.push_back(jpath);
    man.outputs.push_back(cpath);
    for (int i = 0; i < zg_sim_summary_sizes(s); ++i) {
      double zm, zse;
      require_ok(zg_sim_summary_stat(s, i, "z_mean", 1, &zm, &zse));
      std::printf("n=%" PRId64 ": E(Z) = %.6g +- %.3g\n", zg_sim_summary_n(s, i),
                  zm, zse);
      if (spec.hist_bins > 0) {
        char name[64];
        std::snprintf(name, sizeof(name), "hist_%" PRId64 ".csv",
                      zg_sim_summary_n(s, i));
        const std::string hpath = join_path(outdir, name);
        require_ok(zg_sim_summary_write_hist_csv(s, i, hpath.c_str()));
        man.outputs.push_back(hpath);
      }
    }
    zg_sim_summary_free(s);
    write_manifest(outdir, man);
    return 0;
  }

  if (ve->parsed()) {
    man.command = "verify";
    man.seed = v_seed;
    man.has_seed = true;
    man.params = {{"suite", v_suite}, {"n_max", v_nmax},
                  {"workers", v_workers}};
    zg_report* rep = nullptr;
    require_ok(
        zg_verify(v_suite.c_str(), v_nmax, v_seed, env_workers(v_workers), &rep));
    const int rc = print_report(rep);
    char name[64];
    std::snprintf(name, sizeof(name), "verify_%s.json", v_suite.c_str());
    const std::string path = join_path(outdir, name);
    require_ok(zg_report_write_json(rep, path.c_str()));
    man.outputs.push_back(path);
    zg_report_free(rep);
    write_manifest(outdir, man);
    return rc;
  }

  return 64;
}
