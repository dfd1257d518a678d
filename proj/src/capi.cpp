// extern-C surface over the C++ core. Handles are heap-allocated core objects
// behind opaque struct tags; every entry point catches and maps exceptions to
// status codes, with the message parked in a thread-local slot.
#include "zagreblab.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "basics.hpp"
#include "closed_forms.hpp"
#include "constants.hpp"
#include "enumeration.hpp"
#include "exports.hpp"
#include "gtable.hpp"
#include "joint_pmf.hpp"
#include "moment_table.hpp"
#include "montecarlo.hpp"
#include "specialfun.hpp"
#include "split_law.hpp"
#include "transfer.hpp"
#include "trees.hpp"
#include "verify.hpp"
#include "zagreb_index.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
zg_status guarded(F&& f) {
  try {
    f();
    return ZG_OK;
  } catch (const zagreb::contract_error& e) {
    g_last_error = e.what();
    return ZG_ERR_INVALID;
  } catch (const zagreb::resource_error& e) {
    g_last_error = e.what();
    return ZG_ERR_RESOURCE;
  } catch (const std::ios_base::failure& e) {
    g_last_error = e.what();
    return ZG_ERR_IO;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    // file writers throw runtime_error with the path in the message
    return std::string(e.what()).find("cannot open") != std::string::npos ||
                   std::string(e.what()).find("write failed") !=
                       std::string::npos
               ? ZG_ERR_IO
               : ZG_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return ZG_ERR_INTERNAL;
  }
}

zg_status set_rat(const zagreb::Rat& q, char** num, char** den) {
  if (!num || !den) {
    g_last_error = "null output pointer";
    return ZG_ERR_INVALID;
  }
  *num = dup_string(zagreb::rat_num_str(q));
  *den = dup_string(zagreb::rat_den_str(q));
  return ZG_OK;
}

zagreb::TreeModel to_model(zg_model m) {
  return m == ZG_NONPLANE ? zagreb::TreeModel::NonPlane
                          : zagreb::TreeModel::Plane;
}

}  // namespace

struct zg_tree {
  zagreb::RecursiveTree t;
};
struct zg_split_law {
  zagreb::SplitLaw law;
};
struct zg_joint_pmf {
  zagreb::JointPMF pmf;
  std::vector<std::pair<std::pair<std::int64_t, std::int32_t>, zagreb::Rat>>
      flat;
};
struct zg_moment_table {
  zagreb::MomentTable t;
};
struct zg_enumeration {
  zagreb::EnumerationResult e;
};
struct zg_gtable {
  zagreb::GTable t;
};
struct zg_constants {
  zagreb::LimitConstants c;
};
struct zg_report {
  zagreb::CheckReport r;
};
struct zg_sim_summary {
  zagreb::SimSummary s;
};

extern "C" {

const char* zg_last_error(void) { return g_last_error.c_str(); }
void zg_string_free(char* s) { std::free(s); }
const char* zg_version(void) { return ZAGREBLAB_VERSION; }

/* ---- trees ---- */

zg_status zg_tree_generate(zg_model model, int64_t n, uint64_t seed,
                           zg_tree** out) {
  return guarded([&] {
    if (!out) throw zagreb::contract_error("null output pointer");
    *out = new zg_tree{zagreb::generate(to_model(model), n, seed)};
  });
}

void zg_tree_free(zg_tree* t) { delete t; }

int64_t zg_tree_size(const zg_tree* t) { return t ? t->t.n : 0; }

int64_t zg_tree_parent(const zg_tree* t, int64_t v) {
  if (!t || v < 2 || v > t->t.n) return 0;
  return t->t.parent[static_cast<std::size_t>(v)];
}

int64_t zg_tree_degree(const zg_tree* t, int64_t v) {
  if (!t || v < 1 || v > t->t.n) return -1;
  return t->t.degree(v);
}

int64_t zg_tree_root_degree(const zg_tree* t) {
  return t ? t->t.root_degree() : -1;
}

zg_status zg_tree_leftmost_subtree_size(const zg_tree* t, int64_t* out) {
  return guarded([&] {
    if (!t || !out) throw zagreb::contract_error("null pointer");
    *out = zagreb::leftmost_subtree_size(t->t);
  });
}

zg_status zg_tree_zagreb(const zg_tree* t, int k, int form, char** out) {
  return guarded([&] {
    if (!t || !out) throw zagreb::contract_error("null pointer");
    const zagreb::Int z = form == 0 ? zagreb::zagreb_index(t->t, k)
                                    : zagreb::zagreb_index_edge_form(t->t, k);
    *out = dup_string(z.get_str());
  });
}

zg_status zg_tree_write_dump(const zg_tree* t, const char* path) {
  return guarded([&] {
    if (!t || !path) throw zagreb::contract_error("null pointer");
    std::ostringstream os;
    zagreb::write_dump(t->t, os);
    zagreb::write_file(path, os.str());
  });
}

zg_status zg_tree_read_dump(const char* path, zg_model model, zg_tree** out) {
  return guarded([&] {
    if (!path || !out) throw zagreb::contract_error("null pointer");
    std::istringstream is(zagreb::read_file(path));
    *out = new zg_tree{zagreb::read_dump(is, to_model(model))};
  });
}

zg_status zg_count_trees(zg_model model, int64_t n, char** out) {
  return guarded([&] {
    if (!out) throw zagreb::contract_error("null pointer");
    *out = dup_string(zagreb::count_trees(to_model(model), n).get_str());
  });
}

/* ---- split law ---- */

zg_status zg_split_law_compute(zg_model model, int64_t n, zg_split_law** out) {
  return guarded([&] {
    if (!out) throw zagreb::contract_error("null pointer");
    *out = new zg_split_law{zagreb::split_law(to_model(model), n)};
  });
}

void zg_split_law_free(zg_split_law* s) { delete s; }

int64_t zg_split_law_size(const zg_split_law* s) { return s ? s->law.n : 0; }

zg_status zg_split_law_weight(const zg_split_law* s, int64_t j, char** num,
                              char** den) {
  return guarded([&] {
    if (!s) throw zagreb::contract_error("null pointer");
    if (j < 1 || j >= s->law.n)
      throw zagreb::contract_error("split weight index out of range");
    set_rat(s->law.pi(j), num, den);
  });
}

zg_status zg_split_law_write_csv(const zg_split_law* s, const char* path) {
  return guarded([&] {
    if (!s || !path) throw zagreb::contract_error("null pointer");
    zagreb::write_file(path, zagreb::csv_split_law(s->law));
  });
}

/* ---- joint pmf ---- */

zg_status zg_joint_pmf_compute(zg_model model, int k, int64_t n,
                               zg_joint_pmf** out) {
  return guarded([&] {
    if (!out) throw zagreb::contract_error("null pointer");
    auto* h = new zg_joint_pmf{zagreb::joint_pmf(to_model(model), k, n), {}};
    h->flat.assign(h->pmf.p.begin(), h->pmf.p.end());
    *out = h;
  });
}

void zg_joint_pmf_free(zg_joint_pmf* p) { delete p; }

int64_t zg_joint_pmf_entries(const zg_joint_pmf* p) {
  return p ? static_cast<int64_t>(p->flat.size()) : 0;
}

zg_status zg_joint_pmf_entry(const zg_joint_pmf* p, int64_t index, int64_t* z,
                             int64_t* d, char** num, char** den) {
  return guarded([&] {
    if (!p || !z || !d) throw zagreb::contract_error("null pointer");
    if (index < 0 || index >= static_cast<int64_t>(p->flat.size()))
      throw zagreb::contract_error("pmf entry index out of range");
    const auto& e = p->flat[static_cast<std::size_t>(index)];
    *z = e.first.first;
    *d = e.first.second;
    set_rat(e.second, num, den);
  });
}

zg_status zg_joint_pmf_moment(const zg_joint_pmf* p, int i, int l, char** num,
                              char** den) {
  return guarded([&] {
    if (!p) throw zagreb::contract_error("null pointer");
    set_rat(p->pmf.moment(i, l), num, den);
  });
}

zg_status zg_joint_pmf_write_csv(const zg_joint_pmf* p, const char* path) {
  return guarded([&] {
    if (!p || !path) throw zagreb::contract_error("null pointer");
    zagreb::write_file(path, zagreb::csv_joint_pmf(p->pmf));
  });
}

/* ---- moment table ---- */

zg_status zg_moment_table_compute(zg_model model, int k, int64_t N, int W,
                                  int kind, zg_moment_table** out) {
  return guarded([&] {
    if (!out) throw zagreb::contract_error("null pointer");
    *out = new zg_moment_table{
        zagreb::moment_table(to_model(model), k, N, W, kind == 0)};
  });
}

void zg_moment_table_free(zg_moment_table* m) { delete m; }

zg_status zg_moment_table_get(const zg_moment_table* m, int64_t n, int i,
                              int l, char** num, char** den) {
  return guarded([&] {
    if (!m) throw zagreb::contract_error("null pointer");
    if (!m->t.exact)
      throw zagreb::contract_error("rational access requires the exact kind");
    set_rat(m->t.ex->at(n, i, l), num, den);
  });
}

zg_status zg_moment_table_get_d(const zg_moment_table* m, int64_t n, int i,
                                int l, double* out) {
  return guarded([&] {
    if (!m || !out) throw zagreb::contract_error("null pointer");
    *out = m->t.at_d(n, i, l);
  });
}

zg_status zg_moment_table_central(const zg_moment_table* m, int64_t n, int r,
                                  char** num, char** den) {
  return guarded([&] {
    if (!m) throw zagreb::contract_error("null pointer");
    if (!m->t.exact)
      throw zagreb::contract_error("rational access requires the exact kind");
    set_rat(m->t.ex->central(n, r), num, den);
  });
}

zg_status zg_moment_table_write_csv(const zg_moment_table* m,
                                    const char* path) {
  return guarded([&] {
    if (!m || !path) throw zagreb::contract_error("null pointer");
    zagreb::write_file(path, zagreb::csv_moment_table(m->t));
  });
}

/* ---- enumeration ---- */

zg_status zg_enumeration_compute(zg_model model, int k, int64_t n,
                                 zg_enumeration** out) {
  return guarded([&] {
    if (!out) throw zagreb::contract_error("null pointer");
    *out = new zg_enumeration{zagreb::enumerate_all(to_model(model), k, n)};
  });
}

void zg_enumeration_free(zg_enumeration* e) { delete e; }

zg_status zg_enumeration_histories(const zg_enumeration* e, char** out) {
  return guarded([&] {
    if (!e || !out) throw zagreb::contract_error("null pointer");
    *out = dup_string(e->e.total_weight.get_str());
  });
}

zg_status zg_enumeration_pmf(const zg_enumeration* e, zg_joint_pmf** out) {
  return guarded([&] {
    if (!e || !out) throw zagreb::contract_error("null pointer");
    auto* h = new zg_joint_pmf{e->e.to_pmf(), {}};
    h->flat.assign(h->pmf.p.begin(), h->pmf.p.end());
    *out = h;
  });
}

/* ---- closed forms ---- */

zg_status zg_harmonic(int64_t n, char** num, char** den) {
  return guarded([&] { set_rat(zagreb::harmonic(n), num, den); });
}

zg_status zg_catalan(int64_t n, char** out) {
  return guarded([&] {
    if (!out) throw zagreb::contract_error("null pointer");
    *out = dup_string(zagreb::catalan(n).get_str());
  });
}

zg_status zg_plane_mean_rootdeg(int64_t n, char** num, char** den) {
  return guarded([&] { set_rat(zagreb::plane_mean_rootdeg(n), num, den); });
}

zg_status zg_plane_mean_z2(int64_t n, char** num, char** den) {
  return guarded([&] { set_rat(zagreb::plane_mean_z2(n), num, den); });
}

/* ---- asymptotics ---- */

double zg_log_gamma(double x) { return zagreb::log_gamma(x); }
double zg_digamma(double x) { return zagreb::digamma(x); }

zg_status zg_gtable_compute(int k, int r_max, int s_max, zg_gtable** out) {
  return guarded([&] {
    if (!out) throw zagreb::contract_error("null pointer");
    *out = new zg_gtable{zagreb::GTable(k, r_max, s_max)};
  });
}

void zg_gtable_free(zg_gtable* g) { delete g; }

zg_status zg_gtable_log_get(const zg_gtable* g, int r, int s, double* out) {
  return guarded([&] {
    if (!g || !out) throw zagreb::contract_error("null pointer");
    *out = g->t.log_g(r, s);
  });
}

zg_status zg_gtable_write_csv(const zg_gtable* g, const char* path) {
  return guarded([&] {
    if (!g || !path) throw zagreb::contract_error("null pointer");
    zagreb::write_file(path, zagreb::csv_gtable(g->t));
  });
}

zg_status zg_constants_compute(int k, int64_t J, zg_constants** out) {
  return guarded([&] {
    if (!out) throw zagreb::contract_error("null pointer");
    *out = new zg_constants{zagreb::limit_constants(k, J)};
  });
}

void zg_constants_free(zg_constants* c) { delete c; }
double zg_constants_mu(const zg_constants* c) { return c->c.mu.value; }
double zg_constants_mu_err(const zg_constants* c) { return c->c.mu.error; }
double zg_constants_var(const zg_constants* c) { return c->c.var.value; }
double zg_constants_var_err(const zg_constants* c) { return c->c.var.error; }
double zg_constants_min_toll(const zg_constants* c) { return c->c.min_toll; }

zg_status zg_constants_write_json(const zg_constants* c, const char* path) {
  return guarded([&] {
    if (!c || !path) throw zagreb::contract_error("null pointer");
    zagreb::write_file(path, zagreb::json_constants(c->c));
  });
}

zg_status zg_predicted_mean(zg_model model, int k, int64_t n,
                            const zg_constants* c_or_null, double* out) {
  return guarded([&] {
    if (!out) throw zagreb::contract_error("null pointer");
    *out = zagreb::predicted_mean(to_model(model), k, n,
                                  c_or_null ? &c_or_null->c : nullptr);
  });
}

zg_status zg_transfer_check(zg_transfer_lemma lemma, double c, double alpha,
                            int64_t N, zg_transfer_result* out) {
  return guarded([&] {
    if (!out) throw zagreb::contract_error("null pointer");
    const zagreb::TransferResult r = zagreb::transfer_check(
        static_cast<zagreb::TransferLemma>(lemma), c, alpha, N);
    out->a_n = r.a_n;
    out->predicted = r.predicted;
    out->ratio = r.ratio;
    out->rel_gap = r.rel_gap;
  });
}

/* ---- reports ---- */

void zg_report_free(zg_report* r) { delete r; }

int64_t zg_report_size(const zg_report* r) {
  return r ? static_cast<int64_t>(r->r.checks.size()) : 0;
}

const char* zg_report_name(const zg_report* r, int64_t i) {
  if (!r || i < 0 || i >= static_cast<int64_t>(r->r.checks.size())) return "";
  return r->r.checks[static_cast<std::size_t>(i)].name.c_str();
}

int zg_report_passed(const zg_report* r, int64_t i) {
  if (!r || i < 0 || i >= static_cast<int64_t>(r->r.checks.size())) return 0;
  return r->r.checks[static_cast<std::size_t>(i)].pass ? 1 : 0;
}

const char* zg_report_detail(const zg_report* r, int64_t i) {
  if (!r || i < 0 || i >= static_cast<int64_t>(r->r.checks.size())) return "";
  return r->r.checks[static_cast<std::size_t>(i)].detail.c_str();
}

int zg_report_all_passed(const zg_report* r) {
  return r && r->r.all_passed() ? 1 : 0;
}

zg_status zg_report_write_json(const zg_report* r, const char* path) {
  return guarded([&] {
    if (!r || !path) throw zagreb::contract_error("null pointer");
    zagreb::write_file(path, zagreb::json_report(r->r));
  });
}

zg_status zg_gtable_consistency_check(const zg_gtable* g, zg_report** out) {
  return guarded([&] {
    if (!g || !out) throw zagreb::contract_error("null pointer");
    *out = new zg_report{zagreb::g_consistency_check(g->t)};
  });
}

zg_status zg_gtable_carleman(const zg_gtable* g, int R, zg_report** out) {
  return guarded([&] {
    if (!g || !out) throw zagreb::contract_error("null pointer");
    *out = new zg_report{zagreb::carleman_diagnostic(g->t, R).report};
  });
}

zg_status zg_gtable_appendix_bound(const zg_gtable* g, double A_max,
                                   double step, double* A_out,
                                   zg_report** out) {
  return guarded([&] {
    if (!g || !out) throw zagreb::contract_error("null pointer");
    const zagreb::AppendixBound ab =
        zagreb::appendix_bound_check(g->t, A_max, step);
    if (A_out) *A_out = ab.feasible ? ab.A : 0.0;
    *out = new zg_report{ab.report};
  });
}

/* ---- monte carlo ---- */

zg_status zg_simulate(const zg_sim_spec* spec, zg_sim_summary** out) {
  return guarded([&] {
    if (!spec || !out) throw zagreb::contract_error("null pointer");
    zagreb::SimConfig cfg;
    cfg.model = to_model(spec->model);
    cfg.k = spec->k;
    cfg.sizes.assign(spec->sizes, spec->sizes + spec->n_sizes);
    cfg.replicates = spec->replicates;
    cfg.seed = spec->seed;
    cfg.workers = spec->workers;
    cfg.z_order = spec->z_order;
    cfg.r_order = spec->r_order;
    cfg.hist_lo = spec->hist_lo;
    cfg.hist_hi = spec->hist_hi;
    cfg.hist_bins = spec->hist_bins;
    *out = new zg_sim_summary{zagreb::simulate(cfg)};
  });
}

void zg_sim_summary_free(zg_sim_summary* s) { delete s; }

int zg_sim_summary_sizes(const zg_sim_summary* s) {
  return s ? static_cast<int>(s->s.per_size.size()) : 0;
}

int64_t zg_sim_summary_n(const zg_sim_summary* s, int i) {
  if (!s || i < 0 || i >= static_cast<int>(s->s.per_size.size())) return 0;
  return s->s.per_size[static_cast<std::size_t>(i)].n;
}

zg_status zg_sim_summary_stat(const zg_sim_summary* s, int i, const char* stat,
                              int order, double* value, double* stderr_out) {
  return guarded([&] {
    if (!s || !stat || !value) throw zagreb::contract_error("null pointer");
    if (i < 0 || i >= static_cast<int>(s->s.per_size.size()))
      throw zagreb::contract_error("size index out of range");
    const auto& ss = s->s.per_size[static_cast<std::size_t>(i)];
    const std::string name = stat;
    double v = 0, se = 0;
    const double nrep = static_cast<double>(ss.replicates);
    if (name == "z_mean") {
      v = ss.z_mean;
      se = std::sqrt(ss.z_var / nrep);
    } else if (name == "z_var") {
      v = ss.z_var;
    } else if (name == "z_skew") {
      v = ss.z_skew;
      se = std::sqrt(6.0 / nrep);
    } else if (name == "z_kurt") {
      v = ss.z_kurt;
      se = std::sqrt(24.0 / nrep);
    } else if (name == "r_mean") {
      v = ss.r_mean;
      se = std::sqrt(ss.r_var / nrep);
    } else if (name == "r_var") {
      v = ss.r_var;
    } else if (name == "zn_moment") {
      if (order < 1 || order > static_cast<int>(ss.zn_moment.size()))
        throw zagreb::contract_error("zn_moment order out of range");
      v = ss.zn_moment[order - 1];
      se = ss.zn_se[order - 1];
    } else if (name == "rn_moment") {
      if (order < 1 || order > static_cast<int>(ss.rn_moment.size()))
        throw zagreb::contract_error("rn_moment order out of range");
      v = ss.rn_moment[order - 1];
      se = ss.rn_se[order - 1];
    } else {
      throw zagreb::contract_error("unknown stat: " + name);
    }
    *value = v;
    if (stderr_out) *stderr_out = se;
  });
}

zg_status zg_sim_summary_write_json(const zg_sim_summary* s,
                                    const char* path) {
  return guarded([&] {
    if (!s || !path) throw zagreb::contract_error("null pointer");
    zagreb::write_file(path, zagreb::json_sim_summary(s->s));
  });
}

zg_status zg_sim_summary_write_csv(const zg_sim_summary* s, const char* path) {
  return guarded([&] {
    if (!s || !path) throw zagreb::contract_error("null pointer");
    zagreb::write_file(path, zagreb::csv_sim_summary(s->s));
  });
}

zg_status zg_sim_summary_write_hist_csv(const zg_sim_summary* s, int i,
                                        const char* path) {
  return guarded([&] {
    if (!s || !path) throw zagreb::contract_error("null pointer");
    if (i < 0 || i >= static_cast<int>(s->s.per_size.size()))
      throw zagreb::contract_error("size index out of range");
    zagreb::write_file(
        path, zagreb::csv_histogram(s->s.per_size[static_cast<std::size_t>(i)]));
  });
}

zg_status zg_clt_check(const zg_sim_summary* s, const zg_constants* c,
                       zg_report** out) {
  return guarded([&] {
    if (!s || !c || !out) throw zagreb::contract_error("null pointer");
    *out = new zg_report{zagreb::clt_check(s->s, c->c)};
  });
}

zg_status zg_plane_limit_check(const zg_sim_summary* s, const zg_gtable* g,
                               zg_report** out) {
  return guarded([&] {
    if (!s || !g || !out) throw zagreb::contract_error("null pointer");
    *out = new zg_report{zagreb::plane_limit_check(s->s, g->t)};
  });
}

zg_status zg_empirical_split_check(zg_model model, int64_t n,
                                   int64_t replicates, uint64_t seed,
                                   double* chi2, double* pvalue,
                                   zg_report** out) {
  return guarded([&] {
    const zagreb::SplitCheck sc =
        zagreb::empirical_split_check(to_model(model), n, replicates, seed);
    if (chi2) *chi2 = sc.chi2;
    if (pvalue) *pvalue = sc.pvalue;
    if (out) *out = new zg_report{sc.report};
  });
}

zg_status zg_verify(const char* suite, int64_t n_max, uint64_t seed,
                    int workers, zg_report** out) {
  return guarded([&] {
    if (!suite || !out) throw zagreb::contract_error("null pointer");
    *out = new zg_report{zagreb::run_suite(suite, n_max, seed, workers)};
  });
}

zg_status zg_file_digest(const char* path, char** hex_out) {
  return guarded([&] {
    if (!path || !hex_out) throw zagreb::contract_error("null pointer");
    *hex_out = dup_string(zagreb::file_digest(path));
  });
}

} /* extern "C" */
