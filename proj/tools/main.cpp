// hyperco: estimate the hypercontractivity coefficient and classical
// dependence measures from CSV data; run synthetic power sweeps, pathway
// trend recovery, and analytic bound sweeps.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperco/hyperco.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hc = hyperco;
using nlohmann::json;

namespace {

struct GlobalOpts {
  std::uint64_t seed = 0;
  int threads = 0;
  std::string output;
};

void apply_threads(int threads) {
  if (const char* env = std::getenv("HYPERCO_THREADS")) {
    try {
      threads = std::stoi(env);
    } catch (const std::exception&) {
      throw hc::ParseError("HYPERCO_THREADS must be an integer");
    }
  }
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

std::vector<hc::Measure> parse_measures(const std::vector<std::string>& names) {
  if (names.empty()) return hc::all_measures();
  std::vector<hc::Measure> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(hc::measure_from_string(n));
  return out;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw hc::ParseError("cannot open output file: " + path);
  return out;
}

// stream for primary output: --output file or stdout
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_ = open_output(path);
      use_file_ = true;
    }
  }
  std::ostream& stream() { return use_file_ ? file_ : std::cout; }

 private:
  std::ofstream file_;
  bool use_file_ = false;
};

std::size_t resolve_column(const hc::Table& t, const std::string& name) {
  for (std::size_t c = 0; c < t.columns.size(); ++c)
    if (t.columns[c] == name) return c;
  // fall back to a numeric index
  try {
    std::size_t idx = std::stoul(name);
    if (idx < t.n_cols()) return idx;
  } catch (const std::exception&) {
  }
  throw hc::SchemaError("no such column: " + name);
}

hc::Table load_table(const std::string& path, const hc::CsvOptions& opts) {
  if (path == "-") return hc::load_csv(std::cin, opts);
  return hc::load_csv_file(path, opts);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

json mixture_spec_json(const hc::MixtureSpec& spec) {
  return json{{"family", hc::family_to_string(spec.family)},
              {"alpha", spec.alpha},
              {"sigma2", spec.sigma2},
              {"n", spec.n},
              {"correlated", spec.correlated},
              {"seed", spec.seed},
              {"mirror", spec.mirror}};
}

// ---- subcommand implementations --------------------------------------

int run_estimate(const GlobalOpts& g, const std::string& file,
                 const std::string& x_col, const std::string& y_col,
                 const std::vector<std::string>& measure_names) {
  hc::Table t = load_table(file, {});
  std::size_t ci = resolve_column(t, x_col);
  std::size_t cj = resolve_column(t, y_col);
  hc::PairedSamples data = t.complete_pairs(ci, cj);
  hc::EstimatorBundle est;

  json result;
  result["x_col"] = t.columns[ci];
  result["y_col"] = t.columns[cj];
  result["n"] = data.n();
  result["seed"] = g.seed;
  json scores;
  for (hc::Measure m : parse_measures(measure_names))
    scores[hc::measure_to_string(m)] = hc::score_measure(m, data, est, g.seed);
  result["measures"] = scores;

  hc::OptimizerConfig opt = est.opt;
  opt.seed = g.seed;
  hc::EstimateResult fwd = hc::estimate_hc(data, est.kde, opt);
  result["hc_detail"] = {{"raw_value", fwd.raw_value},
                         {"best_objective", fwd.best_objective},
                         {"converged", fwd.converged},
                         {"restarts_used", fwd.restarts_used}};

  OutputTarget out(g.output);
  out.stream() << result.dump(2) << '\n';
  return 0;
}

int run_screen(const GlobalOpts& g, const std::string& file, int min_complete,
               const std::vector<std::string>& measure_names) {
  hc::Table t = load_table(file, {});
  auto measures = parse_measures(measure_names);
  hc::ScreenReport report = hc::screen_pairs(t, measures, min_complete, g.seed);

  OutputTarget out(g.output);
  std::ostream& os = out.stream();
  os << "col_i,col_j,name_i,name_j,n_complete,skipped";
  for (hc::Measure m : measures) os << ',' << hc::measure_to_string(m);
  os << ",note\n";
  for (const auto& row : report.rows) {
    os << row.col_i << ',' << row.col_j << ',' << row.name_i << ','
       << row.name_j << ',' << row.n_complete << ',' << (row.skipped ? 1 : 0);
    for (hc::Measure m : measures) {
      os << ',';
      auto it = row.scores.find(m);
      if (it != row.scores.end()) os << fmt(it->second);
    }
    os << ",\"" << row.note << "\"\n";
  }
  return 0;
}

int run_power(const GlobalOpts& g, const std::string& family, double alpha,
              double sigma2, int n, int n_null, int n_alt, double fpr,
              const std::vector<std::string>& measure_names,
              const std::string& sweep_param,
              const std::vector<double>& sweep_values) {
  hc::MixtureSpec base;
  base.family = hc::family_from_string(family);
  base.alpha = alpha;
  base.sigma2 = sigma2;
  base.n = n;

  hc::PowerConfig cfg;
  cfg.n_null = n_null;
  cfg.n_alt = n_alt;
  cfg.fpr = fpr;
  cfg.measures = parse_measures(measure_names);
  cfg.seed = g.seed;

  std::vector<double> values = sweep_values;
  if (sweep_param.empty()) {
    cfg.sweep.push_back(base);
  } else {
    if (values.empty())
      throw hc::ParseError("--sweep requires --sweep-values");
    for (double v : values) {
      hc::MixtureSpec spec = base;
      if (sweep_param == "sigma2")
        spec.sigma2 = v;
      else if (sweep_param == "alpha")
        spec.alpha = v;
      else if (sweep_param == "n")
        spec.n = static_cast<int>(v);
      else
        throw hc::ParseError("--sweep must be one of sigma2, alpha, n");
      cfg.sweep.push_back(spec);
    }
  }

  hc::PowerReport report = hc::run_power(cfg);

  OutputTarget out(g.output);
  std::ostream& os = out.stream();
  os << "measure,sweep_param,sweep_value,threshold,power,failed_null,"
        "failed_alt,null_median,alt_median\n";
  for (const auto& row : report.rows) {
    double sweep_value = 0.0;
    const hc::MixtureSpec& spec = cfg.sweep[row.sweep_index];
    if (sweep_param == "alpha")
      sweep_value = spec.alpha;
    else if (sweep_param == "n")
      sweep_value = spec.n;
    else
      sweep_value = spec.sigma2;
    os << hc::measure_to_string(row.measure) << ','
       << (sweep_param.empty() ? "sigma2" : sweep_param) << ','
       << fmt(sweep_value) << ',' << fmt(row.threshold) << ','
       << fmt(row.power) << ',' << row.failed_null << ',' << row.failed_alt
       << ',' << fmt(row.null_q.median) << ',' << fmt(row.alt_q.median)
       << '\n';
  }

  if (!g.output.empty()) {
    json meta;
    meta["seed"] = cfg.seed;
    meta["n_null"] = cfg.n_null;
    meta["n_alt"] = cfg.n_alt;
    meta["fpr"] = cfg.fpr;
    meta["sweep_param"] = sweep_param.empty() ? "none" : sweep_param;
    json sweeps = json::array();
    for (const auto& spec : cfg.sweep) sweeps.push_back(mixture_spec_json(spec));
    meta["sweep"] = sweeps;
    json ms = json::array();
    for (hc::Measure m : cfg.measures) ms.push_back(hc::measure_to_string(m));
    meta["measures"] = ms;
    std::ofstream mf = open_output(g.output + ".json");
    mf << meta.dump(2) << '\n';
  }
  return 0;
}

int run_synth(const GlobalOpts& g, const std::string& family, double alpha,
              double sigma2, int n, bool null_data, bool mirror) {
  hc::MixtureSpec spec;
  spec.family = hc::family_from_string(family);
  spec.alpha = alpha;
  spec.sigma2 = sigma2;
  spec.n = n;
  spec.correlated = !null_data;
  spec.seed = g.seed;
  spec.mirror = mirror;

  hc::PairedSamples data = hc::generate(spec);
  OutputTarget out(g.output);
  std::ostream& os = out.stream();
  os << "x,y\n";
  for (Eigen::Index i = 0; i < data.n(); ++i)
    os << fmt(data.x[i]) << ',' << fmt(data.y[i]) << '\n';

  if (!g.output.empty()) {
    std::ofstream mf = open_output(g.output + ".json");
    mf << mixture_spec_json(spec).dump(2) << '\n';
  }
  return 0;
}

int run_pathway(const GlobalOpts& g, const std::string& file,
                const std::string& measure_name,
                const std::vector<double>& gammas, int trials) {
  hc::Table t = load_table(file, {});
  if (t.n_cols() != 5)
    throw hc::SchemaError(
        "pathway CSV must have 5 columns: time plus the four chain variables");

  // group rows by timepoint, preserving first-appearance order
  hc::PathwaySeries series;
  std::vector<std::vector<std::array<double, 4>>> blocks;
  for (const auto& row : t.rows) {
    for (const auto& cell : row)
      if (!cell) throw hc::SchemaError("pathway CSV cannot have missing cells");
    double time = *row[0];
    std::size_t bi = 0;
    for (; bi < series.timepoints.size(); ++bi)
      if (series.timepoints[bi] == time) break;
    if (bi == series.timepoints.size()) {
      series.timepoints.push_back(time);
      blocks.emplace_back();
    }
    blocks[bi].push_back({*row[1], *row[2], *row[3], *row[4]});
  }
  for (const auto& block : blocks) {
    std::array<hc::VectorXd, 4> vecs;
    for (int v = 0; v < 4; ++v) {
      vecs[v].resize(static_cast<Eigen::Index>(block.size()));
      for (std::size_t s = 0; s < block.size(); ++s)
        vecs[v][static_cast<Eigen::Index>(s)] = block[s][static_cast<std::size_t>(v)];
    }
    series.data.push_back(std::move(vecs));
  }

  hc::Measure measure = hc::measure_from_string(measure_name);
  OutputTarget out(g.output);
  std::ostream& os = out.stream();
  os << "measure,gamma,trials,success_probability\n";
  for (double gamma : gammas) {
    double p = hc::trend_recovery(series, measure, gamma, trials, g.seed);
    os << measure_name << ',' << fmt(gamma) << ',' << trials << ',' << fmt(p)
       << '\n';
  }
  return 0;
}

int run_bounds(const GlobalOpts& g, int example, double rho, double alpha,
               int k, double eps, const std::string& sweep_param, double from,
               double to, int steps) {
  auto value_at = [&](double rho_, double alpha_, int k_, double eps_) {
    switch (example) {
      case 1:
        return hc::ex1_bound(rho_, alpha_);
      case 2:
        return hc::ex2_bound(k_, alpha_);
      case 3:
        return hc::ex3_bound(k_, alpha_, eps_);
      default:
        throw hc::ParseError("--example must be 1, 2, or 3");
    }
  };

  OutputTarget out(g.output);
  std::ostream& os = out.stream();
  if (sweep_param.empty()) {
    os << fmt(value_at(rho, alpha, k, eps)) << '\n';
    return 0;
  }
  if (steps < 2) throw hc::ParseError("--steps must be >= 2");
  os << sweep_param << ",bound";
  if (example == 3) os << ",mcor";
  os << '\n';
  for (int i = 0; i < steps; ++i) {
    double v = from + (to - from) * i / (steps - 1);
    double rho_ = rho, alpha_ = alpha, eps_ = eps;
    int k_ = k;
    if (sweep_param == "rho")
      rho_ = v;
    else if (sweep_param == "alpha")
      alpha_ = v;
    else if (sweep_param == "k")
      k_ = static_cast<int>(v);
    else if (sweep_param == "eps")
      eps_ = v;
    else
      throw hc::ParseError("--sweep must be one of rho, alpha, k, eps");
    os << fmt(v) << ',' << fmt(value_at(rho_, alpha_, k_, eps_));
    if (example == 3) os << ',' << fmt(hc::ex3_mcor(k_, alpha_, eps_));
    os << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypercontractivity coefficient estimation toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "random seed (default 0)");
  app.add_option("--threads", g.threads,
                 "worker threads (HYPERCO_THREADS env overrides)");
  app.add_option("--output,-o", g.output, "output file (default stdout)");
  app.set_config("--config", "", "TOML config file");

  // estimate
  auto* est = app.add_subcommand("estimate",
                                 "score one column pair with all measures");
  std::string est_file, est_x = "x", est_y = "y";
  std::vector<std::string> est_measures;
  est->add_option("file", est_file, "CSV file (or - for stdin)")->required();
  est->add_option("--x-col", est_x, "x column name or index");
  est->add_option("--y-col", est_y, "y column name or index");
  est->add_option("--measures", est_measures, "measures to compute")
      ->delimiter(',');

  // screen
  auto* scr = app.add_subcommand("screen", "pairwise screening of a table");
  std::string scr_file;
  int scr_min_complete = 30;
  std::vector<std::string> scr_measures;
  scr->add_option("file", scr_file, "CSV file (or - for stdin)")->required();
  scr->add_option("--min-complete", scr_min_complete,
                  "minimum pairwise-complete rows");
  scr->add_option("--measures", scr_measures, "measures to compute")
      ->delimiter(',');

  // power
  auto* pow_cmd = app.add_subcommand("power", "detection-power sweep");
  std::string pow_family = "linear", pow_sweep;
  double pow_alpha = 0.05, pow_sigma2 = 0.03, pow_fpr = 0.05;
  int pow_n = 320, pow_n_null = 500, pow_n_alt = 500, pow_trials = 0;
  std::vector<std::string> pow_measures;
  std::vector<double> pow_sweep_values;
  pow_cmd->add_option("--family", pow_family, "function family");
  pow_cmd->add_option("--alpha", pow_alpha, "rare-block mass");
  pow_cmd->add_option("--sigma2", pow_sigma2, "noise variance");
  pow_cmd->add_option("--n", pow_n, "samples per dataset");
  pow_cmd->add_option("--n-null", pow_n_null, "null datasets per point");
  pow_cmd->add_option("--n-alt", pow_n_alt, "correlated datasets per point");
  pow_cmd->add_option("--trials", pow_trials,
                      "shorthand setting both --n-null and --n-alt");
  pow_cmd->add_option("--fpr", pow_fpr, "false positive rate");
  pow_cmd->add_option("--measures", pow_measures, "measures")->delimiter(',');
  pow_cmd->add_option("--sweep", pow_sweep, "sweep parameter: sigma2|alpha|n");
  pow_cmd->add_option("--sweep-values", pow_sweep_values, "sweep grid")
      ->delimiter(',');

  // synth
  auto* syn = app.add_subcommand("synth", "generate a mixture dataset");
  std::string syn_family = "linear";
  double syn_alpha = 0.05, syn_sigma2 = 0.03;
  int syn_n = 320;
  bool syn_null = false, syn_mirror = false;
  syn->add_option("--family", syn_family, "function family");
  syn->add_option("--alpha", syn_alpha, "rare-block mass");
  syn->add_option("--sigma2", syn_sigma2, "noise variance");
  syn->add_option("--n", syn_n, "sample count");
  syn->add_flag("--null", syn_null, "generate the independent null instead");
  syn->add_flag("--mirror", syn_mirror, "dominant block at x in [-0.1, 0]");

  // pathway
  auto* path = app.add_subcommand("pathway", "trend-recovery success sweep");
  std::string path_file, path_measure = "hc";
  std::vector<double> path_gammas = {0.1, 0.2, 0.5, 1.0};
  int path_trials = 20;
  path->add_option("file", path_file, "CSV: time + four chain variables")
      ->required();
  path->add_option("--measure", path_measure, "measure to use");
  path->add_option("--gammas", path_gammas, "subsample rates")->delimiter(',');
  path->add_option("--trials", path_trials, "trials per rate");

  // bounds
  auto* bnd = app.add_subcommand("bounds", "analytic lower-bound values");
  int bnd_example = 2, bnd_k = 2, bnd_steps = 50;
  double bnd_rho = 0.5, bnd_alpha = 0.1, bnd_eps = 0.1, bnd_from = 0.0,
         bnd_to = 1.0;
  std::string bnd_sweep;
  bnd->add_option("--example", bnd_example, "construction: 1, 2, or 3")
      ->required();
  bnd->add_option("--rho", bnd_rho, "correlation (example 1)");
  bnd->add_option("--alpha", bnd_alpha, "rare-block mass");
  bnd->add_option("--k", bnd_k, "alphabet size (examples 2, 3)");
  bnd->add_option("--eps", bnd_eps, "corruption rate (example 3)");
  bnd->add_option("--sweep", bnd_sweep, "sweep parameter: rho|alpha|k|eps");
  bnd->add_option("--from", bnd_from, "sweep start");
  bnd->add_option("--to", bnd_to, "sweep end");
  bnd->add_option("--steps", bnd_steps, "sweep points");

  // let --seed/--threads/--output appear after the subcommand name too
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    apply_threads(g.threads);
    if (pow_trials > 0) {
      pow_n_null = pow_trials;
      pow_n_alt = pow_trials;
    }
    if (est->parsed())
      return run_estimate(g, est_file, est_x, est_y, est_measures);
    if (scr->parsed())
      return run_screen(g, scr_file, scr_min_complete, scr_measures);
    if (pow_cmd->parsed())
      return run_power(g, pow_family, pow_alpha, pow_sigma2, pow_n, pow_n_null,
                       pow_n_alt, pow_fpr, pow_measures, pow_sweep,
                       pow_sweep_values);
    if (syn->parsed())
      return run_synth(g, syn_family, syn_alpha, syn_sigma2, syn_n, syn_null,
                       syn_mirror);
    if (path->parsed())
      return run_pathway(g, path_file, path_measure, path_gammas, path_trials);
    if (bnd->parsed())
      return run_bounds(g, bnd_example, bnd_rho, bnd_alpha, bnd_k, bnd_eps,
                        bnd_sweep, bnd_from, bnd_to, bnd_steps);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
