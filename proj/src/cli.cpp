#include "beamcode/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

#include "beamcode/chancode.hpp"
#include "beamcode/golomb.hpp"
#include "beamcode/sim.hpp"
#include "beamcode/subcode.hpp"

namespace beamcode::cli {

namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// key=value parameters: command-line pairs override an optional config file
// supplied as config=FILE. No environment variables are consulted.

class Params {
 public:
  static Params parse(int argc, const char* const* argv, int first) {
    std::map<std::string, std::string> cmdline;
    for (int i = first; i < argc; ++i) {
      const std::string arg = argv[i];
      const auto eq = arg.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw std::invalid_argument("expected key=value argument, got '" + arg + "'");
      }
      cmdline[arg.substr(0, eq)] = arg.substr(eq + 1);
    }
    Params params;
    const auto cfg = cmdline.find("config");
    if (cfg != cmdline.end()) {
      params.load_file(cfg->second);
      cmdline.erase(cfg);
    }
    for (const auto& [key, value] : cmdline) params.kv_[key] = value;
    return params;
  }

  bool has(const std::string& key) const { return kv_.count(key) != 0; }

  std::string str(const std::string& key, const std::string& fallback) const {
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
  }

  std::string require_str(const std::string& key) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) throw std::invalid_argument("missing required key '" + key + "'");
    return it->second;
  }

  long long integer(const std::string& key, long long fallback) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(it->second, &pos);
      if (pos != it->second.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("key '" + key + "' expects an integer, got '" +
                                  it->second + "'");
    }
  }

  double real(const std::string& key, double fallback) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    try {
      std::size_t pos = 0;
      const double v = std::stod(it->second, &pos);
      if (pos != it->second.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("key '" + key + "' expects a number, got '" +
                                  it->second + "'");
    }
  }

  // "lo:step:hi" or a comma-separated list.
  std::vector<double> snr_list(const std::string& key,
                               std::vector<double> fallback) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    const std::string& text = it->second;
    std::vector<double> values;
    if (text.find(':') != std::string::npos) {
      double lo, step, hi;
      if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &lo, &step, &hi) != 3 || step <= 0) {
        throw std::invalid_argument("key '" + key + "' expects lo:step:hi");
      }
      for (double v = lo; v <= hi + 1e-12; v += step) values.push_back(v);
    } else {
      std::stringstream ss(text);
      std::string tok;
      while (std::getline(ss, tok, ',')) values.push_back(std::stod(tok));
    }
    if (values.empty()) throw std::invalid_argument("key '" + key + "' is empty");
    return values;
  }

  std::vector<int> int_list(const std::string& key, std::vector<int> fallback) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    std::vector<int> values;
    std::stringstream ss(it->second);
    std::string tok;
    while (std::getline(ss, tok, ',')) values.push_back(std::stoi(tok));
    if (values.empty()) throw std::invalid_argument("key '" + key + "' is empty");
    return values;
  }

  void region(const std::string& key, double& lo, double& hi) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) return;
    if (std::sscanf(it->second.c_str(), "%lf,%lf", &lo, &hi) != 2 || lo > hi) {
      throw std::invalid_argument("key '" + key + "' expects lo,hi with lo <= hi");
    }
  }

  void require_only(std::initializer_list<const char*> allowed) const {
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : kv_) {
      if (!ok.count(key)) {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    }
  }

 private:
  void load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const auto begin = line.find_first_not_of(" \t\r");
      if (begin == std::string::npos) continue;
      const auto end = line.find_last_not_of(" \t\r");
      line = line.substr(begin, end - begin + 1);
      const auto eq = line.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw std::invalid_argument("config file line is not key=value: '" + line + "'");
      }
      kv_[line.substr(0, eq)] = line.substr(eq + 1);
    }
  }

  std::map<std::string, std::string> kv_;
};

// ---------------------------------------------------------------------------
// output tables

class Table {
 public:
  explicit Table(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::invalid_argument("cannot open output file '" + path + "'");
    }
  }

  std::ostream& stream() { return file_ ? *file_ : std::cout; }

  void header(const std::string& names) { stream() << names << '\n'; }

  void row(std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
      if (!first) stream() << ' ';
      stream() << fmt(v);
      first = false;
    }
    stream() << '\n';
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<double> default_snr_sweep() {
  std::vector<double> snr;
  for (int db = -10; db <= 10; ++db) snr.push_back(db);
  return snr;
}

// ---------------------------------------------------------------------------
// named code constructions shared by simulate / analyze-code / experiments

struct BuiltCode {
  Beamformer beamformer;
  SubspaceCode code;
};

BuiltCode build_named_code(const std::string& kind, int t_samples, int n_grid,
                           int n_antennas, int rm_m, int rm_r, int filter_length,
                           const SpatialGrid& grid) {
  BuiltCode built;
  if (kind == "bc-as" || kind == "ula-as") {
    const SensorSet sensors =
        kind == "bc-as" ? bose_chowla_sensors(t_samples) : ula(t_samples);
    built.beamformer = antenna_selection_beamformer(sensors, n_antennas);
  } else if (kind == "cbs-bc" || kind == "cbs-ula") {
    const SensorSet shifts =
        kind == "cbs-bc" ? bose_chowla_sensors(t_samples) : ula(t_samples);
    built.beamformer =
        conv_beamformer(boxcar_filter(filter_length), shifts, n_antennas);
  } else if (kind == "rm-pruned" || kind == "rm-full") {
    if ((1 << rm_m) != t_samples) {
      throw std::invalid_argument("code '" + kind + "': T must equal 2^m (T=" +
                                  std::to_string(t_samples) + ", m=" +
                                  std::to_string(rm_m) + ")");
    }
    if (n_antennas != n_grid) {
      throw std::invalid_argument("code '" + kind +
                                  "': construction regime requires na = ng");
    }
    BinaryCodebook code = reed_muller(rm_m, rm_r);
    if (kind == "rm-pruned") {
      code = prune_deterministic(code, n_grid);
    } else if (code.n_codewords != n_grid) {
      throw std::invalid_argument("code 'rm-full': 2^k must equal ng");
    }
    built.beamformer = bpsk_beamformer(to_bpsk(code), grid);
  } else {
    throw std::invalid_argument(
        "unknown code kind '" + kind +
        "' (expected bc-as, ula-as, rm-pruned, rm-full, cbs-bc or cbs-ula)");
  }
  built.code = build_code(built.beamformer, grid);
  return built;
}

void write_named_pe_file(const std::string& path, const PeCurve& curve) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
  write_pe_curve(out, curve);
}

// ---------------------------------------------------------------------------
// experiments

int run_fig1_curves(const ExperimentConfig& cfg) {
  const std::string prefix = cfg.out.empty() ? "fig1-curves" : cfg.out;
  for (double rho : {1.0, 0.5, 0.1}) {
    Table table(prefix + "_rho" + fmt(rho) + ".dat");
    table.header("x ds");
    for (int i = 0; i <= 100; ++i) {
      const double x = rho * i / 100.0;
      const double branch = std::max(1.0 - 2.0 * x, 2.0 * x / rho - 1.0);
      table.row({x, 1.0 - branch * branch});
    }
  }
  Table table(prefix + "_vs_rho.dat");
  table.header("rho ds");
  for (int i = 1; i <= 100; ++i) {
    const double rho = i / 100.0;
    table.row({rho, optimal_hamming_target(rho, cfg.t_samples).min_subspace});
  }
  return 0;
}

int run_fig2_rm_pruning(const ExperimentConfig& cfg) {
  const BinaryCodebook code = reed_muller(cfg.rm_m, cfg.rm_r);
  const int T = code.length;
  const int size = code.n_codewords;

  std::set<int> sweep{16,  24,  32,  48,  64,   96,   128,  192,  256, 384,
                      512, 768, 1024, 1025, 1152, 1280, 1536, 1792, 2048};
  sweep.insert(size / 2);
  sweep.insert(size / 2 + 1);
  sweep.insert(size);

  Table table(cfg.out.empty() ? "fig2-rm-pruning.dat" : cfg.out);
  table.header("N dmin dminmedian welch");
  for (int n : sweep) {
    if (n < 2 || n > size) continue;
    const double dmin =
        min_subspace_from_hamming(hamming_stats(prune_deterministic(code, n)), T);
    const double dmedian = prune_random(code, n, cfg.trials, cfg.seed).median;
    const double welch = n > T ? welch_upper_bound(T, n) : 1.0;
    table.row({double(n), dmin, dmedian, welch});
  }
  return 0;
}

int run_fig4_isotropic_pe(const ExperimentConfig& cfg) {
  const SpatialGrid grid = make_grid(cfg.n_grid);
  const std::string prefix = cfg.out.empty() ? "fig4-isotropic-pe" : cfg.out;

  SimConfig sim;
  sim.snr_db = cfg.snr_db.empty() ? default_snr_sweep() : cfg.snr_db;
  sim.n_trials = cfg.trials;
  sim.seed = cfg.seed;
  sim.region_lo = cfg.region_lo;
  sim.region_hi = cfg.region_hi;
  sim.n_workers = cfg.workers;

  const BuiltCode rm = build_named_code("rm-pruned", cfg.t_samples, cfg.n_grid,
                                        cfg.n_antennas, cfg.rm_m, cfg.rm_r, 1, grid);
  write_named_pe_file(prefix + "_rm.dat", monte_carlo(sim, grid, rm.code));

  const BuiltCode bc = build_named_code("bc-as", cfg.t_samples, cfg.n_grid,
                                        cfg.n_antennas, cfg.rm_m, cfg.rm_r, 1, grid);
  write_named_pe_file(prefix + "_bc.dat", monte_carlo(sim, grid, bc.code));

  std::cerr << "fig4: rm-pruned dmin=" << fmt(rm.code.min_distance.distance)
            << " bc-as dmin=" << fmt(bc.code.min_distance.distance) << '\n';
  return 0;
}

int run_fig5_cbs_pe(const ExperimentConfig& cfg) {
  const SpatialGrid grid = make_grid(cfg.n_grid);
  const std::string prefix = cfg.out.empty() ? "fig5-cbs-pe" : cfg.out;

  SimConfig sim;
  sim.snr_db = cfg.snr_db.empty() ? default_snr_sweep() : cfg.snr_db;
  sim.n_trials = cfg.trials;
  sim.seed = cfg.seed;
  sim.region_lo = cfg.region_lo;
  sim.region_hi = cfg.region_hi;
  sim.n_workers = cfg.workers;

  for (int P : cfg.filter_lengths) {
    const BuiltCode built = build_named_code("cbs-bc", cfg.t_samples, cfg.n_grid,
                                             cfg.n_antennas, cfg.rm_m, cfg.rm_r, P, grid);
    write_named_pe_file(prefix + "_p" + std::to_string(P) + ".dat",
                        monte_carlo(sim, grid, built.code));
    std::cerr << "fig5: P=" << P
              << " dmin=" << fmt(built.code.min_distance.distance) << '\n';
  }
  return 0;
}

int run_fig6_beampattern(const ExperimentConfig& cfg) {
  const SpatialGrid grid = make_grid(cfg.n_grid);
  const std::string prefix = cfg.out.empty() ? "fig6-beampattern" : cfg.out;
  for (int P : cfg.filter_lengths) {
    const Beampattern bp = beampattern(boxcar_filter(P), grid);
    Table table(prefix + "_p" + std::to_string(P) + ".dat");
    table.header("G B");
    for (int n = 0; n < grid.n_points; ++n) {
      table.row({grid.points[n], bp.values[n]});
    }
  }
  return 0;
}

int run_bounds_report(const ExperimentConfig& cfg) {
  Table table(cfg.out.empty() ? "bounds-report.dat" : cfg.out);
  table.header("T ng lower measured_bc upper welch ula_bound measured_ula sandwich ula_ok crossover");
  bool all_pass = true;
  for (int T : {5, 7, 11, 13, 31}) {
    const BoundsReport report = report_bounds(T, T * T - 1);
    table.row({double(T), double(report.n_grid), report.bc_lower,
               report.measured_bc, report.bc_upper, report.welch,
               report.ula_bound, report.measured_ula, double(report.sandwich_pass),
               double(report.ula_pass), double(report.crossover)});
    all_pass = all_pass && report.pass();
  }
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// subcommands

ExperimentConfig default_config(const std::string& experiment) {
  ExperimentConfig cfg;
  cfg.experiment = experiment;
  if (experiment == "fig2-rm-pruning") {
    cfg.rm_m = 4;
    cfg.rm_r = 2;
    cfg.t_samples = 16;
    cfg.trials = 1000;
  } else if (experiment == "fig5-cbs-pe") {
    cfg.region_lo = -0.2;
    cfg.region_hi = 0.2;
  }
  return cfg;
}

ExperimentConfig config_from_params(const Params& params, const std::string& experiment) {
  ExperimentConfig cfg = default_config(experiment);
  cfg.t_samples = int(params.integer("T", cfg.t_samples));
  cfg.n_grid = int(params.integer("ng", cfg.n_grid));
  cfg.n_antennas = int(params.integer("na", params.integer("ng", cfg.n_antennas)));
  cfg.rm_m = int(params.integer("m", cfg.rm_m));
  cfg.rm_r = int(params.integer("r", cfg.rm_r));
  cfg.filter_lengths = params.int_list("P", cfg.filter_lengths);
  cfg.snr_db = params.snr_list("snr", cfg.snr_db);
  cfg.trials = int(params.integer("trials", cfg.trials));
  cfg.seed = std::uint64_t(params.integer("seed", std::int64_t(cfg.seed)));
  params.region("region", cfg.region_lo, cfg.region_hi);
  cfg.workers = int(params.integer("workers", cfg.workers));
  cfg.out = params.str("out", cfg.out);
  return cfg;
}

int cmd_run(const Params& params) {
  params.require_only({"experiment", "T", "ng", "na", "m", "r", "P", "snr", "trials",
                       "seed", "region", "workers", "out"});
  return run_experiment(config_from_params(params, params.require_str("experiment")));
}

int cmd_gen_ruler(const Params& params) {
  params.require_only({"p", "extend", "out"});
  const int p = int(params.integer("p", -1));
  if (p < 0) throw std::invalid_argument("missing required key 'p'");
  const int extend = int(params.integer("extend", 0));
  const GolombRuler ruler = bose_chowla(p);
  const SensorSet sensors = extend_ruler(ruler, extend);
  Table table(params.str("out", "-"));
  table.header("mark");
  for (int mark : sensors.positions) table.row({double(mark)});
  std::cerr << "gen-ruler: p=" << p << " modulus=" << ruler.modulus
            << " marks=" << sensors.count()
            << " sidon=" << is_sidon(sensors.positions, ruler.modulus) << '\n';
  return 0;
}

int cmd_gen_rm(const Params& params) {
  params.require_only({"m", "r", "n", "out", "bits"});
  const int m = int(params.integer("m", -1));
  const int r = int(params.integer("r", -1));
  if (m < 0 || r < 0) throw std::invalid_argument("missing required keys 'm' and 'r'");
  BinaryCodebook code = reed_muller(m, r);
  const int full_size = code.n_codewords;
  int k = 0;
  while ((1 << k) < full_size) ++k;
  const int n = int(params.integer("n", 0));
  if (n > 0) code = prune_deterministic(code, n);
  const HammingStats stats = hamming_stats(code);

  Table table(params.str("out", "-"));
  table.header("T k N dminham dmaxham rho dsmin");
  table.row({double(code.length), double(k), double(code.n_codewords),
             double(stats.d_min), double(stats.d_max), stats.rho,
             min_subspace_from_hamming(stats, code.length)});

  if (params.has("bits")) {
    Table dump(params.str("bits", "-"));
    dump.header("codeword");
    std::string word(std::size_t(code.length), '0');
    for (int c = 0; c < code.n_codewords; ++c) {
      for (int t = 0; t < code.length; ++t) word[t] = code.bit(c, t) ? '1' : '0';
      dump.stream() << word << '\n';
    }
  }
  return 0;
}

int cmd_analyze_code(const Params& params) {
  params.require_only({"code", "T", "ng", "na", "m", "r", "P", "out", "dump-w"});
  const std::string kind = params.require_str("code");
  const int T = int(params.integer("T", 32));
  const int ng = int(params.integer("ng", 1024));
  const int na = int(params.integer("na", ng));
  const int m = int(params.integer("m", 5));
  const int r = int(params.integer("r", 2));
  const int P = int(params.integer("P", 1));

  const SpatialGrid grid = make_grid(ng);
  const BuiltCode built = build_named_code(kind, T, ng, na, m, r, P, grid);
  const IsotropyReport isotropy = check_isotropy(built.beamformer, grid);

  Table table(params.str("out", "-"));
  std::ostream& os = table.stream();
  os << "kind=" << kind << '\n'
     << "T=" << built.code.dim << '\n'
     << "ng=" << ng << '\n'
     << "na=" << na << '\n'
     << "dmin=" << fmt(built.code.min_distance.distance) << '\n'
     << "pair_i=" << built.code.min_distance.first << '\n'
     << "pair_j=" << built.code.min_distance.second << '\n';
  if (ng > built.code.dim) {
    os << "welch=" << fmt(welch_upper_bound(built.code.dim, ng)) << '\n';
  }
  os << "isotropic=" << (isotropy.isotropic ? 1 : 0) << '\n'
     << "max_gain_deviation=" << fmt(isotropy.max_gain_deviation) << '\n';
  if (kind == "rm-pruned" || kind == "rm-full") {
    BinaryCodebook code = reed_muller(m, r);
    if (kind == "rm-pruned") code = prune_deterministic(code, ng);
    os << "hamming_closed_form=" << fmt(min_subspace_from_hamming(hamming_stats(code), code.length))
       << '\n';
  }
  if (params.has("dump-w")) {
    std::ofstream dump(params.str("dump-w", "-"));
    if (!dump) throw std::invalid_argument("cannot open dump-w file");
    write_beamformer(dump, built.beamformer);
  }
  return 0;
}

int cmd_simulate(const Params& params) {
  params.require_only({"code", "T", "ng", "na", "m", "r", "P", "snr", "trials", "seed",
                       "region", "workers", "out"});
  const std::string kind = params.require_str("code");
  const int T = int(params.integer("T", 32));
  const int ng = int(params.integer("ng", 1024));
  const int na = int(params.integer("na", ng));
  const int m = int(params.integer("m", 5));
  const int r = int(params.integer("r", 2));
  const int P = int(params.integer("P", 1));

  SimConfig sim;
  sim.snr_db = params.snr_list("snr", default_snr_sweep());
  sim.n_trials = int(params.integer("trials", 10000));
  sim.seed = std::uint64_t(params.integer("seed", 1));
  params.region("region", sim.region_lo, sim.region_hi);
  sim.n_workers = int(params.integer("workers", 0));

  const SpatialGrid grid = make_grid(ng);
  const BuiltCode built = build_named_code(kind, T, ng, na, m, r, P, grid);
  const PeCurve curve = monte_carlo(sim, grid, built.code);

  const std::string out = params.str("out", kind + "_pe.dat");
  if (out == "-") {
    write_pe_curve(std::cout, curve);
  } else {
    write_named_pe_file(out, curve);
  }
  std::cerr << "simulate: code=" << kind
            << " dmin=" << fmt(built.code.min_distance.distance)
            << " trials=" << sim.n_trials << '\n';
  return 0;
}

int cmd_report_bounds(const Params& params) {
  params.require_only({"T", "ng", "out"});
  const int T = int(params.integer("T", -1));
  if (T < 0) throw std::invalid_argument("missing required key 'T'");
  const int ng = int(params.integer("ng", T * T - 1));
  const BoundsReport report = report_bounds(T, ng);

  Table table(params.str("out", "-"));
  std::ostream& os = table.stream();
  os << "T=" << report.t_samples << '\n'
     << "ng=" << report.n_grid << '\n'
     << "bc_lower=" << fmt(report.bc_lower) << '\n'
     << "measured_bc=" << fmt(report.measured_bc) << '\n'
     << "bc_upper=" << fmt(report.bc_upper) << '\n'
     << "welch=" << fmt(report.welch) << '\n'
     << "ula_bound=" << fmt(report.ula_bound) << '\n'
     << "measured_ula=" << fmt(report.measured_ula) << '\n'
     << "sandwich_pass=" << (report.sandwich_pass ? 1 : 0) << '\n'
     << "ula_pass=" << (report.ula_pass ? 1 : 0) << '\n'
     << "crossover=" << (report.crossover ? 1 : 0) << '\n';
  return report.pass() ? 0 : 1;
}

int cmd_beampattern(const Params& params) {
  params.require_only({"P", "ng", "out"});
  const int P = int(params.integer("P", 3));
  const int ng = int(params.integer("ng", 1024));
  const SpatialGrid grid = make_grid(ng);
  const Beampattern bp = beampattern(boxcar_filter(P), grid);
  Table table(params.str("out", "-"));
  table.header("G B");
  for (int n = 0; n < grid.n_points; ++n) table.row({grid.points[n], bp.values[n]});
  return 0;
}

void print_usage(std::ostream& os) {
  os << "usage: beamcode <command> [key=value ...]\n"
        "\n"
        "commands:\n"
        "  gen-ruler      p= [extend=0] [out=-]\n"
        "  gen-rm         m= r= [n=] [out=-] [bits=PATH]\n"
        "  analyze-code   code=bc-as|ula-as|rm-pruned|rm-full|cbs-bc|cbs-ula\n"
        "                 [T=32 ng=1024 na=ng m=5 r=2 P=1] [out=-] [dump-w=PATH]\n"
        "  simulate       code= [T= ng= na= m= r= P=] [snr=-10:1:10] [trials=10000]\n"
        "                 [seed=1] [region=lo,hi] [workers=0] [out=PATH]\n"
        "  report-bounds  T= [ng=T^2-1] [out=-]\n"
        "  beampattern    [P=3] [ng=1024] [out=-]\n"
        "  run            experiment=fig1-curves|fig2-rm-pruning|fig4-isotropic-pe|\n"
        "                 fig5-cbs-pe|fig6-beampattern|bounds-report [overrides]\n"
        "\n"
        "A plain-text config file of key=value lines can be supplied with\n"
        "config=FILE; explicit flags override file entries.\n";
}

}  // namespace

BoundsReport report_bounds(int t_samples, int n_grid) {
  const DistanceBounds bounds = bose_chowla_distance_bounds(t_samples, n_grid);
  const SpatialGrid grid = make_grid(n_grid);

  BoundsReport report;
  report.t_samples = t_samples;
  report.n_grid = n_grid;
  report.bc_lower = bounds.lower;
  report.bc_upper = bounds.upper;
  report.welch = welch_upper_bound(t_samples, n_grid);
  report.ula_bound = ula_shift_distance_bound();

  const GolombRuler ruler = bose_chowla(t_samples);
  const Beamformer w_bc =
      antenna_selection_beamformer(make_sensor_set(ruler.marks), n_grid);
  report.measured_bc = build_code(w_bc, grid).min_distance.distance;

  const Beamformer w_ula = antenna_selection_beamformer(ula(t_samples), n_grid);
  report.measured_ula = build_code(w_ula, grid).min_distance.distance;

  constexpr double slack = 1e-9;
  report.sandwich_pass = report.measured_bc >= report.bc_lower - slack &&
                         report.measured_bc <= report.bc_upper + slack;
  report.ula_pass = report.measured_ula <= report.ula_bound + slack;
  report.crossover = report.bc_lower > report.ula_bound;
  return report;
}

int run_experiment(const ExperimentConfig& cfg) {
  if (cfg.experiment == "fig1-curves") return run_fig1_curves(cfg);
  if (cfg.experiment == "fig2-rm-pruning") return run_fig2_rm_pruning(cfg);
  if (cfg.experiment == "fig4-isotropic-pe") return run_fig4_isotropic_pe(cfg);
  if (cfg.experiment == "fig5-cbs-pe") return run_fig5_cbs_pe(cfg);
  if (cfg.experiment == "fig6-beampattern") return run_fig6_beampattern(cfg);
  if (cfg.experiment == "bounds-report") return run_bounds_report(cfg);
  throw std::invalid_argument("unknown experiment '" + cfg.experiment + "'");
}

int dispatch(int argc, const char* const* argv) {
  if (argc < 2) {
    print_usage(std::cerr);
    return 2;
  }
  const std::string command = argv[1];
  if (command == "help" || command == "-h" || command == "--help") {
    print_usage(std::cout);
    return 0;
  }
  try {
    const Params params = Params::parse(argc, argv, 2);
    if (command == "gen-ruler") return cmd_gen_ruler(params);
    if (command == "gen-rm") return cmd_gen_rm(params);
    if (command == "analyze-code") return cmd_analyze_code(params);
    if (command == "simulate") return cmd_simulate(params);
    if (command == "report-bounds") return cmd_report_bounds(params);
    if (command == "beampattern") return cmd_beampattern(params);
    if (command == "run") return cmd_run(params);
    std::cerr << "beamcode: unknown command '" << command << "'\n";
    print_usage(std::cerr);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "beamcode " << command << ": " << e.what() << '\n';
    return 2;
  }
}

}  // namespace beamcode::cli
