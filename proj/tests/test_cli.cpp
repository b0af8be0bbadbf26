#include "beamcode/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"

using namespace beamcode;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_cli(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"beamcode"};
  argv.insert(argv.end(), args.begin(), args.end());
  return cli::dispatch(int(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("report_bounds verifies the prime sandwich regime") {
  const cli::BoundsReport r5 = cli::report_bounds(5, 24);
  CHECK(r5.sandwich_pass);
  CHECK(r5.ula_pass);
  CHECK(r5.crossover);
  CHECK(r5.pass());
  CHECK(r5.measured_bc == doctest::Approx(0.8).epsilon(1e-9));
  CHECK(r5.bc_lower == doctest::Approx(0.6));
  CHECK(r5.measured_ula < r5.ula_bound);

  // T = 3 sits below the crossover point
  const cli::BoundsReport r3 = cli::report_bounds(3, 8);
  CHECK_FALSE(r3.crossover);
  CHECK(r3.sandwich_pass);

  CHECK_THROWS_AS(cli::report_bounds(6, 35), std::invalid_argument);
  CHECK_THROWS_AS(cli::report_bounds(5, 25), std::invalid_argument);
}

TEST_CASE("fig1 experiment emits the analytic curves") {
  cli::ExperimentConfig cfg;
  cfg.experiment = "fig1-curves";
  cfg.out = "tmp_fig1";
  CHECK(cli::run_experiment(cfg) == 0);

  const std::string rho1 = slurp("tmp_fig1_rho1.dat");
  CHECK(rho1.substr(0, 5) == "x ds\n");
  // at x = 0.5 and rho = 1 the curve attains its maximum of 1
  CHECK(rho1.find("\n0.5 1\n") != std::string::npos);

  const std::string rho05 = slurp("tmp_fig1_rho0.5.dat");
  // the x sweep stops at rho
  CHECK(rho05.find("\n0.5 ") != std::string::npos);
  CHECK(rho05.find("\n0.51 ") == std::string::npos);

  const std::string vs_rho = slurp("tmp_fig1_vs_rho.dat");
  CHECK(vs_rho.substr(0, 7) == "rho ds\n");
  CHECK(vs_rho.find("\n1 1\n") != std::string::npos);
}

TEST_CASE("fig2 experiment with a small code") {
  cli::ExperimentConfig cfg;
  cfg.experiment = "fig2-rm-pruning";
  cfg.rm_m = 3;
  cfg.rm_r = 1;
  cfg.trials = 50;
  cfg.seed = 11;
  cfg.out = "tmp_fig2.dat";
  CHECK(cli::run_experiment(cfg) == 0);

  std::ifstream in("tmp_fig2.dat");
  std::string header;
  std::getline(in, header);
  CHECK(header == "N dmin dminmedian welch");

  // RM(3,1) has 16 codewords: sweep rows are N = 8, 9, 16
  double n, dmin, dmedian, welch;
  REQUIRE((in >> n >> dmin >> dmedian >> welch));
  CHECK(n == 8);
  CHECK(dmin > 0.0);  // below half the codebook the prefix is complement-free
  REQUIRE((in >> n >> dmin >> dmedian >> welch));
  CHECK(n == 9);
  CHECK(dmin == 0.0);  // message 8 is the all-ones row: complement pair present
  REQUIRE((in >> n >> dmin >> dmedian >> welch));
  CHECK(n == 16);
  CHECK(dmin == 0.0);
  CHECK(dmedian == 0.0);
}

TEST_CASE("fig6 experiment output is byte-stable") {
  cli::ExperimentConfig cfg;
  cfg.experiment = "fig6-beampattern";
  cfg.n_grid = 64;
  cfg.filter_lengths = {2, 3};
  cfg.out = "tmp_fig6a";
  CHECK(cli::run_experiment(cfg) == 0);
  cfg.out = "tmp_fig6b";
  CHECK(cli::run_experiment(cfg) == 0);

  for (const char* p : {"_p2.dat", "_p3.dat"}) {
    CHECK(slurp(std::string("tmp_fig6a") + p) == slurp(std::string("tmp_fig6b") + p));
  }
  const std::string p3 = slurp("tmp_fig6a_p3.dat");
  CHECK(p3.substr(0, 4) == "G B\n");
  CHECK(p3.find("\n0 3\n") != std::string::npos);  // peak gain P at f = 0
}

TEST_CASE("bounds-report experiment passes across the prime sweep") {
  cli::ExperimentConfig cfg;
  cfg.experiment = "bounds-report";
  cfg.out = "tmp_bounds.dat";
  CHECK(cli::run_experiment(cfg) == 0);
  const std::string table = slurp("tmp_bounds.dat");
  CHECK(table.find("T ng lower") == 0);
  CHECK(table.find("\n5 24 ") != std::string::npos);
  CHECK(table.find("\n31 960 ") != std::string::npos);
}

TEST_CASE("unknown experiment is rejected") {
  cli::ExperimentConfig cfg;
  cfg.experiment = "fig9-nope";
  CHECK_THROWS_AS(cli::run_experiment(cfg), std::invalid_argument);
}

TEST_CASE("dispatch handles the key=value grammar") {
  CHECK(run_cli({"gen-ruler", "p=5", "out=tmp_ruler.dat"}) == 0);
  const std::string ruler = slurp("tmp_ruler.dat");
  CHECK(ruler.substr(0, 5) == "mark\n");

  CHECK(run_cli({"gen-rm", "m=3", "r=1", "out=tmp_rm.dat", "bits=tmp_rm_bits.dat"}) == 0);
  const std::string rm = slurp("tmp_rm.dat");
  CHECK(rm.find("T k N dminham dmaxham rho dsmin") == 0);
  CHECK(rm.find("\n8 4 16 4 8 0.5 0\n") != std::string::npos);
  const std::string bits = slurp("tmp_rm_bits.dat");
  CHECK(bits.substr(0, 9) == "codeword\n");
  CHECK(bits.find("00000000\n") != std::string::npos);  // message 0
  CHECK(bits.find("11111111\n") != std::string::npos);  // the all-ones row

  CHECK(run_cli({"report-bounds", "T=5", "out=tmp_rb.txt"}) == 0);
  CHECK(slurp("tmp_rb.txt").find("sandwich_pass=1") != std::string::npos);

  // usage and config errors exit nonzero
  CHECK(run_cli({}) == 2);
  CHECK(run_cli({"no-such-command"}) == 2);
  CHECK(run_cli({"gen-ruler"}) == 2);            // missing p
  CHECK(run_cli({"gen-ruler", "p"}) == 2);       // not key=value
  CHECK(run_cli({"gen-ruler", "p=4"}) == 2);     // not prime
  CHECK(run_cli({"gen-ruler", "q=5"}) == 2);     // unknown key
  CHECK(run_cli({"simulate", "code=nope"}) == 2);
  CHECK(run_cli({"run", "experiment=fig9"}) == 2);
}

TEST_CASE("config files feed defaults and flags override them") {
  {
    std::ofstream cfg("tmp_cli.cfg");
    cfg << "# ruler configuration\n"
        << "p=5\n"
        << "out=tmp_ruler_cfg.dat\n";
  }
  CHECK(run_cli({"gen-ruler", "config=tmp_cli.cfg"}) == 0);
  std::ifstream in("tmp_ruler_cfg.dat");
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  CHECK(header == "mark");

  // command-line p overrides the file entry
  CHECK(run_cli({"gen-ruler", "config=tmp_cli.cfg", "p=3", "out=tmp_ruler_cfg2.dat"}) == 0);
  const std::string marks = slurp("tmp_ruler_cfg2.dat");
  CHECK(marks == "mark\n1\n6\n7\n");

  CHECK(run_cli({"gen-ruler", "config=missing.cfg"}) == 2);
}

TEST_CASE("simulate subcommand writes the SNR table") {
  CHECK(run_cli({"simulate", "code=bc-as", "T=5", "ng=24", "na=24", "snr=-2:2:2",
                 "trials=200", "seed=3", "out=tmp_sim.dat"}) == 0);
  const std::string table = slurp("tmp_sim.dat");
  CHECK(table.substr(0, 12) == "SNR Pe Peub\n");
  int lines = 0;
  for (char c : table) lines += c == '\n';
  CHECK(lines == 4);  // header + three SNR points
}

TEST_CASE("analyze-code emits key=value records") {
  CHECK(run_cli({"analyze-code", "code=bc-as", "T=5", "ng=24", "na=24",
                 "out=tmp_analysis.txt"}) == 0);
  const std::string report = slurp("tmp_analysis.txt");
  CHECK(report.find("kind=bc-as") != std::string::npos);
  CHECK(report.find("dmin=0.8\n") != std::string::npos);
  CHECK(report.find("isotropic=1") != std::string::npos);

  CHECK(run_cli({"analyze-code", "code=cbs-ula", "T=5", "ng=24", "na=24", "P=2",
                 "out=tmp_analysis_cbs.txt", "dump-w=tmp_w.txt"}) == 0);
  const std::string cbs = slurp("tmp_analysis_cbs.txt");
  CHECK(cbs.find("isotropic=0") != std::string::npos);
  const std::string w = slurp("tmp_w.txt");
  int rows = 0;
  for (char c : w) rows += c == '\n';
  CHECK(rows == 5);  // one line per beamformer row

  // for code-induced kinds the closed form is reported next to the measurement
  CHECK(run_cli({"analyze-code", "code=rm-pruned", "T=8", "ng=64", "na=64", "m=3",
                 "r=2", "out=tmp_analysis_rm.txt"}) == 0);
  const std::string rm_report = slurp("tmp_analysis_rm.txt");
  CHECK(rm_report.find("dmin=0.75\n") != std::string::npos);
  CHECK(rm_report.find("hamming_closed_form=0.75\n") != std::string::npos);
}
