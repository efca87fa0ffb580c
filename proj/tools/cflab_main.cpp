// Command-line front door: construct substitution pairs, certify uniqueness,
// verify pairs, and export characteristic-function / bump tables.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cflab/density.hpp"
#include "cflab/errors.hpp"
#include "cflab/extremal_bump.hpp"
#include "cflab/fourier.hpp"
#include "cflab/json_io.hpp"
#include "cflab/substitution.hpp"
#include "cflab/uniqueness.hpp"

namespace {

using cflab::json;

enum class Command { construct, construct_boundary, certify, verify, eval_cf, bump_table };

struct RunConfig {
  Command command = Command::construct;
  std::string density_arg;  // inline JSON or a file path
  std::string pair_path;
  double sigma = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<double> period;
  std::string out = "-";
  bool no_timestamp = false;

  // bump-table parameters
  double bump_a = 0.0;
  double bump_tau = 0.0;
  double x_min = 0.0;
  double x_max = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
  std::size_t n = 256;
  bool force_quadrature = false;

  // verify grids and tolerance overrides
  std::size_t outside_n = 256;
  std::size_t inside_n = 256;
  double verify_t_max = 0.0;  // 0 = auto (8 sigma)
  cflab::VerifyOptions verify;
};

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&tt, &tm_utc);
  std::strftime(buf, sizeof buf, "%FT%TZ", &tm_utc);
  return buf;
}

void write_text(const std::string& out, const std::string& text) {
  if (out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw cflab::validation_error("cannot open output path '" + out + "'");
  f << text;
}

void write_report(const RunConfig& cfg, json j) {
  if (!cfg.no_timestamp) j["timestamp"] = timestamp_utc();
  write_text(cfg.out, j.dump(2) + "\n");
}

cflab::DensitySpec load_density(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg.front() != '{') {
    std::ifstream f(arg);
    if (!f) throw cflab::validation_error("cannot read density file '" + arg + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  return cflab::density_from_json(json::parse(text));
}

cflab::SubstitutionPair load_pair(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw cflab::validation_error("cannot read pair file '" + path + "'");
  json j;
  f >> j;
  return cflab::pair_from_json(j);
}

int run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::construct: {
      const auto phi = load_density(cfg.density_arg);
      const auto pair = cflab::construct_pair(phi, cfg.sigma, cfg.alpha, cfg.beta);
      write_report(cfg, cflab::to_json(pair));
      return 0;
    }
    case Command::construct_boundary: {
      const auto phi = load_density(cfg.density_arg);
      const auto pair = cflab::construct_pair_boundary(phi, cfg.sigma, cfg.alpha);
      write_report(cfg, cflab::to_json(pair));
      return 0;
    }
    case Command::certify: {
      const auto phi = load_density(cfg.density_arg);
      const auto outcome = cflab::certify(phi, cfg.sigma, cfg.period);
      json j;
      if (outcome.certificate) {
        j = cflab::to_json(*outcome.certificate);
        j["certificate_found"] = true;
      } else {
        j["certificate_found"] = false;
        j["reason"] = outcome.reason;
        j["sigma"] = cfg.sigma;
      }
      write_report(cfg, std::move(j));
      return 0;
    }
    case Command::verify: {
      const auto pair = load_pair(cfg.pair_path);
      const double t_max =
          cfg.verify_t_max > 0.0 ? cfg.verify_t_max : 8.0 * pair.sigma;
      const auto outside = cflab::outside_grid(pair.sigma, t_max, cfg.outside_n);
      const auto inside = cflab::inside_grid(pair.sigma, cfg.inside_n);
      const auto report = cflab::verify_pair(pair, outside, inside, cfg.verify);
      write_report(cfg, cflab::to_json(report));
      return report.all_pass() ? 0 : 3;
    }
    case Command::eval_cf: {
      const auto d = load_density(cfg.density_arg);
      std::vector<double> grid(cfg.n + 1);
      for (std::size_t i = 0; i <= cfg.n; ++i) {
        grid[i] = cfg.t_min + (cfg.t_max - cfg.t_min) * static_cast<double>(i) /
                                  static_cast<double>(cfg.n);
      }
      const auto eval = cflab::evaluate_char_fn(d, grid, cfg.force_quadrature);
      std::ostringstream csv;
      cflab::write_cf_table(csv, eval);
      write_text(cfg.out, csv.str());
      return 0;
    }
    case Command::bump_table: {
      const cflab::ExtremalBump f(cfg.bump_a, cfg.sigma, cfg.bump_tau);
      std::ostringstream csv;
      cflab::write_bump_table(csv, f, cfg.x_min, cfg.x_max, cfg.n);
      write_text(cfg.out, csv.str());
      return 0;
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cflab: substitution pairs and uniqueness certificates for "
      "characteristic-function extensions from a neighborhood of infinity"};
  app.require_subcommand(1);

  RunConfig cfg;

  auto add_density = [&](CLI::App* cmd) {
    cmd->add_option("--density", cfg.density_arg,
                    "density spec: inline JSON or a path to a JSON file")
        ->required();
  };
  auto add_sigma = [&](CLI::App* cmd) {
    cmd->add_option("--sigma", cfg.sigma, "band edge sigma > 0")
        ->required()
        ->check(CLI::PositiveNumber);
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", cfg.out, "output path ('-' = stdout)");
    cmd->add_flag("--no-timestamp", cfg.no_timestamp,
                  "omit the timestamp field from JSON reports");
  };

  auto* construct = app.add_subcommand(
      "construct", "build psi = phi - rho F on a window (alpha, beta) in S_phi");
  add_density(construct);
  add_sigma(construct);
  construct->add_option("--alpha", cfg.alpha, "left end of the window")->required();
  construct->add_option("--beta", cfg.beta, "right end of the window")->required();
  add_out(construct);

  auto* boundary = app.add_subcommand(
      "construct-boundary",
      "build a pair on the critical window S_phi = (alpha, alpha + 2pi/sigma)");
  add_density(boundary);
  add_sigma(boundary);
  boundary->add_option("--alpha", cfg.alpha, "left support endpoint")->required();
  add_out(boundary);

  auto* certify = app.add_subcommand(
      "certify", "search for a lattice-avoiding uniqueness certificate");
  add_density(certify);
  add_sigma(certify);
  double period_value = 0.0;
  auto* period_opt =
      certify->add_option("--a", period_value, "fixed period (default: scan)");
  add_out(certify);

  auto* verify = app.add_subcommand("verify", "verify a stored substitution pair");
  verify->add_option("--pair", cfg.pair_path, "pair JSON file")->required();
  verify->add_option("--t-max", cfg.verify_t_max,
                     "largest |t| sampled outside the band (default 8 sigma)");
  verify->add_option("--outside-n", cfg.outside_n, "points per sign outside")
      ->check(CLI::Range(std::size_t{16}, std::size_t{1'000'000}));
  verify->add_option("--inside-n", cfg.inside_n, "points inside the band")
      ->check(CLI::Range(std::size_t{16}, std::size_t{1'000'000}));
  verify->add_option("--nonneg-grid", cfg.verify.nonneg_grid,
                     "grid size for the psi >= 0 scan")
      ->check(CLI::Range(std::size_t{16}, std::size_t{100'000'000}));
  verify->add_option("--psd-nodes", cfg.verify.psd_nodes, "Gram matrix nodes")
      ->check(CLI::Range(std::size_t{16}, std::size_t{512}));
  verify->add_option("--outside-tol", cfg.verify.outside_tol,
                     "max allowed |phi^-psi^| outside the band");
  verify->add_option("--inside-rel", cfg.verify.inside_rel,
                     "required inside difference, relative to rho * max F");
  verify->add_option("--mass-tol", cfg.verify.mass_tol, "|integral psi - 1| bound");
  verify->add_option("--psd-tol", cfg.verify.psd_tol, "Gram eigenvalue tolerance");
  add_out(verify);

  auto* evalcf = app.add_subcommand("eval-cf",
                                    "tabulate a characteristic function as CSV");
  add_density(evalcf);
  evalcf->add_option("--t-min", cfg.t_min, "grid start")->required();
  evalcf->add_option("--t-max", cfg.t_max, "grid end")->required();
  evalcf->add_option("--n", cfg.n, "number of grid steps")
      ->check(CLI::Range(std::size_t{16}, std::size_t{10'000'000}));
  evalcf->add_flag("--quadrature", cfg.force_quadrature,
                   "force the quadrature route even when a closed form exists");
  add_out(evalcf);

  auto* bumptab = app.add_subcommand("bump-table", "tabulate F and F' as CSV");
  add_sigma(bumptab);
  bumptab->add_option("--a", cfg.bump_a, "left window endpoint")->required();
  bumptab->add_option("--tau", cfg.bump_tau, "amplitude in (0, pi/(2 sigma)]")
      ->required();
  bumptab->add_option("--x-min", cfg.x_min, "grid start")->required();
  bumptab->add_option("--x-max", cfg.x_max, "grid end")->required();
  bumptab->add_option("--n", cfg.n, "number of grid steps")
      ->check(CLI::Range(std::size_t{16}, std::size_t{10'000'000}));
  add_out(bumptab);

  CLI11_PARSE(app, argc, argv);

  if (construct->parsed()) cfg.command = Command::construct;
  if (boundary->parsed()) cfg.command = Command::construct_boundary;
  if (certify->parsed()) {
    cfg.command = Command::certify;
    if (period_opt->count() > 0) cfg.period = period_value;
  }
  if (verify->parsed()) cfg.command = Command::verify;
  if (evalcf->parsed()) cfg.command = Command::eval_cf;
  if (bumptab->parsed()) cfg.command = Command::bump_table;

  try {
    return run(cfg);
  } catch (const cflab::hypothesis_error& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return 2;
  } catch (const cflab::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what()
              << " (achieved " << e.achieved() << ")\n";
    return 4;
  } catch (const cflab::validation_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "malformed JSON: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
