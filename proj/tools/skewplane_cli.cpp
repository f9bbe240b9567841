#include <CLI11.hpp>

#include <iostream>

#include "skewplane/suites.hpp"

namespace {

using namespace skewplane;

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct PlaneOpts {
  std::string field;  // "p,k"
  bool quaternion = false;
};

void add_plane_flags(CLI::App* cmd, PlaneOpts& opts) {
  auto* f = cmd->add_option("--field", opts.field, "finite plane AG(2, GF(p^k)) as p,k");
  auto* q = cmd->add_flag("--quaternion", opts.quaternion, "rational quaternion plane");
  f->excludes(q);
}

PlaneModel make_plane(const PlaneOpts& opts) {
  if (opts.quaternion) return PlaneModel(Ring::quaternions());
  if (opts.field.empty())
    throw unsupported_operation("one of --field or --quaternion is required");
  auto comma = opts.field.find(',');
  long p = std::stol(opts.field.substr(0, comma));
  int k = comma == std::string::npos ? 1 : std::stoi(opts.field.substr(comma + 1));
  return PlaneModel(Ring::finite_field(p, k));
}

int run_cayley(const PlaneOpts& plane_opts, const std::string& out_dir) {
  PlaneModel plane = make_plane(plane_opts);
  if (!plane.finite()) {
    std::cerr << "error: Cayley tables need a finite plane\n";
    return kExitUsage;
  }
  std::filesystem::path dir(out_dir);
  if (!std::filesystem::is_directory(dir)) {
    std::cerr << "error: output directory '" << out_dir << "' does not exist\n";
    return kExitUsage;
  }
  LineAlgebra k = canonical_algebra(plane);
  write_csv(cayley_table(k, '+'), dir / "add.csv");
  write_csv(cayley_table(k, '*'), dir / "mul.csv");
  std::cout << "wrote " << (dir / "add.csv").string() << " and "
            << (dir / "mul.csv").string() << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of skew-fields built over lines of Desargues affine planes"};
  app.require_subcommand(1);

  PlaneOpts cayley_plane;
  std::string cayley_out = ".";
  CLI::App* cayley = app.add_subcommand("cayley", "emit Cayley tables of the line skew-field");
  add_plane_flags(cayley, cayley_plane);
  cayley->add_option("--out", cayley_out, "output directory")->capture_default_str();

  PlaneOpts verify_plane;
  std::vector<std::string> suites;
  std::string mode;
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
  int bound = 8;
  std::string csv_path;
  bool serial = false;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_plane_flags(verify, verify_plane);
  verify->add_option("--suite", suites, "axioms, desargues, pappus, pappus-countermodel, skewfield, dilation-iso, all")
      ->required();
  verify->add_option("--mode", mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  auto* seed_opt = verify->add_option("--seed", seed, "sampler seed");
  verify->add_option("--samples", samples, "sample count")->capture_default_str();
  verify->add_option("--rational-bound", bound, "quaternion component size bound")
      ->capture_default_str();
  verify->add_option("--csv", csv_path, "write the report as CSV");
  verify->add_flag("--serial", serial, "run kernels on the serial reference path");

  PlaneOpts witness_plane;
  std::uint64_t w_seed = 0;
  std::size_t w_samples = 100000;
  int w_bound = 8;
  std::string w_out = ".";
  CLI::App* witness = app.add_subcommand("witness", "hunt quaternion-plane witnesses");
  add_plane_flags(witness, witness_plane);
  witness->add_option("--seed", w_seed, "sampler seed")->capture_default_str();
  witness->add_option("--samples", w_samples, "search budget")->capture_default_str();
  witness->add_option("--rational-bound", w_bound, "component size bound")
      ->capture_default_str();
  witness->add_option("--out", w_out, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (cayley->parsed()) return run_cayley(cayley_plane, cayley_out);

    if (verify->parsed()) {
      PlaneModel plane = make_plane(verify_plane);
      if (mode.empty()) mode = plane.finite() ? "exhaustive" : "sampled";
      SuiteConfig cfg;
      cfg.exhaustive = mode == "exhaustive";
      cfg.seed = seed;
      cfg.samples = samples;
      cfg.rational_bound = bound;
      cfg.exec = serial ? Exec::serial : Exec::parallel;
      if (!cfg.exhaustive && seed_opt->count() == 0) {
        std::cerr << "error: --seed is required in sampled mode\n";
        return kExitUsage;
      }
      std::vector<std::string> selected;
      for (const std::string& s : suites) {
        if (s == "all") {
          auto expand = all_suites(plane);
          selected.insert(selected.end(), expand.begin(), expand.end());
        } else {
          selected.push_back(s);
        }
      }
      Report report;
      for (const std::string& s : selected) report.merge(run_suite(plane, s, cfg));
      report.print(std::cout);
      if (!csv_path.empty()) report.write_csv(csv_path);
      if (report.passed()) return kExitPass;
      const CaseResult* first = report.first_failure();
      std::cerr << "FAILED: " << first->suite << "/" << first->case_id << " "
                << first->witness << "\n";
      return kExitFailure;
    }

    if (witness->parsed()) {
      if (!witness_plane.quaternion) {
        std::cerr << "error: witness hunt requires --quaternion\n";
        return kExitUsage;
      }
      PlaneModel plane = make_plane(witness_plane);
      WitnessResult w = find_witnesses(plane, w_seed, w_samples, w_bound);
      if (!w.noncommutative || !w.pappus) {
        std::cerr << "search budget exhausted after " << w.noncomm_tried << "+"
                  << w.pappus_tried << " samples\n";
        return kExitBudget;
      }
      std::filesystem::path dir(w_out);
      if (!std::filesystem::is_directory(dir)) {
        std::cerr << "error: output directory '" << w_out << "' does not exist\n";
        return kExitUsage;
      }
      write_witness_file(plane, w, dir / "witness.txt");
      std::cout << "A   = " << plane.to_string(w.noncommutative->first) << "\n"
                << "C   = " << plane.to_string(w.noncommutative->second) << "\n"
                << "A*C = " << plane.to_string(w.prod_ac) << "\n"
                << "C*A = " << plane.to_string(w.prod_ca) << "\n"
                << "pappus violation: " << describe(plane, *w.pappus) << "\n"
                << "wrote " << (dir / "witness.txt").string() << "\n";
      return kExitPass;
    }
  } catch (const unsupported_operation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const construction_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
