// pathlab: run verification cases, emit plot data and reparametrization tables.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pathlab/cases.hpp"
#include "pathlab/catalog.hpp"
#include "pathlab/config.hpp"
#include "pathlab/curves.hpp"
#include "pathlab/errors.hpp"
#include "pathlab/report.hpp"
#include "pathlab/sample.hpp"

namespace {

enum Exit : int { kPass = 0, kFail = 1, kUsage = 2, kNumeric = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  return out;
}

int exit_for(pathlab::Status s) { return s == pathlab::Status::Pass ? kPass : kFail; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of calculus counterexamples"};
  app.require_subcommand(1);

  std::string config_path;
  bool timings = false;
  app.add_option("--config", config_path, "key=value file with tolerances and grid sizes")->check(CLI::ExistingFile);
  app.add_flag("--timings", timings, "record wall-clock runtime_ms (reports are then not reproducible)");

  auto* list = app.add_subcommand("list", "list cases, catalog entries and curves");

  auto* verify = app.add_subcommand("verify", "run one verification case");
  std::string case_id;
  std::string verify_json;
  verify->add_option("case", case_id, "case id (see `pathlab list`)")->required();
  verify->add_option("--json", verify_json, "write the JSON report to FILE ('-' for stdout)");

  auto* sample_cmd = app.add_subcommand("sample", "tabulate a catalog entry as CSV");
  std::string entry_id;
  std::string sample_out;
  double from = 0.0;
  double to = 0.0;
  std::size_t points = 0;
  bool deriv = false;
  sample_cmd->add_option("entry", entry_id, "catalog entry id")->required();
  sample_cmd->add_option("--from", from, "left end")->required();
  sample_cmd->add_option("--to", to, "right end")->required();
  sample_cmd->add_option("--points", points, "number of rows (>= 2)")->required();
  sample_cmd->add_flag("--deriv", deriv, "add an f_prime column");
  sample_cmd->add_option("--out", sample_out, "CSV output file")->required();

  auto* reparam = app.add_subcommand("reparam", "tabulate phi with gamma(t) = eta(phi(t))");
  std::string curve_a;
  std::string curve_b;
  std::size_t reparam_points = 0;
  std::string reparam_out;
  reparam->add_option("curveA", curve_a, "source curve id")->required();
  reparam->add_option("curveB", curve_b, "target curve id")->required();
  reparam->add_option("--points", reparam_points, "number of rows (>= 2)")->required();
  reparam->add_option("--out", reparam_out, "CSV output file")->required();

  auto* report = app.add_subcommand("report", "run every case");
  bool all = false;
  std::string report_json;
  report->add_flag("--all", all, "run all registered cases")->required();
  report->add_option("--json", report_json, "write the JSON report to FILE ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    const pathlab::Config config = config_path.empty() ? pathlab::Config{} : pathlab::load_config(config_path);
    const auto& catalog = pathlab::catalog::Catalog::standard();

    if (*list) {
      std::cout << "cases:\n";
      for (const auto& c : pathlab::case_registry()) std::cout << "  " << c.id << "  " << c.summary << "\n";
      std::cout << "entries:\n";
      for (const auto& id : catalog.entry_ids()) std::cout << "  " << id << "\n";
      for (const auto& id : catalog.bivariate_ids()) std::cout << "  " << id << " (x, y)\n";
      std::cout << "curves:\n";
      for (const auto& id : catalog.curve_ids()) std::cout << "  " << id << "\n";
      return kPass;
    }

    if (*verify) {
      const auto r = pathlab::run_case(case_id, config, timings);
      if (!verify_json.empty()) write_file(verify_json, pathlab::to_json(r));
      if (verify_json != "-") std::cout << pathlab::to_text(r);
      return exit_for(r.status);
    }

    if (*sample_cmd) {
      const auto& entry = catalog.entry(entry_id);
      pathlab::numdiff::StepPolicy policy;
      policy.scale = config.fd_step_scale;
      std::vector<pathlab::SampleRow> rows;
      try {
        rows = pathlab::sample(entry, from, to, points, deriv, policy);
      } catch (const pathlab::PreconditionError& e) {
        throw UsageError(e.what());
      }
      auto out = open_output(sample_out);
      pathlab::write_csv(out, rows, deriv);
      return kPass;
    }

    if (*reparam) {
      pathlab::curves::ReparamOptions options;
      options.tol = config.residual_tol;
      options.injectivity_grid = config.injectivity_grid;
      const auto table =
          pathlab::curves::reparametrize(catalog.curve(curve_a), catalog.curve(curve_b), reparam_points, options);
      auto out = open_output(reparam_out);
      pathlab::write_reparam_csv(out, table);
      if (!table.violations.empty()) {
        std::cerr << "phi' violations at " << table.violations.size() << " rows\n";
        return kFail;
      }
      return kPass;
    }

    if (*report && all) {
      const auto reports = pathlab::run_all(config, timings);
      if (!report_json.empty()) write_file(report_json, pathlab::to_json(reports));
      bool ok = true;
      for (const auto& r : reports) {
        if (report_json != "-") std::cout << pathlab::to_text(r);
        ok = ok && r.status == pathlab::Status::Pass;
      }
      return ok ? kPass : kFail;
    }
  } catch (const pathlab::curves::TracesDifferError& e) {
    std::cerr << "traces differ: " << e.what() << "\n";
    return kFail;
  } catch (const pathlab::PreconditionError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kFail;
  } catch (const pathlab::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const pathlab::UnknownIdError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const pathlab::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kUsage;
  } catch (const pathlab::ConfigError& e) {
    std::cerr << "config: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
