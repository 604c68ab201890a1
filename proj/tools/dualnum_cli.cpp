// dualnum: reproduces the worked examples and runs spline workflows on CSV
// data. Exit codes: 0 success, 1 validation error, 2 numerical failure
// (including a failed --check).

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dualnum/commands.hpp"
#include "dualnum/csv.hpp"
#include "dualnum/errors.hpp"
#include "dualnum/fixtures.hpp"

namespace {

using namespace dualnum;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

struct GlobalOptions {
  bool json = false;
  bool check = false;
  int precision = 4;
};

std::string format_number(double v, int precision) {
  char buf[64];
  if (v != 0.0 && std::abs(v) < 1e-3) {
    std::snprintf(buf, sizeof buf, "%.*e", precision, v);
  } else {
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  }
  return buf;
}

void print_table(const std::vector<ResultRecord>& records, int precision) {
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %16s %16s %16s", "label", "value", "first", "second");
  std::cout << line << '\n';
  for (const auto& r : records) {
    std::snprintf(line, sizeof line, "%-16s %16s %16s %16s", r.label.c_str(),
                  format_number(r.value, precision).c_str(),
                  format_number(r.first, precision).c_str(),
                  format_number(r.second, precision).c_str());
    std::cout << line << '\n';
  }
}

void print_checks(const std::vector<CheckCell>& checks) {
  for (const auto& c : checks) {
    char line[256];
    std::snprintf(line, sizeof line, "%s  %-24s expected %-12.6g actual %-14.8g tol %.0e%s",
                  c.passed ? "PASS" : "FAIL",
                  (c.label + "." + to_string(c.component)).c_str(), c.expected, c.actual,
                  c.tolerance, c.relative ? " (rel)" : "");
    std::cout << line << '\n';
  }
}

int emit(const GlobalOptions& opts, const std::vector<ResultRecord>& records,
         const std::vector<ReferenceCell>& reference) {
  std::vector<CheckCell> checks;
  if (opts.check) checks = check_records(records, reference);
  const bool passed = all_passed(checks);
  if (opts.json) {
    std::cout << results_document(records, passed ? "ok" : "check_failed", checks).dump(2)
              << '\n';
  } else {
    print_table(records, opts.precision);
    if (opts.check) print_checks(checks);
  }
  return passed ? kExitOk : kExitNumerical;
}

int report_error(const GlobalOptions& opts, const std::exception& e, int code) {
  std::cerr << "error: " << e.what() << '\n';
  if (opts.json) {
    auto doc = results_document({}, "error");
    doc["error"] = e.what();
    std::cout << doc.dump(2) << '\n';
  }
  return code;
}

void require_fixture_inputs(bool overridden, const char* flags) {
  if (overridden) {
    throw ValidationError(std::string("--check compares against the bundled fixture; drop ") +
                          flags);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Second-order dual-number derivatives through implicit equations, "
               "splines and ODE solutions"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_flag("--json", opts.json, "Emit machine-readable JSON");
  app.add_flag("--check", opts.check, "Compare fixture output against the published values");
  app.add_option("--precision", opts.precision, "Digits after the decimal point in tables")
      ->check(CLI::Range(0, 17));

  auto* nr = app.add_subcommand("nr-example1", "Implicit function u(x) and compositions");
  std::string method = "newton";
  nr->add_option("--method", method, "newton or halley")
      ->check(CLI::IsMember({"newton", "halley"}));

  auto* mech = app.add_subcommand("mechanism", "Output angle of the RRRCR linkage");
  double mech_x0 = 2.0;
  std::string mech_fn = "sin2";
  double mech_phi0 = kMechanismPhiGuess;
  auto* mech_x0_opt = mech->add_option("--x0", mech_x0, "Input angle");
  auto* mech_fn_opt = mech->add_option("--fn", mech_fn, "sin2 (f = 2 sin^2 x) or identity")
                          ->check(CLI::IsMember({"sin2", "identity"}));
  auto* mech_phi0_opt = mech->add_option("--phi0", mech_phi0, "Initial guess for phi");

  auto* spl = app.add_subcommand("spline", "Dual natural cubic spline evaluation");
  std::string spl_csv;
  double spl_at = 1.75;
  auto* spl_csv_opt = spl->add_option("--csv", spl_csv, "x,y data (default: bundled ln x table)");
  auto* spl_at_opt = spl->add_option("--at", spl_at, "Evaluation point");

  auto* dif = app.add_subcommand("diffusivity", "Thermal diffusivity from an amplitude curve");
  std::string dif_csv;
  double thickness = fixtures::kSampleThickness;
  double dif_x0 = 10.0;
  int dif_iters = 50;
  auto* dif_csv_opt =
      dif->add_option("--csv", dif_csv, "frequency,amplitude data (default: bundled synthetic)");
  auto* thickness_opt = dif->add_option("--thickness", thickness, "Sample thickness in metres");
  dif->add_option("--x0", dif_x0, "Starting frequency");
  dif->add_option("--iters", dif_iters, "Newton iterations");

  auto* duf = app.add_subcommand("duffing", "Dual RK4 on the Duffing oscillator");
  double duf_t = 1.0;
  int duf_steps = 100;
  auto* duf_t_opt = duf->add_option("--t", duf_t, "Evaluation time");
  auto* duf_steps_opt = duf->add_option("--steps", duf_steps, "RK4 steps from t0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (nr->parsed()) {
      const auto m = method == "halley" ? RootMethod::halley : RootMethod::newton;
      return emit(opts, cmd_nr_example1(m), fixtures::nr_example1_reference());
    }
    if (mech->parsed()) {
      const auto fn = mech_fn == "identity" ? MechanismFn::identity : MechanismFn::two_sin_squared;
      auto reference = fixtures::mechanism_reference();
      const bool overridden = (mech_x0_opt->count() > 0 && mech_x0 != 2.0) ||
                              (mech_fn_opt->count() > 0 && fn != MechanismFn::two_sin_squared) ||
                              (mech_phi0_opt->count() > 0 && mech_phi0 != kMechanismPhiGuess);
      if (overridden) {
        // Only the root condition holds for arbitrary inputs.
        std::erase_if(reference, [](const ReferenceCell& c) { return c.label != "loop_residual"; });
      }
      return emit(opts, cmd_mechanism(mech_x0, fn, mech_phi0), reference);
    }
    if (spl->parsed()) {
      if (opts.check) {
        require_fixture_inputs(spl_csv_opt->count() > 0 || (spl_at_opt->count() > 0 && spl_at != 1.75),
                               "--csv/--at");
      }
      const bool bundled = spl_csv.empty();
      const SplineData data = bundled ? fixtures::log_table() : load_spline_csv(spl_csv);
      return emit(opts, cmd_spline(data, spl_at, bundled ? "log-table" : spl_csv),
                  fixtures::spline_reference());
    }
    if (dif->parsed()) {
      if (opts.check) {
        require_fixture_inputs(dif_csv_opt->count() > 0 || thickness_opt->count() > 0,
                               "--csv/--thickness");
      }
      const bool bundled = dif_csv.empty();
      const SplineData data = bundled ? fixtures::synthetic_amplitude() : load_spline_csv(dif_csv);
      return emit(opts,
                  cmd_diffusivity(data, thickness, dif_x0, dif_iters,
                                  bundled ? "synthetic-amplitude" : dif_csv),
                  fixtures::diffusivity_reference());
    }
    if (duf->parsed()) {
      if (opts.check) {
        require_fixture_inputs((duf_t_opt->count() > 0 && duf_t != 1.0) ||
                                   (duf_steps_opt->count() > 0 && duf_steps != 100),
                               "--t/--steps");
      }
      return emit(opts, cmd_duffing(duf_t, duf_steps), fixtures::duffing_reference());
    }
  } catch (const ValidationError& e) {
    return report_error(opts, e, kExitValidation);
  } catch (const NumericalError& e) {
    return report_error(opts, e, kExitNumerical);
  } catch (const std::exception& e) {
    return report_error(opts, e, kExitNumerical);
  }
  return kExitValidation;
}
