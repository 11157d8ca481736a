// Command-line front end: polarization, potential profiles, optimization,
// transports, exact polynomials, asymptotics, energies and pair checks.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polar/io.hpp"
#include "polar/polar.hpp"

namespace {

using nlohmann::json;
using namespace polar;

// Raised for inconsistent option combinations; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigSource {
  std::string file;
  std::size_t equally_spaced = 0;
  std::string units = "radians";

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", file, "configuration file (JSON array or one angle per line)");
    cmd->add_option("--equally-spaced", equally_spaced, "use n equally spaced points");
    cmd->add_option("--units", units, "angle units of the config file")
        ->check(CLI::IsMember({"radians", "turns"}));
  }

  Configuration load() const {
    if (!file.empty() && equally_spaced > 0)
      throw UsageError("give either --config or --equally-spaced, not both");
    if (equally_spaced > 0) return polar::equally_spaced(equally_spaced);
    if (file.empty()) throw UsageError("one of --config or --equally-spaced is required");
    return load_configuration(file, units == "turns" ? AngleUnits::turns : AngleUnits::radians);
  }
};

json arc_minima_json(const std::vector<ArcMinimum>& minima) {
  json out = json::array();
  for (const auto& m : minima) out.push_back({{"arc", m.arc_index}, {"angle", m.angle}, {"value", m.value}});
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete potentials and max-min polarization on the unit circle"};
  app.require_subcommand(1);

  std::string kernel_spec;
  ConfigSource source;

  auto* pol = app.add_subcommand("polarization", "minimum of the potential over the circle");
  pol->add_option("--kernel", kernel_spec, "riesz:<s> | log | power:<alpha>")->required();
  source.attach(pol);

  int resolution = 360;
  auto* prof = app.add_subcommand("profile", "potential on a uniform angle grid (CSV)");
  prof->add_option("--kernel", kernel_spec)->required();
  prof->add_option("--resolution", resolution)->check(CLI::Range(2, 100000000));
  source.attach(prof);

  std::size_t opt_n = 0;
  OptimizeOptions opt_opts;
  auto* opt = app.add_subcommand("optimize", "maximize polarization over n-point configurations");
  opt->add_option("--kernel", kernel_spec)->required();
  opt->add_option("--n", opt_n)->required()->check(CLI::Range(1, 4096));
  opt->add_option("--restarts", opt_opts.restarts)->check(CLI::Range(1, 100000));
  opt->add_option("--seed", opt_opts.seed);
  opt->add_option("--max-iters", opt_opts.max_iters)->check(CLI::Range(0, 100000000));
  opt->add_option("--tol", opt_opts.tol)->check(CLI::PositiveNumber);

  std::string source_file, target_file, curve_file;
  int grid = 101;
  auto* tr = app.add_subcommand("transport", "gap-system transport plan between configurations");
  tr->add_option("--source", source_file)->required();
  tr->add_option("--target", target_file, "defaults to equally spaced");
  tr->add_option("--units", source.units)->check(CLI::IsMember({"radians", "turns"}));
  tr->add_option("--min-curve", curve_file, "write t,h CSV of the homotopy min-curve");
  tr->add_option("--kernel", kernel_spec, "kernel for --min-curve");
  tr->add_option("--grid", grid)->check(CLI::Range(2, 1000000));

  unsigned exact_m = 0;
  bool exact_json = false;
  auto* ex = app.add_subcommand("exact", "closed-form polarization polynomial for s = 2m");
  ex->add_option("--m", exact_m)->required()->check(CLI::Range(1, 64));
  ex->add_flag("--json", exact_json);

  double s_value = 0.0;
  std::vector<long> n_list;
  auto* as = app.add_subcommand("asympt", "numeric polarization vs dominant term (CSV)");
  as->add_option("--s", s_value)->required()->check(CLI::NonNegativeNumber);
  as->add_option("--n", n_list)->required()->delimiter(',')->check(CLI::Range(1L, 1L << 20));

  auto* en = app.add_subcommand("energy", "equally spaced energies and the energy identity (CSV)");
  en->add_option("--s", s_value)->required()->check(CLI::PositiveNumber);
  en->add_option("--n", n_list)->required()->delimiter(',')->check(CLI::Range(1L, 1L << 20));

  double z1 = 0.0, z2 = 0.0, eps = 0.0;
  std::string pairs_file;
  int check_samples = 1000;
  auto* ck = app.add_subcommand("check", "pair-move inequality checker");
  ck->add_option("--kernel", kernel_spec)->required();
  auto* z1_opt = ck->add_option("--z1", z1);
  auto* z2_opt = ck->add_option("--z2", z2);
  auto* eps_opt = ck->add_option("--eps", eps);
  ck->add_option("--pairs", pairs_file, "CSV with rows z1,z2,eps");
  ck->add_option("--samples", check_samples)->check(CLI::Range(1, 100000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*pol) {
      const Kernel k = parse_kernel(kernel_spec);
      const PolarizationResult r = polarization(k, source.load());
      print_json({{"kernel", k.label()},
                  {"value", r.value},
                  {"witnesses", r.witnesses},
                  {"per_arc_minima", arc_minima_json(r.per_arc_minima)}});
    } else if (*prof) {
      const Kernel k = parse_kernel(kernel_spec);
      std::cout << "angle,value\n";
      for (const auto& row : potential_profile(k, source.load(), resolution))
        std::cout << format_real(row.angle) << ',' << format_real(row.value) << '\n';
    } else if (*opt) {
      const Kernel k = parse_kernel(kernel_spec);
      const OptimizeResult r = maximize_polarization(k, opt_n, opt_opts);
      json restarts = json::array();
      for (const auto& rec : r.per_restart)
        restarts.push_back({{"start_gaps", rec.start_gaps},
                            {"final_value", rec.final_value},
                            {"iterations", rec.iterations}});
      print_json({{"kernel", k.label()},
                  {"n", opt_n},
                  {"seed", r.seed},
                  {"best_value", r.best_value},
                  {"best_config", configuration_to_json(r.best_config)},
                  {"best_gaps", r.best_config.gaps()},
                  {"converged_to_equal_spacing", r.converged_to_equal_spacing},
                  {"per_restart", restarts}});
    } else if (*tr) {
      const AngleUnits units = source.units == "turns" ? AngleUnits::turns : AngleUnits::radians;
      const Configuration src = load_configuration(source_file, units);
      const bool to_equal = target_file.empty();
      const Configuration tgt = to_equal ? equally_spaced(src.size()) : load_configuration(target_file, units);
      const TransportPlan plan = solve_transport(src, tgt);
      if (!curve_file.empty()) {
        if (kernel_spec.empty()) throw UsageError("--min-curve needs --kernel");
        for (double g : tgt.gaps())
          if (std::abs(g - kTwoPi / tgt.size()) > 1e-10)
            throw Error("invalid-parameter", "--min-curve needs an equally spaced target");
        std::ofstream out(curve_file);
        if (!out) throw Error("io-error", "cannot write '" + curve_file + "'");
        out << "t,h\n";
        for (const auto& p : min_curve(parse_kernel(kernel_spec), src, plan, grid))
          out << format_real(p.t) << ',' << format_real(p.h) << '\n';
      }
      print_json(plan_to_json(plan));
    } else if (*ex) {
      const ExactPolynomial poly = exact_polarization_polynomial(exact_m);
      if (exact_json) {
        json terms = json::array();
        for (const auto& [p, c] : poly.terms())
          terms.push_back({{"power", p}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
        print_json({{"m", exact_m}, {"terms", terms}});
      } else {
        std::cout << poly.to_string() << '\n';
      }
    } else if (*as) {
      const Kernel k = riesz_kernel(s_value > 0.0 ? s_value : 1.0);
      std::cout << "n,numeric,dominant,ratio\n";
      for (long n : n_list) {
        // s = 0 is the constant kernel: the potential is n everywhere.
        const double numeric =
            s_value > 0.0 ? polarization(k, equally_spaced(static_cast<std::size_t>(n))).value
                          : static_cast<double>(n);
        const double dom = dominant_term(s_value, n);
        std::cout << n << ',' << format_real(numeric) << ',' << format_real(dom) << ','
                  << (dom != 0.0 ? format_real(numeric / dom) : std::string("nan")) << '\n';
      }
    } else if (*en) {
      const Kernel k = riesz_kernel(s_value);
      std::cout << "n,s,energy,polarization_via_energy,polarization_numeric\n";
      for (long n : n_list) {
        const double e = n >= 2 ? energy_equally_spaced(s_value, n) : 0.0;
        std::cout << n << ',' << format_real(s_value) << ',' << format_real(e) << ','
                  << format_real(polarization_via_energy(s_value, n)) << ','
                  << format_real(polarization(k, equally_spaced(static_cast<std::size_t>(n))).value)
                  << '\n';
      }
    } else if (*ck) {
      const Kernel k = parse_kernel(kernel_spec);
      struct Instance { double z1, z2, eps; };
      std::vector<Instance> instances;
      const bool single = z1_opt->count() + z2_opt->count() + eps_opt->count() > 0;
      if (single && !pairs_file.empty()) throw UsageError("give either --pairs or --z1/--z2/--eps");
      if (!pairs_file.empty()) {
        std::ifstream in(pairs_file);
        if (!in) throw Error("io-error", "cannot open '" + pairs_file + "'");
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
          if (line.empty()) continue;
          std::vector<std::string> cells;
          std::stringstream ss(line);
          for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
          if (cells.size() != 3) throw Error("parse-error", "pairs rows need z1,z2,eps");
          try {
            instances.push_back({parse_real(cells[0]), parse_real(cells[1]), parse_real(cells[2])});
          } catch (const Error&) {
            if (!first) throw;  // header row
          }
          first = false;
        }
      } else {
        if (z1_opt->count() == 0 || z2_opt->count() == 0 || eps_opt->count() == 0)
          throw UsageError("check needs --z1, --z2 and --eps (or --pairs)");
        instances.push_back({z1, z2, eps});
      }
      json out = json::array();
      bool ok = true;
      for (const auto& in : instances) {
        const InequalityReport r = check_pair_inequality(k, in.z1, in.z2, in.eps, check_samples);
        ok = ok && r.violations == 0;
        out.push_back({{"z1", in.z1},
                       {"z2", in.z2},
                       {"eps", in.eps},
                       {"samples_checked", r.samples_checked},
                       {"violations", r.violations},
                       {"max_violation", r.max_violation},
                       {"min_margin", r.min_margin}});
      }
      print_json(out);
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const polar::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
