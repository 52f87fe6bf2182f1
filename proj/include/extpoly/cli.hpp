#pragma once

// Command-line driver. Exit codes: 0 success, 1 negative answer
// (non-member, failed comparison or check), 2 undecided membership,
// 64 malformed input, 65 numerical failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "calderon.hpp"
#include "extremal.hpp"
#include "functional.hpp"
#include "io.hpp"
#include "reproduce.hpp"
#include "sos.hpp"
#include "toeplitz.hpp"

namespace extpoly::cli {

inline constexpr int kExitNegative = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitNumerical = 65;

inline io::json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return io::json::parse(text);
  } catch (const io::json::parse_error& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal nonnegative trigonometric and power polynomials", "extpoly"};
  app.require_subcommand(1);

  std::string phi_path, poly_path, measure_path, zeros_path, compare_path, example;
  double tol = 1e-9;
  int grid = 64;
  int max_iters = 5000;
  bool normalize = false;

  auto* build = app.add_subcommand("build-matrix", "Toeplitz matrix A of a Phi table");
  build->add_option("--phi", phi_path, "Phi table JSON")->required();

  auto* face = app.add_subcommand("face", "face of Q supported by L_phi");
  face->add_option("--phi", phi_path, "Phi table JSON")->required();
  face->add_option("--tol", tol, "relative eigenvalue tolerance");

  auto* zeros = app.add_subcommand("zeros", "zeros of a nonnegative trigonometric polynomial");
  zeros->add_option("--poly", poly_path, "trig polynomial JSON")->required();
  zeros->add_option("--grid", grid, "seed grid points per axis");

  auto* rank = app.add_subcommand("rank-test", "zero/derivative rank certificate of extremality");
  rank->add_option("--poly", poly_path, "trig polynomial JSON")->required();
  rank->add_option("--zeros", zeros_path, "zeros JSON (computed when absent)");
  rank->add_option("--grid", grid, "seed grid points per axis when computing zeros");
  rank->add_option("--tol", tol, "relative singular value cutoff");

  auto* cal = app.add_subcommand("calderon", "Calderon transform to a power polynomial");
  cal->add_option("--poly", poly_path, "trig polynomial JSON")->required();
  cal->add_option("--compare", compare_path, "power polynomial JSON to compare against");
  cal->add_option("--tol", tol, "relative tolerance for --compare");

  auto* lfc = app.add_subcommand("lf", "evaluate L_phi(f)");
  lfc->add_option("--poly", poly_path, "trig polynomial JSON")->required();
  auto* phi_opt = lfc->add_option("--phi", phi_path, "Phi table JSON");
  auto* mu_opt = lfc->add_option("--measure", measure_path, "atomic measure JSON");
  lfc->add_flag("--normalize", normalize, "rescale the measure to total weight (2pi)^3");
  phi_opt->excludes(mu_opt);
  mu_opt->excludes(phi_opt);

  auto* qm = app.add_subcommand("q-member", "decide membership in Q with certificates");
  qm->add_option("--poly", poly_path, "trig polynomial JSON")->required();
  qm->add_option("--max-iters", max_iters, "alternating projection iterations");
  qm->add_option("--tol", tol, "projection gap tolerance");

  auto* rep = app.add_subcommand("reproduce", "run a worked example end to end");
  rep->add_option("name", example, "example1 | example2 | example3")
      ->required()
      ->check(CLI::IsMember({"example1", "example2", "example3"}));

  std::vector<std::string> argv_store{"extpoly"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*build) {
      out << io::to_json(build_matrix(io::phi_from_json(read_json_file(phi_path)))).dump() << "\n";
      return 0;
    }
    if (*face) {
      out << io::to_json(face_of_q(io::phi_from_json(read_json_file(phi_path)), tol)).dump() << "\n";
      return 0;
    }
    if (*zeros) {
      const auto f = io::trig_from_json(read_json_file(poly_path));
      out << io::json{{"zeros", io::to_json(find_zeros(f, grid))}}.dump() << "\n";
      return 0;
    }
    if (*rank) {
      const auto f = io::trig_from_json(read_json_file(poly_path));
      const auto zs = zeros_path.empty() ? find_zeros(f, grid) : io::zeros_from_json(read_json_file(zeros_path));
      out << io::to_json(extremality_rank_test(f, zs, tol)).dump() << "\n";
      return 0;
    }
    if (*cal) {
      const auto img = calderon(io::trig_from_json(read_json_file(poly_path)));
      out << io::to_json(img.power).dump() << "\n";
      if (!compare_path.empty()) {
        const auto target = io::power_from_json(read_json_file(compare_path));
        const auto prop = proportional(img.power, target, tol);
        err << "proportional: " << (prop.is_prop ? "true" : "false") << " ratio: " << prop.ratio << "\n";
        if (!prop.is_prop || !(prop.ratio > 0)) return kExitNegative;
      }
      return 0;
    }
    if (*lfc) {
      const auto f = io::trig_from_json(read_json_file(poly_path));
      if (!measure_path.empty()) {
        auto mu = io::measure_from_json(read_json_file(measure_path));
        if (normalize) mu = mu.normalized();
        out << io::json{{"re", lf_via_measure(mu, f)}, {"im", 0.0}}.dump() << "\n";
        return 0;
      }
      if (phi_path.empty()) throw InputError("lf needs --phi or --measure");
      const cplx v = lf(io::phi_from_json(read_json_file(phi_path)), f);
      out << io::json{{"re", v.real()}, {"im", v.imag()}}.dump() << "\n";
      return 0;
    }
    if (*qm) {
      const auto f = io::trig_from_json(read_json_file(poly_path));
      QOptions opt;
      opt.max_iters = max_iters;
      opt.tol = tol;
      const auto res = q_membership(f, opt);
      out << io::to_json(res).dump() << "\n";
      switch (res.status) {
        case QStatus::member: return 0;
        case QStatus::non_member: return kExitNegative;
        case QStatus::unknown: return kExitUnknown;
      }
    }
    if (*rep) {
      const auto report = example == "example1"   ? reproduce::example1()
                          : example == "example2" ? reproduce::example2()
                                                  : reproduce::example3();
      out << report.text();
      return report.passed() ? 0 : kExitNegative;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const io::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace extpoly::cli
