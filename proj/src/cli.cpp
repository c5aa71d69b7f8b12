#include "starcover/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "starcover/bench.hpp"
#include "starcover/error.hpp"
#include "starcover/exact_oracle.hpp"
#include "starcover/formats.hpp"
#include "starcover/instance_gen.hpp"
#include "starcover/lp_engine.hpp"
#include "starcover/mlk_pipeline.hpp"
#include "starcover/mssc_pipeline.hpp"

namespace starcover {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational flag_rational(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw UsageError(std::string("--") + flag + ": not a rational: '" + text + "'");
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  file << text;
}

void emit_instance(const std::string& path, const MetricInstance& instance, std::ostream& out) {
  std::ostringstream text;
  write_instance(text, instance);
  write_text(path, text.str(), out);
}

void emit_cover(const std::string& path, const StarCover& cover, std::ostream& out) {
  if (path.empty()) return;
  std::ostringstream text;
  write_cover(text, cover);
  write_text(path, text.str(), out);
}

void print_report(const StageReport& report, std::ostream& out) {
  for (const auto& [key, value] : report.entries()) out << key << '=' << value << '\n';
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::InvalidArgument ? 2 : 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Star cover approximation toolkit", "starcover"};
  app.require_subcommand(1);
  std::function<int()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance")->require_subcommand(1);
  std::string gen_out;
  std::size_t R = 0, M = 0, N = 0, n_fac = 0, n_cli = 0, dim = 2;
  std::uint64_t seed = 0;
  std::string gen_T = "1";
  auto* gen_mlk = gen->add_subcommand("gap-mlk", "Hard MLkSC family");
  gen_mlk->add_option("--R", R, "groups")->required()->check(CLI::PositiveNumber);
  gen_mlk->add_option("--M", M, "clients on each M-facility")->required()->check(CLI::PositiveNumber);
  gen_mlk->add_option("-o,--output", gen_out, "instance file (stdout if omitted)");
  gen_mlk->callback([&] {
    action = [&] {
      GapMlkInstance gap = gen_gap_mlk(R, M);
      emit_instance(gen_out, gap.instance, out);
      (gen_out.empty() ? err : out) << "k=" << gap.k << '\n';
      return 0;
    };
  });
  auto* gen_mssc = gen->add_subcommand("gap-mssc", "Hard MSSC family");
  gen_mssc->add_option("--N", N, "facilities")->required()->check(CLI::Range(2, 1 << 20));
  gen_mssc->add_option("--T", gen_T, "load bound");
  gen_mssc->add_option("-o,--output", gen_out, "instance file (stdout if omitted)");
  gen_mssc->callback([&] {
    action = [&] {
      emit_instance(gen_out, gen_gap_mssc(N, flag_rational(gen_T, "T")), out);
      return 0;
    };
  });
  auto* gen_rand = gen->add_subcommand("random", "Seeded Euclidean instance");
  gen_rand->add_option("--facilities", n_fac)->required()->check(CLI::PositiveNumber);
  gen_rand->add_option("--clients", n_cli)->required()->check(CLI::PositiveNumber);
  gen_rand->add_option("--dim", dim)->check(CLI::PositiveNumber);
  gen_rand->add_option("--seed", seed);
  gen_rand->add_option("-o,--output", gen_out, "instance file (stdout if omitted)");
  gen_rand->callback([&] {
    action = [&] {
      emit_instance(gen_out, gen_random(n_fac, n_cli, dim, seed), out);
      return 0;
    };
  });

  // solve / exact / lp share these
  std::string input, cover_out, report_out, epsilon = "1/2", T_text, lp_gap = "1/1000";
  std::size_t k = 0;

  auto* solve = app.add_subcommand("solve", "Round the LP into a star cover")->require_subcommand(1);
  auto* solve_mlk = solve->add_subcommand("mlk", "Min-load cover with about k stars");
  solve_mlk->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  solve_mlk->add_option("--epsilon", epsilon, "in (0,1), decimal or p/q");
  solve_mlk->add_option("--lp-gap", lp_gap, "relative gap of the LP binary search");
  solve_mlk->add_option("-i,--input", input)->required();
  solve_mlk->add_option("-o,--output", cover_out, "cover file");
  solve_mlk->add_option("--report", report_out, "report CSV");
  solve_mlk->callback([&] {
    action = [&] {
      MetricInstance inst = load_instance(input);
      RoundingOutcome res = round_mlk(inst, k, flag_rational(epsilon, "epsilon"),
                                      flag_rational(lp_gap, "lp-gap"));
      emit_cover(cover_out, res.cover, out);
      if (!report_out.empty()) write_text(report_out, res.report.to_csv(), out);
      print_report(res.report, out);
      return 0;
    };
  });
  auto* solve_mssc = solve->add_subcommand("mssc", "Few stars with load near T");
  solve_mssc->add_option("--T", T_text)->required();
  solve_mssc->add_option("--epsilon", epsilon, "in (0,1), decimal or p/q");
  solve_mssc->add_option("-i,--input", input)->required();
  solve_mssc->add_option("-o,--output", cover_out, "cover file");
  solve_mssc->add_option("--report", report_out, "report CSV");
  solve_mssc->callback([&] {
    action = [&] {
      MetricInstance inst = load_instance(input);
      RoundingOutcome res = round_mssc(inst, flag_rational(T_text, "T"), flag_rational(epsilon, "epsilon"));
      emit_cover(cover_out, res.cover, out);
      if (!report_out.empty()) write_text(report_out, res.report.to_csv(), out);
      print_report(res.report, out);
      return 0;
    };
  });

  auto* exact = app.add_subcommand("exact", "Exhaustive optimum (small instances)")->require_subcommand(1);
  auto* exact_mlk_cmd = exact->add_subcommand("mlk", "Minimum load with at most k stars");
  exact_mlk_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  exact_mlk_cmd->add_option("-i,--input", input)->required();
  exact_mlk_cmd->add_option("-o,--output", cover_out, "cover file");
  exact_mlk_cmd->callback([&] {
    action = [&] {
      ExactMlkResult res = exact_mlk(load_instance(input), k);
      emit_cover(cover_out, res.cover, out);
      out << "opt_load=" << to_string(res.opt_load) << "\nsize=" << res.cover.size() << '\n';
      return 0;
    };
  });
  auto* exact_mssc_cmd = exact->add_subcommand("mssc", "Fewest stars with load at most T");
  exact_mssc_cmd->add_option("--T", T_text)->required();
  exact_mssc_cmd->add_option("-i,--input", input)->required();
  exact_mssc_cmd->add_option("-o,--output", cover_out, "cover file");
  exact_mssc_cmd->callback([&] {
    action = [&] {
      auto res = exact_mssc(load_instance(input), flag_rational(T_text, "T"));
      if (!res) {
        out << "infeasible\n";
        return 1;
      }
      emit_cover(cover_out, res->cover, out);
      out << "opt_size=" << res->opt_size << '\n';
      return 0;
    };
  });

  auto* lp = app.add_subcommand("lp", "Solve the LP relaxation only")->require_subcommand(1);
  auto* lp_mlk = lp->add_subcommand("mlk", "Least T with SC-LP(T, k) feasible");
  lp_mlk->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  lp_mlk->add_option("--lp-gap", lp_gap, "relative gap of the binary search");
  lp_mlk->add_option("-i,--input", input)->required();
  lp_mlk->callback([&] {
    action = [&] {
      MetricInstance inst = load_instance(input);
      if (k > inst.n_facilities()) throw Error(ErrorCode::InvalidArgument, "k exceeds |F|");
      MlkLpResult res = solve_mlk_lp(inst, k, flag_rational(lp_gap, "lp-gap"));
      out << "T_star=" << to_string(res.T_star) << "\nlp_solves=" << res.lp_solves << '\n';
      for (std::size_t i = 0; i < res.sol.y.size(); ++i) out << "y" << i << '=' << to_string(res.sol.y[i]) << '\n';
      return 0;
    };
  });
  auto* lp_mssc = lp->add_subcommand("mssc", "Least total opening with loads within T");
  lp_mssc->add_option("--T", T_text)->required();
  lp_mssc->add_option("-i,--input", input)->required();
  lp_mssc->callback([&] {
    action = [&] {
      MsscLpResult res = solve_mssc_lp(load_instance(input), flag_rational(T_text, "T"));
      out << "k_star=" << to_string(res.k_star) << '\n';
      for (std::size_t i = 0; i < res.sol.y.size(); ++i) out << "y" << i << '=' << to_string(res.sol.y[i]) << '\n';
      return 0;
    };
  });

  std::string cover_in;
  auto* verify = app.add_subcommand("verify", "Check a cover against size k and load T");
  verify->add_option("-i,--input", input)->required();
  verify->add_option("-c,--cover", cover_in)->required();
  verify->add_option("--k", k)->required();
  verify->add_option("--T", T_text)->required();
  verify->callback([&] {
    action = [&] {
      MetricInstance inst = load_instance(input);
      ValidationReport report = validate_cover(inst, load_cover(cover_in), k, flag_rational(T_text, "T"));
      for (const Violation& v : report.violations) out << v.check << ": " << v.detail << '\n';
      out << (report.ok() ? "ok" : "failed") << '\n';
      return report.ok() ? 0 : 1;
    };
  });

  std::string config, bench_out;
  std::size_t threads = 1;
  auto* bench = app.add_subcommand("bench", "Run a JSON suite and write a CSV report");
  bench->add_option("--config", config)->required();
  bench->add_option("-o,--output", bench_out, "CSV file (stdout if omitted)");
  bench->add_option("--threads", threads)->check(CLI::PositiveNumber);
  bench->callback([&] {
    action = [&] {
      write_text(bench_out, run_suite_file(config, threads), out);
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int cli_main(int argc, char** argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace starcover
