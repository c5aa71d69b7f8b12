#include "starcover/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "starcover/error.hpp"
#include "starcover/exact_oracle.hpp"
#include "starcover/formats.hpp"
#include "starcover/instance_gen.hpp"
#include "starcover/mlk_pipeline.hpp"
#include "starcover/mssc_pipeline.hpp"

namespace starcover {

namespace {

using nlohmann::json;

struct RunSpec {
  std::string id;
  json generator;
  std::string mode;
  std::vector<Rational> epsilons;
  std::optional<std::size_t> k;
  std::optional<Rational> T;
  std::optional<Rational> T_factor;
  bool exact = true;
};

[[noreturn]] void bad_config(const std::string& what) {
  throw Error(ErrorCode::Parse, "bench config: " + what);
}

Rational json_rational(const json& v, const std::string& field) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number()) return parse_rational(v.dump());
  bad_config(field + " must be a number or a rational string");
}

std::size_t json_count(const json& obj, const char* field) {
  if (!obj.contains(field) || !obj[field].is_number_unsigned()) {
    bad_config(std::string("'") + field + "' must be a non-negative integer");
  }
  return obj[field].get<std::size_t>();
}

std::vector<RunSpec> parse_config(const std::string& text) {
  std::vector<RunSpec> specs;
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return specs;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    bad_config(e.what());
  }
  if (!root.is_object() || !root.contains("runs") || !root["runs"].is_array()) {
    bad_config("expected an object with a 'runs' array");
  }
  std::size_t index = 0;
  for (const json& run : root["runs"]) {
    if (!run.is_object()) bad_config("every run must be an object");
    RunSpec spec;
    spec.id = run.value("id", "run" + std::to_string(index));
    if (!run.contains("generator") || !run["generator"].is_object()) {
      bad_config(spec.id + ": missing generator");
    }
    spec.generator = run["generator"];
    spec.mode = run.value("mode", "");
    if (spec.mode != "mlk" && spec.mode != "mssc") bad_config(spec.id + ": mode must be mlk or mssc");
    if (!run.contains("epsilon")) bad_config(spec.id + ": missing epsilon");
    const json& eps = run["epsilon"];
    if (eps.is_array()) {
      for (const json& e : eps) spec.epsilons.push_back(json_rational(e, "epsilon"));
    } else {
      spec.epsilons.push_back(json_rational(eps, "epsilon"));
    }
    if (run.contains("k")) spec.k = json_count(run, "k");
    if (run.contains("T")) spec.T = json_rational(run["T"], "T");
    if (run.contains("T_exact_factor")) spec.T_factor = json_rational(run["T_exact_factor"], "T_exact_factor");
    spec.exact = run.value("exact", true);
    specs.push_back(std::move(spec));
    ++index;
  }
  return specs;
}

struct BuiltInstance {
  MetricInstance instance;
  std::optional<std::size_t> k;
  std::optional<Rational> T;
};

BuiltInstance build_instance(const json& g) {
  const std::string kind = g.value("kind", "");
  if (kind == "gap-mlk") {
    GapMlkInstance gap = gen_gap_mlk(json_count(g, "R"), json_count(g, "M"));
    return {std::move(gap.instance), gap.k, std::nullopt};
  }
  if (kind == "gap-mssc") {
    const Rational T = g.contains("T") ? json_rational(g["T"], "T") : Rational(1);
    return {gen_gap_mssc(json_count(g, "N"), T), std::nullopt, T};
  }
  if (kind == "random") {
    const std::size_t dim = g.contains("dim") ? json_count(g, "dim") : 2;
    return {gen_random(json_count(g, "facilities"), json_count(g, "clients"), dim,
                       g.contains("seed") ? g["seed"].get<std::uint64_t>() : 0),
            std::nullopt, std::nullopt};
  }
  if (kind == "file") return {load_instance(g.value("path", "")), std::nullopt, std::nullopt};
  throw Error(ErrorCode::InvalidArgument, "unknown generator kind '" + kind + "'");
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

struct Row {
  std::string instance, mode, epsilon, lp_value, size, load, size_bound, load_bound, exact_opt,
      wall_ms, error;

  std::string line() const {
    const std::string* fields[] = {&instance, &mode,       &epsilon,    &lp_value,
                                   &size,     &load,       &size_bound, &load_bound,
                                   &exact_opt, &wall_ms,   &error};
    std::string out = csv_field(*fields[0]);
    for (std::size_t f = 1; f < std::size(fields); ++f) out += ',' + csv_field(*fields[f]);
    return out;
  }
};

template <class Solve>
void timed_row(Row& r, const char* lp_key, Solve solve) {
  const auto start = std::chrono::steady_clock::now();
  try {
    RoundingOutcome out = solve();
    r.lp_value = *out.report.get(lp_key);
    r.size = *out.report.get("size");
    r.load = *out.report.get("load");
    r.size_bound = *out.report.get("size_bound");
    r.load_bound = *out.report.get("load_bound");
  } catch (const std::exception& ex) {
    r.error = ex.what();
  }
  const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", took.count());
  r.wall_ms = buf;
}

std::vector<std::string> execute(const RunSpec& spec) {
  std::vector<Row> rows(spec.epsilons.size());
  for (std::size_t e = 0; e < rows.size(); ++e) {
    rows[e].instance = spec.id;
    rows[e].mode = spec.mode;
    rows[e].epsilon = to_string(spec.epsilons[e]);
  }
  auto fail_all = [&](const std::string& what) {
    for (Row& r : rows) r.error = what;
  };

  try {
    BuiltInstance built = build_instance(spec.generator);
    const MetricInstance& inst = built.instance;
    const bool exact_ok = spec.exact && exact_search_allowed(inst.n_facilities(), inst.n_clients());

    if (spec.mode == "mlk") {
      const std::optional<std::size_t> k = spec.k ? spec.k : built.k;
      if (!k) throw Error(ErrorCode::InvalidArgument, "mlk run needs k");
      std::string exact_opt;
      if (exact_ok) exact_opt = to_string(exact_mlk(inst, *k).opt_load);
      for (std::size_t e = 0; e < rows.size(); ++e) {
        Row& r = rows[e];
        r.exact_opt = exact_opt;
        timed_row(r, "T_star", [&] { return round_mlk(inst, *k, spec.epsilons[e]); });
      }
    } else {
      std::optional<Rational> T = spec.T ? spec.T : built.T;
      if (spec.T_factor) {
        T = *spec.T_factor * exact_mlk(inst, inst.n_facilities()).opt_load;
      }
      if (!T) throw Error(ErrorCode::InvalidArgument, "mssc run needs T or T_exact_factor");
      std::string exact_opt;
      if (exact_ok) {
        auto opt = exact_mssc(inst, *T);
        exact_opt = opt ? std::to_string(opt->opt_size) : "infeasible";
      }
      for (std::size_t e = 0; e < rows.size(); ++e) {
        Row& r = rows[e];
        r.exact_opt = exact_opt;
        timed_row(r, "k_star", [&] { return round_mssc(inst, *T, spec.epsilons[e]); });
      }
    }
  } catch (const std::exception& ex) {
    fail_all(ex.what());
  }

  std::vector<std::string> lines;
  for (const Row& r : rows) lines.push_back(r.line());
  return lines;
}

}  // namespace

std::string run_suite(const std::string& config_json, std::size_t threads) {
  const std::vector<RunSpec> specs = parse_config(config_json);
  std::vector<std::vector<std::string>> results(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < specs.size(); r = next++) results[r] = execute(specs[r]);
  };
  const std::size_t n_workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(specs.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < n_workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::string out = std::string(kBenchHeader) + "\n";
  for (const auto& lines : results) {
    for (const std::string& line : lines) out += line + "\n";
  }
  return out;
}

std::string run_suite_file(const std::string& path, std::size_t threads) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return run_suite(text.str(), threads);
}

}  // namespace starcover
