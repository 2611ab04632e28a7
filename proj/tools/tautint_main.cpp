#include <atomic>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tautint/secant.hpp"
#include "tautint/universal.hpp"
#include "tautint/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tautint;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitConsistency = 3;
constexpr int kMaxOrder = 24;

struct GridRange {
  long lo = 0;
  long hi = 0;
};

GridRange parse_range(const std::string& text) {
  const auto sep = text.find("..");
  GridRange r;
  try {
    if (sep == std::string::npos) {
      r.lo = r.hi = std::stol(text);
    } else {
      r.lo = std::stol(text.substr(0, sep));
      r.hi = std::stol(text.substr(sep + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected an integer or a..b, got '" + text + "'");
  }
  if (r.hi < r.lo) throw CLI::ValidationError("range", "empty range '" + text + "'");
  return r;
}

ordered_json compute_record(UniversalEngine& engine, int e, int f, long d, long g) {
  const SecantProblem problem = validate_problem(e, f, d, g);
  const Rational count = secant_count(engine, problem);
  if (!count.is_integer()) {
    throw ConsistencyError("count " + count.str() + " is not an integer on a zero-dimensional problem");
  }
  ordered_json j;
  j["e"] = problem.e;
  j["f"] = problem.f;
  j["d"] = problem.d;
  j["g"] = problem.g;
  j["r"] = problem.r;
  j["expected_dim"] = expected_dimension(problem.e, problem.f, problem.r);
  j["count"] = count.str();
  j["routes_agree"] = true;  // secant_count throws otherwise
  j["warnings"] = problem.warnings;
  return j;
}

std::string csv_row(const ordered_json& record) {
  return std::to_string(record["e"].get<int>()) + "," + std::to_string(record["f"].get<int>()) + "," +
         std::to_string(record["d"].get<long>()) + "," + std::to_string(record["g"].get<long>()) + "," +
         std::to_string(record["r"].get<int>()) + "," + record["count"].get<std::string>();
}

void print_compute(const ordered_json& record, const std::string& format) {
  if (format == "json") {
    std::cout << record.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "e,f,d,g,r,count\n" << csv_row(record) << "\n";
  } else {
    std::cout << record["count"].get<std::string>() << " planes (e=" << record["e"] << ", f=" << record["f"]
              << ", d=" << record["d"] << ", g=" << record["g"] << ", r=" << record["r"] << ")\n";
    for (const auto& w : record["warnings"]) std::cout << "warning: " << w.get<std::string>() << "\n";
  }
}

int run_table(UniversalEngine& engine, int e, int f, GridRange dr, GridRange gr, int threads,
              const std::string& format) {
  validate_problem(e, f, dr.lo, gr.lo);  // rejects bad (e, f) and negative genus up front
  struct Cell {
    long d;
    long g;
  };
  std::vector<Cell> cells;
  for (long d = dr.lo; d <= dr.hi; ++d) {
    for (long g = gr.lo; g <= gr.hi; ++g) cells.push_back({d, g});
  }
  std::vector<ordered_json> records(cells.size());
  std::vector<std::string> errors(cells.size());

  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(cells.size())));
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
        try {
          records[i] = compute_record(engine, e, f, cells[i].d, cells[i].g);
        } catch (const std::exception& ex) {
          errors[i] = ex.what();
        }
      }
    });
  }
  for (auto& t : pool) t.join();

  for (const auto& err : errors) {
    if (!err.empty()) throw ConsistencyError(err);
  }

  if (format == "json") {
    ordered_json out = ordered_json::array();
    for (auto& r : records) out.push_back(std::move(r));
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "e,f,d,g,r,count\n";
    for (const auto& r : records) std::cout << csv_row(r) << "\n";
  } else {
    for (const auto& r : records) {
      std::cout << "e=" << r["e"] << " f=" << r["f"] << " d=" << r["d"] << " g=" << r["g"]
                << " count=" << r["count"].get<std::string>() << "\n";
    }
  }
  return kExitOk;
}

int run_series(const std::string& kind, long d, long g, int order, const std::string& format) {
  PowerSeries<Rational> series(0);
  if (kind == "castelnuovo") {
    series = castelnuovo_series(d, g, order);
  } else if (kind == "hpsi") {
    series = hpsi_series(g, d, std::max(order, 1));
  } else if (kind == "hphipsi0") {
    series = hphipsi0_series(d, std::max(order, 1));
  } else {
    std::cerr << "unknown series kind '" << kind << "'\n";
    return kExitInvalidInput;
  }
  series = series.truncated(order);

  std::vector<std::string> coeffs;
  for (int i = 0; i <= order; ++i) coeffs.push_back(series.at(i).str());
  if (format == "json") {
    ordered_json j;
    j["kind"] = kind;
    j["d"] = d;
    j["g"] = g;
    j["order"] = order;
    j["coefficients"] = coeffs;
    std::cout << j.dump() << "\n";
  } else {
    for (int i = 0; i <= order; ++i) std::cout << "t^" << i << ": " << coeffs[i] << "\n";
  }
  return kExitOk;
}

constexpr int kMaxUniversalWeight = 8;

int run_universal(UniversalEngine& engine, const std::string& monomial, std::optional<int> k,
                  const std::string& format) {
  const ClassExpr expr = ClassExpr::parse_monomial(monomial);
  const int weight = expr.weight();
  if (k && *k != weight) {
    std::cerr << "monomial '" << monomial << "' has weight " << weight << ", not " << *k << "\n";
    return kExitInvalidInput;
  }
  if (weight > kMaxUniversalWeight) {
    std::cerr << "monomial weight " << weight << " exceeds the guard limit " << kMaxUniversalWeight << "\n";
    return kExitInvalidInput;
  }
  const UniversalIntegral& u = engine.universal_integral(expr, weight);

  ordered_json coeffs;
  for (const auto& [exps, c] : u.polynomial.coefficients()) {
    std::string key;
    if (exps.first == 0 && exps.second == 0) {
      key = "1";
    } else {
      if (exps.first > 0) key += "d^" + std::to_string(exps.first);
      if (exps.second > 0) {
        if (!key.empty()) key += "*";
        key += "g^" + std::to_string(exps.second);
      }
    }
    coeffs[key] = c.str();
  }
  ordered_json held = ordered_json::array();
  for (const auto& h : u.held_out) {
    held.push_back({{"lines", h.lines}, {"degrees", h.degrees}, {"value", h.value}});
  }
  if (format == "json") {
    ordered_json j;
    j["expr"] = u.expr.str();
    j["weight"] = u.weight;
    j["degree_bound"] = u.degree_bound;
    j["coefficients"] = std::move(coeffs);
    j["sample_count"] = u.sample_count;
    j["held_out_verified"] = std::move(held);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << u.expr.str() << " -> " << u.polynomial.str() << "\n";
    std::cout << "degree bound " << u.degree_bound << ", " << u.sample_count << " samples, "
              << u.held_out.size() << " held-out checks exact\n";
  }
  return kExitOk;
}

int run_verify(UniversalEngine& engine, const std::string& suite_name, const std::string& format) {
  const Suite suite = suite_name == "full" ? Suite::full : Suite::fast;
  const auto results = run_verification(engine, suite);
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
      arr.push_back({{"name", r.name}, {"hard", r.hard}, {"passed", r.passed}, {"detail", r.detail}});
    }
    ordered_json j;
    j["suite"] = suite_name;
    j["all_hard_passed"] = all_hard_passed(results);
    j["checks"] = std::move(arr);
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "[PASS]" : (r.hard ? "[FAIL]" : "[FINDING]")) << (r.hard ? " " : " (report) ")
                << r.name << ": " << r.detail << "\n";
    }
    std::cout << (all_hard_passed(results) ? "verification passed" : "verification FAILED") << "\n";
  }
  return all_hard_passed(results) ? kExitOk : kExitConsistency;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact secant-plane counts from tautological integrals over symmetric products of curves"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  int threads = 1;
  app.add_option("--threads", threads, "Worker threads for grid sweeps")->check(CLI::PositiveNumber);
  std::string cache_path;
  if (const char* env = std::getenv("CACHE_PATH")) cache_path = env;
  app.add_option("--cache", cache_path, "Universal-polynomial cache file (JSON lines)");

  int e = 0, f = 0;
  long d = 0, g = 0;
  int order = 0;
  std::string monomial, kind, suite = "fast", grid_d, grid_g;
  std::optional<int> weight_opt;

  CLI::App* cmd_compute = app.add_subcommand("compute", "Count secant planes for one (e, f, d, g)");
  cmd_compute->add_option("--e", e, "Divisor degree")->required();
  cmd_compute->add_option("--f", f, "Codimension parameter (1 or 2)")->required();
  cmd_compute->add_option("--d", d, "Line bundle degree")->required();
  cmd_compute->add_option("--g", g, "Curve genus")->required();

  CLI::App* cmd_table = app.add_subcommand("table", "Sweep counts over a (d, g) grid");
  cmd_table->add_option("--e", e, "Divisor degree")->required();
  cmd_table->add_option("--f", f, "Codimension parameter (1 or 2)")->required();
  cmd_table->add_option("--grid-d", grid_d, "Degree range a..b")->required();
  cmd_table->add_option("--grid-g", grid_g, "Genus range a..b")->required();

  CLI::App* cmd_series = app.add_subcommand("series", "Print generating-function coefficients");
  cmd_series->add_option("--kind", kind, "castelnuovo | hpsi | hphipsi0")->required();
  cmd_series->add_option("--d", d, "Line bundle degree")->required();
  cmd_series->add_option("--g", g, "Curve genus (castelnuovo, hpsi)");
  cmd_series->add_option("--order", order, "Truncation order")->required();

  CLI::App* cmd_universal = app.add_subcommand("universal", "Universal polynomial of a class monomial");
  cmd_universal->add_option("--monomial", monomial, "Product of c<i>, s<i>, ch<i> tokens with ^exponents")
      ->required();
  int weight_arg = -1;
  cmd_universal->add_option("--k", weight_arg, "Expected weight (checked against the monomial)");

  CLI::App* cmd_verify = app.add_subcommand("verify", "Run the cross-validation suites");
  cmd_verify->add_option("--suite", suite, "fast | full")->check(CLI::IsMember({"fast", "full"}));

  for (CLI::App* sub : {cmd_compute, cmd_table, cmd_series, cmd_universal, cmd_verify}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() == 0) return app.exit(ex);  // --help
    app.exit(ex);
    return kExitInvalidInput;
  }

  if (order > kMaxOrder) {
    std::cerr << "order " << order << " exceeds the guard limit " << kMaxOrder << "\n";
    return kExitInvalidInput;
  }
  if (format == "csv" && !(cmd_compute->parsed() || cmd_table->parsed())) {
    std::cerr << "csv output is only available for compute and table\n";
    return kExitInvalidInput;
  }
  if (weight_arg >= 0) weight_opt = weight_arg;

  UniversalEngine engine;
  if (!cache_path.empty()) engine.load_cache(cache_path);

  int rc = kExitOk;
  try {
    if (cmd_compute->parsed()) {
      print_compute(compute_record(engine, e, f, d, g), format);
    } else if (cmd_table->parsed()) {
      rc = run_table(engine, e, f, parse_range(grid_d), parse_range(grid_g), threads, format);
    } else if (cmd_series->parsed()) {
      rc = run_series(kind, d, g, order, format);
    } else if (cmd_universal->parsed()) {
      rc = run_universal(engine, monomial, weight_opt, format);
    } else if (cmd_verify->parsed()) {
      rc = run_verify(engine, suite, format);
    }
  } catch (const InvalidProblem& ex) {
    std::cerr << ex.what() << "\n";
    return kExitInvalidInput;
  } catch (const WeightMismatch& ex) {
    std::cerr << ex.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& ex) {
    std::cerr << ex.what() << "\n";
    return kExitInvalidInput;
  } catch (const CLI::ValidationError& ex) {
    std::cerr << ex.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& ex) {
    // ConsistencyError, FitError and anything else unexpected: the result
    // cannot be trusted.
    std::cerr << ex.what() << "\n";
    return kExitConsistency;
  }

  if (rc == kExitOk && !cache_path.empty()) {
    try {
      engine.save_cache(cache_path);
    } catch (const std::exception& ex) {
      std::cerr << "warning: " << ex.what() << "\n";
    }
  }
  return rc;
}
