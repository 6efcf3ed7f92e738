#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "btq/fixtures.hpp"
#include "btq/graph.hpp"
#include "btq/nmatrix.hpp"
#include "btq/orbits.hpp"

// Command line front end. Exit codes: 0 success, 2 invalid configuration,
// 3 verification mismatch or audit failure.

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitMismatch = 3;

int thread_count(int flag_value) {
  // BTQ_THREADS overrides the flag when set.
  if (const char* env = std::getenv("BTQ_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return flag_value >= 1 ? flag_value : 1;
}

// Writes via a temporary file and rename so failures leave no partial file.
void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

void validate_config(int p, int d, int window) {
  if (!btq::is_prime(p)) throw std::invalid_argument("p must be prime");
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  if (window < d + 1) throw std::invalid_argument("window must be >= deg + 1");
}

struct CheckPrinter {
  bool any_fail = false;
  void pass(const std::string& name, const std::string& detail = "") {
    std::cout << "PASS  " << name << (detail.empty() ? "" : ": " + detail) << "\n";
  }
  void warn(const std::string& name, const std::string& detail) {
    std::cout << "WARN  " << name << ": " << detail << "\n";
  }
  void fail(const std::string& name, const std::string& detail) {
    any_fail = true;
    std::cout << "FAIL  " << name << ": " << detail << "\n";
  }
};

int run_nmatrix(int p, int d, int window, const std::string& method,
                const std::string& output, long long budget, int threads) {
  validate_config(p, d, window);
  if (method == "recurrence") {
    write_output(output, btq::nd_recurrence(p, d, window).to_json());
    return kExitOk;
  }
  if (method == "oracle") {
    write_output(output, btq::nd_oracle(p, d, window, budget, threads).to_json());
    return kExitOk;
  }
  if (method != "both") throw std::invalid_argument("unknown method " + method);
  btq::NMatrix rec = btq::nd_recurrence(p, d, window);
  btq::NMatrix ora = btq::nd_oracle(p, d, window, budget, threads);
  std::ostringstream both;
  both << "{\n\"recurrence\": " << rec.to_json() << ",\n\"oracle\": " << ora.to_json()
       << "\n}";
  write_output(output, both.str());
  for (int i = 0; i < window; ++i)
    for (int j = 0; j < window; ++j)
      if (rec.at(i, j) != ora.at(i, j)) {
        std::cerr << "mismatch at (" << i << "," << j << "): recurrence "
                  << rec.at(i, j).str() << ", oracle " << ora.at(i, j).str() << "\n";
        return kExitMismatch;
      }
  return kExitOk;
}

int run_graph(int p, int d, int window, const std::string& method,
              const std::string& format, bool audit, const std::string& output,
              long long budget, int threads) {
  validate_config(p, d, window);
  btq::BuildMethod m = method == "closed-form" ? btq::BuildMethod::ClosedForm
                                               : btq::BuildMethod::BruteForce;
  if (method != "closed-form" && method != "bruteforce")
    throw std::invalid_argument("unknown method " + method);
  btq::QuotientGraph g = btq::build_cgraph(p, d, window, m, budget, threads);
  write_output(output, format == "dot" ? btq::emit_dot(g) : btq::emit_json(g));
  if (audit) {
    btq::AuditReport rep = btq::audit_graph(g, budget, threads);
    for (const std::string& f : rep.failures) std::cerr << "audit: " << f << "\n";
    if (!rep.pass) return kExitMismatch;
  }
  return kExitOk;
}

int run_verify(bool all, bool reciprocity, bool burnside, bool oracle, bool fixtures,
               int p, int maxdeg, int window, int deg1, int deg2, long long budget,
               int threads) {
  if (!btq::is_prime(p)) throw std::invalid_argument("p must be prime");
  if (all) reciprocity = burnside = oracle = fixtures = true;
  if (!(reciprocity || burnside || oracle || fixtures))
    throw std::invalid_argument("select a check: --all, --reciprocity, --burnside, --oracle, --fixtures");
  CheckPrinter out;

  if (reciprocity) {
    std::vector<std::pair<int, int>> pairs;
    if (deg1 > 0 && deg2 > 0) {
      pairs.emplace_back(deg1, deg2);
    } else {
      for (int a = 1; a <= maxdeg; ++a)
        for (int b = a + 1; b <= maxdeg; ++b) pairs.emplace_back(a, b);
    }
    for (const auto& [a, b] : pairs) {
      std::string name = "reciprocity d1=" + std::to_string(a) + " d2=" + std::to_string(b);
      for (auto method : {btq::MatrixMethod::Recurrence, btq::MatrixMethod::Oracle}) {
        const char* mname = method == btq::MatrixMethod::Oracle ? " (oracle)" : " (recurrence)";
        try {
          btq::ReciprocityReport rep =
              btq::reciprocity_check(p, a, b, window, method, budget, threads);
          if (rep.pass)
            out.pass(name + mname, "interior " + std::to_string(rep.interior));
          else
            out.fail(name + mname, "first mismatch at (" + std::to_string(rep.i) + "," +
                                       std::to_string(rep.j) + "), max discrepancy " +
                                       rep.max_discrepancy.str());
        } catch (const btq::BudgetExceeded&) {
          out.warn(name + mname, "skipped, p^d over budget");
        }
      }
    }
  }

  if (burnside) {
    bool ok = true;
    std::string detail;
    for (int N = 1; N <= 6 && ok; ++N) {
      std::vector<btq::OrderType> types;
      types.push_back({btq::OrderTypeTag::I, 0});
      types.push_back({btq::OrderTypeTag::IV, 0});
      for (int r = 0; r <= N; ++r) {
        types.push_back({btq::OrderTypeTag::II, r});
        types.push_back({btq::OrderTypeTag::III, r});
      }
      for (const btq::OrderType& t : types) {
        long long closed = btq::valency_closed_form(t, p, N);
        long long avg = btq::burnside_valency(t, p, N);
        if (closed != avg) {
          ok = false;
          detail = std::string("type ") + btq::order_type_name(t.tag) + " N=" +
                   std::to_string(N) + " r=" + std::to_string(t.r) + ": closed " +
                   std::to_string(closed) + " vs burnside " + std::to_string(avg);
        }
      }
    }
    if (ok) out.pass("burnside tables p=" + std::to_string(p), "N <= 6, all types");
    else out.fail("burnside tables p=" + std::to_string(p), detail);
  }

  if (oracle) {
    for (int d = 1; d <= maxdeg; ++d) {
      std::string name = "oracle vs recurrence d=" + std::to_string(d);
      try {
        btq::NMatrix rec = btq::nd_recurrence(p, d, window);
        btq::NMatrix ora = btq::nd_oracle(p, d, window, budget, threads);
        if (rec == ora) out.pass(name);
        else out.fail(name, "entrywise mismatch");
      } catch (const btq::BudgetExceeded&) {
        out.warn(name, "skipped, p^d over budget");
      }
    }
  }

  if (fixtures) {
    std::vector<int> degs = {1, 2, 4, 5, 6};
    btq::FixtureReport rep = btq::check_figures(p, degs, budget, threads);
    for (const std::string& w : rep.warnings) out.warn("fixtures", w);
    for (const std::string& f : rep.failures) out.fail("fixtures", f);
    if (rep.pass())
      out.pass("fixtures p=" + std::to_string(p),
               std::to_string(rep.passes.size()) + " exact checks, " +
                   std::to_string(rep.warnings.size()) + " loop-label warnings");
  }

  return out.any_fail ? kExitMismatch : kExitOk;
}

int run_ball(int p, int start, const std::string& steps, int window) {
  if (!btq::is_prime(p)) throw std::invalid_argument("p must be prime");
  if (start < 0) throw std::invalid_argument("start must be >= 0");
  std::vector<std::pair<int, int>> schedule;
  std::stringstream ss(steps);
  std::string item;
  int reach = start, maxd = 1;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("steps must look like deg:radius[,deg:radius...]");
    int d = std::stoi(item.substr(0, colon));
    int t = std::stoi(item.substr(colon + 1));
    if (d < 1 || t < 0) throw std::invalid_argument("bad schedule entry " + item);
    schedule.emplace_back(d, t);
    reach += d * t;
    maxd = std::max(maxd, d);
  }
  if (window <= 0) window = reach + maxd + 1;
  if (window <= reach + maxd)
    throw std::invalid_argument("window too small for the schedule");
  std::set<int> support = btq::ball_support(p, start, schedule, window);
  std::string sep;
  std::cout << "{";
  for (int v : support) {
    std::cout << sep << v;
    sep = ", ";
  }
  std::cout << "}\n";
  return kExitOk;
}

int run_valency(const std::string& type, int p, int N, int r) {
  if (!btq::is_prime(p)) throw std::invalid_argument("p must be prime");
  btq::OrderType t;
  if (type == "I") t = {btq::OrderTypeTag::I, 0};
  else if (type == "II") t = {btq::OrderTypeTag::II, r};
  else if (type == "III") t = {btq::OrderTypeTag::III, r};
  else if (type == "IV") t = {btq::OrderTypeTag::IV, 0};
  else throw std::invalid_argument("type must be one of I, II, III, IV");
  long long closed = btq::valency_closed_form(t, p, N);
  long long avg = btq::burnside_valency(t, p, N);
  std::cout << "type=" << type << " p=" << p << " N=" << N << " r=" << t.r
            << " valency=" << closed << " burnside=" << avg << "\n";
  return closed == avg ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quotient graphs of split maximal orders on the projective line"};
  app.require_subcommand(1);

  int p = 2, d = 1, window = 12, start = 0, maxdeg = 3, deg1 = 0, deg2 = 0, N = 1, r = 0;
  int threads_flag = 1;
  long long budget = btq::kDefaultBudget;
  std::string method_matrix = "recurrence", method_graph = "bruteforce";
  std::string format = "json", output = "-", steps, type = "I";
  bool all = false, reciprocity = false, burnside = false, oracle = false,
       fixtures = false, audit = false;

  CLI::App* nm = app.add_subcommand("nmatrix", "compute a neighbor-count matrix");
  nm->add_option("--p", p, "prime")->required();
  nm->add_option("--deg", d, "place degree")->required();
  nm->add_option("--window", window, "matrix window");
  nm->add_option("--method", method_matrix, "recurrence|oracle|both");
  nm->add_option("--output", output, "file path or -");
  nm->add_option("--budget", budget, "enumeration budget for p^d");
  nm->add_option("--threads", threads_flag, "worker threads");

  CLI::App* gr = app.add_subcommand("graph", "build and emit a quotient graph");
  gr->add_option("--p", p, "prime")->required();
  gr->add_option("--deg", d, "place degree")->required();
  gr->add_option("--window", window, "vertex window");
  gr->add_option("--method", method_graph, "bruteforce|closed-form");
  gr->add_option("--format", format, "json|dot");
  gr->add_option("--output", output, "file path or -");
  gr->add_option("--budget", budget, "enumeration budget for p^d");
  gr->add_option("--threads", threads_flag, "worker threads");
  gr->add_flag("--audit", audit, "run valency and symmetry audits");

  CLI::App* ve = app.add_subcommand("verify", "run verification suites");
  ve->add_flag("--all", all, "run every check");
  ve->add_flag("--reciprocity", reciprocity, "commutation of N_d1 and N_d2");
  ve->add_flag("--burnside", burnside, "valency tables vs orbit-count average");
  ve->add_flag("--oracle", oracle, "recurrence vs enumeration");
  ve->add_flag("--fixtures", fixtures, "known small graphs");
  ve->add_option("--p", p, "prime");
  ve->add_option("--maxdeg", maxdeg, "largest degree for grid checks");
  ve->add_option("--window", window, "matrix window");
  ve->add_option("--deg1", deg1, "first degree for reciprocity");
  ve->add_option("--deg2", deg2, "second degree for reciprocity");
  ve->add_option("--budget", budget, "enumeration budget for p^d");
  ve->add_option("--threads", threads_flag, "worker threads");

  int ball_window = 0;  // 0 means: derive from the schedule
  CLI::App* ba = app.add_subcommand("ball", "iterated containment support");
  ba->add_option("--p", p, "prime")->required();
  ba->add_option("--start", start, "starting class index")->required();
  ba->add_option("--steps", steps, "schedule deg:radius[,deg:radius...]");
  ba->add_option("--window", ball_window, "vertex window (default: auto)");

  CLI::App* va = app.add_subcommand("valency", "valency table queries");
  va->add_option("--type", type, "I|II|III|IV")->required();
  va->add_option("--p", p, "prime")->required();
  va->add_option("--N", N, "place degree")->required();
  va->add_option("--r", r, "radical image dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitConfig;
  }

  int threads = thread_count(threads_flag);
  try {
    if (nm->parsed()) return run_nmatrix(p, d, window, method_matrix, output, budget, threads);
    if (gr->parsed()) return run_graph(p, d, window, method_graph, format, audit, output, budget, threads);
    if (ve->parsed()) return run_verify(all, reciprocity, burnside, oracle, fixtures, p,
                                        maxdeg, window, deg1, deg2, budget, threads);
    if (ba->parsed()) return run_ball(p, start, steps, ball_window);
    if (va->parsed()) return run_valency(type, p, N, r);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const btq::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitConfig;
}
