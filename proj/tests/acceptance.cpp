// One line per acceptance criterion; exit status 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "foxcolor/corpus.hpp"
#include "foxcolor/elimination.hpp"
#include "foxcolor/oracle.hpp"
#include "foxcolor/rules.hpp"
#include "fuzz.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace foxcolor;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string secs(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << "s";
  return os.str();
}

Outcome solver_vs_brute_force() {
  auto t0 = std::chrono::steady_clock::now();
  struct Case {
    const char* name;
    int p;
    size_t count;
  };
  std::ostringstream det;
  bool ok = true;
  for (auto [name, p, count] : std::vector<Case>{{"trefoil", 3, 9}, {"trefoil", 5, 5}, {"figure-eight", 5, 25}}) {
    Diagram d = load_diagram(name);
    auto lin = enumerate(solve(d, p));
    std::sort(lin.begin(), lin.end());
    auto brute = oracle::brute_force_colorings(d, p);
    bool same = lin == brute && brute.size() == count;
    ok = ok && same;
    det << name << "@" << p << "=" << brute.size() << (same ? "" : "(MISMATCH)") << " ";
  }
  double s = since(t0);
  return {ok && s < 1.0, det.str() + secs(s)};
}

Outcome determinants() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, long>> want{{"trefoil", 3}, {"figure-eight", 5}, {"T(2,11)", 11}, {"T(2,13)", 13}};
  bool ok = true;
  std::ostringstream det;
  for (auto& [name, v] : want) {
    BigInt got = determinant(load_diagram(name));
    ok = ok && got == v && oracles::cofactor(oracles::present(find_corpus(name)->pd)) == v;
    det << name << "=" << got << " ";
  }
  double s = since(t0);
  return {ok && s < 1.0, det.str() + secs(s)};
}

std::vector<long> primes_11_101() {
  std::vector<long> out;
  for (long p = 11; p <= 101; ++p)
    if (oracles::prime(p)) out.push_back(p);
  return out;
}

Outcome table_audit() {
  auto t0 = std::chrono::steady_clock::now();
  long rows = 0, failures = 0;
  for (long p : primes_11_101()) {
    AuditReport r = audit_tables(p);
    rows += static_cast<long>(r.rows.size());
    failures += r.failures();
  }
  double s = since(t0);
  return {failures == 0 && rows > 0 && s < 60.0,
          std::to_string(rows) + " rows, " + std::to_string(failures) + " failures, " + secs(s)};
}

Outcome soundness() {
  auto t0 = std::chrono::steady_clock::now();
  long bindings = 0, violations = 0;
  for (long p : primes_11_101()) {
    SoundnessReport r = soundness_sweep(p);
    bindings += r.bindings;
    violations += static_cast<long>(r.violations.size());
  }
  double s = since(t0);
  return {violations == 0 && bindings > 0 && s < 300.0,
          std::to_string(bindings) + " bindings, " + std::to_string(violations) + " violations, " + secs(s)};
}

std::vector<json> g_reports;  // reused by the fuzzer

Outcome end_to_end() {
  bool ok = true;
  std::ostringstream det;
  for (auto [name, p] : std::vector<std::pair<std::string, int>>{{"T(2,11)", 11}, {"T(2,13)", 13}, {"6_2", 11}, {"6_3", 13}}) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      Diagram d = load_diagram(name);
      Coloring c = *first_nontrivial(solve(d, p));
      EliminationReport rep = eliminate_all(d, c);
      json j = rep.to_json();
      bool good = oracle::verify_report(d, c, j).ok() && is_valid(rep.output_d, rep.output_c) &&
                  !is_trivial(rep.output_c);
      Modulus m(p);
      for (int i = 0; i < 3; ++i) good = good && !rep.final_palette().count(m.forbidden(i));
      double s = since(t0);
      good = good && s < 30.0;
      ok = ok && good;
      det << name << "@" << p << (good ? " ok " : " FAIL ") << rep.total_steps() << " steps " << secs(s) << "; ";
      g_reports.push_back(std::move(j));
    } catch (const Error& e) {
      ok = false;
      det << name << "@" << p << " " << e.what() << "; ";
    }
  }
  return {ok, det.str()};
}

Outcome move_invariance() {
  std::mt19937 rng(1);
  bool ok = true;
  long moves = 0;
  for (auto& e : load_corpus()) {
    Diagram d = parse_pd(e.pd);
    BigInt det = determinant(d);
    std::map<int, int> dims;
    for (int p : {3, 5, 7, 11, 13}) dims[p] = solve(d, p).dimension;
    for (int i = 0; i < 100; ++i) {
      auto m = testing::random_move(d, rng);
      if (!m) {
        ok = false;
        break;
      }
      d = apply_move(d, *m);
      ++moves;
      ok = ok && determinant(d) == det;
      for (auto [p, dim] : dims) ok = ok && solve(d, p).dimension == dim;
    }
  }
  return {ok && moves >= 100L * static_cast<long>(load_corpus().size()),
          std::to_string(moves) + " moves over " + std::to_string(load_corpus().size()) + " diagrams"};
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(FOXCOLOR_CLI) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome hypotheses() {
  auto dir = std::filesystem::temp_directory_path() / "foxcolor-acceptance";
  std::filesystem::create_directories(dir);
  auto trivial = dir / "trivial.json";
  json c{{"p", 11}, {"assignment", json::object()}};
  for (int i = 0; i < 11; ++i) c["assignment"][std::to_string(i)] = 2;
  std::ofstream(trivial) << c.dump();
  int p7 = run_cli("eliminate 'T(2,7)' -p 7");
  int comp = run_cli("eliminate 'T(2,11)' -p 15");
  int triv = run_cli("eliminate 'T(2,11)' -p 11 --coloring " + trivial.string());
  std::ostringstream det;
  det << "p=7 -> " << p7 << ", p=15 -> " << comp << ", trivial@11 -> " << triv;
  return {p7 == 4 && comp == 4 && triv == 4, det.str()};
}

Outcome fuzzing() {
  if (g_reports.empty()) return {false, "no reports to mutate"};
  std::mt19937 rng(8);
  long total = 0, caught = 0;
  std::string missed;
  for (int i = 0; i < 240; ++i) {
    auto m = fuzz::mutate(g_reports[i % g_reports.size()], i % 4, rng);
    ++total;
    if (!oracle::verify_report(m.report).ok()) ++caught;
    else if (missed.empty()) missed = " first miss: " + m.what;
  }
  return {total >= 200 && caught == total,
          std::to_string(caught) + "/" + std::to_string(total) + " mutants detected" + missed};
}

}  // namespace

int main() {
  std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"solver matches brute force", solver_vs_brute_force},
      {"determinant regression", determinants},
      {"table audit p=11..101", table_audit},
      {"rule soundness sweep p=11..101", soundness},
      {"end-to-end colour removal", end_to_end},
      {"invariance under random moves", move_invariance},
      {"hypothesis enforcement", hypotheses},
      {"mutation fuzzing of reports", fuzzing},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << " [" << (o.pass ? "PASS" : "FAIL") << "] " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  return failed ? 1 : 0;
}
