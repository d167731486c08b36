#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "foxcolor/corpus.hpp"
#include "foxcolor/elimination.hpp"
#include "foxcolor/oracle.hpp"
#include "foxcolor/rules.hpp"

using namespace foxcolor;

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerify = 2, kBudget = 3, kMath = 4 };

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonPrime:
    case ErrorCode::ModulusTooSmall:
    case ErrorCode::TrivialColoring:
      return kMath;
    case ErrorCode::BudgetExceeded:
    case ErrorCode::SearchExhausted:
      return kBudget;
    case ErrorCode::GuardViolated:
      return kVerify;
    default:
      return kUsage;
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::NotFound, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string join(const std::vector<Color>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

struct Options {
  bool as_json = false;
  std::string target, coloring, out, report;
  int p = 0, p_min = 11, p_max = 101;
};

int cmd_solve(const Options& o) {
  Diagram d = load_diagram(o.target);
  ColoringSpace s = solve(d, o.p);
  if (o.as_json) {
    json j = to_json(s);
    j["arcs"] = derive_arcs(d).size();
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << o.target << " mod " << o.p << ": dimension " << s.dimension << " (" << o.p << "^" << s.dimension
            << " colorings)\n";
  for (auto& v : s.basis) std::cout << "  [" << join(v) << "]\n";
  return kOk;
}

int cmd_det(const Options& o) {
  BigInt det = determinant(load_diagram(o.target));
  if (o.as_json)
    std::cout << json{{"diagram", o.target}, {"determinant", det.str()}}.dump(2) << '\n';
  else
    std::cout << det << '\n';
  return kOk;
}

int cmd_eliminate(const Options& o) {
  Modulus m(o.p);
  m.require_elimination_range();
  Diagram d = load_diagram(o.target);
  Coloring c;
  if (!o.coloring.empty()) {
    c = coloring_from_json(read_json_file(o.coloring));
    if (c.modulus != m) throw Error(ErrorCode::InvalidInput, "coloring modulus differs from -p");
  } else {
    auto first = first_nontrivial(solve(d, o.p));
    if (!first)
      throw Error(ErrorCode::TrivialColoring,
                  o.target + " has only trivial colorings mod " + std::to_string(o.p));
    c = *first;
  }
  EliminationReport rep = eliminate_all(d, c);
  json j = rep.to_json();
  if (!o.out.empty()) write_json_file(o.out, j);
  auto pal = rep.final_palette();
  std::vector<Color> palv(pal.begin(), pal.end());
  if (o.as_json) {
    json s{{"ok", true}, {"p", o.p}, {"final_palette", palv}, {"stats", j["stats"]}};
    if (!o.out.empty()) s["report"] = o.out;
    else s["report"] = j;
    std::cout << s.dump(2) << '\n';
    return kOk;
  }
  std::cout << "removed " << m.forbidden(0) << ", " << m.forbidden(1) << ", " << m.forbidden(2) << " in "
            << rep.total_steps() << " steps\n";
  for (auto& t : rep.traces) std::cout << "  colour " << t.target << ": " << t.steps.size() << " steps\n";
  std::cout << "crossings " << d.crossing_count() << " -> " << rep.output_d.crossing_count() << "\n";
  std::cout << "final palette {" << join(palv) << "}\n";
  if (!o.out.empty()) std::cout << "report written to " << o.out << "\n";
  return kOk;
}

int cmd_audit(const Options& o) {
  if (o.p_min > o.p_max) throw Error(ErrorCode::InvalidInput, "--p-min exceeds --p-max");
  json all = json::array();
  long failures = 0, rows = 0, violations = 0, bindings = 0;
  bool any = false;
  for (int p = o.p_min; p <= o.p_max; ++p) {
    if (!is_prime(p) || p == 2) continue;
    any = true;
    AuditReport a = audit_tables(p);
    SoundnessReport s = soundness_sweep(p);
    failures += a.failures();
    rows += static_cast<long>(a.rows.size());
    violations += static_cast<long>(s.violations.size());
    bindings += s.bindings;
    if (o.as_json) {
      json v = json::array();
      for (auto& x : s.violations) v.push_back({{"rule", x.rule}, {"a", x.a}, {"b", x.b}, {"what", x.what}});
      json aj = a.to_json();
      json fails = json::array();
      for (auto& r : aj["rows"])
        if (!r["pass"].get<bool>()) fails.push_back(r);
      all.push_back({{"p", p}, {"rows", a.rows.size()}, {"failures", fails},
                     {"bindings", s.bindings}, {"violations", v}});
    } else {
      std::cout << "p=" << p << ": " << a.rows.size() << " rows, " << a.failures() << " failures; "
                << s.bindings << " bindings, " << s.violations.size() << " violations\n";
      for (auto& r : a.rows)
        if (!r.pass) std::cout << "  FAIL " << r.table << " row " << r.index << " " << r.equation << ": " << r.note << "\n";
      for (auto& x : s.violations) std::cout << "  UNSOUND " << x.rule << " a=" << x.a << " b=" << x.b << ": " << x.what << "\n";
    }
  }
  if (!any) throw Error(ErrorCode::NonPrime, "no primes in the requested range");
  bool ok = failures == 0 && violations == 0;
  if (o.as_json)
    std::cout << json{{"ok", ok}, {"rows", rows}, {"failures", failures}, {"bindings", bindings},
                      {"violations", violations}, {"primes", all}}.dump(2) << '\n';
  else
    std::cout << (ok ? "audit ok" : "audit FAILED") << ": " << rows << " rows, " << bindings << " bindings\n";
  return ok ? kOk : kVerify;
}

int cmd_verify(const Options& o) {
  oracle::VerificationVerdict v;
  try {
    v = oracle::verify_report(read_json_file(o.report));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotFound) throw;
    v.failures.push_back({-1, e.what()});
  }
  if (o.as_json) {
    std::cout << v.to_json().dump(2) << '\n';
  } else if (v.ok()) {
    std::cout << o.report << ": ok\n";
  } else {
    std::cout << o.report << ": " << v.failures.size() << " failures\n";
    for (auto& f : v.failures) std::cout << "  step " << f.step << ": " << f.reason << "\n";
  }
  return v.ok() ? kOk : kVerify;
}

int cmd_corpus(const Options& o) {
  json j = json::array();
  for (auto& e : load_corpus()) {
    Diagram d = parse_pd(e.pd);
    if (o.as_json)
      j.push_back({{"name", e.name}, {"pd", e.pd}, {"crossings", d.crossing_count()},
                   {"determinant", e.determinant}, {"notes", e.notes}});
    else
      std::cout << e.name << "\t" << d.crossing_count() << " crossings\tdet " << e.determinant << "\t" << e.notes
                << "\n";
  }
  if (o.as_json) std::cout << j.dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fox colorings of link diagrams and removal of the colours 2k, 2k-1, k"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.as_json, "print JSON instead of text");

  auto* solve_c = app.add_subcommand("solve", "basis of the coloring space mod p");
  solve_c->add_option("diagram", o.target, "corpus name or PD file")->required();
  solve_c->add_option("-p", o.p, "odd prime")->required();

  auto* det_c = app.add_subcommand("det", "determinant of the diagram");
  det_c->add_option("diagram", o.target, "corpus name or PD file")->required();

  auto* elim_c = app.add_subcommand("eliminate", "remove colours 2k, 2k-1 and k");
  elim_c->add_option("diagram", o.target, "corpus name or PD file")->required();
  elim_c->add_option("-p", o.p, "prime above 7")->required();
  elim_c->add_option("--coloring", o.coloring, "starting coloring (JSON)");
  elim_c->add_option("-o", o.out, "write the report here");

  auto* audit_c = app.add_subcommand("audit", "check the case tables and rule soundness");
  audit_c->add_option("--p-min", o.p_min, "smallest prime")->capture_default_str();
  audit_c->add_option("--p-max", o.p_max, "largest prime")->capture_default_str();

  auto* verify_c = app.add_subcommand("verify", "replay and check a report");
  verify_c->add_option("report", o.report, "report JSON")->required();

  auto* corpus_c = app.add_subcommand("corpus", "bundled diagrams");
  corpus_c->require_subcommand(1);
  auto* list_c = corpus_c->add_subcommand("list", "list the corpus");

  // --json is accepted after the subcommand too
  for (auto* s : {solve_c, det_c, elim_c, audit_c, verify_c, list_c}) s->add_flag("--json", o.as_json, "print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_c) return cmd_solve(o);
    if (*det_c) return cmd_det(o);
    if (*elim_c) return cmd_eliminate(o);
    if (*audit_c) return cmd_audit(o);
    if (*verify_c) return cmd_verify(o);
    if (*list_c) return cmd_corpus(o);
  } catch (const Error& e) {
    if (o.as_json)
      std::cout << json{{"ok", false}, {"error", to_string(e.code())}, {"message", e.what()}}.dump(2) << '\n';
    std::cerr << "foxcolor: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "foxcolor: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
