// Acceptance run: one pass/fail line per criterion.
//
//   acceptance <path-to-genmom>
//
// Criteria 1-7 are judged from the in-process suite records at default
// parameters; criterion 8 drives the tool twice and inspects its reports.
// Exit status is nonzero when any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "genmom/cli/suites.hpp"

using namespace genmom::cli;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::string suite;
  std::vector<std::string> ids;  // empty: every record of the suite
};

bool selected(const Criterion& c, const Record& r) {
  if (r.suite != c.suite) return false;
  if (c.ids.empty()) return true;
  for (const auto& id : c.ids) {
    if (r.id == id) return true;
  }
  return false;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run_tool(const std::string& tool, const std::string& out) {
  const int raw = std::system((tool + " run --suite all --out " + out).c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string num(double v) { return detail::short_double(v); }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <path-to-genmom>\n";
    return 2;
  }
  const std::string tool = argv[1];

  const Report rep = run_suites(Suite::all, Params{});

  std::vector<std::string> well_ids;
  for (const char* a : {"0", "0.3", "0.6", "0.9"}) {
    for (const char* what : {"roots", "psi_at_0", "psi_at_L", "hamiltonian_residual"}) {
      well_ids.push_back(std::string(what) + ".a=" + a);
    }
  }
  well_ids.push_back("small_a_limit");

  const std::vector<Criterion> criteria = {
      {1, "kernel reconstruction", "kernel", {}},
      {2, "hermiticity", "operators",
       {"pH.max_adjoint_defect", "xH.max_adjoint_defect", "p.min_adjoint_defect_over_norm", "edge_flags"}},
      {3, "eigenfunctions", "eigen", {}},
      {4, "commutator", "commutator",
       {"x_basis.closed_form_defect", "k_basis.closed_form_defect", "undeformed_equals_i", "gaussian_root_x1",
        "gaussian_same_sign_roots"}},
      {5, "square well", "well", well_ids},
      {6, "fourier layer", "fourier", {}},
      {7, "overlap analysis", "ortho", {}},
  };

  bool all_ok = true;
  std::vector<std::string> covered;
  for (const auto& c : criteria) {
    std::size_t checks = 0, failed = 0;
    std::vector<std::string> notes;
    for (const auto& r : rep.records) {
      if (!selected(c, r)) continue;
      covered.push_back(r.suite + "/" + r.id);
      if (!r.tolerance) continue;  // reported data
      ++checks;
      const bool lower = r.details.contains("comparison");
      const std::string rel = r.status == Status::pass ? (lower ? " > " : " < ") : (lower ? " <= " : " >= ");
      const std::string text = r.id + " = " + num(r.value) + rel + num(*r.tolerance);
      if (r.status == Status::fail) {
        ++failed;
        notes.push_back(text);
      }
    }
    if (c.ids.size() > 0 && checks != c.ids.size()) {
      ++failed;
      notes.push_back("missing records: expected " + std::to_string(c.ids.size()) + ", found " +
                      std::to_string(checks));
    }
    const bool ok = failed == 0 && checks > 0;
    all_ok = all_ok && ok;
    std::cout << "criterion " << c.number << " (" << c.title << "): " << (ok ? "PASS" : "FAIL") << " ["
              << checks - std::min(checks, failed) << "/" << checks << " checks]\n";
    for (const auto& n : notes) std::cout << "    fail: " << n << "\n";
  }

  // criterion 8
  {
    std::vector<std::string> notes;
    const std::string f1 = "acceptance_report_1.json", f2 = "acceptance_report_2.json";
    const int code1 = run_tool(tool, f1);
    const int code2 = run_tool(tool, f2);
    const std::string t1 = slurp(f1), t2 = slurp(f2);
    if (code1 != 0) notes.push_back("exit code " + std::to_string(code1) + " (expected 0)");
    if (code1 != code2) notes.push_back("exit codes differ between runs");
    if (t1.empty() || t1 != t2) notes.push_back("reports are not byte-identical");
    if (t1 != render(rep, Format::json)) notes.push_back("tool report differs from in-process report");
    try {
      const auto j = nlohmann::json::parse(t1);
      if (j.value("schema", 0) != 1) notes.push_back("schema is not 1");
      std::map<std::string, bool> present;
      for (const auto& r : j.at("records")) present[r.at("suite").get<std::string>() + "/" + r.at("id").get<std::string>()] = true;
      std::size_t missing = 0;
      for (const auto& id : covered) missing += present.count(id) ? 0 : 1;
      if (missing > 0) notes.push_back(std::to_string(missing) + " checks missing from the report");
    } catch (const std::exception& e) {
      notes.push_back(std::string("report is not valid JSON: ") + e.what());
    }
    const bool ok = notes.empty();
    all_ok = all_ok && ok;
    std::cout << "criterion 8 (cli report): " << (ok ? "PASS" : "FAIL") << " [schema 1, " << covered.size()
              << " checks covered, two runs compared]\n";
    for (const auto& n : notes) std::cout << "    fail: " << n << "\n";
  }
  return all_ok ? 0 : 1;
}
