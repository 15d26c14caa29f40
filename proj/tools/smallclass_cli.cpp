// smallclass: inspect finite groups and check the small-class statements
// over single groups or whole catalogs.
//
//   smallclass info  --group SPEC [--json]
//   smallclass check --group SPEC --statement NAME [--subgroup-witness-search] [--json]
//   smallclass scan  [--builtin-max-order N] [--catalog PATH]... [--statements LIST|all]
//                    [--oracle-cap K] [--jobs J] [--json] [--out PATH]
//
// Exit codes: 0 clean, 1 usage or I/O error, 2 a COUNTEREXAMPLE was reported.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "smallclass/smallclass.hpp"

namespace {

using namespace smallclass;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;

std::vector<Statement> parse_statement_list(const std::string& text) {
  if (text == "all") return {kAllStatements.begin(), kAllStatements.end()};
  std::vector<Statement> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto s = parse_statement(item);
    if (!s) throw Error(ErrorKind::InvalidArgument, "unknown statement '" + item + "'");
    if (std::find(out.begin(), out.end(), *s) == out.end()) out.push_back(*s);
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "empty statement list");
  return out;
}

void print_info_text(const GroupStructure& st, std::ostream& out) {
  const auto& g = st.group();
  out << g.name() << "\n";
  out << "  order:          " << g.order() << "\n";
  out << "  class sizes:    ";
  for (std::size_t i = 0; i < st.classes().count(); ++i)
    out << (i ? " " : "") << st.classes().size[i];
  out << "\n";
  out << "  |Z(G)|:         " << st.center().order() << "\n";
  out << "  |M(G)|:         " << st.m().order() << " (class " << format_class(st.m_class())
      << (st.small_degenerate() ? ", degenerate: one class size" : "") << ")\n";
  out << "  |F(G)|:         " << st.fitting().order() << "\n";
  out << "  solvable:       " << (st.solvable() ? "yes" : "no") << "\n";
}

void print_report_text(const GroupTable& g, const TheoremReport& r, std::ostream& out) {
  out << to_string(r.statement) << " on " << g.name() << ": " << to_string(r.verdict) << "\n";
  for (const auto& [name, holds] : r.hypotheses)
    out << "  [" << (holds ? "x" : " ") << "] " << name << "\n";
  if (r.conclusion) out << "  conclusion: " << (*r.conclusion ? "holds" : "FAILS") << "\n";
  if (!r.witness.empty()) out << "  witness: " << r.witness.dump() << "\n";
}

int run_info(const std::string& spec, bool json, const BuildOptions& build) {
  auto g = build_group(spec, build);
  GroupStructure st(g);
  if (json) {
    std::cout << group_summary_json(st).dump(2) << "\n";
  } else {
    print_info_text(st, std::cout);
  }
  return kExitOk;
}

int run_check(const std::string& spec, const std::string& statement, bool witness_search,
              std::size_t oracle_cap, bool json, const BuildOptions& build) {
  auto s = parse_statement(statement);
  if (!s) throw Error(ErrorKind::InvalidArgument, "unknown statement '" + statement + "'");
  auto g = build_group(spec, build);
  GroupStructure st(g);
  bool enumerated = false;
  auto normals = candidate_normal_subgroups(st, oracle_cap, &enumerated);
  if (witness_search && !enumerated) {
    throw Error(ErrorKind::OracleCapExceeded,
                g.name() + " has " + std::to_string(st.classes().count()) +
                    " classes; raise --oracle-cap for the witness search");
  }
  auto reports = check_statement(st, *s, normals, witness_search);

  bool counterexample = false;
  for (const auto& r : reports) counterexample |= r.verdict == Verdict::Counterexample;
  if (json) {
    Json j;
    j["group"] = group_summary_json(st);
    j["normal_subgroups_enumerated"] = enumerated;
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    j["reports"] = std::move(arr);
    if (counterexample) j["group_table"] = group_to_json(g);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report_text(g, r, std::cout);
  }
  return counterexample ? kExitCounterexample : kExitOk;
}

int run_scan(ScanConfig config, bool json, const std::string& out_path) {
  auto report = scan(config);
  auto format = json ? ReportFormat::Structured : ReportFormat::Text;
  if (out_path.empty()) {
    emit_report(report, format, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + out_path);
    emit_report(report, format, out);
    if (!out) throw Error(ErrorKind::IoError, "write failed for " + out_path);
  }
  if (report.counterexample_count() > 0) {
    std::cerr << (report.proved_statement_failed()
                      ? "error: a proved statement returned COUNTEREXAMPLE\n"
                      : "note: conjecture counterexample found\n");
    return kExitCounterexample;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-group small-class checker"};
  app.require_subcommand(1);

  std::size_t max_order = kDefaultOrderCap;
  app.add_option("--max-order", max_order, "Largest group order to build")
      ->capture_default_str();

  std::string group_spec;
  bool json = false;

  auto* info = app.add_subcommand("info", "Print invariants of one group");
  info->add_option("--group", group_spec, "Group spec, e.g. sym:4")->required();
  info->add_flag("--json", json, "Structured output");

  std::string statement;
  bool witness_search = false;
  std::size_t oracle_cap = kDefaultOracleCap;
  auto* check = app.add_subcommand("check", "Check one statement on one group");
  check->add_option("--group", group_spec, "Group spec")->required();
  check->add_option("--statement", statement, "Statement name")->required();
  check->add_flag("--subgroup-witness-search", witness_search,
                  "Search all normal subgroups A with C_G(A) <= A");
  check->add_option("--oracle-cap", oracle_cap, "Class-count cap for subgroup enumeration")
      ->capture_default_str();
  check->add_flag("--json", json, "Structured output");

  ScanConfig config;
  config.builtin_max_order = 64;
  std::string statements = "all";
  std::size_t jobs = std::max(1U, std::thread::hardware_concurrency());
  std::string out_path;
  auto* scan_cmd = app.add_subcommand("scan", "Check statements over catalogs of groups");
  scan_cmd->add_option("--builtin-max-order", config.builtin_max_order,
                       "Include built-in groups up to this order (0 for none)")
      ->capture_default_str();
  scan_cmd->add_option("--catalog", config.catalogs, "Catalog file (repeatable)");
  scan_cmd->add_option("--statements", statements, "Comma-separated statements or 'all'")
      ->capture_default_str();
  scan_cmd->add_option("--oracle-cap", config.oracle_cap,
                       "Class-count cap for subgroup enumeration")
      ->capture_default_str();
  scan_cmd->add_option("--jobs", jobs, "Worker threads");
  scan_cmd->add_flag("--json", json, "Structured output");
  scan_cmd->add_option("--out", out_path, "Write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  BuildOptions build{max_order};
  try {
    if (*info) return run_info(group_spec, json, build);
    if (*check) return run_check(group_spec, statement, witness_search, oracle_cap, json, build);
    config.statements = parse_statement_list(statements);
    config.jobs = jobs;
    config.build = build;
    return run_scan(std::move(config), json, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
