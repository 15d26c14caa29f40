#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "smallclass/catalog.hpp"
#include "smallclass/fitting.hpp"
#include "smallclass/group_spec.hpp"
#include "smallclass/structure.hpp"
#include "smallclass/theorems.hpp"

namespace smallclass {

inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

/// A group queued for scanning, with a note on where it came from.
struct ScanGroup {
  std::string source;
  GroupTable table;
};

struct ScanConfig {
  std::size_t builtin_max_order = 0;
  std::vector<std::string> catalogs;
  std::vector<Statement> statements{kAllStatements.begin(), kAllStatements.end()};
  std::size_t oracle_cap = kDefaultOracleCap;
  std::size_t jobs = 1;
  BuildOptions build;
};

struct GroupResult {
  std::string name;
  std::string source;
  std::size_t order = 0;
  std::vector<std::size_t> class_sizes;
  bool small_degenerate = false;
  std::size_t center_order = 0;
  std::size_t m_order = 0;
  std::optional<std::size_t> m_class;
  std::size_t fitting_order = 0;
  bool solvable = false;
  /// False when the class count exceeded the oracle cap, so subgroups K and A
  /// came from a fixed list of characteristic subgroups instead of a full search.
  bool normal_subgroups_enumerated = false;
  std::vector<TheoremReport> reports;
  std::optional<std::string> error;
  Json group_table;  // filled only when a report is a counterexample
};

struct ScanReport {
  ScanConfig config;
  std::vector<std::string> warnings;
  std::vector<GroupResult> groups;

  std::size_t counterexample_count() const {
    std::size_t n = 0;
    for (const auto& g : groups)
      for (const auto& r : g.reports) n += r.verdict == Verdict::Counterexample;
    return n;
  }
  bool proved_statement_failed() const {
    for (const auto& g : groups)
      for (const auto& r : g.reports)
        if (r.verdict == Verdict::Counterexample && !is_conjecture(r.statement)) return true;
    return false;
  }
};

// ---------------------------------------------------------------------------
// Built-in catalog

/// Order of a family spec without building it; nullopt for file references.
inline std::optional<std::size_t> spec_order(const GroupSpec& s) {
  const auto& p = s.params;
  auto factorial = [](std::size_t n) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (s.family) {
    case Family::Cyclic: return p[0];
    case Family::Dihedral: return 2 * p[0];
    case Family::Dicyclic: return 4 * p[0];
    case Family::Symmetric: return factorial(p[0]);
    case Family::Alternating: return p[0] < 2 ? 1 : factorial(p[0]) / 2;
    case Family::ElemAbelian: {
      std::size_t n = 1;
      for (std::size_t i = 0; i < p[1]; ++i) n *= p[0];
      return n;
    }
    case Family::Heisenberg: return p[0] * p[0] * p[0];
    case Family::Affine: return p[0] * p[1];
    case Family::Product: {
      auto a = spec_order(s.factors[0]), b = spec_order(s.factors[1]);
      if (!a || !b) return std::nullopt;
      return *a * *b;
    }
    default: return std::nullopt;
  }
}

/// Spec strings of the built-in catalog with order <= max_order: all family
/// members in range, Frobenius groups from `affine`, and direct products of
/// pairs from a list of small groups (at least one factor non-abelian).
inline std::vector<std::string> builtin_specs(std::size_t max_order) {
  std::vector<std::string> out;
  auto add = [&](const std::string& text) {
    auto o = spec_order(parse_group_spec(text));
    if (o && *o <= max_order) out.push_back(text);
  };
  for (std::size_t n = 1; n <= max_order; ++n) add("cyclic:" + std::to_string(n));
  for (std::size_t n = 3; 2 * n <= max_order; ++n) add("dihedral:" + std::to_string(n));
  for (std::size_t n = 2; 4 * n <= max_order; ++n) add("dicyclic:" + std::to_string(n));
  for (std::size_t n = 3; n <= kMaxSymmetricDegree; ++n) add("sym:" + std::to_string(n));
  for (std::size_t n = 4; n <= kMaxSymmetricDegree; ++n) add("alt:" + std::to_string(n));
  for (std::size_t p = 2; p * p <= max_order; ++p) {
    if (!detail::is_prime(p)) continue;
    std::size_t q = p * p;
    for (std::size_t k = 2; q <= max_order; ++k, q *= p)
      add("elemab:" + std::to_string(p) + "," + std::to_string(k));
  }
  for (std::size_t p = 3; p * p * p <= max_order; p += 2)
    if (detail::is_prime(p)) add("heisenberg:" + std::to_string(p));
  for (std::size_t p = 5; p * 3 <= max_order; ++p) {
    if (!detail::is_prime(p)) continue;
    for (std::size_t d = 3; d < p; ++d)
      if ((p - 1) % d == 0) add("affine:" + std::to_string(p) + "," + std::to_string(d));
  }

  struct Base {
    const char* spec;
    std::size_t order;
    bool abelian;
  };
  static constexpr Base kBase[] = {
      {"cyclic:2", 2, true},      {"cyclic:3", 3, true},      {"cyclic:4", 4, true},
      {"sym:3", 6, false},        {"dihedral:4", 8, false},   {"dicyclic:2", 8, false},
      {"dihedral:5", 10, false},  {"alt:4", 12, false},       {"dicyclic:3", 12, false},
      {"dihedral:6", 12, false},  {"affine:5,4", 20, false},  {"affine:7,3", 21, false},
      {"sym:4", 24, false},       {"heisenberg:3", 27, false}, {"alt:5", 60, false},
  };
  const std::size_t nb = std::size(kBase);
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = i; j < nb; ++j) {
      const auto& a = kBase[i];
      const auto& b = kBase[j];
      if (a.abelian && b.abelian) continue;
      if (a.order * b.order > max_order) continue;
      // Larger factor first: "S3xC2", "D4xC3".
      const auto& first = a.order >= b.order ? a : b;
      const auto& second = a.order >= b.order ? b : a;
      out.push_back(std::string("product:") + first.spec + "," + second.spec);
    }
  }
  return out;
}

inline std::vector<ScanGroup> builtin_groups(std::size_t max_order, const BuildOptions& options = {}) {
  std::vector<ScanGroup> out;
  for (const auto& spec : builtin_specs(std::min(max_order, options.max_order)))
    out.push_back({spec, build_group(spec, options)});
  return out;
}

// ---------------------------------------------------------------------------
// Per-group checking

/// Normal subgroups used as K (and the pool for A) when enumeration is over
/// the cap: 1, Z(G), M(G), F(G), [G,G] and G.
inline std::vector<Subgroup> fallback_normal_subgroups(const GroupStructure& st) {
  const auto& g = st.group();
  std::vector<Subgroup> out;
  for (auto s : {Subgroup::trivial(g), st.center(), st.m(), st.fitting(),
                 commutator_subgroup(g, st.whole(), st.whole()), st.whole()}) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  }
  return out;
}

/// Normal subgroups by enumeration when within the cap, else the fallback
/// list. `enumerated` reports which.
inline std::vector<Subgroup> candidate_normal_subgroups(const GroupStructure& st, std::size_t cap,
                                                        bool* enumerated = nullptr) {
  if (st.classes().count() <= cap) {
    if (enumerated) *enumerated = true;
    return enumerate_normal_subgroups(st.group(), st.classes(), cap);
  }
  if (enumerated) *enumerated = false;
  return fallback_normal_subgroups(st);
}

/// Runs one statement on one group. Statements about a subgroup K run over
/// every candidate K. Theorem A and Corollary B run over every candidate A
/// with C_G(A) <= A when `witness_search` is set (A = F(G) and A = G
/// otherwise).
inline std::vector<TheoremReport> check_statement(const GroupStructure& st, Statement s,
                                                  const std::vector<Subgroup>& normals,
                                                  bool witness_search) {
  const auto& g = st.group();
  std::vector<TheoremReport> out;
  auto a_candidates = [&] {
    std::vector<Subgroup> as;
    if (witness_search) {
      for (const auto& a : normals)
        if (centralizer(g, a, st.whole()).is_subset_of(a)) as.push_back(a);
    } else {
      as.push_back(st.fitting());
      if (!(st.fitting() == st.whole())) as.push_back(st.whole());
    }
    return as;
  };
  switch (s) {
    case Statement::LemmaCentralizer:
      for (const auto& k : normals) out.push_back(check_lemma_centralizer(st, k));
      break;
    case Statement::PropCommutatorCentral:
      for (const auto& k : normals) out.push_back(check_prop_commutator_central(st, k));
      break;
    case Statement::TheoremA:
      for (const auto& a : a_candidates()) out.push_back(check_theorem_A(st, a));
      break;
    case Statement::CorollaryB:
      for (const auto& a : a_candidates()) out.push_back(check_corollary_B(st, a));
      break;
    case Statement::TheoremC: out.push_back(check_theorem_C(st)); break;
    case Statement::Conjecture1: out.push_back(check_conjecture_1(st)); break;
    case Statement::Conjecture1Prime: out.push_back(check_conjecture_1prime(st)); break;
    case Statement::PropEquivalence: out.push_back(check_equivalence(st)); break;
    case Statement::PropFlat: out.push_back(check_prop_flat(st)); break;
  }
  return out;
}

inline GroupResult check_group(const ScanGroup& input, const std::vector<Statement>& statements,
                               std::size_t oracle_cap) {
  GroupResult res;
  const auto& g = input.table;
  res.name = g.name();
  res.source = input.source;
  res.order = g.order();
  try {
    GroupStructure st(g);
    res.class_sizes = st.classes().size;
    res.small_degenerate = st.small_degenerate();
    res.center_order = st.center().order();
    res.m_order = st.m().order();
    res.m_class = st.m_class();
    res.fitting_order = st.fitting().order();
    res.solvable = st.solvable();
    auto normals = candidate_normal_subgroups(st, oracle_cap, &res.normal_subgroups_enumerated);
    for (auto s : statements) {
      auto reps = check_statement(st, s, normals, res.normal_subgroups_enumerated);
      for (auto& r : reps) res.reports.push_back(std::move(r));
    }
    for (const auto& r : res.reports) {
      if (r.verdict == Verdict::Counterexample) {
        res.group_table = group_to_json(g);
        break;
      }
    }
  } catch (const Error& e) {
    res.error = e.what();
  }
  return res;
}

/// Runs every statement on every group. Work fans out over `config.jobs`
/// threads; results keep input order, which is (order, name, source).
inline ScanReport scan(std::vector<ScanGroup> groups, const ScanConfig& config) {
  if (config.statements.empty()) {
    throw Error(ErrorKind::InvalidArgument, "scan needs at least one statement");
  }
  std::stable_sort(groups.begin(), groups.end(), [](const ScanGroup& a, const ScanGroup& b) {
    if (a.table.order() != b.table.order()) return a.table.order() < b.table.order();
    if (a.table.name() != b.table.name()) return a.table.name() < b.table.name();
    return a.source < b.source;
  });

  ScanReport report;
  report.config = config;
  report.groups.resize(groups.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < groups.size(); i = next++)
      report.groups[i] = check_group(groups[i], config.statements, config.oracle_cap);
  };
  std::size_t jobs = std::max<std::size_t>(1, std::min(config.jobs, groups.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

/// Builtin groups plus every catalog named in the config.
inline ScanReport scan(const ScanConfig& config) {
  auto groups = builtin_groups(config.builtin_max_order, config.build);
  std::vector<std::string> warnings;
  for (const auto& path : config.catalogs) {
    auto loaded = load_catalog(path, config.build, &warnings);
    for (std::size_t i = 0; i < loaded.size(); ++i)
      groups.push_back({path + "#" + std::to_string(i), std::move(loaded[i])});
  }
  auto report = scan(std::move(groups), config);
  report.warnings = std::move(warnings);
  return report;
}

// ---------------------------------------------------------------------------
// Report emission

inline Json group_summary_json(const GroupStructure& st) {
  Json j;
  j["name"] = st.group().name();
  j["order"] = st.group().order();
  j["class_sizes"] = st.classes().size;
  j["center_order"] = st.center().order();
  j["small_elements_degenerate"] = st.small_degenerate();
  j["m_order"] = st.m().order();
  j["m_class"] = detail::optional_json(st.m_class());
  j["fitting_order"] = st.fitting().order();
  j["solvable"] = st.solvable();
  return j;
}

inline Json to_json(const GroupResult& g) {
  Json j;
  j["name"] = g.name;
  j["source"] = g.source;
  j["order"] = g.order;
  if (g.error) {
    j["error"] = *g.error;
    return j;
  }
  j["class_sizes"] = g.class_sizes;
  j["center_order"] = g.center_order;
  j["small_elements_degenerate"] = g.small_degenerate;
  j["m_order"] = g.m_order;
  j["m_class"] = detail::optional_json(g.m_class);
  j["fitting_order"] = g.fitting_order;
  j["solvable"] = g.solvable;
  j["normal_subgroups_enumerated"] = g.normal_subgroups_enumerated;
  Json reps = Json::array();
  for (const auto& r : g.reports) reps.push_back(to_json(r));
  j["reports"] = std::move(reps);
  return j;
}

inline Json to_json(const ScanReport& report) {
  const auto& c = report.config;
  Json j;
  j["schema"] = "smallclass.scan";
  j["schema_version"] = kReportSchemaVersion;
  j["tool_version"] = kToolVersion;
  Json cfg;
  cfg["builtin_max_order"] = c.builtin_max_order;
  cfg["catalogs"] = c.catalogs;
  Json stmts = Json::array();
  for (auto s : c.statements) stmts.push_back(to_string(s));
  cfg["statements"] = std::move(stmts);
  cfg["oracle_cap"] = c.oracle_cap;
  cfg["max_order"] = c.build.max_order;
  j["config"] = std::move(cfg);
  j["warnings"] = report.warnings;

  Json groups = Json::array();
  Json counterexamples = Json::array();
  std::map<Statement, std::map<Verdict, std::size_t>> counts;
  std::size_t errors = 0, total = 0;
  for (const auto& g : report.groups) {
    groups.push_back(to_json(g));
    errors += g.error.has_value();
    for (const auto& r : g.reports) {
      ++counts[r.statement][r.verdict];
      ++total;
      if (r.verdict == Verdict::Counterexample) {
        Json ce;
        ce["group"] = g.name;
        ce["source"] = g.source;
        ce["statement"] = to_string(r.statement);
        ce["kind"] = is_conjecture(r.statement) ? "conjecture" : "proved_statement";
        ce["report"] = to_json(r);
        ce["group_table"] = g.group_table;
        counterexamples.push_back(std::move(ce));
      }
    }
  }
  j["groups"] = std::move(groups);

  Json summary;
  summary["groups"] = report.groups.size();
  summary["group_errors"] = errors;
  summary["reports"] = total;
  Json by = Json::object();
  for (auto s : c.statements) {
    Json v = Json::object();
    for (auto verdict : kAllVerdicts) v[std::string(to_string(verdict))] = counts[s][verdict];
    by[std::string(to_string(s))] = std::move(v);
  }
  summary["by_statement"] = std::move(by);
  summary["counterexamples"] = counterexamples.size();
  j["summary"] = std::move(summary);
  j["counterexamples"] = std::move(counterexamples);
  return j;
}

inline std::string format_class(std::optional<std::size_t> c) {
  return c ? std::to_string(*c) : std::string("not nilpotent");
}

inline void emit_text(const ScanReport& report, std::ostream& out) {
  auto json = to_json(report);
  out << "smallclass scan " << kToolVersion << "\n";
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  out << "\n";
  for (const auto& g : report.groups) {
    out << g.name << " [" << g.source << "] order " << g.order;
    if (g.error) {
      out << "  ERROR " << *g.error << "\n";
      continue;
    }
    out << "  classes {";
    for (std::size_t i = 0; i < g.class_sizes.size(); ++i)
      out << (i ? "," : "") << g.class_sizes[i];
    out << "}  |Z|=" << g.center_order << "  |M|=" << g.m_order
        << " class " << format_class(g.m_class) << "  |F|=" << g.fitting_order
        << (g.solvable ? "  solvable" : "  non-solvable")
        << (g.small_degenerate ? "  degenerate" : "") << "\n";
    std::map<Statement, std::map<Verdict, std::size_t>> per;
    for (const auto& r : g.reports) ++per[r.statement][r.verdict];
    for (const auto& [s, vs] : per) {
      out << "    " << to_string(s) << ":";
      for (const auto& [v, n] : vs) out << " " << to_string(v) << "=" << n;
      out << "\n";
    }
  }
  out << "\nsummary: " << json["summary"]["groups"] << " groups, " << json["summary"]["reports"]
      << " reports\n";
  for (const auto& [s, vs] : json["summary"]["by_statement"].items()) {
    out << "  " << s << ":";
    for (const auto& [v, n] : vs.items()) out << " " << v << "=" << n;
    out << "\n";
  }
  for (const auto& ce : json["counterexamples"]) {
    out << "COUNTEREXAMPLE (" << ce["kind"].get<std::string>() << ") "
        << ce["statement"].get<std::string>() << " on " << ce["group"].get<std::string>() << "\n";
  }
}

enum class ReportFormat { Text, Structured };

inline void emit_report(const ScanReport& report, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::Structured) {
    out << to_json(report).dump(2) << "\n";
  } else {
    emit_text(report, out);
  }
}

}  // namespace smallclass
