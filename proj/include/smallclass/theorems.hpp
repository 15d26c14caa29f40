#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "smallclass/classes.hpp"
#include "smallclass/fitting.hpp"
#include "smallclass/series.hpp"
#include "smallclass/structure.hpp"
#include "smallclass/subgroup.hpp"

namespace smallclass {

using Json = nlohmann::ordered_json;

enum class Statement {
  LemmaCentralizer,
  PropCommutatorCentral,
  TheoremA,
  CorollaryB,
  TheoremC,
  Conjecture1,
  Conjecture1Prime,
  PropEquivalence,
  PropFlat,
};

inline constexpr std::array<Statement, 9> kAllStatements{
    Statement::LemmaCentralizer, Statement::PropCommutatorCentral, Statement::TheoremA,
    Statement::CorollaryB,       Statement::TheoremC,              Statement::Conjecture1,
    Statement::Conjecture1Prime, Statement::PropEquivalence,       Statement::PropFlat,
};

inline std::string_view to_string(Statement s) {
  switch (s) {
    case Statement::LemmaCentralizer: return "lemma_centralizer";
    case Statement::PropCommutatorCentral: return "prop_commutator_central";
    case Statement::TheoremA: return "theorem_A";
    case Statement::CorollaryB: return "corollary_B";
    case Statement::TheoremC: return "theorem_C";
    case Statement::Conjecture1: return "conjecture_1";
    case Statement::Conjecture1Prime: return "conjecture_1prime";
    case Statement::PropEquivalence: return "prop_equivalence";
    case Statement::PropFlat: return "prop_flat";
  }
  return "unknown";
}

inline std::optional<Statement> parse_statement(std::string_view name) {
  for (auto s : kAllStatements)
    if (to_string(s) == name) return s;
  return std::nullopt;
}

/// Conjectures are open; every other statement is proved, so a counterexample
/// to one of them means a bug.
inline bool is_conjecture(Statement s) {
  return s == Statement::Conjecture1 || s == Statement::Conjecture1Prime;
}

enum class Verdict { HypothesisNotMet, Verified, Counterexample, NotApplicable };

inline constexpr std::array<Verdict, 4> kAllVerdicts{
    Verdict::HypothesisNotMet, Verdict::Verified, Verdict::Counterexample, Verdict::NotApplicable};

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::HypothesisNotMet: return "HYPOTHESIS_NOT_MET";
    case Verdict::Verified: return "VERIFIED";
    case Verdict::Counterexample: return "COUNTEREXAMPLE";
    case Verdict::NotApplicable: return "NOT_APPLICABLE";
  }
  return "UNKNOWN";
}

struct TheoremReport {
  std::string group_name;
  Statement statement = Statement::LemmaCentralizer;
  std::vector<std::pair<std::string, bool>> hypotheses;
  std::optional<bool> conclusion;
  Verdict verdict = Verdict::NotApplicable;
  Json witness = Json::object();

  bool all_hypotheses() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(),
                       [](const auto& h) { return h.second; });
  }

  /// Verdict and fields agree: VERIFIED and COUNTEREXAMPLE carry all-true
  /// hypotheses and a conclusion of matching value; the other two carry none.
  bool consistent() const {
    switch (verdict) {
      case Verdict::Verified: return all_hypotheses() && conclusion == true;
      case Verdict::Counterexample: return all_hypotheses() && conclusion == false;
      case Verdict::HypothesisNotMet: return !all_hypotheses() && !conclusion.has_value();
      case Verdict::NotApplicable: return !conclusion.has_value();
    }
    return false;
  }
};

inline Json to_json(const TheoremReport& r) {
  Json j;
  j["statement"] = to_string(r.statement);
  j["verdict"] = to_string(r.verdict);
  Json hyps = Json::array();
  for (const auto& [name, value] : r.hypotheses) hyps.push_back({{"name", name}, {"holds", value}});
  j["hypotheses"] = std::move(hyps);
  j["conclusion"] = r.conclusion ? Json(*r.conclusion) : Json(nullptr);
  j["witness"] = r.witness;
  return j;
}

namespace detail {

inline Json set_json(const ElementSet& s) {
  Json a = Json::array();
  for (auto x : s) a.push_back(x);
  return a;
}

inline Json element_json(const GroupTable& g, ElementId x) {
  return {{"id", x}, {"label", g.label(x)}};
}

inline Json optional_json(std::optional<std::size_t> v) {
  return v ? Json(*v) : Json(nullptr);
}

inline TheoremReport start(const GroupStructure& st, Statement s) {
  TheoremReport r;
  r.group_name = st.group().name();
  r.statement = s;
  return r;
}

/// Fill verdict and conclusion from the hypotheses already recorded.
template <typename Conclusion>
void decide(TheoremReport& r, Conclusion&& conclusion) {
  if (!r.all_hypotheses()) {
    r.verdict = Verdict::HypothesisNotMet;
    r.conclusion.reset();
    return;
  }
  bool c = conclusion();
  r.conclusion = c;
  r.verdict = c ? Verdict::Verified : Verdict::Counterexample;
}

inline TheoremReport not_applicable(TheoremReport r, std::string reason) {
  r.verdict = Verdict::NotApplicable;
  r.conclusion.reset();
  r.witness["reason"] = std::move(reason);
  return r;
}

/// First small x for which `pred(x)` is false, if any.
template <typename Pred>
std::optional<ElementId> first_small_failing(const GroupStructure& st, Pred&& pred) {
  for (auto x : st.small())
    if (!pred(x)) return x;
  return std::nullopt;
}

}  // namespace detail

/// For x outside Z(G) with [x,K] a normal subset of K, every y in [x,K]
/// satisfies |C_G(y)| > |C_G(x)| (strictly).
inline TheoremReport check_lemma_centralizer(const GroupStructure& st, const Subgroup& k) {
  const auto& g = st.group();
  auto r = detail::start(st, Statement::LemmaCentralizer);
  r.witness["K_order"] = k.order();
  bool normal = is_normal_subgroup(g, k.elements());
  r.hypotheses.emplace_back("K normal in G", normal);
  if (!normal) return detail::not_applicable(std::move(r), "K is not normal in G");

  std::size_t tested_x = 0, tested_pairs = 0;
  detail::decide(r, [&] {
    for (ElementId x = 0; x < g.order(); ++x) {
      if (st.center().contains(x)) continue;
      auto cs = commutator_set(g, x, k);
      if (!is_normal_subset(g, cs, k)) continue;
      ++tested_x;
      for (auto y : cs) {
        ++tested_pairs;
        if (!(st.centralizer_order(y) > st.centralizer_order(x))) {
          r.witness["violation"] = {{"x", detail::element_json(g, x)},
                                    {"y", detail::element_json(g, y)},
                                    {"centralizer_order_x", st.centralizer_order(x)},
                                    {"centralizer_order_y", st.centralizer_order(y)}};
          return false;
        }
      }
    }
    return true;
  });
  r.witness["x_tested"] = tested_x;
  r.witness["pairs_tested"] = tested_pairs;
  return r;
}

/// If [x,K] is a normal subset of K for every small x, then [M(G),K] <= Z(G).
inline TheoremReport check_prop_commutator_central(const GroupStructure& st, const Subgroup& k) {
  const auto& g = st.group();
  auto r = detail::start(st, Statement::PropCommutatorCentral);
  r.witness["K_order"] = k.order();
  bool normal = is_normal_subgroup(g, k.elements());
  r.hypotheses.emplace_back("K normal in G", normal);
  if (!normal) return detail::not_applicable(std::move(r), "K is not normal in G");

  auto failing = detail::first_small_failing(
      st, [&](ElementId x) { return is_normal_subset(g, commutator_set(g, x, k), k); });
  r.hypotheses.emplace_back("[x,K] normal subset of K for all small x", !failing);
  if (failing) r.witness["failing_small_element"] = detail::element_json(g, *failing);

  detail::decide(r, [&] {
    auto mk = commutator_subgroup(g, st.m(), k);
    r.witness["MK_order"] = mk.order();
    r.witness["center_order"] = st.center().order();
    return mk.is_subset_of(st.center());
  });
  return r;
}

namespace detail {

inline bool theorem_A_subset_condition(const GroupStructure& st, const Subgroup& a,
                                       std::optional<ElementId>* failing = nullptr) {
  const auto& g = st.group();
  auto f = first_small_failing(
      st, [&](ElementId x) { return is_normal_subset(g, commutator_set(g, a, x), a); });
  if (failing) *failing = f;
  return !f;
}

inline void record_a_hypotheses(const GroupStructure& st, const Subgroup& a, TheoremReport& r) {
  const auto& g = st.group();
  auto ca = centralizer(g, a, st.whole());
  r.witness["A_order"] = a.order();
  r.witness["A_elements"] = set_json(a.elements());
  r.witness["centralizer_order"] = ca.order();
  r.hypotheses.emplace_back("A normal in G", is_normal_subgroup(g, a.elements()));
  r.hypotheses.emplace_back("C_G(A) <= A", ca.is_subset_of(a));
}

}  // namespace detail

/// A normal, C_G(A) <= A, [A,x] a normal subset of A for all small x
/// => M(G) nilpotent of class at most 3.
inline TheoremReport check_theorem_A(const GroupStructure& st, const Subgroup& a) {
  const auto& g = st.group();
  auto r = detail::start(st, Statement::TheoremA);
  detail::record_a_hypotheses(st, a, r);
  std::optional<ElementId> failing;
  r.hypotheses.emplace_back("[A,x] normal subset of A for all small x",
                            detail::theorem_A_subset_condition(st, a, &failing));
  if (failing) r.witness["failing_small_element"] = detail::element_json(g, *failing);
  r.witness["m_order"] = st.m().order();
  r.witness["m_class"] = detail::optional_json(st.m_class());
  detail::decide(r, [&] { return st.m_class().has_value() && *st.m_class() <= 3; });
  return r;
}

/// Theorem A reports for every normal A with C_G(A) <= A.
inline std::vector<std::pair<Subgroup, TheoremReport>> find_theorem_A_witnesses(
    const GroupStructure& st, std::size_t cap = kDefaultOracleCap) {
  const auto& g = st.group();
  std::vector<std::pair<Subgroup, TheoremReport>> out;
  for (auto& a : enumerate_normal_subgroups(g, st.classes(), cap)) {
    if (!centralizer(g, a, st.whole()).is_subset_of(a)) continue;
    auto rep = check_theorem_A(st, a);
    out.emplace_back(std::move(a), std::move(rep));
  }
  return out;
}

/// As Theorem A with [A,x] <= Z(A). The conclusion also requires that this
/// hypothesis implies Theorem A's normal-subset hypothesis.
inline TheoremReport check_corollary_B(const GroupStructure& st, const Subgroup& a) {
  const auto& g = st.group();
  auto r = detail::start(st, Statement::CorollaryB);
  detail::record_a_hypotheses(st, a, r);
  auto za = center(g, a);
  auto failing = detail::first_small_failing(
      st, [&](ElementId x) { return commutator_set(g, a, x).is_subset_of(za.elements()); });
  r.hypotheses.emplace_back("[A,x] <= Z(A) for all small x", !failing);
  if (failing) r.witness["failing_small_element"] = detail::element_json(g, *failing);
  r.witness["m_order"] = st.m().order();
  r.witness["m_class"] = detail::optional_json(st.m_class());
  detail::decide(r, [&] {
    bool implies = detail::theorem_A_subset_condition(st, a);
    r.witness["implies_theorem_A_hypothesis"] = implies;
    return implies && st.m_class().has_value() && *st.m_class() <= 3;
  });
  return r;
}

/// C_G(F) <= F and [x,F] a normal subset of F for all small x
/// => class(M(G)) <= 2, and also M(G) <= Z_2(F).
inline TheoremReport check_theorem_C(const GroupStructure& st) {
  const auto& g = st.group();
  const auto& f = st.fitting();
  auto r = detail::start(st, Statement::TheoremC);
  auto cf = centralizer(g, f, st.whole());
  r.witness["fitting_order"] = f.order();
  r.witness["centralizer_of_fitting_order"] = cf.order();
  r.hypotheses.emplace_back("C_G(F) <= F", cf.is_subset_of(f));
  auto failing = detail::first_small_failing(
      st, [&](ElementId x) { return is_normal_subset(g, commutator_set(g, x, f), f); });
  r.hypotheses.emplace_back("[x,F] normal subset of F for all small x", !failing);
  if (failing) r.witness["failing_small_element"] = detail::element_json(g, *failing);
  r.witness["m_order"] = st.m().order();
  r.witness["m_class"] = detail::optional_json(st.m_class());
  detail::decide(r, [&] {
    bool class_at_most_2 = st.m_class().has_value() && *st.m_class() <= 2;
    const auto& z2 = st.fitting_second_center();
    bool in_second_center = st.m().is_subset_of(z2);
    r.witness["second_center_order"] = z2.order();
    r.witness["class_at_most_2"] = class_at_most_2;
    r.witness["m_in_second_center"] = in_second_center;
    return class_at_most_2 && in_second_center;
  });
  return r;
}

namespace detail {

inline void record_solvable_centerless(const GroupStructure& st, TheoremReport& r) {
  r.hypotheses.emplace_back("G solvable", st.solvable());
  r.hypotheses.emplace_back("Z(G) = 1", st.centerless());
  r.witness["center_order"] = st.center().order();
}

inline bool all_small_normal_in_fitting(const GroupStructure& st,
                                        std::optional<ElementId>* failing = nullptr) {
  const auto& g = st.group();
  const auto& f = st.fitting();
  auto x = first_small_failing(
      st, [&](ElementId y) { return is_normal_subset(g, commutator_set(g, y, f), f); });
  if (failing) *failing = x;
  return !x;
}

/// Full dump for a conjecture counterexample.
inline void dump_conjecture_context(const GroupStructure& st, TheoremReport& r) {
  r.witness["class_sizes"] = st.classes().size;
  r.witness["small_elements"] = set_json(st.small());
  r.witness["fitting_elements"] = set_json(st.fitting().elements());
  r.witness["fitting_center_elements"] = set_json(st.fitting_center().elements());
}

}  // namespace detail

/// G solvable with Z(G) = 1 => every small element lies in Z(F(G)). Open.
inline TheoremReport check_conjecture_1(const GroupStructure& st) {
  const auto& g = st.group();
  auto r = detail::start(st, Statement::Conjecture1);
  detail::record_solvable_centerless(st, r);
  detail::decide(r, [&] {
    auto outside = st.small() - st.fitting_center().elements();
    if (outside.empty()) return true;
    Json offenders = Json::array();
    for (auto x : outside) offenders.push_back(detail::element_json(g, x));
    r.witness["small_outside_fitting_center"] = std::move(offenders);
    detail::dump_conjecture_context(st, r);
    return false;
  });
  return r;
}

/// G solvable with Z(G) = 1 => [x,F(G)] is a normal subset of F(G) for every
/// small x. Open.
inline TheoremReport check_conjecture_1prime(const GroupStructure& st) {
  const auto& g = st.group();
  auto r = detail::start(st, Statement::Conjecture1Prime);
  detail::record_solvable_centerless(st, r);
  detail::decide(r, [&] {
    std::optional<ElementId> failing;
    if (detail::all_small_normal_in_fitting(st, &failing)) return true;
    r.witness["failing_small_element"] = detail::element_json(g, *failing);
    r.witness["commutator_set"] = detail::set_json(commutator_set(g, *failing, st.fitting()));
    detail::dump_conjecture_context(st, r);
    return false;
  });
  return r;
}

/// For solvable centerless G: M(G) <= Z(F(G)) iff [x,F(G)] is a normal subset
/// of F(G) for all small x.
inline TheoremReport check_equivalence(const GroupStructure& st) {
  auto r = detail::start(st, Statement::PropEquivalence);
  detail::record_solvable_centerless(st, r);
  if (!r.all_hypotheses()) {
    return detail::not_applicable(std::move(r), "G is not solvable with trivial center");
  }
  detail::decide(r, [&] {
    bool m_in_zf = st.m().is_subset_of(st.fitting_center());
    bool normal_subsets = detail::all_small_normal_in_fitting(st);
    r.witness["m_in_fitting_center"] = m_in_zf;
    r.witness["normal_subset_condition"] = normal_subsets;
    return m_in_zf == normal_subsets;
  });
  return r;
}

/// [x,G] is a subgroup for every x. Conjugate elements have conjugate
/// commutator sets, so class representatives suffice.
inline bool is_flat(const GroupTable& g, const ClassPartition& cp) {
  auto whole = Subgroup::whole(g);
  for (auto x : cp.representative)
    if (!is_subgroup(g, commutator_set(g, x, whole))) return false;
  return true;
}

inline bool is_flat(const GroupTable& g) { return is_flat(g, conjugacy_classes(g)); }

/// All non-central classes share one size; vacuously true for abelian groups.
inline bool conjugate_rank_one(const ClassPartition& cp) {
  std::size_t seen = 0;
  for (auto s : cp.size) {
    if (s == 1) continue;
    if (seen != 0 && s != seen) return false;
    seen = s;
  }
  return true;
}

inline bool conjugate_rank_one(const GroupTable& g) {
  return conjugate_rank_one(conjugacy_classes(g));
}

inline bool is_prime_power(std::size_t n) {
  if (n < 2) return false;
  std::size_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

/// For a p-group of conjugate rank 1: flat iff nilpotency class 2.
inline TheoremReport check_prop_flat(const GroupStructure& st) {
  const auto& g = st.group();
  auto r = detail::start(st, Statement::PropFlat);
  bool p_group = is_prime_power(g.order());
  bool rank_one = conjugate_rank_one(st.classes());
  bool non_abelian = st.center().order() < g.order();
  r.hypotheses.emplace_back("G is a p-group", p_group);
  r.hypotheses.emplace_back("G has conjugate rank 1", rank_one);
  r.hypotheses.emplace_back("G has a non-central element", non_abelian);
  if (!r.all_hypotheses()) {
    return detail::not_applicable(std::move(r),
                                  "requires a non-abelian p-group of conjugate rank 1");
  }
  detail::decide(r, [&] {
    bool flat = is_flat(g, st.classes());
    auto cls = nilpotency_class(g, st.whole());
    r.witness["flat"] = flat;
    r.witness["nilpotency_class"] = detail::optional_json(cls);
    return flat == (cls == std::size_t{2});
  });
  return r;
}

}  // namespace smallclass
