#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "smallclass/classes.hpp"
#include "smallclass/series.hpp"
#include "smallclass/subgroup.hpp"

namespace smallclass {

inline constexpr std::size_t kDefaultOracleCap = 20;

/// F(G): the subgroup generated by the elements whose normal closure is
/// nilpotent, which is the largest nilpotent normal subgroup.
inline Subgroup fitting_subgroup(const GroupTable& g, const ClassPartition& cp) {
  auto whole = Subgroup::whole(g);
  if (is_nilpotent(g, whole)) return whole;
  ElementSet members(g.order());
  for (std::size_t i = 0; i < cp.count(); ++i) {
    auto closure = normal_closure(g, ElementSet(g.order(), {cp.representative[i]}));
    if (is_nilpotent(g, closure)) members |= cp.classes[i];
  }
  return subgroup_generated(g, members);
}

inline Subgroup fitting_subgroup(const GroupTable& g) {
  return fitting_subgroup(g, conjugacy_classes(g));
}

/// <N, M> for subgroups given by generators.
inline Subgroup join(const GroupTable& g, const Subgroup& n, const Subgroup& m) {
  ElementSet gens(g.order());
  for (auto x : n.generators()) gens.insert(x);
  for (auto x : m.generators()) gens.insert(x);
  return subgroup_generated(g, gens);
}

/// Every normal subgroup of G, sorted by (order, member set). Each one is a
/// join of normal closures of classes, so the list is the join-closure of
/// those closures together with the trivial subgroup.
inline std::vector<Subgroup> enumerate_normal_subgroups(const GroupTable& g,
                                                        const ClassPartition& cp,
                                                        std::size_t cap = kDefaultOracleCap) {
  if (cp.count() > cap) {
    throw Error(ErrorKind::OracleCapExceeded, g.name() + " has " + std::to_string(cp.count()) +
                                                  " classes, cap is " + std::to_string(cap));
  }
  std::vector<Subgroup> atoms;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Subgroup> found{Subgroup::trivial(g)};
  seen.insert(found[0].elements());
  for (std::size_t i = 1; i < cp.count(); ++i) {
    auto c = normal_closure(g, ElementSet(g.order(), {cp.representative[i]}));
    if (seen.insert(c.elements()).second) {
      atoms.push_back(c);
      found.push_back(std::move(c));
    }
  }
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& a : atoms) {
      if (a.is_subset_of(found[head])) continue;
      auto j = join(g, found[head], a);
      if (seen.insert(j.elements()).second) found.push_back(std::move(j));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return found;
}

inline std::vector<Subgroup> enumerate_normal_subgroups(const GroupTable& g,
                                                        std::size_t cap = kDefaultOracleCap) {
  return enumerate_normal_subgroups(g, conjugacy_classes(g), cap);
}

/// Brute-force F(G): the largest nilpotent normal subgroup found by
/// enumeration. Throws ValidationError if some nilpotent normal subgroup is
/// not contained in it (then no unique maximum exists).
inline Subgroup fitting_oracle(const GroupTable& g, const ClassPartition& cp,
                               std::size_t cap = kDefaultOracleCap) {
  auto normals = enumerate_normal_subgroups(g, cp, cap);
  std::vector<const Subgroup*> nilpotent;
  for (const auto& n : normals)
    if (is_nilpotent(g, n)) nilpotent.push_back(&n);
  const Subgroup* best = nilpotent.front();
  for (auto* n : nilpotent)
    if (n->order() > best->order()) best = n;
  // Containment of every factor is equivalent to containment of every product.
  for (auto* n : nilpotent) {
    if (!n->is_subset_of(*best)) {
      throw Error(ErrorKind::ValidationError,
                  "nilpotent normal subgroups of " + g.name() + " have no unique maximum");
    }
  }
  return *best;
}

inline Subgroup fitting_oracle(const GroupTable& g, std::size_t cap = kDefaultOracleCap) {
  return fitting_oracle(g, conjugacy_classes(g), cap);
}

}  // namespace smallclass
