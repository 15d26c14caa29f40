#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "smallclass/element_set.hpp"
#include "smallclass/group_table.hpp"
#include "smallclass/subgroup.hpp"

namespace smallclass {

/// Conjugacy classes ordered by (size, smallest member). The class of the
/// identity is always first.
struct ClassPartition {
  std::vector<ElementSet> classes;
  std::vector<ElementId> representative;
  std::vector<std::size_t> size;
  /// class_of[x] = index into `classes` of the class containing x
  std::vector<std::size_t> class_of;

  std::size_t count() const noexcept { return classes.size(); }

  std::vector<std::size_t> distinct_sizes() const {
    std::vector<std::size_t> d = size;
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
  }

  std::size_t size_of_class_containing(ElementId x) const { return size[class_of[x]]; }
};

inline ClassPartition conjugacy_classes(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<ElementSet> found;
  ElementSet assigned(n);
  for (ElementId x = 0; x < n; ++x) {
    if (assigned.contains(x)) continue;
    auto orbit = conjugation_closure(g, ElementSet(n, {x}), g.generators());
    assigned |= orbit;
    found.push_back(std::move(orbit));
  }
  std::vector<std::size_t> sizes(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) sizes[i] = found[i].size();
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  // Classes were discovered in order of their smallest member, so a stable
  // sort on size yields the (size, smallest member) order.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });

  ClassPartition cp;
  cp.class_of.assign(n, 0);
  for (auto i : order) {
    auto idx = cp.classes.size();
    for (auto x : found[i]) cp.class_of[x] = idx;
    cp.representative.push_back(found[i].first());
    cp.size.push_back(sizes[i]);
    cp.classes.push_back(std::move(found[i]));
  }
  return cp;
}

/// x^H = { h^-1 x h : h in H }
inline ElementSet h_class(const GroupTable& g, ElementId x, const Subgroup& h) {
  return conjugation_closure(g, ElementSet(g.order(), {x}), h.generators());
}

/// [x, H] = { x^-1 h^-1 x h : h in H }
inline ElementSet commutator_set(const GroupTable& g, ElementId x, const Subgroup& h) {
  ElementSet out(g.order());
  for (auto y : h) out.insert(g.comm(x, y));
  return out;
}

/// [A, x] = { a^-1 x^-1 a x : a in A }
inline ElementSet commutator_set(const GroupTable& g, const Subgroup& a, ElementId x) {
  ElementSet out(g.order());
  for (auto y : a) out.insert(g.comm(y, x));
  return out;
}

/// [A, B] = < [a, b] : a in A, b in B >
inline Subgroup commutator_subgroup(const GroupTable& g, const Subgroup& a, const Subgroup& b) {
  ElementSet comms(g.order());
  for (auto x : a)
    for (auto y : b) comms.insert(g.comm(x, y));
  return subgroup_generated(g, comms);
}

/// Small elements: the union of all classes whose size is one of the two
/// smallest distinct class sizes. With a single class size (abelian groups)
/// every element is small.
inline ElementSet small_elements(const GroupTable& g, const ClassPartition& cp) {
  auto sizes = cp.distinct_sizes();
  ElementSet out(g.order());
  std::size_t bound = sizes.size() >= 2 ? sizes[1] : sizes[0];
  for (std::size_t i = 0; i < cp.count(); ++i)
    if (cp.size[i] <= bound) out |= cp.classes[i];
  return out;
}

inline ElementSet small_elements(const GroupTable& g) {
  return small_elements(g, conjugacy_classes(g));
}

/// True when only one class size exists, so the small-element set is all of G.
inline bool small_elements_degenerate(const ClassPartition& cp) {
  return cp.distinct_sizes().size() < 2;
}

inline Subgroup m_subgroup(const GroupTable& g, const ClassPartition& cp) {
  return subgroup_generated(g, small_elements(g, cp));
}

inline Subgroup m_subgroup(const GroupTable& g) { return m_subgroup(g, conjugacy_classes(g)); }

}  // namespace smallclass
