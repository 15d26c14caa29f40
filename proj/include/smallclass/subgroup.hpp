#pragma once

#include <vector>

#include "smallclass/element_set.hpp"
#include "smallclass/group_table.hpp"

namespace smallclass {

/// A subgroup of a GroupTable: its member set together with a generating
/// list. Only produced by closure operations or validated conversion, so the
/// member set is always closed under multiplication and inversion.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup trivial(const GroupTable& g) {
    return Subgroup(g.trivial(), {});
  }
  static Subgroup whole(const GroupTable& g) { return Subgroup(g.all(), g.generators()); }

  /// Throws InvalidArgument when `s` is not a subgroup of `g`.
  static Subgroup from_set(const GroupTable& g, const ElementSet& s);

  const ElementSet& elements() const noexcept { return members_; }
  const std::vector<ElementId>& generators() const noexcept { return gens_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(ElementId x) const noexcept { return members_.contains(x); }
  bool is_trivial() const noexcept { return order() == 1; }
  bool is_subset_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }
  bool is_subset_of(const ElementSet& other) const { return members_.is_subset_of(other); }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  Subgroup(ElementSet members, std::vector<ElementId> gens)
      : members_(std::move(members)), gens_(std::move(gens)) {}

  friend Subgroup subgroup_generated(const GroupTable&, const ElementSet&);

  ElementSet members_;
  std::vector<ElementId> gens_;
};

/// Smallest subgroup containing `s`. Each member of `s` not already reached
/// becomes a generator, and the closure is extended by right multiplication.
inline Subgroup subgroup_generated(const GroupTable& g, const ElementSet& s) {
  ElementSet reached = g.trivial();
  std::vector<ElementId> members{kIdentity};
  std::vector<ElementId> gens;
  for (auto x : s) {
    if (reached.contains(x)) continue;
    gens.push_back(x);
    std::size_t head = 0;
    while (head < members.size()) {
      auto y = members[head++];
      for (auto gen : gens) {
        auto z = g.mul(y, gen);
        if (!reached.contains(z)) {
          reached.insert(z);
          members.push_back(z);
        }
      }
    }
  }
  return Subgroup(std::move(reached), std::move(gens));
}

inline bool is_subgroup(const GroupTable& g, const ElementSet& s) {
  if (!s.contains(kIdentity)) return false;
  for (auto a : s) {
    if (!s.contains(g.inv(a))) return false;
    for (auto b : s)
      if (!s.contains(g.mul(a, b))) return false;
  }
  return true;
}

inline Subgroup Subgroup::from_set(const GroupTable& g, const ElementSet& s) {
  if (s.parent_order() != g.order() || !is_subgroup(g, s)) {
    throw Error(ErrorKind::InvalidArgument, "element set is not a subgroup of " + g.name());
  }
  return subgroup_generated(g, s);
}

/// Closure of `s` under conjugation by `conjugators`; with a generating set
/// of H this is the smallest H-normal subset containing `s`.
inline ElementSet conjugation_closure(const GroupTable& g, const ElementSet& s,
                                      const std::vector<ElementId>& conjugators) {
  ElementSet out = s;
  std::vector<ElementId> queue = s.to_vector();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto c : conjugators) {
      auto y = g.conj(queue[head], c);
      if (!out.contains(y)) {
        out.insert(y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

inline Subgroup normal_closure(const GroupTable& g, const ElementSet& s) {
  return subgroup_generated(g, conjugation_closure(g, s, g.generators()));
}

/// {h in within : hs = sh for every s in s_set}
inline Subgroup centralizer(const GroupTable& g, const Subgroup& s_group, const Subgroup& within) {
  ElementSet out(g.order());
  for (auto h : within) {
    bool commutes = true;
    for (auto s : s_group.generators()) {
      if (g.mul(h, s) != g.mul(s, h)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.insert(h);
  }
  return subgroup_generated(g, out);
}

inline Subgroup centralizer(const GroupTable& g, const ElementSet& s, const Subgroup& within) {
  // An element centralizes s exactly when it centralizes <s>.
  return centralizer(g, subgroup_generated(g, s), within);
}

inline Subgroup centralizer(const GroupTable& g, ElementId x, const Subgroup& within) {
  return centralizer(g, ElementSet(g.order(), {x}), within);
}

inline Subgroup center(const GroupTable& g, const Subgroup& h) { return centralizer(g, h, h); }

inline Subgroup center(const GroupTable& g) { return center(g, Subgroup::whole(g)); }

/// True iff u^-1 s u is contained in s for all u in `under`. Checking the
/// generators of `under` suffices: conjugation by each is injective on the
/// finite set s, hence a bijection of s.
inline bool is_normal_subset(const GroupTable& g, const ElementSet& s, const Subgroup& under) {
  for (auto u : under.generators())
    for (auto x : s)
      if (!s.contains(g.conj(x, u))) return false;
  return true;
}

inline bool is_normal_subgroup(const GroupTable& g, const ElementSet& s) {
  return is_subgroup(g, s) && is_normal_subset(g, s, Subgroup::whole(g));
}

}  // namespace smallclass
