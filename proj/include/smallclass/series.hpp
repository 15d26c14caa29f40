#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "smallclass/classes.hpp"
#include "smallclass/subgroup.hpp"

namespace smallclass {

enum class SeriesKind { LowerCentral, UpperCentral, Derived };

inline std::string_view to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::LowerCentral: return "lower_central";
    case SeriesKind::UpperCentral: return "upper_central";
    case SeriesKind::Derived: return "derived";
  }
  return "unknown";
}

/// A subgroup chain. A chain that reaches its natural end (the trivial group
/// for descending series, H itself for the upper central series) stops there.
/// A chain that stalls short of it records the stalled term twice, so
/// `stalled()` tells the two outcomes apart.
struct Series {
  SeriesKind kind = SeriesKind::LowerCentral;
  std::vector<Subgroup> terms;

  bool stalled() const noexcept {
    return terms.size() >= 2 && terms[terms.size() - 1] == terms[terms.size() - 2];
  }
  const Subgroup& last() const { return terms.back(); }
  /// Term i, saturating at the last term.
  const Subgroup& term(std::size_t i) const {
    return i < terms.size() ? terms[i] : terms.back();
  }
};

namespace detail {

template <typename Step>
Series descend(SeriesKind kind, const Subgroup& h, Step step) {
  Series s{kind, {h}};
  while (!s.terms.back().is_trivial()) {
    auto next = step(s.terms.back());
    bool same = next == s.terms.back();
    s.terms.push_back(std::move(next));
    if (same) break;
  }
  return s;
}

}  // namespace detail

/// gamma_1 = H, gamma_{n+1} = [gamma_n, H]
inline Series lower_central_series(const GroupTable& g, const Subgroup& h) {
  return detail::descend(SeriesKind::LowerCentral, h,
                         [&](const Subgroup& t) { return commutator_subgroup(g, t, h); });
}

/// H, [H,H], [[H,H],[H,H]], ...
inline Series derived_series(const GroupTable& g, const Subgroup& h) {
  return detail::descend(SeriesKind::Derived, h,
                         [&](const Subgroup& t) { return commutator_subgroup(g, t, t); });
}

inline std::pair<Series, bool> derived_series_and_solvability(const GroupTable& g,
                                                              const Subgroup& h) {
  auto s = derived_series(g, h);
  bool solvable = s.last().is_trivial();
  return {std::move(s), solvable};
}

inline bool is_solvable(const GroupTable& g, const Subgroup& h) {
  return derived_series(g, h).last().is_trivial();
}

/// Z_0 = 1, Z_{i+1} = { x in H : [x, h] in Z_i for all h in H }. Testing the
/// generators of H is enough because Z_i is normal in H.
inline Series upper_central_series(const GroupTable& g, const Subgroup& h) {
  Series s{SeriesKind::UpperCentral, {Subgroup::trivial(g)}};
  while (!(s.terms.back() == h)) {
    const auto& prev = s.terms.back().elements();
    ElementSet next(g.order());
    for (auto x : h) {
      bool ok = true;
      for (auto y : h.generators()) {
        if (!prev.contains(g.comm(x, y))) {
          ok = false;
          break;
        }
      }
      if (ok) next.insert(x);
    }
    auto term = subgroup_generated(g, next);
    bool same = term == s.terms.back();
    s.terms.push_back(std::move(term));
    if (same) break;
  }
  return s;
}

/// Smallest c with gamma_{c+1}(H) = 1, or nullopt when H is not nilpotent.
inline std::optional<std::size_t> nilpotency_class(const GroupTable& g, const Subgroup& h) {
  auto s = lower_central_series(g, h);
  if (!s.last().is_trivial()) return std::nullopt;
  return s.terms.size() - 1;
}

inline bool is_nilpotent(const GroupTable& g, const Subgroup& h) {
  return nilpotency_class(g, h).has_value();
}

}  // namespace smallclass
