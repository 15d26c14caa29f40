#pragma once

#include <optional>
#include <vector>

#include "smallclass/classes.hpp"
#include "smallclass/fitting.hpp"
#include "smallclass/series.hpp"
#include "smallclass/subgroup.hpp"

namespace smallclass {

/// Per-group derived data shared by all checkers. Computed eagerly in the
/// constructor and read-only afterwards, so one instance may be shared across
/// threads. The referenced GroupTable must outlive it.
class GroupStructure {
 public:
  explicit GroupStructure(const GroupTable& g)
      : group_(&g),
        classes_(conjugacy_classes(g)),
        whole_(Subgroup::whole(g)),
        center_(smallclass::center(g, whole_)),
        small_(small_elements(g, classes_)),
        m_(subgroup_generated(g, small_)),
        m_class_(nilpotency_class(g, m_)),
        fitting_(fitting_subgroup(g, classes_)),
        fitting_center_(smallclass::center(g, fitting_)),
        fitting_upper_(upper_central_series(g, fitting_)),
        solvable_(is_solvable(g, whole_)) {
    centralizer_order_.resize(g.order());
    for (ElementId x = 0; x < g.order(); ++x)
      centralizer_order_[x] = centralizer(g, x, whole_).order();
  }

  const GroupTable& group() const noexcept { return *group_; }
  const ClassPartition& classes() const noexcept { return classes_; }
  const Subgroup& whole() const noexcept { return whole_; }
  const Subgroup& center() const noexcept { return center_; }
  const ElementSet& small() const noexcept { return small_; }
  bool small_degenerate() const { return small_elements_degenerate(classes_); }
  const Subgroup& m() const noexcept { return m_; }
  std::optional<std::size_t> m_class() const noexcept { return m_class_; }
  const Subgroup& fitting() const noexcept { return fitting_; }
  const Subgroup& fitting_center() const noexcept { return fitting_center_; }
  /// Z_2(F(G)), saturating at F(G) when the upper series is shorter.
  const Subgroup& fitting_second_center() const { return fitting_upper_.term(2); }
  bool solvable() const noexcept { return solvable_; }
  bool centerless() const noexcept { return center_.is_trivial(); }
  /// |C_G(x)| by direct scan.
  std::size_t centralizer_order(ElementId x) const { return centralizer_order_[x]; }

 private:
  const GroupTable* group_;
  ClassPartition classes_;
  Subgroup whole_;
  Subgroup center_;
  ElementSet small_;
  Subgroup m_;
  std::optional<std::size_t> m_class_;
  Subgroup fitting_;
  Subgroup fitting_center_;
  Series fitting_upper_;
  bool solvable_;
  std::vector<std::size_t> centralizer_order_;
};

}  // namespace smallclass
