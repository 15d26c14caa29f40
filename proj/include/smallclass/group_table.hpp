#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "smallclass/element_set.hpp"
#include "smallclass/error.hpp"

namespace smallclass {

inline constexpr std::size_t kDefaultOrderCap = 2000;
inline constexpr std::size_t kExhaustiveAssociativityLimit = 256;

struct BuildOptions {
  std::size_t max_order = kDefaultOrderCap;
};

/// A permutation of {0, ..., degree-1}; images[i] is the image of point i.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      auto v = images_[i];
      if (v >= images_.size() || seen[v]) {
        throw Error(ErrorKind::InvalidArgument,
                    "permutation images are not a bijection at point " + std::to_string(i));
      }
      seen[v] = true;
    }
  }
  static Perm identity(std::size_t degree) {
    std::vector<std::uint32_t> im(degree);
    for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<std::uint32_t>(i);
    return Perm(std::move(im));
  }
  /// Permutation given by disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
    auto p = identity(degree);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= degree) throw Error(ErrorKind::InvalidArgument, "cycle point out of range");
        p.images_[c[i]] = c[(i + 1) % c.size()];
      }
    }
    return Perm(std::move(p.images_));
  }

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  /// Apply *this first, then `next`.
  Perm then(const Perm& next) const {
    std::vector<std::uint32_t> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) im[i] = next.images_[images_[i]];
    Perm p;
    p.images_ = std::move(im);
    return p;
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  std::string cycle_string() const {
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (done[i] || images_[i] == i) continue;
      out += '(';
      for (auto j = i; !done[j]; j = images_[j]) {
        if (j != i) out += ',';
        out += std::to_string(j);
        done[j] = true;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : p.images()) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};

namespace detail {

inline std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

inline void check_latin(std::size_t n, std::span<const ElementId> mul) {
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t r = 0; r < n; ++r) {
    ++stamp;
    for (std::size_t c = 0; c < n; ++c) {
      auto v = mul[r * n + c];
      if (v >= n) {
        throw Error(ErrorKind::NotLatinSquare, "entry at row " + std::to_string(r) + ", column " +
                                                   std::to_string(c) + " is out of range");
      }
      if (seen[v] == stamp) {
        throw Error(ErrorKind::NotLatinSquare,
                    "row " + std::to_string(r) + " repeats value " + std::to_string(v));
      }
      seen[v] = stamp;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    ++stamp;
    for (std::size_t r = 0; r < n; ++r) {
      auto v = mul[r * n + c];
      if (seen[v] == stamp) {
        throw Error(ErrorKind::NotLatinSquare,
                    "column " + std::to_string(c) + " repeats value " + std::to_string(v));
      }
      seen[v] = stamp;
    }
  }
}

inline std::size_t find_identity(std::size_t n, std::span<const ElementId> mul) {
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = mul[e * n + x] == x && mul[x * n + e] == x;
    if (ok) return e;
  }
  throw Error(ErrorKind::NoIdentity, "no element is a two-sided identity");
}

inline std::vector<ElementId> compute_inverses(std::size_t n, std::span<const ElementId> mul) {
  std::vector<ElementId> inv(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t y = 0;
    while (y < n && mul[x * n + y] != kIdentity) ++y;
    if (y == n || mul[y * n + x] != kIdentity) {
      throw Error(ErrorKind::MissingInverse,
                  "element " + std::to_string(x) + " has no two-sided inverse");
    }
    inv[x] = static_cast<ElementId>(y);
  }
  return inv;
}

inline void check_associative(std::size_t n, std::span<const ElementId> mul) {
  auto fails = [&](std::size_t a, std::size_t b, std::size_t c) {
    return mul[mul[a * n + b] * n + c] != mul[a * n + mul[b * n + c]];
  };
  if (n <= kExhaustiveAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (fails(a, b, c)) {
            throw Error(ErrorKind::NotAssociative, "triple " + triple(a, b, c));
          }
    return;
  }
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t samples = 10 * n * n;
  for (std::size_t i = 0; i < samples; ++i) {
    auto a = pick(rng), b = pick(rng), c = pick(rng);
    if (fails(a, b, c)) throw Error(ErrorKind::NotAssociative, "triple " + triple(a, b, c));
  }
}

}  // namespace detail

/// A finite group stored as its full Cayley table. Element 0 is the identity.
/// Instances are immutable and only obtainable through validated builders.
class GroupTable {
 public:
  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }

  ElementId mul(ElementId a, ElementId b) const noexcept { return mul_[a * order_ + b]; }
  ElementId inv(ElementId a) const noexcept { return inv_[a]; }
  /// g^-1 x g
  ElementId conj(ElementId x, ElementId g) const noexcept { return mul(mul(inv(g), x), g); }
  /// [x, h] = x^-1 h^-1 x h
  ElementId comm(ElementId x, ElementId h) const noexcept {
    return mul(mul(inv(x), inv(h)), mul(x, h));
  }

  std::span<const ElementId> row(ElementId a) const {
    return {mul_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  std::span<const ElementId> table() const noexcept { return mul_; }

  std::string label(ElementId x) const {
    if (x < labels_.size() && !labels_[x].empty()) return labels_[x];
    return std::to_string(x);
  }
  bool has_labels() const noexcept { return !labels_.empty(); }

  /// A small generating set, chosen greedily in index order.
  const std::vector<ElementId>& generators() const noexcept { return gens_; }

  ElementSet all() const { return ElementSet::full(order_); }
  ElementSet trivial() const { return ElementSet::identity_only(order_); }

  bool same_table(const GroupTable& other) const noexcept { return mul_ == other.mul_; }

  friend GroupTable build_from_cayley(std::size_t, std::span<const ElementId>, std::string,
                                      std::vector<std::string>);
  friend GroupTable build_from_generators(const std::vector<Perm>&, std::string,
                                          const BuildOptions&);

 private:
  GroupTable() = default;

  void compute_generators() {
    gens_.clear();
    ElementSet reached = ElementSet::identity_only(order_);
    std::vector<ElementId> members{kIdentity};
    for (ElementId x = 1; x < order_; ++x) {
      if (reached.contains(x)) continue;
      gens_.push_back(x);
      // Reclose: right-multiply everything reached so far by all generators.
      std::size_t head = 0;
      while (head < members.size()) {
        auto y = members[head++];
        for (auto g : gens_) {
          auto z = mul(y, g);
          if (!reached.contains(z)) {
            reached.insert(z);
            members.push_back(z);
          }
        }
      }
    }
  }

  std::size_t order_ = 0;
  std::vector<ElementId> mul_;
  std::vector<ElementId> inv_;
  std::vector<std::string> labels_;
  std::vector<ElementId> gens_;
  std::string name_;
};

/// Validates a row-major Cayley table and builds the group. When the identity
/// is not at index 0 it is swapped with element 0 (labels follow).
inline GroupTable build_from_cayley(std::size_t order, std::span<const ElementId> table,
                                    std::string name, std::vector<std::string> labels = {}) {
  if (order == 0) throw Error(ErrorKind::InvalidArgument, "group order must be positive");
  if (table.size() != order * order) {
    throw Error(ErrorKind::NotLatinSquare, "table has " + std::to_string(table.size()) +
                                               " entries, expected " +
                                               std::to_string(order * order));
  }
  if (!labels.empty() && labels.size() != order) {
    throw Error(ErrorKind::InvalidArgument, "label count does not match order");
  }
  detail::check_latin(order, table);
  auto e = detail::find_identity(order, table);

  std::vector<ElementId> mul(table.begin(), table.end());
  if (e != 0) {
    auto relabel = [e](ElementId v) -> ElementId {
      if (v == e) return 0;
      if (v == 0) return static_cast<ElementId>(e);
      return v;
    };
    std::vector<ElementId> swapped(order * order);
    for (std::size_t r = 0; r < order; ++r)
      for (std::size_t c = 0; c < order; ++c)
        swapped[relabel(static_cast<ElementId>(r)) * order + relabel(static_cast<ElementId>(c))] =
            relabel(table[r * order + c]);
    mul = std::move(swapped);
    if (!labels.empty()) std::swap(labels[0], labels[e]);
  }

  auto inv = detail::compute_inverses(order, mul);
  detail::check_associative(order, mul);

  GroupTable g;
  g.order_ = order;
  g.mul_ = std::move(mul);
  g.inv_ = std::move(inv);
  g.labels_ = std::move(labels);
  g.name_ = std::move(name);
  g.compute_generators();
  return g;
}

inline GroupTable build_from_cayley(std::size_t order, const std::vector<std::vector<ElementId>>& rows,
                                    std::string name, std::vector<std::string> labels = {}) {
  std::vector<ElementId> flat;
  flat.reserve(order * order);
  if (rows.size() != order) {
    throw Error(ErrorKind::NotLatinSquare, "table has " + std::to_string(rows.size()) +
                                               " rows, expected " + std::to_string(order));
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != order) {
      throw Error(ErrorKind::NotLatinSquare, "row " + std::to_string(r) + " has wrong length");
    }
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  return build_from_cayley(order, std::span<const ElementId>(flat), std::move(name),
                           std::move(labels));
}

/// Breadth-first closure of the permutations under composition. Element 0 is
/// the identity permutation; the remaining elements appear in BFS order.
/// Products are "apply left factor first".
inline GroupTable build_from_generators(const std::vector<Perm>& perms, std::string name,
                                        const BuildOptions& options = {}) {
  std::size_t degree = perms.empty() ? 0 : perms.front().degree();
  for (const auto& p : perms) {
    if (p.degree() != degree) {
      throw Error(ErrorKind::InvalidArgument, "generators have different degrees");
    }
  }

  std::vector<Perm> elements{Perm::identity(degree)};
  std::unordered_map<Perm, ElementId, PermHash> index{{elements[0], 0}};
  // parent[b], via[b]: b = parent[b] * perms[via[b]]
  std::vector<ElementId> parent{0};
  std::vector<std::uint32_t> via{0};
  // right[x * k + j] = x * perms[j]
  std::vector<ElementId> right;

  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t j = 0; j < perms.size(); ++j) {
      auto q = elements[head].then(perms[j]);
      auto it = index.find(q);
      ElementId id;
      if (it == index.end()) {
        if (elements.size() >= options.max_order) {
          throw Error(ErrorKind::OrderCapExceeded,
                      "closure exceeds order cap " + std::to_string(options.max_order));
        }
        id = static_cast<ElementId>(elements.size());
        index.emplace(q, id);
        elements.push_back(std::move(q));
        parent.push_back(static_cast<ElementId>(head));
        via.push_back(static_cast<std::uint32_t>(j));
      } else {
        id = it->second;
      }
      right.push_back(id);
    }
  }

  const std::size_t n = elements.size();
  const std::size_t k = perms.size();
  std::vector<ElementId> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    mul[a * n] = static_cast<ElementId>(a);
    // Elements are in BFS order, so parent[b] < b is already filled.
    for (std::size_t b = 1; b < n; ++b) {
      mul[a * n + b] = right[mul[a * n + parent[b]] * k + via[b]];
    }
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elements) labels.push_back(p.cycle_string());
  return build_from_cayley(n, std::span<const ElementId>(mul), std::move(name), std::move(labels));
}

}  // namespace smallclass
