#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smallclass/group_table.hpp"

namespace smallclass {

inline constexpr std::size_t kMaxSymmetricDegree = 7;

namespace detail {

inline bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ParameterOutOfRange, what);
}

inline void require_order(std::size_t order, const BuildOptions& options) {
  if (order > options.max_order) {
    throw Error(ErrorKind::OrderCapExceeded, "order " + std::to_string(order) +
                                                 " exceeds cap " +
                                                 std::to_string(options.max_order));
  }
}

/// Build a table from a multiplication rule on indices [0, n), index 0 being
/// the identity.
template <typename Mul>
GroupTable table_from_rule(std::size_t n, std::string name, std::vector<std::string> labels,
                           Mul&& mul) {
  std::vector<ElementId> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<ElementId>(mul(a, b));
  return build_from_cayley(n, std::span<const ElementId>(t), std::move(name), std::move(labels));
}

inline std::string power_label(const std::string& base, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

inline std::string word_label(std::string a, const std::string& b) {
  if (a.empty() && b.empty()) return "e";
  return a + b;
}

}  // namespace detail

/// C_n, generated by a; element k is a^k.
inline GroupTable make_cyclic(std::size_t n, const BuildOptions& options = {}) {
  detail::require(n >= 1, "cyclic order must be at least 1");
  detail::require_order(n, options);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(detail::word_label(detail::power_label("a", k), ""));
  return detail::table_from_rule(n, "C" + std::to_string(n), std::move(labels),
                                 [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

/// Symmetries of the n-gon, order 2n ("D4" has order 8). Element k + n*e is
/// r^k s^e with s r s = r^-1.
inline GroupTable make_dihedral(std::size_t n, const BuildOptions& options = {}) {
  detail::require(n >= 1, "dihedral parameter must be at least 1");
  detail::require_order(2 * n, options);
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < 2; ++e)
    for (std::size_t k = 0; k < n; ++k)
      labels.push_back(detail::word_label(detail::power_label("r", k), e ? "s" : ""));
  return detail::table_from_rule(2 * n, "D" + std::to_string(n), std::move(labels),
                                 [n](std::size_t a, std::size_t b) {
                                   std::size_t i = a % n, e1 = a / n, j = b % n, e2 = b / n;
                                   std::size_t k = e1 ? (i + n - j) % n : (i + j) % n;
                                   return k + n * ((e1 + e2) % 2);
                                 });
}

/// Dicyclic group of order 4n ("Dic2" is Q8). Element k + 2n*e is a^k x^e
/// with x^2 = a^n and x a x^-1 = a^-1.
inline GroupTable make_dicyclic(std::size_t n, const BuildOptions& options = {}) {
  detail::require(n >= 1, "dicyclic parameter must be at least 1");
  detail::require_order(4 * n, options);
  const std::size_t m = 2 * n;
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < 2; ++e)
    for (std::size_t k = 0; k < m; ++k)
      labels.push_back(detail::word_label(detail::power_label("a", k), e ? "x" : ""));
  return detail::table_from_rule(4 * n, "Dic" + std::to_string(n), std::move(labels),
                                 [n, m](std::size_t a, std::size_t b) {
                                   std::size_t i = a % m, e1 = a / m, j = b % m, e2 = b / m;
                                   if (e1 == 0) return (i + j) % m + m * e2;
                                   // a^i x a^j x^e2 = a^(i-j) x^(1+e2)
                                   std::size_t k = (i + m - j) % m;
                                   if (e2 == 0) return k + m;
                                   return (k + n) % m;
                                 });
}

inline GroupTable make_symmetric(std::size_t n, const BuildOptions& options = {}) {
  detail::require(n >= 1 && n <= kMaxSymmetricDegree, "symmetric degree must be in [1, 7]");
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::from_cycles(n, {{0, 1}}));
    std::vector<std::uint32_t> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>(i);
    if (n >= 3) gens.push_back(Perm::from_cycles(n, {cycle}));
  }
  return build_from_generators(gens, "S" + std::to_string(n), options);
}

inline GroupTable make_alternating(std::size_t n, const BuildOptions& options = {}) {
  detail::require(n >= 1 && n <= kMaxSymmetricDegree, "alternating degree must be in [1, 7]");
  std::vector<Perm> gens;
  for (std::uint32_t i = 2; i < n; ++i) gens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  return build_from_generators(gens, "A" + std::to_string(n), options);
}

/// (C_p)^k; element index is the base-p digit vector.
inline GroupTable make_elementary_abelian(std::size_t p, std::size_t k,
                                          const BuildOptions& options = {}) {
  detail::require(detail::is_prime(p), "elementary abelian p must be prime");
  detail::require(k >= 1, "elementary abelian rank must be at least 1");
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= p;
    detail::require_order(n, options);
  }
  std::string name = "E_" + std::to_string(n);
  return detail::table_from_rule(n, std::move(name), {}, [p, k](std::size_t a, std::size_t b) {
    std::size_t out = 0, scale = 1;
    for (std::size_t i = 0; i < k; ++i) {
      out += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  });
}

/// Upper unitriangular 3x3 matrices over Z/p (p odd prime): extraspecial of
/// order p^3 and exponent p. Element a + p*b + p^2*c is [[1,a,c],[0,1,b],[0,0,1]].
inline GroupTable make_heisenberg(std::size_t p, const BuildOptions& options = {}) {
  detail::require(detail::is_prime(p) && p % 2 == 1, "heisenberg p must be an odd prime");
  detail::require_order(p * p * p, options);
  return detail::table_from_rule(p * p * p, "H" + std::to_string(p * p * p), {},
                                 [p](std::size_t x, std::size_t y) {
                                   std::size_t a = x % p, b = (x / p) % p, c = x / (p * p);
                                   std::size_t a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
                                   std::size_t ra = (a + a2) % p, rb = (b + b2) % p;
                                   std::size_t rc = (c + c2 + a * b2) % p;
                                   return ra + p * rb + p * p * rc;
                                 });
}

/// The affine maps x -> m x + t on Z/p with m in the subgroup of order d of
/// (Z/p)^*. For 1 < d these are Frobenius groups with kernel C_p; d = p-1
/// gives AGL(1,p).
inline GroupTable make_affine(std::size_t p, std::size_t d, const BuildOptions& options = {}) {
  detail::require(detail::is_prime(p), "affine p must be prime");
  detail::require(d >= 1 && (p - 1) % d == 0, "affine d must divide p-1");
  detail::require_order(p * d, options);
  // A generator of the order-d subgroup of (Z/p)^*.
  std::size_t mult = 1;
  for (std::size_t cand = 1; cand < p; ++cand) {
    std::size_t ord = 1, v = cand;
    while (v != 1) {
      v = v * cand % p;
      ++ord;
    }
    if (ord == d) {
      mult = cand;
      break;
    }
  }
  std::vector<std::uint32_t> shift(p), scale(p);
  for (std::size_t i = 0; i < p; ++i) {
    shift[i] = static_cast<std::uint32_t>((i + 1) % p);
    scale[i] = static_cast<std::uint32_t>(i * mult % p);
  }
  std::vector<Perm> gens{Perm(shift)};
  if (d > 1) gens.emplace_back(scale);
  return build_from_generators(gens, "F" + std::to_string(p * d), options);
}

/// G x H with (g, h) stored at index g*|H| + h.
inline GroupTable direct_product(const GroupTable& g, const GroupTable& h,
                                 const BuildOptions& options = {}) {
  const std::size_t n = g.order() * h.order();
  detail::require_order(n, options);
  std::vector<std::string> labels;
  if (g.has_labels() || h.has_labels()) {
    for (ElementId a = 0; a < g.order(); ++a)
      for (ElementId b = 0; b < h.order(); ++b)
        labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  }
  const std::size_t m = h.order();
  return detail::table_from_rule(n, g.name() + "x" + h.name(), std::move(labels),
                                 [&](std::size_t x, std::size_t y) {
                                   auto a = g.mul(static_cast<ElementId>(x / m),
                                                  static_cast<ElementId>(y / m));
                                   auto b = h.mul(static_cast<ElementId>(x % m),
                                                  static_cast<ElementId>(y % m));
                                   return static_cast<std::size_t>(a) * m + b;
                                 });
}

}  // namespace smallclass
