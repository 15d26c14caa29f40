#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "smallclass/catalog.hpp"
#include "smallclass/families.hpp"

namespace smallclass {

enum class Family { Cyclic, Dihedral, Dicyclic, Symmetric, Alternating, ElemAbelian, Heisenberg,
                    Affine, Product, File, Gens };

/// A parsed group expression.
///
///   cyclic:N | dihedral:N | dicyclic:N | sym:N | alt:N | elemab:P,K
///   | heisenberg:P | affine:P,D | product:SPEC,SPEC | file:PATH | gens:PATH
///
/// `product` nests; a path runs to the next ',' or the end of the text.
struct GroupSpec {
  Family family = Family::Cyclic;
  std::vector<std::size_t> params;
  std::vector<GroupSpec> factors;
  std::string path;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

namespace detail {

struct FamilyInfo {
  std::string_view tag;
  Family family;
  std::size_t arity;
};

inline constexpr FamilyInfo kFamilies[] = {
    {"cyclic", Family::Cyclic, 1},        {"dihedral", Family::Dihedral, 1},
    {"dicyclic", Family::Dicyclic, 1},    {"sym", Family::Symmetric, 1},
    {"alt", Family::Alternating, 1},      {"elemab", Family::ElemAbelian, 2},
    {"heisenberg", Family::Heisenberg, 1}, {"affine", Family::Affine, 2},
    {"product", Family::Product, 0},      {"file", Family::File, 0},
    {"gens", Family::Gens, 0},
};

inline const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  return kFamilies[0];
}

inline void check_bounds(const GroupSpec& s) {
  const auto& p = s.params;
  switch (s.family) {
    case Family::Cyclic: require(p[0] >= 1, "cyclic:N needs N >= 1"); break;
    case Family::Dihedral: require(p[0] >= 1, "dihedral:N needs N >= 1"); break;
    case Family::Dicyclic: require(p[0] >= 1, "dicyclic:N needs N >= 1"); break;
    case Family::Symmetric:
    case Family::Alternating:
      require(p[0] >= 1 && p[0] <= kMaxSymmetricDegree, std::string(info(s.family).tag) +
                                                            ":N needs 1 <= N <= 7");
      break;
    case Family::ElemAbelian:
      require(is_prime(p[0]) && p[1] >= 1, "elemab:P,K needs P prime and K >= 1");
      break;
    case Family::Heisenberg:
      require(is_prime(p[0]) && p[0] % 2 == 1, "heisenberg:P needs P an odd prime");
      break;
    case Family::Affine:
      require(is_prime(p[0]) && p[1] >= 1 && (p[0] - 1) % p[1] == 0,
              "affine:P,D needs P prime and D dividing P-1");
      break;
    default: break;
  }
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse_all() {
    auto s = parse();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at position " + std::to_string(pos_));
  }

  GroupSpec parse() {
    auto start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    auto tag = text_.substr(start, pos_ - start);
    if (tag.empty()) fail("expected a family name");
    const FamilyInfo* fam = nullptr;
    for (const auto& i : kFamilies)
      if (i.tag == tag) fam = &i;
    if (fam == nullptr) {
      throw Error(ErrorKind::UnknownFamily,
                  "'" + std::string(tag) + "' at position " + std::to_string(start));
    }
    expect(':');

    GroupSpec s;
    s.family = fam->family;
    if (s.family == Family::Product) {
      s.factors.push_back(parse());
      expect(',');
      s.factors.push_back(parse());
      return s;
    }
    if (s.family == Family::File || s.family == Family::Gens) {
      auto begin = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',') ++pos_;
      if (pos_ == begin) fail("expected a path");
      s.path = std::string(text_.substr(begin, pos_ - begin));
      return s;
    }
    for (std::size_t i = 0; i < fam->arity; ++i) {
      if (i > 0) expect(',');
      s.params.push_back(number());
    }
    check_bounds(s);
    return s;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t number() {
    auto begin = pos_;
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (v > 1'000'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == begin) fail("expected a number");
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GroupSpec parse_group_spec(std::string_view text) {
  return detail::SpecParser(text).parse_all();
}

inline std::string render(const GroupSpec& s) {
  std::string out(detail::info(s.family).tag);
  out += ':';
  if (s.family == Family::Product) return out + render(s.factors[0]) + "," + render(s.factors[1]);
  if (s.family == Family::File || s.family == Family::Gens) return out + s.path;
  for (std::size_t i = 0; i < s.params.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s.params[i]);
  }
  return out;
}

namespace detail {

inline GroupTable single_record(const std::string& path, std::string_view key,
                                const BuildOptions& options) {
  auto doc = read_json_file(path);
  if (doc.is_array() && doc.size() == 1) doc = doc[0];
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorKind::FormatError,
                path + ": expected one record with a \"" + std::string(key) + "\" field");
  }
  return group_from_json(doc, options);
}

}  // namespace detail

inline GroupTable build_group(const GroupSpec& s, const BuildOptions& options = {}) {
  const auto& p = s.params;
  switch (s.family) {
    case Family::Cyclic: return make_cyclic(p[0], options);
    case Family::Dihedral: return make_dihedral(p[0], options);
    case Family::Dicyclic: return make_dicyclic(p[0], options);
    case Family::Symmetric: return make_symmetric(p[0], options);
    case Family::Alternating: return make_alternating(p[0], options);
    case Family::ElemAbelian: return make_elementary_abelian(p[0], p[1], options);
    case Family::Heisenberg: return make_heisenberg(p[0], options);
    case Family::Affine: return make_affine(p[0], p[1], options);
    case Family::Product:
      return direct_product(build_group(s.factors[0], options), build_group(s.factors[1], options),
                            options);
    case Family::File: return detail::single_record(s.path, "table", options);
    case Family::Gens: return detail::single_record(s.path, "generators", options);
  }
  throw Error(ErrorKind::UnknownFamily, "unhandled family");
}

inline GroupTable build_group(std::string_view text, const BuildOptions& options = {}) {
  return build_group(parse_group_spec(text), options);
}

}  // namespace smallclass
