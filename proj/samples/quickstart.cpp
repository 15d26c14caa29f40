// Builds a few groups, prints their small-class invariants, and checks
// Theorem C and both conjectures on each.

#include <iostream>

#include "smallclass/smallclass.hpp"

int main() {
  using namespace smallclass;
  for (auto spec : {"sym:4", "dicyclic:2", "product:sym:3,sym:3", "affine:7,3"}) {
    auto g = build_group(spec);
    GroupStructure st(g);
    std::cout << g.name() << ": order " << g.order() << ", |M(G)| = " << st.m().order()
              << ", |F(G)| = " << st.fitting().order() << "\n";
    for (auto s : {Statement::TheoremC, Statement::Conjecture1, Statement::Conjecture1Prime}) {
      auto reports = check_statement(st, s, candidate_normal_subgroups(st, kDefaultOracleCap), false);
      for (const auto& r : reports)
        std::cout << "  " << to_string(r.statement) << ": " << to_string(r.verdict) << "\n";
    }
  }
}
