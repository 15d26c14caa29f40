#pragma once

#include <gtest/gtest.h>

#include <string>

#include "smallclass/smallclass.hpp"

namespace testutil {

inline smallclass::ElementId find_label(const smallclass::GroupTable& g, const std::string& label) {
  for (smallclass::ElementId x = 0; x < g.order(); ++x)
    if (g.label(x) == label) return x;
  ADD_FAILURE() << "no element labelled " << label << " in " << g.name();
  return 0;
}

inline smallclass::ElementSet labels(const smallclass::GroupTable& g,
                                     std::initializer_list<const char*> names) {
  smallclass::ElementSet s(g.order());
  for (auto n : names) s.insert(find_label(g, n));
  return s;
}

}  // namespace testutil
