#pragma once

#include "smallclass/catalog.hpp"
#include "smallclass/classes.hpp"
#include "smallclass/element_set.hpp"
#include "smallclass/error.hpp"
#include "smallclass/families.hpp"
#include "smallclass/fitting.hpp"
#include "smallclass/group_spec.hpp"
#include "smallclass/group_table.hpp"
#include "smallclass/scan.hpp"
#include "smallclass/series.hpp"
#include "smallclass/structure.hpp"
#include "smallclass/subgroup.hpp"
#include "smallclass/theorems.hpp"
