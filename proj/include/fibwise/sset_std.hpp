#pragma once

#include "fibwise/sset.hpp"

namespace fibwise {

/// Canonical complexes, with simplices named by vertex subsets ("0", "02",
/// "012", ...).
SSetPtr standard(int n);
SSetPtr boundary(int n);
SSetPtr horn(int n, int k);
SSetPtr empty_sset();
SSetPtr point();  // standard(0)
/// Circle as Delta^1 with both ends glued: one vertex "pt", one edge "e".
SSetPtr circle();

}  // namespace fibwise
