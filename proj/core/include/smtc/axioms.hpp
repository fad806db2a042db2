#pragma once

#include "smtc/category.hpp"
#include "smtc/types.hpp"

namespace smtc {

// Coherence of the associator: both re-association paths from ((ab)c)d to
// a(b(cd)) agree.
Report check_pentagon(const SuperMTC& C, double tol = kDefaultTolerance);

// Compatibility of braiding and associator, for both the braiding and its
// inverse.
Report check_hexagon(const SuperMTC& C, double tol = kDefaultTolerance);

// Every F-move and every R-move is unitary.
Report check_unitarity(const SuperMTC& C, double tol = kDefaultTolerance);

// Convenience: pentagon + hexagon + unitarity.
Report check_axioms(const SuperMTC& C, double tol = kDefaultTolerance);

}  // namespace smtc
