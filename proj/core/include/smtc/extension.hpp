#pragma once

#include <optional>
#include <vector>

#include "smtc/category.hpp"
#include "smtc/io.hpp"
#include "smtc/symmetry.hpp"
#include "smtc/types.hpp"

namespace smtc {

// Every fusion product has a single outcome (so all quantum dimensions are 1).
bool is_pointed(const SuperMTC& C);

// The unique c with N_{ab}^c = 1 in a pointed category.
AnyonLabel pointed_product(const SuperMTC& C, AnyonLabel a, AnyonLabel b);

// A re-gluing of a pointed extension along the Z/2 grading its fermion image
// induces. Objects and even twists are kept; odd twists pick up the parameter
// b and odd-odd fusion absorbs an extra fermion. The braiding and associator
// of the result are rebuilt in standard form from the new quadratic form, so
// the category comes out skeletal with at-most-sign F symbols.
struct ZestResult {
  SuperMTC category;
  cplx parameter{1.0, 0.0};
  double central_charge = 0.0;
  std::vector<int> grading;  // 0 = even, 1 = odd per anyon
};

// Zest of E at twist parameter b on the odd sector. Returns nullopt when the
// re-glued twists fail to define a quadratic form (no consistent braiding at
// this b). ShapeError when E is not pointed or psi is not an order-two boson
// image with twist -1.
std::optional<ZestResult> zest(const SuperMTC& E, AnyonLabel psi, cplx b);

// All consistent zests with b ranging over the sixteenth roots of unity.
std::vector<ZestResult> zest_search(const SuperMTC& E, AnyonLabel psi);

// Equivalence of pointed braided categories: a fusion-group isomorphism
// matching twists entrywise plus, per level, the monodromy (gauge invariant)
// or the R symbols themselves (strict; meaningful when both categories carry
// their standard associator). Returns the image vector of one equivalence.
enum class EquivLevel { ThetaMonodromy, ThetaR };
std::optional<std::vector<AnyonLabel>> braided_pointed_equivalent(
    const SuperMTC& A, const SuperMTC& B,
    EquivLevel level = EquivLevel::ThetaMonodromy);

// Checks that `image` embeds C into E: injective, unit to unit, fermion to
// the declared fermion image, fusion rules transported with the image closed
// under fusion, and F/R entries equal on embedded labels.
Report embed_check(const SuperMTC& C, const SuperMTC& E,
                   const std::vector<AnyonLabel>& image,
                   double tol = kDefaultTolerance);

// Resolves the embedding block of an extension record against the base
// category. ShapeError when the record names a different base or the map does
// not cover every base anyon.
std::vector<AnyonLabel> embedding_image(const SuperMTC& base,
                                        const CategoryRecord& extension);
Report embed_check(const SuperMTC& base, const CategoryRecord& extension,
                   double tol = kDefaultTolerance);

// First obstruction layer: central charges (mod 8) of the extensions
// reachable by re-gluing E. Pointed extensions are scanned by zesting; for
// the rest only the half-integer ambiguity of c survives, so the full
// half-step grid is reported. Obstructed when no reachable charge is 0 mod 8.
struct Layer1Result {
  std::vector<double> charges;  // sorted, deduplicated, in [0, 8)
  bool obstructed = true;
};
Layer1Result cascade_layer1(const SuperMTC& E);

// Third obstruction layer: given the base action and the permutation/U data
// of a candidate action on a pointed extension, enumerates the eta systems
// solving the U-eta relation (seeded on embedded anyons by the gauge
// transport of the base eta) and counts how many close the eta cocycle.
// Obstructed when none does; `witness` holds one closing action otherwise.
struct Layer3Result {
  long long candidates = 0;
  long long u_eta_pass = 0;
  long long cocycle_pass = 0;
  bool obstructed = true;
  std::optional<FermionicAction> witness;
};
Layer3Result cascade_layer3(const SuperMTC& base, const FermionicAction& action,
                            const CategoryRecord& extension,
                            const FermionicAction& ext_action);

}  // namespace smtc
