#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smtc/category.hpp"
#include "smtc/symmetry.hpp"
#include "smtc/types.hpp"

namespace smtc {

// One evaluated anomaly indicator. `classification` names the discrete group
// the symmetry class is graded by, `order` the cyclic grid this particular
// value lives on (0 for angle-valued entries), `nu` its position on that grid,
// and `shadows` the per-spin-structure partial sums the value was assembled
// from, when the evaluation produces them.
struct IndicatorResult {
  std::string name;
  cplx value{1.0, 0.0};
  std::string classification;
  int order = 0;
  std::optional<int> nu;
  std::vector<cplx> shadows;
};

// Grid position nu of a root of unity: value = exp(2 pi i nu / order), with
// 0 <= nu < order. Throws ShapeError when |value| strays from 1 by more than
// tol or the argument misses the grid by more than tol in grid units.
int anomaly_class(cplx value, int order, double tol = 1e-6);

// Time-reversal indicator for an antiunitary Z/2 symmetry squaring to fermion
// parity (nontrivial omega). The value is a 16th root of unity; shadows hold
// the two spin-structure sums (fixed anyons, fermion-swapped anyons).
// `alternate_spin` evaluates the other pin structure, conjugating the swapped
// sector's weight.
IndicatorResult indicator_pin_plus(const SuperMTC& C, const FermionicAction& A,
                                   bool alternate_spin = false);

// Indicator for an antiunitary Z/4 symmetry with trivial omega (generator
// squares to a unitary order-2 symmetry). The value is a 4th root of unity;
// shadows hold the four sector sums over (fixed/swapped) anyon pairs. Requires
// a multiplicity-free category.
IndicatorResult indicator_epin(const SuperMTC& C, const FermionicAction& A,
                               bool alternate_spin = false);

// Partition values of the three generating 4-manifolds for charged classes.
// CP^2 and S^2 x S^2 weigh anyons by their U(1)/SO(3) charge q_a; S^4 carries
// no 2-cycles, and its handle decomposition (one 0-handle, one 4-handle)
// evaluates to 1 for every consistent theory, so it is returned exactly.
cplx partition_cp2(const SuperMTC& C, const std::vector<Rational>& charges);
cplx partition_s2s2(const SuperMTC& C, const std::vector<Rational>& charges);
cplx partition_s4(const SuperMTC& C);

// Theta angles (radians, principal branch) for the two charged classes
// without antiunitary symmetry.
struct ThetaAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
};
ThetaAngles class_a_theta(const SuperMTC& C, const std::vector<Rational>& charges);
ThetaAngles class_c_theta(const SuperMTC& C, const std::vector<Rational>& charges);

// Hall response extracted from the theta angles, snapped to the 1/16 grid.
// For a U(1) charge sector sigma_H and kappa are defined mod 1; for SO(3)
// they are defined mod 2 (and sigma_H is always even).
struct HallConductance {
  Rational sigma_h;
  Rational kappa;
  Rational modulus;
};
HallConductance hall_conductance(const SuperMTC& C, const std::vector<Rational>& charges,
                                 const std::string& lie_sector);
HallConductance hall_conductance(const SuperMTC& C, const FermionicAction& A);

// Full indicator set for one symmetry class. `symmetry` is one of
//   pin+ | epin | classA | classC | AI | AII | AIII | CI | CII
// or empty to infer a class from the action's shape (preferring AII over
// AIII and CI over CII, which share input data). `gapless` lists indicator
// values that admit no gapped realization.
struct TenfoldReport {
  std::string symmetry_class;
  std::string classification;
  std::vector<IndicatorResult> indicators;
  std::optional<HallConductance> hall;
  std::vector<std::string> gapless;
};
TenfoldReport tenfold_report(const SuperMTC& C, const FermionicAction& A,
                             const std::string& symmetry = "");

// Values in `report` that force gapless edges: a class-CI time-reversal
// indicator at +-i, or a class-CII S^4 value of -1.
std::vector<std::string> gaplessness_check(const TenfoldReport& report);

// All SO(3)-compatible charge tables on C: q_a in {0, 1/2}, q_1 = 0,
// q_psi = 1/2, additive across every fusion channel. Returns at most `limit`
// tables (ShapeError beyond that; the search itself is exhaustive).
std::vector<std::vector<Rational>> so3_charge_tables(const SuperMTC& C, int limit = 64);

}  // namespace smtc
