#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "smtc/category.hpp"
#include "smtc/types.hpp"

namespace smtc {

// Frobenius-Perron dimension of a single anyon (largest eigenvalue of the
// fusion matrix (N_a)_{bc} = N_{ab}^c), computed by shifted power iteration.
double quantum_dimension(const SuperMTC& C, AnyonLabel a);
std::vector<double> quantum_dimensions(const SuperMTC& C);

// D = sqrt(sum_a d_a^2)
double total_dimension(const SuperMTC& C);

// theta_a = (1/d_a) sum_{c,mu} d_c [R^{aa}_c]_{mu mu}
cplx topological_twist(const SuperMTC& C, AnyonLabel a);
std::vector<cplx> topological_twists(const SuperMTC& C);

// S_{ab} = (1/D) sum_c N_{a* b}^c (theta_c / (theta_a theta_b)) d_c
Eigen::MatrixXcd s_matrix(const SuperMTC& C);

// M_{ab} = S_{ab} D / (d_a d_b)
Eigen::MatrixXcd monodromy(const SuperMTC& C);

// Anyons transparent to everything (|M_{ab} - 1| < tol for all b).
std::vector<AnyonLabel> muger_center(const SuperMTC& C, double tol = kDefaultTolerance);

// Checks that the Muger center is exactly {1, psi} with the declared fermion,
// theta_psi = -1, that S factorizes as S_hat x K over the psi-pairing of
// anyons, and that S_hat = sqrt(2) * S restricted to pair representatives is
// unitary.
Report check_super_modular(const SuperMTC& C, double tol = kDefaultTolerance);

// Checks that the Muger center is exactly {1} (so S is unitary) and, when a
// fermion is declared, that theta_psi = -1. This is the right notion for
// extension targets, which contain the fermion but braid with it nontrivially.
Report check_modular(const SuperMTC& C, double tol = kDefaultTolerance);

// Gauss sum argument: (1/D) sum_a d_a^2 theta_a = exp(2 pi i c / 8) for a
// modular category (trivial Muger center). The result is snapped to the
// nearest quarter-integer when within snap_tol; otherwise ShapeError.
// Throws ShapeError when the category is not modular.
double central_charge(const SuperMTC& C, double snap_tol = kSnapTolerance);

// Convenience bundle used by the CLI.
struct InvariantSummary {
  std::vector<double> dims;
  double total_dim = 0;
  std::vector<cplx> twists;
  Eigen::MatrixXcd S;
  std::vector<AnyonLabel> center;
  std::optional<double> c;  // defined only for modular categories
};
InvariantSummary invariant_summary(const SuperMTC& C, double tol = kDefaultTolerance);

}  // namespace smtc
