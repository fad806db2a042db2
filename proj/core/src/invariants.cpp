#include "smtc/invariants.hpp"

#include <algorithm>
#include <cmath>

namespace smtc {

namespace {
constexpr int kPowerIterationCap = 10000;
constexpr double kPowerIterationTol = 1e-14;
}  // namespace

double quantum_dimension(const SuperMTC& C, AnyonLabel a) {
  const int n = C.size();
  Eigen::MatrixXd M(n, n);
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b) M(c, b) = static_cast<double>(C.N[a][b][c]);
  // Shift by the identity so the dominant eigenvalue is unique even when the
  // fusion matrix is periodic (e.g. permutation matrices of abelian anyons).
  M += Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  double lambda = 0;
  for (int it = 0; it < kPowerIterationCap; ++it) {
    Eigen::VectorXd y = M * x;
    double norm = y.norm();
    if (norm == 0) throw ShapeError(cat("fusion matrix of ", C.anyon_names[a], " annihilates the FP vector"));
    y /= norm;
    double next = y.dot(M * y);
    if (std::abs(next - lambda) < kPowerIterationTol && it > 2) {
      lambda = next;
      break;
    }
    lambda = next;
    x = y;
  }
  return lambda - 1.0;
}

std::vector<double> quantum_dimensions(const SuperMTC& C) {
  std::vector<double> d(C.size());
  for (int a = 0; a < C.size(); ++a) d[a] = quantum_dimension(C, a);
  return d;
}

double total_dimension(const SuperMTC& C) {
  double sum = 0;
  for (double d : quantum_dimensions(C)) sum += d * d;
  return std::sqrt(sum);
}

cplx topological_twist(const SuperMTC& C, AnyonLabel a) {
  const double d_a = quantum_dimension(C, a);
  cplx sum = 0;
  for (int c = 0; c < C.size(); ++c) {
    int m = C.N[a][a][c];
    if (m == 0) continue;
    double d_c = quantum_dimension(C, c);
    for (int mu = 0; mu < m; ++mu) sum += d_c * C.r(a, a, c, mu, mu);
  }
  return sum / d_a;
}

std::vector<cplx> topological_twists(const SuperMTC& C) {
  std::vector<cplx> t(C.size());
  for (int a = 0; a < C.size(); ++a) t[a] = topological_twist(C, a);
  return t;
}

Eigen::MatrixXcd s_matrix(const SuperMTC& C) {
  const int n = C.size();
  const auto d = quantum_dimensions(C);
  const auto theta = topological_twists(C);
  const double D = total_dimension(C);
  Eigen::MatrixXcd S(n, n);
  for (int a = 0; a < n; ++a) {
    int abar = dual_of(C, a);
    for (int b = 0; b < n; ++b) {
      cplx sum = 0;
      for (int c = 0; c < n; ++c) {
        if (C.N[abar][b][c] == 0) continue;
        sum += static_cast<double>(C.N[abar][b][c]) * (theta[c] / (theta[a] * theta[b])) * d[c];
      }
      S(a, b) = sum / D;
    }
  }
  return S;
}

Eigen::MatrixXcd monodromy(const SuperMTC& C) {
  const int n = C.size();
  const auto d = quantum_dimensions(C);
  const double D = total_dimension(C);
  Eigen::MatrixXcd M = s_matrix(C);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) M(a, b) *= D / (d[a] * d[b]);
  return M;
}

std::vector<AnyonLabel> muger_center(const SuperMTC& C, double tol) {
  Eigen::MatrixXcd M = monodromy(C);
  std::vector<AnyonLabel> center;
  for (int a = 0; a < C.size(); ++a) {
    bool transparent = true;
    for (int b = 0; b < C.size(); ++b) {
      if (std::abs(M(a, b) - cplx(1, 0)) > tol) {
        transparent = false;
        break;
      }
    }
    if (transparent) center.push_back(a);
  }
  return center;
}

Report check_super_modular(const SuperMTC& C, double tol) {
  Report report;
  if (!C.has_fermion()) {
    report.add("no fermion declared");
    return report;
  }
  const int psi = C.fermion;

  auto center = muger_center(C, tol);
  {
    std::vector<AnyonLabel> expected = {C.unit(), psi};
    std::sort(expected.begin(), expected.end());
    if (center != expected) {
      std::string names;
      for (auto a : center) names += " " + C.anyon_names[a];
      report.add(cat("Muger center is not {1, psi}:", names.empty() ? " (empty)" : names));
    }
  }

  const auto theta = topological_twists(C);
  if (std::abs(theta[psi] + cplx(1, 0)) > tol)
    report.add(cat("fermion twist is not -1: theta_psi = ", theta[psi].real(), " + ", theta[psi].imag(), "i"));

  // Pair each anyon with its fermion partner and pick representatives.
  const int n = C.size();
  if (n % 2 != 0) {
    report.add("odd number of anyons cannot pair under fusion with the fermion");
    return report;
  }
  std::vector<int> partner(n);
  for (int a = 0; a < n; ++a) partner[a] = C.fuse_fermion(a);
  std::vector<int> reps;
  std::vector<char> seen(n, 0);
  for (int a = 0; a < n; ++a) {
    if (seen[a]) continue;
    if (partner[a] == a) {
      report.add(cat("anyon ", C.anyon_names[a], " is fixed by fusion with the fermion"));
      return report;
    }
    seen[a] = seen[partner[a]] = 1;
    reps.push_back(a);
  }

  const Eigen::MatrixXcd S = s_matrix(C);
  // S factorizes over the pairing: each entry is unchanged when either index
  // is replaced by its fermion partner.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (std::abs(S(a, b) - S(partner[a], b)) > tol || std::abs(S(a, b) - S(a, partner[b])) > tol) {
        report.add(cat("S does not factor over the fermion pairing at (", C.anyon_names[a], ",",
                       C.anyon_names[b], ")"));
      }
    }
  }

  const int m = static_cast<int>(reps.size());
  Eigen::MatrixXcd S_hat(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) S_hat(i, j) = std::sqrt(2.0) * S(reps[i], reps[j]);
  double defect = (S_hat * S_hat.adjoint() - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff();
  if (defect > tol) report.add(cat("reduced S matrix is not unitary (defect ", defect, ")"));

  return report;
}

Report check_modular(const SuperMTC& C, double tol) {
  Report report;
  auto center = muger_center(C, tol);
  if (center.size() != 1 || center[0] != C.unit()) {
    std::string names;
    for (auto a : center) names += " " + C.anyon_names[a];
    report.add(cat("Muger center is not {1}:", names.empty() ? " (empty)" : names));
  }
  const Eigen::MatrixXcd S = s_matrix(C);
  double defect =
      (S * S.adjoint() - Eigen::MatrixXcd::Identity(S.rows(), S.cols())).cwiseAbs().maxCoeff();
  if (defect > tol) report.add(cat("S matrix is not unitary (defect ", defect, ")"));
  if (C.has_fermion()) {
    cplx tp = topological_twist(C, C.fermion);
    if (std::abs(tp + cplx(1, 0)) > tol)
      report.add(cat("fermion twist is not -1: theta_psi = ", tp.real(), " + ", tp.imag(), "i"));
  }
  return report;
}

double central_charge(const SuperMTC& C, double snap_tol) {
  auto center = muger_center(C);
  if (center.size() != 1 || center[0] != C.unit())
    throw ShapeError(cat("central charge undefined: category '", C.name, "' is not modular"));
  const auto d = quantum_dimensions(C);
  const auto theta = topological_twists(C);
  const double D = total_dimension(C);
  cplx gauss = 0;
  for (int a = 0; a < C.size(); ++a) gauss += d[a] * d[a] * theta[a];
  gauss /= D;
  if (std::abs(std::abs(gauss) - 1.0) > snap_tol)
    throw ShapeError(cat("Gauss sum has modulus ", std::abs(gauss), ", expected 1"));
  double c = 4.0 * std::arg(gauss) / M_PI;  // exp(2 pi i c/8)
  c = std::fmod(c + 16.0, 8.0);
  double snapped = std::round(c * 4.0) / 4.0;
  if (std::abs(snapped - c) > snap_tol)
    throw ShapeError(cat("central charge ", c, " is not on the quarter-integer grid"));
  return std::fmod(snapped + 8.0, 8.0);
}

InvariantSummary invariant_summary(const SuperMTC& C, double tol) {
  InvariantSummary s;
  s.dims = quantum_dimensions(C);
  s.total_dim = total_dimension(C);
  s.twists = topological_twists(C);
  s.S = s_matrix(C);
  s.center = muger_center(C, tol);
  if (s.center.size() == 1 && s.center[0] == C.unit()) s.c = central_charge(C);
  return s;
}

}  // namespace smtc
