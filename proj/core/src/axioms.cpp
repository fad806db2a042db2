#include "smtc/axioms.hpp"

#include <cmath>

// Index conventions. [F^{abc}_d] maps the fused basis |(ab)c; e, alpha, beta>
// (alpha in V_{ab}^e, beta in V_{ec}^d) to |a(bc); f, mu, nu> (mu in V_{bc}^f,
// nu in V_{af}^d); rows are (e,alpha,beta), columns (f,mu,nu). [R^{ab}_c] maps
// V_{ab}^c to V_{ba}^c. With these conventions the two re-association paths
// ((ab)c)d -> a(b(cd)) give the pentagon
//
//   sum_delta [F^{fcd}_e]_{(g,beta,gamma),(l,nu,delta)}
//             [F^{abl}_e]_{(f,alpha,delta),(k,lambda,mu)}
// = sum_{h,u,v,rho} [F^{abc}_g]_{(f,alpha,beta),(h,u,v)}
//                   [F^{ahd}_e]_{(g,v,gamma),(k,rho,mu)}
//                   [F^{bcd}_k]_{(h,u,rho),(l,nu,lambda)}
//
// and sliding a past (bc) in the two possible ways gives the hexagon
//
//   sum_{lambda,gamma} [R^{ba}_e]_{alpha lambda}
//                      [F^{bac}_d]_{(e,lambda,beta),(g,gamma,delta)}
//                      [R^{ca}_g]_{gamma kappa}
// = sum_{f,mu,nu,rho} [F^{abc}_d]_{(e,alpha,beta),(f,mu,nu)}
//                     [R^{fa}_d]_{nu rho}
//                     [F^{bca}_d]_{(f,mu,rho),(g,kappa,delta)}
//
// together with the mirror identity in which every braid factor is replaced
// by the inverse braiding in the opposite order, [R^{ba}_e] -> [(R^{ab}_e)^{-1}]
// etc.  This orientation pairing is the one preserved by vertex gauges acting
// as R -> Gamma^{ba}_c R (Gamma^{ab}_c)^{-1}; swapping the R labels in either
// identity breaks gauge covariance even though categories with symmetric
// braiding data cannot tell the difference.

namespace smtc {

Report check_pentagon(const SuperMTC& C, double tol) {
  Report report;
  const int n = C.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int f = 0; f < n; ++f) {
            if (C.N[a][b][f] == 0) continue;
            for (int g = 0; g < n; ++g) {
              if (C.N[f][c][g] == 0) continue;
              for (int e = 0; e < n; ++e) {
                if (C.N[g][d][e] == 0) continue;
                for (int l = 0; l < n; ++l) {
                  if (C.N[c][d][l] == 0) continue;
                  for (int k = 0; k < n; ++k) {
                    if (C.N[b][l][k] == 0 || C.N[a][k][e] == 0) continue;
                    for (int alpha = 0; alpha < C.N[a][b][f]; ++alpha)
                      for (int beta = 0; beta < C.N[f][c][g]; ++beta)
                        for (int gamma = 0; gamma < C.N[g][d][e]; ++gamma)
                          for (int nu = 0; nu < C.N[c][d][l]; ++nu)
                            for (int lambda = 0; lambda < C.N[b][l][k]; ++lambda)
                              for (int mu = 0; mu < C.N[a][k][e]; ++mu) {
                                cplx lhs = 0;
                                for (int delta = 0; delta < C.N[f][l][e]; ++delta)
                                  lhs += C.f(f, c, d, e, g, l, beta, gamma, nu, delta) *
                                         C.f(a, b, l, e, f, k, alpha, delta, lambda, mu);
                                cplx rhs = 0;
                                for (int h = 0; h < n; ++h) {
                                  if (C.N[b][c][h] == 0 || C.N[a][h][g] == 0 || C.N[h][d][k] == 0)
                                    continue;
                                  for (int u = 0; u < C.N[b][c][h]; ++u)
                                    for (int v = 0; v < C.N[a][h][g]; ++v)
                                      for (int rho = 0; rho < C.N[h][d][k]; ++rho)
                                        rhs += C.f(a, b, c, g, f, h, alpha, beta, u, v) *
                                               C.f(a, h, d, e, g, k, v, gamma, rho, mu) *
                                               C.f(b, c, d, k, h, l, u, rho, nu, lambda);
                                }
                                if (std::abs(lhs - rhs) > tol)
                                  report.add(cat("pentagon broken at a=", C.anyon_names[a], " b=",
                                                 C.anyon_names[b], " c=", C.anyon_names[c], " d=",
                                                 C.anyon_names[d], " e=", C.anyon_names[e], " f=",
                                                 C.anyon_names[f], " g=", C.anyon_names[g], " k=",
                                                 C.anyon_names[k], " l=", C.anyon_names[l],
                                                 " |lhs-rhs|=", std::abs(lhs - rhs)));
                              }
                  }
                }
              }
            }
          }
  return report;
}

namespace {

// Shared loop for the braiding hexagon and its inverse-braiding mirror.
// use_inverse = false: braid factors are [R^{yx}_z].
// use_inverse = true : braid factors are [(R^{xy}_z)^{-1}].
void hexagon_pass(const SuperMTC& C, double tol, bool use_inverse, Report& report) {
  const int n = C.size();
  auto braid = [&](int x, int y, int z) -> Eigen::MatrixXcd {
    if (!use_inverse) return C.r_matrix(y, x, z);
    return C.r_matrix(x, y, z).inverse();
  };
  const char* tag = use_inverse ? "inverse hexagon" : "hexagon";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e) {
            if (C.N[a][b][e] == 0 || C.N[e][c][d] == 0) continue;
            Eigen::MatrixXcd r_ab = braid(a, b, e);
            for (int g = 0; g < n; ++g) {
              if (C.N[a][c][g] == 0 || C.N[b][g][d] == 0) continue;
              Eigen::MatrixXcd r_ac = braid(a, c, g);
              for (int alpha = 0; alpha < C.N[a][b][e]; ++alpha)
                for (int beta = 0; beta < C.N[e][c][d]; ++beta)
                  for (int kappa = 0; kappa < C.N[a][c][g]; ++kappa)
                    for (int delta = 0; delta < C.N[b][g][d]; ++delta) {
                      cplx lhs = 0;
                      for (int lambda = 0; lambda < C.N[b][a][e]; ++lambda)
                        for (int gamma = 0; gamma < C.N[a][c][g]; ++gamma)
                          lhs += r_ab(alpha, lambda) * C.f(b, a, c, d, e, g, lambda, beta, gamma, delta) *
                                 r_ac(gamma, kappa);
                      cplx rhs = 0;
                      for (int f = 0; f < n; ++f) {
                        if (C.N[b][c][f] == 0 || C.N[a][f][d] == 0) continue;
                        Eigen::MatrixXcd r_af = braid(a, f, d);
                        for (int mu = 0; mu < C.N[b][c][f]; ++mu)
                          for (int nu = 0; nu < C.N[a][f][d]; ++nu)
                            for (int rho = 0; rho < C.N[a][f][d]; ++rho)
                              rhs += C.f(a, b, c, d, e, f, alpha, beta, mu, nu) * r_af(nu, rho) *
                                     C.f(b, c, a, d, f, g, mu, rho, kappa, delta);
                      }
                      if (std::abs(lhs - rhs) > tol)
                        report.add(cat(tag, " broken at a=", C.anyon_names[a], " b=", C.anyon_names[b],
                                       " c=", C.anyon_names[c], " d=", C.anyon_names[d], " e=",
                                       C.anyon_names[e], " g=", C.anyon_names[g],
                                       " |lhs-rhs|=", std::abs(lhs - rhs)));
                    }
            }
          }
}

}  // namespace

Report check_hexagon(const SuperMTC& C, double tol) {
  Report report;
  hexagon_pass(C, tol, false, report);
  hexagon_pass(C, tol, true, report);
  return report;
}

Report check_unitarity(const SuperMTC& C, double tol) {
  Report report;
  const int n = C.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (C.N[a][b][c] == 0) continue;
        Eigen::MatrixXcd R = C.r_matrix(a, b, c);
        double defect =
            (R * R.adjoint() - Eigen::MatrixXcd::Identity(R.rows(), R.cols())).cwiseAbs().maxCoeff();
        if (defect > tol)
          report.add(cat("R-move not unitary at (", C.anyon_names[a], ",", C.anyon_names[b], ";",
                         C.anyon_names[c], "), defect ", defect));
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          bool admissible = false;
          for (int e = 0; e < n && !admissible; ++e)
            if (C.N[a][b][e] > 0 && C.N[e][c][d] > 0) admissible = true;
          if (!admissible) continue;
          Eigen::MatrixXcd F = C.f_matrix(a, b, c, d);
          if (F.rows() != F.cols()) continue;  // flagged by validate_structure
          double defect =
              (F * F.adjoint() - Eigen::MatrixXcd::Identity(F.rows(), F.cols())).cwiseAbs().maxCoeff();
          if (defect > tol)
            report.add(cat("F-move not unitary at (", C.anyon_names[a], ",", C.anyon_names[b], ",",
                           C.anyon_names[c], ";", C.anyon_names[d], "), defect ", defect));
        }
  return report;
}

Report check_axioms(const SuperMTC& C, double tol) {
  Report report;
  report.merge(check_unitarity(C, tol));
  report.merge(check_pentagon(C, tol));
  report.merge(check_hexagon(C, tol));
  return report;
}

}  // namespace smtc
