#include "smtc/symmetry.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "smtc/invariants.hpp"

namespace smtc {

namespace {

cplx conj_if(bool anti, cplx v) { return anti ? std::conj(v) : v; }

Eigen::MatrixXcd conj_if(bool anti, const Eigen::MatrixXcd& m) {
  if (!anti) return m;
  return m.conjugate();
}

double identity_defect(const Eigen::MatrixXcd& m, cplx scale = cplx(1.0)) {
  return (m - scale * Eigen::MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

}  // namespace

int SymmetryGroup::inv(int g) const {
  for (int h = 0; h < size(); ++h)
    if (mul(g, h) == identity()) return h;
  throw ShapeError(cat("group element ", g, " has no inverse"));
}

int SymmetryGroup::element(const std::string& name) const {
  for (int g = 0; g < size(); ++g)
    if (element_names[g] == name) return g;
  throw ShapeError(cat("unknown group element '", name, "'"));
}

SymmetryGroup SymmetryGroup::cyclic(int k, int s_gen, bool omega_nontrivial,
                                    std::string lie_sector) {
  if (k < 1) throw ShapeError("cyclic group order must be positive");
  SymmetryGroup G;
  G.lie_sector = std::move(lie_sector);
  G.element_names.resize(k);
  G.element_names[0] = "1";
  if (k > 1) G.element_names[1] = "T";
  for (int i = 2; i < k; ++i) G.element_names[i] = cat("T^", i);
  G.table.assign(k, std::vector<int>(k, 0));
  G.s.assign(k, 0);
  G.omega.assign(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i) {
    G.s[i] = (s_gen * i) % 2;
    for (int j = 0; j < k; ++j) {
      G.table[i][j] = (i + j) % k;
      if (omega_nontrivial) G.omega[i][j] = i + j >= k ? 1 : 0;
    }
  }
  return G;
}

SymmetryGroup SymmetryGroup::trivial(std::string lie_sector) {
  return cyclic(1, 0, false, std::move(lie_sector));
}

Report validate_group(const SymmetryGroup& G) {
  Report report;
  const int m = G.size();
  if (m == 0) throw ShapeError("group has no elements");
  if (static_cast<int>(G.table.size()) != m || static_cast<int>(G.s.size()) != m ||
      static_cast<int>(G.omega.size()) != m)
    throw ShapeError("group container sizes disagree with the element count");
  for (int g = 0; g < m; ++g)
    if (static_cast<int>(G.table[g].size()) != m || static_cast<int>(G.omega[g].size()) != m)
      throw ShapeError("group table rows must be square");
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h) {
      if (G.table[g][h] < 0 || G.table[g][h] >= m)
        throw ShapeError(cat("group table entry out of range at (", g, ",", h, ")"));
      if (G.omega[g][h] != 0 && G.omega[g][h] != 1)
        report.add(cat("omega must be 0/1-valued, got ", G.omega[g][h], " at (", g, ",", h, ")"));
    }

  for (int g = 0; g < m; ++g) {
    if (G.mul(0, g) != g || G.mul(g, 0) != g)
      report.add(cat("element 0 is not an identity against ", G.element_names[g]));
    bool has_inv = false;
    for (int h = 0; h < m; ++h)
      if (G.mul(g, h) == 0 && G.mul(h, g) == 0) has_inv = true;
    if (!has_inv) report.add(cat("element ", G.element_names[g], " has no two-sided inverse"));
  }
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      for (int k = 0; k < m; ++k)
        if (G.mul(G.mul(g, h), k) != G.mul(g, G.mul(h, k))) {
          report.add(cat("group law not associative at (", g, ",", h, ",", k, ")"));
          g = h = m;  // one witness is enough
          break;
        }

  if (G.s[0] != 0) report.add("the identity must be unitary");
  for (int g = 0; g < m; ++g) {
    if (G.s[g] != 0 && G.s[g] != 1) report.add(cat("s must be 0/1-valued, got ", G.s[g]));
    for (int h = 0; h < m; ++h)
      if (G.s[G.mul(g, h)] != (G.s[g] + G.s[h]) % 2)
        report.add(cat("s is not a homomorphism at (", G.element_names[g], ",",
                       G.element_names[h], ")"));
  }

  for (int g = 0; g < m; ++g)
    if (G.omega[0][g] != 0 || G.omega[g][0] != 0)
      report.add(cat("omega is not normalized at element ", G.element_names[g]));
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      for (int k = 0; k < m; ++k) {
        int lhs = (G.omega[g][h] + G.omega[G.mul(g, h)][k]) % 2;
        int rhs = (G.omega[h][k] + G.omega[g][G.mul(h, k)]) % 2;
        if (lhs != rhs)
          report.add(cat("omega fails the cocycle identity at (", G.element_names[g], ",",
                         G.element_names[h], ",", G.element_names[k], ")"));
      }

  if (!G.lie_sector.empty() && G.lie_sector != "U(1)" && G.lie_sector != "SO(3)")
    report.add(cat("unsupported Lie sector '", G.lie_sector, "'"));
  return report;
}

Eigen::MatrixXcd FermionicAction::u_matrix(const SuperMTC& C, int g, int a, int b,
                                           int c) const {
  const int n = C.n_fuse(a, b, c);
  Eigen::MatrixXcd m(n, n);
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) m(mu, nu) = u(g, a, b, c, mu, nu);
  return m;
}

FermionicAction FermionicAction::trivial(const SuperMTC& C, SymmetryGroup group,
                                         std::string name) {
  FermionicAction A;
  A.name = std::move(name);
  A.category = C.name;
  const int m = group.size();
  const int n = C.size();
  A.group = std::move(group);
  A.perm.assign(m, std::vector<AnyonLabel>(n));
  for (int g = 0; g < m; ++g)
    for (int a = 0; a < n; ++a) A.perm[g][a] = a;
  A.u_table.resize(m);
  A.eta.assign(m, std::vector<std::vector<cplx>>(m, std::vector<cplx>(n, cplx(1.0))));
  return A;
}

Report validate_action(const SuperMTC& C, const FermionicAction& A, double tol) {
  const int m = A.group.size();
  const int n = C.size();
  if (static_cast<int>(A.perm.size()) != m || static_cast<int>(A.u_table.size()) != m ||
      static_cast<int>(A.eta.size()) != m)
    throw ShapeError("action containers must have one slot per group element");
  for (int g = 0; g < m; ++g) {
    if (static_cast<int>(A.perm[g].size()) != n)
      throw ShapeError("permutation rows must cover every anyon");
    if (static_cast<int>(A.eta[g].size()) != m)
      throw ShapeError("eta must be indexed by pairs of group elements");
    for (int h = 0; h < m; ++h)
      if (static_cast<int>(A.eta[g][h].size()) != n)
        throw ShapeError("eta rows must cover every anyon");
  }
  if (A.has_charges && static_cast<int>(A.charges.size()) != n)
    throw ShapeError("charge table must cover every anyon");

  Report report;
  report.merge(validate_group(A.group));
  if (!report.ok()) return report;  // rho/U checks assume a sane group

  // rho is a fusion-preserving permutation action fixing 1 and psi.
  for (int a = 0; a < n; ++a)
    if (A.perm[0][a] != a) report.add(cat("identity element must act trivially on ", C.anyon_name(a)));
  for (int g = 0; g < m; ++g) {
    std::vector<int> seen(n, 0);
    for (int a = 0; a < n; ++a) {
      int img = A.perm[g][a];
      if (img < 0 || img >= n) throw ShapeError(cat("permutation image out of range for ", g));
      ++seen[img];
    }
    for (int a = 0; a < n; ++a)
      if (seen[a] != 1) {
        report.add(cat("element ", A.group.element_names[g], " does not permute the anyons"));
        break;
      }
    if (A.perm[g][C.unit()] != C.unit())
      report.add(cat("element ", A.group.element_names[g], " moves the unit"));
    if (C.has_fermion() && A.perm[g][C.fermion] != C.fermion)
      report.add(cat("element ", A.group.element_names[g], " moves the fermion"));
  }
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      for (int a = 0; a < n; ++a)
        if (A.perm[g][A.perm[h][a]] != A.perm[A.group.mul(g, h)][a]) {
          report.add(cat("rho is not a homomorphism at (", A.group.element_names[g], ",",
                         A.group.element_names[h], ")"));
          h = m;
          break;
        }
  for (int g = 0; g < m; ++g)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (C.N[a][b][c] != C.N[A.perm[g][a]][A.perm[g][b]][A.perm[g][c]]) {
            report.add(cat("element ", A.group.element_names[g],
                           " does not preserve the fusion rules at (", C.anyon_name(a), ",",
                           C.anyon_name(b), ";", C.anyon_name(c), ")"));
            a = b = c = n;
          }

  std::vector<cplx> theta = topological_twists(C);
  for (int g = 0; g < m; ++g)
    for (int a = 0; a < n; ++a) {
      cplx expected = conj_if(A.group.antiunitary(g), theta[a]);
      if (std::abs(theta[A.perm[g][a]] - expected) > tol)
        report.add(cat("element ", A.group.element_names[g], " breaks the twist of ",
                       C.anyon_name(a)));
    }

  // U is unitary on every fusion space and obeys the unit-channel gauge
  // fixing; the identity element carries U = 1 (forced by eta(1,1) = 1).
  for (int g = 0; g < m; ++g) {
    for (const auto& [key, value] : A.u_table[g]) {
      int a = static_cast<int>(key & 0x3f);
      int b = static_cast<int>((key >> 6) & 0x3f);
      int c = static_cast<int>((key >> 12) & 0x3f);
      int mu = static_cast<int>((key >> 18) & 0xf);
      int nu = static_cast<int>((key >> 22) & 0xf);
      if (a >= n || b >= n || c >= n)
        throw ShapeError(cat("U entry labels out of range for ", A.group.element_names[g]));
      if (C.N[a][b][c] == 0 && std::abs(value) > tol)
        report.add(cat("U entry on forbidden channel (", C.anyon_name(a), ",", C.anyon_name(b),
                       ";", C.anyon_name(c), ")"));
      if ((mu >= C.N[a][b][c] || nu >= C.N[a][b][c]) && std::abs(value) > tol)
        report.add(cat("U multiplicity index out of range on (", C.anyon_name(a), ",",
                       C.anyon_name(b), ";", C.anyon_name(c), ")"));
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (C.N[a][b][c] == 0) continue;
          Eigen::MatrixXcd u = A.u_matrix(C, g, a, b, c);
          double defect = identity_defect(u * u.adjoint());
          if (defect > tol)
            report.add(cat("U_", A.group.element_names[g], " not unitary on (", C.anyon_name(a),
                           ",", C.anyon_name(b), ";", C.anyon_name(c), "), defect ", defect));
          if ((a == C.unit() || b == C.unit()) && identity_defect(u) > tol)
            report.add(cat("U_", A.group.element_names[g], " must be 1 on the unit channel (",
                           C.anyon_name(a), ",", C.anyon_name(b), ";", C.anyon_name(c), ")"));
          if (g == 0 && identity_defect(u) > tol)
            report.add(cat("U of the identity element must be 1 on (", C.anyon_name(a), ",",
                           C.anyon_name(b), ";", C.anyon_name(c), ")"));
        }
  }

  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      for (int a = 0; a < n; ++a) {
        cplx e = A.eta_of(g, h, a);
        if (std::abs(std::abs(e) - 1.0) > tol)
          report.add(cat("eta_", C.anyon_name(a), "(", A.group.element_names[g], ",",
                         A.group.element_names[h], ") is not a phase"));
        if ((g == 0 || h == 0) && std::abs(e - cplx(1.0)) > tol)
          report.add(cat("eta_", C.anyon_name(a), " must be 1 when either argument is the identity"));
        if (a == C.unit() && std::abs(e - cplx(1.0)) > tol)
          report.add(cat("eta of the unit must be 1 at (", A.group.element_names[g], ",",
                         A.group.element_names[h], ")"));
      }

  if (A.has_charges) {
    if (A.group.lie_sector.empty())
      report.add("charges are given but no Lie sector is declared");
    if (A.charges[C.unit()] != Rational(0))
      report.add(cat("unit charge must be 0, got ", A.charges[C.unit()].str()));
    if (C.has_fermion() && A.charges[C.fermion].mod(1) != Rational(1, 2))
      report.add(cat("fermion charge must be 1/2 mod 1, got ", A.charges[C.fermion].str()));
    for (int a = 0; a < n; ++a) {
      if (A.group.lie_sector == "SO(3)" && A.charges[a].mod(1) != Rational(0) &&
          A.charges[a].mod(1) != Rational(1, 2))
        report.add(cat("SO(3) charges must lie in {0, 1/2} mod 1, got ", A.charges[a].str(),
                       " for ", C.anyon_name(a)));
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (C.N[a][b][c] > 0 &&
              (A.charges[a] + A.charges[b] - A.charges[c]).mod(1) != Rational(0))
            report.add(cat("charge not additive on (", C.anyon_name(a), ",", C.anyon_name(b),
                           ";", C.anyon_name(c), ")"));
    }
    for (int g = 0; g < m; ++g)
      for (int a = 0; a < n; ++a) {
        Rational expected =
            A.group.antiunitary(g) ? (Rational(0) - A.charges[a]) : A.charges[a];
        if ((A.charges[A.perm[g][a]] - expected).mod(1) != Rational(0))
          report.add(cat("element ", A.group.element_names[g], " breaks the charge of ",
                         C.anyon_name(a)));
      }
  }
  return report;
}

Report check_ufur(const SuperMTC& C, const FermionicAction& A, double tol) {
  Report report;
  const int m = A.group.size();
  const int n = C.size();

  for (int g = 0; g < m; ++g) {
    const bool anti = A.group.antiunitary(g);
    auto img = [&](int a) { return A.perm[g][a]; };

    // F-line: U(ga,gb;ge) U(ge,gc;gd) F^{ga gb gc}_{gd} U^{-1}(gb,gc;gf)
    // U^{-1}(ga,gf;gd) = K^{s} F^{abc}_d K^{s}.
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int e = 0; e < n; ++e) {
            if (C.N[a][b][e] == 0) continue;
            for (int d = 0; d < n; ++d) {
              if (C.N[e][c][d] == 0) continue;
              const int ga = img(a), gb = img(b), gc = img(c), gd = img(d), ge = img(e);
              Eigen::MatrixXcd u_ab = A.u_matrix(C, g, ga, gb, ge);
              Eigen::MatrixXcd u_ec = A.u_matrix(C, g, ge, gc, gd);
              for (int f = 0; f < n; ++f) {
                if (C.N[b][c][f] == 0 || C.N[a][f][d] == 0) continue;
                const int gf = img(f);
                Eigen::MatrixXcd u_bc_inv = A.u_matrix(C, g, gb, gc, gf).inverse();
                Eigen::MatrixXcd u_af_inv = A.u_matrix(C, g, ga, gf, gd).inverse();
                for (int alpha = 0; alpha < C.N[a][b][e]; ++alpha)
                  for (int beta = 0; beta < C.N[e][c][d]; ++beta)
                    for (int mu = 0; mu < C.N[b][c][f]; ++mu)
                      for (int nu = 0; nu < C.N[a][f][d]; ++nu) {
                        cplx lhs = 0;
                        for (int a2 = 0; a2 < C.N[a][b][e]; ++a2)
                          for (int b2 = 0; b2 < C.N[e][c][d]; ++b2)
                            for (int m2 = 0; m2 < C.N[b][c][f]; ++m2)
                              for (int n2 = 0; n2 < C.N[a][f][d]; ++n2)
                                lhs += u_ab(alpha, a2) * u_ec(beta, b2) *
                                       C.f(ga, gb, gc, gd, ge, gf, a2, b2, m2, n2) *
                                       u_bc_inv(m2, mu) * u_af_inv(n2, nu);
                        cplx rhs = conj_if(anti, C.f(a, b, c, d, e, f, alpha, beta, mu, nu));
                        if (std::abs(lhs - rhs) > tol) {
                          report.add(cat("U breaks F under ", A.group.element_names[g], " at (",
                                         C.anyon_name(a), ",", C.anyon_name(b), ",",
                                         C.anyon_name(c), ";", C.anyon_name(d), ") e=",
                                         C.anyon_name(e), " f=", C.anyon_name(f),
                                         " |lhs-rhs|=", std::abs(lhs - rhs)));
                          alpha = beta = mu = nu = kMaxMultiplicity;
                        }
                      }
              }
            }
          }

    // R-line: U(gb,ga;gc) R^{ga gb}_{gc} U^{-1}(ga,gb;gc) = K^{s} R^{ab}_c K^{s}.
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (C.N[a][b][c] == 0) continue;
          const int ga = img(a), gb = img(b), gc = img(c);
          Eigen::MatrixXcd lhs = A.u_matrix(C, g, gb, ga, gc) * C.r_matrix(ga, gb, gc) *
                                 A.u_matrix(C, g, ga, gb, gc).inverse();
          Eigen::MatrixXcd rhs = conj_if(anti, C.r_matrix(a, b, c));
          double defect = (lhs - rhs).cwiseAbs().maxCoeff();
          if (defect > tol)
            report.add(cat("U breaks R under ", A.group.element_names[g], " at (",
                           C.anyon_name(a), ",", C.anyon_name(b), ";", C.anyon_name(c),
                           "), defect ", defect));
        }
  }
  return report;
}

Report check_u_eta(const SuperMTC& C, const FermionicAction& A, double tol) {
  Report report;
  const int m = A.group.size();
  const int n = C.size();
  for (int g = 0; g < m; ++g) {
    const int ginv = A.group.inv(g);
    const bool anti = A.group.antiunitary(g);
    for (int h = 0; h < m; ++h) {
      const int gh = A.group.mul(g, h);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            if (C.N[a][b][c] == 0) continue;
            Eigen::MatrixXcd pre_inv =
                A.u_matrix(C, h, A.perm[ginv][a], A.perm[ginv][b], A.perm[ginv][c]).inverse();
            Eigen::MatrixXcd omega = A.u_matrix(C, g, a, b, c).inverse() *
                                     conj_if(anti, pre_inv) * A.u_matrix(C, gh, a, b, c);
            cplx expected =
                A.eta_of(g, h, a) * A.eta_of(g, h, b) / A.eta_of(g, h, c);
            double defect = identity_defect(omega, expected);
            if (defect > tol)
              report.add(cat("U and eta disagree at g=", A.group.element_names[g], " h=",
                             A.group.element_names[h], " on (", C.anyon_name(a), ",",
                             C.anyon_name(b), ";", C.anyon_name(c), "), defect ", defect));
          }
    }
  }
  return report;
}

Report check_eta_cocycle(const SuperMTC& C, const FermionicAction& A, double tol) {
  Report report;
  const int m = A.group.size();
  const int n = C.size();
  for (int g = 0; g < m; ++g) {
    const int ginv = A.group.inv(g);
    const bool anti = A.group.antiunitary(g);
    for (int h = 0; h < m; ++h)
      for (int k = 0; k < m; ++k)
        for (int a = 0; a < n; ++a) {
          cplx lhs = A.eta_of(g, h, a) * A.eta_of(A.group.mul(g, h), k, a);
          cplx rhs = A.eta_of(g, A.group.mul(h, k), a) *
                     conj_if(anti, A.eta_of(h, k, A.perm[ginv][a]));
          if (std::abs(lhs - rhs) > tol)
            report.add(cat("eta cocycle fails for ", C.anyon_name(a), " at (",
                           A.group.element_names[g], ",", A.group.element_names[h], ",",
                           A.group.element_names[k], "), |lhs-rhs|=", std::abs(lhs - rhs)));
        }
  }
  return report;
}

Report check_fermion_class(const SuperMTC& C, const FermionicAction& A, double tol) {
  Report report;
  if (!C.has_fermion()) return report;
  const int m = A.group.size();
  if (m > 20) throw ShapeError("fermion-class search supports at most 20 group elements");

  // target(g,h) = eta_psi(g,h) (-1)^{omega(g,h)} must be the coboundary of a
  // sign assignment epsilon with epsilon(1) = +1.
  std::vector<std::vector<int>> target(m, std::vector<int>(m, 1));
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h) {
      cplx e = A.eta_of(g, h, C.fermion);
      int sign;
      if (std::abs(e - cplx(1.0)) <= kSnapTolerance)
        sign = 1;
      else if (std::abs(e + cplx(1.0)) <= kSnapTolerance)
        sign = -1;
      else {
        report.add(cat("eta_psi(", A.group.element_names[g], ",", A.group.element_names[h],
                       ") is not a sign"));
        return report;
      }
      target[g][h] = sign * (A.group.omega[g][h] ? -1 : 1);
    }
  (void)tol;

  const std::uint64_t combos = std::uint64_t(1) << (m - 1);
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    std::vector<int> eps(m, 1);
    for (int g = 1; g < m; ++g)
      if (mask & (std::uint64_t(1) << (g - 1))) eps[g] = -1;
    bool good = true;
    for (int g = 0; g < m && good; ++g)
      for (int h = 0; h < m && good; ++h)
        if (eps[g] * eps[h] * eps[A.group.mul(g, h)] != target[g][h]) good = false;
    if (good) return report;
  }
  report.add("the class of eta_psi does not match omega");
  return report;
}

Report check_action(const SuperMTC& C, const FermionicAction& A, double tol) {
  Report report;
  report.merge(validate_action(C, A, tol));
  if (!report.ok()) return report;
  report.merge(check_ufur(C, A, tol));
  report.merge(check_u_eta(C, A, tol));
  if (!A.partial) report.merge(check_eta_cocycle(C, A, tol));
  report.merge(check_fermion_class(C, A, tol));
  return report;
}

Eigen::MatrixXcd VertexGauge::at(const SuperMTC& C, int a, int b, int c) const {
  auto it = gamma.find(pack_r_key(a, b, c, 0, 0));
  if (it != gamma.end()) return it->second;
  const int n = C.n_fuse(a, b, c);
  return Eigen::MatrixXcd::Identity(n, n);
}

SuperMTC apply_vertex_gauge(const SuperMTC& C, const VertexGauge& G) {
  SuperMTC out = C;
  out.F.clear();
  out.R.clear();
  const int n = C.size();

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          for (int e = 0; e < n; ++e) {
            if (C.N[a][b][e] == 0 || C.N[e][c][d] == 0) continue;
            Eigen::MatrixXcd g_ab = G.at(C, a, b, e);
            Eigen::MatrixXcd g_ec = G.at(C, e, c, d);
            for (int f = 0; f < n; ++f) {
              if (C.N[b][c][f] == 0 || C.N[a][f][d] == 0) continue;
              Eigen::MatrixXcd g_bc_inv = G.at(C, b, c, f).inverse();
              Eigen::MatrixXcd g_af_inv = G.at(C, a, f, d).inverse();
              for (int alpha = 0; alpha < C.N[a][b][e]; ++alpha)
                for (int beta = 0; beta < C.N[e][c][d]; ++beta)
                  for (int mu = 0; mu < C.N[b][c][f]; ++mu)
                    for (int nu = 0; nu < C.N[a][f][d]; ++nu) {
                      cplx value = 0;
                      for (int a2 = 0; a2 < C.N[a][b][e]; ++a2)
                        for (int b2 = 0; b2 < C.N[e][c][d]; ++b2)
                          for (int m2 = 0; m2 < C.N[b][c][f]; ++m2)
                            for (int n2 = 0; n2 < C.N[a][f][d]; ++n2)
                              value += g_ab(alpha, a2) * g_ec(beta, b2) *
                                       C.f(a, b, c, d, e, f, a2, b2, m2, n2) *
                                       g_bc_inv(m2, mu) * g_af_inv(n2, nu);
                      out.F[pack_f_key(a, b, c, d, e, f, alpha, beta, mu, nu)] = value;
                    }
            }
          }
        }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (C.N[a][b][c] == 0) continue;
        Eigen::MatrixXcd r =
            G.at(C, b, a, c) * C.r_matrix(a, b, c) * G.at(C, a, b, c).inverse();
        for (int mu = 0; mu < C.N[a][b][c]; ++mu)
          for (int nu = 0; nu < C.N[a][b][c]; ++nu)
            out.R[pack_r_key(a, b, c, mu, nu)] = r(mu, nu);
      }
  return out;
}

FermionicAction apply_vertex_gauge(const FermionicAction& A, const SuperMTC& C,
                                   const VertexGauge& G) {
  FermionicAction out = A;
  const int m = A.group.size();
  const int n = C.size();
  for (int g = 0; g < m; ++g) {
    const int ginv = A.group.inv(g);
    const bool anti = A.group.antiunitary(g);
    out.u_table[g].clear();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (C.N[a][b][c] == 0) continue;
          Eigen::MatrixXcd pre =
              conj_if(anti, G.at(C, A.perm[ginv][a], A.perm[ginv][b], A.perm[ginv][c]));
          Eigen::MatrixXcd u =
              pre * A.u_matrix(C, g, a, b, c) * G.at(C, a, b, c).inverse();
          for (int mu = 0; mu < C.N[a][b][c]; ++mu)
            for (int nu = 0; nu < C.N[a][b][c]; ++nu)
              out.u_table[g][pack_r_key(a, b, c, mu, nu)] = u(mu, nu);
        }
  }
  return out;
}

FermionicAction apply_action_gauge(const FermionicAction& A, const SuperMTC& C,
                                   const ActionGauge& gauge) {
  FermionicAction out = A;
  const int m = A.group.size();
  const int n = C.size();
  for (int g = 0; g < m; ++g) {
    const int ginv = A.group.inv(g);
    const bool anti = A.group.antiunitary(g);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (C.N[a][b][c] == 0) continue;
          cplx scale = gauge.at(g, a) * gauge.at(g, b) / gauge.at(g, c);
          for (int mu = 0; mu < C.N[a][b][c]; ++mu)
            for (int nu = 0; nu < C.N[a][b][c]; ++nu)
              out.u_table[g][pack_r_key(a, b, c, mu, nu)] =
                  scale * A.u(g, a, b, c, mu, nu);
        }
    for (int h = 0; h < m; ++h) {
      const int gh = A.group.mul(g, h);
      for (int a = 0; a < n; ++a)
        out.eta[g][h][a] = A.eta_of(g, h, a) * gauge.at(gh, a) /
                           (gauge.at(g, a) * conj_if(anti, gauge.at(h, A.perm[ginv][a])));
    }
  }
  return out;
}

GaugeSample random_gauge(const SuperMTC& C, const FermionicAction* A,
                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto phase = [&rng]() {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return std::polar(1.0, 2.0 * std::numbers::pi * u);
  };

  GaugeSample sample;
  const int n = C.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (C.N[a][b][c] == 0) continue;
        if (a == C.unit() || b == C.unit()) continue;
        if (C.has_fermion() && a == C.fermion && b == C.fermion && c == C.unit()) continue;
        Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(C.N[a][b][c], C.N[a][b][c]);
        for (int mu = 0; mu < C.N[a][b][c]; ++mu) g(mu, mu) = phase();
        sample.vertex.set(a, b, c, std::move(g));
      }

  if (A != nullptr) {
    const int m = A->group.size();
    sample.action.gamma.assign(m, std::vector<cplx>(n, cplx(1.0)));
    for (int g = 1; g < m; ++g)
      for (int a = 0; a < n; ++a) {
        if (a == C.unit()) continue;
        if (C.has_fermion() && a == C.fermion) continue;
        sample.action.gamma[g][a] = phase();
      }
  }
  return sample;
}

}  // namespace smtc
