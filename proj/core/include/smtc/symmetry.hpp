#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "smtc/category.hpp"
#include "smtc/types.hpp"

namespace smtc {

// Finite part of the symmetry group. Element 0 is the identity, s[g] = 1
// marks g as antiunitary, and omega is a normalized Z/2-valued 2-cocycle
// recording the extension of the bosonic group by fermion parity.
// lie_sector optionally names a connected factor ("U(1)" or "SO(3)") whose
// action on the category enters only through anyon charges.
struct SymmetryGroup {
  std::vector<std::string> element_names;
  std::vector<std::vector<int>> table;  // table[g][h] = gh
  std::vector<int> s;
  std::vector<std::vector<int>> omega;
  std::string lie_sector;

  int size() const { return static_cast<int>(element_names.size()); }
  int identity() const { return 0; }
  int mul(int g, int h) const { return table[g][h]; }
  int inv(int g) const;
  bool antiunitary(int g) const { return s[g] != 0; }
  int element(const std::string& name) const;

  // Cyclic group of order k generated by "T", with s(T) = s_gen. The
  // nontrivial extension class is omega(T^i, T^j) = [i + j >= k].
  static SymmetryGroup cyclic(int k, int s_gen, bool omega_nontrivial,
                              std::string lie_sector = "");
  static SymmetryGroup trivial(std::string lie_sector = "");
};

Report validate_group(const SymmetryGroup& G);

// Action data (rho, U, eta, charges) attached to one category. U defaults to
// the identity on every fusion space and eta to 1, so only nontrivial values
// need storing. `partial` marks eta data that solves the U-eta relation but
// is known not to close the eta cocycle (an obstruction witness); the cocycle
// check is skipped for such actions by check_action.
struct FermionicAction {
  std::string name;
  std::string category;  // name of the category the action belongs to
  SymmetryGroup group;
  std::vector<std::vector<AnyonLabel>> perm;                     // perm[g][a]
  std::vector<std::unordered_map<std::uint64_t, cplx>> u_table;  // pack_r_key
  std::vector<std::vector<std::vector<cplx>>> eta;               // eta[g][h][a]
  std::vector<Rational> charges;
  bool has_charges = false;
  bool partial = false;

  AnyonLabel act(int g, AnyonLabel a) const { return perm[g][a]; }
  AnyonLabel act_inv(int g, AnyonLabel a) const { return perm[group.inv(g)][a]; }

  cplx u(int g, int a, int b, int c, int mu, int nu) const {
    auto it = u_table[g].find(pack_r_key(a, b, c, mu, nu));
    if (it != u_table[g].end()) return it->second;
    return mu == nu ? cplx(1.0) : cplx(0.0);
  }
  cplx u1(int g, int a, int b, int c) const { return u(g, a, b, c, 0, 0); }
  Eigen::MatrixXcd u_matrix(const SuperMTC& C, int g, int a, int b, int c) const;

  cplx eta_of(int g, int h, AnyonLabel a) const { return eta[g][h][a]; }

  void set_u(int g, int a, int b, int c, int mu, int nu, cplx value) {
    u_table[g][pack_r_key(a, b, c, mu, nu)] = value;
  }
  void set_eta(int g, int h, AnyonLabel a, cplx value) { eta[g][h][a] = value; }

  // Sized containers with rho = id, U = 1, eta = 1.
  static FermionicAction trivial(const SuperMTC& C, SymmetryGroup group,
                                 std::string name = "");
};

inline AnyonLabel act_on_anyon(const FermionicAction& A, int g, AnyonLabel a) {
  return A.act(g, a);
}

// Container shapes, group axioms, permutation compatibility with fusion and
// twists, unitarity and gauge fixing of U, normalization of eta, and the
// charge rules for a declared Lie sector. Throws ShapeError when containers
// are malformed; value-level violations go into the report.
Report validate_action(const SuperMTC& C, const FermionicAction& A,
                       double tol = kDefaultTolerance);

// Compatibility of U with F and R: transporting a fusion tree through g must
// reproduce the (conjugated, when g is antiunitary) symbols of the preimage
// labels.
Report check_ufur(const SuperMTC& C, const FermionicAction& A,
                  double tol = kDefaultTolerance);

// U_g^{-1}(a,b;c) [U_h(a',b';c')^{-1}]^{s(g)} U_{gh}(a,b;c) must equal
// (eta_a eta_b / eta_c)(g,h) on every fusion space, primes denoting
// g-preimages.
Report check_u_eta(const SuperMTC& C, const FermionicAction& A,
                   double tol = kDefaultTolerance);

// eta_a(g,h) eta_a(gh,k) = eta_a(g,hk) [eta_{a'}(h,k)]^{s(g)}.
Report check_eta_cocycle(const SuperMTC& C, const FermionicAction& A,
                         double tol = kDefaultTolerance);

// eta_psi must be a sign-valued 2-cocycle whose class in Z/2 cohomology
// matches omega.
Report check_fermion_class(const SuperMTC& C, const FermionicAction& A,
                           double tol = kDefaultTolerance);

Report check_action(const SuperMTC& C, const FermionicAction& A,
                    double tol = kDefaultTolerance);

// Fusion-vertex basis change Gamma^{ab}_c, identity by default.
struct VertexGauge {
  std::unordered_map<std::uint64_t, Eigen::MatrixXcd> gamma;  // pack_r_key(a,b,c,0,0)

  Eigen::MatrixXcd at(const SuperMTC& C, int a, int b, int c) const;
  void set(int a, int b, int c, Eigen::MatrixXcd m) {
    gamma[pack_r_key(a, b, c, 0, 0)] = std::move(m);
  }
};

// Per-element anyon phases gamma_a(g).
struct ActionGauge {
  std::vector<std::vector<cplx>> gamma;  // gamma[g][a]
  cplx at(int g, int a) const { return gamma[g][a]; }
};

SuperMTC apply_vertex_gauge(const SuperMTC& C, const VertexGauge& G);
FermionicAction apply_vertex_gauge(const FermionicAction& A, const SuperMTC& C,
                                   const VertexGauge& G);
FermionicAction apply_action_gauge(const FermionicAction& A, const SuperMTC& C,
                                   const ActionGauge& gauge);

struct GaugeSample {
  VertexGauge vertex;
  ActionGauge action;
};

// Reproducible random unit-modulus gauge. Channels involving the unit, the
// (psi,psi;1) vertex, and the phases gamma_1(g), gamma_psi(g), gamma_a(1)
// stay pinned at 1 so the fermionic structure survives the resampling.
// `A` may be null when only a vertex gauge is needed.
GaugeSample random_gauge(const SuperMTC& C, const FermionicAction* A,
                         std::uint64_t seed);

}  // namespace smtc
