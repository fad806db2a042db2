#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "smtc/types.hpp"

namespace smtc {

using AnyonLabel = int;

// Packed hash keys for the sparse symbol tables. Labels use 6 bits,
// multiplicity indices 4 bits, so categories may have up to 64 anyons and
// fusion multiplicities up to 16.
inline constexpr int kMaxAnyons = 64;
inline constexpr int kMaxMultiplicity = 16;

inline std::uint64_t pack_f_key(int a, int b, int c, int d, int e, int f,
                                int alpha, int beta, int mu, int nu) {
  return (static_cast<std::uint64_t>(a)) | (static_cast<std::uint64_t>(b) << 6) |
         (static_cast<std::uint64_t>(c) << 12) | (static_cast<std::uint64_t>(d) << 18) |
         (static_cast<std::uint64_t>(e) << 24) | (static_cast<std::uint64_t>(f) << 30) |
         (static_cast<std::uint64_t>(alpha) << 36) | (static_cast<std::uint64_t>(beta) << 40) |
         (static_cast<std::uint64_t>(mu) << 44) | (static_cast<std::uint64_t>(nu) << 48);
}

inline std::uint64_t pack_r_key(int a, int b, int c, int mu, int nu) {
  return (static_cast<std::uint64_t>(a)) | (static_cast<std::uint64_t>(b) << 6) |
         (static_cast<std::uint64_t>(c) << 12) | (static_cast<std::uint64_t>(mu) << 18) |
         (static_cast<std::uint64_t>(nu) << 22);
}

// Basis index (e, alpha, beta) for rows of an F-move, (f, mu, nu) for columns.
struct FusionTreeIndex {
  int mid = 0;
  int first = 0;
  int second = 0;
  bool operator==(const FusionTreeIndex& o) const {
    return mid == o.mid && first == o.first && second == o.second;
  }
};

// Skeletal data of a braided fusion category with a distinguished transparent
// fermion (super modular tensor category). The unit is always label 0.
struct SuperMTC {
  std::string name;
  std::vector<std::string> anyon_names;
  AnyonLabel fermion = -1;  // -1: no fermion declared (plain MTC)

  // N[a][b][c] = dim V_{ab}^c
  std::vector<std::vector<std::vector<int>>> N;

  // [F^{abc}_d]_{(e,alpha,beta),(f,mu,nu)} keyed by pack_f_key.
  std::unordered_map<std::uint64_t, cplx> F;
  // [R^{ab}_c]_{mu nu} keyed by pack_r_key.
  std::unordered_map<std::uint64_t, cplx> R;

  int size() const { return static_cast<int>(anyon_names.size()); }
  AnyonLabel unit() const { return 0; }
  bool has_fermion() const { return fermion >= 0; }

  int n_fuse(int a, int b, int c) const { return N[a][b][c]; }

  cplx f(int a, int b, int c, int d, int e, int ff, int alpha, int beta, int mu, int nu) const {
    auto it = F.find(pack_f_key(a, b, c, d, e, ff, alpha, beta, mu, nu));
    if (it == F.end())
      throw ShapeError(cat("missing F entry [F^{", a, ",", b, ",", c, "}_", d, "] e=", e, " f=", ff));
    return it->second;
  }
  cplx r(int a, int b, int c, int mu, int nu) const {
    auto it = R.find(pack_r_key(a, b, c, mu, nu));
    if (it == R.end()) throw ShapeError(cat("missing R entry [R^{", a, ",", b, "}_", c, "]"));
    return it->second;
  }
  // Multiplicity-free shorthands.
  cplx f1(int a, int b, int c, int d, int e, int ff) const { return f(a, b, c, d, e, ff, 0, 0, 0, 0); }
  cplx r1(int a, int b, int c) const { return r(a, b, c, 0, 0); }

  const std::string& anyon_name(int a) const { return anyon_names[a]; }
  AnyonLabel label_of(const std::string& name) const;

  std::vector<AnyonLabel> fusion_outcomes(AnyonLabel a, AnyonLabel b) const;

  // Row basis (e, alpha, beta) of the F-move for fixed externals a,b,c,d.
  std::vector<FusionTreeIndex> f_rows(int a, int b, int c, int d) const;
  // Column basis (f, mu, nu).
  std::vector<FusionTreeIndex> f_cols(int a, int b, int c, int d) const;
  Eigen::MatrixXcd f_matrix(int a, int b, int c, int d) const;
  // R-move as a matrix over the multiplicity indices of V_{ab}^c / V_{ba}^c.
  Eigen::MatrixXcd r_matrix(int a, int b, int c) const;

  // True when the anyon is the product of `a` with the fermion.
  AnyonLabel fuse_fermion(AnyonLabel a) const;
};

// Unique b with N(a,b,0) = 1.
AnyonLabel dual_of(const SuperMTC& C, AnyonLabel a);

// (Re)populates F and R with positional identity matrices on every admissible
// block. Builders and the loader call this before writing nontrivial entries.
void reset_default_symbols(SuperMTC& C);

// Shape-level validation: unit behaviour, duals, commutativity and
// associativity of the fusion rules, and completeness/admissibility of the
// stored F and R tables. Throws ShapeError on malformed containers; softer
// inconsistencies are recorded in the report.
Report validate_structure(const SuperMTC& C);

}  // namespace smtc
