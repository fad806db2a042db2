#include "smtc/indicators.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "smtc/invariants.hpp"

namespace smtc {
namespace {

constexpr double kPi = std::numbers::pi;

cplx charge_phase(const Rational& q, int multiple) {
  return std::polar(1.0, multiple * kPi * static_cast<double>(q.num) / static_cast<double>(q.den));
}

// Whether the group 2-cocycle omega bounds: exists eps : G -> {+-1} with
// (-1)^omega(g,h) = eps(g) eps(h) eps(gh), eps(1) = 1.
bool omega_class_trivial(const SymmetryGroup& G) {
  const int m = G.size();
  if (m > 16) throw ShapeError("omega class test limited to groups of order <= 16");
  for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
    std::vector<int> eps(m, 1);
    for (int g = 1; g < m; ++g) eps[g] = (mask >> (g - 1)) & 1 ? -1 : 1;
    bool ok = true;
    for (int g = 0; g < m && ok; ++g)
      for (int h = 0; h < m && ok; ++h) {
        int lhs = G.omega[g][h] ? -1 : 1;
        if (lhs != eps[g] * eps[h] * eps[G.mul(g, h)]) ok = false;
      }
    if (ok) return true;
  }
  return false;
}

// Both time-reversal indicators track the fermion through crosscaps and only
// make sense when it braids trivially with everything. Modular extensions
// carry a declared fermion that fails this.
void require_transparent_fermion(const SuperMTC& C, const char* what) {
  const auto th = topological_twists(C);
  for (int x = 0; x < C.size(); ++x) {
    const cplx braid = th[C.fuse_fermion(x)] / (th[x] * th[C.fermion]);
    if (std::abs(braid - cplx{1.0, 0.0}) > 1e-9)
      throw ShapeError(cat(what, " needs a transparent fermion"));
  }
}

void require_charges(const FermionicAction& A, const std::string& sector,
                     const std::string& context) {
  if (!A.has_charges || A.group.lie_sector != sector)
    throw ShapeError(cat(context, " needs an action carrying ", sector, " charges"));
}

IndicatorResult graded(std::string name, cplx value, std::string classification, int order,
                       std::vector<cplx> shadows = {}) {
  IndicatorResult out;
  out.name = std::move(name);
  out.value = value;
  out.classification = std::move(classification);
  out.order = order;
  if (order > 0) out.nu = anomaly_class(value, order);
  out.shadows = std::move(shadows);
  return out;
}

Rational snap_sixteenth(double x, const char* what) {
  long long grid = std::llround(x * 16.0);
  if (std::abs(x * 16.0 - static_cast<double>(grid)) > 16.0 * 1e-6)
    throw ShapeError(cat(what, " = ", x, " is off the 1/16 grid"));
  return Rational(grid, 16);
}

}  // namespace

int anomaly_class(cplx value, int order, double tol) {
  if (order <= 0) throw ShapeError("anomaly grid order must be positive");
  if (std::abs(std::abs(value) - 1.0) > tol)
    throw ShapeError(cat("indicator value is not a phase: |value| = ", std::abs(value)));
  double turns = std::arg(value) / (2.0 * kPi) * order;
  long long nearest = std::llround(turns);
  if (std::abs(turns - static_cast<double>(nearest)) > tol * order)
    throw ShapeError(cat("indicator value misses the Z/", order, " grid by ",
                         std::abs(turns - static_cast<double>(nearest)), " steps"));
  return static_cast<int>(((nearest % order) + order) % order);
}

IndicatorResult indicator_pin_plus(const SuperMTC& C, const FermionicAction& A,
                                   bool alternate_spin) {
  if (!C.has_fermion()) throw ShapeError("pin+ indicator needs a fermion");
  require_transparent_fermion(C, "pin+ indicator");
  if (A.group.size() != 2 || A.group.s != std::vector<int>{0, 1})
    throw ShapeError("pin+ indicator needs a Z/2 symmetry with antiunitary generator");
  if (omega_class_trivial(A.group))
    throw ShapeError("pin+ indicator needs the generator to square to fermion parity");

  const int T = 1;
  const int psi = C.fermion;
  const auto d = quantum_dimensions(C);
  const auto th = topological_twists(C);
  const double Dtot = total_dimension(C);

  // Spin-structure sums over T-fixed and fermion-swapped anyons.
  cplx z1 = 0.0, z2 = 0.0;
  for (int a = 0; a < C.size(); ++a) {
    const int Ta = A.perm[T][a];
    const int apsi = C.fuse_fermion(a);
    if (Ta == a) {
      z1 += d[a] * th[a] * A.eta_of(T, T, a);
    } else if (Ta == apsi) {
      z2 += d[a] * th[a] * A.eta_of(T, T, a) * A.u1(T, a, psi, apsi) *
            C.f1(a, psi, psi, a, apsi, C.unit());
    }
  }
  z1 /= Dtot;
  z2 /= Dtot;
  const cplx i{0.0, 1.0};
  const cplx value = (alternate_spin ? z1 - i * z2 : z1 + i * z2) / std::numbers::sqrt2;
  return graded("I", value, "Z16_pinplus", 16, {z1, z2});
}

IndicatorResult indicator_epin(const SuperMTC& C, const FermionicAction& A, bool alternate_spin) {
  if (!C.has_fermion()) throw ShapeError("epin indicator needs a fermion");
  require_transparent_fermion(C, "epin indicator");
  if (A.group.size() != 4 || A.group.s != std::vector<int>{0, 1, 0, 1})
    throw ShapeError("epin indicator needs a Z/4 symmetry with antiunitary generator");
  if (!omega_class_trivial(A.group))
    throw ShapeError("epin indicator needs a generator that squares to a genuine Z/2 symmetry");
  for (const auto& row : C.N)
    for (const auto& col : row)
      for (int n : col)
        if (n > 1) throw ShapeError("epin indicator needs a multiplicity-free category");

  const int T = 1;
  const int psi = C.fermion;
  const int n = C.size();
  const auto d = quantum_dimensions(C);
  const auto th = topological_twists(C);
  const double Dtot = total_dimension(C);
  const auto& rho1 = A.perm[1];
  const auto& rho2 = A.perm[2];
  const auto& rho3 = A.perm[3];
  auto uinv = [&](int g, int a, int b, int c) { return 1.0 / A.u1(g, a, b, c); };
  const cplx i{0.0, 1.0};

  // Sector sums keyed by how (b, z) transport around the crosscaps: both
  // fixed, both fermion-swapped, only z swapped, only b swapped.
  std::array<cplx, 4> sector{};
  for (int a = 0; a < n; ++a) {
    const int Ta = rho1[a];
    const int T2a = rho2[a];
    const int T3a = rho3[a];
    const cplx etas =
        std::conj(A.eta_of(1, 1, a) * A.eta_of(1, 1, T2a) * A.eta_of(2, 2, T2a));
    for (int y : C.fusion_outcomes(a, T2a)) {
      const int Ty = rho1[y];
      const int T2y = rho2[y];
      const cplx rfac = std::conj(C.r1(Ta, T3a, Ty));
      const cplx ufac_y = std::conj(uinv(T, Ta, T3a, Ty)) * uinv(T, a, T2a, T2y);
      for (int b = 0; b < n; ++b) {
        const int Tb = rho1[b];
        const int bpsi = C.fuse_fermion(b);
        for (int z = 0; z < n; ++z) {
          const int Tz = rho1[z];
          const int zpsi = C.fuse_fermion(z);
          if (!C.N[b][y][Tz]) continue;
          if (!C.N[b][T2y][Tz]) continue;
          int which = 0;
          cplx ucase;
          if (Tb == b && Tz == z) {
            if (!C.N[b][Ty][Tz]) continue;
            which = 0;
            ucase = std::conj(uinv(T, b, Ty, Tz));
          } else if (Tb == bpsi && Tz == zpsi) {
            if (!C.N[b][Ty][Tz]) continue;
            which = 1;
            ucase = -std::conj(C.f1(psi, Tb, y, zpsi, b, z)) * C.f1(psi, Tb, Ty, zpsi, b, z) *
                    std::conj(uinv(T, b, Ty, Tz));
          } else if (Tb == b && Tz == zpsi) {
            if (!C.N[bpsi][y][z]) continue;
            if (!C.N[b][y][zpsi]) continue;
            if (!C.N[bpsi][T2y][z]) continue;
            if (!C.N[bpsi][Ty][Tz]) continue;
            which = 2;
            ucase = i * C.f1(psi, b, y, z, bpsi, zpsi) * C.f1(psi, b, T2y, z, bpsi, zpsi) *
                    std::conj(C.f1(psi, psi, z, z, C.unit(), zpsi)) *
                    std::conj(uinv(T, psi, b, bpsi)) * std::conj(uinv(T, bpsi, Ty, Tz));
          } else if (Tb == bpsi && Tz == z) {
            if (!C.N[bpsi][Ty][Tz]) continue;
            which = 3;
            ucase = -i * C.f1(Tb, psi, psi, Tb, b, C.unit()) * std::conj(uinv(T, b, psi, bpsi)) *
                    std::conj(uinv(T, bpsi, Ty, Tz));
          } else {
            continue;
          }
          for (int u : C.fusion_outcomes(b, a)) {
            if (!C.N[u][T2a][Tz]) continue;
            sector[which] += d[a] * (th[u] / th[b]) * rfac *
                             std::conj(C.f1(b, a, T2a, Tz, u, y)) * C.f1(b, a, T2a, Tz, u, T2y) *
                             ufac_y * uinv(T, b, T2y, Tz) * etas * ucase;
          }
        }
      }
    }
  }
  for (auto& s : sector) s /= Dtot * Dtot;

  const std::vector<cplx> shadows{sector[0], -sector[1], -i * sector[2], -i * sector[3]};
  const cplx swapped = alternate_spin ? -i * (shadows[2] + shadows[3]) : i * (shadows[2] + shadows[3]);
  const cplx value = 0.5 * (shadows[0] - shadows[1] + swapped);
  return graded("I", value, "Z4_epin", 4, shadows);
}

cplx partition_cp2(const SuperMTC& C, const std::vector<Rational>& charges) {
  if (static_cast<int>(charges.size()) != C.size())
    throw ShapeError("charge table must cover every anyon");
  const auto d = quantum_dimensions(C);
  const auto th = topological_twists(C);
  cplx total = 0.0;
  for (int a = 0; a < C.size(); ++a) total += d[a] * d[a] * th[a] * charge_phase(charges[a], 2);
  return total / (std::numbers::sqrt2 * total_dimension(C));
}

cplx partition_s2s2(const SuperMTC& C, const std::vector<Rational>& charges) {
  if (static_cast<int>(charges.size()) != C.size())
    throw ShapeError("charge table must cover every anyon");
  const auto d = quantum_dimensions(C);
  const Eigen::MatrixXcd S = s_matrix(C);
  cplx total = 0.0;
  for (int a = 0; a < C.size(); ++a)
    for (int b = 0; b < C.size(); ++b)
      total += d[a] * d[b] * S(a, b) * charge_phase(charges[a], 4) * charge_phase(charges[b], 4);
  return total / (2.0 * total_dimension(C));
}

cplx partition_s4(const SuperMTC&) {
  // One 0-handle and one 4-handle, no 2-handles to label: the evaluation is
  // the empty diagram and the normalizations cancel.
  return cplx{1.0, 0.0};
}

namespace {

double phase_angle(cplx value, const char* what) {
  if (std::abs(std::abs(value) - 1.0) > 1e-6)
    throw ShapeError(cat(what, " is not a phase: |value| = ", std::abs(value),
                         " (charge table is not consistent)"));
  return std::arg(value);
}

}  // namespace

ThetaAngles class_a_theta(const SuperMTC& C, const std::vector<Rational>& charges) {
  const cplx cp2 = partition_cp2(C, charges);
  const cplx s2s2 = partition_s2s2(C, charges);
  ThetaAngles out;
  out.theta2 = phase_angle(cp2, "partition value of CP^2");
  out.theta1 = phase_angle(s2s2 / std::pow(cp2, 8), "partition value of S^2 x S^2");
  return out;
}

ThetaAngles class_c_theta(const SuperMTC& C, const std::vector<Rational>& charges) {
  for (const auto& q : charges)
    if (!(q == Rational(0, 1) || q == Rational(1, 2)))
      throw ShapeError(cat("SO(3) charge ", q.str(), " is not 0 or 1/2"));
  const cplx cp2 = partition_cp2(C, charges);
  ThetaAngles out;
  out.theta2 = phase_angle(cp2, "partition value of CP^2");
  out.theta1 = phase_angle(1.0 / std::pow(cp2, 4), "fourth power of the CP^2 value");
  return out;
}

HallConductance hall_conductance(const SuperMTC& C, const std::vector<Rational>& charges,
                                 const std::string& lie_sector) {
  HallConductance out;
  if (lie_sector == "U(1)") {
    const ThetaAngles t = class_a_theta(C, charges);
    out.sigma_h = snap_sixteenth((8.0 * t.theta2 + t.theta1) / (2.0 * kPi), "sigma_H").mod(1);
    out.kappa = snap_sixteenth(t.theta1 / (2.0 * kPi), "kappa").mod(1);
    out.modulus = Rational(1);
  } else if (lie_sector == "SO(3)") {
    const ThetaAngles t = class_c_theta(C, charges);
    out.sigma_h = snap_sixteenth((4.0 * t.theta2 + t.theta1) / kPi, "sigma_H").mod(2);
    out.kappa = snap_sixteenth(t.theta1 / kPi, "kappa").mod(2);
    out.modulus = Rational(2);
  } else {
    throw ShapeError("Hall response needs a U(1) or SO(3) charge sector");
  }
  return out;
}

HallConductance hall_conductance(const SuperMTC& C, const FermionicAction& A) {
  if (!A.has_charges) throw ShapeError("Hall response needs an action carrying charges");
  return hall_conductance(C, A.charges, A.group.lie_sector);
}

namespace {

std::string infer_symmetry_class(const FermionicAction& A) {
  const SymmetryGroup& G = A.group;
  const bool z2_antiunitary = G.size() == 2 && G.s == std::vector<int>{0, 1};
  if (G.size() == 4 && G.s == std::vector<int>{0, 1, 0, 1} && omega_class_trivial(G))
    return "epin";
  if (!A.has_charges) {
    if (z2_antiunitary && !omega_class_trivial(G)) return "pin+";
    throw ShapeError("cannot infer a symmetry class: pass one explicitly");
  }
  if (G.lie_sector == "U(1)") {
    if (G.size() == 1) return "classA";
    if (z2_antiunitary) return omega_class_trivial(G) ? "AI" : "AII";
  }
  if (G.lie_sector == "SO(3)") {
    if (G.size() == 1) return "classC";
    if (z2_antiunitary && !omega_class_trivial(G)) return "CI";
  }
  throw ShapeError("cannot infer a symmetry class: pass one explicitly");
}

}  // namespace

TenfoldReport tenfold_report(const SuperMTC& C, const FermionicAction& A,
                             const std::string& symmetry) {
  TenfoldReport rep;
  rep.symmetry_class = symmetry.empty() ? infer_symmetry_class(A) : symmetry;
  const std::string& cls = rep.symmetry_class;

  if (cls == "pin+") {
    rep.classification = "Z16_pinplus";
    rep.indicators.push_back(indicator_pin_plus(C, A));
  } else if (cls == "epin") {
    rep.classification = "Z4_epin";
    rep.indicators.push_back(indicator_epin(C, A));
  } else if (cls == "classA") {
    require_charges(A, "U(1)", "class A");
    rep.classification = "composite";
    const ThetaAngles t = class_a_theta(C, A.charges);
    rep.indicators.push_back(graded("Theta1", std::polar(1.0, t.theta1), "composite", 0));
    rep.indicators.push_back(graded("Theta2", std::polar(1.0, t.theta2), "composite", 0));
    rep.hall = hall_conductance(C, A.charges, "U(1)");
  } else if (cls == "classC") {
    require_charges(A, "SO(3)", "class C");
    rep.classification = "composite";
    const ThetaAngles t = class_c_theta(C, A.charges);
    rep.indicators.push_back(graded("Theta1", std::polar(1.0, t.theta1), "composite", 0));
    rep.indicators.push_back(graded("Theta2", std::polar(1.0, t.theta2), "composite", 0));
    rep.hall = hall_conductance(C, A.charges, "SO(3)");
  } else if (cls == "AI") {
    require_charges(A, "U(1)", "class AI");
    rep.classification = "Z2";
    rep.indicators.push_back(graded("I", partition_cp2(C, A.charges), "Z2", 2));
  } else if (cls == "AII") {
    require_charges(A, "U(1)", "class AII");
    rep.classification = "Z2cubed";
    const IndicatorResult pin = indicator_pin_plus(C, A);
    rep.indicators.push_back(graded("I1", pin.value, "Z2cubed", 2, pin.shadows));
    rep.indicators.push_back(graded("I2", partition_cp2(C, A.charges), "Z2cubed", 2));
    rep.indicators.push_back(graded("I3", partition_s2s2(C, A.charges), "Z2cubed", 2));
  } else if (cls == "AIII") {
    require_charges(A, "U(1)", "class AIII");
    rep.classification = "Z8xZ2_pinc";
    const IndicatorResult pin = indicator_pin_plus(C, A);
    rep.indicators.push_back(graded("I1", pin.value, "Z8xZ2_pinc", 8, pin.shadows));
    rep.indicators.push_back(graded("I2", partition_cp2(C, A.charges), "Z8xZ2_pinc", 2));
  } else if (cls == "CI") {
    require_charges(A, "SO(3)", "class CI");
    rep.classification = "Z4xZ2";
    const IndicatorResult pin = indicator_pin_plus(C, A);
    rep.indicators.push_back(graded("I1", pin.value, "Z4xZ2", 4, pin.shadows));
    rep.indicators.push_back(graded("I2", partition_cp2(C, A.charges), "Z4xZ2", 2));
  } else if (cls == "CII") {
    require_charges(A, "SO(3)", "class CII");
    rep.classification = "Z2cubed";
    const IndicatorResult pin = indicator_pin_plus(C, A);
    rep.indicators.push_back(graded("I1", pin.value, "Z2cubed", 2, pin.shadows));
    rep.indicators.push_back(graded("I2", partition_cp2(C, A.charges), "Z2cubed", 2));
    rep.indicators.push_back(graded("Itilde", partition_s4(C), "Z2cubed", 2));
  } else {
    throw ShapeError(cat("unknown symmetry class '", cls, "'"));
  }
  rep.gapless = gaplessness_check(rep);
  return rep;
}

std::vector<std::string> gaplessness_check(const TenfoldReport& report) {
  std::vector<std::string> notes;
  for (const auto& ind : report.indicators) {
    if (report.symmetry_class == "CI" && ind.name == "I1" && ind.nu && (*ind.nu % 2) == 1)
      notes.push_back("I1 = +-i admits no gapped realization");
    if (report.symmetry_class == "CII" && ind.name == "Itilde" && ind.nu && *ind.nu == 1)
      notes.push_back("Itilde = -1 admits no gapped realization");
  }
  return notes;
}

std::vector<std::vector<Rational>> so3_charge_tables(const SuperMTC& C, int limit) {
  if (!C.has_fermion()) throw ShapeError("SO(3) charge tables need a fermion");
  const int n = C.size();
  std::vector<std::vector<Rational>> out;

  // Doubled charges 2q in {0, 1}; -1 marks unassigned. Propagate additivity
  // across fusion channels to a fixpoint, then branch on the first free anyon.
  auto search = [&](auto&& self, std::vector<int> q) -> void {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a) {
        if (q[a] < 0) continue;
        for (int b = 0; b < n; ++b) {
          if (q[b] < 0) continue;
          for (int c : C.fusion_outcomes(a, b)) {
            const int v = (q[a] + q[b]) % 2;
            if (q[c] < 0) {
              q[c] = v;
              changed = true;
            } else if (q[c] != v) {
              return;
            }
          }
        }
      }
    }
    int free_anyon = -1;
    for (int a = 0; a < n && free_anyon < 0; ++a)
      if (q[a] < 0) free_anyon = a;
    if (free_anyon < 0) {
      std::vector<Rational> table(n);
      for (int a = 0; a < n; ++a) table[a] = Rational(q[a], 2);
      out.push_back(std::move(table));
      if (static_cast<int>(out.size()) > limit)
        throw ShapeError(cat("more than ", limit, " SO(3) charge tables"));
      return;
    }
    for (int v = 0; v <= 1; ++v) {
      std::vector<int> next = q;
      next[free_anyon] = v;
      self(self, std::move(next));
    }
  };

  std::vector<int> seed(n, -1);
  seed[C.unit()] = 0;
  seed[C.fermion] = 1;
  search(search, std::move(seed));
  return out;
}

}  // namespace smtc
