#include "smtc/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace smtc {

namespace {

constexpr double kPi = std::numbers::pi;

cplx pi_phase(double x) { return std::polar(1.0, kPi * x); }

// Pointed skeleton: every product is a single anyon, symbols start out 1.
template <typename Mul>
SuperMTC pointed_category(std::string name, std::vector<std::string> anyon_names, int fermion,
                          Mul mul) {
  SuperMTC C;
  C.name = std::move(name);
  C.anyon_names = std::move(anyon_names);
  const int n = C.size();
  C.N.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) C.N[a][b][mul(a, b)] = 1;
  C.fermion = fermion;
  reset_default_symbols(C);
  return C;
}

int product_of(const SuperMTC& C, int a, int b) {
  auto out = C.fusion_outcomes(a, b);
  if (out.size() != 1)
    throw ShapeError(cat("fusion of ", C.anyon_name(a), " and ", C.anyon_name(b),
                         " is not single-channel"));
  return out[0];
}

void set_pointed_r(SuperMTC& C, int a, int b, cplx value) {
  C.R[pack_r_key(a, b, product_of(C, a, b), 0, 0)] = value;
}

void set_pointed_f(SuperMTC& C, int a, int b, int c, cplx value) {
  const int e = product_of(C, a, b);
  const int f = product_of(C, b, c);
  const int d = product_of(C, e, c);
  C.F[pack_f_key(a, b, c, d, e, f, 0, 0, 0, 0)] = value;
}

SuperMTC trivial_category() {
  SuperMTC C =
      pointed_category("trivial", {"1", "psi"}, 1, [](int a, int b) { return a ^ b; });
  set_pointed_r(C, 1, 1, cplx(-1.0));
  return C;
}

// ---------------------------------------------------------------------------
// su2_6 recoupling data at q = exp(i pi / 8), labels are twice the spin.

double qint(int m) { return std::sin(m * kPi / 8.0) / std::sin(kPi / 8.0); }

double qfact(int m) {
  double out = 1.0;
  for (int j = 2; j <= m; ++j) out *= qint(j);
  return out;
}

bool spin_admissible(int a, int b, int c) {
  return (a + b + c) % 2 == 0 && std::abs(a - b) <= c && c <= std::min(a + b, 12 - a - b);
}

double spin_triangle(int a, int b, int c) {
  return std::sqrt(qfact((a + b - c) / 2) * qfact((a - b + c) / 2) * qfact((-a + b + c) / 2) /
                   qfact((a + b + c + 2) / 2));
}

double spin_f(int a, int b, int c, int d, int e, int f) {
  const int lo = std::max({a + b + e, c + d + e, b + c + f, a + d + f});
  const int hi = std::min({a + b + c + d, a + c + e + f, b + d + e + f});
  double sum = 0.0;
  for (int n = lo; n <= hi; n += 2) {
    double term = (n / 2) % 2 ? -1.0 : 1.0;
    term *= qfact((n + 2) / 2);
    term /= qfact((a + b + c + d - n) / 2) * qfact((a + c + e + f - n) / 2) *
            qfact((b + d + e + f - n) / 2) * qfact((n - a - b - e) / 2) *
            qfact((n - c - d - e) / 2) * qfact((n - b - c - f) / 2) *
            qfact((n - a - d - f) / 2);
    sum += term;
  }
  double pre = ((a + b + c + d) / 2) % 2 ? -1.0 : 1.0;
  pre *= spin_triangle(a, b, e) * spin_triangle(c, d, e) * spin_triangle(b, c, f) *
         spin_triangle(a, d, f) * std::sqrt(qint(e + 1) * qint(f + 1));
  return pre * sum;
}

SuperMTC su26_category() {
  SuperMTC C;
  C.name = "su2_6";
  for (int a = 0; a <= 6; ++a) C.anyon_names.push_back(std::to_string(a));
  C.N.assign(7, std::vector<std::vector<int>>(7, std::vector<int>(7, 0)));
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c)
        if (spin_admissible(a, b, c)) C.N[a][b][c] = 1;
  C.fermion = 6;
  reset_default_symbols(C);

  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c)
        for (int d = 0; d <= 6; ++d) {
          const auto rows = C.f_rows(a, b, c, d);
          const auto cols = C.f_cols(a, b, c, d);
          for (const auto& row : rows)
            for (const auto& col : cols)
              C.F[pack_f_key(a, b, c, d, row.mid, col.mid, 0, 0, 0, 0)] =
                  cplx(spin_f(a, b, c, d, row.mid, col.mid));
        }

  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c) {
        if (!C.N[a][b][c]) continue;
        const double sign = ((a + b - c) / 2) % 2 ? -1.0 : 1.0;
        C.R[pack_r_key(a, b, c, 0, 0)] =
            sign * pi_phase((c * (c + 2) - a * (a + 2) - b * (b + 2)) / 32.0);
      }
  return C;
}

// Full subcategory on `keep`, with labels renamed. The subset must be closed
// under fusion.
SuperMTC restrict_category(const SuperMTC& big, const std::vector<int>& keep,
                           std::vector<std::string> anyon_names, std::string name, int fermion) {
  const int n = static_cast<int>(keep.size());
  std::vector<int> pos(big.size(), -1);
  for (int i = 0; i < n; ++i) pos[keep[i]] = i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < big.size(); ++c)
        if (big.N[keep[i]][keep[j]][c] && pos[c] < 0)
          throw ShapeError(cat("restriction of ", big.name, " is not closed under fusion"));

  SuperMTC C;
  C.name = std::move(name);
  C.anyon_names = std::move(anyon_names);
  C.N.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) C.N[i][j][k] = big.N[keep[i]][keep[j]][keep[k]];
  C.fermion = fermion;
  reset_default_symbols(C);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const auto rows = C.f_rows(i, j, k, l);
          const auto cols = C.f_cols(i, j, k, l);
          for (const auto& row : rows)
            for (const auto& col : cols)
              C.F[pack_f_key(i, j, k, l, row.mid, col.mid, row.first, row.second, col.first,
                             col.second)] =
                  big.f(keep[i], keep[j], keep[k], keep[l], keep[row.mid], keep[col.mid],
                        row.first, row.second, col.first, col.second);
        }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!C.N[i][j][k]) continue;
        for (int mu = 0; mu < C.N[i][j][k]; ++mu)
          for (int nu = 0; nu < C.N[i][j][k]; ++nu)
            C.R[pack_r_key(i, j, k, mu, nu)] = big.r(keep[i], keep[j], keep[k], mu, nu);
      }
  return C;
}

SuperMTC so33_category() {
  return restrict_category(su26_category(), {0, 2, 4, 6}, {"1", "s", "st", "psi"}, "so3_3", 3);
}

// ---------------------------------------------------------------------------
// Pointed companions.

SuperMTC semion_fermion_category() {
  // Z/2 x Z/2 written as 2-bit labels: 1=00, s=01, psi=10, st=11.
  SuperMTC C = pointed_category("semion_fermion", {"1", "s", "psi", "st"}, 2,
                                [](int a, int b) { return a ^ b; });
  for (int a : {1, 3})
    for (int b : {1, 3})
      for (int c : {1, 3}) set_pointed_f(C, a, b, c, cplx(-1.0));
  const cplx I(0.0, 1.0);
  const cplx r[4][4] = {{1, 1, 1, 1}, {1, I, 1, I}, {1, 1, -1, -1}, {1, I, -1, -I}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) set_pointed_r(C, a, b, r[a][b]);
  return C;
}

SuperMTC u1_20_category() {
  std::vector<std::string> names;
  for (int a = 0; a < 20; ++a) names.push_back(std::to_string(a));
  SuperMTC C = pointed_category("u1_20", std::move(names), 10,
                                [](int a, int b) { return (a + b) % 20; });
  for (int a = 1; a < 20; a += 2)
    for (int b = 0; b < 20; ++b)
      for (int c = 0; c < 20; ++c)
        if (b + c >= 20) set_pointed_f(C, a, b, c, cplx(-1.0));
  for (int a = 0; a < 20; ++a)
    for (int b = 0; b < 20; ++b) set_pointed_r(C, a, b, pi_phase(a * b / 20.0));
  return C;
}

SuperMTC u1_20_zested_category() {
  // Z/2 x Z/10 with index 10*a + b.
  std::vector<std::string> names;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 10; ++b) names.push_back(cat(a, "_", b));
  SuperMTC C = pointed_category("u1_20_zested", std::move(names), 15, [](int x, int y) {
    return ((x / 10 + y / 10) % 2) * 10 + (x % 10 + y % 10) % 10;
  });
  for (int x = 0; x < 20; ++x)
    for (int y = 0; y < 20; ++y) {
      const int a1 = x / 10, b1 = x % 10, a2 = y / 10, b2 = y % 10;
      set_pointed_r(C, x, y, pi_phase(a1 * a2 + a1 * b2 + b1 * b2 / 5.0));
    }
  return C;
}

SuperMTC u1_2_u1_m4_category() {
  // Z/2 x Z/4 with index 4*a + b.
  std::vector<std::string> names;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 4; ++b) names.push_back(cat(a, "_", b));
  SuperMTC C = pointed_category("u1_2_u1_m4", std::move(names), 2, [](int x, int y) {
    return ((x / 4 + y / 4) % 2) * 4 + (x % 4 + y % 4) % 4;
  });
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      for (int z = 0; z < 8; ++z) {
        const int a1 = x / 4, b1 = x % 4;
        const int a2 = y / 4, b2 = y % 4, a3 = z / 4, b3 = z % 4;
        const int sign = a1 * (a2 + a3 >= 2 ? 1 : 0) + b1 * (b2 + b3 >= 4 ? 1 : 0);
        if (sign % 2) set_pointed_f(C, x, y, z, cplx(-1.0));
      }
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      set_pointed_r(C, x, y, pi_phase((x / 4) * (y / 4) / 2.0 - (x % 4) * (y % 4) / 4.0));
  return C;
}

SuperMTC toric_code_category() {
  // Z/2 x Z/2 written as 2-bit labels: 1=00, e=01, m=10, f=11. Plain modular
  // theory (no distinguished fermion), used as a zesting fixture.
  SuperMTC C =
      pointed_category("toric_code", {"1", "e", "m", "f"}, -1, [](int a, int b) { return a ^ b; });
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if ((a & 1) && (b & 2)) set_pointed_r(C, a, b, cplx(-1.0));
  return C;
}

// ---------------------------------------------------------------------------
// Bundled actions.

FermionicAction make_trivial_pin_plus(const SuperMTC& C) {
  FermionicAction A =
      FermionicAction::trivial(C, SymmetryGroup::cyclic(2, 1, true), "trivial_pin_plus");
  A.set_eta(1, 1, C.label_of("psi"), cplx(-1.0));
  return A;
}

FermionicAction with_charges(FermionicAction A, std::vector<Rational> q) {
  A.charges = std::move(q);
  A.has_charges = true;
  return A;
}

FermionicAction make_trivial_epin(const SuperMTC& C) {
  return pullback_z4(C, make_trivial_pin_plus(C), "trivial_epin");
}

FermionicAction make_trivial_so3(const SuperMTC& C) {
  return with_charges(
      FermionicAction::trivial(C, SymmetryGroup::trivial("SO(3)"), "trivial_so3"),
      {Rational(0), Rational(1, 2)});
}

FermionicAction make_trivial_so3_t(const SuperMTC& C) {
  FermionicAction A =
      FermionicAction::trivial(C, SymmetryGroup::cyclic(2, 1, true, "SO(3)"), "trivial_so3_t");
  A.set_eta(1, 1, C.label_of("psi"), cplx(-1.0));
  return with_charges(std::move(A), {Rational(0), Rational(1, 2)});
}

FermionicAction make_trivial_u1_t(const SuperMTC& C) {
  FermionicAction A =
      FermionicAction::trivial(C, SymmetryGroup::cyclic(2, 1, true, "U(1)"), "trivial_u1_t");
  A.set_eta(1, 1, C.label_of("psi"), cplx(-1.0));
  return with_charges(std::move(A), {Rational(0), Rational(1, 2)});
}

FermionicAction make_sf_pin_plus(const SuperMTC& C) {
  const int s = C.label_of("s");
  const int psi = C.label_of("psi");
  const int st = C.label_of("st");
  FermionicAction A = FermionicAction::trivial(C, SymmetryGroup::cyclic(2, 1, true),
                                               "semion_fermion_pin_plus");
  A.perm[1][s] = st;
  A.perm[1][st] = s;
  for (int a : {psi, st})
    for (int b : {s, st}) A.set_u(1, a, b, product_of(C, a, b), 0, 0, cplx(-1.0));
  const cplx I(0.0, 1.0);
  A.set_eta(1, 1, s, -I);
  A.set_eta(1, 1, psi, cplx(-1.0));
  A.set_eta(1, 1, st, I);
  return A;
}

FermionicAction make_sf_epin(const SuperMTC& C) {
  return pullback_z4(C, make_sf_pin_plus(C), "semion_fermion_epin");
}

FermionicAction make_sf_class_a(const SuperMTC& C) {
  return with_charges(
      FermionicAction::trivial(C, SymmetryGroup::trivial("U(1)"), "semion_fermion_class_a"),
      {Rational(0), Rational(0), Rational(1, 2), Rational(1, 2)});
}

FermionicAction make_sf_class_a2(const SuperMTC& C) {
  return with_charges(
      FermionicAction::trivial(C, SymmetryGroup::trivial("U(1)"), "semion_fermion_class_a2"),
      {Rational(0), Rational(1, 2), Rational(1, 2), Rational(0)});
}

FermionicAction make_so33_pin_plus(const SuperMTC& C) {
  const int s = C.label_of("s");
  const int st = C.label_of("st");
  const int psi = C.label_of("psi");
  FermionicAction A =
      FermionicAction::trivial(C, SymmetryGroup::cyclic(2, 1, true), "so3_3_pin_plus");
  A.perm[1][s] = st;
  A.perm[1][st] = s;
  const cplx I(0.0, 1.0);
  const std::array<std::array<int, 3>, 5> plus = {
      {{s, st, psi}, {st, psi, s}, {psi, s, st}, {s, s, s}, {st, st, st}}};
  const std::array<std::array<int, 3>, 9> minus = {{{s, psi, st},
                                                    {psi, st, s},
                                                    {st, s, psi},
                                                    {s, s, st},
                                                    {s, st, s},
                                                    {st, s, s},
                                                    {st, st, s},
                                                    {st, s, st},
                                                    {s, st, st}}};
  for (const auto& v : plus) A.set_u(1, v[0], v[1], v[2], 0, 0, I);
  for (const auto& v : minus) A.set_u(1, v[0], v[1], v[2], 0, 0, -I);
  A.set_eta(1, 1, psi, cplx(-1.0));
  return A;
}

FermionicAction make_so33_epin(const SuperMTC& C) {
  return pullback_z4(C, make_so33_pin_plus(C), "so3_3_epin");
}

FermionicAction make_u1_20_zested_epin(const SuperMTC& C) {
  FermionicAction A = FermionicAction::trivial(C, SymmetryGroup::cyclic(4, 1, false),
                                               "u1_20_zested_epin");
  for (int x = 0; x < 20; ++x) A.perm[1][x] = (x / 10) * 10 + (3 * (x % 10)) % 10;
  for (int x = 0; x < 20; ++x) A.perm[2][x] = A.perm[1][A.perm[1][x]];
  for (int x = 0; x < 20; ++x) A.perm[3][x] = A.perm[1][A.perm[2][x]];
  return A;
}

// Exponent tables in units of pi/16; rows are the first fusion argument.
constexpr int kExtU[3][8][8] = {
    {{0, 0, 0, 0, 0, 0, 0, 0},
     {0, 0, 24, 24, 0, 8, 0, 8},
     {0, 24, 0, 8, 8, 24, 24, 8},
     {0, 8, 8, 0, 0, 8, 16, 24},
     {0, 16, 24, 0, 0, 0, 8, 16},
     {0, 24, 8, 24, 0, 0, 16, 24},
     {0, 0, 8, 0, 24, 16, 0, 16},
     {0, 24, 24, 8, 0, 8, 0, 0}},
    {{0, 0, 0, 0, 0, 0, 0, 0},
     {0, 0, 0, 16, 16, 16, 0, 16},
     {0, 16, 0, 16, 0, 0, 0, 0},
     {0, 16, 0, 0, 0, 0, 16, 0},
     {0, 16, 0, 0, 0, 16, 0, 0},
     {0, 16, 16, 0, 16, 0, 16, 0},
     {0, 16, 0, 0, 0, 0, 0, 16},
     {0, 16, 16, 0, 0, 0, 0, 0}},
    {{0, 0, 0, 0, 0, 0, 0, 0},
     {0, 0, 24, 8, 16, 8, 0, 8},
     {0, 8, 0, 24, 8, 24, 24, 8},
     {0, 24, 8, 0, 0, 24, 0, 8},
     {0, 16, 24, 16, 0, 0, 8, 0},
     {0, 24, 24, 8, 16, 0, 0, 24},
     {0, 0, 8, 16, 24, 0, 0, 16},
     {0, 24, 8, 24, 0, 8, 0, 0}}};

constexpr int kExtEta[3][3][8] = {
    {{0, 8, 16, 24, 0, 24, 0, 8}, {0, 0, 0, 16, 0, 16, 0, 0}, {0, 8, 16, 8, 0, 8, 0, 8}},
    {{0, 0, 0, 16, 0, 0, 0, 16}, {0, 0, 0, 0, 0, 16, 0, 16}, {0, 0, 0, 16, 0, 16, 0, 0}},
    {{0, 8, 16, 8, 0, 8, 0, 8}, {0, 0, 0, 16, 0, 0, 0, 16}, {0, 8, 16, 24, 0, 8, 0, 24}}};

FermionicAction make_u1_2_u1_m4_epin(const SuperMTC& C) {
  FermionicAction A =
      FermionicAction::trivial(C, SymmetryGroup::cyclic(4, 1, false), "u1_2_u1_m4_epin");
  // The torsion square is known; no eta solves the full cocycle condition on
  // top of these U tables, so the action ships with the cocycle check waived.
  A.partial = true;
  for (int x = 0; x < 8; ++x) {
    const int a = x / 4, b = x % 4;
    A.perm[1][x] = ((a + b) % 2) * 4 + (2 * a + b) % 4;
  }
  for (int x = 0; x < 8; ++x) A.perm[2][x] = A.perm[1][A.perm[1][x]];
  for (int x = 0; x < 8; ++x) A.perm[3][x] = A.perm[1][A.perm[2][x]];
  for (int g = 1; g <= 3; ++g)
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b)
        if (kExtU[g - 1][a][b])
          A.set_u(g, a, b, product_of(C, a, b), 0, 0, pi_phase(kExtU[g - 1][a][b] / 16.0));
  for (int g = 1; g <= 3; ++g)
    for (int h = 1; h <= 3; ++h)
      for (int a = 0; a < 8; ++a)
        if (kExtEta[g - 1][h - 1][a])
          A.set_eta(g, h, a, pi_phase(kExtEta[g - 1][h - 1][a] / 16.0));
  return A;
}

struct ActionEntry {
  const char* action;
  const char* category;
  FermionicAction (*make)(const SuperMTC&);
};

constexpr ActionEntry kActionEntries[] = {
    {"trivial_pin_plus", "trivial", make_trivial_pin_plus},
    {"trivial_epin", "trivial", make_trivial_epin},
    {"trivial_so3", "trivial", make_trivial_so3},
    {"trivial_so3_t", "trivial", make_trivial_so3_t},
    {"trivial_u1_t", "trivial", make_trivial_u1_t},
    {"u1_5_epin", "u1_5", build_u1k_action},
    {"semion_fermion_pin_plus", "semion_fermion", make_sf_pin_plus},
    {"semion_fermion_epin", "semion_fermion", make_sf_epin},
    {"semion_fermion_class_a", "semion_fermion", make_sf_class_a},
    {"semion_fermion_class_a2", "semion_fermion", make_sf_class_a2},
    {"so3_3_pin_plus", "so3_3", make_so33_pin_plus},
    {"so3_3_epin", "so3_3", make_so33_epin},
    {"u1_20_zested_epin", "u1_20_zested", make_u1_20_zested_epin},
    {"u1_2_u1_m4_epin", "u1_2_u1_m4", make_u1_2_u1_m4_epin},
};

}  // namespace

CategoryRecord build_u1k(int k) {
  if (k < 3 || k % 2 == 0 || 2 * k > kMaxAnyons)
    throw ShapeError("u1k expects an odd level between 3 and 31");
  const int n = 2 * k;
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) names.push_back(std::to_string(a));
  CategoryRecord record;
  record.category = pointed_category(cat("u1_", k), std::move(names), k,
                                     [n](int a, int b) { return (a + b) % n; });
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      set_pointed_r(record.category, a, b, pi_phase(static_cast<double>(a) * b / k));
  return record;
}

FermionicAction build_u1k_action(const SuperMTC& C) {
  if (C.size() != 10)
    throw ShapeError("the bundled torsion action is defined for u1_5 only");
  FermionicAction A =
      FermionicAction::trivial(C, SymmetryGroup::cyclic(4, 1, false), "u1_5_epin");
  for (int g = 1, pw = 3; g < 4; ++g, pw = pw * 3 % 10)
    for (int a = 0; a < 10; ++a) A.perm[g][a] = pw * a % 10;
  return A;
}

SemionFermion build_semion_fermion() {
  SemionFermion out;
  out.record.category = semion_fermion_category();
  out.pin_plus = make_sf_pin_plus(out.record.category);
  out.epin = make_sf_epin(out.record.category);
  return out;
}

So33 build_so33() {
  So33 out;
  out.record.category = so33_category();
  out.pin_plus = make_so33_pin_plus(out.record.category);
  out.epin = make_so33_epin(out.record.category);
  return out;
}

CategoryRecord build_su26() {
  CategoryRecord record;
  record.category = su26_category();
  record.embedding_base = "so3_3";
  record.embedding_map = {{"1", "0"}, {"s", "2"}, {"st", "4"}, {"psi", "6"}};
  return record;
}

CategoryRecord build_toric_code() {
  CategoryRecord record;
  record.category = toric_code_category();
  return record;
}

std::vector<ExtensionFixture> build_extension_fixtures() {
  std::vector<ExtensionFixture> out;

  {
    ExtensionFixture fx;
    fx.record.category = u1_20_category();
    fx.record.embedding_base = "u1_5";
    for (int a = 0; a < 10; ++a)
      fx.record.embedding_map.emplace_back(std::to_string(a), std::to_string(2 * a));
    out.push_back(std::move(fx));
  }
  {
    ExtensionFixture fx;
    fx.record.category = u1_20_zested_category();
    fx.record.embedding_base = "u1_5";
    for (int a = 0; a < 10; ++a)
      fx.record.embedding_map.emplace_back(std::to_string(a), cat(a % 2, "_", a));
    fx.action = make_u1_20_zested_epin(fx.record.category);
    out.push_back(std::move(fx));
  }
  {
    ExtensionFixture fx;
    fx.record.category = u1_2_u1_m4_category();
    fx.record.embedding_base = "semion_fermion";
    fx.record.embedding_map = {{"1", "0_0"}, {"s", "1_0"}, {"psi", "0_2"}, {"st", "1_2"}};
    fx.action = make_u1_2_u1_m4_epin(fx.record.category);
    out.push_back(std::move(fx));
  }
  {
    ExtensionFixture fx;
    fx.record = build_su26();
    out.push_back(std::move(fx));
  }
  return out;
}

FermionicAction pullback_z4(const SuperMTC& C, const FermionicAction& z2, std::string name) {
  if (z2.group.size() != 2 || z2.group.s != std::vector<int>{0, 1})
    throw ShapeError("pullback expects a Z/2 action with antiunitary generator");
  FermionicAction A =
      FermionicAction::trivial(C, SymmetryGroup::cyclic(4, 1, false), std::move(name));
  for (int a = 0; a < C.size(); ++a) {
    if (z2.perm[1][z2.perm[1][a]] != a)
      throw ShapeError("pullback expects an involutive permutation");
    A.perm[1][a] = z2.perm[1][a];
    A.perm[3][a] = z2.perm[1][a];
  }
  A.u_table[1] = z2.u_table[1];
  A.u_table[3] = z2.u_table[1];
  // eta pulls back through the quotient: nontrivial only when both arguments
  // land on the reflection.
  for (int g = 1; g < 4; g += 2)
    for (int h = 1; h < 4; h += 2) A.eta[g][h] = z2.eta[1][1];
  return A;
}

std::vector<std::string> catalog_names() {
  return {"trivial",      "u1_5",         "semion_fermion", "so3_3",      "u1_20",
          "u1_20_zested", "u1_2_u1_m4",   "su2_6",          "toric_code"};
}

CategoryRecord catalog_category(const std::string& name) {
  if (name == "trivial") {
    CategoryRecord record;
    record.category = trivial_category();
    return record;
  }
  if (name == "u1_5") return build_u1k(5);
  if (name == "semion_fermion") return build_semion_fermion().record;
  if (name == "so3_3") return build_so33().record;
  if (name == "su2_6") return build_su26();
  if (name == "toric_code") return build_toric_code();
  for (auto& fixture : build_extension_fixtures())
    if (fixture.record.category.name == name) return std::move(fixture.record);
  throw ShapeError(cat("unknown catalog category '", name, "'"));
}

std::vector<std::string> catalog_action_names() {
  std::vector<std::string> out;
  for (const auto& entry : kActionEntries) out.push_back(entry.action);
  return out;
}

std::vector<std::string> catalog_actions_for(const std::string& category) {
  std::vector<std::string> out;
  for (const auto& entry : kActionEntries)
    if (category == entry.category) out.push_back(entry.action);
  return out;
}

FermionicAction catalog_action(const std::string& name, const SuperMTC& C) {
  for (const auto& entry : kActionEntries) {
    if (name != entry.action) continue;
    if (C.name != entry.category)
      throw ShapeError(cat("action '", name, "' belongs to category '", entry.category,
                           "', not '", C.name, "'"));
    return entry.make(C);
  }
  throw ShapeError(cat("unknown catalog action '", name, "'"));
}

}  // namespace smtc
