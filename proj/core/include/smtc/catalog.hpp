#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smtc/category.hpp"
#include "smtc/io.hpp"
#include "smtc/symmetry.hpp"

namespace smtc {

// U(1)_k tower for odd k >= 3: 2k anyons over Z/2k with all F = 1,
// R^{ab} = e^{i pi a b / k}, transparent fermion at label k.
CategoryRecord build_u1k(int k);
// The bundled Z/4 time-reversal action a -> 3a (mod 10), U = eta = 1.
// Only k = 5 carries a built-in permutation; other k need user data.
FermionicAction build_u1k_action(const SuperMTC& C);

// Semion-fermion theory {1, s, psi, st}: product of a semion and a free
// fermion. Bundles the antiunitary Z/2 action exchanging s and st together
// with its Z/4 pullback.
struct SemionFermion {
  CategoryRecord record;
  FermionicAction pin_plus;
  FermionicAction epin;  // pullback of pin_plus along Z/4 -> Z/2
};
SemionFermion build_semion_fermion();

// SO(3)_3 = integer-spin subcategory of SU(2)_6 on labels {0,2,4,6},
// renamed {1, s, st, psi}. Bundles the s <-> st antiunitary Z/2 action and
// its Z/4 pullback.
struct So33 {
  CategoryRecord record;
  FermionicAction pin_plus;
  FermionicAction epin;
};
So33 build_so33();

// SU(2)_6 with the q-deformed recoupling F-symbols at q = e^{i pi / 4}.
CategoryRecord build_su26();

// Toric code {1, e, m, f}: pointed modular category over Z/2 x Z/2 with
// trivial F; used as a small zesting fixture.
CategoryRecord build_toric_code();

// Modular extensions used by the zesting and cascade tools. Each fixture is a
// plain MTC containing one of the super-MTCs above, with the embedding
// recorded in the CategoryRecord and, where the text defines one, a bundled
// fermionic action.
struct ExtensionFixture {
  CategoryRecord record;
  std::optional<FermionicAction> action;
};
std::vector<ExtensionFixture> build_extension_fixtures();

// Z/4 pullback of an antiunitary Z/2 action along Z/4 -> Z/2: the generator
// and its cube act like the Z/2 generator, the square acts trivially, and
// eta_a(g,h) is the Z/2 value when both g and h project to the generator.
// The pulled-back extension class omega is trivial.
FermionicAction pullback_z4(const SuperMTC& C, const FermionicAction& z2,
                            std::string name);

// Built-in registry. Categories: trivial, u1_5, semion_fermion, so3_3,
// u1_20, su2_6, u1_20_zested, u1_2_u1_m4, toric_code.
std::vector<std::string> catalog_names();
CategoryRecord catalog_category(const std::string& name);

// Bundled actions, named <category>_<symmetry-kind>.
std::vector<std::string> catalog_action_names();
std::vector<std::string> catalog_actions_for(const std::string& category);
// C must be the catalog category the action belongs to.
FermionicAction catalog_action(const std::string& name, const SuperMTC& C);

}  // namespace smtc
