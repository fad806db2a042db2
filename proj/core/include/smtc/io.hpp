#pragma once

#include <string>
#include <utility>
#include <vector>

#include "smtc/category.hpp"
#include "smtc/symmetry.hpp"

namespace smtc {

// A category file may record that the category extends a smaller one; the map
// sends anyon names of the base category to anyon names of this one.
struct CategoryRecord {
  SuperMTC category;
  std::string embedding_base;
  std::vector<std::pair<std::string, std::string>> embedding_map;
};

// JSON layout (categories):
//   name     string
//   anyons   array of names; index order defines the labels, entry 0 is the unit
//   fermion  name of the transparent fermion (optional for plain MTCs)
//   fusion   array of {a,b,c,n}; unlisted triples have n = 0
//   F        array of {a,b,c,d,e,f,value[,alpha,beta,mu,nu]}
//   R        array of {a,b,c,value[,mu,nu]}
//   embedding optional {base, map:{base anyon -> anyon}}
// Unlisted F/R entries default to the positional identity matrix on each
// admissible block, so pointed categories with trivial symbols need no
// explicit entries. Complex values are [re, im] (a bare number is accepted on
// input). Parsing problems raise SchemaError.
CategoryRecord parse_category(const std::string& text);
CategoryRecord load_category(const std::string& path);
std::string category_text(const CategoryRecord& record);
void save_category(const CategoryRecord& record, const std::string& path);

// JSON layout (actions):
//   name      string
//   category  name of the category the action belongs to (checked against C)
//   group     {order, s_generator, omega:"trivial"|"nontrivial[, lie_sector]"}
//             for a cyclic group, or explicit
//             {elements, table, s, omega[, lie_sector]}
//   rho       {element: {anyon: image, ...}, ...}; unlisted anyons are fixed
//             and missing elements are closed under the group law
//   U         array of {g,a,b,c,value[,mu,nu]}, defaulting to the identity
//   eta       array of {g,h,a,value}, defaulting to 1
//   charges   optional {anyon: "p/q", ...}, required to cover every anyon
//   partial   optional bool
FermionicAction parse_action(const std::string& text, const SuperMTC& C);
FermionicAction load_action(const std::string& path, const SuperMTC& C);
std::string action_text(const FermionicAction& A, const SuperMTC& C);
void save_action(const FermionicAction& A, const SuperMTC& C, const std::string& path);

}  // namespace smtc
