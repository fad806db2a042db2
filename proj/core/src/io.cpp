#include "smtc/io.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace smtc {

namespace {

using json = nlohmann::ordered_json;

constexpr double kExportTolerance = 1e-12;

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("input is not valid JSON");
  return j;
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(cat("missing field '", key, "'"));
  return *it;
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw SchemaError(cat(what, " must be a string"));
  return j.get<std::string>();
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(cat(what, " must be an integer"));
  return j.get<int>();
}

cplx as_complex(const json& j, const char* what) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cplx(j[0].get<double>(), j[1].get<double>());
  throw SchemaError(cat(what, " must be a number or an [re, im] pair"));
}

json complex_json(cplx v) { return json::array({v.real(), v.imag()}); }

int mult_index(const json& item, const char* key) {
  auto it = item.find(key);
  if (it == item.end()) return 0;
  int v = as_int(*it, key);
  if (v < 0 || v >= kMaxMultiplicity)
    throw SchemaError(cat("multiplicity index '", key, "' out of range"));
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(cat("cannot open '", path, "'"));
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError(cat("cannot write '", path, "'"));
  out << text;
}

}  // namespace

CategoryRecord parse_category(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) throw SchemaError("category file must hold a JSON object");

  CategoryRecord record;
  SuperMTC& C = record.category;
  C.name = as_string(field(j, "name"), "name");

  const json& anyons = field(j, "anyons");
  if (!anyons.is_array() || anyons.empty()) throw SchemaError("anyons must be a nonempty array");
  if (static_cast<int>(anyons.size()) > kMaxAnyons)
    throw SchemaError(cat("at most ", kMaxAnyons, " anyons are supported"));
  for (const auto& entry : anyons) C.anyon_names.push_back(as_string(entry, "anyon name"));
  for (int a = 0; a < C.size(); ++a)
    for (int b = a + 1; b < C.size(); ++b)
      if (C.anyon_names[a] == C.anyon_names[b])
        throw SchemaError(cat("duplicate anyon name '", C.anyon_names[a], "'"));

  if (j.contains("fermion")) C.fermion = C.label_of(as_string(j["fermion"], "fermion"));

  const int n = C.size();
  C.N.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  const json& fusion = field(j, "fusion");
  if (!fusion.is_array()) throw SchemaError("fusion must be an array");
  for (const auto& item : fusion) {
    int a = C.label_of(as_string(field(item, "a"), "fusion.a"));
    int b = C.label_of(as_string(field(item, "b"), "fusion.b"));
    int c = C.label_of(as_string(field(item, "c"), "fusion.c"));
    int mult = as_int(field(item, "n"), "fusion.n");
    if (mult < 0 || mult > kMaxMultiplicity)
      throw SchemaError(cat("fusion multiplicity out of range at (", C.anyon_names[a], ",",
                            C.anyon_names[b], ";", C.anyon_names[c], ")"));
    C.N[a][b][c] = mult;
  }

  // Positional identity defaults on every admissible block; listed entries are
  // applied on top, so files only carry the deviations.
  reset_default_symbols(C);

  if (j.contains("F")) {
    const json& fs = j["F"];
    if (!fs.is_array()) throw SchemaError("F must be an array");
    for (const auto& item : fs) {
      int a = C.label_of(as_string(field(item, "a"), "F.a"));
      int b = C.label_of(as_string(field(item, "b"), "F.b"));
      int c = C.label_of(as_string(field(item, "c"), "F.c"));
      int d = C.label_of(as_string(field(item, "d"), "F.d"));
      int e = C.label_of(as_string(field(item, "e"), "F.e"));
      int f = C.label_of(as_string(field(item, "f"), "F.f"));
      int alpha = mult_index(item, "alpha");
      int beta = mult_index(item, "beta");
      int mu = mult_index(item, "mu");
      int nu = mult_index(item, "nu");
      auto key = pack_f_key(a, b, c, d, e, f, alpha, beta, mu, nu);
      if (C.F.find(key) == C.F.end())
        throw SchemaError(cat("F entry on inadmissible tree (", C.anyon_names[a], ",",
                              C.anyon_names[b], ",", C.anyon_names[c], ";", C.anyon_names[d],
                              ") e=", C.anyon_names[e], " f=", C.anyon_names[f]));
      C.F[key] = as_complex(field(item, "value"), "F.value");
    }
  }

  if (j.contains("R")) {
    const json& rs = j["R"];
    if (!rs.is_array()) throw SchemaError("R must be an array");
    for (const auto& item : rs) {
      int a = C.label_of(as_string(field(item, "a"), "R.a"));
      int b = C.label_of(as_string(field(item, "b"), "R.b"));
      int c = C.label_of(as_string(field(item, "c"), "R.c"));
      int mu = mult_index(item, "mu");
      int nu = mult_index(item, "nu");
      auto key = pack_r_key(a, b, c, mu, nu);
      if (C.R.find(key) == C.R.end())
        throw SchemaError(cat("R entry on forbidden channel (", C.anyon_names[a], ",",
                              C.anyon_names[b], ";", C.anyon_names[c], ")"));
      C.R[key] = as_complex(field(item, "value"), "R.value");
    }
  }

  if (j.contains("embedding")) {
    const json& emb = j["embedding"];
    record.embedding_base = as_string(field(emb, "base"), "embedding.base");
    const json& map = field(emb, "map");
    if (!map.is_object()) throw SchemaError("embedding.map must be an object");
    for (const auto& [base_name, image] : map.items()) {
      std::string image_name = as_string(image, "embedding image");
      C.label_of(image_name);  // must exist here
      record.embedding_map.emplace_back(base_name, image_name);
    }
  }
  return record;
}

CategoryRecord load_category(const std::string& path) { return parse_category(read_file(path)); }

std::string category_text(const CategoryRecord& record) {
  const SuperMTC& C = record.category;
  const int n = C.size();
  json j;
  j["name"] = C.name;
  j["anyons"] = C.anyon_names;
  if (C.has_fermion()) j["fermion"] = C.anyon_names[C.fermion];

  json fusion = json::array();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (C.N[a][b][c] > 0)
          fusion.push_back({{"a", C.anyon_names[a]},
                            {"b", C.anyon_names[b]},
                            {"c", C.anyon_names[c]},
                            {"n", C.N[a][b][c]}});
  j["fusion"] = std::move(fusion);

  json fs = json::array();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          auto rows = C.f_rows(a, b, c, d);
          auto cols = C.f_cols(a, b, c, d);
          for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t jj = 0; jj < cols.size(); ++jj) {
              cplx value = C.f(a, b, c, d, rows[i].mid, cols[jj].mid, rows[i].first,
                               rows[i].second, cols[jj].first, cols[jj].second);
              cplx fallback = i == jj ? cplx(1.0) : cplx(0.0);
              if (std::abs(value - fallback) <= kExportTolerance) continue;
              json item = {{"a", C.anyon_names[a]}, {"b", C.anyon_names[b]},
                           {"c", C.anyon_names[c]}, {"d", C.anyon_names[d]},
                           {"e", C.anyon_names[rows[i].mid]}, {"f", C.anyon_names[cols[jj].mid]}};
              if (rows[i].first) item["alpha"] = rows[i].first;
              if (rows[i].second) item["beta"] = rows[i].second;
              if (cols[jj].first) item["mu"] = cols[jj].first;
              if (cols[jj].second) item["nu"] = cols[jj].second;
              item["value"] = complex_json(value);
              fs.push_back(std::move(item));
            }
        }
  if (!fs.empty()) j["F"] = std::move(fs);

  json rs = json::array();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (C.N[a][b][c] == 0) continue;
        for (int mu = 0; mu < C.N[a][b][c]; ++mu)
          for (int nu = 0; nu < C.N[a][b][c]; ++nu) {
            cplx value = C.r(a, b, c, mu, nu);
            cplx fallback = mu == nu ? cplx(1.0) : cplx(0.0);
            if (std::abs(value - fallback) <= kExportTolerance) continue;
            json item = {{"a", C.anyon_names[a]}, {"b", C.anyon_names[b]}, {"c", C.anyon_names[c]}};
            if (mu) item["mu"] = mu;
            if (nu) item["nu"] = nu;
            item["value"] = complex_json(value);
            rs.push_back(std::move(item));
          }
      }
  if (!rs.empty()) j["R"] = std::move(rs);

  if (!record.embedding_base.empty()) {
    json map = json::object();
    for (const auto& [base_name, image_name] : record.embedding_map) map[base_name] = image_name;
    j["embedding"] = {{"base", record.embedding_base}, {"map", std::move(map)}};
  }
  return j.dump(2) + "\n";
}

void save_category(const CategoryRecord& record, const std::string& path) {
  write_file(path, category_text(record));
}

namespace {

SymmetryGroup parse_group(const json& j) {
  if (!j.is_object()) throw SchemaError("group must be an object");
  std::string lie_sector;
  if (j.contains("lie_sector")) lie_sector = as_string(j["lie_sector"], "lie_sector");

  if (j.contains("order")) {
    int order = as_int(j["order"], "group.order");
    int s_gen = j.contains("s_generator") ? as_int(j["s_generator"], "s_generator") : 0;
    const json& om = field(j, "omega");
    std::string omega = as_string(om, "group.omega");
    if (omega != "trivial" && omega != "nontrivial")
      throw SchemaError("cyclic group omega must be 'trivial' or 'nontrivial'");
    if (s_gen != 0 && s_gen != 1) throw SchemaError("s_generator must be 0 or 1");
    if (order < 1) throw SchemaError("group order must be positive");
    return SymmetryGroup::cyclic(order, s_gen, omega == "nontrivial", lie_sector);
  }

  SymmetryGroup G;
  G.lie_sector = lie_sector;
  for (const auto& name : field(j, "elements")) G.element_names.push_back(as_string(name, "element"));
  const int m = G.size();
  if (m == 0) throw SchemaError("group must have at least one element");
  auto int_matrix = [&](const json& mj, const char* what) {
    if (!mj.is_array() || static_cast<int>(mj.size()) != m)
      throw SchemaError(cat(what, " must be an ", m, "x", m, " matrix"));
    std::vector<std::vector<int>> out(m, std::vector<int>(m, 0));
    for (int g = 0; g < m; ++g) {
      if (!mj[g].is_array() || static_cast<int>(mj[g].size()) != m)
        throw SchemaError(cat(what, " must be an ", m, "x", m, " matrix"));
      for (int h = 0; h < m; ++h) out[g][h] = as_int(mj[g][h], what);
    }
    return out;
  };
  G.table = int_matrix(field(j, "table"), "group.table");
  const json& sj = field(j, "s");
  if (!sj.is_array() || static_cast<int>(sj.size()) != m)
    throw SchemaError("group.s must list one value per element");
  for (const auto& v : sj) G.s.push_back(as_int(v, "group.s"));
  const json& om = field(j, "omega");
  if (om.is_string() && as_string(om, "omega") == "trivial")
    G.omega.assign(m, std::vector<int>(m, 0));
  else
    G.omega = int_matrix(om, "group.omega");
  return G;
}

}  // namespace

FermionicAction parse_action(const std::string& text, const SuperMTC& C) {
  json j = parse_text(text);
  if (!j.is_object()) throw SchemaError("action file must hold a JSON object");

  std::string category = as_string(field(j, "category"), "category");
  if (category != C.name)
    throw SchemaError(cat("action belongs to category '", category, "', not '", C.name, "'"));

  SymmetryGroup G = parse_group(field(j, "group"));
  FermionicAction A = FermionicAction::trivial(C, G, as_string(field(j, "name"), "name"));
  const int m = G.size();
  const int n = C.size();

  // rho entries name a subset of elements; the rest follow from the group
  // law. A contradiction between a listed and a derived table is an error.
  std::vector<char> known(m, 0);
  known[0] = 1;
  if (j.contains("rho")) {
    const json& rho = field(j, "rho");
    if (!rho.is_object()) throw SchemaError("rho must be an object");
    for (const auto& [element_name, table] : rho.items()) {
      int g;
      try {
        g = A.group.element(element_name);
      } catch (const ShapeError& e) {
        throw SchemaError(e.what());
      }
      if (!table.is_object()) throw SchemaError("rho tables must be objects");
      std::vector<AnyonLabel> perm(n);
      for (int a = 0; a < n; ++a) perm[a] = a;
      for (const auto& [anyon, image] : table.items())
        perm[C.label_of(anyon)] = C.label_of(as_string(image, "rho image"));
      if (known[g]) {
        if (perm != A.perm[g])
          throw SchemaError(cat("conflicting rho tables for element '", element_name, "'"));
      }
      A.perm[g] = std::move(perm);
      known[g] = 1;
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int g = 0; g < m; ++g) {
      if (!known[g]) continue;
      for (int h = 0; h < m; ++h) {
        if (!known[h]) continue;
        int gh = G.mul(g, h);
        std::vector<AnyonLabel> composed(n);
        for (int a = 0; a < n; ++a) composed[a] = A.perm[g][A.perm[h][a]];
        if (!known[gh]) {
          A.perm[gh] = std::move(composed);
          known[gh] = 1;
          changed = true;
        } else if (composed != A.perm[gh]) {
          throw SchemaError(cat("rho tables break the group law at ", G.element_names[gh]));
        }
      }
    }
  }
  for (int g = 0; g < m; ++g)
    if (!known[g])
      throw SchemaError(cat("rho is underdetermined: no table reaches ", G.element_names[g]));

  if (j.contains("U")) {
    const json& us = j["U"];
    if (!us.is_array()) throw SchemaError("U must be an array");
    for (const auto& item : us) {
      int g;
      try {
        g = A.group.element(as_string(field(item, "g"), "U.g"));
      } catch (const ShapeError& e) {
        throw SchemaError(e.what());
      }
      int a = C.label_of(as_string(field(item, "a"), "U.a"));
      int b = C.label_of(as_string(field(item, "b"), "U.b"));
      int c = C.label_of(as_string(field(item, "c"), "U.c"));
      int mu = mult_index(item, "mu");
      int nu = mult_index(item, "nu");
      if (C.N[a][b][c] == 0 || mu >= C.N[a][b][c] || nu >= C.N[a][b][c])
        throw SchemaError(cat("U entry on forbidden channel (", C.anyon_names[a], ",",
                              C.anyon_names[b], ";", C.anyon_names[c], ")"));
      A.set_u(g, a, b, c, mu, nu, as_complex(field(item, "value"), "U.value"));
    }
  }

  if (j.contains("eta")) {
    const json& es = j["eta"];
    if (!es.is_array()) throw SchemaError("eta must be an array");
    for (const auto& item : es) {
      int g, h;
      try {
        g = A.group.element(as_string(field(item, "g"), "eta.g"));
        h = A.group.element(as_string(field(item, "h"), "eta.h"));
      } catch (const ShapeError& e) {
        throw SchemaError(e.what());
      }
      int a = C.label_of(as_string(field(item, "a"), "eta.a"));
      A.set_eta(g, h, a, as_complex(field(item, "value"), "eta.value"));
    }
  }

  if (j.contains("charges")) {
    const json& qs = j["charges"];
    if (!qs.is_object()) throw SchemaError("charges must be an object");
    A.charges.assign(n, Rational(0));
    std::vector<char> seen(n, 0);
    for (const auto& [anyon, value] : qs.items()) {
      int a = C.label_of(anyon);
      A.charges[a] = Rational::parse(as_string(value, "charge"));
      seen[a] = 1;
    }
    for (int a = 0; a < n; ++a)
      if (!seen[a]) throw SchemaError(cat("charge table misses anyon '", C.anyon_names[a], "'"));
    A.has_charges = true;
  }

  if (j.contains("partial")) {
    if (!j["partial"].is_boolean()) throw SchemaError("partial must be a boolean");
    A.partial = j["partial"].get<bool>();
  }
  return A;
}

FermionicAction load_action(const std::string& path, const SuperMTC& C) {
  return parse_action(read_file(path), C);
}

std::string action_text(const FermionicAction& A, const SuperMTC& C) {
  const int m = A.group.size();
  const int n = C.size();
  json j;
  j["name"] = A.name;
  j["category"] = C.name;

  json group;
  group["elements"] = A.group.element_names;
  group["table"] = A.group.table;
  group["s"] = A.group.s;
  bool omega_trivial = true;
  for (const auto& row : A.group.omega)
    for (int v : row)
      if (v) omega_trivial = false;
  if (omega_trivial)
    group["omega"] = "trivial";
  else
    group["omega"] = A.group.omega;
  if (!A.group.lie_sector.empty()) group["lie_sector"] = A.group.lie_sector;
  j["group"] = std::move(group);

  json rho = json::object();
  for (int g = 1; g < m; ++g) {
    json table = json::object();
    for (int a = 0; a < n; ++a)
      if (A.perm[g][a] != a) table[C.anyon_names[a]] = C.anyon_names[A.perm[g][a]];
    if (!table.empty()) rho[A.group.element_names[g]] = std::move(table);
  }
  if (!rho.empty()) j["rho"] = std::move(rho);

  json us = json::array();
  for (int g = 0; g < m; ++g)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (C.N[a][b][c] == 0) continue;
          for (int mu = 0; mu < C.N[a][b][c]; ++mu)
            for (int nu = 0; nu < C.N[a][b][c]; ++nu) {
              cplx value = A.u(g, a, b, c, mu, nu);
              cplx fallback = mu == nu ? cplx(1.0) : cplx(0.0);
              if (std::abs(value - fallback) <= kExportTolerance) continue;
              json item = {{"g", A.group.element_names[g]}, {"a", C.anyon_names[a]},
                           {"b", C.anyon_names[b]}, {"c", C.anyon_names[c]}};
              if (mu) item["mu"] = mu;
              if (nu) item["nu"] = nu;
              item["value"] = complex_json(value);
              us.push_back(std::move(item));
            }
        }
  if (!us.empty()) j["U"] = std::move(us);

  json es = json::array();
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      for (int a = 0; a < n; ++a) {
        cplx value = A.eta_of(g, h, a);
        if (std::abs(value - cplx(1.0)) <= kExportTolerance) continue;
        es.push_back({{"g", A.group.element_names[g]},
                      {"h", A.group.element_names[h]},
                      {"a", C.anyon_names[a]},
                      {"value", complex_json(value)}});
      }
  if (!es.empty()) j["eta"] = std::move(es);

  if (A.has_charges) {
    json qs = json::object();
    for (int a = 0; a < n; ++a) qs[C.anyon_names[a]] = A.charges[a].str();
    j["charges"] = std::move(qs);
  }
  if (A.partial) j["partial"] = true;
  return j.dump(2) + "\n";
}

void save_action(const FermionicAction& A, const SuperMTC& C, const std::string& path) {
  write_file(path, action_text(A, C));
}

}  // namespace smtc
