#include "smtc/extension.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <utility>

#include "smtc/invariants.hpp"

namespace smtc {

namespace {

constexpr double kPi = std::numbers::pi;

bool close(cplx a, cplx b, double tol = 1e-7) { return std::abs(a - b) <= tol; }

cplx conj_if(bool anti, cplx z) { return anti ? std::conj(z) : z; }

cplx ipow(cplx z, int e) {
  cplx r(1.0, 0.0);
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

// Fusion group of a pointed category as a plain multiplication table.
struct PointedGroup {
  int n = 0;
  std::vector<std::vector<int>> mul;
};

PointedGroup pointed_group(const SuperMTC& C) {
  if (!is_pointed(C)) throw ShapeError(cat(C.name, " is not pointed"));
  PointedGroup G;
  G.n = C.size();
  G.mul.assign(G.n, std::vector<int>(G.n, 0));
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b) G.mul[a][b] = pointed_product(C, a, b);
  return G;
}

int element_order(const PointedGroup& G, int x) {
  int p = x, k = 1;
  while (p != 0) {
    p = G.mul[p][x];
    ++k;
    if (k > G.n + 1) throw ShapeError("fusion table is not a group");
  }
  return k;
}

int group_inverse(const PointedGroup& G, int x) {
  for (int y = 0; y < G.n; ++y)
    if (G.mul[x][y] == 0) return y;
  throw ShapeError("fusion table has no inverse");
}

std::vector<char> span_of(const PointedGroup& G, const std::vector<int>& gens) {
  std::vector<char> in(G.n, 0);
  in[0] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < G.n; ++x) {
      if (!in[x]) continue;
      for (int g : gens) {
        int y = G.mul[x][g];
        if (!in[y]) {
          in[y] = 1;
          grew = true;
        }
      }
    }
  }
  return in;
}

// Greedy cyclic decomposition of a finite abelian group: repeatedly adjoin a
// maximal-order element whose cyclic span meets the current span only at the
// unit.
std::vector<int> cyclic_decomposition(const PointedGroup& G) {
  std::vector<int> gens;
  std::vector<char> spanned = span_of(G, gens);
  while (true) {
    int covered = 0;
    for (char c : spanned) covered += c;
    if (covered == G.n) break;
    int best = -1, best_order = 0;
    for (int x = 1; x < G.n; ++x) {
      if (spanned[x]) continue;
      int ord = element_order(G, x);
      if (ord <= best_order) continue;
      bool clean = true;
      for (int p = x; p != 0; p = G.mul[p][x])
        if (spanned[p]) {
          clean = false;
          break;
        }
      if (clean) {
        best = x;
        best_order = ord;
      }
    }
    if (best < 0) throw ShapeError("fusion group admits no cyclic decomposition");
    gens.push_back(best);
    spanned = span_of(G, gens);
  }
  return gens;
}

// coords[x][i] = exponent of gens[i] in x. Throws when the generators do not
// present the group as a direct product.
std::vector<std::vector<int>> coordinates(const PointedGroup& G,
                                          const std::vector<int>& gens,
                                          const std::vector<int>& orders) {
  const int k = static_cast<int>(gens.size());
  long long total = 1;
  for (int o : orders) total *= o;
  if (total != G.n) throw ShapeError("generators do not give a direct product");
  std::vector<std::vector<int>> coords(G.n);
  std::vector<char> seen(G.n, 0);
  std::vector<int> exps(k, 0);
  while (true) {
    int x = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < exps[i]; ++j) x = G.mul[x][gens[i]];
    if (seen[x]) throw ShapeError("generators do not give a direct product");
    seen[x] = 1;
    coords[x] = exps;
    int i = 0;
    while (i < k && ++exps[i] == orders[i]) {
      exps[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  return coords;
}

}  // namespace

bool is_pointed(const SuperMTC& C) {
  const int n = C.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int total = 0;
      for (int c = 0; c < n; ++c) {
        if (C.N[a][b][c] > 1) return false;
        total += C.N[a][b][c];
      }
      if (total != 1) return false;
    }
  return true;
}

AnyonLabel pointed_product(const SuperMTC& C, AnyonLabel a, AnyonLabel b) {
  const int n = C.size();
  for (int c = 0; c < n; ++c)
    if (C.N[a][b][c]) return c;
  throw ShapeError(
      cat("no fusion outcome for (", C.anyon_name(a), ",", C.anyon_name(b), ")"));
}

std::optional<ZestResult> zest(const SuperMTC& E, AnyonLabel psi, cplx b) {
  PointedGroup G = pointed_group(E);
  const int n = G.n;
  if (psi <= 0 || psi >= n) throw ShapeError("fermion image out of range");
  if (G.mul[psi][psi] != 0)
    throw ShapeError("fermion image must square to the unit");
  std::vector<cplx> theta = topological_twists(E);
  if (!close(theta[psi], cplx(-1.0, 0.0)))
    throw ShapeError("fermion image must have twist -1");

  // Z/2 grading from the monodromy with the fermion image.
  std::vector<int> eps(n, 0);
  for (int x = 0; x < n; ++x) {
    cplx m = theta[G.mul[x][psi]] / (theta[x] * theta[psi]);
    if (close(m, cplx(1.0, 0.0)))
      eps[x] = 0;
    else if (close(m, cplx(-1.0, 0.0)))
      eps[x] = 1;
    else
      throw ShapeError(
          cat("monodromy with the fermion image is not a sign at ", E.anyon_name(x)));
  }

  // Odd-odd fusion absorbs an extra fermion.
  std::vector<std::vector<int>> mulz(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int p = G.mul[x][y];
      if (eps[x] && eps[y]) p = G.mul[p][psi];
      mulz[x][y] = p;
    }

  // Re-glued twists: even objects keep theirs, odd ones braid around psi and
  // pick up the parameter.
  std::vector<cplx> tz(n);
  for (int x = 0; x < n; ++x) {
    if (!eps[x]) {
      tz[x] = theta[x];
      continue;
    }
    int xpsi = G.mul[x][psi];
    int xx = mulz[x][x];  // x^2 psi
    tz[x] = b * E.r1(x, psi, xpsi) * E.r1(xpsi, x, xx) /
            E.f1(x, psi, x, xx, xpsi, xpsi);
  }

  PointedGroup Z;
  Z.n = n;
  Z.mul = mulz;
  auto B = [&](int x, int y) { return tz[mulz[x][y]] / (tz[x] * tz[y]); };

  // The new twists must form a quadratic refinement of a bicharacter.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!close(B(mulz[x][y], z), B(x, z) * B(y, z), 1e-6)) return std::nullopt;
  for (int x = 0; x < n; ++x)
    if (!close(tz[group_inverse(Z, x)], tz[x], 1e-6)) return std::nullopt;

  // Standard form: per cyclic factor a root twist tau_i and the sign
  // sigma_i = tau_i^{n_i} driving the associator; cross terms of the braiding
  // come from the bicharacter on the lower triangle of generator pairs.
  std::vector<int> gens = cyclic_decomposition(Z);
  const int k = static_cast<int>(gens.size());
  std::vector<int> orders(k);
  for (int i = 0; i < k; ++i) orders[i] = element_order(Z, gens[i]);
  std::vector<std::vector<int>> coords = coordinates(Z, gens, orders);

  std::vector<cplx> tau(k), sigma(k);
  for (int i = 0; i < k; ++i) {
    tau[i] = tz[gens[i]];
    cplx s = ipow(tau[i], orders[i]);
    if (close(s, cplx(1.0, 0.0), 1e-6))
      sigma[i] = 1.0;
    else if (close(s, cplx(-1.0, 0.0), 1e-6))
      sigma[i] = -1.0;
    else
      throw ShapeError("generator twist does not close to a sign");
  }

  std::vector<std::vector<cplx>> RZ(n, std::vector<cplx>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      cplx v(1.0, 0.0);
      for (int i = 0; i < k; ++i) v *= ipow(tau[i], coords[x][i] * coords[y][i]);
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          v *= ipow(B(gens[i], gens[j]), coords[x][i] * coords[y][j]);
      RZ[x][y] = v;
    }
  for (int x = 0; x < n; ++x)
    if (!close(RZ[x][x], tz[x], 1e-6))
      throw ShapeError("standard form does not reproduce the twists");

  auto fsign = [&](int x, int y, int z) {
    cplx v(1.0, 0.0);
    for (int i = 0; i < k; ++i) {
      int carry = coords[y][i] + coords[z][i] >= orders[i] ? 1 : 0;
      if (carry && (coords[x][i] % 2) && sigma[i].real() < 0.0) v = -v;
    }
    return v;
  };

  SuperMTC out;
  int suffix = static_cast<int>(std::llround(std::arg(b) / (kPi / 8.0)));
  double off = std::abs(std::arg(b) / (kPi / 8.0) - suffix);
  out.name = off < 1e-6
                 ? cat(E.name, "_zest_", ((suffix % 16) + 16) % 16)
                 : cat(E.name, "_zest");
  out.anyon_names = E.anyon_names;
  out.fermion = psi;
  out.N.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out.N[x][y][mulz[x][y]] = 1;
  reset_default_symbols(out);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      out.R[pack_r_key(x, y, mulz[x][y], 0, 0)] = RZ[x][y];
      for (int z = 0; z < n; ++z) {
        int xy = mulz[x][y];
        int yz = mulz[y][z];
        out.F[pack_f_key(x, y, z, mulz[xy][z], xy, yz, 0, 0, 0, 0)] = fsign(x, y, z);
      }
    }
  Report shape = validate_structure(out);
  if (!shape.ok())
    throw ShapeError(cat("zest produced an invalid category: ", shape.summary()));

  ZestResult res;
  res.category = std::move(out);
  res.parameter = b;
  res.central_charge = central_charge(res.category);
  res.grading = eps;
  return res;
}

std::vector<ZestResult> zest_search(const SuperMTC& E, AnyonLabel psi) {
  std::vector<ZestResult> out;
  for (int kk = 0; kk < 16; ++kk) {
    cplx b = std::polar(1.0, kPi * kk / 8.0);
    if (auto z = zest(E, psi, b)) out.push_back(std::move(*z));
  }
  return out;
}

std::optional<std::vector<AnyonLabel>> braided_pointed_equivalent(
    const SuperMTC& A, const SuperMTC& B, EquivLevel level) {
  if (A.size() != B.size()) return std::nullopt;
  PointedGroup GA = pointed_group(A);
  PointedGroup GB = pointed_group(B);
  const int n = GA.n;
  std::vector<cplx> thA = topological_twists(A);
  std::vector<cplx> thB = topological_twists(B);

  std::vector<int> gens = cyclic_decomposition(GA);
  const int k = static_cast<int>(gens.size());
  std::vector<int> orders(k);
  for (int i = 0; i < k; ++i) orders[i] = element_order(GA, gens[i]);
  std::vector<std::vector<int>> coords = coordinates(GA, gens, orders);

  std::vector<std::vector<int>> cand(k);
  for (int i = 0; i < k; ++i)
    for (int y = 0; y < n; ++y)
      if (element_order(GB, y) == orders[i] && close(thB[y], thA[gens[i]], 1e-6))
        cand[i].push_back(y);

  auto braid = [&](const SuperMTC& C, const PointedGroup& G, int x, int y) {
    return C.r1(x, y, G.mul[x][y]);
  };

  std::vector<int> img(k, -1);
  std::vector<AnyonLabel> phi(n, -1);
  std::function<bool(int)> dfs = [&](int i) -> bool {
    if (i < k) {
      for (int y : cand[i]) {
        img[i] = y;
        if (dfs(i + 1)) return true;
      }
      return false;
    }
    std::vector<char> hit(n, 0);
    for (int x = 0; x < n; ++x) {
      int y = 0;
      for (int j = 0; j < k; ++j)
        for (int t = 0; t < coords[x][j]; ++t) y = GB.mul[y][img[j]];
      if (hit[y]) return false;
      hit[y] = 1;
      phi[x] = y;
    }
    for (int x = 0; x < n; ++x)
      if (!close(thB[phi[x]], thA[x], 1e-6)) return false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        cplx va, vb;
        if (level == EquivLevel::ThetaR) {
          va = braid(A, GA, x, y);
          vb = braid(B, GB, phi[x], phi[y]);
        } else {
          va = braid(A, GA, x, y) * braid(A, GA, y, x);
          vb = braid(B, GB, phi[x], phi[y]) * braid(B, GB, phi[y], phi[x]);
        }
        if (!close(va, vb, 1e-6)) return false;
      }
    return true;
  };
  if (dfs(0)) return phi;
  return std::nullopt;
}

Report embed_check(const SuperMTC& C, const SuperMTC& E,
                   const std::vector<AnyonLabel>& image, double tol) {
  const int n = C.size();
  const int ne = E.size();
  if (static_cast<int>(image.size()) != n)
    throw ShapeError("embedding image must list every anyon of the base");
  for (int x = 0; x < n; ++x)
    if (image[x] < 0 || image[x] >= ne)
      throw ShapeError(cat("embedding image of ", C.anyon_name(x), " is out of range"));

  Report report;
  std::vector<char> hit(ne, 0);
  for (int x = 0; x < n; ++x) {
    if (hit[image[x]])
      report.add(cat("embedding is not injective at ", C.anyon_name(x)));
    hit[image[x]] = 1;
  }
  if (image[C.unit()] != E.unit()) report.add("embedding does not fix the unit");
  if (C.has_fermion()) {
    if (!E.has_fermion())
      report.add("extension declares no fermion image");
    else if (image[C.fermion] != E.fermion)
      report.add("fermion does not map to the declared fermion image");
  }

  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb) {
      int base_total = 0, ext_total = 0;
      for (int c = 0; c < n; ++c) {
        base_total += C.N[a][bb][c];
        if (C.N[a][bb][c] != E.N[image[a]][image[bb]][image[c]])
          report.add(cat("fusion rule differs at (", C.anyon_name(a), ",",
                         C.anyon_name(bb), ";", C.anyon_name(c), ")"));
      }
      for (int z = 0; z < ne; ++z) ext_total += E.N[image[a]][image[bb]][z];
      if (base_total != ext_total)
        report.add(cat("image is not closed under fusion at (", C.anyon_name(a),
                       ",", C.anyon_name(bb), ")"));
    }
  if (!report.ok()) return report;

  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb)
      for (int c = 0; c < n; ++c) {
        for (int mu = 0; mu < C.N[a][bb][c]; ++mu)
          for (int nu = 0; nu < C.N[a][bb][c]; ++nu) {
            cplx vc = C.r(a, bb, c, mu, nu);
            cplx ve = E.r(image[a], image[bb], image[c], mu, nu);
            if (std::abs(vc - ve) > tol)
              report.add(cat("R differs at (", C.anyon_name(a), ",",
                             C.anyon_name(bb), ";", C.anyon_name(c), ")"));
          }
        for (int d = 0; d < n; ++d) {
          for (int e = 0; e < n; ++e) {
            if (!C.N[a][bb][e] || !C.N[e][c][d]) continue;
            for (int ff = 0; ff < n; ++ff) {
              if (!C.N[bb][c][ff] || !C.N[a][ff][d]) continue;
              for (int al = 0; al < C.N[a][bb][e]; ++al)
                for (int be = 0; be < C.N[e][c][d]; ++be)
                  for (int mu = 0; mu < C.N[bb][c][ff]; ++mu)
                    for (int nu = 0; nu < C.N[a][ff][d]; ++nu) {
                      cplx vc = C.f(a, bb, c, d, e, ff, al, be, mu, nu);
                      cplx ve = E.f(image[a], image[bb], image[c], image[d],
                                    image[e], image[ff], al, be, mu, nu);
                      if (std::abs(vc - ve) > tol)
                        report.add(cat("F differs at [", C.anyon_name(a), ",",
                                       C.anyon_name(bb), ",", C.anyon_name(c),
                                       "]_", C.anyon_name(d)));
                    }
            }
          }
        }
      }
  return report;
}

std::vector<AnyonLabel> embedding_image(const SuperMTC& base,
                                        const CategoryRecord& extension) {
  if (extension.embedding_base.empty())
    throw ShapeError(cat(extension.category.name, " records no embedding"));
  if (extension.embedding_base != base.name)
    throw ShapeError(cat("embedding base is ", extension.embedding_base, ", not ",
                         base.name));
  std::vector<AnyonLabel> image(base.size(), -1);
  for (const auto& [bn, en] : extension.embedding_map)
    image[base.label_of(bn)] = extension.category.label_of(en);
  for (int x = 0; x < base.size(); ++x)
    if (image[x] < 0)
      throw ShapeError(cat("embedding map misses ", base.anyon_name(x)));
  return image;
}

Report embed_check(const SuperMTC& base, const CategoryRecord& extension,
                   double tol) {
  return embed_check(base, extension.category, embedding_image(base, extension),
                     tol);
}

Layer1Result cascade_layer1(const SuperMTC& E) {
  std::vector<double> cs;
  cs.push_back(central_charge(E));
  if (is_pointed(E)) {
    if (!E.has_fermion())
      throw ShapeError("extension declares no fermion image");
    for (const ZestResult& z : zest_search(E, E.fermion))
      cs.push_back(z.central_charge);
  } else {
    // Re-gluing a non-pointed extension moves c by half-integers only.
    double c0 = cs[0];
    for (int kk = 1; kk < 16; ++kk) cs.push_back(c0 + 0.5 * kk);
  }
  Layer1Result out;
  for (double c : cs) {
    double mm = std::fmod(std::fmod(c, 8.0) + 8.0, 8.0);
    if (mm > 8.0 - 1e-6) mm = 0.0;
    bool fresh = true;
    for (double seen : out.charges)
      if (std::abs(seen - mm) < 1e-6) fresh = false;
    if (fresh) out.charges.push_back(mm);
  }
  std::sort(out.charges.begin(), out.charges.end());
  out.obstructed = true;
  for (double c : out.charges)
    if (c < 1e-6) out.obstructed = false;
  return out;
}

Layer3Result cascade_layer3(const SuperMTC& base, const FermionicAction& action,
                            const CategoryRecord& extension,
                            const FermionicAction& ext_action) {
  const SuperMTC& E = extension.category;
  PointedGroup GC = pointed_group(base);
  PointedGroup GE = pointed_group(E);
  std::vector<AnyonLabel> image = embedding_image(base, extension);
  const int n = base.size();
  const int ne = E.size();
  const int m = action.group.size();

  if (ext_action.group.size() != m || ext_action.group.table != action.group.table ||
      ext_action.group.s != action.group.s ||
      ext_action.group.omega != action.group.omega)
    throw ShapeError("extension action lives on a different symmetry group");
  for (int g = 0; g < m; ++g)
    for (int x = 0; x < n; ++x)
      if (ext_action.perm[g][image[x]] != image[action.perm[g][x]])
        throw ShapeError("extension permutation does not restrict to the base action");

  auto u_base = [&](int g, int x, int y) {
    return action.u1(g, x, y, GC.mul[x][y]);
  };
  auto u_ext = [&](int g, int u, int v) {
    return ext_action.u1(g, u, v, GE.mul[u][v]);
  };
  for (int u = 0; u < ne; ++u)
    for (int v = 0; v < ne; ++v)
      if (!close(u_ext(0, u, v), cplx(1.0, 0.0), 1e-6))
        throw ShapeError("extension U is not normalized at the identity");
  for (int h = 0; h < m; ++h)
    for (int x = 0; x < n; ++x)
      if (!close(action.eta_of(0, h, x), cplx(1.0, 0.0), 1e-6) ||
          !close(action.eta_of(h, 0, x), cplx(1.0, 0.0), 1e-6))
        throw ShapeError("base eta is not normalized");

  // Per-element gauge gamma reconciling the extension U with the base U on
  // embedded anyons: U^E_g = (gauge transport by gamma_g) of U^C_g. Built
  // along a cyclic presentation with principal roots; any other solution
  // differs by a character, which cannot change the outcome below.
  std::vector<int> gens = cyclic_decomposition(GC);
  const int k = static_cast<int>(gens.size());
  std::vector<int> orders(k);
  for (int i = 0; i < k; ++i) orders[i] = element_order(GC, gens[i]);
  std::vector<std::vector<int>> coords = coordinates(GC, gens, orders);

  std::vector<std::vector<cplx>> gam(m, std::vector<cplx>(n, cplx(1.0, 0.0)));
  for (int g = 0; g < m; ++g) {
    auto ratio = [&](int x, int y) {
      return u_base(g, x, y) / u_ext(g, image[x], image[y]);
    };
    std::vector<cplx> gen_val(k);
    for (int i = 0; i < k; ++i) {
      cplx P(1.0, 0.0);
      int p = gens[i];
      for (int j = 1; j < orders[i]; ++j) {
        P *= ratio(p, gens[i]);
        p = GC.mul[p][gens[i]];
      }
      gen_val[i] = std::pow(P, -1.0 / orders[i]);
    }
    // Fill along the mixed-radix walk: peel the lowest nonzero coordinate.
    std::vector<int> order_by_weight(n);
    for (int x = 0; x < n; ++x) order_by_weight[x] = x;
    std::sort(order_by_weight.begin(), order_by_weight.end(), [&](int a, int bb) {
      int wa = 0, wb = 0;
      for (int i = 0; i < k; ++i) {
        wa += coords[a][i];
        wb += coords[bb][i];
      }
      return wa < wb;
    });
    for (int x : order_by_weight) {
      int i = 0;
      while (i < k && coords[x][i] == 0) ++i;
      if (i == k) continue;  // unit stays 1
      int prev = x;
      for (int j = 1; j < orders[i]; ++j) prev = GC.mul[prev][gens[i]];
      gam[g][x] = gam[g][prev] * gen_val[i] * ratio(prev, gens[i]);
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        cplx lhs = u_ext(g, image[x], image[y]);
        cplx rhs = gam[g][x] * gam[g][y] / gam[g][GC.mul[x][y]] * u_base(g, x, y);
        if (!close(lhs, rhs, 1e-6))
          throw ShapeError("extension symbols do not restrict to the base action");
      }
  }

  // Gauge transport of the base eta: the target values on embedded anyons.
  std::vector<std::vector<std::vector<cplx>>> seed(
      m, std::vector<std::vector<cplx>>(m, std::vector<cplx>(n)));
  for (int g = 0; g < m; ++g) {
    const int ginv = action.group.inv(g);
    const bool anti = action.group.antiunitary(g);
    for (int h = 0; h < m; ++h) {
      const int gh = action.group.mul(g, h);
      for (int x = 0; x < n; ++x)
        seed[g][h][x] = action.eta_of(g, h, x) * gam[gh][x] /
                        (gam[g][x] * conj_if(anti, gam[h][action.perm[ginv][x]]));
    }
  }

  // Omega on the extension; eta must satisfy eta_u eta_v / eta_{uv} = Omega.
  std::vector<std::vector<std::vector<std::vector<cplx>>>> Om(
      m, std::vector<std::vector<std::vector<cplx>>>(
             m, std::vector<std::vector<cplx>>(ne, std::vector<cplx>(ne))));
  for (int g = 0; g < m; ++g) {
    const int ginv = ext_action.group.inv(g);
    const bool anti = ext_action.group.antiunitary(g);
    for (int h = 0; h < m; ++h) {
      const int gh = ext_action.group.mul(g, h);
      for (int u = 0; u < ne; ++u)
        for (int v = 0; v < ne; ++v) {
          int pu = ext_action.perm[ginv][u];
          int pv = ext_action.perm[ginv][v];
          Om[g][h][u][v] = conj_if(anti, cplx(1.0, 0.0) / u_ext(h, pu, pv)) *
                           u_ext(gh, u, v) / u_ext(g, u, v);
        }
    }
  }

  // Coset representative generating a cyclic quotient.
  std::vector<char> in_image(ne, 0);
  for (int x = 0; x < n; ++x) in_image[image[x]] = 1;
  int t = -1, q = 0;
  for (int candt = 0; candt < ne && t < 0; ++candt) {
    if (in_image[candt]) continue;
    int p = candt, steps = 1;
    while (!in_image[p]) {
      p = GE.mul[p][candt];
      ++steps;
      if (steps > ne + 1) break;
    }
    if (steps > ne || static_cast<long long>(steps) * n != ne) continue;
    std::vector<char> covered(ne, 0);
    int pw = 0;
    bool ok = true;
    for (int l = 0; l < steps && ok; ++l) {
      for (int x = 0; x < n; ++x) {
        int u = GE.mul[image[x]][pw];
        if (covered[u]) ok = false;
        covered[u] = 1;
      }
      pw = GE.mul[pw][candt];
    }
    if (ok) {
      t = candt;
      q = steps;
    }
  }
  if (t < 0)
    throw ShapeError("quotient by the embedded subcategory is not cyclic");

  std::vector<int> tp(q + 1, 0);
  for (int j = 1; j <= q; ++j) tp[j] = GE.mul[tp[j - 1]][t];

  // Per free pair (g,h), the q candidate eta vectors on all extension anyons.
  struct FreePair {
    int g = 0, h = 0;
    std::vector<std::vector<cplx>> options;
  };
  std::vector<FreePair> pairs;
  for (int g = 1; g < m; ++g)
    for (int h = 1; h < m; ++h) {
      FreePair fp;
      fp.g = g;
      fp.h = h;
      // eta(t)^q follows from the seed at t^q and Omega along the powers.
      int tq_base = -1;
      for (int x = 0; x < n; ++x)
        if (image[x] == tp[q]) tq_base = x;
      if (tq_base < 0) throw ShapeError("coset walk left the embedded image");
      cplx W = seed[g][h][tq_base];
      for (int j = 1; j < q; ++j) W *= Om[g][h][tp[j]][t];
      cplx root = std::pow(W, 1.0 / q);
      for (int j = 0; j < q; ++j) {
        cplx eta_t = root * std::polar(1.0, 2.0 * kPi * j / q);
        std::vector<cplx> vec(ne, cplx(0.0, 0.0));
        for (int x = 0; x < n; ++x) vec[image[x]] = seed[g][h][x];
        std::vector<cplx> etat(q, cplx(1.0, 0.0));
        for (int l = 1; l < q; ++l)
          etat[l] = etat[l - 1] * eta_t / Om[g][h][tp[l - 1]][t];
        for (int l = 1; l < q; ++l)
          for (int x = 0; x < n; ++x) {
            int u = GE.mul[image[x]][tp[l]];
            vec[u] = vec[image[x]] * etat[l] / Om[g][h][image[x]][tp[l]];
          }
        fp.options.push_back(std::move(vec));
      }
      pairs.push_back(std::move(fp));
    }

  const int npairs = static_cast<int>(pairs.size());
  double log_total = npairs * std::log2(static_cast<double>(q));
  if (log_total > 20.0)
    throw ShapeError("eta search space exceeds 2^20 candidates");
  long long total = 1;
  for (int i = 0; i < npairs; ++i) total *= q;

  Layer3Result result;
  result.candidates = total;

  std::vector<std::vector<std::vector<cplx>>> etab(
      m, std::vector<std::vector<cplx>>(m, std::vector<cplx>(ne, cplx(1.0, 0.0))));
  std::vector<int> choice(npairs, 0);
  for (long long idx = 0; idx < total; ++idx) {
    long long rem = idx;
    for (int i = 0; i < npairs; ++i) {
      choice[i] = static_cast<int>(rem % q);
      rem /= q;
    }
    for (int i = 0; i < npairs; ++i)
      etab[pairs[i].g][pairs[i].h] = pairs[i].options[choice[i]];

    bool ueta_ok = true;
    for (int i = 0; i < npairs && ueta_ok; ++i) {
      int g = pairs[i].g, h = pairs[i].h;
      const auto& ev = etab[g][h];
      for (int u = 0; u < ne && ueta_ok; ++u)
        for (int v = 0; v < ne; ++v)
          if (!close(Om[g][h][u][v], ev[u] * ev[v] / ev[GE.mul[u][v]], 1e-6)) {
            ueta_ok = false;
            break;
          }
    }
    if (!ueta_ok) continue;
    ++result.u_eta_pass;

    bool cocycle_ok = true;
    for (int g = 0; g < m && cocycle_ok; ++g) {
      const int ginv = ext_action.group.inv(g);
      const bool anti = ext_action.group.antiunitary(g);
      for (int h = 0; h < m && cocycle_ok; ++h)
        for (int kk = 0; kk < m && cocycle_ok; ++kk) {
          int gh = ext_action.group.mul(g, h);
          int hk = ext_action.group.mul(h, kk);
          for (int u = 0; u < ne; ++u) {
            cplx lhs = etab[g][h][u] * etab[gh][kk][u];
            cplx rhs = etab[g][hk][u] *
                       conj_if(anti, etab[h][kk][ext_action.perm[ginv][u]]);
            if (!close(lhs, rhs, 1e-6)) {
              cocycle_ok = false;
              break;
            }
          }
        }
    }
    if (!cocycle_ok) continue;
    ++result.cocycle_pass;
    if (!result.witness) {
      FermionicAction w = ext_action;
      w.eta = etab;
      w.partial = false;
      w.name = cat(ext_action.name, "_closed");
      result.witness = std::move(w);
    }
  }
  result.obstructed = result.cocycle_pass == 0;
  return result;
}

}  // namespace smtc
