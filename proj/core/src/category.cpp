#include "smtc/category.hpp"

#include <algorithm>
#include <set>

namespace smtc {

AnyonLabel SuperMTC::label_of(const std::string& name) const {
  for (int a = 0; a < size(); ++a)
    if (anyon_names[a] == name) return a;
  throw SchemaError(cat("unknown anyon '", name, "' in category '", this->name, "'"));
}

std::vector<AnyonLabel> SuperMTC::fusion_outcomes(AnyonLabel a, AnyonLabel b) const {
  std::vector<AnyonLabel> out;
  for (int c = 0; c < size(); ++c)
    if (N[a][b][c] > 0) out.push_back(c);
  return out;
}

std::vector<FusionTreeIndex> SuperMTC::f_rows(int a, int b, int c, int d) const {
  std::vector<FusionTreeIndex> rows;
  for (int e = 0; e < size(); ++e) {
    int m_ab = N[a][b][e], m_ec = N[e][c][d];
    for (int alpha = 0; alpha < m_ab; ++alpha)
      for (int beta = 0; beta < m_ec; ++beta) rows.push_back({e, alpha, beta});
  }
  return rows;
}

std::vector<FusionTreeIndex> SuperMTC::f_cols(int a, int b, int c, int d) const {
  std::vector<FusionTreeIndex> cols;
  for (int ff = 0; ff < size(); ++ff) {
    int m_bc = N[b][c][ff], m_af = N[a][ff][d];
    for (int mu = 0; mu < m_bc; ++mu)
      for (int nu = 0; nu < m_af; ++nu) cols.push_back({ff, mu, nu});
  }
  return cols;
}

Eigen::MatrixXcd SuperMTC::f_matrix(int a, int b, int c, int d) const {
  auto rows = f_rows(a, b, c, d);
  auto cols = f_cols(a, b, c, d);
  Eigen::MatrixXcd M(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      M(i, j) = f(a, b, c, d, rows[i].mid, cols[j].mid, rows[i].first, rows[i].second,
                  cols[j].first, cols[j].second);
  return M;
}

Eigen::MatrixXcd SuperMTC::r_matrix(int a, int b, int c) const {
  int m = N[a][b][c];
  Eigen::MatrixXcd M(m, m);
  for (int mu = 0; mu < m; ++mu)
    for (int nu = 0; nu < m; ++nu) M(mu, nu) = r(a, b, c, mu, nu);
  return M;
}

AnyonLabel SuperMTC::fuse_fermion(AnyonLabel a) const {
  if (!has_fermion()) throw ShapeError(cat("category '", name, "' declares no fermion"));
  auto out = fusion_outcomes(a, fermion);
  if (out.size() != 1)
    throw ShapeError(cat("fusion with the fermion is not free at anyon ", anyon_names[a]));
  return out[0];
}

void reset_default_symbols(SuperMTC& C) {
  const int n = C.size();
  C.F.clear();
  C.R.clear();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          auto rows = C.f_rows(a, b, c, d);
          auto cols = C.f_cols(a, b, c, d);
          if (rows.empty() || cols.empty()) continue;
          for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
              C.F[pack_f_key(a, b, c, d, rows[i].mid, cols[j].mid, rows[i].first,
                             rows[i].second, cols[j].first, cols[j].second)] =
                  i == j ? cplx(1.0) : cplx(0.0);
        }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (C.N[a][b][c] == 0) continue;
        for (int mu = 0; mu < C.N[a][b][c]; ++mu)
          for (int nu = 0; nu < C.N[a][b][c]; ++nu)
            C.R[pack_r_key(a, b, c, mu, nu)] = mu == nu ? cplx(1.0) : cplx(0.0);
      }
}

AnyonLabel dual_of(const SuperMTC& C, AnyonLabel a) {
  int found = -1;
  for (int b = 0; b < C.size(); ++b) {
    if (C.N[a][b][C.unit()] > 0) {
      if (C.N[a][b][C.unit()] != 1 || found != -1)
        throw ShapeError(cat("anyon ", C.anyon_names[a], " has no unique dual"));
      found = b;
    }
  }
  if (found == -1) throw ShapeError(cat("anyon ", C.anyon_names[a], " has no dual"));
  return found;
}

namespace {

bool f_externals_admissible(const SuperMTC& C, int a, int b, int c, int d) {
  for (int e = 0; e < C.size(); ++e)
    if (C.N[a][b][e] > 0 && C.N[e][c][d] > 0) return true;
  return false;
}

}  // namespace

Report validate_structure(const SuperMTC& C) {
  Report report;
  const int n = C.size();
  if (n == 0) throw ShapeError("category has no anyons");
  if (n > kMaxAnyons) throw ShapeError(cat("too many anyons (", n, " > ", kMaxAnyons, ")"));

  {
    std::set<std::string> names(C.anyon_names.begin(), C.anyon_names.end());
    if (static_cast<int>(names.size()) != n) throw ShapeError("duplicate anyon names");
  }
  if (static_cast<int>(C.N.size()) != n) throw ShapeError("fusion tensor has wrong shape");
  for (const auto& plane : C.N) {
    if (static_cast<int>(plane.size()) != n) throw ShapeError("fusion tensor has wrong shape");
    for (const auto& row : plane) {
      if (static_cast<int>(row.size()) != n) throw ShapeError("fusion tensor has wrong shape");
      for (int m : row) {
        if (m < 0) throw ShapeError("negative fusion multiplicity");
        if (m > kMaxMultiplicity) throw ShapeError(cat("fusion multiplicity ", m, " exceeds ", kMaxMultiplicity));
      }
    }
  }
  if (C.fermion >= n) throw ShapeError("fermion label out of range");

  const int u = C.unit();
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      if (C.N[u][a][c] != (a == c ? 1 : 0))
        report.add(cat("unit fusion broken: N(1,", C.anyon_names[a], ";", C.anyon_names[c], ") = ", C.N[u][a][c]));
      if (C.N[a][u][c] != (a == c ? 1 : 0))
        report.add(cat("unit fusion broken: N(", C.anyon_names[a], ",1;", C.anyon_names[c], ") = ", C.N[a][u][c]));
    }
  }

  // Duals: exactly one b with N(a,b;1) = 1, involutive.
  std::vector<int> dual(n, -1);
  for (int a = 0; a < n; ++a) {
    int count = 0;
    for (int b = 0; b < n; ++b) {
      count += C.N[a][b][u];
      if (C.N[a][b][u] > 0) dual[a] = b;
    }
    if (count != 1) {
      report.add(cat("anyon ", C.anyon_names[a], " has ", count, " vacuum channels"));
      dual[a] = -1;
    }
  }
  for (int a = 0; a < n; ++a)
    if (dual[a] >= 0 && dual[dual[a]] != a)
      report.add(cat("dual map is not involutive at ", C.anyon_names[a]));

  // Braided fusion rules are commutative.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (C.N[a][b][c] != C.N[b][a][c]) {
          report.add(cat("fusion not commutative at (", C.anyon_names[a], ",", C.anyon_names[b], ";",
                         C.anyon_names[c], ")"));
        }

  // Associativity of the fusion multiplicities.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          int lhs = 0, rhs = 0;
          for (int e = 0; e < n; ++e) {
            lhs += C.N[a][b][e] * C.N[e][c][d];
            rhs += C.N[b][c][e] * C.N[a][e][d];
          }
          if (lhs != rhs)
            report.add(cat("fusion not associative at (", C.anyon_names[a], ",", C.anyon_names[b], ",",
                           C.anyon_names[c], ";", C.anyon_names[d], ")"));
        }

  if (C.has_fermion()) {
    int psi = C.fermion;
    if (psi == u) report.add("fermion coincides with the unit");
    for (int c = 0; c < n; ++c)
      if (C.N[psi][psi][c] != (c == u ? 1 : 0))
        report.add(cat("fermion does not square to the vacuum: N(psi,psi;", C.anyon_names[c], ") = ",
                       C.N[psi][psi][c]));
    for (int a = 0; a < n; ++a) {
      int total = 0;
      for (int c = 0; c < n; ++c) total += C.N[a][psi][c];
      if (total != 1)
        report.add(cat("fusion with the fermion is not free at ", C.anyon_names[a]));
    }
  }

  // F table: every stored key admissible, every admissible key stored.
  std::size_t f_expected = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (!f_externals_admissible(C, a, b, c, d)) continue;
          std::size_t rows = C.f_rows(a, b, c, d).size();
          std::size_t cols = C.f_cols(a, b, c, d).size();
          f_expected += rows * cols;
          if (rows != cols)
            report.add(cat("F-move for (", C.anyon_names[a], ",", C.anyon_names[b], ",", C.anyon_names[c],
                           ";", C.anyon_names[d], ") is not square (", rows, "x", cols, ")"));
        }
  std::size_t f_found = 0;
  for (const auto& [key, value] : C.F) {
    (void)value;
    int a = key & 63, b = (key >> 6) & 63, c = (key >> 12) & 63, d = (key >> 18) & 63;
    int e = (key >> 24) & 63, ff = (key >> 30) & 63;
    int alpha = (key >> 36) & 15, beta = (key >> 40) & 15, mu = (key >> 44) & 15, nu = (key >> 48) & 15;
    if (a >= n || b >= n || c >= n || d >= n || e >= n || ff >= n) {
      report.add("F entry with label out of range");
      continue;
    }
    bool adm = alpha < C.N[a][b][e] && beta < C.N[e][c][d] && mu < C.N[b][c][ff] && nu < C.N[a][ff][d];
    if (!adm) {
      report.add(cat("inadmissible F entry [F^{", C.anyon_names[a], ",", C.anyon_names[b], ",",
                     C.anyon_names[c], "}_", C.anyon_names[d], "] e=", C.anyon_names[e], " f=",
                     C.anyon_names[ff]));
      continue;
    }
    ++f_found;
  }
  if (f_found != f_expected)
    report.add(cat("F table incomplete: ", f_found, " admissible entries stored, ", f_expected, " required"));

  // R table likewise.
  std::size_t r_expected = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        r_expected += static_cast<std::size_t>(C.N[a][b][c]) * C.N[a][b][c];
  std::size_t r_found = 0;
  for (const auto& [key, value] : C.R) {
    (void)value;
    int a = key & 63, b = (key >> 6) & 63, c = (key >> 12) & 63;
    int mu = (key >> 18) & 15, nu = (key >> 22) & 15;
    if (a >= n || b >= n || c >= n) {
      report.add("R entry with label out of range");
      continue;
    }
    if (mu >= C.N[a][b][c] || nu >= C.N[a][b][c]) {
      report.add(cat("inadmissible R entry [R^{", C.anyon_names[a], ",", C.anyon_names[b], "}_",
                     C.anyon_names[c], "]"));
      continue;
    }
    ++r_found;
  }
  if (r_found != r_expected)
    report.add(cat("R table incomplete: ", r_found, " admissible entries stored, ", r_expected, " required"));

  return report;
}

}  // namespace smtc
