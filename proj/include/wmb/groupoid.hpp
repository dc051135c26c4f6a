#pragma once

// Finite groupoids and the two structure families they generate: the
// groupoid algebra kG (Δ(g) = g⊗g, S(g) = g⁻¹, E = Σ_x 1_x⊗1_x) and the
// function algebra k^G (pointwise product, Δ(δ_g) = Σ_{hk=g} δ_h⊗δ_k).
// Every closed-form map below is hand-computable, which is what makes these
// the oracle seed class for the identity checkers.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wmb/monoidal.hpp"

namespace wmb {

struct FiniteGroupoid {
  struct Morphism {
    std::string name;
    int src = 0, tgt = 0;
  };
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<std::vector<int>> comp;  // comp[i][j] = m_i∘m_j, -1 if undefined
  std::vector<int> inverse;            // per morphism
  std::vector<int> identity;           // per object

  int size() const { return static_cast<int>(morphisms.size()); }

  int compose(int i, int j) const { return comp[i][j]; }

  void validate() const {
    const int n = size();
    identity_check();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        bool composable = morphisms[i].src == morphisms[j].tgt;
        if (composable != (comp[i][j] >= 0))
          throw std::invalid_argument("groupoid: composability mismatch");
        if (composable) {
          int k = comp[i][j];
          if (morphisms[k].src != morphisms[j].src ||
              morphisms[k].tgt != morphisms[i].tgt)
            throw std::invalid_argument("groupoid: composite endpoints wrong");
        }
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (comp[j][k] < 0 || comp[i][j] < 0) continue;
          if (comp[i][comp[j][k]] != comp[comp[i][j]][k])
            throw std::invalid_argument("groupoid: associativity fails");
        }
    for (int i = 0; i < n; ++i) {
      int v = inverse[i];
      if (comp[i][v] != identity[morphisms[i].tgt] ||
          comp[v][i] != identity[morphisms[i].src])
        throw std::invalid_argument("groupoid: inverse law fails");
    }
  }

 private:
  void identity_check() const {
    for (std::size_t x = 0; x < objects.size(); ++x) {
      int e = identity[x];
      if (morphisms[e].src != static_cast<int>(x) ||
          morphisms[e].tgt != static_cast<int>(x))
        throw std::invalid_argument("groupoid: identity endpoints wrong");
      for (int g = 0; g < size(); ++g) {
        if (morphisms[g].tgt == static_cast<int>(x) && comp[e][g] != g)
          throw std::invalid_argument("groupoid: left identity fails");
        if (morphisms[g].src == static_cast<int>(x) && comp[g][e] != g)
          throw std::invalid_argument("groupoid: right identity fails");
      }
    }
  }
};

// Derive the inverse and identity tables from the raw composition table.
inline FiniteGroupoid finish_groupoid(FiniteGroupoid g) {
  const int n = g.size();
  g.identity.assign(g.objects.size(), -1);
  for (int e = 0; e < n; ++e) {
    if (g.morphisms[e].src != g.morphisms[e].tgt) continue;
    bool isid = true;
    for (int x = 0; x < n && isid; ++x) {
      if (g.morphisms[x].tgt == g.morphisms[e].src && g.comp[e][x] != x) isid = false;
      if (g.morphisms[x].src == g.morphisms[e].src && g.comp[x][e] != x) isid = false;
    }
    if (isid) g.identity[g.morphisms[e].src] = e;
  }
  for (std::size_t x = 0; x < g.objects.size(); ++x)
    if (g.identity[x] < 0) throw std::invalid_argument("groupoid: missing identity");
  g.inverse.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.comp[i][j] == g.identity[g.morphisms[i].tgt] &&
          g.comp[j][i] == g.identity[g.morphisms[i].src]) {
        g.inverse[i] = j;
        break;
      }
  for (int i = 0; i < n; ++i)
    if (g.inverse[i] < 0) throw std::invalid_argument("groupoid: missing inverse");
  g.validate();
  return g;
}

inline FiniteGroupoid cyclic_group(int n) {
  FiniteGroupoid g;
  g.objects = {"*"};
  for (int i = 0; i < n; ++i)
    g.morphisms.push_back({"g" + std::to_string(i), 0, 0});
  g.comp.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.comp[i][j] = (i + j) % n;
  return finish_groupoid(std::move(g));
}

inline FiniteGroupoid pair_groupoid(int n) {
  FiniteGroupoid g;
  for (int i = 0; i < n; ++i) g.objects.push_back(std::to_string(i + 1));
  // morphism (i,j) : j → i, composition (i,j)∘(j,k) = (i,k)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g.morphisms.push_back(
          {"e" + std::to_string(i + 1) + std::to_string(j + 1), j, i});
  const int m = n * n;
  g.comp.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) g.comp[i * n + j][j * n + k] = i * n + k;
  return finish_groupoid(std::move(g));
}

inline FiniteGroupoid symmetric_group_s3() {
  // permutations of {0,1,2} in one-line notation
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                           {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  const char* names[6] = {"e", "c", "c2", "t01_", "t02", "t12"};
  FiniteGroupoid g;
  g.objects = {"*"};
  for (int i = 0; i < 6; ++i) g.morphisms.push_back({names[i], 0, 0});
  g.comp.assign(6, std::vector<int>(6, -1));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int prod[3];
      for (int t = 0; t < 3; ++t) prod[t] = perms[i][perms[j][t]];
      for (int k = 0; k < 6; ++k)
        if (prod[0] == perms[k][0] && prod[1] == perms[k][1] &&
            prod[2] == perms[k][2]) {
          g.comp[i][j] = k;
          break;
        }
    }
  return finish_groupoid(std::move(g));
}

inline FiniteGroupoid disjoint_union(const FiniteGroupoid& a,
                                     const FiniteGroupoid& b) {
  FiniteGroupoid g;
  g.objects = a.objects;
  for (const auto& o : b.objects) g.objects.push_back(o + "'");
  const int na = a.size(), nb = b.size();
  for (const auto& m : a.morphisms) g.morphisms.push_back(m);
  for (const auto& m : b.morphisms)
    g.morphisms.push_back({m.name + "'",
                           m.src + static_cast<int>(a.objects.size()),
                           m.tgt + static_cast<int>(a.objects.size())});
  g.comp.assign(na + nb, std::vector<int>(na + nb, -1));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) g.comp[i][j] = a.comp[i][j];
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      g.comp[na + i][na + j] = b.comp[i][j] < 0 ? -1 : na + b.comp[i][j];
  return finish_groupoid(std::move(g));
}

// ---------------------------------------------------------------------------
// Structure generators

template <class K>
WmbStructure<K> groupoid_algebra(const FiniteGroupoid& g) {
  g.validate();
  const int n = g.size();
  std::vector<std::string> labels;
  for (const auto& m : g.morphisms) labels.push_back(m.name);
  Space sp = Space::make(labels);
  Space sp2 = tensor_space(sp, sp);

  Mat<K> mult(n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.comp[i][j] >= 0) mult(g.comp[i][j], i * n + j) = K(1);

  Mat<K> t1(n * n, n * n), t2(n * n, n * n), t3(n * n, n * n), t4(n * n, n * n);
  Mat<K> e1(n * n, n * n), e2(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int col = a * n + b;
      if (g.comp[a][b] >= 0) t1(a * n + g.comp[a][b], col) = K(1);   // a⊗ab
      if (g.comp[a][b] >= 0) t2(g.comp[a][b] * n + b, col) = K(1);   // ab⊗b
      if (g.comp[b][a] >= 0) t3(a * n + g.comp[b][a], col) = K(1);   // a⊗ba
      if (g.comp[b][a] >= 0) t4(g.comp[b][a] * n + b, col) = K(1);   // ba⊗b
      if (g.morphisms[a].tgt == g.morphisms[b].tgt) e1(col, col) = K(1);
      if (g.morphisms[a].src == g.morphisms[b].src) e2(col, col) = K(1);
    }
  Mat<K> counit(1, n);
  for (int i = 0; i < n; ++i) counit(0, i) = K(1);
  Mat<K> s(n, n);
  for (int i = 0; i < n; ++i) s(g.inverse[i], i) = K(1);

  return WmbStructure<K>::make(
      Algebra<K>::make(sp, LinMap<K>(sp2, sp, std::move(mult))),
      LinMap<K>(sp2, sp2, std::move(t1)), LinMap<K>(sp2, sp2, std::move(t2)),
      LinMap<K>(sp2, sp2, std::move(t3)), LinMap<K>(sp2, sp2, std::move(t4)),
      Multiplier<K>{LinMap<K>(sp2, sp2, std::move(e1)),
                    LinMap<K>(sp2, sp2, std::move(e2))},
      LinMap<K>(sp, unit_space(), std::move(counit)),
      LinMap<K>(sp, sp, std::move(s)));
}

template <class K>
WmbStructure<K> function_algebra(const FiniteGroupoid& g) {
  g.validate();
  const int n = g.size();
  std::vector<std::string> labels;
  for (const auto& m : g.morphisms) labels.push_back("d_" + m.name);
  Space sp = Space::make(labels);
  Space sp2 = tensor_space(sp, sp);

  Mat<K> mult(n, n * n);
  for (int i = 0; i < n; ++i) mult(i, i * n + i) = K(1);

  // T1(δ_g⊗δ_c) = [src g = src c] δ_{g c⁻¹} ⊗ δ_c  (and T3 = T1, T4 = T2)
  Mat<K> t1(n * n, n * n), t2(n * n, n * n);
  Mat<K> e1(n * n, n * n);
  for (int gg = 0; gg < n; ++gg)
    for (int c = 0; c < n; ++c) {
      if (g.comp[gg][g.inverse[c]] >= 0)
        t1(g.comp[gg][g.inverse[c]] * n + c, gg * n + c) = K(1);
      // T2(δ_b⊗δ_g) = [tgt b = tgt g] δ_b ⊗ δ_{b⁻¹ g}
      if (g.comp[g.inverse[gg]][c] >= 0)
        t2(gg * n + g.comp[g.inverse[gg]][c], gg * n + c) = K(1);
      if (g.morphisms[gg].src == g.morphisms[c].tgt)
        e1(gg * n + c, gg * n + c) = K(1);
    }
  Mat<K> counit(1, n);
  for (std::size_t x = 0; x < g.objects.size(); ++x)
    counit(0, g.identity[x]) = K(1);
  Mat<K> s(n, n);
  for (int i = 0; i < n; ++i) s(g.inverse[i], i) = K(1);

  LinMap<K> T1(sp2, sp2, t1), T2(sp2, sp2, t2), E1(sp2, sp2, e1);
  return WmbStructure<K>::make(
      Algebra<K>::make(sp, LinMap<K>(sp2, sp, std::move(mult))), T1, T2, T1, T2,
      Multiplier<K>{E1, E1}, LinMap<K>(sp, unit_space(), std::move(counit)),
      LinMap<K>(sp, sp, std::move(s)));
}

// ---------------------------------------------------------------------------
// Standard modules and comodules

// Row modules of a groupoid algebra: A^x = ⟨g : tgt g = x⟩ with g·a = g∘a.
template <class K>
std::vector<AModule<K>> row_modules(const WmbStructure<K>& w,
                                    const FiniteGroupoid& g) {
  std::vector<AModule<K>> out;
  const int n = g.size();
  for (std::size_t x = 0; x < g.objects.size(); ++x) {
    std::vector<int> rows;
    for (int i = 0; i < n; ++i)
      if (g.morphisms[i].tgt == static_cast<int>(x)) rows.push_back(i);
    std::vector<std::string> labels;
    for (int i : rows) labels.push_back(g.morphisms[i].name);
    Space sp = Space::make(labels);
    const int m = sp.dim;
    Mat<K> act(m, m * n);
    for (int v = 0; v < m; ++v)
      for (int a = 0; a < n; ++a) {
        int ga = g.comp[rows[v]][a];
        if (ga < 0) continue;
        for (int t = 0; t < m; ++t)
          if (rows[t] == ga) act(t, v * n + a) = K(1);
      }
    out.push_back({"row_" + g.objects[x], sp,
                   LinMap<K>(tensor_space(sp, w.A().space), sp, std::move(act))});
  }
  return out;
}

// One-dimensional character module of a one-object groupoid algebra.
template <class K>
AModule<K> character_module(const WmbStructure<K>& w, const std::vector<K>& weights,
                            const std::string& name) {
  const int n = w.dim();
  Space sp = Space::make({name});
  Mat<K> act(1, n);
  for (int a = 0; a < n; ++a) act(0, a) = weights[a];
  return {name, sp, LinMap<K>(tensor_space(sp, w.A().space), sp, std::move(act))};
}

// Comodule that grades each basis vector of X by a groupoid-algebra basis
// element: λ(x_i⊗a) = x_i⊗h_i·a, ϱ(x_i⊗a) = x_i⊗a·h_i.
template <class K>
AComodule<K> graded_comodule(const WmbStructure<K>& w, const Space& x,
                             const std::vector<int>& degree,
                             const std::string& name) {
  const int n = w.dim(), m = x.dim;
  Mat<K> lam(m * n, m * n), rho(m * n, m * n);
  for (int i = 0; i < m; ++i)
    for (int a = 0; a < n; ++a) {
      Vec<K> ha = w.A().mul(basis_vec<K>(n, degree[i]), basis_vec<K>(n, a));
      Vec<K> ah = w.A().mul(basis_vec<K>(n, a), basis_vec<K>(n, degree[i]));
      for (int t = 0; t < n; ++t) {
        if (!is_zero(ha[t])) lam(i * n + t, i * n + a) = ha[t];
        if (!is_zero(ah[t])) rho(i * n + t, i * n + a) = ah[t];
      }
    }
  Space xa = tensor_space(x, w.A().space);
  return {name, x, LinMap<K>(xa, xa, std::move(lam)),
          LinMap<K>(xa, xa, std::move(rho))};
}

template <class K>
std::vector<AModule<K>> standard_modules(const WmbStructure<K>& w,
                                         const BaseAlgebra<K>& b,
                                         const FiniteGroupoid& g,
                                         bool is_groupoid_algebra) {
  std::vector<AModule<K>> out;
  out.push_back(regular_module(w.A()));
  out.push_back(r_module(w, b));
  if (is_groupoid_algebra) {
    auto rows = row_modules(w, g);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

template <class K>
std::vector<AComodule<K>> standard_comodules(const WmbStructure<K>& w,
                                             const BaseAlgebra<K>& b) {
  std::vector<AComodule<K>> out;
  out.push_back(regular_comodule(w));
  if (auto rc = r_comodule(w, b)) out.push_back(*rc);
  return out;
}

}  // namespace wmb
