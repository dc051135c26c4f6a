#pragma once

// Right A-modules and right A-comodules, with their defining checks. A
// comodule is a pair of maps λ, ϱ : M⊗A → M⊗A subject to compatibility, the
// pentagon, a normalization against E and fullness.

#include <optional>
#include <string>

#include "wmb/wmb.hpp"

namespace wmb {

template <class K>
struct AModule {
  std::string name;
  Space space;
  LinMap<K> action;  // V⊗A → V
};

template <class K>
struct AComodule {
  std::string name;
  Space space;
  LinMap<K> lambda, rho;  // M⊗A → M⊗A
};

// Per-basis preimages under a surjection; columns are one chosen
// presentation of each target basis vector.
template <class K>
std::optional<Mat<K>> right_inverse(const Mat<K>& f) {
  return solve(f, Mat<K>::eye(f.rows));
}

template <class K>
Report check_amodule(const Algebra<K>& a, const AModule<K>& v) {
  Report rep;
  rep.subject = "A-module " + v.name;
  const int n = a.dim(), m = v.space.dim;
  {
    // v·(ab) = (v·a)·b
    auto lhs = mul(v.action.m, kron(Mat<K>::eye(m), a.mult.m));
    auto rhs = mul(v.action.m, kron(v.action.m, Mat<K>::eye(n)));
    rep.add("associative", "v·(ab) = (v·a)·b", lhs == rhs);
  }
  rep.add("idempotent", "V·A = V", rank(v.action.m) == m);
  {
    Mat<K> st(n * m, m);
    for (int x = 0; x < m; ++x)
      for (int j = 0; j < n; ++j) {
        Vec<K> col = v.action(kron_vec(basis_vec<K>(m, x), basis_vec<K>(n, j)));
        for (int t = 0; t < m; ++t) st(j * m + t, x) = col[t];
      }
    rep.add("nondegenerate", "v·(-) = 0 ⇒ v = 0", kernel_basis(st).cols == 0);
  }
  return rep;
}

template <class K>
Report check_acomodule(const WmbStructure<K>& w, const AComodule<K>& cm) {
  Report rep;
  rep.subject = "A-comodule " + cm.name;
  const Algebra<K>& a = w.A();
  const int n = a.dim(), m = cm.space.dim;
  Mat<K> eyem = Mat<K>::eye(m);

  // (1⊗a)λ(m⊗b) = ϱ(m⊗a)(1⊗b)
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i) {
      Mat<K> lhs = mul(kron(eyem, a.lmul[i]), cm.lambda.m);
      // columns (x, b) of the right side: (id⊗rmul_b)ϱ(x⊗a)
      for (int x = 0; x < m && ok; ++x)
        for (int b = 0; b < n; ++b) {
          Vec<K> r = cm.rho(kron_vec(basis_vec<K>(m, x), basis_vec<K>(n, i)));
          Vec<K> rv = mat_apply(kron(eyem, a.rmul[b]), r);
          Vec<K> lv(m * n);
          for (int t = 0; t < m * n; ++t) lv[t] = lhs(t, x * n + b);
          if (lv != rv) {
            ok = false;
            wit = "m=" + cm.space.label(x) + ", a=" + a.space.label(i) +
                  ", b=" + a.space.label(b);
            break;
          }
        }
    }
    rep.add("compatibility", "(1⊗a)λ(m⊗b) = ϱ(m⊗a)(1⊗b)", ok, wit);
  }

  // pentagon and normalization on M⊗A⊗A
  {
    auto lam13 = leg13(cm.lambda, cm.space, a.space, cm.space, a.space, a.space);
    auto lamA = tensor_map(cm.lambda, LinMap<K>::identity(a.space));
    Mat<K> lhs = mul(lamA.m, lam13.m);
    Mat<K> mt1 = kron(eyem, w.t1.m);
    rep.add("pentagon", "(λ⊗A)λ13(M⊗T1) = (M⊗T1)(λ⊗A)",
            mul(lhs, mt1) == mul(mt1, lamA.m));
    Mat<K> me1 = kron(eyem, w.E.left.m);
    rep.add("normalization", "(λ⊗A)λ13(M⊗E1) = (λ⊗A)λ13",
            mul(lhs, me1) == lhs);
  }

  // fullness: first-leg slices of λ span M
  {
    Mat<K> sl(m, m * n * n);
    for (int col = 0; col < m * n; ++col)
      for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) sl(u, col * n + v) = cm.lambda.m(u * n + v, col);
    rep.add("full", "⟨(M⊗ω)λ(m⊗a)⟩ = M", rank(sl) == m);
  }
  return rep;
}

// The regular module (A, μ) and the regular comodule (A, T1, T3).
template <class K>
AModule<K> regular_module(const Algebra<K>& a) {
  return {"regular", a.space, a.mult};
}

template <class K>
AComodule<K> regular_comodule(const WmbStructure<K>& w) {
  return {"regular", w.A().space, w.t1, w.t3};
}

}  // namespace wmb
