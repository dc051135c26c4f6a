#pragma once

// Associative (possibly non-unital) algebras given by structure constants,
// multipliers as compatible operator pairs, and the multiplier algebra M(A)
// of an idempotent non-degenerate algebra. Includes the extension theorem
// for multiplicative maps A → M(B) along an idempotent multiplier.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wmb/linalg.hpp"
#include "wmb/report.hpp"

namespace wmb {

template <class K>
struct Algebra {
  Space space;
  LinMap<K> mult;  // A⊗A → A
  std::vector<Mat<K>> lmul;  // lmul[i] : x ↦ e_i·x
  std::vector<Mat<K>> rmul;  // rmul[i] : x ↦ x·e_i

  static Algebra make(Space s, LinMap<K> m) {
    Algebra a;
    if (m.src.dim != s.dim * s.dim || m.tgt.dim != s.dim)
      throw std::invalid_argument("Algebra: mult has wrong shape");
    a.space = std::move(s);
    a.mult = std::move(m);
    const int n = a.space.dim;
    a.lmul.assign(n, Mat<K>(n, n));
    a.rmul.assign(n, Mat<K>(n, n));
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) {
          a.lmul[i](r, c) = a.mult.m(r, i * n + c);
          a.rmul[i](r, c) = a.mult.m(r, c * n + i);
        }
    return a;
  }

  int dim() const { return space.dim; }

  Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const {
    return mult(kron_vec(x, y));
  }

  Mat<K> lmul_of(const Vec<K>& x) const {
    Mat<K> m(dim(), dim());
    for (int i = 0; i < dim(); ++i)
      if (!is_zero(x[i])) m = add(m, scale(x[i], lmul[i]));
    return m;
  }

  Mat<K> rmul_of(const Vec<K>& x) const {
    Mat<K> m(dim(), dim());
    for (int i = 0; i < dim(); ++i)
      if (!is_zero(x[i])) m = add(m, scale(x[i], rmul[i]));
    return m;
  }
};

template <class K>
CheckEntry check_associativity(const Algebra<K>& a) {
  const int n = a.dim();
  auto lhs = mul(a.mult.m, kron(a.mult.m, Mat<K>::eye(n)));
  auto rhs = mul(a.mult.m, kron(Mat<K>::eye(n), a.mult.m));
  CheckEntry e{"associativity", "μ∘(μ⊗id) = μ∘(id⊗μ)", lhs == rhs, ""};
  if (!e.pass) {
    for (int i = 0; i < n && e.witness.empty(); ++i)
      for (int j = 0; j < n && e.witness.empty(); ++j)
        for (int k = 0; k < n; ++k) {
          auto l = a.mul(a.mul(basis_vec<K>(n, i), basis_vec<K>(n, j)), basis_vec<K>(n, k));
          auto r = a.mul(basis_vec<K>(n, i), a.mul(basis_vec<K>(n, j), basis_vec<K>(n, k)));
          if (l != r) {
            e.witness = "(" + a.space.label(i) + ")(" + a.space.label(j) + ")(" +
                        a.space.label(k) + "): " + format_vec(a.space, l) +
                        "  vs  " + format_vec(a.space, r);
            break;
          }
        }
  }
  return e;
}

template <class K>
Report check_idempotent_algebra(const Algebra<K>& a) {
  Report rep;
  rep.subject = "idempotent algebra";
  int rk = rank(a.mult.m);
  rep.add("idempotent", "im(μ) = A", rk == a.dim(),
          rk == a.dim() ? "" : "rank μ = " + std::to_string(rk) + " < " +
                                   std::to_string(a.dim()));
  return rep;
}

template <class K>
Report check_nondegenerate(const Algebra<K>& a) {
  Report rep;
  rep.subject = "non-degenerate algebra";
  const int n = a.dim();
  Mat<K> lcols(n * n, n), rcols(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        lcols(r * n + c, i) = a.lmul[i](r, c);
        rcols(r * n + c, i) = a.rmul[i](r, c);
      }
  bool linj = kernel_basis(lcols).cols == 0;
  bool rinj = kernel_basis(rcols).cols == 0;
  rep.add("left_nondegenerate", "a ↦ μ(a⊗-) injective", linj);
  rep.add("right_nondegenerate", "a ↦ μ(-⊗a) injective", rinj);
  return rep;
}

// ---------------------------------------------------------------------------
// Multipliers

template <class K>
struct Multiplier {
  LinMap<K> left;   // a ↦ w·a
  LinMap<K> right;  // a ↦ a·w
};

template <class K>
Multiplier<K> identity_multiplier(const Algebra<K>& a) {
  return {LinMap<K>::identity(a.space), LinMap<K>::identity(a.space)};
}

template <class K>
Multiplier<K> embed_multiplier(const Algebra<K>& a, const Vec<K>& x) {
  return {LinMap<K>(a.space, a.space, a.lmul_of(x)),
          LinMap<K>(a.space, a.space, a.rmul_of(x))};
}

// (wv)·a = w·(v·a) and a·(wv) = (a·w)·v.
template <class K>
Multiplier<K> mult_multipliers(const Multiplier<K>& w, const Multiplier<K>& v) {
  return {compose(w.left, v.left), compose(v.right, w.right)};
}

template <class K>
Vec<K> apply_multiplier(const Multiplier<K>& w, const Vec<K>& a) {
  return w.left(a);
}

// (a·w)·b = a·(w·b) for all a, b.
template <class K>
bool multiplier_compatible(const Algebra<K>& alg, const Multiplier<K>& w,
                           std::string* witness = nullptr) {
  const int n = alg.dim();
  for (int i = 0; i < n; ++i) {
    Vec<K> aw = w.right.column(i);
    for (int j = 0; j < n; ++j) {
      Vec<K> lhs(n, K(0)), rhs(n, K(0));
      for (int k = 0; k < n; ++k) {
        if (!is_zero(aw[k]))
          for (int r = 0; r < n; ++r) {
            const K& c = alg.lmul[k](r, j);
            if (!is_zero(c)) lhs[r] += aw[k] * c;
          }
        const K& wb = w.left.m(k, j);
        if (!is_zero(wb))
          for (int r = 0; r < n; ++r) {
            const K& c = alg.rmul[k](r, i);
            if (!is_zero(c)) rhs[r] += wb * c;
          }
      }
      if (lhs != rhs) {
        if (witness)
          *witness = "a=" + alg.space.label(i) + ", b=" + alg.space.label(j) +
                     ": (aw)b = " + format_vec(alg.space, lhs) +
                     ", a(wb) = " + format_vec(alg.space, rhs);
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// The multiplier algebra

template <class K>
struct MultiplierAlgebra {
  const Algebra<K>* alg = nullptr;
  Space carrier;
  std::vector<Multiplier<K>> basis;
  LinMap<K> embed;  // A → carrier
  Vec<K> unit;      // coordinates of (id,id)
  LinMap<K> mult;   // carrier⊗carrier → carrier
  bool embedding_bijective = false;
  std::optional<Vec<K>> unit_in_A;  // u₀ ∈ A with embed(u₀) = unit
  Mat<K> pair_cols;  // flattened (left|right) pairs of the basis, for coords

  Multiplier<K> combine(const Vec<K>& coords) const {
    const int n = alg->dim();
    Mat<K> l(n, n), r(n, n);
    for (int k = 0; k < carrier.dim; ++k) {
      if (is_zero(coords[k])) continue;
      l = add(l, scale(coords[k], basis[k].left.m));
      r = add(r, scale(coords[k], basis[k].right.m));
    }
    return {LinMap<K>(alg->space, alg->space, std::move(l)),
            LinMap<K>(alg->space, alg->space, std::move(r))};
  }

  std::optional<Vec<K>> coords_of(const Multiplier<K>& w) const {
    const int n = alg->dim();
    Vec<K> col(2 * n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        col[i * n + j] = w.left.m(i, j);
        col[n * n + i * n + j] = w.right.m(i, j);
      }
    return solve_vec(pair_cols, col);
  }

  Vec<K> left_apply(const Vec<K>& coords, const Vec<K>& a) const {
    Vec<K> out(alg->dim(), K(0));
    for (int k = 0; k < carrier.dim; ++k)
      if (!is_zero(coords[k]))
        out = vec_add(out, vec_scale(coords[k], basis[k].left(a)));
    return out;
  }

  Vec<K> right_apply(const Vec<K>& coords, const Vec<K>& a) const {
    Vec<K> out(alg->dim(), K(0));
    for (int k = 0; k < carrier.dim; ++k)
      if (!is_zero(coords[k]))
        out = vec_add(out, vec_scale(coords[k], basis[k].right(a)));
    return out;
  }

  Vec<K> product(const Vec<K>& w, const Vec<K>& v) const {
    return mult(kron_vec(w, v));
  }
};

namespace detail {

template <class K>
Mat<K> pair_columns(const std::vector<Multiplier<K>>& ms, int n) {
  Mat<K> cols(2 * n * n, static_cast<int>(ms.size()));
  for (std::size_t k = 0; k < ms.size(); ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        cols(i * n + j, static_cast<int>(k)) = ms[k].left.m(i, j);
        cols(n * n + i * n + j, static_cast<int>(k)) = ms[k].right.m(i, j);
      }
  return cols;
}

// Try to find a two-sided unit of A; fast path for M(A).
template <class K>
std::optional<Vec<K>> find_unit(const Algebra<K>& a) {
  const int n = a.dim();
  if (n == 0) return std::nullopt;
  Mat<K> sys(2 * n * n, n);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        sys(r * n + c, i) = a.lmul[i](r, c);
        sys(n * n + r * n + c, i) = a.rmul[i](r, c);
      }
  Vec<K> rhs(2 * n * n, K(0));
  for (int r = 0; r < n; ++r) {
    rhs[r * n + r] = K(1);
    rhs[n * n + r * n + r] = K(1);
  }
  return solve_vec(sys, rhs);
}

}  // namespace detail

// Construct M(A) for an idempotent non-degenerate algebra. When A has a
// unit the embedding is an isomorphism and we take the carrier to be A
// itself; otherwise the full bilinear compatibility system
// μ(R(a)⊗b) = μ(a⊗L(b)) is solved for operator pairs (L,R).
template <class K>
MultiplierAlgebra<K> multiplier_algebra(const Algebra<K>& a) {
  if (!check_idempotent_algebra(a).ok() || !check_nondegenerate(a).ok())
    throw std::invalid_argument(
        "multiplier_algebra: algebra must be idempotent and non-degenerate");
  const int n = a.dim();
  MultiplierAlgebra<K> ma;
  ma.alg = &a;

  if (auto u = detail::find_unit(a); u && n > 0) {
    ma.carrier = a.space;
    ma.basis.reserve(n);
    for (int i = 0; i < n; ++i)
      ma.basis.push_back(embed_multiplier(a, basis_vec<K>(n, i)));
    ma.embed = LinMap<K>::identity(a.space);
    ma.unit = *u;
    ma.mult = a.mult;
    ma.embedding_bijective = true;
    ma.unit_in_A = *u;
    ma.pair_cols = detail::pair_columns(ma.basis, n);
    return ma;
  }

  // General path: kernel of the joint system in the unknowns (L, R).
  // Row (i,j,r): Σ_c rmul[j](r,c)·R(c,i) − Σ_c lmul[i](r,c)·L(r', ...)
  // with L applied to e_j: μ(R e_i ⊗ e_j) = μ(e_i ⊗ L e_j).
  const int nn = n * n;
  Mat<K> sys(n * n * n, 2 * nn);  // unknowns: L row-major, then R row-major
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r) {
        int row = (i * n + j) * n + r;
        for (int c = 0; c < n; ++c) {
          // −μ(e_i ⊗ L e_j): coefficient of L(c,j) is lmul[i](r,c)
          sys(row, c * n + j) -= a.lmul[i](r, c);
          // +μ(R e_i ⊗ e_j): coefficient of R(c,i) is rmul[j](r,c)
          sys(row, nn + c * n + i) += a.rmul[j](r, c);
        }
      }
  Mat<K> ker = kernel_basis(sys);
  ma.carrier = Space::unlabeled(ker.cols, "w");
  for (int k = 0; k < ker.cols; ++k) {
    Mat<K> l(n, n), r(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        l(i, j) = ker(i * n + j, k);
        r(i, j) = ker(nn + i * n + j, k);
      }
    ma.basis.push_back({LinMap<K>(a.space, a.space, std::move(l)),
                        LinMap<K>(a.space, a.space, std::move(r))});
  }
  ma.pair_cols = detail::pair_columns(ma.basis, n);

  // Dense ideal: a one-sided zero action forces the multiplier to vanish.
  {
    Mat<K> lonly(nn, ma.carrier.dim), ronly(nn, ma.carrier.dim);
    for (int k = 0; k < ma.carrier.dim; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          lonly(i * n + j, k) = ma.basis[k].left.m(i, j);
          ronly(i * n + j, k) = ma.basis[k].right.m(i, j);
        }
    if (kernel_basis(lonly).cols != 0 || kernel_basis(ronly).cols != 0)
      throw std::logic_error("multiplier_algebra: dense ideal property failed");
  }

  auto unit_coords = ma.coords_of(identity_multiplier(a));
  if (n > 0 && !unit_coords)
    throw std::logic_error("multiplier_algebra: unit not in carrier");
  ma.unit = n > 0 ? *unit_coords : Vec<K>{};

  // Embedding and product structure constants.
  {
    Mat<K> emb(ma.carrier.dim, n);
    for (int i = 0; i < n; ++i) {
      auto c = ma.coords_of(embed_multiplier(a, basis_vec<K>(n, i)));
      if (!c) throw std::logic_error("multiplier_algebra: embedding failed");
      for (int k = 0; k < ma.carrier.dim; ++k) emb(k, i) = (*c)[k];
    }
    ma.embed = LinMap<K>(a.space, ma.carrier, std::move(emb));
    ma.embedding_bijective = rank(ma.embed.m) == ma.carrier.dim &&
                             ma.carrier.dim == n;
    if (ma.embedding_bijective) {
      auto u = solve_vec(ma.embed.m, ma.unit);
      if (u) ma.unit_in_A = *u;
    }
  }
  {
    const int d = ma.carrier.dim;
    Mat<K> prod(d, d * d);
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y) {
        auto c = ma.coords_of(mult_multipliers(ma.basis[x], ma.basis[y]));
        if (!c) throw std::logic_error("multiplier_algebra: product escapes carrier");
        for (int k = 0; k < d; ++k) prod(k, x * d + y) = (*c)[k];
      }
    ma.mult = LinMap<K>(tensor_space(ma.carrier, ma.carrier), ma.carrier,
                        std::move(prod));
  }
  return ma;
}

// ---------------------------------------------------------------------------
// Tensor product algebra

template <class K>
Algebra<K> tensor_algebra(const Algebra<K>& a, const Algebra<K>& b) {
  Space s = tensor_space(a.space, b.space);
  const int na = a.dim(), nb = b.dim(), n = na * nb;
  Mat<K> m(n, n * n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l) {
          int col = (i * nb + j) * n + (k * nb + l);
          // μ(e_i⊗e_j , e_k⊗e_l) = μ_A(e_i,e_k) ⊗ μ_B(e_j,e_l)
          for (int r = 0; r < na; ++r) {
            const K& ca = a.lmul[i](r, k);
            if (is_zero(ca)) continue;
            for (int t = 0; t < nb; ++t) {
              const K& cb = b.lmul[j](t, l);
              if (!is_zero(cb)) m(r * nb + t, col) = ca * cb;
            }
          }
        }
  return Algebra<K>::make(std::move(s), LinMap<K>(tensor_space(s, s), s, std::move(m)));
}

// Leg-lifted multipliers on tensor algebras: for w ∈ M(P⊗Q), w^{13} acts on
// P⊗C⊗Q through the middle factor, w^{ij}(-) = [w(-)]^{ij}.
template <class K>
Multiplier<K> lift_multiplier_13(const Multiplier<K>& w, const Space& p,
                                 const Space& q, const Space& mid) {
  return {leg13(w.left, p, q, p, q, mid), leg13(w.right, p, q, p, q, mid)};
}

template <class K>
Multiplier<K> multiplier_21(const Multiplier<K>& w, const Space& p, const Space& q) {
  return {leg21(w.left, p, q, p, q), leg21(w.right, p, q, p, q)};
}

// ---------------------------------------------------------------------------
// Extension theorem: a multiplicative φ : A → M(B) with matching one-sided
// spans extends uniquely to φ̄ : M(A) → M(B) with φ̄(1) = e.

template <class K>
struct ExtendResult {
  bool ok = false;
  LinMap<K> map;  // carrier(M(A)) → carrier(M(B))
  Report report;
};

template <class K>
ExtendResult<K> extend_multiplicative_map(const MultiplierAlgebra<K>& ma,
                                          const MultiplierAlgebra<K>& mb,
                                          const LinMap<K>& phi,
                                          const Multiplier<K>& e) {
  ExtendResult<K> out;
  out.report.subject = "extension of multiplicative map";
  const Algebra<K>& a = *ma.alg;
  const Algebra<K>& b = *mb.alg;
  const int na = a.dim(), nb = b.dim();

  if (mul(e.left.m, e.left.m) != e.left.m || mul(e.right.m, e.right.m) != e.right.m) {
    out.report.add("idempotent_e", "e² = e", false, "e is not idempotent");
    return out;
  }

  // Span hypotheses ⟨φ(a)b⟩ = ⟨eb⟩ and ⟨bφ(a)⟩ = ⟨be⟩.
  std::vector<Vec<K>> lphib, rphib;
  std::vector<Multiplier<K>> phis;
  phis.reserve(na);
  for (int i = 0; i < na; ++i) phis.push_back(mb.combine(phi.column(i)));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      lphib.push_back(phis[i].left(basis_vec<K>(nb, j)));
      rphib.push_back(phis[i].right(basis_vec<K>(nb, j)));
    }
  bool span_l = same_col_span(mat_from_cols(lphib, nb), e.left.m);
  bool span_r = same_col_span(mat_from_cols(rphib, nb), e.right.m);
  out.report.add("span_left", "⟨φ(a)b⟩ = ⟨eb⟩", span_l);
  out.report.add("span_right", "⟨bφ(a)⟩ = ⟨be⟩", span_r);
  if (!span_l || !span_r) return out;

  // Per basis multiplier w of M(A): solve the operator pair of φ̄(w).
  const int d = ma.carrier.dim;
  Mat<K> img(mb.carrier.dim, d);
  Mat<K> eye = Mat<K>::eye(nb);
  Mat<K> lcomp = sub(eye, e.left.m), rcomp = sub(eye, e.right.m);
  for (int w = 0; w < d; ++w) {
    std::vector<Vec<K>> dom_l, im_l, dom_r, im_r;
    for (int i = 0; i < na; ++i) {
      Vec<K> wa = ma.basis[w].left(basis_vec<K>(na, i));   // w·a
      Vec<K> aw = ma.basis[w].right(basis_vec<K>(na, i));  // a·w
      Multiplier<K> phi_wa = mb.combine(phi(wa));
      Multiplier<K> phi_aw = mb.combine(phi(aw));
      for (int j = 0; j < nb; ++j) {
        dom_l.push_back(phis[i].left(basis_vec<K>(nb, j)));
        im_l.push_back(phi_wa.left(basis_vec<K>(nb, j)));
        dom_r.push_back(phis[i].right(basis_vec<K>(nb, j)));
        im_r.push_back(phi_aw.right(basis_vec<K>(nb, j)));
      }
    }
    // φ̄(w) vanishes against the complement of e on the relevant side.
    for (int j = 0; j < nb; ++j) {
      Vec<K> cl(nb), cr(nb);
      for (int i = 0; i < nb; ++i) {
        cl[i] = lcomp(i, j);
        cr[i] = rcomp(i, j);
      }
      dom_l.push_back(cl);
      im_l.push_back(Vec<K>(nb, K(0)));
      dom_r.push_back(cr);
      im_r.push_back(Vec<K>(nb, K(0)));
    }
    auto L = solve_linear_map(mat_from_cols(dom_l, nb), mat_from_cols(im_l, nb),
                              b.space, b.space);
    auto R = solve_linear_map(mat_from_cols(dom_r, nb), mat_from_cols(im_r, nb),
                              b.space, b.space);
    if (!L || !R) {
      out.report.add("extension_solve", "φ̄(w)·φ(a)b = φ(wa)b consistent", false,
                     "inconsistent system for basis multiplier " +
                         ma.carrier.label(w));
      return out;
    }
    auto coords = mb.coords_of({*L, *R});
    if (!coords) {
      out.report.add("extension_in_MB", "φ̄(w) ∈ M(B)", false,
                     "operator pair not a multiplier on B");
      return out;
    }
    for (int k = 0; k < mb.carrier.dim; ++k) img(k, w) = (*coords)[k];
  }
  out.map = LinMap<K>(ma.carrier, mb.carrier, std::move(img));

  // Re-verify the three defining properties.
  auto e_coords = mb.coords_of(e);
  bool unit_ok = e_coords && out.map(ma.unit) == *e_coords;
  out.report.add("unit", "φ̄(1) = e", unit_ok);
  bool restrict_ok = compose(out.map, ma.embed) == phi;
  out.report.add("restriction", "φ̄|_A = φ", restrict_ok);
  bool multiplicative = true;
  std::string wit;
  for (int x = 0; x < d && multiplicative; ++x)
    for (int y = 0; y < d; ++y) {
      Vec<K> lhs = out.map(ma.product(basis_vec<K>(d, x), basis_vec<K>(d, y)));
      Vec<K> rhs = mb.product(out.map(basis_vec<K>(d, x)), out.map(basis_vec<K>(d, y)));
      if (lhs != rhs) {
        multiplicative = false;
        wit = ma.carrier.label(x) + "·" + ma.carrier.label(y);
        break;
      }
    }
  out.report.add("multiplicative", "φ̄(wv) = φ̄(w)φ̄(v)", multiplicative, wit);
  out.ok = out.report.ok();
  return out;
}

}  // namespace wmb
