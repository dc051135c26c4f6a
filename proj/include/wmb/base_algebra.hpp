#pragma once

// The base algebra R ⊂ M(A) of a regular weak multiplier bialgebra with
// left and right full comultiplication: coseparable coalgebra structure
// (δ, ε), the anti-multiplicative maps σ, σ̄, τ, τ̄ between R and L, the
// Nakayama automorphism, and the multiplier F on A⊗A with δ(r) = (r⊗1)F.

#include <optional>
#include <string>
#include <vector>

#include "wmb/wmb.hpp"

namespace wmb {

template <class K>
struct BaseAlgebra {
  const WmbStructure<K>* w = nullptr;
  PiTables<K> pi;

  Space r_space, l_space;
  LinMap<K> r_incl, l_incl;  // R → carrier(M(A)), L → carrier(M(A))
  Mat<K> pr, pbr;            // R-coords of Π^R(e_a), Π̄^R(e_a) per basis a
  Mat<K> pl, pbl;            // L-coords of Π^L(e_a), Π̄^L(e_a)
  LinMap<K> r_mult;          // R⊗R → R
  LinMap<K> delta;           // R → R⊗R
  LinMap<K> eps_r;           // R → k
  LinMap<K> sigma, sigma_bar;  // L → R
  LinMap<K> tau, tau_bar;      // R → L
  LinMap<K> nakayama;          // R → R
  Multiplier<K> F;             // multiplier on A⊗A
  Vec<K> local_unit;           // unit of R, in R coords

  int r_dim() const { return r_space.dim; }
  int l_dim() const { return l_space.dim; }

  Vec<K> r_to_carrier(const Vec<K>& r) const { return r_incl(r); }
  Vec<K> l_to_carrier(const Vec<K>& l) const { return l_incl(l); }

  std::optional<Vec<K>> carrier_to_r(const Vec<K>& m) const {
    return solve_vec(r_incl.m, m);
  }
  std::optional<Vec<K>> carrier_to_l(const Vec<K>& m) const {
    return solve_vec(l_incl.m, m);
  }

  Multiplier<K> r_multiplier(const Vec<K>& r) const {
    return w->ma.combine(r_to_carrier(r));
  }
  Multiplier<K> l_multiplier(const Vec<K>& l) const {
    return w->ma.combine(l_to_carrier(l));
  }

  Vec<K> r_mul2(const Vec<K>& r, const Vec<K>& s) const {
    return r_mult(kron_vec(r, s));
  }
  K eps_of(const Vec<K>& r) const { return eps_r(r)[0]; }

  // Π-maps of a ∈ A landed in R resp. L coordinates.
  Vec<K> pi_r_of(const Vec<K>& a) const { return mat_apply(pr, a); }
  Vec<K> pibar_r_of(const Vec<K>& a) const { return mat_apply(pbr, a); }
  Vec<K> pi_l_of(const Vec<K>& a) const { return mat_apply(pl, a); }
  Vec<K> pibar_l_of(const Vec<K>& a) const { return mat_apply(pbl, a); }
};

template <class K>
struct BaseAlgebraResult {
  BaseAlgebra<K> base;
  Report report;
  bool ok = false;
};

namespace detail {

// Express the columns of `cols` (carrier coords) in the column span of
// `incl`; nullopt when some column escapes.
template <class K>
std::optional<Mat<K>> recoordinate(const Mat<K>& incl, const Mat<K>& cols) {
  return solve(incl, cols);
}

// Element of A⊗M(A) as per-first-index slices of length d.
template <class K>
std::optional<Mat<K>> second_leg_slices(const Vec<K>& elem, int n, int d) {
  Mat<K> s(d, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < d; ++k) s(k, i) = elem[i * d + k];
  return s;
}

}  // namespace detail

template <class K>
BaseAlgebraResult<K> base_algebra(const WmbStructure<K>& w) {
  BaseAlgebraResult<K> out;
  Report& rep = out.report;
  rep.subject = "base algebra";
  BaseAlgebra<K>& b = out.base;
  b.w = &w;
  const Algebra<K>& a = w.A();
  const int n = a.dim();
  const int d = w.ma.carrier.dim;

  b.pi = compute_pi_tables(w);
  Report full = check_fullness(w, b.pi);
  rep.merge(full);
  if (!full.ok()) return out;

  // Carriers: canonical bases of the coinciding ranges.
  Mat<K> rbasis = transpose(row_space(transpose(b.pi.pi_r)));
  Mat<K> lbasis = transpose(row_space(transpose(b.pi.pi_l)));
  b.r_space = Space::unlabeled(rbasis.cols, "r");
  b.l_space = Space::unlabeled(lbasis.cols, "l");
  b.r_incl = LinMap<K>(b.r_space, w.ma.carrier, rbasis);
  b.l_incl = LinMap<K>(b.l_space, w.ma.carrier, lbasis);

  auto pr = detail::recoordinate(rbasis, b.pi.pi_r);
  auto pbr = detail::recoordinate(rbasis, b.pi.pibar_r);
  auto plm = detail::recoordinate(lbasis, b.pi.pi_l);
  auto pbl = detail::recoordinate(lbasis, b.pi.pibar_l);
  rep.add("pi_ranges", "Π^R, Π̄^R land in R; Π^L, Π̄^L land in L",
          pr && pbr && plm && pbl);
  if (!rep.ok()) return out;
  b.pr = std::move(*pr);
  b.pbr = std::move(*pbr);
  b.pl = std::move(*plm);
  b.pbl = std::move(*pbl);

  // R is a subalgebra of M(A).
  {
    const int rd = b.r_dim();
    Mat<K> prod(rd, rd * rd);
    bool closed = true;
    for (int i = 0; i < rd && closed; ++i)
      for (int j = 0; j < rd; ++j) {
        Vec<K> m = w.ma.product(b.r_incl.column(i), b.r_incl.column(j));
        auto rc = b.carrier_to_r(m);
        if (!rc) {
          closed = false;
          break;
        }
        for (int k = 0; k < rd; ++k) prod(k, i * rd + j) = (*rc)[k];
      }
    rep.add("r_subalgebra", "R·R ⊆ R", closed);
    if (!closed) return out;
    b.r_mult = LinMap<K>(tensor_space(b.r_space, b.r_space), b.r_space,
                         std::move(prod));
  }

  // δ on R: δ(Π^R(ab)) := (Π^R⊗Π^R)T2(a⊗b), solved over all presentations.
  {
    const int rd = b.r_dim();
    std::vector<Vec<K>> dom, img;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        dom.push_back(b.pi_r_of(a.mul(basis_vec<K>(n, i), basis_vec<K>(n, j))));
        Vec<K> im(rd * rd, K(0));
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) {
            const K& c = w.t2.m(u * n + v, i * n + j);
            if (is_zero(c)) continue;
            Vec<K> ru(rd), rv(rd);
            for (int k = 0; k < rd; ++k) {
              ru[k] = b.pr(k, u);
              rv[k] = b.pr(k, v);
            }
            im = vec_add(im, vec_scale(c, kron_vec(ru, rv)));
          }
        img.push_back(std::move(im));
      }
    auto dm = solve_linear_map(mat_from_cols(dom, rd),
                               mat_from_cols(img, rd * rd), b.r_space,
                               tensor_space(b.r_space, b.r_space));
    rep.add("delta_well_defined", "δ(Π^R(ab)) = (Π^R⊗Π^R)T2(a⊗b) consistent",
            dm.has_value());
    if (!dm) return out;
    b.delta = std::move(*dm);
  }

  // ε on R: ε(Π^R(a)) := ε(a).
  {
    std::vector<Vec<K>> dom, img;
    for (int i = 0; i < n; ++i) {
      Vec<K> c(b.r_dim());
      for (int k = 0; k < b.r_dim(); ++k) c[k] = b.pr(k, i);
      dom.push_back(std::move(c));
      img.push_back(Vec<K>{w.counit.m(0, i)});
    }
    auto em = solve_linear_map(mat_from_cols(dom, b.r_dim()),
                               mat_from_cols(img, 1), b.r_space, unit_space());
    rep.add("eps_r_well_defined", "ε(Π^R(a)) = ε(a) consistent", em.has_value());
    if (!em) return out;
    b.eps_r = std::move(*em);
  }

  // σ, σ̄, τ, τ̄ between R and L.
  {
    auto mk = [&](const Mat<K>& dom, const Mat<K>& img, const Space& ds,
                  const Space& is) { return solve_linear_map(dom, img, ds, is); };
    auto tau = mk(b.pr, b.pbl, b.r_space, b.l_space);
    auto taub = mk(b.pbr, b.pl, b.r_space, b.l_space);
    auto sig = mk(b.pbl, b.pr, b.l_space, b.r_space);
    auto sigb = mk(b.pl, b.pbr, b.l_space, b.r_space);
    rep.add("sigma_tau_defined",
            "τ: Π^R(a)↦Π̄^L(a), τ̄: Π̄^R(a)↦Π^L(a), σ: Π̄^L(a)↦Π^R(a), σ̄: Π^L(a)↦Π̄^R(a)",
            tau && taub && sig && sigb);
    if (!(tau && taub && sig && sigb)) return out;
    b.tau = std::move(*tau);
    b.tau_bar = std::move(*taub);
    b.sigma = std::move(*sig);
    b.sigma_bar = std::move(*sigb);
    bool inv = compose(b.sigma, b.tau) == LinMap<K>::identity(b.r_space) &&
               compose(b.tau, b.sigma) == LinMap<K>::identity(b.l_space) &&
               compose(b.sigma_bar, b.tau_bar) == LinMap<K>::identity(b.r_space) &&
               compose(b.tau_bar, b.sigma_bar) == LinMap<K>::identity(b.l_space);
    rep.add("tau_sigma_inverse", "τ = σ⁻¹ and τ̄ = σ̄⁻¹", inv);

    // anti-multiplicativity of σ (and hence of its inverse τ): products in
    // M(A) restricted to the carriers.
    bool anti = true;
    for (int i = 0; i < b.l_dim() && anti; ++i)
      for (int j = 0; j < b.l_dim(); ++j) {
        Vec<K> lprod = w.ma.product(b.l_incl.column(i), b.l_incl.column(j));
        auto lc = b.carrier_to_l(lprod);
        if (!lc) {
          anti = false;
          break;
        }
        Vec<K> lhs = b.r_to_carrier(b.sigma(*lc));
        Vec<K> rhs = w.ma.product(b.r_to_carrier(b.sigma.column(j)),
                                  b.r_to_carrier(b.sigma.column(i)));
        if (lhs != rhs) {
          anti = false;
          break;
        }
      }
    rep.add("sigma_antimultiplicative", "σ(xy) = σ(y)σ(x)", anti);
  }

  // Nakayama automorphism ϑ = σ∘σ̄⁻¹ = σ∘τ̄ with ε(rs) = ε(ϑ(s)r).
  {
    b.nakayama = compose(b.sigma, b.tau_bar);
    bool ok = true;
    std::string wit;
    const int rd = b.r_dim();
    for (int i = 0; i < rd && ok; ++i)
      for (int j = 0; j < rd; ++j) {
        K lhs = b.eps_of(b.r_mul2(basis_vec<K>(rd, i), basis_vec<K>(rd, j)));
        K rhs = b.eps_of(b.r_mul2(b.nakayama(basis_vec<K>(rd, j)),
                                  basis_vec<K>(rd, i)));
        if (!(lhs == rhs)) {
          ok = false;
          wit = "r=" + b.r_space.label(i) + ", s=" + b.r_space.label(j);
          break;
        }
      }
    rep.add("nakayama", "ε(rs) = ε(ϑ(s)r)", ok, wit);
  }

  // Coalgebra and coseparability of (R, δ, ε).
  {
    const int rd = b.r_dim();
    auto id_r = LinMap<K>::identity(b.r_space);
    bool coassoc = mul(kron(b.delta.m, Mat<K>::eye(rd)), b.delta.m) ==
                   mul(kron(Mat<K>::eye(rd), b.delta.m), b.delta.m);
    rep.add("delta_coassociative", "(δ⊗R)δ = (R⊗δ)δ", coassoc);
    bool counital = contract_eps_first(
                        [&] {
                          Vec<K> e(rd);
                          for (int i = 0; i < rd; ++i) e[i] = b.eps_r.m(0, i);
                          return e;
                        }(),
                        b.delta.m, rd) == id_r.m &&
                    contract_eps_second(
                        [&] {
                          Vec<K> e(rd);
                          for (int i = 0; i < rd; ++i) e[i] = b.eps_r.m(0, i);
                          return e;
                        }(),
                        b.delta.m, rd) == id_r.m;
    rep.add("delta_counital", "(ε⊗R)δ = id = (R⊗ε)δ", counital);
    bool split = mul(b.r_mult.m, b.delta.m) == id_r.m;
    rep.add("mu_delta_split", "μ∘δ = id_R", split);
    bool bimod = true;
    for (int i = 0; i < rd && bimod; ++i)
      for (int j = 0; j < rd; ++j) {
        Vec<K> rs = b.r_mul2(basis_vec<K>(rd, i), basis_vec<K>(rd, j));
        Vec<K> lhs = b.delta(rs);
        // r·δ(s): multiply the first tensor factor by r
        Vec<K> ds = b.delta(basis_vec<K>(rd, j));
        Vec<K> dr = b.delta(basis_vec<K>(rd, i));
        Vec<K> left(rd * rd, K(0)), right(rd * rd, K(0));
        for (int u = 0; u < rd; ++u)
          for (int v = 0; v < rd; ++v) {
            const K& cs = ds[u * rd + v];
            if (!is_zero(cs)) {
              Vec<K> ru = b.r_mul2(basis_vec<K>(rd, i), basis_vec<K>(rd, u));
              for (int t = 0; t < rd; ++t)
                if (!is_zero(ru[t])) left[t * rd + v] += cs * ru[t];
            }
            const K& cr = dr[u * rd + v];
            if (!is_zero(cr)) {
              Vec<K> vs = b.r_mul2(basis_vec<K>(rd, v), basis_vec<K>(rd, j));
              for (int t = 0; t < rd; ++t)
                if (!is_zero(vs[t])) right[u * rd + t] += cr * vs[t];
            }
          }
        if (lhs != left || lhs != right) {
          bimod = false;
          break;
        }
      }
    rep.add("delta_bimodule", "δ(rs) = r·δ(s) = δ(r)·s", bimod);
  }

  // Local units: a two-sided idempotent unit for the basis of R.
  {
    const int rd = b.r_dim();
    Mat<K> sys(2 * rd * rd, rd);
    Vec<K> rhs(2 * rd * rd, K(0));
    for (int i = 0; i < rd; ++i) {
      Vec<K> ei = basis_vec<K>(rd, i);
      for (int k = 0; k < rd; ++k) {
        // e·e_i = e_i  and  e_i·e = e_i, linear in e
        Vec<K> col_l = b.r_mul2(basis_vec<K>(rd, k), ei);
        Vec<K> col_r = b.r_mul2(ei, basis_vec<K>(rd, k));
        for (int t = 0; t < rd; ++t) {
          sys(i * rd + t, k) = col_l[t];
          sys(rd * rd + i * rd + t, k) = col_r[t];
        }
      }
      for (int t = 0; t < rd; ++t) {
        rhs[i * rd + t] = ei[t];
        rhs[rd * rd + i * rd + t] = ei[t];
      }
    }
    auto e = solve_vec(sys, rhs);
    bool ok = e.has_value();
    if (ok) {
      b.local_unit = *e;
      ok = b.r_mul2(*e, *e) == *e;
    }
    rep.add("local_units", "R has an idempotent local unit for its basis", ok);
  }

  // The multiplier F on A⊗A: F(a⊗b) = ((A⊗σ)[E(a⊗1)])(1⊗b) and
  // (a⊗b)F = (1⊗b)((A⊗σ)[(a⊗1)E]).
  {
    Mat<K> eye = Mat<K>::eye(n);
    const int nn = n * n;
    Mat<K> f1(nn, nn), f2(nn, nn);
    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i) {
      auto ea1 = materialize_a_ma(w, mul(w.E.left.m, kron(a.lmul[i], eye)),
                                  mul(kron(a.rmul[i], eye), w.E.right.m));
      auto a1e = materialize_a_ma(w, mul(kron(a.lmul[i], eye), w.E.left.m),
                                  mul(w.E.right.m, kron(a.rmul[i], eye)));
      if (!ea1 || !a1e) {
        ok = false;
        wit = "E(a⊗1) not in A⊗M(A) for a=" + a.space.label(i);
        break;
      }
      auto s1 = detail::second_leg_slices(*ea1, n, d);
      auto s2 = detail::second_leg_slices(*a1e, n, d);
      auto lc1 = detail::recoordinate(b.l_incl.m, *s1);
      auto lc2 = detail::recoordinate(b.l_incl.m, *s2);
      if (!lc1 || !lc2) {
        ok = false;
        wit = "second leg of E(a⊗1) not in L for a=" + a.space.label(i);
        break;
      }
      for (int j = 0; j < n; ++j) {
        Vec<K> ej = basis_vec<K>(n, j);
        for (int u = 0; u < n; ++u) {
          Vec<K> lu(b.l_dim()), lv(b.l_dim());
          for (int k = 0; k < b.l_dim(); ++k) {
            lu[k] = (*lc1)(k, u);
            lv[k] = (*lc2)(k, u);
          }
          // F col (i,j) += e_u ⊗ σ(slice)·b ; F2 col += e_u ⊗ b·σ(slice)
          Vec<K> su = b.r_to_carrier(b.sigma(lu));
          Vec<K> sv = b.r_to_carrier(b.sigma(lv));
          Vec<K> lb = w.ma.left_apply(su, ej);
          Vec<K> rb = w.ma.right_apply(sv, ej);
          for (int t = 0; t < n; ++t) {
            if (!is_zero(lb[t])) f1(u * n + t, i * n + j) += lb[t];
            if (!is_zero(rb[t])) f2(u * n + t, i * n + j) += rb[t];
          }
        }
      }
    }
    rep.add("F_defined", "F(a⊗b) = ((A⊗σ)[E(a⊗1)])(1⊗b)", ok, wit);
    if (!ok) return out;
    b.F = {LinMap<K>(w.AA().space, w.AA().space, std::move(f1)),
           LinMap<K>(w.AA().space, w.AA().space, std::move(f2))};
    std::string cw;
    bool comp = multiplier_compatible(w.AA(), b.F, &cw);
    rep.add("F_multiplier", "(xF)y = x(Fy) on A⊗A", comp, cw);
  }

  // δ(r) = (r⊗1)F, entrywise in R⊗R.
  {
    bool ok = true;
    std::string wit;
    const int rd = b.r_dim();
    for (int i = 0; i < rd && ok; ++i) {
      Multiplier<K> rm = b.r_multiplier(basis_vec<K>(rd, i));
      Mat<K> eye = Mat<K>::eye(n);
      Mat<K> lam = mul(kron(rm.left.m, eye), b.F.left.m);
      Mat<K> rho = mul(b.F.right.m, kron(rm.right.m, eye));
      auto elem = materialize_ma_ma(w, lam, rho);
      if (!elem) {
        ok = false;
        wit = "(r⊗1)F not in M(A)⊗M(A) for r=" + b.r_space.label(i);
        break;
      }
      // re-coordinate both legs into R
      Mat<K> rr = kron(b.r_incl.m, b.r_incl.m);
      auto coords = solve_vec(rr, *elem);
      if (!coords || *coords != b.delta(basis_vec<K>(rd, i))) {
        ok = false;
        wit = "r=" + b.r_space.label(i);
        break;
      }
    }
    rep.add("delta_from_F", "δ(r) = (r⊗1)F", ok, wit);
  }

  out.ok = rep.ok();
  return out;
}

// F^{21} from the mirrored formula with σ̄ must equal the leg flip of F.
template <class K>
CheckEntry check_f_op(const WmbStructure<K>& w, const BaseAlgebra<K>& b) {
  const Algebra<K>& a = w.A();
  const int n = a.dim(), nn = n * n, d = w.ma.carrier.dim;
  Mat<K> eye = Mat<K>::eye(n);
  Mat<K> g1(nn, nn), g2(nn, nn);
  for (int i = 0; i < n; ++i) {
    auto ea1 = materialize_a_ma(w, mul(w.E.left.m, kron(a.lmul[i], eye)),
                                mul(kron(a.rmul[i], eye), w.E.right.m));
    auto a1e = materialize_a_ma(w, mul(kron(a.lmul[i], eye), w.E.left.m),
                                mul(w.E.right.m, kron(a.rmul[i], eye)));
    if (!ea1 || !a1e) return {"F_op", "F21 formula", false, "materialization failed"};
    auto s1 = detail::second_leg_slices(*ea1, n, d);
    auto s2 = detail::second_leg_slices(*a1e, n, d);
    auto lc1 = detail::recoordinate(b.l_incl.m, *s1);
    auto lc2 = detail::recoordinate(b.l_incl.m, *s2);
    if (!lc1 || !lc2) return {"F_op", "F21 formula", false, "second leg not in L"};
    for (int j = 0; j < n; ++j) {
      Vec<K> ej = basis_vec<K>(n, j);
      for (int u = 0; u < n; ++u) {
        Vec<K> lu(b.l_dim()), lv(b.l_dim());
        for (int k = 0; k < b.l_dim(); ++k) {
          lu[k] = (*lc1)(k, u);
          lv[k] = (*lc2)(k, u);
        }
        Vec<K> su = b.r_to_carrier(b.sigma_bar(lu));
        Vec<K> sv = b.r_to_carrier(b.sigma_bar(lv));
        Vec<K> lb = w.ma.left_apply(su, ej);
        Vec<K> rb = w.ma.right_apply(sv, ej);
        for (int t = 0; t < n; ++t) {
          if (!is_zero(lb[t])) g1(u * n + t, i * n + j) += lb[t];
          if (!is_zero(rb[t])) g2(u * n + t, i * n + j) += rb[t];
        }
      }
    }
  }
  Multiplier<K> f21 = multiplier_21(b.F, a.space, a.space);
  bool ok = g1 == f21.left.m && g2 == f21.right.m;
  return {"F_op", "F21(a⊗b) = ((A⊗σ̄)[E(a⊗1)])(1⊗b) equals the leg flip of F", ok, ""};
}

// ---------------------------------------------------------------------------
// The four coinciding expressions in R⊗R, per basis element a. `use_E_in_b`
// swaps F for E in expression (b); for a genuinely weak instance (F ≠ E)
// this must break the agreement, so tests use it as a negative control.

template <class K>
struct DualYdExpressions {
  bool ok = false;
  std::string witness;
  std::vector<Vec<K>> exprs;  // four vectors in R⊗R, when all are defined
};

template <class K>
DualYdExpressions<K> dual_yd_expressions(const WmbStructure<K>& w,
                                         const BaseAlgebra<K>& b, int ai,
                                         bool use_E_in_b = false) {
  DualYdExpressions<K> out;
  const Algebra<K>& a = w.A();
  const int n = a.dim(), d = w.ma.carrier.dim;
  Mat<K> eye = Mat<K>::eye(n);
  Mat<K> la = a.lmul[ai], ra = a.rmul[ai];
  const int rd = b.r_dim();

  auto first_leg_r_second_pi = [&](const Vec<K>& elem,
                                   const Mat<K>& pi_tbl) -> std::optional<Vec<K>> {
    // elem ∈ carrier⊗A; first leg must be in R, then apply the Π-table to
    // the second leg: Σ_j (R-coords of slice_j) ⊗ Π(e_j).
    Mat<K> slices(d, n);
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < n; ++j) slices(k, j) = elem[k * n + j];
    auto rc = detail::recoordinate(b.r_incl.m, slices);
    if (!rc) return std::nullopt;
    Vec<K> res(rd * rd, K(0));
    for (int j = 0; j < n; ++j) {
      Vec<K> rj(rd);
      for (int k = 0; k < rd; ++k) rj[k] = (*rc)(k, j);
      Vec<K> pj(rd);
      for (int k = 0; k < rd; ++k) pj[k] = pi_tbl(k, j);
      res = vec_add(res, kron_vec(rj, pj));
    }
    return res;
  };
  auto second_leg_r_first_pi = [&](const Vec<K>& elem,
                                   const Mat<K>& pi_tbl) -> std::optional<Vec<K>> {
    // elem ∈ A⊗carrier; second leg in R, apply Π to the first leg.
    auto slices = detail::second_leg_slices(elem, n, d);
    auto rc = detail::recoordinate(b.r_incl.m, *slices);
    if (!rc) return std::nullopt;
    Vec<K> res(rd * rd, K(0));
    for (int j = 0; j < n; ++j) {
      Vec<K> rj(rd), pj(rd);
      for (int k = 0; k < rd; ++k) {
        rj[k] = (*rc)(k, j);
        pj[k] = pi_tbl(k, j);
      }
      res = vec_add(res, kron_vec(pj, rj));
    }
    return res;
  };

  // (a) (R⊗Π^R)[E(1⊗a)]
  auto ea = materialize_ma_a(w, mul(w.E.left.m, kron(eye, la)),
                             mul(kron(eye, ra), w.E.right.m));
  // (b) (Π̄^R⊗R)[(a⊗1)F]  (or E as a negative control)
  const Multiplier<K>& fb = use_E_in_b ? w.E : b.F;
  auto af = materialize_a_ma(w, mul(kron(la, eye), fb.left.m),
                             mul(fb.right.m, kron(ra, eye)));
  // (c) (Π̄^R⊗R)[(a⊗1)E21]
  Mat<K> twm = tw_map<K>(a.space, a.space).m;
  Mat<K> e21l = mul(twm, mul(w.E.left.m, twm));
  Mat<K> e21r = mul(twm, mul(w.E.right.m, twm));
  auto ae21 = materialize_a_ma(w, mul(kron(la, eye), e21l), mul(e21r, kron(ra, eye)));
  // (d) (R⊗Π^R)[F(1⊗a)]
  auto fa = materialize_ma_a(w, mul(b.F.left.m, kron(eye, la)),
                             mul(kron(eye, ra), b.F.right.m));
  if (!ea || !af || !ae21 || !fa) {
    out.witness = "materialization failed for a=" + a.space.label(ai);
    return out;
  }
  auto va = first_leg_r_second_pi(*ea, b.pr);
  auto vb = second_leg_r_first_pi(*af, b.pbr);
  auto vc = second_leg_r_first_pi(*ae21, b.pbr);
  auto vd = first_leg_r_second_pi(*fa, b.pr);
  if (!va || !vb || !vc || !vd) {
    out.witness = "leg not in R for a=" + a.space.label(ai);
    return out;
  }
  out.exprs = {*va, *vb, *vc, *vd};
  out.ok = true;
  return out;
}

template <class K>
Report check_dual_yd_lemma(const WmbStructure<K>& w, const BaseAlgebra<K>& b) {
  Report rep;
  rep.subject = "coinciding R⊗R expressions";
  const int n = w.dim();
  bool ok = true;
  std::string wit;
  for (int i = 0; i < n && ok; ++i) {
    auto e = dual_yd_expressions(w, b, i);
    if (!e.ok) {
      ok = false;
      wit = e.witness;
      break;
    }
    for (int k = 1; k < 4; ++k)
      if (e.exprs[k] != e.exprs[0]) {
        ok = false;
        wit = "a=" + w.A().space.label(i) + ", expression " +
              std::string(1, char('a' + k)) + " differs from (a)";
        break;
      }
  }
  rep.add("dual_yd",
          "(R⊗Π^R)[E(1⊗a)] = (Π̄^R⊗R)[(a⊗1)F] = (Π̄^R⊗R)[(a⊗1)E21] = (R⊗Π^R)[F(1⊗a)]",
          ok, wit);
  return rep;
}

// ---------------------------------------------------------------------------
// Antipode suite

template <class K>
struct AntipodeResult {
  Report report;
  bool regular_hopf = false;  // S factorizes through a bijection A → A
};

template <class K>
AntipodeResult<K> check_antipode(const WmbStructure<K>& w, const BaseAlgebra<K>& b) {
  AntipodeResult<K> out;
  Report& rep = out.report;
  rep.subject = "antipode";
  if (!w.antipode) {
    rep.add("present", "antipode supplied", false);
    return out;
  }
  const Algebra<K>& a = w.A();
  const int n = a.dim();
  const Mat<K>& S = w.antipode->m;
  Mat<K> eye = Mat<K>::eye(n);

  // μ(S⊗A)T1 = μ(Π^R⊗A) and μ(A⊗S)T2 = μ(A⊗Π^L).
  {
    Mat<K> lhs = mul(a.mult.m, mul(kron(S, eye), w.t1.m));
    Mat<K> rhs(n, n * n);
    for (int i = 0; i < n; ++i) {
      Vec<K> pic = b.r_to_carrier(b.pi_r_of(basis_vec<K>(n, i)));
      for (int j = 0; j < n; ++j) {
        Vec<K> v = w.ma.left_apply(pic, basis_vec<K>(n, j));
        for (int t = 0; t < n; ++t) rhs(t, i * n + j) = v[t];
      }
    }
    bool ok = lhs == rhs;
    std::string wit;
    if (!ok)
      for (int c = 0; c < n * n && wit.empty(); ++c)
        for (int t = 0; t < n; ++t)
          if (!(lhs(t, c) == rhs(t, c))) {
            wit = "a=" + a.space.label(c / n) + ", b=" + a.space.label(c % n);
            break;
          }
    rep.add("antipode_T1", "μ(S⊗A)T1 = μ(Π^R⊗A)", ok, wit);
  }
  {
    Mat<K> lhs = mul(a.mult.m, mul(kron(eye, S), w.t2.m));
    Mat<K> rhs(n, n * n);
    for (int j = 0; j < n; ++j) {
      Vec<K> plc = b.l_to_carrier(b.pi_l_of(basis_vec<K>(n, j)));
      for (int i = 0; i < n; ++i) {
        Vec<K> v = w.ma.right_apply(plc, basis_vec<K>(n, i));
        for (int t = 0; t < n; ++t) rhs(t, i * n + j) = v[t];
      }
    }
    rep.add("antipode_T2", "μ(A⊗S)T2 = μ(A⊗Π^L)", lhs == rhs);
  }
  rep.add("antipode_E1", "μ(S⊗A)E1 = μ(S⊗A)",
          mul(a.mult.m, mul(kron(S, eye), w.E.left.m)) ==
              mul(a.mult.m, kron(S, eye)));
  rep.add("antipode_E2", "μ(A⊗S)E2 = μ(A⊗S)",
          mul(a.mult.m, mul(kron(eye, S), w.E.right.m)) ==
              mul(a.mult.m, kron(eye, S)));

  // Anti-multiplicativity and non-degeneracy.
  rep.add("antimultiplicative", "S(ab) = S(b)S(a)",
          mul(S, a.mult.m) ==
              mul(a.mult.m, mul(kron(S, S), tw_map<K>(a.space, a.space).m)));
  {
    Mat<K> l(n, n * n), r(n, n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec<K> sv(n);
        for (int t = 0; t < n; ++t) sv[t] = S(t, j);
        Vec<K> x = a.mul(basis_vec<K>(n, i), sv);
        Vec<K> y = a.mul(sv, basis_vec<K>(n, i));
        for (int t = 0; t < n; ++t) {
          l(t, i * n + j) = x[t];
          r(t, i * n + j) = y[t];
        }
      }
    rep.add("s_nondegenerate", "⟨aS(b)⟩ = A = ⟨S(b)a⟩",
            rank(l) == n && rank(r) == n);
  }

  // Anti-comultiplicativity, evaluated through S⊗S.
  {
    Mat<K> ss = kron(S, S);
    Mat<K> twm = tw_map<K>(a.space, a.space).m;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      Vec<K> sa(n);
      for (int t = 0; t < n; ++t) sa[t] = S(t, i);
      Mat<K> dl_op = mul(twm, mul(w.dl[i], twm));
      Mat<K> dr_op = mul(twm, mul(w.dr[i], twm));
      if (mul(w.delta_left_of(sa), ss) != mul(ss, dr_op) ||
          mul(w.delta_right_of(sa), ss) != mul(ss, dl_op))
        ok = false;
    }
    rep.add("anticomultiplicative", "Δ̄S = (S⊗S)‾ Δop", ok);
  }

  // Restrictions of S̄ to R and L.
  {
    bool ok_r = true, ok_l = true;
    for (int i = 0; i < n; ++i) {
      Multiplier<K> pbr_m = w.ma.combine(b.r_to_carrier(b.pibar_r_of(basis_vec<K>(n, i))));
      Multiplier<K> pl_m = w.ma.combine(b.l_to_carrier(b.pi_l_of(basis_vec<K>(n, i))));
      if (mul(S, pbr_m.right.m) != mul(pl_m.left.m, S) ||
          mul(S, pbr_m.left.m) != mul(pl_m.right.m, S))
        ok_r = false;
      Multiplier<K> pbl_m = w.ma.combine(b.l_to_carrier(b.pibar_l_of(basis_vec<K>(n, i))));
      Multiplier<K> pr_m = w.ma.combine(b.r_to_carrier(b.pi_r_of(basis_vec<K>(n, i))));
      if (mul(S, pbl_m.right.m) != mul(pr_m.left.m, S) ||
          mul(S, pbl_m.left.m) != mul(pr_m.right.m, S))
        ok_l = false;
    }
    rep.add("s_restriction_r", "S̄|_R = σ̄⁻¹", ok_r);
    rep.add("s_restriction_l", "S̄|_L = σ", ok_l);
  }

  out.regular_hopf = rank(S) == n;
  rep.add("regular_hopf", "S factorizes through a bijection A → A",
          out.regular_hopf);
  return out;
}

}  // namespace wmb
