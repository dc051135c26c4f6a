#pragma once

// Induced firm R-bimodule structures on modules and comodules, the diagonal
// A-action, the idempotent E2^{V,W}, and the monoidal products of modules
// and comodules over ⊗_R. Constructions over non-unique presentations are
// built from one chosen preimage set and then re-verified on every
// generator, so an ill-defined formula is always detected.

#include <optional>
#include <string>
#include <vector>

#include "wmb/bimodule.hpp"
#include "wmb/module.hpp"

namespace wmb {

// (1⊗a)E ∈ R⊗A and companions, as rd×n coefficient matrices: column j is
// the R-coordinate vector of the slice against the A-basis element e_j.
template <class K>
std::optional<Mat<K>> element_in_r_tensor_a(const WmbStructure<K>& w,
                                            const BaseAlgebra<K>& b,
                                            const Mat<K>& lam, const Mat<K>& rho) {
  auto elem = materialize_ma_a(w, lam, rho);
  if (!elem) return std::nullopt;
  const int d = w.ma.carrier.dim, n = w.dim();
  Mat<K> slices(d, n);
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < n; ++j) slices(k, j) = (*elem)[k * n + j];
  return solve(b.r_incl.m, slices);
}

template <class K>
std::optional<Mat<K>> element_in_a_tensor_r(const WmbStructure<K>& w,
                                            const BaseAlgebra<K>& b,
                                            const Mat<K>& lam, const Mat<K>& rho) {
  auto elem = materialize_a_ma(w, lam, rho);
  if (!elem) return std::nullopt;
  const int d = w.ma.carrier.dim, n = w.dim();
  Mat<K> slices(d, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < d; ++k) slices(k, j) = (*elem)[j * d + k];
  return solve(b.r_incl.m, slices);
}

// ---------------------------------------------------------------------------
// Induced R-actions

template <class K>
struct InducedResult {
  FirmBimodule<K> bimod;
  Report report;
  bool ok = false;
};

// (v·a)◁r = v·(ar) and r▷(v·a) = v·(a·τ(r)).
template <class K>
InducedResult<K> induced_r_actions_module(const WmbStructure<K>& w,
                                          const BaseAlgebra<K>& b,
                                          const AModule<K>& v,
                                          bool check_firmness = true) {
  InducedResult<K> out;
  Report& rep = out.report;
  rep.subject = "induced R-actions on module " + v.name;
  const int n = w.dim(), nv = v.space.dim, rd = b.r_dim();
  Mat<K> dom(nv, nv * n);
  for (int x = 0; x < nv; ++x)
    for (int a = 0; a < n; ++a) {
      Vec<K> col = v.action(kron_vec(basis_vec<K>(nv, x), basis_vec<K>(n, a)));
      for (int t = 0; t < nv; ++t) dom(t, x * n + a) = col[t];
    }
  bool ok = true;
  for (int k = 0; k < rd && ok; ++k) {
    Vec<K> rc = b.r_incl.column(k);
    Vec<K> tc = b.l_to_carrier(b.tau(basis_vec<K>(rd, k)));
    Mat<K> img_r(nv, nv * n), img_l(nv, nv * n);
    for (int x = 0; x < nv; ++x)
      for (int a = 0; a < n; ++a) {
        Vec<K> ar = w.ma.right_apply(rc, basis_vec<K>(n, a));
        Vec<K> at = w.ma.right_apply(tc, basis_vec<K>(n, a));
        Vec<K> cr = v.action(kron_vec(basis_vec<K>(nv, x), ar));
        Vec<K> clv = v.action(kron_vec(basis_vec<K>(nv, x), at));
        for (int t = 0; t < nv; ++t) {
          img_r(t, x * n + a) = cr[t];
          img_l(t, x * n + a) = clv[t];
        }
      }
    auto right = solve_linear_map(dom, img_r, v.space, v.space);
    auto left = solve_linear_map(dom, img_l, v.space, v.space);
    if (!right || !left) {
      ok = false;
      break;
    }
    out.bimod.right.push_back(right->m);
    out.bimod.left.push_back(left->m);
  }
  rep.add("well_defined", "(v·a)◁r = v·(ar), r▷(v·a) = v·(aτ(r)) consistent", ok);
  if (!ok) return out;
  out.bimod.name = v.name;
  out.bimod.space = v.space;
  if (check_firmness) rep.merge(check_firm(b, out.bimod));
  out.ok = rep.ok();
  return out;
}

// m◂Π̄^R(a) = (M⊗ε)λ(m⊗a) and Π^R(a)▸m = (M⊗ε)ϱ(m⊗a).
template <class K>
InducedResult<K> induced_r_actions_comodule(const WmbStructure<K>& w,
                                            const BaseAlgebra<K>& b,
                                            const AComodule<K>& m,
                                            bool check_firmness = true) {
  InducedResult<K> out;
  Report& rep = out.report;
  rep.subject = "induced R-actions on comodule " + m.name;
  const int n = w.dim(), nm = m.space.dim, rd = b.r_dim();
  Vec<K> epsv(n);
  for (int i = 0; i < n; ++i) epsv[i] = w.counit.m(0, i);

  std::vector<Vec<K>> dom_r, img_r, dom_l, img_l;
  for (int x = 0; x < nm; ++x)
    for (int a = 0; a < n; ++a) {
      Vec<K> pb(rd), pp(rd);
      for (int k = 0; k < rd; ++k) {
        pb[k] = b.pbr(k, a);
        pp[k] = b.pr(k, a);
      }
      dom_r.push_back(kron_vec(basis_vec<K>(nm, x), pb));
      dom_l.push_back(kron_vec(pp, basis_vec<K>(nm, x)));
      Vec<K> lm = m.lambda(kron_vec(basis_vec<K>(nm, x), basis_vec<K>(n, a)));
      Vec<K> rm = m.rho(kron_vec(basis_vec<K>(nm, x), basis_vec<K>(n, a)));
      Vec<K> il(nm, K(0)), ir(nm, K(0));
      for (int t = 0; t < nm; ++t)
        for (int j = 0; j < n; ++j) {
          if (!is_zero(lm[t * n + j])) il[t] += lm[t * n + j] * epsv[j];
          if (!is_zero(rm[t * n + j])) ir[t] += rm[t * n + j] * epsv[j];
        }
      img_r.push_back(std::move(il));
      img_l.push_back(std::move(ir));
    }
  auto cr = solve_linear_map(mat_from_cols(dom_r, nm * rd),
                             mat_from_cols(img_r, nm),
                             tensor_space(m.space, b.r_space), m.space);
  auto cl = solve_linear_map(mat_from_cols(dom_l, rd * nm),
                             mat_from_cols(img_l, nm),
                             tensor_space(b.r_space, m.space), m.space);
  rep.add("well_defined",
          "m◂Π̄^R(a) = (M⊗ε)λ(m⊗a), Π^R(a)▸m = (M⊗ε)ϱ(m⊗a) consistent",
          cr.has_value() && cl.has_value());
  if (!cr || !cl) return out;
  for (int k = 0; k < rd; ++k) {
    Mat<K> mr(nm, nm), ml(nm, nm);
    for (int x = 0; x < nm; ++x) {
      Vec<K> c1 = (*cr)(kron_vec(basis_vec<K>(nm, x), basis_vec<K>(rd, k)));
      Vec<K> c2 = (*cl)(kron_vec(basis_vec<K>(rd, k), basis_vec<K>(nm, x)));
      for (int t = 0; t < nm; ++t) {
        mr(t, x) = c1[t];
        ml(t, x) = c2[t];
      }
    }
    out.bimod.right.push_back(std::move(mr));
    out.bimod.left.push_back(std::move(ml));
  }
  out.bimod.name = m.name;
  out.bimod.space = m.space;
  if (check_firmness) rep.merge(check_firm(b, out.bimod));
  out.ok = rep.ok();
  return out;
}

// ---------------------------------------------------------------------------
// R as a module and comodule over A

// Π^R(a)·b = Π^R(ab), presentation-free as r·b = Π^R(rb).
template <class K>
AModule<K> r_module(const WmbStructure<K>& w, const BaseAlgebra<K>& b) {
  const int n = w.dim(), rd = b.r_dim();
  Mat<K> act(rd, rd * n);
  for (int k = 0; k < rd; ++k) {
    Multiplier<K> rm = b.r_multiplier(basis_vec<K>(rd, k));
    for (int j = 0; j < n; ++j) {
      Vec<K> v = b.pi_r_of(rm.left(basis_vec<K>(n, j)));
      for (int t = 0; t < rd; ++t) act(t, k * n + j) = v[t];
    }
  }
  return {"R", b.r_space,
          LinMap<K>(tensor_space(b.r_space, w.A().space), b.r_space, std::move(act))};
}

// λ(r⊗a) = E(1⊗ra), ϱ(r⊗a) = (1⊗ar)E, both landing in R⊗A.
template <class K>
std::optional<AComodule<K>> r_comodule(const WmbStructure<K>& w,
                                       const BaseAlgebra<K>& b) {
  const int n = w.dim(), rd = b.r_dim();
  Mat<K> eye = Mat<K>::eye(n);
  Mat<K> lam(rd * n, rd * n), rho(rd * n, rd * n);
  for (int k = 0; k < rd; ++k) {
    Multiplier<K> rm = b.r_multiplier(basis_vec<K>(rd, k));
    for (int j = 0; j < n; ++j) {
      Vec<K> ra = rm.left(basis_vec<K>(n, j));   // r·a
      Vec<K> ar = rm.right(basis_vec<K>(n, j));  // a·r
      Mat<K> la = w.A().lmul_of(ra), lr = w.A().rmul_of(ra);
      auto dec1 = element_in_r_tensor_a(w, b, mul(w.E.left.m, kron(eye, la)),
                                        mul(kron(eye, lr), w.E.right.m));
      Mat<K> la2 = w.A().lmul_of(ar), lr2 = w.A().rmul_of(ar);
      auto dec2 = element_in_r_tensor_a(w, b, mul(kron(eye, la2), w.E.left.m),
                                        mul(w.E.right.m, kron(eye, lr2)));
      if (!dec1 || !dec2) return std::nullopt;
      for (int t = 0; t < rd; ++t)
        for (int j2 = 0; j2 < n; ++j2) {
          lam(t * n + j2, k * n + j) = (*dec1)(t, j2);
          rho(t * n + j2, k * n + j) = (*dec2)(t, j2);
        }
    }
  }
  Space rs = tensor_space(b.r_space, w.A().space);
  return AComodule<K>{"R", b.r_space, LinMap<K>(rs, rs, std::move(lam)),
                      LinMap<K>(rs, rs, std::move(rho))};
}

// ---------------------------------------------------------------------------
// E2^{V,W} and the diagonal action

template <class K>
struct BuiltMap {
  LinMap<K> map;
  Report report;
  bool ok = false;
};

namespace detail {

// Shared builder: maps V⊗W → V⊗W of the shape
// (v·a ⊗ w·b) ↦ (v·(-)⊗w·(-)) [ kernel(a⊗b) ]  for a bilinear kernel A⊗A→A⊗A.
template <class K>
BuiltMap<K> contracted_action_map(const AModule<K>& v, const AModule<K>& w2,
                                  const Mat<K>& kernel_map, int n,
                                  const std::string& name,
                                  const std::string& anchor) {
  BuiltMap<K> out;
  out.report.subject = name;
  const int nv = v.space.dim, nw = w2.space.dim;
  auto pv = right_inverse(v.action.m);
  auto pw = right_inverse(w2.action.m);
  if (!pv || !pw) {
    out.report.add("surjective", "actions on V and W surjective", false);
    return out;
  }
  Mat<K> m(nv * nw, nv * nw);
  for (int x = 0; x < nv; ++x)
    for (int y = 0; y < nw; ++y) {
      Vec<K> col(nv * nw, K(0));
      for (int va = 0; va < nv * n; ++va) {
        const K& cv = (*pv)(va, x);
        if (is_zero(cv)) continue;
        int vv = va / n, aa = va % n;
        for (int wb = 0; wb < nw * n; ++wb) {
          const K& cw = (*pw)(wb, y);
          if (is_zero(cw)) continue;
          int ww = wb / n, bb = wb % n;
          for (int ap = 0; ap < n; ++ap)
            for (int bp = 0; bp < n; ++bp) {
              const K& ce = kernel_map(ap * n + bp, aa * n + bb);
              if (is_zero(ce)) continue;
              Vec<K> term = kron_vec(
                  v.action(kron_vec(basis_vec<K>(nv, vv), basis_vec<K>(n, ap))),
                  w2.action(kron_vec(basis_vec<K>(nw, ww), basis_vec<K>(n, bp))));
              col = vec_add(col, vec_scale(cv * cw * ce, term));
            }
        }
      }
      for (int t = 0; t < nv * nw; ++t) m(t, x * nw + y) = col[t];
    }
  Space vw = tensor_space(v.space, w2.space);
  out.map = LinMap<K>(vw, vw, std::move(m));

  // well-definedness: re-evaluate on every generator pair
  bool ok = true;
  std::string wit;
  for (int vv = 0; vv < nv && ok; ++vv)
    for (int aa = 0; aa < n && ok; ++aa)
      for (int ww = 0; ww < nw && ok; ++ww)
        for (int bb = 0; bb < n; ++bb) {
          Vec<K> lhs = out.map(kron_vec(
              v.action(kron_vec(basis_vec<K>(nv, vv), basis_vec<K>(n, aa))),
              w2.action(kron_vec(basis_vec<K>(nw, ww), basis_vec<K>(n, bb)))));
          Vec<K> rhs(nv * nw, K(0));
          for (int ap = 0; ap < n; ++ap)
            for (int bp = 0; bp < n; ++bp) {
              const K& ce = kernel_map(ap * n + bp, aa * n + bb);
              if (is_zero(ce)) continue;
              rhs = vec_add(
                  rhs, vec_scale(ce, kron_vec(v.action(kron_vec(
                                                  basis_vec<K>(nv, vv),
                                                  basis_vec<K>(n, ap))),
                                              w2.action(kron_vec(
                                                  basis_vec<K>(nw, ww),
                                                  basis_vec<K>(n, bp))))));
            }
          if (lhs != rhs) {
            ok = false;
            wit = "v=" + v.space.label(vv) + ", a=" + std::to_string(aa) +
                  ", w=" + w2.space.label(ww) + ", b=" + std::to_string(bb);
            break;
          }
        }
  out.report.add("well_defined", anchor, ok, wit);
  out.ok = out.report.ok();
  return out;
}

}  // namespace detail

// E2^{V,W}(v·a ⊗ w·b) = (v·(-)⊗w·(-))[(a⊗b)E].
template <class K>
BuiltMap<K> e2_map(const WmbStructure<K>& w, const AModule<K>& v,
                   const AModule<K>& w2) {
  auto out = detail::contracted_action_map(v, w2, w.E.right.m, w.dim(),
                                           "E2^{V,W}",
                                           "E2(v·a⊗w·b) = (v·(-)⊗w·(-))[(a⊗b)E]");
  if (out.ok) {
    bool idem = mul(out.map.m, out.map.m) == out.map.m;
    out.report.add("idempotent", "E2∘E2 = E2", idem);
    out.ok = out.report.ok();
  }
  return out;
}

// The diagonal action: per basis c of A, the map (v·a⊗w·b) ↦
// (v·(-)⊗w·(-))[(a⊗b)Δ(c)].
template <class K>
struct DiagAction {
  std::vector<Mat<K>> act;  // per basis of A
  Report report;
  bool ok = false;
};

template <class K>
DiagAction<K> diag_action(const WmbStructure<K>& w, const AModule<K>& v,
                          const AModule<K>& w2) {
  DiagAction<K> out;
  out.report.subject = "diagonal action on " + v.name + "⊗" + w2.name;
  for (int c = 0; c < w.dim(); ++c) {
    auto bm = detail::contracted_action_map(
        v, w2, w.dr[c], w.dim(), "diag",
        "(v·a⊗w·b)·c = (v·(-)⊗w·(-))[(a⊗b)Δ(c)]");
    if (!bm.ok) {
      out.report.add("well_defined", "diagonal action consistent", false,
                     "c=" + w.A().space.label(c));
      return out;
    }
    out.act.push_back(bm.map.m);
  }
  out.report.add("well_defined", "(v·a⊗w·b)·c = (v·(-)⊗w·(-))[(a⊗b)Δ(c)]", true);
  // E2 is an A-module map for the diagonal action, and absorbs it.
  auto e2 = e2_map(w, v, w2);
  if (e2.ok) {
    bool absorb = true;
    for (int c = 0; c < w.dim() && absorb; ++c)
      if (mul(e2.map.m, out.act[c]) != out.act[c] ||
          mul(out.act[c], e2.map.m) != out.act[c])
        absorb = false;
    out.report.add("e2_module_map", "E2((v⊗w)·c) = (v⊗w)·c = E2(v⊗w)·c", absorb);
  }
  out.ok = out.report.ok();
  return out;
}

// ---------------------------------------------------------------------------
// Module and comodule tensor products on the ⊗_R carrier

template <class K>
struct ModuleTensorResult {
  AModule<K> module;
  Report report;
  bool ok = false;
};

template <class K>
ModuleTensorResult<K> module_tensor(const WmbStructure<K>& w,
                                    const BaseAlgebra<K>& b, const AModule<K>& v,
                                    const AModule<K>& w2, const RTensor<K>& t) {
  ModuleTensorResult<K> out;
  out.report.subject = "module tensor " + v.name + " ⊗_R " + w2.name;
  auto da = diag_action(w, v, w2);
  out.report.merge(da.report);
  if (!da.ok) return out;
  const int n = w.dim(), tc = t.carrier.dim;
  Mat<K> ipi = mul(t.iota.m, t.pi.m);
  Mat<K> act(tc, tc * n);
  bool descends = true;
  for (int c = 0; c < n && descends; ++c) {
    if (mul(mul(t.pi.m, da.act[c]), ipi) != mul(t.pi.m, da.act[c])) {
      descends = false;
      break;
    }
    Mat<K> dc = mul(t.pi.m, mul(da.act[c], t.iota.m));
    for (int x = 0; x < tc; ++x)
      for (int r = 0; r < tc; ++r) act(r, x * n + c) = dc(r, x);
  }
  out.report.add("descends", "the diagonal action descends to V⊗_R W", descends);
  if (!descends) return out;
  out.module = {v.name + "⊗" + w2.name, t.carrier,
                LinMap<K>(tensor_space(t.carrier, w.A().space), t.carrier,
                          std::move(act))};
  out.report.merge(check_amodule(w.A(), out.module));
  out.ok = out.report.ok();
  return out;
}

template <class K>
struct ComoduleTensorResult {
  AComodule<K> comodule;
  Report report;
  bool ok = false;
};

// ϱ_{M⊗N} = (π⊗A)(M⊗ϱ_N)ϱ_M^{13}(ι⊗A), λ mirrored through the opposite.
template <class K>
ComoduleTensorResult<K> comodule_tensor(const WmbStructure<K>& w,
                                        const AComodule<K>& m,
                                        const AComodule<K>& nmod,
                                        const RTensor<K>& t) {
  ComoduleTensorResult<K> out;
  out.report.subject = "comodule tensor " + m.name + " ⊗_R " + nmod.name;
  const Space& aspace = w.A().space;
  auto ida = LinMap<K>::identity(aspace);
  auto idm = LinMap<K>::identity(m.space);
  auto rho13 = leg13(m.rho, m.space, aspace, m.space, aspace, nmod.space);
  auto lam13 = leg13(m.lambda, m.space, aspace, m.space, aspace, nmod.space);
  auto mrho = tensor_map(idm, nmod.rho);
  auto mlam = tensor_map(idm, nmod.lambda);
  Mat<K> iota_a = kron(t.iota.m, Mat<K>::eye(aspace.dim));
  Mat<K> pi_a = kron(t.pi.m, Mat<K>::eye(aspace.dim));
  Mat<K> rho_m = mul(pi_a, mul(mrho.m, mul(rho13.m, iota_a)));
  Mat<K> lam_m = mul(pi_a, mul(mlam.m, mul(lam13.m, iota_a)));
  Space ta = tensor_space(t.carrier, aspace);
  out.comodule = {m.name + "⊗" + nmod.name, t.carrier,
                  LinMap<K>(ta, ta, std::move(lam_m)),
                  LinMap<K>(ta, ta, std::move(rho_m))};
  out.report.merge(check_acomodule(w, out.comodule));
  out.ok = out.report.ok();
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms of the mixed idempotents ι∘π on M⊗V and V⊗M

template <class K>
struct MixedIdempotents {
  Mat<K> on_mv;  // (m ⊗ v·a) ↦ (m◂(-)⊗v·(-))((1⊗a)E)
  Mat<K> on_vm;  // (v·a ⊗ m) ↦ (v·(-)⊗(-)▸m)((a⊗1)F)
  Report report;
  bool ok = false;
};

template <class K>
MixedIdempotents<K> iota_pi_mixed(const WmbStructure<K>& w,
                                  const BaseAlgebra<K>& b, const AComodule<K>& m,
                                  const FirmBimodule<K>& fm, const AModule<K>& v) {
  MixedIdempotents<K> out;
  Report& rep = out.report;
  rep.subject = "mixed idempotents on " + m.name + "⊗" + v.name;
  const int n = w.dim(), nm = m.space.dim, nv = v.space.dim;
  Mat<K> eye = Mat<K>::eye(n);
  auto pv = right_inverse(v.action.m);
  if (!pv) {
    rep.add("surjective", "module action surjective", false);
    return out;
  }
  // decompositions (1⊗a)E ∈ R⊗A and (a⊗1)F ∈ A⊗R, per basis a
  std::vector<Mat<K>> e_dec(n), f_dec(n);
  for (int a = 0; a < n; ++a) {
    auto d1 = element_in_r_tensor_a(w, b, mul(kron(eye, w.A().lmul[a]), w.E.left.m),
                                    mul(w.E.right.m, kron(eye, w.A().rmul[a])));
    auto d2 = element_in_a_tensor_r(w, b, mul(kron(w.A().lmul[a], eye), b.F.left.m),
                                    mul(b.F.right.m, kron(w.A().rmul[a], eye)));
    if (!d1 || !d2) {
      rep.add("decompose", "(1⊗a)E ∈ R⊗A and (a⊗1)F ∈ A⊗R", false,
              "a=" + w.A().space.label(a));
      return out;
    }
    e_dec[a] = std::move(*d1);
    f_dec[a] = std::move(*d2);
  }
  rep.add("decompose", "(1⊗a)E ∈ R⊗A and (a⊗1)F ∈ A⊗R", true);

  Mat<K> on_mv(nm * nv, nm * nv), on_vm(nv * nm, nv * nm);
  for (int x = 0; x < nv; ++x) {
    for (int va = 0; va < nv * n; ++va) {
      const K& cv = (*pv)(va, x);
      if (is_zero(cv)) continue;
      int vv = va / n, aa = va % n;
      for (int j = 0; j < n; ++j) {
        // (1⊗a)E = Σ_j r_j ⊗ e_j : term (m◂r_j) ⊗ (v·e_j)
        Vec<K> rj(b.r_dim());
        for (int k = 0; k < b.r_dim(); ++k) rj[k] = e_dec[aa](k, j);
        if (!vec_is_zero(rj)) {
          Mat<K> mr = fm.right_of(rj);
          Vec<K> ve = v.action(kron_vec(basis_vec<K>(nv, vv), basis_vec<K>(n, j)));
          for (int mm = 0; mm < nm; ++mm)
            for (int t = 0; t < nm; ++t) {
              if (is_zero(mr(t, mm))) continue;
              for (int u = 0; u < nv; ++u)
                if (!is_zero(ve[u]))
                  on_mv(t * nv + u, mm * nv + x) += cv * mr(t, mm) * ve[u];
            }
        }
        // (a⊗1)F = Σ_j e_j ⊗ ρ_j : term (v·e_j) ⊗ (ρ_j▸m)
        Vec<K> pj(b.r_dim());
        for (int k = 0; k < b.r_dim(); ++k) pj[k] = f_dec[aa](k, j);
        if (!vec_is_zero(pj)) {
          Mat<K> ml = fm.left_of(pj);
          Vec<K> ve = v.action(kron_vec(basis_vec<K>(nv, vv), basis_vec<K>(n, j)));
          for (int mm = 0; mm < nm; ++mm)
            for (int t = 0; t < nm; ++t) {
              if (is_zero(ml(t, mm))) continue;
              for (int u = 0; u < nv; ++u)
                if (!is_zero(ve[u]))
                  on_vm(u * nm + t, x * nm + mm) += cv * ml(t, mm) * ve[u];
            }
        }
      }
    }
  }

  // verify independence of the chosen presentations
  bool ok = true;
  std::string wit;
  for (int vv = 0; vv < nv && ok; ++vv)
    for (int aa = 0; aa < n && ok; ++aa) {
      Vec<K> va = v.action(kron_vec(basis_vec<K>(nv, vv), basis_vec<K>(n, aa)));
      for (int mm = 0; mm < nm; ++mm) {
        Vec<K> lhs1 = mat_apply(on_mv, kron_vec(basis_vec<K>(nm, mm), va));
        Vec<K> lhs2 = mat_apply(on_vm, kron_vec(va, basis_vec<K>(nm, mm)));
        Vec<K> rhs1(nm * nv, K(0)), rhs2(nv * nm, K(0));
        for (int j = 0; j < n; ++j) {
          Vec<K> rj(b.r_dim()), pj(b.r_dim());
          for (int k = 0; k < b.r_dim(); ++k) {
            rj[k] = e_dec[aa](k, j);
            pj[k] = f_dec[aa](k, j);
          }
          Vec<K> ve = v.action(kron_vec(basis_vec<K>(nv, vv), basis_vec<K>(n, j)));
          Vec<K> mrv = mat_apply(fm.right_of(rj), basis_vec<K>(nm, mm));
          Vec<K> mlv = mat_apply(fm.left_of(pj), basis_vec<K>(nm, mm));
          rhs1 = vec_add(rhs1, kron_vec(mrv, ve));
          rhs2 = vec_add(rhs2, kron_vec(ve, mlv));
        }
        if (lhs1 != rhs1 || lhs2 != rhs2) {
          ok = false;
          wit = "m=" + m.space.label(mm) + ", v=" + v.space.label(vv) +
                ", a=" + w.A().space.label(aa);
          break;
        }
      }
    }
  rep.add("well_defined", "closed forms independent of the presentation", ok, wit);
  bool idem = mul(on_mv, on_mv) == on_mv && mul(on_vm, on_vm) == on_vm;
  rep.add("idempotent", "both closed forms are idempotent", idem);
  out.on_mv = std::move(on_mv);
  out.on_vm = std::move(on_vm);
  out.ok = rep.ok();
  return out;
}

}  // namespace wmb
