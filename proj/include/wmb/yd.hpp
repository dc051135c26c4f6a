#pragma once

// Yetter–Drinfeld modules: one carrier with an idempotent non-degenerate
// action and a full coaction, subject to
//   ϱ[(x⊗a)Δop(b)] = ϱ(x⊗a)Δ(b)   and   E2^{X,A}ϱ = ϱ = ϱ(E2^{A,X})^{21}.
// The checker computes the equivalent conditions of the defining theorem by
// independent code paths — (e) directly, (c) through φ̂ being a module map,
// (a) through φ̂ being a comodule map — and asserts that the verdicts agree.

#include <optional>
#include <string>
#include <vector>

#include "wmb/monoidal.hpp"

namespace wmb {

template <class K>
struct YdModule {
  std::string name;
  AModule<K> module;
  AComodule<K> comodule;
  FirmBimodule<K> bimod;  // the coinciding induced R-actions
};

// φ_{V,M} : V⊗M → M⊗V, v·a ⊗ m ↦ (M ⊗ v·(-)) ϱ(m⊗a).
template <class K>
BuiltMap<K> phi_map(const WmbStructure<K>& w, const AModule<K>& v,
                    const AComodule<K>& m) {
  BuiltMap<K> out;
  out.report.subject = "phi_{" + v.name + "," + m.name + "}";
  const int n = w.dim(), nv = v.space.dim, nm = m.space.dim;
  auto pv = right_inverse(v.action.m);
  if (!pv) {
    out.report.add("surjective", "module action surjective", false);
    return out;
  }
  Mat<K> mat(nm * nv, nv * nm);
  for (int x = 0; x < nv; ++x)
    for (int mm = 0; mm < nm; ++mm) {
      Vec<K> col(nm * nv, K(0));
      for (int va = 0; va < nv * n; ++va) {
        const K& cv = (*pv)(va, x);
        if (is_zero(cv)) continue;
        int vv = va / n, aa = va % n;
        Vec<K> r = m.rho(kron_vec(basis_vec<K>(nm, mm), basis_vec<K>(n, aa)));
        for (int mp = 0; mp < nm; ++mp)
          for (int cc = 0; cc < n; ++cc) {
            const K& cr = r[mp * n + cc];
            if (is_zero(cr)) continue;
            Vec<K> vc = v.action(kron_vec(basis_vec<K>(nv, vv), basis_vec<K>(n, cc)));
            for (int t = 0; t < nv; ++t)
              if (!is_zero(vc[t])) col[mp * nv + t] += cv * cr * vc[t];
          }
      }
      for (int t = 0; t < nm * nv; ++t) mat(t, x * nm + mm) = col[t];
    }
  out.map = LinMap<K>(tensor_space(v.space, m.space),
                      tensor_space(m.space, v.space), std::move(mat));

  // well-definedness over all presentations
  bool ok = true;
  std::string wit;
  for (int vv = 0; vv < nv && ok; ++vv)
    for (int aa = 0; aa < n && ok; ++aa)
      for (int mm = 0; mm < nm; ++mm) {
        Vec<K> va = v.action(kron_vec(basis_vec<K>(nv, vv), basis_vec<K>(n, aa)));
        Vec<K> lhs = out.map(kron_vec(va, basis_vec<K>(nm, mm)));
        Vec<K> rhs(nm * nv, K(0));
        Vec<K> r = m.rho(kron_vec(basis_vec<K>(nm, mm), basis_vec<K>(n, aa)));
        for (int mp = 0; mp < nm; ++mp)
          for (int cc = 0; cc < n; ++cc) {
            const K& cr = r[mp * n + cc];
            if (is_zero(cr)) continue;
            Vec<K> vc = v.action(kron_vec(basis_vec<K>(nv, vv), basis_vec<K>(n, cc)));
            for (int t = 0; t < nv; ++t)
              if (!is_zero(vc[t])) rhs[mp * nv + t] += cr * vc[t];
          }
        if (lhs != rhs) {
          ok = false;
          wit = "v=" + v.space.label(vv) + ", a=" + w.A().space.label(aa) +
                ", m=" + m.space.label(mm);
          break;
        }
      }
  out.report.add("well_defined", "φ(v·a⊗m) = (M⊗v·(-))ϱ(m⊗a) consistent", ok, wit);
  out.ok = out.report.ok();
  return out;
}

// φ̂ on the ⊗_R carriers, with its verified properties.
template <class K>
struct PhiHat {
  LinMap<K> phi;   // V⊗M → M⊗V
  RTensor<K> vm;   // V⊗_R M  (module-side right action, comodule-side left)
  RTensor<K> mv;   // M⊗_R V
  LinMap<K> hat;   // vm.carrier → mv.carrier
  Report report;
  bool ok = false;
};

template <class K>
PhiHat<K> phi_hat(const WmbStructure<K>& w, const BaseAlgebra<K>& b,
                  const AModule<K>& v, const FirmBimodule<K>& fv,
                  const AComodule<K>& m, const FirmBimodule<K>& fm) {
  PhiHat<K> out;
  Report& rep = out.report;
  rep.subject = "phi_hat_{" + v.name + "," + m.name + "}";
  auto p = phi_map(w, v, m);
  rep.merge(p.report);
  if (!p.ok) return out;
  out.phi = p.map;
  auto fvm = firm_tensor(b, fv, fm);
  auto fmv = firm_tensor(b, fm, fv);
  rep.merge(fvm.report);
  rep.merge(fmv.report);
  if (!fvm.ok || !fmv.ok) return out;
  out.vm = fvm.t;
  out.mv = fmv.t;
  out.hat = LinMap<K>(out.vm.carrier, out.mv.carrier,
                      mul(out.mv.pi.m, mul(out.phi.m, out.vm.iota.m)));

  rep.add("absorbed", "ιπ_{M,V}∘φ = φ",
          mul(mul(out.mv.iota.m, out.mv.pi.m), out.phi.m) == out.phi.m);
  rep.add("defining", "φ̂∘π_{V,M} = π_{M,V}∘φ",
          mul(out.hat.m, out.vm.pi.m) == mul(out.mv.pi.m, out.phi.m));
  rep.add("iota_phi", "ι_{M,V}∘φ̂ = φ∘ι_{V,M}",
          mul(out.mv.iota.m, out.hat.m) == mul(out.phi.m, out.vm.iota.m));
  {
    bool bal = true;
    for (int k = 0; k < b.r_dim() && bal; ++k) {
      Mat<K> lhs = mul(out.phi.m, kron(fv.right[k], Mat<K>::eye(m.space.dim)));
      Mat<K> rhs = mul(out.phi.m, kron(Mat<K>::eye(v.space.dim), fm.left[k]));
      if (lhs != rhs) bal = false;
    }
    rep.add("balanced", "φ(v◁r⊗m) = φ(v⊗r▸m)", bal);
  }
  out.ok = rep.ok();
  return out;
}

// The inverse of φ̂ over a regular weak multiplier Hopf algebra:
// m ⊗_R v·a ↦ v·S⁻¹(S(a)^λ) ⊗_R m^λ.
template <class K>
struct PhiHatInverse {
  LinMap<K> inv;  // mv.carrier → vm.carrier
  Report report;
  bool ok = false;
};

template <class K>
PhiHatInverse<K> phi_hat_inverse(const WmbStructure<K>& w,
                                 const BaseAlgebra<K>& b, const AModule<K>& v,
                                 const AComodule<K>& m,
                                 const FirmBimodule<K>& fm, const PhiHat<K>& ph) {
  PhiHatInverse<K> out;
  Report& rep = out.report;
  rep.subject = "phi_hat_inverse_{" + v.name + "," + m.name + "}";
  if (!w.antipode || rank(w.antipode->m) != w.dim()) {
    rep.add("hopf", "S is a bijection A → A", false);
    return out;
  }
  const int n = w.dim(), nv = v.space.dim, nm = m.space.dim;
  const Mat<K>& S = w.antipode->m;
  auto sinv = solve(S, Mat<K>::eye(n));
  auto pv = right_inverse(v.action.m);
  if (!sinv || !pv) {
    rep.add("precondition", "S invertible and action surjective", false);
    return out;
  }

  // Ψ : M⊗V → V⊗M on representatives
  Mat<K> psi(nv * nm, nm * nv);
  for (int mm = 0; mm < nm; ++mm)
    for (int x = 0; x < nv; ++x) {
      Vec<K> col(nv * nm, K(0));
      for (int va = 0; va < nv * n; ++va) {
        const K& cv = (*pv)(va, x);
        if (is_zero(cv)) continue;
        int vv = va / n, aa = va % n;
        Vec<K> sa(n);
        for (int t = 0; t < n; ++t) sa[t] = S(t, aa);
        Vec<K> lam = m.lambda(kron_vec(basis_vec<K>(nm, mm), sa));
        for (int mp = 0; mp < nm; ++mp)
          for (int cc = 0; cc < n; ++cc) {
            const K& cl = lam[mp * n + cc];
            if (is_zero(cl)) continue;
            Vec<K> sic(n);
            for (int t = 0; t < n; ++t) sic[t] = (*sinv)(t, cc);
            Vec<K> vs = v.action(kron_vec(basis_vec<K>(nv, vv), sic));
            for (int t = 0; t < nv; ++t)
              if (!is_zero(vs[t])) col[t * nm + mp] += cv * cl * vs[t];
          }
      }
      for (int t = 0; t < nv * nm; ++t) psi(t, mm * nv + x) = col[t];
    }
  out.inv = LinMap<K>(ph.mv.carrier, ph.vm.carrier,
                      mul(ph.vm.pi.m, mul(psi, ph.mv.iota.m)));
  bool left = mul(out.inv.m, ph.hat.m) == Mat<K>::eye(ph.vm.carrier.dim);
  bool right = mul(ph.hat.m, out.inv.m) == Mat<K>::eye(ph.mv.carrier.dim);
  rep.add("left_inverse", "φ̂⁻¹∘φ̂ = id", left);
  rep.add("right_inverse", "φ̂∘φ̂⁻¹ = id", right);

  // auxiliary identity λ(M⊗S)ϱ = E1^{M,A}(M⊗S)
  {
    Mat<K> eye = Mat<K>::eye(n);
    Mat<K> e1ma(nm * n, nm * n);
    bool dec_ok = true;
    for (int a = 0; a < n && dec_ok; ++a) {
      auto d = element_in_r_tensor_a(w, b,
                                     mul(kron(eye, w.A().lmul[a]), w.E.left.m),
                                     mul(w.E.right.m, kron(eye, w.A().rmul[a])));
      if (!d) {
        dec_ok = false;
        break;
      }
      for (int j = 0; j < n; ++j) {
        Vec<K> rj(b.r_dim());
        for (int k = 0; k < b.r_dim(); ++k) rj[k] = (*d)(k, j);
        Mat<K> ml = fm.left_of(rj);
        for (int mm = 0; mm < nm; ++mm)
          for (int t = 0; t < nm; ++t)
            if (!is_zero(ml(t, mm))) e1ma(t * n + j, mm * n + a) += ml(t, mm);
      }
    }
    if (!dec_ok) {
      rep.add("iso_identity", "λ(M⊗S)ϱ = E1^{M,A}(M⊗S)", false,
              "E(1⊗a) not in R⊗A");
    } else {
      Mat<K> ms = kron(Mat<K>::eye(nm), S);
      rep.add("iso_identity", "λ(M⊗S)ϱ = E1^{M,A}(M⊗S)",
              mul(m.lambda.m, mul(ms, m.rho.m)) == mul(e1ma, ms));
    }
  }
  out.ok = rep.ok();
  return out;
}

// ---------------------------------------------------------------------------
// The verdict battery

template <class K>
struct YdCheckResult {
  Report report;
  bool objects_ok = false;
  bool act_right_agree = false, act_left_agree = false;  // (1.a), (2.a)
  bool norm_rho = false, norm_rho_op = false;            // (1.b), (2.b)
  bool cond_e = false, cond_c = false, cond_a = false;
  bool verdicts_agree = false;
  bool is_yd = false;
  std::optional<YdModule<K>> yd;
};

namespace detail {

// Module-map condition for φ̂_{V,X}: descend the diagonal actions to both
// carriers and compare through φ̂.
template <class K>
bool phi_hat_module_map(const WmbStructure<K>& w, const AModule<K>& v,
                        const AModule<K>& xmod, const PhiHat<K>& ph) {
  auto da_vx = diag_action(w, v, xmod);
  auto da_xv = diag_action(w, xmod, v);
  if (!da_vx.ok || !da_xv.ok) return false;
  Mat<K> ipi_vm = mul(ph.vm.iota.m, ph.vm.pi.m);
  Mat<K> ipi_mv = mul(ph.mv.iota.m, ph.mv.pi.m);
  for (int c = 0; c < w.dim(); ++c) {
    if (mul(mul(ph.vm.pi.m, da_vx.act[c]), ipi_vm) != mul(ph.vm.pi.m, da_vx.act[c]))
      return false;
    if (mul(mul(ph.mv.pi.m, da_xv.act[c]), ipi_mv) != mul(ph.mv.pi.m, da_xv.act[c]))
      return false;
    Mat<K> d_vx = mul(ph.vm.pi.m, mul(da_vx.act[c], ph.vm.iota.m));
    Mat<K> d_xv = mul(ph.mv.pi.m, mul(da_xv.act[c], ph.mv.iota.m));
    if (mul(ph.hat.m, d_vx) != mul(d_xv, ph.hat.m)) return false;
  }
  return true;
}

// Comodule-map condition for φ̂_{X,M}: reconstruct the tensor coactions on
// both carriers and compare through φ̂.
template <class K>
bool phi_hat_comodule_map(const WmbStructure<K>& w, const AComodule<K>& xcom,
                          const AComodule<K>& m, const PhiHat<K>& ph) {
  auto cm_xm = comodule_tensor(w, xcom, m, ph.vm);
  auto cm_mx = comodule_tensor(w, m, xcom, ph.mv);
  if (!cm_xm.ok || !cm_mx.ok) return false;
  Mat<K> fa = kron(ph.hat.m, Mat<K>::eye(w.dim()));
  return mul(fa, cm_xm.comodule.rho.m) == mul(cm_mx.comodule.rho.m, fa) &&
         mul(fa, cm_xm.comodule.lambda.m) == mul(cm_mx.comodule.lambda.m, fa);
}

}  // namespace detail

template <class K>
YdCheckResult<K> check_yd(const WmbStructure<K>& w, const BaseAlgebra<K>& b,
                          const AModule<K>& xmod, const AComodule<K>& xcom,
                          const std::vector<AModule<K>>* extra_modules = nullptr,
                          const std::vector<AComodule<K>>* extra_comodules = nullptr) {
  YdCheckResult<K> out;
  Report& rep = out.report;
  rep.subject = "Yetter-Drinfeld check on " + xmod.name;

  Report rm = check_amodule(w.A(), xmod);
  Report rc = check_acomodule(w, xcom);
  rep.merge(rm);
  rep.merge(rc);
  out.objects_ok = rm.ok() && rc.ok();
  if (!out.objects_ok) return out;

  auto ind_mod = induced_r_actions_module(w, b, xmod);
  auto ind_com = induced_r_actions_comodule(w, b, xcom);
  rep.merge(ind_mod.report);
  rep.merge(ind_com.report);
  if (!ind_mod.ok || !ind_com.ok) return out;

  // (1.a)/(2.a): the two induced R-actions coincide
  out.act_right_agree = true;
  out.act_left_agree = true;
  for (int k = 0; k < b.r_dim(); ++k) {
    if (ind_mod.bimod.right[k] != ind_com.bimod.right[k]) out.act_right_agree = false;
    if (ind_mod.bimod.left[k] != ind_com.bimod.left[k]) out.act_left_agree = false;
  }
  rep.add("right_actions_coincide", "◁ = ◂ (1.a)", out.act_right_agree);
  rep.add("left_actions_coincide", "▷ = ▸ (2.a)", out.act_left_agree);

  // (1.b)/(2.b): E2-normalizations of ϱ
  auto areg = regular_module(w.A());
  auto e2_xa = e2_map(w, xmod, areg);
  auto e2_ax = e2_map(w, areg, xmod);
  if (!e2_xa.ok || !e2_ax.ok) {
    rep.add("e2", "E2 maps well defined", false);
    return out;
  }
  out.norm_rho = mul(e2_xa.map.m, xcom.rho.m) == xcom.rho.m;
  Mat<K> e2_ax_21 =
      leg21(LinMap<K>(e2_ax.map.src, e2_ax.map.tgt, e2_ax.map.m), w.A().space,
            xmod.space, w.A().space, xmod.space)
          .m;
  out.norm_rho_op = mul(xcom.rho.m, e2_ax_21) == xcom.rho.m;
  rep.add("norm_rho", "E2^{X,A}ϱ = ϱ (1.b)", out.norm_rho);
  rep.add("norm_rho_op", "ϱ(E2^{A,X})21 = ϱ (2.b)", out.norm_rho_op);
  rep.add("lemma_1a_iff_1b", "(1.a) ⇔ (1.b)",
          out.act_right_agree == out.norm_rho);
  rep.add("lemma_2a_iff_2b", "(2.a) ⇔ (2.b)",
          out.act_left_agree == out.norm_rho_op);

  // (e) directly
  {
    auto d_xa = diag_action(w, xmod, areg);
    auto d_ax = diag_action(w, areg, xmod);
    bool ok = d_xa.ok && d_ax.ok;
    if (ok) {
      Mat<K> twm = tw_map<K>(w.A().space, xmod.space).m;
      Mat<K> tw2 = tw_map<K>(xmod.space, w.A().space).m;
      for (int c = 0; c < w.dim() && ok; ++c) {
        Mat<K> lhs = mul(xcom.rho.m, mul(twm, mul(d_ax.act[c], tw2)));
        Mat<K> rhs = mul(d_xa.act[c], xcom.rho.m);
        if (lhs != rhs) ok = false;
      }
    }
    out.cond_e = ok;
    rep.add("cond_e", "ϱ[(x⊗a)Δop(b)] = ϱ(x⊗a)Δ(b) (e)", ok);
  }

  // (c): φ̂_{V,X} a module map, for V = (A,μ) and the supplied modules
  {
    bool ok = true;
    std::vector<const AModule<K>*> battery{&areg};
    if (extra_modules)
      for (const auto& v : *extra_modules) battery.push_back(&v);
    for (const auto* v : battery) {
      auto ind_v = induced_r_actions_module(w, b, *v, /*check_firmness=*/false);
      if (!ind_v.ok) {
        ok = false;
        break;
      }
      auto ph = phi_hat(w, b, *v, ind_v.bimod, xcom, ind_com.bimod);
      if (!ph.ok || !detail::phi_hat_module_map(w, *v, xmod, ph)) {
        ok = false;
        break;
      }
    }
    out.cond_c = ok;
    rep.add("cond_c", "φ̂_{V,X} is a module map for all tested V (c)", ok);
  }

  // (a): φ̂_{X,M} a comodule map, for M = (A,T1,T3) and the supplied comodules
  {
    bool ok = true;
    auto creg = regular_comodule(w);
    std::vector<const AComodule<K>*> battery{&creg};
    if (extra_comodules)
      for (const auto& m : *extra_comodules) battery.push_back(&m);
    for (const auto* m : battery) {
      auto ind_m = induced_r_actions_comodule(w, b, *m, /*check_firmness=*/false);
      if (!ind_m.ok) {
        ok = false;
        break;
      }
      auto ph = phi_hat(w, b, xmod, ind_mod.bimod, *m, ind_m.bimod);
      if (!ph.ok || !detail::phi_hat_comodule_map(w, xcom, *m, ph)) {
        ok = false;
        break;
      }
    }
    out.cond_a = ok;
    rep.add("cond_a", "φ̂_{X,M} is a comodule map for all tested M (a)", ok);
  }

  out.verdicts_agree = (out.cond_e == out.cond_c) && (out.cond_e == out.cond_a);
  rep.add("verdicts_agree", "(a) ⇔ (c) ⇔ (e)", out.verdicts_agree);

  out.is_yd = out.objects_ok && out.act_right_agree && out.act_left_agree &&
              out.norm_rho && out.norm_rho_op && out.cond_e && out.cond_c &&
              out.cond_a;
  if (out.is_yd)
    out.yd = YdModule<K>{xmod.name, xmod, xcom, ind_mod.bimod};
  return out;
}

// ---------------------------------------------------------------------------
// The YD tensor product

template <class K>
struct YdTensorResult {
  std::optional<YdModule<K>> yd;
  Report report;
  bool ok = false;
};

template <class K>
YdTensorResult<K> yd_tensor(const WmbStructure<K>& w, const BaseAlgebra<K>& b,
                            const YdModule<K>& x, const YdModule<K>& y) {
  YdTensorResult<K> out;
  Report& rep = out.report;
  rep.subject = "YD tensor " + x.name + " ⊗_R " + y.name;
  auto f = firm_tensor(b, x.bimod, y.bimod);
  rep.merge(f.report);
  if (!f.ok) return out;
  auto mt = module_tensor(w, b, x.module, y.module, f.t);
  rep.merge(mt.report);
  if (!mt.ok) return out;
  auto ct = comodule_tensor(w, x.comodule, y.comodule, f.t);
  rep.merge(ct.report);
  if (!ct.ok) return out;
  auto yc = check_yd(w, b, mt.module, ct.comodule);
  rep.merge(yc.report);
  if (!yc.is_yd) return out;
  out.yd = yc.yd;
  out.yd->name = x.name + "⊗" + y.name;
  out.ok = true;
  return out;
}

// Unit laws: X⊗_R R ≅ X ≅ R⊗_R X through isomorphisms commuting with both
// the action and the coaction.
template <class K>
Report check_unit_laws(const WmbStructure<K>& w, const BaseAlgebra<K>& b,
                       const YdModule<K>& x, const YdModule<K>& r_yd) {
  Report rep;
  rep.subject = "unit laws for " + x.name;
  auto xr = firm_tensor(b, x.bimod, r_yd.bimod);
  auto rx = firm_tensor(b, r_yd.bimod, x.bimod);
  rep.merge(xr.report);
  rep.merge(rx.report);
  if (!xr.ok || !rx.ok) return rep;
  auto ur = unit_iso_right(b, x.bimod, xr.t);
  auto ul = unit_iso_left(b, x.bimod, rx.t);
  rep.add("right_unit_iso", "X⊗_R R ≅ X", ur.ok);
  rep.add("left_unit_iso", "R⊗_R X ≅ X", ul.ok);
  if (!ur.ok || !ul.ok) return rep;

  auto mt_xr = module_tensor(w, b, x.module, r_yd.module, xr.t);
  auto ct_xr = comodule_tensor(w, x.comodule, r_yd.comodule, xr.t);
  auto mt_rx = module_tensor(w, b, r_yd.module, x.module, rx.t);
  auto ct_rx = comodule_tensor(w, r_yd.comodule, x.comodule, rx.t);
  rep.merge(mt_xr.report);
  rep.merge(ct_xr.report);
  rep.merge(mt_rx.report);
  rep.merge(ct_rx.report);
  if (!rep.ok()) return rep;

  const int n = w.dim();
  bool mod_ok = true, com_ok = true;
  for (int c = 0; c < n; ++c) {
    Mat<K> ax(x.module.space.dim, x.module.space.dim);
    for (int t = 0; t < x.module.space.dim; ++t) {
      Vec<K> col = x.module.action(
          kron_vec(basis_vec<K>(x.module.space.dim, t), basis_vec<K>(n, c)));
      for (int u = 0; u < x.module.space.dim; ++u) ax(u, t) = col[u];
    }
    auto slice = [&](const AModule<K>& m, int cc) {
      Mat<K> a(m.space.dim, m.space.dim);
      for (int t = 0; t < m.space.dim; ++t) {
        Vec<K> col = m.action(
            kron_vec(basis_vec<K>(m.space.dim, t), basis_vec<K>(n, cc)));
        for (int u = 0; u < m.space.dim; ++u) a(u, t) = col[u];
      }
      return a;
    };
    if (mul(ur.map.m, slice(mt_xr.module, c)) != mul(ax, ur.map.m)) mod_ok = false;
    if (mul(ul.map.m, slice(mt_rx.module, c)) != mul(ax, ul.map.m)) mod_ok = false;
  }
  Mat<K> ura = kron(ur.map.m, Mat<K>::eye(n));
  Mat<K> ula = kron(ul.map.m, Mat<K>::eye(n));
  if (mul(ura, ct_xr.comodule.rho.m) != mul(x.comodule.rho.m, ura)) com_ok = false;
  if (mul(ura, ct_xr.comodule.lambda.m) != mul(x.comodule.lambda.m, ura)) com_ok = false;
  if (mul(ula, ct_rx.comodule.rho.m) != mul(x.comodule.rho.m, ula)) com_ok = false;
  if (mul(ula, ct_rx.comodule.lambda.m) != mul(x.comodule.lambda.m, ula)) com_ok = false;
  rep.add("unit_module_iso", "unit isos commute with the action", mod_ok);
  rep.add("unit_comodule_iso", "unit isos commute with the coaction", com_ok);
  return rep;
}

// R itself as a Yetter–Drinfeld module.
template <class K>
std::optional<YdModule<K>> r_yd_module(const WmbStructure<K>& w,
                                       const BaseAlgebra<K>& b,
                                       Report* rep_out = nullptr) {
  auto rm = r_module(w, b);
  auto rc = r_comodule(w, b);
  if (!rc) return std::nullopt;
  auto res = check_yd(w, b, rm, *rc);
  if (rep_out) *rep_out = res.report;
  if (!res.is_yd) return std::nullopt;
  res.yd->name = "R";
  return res.yd;
}

}  // namespace wmb
