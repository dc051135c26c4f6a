#pragma once

// Firm R-bimodules and the module tensor product ⊗_R over the coseparable
// base. The canonical epimorphism π : V⊗W → V⊗_R W has the section
// ι(v·r ⊗_R w) = (v·(-) ⊗ (-)·w)δ(r), so ι∘π is a computable idempotent.

#include <optional>
#include <string>
#include <vector>

#include "wmb/base_algebra.hpp"

namespace wmb {

template <class K>
struct FirmBimodule {
  std::string name;
  Space space;
  std::vector<Mat<K>> left;   // per R-basis r: r▷(-) : V → V
  std::vector<Mat<K>> right;  // (-)◁r

  Mat<K> left_of(const Vec<K>& r) const {
    Mat<K> m(space.dim, space.dim);
    for (std::size_t k = 0; k < left.size(); ++k)
      if (!is_zero(r[k])) m = add(m, scale(r[k], left[k]));
    return m;
  }
  Mat<K> right_of(const Vec<K>& r) const {
    Mat<K> m(space.dim, space.dim);
    for (std::size_t k = 0; k < right.size(); ++k)
      if (!is_zero(r[k])) m = add(m, scale(r[k], right[k]));
    return m;
  }
};

// R as a bimodule over itself, by multiplication.
template <class K>
FirmBimodule<K> r_regular_bimodule(const BaseAlgebra<K>& b) {
  FirmBimodule<K> f;
  f.name = "R";
  f.space = b.r_space;
  const int rd = b.r_dim();
  for (int k = 0; k < rd; ++k) {
    Mat<K> l(rd, rd), r(rd, rd);
    for (int c = 0; c < rd; ++c) {
      Vec<K> lv = b.r_mul2(basis_vec<K>(rd, k), basis_vec<K>(rd, c));
      Vec<K> rv = b.r_mul2(basis_vec<K>(rd, c), basis_vec<K>(rd, k));
      for (int t = 0; t < rd; ++t) {
        l(t, c) = lv[t];
        r(t, c) = rv[t];
      }
    }
    f.left.push_back(std::move(l));
    f.right.push_back(std::move(r));
  }
  return f;
}

template <class K>
Report check_bimodule_laws(const BaseAlgebra<K>& b, const FirmBimodule<K>& f) {
  Report rep;
  rep.subject = "R-bimodule laws on " + f.name;
  const int rd = b.r_dim();
  bool assoc_r = true, assoc_l = true, comm = true;
  for (int i = 0; i < rd; ++i)
    for (int j = 0; j < rd; ++j) {
      Vec<K> rs = b.r_mul2(basis_vec<K>(rd, i), basis_vec<K>(rd, j));
      if (mul(f.right[j], f.right[i]) != f.right_of(rs)) assoc_r = false;
      if (mul(f.left[i], f.left[j]) != f.left_of(rs)) assoc_l = false;
      if (mul(f.left[i], f.right[j]) != mul(f.right[j], f.left[i])) comm = false;
    }
  rep.add("right_associative", "(v◁r)◁s = v◁(rs)", assoc_r);
  rep.add("left_associative", "r▷(s▷v) = (rs)▷v", assoc_l);
  rep.add("actions_commute", "r▷(v◁s) = (r▷v)◁s", comm);
  return rep;
}

// ---------------------------------------------------------------------------
// The firm tensor product

template <class K>
struct RTensor {
  Space carrier;
  LinMap<K> pi;    // V⊗W → carrier
  LinMap<K> iota;  // carrier → V⊗W
  FirmBimodule<K> bimod;  // induced bimodule structure on the carrier
};

template <class K>
struct RTensorResult {
  RTensor<K> t;
  Report report;
  bool ok = false;
};

template <class K>
RTensorResult<K> firm_tensor(const BaseAlgebra<K>& b, const FirmBimodule<K>& v,
                             const FirmBimodule<K>& w) {
  RTensorResult<K> out;
  Report& rep = out.report;
  rep.subject = "firm tensor " + v.name + " ⊗_R " + w.name;
  const int rd = b.r_dim();
  const int nv = v.space.dim, nw = w.space.dim;
  const int nvw = nv * nw;

  // relations (v◁r)⊗w − v⊗(r▷w)
  Mat<K> rel(nvw, nv * nw * rd);
  for (int x = 0; x < nv; ++x)
    for (int y = 0; y < nw; ++y)
      for (int k = 0; k < rd; ++k) {
        int col = (x * nw + y) * rd + k;
        for (int t = 0; t < nv; ++t) {
          const K& c = v.right[k](t, x);
          if (!is_zero(c)) rel(t * nw + y, col) += c;
        }
        for (int t = 0; t < nw; ++t) {
          const K& c = w.left[k](t, y);
          if (!is_zero(c)) rel(x * nw + t, col) -= c;
        }
      }
  Space vw = tensor_space(v.space, w.space);
  auto iq = image_and_quotient(LinMap<K>(vw, vw, std::move(rel)));
  out.t.carrier = Space::unlabeled(iq.coker.dim, "t");
  out.t.pi = LinMap<K>(vw, out.t.carrier, iq.proj.m);

  // ι from δ: ι(π((v◁r)⊗w)) = Σ (v◁r1)⊗(r2▷w)
  std::vector<Vec<K>> dom, img;
  for (int x = 0; x < nv; ++x)
    for (int y = 0; y < nw; ++y)
      for (int k = 0; k < rd; ++k) {
        Vec<K> vr(nv);
        for (int t = 0; t < nv; ++t) vr[t] = v.right[k](t, x);
        dom.push_back(out.t.pi(kron_vec(vr, basis_vec<K>(nw, y))));
        Vec<K> d = b.delta(basis_vec<K>(rd, k));
        Vec<K> im(nvw, K(0));
        for (int p = 0; p < rd; ++p)
          for (int q = 0; q < rd; ++q) {
            const K& c = d[p * rd + q];
            if (is_zero(c)) continue;
            Vec<K> v1(nv), w1(nw);
            for (int t = 0; t < nv; ++t) v1[t] = v.right[p](t, x);
            for (int t = 0; t < nw; ++t) w1[t] = w.left[q](t, y);
            im = vec_add(im, vec_scale(c, kron_vec(v1, w1)));
          }
        img.push_back(std::move(im));
      }
  auto iota = solve_linear_map(mat_from_cols(dom, out.t.carrier.dim),
                               mat_from_cols(img, nvw), out.t.carrier, vw);
  rep.add("iota_defined", "ι(v·r ⊗_R w) = (v·(-)⊗(-)·w)δ(r) well defined",
          iota.has_value());
  if (!iota) return out;
  out.t.iota = std::move(*iota);
  rep.add("pi_iota", "π∘ι = id", mul(out.t.pi.m, out.t.iota.m) ==
                                     Mat<K>::eye(out.t.carrier.dim));

  // induced bimodule structure on the carrier
  {
    bool ok = true;
    for (int k = 0; k < rd && ok; ++k) {
      Mat<K> lk = kron(v.left[k], Mat<K>::eye(nw));
      Mat<K> rk = kron(Mat<K>::eye(nv), w.right[k]);
      Mat<K> ipi = mul(out.t.iota.m, out.t.pi.m);
      // descent: π∘(r▷⊗id) factors through π
      if (mul(mul(out.t.pi.m, lk), ipi) != mul(out.t.pi.m, lk) ||
          mul(mul(out.t.pi.m, rk), ipi) != mul(out.t.pi.m, rk)) {
        ok = false;
        break;
      }
      out.t.bimod.left.push_back(mul(out.t.pi.m, mul(lk, out.t.iota.m)));
      out.t.bimod.right.push_back(mul(out.t.pi.m, mul(rk, out.t.iota.m)));
    }
    rep.add("bimodule_descends", "R-actions descend to V⊗_R W", ok);
    if (!ok) return out;
    out.t.bimod.name = v.name + "⊗" + w.name;
    out.t.bimod.space = out.t.carrier;
  }
  out.ok = rep.ok();
  return out;
}

// Unit identifications. uR : X⊗_R R → X, [x⊗r] ↦ x◁r and
// uL : R⊗_R X → X, [r⊗x] ↦ r▷x; both must be bijective for a firm bimodule.
template <class K>
struct UnitIso {
  bool ok = false;
  LinMap<K> map;  // carrier → X
};

template <class K>
UnitIso<K> unit_iso_right(const BaseAlgebra<K>& b, const FirmBimodule<K>& x,
                          const RTensor<K>& xr) {
  UnitIso<K> out;
  const int rd = b.r_dim(), nx = x.space.dim;
  std::vector<Vec<K>> dom, img;
  for (int i = 0; i < nx; ++i)
    for (int k = 0; k < rd; ++k) {
      dom.push_back(xr.pi(kron_vec(basis_vec<K>(nx, i), basis_vec<K>(rd, k))));
      Vec<K> v(nx);
      for (int t = 0; t < nx; ++t) v[t] = x.right[k](t, i);
      img.push_back(std::move(v));
    }
  auto m = solve_linear_map(mat_from_cols(dom, xr.carrier.dim),
                            mat_from_cols(img, nx), xr.carrier, x.space);
  if (!m) return out;
  out.map = std::move(*m);
  out.ok = xr.carrier.dim == nx && rank(out.map.m) == nx;
  return out;
}

template <class K>
UnitIso<K> unit_iso_left(const BaseAlgebra<K>& b, const FirmBimodule<K>& x,
                         const RTensor<K>& rx) {
  UnitIso<K> out;
  const int rd = b.r_dim(), nx = x.space.dim;
  std::vector<Vec<K>> dom, img;
  for (int k = 0; k < rd; ++k)
    for (int i = 0; i < nx; ++i) {
      dom.push_back(rx.pi(kron_vec(basis_vec<K>(rd, k), basis_vec<K>(nx, i))));
      Vec<K> v(nx);
      for (int t = 0; t < nx; ++t) v[t] = x.left[k](t, i);
      img.push_back(std::move(v));
    }
  auto m = solve_linear_map(mat_from_cols(dom, rx.carrier.dim),
                            mat_from_cols(img, nx), rx.carrier, x.space);
  if (!m) return out;
  out.map = std::move(*m);
  out.ok = rx.carrier.dim == nx && rank(out.map.m) == nx;
  return out;
}

template <class K>
Report check_firm(const BaseAlgebra<K>& b, const FirmBimodule<K>& x) {
  Report rep;
  rep.subject = "firmness of " + x.name;
  rep.merge(check_bimodule_laws(b, x));
  FirmBimodule<K> r = r_regular_bimodule(b);
  auto xr = firm_tensor(b, x, r);
  auto rx = firm_tensor(b, r, x);
  rep.merge(xr.report);
  rep.merge(rx.report);
  if (!xr.ok || !rx.ok) return rep;
  rep.add("firm_right", "X⊗_R R ≅ X via the action",
          unit_iso_right(b, x, xr.t).ok);
  rep.add("firm_left", "R⊗_R X ≅ X via the action", unit_iso_left(b, x, rx.t).ok);
  return rep;
}

// ---------------------------------------------------------------------------
// Triple products and the associator. ι3 from the left and right bracketing
// must agree after the canonical identification α.

template <class K>
struct TripleTensor {
  RTensor<K> vw, vw_z;  // (V⊗W), (V⊗W)⊗Z
  RTensor<K> wz, v_wz;  // (W⊗Z), V⊗(W⊗Z)
  LinMap<K> pi3_left, pi3_right;    // V⊗W⊗Z → carriers
  LinMap<K> iota3_left, iota3_right;
  LinMap<K> assoc;  // (V⊗W)⊗Z → V⊗(W⊗Z) carrier map
  bool ok = false;
  Report report;
};

template <class K>
TripleTensor<K> triple_tensor(const BaseAlgebra<K>& b, const FirmBimodule<K>& v,
                              const FirmBimodule<K>& w, const FirmBimodule<K>& z) {
  TripleTensor<K> out;
  Report& rep = out.report;
  rep.subject = "triple tensor " + v.name + "," + w.name + "," + z.name;
  auto vw = firm_tensor(b, v, w);
  auto wz = firm_tensor(b, w, z);
  rep.merge(vw.report);
  rep.merge(wz.report);
  if (!vw.ok || !wz.ok) return out;
  auto vw_z = firm_tensor(b, vw.t.bimod, z);
  auto v_wz = firm_tensor(b, v, wz.t.bimod);
  rep.merge(vw_z.report);
  rep.merge(v_wz.report);
  if (!vw_z.ok || !v_wz.ok) return out;
  out.vw = vw.t;
  out.wz = wz.t;
  out.vw_z = vw_z.t;
  out.v_wz = v_wz.t;

  auto idz = Mat<K>::eye(z.space.dim);
  auto idv = Mat<K>::eye(v.space.dim);
  out.pi3_left = LinMap<K>(tensor_space(tensor_space(v.space, w.space), z.space),
                           out.vw_z.carrier,
                           mul(out.vw_z.pi.m, kron(out.vw.pi.m, idz)));
  out.pi3_right = LinMap<K>(out.pi3_left.src, out.v_wz.carrier,
                            mul(out.v_wz.pi.m, kron(idv, out.wz.pi.m)));
  out.iota3_left = LinMap<K>(out.vw_z.carrier, out.pi3_left.src,
                             mul(kron(out.vw.iota.m, idz), out.vw_z.iota.m));
  out.iota3_right = LinMap<K>(out.v_wz.carrier, out.pi3_left.src,
                              mul(kron(idv, out.wz.iota.m), out.v_wz.iota.m));
  out.assoc = LinMap<K>(out.vw_z.carrier, out.v_wz.carrier,
                        mul(out.pi3_right.m, out.iota3_left.m));
  bool sect = mul(out.iota3_right.m, out.assoc.m) == out.iota3_left.m;
  rep.add("iota3_compatible", "(ι_{V,W}⊗Z)ι = (V⊗ι_{W,Z})ι after α", sect);
  bool proj = mul(out.assoc.m, out.pi3_left.m) == out.pi3_right.m;
  rep.add("pi3_compatible", "α∘π3_left = π3_right", proj);
  bool bij = out.vw_z.carrier.dim == out.v_wz.carrier.dim &&
             rank(out.assoc.m) == out.vw_z.carrier.dim;
  rep.add("assoc_bijective", "α is a bijection", bij);
  out.ok = rep.ok();
  return out;
}

}  // namespace wmb
