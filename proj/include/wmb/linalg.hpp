#pragma once

// Exact dense linear algebra: matrices over a field K, linear maps between
// labeled spaces, reduced row echelon form, kernels, images, quotients,
// idempotent splitting and multi-RHS solves. Pivots are always chosen in
// ascending column (i.e. basis label) order, so every derived basis is
// deterministic.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wmb/field.hpp"
#include "wmb/space.hpp"

namespace wmb {

template <class K>
using Vec = std::vector<K>;

template <class K>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  K& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const K& operator()(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  static Mat eye(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (!wmb::is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i)
      if (!(x.a[i] == y.a[i])) return false;
    return true;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

template <class K>
Mat<K> mul(const Mat<K>& x, const Mat<K>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mul: shape mismatch");
  Mat<K> z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const K& xik = x(i, k);
      if (is_zero(xik)) continue;
      for (int j = 0; j < y.cols; ++j) {
        const K& ykj = y(k, j);
        if (is_zero(ykj)) continue;
        z(i, j) += xik * ykj;
      }
    }
  return z;
}

template <class K>
Mat<K> add(const Mat<K>& x, const Mat<K>& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("add: shape mismatch");
  Mat<K> z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

template <class K>
Mat<K> sub(const Mat<K>& x, const Mat<K>& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("sub: shape mismatch");
  Mat<K> z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

template <class K>
Mat<K> scale(const K& c, const Mat<K>& x) {
  Mat<K> z = x;
  for (auto& v : z.a) v *= c;
  return z;
}

template <class K>
Vec<K> mat_apply(const Mat<K>& m, const Vec<K>& v) {
  if (m.cols != static_cast<int>(v.size()))
    throw std::invalid_argument("apply: shape mismatch");
  Vec<K> out(m.rows, K(0));
  for (int j = 0; j < m.cols; ++j) {
    if (is_zero(v[j])) continue;
    for (int i = 0; i < m.rows; ++i) {
      const K& mij = m(i, j);
      if (!is_zero(mij)) out[i] += mij * v[j];
    }
  }
  return out;
}

// Kronecker product, row-major in the first factor on both sides.
template <class K>
Mat<K> kron(const Mat<K>& x, const Mat<K>& y) {
  Mat<K> z(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      const K& xij = x(i, j);
      if (is_zero(xij)) continue;
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l) {
          const K& ykl = y(k, l);
          if (!is_zero(ykl)) z(i * y.rows + k, j * y.cols + l) = xij * ykl;
        }
    }
  return z;
}

template <class K>
Vec<K> vec_add(const Vec<K>& x, const Vec<K>& y) {
  Vec<K> z = x;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += y[i];
  return z;
}

template <class K>
Vec<K> vec_sub(const Vec<K>& x, const Vec<K>& y) {
  Vec<K> z = x;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] -= y[i];
  return z;
}

template <class K>
Vec<K> vec_scale(const K& c, const Vec<K>& x) {
  Vec<K> z = x;
  for (auto& v : z) v *= c;
  return z;
}

template <class K>
bool vec_is_zero(const Vec<K>& x) {
  for (const auto& v : x)
    if (!is_zero(v)) return false;
  return true;
}

template <class K>
Vec<K> basis_vec(int dim, int i) {
  Vec<K> v(dim, K(0));
  v[i] = K(1);
  return v;
}

template <class K>
Vec<K> kron_vec(const Vec<K>& x, const Vec<K>& y) {
  Vec<K> z(x.size() * y.size(), K(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!is_zero(y[j])) z[i * y.size() + j] = x[i] * y[j];
  }
  return z;
}

template <class K>
std::string format_vec(const Space& s, const Vec<K>& v) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < s.dim; ++i) {
    if (is_zero(v[i])) continue;
    if (!first) os << " + ";
    first = false;
    if (!is_one(v[i])) os << scalar_str(v[i]) << "*";
    os << s.label(i);
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// Linear maps

template <class K>
struct LinMap {
  Space src, tgt;
  Mat<K> m;  // tgt.dim × src.dim

  LinMap() = default;
  LinMap(Space s, Space t) : src(std::move(s)), tgt(std::move(t)), m(tgt.dim, src.dim) {}
  LinMap(Space s, Space t, Mat<K> mat)
      : src(std::move(s)), tgt(std::move(t)), m(std::move(mat)) {
    if (m.rows != tgt.dim || m.cols != src.dim)
      throw std::invalid_argument("LinMap: matrix shape does not match spaces");
  }

  static LinMap identity(const Space& s) { return LinMap(s, s, Mat<K>::eye(s.dim)); }
  static LinMap zero(const Space& s, const Space& t) { return LinMap(s, t); }

  Vec<K> operator()(const Vec<K>& v) const { return mat_apply(m, v); }
  Vec<K> column(int j) const {
    Vec<K> v(tgt.dim);
    for (int i = 0; i < tgt.dim; ++i) v[i] = m(i, j);
    return v;
  }
  bool is_zero() const { return m.is_zero(); }

  friend bool operator==(const LinMap& f, const LinMap& g) { return f.m == g.m; }
  friend bool operator!=(const LinMap& f, const LinMap& g) { return !(f.m == g.m); }
};

template <class K>
LinMap<K> compose(const LinMap<K>& f, const LinMap<K>& g) {
  if (g.tgt.dim != f.src.dim) throw std::invalid_argument("compose: shape mismatch");
  return LinMap<K>(g.src, f.tgt, mul(f.m, g.m));
}

template <class K>
LinMap<K> add(const LinMap<K>& f, const LinMap<K>& g) {
  return LinMap<K>(f.src, f.tgt, add(f.m, g.m));
}

template <class K>
LinMap<K> sub(const LinMap<K>& f, const LinMap<K>& g) {
  return LinMap<K>(f.src, f.tgt, sub(f.m, g.m));
}

template <class K>
LinMap<K> scale(const K& c, const LinMap<K>& f) {
  return LinMap<K>(f.src, f.tgt, scale(c, f.m));
}

template <class K>
LinMap<K> tensor_map(const LinMap<K>& f, const LinMap<K>& g) {
  return LinMap<K>(tensor_space(f.src, g.src), tensor_space(f.tgt, g.tgt),
                   kron(f.m, g.m));
}

// Flip map tw : P⊗Q → Q⊗P.
template <class K>
LinMap<K> tw_map(const Space& p, const Space& q) {
  LinMap<K> t(tensor_space(p, q), tensor_space(q, p));
  for (int i = 0; i < p.dim; ++i)
    for (int j = 0; j < q.dim; ++j) t.m(j * p.dim + i, i * q.dim + j) = K(1);
  return t;
}

// Leg numbering for maps on two tensor factors. For f : P⊗Q → P'⊗Q':
//   f21 = tw∘f∘tw : Q⊗P → Q'⊗P'
//   f13 = (P'⊗tw)(f⊗R)(P⊗tw) : P⊗R⊗Q → P'⊗R⊗Q'
//   f31 = (Q'⊗tw)(f21⊗R)(Q⊗tw) : Q⊗R⊗P → Q'⊗R⊗P'
template <class K>
LinMap<K> leg21(const LinMap<K>& f, const Space& p, const Space& q,
                const Space& pp, const Space& qq) {
  return compose(tw_map<K>(pp, qq), compose(f, tw_map<K>(q, p)));
}

template <class K>
LinMap<K> leg13(const LinMap<K>& f, const Space& p, const Space& q,
                const Space& pp, const Space& qq, const Space& mid) {
  auto pre = tensor_map(LinMap<K>::identity(p), tw_map<K>(mid, q));
  auto post = tensor_map(LinMap<K>::identity(pp), tw_map<K>(qq, mid));
  auto fmid = tensor_map(f, LinMap<K>::identity(mid));
  return compose(post, compose(fmid, pre));
}

template <class K>
LinMap<K> leg31(const LinMap<K>& f, const Space& p, const Space& q,
                const Space& pp, const Space& qq, const Space& mid) {
  return leg13(leg21(f, p, q, pp, qq), q, p, qq, pp, mid);
}

enum class LegPattern { p21, p13, p31 };

template <class K>
LinMap<K> leg_permute(const LinMap<K>& f, LegPattern pat, const Space& p,
                      const Space& q, const Space& pp, const Space& qq,
                      const Space& mid = Space{}) {
  if (f.src.dim != p.dim * q.dim || f.tgt.dim != pp.dim * qq.dim)
    throw std::invalid_argument("leg_permute: factorization mismatch");
  switch (pat) {
    case LegPattern::p21:
      return leg21(f, p, q, pp, qq);
    case LegPattern::p13:
      return leg13(f, p, q, pp, qq, mid);
    case LegPattern::p31:
      return leg31(f, p, q, pp, qq, mid);
  }
  throw std::logic_error("leg_permute: bad pattern");
}

// ---------------------------------------------------------------------------
// Row reduction and everything built on it

template <class K>
struct Rref {
  Mat<K> mat;
  std::vector<int> pivot_cols;
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

template <class K>
Rref<K> rref(Mat<K> m) {
  Rref<K> out;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (!is_zero(m(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    K inv = K(1) / m(r, c);
    for (int j = c; j < m.cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const K f = m(i, c);
      if (is_zero(f)) continue;
      for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.mat = std::move(m);
  return out;
}

template <class K>
int rank(const Mat<K>& m) {
  return rref(m).rank();
}

// Canonical basis of {x : m x = 0}, one column per free column of m.
template <class K>
Mat<K> kernel_basis(const Mat<K>& m) {
  Rref<K> r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat<K> ker(m.cols, static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    ker(fc, static_cast<int>(k)) = K(1);
    for (int i = 0; i < r.rank(); ++i)
      ker(r.pivot_cols[i], static_cast<int>(k)) = -r.mat(i, fc);
  }
  return ker;
}

// Solve a X = b for all columns of b at once; nullopt when inconsistent.
template <class K>
std::optional<Mat<K>> solve(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows != b.rows) throw std::invalid_argument("solve: shape mismatch");
  Mat<K> aug(a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
    for (int j = 0; j < b.cols; ++j) aug(i, a.cols + j) = b(i, j);
  }
  Rref<K> r = rref(std::move(aug));
  for (int c : r.pivot_cols)
    if (c >= a.cols) return std::nullopt;
  Mat<K> x(a.cols, b.cols);
  for (int i = 0; i < r.rank(); ++i) {
    int pc = r.pivot_cols[i];
    for (int j = 0; j < b.cols; ++j) x(pc, j) = r.mat(i, a.cols + j);
  }
  return x;
}

template <class K>
std::optional<Vec<K>> solve_vec(const Mat<K>& a, const Vec<K>& b) {
  Mat<K> bm(static_cast<int>(b.size()), 1);
  for (std::size_t i = 0; i < b.size(); ++i) bm(static_cast<int>(i), 0) = b[i];
  auto x = solve(a, bm);
  if (!x) return std::nullopt;
  Vec<K> out(a.cols);
  for (int i = 0; i < a.cols; ++i) out[i] = (*x)(i, 0);
  return out;
}

// Canonical row space: RREF with zero rows dropped. Two row spans are equal
// iff their canonical forms coincide.
template <class K>
Mat<K> row_space(const Mat<K>& m) {
  Rref<K> r = rref(m);
  Mat<K> out(r.rank(), m.cols);
  for (int i = 0; i < r.rank(); ++i)
    for (int j = 0; j < m.cols; ++j) out(i, j) = r.mat(i, j);
  return out;
}

template <class K>
Mat<K> transpose(const Mat<K>& m) {
  Mat<K> t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}

template <class K>
bool same_col_span(const Mat<K>& a, const Mat<K>& b) {
  return row_space(transpose(a)) == row_space(transpose(b));
}

template <class K>
bool cols_contained_in_span(const Mat<K>& a, const Mat<K>& sp) {
  return solve(sp, a).has_value();
}

// Columns of `cols` interpreted as vectors of `space`; matrix assembled from
// a list of vectors.
template <class K>
Mat<K> mat_from_cols(const std::vector<Vec<K>>& cols, int dim) {
  Mat<K> m(dim, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < dim; ++i) m(i, static_cast<int>(j)) = cols[j][i];
  return m;
}

// ---------------------------------------------------------------------------
// Kernel / image / quotient of linear maps

template <class K>
struct KernelResult {
  Space space;
  LinMap<K> incl;  // space → src
};

template <class K>
KernelResult<K> kernel(const LinMap<K>& f) {
  Mat<K> kb = kernel_basis(f.m);
  KernelResult<K> out;
  out.space = Space::unlabeled(kb.cols, "ker");
  out.incl = LinMap<K>(out.space, f.src, std::move(kb));
  return out;
}

template <class K>
struct ImageQuotient {
  Space image;
  LinMap<K> incl;  // image → tgt, columns are the pivot columns of f
  Space coker;
  LinMap<K> proj;  // tgt → coker, proj∘f = 0
};

// Pivot-column image basis plus a complement-based cokernel projection.
template <class K>
ImageQuotient<K> image_and_quotient(const LinMap<K>& f) {
  Rref<K> rt = rref(transpose(f.m));
  // rt pivots index target coordinates hit by the image; rank = dim image.
  Rref<K> rc = rref(f.m);
  ImageQuotient<K> out;
  int rk = rc.rank();
  out.image = Space::unlabeled(rk, "im");
  Mat<K> incl(f.tgt.dim, rk);
  for (int j = 0; j < rk; ++j)
    for (int i = 0; i < f.tgt.dim; ++i) incl(i, j) = f.m(i, rc.pivot_cols[j]);
  out.incl = LinMap<K>(out.image, f.tgt, std::move(incl));

  // Complete the image basis with standard basis vectors, greedily in label
  // order; the quotient projection reads off the complement coordinates.
  Mat<K> basis(f.tgt.dim, f.tgt.dim);
  std::vector<int> extra;
  {
    Mat<K> cur = out.incl.m;
    int have = rk;
    for (int e = 0; e < f.tgt.dim && have < f.tgt.dim; ++e) {
      Mat<K> cand(f.tgt.dim, have + 1);
      for (int i = 0; i < f.tgt.dim; ++i)
        for (int j = 0; j < have; ++j) cand(i, j) = cur(i, j);
      cand(e, have) = K(1);
      if (rank(cand) == have + 1) {
        cur = std::move(cand);
        ++have;
        extra.push_back(e);
      }
    }
    basis = cur;
  }
  out.coker = Space::unlabeled(static_cast<int>(extra.size()), "q");
  // Coordinates w.r.t. the completed basis: coords = basis⁻¹; keep last rows.
  auto inv = solve(basis, Mat<K>::eye(f.tgt.dim));
  if (!inv) throw std::logic_error("image_and_quotient: basis not invertible");
  Mat<K> proj(out.coker.dim, f.tgt.dim);
  for (int i = 0; i < out.coker.dim; ++i)
    for (int j = 0; j < f.tgt.dim; ++j) proj(i, j) = (*inv)(rk + i, j);
  out.proj = LinMap<K>(f.tgt, out.coker, std::move(proj));
  return out;
}

template <class K>
struct SplitIdempotentResult {
  Space image;
  LinMap<K> p;  // src → image
  LinMap<K> i;  // image → src, i∘p = e, p∘i = id
};

template <class K>
SplitIdempotentResult<K> split_idempotent(const LinMap<K>& e) {
  if (e.src.dim != e.tgt.dim || mul(e.m, e.m) != e.m)
    throw std::invalid_argument("split_idempotent: input is not idempotent");
  Rref<K> rc = rref(e.m);
  int rk = rc.rank();
  SplitIdempotentResult<K> out;
  out.image = Space::unlabeled(rk, "s");
  Mat<K> incl(e.src.dim, rk);
  for (int j = 0; j < rk; ++j)
    for (int i = 0; i < e.src.dim; ++i) incl(i, j) = e.m(i, rc.pivot_cols[j]);
  out.i = LinMap<K>(out.image, e.src, incl);
  auto p = solve(incl, e.m);
  if (!p) throw std::logic_error("split_idempotent: projection solve failed");
  out.p = LinMap<K>(e.src, out.image, std::move(*p));
  if (mul(out.i.m, out.p.m) != e.m || mul(out.p.m, out.i.m) != Mat<K>::eye(rk))
    throw std::logic_error("split_idempotent: factorization check failed");
  return out;
}

// Determine the linear map sending the j-th column of `domain_cols` to the
// j-th column of `image_cols`. The domain columns must span `dom`; returns
// nullopt when the assignments are inconsistent (ill-defined map).
template <class K>
std::optional<LinMap<K>> solve_linear_map(const Mat<K>& domain_cols,
                                          const Mat<K>& image_cols,
                                          const Space& dom, const Space& img) {
  if (domain_cols.cols != image_cols.cols)
    throw std::invalid_argument("solve_linear_map: column count mismatch");
  if (rank(domain_cols) != dom.dim) return std::nullopt;  // not spanning
  // M · D = G  ⇔  Dᵀ Mᵀ = Gᵀ.
  auto xt = solve(transpose(domain_cols), transpose(image_cols));
  if (!xt) return std::nullopt;
  return LinMap<K>(dom, img, transpose(*xt));
}

}  // namespace wmb
