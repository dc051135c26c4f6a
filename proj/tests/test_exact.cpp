#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wmb/linalg.hpp"

using namespace wmb;
using R = Rational;

namespace {

Mat<R> random_mat(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> d(-2, 2);
  Mat<R> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = R(d(rng));
  return m;
}

}  // namespace

TEST_CASE("tensor spaces") {
  Space p = Space::unlabeled(2, "p"), q = Space::unlabeled(3, "q");
  CHECK(tensor_space(p, q).dim == 6);
  CHECK(tensor_space(Space::unlabeled(0), Space::unlabeled(5)).dim == 0);
  Space e = Space::make({"e"}), f = Space::unlabeled(4, "f");
  Space ef = tensor_space(e, f);
  CHECK(ef.dim == 4);
  CHECK(ef.label(0) == "(e,f0)");
  CHECK(ef.label(3) == "(e,f3)");
}

TEST_CASE("leg permutations") {
  Space two = Space::unlabeled(2);
  SECTION("tw flipped twice is tw") {
    auto tw = tw_map<R>(two, two);
    CHECK(leg21(tw, two, two, two, two) == tw);
  }
  SECTION("identity through the middle") {
    Space p = Space::unlabeled(2, "p"), r = Space::unlabeled(3, "r"),
          q = Space::unlabeled(2, "q");
    auto id2 = LinMap<R>::identity(tensor_space(p, q));
    auto f13 = leg13(id2, p, q, p, q, r);
    CHECK(f13 == LinMap<R>::identity(tensor_space(p, tensor_space(r, q))));
  }
  SECTION("matrix units flip") {
    // f = e12 ⊗ e21 on k²⊗k²; f21 = e21 ⊗ e12
    Mat<R> e12(2, 2), e21(2, 2);
    e12(0, 1) = R(1);
    e21(1, 0) = R(1);
    LinMap<R> f(tensor_space(two, two), tensor_space(two, two), kron(e12, e21));
    LinMap<R> expected(f.src, f.tgt, kron(e21, e12));
    CHECK(leg21(f, two, two, two, two) == expected);
  }
  SECTION("entrywise definition on random maps") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 10; ++iter) {
      Space p = Space::unlabeled(2, "p"), q = Space::unlabeled(3, "q"),
            pp = Space::unlabeled(3, "P"), qq = Space::unlabeled(2, "Q"),
            r = Space::unlabeled(2, "r");
      LinMap<R> f(tensor_space(p, q), tensor_space(pp, qq),
                  random_mat(rng, 6, 6));
      auto f21 = leg21(f, p, q, pp, qq);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c)
            for (int d = 0; d < 3; ++d)
              CHECK(f21.m(b * 3 + a, d * 2 + c) == f.m(a * 2 + b, c * 3 + d));
      auto f13 = leg13(f, p, q, pp, qq, r);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 2; ++b)
          for (int m = 0; m < 2; ++m)
            for (int mm = 0; mm < 2; ++mm)
              for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 3; ++d) {
                  R expect = (m == mm) ? f.m(a * 2 + b, c * 3 + d) : R(0);
                  CHECK(f13.m((a * 2 + mm) * 2 + b, (c * 2 + m) * 3 + d) == expect);
                }
      auto f31 = leg31(f, p, q, pp, qq, r);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 2; ++b)
          for (int m = 0; m < 2; ++m)
            for (int c = 0; c < 2; ++c)
              for (int d = 0; d < 3; ++d)
                CHECK(f31.m((b * 2 + m) * 3 + a, (d * 2 + m) * 2 + c) ==
                      f.m(a * 2 + b, c * 3 + d));
    }
  }
}

TEST_CASE("kernels, images and quotients") {
  Space two = Space::unlabeled(2);
  SECTION("zero and identity") {
    CHECK(kernel(LinMap<R>::zero(two, two)).space.dim == 2);
    CHECK(kernel(LinMap<R>::identity(two)).space.dim == 0);
    auto iq = image_and_quotient(LinMap<R>::identity(two));
    CHECK(iq.image.dim == 2);
    CHECK(iq.coker.dim == 0);
    CHECK(image_and_quotient(LinMap<R>::zero(two, two)).image.dim == 0);
  }
  SECTION("rank-1 map on dim 2") {
    Mat<R> m(2, 2);
    m(0, 0) = R(1);
    m(0, 1) = R(2);
    m(1, 0) = R(2);
    m(1, 1) = R(4);
    auto k = kernel(LinMap<R>(two, two, m));
    REQUIRE(k.space.dim == 1);
    // canonical kernel vector from the rref: (-2, 1)
    CHECK(k.incl.m(0, 0) == R(-2));
    CHECK(k.incl.m(1, 0) == R(1));
  }
  SECTION("rank-2 map from dim 4") {
    Space four = Space::unlabeled(4), three = Space::unlabeled(3, "y");
    Mat<R> m(3, 4);
    m(0, 0) = R(1);
    m(0, 2) = R(1);
    m(1, 1) = R(1);
    m(1, 2) = R(1);
    m(2, 0) = R(1);
    m(2, 1) = R(1);
    m(2, 2) = R(2);
    LinMap<R> f(four, three, m);
    auto iq = image_and_quotient(f);
    CHECK(iq.image.dim == 2);
    CHECK(iq.coker.dim == 1);
    CHECK(mul(iq.proj.m, f.m).is_zero());
  }
  SECTION("rank-nullity on random maps") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 30; ++iter) {
      int rows = 1 + iter % 5, cols = 1 + (iter * 7) % 6;
      LinMap<R> f(Space::unlabeled(cols), Space::unlabeled(rows, "t"),
                  random_mat(rng, rows, cols));
      auto k = kernel(f);
      auto iq = image_and_quotient(f);
      CHECK(k.space.dim + iq.image.dim == cols);
      CHECK(iq.image.dim + iq.coker.dim == rows);
      CHECK(mul(f.m, k.incl.m).is_zero());
      CHECK(mul(iq.proj.m, f.m).is_zero());
    }
  }
}

TEST_CASE("idempotent splitting") {
  Space two = Space::unlabeled(2);
  SECTION("identity and zero") {
    auto s = split_idempotent(LinMap<R>::identity(two));
    CHECK(s.image.dim == 2);
    CHECK(s.p.m == Mat<R>::eye(2));
    CHECK(s.i.m == Mat<R>::eye(2));
    CHECK(split_idempotent(LinMap<R>::zero(two, two)).image.dim == 0);
  }
  SECTION("projection") {
    Mat<R> m(2, 2);
    m(0, 0) = R(1);
    auto s = split_idempotent(LinMap<R>(two, two, m));
    REQUIRE(s.image.dim == 1);
    CHECK(s.i.m(0, 0) == R(1));
    CHECK(s.i.m(1, 0) == R(0));
  }
  SECTION("random idempotents from projections") {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 20; ++iter) {
      // Build e = i∘p with p∘i = id from a random full-rank factor.
      int n = 2 + iter % 3, r = 1 + iter % 2;
      Mat<R> a = random_mat(rng, n, r);
      if (rank(a) < r) continue;
      auto pinv = solve(a, Mat<R>::eye(n));  // may fail; build e differently
      Mat<R> big = random_mat(rng, r, n);
      if (rank(mul(big, a)) < r) continue;
      auto inv = solve(mul(big, a), Mat<R>::eye(r));
      REQUIRE(inv.has_value());
      Mat<R> e = mul(a, mul(*inv, big));  // idempotent of rank r
      Space s = Space::unlabeled(n, "z");
      auto sp = split_idempotent(LinMap<R>(s, s, e));
      CHECK(sp.image.dim == r);
      CHECK(mul(sp.i.m, sp.p.m) == e);
      CHECK(mul(sp.p.m, sp.i.m) == Mat<R>::eye(r));
    }
  }
  SECTION("non-idempotent rejected") {
    Mat<R> m(2, 2);
    m(0, 1) = R(1);
    m(1, 0) = R(1);  // the flip, not idempotent
    CHECK_THROWS(split_idempotent(LinMap<R>(two, two, m)));
  }
}

TEST_CASE("solving linear maps from spanning presentations") {
  std::mt19937 rng(19);
  Space three = Space::unlabeled(3), two = Space::unlabeled(2, "u");
  for (int iter = 0; iter < 15; ++iter) {
    Mat<R> target = random_mat(rng, 2, 3);
    Mat<R> dom = random_mat(rng, 3, 6);
    if (rank(dom) < 3) continue;
    Mat<R> img = mul(target, dom);
    auto got = solve_linear_map(dom, img, three, two);
    REQUIRE(got.has_value());
    CHECK(got->m == target);
  }
  SECTION("inconsistent assignments rejected") {
    Mat<R> dom(2, 2), img(2, 2);
    dom(0, 0) = R(1);
    dom(0, 1) = R(1);  // same vector twice
    img(0, 0) = R(1);  // mapped to different images
    img(1, 1) = R(1);
    CHECK_FALSE(solve_linear_map(dom, img, Space::unlabeled(2),
                                 Space::unlabeled(2, "v"))
                    .has_value());
  }
}

TEST_CASE("prime field arithmetic") {
  Fp a(3, 7), b(5, 7);
  CHECK(a + b == Fp(1, 7));
  CHECK(a * b == Fp(1, 7));
  CHECK((a / b).raw() == 2);  // 3·5⁻¹ = 3·3 = 9 = 2 (mod 7)
  CHECK(a - b == Fp(5, 7));
  CHECK(Fp(6, 7) + Fp(1) == Fp(0, 7));
  SECTION("kernel over F7") {
    Space two = Space::unlabeled(2);
    Mat<Fp> m(2, 2);
    m(0, 0) = Fp(1, 7);
    m(0, 1) = Fp(2, 7);
    m(1, 0) = Fp(4, 7);
    m(1, 1) = Fp(1, 7);  // det = 1−8 = 0 mod 7
    CHECK(kernel(LinMap<Fp>(two, two, m)).space.dim == 1);
  }
}
