#include <catch2/catch_amalgamated.hpp>

#include "wmb/groupoid.hpp"

using namespace wmb;
using R = Rational;

namespace {

Algebra<R> square_zero() {
  Space s = Space::make({"x"});
  return Algebra<R>::make(s, LinMap<R>::zero(tensor_space(s, s), s));
}

Algebra<R> zero_algebra() {
  Space s = Space::unlabeled(0);
  return Algebra<R>::make(s, LinMap<R>::zero(tensor_space(s, s), s));
}

}  // namespace

TEST_CASE("algebra property checks") {
  auto kz2 = groupoid_algebra<R>(cyclic_group(2));
  auto kp2 = groupoid_algebra<R>(pair_groupoid(2));
  CHECK(check_associativity(kz2.A()).pass);
  CHECK(check_idempotent_algebra(kz2.A()).ok());
  CHECK(check_nondegenerate(kz2.A()).ok());
  CHECK(check_idempotent_algebra(kp2.A()).ok());
  CHECK(check_nondegenerate(kp2.A()).ok());

  auto sq = square_zero();
  CHECK(check_associativity(sq).pass);
  CHECK_FALSE(check_idempotent_algebra(sq).ok());
  CHECK_FALSE(check_nondegenerate(sq).ok());
}

TEST_CASE("multiplier algebra of unital corpus algebras") {
  for (auto* g : {"z2", "p2"}) {
    auto w = std::string(g) == "z2" ? groupoid_algebra<R>(cyclic_group(2))
                                    : groupoid_algebra<R>(pair_groupoid(2));
    const auto& ma = w.ma;
    CHECK(ma.carrier.dim == w.dim());
    CHECK(ma.embedding_bijective);
    REQUIRE(ma.unit_in_A.has_value());
    // the unit acts as identity
    Multiplier<R> one = ma.combine(ma.unit);
    CHECK(one.left.m == Mat<R>::eye(w.dim()));
    CHECK(one.right.m == Mat<R>::eye(w.dim()));
  }
  CHECK(multiplier_algebra(zero_algebra()).carrier.dim == 0);
}

TEST_CASE("general multiplier algebra solve agrees with the unital one") {
  // Run the compatibility-system path on kZ2 by bypassing the unit fast
  // path: solve the joint system directly and compare the carrier.
  auto w = groupoid_algebra<R>(cyclic_group(2));
  const auto& a = w.A();
  const int n = 2, nn = 4;
  Mat<R> sys(n * n * n, 2 * nn);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r) {
        int row = (i * n + j) * n + r;
        for (int c = 0; c < n; ++c) {
          sys(row, c * n + j) -= a.lmul[i](r, c);
          sys(row, nn + c * n + i) += a.rmul[j](r, c);
        }
      }
  CHECK(kernel_basis(sys).cols == 2);  // M(kZ2) ≅ kZ2
}

TEST_CASE("multiplier arithmetic in kP2") {
  auto w = groupoid_algebra<R>(pair_groupoid(2));
  const auto& a = w.A();
  const int e11 = 0, e12 = 1;
  auto m11 = embed_multiplier(a, basis_vec<R>(4, e11));
  auto m12 = embed_multiplier(a, basis_vec<R>(4, e12));
  auto prod = mult_multipliers(m11, m12);
  auto expect = embed_multiplier(a, basis_vec<R>(4, e12));
  CHECK(prod.left.m == expect.left.m);
  CHECK(prod.right.m == expect.right.m);
  CHECK(multiplier_compatible(a, prod));

  auto one = identity_multiplier(a);
  auto w1 = mult_multipliers(one, m12);
  CHECK(w1.left.m == m12.left.m);
  Multiplier<R> zero{LinMap<R>::zero(a.space, a.space),
                     LinMap<R>::zero(a.space, a.space)};
  CHECK(mult_multipliers(m12, zero).left.is_zero());
}

TEST_CASE("tensor product algebra") {
  auto z2 = groupoid_algebra<R>(cyclic_group(2));
  auto t = tensor_algebra(z2.A(), z2.A());
  CHECK(t.dim() == 4);
  CHECK(check_associativity(t).pass);
  CHECK(check_idempotent_algebra(t).ok());
  CHECK(check_nondegenerate(t).ok());

  SECTION("unit ⊗ unit is the unit") {
    auto u = detail::find_unit(t);
    REQUIRE(u.has_value());
    auto uz = detail::find_unit(z2.A());
    REQUIRE(uz.has_value());
    CHECK(*u == kron_vec(*uz, *uz));
  }

  SECTION("leg-lifted multiplier matches manual expansion on kP2") {
    auto p2 = groupoid_algebra<R>(pair_groupoid(2));
    Space asp = p2.A().space;
    auto e13 = lift_multiplier_13(p2.E, asp, asp, asp);
    // E13 acts as E on legs 1 and 3 and as identity on leg 2.
    const int n = 4;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          Vec<R> in = kron_vec(kron_vec(basis_vec<R>(n, x), basis_vec<R>(n, y)),
                               basis_vec<R>(n, z));
          Vec<R> got = e13.left(in);
          Vec<R> ez = p2.E.left(kron_vec(basis_vec<R>(n, x), basis_vec<R>(n, z)));
          // expected: (E(x⊗z)) spread back with y in the middle
          Vec<R> expect(n * n * n, R(0));
          for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
              if (!is_zero(ez[u * n + v])) expect[(u * n + y) * n + v] = ez[u * n + v];
          CHECK(got == expect);
        }
  }
}

TEST_CASE("extension of multiplicative maps") {
  auto z2 = groupoid_algebra<R>(cyclic_group(2));
  const auto& ma = z2.ma;

  SECTION("identity extension") {
    auto res = extend_multiplicative_map(ma, ma, ma.embed, identity_multiplier(z2.A()));
    REQUIRE(res.ok);
    CHECK(res.map.m == Mat<R>::eye(2));
  }

  SECTION("zero map with zero idempotent") {
    Multiplier<R> zero{LinMap<R>::zero(z2.A().space, z2.A().space),
                       LinMap<R>::zero(z2.A().space, z2.A().space)};
    auto res = extend_multiplicative_map(
        ma, ma, LinMap<R>::zero(z2.A().space, ma.carrier), zero);
    REQUIRE(res.ok);
    CHECK(res.map.is_zero());
  }

  SECTION("zero map with nonzero idempotent fails the span hypothesis") {
    auto res = extend_multiplicative_map(
        ma, ma, LinMap<R>::zero(z2.A().space, ma.carrier),
        identity_multiplier(z2.A()));
    CHECK_FALSE(res.ok);
    bool span_failed = false;
    for (const auto& e : res.report.entries)
      if (e.name.rfind("span", 0) == 0 && !e.pass) span_failed = true;
    CHECK(span_failed);
  }

  SECTION("Δ extends to Δ̄ with Δ̄(1) = E, on kP2") {
    auto w = groupoid_algebra<R>(pair_groupoid(2));
    auto maa = multiplier_algebra(w.AA());
    Mat<R> phi(maa.carrier.dim, w.dim());
    for (int i = 0; i < w.dim(); ++i) {
      auto c = maa.coords_of(w.delta(basis_vec<R>(w.dim(), i)));
      REQUIRE(c.has_value());
      for (int k = 0; k < maa.carrier.dim; ++k) phi(k, i) = (*c)[k];
    }
    auto res = extend_multiplicative_map(
        w.ma, maa, LinMap<R>(w.A().space, maa.carrier, phi), w.E);
    REQUIRE(res.ok);
    // Δ̄(1) = E re-checked inside; also compare against the direct builder.
    auto direct = extend_comultiplication(w);
    REQUIRE(direct.report.ok());
    for (int k = 0; k < w.ma.carrier.dim; ++k) {
      auto c = maa.coords_of(direct.images[k]);
      REQUIRE(c.has_value());
      CHECK(*c == res.map(basis_vec<R>(w.ma.carrier.dim, k)));
    }
  }
}
