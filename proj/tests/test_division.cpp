#include <doctest.h>

#include <random>

#include "lpa/division.hpp"
#include "lpa/errors.hpp"
#include "support.hpp"

using namespace lpa;
using support::share;

namespace {

DivisionAlgebraElement random_vec(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  DivisionAlgebraElement x(n);
  for (auto& s : x) s = Scalar(c(rng));
  return x;
}

Polynomial poly(std::initializer_list<long> cs) {
  std::vector<Scalar> v;
  for (long c : cs) v.emplace_back(c);
  return Polynomial(v);
}

}  // namespace

TEST_SUITE("division") {
  TEST_CASE("polynomial arithmetic and division") {
    auto a = poly({1, 0, 1});
    auto b = poly({-1, 1});
    auto [q, r] = divmod(a * b + poly({3}), b);
    CHECK(q == a);
    CHECK(r == poly({3}));
    CHECK(a.eval(Scalar(2)) == Scalar(5));
    CHECK(parse_polynomial(Field::rationals(), "1,0,1") == a);
    CHECK((a - a).is_zero());
  }

  TEST_CASE("reciprocal polynomial is an involution") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int i = 0; i < 200; ++i) {
      std::vector<Scalar> cs;
      int deg = 1 + i % 5;
      for (int j = 0; j <= deg; ++j) {
        int x = c(rng);
        if ((j == 0 || j == deg) && x == 0) x = 1;
        cs.emplace_back(x);
      }
      Polynomial q(cs);
      CHECK(reciprocal_polynomial(reciprocal_polynomial(q)) == q);
      CHECK(reciprocal_polynomial(q).degree() == q.degree());
    }
    CHECK(reciprocal_polynomial(poly({2, 3, 1})) == poly({1, 3, 2}));
    CHECK_THROWS(reciprocal_polynomial(poly({0, 1})));
  }

  TEST_CASE("irreducibility") {
    CHECK(is_irreducible(poly({1, 0, 1})).kind == Irreducibility::yes);
    CHECK(is_irreducible(poly({-1, -1, 1})).kind == Irreducibility::yes);
    auto f = is_irreducible(poly({-1, 0, 1}));
    CHECK(f.kind == Irreducibility::no);
    REQUIRE(f.factor);
    CHECK(f.factor->degree() == 1);
    CHECK(is_irreducible(poly({-2, 0, 0, 1})).kind == Irreducibility::yes);
    CHECK(is_irreducible(poly({1, 1, 1, 1, 1})).kind == Irreducibility::yes);
    // (x^2 + 1)^2 has no rational root and factors mod every prime.
    CHECK(is_irreducible(poly({1, 0, 2, 0, 1})).kind == Irreducibility::unverified);
  }

  TEST_CASE("field extensions and quaternions are associative with center K") {
    std::vector<StructureAlgebra> algebras{field_extension(poly({1, 0, 1})), field_extension(poly({-2, 0, 0, 1})),
                                           quaternion_algebra(1, 1), quaternion_algebra(2, 3),
                                           quaternion_algebra(-1, 3)};
    std::mt19937_64 rng(11);
    for (const auto& D : algebras) {
      CAPTURE(D.name());
      CHECK(D.is_associative());
      for (int i = 0; i < 100; ++i) {
        auto x = random_vec(D.dimension(), rng), y = random_vec(D.dimension(), rng),
             z = random_vec(D.dimension(), rng);
        CHECK(D.multiply(D.multiply(x, y), z) == D.multiply(x, D.multiply(y, z)));
        CHECK(D.multiply(D.one(), x) == x);
      }
    }
    CHECK(algebras[2].center_dimension() == 1);
    CHECK(algebras[3].center_dimension() == 1);
    CHECK(algebras[0].center_dimension() == 2);
    CHECK_THROWS_AS(field_extension(poly({-1, 0, 1})), PreconditionError);
  }

  TEST_CASE("quaternion table and norm multiplicativity") {
    auto H = quaternion_algebra(2, 3);
    auto i = H.basis(1), j = H.basis(2), k = H.basis(3);
    CHECK(H.multiply(i, i) == H.scale(H.one(), Scalar(-2)));
    CHECK(H.multiply(j, j) == H.scale(H.one(), Scalar(-3)));
    CHECK(H.multiply(i, j) == k);
    CHECK(H.multiply(j, i) == H.scale(k, Scalar(-1)));
    std::mt19937_64 rng(3);
    for (int n = 0; n < 300; ++n) {
      auto x = random_vec(4, rng), y = random_vec(4, rng);
      CHECK(quaternion_norm(2, 3, H.multiply(x, y)) == quaternion_norm(2, 3, x) * quaternion_norm(2, 3, y));
    }
  }

  TEST_CASE("isotropy search") {
    CHECK_FALSE(represents_zero(1, 1, 3).isotropic);
    auto z = represents_zero(-1, 1, 3);
    CHECK(z.isotropic);
    mpq_class n = z.witness[0] * z.witness[0] - z.witness[1] * z.witness[1] + z.witness[2] * z.witness[2] -
                  z.witness[3] * z.witness[3];
    CHECK(n == 0);
  }

  TEST_CASE("substitution is an algebra map on ghost elements") {
    auto g = share(rose(2));
    auto H = quaternion_algebra(1, 1);
    Substitution s;
    s.arrows[g->arrow("x1")] = H.basis(1);
    s.arrows[g->arrow("x2")] = H.basis(2);
    auto pool = support::monomials(*g, 3);
    std::vector<Monomial> ghosts;
    for (const auto& m : pool)
      if (m.alpha.empty()) ghosts.push_back(m);
    std::mt19937_64 rng(9);
    for (int n = 0; n < 200; ++n) {
      auto x = support::random_element(g, ghosts, rng);
      auto y = support::random_element(g, ghosts, rng);
      CHECK(substitute(x * y, H, s) == H.multiply(substitute(x, H, s), substitute(y, H, s)));
      CHECK(substitute(x + y, H, s) == H.add(substitute(x, H, s), substitute(y, H, s)));
    }
    CHECK_THROWS_AS(substitute(parse_element(g, Field::rationals(), "x1"), H, s), PreconditionError);
  }
}
