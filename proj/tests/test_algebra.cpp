#include <doctest.h>

#include <functional>

#include "lpa/algebra.hpp"
#include "lpa/errors.hpp"
#include "support.hpp"

using namespace lpa;
using support::share;

namespace {

struct Fixture {
  std::string name;
  GraphPtr g;
  std::int64_t window;
};

std::vector<Fixture> fixtures() {
  return {{"R_2", share(rose(2)), 0},
          {"sink3", support::sink3(), 0},
          {"two_loops_tail", support::two_loops_tail(), 0},
          {"R_inf", share(rose_infinite()), 3}};
}

AlgebraElement parse(const GraphPtr& g, const std::string& s) { return parse_element(g, Field::rationals(), s); }

// Reference normal form: expand every special junction recursively,
// alpha' e e* beta'* -> alpha' beta'* - sum_{f != e} alpha' f f* beta'*.
AlgebraElement reference_nf(const GraphPtr& g, const Monomial& m) {
  if (!m.alpha.empty() && !m.beta.empty() && m.alpha.arrows.back() == m.beta.arrows.back()) {
    Arrow e = m.alpha.arrows.back();
    VertexId u = g->source(e);
    auto special = g->special_arrow(u);
    if (special && *special == e) {
      Monomial base{m.alpha, m.beta};
      base.alpha.arrows.pop_back();
      base.beta.arrows.pop_back();
      AlgebraElement out = reference_nf(g, base);
      for (const Arrow& f : g->out_arrows(u)) {
        if (f == e) continue;
        Monomial side = base;
        side.alpha.arrows.push_back(f);
        side.beta.arrows.push_back(f);
        out -= reference_nf(g, side);
      }
      return out;
    }
  }
  return AlgebraElement(g, m);
}

AlgebraElement reference_nf(const AlgebraElement& x) {
  AlgebraElement out(x.graph());
  for (const auto& [m, c] : x.terms()) out += c * reference_nf(x.graph(), m);
  return out;
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("Cuntz-Krieger relations on R_2") {
    auto g = share(rose(2));
    CHECK(equals_leavitt(parse(g, "x1*.x1"), parse(g, "v")));
    CHECK(parse(g, "x1*.x2").is_zero());
    CHECK(equals_leavitt(parse(g, "x1.x1* + x2.x2*"), AlgebraElement::one(g)));
    CHECK_FALSE(equals_leavitt(parse(g, "x1.x1*"), AlgebraElement::one(g)));
    CHECK(format_element(leavitt_normal_form(parse(g, "x1.x1*"))) == "v - x2.x2*");
  }

  TEST_CASE("no CK2 at sinks or infinite emitters") {
    auto e = support::loop_emitter();
    auto x = parse(e, "a.a*");
    CHECK(leavitt_normal_form(x) == x);
    auto s = support::sink3();
    CHECK(equals_leavitt(parse(s, "g.g* + h.h*"), parse(s, "v")));
    CHECK(parse(s, "e*.f").is_zero());
    CHECK(parse(s, "w.e").is_zero());
  }

  TEST_CASE("parser errors carry positions") {
    auto g = share(rose(2));
    CHECK_THROWS_AS(parse(g, "x3"), ParseError);
    CHECK_THROWS_AS(parse(g, "x1 +"), ParseError);
    CHECK_THROWS_AS(parse(g, "2/0 x1"), ParseError);
    try {
      parse(g, "x1 + x9");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() >= 5);
    }
  }

  TEST_CASE("scalars over GF(p)") {
    auto g = share(rose(2));
    auto k = Field::parse("gf:3");
    auto x = parse_element(g, k, "2 x1 + x1");
    CHECK(x.is_zero());
    CHECK_THROWS(Field::parse("gf:4"));
    CHECK(k.parse_scalar("1/2") == Scalar::modular(2, 3));
  }

  TEST_CASE("ring axioms, normal-form congruence and involution (1000 samples per graph)") {
    for (const auto& f : fixtures()) {
      CAPTURE(f.name);
      auto pool = support::monomials(*f.g, 3, f.window);
      std::mt19937_64 rng(17);
      for (int i = 0; i < 1000; ++i) {
        auto x = support::random_element(f.g, pool, rng);
        auto y = support::random_element(f.g, pool, rng);
        auto z = support::random_element(f.g, pool, rng);
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * (y + z) == x * y + x * z);
        REQUIRE((x + y) * z == x * z + y * z);
        REQUIRE(AlgebraElement::one(f.g) * x == x);
        REQUIRE(x * AlgebraElement::one(f.g) == x);

        auto nx = leavitt_normal_form(x);
        REQUIRE(leavitt_normal_form(nx) == nx);
        REQUIRE(leavitt_normal_form(x * y) == leavitt_normal_form(nx * leavitt_normal_form(y)));
        REQUIRE(leavitt_normal_form(x + y) == leavitt_normal_form(nx + y));

        REQUIRE(involution(involution(x)) == x);
        REQUIRE(involution(x * y) == involution(y) * involution(x));
        REQUIRE(leavitt_normal_form(involution(x)) == leavitt_normal_form(involution(nx)));

        REQUIRE(parse(f.g, format_element(x)) == x);
      }
    }
  }

  TEST_CASE("normal form is homogeneous and matches an independent rewriting (degree <= 6)") {
    for (const auto& f : {fixtures()[0], fixtures()[2], fixtures()[1]}) {
      CAPTURE(f.name);
      for (const Monomial& m : support::monomials(*f.g, 6)) {
        AlgebraElement x(f.g, m);
        auto n = leavitt_normal_form(x);
        for (const auto& [t, c] : n.terms()) REQUIRE(t.grade() == m.grade());
        REQUIRE(n == reference_nf(x));
      }
    }
  }

  TEST_CASE("normal-form congruence against every generator (degree <= 5)") {
    for (const auto& f : fixtures()) {
      CAPTURE(f.name);
      std::vector<AlgebraElement> gens;
      for (VertexId v = 0; v < f.g->vertex_count(); ++v) gens.push_back(AlgebraElement::vertex(f.g, v));
      for (const Arrow& a : f.g->arrows(f.window)) {
        gens.push_back(AlgebraElement::real(f.g, arrow_path(*f.g, a)));
        gens.push_back(AlgebraElement::ghost(f.g, arrow_path(*f.g, a)));
      }
      for (const Monomial& m : support::monomials(*f.g, 5, f.window)) {
        AlgebraElement x(f.g, m);
        auto nx = leavitt_normal_form(x);
        for (const auto& s : gens) {
          REQUIRE(leavitt_normal_form(s * x) == leavitt_normal_form(s * nx));
          REQUIRE(leavitt_normal_form(x * s) == leavitt_normal_form(nx * s));
        }
      }
    }
  }
}
