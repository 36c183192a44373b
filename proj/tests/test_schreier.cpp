#include <doctest.h>

#include "lpa/errors.hpp"
#include "lpa/schreier.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace lpa;
using support::share;

namespace {

const char* kQuaternion = "a*.a* + v\nb*.b* + v\na*.b* + b*.a*\nb*.a*.b* - a*\na*.b*.a* - b*\n";

std::vector<std::string> names(const DiGraph& g, const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(format_word(g, w));
  return out;
}

oracle::GElem oracle_of(const GraphPtr& g, const WordVector& v) { return oracle::from_algebra(from_words(g, v)); }

}  // namespace

TEST_SUITE("schreier") {
  TEST_CASE("ghost words compose like the algebra") {
    auto g = support::sink3();
    auto ws = all_words(*g, 3);
    for (const auto& u : ws)
      for (const auto& w : ws) {
        auto p = AlgebraElement(g, monomial_of(*g, u)) * AlgebraElement(g, monomial_of(*g, w));
        auto c = concat(*g, u, w);
        if (!c) {
          CHECK(p.is_zero());
        } else {
          CHECK(p == AlgebraElement(g, monomial_of(*g, *c)));
          CHECK(word_of(*g, monomial_of(*g, *c)) == *c);
        }
      }
  }

  TEST_CASE("quaternion quotient has basis v, a*, b*, a*b*") {
    auto g = support::two_loops();
    auto L = parse_ideal(g, Field::rationals(), kQuaternion);
    auto B = coset_basis(L, 4);
    CHECK(names(*g, B.basis) == std::vector<std::string>{"v", "a*", "b*", "a*b*"});
    CHECK(B.certified);
    CHECK(codimension(B).to_string() == "finite(4)");
    CHECK(free_generators(B).size() == static_cast<std::size_t>(lewin_schreier_rank(2, 4)));
  }

  TEST_CASE("Lewin-Schreier rank") {
    CHECK(lewin_schreier_rank(2, 1) == 2);
    CHECK(lewin_schreier_rank(3, 4) == 9);
    CHECK(lewin_schreier_rank(5, 2) == 9);
  }

  TEST_CASE("tail closure and reduction soundness against dense spans") {
    auto r2 = share(rose(2));
    auto q = support::two_loops();
    std::vector<LeftIdealPresentation> ideals{
        parse_ideal(q, Field::rationals(), kQuaternion),
        parse_ideal(r2, Field::rationals(), "x1* - v\nx2*\n"),
        parse_ideal(r2, Field::rationals(), "x1*.x2* - x2*.x1*\nx1*.x1* - 2 x2*\n"),
        parse_ideal(support::sink3(), Field::rationals(), "g* - h*\nf*\n")};
    for (const auto& L : ideals) {
      const std::size_t d = 4;
      auto B = coset_basis(L, d);
      for (const Word& w : B.basis)
        if (w.length() > 0) CHECK(B.contains(suffix(*L.graph, w)));

      std::vector<oracle::GElem> gens;
      for (const auto& x : L.generators) gens.push_back(oracle::from_algebra(x));
      oracle::LeftSpan span(*L.graph, gens, d);
      for (const Word& w : all_words(*L.graph, d)) {
        WordVector unit{{w, Scalar(1)}};
        auto r = B.reduce(unit);
        for (const auto& [b, c] : r) CHECK(B.contains(b));
        CHECK(B.reduce(r) == r);
        auto diff = unit;
        axpy(diff, Scalar(-1), r);
        CHECK(span.contains(oracle_of(L.graph, diff)));
      }
      for (const auto& x : L.generators) CHECK(membership(B, x) == Membership::in);
    }
  }

  TEST_CASE("membership refuses elements above the bound") {
    auto g = share(rose(2));
    auto L = parse_ideal(g, Field::rationals(), "x1*.x1*\n");
    auto B = coset_basis(L, 3);
    CHECK_FALSE(B.certified);
    auto deep = parse_element(g, Field::rationals(), "x2*.x2*.x2*.x2*.x2*");
    CHECK_THROWS_AS(membership(B, deep), PreconditionError);
    CHECK(membership(B, parse_element(g, Field::rationals(), "x2*.x1*.x1*")) == Membership::in);
    CHECK(membership(B, parse_element(g, Field::rationals(), "x1*.x2*")) == Membership::out);
  }

  TEST_CASE("parse_ideal rejects non-ghost generators") {
    auto g = share(rose(2));
    CHECK_THROWS_AS(parse_ideal(g, Field::rationals(), "x1\n"), ParseError);
  }

  TEST_CASE("Chen ideals: heads span the quotient and the ideal is not open") {
    auto g = share(rose(2));
    for (const char* lit : {"rational:x1", "thue-morse:x1,x2"}) {
      auto alpha = parse_chen(*g, lit);
      auto L = chen_ideal(g, alpha, 5);
      CHECK(check_codescription(L, 5).empty());
      auto B = coset_basis(L, 5);
      CHECK(B.basis.size() == 6);
      for (std::size_t l = 0; l <= 5; ++l) CHECK(B.contains(head_star(*g, alpha, l)));
      CHECK_FALSE(is_open(L, 5).open);
    }
  }

  TEST_CASE("openness against powers of I") {
    auto g = share(rose(2));
    CHECK_FALSE(is_open(parse_ideal(g, Field::rationals(), "x1* - v\nx2*\n"), 5).open);
    auto o = is_open(parse_ideal(g, Field::rationals(), "x1*\nx2*\n"), 5);
    CHECK(o.open);
    CHECK(o.l == 1);
    auto two = is_open(parse_ideal(g, Field::rationals(), "x1*.x1*\nx2*.x1*\nx2*\n"), 5);
    CHECK(two.open);
    CHECK(two.l == 2);
    CHECK_THROWS_AS(is_open(parse_ideal(share(rose_infinite()), Field::rationals(), "a[0]*\n"), 3), PreconditionError);
  }

  TEST_CASE("period presentations check against their staircase") {
    auto g = support::two_loops();
    auto D = quaternion_algebra(1, 1);
    auto P = mantese_rangaswamy_presentation(g, 0, {parse_path(*g, "a"), parse_path(*g, "b")}, D,
                                             {D.basis(1), D.basis(2)}, 4);
    CHECK(P.hilbert);
    CHECK(P.coset_words.size() == 4);
    CHECK(check_codescription(P.ideal, 4).empty());
    auto B = coset_basis(P.ideal, 4);
    CHECK(B.certified);
    CHECK(B.basis.size() == 4);
  }
}
