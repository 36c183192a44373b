#include <doctest.h>

#include "lpa/chen.hpp"
#include "lpa/errors.hpp"
#include "support.hpp"

using namespace lpa;
using support::share;

TEST_SUITE("digraph") {
  TEST_CASE("graph text round-trips and classifies vertices") {
    auto g = support::sink3();
    CHECK(g->vertex_count() == 3);
    CHECK(g->classify(g->vertex("u")) == VertexKind::regular);
    CHECK(g->classify(g->vertex("w")) == VertexKind::sink);
    auto again = parse_graph(g->to_text());
    CHECK(again.to_text() == g->to_text());

    auto e = support::loop_emitter();
    CHECK(e->classify(e->vertex("v")) == VertexKind::infinite_emitter);
    CHECK(e->has_families());
    CHECK(e->out_arrows(e->vertex("v"), 3).size() == 4);
    CHECK_FALSE(e->special_arrow(e->vertex("v")).has_value());
  }

  TEST_CASE("malformed graph text is rejected") {
    CHECK_THROWS_AS(parse_graph("[vertices]\nv\n[arrows]\na: v -> q\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("[vertices]\nv\nv\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("[arrows]\na v v\n"), ParseError);
  }

  TEST_CASE("special arrow is the least outgoing arrow") {
    auto g = support::sink3();
    auto s = g->special_arrow(g->vertex("u"));
    REQUIRE(s);
    CHECK(g->arrow_name(*s) == "e");
  }

  TEST_CASE("paths: composition, heads, tails, periods") {
    auto g = share(rose(2));
    Path p = parse_path(*g, "x1.x2.x1");
    CHECK(format_path(*g, p) == "x1.x2.x1");
    CHECK(format_path(*g, head(p, 2)) == "x1.x2");
    CHECK(format_path(*g, tail(*g, p, 1)) == "x2.x1");
    CHECK(is_head(head(p, 1), p));
    CHECK(is_period(*g, parse_path(*g, "x1.x2")));
    CHECK_FALSE(is_period(*g, parse_path(*g, "x1.x1")));
    CHECK(format_path(*g, primitive_root(parse_path(*g, "x1.x2.x1.x2"))) == "x1.x2");

    auto s = support::sink3();
    CHECK_FALSE(compose_paths(*s, parse_path(*s, "e"), parse_path(*s, "f")).has_value());
    CHECK(compose_paths(*s, parse_path(*s, "e"), parse_path(*s, "g.h")).has_value());
    CHECK_THROWS(parse_path(*s, "e.f"));
  }

  TEST_CASE("path order: length, then arrows, then start") {
    auto g = support::sink3();
    auto ps = support::paths(*g, 3);
    for (std::size_t i = 0; i + 1 < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        const Path &a = ps[i], &b = ps[j];
        if (a.length() != b.length()) CHECK(((a < b) == (a.length() < b.length())));
        CHECK(((a <=> b) == 0) == (a == b));
      }
  }

  TEST_CASE("family arrows are windowed") {
    auto g = share(rose_infinite());
    CHECK(g->arrows(2).size() == 2);
    CHECK(g->arrow_name(g->arrow("a", 7)) == "a[7]");
    CHECK(format_path(*g, parse_path(*g, "a[0].a[3]")) == "a[0].a[3]");
  }

  TEST_CASE("rational Chen words normalize and count tails") {
    auto g = share(rose(2));
    auto w = parse_chen(*g, "rational:x2.x1/x2.x1");
    // x2 x1 (x2 x1)^inf is (x2 x1)^inf.
    CHECK(w.prefix().empty());
    CHECK(w.distinct_tails() == 2u);
    auto p = parse_chen(*g, "rational:x2/x1");
    CHECK(p.distinct_tails() == 2u);
    CHECK(p.tail_class(5) == 1);
    CHECK(p.tail(*g, 1) == parse_chen(*g, "rational:x1"));
    CHECK(tail_equivalent(*g, p, parse_chen(*g, "rational:x1"), 10).kind == TailEquivalence::yes);
    CHECK(tail_equivalent(*g, p, parse_chen(*g, "rational:x2"), 10).kind != TailEquivalence::yes);
  }

  TEST_CASE("Chen shift: letter(l + i) of alpha is letter(i) of tail(l)") {
    auto g = share(rose(2));
    for (const char* lit : {"rational:x1", "rational:x2.x2/x1.x2.x2", "thue-morse:x1,x2"}) {
      auto w = parse_chen(*g, lit);
      for (std::size_t l = 0; l <= 8; ++l) {
        auto t = w.tail(*g, l);
        for (std::size_t i = 0; i < 16; ++i) CHECK(t.letter(i) == w.letter(l + i));
      }
    }
  }

  TEST_CASE("Thue-Morse letters and classification") {
    auto g = share(rose(2));
    auto w = thue_morse(*g, g->arrow("x1"), g->arrow("x2"));
    CHECK(format_path(*g, w.head(8)) == "x1.x2.x2.x1.x2.x1.x1.x2");
    CHECK(classify_chen(w, 64).kind == ChenClass::irrational_witnessed);
    CHECK(classify_chen(parse_chen(*g, "rational:x1.x2"), 8).kind == ChenClass::rational);
  }
}
