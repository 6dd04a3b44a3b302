#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "regsem/sreg.hpp"

using namespace regsem;

namespace {

std::set<std::string> nf_names(const Semigroup& sg, const SRegTable& t) {
  std::set<std::string> out;
  for (const Word& w : t.elements) out.insert(format_word(sg, w));
  return out;
}

}  // namespace

TEST_CASE("frozen covers of the two smallest fixtures") {
  SUBCASE("left zero on two points") {
    Context cx = make_context(corpus::make(corpus::lz2));
    RewriteSystem rs(cx);
    SRegTable t = enumerate_elements(rs);
    CHECK(t.elements.size() == 10);
    CHECK(nf_names(cx.sg, t) ==
          std::set<std::string>{"0", "a", "b", "a'", "b'", "a a'", "a b'",
                                "b a'", "b b'", "a' a"});
  }
  SUBCASE("cyclic group of order two") {
    Context cx = make_context(corpus::make(corpus::z2));
    RewriteSystem rs(cx);
    SRegTable t = enumerate_elements(rs);
    CHECK(t.elements.size() == 9);
    CHECK(nf_names(cx.sg, t) ==
          std::set<std::string>{"0", "e", "g", "e'", "g'", "e e'", "g e'",
                                "e' e", "g' e"});
  }
}

TEST_CASE("axioms hold on every enumerated cover") {
  for (const char* text : {corpus::lz2, corpus::lz3, corpus::rz2, corpus::ch2,
                           corpus::ch3, corpus::z2, corpus::z3, corpus::z4,
                           corpus::n3, corpus::b2, corpus::sl3}) {
    Context cx = make_context(corpus::make(text));
    RewriteSystem rs(cx);
    SRegTable t = enumerate_elements(rs);
    CHECK(check_axioms(rs, t).empty());
    CHECK(fact_2_5_check(rs).empty());
  }
}

TEST_CASE("table structure") {
  Context cx = make_context(corpus::make(corpus::b2));
  RewriteSystem rs(cx);
  SRegTable t = enumerate_elements(rs);
  const int n = static_cast<int>(t.elements.size());

  SUBCASE("elements are distinct normal forms") {
    std::set<Word> seen(t.elements.begin(), t.elements.end());
    CHECK(static_cast<int>(seen.size()) == n);
    for (const Word& w : t.elements) CHECK(rs.is_irreducible(w));
  }
  SUBCASE("mul agrees with reduction of the concatenation") {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(t.elements[t.mul[i][j]] ==
              multiply(rs, t.elements[i], t.elements[j]));
  }
  SUBCASE("the involution is an anti-automorphic involution") {
    for (int i = 0; i < n; ++i) {
      CHECK(t.inv[t.inv[i]] == i);
      CHECK(t.elements[t.inv[i]] == rs.reduce(involution(t.elements[i])));
      for (int j = 0; j < n; ++j)
        CHECK(t.inv[t.mul[i][j]] == t.mul[t.inv[j]][t.inv[i]]);
    }
    CHECK(t.inv[t.zero_index] == t.zero_index);
  }
  SUBCASE("every element is regular") {
    for (int i = 0; i < n; ++i)
      CHECK(t.mul[t.mul[i][t.inv[i]]][i] == i);
  }
}

TEST_CASE("the embedding is injective and multiplicative off zero") {
  for (const char* text :
       {corpus::lz2, corpus::ch3, corpus::z3, corpus::n3, corpus::b2}) {
    Context cx = make_context(corpus::make(text));
    RewriteSystem rs(cx);
    SRegTable t = enumerate_elements(rs);
    std::set<int> images;
    for (Elem s = 0; s < cx.sg.order(); ++s) {
      CHECK(t.elements[t.embed_of[s]] == embed(rs, s));
      if (!cx.sg.is_zero(s)) images.insert(t.embed_of[s]);
    }
    // injective on S - {0}
    int nonzero = 0;
    for (Elem s = 0; s < cx.sg.order(); ++s)
      if (!cx.sg.is_zero(s)) ++nonzero;
    CHECK(static_cast<int>(images.size()) == nonzero);
    for (Elem s = 0; s < cx.sg.order(); ++s)
      for (Elem u = 0; u < cx.sg.order(); ++u)
        CHECK(t.mul[t.embed_of[s]][t.embed_of[u]] ==
              t.embed_of[cx.sg.product(s, u)]);
  }
}

TEST_CASE("J-structure of the cover over the base") {
  Context cx = make_context(corpus::make(corpus::b2));
  RewriteSystem rs(cx);
  SRegTable t = enumerate_elements(rs);
  JStructureReport r = compare_j_structure(rs, t);
  CHECK(r.s_j_classes == 1);
  CHECK(r.map_injective);
  CHECK(r.map_order_preserving);
  CHECK(r.map_order_reflecting);
  CHECK(r.image_covers_all);
  CHECK(static_cast<int>(r.class_map.size()) == r.s_j_classes);
  long total = 0;
  for (std::size_t k = 0; k < r.class_size.size(); ++k) {
    total += r.class_size[k];
    CHECK(r.regular_count[k] == r.class_size[k]);  // the cover is regular
  }
  CHECK(total + 1 == static_cast<long>(t.elements.size()));  // + the zero
}

TEST_CASE("export round-trips through the parser") {
  Context cx = make_context(corpus::make(corpus::z2));
  RewriteSystem rs(cx);
  SRegTable t = enumerate_elements(rs);
  const std::string text = export_table(rs, t);
  Semigroup cover = Semigroup::parse(text, 1000);
  CHECK(cover.order() == static_cast<int>(t.elements.size()));
  REQUIRE(cover.zero().has_value());
  // multiplication carries over under the exported naming
  for (int i = 0; i < cover.order(); ++i)
    for (int j = 0; j < cover.order(); ++j) {
      // identify exported elements by column order: index i names t.elements[i]
      CHECK(cover.product(i, j) == t.mul[i][j]);
    }
}

TEST_CASE("enumeration limits throw") {
  Context cx = make_context(corpus::make(corpus::b2));
  RewriteSystem rs(cx);
  EnumLimits lim;
  lim.max_elements = 3;
  CHECK_THROWS_AS(enumerate_elements(rs, lim), CapExceeded);
}
