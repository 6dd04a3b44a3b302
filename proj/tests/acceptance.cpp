// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits with the number of failed criteria.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "corpus.hpp"
#include "regsem/sreg.hpp"
#include "regsem/verify.hpp"

using namespace regsem;

namespace {

struct Member {
  const char* name;
  const char* text;
  bool expect_unambiguous;
};

const std::vector<Member>& members() {
  static std::vector<Member> m = {
      {"lz2", corpus::lz2, true},   {"lz3", corpus::lz3, true},
      {"rz2", corpus::rz2, true},   {"ch2", corpus::ch2, true},
      {"ch3", corpus::ch3, true},   {"ch4", corpus::ch4, true},
      {"ch5", corpus::ch5, true},   {"z2", corpus::z2, true},
      {"z3", corpus::z3, true},     {"z4", corpus::z4, true},
      {"n3", corpus::n3, true},     {"b2", corpus::b2, true},
      {"sl3", corpus::sl3, false},  {"sl3z", corpus::sl3z, false},
      {"rbv6", corpus::rbv6, false}};
  return m;
}

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& msg) {
    ok = false;
    if (detail.tellp() > 0) detail << "; ";
    detail << msg;
  }
};

// Contexts are expensive enough to share across criteria.
struct Prepared {
  std::string name;
  Context cx;
  bool unambiguous;
};

std::vector<Prepared>& prepared() {
  static std::vector<Prepared> all = [] {
    std::vector<Prepared> v;
    for (const Member& m : members()) {
      Context cx = make_context(corpus::make(m.text));
      bool u = cx.unamb.verdict;
      v.push_back({m.name, std::move(cx), u});
    }
    return v;
  }();
  return all;
}

Check criterion_1() {
  Check c;
  for (std::size_t i = 0; i < members().size(); ++i) {
    const Member& m = members()[i];
    const Prepared& p = prepared()[i];
    if (p.unambiguous != m.expect_unambiguous)
      c.fail(std::string(m.name) + ": expected " +
             (m.expect_unambiguous ? "unambiguous" : "ambiguous") + ", got " +
             (p.unambiguous ? "unambiguous" : "ambiguous"));
    if (!p.unambiguous) {
      const auto& w = p.cx.unamb;
      if (w.s < 0 || w.u < 0 || w.t < 0)
        c.fail(std::string(m.name) + ": missing witness triple");
    }
  }
  return c;
}

Check criterion_2() {
  Check c;
  for (const Prepared& p : prepared()) {
    if (!p.unambiguous) continue;
    RewriteSystem rs(p.cx);
    long bad = 0;
    for_each_word(p.cx, 5, [&](const Word& w) {
      BfsResult r = confluence_bfs(rs, w);
      if (!r.complete || !r.acyclic || r.sinks.size() != 1) {
        if (++bad <= 3)
          c.fail(p.name + ": " + format_word(p.cx.sg, w) + " -> " +
                 std::to_string(r.sinks.size()) + " sinks" +
                 (r.acyclic ? "" : ", cyclic"));
      }
    });
    if (bad > 3) c.fail(p.name + ": " + std::to_string(bad) + " bad words");
  }
  return c;
}

Check criterion_3() {
  Check c;
  for (const Prepared& p : prepared()) {
    if (!p.unambiguous) continue;
    RewriteSystem rs(p.cx);
    CriticalPairStats st = critical_pairs(rs, 5);
    if (st.joinable != st.pairs || !st.unresolved.empty())
      c.fail(p.name + ": " + std::to_string(st.pairs - st.joinable) +
             " divergent, " + std::to_string(st.unresolved.size()) +
             " unresolved of " + std::to_string(st.pairs));
  }
  return c;
}

Check criterion_4() {
  Check c;
  for (const Prepared& p : prepared()) {
    if (!p.unambiguous || p.cx.sg.order() > 6) continue;
    LemmaReport r = lemma_suite(p.cx);
    for (const std::string& v : r.violations) c.fail(p.name + ": " + v);
  }
  return c;
}

std::set<std::string> cover_names(const Prepared& p, const SRegTable& t) {
  std::set<std::string> out;
  for (const Word& w : t.elements) out.insert(format_word(p.cx.sg, w));
  return out;
}

Check criterion_5() {
  Check c;
  const Prepared& lz2 = prepared()[0];
  RewriteSystem rs_lz(lz2.cx);
  SRegTable t_lz = enumerate_elements(rs_lz);
  const std::set<std::string> want_lz = {"0",    "a",    "b",    "a'",  "b'",
                                         "a a'", "a b'", "b a'", "b b'",
                                         "a' a"};
  if (t_lz.elements.size() != 10)
    c.fail("lz2: size " + std::to_string(t_lz.elements.size()) + " != 10");
  if (cover_names(lz2, t_lz) != want_lz) c.fail("lz2: normal-form set differs");

  const Prepared* z2 = nullptr;
  for (const Prepared& p : prepared())
    if (p.name == "z2") z2 = &p;
  RewriteSystem rs_z(z2->cx);
  SRegTable t_z = enumerate_elements(rs_z);
  const std::set<std::string> want_z = {"0",    "e",    "g",    "e'",  "g'",
                                        "e e'", "g e'", "e' e", "g' e"};
  if (t_z.elements.size() != 9)
    c.fail("z2: size " + std::to_string(t_z.elements.size()) + " != 9");
  if (cover_names(*z2, t_z) != want_z) c.fail("z2: normal-form set differs");
  return c;
}

Check criterion_6() {
  Check c;
  for (const Prepared& p : prepared()) {
    if (!p.unambiguous) continue;
    RewriteSystem rs(p.cx);
    SRegTable t = enumerate_elements(rs);
    for (const std::string& v : check_axioms(rs, t))
      c.fail(p.name + ": " + v);
  }
  return c;
}

Check criterion_7() {
  Check c;
  for (const Prepared& p : prepared()) {
    if (!p.unambiguous) continue;
    RewriteSystem rs(p.cx);
    SRegTable t = enumerate_elements(rs);
    std::set<int> images;
    for (Elem s = 0; s < p.cx.sg.order(); ++s) {
      if (p.cx.sg.is_zero(s)) continue;
      images.insert(t.embed_of[s]);
      for (Elem u = 0; u < p.cx.sg.order(); ++u)
        if (t.mul[t.embed_of[s]][t.embed_of[u]] !=
            t.embed_of[p.cx.sg.product(s, u)])
          c.fail(p.name + ": embedding not multiplicative at " +
                 p.cx.sg.name(s) + ", " + p.cx.sg.name(u));
    }
    int nonzero = 0;
    for (Elem s = 0; s < p.cx.sg.order(); ++s)
      if (!p.cx.sg.is_zero(s)) ++nonzero;
    if (static_cast<int>(images.size()) != nonzero)
      c.fail(p.name + ": embedding not injective off zero");
    for (const std::string& v : fact_2_5_check(rs)) c.fail(p.name + ": " + v);
  }
  return c;
}

Check criterion_8() {
  Check c;
  for (const Prepared& p : prepared()) {
    if (!p.unambiguous) continue;
    RewriteSystem rs(p.cx);
    SRegTable t = enumerate_elements(rs);
    for (const Word& w : t.elements)
      if (!rs.is_normal_shape(w))
        c.fail(p.name + ": enumerated " + format_word(p.cx.sg, w) +
               " fails the shape test");
    long bad = 0;
    for_each_word(p.cx, 7, [&](const Word& w) {
      if (rs.is_normal_shape(w) && !rs.is_irreducible(w))
        if (++bad <= 3)
          c.fail(p.name + ": " + format_word(p.cx.sg, w) +
                 " has normal shape but is reducible");
    });
    if (bad > 3) c.fail(p.name + ": " + std::to_string(bad) + " shape gaps");
  }
  return c;
}

Check criterion_9() {
  Check c;
  for (const Prepared& p : prepared()) {
    if (!p.unambiguous) continue;
    RewriteSystem rs(p.cx);
    long bad = 0;
    for_each_word(p.cx, 5, [&](const Word& w) {
      for (Strategy st : {Strategy::Deterministic, Strategy::Rightmost}) {
        Trace tr;
        rs.reduce_with(w, st, 0, &tr);
        ContinuityReport rep = diagnose_trace(rs, w, tr);
        if (!rep.types_invariant || !rep.relations_invariant ||
            !rep.segments_invariant || !rep.maximal_within_two) {
          if (++bad <= 3)
            c.fail(p.name + ": " + format_word(p.cx.sg, w) + ": " +
                   (rep.issues.empty() ? "invariant broken" : rep.issues[0]));
        }
      }
    });
    if (bad > 3) c.fail(p.name + ": " + std::to_string(bad) + " bad traces");
  }
  return c;
}

Check criterion_10() {
  Check c;
  for (const Prepared& p : prepared()) {
    if (!p.unambiguous) continue;
    const auto syms = alphabet(p.cx);
    std::mt19937_64 rng(0xACCE55);
    std::uniform_int_distribution<int> len_d(1, 10);
    std::uniform_int_distribution<std::size_t> sym_d(0, syms.size() - 1);
    std::vector<Word> words(1000);
    for (Word& w : words) {
      w.resize(len_d(rng));
      for (Sym& s : w) s = syms[sym_d(rng)];
    }
    RewriteSystem rs(p.cx);
    std::vector<std::pair<Strategy, std::uint64_t>> strategies = {
        {Strategy::Deterministic, 0}, {Strategy::Rightmost, 0}};
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
      strategies.push_back({Strategy::Random, seed});
    ProbeResult r = termination_probe(rs, words, strategies);
    if (r.disagreements || r.cap_exceeded)
      c.fail(p.name + ": " + std::to_string(r.disagreements) +
             " disagreements, " + std::to_string(r.cap_exceeded) +
             " capped runs");
  }
  return c;
}

const char* kDescriptions[] = {
    "unambiguity verdicts with witnesses across the corpus",
    "unique normal forms: one sink, acyclic graphs, all words len <= 5",
    "critical pairs at maxlen 5 all joinable, none unresolved",
    "algebraic law suite clean on all members with |S| <= 6",
    "cover ground truth: |cover(lz2)| = 10, |cover(z2)| = 9, exact sets",
    "cover axioms: associativity, zero, involution, regularity",
    "embedding injective and multiplicative; conjugate consistency",
    "shape test matches enumeration and irreducibility to length 7",
    "trace diagnostics: invariants hold, maximal positions change <= 2x",
    "strategy independence on 1000 random words per member",
};

}  // namespace

int main() {
  using Fn = Check (*)();
  const Fn criteria[] = {criterion_1, criterion_2, criterion_3, criterion_4,
                         criterion_5, criterion_6, criterion_7, criterion_8,
                         criterion_9, criterion_10};
  int failures = 0;
  for (int i = 0; i < 10; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c = criteria[i]();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    std::cout << "criterion " << (i + 1) << ": "
              << (c.ok ? "PASS" : "FAIL") << " — " << kDescriptions[i] << " ("
              << ms << " ms)";
    if (!c.ok) {
      std::cout << " [" << c.detail.str() << "]";
      ++failures;
    }
    std::cout << "\n";
  }
  return failures;
}
