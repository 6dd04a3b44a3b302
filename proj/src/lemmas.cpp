#include <algorithm>
#include <functional>

#include "regsem/verify.hpp"

// Exhaustive checks of the identities relating b3, b_r, b_l and the
// one-sided orders. Each law is verified over all tuples of nonzero
// elements satisfying its hypotheses; tuples where an intermediate b3
// value hits the zero element are skipped, since the operands of the
// partial products must stay nonzero.

namespace regsem {

namespace {

struct Env {
  const Context& cx;
  std::vector<Elem> nz;

  explicit Env(const Context& c) : cx(c) {
    for (Elem s = 0; s < c.sg.order(); ++s)
      if (!c.sg.is_zero(s)) nz.push_back(s);
  }

  bool z(Elem x) const { return x < 0 || cx.sg.is_zero(x); }
  Elem p(Elem a, Elem b) const { return cx.sg.product(a, b); }
  bool leL(Elem a, Elem b) const { return cx.green.leq_L(a, b); }
  bool leR(Elem a, Elem b) const { return cx.green.leq_R(a, b); }
  bool ltL(Elem a, Elem b) const { return cx.green.lt_L(a, b); }
  bool ltR(Elem a, Elem b) const { return cx.green.lt_R(a, b); }
  bool eqL(Elem a, Elem b) const { return cx.green.eq_L(a, b); }
  bool eqR(Elem a, Elem b) const { return cx.green.eq_R(a, b); }
  bool icL(Elem a, Elem b) const { return cx.green.incomp_L(a, b); }
  bool icR(Elem a, Elem b) const { return cx.green.incomp_R(a, b); }
  Elem r(Elem s) const { return cx.reps.r(s); }
  Elem l(Elem s) const { return cx.reps.l(s); }
  Elem br(Elem u, Elem v) const { return cx.br(u, v); }
  Elem bl(Elem v, Elem u) const { return cx.bl(v, u); }
  Elem b(Elem u, Elem v, Elem w) const { return cx.b(u, v, w); }
  std::string nm(Elem e) const {
    return e < 0 ? std::string("<undefined>") : cx.sg.name(e);
  }
  std::vector<UnitExt> unit_ext() const {
    std::vector<UnitExt> out = {UnitExt::one()};
    for (Elem s = 0; s < cx.sg.order(); ++s) out.push_back(UnitExt::of(s));
    return out;
  }
};

using Viol = std::function<void(std::string)>;

void law_1(const Env& e, const Viol& viol) {
  const auto units = e.unit_ext();
  for (Elem u : e.nz)
    for (Elem v : e.nz) {
      if (!e.leL(v, u)) continue;
      const Elem B = e.br(u, v);
      for (UnitExt a : units) {
        if (e.cx.sg.act_right(e.r(u), a) == u &&
            e.cx.sg.act_right(B, a) != v)
          viol("b_r(" + e.nm(u) + "," + e.nm(v) + ") a != " + e.nm(v));
        if (e.cx.sg.act_right(u, a) == e.r(u) &&
            B != e.cx.sg.act_right(v, a))
          viol("b_r(" + e.nm(u) + "," + e.nm(v) + ") != " + e.nm(v) + " a'");
      }
    }
}

void law_2(const Env& e, const Viol& viol) {
  for (Elem u : e.nz)
    for (Elem v : e.nz)
      if (e.leL(v, e.r(u)) && e.br(e.r(u), v) != v)
        viol("b_r(r_" + e.nm(u) + "," + e.nm(v) + ") != " + e.nm(v));
}

void law_3(const Env& e, const Viol& viol) {
  for (Elem u : e.nz)
    for (Elem v : e.nz)
      if (e.leL(v, u) && !e.eqR(e.br(u, v), v))
        viol("b_r(" + e.nm(u) + "," + e.nm(v) + ") not R-equivalent to " +
             e.nm(v));
}

void law_4(const Env& e, const Viol& viol) {
  for (Elem t : e.nz)
    for (Elem s : e.nz) {
      if (!e.leL(s, t)) continue;
      const Elem B = e.br(t, s);
      if (e.ltL(s, t) && !e.ltL(B, e.r(t)))
        viol("b_r(" + e.nm(t) + "," + e.nm(s) + ") not strictly L-below r_" +
             e.nm(t));
      if (e.eqL(s, t) && !e.eqL(B, e.r(t)))
        viol("b_r(" + e.nm(t) + "," + e.nm(s) + ") not L-equivalent to r_" +
             e.nm(t));
      if (!e.leL(B, e.r(t)))
        viol("b_r(" + e.nm(t) + "," + e.nm(s) + ") not L-below r_" + e.nm(t));
    }
}

void law_5(const Env& e, const Viol& viol) {
  const auto units = e.unit_ext();
  for (Elem u : e.nz)
    for (Elem v : e.nz) {
      if (!e.leL(u, v)) continue;
      for (Elem w : e.nz) {
        if (!e.leR(w, v)) continue;
        const Elem B = e.b(u, v, w);
        for (UnitExt x : units) {
          if (e.cx.sg.act_right(v, x) != w) continue;
          if (e.cx.sg.act_right(u, x) != B)
            viol("b3(" + e.nm(u) + "," + e.nm(v) + "," + e.nm(w) +
                 ") depends on the right witness");
          for (UnitExt y : units) {
            if (e.cx.sg.act_left(y, v) != u) continue;
            if (e.cx.sg.act_left(y, w) != B ||
                e.cx.sg.act_right(e.cx.sg.act_left(y, v), x) != B)
              viol("b3(" + e.nm(u) + "," + e.nm(v) + "," + e.nm(w) +
                   ") depends on the left witness");
          }
        }
      }
    }
}

void law_6(const Env& e, const Viol& viol) {
  for (Elem u : e.nz)
    for (Elem v : e.nz)
      for (Elem w : e.nz) {
        const Elem B = e.b(u, v, w);
        if (B < 0) continue;
        for (Elem t : e.nz) {
          const Elem tu = e.p(t, u);
          if (!e.z(tu) && e.b(tu, v, w) != e.p(t, B))
            viol("b3(" + e.nm(t) + e.nm(u) + "," + e.nm(v) + "," + e.nm(w) +
                 ") != " + e.nm(t) + " b3");
          const Elem wt = e.p(w, t);
          if (!e.z(wt) && e.b(u, v, wt) != e.p(B, t))
            viol("b3(" + e.nm(u) + "," + e.nm(v) + "," + e.nm(w) + e.nm(t) +
                 ") != b3 " + e.nm(t));
        }
      }
}

void law_7(const Env& e, const Viol& viol) {
  for (Elem s : e.nz)
    for (Elem u : e.nz) {
      const Elem su = e.p(s, u);
      const Elem sru = e.p(s, e.r(u));
      for (Elem v : e.nz) {
        // (1): u >=_L su >=_L v
        if (!e.z(su) && e.leL(v, su)) {
          const Elem Buv = e.br(u, v);
          if (e.z(sru) || !e.leL(Buv, sru))
            viol("(1) " + e.nm(s) + " r_" + e.nm(u) +
                 " not L-above b_r(" + e.nm(u) + "," + e.nm(v) + ")");
          else if (e.br(su, v) != e.br(sru, Buv))
            viol("(1) b_r(" + e.nm(su) + "," + e.nm(v) + ") != b_r(" +
                 e.nm(sru) + ",b_r(" + e.nm(u) + "," + e.nm(v) + "))");
        }
        // (2): su <=_L v <=_L u
        if (!e.z(su) && e.leL(su, v) && e.leL(v, u)) {
          const Elem Buv = e.br(u, v);
          if (e.z(sru) || !e.leL(sru, Buv))
            viol("(2) " + e.nm(s) + " r_" + e.nm(u) + " not L-below b_r(" +
                 e.nm(u) + "," + e.nm(v) + ")");
          else {
            if (e.br(v, su) != e.br(Buv, sru))
              viol("(2) b_r(" + e.nm(v) + "," + e.nm(su) + ") != b_r(b_r(" +
                   e.nm(u) + "," + e.nm(v) + ")," + e.nm(sru) + ")");
            if (e.ltL(su, v) && !e.ltL(sru, Buv))
              viol("(2) strict case fails at " + e.nm(s) + "," + e.nm(u) +
                   "," + e.nm(v));
          }
        }
        // (3): su and v L-incomparable, with b_r(u, v) defined
        if (!e.z(su) && e.leL(v, u) && e.icL(su, v)) {
          if (e.z(sru) || !e.icL(sru, e.br(u, v)))
            viol("(3) incomparability not transported at " + e.nm(s) + "," +
                 e.nm(u) + "," + e.nm(v));
        }
        // (4): u >=_L v
        const Elem sv = e.p(s, v);
        if (e.leL(v, u) && !e.z(sv) &&
            e.br(u, sv) != e.p(s, e.br(u, v)))
          viol("(4) b_r(" + e.nm(u) + "," + e.nm(s) + e.nm(v) + ") != " +
               e.nm(s) + " b_r(" + e.nm(u) + "," + e.nm(v) + ")");
      }
    }
}

void law_8(const Env& e, const Viol& viol) {
  for (Elem u : e.nz)
    for (Elem v : e.nz)
      for (Elem w : e.nz) {
        const Elem B = e.b(u, v, w);
        if (e.z(B)) continue;
        for (Elem s : e.nz) {
          if (e.icL(w, s) && !e.icL(B, s))
            viol("b3(" + e.nm(u) + "," + e.nm(v) + "," + e.nm(w) +
                 ") comparable to " + e.nm(s));
          if (e.icR(s, u) && !e.icR(s, B))
            viol(e.nm(s) + " comparable to b3(" + e.nm(u) + "," + e.nm(v) +
                 "," + e.nm(w) + ")");
        }
      }
}

void law_9(const Env& e, const Viol& viol) {
  for (Elem u : e.nz)
    for (Elem v : e.nz)
      for (Elem w : e.nz) {
        const Elem B1 = e.b(u, v, w);
        if (B1 < 0) continue;
        for (Elem s : e.nz) {
          if (!e.leL(w, s)) continue;
          for (Elem t : e.nz) {
            if (!e.leR(t, s)) continue;
            const Elem B2 = e.b(w, s, t);
            if (!e.leL(B1, s) || !e.leR(B2, v))
              viol("order claims fail at " + e.nm(u) + "," + e.nm(v) + "," +
                   e.nm(w) + "," + e.nm(s) + "," + e.nm(t));
            if (e.z(B1) || e.z(B2)) continue;
            if (e.b(B1, s, t) != e.b(u, v, B2))
              viol("b3 not associative at " + e.nm(u) + "," + e.nm(v) + "," +
                   e.nm(w) + "," + e.nm(s) + "," + e.nm(t));
          }
        }
      }
}

void law_10(const Env& e, const Viol& viol) {
  for (Elem u : e.nz)
    for (Elem v : e.nz)
      for (Elem w : e.nz) {
        if (!e.leL(u, v) || !e.eqR(v, w)) continue;
        for (Elem s : e.nz) {
          if (!e.leL(s, w)) continue;
          const Elem B1 = e.b(u, v, w), B2 = e.b(s, w, v);
          for (Elem c : e.nz) {
            if ((e.p(c, s) == B1) != (u == e.p(c, B2)))
              viol("(a) fails at " + e.nm(u) + "," + e.nm(v) + "," + e.nm(w) +
                   "," + e.nm(s) + ",c=" + e.nm(c));
            if ((e.p(c, u) == B2) != (s == e.p(c, B1)))
              viol("(b) fails at " + e.nm(u) + "," + e.nm(v) + "," + e.nm(w) +
                   "," + e.nm(s) + ",c=" + e.nm(c));
          }
        }
      }
}

void law_11(const Env& e, const Viol& viol) {
  for (Elem u : e.nz)
    for (Elem v : e.nz)
      for (Elem w : e.nz) {
        if (!e.leL(u, v) || !e.eqR(v, w)) continue;
        for (Elem s : e.nz) {
          if (!e.leL(s, w)) continue;
          const Elem B1 = e.b(u, v, w), B2 = e.b(s, w, v);
          if (e.z(B1) || e.z(B2)) continue;
          auto at = [&] {
            return e.nm(u) + "," + e.nm(v) + "," + e.nm(w) + "," + e.nm(s);
          };
          if (e.leL(B1, s) != e.leL(u, B2))
            viol("(1 <=) fails at " + at());
          if (e.ltL(s, B1) != e.ltL(B2, u)) viol("(1 >) fails at " + at());
          if (e.icL(B1, s) != e.icL(u, B2))
            viol("(1 incomp) fails at " + at());
          if (e.leL(B1, s)) {
            if (e.r(s) != e.r(B2)) viol("(2 <=) reps differ at " + at());
            else if (e.br(s, B1) != e.br(B2, u))
              viol("(2 <=) b_r identity fails at " + at());
          }
          if (e.ltL(s, B1)) {
            if (e.r(u) != e.r(B1)) viol("(2 >) reps differ at " + at());
            else if (e.br(B1, s) != e.br(u, B2))
              viol("(2 >) b_r identity fails at " + at());
          }
        }
      }
}

void law_12(const Env& e, const Viol& viol) {
  const int n = e.cx.sg.order();
  for (Elem u : e.nz)
    for (Elem v : e.nz)
      for (Elem w : e.nz) {
        if (!e.leL(u, v) || !e.leR(w, v)) continue;
        const Elem B1 = e.b(u, v, w), Brw = e.b(u, v, e.r(w));
        for (Elem s : e.nz) {
          if (!e.leL(s, w)) continue;
          const Elem Bws = e.br(w, s);
          for (Elem c = 0; c < n; ++c) {
            if ((B1 == e.p(c, s)) != (Brw == e.p(c, Bws)))
              viol("(1) fails at " + e.nm(u) + "," + e.nm(v) + "," + e.nm(w) +
                   "," + e.nm(s) + ",c=" + e.nm(c));
            if ((e.p(c, B1) == s) != (e.p(c, Brw) == Bws))
              viol("(2) fails at " + e.nm(u) + "," + e.nm(v) + "," + e.nm(w) +
                   "," + e.nm(s) + ",c=" + e.nm(c));
          }
        }
      }
}

void law_13(const Env& e, const Viol& viol) {
  for (Elem u : e.nz)
    for (Elem v : e.nz)
      for (Elem w : e.nz) {
        if (!e.leL(u, v) || !e.leR(w, v)) continue;
        const Elem B1 = e.b(u, v, w), Brw = e.b(u, v, e.r(w));
        if (e.z(B1) || e.z(Brw)) continue;
        for (Elem s : e.nz) {
          if (!e.leL(s, w)) continue;
          const Elem Bws = e.br(w, s);
          auto at = [&] {
            return e.nm(u) + "," + e.nm(v) + "," + e.nm(w) + "," + e.nm(s);
          };
          if (e.leL(B1, s) != e.leL(Brw, Bws))
            viol("(1 <=) fails at " + at());
          if (e.ltL(s, B1) != e.ltL(Bws, Brw)) viol("(1 >) fails at " + at());
          if (e.icL(B1, s) != e.icL(Brw, Bws))
            viol("(1 incomp) fails at " + at());
          if (e.leL(B1, s)) {
            if (!e.eqR(s, Bws))
              viol("(2 <=) R-equivalence fails at " + at());
            else if (e.br(s, B1) != e.br(Bws, Brw))
              viol("(2 <=) b_r identity fails at " + at());
          }
          if (e.ltL(s, B1)) {
            if (!e.eqR(B1, Brw))
              viol("(2 >) R-equivalence fails at " + at());
            else if (e.br(B1, s) != e.br(Brw, Bws))
              viol("(2 >) b_r identity fails at " + at());
          }
        }
      }
}

void law_14(const Env& e, const Viol& viol) {
  for (Elem u : e.nz)
    for (Elem v : e.nz)
      for (Elem w : e.nz) {
        if (!e.leL(u, v) || !e.leR(w, v)) continue;
        const Elem Bvu = e.br(v, u);
        auto at = [&] { return e.nm(u) + "," + e.nm(v) + "," + e.nm(w); };
        if (!e.leL(Bvu, e.r(v)) || !e.leR(w, e.r(v))) {
          viol("order claims fail at " + at());
          continue;
        }
        if (e.b(Bvu, e.r(v), w) != e.b(u, v, w))
          viol("b3 via representatives differs at " + at());
      }
}

void law_15(const Env& e, const Viol& viol) {
  for (Elem u : e.nz)
    for (Elem v : e.nz)
      for (Elem w : e.nz) {
        const Elem B1 = e.b(u, v, w);
        if (e.z(B1)) continue;
        for (Elem s : e.nz) {
          if (!e.leL(w, s)) continue;
          if (e.br(s, B1) != e.b(u, v, e.br(s, w)))
            viol("fails at " + e.nm(u) + "," + e.nm(v) + "," + e.nm(w) + "," +
                 e.nm(s));
        }
      }
}

void law_16(const Env& e, const Viol& viol) {
  for (Elem u : e.nz)
    for (Elem v : e.nz) {
      if (!e.leL(v, u)) continue;
      const Elem Buv = e.br(u, v), Bul = e.br(u, e.l(v));
      if (!e.eqL(Buv, Bul))
        viol("(1) fails at " + e.nm(u) + "," + e.nm(v));
      for (Elem w : e.nz) {
        if (!e.leR(w, v)) continue;
        if (e.bl(w, Buv) != e.bl(e.bl(w, v), Bul))
          viol("(2) fails at " + e.nm(u) + "," + e.nm(v) + "," + e.nm(w));
      }
    }
}

void law_17(const Env& e, const Viol& viol) {
  for (Elem u : e.nz)
    for (Elem v : e.nz)
      for (Elem w : e.nz) {
        if (!e.leL(v, u) || !e.leR(v, w)) continue;
        if (e.bl(e.br(u, v), w) != e.br(u, e.bl(v, w)))
          viol("fails at " + e.nm(u) + "," + e.nm(v) + "," + e.nm(w));
      }
}

void law_18(const Env& e, const Viol& viol) {
  for (Elem u : e.nz)
    for (Elem v : e.nz)
      for (Elem w : e.nz) {
        if (!e.leL(u, v) || !e.leR(w, v)) continue;
        const Elem lhs = e.b(e.br(v, u), e.r(v), w);
        const Elem rhs = e.b(u, e.l(v), e.bl(w, v));
        if (lhs < 0 || rhs < 0 || lhs != rhs)
          viol("fails at " + e.nm(u) + "," + e.nm(v) + "," + e.nm(w));
      }
}

struct LawEntry {
  const char* id;
  void (*fn)(const Env&, const Viol&);
  const char* note;  // statement repair applied, if any
};

const LawEntry kLaws[] = {
    {"3.1", law_1,
     "mirrored clauses restated as exact duals of the first clauses"},
    {"3.2", law_2, nullptr},
    {"3.3", law_3, nullptr},
    {"3.4", law_4, nullptr},
    {"3.5", law_5, nullptr},
    {"3.6", law_6, nullptr},
    {"3.7", law_7, nullptr},
    {"3.8", law_8, nullptr},
    {"3.9", law_9, nullptr},
    {"3.10", law_10, nullptr},
    {"3.11", law_11, nullptr},
    {"3.12", law_12, nullptr},
    {"3.13", law_13, nullptr},
    {"3.14", law_14, nullptr},
    {"3.15", law_15, nullptr},
    {"3.16", law_16,
     "second argument of the inner b_l corrected from u to v"},
    {"3.17", law_17, "stray prime dropped from the first hypothesis"},
    {"3.18", law_18, nullptr},
};

}  // namespace

std::vector<std::string> all_lemma_ids() {
  std::vector<std::string> ids;
  for (const auto& law : kLaws) ids.push_back(law.id);
  return ids;
}

LemmaReport lemma_suite(const Context& cx,
                        const std::vector<std::string>& ids) {
  LemmaReport rep;
  const Context op = opposite_context(cx);
  const Env env(cx), env_op(op);
  constexpr int kMaxPerSide = 10;
  for (const auto& law : kLaws) {
    if (!ids.empty() &&
        std::find(ids.begin(), ids.end(), law.id) == ids.end())
      continue;
    rep.checked.push_back(law.id);
    if (law.note)
      rep.notes.push_back(std::string(law.id) + ": " + law.note);
    int count = 0;
    law.fn(env, [&](std::string msg) {
      if (count++ < kMaxPerSide)
        rep.violations.push_back(std::string(law.id) + ": " + std::move(msg));
    });
    count = 0;
    law.fn(env_op, [&](std::string msg) {
      if (count++ < kMaxPerSide)
        rep.violations.push_back(std::string(law.id) + " (dual): " +
                                 std::move(msg));
    });
  }
  return rep;
}

}  // namespace regsem
