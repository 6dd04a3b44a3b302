#include "regsem/rewrite.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace regsem {

Sym zero_sym() { return {SymKind::Zero, -1}; }

Sym plain(const Semigroup& sg, Elem s) {
  if (s < 0 || s >= sg.order())
    throw std::invalid_argument("element index out of range");
  if (sg.is_zero(s)) return zero_sym();
  return {SymKind::Plain, s};
}

Sym bar(const Semigroup& sg, Elem s) {
  if (s < 0 || s >= sg.order())
    throw std::invalid_argument("element index out of range");
  if (sg.is_zero(s)) return zero_sym();
  return {SymKind::Bar, s};
}

Word involution(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Sym s = *it;
    if (s.kind == SymKind::Plain)
      s.kind = SymKind::Bar;
    else if (s.kind == SymKind::Bar)
      s.kind = SymKind::Plain;
    out.push_back(s);
  }
  return out;
}

Word parse_word(const Semigroup& sg, const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  Word w;
  while (in >> tok) {
    if (tok == "0") {
      w.push_back(zero_sym());
    } else if (tok.size() > 1 && tok.back() == '\'') {
      w.push_back(bar(sg, sg.element(tok.substr(0, tok.size() - 1))));
    } else {
      w.push_back(plain(sg, sg.element(tok)));
    }
  }
  if (w.empty()) throw ParseError("empty word");
  return w;
}

std::string format_word(const Semigroup& sg, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    switch (w[i].kind) {
      case SymKind::Zero: out += '0'; break;
      case SymKind::Plain: out += sg.name(w[i].elem); break;
      case SymKind::Bar: out += sg.name(w[i].elem) + "'"; break;
    }
  }
  return out;
}

size_t WordHash::operator()(const Word& w) const {
  size_t h = 1469598103934665603ull;
  for (const Sym& s : w) {
    h = (h ^ static_cast<size_t>(s.kind)) * 1099511628211ull;
    h = (h ^ static_cast<size_t>(s.elem + 1)) * 1099511628211ull;
  }
  return h;
}

const char* rule_name(RuleId rule) {
  switch (rule) {
    case RuleId::R12: return "R12";
    case RuleId::R13: return "R13";
    case RuleId::R14: return "R14";
    case RuleId::R11P: return "R11P";
    case RuleId::R11B: return "R11B";
    case RuleId::R15: return "R15";
    case RuleId::R16: return "R16";
    case RuleId::R21: return "R21";
    case RuleId::R22: return "R22";
    case RuleId::R23: return "R23";
    case RuleId::R24: return "R24";
  }
  return "?";
}

std::optional<Strategy> strategy_by_name(const std::string& name) {
  if (name == "deterministic") return Strategy::Deterministic;
  if (name == "rightmost") return Strategy::Rightmost;
  if (name == "random") return Strategy::Random;
  return std::nullopt;
}

const char* strategy_name(Strategy st) {
  switch (st) {
    case Strategy::Deterministic: return "deterministic";
    case Strategy::Rightmost: return "rightmost";
    case Strategy::Random: return "random";
  }
  return "?";
}

RewriteSystem::RewriteSystem(const Context& cx, bool allow_unsafe,
                             long step_cap)
    : cx_(&cx), allow_unsafe_(allow_unsafe), step_cap_(step_cap) {
  if (!allow_unsafe_) {
    auto bad = validate_representatives(cx.sg, cx.green, cx.reps);
    if (!bad.empty())
      throw std::invalid_argument("incoherent representative choice: " +
                                  bad.front());
  }
}

std::vector<Redex> RewriteSystem::find_redexes(const Word& w) const {
  const GreenData& g = cx_->green;
  const RepChoice& rc = cx_->reps;
  std::vector<Redex> out;
  const int len = static_cast<int>(w.size());
  for (int i = 0; i < len; ++i) {
    if (i + 1 < len) {
      const Sym &a = w[i], &b = w[i + 1];
      if (a.kind == SymKind::Zero || b.kind == SymKind::Zero) {
        out.push_back({i, RuleId::R12, 2});
      } else if (a.kind == SymKind::Plain && b.kind == SymKind::Plain) {
        out.push_back({i, RuleId::R11P, 2});
      } else if (a.kind == SymKind::Bar && b.kind == SymKind::Bar) {
        out.push_back({i, RuleId::R11B, 2});
      } else if (a.kind == SymKind::Plain) {  // (s, t')
        const Elem s = a.elem, t = b.elem;
        if (g.incomp_L(s, t)) {
          out.push_back({i, RuleId::R13, 2});
        } else if (g.lt_L(t, s)) {
          if (s != rc.r(s)) out.push_back({i, RuleId::R21, 2});
        } else if (t != rc.r(t)) {  // s <=_L t
          out.push_back({i, RuleId::R24, 2});
        }
      } else {  // (s', t)
        const Elem s = a.elem, t = b.elem;
        if (g.incomp_R(s, t)) {
          out.push_back({i, RuleId::R14, 2});
        } else if (g.lt_R(t, s)) {
          if (s != rc.l(s)) out.push_back({i, RuleId::R22, 2});
        } else if (t != rc.l(t)) {  // s <=_R t
          out.push_back({i, RuleId::R23, 2});
        }
      }
    }
    if (i + 2 < len) {
      const Sym &a = w[i], &b = w[i + 1], &c = w[i + 2];
      if (a.kind == SymKind::Plain && b.kind == SymKind::Bar &&
          c.kind == SymKind::Plain && g.leq_L(a.elem, b.elem) &&
          g.leq_R(c.elem, b.elem))
        out.push_back({i, RuleId::R15, 3});
      if (a.kind == SymKind::Bar && b.kind == SymKind::Plain &&
          c.kind == SymKind::Bar && g.leq_R(a.elem, b.elem) &&
          g.leq_L(c.elem, b.elem))
        out.push_back({i, RuleId::R16, 3});
    }
  }
  std::sort(out.begin(), out.end(), [](const Redex& x, const Redex& y) {
    return std::pair(x.pos, static_cast<int>(x.rule)) <
           std::pair(y.pos, static_cast<int>(y.rule));
  });
  return out;
}

Word RewriteSystem::apply_redex(const Word& w, const Redex& redex) const {
  const Semigroup& sg = cx_->sg;
  auto stale = [&]() -> std::logic_error {
    return std::logic_error(std::string("stale redex: rule ") +
                            rule_name(redex.rule) + " does not match at " +
                            std::to_string(redex.pos));
  };
  const int len = static_cast<int>(w.size());
  if (redex.pos < 0 || redex.pos + redex.width > len) throw stale();
  auto current = find_redexes(w);
  if (std::find(current.begin(), current.end(), redex) == current.end())
    throw stale();

  Word rhs;
  const Sym* p = &w[redex.pos];
  switch (redex.rule) {
    case RuleId::R12:
    case RuleId::R13:
    case RuleId::R14:
      rhs = {zero_sym()};
      break;
    case RuleId::R11P:
      rhs = {plain(sg, sg.product(p[0].elem, p[1].elem))};
      break;
    case RuleId::R11B:
      rhs = {bar(sg, sg.product(p[1].elem, p[0].elem))};
      break;
    case RuleId::R15:
      rhs = {plain(sg, cx_->b(p[0].elem, p[1].elem, p[2].elem))};
      break;
    case RuleId::R16:
      rhs = {bar(sg, cx_->b(p[2].elem, p[1].elem, p[0].elem))};
      break;
    case RuleId::R21: {
      const Elem s = p[0].elem, t = p[1].elem;
      rhs = {plain(sg, cx_->reps.r(s)), bar(sg, cx_->br(s, t))};
      break;
    }
    case RuleId::R22: {
      const Elem s = p[0].elem, t = p[1].elem;
      rhs = {bar(sg, cx_->reps.l(s)), plain(sg, cx_->bl(t, s))};
      break;
    }
    case RuleId::R23: {
      const Elem t = p[0].elem, s = p[1].elem;
      rhs = {bar(sg, cx_->bl(t, s)), plain(sg, cx_->reps.l(s))};
      break;
    }
    case RuleId::R24: {
      const Elem t = p[0].elem, s = p[1].elem;
      rhs = {plain(sg, cx_->br(s, t)), bar(sg, cx_->reps.r(s))};
      break;
    }
  }
  Word out;
  out.reserve(w.size() - redex.width + rhs.size());
  out.insert(out.end(), w.begin(), w.begin() + redex.pos);
  out.insert(out.end(), rhs.begin(), rhs.end());
  out.insert(out.end(), w.begin() + redex.pos + redex.width, w.end());
  return out;
}

long RewriteSystem::step_budget(const Word& w) const {
  if (step_cap_ > 0) return step_cap_;
  const long len = static_cast<long>(w.size());
  const long n = cx_->sg.order();
  return 4 * len * len * n * n;
}

Word RewriteSystem::reduce(const Word& w, Trace* trace) const {
  return reduce_impl(w, Strategy::Deterministic, 0, trace);
}

Word RewriteSystem::reduce_with(const Word& w, Strategy st, std::uint64_t seed,
                                Trace* trace) const {
  return reduce_impl(w, st, seed, trace);
}

Word RewriteSystem::reduce_impl(const Word& w, Strategy st,
                                std::uint64_t seed, Trace* trace) const {
  if (w.empty()) throw std::invalid_argument("cannot reduce the empty word");
  if (!allow_unsafe_ && !cx_->unamb.verdict)
    throw std::invalid_argument(
        "semigroup is ambiguous; normal forms are not authoritative");
  const long cap = step_budget(w);
  std::mt19937_64 rng(seed);
  Word cur = w;
  Trace local;
  Trace& tr = trace ? *trace : local;
  const std::size_t base = tr.size();
  for (long steps = 0;; ++steps) {
    auto redexes = find_redexes(cur);
    if (redexes.empty()) return cur;
    if (steps >= cap) {
      Trace partial(tr.begin() + base, tr.end());
      throw CapExceeded("step budget of " + std::to_string(cap) +
                            " exceeded; reduction may not terminate",
                        std::move(partial));
    }
    const Redex* pick = &redexes.front();
    if (st == Strategy::Rightmost) {
      // Rightmost position; rule priority still breaks ties, so take the
      // first entry at the maximal position.
      const int last = redexes.back().pos;
      for (const Redex& r : redexes)
        if (r.pos == last) {
          pick = &r;
          break;
        }
    } else if (st == Strategy::Random) {
      std::uniform_int_distribution<std::size_t> d(0, redexes.size() - 1);
      pick = &redexes[d(rng)];
    }
    cur = apply_redex(cur, *pick);
    tr.push_back({*pick, cur});
  }
}

bool RewriteSystem::is_irreducible(const Word& w) const {
  return find_redexes(w).empty();
}

bool RewriteSystem::is_normal_shape(const Word& w) const {
  const GreenData& g = cx_->green;
  const RepChoice& rc = cx_->reps;
  if (w.empty()) return false;
  if (w.size() == 1) return true;
  for (const Sym& s : w)
    if (s.kind == SymKind::Zero) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].kind == w[i + 1].kind) return false;

  bool seen_ascent = false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const Elem x = w[i].elem, y = w[i + 1].elem;
    bool ascent, strict = false;
    if (w[i].kind == SymKind::Plain) {  // pair (x, y') compares on the left
      if (g.incomp_L(x, y)) return false;
      if (g.lt_L(y, x)) {
        ascent = false;
        if (x != rc.r(x)) return false;
      } else {
        ascent = true;
        strict = g.lt_L(x, y);
        if (y != rc.r(y)) return false;
      }
    } else {  // pair (x', y) compares on the right
      if (g.incomp_R(x, y)) return false;
      if (g.lt_R(y, x)) {
        ascent = false;
        if (x != rc.l(x)) return false;
      } else {
        ascent = true;
        strict = g.lt_R(x, y);
        if (y != rc.l(y)) return false;
      }
    }
    if (!ascent && seen_ascent) return false;  // descents precede ascents
    if (ascent && seen_ascent && !strict) return false;
    if (ascent) seen_ascent = true;
  }
  return true;
}

}  // namespace regsem
