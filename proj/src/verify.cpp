#include "regsem/verify.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

namespace regsem {

std::vector<Sym> alphabet(const Context& cx) {
  std::vector<Sym> out = {zero_sym()};
  for (Elem s = 0; s < cx.sg.order(); ++s)
    if (!cx.sg.is_zero(s)) out.push_back({SymKind::Plain, s});
  for (Elem s = 0; s < cx.sg.order(); ++s)
    if (!cx.sg.is_zero(s)) out.push_back({SymKind::Bar, s});
  return out;
}

void for_each_word(const Context& cx, int maxlen,
                   const std::function<void(const Word&)>& fn) {
  const auto syms = alphabet(cx);
  const int k = static_cast<int>(syms.size());
  Word w;
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<int> idx(len, 0);
    w.assign(len, syms[0]);
    while (true) {
      for (int i = 0; i < len; ++i) w[i] = syms[idx[i]];
      fn(w);
      int i = len - 1;
      while (i >= 0 && ++idx[i] == k) idx[i--] = 0;
      if (i < 0) break;
    }
  }
}

BfsResult confluence_bfs(const RewriteSystem& rs, const Word& start,
                         std::size_t node_cap) {
  BfsResult res;
  std::unordered_map<Word, int, WordHash> id;
  std::vector<Word> words;
  std::vector<std::vector<int>> succ;
  auto intern = [&](const Word& w) {
    auto [it, fresh] = id.emplace(w, static_cast<int>(words.size()));
    if (fresh) {
      words.push_back(w);
      succ.push_back({});
    }
    return it->second;
  };
  intern(start);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words.size() > node_cap) {
      res.complete = false;
      break;
    }
    Word w = words[i];
    auto redexes = rs.find_redexes(w);
    if (redexes.empty()) res.sinks.insert(w);
    for (const Redex& r : redexes) {
      const int target = intern(rs.apply_redex(w, r));  // may grow succ
      succ[i].push_back(target);
    }
  }
  res.nodes = words.size();
  // Cycle detection over the explored graph (iterative three-color DFS).
  std::vector<char> color(words.size(), 0);
  for (std::size_t root = 0; root < words.size() && res.acyclic; ++root) {
    if (color[root]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(root), 0}};
    color[root] = 1;
    while (!stack.empty() && res.acyclic) {
      auto& [v, next] = stack.back();
      if (next < succ[v].size()) {
        int w = succ[v][next++];
        if (color[w] == 1) {
          res.acyclic = false;
        } else if (color[w] == 0) {
          color[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return res;
}

CriticalPairStats critical_pairs(const RewriteSystem& rs, int maxlen) {
  CriticalPairStats st;
  constexpr std::size_t kKeep = 20;
  for_each_word(rs.context(), maxlen, [&](const Word& w) {
    ++st.words_scanned;
    auto redexes = rs.find_redexes(w);
    for (std::size_t a = 0; a < redexes.size(); ++a)
      for (std::size_t b = a + 1; b < redexes.size(); ++b) {
        const Redex &ra = redexes[a], &rb = redexes[b];
        if (ra.pos + ra.width <= rb.pos) continue;  // disjoint spans
        ++st.pairs;
        CriticalPair cp;
        cp.peak = w;
        cp.left_redex = ra;
        cp.right_redex = rb;
        try {
          cp.left_nf = rs.reduce(rs.apply_redex(w, ra));
          cp.right_nf = rs.reduce(rs.apply_redex(w, rb));
        } catch (const CapExceeded&) {
          cp.resolved = false;
        }
        if (!cp.resolved) {
          if (st.unresolved.size() < kKeep) st.unresolved.push_back(cp);
        } else if (cp.left_nf != cp.right_nf) {
          if (st.divergent.size() < kKeep) st.divergent.push_back(cp);
        } else {
          ++st.joinable;
        }
      }
  });
  return st;
}

namespace {

// Relation between adjacent letters: pairs (plain, bar) compare in the
// L-order, pairs (bar, plain) in the R-order. Break marks pairs that the
// length-preserving rules never touch (zero letter or equal kinds).
enum class PairRel { Lt, Eq, Gt, Incomp, Break };

PairRel pair_rel(const Context& cx, const Sym& a, const Sym& b) {
  if (a.kind == SymKind::Zero || b.kind == SymKind::Zero || a.kind == b.kind)
    return PairRel::Break;
  const bool left_order = a.kind == SymKind::Plain;
  const bool le = left_order ? cx.green.leq_L(a.elem, b.elem)
                             : cx.green.leq_R(a.elem, b.elem);
  const bool ge = left_order ? cx.green.leq_L(b.elem, a.elem)
                             : cx.green.leq_R(b.elem, a.elem);
  if (le && ge) return PairRel::Eq;
  if (le) return PairRel::Lt;
  if (ge) return PairRel::Gt;
  return PairRel::Incomp;
}

std::vector<PairRel> pair_rels(const Context& cx, const Word& w) {
  std::vector<PairRel> rels;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    rels.push_back(pair_rel(cx, w[i], w[i + 1]));
  return rels;
}

bool is_segment_edge(PairRel r) {
  return r == PairRel::Break || r == PairRel::Incomp;
}

}  // namespace

std::vector<PositionClass> classify_positions(const RewriteSystem& rs,
                                              const Word& w) {
  const auto rels = pair_rels(rs.context(), w);
  std::vector<PositionClass> out(w.size(), PositionClass::Single);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool has_left = i > 0 && !is_segment_edge(rels[i - 1]);
    const bool has_right = i + 1 < w.size() && !is_segment_edge(rels[i]);
    // "Up on the left" means the letter before is not above this one.
    const bool up_left = has_left && rels[i - 1] != PairRel::Gt;
    const bool down_right = has_right && rels[i] == PairRel::Gt;
    if (!has_left && !has_right) {
      out[i] = PositionClass::Single;
    } else if (!has_left) {
      out[i] = down_right ? PositionClass::Maximal : PositionClass::Minimal;
    } else if (!has_right) {
      out[i] = up_left ? PositionClass::Maximal : PositionClass::Minimal;
    } else if (up_left && down_right) {
      out[i] = PositionClass::Maximal;
    } else if (!up_left && !down_right) {
      out[i] = PositionClass::Minimal;
    } else if (up_left) {
      out[i] = PositionClass::Ascending;
    } else {
      out[i] = PositionClass::Descending;
    }
  }
  return out;
}

namespace {

bool is_length_preserving(RuleId r) {
  return r == RuleId::R21 || r == RuleId::R22 || r == RuleId::R23 ||
         r == RuleId::R24;
}

void check_run(const RewriteSystem& rs, const Word& start,
               const std::vector<const Word*>& run, ContinuityReport& rep) {
  const Context& cx = rs.context();
  const auto types0 = classify_positions(rs, start);
  const auto rels0 = pair_rels(cx, start);
  std::vector<int> changes(start.size(), 0);
  const Word* prev = &start;
  for (const Word* w : run) {
    if (w->size() != start.size()) {
      rep.issues.push_back("length changed inside a length-preserving run");
      rep.segments_invariant = false;
      return;
    }
    if (classify_positions(rs, *w) != types0) {
      rep.types_invariant = false;
      rep.issues.push_back("position classes changed");
    }
    const auto rels = pair_rels(cx, *w);
    if (rels != rels0) {
      rep.relations_invariant = false;
      rep.issues.push_back("pairwise comparisons changed");
    }
    for (std::size_t i = 0; i < rels.size(); ++i)
      if (is_segment_edge(rels[i]) != is_segment_edge(rels0[i])) {
        rep.segments_invariant = false;
        rep.issues.push_back("segment boundaries moved");
        break;
      }
    for (std::size_t i = 0; i < w->size(); ++i)
      if ((*w)[i] != (*prev)[i]) ++changes[i];
    prev = w;
  }
  for (std::size_t i = 0; i < start.size(); ++i) {
    if (types0[i] != PositionClass::Maximal) continue;
    rep.max_changes_at_maximal =
        std::max(rep.max_changes_at_maximal, changes[i]);
    if (changes[i] > 2) {
      rep.maximal_within_two = false;
      rep.issues.push_back("a maximal position changed " +
                           std::to_string(changes[i]) + " times");
    }
  }
}

}  // namespace

ContinuityReport diagnose_trace(const RewriteSystem& rs, const Word& start,
                                const Trace& trace) {
  ContinuityReport rep;
  const Word* cur = &start;
  const Word* run_start = cur;
  std::vector<const Word*> run;
  for (const RewriteStep& step : trace) {
    if (is_length_preserving(step.redex.rule)) {
      if (run.empty()) run_start = cur;
      run.push_back(&step.result);
    } else if (!run.empty()) {
      check_run(rs, *run_start, run, rep);
      run.clear();
    }
    cur = &step.result;
  }
  if (!run.empty()) check_run(rs, *run_start, run, rep);
  return rep;
}

ProbeResult termination_probe(
    const RewriteSystem& rs, const std::vector<Word>& words,
    const std::vector<std::pair<Strategy, std::uint64_t>>& strategies) {
  ProbeResult res;
  constexpr std::size_t kMaxNotes = 20;
  auto note = [&](std::string msg) {
    if (res.notes.size() < kMaxNotes) res.notes.push_back(std::move(msg));
  };
  for (const Word& w : words) {
    bool have_ref = false;
    Word ref;
    for (const auto& [st, seed] : strategies) {
      ++res.runs;
      Trace tr;
      try {
        Word nf = rs.reduce_with(w, st, seed, &tr);
        res.max_steps = std::max(res.max_steps, static_cast<long>(tr.size()));
        ContinuityReport cont = diagnose_trace(rs, w, tr);
        res.max_changes_at_maximal = std::max(res.max_changes_at_maximal,
                                              cont.max_changes_at_maximal);
        if (!have_ref) {
          ref = nf;
          have_ref = true;
        } else if (nf != ref) {
          ++res.disagreements;
          note(std::string("strategies disagree under ") + strategy_name(st));
        }
      } catch (const CapExceeded&) {
        ++res.cap_exceeded;
        note(std::string("step budget exceeded under ") + strategy_name(st) +
             " seed " + std::to_string(seed));
      }
    }
  }
  return res;
}

}  // namespace regsem
