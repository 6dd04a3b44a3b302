#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "regsem/rewrite.hpp"

namespace regsem {

/// Letters available over a context: the zero letter plus a plain and a
/// barred letter per nonzero element.
std::vector<Sym> alphabet(const Context& cx);

/// Calls fn on every nonempty word over the alphabet of length <= maxlen,
/// in length-then-lexicographic order.
void for_each_word(const Context& cx, int maxlen,
                   const std::function<void(const Word&)>& fn);

/// Full rewrite graph reachable from start. A terminating, confluent
/// system yields acyclic = true and exactly one sink.
struct BfsResult {
  std::set<Word> sinks;
  bool acyclic = true;
  bool complete = true;  // false if node_cap was hit
  std::size_t nodes = 0;
};

BfsResult confluence_bfs(const RewriteSystem& rs, const Word& start,
                         std::size_t node_cap = 200000);

/// One peak with two overlapping redexes and the fate of its two one-step
/// reducts.
struct CriticalPair {
  Word peak;
  Redex left_redex, right_redex;
  Word left_nf, right_nf;
  bool resolved = true;  // false when a reduction hit its cap
};

struct CriticalPairStats {
  long words_scanned = 0;
  long pairs = 0;
  long joinable = 0;
  std::vector<CriticalPair> divergent;   // joined to different normal forms
  std::vector<CriticalPair> unresolved;  // a side exceeded its budget
};

/// Scans all words up to maxlen for pairs of distinct redexes with
/// overlapping spans and checks both one-step reducts join.
CriticalPairStats critical_pairs(const RewriteSystem& rs, int maxlen = 5);

/// Exhaustive checks of the algebraic laws behind the rewrite rules
/// (identities of b3 / b_r / b_l and their interaction with the orders).
/// Law ids run "3.1" through "3.18"; each is also checked in its mirrored
/// form on the opposite semigroup, reported with a "dual" tag.
struct LemmaReport {
  std::vector<std::string> checked;     // ids actually run
  std::vector<std::string> violations;  // empty means all laws hold
  std::vector<std::string> notes;       // statement repairs applied
};

LemmaReport lemma_suite(const Context& cx,
                        const std::vector<std::string>& ids = {});
std::vector<std::string> all_lemma_ids();

/// Position classes of a fixed-length word under the length-preserving
/// rules, read off the adjacent one-sided comparisons.
enum class PositionClass { Maximal, Minimal, Ascending, Descending, Single };

std::vector<PositionClass> classify_positions(const RewriteSystem& rs,
                                              const Word& w);

/// Checks the invariants of a run of length-preserving steps: position
/// classes and pairwise one-sided comparisons never change, the split into
/// maximal comparable segments is stable, and any maximal position changes
/// its letter at most twice.
struct ContinuityReport {
  bool types_invariant = true;
  bool relations_invariant = true;
  bool segments_invariant = true;
  bool maximal_within_two = true;
  int max_changes_at_maximal = 0;
  std::vector<std::string> issues;
};

/// Diagnoses a full trace by splitting it at the length-reducing steps
/// and checking each length-preserving run.
ContinuityReport diagnose_trace(const RewriteSystem& rs, const Word& start,
                                const Trace& trace);

/// Reduces each word under every given strategy/seed pair and compares
/// the results; observational, for termination experiments.
struct ProbeResult {
  long runs = 0;
  long cap_exceeded = 0;
  long disagreements = 0;
  long max_steps = 0;
  int max_changes_at_maximal = 0;
  std::vector<std::string> notes;
};

ProbeResult termination_probe(
    const RewriteSystem& rs, const std::vector<Word>& words,
    const std::vector<std::pair<Strategy, std::uint64_t>>& strategies);

}  // namespace regsem
