#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "regsem/context.hpp"

namespace regsem {

/// Letter of the cover presentation: the formal zero, a plain generator s,
/// or a barred generator. The zero element of S never appears under Plain
/// or Bar; it is canonicalized to the Zero letter on construction.
enum class SymKind : unsigned char { Zero, Plain, Bar };

struct Sym {
  SymKind kind = SymKind::Zero;
  Elem elem = -1;

  friend bool operator==(const Sym&, const Sym&) = default;
  friend auto operator<=>(const Sym&, const Sym&) = default;
};

using Word = std::vector<Sym>;

Sym zero_sym();
Sym plain(const Semigroup& sg, Elem s);
Sym bar(const Semigroup& sg, Elem s);

/// Reverses the word and swaps Plain with Bar. An anti-automorphism on
/// words; the result of applying it to a normal form need not be normal.
Word involution(const Word& w);

/// Word syntax: whitespace-separated tokens; `0` for the zero letter,
/// `name` for a plain letter, `name'` for a barred one.
Word parse_word(const Semigroup& sg, const std::string& text);
std::string format_word(const Semigroup& sg, const Word& w);

struct WordHash {
  size_t operator()(const Word& w) const;
};

/// Rules in priority order (used to break position ties):
///   R12  any 2-factor containing the zero letter -> (0)
///   R13  (s, t')  -> (0)                if s, t are L-incomparable
///   R14  (s', t)  -> (0)                if s, t are R-incomparable
///   R11P (s, t)   -> (st)
///   R11B (s', t') -> ((ts)')
///   R15  (u, v', w)  -> (b3(u,v,w))     if u <=_L v and w <=_R v
///   R16  (u', v, w') -> (b3(w,v,u)')    if u <=_R v and w <=_L v
///   R21  (s, t')  -> (r_s, b_r(s,t)')   if s >_L t and s != r_s
///   R22  (s', t)  -> (l_s', b_l(t,s))   if s >_R t and s != l_s
///   R23  (t', s)  -> (b_l(t,s)', l_s)   if t <=_R s and s != l_s
///   R24  (t, s')  -> (b_r(s,t), r_s')   if t <=_L s and s != r_s
enum class RuleId : int {
  R12,
  R13,
  R14,
  R11P,
  R11B,
  R15,
  R16,
  R21,
  R22,
  R23,
  R24,
};

const char* rule_name(RuleId rule);

struct Redex {
  int pos = 0;
  RuleId rule = RuleId::R12;
  int width = 2;

  friend bool operator==(const Redex&, const Redex&) = default;
};

enum class Strategy { Deterministic, Rightmost, Random };
std::optional<Strategy> strategy_by_name(const std::string& name);
const char* strategy_name(Strategy st);

struct RewriteStep {
  Redex redex;
  Word result;
};
using Trace = std::vector<RewriteStep>;

/// Thrown when a reduction exceeds its step budget. Carries the partial
/// trace for diagnosis.
struct CapExceeded : std::runtime_error {
  CapExceeded(std::string msg, Trace t)
      : std::runtime_error(std::move(msg)), trace(std::move(t)) {}
  Trace trace;
};

class RewriteSystem {
 public:
  /// Throws std::invalid_argument if the representative choice is
  /// incoherent, unless allow_unsafe is set. step_cap == 0 means the
  /// default budget 4 * len(w)^2 * |S|^2 per reduction.
  explicit RewriteSystem(const Context& cx, bool allow_unsafe = false,
                         long step_cap = 0);

  const Context& context() const { return *cx_; }

  /// All redexes of w, ordered by (position, rule priority).
  std::vector<Redex> find_redexes(const Word& w) const;

  /// Applies one redex. Throws std::logic_error if the redex does not
  /// match w (stale redex).
  Word apply_redex(const Word& w, const Redex& redex) const;

  /// Reduces to normal form with the deterministic strategy (leftmost
  /// redex, rule priority as tie-break). Requires a nonempty word and an
  /// unambiguous semigroup (unless allow_unsafe). Appends steps to *trace
  /// when given. Throws CapExceeded past the step budget.
  Word reduce(const Word& w, Trace* trace = nullptr) const;

  Word reduce_with(const Word& w, Strategy st, std::uint64_t seed = 0,
                   Trace* trace = nullptr) const;

  bool is_irreducible(const Word& w) const;

  /// Structural normal-form test, computed from the shape theorem rather
  /// than from redex search: strict Plain/Bar alternation, no zero letter
  /// (except the word (0) itself), all adjacent pairs comparable, descents
  /// before ascents, representative conditions on each pair, and every
  /// ascent after the first strict.
  bool is_normal_shape(const Word& w) const;

  long step_budget(const Word& w) const;

 private:
  Word reduce_impl(const Word& w, Strategy st, std::uint64_t seed,
                   Trace* trace) const;

  const Context* cx_;
  bool allow_unsafe_;
  long step_cap_;
};

}  // namespace regsem
