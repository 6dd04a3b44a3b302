#pragma once

#include <string>
#include <vector>

#include "regsem/green.hpp"
#include "regsem/semigroup.hpp"

namespace regsem {

/// One representative per R-class and per L-class, stored per element:
/// r(s) is the representative of s's R-class, l(s) of s's L-class.
///
/// A choice is coherent when, within every D-class, all R-class
/// representatives are pairwise L-equivalent, all L-class representatives
/// are pairwise R-equivalent, and whenever an R-representative and an
/// L-representative fall in the same H-class they are the same element.
/// The rewrite engine refuses incoherent choices unless overridden.
struct RepChoice {
  std::vector<Elem> r_of, l_of;

  Elem r(Elem s) const { return r_of[s]; }
  Elem l(Elem s) const { return l_of[s]; }

  friend bool operator==(const RepChoice&, const RepChoice&) = default;
};

/// Canonical coherent choice: in each D-class, anchor on the R-class and
/// L-class of least index; the representative of an R-class is its least
/// element inside the anchor L-class, and dually.
RepChoice choose_representatives(const Semigroup& sg, const GreenData& green);

/// Returns a list of human-readable violations; empty means coherent.
std::vector<std::string> validate_representatives(const Semigroup& sg,
                                                  const GreenData& green,
                                                  const RepChoice& reps);

/// Deliberately incoherent choice for termination experiments: picks
/// representatives on a diagonal across L-classes where a D-class has at
/// least two R- and two L-classes. Falls back to greatest-index picks
/// (which may happen to be coherent) when no such D-class exists.
RepChoice skew_representatives(const Semigroup& sg, const GreenData& green);

/// Applies override lines of the form
///   R <class-member-name> <rep-name>
///   L <class-member-name> <rep-name>
/// on top of a base choice. The named rep must belong to the member's
/// class. '#' comments allowed. Throws ParseError on malformed input.
RepChoice apply_rep_overrides(const Semigroup& sg, const GreenData& green,
                              RepChoice base, const std::string& text);

}  // namespace regsem
