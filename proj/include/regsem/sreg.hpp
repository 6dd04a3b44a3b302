#pragma once

#include <string>
#include <vector>

#include "regsem/rewrite.hpp"

namespace regsem {

/// The regular cover of S, enumerated as normal-form words with a full
/// multiplication table, involution and the embedding of S.
struct SRegTable {
  std::vector<Word> elements;          // index -> normal form
  std::vector<std::vector<int>> mul;   // mul[i][j]
  std::vector<int> inv;                // involution as a permutation
  std::vector<int> embed_of;           // S element -> cover index
  int zero_index = -1;
};

struct EnumLimits {
  std::size_t max_elements = 100000;
  long max_steps = 10000000;  // cumulative rewrite steps across the run
};

/// Image of one S element: the reduced one-letter word.
Word embed(const RewriteSystem& rs, Elem s);

/// Product of two cover elements: reduce the concatenation.
Word multiply(const RewriteSystem& rs, const Word& a, const Word& b);

/// Closes {(0)} and the one-letter plain/barred words under right
/// multiplication by generators, then fills in the full table and the
/// involution. Throws CapExceeded when a limit is hit.
SRegTable enumerate_elements(const RewriteSystem& rs, EnumLimits lim = {});

/// Exhaustive checks on an enumerated table: associativity, absorbing
/// zero, x'' = x, (xy)' = y'x', x x' x = x (regularity), and agreement of
/// mul/inv with reduction. Returns human-readable violations.
std::vector<std::string> check_axioms(const RewriteSystem& rs,
                                      const SRegTable& t);

/// R-equivalent s, r must satisfy s s' = r r' in the cover, and dually
/// s' s = r' r for L-equivalent pairs. Returns violations.
std::vector<std::string> fact_2_5_check(const RewriteSystem& rs);

/// How the J-order of the cover sits over the J-order of S.
struct JStructureReport {
  int s_j_classes = 0;              // nonzero J-classes of S
  int cover_j_classes = 0;          // nonzero J-classes of the cover
  bool map_injective = false;       // distinct S classes stay distinct
  bool map_order_preserving = false;
  bool map_order_reflecting = false;
  bool image_covers_all = false;    // every nonzero cover class meets im(S)
  std::vector<int> class_map;       // S J-class id -> cover J-class id
  std::vector<int> regular_count;   // per nonzero cover J-class
  std::vector<int> class_size;      // per nonzero cover J-class
};

JStructureReport compare_j_structure(const RewriteSystem& rs,
                                     const SRegTable& t);

/// Serializes the table in the Cayley format (with the normal forms, the
/// zero index and the involution recorded alongside), so the output can be
/// ingested again by Semigroup::parse.
std::string export_table(const RewriteSystem& rs, const SRegTable& t);

}  // namespace regsem
