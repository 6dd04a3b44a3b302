#pragma once

#include "regsem/semigroup.hpp"

namespace regsem {

/// Green's relations of a finite semigroup, precomputed as dense tables.
///
/// Element-level preorders use the one-sided ideals of S^1:
///   s <=_L t  iff  s in S^1 t,   s <=_R t  iff  s in t S^1,
///   s <=_J t  iff  s in S^1 t S^1.
/// Class indices are assigned in order of each class's least element, so
/// they are deterministic for a fixed input table.
struct GreenData {
  int n = 0;

  std::vector<std::vector<char>> leq_l_;  // leq_l_[s][t] == (s <=_L t)
  std::vector<std::vector<char>> leq_r_;
  std::vector<std::vector<char>> leq_j_;

  std::vector<int> l_class, r_class, h_class, d_class, j_class;
  std::vector<std::vector<Elem>> l_members, r_members, h_members, d_members,
      j_members;

  bool leq_L(Elem s, Elem t) const { return leq_l_[s][t] != 0; }
  bool leq_R(Elem s, Elem t) const { return leq_r_[s][t] != 0; }
  bool leq_J(Elem s, Elem t) const { return leq_j_[s][t] != 0; }

  bool eq_L(Elem s, Elem t) const { return leq_L(s, t) && leq_L(t, s); }
  bool eq_R(Elem s, Elem t) const { return leq_R(s, t) && leq_R(t, s); }
  bool eq_H(Elem s, Elem t) const { return h_class[s] == h_class[t]; }
  bool eq_D(Elem s, Elem t) const { return d_class[s] == d_class[t]; }
  bool eq_J(Elem s, Elem t) const { return j_class[s] == j_class[t]; }

  bool lt_L(Elem s, Elem t) const { return leq_L(s, t) && !leq_L(t, s); }
  bool lt_R(Elem s, Elem t) const { return leq_R(s, t) && !leq_R(t, s); }

  bool incomp_L(Elem s, Elem t) const { return !leq_L(s, t) && !leq_L(t, s); }
  bool incomp_R(Elem s, Elem t) const { return !leq_R(s, t) && !leq_R(t, s); }
};

GreenData compute_green(const Semigroup& sg);

/// Result of the unambiguity scan. When verdict is false, (s, u, t) is a
/// violating triple on the recorded side: s > u < t with s, t incomparable
/// in the corresponding one-sided order. The zero element, if present, is
/// excluded from the scan.
struct UnambiguityWitness {
  bool verdict = true;
  char side = 0;  // 'L' or 'R' when verdict is false
  Elem s = -1, u = -1, t = -1;
};

UnambiguityWitness is_unambiguous(const Semigroup& sg, const GreenData& green);

/// True iff s = s x s for some x in S.
bool is_regular_element(const Semigroup& sg, Elem s);

}  // namespace regsem
