#pragma once

#include <vector>

#include "regsem/bifun.hpp"
#include "regsem/green.hpp"
#include "regsem/representatives.hpp"
#include "regsem/semigroup.hpp"

namespace regsem {

/// Everything the rewrite engine needs about one semigroup, bundled and
/// precomputed: Green structure, a representative choice, the unambiguity
/// verdict, and dense caches of the three partial products. Cache entries
/// are -1 where the function is undefined.
struct Context {
  Semigroup sg;
  GreenData green;
  RepChoice reps;
  UnambiguityWitness unamb;

  std::vector<std::vector<Elem>> br_;  // br_[u][v] = b_r(u, v)
  std::vector<std::vector<Elem>> bl_;  // bl_[v][u] = b_l(v, u)
  std::vector<std::vector<std::vector<Elem>>> b_;  // b_[u][v][w]

  Elem br(Elem u, Elem v) const { return br_[u][v]; }
  Elem bl(Elem v, Elem u) const { return bl_[v][u]; }
  Elem b(Elem u, Elem v, Elem w) const { return b_[u][v][w]; }
};

Context make_context(Semigroup sg);
Context make_context(Semigroup sg, RepChoice reps);

/// The same semigroup with its multiplication transposed. L- and R-data
/// swap roles, so statements about b_r transfer to b_l and vice versa.
Context opposite_context(const Context& cx);

}  // namespace regsem
