#pragma once

#include <optional>

#include "regsem/representatives.hpp"
#include "regsem/semigroup.hpp"

namespace regsem {

/// Least witness z in S^1 with w = v z, preferring the adjoined identity.
/// Empty iff w is not <=_R v.
std::optional<UnitExt> witness_right(const Semigroup& sg, Elem v, Elem w);

/// Least witness y in S^1 with u = y v, preferring the adjoined identity.
/// Empty iff u is not <=_L v.
std::optional<UnitExt> witness_left(const Semigroup& sg, Elem v, Elem u);

/// b3(u, v, w) = u z where w = v z. Defined for nonzero u, v, w with
/// u <=_L v and w <=_R v; the value does not depend on the witness chosen.
/// Throws std::domain_error naming the failing relation otherwise.
Elem b3(const Semigroup& sg, Elem u, Elem v, Elem w);

/// b_r(u, v) = x r(u) where v = x u. Defined for nonzero u, v with
/// v <=_L u. Throws std::domain_error otherwise.
Elem b_r(const Semigroup& sg, const RepChoice& reps, Elem u, Elem v);

/// b_l(v, u) = l(u) y where v = u y. Defined for nonzero u, v with
/// v <=_R u. Throws std::domain_error otherwise.
Elem b_l(const Semigroup& sg, const RepChoice& reps, Elem v, Elem u);

}  // namespace regsem
