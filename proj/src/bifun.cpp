#include "regsem/bifun.hpp"

#include <stdexcept>

namespace regsem {

namespace {

void require_nonzero(const Semigroup& sg, Elem x, const char* role) {
  if (x < 0 || x >= sg.order())
    throw std::domain_error(std::string(role) + " out of range");
  if (sg.is_zero(x))
    throw std::domain_error(std::string(role) +
                            " must be nonzero, got the zero element '" +
                            sg.name(x) + "'");
}

}  // namespace

std::optional<UnitExt> witness_right(const Semigroup& sg, Elem v, Elem w) {
  if (w == v) return UnitExt::one();
  for (Elem z = 0; z < sg.order(); ++z)
    if (sg.product(v, z) == w) return UnitExt::of(z);
  return std::nullopt;
}

std::optional<UnitExt> witness_left(const Semigroup& sg, Elem v, Elem u) {
  if (u == v) return UnitExt::one();
  for (Elem y = 0; y < sg.order(); ++y)
    if (sg.product(y, v) == u) return UnitExt::of(y);
  return std::nullopt;
}

Elem b3(const Semigroup& sg, Elem u, Elem v, Elem w) {
  require_nonzero(sg, u, "first argument");
  require_nonzero(sg, v, "second argument");
  require_nonzero(sg, w, "third argument");
  if (!witness_left(sg, v, u))
    throw std::domain_error("b3 undefined: '" + sg.name(u) +
                            "' is not L-below '" + sg.name(v) + "'");
  auto z = witness_right(sg, v, w);
  if (!z)
    throw std::domain_error("b3 undefined: '" + sg.name(w) +
                            "' is not R-below '" + sg.name(v) + "'");
  return sg.act_right(u, *z);
}

Elem b_r(const Semigroup& sg, const RepChoice& reps, Elem u, Elem v) {
  require_nonzero(sg, u, "first argument");
  require_nonzero(sg, v, "second argument");
  auto x = witness_left(sg, u, v);
  if (!x)
    throw std::domain_error("b_r undefined: '" + sg.name(v) +
                            "' is not L-below '" + sg.name(u) + "'");
  return sg.act_left(*x, reps.r(u));
}

Elem b_l(const Semigroup& sg, const RepChoice& reps, Elem v, Elem u) {
  require_nonzero(sg, v, "first argument");
  require_nonzero(sg, u, "second argument");
  auto y = witness_right(sg, u, v);
  if (!y)
    throw std::domain_error("b_l undefined: '" + sg.name(v) +
                            "' is not R-below '" + sg.name(u) + "'");
  return sg.act_right(reps.l(u), *y);
}

}  // namespace regsem
