#include "regsem/context.hpp"

#include <utility>

namespace regsem {

namespace {

void build_tables(Context& cx) {
  const int n = cx.sg.order();
  auto nz = [&](Elem x) { return !cx.sg.is_zero(x); };
  cx.br_.assign(n, std::vector<Elem>(n, -1));
  cx.bl_.assign(n, std::vector<Elem>(n, -1));
  cx.b_.assign(n, std::vector<std::vector<Elem>>(n, std::vector<Elem>(n, -1)));
  for (Elem u = 0; u < n; ++u) {
    if (!nz(u)) continue;
    for (Elem v = 0; v < n; ++v) {
      if (!nz(v)) continue;
      if (cx.green.leq_L(v, u)) cx.br_[u][v] = b_r(cx.sg, cx.reps, u, v);
      if (cx.green.leq_R(v, u)) cx.bl_[v][u] = b_l(cx.sg, cx.reps, v, u);
    }
  }
  for (Elem u = 0; u < n; ++u) {
    if (!nz(u)) continue;
    for (Elem v = 0; v < n; ++v) {
      if (!nz(v) || !cx.green.leq_L(u, v)) continue;
      for (Elem w = 0; w < n; ++w)
        if (nz(w) && cx.green.leq_R(w, v))
          cx.b_[u][v][w] = b3(cx.sg, u, v, w);
    }
  }
}

}  // namespace

Context make_context(Semigroup sg) {
  GreenData g = compute_green(sg);
  RepChoice rc = choose_representatives(sg, g);
  return make_context(std::move(sg), std::move(rc));
}

Context make_context(Semigroup sg, RepChoice reps) {
  Context cx{std::move(sg), {}, std::move(reps), {}, {}, {}, {}};
  cx.green = compute_green(cx.sg);
  cx.unamb = is_unambiguous(cx.sg, cx.green);
  build_tables(cx);
  return cx;
}

Context opposite_context(const Context& cx) {
  const int n = cx.sg.order();
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = cx.sg.product(j, i);
  Semigroup op(cx.sg.names(), std::move(t));
  RepChoice rc{cx.reps.l_of, cx.reps.r_of};  // roles swap with the sides
  return make_context(std::move(op), std::move(rc));
}

}  // namespace regsem
