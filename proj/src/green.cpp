#include "regsem/green.hpp"

#include <functional>

namespace regsem {

namespace {

// Classes are numbered in order of their least element.
void assign_classes(int n, const std::function<bool(int, int)>& eq,
                    std::vector<int>& cls,
                    std::vector<std::vector<Elem>>& members) {
  cls.assign(n, -1);
  members.clear();
  for (int s = 0; s < n; ++s) {
    if (cls[s] >= 0) continue;
    int id = static_cast<int>(members.size());
    members.push_back({});
    for (int t = s; t < n; ++t)
      if (cls[t] < 0 && eq(s, t)) {
        cls[t] = id;
        members[id].push_back(t);
      }
  }
}

}  // namespace

GreenData compute_green(const Semigroup& sg) {
  const int n = sg.order();
  GreenData g;
  g.n = n;
  g.leq_l_.assign(n, std::vector<char>(n, 0));
  g.leq_r_.assign(n, std::vector<char>(n, 0));
  g.leq_j_.assign(n, std::vector<char>(n, 0));
  for (int t = 0; t < n; ++t) {
    g.leq_l_[t][t] = 1;
    g.leq_r_[t][t] = 1;
    for (int x = 0; x < n; ++x) {
      g.leq_l_[sg.product(x, t)][t] = 1;
      g.leq_r_[sg.product(t, x)][t] = 1;
    }
  }
  for (int t = 0; t < n; ++t) {
    // S^1 t S^1: x and y range over S plus the adjoined identity.
    for (int x = -1; x < n; ++x) {
      int xt = x < 0 ? t : sg.product(x, t);
      g.leq_j_[xt][t] = 1;
      for (int y = 0; y < n; ++y) g.leq_j_[sg.product(xt, y)][t] = 1;
    }
  }

  assign_classes(
      n, [&](int s, int t) { return g.eq_L(s, t); }, g.l_class, g.l_members);
  assign_classes(
      n, [&](int s, int t) { return g.eq_R(s, t); }, g.r_class, g.r_members);
  assign_classes(
      n,
      [&](int s, int t) {
        return g.l_class[s] == g.l_class[t] && g.r_class[s] == g.r_class[t];
      },
      g.h_class, g.h_members);
  assign_classes(
      n,
      [&](int s, int t) {
        for (int u = 0; u < n; ++u)
          if (g.eq_L(s, u) && g.eq_R(u, t)) return true;
        return false;
      },
      g.d_class, g.d_members);
  assign_classes(
      n, [&](int s, int t) { return g.leq_J(s, t) && g.leq_J(t, s); },
      g.j_class, g.j_members);
  return g;
}

UnambiguityWitness is_unambiguous(const Semigroup& sg,
                                  const GreenData& g) {
  const int n = sg.order();
  // The zero, when present, sits below everything on both sides and is
  // excluded: scanning it would make every semigroup with a zero and two
  // incomparable elements fail vacuously.
  auto skip = [&](Elem x) { return sg.is_zero(x); };
  for (Elem u = 0; u < n; ++u) {
    if (skip(u)) continue;
    for (Elem s = 0; s < n; ++s) {
      if (skip(s) || !g.lt_L(u, s)) continue;
      for (Elem t = s + 1; t < n; ++t)
        if (!skip(t) && g.lt_L(u, t) && g.incomp_L(s, t))
          return {false, 'L', s, u, t};
    }
  }
  for (Elem u = 0; u < n; ++u) {
    if (skip(u)) continue;
    for (Elem s = 0; s < n; ++s) {
      if (skip(s) || !g.lt_R(u, s)) continue;
      for (Elem t = s + 1; t < n; ++t)
        if (!skip(t) && g.lt_R(u, t) && g.incomp_R(s, t))
          return {false, 'R', s, u, t};
    }
  }
  return {};
}

bool is_regular_element(const Semigroup& sg, Elem s) {
  for (int x = 0; x < sg.order(); ++x)
    if (sg.product(sg.product(s, x), s) == s) return true;
  return false;
}

}  // namespace regsem
