#include "regsem/representatives.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace regsem {

namespace {

// R-class ids (sorted) occurring in a D-class, and dually.
std::vector<int> classes_in(const std::vector<Elem>& d_members,
                            const std::vector<int>& cls) {
  std::set<int> ids;
  for (Elem x : d_members) ids.insert(cls[x]);
  return {ids.begin(), ids.end()};
}

Elem least_common(const std::vector<Elem>& a, const std::vector<int>& cls,
                  int want) {
  for (Elem x : a)  // members are stored in increasing order
    if (cls[x] == want) return x;
  return -1;
}

}  // namespace

RepChoice choose_representatives(const Semigroup& sg, const GreenData& g) {
  RepChoice rc;
  rc.r_of.assign(g.n, -1);
  rc.l_of.assign(g.n, -1);
  for (const auto& dmem : g.d_members) {
    if (sg.is_zero(dmem[0])) {
      rc.r_of[dmem[0]] = dmem[0];
      rc.l_of[dmem[0]] = dmem[0];
      continue;
    }
    auto rs = classes_in(dmem, g.r_class);
    auto ls = classes_in(dmem, g.l_class);
    const int anchor_r = rs[0], anchor_l = ls[0];
    for (int rid : rs) {
      Elem rep = least_common(g.r_members[rid], g.l_class, anchor_l);
      for (Elem x : g.r_members[rid]) rc.r_of[x] = rep;
    }
    for (int lid : ls) {
      Elem rep = least_common(g.l_members[lid], g.r_class, anchor_r);
      for (Elem x : g.l_members[lid]) rc.l_of[x] = rep;
    }
  }
  return rc;
}

std::vector<std::string> validate_representatives(const Semigroup& sg,
                                                  const GreenData& g,
                                                  const RepChoice& rc) {
  std::vector<std::string> out;
  auto bad = [&](const std::string& msg) { out.push_back(msg); };
  if (static_cast<int>(rc.r_of.size()) != g.n ||
      static_cast<int>(rc.l_of.size()) != g.n) {
    bad("representative maps have wrong size");
    return out;
  }
  for (Elem s = 0; s < g.n; ++s) {
    if (rc.r_of[s] < 0 || rc.r_of[s] >= g.n || rc.l_of[s] < 0 ||
        rc.l_of[s] >= g.n) {
      bad("no representative assigned to '" + sg.name(s) + "'");
      return out;
    }
    if (!g.eq_R(s, rc.r_of[s]))
      bad("'" + sg.name(rc.r_of[s]) + "' is not R-equivalent to '" +
          sg.name(s) + "'");
    if (!g.eq_L(s, rc.l_of[s]))
      bad("'" + sg.name(rc.l_of[s]) + "' is not L-equivalent to '" +
          sg.name(s) + "'");
    if (rc.r_of[s] != rc.r_of[rc.r_of[s]])
      bad("R-representative map is not constant on the class of '" +
          sg.name(s) + "'");
    if (rc.l_of[s] != rc.l_of[rc.l_of[s]])
      bad("L-representative map is not constant on the class of '" +
          sg.name(s) + "'");
  }
  if (!out.empty()) return out;
  for (const auto& dmem : g.d_members) {
    if (sg.is_zero(dmem[0])) continue;
    std::set<Elem> rreps, lreps;
    for (Elem x : dmem) {
      rreps.insert(rc.r_of[x]);
      lreps.insert(rc.l_of[x]);
    }
    for (Elem a : rreps)
      for (Elem b : rreps)
        if (a < b && !g.eq_L(a, b))
          bad("R-representatives '" + sg.name(a) + "' and '" + sg.name(b) +
              "' are not L-equivalent");
    for (Elem a : lreps)
      for (Elem b : lreps)
        if (a < b && !g.eq_R(a, b))
          bad("L-representatives '" + sg.name(a) + "' and '" + sg.name(b) +
              "' are not R-equivalent");
    for (Elem a : rreps)
      for (Elem b : lreps)
        if (g.eq_H(a, b) && a != b)
          bad("representatives '" + sg.name(a) + "' and '" + sg.name(b) +
              "' share an H-class but differ");
  }
  return out;
}

RepChoice skew_representatives(const Semigroup& sg, const GreenData& g) {
  RepChoice rc = choose_representatives(sg, g);
  for (const auto& dmem : g.d_members) {
    if (sg.is_zero(dmem[0])) continue;
    auto rs = classes_in(dmem, g.r_class);
    auto ls = classes_in(dmem, g.l_class);
    if (rs.size() < 2 || ls.size() < 2) continue;
    // Spread the picks across distinct L-classes (and dually): within one
    // D-class the representatives then fail to be mutually related.
    for (std::size_t k = 0; k < rs.size(); ++k) {
      Elem rep = least_common(g.r_members[rs[k]], g.l_class,
                              ls[k % ls.size()]);
      if (rep >= 0)
        for (Elem x : g.r_members[rs[k]]) rc.r_of[x] = rep;
    }
    for (std::size_t k = 0; k < ls.size(); ++k) {
      Elem rep = least_common(g.l_members[ls[k]], g.r_class,
                              rs[k % rs.size()]);
      if (rep >= 0)
        for (Elem x : g.l_members[ls[k]]) rc.l_of[x] = rep;
    }
    return rc;
  }
  for (Elem s = 0; s < g.n; ++s) {
    if (sg.is_zero(s)) continue;
    rc.r_of[s] = g.r_members[g.r_class[s]].back();
    rc.l_of[s] = g.l_members[g.l_class[s]].back();
  }
  return rc;
}

RepChoice apply_rep_overrides(const Semigroup& sg, const GreenData& g,
                              RepChoice base, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string side, member, rep;
    if (!(ls >> side)) continue;
    if (!(ls >> member >> rep) || (side != "R" && side != "L"))
      throw ParseError("override line " + std::to_string(lineno) +
                       ": expected 'R <member> <rep>' or 'L <member> <rep>'");
    std::string extra;
    if (ls >> extra)
      throw ParseError("override line " + std::to_string(lineno) +
                       ": trailing token '" + extra + "'");
    Elem m = sg.element(member), r = sg.element(rep);
    if (side == "R") {
      if (!g.eq_R(m, r))
        throw ParseError("override line " + std::to_string(lineno) + ": '" +
                         rep + "' is not in the R-class of '" + member + "'");
      for (Elem x : g.r_members[g.r_class[m]]) base.r_of[x] = r;
    } else {
      if (!g.eq_L(m, r))
        throw ParseError("override line " + std::to_string(lineno) + ": '" +
                         rep + "' is not in the L-class of '" + member + "'");
      for (Elem x : g.l_members[g.l_class[m]]) base.l_of[x] = r;
    }
  }
  return base;
}

}  // namespace regsem
