#include "regsem/sreg.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace regsem {

namespace {

std::vector<Word> generator_words(const Context& cx) {
  std::vector<Word> gens = {{zero_sym()}};
  for (Elem s = 0; s < cx.sg.order(); ++s)
    if (!cx.sg.is_zero(s)) gens.push_back({plain(cx.sg, s)});
  for (Elem s = 0; s < cx.sg.order(); ++s)
    if (!cx.sg.is_zero(s)) gens.push_back({bar(cx.sg, s)});
  return gens;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

}  // namespace

Word embed(const RewriteSystem& rs, Elem s) {
  return rs.reduce({plain(rs.context().sg, s)});
}

Word multiply(const RewriteSystem& rs, const Word& a, const Word& b) {
  return rs.reduce(concat(a, b));
}

SRegTable enumerate_elements(const RewriteSystem& rs, EnumLimits lim) {
  const Context& cx = rs.context();
  SRegTable t;
  std::unordered_map<Word, int, WordHash> index;
  long steps_used = 0;
  auto reduce_counted = [&](const Word& w) {
    Trace tr;
    Word nf = rs.reduce(w, &tr);
    steps_used += static_cast<long>(tr.size());
    if (steps_used > lim.max_steps)
      throw CapExceeded("enumeration exceeded the step limit of " +
                            std::to_string(lim.max_steps),
                        std::move(tr));
    return nf;
  };
  auto intern = [&](const Word& nf) {
    auto [it, fresh] = index.emplace(nf, static_cast<int>(t.elements.size()));
    if (fresh) {
      t.elements.push_back(nf);
      if (t.elements.size() > lim.max_elements)
        throw CapExceeded("enumeration exceeded the element limit of " +
                              std::to_string(lim.max_elements),
                          {});
    }
    return it->second;
  };

  const auto gens = generator_words(cx);
  for (const Word& gw : gens) intern(reduce_counted(gw));
  for (std::size_t i = 0; i < t.elements.size(); ++i)
    for (const Word& gw : gens)
      intern(reduce_counted(concat(t.elements[i], gw)));

  const int m = static_cast<int>(t.elements.size());
  t.mul.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Word nf = reduce_counted(concat(t.elements[i], t.elements[j]));
      auto it = index.find(nf);
      if (it == index.end())
        throw std::logic_error("product escaped the enumerated set");
      t.mul[i][j] = it->second;
    }
  t.inv.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    Word nf = reduce_counted(involution(t.elements[i]));
    auto it = index.find(nf);
    if (it == index.end())
      throw std::logic_error("involution escaped the enumerated set");
    t.inv[i] = it->second;
  }
  t.embed_of.assign(cx.sg.order(), -1);
  for (Elem s = 0; s < cx.sg.order(); ++s)
    t.embed_of[s] = index.at(reduce_counted({plain(cx.sg, s)}));
  t.zero_index = index.at({zero_sym()});
  return t;
}

std::vector<std::string> check_axioms(const RewriteSystem& rs,
                                      const SRegTable& t) {
  const Semigroup& sg = rs.context().sg;
  const int m = static_cast<int>(t.elements.size());
  std::vector<std::string> out;
  constexpr std::size_t kMaxReported = 20;
  auto report = [&](std::string msg) {
    if (out.size() < kMaxReported) out.push_back(std::move(msg));
  };
  auto nm = [&](int i) { return "(" + format_word(sg, t.elements[i]) + ")"; };

  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) flat[static_cast<std::size_t>(i) * m + j] = t.mul[i][j];
  auto mul = [&](int i, int j) { return flat[static_cast<std::size_t>(i) * m + j]; };

  for (int i = 0; i < m && out.size() < kMaxReported; ++i)
    for (int j = 0; j < m && out.size() < kMaxReported; ++j)
      for (int k = 0; k < m; ++k)
        if (mul(mul(i, j), k) != mul(i, mul(j, k))) {
          report("not associative at " + nm(i) + " " + nm(j) + " " + nm(k));
          break;
        }
  const int z = t.zero_index;
  for (int i = 0; i < m; ++i)
    if (mul(z, i) != z || mul(i, z) != z) report(nm(i) + " does not absorb");
  for (int i = 0; i < m; ++i) {
    if (t.inv[t.inv[i]] != i) report("involution not self-inverse at " + nm(i));
    if (mul(mul(i, t.inv[i]), i) != i)
      report("x x' x != x at " + nm(i));
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (t.inv[mul(i, j)] != mul(t.inv[j], t.inv[i])) {
        report("(xy)' != y'x' at " + nm(i) + " " + nm(j));
        break;
      }
  for (Elem s = 0; s < sg.order(); ++s)
    for (Elem u = 0; u < sg.order(); ++u)
      if (mul(t.embed_of[s], t.embed_of[u]) != t.embed_of[sg.product(s, u)])
        report("embedding not multiplicative at '" + sg.name(s) + "', '" +
               sg.name(u) + "'");
  for (int i = 0; i < m; ++i)
    if (!rs.is_irreducible(t.elements[i]))
      report("stored element " + nm(i) + " is not a normal form");
  return out;
}

std::vector<std::string> fact_2_5_check(const RewriteSystem& rs) {
  const Context& cx = rs.context();
  const Semigroup& sg = cx.sg;
  std::vector<std::string> out;
  for (Elem s = 0; s < sg.order(); ++s) {
    if (sg.is_zero(s)) continue;
    for (Elem r = s + 1; r < sg.order(); ++r) {
      if (sg.is_zero(r)) continue;
      if (cx.green.eq_R(s, r)) {
        Word a = rs.reduce({plain(sg, s), bar(sg, s)});
        Word b = rs.reduce({plain(sg, r), bar(sg, r)});
        if (a != b)
          out.push_back("s s' differs across the R-class: '" + sg.name(s) +
                        "' gives " + format_word(sg, a) + ", '" + sg.name(r) +
                        "' gives " + format_word(sg, b));
      }
      if (cx.green.eq_L(s, r)) {
        Word a = rs.reduce({bar(sg, s), plain(sg, s)});
        Word b = rs.reduce({bar(sg, r), plain(sg, r)});
        if (a != b)
          out.push_back("s' s differs across the L-class: '" + sg.name(s) +
                        "' gives " + format_word(sg, a) + ", '" + sg.name(r) +
                        "' gives " + format_word(sg, b));
      }
    }
  }
  return out;
}

namespace {

// J-classes of a finite semigroup given by a table are the strongly
// connected components of the one-step multiple graph i -> a*i, i -> i*a.
std::vector<int> scc_of_table(const std::vector<std::vector<int>>& mul) {
  const int m = static_cast<int>(mul.size());
  std::vector<int> comp(m, -1), low(m), num(m, -1), stk;
  std::vector<char> on(m, 0);
  int counter = 0, ncomp = 0;
  // Iterative Tarjan; the neighbor iterator is the pair (a, side).
  struct Frame {
    int v;
    int a;
    int side;
  };
  std::vector<Frame> frames;
  for (int root = 0; root < m; ++root) {
    if (num[root] >= 0) continue;
    frames.push_back({root, 0, 0});
    num[root] = low[root] = counter++;
    stk.push_back(root);
    on[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.a < m) {
        int w = f.side == 0 ? mul[f.a][f.v] : mul[f.v][f.a];
        if (++f.side == 2) {
          f.side = 0;
          ++f.a;
        }
        if (num[w] < 0) {
          frames.push_back({w, 0, 0});
          num[w] = low[w] = counter++;
          stk.push_back(w);
          on[w] = 1;
        } else if (on[w]) {
          low[f.v] = std::min(low[f.v], num[w]);
        }
        continue;
      }
      int v = f.v;
      frames.pop_back();
      if (!frames.empty())
        low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == num[v]) {
        while (true) {
          int w = stk.back();
          stk.pop_back();
          on[w] = 0;
          comp[w] = ncomp;
          if (w == v) break;
        }
        ++ncomp;
      }
    }
  }
  // Renumber components by their least member for determinism.
  std::vector<int> order(ncomp, -1);
  int next = 0;
  for (int i = 0; i < m; ++i)
    if (order[comp[i]] < 0) order[comp[i]] = next++;
  for (int i = 0; i < m; ++i) comp[i] = order[comp[i]];
  return comp;
}

}  // namespace

JStructureReport compare_j_structure(const RewriteSystem& rs,
                                     const SRegTable& t) {
  const Context& cx = rs.context();
  const int m = static_cast<int>(t.elements.size());
  JStructureReport rep;

  std::vector<int> comp = scc_of_table(t.mul);
  const int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
  // Reachability over the component condensation gives the J-order.
  std::vector<std::vector<char>> creach(ncomp, std::vector<char>(ncomp, 0));
  for (int c = 0; c < ncomp; ++c) creach[c][c] = 1;
  bool changed = true;
  std::vector<std::vector<char>> edge(ncomp, std::vector<char>(ncomp, 0));
  for (int i = 0; i < m; ++i)
    for (int a = 0; a < m; ++a) {
      edge[comp[i]][comp[t.mul[a][i]]] = 1;
      edge[comp[i]][comp[t.mul[i][a]]] = 1;
    }
  while (changed) {
    changed = false;
    for (int x = 0; x < ncomp; ++x)
      for (int y = 0; y < ncomp; ++y)
        if (edge[x][y])
          for (int z = 0; z < ncomp; ++z)
            if (creach[y][z] && !creach[x][z]) {
              creach[x][z] = 1;
              changed = true;
            }
  }
  auto cover_leq_j = [&](int i, int j) {  // i <=_J j in the cover
    return creach[comp[j]][comp[i]] != 0;
  };

  const int zcomp = comp[t.zero_index];
  std::vector<int> nonzero_comps;
  for (int c = 0; c < ncomp; ++c)
    if (c != zcomp) nonzero_comps.push_back(c);
  rep.cover_j_classes = static_cast<int>(nonzero_comps.size());

  // S-side J-classes (nonzero) in id order, with one sample member each.
  std::vector<Elem> samples;
  for (const auto& members : cx.green.j_members) {
    if (cx.sg.is_zero(members[0])) continue;
    samples.push_back(members[0]);
  }
  rep.s_j_classes = static_cast<int>(samples.size());
  for (Elem s : samples) rep.class_map.push_back(comp[t.embed_of[s]]);

  rep.map_injective = true;
  rep.map_order_preserving = true;
  rep.map_order_reflecting = true;
  for (std::size_t a = 0; a < samples.size(); ++a)
    for (std::size_t b = 0; b < samples.size(); ++b) {
      if (a != b && rep.class_map[a] == rep.class_map[b])
        rep.map_injective = false;
      const bool in_s = cx.green.leq_J(samples[a], samples[b]);
      const bool in_cover =
          cover_leq_j(t.embed_of[samples[a]], t.embed_of[samples[b]]);
      if (in_s && !in_cover) rep.map_order_preserving = false;
      if (in_cover && !in_s) rep.map_order_reflecting = false;
    }

  std::vector<char> meets(ncomp, 0);
  for (Elem s = 0; s < cx.sg.order(); ++s)
    if (!cx.sg.is_zero(s)) meets[comp[t.embed_of[s]]] = 1;
  rep.image_covers_all = true;
  for (int c : nonzero_comps)
    if (!meets[c]) rep.image_covers_all = false;

  for (int c : nonzero_comps) {
    int size = 0, regular = 0;
    for (int i = 0; i < m; ++i) {
      if (comp[i] != c) continue;
      ++size;
      for (int x = 0; x < m; ++x)
        if (t.mul[t.mul[i][x]][i] == i) {
          ++regular;
          break;
        }
    }
    rep.class_size.push_back(size);
    rep.regular_count.push_back(regular);
  }
  return rep;
}

std::string export_table(const RewriteSystem& rs, const SRegTable& t) {
  const Semigroup& sg = rs.context().sg;
  const int m = static_cast<int>(t.elements.size());
  std::vector<std::string> names(m);
  std::unordered_set<std::string> used;
  for (int i = 0; i < m; ++i) {
    std::string name;
    for (const Sym& s : t.elements[i]) {
      if (!name.empty()) name += '_';
      switch (s.kind) {
        case SymKind::Zero: name += "zero"; break;
        case SymKind::Plain: name += "p" + sg.name(s.elem); break;
        case SymKind::Bar: name += "b" + sg.name(s.elem); break;
      }
    }
    while (!used.insert(name).second) name += "_x";
    names[i] = name;
  }
  std::ostringstream out;
  out << "# regular cover of a semigroup of order " << sg.order() << "\n";
  out << "# element i: normal form\n";
  for (int i = 0; i < m; ++i)
    out << "#   " << i << ": " << format_word(sg, t.elements[i]) << "\n";
  out << "elements:";
  for (const auto& n : names) out << ' ' << n;
  out << "\n";
  out << "zero: " << t.zero_index << "\n";
  out << "inv:";
  for (int i : t.inv) out << ' ' << i;
  out << "\n";
  out << "table:\n";
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (j) out << ' ';
      out << names[t.mul[i][j]];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace regsem
