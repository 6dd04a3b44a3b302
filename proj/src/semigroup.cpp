#include "regsem/semigroup.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace regsem {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Semigroup::Semigroup(std::vector<std::string> names,
                     std::vector<std::vector<Elem>> table)
    : n_(static_cast<int>(names.size())),
      names_(std::move(names)),
      table_(std::move(table)) {
  if (n_ == 0) throw ParseError("semigroup must have at least one element");
  std::unordered_map<std::string, int> seen;
  for (int i = 0; i < n_; ++i) {
    if (!seen.emplace(names_[i], i).second)
      throw ParseError("duplicate element name '" + names_[i] + "'");
  }
  if (static_cast<int>(table_.size()) != n_)
    throw ParseError("table must have one row per element");
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(table_[i].size()) != n_)
      throw ParseError("row for '" + names_[i] + "' has wrong length");
    for (int j = 0; j < n_; ++j)
      if (table_[i][j] < 0 || table_[i][j] >= n_)
        throw ParseError("table entry out of range");
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        if (table_[table_[i][j]][k] != table_[i][table_[j][k]])
          throw ParseError("not associative: (" + names_[i] + " " + names_[j] +
                           ") " + names_[k] + " != " + names_[i] + " (" +
                           names_[j] + " " + names_[k] + ")");
  for (int z = 0; z < n_; ++z) {
    bool absorbing = true;
    for (int x = 0; x < n_ && absorbing; ++x)
      absorbing = table_[z][x] == z && table_[x][z] == z;
    if (absorbing) {
      zero_ = z;
      break;  // an absorbing element is unique
    }
  }
  for (int e = 0; e < n_; ++e) {
    bool neutral = true;
    for (int x = 0; x < n_ && neutral; ++x)
      neutral = table_[e][x] == x && table_[x][e] == x;
    if (neutral) {
      identity_ = e;
      break;
    }
  }
}

Semigroup Semigroup::parse(const std::string& text, int max_order) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> rows;
  bool have_elements = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos)
      line.erase(pos);
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (!have_elements) {
      if (tokens[0] != "elements:")
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected 'elements:' header");
      names.assign(tokens.begin() + 1, tokens.end());
      have_elements = true;
      continue;
    }
    // Exporter metadata; the zero is re-detected and the involution is
    // not part of the plain semigroup.
    if (tokens[0] == "zero:" || tokens[0] == "inv:" || tokens[0] == "table:")
      continue;
    rows.push_back(std::move(tokens));
  }
  if (!have_elements) throw ParseError("missing 'elements:' header");
  if (names.empty()) throw ParseError("empty element list");
  if (static_cast<int>(names.size()) > max_order)
    throw ParseError("order " + std::to_string(names.size()) +
                     " exceeds the limit of " + std::to_string(max_order));
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) {
    if (!valid_name(names[i]))
      throw ParseError("invalid element name '" + names[i] + "'");
    if (!index.emplace(names[i], i).second)
      throw ParseError("duplicate element name '" + names[i] + "'");
  }
  const int n = static_cast<int>(names.size());
  if (static_cast<int>(rows.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " table rows, got " +
                     std::to_string(rows.size()));
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw ParseError("row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(n));
    for (int j = 0; j < n; ++j) {
      auto it = index.find(rows[i][j]);
      if (it == index.end())
        throw ParseError("unknown element '" + rows[i][j] + "' in row " +
                         std::to_string(i + 1));
      table[i][j] = it->second;
    }
  }
  return Semigroup(std::move(names), std::move(table));
}

std::optional<Elem> Semigroup::find_element(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Elem Semigroup::element(const std::string& name) const {
  if (auto e = find_element(name)) return *e;
  throw ParseError("unknown element '" + name + "'");
}

UnitExt Semigroup::unit_product(UnitExt x, UnitExt y) const {
  if (x.is_one) return y;
  if (y.is_one) return x;
  return UnitExt::of(table_[x.elem][y.elem]);
}

}  // namespace regsem
