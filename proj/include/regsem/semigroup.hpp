#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace regsem {

/// Dense index of a semigroup element. Names exist only at I/O boundaries.
using Elem = int;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A value of S^1: either the adjoined identity or an element of S.
struct UnitExt {
  bool is_one = true;
  Elem elem = -1;

  static UnitExt one() { return {}; }
  static UnitExt of(Elem e) { return {false, e}; }

  friend bool operator==(const UnitExt&, const UnitExt&) = default;
};

/// A finite semigroup given by its full multiplication table.
///
/// The constructor validates associativity and detects an absorbing zero
/// and a two-sided identity if present. Instances are immutable and safe
/// for unrestricted concurrent reads.
class Semigroup {
 public:
  static constexpr int kDefaultMaxOrder = 64;

  Semigroup(std::vector<std::string> names,
            std::vector<std::vector<Elem>> table);

  /// Parses the line-oriented table format:
  ///   elements: a b c
  ///   <n rows of n element names>
  /// '#' starts a comment. Lines beginning with "zero:", "inv:" or "table:"
  /// (emitted by the table exporter) are ignored on ingest.
  static Semigroup parse(const std::string& text,
                         int max_order = kDefaultMaxOrder);

  int order() const { return n_; }
  const std::string& name(Elem s) const { return names_[s]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Elem> find_element(const std::string& name) const;
  Elem element(const std::string& name) const;  // throws ParseError

  Elem product(Elem s, Elem t) const { return table_[s][t]; }

  UnitExt unit_product(UnitExt x, UnitExt y) const;
  /// x * s with x in S^1.
  Elem act_left(UnitExt x, Elem s) const {
    return x.is_one ? s : table_[x.elem][s];
  }
  /// s * x with x in S^1.
  Elem act_right(Elem s, UnitExt x) const {
    return x.is_one ? s : table_[s][x.elem];
  }

  std::optional<Elem> zero() const { return zero_; }
  std::optional<Elem> identity() const { return identity_; }
  bool is_zero(Elem s) const { return zero_.has_value() && *zero_ == s; }

 private:
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<Elem>> table_;
  std::optional<Elem> zero_;
  std::optional<Elem> identity_;
};

}  // namespace regsem
