#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quasitruth {

/// Vocabulary of a first-order language without function symbols: predicate
/// letters with fixed arities plus individual constants. Arity-0 predicates
/// act as propositional constants. Declaration order of predicates is
/// preserved; it fixes the canonical cell ordering used everywhere else.
class Signature {
public:
  Signature() = default;

  /// Throws std::invalid_argument if names are empty, repeated, shared
  /// between predicates and constants, or an arity is negative.
  Signature(std::vector<std::pair<std::string, int>> predicates,
            std::vector<std::string> constants,
            bool equality_enabled = false);

  const std::vector<std::pair<std::string, int>>& predicates() const { return predicates_; }
  const std::vector<std::string>& constants() const { return constants_; }
  bool equality_enabled() const { return equality_; }

  std::optional<int> arity_of(std::string_view predicate) const;
  std::optional<std::size_t> predicate_index(std::string_view predicate) const;
  bool has_predicate(std::string_view name) const { return arity_of(name).has_value(); }
  bool has_constant(std::string_view name) const;

private:
  std::vector<std::pair<std::string, int>> predicates_;  // declaration order
  std::vector<std::string> constants_;
  bool equality_ = false;
  std::map<std::string, std::size_t, std::less<>> predicate_index_;
  std::set<std::string, std::less<>> constant_set_;
};

}  // namespace quasitruth
