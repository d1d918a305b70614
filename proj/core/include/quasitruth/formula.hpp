#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quasitruth/signature.hpp"

namespace quasitruth {

/// A term is an individual constant or a variable. Which one an identifier
/// denotes is decided against a Signature (constants are declared there).
class Term {
public:
  enum class Kind { Constant, Variable };

  static Term constant(std::string name) { return Term(Kind::Constant, std::move(name)); }
  static Term variable(std::string name) { return Term(Kind::Variable, std::move(name)); }

  Kind kind() const { return kind_; }
  bool is_constant() const { return kind_ == Kind::Constant; }
  bool is_variable() const { return kind_ == Kind::Variable; }
  const std::string& name() const { return name_; }

  friend bool operator==(const Term& a, const Term& b) {
    return a.kind_ == b.kind_ && a.name_ == b.name_;
  }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
  Term(Kind k, std::string n) : kind_(k), name_(std::move(n)) {}
  Kind kind_;
  std::string name_;
};

enum class BinaryOp { And, Or, Implies, Iff };
enum class Quantifier { ForAll, Exists };

class Formula;

struct AtomNode {
  std::string predicate;
  std::vector<Term> args;
};
struct EqualsNode {
  Term lhs;
  Term rhs;
};

/// Immutable formula AST with shared subtrees. Equality is structural.
class Formula {
public:
  struct Node;

  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula equals(Term lhs, Term rhs);
  static Formula negation(Formula body);
  static Formula binary(BinaryOp op, Formula lhs, Formula rhs);
  static Formula conjunction(Formula lhs, Formula rhs) { return binary(BinaryOp::And, std::move(lhs), std::move(rhs)); }
  static Formula disjunction(Formula lhs, Formula rhs) { return binary(BinaryOp::Or, std::move(lhs), std::move(rhs)); }
  static Formula implication(Formula lhs, Formula rhs) { return binary(BinaryOp::Implies, std::move(lhs), std::move(rhs)); }
  static Formula iff(Formula lhs, Formula rhs) { return binary(BinaryOp::Iff, std::move(lhs), std::move(rhs)); }
  static Formula quantified(Quantifier q, std::string var, Formula body);
  static Formula for_all(std::string var, Formula body) { return quantified(Quantifier::ForAll, std::move(var), std::move(body)); }
  static Formula exists(std::string var, Formula body) { return quantified(Quantifier::Exists, std::move(var), std::move(body)); }

  const Node& node() const { return *node_; }

  /// Stable identity of this AST node; parsers key source positions on it.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct NotNode {
  Formula body;
};
struct BinaryNode {
  BinaryOp op;
  Formula lhs;
  Formula rhs;
};
struct QuantifierNode {
  Quantifier q;
  std::string var;
  Formula body;
};

struct Formula::Node {
  std::variant<AtomNode, EqualsNode, NotNode, BinaryNode, QuantifierNode> v;
};

inline Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  return Formula(std::make_shared<const Node>(Node{AtomNode{std::move(predicate), std::move(args)}}));
}
inline Formula Formula::equals(Term lhs, Term rhs) {
  return Formula(std::make_shared<const Node>(Node{EqualsNode{std::move(lhs), std::move(rhs)}}));
}
inline Formula Formula::negation(Formula body) {
  return Formula(std::make_shared<const Node>(Node{NotNode{std::move(body)}}));
}
inline Formula Formula::binary(BinaryOp op, Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{BinaryNode{op, std::move(lhs), std::move(rhs)}}));
}
inline Formula Formula::quantified(Quantifier q, std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(Node{QuantifierNode{q, std::move(var), std::move(body)}}));
}

/// Variables occurring free in f under standard binding rules.
std::set<std::string> free_vars(const Formula& f);

enum class WellFormedError {
  ArityMismatch,
  UnknownPredicate,
  UnknownConstant,
  EqualityDisabled,
};

struct WellFormedViolation {
  WellFormedError kind;
  std::string detail;  // names the offending symbol
  const void* node;    // id() of the subformula at fault
};

/// nullopt when f is well-formed over sig; otherwise the first violation in
/// leftmost-innermost order. Independent of any structure's contents.
std::optional<WellFormedViolation> check_well_formed(const Formula& f, const Signature& sig);

/// A closed formula. Construction enforces the empty-free-variable invariant.
class Sentence {
public:
  /// Throws std::invalid_argument if f has free variables.
  explicit Sentence(Formula f);

  /// Universal closure of f; identity when f is already closed.
  static Sentence closure_of(Formula f);

  const Formula& formula() const { return formula_; }

  friend bool operator==(const Sentence& a, const Sentence& b) { return a.formula_ == b.formula_; }
  friend bool operator!=(const Sentence& a, const Sentence& b) { return !(a == b); }

private:
  Formula formula_;
};

/// ForAll-closure over free_vars(f) in lexicographic order (the truth
/// convention for open formulas).
Sentence universal_closure(const Formula& f);

/// Replace free occurrences of var by the given term. Substituting a
/// constant can never capture; substituting a variable that a binder in
/// scope would capture throws std::logic_error.
Formula substitute(const Formula& f, std::string_view var, const Term& replacement);

}  // namespace quasitruth
