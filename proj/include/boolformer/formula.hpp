#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "boolformer/errors.hpp"

namespace boolformer {

/// One point of the Boolean hypercube; bits[j] is the value of variable x_j.
using Assignment = std::vector<std::uint8_t>;

/// Truth table as a flat bit vector of length 2^D. Entry i corresponds to the
/// assignment whose bits spell i in binary with variable 0 as the MOST
/// significant bit (lexicographic enumeration 00..0 -> 11..1).
using TruthTable = std::vector<std::uint8_t>;

using TokenSequence = std::vector<std::string>;

enum class NodeKind : std::uint8_t { Var, Not, And, Or, Const };

/// Immutable Boolean formula tree over AND/OR/NOT/variables/constants.
/// AND/OR are n-ary with >= 2 children. Copies are cheap (shared nodes).
class Formula {
 public:
  Formula() : Formula(constant(false)) {}

  static Formula var(int index);
  static Formula constant(bool value);
  static Formula negate(Formula child);
  static Formula conj(std::vector<Formula> children);  // AND, >= 2 children
  static Formula disj(std::vector<Formula> children);  // OR, >= 2 children

  NodeKind kind() const { return node_->kind; }
  int var_index() const { return node_->var; }
  bool const_value() const { return node_->value; }
  const std::vector<Formula>& children() const { return node_->children; }
  const Formula& child(std::size_t i) const { return node_->children[i]; }
  std::size_t arity() const { return node_->children.size(); }

  bool is_var() const { return kind() == NodeKind::Var; }
  bool is_const() const { return kind() == NodeKind::Const; }
  bool is_not() const { return kind() == NodeKind::Not; }
  bool is_gate() const { return kind() == NodeKind::And || kind() == NodeKind::Or; }

  /// Number of nodes in the tree.
  std::size_t size() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  /// Total structural order (used for canonical child sorting and as the
  /// final ranking tie-break). Returns <0, 0, >0.
  static int compare(const Formula& a, const Formula& b);

 private:
  struct Node {
    NodeKind kind;
    int var = -1;
    bool value = false;
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Evaluate f at a. Throws dimension_error if f reads past a's length.
bool evaluate(const Formula& f, const Assignment& a);

/// Assignment number i out of 2^D, in the fixed lexicographic convention.
Assignment assignment_of_index(std::uint64_t i, int dimension);

/// Full truth table over D variables. Throws capacity_error for D > 24 and
/// dimension_error if f reads a variable >= D.
TruthTable truth_table(const Formula& f, int dimension);

/// Variable indices syntactically present in f.
std::set<int> active_variables(const Formula& f);

/// Largest variable index in f plus one; 0 for constant formulas.
int min_dimension(const Formula& f);

/// Sum over AND/OR nodes of (arity - 1): the size measure in two-input gates.
/// NOT gates are not counted.
int binary_gate_count(const Formula& f);

/// Prefix (Polish) serialization. N-ary gates are emitted as right-nested
/// binary applications, so the alphabet is {and, or, not, true, false, x_i}.
TokenSequence to_prefix(const Formula& f);

/// Space-joined prefix tokens.
std::string to_prefix_string(const Formula& f);

/// Parse a prefix token stream. The result is re-flattened (no AND directly
/// under AND, no OR under OR). Throws parse_error with the failing position
/// on malformed, truncated, or trailing input.
Formula parse_prefix(const TokenSequence& tokens);
Formula parse_prefix_string(const std::string& text);

/// Merge nested same-operator gates bottom-up.
Formula flatten(const Formula& f);

}  // namespace boolformer
