#include "boolformer/formula.hpp"

#include <algorithm>
#include <sstream>

namespace boolformer {

namespace {

constexpr int kTruthTableMaxDim = 24;

int kind_rank(NodeKind k) {
  switch (k) {
    case NodeKind::Const: return 0;
    case NodeKind::Var: return 1;
    case NodeKind::Not: return 2;
    case NodeKind::And: return 3;
    case NodeKind::Or: return 4;
  }
  return 5;
}

}  // namespace

Formula Formula::var(int index) {
  if (index < 0) throw dimension_error("variable index must be non-negative");
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Var;
  node->var = index;
  return Formula(std::move(node));
}

Formula Formula::constant(bool value) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Const;
  node->value = value;
  return Formula(std::move(node));
}

Formula Formula::negate(Formula child) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Not;
  node->children.push_back(std::move(child));
  return Formula(std::move(node));
}

Formula Formula::conj(std::vector<Formula> children) {
  if (children.size() < 2) throw error("AND requires at least 2 children");
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::And;
  node->children = std::move(children);
  return Formula(std::move(node));
}

Formula Formula::disj(std::vector<Formula> children) {
  if (children.size() < 2) throw error("OR requires at least 2 children");
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Or;
  node->children = std::move(children);
  return Formula(std::move(node));
}

std::size_t Formula::size() const {
  std::size_t n = 1;
  for (const auto& c : children()) n += c.size();
  return n;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case NodeKind::Var: return var_index() == other.var_index();
    case NodeKind::Const: return const_value() == other.const_value();
    default: break;
  }
  if (arity() != other.arity()) return false;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (!(child(i) == other.child(i))) return false;
  }
  return true;
}

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  const int ra = kind_rank(a.kind()), rb = kind_rank(b.kind());
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a.kind()) {
    case NodeKind::Const:
      return static_cast<int>(a.const_value()) - static_cast<int>(b.const_value());
    case NodeKind::Var:
      return a.var_index() == b.var_index() ? 0 : (a.var_index() < b.var_index() ? -1 : 1);
    default: break;
  }
  const std::size_t n = std::min(a.arity(), b.arity());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = compare(a.child(i), b.child(i));
    if (c != 0) return c;
  }
  if (a.arity() != b.arity()) return a.arity() < b.arity() ? -1 : 1;
  return 0;
}

bool evaluate(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case NodeKind::Const:
      return f.const_value();
    case NodeKind::Var: {
      const auto idx = static_cast<std::size_t>(f.var_index());
      if (idx >= a.size()) {
        throw dimension_error("variable x_" + std::to_string(f.var_index()) +
                              " out of range for dimension " + std::to_string(a.size()));
      }
      return a[idx] != 0;
    }
    case NodeKind::Not:
      return !evaluate(f.child(0), a);
    case NodeKind::And:
      for (const auto& c : f.children()) {
        if (!evaluate(c, a)) return false;
      }
      return true;
    case NodeKind::Or:
      for (const auto& c : f.children()) {
        if (evaluate(c, a)) return true;
      }
      return false;
  }
  throw error("unreachable node kind");
}

Assignment assignment_of_index(std::uint64_t i, int dimension) {
  Assignment a(static_cast<std::size_t>(dimension));
  for (int j = 0; j < dimension; ++j) {
    a[static_cast<std::size_t>(j)] =
        static_cast<std::uint8_t>((i >> (dimension - 1 - j)) & 1u);
  }
  return a;
}

namespace {

// Word-parallel evaluation: each uint64 word covers 64 consecutive
// assignment indices. Variable j maps to bit (D-1-j) of the index.
std::vector<std::uint64_t> eval_words(const Formula& f, int dim, std::size_t words) {
  switch (f.kind()) {
    case NodeKind::Const:
      return std::vector<std::uint64_t>(words, f.const_value() ? ~0ULL : 0ULL);
    case NodeKind::Var: {
      const int j = f.var_index();
      if (j >= dim) {
        throw dimension_error("variable x_" + std::to_string(j) + " out of range for dimension " +
                              std::to_string(dim));
      }
      const int bit = dim - 1 - j;
      std::vector<std::uint64_t> out(words);
      if (bit >= 6) {
        for (std::size_t w = 0; w < words; ++w) {
          out[w] = ((w >> (bit - 6)) & 1u) ? ~0ULL : 0ULL;
        }
      } else {
        static constexpr std::uint64_t kPatterns[6] = {
            0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
            0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
        std::fill(out.begin(), out.end(), kPatterns[bit]);
      }
      return out;
    }
    case NodeKind::Not: {
      auto out = eval_words(f.child(0), dim, words);
      for (auto& w : out) w = ~w;
      return out;
    }
    case NodeKind::And: {
      auto out = eval_words(f.child(0), dim, words);
      for (std::size_t i = 1; i < f.arity(); ++i) {
        const auto c = eval_words(f.child(i), dim, words);
        for (std::size_t w = 0; w < words; ++w) out[w] &= c[w];
      }
      return out;
    }
    case NodeKind::Or: {
      auto out = eval_words(f.child(0), dim, words);
      for (std::size_t i = 1; i < f.arity(); ++i) {
        const auto c = eval_words(f.child(i), dim, words);
        for (std::size_t w = 0; w < words; ++w) out[w] |= c[w];
      }
      return out;
    }
  }
  throw error("unreachable node kind");
}

}  // namespace

TruthTable truth_table(const Formula& f, int dimension) {
  if (dimension < 0) throw dimension_error("negative dimension");
  if (dimension > kTruthTableMaxDim) {
    throw capacity_error("truth table for D=" + std::to_string(dimension) + " exceeds 2^" +
                         std::to_string(kTruthTableMaxDim) + " cap");
  }
  const std::uint64_t n = 1ULL << dimension;
  const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
  const auto bits = eval_words(f, dimension, words);
  TruthTable table(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < n; ++i) {
    table[i] = static_cast<std::uint8_t>((bits[i >> 6] >> (i & 63)) & 1u);
  }
  return table;
}

namespace {

void collect_vars(const Formula& f, std::set<int>& out) {
  if (f.is_var()) {
    out.insert(f.var_index());
    return;
  }
  for (const auto& c : f.children()) collect_vars(c, out);
}

}  // namespace

std::set<int> active_variables(const Formula& f) {
  std::set<int> out;
  collect_vars(f, out);
  return out;
}

int min_dimension(const Formula& f) {
  const auto vars = active_variables(f);
  return vars.empty() ? 0 : *vars.rbegin() + 1;
}

int binary_gate_count(const Formula& f) {
  int count = f.is_gate() ? static_cast<int>(f.arity()) - 1 : 0;
  for (const auto& c : f.children()) count += binary_gate_count(c);
  return count;
}

namespace {

void emit_prefix(const Formula& f, TokenSequence& out) {
  switch (f.kind()) {
    case NodeKind::Const:
      out.push_back(f.const_value() ? "true" : "false");
      return;
    case NodeKind::Var:
      out.push_back("x_" + std::to_string(f.var_index()));
      return;
    case NodeKind::Not:
      out.push_back("not");
      emit_prefix(f.child(0), out);
      return;
    case NodeKind::And:
    case NodeKind::Or: {
      const char* op = f.kind() == NodeKind::And ? "and" : "or";
      // Right-nested binary emission: op a (op b (op c d)).
      for (std::size_t i = 0; i + 1 < f.arity(); ++i) {
        out.push_back(op);
        emit_prefix(f.child(i), out);
      }
      emit_prefix(f.child(f.arity() - 1), out);
      return;
    }
  }
}

Formula parse_at(const TokenSequence& tokens, std::size_t& pos) {
  if (pos >= tokens.size()) throw parse_error("missing operand", pos);
  const std::string& tok = tokens[pos];
  ++pos;
  if (tok == "and" || tok == "or") {
    const bool is_and = tok == "and";
    Formula lhs = parse_at(tokens, pos);
    Formula rhs = parse_at(tokens, pos);
    return is_and ? Formula::conj({std::move(lhs), std::move(rhs)})
                  : Formula::disj({std::move(lhs), std::move(rhs)});
  }
  if (tok == "not") return Formula::negate(parse_at(tokens, pos));
  if (tok == "true") return Formula::constant(true);
  if (tok == "false") return Formula::constant(false);
  if (tok.size() > 2 && tok[0] == 'x' && tok[1] == '_') {
    int idx = 0;
    for (std::size_t i = 2; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9') throw parse_error("bad variable token '" + tok + "'", pos - 1);
      idx = idx * 10 + (tok[i] - '0');
      if (idx > 1'000'000) throw parse_error("variable index too large", pos - 1);
    }
    return Formula::var(idx);
  }
  throw parse_error("unknown token '" + tok + "'", pos - 1);
}

}  // namespace

TokenSequence to_prefix(const Formula& f) {
  TokenSequence out;
  emit_prefix(f, out);
  return out;
}

std::string to_prefix_string(const Formula& f) {
  const auto tokens = to_prefix(f);
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

Formula parse_prefix(const TokenSequence& tokens) {
  std::size_t pos = 0;
  Formula f = parse_at(tokens, pos);
  if (pos != tokens.size()) throw parse_error("trailing token '" + tokens[pos] + "'", pos);
  return flatten(f);
}

Formula parse_prefix_string(const std::string& text) {
  TokenSequence tokens;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return parse_prefix(tokens);
}

Formula flatten(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::Var:
    case NodeKind::Const:
      return f;
    case NodeKind::Not:
      return Formula::negate(flatten(f.child(0)));
    case NodeKind::And:
    case NodeKind::Or: {
      std::vector<Formula> merged;
      for (const auto& c : f.children()) {
        Formula fc = flatten(c);
        if (fc.kind() == f.kind()) {
          for (const auto& gc : fc.children()) merged.push_back(gc);
        } else {
          merged.push_back(std::move(fc));
        }
      }
      return f.kind() == NodeKind::And ? Formula::conj(std::move(merged))
                                       : Formula::disj(std::move(merged));
    }
  }
  throw error("unreachable node kind");
}

}  // namespace boolformer
