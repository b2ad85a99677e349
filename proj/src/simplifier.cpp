#include "boolformer/simplifier.hpp"

#include <algorithm>
#include <vector>

namespace boolformer {

namespace {

constexpr int kMaxPasses = 64;

Formula normalize_rec(const Formula& f, bool negated) {
  switch (f.kind()) {
    case NodeKind::Const:
      return Formula::constant(f.const_value() != negated);
    case NodeKind::Var:
      return negated ? Formula::negate(f) : f;
    case NodeKind::Not:
      return normalize_rec(f.child(0), !negated);
    case NodeKind::And:
    case NodeKind::Or: {
      std::vector<Formula> children;
      children.reserve(f.arity());
      for (const auto& c : f.children()) children.push_back(normalize_rec(c, negated));
      const bool becomes_and = (f.kind() == NodeKind::And) != negated;
      return becomes_and ? Formula::conj(std::move(children))
                         : Formula::disj(std::move(children));
    }
  }
  throw error("unreachable node kind");
}

bool is_complement_pair(const Formula& a, const Formula& b) {
  if (a.is_not() && a.child(0) == b) return true;
  if (b.is_not() && b.child(0) == a) return true;
  return false;
}

// The child as a sorted factor set: an AND/OR gate contributes its children,
// anything else contributes itself. Inputs are canonically sorted already.
const std::vector<Formula>& factor_set(const Formula& f, NodeKind gate,
                                       std::vector<Formula>& singleton) {
  if (f.kind() == gate) return f.children();
  singleton.assign(1, f);
  return singleton;
}

bool sorted_subset(const std::vector<Formula>& small, const std::vector<Formula>& big) {
  std::size_t i = 0, j = 0;
  while (i < small.size() && j < big.size()) {
    const int c = Formula::compare(small[i], big[j]);
    if (c == 0) {
      ++i;
      ++j;
    } else if (c > 0) {
      ++j;
    } else {
      return false;
    }
  }
  return i == small.size();
}

Formula pass_rec(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::Const:
    case NodeKind::Var:
      return f;
    case NodeKind::Not: {
      Formula c = pass_rec(f.child(0));
      if (c.is_const()) return Formula::constant(!c.const_value());
      if (c.is_not()) return c.child(0);
      return Formula::negate(std::move(c));
    }
    case NodeKind::And:
    case NodeKind::Or:
      break;
  }

  const bool is_and = f.kind() == NodeKind::And;
  const bool dominant = !is_and;   // AND with false -> false, OR with true -> true
  const bool identity = is_and;    // AND with true dropped, OR with false dropped

  // Children first, flattening nested same-operator gates as we go.
  std::vector<Formula> kids;
  kids.reserve(f.arity());
  for (const auto& c : f.children()) {
    Formula sc = pass_rec(c);
    if (sc.kind() == f.kind()) {
      for (const auto& gc : sc.children()) kids.push_back(gc);
    } else {
      kids.push_back(std::move(sc));
    }
  }

  // Constant folding.
  std::vector<Formula> live;
  live.reserve(kids.size());
  for (auto& c : kids) {
    if (c.is_const()) {
      if (c.const_value() == dominant) return Formula::constant(dominant);
      continue;  // identity element dropped
    }
    live.push_back(std::move(c));
  }
  if (live.empty()) return Formula::constant(identity);

  // Canonical order, then idempotence / duplicate removal.
  std::sort(live.begin(), live.end(),
            [](const Formula& a, const Formula& b) { return Formula::compare(a, b) < 0; });
  live.erase(std::unique(live.begin(), live.end()), live.end());

  // Complementation: x and not(x) together collapse the gate.
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (std::size_t j = i + 1; j < live.size(); ++j) {
      if (is_complement_pair(live[i], live[j])) return Formula::constant(dominant);
    }
  }

  // Absorption: inside an OR, a child whose factor set is a strict superset
  // of another child's factor set is redundant (dually for AND).
  const NodeKind sub_gate = is_and ? NodeKind::Or : NodeKind::And;
  std::vector<char> dead(live.size(), 0);
  std::vector<Formula> scratch_i, scratch_j;
  for (std::size_t i = 0; i < live.size(); ++i) {
    if (dead[i]) continue;
    const auto& set_i = factor_set(live[i], sub_gate, scratch_i);
    for (std::size_t j = 0; j < live.size(); ++j) {
      if (i == j || dead[j]) continue;
      const auto& set_j = factor_set(live[j], sub_gate, scratch_j);
      if (set_i.size() < set_j.size() && sorted_subset(set_i, set_j)) dead[j] = 1;
    }
  }
  std::vector<Formula> kept;
  kept.reserve(live.size());
  for (std::size_t i = 0; i < live.size(); ++i) {
    if (!dead[i]) kept.push_back(std::move(live[i]));
  }

  if (kept.size() == 1) return kept[0];
  return is_and ? Formula::conj(std::move(kept)) : Formula::disj(std::move(kept));
}

}  // namespace

Formula normalize(const Formula& f) { return normalize_rec(f, false); }

Formula simplify_pass(const Formula& f) { return pass_rec(f); }

Formula simplify(const Formula& f) {
  Formula current = normalize(f);
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    Formula next = simplify_pass(current);
    if (next == current) return normalize(next);
    current = std::move(next);
  }
  throw error("simplify did not reach a fixed point within 64 passes");
}

}  // namespace boolformer
