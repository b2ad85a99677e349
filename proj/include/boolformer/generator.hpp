#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "boolformer/formula.hpp"
#include "boolformer/rng.hpp"

namespace boolformer {

enum class Regime { Noiseless, Noisy };

const char* regime_name(Regime r);
Regime regime_from_name(const std::string& name);

/// All formula-sampling hyperparameters.
struct GeneratorConfig {
  int d_max = 10;      // max input dimension
  int s_max = 10;      // max active variables
  int b_max = 500;     // max binary operators before simplification
  double p_not = 0.5;  // per-node negation probability
  Regime regime = Regime::Noiseless;

  /// Noiseless preset: full support (S = D), D capped at 10.
  static GeneratorConfig paper_noiseless();
  /// Noisy preset: up to 120 inputs, at most 6 active.
  static GeneratorConfig paper_noisy();

  /// Throws config_error on invalid combinations (S_max > D_max, noiseless
  /// with partial support or D_max > 10, probabilities out of range).
  void validate() const;
};

struct SampleMetadata {
  int dimension = 0;            // D
  int active_count = 0;         // S, pre-simplification
  std::vector<int> active_set;  // chosen variable indices, sorted
  int b_initial = 0;            // sampled binary operator count
  int b_final = 0;              // post-simplification binary gate count
};

/// Unlabeled binary tree shape, stored as an arena. Children of -1/-1 nodes
/// are leaves.
struct TreeShape {
  struct ShapeNode {
    int left = -1;
    int right = -1;
  };
  std::vector<ShapeNode> nodes;  // node 0 is the root
  int internal_count = 0;
};

/// Samples binary tree shapes with exactly B internal nodes via the
/// dynamic-programming slot-position method: D(e, n) counts the trees that
/// complete e empty slots with n binary nodes, and each step draws the
/// position of the next internal node proportionally to the completions it
/// leaves. Counts are kept in log space to reach B in the hundreds.
class TreeShapeSampler {
 public:
  explicit TreeShapeSampler(int max_internal);

  TreeShape sample(int internal_nodes, Rng& rng) const;

  /// log D(e, n); exposed for distribution tests.
  double log_count(int empty_slots, int internal_nodes) const;

 private:
  int max_internal_;
  std::vector<std::vector<double>> log_d_;  // [n][e]
};

/// Shared sampler cache; building the DP table once per B_max.
const TreeShapeSampler& tree_sampler_for(int max_internal);

TreeShape sample_tree_shape(int internal_nodes, Rng& rng);

/// True iff the prefix serialization exceeds the 200-token budget, in which
/// case the sample is discarded and regenerated.
bool reject_oversized(const Formula& f);

constexpr int kMaxFormulaTokens = 200;

/// Full sampling pipeline: dimension, active set, operator count, tree
/// shape, operator labels, negations, leaf fill (every active variable
/// appears at least once), then simplification. Oversized results are
/// resampled. Returns the simplified formula plus sampling metadata.
std::pair<Formula, SampleMetadata> sample_formula(const GeneratorConfig& cfg, Rng& rng);

/// Same pipeline with the input dimension pinned (steps 2-7 only).
std::pair<Formula, SampleMetadata> sample_formula_at(const GeneratorConfig& cfg, int dimension,
                                                     Rng& rng);

}  // namespace boolformer
