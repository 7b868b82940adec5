// Copyright 2026 The Guesswork Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file
 * Branch-and-bound maximization of |v(n)| over numberings.
 *
 * Positions are filled in "slots" ordered by decreasing |centered cost|. In
 * the antipodal regimes a slot covers a position and its mirror, which
 * receive a label and its antipode, so the slot contributes
 * (w(t) - w(mirror t)) r_m. The bound of a node is the triangle inequality
 * |partial v| + sum of |slot weight| over unfilled slots.
 *
 * Among numberings of maximal canonical score (see score.hpp) the
 * lexicographically smallest is reported, so results do not depend on the
 * number of threads.
 */

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "guesswork/model.hpp"
#include "guesswork/score.hpp"
#include "guesswork/symmetry.hpp"

namespace guesswork {

inline constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kMaxSolverAlphabet = 64;

struct SearchNode {
    /// Label at each user position, kUnassigned when free.
    std::vector<std::size_t> assignment;
    /// Number of slots filled.
    std::size_t depth = 0;
    BlochVector partial_v;
    /// Bit m set when label m is still free.
    std::uint64_t remaining = 0;
};

struct SearchSlot {
    std::size_t position = 0;
    /// Mirrored position in antipodal regimes, else kUnassigned.
    std::size_t mirror = kUnassigned;
    double weight = 0.0;
};

/// One instance of the search: channel, cost and regime. Exposes the
/// branching and bounding rules node by node; `solve` runs an equivalent
/// in-place depth-first search.
class SearchTree {
  public:
    /// `antipode` is required for the antipodal regimes.
    SearchTree(const QubitCqChannel &channel, const CostFunction &cost, Regime regime,
               std::optional<std::vector<std::size_t>> antipode = std::nullopt);

    [[nodiscard]] const QubitCqChannel &channel() const noexcept { return *channel_; }
    [[nodiscard]] const CostFunction &cost() const noexcept { return *cost_; }
    [[nodiscard]] Regime regime() const noexcept { return regime_; }
    [[nodiscard]] const std::vector<SearchSlot> &slots() const noexcept { return slots_; }
    [[nodiscard]] const std::vector<std::size_t> &antipode() const noexcept { return antipode_; }
    /// suffix_weight(k) = sum of |weight| over slots k, k+1, ...
    [[nodiscard]] double suffix_weight(std::size_t k) const { return suffix_[k]; }

    [[nodiscard]] SearchNode root() const;
    [[nodiscard]] bool is_leaf(const SearchNode &node) const noexcept {
        return node.depth == slots_.size();
    }
    /// First free position of the node (the position its children fix).
    [[nodiscard]] std::size_t t_star(const SearchNode &node) const;
    /// One child per free label, ascending.
    [[nodiscard]] std::vector<SearchNode> branch(const SearchNode &node) const;
    /// Upper bound on |v(n)| over all completions n of the node.
    [[nodiscard]] double bound(const SearchNode &node) const;
    /// Places `label` (and its antipode) at the node's next slot.
    [[nodiscard]] SearchNode child(const SearchNode &node, std::size_t label) const;
    [[nodiscard]] Numbering numbering(const SearchNode &leaf) const;
    /// Canonical |v| of a leaf, identical to score_norm on its numbering.
    [[nodiscard]] double leaf_score(const SearchNode &leaf) const;

  private:
    const QubitCqChannel *channel_;
    const CostFunction *cost_;
    Regime regime_;
    std::vector<std::size_t> antipode_;
    std::vector<SearchSlot> slots_;
    std::vector<double> suffix_;
};

struct GreedyResult {
    Numbering numbering;
    double score = 0.0;
};

/// Slot by slot, picks the free label maximizing |partial v + w r_m|
/// (smallest label on ties). Quadratic in |M|.
[[nodiscard]] GreedyResult greedy_init(const SearchTree &tree);

struct SolveOptions {
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned threads = 1;
    std::optional<Regime> force_regime;
    std::optional<std::chrono::duration<double>> time_budget;
    /// Disable to enumerate the whole regime (leaf counting).
    bool bounding = true;
    bool greedy_start = true;
    /// Called with every newly published incumbent score, in order.
    std::function<void(double)> on_incumbent;
};

struct SolveResult {
    /// mean - best_norm.
    double value = 0.0;
    /// In user cost order.
    Numbering best_numbering;
    /// |v(n*)| / |M|.
    double best_norm = 0.0;
    /// |v(n*)|.
    double score = 0.0;
    double greedy_score = 0.0;
    std::uint64_t nodes_expanded = 0;
    std::uint64_t leaves_visited = 0;
    double wall_time = 0.0;
    Regime regime = Regime::General;
    /// Time budget ran out: best_norm is only a lower bound on the optimum,
    /// so value is an upper bound on the guesswork.
    bool bound_only = false;
    /// Published incumbent scores, in publication order.
    std::vector<double> incumbent_history;
};

/// Regime implied by detected symmetries.
[[nodiscard]] Regime select_regime(const SymmetryInfo &info) noexcept;

/// Throws NotBalanced, RegimeUnavailable (forced regime not supported by the
/// channel's symmetry) and UnsupportedSize (|M| > 64).
[[nodiscard]] SolveResult solve(const QubitCqChannel &channel, const CostFunction &cost,
                                const SolveOptions &options = {});
[[nodiscard]] SolveResult solve(const QubitCqChannel &channel, const CostFunction &cost,
                                const SymmetryInfo &info, const SolveOptions &options = {});

/// Leaves of the full regime tree with bounding disabled, identity cost.
[[nodiscard]] std::uint64_t count_leaves(const QubitCqChannel &channel, Regime regime);

} // namespace guesswork
