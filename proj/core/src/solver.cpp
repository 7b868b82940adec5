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

#include "guesswork/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "guesswork/error.hpp"

namespace guesswork {

namespace {

constexpr std::uint64_t bit(std::size_t m) { return std::uint64_t{1} << m; }

std::uint64_t all_labels(std::size_t size) {
    return size == 64 ? ~std::uint64_t{0} : bit(size) - 1;
}

// Leaves whose incremental score lies within this margin of the incumbent are
// re-scored canonically; bounds must undercut the incumbent by this much to
// prune. Covers the rounding gap between accumulation orders.
double slack(double incumbent) { return 1e-10 * std::max(1.0, incumbent); }

} // namespace

SearchTree::SearchTree(const QubitCqChannel &channel, const CostFunction &cost, Regime regime,
                       std::optional<std::vector<std::size_t>> antipode)
    : channel_(&channel), cost_(&cost), regime_(regime) {
    const std::size_t size = channel.size();
    if (size > kMaxSolverAlphabet) {
        throw Error(ErrorCode::UnsupportedSize, "the solver handles at most 64 labels");
    }
    if (cost.size() != size) {
        throw Error(ErrorCode::LengthMismatch, "cost and channel sizes differ");
    }
    const auto &w = cost.rearranged();
    const auto &order = cost.order();
    if (pairs_antipodes(regime)) {
        if (!antipode || antipode->size() != size) {
            throw Error(ErrorCode::RegimeUnavailable,
                        "antipodal regime needs a centrally symmetric channel");
        }
        if (!cost.is_balanced()) {
            throw Error(ErrorCode::NotBalanced, "antipodal regime needs a balanced cost");
        }
        antipode_ = std::move(*antipode);
        for (std::size_t i = 0; i < size / 2; ++i) {
            slots_.push_back({order[i], order[size - 1 - i], w[i] - w[size - 1 - i]});
        }
    } else {
        for (std::size_t i = 0; i < size; ++i) {
            slots_.push_back({order[i], kUnassigned, w[i]});
        }
    }
    std::stable_sort(slots_.begin(), slots_.end(), [](const SearchSlot &a, const SearchSlot &b) {
        return std::abs(a.weight) > std::abs(b.weight);
    });
    if (fixes_pivot(regime)) {
        const std::size_t pivot = pivot_position(cost);
        auto it = std::find_if(slots_.begin(), slots_.end(),
                               [&](const SearchSlot &s) { return s.position == pivot; });
        std::rotate(slots_.begin(), it, it + 1);
    }
    suffix_.assign(slots_.size() + 1, 0.0);
    for (std::size_t k = slots_.size(); k-- > 0;) {
        suffix_[k] = suffix_[k + 1] + std::abs(slots_[k].weight);
    }
}

SearchNode SearchTree::root() const {
    SearchNode node;
    node.assignment.assign(channel_->size(), kUnassigned);
    node.remaining = all_labels(channel_->size());
    if (fixes_pivot(regime_)) {
        node = child(node, kPivotLabel);
    }
    return node;
}

std::size_t SearchTree::t_star(const SearchNode &node) const {
    if (is_leaf(node)) {
        throw Error(ErrorCode::InvalidNumbering, "a leaf has no free position");
    }
    return slots_[node.depth].position;
}

SearchNode SearchTree::child(const SearchNode &node, std::size_t label) const {
    if (is_leaf(node) || label >= channel_->size() || !(node.remaining & bit(label))) {
        throw Error(ErrorCode::InvalidNumbering, "label is not free at this node");
    }
    const SearchSlot &slot = slots_[node.depth];
    SearchNode next = node;
    next.assignment[slot.position] = label;
    next.remaining &= ~bit(label);
    if (slot.mirror != kUnassigned) {
        const std::size_t partner = antipode_[label];
        next.assignment[slot.mirror] = partner;
        next.remaining &= ~bit(partner);
    }
    next.partial_v += slot.weight * channel_->state(label);
    ++next.depth;
    return next;
}

std::vector<SearchNode> SearchTree::branch(const SearchNode &node) const {
    std::vector<SearchNode> children;
    if (is_leaf(node)) {
        return children;
    }
    for (std::uint64_t bits = node.remaining; bits != 0; bits &= bits - 1) {
        children.push_back(child(node, static_cast<std::size_t>(std::countr_zero(bits))));
    }
    return children;
}

double SearchTree::bound(const SearchNode &node) const {
    return node.partial_v.norm() + suffix_[node.depth];
}

Numbering SearchTree::numbering(const SearchNode &leaf) const {
    if (!is_leaf(leaf)) {
        throw Error(ErrorCode::InvalidNumbering, "node is not a leaf");
    }
    return Numbering(leaf.assignment);
}

double SearchTree::leaf_score(const SearchNode &leaf) const {
    return weighted_sum(*channel_, cost_->centered(), std::span<const std::size_t>(leaf.assignment))
        .norm();
}

GreedyResult greedy_init(const SearchTree &tree) {
    SearchNode node = tree.root();
    const auto &r = tree.channel().bloch();
    while (!tree.is_leaf(node)) {
        const double w = tree.slots()[node.depth].weight;
        std::size_t best = kUnassigned;
        double best_len = -1.0;
        for (std::uint64_t bits = node.remaining; bits != 0; bits &= bits - 1) {
            const auto m = static_cast<std::size_t>(std::countr_zero(bits));
            const double len = (node.partial_v + w * r[m]).norm_squared();
            if (len > best_len) {
                best_len = len;
                best = m;
            }
        }
        node = tree.child(node, best);
    }
    return {tree.numbering(node), tree.leaf_score(node)};
}

Regime select_regime(const SymmetryInfo &info) noexcept {
    if (info.transitive && info.centrally_symmetric) {
        return Regime::TransitiveCs;
    }
    if (info.centrally_symmetric) {
        return Regime::CentrallySymmetric;
    }
    if (info.transitive) {
        return Regime::Transitive;
    }
    return Regime::General;
}

namespace {

using Clock = std::chrono::steady_clock;

bool is_blind(const QubitCqChannel &channel) {
    return std::all_of(channel.bloch().begin(), channel.bloch().end(),
                       [](const BlochVector &r) { return r.norm_squared() == 0.0; });
}

class Incumbent {
  public:
    Incumbent(double initial, std::function<void(double)> callback)
        : score_(initial), callback_(std::move(callback)) {}

    [[nodiscard]] double load() const noexcept { return score_.load(std::memory_order_relaxed); }

    void offer(double candidate) {
        if (candidate <= load()) {
            return;
        }
        std::lock_guard lock(mu_);
        if (candidate <= score_.load(std::memory_order_relaxed)) {
            return;
        }
        score_.store(candidate, std::memory_order_relaxed);
        history_.push_back(candidate);
        if (callback_) {
            callback_(candidate);
        }
    }

    std::vector<double> take_history() {
        std::lock_guard lock(mu_);
        return std::move(history_);
    }

  private:
    std::atomic<double> score_;
    std::function<void(double)> callback_;
    std::mutex mu_;
    std::vector<double> history_;
};

struct Best {
    double score = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> assignment;

    void consider(double s, const std::vector<std::size_t> &a) {
        if (s > score || (s == score && a < assignment)) {
            score = s;
            assignment = a;
        }
    }
};

class Worker {
  public:
    Worker(const SearchTree &tree, Incumbent &incumbent, std::atomic<bool> &stop,
           std::optional<Clock::time_point> deadline, bool bounding)
        : tree_(tree), slots_(tree.slots()), incumbent_(incumbent), stop_(stop),
          deadline_(deadline), bounding_(bounding) {
        const auto &b = tree.channel().bloch();
        r_.assign(b.begin(), b.end());
        for (std::size_t k = 0; k <= slots_.size(); ++k) {
            suffix_.push_back(tree.suffix_weight(k));
        }
        if (pairs_antipodes(tree.regime())) {
            antipode_ = tree.antipode();
        }
    }

    void run(const SearchNode &task) {
        assignment_ = task.assignment;
        dfs(task.depth, task.partial_v, task.remaining);
    }

    Best best;
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;

  private:
    bool should_stop() {
        if ((nodes & 0x3FFF) == 0 && deadline_ && Clock::now() >= *deadline_) {
            stop_.store(true, std::memory_order_relaxed);
        }
        return stop_.load(std::memory_order_relaxed);
    }

    void dfs(std::size_t depth, const BlochVector &v, std::uint64_t remaining) {
        ++nodes;
        if (should_stop()) {
            return;
        }
        if (depth == slots_.size()) {
            leaf(v);
            return;
        }
        const SearchSlot &slot = slots_[depth];
        const double rest = suffix_[depth + 1];
        for (std::uint64_t bits = remaining; bits != 0; bits &= bits - 1) {
            const auto m = static_cast<std::size_t>(std::countr_zero(bits));
            const BlochVector next = v + slot.weight * r_[m];
            if (bounding_) {
                const double inc = incumbent_.load();
                const double limit = inc - slack(inc) - rest;
                if (limit > 0.0 && next.norm_squared() < limit * limit) {
                    continue;
                }
            }
            std::uint64_t rem = remaining & ~bit(m);
            assignment_[slot.position] = m;
            if (slot.mirror != kUnassigned) {
                const std::size_t partner = antipode_[m];
                assignment_[slot.mirror] = partner;
                rem &= ~bit(partner);
            }
            dfs(depth + 1, next, rem);
        }
    }

    void leaf(const BlochVector &v) {
        ++leaves;
        const double inc = incumbent_.load();
        if (v.norm() < inc - slack(inc)) {
            return;
        }
        const double s = weighted_sum(tree_.channel(), tree_.cost().centered(),
                                      std::span<const std::size_t>(assignment_))
                             .norm();
        best.consider(s, assignment_);
        incumbent_.offer(s);
    }

    const SearchTree &tree_;
    const std::vector<SearchSlot> &slots_;
    Incumbent &incumbent_;
    std::atomic<bool> &stop_;
    std::optional<Clock::time_point> deadline_;
    bool bounding_;
    std::vector<BlochVector> r_;
    std::vector<double> suffix_;
    std::vector<std::size_t> antipode_;
    std::vector<std::size_t> assignment_;
};

// Expands the root until there are enough independent subtrees to keep
// `threads` workers busy: depth 1, or depth 2 when depth 1 has fewer than
// 4 * threads nodes.
std::vector<SearchNode> make_tasks(const SearchTree &tree, unsigned threads, bool bounding,
                                   double incumbent, std::uint64_t &nodes) {
    std::vector<SearchNode> tasks{tree.root()};
    if (threads <= 1) {
        return tasks;
    }
    for (int level = 0; level < 2; ++level) {
        if (level == 1 && tasks.size() >= 4u * threads) {
            break;
        }
        std::vector<SearchNode> next;
        for (const auto &node : tasks) {
            if (tree.is_leaf(node)) {
                next.push_back(node);
                continue;
            }
            ++nodes;
            for (auto &c : tree.branch(node)) {
                if (bounding && tree.bound(c) < incumbent - slack(incumbent)) {
                    continue;
                }
                next.push_back(std::move(c));
            }
        }
        tasks = std::move(next);
    }
    return tasks;
}

} // namespace

SolveResult solve(const QubitCqChannel &channel, const CostFunction &cost,
                  const SymmetryInfo &info, const SolveOptions &options) {
    const auto start = Clock::now();
    if (cost.size() != channel.size()) {
        throw Error(ErrorCode::LengthMismatch, "cost and channel sizes differ");
    }
    if (!cost.is_balanced()) {
        throw Error(ErrorCode::NotBalanced, "the solver needs a balanced cost");
    }
    const Regime regime = options.force_regime.value_or(select_regime(info));
    if (fixes_pivot(regime) && !info.transitive) {
        throw Error(ErrorCode::RegimeUnavailable, "channel symmetry is not transitive");
    }
    if (pairs_antipodes(regime) && !info.centrally_symmetric) {
        throw Error(ErrorCode::RegimeUnavailable, "channel is not centrally symmetric");
    }
    const SearchTree tree(channel, cost, regime,
                          pairs_antipodes(regime) ? info.antipode : std::nullopt);

    SolveResult result;
    result.regime = regime;

    // Every numbering scores zero; the identity is the lexicographic minimum.
    if (regime == Regime::General && is_blind(channel)) {
        result.best_numbering = Numbering::identity(channel.size());
        result.value = cost.mean();
        result.leaves_visited = 1;
        result.incumbent_history.push_back(0.0);
        result.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
        return result;
    }

    Best best;
    double initial = -std::numeric_limits<double>::infinity();
    if (options.greedy_start) {
        const auto greedy = greedy_init(tree);
        result.greedy_score = greedy.score;
        initial = greedy.score;
        best.consider(greedy.score, greedy.numbering.order());
    }
    Incumbent incumbent(initial, options.on_incumbent);
    if (options.greedy_start && options.on_incumbent) {
        options.on_incumbent(initial);
    }

    unsigned threads = options.threads;
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    std::optional<Clock::time_point> deadline;
    if (options.time_budget) {
        deadline = start + std::chrono::duration_cast<Clock::duration>(*options.time_budget);
    }
    std::atomic<bool> stop{false};

    const auto tasks = make_tasks(tree, threads, options.bounding, initial, result.nodes_expanded);
    std::vector<Worker> workers;
    workers.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) {
        workers.emplace_back(tree, incumbent, stop, deadline, options.bounding);
    }
    std::atomic<std::size_t> next_task{0};
    auto drain = [&](Worker &w) {
        for (std::size_t k = next_task++; k < tasks.size(); k = next_task++) {
            if (stop.load(std::memory_order_relaxed)) {
                break;
            }
            const auto &task = tasks[k];
            if (options.bounding && tree.bound(task) < incumbent.load() - slack(incumbent.load())) {
                continue;
            }
            w.run(task);
        }
    };
    if (threads == 1) {
        drain(workers.front());
    } else {
        std::vector<std::thread> pool;
        for (auto &w : workers) {
            pool.emplace_back(drain, std::ref(w));
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    for (const auto &w : workers) {
        if (!w.best.assignment.empty()) {
            best.consider(w.best.score, w.best.assignment);
        }
        result.nodes_expanded += w.nodes;
        result.leaves_visited += w.leaves;
    }
    result.bound_only = stop.load();
    result.incumbent_history = incumbent.take_history();
    if (best.assignment.empty()) {
        // Only reachable with the greedy start disabled and the budget
        // exhausted before the first leaf.
        result.bound_only = true;
        const auto greedy = greedy_init(tree);
        best.consider(greedy.score, greedy.numbering.order());
    }
    const double size = static_cast<double>(channel.size());
    result.best_numbering = Numbering(best.assignment);
    result.score = best.score;
    result.best_norm = best.score / size;
    result.value = cost.mean() - result.best_norm;
    result.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

SolveResult solve(const QubitCqChannel &channel, const CostFunction &cost,
                  const SolveOptions &options) {
    if (options.force_regime == Regime::General || (!options.force_regime && is_blind(channel))) {
        return solve(channel, cost, SymmetryInfo{}, options);
    }
    return solve(channel, cost, detect_symmetries(channel), options);
}

std::uint64_t count_leaves(const QubitCqChannel &channel, Regime regime) {
    SolveOptions options;
    options.force_regime = regime;
    options.bounding = false;
    options.greedy_start = false;
    return solve(channel, CostFunction::identity(channel.size()), options).leaves_visited;
}

} // namespace guesswork
