#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ckpt/distribution.hpp"

namespace ckpt {

struct PlacementResult {
    CheckpointPlan plan;
    SavingsReport report; // always equals savings(d, plan)
    std::string method;
    double elapsed_ms = 0.0;
    bool truncated = false; // fewer checkpoints than requested were placeable
};

// State-of-the-art baseline: checkpoint i placed at
// t_start + round(i * (t_end - t_start) / (k + 1)), round half up.
// Deliberately oblivious to the fault distribution and never snapped;
// positions that collide with the range ends or each other are dropped.
PlacementResult uniform_placement(const FaultDistribution& d, int k);

// Dynamic program over the transitive step DAG.
//
// Nodes are 0 (entry, t_start), 1..n (candidate steps) and n+1 (exit,
// t_end); the arc a -> b has weight (s_b - s_a) * P(s_b), zero into the
// exit. weight[i][j] is the maximum weight of an entry -> node-i path using
// at most j inner nodes, so the exit row satisfies
// weight[n+1][j] = best savings with at most j checkpoints.
// pred_offset records the distance x to the chosen predecessor (i - x);
// x = 0 means the value was carried over from column j - 1.
struct DpTables {
    std::vector<std::vector<std::int64_t>> weight;      // (n+2) x (k+1)
    std::vector<std::vector<std::int32_t>> pred_offset; // same shape
};

// Optimal plan of exactly k' = min(k, n) checkpoints. Ties are broken
// toward the smallest predecessor offset; if the optimum needs fewer than
// k' checkpoints, the plan is padded with the smallest unused steps
// (savings are unaffected). O(k n^2) time, O(k n) extra space.
PlacementResult dp_placement(const FaultDistribution& d, int k);

struct DpResult {
    PlacementResult placement;
    // saved_by_k[j] = optimal savings with at most j checkpoints, j = 0..k'.
    std::vector<std::int64_t> saved_by_k;
};

DpResult dp_placement_curve(const FaultDistribution& d, int k);

// Full tables for inspection; dp_placement itself only keeps two weight rows.
DpTables dp_tables(const FaultDistribution& d, int k);

// Evaluates every k-subset of candidate steps. Refuses with BudgetError when
// C(n, k) exceeds max_combinations; ties resolve to the lexicographically
// smallest plan. Test oracle for the optimality claims of the other methods.
PlacementResult exhaustive_placement(const FaultDistribution& d, int k,
                                     std::int64_t max_combinations = 10'000'000);

} // namespace ckpt
