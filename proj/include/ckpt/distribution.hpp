#pragma once

#include <cstdint>
#include <vector>

namespace ckpt {

using Cycle = std::int64_t;
using Count = std::int64_t;

struct FaultEntry {
    Cycle time = 0;
    Count count = 0;

    friend bool operator==(const FaultEntry&, const FaultEntry&) = default;
};

// Discrete histogram of planned injection times over [t_start, t_end).
// Entries are sorted by time, have no duplicates, and all counts are >= 1.
// Construct through build_distribution() so the invariants hold.
struct FaultDistribution {
    Cycle t_start = 0;
    Cycle t_end = 0;
    std::vector<FaultEntry> entries;
    Count total = 0; // F, sum of all counts

    friend bool operator==(const FaultDistribution&, const FaultDistribution&) = default;
};

// Normalizes (sort, merge duplicate times, drop zero counts) and validates.
// Throws ValidationError on an empty result, a time outside [t_start, t_end),
// a negative count, or t_end <= t_start.
FaultDistribution build_distribution(std::vector<FaultEntry> pairs, Cycle t_start, Cycle t_end);

struct PopulationStep {
    Cycle time = 0;
    Count value = 0;
};

// Number of experiments still in their forwarding phase at cycle t:
// P(t) = |{f : t_FI(f) >= t}|. Non-increasing step function with
// P(t_start) = F and P(t_end) = 0.
struct Population {
    Cycle t_start = 0;
    Cycle t_end = 0;
    Count total = 0;
    std::vector<PopulationStep> steps; // strictly increasing times, strictly decreasing values

    // Value of the latest step at or before t. Requires t >= t_start.
    Count value_at(Cycle t) const;
};

Population population(const FaultDistribution& d);

// Forward cycles of the whole campaign without real checkpoints:
// sum over faults of (t_FI - t_start).
std::int64_t baseline_forward_cycles(const FaultDistribution& d);

// k distinct checkpoint times, strictly increasing. The reset at t_start is
// the implicit checkpoint C_0 and never appears here.
struct CheckpointPlan {
    std::vector<Cycle> times;

    std::size_t size() const { return times.size(); }
    bool empty() const { return times.empty(); }

    friend bool operator==(const CheckpointPlan&, const CheckpointPlan&) = default;
};

// Sorts and deduplicates.
CheckpointPlan make_plan(std::vector<Cycle> times);

struct SavingsRect {
    Cycle left = 0;   // T(C_i)
    Cycle right = 0;  // T(C_{i+1})
    Count height = 0; // P(T(C_{i+1}))
    std::int64_t area = 0;
};

struct SavingsReport {
    std::int64_t saved = 0;
    std::int64_t baseline = 0;
    std::int64_t remaining = 0;
    double reduction = 0.0; // saved / baseline, 0 when baseline is 0
    std::vector<SavingsRect> rectangles;
};

// S(C) = sum_{i=0}^{k-1} (T(C_{i+1}) - T(C_i)) * P(T(C_{i+1})) with C_0 = t_start.
// Throws ValidationError if a checkpoint lies outside (t_start, t_end).
SavingsReport savings(const FaultDistribution& d, const CheckpointPlan& plan);

// Brute-force semantics: every fault restores from the latest checkpoint
// (including C_0) at or before its injection time. Computed per fault,
// independent of the rectangle sum in savings(); the two must agree.
std::int64_t oracle_savings(const FaultDistribution& d, const CheckpointPlan& plan);

// The only useful checkpoint positions: distinct entry times except t_start.
std::vector<Cycle> candidate_steps(const FaultDistribution& d);

// Moves every checkpoint that lies strictly between candidate steps right to
// the next candidate step, then deduplicates (the plan may shrink).
// Checkpoints past the last candidate step stay where they are. Never
// decreases savings.
CheckpointPlan snap_to_steps(const FaultDistribution& d, const CheckpointPlan& plan);

// Candidate steps with their population heights, precomputed once. This is
// the shared working form for all placement strategies: a plan of step
// indices i_1 < ... < i_k has savings
//   sum_j (times[i_j] - times[i_{j-1}]) * heights[i_j]   (times[i_0] = t_start).
struct StepProfile {
    Cycle t_start = 0;
    Cycle t_end = 0;
    std::vector<Cycle> times;   // ascending candidate steps
    std::vector<Count> heights; // heights[i] = P(times[i])

    std::size_t size() const { return times.size(); }
};

StepProfile step_profile(const FaultDistribution& d);

// Savings of a sorted list of distinct step indices into `profile`.
std::int64_t profile_savings(const StepProfile& profile, const std::vector<std::uint32_t>& indices);

} // namespace ckpt
