#include "ckpt/distribution.hpp"

#include <algorithm>
#include <string>

#include "ckpt/errors.hpp"

namespace ckpt {

FaultDistribution build_distribution(std::vector<FaultEntry> pairs, Cycle t_start, Cycle t_end) {
    if (t_start < 0)
        throw ValidationError("t_start must be non-negative, got " + std::to_string(t_start));
    if (t_end <= t_start)
        throw ValidationError("time range is empty: t_end=" + std::to_string(t_end) +
                              " <= t_start=" + std::to_string(t_start));

    std::erase_if(pairs, [](const FaultEntry& e) { return e.count == 0; });
    for (const FaultEntry& e : pairs) {
        if (e.count < 0)
            throw ValidationError("negative count " + std::to_string(e.count) + " at time " +
                                  std::to_string(e.time));
        if (e.time < t_start || e.time >= t_end)
            throw ValidationError("entry time " + std::to_string(e.time) + " outside [" +
                                  std::to_string(t_start) + ", " + std::to_string(t_end) + ")");
    }
    if (pairs.empty())
        throw ValidationError("distribution has no faults");

    std::sort(pairs.begin(), pairs.end(),
              [](const FaultEntry& a, const FaultEntry& b) { return a.time < b.time; });

    FaultDistribution d;
    d.t_start = t_start;
    d.t_end = t_end;
    d.entries.reserve(pairs.size());
    for (const FaultEntry& e : pairs) {
        if (!d.entries.empty() && d.entries.back().time == e.time)
            d.entries.back().count += e.count;
        else
            d.entries.push_back(e);
        d.total += e.count;
    }
    return d;
}

Count Population::value_at(Cycle t) const {
    if (t < t_start)
        throw ValidationError("population evaluated before t_start");
    // Latest step at or before t.
    auto it = std::upper_bound(steps.begin(), steps.end(), t,
                               [](Cycle lhs, const PopulationStep& s) { return lhs < s.time; });
    return std::prev(it)->value;
}

Population population(const FaultDistribution& d) {
    Population p;
    p.t_start = d.t_start;
    p.t_end = d.t_end;
    p.total = d.total;
    p.steps.push_back({d.t_start, d.total});
    // Every fault leaves the forwarding population one cycle after its
    // injection time, so P drops from P(t) to P(t) - D(t) at t + 1.
    Count remaining = d.total;
    for (const FaultEntry& e : d.entries) {
        remaining -= e.count;
        p.steps.push_back({e.time + 1, remaining});
    }
    return p;
}

std::int64_t baseline_forward_cycles(const FaultDistribution& d) {
    std::int64_t sum = 0;
    for (const FaultEntry& e : d.entries)
        sum += e.count * (e.time - d.t_start);
    return sum;
}

CheckpointPlan make_plan(std::vector<Cycle> times) {
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return CheckpointPlan{std::move(times)};
}

static void check_plan_range(const FaultDistribution& d, const CheckpointPlan& plan) {
    for (Cycle t : plan.times)
        if (t <= d.t_start || t >= d.t_end)
            throw ValidationError("checkpoint time " + std::to_string(t) + " outside (" +
                                  std::to_string(d.t_start) + ", " + std::to_string(d.t_end) + ")");
}

SavingsReport savings(const FaultDistribution& d, const CheckpointPlan& plan) {
    check_plan_range(d, plan);
    const Population p = population(d);

    SavingsReport r;
    r.baseline = baseline_forward_cycles(d);
    Cycle prev = d.t_start;
    for (Cycle t : plan.times) {
        const Count height = p.value_at(t);
        const std::int64_t area = (t - prev) * height;
        r.rectangles.push_back({prev, t, height, area});
        r.saved += area;
        prev = t;
    }
    r.remaining = r.baseline - r.saved;
    r.reduction = r.baseline == 0 ? 0.0 : static_cast<double>(r.saved) / static_cast<double>(r.baseline);
    return r;
}

std::int64_t oracle_savings(const FaultDistribution& d, const CheckpointPlan& plan) {
    check_plan_range(d, plan);
    std::int64_t saved = 0;
    for (const FaultEntry& e : d.entries) {
        // Latest checkpoint usable for this fault, C_0 = t_start if none.
        auto it = std::upper_bound(plan.times.begin(), plan.times.end(), e.time);
        const Cycle restore = it == plan.times.begin() ? d.t_start : *std::prev(it);
        saved += e.count * (restore - d.t_start);
    }
    return saved;
}

std::vector<Cycle> candidate_steps(const FaultDistribution& d) {
    std::vector<Cycle> steps;
    steps.reserve(d.entries.size());
    for (const FaultEntry& e : d.entries)
        if (e.time != d.t_start)
            steps.push_back(e.time);
    return steps;
}

CheckpointPlan snap_to_steps(const FaultDistribution& d, const CheckpointPlan& plan) {
    check_plan_range(d, plan);
    const std::vector<Cycle> steps = candidate_steps(d);
    std::vector<Cycle> snapped;
    snapped.reserve(plan.size());
    for (Cycle t : plan.times) {
        auto it = std::lower_bound(steps.begin(), steps.end(), t);
        // Past the last step there is nothing to snap to; keep the
        // checkpoint (its rectangle has height 0 either way).
        snapped.push_back(it == steps.end() ? t : *it);
    }
    return make_plan(std::move(snapped));
}

StepProfile step_profile(const FaultDistribution& d) {
    StepProfile sp;
    sp.t_start = d.t_start;
    sp.t_end = d.t_end;
    sp.times = candidate_steps(d);
    sp.heights.reserve(sp.times.size());
    const Population p = population(d);
    for (Cycle t : sp.times)
        sp.heights.push_back(p.value_at(t));
    return sp;
}

std::int64_t profile_savings(const StepProfile& profile, const std::vector<std::uint32_t>& indices) {
    std::int64_t sum = 0;
    Cycle prev = profile.t_start;
    for (std::uint32_t i : indices) {
        sum += (profile.times[i] - prev) * profile.heights[i];
        prev = profile.times[i];
    }
    return sum;
}

} // namespace ckpt
