#pragma once

#include <vector>

#include "mixedfair/model.hpp"
#include "mixedfair/rw.hpp"

namespace mixedfair {

/// Witness for an MMS lower bound: a partition of the goods into k bundles
/// plus the amount of cake value assigned to each bundle.
struct MMSCertificate {
    int k = 1;
    std::vector<std::vector<int>> good_partition;  // k disjoint sets covering all goods
    std::vector<Rational> cake_shares;             // k values >= 0, summing to u_agent(C)
    Rational floor;                                // min over bundles of good value + cake share

    /// Recomputes the floor from the partition and shares under `agent`'s
    /// valuation; must equal `floor`.
    Rational recompute_floor(const Instance& inst, int agent) const;
};

struct WaterfillResult {
    Rational level;
    std::vector<Rational> shares;
};

/// Distributes a divisible budget over bundles with base values `values` to
/// maximize the minimum resulting bundle value. With budget 0 the level is
/// min(values) and no bundle is altered. Computed by sorting values and
/// scanning breakpoints; shares_j = max(0, level - values_j) and the shares
/// sum exactly to the budget.
WaterfillResult waterfill(const std::vector<Rational>& values, const Rational& budget);

/// Guards for the exhaustive routines. k^m <= max_assignments OR
/// m <= max_goods allows the exact path.
struct SizeGuard {
    int max_goods = 12;
    double max_assignments = 1e7;
    bool admits(int item_count, int k) const;
};

/// Reads MIXEDFAIR_MAX_GOODS (if set) into the default guard.
SizeGuard size_guard_from_env();

/// Exact k-maximin share of `agent` over the whole mixed instance.
/// Enumerates unordered good partitions (a canonical labeling of assignments
/// to k bundles) and waterfills the agent's cake value over each; the
/// certificate attains the maximum floor, ties broken toward the first
/// partition in canonical enumeration order. Throws SizeGuardError beyond
/// the guard; never falls back silently.
MMSCertificate exact_mms(const Instance& inst, int agent, int k, const SizeGuard& guard = {},
                         QueryCounter* counter = nullptr);

struct MaxminResult {
    Rational floor;                           // true min bundle value of `partition`
    std::vector<std::vector<int>> partition;  // k bundles of item indices
};

/// Max-min k-partition of indivisible values. Exact when within the guard
/// (or when the values are one bulk class of equal items plus at most
/// guard.max_goods distinct items); otherwise a value-rounding scheme whose
/// result is >= (1-delta) times the optimum.
MaxminResult indivisible_maxmin(const std::vector<Rational>& values, int k, const Rational& delta,
                                const SizeGuard& guard = {});

/// The equal-value cake discretization behind the PTAS: cuts `agent`'s cake
/// into ceil(2k/epsilon) consecutive intervals worth u_i(C)/T each (the
/// last interval absorbs any trailing worthless stretch so the intervals
/// tile [0,1]). Empty when the agent's cake value is zero.
std::vector<std::pair<Rational, Rational>> discretize_cake(const Instance& inst, int agent, int k,
                                                           const Rational& epsilon,
                                                           QueryCounter* counter = nullptr);

/// (1-epsilon)-approximate k-maximin share: discretizes the cake into
/// pseudo-indivisible intervals, then runs indivisible_maxmin with
/// delta = epsilon/2. The result V satisfies
/// (1-epsilon) * MMS <= V <= MMS, exactly.
Rational approx_mms(const Instance& inst, int agent, int k, const Rational& epsilon,
                    const SizeGuard& guard = {}, QueryCounter* counter = nullptr);

}  // namespace mixedfair
