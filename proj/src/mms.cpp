#include "mixedfair/mms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>

#include "mixedfair/errors.hpp"

namespace mixedfair {

namespace {

Rational min_of(const std::vector<Rational>& v) {
    Rational m = v.front();
    for (const auto& x : v) m = min(m, x);
    return m;
}

/// Exact max level reachable by distributing `count` indivisible pieces of
/// value `piece` (> 0) over bundles with base values `sums`. The optimum is
/// a grid point sums_j + c*piece inside [w_cont - piece, w_cont], where
/// w_cont is the continuous waterfill level.
Rational bulk_fill_level(const std::vector<Rational>& sums, const mpz_class& count, const Rational& piece) {
    const int k = static_cast<int>(sums.size());
    if (count == 0) return min_of(sums);
    Rational budget = Rational(count) * piece;
    Rational w_cont = waterfill(sums, budget).level;
    Rational window_lo = w_cont - piece;

    auto needed = [&](const Rational& w) {
        mpz_class total = 0;
        for (const auto& s : sums) {
            if (s < w) total += Rational::ceil_div(w - s, piece);
            if (total > count) break;
        }
        return total;
    };

    Rational best = min_of(sums);  // always feasible (no pieces needed)
    for (int j = 0; j < k; ++j) {
        mpz_class c = sums[j] <= w_cont ? Rational::floor_div(w_cont - sums[j], piece) : mpz_class(0);
        for (int d = 0; d <= 1; ++d, --c) {
            if (c < 0 || c > count) continue;
            Rational cand = sums[j] + Rational(c) * piece;
            if (cand < window_lo || cand > w_cont) continue;
            if (cand > best && needed(cand) <= count) best = cand;
        }
    }
    return best;
}

/// Piece counts realizing bulk_fill_level's optimum; extras beyond the
/// minimum go to bundle 0.
std::vector<mpz_class> bulk_fill_counts(const std::vector<Rational>& sums, const mpz_class& count,
                                        const Rational& piece, const Rational& level) {
    std::vector<mpz_class> c(sums.size(), 0);
    mpz_class used = 0;
    for (size_t j = 0; j < sums.size(); ++j) {
        if (sums[j] < level) c[j] = Rational::ceil_div(level - sums[j], piece);
        used += c[j];
    }
    c[0] += count - used;
    return c;
}

/// Canonical (restricted-growth) enumeration of unordered k-partitions with
/// a divisible budget and/or one bulk class completing each leaf. Prunes by
/// the continuous waterfill relaxation; keeps the first partition attaining
/// the maximum floor, so the result is deterministic.
struct PartitionSearch {
    const std::vector<Rational>& values;
    int k;
    Rational budget;       // divisible completion (exact_mms)
    mpz_class bulk_count;  // indivisible equal-piece completion
    Rational bulk_value;

    std::vector<Rational> sums;
    std::vector<Rational> suffix;
    std::vector<int> assign;
    std::vector<int> best_assign;
    Rational best_floor;
    bool have_best = false;

    PartitionSearch(const std::vector<Rational>& vals, int bundles, Rational cake_budget,
                    mpz_class bulk_n = 0, Rational bulk_v = Rational(0))
        : values(vals), k(bundles), budget(std::move(cake_budget)), bulk_count(std::move(bulk_n)),
          bulk_value(std::move(bulk_v)) {}

    Rational leaf_floor() const {
        if (bulk_count > 0) return bulk_fill_level(sums, bulk_count, bulk_value);
        return waterfill(sums, budget).level;
    }

    void run() {
        const int m = static_cast<int>(values.size());
        sums.assign(k, Rational(0));
        suffix.assign(m + 1, Rational(0));
        for (int i = m - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + values[i];
        assign.assign(m, 0);
        dfs(0, 0);
    }

    void dfs(int item, int used) {
        if (item == static_cast<int>(values.size())) {
            Rational f = leaf_floor();
            if (!have_best || f > best_floor) {
                best_floor = f;
                best_assign = assign;
                have_best = true;
            }
            return;
        }
        if (have_best) {
            Rational relax = waterfill(sums, suffix[item] + budget + Rational(bulk_count) * bulk_value).level;
            if (relax <= best_floor) return;
        }
        int limit = std::min(used, k - 1);
        for (int b = 0; b <= limit; ++b) {
            sums[b] += values[item];
            assign[item] = b;
            dfs(item + 1, std::max(used, b + 1));
            sums[b] -= values[item];
        }
    }
};

long env_long(const char* name, long fallback) {
    const char* s = std::getenv(name);
    if (!s || !*s) return fallback;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    return (end && *end == '\0' && v > 0) ? v : fallback;
}

// ---------------------------------------------------------------------------
// Value-rounding fallback for indivisible_maxmin beyond the exact guards.
// Rounds values down to multiples of theta = delta * greedy / (2m), then
// solves the integer instance exactly with a deficit-vector reachability
// search (polynomial for fixed k). The true value of the returned partition
// is >= (1 - delta/2) * OPT.
// ---------------------------------------------------------------------------

struct VecHash {
    size_t operator()(const std::vector<long>& v) const {
        size_t h = 1469598103934665603ull;
        for (long x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

constexpr size_t kMaxRoundingStates = 2'000'000;

struct DeficitSearch {
    const std::vector<long>& units;  // item sizes, descending
    int k;

    // per-level states (sorted deficit vectors) + parent links for replay
    std::vector<std::vector<std::vector<long>>> levels;
    std::vector<std::vector<std::pair<int, int>>> parents;  // (prev index, rank reduced)
    int final_level = -1;
    int final_state = -1;

    DeficitSearch(const std::vector<long>& u, int bundles) : units(u), k(bundles) {}

    bool feasible(long target, bool track) {
        levels.clear();
        parents.clear();
        levels.push_back({std::vector<long>(k, target)});
        parents.push_back({{-1, -1}});
        if (target == 0) {
            final_level = 0;
            final_state = 0;
            return true;
        }
        for (size_t i = 0; i < units.size(); ++i) {
            const auto& cur = levels.back();
            std::vector<std::vector<long>> next;
            std::vector<std::pair<int, int>> next_par;
            std::unordered_set<std::vector<long>, VecHash> seen;
            long s = std::min(units[i], target);
            for (int ci = 0; ci < static_cast<int>(cur.size()); ++ci) {
                const auto& st = cur[ci];
                for (int r = 0; r < k; ++r) {
                    if (r > 0 && st[r] == st[r - 1]) continue;  // same deficit, symmetric
                    if (st[r] == 0) continue;                   // wasted, dominated by r with deficit > 0
                    std::vector<long> nxt = st;
                    nxt[r] = std::max(0l, nxt[r] - s);
                    std::sort(nxt.begin(), nxt.end());
                    if (!seen.insert(nxt).second) continue;
                    bool done = nxt.back() == 0;  // sorted descending? no: ascending, check all zero
                    done = nxt[k - 1] == 0;
                    next.push_back(nxt);
                    next_par.emplace_back(ci, r);
                    if (done) {
                        levels.push_back(std::move(next));
                        parents.push_back(std::move(next_par));
                        final_level = static_cast<int>(levels.size()) - 1;
                        final_state = static_cast<int>(levels[final_level].size()) - 1;
                        return true;
                    }
                    if (next.size() > kMaxRoundingStates)
                        throw SizeGuardError("max-min rounding scheme exceeded its state budget");
                }
            }
            if (next.empty()) return false;
            levels.push_back(std::move(next));
            parents.push_back(std::move(next_par));
            if (!track && i + 1 < units.size()) {
                // only the frontier matters when not reconstructing
                levels.erase(levels.begin(), levels.end() - 1);
                parents.clear();
                parents.push_back({});
            }
        }
        return false;
    }

    /// After a tracked feasible() success: which bundle each processed item
    /// went to (items beyond the early exit are unassigned, marked -1).
    std::vector<int> replay(long target) const {
        std::vector<std::pair<int, int>> steps;  // (state idx walked through, rank)
        int lvl = final_level;
        int idx = final_state;
        while (lvl > 0) {
            steps.emplace_back(idx, parents[lvl][idx].second);
            idx = parents[lvl][idx].first;
            --lvl;
        }
        std::reverse(steps.begin(), steps.end());

        std::vector<int> item_bundle(units.size(), -1);
        std::vector<long> actual(k, target);  // actual per-bundle deficits
        std::vector<long> sorted_state(k, target);
        for (size_t i = 0; i < steps.size(); ++i) {
            int rank = steps[i].second;
            long wanted = sorted_state[rank];
            int bundle = -1;
            for (int j = 0; j < k; ++j)
                if (actual[j] == wanted) {
                    bundle = j;
                    break;
                }
            long s = std::min(units[i], target);
            actual[bundle] = std::max(0l, actual[bundle] - s);
            item_bundle[i] = bundle;
            sorted_state = actual;
            std::sort(sorted_state.begin(), sorted_state.end());
        }
        return item_bundle;
    }
};

MaxminResult rounding_maxmin(const std::vector<Rational>& values, int k, const Rational& delta) {
    const int m = static_cast<int>(values.size());

    // LPT greedy: descending values, each to the currently lowest bundle.
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return values[a] > values[b] || (values[a] == values[b] && a < b); });
    std::vector<std::vector<int>> greedy_part(k);
    std::vector<Rational> greedy_sums(k, Rational(0));
    for (int idx : order) {
        int target = 0;
        for (int j = 1; j < k; ++j)
            if (greedy_sums[j] < greedy_sums[target]) target = j;
        greedy_part[target].push_back(idx);
        greedy_sums[target] += values[idx];
    }
    Rational greedy_floor = min_of(greedy_sums);
    if (greedy_floor.is_zero()) {
        // fewer than k positive items: the optimum is 0
        for (auto& b : greedy_part) std::sort(b.begin(), b.end());
        return {Rational(0), std::move(greedy_part)};
    }

    Rational theta = delta * greedy_floor / Rational(2 * m);
    std::vector<long> units(m);
    mpz_class total_units = 0;
    for (int i = 0; i < m; ++i) {
        mpz_class u = Rational::floor_div(values[order[i]], theta);
        if (!u.fits_slong_p()) throw SizeGuardError("rounded item does not fit a machine word");
        units[i] = u.get_si();  // order[] is descending, so units are too
        total_units += u;
    }
    mpz_class cap_z = total_units / k + 1;
    if (!cap_z.fits_slong_p()) throw SizeGuardError("rounded total does not fit a machine word");
    const long cap = cap_z.get_si();

    DeficitSearch search(units, k);
    long lo = 0;  // always feasible
    long hi = 1;
    while (hi <= cap && search.feasible(hi, false)) {
        lo = hi;
        hi *= 2;
    }
    hi = std::min(hi, cap + 1);  // hi infeasible (or beyond any possible level)
    while (hi - lo > 1) {
        long mid = lo + (hi - lo) / 2;
        if (search.feasible(mid, false))
            lo = mid;
        else
            hi = mid;
    }

    std::vector<std::vector<int>> part(k);
    std::vector<Rational> sums(k, Rational(0));
    if (lo == 0) {
        part = greedy_part;
        sums = greedy_sums;
    } else {
        search.feasible(lo, true);
        std::vector<int> item_bundle = search.replay(lo);
        for (int i = 0; i < m; ++i) {
            if (item_bundle[i] < 0) continue;
            part[item_bundle[i]].push_back(order[i]);
            sums[item_bundle[i]] += values[order[i]];
        }
        for (int i = 0; i < m; ++i) {
            if (item_bundle[i] >= 0) continue;  // leftovers: greedily lift the minimum
            int target = 0;
            for (int j = 1; j < k; ++j)
                if (sums[j] < sums[target]) target = j;
            part[target].push_back(order[i]);
            sums[target] += values[order[i]];
        }
    }
    for (auto& b : part) std::sort(b.begin(), b.end());
    return {min_of(sums), std::move(part)};
}

}  // namespace

Rational MMSCertificate::recompute_floor(const Instance& inst, int agent) const {
    Rational best;
    bool first = true;
    for (int j = 0; j < k; ++j) {
        Rational v = inst.goods_value(agent, good_partition[j]) + cake_shares[j];
        if (first || v < best) best = v;
        first = false;
    }
    return best;
}

WaterfillResult waterfill(const std::vector<Rational>& values, const Rational& budget) {
    if (values.empty()) throw DomainError("waterfill needs at least one bundle");
    if (budget.sign() < 0) throw DomainError("waterfill budget must be nonnegative");
    const int k = static_cast<int>(values.size());
    WaterfillResult out;
    out.shares.assign(k, Rational(0));
    if (budget.is_zero()) {
        out.level = min_of(values);
        return out;
    }
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return values[a] < values[b]; });

    // walk breakpoints: after filling the t lowest bundles up to the next
    // value, either the budget runs out inside the step or we continue
    Rational prefix = values[idx[0]];  // sum of the t lowest values
    Rational level;
    int t = 1;
    for (; t < k; ++t) {
        const Rational& next = values[idx[t]];
        Rational step_cost = Rational(t) * next - prefix;
        if (step_cost >= budget) break;
        prefix += next;
    }
    level = (budget + prefix) / Rational(t);
    out.level = level;
    for (int i = 0; i < k; ++i)
        if (values[i] < level) out.shares[i] = level - values[i];
    return out;
}

bool SizeGuard::admits(int item_count, int k) const {
    if (item_count <= max_goods) return true;
    if (k <= 1) return true;
    return item_count * std::log(static_cast<double>(k)) <= std::log(max_assignments);
}

SizeGuard size_guard_from_env() {
    SizeGuard g;
    g.max_goods = static_cast<int>(env_long("MIXEDFAIR_MAX_GOODS", g.max_goods));
    return g;
}

MMSCertificate exact_mms(const Instance& inst, int agent, int k, const SizeGuard& guard, QueryCounter* counter) {
    if (agent < 0 || agent >= inst.n()) throw DomainError("agent index out of range");
    if (k < 1) throw DomainError("bundle count must be >= 1");
    if (!guard.admits(inst.m(), k))
        throw SizeGuardError("exact_mms: " + std::to_string(inst.m()) + " goods into " + std::to_string(k) +
                             " bundles exceeds the exhaustive guard");

    Rational budget = inst.has_cake()
                          ? eval(inst, agent, CakePiece::interval(Rational(0), Rational(1)), counter)
                          : Rational(0);
    PartitionSearch search(inst.utilities[agent], k, budget);
    search.run();

    MMSCertificate cert;
    cert.k = k;
    cert.good_partition.assign(k, {});
    for (int g = 0; g < inst.m(); ++g) cert.good_partition[search.best_assign[g]].push_back(g);
    std::vector<Rational> sums(k, Rational(0));
    for (int j = 0; j < k; ++j) sums[j] = inst.goods_value(agent, cert.good_partition[j]);
    auto fill = waterfill(sums, budget);
    cert.cake_shares = std::move(fill.shares);
    cert.floor = fill.level;
    return cert;
}

MaxminResult indivisible_maxmin(const std::vector<Rational>& values, int k, const Rational& delta,
                                const SizeGuard& guard) {
    if (k < 1) throw DomainError("bundle count must be >= 1");
    if (!(delta > Rational(0) && delta < Rational(1))) throw DomainError("delta must be in (0,1)");
    for (const auto& v : values)
        if (v.sign() < 0) throw DomainError("item values must be nonnegative");

    // zero-value items never move the floor; park them on bundle 0
    std::vector<Rational> vals;
    std::vector<int> vals_idx, zeros;
    for (size_t i = 0; i < values.size(); ++i) {
        if (values[i].is_zero())
            zeros.push_back(static_cast<int>(i));
        else {
            vals.push_back(values[i]);
            vals_idx.push_back(static_cast<int>(i));
        }
    }

    MaxminResult res;
    const int m = static_cast<int>(vals.size());
    if (m == 0) {
        res.floor = Rational(0);
        res.partition.assign(k, {});
    } else if (k == 1) {
        res.floor = Rational(0);
        res.partition.assign(1, {});
        for (int i = 0; i < m; ++i) {
            res.floor += vals[i];
            res.partition[0].push_back(i);
        }
    } else if (guard.admits(m, k)) {
        PartitionSearch search(vals, k, Rational(0));
        search.run();
        res.floor = search.best_floor;
        res.partition.assign(k, {});
        for (int i = 0; i < m; ++i) res.partition[search.best_assign[i]].push_back(i);
    } else {
        // one dominant class of equal values (e.g. an equal-value cake
        // discretization) keeps the search exact: enumerate partitions of
        // the distinct remainder, complete each leaf in closed form
        std::vector<int> by_value(m);
        for (int i = 0; i < m; ++i) by_value[i] = i;
        std::sort(by_value.begin(), by_value.end(),
                  [&](int a, int b) { return vals[a] < vals[b] || (vals[a] == vals[b] && a < b); });
        int best_start = 0, best_len = 0;
        for (int s = 0; s < m;) {
            int e = s;
            while (e < m && vals[by_value[e]] == vals[by_value[s]]) ++e;
            if (e - s > best_len) {
                best_len = e - s;
                best_start = s;
            }
            s = e;
        }
        if (best_len >= 2 && guard.admits(m - best_len, k)) {
            Rational piece = vals[by_value[best_start]];
            std::vector<int> bulk_items(by_value.begin() + best_start, by_value.begin() + best_start + best_len);
            std::sort(bulk_items.begin(), bulk_items.end());
            std::vector<Rational> rest;
            std::vector<int> rest_idx;
            for (int i = 0; i < m; ++i)
                if (!std::binary_search(bulk_items.begin(), bulk_items.end(), i)) {
                    rest.push_back(vals[i]);
                    rest_idx.push_back(i);
                }
            PartitionSearch search(rest, k, Rational(0), mpz_class(best_len), piece);
            search.run();
            res.partition.assign(k, {});
            std::vector<Rational> sums(k, Rational(0));
            for (size_t i = 0; i < rest.size(); ++i) {
                res.partition[search.best_assign[i]].push_back(rest_idx[i]);
                sums[search.best_assign[i]] += rest[i];
            }
            auto counts = bulk_fill_counts(sums, mpz_class(best_len), piece, search.best_floor);
            size_t next = 0;
            for (int j = 0; j < k; ++j)
                for (mpz_class c = 0; c < counts[j]; ++c) res.partition[j].push_back(bulk_items[next++]);
            res.floor = search.best_floor;
            for (auto& b : res.partition) std::sort(b.begin(), b.end());
        } else {
            res = rounding_maxmin(vals, k, delta);
        }
    }

    // map back to original indices, reattach zero-value items
    for (auto& bundle : res.partition)
        for (auto& i : bundle) i = vals_idx[i];
    for (int z : zeros) res.partition[0].push_back(z);
    for (auto& b : res.partition) std::sort(b.begin(), b.end());
    return res;
}

std::vector<std::pair<Rational, Rational>> discretize_cake(const Instance& inst, int agent, int k,
                                                           const Rational& epsilon, QueryCounter* counter) {
    if (!(epsilon > Rational(0) && epsilon < Rational(1))) throw DomainError("epsilon must be in (0,1)");
    if (k < 1) throw DomainError("bundle count must be >= 1");
    std::vector<std::pair<Rational, Rational>> pieces;
    if (!inst.has_cake()) return pieces;
    Rational total = eval(inst, agent, CakePiece::interval(Rational(0), Rational(1)), counter);
    if (total.is_zero()) return pieces;

    mpz_class t_count = Rational::ceil_div(Rational(2 * k), epsilon);
    if (!t_count.fits_slong_p() || t_count.get_si() > 1'000'000)
        throw SizeGuardError("discretization produces too many intervals");
    const long T = t_count.get_si();
    Rational target = total / Rational(t_count);

    Rational left(0);
    for (long t = 0; t + 1 < T; ++t) {
        Rational right = cut(inst, agent, left, target, counter);
        pieces.emplace_back(left, right);
        left = right;
    }
    pieces.emplace_back(left, Rational(1));  // absorbs any trailing worthless stretch
    return pieces;
}

Rational approx_mms(const Instance& inst, int agent, int k, const Rational& epsilon, const SizeGuard& guard,
                    QueryCounter* counter) {
    if (agent < 0 || agent >= inst.n()) throw DomainError("agent index out of range");
    auto pieces = discretize_cake(inst, agent, k, epsilon, counter);

    std::vector<Rational> combined = inst.utilities[agent];
    if (!pieces.empty()) {
        Rational total = eval(inst, agent, CakePiece::interval(Rational(0), Rational(1)), nullptr);
        Rational target = total / Rational(static_cast<long>(pieces.size()));
        for (size_t i = 0; i < pieces.size(); ++i) combined.push_back(target);
    }
    if (combined.empty()) return Rational(0);
    return indivisible_maxmin(combined, k, epsilon / Rational(2), guard).floor;
}

}  // namespace mixedfair
