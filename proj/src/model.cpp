#include "mixedfair/model.hpp"

#include <algorithm>

#include "mixedfair/errors.hpp"

namespace mixedfair {

Rational CakeDensity::total() const {
    Rational t;
    for (const auto& s : segments) t += s.height * (s.right - s.left);
    return t;
}

CakePiece CakePiece::interval(Rational left, Rational right) {
    if (left > right) throw DomainError("interval with left > right");
    CakePiece p;
    if (left < right) p.intervals.emplace_back(std::move(left), std::move(right));
    return p;
}

CakePiece CakePiece::from_intervals(std::vector<std::pair<Rational, Rational>> raw) {
    std::erase_if(raw, [](const auto& iv) { return iv.first == iv.second; });
    for (const auto& iv : raw)
        if (iv.first > iv.second) throw DomainError("interval with left > right");
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
        return a.first < b.first || (a.first == b.first && a.second < b.second);
    });
    CakePiece p;
    for (auto& iv : raw) {
        if (!p.intervals.empty()) {
            auto& last = p.intervals.back();
            if (iv.first < last.second) throw DomainError("overlapping intervals in cake piece");
            if (iv.first == last.second) {
                last.second = std::move(iv.second);
                continue;
            }
        }
        p.intervals.push_back(std::move(iv));
    }
    return p;
}

Rational CakePiece::length() const {
    Rational t;
    for (const auto& iv : intervals) t += iv.second - iv.first;
    return t;
}

CakePiece CakePiece::united(const CakePiece& other) const {
    std::vector<std::pair<Rational, Rational>> all = intervals;
    all.insert(all.end(), other.intervals.begin(), other.intervals.end());
    return from_intervals(std::move(all));
}

Rational Instance::goods_value(int agent, const std::vector<int>& goods) const {
    Rational t;
    for (int g : goods) t += utilities[agent][g];
    return t;
}

Rational Instance::total_goods_value(int agent) const {
    Rational t;
    for (const auto& u : utilities[agent]) t += u;
    return t;
}

std::vector<std::string> check_instance(const Instance& inst) {
    std::vector<std::string> bad;
    const int n = inst.n();
    const int m = inst.m();
    if (n < 1) bad.push_back("instance needs at least one agent");
    if (!inst.agent_names.empty() && static_cast<int>(inst.agent_names.size()) != n)
        bad.push_back("agent name count does not match agent count");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(inst.utilities[i].size()) != m)
            bad.push_back("agent " + std::to_string(i) + ": utility row has " +
                          std::to_string(inst.utilities[i].size()) + " entries, expected " + std::to_string(m));
        for (size_t g = 0; g < inst.utilities[i].size(); ++g)
            if (inst.utilities[i][g].sign() < 0)
                bad.push_back("agent " + std::to_string(i) + ", good " + std::to_string(g) + ": negative utility");
    }
    if (inst.has_cake()) {
        if (static_cast<int>(inst.densities.size()) != n)
            bad.push_back("cake present but density count (" + std::to_string(inst.densities.size()) +
                          ") does not match agent count");
        for (size_t i = 0; i < inst.densities.size(); ++i) {
            const auto& segs = inst.densities[i].segments;
            const std::string who = "agent " + std::to_string(i) + " density: ";
            if (segs.empty()) {
                bad.push_back(who + "no segments");
                continue;
            }
            if (segs.front().left != Rational(0)) bad.push_back(who + "first segment does not start at 0");
            if (segs.back().right != Rational(1)) bad.push_back(who + "last segment does not end at 1");
            for (size_t s = 0; s < segs.size(); ++s) {
                if (!(segs[s].left < segs[s].right))
                    bad.push_back(who + "segment " + std::to_string(s) + " has left >= right");
                if (segs[s].height.sign() < 0)
                    bad.push_back(who + "segment " + std::to_string(s) + " has negative height");
                if (s > 0 && segs[s].left != segs[s - 1].right) {
                    const char* kind = segs[s].left > segs[s - 1].right ? "gap" : "overlap";
                    bad.push_back(who + std::string(kind) + " between segments " + std::to_string(s - 1) +
                                  " and " + std::to_string(s));
                }
            }
        }
    }
    return bad;
}

Instance validate_instance(Instance inst) {
    if (inst.good_labels.empty() && !inst.utilities.empty() && !inst.utilities[0].empty()) {
        for (size_t g = 0; g < inst.utilities[0].size(); ++g)
            inst.good_labels.push_back("g" + std::to_string(g));
    }
    if (inst.agent_names.empty()) {
        for (int i = 0; i < inst.n(); ++i) inst.agent_names.push_back("agent" + std::to_string(i));
    }
    auto bad = check_instance(inst);
    if (!bad.empty()) throw ValidationError(std::move(bad));
    return inst;
}

std::vector<std::string> check_allocation(const Instance& inst, const Allocation& alloc) {
    std::vector<std::string> bad;
    const int n = inst.n();
    const int m = inst.m();
    if (static_cast<int>(alloc.bundles.size()) != n) {
        bad.push_back("allocation has " + std::to_string(alloc.bundles.size()) + " bundles, expected " +
                      std::to_string(n));
        return bad;
    }
    std::vector<int> owner(m, -1);
    for (int i = 0; i < n; ++i) {
        for (int g : alloc.bundles[i].goods) {
            if (g < 0 || g >= m) {
                bad.push_back("agent " + std::to_string(i) + ": good index " + std::to_string(g) + " out of range");
                continue;
            }
            if (owner[g] != -1)
                bad.push_back("good " + std::to_string(g) + " allocated to both agents " +
                              std::to_string(owner[g]) + " and " + std::to_string(i));
            owner[g] = i;
        }
    }
    for (int g = 0; g < m; ++g)
        if (owner[g] == -1) bad.push_back("good " + std::to_string(g) + " unallocated");

    // cake pieces must tile [0,1] exactly when the instance has a cake
    std::vector<std::pair<Rational, Rational>> all;
    for (int i = 0; i < n; ++i)
        for (const auto& iv : alloc.bundles[i].cake.intervals) {
            if (iv.first.sign() < 0 || iv.second > Rational(1))
                bad.push_back("agent " + std::to_string(i) + ": cake interval outside [0,1]");
            all.push_back(iv);
        }
    if (inst.has_cake()) {
        try {
            CakePiece whole = CakePiece::from_intervals(all);
            if (whole.intervals.size() != 1 || whole.intervals[0].first != Rational(0) ||
                whole.intervals[0].second != Rational(1))
                bad.push_back("cake pieces do not cover [0,1]");
        } catch (const DomainError&) {
            bad.push_back("cake pieces overlap");
        }
    } else {
        if (!all.empty()) bad.push_back("cake piece allocated but instance has no cake");
    }
    return bad;
}

}  // namespace mixedfair
