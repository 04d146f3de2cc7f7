#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mixedfair/rational.hpp"

namespace mixedfair {

/// One constant-height stretch of an agent's density over the cake [0,1].
struct DensitySegment {
    Rational left;
    Rational right;
    Rational height;  // value per unit length, >= 0
};

/// Piecewise-constant density tiling [0,1] exactly.
struct CakeDensity {
    std::vector<DensitySegment> segments;

    Rational total() const;
    bool is_uniform() const { return segments.size() == 1; }
};

/// Finite union of subintervals of [0,1], kept sorted, pairwise disjoint,
/// with adjacent intervals merged. Intervals sharing an endpoint count as
/// disjoint.
struct CakePiece {
    std::vector<std::pair<Rational, Rational>> intervals;

    static CakePiece interval(Rational left, Rational right);
    /// Sorts, rejects overlapping interiors, merges shared endpoints,
    /// drops empty intervals. Throws DomainError on left >= right or overlap.
    static CakePiece from_intervals(std::vector<std::pair<Rational, Rational>> raw);

    bool empty() const { return intervals.empty(); }
    Rational length() const;
    /// Union with a disjoint piece (shared endpoints allowed).
    CakePiece united(const CakePiece& other) const;

    bool operator==(const CakePiece&) const = default;
};

/// A mixed-goods instance: n agents with additive utilities over m
/// indivisible goods, plus (optionally) one piecewise-constant density per
/// agent over the cake [0,1].
struct Instance {
    std::vector<std::string> good_labels;
    std::vector<std::string> agent_names;
    std::vector<std::vector<Rational>> utilities;  // [agent][good]
    std::vector<CakeDensity> densities;            // empty <=> no cake

    int n() const { return static_cast<int>(utilities.size()); }
    int m() const { return static_cast<int>(good_labels.size()); }
    bool has_cake() const { return !densities.empty(); }

    const Rational& utility(int agent, int good) const { return utilities[agent][good]; }
    Rational goods_value(int agent, const std::vector<int>& goods) const;
    Rational total_goods_value(int agent) const;
};

/// Per-agent bundle in a complete allocation.
struct Bundle {
    std::vector<int> goods;  // sorted good indices
    CakePiece cake;
};

struct Allocation {
    std::vector<Bundle> bundles;  // one per agent
};

/// Collects every violated invariant ("" empty result means valid).
std::vector<std::string> check_instance(const Instance& inst);

/// Canonicalizes (sorts nothing destructive; fills default labels/names) and
/// returns the instance, or throws ValidationError listing all violations.
Instance validate_instance(Instance inst);

/// Checks that `alloc` is a complete partition of `inst`'s goods and cake.
std::vector<std::string> check_allocation(const Instance& inst, const Allocation& alloc);

}  // namespace mixedfair
