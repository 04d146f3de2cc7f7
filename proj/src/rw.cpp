#include "mixedfair/rw.hpp"

#include "mixedfair/errors.hpp"

namespace mixedfair {

namespace {

void check_agent(const Instance& inst, int agent) {
    if (agent < 0 || agent >= inst.n())
        throw DomainError("agent index " + std::to_string(agent) + " out of range");
}

}  // namespace

Rational eval_interval(const Instance& inst, int agent, const Rational& left, const Rational& right,
                       QueryCounter* counter) {
    check_agent(inst, agent);
    if (left.sign() < 0 || right > Rational(1) || left > right)
        throw DomainError("eval interval [" + left.str() + ", " + right.str() + "] outside [0,1]");
    if (counter) ++counter->evals;
    if (!inst.has_cake() || left == right) return Rational(0);
    Rational v;
    for (const auto& seg : inst.densities[agent].segments) {
        Rational lo = max(left, seg.left);
        Rational hi = min(right, seg.right);
        if (lo < hi) v += seg.height * (hi - lo);
    }
    return v;
}

Rational eval(const Instance& inst, int agent, const CakePiece& piece, QueryCounter* counter) {
    check_agent(inst, agent);
    // one RW eval per interval of the piece
    if (counter) counter->evals += static_cast<long>(piece.intervals.size());
    Rational v;
    for (const auto& iv : piece.intervals)
        v += eval_interval(inst, agent, iv.first, iv.second, nullptr);
    return v;
}

Rational cut(const Instance& inst, int agent, const Rational& x, const Rational& beta, QueryCounter* counter) {
    check_agent(inst, agent);
    if (x.sign() < 0 || x > Rational(1)) throw DomainError("cut start " + x.str() + " outside [0,1]");
    if (beta.sign() < 0) throw DomainError("cut target must be nonnegative");
    if (counter) ++counter->cuts;
    if (beta.is_zero()) return x;  // leftmost point with zero value is x itself
    if (!inst.has_cake())
        throw InsufficientValueError("cut: instance has no cake", beta);

    Rational acc;  // value accumulated on [x, current point]
    for (const auto& seg : inst.densities[agent].segments) {
        Rational lo = max(x, seg.left);
        if (lo >= seg.right) continue;
        Rational segment_value = seg.height * (seg.right - lo);
        if (acc + segment_value >= beta) {
            // lands inside this segment; height must be positive here since
            // beta > acc and the segment closes the gap
            return lo + (beta - acc) / seg.height;
        }
        acc += segment_value;
    }
    throw InsufficientValueError("cut: not enough value on [" + x.str() + ", 1]", beta - acc);
}

Rational bundle_value(const Instance& inst, int agent, const std::vector<int>& goods, const CakePiece& cake,
                      QueryCounter* counter) {
    check_agent(inst, agent);
    Rational v;
    for (int g : goods) {
        if (g < 0 || g >= inst.m()) throw DomainError("good index " + std::to_string(g) + " out of range");
        v += inst.utilities[agent][g];
    }
    return v + eval(inst, agent, cake, counter);
}

Rational total_value(const Instance& inst, int agent) {
    Rational v = inst.total_goods_value(agent);
    if (inst.has_cake()) v += inst.densities[agent].total();
    return v;
}

}  // namespace mixedfair
