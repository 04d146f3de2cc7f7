#pragma once

#include "mixedfair/model.hpp"

namespace mixedfair {

/// Tally of Robertson-Webb queries issued against one counting scope.
struct QueryCounter {
    long evals = 0;
    long cuts = 0;
    long total() const { return evals + cuts; }
    QueryCounter& operator+=(const QueryCounter& o) {
        evals += o.evals;
        cuts += o.cuts;
        return *this;
    }
};

/// Eval query: agent's exact value for a piece of cake. Additive over the
/// piece's intervals. Throws DomainError if the piece leaves [0,1] or the
/// agent index is bad. An instance without a cake values every piece at 0.
Rational eval(const Instance& inst, int agent, const CakePiece& piece, QueryCounter* counter = nullptr);

Rational eval_interval(const Instance& inst, int agent, const Rational& left, const Rational& right,
                       QueryCounter* counter = nullptr);

/// Cut query: the leftmost y >= x with eval(agent, [x,y]) == beta. Never
/// extends into a trailing zero-density stretch. Throws
/// InsufficientValueError (carrying the shortfall) when eval(agent, [x,1])
/// < beta, DomainError on x outside [0,1] or beta < 0.
Rational cut(const Instance& inst, int agent, const Rational& x, const Rational& beta,
             QueryCounter* counter = nullptr);

/// Additive value of a mixed bundle: sum of good utilities plus cake eval.
Rational bundle_value(const Instance& inst, int agent, const std::vector<int>& goods, const CakePiece& cake,
                      QueryCounter* counter = nullptr);

inline Rational bundle_value(const Instance& inst, int agent, const Bundle& b, QueryCounter* counter = nullptr) {
    return bundle_value(inst, agent, b.goods, b.cake, counter);
}

/// Agent's value for everything: u_i(M) + u_i(C).
Rational total_value(const Instance& inst, int agent);

}  // namespace mixedfair
