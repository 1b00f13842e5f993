#pragma once

#include <vector>

#include "pauc/ordering.hpp"

namespace pauc {

/// Solution of the 1-slack restricted problem
///   min_w  0.5*||w||^2 + C*xi + w . v
///   s.t.   xi >= loss_t - w . dphi_t  for every constraint t,  xi >= 0.
/// Stationarity gives w = sum_t dual[t]*dphi_t - v with dual >= 0 and
/// sum(dual) <= C.
struct QpSolution {
    std::vector<double> w;
    double xi = 0.0;
    std::vector<double> duals;
    double primal_objective = 0.0;
    double duality_gap = 0.0;
};

/// Dual coordinate ascent over {dual >= 0, sum(dual) <= C} with an SMO-style
/// pair pass once the budget saturates; warm-startable via initial_duals
/// (padded with zeros for newly added constraints).  Terminates when the
/// primal-dual gap falls below tol or the sweep cap is hit.
QpSolution solve_qp(const std::vector<Constraint> &constraints, double C,
                    const std::vector<double> &v, double tol,
                    const std::vector<double> &initial_duals = {});

} // namespace pauc
