#include "pauc/qp.hpp"

#include <algorithm>
#include <cmath>

#include "pauc/errors.hpp"

namespace pauc {

namespace {

double dot(const std::vector<double> &a, const std::vector<double> &b) {
    double s = 0.0;
    for (std::size_t f = 0; f < a.size(); ++f) {
        s += a[f] * b[f];
    }
    return s;
}

} // namespace

QpSolution solve_qp(const std::vector<Constraint> &constraints, double C,
                    const std::vector<double> &v, double tol,
                    const std::vector<double> &initial_duals) {
    if (!(C > 0.0)) {
        throw config_error("QP needs C > 0");
    }
    const std::size_t T = constraints.size();
    const std::size_t dim = T > 0 ? constraints[0].dphi.size() : v.size();
    for (const Constraint &c : constraints) {
        if (c.dphi.size() != dim) {
            throw data_error("constraint dimensions disagree");
        }
        if (!std::isfinite(c.loss) ||
            std::any_of(c.dphi.begin(), c.dphi.end(), [](double x) { return !std::isfinite(x); })) {
            throw data_error("non-finite constraint");
        }
    }
    std::vector<double> vv(v);
    if (vv.empty()) {
        vv.assign(dim, 0.0);
    } else if (vv.size() != dim) {
        throw data_error("linear term dimension disagrees with the constraints");
    }

    QpSolution sol;
    sol.duals.assign(T, 0.0);
    for (std::size_t t = 0; t < std::min(T, initial_duals.size()); ++t) {
        sol.duals[t] = std::max(0.0, initial_duals[t]);
    }
    double total = 0.0;
    for (double d : sol.duals) {
        total += d;
    }
    if (total > C) { // stale warm start; shrink towards feasibility
        for (double &d : sol.duals) {
            d *= C / total;
        }
        total = C;
    }

    // Stationarity: w(duals) = sum_t duals[t]*dphi_t - v, maintained
    // incrementally and refreshed wholesale to shed rounding drift.
    auto refresh_w = [&]() {
        sol.w.assign(dim, 0.0);
        for (std::size_t t = 0; t < T; ++t) {
            if (sol.duals[t] != 0.0) {
                for (std::size_t f = 0; f < dim; ++f) {
                    sol.w[f] += sol.duals[t] * constraints[t].dphi[f];
                }
            }
        }
        for (std::size_t f = 0; f < dim; ++f) {
            sol.w[f] -= vv[f];
        }
    };
    refresh_w();

    std::vector<double> qnorm(T);
    for (std::size_t t = 0; t < T; ++t) {
        qnorm[t] = dot(constraints[t].dphi, constraints[t].dphi);
    }
    std::vector<double> gram; // row-major T x T, filled lazily for pair steps
    auto gram_at = [&](std::size_t t, std::size_t s) -> double {
        if (gram.empty()) {
            gram.assign(T * T, 0.0);
            for (std::size_t a = 0; a < T; ++a) {
                for (std::size_t b = 0; b <= a; ++b) {
                    gram[a * T + b] = gram[b * T + a] = dot(constraints[a].dphi, constraints[b].dphi);
                }
            }
        }
        return gram[t * T + s];
    };

    auto grad = [&](std::size_t t) { return constraints[t].loss - dot(sol.w, constraints[t].dphi); };

    auto apply_delta = [&](std::size_t t, double delta) {
        if (delta == 0.0) {
            return;
        }
        sol.duals[t] += delta;
        total += delta;
        for (std::size_t f = 0; f < dim; ++f) {
            sol.w[f] += delta * constraints[t].dphi[f];
        }
    };

    auto objectives = [&]() {
        double xi = 0.0;
        for (std::size_t t = 0; t < T; ++t) {
            xi = std::max(xi, grad(t));
        }
        const double wv = dot(sol.w, vv);
        const double wnorm2 = dot(sol.w, sol.w);
        double dual_loss = 0.0;
        for (std::size_t t = 0; t < T; ++t) {
            dual_loss += sol.duals[t] * constraints[t].loss;
        }
        sol.xi = xi;
        sol.primal_objective = 0.5 * wnorm2 + C * xi + wv;
        sol.duality_gap = sol.primal_objective - (-0.5 * wnorm2 + dual_loss);
    };

    const long max_sweeps = std::max<long>(1000, 200 * static_cast<long>(T));
    for (long sweep = 0; sweep < max_sweeps && T > 0; ++sweep) {
        // Single-coordinate pass against the remaining budget.
        for (std::size_t t = 0; t < T; ++t) {
            const double g = grad(t);
            const double budget = C - total;
            double delta;
            if (qnorm[t] > 0.0) {
                delta = std::clamp(g / qnorm[t], -sol.duals[t], budget);
            } else {
                delta = g > 0.0 ? budget : (g < 0.0 ? -sol.duals[t] : 0.0);
            }
            apply_delta(t, delta);
        }

        // Pair pass redistributes mass once the budget binds (and costs
        // little at the constraint-set sizes the trainers produce).
        if (T > 1) {
            for (std::size_t t = 1; t < T; ++t) {
                for (std::size_t s = 0; s < t; ++s) {
                    const double num = grad(t) - grad(s);
                    const double den = qnorm[t] + qnorm[s] - 2.0 * gram_at(t, s);
                    double delta; // moves along e_t - e_s
                    if (den > 0.0) {
                        delta = std::clamp(num / den, -sol.duals[t], sol.duals[s]);
                    } else {
                        delta = num > 0.0 ? sol.duals[s] : (num < 0.0 ? -sol.duals[t] : 0.0);
                    }
                    if (delta != 0.0) {
                        sol.duals[t] += delta;
                        sol.duals[s] -= delta;
                        for (std::size_t f = 0; f < dim; ++f) {
                            sol.w[f] += delta * (constraints[t].dphi[f] - constraints[s].dphi[f]);
                        }
                    }
                }
            }
        }

        if (sweep % 32 == 31) {
            refresh_w();
        }
        objectives();
        if (sol.duality_gap <= tol) {
            break;
        }
    }

    refresh_w();
    objectives();
    return sol;
}

} // namespace pauc
