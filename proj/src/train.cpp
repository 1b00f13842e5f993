#include "pauc/train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "pauc/log.hpp"
#include "pauc/metrics.hpp"
#include "pauc/mvc.hpp"
#include "pauc/ordering.hpp"
#include "pauc/qp.hpp"
#include "pauc/surrogates.hpp"

namespace pauc {

namespace {

void validate(const TrainConfig &config) {
    if (!(config.C > 0.0)) {
        throw config_error("C must be positive");
    }
    if (!(config.epsilon > 0.0)) {
        throw config_error("epsilon must be positive");
    }
    if (!(config.tau > 0.0)) {
        throw config_error("tau must be positive");
    }
    if (config.max_outer_iters < 1 || config.max_cccp_iters < 1) {
        throw config_error("iteration caps must be at least 1");
    }
}

PositionRange effective_positions(const Dataset &data, const TrainConfig &config) {
    if (config.algo == Algo::auc) {
        return PositionRange{0, data.n()};
    }
    return positions_for(config.interval, data.n());
}

FprInterval effective_interval(const TrainConfig &config) {
    return config.algo == Algo::auc ? FprInterval(0.0, 1.0) : config.interval;
}

MvcResult most_violated(const std::vector<double> &w, const Dataset &data,
                        const PositionRange &range) {
    if (range.j_lo == 0) {
        return mvc_pauc_0beta(w, data, range.j_hi);
    }
    return mvc_pauc_general(w, data, range);
}

struct CpState {
    std::vector<Constraint> constraints;
    std::vector<double> duals;
};

struct CpOutcome {
    std::vector<double> w;
    double xi = 0.0;
    double final_h = 0.0;
    int iterations = 0;
    std::vector<double> trace; // restricted objective after each solve
    bool converged = false;
};

// 1-slack cutting-plane loop for min 0.5*||w||^2 + C_eff*max_H + w.v over
// the given position range; state carries constraints and duals across calls
// so a caller re-solving with a different linear term keeps its cuts.
CpOutcome cutting_plane_loop(const Dataset &data, const PositionRange &range, LossKind kind,
                             double c_eff, const std::vector<double> &v, double epsilon,
                             double qp_tol, int max_iters, CpState &state) {
    CpOutcome out;
    QpSolution sol = solve_qp(state.constraints, c_eff, v, qp_tol, state.duals);
    state.duals = sol.duals;

    for (int iter = 0; iter < max_iters; ++iter) {
        MvcResult mvc = most_violated(sol.w, data, range);
        if (mvc.h <= sol.xi + epsilon) {
            out.converged = true;
            out.final_h = mvc.h;
            break;
        }
        state.constraints.push_back(build_constraint(data.positives, data.negatives,
                                                     mvc.z_indices, mvc.counts, kind, range,
                                                     data.dim));
        state.duals.push_back(0.0);
        sol = solve_qp(state.constraints, c_eff, v, qp_tol, state.duals);
        state.duals = sol.duals;
        out.trace.push_back(sol.primal_objective);
        ++out.iterations;
        out.final_h = mvc.h; // refreshed below on convergence
        if (log::level() >= log::Level::debug) {
            std::ostringstream msg;
            msg << "cut " << state.constraints.size() << ": H=" << mvc.h << " xi=" << sol.xi
                << " obj=" << sol.primal_objective;
            log::debug(msg.str());
        }
    }
    if (!out.converged) {
        MvcResult mvc = most_violated(sol.w, data, range);
        out.final_h = mvc.h;
        out.converged = mvc.h <= sol.xi + epsilon;
    }
    out.w = sol.w;
    out.xi = sol.xi;
    return out;
}

Model make_model(const std::vector<double> &w, const TrainConfig &config) {
    Model model;
    model.weights = w;
    model.trained_interval = effective_interval(config);
    model.algo = config.algo;
    model.C = config.C;
    return model;
}

} // namespace

TrainReport train_cutting_plane(const Dataset &data, const TrainConfig &config) {
    validate(config);
    data.require_both_classes();
    if (config.algo == Algo::pauc_dc) {
        throw config_error("cutting-plane trainer does not handle the DC objective");
    }
    const PositionRange range = effective_positions(data, config);
    const LossKind kind = range.j_lo == 0 ? LossKind::auc : LossKind::pauc_tr;

    CpState state;
    const std::vector<double> v(data.dim, 0.0);
    CpOutcome out = cutting_plane_loop(data, range, kind, config.C, v, config.epsilon,
                                       config.qp_tol, config.max_outer_iters, state);

    TrainReport report;
    report.model = make_model(out.w, config);
    report.outer_iterations = out.iterations;
    report.surrogate_value = out.final_h;
    report.objective_trace = out.trace;
    report.final_h = out.final_h;
    report.final_xi = out.xi;
    report.j_alpha = range.j_lo;
    report.j_beta = range.j_hi;
    if (!out.converged) {
        throw convergence_error("cutting-plane iteration cap exceeded", report);
    }
    {
        std::ostringstream msg;
        msg << "converged after " << report.outer_iterations << " cuts, H=" << report.final_h
            << " <= xi+eps=" << report.final_xi + config.epsilon;
        log::info(msg.str());
    }
    return report;
}

TrainReport train_cccp(const Dataset &data, const TrainConfig &config) {
    validate(config);
    data.require_both_classes();
    if (config.algo != Algo::pauc_dc) {
        throw config_error("DC trainer requires the pauc-dc algorithm");
    }
    const PositionRange range = positions_for(config.interval, data.n());
    if (range.j_lo < 1) {
        throw config_error("DC objective needs j_alpha >= 1 (alpha too small for n)");
    }
    const int head = range.j_lo;
    const double width = range.width();
    const double c_convex = config.C * static_cast<double>(range.j_hi) / width;
    const PositionRange convex_range{0, range.j_hi};

    auto dc_objective = [&](const std::vector<double> &w) {
        double norm2 = 0.0;
        for (double x : w) {
            norm2 += x * x;
        }
        return 0.5 * norm2 + config.C * hinge_surrogate(w, data, range);
    };

    std::vector<double> w(data.dim, 0.0);
    TrainReport report;
    report.j_alpha = range.j_lo;
    report.j_beta = range.j_hi;
    double objective = dc_objective(w);
    report.objective_trace.push_back(objective);

    CpState state; // cuts of the convex part stay valid across linearizations
    bool converged = false;
    for (int iter = 0; iter < config.max_cccp_iters && !converged; ++iter) {
        ++report.outer_iterations;

        // Linearize the concave part at w: the maximizing ordering over the
        // top-j_alpha negatives supplies the supergradient direction.
        MvcResult sub = mvc_pauc_0beta(w, data, head);
        std::vector<double> phi = joint_feature_map(data.positives, data.negatives,
                                                    sub.z_indices, sub.counts, data.dim);
        std::vector<double> v(data.dim);
        for (std::size_t f = 0; f < v.size(); ++f) {
            v[f] = -(config.C * head / width) * phi[f];
        }

        CpOutcome inner = cutting_plane_loop(data, convex_range, LossKind::auc, c_convex, v,
                                             config.epsilon, config.qp_tol,
                                             config.max_outer_iters, state);
        report.final_h = inner.final_h;
        report.final_xi = inner.xi;
        if (!inner.converged) {
            report.model = make_model(w, config);
            report.surrogate_value = hinge_surrogate(w, data, range);
            throw convergence_error("inner cutting-plane cap exceeded", report);
        }

        const double candidate = dc_objective(inner.w);
        if (candidate > objective) {
            // The linearization is not an exact supergradient, so a step may
            // fail to descend; the previous iterate is provably no worse.
            converged = true;
            break;
        }
        w = inner.w;
        report.objective_trace.push_back(candidate);
        converged = objective - candidate <= config.tau;
        objective = candidate;
        if (log::level() >= log::Level::info) {
            std::ostringstream msg;
            msg << "dc step " << report.outer_iterations << ": objective=" << objective;
            log::info(msg.str());
        }
    }

    report.model = make_model(w, config);
    report.surrogate_value = hinge_surrogate(w, data, range);
    if (!converged) {
        throw convergence_error("DC iteration cap exceeded", report);
    }
    return report;
}

TrainReport train(const Dataset &data, const TrainConfig &config) {
    if (config.algo == Algo::pauc_dc) {
        return train_cccp(data, config);
    }
    return train_cutting_plane(data, config);
}

CvResult cross_validate_C(const Dataset &data, const TrainConfig &config,
                          const std::vector<double> &grid, double holdout_fraction,
                          std::uint64_t seed) {
    validate(config);
    data.require_both_classes();
    if (grid.empty()) {
        throw config_error("empty C grid");
    }
    if (!(holdout_fraction > 0.0 && holdout_fraction < 1.0)) {
        throw config_error("holdout fraction must lie in (0, 1)");
    }
    if (data.m() < 2 || data.n() < 2) {
        throw empty_class_error("cannot split: a fold would lose a class");
    }

    std::mt19937_64 rng(seed);
    auto split = [&rng, holdout_fraction](const std::vector<FeatureVector> &rows,
                                          std::vector<FeatureVector> &train_rows,
                                          std::vector<FeatureVector> &val_rows) {
        std::vector<int> order(rows.size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const int count = static_cast<int>(rows.size());
        int val = std::clamp(static_cast<int>(std::lround(holdout_fraction * count)), 1,
                             count - 1);
        for (int r = 0; r < count; ++r) {
            (r < val ? val_rows : train_rows).push_back(rows[order[r]]);
        }
    };

    Dataset train_part, val_part;
    train_part.dim = val_part.dim = data.dim;
    split(data.positives, train_part.positives, val_part.positives);
    split(data.negatives, train_part.negatives, val_part.negatives);

    const FprInterval iv = effective_interval(config);
    CvResult result;
    double best = -1.0;
    for (double c : grid) {
        TrainConfig cfg = config;
        cfg.C = c;
        TrainReport report = train(train_part, cfg);
        const double val_pauc =
            empirical_pauc(score_all(report.model.weights, val_part.positives),
                           score_all(report.model.weights, val_part.negatives), iv);
        result.table.emplace_back(c, val_pauc);
        if (val_pauc > best) {
            best = val_pauc;
            result.chosen_C = c;
        }
        {
            std::ostringstream msg;
            msg << "cv C=" << c << " holdout pauc=" << val_pauc;
            log::info(msg.str());
        }
    }
    return result;
}

std::vector<double> default_c_grid(Algo algo) {
    std::vector<double> grid;
    const int lo = algo == Algo::pauc_dc ? -2 : -5;
    for (int e = lo; e <= 4; ++e) {
        grid.push_back(std::pow(10.0, e));
    }
    return grid;
}

} // namespace pauc
