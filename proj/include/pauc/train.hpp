#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pauc/dataset.hpp"
#include "pauc/interval.hpp"
#include "pauc/model.hpp"

namespace pauc {

struct TrainConfig {
    Algo algo = Algo::pauc_struct;
    FprInterval interval;
    double C = 1.0;
    double epsilon = 1e-4;    // cutting-plane tolerance
    double tau = 1e-3;        // DC objective decrease threshold
    int max_outer_iters = 1000;
    int max_cccp_iters = 50;
    double qp_tol = 1e-8;
};

struct TrainReport {
    Model model;
    int outer_iterations = 0;
    double surrogate_value = 0.0;          // structural for cutting-plane, hinge for DC
    std::vector<double> objective_trace;   // restricted objective per solve / DC objective per step
    double final_h = 0.0;                  // fresh most-violated value at the final w
    double final_xi = 0.0;                 // slack certified against it (cutting-plane runs)
    int j_alpha = 0;
    int j_beta = 0;
};

/// Thrown when an iteration cap is exceeded; carries the partial report.
class convergence_error : public error {
  public:
    convergence_error(const std::string &what, TrainReport partial)
        : error(what), partial_(std::move(partial)) {}

    const TrainReport &partial() const noexcept { return partial_; }

  private:
    TrainReport partial_;
};

/// 1-slack cutting-plane training of the structural surrogate (full AUC when
/// algo == auc, [0,beta] or [alpha,beta] per the interval otherwise).  Exits
/// with a certificate: a fresh most-violated search at the returned w
/// satisfies H <= xi + epsilon.
TrainReport train_cutting_plane(const Dataset &data, const TrainConfig &config);

/// DC (concave-convex) training of the non-convex hinge surrogate for
/// j_alpha >= 1: alternates a supergradient of the concave part with a
/// cutting-plane solve of the convexified subproblem; the regularized DC
/// objective trace is non-increasing and the loop stops once its decrease
/// falls below tau (a non-improving step is rejected, keeping the previous
/// iterate).
TrainReport train_cccp(const Dataset &data, const TrainConfig &config);

/// Dispatches on config.algo.
TrainReport train(const Dataset &data, const TrainConfig &config);

struct CvResult {
    double chosen_C = 0.0;
    std::vector<std::pair<double, double>> table; // (C, holdout pAUC), grid order
};

/// Splits each class with the seeded RNG, trains once per grid value on the
/// retained part and scores empirical pAUC over config.interval on the
/// holdout.  Ties keep the earliest grid entry.  Throws empty_class_error if
/// either side of the split would lose a class.
CvResult cross_validate_C(const Dataset &data, const TrainConfig &config,
                          const std::vector<double> &grid, double holdout_fraction,
                          std::uint64_t seed);

/// Decade grids used by the command-line tool.
std::vector<double> default_c_grid(Algo algo);

} // namespace pauc
