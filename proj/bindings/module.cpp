#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pauc/dataset.hpp"
#include "pauc/errors.hpp"
#include "pauc/metrics.hpp"
#include "pauc/model.hpp"
#include "pauc/mvc.hpp"
#include "pauc/surrogates.hpp"
#include "pauc/train.hpp"

namespace py = pybind11;
using namespace pauc;

namespace {

FeatureVector dense_row(const std::vector<double> &values) {
    FeatureVector row;
    row.entries.reserve(values.size());
    for (std::size_t f = 0; f < values.size(); ++f) {
        row.entries.push_back({static_cast<std::uint32_t>(f), values[f]});
    }
    return row;
}

Dataset make_dataset(const std::vector<std::vector<double>> &positives,
                     const std::vector<std::vector<double>> &negatives) {
    Dataset data;
    std::size_t dim = 0;
    for (const auto *rows : {&positives, &negatives}) {
        for (const auto &row : *rows) {
            dim = std::max(dim, row.size());
        }
    }
    data.dim = dim;
    for (const auto &row : positives) {
        data.positives.push_back(dense_row(row));
    }
    for (const auto &row : negatives) {
        data.negatives.push_back(dense_row(row));
    }
    data.require_both_classes();
    return data;
}

std::vector<double> dense_values(const FeatureVector &row, std::size_t dim) {
    std::vector<double> out(dim, 0.0);
    for (const auto &e : row.entries) {
        out[e.index] = e.value;
    }
    return out;
}

TrainConfig make_config(const std::string &algo, double alpha, double beta, double c,
                        double epsilon, double tau) {
    TrainConfig config;
    config.algo = algo_from_name(algo);
    config.interval = FprInterval(alpha, beta);
    config.C = c;
    config.epsilon = epsilon;
    config.tau = tau;
    return config;
}

py::dict report_dict(const TrainReport &report) {
    py::dict out;
    out["weights"] = report.model.weights;
    out["algo"] = algo_name(report.model.algo);
    out["alpha"] = report.model.trained_interval.alpha;
    out["beta"] = report.model.trained_interval.beta;
    out["C"] = report.model.C;
    out["iterations"] = report.outer_iterations;
    out["surrogate"] = report.surrogate_value;
    out["objective_trace"] = report.objective_trace;
    out["final_h"] = report.final_h;
    out["final_xi"] = report.final_xi;
    out["j_alpha"] = report.j_alpha;
    out["j_beta"] = report.j_beta;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "linear scorers trained to maximize partial AUC in an FPR interval";

    // Later registrations are consulted first, so the base goes first.
    py::register_exception<error>(m, "Error", PyExc_ValueError);
    py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<data_error>(m, "DataError", PyExc_ValueError);
    py::register_exception<convergence_error>(m, "ConvergenceError", PyExc_RuntimeError);

    m.def(
        "train",
        [](const std::vector<std::vector<double>> &positives,
           const std::vector<std::vector<double>> &negatives, const std::string &algo,
           double alpha, double beta, double c, double epsilon, double tau, bool normalize) {
            Dataset data = make_dataset(positives, negatives);
            py::dict extra;
            if (normalize) {
                auto normalized = normalize_zscore(data);
                data = std::move(normalized.first);
                extra["means"] = normalized.second.means;
                extra["stds"] = normalized.second.stds;
            }
            TrainReport report = train(data, make_config(algo, alpha, beta, c, epsilon, tau));
            py::dict out = report_dict(report);
            for (auto item : extra) {
                out[item.first] = item.second;
            }
            return out;
        },
        py::arg("positives"), py::arg("negatives"), py::arg("algo") = "pauc-struct",
        py::arg("alpha") = 0.0, py::arg("beta") = 1.0, py::arg("C") = 1.0,
        py::arg("epsilon") = 1e-4, py::arg("tau") = 1e-3, py::arg("normalize") = false,
        "Train a linear scorer; returns the weights and the training report.");

    m.def(
        "cross_validate",
        [](const std::vector<std::vector<double>> &positives,
           const std::vector<std::vector<double>> &negatives, const std::vector<double> &grid,
           const std::string &algo, double alpha, double beta, double holdout,
           std::uint64_t seed) {
            const Dataset data = make_dataset(positives, negatives);
            TrainConfig config = make_config(algo, alpha, beta, 1.0, 1e-4, 1e-3);
            const std::vector<double> cs = grid.empty() ? default_c_grid(config.algo) : grid;
            CvResult result = cross_validate_C(data, config, cs, holdout, seed);
            py::dict out;
            out["chosen_C"] = result.chosen_C;
            out["table"] = result.table;
            return out;
        },
        py::arg("positives"), py::arg("negatives"), py::arg("grid") = std::vector<double>{},
        py::arg("algo") = "pauc-struct", py::arg("alpha") = 0.0, py::arg("beta") = 1.0,
        py::arg("holdout") = 0.3, py::arg("seed") = 0,
        "Pick C by holdout partial AUC; returns the chosen value and the table.");

    m.def(
        "scores",
        [](const std::vector<double> &weights, const std::vector<std::vector<double>> &rows) {
            std::vector<double> out;
            out.reserve(rows.size());
            for (const auto &row : rows) {
                double s = 0.0;
                for (std::size_t f = 0; f < row.size() && f < weights.size(); ++f) {
                    s += weights[f] * row[f];
                }
                out.push_back(s);
            }
            return out;
        },
        py::arg("weights"), py::arg("rows"), "Dot each dense row with the weight vector.");

    m.def("auc", &empirical_auc, py::arg("pos_scores"), py::arg("neg_scores"),
          "Empirical AUC of fixed scores; ties count as misranked.");

    m.def(
        "pauc",
        [](const std::vector<double> &pos, const std::vector<double> &neg, double alpha,
           double beta) { return empirical_pauc(pos, neg, FprInterval(alpha, beta)); },
        py::arg("pos_scores"), py::arg("neg_scores"), py::arg("alpha"), py::arg("beta"),
        "Empirical partial AUC over the FPR interval [alpha, beta].");

    m.def(
        "pauc_risk",
        [](const std::vector<double> &pos, const std::vector<double> &neg, double alpha,
           double beta) { return pauc_risk(pos, neg, FprInterval(alpha, beta)); },
        py::arg("pos_scores"), py::arg("neg_scores"), py::arg("alpha"), py::arg("beta"),
        "One minus the empirical partial AUC (ties counted against the scorer).");

    m.def("tpr_at_fpr", &tpr_at_fpr, py::arg("pos_scores"), py::arg("neg_scores"),
          py::arg("fpr_budget"), "TPR at the largest threshold meeting the FPR budget.");

    m.def(
        "roc_points",
        [](const std::vector<double> &pos, const std::vector<double> &neg) {
            std::vector<std::pair<double, double>> out;
            for (const RocPoint &p : roc_curve(pos, neg)) {
                out.emplace_back(p.fpr, p.tpr);
            }
            return out;
        },
        py::arg("pos_scores"), py::arg("neg_scores"), "ROC staircase as (fpr, tpr) pairs.");

    m.def(
        "hinge_surrogate",
        [](const std::vector<double> &weights, const std::vector<std::vector<double>> &positives,
           const std::vector<std::vector<double>> &negatives, double alpha, double beta) {
            return hinge_surrogate(weights, make_dataset(positives, negatives),
                                   FprInterval(alpha, beta));
        },
        py::arg("weights"), py::arg("positives"), py::arg("negatives"), py::arg("alpha"),
        py::arg("beta"), "Hinge relaxation of the partial-AUC risk at fixed weights.");

    m.def(
        "structural_surrogate",
        [](const std::vector<double> &weights, const std::vector<std::vector<double>> &positives,
           const std::vector<std::vector<double>> &negatives, double alpha, double beta) {
            const Dataset data = make_dataset(positives, negatives);
            return tight_surrogate(weights, data,
                                   positions_for(FprInterval(alpha, beta), data.n()));
        },
        py::arg("weights"), py::arg("positives"), py::arg("negatives"), py::arg("alpha"),
        py::arg("beta"), "Value of the structural surrogate (most violated constraint).");

    m.def(
        "load_svmlight",
        [](const std::string &path) {
            const Dataset data = load_svmlight(path);
            std::vector<std::vector<double>> pos, neg;
            for (const auto &row : data.positives) {
                pos.push_back(dense_values(row, data.dim));
            }
            for (const auto &row : data.negatives) {
                neg.push_back(dense_values(row, data.dim));
            }
            return py::make_tuple(pos, neg);
        },
        py::arg("path"), "Read an svmlight file; returns dense (positives, negatives).");

    m.def(
        "normalize",
        [](const std::vector<std::vector<double>> &positives,
           const std::vector<std::vector<double>> &negatives) {
            const Dataset data = make_dataset(positives, negatives);
            auto normalized = normalize_zscore(data);
            std::vector<std::vector<double>> pos, neg;
            for (const auto &row : normalized.first.positives) {
                pos.push_back(dense_values(row, normalized.first.dim));
            }
            for (const auto &row : normalized.first.negatives) {
                neg.push_back(dense_values(row, normalized.first.dim));
            }
            return py::make_tuple(pos, neg, normalized.second.means, normalized.second.stds);
        },
        py::arg("positives"), py::arg("negatives"),
        "Z-score both classes jointly; returns (positives, negatives, means, stds).");
}
