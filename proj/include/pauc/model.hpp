#pragma once

#include <string>
#include <vector>

#include "pauc/dataset.hpp"
#include "pauc/interval.hpp"

namespace pauc {

enum class Algo { auc, pauc_struct, pauc_dc };

std::string algo_name(Algo algo);
Algo algo_from_name(const std::string &name);

/// Linear scoring model without an intercept: score(x) = sum_f w[f] * x[f].
struct Model {
    std::vector<double> weights;
    FprInterval trained_interval;
    Algo algo = Algo::pauc_struct;
    double C = 1.0;

    std::uint32_t dim() const { return static_cast<std::uint32_t>(weights.size()); }
};

/// Throws data_error if x uses indices beyond w.  Linear in x by construction.
double score(const std::vector<double> &w, const FeatureVector &x);

std::vector<double> score_all(const std::vector<double> &w,
                              const std::vector<FeatureVector> &instances);

void save_model(const Model &model, const std::string &path);
Model load_model(const std::string &path);

void save_norm_stats(const NormStats &stats, const std::string &path);
NormStats load_norm_stats(const std::string &path);

} // namespace pauc
