#include "pauc/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pauc/json_io.hpp"

namespace pauc {

std::string algo_name(Algo algo) {
    switch (algo) {
    case Algo::auc: return "auc";
    case Algo::pauc_struct: return "pauc-struct";
    case Algo::pauc_dc: return "pauc-dc";
    }
    throw config_error("unknown algorithm");
}

Algo algo_from_name(const std::string &name) {
    if (name == "auc") {
        return Algo::auc;
    }
    if (name == "pauc-struct") {
        return Algo::pauc_struct;
    }
    if (name == "pauc-dc") {
        return Algo::pauc_dc;
    }
    throw config_error("unknown algorithm '" + name + "'");
}

double score(const std::vector<double> &w, const FeatureVector &x) {
    if (x.dim() > w.size()) {
        throw data_error("instance dimension " + std::to_string(x.dim()) +
                         " exceeds model dimension " + std::to_string(w.size()));
    }
    double s = 0.0;
    for (const auto &e : x.entries) {
        s += w[e.index] * e.value;
    }
    return s;
}

std::vector<double> score_all(const std::vector<double> &w,
                              const std::vector<FeatureVector> &instances) {
    std::vector<double> out;
    out.reserve(instances.size());
    for (const auto &x : instances) {
        out.push_back(score(w, x));
    }
    return out;
}

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw data_error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw data_error("cannot write '" + path + "'");
    }
    out << text;
}

} // namespace

void save_model(const Model &model, const std::string &path) {
    jsonio::Writer w;
    w.begin_object()
        .field("C", model.C)
        .field("algo", algo_name(model.algo))
        .field("alpha", model.trained_interval.alpha)
        .field("beta", model.trained_interval.beta)
        .field("dim", static_cast<int>(model.dim()))
        .field("format", 1)
        .field("weights", model.weights)
        .end_object();
    write_file(path, w.str() + "\n");
}

Model load_model(const std::string &path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception &e) {
        throw data_error("bad model file '" + path + "': " + e.what());
    }
    try {
        if (doc.at("format").get<int>() != 1) {
            throw data_error("unsupported model format");
        }
        Model model;
        model.weights = doc.at("weights").get<std::vector<double>>();
        model.trained_interval =
            FprInterval(doc.at("alpha").get<double>(), doc.at("beta").get<double>());
        model.algo = algo_from_name(doc.at("algo").get<std::string>());
        model.C = doc.at("C").get<double>();
        if (doc.at("dim").get<std::size_t>() != model.weights.size()) {
            throw data_error("model dim does not match weight count");
        }
        for (double v : model.weights) {
            if (!std::isfinite(v)) {
                throw data_error("non-finite model weight");
            }
        }
        return model;
    } catch (const nlohmann::json::exception &e) {
        throw data_error("bad model file '" + path + "': " + e.what());
    }
}

void save_norm_stats(const NormStats &stats, const std::string &path) {
    jsonio::Writer w;
    w.begin_object().field("means", stats.means).field("stds", stats.stds).end_object();
    write_file(path, w.str() + "\n");
}

NormStats load_norm_stats(const std::string &path) {
    try {
        nlohmann::json doc = nlohmann::json::parse(read_file(path));
        NormStats stats;
        stats.means = doc.at("means").get<std::vector<double>>();
        stats.stds = doc.at("stds").get<std::vector<double>>();
        if (stats.means.size() != stats.stds.size()) {
            throw data_error("means/stds length mismatch");
        }
        return stats;
    } catch (const nlohmann::json::exception &e) {
        throw data_error("bad normalization file '" + path + "': " + e.what());
    }
}

} // namespace pauc
