// Command-line front end: train, eval, cv, roc.
//
// Exit codes: 0 success, 2 bad flags or configuration, 3 data problems,
// 4 training hit an iteration cap.  All JSON output has sorted keys and
// 17-significant-digit floats, so equal inputs produce equal bytes.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pauc/dataset.hpp"
#include "pauc/errors.hpp"
#include "pauc/json_io.hpp"
#include "pauc/log.hpp"
#include "pauc/metrics.hpp"
#include "pauc/model.hpp"
#include "pauc/train.hpp"

namespace {

using namespace pauc;

void write_text_file(const std::string &path, const std::string &text) {
    if (path.empty()) {
        throw config_error("empty output path");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw data_error("cannot open " + path + " for writing");
    }
    out << text;
    if (!out) {
        throw data_error("failed writing " + path);
    }
}

Dataset load_data(const std::string &path, const std::string &norm_path) {
    Dataset data = load_svmlight(path);
    if (!norm_path.empty()) {
        data = apply_normalization(load_norm_stats(norm_path), data);
    }
    return data;
}

std::vector<double> parse_grid(const std::string &text) {
    std::vector<double> grid;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) {
            continue;
        }
        try {
            std::size_t used = 0;
            const double v = std::stod(token, &used);
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
            grid.push_back(v);
        } catch (const std::exception &) {
            throw config_error("bad grid entry '" + token + "'");
        }
    }
    if (grid.empty()) {
        throw config_error("empty C grid");
    }
    return grid;
}

struct TrainArgs {
    std::string data_path;
    std::string algo_name = "pauc-struct";
    double alpha = 0.0;
    double beta = 1.0;
    double C = 1.0;
    double epsilon = 1e-4;
    double tau = 1e-3;
    int max_iters = 1000;
    int max_dc_iters = 50;
    bool normalize = false;
    std::uint64_t seed = 0;
};

void add_train_flags(CLI::App *cmd, TrainArgs &args) {
    cmd->add_option("--data", args.data_path, "training data in svmlight format")->required();
    cmd->add_option("--algo", args.algo_name, "auc, pauc-struct, or pauc-dc");
    cmd->add_option("--alpha", args.alpha, "lower end of the FPR interval");
    cmd->add_option("--beta", args.beta, "upper end of the FPR interval");
    cmd->add_option("--epsilon", args.epsilon, "cutting-plane tolerance");
    cmd->add_option("--tau", args.tau, "DC objective decrease threshold");
    cmd->add_option("--max-iters", args.max_iters, "cutting-plane iteration cap");
    cmd->add_option("--max-dc-iters", args.max_dc_iters, "DC outer iteration cap");
    cmd->add_flag("--normalize", args.normalize, "z-score features on the training data");
    cmd->add_option("--seed", args.seed, "seed for randomized steps");
}

TrainConfig config_from(const TrainArgs &args) {
    TrainConfig config;
    config.algo = algo_from_name(args.algo_name);
    config.interval = FprInterval(args.alpha, args.beta);
    config.C = args.C;
    config.epsilon = args.epsilon;
    config.tau = args.tau;
    config.max_outer_iters = args.max_iters;
    config.max_cccp_iters = args.max_dc_iters;
    return config;
}

std::string report_json(const TrainConfig &config, const TrainReport &report, bool normalized,
                        double train_pauc) {
    jsonio::Writer w;
    w.begin_object();
    w.field("C", config.C);
    w.field("algo", algo_name(config.algo));
    w.field("alpha", report.model.trained_interval.alpha);
    w.field("beta", report.model.trained_interval.beta);
    w.field("epsilon", config.epsilon);
    w.field("final_h", report.final_h);
    w.field("final_xi", report.final_xi);
    w.field("format", 1);
    w.field("iterations", report.outer_iterations);
    w.field("j_alpha", report.j_alpha);
    w.field("j_beta", report.j_beta);
    w.field("normalized", normalized ? 1 : 0);
    w.field("objective_trace", report.objective_trace);
    w.field("surrogate", report.surrogate_value);
    w.field("tau", config.tau);
    w.field("train_pauc", train_pauc);
    w.end_object();
    return w.str() + "\n";
}

int cmd_train(const TrainArgs &args, const std::string &model_out, std::string report_out,
              std::string norm_out) {
    const TrainConfig config = config_from(args);
    Dataset data = load_svmlight(args.data_path);
    NormStats stats;
    if (args.normalize) {
        auto normalized = normalize_zscore(data);
        data = std::move(normalized.first);
        stats = std::move(normalized.second);
    }

    TrainReport report = train(data, config);

    const FprInterval iv = report.model.trained_interval;
    const double train_pauc = empirical_pauc(score_all(report.model.weights, data.positives),
                                             score_all(report.model.weights, data.negatives), iv);

    save_model(report.model, model_out);
    if (report_out.empty()) {
        report_out = model_out + ".report.json";
    }
    const std::string report_text = report_json(config, report, args.normalize, train_pauc);
    write_text_file(report_out, report_text);
    if (args.normalize) {
        if (norm_out.empty()) {
            norm_out = model_out + ".norm.json";
        }
        save_norm_stats(stats, norm_out);
    }
    std::cout << report_text;
    return 0;
}

int cmd_eval(const std::string &model_path, const std::string &data_path,
             const std::string &norm_path, std::optional<double> alpha,
             std::optional<double> beta, std::optional<double> tpr_budget, double fpr_scale) {
    const Model model = load_model(model_path);
    const Dataset data = load_data(data_path, norm_path);
    double a = alpha.value_or(model.trained_interval.alpha);
    double b = beta.value_or(model.trained_interval.beta);
    if (fpr_scale != 1.0) {
        a *= fpr_scale;
        b *= fpr_scale;
    }
    const FprInterval iv(a, b);

    const std::vector<double> pos = score_all(model.weights, data.positives);
    const std::vector<double> neg = score_all(model.weights, data.negatives);

    jsonio::Writer w;
    w.begin_object();
    w.field("auc", empirical_auc(pos, neg));
    w.field("pauc", empirical_pauc(pos, neg, iv));
    if (tpr_budget) {
        w.field("tpr_at_fpr", tpr_at_fpr(pos, neg, *tpr_budget));
    }
    w.end_object();
    std::cout << w.str() << "\n";
    return 0;
}

int cmd_cv(const TrainArgs &args, const std::string &grid_text, double holdout) {
    const TrainConfig config = config_from(args);
    Dataset data = load_svmlight(args.data_path);
    if (args.normalize) {
        data = normalize_zscore(data).first;
    }
    const std::vector<double> grid =
        grid_text.empty() ? default_c_grid(config.algo) : parse_grid(grid_text);

    const CvResult result = cross_validate_C(data, config, grid, holdout, args.seed);

    jsonio::Writer w;
    w.begin_object();
    w.field("chosen_C", result.chosen_C);
    w.field("format", 1);
    w.begin_array("table");
    for (const auto &[c, pauc] : result.table) {
        w.begin_object();
        w.field("C", c);
        w.field("pauc", pauc);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    std::cout << w.str() << "\n";
    return 0;
}

int cmd_roc(const std::string &model_path, const std::string &data_path,
            const std::string &norm_path, const std::string &out_path) {
    if (out_path.empty()) {
        throw config_error("empty output path");
    }
    const Model model = load_model(model_path);
    const Dataset data = load_data(data_path, norm_path);
    const auto points = roc_curve(score_all(model.weights, data.positives),
                                  score_all(model.weights, data.negatives));
    write_text_file(out_path, roc_to_csv(points));
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"partial-AUC trainer and evaluator for linear scorers"};
    app.require_subcommand(1);

    TrainArgs train_args;
    std::string model_out, report_out, norm_out;
    CLI::App *train_cmd = app.add_subcommand("train", "fit a linear scorer");
    add_train_flags(train_cmd, train_args);
    train_cmd->add_option("--C", train_args.C, "regularization trade-off");
    train_cmd->add_option("--model-out", model_out, "model JSON destination")->required();
    train_cmd->add_option("--report-out", report_out,
                          "training report destination (default <model-out>.report.json)");
    train_cmd->add_option("--norm-out", norm_out,
                          "normalization stats destination (default <model-out>.norm.json)");

    std::string eval_model, eval_data, eval_norm;
    std::optional<double> eval_alpha, eval_beta, tpr_budget;
    double fpr_scale = 1.0;
    CLI::App *eval_cmd = app.add_subcommand("eval", "score a dataset with a stored model");
    eval_cmd->add_option("--model", eval_model, "model JSON path")->required();
    eval_cmd->add_option("--data", eval_data, "evaluation data in svmlight format")->required();
    eval_cmd->add_option("--alpha", eval_alpha, "FPR interval start (default: model's)");
    eval_cmd->add_option("--beta", eval_beta, "FPR interval end (default: model's)");
    eval_cmd->add_option("--tpr-at-fpr", tpr_budget, "also report TPR at this FPR budget");
    eval_cmd->add_option("--fpr-scale", fpr_scale,
                         "multiply the interval ends before position computation");
    eval_cmd->add_option("--norm", eval_norm, "normalization stats to apply to the data");

    TrainArgs cv_args;
    std::string grid_text;
    double holdout = 0.3;
    CLI::App *cv_cmd = app.add_subcommand("cv", "choose C on a seeded holdout split");
    add_train_flags(cv_cmd, cv_args);
    cv_cmd->add_option("--grid", grid_text, "comma-separated C values (default per algo)");
    cv_cmd->add_option("--holdout", holdout, "validation fraction in (0,1)");

    std::string roc_model, roc_data, roc_norm, roc_out;
    CLI::App *roc_cmd = app.add_subcommand("roc", "export the ROC staircase as CSV");
    roc_cmd->add_option("--model", roc_model, "model JSON path")->required();
    roc_cmd->add_option("--data", roc_data, "data in svmlight format")->required();
    roc_cmd->add_option("--out", roc_out, "CSV destination");
    roc_cmd->add_option("--norm", roc_norm, "normalization stats to apply to the data");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (train_cmd->parsed()) {
            return cmd_train(train_args, model_out, report_out, norm_out);
        }
        if (eval_cmd->parsed()) {
            return cmd_eval(eval_model, eval_data, eval_norm, eval_alpha, eval_beta, tpr_budget,
                            fpr_scale);
        }
        if (cv_cmd->parsed()) {
            return cmd_cv(cv_args, grid_text, holdout);
        }
        if (roc_cmd->parsed()) {
            return cmd_roc(roc_model, roc_data, roc_norm, roc_out);
        }
    } catch (const config_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const convergence_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
