#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "netft/degrade.hpp"
#include "netft/denoise.hpp"
#include "netft/graph_models.hpp"
#include "netft/matrix_io.hpp"
#include "netft/metrics.hpp"
#include "netft/render.hpp"
#include "netft/sweep.hpp"
#include "netft/version.hpp"

namespace {

struct model_options {
    std::string model = "kautz";
    int alphabet = 3;
    int label = 3;
    int rows = 10;
    int cols = 10;
    int tree_n = 108;
    int children = 3;
    int n1 = 54;
    int n2 = 54;
    int pa_n = 108;
    double power = 1.0;
    double zero_appeal = 1.0;
    std::uint64_t seed = 1;
};

void add_model_options(CLI::App* cmd, model_options& opt) {
    cmd->add_option("--model", opt.model, "kautz|lattice|tree|bipartite|pa")->required();
    cmd->add_option("--alphabet", opt.alphabet, "kautz alphabet degree M");
    cmd->add_option("--label", opt.label, "kautz label exponent N");
    cmd->add_option("--rows", opt.rows, "lattice rows");
    cmd->add_option("--cols", opt.cols, "lattice cols");
    cmd->add_option("--n", opt.tree_n, "tree vertex count");
    cmd->add_option("--children", opt.children, "tree children per non-leaf");
    cmd->add_option("--n1", opt.n1, "bipartite first part size");
    cmd->add_option("--n2", opt.n2, "bipartite second part size");
    cmd->add_option("--pa-n", opt.pa_n, "preferential attachment vertex count");
    cmd->add_option("--power", opt.power, "preferential attachment power");
    cmd->add_option("--zero-appeal", opt.zero_appeal, "preferential attachment zero appeal");
    cmd->add_option("--seed", opt.seed, "preferential attachment seed");
}

netft::model_spec to_spec(const model_options& opt) {
    switch (netft::parse_model_kind(opt.model)) {
        case netft::model_kind::kautz: return netft::kautz_spec{opt.alphabet, opt.label};
        case netft::model_kind::lattice: return netft::lattice_spec{opt.rows, opt.cols};
        case netft::model_kind::tree: return netft::tree_spec{opt.tree_n, opt.children};
        case netft::model_kind::bipartite: return netft::bipartite_spec{opt.n1, opt.n2};
        case netft::model_kind::pa:
            return netft::pa_spec{opt.pa_n, opt.power, opt.zero_appeal, opt.seed};
    }
    throw netft::invalid_input_error("unknown model: " + opt.model);
}

bool is_symmetric(const netft::real_matrix& m) {
    if (!m.square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            if (m(i, j) != m(j, i)) return false;
        }
    }
    return true;
}

void write_sweep_outputs(const netft::sweep_config& cfg, const netft::sweep_result& result,
                         const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw netft::io_error("cannot create output directory: " + out_dir);

    netft::write_text_file(out_dir + "/trials.csv", netft::trials_csv(result.trials));
    netft::write_text_file(out_dir + "/aggregates.csv", netft::aggregates_csv(result.aggregates));
    netft::write_text_file(out_dir + "/manifest.json", netft::manifest_json(result.manifest));

    const auto matches_default = [](double v, double def) {
        return netft::format_result(v) == netft::format_result(def);
    };
    for (const netft::model_spec& spec : cfg.models) {
        const std::string mname = netft::model_name(netft::kind_of(spec));
        for (netft::sweep_axis axis : {netft::sweep_axis::prune, netft::sweep_axis::noise}) {
            std::vector<netft::aggregate_record> rows;
            for (const auto& a : result.aggregates) {
                if (a.model != mname) continue;
                const bool keep = axis == netft::sweep_axis::prune
                                      ? matches_default(a.noise_sd, cfg.default_noise)
                                      : matches_default(a.prune, cfg.default_prune);
                if (keep) rows.push_back(a);
            }
            if (rows.empty()) continue;
            const double ref = axis == netft::sweep_axis::prune ? cfg.default_prune
                                                                : cfg.default_noise;
            for (netft::metric_kind metric : {netft::metric_kind::f1, netft::metric_kind::mse}) {
                const std::string path = out_dir + "/curves_" + mname + "_" +
                                         netft::metric_name(metric) + "_" +
                                         netft::axis_name(axis) + ".svg";
                netft::render_curves(rows, metric, axis, ref, path);
            }
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Network adjacency-matrix denoising toolkit"};
    app.set_version_flag("--version", netft::version_string);
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Write a ground-truth model adjacency matrix");
    model_options gen_opt;
    std::string gen_out;
    add_model_options(gen, gen_opt);
    gen->add_option("--out", gen_out, "output matrix file")->required();

    // degrade
    auto* deg = app.add_subcommand("degrade", "Prune edges and add Gaussian noise");
    std::string deg_in, deg_out;
    double deg_prune = 0.25, deg_noise = 0.25;
    std::uint64_t deg_seed = 1;
    deg->add_option("--in", deg_in, "input matrix file")->required();
    deg->add_option("--prune", deg_prune, "proportion of edges to remove");
    deg->add_option("--noise-sd", deg_noise, "Gaussian noise standard deviation");
    deg->add_option("--seed", deg_seed, "degradation seed");
    deg->add_option("--out", deg_out, "output matrix file")->required();

    // denoise
    auto* den = app.add_subcommand("denoise", "Run one denoising method");
    std::string den_in, den_out, den_method = "iterft";
    int den_imax = 100;
    double den_alpha = 0.05;
    den->add_option("--in", den_in, "input matrix file")->required();
    den->add_option("--method", den_method, "iterft|real-thresh|freq-thresh|low-rank|lans");
    den->add_option("--i-max", den_imax, "iteration cap for iterft");
    den->add_option("--alpha", den_alpha, "significance level for lans");
    den->add_option("--out", den_out, "output matrix file")->required();

    // score
    auto* sc = app.add_subcommand("score", "Print f1 and mse of a denoised matrix against truth");
    std::string sc_truth, sc_denoised;
    sc->add_option("--truth", sc_truth, "ground truth matrix file")->required();
    sc->add_option("--denoised", sc_denoised, "denoised matrix file")->required();

    // sweep
    auto* sw = app.add_subcommand("sweep", "Run the replicated parameter sweeps");
    std::string sw_config, sw_out_dir;
    sw->add_option("--config", sw_config, "sweep config file (key = value lines)");
    sw->add_option("--out-dir", sw_out_dir, "output directory")->required();

    // render-example
    auto* rex = app.add_subcommand("render-example",
                                   "Render the 8-panel heatmap figure for one degraded example");
    model_options rex_opt;
    double rex_prune = 0.25, rex_noise = 0.25, rex_alpha = 0.05;
    std::uint64_t rex_seed = 1;
    int rex_imax = 100;
    std::string rex_out;
    add_model_options(rex, rex_opt);
    rex->add_option("--prune", rex_prune, "proportion of edges to remove");
    rex->add_option("--noise-sd", rex_noise, "Gaussian noise standard deviation");
    rex->add_option("--degrade-seed", rex_seed, "degradation seed");
    rex->add_option("--i-max", rex_imax, "iteration cap for iterft");
    rex->add_option("--alpha", rex_alpha, "significance level for lans");
    rex->add_option("--out", rex_out, "output SVG file")->required();

    // render-curves
    auto* rcu = app.add_subcommand("render-curves", "Render mean-metric curves from aggregates CSV");
    std::string rcu_in, rcu_model, rcu_metric = "f1", rcu_axis = "prune", rcu_out;
    double rcu_ref = 0.25, rcu_fixed = 0.25;
    rcu->add_option("--aggregates", rcu_in, "aggregates CSV file")->required();
    rcu->add_option("--model", rcu_model, "model to plot")->required();
    rcu->add_option("--metric", rcu_metric, "f1|mse");
    rcu->add_option("--axis", rcu_axis, "prune|noise");
    rcu->add_option("--fixed", rcu_fixed, "value of the non-swept axis to select");
    rcu->add_option("--reference", rcu_ref, "vertical reference line position");
    rcu->add_option("--out", rcu_out, "output SVG file")->required();

    try {
        app.parse(argc, argv);

        if (*gen) {
            netft::write_matrix_file(gen_out, netft::build_model(to_spec(gen_opt)));
        } else if (*deg) {
            const netft::real_matrix a = netft::read_matrix_file(deg_in);
            // Directedness is inferred: symmetric inputs prune both entries
            // of an edge as one unit.
            const bool directed = !is_symmetric(a);
            const netft::degraded_instance inst =
                netft::degrade(a, {deg_prune, deg_noise, deg_seed}, directed);
            netft::write_matrix_file(deg_out, inst.observed);
        } else if (*den) {
            const netft::real_matrix x = netft::read_matrix_file(den_in);
            const netft::denoise_result res = netft::run_method(
                netft::parse_method(den_method), x, den_imax, {den_alpha});
            netft::write_matrix_file(den_out, res.output);
            std::cerr << "iterations=" << res.iterations
                      << " converged=" << (res.converged ? 1 : 0) << "\n";
        } else if (*sc) {
            const netft::real_matrix truth = netft::read_matrix_file(sc_truth);
            const netft::real_matrix denoised = netft::read_matrix_file(sc_denoised);
            std::cout << "f1 " << netft::format_result(netft::f1_score(truth, denoised)) << "\n";
            std::cout << "mse " << netft::format_result(netft::mse(truth, denoised)) << "\n";
        } else if (*sw) {
            const netft::sweep_config cfg = sw_config.empty()
                                                ? netft::default_sweep_config()
                                                : netft::read_sweep_config_file(sw_config);
            const netft::sweep_result result = netft::run_sweep(cfg);
            write_sweep_outputs(cfg, result, sw_out_dir);
            std::cerr << result.trials.size() << " trials -> " << sw_out_dir << "\n";
        } else if (*rex) {
            const auto panels = netft::run_example(
                to_spec(rex_opt), {rex_prune, rex_noise, rex_seed}, rex_imax, rex_alpha);
            netft::render_heatmaps(panels, rex_out);
        } else if (*rcu) {
            std::ifstream in(rcu_in);
            if (!in) throw netft::io_error("cannot open for reading: " + rcu_in);
            std::vector<netft::aggregate_record> rows;
            std::string line;
            std::getline(in, line); // header
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                netft::aggregate_record a;
                try {
                    std::string tok;
                    std::istringstream ls(line);
                    std::getline(ls, a.model, ',');
                    std::getline(ls, a.method, ',');
                    std::getline(ls, tok, ','); a.prune = std::stod(tok);
                    std::getline(ls, tok, ','); a.noise_sd = std::stod(tok);
                    std::getline(ls, tok, ','); a.n = std::stoi(tok);
                    std::getline(ls, tok, ','); a.mean_f1 = std::stod(tok);
                    std::getline(ls, tok, ','); a.sem_f1 = std::stod(tok);
                    std::getline(ls, tok, ','); a.mean_mse = std::stod(tok);
                    std::getline(ls, tok, ','); a.sem_mse = std::stod(tok);
                } catch (const std::exception&) {
                    throw netft::io_error("malformed aggregates row: " + line);
                }
                if (a.model != rcu_model) continue;
                const netft::sweep_axis axis = netft::parse_axis(rcu_axis);
                const double other = axis == netft::sweep_axis::prune ? a.noise_sd : a.prune;
                if (netft::format_result(other) != netft::format_result(rcu_fixed)) continue;
                rows.push_back(std::move(a));
            }
            netft::render_curves(rows, netft::parse_metric(rcu_metric),
                                 netft::parse_axis(rcu_axis), rcu_ref, rcu_out);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const netft::invalid_input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const netft::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const netft::io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
