#include "netft/sweep.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "netft/matrix_io.hpp"
#include "netft/rng.hpp"
#include "netft/version.hpp"

namespace netft {

std::vector<double> grid_spec::points() const {
    if (!(step > 0.0)) throw invalid_input_error("grid step must be positive");
    if (stop < start) throw invalid_input_error("grid stop must not precede start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        pts.push_back(start + static_cast<double>(i) * step);
    }
    return pts;
}

sweep_config default_sweep_config() {
    sweep_config cfg;
    cfg.models = {kautz_spec{}, lattice_spec{}, tree_spec{}, bipartite_spec{}, pa_spec{}};
    cfg.methods = all_methods();
    return cfg;
}

namespace {

constexpr int family_prune = 1;
constexpr int family_noise = 2;
constexpr std::uint64_t truth_tag = 0x74727574ULL;

void validate(const sweep_config& cfg) {
    if (cfg.models.empty()) throw invalid_input_error("sweep config: no models");
    if (cfg.methods.empty()) throw invalid_input_error("sweep config: no methods");
    if (cfg.replicates < 1) throw invalid_input_error("sweep config: replicates must be at least 1");
    if (cfg.i_max < 1) throw invalid_input_error("sweep config: i_max must be at least 1");
    if (!(cfg.lans_alpha > 0.0 && cfg.lans_alpha < 1.0)) {
        throw invalid_input_error("sweep config: lans_alpha must lie in (0,1)");
    }
    if (!(cfg.default_prune >= 0.0 && cfg.default_prune <= 1.0)) {
        throw invalid_input_error("sweep config: default_prune must lie in [0,1]");
    }
    if (cfg.default_noise < 0.0) {
        throw invalid_input_error("sweep config: default_noise must be non-negative");
    }
    (void)cfg.prune_grid.points();
    (void)cfg.noise_grid.points();
}

std::string rfc3339_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t model_index, int family,
                         std::size_t point_index, int replicate) {
    return mix_seed(master_seed, {static_cast<std::uint64_t>(model_index),
                                  static_cast<std::uint64_t>(family),
                                  static_cast<std::uint64_t>(point_index),
                                  static_cast<std::uint64_t>(replicate)});
}

std::uint64_t truth_seed(std::uint64_t master_seed, std::size_t model_index, int replicate) {
    return mix_seed(master_seed, {static_cast<std::uint64_t>(model_index), truth_tag,
                                  static_cast<std::uint64_t>(replicate)});
}

sweep_result run_sweep(const sweep_config& config) {
    validate(config);

    sweep_result result;
    result.manifest.version = version_string;
    result.manifest.timestamp = rfc3339_utc_now();
    result.manifest.config_echo = sweep_config_text(config);

    for (std::size_t mi = 0; mi < config.models.size(); ++mi) {
        const model_spec& spec = config.models[mi];
        const model_kind kind = kind_of(spec);
        const std::string mname = model_name(kind);
        const bool directed = model_directed(kind);
        const bool stochastic = (kind == model_kind::pa);

        // Deterministic ground truths are built once; the stochastic model
        // gets a fresh instance per replicate.
        real_matrix fixed_truth(1, 1);
        if (!stochastic) fixed_truth = build_model(spec);
        std::vector<real_matrix> replicate_truths;
        if (stochastic) {
            replicate_truths.reserve(static_cast<std::size_t>(config.replicates));
            for (int rep = 0; rep < config.replicates; ++rep) {
                pa_spec s = std::get<pa_spec>(spec);
                s.seed = truth_seed(config.master_seed, mi, rep);
                replicate_truths.push_back(build_model(s));
            }
        }

        const auto run_family = [&](int family, const std::vector<double>& points,
                                    bool vary_prune) {
            for (std::size_t pi = 0; pi < points.size(); ++pi) {
                for (int rep = 0; rep < config.replicates; ++rep) {
                    const real_matrix& truth = stochastic
                                                   ? replicate_truths[static_cast<std::size_t>(rep)]
                                                   : fixed_truth;
                    degrade_spec dspec;
                    dspec.prune_proportion = vary_prune ? points[pi] : config.default_prune;
                    dspec.noise_sd = vary_prune ? config.default_noise : points[pi];
                    dspec.seed = trial_seed(config.master_seed, mi, family, pi, rep);
                    const degraded_instance inst = degrade(truth, dspec, directed);
                    result.manifest.trial_seeds.push_back(dspec.seed);

                    for (method m : config.methods) {
                        const denoise_result dres =
                            run_method(m, inst.observed, config.i_max, {config.lans_alpha});
                        trial_record rec;
                        rec.model = mname;
                        rec.method = method_name(m);
                        rec.prune = dspec.prune_proportion;
                        rec.noise_sd = dspec.noise_sd;
                        rec.replicate = rep;
                        rec.seed = dspec.seed;
                        rec.f1 = f1_score(truth, dres.output);
                        rec.mse = mse(truth, dres.output);
                        rec.iterations = dres.iterations;
                        rec.converged = dres.converged;
                        result.trials.push_back(std::move(rec));
                    }
                }
            }
        };

        run_family(family_prune, config.prune_grid.points(), true);
        run_family(family_noise, config.noise_grid.points(), false);
    }

    result.aggregates = aggregate(result.trials);
    return result;
}

std::vector<std::pair<std::string, real_matrix>> run_example(const model_spec& model,
                                                             const degrade_spec& degrade_params,
                                                             int i_max, double lans_alpha) {
    const bool directed = model_directed(kind_of(model));
    const real_matrix truth = build_model(model);
    const degraded_instance inst = degrade(truth, degrade_params, directed);

    real_matrix pruned = inst.truth;
    for (std::size_t i = 0; i < pruned.size(); ++i) pruned.data()[i] *= inst.mask.data()[i];

    std::vector<std::pair<std::string, real_matrix>> panels;
    panels.emplace_back("truth", inst.truth);
    panels.emplace_back("pruned", std::move(pruned));
    panels.emplace_back("noisy", inst.observed);
    for (method m : all_methods()) {
        panels.emplace_back(method_name(m),
                            run_method(m, inst.observed, i_max, {lans_alpha}).output);
    }
    return panels;
}

std::string trials_csv(const std::vector<trial_record>& trials) {
    std::ostringstream out;
    out << "model,method,prune,noise_sd,rep,seed,f1,mse,iterations,converged\n";
    for (const auto& r : trials) {
        out << r.model << ',' << r.method << ',' << format_result(r.prune) << ','
            << format_result(r.noise_sd) << ',' << r.replicate << ',' << r.seed << ','
            << format_result(r.f1) << ',' << format_result(r.mse) << ',' << r.iterations << ','
            << (r.converged ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string aggregates_csv(const std::vector<aggregate_record>& aggregates) {
    std::ostringstream out;
    out << "model,method,prune,noise_sd,n,mean_f1,sem_f1,mean_mse,sem_mse\n";
    for (const auto& a : aggregates) {
        out << a.model << ',' << a.method << ',' << format_result(a.prune) << ','
            << format_result(a.noise_sd) << ',' << a.n << ',' << format_result(a.mean_f1) << ','
            << format_result(a.sem_f1) << ',' << format_result(a.mean_mse) << ','
            << format_result(a.sem_mse) << '\n';
    }
    return out.str();
}

std::string manifest_json(const run_manifest& manifest) {
    nlohmann::json j;
    j["version"] = manifest.version;
    j["timestamp"] = manifest.timestamp;
    j["config"] = manifest.config_echo;
    j["trial_seeds"] = manifest.trial_seeds;
    return j.dump(2) + "\n";
}

namespace {

const char* model_key(model_kind k) {
    switch (k) {
        case model_kind::kautz: return "kautz";
        case model_kind::lattice: return "lattice";
        case model_kind::tree: return "tree";
        case model_kind::bipartite: return "bipartite";
        case model_kind::pa: return "pa";
    }
    return "?";
}

} // namespace

std::string sweep_config_text(const sweep_config& config) {
    std::ostringstream out;
    out << "master_seed = " << config.master_seed << "\n";
    out << "replicates = " << config.replicates << "\n";
    out << "i_max = " << config.i_max << "\n";
    out << "lans_alpha = " << format_result(config.lans_alpha) << "\n";
    out << "default_prune = " << format_result(config.default_prune) << "\n";
    out << "default_noise = " << format_result(config.default_noise) << "\n";
    out << "prune_grid = " << format_result(config.prune_grid.start) << ":"
        << format_result(config.prune_grid.stop) << ":" << format_result(config.prune_grid.step)
        << "\n";
    out << "noise_grid = " << format_result(config.noise_grid.start) << ":"
        << format_result(config.noise_grid.stop) << ":" << format_result(config.noise_grid.step)
        << "\n";
    out << "models = ";
    for (std::size_t i = 0; i < config.models.size(); ++i) {
        if (i) out << ",";
        out << model_key(kind_of(config.models[i]));
    }
    out << "\n";
    out << "methods = ";
    for (std::size_t i = 0; i < config.methods.size(); ++i) {
        if (i) out << ",";
        out << method_name(config.methods[i]);
    }
    out << "\n";
    for (const model_spec& spec : config.models) {
        if (const auto* s = std::get_if<kautz_spec>(&spec)) {
            out << "kautz_alphabet = " << s->alphabet_degree << "\n";
            out << "kautz_label = " << s->label_exponent << "\n";
        } else if (const auto* s = std::get_if<lattice_spec>(&spec)) {
            out << "lattice_rows = " << s->rows << "\n";
            out << "lattice_cols = " << s->cols << "\n";
        } else if (const auto* s = std::get_if<tree_spec>(&spec)) {
            out << "tree_n = " << s->vertices << "\n";
            out << "tree_children = " << s->children << "\n";
        } else if (const auto* s = std::get_if<bipartite_spec>(&spec)) {
            out << "bipartite_n1 = " << s->n1 << "\n";
            out << "bipartite_n2 = " << s->n2 << "\n";
        } else if (const auto* s = std::get_if<pa_spec>(&spec)) {
            out << "pa_n = " << s->vertices << "\n";
            out << "pa_power = " << format_result(s->power) << "\n";
            out << "pa_zero_appeal = " << format_result(s->zero_appeal) << "\n";
        }
    }
    return out.str();
}

namespace {

struct kv_line {
    std::string key;
    std::string value;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) parts.push_back(trim(cur));
    return parts;
}

double parse_double(const kv_line& kv) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(kv.value, &pos);
        if (pos != kv.value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw invalid_input_error("sweep config: bad number for " + kv.key + ": " + kv.value);
    }
}

long long parse_int(const kv_line& kv) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(kv.value, &pos);
        if (pos != kv.value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw invalid_input_error("sweep config: bad integer for " + kv.key + ": " + kv.value);
    }
}

std::uint64_t parse_u64(const kv_line& kv) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(kv.value, &pos);
        if (pos != kv.value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw invalid_input_error("sweep config: bad unsigned integer for " + kv.key + ": " + kv.value);
    }
}

grid_spec parse_grid(const kv_line& kv) {
    const auto parts = split(kv.value, ':');
    if (parts.size() != 3) {
        throw invalid_input_error("sweep config: " + kv.key + " must be start:stop:step");
    }
    grid_spec g;
    g.start = parse_double({kv.key, parts[0]});
    g.stop = parse_double({kv.key, parts[1]});
    g.step = parse_double({kv.key, parts[2]});
    return g;
}

} // namespace

sweep_config parse_sweep_config(std::istream& in) {
    sweep_config cfg = default_sweep_config();

    // Per-kind parameters collected first, then applied to the model list.
    kautz_spec kautz_params;
    lattice_spec lattice_params;
    tree_spec tree_params;
    bipartite_spec bipartite_params;
    pa_spec pa_params;
    std::vector<model_kind> model_kinds = {model_kind::kautz, model_kind::lattice,
                                           model_kind::tree, model_kind::bipartite,
                                           model_kind::pa};

    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw invalid_input_error("sweep config: expected key = value, got: " + line);
        }
        const kv_line kv{trim(line.substr(0, eq)), trim(line.substr(eq + 1))};

        if (kv.key == "master_seed") cfg.master_seed = parse_u64(kv);
        else if (kv.key == "replicates") cfg.replicates = static_cast<int>(parse_int(kv));
        else if (kv.key == "i_max") cfg.i_max = static_cast<int>(parse_int(kv));
        else if (kv.key == "lans_alpha") cfg.lans_alpha = parse_double(kv);
        else if (kv.key == "default_prune") cfg.default_prune = parse_double(kv);
        else if (kv.key == "default_noise") cfg.default_noise = parse_double(kv);
        else if (kv.key == "prune_grid") cfg.prune_grid = parse_grid(kv);
        else if (kv.key == "noise_grid") cfg.noise_grid = parse_grid(kv);
        else if (kv.key == "models") {
            model_kinds.clear();
            for (const auto& tok : split(kv.value, ',')) {
                if (!tok.empty()) model_kinds.push_back(parse_model_kind(tok));
            }
        } else if (kv.key == "methods") {
            cfg.methods.clear();
            for (const auto& tok : split(kv.value, ',')) {
                if (!tok.empty()) cfg.methods.push_back(parse_method(tok));
            }
        }
        else if (kv.key == "kautz_alphabet") kautz_params.alphabet_degree = static_cast<int>(parse_int(kv));
        else if (kv.key == "kautz_label") kautz_params.label_exponent = static_cast<int>(parse_int(kv));
        else if (kv.key == "lattice_rows") lattice_params.rows = static_cast<int>(parse_int(kv));
        else if (kv.key == "lattice_cols") lattice_params.cols = static_cast<int>(parse_int(kv));
        else if (kv.key == "tree_n") tree_params.vertices = static_cast<int>(parse_int(kv));
        else if (kv.key == "tree_children") tree_params.children = static_cast<int>(parse_int(kv));
        else if (kv.key == "bipartite_n1") bipartite_params.n1 = static_cast<int>(parse_int(kv));
        else if (kv.key == "bipartite_n2") bipartite_params.n2 = static_cast<int>(parse_int(kv));
        else if (kv.key == "pa_n") pa_params.vertices = static_cast<int>(parse_int(kv));
        else if (kv.key == "pa_power") pa_params.power = parse_double(kv);
        else if (kv.key == "pa_zero_appeal") pa_params.zero_appeal = parse_double(kv);
        else throw invalid_input_error("sweep config: unknown key: " + kv.key);
    }

    cfg.models.clear();
    for (model_kind k : model_kinds) {
        switch (k) {
            case model_kind::kautz: cfg.models.emplace_back(kautz_params); break;
            case model_kind::lattice: cfg.models.emplace_back(lattice_params); break;
            case model_kind::tree: cfg.models.emplace_back(tree_params); break;
            case model_kind::bipartite: cfg.models.emplace_back(bipartite_params); break;
            case model_kind::pa: cfg.models.emplace_back(pa_params); break;
        }
    }
    validate(cfg);
    return cfg;
}

sweep_config read_sweep_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open for reading: " + path);
    return parse_sweep_config(in);
}

} // namespace netft
