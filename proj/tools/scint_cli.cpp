// Command-line front end: evaluate scintillation-index sweeps from a config
// file or a figure preset, writing a CSV plus a sidecar metadata record.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "scint/cache.hpp"
#include "scint/config.hpp"
#include "scint/csv.hpp"
#include "scint/kinetic.hpp"
#include "scint/util.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRowErrors = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open config file '" + path + "'");
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"scint: on-axis scintillation index of a Gaussian beam in "
                 "weak-to-moderate turbulence"};
    std::string config_path, preset, output, cache_dir, dump_collision;
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::uint64_t mc_samples = 0;
    int threads = 0;
    bool no_cache = false, prefer_preset = false;

    app.add_option("--config", config_path, "config file (flat key = value)");
    app.add_option("--preset", preset, "figure preset: fig1|fig2|fig3|fig3a|fig3b|fig4");
    app.add_option("--output", output, "CSV output path (overrides config)");
    app.add_option("--seed", seed, "base seed (overrides config)");
    app.add_option("--tol", tol, "relative tolerance (overrides config)");
    app.add_option("--mc-samples", mc_samples, "cross-term MC samples (overrides config)");
    app.add_option("--cache", cache_dir, "cache directory (overrides config)");
    app.add_flag("--no-cache", no_cache, "disable the result cache");
    app.add_option("--threads", threads, "worker threads; results do not depend on this");
    app.add_flag("--prefer-preset", prefer_preset,
                 "on preset/key conflicts use the preset value");
    app.add_option("--dump-collision", dump_collision,
                   "write a collision-operator demo grid as CSV and exit");
    app.footer(scint::config_key_reference());

    CLI11_PARSE(app, argc, argv);

    scint::RunConfig config;
    try {
        if (!config_path.empty()) {
            std::string text = read_file(config_path);
            if (!preset.empty()) text += "\npreset = " + preset + "\n";
            config = scint::parse_config(text, prefer_preset);
        } else if (!preset.empty()) {
            config = scint::preset_config(preset);
        } else if (dump_collision.empty()) {
            std::cerr << "error: need --config or --preset\n";
            return kExitConfig;
        }
        if (!output.empty()) config.output = output;
        if (app.count("--seed")) config.seed = seed;
        if (app.count("--tol")) config.tol = tol;
        if (app.count("--mc-samples")) config.mc_samples = mc_samples;
        if (app.count("--cache")) config.cache_dir = cache_dir;
        if (no_cache) config.cache_dir.clear();
        if (app.count("--threads")) config.threads = threads;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    if (!dump_collision.empty()) {
        // Diagnostic: collision-term field of a narrow Gaussian distribution
        // on the default grid, using the configured (or fig2) channel.
        try {
            if (config_path.empty() && preset.empty()) config = scint::preset_config("fig2");
            const auto spec = scint::SpectrumParams::from(config.params);
            const double k_inner = 2.0 * M_PI / config.params.l0;
            const double width = 4.0 * k_inner;
            auto g = scint::PdfGrid::make(256, 256, 6.0 * width, 6.0 * width,
                                          [&](double x, double y) {
                                              return std::exp(-(x * x + y * y) /
                                                              (2.0 * width * width));
                                          });
            const double omega0 = scint::kSpeedOfLight * config.params.q0;
            const auto field = scint::apply_collision(g, spec, omega0, config.params.L0,
                                                      true, std::max(1, config.threads));
            field.write_csv(dump_collision);
            std::cout << "wrote " << dump_collision << "\n";
            return kExitOk;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitIo;
        }
    }

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<scint::SweepRow> rows;
    try {
        config.params.validate();
        scint::PipelineOptions opts;
        opts.rel_tol = config.tol;
        opts.mc_samples = config.mc_samples;
        opts.seed = config.seed;
        opts.threads = std::max(1, config.threads);
        std::optional<scint::Cache> cache;
        if (!config.cache_dir.empty()) {
            cache.emplace(config.cache_dir);
            opts.cache = &*cache;
        }
        rows = scint::sweep(config.params, config.sweep.axis, config.sweep.grid(), opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double wall_ms =
        std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() / 1000.0;

    int n_failed = 0;
    nlohmann::json row_errors = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].error.empty()) {
            ++n_failed;
            row_errors.push_back({{"row", i}, {"error", rows[i].error}});
        }
    }

    try {
        const std::string csv = scint::sweep_csv(rows, config.sweep.axis);
        std::ofstream os(config.output, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open '" + config.output + "' for writing");
        os << csv;
        os.close();

        nlohmann::json meta{{"config", config.to_json()},
                            {"version", std::string(scint::kCodeVersion)},
                            {"rows", rows.size()},
                            {"rows_failed", n_failed},
                            {"row_errors", row_errors},
                            {"wall_time_ms", wall_ms}};
        nlohmann::json grid = nlohmann::json::array();
        nlohmann::json row_seeds = nlohmann::json::array();
        for (const auto& r : rows) {
            grid.push_back(r.axis_value);
            row_seeds.push_back(r.row_seed);
        }
        meta["grid"] = grid;
        meta["row_seeds"] = row_seeds;
        std::ofstream ms(config.output + ".meta.json", std::ios::binary);
        if (!ms)
            throw std::runtime_error("cannot open '" + config.output + ".meta.json'");
        ms << meta.dump(2) << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }

    if (n_failed > 0) {
        std::cerr << n_failed << " of " << rows.size() << " rows failed:\n";
        for (const auto& re : row_errors)
            std::cerr << "  row " << re["row"] << ": " << re["error"].get<std::string>()
                      << "\n";
        return kExitRowErrors;
    }
    std::cout << "wrote " << config.output << " (" << rows.size() << " rows, " << wall_ms
              << " ms)\n";
    return kExitOk;
}
