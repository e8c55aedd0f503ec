#include "scint/config.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "scint/errors.hpp"

namespace scint {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "cn2",       "l0",        "L0",          "q0",          "z",
        "r0",        "lambda_c",  "preset",      "sweep_axis",  "sweep_min",
        "sweep_max", "sweep_points", "sweep_scale", "tol",      "mc_samples",
        "seed",      "threads",   "output",      "cache_dir"};
    return keys;
}

// Keys a preset pins; explicit values for these conflict with a preset.
const std::set<std::string>& preset_pinned_keys() {
    static const std::set<std::string> keys = {
        "cn2",       "l0",        "L0",         "q0",          "z",
        "r0",        "lambda_c",  "sweep_axis", "sweep_min",   "sweep_max",
        "sweep_points", "sweep_scale"};
    return keys;
}

double parse_double(const std::string& v, const std::string& key, int line,
                    std::vector<std::string>& errors, bool allow_inf) {
    if (v == "inf" || v == "+inf") {
        if (allow_inf) return kInf;
        errors.push_back("line " + std::to_string(line) + ": key '" + key +
                         "' does not accept 'inf'");
        return 0.0;
    }
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return d;
    } catch (const std::exception&) {
        errors.push_back("line " + std::to_string(line) + ": key '" + key +
                         "' expects a number, got '" + v + "'");
        return 0.0;
    }
}

SweepAxis parse_axis(const std::string& v, int line, std::vector<std::string>& errors) {
    if (v == "z") return SweepAxis::z;
    if (v == "cn2") return SweepAxis::cn2;
    if (v == "sigma1_sq") return SweepAxis::sigma1_sq;
    errors.push_back("line " + std::to_string(line) +
                     ": sweep_axis must be one of z|cn2|sigma1_sq, got '" + v + "'");
    return SweepAxis::z;
}

struct KeyValue {
    std::string value;
    int line;
};

void apply_key(RunConfig& c, const std::string& key, const std::string& value, int line,
               std::vector<std::string>& errors) {
    auto num = [&](bool inf_ok = false) { return parse_double(value, key, line, errors, inf_ok); };
    if (key == "cn2") c.params.cn2 = num();
    else if (key == "l0") c.params.l0 = num();
    else if (key == "L0") c.params.L0 = num(true);
    else if (key == "q0") c.params.q0 = num();
    else if (key == "z") c.params.z = num();
    else if (key == "r0") c.params.r0 = num();
    else if (key == "lambda_c") c.params.lambda_c = num(true);
    else if (key == "sweep_axis") c.sweep.axis = parse_axis(value, line, errors);
    else if (key == "sweep_min") c.sweep.min = num();
    else if (key == "sweep_max") c.sweep.max = num();
    else if (key == "sweep_points") c.sweep.points = static_cast<int>(num());
    else if (key == "sweep_scale") {
        if (value == "linear") c.sweep.log_scale = false;
        else if (value == "log") c.sweep.log_scale = true;
        else errors.push_back("line " + std::to_string(line) +
                              ": sweep_scale must be linear|log, got '" + value + "'");
    }
    else if (key == "tol") c.tol = num();
    else if (key == "mc_samples") c.mc_samples = static_cast<std::uint64_t>(num());
    else if (key == "seed") c.seed = static_cast<std::uint64_t>(num());
    else if (key == "threads") c.threads = static_cast<int>(num());
    else if (key == "output") c.output = value;
    else if (key == "cache_dir") c.cache_dir = value;
}

nlohmann::json config_value(const RunConfig& c, const std::string& key) {
    if (key == "cn2") return c.params.cn2;
    if (key == "l0") return c.params.l0;
    if (key == "L0") return std::isinf(c.params.L0) ? -1.0 : c.params.L0;
    if (key == "q0") return c.params.q0;
    if (key == "z") return c.params.z;
    if (key == "r0") return c.params.r0;
    if (key == "lambda_c") return std::isinf(c.params.lambda_c) ? -1.0 : c.params.lambda_c;
    if (key == "sweep_axis") return sweep_axis_name(c.sweep.axis);
    if (key == "sweep_min") return c.sweep.min;
    if (key == "sweep_max") return c.sweep.max;
    if (key == "sweep_points") return c.sweep.points;
    if (key == "sweep_scale") return c.sweep.log_scale ? "log" : "linear";
    return nullptr;
}

} // namespace

std::vector<double> SweepSpec::grid() const {
    if (points < 1) throw ValidationError("sweep_points must be >= 1");
    std::vector<double> g(points);
    if (points == 1) {
        g[0] = min;
        return g;
    }
    if (log_scale) {
        if (!(min > 0.0 && max > min))
            throw ValidationError("log sweep requires 0 < sweep_min < sweep_max");
        const double lmin = std::log(min), lmax = std::log(max);
        for (int i = 0; i < points; ++i)
            g[i] = std::exp(lmin + (lmax - lmin) * i / (points - 1));
    } else {
        if (!(max > min)) throw ValidationError("sweep requires sweep_min < sweep_max");
        for (int i = 0; i < points; ++i) g[i] = min + (max - min) * i / (points - 1);
    }
    return g;
}

std::vector<std::string> preset_names() { return {"fig1", "fig2", "fig3", "fig3a", "fig3b", "fig4"}; }

RunConfig preset_config(const std::string& name) {
    RunConfig c;
    c.params.L0 = kInf;
    c.params.lambda_c = kInf;
    c.preset = name;
    if (name == "fig1") {
        // Caption-pinned geometry; sigma1^2 axis realized as a Cn^2 scan.
        c.params.l0 = 6.3e-3;
        c.params.q0 = 1.29e7;
        c.params.r0 = 0.01;
        c.params.z = 1200.0;
        c.params.cn2 = 0.0; // set per row by the sigma1_sq axis
        c.sweep = {SweepAxis::sigma1_sq, 0.05, 0.85, 17, false};
    } else if (name == "fig2" || name == "fig4") {
        // Caption pins l0/2pi = 1e-3 m and q0 = 1e7 1/m; r0, Cn2, grid are
        // artifact defaults. fig4's with/without-df2 comparison uses the
        // sigma2_full and sigma2_no_df2 columns of the same sweep.
        c.params.l0 = 2.0 * M_PI * 1e-3;
        c.params.q0 = 1e7;
        c.params.r0 = 0.01;
        c.params.cn2 = 1e-14;
        c.params.z = 1000.0;
        c.sweep = {SweepAxis::z, 100.0, 1150.0, 22, false};
    } else if (name == "fig3" || name == "fig3a" || name == "fig3b") {
        // Two collimated radii; all else as fig2 except a stronger channel
        // so the depletion term shapes the curves inside the valid range.
        c.params.l0 = 2.0 * M_PI * 1e-3;
        c.params.q0 = 1e7;
        c.params.r0 = (name == "fig3b") ? 0.05 : 0.02;
        c.params.cn2 = 1.5e-13;
        c.params.z = 500.0;
        c.sweep = {SweepAxis::z, 150.0, 1050.0, 10, false};
    } else {
        throw ValidationError("unknown preset '" + name + "'");
    }
    return c;
}

RunConfig parse_config(const std::string& text, bool prefer_preset) {
    std::vector<std::string> errors;
    std::map<std::string, KeyValue> entries;
    std::string preset_name;

    std::istringstream is(text);
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        std::string s = raw;
        if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
        auto trim = [](std::string& t) {
            const auto b = t.find_first_not_of(" \t\r");
            const auto e = t.find_last_not_of(" \t\r");
            t = (b == std::string::npos) ? std::string() : t.substr(b, e - b + 1);
        };
        trim(s);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            errors.push_back("line " + std::to_string(line) + ": expected 'key = value'");
            continue;
        }
        std::string key = s.substr(0, eq), value = s.substr(eq + 1);
        trim(key);
        trim(value);
        if (!known_keys().count(key)) {
            errors.push_back("line " + std::to_string(line) + ": unknown key '" + key + "'");
            continue;
        }
        if (entries.count(key)) {
            errors.push_back("line " + std::to_string(line) + ": duplicate key '" + key + "'");
            continue;
        }
        entries[key] = {value, line};
        if (key == "preset") preset_name = value;
    }

    RunConfig config;
    if (!preset_name.empty()) {
        try {
            config = preset_config(preset_name);
        } catch (const ValidationError& e) {
            errors.push_back(std::string(e.what()));
            preset_name.clear();
        }
    }

    for (const auto& [key, kv] : entries) {
        if (key == "preset") continue;
        if (!preset_name.empty() && preset_pinned_keys().count(key)) {
            // Compare against the preset's value; the preset wins only when
            // the caller explicitly asked it to.
            RunConfig probe = config;
            std::vector<std::string> probe_errors;
            apply_key(probe, key, kv.value, kv.line, probe_errors);
            if (!probe_errors.empty()) {
                errors.insert(errors.end(), probe_errors.begin(), probe_errors.end());
                continue;
            }
            if (config_value(probe, key) != config_value(config, key)) {
                if (prefer_preset) continue; // preset value stands
                errors.push_back("line " + std::to_string(kv.line) + ": key '" + key +
                                 "' conflicts with preset '" + preset_name +
                                 "' (pass --prefer-preset to use the preset value)");
                continue;
            }
            continue;
        }
        apply_key(config, key, kv.value, kv.line, errors);
    }

    if (!errors.empty()) {
        std::ostringstream os;
        os << "config errors:";
        for (const auto& e : errors) os << "\n  " << e;
        throw ValidationError(os.str());
    }
    return config;
}

nlohmann::json RunConfig::to_json() const {
    auto inf_enc = [](double v) { return std::isinf(v) ? nlohmann::json("inf") : nlohmann::json(v); };
    return {{"params",
             {{"cn2", params.cn2},
              {"l0", params.l0},
              {"L0", inf_enc(params.L0)},
              {"q0", params.q0},
              {"z", params.z},
              {"r0", params.r0},
              {"lambda_c", inf_enc(params.lambda_c)}}},
            {"sweep",
             {{"axis", sweep_axis_name(sweep.axis)},
              {"min", sweep.min},
              {"max", sweep.max},
              {"points", sweep.points},
              {"scale", sweep.log_scale ? "log" : "linear"}}},
            {"tol", tol},
            {"mc_samples", mc_samples},
            {"seed", seed},
            {"threads", threads},
            {"output", output},
            {"cache_dir", cache_dir},
            {"preset", preset}};
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
    RunConfig c;
    auto inf_dec = [](const nlohmann::json& v) {
        return v.is_string() ? kInf : v.get<double>();
    };
    const auto& p = j.at("params");
    c.params.cn2 = p.at("cn2").get<double>();
    c.params.l0 = p.at("l0").get<double>();
    c.params.L0 = inf_dec(p.at("L0"));
    c.params.q0 = p.at("q0").get<double>();
    c.params.z = p.at("z").get<double>();
    c.params.r0 = p.at("r0").get<double>();
    c.params.lambda_c = inf_dec(p.at("lambda_c"));
    const auto& s = j.at("sweep");
    const std::string axis = s.at("axis").get<std::string>();
    c.sweep.axis = axis == "z" ? SweepAxis::z
                  : axis == "cn2" ? SweepAxis::cn2
                                  : SweepAxis::sigma1_sq;
    c.sweep.min = s.at("min").get<double>();
    c.sweep.max = s.at("max").get<double>();
    c.sweep.points = s.at("points").get<int>();
    c.sweep.log_scale = s.at("scale").get<std::string>() == "log";
    c.tol = j.at("tol").get<double>();
    c.mc_samples = j.at("mc_samples").get<std::uint64_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.threads = j.at("threads").get<int>();
    c.output = j.at("output").get<std::string>();
    c.cache_dir = j.at("cache_dir").get<std::string>();
    c.preset = j.value("preset", "");
    return c;
}

std::string config_key_reference() {
    return "Config keys (flat key = value, '#' comments):\n"
           "  cn2          structure constant Cn^2, m^(-2/3)\n"
           "  l0           inner turbulence scale, m\n"
           "  L0           outer turbulence scale, m ('inf' allowed)\n"
           "  q0           central wavenumber, 1/m\n"
           "  z            propagation distance, m\n"
           "  r0           aperture radius, m\n"
           "  lambda_c     phase-diffuser coherence length, m ('inf' allowed)\n"
           "  preset       fig1|fig2|fig3|fig3a|fig3b|fig4\n"
           "  sweep_axis   z|cn2|sigma1_sq\n"
           "  sweep_min    first grid value (axis units)\n"
           "  sweep_max    last grid value (axis units)\n"
           "  sweep_points grid size, >= 1\n"
           "  sweep_scale  linear|log\n"
           "  tol          relative tolerance for deterministic integrals\n"
           "  mc_samples   Monte Carlo samples for the cross term\n"
           "  seed         64-bit base seed\n"
           "  threads      worker threads (results are thread-count independent)\n"
           "  output       CSV output path\n"
           "  cache_dir    cache directory (empty disables caching)\n";
}

} // namespace scint
