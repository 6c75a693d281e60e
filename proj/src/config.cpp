#include "ivreach/config.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ivreach {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw std::invalid_argument("config line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& value, const std::string& key, std::size_t line) {
    const std::string v = trim(value);
    char* end = nullptr;
    const double d = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size())
        fail(line, "invalid number '" + v + "' for key '" + key + "'");
    return d;
}

unsigned long long parse_uint(const std::string& value, const std::string& key,
                              std::size_t line) {
    const std::string v = trim(value);
    if (v.empty() || v[0] == '-')
        fail(line, "invalid nonnegative integer '" + v + "' for key '" + key + "'");
    char* end = nullptr;
    const unsigned long long u = std::strtoull(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size())
        fail(line, "invalid nonnegative integer '" + v + "' for key '" + key + "'");
    return u;
}

std::vector<double> parse_vector(const std::string& value, const std::string& key,
                                 std::size_t line) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(item, key, line));
    if (out.empty()) fail(line, "empty value for key '" + key + "'");
    return out;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string join(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_double(v[i]);
    }
    return out;
}

std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
    return out;
}

struct Raw {
    std::string value;
    std::size_t line = 0;
};

// Box keys are parsed leniently (scalar broadcast) against a target length.
std::vector<double> resolve_box_side(const Raw& raw, const std::string& key,
                                     std::size_t want, const std::string& model,
                                     const std::string& what) {
    auto v = parse_vector(raw.value, key, raw.line);
    if (v.size() == 1 && want > 1) return std::vector<double>(want, v[0]);
    if (v.size() != want)
        fail(raw.line, key + " has " + std::to_string(v.size()) + " entries but model '" +
                           model + "' has " + what + " " + std::to_string(want));
    return v;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    static const std::vector<std::string> scalar_keys = {
        "model",  "method",  "initial.lower", "initial.upper", "input.lower",
        "input.upper", "t0", "t1", "h", "tube_stride", "workers", "epsilon",
        "delta",  "seed",    "samples",       "output",        "format"};

    std::map<std::string, Raw> kv;
    std::map<std::string, Raw> param_kv;  // param name -> raw value

    std::istringstream in(text);
    std::string full_line;
    std::size_t lineno = 0;
    while (std::getline(in, full_line)) {
        ++lineno;
        const auto hash = full_line.find('#');
        std::string body =
            trim(hash == std::string::npos ? full_line : full_line.substr(0, hash));
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) fail(lineno, "expected 'key = value'");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty()) fail(lineno, "expected 'key = value'");
        if (key.rfind("param.", 0) == 0) {
            const std::string name = key.substr(6);
            if (name.empty()) fail(lineno, "empty parameter name");
            param_kv[name] = Raw{value, lineno};
            continue;
        }
        bool known = false;
        for (const auto& k : scalar_keys) known = known || (k == key);
        if (!known) fail(lineno, "unknown key '" + key + "'");
        kv[key] = Raw{value, lineno};
    }

    auto get = [&kv](const std::string& key) -> const Raw* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };

    RunConfig cfg;

    const Raw* model_raw = get("model");
    if (!model_raw) throw std::invalid_argument("config: missing required key 'model'");
    cfg.model = trim(model_raw->value);
    const ModelCatalogEntry* entry = find_model(cfg.model);
    if (!entry) fail(model_raw->line, "unknown model '" + cfg.model + "'");

    ParamMap overrides;
    for (const auto& [name, raw] : param_kv) {
        bool known = false;
        for (const auto& spec : entry->params) known = known || (spec.name == name);
        if (!known)
            fail(raw.line, "model '" + cfg.model + "' has no parameter named '" + name +
                               "'");
        overrides[name] = parse_double(raw.value, "param." + name, raw.line);
    }
    cfg.params = resolve_params(*entry, overrides);

    SystemModel model;
    try {
        model = entry->make(cfg.params);
    } catch (const std::exception& e) {
        throw std::invalid_argument("config: " + std::string(e.what()));
    }

    if (const Raw* raw = get("method")) {
        cfg.method = trim(raw->value);
        static const std::vector<std::string> methods = {"growth-bound",
                                                         "mixed-monotonicity",
                                                         "monte-carlo"};
        bool valid = false;
        for (const auto& m : methods) valid = valid || (m == cfg.method);
        if (!valid)
            fail(raw->line, "unknown method '" + cfg.method +
                                "' (expected " + join_names(methods) + ")");
        bool supported = false;
        for (const auto& m : entry->methods) supported = supported || (m == cfg.method);
        if (!supported)
            fail(raw->line, "model '" + cfg.model + "' does not support method '" +
                                cfg.method + "' (supported: " +
                                join_names(entry->methods) + ")");
    } else {
        cfg.method = entry->methods.front();
    }

    // Catalog defaults cover whatever the file leaves out.
    const ReachProblem defaults = entry->default_problem(model, cfg.params);

    if (const Raw* raw = get("initial.lower"))
        cfg.initial_lower =
            resolve_box_side(*raw, "initial.lower", model.dim, cfg.model, "dimension");
    else
        cfg.initial_lower = defaults.initial.lower();
    if (const Raw* raw = get("initial.upper"))
        cfg.initial_upper =
            resolve_box_side(*raw, "initial.upper", model.dim, cfg.model, "dimension");
    else
        cfg.initial_upper = defaults.initial.upper();

    if (model.input_dim == 0) {
        for (const char* key : {"input.lower", "input.upper"})
            if (const Raw* raw = get(key))
                fail(raw->line, "model '" + cfg.model + "' takes no inputs");
    } else {
        if (const Raw* raw = get("input.lower"))
            cfg.input_lower = resolve_box_side(*raw, "input.lower", model.input_dim,
                                               cfg.model, "input dimension");
        else
            cfg.input_lower = defaults.inputs->lower();
        if (const Raw* raw = get("input.upper"))
            cfg.input_upper = resolve_box_side(*raw, "input.upper", model.input_dim,
                                               cfg.model, "input dimension");
        else
            cfg.input_upper = defaults.inputs->upper();
    }

    cfg.t0 = get("t0") ? parse_double(get("t0")->value, "t0", get("t0")->line)
                       : defaults.t0;
    cfg.t1 = get("t1") ? parse_double(get("t1")->value, "t1", get("t1")->line)
                       : defaults.t1;
    cfg.h = get("h") ? parse_double(get("h")->value, "h", get("h")->line) : defaults.h;
    if (const Raw* raw = get("tube_stride"))
        cfg.tube_stride =
            static_cast<std::size_t>(parse_uint(raw->value, "tube_stride", raw->line));
    if (const Raw* raw = get("workers")) {
        const unsigned long long w = parse_uint(raw->value, "workers", raw->line);
        if (w > 4096) fail(raw->line, "workers value is implausibly large");
        cfg.workers = static_cast<int>(w);
    }
    if (const Raw* raw = get("epsilon")) {
        cfg.epsilon = parse_double(raw->value, "epsilon", raw->line);
        if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0))
            fail(raw->line, "epsilon must lie in (0, 1)");
    }
    if (const Raw* raw = get("delta")) {
        cfg.delta = parse_double(raw->value, "delta", raw->line);
        if (!(cfg.delta > 0.0 && cfg.delta < 1.0))
            fail(raw->line, "delta must lie in (0, 1)");
    }
    if (const Raw* raw = get("seed"))
        cfg.seed = static_cast<std::uint64_t>(parse_uint(raw->value, "seed", raw->line));
    if (const Raw* raw = get("samples"))
        cfg.samples =
            static_cast<std::size_t>(parse_uint(raw->value, "samples", raw->line));
    if (const Raw* raw = get("output")) {
        cfg.output = trim(raw->value);
        if (cfg.output.empty()) fail(raw->line, "empty output path");
    }
    if (const Raw* raw = get("format")) {
        cfg.format = trim(raw->value);
        if (cfg.format != "json" && cfg.format != "csv")
            fail(raw->line, "unknown format '" + cfg.format + "' (expected json or csv)");
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "model = " << cfg.model << "\n";
    for (const auto& [name, value] : cfg.params)
        out << "param." << name << " = " << format_double(value) << "\n";
    out << "method = " << cfg.method << "\n";
    out << "initial.lower = " << join(cfg.initial_lower) << "\n";
    out << "initial.upper = " << join(cfg.initial_upper) << "\n";
    if (!cfg.input_lower.empty()) {
        out << "input.lower = " << join(cfg.input_lower) << "\n";
        out << "input.upper = " << join(cfg.input_upper) << "\n";
    }
    out << "t0 = " << format_double(cfg.t0) << "\n";
    out << "t1 = " << format_double(cfg.t1) << "\n";
    out << "h = " << format_double(cfg.h) << "\n";
    out << "tube_stride = " << cfg.tube_stride << "\n";
    out << "workers = " << cfg.workers << "\n";
    out << "epsilon = " << format_double(cfg.epsilon) << "\n";
    out << "delta = " << format_double(cfg.delta) << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "samples = " << cfg.samples << "\n";
    out << "output = " << cfg.output << "\n";
    out << "format = " << cfg.format << "\n";
    return out.str();
}

}  // namespace ivreach
