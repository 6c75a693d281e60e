#include "ivreach/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ivreach {

namespace {

using nlohmann::json;

void append_double(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

json report_json(const RunReport& r) {
    return json{{"method", r.method},
                {"n", r.n},
                {"m", r.m},
                {"workers", r.workers},
                {"steps", r.steps},
                {"peak_state_bytes", r.peak_state_bytes},
                {"phases",
                 {{"setup_s", r.phases.setup_s},
                  {"integration_s", r.phases.integration_s},
                  {"reduction_s", r.phases.reduction_s}}}};
}

RunReport report_from_json(const json& j) {
    RunReport r;
    r.method = j.at("method").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.m = j.at("m").get<std::size_t>();
    r.workers = j.at("workers").get<int>();
    r.steps = j.at("steps").get<std::size_t>();
    r.peak_state_bytes = j.at("peak_state_bytes").get<std::size_t>();
    const auto& ph = j.at("phases");
    r.phases.setup_s = ph.at("setup_s").get<double>();
    r.phases.integration_s = ph.at("integration_s").get<double>();
    r.phases.reduction_s = ph.at("reduction_s").get<double>();
    return r;
}

}  // namespace

std::string tube_to_json(const ReachTube& tube) {
    json times = json::array();
    json boxes = json::array();
    for (const auto& e : tube.entries) {
        times.push_back(e.t);
        boxes.push_back(json{{"lower", e.box.lower()}, {"upper", e.box.upper()}});
    }
    const json j{{"method", tube.method},
                 {"times", std::move(times)},
                 {"boxes", std::move(boxes)},
                 {"report", report_json(tube.report)}};
    return j.dump(2) + "\n";
}

ReachTube tube_from_json(const std::string& text) {
    const json j = json::parse(text);
    ReachTube tube;
    tube.method = j.at("method").get<std::string>();
    const auto& times = j.at("times");
    const auto& boxes = j.at("boxes");
    if (times.size() != boxes.size())
        throw std::invalid_argument("tube JSON: times and boxes lengths differ");
    for (std::size_t i = 0; i < times.size(); ++i) {
        tube.entries.push_back(TubeEntry{
            times[i].get<double>(),
            IntervalVector(boxes[i].at("lower").get<std::vector<double>>(),
                           boxes[i].at("upper").get<std::vector<double>>())});
    }
    tube.report = report_from_json(j.at("report"));
    return tube;
}

std::string tube_to_csv(const ReachTube& tube) {
    std::string out = "t";
    const std::size_t n = tube.entries.empty() ? 0 : tube.entries.front().box.dim();
    for (std::size_t i = 0; i < n; ++i) {
        out += ",lower" + std::to_string(i);
        out += ",upper" + std::to_string(i);
    }
    out += "\n";
    for (const auto& e : tube.entries) {
        append_double(out, e.t);
        for (std::size_t i = 0; i < e.box.dim(); ++i) {
            out += ',';
            append_double(out, e.box.lower(i));
            out += ',';
            append_double(out, e.box.upper(i));
        }
        out += '\n';
    }
    return out;
}

std::string report_to_json(const RunReport& report) {
    return report_json(report).dump(2) + "\n";
}

std::string trajectory_to_csv(const Trajectory& traj) {
    std::string out = "t";
    const std::size_t n = traj.states.empty() ? 0 : traj.states.front().size();
    for (std::size_t i = 0; i < n; ++i) out += ",x" + std::to_string(i);
    out += "\n";
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        append_double(out, traj.times[k]);
        for (double v : traj.states[k]) {
            out += ',';
            append_double(out, v);
        }
        out += '\n';
    }
    return out;
}

std::string trajectory_to_json(const Trajectory& traj) {
    const json j{{"times", traj.times}, {"states", traj.states}};
    return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace ivreach
