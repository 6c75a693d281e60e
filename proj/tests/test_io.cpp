#include <doctest.h>

#include <cstdio>
#include <sstream>
#include <string>

#include "ivreach/io.hpp"

using namespace ivreach;

namespace {

ReachTube sample_tube() {
    ReachTube tube;
    tube.method = "growth-bound";
    tube.entries.push_back({0.0, IntervalVector({0.1, -1.0}, {0.2, 1.0 / 3.0})});
    tube.entries.push_back({0.5, IntervalVector({0.05, -2.0}, {0.3, 0.4})});
    tube.report.method = "growth-bound";
    tube.report.n = 2;
    tube.report.workers = 4;
    tube.report.steps = 10;
    tube.report.peak_state_bytes = 112;
    tube.report.phases = {0.001, 0.2, 0.003};
    return tube;
}

}  // namespace

TEST_CASE("tube json round trips times, boxes, and report fields") {
    const ReachTube tube = sample_tube();
    const ReachTube back = tube_from_json(tube_to_json(tube));
    CHECK(back.method == tube.method);
    REQUIRE(back.entries.size() == 2);
    CHECK(back.entries[0].t == 0.0);
    CHECK(back.entries[1].t == 0.5);
    CHECK(back.entries[0].box == tube.entries[0].box);
    CHECK(back.entries[1].box == tube.entries[1].box);
    CHECK(back.report.n == 2);
    CHECK(back.report.steps == 10);
    CHECK(back.report.peak_state_bytes == 112);
}

TEST_CASE("malformed tube json is rejected") {
    CHECK_THROWS(tube_from_json("{}"));
    CHECK_THROWS(tube_from_json(
        R"({"method":"m","times":[0,1],"boxes":[{"lower":[0],"upper":[1]}]})"));
}

TEST_CASE("tube csv has a header and one row per entry") {
    const std::string csv = tube_to_csv(sample_tube());
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "t,lower0,upper0,lower1,upper1");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 2);

    // identical tubes serialize to identical bytes
    CHECK(tube_to_csv(sample_tube()) == csv);
}

TEST_CASE("csv doubles survive a strtod round trip") {
    const std::string csv = tube_to_csv(sample_tube());
    std::istringstream in(csv);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    // first entry: t, then lower0
    const std::size_t comma = row.find(',');
    const std::size_t comma2 = row.find(',', comma + 1);
    const double lower0 = std::stod(row.substr(comma + 1, comma2 - comma - 1));
    CHECK(lower0 == 0.1);
}

TEST_CASE("report json carries every field") {
    const std::string text = report_to_json(sample_tube().report);
    for (const char* key : {"method", "\"n\"", "\"m\"", "workers", "steps",
                            "peak_state_bytes", "setup_s", "integration_s",
                            "reduction_s"}) {
        CAPTURE(key);
        CHECK(text.find(key) != std::string::npos);
    }
}

TEST_CASE("trajectory exports have the documented shapes") {
    Trajectory traj;
    traj.times = {0.0, 1.0};
    traj.states = {{1.0, 2.0}, {3.0, 4.0}};
    const std::string csv = trajectory_to_csv(traj);
    CHECK(csv.rfind("t,x0,x1\n", 0) == 0);
    const std::string json = trajectory_to_json(traj);
    CHECK(json.find("\"times\"") != std::string::npos);
    CHECK(json.find("\"states\"") != std::string::npos);
}

TEST_CASE("text files round trip and missing files throw") {
    const std::string path = "io_roundtrip_test.txt";
    write_text_file(path, "line one\nline two\n");
    CHECK(read_text_file(path) == "line one\nline two\n");
    std::remove(path.c_str());
    CHECK_THROWS(read_text_file("definitely/not/a/file.txt"));
}
