#include "doctest.h"
#include "fixtures.hpp"
#include "process.hpp"

#include <json.hpp>

#include <fstream>

namespace fs = std::filesystem;

namespace {

std::string data(const std::string& file) { return (fixtures::data_dir() / file).string(); }

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) : path(fs::temp_directory_path() / ("rkcs_cli_" + tag)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("bench_cli") {

TEST_CASE("verify exit codes") {
    const auto ok = proc::run({"verify", data("berlin52.tsp"), data("berlin52.opt.tour")});
    CHECK(ok.status == 0);
    CHECK(ok.out.find("valid-optimal cost=7542 optimum=7542") != std::string::npos);

    TempDir dir("verify");
    const auto empty = dir.path / "empty.csv";
    std::ofstream(empty) << "name,optimum\n";
    CHECK(proc::run({"verify", data("berlin52.tsp"), data("berlin52.opt.tour"), "--optima", empty.string()}).status ==
          1);

    const auto bad = dir.path / "bad.tour";
    {
        std::ofstream out(bad);
        out << "TOUR_SECTION\n";
        for (int i = 1; i <= 51; ++i) out << i << '\n';
        out << "1\n-1\nEOF\n";
    }
    const auto invalid = proc::run({"verify", data("berlin52.tsp"), bad.string()});
    CHECK(invalid.status == 2);
    CHECK(invalid.out.find("invalid") != std::string::npos);

    CHECK(proc::run({"verify", data("berlin52.tsp"), (dir.path / "missing.tour").string()}).status == 3);
}

TEST_CASE("unsupported input is a runtime error") {
    TempDir dir("geo");
    const auto geo = dir.path / "geo.tsp";
    std::ofstream(geo) << "NAME: geo\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: GEO\nNODE_COORD_SECTION\n1 0 0\n2 1 1\n3 2 2\n";
    const auto r = proc::run({"solve", geo.string(), "--maxgen", "2"});
    CHECK(r.status == 3);
    CHECK(r.err.find("GEO") != std::string::npos);
}

TEST_CASE("solve JSON is reproducible apart from timing") {
    const std::vector<std::string> args{"solve", data("eil51.tsp"), "--runs", "2", "--maxgen", "10",
                                        "--seed", "7",               "--format", "json"};
    const auto a = proc::run(args);
    const auto b = proc::run(args);
    REQUIRE(a.status == 0);
    REQUIRE(b.status == 0);
    CHECK(proc::strip_lines_containing(a.out, "wall_time") == proc::strip_lines_containing(b.out, "wall_time"));
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["instances"][0]["runs"] == 2);
    CHECK(doc["params"]["base_seed"] == 7);
}

TEST_CASE("solve writes the best tour and a trace") {
    TempDir dir("solve");
    const auto tour = dir.path / "best.tour";
    const auto trace = dir.path / "trace.csv";
    const auto r = proc::run({"solve", data("eil51.tsp"), "--maxgen", "5", "--tour-out", tour.string(), "--trace",
                              trace.string(), "--format", "csv"});
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("kind,instance,", 0) == 0);

    const auto v = proc::run({"verify", data("eil51.tsp"), tour.string()});
    CHECK((v.status == 0 || v.status == 1));

    std::ifstream in(trace);
    std::string line;
    std::size_t lines = 0;
    std::getline(in, line);
    CHECK(line == "instance,run,generation,best_cost");
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 6);
}

TEST_CASE("bench over a directory") {
    TempDir dir("bench");
    fs::copy_file(fixtures::data_dir() / "eil51.tsp", dir.path / "eil51.tsp");
    fs::copy_file(fixtures::data_dir() / "berlin52.tsp", dir.path / "berlin52.tsp");
    std::ofstream(dir.path / "notes.txt") << "ignored\n";

    const auto r = proc::run({"bench", dir.path.string(), "--runs", "2", "--maxgen", "3", "--format", "json"});
    REQUIRE(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["instances"].size() == 2);
    CHECK(doc["instances"][0]["name"] == "berlin52");
    CHECK(doc["instances"][1]["name"] == "eil51");

    const auto table = proc::run({"bench", dir.path.string(), "--runs", "1", "--maxgen", "2"});
    CHECK(table.out.find("berlin52(7542)") != std::string::npos);
}

TEST_CASE("optima from the environment and unknown instances") {
    TempDir dir("env");
    const auto optima = dir.path / "opt.csv";
    std::ofstream(optima) << "name,optimum\neil51,400\n";
    const auto r = proc::run({"solve", data("eil51.tsp"), "--maxgen", "2", "--format", "json"},
                             {{"RKCS_OPTIMA", optima.string()}});
    REQUIRE(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["instances"][0]["optimum"] == 400);

    const auto w = proc::run({"solve", data("st70.tsp"), "--maxgen", "2"}, {{"RKCS_OPTIMA", optima.string()}});
    CHECK(w.status == 0);
    CHECK(w.err.find("no reference optimum") != std::string::npos);
    CHECK(w.out.find("n/a") != std::string::npos);
}

TEST_CASE("bad arguments") {
    CHECK(proc::run({"solve", data("eil51.tsp"), "--pc", "2"}).status != 0);
    CHECK(proc::run({"frobnicate"}).status != 0);
}

}  // TEST_SUITE
