#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "diskclique/cli.hpp"
#include "support.hpp"

using namespace diskclique;
using namespace testsupport;

namespace {

const std::string kSamples = DISKCLIQUE_SAMPLES_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "diskclique_cli_test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

}  // namespace

TEST(Cli, SolveReportsValue) {
    auto r = run({"solve", kSamples + "/co_c4_c6_c5.graph"});
    EXPECT_EQ(r.code, 0);
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["value"], "7");
    EXPECT_EQ(j["optimal"], true);

    auto w = run({"solve", kSamples + "/weighted_star.graph", "--mode", "qptas", "--eps", "0.5"});
    EXPECT_EQ(w.code, 0);
    EXPECT_EQ(Json::parse(w.out)["value"], "5");

    std::string report = scratch("report.json");
    auto f = run({"solve", kSamples + "/c3_c3.graph", "--report", report});
    EXPECT_EQ(f.code, 0);
    EXPECT_NE(f.out.find("value "), std::string::npos);
    EXPECT_EQ(Json::parse(read_file(report))["n"], 6);
}

TEST(Cli, SolveDiskInstance) {
    auto r = run({"solve", kSamples + "/three_disks.disks"});
    EXPECT_EQ(r.code, 0);
    auto o = run({"oracle", kSamples + "/three_disks.disks"});
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("value " + Json::parse(r.out)["value"].get<std::string>()), std::string::npos);
}

TEST(Cli, CappedSolveExitsTwo) {
    std::string path = scratch("c9c9.graph");
    write_file(path, emit_graph(complement(cycles({9, 9}))));
    EXPECT_EQ(run({"solve", path, "--cap", "3"}).code, 2);
    auto full = run({"solve", path, "--threads", "2", "--threshold", "3"});
    EXPECT_EQ(full.code, 0);
    EXPECT_TRUE(Json::parse(full.out)["certificate"].is_object());
}

TEST(Cli, BuildAndVerify) {
    std::string disks = scratch("rep.disks"), graph = scratch("rep.graph"), svg = scratch("rep.svg");
    auto b = run({"build-rep", "--even", "4,6", "--odd", "5", "--out", disks, "--graph-out", graph, "--svg", svg});
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(run({"verify-rep", disks, graph}).code, 0);
    EXPECT_NE(read_file(svg).find("<circle"), std::string::npos);

    auto rep = parse_disks(read_file(disks));
    rep.disks[0].radius /= 2;
    write_file(disks, emit_disks(rep));
    auto v = run({"verify-rep", disks, graph});
    EXPECT_EQ(v.code, 1);
    EXPECT_NE(v.out.find("mismatch pair"), std::string::npos);
}

TEST(Cli, BuildRejections) {
    auto two = run({"build-rep", "--even", "4", "--odd", "3,5"});
    EXPECT_EQ(two.code, 65);
    EXPECT_NE(two.err.find("at most one odd cycle"), std::string::npos);
    EXPECT_EQ(run({"build-rep", "--even", "5"}).code, 65);
    EXPECT_EQ(run({"build-rep", "--odd", "4"}).code, 65);
    EXPECT_EQ(run({"build-rep", "--even", "x"}).code, 64);
    EXPECT_EQ(run({"build-rep"}).code, 65);
}

TEST(Cli, Audit) {
    auto r = run({"audit-odd-cycles", kSamples + "/two_triangles.cycles"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("ledger consistent"), std::string::npos);
    EXPECT_NE(r.out.find("violations 9"), std::string::npos);
    EXPECT_NE(r.out.find("violated S0"), std::string::npos);

    std::string square = scratch("square.cycles");
    write_file(square, "cycle 0 0 1 0 0 1\ncycle 10 10 11 10 11 12 10 13\n");
    EXPECT_EQ(run({"audit-odd-cycles", square}).code, 65);
}

TEST(Cli, Generators) {
    auto co = run({"gen-co2sub", kSamples + "/c3_c3.graph"});
    EXPECT_EQ(co.code, 0);
    Graph g = parse_graph(co.out);
    EXPECT_EQ(g.vertex_count(), 18);
    EXPECT_EQ(g.edge_count(), 135u);

    std::string svg = scratch("tri.svg"), target = scratch("tri.graph");
    auto t = run({"gen-triangles", kSamples + "/c3_c3.graph", "--svg", svg, "--graph-out", target});
    EXPECT_EQ(t.code, 0);
    EXPECT_EQ(triangle_intersection_graph(parse_triangles(t.out)), g);
    EXPECT_EQ(parse_graph(read_file(target)), g);
    EXPECT_NE(read_file(svg).find("<polygon"), std::string::npos);

    std::string empty = scratch("edgeless.graph");
    write_file(empty, "graph 3\n");
    EXPECT_EQ(run({"gen-triangles", empty}).code, 65);
}

TEST(Cli, ExitCodes) {
    auto bad = run({"solve", kSamples + "/bad_self_loop.graph"});
    EXPECT_EQ(bad.code, 64);
    EXPECT_NE(bad.err.find("line 3"), std::string::npos) << bad.err;
    EXPECT_EQ(run({"solve", "/nonexistent/x.graph"}).code, 66);
    EXPECT_EQ(run({"solve", kSamples + "/k2.graph", "--mode", "fast"}).code, 64);
    EXPECT_EQ(run({"solve", kSamples + "/k2.graph", "--eps", "0"}).code, 65);
    EXPECT_EQ(run({"oracle", kSamples + "/c3_c3.graph", "--limit", "4"}).code, 65);
    EXPECT_EQ(run({"frobnicate"}).code, 64);
    EXPECT_EQ(run({}).code, 64);
    EXPECT_EQ(run({"--help"}).code, 0);
}
