#include "fixtures.hpp"

#include "netlab/csv.hpp"
#include "netlab/error.hpp"
#include "netlab/harness.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

using namespace netlab;
using namespace netlab::testing;

namespace {

std::string cycle_text(Vertex n) {
    std::ostringstream out;
    for (Vertex i = 0; i < n; ++i) out << i << ' ' << (i + 1) % n << '\n';
    return out.str();
}

IngestResult ingest_text(const std::string &text) {
    std::istringstream in(text);
    return ingest_stream(in, "fixture");
}

CostRecord record(const std::string &algorithm, double locality, double heterogeneity, double exponent) {
    CostRecord r;
    r.network = "net";
    r.algorithm = algorithm;
    r.locality = locality;
    r.heterogeneity = heterogeneity;
    r.exponent = exponent;
    return r;
}

std::vector<Network> small_networks() {
    Rng rng(7);
    std::vector<Network> nets(3);
    nets[0].id = "geo";
    nets[0].graph = random_geometric(200, 0.12, 4, rng);
    nets[1].id = "cycle";
    nets[1].graph = cycle_graph(40);
    nets[2].id = "gnp";
    nets[2].graph = largest_component(random_gnp(150, 0.04, rng));
    return nets;
}

std::filesystem::path scratch_dir(const std::string &name) {
    const auto dir = std::filesystem::temp_directory_path() / ("netlab-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("csv number formatting round-trips") {
    for (double x : {0.0, 1.0, -2.5, 0.1, 1e-300, 123456789.125, 2.0 / 3.0})
        CHECK(csv::parse_double(csv::format_double(x)) == x);
    CHECK(csv::format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(csv::format_double(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(csv::format_double(std::nan("")) == "nan");
    CHECK(std::isnan(csv::parse_double("nan")));
    CHECK(csv::parse_double("-inf") == -std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(csv::parse_double("1.5x"), Error);
    CHECK_THROWS_AS(csv::parse_double(""), Error);
}

TEST_CASE("csv quoting") {
    CHECK(csv::escape("plain") == "plain");
    CHECK(csv::escape("a,b") == "\"a,b\"");
    CHECK(csv::escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    const auto fields = csv::split("x,\"{\"\"a\"\":1,\"\"b\"\":2}\",,z\r");
    REQUIRE(fields.size() == 4);
    CHECK(fields[1] == "{\"a\":1,\"b\":2}");
    CHECK(fields[2].empty());
    CHECK(fields[3] == "z");
}

TEST_CASE("edge list parsing") {
    std::istringstream in("# comment\n% other\n\n1 2\n2 3 0.5 extra\n");
    const auto pairs = parse_edge_list(in);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[1] == std::pair<std::int64_t, std::int64_t>{2, 3});

    std::istringstream bad("1 2\n3 x\n");
    CHECK_THROWS_WITH_AS(parse_edge_list(bad), "line 2: expected two integer vertex ids", Error);
}

TEST_CASE("ingestion classifies inputs") {
    const IngestResult cycle = ingest_text(cycle_text(25));
    CHECK(cycle.entry.admitted());
    CHECK(cycle.entry.n == 25);
    CHECK(cycle.entry.m == 25);
    CHECK(cycle.entry.name == "fixture");

    const IngestResult path = ingest_text("0 1\n1 2\n2 3\n");
    CHECK(path.entry.excluded_reason == ExclusionReason::tree);

    const IngestResult k4 = ingest_text("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    CHECK(k4.entry.excluded_reason == ExclusionReason::dense);
    // A 5-cycle has density 0.5 and falls under the density rule.
    CHECK(ingest_text(cycle_text(5)).entry.excluded_reason == ExclusionReason::dense);

    CHECK(ingest_text("# nothing\n").entry.excluded_reason == ExclusionReason::empty);
    CHECK(ingest_text("3 3\n").entry.excluded_reason == ExclusionReason::empty);
    CHECK(to_string(ExclusionReason::dense) == "dense");
}

TEST_CASE("ingestion keeps the largest component") {
    std::string text = cycle_text(30);
    text += "100 101\n101 102\n";
    const IngestResult r = ingest_text(text);
    CHECK(r.entry.n == 30);
    CHECK(r.graph.n() == 30);
    CHECK(r.entry.admitted());
}

TEST_CASE("edge list files round-trip through ingest") {
    const auto dir = scratch_dir("edges");
    Rng rng(3);
    const Graph g = random_geometric(120, 0.15, 3, rng);
    write_edge_list(dir / "geo.edges", g);
    const IngestResult r = ingest(dir / "geo.edges");
    CHECK(r.entry.name == "geo");
    CHECK(r.graph.n() == g.n());
    CHECK(r.graph.m() == g.m());
    CHECK_THROWS_AS(ingest(dir / "missing.edges"), Error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("algorithm names and cost bases") {
    for (Algorithm a : all_algorithms()) CHECK(parse_algorithm(to_string(a)) == a);
    CHECK(all_algorithms().size() == 7);
    CHECK(cost_base(Algorithm::bidir_bfs) == CostBase::m);
    CHECK(cost_base(Algorithm::max_cliques) == CostBase::m);
    CHECK(cost_base(Algorithm::louvain) == CostBase::n);
    CHECK_THROWS_AS(parse_algorithm("dijkstra"), Error);
}

TEST_CASE("cost records survive a CSV round trip") {
    CostRecord a;
    a.network = "girg-001-r0";
    a.algorithm = "louvain";
    a.param_json = R"({"beta":2.5,"model":"girg"})";
    a.seed = 12345678901234ull;
    a.cost = 7;
    a.exponent = 0.21127;
    a.wall_time_s = 0.003;
    a.locality = 0.61;
    a.heterogeneity = -std::numeric_limits<double>::infinity();
    a.n = 9876;
    a.m = 50000;
    CostRecord b = a;
    b.algorithm = "bidir_bfs";
    b.base = "m";
    b.cost = std::nan("");
    b.exponent = std::nan("");
    b.timed_out = true;

    std::stringstream buffer;
    write_records(buffer, {a, b});
    CHECK(buffer.str().rfind(kSchemaLine, 0) == 0);
    const auto back = read_records(buffer);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == a);
    CHECK(back[1] == b);

    std::istringstream wrong_header("# netlab-schema=1\nnetwork,algorithm\n");
    CHECK_THROWS_AS(read_records(wrong_header), Error);
}

TEST_CASE("run_suite covers every network and algorithm pair") {
    auto nets = small_networks();
    SuiteConfig config;
    config.algorithms = {Algorithm::bidir_bfs, Algorithm::louvain};
    config.bidir_pairs = 20;
    const auto records = run_suite(nets, config);
    REQUIRE(records.size() == 6);
    for (std::size_t i = 0; i + 1 < records.size(); ++i)
        CHECK(std::tie(records[i].network, records[i].algorithm) <= std::tie(records[i + 1].network, records[i + 1].algorithm));
    for (const CostRecord &r : records) {
        CHECK_FALSE(r.timed_out);
        CHECK(std::isfinite(r.exponent));
        CHECK(r.base == (r.algorithm == "bidir_bfs" ? "m" : "n"));
        const auto params = nlohmann::json::parse(r.param_json);
        if (r.algorithm == "louvain") CHECK(params.at("order") == "ascending");
        if (r.algorithm == "bidir_bfs") CHECK(params.at("pairs") == 20);
    }
    for (const Network &n : nets) {
        CHECK(n.locality.has_value());
        CHECK(n.heterogeneity.has_value());
    }
}

TEST_CASE("run_suite output is reproducible apart from wall time") {
    auto render = [] {
        auto nets = small_networks();
        SuiteConfig config;
        config.seeds = {0, 1};
        config.workers = 2;
        auto records = run_suite(nets, config);
        for (CostRecord &r : records) r.wall_time_s = 0.0;
        std::ostringstream out;
        write_records(out, records);
        return out.str();
    };
    const std::string first = render();
    CHECK(first == render());
    CHECK(std::count(first.begin(), first.end(), '\n') == 2 + 3 * 7 * 2);
}

TEST_CASE("measure honors the deadline and reports failures as rows") {
    Rng rng(11);
    Network dense;
    dense.id = "dense";
    dense.graph = random_gnp(400, 0.4, rng);
    const CostRecord late = measure(dense, Algorithm::max_cliques, 0, std::chrono::milliseconds(1));
    CHECK(late.timed_out);
    CHECK(late.cost > 0.0);

    Network empty;
    empty.id = "edgeless";
    empty.graph = Graph::from_edges(3, {});
    const CostRecord failed = measure(empty, Algorithm::louvain, 0, std::chrono::seconds(10));
    CHECK(std::isnan(failed.cost));
    CHECK(std::isnan(failed.exponent));
    CHECK(nlohmann::json::parse(failed.param_json).contains("error"));
}

TEST_CASE("annotate leaves NaN locality when it is undefined") {
    Network tree;
    tree.id = "path";
    tree.graph = path_graph(10);
    annotate(tree);
    REQUIRE(tree.locality.has_value());
    CHECK(std::isnan(*tree.locality));
    CHECK(std::isfinite(*tree.heterogeneity));
}

TEST_CASE("aggregation bins") {
    const auto same = aggregate({record("louvain", 0.51, 0.1, 0.2), record("louvain", 0.52, 0.2, 0.8)});
    REQUIRE(same.size() == 1);
    CHECK(same[0].mean_exponent == doctest::Approx(0.5));
    CHECK(same[0].count == 2);
    CHECK(same[0].locality_center == doctest::Approx(0.525));
    CHECK(same[0].heterogeneity_center == doctest::Approx(0.125));

    const auto split = aggregate({record("louvain", 0.249, 0.0, 0.1), record("louvain", 0.251, 0.0, 0.1)});
    CHECK(split.size() == 2);

    const auto per_algorithm = aggregate({record("louvain", 0.5, 0.0, 0.1), record("bidir_bfs", 0.5, 0.0, 0.1)});
    CHECK(per_algorithm.size() == 2);
}

TEST_CASE("aggregation edge cases") {
    const double nan = std::nan("");
    const double ninf = -std::numeric_limits<double>::infinity();
    const auto skipped = aggregate({record("louvain", nan, 0.0, 0.5), record("louvain", 0.5, 0.0, nan),
                                    record("louvain", 0.5, nan, 0.5)});
    CHECK(skipped.empty());

    const auto regular = aggregate({record("louvain", 0.5, ninf, 0.4), record("louvain", 0.5, -0.6, 0.2)});
    REQUIRE(regular.size() == 1);
    CHECK(regular[0].count == 2);
    CHECK(regular[0].heterogeneity_center == doctest::Approx(-0.625));

    const auto only_regular = aggregate({record("louvain", 0.5, ninf, 0.4)});
    REQUIRE(only_regular.size() == 1);
    CHECK(only_regular[0].heterogeneity_center == doctest::Approx(0.125));

    CHECK_THROWS_AS(aggregate({}, 0.0, 0.25), Error);
}

TEST_CASE("default grid enumeration") {
    const GridConfig config = GridConfig::defaults();
    CHECK(config.betas.size() == 10);
    CHECK(config.temperatures.size() == 10);
    CHECK(config.betas.front().value() == doctest::Approx(2.1));
    CHECK(config.betas.back().value() == doctest::Approx(25.0));
    const auto entries = enumerate_grid(config);
    CHECK(entries.size() == 555);
    std::set<std::string> ids;
    std::set<std::uint64_t> seeds;
    for (const GridEntry &e : entries) {
        ids.insert(e.id);
        seeds.insert(e.params.seed);
        CHECK(e.params.n == 10000);
        CHECK(e.params.seed == (Rng::derive_seed(config.seed, e.config_index) ^ e.replicate));
    }
    CHECK(ids.size() == 555);
    CHECK(seeds.size() == 555);
    CHECK(entries.front().id == "girg-000-r0");
    CHECK(entries.back().params.model == Model::er);
    CHECK(entries[500].params.model == Model::chung_lu);
    const auto params = nlohmann::json::parse(entries.front().param_json());
    CHECK(params.at("model") == "girg");
}

TEST_CASE("grid configuration from JSON") {
    const GridConfig c = GridConfig::from_json(R"({"n": 500, "betas": [2.5, "inf"], "temperatures": [0.1],
                                                   "replicates": 2, "chung_lu": false})");
    CHECK(c.n == 500);
    REQUIRE(c.betas.size() == 2);
    CHECK(c.betas[1].is_uniform());
    CHECK(enumerate_grid(c).size() == 2 * (2 + 1));
    CHECK_THROWS_AS(GridConfig::from_json("[1, 2]"), Error);
    CHECK_THROWS_AS(GridConfig::from_json("{\"betas\": [\"big\"]}"), Error);
}

TEST_CASE("generate_grid writes graphs and a manifest") {
    const auto dir = scratch_dir("grid");
    GridConfig c = GridConfig::from_json(R"({"n": 800, "betas": [2.5, "inf"], "temperatures": [0.1, 0.5],
                                             "replicates": 1})");
    const auto rows = generate_grid(c, dir);
    CHECK(rows.size() == 4 + 2 + 1);
    for (const ManifestRow &row : rows) {
        CHECK(std::filesystem::exists(dir / row.file));
        CHECK(row.avg_degree == doctest::Approx(10.0).epsilon(0.15));
        CHECK(row.n >= 700);
        const IngestResult back = ingest(dir / row.file);
        CHECK(back.graph.m() == row.m);
    }
    std::ifstream manifest(dir / "manifest.csv");
    std::string line;
    std::getline(manifest, line);
    CHECK(line == kSchemaLine);
    std::getline(manifest, line);
    CHECK(line == "id,file,model,param_json,seed,replicate,n,m,avg_degree");
    std::filesystem::remove_all(dir);
}
