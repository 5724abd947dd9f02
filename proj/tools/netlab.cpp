#include "netlab/cliques.hpp"
#include "netlab/csv.hpp"
#include "netlab/error.hpp"
#include "netlab/harness.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace netlab;

namespace {

struct Output {
    std::unique_ptr<std::ofstream> file;
    std::ostream *stream = &std::cout;

    explicit Output(const std::string &path) {
        if (path.empty() || path == "-") return;
        file = std::make_unique<std::ofstream>(path);
        if (!*file) throw Error("cannot write " + path);
        stream = file.get();
    }
};

std::map<std::string, std::string> read_manifest_params(const fs::path &manifest) {
    std::map<std::string, std::string> params;
    std::ifstream in(manifest);
    if (!in) return params;
    std::string line;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto fields = csv::split(line);
        if (header.empty()) {
            header = fields;
            continue;
        }
        std::string file, json;
        for (std::size_t i = 0; i < header.size() && i < fields.size(); ++i) {
            if (header[i] == "file") file = fields[i];
            if (header[i] == "param_json") json = fields[i];
        }
        if (!file.empty()) params[file] = json;
    }
    return params;
}

// Expands directories into their *.edges files (sorted) and loads every
// admitted network; excluded inputs are reported on stderr and skipped.
std::vector<Network> load_networks(const std::vector<std::string> &inputs) {
    std::vector<std::pair<fs::path, std::string>> files;
    for (const std::string &input : inputs) {
        const fs::path path(input);
        if (fs::is_directory(path)) {
            const auto params = read_manifest_params(path / "manifest.csv");
            std::vector<fs::path> found;
            for (const auto &item : fs::directory_iterator(path))
                if (item.is_regular_file() && item.path().extension() == ".edges") found.push_back(item.path());
            std::sort(found.begin(), found.end());
            for (const fs::path &f : found) {
                const auto it = params.find(f.filename().string());
                files.emplace_back(f, it == params.end() ? std::string("{}") : it->second);
            }
        } else {
            files.emplace_back(path, "{}");
        }
    }

    std::vector<Network> networks;
    for (const auto &[path, params] : files) {
        IngestResult r = ingest(path);
        if (!r.entry.admitted()) {
            std::cerr << "skipping " << path.string() << ": " << to_string(*r.entry.excluded_reason) << '\n';
            continue;
        }
        Network net;
        net.id = r.entry.name;
        net.graph = std::move(r.graph);
        net.param_json = params;
        networks.push_back(std::move(net));
    }
    return networks;
}

std::string optional_double(const std::optional<double> &v) {
    return v ? csv::format_double(*v) : std::string("nan");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Random-network generation and algorithm cost measurements"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    double timeout_min = 30.0;
    unsigned workers = 1;
    std::string out;

    auto *generate = app.add_subcommand("generate", "Generate the model grid as edge lists plus manifest.csv");
    std::string grid_file;
    Vertex n = 10000;
    double avg_degree = 10.0;
    generate->add_option("--grid-file", grid_file, "JSON grid configuration");
    generate->add_option("--n", n, "Vertices per network")->capture_default_str();
    generate->add_option("--avg-degree", avg_degree, "Target average degree")->capture_default_str();
    generate->add_option("--seed", seed, "Base seed")->capture_default_str();
    generate->add_option("--out", out, "Output directory")->required();

    auto *measure = app.add_subcommand("measure", "Measure algorithm costs on edge-list networks");
    std::vector<std::string> inputs;
    std::vector<std::string> algorithms;
    std::uint32_t replicates = 1;
    measure->add_option("networks", inputs, "Edge-list files or directories")->required();
    measure->add_option("--algorithms", algorithms, "Subset of algorithms (default: all)");
    measure->add_option("--seed", seed, "First seed")->capture_default_str();
    measure->add_option("--replicates", replicates, "Seeds per network, counting up from --seed")
        ->capture_default_str();
    measure->add_option("--timeout-min", timeout_min, "Per-run time limit in minutes")->capture_default_str();
    measure->add_option("--workers", workers, "Worker threads (NETLAB_WORKERS overrides)")->capture_default_str();
    measure->add_option("--out", out, "Output CSV (default stdout)");

    auto *stats = app.add_subcommand("stats", "Structural parameters per network");
    stats->add_option("networks", inputs, "Edge-list files or directories")->required();
    stats->add_option("--seed", seed, "Seed for sampled distances")->capture_default_str();
    stats->add_option("--timeout-min", timeout_min, "Clique enumeration time limit in minutes")
        ->capture_default_str();
    stats->add_option("--out", out, "Output CSV (default stdout)");

    auto *aggregate_cmd = app.add_subcommand("aggregate", "Bin cost records by locality and heterogeneity");
    std::string records_file;
    double locality_width = 0.05;
    double heterogeneity_width = 0.25;
    aggregate_cmd->add_option("records", records_file, "CSV written by measure")->required();
    aggregate_cmd->add_option("--locality-width", locality_width, "Bin width on the locality axis")->capture_default_str();
    aggregate_cmd->add_option("--heterogeneity-width", heterogeneity_width, "Bin width on the heterogeneity axis")->capture_default_str();
    aggregate_cmd->add_option("--out", out, "Output CSV (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*generate) {
            GridConfig config = GridConfig::defaults();
            if (!grid_file.empty()) {
                std::ifstream in(grid_file);
                if (!in) throw Error("cannot read " + grid_file);
                std::stringstream text;
                text << in.rdbuf();
                config = GridConfig::from_json(text.str());
            }
            if (generate->count("--n")) config.n = n;
            if (generate->count("--avg-degree")) config.avg_degree = avg_degree;
            if (generate->count("--seed") || grid_file.empty()) config.seed = seed;
            const auto rows = generate_grid(config, out);
            std::cerr << "wrote " << rows.size() << " networks to " << out << '\n';
        } else if (*measure) {
            SuiteConfig config;
            if (!algorithms.empty()) {
                config.algorithms.clear();
                for (const auto &name : algorithms) config.algorithms.push_back(parse_algorithm(name));
            }
            config.seeds.clear();
            for (std::uint32_t r = 0; r < std::max<std::uint32_t>(replicates, 1); ++r) config.seeds.push_back(seed + r);
            config.timeout = std::chrono::duration<double>(timeout_min * 60.0);
            config.workers = workers;
            auto networks = load_networks(inputs);
            const auto records = run_suite(networks, config);
            Output o(out);
            write_records(*o.stream, records);
        } else if (*stats) {
            Output o(out);
            *o.stream << kSchemaLine << '\n';
            csv::write_row(*o.stream, {"network", "n", "m", "degeneracy", "closure", "weak_closure",
                                       "maximal_cliques", "clique_number", "cliques_per_edge", "clique_timed_out",
                                       "heterogeneity", "locality"});
            for (const Network &net : load_networks(inputs)) {
                StructuralOptions options;
                options.clique_deadline = Deadline::minutes(timeout_min);
                options.seed = seed;
                const StructuralReport r = structural_report(net.graph, options);
                csv::write_row(*o.stream,
                               {net.id, std::to_string(r.n), std::to_string(r.m),
                                std::to_string(r.closure.degeneracy), std::to_string(r.closure.closure),
                                std::to_string(r.closure.weak_closure),
                                std::to_string(r.cliques.maximal_clique_count),
                                std::to_string(r.cliques.clique_number),
                                csv::format_double(r.cliques.count_relative_to_m),
                                r.cliques.timed_out ? "true" : "false", csv::format_double(r.heterogeneity),
                                optional_double(r.locality)});
            }
        } else if (*aggregate_cmd) {
            std::ifstream in(records_file);
            if (!in) throw Error("cannot read " + records_file);
            const auto cells = aggregate(read_records(in), locality_width, heterogeneity_width);
            Output o(out);
            write_cells(*o.stream, cells);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
