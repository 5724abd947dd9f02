#pragma once

#include "netlab/budget.hpp"
#include "netlab/generators.hpp"
#include "netlab/graph.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace netlab {

// ---- corpus ingestion -------------------------------------------------------

enum class ExclusionReason { tree, dense, empty };
std::string to_string(ExclusionReason reason);

struct CorpusEntry {
    std::string path;
    std::string name;
    Vertex n = 0;           ///< after reduction to the largest component
    std::uint64_t m = 0;
    double density = 0.0;
    std::optional<ExclusionReason> excluded_reason;

    bool admitted() const { return !excluded_reason; }
};

struct IngestResult {
    CorpusEntry entry;
    Graph graph; ///< largest component; empty when the input had no edges
};

/// Whitespace-separated integer pairs, one edge per line. Lines starting
/// with '#' or '%' and blank lines are skipped; tokens after the first two
/// are ignored. Throws Error naming the line number of a malformed line.
std::vector<std::pair<std::int64_t, std::int64_t>> parse_edge_list(std::istream &in);

/// Parse, simplify, keep the largest component and classify exclusions:
/// empty (no edges), tree (m = n - 1), dense (density >= 0.1).
IngestResult ingest(const std::filesystem::path &path);
IngestResult ingest_stream(std::istream &in, const std::string &name, const std::string &path = {});

void write_edge_list(std::ostream &out, const Graph &g);
/// Throws Error when the file cannot be written.
void write_edge_list(const std::filesystem::path &path, const Graph &g);

// ---- measurements -----------------------------------------------------------

enum class Algorithm { bidir_bfs, ifub_hd, ifub_foursweep_hd, vc_dominance, louvain, max_cliques, chromatic_kernel };
enum class CostBase { n, m };

std::string to_string(Algorithm algorithm);
std::string to_string(CostBase base);
Algorithm parse_algorithm(const std::string &name);
const std::vector<Algorithm> &all_algorithms();
CostBase cost_base(Algorithm algorithm);

struct CostRecord {
    std::string network;
    std::string algorithm;
    std::string param_json = "{}";
    std::uint64_t seed = 0;
    double cost = 0.0;
    std::string base = "n";
    double exponent = 0.0;
    double wall_time_s = 0.0;
    bool timed_out = false;
    double locality = 0.0;
    double heterogeneity = 0.0;
    Vertex n = 0;
    std::uint64_t m = 0;

    /// Field-wise equality where NaN equals NaN.
    friend bool operator==(const CostRecord &a, const CostRecord &b);
};

inline constexpr const char *kSchemaLine = "# netlab-schema=1";

/// Schema comment line, header row, one row per record.
void write_records(std::ostream &out, const std::vector<CostRecord> &records);
/// Inverse of write_records. Comment lines are skipped; the header must
/// match the expected columns. Throws Error on malformed rows.
std::vector<CostRecord> read_records(std::istream &in);

struct Network {
    std::string id;
    Graph graph;
    std::string param_json = "{}";
    /// Computed on demand by run_suite when missing; NaN if undefined.
    std::optional<double> locality;
    std::optional<double> heterogeneity;
};

/// Fills in locality and heterogeneity when absent.
void annotate(Network &network, std::uint64_t seed = 0);

struct SuiteConfig {
    std::vector<Algorithm> algorithms = all_algorithms();
    std::vector<std::uint64_t> seeds{0};
    std::chrono::duration<double> timeout = std::chrono::minutes(30);
    unsigned workers = 1;
    std::uint32_t bidir_pairs = 100;
};

/// One measurement under a cooperative deadline. Exceptions thrown by the
/// algorithm become a row with NaN cost and exponent and an "error" entry in
/// param_json; a missed deadline gives timed_out with the partial counter.
CostRecord measure(const Network &network, Algorithm algorithm, std::uint64_t seed,
                   std::chrono::duration<double> timeout, std::uint32_t bidir_pairs = 100);

/// One record per (network, algorithm, seed), sorted by (network, algorithm,
/// seed). Tasks run on a pool of `workers` threads, overridden by the
/// NETLAB_WORKERS environment variable. Networks without metrics are
/// annotated first.
std::vector<CostRecord> run_suite(std::vector<Network> &networks, const SuiteConfig &config);

/// Worker count after applying NETLAB_WORKERS; at least 1.
unsigned effective_workers(unsigned requested);

// ---- aggregation ------------------------------------------------------------

struct BinnedCell {
    std::string algorithm;
    double locality_center = 0.0;
    double heterogeneity_center = 0.0;
    std::uint64_t count = 0;
    double mean_exponent = 0.0;
};

/// Groups records per algorithm into bins floor(value / width) and averages
/// the exponent. Heterogeneity -inf joins the lowest finite heterogeneity
/// bin; records with NaN exponent, locality or heterogeneity are skipped.
std::vector<BinnedCell> aggregate(const std::vector<CostRecord> &records, double locality_width = 0.05,
                                  double heterogeneity_width = 0.25);

void write_cells(std::ostream &out, const std::vector<BinnedCell> &cells);

// ---- generated grid ---------------------------------------------------------

struct GridConfig {
    Vertex n = 10000;
    double avg_degree = 10.0;
    std::vector<Beta> betas;          ///< GIRG and Chung-Lu exponents
    std::vector<double> temperatures; ///< GIRG temperatures
    bool chung_lu = true;
    bool erdos_renyi = true;
    std::uint32_t replicates = 5;
    std::uint64_t seed = 1;
    unsigned dimension = 2;

    /// 10 betas log-spaced in [2.1, 25], 10 temperatures in [0, 0.97].
    static GridConfig defaults();
    /// JSON object; missing keys keep their defaults. "betas" entries may be
    /// numbers or the string "inf" for uniform weights.
    static GridConfig from_json(const std::string &text);
};

struct GridEntry {
    std::string id;
    GeneratorParams params;
    std::uint32_t replicate = 0;
    std::uint32_t config_index = 0;

    std::string param_json() const;
};

/// All (configuration, replicate) entries in a fixed order. The seed of a
/// replicate is the configuration's base seed XOR the replicate index.
std::vector<GridEntry> enumerate_grid(const GridConfig &config);

struct ManifestRow {
    GridEntry entry;
    std::string file;
    Vertex n = 0; ///< after reduction to the largest component
    std::uint64_t m = 0;
    double avg_degree = 0.0;
};

/// Generates one graph per entry, calibrating each configuration once and
/// keeping its largest component.
Graph generate_entry(const GridEntry &entry, std::optional<double> weight_constant = std::nullopt);

/// Writes <dir>/<id>.edges for every entry plus <dir>/manifest.csv and
/// returns the manifest rows.
std::vector<ManifestRow> generate_grid(const GridConfig &config, const std::filesystem::path &dir);

void write_manifest(std::ostream &out, const std::vector<ManifestRow> &rows);

} // namespace netlab
