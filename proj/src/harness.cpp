#include "netlab/harness.hpp"

#include "netlab/cliques.hpp"
#include "netlab/community.hpp"
#include "netlab/csv.hpp"
#include "netlab/error.hpp"
#include "netlab/kernelization.hpp"
#include "netlab/locality.hpp"
#include "netlab/rng.hpp"
#include "netlab/search.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

namespace netlab {

namespace {

using nlohmann::json;

const std::vector<std::string> kRecordColumns = {"network", "algorithm", "param_json", "seed", "cost",
                                                 "base", "exponent", "wall_time_s", "timed_out", "locality",
                                                 "heterogeneity", "n", "m"};

bool is_skipped_line(const std::string &line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#' || line[first] == '%';
}

std::uint64_t parse_u64(const std::string &text) {
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
        value = std::stoull(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size() || text.empty() || text[0] == '-') throw Error("malformed integer '" + text + "'");
    return value;
}

bool same_double(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

void run_pool(std::size_t tasks, unsigned workers, const std::function<void(std::size_t)> &task) {
    std::atomic<std::size_t> next{0};
    auto loop = [&] {
        for (std::size_t i = next++; i < tasks; i = next++) task(i);
    };
    workers = static_cast<unsigned>(std::min<std::size_t>(std::max(workers, 1u), std::max<std::size_t>(tasks, 1)));
    if (workers == 1) {
        loop();
        return;
    }
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < workers; ++i) threads.emplace_back(loop);
    for (auto &t : threads) t.join();
}

json parse_params(const std::string &text) {
    try {
        json params = json::parse(text);
        if (params.is_object()) return params;
    } catch (const json::exception &) {
    }
    return json{{"params", text}};
}

} // namespace

std::string to_string(ExclusionReason reason) {
    switch (reason) {
    case ExclusionReason::tree: return "tree";
    case ExclusionReason::dense: return "dense";
    case ExclusionReason::empty: return "empty";
    }
    return "unknown";
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_edge_list(std::istream &in) {
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_skipped_line(line)) continue;
        std::istringstream tokens(line);
        std::string a, b;
        tokens >> a >> b;
        try {
            std::size_t used_a = 0, used_b = 0;
            const std::int64_t u = std::stoll(a, &used_a);
            const std::int64_t v = std::stoll(b, &used_b);
            if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing characters");
            edges.emplace_back(u, v);
        } catch (const std::exception &) {
            throw Error("line " + std::to_string(line_no) + ": expected two integer vertex ids");
        }
    }
    return edges;
}

IngestResult ingest_stream(std::istream &in, const std::string &name, const std::string &path) {
    IngestResult result;
    result.entry.name = name;
    result.entry.path = path;
    const auto pairs = parse_edge_list(in);
    if (pairs.empty()) {
        result.entry.excluded_reason = ExclusionReason::empty;
        return result;
    }
    result.graph = largest_component(build_graph(pairs));
    const Graph &g = result.graph;
    result.entry.n = g.n();
    result.entry.m = g.m();
    result.entry.density = g.density();
    if (g.m() == 0) result.entry.excluded_reason = ExclusionReason::empty;
    else if (g.m() + 1 == g.n()) result.entry.excluded_reason = ExclusionReason::tree;
    else if (g.density() >= 0.1) result.entry.excluded_reason = ExclusionReason::dense;
    return result;
}

IngestResult ingest(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path.string());
    return ingest_stream(in, path.stem().string(), path.string());
}

void write_edge_list(std::ostream &out, const Graph &g) {
    for (const EdgeRef &e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const std::filesystem::path &path, const Graph &g) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    write_edge_list(out, g);
    if (!out) throw Error("write failed for " + path.string());
}

std::string to_string(Algorithm algorithm) {
    switch (algorithm) {
    case Algorithm::bidir_bfs: return "bidir_bfs";
    case Algorithm::ifub_hd: return "ifub_hd";
    case Algorithm::ifub_foursweep_hd: return "ifub_foursweep_hd";
    case Algorithm::vc_dominance: return "vc_dominance";
    case Algorithm::louvain: return "louvain";
    case Algorithm::max_cliques: return "max_cliques";
    case Algorithm::chromatic_kernel: return "chromatic_kernel";
    }
    return "unknown";
}

std::string to_string(CostBase base) { return base == CostBase::n ? "n" : "m"; }

Algorithm parse_algorithm(const std::string &name) {
    for (Algorithm a : all_algorithms())
        if (to_string(a) == name) return a;
    throw Error("unknown algorithm '" + name + "'");
}

const std::vector<Algorithm> &all_algorithms() {
    static const std::vector<Algorithm> list = {Algorithm::bidir_bfs,    Algorithm::ifub_hd,
                                                Algorithm::ifub_foursweep_hd, Algorithm::vc_dominance,
                                                Algorithm::louvain,      Algorithm::max_cliques,
                                                Algorithm::chromatic_kernel};
    return list;
}

CostBase cost_base(Algorithm algorithm) {
    return algorithm == Algorithm::bidir_bfs || algorithm == Algorithm::max_cliques ? CostBase::m : CostBase::n;
}

bool operator==(const CostRecord &a, const CostRecord &b) {
    return a.network == b.network && a.algorithm == b.algorithm && a.param_json == b.param_json &&
           a.seed == b.seed && same_double(a.cost, b.cost) && a.base == b.base &&
           same_double(a.exponent, b.exponent) && same_double(a.wall_time_s, b.wall_time_s) &&
           a.timed_out == b.timed_out && same_double(a.locality, b.locality) &&
           same_double(a.heterogeneity, b.heterogeneity) && a.n == b.n && a.m == b.m;
}

void write_records(std::ostream &out, const std::vector<CostRecord> &records) {
    out << kSchemaLine << '\n';
    csv::write_row(out, kRecordColumns);
    for (const CostRecord &r : records) {
        csv::write_row(out, {r.network, r.algorithm, r.param_json, std::to_string(r.seed), csv::format_double(r.cost),
                             r.base, csv::format_double(r.exponent), csv::format_double(r.wall_time_s),
                             r.timed_out ? "true" : "false", csv::format_double(r.locality),
                             csv::format_double(r.heterogeneity), std::to_string(r.n), std::to_string(r.m)});
    }
}

std::vector<CostRecord> read_records(std::istream &in) {
    std::vector<CostRecord> records;
    std::string line;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto fields = csv::split(line);
        if (!header_seen) {
            if (fields != kRecordColumns) throw Error("unexpected CSV header on line " + std::to_string(line_no));
            header_seen = true;
            continue;
        }
        if (fields.size() != kRecordColumns.size())
            throw Error("line " + std::to_string(line_no) + ": expected " + std::to_string(kRecordColumns.size()) +
                        " fields");
        try {
            CostRecord r;
            r.network = fields[0];
            r.algorithm = fields[1];
            r.param_json = fields[2];
            r.seed = parse_u64(fields[3]);
            r.cost = csv::parse_double(fields[4]);
            r.base = fields[5];
            r.exponent = csv::parse_double(fields[6]);
            r.wall_time_s = csv::parse_double(fields[7]);
            if (fields[8] != "true" && fields[8] != "false") throw Error("timed_out must be true or false");
            r.timed_out = fields[8] == "true";
            r.locality = csv::parse_double(fields[9]);
            r.heterogeneity = csv::parse_double(fields[10]);
            r.n = static_cast<Vertex>(parse_u64(fields[11]));
            r.m = parse_u64(fields[12]);
            records.push_back(std::move(r));
        } catch (const Error &e) {
            throw Error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!header_seen) throw Error("missing CSV header");
    return records;
}

void annotate(Network &network, std::uint64_t seed) {
    const Graph &g = network.graph;
    if (!network.heterogeneity) network.heterogeneity = g.n() > 0 ? heterogeneity(g) : std::nan("");
    if (!network.locality) {
        try {
            LocalityOptions options;
            options.seed = seed;
            network.locality = locality(g, options).locality;
        } catch (const Error &) {
            network.locality = std::nan("");
        }
    }
}

CostRecord measure(const Network &network, Algorithm algorithm, std::uint64_t seed,
                   std::chrono::duration<double> timeout, std::uint32_t bidir_pairs) {
    const Graph &g = network.graph;
    CostRecord r;
    r.network = network.id;
    r.algorithm = to_string(algorithm);
    r.seed = seed;
    r.base = to_string(cost_base(algorithm));
    r.n = g.n();
    r.m = g.m();
    r.locality = network.locality.value_or(std::nan(""));
    r.heterogeneity = network.heterogeneity.value_or(std::nan(""));

    json params = parse_params(network.param_json);
    const Deadline deadline = Deadline::after(timeout);
    const Stopwatch watch;
    try {
        switch (algorithm) {
        case Algorithm::bidir_bfs: {
            params["pairs"] = bidir_pairs;
            const BidirExperiment e = bidir_cost_experiment(g, bidir_pairs, seed, deadline);
            r.cost = e.mean_cost;
            r.timed_out = e.timed_out;
            break;
        }
        case Algorithm::ifub_hd:
        case Algorithm::ifub_foursweep_hd: {
            IfubBudget budget;
            budget.deadline = deadline;
            const DiameterResult d =
                algorithm == Algorithm::ifub_hd ? ifub_hd(g, budget) : ifub_foursweep_hd(g, budget);
            r.cost = static_cast<double>(d.bfs_count);
            r.timed_out = d.timed_out;
            params["diameter"] = d.diameter;
            break;
        }
        case Algorithm::vc_dominance:
            r.cost = vc_dominance_kernel(g).kernel_size;
            break;
        case Algorithm::louvain: {
            LouvainOptions options;
            options.deadline = deadline;
            params["order"] = "ascending";
            const LocalSearchResult l = louvain_first_phase(g, options);
            r.cost = static_cast<double>(l.iterations);
            r.timed_out = l.timed_out;
            break;
        }
        case Algorithm::max_cliques: {
            const CliqueStats s = enumerate_maximal_cliques(g, deadline);
            r.cost = static_cast<double>(s.maximal_clique_count);
            r.timed_out = s.timed_out;
            params["clique_number"] = s.clique_number;
            break;
        }
        case Algorithm::chromatic_kernel: {
            const CliqueStats s = enumerate_maximal_cliques(g, deadline);
            const std::uint32_t omega = std::max<std::uint32_t>(s.clique_number, 2);
            r.cost = omega_core_kernel(g, omega).kernel_size;
            r.timed_out = s.timed_out;
            params["clique_number"] = s.clique_number;
            break;
        }
        }
        const double base = cost_base(algorithm) == CostBase::n ? static_cast<double>(g.n()) : static_cast<double>(g.m());
        r.exponent = cost_exponent(r.cost, base);
    } catch (const std::exception &e) {
        r.cost = std::nan("");
        r.exponent = std::nan("");
        params["error"] = e.what();
    }
    r.wall_time_s = watch.seconds();
    r.param_json = params.dump();
    return r;
}

unsigned effective_workers(unsigned requested) {
    if (const char *env = std::getenv("NETLAB_WORKERS")) {
        try {
            const unsigned long value = std::stoul(env);
            if (value > 0) return static_cast<unsigned>(value);
        } catch (const std::exception &) {
        }
    }
    return std::max(requested, 1u);
}

std::vector<CostRecord> run_suite(std::vector<Network> &networks, const SuiteConfig &config) {
    const unsigned workers = effective_workers(config.workers);
    run_pool(networks.size(), workers, [&](std::size_t i) { annotate(networks[i]); });

    struct Task {
        std::size_t network;
        Algorithm algorithm;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < networks.size(); ++i)
        for (Algorithm a : config.algorithms)
            for (std::uint64_t s : config.seeds) tasks.push_back({i, a, s});

    std::vector<CostRecord> records(tasks.size());
    run_pool(tasks.size(), workers, [&](std::size_t i) {
        const Task &t = tasks[i];
        records[i] = measure(networks[t.network], t.algorithm, t.seed, config.timeout, config.bidir_pairs);
    });
    std::stable_sort(records.begin(), records.end(), [](const CostRecord &a, const CostRecord &b) {
        return std::tie(a.network, a.algorithm, a.seed) < std::tie(b.network, b.algorithm, b.seed);
    });
    return records;
}

std::vector<BinnedCell> aggregate(const std::vector<CostRecord> &records, double locality_width,
                                  double heterogeneity_width) {
    if (!(locality_width > 0) || !(heterogeneity_width > 0)) throw Error("bin widths must be positive");
    auto bin = [](double v, double width) { return static_cast<std::int64_t>(std::floor(v / width)); };

    std::vector<const CostRecord *> usable;
    std::optional<std::int64_t> lowest_het;
    for (const CostRecord &r : records) {
        if (std::isnan(r.exponent) || std::isnan(r.locality) || std::isnan(r.heterogeneity)) continue;
        if (std::isinf(r.locality) || r.heterogeneity == INFINITY) continue;
        usable.push_back(&r);
        if (std::isfinite(r.heterogeneity)) {
            const std::int64_t b = bin(r.heterogeneity, heterogeneity_width);
            lowest_het = lowest_het ? std::min(*lowest_het, b) : b;
        }
    }

    struct Sum {
        double exponent = 0.0;
        std::uint64_t count = 0;
    };
    std::map<std::tuple<std::string, std::int64_t, std::int64_t>, Sum> cells;
    for (const CostRecord *r : usable) {
        const std::int64_t het = std::isfinite(r->heterogeneity) ? bin(r->heterogeneity, heterogeneity_width)
                                                                 : lowest_het.value_or(0);
        Sum &s = cells[{r->algorithm, bin(r->locality, locality_width), het}];
        s.exponent += r->exponent;
        ++s.count;
    }

    std::vector<BinnedCell> out;
    for (const auto &[key, sum] : cells) {
        BinnedCell cell;
        cell.algorithm = std::get<0>(key);
        cell.locality_center = (static_cast<double>(std::get<1>(key)) + 0.5) * locality_width;
        cell.heterogeneity_center = (static_cast<double>(std::get<2>(key)) + 0.5) * heterogeneity_width;
        cell.count = sum.count;
        cell.mean_exponent = sum.exponent / static_cast<double>(sum.count);
        out.push_back(cell);
    }
    return out;
}

void write_cells(std::ostream &out, const std::vector<BinnedCell> &cells) {
    out << kSchemaLine << '\n';
    csv::write_row(out, {"algorithm", "locality_center", "heterogeneity_center", "count", "mean_exponent"});
    for (const BinnedCell &c : cells)
        csv::write_row(out, {c.algorithm, csv::format_double(c.locality_center),
                             csv::format_double(c.heterogeneity_center), std::to_string(c.count),
                             csv::format_double(c.mean_exponent)});
}

GridConfig GridConfig::defaults() {
    GridConfig config;
    for (int i = 0; i < 10; ++i) config.betas.emplace_back(2.1 * std::pow(25.0 / 2.1, i / 9.0));
    config.temperatures = {0.0, 0.1, 0.3, 0.5, 0.62, 0.7, 0.76, 0.82, 0.9, 0.97};
    return config;
}

GridConfig GridConfig::from_json(const std::string &text) {
    GridConfig config = defaults();
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception &e) {
        throw Error(std::string("grid file: ") + e.what());
    }
    if (!doc.is_object()) throw Error("grid file must hold a JSON object");
    try {
        if (doc.contains("n")) config.n = doc["n"].get<Vertex>();
        if (doc.contains("avg_degree")) config.avg_degree = doc["avg_degree"].get<double>();
        if (doc.contains("betas")) {
            config.betas.clear();
            for (const json &b : doc["betas"]) {
                if (b.is_string() && b.get<std::string>() == "inf") config.betas.push_back(Beta::uniform());
                else config.betas.emplace_back(b.get<double>());
            }
        }
        if (doc.contains("temperatures")) config.temperatures = doc["temperatures"].get<std::vector<double>>();
        if (doc.contains("chung_lu")) config.chung_lu = doc["chung_lu"].get<bool>();
        if (doc.contains("erdos_renyi")) config.erdos_renyi = doc["erdos_renyi"].get<bool>();
        if (doc.contains("replicates")) config.replicates = doc["replicates"].get<std::uint32_t>();
        if (doc.contains("seed")) config.seed = doc["seed"].get<std::uint64_t>();
        if (doc.contains("dimension")) config.dimension = doc["dimension"].get<unsigned>();
    } catch (const json::exception &e) {
        throw Error(std::string("grid file: ") + e.what());
    }
    return config;
}

std::string GridEntry::param_json() const {
    json j;
    j["model"] = to_string(params.model);
    j["n"] = params.n;
    j["avg_degree"] = params.target_avg_degree;
    if (params.model != Model::er) {
        if (params.beta.is_uniform()) j["beta"] = "inf";
        else j["beta"] = params.beta.value();
    }
    if (params.model == Model::girg) {
        j["temperature"] = params.temperature;
        j["dimension"] = params.dimension;
        j["ground_space"] = to_string(params.ground_space);
    }
    j["seed"] = params.seed;
    j["replicate"] = replicate;
    return j.dump();
}

std::vector<GridEntry> enumerate_grid(const GridConfig &config) {
    std::vector<GeneratorParams> configs;
    GeneratorParams base;
    base.n = config.n;
    base.target_avg_degree = config.avg_degree;
    base.dimension = config.dimension;
    for (const Beta &beta : config.betas) {
        for (double t : config.temperatures) {
            GeneratorParams p = base;
            p.model = Model::girg;
            p.beta = beta;
            p.temperature = t;
            configs.push_back(p);
        }
    }
    if (config.chung_lu) {
        for (const Beta &beta : config.betas) {
            GeneratorParams p = base;
            p.model = Model::chung_lu;
            p.beta = beta;
            configs.push_back(p);
        }
    }
    if (config.erdos_renyi) {
        GeneratorParams p = base;
        p.model = Model::er;
        configs.push_back(p);
    }

    std::vector<GridEntry> entries;
    for (std::uint32_t c = 0; c < configs.size(); ++c) {
        const std::uint64_t config_seed = Rng::derive_seed(config.seed, c);
        for (std::uint32_t r = 0; r < config.replicates; ++r) {
            GridEntry e;
            e.params = configs[c];
            e.params.seed = config_seed ^ r;
            e.replicate = r;
            e.config_index = c;
            char id[64];
            std::snprintf(id, sizeof id, "%s-%03u-r%u", to_string(e.params.model).c_str(), c, r);
            e.id = id;
            entries.push_back(std::move(e));
        }
    }
    return entries;
}

Graph generate_entry(const GridEntry &entry, std::optional<double> weight_constant) {
    const Graph g = weight_constant ? generate(entry.params, *weight_constant) : generate(entry.params);
    return largest_component(g);
}

std::vector<ManifestRow> generate_grid(const GridConfig &config, const std::filesystem::path &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());

    std::vector<ManifestRow> rows;
    std::optional<double> c;
    std::optional<std::uint32_t> calibrated_for;
    for (const GridEntry &entry : enumerate_grid(config)) {
        if (calibrated_for != entry.config_index) {
            const GeneratorParams &p = entry.params;
            c = p.model == Model::er ? std::nullopt
                                     : std::optional<double>(calibrate_weight_constant(
                                           p.n, p.beta, p.target_avg_degree, p.model, p.temperature, p.dimension));
            calibrated_for = entry.config_index;
        }
        const Graph g = generate_entry(entry, c);
        ManifestRow row;
        row.entry = entry;
        row.file = entry.id + ".edges";
        row.n = g.n();
        row.m = g.m();
        row.avg_degree = g.n() > 0 ? 2.0 * static_cast<double>(g.m()) / g.n() : 0.0;
        write_edge_list(dir / row.file, g);
        rows.push_back(std::move(row));
    }
    std::ofstream out(dir / "manifest.csv");
    if (!out) throw Error("cannot write " + (dir / "manifest.csv").string());
    write_manifest(out, rows);
    return rows;
}

void write_manifest(std::ostream &out, const std::vector<ManifestRow> &rows) {
    out << kSchemaLine << '\n';
    csv::write_row(out, {"id", "file", "model", "param_json", "seed", "replicate", "n", "m", "avg_degree"});
    for (const ManifestRow &r : rows)
        csv::write_row(out, {r.entry.id, r.file, to_string(r.entry.params.model), r.entry.param_json(),
                             std::to_string(r.entry.params.seed), std::to_string(r.entry.replicate),
                             std::to_string(r.n), std::to_string(r.m), csv::format_double(r.avg_degree)});
}

} // namespace netlab
