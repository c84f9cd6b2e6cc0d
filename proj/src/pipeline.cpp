#include "orclique/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "orclique/batching.hpp"
#include "orclique/errors.hpp"
#include "orclique/solver.hpp"

namespace orclique {

const char* kernel_name(KernelChoice choice) {
    switch (choice) {
    case KernelChoice::Degeneracy: return "degeneracy";
    case KernelChoice::Oct: return "oct";
    case KernelChoice::BoundedDegree: return "dbd";
    case KernelChoice::Chordal: return "chordal";
    case KernelChoice::LongestOddCycle: return "loc";
    }
    return "?";
}

std::optional<KernelChoice> kernel_from_name(const std::string& name) {
    if (name == "degeneracy") return KernelChoice::Degeneracy;
    if (name == "oct") return KernelChoice::Oct;
    if (name == "dbd") return KernelChoice::BoundedDegree;
    if (name == "chordal") return KernelChoice::Chordal;
    if (name == "loc") return KernelChoice::LongestOddCycle;
    return std::nullopt;
}

QuerySet generate_kernel_queries(const CliqueInstance& inst, KernelChoice choice, int d) {
    switch (choice) {
    case KernelChoice::Degeneracy: return kernel_degeneracy(inst);
    case KernelChoice::Oct: return kernel_oct(inst);
    case KernelChoice::BoundedDegree: return kernel_bounded_degree(inst, d);
    case KernelChoice::Chordal: return kernel_chordal(inst);
    case KernelChoice::LongestOddCycle: return kernel_longest_odd_cycle(inst);
    }
    throw InvariantError("unknown kernel");
}

namespace {

void check_induced(const Graph& g, const Query& q) {
    const auto& src = q.source_vertices;
    const Graph& sub = q.instance.graph;
    if (static_cast<int>(src.size()) != sub.vertex_count())
        throw InvariantError("query mapping size mismatch");
    if (!std::is_sorted(src.begin(), src.end()) ||
        std::adjacent_find(src.begin(), src.end()) != src.end())
        throw InvariantError("query mapping is not a sorted vertex set");
    std::vector<int> local_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] < 0 || src[i] >= g.vertex_count())
            throw InvariantError("query mapping vertex out of range");
        local_of[static_cast<std::size_t>(src[i])] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < src.size(); ++i) {
        std::vector<int> expected;
        for (int u : g.neighbors(src[i]))
            if (local_of[static_cast<std::size_t>(u)] >= 0)
                expected.push_back(local_of[static_cast<std::size_t>(u)]);
        std::sort(expected.begin(), expected.end());
        auto got = sub.neighbors(static_cast<int>(i));
        if (!std::equal(expected.begin(), expected.end(), got.begin(), got.end()))
            throw InvariantError("query is not the induced subgraph its mapping claims");
    }
}

} // namespace

void check_query_set(const CliqueInstance& inst, KernelChoice choice, int d, const QuerySet& qs) {
    const long long n = inst.graph.vertex_count();
    const long long m = inst.graph.edge_count();
    if (qs.immediate_answer && !qs.queries.empty())
        throw InvariantError("immediate answer set alongside queries");

    long long count_bound = 0;
    switch (choice) {
    case KernelChoice::Degeneracy: count_bound = n; break;
    case KernelChoice::Oct: count_bound = n + m; break;
    case KernelChoice::BoundedDegree: count_bound = std::max(n, 1LL); break;
    case KernelChoice::Chordal: count_bound = n; break;
    case KernelChoice::LongestOddCycle: count_bound = n + 2 * m; break;
    }
    if (static_cast<long long>(qs.queries.size()) > count_bound)
        throw InvariantError("query count exceeds the kernel bound");

    long long size_bound = -1; // -1: no per-query vertex bound
    switch (choice) {
    case KernelChoice::Degeneracy: size_bound = qs.parameter_value + 1; break;
    case KernelChoice::Oct:
        size_bound = qs.immediate_answer ? -1 : qs.parameter_value + 2;
        break;
    case KernelChoice::BoundedDegree: size_bound = qs.parameter_value + d + 1; break;
    case KernelChoice::Chordal:
        size_bound = qs.immediate_answer ? -1 : qs.parameter_value + inst.k;
        break;
    case KernelChoice::LongestOddCycle: break;
    }
    for (const auto& q : qs.queries) {
        if (size_bound >= 0 && q.instance.graph.vertex_count() > size_bound)
            throw InvariantError("query size exceeds the kernel bound");
        if (q.instance.k < 1)
            throw InvariantError("query with k < 1");
        check_induced(inst.graph, q);
    }
}

RunReport run_pipeline(const CliqueInstance& inst, const RunOptions& opts) {
    auto started = std::chrono::steady_clock::now();

    QuerySet qs = generate_kernel_queries(inst, opts.kernel, opts.d);
    check_query_set(inst, opts.kernel, opts.d, qs);

    RunReport report;
    report.kernel = kernel_name(opts.kernel);
    report.parameter_value = qs.parameter_value;
    report.query_count_raw = static_cast<long long>(qs.queries.size());
    for (const auto& q : qs.queries) {
        report.max_query_vertices =
            std::max(report.max_query_vertices,
                     static_cast<long long>(q.instance.graph.vertex_count()));
        report.max_query_encoding_size =
            std::max(report.max_query_encoding_size, encoding_size(q.instance.graph));
    }

    const long long n_enc = encoding_size(inst.graph);
    const bool batching = opts.c > 0 && n_enc >= 2;
    const long long group = batching ? batch_group_size(n_enc, opts.c) : 1;
    report.query_count_batched =
        report.query_count_raw == 0 ? 0 : (report.query_count_raw + group - 1) / group;

    if (qs.immediate_answer) {
        report.answer = *qs.immediate_answer;
    } else if (qs.queries.empty()) {
        report.answer = false;
    } else if (batching && report.max_query_encoding_size >= n_enc) {
        // The kernel did not shrink anything; skip composition and solve the
        // instance outright.
        report.answer = has_clique(inst) == SolveResult::Yes;
    } else if (batching) {
        auto plan = make_batch_plan(static_cast<int>(qs.queries.size()), opts.c, n_enc);
        if (static_cast<long long>(plan.groups.size()) != report.query_count_batched)
            throw InvariantError("batch plan size does not match the count law");
        report.answer = or_of_batched_groups(qs, plan, opts.mode);
    } else {
        report.answer = or_of_queries(qs, opts.mode);
    }

    if (opts.verify)
        report.verified_agree = brute_force_has_clique(inst) == report.answer;

    if (opts.timing) {
        auto elapsed = std::chrono::steady_clock::now() - started;
        report.wall_time_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    return report;
}

void emit_queries(const QuerySet& qs, int k_star, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    nlohmann::json manifest;
    manifest["schema"] = 1;
    manifest["kernel"] = qs.parameter_name;
    manifest["parameter_value"] = qs.parameter_value;
    manifest["k_star"] = k_star;
    if (qs.immediate_answer)
        manifest["immediate_answer"] = *qs.immediate_answer ? "yes" : "no";
    else
        manifest["immediate_answer"] = nullptr;
    auto queries = nlohmann::json::array();
    for (std::size_t i = 0; i < qs.queries.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "query_%04zu.el", i);
        std::ofstream out(fs::path(dir) / name);
        serialize_edge_list(qs.queries[i].instance.graph, out);
        queries.push_back({{"file", name}, {"note", qs.queries[i].note}});
    }
    manifest["queries"] = std::move(queries);
    std::ofstream mout(fs::path(dir) / "manifest.json");
    mout << manifest.dump(2) << '\n';
}

std::string report_json(const RunReport& report) {
    nlohmann::json j;
    j["schema"] = 1;
    j["answer"] = report.answer ? "yes" : "no";
    j["kernel"] = report.kernel;
    j["parameter_value"] = report.parameter_value;
    j["query_count_raw"] = report.query_count_raw;
    j["query_count_batched"] = report.query_count_batched;
    j["max_query_vertices"] = report.max_query_vertices;
    j["max_query_encoding_size"] = report.max_query_encoding_size;
    j["wall_time_ms"] = report.wall_time_ms;
    if (report.verified_agree)
        j["verified"] = *report.verified_agree ? "agree" : "disagree";
    else
        j["verified"] = nullptr;
    return j.dump(2) + "\n";
}

void report_text(const RunReport& report, std::ostream& out) {
    out << "answer: " << (report.answer ? "yes" : "no") << '\n'
        << "kernel: " << report.kernel << " (parameter_value " << report.parameter_value << ")\n"
        << "queries: raw " << report.query_count_raw << ", batched "
        << report.query_count_batched << '\n'
        << "max query: " << report.max_query_vertices << " vertices, encoding size "
        << report.max_query_encoding_size << '\n';
    if (report.verified_agree)
        out << "verified: " << (*report.verified_agree ? "agree" : "disagree") << '\n';
}

std::string csv_row(const std::string& file, int c, const Graph& g, const RunReport& report) {
    std::ostringstream row;
    row << file << ',' << report.kernel << ',' << c << ',' << g.vertex_count() << ','
        << g.edge_count() << ',' << encoding_size(g) << ',' << report.parameter_value << ','
        << report.query_count_raw << ',' << report.query_count_batched << ','
        << report.max_query_vertices << ',' << report.max_query_encoding_size << ','
        << (report.answer ? "yes" : "no") << ','
        << (report.verified_agree ? (*report.verified_agree ? "agree" : "disagree") : "") << ','
        << report.wall_time_ms;
    return row.str();
}

std::vector<BenchEntry> read_corpus_manifest(const std::string& dir) {
    namespace fs = std::filesystem;
    auto path = fs::path(dir) / "manifest.json";
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    if (!j.contains("files") || !j["files"].is_array())
        throw ParseError(path.string() + ": missing \"files\" array");
    std::vector<BenchEntry> entries;
    for (const auto& item : j["files"]) {
        BenchEntry entry;
        entry.file = item.at("file").get<std::string>();
        entry.k = item.at("k").get<int>();
        if (entry.k < 1)
            throw ParseError(path.string() + ": k must be >= 1 for " + entry.file);
        if (item.contains("expected"))
            entry.expected = item["expected"].get<std::string>() == "yes";
        entries.push_back(std::move(entry));
    }
    return entries;
}

namespace {

bool looks_like_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok))
            continue;
        if (tok[0] == '#')
            continue;
        return tok == "c" || tok == "p" || tok == "e";
    }
    return false;
}

} // namespace

int run_bench(const std::string& corpus_dir, const BenchOptions& opts, std::ostream& out,
              std::ostream& err) {
    namespace fs = std::filesystem;
    auto entries = read_corpus_manifest(corpus_dir);
    out << kCsvHeader << '\n';
    bool had_errors = false;
    bool had_disagreement = false;
    for (const auto& entry : entries) {
        Graph g;
        try {
            std::ifstream in(fs::path(corpus_dir) / entry.file);
            if (!in)
                throw ParseError("cannot open " + entry.file);
            std::stringstream buffer;
            buffer << in.rdbuf();
            std::istringstream text(buffer.str());
            g = looks_like_dimacs(buffer.str()) ? parse_dimacs(text) : parse_edge_list(text);
        } catch (const std::exception& e) {
            err << "skipping " << entry.file << ": " << e.what() << '\n';
            had_errors = true;
            continue;
        }
        CliqueInstance inst{g, entry.k};
        for (auto kernel : opts.kernels)
            for (int c : opts.c_values) {
                RunOptions ro;
                ro.k = entry.k;
                ro.kernel = kernel;
                ro.d = opts.d;
                ro.c = c;
                ro.verify = opts.verify;
                ro.timing = opts.timing;
                auto report = run_pipeline(inst, ro);
                if (report.verified_agree && !*report.verified_agree) {
                    err << "oracle disagreement on " << entry.file << " kernel "
                        << report.kernel << " c " << c << '\n';
                    had_disagreement = true;
                }
                out << csv_row(entry.file, c, g, report) << '\n';
            }
    }
    if (had_disagreement)
        return 3;
    return had_errors ? 2 : 0;
}

} // namespace orclique
