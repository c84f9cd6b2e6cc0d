#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "orclique/kernel.hpp"
#include "orclique/query_solving.hpp"

namespace orclique {

enum class KernelChoice { Degeneracy, Oct, BoundedDegree, Chordal, LongestOddCycle };

const char* kernel_name(KernelChoice choice);
std::optional<KernelChoice> kernel_from_name(const std::string& name);

struct RunOptions {
    int k = 1;
    KernelChoice kernel = KernelChoice::Degeneracy;
    int d = 2;     // degree bound for the dbd kernel
    int c = 0;     // batching exponent; 0 disables batching
    bool verify = false;
    bool timing = false; // off: wall_time_ms is 0 so reports stay byte-identical
    ExecutionMode mode = ExecutionMode::Parallel;
};

struct RunReport {
    bool answer = false;
    std::string kernel;
    long long parameter_value = 0;
    long long query_count_raw = 0;
    long long query_count_batched = 0;
    long long max_query_vertices = 0;
    long long max_query_encoding_size = 0;
    long long wall_time_ms = 0;
    std::optional<bool> verified_agree;
};

QuerySet generate_kernel_queries(const CliqueInstance& inst, KernelChoice choice, int d);

// Enforces the per-kernel query count and size bounds, the immediate-answer
// invariant, and that every query is the induced subgraph its id mapping
// claims. Throws InvariantError.
void check_query_set(const CliqueInstance& inst, KernelChoice choice, int d, const QuerySet& qs);

// Generate, batch, solve, optionally verify. When batching is requested but
// the kernel's largest query is at least as large as the input instance, the
// kernel is not buying anything and the instance is solved directly; the
// reported counts are unaffected.
RunReport run_pipeline(const CliqueInstance& inst, const RunOptions& opts);

// Writes query_0000.el ... plus manifest.json into `dir` (created if
// missing). Emits the batched set when c >= 1.
void emit_queries(const QuerySet& qs, int k_star, const std::string& dir);

std::string report_json(const RunReport& report);
void report_text(const RunReport& report, std::ostream& out);

inline constexpr const char* kCsvHeader =
    "file,kernel,c,n_G,m_G,n,parameter_value,raw,batched,max_q_vertices,max_q_size,answer,"
    "verified,ms";

std::string csv_row(const std::string& file, int c, const Graph& g, const RunReport& report);

struct BenchEntry {
    std::string file;
    int k = 1;
    std::optional<bool> expected;
};

// Reads `<dir>/manifest.json` ({"files": [{"file": ..., "k": ...}, ...]}).
std::vector<BenchEntry> read_corpus_manifest(const std::string& dir);

struct BenchOptions {
    std::vector<KernelChoice> kernels;
    std::vector<int> c_values;
    int d = 2;
    bool verify = false;
    bool timing = false;
};

// One CSV row per (file, kernel, c) in manifest order. Unreadable entries
// are reported on `err` and skipped. Returns the process exit code.
int run_bench(const std::string& corpus_dir, const BenchOptions& opts, std::ostream& out,
              std::ostream& err);

} // namespace orclique
