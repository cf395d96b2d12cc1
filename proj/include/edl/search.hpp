#pragma once

#include <edl/canonical.hpp>
#include <edl/digraph.hpp>
#include <edl/io.hpp>
#include <edl/metrics.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace edl {

inline constexpr int kMaxSearchOrder = 8;
inline constexpr int kMaxFullArcBits = 20;

enum class Objective { max_size, min_wiener, count_extremal };
enum class SearchMode { full, row_capped, backtracking };

struct SearchConstraints {
    bool strong = false;
    /// Class sizes (a, b): class 1 is 0..a-1, class 2 is a..n-1.
    std::optional<std::pair<int, int>> bipartite;
    std::optional<int> rad_out_eq;
    std::optional<int> rad2_eq;
    std::optional<int> diameter_eq;

    friend bool operator==(const SearchConstraints &, const SearchConstraints &) = default;
};

struct SearchTask {
    int n = 0;
    SearchConstraints constraints;
    Objective objective = Objective::max_size;
    SearchMode mode = SearchMode::backtracking;
    int threads = 1;
    std::optional<std::string> checkpoint_path;
};

struct PruningStats {
    std::uint64_t nodes = 0;              // partial assignments visited
    std::uint64_t pruned_degree = 0;      // subtrees cut by degree caps
    std::uint64_t pruned_distance = 0;    // subtrees cut by distance monotonicity
    std::uint64_t rejected_degree = 0;    // leaves failing degree caps or bipartiteness
    std::uint64_t rejected_strong = 0;
    std::uint64_t rejected_distance = 0;  // leaves failing radius / diameter equalities
    std::uint64_t feasible = 0;

    friend bool operator==(const PruningStats &, const PruningStats &) = default;
};

struct ExtremalCertificate {
    DenseDigraph digraph;   // canonical form
    MetricSummary metrics;
    SearchConstraints constraints;
    int n = 0;
    std::uint64_t labeled_count = 0;
    std::string hash;
};

struct SearchReport {
    SearchTask task;
    std::uint64_t candidates_examined = 0;
    /// Arc count, Wiener index, or feasible count; empty when nothing is feasible.
    std::optional<std::int64_t> extremal_value;
    std::uint64_t extremal_labeled_count = 0;
    std::vector<ExtremalCertificate> iso_classes;
    std::int64_t wall_time_ms = 0;
    PruningStats pruning;
    std::uint64_t shards = 0;
    std::uint64_t shards_resumed = 0;
};

std::string objective_name(Objective o);
Objective parse_objective(const std::string & name);
std::string mode_name(SearchMode m);
SearchMode parse_mode(const std::string & name);

/// Throws DomainError or LimitError when the task is malformed or infeasible.
void validate_task(const SearchTask & task);

/// Reference predicate, computed from the full metric summary. Class sizes
/// are matched up to relabelling.
bool satisfies(const DenseDigraph & d, const SearchConstraints & c);

/// Exhaustive search. Pruning only uses necessary conditions of the constraints.
SearchReport enumerate(const SearchTask & task);

/// Calls `visit` on every feasible labelled digraph, single-threaded, in
/// enumeration order. Returns the number of candidates examined.
std::uint64_t for_each_feasible(const SearchTask & task, const std::function<void(const DenseDigraph &)> & visit);

/// Groups digraphs by canonical form; classes ordered by canonical adjacency string.
std::vector<IsoClass> classify_extremal(const std::vector<DenseDigraph> & witnesses);

ExtremalCertificate make_certificate(const DenseDigraph & d, int n, const SearchConstraints & c, std::uint64_t labeled_count);
std::string certificate_hash(const ExtremalCertificate & cert);

struct WitnessCheck {
    bool ok = true;
    std::vector<std::string> mismatches;   // names of the failing fields
};

WitnessCheck verify_witness(const ExtremalCertificate & cert);

Json to_json(const SearchConstraints & c);
SearchConstraints constraints_from_json(const Json & j);
/// Task echo; worker count and checkpoint location are excluded.
Json to_json(const SearchTask & task);
SearchTask task_from_json(const Json & j);
Json to_json(const PruningStats & p);
Json to_json(const ExtremalCertificate & cert);
ExtremalCertificate certificate_from_json(const Json & j);
/// Report JSON; wall_time_ms is emitted only when include_timing is set.
Json to_json(const SearchReport & report, bool include_timing = true);

/// Checkpoint file location: EDL_CHECKPOINT_DIR (if set) joined with the
/// file name of `requested`, or `requested` itself.
std::optional<std::string> checkpoint_location(const SearchTask & task);

} // namespace edl
