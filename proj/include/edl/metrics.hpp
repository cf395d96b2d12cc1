#pragma once

#include <edl/digraph.hpp>
#include <edl/io.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace edl {

/// Distance, eccentricity or radius that is infinite.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

struct DistanceMatrix {
    int n = 0;
    std::vector<int> d;   // row-major, d[from * n + to]

    int at(int from, int to) const { return d[static_cast<std::size_t>(from) * n + to]; }
    bool reachable(int from, int to) const { return at(from, to) != kUnreachable; }
};

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    friend bool operator==(const Rational &, const Rational &) = default;
};

/// Distance-based invariants of a digraph. Values that may be infinite use
/// kUnreachable; the radius is carried doubled (rad2) so that half-integral
/// radii stay exact.
struct MetricSummary {
    int n = 0;
    int arc_count = 0;
    std::vector<int> ecc_out;
    std::vector<int> ecc_in;
    int rad_out = kUnreachable;
    int rad_in = kUnreachable;
    int rad2 = kUnreachable;
    int diameter = kUnreachable;
    std::optional<std::int64_t> wiener;         // empty when not strong
    std::optional<Rational> avg_distance;       // W / (n^2 - n), reduced
    std::vector<int> outdeg;
    std::vector<int> indeg;
    std::vector<int> totaldeg;
    bool strong = false;
    bool bipartite = false;

    friend bool operator==(const MetricSummary &, const MetricSummary &) = default;
};

DistanceMatrix distance_matrix(const DenseDigraph & d);
MetricSummary metric_summary(const DenseDigraph & d);
bool is_strong(const DenseDigraph & d);

/// Outradius only, without building the full summary.
int outradius(const DenseDigraph & d);

/// Vertices x != v without an arc v -> x.
VertexSet co_out_neighborhood(const DenseDigraph & d, int v);

/// Decimal rendering of rad2 / 2, e.g. "2.5", or "inf".
std::string radius_string(int rad2);

Json to_json(const MetricSummary & m);
MetricSummary metric_summary_from_json(const Json & j);

enum class PreconditionKind { outradius_mismatch, not_bipartite, not_strong, odd_radius, radius_too_small };

class PreconditionError : public DomainError {
public:
    PreconditionError(PreconditionKind kind, const std::string & what) : DomainError(what), kind_(kind) {}
    PreconditionKind kind() const noexcept { return kind_; }

private:
    PreconditionKind kind_;
};

struct VertexDegreeCheck {
    int vertex = 0;
    int out_degree = 0;
    int in_degree = 0;
    int total_degree = 0;
    int bound = 0;
    bool within_bound = true;
    bool attains_bound = false;
    /// Only for vertices attaining the bound: in/out-degree split required for equality.
    std::optional<bool> degree_split_matches;
    /// Only for vertices attaining the bound: a shortest path to a vertex at
    /// distance r and one to a vertex at distance r-1 share no vertex but v.
    std::optional<bool> disjoint_paths_found;
    /// Only for the bipartite check with n <= 8: some such endpoint pair has
    /// every pair of their shortest paths disjoint.
    std::optional<bool> all_shortest_paths_disjoint;
};

struct DegreeBoundReport {
    int r = 0;
    std::vector<VertexDegreeCheck> vertices;
    int violations = 0;
    int attaining = 0;
};

/// Every vertex of a digraph with outradius r has total degree at most
/// 2(n-1) - (2r-3). Throws PreconditionError when rad+(d) != r.
DegreeBoundReport check_outradius_degree_bound(const DenseDigraph & d, int r);

/// Bipartite strong digraphs with even outradius r >= 4: total degree of
/// v is at most 2|opposite class| - (r-2).
DegreeBoundReport check_bipartite_degree_bound(const DenseDigraph & d, const VertexPartition & partition, int r);

inline constexpr int kMaxCliqueOrder = 20;

/// Order of the largest bidirected clique (n <= 20).
int clique_number(const DenseDigraph & d);

/// Masks (excluding the source) of every shortest path from `from` to `to`.
/// Throws LimitError past `cap` paths.
std::vector<VertexSet> shortest_path_masks(const DenseDigraph & d, int from, int to, std::size_t cap = 1'000'000);

Json to_json(const DegreeBoundReport & report);

} // namespace edl
