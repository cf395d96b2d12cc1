#pragma once

#include <edl/digraph.hpp>
#include <edl/io.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace edl {

/// Sizes n_0..n_r of the distance layers from a vertex of out-eccentricity r.
struct LayerProfile {
    std::vector<int> sizes;   // sizes[0] == 1

    int r() const { return static_cast<int>(sizes.size()) - 1; }
    int order() const;
    int even_total() const;   // n_e
    int odd_total() const;    // n_o
};

/// (n_e - 1) n_o + sum_i n_i n_{i+1}.
std::int64_t layer_profile_size(const LayerProfile & p);

/// n_1 + sum_{i=1}^{r-1} n_i n_{i+1}, for chain = (n_1, ..., n_r).
std::int64_t chain_value(const std::vector<int> & chain);

/// n_r = 1, every entry outside some window j, j+1, j+2 (1 <= j <= r-2)
/// equals 1, and |n_{j+1} + 1 - (n_j + n_{j+2})| <= 1.
bool matches_chain_characterization(const std::vector<int> & chain);

/// r + 2(n-r-1) + floor((n-r-1)^2 / 4).
std::int64_t chain_bound(int n, int r);

struct ChainOptimum {
    std::int64_t value = 0;
    std::vector<std::vector<int>> optima;   // lexicographic order
    bool all_match_characterization = false;
};

inline constexpr std::uint64_t kMaxCompositions = 20'000'000;

/// Exhaustive maximisation of chain_value over compositions of n-1 into r
/// positive parts. Requires n > r >= 3.
ChainOptimum maximize_chain(int n, int r);

/// Every composition of n-1 into r parts that matches the characterization.
std::vector<std::vector<int>> characterized_chains(int n, int r);

/// Calls `visit` on every composition of `total` into `parts` positive parts,
/// in lexicographic order.
void for_each_composition(int total, int parts, const std::function<void(const std::vector<int> &)> & visit);

struct BicliqueResult {
    VertexSet side1 = 0;   // subset of class 1
    VertexSet side2 = 0;   // subset of class 2
    int k = 0;
    int seed1 = 0;
    int seed2 = 0;
    bool hypotheses_hold = false;   // average total degree >= n - t and n > 9t
    bool guarantee_met = false;     // 18 t k >= n
};

/// Alternating pick-and-filter procedure on seed sets of at most `seed_cap`
/// (default ceil(n/6)) high-degree vertices per class. The returned sides have
/// equal size k and induce a bidirected complete bipartite subdigraph.
BicliqueResult extract_bidirected_biclique(const DenseDigraph & d, const VertexPartition & partition, int t,
                                           std::optional<int> seed_cap = std::nullopt);

/// True iff every vertex of side1 and side2 is joined in both directions.
bool is_bidirected_biclique(const DenseDigraph & d, VertexSet side1, VertexSet side2);

struct RemovalCheck {
    bool preserving = false;
    std::string reason;                 // empty when preserving
    int rad_before = 0;
    std::optional<int> rad_after;
    /// Pair (original labels) whose distance changed, with both distances.
    std::optional<std::pair<int, int>> pair;
    std::optional<int> distance_before;
    std::optional<int> distance_after;   // empty when unreachable after removal
};

/// D \ v is strong, has the same outradius, and keeps every distance.
RemovalCheck is_distance_preserving_removal(const DenseDigraph & d, int v);

/// Removes the lowest-index distance-preserving vertex until the order drops
/// to `stop_order` or no such vertex exists. Returns the removed original labels.
struct RemovalChain {
    DenseDigraph result;
    std::vector<int> removed;
};
RemovalChain reduce_by_removals(const DenseDigraph & d, int stop_order);

Json to_json(const RemovalCheck & check);

} // namespace edl
