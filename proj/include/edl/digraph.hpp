#pragma once

#include <edl/error.hpp>

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace edl {

inline constexpr int kMaxOrder = 64;

using VertexSet = std::uint64_t;

inline constexpr VertexSet bit(int v) noexcept { return VertexSet{1} << v; }

inline constexpr VertexSet first_n(int n) noexcept
{
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

/// Dense digraph on vertices 0..n-1, 1 <= n <= 64. Row i holds the
/// out-neighbourhood of vertex i as a bit set. Loops never occur.
/// Undirected graphs are carried as symmetric digraphs.
class DenseDigraph {
public:
    DenseDigraph() = default;
    explicit DenseDigraph(int n);

    /// Builds from out-rows; bits outside 0..n-1 or on the diagonal are rejected.
    static DenseDigraph from_rows(std::span<const VertexSet> rows);

    int order() const noexcept { return n_; }
    VertexSet vertices() const noexcept { return first_n(n_); }

    bool has_arc(int from, int to) const { return (rows_[check(from)] >> check(to)) & 1U; }
    void add_arc(int from, int to);
    void remove_arc(int from, int to);

    VertexSet out_row(int v) const { return rows_[check(v)]; }
    VertexSet in_row(int v) const;
    std::span<const VertexSet> rows() const noexcept { return rows_; }

    int out_degree(int v) const { return std::popcount(out_row(v)); }
    int in_degree(int v) const { return std::popcount(in_row(v)); }
    int total_degree(int v) const { return out_degree(v) + in_degree(v); }

    int arc_count() const noexcept;
    bool is_symmetric() const noexcept;

    /// Edge count of a symmetric digraph (arc_count / 2).
    int edge_count() const;

    friend bool operator==(const DenseDigraph &, const DenseDigraph &) = default;
    friend std::strong_ordering operator<=>(const DenseDigraph & a, const DenseDigraph & b)
    {
        if (auto c = a.n_ <=> b.n_; c != 0)
            return c;
        return a.rows_ <=> b.rows_;
    }

private:
    int check(int v) const;

    int n_ = 0;
    std::vector<VertexSet> rows_;
};

/// Two-colouring of the vertex set; class 1 or class 2 per vertex.
class VertexPartition {
public:
    VertexPartition(int n, VertexSet class2);

    int order() const noexcept { return n_; }
    int class_of(int v) const { return (class2_ >> v) & 1U ? 2 : 1; }
    VertexSet members(int cls) const { return cls == 2 ? class2_ : (first_n(n_) & ~class2_); }
    int size(int cls) const { return std::popcount(members(cls)); }

    friend bool operator==(const VertexPartition &, const VertexPartition &) = default;

private:
    int n_;
    VertexSet class2_;
};

struct Arc {
    int from;
    int to;
    friend auto operator<=>(const Arc &, const Arc &) = default;
};

/// One blow-up target: vertex `vertex` is replaced by a copy of `with`.
struct Substitution {
    int vertex;
    DenseDigraph with;
};

DenseDigraph from_arc_list(int n, std::span<const Arc> arcs);
std::vector<Arc> arc_list(const DenseDigraph & d);

DenseDigraph empty_digraph(int n);
DenseDigraph bidirected_clique(int n);
DenseDigraph directed_cycle(int n);
DenseDigraph symmetric_cycle(int n);
DenseDigraph directed_path(int n);
DenseDigraph bidirected_complete_bipartite(int left, int right);

DenseDigraph complement(const DenseDigraph & d);
DenseDigraph reverse(const DenseDigraph & d);
DenseDigraph intersect(const DenseDigraph & a, const DenseDigraph & b);
DenseDigraph remove_vertex(const DenseDigraph & d, int v);
DenseDigraph induced_subdigraph(const DenseDigraph & d, VertexSet keep);

/// perm[v] is the new label of vertex v.
DenseDigraph relabel(const DenseDigraph & d, std::span<const int> perm);

/// Replaces each target vertex by a copy of its substitute. Vertex v of the
/// input keeps label v and becomes copy 0 of its substitute; the remaining
/// copies are appended target by target, in the order given. Arcs between
/// copies of two targets follow the arcs between the original targets.
DenseDigraph blow_up(const DenseDigraph & d, std::span<const Substitution> targets);

/// Proper 2-colouring of the underlying undirected graph; each weakly
/// connected component gets its lowest vertex in class 1.
std::optional<VertexPartition> is_bipartite(const DenseDigraph & d);

} // namespace edl
