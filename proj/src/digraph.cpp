#include <edl/digraph.hpp>

#include <algorithm>
#include <string>

namespace edl {

namespace {

void require_order(int n)
{
    if (n < 1 || n > kMaxOrder)
        throw LimitError("digraph order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder));
}

} // namespace

DenseDigraph::DenseDigraph(int n) : n_(n)
{
    require_order(n);
    rows_.assign(static_cast<std::size_t>(n), 0);
}

DenseDigraph DenseDigraph::from_rows(std::span<const VertexSet> rows)
{
    DenseDigraph d(static_cast<int>(rows.size()));
    for (int i = 0; i < d.n_; ++i) {
        if (rows[i] & ~d.vertices())
            throw DomainError("row " + std::to_string(i) + " references a vertex outside the digraph");
        if (rows[i] & bit(i))
            throw DomainError("self-loop at vertex " + std::to_string(i));
        d.rows_[i] = rows[i];
    }
    return d;
}

int DenseDigraph::check(int v) const
{
    if (v < 0 || v >= n_)
        throw DomainError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    return v;
}

void DenseDigraph::add_arc(int from, int to)
{
    if (check(from) == check(to))
        throw DomainError("self-loop at vertex " + std::to_string(from));
    rows_[from] |= bit(to);
}

void DenseDigraph::remove_arc(int from, int to)
{
    rows_[check(from)] &= ~bit(check(to));
}

VertexSet DenseDigraph::in_row(int v) const
{
    check(v);
    VertexSet in = 0;
    for (int u = 0; u < n_; ++u)
        if ((rows_[u] >> v) & 1U)
            in |= bit(u);
    return in;
}

int DenseDigraph::arc_count() const noexcept
{
    int total = 0;
    for (auto row : rows_)
        total += std::popcount(row);
    return total;
}

bool DenseDigraph::is_symmetric() const noexcept
{
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (((rows_[i] >> j) & 1U) != ((rows_[j] >> i) & 1U))
                return false;
    return true;
}

int DenseDigraph::edge_count() const
{
    if (! is_symmetric())
        throw DomainError("edge_count requires a symmetric digraph");
    return arc_count() / 2;
}

VertexPartition::VertexPartition(int n, VertexSet class2) : n_(n), class2_(class2)
{
    require_order(n);
    if (class2 & ~first_n(n))
        throw DomainError("partition references a vertex outside the digraph");
}

DenseDigraph from_arc_list(int n, std::span<const Arc> arcs)
{
    DenseDigraph d(n);
    for (auto [from, to] : arcs)
        d.add_arc(from, to);
    return d;
}

std::vector<Arc> arc_list(const DenseDigraph & d)
{
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(d.arc_count()));
    for (int i = 0; i < d.order(); ++i)
        for (int j = 0; j < d.order(); ++j)
            if (d.has_arc(i, j))
                arcs.push_back({i, j});
    return arcs;
}

DenseDigraph empty_digraph(int n)
{
    return DenseDigraph(n);
}

DenseDigraph bidirected_clique(int n)
{
    DenseDigraph d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                d.add_arc(i, j);
    return d;
}

DenseDigraph directed_cycle(int n)
{
    if (n < 2)
        throw DomainError("directed cycle needs at least 2 vertices");
    DenseDigraph d(n);
    for (int i = 0; i < n; ++i)
        d.add_arc(i, (i + 1) % n);
    return d;
}

DenseDigraph symmetric_cycle(int n)
{
    if (n < 3)
        throw DomainError("cycle needs at least 3 vertices");
    DenseDigraph d(n);
    for (int i = 0; i < n; ++i) {
        d.add_arc(i, (i + 1) % n);
        d.add_arc((i + 1) % n, i);
    }
    return d;
}

DenseDigraph directed_path(int n)
{
    DenseDigraph d(n);
    for (int i = 0; i + 1 < n; ++i)
        d.add_arc(i, i + 1);
    return d;
}

DenseDigraph bidirected_complete_bipartite(int left, int right)
{
    if (left < 1 || right < 1)
        throw DomainError("both bipartition classes must be non-empty");
    DenseDigraph d(left + right);
    for (int i = 0; i < left; ++i)
        for (int j = left; j < left + right; ++j) {
            d.add_arc(i, j);
            d.add_arc(j, i);
        }
    return d;
}

DenseDigraph complement(const DenseDigraph & d)
{
    std::vector<VertexSet> rows(d.rows().begin(), d.rows().end());
    for (int i = 0; i < d.order(); ++i)
        rows[i] = ~rows[i] & d.vertices() & ~bit(i);
    return DenseDigraph::from_rows(rows);
}

DenseDigraph reverse(const DenseDigraph & d)
{
    DenseDigraph out(d.order());
    for (int i = 0; i < d.order(); ++i)
        for (int j = 0; j < d.order(); ++j)
            if (d.has_arc(i, j))
                out.add_arc(j, i);
    return out;
}

DenseDigraph intersect(const DenseDigraph & a, const DenseDigraph & b)
{
    if (a.order() != b.order())
        throw DomainError("intersection requires equal orders (" + std::to_string(a.order()) + " vs "
                          + std::to_string(b.order()) + ")");
    std::vector<VertexSet> rows(static_cast<std::size_t>(a.order()));
    for (int i = 0; i < a.order(); ++i)
        rows[i] = a.out_row(i) & b.out_row(i);
    return DenseDigraph::from_rows(rows);
}

DenseDigraph induced_subdigraph(const DenseDigraph & d, VertexSet keep)
{
    keep &= d.vertices();
    std::vector<int> label(static_cast<std::size_t>(d.order()), -1);
    int next = 0;
    for (int v = 0; v < d.order(); ++v)
        if ((keep >> v) & 1U)
            label[v] = next++;
    DenseDigraph out(next);
    for (int u = 0; u < d.order(); ++u) {
        if (label[u] < 0)
            continue;
        for (int v = 0; v < d.order(); ++v)
            if (label[v] >= 0 && d.has_arc(u, v))
                out.add_arc(label[u], label[v]);
    }
    return out;
}

DenseDigraph remove_vertex(const DenseDigraph & d, int v)
{
    if (v < 0 || v >= d.order())
        throw DomainError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(d.order()));
    if (d.order() < 2)
        throw DomainError("cannot remove the only vertex of a digraph");
    return induced_subdigraph(d, d.vertices() & ~bit(v));
}

DenseDigraph relabel(const DenseDigraph & d, std::span<const int> perm)
{
    if (static_cast<int>(perm.size()) != d.order())
        throw DomainError("permutation length does not match digraph order");
    VertexSet seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= d.order() || ((seen >> p) & 1U))
            throw DomainError("relabelling is not a permutation");
        seen |= bit(p);
    }
    DenseDigraph out(d.order());
    for (int u = 0; u < d.order(); ++u)
        for (int v = 0; v < d.order(); ++v)
            if (d.has_arc(u, v))
                out.add_arc(perm[u], perm[v]);
    return out;
}

DenseDigraph blow_up(const DenseDigraph & d, std::span<const Substitution> targets)
{
    const int n = d.order();
    std::vector<std::vector<int>> copies(static_cast<std::size_t>(n));
    std::vector<const DenseDigraph *> sub(static_cast<std::size_t>(n), nullptr);
    for (int v = 0; v < n; ++v)
        copies[v] = {v};

    int next = n;
    for (const auto & t : targets) {
        if (t.vertex < 0 || t.vertex >= n)
            throw DomainError("blow-up target " + std::to_string(t.vertex) + " out of range");
        if (sub[t.vertex])
            throw DomainError("duplicate blow-up target " + std::to_string(t.vertex));
        if (t.with.order() < 1)
            throw DomainError("blow-up substitute must be non-empty");
        sub[t.vertex] = &t.with;
        for (int c = 1; c < t.with.order(); ++c)
            copies[t.vertex].push_back(next++);
    }
    if (next > kMaxOrder)
        throw LimitError("blow-up result has order " + std::to_string(next) + " above " + std::to_string(kMaxOrder));

    DenseDigraph out(next);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v)
            if (d.has_arc(u, v))
                for (int cu : copies[u])
                    for (int cv : copies[v])
                        out.add_arc(cu, cv);
        if (const auto * h = sub[u])
            for (int a = 0; a < h->order(); ++a)
                for (int b = 0; b < h->order(); ++b)
                    if (h->has_arc(a, b))
                        out.add_arc(copies[u][a], copies[u][b]);
    }
    return out;
}

std::optional<VertexPartition> is_bipartite(const DenseDigraph & d)
{
    const int n = d.order();
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        adj[v] = d.out_row(v) | d.in_row(v);

    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (colour[s])
            continue;
        colour[s] = 1;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (VertexSet rest = adj[u]; rest; rest &= rest - 1) {
                int w = std::countr_zero(rest);
                if (! colour[w]) {
                    colour[w] = 3 - colour[u];
                    queue.push_back(w);
                }
                else if (colour[w] == colour[u])
                    return std::nullopt;
            }
        }
    }
    VertexSet class2 = 0;
    for (int v = 0; v < n; ++v)
        if (colour[v] == 2)
            class2 |= bit(v);
    return VertexPartition(n, class2);
}

} // namespace edl
