#include <edl/canonical.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <tuple>

namespace edl {

namespace {

// Iterated colour refinement starting from the (out-degree, in-degree)
// profile. Colours are renumbered by sorted signature in every round, so the
// final colouring is invariant under relabelling.
std::vector<int> refined_colours(const DenseDigraph & d)
{
    const int n = d.order();
    using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;

    std::vector<int> colour(static_cast<std::size_t>(n));
    {
        std::vector<std::pair<int, int>> profile(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            profile[v] = {d.out_degree(v), d.in_degree(v)};
        auto sorted = profile;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), profile[v]) - sorted.begin());
    }

    std::vector<VertexSet> in(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        in[v] = d.in_row(v);

    int classes = *std::max_element(colour.begin(), colour.end()) + 1;
    while (classes < n) {
        std::vector<Signature> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> outs, ins;
            for (VertexSet s = d.out_row(v); s; s &= s - 1)
                outs.push_back(colour[std::countr_zero(s)]);
            for (VertexSet s = in[v]; s; s &= s - 1)
                ins.push_back(colour[std::countr_zero(s)]);
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            sig[v] = {colour[v], std::move(outs), std::move(ins)};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        int now = static_cast<int>(sorted.size());
        if (now == classes)
            break;
        classes = now;
    }
    return colour;
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const DenseDigraph & d) : d_(d), n_(d.order())
    {
        colour_ = refined_colours(d);
        slot_colour_ = colour_;
        std::sort(slot_colour_.begin(), slot_colour_.end());

        // u and w are twins when swapping them is an automorphism.
        for (int u = 0; u < n_; ++u)
            for (int w = u + 1; w < n_; ++w) {
                VertexSet others = d.vertices() & ~bit(u) & ~bit(w);
                bool same = (d.out_row(u) & others) == (d.out_row(w) & others)
                    && (d.in_row(u) & others) == (d.in_row(w) & others)
                    && d.has_arc(u, w) == d.has_arc(w, u);
                if (same) {
                    twins_[u] |= bit(w);
                    twins_[w] |= bit(u);
                }
            }
    }

    DenseDigraph run()
    {
        descend(0, 0);
        std::vector<int> label(static_cast<std::size_t>(n_));
        for (int k = 0; k < n_; ++k)
            label[best_perm_[k]] = k;
        return relabel(d_, label);
    }

private:
    std::uint32_t block(int candidate, int depth) const
    {
        std::uint32_t code = 0;
        for (int i = 0; i < depth; ++i) {
            int placed = perm_[i];
            code = (code << 2) | (d_.has_arc(candidate, placed) ? 2U : 0U) | (d_.has_arc(placed, candidate) ? 1U : 0U);
        }
        return code;
    }

    void descend(int depth, VertexSet used)
    {
        if (depth == n_) {
            if (! have_best_ || prefix_compare(n_ - 1) < 0) {
                best_ = current_;
                best_perm_ = perm_;
                have_best_ = true;
            }
            return;
        }

        std::uint32_t min_block = UINT32_MAX;
        VertexSet candidates = 0;
        for (int v = 0; v < n_; ++v) {
            if (((used >> v) & 1U) || colour_[v] != slot_colour_[depth])
                continue;
            std::uint32_t b = block(v, depth);
            if (b < min_block) {
                min_block = b;
                candidates = bit(v);
            }
            else if (b == min_block)
                candidates |= bit(v);
        }
        current_[depth] = min_block;

        for (VertexSet rest = candidates; rest; rest &= rest - 1) {
            // The best string may have dropped below this prefix in a sibling branch.
            if (have_best_ && prefix_compare(depth) > 0)
                return;
            int v = std::countr_zero(rest);
            // An unplaced twin with a lower label yields the same subtree.
            if (twins_[v] & candidates & (bit(v) - 1))
                continue;
            perm_[depth] = v;
            descend(depth + 1, used | bit(v));
        }
    }

    int prefix_compare(int depth) const
    {
        for (int i = 0; i <= depth; ++i)
            if (current_[i] != best_[i])
                return current_[i] < best_[i] ? -1 : 1;
        return 0;
    }

    const DenseDigraph & d_;
    int n_;
    std::vector<int> colour_;
    std::vector<int> slot_colour_;
    std::array<VertexSet, kMaxCanonicalOrder> twins_{};
    std::array<int, kMaxCanonicalOrder> perm_{};
    std::array<int, kMaxCanonicalOrder> best_perm_{};
    std::array<std::uint32_t, kMaxCanonicalOrder> current_{};
    std::array<std::uint32_t, kMaxCanonicalOrder> best_{};
    bool have_best_ = false;
};

} // namespace

DenseDigraph canonical_form(const DenseDigraph & d)
{
    if (d.order() > kMaxCanonicalOrder)
        throw LimitError("canonical_form supports order <= " + std::to_string(kMaxCanonicalOrder) + ", got "
                         + std::to_string(d.order()));
    return CanonicalSearch(d).run();
}

bool is_isomorphic(const DenseDigraph & a, const DenseDigraph & b)
{
    if (a.order() > kMaxCanonicalOrder || b.order() > kMaxCanonicalOrder)
        throw LimitError("is_isomorphic supports order <= " + std::to_string(kMaxCanonicalOrder));
    if (a.order() != b.order() || a.arc_count() != b.arc_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

std::string adjacency_string(const DenseDigraph & d)
{
    std::string out;
    out.reserve(static_cast<std::size_t>(d.order() * d.order()));
    for (int i = 0; i < d.order(); ++i)
        for (int j = 0; j < d.order(); ++j)
            out.push_back(d.has_arc(i, j) ? '1' : '0');
    return out;
}

std::vector<IsoClass> classify_isomorphism(const std::vector<DenseDigraph> & digraphs)
{
    std::map<std::pair<int, std::string>, IsoClass> classes;
    for (int i = 0; i < static_cast<int>(digraphs.size()); ++i) {
        DenseDigraph c = canonical_form(digraphs[i]);
        auto key = std::make_pair(c.order(), adjacency_string(c));
        auto [it, fresh] = classes.try_emplace(key, IsoClass{std::move(c), {}});
        it->second.members.push_back(i);
    }
    std::vector<IsoClass> out;
    out.reserve(classes.size());
    for (auto & [key, cls] : classes)
        out.push_back(std::move(cls));
    return out;
}

} // namespace edl
