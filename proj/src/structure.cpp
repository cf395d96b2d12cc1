#include <edl/structure.hpp>

#include <edl/metrics.hpp>

#include <algorithm>
#include <cstdlib>

namespace edl {

namespace {

void validate(const LayerProfile & p)
{
    if (p.sizes.size() < 2)
        throw DomainError("layer profile needs r >= 1");
    if (p.sizes[0] != 1)
        throw DomainError("layer profile needs n_0 = 1");
    for (std::size_t i = 1; i < p.sizes.size(); ++i)
        if (p.sizes[i] < 1)
            throw DomainError("layer profile needs n_" + std::to_string(i) + " >= 1");
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::uint64_t out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (out > kMaxCompositions * 16)
            return out;
    }
    return out;
}

void require_chain_domain(int n, int r)
{
    if (r < 3 || n <= r)
        throw DomainError("chain maximisation needs n > r >= 3 (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
    if (binomial(n - 2, r - 1) > kMaxCompositions)
        throw LimitError("too many compositions for n=" + std::to_string(n) + ", r=" + std::to_string(r));
}

} // namespace

int LayerProfile::order() const
{
    int total = 0;
    for (int s : sizes)
        total += s;
    return total;
}

int LayerProfile::even_total() const
{
    int total = 0;
    for (std::size_t i = 0; i < sizes.size(); i += 2)
        total += sizes[i];
    return total;
}

int LayerProfile::odd_total() const
{
    return order() - even_total();
}

std::int64_t layer_profile_size(const LayerProfile & p)
{
    validate(p);
    std::int64_t total = static_cast<std::int64_t>(p.even_total() - 1) * p.odd_total();
    for (std::size_t i = 0; i + 1 < p.sizes.size(); ++i)
        total += static_cast<std::int64_t>(p.sizes[i]) * p.sizes[i + 1];
    return total;
}

std::int64_t chain_value(const std::vector<int> & chain)
{
    if (chain.empty())
        return 0;
    std::int64_t total = chain[0];
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        total += static_cast<std::int64_t>(chain[i]) * chain[i + 1];
    return total;
}

bool matches_chain_characterization(const std::vector<int> & chain)
{
    const int r = static_cast<int>(chain.size());
    if (r < 3 || chain.back() != 1)
        return false;
    for (int j = 0; j + 2 < r; ++j) {
        bool rest_ones = true;
        for (int i = 0; i < r && rest_ones; ++i)
            if ((i < j || i > j + 2) && chain[i] != 1)
                rest_ones = false;
        if (rest_ones && std::abs(chain[j + 1] + 1 - (chain[j] + chain[j + 2])) <= 1)
            return true;
    }
    return false;
}

std::int64_t chain_bound(int n, int r)
{
    const std::int64_t x = n - r - 1;
    return r + 2 * x + x * x / 4;
}

void for_each_composition(int total, int parts, const std::function<void(const std::vector<int> &)> & visit)
{
    if (parts < 1 || total < parts)
        return;
    std::vector<int> current(static_cast<std::size_t>(parts), 1);
    auto rec = [&](auto && self, int index, int remaining) -> void {
        if (index == parts - 1) {
            current[index] = remaining;
            visit(current);
            return;
        }
        for (int first = 1; first <= remaining - (parts - 1 - index); ++first) {
            current[index] = first;
            self(self, index + 1, remaining - first);
        }
    };
    rec(rec, 0, total);
}

ChainOptimum maximize_chain(int n, int r)
{
    require_chain_domain(n, r);
    ChainOptimum out;
    out.value = -1;
    for_each_composition(n - 1, r, [&](const std::vector<int> & chain) {
        auto value = chain_value(chain);
        if (value > out.value) {
            out.value = value;
            out.optima.clear();
        }
        if (value == out.value)
            out.optima.push_back(chain);
    });
    out.all_match_characterization = std::all_of(out.optima.begin(), out.optima.end(), matches_chain_characterization);
    return out;
}

std::vector<std::vector<int>> characterized_chains(int n, int r)
{
    require_chain_domain(n, r);
    std::vector<std::vector<int>> out;
    for_each_composition(n - 1, r, [&](const std::vector<int> & chain) {
        if (matches_chain_characterization(chain))
            out.push_back(chain);
    });
    return out;
}

bool is_bidirected_biclique(const DenseDigraph & d, VertexSet side1, VertexSet side2)
{
    for (VertexSet a = side1; a; a &= a - 1) {
        int u = std::countr_zero(a);
        if ((d.out_row(u) & side2) != side2 || (d.in_row(u) & side2) != side2)
            return false;
    }
    return true;
}

BicliqueResult extract_bidirected_biclique(const DenseDigraph & d, const VertexPartition & partition, int t,
                                           std::optional<int> seed_cap)
{
    if (t < 1)
        throw DomainError("biclique extraction needs t >= 1");
    if (seed_cap && *seed_cap < 1)
        throw DomainError("biclique extraction needs a seed cap >= 1");
    if (partition.order() != d.order())
        throw DomainError("partition order does not match the digraph");
    for (int v = 0; v < d.order(); ++v)
        if (d.out_row(v) & partition.members(partition.class_of(v)))
            throw PreconditionError(PreconditionKind::not_bipartite, "arc inside a bipartition class at vertex " + std::to_string(v));

    const int n = d.order();
    BicliqueResult out;
    out.hypotheses_hold = 2 * d.arc_count() >= n * (n - t) && n > 9 * t;

    const int cap = seed_cap.value_or((n + 5) / 6);
    // Highest total degree first, lowest label on ties.
    auto seeds = [&](int cls) {
        const int threshold = 2 * partition.size(3 - cls) - 3 * t + 1;
        std::vector<int> vs;
        for (VertexSet m = partition.members(cls); m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (d.total_degree(v) >= threshold)
                vs.push_back(v);
        }
        std::stable_sort(vs.begin(), vs.end(), [&](int a, int b) { return d.total_degree(a) > d.total_degree(b); });
        if (static_cast<int>(vs.size()) > cap)
            vs.resize(static_cast<std::size_t>(cap));
        VertexSet set = 0;
        for (int v : vs)
            set |= bit(v);
        return std::pair{set, vs};
    };
    auto [s1, order1] = seeds(1);
    auto [s2, order2] = seeds(2);
    out.seed1 = std::popcount(s1);
    out.seed2 = std::popcount(s2);

    auto bidirected = [&](int v) { return d.out_row(v) & d.in_row(v); };
    VertexSet fixed1 = 0, fixed2 = 0;
    auto next_unfixed = [](const std::vector<int> & order, VertexSet alive, VertexSet fixed) {
        for (int v : order)
            if (((alive >> v) & 1U) && ! ((fixed >> v) & 1U))
                return v;
        return -1;
    };
    while (true) {
        int v = next_unfixed(order1, s1, fixed1);
        if (v < 0)
            break;
        fixed1 |= bit(v);
        s2 &= bidirected(v);
        int w = next_unfixed(order2, s2, fixed2);
        if (w < 0)
            break;
        fixed2 |= bit(w);
        s1 &= bidirected(w);
    }

    // Every survivor of S_2 is joined both ways to every fixed vertex of S_1.
    VertexSet side1 = fixed1;
    VertexSet side2 = s2;
    out.k = std::min(std::popcount(side1), std::popcount(side2));
    auto keep_lowest = [](VertexSet set, int count) {
        VertexSet kept = 0;
        for (; count > 0 && set; --count, set &= set - 1)
            kept |= set & (~set + 1);
        return kept;
    };
    out.side1 = keep_lowest(side1, out.k);
    out.side2 = keep_lowest(side2, out.k);
    out.guarantee_met = 18 * t * out.k >= n;
    return out;
}

RemovalCheck is_distance_preserving_removal(const DenseDigraph & d, int v)
{
    if (d.order() < 2)
        throw DomainError("vertex removal needs n >= 2");
    if (! is_strong(d))
        throw PreconditionError(PreconditionKind::not_strong, "digraph is not strong");

    RemovalCheck out;
    const auto before = distance_matrix(d);
    const DenseDigraph rest = remove_vertex(d, v);
    const auto after = distance_matrix(rest);
    out.rad_before = outradius(d);

    auto original = [v](int x) { return x < v ? x : x + 1; };
    for (int x = 0; x < rest.order(); ++x)
        for (int y = 0; y < rest.order(); ++y) {
            int b = before.at(original(x), original(y));
            int a = after.at(x, y);
            if (a != b) {
                out.reason = a == kUnreachable ? "not strong after removal" : "distance changed";
                out.pair = {original(x), original(y)};
                out.distance_before = b;
                if (a != kUnreachable)
                    out.distance_after = a;
                return out;
            }
        }
    int rad_after = outradius(rest);
    out.rad_after = rad_after;
    if (rad_after != out.rad_before) {
        out.reason = "outradius changed";
        return out;
    }
    out.preserving = true;
    return out;
}

RemovalChain reduce_by_removals(const DenseDigraph & d, int stop_order)
{
    RemovalChain chain{d, {}};
    std::vector<int> labels(static_cast<std::size_t>(d.order()));
    for (int v = 0; v < d.order(); ++v)
        labels[v] = v;
    while (chain.result.order() > stop_order) {
        int found = -1;
        for (int v = 0; v < chain.result.order() && found < 0; ++v)
            if (is_distance_preserving_removal(chain.result, v).preserving)
                found = v;
        if (found < 0)
            break;
        chain.removed.push_back(labels[found]);
        labels.erase(labels.begin() + found);
        chain.result = remove_vertex(chain.result, found);
    }
    return chain;
}

Json to_json(const RemovalCheck & check)
{
    Json j;
    j["preserving"] = check.preserving;
    j["reason"] = check.reason;
    j["rad_before"] = check.rad_before;
    j["rad_after"] = check.rad_after ? Json(*check.rad_after) : Json(nullptr);
    if (check.pair) {
        j["pair"] = {check.pair->first, check.pair->second};
        j["distance_before"] = check.distance_before ? Json(*check.distance_before) : Json(nullptr);
        j["distance_after"] = check.distance_after ? Json(*check.distance_after) : Json(nullptr);
    }
    return j;
}

} // namespace edl
