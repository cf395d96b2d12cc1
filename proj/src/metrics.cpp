#include <edl/metrics.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace edl {

namespace {

// Breadth-first layers from `source`; dist has kUnreachable for vertices not reached.
void bfs_from(const DenseDigraph & d, int source, int * dist)
{
    const int n = d.order();
    std::fill(dist, dist + n, kUnreachable);
    dist[source] = 0;
    VertexSet reached = bit(source);
    VertexSet frontier = reached;
    for (int level = 1; frontier; ++level) {
        VertexSet next = 0;
        for (VertexSet f = frontier; f; f &= f - 1)
            next |= d.out_row(std::countr_zero(f));
        next &= ~reached;
        reached |= next;
        for (VertexSet s = next; s; s &= s - 1)
            dist[std::countr_zero(s)] = level;
        frontier = next;
    }
}

VertexSet reach_from(const DenseDigraph & d, int source)
{
    VertexSet reached = bit(source);
    VertexSet frontier = reached;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet f = frontier; f; f &= f - 1)
            next |= d.out_row(std::countr_zero(f));
        frontier = next & ~reached;
        reached |= next;
    }
    return reached;
}

Json finite_or_null(int value)
{
    return value == kUnreachable ? Json(nullptr) : Json(value);
}

int int_or_inf(const Json & j)
{
    return j.is_null() ? kUnreachable : j.get<int>();
}

std::vector<int> ints_or_inf(const Json & j)
{
    std::vector<int> out;
    for (const auto & x : j)
        out.push_back(int_or_inf(x));
    return out;
}

Json ints_to_json(const std::vector<int> & v)
{
    Json out = Json::array();
    for (int x : v)
        out.push_back(finite_or_null(x));
    return out;
}

// Distances from one source, plus the shortest-path DAG predecessor sets.
struct SourceLayers {
    std::vector<int> dist;
};

SourceLayers layers_from(const DenseDigraph & d, int v)
{
    SourceLayers out;
    out.dist.resize(static_cast<std::size_t>(d.order()));
    bfs_from(d, v, out.dist.data());
    return out;
}

void collect_paths(const DenseDigraph & d, const std::vector<int> & dist, int from, int at, VertexSet mask,
                   std::vector<VertexSet> & out, std::size_t cap)
{
    if (at == from) {
        if (out.size() >= cap)
            throw LimitError("shortest path enumeration exceeded " + std::to_string(cap) + " paths");
        out.push_back(mask);
        return;
    }
    int level = dist[at];
    for (VertexSet preds = d.in_row(at); preds; preds &= preds - 1) {
        int p = std::countr_zero(preds);
        if (dist[p] == level - 1)
            collect_paths(d, dist, from, p, p == from ? mask : (mask | bit(p)), out, cap);
    }
}

std::vector<VertexSet> paths_with_dist(const DenseDigraph & d, const std::vector<int> & dist, int from, int to)
{
    std::vector<VertexSet> out;
    collect_paths(d, dist, from, to, bit(to), out, 1'000'000);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct PathFindings {
    bool some_pair_disjoint = false;
    bool some_endpoints_all_disjoint = false;
};

// Looks for x at distance r and y at distance r-1 from v whose shortest paths
// are disjoint apart from v.
PathFindings disjoint_path_search(const DenseDigraph & d, int v, int r, bool universal)
{
    PathFindings found;
    auto layers = layers_from(d, v);
    std::vector<int> far, near;
    for (int u = 0; u < d.order(); ++u) {
        if (layers.dist[u] == r)
            far.push_back(u);
        else if (layers.dist[u] == r - 1)
            near.push_back(u);
    }
    std::vector<std::vector<VertexSet>> far_paths, near_paths;
    for (int x : far)
        far_paths.push_back(paths_with_dist(d, layers.dist, v, x));
    for (int y : near)
        near_paths.push_back(paths_with_dist(d, layers.dist, v, y));

    for (const auto & px : far_paths)
        for (const auto & py : near_paths) {
            bool any = false, all = true;
            for (auto a : px)
                for (auto b : py) {
                    if (a & b)
                        all = false;
                    else
                        any = true;
                }
            found.some_pair_disjoint = found.some_pair_disjoint || any;
            if (universal && all)
                found.some_endpoints_all_disjoint = true;
        }
    return found;
}

} // namespace

DistanceMatrix distance_matrix(const DenseDigraph & d)
{
    DistanceMatrix m;
    m.n = d.order();
    m.d.resize(static_cast<std::size_t>(m.n) * m.n);
    for (int v = 0; v < m.n; ++v)
        bfs_from(d, v, m.d.data() + static_cast<std::size_t>(v) * m.n);
    return m;
}

bool is_strong(const DenseDigraph & d)
{
    // Strong iff vertex 0 reaches everything and everything reaches vertex 0.
    if (reach_from(d, 0) != d.vertices())
        return false;
    return reach_from(reverse(d), 0) == d.vertices();
}

int outradius(const DenseDigraph & d)
{
    int best = kUnreachable;
    std::vector<int> dist(static_cast<std::size_t>(d.order()));
    for (int v = 0; v < d.order(); ++v) {
        bfs_from(d, v, dist.data());
        best = std::min(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

MetricSummary metric_summary(const DenseDigraph & d)
{
    const int n = d.order();
    const auto dm = distance_matrix(d);

    MetricSummary m;
    m.n = n;
    m.arc_count = d.arc_count();
    m.ecc_out.assign(static_cast<std::size_t>(n), 0);
    m.ecc_in.assign(static_cast<std::size_t>(n), 0);
    m.strong = true;
    std::int64_t total = 0;
    int diameter = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int x = dm.at(i, j);
            m.ecc_out[i] = std::max(m.ecc_out[i], x);
            m.ecc_in[j] = std::max(m.ecc_in[j], x);
            if (x == kUnreachable)
                m.strong = false;
            else {
                total += x;
                diameter = std::max(diameter, x);
            }
        }

    for (int v = 0; v < n; ++v) {
        m.rad_out = std::min(m.rad_out, m.ecc_out[v]);
        m.rad_in = std::min(m.rad_in, m.ecc_in[v]);
        if (m.ecc_out[v] != kUnreachable && m.ecc_in[v] != kUnreachable)
            m.rad2 = std::min(m.rad2, m.ecc_out[v] + m.ecc_in[v]);
        m.outdeg.push_back(d.out_degree(v));
        m.indeg.push_back(d.in_degree(v));
        m.totaldeg.push_back(m.outdeg.back() + m.indeg.back());
    }

    if (m.strong) {
        m.diameter = diameter;
        m.wiener = total;
        if (n > 1) {
            std::int64_t den = static_cast<std::int64_t>(n) * (n - 1);
            std::int64_t g = std::gcd(total, den);
            m.avg_distance = Rational{total / g, den / g};
        }
    }
    m.bipartite = is_bipartite(d).has_value();
    return m;
}

VertexSet co_out_neighborhood(const DenseDigraph & d, int v)
{
    return d.vertices() & ~d.out_row(v) & ~bit(v);
}

std::string radius_string(int rad2)
{
    if (rad2 == kUnreachable)
        return "inf";
    std::string out = std::to_string(rad2 / 2);
    if (rad2 % 2)
        out += ".5";
    return out;
}

Json to_json(const MetricSummary & m)
{
    Json j;
    j["n"] = m.n;
    j["arc_count"] = m.arc_count;
    j["ecc_out"] = ints_to_json(m.ecc_out);
    j["ecc_in"] = ints_to_json(m.ecc_in);
    j["rad_out"] = finite_or_null(m.rad_out);
    j["rad_in"] = finite_or_null(m.rad_in);
    j["rad2"] = finite_or_null(m.rad2);
    j["rad"] = radius_string(m.rad2);
    j["diameter"] = finite_or_null(m.diameter);
    j["wiener"] = m.wiener ? Json(*m.wiener) : Json(nullptr);
    j["wiener_infinite"] = ! m.wiener.has_value();
    j["avg_distance"] = m.avg_distance
        ? Json(std::to_string(m.avg_distance->num) + "/" + std::to_string(m.avg_distance->den))
        : Json(nullptr);
    j["outdeg"] = m.outdeg;
    j["indeg"] = m.indeg;
    j["totaldeg"] = m.totaldeg;
    j["strong"] = m.strong;
    j["bipartite"] = m.bipartite;
    return j;
}

MetricSummary metric_summary_from_json(const Json & j)
{
    try {
        MetricSummary m;
        m.n = j.at("n").get<int>();
        m.arc_count = j.at("arc_count").get<int>();
        m.ecc_out = ints_or_inf(j.at("ecc_out"));
        m.ecc_in = ints_or_inf(j.at("ecc_in"));
        m.rad_out = int_or_inf(j.at("rad_out"));
        m.rad_in = int_or_inf(j.at("rad_in"));
        m.rad2 = int_or_inf(j.at("rad2"));
        m.diameter = int_or_inf(j.at("diameter"));
        if (! j.at("wiener").is_null())
            m.wiener = j.at("wiener").get<std::int64_t>();
        if (const auto & avg = j.at("avg_distance"); ! avg.is_null()) {
            auto s = avg.get<std::string>();
            auto slash = s.find('/');
            if (slash == std::string::npos)
                throw ParseError("avg_distance must be written as num/den", 0);
            m.avg_distance = Rational{std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
        }
        m.outdeg = j.at("outdeg").get<std::vector<int>>();
        m.indeg = j.at("indeg").get<std::vector<int>>();
        m.totaldeg = j.at("totaldeg").get<std::vector<int>>();
        m.strong = j.at("strong").get<bool>();
        m.bipartite = j.at("bipartite").get<bool>();
        return m;
    }
    catch (const Json::exception & e) {
        throw ParseError(std::string("malformed metric summary: ") + e.what(), 0);
    }
}

DegreeBoundReport check_outradius_degree_bound(const DenseDigraph & d, int r)
{
    int actual = outradius(d);
    if (actual != r)
        throw PreconditionError(PreconditionKind::outradius_mismatch,
                                "outradius is " + (actual == kUnreachable ? std::string("infinite") : std::to_string(actual))
                                    + ", not " + std::to_string(r));
    const int n = d.order();
    DegreeBoundReport report;
    report.r = r;
    const int bound = 2 * (n - 1) - (2 * r - 3);
    for (int v = 0; v < n; ++v) {
        VertexDegreeCheck c;
        c.vertex = v;
        c.out_degree = d.out_degree(v);
        c.in_degree = d.in_degree(v);
        c.total_degree = c.out_degree + c.in_degree;
        c.bound = bound;
        c.within_bound = c.total_degree <= bound;
        c.attains_bound = c.total_degree == bound;
        if (! c.within_bound)
            ++report.violations;
        if (c.attains_bound) {
            ++report.attaining;
            c.degree_split_matches = c.in_degree == n - 1 && c.out_degree == n - 1 - (2 * r - 3);
            c.disjoint_paths_found = disjoint_path_search(d, v, r, false).some_pair_disjoint;
        }
        report.vertices.push_back(c);
    }
    return report;
}

DegreeBoundReport check_bipartite_degree_bound(const DenseDigraph & d, const VertexPartition & partition, int r)
{
    if (partition.order() != d.order())
        throw DomainError("partition order does not match the digraph");
    for (int v = 0; v < d.order(); ++v)
        if (d.out_row(v) & partition.members(partition.class_of(v)))
            throw PreconditionError(PreconditionKind::not_bipartite, "arc inside a bipartition class at vertex " + std::to_string(v));
    if (r % 2 != 0)
        throw PreconditionError(PreconditionKind::odd_radius, "outradius must be even, got " + std::to_string(r));
    if (r < 4)
        throw PreconditionError(PreconditionKind::radius_too_small, "outradius must be at least 4, got " + std::to_string(r));
    if (! is_strong(d))
        throw PreconditionError(PreconditionKind::not_strong, "digraph is not strong");
    int actual = outradius(d);
    if (actual != r)
        throw PreconditionError(PreconditionKind::outradius_mismatch,
                                "outradius is " + std::to_string(actual) + ", not " + std::to_string(r));

    const int n = d.order();
    DegreeBoundReport report;
    report.r = r;
    for (int v = 0; v < n; ++v) {
        int opposite = partition.size(3 - partition.class_of(v));
        VertexDegreeCheck c;
        c.vertex = v;
        c.out_degree = d.out_degree(v);
        c.in_degree = d.in_degree(v);
        c.total_degree = c.out_degree + c.in_degree;
        c.bound = 2 * opposite - (r - 2);
        c.within_bound = c.total_degree <= c.bound;
        c.attains_bound = c.total_degree == c.bound;
        if (! c.within_bound)
            ++report.violations;
        if (c.attains_bound) {
            ++report.attaining;
            c.degree_split_matches = c.in_degree == opposite && c.out_degree == opposite - (r - 2);
            bool universal = n <= 8;
            auto found = disjoint_path_search(d, v, r, universal);
            c.disjoint_paths_found = found.some_pair_disjoint;
            if (universal)
                c.all_shortest_paths_disjoint = found.some_endpoints_all_disjoint;
        }
        report.vertices.push_back(c);
    }
    return report;
}

int clique_number(const DenseDigraph & d)
{
    const int n = d.order();
    if (n > kMaxCliqueOrder)
        throw LimitError("clique_number supports order <= " + std::to_string(kMaxCliqueOrder));
    std::vector<VertexSet> sym(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        sym[v] = d.out_row(v) & d.in_row(v);

    int best = 0;
    auto grow = [&](auto && self, VertexSet candidates, int size) -> void {
        if (! candidates) {
            best = std::max(best, size);
            return;
        }
        if (size + std::popcount(candidates) <= best)
            return;
        int v = std::countr_zero(candidates);
        self(self, candidates & sym[v], size + 1);
        self(self, candidates & ~bit(v), size);
    };
    grow(grow, d.vertices(), 0);
    return best;
}

std::vector<VertexSet> shortest_path_masks(const DenseDigraph & d, int from, int to, std::size_t cap)
{
    auto layers = layers_from(d, from);
    if (layers.dist[to] == kUnreachable)
        return {};
    std::vector<VertexSet> out;
    if (from == to)
        return {0};
    collect_paths(d, layers.dist, from, to, bit(to), out, cap);
    return out;
}

Json to_json(const DegreeBoundReport & report)
{
    Json vertices = Json::array();
    for (const auto & c : report.vertices) {
        Json v;
        v["vertex"] = c.vertex;
        v["out_degree"] = c.out_degree;
        v["in_degree"] = c.in_degree;
        v["total_degree"] = c.total_degree;
        v["bound"] = c.bound;
        v["within_bound"] = c.within_bound;
        v["attains_bound"] = c.attains_bound;
        if (c.degree_split_matches)
            v["degree_split_matches"] = *c.degree_split_matches;
        if (c.disjoint_paths_found)
            v["disjoint_paths_found"] = *c.disjoint_paths_found;
        if (c.all_shortest_paths_disjoint)
            v["all_shortest_paths_disjoint"] = *c.all_shortest_paths_disjoint;
        vertices.push_back(std::move(v));
    }
    return {{"r", report.r}, {"violations", report.violations}, {"attaining", report.attaining}, {"vertices", vertices}};
}

} // namespace edl
