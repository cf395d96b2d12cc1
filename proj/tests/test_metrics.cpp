#include <doctest.h>

#include "oracles.hpp"

#include <edl/families.hpp>
#include <edl/io.hpp>
#include <edl/metrics.hpp>

#include <algorithm>
#include <bit>
#include <random>
#include <string>

using namespace edl;

namespace {

DenseDigraph load(const std::string & name)
{
    return parse_adm(read_file(std::string(EDL_DATA_DIR) + "/" + name));
}

void check_against_oracle(const DenseDigraph & d)
{
    const auto m = metric_summary(d);
    const auto o = oracle::summarize(d);
    const auto dist = distance_matrix(d);
    const auto fw = oracle::floyd_warshall(d);
    for (int i = 0; i < d.order(); ++i)
        for (int j = 0; j < d.order(); ++j)
            CHECK((dist.reachable(i, j) ? dist.at(i, j) : oracle::kInf) == fw[i][j]);
    CHECK(m.strong == o.strong);
    if (o.strong) {
        REQUIRE(m.wiener);
        CHECK(*m.wiener == o.wiener);
        CHECK(m.rad_out == o.rad_out);
        CHECK(m.rad_in == o.rad_in);
        CHECK(m.rad2 == o.rad2);
        CHECK(m.diameter == o.diameter);
        CHECK(m.ecc_out == o.ecc_out);
        CHECK(m.ecc_in == o.ecc_in);
    }
    else {
        CHECK_FALSE(m.wiener);
        CHECK(m.diameter == kUnreachable);
    }
}

} // namespace

TEST_CASE("distance_matrix")
{
    const auto c4 = distance_matrix(directed_cycle(4));
    CHECK(c4.at(0, 3) == 3);
    CHECK(c4.at(3, 0) == 1);

    const auto g = distance_matrix(gamma_bar(5));
    CHECK(g.at(0, 5) == 5);
    CHECK(g.at(5, 0) == 1);

    const auto f = gamma_star_blowup(7, 3, 1, 2);
    const auto df = distance_matrix(f);
    for (int u = 1; u < 7; ++u)
        CHECK_FALSE(df.reachable(u, 0));
}

TEST_CASE("metric_summary examples")
{
    for (int n = 2; n <= 7; ++n) {
        const auto k = metric_summary(bidirected_clique(n));
        CHECK(*k.wiener == n * (n - 1));
        CHECK(k.rad_out == 1);
        CHECK(k.diameter == 1);

        const auto c = metric_summary(directed_cycle(n));
        CHECK(*c.wiener == n * n * (n - 1) / 2);
        CHECK(c.rad2 == 2 * (n - 1));
    }

    const auto fig8 = metric_summary(load("fig8-left.adm"));
    CHECK(*fig8.wiener == 45);
    CHECK(fig8.rad2 == 5);
    CHECK(fig8.arc_count == 18);
    CHECK(radius_string(fig8.rad2) == "2.5");
    CHECK(*fig8.avg_distance == Rational{3, 2});

    const auto fig9 = metric_summary(load("fig9-left.adm"));
    CHECK(fig9.arc_count == 16);
    CHECK(*fig9.wiener == 52);
    CHECK(fig9.rad2 == 6);
    CHECK(radius_string(fig9.rad2) == "3");

    const auto star = metric_summary(gamma_star(4));
    CHECK_FALSE(star.strong);
    CHECK_FALSE(star.wiener);
    CHECK(star.rad_out == 4);
    CHECK(radius_string(kUnreachable) == "inf");
}

TEST_CASE("metric_summary agrees with the Floyd-Warshall oracle")
{
    std::mt19937_64 rng(31);
    for (int k = 0; k < 100; ++k)
        check_against_oracle(oracle::random_strong_digraph(2 + k % 7, 0.35, rng));
    for (int k = 0; k < 100; ++k)
        check_against_oracle(oracle::random_digraph(1 + k % 8, 0.25, rng));
}

TEST_CASE("reverse swaps in- and out-values")
{
    std::mt19937_64 rng(8);
    for (int k = 0; k < 60; ++k) {
        const auto d = oracle::random_strong_digraph(3 + k % 6, 0.4, rng);
        const auto a = metric_summary(d);
        const auto b = metric_summary(reverse(d));
        CHECK(a.ecc_out == b.ecc_in);
        CHECK(a.ecc_in == b.ecc_out);
        CHECK(a.rad_out == b.rad_in);
        CHECK(a.rad_in == b.rad_out);
        CHECK(a.wiener == b.wiener);
        CHECK(a.diameter == b.diameter);
        CHECK(a.rad2 == b.rad2);
    }
}

TEST_CASE("rad2 of gamma_bar")
{
    for (int d : {5, 6, 7, 8, 10}) {
        const auto g = gamma_bar(d);
        const auto m = metric_summary(g);
        CHECK(m.rad2 == d);
        CHECK(oracle::summarize(g).rad2 == d);
        // The top vertex still needs one step to reach the others.
        for (int k = 0; k <= d; ++k) {
            CHECK(m.ecc_out[k] == std::max(d - k, 1));
            CHECK(m.ecc_in[k] == std::max(k, 1));
        }
    }
}

TEST_CASE("is_strong")
{
    CHECK(is_strong(directed_cycle(5)));
    CHECK_FALSE(is_strong(gamma_star_blowup(7, 3, 1, 2)));
    CHECK(is_strong(d_nrs(8, 3, 1)));
    CHECK(oracle::strong(d_nrs(8, 3, 1)));
    CHECK(is_strong(empty_digraph(1)));
    CHECK_FALSE(is_strong(empty_digraph(2)));
}

TEST_CASE("outradius agrees with the summary")
{
    std::mt19937_64 rng(4);
    for (int k = 0; k < 200; ++k) {
        const auto d = oracle::random_digraph(1 + k % 8, 0.3, rng);
        CHECK(outradius(d) == metric_summary(d).rad_out);
    }
}

TEST_CASE("outdegree is at most n - rad_out in strong digraphs")
{
    // Every labelled digraph on at most 4 vertices, and a random sample at n = 5.
    // Without strong connectivity only outdeg <= n - 2 survives.
    const auto path = from_arc_list(4, std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}, {3, 1}, {3, 2}});
    CHECK(outradius(path) == 3);
    CHECK(path.out_degree(3) == 2);
    for (int n = 2; n <= 4; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1));
        for (std::uint64_t code = 0; code < total; ++code) {
            const auto d = oracle::from_code(n, code);
            const auto o = oracle::summarize(d);
            if (o.rad_out < 2 || o.rad_out >= oracle::kInf)
                continue;
            for (int v = 0; v < n; ++v) {
                CHECK(d.out_degree(v) <= n - 2);
                if (o.strong)
                    CHECK(d.out_degree(v) <= n - o.rad_out);
            }
        }
    }
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::uint64_t> code(0, (std::uint64_t{1} << 20) - 1);
    for (int k = 0; k < 20000; ++k) {
        const auto d = oracle::from_code(5, code(rng));
        const auto o = oracle::summarize(d);
        if (o.rad_out < 2 || o.rad_out >= oracle::kInf)
            continue;
        for (int v = 0; v < 5; ++v) {
            CHECK(d.out_degree(v) <= 3);
            if (o.strong)
                CHECK(d.out_degree(v) <= 5 - o.rad_out);
        }
    }
}

TEST_CASE("co_out_neighborhood")
{
    CHECK(co_out_neighborhood(bidirected_clique(4), 2) == 0);
    CHECK(co_out_neighborhood(directed_cycle(4), 0) == (bit(2) | bit(3)));
    const auto d = d_nrs(8, 3, 1);
    int smallest = 8;
    for (int v = 0; v < 8; ++v) {
        const auto f = co_out_neighborhood(d, v);
        CHECK(std::popcount(f) == 8 - 1 - d.out_degree(v));
        CHECK(((f >> v) & 1U) == 0);
        smallest = std::min(smallest, std::popcount(f));
    }
    CHECK(smallest == 2);
}

TEST_CASE("outradius degree bound")
{
    const auto report = check_outradius_degree_bound(d_nrs(10, 4, 1), 4);
    CHECK(report.violations == 0);
    for (const auto & v : report.vertices)
        CHECK(v.bound == 13);

    try {
        check_outradius_degree_bound(bidirected_clique(6), 3);
        FAIL("expected a precondition error");
    } catch (const PreconditionError & e) {
        CHECK(e.kind() == PreconditionKind::outradius_mismatch);
    }

    // All labelled digraphs on 5 vertices with outradius 2.
    long seen = 0;
    const std::uint64_t total = std::uint64_t{1} << 20;
    for (std::uint64_t code = 0; code < total; ++code) {
        const auto d = oracle::from_code(5, code);
        if (oracle::summarize(d).rad_out != 2)
            continue;
        ++seen;
        CHECK(oracle::max_total_degree(d) <= 7);
        if (code % 97 == 0)
            CHECK(check_outradius_degree_bound(d, 2).violations == 0);
    }
    CHECK(seen > 0);
}

TEST_CASE("bipartite degree bound")
{
    const auto member = d_nrs_bipartite(12, 4);
    REQUIRE(member.partition);
    CHECK(member.partition->size(1) == 6);
    const auto report = check_bipartite_degree_bound(member.digraph, *member.partition, 4);
    CHECK(report.violations == 0);
    for (const auto & v : report.vertices) {
        CHECK(v.bound == 10);
        if (v.attains_bound) {
            REQUIRE(v.disjoint_paths_found);
        }
    }

    // Every bipartite strong digraph with classes {0,1,2} / {3,4,5} and outradius 4.
    const VertexPartition p(6, bit(3) | bit(4) | bit(5));
    std::vector<Arc> slots;
    for (int u = 0; u < 6; ++u)
        for (int w = 0; w < 6; ++w)
            if (p.class_of(u) != p.class_of(w))
                slots.push_back({u, w});
    REQUIRE(slots.size() == 18);
    int feasible = 0;
    for (std::uint32_t mask = 0; mask < (1U << 18); ++mask) {
        DenseDigraph d(6);
        for (int k = 0; k < 18; ++k)
            if ((mask >> k) & 1U)
                d.add_arc(slots[k].from, slots[k].to);
        const auto o = oracle::summarize(d);
        if (! o.strong || o.rad_out != 4)
            continue;
        ++feasible;
        CHECK(oracle::max_total_degree(d) <= 2 * 3 - 2);
        CHECK(check_bipartite_degree_bound(d, p, 4).violations == 0);
    }
    CHECK(feasible > 0);

    auto kind_of = [](const DenseDigraph & d, const VertexPartition & part, int r) {
        try {
            check_bipartite_degree_bound(d, part, r);
        } catch (const PreconditionError & e) {
            return static_cast<int>(e.kind());
        }
        return -1;
    };
    CHECK(kind_of(member.digraph, *member.partition, 5) == static_cast<int>(PreconditionKind::odd_radius));
    CHECK(kind_of(member.digraph, *member.partition, 2) == static_cast<int>(PreconditionKind::radius_too_small));
    CHECK(kind_of(bidirected_clique(4), VertexPartition(4, bit(2) | bit(3)), 4) ==
          static_cast<int>(PreconditionKind::not_bipartite));
    CHECK(kind_of(empty_digraph(4), VertexPartition(4, bit(2) | bit(3)), 4) ==
          static_cast<int>(PreconditionKind::not_strong));
}

TEST_CASE("clique_number")
{
    CHECK(clique_number(bidirected_clique(5)) == 5);
    CHECK(clique_number(directed_cycle(5)) == 1);
    CHECK(clique_number(g_nrs(12, 3, 2)) == 12 - 6 + 2);
    CHECK_THROWS_AS(clique_number(empty_digraph(21)), LimitError);
}

TEST_CASE("shortest_path_masks")
{
    const auto paths = shortest_path_masks(symmetric_cycle(6), 0, 3);
    CHECK(paths.size() == 2);
    for (auto m : paths)
        CHECK(std::popcount(m) == 3);
    CHECK(shortest_path_masks(directed_path(3), 2, 0).empty());
}

TEST_CASE("metric summary json round trip")
{
    std::mt19937_64 rng(12);
    for (int k = 0; k < 30; ++k) {
        const auto m = metric_summary(oracle::random_digraph(1 + k % 7, 0.5, rng));
        CHECK(metric_summary_from_json(to_json(m)) == m);
    }
    const auto j = to_json(metric_summary(gamma_bar(5)));
    CHECK(j["rad2"] == 5);
    CHECK(j["rad"] == "2.5");
}
