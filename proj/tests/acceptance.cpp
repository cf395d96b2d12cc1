// Acceptance criteria: one PASS/FAIL line each. Expected values are written
// out here or recomputed with the oracles; tolerances and budgets are fixed.

#include "oracles.hpp"

#include <edl/canonical.hpp>
#include <edl/families.hpp>
#include <edl/io.hpp>
#include <edl/metrics.hpp>
#include <edl/search.hpp>
#include <edl/structure.hpp>

#include <bit>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace edl;

namespace {

// Exact comparisons only; the one non-integer threshold is compared as
// 18tk >= n in integers.
constexpr long kExactTolerance = 0;

constexpr double kBudgetFormulaSweep = 10;
constexpr double kBudgetMetricSweep = 30;
constexpr double kBudgetN5Radius = 60;
constexpr double kBudgetN6Outradius = 600;
constexpr double kBudgetN6Figures = 7200;
constexpr double kBudgetTranscription = 1;
constexpr double kBudgetDegreeBounds = 900;
constexpr double kBudgetChains = 60;
constexpr double kBudgetBiclique = 60;
constexpr double kBudgetRemovals = 60;
constexpr double kBudgetConjectureProbe = 4 * 3600;

constexpr int kBicliqueInstances = 50;
constexpr int kBicliqueMaxOrder = 64;
constexpr std::uint64_t kBicliqueSeed = 5202;

/// Collects failure messages for one criterion.
class Tally {
public:
    template <typename A, typename B>
    void equal(const A & got, const B & want, const std::string & what)
    {
        if (! (got == want)) {
            std::ostringstream s;
            s << what << ": got " << got << ", want " << want;
            fail(s.str());
        }
    }

    void expect(bool ok, const std::string & what)
    {
        if (! ok)
            fail(what);
    }

    void fail(const std::string & what)
    {
        if (failures_++ < 5)
            first_ += (first_.empty() ? "" : "; ") + what;
    }

    long failures() const { return failures_; }
    const std::string & first() const { return first_; }

private:
    long failures_ = 0;
    std::string first_;
};

struct Criterion {
    int id;
    std::string name;
    double budget_s;
    bool extended;
    std::function<void(Tally &)> body;
};

long cdiv(long a, long b) { return (a + b - 1) / b; }

long biconn_general(long n, long r) { return (n - (r - 1)) * (n - (r - 1)) + (r - 3); }
long vizing(long n, long r) { return ((n - 2 * r) * (n - 2 * r) + 5 * n - 6 * r) / 2; }
long fridman(long n, long r) { return n * (n - r) + (r * r - r - 2) / 2; }
long bip_digraph(long n, long r) { return cdiv(n * (n - 2), 4) + r - 4 + (n - r + 3) * (n - r + 3) / 4; }
long chain_optimum(long n, long r) { return r + 2 * (n - r - 1) + (n - r - 1) * (n - r - 1) / 4; }

std::string params(std::initializer_list<int> values)
{
    std::string s = "(";
    for (int v : values)
        s += (s.size() > 1 ? "," : "") + std::to_string(v);
    return s + ")";
}

bool respects_partition(const DenseDigraph & d, const VertexPartition & p)
{
    for (int u = 0; u < d.order(); ++u)
        for (int w = 0; w < d.order(); ++w)
            if (d.has_arc(u, w) && p.class_of(u) == p.class_of(w))
                return false;
    return true;
}

/// Placements (a, b, c, j) of bip_digraph_extremal for given n, r.
void for_each_placement(int n, int r, const std::function<void(int, int, int, int)> & visit)
{
    const int total = n - r + 2;
    for (int j = 1; j + 2 <= r; ++j)
        for (int a = 1; a <= total - 2; ++a)
            for (int b = 1; a + b <= total - 1; ++b) {
                const int c = total - a - b;
                if (j + 2 == r && c != 1)
                    continue;
                visit(a, b, c, j);
            }
}

SearchTask task(int n, SearchConstraints c, Objective o, SearchMode m)
{
    SearchTask t;
    t.n = n;
    t.constraints = std::move(c);
    t.objective = o;
    t.mode = m;
    t.threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    return t;
}

/// Checks each witness with the oracle and checks the classes are pairwise non-isomorphic.
void check_witnesses(Tally & t, const SearchReport & rep, const std::function<void(const DenseDigraph &, const oracle::Summary &)> & each)
{
    for (std::size_t i = 0; i < rep.iso_classes.size(); ++i) {
        const auto & d = rep.iso_classes[i].digraph;
        const auto o = oracle::summarize(d);
        const auto & c = rep.task.constraints;
        t.expect(! c.strong || o.strong, "witness not strong");
        t.expect(! c.rad_out_eq || o.rad_out == *c.rad_out_eq, "witness outradius");
        t.expect(! c.rad2_eq || o.rad2 == *c.rad2_eq, "witness radius");
        each(d, o);
        for (std::size_t j = 0; j < i; ++j)
            t.expect(! oracle::isomorphic_bruteforce(d, rep.iso_classes[j].digraph), "duplicate class");
    }
}

void formula_sweep(Tally & t)
{
    for (int r = 3; r <= 20; ++r)
        for (int n = 2 * r; n <= 40; ++n)
            for (int s = 1; 2 * s <= n - 2 * r + 2; ++s) {
                t.equal(d_nrs(n, r, s).arc_count(), biconn_general(n, r), "d_nrs" + params({n, r, s}));
                t.equal(g_nrs(n, r, s).arc_count(), 2 * vizing(n, r), "g_nrs" + params({n, r, s}));
            }
    for (int n = 4; n <= 40; ++n)
        for (int r = 3; r < n; ++r)
            for (int i = 1; i <= r - 2; ++i)
                for (int s = 1; s <= n - r; ++s)
                    t.equal(gamma_star_blowup(n, r, i, s).arc_count(), fridman(n, r),
                            "gamma_star_blowup" + params({n, r, i, s}));
    for (int r = 3; r <= 38; ++r)
        for (int n = r + 1; n <= 40; ++n) {
            int extremal = 0;
            for_each_placement(n, r, [&](int a, int b, int c, int j) {
                if (std::abs(a + c - (b + 1)) > 1)
                    return;
                const auto f = bip_digraph_extremal(n, r, a, b, c, j);
                if (! f.extremal_profile)
                    return;
                ++extremal;
                t.equal(f.digraph.arc_count(), bip_digraph(n, r), "bip_digraph_extremal" + params({n, r, a, b, c, j}));
            });
            if (r >= 4 && n >= r + 2)
                t.expect(extremal > 0, "no extremal placement at " + params({n, r}));
        }
    for (int n = 8; n <= 40; ++n)
        t.equal(d_nrs_bipartite(n, 4).digraph.arc_count(), (n - 2) * (n - 2) / 2, "d_nrs_bipartite" + params({n, 4}));
}

void metric_sweep(Tally & t)
{
    for (int r = 3; r <= 6; ++r)
        for (int n = 2 * r; n <= 2 * r + 6; ++n)
            for (int s = 1; 2 * s <= n - 2 * r + 2; ++s) {
                const auto o = oracle::summarize(d_nrs(n, r, s));
                t.expect(o.strong, "d_nrs not strong " + params({n, r, s}));
                t.equal(o.rad_out, r, "rad_out d_nrs" + params({n, r, s}));
            }
    for (int r = 3; r <= 6; ++r)
        for (int n = r + 1; n <= r + 8; ++n)
            for (int i = 1; i <= r - 2; ++i)
                for (int s = 1; s <= n - r; ++s) {
                    const auto o = oracle::summarize(gamma_star_blowup(n, r, i, s));
                    t.expect(! o.strong, "gamma_star_blowup strong " + params({n, r, i, s}));
                    t.equal(o.rad_out, r, "rad_out gamma_star_blowup" + params({n, r, i, s}));
                }
    for (int r = 2; r <= 10; ++r)
        t.equal(oracle::summarize(gamma_bar(2 * r)).rad2, 2 * r, "rad2 gamma_bar" + params({2 * r}));
    for (int r = 3; r <= 5; ++r)
        for (int n = 2 * r + 1; n <= 2 * r + 4; ++n)
            for (int i = 1; i <= 2 * r - 2; ++i)
                for (int s = 1; s <= n - 2 * r; ++s)
                    t.equal(oracle::summarize(gamma_bar_blowup(n, 2 * r, i, s)).rad2, 2 * r,
                            "rad2 gamma_bar_blowup" + params({n, 2 * r, i, s}));
    for (int r = 3; r <= 8; ++r)
        for (int n = r + 1; n <= 16; ++n)
            for_each_placement(n, r, [&](int a, int b, int c, int j) {
                const auto f = bip_digraph_extremal(n, r, a, b, c, j);
                if (! f.extremal_profile)
                    return;
                t.expect(f.partition && respects_partition(f.digraph, *f.partition),
                         "bip_digraph_extremal not bipartite " + params({n, r, a, b, c, j}));
                t.equal(oracle::summarize(f.digraph).rad_out, r, "rad_out bip_digraph_extremal" + params({n, r, a, b, c, j}));
            });
    for (int r = 4; r <= 7; ++r)
        for (int n = 2 * r; n <= 2 * r + 6; ++n) {
            const auto f = d_nrs_bipartite(n, r);
            const auto o = oracle::summarize(f.digraph);
            t.expect(o.strong, "d_nrs_bipartite not strong " + params({n, r}));
            t.equal(o.rad_out, r, "rad_out d_nrs_bipartite" + params({n, r}));
            t.expect(f.partition && respects_partition(f.digraph, *f.partition),
                     "d_nrs_bipartite not bipartite " + params({n, r}));
            t.expect(oracle::bipartite_bruteforce(f.digraph), "d_nrs_bipartite has an odd cycle " + params({n, r}));
        }
}

void n5_radius(Tally & t)
{
    SearchConstraints c;
    c.strong = true;
    c.rad2_eq = 5;
    const auto rep = enumerate(task(5, c, Objective::max_size, SearchMode::backtracking));
    t.equal(rep.extremal_value.value_or(-1), 11, "max size");
    t.equal(rep.iso_classes.size(), 7U, "classes");
    check_witnesses(t, rep, [&](const DenseDigraph & d, const oracle::Summary &) { t.equal(d.arc_count(), 11, "witness size"); });
}

void n6_outradius(Tally & t)
{
    SearchConstraints c;
    c.strong = true;
    c.rad_out_eq = 3;
    const auto rep = enumerate(task(6, c, Objective::max_size, SearchMode::row_capped));
    t.equal(rep.extremal_value.value_or(-1), 16, "max size");
    t.equal(rep.iso_classes.size(), 1U, "classes");
    check_witnesses(t, rep, [&](const DenseDigraph & d, const oracle::Summary &) {
        t.expect(oracle::isomorphic_bruteforce(d, d_nrs(6, 3, 1)), "witness is not D(6,3,1)");
    });
}

void n6_figures(Tally & t)
{
    SearchConstraints half;
    half.strong = true;
    half.rad2_eq = 5;
    const auto w5 = enumerate(task(6, half, Objective::min_wiener, SearchMode::backtracking));
    t.equal(w5.extremal_value.value_or(-1), 45, "rad 5/2 min Wiener");
    t.equal(w5.iso_classes.size(), 2U, "rad 5/2 min Wiener classes");
    check_witnesses(t, w5, [&](const DenseDigraph & d, const oracle::Summary & o) {
        t.equal(o.wiener, 45, "rad 5/2 witness Wiener");
        t.equal(d.arc_count(), 18, "rad 5/2 witness size");
    });

    const auto s5 = enumerate(task(6, half, Objective::max_size, SearchMode::backtracking));
    t.equal(s5.extremal_value.value_or(-1), 20, "rad 5/2 max size");
    t.equal(s5.iso_classes.size(), 1U, "rad 5/2 max size classes");
    check_witnesses(t, s5, [&](const DenseDigraph & d, const oracle::Summary &) {
        t.expect(oracle::isomorphic_bruteforce(d, gamma_bar(5)), "rad 5/2 max size witness is not gamma_bar(5)");
    });

    SearchConstraints three = half;
    three.rad2_eq = 6;
    const auto w6 = enumerate(task(6, three, Objective::min_wiener, SearchMode::backtracking));
    t.equal(w6.extremal_value.value_or(-1), 52, "rad 3 min Wiener");
    t.expect(! w6.iso_classes.empty(), "rad 3 min Wiener has no witness");
    check_witnesses(t, w6, [&](const DenseDigraph & d, const oracle::Summary &) { t.equal(d.arc_count(), 16, "rad 3 witness size"); });

    const auto s6 = enumerate(task(6, three, Objective::max_size, SearchMode::backtracking));
    t.equal(s6.extremal_value.value_or(-1), 17, "rad 3 max size");
    t.expect(! s6.iso_classes.empty(), "rad 3 max size has no witness");
    check_witnesses(t, s6, [&](const DenseDigraph &, const oracle::Summary & o) { t.equal(o.wiener, 54, "rad 3 witness Wiener"); });
}

void transcription(Tally & t)
{
    const std::string dir = EDL_DATA_DIR;
    const auto fig8 = parse_adm(read_file(dir + "/fig8-left.adm"));
    const auto o8 = oracle::summarize(fig8);
    t.equal(fig8.arc_count(), 18, "fig8 size");
    t.equal(o8.rad2, 5, "fig8 rad2");
    t.equal(o8.wiener, 45, "fig8 Wiener");
    const auto fig9 = parse_adm(read_file(dir + "/fig9-left.adm"));
    const auto o9 = oracle::summarize(fig9);
    t.equal(fig9.arc_count(), 16, "fig9 size");
    t.equal(o9.rad2, 6, "fig9 rad2");
    t.equal(o9.wiener, 52, "fig9 Wiener");
}

void degree_bounds(Tally & t)
{
    constexpr int n = 5;
    std::vector<long> seen(n + 1, 0);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1))); ++code) {
        const auto d = oracle::from_code(n, code);
        const auto o = oracle::summarize(d);
        if (! o.strong)
            continue;
        const int r = o.rad_out;
        ++seen[r];
        const int bound = 2 * (n - 1) - (2 * r - 3);
        const bool oracle_ok = oracle::max_total_degree(d) <= bound;
        t.expect(oracle_ok, "outradius bound violated by code " + std::to_string(code));
        const auto rep = check_outradius_degree_bound(d, r);
        t.equal(rep.violations == 0, oracle_ok, "library and oracle disagree on code " + std::to_string(code));
    }
    for (int r = 1; r < n; ++r)
        t.expect(seen[r] > 0, "outradius " + std::to_string(r) + " not attained");

    // Classes {0,1,2} and {3,4,5}; only the 18 cross pairs can carry arcs.
    const VertexPartition part(6, 0x38);
    std::vector<std::pair<int, int>> cross;
    for (int u = 0; u < 6; ++u)
        for (int w = 0; w < 6; ++w)
            if (part.class_of(u) != part.class_of(w))
                cross.emplace_back(u, w);
    long scanned = 0;
    for (std::uint32_t mask = 0; mask < (1U << cross.size()); ++mask) {
        DenseDigraph d(6);
        for (std::size_t k = 0; k < cross.size(); ++k)
            if ((mask >> k) & 1U)
                d.add_arc(cross[k].first, cross[k].second);
        const auto o = oracle::summarize(d);
        if (! o.strong || o.rad_out != 4)
            continue;
        ++scanned;
        t.expect(oracle::max_total_degree(d) <= 2 * 3 - (4 - 2), "bipartite bound violated by mask " + std::to_string(mask));
        t.equal(check_bipartite_degree_bound(d, part, 4).violations, 0, "library bipartite violations");
    }
    t.expect(scanned > 0, "no bipartite digraph with outradius 4");
}

std::vector<std::vector<int>> compositions(int total, int parts)
{
    std::vector<std::vector<int>> out;
    for (std::uint32_t cuts = 0; cuts < (1U << (total - 1)); ++cuts) {
        if (std::popcount(cuts) != parts - 1)
            continue;
        std::vector<int> c;
        int run = 1;
        for (int k = 0; k < total - 1; ++k) {
            if ((cuts >> k) & 1U) {
                c.push_back(run);
                run = 1;
            }
            else
                ++run;
        }
        c.push_back(run);
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void chains(Tally & t)
{
    for (int n = 4; n <= 14; ++n)
        for (int r = 3; r < n; ++r) {
            long best = -1;
            std::vector<std::vector<int>> argmax;
            for (const auto & c : compositions(n - 1, r)) {
                long v = c[0];
                for (std::size_t i = 0; i + 1 < c.size(); ++i)
                    v += static_cast<long>(c[i]) * c[i + 1];
                if (v > best) {
                    best = v;
                    argmax.clear();
                }
                if (v == best)
                    argmax.push_back(c);
            }
            const auto opt = maximize_chain(n, r);
            t.equal(opt.value, best, "chain value" + params({n, r}));
            t.equal(best, chain_optimum(n, r), "closed chain optimum" + params({n, r}));
            t.expect(opt.optima == argmax, "optimum set" + params({n, r}));
            t.expect(characterized_chains(n, r) == argmax, "characterized set" + params({n, r}));
        }
    t.equal(maximize_chain(10, 4).value, 20, "instance (10,4)");
}

void biclique(Tally & t)
{
    std::mt19937_64 rng(kBicliqueSeed);
    for (int k = 0; k < kBicliqueInstances; ++k) {
        const int tt = 1 + k % 3;
        std::uniform_int_distribution<int> order(9 * tt + 1, kBicliqueMaxOrder);
        const int n = order(rng);
        const int a = n / 2;
        const auto d = oracle::random_dense_bipartite(n, a, tt, rng);
        const std::string tag = params({k, n, tt});
        t.expect(2L * d.arc_count() >= static_cast<long>(n) * (n - tt), "hypotheses fail " + tag);
        const VertexPartition p(n, first_n(n) & ~first_n(a));
        const auto res = extract_bidirected_biclique(d, p, tt);
        t.expect(res.hypotheses_hold, "procedure rejects hypotheses " + tag);
        t.expect(18L * tt * res.k >= n - kExactTolerance, "k = " + std::to_string(res.k) + " below n/18t " + tag);
        t.equal(std::popcount(res.side1), res.k, "side1 size " + tag);
        t.equal(std::popcount(res.side2), res.k, "side2 size " + tag);
        t.expect((res.side1 & ~p.members(1)) == 0 && (res.side2 & ~p.members(2)) == 0, "sides cross classes " + tag);
        for (VertexSet x = res.side1; x; x &= x - 1)
            for (VertexSet y = res.side2; y; y &= y - 1) {
                const int u = std::countr_zero(x), w = std::countr_zero(y);
                t.expect(d.has_arc(u, w) && d.has_arc(w, u), "missing arc in biclique " + tag);
            }
    }
}

void removals(Tally & t)
{
    for (int r : {3, 4})
        for (int n = 2 * r + 1; n <= 12; ++n)
            for (int s = 1; 2 * s <= n - 2 * r + 2; ++s) {
                const auto chain = reduce_by_removals(d_nrs(n, r, s), 2 * r);
                t.equal(chain.result.order(), 2 * r, "final order" + params({n, r, s}));
                t.expect(oracle::isomorphic_bruteforce(chain.result, d_2r_r_1(r)), "final digraph" + params({n, r, s}));
            }
}

void conjecture_probe(Tally & t)
{
    SearchConstraints c;
    c.strong = true;
    c.rad_out_eq = 4;
    c.bipartite = std::pair{4, 4};
    auto tk = task(8, c, Objective::max_size, SearchMode::backtracking);
    const auto rep = enumerate(tk);
    t.equal(rep.extremal_value.value_or(-1), 18, "max size");
    t.equal(rep.iso_classes.size(), 1U, "classes");
    check_witnesses(t, rep, [&](const DenseDigraph & d, const oracle::Summary &) {
        t.expect(is_isomorphic(d, d_nrs_bipartite(8, 4).digraph), "witness is not the balanced bipartite member");
    });
}

} // namespace

int main(int argc, char ** argv)
{
    bool extended = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--extended") == 0)
            extended = true;

    const std::vector<Criterion> criteria{
        {1, "formula and family agreement, n <= 40", kBudgetFormulaSweep, false, formula_sweep},
        {2, "family metric sweep", kBudgetMetricSweep, false, metric_sweep},
        {3, "n = 5, strong, rad2 = 5: max size 11 in 7 classes", kBudgetN5Radius, false, n5_radius},
        {4, "n = 6, strong, outradius 3: max size 16, unique D(6,3,1)", kBudgetN6Outradius, false, n6_outradius},
        {5, "n = 6 Wiener and size extremes at rad2 = 5 and 6", kBudgetN6Figures, false, n6_figures},
        {6, "bundled figure digraphs", kBudgetTranscription, false, transcription},
        {7, "degree bounds, exhaustive", kBudgetDegreeBounds, false, degree_bounds},
        {8, "chain optimum sets, 3 <= r < n <= 14", kBudgetChains, false, chains},
        {9, "biclique extraction on 50 random instances", kBudgetBiclique, false, biclique},
        {10, "removal chains reach D(2r,r,1)", kBudgetRemovals, false, removals},
        {11, "n = 8 bipartite 4+4, outradius 4: max size 18", kBudgetConjectureProbe, true, conjecture_probe},
    };

    int failed = 0;
    for (const auto & c : criteria) {
        if (c.extended != extended)
            continue;
        Tally t;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(t);
        } catch (const std::exception & e) {
            t.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_s)
            t.fail("over budget");
        const bool ok = t.failures() == 0;
        failed += ok ? 0 : 1;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << secs << " s, budget " << c.budget_s
             << " s)";
        if (! ok)
            line << ": " << t.failures() << " failure(s): " << t.first();
        std::cout << line.str() << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
