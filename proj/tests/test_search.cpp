#include <doctest.h>

#include "oracles.hpp"

#include <edl/canonical.hpp>
#include <edl/families.hpp>
#include <edl/search.hpp>

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>

using namespace edl;

namespace {

struct Expected {
    std::optional<long> value;
    std::uint64_t labeled = 0;
    std::size_t classes = 0;
};

bool oracle_bipartite_fixed(const DenseDigraph & d, int first)
{
    for (int i = 0; i < d.order(); ++i)
        for (int j = 0; j < d.order(); ++j)
            if (d.has_arc(i, j) && ((i < first) == (j < first)))
                return false;
    return true;
}

bool oracle_satisfies(const DenseDigraph & d, const oracle::Summary & o, const SearchConstraints & c)
{
    if (c.bipartite && ! oracle_bipartite_fixed(d, c.bipartite->first))
        return false;
    if (c.strong && ! o.strong)
        return false;
    if (c.rad_out_eq && o.rad_out != *c.rad_out_eq)
        return false;
    if (c.rad2_eq && o.rad2 != *c.rad2_eq)
        return false;
    if (c.diameter_eq && (! o.strong || o.diameter != *c.diameter_eq))
        return false;
    return true;
}

Expected brute_force(int n, const SearchConstraints & c, Objective objective)
{
    Expected e;
    std::vector<DenseDigraph> witnesses;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1));
    std::uint64_t feasible = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        const auto d = oracle::from_code(n, code);
        const auto o = oracle::summarize(d);
        if (! oracle_satisfies(d, o, c))
            continue;
        ++feasible;
        if (objective == Objective::count_extremal)
            continue;
        const long v = objective == Objective::max_size ? d.arc_count() : o.wiener;
        const bool better = ! e.value || (objective == Objective::max_size ? v > *e.value : v < *e.value);
        if (better) {
            e.value = v;
            witnesses.clear();
        }
        if (v == *e.value)
            witnesses.push_back(d);
    }
    if (objective == Objective::count_extremal) {
        if (feasible > 0) {
            e.value = static_cast<long>(feasible);
            e.labeled = feasible;
        }
        return e;
    }
    e.labeled = witnesses.size();
    std::vector<DenseDigraph> reps;
    for (const auto & w : witnesses)
        if (std::none_of(reps.begin(), reps.end(), [&](const DenseDigraph & r) { return oracle::isomorphic_bruteforce(r, w); }))
            reps.push_back(w);
    e.classes = reps.size();
    return e;
}

SearchTask make_task(int n, SearchConstraints c, Objective o, SearchMode m)
{
    SearchTask t;
    t.n = n;
    t.constraints = std::move(c);
    t.objective = o;
    t.mode = m;
    return t;
}

std::string temp_path(const std::string & name)
{
    const auto dir = std::filesystem::temp_directory_path() / "edl-tests";
    std::filesystem::create_directories(dir);
    const auto p = dir / name;
    std::filesystem::remove(p);
    return p.string();
}

} // namespace

TEST_CASE("every mode agrees with brute force at n = 4")
{
    std::vector<SearchConstraints> all;
    for (int strong = 0; strong <= 1; ++strong)
        for (int bip = 0; bip <= 2; ++bip)
            for (int radius = 0; radius <= 9; ++radius)
                for (int diameter = 0; diameter <= 3; ++diameter) {
                    SearchConstraints c;
                    c.strong = strong == 1;
                    if (bip == 1)
                        c.bipartite = std::pair{2, 2};
                    if (bip == 2)
                        c.bipartite = std::pair{1, 3};
                    if (radius >= 1 && radius <= 3)
                        c.rad_out_eq = radius;
                    if (radius >= 4)
                        c.rad2_eq = radius - 2;   // 2..7
                    if (diameter > 0)
                        c.diameter_eq = diameter;
                    all.push_back(c);
                }

    int compared = 0;
    for (const auto & c : all)
        for (auto objective : {Objective::max_size, Objective::min_wiener, Objective::count_extremal}) {
            if (objective == Objective::min_wiener && ! c.strong)
                continue;
            const auto expected = brute_force(4, c, objective);
            for (auto mode : {SearchMode::full, SearchMode::row_capped, SearchMode::backtracking}) {
                const auto report = enumerate(make_task(4, c, objective, mode));
                INFO(to_json(c).dump(), " ", objective_name(objective), " ", mode_name(mode));
                CHECK(report.extremal_value == expected.value);
                CHECK(report.extremal_labeled_count == expected.labeled);
                if (objective != Objective::count_extremal)
                    CHECK(report.iso_classes.size() == expected.classes);
                if (objective == Objective::count_extremal)
                    CHECK(report.pruning.feasible == expected.labeled);
                for (const auto & cert : report.iso_classes)
                    CHECK(verify_witness(cert).ok);
                ++compared;
            }
            if (objective != Objective::count_extremal) {
                const auto full = to_json(enumerate(make_task(4, c, objective, SearchMode::full)), false);
                for (auto mode : {SearchMode::row_capped, SearchMode::backtracking}) {
                    const auto other = to_json(enumerate(make_task(4, c, objective, mode)), false);
                    CHECK(other["extremal_value"] == full["extremal_value"]);
                    CHECK(other["iso_classes"] == full["iso_classes"]);
                }
            }
        }
    CHECK(compared > 500);
}

TEST_CASE("strong digraph counts")
{
    SearchConstraints strong;
    strong.strong = true;
    CHECK(oracle::count_strong(3) == 18);
    CHECK(oracle::count_strong(4) == 1606);
    for (auto mode : {SearchMode::full, SearchMode::row_capped, SearchMode::backtracking}) {
        CHECK(enumerate(make_task(3, strong, Objective::count_extremal, mode)).extremal_value == 18);
        CHECK(enumerate(make_task(4, strong, Objective::count_extremal, mode)).extremal_value == 1606);
    }
}

TEST_CASE("n = 5, radius 5/2: maximum size 11 in 7 classes")
{
    SearchConstraints c;
    c.strong = true;
    c.rad2_eq = 5;
    for (auto mode : {SearchMode::full, SearchMode::backtracking}) {
        const auto report = enumerate(make_task(5, c, Objective::max_size, mode));
        CHECK(report.extremal_value == 11);
        CHECK(report.iso_classes.size() == 7);
        for (const auto & cert : report.iso_classes) {
            CHECK(cert.digraph.arc_count() == 11);
            CHECK(verify_witness(cert).ok);
        }
    }
}

TEST_CASE("n = 5, outradius 2, not necessarily strong")
{
    SearchConstraints c;
    c.rad_out_eq = 2;
    const auto task = make_task(5, c, Objective::max_size, SearchMode::full);
    const auto report = enumerate(task);
    CHECK(report.extremal_value == closed_form(BoundName::fridman, {5, 2}));
    CHECK(report.extremal_value == 15);
    std::uint64_t witnesses = 0;
    for_each_feasible(task, [&](const DenseDigraph & d) {
        if (d.arc_count() != 15)
            return;
        ++witnesses;
        for (int v = 0; v < 5; ++v)
            CHECK(d.out_degree(v) == 3);
    });
    CHECK(witnesses == report.extremal_labeled_count);
}

TEST_CASE("n = 6, outradius 3 at row level")
{
    // The degree caps alone; the full n = 6 search runs in the acceptance binary.
    SearchConstraints c;
    c.strong = true;
    c.rad_out_eq = 3;
    c.bipartite = std::pair{3, 3};
    const auto report = enumerate(make_task(6, c, Objective::max_size, SearchMode::row_capped));
    const auto backtrack = enumerate(make_task(6, c, Objective::max_size, SearchMode::backtracking));
    CHECK(report.extremal_value == backtrack.extremal_value);
    CHECK(to_json(report, false)["iso_classes"] == to_json(backtrack, false)["iso_classes"]);
}

TEST_CASE("reports are independent of the worker count")
{
    SearchConstraints c;
    c.strong = true;
    c.rad2_eq = 5;
    auto task = make_task(5, c, Objective::min_wiener, SearchMode::backtracking);
    const auto one = to_json(enumerate(task), false).dump();
    task.threads = 4;
    CHECK(to_json(enumerate(task), false).dump() == one);
    task.threads = 3;
    CHECK(to_json(enumerate(task), false).dump() == one);
}

TEST_CASE("checkpoint resume")
{
    SearchConstraints c;
    c.strong = true;
    c.rad2_eq = 4;
    auto task = make_task(5, c, Objective::max_size, SearchMode::backtracking);
    const auto baseline = enumerate(task);

    task.checkpoint_path = temp_path("resume.json");
    const auto first = enumerate(task);
    CHECK(first.shards_resumed == 0);
    CHECK(std::filesystem::exists(*task.checkpoint_path));
    CHECK(to_json(first, false) == to_json(baseline, false));

    const auto again = enumerate(task);
    CHECK(again.shards_resumed == again.shards);
    CHECK(to_json(again, false) == to_json(baseline, false));

    // Drop half of the completed shards, as if interrupted.
    auto j = Json::parse(read_file(*task.checkpoint_path));
    auto & completed = j["completed"];
    const std::size_t keep = completed.size() / 2;
    completed.erase(completed.begin() + static_cast<long>(keep), completed.end());
    write_file(*task.checkpoint_path, j.dump());
    const auto partial = enumerate(task);
    CHECK(partial.shards_resumed == keep);
    CHECK(to_json(partial, false) == to_json(baseline, false));

    write_file(*task.checkpoint_path, "{not json");
    CHECK_THROWS_AS(enumerate(task), ParseError);

    j["version"] = 99;
    write_file(*task.checkpoint_path, j.dump());
    CHECK_THROWS_AS(enumerate(task), ParseError);

    auto other = make_task(5, c, Objective::max_size, SearchMode::backtracking);
    other.checkpoint_path = temp_path("mismatch.json");
    enumerate(other);
    other.objective = Objective::count_extremal;
    CHECK_THROWS_AS(enumerate(other), DomainError);
}

TEST_CASE("checkpoint directory override")
{
    SearchTask task;
    task.n = 4;
    task.checkpoint_path = "/nowhere/run.json";
    CHECK(checkpoint_location(task) == "/nowhere/run.json");
    const auto dir = std::filesystem::temp_directory_path() / "edl-ckpt";
    setenv("EDL_CHECKPOINT_DIR", dir.c_str(), 1);
    CHECK(checkpoint_location(task) == (dir / "run.json").string());
    task.checkpoint_path.reset();
    const auto generated = checkpoint_location(task);
    REQUIRE(generated);
    CHECK(generated->rfind(dir.string(), 0) == 0);
    unsetenv("EDL_CHECKPOINT_DIR");
    CHECK_FALSE(checkpoint_location(task));
}

TEST_CASE("certificates")
{
    SearchConstraints c;
    c.strong = true;
    const auto cert = make_certificate(canonical_form(directed_cycle(4)), 4, c, 6);
    CHECK(verify_witness(cert).ok);

    auto flipped = cert;
    int u = 0, v = 1;
    while (flipped.digraph.has_arc(u, v))
        ++v;
    flipped.digraph.add_arc(u, v);
    const auto check = verify_witness(flipped);
    CHECK_FALSE(check.ok);
    CHECK(std::find(check.mismatches.begin(), check.mismatches.end(), "metrics.arc_count") != check.mismatches.end());
    CHECK(std::find(check.mismatches.begin(), check.mismatches.end(), "hash") != check.mismatches.end());

    const auto replayed = certificate_from_json(Json::parse(to_json(cert).dump()));
    CHECK(verify_witness(replayed).ok);
    CHECK(replayed.hash == cert.hash);

    auto wrong = make_certificate(directed_path(4), 4, c, 1);
    const auto w = verify_witness(wrong);
    CHECK_FALSE(w.ok);
    CHECK(w.mismatches == std::vector<std::string>{"constraints"});

    // Class sizes are checked up to relabelling, so canonical witnesses pass.
    SearchConstraints star;
    star.bipartite = std::pair{1, 3};
    const auto k13 = relabel(bidirected_complete_bipartite(1, 3), std::vector<int>{3, 0, 1, 2});
    CHECK(satisfies(k13, star));
    star.bipartite = std::pair{2, 2};
    CHECK_FALSE(satisfies(k13, star));
    CHECK(satisfies(empty_digraph(4), star));
    CHECK_FALSE(satisfies(directed_cycle(3), SearchConstraints{.bipartite = std::pair{1, 2}}));
}

TEST_CASE("classify_extremal")
{
    std::mt19937_64 rng(1);
    std::vector<DenseDigraph> relabelled;
    for (int k = 0; k < 3; ++k)
        relabelled.push_back(oracle::permute(directed_cycle(4), oracle::random_permutation(4, rng)));
    CHECK(classify_extremal(relabelled).size() == 1);
    CHECK(classify_extremal({}).empty());
    CHECK_THROWS_AS(classify_extremal({directed_cycle(3), directed_cycle(4)}), DomainError);
}

TEST_CASE("task validation")
{
    SearchConstraints c;
    CHECK_THROWS_AS(enumerate(make_task(9, c, Objective::max_size, SearchMode::backtracking)), LimitError);
    CHECK_THROWS_AS(enumerate(make_task(6, c, Objective::max_size, SearchMode::full)), LimitError);
    CHECK_THROWS_AS(enumerate(make_task(4, c, Objective::min_wiener, SearchMode::full)), DomainError);
    c.rad_out_eq = 2;
    c.rad2_eq = 4;
    CHECK_THROWS_AS(enumerate(make_task(4, c, Objective::max_size, SearchMode::full)), DomainError);
    SearchConstraints b;
    b.bipartite = std::pair{2, 3};
    CHECK_THROWS_AS(enumerate(make_task(4, b, Objective::max_size, SearchMode::full)), DomainError);

    CHECK(parse_mode("row-capped") == SearchMode::row_capped);
    CHECK(parse_objective("min_wiener") == Objective::min_wiener);
    CHECK_THROWS_AS(parse_mode("greedy"), DomainError);
}

TEST_CASE("task and report json")
{
    SearchConstraints c;
    c.strong = true;
    c.bipartite = std::pair{2, 3};
    c.diameter_eq = 4;
    CHECK(constraints_from_json(to_json(c)) == c);
    auto task = make_task(5, c, Objective::count_extremal, SearchMode::row_capped);
    const auto back = task_from_json(to_json(task));
    CHECK(back.n == 5);
    CHECK(back.constraints == c);
    CHECK(back.objective == Objective::count_extremal);
    CHECK(back.mode == SearchMode::row_capped);

    SearchConstraints s;
    s.strong = true;
    const auto report = enumerate(make_task(3, s, Objective::max_size, SearchMode::full));
    const auto j = to_json(report);
    CHECK(j.contains("wall_time_ms"));
    CHECK_FALSE(to_json(report, false).contains("wall_time_ms"));
    CHECK(j["extremal_value"] == 6);
    CHECK(j["iso_classes"].size() == 1);
}
