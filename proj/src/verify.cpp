#include <edl/verify.hpp>

#include <edl/canonical.hpp>
#include <edl/families.hpp>
#include <edl/metrics.hpp>
#include <edl/structure.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace edl {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxGraphOrder = 7;         // undirected enumeration, 2^21 graphs
constexpr int kMaxBipartiteGraphOrder = 10;

struct Case {
    int n;
    int r;
};

// Accumulates per-case evidence and the first counterexample.
class Ledger {
public:
    void pass(Json entry)
    {
        entry["ok"] = true;
        evidence_.push_back(std::move(entry));
        ++cases_;
    }

    void vacuous(Json entry)
    {
        entry["ok"] = true;
        entry["vacuous"] = true;
        evidence_.push_back(std::move(entry));
        ++cases_;
        ++vacuous_;
    }

    void fail(Json entry, const std::string & why, const DenseDigraph & witness, const SearchConstraints & c)
    {
        entry["ok"] = false;
        entry["failure"] = why;
        evidence_.push_back(std::move(entry));
        ++cases_;
        if (! counterexample_) {
            counterexample_ = make_certificate(witness, witness.order(), c, 1);
            detail_ = why;
        }
    }

    void note_scope(const std::string & scope) { scopes_.insert(scope); }
    bool has_scope() const { return ! scopes_.empty(); }

    void finish(VerificationReport & out)
    {
        out.cases = cases_;
        out.vacuous_cases = vacuous_;
        out.evidence = std::move(evidence_);
        out.counterexample = std::move(counterexample_);
        if (out.counterexample) {
            out.verdict = Verdict::refuted;
            out.detail = detail_;
        } else if (cases_ == vacuous_) {
            out.verdict = Verdict::inconclusive;
            out.detail = cases_ == 0 ? "no parameter in range" : "every case is vacuous";
        } else {
            out.verdict = Verdict::confirmed;
            out.detail = std::to_string(cases_ - vacuous_) + " cases checked";
        }
        std::string scope;
        for (const auto & s : scopes_)
            scope += (scope.empty() ? "" : " + ") + s;
        out.scope = scope;
    }

private:
    Json evidence_ = Json::array();
    std::optional<ExtremalCertificate> counterexample_;
    std::string detail_;
    std::set<std::string> scopes_;
    int cases_ = 0;
    int vacuous_ = 0;
};

Json case_entry(int n, int r)
{
    Json j;
    j["n"] = n;
    j["r"] = r;
    return j;
}

SearchConstraints with_rad_out(int r, bool strong = false)
{
    SearchConstraints c;
    c.strong = strong;
    c.rad_out_eq = r;
    return c;
}

std::int64_t bound(BoundName name, int n, int r, int rad2 = 0)
{
    return closed_form(name, BoundParams{n, r, rad2});
}

std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

std::string scope_of(CheckId id, int n, int r)
{
    switch (id) {
    case CheckId::biconn:
        return r == 3 ? "theorem range" : "conjecture range";
    case CheckId::radconj:
        return n == r + 1 ? "theorem range" : "conjecture range";
    case CheckId::bipbiconn:
        return "conjecture range";
    case CheckId::asymp_remark:
        return "remark";
    default:
        return "theorem range";
    }
}

// ---------------------------------------------------------------- extremal set comparison

std::set<DenseDigraph> canonical_set(const std::vector<DenseDigraph> & ds)
{
    std::set<DenseDigraph> out;
    for (const auto & d : ds)
        out.insert(canonical_form(d));
    return out;
}

Json adm_list(const std::set<DenseDigraph> & ds)
{
    Json out = Json::array();
    for (const auto & d : ds)
        out.push_back(adjacency_string(d));
    return out;
}

// Compares an exhaustive optimum and its class set with the claimed value and
// family. `observed` holds canonical forms.
void compare_extremal(Ledger & ledger, Json entry, const SearchConstraints & c, std::int64_t expected,
                      std::optional<std::int64_t> observed_value, const std::set<DenseDigraph> & observed,
                      const std::vector<DenseDigraph> & claimed_members)
{
    const auto claimed = canonical_set(claimed_members);
    entry["expected_value"] = expected;
    entry["observed_value"] = observed_value ? Json(*observed_value) : Json(nullptr);
    entry["observed_classes"] = adm_list(observed);
    entry["claimed_classes"] = adm_list(claimed);
    if (! observed_value) {
        if (claimed.empty())
            ledger.vacuous(std::move(entry));
        else
            ledger.fail(std::move(entry), "no feasible digraph although the claimed family is non-empty",
                        *claimed.begin(), SearchConstraints{});
        return;
    }
    if (*observed_value > expected) {
        ledger.fail(std::move(entry), "optimum exceeds the bound", *observed.begin(), c);
        return;
    }
    if (*observed_value < expected) {
        const auto & w = claimed.empty() ? *observed.begin() : *claimed.begin();
        ledger.fail(std::move(entry), "bound is not attained", w, claimed.empty() ? c : SearchConstraints{});
        return;
    }
    for (const auto & d : observed)
        if (! claimed.contains(d)) {
            ledger.fail(std::move(entry), "extremal digraph outside the claimed family", d, c);
            return;
        }
    for (const auto & d : claimed)
        if (! observed.contains(d)) {
            ledger.fail(std::move(entry), "claimed family member is not extremal", d, SearchConstraints{});
            return;
        }
    ledger.pass(std::move(entry));
}

std::set<DenseDigraph> classes_of(const SearchReport & report)
{
    std::set<DenseDigraph> out;
    for (const auto & cert : report.iso_classes)
        out.insert(cert.digraph);
    return out;
}

SearchReport run_search(int n, const SearchConstraints & c, SearchMode mode, int threads)
{
    SearchTask task;
    task.n = n;
    task.constraints = c;
    task.objective = Objective::max_size;
    task.mode = mode;
    task.threads = threads;
    return enumerate(task);
}

// ---------------------------------------------------------------- undirected enumeration

// Radius of the graph given by symmetric rows, or kUnreachable when disconnected.
int graph_radius(const std::array<VertexSet, 16> & rows, int n)
{
    const VertexSet all = first_n(n);
    int best = kUnreachable;
    for (int v = 0; v < n; ++v) {
        VertexSet seen = bit(v);
        VertexSet frontier = seen;
        int ecc = 0;
        while (seen != all) {
            VertexSet next = 0;
            for (VertexSet f = frontier; f; f &= f - 1)
                next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
            next &= ~seen;
            if (next == 0)
                return kUnreachable;
            seen |= next;
            frontier = next;
            ++ecc;
            if (ecc >= best)
                break;
        }
        best = std::min(best, ecc);
    }
    return best;
}

struct GraphOptimum {
    int edges = -1;
    std::set<DenseDigraph> classes;
};

DenseDigraph graph_from_rows(const std::array<VertexSet, 16> & rows, int n)
{
    return DenseDigraph::from_rows(std::span<const VertexSet>(rows.data(), static_cast<std::size_t>(n)));
}

void record(GraphOptimum & opt, int edges, const std::array<VertexSet, 16> & rows, int n)
{
    if (edges < opt.edges)
        return;
    if (edges > opt.edges) {
        opt.edges = edges;
        opt.classes.clear();
    }
    opt.classes.insert(canonical_form(graph_from_rows(rows, n)));
}

// Every graph on n vertices, grouped by radius.
std::map<int, GraphOptimum> graph_optima(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::map<int, GraphOptimum> out;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::array<VertexSet, 16> rows{};
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1U) {
                rows[static_cast<std::size_t>(pairs[k].first)] |= bit(pairs[k].second);
                rows[static_cast<std::size_t>(pairs[k].second)] |= bit(pairs[k].first);
            }
        const int rad = graph_radius(rows, n);
        if (rad == kUnreachable)
            continue;
        record(out[rad], std::popcount(mask), rows, n);
    }
    return out;
}

// Every bipartite graph on n vertices with the given radius; classes 0..a-1 and a..n-1.
GraphOptimum bipartite_graph_optimum(int n, int r)
{
    GraphOptimum opt;
    for (int a = 1; 2 * a <= n; ++a) {
        const int b = n - a;
        const int m = a * b;
        const std::uint64_t total = std::uint64_t{1} << m;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const int edges = std::popcount(mask);
            if (edges < opt.edges)
                continue;
            std::array<VertexSet, 16> rows{};
            for (int k = 0; k < m; ++k)
                if ((mask >> k) & 1U) {
                    const int u = k / b;
                    const int w = a + k % b;
                    rows[static_cast<std::size_t>(u)] |= bit(w);
                    rows[static_cast<std::size_t>(w)] |= bit(u);
                }
            if (graph_radius(rows, n) == r)
                record(opt, edges, rows, n);
        }
    }
    return opt;
}

// ---------------------------------------------------------------- claimed families

std::vector<DenseDigraph> vizing_family(int n, int r)
{
    if (r == 1)
        return {bidirected_clique(n)};
    if (r == 2) {
        DenseDigraph g = bidirected_clique(n);
        for (int v = 0; v + 1 < n; v += 2) {
            g.remove_arc(v, v + 1);
            g.remove_arc(v + 1, v);
        }
        if (n % 2 == 1) {
            g.remove_arc(n - 1, 0);
            g.remove_arc(0, n - 1);
        }
        return {g};
    }
    std::vector<DenseDigraph> out;
    for (int s = 1; 2 * s <= n - 2 * r + 2; ++s)
        out.push_back(g_nrs(n, r, s));
    return out;
}

std::vector<DenseDigraph> dsv_family(int n, int r)
{
    std::vector<DenseDigraph> out;
    for_each_composition(n - 2 * r + 3, 3, [&](const std::vector<int> & abc) {
        auto f = bip_cycle_blowup(n, r, abc[0], abc[1], abc[2]);
        if (f.extremal_profile)
            out.push_back(f.digraph);
    });
    return out;
}

std::vector<DenseDigraph> fridman_family(int n, int r)
{
    std::vector<DenseDigraph> out;
    for (int i = 1; i <= r - 2; ++i)
        for (int s = 1; s <= n - r; ++s)
            out.push_back(gamma_star_blowup(n, r, i, s));
    return out;
}

std::vector<DenseDigraph> biconn_family(int n, int r)
{
    std::vector<DenseDigraph> out;
    for (int s = 1; 2 * s <= n - 2 * r + 2; ++s)
        out.push_back(d_nrs(n, r, s));
    return out;
}

std::vector<DenseDigraph> radconj_family(int n, int rad2)
{
    std::vector<DenseDigraph> out;
    for (int i = 1; i <= rad2 - 2; ++i)
        for (int s = 1; s <= n - rad2; ++s)
            out.push_back(gamma_bar_blowup(n, rad2, i, s));
    return out;
}

struct BipMember {
    BuiltFamily family;
    Json params;
};

std::vector<BipMember> bipdi_members(int n, int r)
{
    std::vector<BipMember> out;
    for (int j = 1; j + 2 <= r; ++j)
        for_each_composition(n - r + 2, 3, [&](const std::vector<int> & abc) {
            if (j + 2 == r && abc[2] != 1)
                return;
            BipMember m{bip_digraph_extremal(n, r, abc[0], abc[1], abc[2], j), Json::object()};
            m.params = {{"a", abc[0]}, {"b", abc[1]}, {"c", abc[2]}, {"j", j}};
            out.push_back(std::move(m));
        });
    return out;
}

// ---------------------------------------------------------------- case ranges

std::vector<Case> cases_in(const ParamRange & p, const std::function<bool(int, int)> & valid)
{
    std::vector<Case> out;
    for (int n = p.n_min; n <= p.n_max; ++n)
        for (int r = p.r_min; r <= p.r_max; ++r)
            if (valid(n, r))
                out.push_back({n, r});
    return out;
}

// ---------------------------------------------------------------- formula-only checks

void check_identity(Ledger & ledger, int n, int r, const std::string & name, std::int64_t lhs, std::int64_t rhs)
{
    Json e = case_entry(n, r);
    e["identity"] = name;
    e["lhs"] = lhs;
    e["rhs"] = rhs;
    if (lhs == rhs)
        ledger.pass(std::move(e));
    else
        ledger.fail(std::move(e), "identity fails: " + name, empty_digraph(1), SearchConstraints{});
}

void formula_vz(Ledger & ledger, const ParamRange & p)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r == 1 ? n >= 1 : r == 2 ? n >= 4 : n >= 2 * r; })) {
        const auto f = bound(BoundName::vizing_f, n, r);
        if (r == 1) {
            check_identity(ledger, n, r, "f = C(n,2)", f, choose2(n));
        } else if (r == 2) {
            check_identity(ledger, n, r, "f = C(n,2) - ceil(n/2)", f, choose2(n) - (n + 1) / 2);
        } else {
            for (int s = 1; 2 * s <= n - 2 * r + 2; ++s) {
                const std::int64_t t = n - 2 * r + 2 - s;
                check_identity(ledger, n, r, "f = edges of G(n,r,s=" + std::to_string(s) + ")", f,
                               choose2(s) + choose2(t) + s * t + s + t + 2 * r - 3);
            }
        }
    }
}

void formula_dsv11(Ledger & ledger, const ParamRange & p)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r >= 4 && n >= 2 * r; })) {
        std::int64_t best_any = 0;
        std::int64_t best_balanced = 0;
        for_each_composition(n - 2 * r + 3, 3, [&](const std::vector<int> & abc) {
            const std::int64_t v = 2 * r - 4 + std::int64_t{abc[1] + 1} * (abc[0] + abc[2]);
            best_any = std::max(best_any, v);
            if (std::abs(abc[0] + abc[2] - (abc[1] + 1)) <= 1)
                best_balanced = std::max(best_balanced, v);
        });
        const auto f = bound(BoundName::dsv11, n, r);
        check_identity(ledger, n, r, "bound = max 2r-4+(b+1)(a+c)", f, best_any);
        check_identity(ledger, n, r, "bound = balanced max 2r-4+(b+1)(a+c)", f, best_balanced);
    }
}

void formula_fridman(Ledger & ledger, const ParamRange & p)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r >= 2 && n >= r + 1; })) {
        const auto f = bound(BoundName::fridman, n, r);
        if (n == r + 1)
            check_identity(ledger, n, r, "bound(r+1, r) = r(r+1)/2", f, std::int64_t{r} * (r + 1) / 2);
        else
            check_identity(ledger, n, r, "bound(n) - bound(n-1) = 2n-r-1", f - bound(BoundName::fridman, n - 1, r),
                           2 * n - r - 1);
    }
}

void formula_rad3(Ledger & ledger, const ParamRange & p)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r == 3 && n >= 6; }))
        check_identity(ledger, n, r, "(n-2)^2 = (n-r+1)^2 + r - 3", bound(BoundName::rad3_biconn, n, 3),
                       bound(BoundName::biconn_general, n, 3));
}

void formula_biconn(Ledger & ledger, const ParamRange & p)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r >= 3 && n >= 2 * r; })) {
        const auto f = bound(BoundName::biconn_general, n, r);
        if (n == 2 * r)
            check_identity(ledger, n, r, "bound(2r, r) = r^2 + 3r - 2", f, std::int64_t{r} * r + 3 * r - 2);
        else
            check_identity(ledger, n, r, "bound(n) - bound(n-1) = 2(n-r)+1",
                           f - bound(BoundName::biconn_general, n - 1, r), 2 * (n - r) + 1);
    }
}

void formula_gamma2r1(Ledger & ledger, const ParamRange & p)
{
    for (int rad2 = std::max(5, p.r_min); rad2 <= p.r_max; ++rad2) {
        const int d = rad2;
        check_identity(ledger, rad2 + 1, rad2, "bound = d(d+3)/2 arcs of the d+1 vertex path digraph",
                       bound(BoundName::gamma_2r1, rad2 + 1, 0, rad2), std::int64_t{d} * (d + 3) / 2);
    }
}

void formula_bipdi(Ledger & ledger, const ParamRange & p)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r >= 3 && n >= r + 1; })) {
        std::int64_t best = 0;
        for_each_composition(n - 1, r, [&](const std::vector<int> & tail) {
            LayerProfile lp;
            lp.sizes.push_back(1);
            lp.sizes.insert(lp.sizes.end(), tail.begin(), tail.end());
            best = std::max(best, layer_profile_size(lp));
        });
        check_identity(ledger, n, r, "bound = max layer_profile_size", bound(BoundName::bip_digraph, n, r), best);
    }
}

void formula_bipbiconn(Ledger & ledger, const ParamRange & p)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r == 4 && n >= 2 * r; }))
        check_identity(ledger, n, r, "bound = floor((n-2)^2/2)", bound(BoundName::bip_biconn_conj, n, r),
                       std::int64_t{n - 2} * (n - 2) / 2);
}

void formula_asymp(Ledger & ledger, const ParamRange & p)
{
    for (int r = std::max(4, p.r_min); r <= p.r_max; ++r) {
        std::map<int, std::set<std::int64_t>> by_parity;
        std::int64_t worst = 0;
        Json values = Json::array();
        for (int n = std::max(2 * r, p.n_min); n <= p.n_max; ++n) {
            const std::int64_t arcs = d_nrs_bipartite(n, r).digraph.arc_count();
            // 2 (|A| - (n^2/2 - (r-2) n)), kept integral.
            const std::int64_t diff = 2 * arcs - std::int64_t{n} * n + 2 * std::int64_t{r - 2} * n;
            by_parity[n % 2].insert(diff);
            worst = std::max(worst, std::abs(diff));
            values.push_back(diff);
        }
        Json e = case_entry(p.n_max, r);
        e["n_from"] = std::max(2 * r, p.n_min);
        e["twice_deviation"] = values;
        e["max_abs_twice_deviation"] = worst;
        bool bounded = true;
        for (const auto & [parity, vals] : by_parity)
            bounded = bounded && vals.size() == 1;
        if (bounded)
            ledger.pass(std::move(e));
        else
            ledger.fail(std::move(e), "deviation from n^2/2 - (r-2)n is not constant per parity",
                        d_nrs_bipartite(p.n_max, r).digraph, SearchConstraints{});
    }
}

// ---------------------------------------------------------------- family checks

// Expected properties of a constructed member.
struct Expect {
    std::optional<int> rad_out;
    std::optional<int> rad2;
    std::optional<bool> strong;
    bool symmetric = false;
    bool bipartite = false;
    std::optional<std::int64_t> size;   // arcs, or edges when symmetric
    bool size_at_most = false;          // size is an upper bound instead
};

void check_member(Ledger & ledger, Json entry, const DenseDigraph & d, const Expect & x)
{
    const auto m = metric_summary(d);
    const std::int64_t size = x.symmetric ? d.edge_count() : d.arc_count();
    entry["size"] = size;
    entry["rad_out"] = m.rad_out == kUnreachable ? Json(nullptr) : Json(m.rad_out);
    entry["rad"] = radius_string(m.rad2);
    entry["strong"] = m.strong;
    std::string why;
    if (x.symmetric && ! d.is_symmetric())
        why = "not symmetric";
    else if (x.bipartite && ! m.bipartite)
        why = "not bipartite";
    else if (x.rad_out && m.rad_out != *x.rad_out)
        why = "outradius differs";
    else if (x.rad2 && m.rad2 != *x.rad2)
        why = "radius differs";
    else if (x.strong && m.strong != *x.strong)
        why = *x.strong ? "not strong" : "unexpectedly strong";
    else if (x.size && (x.size_at_most ? size > *x.size : size != *x.size))
        why = x.size_at_most ? "size exceeds the bound" : "size differs from the closed form";
    if (x.size)
        entry["expected_size"] = *x.size;
    if (why.empty())
        ledger.pass(std::move(entry));
    else
        ledger.fail(std::move(entry), why, d, SearchConstraints{});
}

void family_vz(Ledger & ledger, const ParamRange & p)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r >= 3 && n >= 2 * r; }))
        for (int s = 1; 2 * s <= n - 2 * r + 2; ++s) {
            Json e = case_entry(n, r);
            e["s"] = s;
            const auto g = g_nrs(n, r, s);
            Expect x{r, std::nullopt, true, true, false, bound(BoundName::vizing_f, n, r)};
            if (n <= kMaxCliqueOrder && clique_number(g) != n - 2 * r + 2) {
                e["clique_number"] = clique_number(g);
                ledger.fail(std::move(e), "clique number differs from n-2r+2", g, SearchConstraints{});
                continue;
            }
            check_member(ledger, std::move(e), g, x);
        }
}

void family_dsv11(Ledger & ledger, const ParamRange & p)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r >= 4 && n >= 2 * r; })) {
        const auto f = bound(BoundName::dsv11, n, r);
        for_each_composition(n - 2 * r + 3, 3, [&](const std::vector<int> & abc) {
            const auto fam = bip_cycle_blowup(n, r, abc[0], abc[1], abc[2]);
            Json e = case_entry(n, r);
            e["a"] = abc[0];
            e["b"] = abc[1];
            e["c"] = abc[2];
            e["extremal_profile"] = fam.extremal_profile;
            Expect x{r, std::nullopt, true, true, true, fam.extremal_profile ? f : f - 1, ! fam.extremal_profile};
            check_member(ledger, std::move(e), fam.digraph, x);
        });
    }
}

void family_fridman(Ledger & ledger, const ParamRange & p)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r >= 3 && n >= r + 1; }))
        for (int i = 1; i <= r - 2; ++i)
            for (int s = 1; s <= n - r; ++s) {
                Json e = case_entry(n, r);
                e["i"] = i;
                e["s"] = s;
                check_member(ledger, std::move(e), gamma_star_blowup(n, r, i, s),
                             Expect{r, std::nullopt, false, false, false, bound(BoundName::fridman, n, r)});
            }
}

void family_biconn(Ledger & ledger, const ParamRange & p, bool rad3_only)
{
    for (auto [n, r] : cases_in(p, [&](int n, int r) { return r >= 3 && n >= 2 * r && (! rad3_only || r == 3); })) {
        ledger.note_scope(scope_of(rad3_only ? CheckId::rad3 : CheckId::biconn, n, r));
        for (int s = 1; 2 * s <= n - 2 * r + 2; ++s) {
            Json e = case_entry(n, r);
            e["s"] = s;
            const auto f = rad3_only ? bound(BoundName::rad3_biconn, n, 3) : bound(BoundName::biconn_general, n, r);
            check_member(ledger, std::move(e), d_nrs(n, r, s), Expect{r, std::nullopt, true, false, false, f});
        }
    }
}

void family_prop34(Ledger & ledger, const ParamRange & p)
{
    auto scan = [&](int n, int r, const std::string & name, const DenseDigraph & d) {
        Json e = case_entry(n, r);
        e["member"] = name;
        const auto rep = check_outradius_degree_bound(d, r);
        e["violations"] = rep.violations;
        e["attaining"] = rep.attaining;
        int equality_failures = 0;
        for (const auto & v : rep.vertices)
            if (v.attains_bound && ! (v.degree_split_matches.value_or(false) && v.disjoint_paths_found.value_or(false)))
                ++equality_failures;
        e["equality_condition_failures"] = equality_failures;
        if (rep.violations > 0)
            ledger.fail(std::move(e), "total degree exceeds 2(n-1)-(2r-3)", d, with_rad_out(r, true));
        else if (equality_failures > 0)
            ledger.fail(std::move(e), "equality without the stated degree split and disjoint paths", d, with_rad_out(r, true));
        else
            ledger.pass(std::move(e));
    };
    // Strong members only: the bound fails for non-strong digraphs.
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r >= 3 && n >= 2 * r; }))
        for (int s = 1; 2 * s <= n - 2 * r + 2; ++s)
            scan(n, r, "d-nrs s=" + std::to_string(s), d_nrs(n, r, s));
}

void family_gamma2r1(Ledger & ledger, const ParamRange & p)
{
    for (int rad2 = std::max(5, p.r_min); rad2 <= p.r_max; ++rad2) {
        const int n = rad2 + 1;
        if (n > kMaxOrder)
            break;
        check_member(ledger, case_entry(n, rad2), gamma_bar(rad2),
                     Expect{std::nullopt, rad2, true, false, false, bound(BoundName::gamma_2r1, n, 0, rad2)});
    }
}

void family_radconj(Ledger & ledger, const ParamRange & p)
{
    for (auto [n, rad2] : cases_in(p, [](int n, int r) { return r >= 5 && n >= r + 1; })) {
        ledger.note_scope(scope_of(CheckId::radconj, n, rad2));
        std::optional<std::int64_t> common;
        for (int i = 1; i <= rad2 - 2; ++i)
            for (int s = 1; s <= n - rad2; ++s) {
                const auto d = gamma_bar_blowup(n, rad2, i, s);
                if (! common)
                    common = d.arc_count();
                Json e = case_entry(n, rad2);
                e["i"] = i;
                e["s"] = s;
                // Every member must share one size, the conjectured optimum.
                check_member(ledger, std::move(e), d, Expect{std::nullopt, rad2, true, false, false, *common});
            }
    }
}

void family_bipdi(Ledger & ledger, const ParamRange & p)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r >= 3 && n >= r + 1; })) {
        const auto f = bound(BoundName::bip_digraph, n, r);
        for (auto & m : bipdi_members(n, r)) {
            Json e = case_entry(n, r);
            e.update(m.params);
            e["extremal_profile"] = m.family.extremal_profile;
            Expect x{r, std::nullopt, std::nullopt, false, true, m.family.extremal_profile ? f : f - 1,
                     ! m.family.extremal_profile};
            check_member(ledger, std::move(e), m.family.digraph, x);
        }
    }
}

void family_prop54(Ledger & ledger, const ParamRange & p)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r >= 4 && r % 2 == 0 && n >= 2 * r; })) {
        const auto fam = d_nrs_bipartite(n, r);
        Json e = case_entry(n, r);
        const auto rep = check_bipartite_degree_bound(fam.digraph, *fam.partition, r);
        e["violations"] = rep.violations;
        e["attaining"] = rep.attaining;
        SearchConstraints c = with_rad_out(r, true);
        if (rep.violations > 0)
            ledger.fail(std::move(e), "total degree exceeds 2|opposite class|-(r-2)", fam.digraph, c);
        else
            ledger.pass(std::move(e));
    }
}

void family_bipbiconn(Ledger & ledger, const ParamRange & p)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r >= 4 && n >= 2 * r; })) {
        ledger.note_scope(scope_of(CheckId::bipbiconn, n, r));
        const auto fam = d_nrs_bipartite(n, r);
        Json e = case_entry(n, r);
        const int small = fam.partition->size(1);
        const int large = fam.partition->size(2);
        e["classes"] = {small, large};
        if (std::min(small, large) != n / 2 || std::max(small, large) != n - n / 2) {
            ledger.fail(std::move(e), "classes are not balanced", fam.digraph, SearchConstraints{});
            continue;
        }
        std::optional<std::int64_t> size;
        if (r == 4)
            size = std::int64_t{n - 2} * (n - 2) / 2;
        check_member(ledger, std::move(e), fam.digraph, Expect{r, std::nullopt, true, false, true, size});
    }
}

// ---------------------------------------------------------------- exhaustive checks

void exhaustive_vz(Ledger & ledger, const ParamRange & p)
{
    for (int n = p.n_min; n <= p.n_max; ++n) {
        const auto optima = graph_optima(n);
        for (int r = p.r_min; r <= p.r_max; ++r) {
            const bool valid = r == 1 ? n >= 2 : r == 2 ? n >= 4 : n >= 2 * r;
            if (! valid)
                continue;
            const auto it = optima.find(r);
            Json e = case_entry(n, r);
            e["size_unit"] = "edges";
            std::optional<std::int64_t> observed;
            std::set<DenseDigraph> classes;
            if (it != optima.end()) {
                observed = it->second.edges;
                classes = it->second.classes;
            }
            compare_extremal(ledger, std::move(e), with_rad_out(r, true), bound(BoundName::vizing_f, n, r), observed,
                             classes, vizing_family(n, r));
        }
    }
}

void exhaustive_dsv11(Ledger & ledger, const ParamRange & p)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r >= 4 && n >= 2 * r; })) {
        const auto opt = bipartite_graph_optimum(n, r);
        Json e = case_entry(n, r);
        e["size_unit"] = "edges";
        std::optional<std::int64_t> observed;
        if (opt.edges >= 0)
            observed = opt.edges;
        compare_extremal(ledger, std::move(e), with_rad_out(r, true), bound(BoundName::dsv11, n, r), observed,
                         opt.classes, dsv_family(n, r));
    }
}

void exhaustive_fridman(Ledger & ledger, const ParamRange & p, int threads)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r >= 2 && n >= r + 1; })) {
        const auto c = with_rad_out(r);
        const auto rep = run_search(n, c, SearchMode::full, threads);
        const auto observed = classes_of(rep);
        Json e = case_entry(n, r);
        if (r >= 3) {
            compare_extremal(ledger, std::move(e), c, bound(BoundName::fridman, n, r), rep.extremal_value, observed,
                             fridman_family(n, r));
            continue;
        }
        // r = 2: equality exactly for constant outdegree n-2.
        e["expected_value"] = bound(BoundName::fridman, n, r);
        e["observed_value"] = rep.extremal_value ? Json(*rep.extremal_value) : Json(nullptr);
        e["observed_classes"] = adm_list(observed);
        if (! rep.extremal_value) {
            ledger.vacuous(std::move(e));
            continue;
        }
        if (*rep.extremal_value != bound(BoundName::fridman, n, r)) {
            ledger.fail(std::move(e), "optimum differs from the bound", *observed.begin(), c);
            continue;
        }
        bool ok = true;
        for (const auto & d : observed)
            for (int v = 0; v < n; ++v)
                if (d.out_degree(v) != n - 2 && ok) {
                    ledger.fail(e, "extremal digraph with an outdegree other than n-2", d, c);
                    ok = false;
                }
        if (ok)
            ledger.pass(std::move(e));
    }
}

void exhaustive_biconn(Ledger & ledger, const ParamRange & p, int threads, CheckId id)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r == 3 && n == 6; })) {
        ledger.note_scope(scope_of(id, n, r));
        const auto c = with_rad_out(r, true);
        const auto rep = run_search(n, c, SearchMode::row_capped, threads);
        const auto f = id == CheckId::rad3 ? bound(BoundName::rad3_biconn, n, 3) : bound(BoundName::biconn_general, n, r);
        Json e = case_entry(n, r);
        e["candidates_examined"] = rep.candidates_examined;
        compare_extremal(ledger, std::move(e), c, f, rep.extremal_value, classes_of(rep), biconn_family(n, r));
    }
}

void exhaustive_prop34(Ledger & ledger, const ParamRange & p)
{
    for (int n = p.n_min; n <= p.n_max; ++n) {
        struct Tally {
            std::uint64_t digraphs = 0;
            std::uint64_t strong = 0;
            int max_total = 0;
            std::uint64_t attaining = 0;
            std::uint64_t non_strong_exceeding = 0;   // informational
        };
        std::map<int, Tally> tallies;
        std::map<int, std::pair<DenseDigraph, std::string>> bad;
        SearchTask task;
        task.n = n;
        task.mode = SearchMode::full;
        for_each_feasible(task, [&](const DenseDigraph & d) {
            const int r = outradius(d);
            if (r == kUnreachable || r < p.r_min || r > p.r_max)
                return;
            auto & t = tallies[r];
            ++t.digraphs;
            const int cap = 2 * (n - 1) - (2 * r - 3);
            int top = 0;
            for (int v = 0; v < n; ++v)
                top = std::max(top, d.total_degree(v));
            if (! is_strong(d)) {
                t.non_strong_exceeding += top > cap ? 1 : 0;
                return;
            }
            ++t.strong;
            t.max_total = std::max(t.max_total, top);
            if (top < cap)
                return;
            const auto rep = check_outradius_degree_bound(d, r);
            for (const auto & v : rep.vertices) {
                if (! v.attains_bound)
                    continue;
                ++t.attaining;
                if (! bad.contains(r) && ! (v.degree_split_matches.value_or(false) && v.disjoint_paths_found.value_or(false)))
                    bad.emplace(r, std::make_pair(d, std::string("equality without the stated degree split and disjoint paths")));
            }
            if (rep.violations > 0)
                bad.insert_or_assign(r, std::make_pair(d, std::string("total degree exceeds 2(n-1)-(2r-3)")));
        });
        for (int r = p.r_min; r <= std::min(p.r_max, n - 1); ++r) {
            Json e = case_entry(n, r);
            const auto it = tallies.find(r);
            if (it == tallies.end()) {
                e["digraphs"] = 0;
                ledger.vacuous(std::move(e));
                continue;
            }
            const auto & t = it->second;
            e["digraphs"] = t.digraphs;
            e["strong_digraphs"] = t.strong;
            e["bound"] = 2 * (n - 1) - (2 * r - 3);
            e["max_total_degree"] = t.max_total;
            e["attaining_vertices"] = t.attaining;
            e["non_strong_digraphs_exceeding"] = t.non_strong_exceeding;
            if (t.strong == 0)
                ledger.vacuous(std::move(e));
            else if (const auto b = bad.find(r); b != bad.end())
                ledger.fail(std::move(e), b->second.second, b->second.first, with_rad_out(r, true));
            else
                ledger.pass(std::move(e));
        }
    }
}

void exhaustive_rad2(Ledger & ledger, const ParamRange & p, int threads, CheckId id)
{
    for (auto [n, rad2] : cases_in(p, [](int n, int r) { return r >= 5 && n == r + 1; })) {
        ledger.note_scope(scope_of(id, n, rad2));
        SearchConstraints c;
        c.strong = true;
        c.rad2_eq = rad2;
        const auto rep = run_search(n, c, SearchMode::backtracking, threads);
        Json e = case_entry(n, rad2);
        e["candidates_examined"] = rep.candidates_examined;
        const auto claimed = id == CheckId::gamma2r1 ? std::vector<DenseDigraph>{gamma_bar(rad2)} : radconj_family(n, rad2);
        const auto f = id == CheckId::gamma2r1 ? bound(BoundName::gamma_2r1, n, 0, rad2)
                                               : static_cast<std::int64_t>(claimed.front().arc_count());
        compare_extremal(ledger, std::move(e), c, f, rep.extremal_value, classes_of(rep), claimed);
    }
}

void exhaustive_bipdi(Ledger & ledger, const ParamRange & p, int threads)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r >= 3 && n >= r + 1; })) {
        std::optional<std::int64_t> best;
        std::set<DenseDigraph> classes;
        SearchConstraints used = with_rad_out(r);
        Json splits = Json::array();
        for (int a = 1; 2 * a <= n; ++a) {
            SearchConstraints c = with_rad_out(r);
            c.bipartite = std::make_pair(a, n - a);
            const auto rep = run_search(n, c, SearchMode::backtracking, threads);
            splits.push_back({{"classes", {a, n - a}}, {"max_size", rep.extremal_value ? Json(*rep.extremal_value) : Json(nullptr)}});
            if (! rep.extremal_value)
                continue;
            if (! best || *rep.extremal_value > *best) {
                best = rep.extremal_value;
                classes.clear();
                used = c;
            }
            if (*rep.extremal_value == *best) {
                const auto cs = classes_of(rep);
                classes.insert(cs.begin(), cs.end());
            }
        }
        std::vector<DenseDigraph> claimed;
        for (auto & m : bipdi_members(n, r))
            if (m.family.extremal_profile)
                claimed.push_back(m.family.digraph);
        Json e = case_entry(n, r);
        e["splits"] = splits;
        used.bipartite.reset();
        compare_extremal(ledger, std::move(e), used, bound(BoundName::bip_digraph, n, r), best, classes, claimed);
    }
}

void exhaustive_prop54(Ledger & ledger, const ParamRange & p)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return r >= 4 && r % 2 == 0 && n >= r + 2; })) {
        for (int a = 1; 2 * a <= n; ++a) {
            SearchTask task;
            task.n = n;
            task.mode = SearchMode::row_capped;
            task.constraints = with_rad_out(r, true);
            task.constraints.bipartite = std::make_pair(a, n - a);
            const VertexPartition partition(n, first_n(n) & ~first_n(a));
            std::uint64_t digraphs = 0;
            std::uint64_t attaining = 0;
            int max_slack = -kMaxOrder;
            std::optional<std::pair<DenseDigraph, std::string>> bad;
            const auto examined = for_each_feasible(task, [&](const DenseDigraph & d) {
                ++digraphs;
                const auto rep = check_bipartite_degree_bound(d, partition, r);
                for (const auto & v : rep.vertices) {
                    max_slack = std::max(max_slack, v.total_degree - v.bound);
                    if (! v.attains_bound)
                        continue;
                    ++attaining;
                    const bool ok = v.degree_split_matches.value_or(false) && v.disjoint_paths_found.value_or(false) &&
                                    v.all_shortest_paths_disjoint.value_or(true);
                    if (! ok && ! bad)
                        bad = std::make_pair(d, std::string("equality without the stated degree split and disjoint paths"));
                }
                if (rep.violations > 0)
                    bad = std::make_pair(d, std::string("total degree exceeds 2|opposite class|-(r-2)"));
            });
            Json e = case_entry(n, r);
            e["classes"] = {a, n - a};
            e["candidates_examined"] = examined;
            e["digraphs"] = digraphs;
            e["attaining_vertices"] = attaining;
            if (digraphs > 0)
                e["max_degree_minus_bound"] = max_slack;
            if (bad)
                ledger.fail(std::move(e), bad->second, bad->first, task.constraints);
            else if (digraphs == 0)
                ledger.vacuous(std::move(e));
            else
                ledger.pass(std::move(e));
        }
    }
}

void exhaustive_bipbiconn(Ledger & ledger, const ParamRange & p, int threads)
{
    for (auto [n, r] : cases_in(p, [](int n, int r) { return n == 8 && r == 4; })) {
        ledger.note_scope(scope_of(CheckId::bipbiconn, n, r));
        SearchConstraints c = with_rad_out(r, true);
        c.bipartite = std::make_pair(n / 2, n - n / 2);
        const auto rep = run_search(n, c, SearchMode::backtracking, threads);
        Json e = case_entry(n, r);
        e["classes"] = {n / 2, n - n / 2};
        e["candidates_examined"] = rep.candidates_examined;
        compare_extremal(ledger, std::move(e), c, bound(BoundName::bip_biconn_conj, n, r), rep.extremal_value,
                         classes_of(rep), {d_nrs_bipartite(n, r).digraph});
    }
}

// ---------------------------------------------------------------- registry

DepthSupport support(Depth d, int n_min, int n_max, int r_min, int r_max, bool extended = false)
{
    return DepthSupport{d, ParamRange{n_min, n_max, r_min, r_max}, extended};
}

std::vector<CheckInfo> make_registry()
{
    using D = Depth;
    return {
        {CheckId::vz, "vz", "theorem", "radius",
         {support(D::formula_only, 1, 40, 1, 20), support(D::family_crosscheck, 6, 40, 3, 20),
          support(D::exhaustive, 2, kMaxGraphOrder, 1, 3)}},
        {CheckId::dsv11, "dsv11", "theorem", "radius",
         {support(D::formula_only, 8, 40, 4, 20), support(D::family_crosscheck, 8, 30, 4, 15),
          support(D::exhaustive, 8, kMaxBipartiteGraphOrder, 4, 4)}},
        {CheckId::fridman, "fridman", "theorem", "outradius",
         {support(D::formula_only, 3, 40, 2, 39), support(D::family_crosscheck, 4, 30, 3, 29),
          support(D::exhaustive, 3, 5, 2, 4)}},
        {CheckId::rad3, "rad3", "theorem", "outradius",
         {support(D::formula_only, 6, 40, 3, 3), support(D::family_crosscheck, 6, 40, 3, 3),
          support(D::exhaustive, 6, 6, 3, 3)}},
        {CheckId::biconn, "biconn", "theorem/conjecture", "outradius",
         {support(D::formula_only, 6, 40, 3, 20), support(D::family_crosscheck, 6, 40, 3, 20),
          support(D::exhaustive, 6, 6, 3, 3)}},
        {CheckId::prop34, "prop34", "proposition", "outradius",
         {support(D::family_crosscheck, 6, 20, 3, 9), support(D::exhaustive, 2, 5, 1, 4)}},
        {CheckId::gamma2r1, "gamma2r1", "proposition", "doubled radius",
         {support(D::formula_only, 6, 41, 5, 40), support(D::family_crosscheck, 6, 31, 5, 30),
          support(D::exhaustive, 6, 6, 5, 5)}},
        {CheckId::radconj, "radconj", "conjecture", "doubled radius",
         {support(D::family_crosscheck, 6, 20, 5, 12), support(D::exhaustive, 6, 6, 5, 5)}},
        {CheckId::bipdi, "bipdi", "theorem", "outradius",
         {support(D::formula_only, 4, 14, 3, 13), support(D::family_crosscheck, 4, 30, 3, 20),
          support(D::exhaustive, 4, 6, 3, 4)}},
        {CheckId::prop54, "prop54", "proposition", "outradius",
         {support(D::family_crosscheck, 8, 24, 4, 10), support(D::exhaustive, 6, 7, 4, 4)}},
        {CheckId::bipbiconn, "bipbiconn", "conjecture", "outradius",
         {support(D::formula_only, 8, 40, 4, 4), support(D::family_crosscheck, 8, 30, 4, 8),
          support(D::exhaustive, 8, 8, 4, 4, true)}},
        {CheckId::asymp_remark, "asymp_remark", "remark", "outradius", {support(D::formula_only, 8, 60, 4, 8)}},
    };
}

std::string lower(std::string s)
{
    for (auto & ch : s)
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    std::replace(s.begin(), s.end(), '-', '_');
    return s;
}

Json range_json(const ParamRange & p)
{
    return {{"n_min", p.n_min}, {"n_max", p.n_max}, {"r_min", p.r_min}, {"r_max", p.r_max}};
}

ParamRange range_from_json(const Json & j)
{
    return ParamRange{j.at("n_min").get<int>(), j.at("n_max").get<int>(), j.at("r_min").get<int>(),
                      j.at("r_max").get<int>()};
}

} // namespace

bool ParamRange::contains(const ParamRange & inner) const
{
    return inner.n_min >= n_min && inner.n_max <= n_max && inner.r_min >= r_min && inner.r_max <= r_max &&
           inner.n_min <= inner.n_max && inner.r_min <= inner.r_max;
}

std::string check_name(CheckId id) { return check_info(id).name; }

CheckId parse_check_name(const std::string & name)
{
    const auto key = lower(name);
    for (const auto & info : list_checks())
        if (info.name == key)
            return info.id;
    throw DomainError("unknown check '" + name + "'");
}

std::string depth_name(Depth d)
{
    switch (d) {
    case Depth::formula_only: return "FORMULA_ONLY";
    case Depth::family_crosscheck: return "FAMILY_CROSSCHECK";
    case Depth::exhaustive: return "EXHAUSTIVE";
    }
    return "";
}

Depth parse_depth(const std::string & name)
{
    const auto key = lower(name);
    if (key == "formula_only" || key == "formula")
        return Depth::formula_only;
    if (key == "family_crosscheck" || key == "family")
        return Depth::family_crosscheck;
    if (key == "exhaustive")
        return Depth::exhaustive;
    throw DomainError("unknown depth '" + name + "'");
}

std::string verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::confirmed: return "CONFIRMED";
    case Verdict::refuted: return "REFUTED";
    case Verdict::inconclusive: return "INCONCLUSIVE";
    }
    return "";
}

Verdict parse_verdict(const std::string & name)
{
    for (auto v : {Verdict::confirmed, Verdict::refuted, Verdict::inconclusive})
        if (verdict_name(v) == name)
            return v;
    throw DomainError("unknown verdict '" + name + "'");
}

const std::vector<CheckInfo> & list_checks()
{
    static const std::vector<CheckInfo> registry = make_registry();
    return registry;
}

const CheckInfo & check_info(CheckId id)
{
    for (const auto & info : list_checks())
        if (info.id == id)
            return info;
    throw DomainError("unknown check id");
}

VerificationReport verify_theorem(const TheoremCheck & check)
{
    const auto & info = check_info(check.id);
    const auto it = std::find_if(info.depths.begin(), info.depths.end(),
                                 [&](const DepthSupport & s) { return s.depth == check.depth; });
    if (it == info.depths.end())
        throw DomainError(info.name + " does not support depth " + depth_name(check.depth));
    const ParamRange p = check.params.value_or(it->range);
    if (! it->range.contains(p)) {
        const auto & s = it->range;
        throw LimitError(info.name + " at " + depth_name(check.depth) + " supports n in [" + std::to_string(s.n_min) +
                         ", " + std::to_string(s.n_max) + "] and r in [" + std::to_string(s.r_min) + ", " +
                         std::to_string(s.r_max) + "]");
    }
    if (it->extended && ! check.allow_extended)
        throw LimitError(info.name + " at " + depth_name(check.depth) + " is an extended (hour-scale) check");

    const auto start = Clock::now();
    VerificationReport out;
    out.id = check.id;
    out.depth = check.depth;
    out.params = p;
    Ledger ledger;
    const int threads = std::max(1, check.threads);

    switch (check.depth) {
    case Depth::formula_only:
        switch (check.id) {
        case CheckId::vz: formula_vz(ledger, p); break;
        case CheckId::dsv11: formula_dsv11(ledger, p); break;
        case CheckId::fridman: formula_fridman(ledger, p); break;
        case CheckId::rad3: formula_rad3(ledger, p); break;
        case CheckId::biconn: formula_biconn(ledger, p); break;
        case CheckId::gamma2r1: formula_gamma2r1(ledger, p); break;
        case CheckId::bipdi: formula_bipdi(ledger, p); break;
        case CheckId::bipbiconn: formula_bipbiconn(ledger, p); break;
        case CheckId::asymp_remark: formula_asymp(ledger, p); break;
        default: break;
        }
        break;
    case Depth::family_crosscheck:
        switch (check.id) {
        case CheckId::vz: family_vz(ledger, p); break;
        case CheckId::dsv11: family_dsv11(ledger, p); break;
        case CheckId::fridman: family_fridman(ledger, p); break;
        case CheckId::rad3: family_biconn(ledger, p, true); break;
        case CheckId::biconn: family_biconn(ledger, p, false); break;
        case CheckId::prop34: family_prop34(ledger, p); break;
        case CheckId::gamma2r1: family_gamma2r1(ledger, p); break;
        case CheckId::radconj: family_radconj(ledger, p); break;
        case CheckId::bipdi: family_bipdi(ledger, p); break;
        case CheckId::prop54: family_prop54(ledger, p); break;
        case CheckId::bipbiconn: family_bipbiconn(ledger, p); break;
        default: break;
        }
        break;
    case Depth::exhaustive:
        switch (check.id) {
        case CheckId::vz: exhaustive_vz(ledger, p); break;
        case CheckId::dsv11: exhaustive_dsv11(ledger, p); break;
        case CheckId::fridman: exhaustive_fridman(ledger, p, threads); break;
        case CheckId::rad3:
        case CheckId::biconn: exhaustive_biconn(ledger, p, threads, check.id); break;
        case CheckId::prop34: exhaustive_prop34(ledger, p); break;
        case CheckId::gamma2r1:
        case CheckId::radconj: exhaustive_rad2(ledger, p, threads, check.id); break;
        case CheckId::bipdi: exhaustive_bipdi(ledger, p, threads); break;
        case CheckId::prop54: exhaustive_prop54(ledger, p); break;
        case CheckId::bipbiconn: exhaustive_bipbiconn(ledger, p, threads); break;
        default: break;
        }
        break;
    }
    if (! ledger.has_scope())
        ledger.note_scope(scope_of(check.id, p.n_min, p.r_min));
    ledger.finish(out);
    out.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return out;
}

std::string report_file_name(const VerificationReport & report)
{
    std::ostringstream os;
    os << check_name(report.id) << '-' << lower(depth_name(report.depth)) << "-n" << report.params.n_min << '-'
       << report.params.n_max << "-r" << report.params.r_min << '-' << report.params.r_max << ".json";
    return os.str();
}

Json to_json(const VerificationReport & report, bool include_timing)
{
    Json j;
    j["check"] = check_name(report.id);
    j["depth"] = depth_name(report.depth);
    j["params"] = range_json(report.params);
    j["verdict"] = verdict_name(report.verdict);
    j["scope"] = report.scope;
    j["cases"] = report.cases;
    j["vacuous_cases"] = report.vacuous_cases;
    j["detail"] = report.detail;
    j["evidence"] = report.evidence;
    j["counterexample"] = report.counterexample ? to_json(*report.counterexample) : Json(nullptr);
    if (include_timing)
        j["runtime_ms"] = report.runtime_ms;
    return j;
}

VerificationReport verification_report_from_json(const Json & j)
{
    VerificationReport out;
    out.id = parse_check_name(j.at("check").get<std::string>());
    out.depth = parse_depth(j.at("depth").get<std::string>());
    out.params = range_from_json(j.at("params"));
    out.verdict = parse_verdict(j.at("verdict").get<std::string>());
    out.scope = j.at("scope").get<std::string>();
    out.cases = j.at("cases").get<int>();
    out.vacuous_cases = j.at("vacuous_cases").get<int>();
    out.detail = j.at("detail").get<std::string>();
    out.evidence = j.at("evidence");
    if (! j.at("counterexample").is_null())
        out.counterexample = certificate_from_json(j.at("counterexample"));
    out.runtime_ms = j.value("runtime_ms", std::int64_t{0});
    return out;
}

Json to_json(const CheckInfo & info)
{
    Json j;
    j["check"] = info.name;
    j["statement"] = info.statement;
    j["r_means"] = info.r_meaning;
    Json depths = Json::array();
    for (const auto & s : info.depths) {
        Json d = range_json(s.range);
        d["depth"] = depth_name(s.depth);
        d["extended"] = s.extended;
        depths.push_back(d);
    }
    j["depths"] = depths;
    return j;
}

std::string summary_markdown(const std::vector<VerificationReport> & reports)
{
    std::ostringstream os;
    os << "| check | depth | n | r | scope | verdict | cases | runtime (ms) |\n";
    os << "|---|---|---|---|---|---|---|---|\n";
    for (const auto & r : reports) {
        os << "| " << check_name(r.id) << " | " << depth_name(r.depth) << " | " << r.params.n_min << ".."
           << r.params.n_max << " | " << r.params.r_min << ".." << r.params.r_max << " | " << r.scope << " | "
           << verdict_name(r.verdict) << " | " << r.cases << " | " << r.runtime_ms << " |\n";
    }
    return os.str();
}

} // namespace edl
