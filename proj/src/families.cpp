#include <edl/families.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>

namespace edl {

namespace {

void require(bool ok, const std::string & what)
{
    if (! ok)
        throw DomainError(what);
}

std::string params(std::initializer_list<std::pair<const char *, int>> values)
{
    std::string out;
    for (auto [name, value] : values) {
        if (! out.empty())
            out += ", ";
        out += std::string(name) + "=" + std::to_string(value);
    }
    return " (" + out + ")";
}

// Gamma-bar arcs on `count` vertices starting at `offset`.
void add_gamma_bar_arcs(DenseDigraph & d, int offset, int count)
{
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j)
            if (i != j && i >= j - 1)
                d.add_arc(offset + i, offset + j);
}

DenseDigraph clique_pair_blowup(const DenseDigraph & d, int first, int s, int second, int t)
{
    std::array<Substitution, 2> targets{Substitution{first, bidirected_clique(s)}, Substitution{second, bidirected_clique(t)}};
    return blow_up(d, targets);
}

VertexPartition copy_partition(int n_before, VertexSet class2_before, std::span<const std::pair<int, int>> copies, int n_after)
{
    // Copies are appended target by target; each copy joins its original's class.
    VertexSet class2 = class2_before;
    int next = n_before;
    for (auto [vertex, count] : copies)
        for (int k = 1; k < count; ++k, ++next)
            if ((class2_before >> vertex) & 1U)
                class2 |= bit(next);
    return VertexPartition(n_after, class2);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return -floor_div(-a, b);
}

} // namespace

DenseDigraph gamma_bar(int d)
{
    require(d >= 1, "gamma_bar needs d >= 1" + params({{"d", d}}));
    DenseDigraph out(d + 1);
    add_gamma_bar_arcs(out, 0, d + 1);
    return out;
}

DenseDigraph gamma_bar_blowup(int n, int d, int i, int s)
{
    require(d >= 3, "gamma_bar_blowup needs d >= 3" + params({{"d", d}}));
    require(n >= d + 1, "gamma_bar_blowup needs n >= d+1" + params({{"n", n}, {"d", d}}));
    require(i >= 1 && i <= d - 2, "gamma_bar_blowup needs 1 <= i <= d-2" + params({{"i", i}, {"d", d}}));
    require(s >= 1 && s <= n - d, "gamma_bar_blowup needs 1 <= s <= n-d" + params({{"s", s}, {"n", n}, {"d", d}}));
    return clique_pair_blowup(gamma_bar(d), i, s, i + 1, n - d + 1 - s);
}

DenseDigraph gamma_star(int r)
{
    require(r >= 2, "gamma_star needs r >= 2" + params({{"r", r}}));
    DenseDigraph out(r + 1);
    add_gamma_bar_arcs(out, 1, r);
    out.add_arc(0, 1);
    return out;
}

DenseDigraph gamma_star_blowup(int n, int r, int i, int s)
{
    require(r >= 3, "gamma_star_blowup needs r >= 3" + params({{"r", r}}));
    require(n >= r + 1, "gamma_star_blowup needs n >= r+1" + params({{"n", n}, {"r", r}}));
    require(i >= 1 && i <= r - 2, "gamma_star_blowup needs 1 <= i <= r-2" + params({{"i", i}, {"r", r}}));
    require(s >= 1 && s <= n - r, "gamma_star_blowup needs 1 <= s <= n-r" + params({{"s", s}, {"n", n}, {"r", r}}));
    return clique_pair_blowup(gamma_star(r), i, s, i + 1, n - r + 1 - s);
}

DenseDigraph g_nrs(int n, int r, int s)
{
    require(r >= 3, "g_nrs needs r >= 3" + params({{"r", r}}));
    require(n >= 2 * r, "g_nrs needs n >= 2r" + params({{"n", n}, {"r", r}}));
    require(s >= 1 && 2 * s <= n - 2 * r + 2, "g_nrs needs 1 <= s <= (n-2r+2)/2" + params({{"s", s}, {"n", n}, {"r", r}}));
    return clique_pair_blowup(symmetric_cycle(2 * r), 0, s, 1, n - 2 * r + 2 - s);
}

DenseDigraph d_2r_r_1(int r)
{
    require(r >= 2, "d_2r_r_1 needs r >= 2" + params({{"r", r}}));
    DenseDigraph out(2 * r);
    add_gamma_bar_arcs(out, 0, r);
    add_gamma_bar_arcs(out, r, r);
    for (int k = 0; k < r; ++k) {
        out.add_arc(k, r);       // v_k -> w_1
        out.add_arc(r + k, 0);   // w_k -> v_1
    }
    return out;
}

DenseDigraph d_nrs(int n, int r, int s)
{
    require(r >= 3, "d_nrs needs r >= 3" + params({{"r", r}}));
    require(n >= 2 * r, "d_nrs needs n >= 2r" + params({{"n", n}, {"r", r}}));
    require(s >= 1 && 2 * s <= n - 2 * r + 2, "d_nrs needs 1 <= s <= (n-2r+2)/2" + params({{"s", s}, {"n", n}, {"r", r}}));
    return clique_pair_blowup(d_2r_r_1(r), 0, s, r, n - 2 * r + 2 - s);
}

BuiltFamily bip_cycle_blowup(int n, int r, int a, int b, int c)
{
    require(r >= 4, "bip_cycle_blowup needs r >= 4" + params({{"r", r}}));
    require(a >= 1 && b >= 1 && c >= 1, "bip_cycle_blowup needs a, b, c >= 1" + params({{"a", a}, {"b", b}, {"c", c}}));
    require(a + b + c == n - 2 * r + 3,
            "bip_cycle_blowup needs a+b+c = n-2r+3" + params({{"n", n}, {"r", r}, {"a", a}, {"b", b}, {"c", c}}));
    std::array<Substitution, 3> targets{Substitution{0, empty_digraph(a)}, Substitution{1, empty_digraph(b)},
                                        Substitution{2, empty_digraph(c)}};
    BuiltFamily out{blow_up(symmetric_cycle(2 * r), targets), std::abs(a + c - (b + 1)) <= 1, std::nullopt};
    out.partition = is_bipartite(out.digraph);
    return out;
}

DenseDigraph layered_bipartite(const std::vector<int> & sizes)
{
    require(sizes.size() >= 2, "layered profile needs at least two layers");
    require(sizes[0] == 1, "layer 0 must have size 1");
    for (int size : sizes)
        require(size >= 1, "every layer must be non-empty");
    const int r = static_cast<int>(sizes.size()) - 1;

    DenseDigraph base(r + 1);
    for (int i = 0; i < r; ++i)
        base.add_arc(i, i + 1);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j < i; ++j)
            if ((i - j) % 2 == 1)
                base.add_arc(i, j);

    std::vector<Substitution> targets;
    for (int i = 1; i <= r; ++i)
        if (sizes[i] > 1)
            targets.push_back({i, empty_digraph(sizes[i])});
    return blow_up(base, targets);
}

BuiltFamily bip_digraph_extremal(int n, int r, int a, int b, int c, int j)
{
    require(r >= 3, "bip_digraph_extremal needs r >= 3" + params({{"r", r}}));
    require(a >= 1 && b >= 1 && c >= 1, "bip_digraph_extremal needs a, b, c >= 1" + params({{"a", a}, {"b", b}, {"c", c}}));
    require(a + b + c == n - r + 2,
            "bip_digraph_extremal needs a+b+c = n-r+2" + params({{"n", n}, {"r", r}, {"a", a}, {"b", b}, {"c", c}}));
    require(j >= 1 && (j + 2 <= r - 1 || (j + 2 == r && c == 1)),
            "bip_digraph_extremal needs positions j..j+2 strictly between v_0 and v_r" + params({{"j", j}, {"r", r}, {"c", c}}));

    std::vector<int> sizes(static_cast<std::size_t>(r + 1), 1);
    sizes[j] = a;
    sizes[j + 1] = b;
    sizes[j + 2] = c;

    int even = 0;
    for (int i = 0; i <= r; i += 2)
        even += sizes[i];
    int odd = n - even;

    BuiltFamily out;
    out.digraph = layered_bipartite(sizes);
    out.extremal_profile = std::abs(a + c - (b + 1)) <= 1 && (r % 2 == 0 || even >= odd);

    VertexSet class2 = 0;
    for (int i = 1; i <= r; i += 2)
        class2 |= bit(i);
    std::vector<std::pair<int, int>> copies;
    for (int i = 1; i <= r; ++i)
        if (sizes[i] > 1)
            copies.emplace_back(i, sizes[i]);
    out.partition = copy_partition(r + 1, class2, copies, n);
    return out;
}

BuiltFamily d_nrs_bipartite(int n, int r)
{
    require(r >= 4, "d_nrs_bipartite needs r >= 4" + params({{"r", r}}));
    require(n >= 2 * r, "d_nrs_bipartite needs n >= 2r" + params({{"n", n}, {"r", r}}));
    const int s = n / 2 - r + 1;
    const int t = n - 2 * r + 2 - s;

    // v_k (index k-1) is in V_1 for odd k; w_k (index r+k-1) for even k.
    VertexSet class2 = 0;
    for (int k = 1; k <= r; ++k) {
        if (k % 2 == 0)
            class2 |= bit(k - 1);
        else
            class2 |= bit(r + k - 1);
    }
    const VertexPartition base_partition(2 * r, class2);
    DenseDigraph base = d_2r_r_1(r);
    for (int u = 0; u < 2 * r; ++u)
        for (int v = 0; v < 2 * r; ++v)
            if (base.has_arc(u, v) && base_partition.class_of(u) == base_partition.class_of(v))
                base.remove_arc(u, v);

    std::array<Substitution, 2> targets{Substitution{0, empty_digraph(s)}, Substitution{r, empty_digraph(t)}};
    BuiltFamily out;
    out.digraph = blow_up(base, targets);
    std::array<std::pair<int, int>, 2> copies{std::pair{0, s}, std::pair{r, t}};
    out.partition = copy_partition(2 * r, class2, copies, n);
    return out;
}

std::string family_name(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::gamma_bar: return "gamma-bar";
    case FamilyKind::gamma_bar_blowup: return "gamma-bar-blowup";
    case FamilyKind::gamma_star: return "gamma-star";
    case FamilyKind::gamma_star_blowup: return "gamma-star-blowup";
    case FamilyKind::g_nrs: return "g-nrs";
    case FamilyKind::d_2r_r_1: return "d-2r-r-1";
    case FamilyKind::d_nrs: return "d-nrs";
    case FamilyKind::bip_cycle_blowup: return "bip-cycle-blowup";
    case FamilyKind::bip_digraph_extremal: return "bip-digraph-extremal";
    case FamilyKind::d_nrs_bipartite: return "d-nrs-bipartite";
    }
    throw DomainError("unknown family kind");
}

const std::vector<FamilyKind> & all_family_kinds()
{
    static const std::vector<FamilyKind> kinds{
        FamilyKind::gamma_bar, FamilyKind::gamma_bar_blowup, FamilyKind::gamma_star, FamilyKind::gamma_star_blowup,
        FamilyKind::g_nrs,     FamilyKind::d_2r_r_1,         FamilyKind::d_nrs,      FamilyKind::bip_cycle_blowup,
        FamilyKind::bip_digraph_extremal, FamilyKind::d_nrs_bipartite,
    };
    return kinds;
}

FamilyKind parse_family_name(const std::string & name)
{
    for (auto kind : all_family_kinds())
        if (family_name(kind) == name)
            return kind;
    throw DomainError("unknown family '" + name + "'");
}

BuiltFamily build(const FamilySpec & f)
{
    switch (f.kind) {
    case FamilyKind::gamma_bar: return {gamma_bar(f.r), true, std::nullopt};
    case FamilyKind::gamma_bar_blowup: return {gamma_bar_blowup(f.n, f.r, f.i, f.s), true, std::nullopt};
    case FamilyKind::gamma_star: return {gamma_star(f.r), true, std::nullopt};
    case FamilyKind::gamma_star_blowup: return {gamma_star_blowup(f.n, f.r, f.i, f.s), true, std::nullopt};
    case FamilyKind::g_nrs: return {g_nrs(f.n, f.r, f.s), true, std::nullopt};
    case FamilyKind::d_2r_r_1: return {d_2r_r_1(f.r), true, std::nullopt};
    case FamilyKind::d_nrs: return {d_nrs(f.n, f.r, f.s), true, std::nullopt};
    case FamilyKind::bip_cycle_blowup: return bip_cycle_blowup(f.n, f.r, f.a, f.b, f.c);
    case FamilyKind::bip_digraph_extremal: return bip_digraph_extremal(f.n, f.r, f.a, f.b, f.c, f.j);
    case FamilyKind::d_nrs_bipartite: return d_nrs_bipartite(f.n, f.r);
    }
    throw DomainError("unknown family kind");
}

Json to_json(const FamilySpec & f)
{
    Json j;
    j["family"] = family_name(f.kind);
    switch (f.kind) {
    case FamilyKind::gamma_bar: j["d"] = f.r; break;
    case FamilyKind::gamma_bar_blowup: j["n"] = f.n; j["d"] = f.r; j["i"] = f.i; j["s"] = f.s; break;
    case FamilyKind::gamma_star: j["r"] = f.r; break;
    case FamilyKind::gamma_star_blowup: j["n"] = f.n; j["r"] = f.r; j["i"] = f.i; j["s"] = f.s; break;
    case FamilyKind::g_nrs:
    case FamilyKind::d_nrs: j["n"] = f.n; j["r"] = f.r; j["s"] = f.s; break;
    case FamilyKind::d_2r_r_1: j["r"] = f.r; break;
    case FamilyKind::bip_cycle_blowup: j["n"] = f.n; j["r"] = f.r; j["a"] = f.a; j["b"] = f.b; j["c"] = f.c; break;
    case FamilyKind::bip_digraph_extremal:
        j["n"] = f.n; j["r"] = f.r; j["a"] = f.a; j["b"] = f.b; j["c"] = f.c; j["j"] = f.j;
        break;
    case FamilyKind::d_nrs_bipartite: j["n"] = f.n; j["r"] = f.r; break;
    }
    return j;
}

std::string bound_name(BoundName name)
{
    switch (name) {
    case BoundName::vizing_f: return "VIZING_F";
    case BoundName::dsv11: return "DSV11";
    case BoundName::fridman: return "FRIDMAN";
    case BoundName::rad3_biconn: return "RAD3_BICONN";
    case BoundName::biconn_general: return "BICONN_GENERAL";
    case BoundName::gamma_2r1: return "GAMMA_2R1";
    case BoundName::bip_digraph: return "BIP_DIGRAPH";
    case BoundName::bip_biconn_conj: return "BIP_BICONN_CONJ";
    }
    throw DomainError("unknown bound");
}

BoundName parse_bound_name(const std::string & name)
{
    std::string upper = name;
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) {
        return ch == '-' ? '_' : static_cast<char>(std::toupper(ch));
    });
    for (int k = 0; k <= static_cast<int>(BoundName::bip_biconn_conj); ++k)
        if (bound_name(static_cast<BoundName>(k)) == upper)
            return static_cast<BoundName>(k);
    throw DomainError("unknown bound '" + name + "'");
}

std::int64_t closed_form(BoundName name, const BoundParams & p)
{
    const std::int64_t n = p.n;
    const std::int64_t r = p.r;
    switch (name) {
    case BoundName::vizing_f:
        require(r >= 1, "VIZING_F needs r >= 1");
        if (r == 1) {
            require(n >= 1, "VIZING_F with r = 1 needs n >= 1");
            return n * (n - 1) / 2;
        }
        if (r == 2) {
            require(n >= 4, "VIZING_F with r = 2 needs n >= 4");
            return n * (n - 2) / 2;
        }
        require(n >= 2 * r, "VIZING_F with r >= 3 needs n >= 2r" + params({{"n", p.n}, {"r", p.r}}));
        return ((n - 2 * r) * (n - 2 * r) + 5 * n - 6 * r) / 2;
    case BoundName::dsv11:
        require(r >= 4 && n >= 2 * r, "DSV11 needs r >= 4 and n >= 2r" + params({{"n", p.n}, {"r", p.r}}));
        return floor_div((n - 2 * r + 4) * (n - 2 * r + 4), 4) + 2 * r - 4;
    case BoundName::fridman:
        require(r >= 2 && n >= r + 1, "FRIDMAN needs r >= 2 and n >= r+1" + params({{"n", p.n}, {"r", p.r}}));
        return n * (n - r) + (r * r - r - 2) / 2;
    case BoundName::rad3_biconn:
        require(n >= 6, "RAD3_BICONN needs n >= 6" + params({{"n", p.n}}));
        require(r == 0 || r == 3, "RAD3_BICONN is defined for r = 3 only");
        return (n - 2) * (n - 2);
    case BoundName::biconn_general:
        require(r >= 3 && n >= 2 * r, "BICONN_GENERAL needs r >= 3 and n >= 2r" + params({{"n", p.n}, {"r", p.r}}));
        return (n - r + 1) * (n - r + 1) + r - 3;
    case BoundName::gamma_2r1: {
        const std::int64_t rad2 = p.rad2 > 0 ? p.rad2 : 2 * r;
        require(rad2 >= 5, "GAMMA_2R1 needs radius >= 5/2" + params({{"rad2", static_cast<int>(rad2)}}));
        require(n == 0 || n == rad2 + 1, "GAMMA_2R1 needs n = 2r+1" + params({{"n", p.n}, {"rad2", static_cast<int>(rad2)}}));
        return (rad2 + 1) * (rad2 + 2) / 2 - 1;
    }
    case BoundName::bip_digraph:
        require(r >= 3 && n >= r + 1, "BIP_DIGRAPH needs r >= 3 and n >= r+1" + params({{"n", p.n}, {"r", p.r}}));
        return ceil_div(n * (n - 2), 4) + r - 4 + floor_div((n - r + 3) * (n - r + 3), 4);
    case BoundName::bip_biconn_conj:
        return d_nrs_bipartite(p.n, p.r).digraph.arc_count();
    }
    throw DomainError("unknown bound");
}

} // namespace edl
