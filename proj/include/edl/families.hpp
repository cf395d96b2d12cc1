#pragma once

#include <edl/digraph.hpp>
#include <edl/io.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace edl {

// Labelling conventions (all constructors):
//   path vertices v_0, v_1, ... keep indices in order; for D_{2r,r,1} the
//   v-path occupies 0..r-1 and the w-path r..2r-1; blow-up copies are
//   appended after them, target by target, in the order the targets are
//   listed in each constructor's comment.

/// v_0..v_d, arc v_i -> v_j iff i >= j-1 and i != j.
DenseDigraph gamma_bar(int d);

/// gamma_bar(d) with v_i blown up by K_s, then v_{i+1} by K_{n-d+1-s}.
DenseDigraph gamma_bar_blowup(int n, int d, int i, int s);

/// v_0..v_r: gamma_bar structure on v_1..v_r plus the single arc v_0 -> v_1.
DenseDigraph gamma_star(int r);

/// gamma_star(r) with v_i blown up by K_s, then v_{i+1} by K_{n-r+1-s}.
DenseDigraph gamma_star_blowup(int n, int r, int i, int s);

/// Symmetric C_{2r} with vertex 0 blown up by K_s, then vertex 1 by K_{n-2r+2-s}.
DenseDigraph g_nrs(int n, int r, int s);

/// v_1..v_r at 0..r-1 and w_1..w_r at r..2r-1.
DenseDigraph d_2r_r_1(int r);

/// d_2r_r_1(r) with v_1 blown up by K_s, then w_1 by K_{n-2r+2-s}.
DenseDigraph d_nrs(int n, int r, int s);

struct BuiltFamily {
    DenseDigraph digraph;
    bool extremal_profile = true;
    std::optional<VertexPartition> partition;
};

/// Symmetric C_{2r} with vertices 0, 1, 2 blown up by aK_1, bK_1, cK_1.
BuiltFamily bip_cycle_blowup(int n, int r, int a, int b, int c);

/// Bipartite layered digraph on layers 0..r with the given sizes (sizes[0]
/// must be 1): forward arcs layer i -> layer i+1, and every arc from layer i
/// to layer j for 1 <= j < i with i - j odd. Layer i's first vertex has
/// index i; extra copies are appended layer by layer.
DenseDigraph layered_bipartite(const std::vector<int> & sizes);

/// gamma_star(r) intersected with the parity bipartition, with stable-set
/// blow-ups aK_1, bK_1, cK_1 at v_j, v_{j+1}, v_{j+2} (appended in that order).
/// Positions must avoid v_0 and v_r, except that v_r may carry c = 1.
BuiltFamily bip_digraph_extremal(int n, int r, int a, int b, int c, int j);

/// D_{2r,r,1} restricted to the bipartition V_1 = {v_odd} u {w_even},
/// V_2 = {v_even} u {w_odd}, with v_1 blown up by sK_1, then w_1 by tK_1,
/// where s = floor(n/2) - r + 1 and t = n - 2r + 2 - s.
BuiltFamily d_nrs_bipartite(int n, int r);

enum class FamilyKind {
    gamma_bar,
    gamma_bar_blowup,
    gamma_star,
    gamma_star_blowup,
    g_nrs,
    d_2r_r_1,
    d_nrs,
    bip_cycle_blowup,
    bip_digraph_extremal,
    d_nrs_bipartite,
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::gamma_bar;
    int n = 0;
    int r = 0;   // d for the gamma_bar kinds
    int s = 1;
    int i = 1;
    int a = 1;
    int b = 1;
    int c = 1;
    int j = 1;
};

std::string family_name(FamilyKind kind);
FamilyKind parse_family_name(const std::string & name);
const std::vector<FamilyKind> & all_family_kinds();

BuiltFamily build(const FamilySpec & spec);
Json to_json(const FamilySpec & spec);

enum class BoundName {
    vizing_f,
    dsv11,
    fridman,
    rad3_biconn,
    biconn_general,
    gamma_2r1,
    bip_digraph,
    bip_biconn_conj,
};

std::string bound_name(BoundName name);
BoundName parse_bound_name(const std::string & name);

struct BoundParams {
    int n = 0;
    int r = 0;
    /// Doubled radius for gamma_2r1 (2r + 1 = n).
    int rad2 = 0;
};

/// Exact value of the named size bound; DomainError outside its parameter domain.
std::int64_t closed_form(BoundName name, const BoundParams & p);

} // namespace edl
