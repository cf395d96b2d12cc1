#pragma once

#include <edl/digraph.hpp>

#include <string>
#include <vector>

namespace edl {

inline constexpr int kMaxCanonicalOrder = 12;

/// Canonical representative of the isomorphism class of `d` (order <= 12).
///
/// Vertices are first split into colour classes by iterated refinement of the
/// (out-degree, in-degree) profile; positions are filled class by class. Among
/// all relabellings that respect this class order, the one whose adjacency
/// bit string is lexicographically smallest is returned. Bits are read block
/// by block: block k lists, for each earlier position i, the pair
/// (arc k->i, arc i->k). Isomorphic digraphs, and only those, share the result.
DenseDigraph canonical_form(const DenseDigraph & d);

bool is_isomorphic(const DenseDigraph & a, const DenseDigraph & b);

/// Row-major '0'/'1' string of the adjacency matrix, without separators.
std::string adjacency_string(const DenseDigraph & d);

/// Canonical forms grouped into isomorphism classes, ordered by the
/// adjacency string of the canonical representative.
struct IsoClass {
    DenseDigraph representative;
    std::vector<int> members;   // indices into the input
};

std::vector<IsoClass> classify_isomorphism(const std::vector<DenseDigraph> & digraphs);

} // namespace edl
