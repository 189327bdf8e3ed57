#pragma once

#include <string>
#include <vector>

#include "graphhom/graph.hpp"

namespace graphhom {

// Canonical key: "<u|d><nn>:" followed by the lexicographically minimal
// row-major adjacency bitstring over all vertex orderings (diagonal kept,
// so loops are part of the key). Keys sort by vertex count first because
// the count is zero-padded.
using CanonicalKey = std::string;

CanonicalKey canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// One representative per isomorphism class of loopless graphs with
// 1..max_n vertices, ordered by vertex count, then canonical key.
std::vector<Graph> all_graphs_up_to_iso(int max_n, bool directed);

}  // namespace graphhom
