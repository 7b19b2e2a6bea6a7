#pragma once

#include <cstddef>
#include <cstdint>

#include "netent/graph.hpp"

namespace netent {

/// Seed for the generators' PRNG (mt19937_64). Same seed and parameters
/// reproduce the same graph byte-for-byte on every platform.
using RngSeed = std::uint64_t;

/// Builds a simple graph realizing the given per-node degrees via the
/// Havel-Hakimi procedure (highest remaining degree first, ties broken by
/// node order). Nodes are labelled "1".."n" in input order.
///
/// Throws NonGraphicalSequenceError when the Erdos-Gallai conditions fail.
Graph realize_degree_sequence(const DegreeSequence& degrees);

/// The canonical 21-node, 33-edge example network used throughout the test
/// suite, realized from its fixed degree sequence.
Graph example_network();

/// G(n, p): each of the n(n-1)/2 unordered pairs is an edge independently
/// with probability p.
Graph gen_erdos_renyi(std::size_t n, double p, RngSeed seed);

/// Preferential attachment: a complete core on m+1 nodes, then each new node
/// attaches m edges to distinct existing nodes chosen proportionally to
/// current degree. Requires n > m >= 1.
Graph gen_barabasi_albert(std::size_t n, std::size_t m, RngSeed seed);

}  // namespace netent
