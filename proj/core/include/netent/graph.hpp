#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace netent {

/// Per-node degrees, in node order.
using DegreeSequence = std::vector<int>;

namespace detail {
struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
};
}  // namespace detail

/// Immutable undirected simple graph.
///
/// Nodes are opaque string labels kept in first-occurrence order, edges are
/// deduplicated unordered pairs. Self-loops are rejected at construction.
/// Instances are safe to share across threads once built.
class Graph {
public:
    std::size_t node_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Node labels in insertion order.
    const std::vector<std::string>& nodes() const noexcept { return labels_; }

    /// Edges as index pairs (first < second), in insertion order.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept {
        return edges_;
    }

    /// Edges as label pairs, in insertion order.
    std::vector<std::pair<std::string, std::string>> edge_labels() const;

    bool has_node(std::string_view label) const noexcept;

    /// Number of edges incident to the node. Throws UnknownNodeError.
    int degree(std::string_view label) const;

    int degree_at(std::size_t index) const { return degrees_.at(index); }

    const DegreeSequence& degree_sequence() const noexcept { return degrees_; }

    /// Sum of all degrees: always 2 * edge_count().
    long long total_degree() const noexcept {
        return 2 * static_cast<long long>(edges_.size());
    }

    bool operator==(const Graph& other) const noexcept {
        return labels_ == other.labels_ && edges_ == other.edges_;
    }

    friend Graph build_graph(const std::vector<std::string>& node_labels,
                             const std::vector<std::pair<std::string, std::string>>& edge_pairs);

private:
    Graph() = default;

    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t, detail::StringHash, std::equal_to<>> index_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    DegreeSequence degrees_;
};

/// Builds a graph from explicit node labels plus an edge list.
///
/// Edge endpoints missing from node_labels are appended in first-occurrence
/// order. Duplicate edges collapse silently; a self-loop throws SelfLoopError
/// and a resulting node set of size zero throws EmptyGraphError.
Graph build_graph(const std::vector<std::string>& node_labels,
                  const std::vector<std::pair<std::string, std::string>>& edge_pairs);

}  // namespace netent
