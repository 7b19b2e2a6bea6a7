#include "netent/graph.hpp"

#include <set>

#include "netent/errors.hpp"

namespace netent {

std::vector<std::pair<std::string, std::string>> Graph::edge_labels() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edges_.size());
    for (const auto& [u, v] : edges_) {
        out.emplace_back(labels_[u], labels_[v]);
    }
    return out;
}

bool Graph::has_node(std::string_view label) const noexcept {
    return index_.find(label) != index_.end();
}

int Graph::degree(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end()) {
        throw UnknownNodeError(std::string(label));
    }
    return degrees_[it->second];
}

Graph build_graph(const std::vector<std::string>& node_labels,
                  const std::vector<std::pair<std::string, std::string>>& edge_pairs) {
    Graph g;

    auto intern = [&g](const std::string& label) -> std::size_t {
        if (label.empty()) {
            throw InvalidParamsError("node labels must be non-empty");
        }
        auto it = g.index_.find(label);
        if (it != g.index_.end()) {
            return it->second;
        }
        const std::size_t idx = g.labels_.size();
        g.labels_.push_back(label);
        g.index_.emplace(label, idx);
        return idx;
    };

    for (const auto& label : node_labels) {
        intern(label);
    }

    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& [a, b] : edge_pairs) {
        if (a == b) {
            throw SelfLoopError(a);
        }
        std::size_t u = intern(a);
        std::size_t v = intern(b);
        if (u > v) {
            std::swap(u, v);
        }
        if (seen.insert({u, v}).second) {
            g.edges_.emplace_back(u, v);
        }
    }

    if (g.labels_.empty()) {
        throw EmptyGraphError();
    }

    g.degrees_.assign(g.labels_.size(), 0);
    for (const auto& [u, v] : g.edges_) {
        ++g.degrees_[u];
        ++g.degrees_[v];
    }
    return g;
}

}  // namespace netent
