#include "netent/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "netent/errors.hpp"

namespace netent {

namespace {

// Uniform double in [0, 1) from the top 53 bits; fully specified, unlike
// std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, bound) by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) {
            return r % bound;
        }
    }
}

std::vector<std::string> numbered_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        labels.push_back(std::to_string(i));
    }
    return labels;
}

// Throws unless the sequence satisfies the Erdos-Gallai conditions.
void check_graphical(const DegreeSequence& degrees) {
    const std::size_t n = degrees.size();
    long long sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (degrees[i] < 0) {
            throw NonGraphicalSequenceError(0, "degree at position " + std::to_string(i + 1) +
                                                   " is negative");
        }
        sum += degrees[i];
    }
    if (sum % 2 != 0) {
        throw NonGraphicalSequenceError(0, "degree sum is odd");
    }

    std::vector<long long> sorted(degrees.begin(), degrees.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    std::vector<long long> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        prefix[i + 1] = prefix[i] + sorted[i];
    }

    for (std::size_t k = 1; k <= n; ++k) {
        // first index past k whose degree drops below k
        const auto split = std::upper_bound(sorted.begin() + static_cast<long>(k), sorted.end(),
                                            static_cast<long long>(k), std::greater<>());
        const std::size_t j = static_cast<std::size_t>(split - sorted.begin());
        const long long capped = static_cast<long long>(j - k) * static_cast<long long>(k) +
                                 (prefix[n] - prefix[j]);
        const long long lhs = prefix[k];
        const long long rhs = static_cast<long long>(k) * static_cast<long long>(k - 1) + capped;
        if (lhs > rhs) {
            throw NonGraphicalSequenceError(
                k, "Erdos-Gallai inequality violated at k=" + std::to_string(k));
        }
    }
}

}  // namespace

Graph realize_degree_sequence(const DegreeSequence& degrees) {
    check_graphical(degrees);

    const std::size_t n = degrees.size();
    std::vector<int> remaining(degrees.begin(), degrees.end());
    std::vector<std::pair<std::string, std::string>> edges;
    edges.reserve(static_cast<std::size_t>(
        std::accumulate(degrees.begin(), degrees.end(), 0LL) / 2));

    auto by_remaining = [&remaining](std::size_t a, std::size_t b) {
        if (remaining[a] != remaining[b]) {
            return remaining[a] > remaining[b];
        }
        return a < b;
    };

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    for (;;) {
        std::sort(order.begin(), order.end(), by_remaining);
        const std::size_t source = order[0];
        const int need = remaining[source];
        if (need == 0) {
            break;
        }
        if (static_cast<std::size_t>(need) >= n) {
            throw std::logic_error("havel-hakimi: unsatisfiable source after graphical check");
        }
        for (int e = 0; e < need; ++e) {
            const std::size_t target = order[static_cast<std::size_t>(e) + 1];
            if (remaining[target] <= 0) {
                throw std::logic_error("havel-hakimi: ran out of targets after graphical check");
            }
            --remaining[target];
            edges.emplace_back(std::to_string(source + 1), std::to_string(target + 1));
        }
        remaining[source] = 0;
    }

    return build_graph(numbered_labels(n), edges);
}

Graph example_network() {
    static const DegreeSequence degrees = {3, 3, 3, 2, 5, 3, 5, 3, 1, 4, 2,
                                           3, 2, 2, 6, 2, 3, 4, 4, 3, 3};
    return realize_degree_sequence(degrees);
}

Graph gen_erdos_renyi(std::size_t n, double p, RngSeed seed) {
    if (n < 1) {
        throw InvalidParamsError("erdos-renyi requires n >= 1");
    }
    if (!(p >= 0.0) || !(p <= 1.0)) {
        throw InvalidParamsError("erdos-renyi requires p in [0, 1]");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (uniform01(rng) < p) {
                edges.emplace_back(std::to_string(i + 1), std::to_string(j + 1));
            }
        }
    }
    return build_graph(numbered_labels(n), edges);
}

Graph gen_barabasi_albert(std::size_t n, std::size_t m, RngSeed seed) {
    if (m < 1) {
        throw InvalidParamsError("barabasi-albert requires m >= 1");
    }
    if (n <= m) {
        throw InvalidParamsError("barabasi-albert requires n > m");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::size_t> urn;  // node index repeated once per unit of degree

    const std::size_t core = m + 1;
    for (std::size_t i = 0; i < core; ++i) {
        for (std::size_t j = i + 1; j < core; ++j) {
            edges.emplace_back(std::to_string(i + 1), std::to_string(j + 1));
            urn.push_back(i);
            urn.push_back(j);
        }
    }

    std::vector<std::size_t> targets;
    std::unordered_set<std::size_t> chosen;
    for (std::size_t v = core; v < n; ++v) {
        targets.clear();
        chosen.clear();
        while (targets.size() < m) {
            const std::size_t candidate = urn[uniform_below(rng, urn.size())];
            if (chosen.insert(candidate).second) {
                targets.push_back(candidate);
            }
        }
        for (std::size_t t : targets) {
            edges.emplace_back(std::to_string(v + 1), std::to_string(t + 1));
            urn.push_back(v);
            urn.push_back(t);
        }
    }

    return build_graph(numbered_labels(n), edges);
}

}  // namespace netent
