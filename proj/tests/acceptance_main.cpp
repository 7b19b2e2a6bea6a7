// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one [PASS]/[FAIL]/[SKIP] line per criterion. Exits nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "netent/entropy.hpp"
#include "netent/errors.hpp"
#include "netent/generators.hpp"
#include "netent/graph.hpp"
#include "netent/io.hpp"

using namespace netent;

namespace {

// ---------------------------------------------------------------------------
// Independent oracle: straight-line long double evaluation from raw degrees.
// Shares nothing with the library's entropy path.
// ---------------------------------------------------------------------------

long double oracle_entropy(const std::vector<int>& degrees, long double q) {
    long double total = 0.0L;
    for (int d : degrees) {
        total += d;
    }
    if (q == 1.0L) {
        long double acc = 0.0L;
        for (int d : degrees) {
            if (d > 0) {
                const long double p = static_cast<long double>(d) / total;
                acc += p * std::log(p);
            }
        }
        return -acc;
    }
    long double acc = 0.0L;
    for (int d : degrees) {
        if (d > 0) {
            acc += std::pow(static_cast<long double>(d) / total, q);
        }
    }
    return (1.0L - acc) / (q - 1.0L);
}

const std::vector<int> kExampleDegrees = {3, 3, 3, 2, 5, 3, 5, 3, 1, 4, 2,
                                          3, 2, 2, 6, 2, 3, 4, 4, 3, 3};

struct GoldenPoint {
    double q;
    double value;
};

const GoldenPoint kGolden[] = {{0.5, 7.005657}, {1.0, 2.976405}, {1.5, 1.541335},
                               {2.0, 0.945822}, {2.5, 0.657896}, {3.0, 0.498362},
                               {3.5, 0.399666}, {4.0, 0.333261}, {4.5, 0.285698},
                               {5.0, 0.249996}};

double elapsed_ms(const std::function<void()>& work) {
    double best = 1e300;
    for (int run = 0; run < 3; ++run) {
        const auto t0 = std::chrono::steady_clock::now();
        work();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

enum class Outcome { Fail, Pass, Skip };

Outcome golden_values(std::string& detail) {
    const Graph g = example_network();

    // trust gate: cross-check q=1 and q=2 against the independent oracle and
    // the exact rational before comparing with the frozen table
    const double oracle_q1 = static_cast<double>(oracle_entropy(kExampleDegrees, 1.0L));
    const double oracle_q2 = static_cast<double>(oracle_entropy(kExampleDegrees, 2.0L));
    const double exact_q2 = 1.0 - 236.0 / 4356.0;
    if (std::abs(network_tsallis_entropy(g, 1.0).value - oracle_q1) > 1e-12 ||
        std::abs(network_tsallis_entropy(g, 2.0).value - oracle_q2) > 1e-12 ||
        std::abs(network_tsallis_entropy(g, 2.0).value - exact_q2) > 1e-14) {
        detail = "implementation disagrees with the independent oracle at q=1 or q=2";
        return Outcome::Fail;
    }

    double max_err = 0.0;
    for (const auto& [q, want] : kGolden) {
        max_err = std::max(max_err, std::abs(network_tsallis_entropy(g, q).value - want));
    }

    volatile double sink = 0.0;
    const double ms = elapsed_ms([&] {
        double acc = 0.0;
        for (const auto& [q, want] : kGolden) {
            acc += network_tsallis_entropy(g, q).value;
        }
        sink = acc;
    });

    detail = "max |err| = " + fmt(max_err) + ", ten points in " + fmt(ms) + " ms";
    return max_err <= 5e-7 && ms < 1.0 ? Outcome::Pass : Outcome::Fail;
}

Outcome shannon_limit(std::string& detail) {
    std::vector<Graph> graphs;
    graphs.push_back(example_network());
    for (RngSeed seed = 1; seed <= 20; ++seed) {
        graphs.push_back(gen_erdos_renyi(40 + 10 * seed, seed % 2 ? 0.1 : 0.3, seed));
    }
    for (RngSeed seed = 1; seed <= 20; ++seed) {
        graphs.push_back(gen_barabasi_albert(50 + 20 * seed, 1 + seed % 5, seed));
    }

    double max_exact = 0.0;
    double max_limit = 0.0;
    for (const Graph& g : graphs) {
        const ProbabilityVector p = normalized_degrees(g);
        const double shannon = shannon_entropy(p);
        max_exact = std::max(max_exact,
                             std::abs(network_tsallis_entropy(g, 1.0).value - shannon));
        max_limit = std::max(max_limit, std::abs(tsallis_entropy(p, 1.0 + 1e-8) - shannon));
        max_limit = std::max(max_limit, std::abs(tsallis_entropy(p, 1.0 - 1e-8) - shannon));
    }
    detail = "41 graphs: |S_1 - shannon| <= " + fmt(max_exact) + ", closed form at 1±1e-8 within " +
             fmt(max_limit);
    return max_exact <= 1e-12 && max_limit <= 1e-6 ? Outcome::Pass : Outcome::Fail;
}

Outcome zero_q_cardinality(std::string& detail) {
    int checked = 0;
    int with_isolated = 0;
    const Graph fixture = example_network();
    if (network_tsallis_entropy(fixture, 0.0).value != 20.0) {
        detail = "example network S_0 != 20";
        return Outcome::Fail;
    }
    for (RngSeed seed = 1; seed <= 100; ++seed) {
        const Graph g = gen_erdos_renyi(30, 0.05 + 0.004 * static_cast<double>(seed), seed);
        const auto& degrees = g.degree_sequence();
        const auto nonzero =
            std::count_if(degrees.begin(), degrees.end(), [](int d) { return d > 0; });
        with_isolated += nonzero < static_cast<long>(degrees.size());
        if (network_tsallis_entropy(g, 0.0).value != static_cast<double>(nonzero) - 1.0) {
            detail = "S_0 mismatch at seed " + std::to_string(seed);
            return Outcome::Fail;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " graphs exact (" + std::to_string(with_isolated) +
             " with isolated nodes), plus the example network";
    return Outcome::Pass;
}

Outcome monotone_in_q(std::string& detail) {
    int checked = 0;
    for (RngSeed seed = 1; seed <= 50; ++seed) {
        for (int model = 0; model < 2; ++model) {
            const Graph g = model == 0
                                ? gen_erdos_renyi(20 + 2 * (seed % 10), 0.1 + 0.04 * (seed % 10), seed)
                                : gen_barabasi_albert(20 + 3 * (seed % 10), 1 + seed % 5, seed);
            if (g.edge_count() == 0) {
                continue;  // degenerate; sweep would reject it
            }
            const SweepResult r = sweep(g, 0.0, 5.0, 0.1);
            for (std::size_t i = 0; i + 1 < r.points.size(); ++i) {
                if (!(r.points[i + 1].value < r.points[i].value)) {
                    detail = "not strictly decreasing at seed " + std::to_string(seed);
                    return Outcome::Fail;
                }
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " graphs strictly decreasing over q in {0,0.1,...,5}";
    return checked == 100 ? Outcome::Pass : Outcome::Fail;
}

Outcome form_equivalence(std::string& detail) {
    std::mt19937_64 rng(20240901);
    const double qs[] = {-1.0, 0.0, 0.5, 2.0, 3.0, 10.0};
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t size = 1 + rng() % 64;
        std::vector<double> values(size);
        double sum = 0.0;
        for (auto& v : values) {
            v = 1e-7 + static_cast<double>(rng() >> 11) * 0x1.0p-53;
            sum += v;
        }
        for (auto& v : values) {
            v /= sum;
        }
        const ProbabilityVector p(std::move(values));
        for (double q : qs) {
            const double a = tsallis_entropy(p, q);
            const double b = tsallis_entropy_qlog_form(p, q);
            const double scale = std::max(std::abs(a), std::abs(b));
            const double rel = scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
            worst = std::max(worst, rel);
        }
    }
    detail = "1000 vectors x 6 q values, worst relative gap " + fmt(worst);
    return worst <= 1e-10 ? Outcome::Pass : Outcome::Fail;
}

Outcome reference_dataset(std::string& detail) {
    std::string path = "datasets/US-Airlines.net";
    if (const char* env = std::getenv("NETENT_US_AIRLINES")) {
        path = env;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        detail = "US-Airlines dataset not present (set NETENT_US_AIRLINES to run); "
                 "covered by criteria 2-5 on generated data";
        return Outcome::Skip;
    }
    const std::string text(std::istreambuf_iterator<char>(in), {});
    const ParseReport report = parse_pajek(text);
    const double s1 = network_tsallis_entropy(report.graph, 1.0).value;
    const double s21 = network_tsallis_entropy(report.graph, 2.1).value;
    detail = "nodes=" + std::to_string(report.graph.node_count()) +
             ", S_1=" + fmt(s1) + " (want 5.025024 +/- 1e-3), S_2.1=" + fmt(s21) +
             " (want 0.90287 +/- 1e-3)";
    return std::abs(s1 - 5.025024) <= 1e-3 && std::abs(s21 - 0.90287) <= 1e-3
               ? Outcome::Pass
               : Outcome::Fail;
}

Outcome sweep_protocol(std::string& detail) {
    const Graph example = example_network();
    const SweepResult r = sweep(example, 0.0, 5.0, 0.1);
    if (r.points.size() != 51) {
        detail = "expected 51 points, got " + std::to_string(r.points.size());
        return Outcome::Fail;
    }
    for (std::size_t i = 0; i + 1 < r.points.size(); ++i) {
        if (!(r.points[i + 1].value < r.points[i].value)) {
            detail = "sweep not strictly decreasing";
            return Outcome::Fail;
        }
    }
    if (!(r.points.back().value < 0.3)) {
        detail = "final point not below 0.3";
        return Outcome::Fail;
    }

    const Graph big = gen_barabasi_albert(10000, 3, 7);
    volatile std::size_t sink = 0;
    const double ms = elapsed_ms([&] { sink = sweep(big, 0.0, 5.0, 0.1).points.size(); });
    detail = "51 points, strictly decreasing, S_5 = " + fmt(r.points.back().value) +
             "; 10^4-node sweep in " + fmt(ms) + " ms";
    return ms < 10.0 ? Outcome::Pass : Outcome::Fail;
}

Outcome parser_robustness(std::string& detail) {
    std::mt19937_64 rng(0xfeedface);
    int structured = 0;
    int accepted = 0;
    const std::string seed_text = "*Vertices 3\n1 \"a\"\n*Edges\n1 2\n2 3\n";
    for (int i = 0; i < 10000; ++i) {
        std::string input;
        if (i % 2 == 0) {
            input.resize(rng() % 200);
            for (auto& c : input) {
                c = static_cast<char>(rng() % 256);
            }
        } else {
            input = seed_text;
            const std::size_t flips = 1 + rng() % 8;
            for (std::size_t f = 0; f < flips; ++f) {
                input[rng() % input.size()] = static_cast<char>(rng() % 256);
            }
        }
        for (int variant = 0; variant < 2; ++variant) {
            try {
                const ParseReport r = variant == 0 ? parse_edge_list(input) : parse_pajek(input);
                (void)r;
                ++accepted;
            } catch (const Error&) {
                ++structured;
            } catch (...) {
                detail = "non-structured exception escaped on fuzz case " + std::to_string(i);
                return Outcome::Fail;
            }
        }
    }

    for (RngSeed seed = 1; seed <= 100; ++seed) {
        const Graph g = gen_barabasi_albert(10 + seed, 1 + seed % 5, seed);
        const ParseReport r = parse_edge_list(write_edge_list(g));
        auto a = g.degree_sequence();
        auto b = r.graph.degree_sequence();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            detail = "round-trip degree multiset changed at seed " + std::to_string(seed);
            return Outcome::Fail;
        }
    }

    detail = "20000 fuzz parses (" + std::to_string(accepted) + " accepted, " +
             std::to_string(structured) + " structured errors), 100 round-trips";
    return Outcome::Pass;
}

struct Criterion {
    std::string name;
    std::function<Outcome(std::string&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 example-network golden entropy values", golden_values},
        {"2 Shannon limit at q=1 and continuity near q=1", shannon_limit},
        {"3 q=0 counts nonzero-degree nodes minus one", zero_q_cardinality},
        {"4 entropy strictly decreasing in q", monotone_in_q},
        {"5 closed form vs q-log form equivalence", form_equivalence},
        {"6 US-Airlines reference values", reference_dataset},
        {"7 default sweep protocol and runtime", sweep_protocol},
        {"8 parser robustness and round-trip", parser_robustness},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::string detail;
        Outcome outcome = Outcome::Fail;
        try {
            outcome = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const char* tag = outcome == Outcome::Skip ? "[SKIP]"
                          : outcome == Outcome::Pass ? "[PASS]"
                                                     : "[FAIL]";
        std::printf("%s %s: %s\n", tag, criterion.name.c_str(), detail.c_str());
        failures += outcome == Outcome::Fail;
    }
    return failures == 0 ? 0 : 1;
}
