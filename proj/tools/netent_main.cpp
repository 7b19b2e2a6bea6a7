// netent: degree-distribution entropy toolkit for undirected graphs.
//
// Exit codes: 0 ok, 1 usage, 2 parse/input error, 3 graph without edges,
// 4 domain error, 5 invalid q range, 6 generator error.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "netent/entropy.hpp"
#include "netent/errors.hpp"
#include "netent/generators.hpp"
#include "netent/graph.hpp"
#include "netent/io.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kDegenerate = 3,
    kDomain = 4,
    kRange = 5,
    kGenerator = 6,
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw netent::Error("cannot open '" + path + "'");
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
}

bool has_net_extension(const std::string& path) {
    if (path.size() < 4) {
        return false;
    }
    std::string ext = path.substr(path.size() - 4);
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".net";
}

netent::ParseReport load_graph(const std::string& path, const std::string& format_override) {
    const std::string text = read_input(path);
    const bool pajek =
        format_override == "pajek" || (format_override.empty() && has_net_extension(path));
    return pajek ? netent::parse_pajek(text) : netent::parse_edge_list(text);
}

void print_warnings(const netent::ParseReport& report) {
    for (const auto& w : report.warnings) {
        std::cerr << "warning: " << w << '\n';
    }
}

std::string shortest(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string compact6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

int run_info(const std::string& path, const std::string& format_override) {
    const auto report = load_graph(path, format_override);
    print_warnings(report);
    const auto& g = report.graph;
    const auto& degrees = g.degree_sequence();
    const auto [min_it, max_it] = std::minmax_element(degrees.begin(), degrees.end());
    const double mean =
        static_cast<double>(g.total_degree()) / static_cast<double>(g.node_count());
    std::cout << "nodes: " << g.node_count() << ", edges: " << g.edge_count()
              << ", total degree: " << g.total_degree() << '\n';
    std::cout << "degree min: " << *min_it << ", max: " << *max_it << ", mean: " << fixed6(mean)
              << '\n';
    return kOk;
}

int run_entropy(const std::string& path, const std::string& format_override, double q, double k,
                const std::string& format) {
    const auto report = load_graph(path, format_override);
    print_warnings(report);
    const netent::EntropyPoint point = netent::network_tsallis_entropy(report.graph, q, k);
    if (format == "csv") {
        std::cout << "q,entropy\n" << shortest(point.q) << ',' << shortest(point.value) << '\n';
    } else if (format == "json") {
        std::cout << "{\"input\": \"" << path << "\", \"nodes\": " << report.graph.node_count()
                  << ", \"edges\": " << report.graph.edge_count() << ", \"q\": " << shortest(point.q)
                  << ", \"k\": " << shortest(point.k) << ", \"entropy\": " << shortest(point.value)
                  << "}\n";
    } else {
        std::cout << fixed6(point.value) << '\n';
    }
    return kOk;
}

int run_sweep(const std::string& path, const std::string& format_override, double q_min,
              double q_max, double q_step, double k, const std::string& format) {
    const auto report = load_graph(path, format_override);
    print_warnings(report);
    netent::SweepResult result = netent::sweep(report.graph, q_min, q_max, q_step, k);
    result.source.input = path;
    if (format == "csv") {
        std::cout << netent::write_sweep_csv(result);
    } else if (format == "json") {
        std::cout << netent::write_sweep_json(result) << '\n';
    } else {
        std::string qs = "q";
        std::string values = "S_q";
        for (const auto& point : result.points) {
            qs += '\t';
            qs += compact6(point.q);
            values += '\t';
            values += fixed6(point.value);
        }
        std::cout << qs << '\n' << values << '\n';
    }
    return kOk;
}

int run_gen(const std::string& model, std::optional<long long> n, std::optional<double> p,
            std::optional<long long> m, netent::RngSeed seed, const std::string& output) {
    std::optional<netent::Graph> g;
    if (model == "example") {
        g = netent::example_network();
    } else if (model == "er") {
        if (!n || *n < 1) {
            throw netent::InvalidParamsError("er requires --n >= 1");
        }
        if (!p) {
            throw netent::InvalidParamsError("er requires --p");
        }
        g = netent::gen_erdos_renyi(static_cast<std::size_t>(*n), *p, seed);
    } else if (model == "ba") {
        if (!n || !m) {
            throw netent::InvalidParamsError("ba requires --n and --m");
        }
        if (*m < 1 || *n <= *m) {
            throw netent::InvalidParamsError("ba requires n > m >= 1");
        }
        g = netent::gen_barabasi_albert(static_cast<std::size_t>(*n),
                                        static_cast<std::size_t>(*m), seed);
    } else {
        throw netent::InvalidParamsError("unknown model '" + model + "'");
    }

    const std::string text = netent::write_edge_list(*g);
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) {
            throw netent::Error("cannot write '" + output + "'");
        }
        out << text;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tsallis and Shannon entropy of complex networks from degree distributions"};
    app.require_subcommand(1);

    std::string input;
    std::string format_override;
    std::string format = "table";
    double q = 1.0;
    double k = 1.0;
    double q_min = 0.0;
    double q_max = 5.0;
    double q_step = 0.1;

    auto* info = app.add_subcommand("info", "Node/edge/degree summary of a graph file");
    info->add_option("input", input, "graph file, or - for stdin")->required();
    info->add_option("--input-format", format_override, "edgelist|pajek (default: by extension)")
        ->check(CLI::IsMember({"edgelist", "pajek"}));

    auto* entropy = app.add_subcommand("entropy", "Tsallis entropy at a single q");
    entropy->add_option("input", input, "graph file, or - for stdin")->required();
    entropy->add_option("--q", q, "entropic index")->required();
    entropy->add_option("--k", k, "entropy constant", true);
    entropy->add_option("--format", format, "table|csv|json", true)
        ->check(CLI::IsMember({"table", "csv", "json"}));
    entropy->add_option("--input-format", format_override, "edgelist|pajek (default: by extension)")
        ->check(CLI::IsMember({"edgelist", "pajek"}));

    auto* sweep = app.add_subcommand("sweep", "Entropy over a q grid");
    sweep->add_option("input", input, "graph file, or - for stdin")->required();
    sweep->add_option("--q-min", q_min, "grid start", true);
    sweep->add_option("--q-max", q_max, "grid end (inclusive)", true);
    sweep->add_option("--q-step", q_step, "grid spacing", true);
    sweep->add_option("--k", k, "entropy constant", true);
    sweep->add_option("--format", format, "table|csv|json", true)
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sweep->add_option("--input-format", format_override, "edgelist|pajek (default: by extension)")
        ->check(CLI::IsMember({"edgelist", "pajek"}));

    std::string model;
    std::optional<long long> gen_n;
    std::optional<double> gen_p;
    std::optional<long long> gen_m;
    netent::RngSeed seed = 1;
    std::string output;

    auto* gen = app.add_subcommand("gen", "Generate a graph as edge-list text");
    gen->add_option("model", model, "example|er|ba")->required();
    gen->add_option("--n", gen_n, "node count (er, ba)");
    gen->add_option("--p", gen_p, "edge probability (er)");
    gen->add_option("--m", gen_m, "edges per new node (ba)");
    gen->add_option("--seed", seed, "PRNG seed", true);
    gen->add_option("-o,--output", output, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (info->parsed()) {
            return run_info(input, format_override);
        }
        if (entropy->parsed()) {
            return run_entropy(input, format_override, q, k, format);
        }
        if (sweep->parsed()) {
            return run_sweep(input, format_override, q_min, q_max, q_step, k, format);
        }
        if (gen->parsed()) {
            return run_gen(model, gen_n, gen_p, gen_m, seed, output);
        }
    } catch (const netent::ZeroTotalDegreeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDegenerate;
    } catch (const netent::NegativeQZeroProbError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const netent::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const netent::InvalidRangeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRange;
    } catch (const netent::NonGraphicalSequenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kGenerator;
    } catch (const netent::InvalidParamsError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kGenerator;
    } catch (const netent::Error& e) {
        // parse-layer failures: malformed lines, bad headers, self-loops, empty graphs
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    }
    return kUsage;
}
