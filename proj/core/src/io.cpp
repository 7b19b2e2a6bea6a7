#include "netent/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <system_error>
#include <utility>

#include <json.hpp>

#include "netent/errors.hpp"

namespace netent {

namespace {

struct Line {
    std::size_t number = 0;  // 1-based
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t start = 0;
    std::size_t number = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) {
                lines.push_back({++number, text.substr(start)});
            }
            break;
        }
        lines.push_back({++number, text.substr(start, end - start)});
        start = end + 1;
    }
    for (auto& line : lines) {
        if (!line.text.empty() && line.text.back() == '\r') {
            line.text.remove_suffix(1);
        }
    }
    return lines;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_comment(std::string_view trimmed) {
    return !trimmed.empty() && (trimmed.front() == '#' || trimmed.front() == '%');
}

std::vector<std::string_view> tokenize(std::string_view s) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
            ++j;
        }
        if (j > i) {
            tokens.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return tokens;
}

bool parse_integer(std::string_view token, long long& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

void append_shortest(std::string& out, double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    out.append(buf, ptr);
}

}  // namespace

ParseReport parse_edge_list(std::string_view text) {
    const auto lines = split_lines(text);

    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> warnings;
    std::set<std::pair<std::string, std::string>> seen;
    bool extra_token_warned = false;

    for (const auto& line : lines) {
        const std::string_view body = trim(line.text);
        if (body.empty() || is_comment(body)) {
            continue;
        }
        const auto tokens = tokenize(body);
        if (tokens.size() == 1) {
            throw MalformedLineError(line.number, "expected two endpoint tokens, found one");
        }
        std::string u(tokens[0]);
        std::string v(tokens[1]);
        if (tokens.size() > 2 && !extra_token_warned) {
            warnings.push_back("line " + std::to_string(line.number) +
                               ": extra tokens (weights) ignored");
            extra_token_warned = true;
        }
        if (u == v) {
            throw SelfLoopError(u, line.number);
        }
        auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
        if (!seen.insert(key).second) {
            warnings.push_back("line " + std::to_string(line.number) + ": duplicate edge " + u +
                               " " + v + " collapsed");
            continue;
        }
        edges.emplace_back(std::move(u), std::move(v));
    }

    ParseReport report{build_graph({}, edges), std::move(warnings), lines.size()};
    return report;
}

ParseReport parse_pajek(std::string_view text) {
    const auto lines = split_lines(text);

    enum class Section { None, Vertices, Edges, Arcs };
    Section section = Section::None;
    bool vertices_seen = false;
    std::size_t vertex_count = 0;
    std::vector<std::string> labels;        // empty string = not declared
    std::vector<std::string> warnings;
    std::vector<std::pair<long long, long long>> edges;
    std::set<std::pair<long long, long long>> seen;
    std::set<std::string> used_labels;
    bool arcs_warned = false;

    auto check_id = [&](long long id, std::size_t line_number) {
        if (id < 1 || static_cast<std::size_t>(id) > vertex_count) {
            throw VertexIdOutOfRangeError(line_number, id, vertex_count);
        }
    };

    for (const auto& line : lines) {
        const std::string_view body = trim(line.text);
        if (body.empty() || is_comment(body)) {
            continue;
        }

        if (body.front() == '*') {
            const auto tokens = tokenize(body);
            const std::string header = lowercase(tokens[0]);
            if (header == "*vertices") {
                if (vertices_seen) {
                    throw MalformedLineError(line.number, "duplicate *Vertices section");
                }
                long long n = 0;
                if (tokens.size() < 2 || !parse_integer(tokens[1], n) || n < 0) {
                    throw MalformedLineError(line.number, "*Vertices requires a non-negative count");
                }
                vertices_seen = true;
                vertex_count = static_cast<std::size_t>(n);
                labels.assign(vertex_count, std::string());
                section = Section::Vertices;
            } else if (header == "*edges" || header == "*arcs") {
                if (!vertices_seen) {
                    throw MissingVerticesHeaderError();
                }
                section = header == "*edges" ? Section::Edges : Section::Arcs;
            } else {
                throw MalformedLineError(line.number, "unsupported section '" + std::string(tokens[0]) + "'");
            }
            continue;
        }

        if (section == Section::None) {
            throw MissingVerticesHeaderError();
        }

        if (section == Section::Vertices) {
            const auto tokens = tokenize(body);
            long long id = 0;
            if (!parse_integer(tokens[0], id)) {
                throw MalformedLineError(line.number, "vertex line must start with an integer id");
            }
            check_id(id, line.number);
            auto& slot = labels[static_cast<std::size_t>(id) - 1];
            if (!slot.empty()) {
                throw MalformedLineError(line.number, "vertex " + std::to_string(id) + " redeclared");
            }
            std::string label;
            const std::size_t open = body.find('"');
            if (open != std::string_view::npos) {
                const std::size_t close = body.find('"', open + 1);
                if (close == std::string_view::npos) {
                    throw MalformedLineError(line.number, "unterminated quoted vertex name");
                }
                label = std::string(body.substr(open + 1, close - open - 1));
            }
            if (label.empty()) {
                label = std::to_string(id);
            }
            if (!used_labels.insert(label).second) {
                warnings.push_back("line " + std::to_string(line.number) + ": duplicate vertex name \"" +
                                   label + "\", falling back to id");
                label = std::to_string(id);
            }
            slot = std::move(label);
            continue;
        }

        // Edge or arc line: first two integer tokens are endpoints.
        const auto tokens = tokenize(body);
        long long a = 0;
        long long b = 0;
        if (tokens.size() < 2 || !parse_integer(tokens[0], a) || !parse_integer(tokens[1], b)) {
            throw MalformedLineError(line.number, "expected two integer endpoints");
        }
        check_id(a, line.number);
        check_id(b, line.number);
        if (a == b) {
            const auto& slot = labels[static_cast<std::size_t>(a) - 1];
            throw SelfLoopError(slot.empty() ? std::to_string(a) : slot, line.number);
        }
        if (section == Section::Arcs && !arcs_warned) {
            warnings.push_back("line " + std::to_string(line.number) +
                               ": arcs treated as undirected edges");
            arcs_warned = true;
        }
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        if (!seen.insert(key).second) {
            warnings.push_back("line " + std::to_string(line.number) + ": duplicate edge " +
                               std::to_string(a) + " " + std::to_string(b) + " collapsed");
            continue;
        }
        edges.emplace_back(a, b);
    }

    if (!vertices_seen) {
        throw MissingVerticesHeaderError();
    }

    // Undeclared vertices fall back to their id as label.
    std::vector<std::string> node_labels;
    node_labels.reserve(vertex_count);
    for (std::size_t i = 0; i < vertex_count; ++i) {
        node_labels.push_back(labels[i].empty() ? std::to_string(i + 1) : labels[i]);
    }
    std::vector<std::pair<std::string, std::string>> edge_labels;
    edge_labels.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        edge_labels.emplace_back(node_labels[static_cast<std::size_t>(a) - 1],
                                 node_labels[static_cast<std::size_t>(b) - 1]);
    }

    ParseReport report{build_graph(node_labels, edge_labels), std::move(warnings), lines.size()};
    return report;
}

std::string write_edge_list(const Graph& g) {
    std::string out;
    const auto& labels = g.nodes();
    for (const auto& [u, v] : g.edges()) {
        out += labels[u];
        out += ' ';
        out += labels[v];
        out += '\n';
    }
    return out;
}

std::string write_sweep_csv(const SweepResult& r) {
    std::string out = "q,entropy\n";
    for (const auto& point : r.points) {
        append_shortest(out, point.q);
        out += ',';
        append_shortest(out, point.value);
        out += '\n';
    }
    return out;
}

std::string write_sweep_json(const SweepResult& r) {
    nlohmann::ordered_json doc;
    doc["source"] = {
        {"input", r.source.input},   {"nodes", r.source.nodes},   {"edges", r.source.edges},
        {"q_min", r.source.q_min},   {"q_max", r.source.q_max},   {"q_step", r.source.q_step},
        {"k", r.source.k},
    };
    doc["points"] = nlohmann::ordered_json::array();
    for (const auto& point : r.points) {
        doc["points"].push_back({{"q", point.q}, {"entropy", point.value}});
    }
    return doc.dump(2);
}

}  // namespace netent
