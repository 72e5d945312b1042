#include "boxfactor/lgr.hpp"

#include "boxfactor/error.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <vector>

namespace boxfactor {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::size_t parse_id(std::string_view field, std::size_t line) {
    std::size_t value = 0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw Error(ErrorCode::SyntaxError, "bad number '" + std::string(field) + "'", line);
    }
    return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto cut = text.find('\n');
        const auto line = text.substr(0, cut);
        text = cut == std::string_view::npos ? std::string_view{} : text.substr(cut + 1);
        const auto fields = split_fields(line);
        if (fields.empty() || fields.front().front() == '#') {
            continue;
        }
        fn(fields, line_no);
    }
}

} // namespace

Graph parse_lgr(std::string_view text) {
    constexpr std::size_t max_vertices = std::size_t{1} << 31;
    std::optional<std::size_t> n;
    std::set<Edge> edges;
    std::set<Vertex> loops;
    for_each_line(text, [&](const std::vector<std::string_view>& f, std::size_t line) {
        auto vertex = [&](std::string_view field) {
            const auto v = parse_id(field, line);
            if (v >= *n) {
                throw Error(ErrorCode::IdOutOfRange, "vertex " + std::to_string(v) + " with n=" + std::to_string(*n),
                            line);
            }
            return static_cast<Vertex>(v);
        };
        if (!n) {
            if (f[0] != "n" || f.size() != 2) {
                throw Error(ErrorCode::SyntaxError, "expected 'n <count>'", line);
            }
            n = parse_id(f[1], line);
            if (*n > max_vertices) {
                throw Error(ErrorCode::SyntaxError, "vertex count too large", line);
            }
            return;
        }
        if (f[0] == "e" && f.size() == 3) {
            const auto u = vertex(f[1]);
            const auto v = vertex(f[2]);
            if (u == v) {
                throw Error(ErrorCode::SelfEdgeViaE, "use 'l " + std::to_string(u) + "' for a loop", line);
            }
            if (!edges.emplace(std::min(u, v), std::max(u, v)).second) {
                throw Error(ErrorCode::DuplicateRecord, "edge " + std::to_string(u) + " " + std::to_string(v), line);
            }
        } else if (f[0] == "l" && f.size() == 2) {
            const auto v = vertex(f[1]);
            if (!loops.insert(v).second) {
                throw Error(ErrorCode::DuplicateRecord, "loop " + std::to_string(v), line);
            }
        } else {
            throw Error(ErrorCode::SyntaxError, "unrecognised record '" + std::string(f[0]) + "'", line);
        }
    });
    if (!n) {
        throw Error(ErrorCode::SyntaxError, "missing 'n <count>' header", 1);
    }
    const std::vector<Edge> edge_list(edges.begin(), edges.end());
    const std::vector<Vertex> loop_list(loops.begin(), loops.end());
    return make_graph(*n, edge_list, loop_list);
}

std::string serialize_lgr(const Graph& g) {
    std::string out = "n " + std::to_string(g.n()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    for (Vertex v : g.loops()) {
        out += "l " + std::to_string(v) + "\n";
    }
    return out;
}

std::string serialize_coords(const Coordinatization& c) {
    std::string out;
    for (Vertex v = 0; v < c.n(); ++v) {
        out += std::to_string(v);
        for (auto x : c.coords(v)) {
            out += "\t" + std::to_string(x);
        }
        out += "\n";
    }
    return out;
}

std::optional<Coordinatization> parse_coords(std::string_view text, std::size_t n,
                                             const std::vector<std::size_t>& sizes) {
    const std::size_t k = sizes.size();
    std::vector<std::size_t> coords(n * k, 0);
    std::vector<bool> seen(n, false);
    bool valid = true;
    for_each_line(text, [&](const std::vector<std::string_view>& f, std::size_t line) {
        std::vector<std::size_t> values;
        for (auto field : f) {
            values.push_back(parse_id(field, line));
        }
        if (values.size() != k + 1 || values[0] >= n || seen[values[0]]) {
            valid = false;
            return;
        }
        seen[values[0]] = true;
        std::copy(values.begin() + 1, values.end(), coords.begin() + values[0] * k);
    });
    if (!valid || !std::all_of(seen.begin(), seen.end(), [](bool s) { return s; })) {
        return std::nullopt;
    }
    return Coordinatization::from_coords(sizes, std::move(coords));
}

} // namespace boxfactor
