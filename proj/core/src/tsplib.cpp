#include "aco/tsplib.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "aco/format.hpp"

namespace aco {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        const std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        if (i > start) {
            out.push_back(s.substr(start, i - start));
        }
    }
    return out;
}

std::optional<double> to_number(std::string_view tok) {
    if (!tok.empty() && tok.front() == '+') {
        tok.remove_prefix(1);
    }
    double v = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
        return std::nullopt;
    }
    return v;
}

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

// Section keywords may carry a trailing colon in the wild ("NODE_COORD_SECTION :").
std::string section_keyword(std::string_view line) {
    auto s = trim(line);
    if (!s.empty() && s.back() == ':') {
        s.remove_suffix(1);
    }
    return upper(trim(s));
}

enum class Mode { Header, Coords, Weights, Display };

}  // namespace

Instance parse_tsplib(std::string_view text) {
    std::string name = "unnamed";
    std::optional<std::size_t> dimension;
    std::string edge_weight_type;
    std::string edge_weight_format;

    std::vector<Coord> coords;
    std::vector<bool> seen;
    std::size_t coords_read = 0;
    bool have_coord_section = false;

    std::vector<double> weights;
    bool have_weight_section = false;

    std::size_t display_remaining = 0;
    std::size_t section_start_line = 0;

    Mode mode = Mode::Header;
    std::size_t line_no = 0;
    std::size_t pos = 0;

    auto require_dimension = [&](std::size_t at) -> std::size_t {
        if (!dimension) {
            throw ParseError(at, "section appears before DIMENSION");
        }
        return *dimension;
    };

    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        const auto line = trim(raw);
        if (line.empty()) {
            continue;
        }
        const std::string keyword = section_keyword(line);
        if (keyword == "EOF") {
            break;
        }

        if (mode == Mode::Coords) {
            const std::size_t n = *dimension;
            if (coords_read == n) {
                mode = Mode::Header;
            } else {
                const auto toks = split_ws(line);
                if (toks.size() != 3) {
                    if (!to_number(toks.front())) {
                        throw ParseError(line_no, "expected " + std::to_string(n) + " coordinates, found " +
                                                      std::to_string(coords_read));
                    }
                    throw ParseError(line_no, "coordinate line needs 3 fields");
                }
                const auto id = to_number(toks[0]);
                const auto x = to_number(toks[1]);
                const auto y = to_number(toks[2]);
                if (!id) {
                    throw ParseError(line_no, "non-numeric node id '" + std::string(toks[0]) + "'");
                }
                if (!x || !y) {
                    throw ParseError(line_no, "non-numeric coordinate");
                }
                if (*id < 1 || *id > static_cast<double>(n) || *id != static_cast<double>(static_cast<std::size_t>(*id))) {
                    throw ParseError(line_no, "node id out of range 1.." + std::to_string(n));
                }
                const auto idx = static_cast<std::size_t>(*id) - 1;
                if (seen[idx]) {
                    throw ParseError(line_no, "duplicate node id " + std::to_string(idx + 1));
                }
                seen[idx] = true;
                coords[idx] = {*x, *y};
                ++coords_read;
                continue;
            }
        }

        if (mode == Mode::Weights) {
            const std::size_t n = *dimension;
            if (weights.size() == n * n) {
                mode = Mode::Header;
            } else {
                for (const auto tok : split_ws(line)) {
                    const auto v = to_number(tok);
                    if (!v) {
                        if (std::isalpha(static_cast<unsigned char>(tok.front()))) {
                            throw ParseError(line_no, "expected " + std::to_string(n * n) +
                                                          " matrix entries, found " +
                                                          std::to_string(weights.size()));
                        }
                        throw ParseError(line_no, "non-numeric edge weight '" + std::string(tok) + "'");
                    }
                    if (weights.size() == n * n) {
                        throw ParseError(line_no, "more than " + std::to_string(n * n) + " matrix entries");
                    }
                    weights.push_back(*v);
                }
                continue;
            }
        }

        if (mode == Mode::Display) {
            if (display_remaining > 0) {
                --display_remaining;
                continue;
            }
            mode = Mode::Header;
        }

        if (keyword == "NODE_COORD_SECTION") {
            const std::size_t n = require_dimension(line_no);
            if (edge_weight_type != "EUC_2D") {
                throw ParseError(line_no, "NODE_COORD_SECTION requires EDGE_WEIGHT_TYPE EUC_2D");
            }
            coords.assign(n, Coord{});
            seen.assign(n, false);
            have_coord_section = true;
            section_start_line = line_no;
            mode = Mode::Coords;
            continue;
        }
        if (keyword == "EDGE_WEIGHT_SECTION") {
            const std::size_t n = require_dimension(line_no);
            if (edge_weight_type != "EXPLICIT") {
                throw ParseError(line_no, "EDGE_WEIGHT_SECTION requires EDGE_WEIGHT_TYPE EXPLICIT");
            }
            if (edge_weight_format != "FULL_MATRIX") {
                throw ParseError(line_no, "unsupported EDGE_WEIGHT_FORMAT '" + edge_weight_format + "'");
            }
            weights.reserve(n * n);
            have_weight_section = true;
            section_start_line = line_no;
            mode = Mode::Weights;
            continue;
        }
        if (keyword == "DISPLAY_DATA_SECTION") {
            display_remaining = require_dimension(line_no);
            mode = Mode::Display;
            continue;
        }

        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError(line_no, "malformed header line '" + std::string(line) + "'");
        }
        const std::string key = upper(trim(line.substr(0, colon)));
        const auto value = trim(line.substr(colon + 1));

        if (key == "NAME") {
            name = std::string(value);
        } else if (key == "COMMENT") {
            // ignored
        } else if (key == "TYPE") {
            if (upper(value) != "TSP") {
                throw ParseError(line_no, "unsupported TYPE '" + std::string(value) + "'");
            }
        } else if (key == "DIMENSION") {
            const auto v = to_number(value);
            if (!v || *v < 2 || *v != static_cast<double>(static_cast<std::size_t>(*v))) {
                throw ParseError(line_no, "invalid DIMENSION '" + std::string(value) + "'");
            }
            dimension = static_cast<std::size_t>(*v);
        } else if (key == "EDGE_WEIGHT_TYPE") {
            edge_weight_type = upper(value);
            if (edge_weight_type != "EUC_2D" && edge_weight_type != "EXPLICIT") {
                throw ParseError(line_no, "unsupported EDGE_WEIGHT_TYPE '" + std::string(value) + "'");
            }
        } else if (key == "EDGE_WEIGHT_FORMAT") {
            edge_weight_format = upper(value);
            if (edge_weight_format != "FULL_MATRIX") {
                throw ParseError(line_no, "unsupported EDGE_WEIGHT_FORMAT '" + std::string(value) + "'");
            }
        } else if (key == "NODE_COORD_TYPE" || key == "DISPLAY_DATA_TYPE") {
            // informational only
        } else {
            throw ParseError(line_no, "unknown keyword '" + key + "'");
        }
    }

    if (!dimension) {
        throw ParseError(0, "missing DIMENSION");
    }
    if (edge_weight_type.empty()) {
        throw ParseError(0, "missing EDGE_WEIGHT_TYPE");
    }
    const std::size_t n = *dimension;

    if (edge_weight_type == "EUC_2D") {
        if (!have_coord_section) {
            throw ParseError(0, "missing NODE_COORD_SECTION");
        }
        if (coords_read != n) {
            throw ParseError(section_start_line, "DIMENSION is " + std::to_string(n) + " but " +
                                                     std::to_string(coords_read) + " coordinates were given");
        }
        return Instance::from_coords(std::move(name), std::move(coords));
    }

    if (!have_weight_section) {
        throw ParseError(0, "missing EDGE_WEIGHT_SECTION");
    }
    if (weights.size() != n * n) {
        throw ParseError(section_start_line, "DIMENSION is " + std::to_string(n) + " but " +
                                                 std::to_string(weights.size()) + " matrix entries were given");
    }
    try {
        return Instance::from_matrix(std::move(name), std::move(weights), n);
    } catch (const std::invalid_argument& e) {
        throw ParseError(section_start_line, e.what());
    }
}

Instance load_tsplib(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_tsplib(ss.str());
}

std::string write_tsplib(const Instance& inst, std::string_view comment) {
    std::ostringstream out;
    out << "NAME: " << inst.name() << '\n';
    out << "TYPE: TSP\n";
    if (!comment.empty()) {
        out << "COMMENT: " << comment << '\n';
    }
    out << "DIMENSION: " << inst.size() << '\n';
    if (inst.weight_kind() == WeightKind::Euc2D && inst.coords()) {
        out << "EDGE_WEIGHT_TYPE: EUC_2D\n";
        out << "NODE_COORD_SECTION\n";
        const auto& cs = *inst.coords();
        for (std::size_t i = 0; i < cs.size(); ++i) {
            out << (i + 1) << ' ' << format_double(cs[i].x) << ' ' << format_double(cs[i].y) << '\n';
        }
    } else {
        out << "EDGE_WEIGHT_TYPE: EXPLICIT\n";
        out << "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n";
        out << "EDGE_WEIGHT_SECTION\n";
        for (Node i = 0; i < inst.size(); ++i) {
            for (Node j = 0; j < inst.size(); ++j) {
                out << (j ? " " : "") << format_double(inst.weight(i, j));
            }
            out << '\n';
        }
    }
    out << "EOF\n";
    return out.str();
}

}  // namespace aco
