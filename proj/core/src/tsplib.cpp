#include "rkcs/tsplib.hpp"

#include "rkcs/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <string_view>

namespace rkcs {

namespace detail {
void contract_failed(const char* expr, const char* file, int line, const std::string& msg) {
    throw ContractViolation(std::string(file) + ":" + std::to_string(line) + ": contract violated (" +
                            expr + "): " + msg);
}
}  // namespace detail

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        const std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

template <class T>
std::optional<T> parse_number(std::string_view tok) {
    T value{};
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

/// Splits "KEY : VALUE" (colon optional-spaced). Returns nullopt for lines
/// without a colon.
std::optional<std::pair<std::string_view, std::string_view>> split_key(std::string_view line) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    return std::pair{trim(line.substr(0, colon)), trim(line.substr(colon + 1))};
}

/// Section keywords may appear bare or with a trailing colon.
bool is_keyword(std::string_view line, std::string_view keyword) {
    if (line.substr(0, keyword.size()) != keyword) return false;
    const auto rest = trim(line.substr(keyword.size()));
    return rest.empty() || rest == ":";
}

std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

}  // namespace

Length euc2d(const Point& a, const Point& b) noexcept {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return static_cast<Length>(std::sqrt(dx * dx + dy * dy) + 0.5);
}

Instance::Instance(std::string name, std::vector<Point> coords, EdgeWeightType type, std::string comment)
    : name_(std::move(name)), comment_(std::move(comment)), coords_(std::move(coords)), type_(type) {
    if (coords_.size() < 3) {
        throw ValidationError("instance '" + name_ + "' has " + std::to_string(coords_.size()) +
                              " cities; at least 3 are required");
    }
    if (coords_.size() > static_cast<std::size_t>(std::numeric_limits<City>::max())) {
        throw ValidationError("instance '" + name_ + "' is too large");
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!std::isfinite(coords_[i].x) || !std::isfinite(coords_[i].y)) {
            throw ValidationError("instance '" + name_ + "': node " + std::to_string(i + 1) +
                                  " has a non-finite coordinate");
        }
    }

    const std::size_t m = coords_.size();
    matrix_.assign(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const Length d = euc2d(coords_[i], coords_[j]);
            if (d > std::numeric_limits<std::int32_t>::max()) {
                throw ValidationError("instance '" + name_ + "': edge weight overflows 32 bits");
            }
            matrix_[i * m + j] = static_cast<std::int32_t>(d);
            matrix_[j * m + i] = static_cast<std::int32_t>(d);
        }
    }
}

Length Instance::distance(City i, City j) const {
    const auto m = static_cast<City>(coords_.size());
    RKCS_EXPECTS(i >= 0 && i < m && j >= 0 && j < m, "city index out of range");
    return distances()(i, j);
}

Instance parse_instance(std::istream& in) {
    std::string name;
    std::string comment;
    std::optional<std::size_t> dimension;
    std::optional<std::string> edge_weight_type;

    std::vector<std::pair<long long, Point>> nodes;
    bool in_coords = false;

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string_view line = trim(raw);
        if (line.empty()) continue;
        if (is_keyword(line, "EOF")) break;

        if (in_coords) {
            const auto tok = split_ws(line);
            if (tok.size() != 3) {
                throw ParseError("expected 'id x y' in NODE_COORD_SECTION, got '" + std::string(line) + "'",
                                 lineno);
            }
            const auto id = parse_number<long long>(tok[0]);
            const auto x = parse_number<double>(tok[1]);
            const auto y = parse_number<double>(tok[2]);
            if (!id || !x || !y) {
                throw ParseError("bad node coordinate line '" + std::string(line) + "'", lineno);
            }
            nodes.emplace_back(*id, Point{*x, *y});
            continue;
        }

        if (is_keyword(line, "NODE_COORD_SECTION")) {
            if (!edge_weight_type) {
                throw UnsupportedFormatError("missing EDGE_WEIGHT_TYPE; only EUC_2D is supported");
            }
            if (!dimension) throw ParseError("NODE_COORD_SECTION before DIMENSION", lineno);
            in_coords = true;
            continue;
        }

        const auto kv = split_key(line);
        if (!kv) throw ParseError("malformed header line '" + std::string(line) + "'", lineno);
        const auto [key, value] = *kv;
        if (key == "NAME") {
            name = value;
        } else if (key == "COMMENT") {
            if (!comment.empty()) comment += ' ';
            comment += value;
        } else if (key == "TYPE") {
            if (value != "TSP") {
                throw UnsupportedFormatError("unsupported problem TYPE '" + std::string(value) + "'");
            }
        } else if (key == "DIMENSION") {
            const auto d = parse_number<long long>(value);
            if (!d || *d <= 0) throw ParseError("DIMENSION must be a positive integer", lineno);
            dimension = static_cast<std::size_t>(*d);
        } else if (key == "EDGE_WEIGHT_TYPE") {
            if (value != "EUC_2D") {
                throw UnsupportedFormatError("unsupported EDGE_WEIGHT_TYPE '" + std::string(value) +
                                             "'; only EUC_2D is supported");
            }
            edge_weight_type = std::string(value);
        } else if (key.empty()) {
            throw ParseError("malformed header line '" + std::string(line) + "'", lineno);
        }
        // Other keywords (CAPACITY, DISPLAY_DATA_TYPE, ...) carry nothing we need.
    }

    if (!in_coords) throw ParseError("missing NODE_COORD_SECTION");
    if (nodes.size() != *dimension) {
        throw ValidationError("DIMENSION is " + std::to_string(*dimension) + " but " +
                              std::to_string(nodes.size()) + " coordinates were given");
    }

    std::vector<Point> coords(nodes.size());
    std::vector<bool> seen(nodes.size(), false);
    for (const auto& [id, p] : nodes) {
        if (id < 1 || static_cast<std::size_t>(id) > nodes.size()) {
            throw ValidationError("node id " + std::to_string(id) + " outside 1.." + std::to_string(nodes.size()));
        }
        const auto idx = static_cast<std::size_t>(id - 1);
        if (seen[idx]) throw ValidationError("duplicate node id " + std::to_string(id));
        seen[idx] = true;
        coords[idx] = p;
    }
    return Instance(std::move(name), std::move(coords), EdgeWeightType::Euc2d, std::move(comment));
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    return parse_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
    out << "NAME : " << inst.name() << '\n';
    if (!inst.comment().empty()) out << "COMMENT : " << inst.comment() << '\n';
    out << "TYPE : TSP\n"
        << "DIMENSION : " << inst.dimension() << '\n'
        << "EDGE_WEIGHT_TYPE : EUC_2D\n"
        << "NODE_COORD_SECTION\n";
    const auto coords = inst.coords();
    for (std::size_t i = 0; i < coords.size(); ++i) {
        out << (i + 1) << ' ' << format_double(coords[i].x) << ' ' << format_double(coords[i].y) << '\n';
    }
    out << "EOF\n";
}

TourFile parse_tour(std::istream& in) {
    TourFile tour;
    bool in_section = false;
    bool terminated = false;

    std::string raw;
    std::size_t lineno = 0;
    while (!terminated && std::getline(in, raw)) {
        ++lineno;
        const std::string_view line = trim(raw);
        if (line.empty()) continue;
        if (is_keyword(line, "EOF")) break;

        if (in_section) {
            for (const auto tok : split_ws(line)) {
                const auto id = parse_number<long long>(tok);
                if (!id) throw ParseError("bad node id '" + std::string(tok) + "' in TOUR_SECTION", lineno);
                if (*id == -1) {
                    terminated = true;
                    break;
                }
                if (*id < 1 || *id > std::numeric_limits<City>::max()) {
                    throw ParseError("node id " + std::to_string(*id) + " out of range", lineno);
                }
                tour.order.push_back(static_cast<City>(*id - 1));
            }
            continue;
        }

        if (is_keyword(line, "TOUR_SECTION")) {
            in_section = true;
            continue;
        }
        const auto kv = split_key(line);
        if (!kv || kv->first.empty()) {
            throw ParseError("malformed header line '" + std::string(line) + "'", lineno);
        }
        const auto [key, value] = *kv;
        if (key == "NAME") {
            tour.name = value;
        } else if (key == "TYPE") {
            if (value != "TOUR") throw ParseError("expected TYPE : TOUR", lineno);
        } else if (key == "DIMENSION") {
            const auto d = parse_number<long long>(value);
            if (!d || *d <= 0) throw ParseError("DIMENSION must be a positive integer", lineno);
            tour.declared_dimension = static_cast<std::size_t>(*d);
        }
    }
    if (!in_section) throw ParseError("missing TOUR_SECTION");
    if (tour.order.empty()) throw ParseError("empty TOUR_SECTION");
    return tour;
}

TourFile load_tour(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    return parse_tour(in);
}

void write_tour(std::ostream& out, const std::string& name, std::span<const City> order) {
    out << "NAME : " << name << '\n'
        << "TYPE : TOUR\n"
        << "DIMENSION : " << order.size() << '\n'
        << "TOUR_SECTION\n";
    for (const City c : order) out << (c + 1) << '\n';
    out << "-1\nEOF\n";
}

}  // namespace rkcs
