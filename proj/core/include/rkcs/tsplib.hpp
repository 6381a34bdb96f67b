#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace rkcs {

/// Internal city index, 0-based. TSPLIB node id = City + 1.
using City = std::int32_t;

/// Tour lengths and edge weights. EUC_2D weights are integral.
using Length = std::int64_t;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

enum class EdgeWeightType { Euc2d };

/// Rounded Euclidean distance, TSPLIB EUC_2D convention: nint(sqrt(dx^2 + dy^2)).
[[nodiscard]] Length euc2d(const Point& a, const Point& b) noexcept;

/// Unchecked row-major view of a precomputed distance matrix. Used by the
/// hot loops; callers are responsible for index validity.
class DistanceView {
public:
    DistanceView(const std::int32_t* data, std::size_t size) noexcept : data_(data), size_(size) {}

    [[nodiscard]] Length operator()(City i, City j) const noexcept {
        return data_[static_cast<std::size_t>(i) * size_ + static_cast<std::size_t>(j)];
    }
    [[nodiscard]] const std::int32_t* row(City i) const noexcept {
        return data_ + static_cast<std::size_t>(i) * size_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return size_; }

private:
    const std::int32_t* data_;
    std::size_t size_;
};

/// A symmetric Euclidean TSP instance. Immutable once built, so a single
/// Instance can be shared read-only across concurrent solver runs.
///
/// Node ids in TSPLIB files are 1-based; internally city `i` is the node with
/// id `i + 1`. The mapping is fixed and never reordered.
class Instance {
public:
    /// Validates and builds an instance. Throws ValidationError when there are
    /// fewer than 3 cities or a coordinate is not finite.
    Instance(std::string name, std::vector<Point> coords,
             EdgeWeightType type = EdgeWeightType::Euc2d, std::string comment = {});

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const std::string& comment() const noexcept { return comment_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return coords_.size(); }
    [[nodiscard]] std::span<const Point> coords() const noexcept { return coords_; }
    [[nodiscard]] EdgeWeightType edge_weight_type() const noexcept { return type_; }

    /// Checked distance lookup; throws ContractViolation on a bad index.
    [[nodiscard]] Length distance(City i, City j) const;

    [[nodiscard]] DistanceView distances() const noexcept { return {matrix_.data(), coords_.size()}; }

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.name_ == b.name_ && a.comment_ == b.comment_ && a.type_ == b.type_ &&
               a.coords_ == b.coords_;
    }

private:
    std::string name_;
    std::string comment_;
    std::vector<Point> coords_;
    EdgeWeightType type_;
    std::vector<std::int32_t> matrix_;
};

/// Parses a TSPLIB .tsp file (EUC_2D only).
///
/// Errors: ParseError for malformed header or coordinate lines (message names
/// the line), UnsupportedFormatError for a TYPE other than TSP or an
/// EDGE_WEIGHT_TYPE other than EUC_2D, ValidationError when DIMENSION does not
/// match the coordinate section.
[[nodiscard]] Instance parse_instance(std::istream& in);
[[nodiscard]] Instance load_instance(const std::filesystem::path& path);

/// Writes the instance back in TSPLIB form. Coordinates use the shortest
/// decimal representation that parses back to the same double.
void write_instance(std::ostream& out, const Instance& inst);

/// Contents of a TSPLIB .tour file. Cities are 0-based; validity as a
/// permutation is not checked here.
struct TourFile {
    std::string name;
    std::size_t declared_dimension = 0;  // 0 when DIMENSION is absent
    std::vector<City> order;
};

[[nodiscard]] TourFile parse_tour(std::istream& in);
[[nodiscard]] TourFile load_tour(const std::filesystem::path& path);

/// Writes a TSPLIB .tour file with 1-based ids and a -1 terminator.
void write_tour(std::ostream& out, const std::string& name, std::span<const City> order);

}  // namespace rkcs
