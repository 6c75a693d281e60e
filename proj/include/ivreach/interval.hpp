#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ivreach {

// Axis-aligned box [lower, upper] in R^dim with closed bounds.
// Construction validates: matching lengths, dim >= 1, all entries finite,
// lower[i] <= upper[i]. Degenerate (zero-width) components are allowed.
class IntervalVector {
public:
    IntervalVector(std::vector<double> lower, std::vector<double> upper);

    std::size_t dim() const { return lower_.size(); }
    const std::vector<double>& lower() const { return lower_; }
    const std::vector<double>& upper() const { return upper_; }
    double lower(std::size_t i) const { return lower_[i]; }
    double upper(std::size_t i) const { return upper_[i]; }

    bool operator==(const IntervalVector& o) const = default;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

// Finite list of points, all of the same dimension.
struct PointSet {
    std::vector<std::vector<double>> points;
};

std::vector<double> center(const IntervalVector& box);
std::vector<double> half_width(const IntervalVector& box);

// Box with the given center and componentwise radius; radius[i] < 0 throws.
IntervalVector from_center_radius(std::span<const double> center,
                                  std::span<const double> radius);

// Closed-box membership: lower[i] <= x[i] <= upper[i] for every component.
bool contains(const IntervalVector& box, std::span<const double> x);

// Smallest box containing every point; the set must be non-empty.
IntervalVector hull(const PointSet& points);

// Componentwise a.lower >= b.lower and a.upper <= b.upper.
bool subset_of(const IntervalVector& a, const IntervalVector& b);

// JSON text {"lower":[...],"upper":[...]} with round-trip double precision.
std::string to_json_text(const IntervalVector& box);
IntervalVector interval_from_json_text(const std::string& text);

} // namespace ivreach
