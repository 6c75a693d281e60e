#include "ivreach/interval.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ivreach {

IntervalVector::IntervalVector(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.size() != upper_.size())
        throw std::invalid_argument("interval: lower has " + std::to_string(lower_.size()) +
                                    " components, upper has " + std::to_string(upper_.size()));
    if (lower_.empty())
        throw std::invalid_argument("interval: dimension must be at least 1");
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]))
            throw std::invalid_argument("interval: non-finite bound at component " + std::to_string(i));
        if (lower_[i] > upper_[i])
            throw std::invalid_argument("interval: lower > upper at component " + std::to_string(i));
    }
}

std::vector<double> center(const IntervalVector& box) {
    std::vector<double> c(box.dim());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = 0.5 * (box.upper(i) + box.lower(i));
    return c;
}

std::vector<double> half_width(const IntervalVector& box) {
    std::vector<double> r(box.dim());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = 0.5 * (box.upper(i) - box.lower(i));
    return r;
}

IntervalVector from_center_radius(std::span<const double> center,
                                  std::span<const double> radius) {
    if (center.size() != radius.size())
        throw std::invalid_argument("from_center_radius: center dim " + std::to_string(center.size()) +
                                    " != radius dim " + std::to_string(radius.size()));
    std::vector<double> lo(center.size()), hi(center.size());
    for (std::size_t i = 0; i < center.size(); ++i) {
        if (radius[i] < 0.0)
            throw std::invalid_argument("from_center_radius: negative radius at component " +
                                        std::to_string(i));
        lo[i] = center[i] - radius[i];
        hi[i] = center[i] + radius[i];
    }
    return IntervalVector(std::move(lo), std::move(hi));
}

bool contains(const IntervalVector& box, std::span<const double> x) {
    if (x.size() != box.dim())
        throw std::invalid_argument("contains: point dim " + std::to_string(x.size()) +
                                    " != box dim " + std::to_string(box.dim()));
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < box.lower(i) || x[i] > box.upper(i)) return false;
    return true;
}

IntervalVector hull(const PointSet& points) {
    if (points.points.empty())
        throw std::invalid_argument("hull: point set is empty");
    const std::size_t dim = points.points.front().size();
    std::vector<double> lo(points.points.front());
    std::vector<double> hi(points.points.front());
    for (const auto& p : points.points) {
        if (p.size() != dim)
            throw std::invalid_argument("hull: mixed point dimensions");
        for (std::size_t i = 0; i < dim; ++i) {
            if (p[i] < lo[i]) lo[i] = p[i];
            if (p[i] > hi[i]) hi[i] = p[i];
        }
    }
    return IntervalVector(std::move(lo), std::move(hi));
}

bool subset_of(const IntervalVector& a, const IntervalVector& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("subset_of: dim " + std::to_string(a.dim()) +
                                    " != dim " + std::to_string(b.dim()));
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.lower(i) < b.lower(i) || a.upper(i) > b.upper(i)) return false;
    return true;
}

std::string to_json_text(const IntervalVector& box) {
    nlohmann::json j;
    j["lower"] = box.lower();
    j["upper"] = box.upper();
    return j.dump();
}

IntervalVector interval_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    return IntervalVector(j.at("lower").get<std::vector<double>>(),
                          j.at("upper").get<std::vector<double>>());
}

} // namespace ivreach
