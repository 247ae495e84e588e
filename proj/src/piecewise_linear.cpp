#include "relaydmt/piecewise_linear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "relaydmt/text_io.hpp"
#include <json.hpp>

namespace relaydmt {

namespace {
constexpr double kSnapEps = 1e-12;
}

PiecewiseLinearCurve::PiecewiseLinearCurve(std::vector<CurveVertex> vertices)
    : vertices_(std::move(vertices)) {
    if (vertices_.empty())
        throw std::invalid_argument("PiecewiseLinearCurve: no vertices");
    if (std::abs(vertices_.front().r) > kSnapEps)
        throw std::invalid_argument("PiecewiseLinearCurve: first vertex must be at r = 0");
    vertices_.front().r = 0.0;

    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        auto& v = vertices_[i];
        if (!std::isfinite(v.r) || !std::isfinite(v.d))
            throw std::invalid_argument("PiecewiseLinearCurve: non-finite vertex");
        if (v.d < -kSnapEps)
            throw std::invalid_argument("PiecewiseLinearCurve: negative diversity");
        v.d = std::max(v.d, 0.0);
        if (i > 0) {
            if (v.r <= vertices_[i - 1].r)
                throw std::invalid_argument("PiecewiseLinearCurve: r must be strictly increasing");
            if (v.d > vertices_[i - 1].d + kSnapEps)
                throw std::invalid_argument("PiecewiseLinearCurve: d must be nonincreasing");
            v.d = std::min(v.d, vertices_[i - 1].d);
        }
    }
    if (vertices_.back().d > kSnapEps)
        throw std::invalid_argument("PiecewiseLinearCurve: d must reach 0 at r_max");
    vertices_.back().d = 0.0;
}

double PiecewiseLinearCurve::operator()(double r) const {
    if (!(r >= 0.0))
        throw std::invalid_argument("PiecewiseLinearCurve: r must be nonnegative");
    if (r >= vertices_.back().r) return r == vertices_.back().r ? vertices_.back().d : 0.0;

    auto it = std::upper_bound(vertices_.begin(), vertices_.end(), r,
                               [](double x, const CurveVertex& v) { return x < v.r; });
    const CurveVertex& hi = *it;
    const CurveVertex& lo = *std::prev(it);
    if (r == lo.r) return lo.d;
    const double t = (r - lo.r) / (hi.r - lo.r);
    return lo.d + t * (hi.d - lo.d);
}

double PiecewiseLinearCurve::zero_crossing() const {
    for (const auto& v : vertices_)
        if (v.d == 0.0) return v.r;
    return vertices_.back().r;  // unreachable: last d is 0 by construction
}

std::string PiecewiseLinearCurve::to_csv() const {
    io::CsvWriter csv({"r", "d"});
    for (const auto& v : vertices_) {
        csv.cell(v.r).cell(v.d);
        csv.end_row();
    }
    return csv.str();
}

std::string PiecewiseLinearCurve::to_json() const {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : vertices_) j["vertices"].push_back({v.r, v.d});
    return j.dump();
}

PiecewiseLinearCurve PiecewiseLinearCurve::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    std::vector<CurveVertex> verts;
    for (const auto& pair : j.at("vertices"))
        verts.push_back({pair.at(0).get<double>(), pair.at(1).get<double>()});
    return PiecewiseLinearCurve(std::move(verts));
}

double first_zero_crossing(const std::vector<double>& r, const std::vector<double>& d) {
    if (r.size() != d.size() || r.empty())
        throw std::invalid_argument("first_zero_crossing: mismatched or empty samples");
    constexpr double tol = 1e-12;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] <= tol) {
            if (i == 0) return r[0];
            const double drop = d[i - 1] - d[i];
            if (drop <= 0.0) return r[i];
            return r[i - 1] + (r[i] - r[i - 1]) * d[i - 1] / drop;
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace relaydmt
