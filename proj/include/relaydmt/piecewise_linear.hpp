#pragma once

#include <string>
#include <vector>

namespace relaydmt {

struct CurveVertex {
    double r = 0.0;  // multiplexing gain
    double d = 0.0;  // diversity gain

    friend bool operator==(const CurveVertex&, const CurveVertex&) = default;
};

/// A diversity-multiplexing tradeoff curve d(r) stored as its exact vertex
/// list. Vertices are strictly increasing in r, start at r = 0, d is
/// nonincreasing and reaches 0 at the last vertex (r_max). Evaluation
/// between vertices is linear interpolation; beyond r_max it is 0.
class PiecewiseLinearCurve {
  public:
    explicit PiecewiseLinearCurve(std::vector<CurveVertex> vertices);

    /// d(r). Exact at stored vertices. Throws std::invalid_argument for r < 0.
    double operator()(double r) const;

    double r_max() const { return vertices_.back().r; }

    /// Smallest r with d(r) = 0.
    double zero_crossing() const;

    const std::vector<CurveVertex>& vertices() const { return vertices_; }

    bool operator==(const PiecewiseLinearCurve& other) const {
        return vertices_ == other.vertices_;
    }

    /// CSV with header "r,d", one row per vertex, LF line endings.
    std::string to_csv() const;

    /// JSON text of the form {"vertices":[[r,d],...]}.
    std::string to_json() const;

    static PiecewiseLinearCurve from_json(const std::string& text);

  private:
    std::vector<CurveVertex> vertices_;
};

/// First r at which a sampled curve reaches zero (linear interpolation
/// between samples). Returns NaN when d stays positive over the samples.
double first_zero_crossing(const std::vector<double>& r,
                           const std::vector<double>& d);

}  // namespace relaydmt
