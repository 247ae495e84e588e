#include "relaydmt/dmt_curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace relaydmt {

void AntennaSpec::validate() const {
    if (m < 1 || n < 1 || num_users < 1)
        throw std::invalid_argument("AntennaSpec: all fields must be >= 1");
}

PiecewiseLinearCurve ppc_dmt(int m, int n) {
    AntennaSpec{m, n, 1}.validate();
    const int kmax = std::min(m, n);
    std::vector<CurveVertex> verts;
    verts.reserve(kmax + 1);
    for (int k = 0; k <= kmax; ++k)
        verts.push_back({static_cast<double>(k), static_cast<double>((m - k) * (n - k))});
    return PiecewiseLinearCurve(std::move(verts));
}

PiecewiseLinearCurve mac_sym_dmt(int users, int m, int n) {
    AntennaSpec{m, n, users}.validate();
    const auto single = ppc_dmt(m, n);
    const auto pooled = ppc_dmt(users * m, n);
    const double r_split = std::min(static_cast<double>(m), n / (users + 1.0));
    const int j_end = std::min(users * m, n);  // users * r_end, exact
    const double r_end = static_cast<double>(j_end) / users;

    std::vector<CurveVertex> verts;
    for (const auto& v : single.vertices()) {
        if (v.r >= r_split) break;
        verts.push_back(v);
    }
    verts.push_back({r_split, single(r_split)});
    // pooled-curve vertices sit at users*r = integer
    for (int j = static_cast<int>(std::ceil(r_split * users)); j < j_end; ++j) {
        const double r = static_cast<double>(j) / users;
        if (r <= r_split) continue;
        verts.push_back({r, pooled(static_cast<double>(j))});
    }
    if (r_end > verts.back().r + 1e-12)
        verts.push_back({r_end, 0.0});
    else
        verts.back().d = 0.0;
    return PiecewiseLinearCurve(std::move(verts));
}

PiecewiseLinearCurve bc_sym_dmt(int users, int m, int n) {
    // MAC-BC duality: the symmetric tradeoffs coincide.
    return mac_sym_dmt(users, m, n);
}

}  // namespace relaydmt
