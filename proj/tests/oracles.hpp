// oracles.hpp — Independent brute-force references used only by the test
// suites. These deliberately avoid the integer-arithmetic construction and
// the Bloch assembly used by the library.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <vector>

#include "twistlat/geometry.hpp"

namespace oracles {

using twistlat::Vec2;

inline Eigen::Matrix2d rotation(double theta) {
    Eigen::Matrix2d r;
    r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return r;
}

// Counts distinct wrapped sites of one layer by enumerating lattice points
// in a box and deduplicating fractional coordinates in floating point.
inline int brute_force_layer_count(const twistlat::MoireCell& cell, twistlat::Layer layer,
                                   int window = 40) {
    Eigen::Matrix2d tmat;
    tmat.col(0) = cell.T1;
    tmat.col(1) = cell.T2;
    const Eigen::Matrix2d tinv = tmat.inverse();
    const Eigen::Matrix2d rot =
        layer == twistlat::Layer::a ? Eigen::Matrix2d::Identity() : rotation(cell.angle.theta);

    std::vector<Vec2> basis;
    Eigen::Matrix2d lat = Eigen::Matrix2d::Identity();
    if (cell.angle.kind == twistlat::LatticeKind::square) {
        basis = {Vec2(0, 0)};
    } else {
        lat.col(0) = Vec2(1.0, 0.0);
        lat.col(1) = Vec2(0.5, std::sqrt(3.0) / 2.0);
        basis = {Vec2(0, 0), (lat.col(0) + lat.col(1)) / 3.0};
    }

    std::map<std::pair<long long, long long>, int> seen;
    for (int p = -window; p <= window; ++p) {
        for (int q = -window; q <= window; ++q) {
            for (const Vec2& b : basis) {
                Vec2 pos = rot * (lat * Vec2(p, q) + b);
                Vec2 f = tinv * pos;
                f.x() -= std::floor(f.x());
                f.y() -= std::floor(f.y());
                auto key = std::make_pair(std::llround(f.x() * 1e7), std::llround(f.y() * 1e7));
                // snap wrap-around keys
                const long long period = 10000000LL;
                key.first %= period;
                key.second %= period;
                seen[key] = 1;
            }
        }
    }
    return static_cast<int>(seen.size());
}

// Counts a-b site pairs closer than tol under the periodic minimal image.
inline int brute_force_coincidences(const twistlat::MoireCell& cell, double tol = 1e-9) {
    int count = 0;
    const int per_layer = cell.sites_per_layer();
    for (int ia = 0; ia < per_layer; ++ia) {
        for (int ib = per_layer; ib < cell.n_sites(); ++ib) {
            double best = 1e300;
            for (int s1 = -1; s1 <= 1; ++s1)
                for (int s2 = -1; s2 <= 1; ++s2)
                    best = std::min(best, (cell.sites[ib].position + s1 * cell.T1 +
                                           s2 * cell.T2 - cell.sites[ia].position)
                                              .norm());
            if (best < tol) ++count;
        }
    }
    return count;
}

// Monolayer momenta folding onto Moiré momentum k: k + i B1 + j B2,
// deduplicated modulo the monolayer reciprocal lattice.
inline std::vector<Vec2> folded_momenta(const twistlat::MoireCell& cell, Vec2 k) {
    Eigen::Matrix2d recip;
    if (cell.angle.kind == twistlat::LatticeKind::square) {
        recip << 2 * std::numbers::pi, 0, 0, 2 * std::numbers::pi;
    } else {
        // b1 = 2 pi (1, -1/sqrt(3)), b2 = 2 pi (0, 2/sqrt(3))
        recip << 2 * std::numbers::pi, 0, -2 * std::numbers::pi / std::sqrt(3.0),
            4 * std::numbers::pi / std::sqrt(3.0);
    }
    const Eigen::Matrix2d rinv = recip.inverse();
    std::vector<Vec2> out;
    const int w = 30;
    for (int i = -w; i <= w; ++i) {
        for (int j = -w; j <= w; ++j) {
            Vec2 q = k + double(i) * cell.B1 + double(j) * cell.B2;
            Vec2 f = rinv * q;
            f.x() -= std::floor(f.x() + 0.5);
            f.y() -= std::floor(f.y() + 0.5);
            Vec2 qr = recip * f;
            bool dup = false;
            for (const Vec2& o : out)
                if ((o - qr).norm() < 1e-7) dup = true;
            if (!dup) out.push_back(qr);
        }
    }
    return out;
}

// Folded monolayer spectrum of the decoupled bilayer (J_perp = 0): every
// monolayer energy appears once per layer.
inline std::vector<double> folded_spectrum(const twistlat::MoireCell& cell, Vec2 k, double j) {
    std::vector<double> e;
    for (const Vec2& q : folded_momenta(cell, k)) {
        if (cell.angle.kind == twistlat::LatticeKind::square) {
            double v = -2.0 * j * (std::cos(q.x()) + std::cos(q.y()));
            e.push_back(v);
            e.push_back(v);
        } else {
            const Vec2 a1(1.0, 0.0), a2(0.5, std::sqrt(3.0) / 2.0);
            std::complex<double> f = 1.0 + std::exp(std::complex<double>(0.0, q.dot(a1))) +
                                     std::exp(std::complex<double>(0.0, q.dot(a2)));
            for (double s : {-1.0, 1.0}) {
                e.push_back(s * j * std::abs(f));
                e.push_back(s * j * std::abs(f));
            }
        }
    }
    std::sort(e.begin(), e.end());
    return e;
}

struct LinearFit {
    double slope{0.0}, intercept{0.0}, r2{0.0};
};

inline LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    LinearFit f;
    const std::size_t n = x.size();
    if (n < 2) return f;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r2 = syy > 0 ? sxy * sxy / (sxx * syy) : 1.0;
    return f;
}

} // namespace oracles
