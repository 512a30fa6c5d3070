// geometry.hpp — Commensurate twisted-bilayer lattices: angles, Moiré
// supercells, site lists, coincidence pairs, and finite periodic tilings.
//
// Lengths are in units of the monolayer lattice constant d (d = half the
// lattice-laser wavelength). Layer a is the unrotated lattice, layer b is
// the same lattice rotated counterclockwise by theta about a site shared
// by both layers at the origin.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "twistlat/errors.hpp"

namespace twistlat {

using Vec2 = Eigen::Vector2d;

enum class LatticeKind { square, honeycomb };

inline const char* to_string(LatticeKind k) {
    return k == LatticeKind::square ? "square" : "honeycomb";
}

// Validated coprime index pair (m,n) with its rotation angle.
//
// square:    cos(theta) = 2mn / (m^2 + n^2), restricted to theta < pi/4
// honeycomb: cos(theta) = (n^2 + 4nm + m^2) / (2 (m^2 + n^2 + nm))
struct CommensurateAngle {
    LatticeKind kind{LatticeKind::square};
    int m{1};
    int n{1};
    double theta{0.0};
    bool reduced_from_gcd{false}; // inputs shared a common factor that was divided out

    double degrees() const { return theta * 180.0 / std::numbers::pi; }
};

inline CommensurateAngle commensurate_angle(LatticeKind kind, int m, int n) {
    if (m <= 0 || n <= 0)
        throw InvalidIndexError("commensurate_angle: indices must be positive, got (" +
                                std::to_string(m) + "," + std::to_string(n) + ")");
    if (n > m)
        throw InvalidIndexError("commensurate_angle: requires m >= n, got (" +
                                std::to_string(m) + "," + std::to_string(n) + ")");
    int g = std::gcd(m, n);
    bool reduced = g > 1;
    m /= g;
    n /= g;

    CommensurateAngle out;
    out.kind = kind;
    out.m = m;
    out.n = n;
    out.reduced_from_gcd = reduced;
    if (kind == LatticeKind::square) {
        double c = 2.0 * m * n / double(int64_t(m) * m + int64_t(n) * n);
        out.theta = std::acos(std::min(1.0, c));
        // angles >= pi/4 are mirror images of smaller ones; reject and name the partner
        if (out.theta >= std::numbers::pi / 4.0 && !(m == 1 && n == 1)) {
            int pm = m + n, pn = m - n;
            int pg = std::gcd(pm, pn);
            throw InvalidIndexError("commensurate_angle: square theta(m,n) >= pi/4 for (" +
                                    std::to_string(m) + "," + std::to_string(n) +
                                    "); equivalent pair is (" + std::to_string(pm / pg) + "," +
                                    std::to_string(pn / pg) + ")");
        }
    } else {
        double s = double(int64_t(m) * m + int64_t(n) * n + int64_t(n) * m);
        double c = (int64_t(n) * n + 4.0 * n * m + int64_t(m) * m) / (2.0 * s);
        out.theta = std::acos(std::min(1.0, c));
    }
    return out;
}

// All coprime (m,n) with m <= max_index, sorted by descending theta.
inline std::vector<CommensurateAngle> enumerate_angles(LatticeKind kind, int max_index) {
    if (max_index < 1)
        throw InvalidIndexError("enumerate_angles: max_index must be >= 1");
    std::vector<CommensurateAngle> out;
    for (int m = 1; m <= max_index; ++m) {
        for (int n = 1; n <= m; ++n) {
            if (std::gcd(m, n) != 1) continue;
            if (m == n && m != 1) continue;
            try {
                out.push_back(commensurate_angle(kind, m, n));
            } catch (const InvalidIndexError&) {
                // square pairs beyond pi/4 fold back onto smaller-index angles
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CommensurateAngle& lhs, const CommensurateAngle& rhs) {
                  return lhs.theta > rhs.theta;
              });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const CommensurateAngle& lhs, const CommensurateAngle& rhs) {
                              return std::abs(lhs.theta - rhs.theta) < 1e-12;
                          }),
              out.end());
    return out;
}

enum class Layer : int { a = 0, b = 1 };

// One lattice site of the Moiré cell, wrapped into fractional coordinates
// [0,1)^2 of the supercell.
struct Site {
    Layer layer{Layer::a};
    std::array<int, 2> cell_index{0, 0}; // Bravais indices in the site's own layer frame
    int basis_index{0};                  // 0 for square; 0 (A) or 1 (B) for honeycomb
    Vec2 position{0.0, 0.0};             // Cartesian, units of d
    Vec2 frac{0.0, 0.0};                 // fractional coordinates along T1, T2
};

// Moiré supercell: lattice vectors, reciprocal vectors, per-layer site list,
// coincidence pairs. Site order: all layer-a sites first, then layer-b, each
// block sorted by fractional coordinates; the shared origin site is index 0
// of its block.
struct MoireCell {
    CommensurateAngle angle;
    Vec2 T1, T2; // supercell vectors, units of d
    Vec2 B1, B2; // reciprocal vectors, Bi . Tj = 2 pi delta_ij
    std::vector<Site> sites;
    std::vector<std::pair<int, int>> coincidences; // (a-site index, b-site index)

    int n_sites() const { return static_cast<int>(sites.size()); }
    int sites_per_layer() const { return n_sites() / 2; }
    double cell_area() const { return std::abs(T1.x() * T2.y() - T1.y() * T2.x()); }
};

namespace detail {

inline int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline int64_t mod_floor(int64_t a, int64_t b) { return a - floor_div(a, b) * b; }

// Residue bookkeeping: a site is identified by the exact numerator pair
// (u,v) of its fractional coordinates over a common denominator.
struct ResidueSite {
    int64_t u, v;
    std::array<int, 2> rep;
    int basis;
};

inline bool residue_less(const ResidueSite& x, const ResidueSite& y) {
    if (x.u != y.u) return x.u < y.u;
    if (x.v != y.v) return x.v < y.v;
    return x.basis < y.basis;
}

} // namespace detail

// Builds the Moiré supercell for a validated commensurate angle.
//
// square:    T1 = d (n, m), T2 = d (-m, n); R(theta) maps lattice point
//            (m,n) onto (n,m), so both are coincidence-lattice vectors.
// honeycomb: T1 = n a1 + m a2, T2 = R(60deg) T1 = -m a1 + (n+m) a2 with
//            a1 = d (1,0), a2 = d (1/2, sqrt(3)/2); AA registry at origin.
//
// Fractional coordinates are exact rationals (denominator m^2+n^2 for the
// square case, 3(m^2+n^2+nm) for honeycomb), so wrapping into [0,1)^2 and
// coincidence matching are exact integer operations.
inline MoireCell build_moire_cell(const CommensurateAngle& angle) {
    const int m = angle.m, n = angle.n;
    MoireCell cell;
    cell.angle = angle;

    std::vector<detail::ResidueSite> resid[2];
    int64_t denom = 0;
    int expected_per_layer = 0;

    if (angle.kind == LatticeKind::square) {
        cell.T1 = Vec2(n, m);
        cell.T2 = Vec2(-m, n);
        const int64_t A = int64_t(m) * m + int64_t(n) * n;
        denom = A;
        expected_per_layer = static_cast<int>(A);

        const int w = 2 * (m + n);
        for (int i = -w; i <= w; ++i) {
            for (int j = -w; j <= w; ++j) {
                // layer a: point (i,j); f1 = (i n + j m)/A, f2 = (j n - i m)/A
                int64_t ua = int64_t(i) * n + int64_t(j) * m;
                int64_t va = int64_t(j) * n - int64_t(i) * m;
                int64_t k1 = detail::floor_div(ua, A), k2 = detail::floor_div(va, A);
                resid[0].push_back({detail::mod_floor(ua, A), detail::mod_floor(va, A),
                                    {int(i - k1 * n + k2 * m), int(j - k1 * m - k2 * n)},
                                    0});
                // layer b: point R(theta)(i,j); f1 = (i m + j n)/A, f2 = (j m - i n)/A
                int64_t ub = int64_t(i) * m + int64_t(j) * n;
                int64_t vb = int64_t(j) * m - int64_t(i) * n;
                k1 = detail::floor_div(ub, A);
                k2 = detail::floor_div(vb, A);
                // wrapping by -k1 T1 - k2 T2 shifts the b-frame point by
                // -k1 (m,n) - k2 (-n,m)
                resid[1].push_back({detail::mod_floor(ub, A), detail::mod_floor(vb, A),
                                    {int(i - k1 * m + k2 * n), int(j - k1 * n - k2 * m)},
                                    0});
            }
        }
    } else {
        const Vec2 a1(1.0, 0.0), a2(0.5, std::sqrt(3.0) / 2.0);
        cell.T1 = n * a1 + m * a2;
        cell.T2 = -m * a1 + (n + m) * a2;
        const int64_t S = int64_t(m) * m + int64_t(n) * n + int64_t(n) * m;
        denom = 3 * S;
        expected_per_layer = static_cast<int>(2 * S);

        const int w = 2 * (m + n) + 1;
        for (int p = -w; p <= w; ++p) {
            for (int q = -w; q <= w; ++q) {
                for (int s = 0; s < 2; ++s) {
                    // lattice-basis coordinates (p + s/3, q + s/3), scaled by 3
                    int64_t c1 = 3 * int64_t(p) + s, c2 = 3 * int64_t(q) + s;
                    // layer a: f = [[n+m, m], [-m, n]] c / (3S)
                    int64_t ua = (n + int64_t(m)) * c1 + int64_t(m) * c2;
                    int64_t va = -int64_t(m) * c1 + int64_t(n) * c2;
                    int64_t k1 = detail::floor_div(ua, denom), k2 = detail::floor_div(va, denom);
                    resid[0].push_back({detail::mod_floor(ua, denom), detail::mod_floor(va, denom),
                                        {int(p - k1 * n + k2 * m), int(q - k1 * m - k2 * (n + m))},
                                        s});
                    // layer b: f = [[n+m, n], [-n, m]] c / (3S)
                    int64_t ub = (n + int64_t(m)) * c1 + int64_t(n) * c2;
                    int64_t vb = -int64_t(n) * c1 + int64_t(m) * c2;
                    k1 = detail::floor_div(ub, denom);
                    k2 = detail::floor_div(vb, denom);
                    resid[1].push_back({detail::mod_floor(ub, denom), detail::mod_floor(vb, denom),
                                        {int(p - k1 * m + k2 * n), int(q - k1 * n - k2 * (n + m))},
                                        s});
                }
            }
        }
    }

    // reciprocal vectors from the inverse-transpose of [T1 T2]
    const double area = cell.T1.x() * cell.T2.y() - cell.T1.y() * cell.T2.x();
    cell.B1 = 2.0 * std::numbers::pi / area * Vec2(cell.T2.y(), -cell.T2.x());
    cell.B2 = 2.0 * std::numbers::pi / area * Vec2(-cell.T1.y(), cell.T1.x());

    for (int layer = 0; layer < 2; ++layer) {
        auto& r = resid[layer];
        std::sort(r.begin(), r.end(), detail::residue_less);
        r.erase(std::unique(r.begin(), r.end(),
                            [](const detail::ResidueSite& x, const detail::ResidueSite& y) {
                                return x.u == y.u && x.v == y.v;
                            }),
                r.end());
        if (static_cast<int>(r.size()) != expected_per_layer)
            throw InternalConsistencyError(
                "build_moire_cell: found " + std::to_string(r.size()) + " layer-" +
                (layer ? "b" : "a") + " sites, closed form gives " +
                std::to_string(expected_per_layer));
        for (const auto& rs : r) {
            Site site;
            site.layer = static_cast<Layer>(layer);
            site.cell_index = rs.rep;
            site.basis_index = rs.basis;
            site.frac = Vec2(double(rs.u) / double(denom), double(rs.v) / double(denom));
            site.position = site.frac.x() * cell.T1 + site.frac.y() * cell.T2;
            cell.sites.push_back(site);
        }
    }

    // Coincidences: a-site and b-site at the same wrapped position. The
    // residue pairs are exact, so equality matching realizes the 1e-9 d
    // position tolerance with zero slack. Both residue blocks are sorted,
    // walk them in lockstep.
    const int per_layer = expected_per_layer;
    int ia = 0, ib = 0;
    while (ia < per_layer && ib < per_layer) {
        const auto& ra = resid[0][ia];
        const auto& rb = resid[1][ib];
        if (ra.u == rb.u && ra.v == rb.v) {
            cell.coincidences.emplace_back(ia, per_layer + ib);
            ++ia;
            ++ib;
        } else if (std::make_pair(ra.u, ra.v) < std::make_pair(rb.u, rb.v)) {
            ++ia;
        } else {
            ++ib;
        }
    }
    return cell;
}

// Finite bath: Nc x Nc periodic tiling of a Moiré cell. Site index layout is
//   index = (cx * Nc + cy) * cell.n_sites() + s
// with cx, cy in [0, Nc) and s the site index within the cell.
struct TiledLattice {
    MoireCell cell;
    int nc{1};

    std::size_t size() const { return std::size_t(nc) * nc * cell.sites.size(); }
    int cells() const { return nc * nc; }

    std::size_t index(int cx, int cy, int s) const {
        return (std::size_t(cx) * nc + cy) * cell.sites.size() + s;
    }
    int cell_x(std::size_t i) const { return static_cast<int>(i / cell.sites.size() / nc); }
    int cell_y(std::size_t i) const { return static_cast<int>(i / cell.sites.size() % nc); }
    int site_in_cell(std::size_t i) const { return static_cast<int>(i % cell.sites.size()); }

    Vec2 position(std::size_t i) const {
        const Site& s = cell.sites[site_in_cell(i)];
        return s.position + double(cell_x(i)) * cell.T1 + double(cell_y(i)) * cell.T2;
    }
};

inline constexpr std::size_t kMaxTiledSites = std::size_t(1) << 24;

inline TiledLattice tile_lattice(const MoireCell& cell, int nc) {
    if (nc < 1) throw InvalidIndexError("tile_lattice: Nc must be >= 1");
    std::size_t total = std::size_t(nc) * nc * cell.sites.size();
    if (total > kMaxTiledSites)
        throw CapacityError("tile_lattice: " + std::to_string(total) +
                            " sites exceeds the addressable budget of " +
                            std::to_string(kMaxTiledSites));
    TiledLattice lat;
    lat.cell = cell;
    lat.nc = nc;
    return lat;
}

} // namespace twistlat
