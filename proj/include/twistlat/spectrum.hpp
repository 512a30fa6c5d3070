// spectrum.hpp — Band structures along symmetry paths, density of states on
// k-grids, band metrics, and the critical interlayer ratio where the top
// band isolates.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "twistlat/errors.hpp"
#include "twistlat/geometry.hpp"
#include "twistlat/model.hpp"
#include "twistlat/parallel.hpp"

namespace twistlat {

struct KPath {
    struct Waypoint {
        std::string label;
        Vec2 k;
    };
    std::vector<Waypoint> waypoints;
    int samples_per_segment{50};
};

// Gamma - X - M - Gamma in the Moiré Brillouin zone.
inline KPath default_kpath(const MoireCell& cell, int samples_per_segment = 50) {
    KPath path;
    path.samples_per_segment = samples_per_segment;
    path.waypoints = {{"G", Vec2(0.0, 0.0)},
                      {"X", 0.5 * cell.B1},
                      {"M", 0.5 * (cell.B1 + cell.B2)},
                      {"G", Vec2(0.0, 0.0)}};
    return path;
}

struct BandStructure {
    std::vector<double> s; // cumulative path length, units 1/d
    std::vector<Vec2> k;
    Eigen::MatrixXd omega; // sample x band, ascending within each row
};

inline BandStructure bands(const MoireCell& cell, const HoppingModel& model, const KPath& path,
                           int threads = 0) {
    if (path.waypoints.size() < 2)
        throw std::invalid_argument("bands: path needs at least two waypoints");
    if (path.samples_per_segment < 1)
        throw std::invalid_argument("bands: samples_per_segment must be >= 1");
    const BondTable table = neighbor_table(cell, model);

    BandStructure out;
    double s = 0.0;
    for (std::size_t w = 0; w + 1 < path.waypoints.size(); ++w) {
        const Vec2 k0 = path.waypoints[w].k, k1 = path.waypoints[w + 1].k;
        const double seg = (k1 - k0).norm();
        for (int t = 0; t < path.samples_per_segment; ++t) {
            double f = double(t) / path.samples_per_segment;
            out.k.push_back(k0 + f * (k1 - k0));
            out.s.push_back(s + f * seg);
        }
        s += seg;
    }
    out.k.push_back(path.waypoints.back().k);
    out.s.push_back(s);

    const std::size_t nk = out.k.size();
    out.omega.resize(nk, cell.n_sites());
    parallel_for(
        nk,
        [&](std::size_t i) {
            out.omega.row(i) = bloch_eigenvalues(bloch_matrix(table, cell, out.k[i])).transpose();
        },
        threads);
    return out;
}

// Eigenvalues over the uniform N x N grid k = ((i+ox)/N) B1 + ((j+oy)/N) B2.
// The default offset 0 keeps Gamma (and, for even N, X and M) on the grid.
struct BandGrid {
    int n{0};
    int n_bands{0};
    Vec2 offset{0.0, 0.0};
    std::vector<double> omega; // [(i*n + j)*n_bands + band], ascending per k

    double at(int i, int j, int band) const {
        return omega[(std::size_t(i) * n + j) * n_bands + band];
    }
    double band_min(int band) const {
        double v = at(0, 0, band);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v = std::min(v, at(i, j, band));
        return v;
    }
    double band_max(int band) const {
        double v = at(0, 0, band);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v = std::max(v, at(i, j, band));
        return v;
    }
};

inline BandGrid band_grid(const MoireCell& cell, const HoppingModel& model, int n,
                          int threads = 0, Vec2 offset = Vec2(0.0, 0.0)) {
    if (n < 1) throw std::invalid_argument("band_grid: grid size must be >= 1");
    const BondTable table = neighbor_table(cell, model);
    BandGrid grid;
    grid.n = n;
    grid.n_bands = cell.n_sites();
    grid.offset = offset;
    grid.omega.resize(std::size_t(n) * n * grid.n_bands);
    parallel_for(
        std::size_t(n) * n,
        [&](std::size_t ik) {
            const int i = static_cast<int>(ik) / n, j = static_cast<int>(ik) % n;
            const Vec2 k =
                ((i + offset.x()) / n) * cell.B1 + ((j + offset.y()) / n) * cell.B2;
            Eigen::VectorXd w = bloch_eigenvalues(bloch_matrix(table, cell, k));
            std::copy(w.data(), w.data() + grid.n_bands,
                      grid.omega.begin() + ik * grid.n_bands);
        },
        threads);
    return grid;
}

// Histogram of Bloch eigenvalues over an N x N k-grid. Bin width is
// 2 pi J / N; bins are centered on integer multiples of the width so that
// omega = 0 sits at a bin center. One empty bin pads each end, which makes
// the trapezoid integral of normalized_density exactly one.
struct DOSResult {
    int n{0};
    double bin_width{0.0};
    std::vector<double> bin_centers;
    std::vector<std::int64_t> counts;
    std::vector<double> normalized_density;

    std::int64_t total_count() const {
        std::int64_t t = 0;
        for (auto c : counts) t += c;
        return t;
    }
};

inline DOSResult dos_from_grid(const BandGrid& grid, double bin_width) {
    DOSResult out;
    out.n = grid.n;
    out.bin_width = bin_width;
    std::int64_t lo = 0, hi = 0;
    std::vector<std::int64_t> bins(grid.omega.size());
    for (std::size_t i = 0; i < grid.omega.size(); ++i) {
        bins[i] = std::llround(std::floor(grid.omega[i] / bin_width + 0.5));
        lo = std::min(lo, bins[i]);
        hi = std::max(hi, bins[i]);
    }
    --lo;
    ++hi;
    out.bin_centers.resize(hi - lo + 1);
    out.counts.assign(hi - lo + 1, 0);
    for (std::size_t b = 0; b < out.bin_centers.size(); ++b)
        out.bin_centers[b] = (lo + std::int64_t(b)) * bin_width;
    for (auto b : bins) ++out.counts[b - lo];
    const double norm = double(grid.omega.size()) * bin_width;
    out.normalized_density.resize(out.counts.size());
    for (std::size_t b = 0; b < out.counts.size(); ++b)
        out.normalized_density[b] = double(out.counts[b]) / norm;
    return out;
}

inline DOSResult dos(const MoireCell& cell, const HoppingModel& model, int n, int threads = 0,
                     Vec2 offset = Vec2(0.0, 0.0)) {
    if (n < 16) throw std::invalid_argument("dos: grid size must be >= 16");
    return dos_from_grid(band_grid(cell, model, n, threads, offset),
                         2.0 * std::numbers::pi * model.J / n);
}

struct BandTouching {
    double omega{0.0};
    std::string label;
    int multiplicity{0};
};

struct BandMetrics {
    std::vector<double> bandwidths; // per band
    std::vector<double> gaps;       // between adjacent bands; negative = overlap
    bool isolated_top{false};
    std::vector<BandTouching> touchings;
};

// Bandwidths, inter-band gaps, and degeneracies at the symmetry points
// Gamma, X, M. The grid must include those points (even N, zero offset).
inline BandMetrics band_metrics(const BandGrid& grid, double touching_tol = 1e-6) {
    if (grid.n % 2 != 0 || grid.offset.x() != 0.0 || grid.offset.y() != 0.0)
        throw std::invalid_argument("band_metrics: needs an even grid with zero offset");
    BandMetrics out;
    const int nb = grid.n_bands;
    std::vector<double> bmin(nb), bmax(nb);
    for (int b = 0; b < nb; ++b) {
        bmin[b] = grid.band_min(b);
        bmax[b] = grid.band_max(b);
        out.bandwidths.push_back(bmax[b] - bmin[b]);
    }
    for (int b = 0; b + 1 < nb; ++b) out.gaps.push_back(bmin[b + 1] - bmax[b]);
    out.isolated_top = nb >= 2 && out.gaps.back() > 0.0;

    const int h = grid.n / 2;
    const std::array<std::pair<const char*, std::pair<int, int>>, 3> points{
        {{"G", {0, 0}}, {"X", {h, 0}}, {"M", {h, h}}}};
    for (const auto& [label, ij] : points) {
        int b = 0;
        while (b < nb) {
            int c = b + 1;
            while (c < nb &&
                   grid.at(ij.first, ij.second, c) - grid.at(ij.first, ij.second, c - 1) <
                       touching_tol)
                ++c;
            if (c - b >= 2) {
                double sum = 0.0;
                for (int x = b; x < c; ++x) sum += grid.at(ij.first, ij.second, x);
                out.touchings.push_back({sum / (c - b), label, c - b});
            }
            b = c;
        }
    }
    return out;
}

// Gap above the highest band as a function of J_perp/J.
inline double top_gap(const MoireCell& cell, double j_perp_over_j, int nk, int threads = 0) {
    HoppingModel model;
    model.J = 1.0;
    model.J_perp = j_perp_over_j;
    BandGrid grid = band_grid(cell, model, nk, threads);
    const int nb = grid.n_bands;
    return grid.band_min(nb - 1) - grid.band_max(nb - 2);
}

// Bisection for the J_perp/J where the top band separates from the rest.
inline double critical_ratio(const MoireCell& cell, double lo, double hi, double tol,
                             int nk = 128, int threads = 0) {
    if (!(tol > 0)) throw std::invalid_argument("critical_ratio: tol must be positive");
    if (!(lo < hi)) throw std::invalid_argument("critical_ratio: requires lo < hi");
    double flo = top_gap(cell, lo, nk, threads);
    double fhi = top_gap(cell, hi, nk, threads);
    if (!(flo < 0.0 && fhi > 0.0))
        throw BracketError("critical_ratio: top gap does not change sign on [" +
                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (top_gap(cell, mid, nk, threads) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace twistlat
