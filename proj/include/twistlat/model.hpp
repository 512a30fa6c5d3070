// model.hpp — Tight-binding Hamiltonians on the twisted bilayer: bond
// tables, Bloch matrices on the Moiré cell, sparse real-space operators on
// finite tilings.
//
// Sign convention: H = -sum_bonds amplitude c_i^dag c_j, so the square
// monolayer dispersion is -2J (cos kx d + cos ky d). On-site energies are
// zero; band energies are measured from the trap frequency.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "twistlat/errors.hpp"
#include "twistlat/geometry.hpp"
#include "twistlat/parallel.hpp"

namespace twistlat {

// Hopping ranges: the minimal model keeps nearest-neighbour intralayer bonds
// and interlayer bonds only between coincident sites. The gaussian mode adds
// all pairs within a cutoff, weighted by the Wannier overlap factor
// exp(-|dR|^2 / (4 L0^2)) and normalized so the nearest-neighbour intralayer
// amplitude stays J.
enum class RangeMode { minimal, gaussian };

struct HoppingModel {
    double J{1.0};       // intralayer nearest-neighbour amplitude
    double J_perp{0.0};  // interlayer amplitude at zero separation
    RangeMode range{RangeMode::minimal};
    double L0_over_d{0.1};     // gaussian mode only
    double cutoff_over_d{3.0}; // gaussian mode only

    void validate() const {
        if (J <= 0) throw std::invalid_argument("HoppingModel: J must be positive");
        if (J_perp < 0) throw std::invalid_argument("HoppingModel: J_perp must be >= 0");
        if (range == RangeMode::gaussian) {
            if (L0_over_d <= 0) throw std::invalid_argument("HoppingModel: L0/d must be positive");
            if (cutoff_over_d < 1) throw std::invalid_argument("HoppingModel: cutoff must be >= 1 d");
        }
    }
};

// One stored bond. Tables keep a single canonical direction per physical
// bond (i < j, or i == j with lexicographically positive shift); the
// Hermitian partner (j, i, -shift) carries the same amplitude.
struct Bond {
    int i{0};
    int j{0};
    std::array<int, 2> shift{0, 0}; // supercell image of site j, in units of T1/T2
    double amplitude{0.0};
    bool interlayer{false};
};

struct BondTable {
    std::vector<Bond> bonds;
    std::vector<std::string> warnings;

    std::size_t size() const { return bonds.size(); }

    // Amplitude lookup resolving the Hermitian partner order.
    double amplitude(int i, int j, std::array<int, 2> shift) const {
        for (const Bond& b : bonds) {
            if (b.i == i && b.j == j && b.shift == shift) return b.amplitude;
            if (b.i == j && b.j == i && b.shift[0] == -shift[0] && b.shift[1] == -shift[1])
                return b.amplitude;
        }
        return 0.0;
    }
};

namespace detail {

inline double nn_distance(LatticeKind kind) {
    return kind == LatticeKind::square ? 1.0 : 1.0 / std::sqrt(3.0);
}

inline bool canonical_self_shift(const std::array<int, 2>& s) {
    return s[0] > 0 || (s[0] == 0 && s[1] > 0);
}

} // namespace detail

// Builds the bond table of one Moiré cell. Positions are matched within
// 1e-9 d, consistent with the geometry construction.
inline BondTable neighbor_table(const MoireCell& cell, const HoppingModel& model) {
    model.validate();
    BondTable table;
    const double tol = 1e-9;
    const double d_nn = detail::nn_distance(cell.angle.kind);
    const int ns = cell.n_sites();
    const int per_layer = cell.sites_per_layer();

    const double cutoff =
        model.range == RangeMode::minimal ? d_nn + tol : model.cutoff_over_d + tol;
    const double min_t = std::min(cell.T1.norm(), cell.T2.norm());
    const int smax = static_cast<int>(std::ceil(cutoff / min_t)) + 1;
    const double prune = 1e-12 * std::max(model.J, model.J_perp);

    auto gaussian_amp = [&](double base, double r2, double ref2) {
        double w = std::exp(-(r2 - ref2) / (4.0 * model.L0_over_d * model.L0_over_d));
        return base * w;
    };

    for (int i = 0; i < ns; ++i) {
        for (int j = i; j < ns; ++j) {
            const bool inter = (cell.sites[i].layer != cell.sites[j].layer);
            if (inter && model.J_perp == 0.0) continue;
            for (int s1 = -smax; s1 <= smax; ++s1) {
                for (int s2 = -smax; s2 <= smax; ++s2) {
                    std::array<int, 2> shift{s1, s2};
                    if (i == j && !detail::canonical_self_shift(shift)) continue;
                    Vec2 dr = cell.sites[j].position + s1 * cell.T1 + s2 * cell.T2 -
                              cell.sites[i].position;
                    double r = dr.norm();
                    if (r > cutoff) continue;
                    if (model.range == RangeMode::minimal) {
                        if (inter) {
                            if (r < tol)
                                table.bonds.push_back({i, j, shift, model.J_perp, true});
                        } else if (std::abs(r - d_nn) < tol) {
                            table.bonds.push_back({i, j, shift, model.J, false});
                        }
                    } else {
                        if (!inter && r < tol) continue; // on-site, not a hop
                        double amp = inter ? gaussian_amp(model.J_perp, r * r, 0.0)
                                           : gaussian_amp(model.J, r * r, d_nn * d_nn);
                        if (amp > prune)
                            table.bonds.push_back({i, j, shift, amp, inter});
                    }
                }
            }
        }
    }

    if (model.range == RangeMode::minimal && model.J_perp > 0.0 && cell.coincidences.empty())
        table.warnings.push_back("no coincident sites: layers are decoupled despite J_perp > 0");
    return table;
}

// Bloch matrix in the periodic gauge: H(k)[i,j] accumulates
// -amplitude * exp(i k . (s1 T1 + s2 T2)), which is exactly periodic under
// k -> k + B1/B2. k is Cartesian in units of 1/d.
inline Eigen::MatrixXcd bloch_matrix(const BondTable& table, const MoireCell& cell, Vec2 k) {
    if (!std::isfinite(k.x()) || !std::isfinite(k.y()))
        throw std::invalid_argument("bloch_matrix: non-finite k");
    const int ns = cell.n_sites();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(ns, ns);
    for (const Bond& b : table.bonds) {
        const double phi = k.dot(b.shift[0] * cell.T1 + b.shift[1] * cell.T2);
        if (b.i == b.j) {
            h(b.i, b.i) += std::complex<double>(-2.0 * b.amplitude * std::cos(phi), 0.0);
        } else {
            const std::complex<double> z = -b.amplitude * std::exp(std::complex<double>(0.0, phi));
            h(b.i, b.j) += z;
            h(b.j, b.i) += std::conj(z);
        }
    }
    return h;
}

inline Eigen::MatrixXcd bloch_matrix(const MoireCell& cell, const HoppingModel& model, Vec2 k) {
    return bloch_matrix(neighbor_table(cell, model), cell, k);
}

inline Eigen::VectorXd bloch_eigenvalues(const Eigen::MatrixXcd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("bloch eigensolver failed to converge");
    return solver.eigenvalues();
}

// Sparse Hermitian operator in CSR form. All amplitudes are real, so the
// matrix is real symmetric; it acts on complex state vectors.
struct RealSpaceOperator {
    std::size_t dim{0};
    std::vector<std::size_t> row_ptr;
    std::vector<int> col;
    std::vector<double> val;

    void apply(const std::complex<double>* x, std::complex<double>* y, int threads = 0) const {
        parallel_for(
            dim,
            [&](std::size_t r) {
                std::complex<double> acc(0.0, 0.0);
                for (std::size_t p = row_ptr[r]; p < row_ptr[r + 1]; ++p)
                    acc += val[p] * x[col[p]];
                y[r] = acc;
            },
            threads);
    }

    Eigen::VectorXcd apply(const Eigen::VectorXcd& x, int threads = 0) const {
        Eigen::VectorXcd y(dim);
        apply(x.data(), y.data(), threads);
        return y;
    }

    // Largest Gershgorin row bound; the spectrum lies in [-bound, bound]
    // shifted by the diagonal, which this bound already includes.
    double gershgorin_bound() const {
        double bound = 0.0;
        for (std::size_t r = 0; r < dim; ++r) {
            double radius = 0.0, diag = 0.0;
            for (std::size_t p = row_ptr[r]; p < row_ptr[r + 1]; ++p) {
                if (static_cast<std::size_t>(col[p]) == r)
                    diag += val[p];
                else
                    radius += std::abs(val[p]);
            }
            bound = std::max(bound, std::abs(diag) + radius);
        }
        return bound;
    }

    Eigen::MatrixXd dense() const {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t p = row_ptr[r]; p < row_ptr[r + 1]; ++p)
                m(r, col[p]) += val[p];
        return m;
    }
};

namespace detail {

struct Coo {
    int row, col;
    double val;
};

inline RealSpaceOperator csr_from_coo(std::size_t dim, std::vector<Coo>& entries) {
    std::sort(entries.begin(), entries.end(), [](const Coo& x, const Coo& y) {
        return x.row != y.row ? x.row < y.row : x.col < y.col;
    });
    RealSpaceOperator op;
    op.dim = dim;
    op.row_ptr.assign(dim + 1, 0);
    for (std::size_t e = 0; e < entries.size();) {
        std::size_t f = e;
        double sum = 0.0;
        while (f < entries.size() && entries[f].row == entries[e].row &&
               entries[f].col == entries[e].col)
            sum += entries[f++].val;
        op.col.push_back(entries[e].col);
        op.val.push_back(sum);
        ++op.row_ptr[entries[e].row + 1];
        e = f;
    }
    for (std::size_t r = 0; r < dim; ++r) op.row_ptr[r + 1] += op.row_ptr[r];
    return op;
}

} // namespace detail

// Same Hamiltonian on the finite periodic tiling. Its spectrum equals the
// union of Bloch spectra over the Nc x Nc k-grid.
inline RealSpaceOperator real_space_hamiltonian(const TiledLattice& lattice,
                                                const HoppingModel& model) {
    const BondTable table = neighbor_table(lattice.cell, model);
    const int nc = lattice.nc;
    const std::size_t dim = lattice.size();
    if (dim > kMaxTiledSites)
        throw CapacityError("real_space_hamiltonian: dimension exceeds budget");

    std::vector<detail::Coo> entries;
    entries.reserve(2 * table.size() * std::size_t(nc) * nc);
    auto wrap = [nc](int c) { return ((c % nc) + nc) % nc; };
    for (int cx = 0; cx < nc; ++cx) {
        for (int cy = 0; cy < nc; ++cy) {
            for (const Bond& b : table.bonds) {
                int gi = static_cast<int>(lattice.index(cx, cy, b.i));
                int gj = static_cast<int>(
                    lattice.index(wrap(cx + b.shift[0]), wrap(cy + b.shift[1]), b.j));
                entries.push_back({gi, gj, -b.amplitude});
                entries.push_back({gj, gi, -b.amplitude});
            }
        }
    }
    return detail::csr_from_coo(dim, entries);
}

} // namespace twistlat
