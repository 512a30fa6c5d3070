// emission.hpp — A quantum emitter coupled to the twisted bilayer bath in
// the single-excitation sector: exact time evolution, golden-rule rates,
// band-gap bound states, radiation snapshots, and induced emitter-emitter
// couplings.
//
// The emitter carries detuning Delta = omega_c - omega_t measured from the
// bath on-site reference (zero), couples with real strength g to one
// layer-a site, and the state vector is [bath sites..., emitter].

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "twistlat/errors.hpp"
#include "twistlat/geometry.hpp"
#include "twistlat/model.hpp"
#include "twistlat/parallel.hpp"
#include "twistlat/propagator.hpp"
#include "twistlat/spectrum.hpp"

namespace twistlat {

struct EmitterSpec {
    double g{0.1};
    double delta{0.0};
    std::ptrdiff_t attach_site{-1}; // tiled-lattice index; -1 = coincidence a-site, central cell
    double u_c{0.0};                // on-site interaction; inert with a single excitation
};

// Coincidence layer-a site of the central supercell.
inline std::size_t default_attach_site(const TiledLattice& lattice) {
    const int s = lattice.cell.coincidences.empty() ? 0 : lattice.cell.coincidences[0].first;
    return lattice.index(lattice.nc / 2, lattice.nc / 2, s);
}

inline std::size_t resolve_attach_site(const TiledLattice& lattice, const EmitterSpec& emitter) {
    std::size_t idx = emitter.attach_site < 0 ? default_attach_site(lattice)
                                              : static_cast<std::size_t>(emitter.attach_site);
    if (idx >= lattice.size())
        throw std::invalid_argument("emitter attach_site out of range");
    if (lattice.cell.sites[lattice.site_in_cell(idx)].layer != Layer::a)
        throw std::invalid_argument("emitter must attach to a layer-a site");
    return idx;
}

struct EmissionResult {
    std::vector<double> times;                          // units 1/J
    std::vector<std::complex<double>> emitter_amplitude; // C_e at each time
    Eigen::VectorXcd final_field;                       // bath amplitudes at the last time
    double norm_drift{0.0};                             // max |1 - sum |C|^2|
    std::size_t attach_site{0};

    double population(std::size_t i) const { return std::norm(emitter_amplitude[i]); }
};

namespace detail {

inline RealSpaceOperator single_excitation_hamiltonian(const TiledLattice& lattice,
                                                       const HoppingModel& model,
                                                       const EmitterSpec& emitter,
                                                       std::size_t attach) {
    const BondTable table = neighbor_table(lattice.cell, model);
    const int nc = lattice.nc;
    std::vector<Coo> entries;
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
    const int e = static_cast<int>(lattice.size());
    entries.push_back({e, e, emitter.delta});
    if (emitter.g != 0.0) {
        entries.push_back({e, static_cast<int>(attach), emitter.g});
        entries.push_back({static_cast<int>(attach), e, emitter.g});
    }
    return csr_from_coo(lattice.size() + 1, entries);
}

inline double gaussian_delta(double x, double eta) {
    return std::exp(-x * x / (2.0 * eta * eta)) / (eta * std::sqrt(2.0 * std::numbers::pi));
}

} // namespace detail

// Solves i d|psi>/dt = H |psi> from |psi(0)> = |e> with a Chebyshev
// expansion of the stepper exp(-i H dt); C_e is sampled every dt.
inline EmissionResult evolve(const TiledLattice& lattice, const HoppingModel& model,
                             const EmitterSpec& emitter, double dt, double tmax,
                             int threads = 0) {
    model.validate();
    if (!(dt > 0) || !(tmax >= 0)) throw std::invalid_argument("evolve: need dt > 0, tmax >= 0");
    const std::size_t attach = resolve_attach_site(lattice, emitter);
    const RealSpaceOperator h =
        detail::single_excitation_hamiltonian(lattice, model, emitter, attach);

    const std::size_t dim = h.dim;
    const int steps = static_cast<int>(std::llround(tmax / dt));
    std::vector<std::complex<double>> psi(dim, {0.0, 0.0});
    psi[dim - 1] = 1.0;

    ChebyshevPropagator prop(h, h.gershgorin_bound() + 1e-9, dt, threads);

    EmissionResult out;
    out.attach_site = attach;
    out.times.reserve(steps + 1);
    out.emitter_amplitude.reserve(steps + 1);
    out.times.push_back(0.0);
    out.emitter_amplitude.push_back(psi[dim - 1]);
    double drift = 0.0;
    for (int s = 1; s <= steps; ++s) {
        prop.step(psi);
        out.times.push_back(s * dt);
        out.emitter_amplitude.push_back(psi[dim - 1]);
        double norm2 = 0.0;
        for (const auto& c : psi) norm2 += std::norm(c);
        drift = std::max(drift, std::abs(1.0 - norm2));
    }
    out.norm_drift = drift;
    if (drift > 1e-6)
        throw NumericalError("evolve: norm drift " + std::to_string(drift) +
                             " exceeds 1e-6; reduce dt");
    out.final_field = Eigen::Map<const Eigen::VectorXcd>(psi.data(), dim - 1);
    return out;
}

// Golden-rule decay rate 2 pi g^2 x (local spectral density at Delta),
// evaluated on an nk x nk Bloch grid with Gaussian broadening eta.
inline double markov_rate(const MoireCell& cell, const HoppingModel& model,
                          const EmitterSpec& emitter, double eta, int nk = 256,
                          int threads = 0) {
    model.validate();
    if (!(eta > 0)) throw std::invalid_argument("markov_rate: eta must be positive");
    const int nm = cell.n_sites();
    const int s0 = emitter.attach_site < 0
                       ? (cell.coincidences.empty() ? 0 : cell.coincidences[0].first)
                       : static_cast<int>(emitter.attach_site) % nm;
    const BondTable table = neighbor_table(cell, model);
    std::vector<double> partial(std::size_t(nk) * nk, 0.0);
    parallel_for(
        partial.size(),
        [&](std::size_t ik) {
            const int i = static_cast<int>(ik) / nk, j = static_cast<int>(ik) % nk;
            const Vec2 k = (double(i) / nk) * cell.B1 + (double(j) / nk) * cell.B2;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(bloch_matrix(table, cell, k));
            if (es.info() != Eigen::Success) throw NumericalError("markov_rate: eigensolver failed");
            double acc = 0.0;
            for (int b = 0; b < nm; ++b)
                acc += std::norm(es.eigenvectors()(s0, b)) *
                       detail::gaussian_delta(emitter.delta - es.eigenvalues()(b), eta);
            partial[ik] = acc;
        },
        threads);
    double sum = 0.0;
    for (double p : partial) sum += p; // fixed order, deterministic
    return 2.0 * std::numbers::pi * emitter.g * emitter.g * sum / double(partial.size());
}

struct BoundState {
    double energy{0.0};         // units of J
    double emitter_weight{0.0}; // |<e|psi>|^2
    Eigen::VectorXcd field;     // bath amplitudes, lattice site order
    double xi{0.0};             // localization length, units of the cell diagonal |T1+T2|
    double xi_fit_r2{0.0};      // quality of the log-linear radial fit
    double anisotropy{0.0};     // diagonal-sector / axis-sector probability
    std::size_t attach_site{0};
};

struct SectorAnisotropy {
    double diag_prob{0.0};
    double axis_prob{0.0};
    double ratio() const {
        return axis_prob > 0.0 ? diag_prob / axis_prob
                               : std::numeric_limits<double>::infinity();
    }
};

namespace detail {

inline Vec2 minimal_image(const TiledLattice& lattice, std::size_t i, std::size_t origin) {
    auto wrap_half = [&](int c) {
        int nc = lattice.nc;
        int w = ((c % nc) + nc) % nc;
        return w >= (nc + 1) / 2 ? w - nc : w;
    };
    const int dx = wrap_half(lattice.cell_x(i) - lattice.cell_x(origin));
    const int dy = wrap_half(lattice.cell_y(i) - lattice.cell_y(origin));
    const Vec2 ds = lattice.cell.sites[lattice.site_in_cell(i)].position -
                    lattice.cell.sites[lattice.site_in_cell(origin)].position;
    return ds + double(dx) * lattice.cell.T1 + double(dy) * lattice.cell.T2;
}

// Probability within +-15 degree wedges around the supercell diagonals
// (T1 +- T2) versus around the supercell axes (T1, T2).
inline SectorAnisotropy sector_anisotropy(const TiledLattice& lattice, std::size_t attach,
                                          const double* prob) {
    const Vec2 diag1 = (lattice.cell.T1 + lattice.cell.T2).normalized();
    const Vec2 diag2 = (lattice.cell.T1 - lattice.cell.T2).normalized();
    const Vec2 ax1 = lattice.cell.T1.normalized();
    const Vec2 ax2 = lattice.cell.T2.normalized();
    const double cos_w = std::cos(15.0 * std::numbers::pi / 180.0);
    const double rmin = 0.35 * lattice.cell.T1.norm();
    SectorAnisotropy out;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        if (i == attach) continue;
        const Vec2 u = minimal_image(lattice, i, attach);
        const double r = u.norm();
        if (r < rmin) continue;
        const Vec2 n = u / r;
        const double cd = std::max(std::abs(n.dot(diag1)), std::abs(n.dot(diag2)));
        const double ca = std::max(std::abs(n.dot(ax1)), std::abs(n.dot(ax2)));
        if (cd >= cos_w) out.diag_prob += prob[i];
        if (ca >= cos_w) out.axis_prob += prob[i];
    }
    return out;
}

struct RadialFit {
    double xi_d{0.0}; // decay length in units of d
    double r2{0.0};
    int bins{0};
};

// Log-linear fit of bin-averaged ln|C| against radius, radii between
// rmin_cells and rmax_cells supercell lengths from the attach site.
inline RadialFit radial_decay_fit(const TiledLattice& lattice, std::size_t attach,
                                  const Eigen::VectorXcd& field, double rmin_cells = 2.0,
                                  double rmax_cells = 10.0) {
    const double cell_len = lattice.cell.T1.norm();
    const double rmin = rmin_cells * cell_len, rmax = rmax_cells * cell_len;
    const double bin_w = 0.5 * cell_len;
    const int nbins = static_cast<int>(std::ceil((rmax - rmin) / bin_w));
    std::vector<double> sum_log(nbins, 0.0), sum_r(nbins, 0.0);
    std::vector<int> count(nbins, 0);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const double a = std::abs(field(i));
        if (a < 1e-280) continue;
        const double r = detail::minimal_image(lattice, i, attach).norm();
        if (r < rmin || r >= rmax) continue;
        const int b = static_cast<int>((r - rmin) / bin_w);
        sum_log[b] += std::log(a);
        sum_r[b] += r;
        ++count[b];
    }
    std::vector<double> xs, ys;
    for (int b = 0; b < nbins; ++b) {
        if (count[b] < 3) continue;
        xs.push_back(sum_r[b] / count[b]);
        ys.push_back(sum_log[b] / count[b]);
    }
    RadialFit fit;
    fit.bins = static_cast<int>(xs.size());
    if (fit.bins < 3) return fit;
    double mx = 0, my = 0;
    for (std::size_t t = 0; t < xs.size(); ++t) {
        mx += xs[t];
        my += ys[t];
    }
    mx /= xs.size();
    my /= ys.size();
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t t = 0; t < xs.size(); ++t) {
        sxx += (xs[t] - mx) * (xs[t] - mx);
        sxy += (xs[t] - mx) * (ys[t] - my);
        syy += (ys[t] - my) * (ys[t] - my);
    }
    const double slope = sxy / sxx;
    fit.xi_d = slope < 0 ? -1.0 / slope : std::numeric_limits<double>::infinity();
    fit.r2 = syy > 0 ? sxy * sxy / (sxx * syy) : 0.0;
    return fit;
}

} // namespace detail

// Bound eigenstate of the single-excitation Hamiltonian for a detuning in a
// spectral gap, from the mode decomposition over the lattice's Bloch grid:
// the eigenvalue solves E - Delta = (g^2/N_k) sum |u_j(k;s0)|^2 / (E - w_jk)
// and the bath field follows by an inverse Bloch transform.
inline BoundState bound_state(const TiledLattice& lattice, const HoppingModel& model,
                              const EmitterSpec& emitter, int threads = 0) {
    model.validate();
    const std::size_t attach = resolve_attach_site(lattice, emitter);
    const int s0 = lattice.site_in_cell(attach);
    const int nc = lattice.nc;
    const int nm = lattice.cell.n_sites();
    const std::size_t nk = std::size_t(nc) * nc;
    const BondTable table = neighbor_table(lattice.cell, model);
    const MoireCell& cell = lattice.cell;

    // pass 1: eigenvalues and attach-site weights
    std::vector<double> omega(nk * nm), weight(nk * nm);
    parallel_for(
        nk,
        [&](std::size_t ik) {
            const int i = static_cast<int>(ik) / nc, j = static_cast<int>(ik) % nc;
            const Vec2 k = (double(i) / nc) * cell.B1 + (double(j) / nc) * cell.B2;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(bloch_matrix(table, cell, k));
            if (es.info() != Eigen::Success) throw NumericalError("bound_state: eigensolver failed");
            for (int b = 0; b < nm; ++b) {
                omega[ik * nm + b] = es.eigenvalues()(b);
                weight[ik * nm + b] = std::norm(es.eigenvectors()(s0, b));
            }
        },
        threads);

    // gap check against the band ranges of this grid
    const double delta = emitter.delta;
    for (int b = 0; b < nm; ++b) {
        double lo = omega[b], hi = omega[b];
        for (std::size_t ik = 1; ik < nk; ++ik) {
            lo = std::min(lo, omega[ik * nm + b]);
            hi = std::max(hi, omega[ik * nm + b]);
        }
        if (delta >= lo && delta <= hi)
            throw NotInGapError("bound_state: Delta = " + std::to_string(delta) +
                                " lies inside band " + std::to_string(b));
    }

    const double g = emitter.g;
    auto self_energy = [&](double e) {
        double acc = 0.0;
        for (std::size_t t = 0; t < omega.size(); ++t) acc += weight[t] / (e - omega[t]);
        return g * g * acc / double(nk);
    };
    auto secular = [&](double e) { return e - delta - self_energy(e); };

    double below = -std::numeric_limits<double>::infinity();
    double above = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < omega.size(); ++t) {
        if (weight[t] < 1e-14) continue;
        if (omega[t] < delta) below = std::max(below, omega[t]);
        if (omega[t] > delta) above = std::min(above, omega[t]);
    }
    const double margin = g * g + 1.0;
    double lo = std::isfinite(below) ? below : delta - margin;
    double hi = std::isfinite(above) ? above : delta + margin;
    const double eps = 1e-13 * std::max(1.0, hi - lo);
    lo += eps;
    hi -= eps;
    if (!(secular(lo) < 0.0 && secular(hi) > 0.0))
        throw NumericalError("bound_state: secular equation not bracketed in the gap");
    for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        (secular(mid) > 0.0 ? hi : lo) = mid;
    }
    const double energy = 0.5 * (lo + hi);

    double dsum = 0.0;
    for (std::size_t t = 0; t < omega.size(); ++t) {
        const double de = energy - omega[t];
        dsum += weight[t] / (de * de);
    }
    const double ce2 = 1.0 / (1.0 + g * g * dsum / double(nk));

    // pass 2: W_k(s) = sum_j u_j(k;s) u_j(k;s0)^* / (E - w_jk), then an
    // inverse Bloch transform onto the tiling
    std::vector<std::complex<double>> w_ks(nk * nm);
    parallel_for(
        nk,
        [&](std::size_t ik) {
            const int i = static_cast<int>(ik) / nc, j = static_cast<int>(ik) % nc;
            const Vec2 k = (double(i) / nc) * cell.B1 + (double(j) / nc) * cell.B2;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(bloch_matrix(table, cell, k));
            for (int s = 0; s < nm; ++s) {
                std::complex<double> acc(0.0, 0.0);
                for (int b = 0; b < nm; ++b)
                    acc += es.eigenvectors()(s, b) * std::conj(es.eigenvectors()(s0, b)) /
                           (energy - es.eigenvalues()(b));
                w_ks[ik * nm + s] = acc;
            }
        },
        threads);

    std::vector<std::complex<double>> twiddle(nc);
    for (int t = 0; t < nc; ++t)
        twiddle[t] = std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi * t / nc));

    BoundState bs;
    bs.energy = energy;
    bs.emitter_weight = ce2;
    bs.attach_site = attach;
    bs.field.resize(lattice.size());
    const double ce = std::sqrt(ce2);
    const int cx0 = lattice.cell_x(attach), cy0 = lattice.cell_y(attach);
    parallel_for(
        lattice.size(),
        [&](std::size_t site) {
            const int dx = ((lattice.cell_x(site) - cx0) % nc + nc) % nc;
            const int dy = ((lattice.cell_y(site) - cy0) % nc + nc) % nc;
            const int s = lattice.site_in_cell(site);
            std::complex<double> acc(0.0, 0.0);
            for (int i = 0; i < nc; ++i)
                for (int j = 0; j < nc; ++j)
                    acc += w_ks[(std::size_t(i) * nc + j) * nm + s] *
                           twiddle[(i * dx + j * dy) % nc];
            bs.field(site) = ce * g / double(nk) * acc;
        },
        threads);

    const auto fit = detail::radial_decay_fit(lattice, attach, bs.field);
    bs.xi = fit.xi_d / (cell.T1 + cell.T2).norm();
    bs.xi_fit_r2 = fit.r2;
    std::vector<double> prob(lattice.size());
    for (std::size_t i = 0; i < lattice.size(); ++i) prob[i] = std::norm(bs.field(i));
    bs.anisotropy = detail::sector_anisotropy(lattice, attach, prob.data()).ratio();
    return bs;
}

// Bath probabilities of an emission run plus the anisotropy of the pattern
// around the attach site.
struct Snapshot {
    std::vector<double> prob; // per lattice site
    double emitter_pop{0.0};
    double anisotropy{0.0};
    double bath_prob{0.0};
};

inline Snapshot snapshot(const TiledLattice& lattice, const EmissionResult& result) {
    Snapshot snap;
    snap.prob.resize(lattice.size());
    for (std::size_t i = 0; i < lattice.size(); ++i) snap.prob[i] = std::norm(result.final_field(i));
    snap.emitter_pop = std::norm(result.emitter_amplitude.back());
    for (double p : snap.prob) snap.bath_prob += p;
    snap.anisotropy =
        detail::sector_anisotropy(lattice, result.attach_site, snap.prob.data()).ratio();
    return snap;
}

// Emitter positions for the coupling matrix: a supercell plus a site index
// within it.
struct EmitterPosition {
    std::array<int, 2> cell{0, 0};
    int site{-1}; // -1 = coincidence a-site
};

struct CouplingMatrix {
    std::vector<EmitterPosition> positions;
    Eigen::MatrixXd j;     // dipole couplings J_ij, units of J
    Eigen::MatrixXd gamma; // collective decays gamma_ij
    std::vector<std::string> warnings;
};

// Second-order emitter-emitter couplings through the bath:
//   J_ij     = (g^2/N_k) sum_{k,b} u_b(k;s_i) u_b(k;s_j)^* e^{ik.(C_i-C_j)} / (Delta - w_bk)
//   gamma_ij = 2 pi (g^2/N_k) sum_{k,b} Re[...] delta_eta(Delta - w_bk)
inline CouplingMatrix effective_couplings(const MoireCell& cell, const HoppingModel& model,
                                          double g, double delta,
                                          std::vector<EmitterPosition> positions, int nk = 64,
                                          double eta = 0.1, int threads = 0) {
    model.validate();
    if (positions.empty()) throw std::invalid_argument("effective_couplings: no positions");
    const int nm = cell.n_sites();
    for (auto& p : positions) {
        if (p.site < 0) p.site = cell.coincidences.empty() ? 0 : cell.coincidences[0].first;
        if (p.site >= nm) throw std::invalid_argument("effective_couplings: site out of range");
    }
    const int np = static_cast<int>(positions.size());
    const int npairs = np * (np + 1) / 2;
    const BondTable table = neighbor_table(cell, model);
    const std::size_t nkk = std::size_t(nk) * nk;

    std::vector<std::complex<double>> jpart(nkk * npairs, {0.0, 0.0});
    std::vector<double> gpart(nkk * npairs, 0.0);
    std::vector<double> band_lo(nm, std::numeric_limits<double>::infinity());
    std::vector<double> band_hi(nm, -std::numeric_limits<double>::infinity());
    std::mutex range_mutex;

    parallel_for(
        nkk,
        [&](std::size_t ik) {
            const int i = static_cast<int>(ik) / nk, jj = static_cast<int>(ik) % nk;
            const Vec2 k = (double(i) / nk) * cell.B1 + (double(jj) / nk) * cell.B2;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(bloch_matrix(table, cell, k));
            if (es.info() != Eigen::Success)
                throw NumericalError("effective_couplings: eigensolver failed");
            std::vector<double> lo(nm), hi(nm);
            int pair = 0;
            for (int a = 0; a < np; ++a) {
                for (int b = a; b < np; ++b, ++pair) {
                    const Vec2 dc =
                        double(positions[a].cell[0] - positions[b].cell[0]) * cell.T1 +
                        double(positions[a].cell[1] - positions[b].cell[1]) * cell.T2;
                    const std::complex<double> phase =
                        std::exp(std::complex<double>(0.0, k.dot(dc)));
                    std::complex<double> jacc(0.0, 0.0);
                    double gacc = 0.0;
                    for (int m = 0; m < nm; ++m) {
                        const std::complex<double> overlap =
                            es.eigenvectors()(positions[a].site, m) *
                            std::conj(es.eigenvectors()(positions[b].site, m)) * phase;
                        jacc += overlap / (delta - es.eigenvalues()(m));
                        gacc += overlap.real() *
                                detail::gaussian_delta(delta - es.eigenvalues()(m), eta);
                    }
                    jpart[ik * npairs + pair] = jacc;
                    gpart[ik * npairs + pair] = gacc;
                }
            }
            {
                std::lock_guard<std::mutex> lock(range_mutex);
                for (int m = 0; m < nm; ++m) {
                    band_lo[m] = std::min(band_lo[m], es.eigenvalues()(m));
                    band_hi[m] = std::max(band_hi[m], es.eigenvalues()(m));
                }
            }
        },
        threads);

    CouplingMatrix out;
    out.positions = positions;
    out.j = Eigen::MatrixXd::Zero(np, np);
    out.gamma = Eigen::MatrixXd::Zero(np, np);
    const double pref = g * g / double(nkk);
    int pair = 0;
    for (int a = 0; a < np; ++a) {
        for (int b = a; b < np; ++b, ++pair) {
            std::complex<double> jsum(0.0, 0.0);
            double gsum = 0.0;
            for (std::size_t ik = 0; ik < nkk; ++ik) {
                jsum += jpart[ik * npairs + pair];
                gsum += gpart[ik * npairs + pair];
            }
            out.j(a, b) = out.j(b, a) = pref * jsum.real();
            out.gamma(a, b) = out.gamma(b, a) = 2.0 * std::numbers::pi * pref * gsum;
        }
    }
    for (int m = 0; m < nm; ++m) {
        if (std::abs(delta - band_lo[m]) < eta || std::abs(delta - band_hi[m]) < eta) {
            out.warnings.push_back("Delta within eta of a band edge: couplings ill-conditioned");
            break;
        }
    }
    return out;
}

} // namespace twistlat
