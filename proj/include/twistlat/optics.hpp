// optics.hpp — Twisted standing-wave intensity profiles, state-dependent
// potentials for the three implementation schemes, and feasibility reports.
//
// All rates and detunings are angular frequencies in one consistent unit
// (the CLI uses MHz/(2 pi)). Lengths are in units of the lattice constant
// d = lambda/2, so the lattice wavenumber is k d = pi.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "twistlat/errors.hpp"
#include "twistlat/geometry.hpp"

namespace twistlat {

inline constexpr double kLatticeWavenumber = std::numbers::pi; // 2 pi / lambda in 1/d

// Time-averaged intensity profiles of the two orthogonally polarized
// standing-wave pairs. sigma is the unrotated square pattern, pi the one
// rotated by theta. Values lie in [0, 2].
struct IntensityProfile {
    enum class Kind { sigma, pi };
    Kind kind{Kind::sigma};
    double theta{0.0};
    double k{kLatticeWavenumber};
};

inline double intensity(const IntensityProfile& p, Vec2 r) {
    auto sq = [](double x) { return x * x; };
    if (p.kind == IntensityProfile::Kind::sigma)
        return sq(std::sin(p.k * r.x())) + sq(std::sin(p.k * r.y()));
    const double c = std::cos(p.theta), s = std::sin(p.theta);
    return sq(std::sin(p.k * (r.x() * s - r.y() * c))) +
           sq(std::sin(p.k * (r.x() * c + r.y() * s)));
}

// ---------------------------------------------------------------- schemes

// Directly split a/b levels dressed off-resonantly by one unstable state.
struct IdealParams {
    double omega_a{0.0}, omega_b{0.0}; // effective Rabi amplitudes
    double delta_a{1.0}, delta_b{1.0}; // detunings of the two transitions
    double splitting{1.0};             // delta = omega_b - omega_a level splitting
    double gamma_g{0.0};               // decay rate of the dressing state
};

// Hyperfine clock levels dressed by the stable ground state; each potential
// picks up a correction from the other polarization.
struct HyperfineParams {
    double omega_a{0.0}, omega_b{0.0};
    double delta_a{1.0}, delta_b{1.0};
    double splitting_g{1.0}; // ground-state hyperfine splitting delta_g
};

// Fine-structure levels addressed through a two-photon transition with a
// global dressing laser omega_p.
struct FineStructureParams {
    double omega_p{0.0}, delta_p{1.0};
    double omega_a{0.0}, omega_b{0.0};
    double delta_a{1.0}, delta_b{1.0};
    double gamma_g{0.0}; // decay rate of the intermediate states
};

// Two independent wavelengths at which one clock state's polarizability
// vanishes; the shorter one arrives tilted out of plane.
struct TurnoutParams {
    double lambda1{1.0}, lambda2{1.0}; // wavelengths, lambda2 < lambda1
    double gamma_e{0.0};               // excited-state decay rate
    double delta{1.0};                 // detuning from the dressing state
    double omega{0.0};                 // effective Rabi amplitude
};

using SchemeParams = std::variant<IdealParams, HyperfineParams, FineStructureParams, TurnoutParams>;

inline const char* scheme_name(const SchemeParams& p) {
    static const char* names[] = {"ideal", "hyperfine", "fine_structure", "turnout"};
    return names[p.index()];
}

// Hard errors throw; soft issues (perturbative-regime stretch) come back as
// warning strings.
inline std::vector<std::string> validate(const SchemeParams& params) {
    std::vector<std::string> warnings;
    auto check_detuning = [](double d, const char* name) {
        if (d == 0.0) throw SingularParameterError(std::string("zero detuning ") + name);
    };
    auto dressing = [&warnings](double om, double det, const char* name) {
        if (std::abs(om) > 0.5 * std::abs(det))
            warnings.push_back(std::string(name) +
                               ": dressing ratio above 0.5, potential formula is perturbative");
    };
    if (const auto* p = std::get_if<IdealParams>(&params)) {
        check_detuning(p->delta_a, "delta_a");
        check_detuning(p->delta_b, "delta_b");
        check_detuning(p->splitting, "splitting");
        dressing(p->omega_a, p->delta_a, "omega_a");
        dressing(p->omega_b, p->delta_b, "omega_b");
    } else if (const auto* p = std::get_if<HyperfineParams>(&params)) {
        check_detuning(p->delta_a, "delta_a");
        check_detuning(p->delta_b, "delta_b");
        if (p->delta_a + p->splitting_g == 0.0 || p->delta_b + p->splitting_g == 0.0)
            throw SingularParameterError("hyperfine: delta + splitting_g vanishes");
        dressing(p->omega_a, p->delta_a, "omega_a");
        dressing(p->omega_b, p->delta_b, "omega_b");
    } else if (const auto* p = std::get_if<FineStructureParams>(&params)) {
        check_detuning(p->delta_a, "delta_a");
        check_detuning(p->delta_b, "delta_b");
        check_detuning(p->delta_p, "delta_p");
        dressing(p->omega_p, p->delta_p, "omega_p");
    } else if (const auto* p = std::get_if<TurnoutParams>(&params)) {
        if (p->lambda1 <= 0.0 || p->lambda2 <= 0.0)
            throw SingularParameterError("turnout: wavelengths must be positive");
        if (p->lambda2 >= p->lambda1)
            throw SingularParameterError("turnout: requires lambda2 < lambda1");
        check_detuning(p->delta, "delta");
        dressing(p->omega, p->delta, "omega");
    }
    return warnings;
}

// ------------------------------------------------------------- potentials

// V_alpha(R) = -|omega_alpha|^2 / delta_alpha * I_alpha(R) with the a state
// on the unrotated sigma profile and the b state on the rotated pi profile.
inline std::pair<double, double> potential_ideal(const IdealParams& p, Vec2 r, double theta) {
    if (p.delta_a == 0.0 || p.delta_b == 0.0)
        throw SingularParameterError("potential_ideal: zero detuning");
    const double ia = intensity({IntensityProfile::Kind::sigma, theta}, r);
    const double ib = intensity({IntensityProfile::Kind::pi, theta}, r);
    return {-p.omega_a * p.omega_a / p.delta_a * ia, -p.omega_b * p.omega_b / p.delta_b * ib};
}

// Hyperfine potentials with the correction term of the other polarization;
// note the a state rides the rotated pi profile in this scheme. Assumes the
// depth-balance condition |omega_a|^2/delta_a = |omega_b|^2/delta_b = V_D.
struct HyperfinePotential {
    double v_a, v_b;              // potentials at R
    double residual_a, residual_b; // dimensionless prefactors of the unwanted terms
};

inline HyperfinePotential potential_hyperfine(const HyperfineParams& p, Vec2 r, double theta) {
    if (p.delta_a + p.splitting_g == 0.0 || p.delta_b + p.splitting_g == 0.0)
        throw SingularParameterError("potential_hyperfine: delta + splitting_g vanishes");
    if (p.delta_a == 0.0 || p.delta_b == 0.0)
        throw SingularParameterError("potential_hyperfine: zero detuning");
    const double vd = p.omega_a * p.omega_a / p.delta_a;
    const double ra = p.delta_b / (p.delta_a + p.splitting_g);
    const double rb = p.delta_a / (p.delta_b + p.splitting_g);
    const double isig = intensity({IntensityProfile::Kind::sigma, theta}, r);
    const double ipi = intensity({IntensityProfile::Kind::pi, theta}, r);
    return {-vd * (ipi + ra * isig), -vd * (isig + rb * ipi), ra, rb};
}

// ------------------------------------------------------------ feasibility

struct TrapParameters {
    double omega_t;      // trap frequency, 2 sqrt(V_D E_R)
    double l0_over_d;    // Wannier gaussian width, (E_R/V_D)^(1/4) / pi
    double j_ratio_diag; // diagonal-to-nearest-neighbour hopping factor
    double u_estimate;   // on-site interaction; 0 unless a_s and L_z given
};

// Harmonic expansion of the -V_D sin^2 potential around a trap minimum.
// a_s and l_z are in units of d.
inline TrapParameters trap_parameters(double v_d, double e_r, double a_s = 0.0,
                                      double l_z = 0.0) {
    if (!(e_r > 0.0)) throw std::invalid_argument("trap_parameters: E_R must be positive");
    if (!(v_d > e_r))
        throw ShallowTrapError("trap_parameters: V_D <= E_R, atoms are not trapped");
    TrapParameters t{};
    t.omega_t = 2.0 * std::sqrt(v_d * e_r);
    t.l0_over_d = std::pow(e_r / v_d, 0.25) / std::numbers::pi;
    t.j_ratio_diag = std::exp(-1.0 / (4.0 * t.l0_over_d * t.l0_over_d));
    t.u_estimate = 0.0;
    if (a_s != 0.0 && l_z > 0.0) {
        const double pref = (8.0 / std::numbers::pi) * std::pow(2.0 * std::numbers::pi, -1.5);
        t.u_estimate = pref * e_r * a_s / (t.l0_over_d * t.l0_over_d * l_z);
    }
    return t;
}

struct FeasibilityThresholds {
    double leakage_max{1e-2};            // largest acceptable eps_2ph
    double coherence_max_over_er{1e-2};  // Gamma* bound in units of E_R
};

struct FeasibilityReport {
    std::string scheme;
    double v_d{0.0};          // trap depth
    double e_r{0.0};          // recoil energy
    double eps_2ph{0.0};      // two-photon leakage probability (V_D/delta)^2
    double gamma_star{0.0};   // residual decoherence rate
    double omega_t{0.0};
    double l0_over_d{0.0};
    double j_ratio_diag{0.0};
    double u_estimate{0.0};
    double alpha_tilt{0.0};   // out-of-plane beam angle, turnout scheme only
    bool depth_ok{false};
    bool leakage_ok{false};
    bool coherence_ok{false};
    std::vector<std::string> warnings;
};

// Scheme-specific depth, leakage, and decoherence estimates plus the trap
// numbers derived from them. Out-of-regime parameters clear the flags, they
// do not throw.
inline FeasibilityReport feasibility(const SchemeParams& params, double e_r, double a_s = 0.0,
                                     double l_z = 0.0,
                                     const FeasibilityThresholds& thresholds = {}) {
    if (!(e_r > 0.0)) throw std::invalid_argument("feasibility: E_R must be positive");
    FeasibilityReport rep;
    rep.scheme = scheme_name(params);
    rep.e_r = e_r;
    rep.warnings = validate(params);

    if (const auto* p = std::get_if<IdealParams>(&params)) {
        rep.v_d = p->omega_a * p->omega_a / p->delta_a;
        rep.eps_2ph = (rep.v_d / p->splitting) * (rep.v_d / p->splitting);
        rep.gamma_star =
            std::abs(rep.v_d / std::min(std::abs(p->delta_a), std::abs(p->delta_b))) * p->gamma_g;
    } else if (const auto* p = std::get_if<HyperfineParams>(&params)) {
        rep.v_d = p->omega_a * p->omega_a / p->delta_a;
        // leakage suppressed by the ground-state splitting; dressing state is
        // stable so no Gamma*
        rep.eps_2ph = (rep.v_d / p->splitting_g) * (rep.v_d / p->splitting_g);
        rep.gamma_star = 0.0;
    } else if (const auto* p = std::get_if<FineStructureParams>(&params)) {
        const double frac = (p->omega_p / p->delta_p) * (p->omega_p / p->delta_p);
        rep.v_d = frac * p->omega_a * p->omega_a / p->delta_a;
        const double split = std::abs(p->delta_a - p->delta_b);
        rep.eps_2ph = split > 0.0 ? (rep.v_d / split) * (rep.v_d / split)
                                  : std::numeric_limits<double>::infinity();
        rep.gamma_star = frac * p->gamma_g;
    } else if (const auto* p = std::get_if<TurnoutParams>(&params)) {
        rep.v_d = p->omega * p->omega / p->delta;
        rep.eps_2ph = 0.0; // independent wavelengths, no cross two-photon channel
        rep.gamma_star = (p->omega / p->delta) * (p->omega / p->delta) * p->gamma_e;
        rep.alpha_tilt = std::acos(p->lambda2 / p->lambda1);
    }

    rep.depth_ok = rep.v_d > e_r;
    rep.leakage_ok = rep.eps_2ph <= thresholds.leakage_max;
    rep.coherence_ok = rep.gamma_star <= thresholds.coherence_max_over_er * e_r;
    if (rep.v_d > 0.0) {
        rep.omega_t = 2.0 * std::sqrt(rep.v_d * e_r);
        rep.l0_over_d = std::pow(e_r / rep.v_d, 0.25) / std::numbers::pi;
        rep.j_ratio_diag = std::exp(-1.0 / (4.0 * rep.l0_over_d * rep.l0_over_d));
        if (a_s != 0.0 && l_z > 0.0) {
            const double pref = (8.0 / std::numbers::pi) * std::pow(2.0 * std::numbers::pi, -1.5);
            rep.u_estimate = pref * e_r * a_s / (rep.l0_over_d * rep.l0_over_d * l_z);
        }
    }
    return rep;
}

} // namespace twistlat
