// propagator.hpp — Chebyshev expansion of exp(-i H dt) for sparse Hermitian
// operators. Exact to machine precision for time-independent H, so norm and
// energy are conserved to ~1e-14 per step.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "twistlat/errors.hpp"
#include "twistlat/model.hpp"

namespace twistlat {

class ChebyshevPropagator {
  public:
    // bound: spectral radius estimate; the spectrum must lie in
    // [-bound, bound]. dt may be negative (backward evolution).
    ChebyshevPropagator(const RealSpaceOperator& h, double bound, double dt, int threads = 0)
        : h_(h), scale_(bound), threads_(threads) {
        if (!(bound > 0)) throw std::invalid_argument("ChebyshevPropagator: bound must be positive");
        const double z = bound * dt;
        const double za = std::abs(z);
        // c_k = (2 - delta_k0) (-i)^k J_k(z); for z < 0 use
        // J_k(-|z|) = (-1)^k J_k(|z|), folding the sign into the power.
        const std::complex<double> base = z >= 0 ? std::complex<double>(0.0, -1.0)
                                                 : std::complex<double>(0.0, 1.0);
        std::complex<double> powk(1.0, 0.0);
        int tail = 0;
        for (int k = 0; k < 8 * 1024; ++k) {
            const double jk = std::cyl_bessel_j(k, za);
            coeff_.push_back((k == 0 ? 1.0 : 2.0) * powk * jk);
            powk *= base;
            tail = std::abs(jk) < 1e-17 ? tail + 1 : 0;
            if (k > za && tail >= 4) break;
        }
        work_.assign(4 * h_.dim, {0.0, 0.0});
    }

    // psi <- exp(-i H dt) psi
    void step(std::vector<std::complex<double>>& psi) {
        const std::size_t n = h_.dim;
        std::complex<double>* t0 = work_.data();
        std::complex<double>* t1 = work_.data() + n;
        std::complex<double>* t2 = work_.data() + 2 * n;
        std::complex<double>* acc = work_.data() + 3 * n;

        for (std::size_t i = 0; i < n; ++i) t0[i] = psi[i];
        h_.apply(t0, t1, threads_);
        for (std::size_t i = 0; i < n; ++i) {
            t1[i] /= scale_;
            acc[i] = coeff_[0] * t0[i] + coeff_[1] * t1[i];
        }
        for (std::size_t k = 2; k < coeff_.size(); ++k) {
            h_.apply(t1, t2, threads_);
            const std::complex<double> c = coeff_[k];
            for (std::size_t i = 0; i < n; ++i) {
                t2[i] = 2.0 / scale_ * t2[i] - t0[i];
                acc[i] += c * t2[i];
            }
            std::swap(t0, t1);
            std::swap(t1, t2);
        }
        for (std::size_t i = 0; i < n; ++i) psi[i] = acc[i];
    }

    std::size_t terms() const { return coeff_.size(); }

  private:
    const RealSpaceOperator& h_;
    double scale_;
    int threads_;
    std::vector<std::complex<double>> coeff_;
    std::vector<std::complex<double>> work_;
};

} // namespace twistlat
