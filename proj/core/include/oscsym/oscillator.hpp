#pragma once

// Two-oscillator Hamiltonian pipeline: mass reduction, normal-form
// parameters (K, eta, alpha), reconstruction, energy spectra, and the
// quadratic forms / flow generators of the normal-mode Hamiltonians.
// Floating point throughout (logs and square roots are irrational).

#include <optional>

#include <Eigen/Dense>

#include "oscsym/catalog.hpp"
#include "oscsym/errors.hpp"

namespace oscsym {

// Masses and raw potential coefficients of
//   H = p1^2/2m1 + p2^2/2m2 + (A' x1^2 + B' x2^2 + C' x1 x2)/2.
struct RawParams {
    double m1, m2;
    double Aprime, Bprime, Cprime;
};

// After the reciprocal quarter-power scale change that equalizes the
// masses: m = sqrt(m1 m2), A/B rescaled, C invariant.
struct ReducedParams {
    double m;
    double A, B, C;
};

// Normal-form parameters: overall strength K, squeeze eta (always <= 0),
// rotation angle alpha in (-pi, pi], and omega = sqrt(K/m).
struct NormalForm {
    double K;
    double eta;
    double alpha;
    double omega;
};

enum class SpectrumVariant { Uncoupled, Coupled_H };

struct SpectrumSpec {
    int n1 = 0;
    int n2 = 0;
    SpectrumVariant variant = SpectrumVariant::Uncoupled;
};

// Throws InadmissibleParametersError unless m1,m2 > 0, A' > 0, B' > 0 and
// 4A'B' - C'^2 > 0 (strict).
ReducedParams reduce(const RawParams& raw);

// alpha = atan2(C, B - A); K = sqrt(AB - C^2/4);
// eta = -(1/2) ln[(A + B + sqrt((A-B)^2 + C^2)) / sqrt(4AB - C^2)].
// Degenerate C = 0, A = B gives alpha = 0 by convention (any angle works
// when eta = 0).
NormalForm normal_form(const ReducedParams& p);

// Exact inverse of normal_form:
//   A = K(e^{2eta} cos^2(a/2) + e^{-2eta} sin^2(a/2))
//   B = K(e^{2eta} sin^2(a/2) + e^{-2eta} cos^2(a/2))
//   C = K(e^{-2eta} - e^{2eta}) sin a
struct PotentialCoeffs {
    double A, B, C;
};
PotentialCoeffs reconstruct(const NormalForm& nf);

// Energy in units of omega.  Uncoupled: n1 + n2 + 1.  Coupled_H:
// e^{eta} n1 + e^{-eta} n2 + 1 (requires a normal form).
double spectrum(const std::optional<NormalForm>& nf, const SpectrumSpec& spec);

// Quadratic form Q of H = (1/2) z^T Q z in the normal-mode frame
// (y1, q1, y2, q2), interleaved by default.
enum class HamiltonianVariant {
    Coupled,    // diag(e^{2eta}, 1, e^{-2eta}, 1)
    Hprime,     // diag(e^{eta}, e^{-eta}, e^{-eta}, e^{eta})
    Decoupled,  // identity
};
Eigen::Matrix4d quadratic_form(HamiltonianVariant variant, double eta,
                               Ordering ordering = Ordering::Interleaved);

// Hamilton's equations for quadratic H read dz/dt = J Q z; returns J*Q.
Eigen::Matrix4d flow_generator(const Eigen::Matrix4d& Q, const Eigen::Matrix4d& J);

}  // namespace oscsym
