#include "oscsym/oscillator.hpp"

#include <cmath>

namespace oscsym {

namespace {

void require_admissible(double A, double B, double C, const char* what) {
    if (!(A > 0.0) || !(B > 0.0))
        throw InadmissibleParametersError(std::string(what) + ": need A > 0 and B > 0");
    if (!(4.0 * A * B - C * C > 0.0))
        throw InadmissibleParametersError(std::string(what) + ": need 4AB - C^2 > 0");
}

}  // namespace

ReducedParams reduce(const RawParams& raw) {
    if (!(raw.m1 > 0.0) || !(raw.m2 > 0.0))
        throw InadmissibleParametersError("reduce: masses must be positive");
    require_admissible(raw.Aprime, raw.Bprime, raw.Cprime, "reduce");
    // x1 -> (m1/m2)^{1/4} x1 and x2 -> (m2/m1)^{1/4} x2 (momenta scaled
    // reciprocally) equalize the kinetic masses at sqrt(m1 m2) and leave
    // the cross coefficient alone.
    double s = std::sqrt(raw.m2 / raw.m1);
    return {std::sqrt(raw.m1 * raw.m2), raw.Aprime * s, raw.Bprime / s, raw.Cprime};
}

NormalForm normal_form(const ReducedParams& p) {
    if (!(p.m > 0.0)) throw InadmissibleParametersError("normal_form: mass must be positive");
    require_admissible(p.A, p.B, p.C, "normal_form");
    double A = p.A, B = p.B, C = p.C;
    double alpha = (C == 0.0 && A == B) ? 0.0 : std::atan2(C, B - A);
    double disc = 4.0 * A * B - C * C;
    double K = std::sqrt(disc) / 2.0;
    // eta = -1/2 log(ratio) with ratio = (A + B + s)/sqrt(4AB - C^2),
    // s = sqrt((A-B)^2 + C^2).  Near the uncoupled point the ratio is
    // 1 + tiny; evaluate ratio - 1 cancellation-free via
    //   (A+B+s)^2 - (4AB - C^2) = 2s(s + A + B)
    // and feed log1p.
    double s = std::hypot(A - B, C);
    double root = std::sqrt(disc);
    double rm1 = 2.0 * s * (s + A + B) / (root * (A + B + s + root));
    double eta = -0.5 * std::log1p(rm1);
    return {K, eta, alpha, std::sqrt(K / p.m)};
}

PotentialCoeffs reconstruct(const NormalForm& nf) {
    if (!(nf.K > 0.0)) throw InadmissibleParametersError("reconstruct: K must be positive");
    double c = std::cos(nf.alpha / 2.0), s = std::sin(nf.alpha / 2.0);
    double e2 = std::exp(2.0 * nf.eta), em2 = std::exp(-2.0 * nf.eta);
    return {
        nf.K * (e2 * c * c + em2 * s * s),
        nf.K * (e2 * s * s + em2 * c * c),
        nf.K * (em2 - e2) * std::sin(nf.alpha),
    };
}

double spectrum(const std::optional<NormalForm>& nf, const SpectrumSpec& spec) {
    if (spec.n1 < 0 || spec.n2 < 0)
        throw InadmissibleParametersError("spectrum: excitation numbers must be >= 0");
    switch (spec.variant) {
        case SpectrumVariant::Uncoupled:
            return spec.n1 + spec.n2 + 1.0;
        case SpectrumVariant::Coupled_H: {
            if (!nf) throw InadmissibleParametersError("spectrum: Coupled_H needs a normal form");
            return std::exp(nf->eta) * spec.n1 + std::exp(-nf->eta) * spec.n2 + 1.0;
        }
    }
    throw Error("spectrum: unreachable");
}

Eigen::Matrix4d quadratic_form(HamiltonianVariant variant, double eta, Ordering ordering) {
    Eigen::Vector4d d = Eigen::Vector4d::Ones();  // interleaved (y1, q1, y2, q2)
    switch (variant) {
        case HamiltonianVariant::Coupled:
            // (1/2)e^{eta}(e^{-eta} q1^2 + e^{eta} y1^2) + mode-2 mirror:
            // coefficients (e^{2eta}, 1) and (e^{-2eta}, 1).
            d << std::exp(2.0 * eta), 1.0, std::exp(-2.0 * eta), 1.0;
            break;
        case HamiltonianVariant::Hprime:
            d << std::exp(eta), std::exp(-eta), std::exp(-eta), std::exp(eta);
            break;
        case HamiltonianVariant::Decoupled:
            d << 1.0, 1.0, 1.0, 1.0;
            break;
    }
    Eigen::Matrix4d Q = d.asDiagonal();
    if (ordering == Ordering::Traditional) {
        // same permutation as catalog reorder(): swap coordinates 1 and 2
        Eigen::Matrix4d P = Eigen::Matrix4d::Zero();
        P(0, 0) = P(1, 2) = P(2, 1) = P(3, 3) = 1.0;
        Q = P * Q * P.transpose();
    }
    return Q;
}

Eigen::Matrix4d flow_generator(const Eigen::Matrix4d& Q, const Eigen::Matrix4d& J) {
    if (!Q.isApprox(Q.transpose(), 1e-12))
        throw Error("flow_generator: Q must be symmetric");
    return J * Q;
}

}  // namespace oscsym
