#include "oscsym/phasespace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <unsupported/Eigen/MatrixFunctions>

namespace oscsym {

namespace {

Eigen::Matrix4d dense_real(const ExactMatrix& m) {
    if (m.n() != 4) throw DimensionError("expected a 4x4 matrix");
    Eigen::Matrix4d d;
    for (int r = 0; r < 4; r++)
        for (int c = 0; c < 4; c++) {
            const GaussRational& v = m.at(r, c);
            if (!v.im.is_zero()) throw Error("matrix is not real");
            d(r, c) = v.re.to_double();
        }
    return d;
}

}  // namespace

SymplecticForm::SymplecticForm(ExactMatrix J, Ordering ordering)
    : J_(std::move(J)), dense_(Eigen::Matrix4d::Zero()), ordering_(ordering) {
    if (J_.n() != 4) throw DimensionError("symplectic form must be 4x4");
    if (!J_.is_real()) throw Error("symplectic form must be real");
    if (!J_.is_antisymmetric()) throw Error("symplectic form must be antisymmetric");
    if (J_ * J_ != -ExactMatrix::identity(4))
        throw Error("symplectic form must square to -I");
    for (int r = 0; r < 4; r++)
        for (int c = 0; c < 4; c++) {
            const Rational& re = J_.at(r, c).re;
            if (!re.is_zero() && re != Rational(1) && re != Rational(-1))
                throw Error("symplectic form entries must lie in {0, +/-1}");
        }
    dense_ = dense_real(J_);
}

SymplecticForm j_matrix(Ordering ordering) {
    if (ordering == Ordering::Interleaved) return pivot_form(GeneratorName::S3);
    // [[0, I], [-I, 0]] on (x1, x2, p1, p2); equal to reorder of the
    // interleaved form, and to 2i L2 read in traditional ordering.
    ExactMatrix J(4);
    J.set(0, 2, GaussRational(1));
    J.set(1, 3, GaussRational(1));
    J.set(2, 0, GaussRational(-1));
    J.set(3, 1, GaussRational(-1));
    return SymplecticForm(std::move(J), Ordering::Traditional);
}

SymplecticForm pivot_form(GeneratorName pivot) {
    switch (pivot) {
        case GeneratorName::S1:
        case GeneratorName::S2:
        case GeneratorName::S3:
        case GeneratorName::L1:
        case GeneratorName::L2:
        case GeneratorName::L3: break;
        default:
            throw Error("pivot_form: " + to_string(pivot) + " is not a rotation-family pivot");
    }
    ExactMatrix J = sp4_generator(pivot, Ordering::Interleaved)
                        .times_i()
                        .scalar_mul(GaussRational(2));
    return SymplecticForm(std::move(J), Ordering::Interleaved);
}

GroupElement exp_generator(GeneratorName name, double theta, Ordering ordering) {
    const ExactMatrix* X;
    ExactMatrix storage(4);
    if (ordering == Ordering::Interleaved || is_sp4_member(name)) {
        X = &sp4_generator(name, ordering);
    } else {
        storage = reorder(sp4_generator(name, Ordering::Interleaved),
                          Ordering::Interleaved, Ordering::Traditional);
        X = &storage;
    }
    Eigen::Matrix4d Y = dense_real(X->times_i());  // iX is real for all fifteen
    Eigen::Matrix4d M = (theta * Y).exp();
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", theta);
    return {M, ordering, to_string(name) + ":" + buf};
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
    if (a.ordering != b.ordering)
        throw OrderingMismatchError("compose: orderings differ");
    return {b.M * a.M, a.ordering, "composite"};
}

double canonical_defect(const GroupElement& m, const SymplecticForm& form) {
    if (m.ordering != form.ordering())
        throw OrderingMismatchError("canonical_defect: orderings differ");
    const Eigen::Matrix4d& J = form.dense();
    return (m.M * J * m.M.transpose() - J).cwiseAbs().maxCoeff();
}

bool is_canonical(const GroupElement& m, const SymplecticForm& form, double tol) {
    return canonical_defect(m, form) <= tol;
}

bool generator_is_canonical(GeneratorName name, const SymplecticForm& form) {
    const ExactMatrix* X;
    ExactMatrix storage(4);
    if (form.ordering() == Ordering::Interleaved || is_sp4_member(name)) {
        X = &sp4_generator(name, form.ordering());
    } else {
        storage = reorder(sp4_generator(name, Ordering::Interleaved),
                          Ordering::Interleaved, Ordering::Traditional);
        X = &storage;
    }
    ExactMatrix Y = X->times_i();
    return (Y * form.exact() + form.exact() * Y.transpose()).is_zero();
}

Classification classify_generators(const SymplecticForm& form) {
    Classification c;
    for (GeneratorName g : kAllGenerators) {
        if (generator_is_canonical(g, form))
            c.canonical.push_back(g);
        else
            c.noncanonical.push_back(g);
    }
    return c;
}

GaussianState make_state(const Eigen::Vector4d& mean, const Eigen::Matrix4d& cov,
                         Ordering ordering) {
    if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-14)
        throw Error("covariance must be symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(cov);
    if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
        throw Error("covariance must be positive-definite");
    return {mean, cov, ordering};
}

GaussianState vacuum_state() {
    return {Eigen::Vector4d::Zero(), 0.5 * Eigen::Matrix4d::Identity(),
            Ordering::Interleaved};
}

GaussianState coupled_ground_state(double eta, double alpha) {
    double c = std::cos(alpha / 2.0), s = std::sin(alpha / 2.0);
    // parallel rotation of (x1,x2) and (p1,p2) by alpha/2 = exp(alpha iL2)
    Eigen::Matrix4d R = Eigen::Matrix4d::Zero();
    R(0, 0) = c;
    R(0, 2) = s;
    R(2, 0) = -s;
    R(2, 2) = c;
    R(1, 1) = c;
    R(1, 3) = s;
    R(3, 1) = -s;
    R(3, 3) = c;
    Eigen::Vector4d d(std::exp(-eta), std::exp(eta), std::exp(eta), std::exp(-eta));
    Eigen::Matrix4d cov = 0.5 * R * d.asDiagonal() * R.transpose();
    return make_state(Eigen::Vector4d::Zero(), cov, Ordering::Interleaved);
}

GaussianState transform_state(const GaussianState& s, const GroupElement& m) {
    if (s.ordering != m.ordering)
        throw OrderingMismatchError("transform_state: orderings differ");
    return {m.M * s.mean, m.M * s.cov * m.M.transpose(), s.ordering};
}

std::pair<double, double> symplectic_eigenvalues(const GaussianState& s) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> check(s.cov);
    if (check.eigenvalues().minCoeff() <= 0.0)
        throw Error("symplectic_eigenvalues: covariance not positive-definite");
    const Eigen::Matrix4d J = j_matrix(s.ordering).dense();
    Eigen::EigenSolver<Eigen::Matrix4d> es(J * s.cov);
    std::array<double, 4> mods{};
    for (int k = 0; k < 4; k++) mods[k] = std::abs(es.eigenvalues()(k));
    std::sort(mods.begin(), mods.end());
    // eigenvalues come in +/- i nu pairs; average each pair for stability
    return {0.5 * (mods[0] + mods[1]), 0.5 * (mods[2] + mods[3])};
}

bool uncertainty_ok(const GaussianState& s) {
    auto [nu1, nu2] = symplectic_eigenvalues(s);
    (void)nu2;
    return nu1 >= 0.5 - 1e-12;
}

double wigner_eval(const GaussianState& s, const Eigen::Vector4d& point) {
    double det = s.cov.determinant();
    if (!(det > 0.0)) throw Error("wigner_eval: singular covariance");
    Eigen::Vector4d d = point - s.mean;
    double quad = d.dot(s.cov.llt().solve(d));
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::exp(-0.5 * quad) / (two_pi * two_pi * std::sqrt(det));
}

}  // namespace oscsym
