#pragma once

// Symplectic forms, one-parameter group elements, canonical classification,
// Gaussian Wigner states, and the uncertainty gate.  Exact arithmetic for
// the classification tests; binary64 for exponentials and eigenvalues.

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "oscsym/catalog.hpp"
#include "oscsym/exact.hpp"

namespace oscsym {

// An antisymmetric form with entries in {0, +/-1} and J^2 = -I, bound to a
// coordinate ordering.  Kept exact so generator classification needs no
// tolerance.
class SymplecticForm {
  public:
    SymplecticForm(ExactMatrix J, Ordering ordering);

    const ExactMatrix& exact() const { return J_; }
    const Eigen::Matrix4d& dense() const { return dense_; }
    Ordering ordering() const { return ordering_; }

  private:
    ExactMatrix J_;
    Eigen::Matrix4d dense_;
    Ordering ordering_;
};

// The physical form for an ordering: Interleaved is block-diag of the
// 2x2 rotation form per mode; Traditional is [[0, I], [-I, 0]].
SymplecticForm j_matrix(Ordering ordering);

// The form 2i * X_pivot for a rotation-family pivot (S1, S2, S3, L1, L2,
// L3); each is real antisymmetric with square -I.  The S3 pivot form is
// exactly j_matrix(Interleaved).
SymplecticForm pivot_form(GeneratorName pivot);

// A real 4x4 one-parameter group element M = exp(i theta X) together with
// where it came from.
struct GroupElement {
    Eigen::Matrix4d M;
    Ordering ordering;
    std::string provenance;  // "NAME:theta" or "composite"
};

GroupElement exp_generator(GeneratorName name, double theta, Ordering ordering);
GroupElement compose(const GroupElement& a, const GroupElement& b);  // a then b applied: M = b.M * a.M

// max-norm of M J M^T - J; the canonical test is defect <= tol.
double canonical_defect(const GroupElement& m, const SymplecticForm& form);
bool is_canonical(const GroupElement& m, const SymplecticForm& form, double tol = 1e-12);

// Exact infinitesimal test (iX) J + J (iX)^T = 0 on the catalog matrix,
// equivalent to is_canonical(exp_generator(name, theta)) for every theta.
bool generator_is_canonical(GeneratorName name, const SymplecticForm& form);

// Splits all fifteen names by the exact test above.
struct Classification {
    std::vector<GeneratorName> canonical;
    std::vector<GeneratorName> noncanonical;
};
Classification classify_generators(const SymplecticForm& form);

// Gaussian Wigner state: mean and covariance.  Invariants (symmetry to
// 1e-14, positive-definiteness) enforced at construction.
struct GaussianState {
    Eigen::Vector4d mean;
    Eigen::Matrix4d cov;
    Ordering ordering;
};
GaussianState make_state(const Eigen::Vector4d& mean, const Eigen::Matrix4d& cov,
                         Ordering ordering);

// mean 0, cov = I/2: the two-mode ground state.
GaussianState vacuum_state();

// cov = (1/2) R(alpha) diag(e^{-eta}, e^{eta}, e^{eta}, e^{-eta}) R(alpha)^T,
// with R(alpha) the parallel (x1,x2)/(p1,p2) rotation by alpha/2
// (= exp(alpha * i L2)).  Interleaved ordering.
GaussianState coupled_ground_state(double eta, double alpha);

// mean -> M mean, cov -> M cov M^T.  Orderings must agree.
GaussianState transform_state(const GaussianState& s, const GroupElement& m);

// Williamson invariants: moduli of the eigenvalues of J * cov, paired;
// returns (nu1, nu2) with nu1 <= nu2.
std::pair<double, double> symplectic_eigenvalues(const GaussianState& s);

// min(nu) >= 1/2 - 1e-12: the phase-space area floor, boundary passing.
bool uncertainty_ok(const GaussianState& s);

// (2pi)^{-2} det(cov)^{-1/2} exp(-(1/2)(z - mean)^T cov^{-1} (z - mean)).
double wigner_eval(const GaussianState& s, const Eigen::Vector4d& point);

}  // namespace oscsym
