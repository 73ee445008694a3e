#pragma once

// Two independent realizations of the algebra for cross-validation:
// truncated Fock-space ladder combinations (floating point, guarded-block
// residual checks) and first-order phase-space differential operators
// (exact coefficient matrices).

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "oscsym/algebra.hpp"
#include "oscsym/catalog.hpp"
#include "oscsym/exact.hpp"

namespace oscsym {

// Per-mode cutoff: levels 0..N-1, total dimension N^2.
struct FockTruncation {
    int N;
    explicit FockTruncation(int n);
    int dim() const { return N * N; }
};

struct OperatorMatrix {
    Eigen::MatrixXcd M;
    std::string label;
};

// a|n> = sqrt(n) |n-1> per mode; tensor structure mode1 (x) mode2, basis
// index n1*N + n2.
struct Ladder {
    OperatorMatrix a1, a1d, a2, a2d;
};
Ladder ladder(FockTruncation t);

// Sign conventions for the quadratic ladder combinations.  Default is the
// set that closes the ten-generator bracket table on the guarded block.
// LegacySigns is a transcription that fails exactly the nine brackets in
// which S3 appears an odd number of times ({S3,K}, {S3,Q}, {K,Q} aligned
// pairs); negating either the K family (KFlip) or the Q family (Default)
// repairs it, and the recorded spectra S3|0,0> = +1/2, L3|1,0> = +1/2 pin
// the S3/L operators, leaving those two equally-minimal fixes.  Default
// negates the Q family.
enum class HattedVariant { Default, LegacySigns, KFlip };

// The quadratic ladder realization of a symplectic member.  The five
// names without one (S1, S2, G1, G2, G3) throw
// NoQuantumRealizationError: no quadratic a/a-dagger combination closes
// the fifteen-generator table, which is the algebraic face of the
// uncertainty gate.
OperatorMatrix hatted(GeneratorName name, FockTruncation t,
                      HattedVariant variant = HattedVariant::Default);

// max-norm of [X-hat, Y-hat] - (expected combination) restricted to the
// guarded block n1 + n2 <= N - 3 (truncation corrupts the top layers;
// two nested ladder applications reach two levels up).
double fock_commutator_check(GeneratorName x, GeneratorName y, FockTruncation t,
                             HattedVariant variant = HattedVariant::Default);

// First-order operator D = sum_{a,b} z_a C_ab d/dz_b in interleaved
// coordinates z = (x1, p1, x2, p2), stored by its exact coefficient
// matrix.  C is trace-free for every generator.
struct DiffOpCoeff {
    ExactMatrix C;
    std::string label;
};

// The coefficient matrix realizing a generator: C = -X^T (the action on
// functions carries the negative transpose of the coordinate action; for
// antisymmetric X the two coincide, which is why the rotation operators
// look literally like their matrices).
DiffOpCoeff diffop(GeneratorName name);

// Text rendering "(i/2)[x1 d/dp1 - p1 d/dx1 + ...]" of the operator.
std::string op_form(const DiffOpCoeff& d);

// Discrepancy note for names whose commonly-transcribed operator text
// disagrees with the coefficient matrix (S2, G2, G3); empty otherwise.
std::string diffop_note(GeneratorName name);

// The coefficient matrix itself (the verification hook: compare against
// -X^T from the catalog).
ExactMatrix diffop_to_matrix(const DiffOpCoeff& d);

// [D_C, D_C'] = D_{CC' - C'C}: first-order operators close under the
// matrix commutator of their coefficient matrices.
DiffOpCoeff diffop_commutator(const DiffOpCoeff& d1, const DiffOpCoeff& d2);

}  // namespace oscsym
