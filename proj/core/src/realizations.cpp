#include "oscsym/realizations.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "oscsym/errors.hpp"

namespace oscsym {

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

int sp4_index(GeneratorName g) {
    for (int k = 0; k < 10; ++k)
        if (kSp4Members[static_cast<size_t>(k)] == g) return k;
    throw CatalogMissError("not a symplectic member: " + to_string(g));
}

const StructureTable& sp4_table() {
    static const StructureTable t =
        structure_constants(sp4_basis(Ordering::Interleaved));
    return t;
}

}  // namespace

FockTruncation::FockTruncation(int n) : N(n) {
    if (n < 4)
        throw DimensionError("Fock truncation needs N >= 4, got " + std::to_string(n));
}

Ladder ladder(FockTruncation t) {
    const int N = t.N;
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(N, N);
    for (int n = 1; n < N; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(N, N);
    Ladder l;
    l.a1 = {kron(a, id), "a1"};
    l.a2 = {kron(id, a), "a2"};
    l.a1d = {l.a1.M.adjoint(), "a1d"};
    l.a2d = {l.a2.M.adjoint(), "a2d"};
    return l;
}

OperatorMatrix hatted(GeneratorName name, FockTruncation t, HattedVariant variant) {
    using GN = GeneratorName;
    switch (name) {
        case GN::S1:
        case GN::S2:
        case GN::G1:
        case GN::G2:
        case GN::G3:
            throw NoQuantumRealizationError(
                "no quadratic ladder realization closes the table for " +
                to_string(name));
        default:
            break;
    }

    const Ladder l = ladder(t);
    const Eigen::MatrixXcd& A1 = l.a1.M;
    const Eigen::MatrixXcd& A2 = l.a2.M;
    const Eigen::MatrixXcd& D1 = l.a1d.M;
    const Eigen::MatrixXcd& D2 = l.a2d.M;
    const std::complex<double> I(0.0, 1.0);
    const double ks = (variant == HattedVariant::KFlip) ? -1.0 : 1.0;
    const double qs = (variant == HattedVariant::Default) ? -1.0 : 1.0;

    Eigen::MatrixXcd M;
    switch (name) {
        case GN::L1: M = (D1 * A2 + D2 * A1) / 2.0; break;
        case GN::L2: M = (D1 * A2 - D2 * A1) / (2.0 * I); break;
        case GN::L3: M = (D1 * A1 - D2 * A2) / 2.0; break;
        case GN::S3: M = (D1 * A1 + A2 * D2) / 2.0; break;
        case GN::K1: M = ks * (-(D1 * D1 + A1 * A1 - D2 * D2 - A2 * A2) / 4.0); break;
        case GN::K2: M = ks * (I * (D1 * D1 - A1 * A1 + D2 * D2 - A2 * A2) / 4.0); break;
        case GN::K3: M = ks * ((D1 * D2 + A1 * A2) / 2.0); break;
        case GN::Q1: M = qs * (-I * (D1 * D1 - A1 * A1 - D2 * D2 + A2 * A2) / 4.0); break;
        case GN::Q2: M = qs * (-(D1 * D1 + A1 * A1 + D2 * D2 + A2 * A2) / 4.0); break;
        case GN::Q3: M = qs * (I * (D1 * D2 - A1 * A2) / 2.0); break;
        default:
            throw CatalogMissError("unhandled name " + to_string(name));
    }
    return {std::move(M), to_string(name) + "-hat"};
}

double fock_commutator_check(GeneratorName x, GeneratorName y, FockTruncation t,
                             HattedVariant variant) {
    const Eigen::MatrixXcd X = hatted(x, t, variant).M;
    const Eigen::MatrixXcd Y = hatted(y, t, variant).M;
    Eigen::MatrixXcd resid = X * Y - Y * X;

    if (x != y) {
        const std::vector<GaussRational> c = sp4_table().coeff(sp4_index(x), sp4_index(y));
        for (int k = 0; k < 10; ++k) {
            const GaussRational& ck = c[static_cast<size_t>(k)];
            if (ck.is_zero()) continue;
            const std::complex<double> z(ck.re.to_double(), ck.im.to_double());
            resid -= z * hatted(kSp4Members[static_cast<size_t>(k)], t, variant).M;
        }
    }

    // Quadratic ladder terms reach two levels up, so the top three total
    // layers of the truncated space see corrupted matrix elements; restrict
    // the comparison to the block they cannot pollute.
    const int N = t.N;
    std::vector<bool> keep(static_cast<size_t>(t.dim()), false);
    for (int n1 = 0; n1 < N; ++n1)
        for (int n2 = 0; n2 < N; ++n2)
            keep[static_cast<size_t>(n1 * N + n2)] = (n1 + n2 <= N - 3);

    double worst = 0.0;
    for (Eigen::Index r = 0; r < resid.rows(); ++r) {
        if (!keep[static_cast<size_t>(r)]) continue;
        for (Eigen::Index cidx = 0; cidx < resid.cols(); ++cidx) {
            if (!keep[static_cast<size_t>(cidx)]) continue;
            worst = std::max(worst, std::abs(resid(r, cidx)));
        }
    }
    return worst;
}

DiffOpCoeff diffop(GeneratorName name) {
    const ExactMatrix& x = sp4_generator(name, Ordering::Interleaved);
    return {-x.transpose(), to_string(name)};
}

std::string op_form(const DiffOpCoeff& d) {
    static const char* kCoord[4] = {"x1", "p1", "x2", "p2"};
    struct Term {
        int a, b;
        GaussRational c;
    };
    std::vector<Term> terms;
    for (int a = 0; a < d.C.n(); ++a)
        for (int b = 0; b < d.C.n(); ++b)
            if (!d.C.at(a, b).is_zero()) terms.push_back({a, b, d.C.at(a, b)});
    if (terms.empty()) return "0";

    const GaussRational half_i(Rational(0), Rational(1, 2));
    bool uniform = d.C.n() == 4;
    for (const Term& t : terms)
        if (t.c != half_i && t.c != -half_i) {
            uniform = false;
            break;
        }

    std::string out;
    if (uniform) {
        // Every catalog operator has coefficients +-i/2: factor the i/2 out
        // and print signed coordinate terms.
        const bool lead_neg = (terms.front().c == -half_i);
        out = lead_neg ? "-(i/2)[" : "(i/2)[";
        bool first = true;
        for (const Term& t : terms) {
            bool pos = (t.c == half_i) != lead_neg;
            if (first) {
                if (!pos) out += "-";
                first = false;
            } else {
                out += pos ? " + " : " - ";
            }
            out += std::string(kCoord[t.a]) + " d/d" + kCoord[t.b];
        }
        out += "]";
    } else {
        // General coefficient matrix (e.g. a commutator result): explicit
        // per-term coefficients.
        bool first = true;
        for (const Term& t : terms) {
            if (!first) out += " + ";
            first = false;
            out += "(" + t.c.str() + ") " + kCoord[t.a % 4] + " d/d" + kCoord[t.b % 4];
        }
    }
    return out;
}

std::string diffop_note(GeneratorName name) {
    switch (name) {
        case GeneratorName::S2:
            return "Some operator-form listings print for S2 the negation of the L1 "
                   "terms; the coefficient matrix here realizes the catalog S2 "
                   "(C = -S2^T) and is the one that closes the bracket table.";
        case GeneratorName::G2:
            return "Some operator-form listings print the overall negative of this "
                   "operator for G2; the sign here is fixed by C = -X^T and the "
                   "bracket table.";
        case GeneratorName::G3:
            return "Some operator-form listings include a cross-mode term "
                   "(x2 d/dp1 + p1 d/dx2) in G3; the coefficient matrix fixed by "
                   "C = -X^T is diagonal (pure mode-scaling terms).";
        default:
            return "";
    }
}

ExactMatrix diffop_to_matrix(const DiffOpCoeff& d) { return d.C; }

DiffOpCoeff diffop_commutator(const DiffOpCoeff& d1, const DiffOpCoeff& d2) {
    return {d1.C * d2.C - d2.C * d1.C, "[" + d1.label + "," + d2.label + "]"};
}

}  // namespace oscsym
