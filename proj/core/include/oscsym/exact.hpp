#pragma once

// Exact rational / Gaussian-rational scalars and small dense matrices.
// All generator algebra in this library runs on these types; nothing here
// ever rounds.  Matrices are values: every operation returns a fresh one.

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "oscsym/errors.hpp"

namespace oscsym {

// Arbitrary-precision rational, kept canonical (gcd 1, denominator > 0).
// Thin wrapper over mpq_class so the GMP dependency stays contained and
// construction always canonicalizes.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int
    Rational(long num, long den);
    explicit Rational(const mpq_class& q);

    // Parses "p", "-p", or "p/q" (q > 0 after canonicalization).
    static Rational parse(const std::string& s);

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    double to_double() const { return v_.get_d(); }
    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

// Gaussian rational re + i*im.  A field: division is exact.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(Rational r) : re(r) {}  // NOLINT: implicit real embedding
    GaussRational(Rational r, Rational i) : re(r), im(i) {}
    GaussRational(long r) : re(r) {}  // NOLINT

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussRational conj() const { return {re, -im}; }
    // re^2 + im^2, the norm used for exact division.
    Rational norm() const { return re * re + im * im; }

    GaussRational operator-() const { return {-re, -im}; }
    GaussRational operator+(const GaussRational& o) const { return {re + o.re, im + o.im}; }
    GaussRational operator-(const GaussRational& o) const { return {re - o.re, im - o.im}; }
    GaussRational operator*(const GaussRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRational operator/(const GaussRational& o) const;
    bool operator==(const GaussRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRational& o) const { return !(*this == o); }

    // "a+bi" rendering for messages; JSON uses separate re/im fields.
    std::string str() const;
};

// Dense n-by-n matrix of GaussRational.  Dimension fixed at construction;
// equality is entrywise exact.  Mutation is limited to set() so that
// builders can fill a matrix in; library operations never mutate arguments.
class ExactMatrix {
  public:
    explicit ExactMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}

    static ExactMatrix zero(int n) { return ExactMatrix(n); }
    static ExactMatrix identity(int n);

    int n() const { return n_; }
    const GaussRational& at(int r, int c) const { return e_[idx(r, c)]; }
    void set(int r, int c, GaussRational v) { e_[idx(r, c)] = std::move(v); }

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator-() const;
    ExactMatrix scalar_mul(const GaussRational& c) const;
    // Multiplication by i, used constantly: generators X are i-laden and
    // i*X is the real matrix that actually acts on phase space.
    ExactMatrix times_i() const { return scalar_mul(GaussRational::i()); }
    ExactMatrix transpose() const;

    bool is_zero() const;
    GaussRational trace() const;
    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    // True when every entry is purely real / purely imaginary.
    bool is_real() const;
    bool is_antisymmetric() const { return transpose() == -*this; }

  private:
    size_t idx(int r, int c) const;
    int n_;
    std::vector<GaussRational> e_;
};

// c1*m1 + c2*m2 + ... exactly; the workhorse for expressing brackets as
// combinations of basis generators.
ExactMatrix mat_linear(const std::vector<GaussRational>& coeffs,
                       const std::vector<ExactMatrix>& mats);

// Rank over the Gaussian rationals of the span of vectorized matrices.
int matrix_span_rank(const std::vector<ExactMatrix>& mats);

}  // namespace oscsym
