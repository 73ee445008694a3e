#include "oscsym/exact.hpp"

#include <cctype>

namespace oscsym {

Rational::Rational(long num, long den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) {
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational string");
    // mpq_class(string) accepts "p" and "p/q" but aborts on garbage, so
    // validate the shape first.
    size_t pos = 0;
    auto digits = [&](bool sign_ok) {
        if (sign_ok && pos < s.size() && (s[pos] == '+' || s[pos] == '-')) pos++;
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) pos++;
        return pos > start;
    };
    bool ok = digits(true);
    if (ok && pos < s.size() && s[pos] == '/') {
        pos++;
        ok = digits(false);
    }
    if (!ok || pos != s.size()) throw ParseError("bad rational: '" + s + "'");
    mpq_class q(s);
    if (q.get_den() == 0) throw ParseError("rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    return v_.get_str();  // GMP prints "p" or "p/q", denominator positive
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw Error("rational division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

GaussRational GaussRational::operator/(const GaussRational& o) const {
    Rational n = o.norm();
    if (n.is_zero()) throw Error("gaussian-rational division by zero");
    GaussRational num = *this * o.conj();
    return {num.re / n, num.im / n};
}

std::string GaussRational::str() const {
    if (im.is_zero()) return re.str();
    std::string s = re.is_zero() ? "" : re.str();
    if (!s.empty() && im.sign() >= 0) s += "+";
    s += im.str() + "i";
    return s;
}

size_t ExactMatrix::idx(int r, int c) const {
    if (r < 0 || r >= n_ || c < 0 || c >= n_)
        throw DimensionError("matrix index out of range");
    return static_cast<size_t>(r) * n_ + c;
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n);
    for (int i = 0; i < n; i++) m.set(i, i, GaussRational(1));
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (n_ != o.n_) throw DimensionError("matrix product dimension mismatch");
    ExactMatrix r(n_);
    for (int i = 0; i < n_; i++)
        for (int k = 0; k < n_; k++) {
            const GaussRational& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < n_; j++) {
                const GaussRational& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.set(i, j, r.at(i, j) + a * b);
            }
        }
    return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (n_ != o.n_) throw DimensionError("matrix sum dimension mismatch");
    ExactMatrix r(n_);
    for (size_t i = 0; i < e_.size(); i++) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (n_ != o.n_) throw DimensionError("matrix difference dimension mismatch");
    ExactMatrix r(n_);
    for (size_t i = 0; i < e_.size(); i++) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix r(n_);
    for (size_t i = 0; i < e_.size(); i++) r.e_[i] = -e_[i];
    return r;
}

ExactMatrix ExactMatrix::scalar_mul(const GaussRational& c) const {
    ExactMatrix r(n_);
    for (size_t i = 0; i < e_.size(); i++) r.e_[i] = e_[i] * c;
    return r;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(n_);
    for (int i = 0; i < n_; i++)
        for (int j = 0; j < n_; j++) r.set(j, i, at(i, j));
    return r;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

GaussRational ExactMatrix::trace() const {
    GaussRational t;
    for (int i = 0; i < n_; i++) t = t + at(i, i);
    return t;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    if (n_ != o.n_) return false;
    for (size_t i = 0; i < e_.size(); i++)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool ExactMatrix::is_real() const {
    for (const auto& v : e_)
        if (!v.im.is_zero()) return false;
    return true;
}

ExactMatrix mat_linear(const std::vector<GaussRational>& coeffs,
                       const std::vector<ExactMatrix>& mats) {
    if (coeffs.size() != mats.size())
        throw DimensionError("mat_linear: coefficient/matrix count mismatch");
    if (mats.empty()) throw DimensionError("mat_linear: empty input");
    int n = mats[0].n();
    ExactMatrix r(n);
    for (size_t k = 0; k < mats.size(); k++) {
        if (mats[k].n() != n) throw DimensionError("mat_linear: mixed dimensions");
        if (coeffs[k].is_zero()) continue;
        r = r + mats[k].scalar_mul(coeffs[k]);
    }
    return r;
}

// Plain Gaussian elimination on the k x n^2 stack of vectorized matrices.
int matrix_span_rank(const std::vector<ExactMatrix>& mats) {
    if (mats.empty()) return 0;
    int n = mats[0].n();
    size_t cols = static_cast<size_t>(n) * n;
    std::vector<std::vector<GaussRational>> rows;
    rows.reserve(mats.size());
    for (const auto& m : mats) {
        if (m.n() != n) throw DimensionError("matrix_span_rank: mixed dimensions");
        std::vector<GaussRational> row(cols);
        for (int r = 0; r < n; r++)
            for (int c = 0; c < n; c++) row[static_cast<size_t>(r) * n + c] = m.at(r, c);
        rows.push_back(std::move(row));
    }
    int rank = 0;
    size_t col = 0;
    for (size_t pr = 0; pr < rows.size() && col < cols; col++) {
        size_t piv = pr;
        while (piv < rows.size() && rows[piv][col].is_zero()) piv++;
        if (piv == rows.size()) continue;
        std::swap(rows[pr], rows[piv]);
        GaussRational inv = GaussRational(1) / rows[pr][col];
        for (size_t c = col; c < cols; c++) rows[pr][c] = rows[pr][c] * inv;
        for (size_t r = 0; r < rows.size(); r++) {
            if (r == pr || rows[r][col].is_zero()) continue;
            GaussRational f = rows[r][col];
            for (size_t c = col; c < cols; c++)
                rows[r][c] = rows[r][c] - f * rows[pr][c];
        }
        pr++;
        rank++;
    }
    return rank;
}

}  // namespace oscsym
