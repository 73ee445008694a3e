#include "oscsym/algebra.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace oscsym {

BasisSet full_basis_4x4(Ordering ordering) {
    BasisSet b;
    for (GeneratorName g : kAllGenerators) {
        b.labels.push_back(to_string(g));
        if (ordering == Ordering::Interleaved || is_sp4_member(g)) {
            b.mats.push_back(sp4_generator(g, ordering));
        } else {
            // Traditional catalog stores only the ten symplectic members;
            // the extras are defined by reordering.
            b.mats.push_back(reorder(sp4_generator(g, Ordering::Interleaved),
                                     Ordering::Interleaved, Ordering::Traditional));
        }
    }
    return b;
}

BasisSet full_basis_6x6() {
    BasisSet b;
    for (GeneratorName g : kAllGenerators) {
        b.labels.push_back(to_string(g));
        b.mats.push_back(o33_generator(g));
    }
    return b;
}

BasisSet sp4_basis(Ordering ordering) {
    BasisSet b;
    for (GeneratorName g : kSp4Members) {
        b.labels.push_back(to_string(g));
        b.mats.push_back(sp4_generator(g, ordering));
    }
    return b;
}

BasisSet sp4_basis_6x6() {
    BasisSet b;
    for (GeneratorName g : kSp4Members) {
        b.labels.push_back(to_string(g));
        b.mats.push_back(o33_generator(g));
    }
    return b;
}

ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y) {
    return x * y - y * x;
}

std::optional<std::vector<GaussRational>> expand_in_basis(
    const ExactMatrix& target, const std::vector<ExactMatrix>& basis) {
    if (basis.empty()) throw DimensionError("expand_in_basis: empty basis");
    int n = basis[0].n();
    if (target.n() != n) throw DimensionError("expand_in_basis: dimension mismatch");
    size_t rows = static_cast<size_t>(n) * n;
    size_t m = basis.size();

    // Augmented system: columns are vectorized basis matrices, last column
    // the vectorized target.  Plain Gauss-Jordan over the Gaussian
    // rationals.
    std::vector<std::vector<GaussRational>> a(rows, std::vector<GaussRational>(m + 1));
    for (size_t k = 0; k < m; k++) {
        if (basis[k].n() != n) throw DimensionError("expand_in_basis: mixed dimensions");
        for (int r = 0; r < n; r++)
            for (int c = 0; c < n; c++)
                a[static_cast<size_t>(r) * n + c][k] = basis[k].at(r, c);
    }
    for (int r = 0; r < n; r++)
        for (int c = 0; c < n; c++)
            a[static_cast<size_t>(r) * n + c][m] = target.at(r, c);

    std::vector<int> pivot_col_of_row;
    size_t pr = 0;
    for (size_t col = 0; col < m && pr < rows; col++) {
        size_t piv = pr;
        while (piv < rows && a[piv][col].is_zero()) piv++;
        if (piv == rows) continue;
        std::swap(a[pr], a[piv]);
        GaussRational inv = GaussRational(1) / a[pr][col];
        for (size_t c = col; c <= m; c++) a[pr][c] = a[pr][c] * inv;
        for (size_t r = 0; r < rows; r++) {
            if (r == pr || a[r][col].is_zero()) continue;
            GaussRational f = a[r][col];
            for (size_t c = col; c <= m; c++) a[r][c] = a[r][c] - f * a[pr][c];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        pr++;
    }
    if (pivot_col_of_row.size() < m)
        throw Error("expand_in_basis: basis is linearly dependent");
    // Rows below the pivot block must have zero right-hand side, else the
    // target is outside the span.
    for (size_t r = pr; r < rows; r++)
        if (!a[r][m].is_zero()) return std::nullopt;
    std::vector<GaussRational> sol(m);
    for (size_t r = 0; r < pr; r++) sol[pivot_col_of_row[r]] = a[r][m];
    return sol;
}

StructureTable::StructureTable(int size) : size_(size) {
    upper_.resize(static_cast<size_t>(size) * size);
}

std::vector<GaussRational> StructureTable::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i >= size_ || j >= size_)
        throw DimensionError("structure table index out of range");
    if (i == j) return std::vector<GaussRational>(size_);
    const auto& c = upper_[static_cast<size_t>(std::min(i, j)) * size_ + std::max(i, j)];
    std::vector<GaussRational> out(size_);
    for (size_t k = 0; k < c.size(); k++) out[k] = (i < j) ? c[k] : -c[k];
    return out;
}

void StructureTable::set_coeff(int i, int j, std::vector<GaussRational> c) {
    if (i >= j) throw DimensionError("set_coeff expects i < j");
    c.resize(size_);
    upper_[static_cast<size_t>(i) * size_ + j] = std::move(c);
}

bool StructureTable::operator==(const StructureTable& o) const {
    if (size_ != o.size_) return false;
    for (int i = 0; i < size_; i++)
        for (int j = i + 1; j < size_; j++)
            if (coeff(i, j) != o.coeff(i, j)) return false;
    return true;
}

bool StructureTable::jacobi_holds() const {
    // [[Xi,Xj],Xk] + [[Xj,Xk],Xi] + [[Xk,Xi],Xj] = 0 expressed through the
    // table itself: sum_m f(i,j)_m f(m,k)_l + cyclic = 0 for every l.
    for (int i = 0; i < size_; i++)
        for (int j = i + 1; j < size_; j++)
            for (int k = j + 1; k < size_; k++) {
                std::vector<GaussRational> total(size_);
                const int trip[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
                for (const auto& t : trip) {
                    auto f = coeff(t[0], t[1]);
                    for (int m = 0; m < size_; m++) {
                        if (f[m].is_zero()) continue;
                        auto g = coeff(m, t[2]);
                        for (int l = 0; l < size_; l++)
                            total[l] = total[l] + f[m] * g[l];
                    }
                }
                for (const auto& v : total)
                    if (!v.is_zero()) return false;
            }
    return true;
}

StructureTable structure_constants(const BasisSet& basis) {
    size_t m = basis.size();
    StructureTable t(static_cast<int>(m));
    for (size_t i = 0; i < m; i++)
        for (size_t j = i + 1; j < m; j++) {
            auto f = expand_in_basis(commutator(basis.mats[i], basis.mats[j]), basis.mats);
            if (!f)
                throw NotClosedError("bracket [" + basis.labels[i] + ", " +
                                     basis.labels[j] + "] leaves the span");
            t.set_coeff(static_cast<int>(i), static_cast<int>(j), std::move(*f));
        }
    return t;
}

VerifyReport verify_table(const BasisSet& basis, const StructureTable& expected) {
    StructureTable got = structure_constants(basis);
    if (got.size() != expected.size())
        throw DimensionError("verify_table: table size mismatch");
    VerifyReport rep;
    for (int i = 0; i < got.size(); i++)
        for (int j = i + 1; j < got.size(); j++) {
            bool ok = got.coeff(i, j) == expected.coeff(i, j);
            rep.pairs.push_back({i, j, ok});
            if (!ok) rep.mismatches++;
        }
    rep.pass = rep.mismatches == 0;
    return rep;
}

namespace {

// Levi-Civita on {0,1,2}.
int eps(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

GaussRational plus_i() { return GaussRational::i(); }
GaussRational minus_i() { return -GaussRational::i(); }

// Family ('L','S','K','Q','G') and 0-based index of an enum-order slot.
void family_of(int slot, char& fam, int& idx) {
    static const char f[5] = {'L', 'S', 'K', 'Q', 'G'};
    fam = f[slot / 3];
    idx = slot % 3;
}

// The fifteen-generator reference table at (slot i, slot j), i < j in
// catalog enum order, as a (k, coeff) pair; k < 0 means zero bracket.
std::pair<int, GaussRational> sl4_rule(int si, int sj) {
    char fa, fb;
    int a, b;
    family_of(si, fa, a);
    family_of(sj, fb, b);
    auto slot = [](char fam, int idx) {
        static const std::string fams = "LSKQG";
        return static_cast<int>(fams.find(fam)) * 3 + idx;
    };

    // same family
    if (fa == fb) {
        int k = 3 - a - b;  // the remaining index when a != b
        if (a == b) return {-1, GaussRational()};
        GaussRational e = (eps(a, b, k) > 0) ? plus_i() : minus_i();
        if (fa == 'L') return {slot('L', k), e};
        if (fa == 'S') return {slot('S', k), e};
        return {slot('L', k), -e};  // K, Q, G all close onto -i eps L
    }
    // L with anything rotates the family index; L and S commute.
    if (fa == 'L' && fb == 'S') return {-1, GaussRational()};
    if (fa == 'L') {
        if (a == b) return {-1, GaussRational()};
        int k = 3 - a - b;
        GaussRational e = (eps(a, b, k) > 0) ? plus_i() : minus_i();
        return {slot(fb, k), e};
    }
    // cross-family squeeze pairs: [K,Q] -> S3, [Q,G] -> S1, [G,K] -> S2
    auto delta_pair = [&](char fx, char fy, int sslot) -> std::optional<std::pair<int, GaussRational>> {
        if (fa == fx && fb == fy) {
            if (a == b) return std::make_pair(sslot, minus_i());
            return std::make_pair(-1, GaussRational());
        }
        if (fa == fy && fb == fx) {
            if (a == b) return std::make_pair(sslot, plus_i());
            return std::make_pair(-1, GaussRational());
        }
        return std::nullopt;
    };
    if (auto r = delta_pair('K', 'Q', slot('S', 2))) return *r;
    if (auto r = delta_pair('Q', 'G', slot('S', 0))) return *r;
    if (auto r = delta_pair('G', 'K', slot('S', 1))) return *r;

    // squeeze against a rotation S_b: the S index selects which squeeze
    // family the result lands in (zero when the pair is "aligned").
    auto s_rule = [&](char fx, int x, int y, int sign) -> std::pair<int, GaussRational> {
        // (family, S index) -> (result family, coeff sign); 0 = no bracket
        struct Row {
            char out;
            int sgn;
        };
        static const Row table[3][3] = {
            // S1           S2            S3
            {{'\0', 0}, {'G', +1}, {'Q', -1}},  // K
            {{'G', -1}, {'\0', 0}, {'K', +1}},  // Q
            {{'Q', +1}, {'K', -1}, {'\0', 0}},  // G
        };
        int fi = (fx == 'K') ? 0 : (fx == 'Q' ? 1 : 2);
        Row r = table[fi][y];
        if (r.out == '\0') return {-1, GaussRational()};
        GaussRational c = (r.sgn * sign > 0) ? plus_i() : minus_i();
        return {slot(r.out, x), c};
    };
    if (fb == 'S') return s_rule(fa, a, b, +1);
    if (fa == 'S') return s_rule(fb, b, a, -1);
    // remaining case is S-before-L which was handled; anything else is a bug
    throw Error("sl4_rule: unhandled family pair");
}

StructureTable rule_table(const std::vector<int>& slots) {
    int n = static_cast<int>(slots.size());
    StructureTable t(n);
    // map global slot -> local position
    std::vector<int> local(15, -1);
    for (int p = 0; p < n; p++) local[slots[p]] = p;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) {
            auto [k, c] = sl4_rule(slots[i], slots[j]);
            std::vector<GaussRational> v(n);
            if (k >= 0 && !c.is_zero()) {
                if (local[k] < 0) throw Error("rule_table: bracket leaves subset");
                v[local[k]] = c;
            }
            t.set_coeff(i, j, std::move(v));
        }
    return t;
}

}  // namespace

StructureTable expected_sp4_table() {
    std::vector<int> slots;
    for (GeneratorName g : kSp4Members) slots.push_back(index_of(g));
    return rule_table(slots);
}

StructureTable expected_sl4_table() {
    std::vector<int> slots;
    for (GeneratorName g : kAllGenerators) slots.push_back(index_of(g));
    return rule_table(slots);
}

namespace {

IdentityCheck bracket_is(const std::string& desc, const ExactMatrix& x,
                         const ExactMatrix& y, const ExactMatrix& rhs) {
    return {desc, commutator(x, y) == rhs};
}

}  // namespace

std::vector<IdentityCheck> verify_mode_triple(int mode) {
    if (mode != 1 && mode != 2) throw Error("verify_mode_triple: mode must be 1 or 2");
    SecIIName an = mode == 1 ? SecIIName::A1 : SecIIName::A2;
    SecIIName bn = mode == 1 ? SecIIName::B1 : SecIIName::B2;
    SecIIName cn = mode == 1 ? SecIIName::C1 : SecIIName::C2;
    const ExactMatrix &A = secii_generator(an), &B = secii_generator(bn),
                      &C = secii_generator(cn);
    std::string m = std::to_string(mode);
    return {
        bracket_is("[A" + m + ",B" + m + "] = iC" + m, A, B, C.times_i()),
        bracket_is("[B" + m + ",C" + m + "] = -iA" + m, B, C, -A.times_i()),
        bracket_is("[C" + m + ",A" + m + "] = iB" + m, C, A, B.times_i()),
    };
}

std::vector<IdentityCheck> verify_coupling_identities() {
    auto g = [](SecIIName n) -> const ExactMatrix& { return secii_generator(n); };
    std::vector<IdentityCheck> out;

    // combination definitions
    out.push_back({"A+ = A1 + A2", g(SecIIName::Aplus) == g(SecIIName::A1) + g(SecIIName::A2)});
    out.push_back({"A- = A1 - A2", g(SecIIName::Aminus) == g(SecIIName::A1) - g(SecIIName::A2)});
    out.push_back({"B+ = B1 + B2", g(SecIIName::Bplus) == g(SecIIName::B1) + g(SecIIName::B2)});
    out.push_back({"B- = B1 - B2", g(SecIIName::Bminus) == g(SecIIName::B1) - g(SecIIName::B2)});
    out.push_back({"C+ = C1 + C2", g(SecIIName::Cplus) == g(SecIIName::C1) + g(SecIIName::C2)});
    out.push_back({"C- = C1 - C2", g(SecIIName::Cminus) == g(SecIIName::C1) - g(SecIIName::C2)});

    // the four soldered triples each close like a single-mode triple
    const std::array<std::array<SecIIName, 3>, 4> triples = {{
        {SecIIName::Aplus, SecIIName::Bplus, SecIIName::Cplus},
        {SecIIName::Aplus, SecIIName::Bminus, SecIIName::Cminus},
        {SecIIName::Aminus, SecIIName::Bplus, SecIIName::Cminus},
        {SecIIName::Aminus, SecIIName::Bminus, SecIIName::Cplus},
    }};
    for (const auto& t : triples) {
        std::string na = to_string(t[0]), nb = to_string(t[1]), nc = to_string(t[2]);
        out.push_back(bracket_is("[" + na + "," + nb + "] = i" + nc, g(t[0]), g(t[1]),
                                 g(t[2]).times_i()));
        out.push_back(bracket_is("[" + nb + "," + nc + "] = -i" + na, g(t[1]), g(t[2]),
                                 -g(t[0]).times_i()));
        out.push_back(bracket_is("[" + nc + "," + na + "] = i" + nb, g(t[2]), g(t[0]),
                                 g(t[1]).times_i()));
    }

    // the coupling rotation commutes with the plus set...
    for (SecIIName n : {SecIIName::Aplus, SecIIName::Bplus, SecIIName::Cplus})
        out.push_back({"[A0," + to_string(n) + "] = 0",
                       commutator(g(SecIIName::A0), g(n)).is_zero()});
    // ...and generates the 3-family from the minus set
    out.push_back(bracket_is("[A0,A-] = iA3", g(SecIIName::A0), g(SecIIName::Aminus),
                             g(SecIIName::A3).times_i()));
    out.push_back(bracket_is("[A0,B-] = iB3", g(SecIIName::A0), g(SecIIName::Bminus),
                             g(SecIIName::B3).times_i()));
    out.push_back(bracket_is("[A0,C-] = iC3", g(SecIIName::A0), g(SecIIName::Cminus),
                             g(SecIIName::C3).times_i()));

    // the (A+, B3, C3) triple
    out.push_back(bracket_is("[B3,C3] = -iA+", g(SecIIName::B3), g(SecIIName::C3),
                             -g(SecIIName::Aplus).times_i()));
    out.push_back(bracket_is("[C3,A+] = iB3", g(SecIIName::C3), g(SecIIName::Aplus),
                             g(SecIIName::B3).times_i()));
    out.push_back(bracket_is("[A+,B3] = iC3", g(SecIIName::Aplus), g(SecIIName::B3),
                             g(SecIIName::C3).times_i()));
    return out;
}

IsoReport check_isomorphism(const BasisSet& b4, const BasisSet& b6) {
    if (b4.labels != b6.labels)
        throw Error("check_isomorphism: label lists differ");
    StructureTable t4 = structure_constants(b4);
    StructureTable t6 = structure_constants(b6);
    IsoReport rep;
    for (int i = 0; i < t4.size(); i++)
        for (int j = i + 1; j < t4.size(); j++)
            if (t4.coeff(i, j) != t6.coeff(i, j)) rep.mismatched.emplace_back(i, j);
    rep.ok = rep.mismatched.empty();
    return rep;
}

std::vector<Subgroup> enumerate_sp4_subgroups() {
    // Precompute the bracket support map once: every bracket of the full
    // fifteen-generator set is zero or a multiple of a single generator,
    // so subset closure is pure index arithmetic.
    static const std::vector<int> support = [] {
        BasisSet full = full_basis_4x4(Ordering::Interleaved);
        StructureTable t = structure_constants(full);
        std::vector<int> s(15 * 15, -1);
        for (int i = 0; i < 15; i++)
            for (int j = i + 1; j < 15; j++) {
                auto c = t.coeff(i, j);
                int k_found = -1;
                for (int k = 0; k < 15; k++)
                    if (!c[k].is_zero()) {
                        if (k_found >= 0) throw Error("bracket with multi-term expansion");
                        k_found = k;
                    }
                s[i * 15 + j] = k_found;
            }
        return s;
    }();

    std::vector<Subgroup> found;
    for (unsigned mask = 0; mask < (1u << 15); mask++) {
        if (__builtin_popcount(mask) != 10) continue;
        bool closed = true;
        for (int i = 0; i < 15 && closed; i++) {
            if (!(mask & (1u << i))) continue;
            for (int j = i + 1; j < 15; j++) {
                if (!(mask & (1u << j))) continue;
                int k = support[i * 15 + j];
                if (k >= 0 && !(mask & (1u << k))) {
                    closed = false;
                    break;
                }
            }
        }
        if (!closed) continue;

        Subgroup sg{};
        int pos = 0;
        for (int i = 0; i < 15; i++)
            if (mask & (1u << i)) sg.members[pos++] = static_cast<GeneratorName>(i);

        // Pivot: the set holds either all three L's plus one S, or all
        // three S's plus one L; the singleton is the pivot.
        auto has = [&](GeneratorName g) { return (mask & (1u << index_of(g))) != 0; };
        int nl = has(GeneratorName::L1) + has(GeneratorName::L2) + has(GeneratorName::L3);
        int ns = has(GeneratorName::S1) + has(GeneratorName::S2) + has(GeneratorName::S3);
        if (nl == 3 && ns == 1) {
            for (GeneratorName s : {GeneratorName::S1, GeneratorName::S2, GeneratorName::S3})
                if (has(s)) sg.pivot = s;
        } else if (ns == 3 && nl == 1) {
            for (GeneratorName l : {GeneratorName::L1, GeneratorName::L2, GeneratorName::L3})
                if (has(l)) sg.pivot = l;
        } else {
            throw Error("closed subset without the expected rotation structure");
        }

        // Re-verify closure on the actual matrices, not just the index map.
        BasisSet sub;
        for (GeneratorName g : sg.members) {
            sub.labels.push_back(to_string(g));
            sub.mats.push_back(sp4_generator(g, Ordering::Interleaved));
        }
        structure_constants(sub);  // throws if not closed

        found.push_back(sg);
    }
    std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
        return index_of(a.pivot) < index_of(b.pivot);
    });
    return found;
}

bool fifteen_dim_check(const BasisSet& basis) {
    if (basis.size() != 15) return false;
    if (matrix_span_rank(basis.mats) != 15) return false;
    try {
        structure_constants(basis);
    } catch (const NotClosedError&) {
        return false;
    }
    return true;
}

std::string table_to_csv(const StructureTable& t) {
    std::string out = "i,j,k,re,im\n";
    for (int i = 0; i < t.size(); i++)
        for (int j = i + 1; j < t.size(); j++) {
            auto c = t.coeff(i, j);
            for (int k = 0; k < t.size(); k++) {
                if (c[k].is_zero()) continue;
                out += std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(k) + "," + c[k].re.str() + "," + c[k].im.str() + "\n";
            }
        }
    return out;
}

nlohmann::json table_to_json(const StructureTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < t.size(); i++)
        for (int j = i + 1; j < t.size(); j++) {
            auto c = t.coeff(i, j);
            for (int k = 0; k < t.size(); k++) {
                if (c[k].is_zero()) continue;
                rows.push_back({{"i", i},
                                {"j", j},
                                {"k", k},
                                {"re", c[k].re.str()},
                                {"im", c[k].im.str()}});
            }
        }
    return rows;
}

}  // namespace oscsym
