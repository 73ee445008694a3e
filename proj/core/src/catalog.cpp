#include "oscsym/catalog.hpp"

#include <map>

namespace oscsym {

std::string to_string(Ordering o) {
    return o == Ordering::Interleaved ? "interleaved" : "traditional";
}

Ordering parse_ordering(const std::string& s) {
    if (s == "interleaved") return Ordering::Interleaved;
    if (s == "traditional") return Ordering::Traditional;
    throw ParseError("unknown ordering: '" + s + "'");
}

namespace {

const char* const kGenNames[15] = {
    "L1", "L2", "L3", "S1", "S2", "S3", "K1", "K2", "K3",
    "Q1", "Q2", "Q3", "G1", "G2", "G3",
};

const char* const kSecNames[16] = {
    "A1", "B1", "C1", "A2", "B2", "C2",
    "A+", "B+", "C+", "A-", "B-", "C-",
    "A0", "A3", "B3", "C3",
};

using R = Rational;
using G = GaussRational;

G half() { return G(R(1, 2)); }
G ihalf() { return G(R(0), R(1, 2)); }

// 2x2 blocks.  Standard Pauli convention, sigma2 = [[0,-i],[i,0]].
struct Blk {
    G e[2][2];
};

Blk pauli1() {
    Blk b{};
    b.e[0][1] = G(1);
    b.e[1][0] = G(1);
    return b;
}

Blk pauli2() {
    Blk b{};
    b.e[0][1] = G(R(0), R(-1));
    b.e[1][0] = G(R(0), R(1));
    return b;
}

Blk pauli3() {
    Blk b{};
    b.e[0][0] = G(1);
    b.e[1][1] = G(-1);
    return b;
}

Blk id2() {
    Blk b{};
    b.e[0][0] = G(1);
    b.e[1][1] = G(1);
    return b;
}

Blk zero2() { return Blk{}; }

Blk neg(const Blk& a) {
    Blk b{};
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++) b.e[i][j] = -a.e[i][j];
    return b;
}

// scale * [[a, b], [c, d]] as a 4x4 matrix.
ExactMatrix blk4(const G& scale, const Blk& a, const Blk& b, const Blk& c, const Blk& d) {
    ExactMatrix m(4);
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++) {
            m.set(i, j, scale * a.e[i][j]);
            m.set(i, j + 2, scale * b.e[i][j]);
            m.set(i + 2, j, scale * c.e[i][j]);
            m.set(i + 2, j + 2, scale * d.e[i][j]);
        }
    return m;
}

std::vector<ExactMatrix> build_interleaved() {
    Blk s1 = pauli1(), s2 = pauli2(), s3 = pauli3(), I2 = id2(), Z = zero2();
    std::vector<ExactMatrix> v;
    v.reserve(15);
    v.push_back(blk4(-half(), Z, s2, s2, Z));          // L1
    v.push_back(blk4(ihalf(), Z, neg(I2), I2, Z));     // L2
    v.push_back(blk4(-half(), s2, Z, Z, neg(s2)));     // L3
    v.push_back(blk4(-ihalf(), Z, neg(s3), s3, Z));    // S1
    v.push_back(blk4(ihalf(), Z, s1, neg(s1), Z));     // S2 (table-consistent sign)
    v.push_back(blk4(half(), s2, Z, Z, s2));           // S3
    v.push_back(blk4(ihalf(), s1, Z, Z, neg(s1)));     // K1
    v.push_back(blk4(ihalf(), s3, Z, Z, s3));          // K2
    v.push_back(blk4(-ihalf(), Z, s1, s1, Z));         // K3
    v.push_back(blk4(ihalf(), neg(s3), Z, Z, s3));     // Q1
    v.push_back(blk4(ihalf(), s1, Z, Z, s1));          // Q2
    v.push_back(blk4(ihalf(), Z, s3, s3, Z));          // Q3
    v.push_back(blk4(ihalf(), Z, I2, I2, Z));          // G1
    v.push_back(blk4(half(), Z, neg(s2), s2, Z));      // G2
    v.push_back(blk4(ihalf(), I2, Z, Z, neg(I2)));     // G3
    return v;
}

// The ten symplectic members in (x1, x2, p1, p2) ordering.
std::vector<std::pair<GeneratorName, ExactMatrix>> build_traditional() {
    Blk s1 = pauli1(), s2 = pauli2(), s3 = pauli3(), I2 = id2(), Z = zero2();
    std::vector<std::pair<GeneratorName, ExactMatrix>> v;
    v.emplace_back(GeneratorName::L1, blk4(ihalf(), Z, s1, neg(s1), Z));
    v.emplace_back(GeneratorName::L2, blk4(half(), s2, Z, Z, s2));
    v.emplace_back(GeneratorName::L3, blk4(ihalf(), Z, s3, neg(s3), Z));
    v.emplace_back(GeneratorName::S3, blk4(ihalf(), Z, neg(I2), I2, Z));
    v.emplace_back(GeneratorName::K1, blk4(ihalf(), Z, s3, s3, Z));
    v.emplace_back(GeneratorName::K2, blk4(ihalf(), I2, Z, Z, neg(I2)));
    v.emplace_back(GeneratorName::K3, blk4(-ihalf(), Z, s1, s1, Z));
    v.emplace_back(GeneratorName::Q1, blk4(ihalf(), neg(s3), Z, Z, s3));
    v.emplace_back(GeneratorName::Q2, blk4(ihalf(), Z, I2, I2, Z));
    v.emplace_back(GeneratorName::Q3, blk4(ihalf(), s1, Z, Z, neg(s1)));
    return v;
}

std::vector<ExactMatrix> build_secii() {
    Blk s1 = pauli1(), s2 = pauli2(), s3 = pauli3(), I2 = id2(), Z = zero2();
    std::vector<ExactMatrix> v;
    v.reserve(16);
    v.push_back(blk4(half(), s2, Z, Z, Z));            // A1
    v.push_back(blk4(ihalf(), s3, Z, Z, Z));           // B1
    v.push_back(blk4(ihalf(), s1, Z, Z, Z));           // C1
    v.push_back(blk4(half(), Z, Z, Z, s2));            // A2
    v.push_back(blk4(ihalf(), Z, Z, Z, s3));           // B2
    v.push_back(blk4(ihalf(), Z, Z, Z, s1));           // C2
    v.push_back(blk4(half(), s2, Z, Z, s2));           // A+
    v.push_back(blk4(ihalf(), s3, Z, Z, s3));          // B+
    v.push_back(blk4(ihalf(), s1, Z, Z, s1));          // C+
    v.push_back(blk4(half(), s2, Z, Z, neg(s2)));      // A-
    v.push_back(blk4(ihalf(), s3, Z, Z, neg(s3)));     // B-
    v.push_back(blk4(ihalf(), s1, Z, Z, neg(s1)));     // C-
    v.push_back(blk4(ihalf(), Z, neg(I2), I2, Z));     // A0
    v.push_back(blk4(half(), Z, s2, s2, Z));           // A3
    v.push_back(blk4(ihalf(), Z, s3, s3, Z));          // B3
    v.push_back(blk4(ihalf(), Z, s1, s1, Z));          // C3
    return v;
}

// 6x6 generators on (x, y, z, s, t, u): sparse +/- i placements.
// Rotations in compact planes carry the antisymmetric -i/+i pattern;
// boosts between a space-like and a time-like coordinate are symmetric.
std::vector<ExactMatrix> build_o33() {
    struct Pos {
        int r, c, sign;  // value = sign * i
    };
    static const std::vector<Pos> pos[15] = {
        /* L1 */ {{1, 2, -1}, {2, 1, +1}},
        /* L2 */ {{0, 2, +1}, {2, 0, -1}},
        /* L3 */ {{0, 1, -1}, {1, 0, +1}},
        /* S1 */ {{4, 5, -1}, {5, 4, +1}},
        /* S2 */ {{3, 5, +1}, {5, 3, -1}},
        /* S3 */ {{3, 4, -1}, {4, 3, +1}},
        /* K1 */ {{0, 3, +1}, {3, 0, +1}},
        /* K2 */ {{1, 3, +1}, {3, 1, +1}},
        /* K3 */ {{2, 3, +1}, {3, 2, +1}},
        /* Q1 */ {{0, 4, +1}, {4, 0, +1}},
        /* Q2 */ {{1, 4, +1}, {4, 1, +1}},
        /* Q3 */ {{2, 4, +1}, {4, 2, +1}},
        /* G1 */ {{0, 5, +1}, {5, 0, +1}},
        /* G2 */ {{1, 5, +1}, {5, 1, +1}},
        /* G3 */ {{2, 5, +1}, {5, 2, +1}},
    };
    std::vector<ExactMatrix> v;
    v.reserve(15);
    for (const auto& plist : pos) {
        ExactMatrix m(6);
        for (const auto& p : plist) m.set(p.r, p.c, G(R(0), R(p.sign)));
        v.push_back(std::move(m));
    }
    return v;
}

}  // namespace

bool is_sp4_member(GeneratorName g) {
    for (GeneratorName m : kSp4Members)
        if (m == g) return true;
    return false;
}

std::string to_string(GeneratorName g) {
    return kGenNames[index_of(g)];
}

GeneratorName parse_generator(const std::string& s) {
    for (int i = 0; i < kGeneratorCount; i++)
        if (s == kGenNames[i]) return static_cast<GeneratorName>(i);
    throw ParseError("unknown generator name: '" + s + "'");
}

std::string to_string(SecIIName n) {
    return kSecNames[static_cast<int>(n)];
}

SecIIName parse_secii(const std::string& s) {
    for (int i = 0; i < 16; i++)
        if (s == kSecNames[i]) return static_cast<SecIIName>(i);
    // accept spelled-out suffixes too ("Aplus", "Aminus")
    for (int i = 0; i < 16; i++) {
        std::string alt = kSecNames[i];
        if (alt.size() == 2 && alt[1] == '+') alt = std::string(1, alt[0]) + "plus";
        if (alt.size() == 2 && alt[1] == '-') alt = std::string(1, alt[0]) + "minus";
        if (s == alt) return static_cast<SecIIName>(i);
    }
    throw ParseError("unknown combined-generator name: '" + s + "'");
}

const ExactMatrix& sp4_generator(GeneratorName name, Ordering ordering) {
    static const std::vector<ExactMatrix> inter = build_interleaved();
    static const std::vector<std::pair<GeneratorName, ExactMatrix>> trad = build_traditional();
    if (ordering == Ordering::Interleaved) return inter[index_of(name)];
    for (const auto& [g, m] : trad)
        if (g == name) return m;
    throw CatalogMissError("generator " + to_string(name) +
                           " has no stored traditional-ordering matrix; use reorder()");
}

const ExactMatrix& o33_generator(GeneratorName name) {
    static const std::vector<ExactMatrix> six = build_o33();
    return six[index_of(name)];
}

const ExactMatrix& secii_generator(SecIIName name) {
    static const std::vector<ExactMatrix> sec = build_secii();
    return sec[static_cast<int>(name)];
}

std::pair<int, GeneratorName> identification(SecIIName name) {
    switch (name) {
        case SecIIName::Aplus: return {+1, GeneratorName::S3};
        case SecIIName::Aminus: return {-1, GeneratorName::L3};
        case SecIIName::A3: return {-1, GeneratorName::L1};
        case SecIIName::A0: return {+1, GeneratorName::L2};
        case SecIIName::Bplus: return {+1, GeneratorName::K2};
        case SecIIName::Bminus: return {-1, GeneratorName::Q1};
        case SecIIName::B3: return {+1, GeneratorName::Q3};
        case SecIIName::Cplus: return {+1, GeneratorName::Q2};
        case SecIIName::Cminus: return {+1, GeneratorName::K1};
        case SecIIName::C3: return {-1, GeneratorName::K3};
        default:
            throw NoSingleGeneratorError(
                to_string(name) + " is a half-sum, not a signed catalog generator");
    }
}

ExactMatrix reorder(const ExactMatrix& m, Ordering from, Ordering to) {
    if (m.n() != 4) throw DimensionError("reorder expects a 4x4 matrix");
    if (from == to) return m;
    // Swapping coordinates 1 and 2 (0-based) converts (x1,p1,x2,p2) to
    // (x1,x2,p1,p2); the permutation is an involution, so both directions
    // conjugate by the same matrix.
    static const int perm[4] = {0, 2, 1, 3};
    ExactMatrix r(4);
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) r.set(i, j, m.at(perm[i], perm[j]));
    return r;
}

const ExactMatrix& s2_sign_variant() {
    static const ExactMatrix v = [] {
        Blk s1 = pauli1(), Z = zero2();
        return blk4(ihalf(), Z, neg(s1), s1, Z);
    }();
    return v;
}

const std::vector<CatalogNote>& catalog_notes() {
    static const std::vector<CatalogNote> notes = {
        {"s2-sign",
         "Some block-form transcriptions give S2 with the opposite overall sign "
         "(the s2_sign_variant() matrix). That sign closes the rotation triple "
         "backwards ([S1,S2] = -iS3), flips twelve brackets of the fifteen-"
         "generator table, and breaks the name-identity match with the 6x6 "
         "catalog at the same twelve pairs. The catalog stores the table-"
         "consistent sign, which also equals the traditional-ordering L1 matrix "
         "read as an interleaved matrix."},
        {"gg-line",
         "Fifteen-generator bracket tables commonly state the [K,K] and [Q,Q] "
         "lines and leave [G,G] unstated (one transcription repeats the [Q,Q] "
         "line in its place). The computed brackets are [Gi,Gj] = -i eps_ijk Lk, "
         "the same pattern as [K,K] and [Q,Q]."},
        {"s-intro-signs",
         "Single-bracket listings that introduce S1 and S2 alongside G3 "
         "sometimes carry [G3,K3] = iS2 and [G3,Q3] = -iS1; the catalog "
         "matrices give [G3,K3] = -iS2 and [G3,Q3] = +iS1, consistent with the "
         "systematic lines [Gi,Kj] = -i delta_ij S2 and [Qi,Gj] = -i delta_ij "
         "S1."},
    };
    return notes;
}

}  // namespace oscsym
