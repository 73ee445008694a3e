#include <doctest.h>

#include <map>
#include <string>

#include "oscsym/catalog.hpp"
#include "oscsym/errors.hpp"
#include "oscsym/exact.hpp"
#include "oscsym/jsonio.hpp"

using namespace oscsym;

// Independently hand-encoded matrix fixtures.  These were keyed in from the
// printed forms separately from the builders in catalog.cpp, so agreement
// here means the same matrix was transcribed the same way twice.
namespace {

struct Fx {
    const char* name;
    const char* json;
};

const Fx kFxInterleaved[] = {
#include "fixtures/fixtures_interleaved.inc"
};
const Fx kFxTraditional[] = {
#include "fixtures/fixtures_traditional.inc"
};
const Fx kFxSecII[] = {
#include "fixtures/fixtures_secii.inc"
};
const Fx kFxO33[] = {
#include "fixtures/fixtures_o33.inc"
};

}  // namespace

TEST_CASE("interleaved catalog matches independent fixtures entrywise") {
    int count = 0;
    for (const Fx& f : kFxInterleaved) {
        ExactMatrix expect = matrix_from_json_text(f.json);
        const ExactMatrix& got = sp4_generator(parse_generator(f.name), Ordering::Interleaved);
        CHECK_MESSAGE(got == expect, "interleaved ", f.name);
        ++count;
    }
    CHECK(count == 15);
}

TEST_CASE("traditional catalog matches independent fixtures entrywise") {
    int count = 0;
    for (const Fx& f : kFxTraditional) {
        ExactMatrix expect = matrix_from_json_text(f.json);
        const ExactMatrix& got = sp4_generator(parse_generator(f.name), Ordering::Traditional);
        CHECK_MESSAGE(got == expect, "traditional ", f.name);
        ++count;
    }
    CHECK(count == 10);
}

TEST_CASE("single- and soldered-mode catalog matches independent fixtures") {
    int count = 0;
    for (const Fx& f : kFxSecII) {
        ExactMatrix expect = matrix_from_json_text(f.json);
        const ExactMatrix& got = secii_generator(parse_secii(f.name));
        CHECK_MESSAGE(got == expect, "secii ", f.name);
        ++count;
    }
    CHECK(count == 16);
}

TEST_CASE("6x6 catalog matches independent fixtures entrywise") {
    int count = 0;
    for (const Fx& f : kFxO33) {
        ExactMatrix expect = matrix_from_json_text(f.json);
        const ExactMatrix& got = o33_generator(parse_generator(f.name));
        CHECK_MESSAGE(got == expect, "o33 ", f.name);
        ++count;
    }
    CHECK(count == 15);
}

TEST_CASE("generators are i-times-real and traceless") {
    for (GeneratorName g : kAllGenerators) {
        const ExactMatrix& x4 = sp4_generator(g, Ordering::Interleaved);
        CHECK_MESSAGE(x4.times_i().is_real(), "4x4 ", to_string(g));
        CHECK_MESSAGE(x4.trace().is_zero(), "trace 4x4 ", to_string(g));
        const ExactMatrix& x6 = o33_generator(g);
        CHECK_MESSAGE(x6.times_i().is_real(), "6x6 ", to_string(g));
        CHECK_MESSAGE(x6.trace().is_zero(), "trace 6x6 ", to_string(g));
    }
    for (SecIIName n : kAllSecII) CHECK(secii_generator(n).trace().is_zero());
}

TEST_CASE("reorder is an involution connecting the two orderings") {
    for (GeneratorName g : kSp4Members) {
        const ExactMatrix& xi = sp4_generator(g, Ordering::Interleaved);
        const ExactMatrix& xt = sp4_generator(g, Ordering::Traditional);
        CHECK_MESSAGE(reorder(xi, Ordering::Interleaved, Ordering::Traditional) == xt,
                      "to traditional ", to_string(g));
        CHECK_MESSAGE(reorder(xt, Ordering::Traditional, Ordering::Interleaved) == xi,
                      "back ", to_string(g));
    }
    for (GeneratorName g : kAllGenerators) {
        const ExactMatrix& x = sp4_generator(g, Ordering::Interleaved);
        ExactMatrix there = reorder(x, Ordering::Interleaved, Ordering::Traditional);
        CHECK(reorder(there, Ordering::Traditional, Ordering::Interleaved) == x);
    }
    // same-ordering reorder is the identity
    const ExactMatrix& l1 = sp4_generator(GeneratorName::L1, Ordering::Interleaved);
    CHECK(reorder(l1, Ordering::Interleaved, Ordering::Interleaved) == l1);
}

TEST_CASE("traditional catalog only holds the ten symplectic members") {
    for (GeneratorName g :
         {GeneratorName::S1, GeneratorName::S2, GeneratorName::G1, GeneratorName::G2,
          GeneratorName::G3}) {
        CHECK_THROWS_AS(sp4_generator(g, Ordering::Traditional), CatalogMissError);
        CHECK_NOTHROW(sp4_generator(g, Ordering::Interleaved));
    }
}

TEST_CASE("identification maps soldered names onto signed catalog generators") {
    const std::map<SecIIName, std::pair<int, GeneratorName>> expect = {
        {SecIIName::Aplus, {+1, GeneratorName::S3}},
        {SecIIName::Aminus, {-1, GeneratorName::L3}},
        {SecIIName::A0, {+1, GeneratorName::L2}},
        {SecIIName::A3, {-1, GeneratorName::L1}},
        {SecIIName::Bplus, {+1, GeneratorName::K2}},
        {SecIIName::Bminus, {-1, GeneratorName::Q1}},
        {SecIIName::B3, {+1, GeneratorName::Q3}},
        {SecIIName::Cplus, {+1, GeneratorName::Q2}},
        {SecIIName::Cminus, {+1, GeneratorName::K1}},
        {SecIIName::C3, {-1, GeneratorName::K3}},
    };
    for (const auto& [name, want] : expect) {
        auto [sign, g] = identification(name);
        CHECK_MESSAGE(sign == want.first, to_string(name));
        CHECK_MESSAGE(g == want.second, to_string(name));
        ExactMatrix lhs = secii_generator(name);
        ExactMatrix rhs = sp4_generator(g, Ordering::Interleaved)
                              .scalar_mul(GaussRational(Rational(sign)));
        CHECK_MESSAGE(lhs == rhs, "matrix identity ", to_string(name));
    }
    for (SecIIName n : {SecIIName::A1, SecIIName::B1, SecIIName::C1, SecIIName::A2,
                        SecIIName::B2, SecIIName::C2})
        CHECK_THROWS_AS(identification(n), NoSingleGeneratorError);
}

TEST_CASE("ten-generator block catalog read without reordering lands on the L2-pivot set") {
    // Reading the traditional matrices as if their rows were interleaved
    // coordinates maps the set onto ten interleaved generators: the members
    // of the L2-pivot subalgebra, with no sign adjustments.
    const std::map<GeneratorName, GeneratorName> as_interleaved = {
        {GeneratorName::L1, GeneratorName::S2}, {GeneratorName::L2, GeneratorName::S3},
        {GeneratorName::L3, GeneratorName::S1}, {GeneratorName::S3, GeneratorName::L2},
        {GeneratorName::K1, GeneratorName::Q3}, {GeneratorName::K2, GeneratorName::G3},
        {GeneratorName::K3, GeneratorName::K3}, {GeneratorName::Q1, GeneratorName::Q1},
        {GeneratorName::Q2, GeneratorName::G1}, {GeneratorName::Q3, GeneratorName::K1},
    };
    for (const auto& [trad, inter] : as_interleaved)
        CHECK_MESSAGE(sp4_generator(trad, Ordering::Traditional) ==
                          sp4_generator(inter, Ordering::Interleaved),
                      to_string(trad), " as interleaved = ", to_string(inter));
}

TEST_CASE("the S2 sign variant is the exact negative of the catalog matrix") {
    const ExactMatrix& s2 = sp4_generator(GeneratorName::S2, Ordering::Interleaved);
    CHECK(s2_sign_variant() == -s2);
    CHECK(s2_sign_variant() != s2);
}

TEST_CASE("catalog notes are present and self-describing") {
    const auto& notes = catalog_notes();
    REQUIRE(notes.size() == 3);
    bool s2 = false, gg = false;
    for (const CatalogNote& n : notes) {
        CHECK(!n.text.empty());
        if (n.id == "s2-sign") s2 = true;
        if (n.id == "gg-line") gg = true;
    }
    CHECK(s2);
    CHECK(gg);
}

TEST_CASE("name parsing round-trips and rejects junk") {
    for (GeneratorName g : kAllGenerators) CHECK(parse_generator(to_string(g)) == g);
    for (SecIIName n : kAllSecII) CHECK(parse_secii(to_string(n)) == n);
    CHECK(parse_secii("Aplus") == SecIIName::Aplus);
    CHECK(parse_secii("A+") == SecIIName::Aplus);
    CHECK(parse_secii("B-") == SecIIName::Bminus);
    CHECK_THROWS_AS(parse_generator("L4"), ParseError);
    CHECK_THROWS_AS(parse_secii("D1"), ParseError);
    CHECK(parse_ordering("interleaved") == Ordering::Interleaved);
    CHECK(parse_ordering("traditional") == Ordering::Traditional);
    CHECK_THROWS_AS(parse_ordering("rowmajor"), ParseError);
}

TEST_CASE("squared rotation generators are quarter identities") {
    // spot algebraic sanity: S3^2 = L3^2 = I/4 in the 4x4 catalog
    ExactMatrix quarter = ExactMatrix::identity(4).scalar_mul(
        GaussRational(Rational(1, 4)));
    const ExactMatrix& s3 = sp4_generator(GeneratorName::S3, Ordering::Interleaved);
    const ExactMatrix& l3 = sp4_generator(GeneratorName::L3, Ordering::Interleaved);
    CHECK(s3 * s3 == quarter);
    CHECK(l3 * l3 == quarter);
}
