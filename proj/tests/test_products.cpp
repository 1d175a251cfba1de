#include <doctest.h>

#include "mzv/nc_poly.hpp"
#include "mzv/products.hpp"
#include "mzv/word.hpp"

using namespace mzv;

namespace {
NcPoly poly(std::initializer_list<std::pair<const char*, ParamPoly>> terms) {
    NcPoly p;
    for (const auto& [w, coeff] : terms) p.add_term(Word::parse(w), coeff);
    return p;
}
NcPoly mono(const char* w) { return NcPoly::monomial(Word::parse(w)); }
}  // namespace

TEST_CASE("duality map on letters and words") {
    // x -> x + y, y -> -y, extended as an algebra map
    CHECK(phi(Word::parse("x")) == poly({{"x", ParamPoly::one()},
                                         {"y", ParamPoly::one()}}));
    CHECK(phi(Word::parse("y")) == poly({{"y", -ParamPoly::one()}}));
    CHECK(phi(Word::parse("xy")) == poly({{"xy", -ParamPoly::one()},
                                          {"yy", -ParamPoly::one()}}));
    CHECK(phi(Word()) == NcPoly::unit());
    CHECK(phi(NcPoly()) == NcPoly());
}

TEST_CASE("duality map is an involution") {
    for (unsigned d = 0; d <= 8; ++d)
        for (Word w : enumerate_words(d))
            CHECK(phi(phi(w)) == NcPoly::monomial(w));
}

TEST_CASE("duality map is an algebra automorphism") {
    for (unsigned d1 = 0; d1 <= 4; ++d1)
        for (Word a : enumerate_words(d1))
            for (unsigned d2 = 0; d2 <= 3; ++d2)
                for (Word b : enumerate_words(d2))
                    CHECK(phi(a.concat(b)) == phi(a) * phi(b));
}

TEST_CASE("harmonic product base cases") {
    CHECK(harmonic(Word(), Word::parse("yx")) == mono("yx"));
    CHECK(harmonic(Word::parse("y"), Word::parse("y")) ==
          poly({{"yy", ParamPoly::constant(2)}, {"yx", ParamPoly::one()}}));
    CHECK(harmonic(Word::parse("x"), Word::parse("y")) == mono("xy"));
    // z_1 * z_2 = z_1 z_2 + z_2 z_1 + z_3
    CHECK(harmonic(Word::parse("y"), Word::parse("yx")) ==
          poly({{"yyx", ParamPoly::one()},
                {"yxy", ParamPoly::one()},
                {"yxx", ParamPoly::one()}}));
}

TEST_CASE("harmonic product is commutative and associative on samples") {
    for (unsigned d1 = 1; d1 <= 4; ++d1)
        for (Word a : enumerate_words(d1))
            for (unsigned d2 = d1; d2 <= 4; ++d2)
                for (Word b : enumerate_words(d2))
                    CHECK(harmonic(a, b) == harmonic(b, a));
    Word u = Word::parse("yx"), v = Word::parse("y"), w = Word::parse("xy");
    CHECK(harmonic(harmonic(NcPoly::monomial(u), NcPoly::monomial(v)),
                   NcPoly::monomial(w)) ==
          harmonic(NcPoly::monomial(u),
                   harmonic(NcPoly::monomial(v), NcPoly::monomial(w))));
}

TEST_CASE("diamond product base cases") {
    CHECK(diamond(Word::parse("y"), Word::parse("y")) ==
          poly({{"yy", ParamPoly::one()}, {"yx", -ParamPoly::one()}}));
    CHECK(diamond(Word::parse("x"), Word::parse("y")) ==
          poly({{"xy", ParamPoly::one()}, {"yx", ParamPoly::one()}}));
    CHECK(diamond(Word(), Word::parse("yx")) == mono("yx"));
    CHECK(diamond(NcPoly::unit(), NcPoly::unit()) == NcPoly::unit());
}

TEST_CASE("diamond is the harmonic product transported through duality") {
    for (unsigned d1 = 0; d1 <= 4; ++d1)
        for (Word a : enumerate_words(d1))
            for (unsigned d2 = 0; d2 <= 4; ++d2)
                for (Word b : enumerate_words(d2))
                    CHECK(diamond(a, b) == phi(harmonic(phi(a), phi(b))));
}

TEST_CASE("z pulls out of the diamond product") {
    NcPoly z = NcPoly::z();
    for (unsigned d1 = 0; d1 <= 3; ++d1)
        for (Word a : enumerate_words(d1))
            for (unsigned d2 = 0; d2 <= 3; ++d2)
                for (Word b : enumerate_words(d2)) {
                    NcPoly pa = NcPoly::monomial(a), pb = NcPoly::monomial(b);
                    NcPoly expected = z * diamond(pa, pb);
                    CHECK(diamond(z * pa, pb) == expected);
                    CHECK(diamond(pa, z * pb) == expected);
                }
}

TEST_CASE("mixed-letter recursion of the diamond product") {
    // x w1 <> y w2 = x (w1 <> y w2) + y (x w1 <> w2)
    for (unsigned d1 = 0; d1 <= 3; ++d1)
        for (Word w1 : enumerate_words(d1))
            for (unsigned d2 = 0; d2 <= 3; ++d2)
                for (Word w2 : enumerate_words(d2)) {
                    Word xw1 = Word::x().concat(w1);
                    Word yw2 = Word::y().concat(w2);
                    NcPoly lhs = diamond(xw1, yw2);
                    NcPoly rhs = diamond(NcPoly::monomial(w1),
                                         NcPoly::monomial(yw2))
                                     .left_mul(Word::x()) +
                                 diamond(NcPoly::monomial(xw1),
                                         NcPoly::monomial(w2))
                                     .left_mul(Word::y());
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("products preserve the y-subalgebra") {
    // y h is closed under both * and <>
    for (unsigned d1 = 1; d1 <= 4; ++d1)
        for (Word a : enumerate_words(d1))
            for (unsigned d2 = 1; d2 <= 3; ++d2)
                for (Word b : enumerate_words(d2)) {
                    if (a.first() != Letter::Y || b.first() != Letter::Y)
                        continue;
                    CHECK(harmonic(a, b).in_y_h());
                    CHECK(diamond(a, b).in_y_h());
                }
}
