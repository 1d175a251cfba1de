#include <doctest.h>

#include <string>

#include "mzv/nc_poly.hpp"

using namespace mzv;

namespace {
NcPoly poly(std::initializer_list<std::pair<const char*, ParamPoly>> terms) {
    NcPoly p;
    for (const auto& [w, coeff] : terms) p.add_term(Word::parse(w), coeff);
    return p;
}
}  // namespace

TEST_CASE("noncommutative arithmetic") {
    NcPoly a = poly({{"x", ParamPoly::one()}, {"y", ParamPoly::one()}});
    NcPoly b = NcPoly::monomial(Word::parse("y"));
    CHECK(a * b == poly({{"xy", ParamPoly::one()}, {"yy", ParamPoly::one()}}));
    CHECK(b * a == poly({{"yx", ParamPoly::one()}, {"yy", ParamPoly::one()}}));
    CHECK(a * b != b * a);
    CHECK(a - a == NcPoly());
    CHECK((a + a) == a.scaled(mpq_class(2)));
    CHECK(-a == a.scaled(mpq_class(-1)));
    CHECK(NcPoly::unit() * a == a);
    CHECK(a.left_mul(Word::parse("y")) == b * a);
    CHECK(a.right_mul(Word::parse("y")) == a * b);
    // z = x + y as a polynomial
    CHECK(NcPoly::z() == a);
}

TEST_CASE("terms cancel to zero exactly") {
    NcPoly p;
    p.add_term(Word::parse("yx"), ParamPoly::c_power(1));
    p.add_term(Word::parse("yx"), -ParamPoly::c_power(1));
    CHECK(p.is_zero());
    CHECK(p.coefficient(Word::parse("yx")).is_zero());
}

TEST_CASE("c-layer expansion") {
    // yx + (1+c)yy  ->  layers [(0, yx + yy), (1, yy)]
    NcPoly p = poly({{"yx", ParamPoly::one()},
                     {"yy", ParamPoly::one() + ParamPoly::c_power(1)}});
    auto layers = p.expand_in_c();
    REQUIRE(layers.size() == 2);
    CHECK(layers[0].first == 0);
    CHECK(layers[0].second ==
          poly({{"yx", ParamPoly::one()}, {"yy", ParamPoly::one()}}));
    CHECK(layers[1].first == 1);
    CHECK(layers[1].second == poly({{"yy", ParamPoly::one()}}));
    // gaps allowed: 1 + c^2 has layers at exponents 0 and 2 only
    NcPoly q = poly({{"y", ParamPoly::one() + ParamPoly::c_power(2)}});
    auto qlayers = q.expand_in_c();
    REQUIRE(qlayers.size() == 2);
    CHECK(qlayers[1].first == 2);
    // reassembling c^e * layer_e recovers the original
    NcPoly back;
    for (const auto& [e, layer] : layers) back += layer.scaled(ParamPoly::c_power(e));
    CHECK(back == p);
}

TEST_CASE("c specialization") {
    NcPoly p = poly({{"yx", ParamPoly::one()},
                     {"yy", ParamPoly::one() + ParamPoly::c_power(1)}});
    CHECK(p.substitute_c(mpq_class(0)) ==
          poly({{"yx", ParamPoly::one()}, {"yy", ParamPoly::one()}}));
    CHECK(p.substitute_c(mpq_class(-1)) == poly({{"yx", ParamPoly::one()}}));
    CHECK(p.substitute_c(mpq_class(1, 2)) ==
          poly({{"yx", ParamPoly::one()},
                {"yy", ParamPoly::constant(mpq_class(3, 2))}}));
}

TEST_CASE("right division by x") {
    NcPoly p = poly({{"yxx", ParamPoly::one()}, {"yyx", ParamPoly::c_power(1)}});
    CHECK(p.right_divide_by_x() ==
          poly({{"yx", ParamPoly::one()}, {"yy", ParamPoly::c_power(1)}}));
    NcPoly bad = poly({{"xy", ParamPoly::one()}});
    CHECK_THROWS_WITH_AS(bad.right_divide_by_x(),
                         "not divisible by x on the right: xy",
                         std::domain_error);
    CHECK_THROWS_AS(NcPoly::unit().right_divide_by_x(), std::domain_error);
    CHECK(NcPoly().right_divide_by_x() == NcPoly());
}

TEST_CASE("y h and y h x membership") {
    CHECK(poly({{"yx", ParamPoly::one()}, {"yyy", ParamPoly::one()}}).in_y_h());
    CHECK_FALSE(poly({{"xy", ParamPoly::one()}}).in_y_h());
    CHECK(poly({{"yx", ParamPoly::one()}}).in_y_h_x());
    CHECK_FALSE(poly({{"yy", ParamPoly::one()}}).in_y_h_x());
    CHECK(NcPoly().in_y_h());
    CHECK(NcPoly().in_y_h_x());
    CHECK_FALSE(NcPoly::unit().in_y_h());
}

TEST_CASE("polynomial rendering") {
    CHECK(NcPoly().str() == "0");
    CHECK(NcPoly::unit().str() == "1");
    CHECK(poly({{"yx", ParamPoly::one()},
                {"yy", ParamPoly::one() + ParamPoly::c_power(1)}})
              .str() == "yx + (1+c)yy");
    CHECK(poly({{"yx", -ParamPoly::one()}}).str() == "-yx");
    CHECK(poly({{"yx", ParamPoly::one()}, {"yy", -ParamPoly::one()}}).str() ==
          "yx - yy");
    CHECK(poly({{"yx", ParamPoly::constant(2)}}).str() == "2yx");
    CHECK(poly({{"", ParamPoly::constant(mpq_class(1, 2))}}).str() == "1/2");
    // terms ordered shortlex: degree first, then x < y
    CHECK(poly({{"yyy", ParamPoly::one()}, {"x", ParamPoly::one()}}).str() ==
          "x + yyy");
}

TEST_CASE("sorted term extraction is shortlex") {
    NcPoly p = poly({{"yy", ParamPoly::one()},
                     {"x", ParamPoly::one()},
                     {"xxy", ParamPoly::one()}});
    auto terms = p.sorted_terms();
    REQUIRE(terms.size() == 3);
    CHECK(terms[0].first.str() == "x");
    CHECK(terms[1].first.str() == "yy");
    CHECK(terms[2].first.str() == "xxy");
}
