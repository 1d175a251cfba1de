#include <doctest.h>

#include <cmath>

#include "mzv/operators.hpp"
#include "mzv/oracles.hpp"
#include "mzv/products.hpp"
#include "mzv/relations.hpp"

using namespace mzv;

namespace {
NumericConfig at(std::uint64_t n) {
    NumericConfig cfg;
    cfg.truncation = n;
    return cfg;
}
}  // namespace

TEST_CASE("numeric oracle basics") {
    // zeta(2) -> pi^2/6
    double z2 = mzv_numeric(Index({2}), at(100000));
    CHECK(std::fabs(z2 - 1.6449340668) < 2e-5);  // tail ~ 1/N
    // depth-2 spot value: zeta(1,2) ~ 1.2020569 (equals zeta(3))
    double z12 = mzv_numeric(Index({1, 2}), at(1000000));
    CHECK(std::fabs(z12 - 1.2020569032) < 1e-4);
    CHECK_THROWS_AS(mzv_numeric(Index({2, 1}), at(1000)), std::domain_error);
    CHECK_THROWS_AS(mzv_numeric(Index({1}), at(1000)), std::domain_error);
    CHECK_THROWS_AS(mzv_numeric(Index({2}), at(9)), std::invalid_argument);
}

TEST_CASE("numeric oracle is monotone in the truncation bound") {
    for (const Index& k :
         {Index({2}), Index({1, 2}), Index({2, 3}), Index({1, 1, 2})}) {
        double prev = 0.0;
        for (std::uint64_t n : {10, 100, 1000, 10000}) {
            double v = mzv_numeric(k, at(n));
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("extended-precision backend agrees with doubles at small weight") {
    NumericConfig hi = at(10000);
    hi.precision_bits = 64;  // long double path
    CHECK(std::fabs(mzv_numeric(Index({1, 2}), hi) -
                    mzv_numeric(Index({1, 2}), at(10000))) < 1e-12);
}

TEST_CASE("numeric verification of the Euler relation") {
    Relation euler = quasi_derivation_relation(1, Word::parse("yx"));
    auto rep = verify_relation_numeric(euler, mpq_class(0), at(1000000), 1e-4);
    CHECK(rep.pass);
    CHECK(rep.magnitude < 1e-4);
    CHECK(rep.c_value == "");  // n=1 relations carry no parameter
    CHECK(rep.source == "qd yx");
    CHECK(rep.n == 1);
    CHECK_FALSE(rep.is_finite);
    CHECK_THROWS_AS(verify_relation_numeric(euler, mpq_class(0), at(1000), 0.0),
                    std::invalid_argument);
}

TEST_CASE("truncation tail of a depth-heavy relation exceeds a fine tolerance") {
    // The (n=2, yx, c=1) instance misses 1e-3 at N=1e5: the slowest term of
    // its combination decays like log(N)/N, leaving ~1.7e-3 of tail.
    Relation r = quasi_derivation_relation(2, Word::parse("yx"));
    auto rep = verify_relation_numeric(r, mpq_class(1), at(100000), 1e-3);
    CHECK_FALSE(rep.pass);
    CHECK(rep.magnitude > 1.5e-3);
    CHECK(rep.magnitude < 1.9e-3);
    auto rep2 = verify_relation_numeric(r, mpq_class(1), at(100000), 2e-3);
    CHECK(rep2.pass);
}

TEST_CASE("numeric negative control: a sign flip is loud") {
    // zeta(1,2) + zeta(3) is far from zero
    Relation euler = quasi_derivation_relation(1, Word::parse("yx"));
    Relation corrupt = euler;
    for (auto& [idx, coeff] : corrupt.combination)
        if (idx == Index({3})) coeff = -coeff;
    auto rep = verify_relation_numeric(corrupt, mpq_class(0), at(100000), 1e-1);
    CHECK_FALSE(rep.pass);
    CHECK(rep.magnitude > 1e-1);
    CHECK(rep.magnitude > 2.0);  // ~ 2 zeta(3)
}

TEST_CASE("prime utilities") {
    CHECK(is_prime(2));
    CHECK(is_prime(199));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));  // 7 * 13
    CHECK(primes_in_range(11, 97).size() == 21);
    CHECK(primes_in_range(198, 198).empty());
    CHECK(primes_in_range(0, 2) == std::vector<std::uint64_t>{2});
}

TEST_CASE("finite oracle residues") {
    CHECK(zeta_a_mod_p(Index({1}), 7).residue == 0);
    CHECK(zeta_a_mod_p(Index({2}), 5).residue == 0);
    CHECK(zeta_a_mod_p(Index({1, 1}), 7).residue == 0);
    // p - 1 | k makes the depth-1 sum nonzero: sum of n^{-4} mod 5 is 4
    CHECK(zeta_a_mod_p(Index({4}), 5).residue == 4);

    CHECK(zeta_a_mod_p(Index({1, 2}), 11).residue == 4);
    CHECK(zeta_a_mod_p(Index({1, 2}), 13).residue == 5);
    CHECK(zeta_a_mod_p(Index({1, 2}), 17).residue == 4);
    CHECK(zeta_a_mod_p(Index({1, 2}), 19).residue == 15);
    CHECK(zeta_a_mod_p(Index({1, 2}), 23).residue == 15);
    CHECK(zeta_a_mod_p(Index({2, 1}), 11).residue == 7);
    CHECK(zeta_a_mod_p(Index({2, 1}), 13).residue == 8);
    CHECK(zeta_a_mod_p(Index({1, 4}), 11).residue == 5);
    CHECK(zeta_a_mod_p(Index({1, 4}), 13).residue == 3);
    CHECK(zeta_a_mod_p(Index({2, 3}), 11).residue == 1);
    CHECK(zeta_a_mod_p(Index({2, 3}), 13).residue == 7);
    CHECK(zeta_a_mod_p(Index({1, 1, 2}), 11).residue == 0);
    CHECK(zeta_a_mod_p(Index({1, 1, 2}), 13).residue == 0);

    CHECK_THROWS_AS(zeta_a_mod_p(Index({1, 2}), 12), std::invalid_argument);
    CHECK_THROWS_AS(zeta_a_mod_p(Index({7}), 7), std::invalid_argument);
}

TEST_CASE("finite evaluation of polynomials") {
    // zf(q_2, c=0) = zeta_A(2) + zeta_A(1,1) = 0 mod 13
    CHECK(zf_mod_p(q_n_recursive(2), 13, mpq_class(0)).residue == 0);
    CHECK(zf_mod_p(q_n_recursive(3), 11, mpq_class(1)).residue == 5);
    CHECK(zf_mod_p(q_n_recursive(3), 13, mpq_class(1)).residue == 12);
    CHECK(zf_mod_p(q_n_recursive(3), 17, mpq_class(1)).residue == 11);

    NcPoly not_y;
    not_y.add_term(Word::parse("xy"), ParamPoly::one());
    CHECK_THROWS_AS(zf_mod_p(not_y, 11, mpq_class(0)), std::domain_error);
    // c denominator divisible by p
    CHECK_THROWS_AS(zf_mod_p(q_n_recursive(2), 5, mpq_class(3, 5)),
                    std::domain_error);
}

TEST_CASE("q specializes to a finite annihilator at c=0") {
    // zf(q_n, c=0) = 0 whenever p-1 does not divide n (here p-1 >= 10 > n)
    for (unsigned n = 1; n <= 3; ++n)
        for (std::uint64_t p : {11, 13, 17, 19, 23})
            CHECK(zf_mod_p(q_n_recursive(n), p, mpq_class(0)).residue == 0);
}

TEST_CASE("finite main identity at spot points") {
    for (const char* w : {"yx", "yxx", "yyx"})
        for (unsigned n = 1; n <= 2; ++n)
            for (std::uint64_t p : {11, 13, 97})
                for (int c : {0, 1}) {
                    auto rep = verify_finite_main_identity(n, Word::parse(w), p,
                                                mpq_class(c));
                    CHECK(rep.pass);
                    CHECK(rep.residue == 0);
                    CHECK(rep.lhs_residue == rep.rhs_residue);
                    CHECK(rep.is_finite);
                    CHECK(rep.N_or_p == p);
                }
}

TEST_CASE("finite main identity input validation") {
    CHECK_THROWS_AS(verify_finite_main_identity(0, Word::parse("yx"), 11, mpq_class(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_finite_main_identity(1, Word::parse("xy"), 11, mpq_class(0)),
                    std::invalid_argument);
    // exclusion bound: weight + n + 2 = 5 for (n=1, yx), so p=5 is too small
    CHECK_THROWS_AS(verify_finite_main_identity(1, Word::parse("yx"), 5, mpq_class(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_finite_main_identity(1, Word::parse("yx"), 12, mpq_class(0)),
                    std::invalid_argument);
}

TEST_CASE("finite negative control: a corrupted coefficient is detected") {
    // Corrupt the c-linear term of the stripped second quasi-derivation of
    // yx, then compare against the product side. The corruption only shows
    // where c != 0.
    NcPoly stripped = quasi_del(2, Word::parse("yx")).right_divide_by_x();
    NcPoly corrupt = stripped;
    ParamPoly flip = stripped.coefficient(Word::parse("yyx"));
    corrupt.add_term(Word::parse("yyx"), -flip - flip);  // negate in place

    auto diff = [&](std::uint64_t p, const mpq_class& c) {
        std::uint64_t lhs = zf_mod_p(corrupt, p, c).residue;
        std::uint64_t rhs = zf_mod_p(NcPoly::monomial(Word::parse("y")), p, c)
                                .residue *
                            zf_mod_p(q_n_recursive(2), p, c).residue % p;
        return (lhs + p - rhs) % p;
    };
    CHECK(diff(11, mpq_class(1)) == 8);
    CHECK(diff(13, mpq_class(3, 5)) == 6);
    CHECK(diff(11, mpq_class(0)) == 0);  // invisible at c=0
    CHECK(diff(13, mpq_class(0)) == 0);

    // sanity: the uncorrupted polynomial passes at the same points
    auto clean = [&](std::uint64_t p, const mpq_class& c) {
        std::uint64_t lhs = zf_mod_p(stripped, p, c).residue;
        std::uint64_t rhs = zf_mod_p(NcPoly::monomial(Word::parse("y")), p, c)
                                .residue *
                            zf_mod_p(q_n_recursive(2), p, c).residue % p;
        return (lhs + p - rhs) % p;
    };
    CHECK(clean(11, mpq_class(1)) == 0);
    CHECK(clean(13, mpq_class(3, 5)) == 0);
}

TEST_CASE("finite oracle is a harmonic homomorphism at spot pairs") {
    for (const char* a : {"y", "yx", "yxx", "yyx"})
        for (const char* b : {"y", "yx", "yy"})
            for (std::uint64_t p : {11, 13, 31}) {
                Word wa = Word::parse(a), wb = Word::parse(b);
                std::uint64_t lhs =
                    zf_mod_p(harmonic(wa, wb), p, mpq_class(0)).residue;
                std::uint64_t rhs =
                    zf_mod_p(NcPoly::monomial(wa), p, mpq_class(0)).residue *
                    zf_mod_p(NcPoly::monomial(wb), p, mpq_class(0)).residue %
                    p;
                CHECK(lhs == rhs);
            }
}

TEST_CASE("finite oracle is duality-invariant at spot words") {
    for (const char* w : {"y", "yx", "yxy", "yyx", "yxxy"})
        for (std::uint64_t p : {11, 13, 31}) {
            Word ww = Word::parse(w);
            CHECK(zf_mod_p(phi(ww), p, mpq_class(0)).residue ==
                  zf_mod_p(NcPoly::monomial(ww), p, mpq_class(0)).residue);
        }
}
