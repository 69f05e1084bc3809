#include <doctest.h>

#include <random>

#include "simcore/moments.hpp"

using namespace simcore;

namespace {

std::mt19937_64 rng(5081123);

}  // anonymous namespace

TEST_CASE("(3,5) moment suite, both engines") {
    for (Engine engine : {Engine::Jet, Engine::Full}) {
        MomentSet m = core_moments({3, 5}, 6, engine);
        CHECK(m.count == 7);
        CHECK(m.mean() == Rational(3));
        CHECK(m.variance() == Rational(6));
        CHECK(m.central[3] == Rational(90, 7));
        CHECK(m.central[4] == Rational(726, 7));
        CHECK(m.central[5] == Rational(2850, 7));
        CHECK(m.central[6] == Rational(2346));
        CHECK(m.raw[0] == Rational(1));
    }
}

TEST_CASE("(3,5) skewness as an exact radical") {
    MomentSet m = core_moments({3, 5}, 3);
    Radical alpha3 = m.standardized(3);
    CHECK(alpha3 == Radical(Rational(5, 14), Integer(6)));
    // Definition check: alpha_3^2 * m_2^3 = m_3^2.
    CHECK(alpha3.square() * m.variance().pow(3) ==
          m.central[3] * m.central[3]);
    CHECK_THROWS_AS(m.standardized(2), std::invalid_argument);
    CHECK_THROWS_AS(m.standardized(7), std::invalid_argument);  // beyond max_order
}

TEST_CASE("raw moments by direct weighting") {
    // f = 1 + q + 2q^2 + 2q^4 + q^8: raw_1 = (0+1+4+8+8)/7 = 3.
    QPolynomial f = oracle_generating_polynomial({3, 5});
    std::vector<Rational> raw = raw_moments(f, 2);
    CHECK(raw == std::vector<Rational>{Rational(1), Rational(3), Rational(15)});
    CHECK_THROWS_AS(raw_moments(QPolynomial(), 2), std::domain_error);
}

TEST_CASE("central and raw transforms are mutually inverse") {
    std::uniform_int_distribution<long long> coin(0, 30);
    for (int it = 0; it < 100; ++it) {
        std::vector<Rational> raw(8);
        raw[0] = Rational(1);
        for (int r = 1; r < 8; ++r) raw[r] = Rational(coin(rng), 1 + coin(rng));
        std::vector<Rational> central = central_from_raw(raw);
        CHECK(central[0] == Rational(1));
        CHECK(central[1] == Rational(0));
        CHECK(raw_from_central(central, raw[1]) == raw);
    }
}

TEST_CASE("moments_from_polynomial validates counting polynomials") {
    QPolynomial neg;
    neg.add_term(0, Rational(2));
    neg.add_term(1, Rational(-1));
    CHECK_THROWS_AS(moments_from_polynomial(neg, 2), std::domain_error);
    QPolynomial frac = QPolynomial::monomial(Rational(1, 2), 0);
    CHECK_THROWS_AS(moments_from_polynomial(frac, 2), std::domain_error);
}

TEST_CASE("closed forms: spot values") {
    CorePair c{3, 5};
    CHECK(theorem_value(1, c) == Rational(3));
    CHECK(theorem_value(2, c) == Rational(6));
    CHECK(theorem_value(3, c) == Rational(90, 7));
    CHECK(theorem_value(4, c) == Rational(726, 7));
    CHECK(theorem_value(5, c) == Rational(2850, 7));
    CHECK(theorem_value(6, c) == Rational(2346));
    CHECK(theorem_value(7, {2, 3}) == Rational(0));
    CHECK(theorem_value(7, {3, 4}) == Rational(2058, 5));
    CHECK(theorem_value(8, {2, 3}) == Rational(1, 256));
    CHECK(theorem_value(8, {3, 4}) == Rational(6818, 5));
    CHECK(theorem_value(9, {2, 3}) == Rational(0));
    CHECK(theorem_value(9, {3, 4}) == Rational(3834));
    CHECK_THROWS_AS(theorem_value(7, {3, 5}), std::invalid_argument);  // t != s+1
    CHECK_THROWS_AS(theorem_value(0, c), std::invalid_argument);
    CHECK_THROWS_AS(theorem_value(10, c), std::invalid_argument);
}

TEST_CASE("closed forms: structure") {
    for (int id = 1; id <= 6; ++id) {
        const BivariatePolynomial& p = theorem_polynomial(id);
        CHECK(p.is_symmetric());
        long long total = 0;
        for (const auto& [key, coeff] : p.terms())
            total = std::max(total, key.first + key.second);
        CHECK(total == 3 * id);  // total degree 3r
    }
    for (int id = 7; id <= 9; ++id) {
        const BivariatePolynomial& p = theorem_polynomial(id);
        for (const auto& [key, coeff] : p.terms()) CHECK(key.second == 0);  // univariate
        CHECK(p.degree_in_s() == 3 * id);
    }
}

TEST_CASE("closed forms match brute-force moments on tiny pairs") {
    // (3,4)-cores have sizes {0,1,2,2,5}; every statistic is checkable by hand.
    MomentSet m34 = moments_from_polynomial(oracle_generating_polynomial({3, 4}), 9);
    CHECK(m34.mean() == Rational(2));
    CHECK(m34.central[7] == Rational(2058, 5));
    CHECK(m34.central[8] == Rational(6818, 5));
    CHECK(m34.central[9] == Rational(3834));
    MomentSet m23 = moments_from_polynomial(oracle_generating_polynomial({2, 3}), 9);
    CHECK(m23.central[7] == Rational(0));
    CHECK(m23.central[8] == Rational(1, 256));
    CHECK(m23.central[9] == Rational(0));
}

TEST_CASE("verify_theorem across engines and ids") {
    std::vector<CorePair> pairs = {{2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
    for (int id = 1; id <= 9; ++id) {
        VerifyResult res = verify_theorem(id, pairs);
        CHECK(res.all_match);
        REQUIRE(res.rows.size() == pairs.size());
        for (const VerifyRow& row : res.rows) {
            CHECK(row.match);
            CHECK(row.expected == row.actual);
        }
    }
    VerifyResult full = verify_theorem(3, {{3, 5}, {4, 7}}, Engine::Full);
    CHECK(full.all_match);
    CHECK_THROWS_AS(verify_theorem(7, {{3, 5}}), std::invalid_argument);
}

TEST_CASE("limiting standardized moments along t = s + 1") {
    CHECK(limiting_standardized_moment(3, 1) == Radical(Rational(4, 7), Integer(10)));
    CHECK(limiting_standardized_moment(4, 1) == Radical(Rational(57, 7)));
    CHECK(limiting_standardized_moment(5, 1) == Radical(Rational(920, 77), Integer(10)));
    CHECK(limiting_standardized_moment(6, 1) == Radical(Rational(1537805, 7007)));
    CHECK(limiting_standardized_moment(7, 1) ==
          Radical(Rational(466860, 1001), Integer(10)));
    CHECK(limiting_standardized_moment(8, 1) == Radical(Rational(193032265, 17017)));
    CHECK(limiting_standardized_moment(9, 1) ==
          Radical(Rational(70231858960LL, 2263261), Integer(10)));
}

TEST_CASE("the limit does not depend on the offset t - s for r <= 6") {
    for (int r = 3; r <= 6; ++r) {
        Radical base = limiting_standardized_moment(r, 1);
        CHECK(limiting_standardized_moment(r, 2) == base);
        CHECK(limiting_standardized_moment(r, 3) == base);
    }
    CHECK_THROWS_AS(limiting_standardized_moment(7, 2), std::invalid_argument);
    CHECK_THROWS_AS(limiting_standardized_moment(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(limiting_standardized_moment(10, 1), std::invalid_argument);
    CHECK_THROWS_AS(limiting_standardized_moment(3, 0), std::invalid_argument);
}

TEST_CASE("probability generating function normalizes the counts") {
    QPolynomial pgf = probability_generating_function(oracle_generating_polynomial({3, 5}));
    CHECK(pgf.value_at_one() == Rational(1));
    CHECK(pgf.coefficient(2) == Rational(2, 7));
    CHECK_THROWS_AS(probability_generating_function(QPolynomial()), std::domain_error);
}
