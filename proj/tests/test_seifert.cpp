#include <catch2/catch_amalgamated.hpp>

#include "orbiweight/seifert.hpp"

using namespace orbiweight;

TEST_CASE("seifert data validation") {
    SeifertData s;
    s.base = BaseOrbifold::sphere({2, 3});
    s.pairs = {{2, 1}, {3, 1}};
    CHECK_NOTHROW(s.validate());

    // multiplicities >= 2 must match the cone orders as a multiset
    s.pairs = {{2, 1}, {5, 1}};
    CHECK_THROWS_AS(s.validate(), PreconditionViolated);

    // alpha = 1 pairs are allowed and ignored by the matching
    s.pairs = {{2, 1}, {3, 1}, {1, -1}};
    CHECK_NOTHROW(s.validate());

    // gcd(alpha, beta) = 1 required
    s.pairs = {{2, 1}, {3, 0}};
    CHECK_THROWS_AS(s.validate(), PreconditionViolated);
}

TEST_CASE("euler number is the negated sum of beta over alpha") {
    SeifertData s;
    s.base = BaseOrbifold::sphere({2, 3, 6});
    s.pairs = {{3, 2}, {2, 3}, {6, -13}};
    CHECK(euler_number(s) == Rational(0));
    s.pairs = {{3, 1}, {2, 1}, {6, 1}};
    CHECK(euler_number(s) == Rational(-1));
}

TEST_CASE("torus-knot surgery fixture (3,2)") {
    const SeifertData s = torus_surgery_data(3, 2);
    CHECK(s.base == BaseOrbifold::sphere({2, 3, 6}));
    REQUIRE(s.pairs.size() == 3);
    CHECK(s.pairs[0] == std::pair<i64, i64>{3, 2});
    CHECK(s.pairs[1] == std::pair<i64, i64>{2, 3});
    CHECK(s.pairs[2] == std::pair<i64, i64>{6, -13});
    CHECK(euler_number(s) == Rational(0));
    CHECK(print_seifert(s) == "S2(2,3,6) ; (3,2) (2,3) (6,-13)");
}

TEST_CASE("torus parameters are validated") {
    CHECK_THROWS_AS(torus_surgery_data(2, 2), InvalidTorusParameters);
    CHECK_THROWS_AS(torus_surgery_data(4, 2), InvalidTorusParameters);
    CHECK_THROWS_AS(torus_surgery_data(2, 3), InvalidTorusParameters);
    CHECK_THROWS_AS(torus_surgery_data(3, 1), InvalidTorusParameters);
    CHECK_THROWS_AS(connected_sum_surgery_data(6, 4), InvalidTorusParameters);
}

TEST_CASE("connected-sum surgery fixture (3,2)") {
    const SeifertData s = connected_sum_surgery_data(3, 2);
    CHECK(s.base == BaseOrbifold::sphere({2, 2, 3, 3}));
    REQUIRE(s.pairs.size() == 4);
    CHECK(s.pairs[0] == std::pair<i64, i64>{3, 2});
    CHECK(s.pairs[1] == std::pair<i64, i64>{2, 3});
    CHECK(s.pairs[2] == std::pair<i64, i64>{3, -2});
    CHECK(s.pairs[3] == std::pair<i64, i64>{2, -3});
    CHECK(euler_number(s) == Rational(0));
}

TEST_CASE("serialization round-trips") {
    for (auto [p, q] : {std::pair<i64, i64>{3, 2}, {5, 2}, {5, 3}, {7, 4}, {9, 2}}) {
        const SeifertData s = torus_surgery_data(p, q);
        const SeifertData t = parse_seifert(print_seifert(s));
        CHECK(t.base == s.base);
        CHECK(t.pairs == s.pairs);
    }
    const SeifertData c = connected_sum_surgery_data(5, 3);
    CHECK(parse_seifert(print_seifert(c)).pairs == c.pairs);
    CHECK_THROWS_AS(parse_seifert("S2(2,3,6)"), ParseError);
    CHECK_THROWS_AS(parse_seifert("S2(2,3,6) ; (3,2"), ParseError);
}

TEST_CASE("normalization moves preserve the euler number") {
    SeifertData s = torus_surgery_data(5, 3);
    const Rational e0 = euler_number(s);
    for (std::size_t i = 0; i < s.pairs.size(); ++i) {
        const SeifertData moved = normalization_move(s, i);
        CHECK(euler_number(moved) == e0);
        CHECK(moved.pairs.size() == s.pairs.size() + 1);
        CHECK(moved.pairs.back() == std::pair<i64, i64>{1, -1});
    }
}

TEST_CASE("theorem 5 conditions pass on torus-knot surgery data") {
    const SeifertData s = torus_surgery_data(3, 2);
    const LaurentPoly delta = alexander_torus(3, 2);
    const Theorem5Report r = theorem5_check(s, &delta);
    CHECK(r.cond1);
    CHECK(r.cond2);
    CHECK(r.cond3);
    REQUIRE(r.cond5.has_value());
    CHECK(*r.cond5);
    CHECK(r.overall);
    CHECK(r.cond4 == "not computable (fibredness is external input)");

    // without a polynomial, condition 5 is not judged
    const Theorem5Report r2 = theorem5_check(s);
    CHECK_FALSE(r2.cond5.has_value());
    CHECK(r2.overall);
}

TEST_CASE("theorem 5 sharing condition rejects pairwise-coprime multiplicities") {
    // S2(2,3,19): every cone order is coprime to the others, so no fibre can
    // be a rational homology invariant anchor; condition 2 must fail
    SeifertData s;
    s.base = BaseOrbifold::sphere({2, 3, 19});
    s.pairs = {{2, 1}, {3, 1}, {19, 1}};
    const Theorem5Report r = theorem5_check(s);
    CHECK_FALSE(r.cond2);
    CHECK_FALSE(r.overall);
}

TEST_CASE("theorem 5 reciprocal-sum boundary sits exactly at the trefoil") {
    // sum of 1/a_i = 1 exactly for (p,q) = (3,2); below 1 for every other
    // coprime pair
    for (i64 p = 3; p <= 12; ++p)
        for (i64 q = 2; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const SeifertData s = torus_surgery_data(p, q);
            Rational sum(0);
            for (i64 a : s.base.cone_orders) sum = sum + Rational(1, a);
            if (p == 3 && q == 2)
                CHECK(sum == Rational(1));
            else
                CHECK(sum < Rational(1));
            CHECK(theorem5_check(s).cond3);
        }
}

TEST_CASE("laurent polynomial arithmetic") {
    const LaurentPoly t = LaurentPoly::monomial(1, 1);
    const LaurentPoly one = LaurentPoly::one();
    CHECK((t - one) * (t + one) == t * t - one);
    CHECK(t_power_minus_one(6).str() == "-1 + t^6");
    const LaurentPoly q = divide_exact(t_power_minus_one(6), t_power_minus_one(3));
    CHECK(q == LaurentPoly::from_coeffs(0, {1, 0, 0, 1}));
    CHECK_THROWS_AS(divide_exact(t_power_minus_one(5), t_power_minus_one(3)),
                    InternalInconsistency);
    // unit handling: negative exponents
    const LaurentPoly lt = LaurentPoly::monomial(3, -2);
    CHECK((lt * t).min_exp == -1);
}

TEST_CASE("cyclotomic polynomials multiply back to t^n - 1") {
    for (i64 n = 1; n <= 30; ++n) {
        LaurentPoly prod = LaurentPoly::one();
        for (i64 d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        CHECK(prod == t_power_minus_one(n));
    }
    CHECK(cyclotomic(1).str() == "-1 + t");
    CHECK(cyclotomic(6).str() == "1 - t + t^2");
    CHECK(cyclotomic(12).str() == "1 - t^2 + t^4");
}

TEST_CASE("alexander polynomial fixtures") {
    CHECK(alexander_torus(3, 2).str() == "1 - t + t^2");
    CHECK(alexander_torus(3, 2) == cyclotomic(6));
    CHECK(alexander_torus(5, 2).str() == "1 - t + t^2 - t^3 + t^4");
    CHECK(alexander_torus(5, 2) == cyclotomic(10));
    // degree (p-1)(q-1), constant 1, palindromic
    for (i64 p = 2; p <= 12; ++p)
        for (i64 q = 2; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const LaurentPoly d = alexander_torus(p, q);
            CHECK(d.low() == 0);
            CHECK(d.degree() == (p - 1) * (q - 1));
            CHECK(d.at(0) == 1);
            for (i64 k = 0; k <= d.degree(); ++k) CHECK(d.at(k) == d.at(d.degree() - k));
        }
    CHECK_THROWS_AS(alexander_torus(4, 2), InvalidTorusParameters);
}

TEST_CASE("cyclotomic square-free reports") {
    auto rep = is_cyclotomic_squarefree(alexander_torus(3, 2));
    CHECK(rep.squarefree);
    REQUIRE(rep.cyclotomic_factors.has_value());
    CHECK(*rep.cyclotomic_factors == std::vector<i64>{6});

    // (t-1)^2 is a cyclotomic square, hence not square-free
    rep = is_cyclotomic_squarefree(cyclotomic(1) * cyclotomic(1));
    CHECK_FALSE(rep.squarefree);

    // an irreducible non-cyclotomic: square-free but no factor list
    rep = is_cyclotomic_squarefree(LaurentPoly::from_coeffs(0, {2, 1, 1}));
    CHECK(rep.squarefree);
    CHECK_FALSE(rep.cyclotomic_factors.has_value());

    // monic with unit constant term but a non-cyclotomic factor
    rep = is_cyclotomic_squarefree(LaurentPoly::from_coeffs(0, {1, 3, 1}));
    CHECK(rep.squarefree);
    CHECK_FALSE(rep.cyclotomic_factors.has_value());

    // products of several distinct cyclotomics factor fully
    rep = is_cyclotomic_squarefree(cyclotomic(6) * cyclotomic(10) * cyclotomic(4));
    CHECK(rep.squarefree);
    REQUIRE(rep.cyclotomic_factors.has_value());
    CHECK(*rep.cyclotomic_factors == std::vector<i64>{4, 6, 10});

    // units are ignored: -t^3 * Phi_6
    LaurentPoly f = cyclotomic(6) * LaurentPoly::monomial(-1, 3);
    rep = is_cyclotomic_squarefree(f);
    CHECK(rep.squarefree);
    REQUIRE(rep.cyclotomic_factors.has_value());
    CHECK(*rep.cyclotomic_factors == std::vector<i64>{6});

    CHECK_THROWS_AS(is_cyclotomic_squarefree(LaurentPoly::zero()), PreconditionViolated);
}

TEST_CASE("alexander polynomials of torus knots are distinct cyclotomic products") {
    for (i64 p = 3; p <= 10; ++p)
        for (i64 q = 2; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto rep = is_cyclotomic_squarefree(alexander_torus(p, q));
            CAPTURE(p, q);
            CHECK(rep.squarefree);
            REQUIRE(rep.cyclotomic_factors.has_value());
            // the factors are exactly the divisors of pq dividing neither p nor q
            std::vector<i64> expected;
            for (i64 n = 2; n <= p * q; ++n)
                if ((p * q) % n == 0 && p % n != 0 && q % n != 0) expected.push_back(n);
            CHECK(*rep.cyclotomic_factors == expected);
        }
}
