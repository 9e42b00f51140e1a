#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oscalg/classify.hpp"
#include "oscalg/operators.hpp"

using namespace oscalg;

TEST_CASE("degree detection")
{
    SECTION("exact rational descriptors")
    {
        CHECK(detect_degree(laguerre(0).b2).degree == 2);
        CHECK(detect_degree(laguerre(0).a).degree == 1);
        CHECK_FALSE(detect_degree(jacobi(1, 2).a).bounded);
        CHECK_FALSE(detect_degree(jacobi(1, 2).b2).bounded);
        // a rational function that secretly is a polynomial: (n^2-1)/(n+1)
        auto hidden = rational_sequence::from_ratio({rational(-1), rational(0), rational(1)},
                                                    {rational(1), rational(1)});
        const auto deg = detect_degree(hidden);
        CHECK(deg.bounded);
        CHECK(deg.degree == 1);
    }
    SECTION("tables")
    {
        auto constant = rational_sequence::from_table(
            std::vector<rational>(8, rational(3)));
        CHECK(detect_degree(constant).degree == 0);

        std::vector<rational> geometric;
        for (int i = 0; i < 10; ++i) geometric.push_back(rational(bigint(1) << i));
        CHECK_FALSE(detect_degree(rational_sequence::from_table(geometric)).bounded);

        std::vector<rational> cubic;
        for (long n = 0; n < 12; ++n) cubic.push_back(rational(n * n * n - n + 2));
        CHECK(detect_degree(rational_sequence::from_table(cubic)).degree == 3);

        CHECK_THROWS_MATCHES(
            detect_degree(rational_sequence::from_table({rational(1), rational(2)})), error,
            Catch::Matchers::Predicate<error>(
                [](const error& e) { return e.code() == errc::insufficient_table; }));
    }
    SECTION("probe precondition")
    {
        CHECK_THROWS_AS(detect_degree(laguerre(0).a, 4), error);
    }
}

TEST_CASE("classification of the built-in families")
{
    SECTION("laguerre is finite with the expected coefficients")
    {
        for (const rational& alpha : {rational(0), rational(1), rat(5, 2)}) {
            const auto res = classify(laguerre(alpha));
            REQUIRE(res.finite);
            REQUIRE(res.alpha.has_value());
            REQUIRE(res.beta.has_value());
            CHECK((*res.alpha)[0] == alpha + 1);
            CHECK((*res.alpha)[1] == alpha + 2);
            CHECK((*res.alpha)[2] == rational(1));
            CHECK((*res.beta)[0] == alpha + 1);
            CHECK((*res.beta)[1] == rational(2));
            CHECK(res.boundary_consistent);
        }
    }
    SECTION("jacobi is infinite")
    {
        CHECK_FALSE(classify(jacobi(1, 2)).finite);
        CHECK_FALSE(classify(jacobi(0, 0)).finite);
        CHECK_FALSE(classify(jacobi(rat(1, 2), rat(3, 2))).finite);
    }
    SECTION("hermite via the symmetric entry point")
    {
        const auto res = classify_symmetric(hermite_prob());
        REQUIRE(res.finite);
        CHECK((*res.alpha) == std::array<rational, 3>{rational(1), rational(1), rational(0)});
        CHECK((*res.beta) == std::array<rational, 2>{rational(0), rational(0)});
        CHECK(res.boundary_consistent);
    }
    SECTION("beckers is finite")
    {
        const auto res = classify(beckers(rat(3, 2)));
        CHECK(res.finite);
        CHECK(res.p_a.degree == 0);
    }
    SECTION("quadratic diagonal forces infinite dimension")
    {
        const auto sys = custom("quad-a",
                                rational_sequence::from_poly({rational(0), rational(0), rational(1)}),
                                rational_sequence::from_poly({rational(1), rational(1)}));
        const auto res = classify(sys);
        CHECK_FALSE(res.finite);
        CHECK(res.p_a.degree == 2);
        CHECK(res.deg_b2.degree == 1);
    }
    SECTION("quadratic b2 with b2(-1) != 0 is infinite despite the right degrees")
    {
        const auto sys = custom("boundary",
                                rational_sequence::from_poly({}),
                                rational_sequence::from_poly({rational(1), rational(1), rational(1)}));
        const auto res = classify_symmetric(sys);
        CHECK_FALSE(res.finite);
        CHECK(res.deg_b2.degree == 2);
        CHECK_FALSE(res.boundary_consistent);
    }
    SECTION("geometric b2 table is infinite")
    {
        std::vector<rational> geometric;
        for (int i = 0; i < 10; ++i) geometric.push_back(rational(bigint(1) << i));
        const auto sys = custom("geom", rational_sequence::from_poly({}),
                                rational_sequence::from_table(geometric));
        CHECK_FALSE(classify_symmetric(sys).finite);
    }
    SECTION("classify_symmetric rejects non-symmetric systems")
    {
        CHECK_THROWS_MATCHES(classify_symmetric(laguerre(0)), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.code() == errc::not_symmetric;
                             }));
    }
}

TEST_CASE("classification is probe-invariant and scale-covariant")
{
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> small(-4, 4);
    const auto random_poly = [&](int deg) {
        rpoly p(static_cast<size_t>(deg) + 1);
        for (auto& c : p) c = rat(small(rng), 1 + std::abs(small(rng)));
        return p;
    };

    const std::vector<rational> scales = {rational(2), rat(1, 3), rat(5, 2)};
    for (int trial = 0; trial < 25; ++trial) {
        recurrence_system sys =
            custom("random", rational_sequence::from_poly(random_poly(trial % 3)),
                   rational_sequence::from_poly(random_poly(trial % 4)));
        const auto base = classify(sys, 8);
        CHECK(base.finite == classify(sys, 64).finite);

        for (const auto& c : scales) {
            const auto scaled = classify(scaled_system(sys, c));
            CHECK(scaled.finite == base.finite);
            if (base.alpha && scaled.alpha)
                for (int i = 0; i < 3; ++i)
                    CHECK((*scaled.alpha)[static_cast<size_t>(i)] ==
                          (*base.alpha)[static_cast<size_t>(i)] * c * c);
            if (base.beta && scaled.beta)
                for (int i = 0; i < 2; ++i)
                    CHECK((*scaled.beta)[static_cast<size_t>(i)] ==
                          (*base.beta)[static_cast<size_t>(i)] * c);
        }
    }
}

TEST_CASE("a finite verdict implies the closing bracket relations")
{
    constexpr int truncation = 64;
    for (const auto& sys : {laguerre(1), hermite_prob(), beckers(rat(3, 2))}) {
        const auto res = classify(sys);
        REQUIRE(res.finite);
        const auto& alpha = *res.alpha;
        const auto& beta = *res.beta;
        // the fitted beta coefficients live on the stored diagonal; bracket
        // relations see them through the sqrt(2 * a_scale2) fold
        const double fold2 = diag_fold2(sys);

        const auto a = build_operator(operator_kind::lowering, sys, truncation);
        const auto adag = build_operator(operator_kind::raising, sys, truncation);
        const auto num = build_operator(operator_kind::number, sys, truncation);
        const auto id = build_operator(operator_kind::identity, sys, truncation);

        // [N, Adag] = Adag - sqrt2 beta_1 N - sqrt2 beta_0 I
        auto lhs = commutator(num, adag);
        auto rhs = op_sub(op_sub(adag, op_scale(num, fold2 * to_double(beta[1]))),
                          op_scale(id, fold2 * to_double(beta[0])));
        CHECK(op_sub(lhs, rhs).interior_max() < 1e-10);

        // [N, A] = -A
        CHECK(op_add(commutator(num, a), a).interior_max() < 1e-10);

        // [A, Adag] = 4 alpha_2 N + 2(alpha_1 - alpha_2) I + sqrt2 beta_1 A
        auto lhs2 = commutator(a, adag);
        auto rhs2 = op_add(op_add(op_scale(num, 4.0 * to_double(alpha[2])),
                                  op_scale(id, 2.0 * to_double(alpha[1] - alpha[2]))),
                           op_scale(a, fold2 * to_double(beta[1])));
        CHECK(op_sub(lhs2, rhs2).interior_max() < 1e-10);
    }
}
