#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mramsey/formulas.hpp"

using namespace mramsey;

static RamseyValue sps(int j, int n) { return family_value({FamilyKind::StarPathStripe, j, n}); }
static RamseyValue sc7(int j, int n) { return family_value({FamilyKind::StripeC7, j, n}); }

TEST_CASE("star-path-stripe closed form") {
    // m_j = floor(2n/j) + 1, spot values first
    CHECK(sps(2, 2) == RamseyValue::finite(3));
    CHECK(sps(2, 3) == RamseyValue::finite(4));
    CHECK(sps(2, 5) == RamseyValue::finite(6));
    CHECK(sps(3, 2) == RamseyValue::finite(2));
    CHECK(sps(3, 3) == RamseyValue::finite(3));
    CHECK(sps(3, 4) == RamseyValue::finite(3));
    CHECK(sps(4, 4) == RamseyValue::finite(3));
    CHECK(sps(7, 2) == RamseyValue::finite(1));   // host smaller than the patterns
    CHECK(sps(12, 12) == RamseyValue::finite(3));

    for (int j = 2; j <= 12; ++j)
        for (int n = 2; n <= 12; ++n) {
            auto v = sps(j, n);
            REQUIRE(v.kind == RamseyValue::Kind::Finite);
            CHECK(v.t == 2 * n / j + 1);
        }
    CHECK_THROWS_AS(sps(1, 3), DomainError);
    CHECK_THROWS_AS(sps(3, 1), DomainError);
    try {
        sps(1, 5);
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()) == "star-path-stripe requires j >= 2 (got j=1, n=5)");
    }
}

TEST_CASE("stripe-c7 piecewise values") {
    // two parts can never host an odd cycle
    for (int n = 2; n <= 12; ++n) CHECK(sc7(2, n) == RamseyValue::infinite());

    CHECK(sc7(3, 2) == RamseyValue::finite(3));
    for (int n = 3; n <= 12; ++n) CHECK(sc7(3, n) == RamseyValue::finite(n));

    CHECK(sc7(4, 2) == RamseyValue::finite(2));
    CHECK(sc7(4, 3) == RamseyValue::finite(3));
    CHECK(sc7(4, 4) == RamseyValue::finite(3));   // ceil(5/2)
    CHECK(sc7(4, 5) == RamseyValue::finite(3));   // ceil(6/2)
    CHECK(sc7(4, 6) == RamseyValue::finite(4));
    for (int n = 4; n <= 12; ++n) {
        auto v = sc7(4, n);
        REQUIRE(v.kind == RamseyValue::Kind::Finite);
        CHECK(v.t == (n + 2) / 2);
    }

    // five or more parts: open, lower bound only when n >= j
    CHECK(sc7(5, 5) == RamseyValue::unknown(3));   // ceil(12/5)
    CHECK(sc7(5, 7) == RamseyValue::unknown(4));   // ceil(16/5)
    CHECK(sc7(6, 2) == RamseyValue::unknown());
    CHECK(sc7(5, 4) == RamseyValue::unknown());    // n < j, no bound claimed
    for (int j = 5; j <= 12; ++j)
        for (int n = 2; n <= 12; ++n) {
            auto v = sc7(j, n);
            REQUIRE(v.kind == RamseyValue::Kind::Unknown);
            if (n >= j) {
                REQUIRE(v.lower_bound.has_value());
                CHECK(*v.lower_bound == (2 * n + 2 + j - 1) / j);
            } else {
                CHECK(!v.lower_bound.has_value());
            }
        }

    CHECK_THROWS_AS(sc7(1, 3), DomainError);
    CHECK_THROWS_AS(sc7(3, 1), DomainError);
}

TEST_CASE("stripe-c7 lower bound guards") {
    CHECK(lb_stripe_c7(3, 3) == 3);
    CHECK(lb_stripe_c7(3, 5) == 4);
    CHECK(lb_stripe_c7(4, 4) == 3);
    CHECK(lb_stripe_c7(5, 9) == 4);
    CHECK_THROWS_AS(lb_stripe_c7(2, 5), DomainError);
    CHECK_THROWS_AS(lb_stripe_c7(4, 3), DomainError);
    try {
        lb_stripe_c7(4, 3);
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()) == "lb_stripe_c7 requires n >= j (got j=4, n=3)");
    }
    // where both the closed form and the bound apply, the bound never exceeds it
    for (int n = 4; n <= 12; ++n) {
        auto v = sc7(4, n);
        CHECK(lb_stripe_c7(4, n) <= v.t);
    }
    for (int n = 3; n <= 12; ++n) CHECK(lb_stripe_c7(3, n) <= sc7(3, n).t);
}

TEST_CASE("stripe-c6 single cited value") {
    CHECK(family_value({FamilyKind::StripeC6, 3, 3}) == RamseyValue::finite(3));
    CHECK_THROWS_AS(family_value({FamilyKind::StripeC6, 3, 4}), DomainError);
    CHECK_THROWS_AS(family_value({FamilyKind::StripeC6, 4, 3}), DomainError);
}

TEST_CASE("family target lists") {
    auto t1 = family_targets({FamilyKind::StarPathStripe, 3, 4});
    REQUIRE(t1.size() == 3);
    CHECK(t1[0] == TargetPattern::star(2));
    CHECK(t1[1] == TargetPattern::path(4));
    CHECK(t1[2] == TargetPattern::stripe(4));

    auto t2 = family_targets({FamilyKind::StripeC7, 4, 3});
    REQUIRE(t2.size() == 2);
    CHECK(t2[0] == TargetPattern::stripe(3));
    CHECK(t2[1] == TargetPattern::cycle(7));

    auto t3 = family_targets({FamilyKind::StripeC6, 3, 3});
    REQUIRE(t3.size() == 2);
    CHECK(t3[1] == TargetPattern::cycle(6));
}

TEST_CASE("family names round trip") {
    for (auto k : {FamilyKind::StarPathStripe, FamilyKind::StripeC7, FamilyKind::StripeC6})
        CHECK(parse_family(family_name(k)) == k);
    CHECK_THROWS_AS(parse_family("nope"), DomainError);
}
