#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deutsch/error.hpp>
#include <deutsch/roots.hpp>
#include <deutsch/strip.hpp>

#include <cmath>

using deutsch::DomainError;
using deutsch::UsageError;
using namespace deutsch::roots;
namespace strip = deutsch::strip;

TEST_CASE("root set at t = 0.1") {
    const RootSet rs = make_root_set(0.1);
    CHECK(rs.r1 == doctest::Approx(0.9).epsilon(1e-14));
    CHECK(rs.r2 == doctest::Approx((0.1 + std::sqrt(0.37)) / 2).epsilon(1e-14));
    CHECK(rs.r3 == doctest::Approx((0.1 - std::sqrt(0.37)) / 2).epsilon(1e-14));
    CHECK(std::abs(rs.r1 + rs.r2 + rs.r3 - 1) < 1e-10);
    CHECK(rs.z * rs.z == doctest::Approx(0.1 * 0.81));
}

TEST_CASE("root set domain") {
    CHECK_THROWS_AS(make_root_set(0.0), DomainError);
    CHECK_THROWS_AS(make_root_set(1.0 / 3.0), DomainError);
    CHECK_THROWS_AS(make_root_set(-0.2), DomainError);
    CHECK_NOTHROW(make_root_set(0.33));
}

TEST_CASE("symmetric functions on the grid") {
    const auto grid = t_grid();
    REQUIRE(grid.size() == 6);
    CHECK(grid.front() == doctest::Approx(0.05));
    CHECK(grid.back() == doctest::Approx(0.30));
    for (double t : grid) {
        const auto rep = verify_factorizations(make_root_set(t), 1e-10);
        CHECK(rep.passed);
        CHECK(rep.max_residual < 1e-12);
        CHECK(rep.residuals.size() >= 6);
    }
}

TEST_CASE("cubic roots solve their cubics") {
    for (double t : t_grid()) {
        const RootSet rs = make_root_set(t);
        const double z2 = rs.z * rs.z;
        for (double r : {rs.r1, rs.r2, rs.r3}) {
            CHECK(std::abs(r * r * r - r * r + z2) < 1e-12);
        }
        for (double mu : {rs.mu1, rs.mu2, rs.mu3}) {
            CHECK(std::abs(mu * mu * mu - mu - rs.z) < 1e-12);
        }
    }
}

TEST_CASE("radical forms of the recurrence sequences") {
    for (double t : t_grid()) {
        const auto rep = verify_an_bn(make_root_set(t), 30, 1e-9);
        CHECK_MESSAGE(rep.passed, rep.failure);
    }
    CHECK_THROWS_AS(verify_an_bn(make_root_set(0.33), 5, 1e-9), DomainError);
}

TEST_CASE("a tolerance of zero reports a failure") {
    const auto rep = verify_an_bn(make_root_set(0.2), 30, 0.0);
    CHECK_FALSE(rep.passed);
    CHECK_FALSE(rep.failure.empty());
}

TEST_CASE("inverting z(t)") {
    for (double t : {0.01, 0.05, 0.1, 0.2, 0.3, 0.33}) {
        const double z = std::sqrt(t) * (1 - t);
        CHECK(std::abs(t_of_z(z) - t) < 1e-12);
    }
    CHECK(t_of_z(0.0) == 0.0);
    CHECK_THROWS_AS(t_of_z(std::sqrt(4.0 / 27.0)), DomainError);
    CHECK_THROWS_AS(t_of_z(1.0), DomainError);
}

TEST_CASE("mu form of g_i against summed counts") {
    for (double z : {0.1, 0.2, 0.3}) {
        const RootSet rs = make_root_set(t_of_z(z));
        const auto table = strip::dp_counts(strip::Direction::RightToLeft, 80, strip::StripSpec::unbounded());
        for (std::size_t i = 0; i <= 8; ++i) {
            const auto value = static_cast<double>(table.column(i, 80).evaluate(z));
            CHECK(std::abs(g_mu_form(i, rs) - value) < 1e-9);
        }
    }
}

TEST_CASE("verify_g_numeric") {
    for (std::size_t i = 0; i <= 12; ++i) {
        CHECK(verify_g_numeric(i, 40, 0.1, 1e-9).passed);
        CHECK(verify_g_numeric(i, 40, 0.2, 1e-9).passed);
    }
    CHECK_THROWS_AS(verify_g_numeric(13, 40, 0.1, 1e-9), UsageError);
    CHECK_THROWS_AS(verify_g_numeric(1, 40, 0.0, 1e-9), DomainError);
}
