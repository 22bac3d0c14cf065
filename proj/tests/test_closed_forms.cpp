#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deutsch/closed_forms.hpp>
#include <deutsch/error.hpp>
#include <deutsch/oracle.hpp>
#include <deutsch/strip.hpp>

using deutsch::BigInt;
using deutsch::UsageError;
using deutsch::series::ZSeries;
using deutsch::strip::Direction;
using deutsch::strip::StripSpec;
using namespace deutsch::closed;
namespace oracle = deutsch::oracle;
namespace strip = deutsch::strip;

TEST_CASE("binomials") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(5, 6) == 0);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(0, 0) == 1);
    CHECK_THROWS_AS(binom(-1, 0), UsageError);
    BinomExpr e;
    e.add(2, 4, 2);
    e.add_if_live(-1, 4, -1);
    e.add_if_live(-1, 3, 1);
    CHECK(e.terms().size() == 2);
    CHECK(e.evaluate() == 9);
}

TEST_CASE("generalized Catalan numbers") {
    const long expect[] = {1, 1, 3, 12, 55, 273, 1428, 7752};
    for (std::size_t n = 0; n < 8; ++n) {
        CHECK(cat3(n) == expect[n]);
        CHECK(count_lr_closed(2 * n, 0) == expect[n]);
    }
    CHECK(count_lr_closed(10, 0) != 268);
    CHECK(count_lr_closed(12, 0) != 1338);
}

TEST_CASE("left-to-right closed form against enumeration and dp") {
    for (std::size_t n = 0; n <= 14; ++n) {
        const auto rep = oracle::enumerate(Direction::LeftToRight, n, StripSpec::unbounded());
        for (std::size_t k = 0; k <= n + 1; ++k) {
            const auto it = rep.by_level.find(k);
            CHECK(count_lr_closed(n, k) == (it == rep.by_level.end() ? BigInt(0) : it->second));
        }
    }
    const auto table = strip::dp_counts(Direction::LeftToRight, 40, StripSpec::unbounded());
    for (std::size_t n = 0; n <= 40; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(count_lr_closed(n, k) == table.at(n, k));
        }
    }
    CHECK(count_lr_closed(9, 1) == 143);
    CHECK(count_lr_closed(9, 3) == 88);
    CHECK(count_lr_closed(5, 2) == 0);
}

TEST_CASE("f_k series") {
    for (std::size_t k = 0; k <= 6; ++k) {
        CHECK(deutsch::series::zseries_of(f_closed(k), 24) == strip::stabilized(Direction::LeftToRight, k, 24));
    }
}

TEST_CASE("g_i closed forms") {
    const auto g2 = g_closed(2);
    CHECK(g2.level() == 2);
    CHECK(g2.coefficient(8) == 218);
    CHECK(g_closed(3).coefficient(11) == 4896);
    CHECK(g_closed(3).coefficient(10) == 0);
    for (std::size_t i = 0; i <= 9; ++i) {
        CHECK(g_closed(i).realize(30) == strip::stabilized(Direction::RightToLeft, i, 30));
    }
}

TEST_CASE("right-to-left closed form against enumeration and dp") {
    for (std::size_t n = 0; n <= 12; ++n) {
        const auto rep = oracle::enumerate(Direction::RightToLeft, n, StripSpec::unbounded());
        for (std::size_t i = 0; i <= n; ++i) {
            const auto it = rep.by_level.find(i);
            CHECK(count_rl_closed(n, i) == (it == rep.by_level.end() ? BigInt(0) : it->second));
        }
    }
    const auto table = strip::dp_counts(Direction::RightToLeft, 30, StripSpec::unbounded());
    for (std::size_t n = 0; n <= 30; ++n) {
        for (std::size_t i = 0; i <= 12; ++i) {
            CHECK(count_rl_closed(n, i) == table.at(n, i));
            CHECK(g_closed(i).coefficient(n) == table.at(n, i));
        }
    }
}

TEST_CASE("area coefficients") {
    CHECK(area_coeff(0) == 0);
    CHECK(area_coeff(1) == 1);
    CHECK(area_coeff(2) == 12);
    CHECK(area_coeff(3) == 102);
    CHECK(deutsch::series::coeff_x(area_gf(), 2) == 12);
    const ZSeries conv = area_convolution(40);
    for (std::size_t n = 0; n <= 20; ++n) {
        CHECK(area_coeff(n) == deutsch::series::coeff_x(area_gf(), n));
        CHECK(conv[2 * n] == area_coeff(n));
        if (2 * n + 1 <= 40) {
            CHECK(conv[2 * n + 1] == 0);
        }
    }
    for (std::size_t n = 0; n <= 7; ++n) {
        CHECK(oracle::enumerate(Direction::LeftToRight, 2 * n, StripSpec::unbounded()).total_area == area_coeff(n));
    }
}
