#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deutsch/closed_forms.hpp>
#include <deutsch/error.hpp>
#include <deutsch/oracle.hpp>
#include <deutsch/strip.hpp>

#include <cstdlib>
#include <map>

using deutsch::BigInt;
using deutsch::UsageError;
using namespace deutsch::oracle;

namespace {

constexpr Direction kBoth[] = {Direction::LeftToRight, Direction::RightToLeft};

// Every ordinate sequence in [0, 2n]^n, filtered by is_valid. A right-to-left
// path ending at or below n never rises past 2n.
std::map<std::size_t, long> brute_force(Direction d, std::size_t n, StripSpec strip) {
    std::map<std::size_t, long> out;
    std::vector<int> ord(n + 1, 0);
    const int top = static_cast<int>(2 * n);
    while (true) {
        const LatticePath p{ord};
        if (is_valid(p, d, strip) && p.end_level() <= static_cast<int>(n)) {
            ++out[static_cast<std::size_t>(p.end_level())];
        }
        std::size_t j = 1;
        while (j <= n && ord[j] == top) {
            ord[j] = 0;
            ++j;
        }
        if (j > n) {
            break;
        }
        ++ord[j];
    }
    return out;
}

struct BudgetGuard {
    explicit BudgetGuard(const char* value) { setenv("DEUTSCH_BUDGET", value, 1); }
    ~BudgetGuard() { unsetenv("DEUTSCH_BUDGET"); }
};

} // namespace

TEST_CASE("step rules") {
    CHECK(is_legal_step(Direction::LeftToRight, 0, 1));
    CHECK(is_legal_step(Direction::LeftToRight, 5, 2));
    CHECK_FALSE(is_legal_step(Direction::LeftToRight, 5, 3));
    CHECK_FALSE(is_legal_step(Direction::LeftToRight, 0, 3));
    CHECK(is_legal_step(Direction::RightToLeft, 0, 3));
    CHECK(is_legal_step(Direction::RightToLeft, 2, 1));
    CHECK_FALSE(is_legal_step(Direction::RightToLeft, 3, 0));
    CHECK_FALSE(is_legal_step(Direction::RightToLeft, 1, 1));
}

TEST_CASE("path validity and reversal") {
    const LatticePath p{{0, 1, 2, 3, 0}};
    CHECK(p.length() == 4);
    CHECK(p.area() == 6);
    CHECK(is_valid(p, Direction::LeftToRight, StripSpec::unbounded()));
    CHECK_FALSE(is_valid(p, Direction::LeftToRight, StripSpec::bounded(2)));
    CHECK_FALSE(is_valid(p, Direction::RightToLeft, StripSpec::unbounded()));
    const LatticePath r = reversed(p);
    CHECK(r.ordinates == std::vector<int>{0, 3, 2, 1, 0});
    CHECK(is_valid(r, Direction::RightToLeft, StripSpec::unbounded()));
    CHECK(reversed(r) == p);
    CHECK_FALSE(is_valid(LatticePath{{1, 0}}, Direction::LeftToRight, StripSpec::unbounded()));
    CHECK_FALSE(is_valid(LatticePath{{0, -1}}, Direction::RightToLeft, StripSpec::unbounded()));
}

TEST_CASE("small enumerations") {
    const auto lr = enumerate(Direction::LeftToRight, 4, StripSpec::unbounded());
    CHECK(lr.by_level == std::map<std::size_t, BigInt>{{0, 3}, {2, 3}, {4, 1}});
    CHECK(lr.closed_count == 3);
    CHECK(lr.total_area == 12);
    const auto rl = enumerate(Direction::RightToLeft, 2, StripSpec::unbounded());
    CHECK(rl.by_level == std::map<std::size_t, BigInt>{{0, 1}, {2, 2}});
    CHECK(enumerate(Direction::LeftToRight, 0, StripSpec::unbounded()).closed_count == 1);
}

TEST_CASE("enumeration agrees with brute force") {
    for (Direction d : kBoth) {
        for (std::size_t n = 0; n <= 6; ++n) {
            for (auto strip : {StripSpec::unbounded(), StripSpec::bounded(2)}) {
                const auto rep = enumerate(d, n, strip);
                const auto expect = brute_force(d, n, strip);
                REQUIRE(rep.by_level.size() == expect.size());
                for (const auto& [k, c] : expect) {
                    CHECK(rep.by_level.at(k) == c);
                }
            }
        }
    }
}

TEST_CASE("visitor sees every path once") {
    for (Direction d : kBoth) {
        long seen = 0;
        for_each_path(d, 9, StripSpec::bounded(4), [&](const std::vector<int>& s) {
            CHECK(is_valid(LatticePath{s}, d, StripSpec::bounded(4)));
            ++seen;
        });
        BigInt total = 0;
        for (const auto& [k, c] : enumerate(d, 9, StripSpec::bounded(4)).by_level) {
            total += c;
        }
        CHECK(total == seen);
    }
}

TEST_CASE("closed paths count generalized Catalan numbers") {
    for (std::size_t n = 0; n <= 7; ++n) {
        const BigInt expect = deutsch::closed::cat3(n);
        CHECK(closed_paths(Direction::LeftToRight, 2 * n, StripSpec::unbounded()).size() == expect);
        CHECK(closed_paths(Direction::RightToLeft, 2 * n, StripSpec::unbounded()).size() == expect);
    }
    CHECK(closed_paths(Direction::LeftToRight, 5, StripSpec::unbounded()).empty());
}

TEST_CASE("full-length enumeration matches dp") {
    const auto lr = deutsch::strip::dp_counts(Direction::LeftToRight, 16, StripSpec::unbounded());
    const auto rep = enumerate(Direction::LeftToRight, 16, StripSpec::unbounded());
    for (std::size_t k = 0; k <= 16; ++k) {
        const auto it = rep.by_level.find(k);
        CHECK(lr.at(16, k) == (it == rep.by_level.end() ? BigInt(0) : it->second));
    }
}

TEST_CASE("reversal bijection") {
    const auto rep = reverse_check(6);
    CHECK(rep.passed);
    REQUIRE(rep.lines.size() == 1);
    CHECK(rep.lines[0] == "n=6 lr=12 rl=12");
    for (std::size_t n = 0; n <= 14; n += 2) {
        CHECK_MESSAGE(reverse_check(n).passed, n);
    }
    CHECK_THROWS_AS(reverse_check(5), UsageError);
    CHECK_THROWS_AS(reverse_check(16), UsageError);
}

TEST_CASE("area check") {
    const auto rep = area_check(8);
    CHECK(rep.passed);
    CHECK(rep.lines.size() == 9);
    CHECK_THROWS_AS(area_check(9), UsageError);
}

TEST_CASE("enumeration budget") {
    CHECK(enumeration_budget() == 16);
    CHECK_THROWS_AS(enumerate(Direction::LeftToRight, 17, StripSpec::unbounded()), UsageError);
    {
        BudgetGuard guard("18");
        CHECK(enumeration_budget() == 18);
        CHECK_NOTHROW(enumerate(Direction::LeftToRight, 17, StripSpec::bounded(2)));
    }
    {
        BudgetGuard guard("many");
        CHECK_THROWS_AS(enumeration_budget(), UsageError);
    }
    CHECK(enumeration_budget() == 16);
}
