#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deutsch/error.hpp>
#include <deutsch/oracle.hpp>
#include <deutsch/strip.hpp>

#include <algorithm>
#include <numeric>

using deutsch::BigInt;
using deutsch::InternalError;
using deutsch::UsageError;
using deutsch::series::IntPoly;
using deutsch::series::ZSeries;
using namespace deutsch::strip;

namespace {

constexpr Direction kBoth[] = {Direction::LeftToRight, Direction::RightToLeft};

// m x m matrix I - zA where A[k][j] = 1 when level j can step to level k
// left to right (j = k-1, or j above k by an odd amount).
std::vector<std::vector<IntPoly>> transfer_matrix(std::size_t m) {
    std::vector<std::vector<IntPoly>> a(m, std::vector<IntPoly>(m));
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t j = 0; j < m; ++j) {
            IntPoly e = k == j ? IntPoly{1} : IntPoly{};
            const bool step = j + 1 == k || (j > k && (j - k) % 2 == 1);
            if (step) {
                e = e - IntPoly{0, 1};
            }
            a[k][j] = e;
        }
    }
    return a;
}

IntPoly leibniz_det(const std::vector<std::vector<IntPoly>>& a) {
    const std::size_t m = a.size();
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    IntPoly total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                inversions += perm[i] > perm[j] ? 1 : 0;
            }
        }
        IntPoly term{inversions % 2 == 0 ? 1 : -1};
        for (std::size_t i = 0; i < m && !term.is_zero(); ++i) {
            term = term * a[i][perm[i]];
        }
        total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

BigInt oracle_count(Direction d, std::size_t n, std::size_t k, StripSpec strip) {
    const auto rep = deutsch::oracle::enumerate(d, n, strip);
    const auto it = rep.by_level.find(k);
    return it == rep.by_level.end() ? BigInt(0) : it->second;
}

} // namespace

TEST_CASE("direction names") {
    CHECK(to_string(Direction::LeftToRight) == "lr");
    CHECK(to_string(Direction::RightToLeft) == "rl");
    CHECK(parse_direction("rl") == Direction::RightToLeft);
    CHECK_FALSE(parse_direction("up").has_value());
}

TEST_CASE("small triangles") {
    const auto lr = dp_counts(Direction::LeftToRight, 4, StripSpec::unbounded());
    CHECK(lr.row(4) == std::vector<BigInt>{3, 0, 3, 0, 1});
    CHECK(lr.at(3, 1) == 2);
    CHECK(lr.at(3, 9) == 0);
    CHECK(lr.at(9, 0) == 0);
    const auto rl = dp_counts(Direction::RightToLeft, 2, StripSpec::unbounded());
    CHECK(rl.row(2) == std::vector<BigInt>{1, 0, 2});
    CHECK(rl.width() == 3);
    CHECK(dp_counts(Direction::LeftToRight, 5, StripSpec::bounded(2)).width() == 3);
}

TEST_CASE("known entries of the unbounded tables") {
    const auto lr = dp_counts(Direction::LeftToRight, 12, StripSpec::unbounded());
    CHECK(lr.at(9, 1) == 143);
    CHECK(lr.at(9, 3) == 88);
    CHECK(lr.at(12, 0) == 1428);
    const auto rl = dp_counts(Direction::RightToLeft, 11, StripSpec::unbounded());
    CHECK(rl.at(11, 3) == 4896);
    CHECK(rl.at(8, 2) == 218);
}

TEST_CASE("dp agrees with path enumeration") {
    for (Direction d : kBoth) {
        const auto table = dp_counts(d, 12, StripSpec::unbounded());
        for (std::size_t n = 0; n <= 12; ++n) {
            const auto rep = deutsch::oracle::enumerate(d, n, StripSpec::unbounded());
            BigInt row_total = 0;
            for (const auto& [k, c] : rep.by_level) {
                CHECK(table.at(n, k) == c);
                row_total += c;
            }
            BigInt dp_total = 0;
            for (std::size_t k = 0; k <= n; ++k) {
                dp_total += table.at(n, k);
            }
            CHECK(dp_total == row_total);
        }
        for (unsigned h = 0; h <= 6; ++h) {
            const auto bounded_table = dp_counts(d, 12, StripSpec::bounded(h));
            for (std::size_t n = 0; n <= 12; ++n) {
                for (std::size_t k = 0; k <= h; ++k) {
                    CHECK(bounded_table.at(n, k) == oracle_count(d, n, k, StripSpec::bounded(h)));
                }
            }
        }
    }
}

TEST_CASE("parallel dp equals the literal recursion") {
    for (Direction d : kBoth) {
        CHECK(dp_counts(d, 80, StripSpec::unbounded()) == dp_counts_reference(d, 80, StripSpec::unbounded()));
        CHECK(dp_counts(d, 80, StripSpec::bounded(70)) == dp_counts_reference(d, 80, StripSpec::bounded(70)));
        CHECK(dp_counts(d, 30, StripSpec::bounded(3)) == dp_counts_reference(d, 30, StripSpec::bounded(3)));
    }
}

TEST_CASE("columns are clipped series") {
    const auto lr = dp_counts(Direction::LeftToRight, 6, StripSpec::unbounded());
    CHECK(lr.column(0, 6) == ZSeries(std::vector<BigInt>{1, 0, 1, 0, 3, 0, 12}));
    CHECK(lr.column(0, 20).order() == 6);
}

TEST_CASE("recurrence sequences") {
    CHECK_THROWS_AS(seq_a(-4, 5), UsageError);
    CHECK_THROWS_AS(seq_b(-4, 5), UsageError);
    CHECK(seq_a(-2, 5).is_zero());
    for (std::size_t m = 0; m <= 15; ++m) {
        CHECK(det_d(m, 20) == seq_a(static_cast<int>(m) + 1, 20));
    }
}

TEST_CASE("determinants against Leibniz expansion") {
    for (std::size_t m = 1; m <= 7; ++m) {
        const IntPoly expect = leibniz_det(transfer_matrix(m));
        const ZSeries lhs = ZSeries::from_poly(expect, m + 1);
        CHECK(det_d(m, m + 1) == lhs);
        for (Direction d : kBoth) {
            CHECK(det_direct(d, m, 0, m + 1) == lhs);
        }
    }
    CHECK(det_d(0, 3) == ZSeries::one(3));
}

TEST_CASE("replaced-column determinants") {
    CHECK(delta(2, 2, 4) == ZSeries::monomial(4, 1));
    CHECK(delta(3, 3, 4) == ZSeries::monomial(4, 2));
    for (std::size_t m = 1; m <= 9; ++m) {
        CHECK(delta(m, 1, m + 1) == det_d(m - 1, m + 1));
        for (std::size_t q = 1; q <= m; ++q) {
            CHECK(delta(m, q, m + 1) == det_direct(Direction::RightToLeft, m, q, m + 1));
        }
    }
    CHECK_THROWS_AS(det_direct(Direction::LeftToRight, 3, 4, 4), UsageError);
}

TEST_CASE("closed-form strips") {
    // h = 1 left to right: z^0 + z^2 + z^4 + ...
    CHECK(bounded_f(0, 1, 8) == ZSeries(std::vector<BigInt>{1, 0, 1, 0, 1, 0, 1, 0, 1}));
    const auto solved = solve_system(Direction::RightToLeft, 2, 7);
    CHECK(solved[1] == ZSeries(std::vector<BigInt>{0, 1, 0, 2, 0, 4, 0, 8}));
    CHECK_THROWS_AS(bounded_f(3, 2, 5), UsageError);
    CHECK_THROWS_AS(bounded_g(3, 2, 5), UsageError);
}

TEST_CASE("three methods agree in every strip") {
    const std::size_t order = 16;
    for (Direction d : kBoth) {
        for (std::size_t h = 0; h <= 8; ++h) {
            const auto table = dp_counts(d, order, StripSpec::bounded(static_cast<unsigned>(h)));
            const auto solved = solve_system(d, h, order);
            REQUIRE(solved.size() == h + 1);
            for (std::size_t k = 0; k <= h; ++k) {
                CHECK(table.column(k, order) == bounded(d, k, h, order));
                CHECK(table.column(k, order) == solved[k]);
            }
        }
    }
}

TEST_CASE("raising the barrier never loses paths") {
    const std::size_t order = 14;
    for (Direction d : kBoth) {
        for (std::size_t level = 0; level <= 3; ++level) {
            ZSeries prev = bounded(d, level, level, order);
            for (std::size_t h = level + 1; h <= stabilization_height(level, order) + 1; ++h) {
                const ZSeries cur = bounded(d, level, h, order);
                for (std::size_t p = 0; p <= order; ++p) {
                    CHECK(cur[p] >= prev[p]);
                }
                prev = cur;
            }
            CHECK(prev == stabilized(d, level, order));
        }
    }
}

TEST_CASE("stabilized series equal the unbounded dp") {
    const std::size_t order = 20;
    for (Direction d : kBoth) {
        const auto table = dp_counts(d, order, StripSpec::unbounded());
        for (std::size_t k = 0; k <= 6; ++k) {
            CHECK(stabilized(d, k, order) == table.column(k, order));
        }
    }
}
