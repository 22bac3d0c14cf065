#pragma once

// Deutsch paths in a strip 0 <= level <= h: dynamic programming, the
// determinant sequences of the banded transfer system, Cramer quotients
// and direct elimination.

#include <deutsch/bigint.hpp>
#include <deutsch/series.hpp>

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace deutsch::strip {

using series::ZSeries;

/// LeftToRight: up +1, downs -1,-3,-5,...
/// RightToLeft: ups +1,+3,+5,..., down -1 (the reversal of LeftToRight).
enum class Direction { LeftToRight, RightToLeft };

std::string_view to_string(Direction d);
std::optional<Direction> parse_direction(std::string_view s);

class StripSpec {
public:
    static StripSpec unbounded() { return StripSpec(); }
    static StripSpec bounded(unsigned height) { return StripSpec(height); }

    bool is_bounded() const { return height_.has_value(); }
    /// Barrier height; only meaningful when bounded.
    unsigned height() const { return *height_; }

    friend bool operator==(const StripSpec&, const StripSpec&) = default;

private:
    StripSpec() = default;
    explicit StripSpec(unsigned h) : height_(h) {}
    std::optional<unsigned> height_;
};

/// counts[n][k] = number of paths from (0,0) to (n,k) inside the strip.
/// Bounded tables hold levels 0..h in every row; unbounded tables hold
/// levels 0..n_max (exact for both directions).
class CountTable {
public:
    CountTable(Direction direction, StripSpec strip, std::vector<std::vector<BigInt>> rows);

    Direction direction() const { return direction_; }
    const StripSpec& strip() const { return strip_; }
    std::size_t n_max() const { return rows_.size() - 1; }
    std::size_t width() const { return rows_.front().size(); }

    /// Zero outside the stored range.
    BigInt at(std::size_t n, std::size_t k) const;
    const std::vector<BigInt>& row(std::size_t n) const { return rows_.at(n); }

    /// The generating function sum_n counts[n][k] z^n through z^min(order, n_max).
    ZSeries column(std::size_t k, std::size_t order) const;

    friend bool operator==(const CountTable&, const CountTable&) = default;

private:
    Direction direction_;
    StripSpec strip_;
    std::vector<std::vector<BigInt>> rows_;
};

/// Parallel row-by-row DP (OpenMP over levels within a row).
CountTable dp_counts(Direction direction, std::size_t n_max, StripSpec strip);

/// The literal recursion with explicit sums over every down (or up) step.
/// Serial reference for dp_counts.
CountTable dp_counts_reference(Direction direction, std::size_t n_max, StripSpec strip);

/// 1/(1 - X + z^2 X^3) = sum a_n X^n, and 1/(1 - Y^2 - z Y^3) = sum b_n Y^n.
/// Indices down to -3 are accepted and give the zero series.
ZSeries seq_a(int n, std::size_t order);
ZSeries seq_b(int n, std::size_t order);

/// d_m, the m x m principal determinant: d_m = d_{m-1} - z^2 d_{m-3}.
ZSeries det_d(std::size_t m, std::size_t order);

/// Delta_{m,q}: the m x m right-to-left matrix with column q (1-based)
/// replaced by the first unit vector.
ZSeries delta(std::size_t m, std::size_t q, std::size_t order);

/// Determinant of the explicitly built m x m matrix by fraction-free
/// (Bareiss) elimination over Z[z]. replaced_column == 0 leaves the
/// matrix intact; otherwise that column (1-based) becomes e_1.
ZSeries det_direct(Direction direction, std::size_t m, std::size_t replaced_column, std::size_t order);

/// f_k = z^k d_{h-k} / d_{h+1}
ZSeries bounded_f(std::size_t k, std::size_t h, std::size_t order);
/// g_i = Delta_{h+1,i+1} / d_{h+1}
ZSeries bounded_g(std::size_t i, std::size_t h, std::size_t order);
ZSeries bounded(Direction direction, std::size_t level, std::size_t h, std::size_t order);

/// Height used by `stabilized`; the recheck uses one more.
inline std::size_t stabilization_height(std::size_t level, std::size_t order) { return order + level + 2; }

/// The unbounded generating function through z^order, certified by
/// comparing barriers h and h+1.
ZSeries stabilized(Direction direction, std::size_t level, std::size_t order);

/// Solves the (h+1) x (h+1) transfer system by Gaussian elimination over
/// truncated series, without Cramer's rule.
std::vector<ZSeries> solve_system(Direction direction, std::size_t h, std::size_t order);

} // namespace deutsch::strip
