#include <deutsch/strip.hpp>

#include <deutsch/error.hpp>

#include <string>
#include <utility>

namespace deutsch::strip {

using series::IntPoly;
using series::series_inverse;

std::string_view to_string(Direction d) { return d == Direction::LeftToRight ? "lr" : "rl"; }

std::optional<Direction> parse_direction(std::string_view s) {
    if (s == "lr") {
        return Direction::LeftToRight;
    }
    if (s == "rl") {
        return Direction::RightToLeft;
    }
    return std::nullopt;
}

// ------------------------------------------------------------- CountTable

CountTable::CountTable(Direction direction, StripSpec strip, std::vector<std::vector<BigInt>> rows)
    : direction_(direction), strip_(strip), rows_(std::move(rows)) {
    if (rows_.empty()) {
        throw UsageError("CountTable: no rows");
    }
}

BigInt CountTable::at(std::size_t n, std::size_t k) const {
    if (n >= rows_.size() || k >= rows_[n].size()) {
        return 0;
    }
    return rows_[n][k];
}

ZSeries CountTable::column(std::size_t k, std::size_t order) const {
    const std::size_t top = std::min(order, n_max());
    std::vector<BigInt> c(top + 1);
    for (std::size_t n = 0; n <= top; ++n) {
        c[n] = at(n, k);
    }
    return ZSeries(std::move(c));
}

namespace {

struct Layout {
    std::size_t internal_width;
    std::size_t reported_width;
};

Layout layout_for(Direction direction, std::size_t n_max, StripSpec strip) {
    if (strip.is_bounded()) {
        const std::size_t w = strip.height() + 1;
        return {w, w};
    }
    // Right-to-left paths ending at level k after n steps can climb to
    // k + n - 1, so exact counts for k <= n_max need levels up to 2 n_max.
    if (direction == Direction::RightToLeft) {
        return {2 * n_max + 1, n_max + 1};
    }
    return {n_max + 1, n_max + 1};
}

CountTable finish(Direction direction, StripSpec strip, std::vector<std::vector<BigInt>> rows,
                  std::size_t reported_width) {
    for (auto& r : rows) {
        r.resize(reported_width);
    }
    return CountTable(direction, strip, std::move(rows));
}

// Parity-chain suffix (LR) or prefix (RL) sums of `prev`.
std::vector<BigInt> parity_sums(Direction direction, const std::vector<BigInt>& prev) {
    const auto w = static_cast<std::ptrdiff_t>(prev.size());
    std::vector<BigInt> s(prev.size());
#pragma omp parallel for num_threads(2) if (w >= 64)
    for (std::ptrdiff_t parity = 0; parity < 2; ++parity) {
        if (direction == Direction::LeftToRight) {
            std::ptrdiff_t top = w - 1;
            if ((top - parity) % 2 != 0) {
                --top;
            }
            BigInt acc = 0;
            for (std::ptrdiff_t k = top; k >= 0; k -= 2) {
                acc += prev[static_cast<std::size_t>(k)];
                s[static_cast<std::size_t>(k)] = acc;
            }
        } else {
            BigInt acc = 0;
            for (std::ptrdiff_t k = parity; k < w; k += 2) {
                acc += prev[static_cast<std::size_t>(k)];
                s[static_cast<std::size_t>(k)] = acc;
            }
        }
    }
    return s;
}

} // namespace

CountTable dp_counts(Direction direction, std::size_t n_max, StripSpec strip) {
    const Layout lay = layout_for(direction, n_max, strip);
    const std::size_t w = lay.internal_width;
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(n_max + 1);
    rows.emplace_back(w);
    rows[0][0] = 1;
    const auto sw = static_cast<std::ptrdiff_t>(w);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const std::vector<BigInt>& prev = rows.back();
        const std::vector<BigInt> sums = parity_sums(direction, prev);
        std::vector<BigInt> next(w);
#pragma omp parallel for schedule(static) if (w >= 64)
        for (std::ptrdiff_t k = 0; k < sw; ++k) {
            const auto uk = static_cast<std::size_t>(k);
            BigInt v = 0;
            if (direction == Direction::LeftToRight) {
                // up from k-1, or a down of odd size from k+1, k+3, ...
                if (uk >= 1) {
                    v += prev[uk - 1];
                }
                if (uk + 1 < w) {
                    v += sums[uk + 1];
                }
            } else {
                // down from k+1, or an up of odd size from k-1, k-3, ...
                if (uk + 1 < w) {
                    v += prev[uk + 1];
                }
                if (uk >= 1) {
                    v += sums[uk - 1];
                }
            }
            next[uk] = std::move(v);
        }
        rows.push_back(std::move(next));
    }
    return finish(direction, strip, std::move(rows), lay.reported_width);
}

CountTable dp_counts_reference(Direction direction, std::size_t n_max, StripSpec strip) {
    const Layout lay = layout_for(direction, n_max, strip);
    const std::size_t w = lay.internal_width;
    std::vector<std::vector<BigInt>> rows(n_max + 1, std::vector<BigInt>(w));
    rows[0][0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t k = 0; k < w; ++k) {
            BigInt v = 0;
            if (direction == Direction::LeftToRight) {
                if (k >= 1) {
                    v += rows[n - 1][k - 1];
                }
                for (std::size_t j = 1; k + j < w; j += 2) {
                    v += rows[n - 1][k + j];
                }
            } else {
                if (k + 1 < w) {
                    v += rows[n - 1][k + 1];
                }
                for (std::size_t j = 1; j <= k; j += 2) {
                    v += rows[n - 1][k - j];
                }
            }
            rows[n][k] = v;
        }
    }
    return finish(direction, strip, std::move(rows), lay.reported_width);
}

// ------------------------------------------------- determinant sequences

ZSeries seq_a(int n, std::size_t order) {
    if (n < -3) {
        throw UsageError("seq_a: index " + std::to_string(n) + " below -3");
    }
    if (n < 0) {
        return ZSeries(order);
    }
    const ZSeries z2 = ZSeries::monomial(order, 2);
    std::vector<ZSeries> a(3, ZSeries::one(order));
    for (int j = 3; j <= n; ++j) {
        a.push_back(a[j - 1] - z2 * a[j - 3]);
    }
    return a[static_cast<std::size_t>(n)];
}

ZSeries seq_b(int n, std::size_t order) {
    if (n < -3) {
        throw UsageError("seq_b: index " + std::to_string(n) + " below -3");
    }
    if (n < 0) {
        return ZSeries(order);
    }
    const ZSeries z = ZSeries::monomial(order, 1);
    std::vector<ZSeries> b{ZSeries::one(order), ZSeries(order), ZSeries::one(order)};
    for (int j = 3; j <= n; ++j) {
        b.push_back(b[j - 2] + z * b[j - 3]);
    }
    return b[static_cast<std::size_t>(n)];
}

ZSeries det_d(std::size_t m, std::size_t order) {
    const ZSeries z2 = ZSeries::monomial(order, 2);
    std::vector<ZSeries> d{ZSeries::one(order), ZSeries::one(order), ZSeries::one(order) - z2};
    for (std::size_t j = 3; j <= m; ++j) {
        d.push_back(d[j - 1] - z2 * d[j - 3]);
    }
    return d[m];
}

ZSeries delta(std::size_t m, std::size_t q, std::size_t order) {
    if (q < 1 || q > m) {
        throw UsageError("delta: column " + std::to_string(q) + " outside 1.." + std::to_string(m));
    }
    if (q == 1) {
        return det_d(m - 1, order);
    }
    // The same product formula covers q == m, where a_{-1} = 0.
    const int mi = static_cast<int>(m);
    const int qi = static_cast<int>(q);
    const ZSeries z = ZSeries::monomial(order, 1);
    const ZSeries z2 = ZSeries::monomial(order, 2);
    return z * seq_a(mi - qi, order) * (seq_b(qi - 2, order) + z * seq_b(qi - 3, order)) +
           z2 * seq_a(mi - qi - 1, order) * (seq_b(qi - 3, order) + z * seq_b(qi - 4, order));
}

namespace {

using PolyMatrix = std::vector<std::vector<IntPoly>>;

// Entry (r, c) of the left-to-right system matrix.
bool lr_has_minus_z(std::size_t r, std::size_t c) { return c + 1 == r || (c > r && (c - r) % 2 == 1); }

PolyMatrix build_poly_matrix(Direction direction, std::size_t m, std::size_t replaced_column) {
    const IntPoly one{1};
    const IntPoly minus_z{0, -1};
    PolyMatrix a(m, std::vector<IntPoly>(m));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            const bool neg = direction == Direction::LeftToRight ? lr_has_minus_z(r, c) : lr_has_minus_z(c, r);
            if (r == c) {
                a[r][c] = one;
            } else if (neg) {
                a[r][c] = minus_z;
            }
        }
    }
    if (replaced_column != 0) {
        for (std::size_t r = 0; r < m; ++r) {
            a[r][replaced_column - 1] = r == 0 ? one : IntPoly();
        }
    }
    return a;
}

IntPoly bareiss_det(PolyMatrix a) {
    const std::size_t m = a.size();
    if (m == 0) {
        return IntPoly{1};
    }
    IntPoly prev{1};
    bool negate = false;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < m && a[p][k].is_zero()) {
                ++p;
            }
            if (p == m) {
                return IntPoly();
            }
            std::swap(a[k], a[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < m; ++j) {
                IntPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = num.divide_exact(prev);
                if (!q) {
                    throw InternalError("det_direct: inexact Bareiss division");
                }
                a[i][j] = std::move(*q);
            }
            a[i][k] = IntPoly();
        }
        prev = a[k][k];
    }
    return negate ? -a[m - 1][m - 1] : a[m - 1][m - 1];
}

} // namespace

ZSeries det_direct(Direction direction, std::size_t m, std::size_t replaced_column, std::size_t order) {
    if (replaced_column > m) {
        throw UsageError("det_direct: replaced column outside matrix");
    }
    return ZSeries::from_poly(bareiss_det(build_poly_matrix(direction, m, replaced_column)), order);
}

// ------------------------------------------------------ Cramer quotients

ZSeries bounded_f(std::size_t k, std::size_t h, std::size_t order) {
    if (k > h) {
        throw UsageError("bounded_f: level " + std::to_string(k) + " exceeds barrier " + std::to_string(h));
    }
    return det_d(h - k, order).shifted(k) * series_inverse(det_d(h + 1, order));
}

ZSeries bounded_g(std::size_t i, std::size_t h, std::size_t order) {
    if (i > h) {
        throw UsageError("bounded_g: level " + std::to_string(i) + " exceeds barrier " + std::to_string(h));
    }
    return delta(h + 1, i + 1, order) * series_inverse(det_d(h + 1, order));
}

ZSeries bounded(Direction direction, std::size_t level, std::size_t h, std::size_t order) {
    return direction == Direction::LeftToRight ? bounded_f(level, h, order) : bounded_g(level, h, order);
}

ZSeries stabilized(Direction direction, std::size_t level, std::size_t order) {
    const std::size_t h = stabilization_height(level, order);
    ZSeries s = bounded(direction, level, h, order);
    if (!(s == bounded(direction, level, h + 1, order))) {
        throw InternalError("stabilized: series at level " + std::to_string(level) +
                            " still changes between barriers " + std::to_string(h) + " and " +
                            std::to_string(h + 1));
    }
    return s;
}

std::vector<ZSeries> solve_system(Direction direction, std::size_t h, std::size_t order) {
    const std::size_t m = h + 1;
    const ZSeries one = ZSeries::one(order);
    const ZSeries minus_z = -ZSeries::monomial(order, 1);
    std::vector<std::vector<ZSeries>> a(m, std::vector<ZSeries>(m, ZSeries(order)));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            const bool neg = direction == Direction::LeftToRight ? lr_has_minus_z(r, c) : lr_has_minus_z(c, r);
            if (r == c) {
                a[r][c] = one;
            } else if (neg) {
                a[r][c] = minus_z;
            }
        }
    }
    std::vector<ZSeries> rhs(m, ZSeries(order));
    rhs[0] = one;

    std::vector<ZSeries> pivot_inv;
    pivot_inv.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        const BigInt& c0 = a[k][k][0];
        if (c0 != 1 && c0 != -1) {
            throw InternalError("solve_system: non-unit pivot at row " + std::to_string(k));
        }
        pivot_inv.push_back(series_inverse(a[k][k]));
        for (std::size_t i = k + 1; i < m; ++i) {
            if (a[i][k].is_zero()) {
                continue;
            }
            const ZSeries factor = a[i][k] * pivot_inv[k];
            for (std::size_t j = k; j < m; ++j) {
                if (!a[k][j].is_zero()) {
                    a[i][j] = a[i][j] - factor * a[k][j];
                }
            }
            rhs[i] = rhs[i] - factor * rhs[k];
        }
    }
    std::vector<ZSeries> x(m, ZSeries(order));
    for (std::size_t k = m; k-- > 0;) {
        ZSeries acc = rhs[k];
        for (std::size_t j = k + 1; j < m; ++j) {
            if (!a[k][j].is_zero()) {
                acc = acc - a[k][j] * x[j];
            }
        }
        x[k] = acc * pivot_inv[k];
    }
    return x;
}

} // namespace deutsch::strip
