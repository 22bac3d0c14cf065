#pragma once

// Explicit formulas: binomial counts for both directions, the generalized
// Catalan numbers, closed forms of f_k and g_i in t, and the area.

#include <deutsch/bigint.hpp>
#include <deutsch/series.hpp>

#include <cstddef>
#include <vector>

namespace deutsch::closed {

using series::TRational;
using series::ZSeries;

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
BigInt binom(long n, long k);

struct BinomTerm {
    BigInt coeff;
    long top;
    long bottom;
};

/// sum coeff * C(top, bottom)
class BinomExpr {
public:
    BinomExpr() = default;

    void add(BigInt coeff, long top, long bottom);
    /// Terms whose bottom index is negative are dropped (they vanish).
    void add_if_live(BigInt coeff, long top, long bottom);
    BinomExpr& operator+=(const BinomExpr& other);

    const std::vector<BinomTerm>& terms() const { return terms_; }
    BigInt evaluate() const;

private:
    std::vector<BinomTerm> terms_;
};

/// a_{n,k}: left-to-right paths of length n ending at level k.
BinomExpr lr_count_expr(std::size_t n, std::size_t k);
BigInt count_lr_closed(std::size_t n, std::size_t k);

/// C(3N+1, N) - 3 C(3N, N-1), checked against C(3N, N) / (2N+1).
BigInt cat3(std::size_t big_n);

/// z^k / (1-t)^(k+1)
TRational f_closed(std::size_t k);

struct GSummand {
    unsigned zshift;
    TRational term;
};

/// g_i as a finite sum of z^p F_p(t), one summand per z power.
class GClosedForm {
public:
    GClosedForm(std::size_t level, std::vector<GSummand> summands);

    std::size_t level() const { return level_; }
    const std::vector<GSummand>& summands() const { return summands_; }

    ZSeries realize(std::size_t order) const;
    /// [z^n] g_i by coefficient extraction of each summand.
    BigInt coefficient(std::size_t n) const;

private:
    std::size_t level_;
    std::vector<GSummand> summands_;
};

GClosedForm g_closed(std::size_t i);

/// Binomial double sum for b_{n,i} generated from the summands of g_closed(i).
BinomExpr rl_count_expr(std::size_t n, std::size_t i);
BigInt count_rl_closed(std::size_t n, std::size_t i);

/// t(1+3t) / ((1-t)(1-3t)^2)
TRational area_gf();

/// sum_{k>=0} 3^k [C(3n-k, n-1-k) + 3 C(3n-1-k, n-2-k)]
BigInt area_coeff(std::size_t n);

/// sum_{i=1..order} i f_i g_i through z^order.
ZSeries area_convolution(std::size_t order);

} // namespace deutsch::closed
