#pragma once

// Exact truncated power series in z and closed forms in the auxiliary
// variable t, where x = z^2 = t(1-t)^2 and t(0) = 0.

#include <deutsch/bigint.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace deutsch::series {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// has no coefficients and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<BigInt> coeffs);

    static IntPoly monomial(const BigInt& c, std::size_t degree);
    /// (1 - c*t)^e, expanded.
    static IntPoly one_minus_pow(const BigInt& c, std::size_t e);

    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of t^i; zero above the degree.
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    std::span<const BigInt> coeffs() const { return coeffs_; }

    BigInt evaluate(const BigInt& at) const;

    /// Quotient by `divisor` if it divides exactly over Z[t].
    std::optional<IntPoly> divide_exact(const IntPoly& divisor) const;
    /// Quotient by (1 - c*t) if it divides exactly.
    std::optional<IntPoly> divide_one_minus(const BigInt& c) const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const BigInt& c, const IntPoly& a);
    IntPoly operator-() const;
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

/// Power series in z known exactly through z^order. Orders are part of the
/// value: combining series of different orders is a usage error.
class ZSeries {
public:
    /// The zero series of the given order.
    explicit ZSeries(std::size_t order);
    /// Coefficients z^0..z^(n-1); order is n-1. Must be nonempty.
    explicit ZSeries(std::vector<BigInt> coeffs);

    static ZSeries one(std::size_t order);
    /// c * z^power truncated to order (zero when power > order).
    static ZSeries monomial(std::size_t order, std::size_t power, const BigInt& c = 1);
    static ZSeries from_poly(const IntPoly& p, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    /// Coefficient of z^i, i <= order.
    const BigInt& operator[](std::size_t i) const;
    std::span<const BigInt> coeffs() const { return coeffs_; }

    ZSeries truncated(std::size_t order) const;
    /// Multiplication by z^p at the same order.
    ZSeries shifted(std::size_t p) const;
    bool is_zero() const;

    /// Horner evaluation of the retained polynomial part.
    long double evaluate(long double z) const;

    ZSeries operator-() const;
    friend ZSeries operator+(const ZSeries& a, const ZSeries& b);
    friend ZSeries operator-(const ZSeries& a, const ZSeries& b);
    friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
    friend ZSeries operator*(const BigInt& c, const ZSeries& a);
    friend bool operator==(const ZSeries& a, const ZSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<BigInt> coeffs_;
};

enum class ArithOp { Add, Sub, Mul };

ZSeries series_arith(const ZSeries& lhs, const ZSeries& rhs, ArithOp op);

/// Serial schoolbook Cauchy product; the reference the parallel
/// `operator*` is tested against.
ZSeries multiply_reference(const ZSeries& lhs, const ZSeries& rhs);

/// Multiplicative inverse; the constant coefficient must be +1 or -1.
ZSeries series_inverse(const ZSeries& s);

/// numer(t) * (1-t)^-a * (1-3t)^-b * z^p, kept in canonical form: the
/// numerator carries no factor (1-t) while a > 0 and no factor (1-3t)
/// while b > 0.
class TRational {
public:
    TRational() = default;
    TRational(IntPoly numer, unsigned pow1t, unsigned pow13t, unsigned zshift = 0);

    /// t itself, and x = t(1-t)^2.
    static TRational t();
    static TRational x();

    const IntPoly& numer() const { return numer_; }
    unsigned pow1t() const { return pow1t_; }
    unsigned pow13t() const { return pow13t_; }
    unsigned zshift() const { return zshift_; }

    TRational with_zshift(unsigned p) const;

    /// Sum over a common denominator; zshifts must agree.
    friend TRational operator+(const TRational& a, const TRational& b);
    friend TRational operator*(const TRational& a, const TRational& b);
    friend TRational operator*(const BigInt& c, const TRational& a);
    friend bool operator==(const TRational& a, const TRational& b) = default;

private:
    void canonicalize();

    IntPoly numer_;
    unsigned pow1t_ = 0;
    unsigned pow13t_ = 0;
    unsigned zshift_ = 0;
};

/// [x^N] F(t) = [t^N] (1-3t) (1-t)^(-2N-1) F(t). F must have zshift 0.
BigInt coeff_x(const TRational& f, std::size_t n);

/// z^p F(t(z^2)) as a z-series through z^order.
ZSeries zseries_of(const TRational& f, std::size_t order);

/// The branch t(x) with t(0) = 0, as a series in x through x^order.
ZSeries t_series(std::size_t order);

} // namespace deutsch::series
