#include <deutsch/closed_forms.hpp>

#include <deutsch/error.hpp>

#include <string>
#include <utility>

namespace deutsch::closed {

using series::IntPoly;
using series::coeff_x;
using series::zseries_of;

BigInt binom(long n, long k) {
    if (n < 0) {
        throw UsageError("binom: negative top index " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        return 0;
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

void BinomExpr::add(BigInt coeff, long top, long bottom) { terms_.push_back({std::move(coeff), top, bottom}); }

void BinomExpr::add_if_live(BigInt coeff, long top, long bottom) {
    if (bottom >= 0) {
        add(std::move(coeff), top, bottom);
    }
}

BinomExpr& BinomExpr::operator+=(const BinomExpr& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

BigInt BinomExpr::evaluate() const {
    BigInt acc = 0;
    for (const auto& term : terms_) {
        acc += term.coeff * binom(term.top, term.bottom);
    }
    return acc;
}

BinomExpr lr_count_expr(std::size_t n, std::size_t k) {
    BinomExpr e;
    if (k > n || (n + k) % 2 != 0) {
        return e;
    }
    const long i = static_cast<long>(n % 2);
    const long big_n = (static_cast<long>(n) - i) / 2;
    const long big_k = (static_cast<long>(k) - i) / 2;
    e.add(1, 3 * big_n - big_k + i + 1, big_n - big_k);
    e.add_if_live(-3, 3 * big_n - big_k + i, big_n - big_k - 1);
    return e;
}

BigInt count_lr_closed(std::size_t n, std::size_t k) { return lr_count_expr(n, k).evaluate(); }

BigInt cat3(std::size_t big_n) {
    const long n = static_cast<long>(big_n);
    const BigInt difference = binom(3 * n + 1, n) - 3 * binom(3 * n, n - 1);
    const BigInt central = binom(3 * n, n);
    const BigInt divisor = 2 * n + 1;
    if (!mpz_divisible_p(central.get_mpz_t(), divisor.get_mpz_t())) {
        throw InternalError("cat3: C(3N,N) not divisible by 2N+1 at N=" + std::to_string(n));
    }
    const BigInt quotient = central / divisor;
    if (quotient != difference) {
        throw InternalError("cat3: binomial forms disagree at N=" + std::to_string(n));
    }
    return quotient;
}

TRational f_closed(std::size_t k) {
    return TRational(IntPoly{1}, static_cast<unsigned>(k + 1), 0, static_cast<unsigned>(k));
}

// ----------------------------------------------------------- g closed form

GClosedForm::GClosedForm(std::size_t level, std::vector<GSummand> summands)
    : level_(level), summands_(std::move(summands)) {}

ZSeries GClosedForm::realize(std::size_t order) const {
    ZSeries acc(order);
    for (const auto& s : summands_) {
        acc = acc + zseries_of(s.term.with_zshift(s.zshift), order);
    }
    return acc;
}

BigInt GClosedForm::coefficient(std::size_t n) const {
    BigInt acc = 0;
    for (const auto& s : summands_) {
        if (n >= s.zshift && (n - s.zshift) % 2 == 0) {
            acc += coeff_x(s.term, (n - s.zshift) / 2);
        }
    }
    return acc;
}

GClosedForm g_closed(std::size_t i) {
    if (i == 0) {
        return GClosedForm(0, {GSummand{0, f_closed(0).with_zshift(0)}});
    }
    // g_i = sum_k z^(i-2k) [C(i-1-k, k) + t C(i-1-k, k-1)] (1-t)^(3k-2i-1),
    // from the power-sum expansions of mu_2^i +- mu_3^i with
    // mu_2 mu_3 = t-1 and mu_2 + mu_3 = z/(1-t).
    const long li = static_cast<long>(i);
    std::vector<GSummand> out;
    for (long k = 0; 2 * k <= li; ++k) {
        IntPoly numer{binom(li - 1 - k, k), binom(li - 1 - k, k - 1)};
        if (numer.is_zero()) {
            continue;
        }
        const auto a = static_cast<unsigned>(2 * li + 1 - 3 * k);
        out.push_back(GSummand{static_cast<unsigned>(li - 2 * k), TRational(std::move(numer), a, 0)});
    }
    return GClosedForm(i, std::move(out));
}

BinomExpr rl_count_expr(std::size_t n, std::size_t i) {
    if (i == 0) {
        return lr_count_expr(n, 0);
    }
    BinomExpr e;
    if ((n + i) % 2 != 0) {
        return e;
    }
    // [x^M] t^e (1-t)^-a = C(3M+a-e, M-e) - 3 C(3M+a-e-1, M-e-1)
    const GClosedForm g = g_closed(i);
    for (const auto& s : g.summands()) {
        if (n < s.zshift) {
            continue;
        }
        if (s.term.pow13t() != 0) {
            throw InternalError("rl_count_expr: unexpected (1-3t) denominator");
        }
        const long m = static_cast<long>((n - s.zshift) / 2);
        const long a = s.term.pow1t();
        const auto coeffs = s.term.numer().coeffs();
        for (std::size_t ue = 0; ue < coeffs.size(); ++ue) {
            const long ex = static_cast<long>(ue);
            if (sgn(coeffs[ue]) == 0 || m - ex < 0) {
                continue;
            }
            e.add(coeffs[ue], 3 * m + a - ex, m - ex);
            e.add_if_live(-3 * coeffs[ue], 3 * m + a - ex - 1, m - ex - 1);
        }
    }
    return e;
}

BigInt count_rl_closed(std::size_t n, std::size_t i) { return rl_count_expr(n, i).evaluate(); }

// -------------------------------------------------------------------- area

TRational area_gf() { return TRational(IntPoly{0, 1, 3}, 1, 2); }

BigInt area_coeff(std::size_t n) {
    BinomExpr e;
    const long ln = static_cast<long>(n);
    BigInt p3 = 1;
    for (long k = 0; k <= ln - 1; ++k) {
        e.add_if_live(p3, 3 * ln - k, ln - 1 - k);
        e.add_if_live(3 * p3, 3 * ln - 1 - k, ln - 2 - k);
        p3 *= 3;
    }
    return e.evaluate();
}

ZSeries area_convolution(std::size_t order) {
    std::vector<ZSeries> terms(order + 1, ZSeries(order));
    const auto top = static_cast<std::ptrdiff_t>(order);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 1; i <= top; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        terms[ui] = BigInt(static_cast<unsigned long>(ui)) *
                    (zseries_of(f_closed(ui), order) * g_closed(ui).realize(order));
    }
    ZSeries acc(order);
    for (const auto& t : terms) {
        acc = acc + t;
    }
    return acc;
}

} // namespace deutsch::closed
