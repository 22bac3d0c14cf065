#include <deutsch/series.hpp>

#include <deutsch/error.hpp>

#include <algorithm>
#include <string>
#include <utility>

namespace deutsch::series {

namespace {

constexpr std::size_t kParallelOrder = 48;

BigInt binom_uu(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

void require_same_order(const ZSeries& a, const ZSeries& b, const char* what) {
    if (a.order() != b.order()) {
        throw UsageError(std::string(what) + ": order mismatch (" + std::to_string(a.order()) +
                         " vs " + std::to_string(b.order()) + ")");
    }
}

} // namespace

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { normalize(); }

void IntPoly::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::one_minus_pow(const BigInt& c, std::size_t e) {
    std::vector<BigInt> v(e + 1);
    BigInt cp = 1;
    for (std::size_t j = 0; j <= e; ++j) {
        v[j] = binom_uu(e, j) * cp;
        if (j % 2 == 1) {
            v[j] = -v[j];
        }
        cp *= c;
    }
    return IntPoly(std::move(v));
}

BigInt IntPoly::evaluate(const BigInt& at) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) {
        throw UsageError("IntPoly::divide_exact: division by zero polynomial");
    }
    if (is_zero()) {
        return IntPoly();
    }
    const auto dd = static_cast<std::size_t>(divisor.degree());
    if (degree() < divisor.degree()) {
        return std::nullopt;
    }
    std::vector<BigInt> rem = coeffs_;
    std::vector<BigInt> quot(rem.size() - dd);
    const BigInt& lead = divisor.coeffs_.back();
    for (std::size_t top = rem.size(); top-- > dd;) {
        if (sgn(rem[top]) == 0) {
            continue;
        }
        if (!mpz_divisible_p(rem[top].get_mpz_t(), lead.get_mpz_t())) {
            return std::nullopt;
        }
        BigInt q = rem[top] / lead;
        const std::size_t shift = top - dd;
        quot[shift] = q;
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[shift + j] -= q * divisor.coeffs_[j];
        }
    }
    if (std::any_of(rem.begin(), rem.begin() + dd, [](const BigInt& v) { return sgn(v) != 0; })) {
        return std::nullopt;
    }
    return IntPoly(std::move(quot));
}

std::optional<IntPoly> IntPoly::divide_one_minus(const BigInt& c) const {
    if (is_zero()) {
        return IntPoly();
    }
    if (degree() == 0 || sgn(c) == 0) {
        return sgn(c) == 0 ? std::optional<IntPoly>(*this) : std::nullopt;
    }
    // P = (1 - c t) Q  <=>  Q_j = P_j + c Q_{j-1}, with P_deg + c Q_{deg-1} = 0.
    const std::size_t d = coeffs_.size() - 1;
    std::vector<BigInt> q(d);
    BigInt carry = 0;
    for (std::size_t j = 0; j < d; ++j) {
        q[j] = coeffs_[j] + c * carry;
        carry = q[j];
    }
    if (coeffs_[d] + c * carry != 0) {
        return std::nullopt;
    }
    return IntPoly(std::move(q));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = a.coeff(i) + b.coeff(i);
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> v(coeffs_);
    for (auto& c : v) {
        c = -c;
    }
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return IntPoly();
    }
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(v));
}

IntPoly operator*(const BigInt& c, const IntPoly& a) {
    std::vector<BigInt> v(a.coeffs_);
    for (auto& x : v) {
        x *= c;
    }
    return IntPoly(std::move(v));
}

// ---------------------------------------------------------------- ZSeries

ZSeries::ZSeries(std::size_t order) : coeffs_(order + 1) {}

ZSeries::ZSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw UsageError("ZSeries: empty coefficient vector");
    }
}

ZSeries ZSeries::one(std::size_t order) { return monomial(order, 0); }

ZSeries ZSeries::monomial(std::size_t order, std::size_t power, const BigInt& c) {
    ZSeries s(order);
    if (power <= order) {
        s.coeffs_[power] = c;
    }
    return s;
}

ZSeries ZSeries::from_poly(const IntPoly& p, std::size_t order) {
    ZSeries s(order);
    for (std::size_t i = 0; i <= order; ++i) {
        s.coeffs_[i] = p.coeff(i);
    }
    return s;
}

const BigInt& ZSeries::operator[](std::size_t i) const {
    if (i >= coeffs_.size()) {
        throw UsageError("ZSeries: coefficient z^" + std::to_string(i) + " beyond order " +
                         std::to_string(order()));
    }
    return coeffs_[i];
}

ZSeries ZSeries::truncated(std::size_t order) const {
    if (order > this->order()) {
        throw UsageError("ZSeries::truncated: cannot raise order");
    }
    return ZSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

ZSeries ZSeries::shifted(std::size_t p) const {
    ZSeries s(order());
    for (std::size_t i = p; i <= order(); ++i) {
        s.coeffs_[i] = coeffs_[i - p];
    }
    return s;
}

bool ZSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return sgn(c) == 0; });
}

long double ZSeries::evaluate(long double z) const {
    long double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + static_cast<long double>(it->get_d());
    }
    return acc;
}

ZSeries ZSeries::operator-() const {
    ZSeries s(*this);
    for (auto& c : s.coeffs_) {
        c = -c;
    }
    return s;
}

ZSeries operator+(const ZSeries& a, const ZSeries& b) {
    require_same_order(a, b, "series add");
    ZSeries s(a);
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
        s.coeffs_[i] += b.coeffs_[i];
    }
    return s;
}

ZSeries operator-(const ZSeries& a, const ZSeries& b) {
    require_same_order(a, b, "series sub");
    ZSeries s(a);
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
        s.coeffs_[i] -= b.coeffs_[i];
    }
    return s;
}

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    require_same_order(a, b, "series mul");
    const std::size_t m = a.order();
    std::vector<BigInt> out(m + 1);
    const auto n_out = static_cast<std::ptrdiff_t>(m + 1);
    // Each output coefficient is an independent dot product.
#pragma omp parallel for schedule(dynamic, 4) if (m >= kParallelOrder)
    for (std::ptrdiff_t n = 0; n < n_out; ++n) {
        mpz_ptr acc = out[static_cast<std::size_t>(n)].get_mpz_t();
        for (std::ptrdiff_t i = 0; i <= n; ++i) {
            const BigInt& ai = a.coeffs_[static_cast<std::size_t>(i)];
            if (sgn(ai) == 0) {
                continue;
            }
            mpz_addmul(acc, ai.get_mpz_t(), b.coeffs_[static_cast<std::size_t>(n - i)].get_mpz_t());
        }
    }
    return ZSeries(std::move(out));
}

ZSeries operator*(const BigInt& c, const ZSeries& a) {
    ZSeries s(a);
    for (auto& x : s.coeffs_) {
        x *= c;
    }
    return s;
}

ZSeries series_arith(const ZSeries& lhs, const ZSeries& rhs, ArithOp op) {
    switch (op) {
    case ArithOp::Add:
        return lhs + rhs;
    case ArithOp::Sub:
        return lhs - rhs;
    case ArithOp::Mul:
        return lhs * rhs;
    }
    throw UsageError("series_arith: unknown op");
}

ZSeries multiply_reference(const ZSeries& lhs, const ZSeries& rhs) {
    require_same_order(lhs, rhs, "series mul");
    const std::size_t m = lhs.order();
    std::vector<BigInt> out(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = 0; i + j <= m; ++j) {
            out[i + j] += lhs[i] * rhs[j];
        }
    }
    return ZSeries(std::move(out));
}

ZSeries series_inverse(const ZSeries& s) {
    const BigInt& c0 = s[0];
    if (c0 != 1 && c0 != -1) {
        throw DomainError("series_inverse: constant term " + to_decimal(c0) + " is not a unit");
    }
    const std::size_t m = s.order();
    std::vector<BigInt> r(m + 1);
    r[0] = c0;
    for (std::size_t n = 1; n <= m; ++n) {
        BigInt acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (sgn(s[i]) != 0) {
                mpz_addmul(acc.get_mpz_t(), s[i].get_mpz_t(), r[n - i].get_mpz_t());
            }
        }
        // c0 is its own inverse.
        r[n] = -(c0 * acc);
    }
    return ZSeries(std::move(r));
}

// -------------------------------------------------------------- TRational

TRational::TRational(IntPoly numer, unsigned pow1t, unsigned pow13t, unsigned zshift)
    : numer_(std::move(numer)), pow1t_(pow1t), pow13t_(pow13t), zshift_(zshift) {
    canonicalize();
}

TRational TRational::t() { return TRational(IntPoly{0, 1}, 0, 0); }

TRational TRational::x() { return TRational(IntPoly{0, 1} * IntPoly::one_minus_pow(1, 2), 0, 0); }

TRational TRational::with_zshift(unsigned p) const {
    TRational r(*this);
    r.zshift_ = p;
    return r;
}

void TRational::canonicalize() {
    if (numer_.is_zero()) {
        pow1t_ = 0;
        pow13t_ = 0;
        return;
    }
    while (pow1t_ > 0) {
        auto q = numer_.divide_one_minus(1);
        if (!q) {
            break;
        }
        numer_ = std::move(*q);
        --pow1t_;
    }
    while (pow13t_ > 0) {
        auto q = numer_.divide_one_minus(3);
        if (!q) {
            break;
        }
        numer_ = std::move(*q);
        --pow13t_;
    }
}

TRational operator+(const TRational& a, const TRational& b) {
    if (a.zshift_ != b.zshift_) {
        throw UsageError("TRational add: zshift mismatch");
    }
    const unsigned pa = std::max(a.pow1t_, b.pow1t_);
    const unsigned pb = std::max(a.pow13t_, b.pow13t_);
    auto lift = [&](const TRational& r) {
        return r.numer_ * IntPoly::one_minus_pow(1, pa - r.pow1t_) * IntPoly::one_minus_pow(3, pb - r.pow13t_);
    };
    return TRational(lift(a) + lift(b), pa, pb, a.zshift_);
}

TRational operator*(const TRational& a, const TRational& b) {
    return TRational(a.numer_ * b.numer_, a.pow1t_ + b.pow1t_, a.pow13t_ + b.pow13t_, a.zshift_ + b.zshift_);
}

TRational operator*(const BigInt& c, const TRational& a) {
    return TRational(c * a.numer_, a.pow1t_, a.pow13t_, a.zshift_);
}

// ------------------------------------------------------ coefficient maps

BigInt coeff_x(const TRational& f, std::size_t n) {
    if (f.zshift() != 0) {
        throw UsageError("coeff_x: clear the z prefactor first");
    }
    // Weighted numerator w(t) = numer * (1-3t)^(1-b), kept through t^n.
    std::vector<BigInt> w(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        w[j] = f.numer().coeff(j);
    }
    if (f.pow13t() == 0) {
        for (std::size_t j = n; j >= 1; --j) {
            w[j] -= 3 * w[j - 1];
        }
    } else {
        const unsigned e = f.pow13t() - 1;
        if (e > 0) {
            // (1-3t)^-e = sum_j 3^j C(e+j-1, j) t^j
            std::vector<BigInt> g(n + 1);
            BigInt p3 = 1;
            for (std::size_t j = 0; j <= n; ++j) {
                g[j] = p3 * binom_uu(e + j - 1, j);
                p3 *= 3;
            }
            std::vector<BigInt> prod(n + 1);
            for (std::size_t i = 0; i <= n; ++i) {
                if (sgn(w[i]) == 0) {
                    continue;
                }
                for (std::size_t j = 0; i + j <= n; ++j) {
                    mpz_addmul(prod[i + j].get_mpz_t(), w[i].get_mpz_t(), g[j].get_mpz_t());
                }
            }
            w = std::move(prod);
        }
    }
    // [t^j] (1-t)^-m = C(m+j-1, j), m = 2n+1+a.
    const unsigned long m = 2 * n + 1 + f.pow1t();
    BigInt acc = 0;
    for (std::size_t j = 0; j <= n; ++j) {
        if (sgn(w[j]) == 0) {
            continue;
        }
        const std::size_t r = n - j;
        mpz_addmul(acc.get_mpz_t(), w[j].get_mpz_t(), binom_uu(m + r - 1, r).get_mpz_t());
    }
    return acc;
}

ZSeries zseries_of(const TRational& f, std::size_t order) {
    std::vector<BigInt> out(order + 1);
    const std::size_t p = f.zshift();
    if (p > order) {
        return ZSeries(std::move(out));
    }
    const TRational base = f.with_zshift(0);
    const auto n_terms = static_cast<std::ptrdiff_t>((order - p) / 2 + 1);
#pragma omp parallel for schedule(dynamic) if (order >= kParallelOrder)
    for (std::ptrdiff_t n = 0; n < n_terms; ++n) {
        const auto un = static_cast<std::size_t>(n);
        out[2 * un + p] = coeff_x(base, un);
    }
    return ZSeries(std::move(out));
}

ZSeries t_series(std::size_t order) {
    const TRational t = TRational::t();
    std::vector<BigInt> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        out[n] = coeff_x(t, n);
    }
    return ZSeries(std::move(out));
}

} // namespace deutsch::series
