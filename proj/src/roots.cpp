#include <deutsch/roots.hpp>

#include <deutsch/error.hpp>
#include <deutsch/strip.hpp>

#include <cmath>
#include <string>

namespace deutsch::roots {

namespace {

constexpr double kSingularX = 4.0 / 27.0;

} // namespace

RootSet make_root_set(double t) {
    if (!(t > 0.0 && t < 1.0 / 3.0)) {
        throw DomainError("make_root_set: t = " + std::to_string(t) + " outside (0, 1/3)");
    }
    RootSet rs{};
    rs.t = t;
    rs.w = std::sqrt(4 * t - 3 * t * t);
    rs.z = std::sqrt(t) * (1 - t);
    rs.r1 = 1 - t;
    rs.r2 = (t + rs.w) / 2;
    rs.r3 = (t - rs.w) / 2;
    rs.mu1 = rs.z / (t - 1);
    rs.mu2 = -rs.z * (t + rs.w) / (2 * t * (t - 1));
    rs.mu3 = rs.z * (-t + rs.w) / (2 * t * (t - 1));
    rs.a = t;
    rs.b = (2 * t - 1) / 2 + t / (2 * rs.w);
    rs.c = (2 * t - 1) / 2 - t / (2 * rs.w);
    return rs;
}

double t_of_z(double z, double tol) {
    const double x = z * z;
    if (!(x < kSingularX)) {
        throw DomainError("t_of_z: z^2 = " + std::to_string(x) + " outside the disc |z^2| < 4/27");
    }
    if (x == 0.0) {
        return 0.0;
    }
    double t = x;
    for (int iter = 0; iter < 100; ++iter) {
        const double f = t * (1 - t) * (1 - t) - x;
        if (std::abs(f) < tol) {
            return t;
        }
        t -= f / ((1 - t) * (1 - 3 * t));
    }
    throw InternalError("t_of_z: Newton iteration did not converge for z = " + std::to_string(z));
}

void VerificationReport::record(std::string identity, double residual, double tol) {
    const double r = std::abs(residual);
    if (r > max_residual) {
        max_residual = r;
    }
    if (!(r < tol) && passed) {
        passed = false;
        failure = identity;
    }
    residuals.push_back({std::move(identity), r});
}

VerificationReport verify_factorizations(const RootSet& rs, double tol) {
    VerificationReport rep;
    const double z2 = rs.z * rs.z;
    rep.record("r1+r2+r3 = 1", rs.r1 + rs.r2 + rs.r3 - 1, tol);
    rep.record("r1r2+r1r3+r2r3 = 0", rs.r1 * rs.r2 + rs.r1 * rs.r3 + rs.r2 * rs.r3, tol);
    rep.record("r1r2r3 = -z^2", rs.r1 * rs.r2 * rs.r3 + z2, tol);
    rep.record("mu1+mu2+mu3 = 0", rs.mu1 + rs.mu2 + rs.mu3, tol);
    rep.record("mu1mu2+mu1mu3+mu2mu3 = -1", rs.mu1 * rs.mu2 + rs.mu1 * rs.mu3 + rs.mu2 * rs.mu3 + 1, tol);
    rep.record("mu1mu2mu3 = z", rs.mu1 * rs.mu2 * rs.mu3 - rs.z, tol);
    rep.record("mu2+mu3 = z/(1-t)", rs.mu2 + rs.mu3 - rs.z / (1 - rs.t), tol);
    rep.record("mu2mu3 = t-1", rs.mu2 * rs.mu3 - (rs.t - 1), tol);
    return rep;
}

VerificationReport verify_an_bn(const RootSet& rs, std::size_t n_max, double tol) {
    if (std::abs(3 * rs.t - 1) < 0.05) {
        throw DomainError("verify_an_bn: 3t - 1 too close to 0");
    }
    VerificationReport rep;
    const double t = rs.t;
    const double w = rs.w;
    const double denom = 3 * t - 1;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const double e = static_cast<double>(n);
        const double a_closed = (-std::pow(rs.r1, e + 1) + (3 * t + w) / (2 * w) * std::pow(rs.r2, e + 1) -
                                 (3 * t - w) / (2 * w) * std::pow(rs.r3, e + 1)) /
                                denom;
        const double b_closed =
            (rs.a * std::pow(rs.mu1, e) + rs.b * std::pow(rs.mu2, e) + rs.c * std::pow(rs.mu3, e)) / denom;
        // a_n has degree <= n in z and b_n degree <= n/3, so order n is exact.
        const int ni = static_cast<int>(n);
        const auto a_exact = static_cast<double>(strip::seq_a(ni, n).evaluate(rs.z));
        const auto b_exact = static_cast<double>(strip::seq_b(ni, n).evaluate(rs.z));
        rep.record("a_" + std::to_string(n), a_closed - a_exact, tol);
        rep.record("b_" + std::to_string(n), b_closed - b_exact, tol);
    }
    return rep;
}

double g_mu_form(std::size_t level, const RootSet& rs) {
    const double t = rs.t;
    if (level == 0) {
        return 1 / (1 - t);
    }
    const double i = static_cast<double>(level);
    const double power_sum = std::pow(rs.mu2, i) + std::pow(rs.mu3, i);
    const double quotient = (std::pow(rs.mu2, i) - std::pow(rs.mu3, i)) / (rs.mu2 - rs.mu3);
    return t / (2 * std::pow(1 - t, i + 1)) * power_sum -
           rs.z * (t - 2) / (2 * std::pow(1 - t, i + 2)) * quotient;
}

VerificationReport verify_g_numeric(std::size_t level, std::size_t order, double z, double tol) {
    if (level > 12) {
        throw UsageError("verify_g_numeric: level above 12");
    }
    if (!(z > 0.0)) {
        throw DomainError("verify_g_numeric: z must be positive");
    }
    const RootSet rs = make_root_set(t_of_z(z));
    const series::ZSeries s = strip::stabilized(strip::Direction::RightToLeft, level, order);
    const auto partial = static_cast<double>(s.evaluate(z));
    double last_term = 0.0;
    for (std::size_t n = order + 1; n-- > 0;) {
        if (sgn(s[n]) != 0) {
            last_term = std::abs(s[n].get_d() * std::pow(z, static_cast<double>(n)));
            break;
        }
    }
    VerificationReport rep;
    rep.record("g_" + std::to_string(level) + " mu-form vs series", g_mu_form(level, rs) - partial,
               tol + last_term);
    return rep;
}

std::vector<double> t_grid() { return {0.05, 0.10, 0.15, 0.20, 0.25, 0.30}; }

} // namespace deutsch::roots
