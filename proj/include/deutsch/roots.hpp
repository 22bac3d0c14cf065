#pragma once

// Floating-point checks of the radical formulas: the roots of
// 1 - X + z^2 X^3 and 1 - Y^2 - z Y^3 parametrized by t, and the explicit
// expressions for a_n and b_n.

#include <cstddef>
#include <string>
#include <vector>

namespace deutsch::roots {

struct RootSet {
    double t;
    double w;  // sqrt(4t - 3t^2)
    double z;  // sqrt(t) (1-t), so z^2 = t(1-t)^2
    double r1, r2, r3;
    double mu1, mu2, mu3;
    double a, b, c;  // weights of mu1^n, mu2^n, mu3^n in b_n
};

/// Requires 0 < t < 1/3.
RootSet make_root_set(double t);

/// Newton solve of t(1-t)^2 = z^2 on the branch t(0) = 0, started at z^2.
/// Requires z^2 < 4/27.
double t_of_z(double z, double tol = 1e-14);

struct Residual {
    std::string identity;
    double value;
};

struct VerificationReport {
    bool passed = true;
    std::string failure;  // first identity at or above tolerance
    double max_residual = 0.0;
    std::vector<Residual> residuals;

    void record(std::string identity, double residual, double tol);
};

/// The six symmetric-function identities of both root triples plus
/// mu2 + mu3 = z/(1-t) and mu2 mu3 = t - 1.
VerificationReport verify_factorizations(const RootSet& rs, double tol);

/// Closed forms for a_n, b_n against the exact recurrences evaluated at z.
/// Requires |3t - 1| >= 0.05.
VerificationReport verify_an_bn(const RootSet& rs, std::size_t n_max, double tol);

/// The mu-form of g_i at a numeric z against the partial sum of the
/// stabilized series through z^order. The allowance is tol plus the
/// magnitude of the last retained nonzero term.
VerificationReport verify_g_numeric(std::size_t level, std::size_t order, double z, double tol);

/// g_i evaluated from the mu-form (f_0 for i = 0).
double g_mu_form(std::size_t level, const RootSet& rs);

/// The sample grid 0.05, 0.10, ..., 0.30.
std::vector<double> t_grid();

} // namespace deutsch::roots
