// SPDX-License-Identifier: Apache-2.0
//
// risdf — outage analysis toolkit for RIS-assisted decode-and-forward
// relay networks with co-channel interference.

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace risdf::specfun {

/// A real value stored as (sign, ln|value|) so that products of factorials,
/// powers, and exponentials never overflow or underflow before the final
/// summation.
struct LogScaledValue {
    double log_magnitude = -std::numeric_limits<double>::infinity();
    int sign = 0;  // -1, 0, +1; sign == 0 means exactly zero

    static LogScaledValue zero() noexcept { return {}; }
    static LogScaledValue from_value(double v);
    static LogScaledValue from_log(double log_magnitude, int sign);

    /// Converts back to linear scale. Magnitudes beyond double range
    /// saturate to 0 or ±inf.
    double value() const noexcept;
};

/// ln(n!). Relative error below 1e-14 for n <= 10000.
double log_factorial(std::int64_t n);

/// Extended-precision ln(n!) used by the closed-form series evaluators.
long double log_factorial_ld(std::int64_t n);

/// ln C(n, k). Requires 0 <= k <= n.
double log_binomial(std::int64_t n, std::int64_t k);
long double log_binomial_ld(std::int64_t n, std::int64_t k);

/// C(n, k) in log scale; sign is always +1. Throws std::domain_error for
/// k > n or negative arguments.
LogScaledValue binomial(std::int64_t n, std::int64_t k);

/// Upper incomplete gamma Γ(a, x) for integer shape a >= 1, evaluated via the
/// finite sum Γ(n+1, x) = n! e^{-x} Σ_{m<=n} x^m/m! entirely in log space.
/// Throws std::domain_error for a < 1 or x < 0.
LogScaledValue upper_gamma_int(std::int64_t a, double x);

/// ln Γ(a, x) for a = 1..max_a built with the forward recurrence
/// Γ(a+1, x) = a Γ(a, x) + x^a e^{-x}. Index 0 of the result is unused.
std::vector<long double> log_upper_gamma_table(std::int64_t max_a, long double x);

/// Coefficients of a power of the truncated exponential series, stored in
/// log scale: linear coefficients of T(x)^p with T(x) = Σ_{j<N} x^j/j!
/// underflow doubles once N and p grow past desk scale.
struct PolyCoeffs {
    std::vector<double> log_coefficients;  // ln c_s at index s; c_s >= 0

    std::size_t size() const noexcept { return log_coefficients.size(); }
    std::size_t degree() const noexcept { return log_coefficients.empty() ? 0 : log_coefficients.size() - 1; }
    double log_coefficient(std::size_t s) const { return log_coefficients.at(s); }
    double coefficient(std::size_t s) const;
    std::vector<double> coefficients() const;  // linear scale, may underflow
};

/// T(x)^p for T(x) = Σ_{j=0}^{N-1} x^j/j!, by repeated log-space convolution.
/// Result length is p(N-1)+1 (length 1 for p = 0). This collapses the
/// p-fold nested sums over (j_1..j_p) with Σ j_n = s into one coefficient
/// per total degree s.
PolyCoeffs trunc_exp_poly_power(int n_terms, int power);

struct CompensatedSum {
    double sum = 0.0;
    double cancellation_ratio = 1.0;  // Σ|t_i| / max(|Σ t_i|, tiny)
};

/// Neumaier-compensated summation plus the cancellation diagnostic used to
/// flag ill-conditioned alternating series downstream.
CompensatedSum compensated_sum(std::span<const double> terms);

/// One signed term of a closed-form series, in log scale.
struct SignedLogTerm {
    long double log_magnitude;
    int sign;  // -1 or +1
};

struct SeriesSum {
    double value = 0.0;
    double cancellation_ratio = 1.0;
    std::uint64_t terms = 0;
};

/// Sums signed log-scale terms: sorts by ascending magnitude, rescales by the
/// largest term, and accumulates with compensation in extended precision.
SeriesSum sum_signed_log_terms(std::vector<SignedLogTerm> terms);

}  // namespace risdf::specfun
