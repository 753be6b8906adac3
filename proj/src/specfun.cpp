// SPDX-License-Identifier: Apache-2.0
//
// risdf — outage analysis toolkit for RIS-assisted decode-and-forward
// relay networks with co-channel interference.

#include "risdf/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace risdf::specfun {

namespace {

// ln(n!) for n < kFactorialTableSize, accumulated in extended precision.
// Covers every shape parameter reachable from the series evaluators at desk
// scale (N <= 256 elements, K <= 8 relays, deep tail expansions).
constexpr std::size_t kFactorialTableSize = 65536;

const std::vector<long double>& factorial_table() {
    static const std::vector<long double> table = [] {
        std::vector<long double> t(kFactorialTableSize);
        t[0] = 0.0L;
        long double acc = 0.0L;
        for (std::size_t n = 1; n < kFactorialTableSize; ++n) {
            acc += std::log(static_cast<long double>(n));
            t[n] = acc;
        }
        return t;
    }();
    return table;
}

long double log_add_exp(long double a, long double b) {
    if (a == -std::numeric_limits<long double>::infinity()) return b;
    if (b == -std::numeric_limits<long double>::infinity()) return a;
    const long double hi = std::max(a, b);
    const long double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace

LogScaledValue LogScaledValue::from_value(double v) {
    if (v == 0.0) return zero();
    return {std::log(std::abs(v)), v > 0.0 ? +1 : -1};
}

LogScaledValue LogScaledValue::from_log(double log_magnitude, int sign) {
    if (sign == 0) return zero();
    return {log_magnitude, sign > 0 ? +1 : -1};
}

double LogScaledValue::value() const noexcept {
    if (sign == 0) return 0.0;
    return static_cast<double>(sign) * std::exp(log_magnitude);
}

long double log_factorial_ld(std::int64_t n) {
    if (n < 0) throw std::domain_error("log_factorial: n must be non-negative");
    const auto& table = factorial_table();
    if (static_cast<std::size_t>(n) < table.size()) return table[static_cast<std::size_t>(n)];
    return std::lgamma(static_cast<long double>(n) + 1.0L);
}

double log_factorial(std::int64_t n) {
    return static_cast<double>(log_factorial_ld(n));
}

long double log_binomial_ld(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) throw std::domain_error("binomial: require 0 <= k <= n");
    return log_factorial_ld(n) - log_factorial_ld(k) - log_factorial_ld(n - k);
}

double log_binomial(std::int64_t n, std::int64_t k) {
    return static_cast<double>(log_binomial_ld(n, k));
}

LogScaledValue binomial(std::int64_t n, std::int64_t k) {
    return LogScaledValue::from_log(log_binomial(n, k), +1);
}

LogScaledValue upper_gamma_int(std::int64_t a, double x) {
    if (a < 1) throw std::domain_error("upper_gamma_int: integer shape requires a >= 1");
    if (x < 0.0) throw std::domain_error("upper_gamma_int: x must be non-negative");
    const std::int64_t n = a - 1;
    if (x == 0.0) return LogScaledValue::from_log(log_factorial(n), +1);

    // ln Σ_{m=0}^{n} x^m/m!  via log-sum-exp; all terms positive.
    const long double lx = std::log(static_cast<long double>(x));
    long double max_term = 0.0L;  // m = 0 term is ln 1 = 0
    for (std::int64_t m = 1; m <= n; ++m) {
        max_term = std::max(max_term, m * lx - log_factorial_ld(m));
    }
    long double acc = 0.0L;
    for (std::int64_t m = 0; m <= n; ++m) {
        const long double t = (m == 0) ? 0.0L : m * lx - log_factorial_ld(m);
        acc += std::exp(t - max_term);
    }
    const long double log_sum = max_term + std::log(acc);
    const long double log_gamma = log_factorial_ld(n) - static_cast<long double>(x) + log_sum;
    return LogScaledValue::from_log(static_cast<double>(log_gamma), +1);
}

std::vector<long double> log_upper_gamma_table(std::int64_t max_a, long double x) {
    if (max_a < 1) throw std::domain_error("log_upper_gamma_table: max_a must be >= 1");
    if (x < 0.0L) throw std::domain_error("log_upper_gamma_table: x must be non-negative");
    std::vector<long double> table(static_cast<std::size_t>(max_a) + 1,
                                   std::numeric_limits<long double>::quiet_NaN());
    if (x == 0.0L) {
        for (std::int64_t a = 1; a <= max_a; ++a) table[a] = log_factorial_ld(a - 1);
        return table;
    }
    const long double lx = std::log(x);
    table[1] = -x;  // Γ(1, x) = e^{-x}
    for (std::int64_t a = 1; a < max_a; ++a) {
        // Γ(a+1, x) = a Γ(a, x) + x^a e^{-x}; both summands positive.
        const long double recur = std::log(static_cast<long double>(a)) + table[a];
        const long double direct = a * lx - x;
        table[a + 1] = log_add_exp(recur, direct);
    }
    return table;
}

double PolyCoeffs::coefficient(std::size_t s) const {
    return std::exp(log_coefficients.at(s));
}

std::vector<double> PolyCoeffs::coefficients() const {
    std::vector<double> out(log_coefficients.size());
    for (std::size_t s = 0; s < out.size(); ++s) out[s] = std::exp(log_coefficients[s]);
    return out;
}

PolyCoeffs trunc_exp_poly_power(int n_terms, int power) {
    if (n_terms < 1) throw std::domain_error("trunc_exp_poly_power: n_terms must be >= 1");
    if (power < 0) throw std::domain_error("trunc_exp_poly_power: power must be >= 0");

    const double neg_inf = -std::numeric_limits<double>::infinity();

    // ln coefficients of T(x) = Σ_{j<N} x^j/j!
    std::vector<double> base(static_cast<std::size_t>(n_terms));
    for (int j = 0; j < n_terms; ++j) base[j] = -log_factorial(j);

    std::vector<double> result{0.0};  // T^0 = 1
    for (int p = 0; p < power; ++p) {
        std::vector<double> next(result.size() + base.size() - 1, neg_inf);
        for (std::size_t s = 0; s < next.size(); ++s) {
            const std::size_t j_lo = (s >= result.size()) ? s - result.size() + 1 : 0;
            const std::size_t j_hi = std::min(base.size() - 1, s);
            long double max_log = neg_inf;
            for (std::size_t j = j_lo; j <= j_hi; ++j) {
                max_log = std::max<long double>(max_log, result[s - j] + base[j]);
            }
            if (max_log == neg_inf) continue;
            long double acc = 0.0L;
            for (std::size_t j = j_lo; j <= j_hi; ++j) {
                acc += std::exp(static_cast<long double>(result[s - j]) + base[j] - max_log);
            }
            next[s] = static_cast<double>(max_log + std::log(acc));
        }
        result = std::move(next);
    }
    return PolyCoeffs{std::move(result)};
}

CompensatedSum compensated_sum(std::span<const double> terms) {
    double sum = 0.0;
    double comp = 0.0;
    double abs_sum = 0.0;
    for (const double t : terms) {
        abs_sum += std::abs(t);
        const double next = sum + t;
        if (std::abs(sum) >= std::abs(t)) {
            comp += (sum - next) + t;
        } else {
            comp += (t - next) + sum;
        }
        sum = next;
    }
    const double total = sum + comp;
    if (abs_sum == 0.0) return {total, 1.0};
    const double denom = std::max(std::abs(total), std::numeric_limits<double>::min());
    return {total, abs_sum / denom};
}

SeriesSum sum_signed_log_terms(std::vector<SignedLogTerm> terms) {
    if (terms.empty()) return {0.0, 1.0, 0};
    std::sort(terms.begin(), terms.end(), [](const SignedLogTerm& a, const SignedLogTerm& b) {
        return a.log_magnitude < b.log_magnitude;
    });
    const long double scale = terms.back().log_magnitude;
    if (scale == -std::numeric_limits<long double>::infinity()) {
        return {0.0, 1.0, static_cast<std::uint64_t>(terms.size())};
    }

    long double sum = 0.0L;
    long double comp = 0.0L;
    long double abs_sum = 0.0L;
    for (const auto& term : terms) {
        const long double t = term.sign * std::exp(term.log_magnitude - scale);
        abs_sum += std::abs(t);
        const long double next = sum + t;
        if (std::abs(sum) >= std::abs(t)) {
            comp += (sum - next) + t;
        } else {
            comp += (t - next) + sum;
        }
        sum = next;
    }
    const long double total = sum + comp;
    const long double denom =
        std::max(std::abs(total), static_cast<long double>(std::numeric_limits<double>::min()));
    const double ratio = static_cast<double>(abs_sum / denom);

    double value = 0.0;
    if (total != 0.0L) {
        const long double log_abs = scale + std::log(std::abs(total));
        value = (total > 0.0L ? 1.0 : -1.0) * static_cast<double>(std::exp(log_abs));
    }
    return {value, std::max(ratio, 1.0), static_cast<std::uint64_t>(terms.size())};
}

}  // namespace risdf::specfun
