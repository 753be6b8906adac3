// SPDX-License-Identifier: Apache-2.0
//
// risdf — outage analysis toolkit for RIS-assisted decode-and-forward
// relay networks with co-channel interference.

#include "risdf/channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "risdf/specfun.hpp"

namespace risdf::channel {

using specfun::log_factorial_ld;

double scaling_constant(int n_elements) {
    if (n_elements < 1) throw std::domain_error("scaling_constant: n_elements must be >= 1");
    return 1.0 + (n_elements - 1) * kRayleighMeanSq;
}

double outage_threshold(double rate_threshold) {
    if (rate_threshold < 0.0) throw std::domain_error("outage_threshold: rate must be >= 0");
    return std::exp2(2.0 * rate_threshold) - 1.0;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

HopModel::HopModel(int n_elements, double rate)
    : n_elements(n_elements), rate(rate), scaling(scaling_constant(n_elements)) {
    if (!(rate > 0.0)) throw std::domain_error("HopModel: rate must be positive");
}

namespace {

// ln of the regularized lower tail e^{-x} Σ_{k>=N} x^k/k!, valid for x < N
// where the series converges geometrically.
long double log_erlang_cdf_tail_series(int n, long double x) {
    const long double log_head = n * std::log(x) - log_factorial_ld(n);
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = n + 1; k < n + 100000; ++k) {
        term *= x / k;
        sum += term;
        if (term < sum * 1e-21L) break;
    }
    return -x + log_head + std::log(sum);
}

// ln of the survival e^{-x} Σ_{k<N} x^k/k!.
long double log_erlang_sf_head(int n, long double x) {
    const long double lx = std::log(x);
    long double max_log = 0.0L;
    for (int k = 1; k < n; ++k) max_log = std::max(max_log, k * lx - log_factorial_ld(k));
    long double acc = 0.0L;
    for (int k = 0; k < n; ++k) {
        const long double t = (k == 0) ? 0.0L : k * lx - log_factorial_ld(k);
        acc += std::exp(t - max_log);
    }
    return -x + max_log + std::log(acc);
}

}  // namespace

double log_ris_hop_cdf(double gamma, const HopModel& hop) {
    if (gamma < 0.0) throw std::domain_error("ris_hop_cdf: gamma must be non-negative");
    if (gamma == 0.0) return -std::numeric_limits<double>::infinity();
    const long double x = static_cast<long double>(hop.rate) * gamma / hop.scaling;
    const int n = hop.n_elements;
    if (x < n) {
        return static_cast<double>(log_erlang_cdf_tail_series(n, x));
    }
    // Survival is at most ~0.6 here, so 1 - sf costs no precision.
    const long double sf = std::exp(log_erlang_sf_head(n, x));
    return static_cast<double>(std::log1p(-std::min(sf, 1.0L)));
}

double ris_hop_cdf(double gamma, const HopModel& hop) {
    const double log_cdf = log_ris_hop_cdf(gamma, hop);
    return std::min(1.0, std::exp(log_cdf));
}

double ris_hop_cdf_asymptotic(double gamma, const HopModel& hop) {
    if (gamma <= 0.0) return 0.0;
    const int n = hop.n_elements;
    const double log_x = std::log(hop.rate * gamma / hop.scaling);
    return std::exp(n * log_x - specfun::log_factorial(n));
}

double interference_plus_one_pdf(double z, const InterferenceProfile& prof) {
    if (prof.none) throw std::domain_error("interference_plus_one_pdf: profile carries no interference");
    if (prof.count < 1) throw std::domain_error("interference_plus_one_pdf: count must be >= 1");
    if (!(prof.rate > 0.0)) throw std::domain_error("interference_plus_one_pdf: rate must be positive");
    if (z < 1.0) return 0.0;
    const double w = z - 1.0;
    const int count = prof.count;
    const double rate = prof.rate;
    if (count == 1) return rate * std::exp(-rate * w);
    if (w == 0.0) return 0.0;
    const long double log_pdf = count * std::log(static_cast<long double>(rate)) +
                                (count - 1) * std::log(static_cast<long double>(w)) -
                                static_cast<long double>(rate) * w - log_factorial_ld(count - 1);
    return static_cast<double>(std::exp(log_pdf));
}

double best_relay_cdf(double y, const HopModel& hop, int set_size) {
    if (set_size < 0) throw std::domain_error("best_relay_cdf: set_size must be >= 0");
    if (set_size == 0) return 1.0;
    return std::exp(set_size * log_ris_hop_cdf(y, hop));
}

HopModel SystemConfig::first_hop() const { return HopModel(n1, 1.0 / (rho() * mean_power_hop1)); }

HopModel SystemConfig::second_hop() const { return HopModel(n2, 1.0 / (rho() * mean_power_hop2)); }

InterferenceProfile SystemConfig::relay_interference() const {
    return {i_relay, 1.0 / rho_i_relay(), no_relay_interference};
}

InterferenceProfile SystemConfig::dest_interference() const {
    return {i_dest, 1.0 / rho_i_dest(), no_dest_interference};
}

void SystemConfig::validate() const {
    if (n1 < 1) throw std::domain_error("config: n1 must be >= 1");
    if (n2 < 1) throw std::domain_error("config: n2 must be >= 1");
    if (k_relays < 1) throw std::domain_error("config: k_relays must be >= 1");
    if (rate_threshold < 0.0) throw std::domain_error("config: rate_threshold must be >= 0");
    if (i_relay < 1) throw std::domain_error("config: i_relay must be >= 1");
    if (i_dest < 1) throw std::domain_error("config: i_dest must be >= 1");
    if (!(mean_power_hop1 > 0.0) || !(mean_power_hop2 > 0.0))
        throw std::domain_error("config: mean channel powers must be positive");
    if (!std::isfinite(snr_db) || !std::isfinite(rho_i_relay_db) || !std::isfinite(rho_i_dest_db))
        throw std::domain_error("config: SNR fields must be finite");
}

}  // namespace risdf::channel
