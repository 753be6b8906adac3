// SPDX-License-Identifier: Apache-2.0
//
// risdf — outage analysis toolkit for RIS-assisted decode-and-forward
// relay networks with co-channel interference.

#pragma once

#include <cstdint>
#include <vector>

#include "risdf/channel.hpp"

namespace risdf::analytic {

enum class Method { analytic, asymptotic, montecarlo, oracle };

/// A probability plus the diagnostics needed to judge it: which path produced
/// it, how ill-conditioned the series was, and (for Monte Carlo) the
/// confidence interval.
struct OutageEstimate {
    double probability = 0.0;          // clamped to [0, 1]
    Method method = Method::analytic;
    double raw_probability = 0.0;      // pre-clamp value, kept for diagnostics
    double cancellation_ratio = 1.0;   // Σ|t| / |Σt| of the worst series involved
    double ci99_halfwidth = 0.0;       // Monte Carlo only
    std::uint64_t terms_evaluated = 0;
    bool cancellation_warning = false; // cancellation_ratio > kCancellationWarnRatio
    bool low_event_count = false;      // Monte Carlo only
};

/// Above this conditioning the result is flagged; the asymptotic path remains
/// usable as a fallback and the caller decides.
inline constexpr double kCancellationWarnRatio = 1e12;

/// Above this conditioning the direct alternating series has lost too many
/// digits and the evaluator switches to the algebraically identical
/// complementary (all-positive) expansion.
inline constexpr double kSeriesFallbackRatio = 1e8;

/// The closed-form series for P[γ_d < u | L] admits two readings that differ
/// in whether the 1/C hop scaling reaches the prefactor and in the number of
/// truncated-series factors. `consistent` carries the scaling through
/// prefactor and gamma argument alike and pairs k series factors with
/// binomial index k; it is the production form, verified against the
/// quadrature oracle. `unscaled_prefactor` keeps the alternate reading (one
/// extra series factor, prefactor without the /C scaling) purely for
/// numerical comparison.
enum class DestSeriesVariant { consistent, unscaled_prefactor };

struct SeriesDiagnostics {
    double value = 0.0;
    double cancellation_ratio = 1.0;
    std::uint64_t terms = 0;
};

/// Per-relay decoding failure probability q = P[γ_{s,k} < u]; identical for
/// all k under the i.i.d. relay-side assumptions.
double relay_decode_failure(const channel::SystemConfig& cfg);
SeriesDiagnostics relay_decode_failure_detail(const channel::SystemConfig& cfg);

/// P[γ_d < u | decoding set of size L]. L = 0 returns exactly 1.
double dest_outage_given_set(const channel::SystemConfig& cfg, int set_size);
SeriesDiagnostics dest_outage_given_set_detail(
    const channel::SystemConfig& cfg, int set_size,
    DestSeriesVariant variant = DestSeriesVariant::consistent);

/// Binomial law of the decoding-set size for per-relay failure probability q.
std::vector<double> set_size_pmf(int k_relays, double q);

struct SetSizeProbability {
    int set_size;
    double probability;
};

/// P[|B_L| = L] for L = 0..K; probabilities sum to 1.
std::vector<SetSizeProbability> decoding_set_distribution(const channel::SystemConfig& cfg);

/// Total outage probability: Σ_L P[γ_d < u | L] · P[|B_L| = L].
OutageEstimate outage_probability(const channel::SystemConfig& cfg);

}  // namespace risdf::analytic
