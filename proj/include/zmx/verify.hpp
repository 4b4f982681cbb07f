#pragma once

#include "zmx/construct.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zmx {

/// One randomized theorem campaign: `trials` per order n in [n_lo, n_hi].
struct VerifyConfig {
    std::string theorem;
    int n_lo = 2;
    int n_hi = 6;
    int trials = 100;
    std::uint64_t seed = 42;
    SampleRange range{-4, 4, 2};
    int order_cap = kDefaultOrderCap;
};

struct VerifySummary {
    std::string theorem;
    std::uint64_t seed = 0;
    long trials = 0;
    long failures = 0;
    /// The first few failing trials, each tagged with its order and trial index.
    std::vector<std::string> failure_notes;

    bool passed() const { return failures == 0; }
};

/// cycle-matrix, det-formula, bdsw-z, type-d, polyn, maybee, zclass-oracles.
const std::vector<std::string>& theorem_ids();

/// Runs a suite. Trial k at order n draws from its own Sampler seeded from
/// (seed, n, k), so a summary is reproducible from the config alone.
/// Throws UnknownTheorem, OrderCapExceeded, or InvalidParameters on a bad config.
VerifySummary run_verify(const VerifyConfig& config);

/// Seed of trial `trial` at order `n` within a campaign.
std::uint64_t trial_seed(std::uint64_t seed, int n, int trial);

}  // namespace zmx
