#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sympoly/polymatrix.hpp"

namespace sympoly {

/// Tally of a bounded-rank sampling run. Keys of classified are the bundle
/// index as text, or "none"; counts sum to trials.
struct ExperimentReport {
    int n = 0, d = 0, r = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string perturbation;  // magnitude descriptor, e.g. "z=1/1000"
    std::map<std::string, int> classified;
    int perturbation_checked = 0;
    int perturbation_stable = 0;
    std::vector<PolyMatrix> unclassified;  // every "none" sample, for inspection
    std::string note;
};

/// Draws trials samples P = U S U^T with U random n x r of balanced column
/// degree (d-1)/2 and S a random symmetric r x r pencil, yielding symmetric
/// grade-d samples of rank at most r, and classifies each against the
/// generic bundle catalog. Classified samples are additionally perturbed by
/// the congruence (I + zE)^T P (I + zE) with a random integer E and
/// reclassified; the bundle must survive.
ExperimentReport run_sampler(int n, int d, int r, int trials, std::uint64_t seed,
                             const GaussianRational& z);

}  // namespace sympoly
