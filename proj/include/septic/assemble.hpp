#pragma once

#include <optional>
#include <string>

#include "septic/classifier.hpp"
#include "septic/engstrom.hpp"
#include "septic/scan.hpp"

namespace septic {

/// Everything the engine can say about nu_p(i(K)) for one prime.
struct NuEvidence {
    long p = 0;
    long value = 0;                       // the classifier's nu_p
    std::optional<SplittingType> type;    // engine splitting, when complete
    bool engine_complete = false;
    bool engine_regular = false;
    long engine_index_lower = 0;
    bool engine_index_exact = false;
    std::optional<bool> common_divisor;   // Lemma check on the type
    std::optional<long> engstrom_value;   // table value, when tabulated
    std::optional<long> tame_dK;          // sum (e-1) f, tame types only
    std::optional<long> scan_upper;       // generator-scan bound on nu_p(i(K))
    std::optional<long> scan_relative;    // best nu_p(ind theta) - nu_p(ind alpha)
    std::vector<std::string> notes;
    std::vector<std::string> unresolved;  // engine configurations left open
};

/// Classifier value for nu_p plus the engine/table/Lemma evidence trail.
/// A positive scan budget attaches generator-scan bounds to the evidence.
/// Throws InconsistencyDetected when two exact sources disagree.
NuEvidence assemble_nu(const Trinomial& t, long p, long scan_budget = 0,
                       unsigned long seed = 1);

} // namespace septic
