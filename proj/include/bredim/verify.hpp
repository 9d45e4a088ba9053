#pragma once

// Oracle cross-check suites. Each check is deterministic for a given seed.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bredim::verify {

using Seed = std::uint64_t;

inline constexpr Seed kDefaultSeed = 0x5eed2024;

/// BREDIM_SEED from the environment when set and well-formed, else `fallback`.
Seed seed_from_env(Seed fallback = kDefaultSeed);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::size_t checked = 0; // instances or assertions examined
    double seconds = 0;
    std::string detail;      // first failure, or a summary when passing
};

CriterionResult closed_form_table();                 // 1
CriterionResult braid_table();                       // 2
CriterionResult raag_pipeline(Seed seed);            // 3
CriterionResult torus_check();                       // 4
CriterionResult lattice_oracles(Seed seed);          // 5
CriterionResult automorphism_postconditions(Seed seed); // 6
CriterionResult derivation_replay();                 // 7
CriterionResult graph_of_groups_example();           // 8

/// Suites: lattice {5, 6}, raag {3}, homology {4}, dims {1, 2, 7, 8}, all {1..8}.
/// Unknown names raise InputError.
std::vector<CriterionResult> run_suite(std::string_view suite, Seed seed);

bool known_suite(std::string_view suite);

} // namespace bredim::verify
