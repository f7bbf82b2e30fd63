#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "platbook/braid.hpp"
#include "platbook/intmat.hpp"

namespace platbook {

// Randomized compile-and-verify sweeps.  Case generation is a pure function
// of (seed, index), so the parallel schedule cannot change the outcomes and
// the serial run is a bitwise reference for the OpenMP one.

struct CorpusCase {
    std::uint64_t index = 0;
    PlatInput input;
};

struct CaseOutcome {
    std::uint64_t index = 0;
    bool ok = false;
    std::string failure;
    int punctures = 0;
    int twists = 0;
    std::vector<long long> h1_factors;

    friend bool operator==(const CaseOutcome&, const CaseOutcome&) = default;
};

struct CorpusSummary {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<CaseOutcome> outcomes;
};

enum class Execution { serial, parallel };

// n in 1..4; half the cases p = 0, half a lens coefficient in (2n-2, 12];
// up to 12 syllables with exponents in {-2,-1,1,2}
CorpusCase make_case(std::uint64_t seed, std::uint64_t index);

// compile + full verification battery; pipeline errors land in `failure`
CaseOutcome run_case(const CorpusCase& c);

CorpusSummary run_corpus(std::uint64_t seed, std::size_t count, Execution exec);

// The second data-parallel kernel: Smith forms of random small matrices,
// checked against their own transform certificates.
struct SnfBatchSummary {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

// up to 6x6, entries in [-3, 3]; shared with the tests' brute-force oracle
IntMatrix random_small_matrix(std::uint64_t seed, std::uint64_t index);

SnfBatchSummary snf_batch(std::uint64_t seed, std::size_t count, Execution exec);

} // namespace platbook
