// Acceptance gate: one line per criterion, [PASS]/[FAIL], nonzero exit if
// anything fails.  Budgets and tolerances are pinned here, next to the
// criteria they protect.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "platbook/corpus.hpp"
#include "platbook/errors.hpp"
#include "platbook/openbook.hpp"
#include "platbook/pipeline.hpp"
#include "platbook/trace.hpp"
#include "platbook/verify.hpp"

using namespace platbook;
using clk = std::chrono::steady_clock;

namespace {

constexpr double kLadderMsPerCase = 1.0;   // each compile must stay under this
constexpr std::size_t kFuzzCases = 1000;   // criterion 3 minimum
constexpr double kFuzzBudgetSeconds = 60.0;
constexpr std::size_t kCorpusCases = 400;  // criteria 4 and 5 sample
constexpr std::size_t kOracleMatrices = 10000;
constexpr std::uint64_t kSeed = 2026;

int failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    if (!ok) ++failures;
}

double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

PlatInput make_input(int n, long long p, const char* word = "") {
    PlatInput in;
    in.word.n = n;
    in.word.syllables = parse_syllables(word, n);
    in.p = p;
    return in;
}

// 1. The clasp stage lands framing(U) on -p+(2n-2) and the full lens run
//    lands it on -1, for every n in 1..4 and every admissible p up to 12,
//    with each compile under kLadderMsPerCase.
void criterion_framing_ladder() {
    int cases = 0;
    double worst_ms = 0;
    std::string bad;
    for (int n = 1; n <= 4 && bad.empty(); ++n) {
        for (long long p = 2 * n - 1; p <= 12 && bad.empty(); ++p) {
            const auto t0 = clk::now();
            const PipelineResult r = run_lens(make_input(n, p));
            const double ms = ms_since(t0);
            worst_ms = std::max(worst_ms, ms);
            ++cases;
            if (r.framing_after_clasps != -p + (2 * n - 2))
                bad = "n=" + std::to_string(n) + " p=" + std::to_string(p) +
                      ": clasp stage framing " + std::to_string(r.framing_after_clasps);
            else if (r.diagram.u().framing != -1)
                bad = "n=" + std::to_string(n) + " p=" + std::to_string(p) +
                      ": endpoint framing " + std::to_string(r.diagram.u().framing);
            else if (ms > kLadderMsPerCase)
                bad = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " took " +
                      std::to_string(ms) + " ms";
        }
    }
    report("framing-ladder", bad.empty(),
           bad.empty() ? std::to_string(cases) + " (n,p) cases, -p -> -p+(2n-2) -> -1, worst " +
                             std::to_string(worst_ms) + " ms"
                       : bad);
}

// 2. Every p with 1 <= p <= 2n-2 is rejected with HypothesisViolated and no
//    endpoint is produced.
void criterion_hypothesis_guard() {
    int cases = 0;
    std::string bad;
    for (int n = 1; n <= 4 && bad.empty(); ++n) {
        for (long long p = 1; p <= 2 * n - 2 && bad.empty(); ++p) {
            ++cases;
            try {
                const PipelineResult r = compile(make_input(n, p, "a(1,2)"));
                bad = "n=" + std::to_string(n) + " p=" + std::to_string(p) +
                      " produced an endpoint with framing(U)=" +
                      std::to_string(r.diagram.u().framing);
            } catch (const Error& e) {
                if (e.code() != errc::hypothesis_violated)
                    bad = std::string("wrong error: ") + e.what();
            }
        }
    }
    report("hypothesis-guard", bad.empty(),
           bad.empty() ? std::to_string(cases) + " inadmissible (n,p) cases all rejected" : bad);
}

// 3. At least kFuzzCases random inputs (n <= 4, word length <= 12, p = 0 or
//    2n-2 < p <= 12) compile to genus-0, all-positive-twist books inside the
//    time budget.
void criterion_fuzz() {
    const auto t0 = clk::now();
    const CorpusSummary s = run_corpus(kSeed, kFuzzCases, Execution::parallel);
    std::size_t books_checked = 0;
    std::string bad;
    for (const auto& o : s.outcomes)
        if (!o.ok) {
            bad = "case " + std::to_string(o.index) + ": " + o.failure;
            break;
        }
    if (bad.empty()) {
        // spot-check the books themselves, independent of the battery
        for (std::uint64_t i = 0; i < kFuzzCases; i += 7) {
            const PipelineResult r = compile(make_case(kSeed, i).input);
            const OpenBook ob = extract(r.diagram, r.trace);
            ++books_checked;
            if (ob.page.genus != 0) {
                bad = "case " + std::to_string(i) + " has genus " +
                      std::to_string(ob.page.genus);
                break;
            }
            for (const auto& tw : ob.monodromy)
                if (tw.sign != 1) {
                    bad = "case " + std::to_string(i) + " has a non-positive twist";
                    break;
                }
        }
    }
    const double sec = ms_since(t0) / 1000.0;
    if (bad.empty() && sec > kFuzzBudgetSeconds)
        bad = "took " + std::to_string(sec) + " s, budget " +
              std::to_string(kFuzzBudgetSeconds);
    report("fuzz-positivity", bad.empty(),
           bad.empty() ? std::to_string(s.cases) + " inputs verified, " +
                             std::to_string(books_checked) + " books re-extracted, " +
                             std::to_string(sec) + " s"
                       : bad);
}

// 4. h1 of every corpus endpoint matches its manifold, the SNF certificate
//    holds every time, and smith_normal_form agrees with the brute-force
//    minor-gcd oracle on kOracleMatrices random matrices.
void criterion_homology() {
    std::string bad;
    for (std::uint64_t i = 0; i < kCorpusCases && bad.empty(); ++i) {
        const CorpusCase c = make_case(kSeed + 1, i);
        try {
            const PipelineResult r = compile(c.input);
            const IntMatrix m = linking_matrix(r.diagram);
            const SnfResult snf = smith_normal_form(m);
            if (!certificate_ok(m, snf))
                bad = "case " + std::to_string(i) + ": certificate failed";
            else if (h1(r.diagram) != expected_h1(c.input.p))
                bad = "case " + std::to_string(i) + ": h1 mismatch for p=" +
                      std::to_string(c.input.p);
        } catch (const Error& e) {
            bad = "case " + std::to_string(i) + ": " + e.what();
        }
    }

    long long oracle_bad = 0;
    if (bad.empty()) {
#pragma omp parallel for schedule(static) reduction(+ : oracle_bad)
        for (long long i = 0; i < static_cast<long long>(kOracleMatrices); ++i) {
            try {
                const IntMatrix m = random_small_matrix(kSeed + 2, static_cast<std::uint64_t>(i));
                const SnfResult snf = smith_normal_form(m);
                if (!certificate_ok(m, snf) || snf.factors() != oracles::minor_gcd_factors(m))
                    ++oracle_bad;
            } catch (...) {
                ++oracle_bad;
            }
        }
        if (oracle_bad != 0)
            bad = std::to_string(oracle_bad) + " of " + std::to_string(kOracleMatrices) +
                  " oracle matrices disagreed";
    }
    report("homology-and-snf", bad.empty(),
           bad.empty() ? std::to_string(kCorpusCases) + " endpoints certified, " +
                             std::to_string(kOracleMatrices) + " matrices against the oracle"
                       : bad);
}

// 5. The recorded trace round-trips on every corpus case, and an injected
//    single-move fault is always detected.
void criterion_round_trip() {
    std::string bad;
    std::size_t faults_checked = 0;
    for (std::uint64_t i = 0; i < kCorpusCases && bad.empty(); ++i) {
        const CorpusCase c = make_case(kSeed + 3, i);
        try {
            const PipelineResult r = compile(c.input);
            const MixedDiagram d0 = initial_diagram(c.input);
            const Report rep = round_trip(d0, r.trace, r.diagram);
            if (!rep.ok()) {
                bad = "case " + std::to_string(i) + ": " + rep.first_failure()->name;
                break;
            }
            // flip one blow-up framing somewhere in the middle
            MoveTrace corrupted = r.trace;
            for (auto& mv : corrupted)
                if (auto* bu = std::get_if<BlowUpMove>(&mv)) {
                    bu->eps = -bu->eps;
                    break;
                }
            if (corrupted != r.trace) {
                ++faults_checked;
                if (round_trip(d0, corrupted, r.diagram).ok()) {
                    bad = "case " + std::to_string(i) + ": flipped framing went undetected";
                    break;
                }
            }
        } catch (const Error& e) {
            bad = "case " + std::to_string(i) + ": " + e.what();
        }
    }
    report("round-trip", bad.empty(),
           bad.empty() ? std::to_string(kCorpusCases) + " traces round-tripped, " +
                             std::to_string(faults_checked) + " injected faults detected"
                       : bad);
}

// 6. The two bundled presets compile to the expected pages: 7 punctures for
//    the 4-plat in the p=4 lens space, 9 for the 6-plat in the product.
void criterion_presets() {
    std::string bad;
    const auto check_preset = [&](const char* file, std::size_t want) {
        if (!bad.empty()) return;
        std::FILE* f = std::fopen((std::string(PLATBOOK_DATA_DIR) + "/" + file).c_str(), "rb");
        if (!f) {
            bad = std::string("missing preset ") + file;
            return;
        }
        std::string text;
        char buf[256];
        std::size_t got;
        while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, got);
        std::fclose(f);
        try {
            const PlatInput in = parse_input(text);
            const PipelineResult r = compile(in);
            const OpenBook ob = extract(r.diagram, r.trace);
            const Report rep = verify_endpoint(in, r.diagram, r.trace);
            if (!rep.ok())
                bad = std::string(file) + ": " + rep.first_failure()->name;
            else if (ob.page.punctures.size() != want)
                bad = std::string(file) + ": " + std::to_string(ob.page.punctures.size()) +
                      " punctures, expected " + std::to_string(want);
        } catch (const Error& e) {
            bad = std::string(file) + ": " + e.what();
        }
    };
    check_preset("lens4_plat4.txt", 7);
    check_preset("s1xs2_plat6.txt", 9);
    report("presets", bad.empty(), bad.empty() ? "4-plat lens book has 7 punctures, 6-plat product book has 9" : bad);
}

} // namespace

int main() {
    criterion_framing_ladder();
    criterion_hypothesis_guard();
    criterion_fuzz();
    criterion_homology();
    criterion_round_trip();
    criterion_presets();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
