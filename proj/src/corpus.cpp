#include "platbook/corpus.hpp"

#include <random>

#include "platbook/errors.hpp"
#include "platbook/openbook.hpp"
#include "platbook/pipeline.hpp"
#include "platbook/verify.hpp"

namespace platbook {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// one independent stream per (seed, index): the schedule never touches it
std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ index));
}

} // namespace

CorpusCase make_case(std::uint64_t seed, std::uint64_t index) {
    std::mt19937_64 rng = case_rng(seed, index);
    std::uniform_int_distribution<int> npick(1, 4);

    CorpusCase c;
    c.index = index;
    const int n = npick(rng);
    c.input.word.n = n;
    if (rng() & 1) {
        std::uniform_int_distribution<long long> ppick(2LL * n - 1, 12);
        c.input.p = ppick(rng);
    } else {
        c.input.p = 0;
    }

    std::uniform_int_distribution<int> len(0, 12);
    std::uniform_int_distribution<int> strand(1, 2 * n);
    std::uniform_int_distribution<int> epick(0, 3);
    constexpr long long exps[4] = {-2, -1, 1, 2};
    const int m = len(rng);
    for (int i = 0; i < m; ++i) {
        int a = strand(rng);
        int b = strand(rng);
        while (b == a) b = strand(rng);
        c.input.word.syllables.push_back(
            Syllable{std::min(a, b), std::max(a, b), exps[epick(rng)]});
    }
    return c;
}

CaseOutcome run_case(const CorpusCase& c) {
    CaseOutcome out;
    out.index = c.index;
    try {
        const PipelineResult r = compile(c.input);
        const Report rep = verify_endpoint(c.input, r.diagram, r.trace);
        const OpenBook ob = extract(r.diagram, r.trace);
        out.punctures = static_cast<int>(ob.page.punctures.size());
        out.twists = static_cast<int>(ob.monodromy.size());
        out.h1_factors = h1(r.diagram);
        out.ok = rep.ok();
        if (const CheckResult* f = rep.first_failure()) out.failure = f->name + ": " + f->detail;
    } catch (const Error& e) {
        out.ok = false;
        out.failure = e.what();
    }
    return out;
}

CorpusSummary run_corpus(std::uint64_t seed, std::size_t count, Execution exec) {
    CorpusSummary s;
    s.cases = count;
    s.outcomes.resize(count);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            s.outcomes[i] = run_case(make_case(seed, static_cast<std::uint64_t>(i)));
    } else {
        for (std::size_t i = 0; i < count; ++i) s.outcomes[i] = run_case(make_case(seed, i));
    }
    for (const auto& o : s.outcomes)
        if (!o.ok) ++s.failures;
    return s;
}

IntMatrix random_small_matrix(std::uint64_t seed, std::uint64_t index) {
    std::mt19937_64 rng = case_rng(seed ^ 0x5eed5eed5eed5eedULL, index);
    std::uniform_int_distribution<int> dim(1, 6);
    std::uniform_int_distribution<long long> entry(-3, 3);
    IntMatrix m(dim(rng), dim(rng));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = entry(rng);
    return m;
}

SnfBatchSummary snf_batch(std::uint64_t seed, std::size_t count, Execution exec) {
    SnfBatchSummary s;
    s.cases = count;
    std::vector<char> ok(count, 1);
    const auto one = [&](std::uint64_t i) {
        const IntMatrix m = random_small_matrix(seed, i);
        try {
            ok[i] = certificate_ok(m, smith_normal_form(m)) ? 1 : 0;
        } catch (const Error&) {
            ok[i] = 0;
        }
    };
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            one(static_cast<std::uint64_t>(i));
    } else {
        for (std::size_t i = 0; i < count; ++i) one(i);
    }
    for (std::size_t i = 0; i < count; ++i)
        if (!ok[i]) {
            ++s.failures;
            if (s.first_failure.empty())
                s.first_failure = "matrix " + std::to_string(i) + " failed its certificate";
        }
    return s;
}

} // namespace platbook
