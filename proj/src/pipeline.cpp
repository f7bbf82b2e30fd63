#include "platbook/pipeline.hpp"

#include <string>
#include <vector>

#include "platbook/errors.hpp"

// Both pipelines run the same grammar of moves.  Cancelling a clasp of U's
// chain costs a +1 blow-up around U and the clasp strand, which raises
// framing(U) by +1 (U passes the circle once).  Cancelling a unit syllable
// of K's word costs a blow-up of the opposite sign around the syllable's two
// strands; K is unframed, so only the circle itself keeps that framing.
// Every intermediate +1 circle is killed with a -1 meridian, leaving it
// 0-framed and the meridian -1-framed, so the endpoint contains only 0s and
// -1s off the U row.  What distinguishes the two targets is the budget for
// framing(U): starting from -p, the 2n-2 clasps contribute +(2n-2), and the
// ladder (p >= 1) or the per-clasp frame bumps (p == 0) make up the
// difference to -1 or 0.

namespace platbook {

namespace {

void check_endpoint(const MixedDiagram& d, long long want_u) {
    validate(d);
    if (!d.normalized || !d.pending_syllables.empty() || !d.pending_clasps.empty())
        fail(errc::pipeline_invariant_violated, "pipeline stopped before normalization");
    if (d.u().framing != want_u)
        fail(errc::pipeline_invariant_violated,
             "endpoint framing(U) is " + std::to_string(d.u().framing) + ", expected " +
                 std::to_string(want_u));
    for (const auto& c : d.circles) {
        if (c.kind != CompKind::circle) continue;
        if (c.framing != 0 && c.framing != -1)
            fail(errc::pipeline_invariant_violated,
                 "endpoint circle " + std::to_string(c.id) + " has framing " +
                     std::to_string(c.framing));
        // in the product manifold the page has no closed binding: every
        // 0-framed circle must run along the knot
        if (want_u == 0 && c.framing == 0 && knot_linking(d, c.id) < 1)
            fail(errc::pipeline_invariant_violated,
                 "0-framed circle " + std::to_string(c.id) + " does not link the knot");
    }
}

std::vector<int> clasp_order(const MixedDiagram& d) {
    return {d.pending_clasps.begin(), d.pending_clasps.end()};
}

} // namespace

MixedDiagram unknot_knot(MixedDiagram d, MoveTrace* trace) {
    while (!d.pending_syllables.empty()) {
        const Syllable s = d.pending_syllables.front();
        const int id = d.next_id();
        d = cancel_syllable(d, s, trace);
        if (s.exp < 0) d = meridian_zero(d, id, StepTag::cancel_meridian, trace);
    }
    return d;
}

PipelineResult run_s1xs2(const PlatInput& input) {
    if (input.p != 0)
        fail(errc::pipeline_invariant_violated, "the product pipeline requires p = 0");

    MixedDiagram d = initial_diagram(input);
    MoveTrace trace;

    for (const int s : clasp_order(d)) {
        const int id = d.next_id();
        d = blow_up(d, {Target::comp(kSurgeryUId), Target::strand(s)}, +1, StepTag::clasp,
                    Consume::front_clasp, &trace);
        d = meridian_zero(d, id, StepTag::clasp_meridian, &trace);
        d = blow_up(d, {Target::comp(kSurgeryUId)}, -1, StepTag::frame_bump, Consume::none,
                    &trace);
    }
    const long long after_clasps = d.u().framing;
    if (after_clasps != 0)
        fail(errc::pipeline_invariant_violated,
             "framing(U) should be back to 0 after the clasp stage, got " +
                 std::to_string(after_clasps));

    d = unknot_knot(std::move(d), &trace);
    d = normalize_unknotted(d, &trace);
    check_endpoint(d, 0);
    return PipelineResult{std::move(d), std::move(trace), after_clasps};
}

PipelineResult run_lens(const PlatInput& input) {
    const int n = input.word.n;
    const long long p = input.p;
    if (p < 1 || p <= 2 * n - 2)
        fail(errc::hypothesis_violated,
             "need p > 2n-2 (got p=" + std::to_string(p) + ", n=" + std::to_string(n) +
                 "): a smaller coefficient strands framing(U) above -1, and flattening it "
                 "would cost negative twists");

    MixedDiagram d = initial_diagram(input);
    MoveTrace trace;

    std::vector<int> clasp_ids;
    for (const int s : clasp_order(d)) {
        clasp_ids.push_back(d.next_id());
        d = blow_up(d, {Target::comp(kSurgeryUId), Target::strand(s)}, +1, StepTag::clasp,
                    Consume::front_clasp, &trace);
    }
    const long long after_clasps = d.u().framing;
    if (after_clasps != -p + (2 * n - 2))
        fail(errc::pipeline_invariant_violated,
             "framing(U) after the clasp stage is " + std::to_string(after_clasps) +
                 ", expected " + std::to_string(-p + (2 * n - 2)));
    for (const int id : clasp_ids) d = meridian_zero(d, id, StepTag::clasp_meridian, &trace);

    std::vector<int> ladder_ids;
    for (long long k = 0; k < p - 2 * n + 1; ++k) {
        ladder_ids.push_back(d.next_id());
        d = blow_up(d, {Target::comp(kSurgeryUId)}, +1, StepTag::ladder, Consume::none, &trace);
    }
    for (const int id : ladder_ids) d = meridian_zero(d, id, StepTag::ladder_meridian, &trace);

    d = unknot_knot(std::move(d), &trace);
    d = normalize_unknotted(d, &trace);
    check_endpoint(d, -1);
    return PipelineResult{std::move(d), std::move(trace), after_clasps};
}

PipelineResult compile(const PlatInput& input) {
    if (input.p == 0) return run_s1xs2(input);
    return run_lens(input);
}

} // namespace platbook
