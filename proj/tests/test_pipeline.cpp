#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "platbook/pipeline.hpp"
#include "platbook/trace.hpp"

using namespace platbook;

namespace {

PlatInput make_input(int n, long long p, const char* word = "") {
    PlatInput in;
    in.word.n = n;
    in.word.syllables = parse_syllables(word, n);
    in.p = p;
    return in;
}

} // namespace

TEST_CASE("lens run walks framing(U) from -p through -p+(2n-2) to -1") {
    const PipelineResult r = run_lens(make_input(2, 4, "a(1,2)"));
    CHECK(r.framing_after_clasps == -2);
    CHECK(r.diagram.u().framing == -1);
    CHECK(r.diagram.normalized);
    CHECK(r.diagram.pending_syllables.empty());
    CHECK(r.diagram.pending_clasps.empty());
}

TEST_CASE("golden endpoint for n=2 p=4 a(1,2)") {
    const PlatInput in = make_input(2, 4, "a(1,2)");
    const PipelineResult r = compile(in);

    const std::string want_trace = "BU 2 e=+1 targets=[U,s2] step=clasp\n"
                                   "BU 3 e=+1 targets=[U,s3] step=clasp\n"
                                   "BU 4 e=-1 targets=[c2] step=clasp-meridian\n"
                                   "BU 5 e=-1 targets=[c3] step=clasp-meridian\n"
                                   "BU 6 e=+1 targets=[U] step=ladder\n"
                                   "BU 7 e=-1 targets=[c6] step=ladder-meridian\n"
                                   "BU 8 e=-1 targets=[s1,s2] step=cancel\n"
                                   "NM\n";
    CHECK(serialize_trace(r.trace) == want_trace);

    const auto framing = [&](int id) { return r.diagram.find(id)->framing; };
    CHECK(framing(kSurgeryUId) == -1);
    CHECK(framing(2) == 0);
    CHECK(framing(3) == 0);
    CHECK(framing(4) == -1);
    CHECK(framing(5) == -1);
    CHECK(framing(6) == 0);
    CHECK(framing(7) == -1);
    CHECK(framing(8) == -1);

    // the recorded trace replays to exactly the endpoint
    CHECK(replay(initial_diagram(in), r.trace) == r.diagram);
}

TEST_CASE("hypothesis guard: p must exceed 2n-2") {
    CHECK(fails_with(errc::hypothesis_violated, [] { compile(make_input(2, 2, "a(1,2)")); }));
    CHECK(fails_with(errc::hypothesis_violated, [] { compile(make_input(3, 4)); }));
    CHECK(fails_with(errc::hypothesis_violated, [] { run_lens(make_input(2, 0)); }));
    // boundary cases that hold
    CHECK(compile(make_input(1, 1)).diagram.u().framing == -1);
    CHECK(compile(make_input(2, 3)).diagram.u().framing == -1);
    CHECK(compile(make_input(3, 5)).diagram.u().framing == -1);
}

TEST_CASE("product run returns framing(U) to zero each cycle") {
    const PipelineResult r = run_s1xs2(make_input(3, 0, "a(1,4)^-2 a(3,6)^-2"));
    CHECK(r.framing_after_clasps == 0);
    CHECK(r.diagram.u().framing == 0);
    // U links the unknotted K once
    CHECK(r.diagram.u().targets == std::vector<Target>{Target::comp(kKnotId)});
    CHECK(knot_linking(r.diagram, kSurgeryUId) == 1);
    // every 0-framed circle runs along the knot
    for (const auto& c : r.diagram.circles)
        if (c.kind == CompKind::circle && c.framing == 0) {
            CAPTURE(c.id);
            CHECK(knot_linking(r.diagram, c.id) >= 1);
        }
    CHECK(fails_with(errc::pipeline_invariant_violated, [] { run_s1xs2(make_input(2, 1)); }));
}

TEST_CASE("negative syllables leave no +1 framing behind") {
    for (const auto& in : {make_input(2, 5, "a(1,2)^-3 a(2,4)"), make_input(1, 0, "a(1,2)^-1"),
                           make_input(4, 12, "a(2,7)^-2 a(1,8) a(3,5)^2")}) {
        CAPTURE(render_input(in));
        const PipelineResult r = compile(in);
        for (const auto& c : r.diagram.circles)
            if (c.kind == CompKind::circle) CHECK((c.framing == 0 || c.framing == -1));
        CHECK(r.diagram.u().framing == (in.p == 0 ? 0 : -1));
    }
}

TEST_CASE("compilation is deterministic") {
    const PlatInput in = make_input(3, 9, "a(2,5)^-1 a(1,6)^2 a(3,4)");
    const PipelineResult a = compile(in);
    const PipelineResult b = compile(in);
    CHECK(a.diagram == b.diagram);
    CHECK(serialize_trace(a.trace) == serialize_trace(b.trace));
}

TEST_CASE("trace counts follow the stage formulas") {
    // lens: (2n-2) clasps + (2n-2) meridians + (p-2n+1) ladders + as many
    // meridians + one blow-up per unit syllable (+ meridian if negative) + NM
    const PlatInput in = make_input(2, 7, "a(1,3)^-2 a(2,4)");
    const PipelineResult r = compile(in);
    const std::size_t want = (2 * 2 - 2) * 2 + (7 - 2 * 2 + 1) * 2 + 3 + 2 + 1;
    CHECK(r.trace.size() == want);

    // product: per clasp a (blow-up, meridian, frame bump) triple
    const PlatInput in0 = make_input(2, 0, "a(1,3)^-2 a(2,4)");
    const PipelineResult r0 = compile(in0);
    CHECK(r0.trace.size() == (2 * 2 - 2) * 3 + 3 + 2 + 1);
}
