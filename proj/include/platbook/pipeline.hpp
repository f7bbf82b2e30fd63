#pragma once

#include "platbook/diagram.hpp"

namespace platbook {

struct PipelineResult {
    MixedDiagram diagram;
    MoveTrace trace;
    long long framing_after_clasps = 0; // framing(U) once every clasp is cancelled
};

// Cancels K's pending word syllable by syllable.  A negative syllable leaves
// a +1 circle, which is immediately driven to 0 with a meridian so that no
// positive framing survives to the endpoint.
MixedDiagram unknot_knot(MixedDiagram d, MoveTrace* trace);

// p == 0.  Each clasp is traded for a +1 blow-up, its meridian, and a -1
// frame bump on U, so framing(U) returns to 0 after every cycle; the
// endpoint has framing(U) == 0 and every 0-framed circle runs along K.
PipelineResult run_s1xs2(const PlatInput& input);

// p >= 1 and p > 2n-2.  Clasp blow-ups walk framing(U) from -p up to
// -p + (2n-2); a ladder of p-2n+1 further +1 blow-ups (each followed by its
// meridian) carries it the rest of the way to -1.
PipelineResult run_lens(const PlatInput& input);

// dispatch on p: 0 -> run_s1xs2, otherwise run_lens
PipelineResult compile(const PlatInput& input);

} // namespace platbook
