#pragma once

#include <string>
#include <vector>

#include "platbook/diagram.hpp"
#include "platbook/openbook.hpp"
#include "platbook/snf.hpp"

namespace platbook {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;

    void add(std::string name, bool ok, std::string detail = "");
    bool ok() const;
    const CheckResult* first_failure() const;
    std::string to_string() const;
};

// first homology of the surgered manifold: invariant factors of the linking
// matrix with the trivial (1) factors dropped and the 0 factors kept
std::vector<long long> h1(const MixedDiagram& d);

// what h1 must come out to: {0} for the product (p=0), {} for p=1, {p} else
std::vector<long long> expected_h1(long long p);

// Replays the trace forward onto `initial` and checks it reaches `final_d`,
// then unwinds `final_d` move by move (blow-downs against the recorded
// blow-ups, un-normalization against the recorded relabelling) and checks it
// lands back on `initial`.  The unwind cross-checks every recorded framing
// and target list against the diagram, so a single corrupted move is caught
// at the move where it diverges.
Report round_trip(const MixedDiagram& initial, const MoveTrace& t, const MixedDiagram& final_d);

// structural audit of an extracted book against its endpoint diagram: all
// twists positive, page planar, binding count right, twists in bijection
// with the -1-framed components
Report audit(const OpenBook& ob, const MixedDiagram& d);

// the full battery for one compiled input: endpoint framing law, h1 against
// the manifold, SNF certificate, round trip, extraction + audit
Report verify_endpoint(const PlatInput& input, const MixedDiagram& endpoint, const MoveTrace& t);

} // namespace platbook
