#pragma once

#include <string>
#include <vector>

#include "platbook/diagram.hpp"

namespace platbook {

// Planar open book read off a normalized endpoint diagram: the 0-framed
// circles bound the page punctures, each -1-framed circle contributes one
// positive Dehn twist supported on the punctures it links, and the knot sits
// on the page as a curve around the punctures it runs through.

struct TwistCurve {
    std::vector<int> curve; // binding ids the twist encloses, in puncture order
    int sign = 1;           // always +1 here; kept explicit for the audit
    int circle_id = 0;      // the -1 circle it came from; not serialized

    friend bool operator==(const TwistCurve&, const TwistCurve&) = default;
};

struct Page {
    int genus = 0;
    std::vector<int> punctures; // binding ids, creation order (U, if 0-framed, is first)

    friend bool operator==(const Page&, const Page&) = default;
};

struct OpenBook {
    Page page;
    std::vector<TwistCurve> monodromy;
    std::vector<int> knot_encloses;
    long long p = 0;

    friend bool operator==(const OpenBook&, const OpenBook&) = default;
};

OpenBook extract(const MixedDiagram& d, const MoveTrace& t);

// disk with one hole per puncture: 1 - #punctures
int euler_characteristic(const OpenBook& b);

// Deterministic single-line JSON, fields in a fixed order:
// {"page":{"genus":0,"punctures":[...]},"monodromy":[{"curve":[...],"sign":1},...],
//  "knot":{"encloses":[...]},"manifold":{"p":...}}
std::string to_json(const OpenBook& b);

// Deterministic schematic SVG: punctures on a midline, one closed curve per
// monodromy twist, the knot curve highlighted.  Integer coordinates only, so
// equal books render byte-identically.
std::string render_svg(const OpenBook& b, const MoveTrace& stages);

} // namespace platbook
