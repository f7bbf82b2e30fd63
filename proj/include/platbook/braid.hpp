#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace platbook {

// One syllable a(i,j)^k of a pure braid word on 2n strands: the full twist
// of strands i and j repeated k times (k < 0 for left-handed twists).
struct Syllable {
    int lo = 0;
    int hi = 0;
    std::int64_t exp = 0;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct PureBraidWord {
    int n = 0; // half the strand count
    std::vector<Syllable> syllables;

    int strand_count() const { return 2 * n; }
    // Total number of unit twists after expanding exponents.
    std::int64_t unit_length() const;

    friend bool operator==(const PureBraidWord&, const PureBraidWord&) = default;
};

// A braided-plat problem instance: the pure braid word of the knot and the
// magnitude p of the surgery coefficient (the surgery unknot is framed -p;
// p = 0 selects S^1 x S^2, p >= 1 selects the lens space L(p,1)).
struct PlatInput {
    PureBraidWord word;
    std::int64_t p = 0;

    friend bool operator==(const PlatInput&, const PlatInput&) = default;
};

// Concrete syntax: "n=<int>" header followed by whitespace-separated
// syllables "a(i,j)" or "a(i,j)^k". parse_word(render_word(w)) == w.
PureBraidWord parse_word(std::string_view text);
std::string render_word(const PureBraidWord& word);

// Syllable list only, strand bound supplied externally (CLI --word mode).
std::vector<Syllable> parse_syllables(std::string_view text, int n);

// Input file format: "n=<int> p=<int>" then syllables.
PlatInput parse_input(std::string_view text);
std::string render_input(const PlatInput& input);

// Strand order in which the shifted plat capping traverses the knot.
// Top caps join (1,2),(3,4),...,(2n-1,2n); bottom caps join
// (2,3),(4,5),...,(2n-2,2n-1) and the closure arc joins (2n,1).  That
// pattern always closes to a single component, so the returned chain is
// 1,2,...,2n.
std::vector<int> plat_component(int n);

// The canonical position of the surgery unknot U relative to the plat:
// a chain of n circles, one around each top-cap strand pair, linked into a
// single unknot.  Each joint of the chain clasps the interior strand it
// passes, giving one left-handed clasp on each of strands 2..2n-1.  The
// blow-ups that remove those 2n-2 clasps are what the pipelines perform
// first.
struct UDecomposition {
    std::vector<std::array<int, 2>> cap_circles; // (1,2),(3,4),...,(2n-1,2n)
    std::vector<int> clasp_strands;              // 2,3,...,2n-1 in order

    // Every strand U passes, each exactly once (flattened cap circles).
    std::vector<int> encircled_strands() const;
};

UDecomposition u_decomposition(int n);

// Expand every syllable into |exp| unit syllables, preserving order.
std::vector<Syllable> unit_expand(const PureBraidWord& word);

} // namespace platbook
