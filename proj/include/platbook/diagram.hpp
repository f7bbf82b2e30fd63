#pragma once

#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "platbook/braid.hpp"
#include "platbook/intmat.hpp"

namespace platbook {

// Combinatorial mixed diagram of the knot K, the surgery unknot U, and the
// circles added by blow-ups.
//
// The model keeps no planar geometry.  A circle is its framing plus the
// multiset of things it encircles (its targets), each entry passing through
// the circle's disk geometrically once.  With every plat strand oriented
// upward and every circle oriented the same way, an entry contributes +1 to
// algebraic linking unless it carries sign -1.  Blowing up a circle with
// framing e adds e*l^2 to the framing of every framed component it links l
// times, and inserts an e full twist among the encircled strands.  The twist
// insertion is tracked symbolically: a blow-up may consume (cancel) the next
// pending syllable of K's braid word, or the next pending clasp of U's
// cap-circle chain, and blowing the circle back down restores whatever it
// consumed.
//
// Component ids: K = 0 (never framed, never stored as a circle), U = 1,
// blow-up circles 2, 3, ... in creation order.  No id counter is stored; the
// next id is always max(existing) + 1, so a blow-up/blow-down pair leaves no
// residue in the value and round-tripped diagrams compare equal.

enum class CompKind { knot, surgery_u, circle };

constexpr int kKnotId = 0;
constexpr int kSurgeryUId = 1;

struct Target {
    enum class Kind { component, strand };
    Kind kind = Kind::component;
    int index = 0; // component id, or strand number in 1..2n
    int sign = 1;

    static Target strand(int k, int sign = 1) { return {Kind::strand, k, sign}; }
    static Target comp(int id, int sign = 1) { return {Kind::component, id, sign}; }

    friend bool operator==(const Target&, const Target&) = default;
    friend auto operator<=>(const Target&, const Target&) = default;
};

// canonical order: components by id (K before U before circles), then strands
void canonicalize(std::vector<Target>& targets);

// What a blow-up circle swallowed when it was created: one unit syllable of
// K's word, or one clasp of U's chain (at the recorded strand).
struct CancelledTwist {
    enum class Kind { syllable, clasp };
    Kind kind = Kind::syllable;
    Syllable syllable{};
    int clasp_strand = 0;

    friend bool operator==(const CancelledTwist&, const CancelledTwist&) = default;
};

struct Circle {
    int id = 0;
    CompKind kind = CompKind::circle;
    long long framing = 0;
    std::vector<Target> targets; // canonical order
    std::optional<CancelledTwist> cancelled;

    friend bool operator==(const Circle&, const Circle&) = default;
};

struct MixedDiagram {
    int n = 0;       // the plat has 2n strands
    long long p = 0; // U starts with framing -p
    std::vector<Circle> circles;            // circles[0] is U; the rest in creation order
    std::deque<Syllable> pending_syllables; // unit syllables of K's word, front = next
    std::deque<int> pending_clasps;         // strands carrying U's chain clasps, front = next
    bool normalized = false;                // strand targets relabelled onto the unknotted K

    const Circle& u() const { return circles.front(); }
    Circle& u() { return circles.front(); }
    const Circle* find(int id) const;
    Circle* find(int id);
    int next_id() const;

    friend bool operator==(const MixedDiagram&, const MixedDiagram&) = default;
};

// "" when equal, otherwise one line describing the first difference found
std::string describe_difference(const MixedDiagram& a, const MixedDiagram& b);

// representation invariants; throws errc::pipeline_invariant_violated (or
// errc::unknown_target for dangling references) on violation
void validate(const MixedDiagram& d);

// U framed -p around all 2n strands, K's word pending, U's clasps pending
MixedDiagram initial_diagram(const PlatInput& input);

// ---- moves ------------------------------------------------------------

enum class StepTag {
    clasp,
    clasp_meridian,
    frame_bump,
    ladder,
    ladder_meridian,
    cancel,
    cancel_meridian,
    meridian,
    manual,
};

struct BlowUpMove {
    int id = 0;
    int eps = 0;
    std::vector<Target> targets;
    StepTag step = StepTag::manual;
    std::optional<CancelledTwist> cancelled;

    friend bool operator==(const BlowUpMove&, const BlowUpMove&) = default;
};

struct BlowDownMove {
    int id = 0;

    friend bool operator==(const BlowDownMove&, const BlowDownMove&) = default;
};

// Once K's word and U's clasps are all cancelled, K is a trivial plat and U
// is a free unknot around it: strand targets become knot targets and U's
// target list collapses to a single pass around K.  The prior lists are kept
// so the move can be undone exactly.
struct NormalizeMove {
    std::vector<Target> u_before;
    std::vector<std::pair<int, std::vector<Target>>> before; // circles whose targets changed

    friend bool operator==(const NormalizeMove&, const NormalizeMove&) = default;
};

using Move = std::variant<BlowUpMove, BlowDownMove, NormalizeMove>;
using MoveTrace = std::vector<Move>;

enum class Consume { none, next_syllable, front_clasp };

// Adds a circle framed eps around the targets, bumps framings by eps*l^2,
// and optionally consumes the next pending syllable or clasp.  forced_id is
// for replaying recorded traces; it must be unused and >= 2.
MixedDiagram blow_up(const MixedDiagram& d, std::vector<Target> targets, int eps,
                     StepTag tag = StepTag::manual, Consume consume = Consume::none,
                     MoveTrace* trace = nullptr, std::optional<int> forced_id = {});

// Removes a +1/-1 framed circle nobody nests around, reverting its framing
// contributions and restoring whatever twist it had consumed.
MixedDiagram blow_down(const MixedDiagram& d, int id, MoveTrace* trace = nullptr);

// s must be the next pending unit syllable; blows up a -sign(exp) circle
// around its two strands, consuming it.
MixedDiagram cancel_syllable(const MixedDiagram& d, const Syllable& s, MoveTrace* trace = nullptr);

// Blows up a -1 meridian around a +1-framed circle, driving it to 0.
MixedDiagram meridian_zero(const MixedDiagram& d, int id, StepTag tag = StepTag::meridian,
                           MoveTrace* trace = nullptr);

MixedDiagram normalize_unknotted(const MixedDiagram& d, MoveTrace* trace = nullptr);

// inverse of normalize_unknotted given its recorded move (trace unwinding)
MixedDiagram denormalize(const MixedDiagram& d, const NormalizeMove& move);

// ---- linking ----------------------------------------------------------

// surgery components in matrix row order: U first, then circles as stored
std::vector<int> surgery_ids(const MixedDiagram& d);

// algebraic linking number of two surgery components (0 for a == b)
long long linking(const MixedDiagram& d, int id_a, int id_b);

// how often the component runs along K: strand entries before normalization,
// knot entries after; the pipelines only emit +1 signs, so this signed sum
// equals the geometric count
long long knot_linking(const MixedDiagram& d, int id);

// symmetric matrix over surgery_ids(d): framings on the diagonal, linking
// numbers off it; K is not a row
IntMatrix linking_matrix(const MixedDiagram& d);

} // namespace platbook
