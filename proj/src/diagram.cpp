#include "platbook/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "platbook/errors.hpp"

namespace platbook {

void canonicalize(std::vector<Target>& targets) { std::sort(targets.begin(), targets.end()); }

const Circle* MixedDiagram::find(int id) const {
    for (const auto& c : circles)
        if (c.id == id) return &c;
    return nullptr;
}

Circle* MixedDiagram::find(int id) {
    for (auto& c : circles)
        if (c.id == id) return &c;
    return nullptr;
}

int MixedDiagram::next_id() const {
    int m = kSurgeryUId;
    for (const auto& c : circles) m = std::max(m, c.id);
    return m + 1;
}

namespace {

std::string target_desc(const Target& t) {
    std::string s = t.sign < 0 ? "-" : "";
    if (t.kind == Target::Kind::strand) return s + "s" + std::to_string(t.index);
    if (t.index == kKnotId) return s + "K";
    if (t.index == kSurgeryUId) return s + "U";
    return s + "c" + std::to_string(t.index);
}

std::string targets_desc(const std::vector<Target>& ts) {
    std::string s = "[";
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i) s += ",";
        s += target_desc(ts[i]);
    }
    return s + "]";
}

std::string syllable_desc(const Syllable& s) {
    return "a(" + std::to_string(s.lo) + "," + std::to_string(s.hi) + ")" +
           (s.exp == 1 ? "" : "^" + std::to_string(s.exp));
}

} // namespace

std::string describe_difference(const MixedDiagram& a, const MixedDiagram& b) {
    if (a == b) return "";
    std::ostringstream out;
    if (a.n != b.n) {
        out << "strand counts differ: 2n=" << 2 * a.n << " vs " << 2 * b.n;
        return out.str();
    }
    if (a.p != b.p) {
        out << "surgery coefficients differ: p=" << a.p << " vs " << b.p;
        return out.str();
    }
    if (a.normalized != b.normalized) {
        out << "one diagram is normalized, the other is not";
        return out.str();
    }
    if (a.pending_syllables != b.pending_syllables) {
        out << "pending words differ: " << a.pending_syllables.size() << " vs "
            << b.pending_syllables.size() << " syllables";
        for (std::size_t i = 0;
             i < std::min(a.pending_syllables.size(), b.pending_syllables.size()); ++i)
            if (!(a.pending_syllables[i] == b.pending_syllables[i])) {
                out << "; first mismatch at position " << i << ": "
                    << syllable_desc(a.pending_syllables[i]) << " vs "
                    << syllable_desc(b.pending_syllables[i]);
                break;
            }
        return out.str();
    }
    if (a.pending_clasps != b.pending_clasps) {
        out << "pending clasps differ";
        return out.str();
    }
    for (const auto& ca : a.circles) {
        const Circle* cb = b.find(ca.id);
        if (!cb) {
            out << "component " << ca.id << " exists only on the left";
            return out.str();
        }
        if (ca.framing != cb->framing) {
            out << "component " << ca.id << " framing " << ca.framing << " vs " << cb->framing;
            return out.str();
        }
        if (ca.targets != cb->targets) {
            out << "component " << ca.id << " targets " << targets_desc(ca.targets) << " vs "
                << targets_desc(cb->targets);
            return out.str();
        }
        if (ca.cancelled != cb->cancelled) {
            out << "component " << ca.id << " carries a different cancelled twist";
            return out.str();
        }
    }
    for (const auto& cb : b.circles)
        if (!a.find(cb.id)) {
            out << "component " << cb.id << " exists only on the right";
            return out.str();
        }
    out << "diagrams differ (component order)";
    return out.str();
}

void validate(const MixedDiagram& d) {
    if (d.n < 1) fail(errc::pipeline_invariant_violated, "diagram has n < 1");
    if (d.circles.empty() || d.circles.front().id != kSurgeryUId ||
        d.circles.front().kind != CompKind::surgery_u)
        fail(errc::pipeline_invariant_violated, "U must be the first component, with id 1");
    int prev = 0;
    for (const auto& c : d.circles) {
        if (c.id <= prev)
            fail(errc::pipeline_invariant_violated, "component ids must increase in creation order");
        prev = c.id;
        if (c.id != kSurgeryUId && c.kind != CompKind::circle)
            fail(errc::pipeline_invariant_violated, "only one surgery component is allowed");
        if (!std::is_sorted(c.targets.begin(), c.targets.end()))
            fail(errc::pipeline_invariant_violated,
                 "targets of component " + std::to_string(c.id) + " are not in canonical order");
        for (const auto& t : c.targets) {
            if (t.sign != 1 && t.sign != -1)
                fail(errc::pipeline_invariant_violated, "target sign must be +1 or -1");
            if (t.kind == Target::Kind::strand) {
                if (t.index < 1 || t.index > 2 * d.n)
                    fail(errc::unknown_target,
                         "strand " + std::to_string(t.index) + " out of range 1.." +
                             std::to_string(2 * d.n));
                if (d.normalized)
                    fail(errc::pipeline_invariant_violated,
                         "normalized diagram still has strand targets");
            } else {
                if (t.index == c.id)
                    fail(errc::pipeline_invariant_violated,
                         "component " + std::to_string(c.id) + " targets itself");
                if (t.index != kKnotId && !d.find(t.index))
                    fail(errc::unknown_target,
                         "component " + std::to_string(c.id) + " targets missing component " +
                             std::to_string(t.index));
                if (t.index > c.id)
                    fail(errc::pipeline_invariant_violated,
                         "component " + std::to_string(c.id) +
                             " nests around the later component " + std::to_string(t.index));
            }
        }
    }
    for (int s : d.pending_clasps)
        if (s < 2 || s > 2 * d.n - 1)
            fail(errc::pipeline_invariant_violated,
                 "pending clasp strand " + std::to_string(s) + " out of range");
    for (const auto& s : d.pending_syllables) {
        if (s.lo < 1 || s.hi > 2 * d.n || s.lo >= s.hi)
            fail(errc::strand_out_of_range, "pending syllable " + syllable_desc(s));
        if (s.exp != 1 && s.exp != -1)
            fail(errc::pipeline_invariant_violated, "pending syllables must have exponent +1 or -1");
    }
}

MixedDiagram initial_diagram(const PlatInput& input) {
    const int n = input.word.n;
    if (n < 1) fail(errc::strand_out_of_range, "need n >= 1");
    if (input.p < 0) fail(errc::malformed_syllable, "surgery coefficient must satisfy p >= 0");

    MixedDiagram d;
    d.n = n;
    d.p = input.p;

    Circle u;
    u.id = kSurgeryUId;
    u.kind = CompKind::surgery_u;
    u.framing = checked_neg(input.p);
    const UDecomposition dec = u_decomposition(n);
    for (int s : dec.encircled_strands()) u.targets.push_back(Target::strand(s));
    canonicalize(u.targets);
    d.circles.push_back(std::move(u));

    for (const auto& s : unit_expand(input.word)) {
        if (s.lo < 1 || s.hi > 2 * n || s.lo >= s.hi)
            fail(errc::strand_out_of_range, "syllable " + syllable_desc(s) + " with 2n=" +
                                                std::to_string(2 * n));
        d.pending_syllables.push_back(s);
    }
    for (int s : dec.clasp_strands) d.pending_clasps.push_back(s);
    return d;
}

MixedDiagram blow_up(const MixedDiagram& d, std::vector<Target> targets, int eps, StepTag tag,
                     Consume consume, MoveTrace* trace, std::optional<int> forced_id) {
    if (eps != 1 && eps != -1) fail(errc::wrong_framing, "blow-up framing must be +1 or -1");
    canonicalize(targets);
    for (const auto& t : targets) {
        if (t.sign != 1 && t.sign != -1)
            fail(errc::unknown_target, "target sign must be +1 or -1");
        if (t.kind == Target::Kind::strand) {
            if (t.index < 1 || t.index > 2 * d.n)
                fail(errc::unknown_target, "strand " + std::to_string(t.index) +
                                               " out of range 1.." + std::to_string(2 * d.n));
            if (d.normalized)
                fail(errc::unknown_target,
                     "strand targets no longer exist after normalization");
        } else if (t.index != kKnotId && !d.find(t.index)) {
            fail(errc::unknown_target, "no component with id " + std::to_string(t.index));
        }
    }

    const int id = forced_id.value_or(d.next_id());
    if (id < 2 || d.find(id))
        fail(errc::bad_trace, "blow-up id " + std::to_string(id) + " is not available");

    MixedDiagram out = d;

    Circle c;
    c.id = id;
    c.kind = CompKind::circle;
    c.framing = eps;
    c.targets = targets;

    switch (consume) {
    case Consume::none:
        break;
    case Consume::next_syllable: {
        if (out.pending_syllables.empty())
            fail(errc::no_pending_syllable, "no pending syllable to cancel");
        const Syllable f = out.pending_syllables.front();
        std::vector<Target> want = {Target::strand(f.lo), Target::strand(f.hi)};
        canonicalize(want);
        if (targets != want || eps != (f.exp > 0 ? -1 : 1))
            fail(errc::pipeline_invariant_violated,
                 "cancelling blow-up does not match the pending syllable " + syllable_desc(f));
        out.pending_syllables.pop_front();
        c.cancelled = CancelledTwist{CancelledTwist::Kind::syllable, f, 0};
        break;
    }
    case Consume::front_clasp: {
        if (out.pending_clasps.empty())
            fail(errc::pipeline_invariant_violated, "no pending clasp to cancel");
        const int s = out.pending_clasps.front();
        std::vector<Target> want = {Target::comp(kSurgeryUId), Target::strand(s)};
        canonicalize(want);
        if (targets != want || eps != 1)
            fail(errc::pipeline_invariant_violated,
                 "clasp blow-up must encircle U and strand " + std::to_string(s) +
                     " with framing +1");
        out.pending_clasps.pop_front();
        // cancelling the clasp retracts U off that strand
        auto& ut = out.u().targets;
        const auto it = std::find(ut.begin(), ut.end(), Target::strand(s));
        if (it == ut.end())
            fail(errc::pipeline_invariant_violated,
                 "U no longer passes strand " + std::to_string(s));
        ut.erase(it);
        c.cancelled = CancelledTwist{CancelledTwist::Kind::clasp, Syllable{}, s};
        break;
    }
    }

    for (auto& comp : out.circles) {
        long long l = 0;
        for (const auto& t : targets)
            if (t.kind == Target::Kind::component && t.index == comp.id)
                l = checked_add(l, t.sign);
        if (l != 0)
            comp.framing = checked_add(comp.framing, checked_mul(eps, checked_mul(l, l)));
    }

    out.circles.push_back(std::move(c));
    if (trace) trace->push_back(BlowUpMove{id, eps, std::move(targets), tag,
                                           out.circles.back().cancelled});
    return out;
}

MixedDiagram blow_down(const MixedDiagram& d, int id, MoveTrace* trace) {
    const Circle* c = d.find(id);
    if (!c || c->kind != CompKind::circle)
        fail(errc::unknown_target, "no blow-up circle with id " + std::to_string(id));
    if (c->framing != 1 && c->framing != -1)
        fail(errc::not_unit_framed, "circle " + std::to_string(id) + " has framing " +
                                        std::to_string(c->framing) + ", need +1 or -1");
    for (const auto& other : d.circles)
        if (other.id != id)
            for (const auto& t : other.targets)
                if (t.kind == Target::Kind::component && t.index == id)
                    fail(errc::orphaned_nesting,
                         "component " + std::to_string(other.id) +
                             " still nests around circle " + std::to_string(id));
    if (d.normalized && c->cancelled)
        fail(errc::pipeline_invariant_violated,
             "cannot restore a cancelled twist into a normalized diagram");

    MixedDiagram out = d;
    const Circle removed = *c;
    const long long eps = removed.framing;

    for (auto& comp : out.circles) {
        long long l = 0;
        for (const auto& t : removed.targets)
            if (t.kind == Target::Kind::component && t.index == comp.id)
                l = checked_add(l, t.sign);
        if (l != 0)
            comp.framing = checked_sub(comp.framing, checked_mul(eps, checked_mul(l, l)));
    }

    if (removed.cancelled) {
        if (removed.cancelled->kind == CancelledTwist::Kind::syllable) {
            out.pending_syllables.push_front(removed.cancelled->syllable);
        } else {
            const int s = removed.cancelled->clasp_strand;
            out.pending_clasps.push_front(s);
            out.u().targets.push_back(Target::strand(s));
            canonicalize(out.u().targets);
        }
    }

    std::erase_if(out.circles, [&](const Circle& x) { return x.id == id; });
    if (trace) trace->push_back(BlowDownMove{id});
    return out;
}

MixedDiagram cancel_syllable(const MixedDiagram& d, const Syllable& s, MoveTrace* trace) {
    if (s.exp != 1 && s.exp != -1)
        fail(errc::non_unit_exponent,
             "cancel_syllable needs exponent +1 or -1, got " + std::to_string(s.exp));
    if (d.pending_syllables.empty()) fail(errc::no_pending_syllable, "pending word is empty");
    if (!(d.pending_syllables.front() == s))
        fail(errc::no_pending_syllable,
             syllable_desc(s) + " is not the next pending syllable (" +
                 syllable_desc(d.pending_syllables.front()) + " is)");
    const int eps = s.exp > 0 ? -1 : 1;
    return blow_up(d, {Target::strand(s.lo), Target::strand(s.hi)}, eps, StepTag::cancel,
                   Consume::next_syllable, trace);
}

MixedDiagram meridian_zero(const MixedDiagram& d, int id, StepTag tag, MoveTrace* trace) {
    const Circle* c = d.find(id);
    if (!c) fail(errc::unknown_target, "no component with id " + std::to_string(id));
    if (c->framing != 1)
        fail(errc::wrong_framing, "meridian_zero needs framing +1, component " +
                                      std::to_string(id) + " has " +
                                      std::to_string(c->framing));
    return blow_up(d, {Target::comp(id)}, -1, tag, Consume::none, trace);
}

MixedDiagram normalize_unknotted(const MixedDiagram& d, MoveTrace* trace) {
    if (!d.pending_syllables.empty())
        fail(errc::pipeline_invariant_violated, "K's word still has pending syllables");
    if (!d.pending_clasps.empty())
        fail(errc::pipeline_invariant_violated, "U still has pending clasps");
    if (d.normalized)
        fail(errc::pipeline_invariant_violated, "diagram is already normalized");

    MixedDiagram out = d;
    NormalizeMove move;
    move.u_before = out.u().targets;
    // the freed U slides off the trivial plat and links it once
    out.u().targets = {Target::comp(kKnotId)};
    for (auto& c : out.circles) {
        if (c.kind != CompKind::circle) continue;
        const bool has_strand =
            std::any_of(c.targets.begin(), c.targets.end(),
                        [](const Target& t) { return t.kind == Target::Kind::strand; });
        if (!has_strand) continue;
        move.before.emplace_back(c.id, c.targets);
        for (auto& t : c.targets)
            if (t.kind == Target::Kind::strand) t = Target::comp(kKnotId, t.sign);
        canonicalize(c.targets);
    }
    out.normalized = true;
    if (trace) trace->push_back(std::move(move));
    return out;
}

MixedDiagram denormalize(const MixedDiagram& d, const NormalizeMove& move) {
    if (!d.normalized) fail(errc::bad_trace, "diagram is not normalized");
    MixedDiagram out = d;
    out.u().targets = move.u_before;
    for (const auto& [id, lst] : move.before) {
        Circle* c = out.find(id);
        if (!c)
            fail(errc::bad_trace,
                 "normalization record names missing component " + std::to_string(id));
        c->targets = lst;
    }
    out.normalized = false;
    return out;
}

std::vector<int> surgery_ids(const MixedDiagram& d) {
    std::vector<int> ids;
    ids.reserve(d.circles.size());
    for (const auto& c : d.circles) ids.push_back(c.id);
    return ids;
}

long long linking(const MixedDiagram& d, int id_a, int id_b) {
    if (id_a == id_b) return 0;
    const Circle* ca = d.find(id_a);
    const Circle* cb = d.find(id_b);
    if (!ca || !cb) fail(errc::unknown_target, "linking of a missing component");
    long long l = 0;
    for (const auto& t : ca->targets)
        if (t.kind == Target::Kind::component && t.index == id_b) l = checked_add(l, t.sign);
    for (const auto& t : cb->targets)
        if (t.kind == Target::Kind::component && t.index == id_a) l = checked_add(l, t.sign);
    return l;
}

long long knot_linking(const MixedDiagram& d, int id) {
    const Circle* c = d.find(id);
    if (!c) fail(errc::unknown_target, "no component with id " + std::to_string(id));
    long long l = 0;
    for (const auto& t : c->targets)
        if (t.kind == Target::Kind::strand ||
            (t.kind == Target::Kind::component && t.index == kKnotId))
            l = checked_add(l, t.sign);
    return l;
}

IntMatrix linking_matrix(const MixedDiagram& d) {
    const std::vector<int> ids = surgery_ids(d);
    const int k = static_cast<int>(ids.size());
    IntMatrix m(k, k);
    for (int i = 0; i < k; ++i) {
        m.at(i, i) = d.find(ids[i])->framing;
        for (int j = i + 1; j < k; ++j) m.at(i, j) = m.at(j, i) = linking(d, ids[i], ids[j]);
    }
    return m;
}

} // namespace platbook
