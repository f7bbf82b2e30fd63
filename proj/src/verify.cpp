#include "platbook/verify.hpp"

#include <algorithm>
#include <sstream>

#include "platbook/errors.hpp"
#include "platbook/trace.hpp"

namespace platbook {

void Report::add(std::string name, bool okay, std::string detail) {
    checks.push_back(CheckResult{std::move(name), okay, std::move(detail)});
}

bool Report::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

const CheckResult* Report::first_failure() const {
    for (const auto& c : checks)
        if (!c.ok) return &c;
    return nullptr;
}

std::string Report::to_string() const {
    std::string s;
    for (const auto& c : checks) {
        s += c.ok ? "ok   " : "FAIL ";
        s += c.name;
        if (!c.detail.empty()) s += ": " + c.detail;
        s += "\n";
    }
    return s;
}

std::vector<long long> h1(const MixedDiagram& d) {
    const SnfResult s = smith_normal_form(linking_matrix(d));
    std::vector<long long> out;
    for (const long long f : s.factors())
        if (f != 1) out.push_back(f);
    return out;
}

std::vector<long long> expected_h1(long long p) {
    if (p == 0) return {0};
    if (p == 1) return {};
    return {p};
}

namespace {

std::string fmt_factors(const std::vector<long long>& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i]);
    }
    return s + "]";
}

std::string move_desc(const Move& mv, std::size_t idx) {
    std::ostringstream out;
    out << "move #" << idx << " (";
    if (const auto* bu = std::get_if<BlowUpMove>(&mv))
        out << "BU " << bu->id << " " << step_tag_name(bu->step);
    else if (const auto* bd = std::get_if<BlowDownMove>(&mv))
        out << "BD " << bd->id;
    else
        out << "NM";
    out << ")";
    return out.str();
}

} // namespace

Report round_trip(const MixedDiagram& initial, const MoveTrace& t, const MixedDiagram& final_d) {
    Report rep;

    MoveTrace regenerated;
    bool forward_ok = false;
    std::string forward_detail;
    try {
        const MixedDiagram replayed = replay(initial, t, &regenerated);
        forward_detail = describe_difference(replayed, final_d);
        forward_ok = forward_detail.empty();
    } catch (const Error& e) {
        forward_detail = e.what();
    }
    rep.add("replay-reaches-endpoint", forward_ok, forward_detail);

    MixedDiagram d = final_d;
    bool unwind_ok = true;
    std::string unwind_detail;
    for (std::size_t k = t.size(); k-- > 0 && unwind_ok;) {
        const Move& mv = t[k];
        try {
            if (const auto* bu = std::get_if<BlowUpMove>(&mv)) {
                const Circle* c = d.find(bu->id);
                if (!c) {
                    unwind_ok = false;
                    unwind_detail = move_desc(mv, k) + ": circle is absent from the diagram";
                    break;
                }
                if (c->framing != bu->eps) {
                    unwind_ok = false;
                    unwind_detail = move_desc(mv, k) + ": circle framing " +
                                    std::to_string(c->framing) +
                                    " does not match the recorded blow-up framing " +
                                    std::to_string(bu->eps);
                    break;
                }
                std::vector<Target> want = bu->targets;
                canonicalize(want);
                if (c->targets != want) {
                    unwind_ok = false;
                    unwind_detail = move_desc(mv, k) + ": circle targets differ from the record";
                    break;
                }
                if (bu->cancelled && c->cancelled != bu->cancelled) {
                    unwind_ok = false;
                    unwind_detail =
                        move_desc(mv, k) + ": cancelled twist differs from the record";
                    break;
                }
                d = blow_down(d, bu->id, nullptr);
            } else if (std::get_if<BlowDownMove>(&mv)) {
                unwind_ok = false;
                unwind_detail = move_desc(mv, k) + ": traces with blow-downs cannot be unwound";
                break;
            } else {
                const auto* nm = std::get_if<NormalizeMove>(&mv);
                if (!d.normalized) {
                    unwind_ok = false;
                    unwind_detail = move_desc(mv, k) + ": diagram is not normalized";
                    break;
                }
                // a parsed NM record carries no payload; borrow it from the
                // forward replay, which captured the same relabelling
                const NormalizeMove* payload = nm;
                if (nm->u_before.empty()) {
                    if (forward_ok && k < regenerated.size())
                        payload = std::get_if<NormalizeMove>(&regenerated[k]);
                    else
                        payload = nullptr;
                    if (!payload) {
                        unwind_ok = false;
                        unwind_detail =
                            move_desc(mv, k) + ": no normalization payload available";
                        break;
                    }
                }
                d = denormalize(d, *payload);
            }
        } catch (const Error& e) {
            unwind_ok = false;
            unwind_detail = move_desc(mv, k) + ": " + e.what();
        }
    }
    rep.add("unwind-applies", unwind_ok, unwind_detail);

    const std::string diff = unwind_ok ? describe_difference(d, initial)
                                       : "skipped: unwind diverged";
    rep.add("unwind-restores-initial", unwind_ok && diff.empty(), diff);
    return rep;
}

Report audit(const OpenBook& ob, const MixedDiagram& d) {
    Report rep;

    bool positive = true;
    for (const auto& t : ob.monodromy)
        if (t.sign != 1) positive = false;
    rep.add("positive-twists", positive,
            positive ? "" : "a twist with sign != +1 slipped through");

    rep.add("planar-page", ob.page.genus == 0,
            ob.page.genus == 0 ? "" : "genus " + std::to_string(ob.page.genus));

    std::vector<int> zero_framed, neg_framed;
    for (const auto& c : d.circles) {
        if (c.framing == 0) zero_framed.push_back(c.id);
        if (c.framing == -1) neg_framed.push_back(c.id);
    }
    const bool bindings_match = ob.page.punctures == zero_framed;
    rep.add("binding-count", bindings_match,
            bindings_match ? ""
                           : "punctures " + std::to_string(ob.page.punctures.size()) +
                                 " vs 0-framed components " + std::to_string(zero_framed.size()));

    std::vector<int> twist_ids;
    for (const auto& t : ob.monodromy) twist_ids.push_back(t.circle_id);
    std::sort(twist_ids.begin(), twist_ids.end());
    const bool bijection = twist_ids == neg_framed;
    rep.add("twist-bijection", bijection,
            bijection ? ""
                      : std::to_string(twist_ids.size()) + " twists vs " +
                            std::to_string(neg_framed.size()) + " -1-framed components");
    return rep;
}

Report verify_endpoint(const PlatInput& input, const MixedDiagram& endpoint, const MoveTrace& t) {
    Report rep;

    const long long want_u = input.p == 0 ? 0 : -1;
    bool framings_ok = endpoint.normalized && endpoint.pending_syllables.empty() &&
                       endpoint.pending_clasps.empty() && endpoint.u().framing == want_u;
    for (const auto& c : endpoint.circles)
        if (c.kind == CompKind::circle && c.framing != 0 && c.framing != -1) framings_ok = false;
    rep.add("endpoint-framings", framings_ok,
            framings_ok ? "" : "endpoint is not in the 0/-1 normal form");

    const std::vector<long long> got = h1(endpoint);
    const std::vector<long long> want = expected_h1(input.p);
    rep.add("h1-matches-manifold", got == want,
            got == want ? "" : fmt_factors(got) + " vs expected " + fmt_factors(want));

    const IntMatrix m = linking_matrix(endpoint);
    bool cert = false;
    std::string cert_detail;
    try {
        cert = certificate_ok(m, smith_normal_form(m));
    } catch (const Error& e) {
        cert_detail = e.what();
    }
    rep.add("snf-certificate", cert, cert_detail);

    const Report rt = round_trip(initial_diagram(input), t, endpoint);
    std::string rt_detail;
    if (const CheckResult* f = rt.first_failure()) rt_detail = f->name + ": " + f->detail;
    rep.add("round-trip", rt.ok(), rt_detail);

    try {
        const OpenBook ob = extract(endpoint, t);
        const Report au = audit(ob, endpoint);
        std::string au_detail;
        if (const CheckResult* f = au.first_failure()) au_detail = f->name + ": " + f->detail;
        rep.add("openbook-audit", au.ok(), au_detail);
    } catch (const Error& e) {
        rep.add("openbook-audit", false, e.what());
    }
    return rep;
}

} // namespace platbook
