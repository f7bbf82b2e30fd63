#include "platbook/trace.hpp"

#include <charconv>
#include <sstream>

#include "platbook/errors.hpp"

namespace platbook {

std::string step_tag_name(StepTag t) {
    switch (t) {
    case StepTag::clasp: return "clasp";
    case StepTag::clasp_meridian: return "clasp-meridian";
    case StepTag::frame_bump: return "frame-bump";
    case StepTag::ladder: return "ladder";
    case StepTag::ladder_meridian: return "ladder-meridian";
    case StepTag::cancel: return "cancel";
    case StepTag::cancel_meridian: return "cancel-meridian";
    case StepTag::meridian: return "meridian";
    case StepTag::manual: return "manual";
    }
    return "manual";
}

StepTag parse_step_tag(std::string_view s) {
    for (StepTag t : {StepTag::clasp, StepTag::clasp_meridian, StepTag::frame_bump,
                      StepTag::ladder, StepTag::ladder_meridian, StepTag::cancel,
                      StepTag::cancel_meridian, StepTag::meridian, StepTag::manual})
        if (s == step_tag_name(t)) return t;
    fail(errc::bad_trace, "unknown step tag '" + std::string(s) + "'");
}

std::string target_to_string(const Target& t) {
    std::string s = t.sign < 0 ? "-" : "";
    if (t.kind == Target::Kind::strand) return s + "s" + std::to_string(t.index);
    if (t.index == kKnotId) return s + "K";
    if (t.index == kSurgeryUId) return s + "U";
    return s + "c" + std::to_string(t.index);
}

namespace {

int parse_trace_int(std::string_view s, const char* what) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        fail(errc::bad_trace, std::string("cannot read ") + what + " from '" + std::string(s) + "'");
    return v;
}

} // namespace

Target parse_target(std::string_view s) {
    int sign = 1;
    if (!s.empty() && s.front() == '-') {
        sign = -1;
        s.remove_prefix(1);
    }
    if (s == "K") return Target::comp(kKnotId, sign);
    if (s == "U") return Target::comp(kSurgeryUId, sign);
    if (s.size() >= 2 && s.front() == 'c')
        return Target::comp(parse_trace_int(s.substr(1), "component id"), sign);
    if (s.size() >= 2 && s.front() == 's')
        return Target::strand(parse_trace_int(s.substr(1), "strand"), sign);
    fail(errc::bad_trace, "unknown target '" + std::string(s) + "'");
}

std::string serialize_trace(const MoveTrace& t) {
    std::string out;
    for (const auto& move : t) {
        if (const auto* bu = std::get_if<BlowUpMove>(&move)) {
            out += "BU " + std::to_string(bu->id) + " e=" + (bu->eps > 0 ? "+1" : "-1") +
                   " targets=[";
            for (std::size_t i = 0; i < bu->targets.size(); ++i) {
                if (i) out += ",";
                out += target_to_string(bu->targets[i]);
            }
            out += "] step=" + step_tag_name(bu->step) + "\n";
        } else if (const auto* bd = std::get_if<BlowDownMove>(&move)) {
            out += "BD " + std::to_string(bd->id) + "\n";
        } else {
            out += "NM\n";
        }
    }
    return out;
}

MoveTrace parse_trace(std::string_view text) {
    MoveTrace out;
    std::istringstream lines{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string op;
        if (!(ss >> op)) continue; // blank line
        const std::string where = " on line " + std::to_string(lineno);
        if (op == "BU") {
            BlowUpMove m;
            std::string id_tok, e_tok, targets_tok, step_tok, extra;
            if (!(ss >> id_tok >> e_tok >> targets_tok >> step_tok) || (ss >> extra))
                fail(errc::bad_trace, "malformed BU record" + where);
            m.id = parse_trace_int(id_tok, "id");
            if (e_tok == "e=+1")
                m.eps = 1;
            else if (e_tok == "e=-1")
                m.eps = -1;
            else
                fail(errc::bad_trace, "malformed framing '" + e_tok + "'" + where);
            if (targets_tok.size() < std::string("targets=[]").size() ||
                targets_tok.rfind("targets=[", 0) != 0 || targets_tok.back() != ']')
                fail(errc::bad_trace, "malformed target list '" + targets_tok + "'" + where);
            std::string_view body{targets_tok};
            body.remove_prefix(std::string("targets=[").size());
            body.remove_suffix(1);
            while (!body.empty()) {
                const std::size_t comma = body.find(',');
                const std::string_view item = body.substr(0, comma);
                if (item.empty()) fail(errc::bad_trace, "empty target" + where);
                m.targets.push_back(parse_target(item));
                body = comma == std::string_view::npos ? std::string_view{}
                                                       : body.substr(comma + 1);
            }
            if (step_tok.rfind("step=", 0) != 0)
                fail(errc::bad_trace, "malformed step '" + step_tok + "'" + where);
            m.step = parse_step_tag(std::string_view(step_tok).substr(5));
            out.push_back(std::move(m));
        } else if (op == "BD") {
            std::string id_tok, extra;
            if (!(ss >> id_tok) || (ss >> extra))
                fail(errc::bad_trace, "malformed BD record" + where);
            out.push_back(BlowDownMove{parse_trace_int(id_tok, "id")});
        } else if (op == "NM") {
            std::string extra;
            if (ss >> extra) fail(errc::bad_trace, "malformed NM record" + where);
            out.push_back(NormalizeMove{});
        } else {
            fail(errc::bad_trace, "unknown move '" + op + "'" + where);
        }
    }
    return out;
}

MixedDiagram replay(const MixedDiagram& d0, const MoveTrace& t, MoveTrace* regenerated) {
    MixedDiagram d = d0;
    for (const auto& move : t) {
        if (const auto* bu = std::get_if<BlowUpMove>(&move)) {
            Consume consume = Consume::none;
            if (bu->step == StepTag::clasp) consume = Consume::front_clasp;
            if (bu->step == StepTag::cancel) consume = Consume::next_syllable;
            MoveTrace local;
            d = blow_up(d, bu->targets, bu->eps, bu->step, consume, &local, bu->id);
            const auto& applied = std::get<BlowUpMove>(local.back());
            if (bu->cancelled && applied.cancelled != bu->cancelled)
                fail(errc::bad_trace,
                     "replayed blow-up " + std::to_string(bu->id) +
                         " cancelled a different twist than the recorded move");
            if (regenerated) regenerated->push_back(applied);
        } else if (const auto* bd = std::get_if<BlowDownMove>(&move)) {
            d = blow_down(d, bd->id, regenerated);
        } else {
            d = normalize_unknotted(d, regenerated);
        }
    }
    return d;
}

} // namespace platbook
