#include "platbook/openbook.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "json.hpp"
#include "platbook/errors.hpp"
#include "platbook/trace.hpp"

namespace platbook {

OpenBook extract(const MixedDiagram& d, const MoveTrace&) {
    if (!d.normalized || !d.pending_syllables.empty() || !d.pending_clasps.empty())
        fail(errc::not_normalized, "diagram is not a normalized pipeline endpoint");
    for (const auto& c : d.circles)
        if (c.framing != 0 && c.framing != -1)
            fail(errc::not_normalized, "component " + std::to_string(c.id) + " has framing " +
                                           std::to_string(c.framing) + ", endpoint allows 0 or -1");

    OpenBook ob;
    ob.p = d.p;

    // 0-framed components bound the punctures; U's id (1) sorts first
    for (const auto& c : d.circles)
        if (c.framing == 0) ob.page.punctures.push_back(c.id);
    const auto is_binding = [&](int id) {
        return std::find(ob.page.punctures.begin(), ob.page.punctures.end(), id) !=
               ob.page.punctures.end();
    };

    for (const auto& c : d.circles) {
        if (c.framing != -1) continue;
        // the twist circle must lie on the page: everything it encircles has
        // to be a binding (or the knot, which it just runs along)
        for (const auto& t : c.targets) {
            if (t.kind == Target::Kind::strand)
                fail(errc::unplaceable_circle, "component " + std::to_string(c.id) +
                                                   " still encircles a strand");
            if (t.index != kKnotId && !is_binding(t.index))
                fail(errc::unplaceable_circle,
                     "twist circle " + std::to_string(c.id) + " encircles component " +
                         std::to_string(t.index) + ", which is not a binding");
        }
        TwistCurve tw;
        tw.circle_id = c.id;
        tw.sign = 1;
        for (const int b : ob.page.punctures)
            if (linking(d, c.id, b) != 0) tw.curve.push_back(b);
        ob.monodromy.push_back(std::move(tw));
    }

    for (const int b : ob.page.punctures)
        if (knot_linking(d, b) != 0) ob.knot_encloses.push_back(b);
    return ob;
}

int euler_characteristic(const OpenBook& b) {
    return 1 - static_cast<int>(b.page.punctures.size());
}

std::string to_json(const OpenBook& b) {
    nlohmann::ordered_json j;
    j["page"]["genus"] = b.page.genus;
    j["page"]["punctures"] = b.page.punctures;
    auto twists = nlohmann::ordered_json::array();
    for (const auto& t : b.monodromy) {
        nlohmann::ordered_json tj;
        tj["curve"] = t.curve;
        tj["sign"] = t.sign;
        twists.push_back(std::move(tj));
    }
    j["monodromy"] = std::move(twists);
    j["knot"]["encloses"] = b.knot_encloses;
    j["manifold"]["p"] = b.p;
    return j.dump();
}

namespace {

std::string comp_label(int id) {
    if (id == kSurgeryUId) return "U";
    return "c" + std::to_string(id);
}

} // namespace

std::string render_svg(const OpenBook& b, const MoveTrace& stages) {
    // every coordinate below is integer arithmetic on fixed constants, so the
    // output is byte-for-byte reproducible
    std::map<int, int> pos; // binding id -> slot on the midline
    for (std::size_t i = 0; i < b.page.punctures.size(); ++i)
        pos[b.page.punctures[i]] = static_cast<int>(i);
    std::map<int, StepTag> stage_of;
    for (const auto& mv : stages)
        if (const auto* bu = std::get_if<BlowUpMove>(&mv)) stage_of[bu->id] = bu->step;

    const int k = static_cast<int>(b.page.punctures.size());
    const int m = static_cast<int>(b.monodromy.size());
    const int x0 = 80, dx = 70, mid_y = 150;
    const int right_x = x0 + dx * std::max(k - 1, 0) + 100;
    int free_twists = 0;
    for (const auto& t : b.monodromy)
        if (t.curve.empty()) ++free_twists;
    const int width = right_x + 130;
    const int height =
        std::max(mid_y + 46 + 6 * m + 30, mid_y - 30 + 26 * std::max(free_twists - 1, 0) + 50);

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
    s += "<style>.page{fill:#fffdf5;stroke:#999;}"
         ".puncture{fill:#fff;stroke:#333;stroke-width:2;}"
         ".twist{fill:none;stroke:#2166ac;stroke-width:2;}"
         ".knot{fill:none;stroke:#b2182b;stroke-width:3;}"
         ".label{font:14px monospace;fill:#333;}</style>\n";
    s += "<rect class=\"page\" x=\"5\" y=\"5\" width=\"" + std::to_string(width - 10) +
         "\" height=\"" + std::to_string(height - 10) + "\" rx=\"28\"/>\n";

    const auto span_ellipse = [&](const char* cls, const std::vector<int>& ids, int grow,
                                  const std::string& title) {
        int lo = k, hi = -1;
        for (const int id : ids) {
            lo = std::min(lo, pos.at(id));
            hi = std::max(hi, pos.at(id));
        }
        const int cx = x0 + (lo + hi) * dx / 2;
        const int rx = (hi - lo) * dx / 2 + 24 + 3 * grow;
        const int ry = 40 + 6 * grow;
        s += "<ellipse class=\"" + std::string(cls) + "\" cx=\"" + std::to_string(cx) +
             "\" cy=\"" + std::to_string(mid_y) + "\" rx=\"" + std::to_string(rx) + "\" ry=\"" +
             std::to_string(ry) + "\"><title>" + title + "</title></ellipse>\n";
    };

    int free_slot = 0;
    for (int j = 0; j < m; ++j) {
        const TwistCurve& t = b.monodromy[j];
        std::string title = comp_label(t.circle_id);
        if (const auto it = stage_of.find(t.circle_id); it != stage_of.end())
            title += " " + step_tag_name(it->second);
        if (t.curve.empty()) {
            const int cy = mid_y - 30 + 26 * free_slot++;
            s += "<circle class=\"twist\" cx=\"" + std::to_string(right_x) + "\" cy=\"" +
                 std::to_string(cy) + "\" r=\"12\"><title>" + title + "</title></circle>\n";
        } else {
            span_ellipse("twist", t.curve, j, title);
        }
    }

    if (b.knot_encloses.empty()) {
        s += "<circle class=\"knot\" cx=\"34\" cy=\"" + std::to_string(mid_y) +
             "\" r=\"12\"><title>K</title></circle>\n";
    } else {
        span_ellipse("knot", b.knot_encloses, m, "K");
    }

    for (int i = 0; i < k; ++i) {
        const int cx = x0 + i * dx;
        s += "<circle class=\"puncture\" cx=\"" + std::to_string(cx) + "\" cy=\"" +
             std::to_string(mid_y) + "\" r=\"9\"/>\n";
        s += "<text class=\"label\" x=\"" + std::to_string(cx - 8) + "\" y=\"" +
             std::to_string(mid_y + 28) + "\">" + comp_label(b.page.punctures[i]) + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

} // namespace platbook
