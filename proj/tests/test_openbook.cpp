#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "platbook/openbook.hpp"
#include "platbook/pipeline.hpp"

using namespace platbook;

namespace {

PlatInput make_input(int n, long long p, const char* word = "") {
    PlatInput in;
    in.word.n = n;
    in.word.syllables = parse_syllables(word, n);
    in.p = p;
    return in;
}

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t at = haystack.find(needle); at != std::string::npos;
         at = haystack.find(needle, at + needle.size()))
        ++count;
    return count;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("golden book for n=2 p=4 a(1,2)") {
    const PipelineResult r = compile(make_input(2, 4, "a(1,2)"));
    const OpenBook ob = extract(r.diagram, r.trace);

    CHECK(ob.page.genus == 0);
    CHECK(ob.page.punctures == std::vector<int>{2, 3, 6});
    REQUIRE(ob.monodromy.size() == 5);
    CHECK(ob.monodromy[0].circle_id == kSurgeryUId);
    CHECK(ob.monodromy[0].curve == std::vector<int>{2, 3, 6});
    CHECK(ob.monodromy[1].curve == std::vector<int>{2});
    CHECK(ob.monodromy[2].curve == std::vector<int>{3});
    CHECK(ob.monodromy[3].curve == std::vector<int>{6});
    CHECK(ob.monodromy[4].curve.empty());
    CHECK(ob.knot_encloses == std::vector<int>{2, 3});
    CHECK(euler_characteristic(ob) == -2);

    CHECK(to_json(ob) ==
          "{\"page\":{\"genus\":0,\"punctures\":[2,3,6]},"
          "\"monodromy\":[{\"curve\":[2,3,6],\"sign\":1},{\"curve\":[2],\"sign\":1},"
          "{\"curve\":[3],\"sign\":1},{\"curve\":[6],\"sign\":1},{\"curve\":[],\"sign\":1}],"
          "\"knot\":{\"encloses\":[2,3]},\"manifold\":{\"p\":4}}");
}

TEST_CASE("smallest lens endpoint has an empty page") {
    const PipelineResult r = compile(make_input(1, 1));
    const OpenBook ob = extract(r.diagram, r.trace);
    CHECK(ob.page.punctures.empty());
    REQUIRE(ob.monodromy.size() == 1); // only U's twist, around nothing
    CHECK(ob.monodromy[0].curve.empty());
    CHECK(euler_characteristic(ob) == 1);
    CHECK(to_json(ob) ==
          "{\"page\":{\"genus\":0,\"punctures\":[]},"
          "\"monodromy\":[{\"curve\":[],\"sign\":1}],"
          "\"knot\":{\"encloses\":[]},\"manifold\":{\"p\":1}}");
}

TEST_CASE("preset: 4-plat in the p=4 lens space") {
    const PlatInput in = parse_input(slurp(std::string(PLATBOOK_DATA_DIR) + "/lens4_plat4.txt"));
    CHECK(in == parse_input("n=2 p=4 a(1,3)^-2 a(2,4)^-2"));
    const PipelineResult r = compile(in);
    const OpenBook ob = extract(r.diagram, r.trace);
    CHECK(ob.page.punctures == std::vector<int>{2, 3, 6, 8, 10, 12, 14});
    CHECK(ob.monodromy.size() == 8);
    CHECK(ob.knot_encloses == std::vector<int>{2, 3, 8, 10, 12, 14});
    CHECK(euler_characteristic(ob) == -6);
}

TEST_CASE("preset: 6-plat in the product manifold") {
    const PlatInput in = parse_input(slurp(std::string(PLATBOOK_DATA_DIR) + "/s1xs2_plat6.txt"));
    CHECK(in == parse_input("n=3 p=0 a(1,4)^-2 a(3,6)^-2"));
    const PipelineResult r = compile(in);
    const OpenBook ob = extract(r.diagram, r.trace);
    // U is 0-framed here, so it is the first binding
    CHECK(ob.page.punctures == std::vector<int>{1, 2, 5, 8, 11, 14, 16, 18, 20});
    CHECK(ob.monodromy.size() == 12);
    CHECK(ob.knot_encloses == ob.page.punctures);
    CHECK(euler_characteristic(ob) == -8);
}

TEST_CASE("puncture counts follow the stage formulas") {
    const struct {
        int n;
        long long p;
        const char* word;
        int negatives;
    } cases[] = {
        {1, 1, "", 0},           {1, 3, "a(1,2)^-2", 2},  {2, 4, "a(1,2)", 0},
        {2, 7, "a(1,4)^-1", 1},  {3, 9, "a(2,5)^2 a(1,6)^-3", 3},
        {4, 12, "a(3,8)^-1 a(1,2)^-1", 2},
    };
    for (const auto& c : cases) {
        CAPTURE(c.n);
        CAPTURE(c.p);
        CAPTURE(c.word);
        const PipelineResult r = compile(make_input(c.n, c.p, c.word));
        const OpenBook ob = extract(r.diagram, r.trace);
        const int expected = static_cast<int>((2 * c.n - 2) + (c.p - 2 * c.n + 1)) + c.negatives;
        CHECK(static_cast<int>(ob.page.punctures.size()) == expected);
        CHECK(euler_characteristic(ob) == 1 - expected);
    }
    const struct {
        int n;
        const char* word;
        int negatives;
    } product_cases[] = {
        {1, "", 0}, {2, "a(1,3)^-2", 2}, {3, "a(1,4)^-2 a(3,6)^-2", 4}, {2, "a(2,4)^3", 0},
    };
    for (const auto& c : product_cases) {
        CAPTURE(c.n);
        CAPTURE(c.word);
        const PipelineResult r = compile(make_input(c.n, 0, c.word));
        const OpenBook ob = extract(r.diagram, r.trace);
        const int expected = 1 + (2 * c.n - 2) + c.negatives;
        CHECK(static_cast<int>(ob.page.punctures.size()) == expected);
    }
}

TEST_CASE("extract rejects non-endpoints") {
    const PlatInput in = make_input(2, 4, "a(1,2)");
    CHECK(fails_with(errc::not_normalized, [&] {
        extract(initial_diagram(in), MoveTrace{});
    }));

    // normalized but with a framing outside {0,-1}
    PipelineResult r = compile(in);
    r.diagram.find(4)->framing = 2;
    CHECK(fails_with(errc::not_normalized, [&] { extract(r.diagram, r.trace); }));
}

TEST_CASE("extract rejects twists that cannot lie on the page") {
    // hand-built normalized endpoint: a -1 circle nests around the -1-framed
    // U, which bounds no puncture
    MixedDiagram d = initial_diagram(make_input(1, 1));
    d.u().targets = {Target::comp(kKnotId)};
    d.normalized = true;
    Circle c;
    c.id = 2;
    c.framing = -1;
    c.targets = {Target::comp(kSurgeryUId)};
    d.circles.push_back(c);
    validate(d);
    CHECK(fails_with(errc::unplaceable_circle, [&] { extract(d, MoveTrace{}); }));
}

TEST_CASE("svg rendering is deterministic with one closed curve per twist") {
    const PipelineResult r = compile(make_input(2, 5, "a(1,3)^-2 a(2,4)"));
    const OpenBook ob = extract(r.diagram, r.trace);
    const std::string svg = render_svg(ob, r.trace);
    CHECK(svg == render_svg(ob, r.trace));
    CHECK(svg.rfind("<svg ", 0) == 0);
    CHECK(count_occurrences(svg, "class=\"twist\"") == ob.monodromy.size());
    CHECK(count_occurrences(svg, "class=\"puncture\"") == ob.page.punctures.size());
    CHECK(count_occurrences(svg, "class=\"knot\"") == 1);
    // stage tags annotate the twists
    CHECK(svg.find("clasp-meridian") != std::string::npos);

    // empty page still renders
    const PipelineResult tiny = compile(make_input(1, 1));
    const std::string tiny_svg = render_svg(extract(tiny.diagram, tiny.trace), tiny.trace);
    CHECK(count_occurrences(tiny_svg, "class=\"twist\"") == 1);
    CHECK(count_occurrences(tiny_svg, "class=\"knot\"") == 1);
}
