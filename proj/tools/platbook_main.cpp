// Command-line front end: compiles a braided-plat input into a planar open
// book, with emitters for the JSON, SVG, and move-trace artifacts, a replay
// verifier for saved traces, and a randomized self-test sweep.
//
// Exit codes: 0 success, 2 when the lens hypothesis p > 2n-2 fails, 1 for
// everything else.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "platbook/braid.hpp"
#include "platbook/corpus.hpp"
#include "platbook/errors.hpp"
#include "platbook/openbook.hpp"
#include "platbook/pipeline.hpp"
#include "platbook/trace.hpp"
#include "platbook/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compile a 2n-plat braid word with surgery coefficient p into a planar open book"};

    int n = 0;
    long long p = -1;
    std::string word, input_path, trace_path, emit_json, emit_svg, emit_trace;
    bool verify_only = false;
    std::uint64_t seed = 1;
    std::size_t fuzz = 0;

    app.add_option("--n", n, "half the strand count (used with --word)");
    app.add_option("--p", p, "surgery coefficient: U is framed -p (used with --word)");
    app.add_option("--word", word, "pure braid word, e.g. \"a(1,2) a(2,3)^-1\"");
    app.add_option("--input", input_path, "input file: 'n=<int> p=<int>' followed by syllables");
    app.add_option("--emit-json", emit_json, "also write the open-book JSON to this file");
    app.add_option("--emit-svg", emit_svg, "write the schematic page/monodromy SVG here");
    app.add_option("--emit-trace", emit_trace, "write the move trace here");
    app.add_flag("--verify-only", verify_only, "replay --trace against the input and verify");
    app.add_option("--trace", trace_path, "saved move trace (with --verify-only)");
    app.add_option("--seed", seed, "seed for --fuzz");
    app.add_option("--fuzz", fuzz, "compile and verify this many random inputs, then exit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (fuzz > 0) {
            const platbook::CorpusSummary summary =
                platbook::run_corpus(seed, fuzz, platbook::Execution::parallel);
            for (const auto& o : summary.outcomes)
                if (!o.ok) std::cout << "case " << o.index << " failed: " << o.failure << "\n";
            std::cout << summary.cases << " cases, " << summary.failures
                      << " failures (seed " << seed << ")\n";
            return summary.failures == 0 ? 0 : 1;
        }

        platbook::PlatInput input;
        if (!input_path.empty()) {
            input = platbook::parse_input(read_file(input_path));
        } else if (!word.empty() || n > 0) {
            if (n < 1 || p < 0) {
                std::cerr << "error: --word needs --n >= 1 and --p >= 0\n";
                return 1;
            }
            input.word.n = n;
            input.word.syllables = platbook::parse_syllables(word, n);
            input.p = p;
        } else {
            std::cerr << app.help();
            return 1;
        }

        if (verify_only) {
            if (trace_path.empty()) {
                std::cerr << "error: --verify-only needs --trace\n";
                return 1;
            }
            const platbook::MoveTrace trace = platbook::parse_trace(read_file(trace_path));
            const platbook::MixedDiagram endpoint =
                platbook::replay(platbook::initial_diagram(input), trace);
            const platbook::Report report = platbook::verify_endpoint(input, endpoint, trace);
            std::cout << report.to_string();
            return report.ok() ? 0 : 1;
        }

        const platbook::PipelineResult result = platbook::compile(input);
        const platbook::Report report = platbook::verify_endpoint(input, result.diagram,
                                                                  result.trace);
        if (!report.ok()) {
            std::cerr << report.to_string();
            return 1;
        }
        const platbook::OpenBook book = platbook::extract(result.diagram, result.trace);
        const std::string json = platbook::to_json(book);
        if (!emit_json.empty()) write_file(emit_json, json + "\n");
        if (!emit_svg.empty()) write_file(emit_svg, platbook::render_svg(book, result.trace));
        if (!emit_trace.empty()) write_file(emit_trace, platbook::serialize_trace(result.trace));
        std::cout << json << "\n";
        return 0;
    } catch (const platbook::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == platbook::errc::hypothesis_violated ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
