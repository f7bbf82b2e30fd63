#include "platbook/braid.hpp"
#include "platbook/errors.hpp"

#include <charconv>
#include <sstream>

namespace platbook {

namespace {

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            if (!cur.empty()) {
                out.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::int64_t parse_int(std::string_view s, const std::string& what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        fail(errc::malformed_syllable, "expected integer in " + what + ", got '" + std::string(s) + "'");
    return value;
}

// "key=value" with a fixed key; used for the n= and p= headers.
std::int64_t parse_header(const std::string& token, std::string_view key) {
    if (token.size() < key.size() + 2 || token.compare(0, key.size(), key) != 0 ||
        token[key.size()] != '=')
        fail(errc::malformed_syllable,
             "expected '" + std::string(key) + "=<int>' header, got '" + token + "'");
    return parse_int(std::string_view(token).substr(key.size() + 1), std::string(key) + "= header");
}

Syllable parse_syllable(const std::string& token, int n) {
    // a(i,j) or a(i,j)^k
    if (token.size() < 6 || token[0] != 'a' || token[1] != '(')
        fail(errc::malformed_syllable, "expected a(i,j) or a(i,j)^k, got '" + token + "'");
    auto comma = token.find(',', 2);
    if (comma == std::string::npos)
        fail(errc::malformed_syllable, "missing ',' in '" + token + "'");
    auto close = token.find(')', comma + 1);
    if (close == std::string::npos)
        fail(errc::malformed_syllable, "missing ')' in '" + token + "'");

    Syllable s;
    s.lo = static_cast<int>(parse_int(std::string_view(token).substr(2, comma - 2), token));
    s.hi = static_cast<int>(parse_int(std::string_view(token).substr(comma + 1, close - comma - 1), token));
    if (close + 1 == token.size()) {
        s.exp = 1;
    } else {
        if (token[close + 1] != '^')
            fail(errc::malformed_syllable, "expected '^' after ')' in '" + token + "'");
        s.exp = parse_int(std::string_view(token).substr(close + 2), token);
    }

    if (s.lo < 1 || s.hi > 2 * n || s.lo >= s.hi)
        fail(errc::strand_out_of_range,
             "a(" + std::to_string(s.lo) + "," + std::to_string(s.hi) + ") needs 1 <= i < j <= " +
                 std::to_string(2 * n));
    if (s.exp == 0)
        fail(errc::zero_exponent, "zero exponent in '" + token + "'");
    return s;
}

} // namespace

std::int64_t PureBraidWord::unit_length() const {
    std::int64_t total = 0;
    for (const auto& s : syllables) total += s.exp < 0 ? -s.exp : s.exp;
    return total;
}

std::vector<Syllable> parse_syllables(std::string_view text, int n) {
    if (n < 1) fail(errc::strand_out_of_range, "need n >= 1, got n=" + std::to_string(n));
    std::vector<Syllable> out;
    for (const auto& token : tokenize(text)) out.push_back(parse_syllable(token, n));
    return out;
}

PureBraidWord parse_word(std::string_view text) {
    auto tokens = tokenize(text);
    if (tokens.empty()) fail(errc::malformed_syllable, "empty word: missing 'n=<int>' header");
    PureBraidWord w;
    w.n = static_cast<int>(parse_header(tokens[0], "n"));
    if (w.n < 1) fail(errc::strand_out_of_range, "need n >= 1, got n=" + std::to_string(w.n));
    for (std::size_t i = 1; i < tokens.size(); ++i)
        w.syllables.push_back(parse_syllable(tokens[i], w.n));
    return w;
}

std::string render_word(const PureBraidWord& word) {
    std::ostringstream out;
    out << "n=" << word.n;
    for (const auto& s : word.syllables) {
        out << " a(" << s.lo << ',' << s.hi << ')';
        if (s.exp != 1) out << '^' << s.exp;
    }
    return out.str();
}

PlatInput parse_input(std::string_view text) {
    auto tokens = tokenize(text);
    if (tokens.size() < 2)
        fail(errc::malformed_syllable, "input needs 'n=<int> p=<int>' header");
    PlatInput in;
    in.word.n = static_cast<int>(parse_header(tokens[0], "n"));
    if (in.word.n < 1)
        fail(errc::strand_out_of_range, "need n >= 1, got n=" + std::to_string(in.word.n));
    in.p = parse_header(tokens[1], "p");
    if (in.p < 0)
        fail(errc::malformed_syllable, "need p >= 0, got p=" + std::to_string(in.p));
    for (std::size_t i = 2; i < tokens.size(); ++i)
        in.word.syllables.push_back(parse_syllable(tokens[i], in.word.n));
    return in;
}

std::string render_input(const PlatInput& input) {
    std::ostringstream out;
    out << "n=" << input.word.n << " p=" << input.p;
    for (const auto& s : input.word.syllables) {
        out << " a(" << s.lo << ',' << s.hi << ')';
        if (s.exp != 1) out << '^' << s.exp;
    }
    return out.str();
}

std::vector<int> plat_component(int n) {
    // Walk: top cap from 1 to 2, bottom cap from 2 to 3, top cap 3 -> 4, ...
    // bottom cap 2n-2 -> 2n-1, top cap 2n-1 -> 2n, closure 2n -> 1.
    std::vector<int> chain;
    chain.reserve(2 * n);
    for (int s = 1; s <= 2 * n; ++s) chain.push_back(s);
    return chain;
}

std::vector<int> UDecomposition::encircled_strands() const {
    std::vector<int> out;
    out.reserve(cap_circles.size() * 2);
    for (const auto& c : cap_circles) {
        out.push_back(c[0]);
        out.push_back(c[1]);
    }
    return out;
}

UDecomposition u_decomposition(int n) {
    if (n < 1) fail(errc::strand_out_of_range, "need n >= 1, got n=" + std::to_string(n));
    UDecomposition u;
    for (int k = 0; k < n; ++k) u.cap_circles.push_back({2 * k + 1, 2 * k + 2});
    for (int s = 2; s <= 2 * n - 1; ++s) u.clasp_strands.push_back(s);
    return u;
}

std::vector<Syllable> unit_expand(const PureBraidWord& word) {
    std::vector<Syllable> out;
    for (const auto& s : word.syllables) {
        std::int64_t count = s.exp < 0 ? -s.exp : s.exp;
        std::int64_t sign = s.exp < 0 ? -1 : 1;
        for (std::int64_t k = 0; k < count; ++k) out.push_back({s.lo, s.hi, sign});
    }
    return out;
}

} // namespace platbook
