#include "wfp/codefile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace wfp::io {

namespace {

struct Line {
    int number;  // 1-based
    std::string text;
};

bool blank(const std::string& s) {
    for (char c : s) {
        if (c != ' ' && c != '\t') return false;
    }
    return true;
}

// Parses a nonnegative base-10 integer at s[pos..]; advances pos. The cap
// keeps header and symbol values inside int range.
int parse_int(const Line& ln, std::size_t& pos, const char* what) {
    const std::string& s = ln.text;
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
        throw ParseError(ln.number, static_cast<int>(pos) + 1,
                         std::string("expected ") + what);
    }
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        if (v > 1'000'000'000L) {
            throw ParseError(ln.number, static_cast<int>(pos) + 1,
                             std::string(what) + " out of range");
        }
        ++pos;
    }
    return static_cast<int>(v);
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

Code parse_code_file(const std::string& text) {
    if (text.empty()) throw ParseError(1, 1, "empty input");

    // Byte-level constraints first: ASCII, '\n' endings, final newline.
    int line = 1, col = 1;
    for (char ch : text) {
        const auto u = static_cast<unsigned char>(ch);
        if (u >= 128) throw ParseError(line, col, "non-ASCII byte");
        if (ch == '\r') throw ParseError(line, col, "carriage return; use '\\n' line endings");
        if (ch == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    if (text.back() != '\n') throw ParseError(line, col, "missing trailing newline");

    std::vector<Line> lines;
    {
        int number = 1;
        std::size_t start = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '\n') {
                std::string body = text.substr(start, i - start);
                if (!body.empty() && body[0] != '#' && !blank(body)) {
                    lines.push_back(Line{number, std::move(body)});
                }
                start = i + 1;
                ++number;
            }
        }
    }
    if (lines.empty()) throw ParseError(line, 1, "missing header line");

    // Header: exactly "n q m", single spaces.
    const Line& hd = lines[0];
    std::size_t pos = 0;
    auto expect_space = [&]() {
        if (pos >= hd.text.size() || hd.text[pos] != ' ') {
            throw ParseError(hd.number, static_cast<int>(pos) + 1,
                             "header must be \"n q m\" with single spaces");
        }
        ++pos;
        if (pos < hd.text.size() && hd.text[pos] == ' ') {
            throw ParseError(hd.number, static_cast<int>(pos) + 1,
                             "header must be \"n q m\" with single spaces");
        }
    };
    const int n = parse_int(hd, pos, "length n");
    expect_space();
    const int q = parse_int(hd, pos, "alphabet size q");
    expect_space();
    const int m = parse_int(hd, pos, "word count m");
    if (pos != hd.text.size()) {
        throw ParseError(hd.number, static_cast<int>(pos) + 1, "unexpected content after header");
    }
    if (n < 1 || n > 64) throw ParseError(hd.number, 1, "n must be in 1..64");
    if (q < 2 || q > 256) throw ParseError(hd.number, 3, "q must be in 2..256");
    if (m < 1) throw ParseError(hd.number, 5, "m must be positive");

    if (static_cast<int>(lines.size()) - 1 < m) {
        throw ParseError(line, 1,
                         "expected " + std::to_string(m) + " word lines, found " +
                             std::to_string(lines.size() - 1));
    }
    if (static_cast<int>(lines.size()) - 1 > m) {
        throw ParseError(lines[m + 1].number, 1, "unexpected content after the last word");
    }

    std::vector<Word> words;
    words.reserve(m);
    for (int wi = 1; wi <= m; ++wi) {
        const Line& ln = lines[wi];
        Word w;
        w.reserve(n);
        std::size_t p = 0;
        for (int sym = 0; sym < n; ++sym) {
            while (p < ln.text.size() && (ln.text[p] == ' ' || ln.text[p] == '\t')) ++p;
            const int start_col = static_cast<int>(p) + 1;
            const int v = parse_int(ln, p, "symbol");
            if (v >= q) {
                throw ParseError(ln.number, start_col,
                                 "symbol " + std::to_string(v) + " not below q=" + std::to_string(q));
            }
            w.push_back(static_cast<std::uint8_t>(v));
        }
        while (p < ln.text.size() && (ln.text[p] == ' ' || ln.text[p] == '\t')) ++p;
        if (p != ln.text.size()) {
            throw ParseError(ln.number, static_cast<int>(p) + 1, "more than n symbols on the line");
        }
        for (std::size_t prev = 0; prev < words.size(); ++prev) {
            if (words[prev] == w) {
                throw ParseError(ln.number, 1,
                                 "duplicate of word " + std::to_string(prev + 1));
            }
        }
        words.push_back(std::move(w));
    }
    return Code(n, q, std::move(words));
}

Code read_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_file(buf.str());
}

std::string serialize_code(const Code& c) {
    std::string out = std::to_string(c.length()) + " " + std::to_string(c.alphabet_size()) + " " +
                      std::to_string(c.size()) + "\n";
    for (const Word& w : c.words()) {
        for (int p = 0; p < c.length(); ++p) {
            if (p > 0) out += ' ';
            out += std::to_string(static_cast<int>(w[p]));
        }
        out += '\n';
    }
    return out;
}

void write_code_file(const Code& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << serialize_code(c);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace wfp::io
