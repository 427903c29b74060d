#pragma once

#include <stdexcept>
#include <string>

#include "wfp/code.hpp"

namespace wfp::io {

/// Parse failure with a 1-based text position. The message already includes
/// "line L, column C".
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/// Text format: a header line "n q m" (single spaces), then m lines of n
/// whitespace-separated symbols in 0..q-1. Lines whose first character is
/// '#' and whitespace-only lines are skipped. ASCII with '\n' endings only;
/// the final line must end in a newline. The parser enforces every Code
/// invariant (symbol range, distinct words) with positioned diagnostics.
Code parse_code_file(const std::string& text);

/// Reads and parses; file-system failures surface as std::runtime_error.
Code read_code_file(const std::string& path);

/// Canonical rendering: header, one line per word, single spaces, trailing
/// newline, no comments. parse_code_file(serialize_code(c)) == c, and
/// serializing a parsed file is byte-stable.
std::string serialize_code(const Code& c);

void write_code_file(const Code& c, const std::string& path);

}  // namespace wfp::io
