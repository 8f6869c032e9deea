#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ontolink {

// Strip ASCII whitespace from both ends.
std::string_view trim(std::string_view s);

// Split on a single-character delimiter; keeps empty fields.
std::vector<std::string_view> split(std::string_view s, char delim);

// Number of Unicode scalar values in a UTF-8 string (continuation bytes are
// not counted; malformed bytes count as one scalar each).
std::size_t utf8_length(std::string_view s);

// RFC 3986 percent-encoding of everything outside the unreserved set.
std::string url_encode(std::string_view s);

// One CSV field: quoted (with doubled quotes) only when it contains
// a comma, quote, or newline.
std::string csv_field(std::string_view s);

// Parse one CSV record supporting quoted fields. No embedded newlines.
std::vector<std::string> csv_split(std::string_view line);

// Fixed-format double for byte-stable output files.
std::string format_double(double v, int precision = 10);

// Whole-file read/write. Throw ontolink::Error on I/O failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Iterate lines without copying the buffer; handles \n and \r\n.
class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    // Returns false at end of input. `line` excludes the terminator;
    // line_number is 1-based.
    bool next(std::string_view& line, std::size_t& line_number);

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_no_ = 0;
};

}  // namespace ontolink
