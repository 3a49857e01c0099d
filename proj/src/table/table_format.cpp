#include "babbage/table/table_format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "babbage/errors.hpp"

namespace babbage {

namespace {

bool parse_decimal(const std::string& s, std::size_t& out) {
    if (s.empty() || s.size() > 18) {
        return false;
    }
    out = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
        out = out * 10 + static_cast<std::size_t>(c - '0');
    }
    return true;
}

}  // namespace

FiniteTable read_table(std::istream& in, std::size_t max_states) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t m = 0;
    std::size_t k = 0;
    std::size_t expected = 0;
    std::vector<Symbol> entries;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty() && line.front() == '#') {
            continue;
        }
        if (!have_header) {
            if (line.empty()) {
                continue;
            }
            const auto space = line.find(' ');
            std::size_t mv = 0;
            std::size_t kv = 0;
            if (space == std::string::npos || !parse_decimal(line.substr(0, space), mv)) {
                throw ParseError("malformed header, expected \"m k\"", line_no, 1);
            }
            if (!parse_decimal(line.substr(space + 1), kv)) {
                throw ParseError("malformed header, expected \"m k\"", line_no, space + 2);
            }
            if (mv == 0 || kv == 0) {
                throw ParseError("header needs m >= 1 and k >= 1", line_no, 1);
            }
            m = mv;
            k = kv;
            expected = state_count(m, k, max_states);
            entries.reserve(expected);
            have_header = true;
            continue;
        }
        std::size_t pos = 0;
        while (pos < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[pos]))) {
                ++pos;
                continue;
            }
            const std::size_t start = pos;
            while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) {
                ++pos;
            }
            const std::string token = line.substr(start, pos - start);
            std::size_t v = 0;
            if (!parse_decimal(token, v)) {
                throw ParseError("malformed entry '" + token + "'", line_no, start + 1);
            }
            if (v >= m) {
                throw ParseError("entry " + token + " outside 0.." + std::to_string(m - 1), line_no, start + 1);
            }
            if (entries.size() == expected) {
                throw ParseError("too many entries, expected " + std::to_string(expected), line_no, start + 1);
            }
            entries.push_back(static_cast<Symbol>(v));
        }
    }
    if (!have_header) {
        throw ParseError("missing header line \"m k\"", line_no + 1, 1);
    }
    if (entries.size() != expected) {
        throw ParseError("wrong entry count: expected " + std::to_string(expected) + ", found " +
                             std::to_string(entries.size()),
                         line_no + 1, 1);
    }
    return FiniteTable(m, k, std::move(entries), max_states);
}

FiniteTable read_table_file(const std::filesystem::path& path, std::size_t max_states) {
    std::ifstream in(path);
    if (!in) {
        throw ContractError("cannot open table file " + path.string());
    }
    return read_table(in, max_states);
}

std::string write_table(const FiniteTable& t) {
    std::ostringstream os;
    os << t.m() << ' ' << t.k() << '\n';
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i > 0) {
            os << ' ';
        }
        os << t.at_index(i);
    }
    os << '\n';
    return os.str();
}

}  // namespace babbage
