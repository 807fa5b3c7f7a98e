#include "galhull/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace galhull {

namespace {

struct Line {
    std::size_t number;  // 1-based position in the original text
    std::string text;
};

[[noreturn]] void parse_fail(std::size_t line, const std::string& detail) {
    throw CodeError("E_PARSE", "line " + std::to_string(line) + ": " + detail);
}

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++number;
        start = end + 1;

        std::size_t first = raw.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;      // blank
        if (raw[first] == '#') continue;                    // comment
        std::size_t last = raw.find_last_not_of(" \t\r");
        lines.push_back({number, std::string(raw.substr(first, last - first + 1))});
        if (end == text.size()) break;
    }
    return lines;
}

unsigned parse_uint(std::string_view token, std::size_t line, const std::string& what) {
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        parse_fail(line, "expected a non-negative integer for " + what + ", got '" + std::string(token) + "'");
    return value;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> tokens;
    std::istringstream in(s);
    std::string t;
    while (in >> t) tokens.push_back(t);
    return tokens;
}

}  // namespace

ParsedCode parse_code_file(std::string_view text) {
    const std::vector<Line> lines = content_lines(text);
    std::size_t li = 0;
    auto next_line = [&](const std::string& expected) -> const Line& {
        if (li >= lines.size()) {
            const std::size_t at = lines.empty() ? 1 : lines.back().number + 1;
            parse_fail(at, "unexpected end of file, expected " + expected);
        }
        return lines[li++];
    };

    // field <p> <e> <c0,...,ce>
    const Line& header = next_line("the field header line");
    {
        const auto tokens = split_ws(header.text);
        if (tokens.size() != 4 || tokens[0] != "field")
            parse_fail(header.number, "expected 'field <p> <e> <c0,c1,...,ce>'");
        const unsigned p = parse_uint(tokens[1], header.number, "p");
        const unsigned e = parse_uint(tokens[2], header.number, "e");
        std::vector<unsigned> modulus;
        std::string_view list = tokens[3];
        while (!list.empty()) {
            const std::size_t comma = list.find(',');
            modulus.push_back(parse_uint(list.substr(0, comma), header.number, "a modulus coefficient"));
            if (comma == std::string_view::npos) break;
            list.remove_prefix(comma + 1);
            if (list.empty()) parse_fail(header.number, "trailing comma in the modulus list");
        }
        if (modulus.size() != e + 1)
            parse_fail(header.number, "the modulus needs e+1 = " + std::to_string(e + 1) + " coefficients, got " +
                                          std::to_string(modulus.size()));

        FieldPtr field;
        try {
            field = FieldSpec::make(p, e, std::move(modulus));
        } catch (const CodeError& err) {
            std::string detail = err.what();
            const std::string prefix = err.code() + ": ";
            if (detail.rfind(prefix, 0) == 0) detail.erase(0, prefix.size());
            throw CodeError(err.code(), "line " + std::to_string(header.number) + ": " + detail);
        }

        // rows <k> <n>
        const Line& dims = next_line("the 'rows <k> <n>' line");
        const auto dtokens = split_ws(dims.text);
        if (dtokens.size() != 3 || dtokens[0] != "rows")
            parse_fail(dims.number, "expected 'rows <k> <n>'");
        const unsigned k = parse_uint(dtokens[1], dims.number, "the row count");
        const unsigned n = parse_uint(dtokens[2], dims.number, "the column count");

        MatrixGF body(field, k, n);
        for (unsigned r = 0; r < k; ++r) {
            const Line& row = next_line("a matrix row");
            const auto etokens = split_ws(row.text);
            if (etokens.size() != n)
                parse_fail(row.number, "expected " + std::to_string(n) + " entries, got " +
                                           std::to_string(etokens.size()));
            for (unsigned c = 0; c < n; ++c) {
                const unsigned v = parse_uint(etokens[c], row.number, "an entry");
                if (v >= field->order())
                    parse_fail(row.number, "entry " + std::to_string(v) + " is out of range for a field of order " +
                                               std::to_string(field->order()));
                body.at(r, c) = FieldElement{v};
            }
        }
        if (li < lines.size()) parse_fail(lines[li].number, "unexpected content after the matrix body");
        return ParsedCode{std::move(field), std::move(body)};
    }
}

std::string serialize_code_file(const MatrixGF& rows) {
    const FieldSpec& f = *rows.field();
    std::ostringstream out;
    out << "field " << f.characteristic() << ' ' << f.degree() << ' ';
    for (std::size_t i = 0; i < f.modulus().size(); ++i) {
        if (i > 0) out << ',';
        out << f.modulus()[i];
    }
    out << '\n';
    out << "rows " << rows.rows() << ' ' << rows.cols() << '\n';
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        for (std::size_t j = 0; j < rows.cols(); ++j) {
            if (j > 0) out << ' ';
            out << rows.at(i, j).value;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace galhull
