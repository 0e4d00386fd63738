#include "semipos/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace semipos {

namespace {

std::vector<Rational> parse_entries(std::string_view line, std::size_t line_no) {
    std::vector<Rational> row;
    std::istringstream in{std::string(line)};
    std::string token;
    while (in >> token) {
        try {
            row.push_back(Rational::parse(token));
        } catch (const std::invalid_argument&) {
            throw ParseError(line_no, "bad entry '" + token + "'");
        }
    }
    return row;
}

}  // namespace

RatMatrix parse_matrix(std::string_view text) {
    std::vector<RatVector> rows;
    std::size_t width_line = 0;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto entries = parse_entries(line, line_no);
        if (entries.empty()) continue;
        if (!rows.empty() && entries.size() != rows.front().dim())
            throw ParseError(line_no, "row has " + std::to_string(entries.size()) +
                                          " entries, expected " + std::to_string(rows.front().dim()) +
                                          " (from line " + std::to_string(width_line) + ")");
        if (rows.empty()) width_line = line_no;
        rows.emplace_back(std::move(entries));
    }
    if (rows.empty()) throw ParseError(line_no, "no matrix rows found");
    return RatMatrix::from_rows(rows);
}

RatMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open file", path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_matrix(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.message(), path.string());
    }
}

RatVector parse_vector(std::string_view text) {
    auto entries = parse_entries(text, 1);
    return RatVector(std::move(entries));
}

std::string format_matrix(const RatMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += m(i, j).str();
        }
        out += '\n';
    }
    return out;
}

std::string format_vector(const RatVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) out += ' ';
        out += v[i].str();
    }
    return out;
}

}  // namespace semipos
