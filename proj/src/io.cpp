#include "zmx/io.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace zmx {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Token {
    std::string text;
    int column;
};

std::vector<Token> split_line(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) {
            ++k;
        }
        const std::size_t start = k;
        while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) {
            ++k;
        }
        if (k > start) {
            tokens.push_back({std::string(line.substr(start, k - start)), static_cast<int>(start) + 1});
        }
    }
    return tokens;
}

Rational parse_literal(const std::string& text, int line, int column) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line, column);
    }
}

Matrix parse_text(std::string_view text) {
    std::vector<std::pair<int, std::vector<Token>>> lines;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        ++number;
        auto tokens = split_line(text.substr(start, end - start));
        if (!tokens.empty()) {
            lines.emplace_back(number, std::move(tokens));
        }
        start = end + 1;
    }
    if (lines.empty()) {
        throw ParseError("empty input", 1, 1);
    }
    const auto& [header_line, header] = lines.front();
    if (header.size() != 1) {
        throw ParseError("first line must hold only the order n", header_line, header[1].column);
    }
    const Rational order = parse_literal(header[0].text, header_line, header[0].column);
    if (order.sign() <= 0 || denominator(order) != 1 || order > 4096) {
        throw ParseError("order must be a positive integer", header_line, header[0].column);
    }
    const int n = numerator(order).convert_to<int>();
    if (static_cast<int>(lines.size()) - 1 != n) {
        const int line = static_cast<int>(lines.size()) - 1 > n ? lines[n + 1].first : number;
        throw ParseError("expected " + std::to_string(n) + " rows, found " +
                             std::to_string(lines.size() - 1),
                         line, 1);
    }
    Matrix a(n, n);
    for (int i = 0; i < n; ++i) {
        const auto& [line, row] = lines[i + 1];
        if (static_cast<int>(row.size()) != n) {
            const int column = static_cast<int>(row.size()) > n ? row[n].column : row.back().column;
            throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(n),
                             line, column);
        }
        for (int j = 0; j < n; ++j) {
            a(i, j) = parse_literal(row[j].text, line, row[j].column);
        }
    }
    return a;
}

// Line/column of a byte offset, both 1-based.
std::pair<int, int> locate(std::string_view text, std::size_t offset) {
    int line = 1;
    int column = 1;
    for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

Matrix parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("malformed JSON", line, column);
    }
    const auto fail = [](const std::string& message) { throw ParseError(message, 1, 1); };
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries")) {
        fail("JSON matrix needs keys \"n\" and \"entries\"");
    }
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
        fail("\"n\" must be a positive integer");
    }
    const auto n = doc["n"].get<long long>();
    const auto& entries = doc["entries"];
    if (!entries.is_array() || static_cast<long long>(entries.size()) != n) {
        fail("\"entries\" must hold n rows");
    }
    Matrix a(n, n);
    for (long long i = 0; i < n; ++i) {
        const auto& row = entries[i];
        if (!row.is_array() || static_cast<long long>(row.size()) != n) {
            fail("row " + std::to_string(i + 1) + " must hold n entries");
        }
        for (long long j = 0; j < n; ++j) {
            const auto& cell = row[j];
            std::string literal;
            if (cell.is_string()) {
                literal = cell.get<std::string>();
            } else if (cell.is_number_integer()) {
                literal = cell.dump();
            } else {
                fail("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                     ") must be a rational string");
            }
            try {
                a(i, j) = parse_rational(literal);
            } catch (const std::invalid_argument& e) {
                fail("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " +
                     e.what());
            }
        }
    }
    return a;
}

ordered_json matrix_json(const Matrix& a) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            row.push_back(to_string(a(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename T>
ordered_json optional_json(const std::optional<T>& value) {
    return value ? ordered_json(*value) : ordered_json(nullptr);
}

std::string yes_no(bool flag) {
    return flag ? "yes" : "no";
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        return parse_json(text);
    }
    return parse_text(text);
}

std::string format_matrix(const Matrix& a, Format format) {
    if (format == Format::Json) {
        ordered_json doc;
        doc["n"] = a.rows();
        doc["entries"] = matrix_json(a);
        return doc.dump() + "\n";
    }
    std::ostringstream out;
    out << a.rows() << '\n';
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out << (j == 0 ? "" : " ") << to_string(a(i, j));
        }
        out << '\n';
    }
    return out.str();
}

CyclicInfo cyclic_info(const Matrix& a, int order_cap) {
    CyclicInfo info;
    info.products = cyclic_products(a);
    info.full = is_full(a);
    info.inverse_cyclic = is_inverse_cyclic(a);
    info.bdsw = is_bdsw(a);
    info.verdict = bdsw_sign_classify(a);
    if (a.rows() <= order_cap && det(a) != 0) {
        info.inverse = inverse(a);
        info.inverse_is_bdsw = is_bdsw(*info.inverse);
        info.inverse_is_z = is_z(*info.inverse);
    }
    return info;
}

std::string emit_report(const ClassReport& r, const CyclicInfo& info, Format format) {
    const Rational gap = info.products.d - info.products.c;
    if (format == Format::Json) {
        ordered_json doc;
        doc["order"] = r.order;
        doc["determinant"] = to_string(r.determinant);
        doc["is_nonsingular"] = r.is_nonsingular;
        doc["irreducible"] = r.irreducible;
        doc["is_z"] = r.is_z;
        doc["is_m"] = r.is_m;
        doc["is_n"] = r.is_n;
        doc["is_n0"] = r.is_n0;
        doc["is_f0"] = r.is_f0;
        doc["l_index"] = optional_json(r.l_index);
        doc["is_nonsingular_m"] = r.is_nonsingular_m;
        doc["d"] = to_string(info.products.d);
        doc["c"] = to_string(info.products.c);
        doc["d_minus_c"] = to_string(gap);
        doc["is_full"] = info.full;
        doc["inverse_cyclic"] = info.inverse_cyclic;
        doc["is_bdsw"] = info.bdsw;
        doc["inverse"] = info.inverse ? matrix_json(*info.inverse) : ordered_json(nullptr);
        doc["inverse_is_z"] = optional_json(info.inverse_is_z);
        doc["inverse_is_bdsw"] = optional_json(info.inverse_is_bdsw);
        doc["verdict"] = std::string(to_string(info.verdict));
        return doc.dump() + "\n";
    }
    std::ostringstream out;
    out << "order:            " << r.order << '\n'
        << "determinant:      " << to_string(r.determinant) << '\n'
        << "irreducible:      " << yes_no(r.irreducible) << '\n'
        << "Z-matrix:         " << yes_no(r.is_z) << '\n';
    if (r.is_z) {
        out << "M-matrix:         " << yes_no(r.is_m)
            << (r.is_m ? (r.is_nonsingular_m ? " (nonsingular)" : " (singular)") : "") << '\n'
            << "N-matrix:         " << yes_no(r.is_n) << '\n'
            << "N0-matrix:        " << yes_no(r.is_n0) << '\n'
            << "F0-matrix:        " << yes_no(r.is_f0) << '\n'
            << "L_s index:        " << *r.l_index << '\n';
    }
    out << "d, c, d - c:      " << to_string(info.products.d) << ", " << to_string(info.products.c)
        << ", " << to_string(gap) << '\n'
        << "full:             " << yes_no(info.full) << '\n'
        << "inverse cyclic:   " << yes_no(info.inverse_cyclic) << '\n'
        << "bdsw:             " << yes_no(info.bdsw) << '\n'
        << "verdict:          " << to_string(info.verdict) << '\n';
    if (info.inverse) {
        out << "inverse is bdsw:  " << yes_no(*info.inverse_is_bdsw) << '\n'
            << "inverse is Z:     " << yes_no(*info.inverse_is_z) << '\n'
            << "inverse:\n";
        const std::string body = format_matrix(*info.inverse, Format::Text);
        out << body.substr(body.find('\n') + 1);
    }
    return out.str();
}

}  // namespace zmx
