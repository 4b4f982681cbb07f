#pragma once

#include "zmx/cyclic.hpp"
#include "zmx/matrix.hpp"
#include "zmx/zclass.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace zmx {

enum class Format { Text, Json };

/// Accepts either layout:
///   text  first line n, then n lines of n rational literals;
///   json  {"n": 3, "entries": [["1", "-1/2", ...], ...]}.
/// The layout is picked from the first non-blank character. Throws ParseError with
/// the 1-based line and column of the offending token.
Matrix parse_matrix(std::string_view text);

/// Exact rendering in either layout; parse_matrix(format_matrix(A, f)) == A.
std::string format_matrix(const Matrix& a, Format format);

/// Cyclic/bdsw facts about a matrix and, when it is invertible, its inverse.
struct CyclicInfo {
    CyclicProducts products;
    bool full = false;
    bool inverse_cyclic = false;
    bool bdsw = false;
    SignVerdict verdict = SignVerdict::Neither;
    std::optional<Matrix> inverse;
    std::optional<bool> inverse_is_bdsw;
    std::optional<bool> inverse_is_z;
};

CyclicInfo cyclic_info(const Matrix& a, int order_cap = kDefaultOrderCap);

/// Deterministic report. JSON output is a single line with a fixed key order.
std::string emit_report(const ClassReport& report, const CyclicInfo& info, Format format);

}  // namespace zmx
