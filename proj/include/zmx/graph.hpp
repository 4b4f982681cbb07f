#pragma once

#include "zmx/matrix.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace zmx {

/// Simple-path enumeration is factorial in the worst case; orders above this are refused.
inline constexpr int kPathOrderCap = 12;

/// Directed graph on vertices 1..n, loops allowed. Immutable once built.
class Digraph {
public:
    using Edge = std::pair<int, int>;

    Digraph(int order, const std::vector<Edge>& edges);

    int order() const noexcept { return static_cast<int>(successors_.size()); }
    bool has_edge(int from, int to) const;
    /// Out-neighbours of `vertex` in ascending order (a loop lists the vertex itself).
    const std::vector<int>& successors(int vertex) const;
    /// All edges in lexicographic order.
    std::vector<Edge> edges() const;
    std::size_t edge_count() const;

private:
    std::vector<std::vector<int>> successors_;
};

/// A directed path through distinct vertices.
struct Path {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    /// V(p): the vertices of {1..n} the path does not visit.
    IndexSet off_path(int order) const;

    friend bool operator==(const Path&, const Path&) = default;
};

/// D(A): edge (i, j) iff a_ij != 0.
Digraph digraph_of(const Matrix& a);

/// Tarjan's algorithm; components are listed in the order they are completed.
std::vector<std::vector<int>> strongly_connected_components(const Digraph& graph);

/// Strong connectivity. A single vertex counts as irreducible.
bool is_irreducible(const Digraph& graph);

/// Every simple path from `from` to `to` (from != to) in lexicographic order.
/// Throws OrderCapExceeded above kPathOrderCap.
std::vector<Path> enumerate_paths(const Digraph& graph, int from, int to);

/// At most one simple path between every ordered pair of distinct vertices.
bool is_unipathic(const Digraph& graph);

/// (A^{-1})_{ij} from the path expansion
///   i == j:  det A(i) / det A
///   i != j:  (1/det A) * sum_p (-1)^{l(p)} A[p] det A[V(p)]
/// over simple paths p from v_i to v_j. Paths run from the row index to the column
/// index: for a 2x2 matrix the single path v1 -> v2 contributes -a_12 / det A,
/// which is the (1,2) entry of the inverse.
Rational maybee_entry(const Matrix& a, int i, int j);

/// Full inverse assembled entrywise from maybee_entry.
Matrix maybee_inverse(const Matrix& a);

/// Graphviz rendering: one `digraph` block, vertices v1..vn, loops included.
std::string to_dot(const Digraph& graph, const std::string& name = "D");

}  // namespace zmx
