#include "zmx/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace zmx {

Digraph::Digraph(int order, const std::vector<Edge>& edges)
    : successors_(static_cast<std::size_t>(std::max(order, 0))) {
    for (const auto& [from, to] : edges) {
        if (from < 1 || from > order || to < 1 || to > order) {
            throw Error("edge endpoint outside 1.." + std::to_string(order));
        }
        successors_[from - 1].push_back(to);
    }
    for (auto& out : successors_) {
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
}

bool Digraph::has_edge(int from, int to) const {
    const auto& out = successors(from);
    return std::binary_search(out.begin(), out.end(), to);
}

const std::vector<int>& Digraph::successors(int vertex) const {
    if (vertex < 1 || vertex > order()) {
        throw Error("vertex " + std::to_string(vertex) + " outside 1.." + std::to_string(order()));
    }
    return successors_[vertex - 1];
}

std::vector<Digraph::Edge> Digraph::edges() const {
    std::vector<Edge> out;
    for (int v = 1; v <= order(); ++v) {
        for (int w : successors_[v - 1]) {
            out.emplace_back(v, w);
        }
    }
    return out;
}

std::size_t Digraph::edge_count() const {
    std::size_t count = 0;
    for (const auto& out : successors_) {
        count += out.size();
    }
    return count;
}

IndexSet Path::off_path(int order) const {
    std::vector<int> on = vertices;
    std::sort(on.begin(), on.end());
    std::vector<int> off;
    for (int v = 1; v <= order; ++v) {
        if (!std::binary_search(on.begin(), on.end(), v)) {
            off.push_back(v);
        }
    }
    return IndexSet(order, std::move(off));
}

Digraph digraph_of(const Matrix& a) {
    require_square(a);
    const int n = static_cast<int>(a.rows());
    std::vector<Digraph::Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (a(i, j) != 0) {
                edges.emplace_back(i + 1, j + 1);
            }
        }
    }
    return Digraph(n, edges);
}

std::vector<std::vector<int>> strongly_connected_components(const Digraph& graph) {
    const int n = graph.order();
    std::vector<int> index(n + 1, -1);
    std::vector<int> low(n + 1, 0);
    std::vector<bool> on_stack(n + 1, false);
    std::vector<int> stack;
    std::vector<std::vector<int>> components;
    int counter = 0;

    std::function<void(int)> visit = [&](int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w : graph.successors(v)) {
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<int> component;
            int w = 0;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                component.push_back(w);
            } while (w != v);
            std::sort(component.begin(), component.end());
            components.push_back(std::move(component));
        }
    };

    for (int v = 1; v <= n; ++v) {
        if (index[v] < 0) {
            visit(v);
        }
    }
    return components;
}

bool is_irreducible(const Digraph& graph) {
    if (graph.order() <= 1) {
        return true;
    }
    return strongly_connected_components(graph).size() == 1;
}

namespace {

// Depth-first enumeration of simple paths; stops early once `limit` paths are found
// (limit 0 means unbounded).
std::vector<Path> collect_paths(const Digraph& graph, int from, int to, std::size_t limit) {
    const int n = graph.order();
    if (n > kPathOrderCap) {
        throw OrderCapExceeded(n, kPathOrderCap);
    }
    if (from < 1 || from > n || to < 1 || to > n) {
        throw Error("path endpoints outside 1.." + std::to_string(n));
    }
    if (from == to) {
        throw Error("path endpoints must differ");
    }
    std::vector<Path> paths;
    std::vector<bool> visited(n + 1, false);
    std::vector<int> trail{from};
    visited[from] = true;

    std::function<bool(int)> extend = [&](int v) {
        for (int w : graph.successors(v)) {
            if (visited[w]) {
                continue;
            }
            trail.push_back(w);
            if (w == to) {
                paths.push_back(Path{trail});
                if (limit != 0 && paths.size() >= limit) {
                    return false;
                }
            } else {
                visited[w] = true;
                const bool keep_going = extend(w);
                visited[w] = false;
                if (!keep_going) {
                    return false;
                }
            }
            trail.pop_back();
        }
        return true;
    };
    extend(from);
    return paths;
}

}  // namespace

std::vector<Path> enumerate_paths(const Digraph& graph, int from, int to) {
    return collect_paths(graph, from, to, 0);
}

bool is_unipathic(const Digraph& graph) {
    for (int i = 1; i <= graph.order(); ++i) {
        for (int j = 1; j <= graph.order(); ++j) {
            if (i != j && collect_paths(graph, i, j, 2).size() > 1) {
                return false;
            }
        }
    }
    return true;
}

Rational maybee_entry(const Matrix& a, int i, int j) {
    require_square(a);
    const int n = static_cast<int>(a.rows());
    if (i < 1 || i > n || j < 1 || j > n) {
        throw Error("entry index outside 1.." + std::to_string(n));
    }
    const Rational det_a = det(a);
    if (det_a == 0) {
        throw SingularError();
    }
    if (i == j) {
        return principal_minor(a, IndexSet(n, {i}).complement()) / det_a;
    }
    Rational sum(0);
    for (const Path& p : enumerate_paths(digraph_of(a), i, j)) {
        Rational term = principal_minor(a, p.off_path(n));
        for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
            term *= a(p.vertices[k] - 1, p.vertices[k + 1] - 1);
        }
        if (p.length() % 2 != 0) {
            term = -term;
        }
        sum += term;
    }
    return sum / det_a;
}

Matrix maybee_inverse(const Matrix& a) {
    require_square(a);
    const int n = static_cast<int>(a.rows());
    Matrix b(n, n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            b(i - 1, j - 1) = maybee_entry(a, i, j);
        }
    }
    return b;
}

std::string to_dot(const Digraph& graph, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (int v = 1; v <= graph.order(); ++v) {
        out << "  v" << v << ";\n";
    }
    for (const auto& [from, to] : graph.edges()) {
        out << "  v" << from << " -> v" << to << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace zmx
