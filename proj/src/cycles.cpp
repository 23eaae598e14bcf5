#include "dsem/cycles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "dsem/errors.hpp"

namespace dsem {

const char* path_kind_name(PathKind kind) {
    switch (kind) {
        case PathKind::Horizontal: return "Horizontal";
        case PathKind::DiagA: return "DiagA";
        case PathKind::DiagB: return "DiagB";
    }
    return "?";
}

std::string CycleType::str() const {
    return "(" + std::to_string(l1) + ", {" + std::to_string(l_lo) + "," + std::to_string(l_hi) + "}, " +
           std::to_string(l4) + ")";
}

int path_step(const TorusParams& p, int v, PathKind kind) {
    int r = v / p.i, c = v % p.i;
    if (kind == PathKind::Horizontal) return torus_vertex(p, r, (c + 1) % p.i);
    const auto& layout = dsem_type(p.type).strip_layout;
    if (kind == PathKind::DiagA && layout[r % layout.size()] == StripKind::Tri) c += 1;
    if (r + 1 == p.j) return torus_vertex(p, 0, (c + p.k) % p.i);
    return torus_vertex(p, r + 1, c % p.i);
}

namespace {

struct Sides {
    std::vector<int> left, right;
};

// Face sizes on each side of the path entering v from `prev` and leaving to `next`.
Sides sides_at(const CombMap& map, int prev, int v, int next) {
    int out = map.find_dart(v, next);
    int in = map.find_dart(v, prev);
    if (out < 0 || in < 0) throw Error(ErrorCode::RuleMismatch, "path step is not an edge at vertex " + std::to_string(v));
    Sides s;
    int d = out;
    while (d != in) {
        s.left.push_back(map.face_size(map.face_of(d)));
        d = map.sigma(d);
    }
    while (d != out) {
        s.right.push_back(map.face_size(map.face_of(d)));
        d = map.sigma(d);
    }
    std::sort(s.left.begin(), s.left.end());
    std::sort(s.right.begin(), s.right.end());
    return s;
}

bool homogeneous(const std::vector<int>& v) {
    return !v.empty() && std::all_of(v.begin(), v.end(), [&](int x) { return x == v.front(); });
}

// Horizontal paths separate the strip below from the strip above. Diagonal
// paths run straight through 3^6 and 4^4 vertices and split a 3^3.4^2 vertex
// into a square and triangle on one side, a square and two triangles on the other.
bool rule_holds(PathKind kind, const Sides& s) {
    if (kind == PathKind::Horizontal) return homogeneous(s.left) && homogeneous(s.right);
    auto pair = std::minmax(s.left, s.right, [](const auto& a, const auto& b) { return a.size() < b.size(); });
    const std::vector<int>& a = pair.first;
    const std::vector<int>& b = pair.second;
    if (a == std::vector<int>{3, 3, 3} && b == std::vector<int>{3, 3, 3}) return true;
    if (a == std::vector<int>{4, 4} && b == std::vector<int>{4, 4}) return true;
    return a == std::vector<int>{3, 4} && b == std::vector<int>{3, 3, 4};
}

std::vector<int> predecessors(const TorusParams& p, PathKind kind) {
    std::vector<int> pred(p.i * p.j, -1);
    for (int v = 0; v < p.i * p.j; ++v) pred[path_step(p, v, kind)] = v;
    return pred;
}

void check_rule_at(const CombMap& map, PathKind kind, int prev, int v, int next) {
    if (!rule_holds(kind, sides_at(map, prev, v, next)))
        throw Error(ErrorCode::RuleMismatch,
                    std::string(path_kind_name(kind)) + " rule fails at vertex " + std::to_string(v));
}

}  // namespace

std::vector<int> trace_cycle_vertices(const CombMap& map, const TorusParams& p, int start, PathKind kind,
                                      bool verify_rules) {
    check_admissible(p);
    if (start < 0 || start >= p.i * p.j || start >= map.vertex_count())
        throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(start));
    std::vector<int> cycle{start};
    int v = path_step(p, start, kind);
    while (v != start) {
        if (!map.has_edge(cycle.back(), v))
            throw Error(ErrorCode::RuleMismatch, "step " + std::to_string(cycle.back()) + "->" + std::to_string(v) +
                                                     " is not an edge");
        cycle.push_back(v);
        if (static_cast<int>(cycle.size()) > p.i * p.j)
            throw Error(ErrorCode::RuleMismatch, "path does not close");
        v = path_step(p, v, kind);
    }
    if (!map.has_edge(cycle.back(), start)) throw Error(ErrorCode::RuleMismatch, "closing step is not an edge");
    if (verify_rules) {
        const int n = static_cast<int>(cycle.size());
        for (int t = 0; t < n; ++t)
            check_rule_at(map, kind, cycle[(t + n - 1) % n], cycle[t], cycle[(t + 1) % n]);
    }
    return cycle;
}

int trace_cycle(const CombMap& map, const TorusParams& p, int start, PathKind kind, bool verify_rules) {
    return static_cast<int>(trace_cycle_vertices(map, p, start, kind, verify_rules).size());
}

void verify_path_rules(const CombMap& map, const TorusParams& p) {
    check_admissible(p);
    for (PathKind kind : {PathKind::Horizontal, PathKind::DiagA, PathKind::DiagB}) {
        auto pred = predecessors(p, kind);
        for (int v = 0; v < p.i * p.j; ++v) check_rule_at(map, kind, pred[v], v, path_step(p, v, kind));
    }
    auto pa = predecessors(p, PathKind::DiagA), pb = predecessors(p, PathKind::DiagB);
    for (int v = 0; v < p.i * p.j; ++v) {
        Sides a = sides_at(map, pa[v], v, path_step(p, v, PathKind::DiagA));
        Sides b = sides_at(map, pb[v], v, path_step(p, v, PathKind::DiagB));
        if (a.left != b.right || a.right != b.left)
            throw Error(ErrorCode::RuleMismatch, "DiagB is not the mirror of DiagA at vertex " + std::to_string(v));
    }
}

int q4_length(const CombMap& map, const TorusParams& p) {
    check_admissible(p);
    int best = -1;
    for (PathKind kind : {PathKind::DiagA, PathKind::DiagB}) {
        int v = 0;
        for (int r = 0; r < p.j; ++r) {
            int next = path_step(p, v, kind);
            if (!map.has_edge(v, next)) throw Error(ErrorCode::RuleMismatch, "diagonal step is not an edge");
            v = next;
        }
        const int landing = v % p.i;  // v is on row 0
        const int back = kind == PathKind::DiagA ? (p.i - landing) % p.i : landing;
        const int len = p.j + back;
        if (best < 0 || len < best) best = len;
    }
    return best;
}

int q4_length(const TorusParams& p) { return q4_length(build_torus_map(p), p); }

CycleType cycle_type(const CombMap& map, const TorusParams& p) {
    check_admissible(p);
    const int n = p.i * p.j;
    CycleType ct;
    std::set<int> horiz;
    std::map<PathKind, std::set<int>> diag;
    for (int v = 0; v < n; ++v) {
        horiz.insert(trace_cycle(map, p, v, PathKind::Horizontal));
        diag[PathKind::DiagA].insert(trace_cycle(map, p, v, PathKind::DiagA));
        diag[PathKind::DiagB].insert(trace_cycle(map, p, v, PathKind::DiagB));
    }
    if (horiz.size() != 1) throw Error(ErrorCode::RuleMismatch, p.str() + ": horizontal cycles differ in length");
    if (diag[PathKind::DiagA].size() != 1 || diag[PathKind::DiagB].size() != 1)
        throw Error(ErrorCode::RuleMismatch, p.str() + ": diagonal cycle length depends on the start vertex");
    ct.l1 = *horiz.begin();
    int a = *diag[PathKind::DiagA].begin(), b = *diag[PathKind::DiagB].begin();
    ct.l_lo = std::min(a, b);
    ct.l_hi = std::max(a, b);
    ct.l4 = q4_length(map, p);
    return ct;
}

CycleType cycle_type(const TorusParams& p) { return cycle_type(build_torus_map(p), p); }

std::vector<TorusClass> classify(int type, int n) {
    std::vector<TorusClass> out;
    for (const auto& p : enumerate_admissible(type, n)) {
        CycleType ct = cycle_type(p);
        auto it = std::find_if(out.begin(), out.end(), [&](const TorusClass& c) { return c.type == ct; });
        if (it == out.end()) out.push_back({ct, {p}});
        else it->members.push_back(p);
    }
    return out;
}

bool is_noncontractible(const CombMap& map, const std::vector<int>& cycle) {
    const int len = static_cast<int>(cycle.size());
    if (len < 3) throw Error(ErrorCode::NotACycle, "cycle needs at least 3 vertices");
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (static_cast<int>(distinct.size()) != len) throw Error(ErrorCode::NotACycle, "cycle repeats a vertex");
    std::set<int> cut;  // darts on the cycle, both directions
    for (int t = 0; t < len; ++t) {
        int d = map.find_dart(cycle[t], cycle[(t + 1) % len]);
        if (d < 0) throw Error(ErrorCode::NotACycle, "consecutive vertices are not adjacent");
        cut.insert(d);
        cut.insert(map.alpha(d));
    }
    // Components of faces glued across uncut edges.
    std::vector<int> comp(map.face_count(), -1);
    int ncomp = 0;
    for (int f0 = 0; f0 < map.face_count(); ++f0) {
        if (comp[f0] >= 0) continue;
        comp[f0] = ncomp;
        std::vector<int> stack{f0};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int d = 0; d < map.dart_count(); ++d) {
                if (map.face_of(d) != f || cut.count(d)) continue;
                int g = map.face_of(map.alpha(d));
                if (comp[g] < 0) {
                    comp[g] = ncomp;
                    stack.push_back(g);
                }
            }
        }
        ++ncomp;
    }
    if (ncomp == 1) return true;
    for (int c = 0; c < ncomp; ++c) {
        std::set<int> verts;
        std::set<std::pair<int, int>> edges;
        int faces = 0;
        for (int f = 0; f < map.face_count(); ++f) {
            if (comp[f] != c) continue;
            ++faces;
            const auto& fv = map.faces()[f];
            for (std::size_t t = 0; t < fv.size(); ++t) {
                verts.insert(fv[t]);
                edges.insert(std::minmax(fv[t], fv[(t + 1) % fv.size()]));
            }
        }
        if (static_cast<int>(verts.size()) - static_cast<int>(edges.size()) + faces == 1) return false;
    }
    return true;
}

}  // namespace dsem
