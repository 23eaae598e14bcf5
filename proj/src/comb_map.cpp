#include "dsem/comb_map.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dsem/errors.hpp"

namespace dsem {

namespace {

struct EdgeUse {
    int face;
    int pos;
    bool forward;  // appears as (min, max) in face order
};

std::vector<std::vector<int>> orient_faces(const std::vector<std::vector<int>>& faces,
                                           const std::map<std::pair<int, int>, std::vector<EdgeUse>>& uses) {
    const int nf = static_cast<int>(faces.size());
    std::vector<std::vector<std::pair<int, bool>>> adj(nf);  // (other face, needs opposite sign)
    for (const auto& [key, list] : uses) {
        const EdgeUse& a = list[0];
        const EdgeUse& b = list[1];
        // Coherent orientation needs the two uses to run in opposite directions.
        bool same_dir = a.forward == b.forward;
        adj[a.face].push_back({b.face, same_dir});
        adj[b.face].push_back({a.face, same_dir});
    }
    std::vector<int> sign(nf, 0);
    for (int s = 0; s < nf; ++s) {
        if (sign[s] != 0) continue;
        sign[s] = 1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (auto [g, flip] : adj[f]) {
                int want = flip ? -sign[f] : sign[f];
                if (sign[g] == 0) {
                    sign[g] = want;
                    stack.push_back(g);
                } else if (sign[g] != want) {
                    throw Error(ErrorCode::InconsistentRotation, "faces cannot be oriented coherently");
                }
            }
        }
    }
    std::vector<std::vector<int>> out = faces;
    for (int f = 0; f < nf; ++f)
        if (sign[f] < 0) std::reverse(out[f].begin(), out[f].end());
    return out;
}

}  // namespace

CombMap build_map(const std::vector<std::vector<int>>& face_lists) {
    if (face_lists.empty()) throw Error(ErrorCode::DisconnectedMap, "no faces");
    int max_id = -1;
    std::map<std::pair<int, int>, std::vector<EdgeUse>> uses;
    for (int f = 0; f < static_cast<int>(face_lists.size()); ++f) {
        const auto& face = face_lists[f];
        if (face.size() < 3) throw Error(ErrorCode::NonManifold, "face " + std::to_string(f) + " has fewer than 3 vertices");
        for (std::size_t i = 0; i < face.size(); ++i) {
            int u = face[i], v = face[(i + 1) % face.size()];
            if (u < 0) throw Error(ErrorCode::UnknownVertex, "negative vertex id");
            if (u == v) throw Error(ErrorCode::NonManifold, "loop edge at vertex " + std::to_string(u));
            max_id = std::max(max_id, u);
            auto key = std::minmax(u, v);
            uses[{key.first, key.second}].push_back({f, static_cast<int>(i), u < v});
        }
    }
    for (const auto& [key, list] : uses) {
        if (list.size() != 2)
            throw Error(ErrorCode::NonManifold, "edge {" + std::to_string(key.first) + "," + std::to_string(key.second) +
                                                    "} lies in " + std::to_string(list.size()) + " face(s)");
    }
    std::vector<std::vector<int>> faces = orient_faces(face_lists, uses);

    CombMap m;
    m.faces_ = faces;
    std::map<std::pair<int, int>, int> dart_of;
    std::vector<int> face_start;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        face_start.push_back(static_cast<int>(m.origin_.size()));
        const int n = static_cast<int>(faces[f].size());
        for (int i = 0; i < n; ++i) {
            int d = static_cast<int>(m.origin_.size());
            m.origin_.push_back(faces[f][i]);
            m.face_of_.push_back(f);
            m.phi_.push_back(face_start[f] + (i + 1) % n);
            if (!dart_of.emplace(std::make_pair(faces[f][i], faces[f][(i + 1) % n]), d).second)
                throw Error(ErrorCode::InconsistentRotation, "directed edge repeated");
        }
    }
    const int nd = static_cast<int>(m.origin_.size());
    m.alpha_.resize(nd);
    for (const auto& [uv, d] : dart_of) m.alpha_[d] = dart_of.at({uv.second, uv.first});
    std::vector<int> phi_inv(nd);
    for (int d = 0; d < nd; ++d) phi_inv[m.phi_[d]] = d;
    m.sigma_.resize(nd);
    m.sigma_inv_.resize(nd);
    for (int d = 0; d < nd; ++d) m.sigma_[d] = m.alpha_[phi_inv[d]];
    for (int d = 0; d < nd; ++d) m.sigma_inv_[m.sigma_[d]] = d;

    // One rotation cycle per vertex.
    m.vertex_dart_.assign(max_id + 1, -1);
    std::vector<char> seen(nd, 0);
    for (int d = 0; d < nd; ++d) {
        if (seen[d]) continue;
        int v = m.origin_[d];
        if (m.vertex_dart_[v] != -1)
            throw Error(ErrorCode::InconsistentRotation, "vertex " + std::to_string(v) + " has a pinched rotation");
        m.vertex_dart_[v] = d;
        int e = d;
        do {
            seen[e] = 1;
            e = m.sigma_[e];
        } while (e != d);
    }
    for (int v = 0; v <= max_id; ++v)
        if (m.vertex_dart_[v] == -1) throw Error(ErrorCode::DisconnectedMap, "vertex " + std::to_string(v) + " is isolated");

    std::vector<char> reach(nd, 0);
    std::vector<int> stack{0};
    reach[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int e : {m.alpha_[d], m.sigma_[d]}) {
            if (!reach[e]) {
                reach[e] = 1;
                ++count;
                stack.push_back(e);
            }
        }
    }
    if (count != nd) throw Error(ErrorCode::DisconnectedMap, "map has more than one component");
    return m;
}

void CombMap::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
}

std::vector<int> CombMap::darts_around(int v) const {
    check_vertex(v);
    std::vector<int> out;
    int d = vertex_dart_[v];
    int e = d;
    do {
        out.push_back(e);
        e = sigma_[e];
    } while (e != d);
    return out;
}

std::vector<int> CombMap::neighbors(int v) const {
    std::vector<int> out;
    for (int d : darts_around(v)) out.push_back(head(d));
    return out;
}

std::vector<int> CombMap::link_vertices(int v) const {
    std::vector<int> out;
    for (int d : darts_around(v)) {
        // Walk the face left of d from head(d) up to, not including, the head of sigma(d).
        int e = phi_[d];
        int stop = alpha_[sigma_[d]];
        out.push_back(head(d));
        while (phi_[e] != stop && e != stop) {
            out.push_back(head(e));
            e = phi_[e];
        }
    }
    return out;
}

bool CombMap::has_edge(int u, int v) const { return find_dart(u, v) >= 0; }

int CombMap::find_dart(int u, int v) const {
    if (u < 0 || u >= vertex_count()) return -1;
    for (int d : darts_around(u))
        if (head(d) == v) return d;
    return -1;
}

FaceSeq face_sequence(const CombMap& map, int vertex) {
    std::vector<int> sizes;
    for (int d : map.darts_around(vertex)) sizes.push_back(map.face_size(map.face_of(d)));
    return FaceSeq(std::move(sizes));
}

LinkSeq link_sequence(const CombMap& map, int vertex, const std::function<Letter(int)>& class_of) {
    map.check_vertex(vertex);
    std::set<FaceSeq> classes;
    for (int v = 0; v < map.vertex_count(); ++v) classes.insert(face_sequence(map, v));
    if (classes.size() != 2)
        throw Error(ErrorCode::NotTwoClasses, "map has " + std::to_string(classes.size()) + " vertex face-sequence(s)");
    std::vector<Letter> word;
    for (int u : map.link_vertices(vertex)) word.push_back(class_of(u));
    return LinkSeq(std::move(word));
}

TwoClassLabeling label_two_classes(const CombMap& map) {
    std::vector<FaceSeq> fs;
    std::set<FaceSeq> classes;
    for (int v = 0; v < map.vertex_count(); ++v) {
        fs.push_back(face_sequence(map, v));
        classes.insert(fs.back());
    }
    if (classes.size() != 2)
        throw Error(ErrorCode::NotTwoClasses, "map has " + std::to_string(classes.size()) + " vertex face-sequence(s)");
    TwoClassLabeling out{*classes.begin(), *classes.rbegin(), {}};
    for (const auto& f : fs) out.letter.push_back(f == out.f1 ? Letter::F1 : Letter::F2);
    return out;
}

int euler_characteristic(const CombMap& map) {
    return map.vertex_count() - map.edge_count() + map.face_count();
}

namespace {

// Breadth-first relabeling from start. With `best` non-empty, stops as soon
// as the code is known to exceed it; returns -1, 0, 1 relative to best.
int relabel_code(const CombMap& m, int start, bool reversed, const std::vector<int>& best, std::vector<int>& code) {
    const int nd = m.dart_count();
    std::vector<int> label(nd, -1);
    std::vector<int> order;
    order.reserve(nd);
    label[start] = 0;
    order.push_back(start);
    code.clear();
    code.reserve(2 * nd);
    bool tied = !best.empty();
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        int d = order[idx];
        for (int g : {m.alpha(d), reversed ? m.sigma_inv(d) : m.sigma(d)}) {
            if (label[g] < 0) {
                label[g] = static_cast<int>(order.size());
                order.push_back(g);
            }
            code.push_back(label[g]);
            if (tied) {
                int c = code.back(), b = best[code.size() - 1];
                if (c > b) return 1;
                if (c < b) tied = false;
            }
        }
    }
    if (best.empty()) return -1;
    return tied ? 0 : -1;
}

}  // namespace

std::vector<int> canonical_form(const CombMap& map) {
    std::vector<int> best, code;
    for (int rev = 0; rev < 2; ++rev) {
        for (int d = 0; d < map.dart_count(); ++d) {
            if (relabel_code(map, d, rev == 1, best, code) < 0) best = code;
        }
    }
    return best;
}

bool is_isomorphic(const CombMap& m1, const CombMap& m2) {
    if (m1.dart_count() != m2.dart_count() || m1.vertex_count() != m2.vertex_count() ||
        m1.face_count() != m2.face_count())
        return false;
    auto profile = [](const CombMap& m) {
        std::vector<std::pair<int, int>> sizes;
        for (int f = 0; f < m.face_count(); ++f) sizes.push_back({0, m.face_size(f)});
        for (int v = 0; v < m.vertex_count(); ++v) sizes.push_back({1, static_cast<int>(m.darts_around(v).size())});
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    };
    if (profile(m1) != profile(m2)) return false;
    std::vector<int> target, code;
    relabel_code(m1, 0, false, {}, target);
    for (int rev = 0; rev < 2; ++rev)
        for (int d = 0; d < m2.dart_count(); ++d)
            if (relabel_code(m2, d, rev == 1, target, code) == 0) return true;
    return false;
}

bool is_polyhedral(const CombMap& map) {
    const auto& faces = map.faces();
    std::vector<std::set<int>> vsets;
    for (const auto& f : faces) {
        std::set<int> s(f.begin(), f.end());
        if (s.size() != f.size()) return false;
        vsets.push_back(std::move(s));
    }
    auto is_side = [](const std::vector<int>& f, int a, int b) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            int u = f[i], v = f[(i + 1) % f.size()];
            if ((u == a && v == b) || (u == b && v == a)) return true;
        }
        return false;
    };
    for (std::size_t f = 0; f < faces.size(); ++f) {
        for (std::size_t g = f + 1; g < faces.size(); ++g) {
            std::vector<int> common;
            std::set_intersection(vsets[f].begin(), vsets[f].end(), vsets[g].begin(), vsets[g].end(),
                                  std::back_inserter(common));
            if (common.size() <= 1) continue;
            if (common.size() > 2) return false;
            if (!is_side(faces[f], common[0], common[1]) || !is_side(faces[g], common[0], common[1])) return false;
        }
    }
    return true;
}

std::string map_to_json(const CombMap& map) {
    nlohmann::json j;
    j["vertices"] = map.vertex_count();
    j["faces"] = map.faces();
    return j.dump();
}

CombMap map_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!j.contains("faces") || !j["faces"].is_array()) throw Error(ErrorCode::ParseError, "missing faces array");
    auto faces = j["faces"].get<std::vector<std::vector<int>>>();
    CombMap m = build_map(faces);
    if (j.contains("vertices") && j["vertices"].get<int>() != m.vertex_count())
        throw Error(ErrorCode::DisconnectedMap, "declared vertex count does not match faces");
    return m;
}

std::string map_to_off(const CombMap& map, const std::vector<std::array<double, 3>>& coords) {
    std::ostringstream os;
    os << "OFF\n" << map.vertex_count() << ' ' << map.face_count() << ' ' << map.edge_count() << '\n';
    for (int v = 0; v < map.vertex_count(); ++v) {
        const auto& c = v < static_cast<int>(coords.size()) ? coords[v] : std::array<double, 3>{0, 0, 0};
        os << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
    }
    for (const auto& f : map.faces()) {
        os << f.size();
        for (int v : f) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

}  // namespace dsem
