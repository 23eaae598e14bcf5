#include "dsem/torus.hpp"

#include <algorithm>
#include <map>

#include "dsem/errors.hpp"

namespace dsem {

std::string TorusParams::str() const {
    return "T" + std::to_string(type) + " M(" + std::to_string(i) + "," + std::to_string(j) + "," +
           std::to_string(k) + ")";
}

bool is_admissible(const TorusParams& p) {
    if (p.type < 1 || p.type > 4) return false;
    const int period = dsem_type(p.type).strip_period();
    return p.i >= 3 && p.j >= period && p.j % period == 0 && p.k >= 0 && p.k < p.i;
}

void check_admissible(const TorusParams& p) {
    if (!is_admissible(p)) throw Error(ErrorCode::InadmissibleParams, p.str());
}

std::vector<TorusParams> enumerate_admissible(int type, int n) {
    std::vector<TorusParams> out;
    if (type < 1 || type > 4 || n < 1) return out;
    for (int j = 1; j <= n; ++j) {
        if (n % j != 0) continue;
        for (int k = 0; k < n / j; ++k) {
            TorusParams p{type, n / j, j, k};
            if (is_admissible(p)) out.push_back(p);
        }
    }
    return out;
}

int tri_strip_count(const TorusParams& p) {
    const auto& layout = dsem_type(p.type).strip_layout;
    int per = static_cast<int>(std::count(layout.begin(), layout.end(), StripKind::Tri));
    return per * (p.j / static_cast<int>(layout.size()));
}

std::vector<std::vector<int>> torus_faces(const TorusParams& p) {
    check_admissible(p);
    const auto& layout = dsem_type(p.type).strip_layout;
    const int period = static_cast<int>(layout.size());
    auto up = [&](int r, int c) {
        // Vertex (r+1, c), wrapping through the seam.
        c = ((c % p.i) + p.i) % p.i;
        if (r + 1 < p.j) return torus_vertex(p, r + 1, c);
        return torus_vertex(p, 0, (c + p.k) % p.i);
    };
    auto at = [&](int r, int c) { return torus_vertex(p, r, ((c % p.i) + p.i) % p.i); };
    std::vector<std::vector<int>> faces;
    for (int r = 0; r < p.j; ++r) {
        for (int c = 0; c < p.i; ++c) {
            if (layout[r % period] == StripKind::Quad) {
                faces.push_back({at(r, c), at(r, c + 1), up(r, c + 1), up(r, c)});
            } else {
                faces.push_back({at(r, c), at(r, c + 1), up(r, c + 1)});
                faces.push_back({at(r, c), up(r, c + 1), up(r, c)});
            }
        }
    }
    return faces;
}

CombMap build_torus_map(const TorusParams& p) {
    CombMap m = build_map(torus_faces(p));
    const DsemType& t = dsem_type(p.type);
    auto fail = [&](const std::string& why) { throw Error(ErrorCode::TypeVerificationFailed, p.str() + ": " + why); };
    if (m.vertex_count() != p.i * p.j) fail("vertex count");
    if (euler_characteristic(m) != 0) fail("Euler characteristic is not 0");
    std::vector<FaceSeq> fs;
    std::map<FaceSeq, int> counts;
    for (int v = 0; v < m.vertex_count(); ++v) {
        fs.push_back(face_sequence(m, v));
        ++counts[fs.back()];
    }
    if (counts.size() != 2 || !counts.count(t.f1) || !counts.count(t.f2)) fail("vertex face-sequences differ from the type pair");
    const FaceSeq s36 = FaceSeq::parse("3^6"), s3344 = FaceSeq::parse("3^3.4^2"), s44 = FaceSeq::parse("4^4");
    bool ratio_ok = true;
    switch (p.type) {
        case 1: ratio_ok = 2 * counts[s36] == counts[s3344]; break;
        case 2: ratio_ok = counts[s36] == counts[s3344]; break;
        case 3: ratio_ok = counts[s3344] == 2 * counts[s44]; break;
        case 4: ratio_ok = counts[s3344] == counts[s44]; break;
    }
    if (!ratio_ok) fail("vertex class ratio");
    auto letter = [&](int v) { return fs[v] == t.f1 ? Letter::F1 : Letter::F2; };
    for (int v = 0; v < m.vertex_count(); ++v) {
        std::vector<Letter> word;
        for (int u : m.link_vertices(v)) word.push_back(letter(u));
        if (LinkSeq(word) != t.link_of(fs[v]))
            fail("vertex " + std::to_string(v) + " has link " + LinkSeq(word).str());
    }
    return m;
}

TorusParams reflect_shift(const TorusParams& p) {
    check_admissible(p);
    TorusParams q = p;
    q.k = (((p.i - p.k - tri_strip_count(p)) % p.i) + p.i) % p.i;
    return q;
}

TorusParams normalize_shift(const TorusParams& p) { return std::min(p, reflect_shift(p)); }

}  // namespace dsem
