#include "dsem/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "dsem/curvature.hpp"
#include "dsem/errors.hpp"
#include "dsem/types.hpp"

namespace dsem {

namespace {

std::string fmt_point(const Point& p) {
    std::ostringstream os;
    os << '(' << p[0] << ", " << p[1] << ')';
    return os.str();
}

std::string num(double x) {
    std::ostringstream os;
    os.precision(10);
    os << (std::abs(x) < 5e-11 ? 0.0 : x);
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------- spec files

nlohmann::json spec_to_json(const TilingSpec& spec) {
    nlohmann::json j;
    j["type"] = spec.tag;
    j["pair"] = {spec.pair.first.str(), spec.pair.second.str()};
    j["links"] = nlohmann::json::object();
    for (const auto& [f, l] : spec.links) j["links"][f.str()] = l.str();
    j["translations"] = {{spec.translations[0][0], spec.translations[0][1]},
                         {spec.translations[1][0], spec.translations[1][1]}};
    j["vertices"] = nlohmann::json::array();
    for (const auto& p : spec.vertices) j["vertices"].push_back({p[0], p[1]});
    j["faces"] = nlohmann::json::array();
    for (const auto& f : spec.faces) {
        nlohmann::json jf = nlohmann::json::array();
        for (const auto& r : f) jf.push_back({r.vertex, r.a, r.b});
        j["faces"].push_back(jf);
    }
    j["notes"] = spec.notes;
    return j;
}

TilingSpec spec_from_json(const nlohmann::json& j) {
    try {
        TilingSpec s;
        s.tag = j.at("type").get<std::string>();
        const auto& pair = j.at("pair");
        if (pair.size() != 2) throw Error(ErrorCode::BadSpec, "pair needs two face-sequences");
        s.pair = ordered_pair(FaceSeq::parse(pair[0].get<std::string>()), FaceSeq::parse(pair[1].get<std::string>()));
        for (const auto& [k, v] : j.at("links").items())
            s.links[FaceSeq::parse(k)] = LinkSeq::parse(v.get<std::string>());
        const auto& t = j.at("translations");
        if (t.size() != 2) throw Error(ErrorCode::BadSpec, "two translations required");
        for (int i = 0; i < 2; ++i) s.translations[i] = {t[i].at(0).get<double>(), t[i].at(1).get<double>()};
        for (const auto& p : j.at("vertices")) s.vertices.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        for (const auto& jf : j.at("faces")) {
            std::vector<TilingSpec::Ref> f;
            for (const auto& r : jf) f.push_back({r.at(0).get<int>(), r.at(1).get<int>(), r.at(2).get<int>()});
            s.faces.push_back(std::move(f));
        }
        if (j.contains("notes")) s.notes = j["notes"].get<std::string>();
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::BadSpec, std::string("malformed spec: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::BadSpec) throw;
        throw Error(ErrorCode::BadSpec, e.what());
    }
}

TilingSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::BadSpec, path + ": " + e.what());
    }
    return spec_from_json(j);
}

void save_spec(const TilingSpec& spec, const std::string& path) {
    // One face or vertex per line keeps the files reviewable in diffs.
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    const auto j = spec_to_json(spec);
    auto point = [](const Point& p) { return "[" + num(p[0]) + ", " + num(p[1]) + "]"; };
    out << "{\n  \"type\": " << j["type"].dump() << ",\n  \"pair\": " << j["pair"].dump() << ",\n  \"links\": "
        << j["links"].dump() << ",\n  \"translations\": [" << point(spec.translations[0]) << ", "
        << point(spec.translations[1]) << "],\n  \"vertices\": [\n";
    for (std::size_t i = 0; i < spec.vertices.size(); ++i)
        out << "    " << point(spec.vertices[i]) << (i + 1 < spec.vertices.size() ? ",\n" : "\n");
    out << "  ],\n  \"faces\": [\n";
    for (std::size_t i = 0; i < spec.faces.size(); ++i)
        out << "    " << j["faces"][i].dump() << (i + 1 < spec.faces.size() ? ",\n" : "\n");
    out << "  ],\n  \"notes\": " << j["notes"].dump() << "\n}\n";
}

std::string catalog_dir() {
    if (const char* env = std::getenv("DSEM_CATALOG_DIR"); env && *env) return env;
    return std::string(DSEM_DATA_DIR) + "/catalog";
}

std::vector<TilingSpec> load_catalog(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw Error(ErrorCode::IoError, "no catalog directory " + dir);
    std::vector<std::string> paths;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") paths.push_back(e.path().string());
    std::vector<TilingSpec> out;
    for (const auto& p : paths) out.push_back(load_spec(p));
    auto key = [](const TilingSpec& s) {
        int idx = 1000;
        if (s.tag.size() > 1 && s.tag[0] == 'T') idx = std::atoi(s.tag.c_str() + 1);
        return std::pair(idx, s.tag);
    };
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    return out;
}

// ---------------------------------------------------------------- patches

PlanarPatch::PlanarPatch(std::vector<Point> coords, std::vector<std::vector<int>> faces, std::vector<int> orbit)
    : coords_(std::move(coords)), faces_(std::move(faces)), orbit_(std::move(orbit)) {
    const int n = vertex_count();
    if (orbit_.empty()) orbit_.assign(n, -1);
    if (static_cast<int>(orbit_.size()) != n) throw Error(ErrorCode::BadSpec, "orbit list size mismatch");

    struct Corner {
        int face, prev, next;
    };
    std::vector<std::vector<Corner>> corners(n);
    std::map<std::pair<int, int>, int> directed;
    for (int fi = 0; fi < static_cast<int>(faces_.size()); ++fi) {
        const auto& f = faces_[fi];
        const int p = static_cast<int>(f.size());
        if (p < 3) throw Error(ErrorCode::BadSpec, "face " + std::to_string(fi) + " has fewer than 3 vertices");
        for (int v : f)
            if (v < 0 || v >= n) throw Error(ErrorCode::BadSpec, "face " + std::to_string(fi) + " names unknown vertex");
        std::vector<int> sorted = f;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(ErrorCode::BadSpec, "face " + std::to_string(fi) + " repeats a vertex");
        for (int i = 0; i < p; ++i) {
            const int u = f[i], v = f[(i + 1) % p];
            if (!directed.emplace(std::pair(u, v), fi).second)
                throw Error(ErrorCode::BadSpec, "edge " + fmt_point(coords_[u]) + " -> " + fmt_point(coords_[v]) +
                                                    " is used twice in the same direction");
            corners[v].push_back({fi, u, f[(i + 2) % p]});
        }
    }

    interior_.assign(n, 0);
    fan_.assign(n, {});
    for (int v = 0; v < n; ++v) {
        const auto& cs = corners[v];
        if (cs.empty()) continue;
        // The face after corner c in rotation order is the one leaving v along c.prev.
        std::map<int, int> by_next;
        for (int i = 0; i < static_cast<int>(cs.size()); ++i) by_next[cs[i].next] = i;
        std::vector<int> order{0};
        for (int cur = 0;;) {
            auto it = by_next.find(cs[cur].prev);
            if (it == by_next.end() || it->second == 0) {
                if (it != by_next.end() && static_cast<int>(order.size()) == static_cast<int>(cs.size()))
                    interior_[v] = 1;
                else if (it != by_next.end())
                    throw Error(ErrorCode::BadSpec, "faces overlap at vertex " + fmt_point(coords_[v]));
                break;
            }
            cur = it->second;
            order.push_back(cur);
        }
        if (interior_[v])
            for (int i : order) fan_[v].push_back(cs[i].face);
    }
}

int PlanarPatch::interior_count() const {
    return static_cast<int>(std::count(interior_.begin(), interior_.end(), 1));
}

FaceSeq PlanarPatch::face_sequence(int v) const {
    if (v < 0 || v >= vertex_count() || !interior_[v])
        throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " is not an interior vertex");
    std::vector<int> sizes;
    for (int f : fan_[v]) sizes.push_back(static_cast<int>(faces_[f].size()));
    return FaceSeq(sizes);
}

std::vector<int> PlanarPatch::link_vertices(int v) const {
    if (v < 0 || v >= vertex_count() || !interior_[v])
        throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " is not an interior vertex");
    std::vector<int> out;
    for (int f : fan_[v]) {
        const auto& fv = faces_[f];
        const int p = static_cast<int>(fv.size());
        const int i = static_cast<int>(std::find(fv.begin(), fv.end(), v) - fv.begin());
        for (int t = 1; t <= p - 2; ++t) out.push_back(fv[(i + t) % p]);
    }
    return out;
}

PlanarPatch expand_patch(const TilingSpec& spec, int reps_x, int reps_y) {
    if (reps_x < 2 || reps_y < 2) throw Error(ErrorCode::BadSpec, "expansion needs at least 2 copies per direction");
    const int nd = static_cast<int>(spec.vertices.size());
    if (nd == 0) throw Error(ErrorCode::BadSpec, "spec has no vertices");
    auto id = [&](int d, int a, int b) { return (a * reps_y + b) * nd + d; };
    std::vector<Point> coords(static_cast<std::size_t>(nd) * reps_x * reps_y);
    std::vector<int> orbit(coords.size());
    for (int a = 0; a < reps_x; ++a)
        for (int b = 0; b < reps_y; ++b)
            for (int d = 0; d < nd; ++d) {
                const auto& p = spec.vertices[d];
                coords[id(d, a, b)] = {p[0] + a * spec.translations[0][0] + b * spec.translations[1][0],
                                       p[1] + a * spec.translations[0][1] + b * spec.translations[1][1]};
                orbit[id(d, a, b)] = d;
            }
    std::vector<std::vector<int>> faces;
    for (int a = 0; a < reps_x; ++a)
        for (int b = 0; b < reps_y; ++b)
            for (const auto& f : spec.faces) {
                std::vector<int> fv;
                for (const auto& r : f) {
                    if (r.vertex < 0 || r.vertex >= nd) throw Error(ErrorCode::BadSpec, "face names unknown vertex");
                    const int x = a + r.a, y = b + r.b;
                    if (x < 0 || x >= reps_x || y < 0 || y >= reps_y) break;
                    fv.push_back(id(r.vertex, x, y));
                }
                if (fv.size() == f.size()) faces.push_back(std::move(fv));
            }
    return PlanarPatch(std::move(coords), std::move(faces), std::move(orbit));
}

// ---------------------------------------------------------------- verification

CatalogReport verify_patch(const PlanarPatch& patch, const FacePair& pair, const std::map<FaceSeq, LinkSeq>& links) {
    CatalogReport rep;
    auto problem = [&](std::string s) {
        if (rep.problems.size() < 20) rep.problems.push_back(std::move(s));
    };
    const int n = patch.vertex_count();
    std::vector<int> cls(n, -1);
    std::map<int, int> orbit_cls;
    std::map<int, bool> orbit_seen_inside;
    for (int v = 0; v < n; ++v) {
        if (patch.orbit(v) >= 0) orbit_seen_inside.emplace(patch.orbit(v), false);
        if (!patch.interior(v)) continue;
        ++rep.interior;
        const FaceSeq f = patch.face_sequence(v);
        ++rep.class_counts[f];
        if (f == pair.first) cls[v] = 0;
        else if (f == pair.second) cls[v] = 1;
        else {
            problem("vertex " + fmt_point(patch.coords()[v]) + " has undeclared face-sequence " + f.str());
            continue;
        }
        if (const int o = patch.orbit(v); o >= 0) {
            orbit_seen_inside[o] = true;
            auto [it, fresh] = orbit_cls.emplace(o, cls[v]);
            if (!fresh && it->second != cls[v])
                problem("orbit " + std::to_string(o) + " mixes both face-sequences");
        }
    }
    for (const auto& [o, seen] : orbit_seen_inside)
        if (!seen) problem("orbit " + std::to_string(o) + " has no interior vertex");
    if (rep.interior == 0) problem("no interior vertices");
    for (const FaceSeq& f : {pair.first, pair.second})
        if (!rep.class_counts.count(f)) problem("no interior vertex realizes " + f.str());

    for (int v = 0; v < n; ++v) {
        if (cls[v] < 0) continue;
        const FaceSeq& f = cls[v] == 0 ? pair.first : pair.second;
        auto want = links.find(f);
        if (want == links.end()) {
            problem("no declared link for " + f.str());
            break;
        }
        std::vector<Letter> word;
        bool known = true;
        for (int u : patch.link_vertices(v)) {
            int c = cls[u];
            if (c < 0 && patch.orbit(u) >= 0 && orbit_cls.count(patch.orbit(u))) c = orbit_cls[patch.orbit(u)];
            if (c < 0) {
                known = false;
                break;
            }
            word.push_back(static_cast<Letter>(c));
        }
        if (!known) {
            problem("vertex " + fmt_point(patch.coords()[v]) + " has a link vertex of unknown class");
            continue;
        }
        const LinkSeq got(word);
        if (got != want->second)
            problem("vertex " + fmt_point(patch.coords()[v]) + " (" + f.str() + ") has link " + got.str() +
                    ", declared " + want->second.str());
    }
    rep.pass = rep.problems.empty();
    return rep;
}

CatalogReport verify_spec(const TilingSpec& spec) {
    CatalogReport rep;
    for (const FaceSeq& f : {spec.pair.first, spec.pair.second})
        if (curvature(f) != Rational(0)) rep.problems.push_back(f.str() + " has nonzero curvature");
    try {
        const PlanarPatch patch = expand_patch(spec, 4, 4);
        CatalogReport inner = verify_patch(patch, spec.pair, spec.links);
        inner.problems.insert(inner.problems.begin(), rep.problems.begin(), rep.problems.end());
        rep = std::move(inner);
    } catch (const Error& e) {
        rep.problems.push_back(e.what());
    }
    rep.pass = rep.problems.empty();
    return rep;
}

// ---------------------------------------------------------------- strip family

StripWord parse_strip_word(std::string_view text) {
    StripWord out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == ',' || c == '.' || c == ' ' || c == '(' || c == ')') {
            ++i;
            continue;
        }
        if ((c == 'H' || c == 'h') && i + 1 < text.size() && (text[i + 1] == '1' || text[i + 1] == '2')) {
            out.push_back(text[i + 1] == '1' ? Strip::H1 : Strip::H2);
            i += 2;
            continue;
        }
        throw Error(ErrorCode::BadWord, "cannot read strip word '" + std::string(text) + "'");
    }
    if (out.empty()) throw Error(ErrorCode::BadWord, "strip word is empty");
    return out;
}

std::string strip_word_str(const StripWord& word) {
    std::string s;
    for (Strip k : word) s += std::string(s.empty() ? "" : ",") + (k == Strip::H1 ? "H1" : "H2");
    return s;
}

FacePair t22_pair() { return ordered_pair(dsem_type(22).f1, dsem_type(22).f2); }

std::map<FaceSeq, LinkSeq> t22_links() {
    const auto& t = dsem_type(22);
    return {{t.f1, t.link_f1}, {t.f2, t.link_f2}};
}

PlanarPatch build_t22(const StripWord& word, int reps) {
    if (word.empty()) throw Error(ErrorCode::BadWord, "strip word is empty");
    if (reps < 2) throw Error(ErrorCode::BadWord, "strip word needs at least 2 repetitions");
    StripWord rows;
    for (int r = 0; r < reps; ++r) rows.insert(rows.end(), word.begin(), word.end());
    const int bands = static_cast<int>(rows.size()) + 1;
    // Band m is shifted right by offset[m] edges; an H2 row flips the shift.
    std::vector<int> offset(bands, 0);
    for (int m = 0; m + 1 < bands; ++m) offset[m + 1] = offset[m] ^ (rows[m] == Strip::H2 ? 1 : 0);

    const double h = std::sqrt(3.0);
    const int hexes = 2 * reps + 2;
    const int width = 2 * hexes;  // x range [0, width] in edge lengths

    std::map<std::pair<int, int>, int> ids;  // (level, 2x) -> vertex
    std::vector<Point> coords;
    std::vector<int> orbit;
    // Level 3m is the lower line of band m, 3m+1 its middle, 3m+2 its upper line.
    auto level_y = [&](int level) { return (level / 3) * (h + 1) + (level % 3) * h / 2; };
    auto vertex = [&](int level, int x2) {
        auto [it, fresh] = ids.emplace(std::pair(level, x2), static_cast<int>(coords.size()));
        if (fresh) {
            coords.push_back({x2 / 2.0, level_y(level)});
            orbit.push_back(level % 3 == 1 ? 1 : 0);
        }
        return it->second;
    };
    std::vector<std::vector<std::pair<int, int>>> shapes;  // faces as (level, 2x)
    for (int m = 0; m < bands; ++m) {
        const int lo = 3 * m, mid = lo + 1, hi = lo + 2, o = 2 * offset[m];
        for (int k = -1; k <= hexes; ++k) {
            const int x = o + 4 * k;  // doubled coordinate of the hexagon's lower left corner
            shapes.push_back({{lo, x}, {lo, x + 2}, {mid, x + 3}, {hi, x + 2}, {hi, x}, {mid, x - 1}});
            shapes.push_back({{mid, x + 3}, {hi, x + 4}, {hi, x + 2}});
            shapes.push_back({{lo, x + 2}, {lo, x + 4}, {mid, x + 3}});
        }
        if (m + 1 < bands)
            for (int x = 0; x < width; ++x)
                shapes.push_back({{hi, 2 * x}, {hi, 2 * x + 2}, {hi + 1, 2 * x + 2}, {hi + 1, 2 * x}});
    }
    std::vector<std::vector<int>> faces;
    for (const auto& s : shapes) {
        const bool inside = std::all_of(s.begin(), s.end(), [&](const auto& p) { return p.second >= 0 && p.second <= 2 * width; });
        if (!inside) continue;
        std::vector<int> f;
        for (const auto& [level, x2] : s) f.push_back(vertex(level, x2));
        faces.push_back(std::move(f));
    }
    return PlanarPatch(std::move(coords), std::move(faces), std::move(orbit));
}

std::map<Strip, int> strip_profile(const PlanarPatch& patch) {
    const auto& faces = patch.faces();
    std::map<std::pair<int, int>, int> edge_face;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
        const auto& f = faces[fi];
        for (std::size_t i = 0; i < f.size(); ++i) edge_face[{f[i], f[(i + 1) % f.size()]}] = fi;
    }
    // Squares joined along edges form the rows; union-find over face ids.
    std::vector<int> parent(faces.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<int> tri_count(faces.size(), 0);
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
        const auto& f = faces[fi];
        if (f.size() != 4) continue;
        for (std::size_t i = 0; i < 4; ++i) {
            auto it = edge_face.find({f[(i + 1) % 4], f[i]});
            if (it == edge_face.end()) continue;
            const auto& g = faces[it->second];
            if (g.size() == 4) parent[find(fi)] = find(it->second);
            if (g.size() == 3) ++tri_count[fi];
        }
    }
    std::map<int, std::pair<bool, bool>> rows;  // root -> (has one-triangle square, has two-triangle square)
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
        const auto& f = faces[fi];
        if (f.size() != 4 || !std::all_of(f.begin(), f.end(), [&](int v) { return patch.interior(v); })) continue;
        auto& r = rows[find(fi)];
        r.first = r.first || tri_count[fi] == 1;
        r.second = r.second || tri_count[fi] == 2;
    }
    std::map<Strip, int> out{{Strip::H1, 0}, {Strip::H2, 0}};
    for (const auto& [root, r] : rows) {
        if (r.first) ++out[Strip::H2];
        else if (r.second) ++out[Strip::H1];
    }
    return out;
}

// ---------------------------------------------------------------- rendering

std::string render_svg(const PlanarPatch& patch, const FacePair& pair) {
    const auto& c = patch.coords();
    double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
    for (const auto& f : patch.faces())
        for (int v : f) {
            x0 = std::min(x0, c[v][0]), x1 = std::max(x1, c[v][0]);
            y0 = std::min(y0, c[v][1]), y1 = std::max(y1, c[v][1]);
        }
    if (x0 > x1) x0 = y0 = 0, x1 = y1 = 1;
    const double scale = 40, pad = 10;
    auto px = [&](double x) { return num(pad + (x - x0) * scale); };
    auto py = [&](double y) { return num(pad + (y1 - y) * scale); };
    auto fill = [](std::size_t p) -> const char* {
        switch (p) {
            case 3: return "#f6d55c";
            case 4: return "#6fa8dc";
            case 6: return "#93c47d";
            case 12: return "#e69138";
            default: return "#cccccc";
        }
    };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(2 * pad + (x1 - x0) * scale) << "\" height=\""
       << num(2 * pad + (y1 - y0) * scale) << "\">\n";
    os << "<title>" << pair.first.str() << " / " << pair.second.str() << "</title>\n";
    for (const auto& f : patch.faces()) {
        os << "<polygon fill=\"" << fill(f.size()) << "\" stroke=\"#333\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << px(c[f[i]][0]) << ',' << py(c[f[i]][1]);
        os << "\"/>\n";
    }
    for (int v = 0; v < patch.vertex_count(); ++v) {
        if (!patch.interior(v)) continue;
        const FaceSeq f = patch.face_sequence(v);
        const char* color = f == pair.first ? "#000000" : f == pair.second ? "#cc0000" : "#ff00ff";
        os << "<circle cx=\"" << px(c[v][0]) << "\" cy=\"" << py(c[v][1]) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace dsem
