#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dsem/face_seq.hpp"
#include "dsem/pair_sets.hpp"

namespace dsem {

using Point = std::array<double, 2>;

// One periodic planar map: a fundamental domain plus two translations.
struct TilingSpec {
    struct Ref {
        int vertex = 0;  // index into vertices
        int a = 0, b = 0;  // translation offsets
        bool operator==(const Ref&) const = default;
    };
    std::string tag;
    std::vector<Point> vertices;
    std::vector<std::vector<Ref>> faces;  // counterclockwise
    std::array<Point, 2> translations{};
    FacePair pair;
    std::map<FaceSeq, LinkSeq> links;
    std::string notes;
};

nlohmann::json spec_to_json(const TilingSpec& spec);
// Throws BadSpec on missing or malformed fields.
TilingSpec spec_from_json(const nlohmann::json& j);
TilingSpec load_spec(const std::string& path);
void save_spec(const TilingSpec& spec, const std::string& path);

// $DSEM_CATALOG_DIR if set, else the shipped data/catalog directory.
std::string catalog_dir();
// All *.json specs in the directory, ordered by type index.
std::vector<TilingSpec> load_catalog(const std::string& dir = catalog_dir());

// A finite map with boundary. Faces are counterclockwise; vertices with the same
// orbit id are images of one another under the tiling's symmetries (-1: none known).
class PlanarPatch {
public:
    // Throws BadSpec when a directed edge repeats, a face repeats a vertex, or
    // a vertex is overlapped by faces.
    PlanarPatch(std::vector<Point> coords, std::vector<std::vector<int>> faces, std::vector<int> orbit);

    int vertex_count() const { return static_cast<int>(coords_.size()); }
    const std::vector<Point>& coords() const { return coords_; }
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    int orbit(int v) const { return orbit_[v]; }
    // The faces around v close up into a full cycle.
    bool interior(int v) const { return interior_[v]; }
    int interior_count() const;

    // Interior vertices only; throws UnknownVertex otherwise.
    FaceSeq face_sequence(int v) const;
    std::vector<int> link_vertices(int v) const;

private:
    std::vector<Point> coords_;
    std::vector<std::vector<int>> faces_;
    std::vector<int> orbit_;
    std::vector<char> interior_;
    std::vector<std::vector<int>> fan_;  // faces at v in rotation order
};

// Tiles the domain reps_x by reps_y times; faces that leave the block are dropped.
PlanarPatch expand_patch(const TilingSpec& spec, int reps_x, int reps_y);

struct CatalogReport {
    bool pass = false;
    std::vector<std::string> problems;
    int interior = 0;
    std::map<FaceSeq, int> class_counts;  // interior vertices per face-sequence
};

// Checks every interior vertex against the declared pair and link words. Link
// vertices on the boundary take the class of an interior vertex of their orbit.
CatalogReport verify_patch(const PlanarPatch& patch, const FacePair& pair, const std::map<FaceSeq, LinkSeq>& links);
// Expands a 4x4 block and verifies it; also requires zero curvature of the pair.
CatalogReport verify_spec(const TilingSpec& spec);

// Square-strip variants of the (3.4^2.6, 3.6.3.6) family: in H1 the triangles of the
// bands above and below a square row line up, in H2 they are offset by one edge.
enum class Strip { H1, H2 };
using StripWord = std::vector<Strip>;

// Accepts "H1,H2", "H1.H2", "H1 H2" or "H1H2"; throws BadWord.
StripWord parse_strip_word(std::string_view text);
std::string strip_word_str(const StripWord& word);

// Hexagon-triangle bands separated by square rows, one row per letter, the word
// repeated reps times.
PlanarPatch build_t22(const StripWord& word, int reps);
// Counts the complete square rows of each kind, read off the faces alone.
std::map<Strip, int> strip_profile(const PlanarPatch& patch);
// Declared pair and links of the family.
FacePair t22_pair();
std::map<FaceSeq, LinkSeq> t22_links();

// SVG drawing: faces shaded by size, interior vertices colored by face-sequence.
std::string render_svg(const PlanarPatch& patch, const FacePair& pair);

}  // namespace dsem
