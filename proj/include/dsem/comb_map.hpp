#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "dsem/face_seq.hpp"

namespace dsem {

// Closed orientable polygonal map in dart form.
//
// A dart is a directed edge u->v lying on the boundary of the face to its left.
// phi is the face successor, alpha reverses the dart, and
// sigma(d) = alpha(phi^-1(d)) is the counterclockwise successor around the
// origin vertex. Faces are the orbits of phi = sigma^-1 . alpha.
class CombMap {
public:
    int dart_count() const { return static_cast<int>(alpha_.size()); }
    int vertex_count() const { return static_cast<int>(vertex_dart_.size()); }
    int edge_count() const { return dart_count() / 2; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    int alpha(int d) const { return alpha_[d]; }
    int sigma(int d) const { return sigma_[d]; }
    int sigma_inv(int d) const { return sigma_inv_[d]; }
    int phi(int d) const { return phi_[d]; }
    int origin(int d) const { return origin_[d]; }
    int head(int d) const { return origin_[alpha_[d]]; }
    int face_of(int d) const { return face_of_[d]; }
    // Some dart leaving vertex v.
    int vertex_dart(int v) const { return vertex_dart_[v]; }

    // Face boundaries as oriented vertex cycles.
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    int face_size(int f) const { return static_cast<int>(faces_[f].size()); }

    // Darts leaving v in counterclockwise order.
    std::vector<int> darts_around(int v) const;
    // Neighbouring vertices of v in counterclockwise order.
    std::vector<int> neighbors(int v) const;
    // Link cycle of v: vertices of the incident faces other than v, counterclockwise.
    std::vector<int> link_vertices(int v) const;
    // True when the undirected edge {u,v} exists.
    bool has_edge(int u, int v) const;
    // Dart u->v, or -1.
    int find_dart(int u, int v) const;

    void check_vertex(int v) const;

private:
    friend CombMap build_map(const std::vector<std::vector<int>>& face_lists);

    std::vector<int> alpha_, sigma_, sigma_inv_, phi_, origin_, face_of_;
    std::vector<int> vertex_dart_;
    std::vector<std::vector<int>> faces_;
};

// Builds a closed map from face cycles. Vertex ids must be 0..V-1. Face
// orientations are made coherent if possible.
CombMap build_map(const std::vector<std::vector<int>>& face_lists);

FaceSeq face_sequence(const CombMap& map, int vertex);

// class_of maps a vertex id to its letter.
LinkSeq link_sequence(const CombMap& map, int vertex, const std::function<Letter(int)>& class_of);

// Labels vertices with F1/F2 using the project convention (F1 = smaller FaceSeq).
// Throws NotTwoClasses unless exactly two face-sequences occur.
struct TwoClassLabeling {
    FaceSeq f1, f2;
    std::vector<Letter> letter;
};
TwoClassLabeling label_two_classes(const CombMap& map);

int euler_characteristic(const CombMap& map);

// Canonical dart code: minimum over all start darts and both orientations of
// the breadth-first relabeling code.
std::vector<int> canonical_form(const CombMap& map);
bool is_isomorphic(const CombMap& m1, const CombMap& m2);

bool is_polyhedral(const CombMap& map);

// {"vertices": V, "faces": [[...], ...]}
std::string map_to_json(const CombMap& map);
CombMap map_from_json(const std::string& text);
// OFF export; coords gives one (x, y, z) triple per vertex.
std::string map_to_off(const CombMap& map, const std::vector<std::array<double, 3>>& coords);

}  // namespace dsem
