#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dsem/comb_map.hpp"
#include "dsem/types.hpp"

namespace dsem {

// M(i,j,k): j rows of i vertices; row j-1 glues to row 0 with column shift k.
struct TorusParams {
    int type = 1;  // 1..4
    int i = 0;
    int j = 0;
    int k = 0;

    auto operator<=>(const TorusParams&) const = default;
    std::string str() const;  // "T1 M(4,3,0)"
};

bool is_admissible(const TorusParams& p);
void check_admissible(const TorusParams& p);

// All (i,j,k) with i*j = n admissible for the type, ordered by j then k.
std::vector<TorusParams> enumerate_admissible(int type, int n);

inline int torus_vertex(const TorusParams& p, int r, int c) { return r * p.i + c; }

// Number of triangle strips in one full circuit of the rows.
int tri_strip_count(const TorusParams& p);

// Face cycles of the grid, counterclockwise with rows increasing upward.
std::vector<std::vector<int>> torus_faces(const TorusParams& p);

// Builds the map and checks chi = 0, the class ratio and every vertex link
// against the type's link words; throws TypeVerificationFailed otherwise.
CombMap build_torus_map(const TorusParams& p);

// Shift of the mirror image: k' = (i - k - c) mod i with c the triangle strip count.
TorusParams reflect_shift(const TorusParams& p);
// Smaller of p and its mirror representative.
TorusParams normalize_shift(const TorusParams& p);

}  // namespace dsem
