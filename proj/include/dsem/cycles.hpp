#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dsem/comb_map.hpp"
#include "dsem/torus.hpp"

namespace dsem {

// Horizontal follows a row. DiagA climbs through triangle strips along the
// diagonal (column +1), DiagB along the upright edge (column +0); both climb
// quad strips along the upright edge.
enum class PathKind { Horizontal, DiagA, DiagB };

const char* path_kind_name(PathKind kind);

struct CycleType {
    int l1 = 0;
    int l_lo = 0;
    int l_hi = 0;
    int l4 = 0;

    auto operator<=>(const CycleType&) const = default;
    std::string str() const;  // "(4, {12,12}, 4)"
};

// Next vertex of the path of the given kind from v.
int path_step(const TorusParams& p, int v, PathKind kind);

// Vertices of the cycle of the given kind through start, beginning at start.
// Every step is checked to be an edge of map; with verify_rules each visited
// vertex is also checked against the local link rules of its kind.
std::vector<int> trace_cycle_vertices(const CombMap& map, const TorusParams& p, int start, PathKind kind,
                                      bool verify_rules = false);
int trace_cycle(const CombMap& map, const TorusParams& p, int start, PathKind kind, bool verify_rules = false);

// Checks the local link rules of all three kinds at every vertex, including
// that DiagB is the mirror of DiagA. Throws RuleMismatch.
void verify_path_rules(const CombMap& map, const TorusParams& p);

// Length of the fourth cycle: one circuit of j rows along a diagonal, closed
// along the base row (DiagA forward, DiagB backward), minimized over both kinds.
int q4_length(const TorusParams& p);
int q4_length(const CombMap& map, const TorusParams& p);

CycleType cycle_type(const TorusParams& p);
CycleType cycle_type(const CombMap& map, const TorusParams& p);

struct TorusClass {
    CycleType type;
    std::vector<TorusParams> members;
};

// Partition of enumerate_admissible(type, n) by cycle-type, classes ordered by first member.
std::vector<TorusClass> classify(int type, int n);

// True when cutting along the cycle does not split off a disk.
bool is_noncontractible(const CombMap& map, const std::vector<int>& cycle);

}  // namespace dsem
