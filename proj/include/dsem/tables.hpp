#pragma once

#include <string>
#include <vector>

#include "dsem/cycles.hpp"

namespace dsem {

// The first `count` vertex counts with at least one admissible M(i,j,k) of the type.
std::vector<int> table_sizes(int type, int count = 4);

// "M(4,3,0), M(4,3,2)"
std::string members_str(const std::vector<TorusParams>& members);

// Tab-separated classification table over table_sizes(type): one row per class with
// columns n, class members, cycle-type, class count (on the first row of each n), then
// a total row.
std::string table_tsv(int type);

// Number of classes over table_sizes(type).
int table_total(int type);

}  // namespace dsem
