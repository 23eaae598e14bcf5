#include "dsem/tables.hpp"

#include <sstream>

#include "dsem/torus.hpp"

namespace dsem {

std::vector<int> table_sizes(int type, int count) {
    std::vector<int> out;
    for (int n = 1; static_cast<int>(out.size()) < count; ++n)
        if (!enumerate_admissible(type, n).empty()) out.push_back(n);
    return out;
}

std::string members_str(const std::vector<TorusParams>& members) {
    std::string s;
    for (const auto& p : members)
        s += (s.empty() ? "M(" : ", M(") + std::to_string(p.i) + "," + std::to_string(p.j) + "," + std::to_string(p.k) + ")";
    return s;
}

std::string table_tsv(int type) {
    std::ostringstream os;
    os << "n\tclass_members\tcycle_type\tclass_count\n";
    int total = 0;
    for (int n : table_sizes(type)) {
        const auto classes = classify(type, n);
        for (std::size_t c = 0; c < classes.size(); ++c) {
            os << n << '\t' << members_str(classes[c].members) << '\t' << classes[c].type.str() << '\t';
            if (c == 0) os << classes.size();
            os << '\n';
        }
        total += static_cast<int>(classes.size());
    }
    os << "total\t\t\t" << total << '\n';
    return os.str();
}

int table_total(int type) {
    int total = 0;
    for (int n : table_sizes(type)) total += static_cast<int>(classify(type, n).size());
    return total;
}

}  // namespace dsem
