#include "dsem/curvature.hpp"

#include <algorithm>
#include <set>

namespace dsem {

Rational curvature(const FaceSeq& f) {
    Rational phi(1);
    for (int p : f.entries()) phi += Rational(1, p) - Rational(1, 2);
    return phi;
}

namespace {

// Curvature in integer units of 1/L with L = lcm(1..kMaxPolygon).
// Each entry contributes L/2 - L/p; zero curvature means the contributions sum to L.
constexpr long long kL = 219060189739591200LL;

long long weight(int p) { return kL / 2 - kL / p; }

void multisets(std::vector<int>& cur, long long left, int q, std::set<FaceSeq>& out) {
    const int remaining = q - static_cast<int>(cur.size());
    if (remaining == 0) {
        if (left == 0) {
            std::vector<int> perm = cur;
            do {
                out.insert(FaceSeq(perm));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        return;
    }
    const int lo = cur.empty() ? 3 : cur.back();
    for (int p = lo; p <= kMaxPolygon; ++p) {
        // Entries are non-decreasing, so the remaining weights lie in [weight(p), weight(kMaxPolygon)].
        if (weight(p) * remaining > left) break;
        if (weight(p) + weight(kMaxPolygon) * (remaining - 1) < left) continue;
        cur.push_back(p);
        multisets(cur, left - weight(p), q, out);
        cur.pop_back();
    }
}

void sequences(std::vector<int>& cur, long long left, int q, std::set<FaceSeq>& out) {
    const int remaining = q - static_cast<int>(cur.size());
    if (remaining == 0) {
        if (left == 0) out.insert(FaceSeq(cur));
        return;
    }
    for (int p = 3; p <= kMaxPolygon; ++p) {
        long long rest = left - weight(p);
        if (rest < weight(3) * (remaining - 1)) break;
        if (rest > weight(kMaxPolygon) * (remaining - 1)) continue;
        cur.push_back(p);
        sequences(cur, rest, q, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<FaceSeq> zero_curvature_face_sequences() {
    std::set<FaceSeq> out;
    for (int q = 3; q <= kMaxDegree; ++q) {
        std::vector<int> cur;
        multisets(cur, kL, q, out);
    }
    return {out.begin(), out.end()};
}

std::vector<FaceSeq> zero_curvature_face_sequences_direct() {
    std::set<FaceSeq> out;
    for (int q = 3; q <= kMaxDegree; ++q) {
        std::vector<int> cur;
        sequences(cur, kL, q, out);
    }
    return {out.begin(), out.end()};
}

bool edge_compatible(const FaceSeq& a, const FaceSeq& b) {
    auto corners = [](const FaceSeq& f) {
        std::set<std::pair<int, int>> s;
        const auto& e = f.entries();
        for (std::size_t i = 0; i < e.size(); ++i) s.insert(std::minmax(e[i], e[(i + 1) % e.size()]));
        return s;
    };
    auto ca = corners(a), cb = corners(b);
    for (const auto& c : ca)
        if (cb.count(c)) return true;
    return false;
}

std::vector<std::pair<FaceSeq, FaceSeq>> candidate_pairs() {
    auto xs = zero_curvature_face_sequences();
    std::vector<std::pair<FaceSeq, FaceSeq>> out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (edge_compatible(xs[i], xs[j])) out.push_back({xs[i], xs[j]});
    return out;
}

}  // namespace dsem
