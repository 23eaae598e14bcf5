#include "dsem/pair_search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <deque>
#include <optional>
#include <thread>

#include "dsem/curvature.hpp"
#include "dsem/cyclic.hpp"
#include "dsem/errors.hpp"

namespace dsem {

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Contradiction: return "Contradiction";
        case Outcome::Consistent: return "Consistent";
        case Outcome::Undecided: return "Undecided";
    }
    return "?";
}

namespace {

// A disk patch. The boundary is listed with the patch on its left; fan[v] lists the
// faces at v in rotation order so that consecutive faces share an edge at v, and for
// a boundary vertex runs from the face on its outgoing boundary edge to the face on
// its incoming one.
struct Patch {
    std::vector<std::vector<int>> faces;
    std::vector<std::vector<int>> fan;
    std::vector<int> cls;  // -1 while undecided
    std::vector<char> closed, merged;
    std::vector<int> boundary;
    std::array<std::vector<Letter>, 2> pattern;  // canonical link word per class, empty if unseen

    int add_vertex() {
        fan.emplace_back();
        cls.push_back(-1);
        closed.push_back(0);
        merged.push_back(0);
        return static_cast<int>(cls.size()) - 1;
    }
};

// Placements of a linear arc inside a cyclic word (rotation and reflection).
// Collects the entry that would precede the arc for each placement.
bool fits(const std::vector<int>& arc, const std::vector<int>& word, std::vector<int>* before = nullptr) {
    const int q = static_cast<int>(word.size());
    const int len = static_cast<int>(arc.size());
    if (len > q) return false;
    bool found = false;
    for (int r = 0; r < q; ++r)
        for (int d : {1, -1}) {
            bool ok = true;
            for (int t = 0; t < len && ok; ++t) ok = arc[t] == word[((r + d * t) % q + q) % q];
            if (!ok) continue;
            found = true;
            if (before && len < q) before->push_back(word[((r - d) % q + q) % q]);
        }
    return found;
}

// Completes a partial cyclic word (-1 = unknown) to `pattern`: returns false when no
// placement fits, otherwise fills the positions on which every fitting placement agrees.
bool complete_partial(std::vector<int>& partial, const std::vector<Letter>& pattern) {
    const int n = static_cast<int>(pattern.size());
    if (static_cast<int>(partial.size()) != n) return false;
    std::vector<int> agreed(n, -2);
    bool any = false;
    for (int r = 0; r < n; ++r)
        for (int d : {1, -1}) {
            auto at = [&](int t) { return static_cast<int>(pattern[((r + d * t) % n + n) % n]); };
            bool ok = true;
            for (int t = 0; t < n && ok; ++t) ok = partial[t] < 0 || partial[t] == at(t);
            if (!ok) continue;
            any = true;
            for (int t = 0; t < n; ++t) agreed[t] = agreed[t] == -2 || agreed[t] == at(t) ? at(t) : -1;
        }
    if (!any) return false;
    for (int t = 0; t < n; ++t)
        if (partial[t] < 0) partial[t] = agreed[t];
    return true;
}

class Search {
public:
    Search(const FaceSeq& f1, const FaceSeq& f2, int radius, std::int64_t budget)
        : radius_(radius), budget_(budget) {
        const bool swap = f2 < f1;
        words_[0] = (swap ? f2 : f1).entries();
        words_[1] = (swap ? f1 : f2).entries();
        seed_class_ = swap ? 1 : 0;
    }

    Verdict run() {
        Patch st;
        start(st);
        if (exhausted_) verdict_.outcome = Outcome::Undecided;
        else if (!verdict_.combos.empty()) verdict_.outcome = Outcome::Consistent;
        else verdict_.outcome = Outcome::Contradiction;
        return verdict_;
    }

    // Searches only for patches with the given link words and stops at the first one.
    std::optional<PatchWitness> find_witness(const LinkCombo& combo) {
        Patch st;
        st.pattern[0] = combo.first.word();
        st.pattern[1] = combo.second.word();
        witness_mode_ = true;
        start(st);
        return witness_;
    }

private:
    void start(Patch& st) {
        const int s = words_[seed_class_].front();
        st.faces.emplace_back();
        for (int i = 0; i < s; ++i) {
            int v = st.add_vertex();
            st.faces[0].push_back(v);
            st.fan[v].push_back(0);
            st.boundary.push_back(v);
        }
        st.cls[0] = seed_class_;
        std::deque<int> work(st.boundary.begin(), st.boundary.end());
        if (propagate(st, work)) grow(st);
    }

    bool halted() const { return exhausted_ || witness_.has_value(); }

    static PatchWitness make_witness(const Patch& st) {
        PatchWitness w;
        std::vector<int> id(st.cls.size(), -1);
        for (std::size_t v = 0; v < st.cls.size(); ++v)
            if (!st.merged[v]) {
                id[v] = static_cast<int>(w.cls.size());
                w.cls.push_back(st.cls[v]);
                w.interior.push_back(st.closed[v]);
            }
        for (const auto& fv : st.faces) {
            std::vector<int> f;
            for (int v : fv) f.push_back(id[v]);
            w.faces.push_back(std::move(f));
        }
        return w;
    }

    std::vector<int> arc(const Patch& st, int v) const {
        std::vector<int> a;
        a.reserve(st.fan[v].size());
        for (int f : st.fan[v]) a.push_back(static_cast<int>(st.faces[f].size()));
        return a;
    }

    static std::vector<int> neighbors(const Patch& st, int v) {
        std::vector<int> out;
        for (int f : st.fan[v]) {
            const auto& fv = st.faces[f];
            const int p = static_cast<int>(fv.size());
            for (int i = 0; i < p; ++i)
                if (fv[i] == v) {
                    out.push_back(fv[(i + 1) % p]);
                    out.push_back(fv[(i + p - 1) % p]);
                }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Link vertices of a closed vertex in rotation order.
    static std::vector<int> link(const Patch& st, int v) {
        std::vector<int> out;
        for (int f : st.fan[v]) {
            const auto& fv = st.faces[f];
            const int p = static_cast<int>(fv.size());
            const int i = static_cast<int>(std::find(fv.begin(), fv.end(), v) - fv.begin());
            for (int t = 1; t <= p - 2; ++t) out.push_back(fv[(i + t) % p]);
        }
        return out;
    }

    // Identifies the two boundary neighbours of a vertex whose fan just closed up.
    bool close(Patch& st, int x, std::deque<int>& work) const {
        auto& b = st.boundary;
        const int len = static_cast<int>(b.size());
        if (len <= 3) return false;  // the disk would close into a sphere
        const int pos = static_cast<int>(std::find(b.begin(), b.end(), x) - b.begin());
        const int p = b[(pos + len - 1) % len], n = b[(pos + 1) % len];
        auto np = neighbors(st, p), nn = neighbors(st, n);
        if (std::binary_search(np.begin(), np.end(), n)) return false;
        std::vector<int> common;
        std::set_intersection(np.begin(), np.end(), nn.begin(), nn.end(), std::back_inserter(common));
        if (common != std::vector<int>{x}) return false;
        for (int f : st.fan[p]) {
            auto& fv = st.faces[f];
            if (std::find(fv.begin(), fv.end(), n) != fv.end()) return false;
        }
        if (st.cls[p] >= 0 && st.cls[n] >= 0 && st.cls[p] != st.cls[n]) return false;
        if (st.cls[n] < 0) st.cls[n] = st.cls[p];
        for (int f : st.fan[p]) std::replace(st.faces[f].begin(), st.faces[f].end(), p, n);
        st.fan[n].insert(st.fan[n].end(), st.fan[p].begin(), st.fan[p].end());
        st.fan[p].clear();
        st.merged[p] = 1;
        st.closed[x] = 1;
        b.erase(std::remove_if(b.begin(), b.end(), [&](int v) { return v == x || v == p; }), b.end());
        work.push_back(n);
        return true;
    }

    // Applies forced class choices and closes complete fans until nothing changes.
    bool settle(Patch& st, std::deque<int>& work) const {
        while (!work.empty()) {
            const int v = work.front();
            work.pop_front();
            if (st.merged[v] || st.closed[v]) continue;
            const auto a = arc(st, v);
            if (st.cls[v] >= 0) {
                if (!fits(a, words_[st.cls[v]])) return false;
            } else {
                const bool c0 = fits(a, words_[0]), c1 = fits(a, words_[1]);
                if (!c0 && !c1) return false;
                if (c0 != c1) st.cls[v] = c0 ? 0 : 1;
            }
            if (st.cls[v] >= 0 && a.size() == words_[st.cls[v]].size())
                if (!close(st, v, work)) return false;
        }
        return true;
    }

    // All closed vertices of a class share one link word, and that word names the other class.
    // Link vertices whose class is implied by a known word are assigned and queued.
    bool check_links(Patch& st, std::deque<int>& work) const {
        const int nv = static_cast<int>(st.cls.size());
        for (int v = 0; v < nv; ++v) {
            if (!st.closed[v]) continue;
            const auto lk = link(st, v);
            std::vector<int> letters;
            bool full = true;
            for (int u : lk) {
                letters.push_back(st.cls[u]);
                full = full && st.cls[u] >= 0;
            }
            const int c = st.cls[v];
            auto& pat = st.pattern[c];
            if (!full) {
                if (pat.empty()) continue;
                if (!complete_partial(letters, pat)) return false;
                for (std::size_t t = 0; t < lk.size(); ++t)
                    if (st.cls[lk[t]] < 0 && letters[t] >= 0) {
                        st.cls[lk[t]] = letters[t];
                        work.push_back(lk[t]);
                    } else if (st.cls[lk[t]] >= 0 && letters[t] >= 0 && st.cls[lk[t]] != letters[t]) {
                        return false;  // one vertex listed twice with two implied classes
                    }
                continue;
            }
            if (std::find(letters.begin(), letters.end(), 1 - c) == letters.end()) return false;
            std::vector<Letter> word;
            for (int l : letters) word.push_back(static_cast<Letter>(l));
            word = canonical_cyclic(word);
            if (pat.empty()) pat = word;
            else if (pat != word) return false;
        }
        return true;
    }

    bool propagate(Patch& st, std::deque<int>& work) const {
        do {
            if (!settle(st, work) || !check_links(st, work)) return false;
        } while (!work.empty());
        return true;
    }

    std::vector<int> distances(const Patch& st) const {
        const int nv = static_cast<int>(st.cls.size());
        std::vector<std::vector<int>> adj(nv);
        for (const auto& fv : st.faces) {
            const int p = static_cast<int>(fv.size());
            for (int i = 0; i < p; ++i) {
                adj[fv[i]].push_back(fv[(i + 1) % p]);
                adj[fv[(i + 1) % p]].push_back(fv[i]);
            }
        }
        std::vector<int> dist(nv, -1);
        std::deque<int> q{0};
        dist[0] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : adj[v])
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    q.push_back(u);
                }
        }
        return dist;
    }

    void branch_class(const Patch& st, int v) {
        const auto a = arc(st, v);
        for (int c = 0; c < 2 && !halted(); ++c) {
            if (!fits(a, words_[c])) continue;
            Patch child = st;
            child.cls[v] = c;
            std::deque<int> work{v};
            if (propagate(child, work)) grow(child);
        }
    }

    void grow(const Patch& st) {
        if (++verdict_.nodes > budget_) {
            exhausted_ = true;
            return;
        }
        // Both link words are fixed on this branch, so any leaf below repeats a known combination.
        if (!witness_mode_ && !st.pattern[0].empty() && !st.pattern[1].empty() &&
            verdict_.combos.count({LinkSeq(st.pattern[0]), LinkSeq(st.pattern[1])}))
            return;
        const auto dist = distances(st);
        auto closer = [&](int a, int b) { return std::pair(dist[a], a) < std::pair(dist[b], b); };

        // Classes on the links of closed vertices: the seed's link is decided first, and
        // links whose word is already known next, since propagation leaves them few choices.
        // Other links are left to growth until no vertex within the radius is open.
        auto open_link_vertex = [&](bool all) {
            int open = -1;
            for (int v = 0; v < static_cast<int>(st.cls.size()); ++v) {
                if (!st.closed[v] || dist[v] > radius_) continue;
                if (!all && v != 0 && st.pattern[st.cls[v]].empty()) continue;
                for (int u : link(st, v))
                    if (st.cls[u] < 0 && (open < 0 || closer(u, open))) open = u;
            }
            return open;
        };
        if (int open = open_link_vertex(false); open >= 0) return branch_class(st, open);

        int target = -1;
        for (int v : st.boundary)
            if (dist[v] <= radius_ && (target < 0 || closer(v, target))) target = v;
        if (target < 0) {
            if (int open = open_link_vertex(true); open >= 0) return branch_class(st, open);
            if (witness_mode_) witness_ = make_witness(st);
            else if (!st.pattern[0].empty() && !st.pattern[1].empty())
                verdict_.combos.insert({LinkSeq(st.pattern[0]), LinkSeq(st.pattern[1])});
            return;
        }

        verdict_.depth = std::max(verdict_.depth, dist[target]);
        if (st.cls[target] < 0) return branch_class(st, target);

        std::vector<int> sizes;
        fits(arc(st, target), words_[st.cls[target]], &sizes);
        std::sort(sizes.begin(), sizes.end());
        sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
        for (int s : sizes) {
            if (halted()) return;
            Patch child = st;
            std::deque<int> work;
            add_face(child, target, s, work);
            if (propagate(child, work)) grow(child);
        }
    }

    // Attaches a new face of size s outside the boundary edge leaving x.
    static void add_face(Patch& st, int x, int s, std::deque<int>& work) {
        auto& b = st.boundary;
        const int len = static_cast<int>(b.size());
        const int pos = static_cast<int>(std::find(b.begin(), b.end(), x) - b.begin());
        const int n = b[(pos + 1) % len];
        const int f = static_cast<int>(st.faces.size());
        std::vector<int> fv{n, x};
        std::vector<int> fresh;
        for (int i = 0; i < s - 2; ++i) {
            int w = st.add_vertex();
            st.fan[w].push_back(f);
            fv.push_back(w);
            fresh.push_back(w);
        }
        st.faces.push_back(std::move(fv));
        st.fan[x].insert(st.fan[x].begin(), f);
        st.fan[n].push_back(f);
        st.boundary.insert(st.boundary.begin() + pos + 1, fresh.begin(), fresh.end());
        work.push_back(x);
        work.push_back(n);
        work.insert(work.end(), fresh.begin(), fresh.end());
    }

    std::array<std::vector<int>, 2> words_;
    int seed_class_ = 0;
    int radius_;
    std::int64_t budget_;
    bool exhausted_ = false;
    bool witness_mode_ = false;
    Verdict verdict_;
    std::optional<PatchWitness> witness_;
};

}  // namespace

Verdict search_pair(const FaceSeq& f1, const FaceSeq& f2, int radius, std::int64_t node_budget) {
    if (radius < 1) throw Error(ErrorCode::InvalidRadius, "radius must be at least 1, got " + std::to_string(radius));
    if (f1 == f2) throw Error(ErrorCode::NotTwoClasses, "pair needs two distinct face-sequences");
    return Search(f1, f2, radius, node_budget).run();
}

std::optional<PatchWitness> find_witness(const FaceSeq& f1, const FaceSeq& f2, const LinkCombo& combo, int radius,
                                        std::int64_t node_budget) {
    if (radius < 1) throw Error(ErrorCode::InvalidRadius, "radius must be at least 1, got " + std::to_string(radius));
    if (f1 == f2) throw Error(ErrorCode::NotTwoClasses, "pair needs two distinct face-sequences");
    return Search(f1, f2, radius, node_budget).find_witness(combo);
}

Theorem1Report reproduce_theorem1(int radius, std::int64_t node_budget, int threads) {
    if (radius < 2) throw Error(ErrorCode::InvalidRadius, "theorem sweep needs radius >= 2");
    const auto pairs = candidate_pairs();
    Theorem1Report rep;
    rep.radius = radius;
    rep.results.resize(pairs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < pairs.size();) {
            auto& r = rep.results[i];
            r.pair = ordered_pair(pairs[i].first, pairs[i].second);
            r.verdict = search_pair(r.pair.first, r.pair.second, radius, node_budget);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(1, threads); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    const auto& good = dsem_pairs();
    const auto& bad = excluded_pairs();
    for (auto& r : rep.results) {
        r.listed_dsem = std::find(good.begin(), good.end(), r.pair) != good.end();
        r.listed_excluded = std::find(bad.begin(), bad.end(), r.pair) != bad.end();
        const Outcome o = r.verdict.outcome;
        r.conflict = (r.listed_dsem && r.listed_excluded) || (r.listed_dsem && o == Outcome::Contradiction) ||
                     (!r.listed_dsem && o == Outcome::Consistent);
        switch (o) {
            case Outcome::Contradiction: ++rep.refuted; break;
            case Outcome::Consistent:
                ++rep.consistent;
                rep.total_combos += static_cast<int>(r.verdict.combos.size());
                break;
            case Outcome::Undecided: ++rep.undecided; break;
        }
    }
    return rep;
}

}  // namespace dsem
