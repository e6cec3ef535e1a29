#include "zetawalk/cycles.hpp"

#include <algorithm>
#include <set>

namespace zetawalk {

namespace {

// Depth-first extension of the partial path rooted at path[0]. Emits at
// depth k when the last head returns to the root tail.
void extend(const SymmetricDigraph& d, std::size_t k, std::vector<ArcId>& path,
            const std::function<void(const ClosedPath&)>& fn) {
    if (path.size() == k) {
        if (d.head(path.back()) == d.tail(path.front())) fn(ClosedPath{path});
        return;
    }
    for (ArcId next : d.out_arcs(d.head(path.back()))) {
        path.push_back(next);
        extend(d, k, path, fn);
        path.pop_back();
    }
}

}  // namespace

void for_each_closed_path(const SymmetricDigraph& d, std::size_t k,
                          const std::function<void(const ClosedPath&)>& fn) {
    if (k == 0) throw InputError("closed-path length must be >= 1");
    std::vector<ArcId> path;
    path.reserve(k);
    for (std::size_t root = 0; root < d.n_arcs(); ++root) {
        path.push_back(static_cast<ArcId>(root));
        extend(d, k, path, fn);
        path.pop_back();
    }
}

std::vector<ClosedPath> enumerate_closed_paths(const SymmetricDigraph& d, std::size_t k) {
    std::vector<ClosedPath> out;
    for_each_closed_path(d, k, [&](const ClosedPath& p) { out.push_back(p); });
    return out;
}

ClosedPath rotate(const ClosedPath& p) {
    if (p.arcs.empty()) throw InputError("cannot rotate an empty path");
    ClosedPath q = p;
    std::rotate(q.arcs.begin(), q.arcs.begin() + 1, q.arcs.end());
    return q;
}

std::size_t rotation_period(const ClosedPath& p) {
    const std::size_t k = p.length();
    for (std::size_t r = 1; r < k; ++r) {
        if (k % r != 0) continue;
        bool match = true;
        for (std::size_t i = 0; i < k && match; ++i) match = p.arcs[i] == p.arcs[i % r];
        if (match) return r;
    }
    return k;
}

ClosedPath canonical_rotation(const ClosedPath& p) {
    ClosedPath best = p;
    ClosedPath cur = p;
    for (std::size_t i = 1; i < p.length(); ++i) {
        cur = rotate(cur);
        if (cur.arcs < best.arcs) best = cur;
    }
    return best;
}

bool is_prime(const SymmetricDigraph& d, const ClosedPath& p) {
    const std::size_t k = p.length();
    if (k == 0) return false;
    for (std::size_t i = 0; i < k; ++i) {
        if (p.arcs[(i + 1) % k] == d.mate(p.arcs[i])) return false;
    }
    return rotation_period(p) == k;
}

std::vector<Cycle> enumerate_prime_cycles(const SymmetricDigraph& d, std::size_t max_len) {
    if (max_len == 0) throw InputError("max cycle length must be >= 1");
    std::set<std::vector<ArcId>> reps;
    for (std::size_t k = 1; k <= max_len; ++k) {
        for_each_closed_path(d, k, [&](const ClosedPath& p) {
            if (is_prime(d, p)) reps.insert(canonical_rotation(p).arcs);
        });
    }
    std::vector<Cycle> out;
    out.reserve(reps.size());
    for (const auto& rep : reps) out.push_back(Cycle{ClosedPath{rep}, rep.size()});
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.representative.arcs < b.representative.arcs;
    });
    return out;
}

}  // namespace zetawalk
