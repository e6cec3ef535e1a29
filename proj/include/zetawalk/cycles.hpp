#pragma once

#include <functional>
#include <vector>

#include "zetawalk/graph.hpp"

namespace zetawalk {

// A rooted closed path (a_1, ..., a_k): head(a_i) = tail(a_{i+1}) and
// head(a_k) = tail(a_1). Rotations are distinct paths.
struct ClosedPath {
    std::vector<ArcId> arcs;

    std::size_t length() const { return arcs.size(); }
    bool operator==(const ClosedPath&) const = default;
};

// Rotation-equivalence class of closed paths. The representative is the
// lexicographically smallest rotation; period is the smallest r > 0 with
// rotate^r(p) = p (equals the length for prime paths).
struct Cycle {
    ClosedPath representative;
    std::size_t period = 0;

    std::size_t length() const { return representative.length(); }
    bool operator==(const Cycle&) const = default;
};

// Calls fn once for every rooted closed path of length exactly k.
// Enumeration order is deterministic: roots ascending, extensions in
// out-arc order. Exponential in k — oracle use only.
void for_each_closed_path(const SymmetricDigraph& d, std::size_t k,
                          const std::function<void(const ClosedPath&)>& fn);

std::vector<ClosedPath> enumerate_closed_paths(const SymmetricDigraph& d, std::size_t k);

// One-step rotation sigma: (a_1, a_2, ..., a_k) -> (a_2, ..., a_k, a_1).
ClosedPath rotate(const ClosedPath& p);

// Smallest r > 0 with rotate^r(p) = p.
std::size_t rotation_period(const ClosedPath& p);

// Lexicographically minimal rotation of p.
ClosedPath canonical_rotation(const ClosedPath& p);

// True iff p has no cyclic backtracking pair (a_{i+1} = mate(a_i), the pair
// (a_k, a_1) included) and is not a power q^m, m >= 2, of a shorter path.
bool is_prime(const SymmetricDigraph& d, const ClosedPath& p);

// One Cycle per rotation class of prime closed paths of length <= max_len,
// sorted by (length, representative arc sequence).
std::vector<Cycle> enumerate_prime_cycles(const SymmetricDigraph& d, std::size_t max_len);

}  // namespace zetawalk
