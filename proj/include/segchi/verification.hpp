#pragma once

#include "segchi/construction.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace segchi {

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct VerificationReport {
    std::vector<Check> checks;

    bool overall() const {
        for (const Check& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
    void add(std::string name, bool pass, std::string witness = "") {
        checks.push_back({std::move(name), pass, std::move(witness)});
    }
    void merge(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    // One "CHECK <name> PASS|FAIL <witness>" line per check.
    std::string text() const;
};

// Probe conditions 1-4 for every probe against every segment, recomputing
// pierced sets from raw geometry, plus root disjointness and maximality.
// Never trusts the construction's own bookkeeping.
VerificationReport verify_probe_axioms(const Construction& c);

// Pairwise probe disjointness, plus the stronger y-interval disjointness
// the placement guarantees.
VerificationReport verify_disjoint_probes(const Construction& c);

// No endpoint of one segment on another, no three segments through a common
// point, every intersecting pair a proper crossing.
VerificationReport verify_general_position(std::span<const Segment> segments);

// The coloring property that drives the recursion, checked exhaustively:
// every proper partition of the segments into independent sets puts >= k
// parts on some probe's pierced set. Throws TooLarge above the enumeration
// bound.
VerificationReport verify_lemma_property(const Construction& c);

// Closed forms against the recurrence: p_k = 2^(2^(k-1)-1), p_k <= s_k,
// s_k <= 2^(2^(k-1)) - 1, and the tilde size s_k + p_k.
VerificationReport verify_size_bounds(int max_k);

// Largest segment count verify_lemma_property will enumerate.
inline constexpr int kLemmaEnumerationBound = 13;

// Enumerates all partitions of {0..n-1} into independent sets of the graph
// given by adjacency masks, as restricted-growth strings with properness
// pruning. Returns the number of partitions visited; the callback may
// return false to stop early.
std::uint64_t for_each_proper_partition(int n, const std::vector<std::uint32_t>& adj_masks,
                                        const std::function<bool(const std::vector<int>&)>& visit);

} // namespace segchi
