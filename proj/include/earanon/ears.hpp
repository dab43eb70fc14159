#pragma once

#include <optional>
#include <string>
#include <vector>

#include "earanon/digraph.hpp"

namespace earanon {

// Every exponential search below takes a cap and throws CapExceeded instead
// of running unbounded.
inline constexpr long long kDefaultEarCap = 1'000'000;

// A directed path or cycle given by its vertex sequence. Cycles repeat the
// first vertex at the end and are canonicalized by enumeration to start at
// their minimum vertex id.
struct Ear {
    std::vector<int> vertexSeq;
    bool isCycle = false;

    // Factories validate against the host digraph (arcs present, vertices
    // distinct, cycles of length >= 2 arcs) and throw InvalidSequence.
    static Ear path(const Digraph& d, std::vector<int> seq);
    static Ear cycle(const Digraph& d, std::vector<int> seq);
    // Treats a sequence whose first and last entries coincide as a cycle.
    static Ear fromVertexSeq(const Digraph& d, std::vector<int> seq);

    int arcCount() const { return static_cast<int>(vertexSeq.size()) - 1; }
    std::vector<Arc> arcSeq() const;

    friend bool operator==(const Ear& a, const Ear& b) {
        return a.isCycle == b.isCycle && a.vertexSeq == b.vertexSeq;
    }
};

// Ordered arc list; as an identifying-sequence candidate for an ear it must
// be a nonempty subsequence of the ear's arc sequence (of some rotation, for
// cycles).
struct ArcSeq {
    std::vector<Arc> arcs;

    friend bool operator==(const ArcSeq& a, const ArcSeq& b) { return a.arcs == b.arcs; }
};

// V(Q) subset of V(P) and A(Q) subset of A(P), as sets.
bool isSubgraphEar(const Ear& q, const Ear& p);

// For a path: a.arcs is a subsequence of Q's arc sequence. For a cycle: of
// some rotation of it.
bool visitsInOrder(const Ear& q, const ArcSeq& a);

// True iff a is a valid identifying-sequence candidate for p (nonempty and
// in occurrence order along p, any rotation for cycles).
bool isValidArcSeqFor(const Ear& p, const ArcSeq& a);

// Subgraph-maximality test in O(degree): a cycle is always maximal; a path
// is maximal iff it cannot be extended at either end by an outside vertex
// and cannot be closed into a cycle.
bool isMaximalEar(const Digraph& d, const Ear& p);

// Every path and every cycle, each exactly once, in DFS order (start
// vertices ascending, extensions by ascending out-neighbor; a cycle is
// emitted when its closing arc back to the minimal start is scanned).
std::vector<Ear> enumerateEars(const Digraph& d, long long maxCount = kDefaultEarCap);

// Ears that are not proper subgraphs of any other ear. On a DAG these are
// exactly the source-to-sink paths and are enumerated directly.
std::vector<Ear> enumerateMaximalEars(const Digraph& d, long long maxCount = kDefaultEarCap);

// Some ear visiting a in order that is not a subgraph of p, or none. The
// search is a pruned DFS equivalent to filtering enumerateEars.
std::optional<Ear> findConflictingEar(const Digraph& d, const Ear& p, const ArcSeq& a,
                                      long long cap = kDefaultEarCap);

struct OracleAnonymity {
    int value = 0;
    std::optional<ArcSeq> witness;
};

// Exact anonymity of a maximal ear by exhaustive candidate search, shortest
// first; the witness is the lexicographically-first identifying sequence by
// arc positions (rotation-major for cycles).
OracleAnonymity oracleEarAnonymity(const Digraph& d, const Ear& p,
                                   long long cap = kDefaultEarCap);

// Max of oracleEarAnonymity over all maximal ears.
int oracleDigraphAnonymity(const Digraph& d, long long cap = kDefaultEarCap);

// Textual ear form: comma-separated vertex ids, cycles repeating the first
// vertex at the end (e.g. "0,3,5,0").
Ear parseEarText(const Digraph& d, const std::string& text);
std::string earText(const Ear& e);

} // namespace earanon
