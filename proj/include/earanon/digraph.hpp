#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "earanon/error.hpp"

namespace earanon {

struct Arc {
    int tail = 0;
    int head = 0;

    friend bool operator==(const Arc& a, const Arc& b) {
        return a.tail == b.tail && a.head == b.head;
    }
    friend bool operator<(const Arc& a, const Arc& b) {
        return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
    }
};

// Simple digraph over dense vertex ids 0..n-1. No self-loops, no duplicate
// arcs; both are rejected at construction. Immutable once built, so values
// can be shared freely.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int vertexCount) : Digraph(vertexCount, {}) {}
    Digraph(int vertexCount, std::vector<Arc> arcs);

    int vertexCount() const { return vertexCount_; }
    int arcCount() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    // Neighbor lists are sorted ascending, which fixes the iteration order
    // of every enumeration built on top of them.
    const std::vector<int>& outNeighbors(int v) const { return outAdj_[v]; }
    const std::vector<int>& inNeighbors(int v) const { return inAdj_[v]; }
    int outDegree(int v) const { return static_cast<int>(outAdj_[v].size()); }
    int inDegree(int v) const { return static_cast<int>(inAdj_[v].size()); }

    bool hasVertex(int v) const { return v >= 0 && v < vertexCount_; }
    bool hasArc(int tail, int head) const;

private:
    int vertexCount_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> outAdj_;
    std::vector<std::vector<int>> inAdj_;
};

struct VertexOrder {
    std::vector<int> order;      // order[i] = i-th vertex
    std::vector<int> positionOf; // inverse permutation
};

enum class Direction { forward, backward };

// Graph file format: '#' comments and blank lines ignored; first significant
// line "n <N>"; then one "<tail> <head>" per line.
Digraph parseGraph(const std::string& text);
std::string writeGraph(const Digraph& d);

// Kahn's algorithm with ties broken toward the smallest vertex id, so the
// order is unique. Throws CyclicGraph on a cycle.
VertexOrder topologicalOrder(const Digraph& d);
bool isAcyclic(const Digraph& d);

// BFS reachability including v itself; result sorted ascending.
std::vector<int> reachableFrom(const Digraph& d, int v, Direction direction);

// Butterfly contraction of an arc with Out(tail)=1 or In(head)=1: the merged
// vertex inherits the union of both endpoints' in- and out-neighborhoods
// (minus the endpoints themselves), deduplicated. Merged vertex takes
// min(tail, head); ids above max(tail, head) shift down by one.
Digraph butterflyContract(const Digraph& d, Arc arc);

// Acyclic by construction: arcs go from lower to higher position in a
// seed-determined random permutation; exactly m distinct arcs.
Digraph randomDag(int n, int m, std::uint64_t seed);

} // namespace earanon
