#pragma once

#include <map>
#include <utility>
#include <vector>

#include "earanon/error.hpp"

namespace earanon {

// Inclusive index range over a finite ordered domain.
struct Interval {
    int start = 0;
    int end = 0;

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.start == b.start && a.end == b.end;
    }
};

// Intervals plus the two sort permutations the greedy stabber consumes.
// Ties are broken by original index, so the permutations are unique.
struct IntervalSet {
    std::vector<Interval> intervals;
    std::vector<int> byStart;
    std::vector<int> byEnd;

    static IntervalSet fromIntervals(std::vector<Interval> intervals);
    size_t size() const { return intervals.size(); }
};

// Greedy minimum hitting set: repeatedly stab the earliest-ending un-hit
// interval at its endpoint. Linear given the sort permutations. Output is
// sorted ascending.
std::vector<int> minimumHittingSet(const IntervalSet& set);

// Exhaustive oracle: subsets of [0, domainSize) in size order, then
// lexicographic, first hitting subset wins. domainSize capped at 20.
std::vector<int> bruteForceMinHittingSet(const IntervalSet& set, int domainSize);

// Order-preserving bijection of the distinct coordinates onto 0..k-1.
std::pair<std::map<int, int>, int> compressDomain(const std::vector<int>& points);

} // namespace earanon
