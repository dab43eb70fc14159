#include "earanon/intervals.hpp"

#include <algorithm>
#include <cstdint>

namespace earanon {

IntervalSet IntervalSet::fromIntervals(std::vector<Interval> intervals) {
    for (const Interval& iv : intervals)
        if (iv.start < 0 || iv.start > iv.end)
            throw Error(ErrorCode::MalformedLine,
                        "invalid interval [" + std::to_string(iv.start) + ", " +
                            std::to_string(iv.end) + "]");
    IntervalSet set;
    set.intervals = std::move(intervals);
    const int n = static_cast<int>(set.intervals.size());
    set.byStart.resize(n);
    set.byEnd.resize(n);
    for (int i = 0; i < n; ++i) set.byStart[i] = set.byEnd[i] = i;
    std::stable_sort(set.byStart.begin(), set.byStart.end(), [&](int a, int b) {
        return set.intervals[a].start < set.intervals[b].start;
    });
    std::stable_sort(set.byEnd.begin(), set.byEnd.end(), [&](int a, int b) {
        return set.intervals[a].end < set.intervals[b].end;
    });
    return set;
}

namespace {

void checkPermutations(const IntervalSet& set) {
    const int n = static_cast<int>(set.intervals.size());
    auto check = [&](const std::vector<int>& perm, bool byStart) {
        if (static_cast<int>(perm.size()) != n)
            throw Error(ErrorCode::InvalidPermutation, "sort permutation has wrong length");
        std::vector<char> seen(n, 0);
        for (int idx : perm) {
            if (idx < 0 || idx >= n || seen[idx])
                throw Error(ErrorCode::InvalidPermutation, "not a permutation");
            seen[idx] = 1;
        }
        for (int i = 1; i < n; ++i) {
            const Interval& prev = set.intervals[perm[i - 1]];
            const Interval& cur = set.intervals[perm[i]];
            const int a = byStart ? prev.start : prev.end;
            const int b = byStart ? cur.start : cur.end;
            if (a > b || (a == b && perm[i - 1] > perm[i]))
                throw Error(ErrorCode::InvalidPermutation,
                            byStart ? "byStart permutation out of order"
                                    : "byEnd permutation out of order");
        }
    };
    check(set.byStart, true);
    check(set.byEnd, false);
}

} // namespace

std::vector<int> minimumHittingSet(const IntervalSet& set) {
    checkPermutations(set);
    const int n = static_cast<int>(set.intervals.size());
    std::vector<char> hit(n, 0);
    std::vector<int> x;
    int iStart = 0, iEnd = 0;
    while (iEnd < n) {
        const int e = set.intervals[set.byEnd[iEnd]].end;
        x.push_back(e);
        while (iStart < n && set.intervals[set.byStart[iStart]].start <= e) {
            hit[set.byStart[iStart]] = 1;
            ++iStart;
        }
        while (iEnd < n && hit[set.byEnd[iEnd]]) ++iEnd;
    }
    return x;
}

std::vector<int> bruteForceMinHittingSet(const IntervalSet& set, int domainSize) {
    if (domainSize < 0 || domainSize > 20)
        throw Error(ErrorCode::DomainTooLarge,
                    "domain size " + std::to_string(domainSize) + " exceeds the oracle limit 20");
    for (const Interval& iv : set.intervals)
        if (iv.end >= domainSize)
            throw Error(ErrorCode::DomainTooLarge, "interval endpoint outside the domain");
    const int n = static_cast<int>(set.intervals.size());
    if (n == 0) return {};
    // coverage[p] = bitmask of intervals containing point p, in 64-bit words
    // so the interval count is unbounded.
    const int words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> coverage(domainSize,
                                                     std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < n; ++i)
        for (int p = set.intervals[i].start; p <= set.intervals[i].end; ++p)
            coverage[p][i / 64] |= std::uint64_t(1) << (i % 64);
    std::vector<std::uint64_t> full(words, 0);
    for (int i = 0; i < n; ++i) full[i / 64] |= std::uint64_t(1) << (i % 64);
    // Combinations of each size in lexicographic order; the first hit is the
    // lexicographically-first minimum.
    std::vector<std::uint64_t> acc(words);
    for (int size = 1; size <= domainSize; ++size) {
        std::vector<int> c(size);
        for (int i = 0; i < size; ++i) c[i] = i;
        while (true) {
            std::fill(acc.begin(), acc.end(), 0);
            for (int p : c)
                for (int w = 0; w < words; ++w) acc[w] |= coverage[p][w];
            if (acc == full) return c;
            int i = size - 1;
            while (i >= 0 && c[i] == domainSize - size + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
        }
    }
    // Unreachable: every interval fits the domain, so stabbing all endpoints works.
    throw std::logic_error("bruteForceMinHittingSet found no hitting set");
}

std::pair<std::map<int, int>, int> compressDomain(const std::vector<int>& points) {
    std::vector<int> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::map<int, int> mapping;
    for (size_t i = 0; i < sorted.size(); ++i) mapping[sorted[i]] = static_cast<int>(i);
    return {mapping, static_cast<int>(sorted.size())};
}

} // namespace earanon
