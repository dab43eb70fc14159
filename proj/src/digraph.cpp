#include "earanon/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_set>

namespace earanon {

const char* errorCodeName(ErrorCode code) {
    switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateArc: return "DuplicateArc";
    case ErrorCode::CyclicGraph: return "CyclicGraph";
    case ErrorCode::NotContractible: return "NotContractible";
    case ErrorCode::ArcAbsent: return "ArcAbsent";
    case ErrorCode::TooManyArcs: return "TooManyArcs";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::DomainTooLarge: return "DomainTooLarge";
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::NotMaximalEar: return "NotMaximalEar";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::BadTerminals: return "BadTerminals";
    case ErrorCode::BadSequence: return "BadSequence";
    }
    return "UnknownError";
}

Digraph::Digraph(int vertexCount, std::vector<Arc> arcs)
    : vertexCount_(vertexCount), arcs_(std::move(arcs)) {
    if (vertexCount_ < 0)
        throw Error(ErrorCode::VertexOutOfRange, "negative vertex count");
    for (const Arc& a : arcs_) {
        if (a.tail < 0 || a.tail >= vertexCount_ || a.head < 0 || a.head >= vertexCount_)
            throw Error(ErrorCode::VertexOutOfRange,
                        "arc endpoint out of range: " + std::to_string(a.tail) + " " +
                            std::to_string(a.head));
        if (a.tail == a.head)
            throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a.tail));
    }
    std::vector<Arc> sorted = arcs_;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw Error(ErrorCode::DuplicateArc,
                        "duplicate arc " + std::to_string(sorted[i].tail) + " " +
                            std::to_string(sorted[i].head));
    outAdj_.assign(vertexCount_, {});
    inAdj_.assign(vertexCount_, {});
    for (const Arc& a : arcs_) {
        outAdj_[a.tail].push_back(a.head);
        inAdj_[a.head].push_back(a.tail);
    }
    for (auto& v : outAdj_) std::sort(v.begin(), v.end());
    for (auto& v : inAdj_) std::sort(v.begin(), v.end());
}

bool Digraph::hasArc(int tail, int head) const {
    if (!hasVertex(tail) || !hasVertex(head)) return false;
    const auto& adj = outAdj_[tail];
    return std::binary_search(adj.begin(), adj.end(), head);
}

namespace {

bool parseInt(const std::string& token, int& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::vector<std::string> splitTokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string t;
    while (in >> t) tokens.push_back(t);
    return tokens;
}

} // namespace

Digraph parseGraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    bool haveHeader = false;
    int n = 0;
    std::vector<Arc> arcs;
    std::unordered_set<long long> seen;
    while (std::getline(in, line)) {
        ++lineNo;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        const auto tokens = splitTokens(line);
        if (tokens.empty()) continue;
        const std::string where = "line " + std::to_string(lineNo) + ": ";
        if (!haveHeader) {
            if (tokens.size() != 2 || tokens[0] != "n" || !parseInt(tokens[1], n) || n < 0)
                throw Error(ErrorCode::MalformedLine, where + "expected header 'n <N>'");
            haveHeader = true;
            continue;
        }
        int tail = 0, head = 0;
        if (tokens.size() != 2 || !parseInt(tokens[0], tail) || !parseInt(tokens[1], head))
            throw Error(ErrorCode::MalformedLine, where + "expected '<tail> <head>'");
        if (tail < 0 || tail >= n || head < 0 || head >= n)
            throw Error(ErrorCode::VertexOutOfRange, where + "vertex id outside [0, " +
                                                         std::to_string(n) + ")");
        if (tail == head)
            throw Error(ErrorCode::SelfLoop, where + "self-loop at vertex " + std::to_string(tail));
        if (!seen.insert(static_cast<long long>(tail) * n + head).second)
            throw Error(ErrorCode::DuplicateArc, where + "duplicate arc " + std::to_string(tail) +
                                                     " " + std::to_string(head));
        arcs.push_back({tail, head});
    }
    if (!haveHeader)
        throw Error(ErrorCode::MalformedLine, "line " + std::to_string(lineNo + 1) +
                                                  ": missing header 'n <N>'");
    return Digraph(n, std::move(arcs));
}

std::string writeGraph(const Digraph& d) {
    std::vector<Arc> sorted = d.arcs();
    std::sort(sorted.begin(), sorted.end());
    std::string out = "n " + std::to_string(d.vertexCount()) + "\n";
    for (const Arc& a : sorted)
        out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
    return out;
}

VertexOrder topologicalOrder(const Digraph& d) {
    const int n = d.vertexCount();
    std::vector<int> indeg(n);
    for (int v = 0; v < n; ++v) indeg[v] = d.inDegree(v);
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    VertexOrder res;
    res.order.reserve(n);
    res.positionOf.assign(n, -1);
    while (!ready.empty()) {
        const int v = ready.top();
        ready.pop();
        res.positionOf[v] = static_cast<int>(res.order.size());
        res.order.push_back(v);
        for (int w : d.outNeighbors(v))
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(res.order.size()) != n)
        throw Error(ErrorCode::CyclicGraph, "digraph contains a cycle");
    return res;
}

bool isAcyclic(const Digraph& d) {
    // Plain Kahn without the heap; we only need the yes/no answer.
    const int n = d.vertexCount();
    std::vector<int> indeg(n);
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        indeg[v] = d.inDegree(v);
        if (indeg[v] == 0) stack.push_back(v);
    }
    int processed = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++processed;
        for (int w : d.outNeighbors(v))
            if (--indeg[w] == 0) stack.push_back(w);
    }
    return processed == n;
}

std::vector<int> reachableFrom(const Digraph& d, int v, Direction direction) {
    if (!d.hasVertex(v))
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    std::vector<char> seen(d.vertexCount(), 0);
    std::vector<int> queue = {v};
    seen[v] = 1;
    for (size_t i = 0; i < queue.size(); ++i) {
        const int x = queue[i];
        const auto& next =
            direction == Direction::forward ? d.outNeighbors(x) : d.inNeighbors(x);
        for (int y : next)
            if (!seen[y]) {
                seen[y] = 1;
                queue.push_back(y);
            }
    }
    std::vector<int> res;
    for (int x = 0; x < d.vertexCount(); ++x)
        if (seen[x]) res.push_back(x);
    return res;
}

Digraph butterflyContract(const Digraph& d, Arc arc) {
    if (!d.hasArc(arc.tail, arc.head))
        throw Error(ErrorCode::ArcAbsent, "arc " + std::to_string(arc.tail) + "->" +
                                              std::to_string(arc.head) + " not present");
    if (d.outDegree(arc.tail) != 1 && d.inDegree(arc.head) != 1)
        throw Error(ErrorCode::NotContractible,
                    "arc " + std::to_string(arc.tail) + "->" + std::to_string(arc.head) +
                        " needs Out(tail)=1 or In(head)=1");
    const int lo = std::min(arc.tail, arc.head);
    const int hi = std::max(arc.tail, arc.head);
    // Survivors keep their relative order; the merged vertex reuses lo's slot.
    auto remap = [&](int v) { return v > hi ? v - 1 : v; };
    std::vector<Arc> arcs;
    for (const Arc& a : d.arcs())
        if (a.tail != arc.tail && a.tail != arc.head && a.head != arc.tail && a.head != arc.head)
            arcs.push_back({remap(a.tail), remap(a.head)});
    auto addUnique = [&](Arc a) {
        if (std::find(arcs.begin(), arcs.end(), a) == arcs.end()) arcs.push_back(a);
    };
    for (int endpoint : {arc.tail, arc.head}) {
        for (int w : d.inNeighbors(endpoint))
            if (w != arc.tail && w != arc.head) addUnique({remap(w), lo});
        for (int w : d.outNeighbors(endpoint))
            if (w != arc.tail && w != arc.head) addUnique({lo, remap(w)});
    }
    return Digraph(d.vertexCount() - 1, std::move(arcs));
}

Digraph randomDag(int n, int m, std::uint64_t seed) {
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > total)
        throw Error(ErrorCode::TooManyArcs, "cannot place " + std::to_string(m) +
                                                " arcs on " + std::to_string(n) + " vertices");
    std::mt19937_64 rng(seed);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Arc> arcs;
    arcs.reserve(m);
    if (total <= 1 << 22 || m * 4 >= total) {
        // Dense enough: materialize every position pair and shuffle.
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(total);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
        std::shuffle(pairs.begin(), pairs.end(), rng);
        for (int k = 0; k < m; ++k) arcs.push_back({perm[pairs[k].first], perm[pairs[k].second]});
    } else {
        std::unordered_set<long long> chosen;
        std::uniform_int_distribution<int> pick(0, n - 1);
        while (static_cast<int>(arcs.size()) < m) {
            int i = pick(rng), j = pick(rng);
            if (i == j) continue;
            if (i > j) std::swap(i, j);
            if (chosen.insert(static_cast<long long>(i) * n + j).second)
                arcs.push_back({perm[i], perm[j]});
        }
    }
    return Digraph(n, std::move(arcs));
}

} // namespace earanon
