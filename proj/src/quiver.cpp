#include "qsi/quiver.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace qsi {

std::size_t Quiver::vertex_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw IndexMismatch("unknown vertex id: " + label);
}

QuiverPtr validate_quiver(const std::vector<std::string>& vertices,
                          const std::vector<RawArrow>& arrows) {
    const std::size_t n = vertices.size();
    if (n == 0) throw Disconnected("quiver has no vertices");

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        if (!index.emplace(vertices[i], i).second)
            throw DuplicateId("duplicate vertex id: " + vertices[i]);
    }
    std::set<std::string> arrow_ids;
    for (const auto& a : arrows) {
        if (!arrow_ids.insert(a.id).second) throw DuplicateId("duplicate arrow id: " + a.id);
        if (!index.count(a.tail)) throw IndexMismatch("arrow tail not a vertex: " + a.tail);
        if (!index.count(a.head)) throw IndexMismatch("arrow head not a vertex: " + a.head);
        if (a.tail == a.head) throw CyclicQuiver("loop at vertex " + a.tail);
    }

    // Connectivity of the underlying undirected graph.
    std::vector<std::vector<std::size_t>> und(n);
    for (const auto& a : arrows) {
        std::size_t t = index[a.tail], h = index[a.head];
        und[t].push_back(h);
        und[h].push_back(t);
    }
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> bfs;
    bfs.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!bfs.empty()) {
        std::size_t v = bfs.front();
        bfs.pop();
        for (std::size_t w : und[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                bfs.push(w);
            }
    }
    if (reached != n) throw Disconnected("underlying graph is not connected");

    // Kahn topological sort, stable on the input vertex order.
    std::vector<std::size_t> indeg(n, 0);
    std::vector<std::vector<std::size_t>> out(n);
    for (const auto& a : arrows) {
        std::size_t t = index[a.tail], h = index[a.head];
        out[t].push_back(h);
        ++indeg[h];
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<std::size_t> order;  // order[k] = original index of new vertex k
    order.reserve(n);
    while (!ready.empty()) {
        std::size_t v = ready.top();
        ready.pop();
        order.push_back(v);
        for (std::size_t w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (order.size() != n) throw CyclicQuiver("quiver has a directed cycle");

    std::vector<std::size_t> newpos(n);
    for (std::size_t k = 0; k < n; ++k) newpos[order[k]] = k;

    std::vector<std::string> labels(n);
    for (std::size_t k = 0; k < n; ++k) labels[k] = vertices[order[k]];
    std::vector<Arrow> dense;
    dense.reserve(arrows.size());
    for (const auto& a : arrows)
        dense.push_back({a.id, newpos[index[a.tail]], newpos[index[a.head]]});

    return std::make_shared<Quiver>(std::move(labels), std::move(dense));
}

void check_indexed(const Quiver& q, const IntVec& v) {
    if (v.size() != q.num_vertices())
        throw IndexMismatch("vector not indexed by the quiver's vertex set");
}

Int euler_form(const Quiver& q, const IntVec& a, const IntVec& b) {
    check_indexed(q, a);
    check_indexed(q, b);
    Int s = 0;
    for (std::size_t x = 0; x < a.size(); ++x) s += a[x] * b[x];
    for (const auto& arr : q.arrows()) s -= a[arr.tail] * b[arr.head];
    return s;
}

Int quadratic_form(const Quiver& q, const IntVec& a) { return euler_form(q, a, a); }

Weight weight_of_left_form(const Quiver& q, const IntVec& a) {
    check_indexed(q, a);
    Weight s(a);
    for (const auto& arr : q.arrows()) s[arr.head] -= a[arr.tail];
    return s;
}

Weight weight_of_right_form(const Quiver& q, const IntVec& b) {
    check_indexed(q, b);
    Weight s(b.size());
    for (std::size_t x = 0; x < b.size(); ++x) s[x] = -b[x];
    for (const auto& arr : q.arrows()) s[arr.tail] += b[arr.head];
    return s;
}

Int apply_weight(const Weight& s, const IntVec& g) {
    if (s.size() != g.size()) throw IndexMismatch("weight/vector index sets differ");
    Int r = 0;
    for (std::size_t x = 0; x < s.size(); ++x) r += s[x] * g[x];
    return r;
}

}  // namespace qsi
