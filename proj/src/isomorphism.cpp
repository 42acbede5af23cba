#include "specrig/isomorphism.hpp"

#include <algorithm>
#include <bit>

#include "specrig/errors.hpp"

namespace specrig {

namespace {

using Partition = std::vector<std::vector<int>>;

struct Searcher {
    int n;
    const Graph* g;
    std::vector<std::uint64_t> rows; // open neighborhood bitmasks
    std::vector<int> twin_class;     // class id per vertex
    CanonicalForm best;

    // Split every cell by the multiset of neighbor counts against the current
    // cells, repeating until stable. Group order within a split follows the
    // count signature, so the refined partition is isomorphism-invariant.
    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::uint64_t> masks(p.size());
            for (size_t c = 0; c < p.size(); ++c) {
                std::uint64_t m = 0;
                for (int v : p[c]) m |= std::uint64_t{1} << v;
                masks[c] = m;
            }
            Partition np;
            np.reserve(p.size());
            for (const auto& cell : p) {
                if (cell.size() == 1) {
                    np.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> sig(masks.size());
                    for (size_t c = 0; c < masks.size(); ++c)
                        sig[c] = std::popcount(rows[static_cast<size_t>(v)] & masks[c]);
                    keyed.emplace_back(std::move(sig), v);
                }
                std::sort(keyed.begin(), keyed.end());
                size_t i = 0;
                while (i < keyed.size()) {
                    size_t j = i;
                    std::vector<int> group;
                    while (j < keyed.size() && keyed[j].first == keyed[i].first)
                        group.push_back(keyed[j++].second);
                    std::sort(group.begin(), group.end());
                    if (group.size() != cell.size()) changed = true;
                    np.push_back(std::move(group));
                    i = j;
                }
            }
            p = std::move(np);
        }
    }

    CanonicalForm leaf_form(const Partition& p) const {
        std::vector<int> pos(static_cast<size_t>(n));
        for (size_t i = 0; i < p.size(); ++i) pos[static_cast<size_t>(p[i][0])] = static_cast<int>(i);
        const size_t tbits = static_cast<size_t>(n) * (n - 1) / 2;
        CanonicalForm form(1 + (tbits + 63) / 64, 0);
        form[0] = static_cast<std::uint64_t>(n);
        for (const Edge& e : g->edges()) {
            int i = pos[static_cast<size_t>(e.u)], j = pos[static_cast<size_t>(e.v)];
            if (i > j) std::swap(i, j);
            size_t t = static_cast<size_t>(j) * (j - 1) / 2 + static_cast<size_t>(i);
            form[1 + t / 64] |= std::uint64_t{1} << (63 - t % 64);
        }
        return form;
    }

    void search(Partition p) {
        refine(p);
        size_t target = p.size();
        for (size_t c = 0; c < p.size(); ++c) {
            if (p[c].size() > 1) {
                target = c;
                break;
            }
        }
        if (target == p.size()) {
            CanonicalForm f = leaf_form(p);
            if (best.empty() || f < best) best = std::move(f);
            return;
        }
        std::vector<int> seen_classes;
        for (int v : p[target]) {
            int tc = twin_class[static_cast<size_t>(v)];
            if (std::find(seen_classes.begin(), seen_classes.end(), tc) != seen_classes.end())
                continue;
            seen_classes.push_back(tc);
            Partition child;
            child.reserve(p.size() + 1);
            for (size_t c = 0; c < p.size(); ++c) {
                if (c != target) {
                    child.push_back(p[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : p[c])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            search(std::move(child));
        }
    }
};

std::vector<int> compute_twin_classes(const Graph& g, const std::vector<std::uint64_t>& rows) {
    const int n = g.n();
    std::vector<int> cls(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) cls[static_cast<size_t>(v)] = v;
    auto root = [&](int v) {
        while (cls[static_cast<size_t>(v)] != v) v = cls[static_cast<size_t>(v)];
        return v;
    };
    for (int u = 0; u < n; ++u) {
        std::uint64_t closed_u = rows[static_cast<size_t>(u)] | (std::uint64_t{1} << u);
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t closed_v = rows[static_cast<size_t>(v)] | (std::uint64_t{1} << v);
            if (rows[static_cast<size_t>(u)] == rows[static_cast<size_t>(v)] || closed_u == closed_v)
                cls[static_cast<size_t>(root(v))] = root(u);
        }
    }
    for (int v = 0; v < n; ++v) cls[static_cast<size_t>(v)] = root(v);
    return cls;
}

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.n();
    if (n > 32) throw budget_error("canonical labeling is capped at n <= 32");
    if (n == 0) return {0};

    Searcher s;
    s.n = n;
    s.g = &g;
    s.rows.assign(static_cast<size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        s.rows[static_cast<size_t>(e.u)] |= std::uint64_t{1} << e.v;
        s.rows[static_cast<size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    s.twin_class = compute_twin_classes(g, s.rows);

    // initial cells grouped by degree, ascending
    std::vector<std::pair<int, int>> by_deg;
    by_deg.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) by_deg.emplace_back(g.degree(v), v);
    std::sort(by_deg.begin(), by_deg.end());
    Partition p;
    size_t i = 0;
    while (i < by_deg.size()) {
        size_t j = i;
        std::vector<int> cell;
        while (j < by_deg.size() && by_deg[j].first == by_deg[i].first)
            cell.push_back(by_deg[j++].second);
        p.push_back(std::move(cell));
        i = j;
    }

    s.search(std::move(p));
    return s.best;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace specrig
