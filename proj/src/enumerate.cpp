#include "trispec/enumerate.hpp"

#include <atomic>
#include <condition_variable>
#include <istream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "trispec/coloring.hpp"
#include "trispec/graph6.hpp"

namespace trispec {

namespace {

// Children of one canonical parent: augment by a new vertex whose
// neighborhood is an independent set, keep a child iff the new vertex is a
// valid canonical deletion, dedupe repeats arising from parent symmetry.
void children_of(const SmallGraph& p, std::vector<SmallGraph>& out) {
    const int m = p.n;
    int deg[kCanonicalCap];
    int mindeg = m;
    for (int v = 0; v < m; ++v) {
        deg[v] = p.degree(v);
        mindeg = std::min(mindeg, deg[v]);
    }
    const int size_cap = mindeg + 1;

    std::vector<std::array<uint32_t, kCanonicalCap>> seen;  // canon rows of accepted children
    const uint32_t full = (m >= 32) ? ~uint32_t(0) : (uint32_t(1) << m) - 1;

    auto consider = [&](uint32_t nbhd, int size) {
        // the new vertex must end up a minimum-degree vertex of the child
        for (int u = 0; u < m; ++u) {
            int du = (nbhd >> u & 1) ? deg[u] + 1 : deg[u];
            if (size > du) return;
        }
        SmallGraph c;
        c.n = m + 1;
        for (int v = 0; v < m; ++v) c.row[v] = p.row[v];
        c.row[m] = nbhd;
        for (uint32_t t = nbhd; t; t &= t - 1) c.row[__builtin_ctz(t)] |= uint32_t(1) << m;

        ColorArray color{};
        int ncolors = 0;
        root_refinement(c, color, ncolors);
        if (color[m] != ncolors - 1) return;  // canonical-last vertex lives in the last cell

        CanonLabeling cl = canonical_label(c);
        int u_last = cl.order[m];
        bool accept;
        if (u_last == m || cl.orbit[u_last] == cl.orbit[m]) {
            accept = true;
        } else {
            // full canonical-deletion rule: deleting the new vertex must give
            // the same class as deleting the canonical-last vertex
            accept = canonical_label(small_delete_vertex(c, u_last)).canon == p;
        }
        if (!accept) return;
        for (const auto& rows : seen)
            if (std::equal(rows.begin(), rows.begin() + c.n, cl.canon.row.begin())) return;
        seen.push_back(cl.canon.row);
        out.push_back(cl.canon);
    };

    // DFS over independent sets, smallest-vertex order; masks sized <= cap
    struct Frame {
        uint32_t mask;
        uint32_t banned;
        int start, size;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0, 0, 0});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        consider(f.mask, f.size);
        if (f.size == size_cap) continue;
        // push in reverse so lower vertices are explored first
        for (int v = m - 1; v >= f.start; --v) {
            if (f.banned >> v & 1) continue;
            stack.push_back({f.mask | (uint32_t(1) << v), (f.banned | p.row[v]) & full, v + 1, f.size + 1});
        }
    }
}

// Process `parents` in fixed-size chunks, possibly in parallel, and hand
// each chunk's output to `drain` in chunk order.  Output is byte-identical
// for every worker count.
void run_level(const std::vector<SmallGraph>& parents, int workers,
               const std::function<void(std::vector<SmallGraph>&&)>& drain) {
    const size_t chunk = 512;
    const size_t nchunks = (parents.size() + chunk - 1) / chunk;
    auto process = [&](size_t k) {
        std::vector<SmallGraph> buf;
        size_t lo = k * chunk, hi = std::min(parents.size(), lo + chunk);
        for (size_t i = lo; i < hi; ++i) children_of(parents[i], buf);
        return buf;
    };
    if (workers <= 1 || nchunks <= 1) {
        for (size_t k = 0; k < nchunks; ++k) drain(process(k));
        return;
    }
    std::mutex mu;
    std::condition_variable cv;
    std::map<size_t, std::vector<SmallGraph>> done;
    std::atomic<size_t> next{0};
    size_t emit_next = 0;
    std::exception_ptr failure;
    const size_t max_ahead = static_cast<size_t>(workers) * 4;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            try {
                while (true) {
                    size_t k = next.fetch_add(1);
                    if (k >= nchunks) return;
                    {
                        std::unique_lock lk(mu);
                        cv.wait(lk, [&] { return k < emit_next + max_ahead || failure; });
                        if (failure) return;
                    }
                    auto buf = process(k);
                    std::unique_lock lk(mu);
                    done.emplace(k, std::move(buf));
                    cv.notify_all();
                }
            } catch (...) {
                std::unique_lock lk(mu);
                if (!failure) failure = std::current_exception();
                cv.notify_all();
            }
        });
    }
    while (emit_next < nchunks) {
        std::vector<SmallGraph> buf;
        {
            std::unique_lock lk(mu);
            cv.wait(lk, [&] { return done.count(emit_next) > 0 || failure; });
            if (failure) break;
            buf = std::move(done[emit_next]);
            done.erase(emit_next);
            ++emit_next;
            cv.notify_all();
        }
        drain(std::move(buf));
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

bool passes_filter(const SmallGraph& g, const EnumFilter& f) {
    if (f.connected_only && !small_is_connected(g)) return false;
    if (f.non_bipartite_only && small_is_bipartite(g)) return false;
    if (f.min_chromatic >= 2) {
        if (f.min_chromatic > g.n + 1) return false;
        Graph gg = from_small(g);
        if (is_k_colorable(gg, f.min_chromatic - 1)) return false;
    }
    return true;
}

void enumerate_triangle_free_small(int n, const EnumFilter& f,
                                   const std::function<void(const SmallGraph&)>& emit,
                                   int workers) {
    if (n < 0) throw std::invalid_argument("enumerate_triangle_free: negative order");
    if (n > kEnumCap)
        throw std::invalid_argument(
            "enumerate_triangle_free: n = " + std::to_string(n) + " exceeds the cap of " +
            std::to_string(kEnumCap) + " (~2e7 classes and minutes of runtime at 13; growth is "
            "~17x per extra vertex)");
    SmallGraph single;
    single.n = std::min(n, 1);
    if (n <= 1) {
        if (passes_filter(single, f)) emit(single);
        return;
    }
    single.n = 1;
    std::vector<SmallGraph> level = {single};
    for (int m = 2; m < n; ++m) {
        std::vector<SmallGraph> next_level;
        run_level(level, workers, [&](std::vector<SmallGraph>&& buf) {
            next_level.insert(next_level.end(), buf.begin(), buf.end());
        });
        level = std::move(next_level);
    }
    run_level(level, workers, [&](std::vector<SmallGraph>&& buf) {
        for (const SmallGraph& g : buf)
            if (passes_filter(g, f)) emit(g);
    });
}

void enumerate_triangle_free(int n, const EnumFilter& f,
                             const std::function<void(const Graph&)>& emit, int workers) {
    enumerate_triangle_free_small(n, f, [&](const SmallGraph& g) { emit(from_small(g)); }, workers);
}

std::vector<SmallGraph> brute_force_all_small(int n) {
    if (n < 0 || n > 7)
        throw std::invalid_argument("brute_force_all: only n <= 7 is feasible (2^C(n,2) labeled graphs)");
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pos;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pos.emplace_back(i, j);
    std::vector<uint32_t> keys;  // packed upper triangle of the canonical form
    keys.reserve(1u << pairs);
    for (uint32_t mask = 0; mask < (uint32_t(1) << pairs); ++mask) {
        SmallGraph g;
        g.n = n;
        for (int b = 0; b < pairs; ++b)
            if (mask >> b & 1) g.add_edge(pos[b].first, pos[b].second);
        SmallGraph c = canonical_label(g).canon;
        uint32_t key = 0;
        for (int b = 0; b < pairs; ++b)
            if (c.edge(pos[b].first, pos[b].second)) key |= uint32_t(1) << b;
        keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<SmallGraph> out;
    out.reserve(keys.size());
    for (uint32_t key : keys) {
        SmallGraph g;
        g.n = n;
        for (int b = 0; b < pairs; ++b)
            if (key >> b & 1) g.add_edge(pos[b].first, pos[b].second);
        out.push_back(g);
    }
    return out;
}

std::vector<Graph> brute_force_all(int n) {
    std::vector<Graph> out;
    for (const SmallGraph& g : brute_force_all_small(n)) out.push_back(from_small(g));
    return out;
}

void ingest_graph6(std::istream& in, const std::function<void(const IngestedLine&)>& sink) {
    std::string line;
    size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        IngestedLine rec;
        rec.line_no = no;
        try {
            rec.graph = graph6_decode(line);
        } catch (const std::exception& e) {
            rec.error = e.what();
        }
        sink(rec);
    }
}

}  // namespace trispec
