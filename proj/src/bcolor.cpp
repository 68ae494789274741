#include "bchroma/bcolor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bchroma {

namespace {

void validate_coloring(const Graph& g, const Coloring& c, int k) {
    if (static_cast<int>(c.colors.size()) != g.vertex_count()) {
        throw std::invalid_argument("coloring covers " + std::to_string(c.colors.size()) +
                                    " vertices but the graph has " +
                                    std::to_string(g.vertex_count()));
    }
    if (k < 1) {
        throw std::invalid_argument("color count must be >= 1");
    }
    for (size_t i = 0; i < c.colors.size(); ++i) {
        if (c.colors[i] < 1 || c.colors[i] > k) {
            throw std::invalid_argument("vertex " + std::to_string(i + 1) + " has color " +
                                        std::to_string(c.colors[i]) + " outside 1.." +
                                        std::to_string(k));
        }
    }
}

int color_of(const Coloring& c, VertexId v) {
    return c.colors[static_cast<size_t>(v) - 1];
}

}  // namespace

bool is_proper(const Graph& g, const Coloring& c) {
    validate_coloring(g, c, std::max(c.k, 1));
    for (int v = 1; v <= g.vertex_count(); ++v) {
        for (VertexId u : g.neighbors(v)) {
            if (u > v && color_of(c, u) == color_of(c, v)) {
                return false;
            }
        }
    }
    return true;
}

std::map<int, std::vector<VertexId>> b_vertices(const Graph& g, const Coloring& c) {
    int k = c.k;
    validate_coloring(g, c, k);
    if (!is_proper(g, c)) {
        throw std::invalid_argument("b-vertices require a proper coloring");
    }
    std::vector<bool> used(static_cast<size_t>(k) + 1, false);
    for (int color : c.colors) {
        used[static_cast<size_t>(color)] = true;
    }
    for (int color = 1; color <= k; ++color) {
        if (!used[static_cast<size_t>(color)]) {
            throw std::invalid_argument("color " + std::to_string(color) + " is unused");
        }
    }
    std::map<int, std::vector<VertexId>> out;
    for (int color = 1; color <= k; ++color) {
        out[color] = {};
    }
    uint64_t full = (k == 64) ? ~0ULL : ((1ULL << k) - 1);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        uint64_t seen = 0;
        for (VertexId u : g.neighbors(v)) {
            seen |= 1ULL << (color_of(c, u) - 1);
        }
        int cv = color_of(c, v);
        if ((seen | (1ULL << (cv - 1))) == full) {
            out[cv].push_back(v);
        }
    }
    return out;
}

bool is_b_coloring(const Graph& g, const Coloring& c, int k) {
    validate_coloring(g, c, k);
    if (k > 64) {
        throw std::invalid_argument("color count capped at 64");
    }
    uint64_t full = (k == 64) ? ~0ULL : ((1ULL << k) - 1);
    uint64_t present = 0;
    for (int color : c.colors) {
        present |= 1ULL << (color - 1);
    }
    if (present != full) {
        return false;
    }
    uint64_t classes_ok = 0;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        uint64_t seen = 0;
        for (VertexId u : g.neighbors(v)) {
            int cu = color_of(c, u);
            if (cu == color_of(c, v)) {
                return false;  // monochromatic edge
            }
            seen |= 1ULL << (cu - 1);
        }
        int cv = color_of(c, v);
        if ((seen | (1ULL << (cv - 1))) == full) {
            classes_ok |= 1ULL << (cv - 1);
        }
    }
    return classes_ok == full;
}

bool is_linked_coloring(const Graph& g, const Coloring& c, int k) {
    validate_coloring(g, c, k);
    if (k > 64) {
        throw std::invalid_argument("color count capped at 64");
    }
    uint64_t full = (k == 64) ? ~0ULL : ((1ULL << k) - 1);
    uint64_t present = 0;
    for (int color : c.colors) {
        present |= 1ULL << (color - 1);
    }
    if (present != full) {
        return false;
    }
    std::vector<uint64_t> linked(static_cast<size_t>(k), 0);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        for (VertexId u : g.neighbors(v)) {
            if (color_of(c, u) == color_of(c, v)) {
                return false;
            }
            linked[static_cast<size_t>(color_of(c, v)) - 1] |= 1ULL << (color_of(c, u) - 1);
        }
    }
    for (int color = 1; color <= k; ++color) {
        if ((linked[static_cast<size_t>(color) - 1] | (1ULL << (color - 1))) != full) {
            return false;
        }
    }
    return true;
}

int m_bound(const Graph& g) {
    std::vector<int> degrees = g.degree_profile();
    std::sort(degrees.begin(), degrees.end(), std::greater<int>());
    for (int k = g.vertex_count(); k >= 1; --k) {
        if (degrees[static_cast<size_t>(k) - 1] >= k - 1) {
            return k;
        }
    }
    return 1;
}

namespace {

// Complete search for a k-b-coloring. A k-b-coloring has k b-vertices with
// pairwise distinct colors and degree >= k-1, and any coloring may be
// color-permuted so that its lowest-indexed b-vertices, taken in ascending
// vertex order, carry colors 1..k. Enumerating ascending subsets of the
// degree-eligible vertices as the designated system therefore loses nothing.
class BColoringSearch {
public:
    BColoringSearch(const Graph& g, int k, long long budget)
        : n_(g.vertex_count()), k_(k), budget_(budget) {
        full_ = (k_ == 64) ? ~0ULL : ((1ULL << k_) - 1);
        nbrs_.resize(static_cast<size_t>(n_));
        for (int v = 1; v <= n_; ++v) {
            for (VertexId u : g.neighbors(v)) {
                nbrs_[static_cast<size_t>(v) - 1].push_back(u - 1);
            }
        }
        color_.assign(static_cast<size_t>(n_), 0);
        seen_.assign(static_cast<size_t>(n_), 0);
        cnt_.assign(static_cast<size_t>(n_) * static_cast<size_t>(k_), 0);
        sys_index_.assign(static_cast<size_t>(n_), -1);
    }

    FeasibleResult run() {
        FeasibleResult result;
        std::vector<int> candidates;
        for (int v = 0; v < n_; ++v) {
            if (static_cast<int>(nbrs_[static_cast<size_t>(v)].size()) >= k_ - 1) {
                candidates.push_back(v);
            }
        }
        if (static_cast<int>(candidates.size()) < k_) {
            result.status = SearchStatus::kInfeasible;
            result.nodes = nodes_;
            return result;
        }
        std::vector<int> pick(static_cast<size_t>(k_));
        for (int i = 0; i < k_; ++i) {
            pick[static_cast<size_t>(i)] = i;
        }
        while (true) {
            SearchStatus status = attempt_system(candidates, pick);
            if (status != SearchStatus::kInfeasible) {
                result.status = status;
                result.coloring = found_;
                result.nodes = nodes_;
                return result;
            }
            // next lexicographic combination
            int i = k_ - 1;
            while (i >= 0 &&
                   pick[static_cast<size_t>(i)] ==
                       static_cast<int>(candidates.size()) - k_ + i) {
                --i;
            }
            if (i < 0) {
                break;
            }
            ++pick[static_cast<size_t>(i)];
            for (int j = i + 1; j < k_; ++j) {
                pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j) - 1] + 1;
            }
        }
        result.status = SearchStatus::kInfeasible;
        result.nodes = nodes_;
        return result;
    }

private:
    SearchStatus attempt_system(const std::vector<int>& candidates, const std::vector<int>& pick) {
        std::fill(color_.begin(), color_.end(), 0);
        std::fill(seen_.begin(), seen_.end(), 0);
        std::fill(cnt_.begin(), cnt_.end(), 0);
        std::fill(sys_index_.begin(), sys_index_.end(), -1);
        system_.clear();
        uncolored_nbrs_.assign(static_cast<size_t>(k_), 0);
        for (int i = 0; i < k_; ++i) {
            int v = candidates[static_cast<size_t>(pick[static_cast<size_t>(i)])];
            system_.push_back(v);
            sys_index_[static_cast<size_t>(v)] = i;
            uncolored_nbrs_[static_cast<size_t>(i)] =
                static_cast<int>(nbrs_[static_cast<size_t>(v)].size());
        }
        nodes_ += k_;
        if (nodes_ > budget_) {
            return SearchStatus::kTimeout;
        }
        for (int i = 0; i < k_; ++i) {
            put(system_[static_cast<size_t>(i)], i + 1);
        }
        for (int v : system_) {
            if (!capacity_ok(v)) {
                return SearchStatus::kInfeasible;  // this system cannot work
            }
        }
        free_.clear();
        for (int v = 0; v < n_; ++v) {
            if (sys_index_[static_cast<size_t>(v)] < 0) {
                free_.push_back(v);
            }
        }
        return extend(0);
    }

    SearchStatus extend(size_t pos) {
        if (pos == free_.size()) {
            Coloring c;
            c.k = k_;
            c.colors.assign(color_.begin(), color_.end());
            found_ = std::move(c);
            return SearchStatus::kFound;
        }
        int v = free_[pos];
        uint64_t avail = full_ & ~seen_[static_cast<size_t>(v)];
        while (avail) {
            int c = std::countr_zero(avail) + 1;
            avail &= avail - 1;
            if (++nodes_ > budget_) {
                return SearchStatus::kTimeout;
            }
            put(v, c);
            if (systems_still_feasible(v)) {
                SearchStatus status = extend(pos + 1);
                if (status != SearchStatus::kInfeasible) {
                    unput(v, c);
                    return status;
                }
            }
            unput(v, c);
        }
        return SearchStatus::kInfeasible;
    }

    void put(int v, int c) {
        color_[static_cast<size_t>(v)] = c;
        for (int u : nbrs_[static_cast<size_t>(v)]) {
            if (++cnt_[static_cast<size_t>(u) * static_cast<size_t>(k_) +
                       static_cast<size_t>(c) - 1] == 1) {
                seen_[static_cast<size_t>(u)] |= 1ULL << (c - 1);
            }
            int si = sys_index_[static_cast<size_t>(u)];
            if (si >= 0) {
                --uncolored_nbrs_[static_cast<size_t>(si)];
            }
        }
    }

    void unput(int v, int c) {
        color_[static_cast<size_t>(v)] = 0;
        for (int u : nbrs_[static_cast<size_t>(v)]) {
            if (--cnt_[static_cast<size_t>(u) * static_cast<size_t>(k_) +
                       static_cast<size_t>(c) - 1] == 0) {
                seen_[static_cast<size_t>(u)] &= ~(1ULL << (c - 1));
            }
            int si = sys_index_[static_cast<size_t>(u)];
            if (si >= 0) {
                ++uncolored_nbrs_[static_cast<size_t>(si)];
            }
        }
    }

    // Each designated vertex must still be able to meet its missing colors
    // through its remaining uncolored neighbors.
    bool capacity_ok(int v) {
        int si = sys_index_[static_cast<size_t>(v)];
        uint64_t missing = full_ & ~(1ULL << (color_[static_cast<size_t>(v)] - 1)) &
                           ~seen_[static_cast<size_t>(v)];
        return std::popcount(missing) <= uncolored_nbrs_[static_cast<size_t>(si)];
    }

    bool systems_still_feasible(int v) {
        for (int u : nbrs_[static_cast<size_t>(v)]) {
            if (sys_index_[static_cast<size_t>(u)] >= 0 && !capacity_ok(u)) {
                return false;
            }
        }
        return true;
    }

    int n_;
    int k_;
    long long budget_;
    long long nodes_ = 0;
    uint64_t full_ = 0;
    std::vector<std::vector<int>> nbrs_;
    std::vector<int> color_;
    std::vector<uint64_t> seen_;
    std::vector<int> cnt_;
    std::vector<int> sys_index_;
    std::vector<int> uncolored_nbrs_;
    std::vector<int> system_;
    std::vector<int> free_;
    std::optional<Coloring> found_;
};

// Complete search for a pairwise-linked coloring: canonical backtracking over
// proper colorings (a fresh color is always the lowest unused one), with the
// linkage test at the leaves. No per-class representative exists to anchor a
// designated-vertex search under this relaxed condition.
class LinkedSearch {
public:
    LinkedSearch(const Graph& g, int k, long long budget)
        : n_(g.vertex_count()), k_(k), budget_(budget) {
        full_ = (k_ == 64) ? ~0ULL : ((1ULL << k_) - 1);
        nbrs_.resize(static_cast<size_t>(n_));
        for (int v = 1; v <= n_; ++v) {
            for (VertexId u : g.neighbors(v)) {
                nbrs_[static_cast<size_t>(v) - 1].push_back(u - 1);
            }
        }
        color_.assign(static_cast<size_t>(n_), 0);
        seen_.assign(static_cast<size_t>(n_), 0);
        cnt_.assign(static_cast<size_t>(n_) * static_cast<size_t>(k_), 0);
    }

    FeasibleResult run() {
        FeasibleResult result;
        result.status = dfs(0, 0);
        result.coloring = found_;
        result.nodes = nodes_;
        return result;
    }

private:
    SearchStatus dfs(int v, int used) {
        if (v == n_) {
            return leaf_ok() ? SearchStatus::kFound : SearchStatus::kInfeasible;
        }
        if (k_ - used > n_ - v) {
            return SearchStatus::kInfeasible;  // not enough vertices left for unused colors
        }
        int limit = std::min(k_, used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (seen_[static_cast<size_t>(v)] & (1ULL << (c - 1))) {
                continue;
            }
            if (++nodes_ > budget_) {
                return SearchStatus::kTimeout;
            }
            color_[static_cast<size_t>(v)] = c;
            for (int u : nbrs_[static_cast<size_t>(v)]) {
                if (++cnt_[static_cast<size_t>(u) * static_cast<size_t>(k_) +
                           static_cast<size_t>(c) - 1] == 1) {
                    seen_[static_cast<size_t>(u)] |= 1ULL << (c - 1);
                }
            }
            SearchStatus status = dfs(v + 1, std::max(used, c));
            if (status != SearchStatus::kInfeasible) {
                undo(v, c);
                return status;
            }
            undo(v, c);
        }
        return SearchStatus::kInfeasible;
    }

    void undo(int v, int c) {
        color_[static_cast<size_t>(v)] = 0;
        for (int u : nbrs_[static_cast<size_t>(v)]) {
            if (--cnt_[static_cast<size_t>(u) * static_cast<size_t>(k_) +
                       static_cast<size_t>(c) - 1] == 0) {
                seen_[static_cast<size_t>(u)] &= ~(1ULL << (c - 1));
            }
        }
    }

    bool leaf_ok() {
        std::vector<uint64_t> linked(static_cast<size_t>(k_), 0);
        for (int v = 0; v < n_; ++v) {
            linked[static_cast<size_t>(color_[static_cast<size_t>(v)]) - 1] |=
                seen_[static_cast<size_t>(v)];
        }
        for (int c = 0; c < k_; ++c) {
            if ((linked[static_cast<size_t>(c)] | (1ULL << c)) != full_) {
                return false;
            }
        }
        Coloring c;
        c.k = k_;
        c.colors.assign(color_.begin(), color_.end());
        found_ = std::move(c);
        return true;
    }

    int n_;
    int k_;
    long long budget_;
    long long nodes_ = 0;
    uint64_t full_ = 0;
    std::vector<std::vector<int>> nbrs_;
    std::vector<int> color_;
    std::vector<uint64_t> seen_;
    std::vector<int> cnt_;
    std::optional<Coloring> found_;
};

void check_solver_input(const Graph& g, int k) {
    if (g.vertex_count() > 64) {
        throw std::invalid_argument("solver supports at most 64 vertices, got " +
                                    std::to_string(g.vertex_count()));
    }
    if (k < 1) {
        throw std::invalid_argument("k must be >= 1");
    }
}

PhiResult make_phi_result(const Graph& g, int k, const Coloring& witness) {
    if (!is_b_coloring(g, witness, k)) {
        throw std::logic_error("solver produced a non-b-coloring witness");
    }
    PhiResult out;
    out.phi = k;
    out.witness = witness;
    for (const auto& [color, verts] : b_vertices(g, witness)) {
        out.b_vertex_of[color] = verts.front();
    }
    return out;
}

}  // namespace

FeasibleResult feasible_k(const Graph& g, int k, const SearchLimits& limits) {
    check_solver_input(g, k);
    if (k > g.vertex_count()) {
        return {SearchStatus::kInfeasible, std::nullopt, 0};
    }
    BColoringSearch search(g, k, limits.node_budget);
    return search.run();
}

FeasibleResult feasible_k_linked(const Graph& g, int k, const SearchLimits& limits) {
    check_solver_input(g, k);
    if (k > g.vertex_count()) {
        return {SearchStatus::kInfeasible, std::nullopt, 0};
    }
    long long pairs = static_cast<long long>(k) * (k - 1) / 2;
    if (pairs > g.edge_count()) {
        return {SearchStatus::kInfeasible, std::nullopt, 0};  // each class pair needs its own edge
    }
    LinkedSearch search(g, k, limits.node_budget);
    return search.run();
}

PhiOutcome phi(const Graph& g, const SearchLimits& limits) {
    PhiOutcome out;
    for (int k = m_bound(g); k >= 1; --k) {
        FeasibleResult r = feasible_k(g, k, limits);
        if (r.status == SearchStatus::kFound) {
            out.best = make_phi_result(g, k, *r.coloring);
            break;
        }
        if (r.status == SearchStatus::kTimeout) {
            out.undecided.push_back(k);
        }
    }
    out.status = out.undecided.empty() ? SearchStatus::kFound : SearchStatus::kTimeout;
    if (!out.best && out.undecided.empty()) {
        throw std::logic_error("no feasible k found; a chromatic coloring is always a b-coloring");
    }
    return out;
}

PhiOutcome phi_linked(const Graph& g, const SearchLimits& limits) {
    PhiOutcome out;
    int upper = g.vertex_count();
    while (upper > 1 &&
           static_cast<long long>(upper) * (upper - 1) / 2 > g.edge_count()) {
        --upper;
    }
    for (int k = upper; k >= 1; --k) {
        FeasibleResult r = feasible_k_linked(g, k, limits);
        if (r.status == SearchStatus::kFound) {
            PhiResult result;
            result.phi = k;
            result.witness = *r.coloring;
            out.best = std::move(result);
            break;
        }
        if (r.status == SearchStatus::kTimeout) {
            out.undecided.push_back(k);
        }
    }
    out.status = out.undecided.empty() ? SearchStatus::kFound : SearchStatus::kTimeout;
    return out;
}

namespace {

constexpr int kOracleCap = 9;

// Exhaustive enumeration of all assignments V -> {1..k}, skipping a color
// only when an already-colored neighbor holds it, with the acceptance test
// applied at complete assignments.
class OracleEnumerator {
public:
    OracleEnumerator(const Graph& g, bool linked_mode) : n_(g.vertex_count()), linked_(linked_mode) {
        for (int v = 1; v <= n_; ++v) {
            for (VertexId u : g.neighbors(v)) {
                nbrs_[static_cast<size_t>(v) - 1].push_back(u - 1);
            }
        }
    }

    bool exists(int k) {
        k_ = k;
        full_ = static_cast<uint16_t>((1 << k) - 1);
        for (int v = 0; v < n_; ++v) {
            color_[v] = 0;
            seen_[v] = 0;
            for (int c = 0; c < k; ++c) {
                cnt_[v][c] = 0;
            }
        }
        return dfs(0);
    }

private:
    bool dfs(int v) {
        if (v == n_) {
            return leaf_ok();
        }
        for (int c = 1; c <= k_; ++c) {
            uint16_t bit = static_cast<uint16_t>(1 << (c - 1));
            if (seen_[v] & bit) {
                continue;
            }
            color_[v] = c;
            for (int u : nbrs_[static_cast<size_t>(v)]) {
                if (++cnt_[u][c - 1] == 1) {
                    seen_[u] = static_cast<uint16_t>(seen_[u] | bit);
                }
            }
            bool ok = dfs(v + 1);
            for (int u : nbrs_[static_cast<size_t>(v)]) {
                if (--cnt_[u][c - 1] == 0) {
                    seen_[u] = static_cast<uint16_t>(seen_[u] & ~bit);
                }
            }
            color_[v] = 0;
            if (ok) {
                return true;
            }
        }
        return false;
    }

    bool leaf_ok() const {
        if (linked_) {
            uint16_t linked_acc[kOracleCap] = {};
            uint16_t present = 0;
            for (int v = 0; v < n_; ++v) {
                present = static_cast<uint16_t>(present | (1 << (color_[v] - 1)));
                linked_acc[color_[v] - 1] = static_cast<uint16_t>(linked_acc[color_[v] - 1] | seen_[v]);
            }
            if (present != full_) {
                return false;
            }
            for (int c = 0; c < k_; ++c) {
                if ((linked_acc[c] | (1 << c)) != full_) {
                    return false;
                }
            }
            return true;
        }
        uint16_t classes_ok = 0;
        for (int v = 0; v < n_; ++v) {
            uint16_t bit = static_cast<uint16_t>(1 << (color_[v] - 1));
            if ((seen_[v] | bit) == full_) {
                classes_ok = static_cast<uint16_t>(classes_ok | bit);
            }
        }
        return classes_ok == full_;
    }

    int n_;
    bool linked_;
    int k_ = 0;
    uint16_t full_ = 0;
    std::vector<int> nbrs_[kOracleCap];
    int color_[kOracleCap] = {};
    uint16_t seen_[kOracleCap] = {};
    int cnt_[kOracleCap][kOracleCap] = {};
};

int oracle_run(const Graph& g, bool linked_mode) {
    if (g.vertex_count() > kOracleCap) {
        throw std::invalid_argument("oracle capped at " + std::to_string(kOracleCap) +
                                    " vertices, got " + std::to_string(g.vertex_count()));
    }
    OracleEnumerator oracle(g, linked_mode);
    for (int k = g.vertex_count(); k >= 1; --k) {
        if (oracle.exists(k)) {
            return k;
        }
    }
    throw std::logic_error("oracle found no b-coloring at any k");
}

}  // namespace

int phi_oracle(const Graph& g) {
    return oracle_run(g, false);
}

int phi_oracle_linked(const Graph& g) {
    return oracle_run(g, true);
}

SpectrumResult b_spectrum(const Graph& g, const SearchLimits& limits) {
    SpectrumResult out;
    for (int k = 1; k <= m_bound(g); ++k) {
        FeasibleResult r = feasible_k(g, k, limits);
        if (r.status == SearchStatus::kFound) {
            out.feasible.push_back(k);
        } else if (r.status == SearchStatus::kTimeout) {
            out.undecided.push_back(k);
        }
    }
    return out;
}

}  // namespace bchroma
