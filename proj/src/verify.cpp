#include "bchroma/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "bchroma/cliques.hpp"
#include "bchroma/families.hpp"

namespace bchroma {

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kOracleLimit = 9;

using OrderedJson = nlohmann::ordered_json;

const std::vector<std::pair<ClaimId, const char*>>& claim_names() {
    static const std::vector<std::pair<ClaimId, const char*>> names = {
        {ClaimId::kProp12Complete, "PROP12-COMPLETE"},
        {ClaimId::kProp12Path, "PROP12-PATH"},
        {ClaimId::kProp12Cycle, "PROP12-CYCLE"},
        {ClaimId::kProp12Bipartite, "PROP12-BIPARTITE"},
        {ClaimId::kJaco, "JACO"},
        {ClaimId::kOrnated, "ORNATED"},
        {ClaimId::kRasta, "RASTA"},
        {ClaimId::kChithra, "CHITHRA"},
        {ClaimId::kSunlet, "SUNLET"},
        {ClaimId::kWheel, "WHEEL"},
        {ClaimId::kSun, "SUN"},
        {ClaimId::kHelm, "HELM"},
        {ClaimId::kP3FromK1, "P3-FROM-K1"},
        {ClaimId::kSetGraph, "SETGRAPH"},
        {ClaimId::kSetGraphCliques, "SETGRAPH-CLIQUES"},
        {ClaimId::kEdgeSetStar, "EDGESET-STAR"},
        {ClaimId::kEdgeSetBound, "EDGESET-BOUND"},
        {ClaimId::kEdgeJoint, "EDGEJOINT"},
        {ClaimId::kChithraDecomp, "CHITHRA-DECOMP"},
        {ClaimId::kJacoHopeComplete, "JACO-HOPE-COMPLETE"},
    };
    return names;
}

// ---------------------------------------------------------------------------
// Shared solver access with memoization and oracle gating.
// ---------------------------------------------------------------------------

struct PhiValue {
    bool decided = false;
    int value = 0;
    std::vector<int> undecided;
};

class SolveContext {
public:
    SolveContext(long long budget, bool linked) : budget_(budget), linked_(linked) {}

    bool linked_definition() const { return linked_; }

    /// phi with memoization; instances small enough for the oracle are
    /// cross-checked and a disagreement aborts the whole run.
    PhiValue solve(const Graph& g) {
        std::string key = graph_key(g);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) {
                return it->second;
            }
        }
        SearchLimits limits{budget_};
        PhiOutcome outcome = linked_ ? phi_linked(g, limits) : phi(g, limits);
        PhiValue value;
        if (outcome.status == SearchStatus::kFound) {
            value.decided = true;
            value.value = outcome.best->phi;
        } else {
            value.undecided = outcome.undecided;
            if (outcome.best) {
                value.value = outcome.best->phi;
            }
        }
        if (value.decided && g.vertex_count() <= kOracleLimit) {
            int oracle = linked_ ? phi_oracle_linked(g) : phi_oracle(g);
            if (oracle != value.value) {
                throw OracleMismatchError("solver/oracle disagreement on " + key + ": solver " +
                                          std::to_string(value.value) + ", oracle " +
                                          std::to_string(oracle));
            }
        }
        std::lock_guard<std::mutex> lock(mutex_);
        cache_.emplace(key, value);
        return value;
    }

private:
    long long budget_;
    bool linked_;
    std::mutex mutex_;
    std::unordered_map<std::string, PhiValue> cache_;
};

// ---------------------------------------------------------------------------
// Instance model.
// ---------------------------------------------------------------------------

struct Outcome {
    long long formula = 0;
    std::optional<long long> solver;
    ClaimStatus status = ClaimStatus::kConfirmed;
    std::string notes;
};

struct Instance {
    ClaimId id;
    OrderedJson params;
    int n_param = 0;  // grid filter handle (0 when the claim has no size knob)
    std::vector<std::pair<std::string, Graph>> targets;
    std::function<Outcome(SolveContext&)> eval;
};

std::string join_ints(const std::vector<int>& values) {
    std::ostringstream out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) {
            out << ',';
        }
        out << values[i];
    }
    return out.str();
}

/// Equality claim on phi of a single graph, with an optional hypothesis.
/// Hypothesis failures are UNSUPPORTED but still record the solver value.
Outcome phi_equality(SolveContext& ctx, const Graph& g, long long formula, bool hypothesis_ok,
                     const std::string& note) {
    Outcome out;
    out.formula = formula;
    out.notes = note;
    PhiValue value = ctx.solve(g);
    if (!value.decided) {
        out.status = hypothesis_ok ? ClaimStatus::kTimeout : ClaimStatus::kUnsupported;
        if (!out.notes.empty()) {
            out.notes += "; ";
        }
        out.notes += "undecided k: " + join_ints(value.undecided);
        return out;
    }
    out.solver = value.value;
    if (!hypothesis_ok) {
        out.status = ClaimStatus::kUnsupported;
    } else {
        out.status = (value.value == formula) ? ClaimStatus::kConfirmed : ClaimStatus::kRefuted;
    }
    return out;
}

Outcome structural_equality(long long formula, long long solver, const std::string& note) {
    Outcome out;
    out.formula = formula;
    out.solver = solver;
    out.status = (formula == solver) ? ClaimStatus::kConfirmed : ClaimStatus::kRefuted;
    out.notes = note;
    return out;
}

// ---------------------------------------------------------------------------
// Named small graphs used by several grids.
// ---------------------------------------------------------------------------

Graph named_graph(const std::string& name) {
    if (name == "K1") return complete(1);
    if (name == "K3") return complete(3);
    if (name == "K4") return complete(4);
    if (name == "C4") return cycle(4);
    if (name == "C5") return cycle(5);
    if (name == "C6") return cycle(6);
    if (name == "P4") return path(4);
    if (name == "P5") return path(5);
    if (name == "K1,2") return complete_bipartite(1, 2);
    if (name == "K1,3") return complete_bipartite(1, 3);
    if (name == "K1,4") return complete_bipartite(1, 4);
    if (name == "K2,3") return complete_bipartite(2, 3);
    if (name == "W5") return wheel(4);
    if (name == "W6") return wheel(5);
    if (name == "sunlet4") return sunlet(4);
    if (name == "sun3") return sun(3);
    if (name == "helm4") return helm(4);
    if (name == "paw") return Graph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
    throw std::invalid_argument("unknown named graph \"" + name + "\"");
}

// ---------------------------------------------------------------------------
// Grid builders, one per claim.
// ---------------------------------------------------------------------------

void add_prop12(std::vector<Instance>& out, ClaimId id) {
    if (id == ClaimId::kProp12Complete) {
        for (int n = 1; n <= 12; ++n) {
            Graph g = complete(n);
            out.push_back({id,
                           OrderedJson{{"n", n}},
                           n,
                           {{"K" + std::to_string(n), g}},
                           [g, n](SolveContext& ctx) { return phi_equality(ctx, g, n, true, ""); }});
        }
    } else if (id == ClaimId::kProp12Path) {
        for (int n = 2; n <= 12; ++n) {
            Graph g = path(n);
            long long formula = (n <= 3) ? 2 : 3;
            out.push_back({id,
                           OrderedJson{{"n", n}},
                           n,
                           {{"P" + std::to_string(n), g}},
                           [g, formula](SolveContext& ctx) {
                               return phi_equality(ctx, g, formula, true, "");
                           }});
        }
    } else if (id == ClaimId::kProp12Cycle) {
        for (int n = 3; n <= 12; ++n) {
            Graph g = cycle(n);
            long long formula = (n == 4) ? 2 : 3;
            out.push_back({id,
                           OrderedJson{{"n", n}},
                           n,
                           {{"C" + std::to_string(n), g}},
                           [g, formula](SolveContext& ctx) {
                               return phi_equality(ctx, g, formula, true, "");
                           }});
        }
    } else {
        for (int m = 2; m <= 5; ++m) {
            for (int n = m; n <= 5; ++n) {
                Graph g = complete_bipartite(m, n);
                out.push_back({id,
                               OrderedJson{{"m", m}, {"n", n}},
                               n,
                               {{"K" + std::to_string(m) + "," + std::to_string(n), g}},
                               [g](SolveContext& ctx) { return phi_equality(ctx, g, 2, true, ""); }});
            }
        }
    }
}

void add_jaco(std::vector<Instance>& out, bool hope_variant) {
    const std::vector<std::pair<int, int>> functions = {{1, 0}, {1, 1}, {2, 0}};
    for (const auto& [m, c] : functions) {
        for (int n = 2; n <= 12; ++n) {
            Digraph d = jaco({n, m, c});
            JacoStructure structure = jaco_structure(d);
            Graph g = underlying(d);
            std::string label = "jaco(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                                ",c=" + std::to_string(c) + ")";
            if (!hope_variant) {
                long long formula = (n - structure.prime) + 1;
                std::string note = "prime=" + std::to_string(structure.prime) +
                                   " jaconian={" + join_ints(structure.jaconian_set) + "}";
                out.push_back({ClaimId::kJaco,
                               OrderedJson{{"c", c}, {"m", m}, {"n", n}},
                               n,
                               {{label, g}},
                               [g, formula, note](SolveContext& ctx) {
                                   return phi_equality(ctx, g, formula, true, note);
                               }});
            } else {
                bool complete_hope = !structure.hope || structure.hope->is_complete();
                std::string note = "prime=" + std::to_string(structure.prime);
                if (!structure.hope) {
                    note += "; hope empty (prime is the last vertex)";
                }
                out.push_back({ClaimId::kJacoHopeComplete,
                               OrderedJson{{"c", c}, {"m", m}, {"n", n}},
                               n,
                               {},
                               [complete_hope, note](SolveContext&) {
                                   return structural_equality(1, complete_hope ? 1 : 0, note);
                               }});
            }
        }
    }
}

void add_ornated(std::vector<Instance>& out) {
    std::vector<std::vector<int>> strings;
    for (int len = 1; len <= 3; ++len) {
        std::vector<int> current(static_cast<size_t>(len), 0);
        while (true) {
            strings.push_back(current);
            int pos = len - 1;
            while (pos >= 0 && current[static_cast<size_t>(pos)] == 3) {
                current[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) {
                break;
            }
            ++current[static_cast<size_t>(pos)];
        }
    }
    for (const auto& entries : strings) {
        OrnatedString s{entries};
        int a = s.max_entry();
        for (int n = 1; n <= 12; ++n) {
            Graph g = underlying(ornated(n, s));
            bool supported = a > 0;
            long long formula = 0;
            std::string note;
            if (supported) {
                formula = (n <= a + 1) ? n : a + 2;
                note = "a_max=" + std::to_string(a);
            } else {
                note = "hypothesis needs a positive entry";
            }
            out.push_back({ClaimId::kOrnated,
                           OrderedJson{{"n", n}, {"string", entries}},
                           n,
                           {{"ornated(n=" + std::to_string(n) + ",s=(" + join_ints(entries) + "))", g}},
                           [g, formula, supported, note](SolveContext& ctx) {
                               return phi_equality(ctx, g, formula, supported, note);
                           }});
        }
    }
}

void add_rasta(std::vector<Instance>& out) {
    const std::vector<std::vector<int>> specs = {
        {3, 2}, {4, 2}, {4, 3, 2}, {5, 3, 2}, {5, 4, 3, 2}};
    for (const auto& terms : specs) {
        Graph g = rasta(RastaSpec{terms});
        out.push_back({ClaimId::kRasta,
                       OrderedJson{{"terms", terms}},
                       0,
                       {{"rasta(" + join_ints(terms) + ")", g}},
                       [g](SolveContext& ctx) { return phi_equality(ctx, g, 2, true, ""); }});
    }
}

Outcome eval_chithra_instance(SolveContext& ctx, const Graph& base,
                              const std::vector<std::vector<VertexId>>& subsets) {
    PhiValue base_phi = ctx.solve(base);
    if (!base_phi.decided) {
        Outcome out;
        out.status = ClaimStatus::kTimeout;
        out.notes = "base phi undecided";
        return out;
    }
    Graph extended = chithra({base, subsets}, /*require_cover=*/false);
    bool supported = !(is_path_graph(extended) && extended.vertex_count() >= 4);
    std::string note;
    if (!supported) {
        note = "excluded: result is a path on " + std::to_string(extended.vertex_count()) +
               " vertices";
    }
    std::set<VertexId> covered;
    for (const auto& w : subsets) {
        covered.insert(w.begin(), w.end());
    }
    if (static_cast<int>(covered.size()) < base.vertex_count()) {
        if (!note.empty()) {
            note += "; ";
        }
        note += "subsets do not cover the base";
    }
    return phi_equality(ctx, extended, base_phi.value + 1, supported, note);
}

void add_chithra(std::vector<Instance>& out) {
    const std::vector<std::string> bases = {"K3", "C4", "C5", "P4"};
    for (const std::string& base_name : bases) {
        Graph base = named_graph(base_name);
        auto subsets = subsets_by_size_lex(base.vertex_count());
        auto push = [&](std::vector<std::vector<VertexId>> system) {
            OrderedJson params{{"base", base_name}, {"subsets", system}};
            Graph extended = chithra({base, system}, /*require_cover=*/false);
            out.push_back({ClaimId::kChithra,
                           params,
                           base.vertex_count(),
                           {{base_name, base},
                            {base_name + "+chithra", extended}},
                           [base, system](SolveContext& ctx) {
                               return eval_chithra_instance(ctx, base, system);
                           }});
        };
        for (size_t i = 0; i < subsets.size(); ++i) {
            push({subsets[i]});
        }
        for (size_t i = 0; i < subsets.size(); ++i) {
            for (size_t j = i; j < subsets.size(); ++j) {
                push({subsets[i], subsets[j]});
            }
        }
    }
}

void add_corollaries(std::vector<Instance>& out, ClaimId id) {
    if (id == ClaimId::kP3FromK1) {
        Graph base = complete(1);
        std::vector<std::vector<VertexId>> system = {{1}, {1}};
        out.push_back({id,
                       OrderedJson{{"base", "K1"}, {"subsets", system}},
                       0,
                       {{"K1", base}, {"P3", chithra({base, system})}},
                       [base, system](SolveContext& ctx) {
                           return eval_chithra_instance(ctx, base, system);
                       }});
        return;
    }
    if (id == ClaimId::kSunlet) {
        for (int n = 3; n <= 8; ++n) {
            Graph g = sunlet(n);
            bool supported = n >= 5;
            out.push_back({id,
                           OrderedJson{{"n", n}},
                           n,
                           {{"sunlet" + std::to_string(n), g}},
                           [g, supported](SolveContext& ctx) {
                               return phi_equality(ctx, g, 4, supported,
                                                   supported ? "" : "stated for n >= 5");
                           }});
        }
        return;
    }
    if (id == ClaimId::kWheel) {
        for (int n = 3; n <= 8; ++n) {
            Graph g = wheel(n);
            bool supported = n >= 5;
            out.push_back({id,
                           OrderedJson{{"n", n}},
                           n,
                           {{"wheel(rim=" + std::to_string(n) + ")", g}},
                           [g, supported](SolveContext& ctx) {
                               return phi_equality(ctx, g, 4, supported,
                                                   supported ? "" : "stated for n >= 5");
                           }});
        }
        return;
    }
    if (id == ClaimId::kSun) {
        for (int n = 3; n <= 4; ++n) {
            Graph g = sun(n);
            out.push_back({id,
                           OrderedJson{{"n", n}},
                           n,
                           {{"sun(core=" + std::to_string(n) + ")", g}},
                           [g, n](SolveContext& ctx) {
                               return phi_equality(ctx, g, n + 1, true, "");
                           }});
        }
        return;
    }
    for (int n = 4; n <= 6; ++n) {  // HELM: rim size of the underlying wheel
        Graph g = helm(n);
        bool supported = n >= 5;
        out.push_back({ClaimId::kHelm,
                       OrderedJson{{"n", n}},
                       n,
                       {{"helm(rim=" + std::to_string(n) + ")", g}},
                       [g, supported](SolveContext& ctx) {
                           return phi_equality(ctx, g, 5, supported,
                                               supported ? "" : "stated for n >= 5");
                       }});
    }
}

void add_set_graph(std::vector<Instance>& out, ClaimId id) {
    for (int n = 2; n <= 4; ++n) {
        Graph g = set_graph(n);
        long long largest = 1LL << (n - 1);
        if (id == ClaimId::kSetGraph) {
            out.push_back({id,
                           OrderedJson{{"n", n}},
                           n,
                           {{"setgraph" + std::to_string(n), g}},
                           [g, largest](SolveContext& ctx) {
                               return phi_equality(ctx, g, largest + 1, true, "");
                           }});
        } else {
            for (const char* measure : {"count", "size"}) {
                std::string m = measure;
                out.push_back({id,
                               OrderedJson{{"measure", m}, {"n", n}},
                               n,
                               {{"setgraph" + std::to_string(n), g}},
                               [g, largest, m](SolveContext&) {
                                   CliqueCount cliques = count_max_cliques(g);
                                   long long got = (m == "size") ? cliques.size : cliques.count;
                                   return structural_equality(largest, got,
                                                              "max cliques: size " +
                                                                  std::to_string(cliques.size) +
                                                                  ", count " +
                                                                  std::to_string(cliques.count));
                               }});
            }
        }
    }
}

void add_edge_set(std::vector<Instance>& out, ClaimId id) {
    const std::vector<std::string> graphs = {"K1,2", "K1,3", "K1,4", "P4", "P5", "C4", "paw"};
    for (const std::string& name : graphs) {
        Graph base = named_graph(name);
        Graph esg = edge_set_graph(base);
        bool star = is_star(base);
        if (id == ClaimId::kEdgeSetStar) {
            Graph esg_shared = edge_set_graph(base, /*shared_edge_adjacent=*/true);
            std::string note = "|V|=" + std::to_string(esg.vertex_count());
            if (esg_shared.is_complete() != esg.is_complete()) {
                note += "; differs under the shared-edge reading";
            }
            out.push_back({id,
                           OrderedJson{{"graph", name}},
                           0,
                           {},
                           [star, esg, note](SolveContext&) {
                               return structural_equality(star ? 1 : 0,
                                                          esg.is_complete() ? 1 : 0, note);
                           }});
        } else {
            long long bound = esg.vertex_count() - (star ? 0 : 1);
            out.push_back({id,
                           OrderedJson{{"graph", name}},
                           0,
                           {{"edgeset(" + name + ")", esg}},
                           [esg, bound](SolveContext& ctx) {
                               Outcome out = phi_equality(ctx, esg, bound, true,
                                                          "bound check: phi <= formula");
                               if (out.solver && out.status != ClaimStatus::kTimeout) {
                                   out.status = (*out.solver <= bound) ? ClaimStatus::kConfirmed
                                                                       : ClaimStatus::kRefuted;
                               }
                               return out;
                           }});
        }
    }
}

void add_edge_joint(std::vector<Instance>& out) {
    const std::vector<std::string> names = {"K3", "C4", "C5", "P4", "K4"};
    for (size_t i = 0; i < names.size(); ++i) {
        for (size_t j = i; j < names.size(); ++j) {
            Graph left = named_graph(names[i]);
            Graph right = named_graph(names[j]);
            Graph joint = edge_joint(left, 1, right, 1);
            out.push_back({ClaimId::kEdgeJoint,
                           OrderedJson{{"left", names[i]}, {"right", names[j]}, {"u", 1}, {"v", 1}},
                           0,
                           {{names[i], left},
                            {names[j], right},
                            {names[i] + "~" + names[j], joint}},
                           [left, right, joint](SolveContext& ctx) {
                               PhiValue a = ctx.solve(left);
                               PhiValue b = ctx.solve(right);
                               if (!a.decided || !b.decided) {
                                   Outcome out;
                                   out.status = ClaimStatus::kTimeout;
                                   out.notes = "component phi undecided";
                                   return out;
                               }
                               long long formula = std::max(a.value, b.value);
                               return phi_equality(ctx, joint, formula, true,
                                                   "components: " + std::to_string(a.value) +
                                                       " and " + std::to_string(b.value));
                           }});
        }
    }
}

void add_chithra_decomp(std::vector<Instance>& out) {
    const std::vector<std::string> corpus = {"P4",   "P5",   "C4", "C5", "C6",      "K3",   "K4",
                                             "K1,3", "K2,3", "W5", "W6", "sunlet4", "sun3", "helm4"};
    for (const std::string& name : corpus) {
        Graph g = named_graph(name);
        auto independent_sets = maximal_independent_sets(g);
        size_t maximum = 0;
        for (const auto& u : independent_sets) {
            maximum = std::max(maximum, u.size());
        }
        for (const auto& u : independent_sets) {
            bool is_maximum = u.size() == maximum;
            out.push_back({ClaimId::kChithraDecomp,
                           OrderedJson{{"graph", name}, {"u_set", u}},
                           0,
                           {{name, g}},
                           [g, u, is_maximum](SolveContext&) {
                               Outcome out;
                               out.formula = 1;
                               out.notes = is_maximum ? "U is a maximum independent set"
                                                      : "U is maximal but not maximum";
                               auto decomposition = chithra_decomposition(g, u);
                               if (!decomposition) {
                                   out.status = ClaimStatus::kUnsupported;
                                   out.notes += "; decomposition conditions fail";
                                   return out;
                               }
                               Graph rebuilt =
                                   chithra({decomposition->base, decomposition->subsets});
                               // Canonical relabeling: base keeps ascending order and
                               // u_i is the i-th smallest removed vertex, so equality
                               // up to relabeling reduces to equality of edge sets
                               // under that permutation.
                               int base_n = decomposition->base.vertex_count();
                               std::vector<int> to_original(static_cast<size_t>(g.vertex_count()) + 1,
                                                            0);
                               std::vector<bool> in_u(static_cast<size_t>(g.vertex_count()) + 1,
                                                      false);
                               for (VertexId v : u) {
                                   in_u[static_cast<size_t>(v)] = true;
                               }
                               int next = 0;
                               for (int v = 1; v <= g.vertex_count(); ++v) {
                                   if (!in_u[static_cast<size_t>(v)]) {
                                       to_original[static_cast<size_t>(++next)] = v;
                                   }
                               }
                               for (size_t i = 0; i < u.size(); ++i) {
                                   to_original[static_cast<size_t>(base_n) + i + 1] = u[i];
                               }
                               std::vector<Edge> mapped;
                               for (const auto& [a, b] : rebuilt.edges()) {
                                   mapped.emplace_back(to_original[static_cast<size_t>(a)],
                                                       to_original[static_cast<size_t>(b)]);
                               }
                               Graph remapped = Graph::from_edges(g.vertex_count(), mapped);
                               out.solver = (remapped == g) ? 1 : 0;
                               out.status = (*out.solver == 1) ? ClaimStatus::kConfirmed
                                                               : ClaimStatus::kRefuted;
                               return out;
                           }});
        }
    }
}

std::vector<Instance> build_instances(ClaimId id) {
    std::vector<Instance> out;
    switch (id) {
        case ClaimId::kProp12Complete:
        case ClaimId::kProp12Path:
        case ClaimId::kProp12Cycle:
        case ClaimId::kProp12Bipartite:
            add_prop12(out, id);
            break;
        case ClaimId::kJaco:
            add_jaco(out, false);
            break;
        case ClaimId::kJacoHopeComplete:
            add_jaco(out, true);
            break;
        case ClaimId::kOrnated:
            add_ornated(out);
            break;
        case ClaimId::kRasta:
            add_rasta(out);
            break;
        case ClaimId::kChithra:
            add_chithra(out);
            break;
        case ClaimId::kP3FromK1:
        case ClaimId::kSunlet:
        case ClaimId::kWheel:
        case ClaimId::kSun:
        case ClaimId::kHelm:
            add_corollaries(out, id);
            break;
        case ClaimId::kSetGraph:
        case ClaimId::kSetGraphCliques:
            add_set_graph(out, id);
            break;
        case ClaimId::kEdgeSetStar:
        case ClaimId::kEdgeSetBound:
            add_edge_set(out, id);
            break;
        case ClaimId::kEdgeJoint:
            add_edge_joint(out);
            break;
        case ClaimId::kChithraDecomp:
            add_chithra_decomp(out);
            break;
    }
    return out;
}

std::vector<Instance> build_suite_instances(const SuiteConfig& config) {
    std::vector<Instance> instances;
    for (ClaimId id : config.claims) {
        auto claim_instances = build_instances(id);
        for (auto& instance : claim_instances) {
            if (config.max_n && instance.n_param > *config.max_n) {
                continue;
            }
            if (config.exact_n && instance.n_param != *config.exact_n) {
                continue;
            }
            instances.push_back(std::move(instance));
        }
    }
    std::stable_sort(instances.begin(), instances.end(), [](const Instance& a, const Instance& b) {
        std::string an = to_string(a.id);
        std::string bn = to_string(b.id);
        if (an != bn) {
            return an < bn;
        }
        return a.params.dump() < b.params.dump();
    });
    return instances;
}

}  // namespace

std::string to_string(ClaimId id) {
    for (const auto& [claim, name] : claim_names()) {
        if (claim == id) {
            return name;
        }
    }
    return "UNKNOWN";
}

std::optional<ClaimId> claim_from_string(const std::string& name) {
    for (const auto& [claim, claim_name] : claim_names()) {
        if (name == claim_name) {
            return claim;
        }
    }
    return std::nullopt;
}

const std::vector<ClaimId>& all_claims() {
    static const std::vector<ClaimId> ids = [] {
        std::vector<ClaimId> out;
        for (const auto& [claim, name] : claim_names()) {
            out.push_back(claim);
        }
        return out;
    }();
    return ids;
}

std::string to_string(ClaimStatus status) {
    switch (status) {
        case ClaimStatus::kConfirmed:
            return "CONFIRMED";
        case ClaimStatus::kRefuted:
            return "REFUTED";
        case ClaimStatus::kUnsupported:
            return "UNSUPPORTED";
        case ClaimStatus::kTimeout:
            return "TIMEOUT";
    }
    return "UNKNOWN";
}

ReportSummary Report::summary() const {
    ReportSummary s;
    for (const auto& result : results) {
        switch (result.status) {
            case ClaimStatus::kConfirmed:
                ++s.confirmed;
                break;
            case ClaimStatus::kRefuted:
                ++s.refuted;
                break;
            case ClaimStatus::kUnsupported:
                ++s.unsupported;
                break;
            case ClaimStatus::kTimeout:
                ++s.timeout;
                break;
        }
    }
    return s;
}

ClaimResult evaluate_claim(ClaimId id, const nlohmann::json& params, const EvalOptions& options) {
    auto instances = build_instances(id);
    for (const auto& instance : instances) {
        if (nlohmann::json(instance.params) == params) {
            SolveContext ctx(options.node_budget, options.linked_definition);
            auto start = std::chrono::steady_clock::now();
            Outcome outcome = instance.eval(ctx);
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            ClaimResult result;
            result.claim = to_string(id);
            result.params = instance.params;
            result.formula = outcome.formula;
            result.solver = outcome.solver;
            result.status = outcome.status;
            result.notes = outcome.notes;
            result.seconds = elapsed.count();
            return result;
        }
    }
    throw std::invalid_argument("no grid instance of " + to_string(id) + " matches params " +
                                params.dump());
}

Report run_suite(const SuiteConfig& config) {
    auto instances = build_suite_instances(config);
    SolveContext ctx(config.node_budget, config.linked_definition);
    std::vector<ClaimResult> results(instances.size());
    std::atomic<size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    int workers = std::max(1, config.workers);
    auto work = [&] {
        while (true) {
            size_t index = next.fetch_add(1);
            if (index >= instances.size()) {
                return;
            }
            try {
                const Instance& instance = instances[index];
                auto start = std::chrono::steady_clock::now();
                Outcome outcome = instance.eval(ctx);
                std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
                ClaimResult& result = results[index];
                result.claim = to_string(instance.id);
                result.params = instance.params;
                result.formula = outcome.formula;
                result.solver = outcome.solver;
                result.status = outcome.status;
                result.notes = outcome.notes;
                result.seconds = config.deterministic ? 0.0 : elapsed.count();
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next.store(instances.size());
                return;
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) {
            pool.emplace_back(work);
        }
        for (auto& thread : pool) {
            thread.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    Report report;
    report.suite = (config.claims.size() == all_claims().size() && !config.max_n &&
                    !config.exact_n)
                       ? "default"
                       : "custom";
    if (config.linked_definition) {
        report.suite += "+linked-definition";
    }
    report.version = kVersion;
    report.results = std::move(results);
    return report;
}

std::string emit_report(const Report& report, ReportFormat format) {
    ReportSummary summary = report.summary();
    if (format == ReportFormat::kJson) {
        OrderedJson out;
        out["suite"] = report.suite;
        out["version"] = report.version;
        out["results"] = OrderedJson::array();
        for (const auto& result : report.results) {
            OrderedJson row;
            row["claim"] = result.claim;
            row["params"] = result.params;
            row["formula"] = result.formula;
            if (result.solver) {
                row["solver"] = *result.solver;
            } else {
                row["solver"] = nullptr;
            }
            row["status"] = to_string(result.status);
            row["seconds"] = result.seconds;
            row["notes"] = result.notes;
            out["results"].push_back(std::move(row));
        }
        out["summary"] = OrderedJson{{"confirmed", summary.confirmed},
                                     {"refuted", summary.refuted},
                                     {"unsupported", summary.unsupported},
                                     {"timeout", summary.timeout}};
        return out.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "suite " << report.suite << " (version " << report.version << ")\n";
    char line[512];
    std::snprintf(line, sizeof(line), "%-20s %-48s %8s %8s %-12s %9s %s\n", "CLAIM", "PARAMS",
                  "FORMULA", "SOLVER", "STATUS", "SECONDS", "NOTES");
    out << line;
    for (const auto& result : report.results) {
        std::string params = result.params.dump();
        if (params.size() > 48) {
            params = params.substr(0, 45) + "...";
        }
        std::string solver = result.solver ? std::to_string(*result.solver) : "-";
        std::snprintf(line, sizeof(line), "%-20s %-48s %8lld %8s %-12s %9.3f %s\n",
                      result.claim.c_str(), params.c_str(), result.formula, solver.c_str(),
                      to_string(result.status).c_str(), result.seconds, result.notes.c_str());
        out << line;
    }
    out << "summary: confirmed=" << summary.confirmed << " refuted=" << summary.refuted
        << " unsupported=" << summary.unsupported << " timeout=" << summary.timeout << "\n";
    return out.str();
}

int report_exit_code(const Report& report) {
    ReportSummary summary = report.summary();
    if (summary.timeout > 0) {
        return 20;
    }
    if (summary.refuted > 0) {
        return 10;
    }
    return 0;
}

std::vector<std::pair<std::string, Graph>> suite_target_graphs(const SuiteConfig& config) {
    auto instances = build_suite_instances(config);
    std::vector<std::pair<std::string, Graph>> out;
    std::set<std::string> seen;
    for (const auto& instance : instances) {
        for (const auto& [label, graph] : instance.targets) {
            if (seen.insert(graph_key(graph)).second) {
                out.emplace_back(label, graph);
            }
        }
    }
    return out;
}

Graph random_graph(int n, double p, uint32_t seed) {
    if (n < 1) {
        throw std::invalid_argument("random graph needs n >= 1");
    }
    std::mt19937 rng(seed);
    auto threshold = static_cast<uint64_t>(std::llround(p * 1000000.0));
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (rng() % 1000000 < threshold) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace bchroma
