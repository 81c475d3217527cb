// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance runner: one PASS/FAIL line per criterion with its wall time.
// Pass --long to also run the optional d = 3 refutation on K8 minus a
// perfect matching (unbounded budget, not part of the gate).
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "boxicity/boxrep.hpp"
#include "boxicity/derivation.hpp"
#include "boxicity/exact.hpp"
#include "boxicity/json_io.hpp"
#include "boxicity/poset.hpp"
#include "support.hpp"

using namespace boxicity;
using testing_support::naive_representation;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

// --- independent oracles -----------------------------------------------------

bool induces_forest(const Graph& g, const std::vector<int>& color, int a, int b) {
    std::vector<int> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto [u, v] : g.edges()) {
        const bool in_u = color[u] == a || color[u] == b;
        const bool in_v = color[v] == a || color[v] == b;
        if (!in_u || !in_v) continue;
        const int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

bool is_acyclic_coloring(const Graph& g, const std::vector<int>& color, int k) {
    for (auto [u, v] : g.edges())
        if (color[u] == color[v]) return false;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (!induces_forest(g, color, a, b)) return false;
    return true;
}

// Minimum acyclic colouring by enumerating set partitions (restricted growth
// strings). Fine for n <= 8.
int acyclic_chromatic_by_partitions(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    int best = n;
    std::vector<int> color(n, 0);
    std::function<void(int, int)> grow = [&](int v, int used) {
        if (used >= best) return;
        if (v == n) {
            if (is_acyclic_coloring(g, color, used)) best = used;
            return;
        }
        for (int c = 0; c <= used; ++c) {
            color[v] = c;
            bool proper = true;
            for (Vertex u : g.neighbors(v))
                if (u < v && color[u] == c) proper = false;
            if (proper) grow(v + 1, std::max(used, c + 1));
        }
    };
    grow(0, 0);
    return best;
}

BoxRepresentation naive_minus(const Graph& g, const VertexSet& x) {
    const auto rest = remove_vertices(g, x);
    return naive_representation(rest.graph, rest.to_original);
}

io::Json load_golden(int k) {
    std::ifstream in(std::string(BOXICITY_GOLDEN_DIR) + "/figure1_k" + std::to_string(k) + ".json");
    std::stringstream ss;
    ss << in.rdbuf();
    return io::parse_document(ss.str());
}

// --- criteria ------------------------------------------------------------------

Outcome roberts_exact() {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
        const auto start = std::chrono::steady_clock::now();
        const auto r = exact_boxicity(roberts_graph(n), n + 1);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.expect(r.status == SearchStatus::Exact && r.value == n, "roberts_graph(" + std::to_string(n) + ") value");
        o.expect(r.witness && verify_representation(*r.witness, roberts_graph(n)).equal, "witness fails");
        o.expect(secs < 60.0, "run over 60 s for n = " + std::to_string(n));
    }
    return o;
}

Outcome roberts_representations() {
    Outcome o;
    for (int n = 1; n <= 6; ++n) {
        const auto rep = roberts_representation(n);
        o.expect(rep.dimension() == n, "dimension for n = " + std::to_string(n));
        o.expect(verify_representation(rep, roberts_graph(n)).equal, "mismatch for n = " + std::to_string(n));
    }
    return o;
}

Outcome figure1_goldens() {
    Outcome o;
    for (int k = 6; k <= 12; ++k) {
        const std::string tag = "k = " + std::to_string(k);
        const auto doc = load_golden(k);
        const Graph g = io::graph_from_json(doc["graph"]);
        const auto cls = io::classification_from_json(doc["classification"], g);
        // Every class/anchor combination is present.
        std::vector<int> seen(4 * k, 0);
        for (const auto& [v, a] : cls.assignments) seen[(static_cast<int>(a.cls) - 1) * k + a.anchor] = 1;
        o.expect(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }), "missing variants, " + tag);

        const auto rep = figure1_gadget(g, cls);
        for (const auto& [key, box] : doc["boxes_x2"].items()) {
            const Vertex v = std::stoi(key);
            for (int dim = 0; dim < 2; ++dim) {
                const Interval& iv = rep.at(v)[dim];
                o.expect(iv.lo * Rational(2) == Rational(box[dim][0].get<std::int64_t>()) &&
                             iv.hi * Rational(2) == Rational(box[dim][1].get<std::int64_t>()),
                         "coordinate mismatch at vertex " + key + ", " + tag);
            }
        }
        const Graph h = box_graph_of(rep);
        for (int p = 0; p < k; ++p)
            for (int q = p + 1; q < k; ++q)
                o.expect(h.adjacent(p, q) == (q - p == 1 || q - p == k - 1), "cycle not C_k, " + tag);
        for (const auto& [v, a] : cls.assignments) {
            const auto expect = cls.positions(a);
            for (int p = 0; p < k; ++p)
                o.expect(h.adjacent(v, p) == (std::find(expect.begin(), expect.end(), p) != expect.end()),
                         "wrong cycle neighbourhood for vertex " + std::to_string(v) + ", " + tag);
        }
    }
    return o;
}

Outcome lemma_suites() {
    Outcome o;
    {
        std::mt19937_64 rng(101);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 9);
            const Graph g = random_graph(n, 0.45, rng());
            VertexSet x = testing_support::random_subset(n, 0.4, rng);
            if (x.empty()) x = VertexSet{static_cast<Vertex>(rng() % n)};
            std::vector<Edge> pairs;
            std::vector<char> used(n, 0);
            for (auto [a, b] : g.non_edges())
                if (x.contains(a) && x.contains(b) && !used[a] && !used[b] && rng() % 2) {
                    pairs.emplace_back(a, b);
                    used[a] = used[b] = 1;
                }
            const auto sub = naive_minus(g, x);
            const auto rep = sur1_compose(g, PairCover{x, pairs}, sub);
            o.expect(verify_representation(rep, g).equal, "sur1_compose mismatch");
            o.expect(rep.dimension() ==
                         sub.dimension() + static_cast<int>(x.size()) - static_cast<int>(pairs.size()),
                     "sur1_compose dimension");
        }
    }
    {
        std::mt19937_64 rng(202);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 10);
            const Graph base = random_graph(n, 0.45, rng());
            std::vector<int> side(n);
            for (auto& s : side) s = static_cast<int>(rng() % 3);
            std::vector<Vertex> v1, v2, x;
            for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? v1 : side[v] == 1 ? v2 : x).push_back(v);
            std::vector<Edge> edges;
            for (auto [a, b] : base.edges())
                if (side[a] + side[b] != 1) edges.emplace_back(a, b);
            const Graph g(n, edges);
            const Separation sep{VertexSet(v1), VertexSet(v2), VertexSet(x)};
            const auto s1 = induced_subgraph(g, set_union(sep.v1, sep.x));
            const auto s2 = induced_subgraph(g, set_union(sep.v2, sep.x));
            const auto rep1 = naive_representation(s1.graph, s1.to_original);
            const auto rep2 = naive_representation(s2.graph, s2.to_original);
            const auto rep = sur2_compose(g, sep, rep1, rep2);
            o.expect(verify_representation(rep, g).equal, "sur2_compose mismatch");
            o.expect(rep.dimension() == rep1.dimension() + rep2.dimension() + 1, "sur2_compose dimension");
        }
    }
    {
        std::mt19937_64 rng(303);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 10);
            const Graph h = random_graph(n, 0.4, rng());
            const VertexSet k = testing_support::random_subset(n, 0.5, rng);
            // G = H minus the edges inside K; doubling H's representation on K gives G + K-clique = H.
            std::vector<Edge> kept;
            for (auto [a, b] : h.edges())
                if (!(k.contains(a) && k.contains(b))) kept.emplace_back(a, b);
            const Graph g(n, kept);
            const auto rep = naive_representation(g);
            const auto out = sur2bis_double(rep, k);
            std::vector<Edge> with_clique = kept;
            for (Vertex a : k)
                for (Vertex b : k)
                    if (a < b) with_clique.emplace_back(a, b);
            o.expect(verify_representation(out, Graph(n, with_clique)).equal, "sur2bis_double mismatch");
            o.expect(out.dimension() == 2 * rep.dimension(), "sur2bis_double dimension");
        }
    }
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Graph f = random_forest(1 + static_cast<int>(seed % 10), seed);
        const auto rep = forest_two_dim(f);
        o.expect(rep.dimension() == 2 && verify_representation(rep, f).equal, "forest_two_dim");
    }
    {
        std::mt19937_64 rng(404);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 10);
            const Graph g = random_graph(n, 0.3, rng());
            const int k = std::max(2, acyclic_chromatic_number(g));
            const auto c = acyclic_coloring(g, k);
            if (!c) {
                o.fail("no acyclic colouring with k colours");
                continue;
            }
            const auto rep = acyclic_pipeline(g, *c);
            o.expect(verify_representation(rep, g).equal, "acyclic_pipeline mismatch");
            o.expect(rep.dimension() == k * (k - 1), "acyclic_pipeline dimension");
        }
    }
    {
        std::mt19937_64 rng(505);
        for (int trial = 0; trial < 200; ++trial) {
            const int nf = 1 + static_cast<int>(rng() % 7);
            const int ns = static_cast<int>(rng() % 4);
            std::vector<Edge> edges = random_forest(nf, rng()).edges();
            std::vector<Vertex> forest_ids, stable_ids;
            for (Vertex v = 0; v < nf; ++v) forest_ids.push_back(v);
            for (int t = 0; t < ns; ++t) stable_ids.push_back(nf + t);
            for (Vertex v = 0; v < nf; ++v) {
                const int t = static_cast<int>(rng() % static_cast<unsigned>(ns + 1));
                if (t < ns) edges.emplace_back(v, nf + t);
            }
            const Graph g(nf + ns, edges);
            const auto rep = girth4_pipeline(g, ForestStablePartition{VertexSet(forest_ids), VertexSet(stable_ids)});
            o.expect(rep.dimension() == 4 && verify_representation(rep, g).equal, "girth4_pipeline");
        }
    }
    return o;
}

Outcome k8_derivation() {
    Outcome o;
    const Graph g = roberts_graph(4);
    const auto script = script_from_json(io::parse_document(R"({
        "rule": "sur1",
        "cover": {"x": [0, 1, 2, 3], "pairs": [[0, 1], [2, 3]]},
        "sub": {"rule": "base_oracle", "d_max": 3}
    })"));
    const auto out = assemble(g, *script);
    o.expect(out.representation.dimension() == 4, "dimension " + std::to_string(out.representation.dimension()));
    o.expect(verify_representation(out.representation, g).equal, "representation mismatch");
    o.expect(out.report.verified && out.report.total_dimension == 4, "report");
    return o;
}

Outcome acyclic_bound() {
    Outcome o;
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Graph g = random_graph(n, 0.2 + 0.05 * (trial % 10), rng());
        const int chi_a = acyclic_chromatic_by_partitions(g);
        o.expect(acyclic_chromatic_number(g) == chi_a, "library acyclic chromatic number disagrees");
        const int k = std::max(2, chi_a);
        const auto c = acyclic_coloring(g, k);
        if (!c) {
            o.fail("no acyclic colouring found");
            continue;
        }
        const auto rep = acyclic_pipeline(g, *c);
        o.expect(rep.dimension() == k * (k - 1), "dimension");
        o.expect(verify_representation(rep, g).equal, "representation mismatch");
    }
    return o;
}

Outcome oracle_cross_check() {
    Outcome o;
    int checked = 0;
    for (int n = 1; n <= 4; ++n) {
        const testing_support::DefinitionOracle oracle(n);
        for (const Graph& g : testing_support::all_labelled_graphs(n)) {
            const auto r = exact_boxicity(g, n);
            o.expect(r.status == SearchStatus::Exact && r.value == oracle.boxicity(g), "disagreement on n <= 4");
            ++checked;
        }
    }
    const testing_support::DefinitionOracle oracle5(5);
    std::mt19937_64 rng(707);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(5, 0.5, rng());
        const auto r = exact_boxicity(g, 5);
        o.expect(r.status == SearchStatus::Exact && r.value == oracle5.boxicity(g), "disagreement on n = 5");
        ++checked;
    }
    o.detail = o.ok ? std::to_string(checked) + " graphs" : o.detail;
    return o;
}

Outcome poset_suite() {
    Outcome o;
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : testing_support::all_labelled_graphs(n)) {
            const Coloring c = *proper_coloring(g, std::max(1, chromatic_number(g)));
            const auto orders = chi_realizer_extensions(g, c);
            const Poset p = adjacency_poset(g);
            for (const auto& l : orders) o.expect(is_linear_extension(p, l), "not a linear extension");
            o.expect(relation_intersection(intersect_orders(orders), starred_poset(g).relation()) == p.relation(),
                     "starred intersection differs from the adjacency poset");
        }
    const auto b = bound_calculator(1, true);
    o.expect(b.poset_bound.rational && b.poset_bound.constant == Rational(27) && b.poset_bound.floor == 27,
             "torus bound is not 27");
    return o;
}

Outcome girth_instance() {
    Outcome o;
    const Graph c7 = cycle_graph(7);
    const auto rep = girth4_pipeline(c7, ForestStablePartition{VertexSet({1, 2, 3, 4, 5, 6}), VertexSet({0})});
    o.expect(rep.dimension() == 4, "dimension " + std::to_string(rep.dimension()));
    o.expect(verify_representation(rep, c7).equal, "representation mismatch");
    return o;
}

Outcome long_refutation() {
    Outcome o;
    SearchBudget unlimited;
    unlimited.max_nodes = 0;
    unlimited.time_limit_seconds = 0;
    const auto r = boxicity_at_most(roberts_graph(4), 3, unlimited);
    o.expect(r.status == SearchStatus::Exact && !r.witness, "d = 3 not refuted");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const bool run_long = argc > 1 && std::string(argv[1]) == "--long";
    std::vector<Criterion> criteria = {
        {1, "exact oracle: roberts_graph(n) has boxicity n for n = 1..3", 180.0, roberts_exact},
        {2, "roberts_representation(n) verifies with dimension n for n = 1..6", 1.0, roberts_representations},
        {3, "figure1 gadget: cycle, neighbourhoods and golden coordinates for k = 6..12", 1.0, figure1_goldens},
        {4, "lemma property suites, 200 cases each", 300.0, lemma_suites},
        {5, "K8 minus a perfect matching derives to a verified 4-box representation", 30.0, k8_derivation},
        {6, "acyclic pipeline dimension equals chi_a(chi_a - 1) on 20 random graphs", 300.0, acyclic_bound},
        {7, "closure search agrees with interval-supergraph enumeration", 600.0, oracle_cross_check},
        {8, "realizer extensions on all graphs n <= 4 and torus bound 27", 60.0, poset_suite},
        {9, "C7 with one stable vertex gives a verified 4-box representation", 1.0, girth_instance},
    };
    if (run_long)
        criteria.push_back({10, "optional: d = 3 refuted for K8 minus a perfect matching", 1e9, long_refutation});

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) o.fail("over time limit");
        if (!o.ok) ++failures;
        std::printf("%s  criterion %d: %s  (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    o.detail.empty() ? "" : "  ", o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
