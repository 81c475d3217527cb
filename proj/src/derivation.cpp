// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "boxicity/derivation.hpp"

#include <sstream>

#include "boxicity/error.hpp"

namespace boxicity {

const char* rule_name(const DerivationScript& script) {
    static constexpr const char* names[] = {"sur1",    "sur2",   "sur2bis", "figure1",      "acyclic",
                                            "girth4",  "roberts", "base_explicit", "base_oracle"};
    return names[script.step.index()];
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

using io::Json;
using io::detail::require_int;
using io::detail::require_key;

std::vector<Edge> edge_list(const Json& doc, const std::string& path) {
    BOXICITY_REQUIRE(doc.is_array(), ErrorKind::Parse, path, ": expected an array of pairs");
    std::vector<Edge> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const std::string p = path + "/" + std::to_string(i);
        BOXICITY_REQUIRE(doc[i].is_array() && doc[i].size() == 2, ErrorKind::Parse, p, ": expected a pair");
        out.emplace_back(require_int(doc[i][0], p + "/0"), require_int(doc[i][1], p + "/1"));
    }
    return out;
}

ScriptPtr parse_node(const Json& doc, const std::string& path);

ScriptPtr child(const Json& doc, const std::string& key, const std::string& path) {
    return parse_node(require_key(doc, key, path), path + "/" + key);
}

std::map<Vertex, int> coloring_map(const Json& doc, const std::string& path) {
    std::map<Vertex, int> out;
    if (doc.is_array()) {
        for (std::size_t i = 0; i < doc.size(); ++i)
            out[static_cast<Vertex>(i)] = require_int(doc[i], path + "/" + std::to_string(i));
        return out;
    }
    BOXICITY_REQUIRE(doc.is_object(), ErrorKind::Parse, path, ": expected an array or an object");
    for (const auto& [key, value] : doc.items()) {
        Vertex v = -1;
        try {
            v = std::stoi(key);
        } catch (const std::exception&) {
        }
        BOXICITY_REQUIRE(v >= 0 && std::to_string(v) == key, ErrorKind::Parse, path, "/", key, ": bad vertex key");
        out[v] = require_int(value, path + "/" + key);
    }
    return out;
}

ScriptPtr parse_node(const Json& doc, const std::string& path) {
    const Json& rule_doc = require_key(doc, "rule", path);
    BOXICITY_REQUIRE(rule_doc.is_string(), ErrorKind::Parse, path, "/rule: expected a string");
    const std::string rule = rule_doc.get<std::string>();
    auto script = std::make_shared<DerivationScript>();
    if (doc.contains("note")) {
        BOXICITY_REQUIRE(doc["note"].is_string(), ErrorKind::Parse, path, "/note: expected a string");
        script->note = doc["note"].get<std::string>();
    }

    if (rule == "sur1") {
        Sur1Step step;
        const Json& cover = require_key(doc, "cover", path);
        step.x = io::vertex_set_from_json(require_key(cover, "x", path + "/cover"), path + "/cover/x");
        if (cover.contains("pairs") && !(cover["pairs"].is_string() && cover["pairs"] == "auto"))
            step.pairs = edge_list(cover["pairs"], path + "/cover/pairs");
        step.sub = child(doc, "sub", path);
        script->step = std::move(step);
    } else if (rule == "sur2") {
        Sur2Step step;
        const Json& sep = require_key(doc, "separation", path);
        const std::string sp = path + "/separation";
        step.separation = Separation{io::vertex_set_from_json(require_key(sep, "v1", sp), sp + "/v1"),
                                     io::vertex_set_from_json(require_key(sep, "v2", sp), sp + "/v2"),
                                     io::vertex_set_from_json(require_key(sep, "x", sp), sp + "/x")};
        if (doc.contains("added_edges")) step.added_edges = edge_list(doc["added_edges"], path + "/added_edges");
        step.sub1 = child(doc, "sub1", path);
        step.sub2 = child(doc, "sub2", path);
        script->step = std::move(step);
    } else if (rule == "sur2bis") {
        Sur2bisStep step;
        step.clique = io::vertex_set_from_json(require_key(doc, "clique", path), path + "/clique");
        if (doc.contains("removed_edges")) step.removed_edges = edge_list(doc["removed_edges"], path + "/removed_edges");
        step.sub = child(doc, "sub", path);
        script->step = std::move(step);
    } else if (rule == "figure1") {
        Figure1Step step;
        const Json& cls = require_key(doc, "classification", path);
        const std::string cp = path + "/classification";
        const Json& cycle = require_key(cls, "cycle", cp);
        BOXICITY_REQUIRE(cycle.is_array(), ErrorKind::Parse, cp, "/cycle: expected an array");
        for (std::size_t i = 0; i < cycle.size(); ++i)
            step.cycle.push_back(require_int(cycle[i], cp + "/cycle/" + std::to_string(i)));
        if (cls.contains("assignments")) {
            // Reuse the classification reader; it does not consult the graph
            // when assignments are present.
            step.assignments = io::classification_from_json(cls, Graph()).assignments;
        }
        step.sub = child(doc, "sub", path);
        script->step = std::move(step);
    } else if (rule == "acyclic") {
        AcyclicStep step;
        if (doc.contains("coloring")) step.coloring = coloring_map(doc["coloring"], path + "/coloring");
        if (doc.contains("colors")) step.colors = require_int(doc["colors"], path + "/colors");
        script->step = std::move(step);
    } else if (rule == "girth4") {
        Girth4Step step;
        if (doc.contains("partition")) step.partition = io::partition_from_json(doc["partition"]);
        script->step = std::move(step);
    } else if (rule == "roberts") {
        script->step = RobertsStep{};
    } else if (rule == "base_explicit") {
        script->step = BaseExplicitStep{io::box_rep_from_json(require_key(doc, "representation", path))};
    } else if (rule == "base_oracle") {
        BaseOracleStep step;
        if (doc.contains("d_max")) step.d_max = require_int(doc["d_max"], path + "/d_max");
        if (doc.contains("max_nodes")) {
            BOXICITY_REQUIRE(doc["max_nodes"].is_number_unsigned(), ErrorKind::Parse, path,
                             "/max_nodes: expected a non-negative integer");
            step.budget.max_nodes = doc["max_nodes"].get<std::uint64_t>();
        }
        if (doc.contains("time_limit")) {
            BOXICITY_REQUIRE(doc["time_limit"].is_number(), ErrorKind::Parse, path, "/time_limit: expected seconds");
            step.budget.time_limit_seconds = doc["time_limit"].get<double>();
        }
        script->step = std::move(step);
    } else {
        detail::raise(ErrorKind::Parse, path, "/rule: unknown rule \"", rule, "\"");
    }
    return script;
}

}  // namespace

ScriptPtr script_from_json(const io::Json& doc) { return parse_node(doc, ""); }

// ---------------------------------------------------------------------------
// Replay

namespace {

struct Problem {
    Graph graph;
    std::vector<Vertex> to_root;  // local id -> root id
};

class StepError : public Error {
public:
    using Error::Error;
};

class Runner {
public:
    explicit Runner(bool build) : build_(build) {}

    /// Returns the achieved dimension; fills *out when building.
    int run(const Problem& p, const DerivationScript& s, const std::string& path, BoxRepresentation* out) {
        const std::size_t slot = report_.steps.size();
        report_.steps.push_back(StepReport{path, rule_name(s), "", p.graph.order(), 0, 0, false, s.note});
        try {
            Outcome o = dispatch(p, s, path, out);
            auto& entry = report_.steps[slot];
            entry.formula = o.formula;
            entry.claimed = o.claimed;
            entry.achieved = build_ ? out->dimension() : o.claimed;
            BOXICITY_REQUIRE(entry.achieved <= entry.claimed, ErrorKind::Verification, "achieved dimension ",
                             entry.achieved, " exceeds the claimed bound ", entry.claimed);
            if (build_) require_equal(verify_representation(*out, p.graph), "step output");
            entry.verified = true;
            return entry.achieved;
        } catch (const StepError&) {
            throw;
        } catch (const Error& e) {
            throw StepError(e.kind(), "step " + (path.empty() ? std::string("/") : path) + " (" + rule_name(s) +
                                          "): " + e.what());
        }
    }

    DerivationReport take_report() { return std::move(report_); }

private:
    struct Outcome {
        int claimed;
        std::string formula;
    };

    static std::map<Vertex, Vertex> root_to_local(const Problem& p) {
        std::map<Vertex, Vertex> m;
        for (std::size_t i = 0; i < p.to_root.size(); ++i) m[p.to_root[i]] = static_cast<Vertex>(i);
        return m;
    }

    struct Translate {
        std::map<Vertex, Vertex> map;

        Vertex vertex(Vertex root) const {
            auto it = map.find(root);
            BOXICITY_REQUIRE(it != map.end(), ErrorKind::InvalidInput, "vertex ", root, " is not in this subproblem");
            return it->second;
        }
        VertexSet set(const VertexSet& s) const {
            std::vector<Vertex> out;
            for (Vertex v : s) out.push_back(vertex(v));
            return VertexSet(std::move(out));
        }
        std::vector<Edge> edges(const std::vector<Edge>& es) const {
            std::vector<Edge> out;
            for (auto [a, b] : es) out.emplace_back(vertex(a), vertex(b));
            return out;
        }
    };

    static Problem restrict(const Problem& p, const Subgraph& s) {
        Problem out{s.graph, {}};
        for (Vertex v : s.to_original) out.to_root.push_back(p.to_root[v]);
        return out;
    }

    // Recurse into a subproblem whose local ids are s.to_original in p.
    int recurse(const Problem& sub, const std::vector<Vertex>& sub_to_parent, const ScriptPtr& s,
                const std::string& path, std::optional<BoxRepresentation>& out) {
        BOXICITY_REQUIRE(s != nullptr, ErrorKind::InvalidInput, "missing sub-script at ", path);
        if (!build_) return run(sub, *s, path, nullptr);
        BoxRepresentation rep(1);
        const int d = run(sub, *s, path, &rep);
        out = relabel(rep, sub_to_parent);
        return d;
    }

    Outcome dispatch(const Problem& p, const DerivationScript& s, const std::string& path, BoxRepresentation* out) {
        const Graph& g = p.graph;
        const Translate tr{root_to_local(p)};

        if (const auto* step = std::get_if<Sur1Step>(&s.step)) {
            const VertexSet x = tr.set(step->x);
            BOXICITY_REQUIRE(!x.empty(), ErrorKind::InvalidInput, "X must be non-empty");
            PairCover cover{x, step->pairs ? tr.edges(*step->pairs) : find_pair_cover(g, x).pairs};
            cover.validate(g);
            const auto sub = remove_vertices(g, x);
            std::optional<BoxRepresentation> rep;
            const int d = recurse(restrict(p, sub), sub.to_original, step->sub, path + "/sub", rep);
            if (build_) *out = sur1_compose(g, cover, *rep);
            const int k = static_cast<int>(cover.pairs.size());
            return {d + static_cast<int>(x.size()) - k, "box(G\\X) + |X| - k = " + std::to_string(d) + " + " +
                                                            std::to_string(x.size()) + " - " + std::to_string(k)};
        }
        if (const auto* step = std::get_if<Sur2Step>(&s.step)) {
            const Separation sep{tr.set(step->separation.v1), tr.set(step->separation.v2),
                                 tr.set(step->separation.x)};
            sep.validate(g);
            const auto added = tr.edges(step->added_edges);
            for (auto [a, b] : added)
                BOXICITY_REQUIRE(sep.x.contains(a) && sep.x.contains(b), ErrorKind::InvalidInput, "added edge (",
                                 p.to_root[a], ",", p.to_root[b], ") is not inside X");
            auto side1 = induced_subgraph(g, set_union(sep.v1, sep.x));
            {
                std::vector<Edge> edges = side1.graph.edges();
                const Translate inner{[&] {
                    std::map<Vertex, Vertex> m;
                    for (std::size_t i = 0; i < side1.to_original.size(); ++i)
                        m[side1.to_original[i]] = static_cast<Vertex>(i);
                    return m;
                }()};
                for (auto [a, b] : added) edges.emplace_back(inner.vertex(a), inner.vertex(b));
                side1.graph = Graph(side1.graph.order(), edges);
            }
            const auto side2 = induced_subgraph(g, set_union(sep.v2, sep.x));
            std::optional<BoxRepresentation> rep1, rep2;
            const int d1 = recurse(restrict(p, side1), side1.to_original, step->sub1, path + "/sub1", rep1);
            const int d2 = recurse(restrict(p, side2), side2.to_original, step->sub2, path + "/sub2", rep2);
            if (build_) *out = sur2_compose(g, sep, *rep1, *rep2);
            return {d1 + d2 + 1, "box(G1) + box(G[V2 u X]) + 1 = " + std::to_string(d1) + " + " +
                                     std::to_string(d2) + " + 1"};
        }
        if (const auto* step = std::get_if<Sur2bisStep>(&s.step)) {
            const VertexSet k = tr.set(step->clique);
            for (auto a : k)
                for (auto b : k)
                    BOXICITY_REQUIRE(a == b || g.adjacent(a, b), ErrorKind::InvalidInput, "clique vertices ",
                                     p.to_root[a], " and ", p.to_root[b], " are not adjacent");
            std::vector<Edge> removed;
            if (step->removed_edges) {
                removed = tr.edges(*step->removed_edges);
                for (auto [a, b] : removed)
                    BOXICITY_REQUIRE(k.contains(a) && k.contains(b), ErrorKind::InvalidInput, "removed edge (",
                                     p.to_root[a], ",", p.to_root[b], ") is not inside the clique");
            } else {
                for (auto [a, b] : g.edges())
                    if (k.contains(a) && k.contains(b)) removed.emplace_back(a, b);
            }
            std::vector<Edge> kept;
            for (auto e : g.edges())
                if (std::find(removed.begin(), removed.end(), Edge{std::min(e.first, e.second), std::max(e.first, e.second)}) ==
                        removed.end() &&
                    std::find(removed.begin(), removed.end(), Edge{e.second, e.first}) == removed.end())
                    kept.push_back(e);
            Problem thinned{Graph(g.order(), kept), p.to_root};
            std::vector<Vertex> same(g.order());
            for (Vertex v = 0; v < g.order(); ++v) same[v] = v;
            std::optional<BoxRepresentation> rep;
            const int d = recurse(thinned, same, step->sub, path + "/sub", rep);
            if (build_) {
                BOXICITY_REQUIRE(!rep->empty(), ErrorKind::InvalidInput, "cannot double an empty representation");
                *out = sur2bis_double(*rep, k);
            }
            return {2 * d, "2 box(H) = 2 * " + std::to_string(d)};
        }
        if (const auto* step = std::get_if<Figure1Step>(&s.step)) {
            CycleClassification cls;
            for (Vertex v : step->cycle) cls.cycle.push_back(tr.vertex(v));
            if (step->assignments) {
                for (const auto& [v, a] : *step->assignments) cls.assignments.emplace(tr.vertex(v), a);
            } else {
                cls = classify_cycle(g, cls.cycle);
            }
            cls.validate(g);
            const VertexSet cycle = cls.cycle_set();
            const VertexSet outside = cls.outside_set();
            const Separation sep{cycle, set_difference(set_difference(VertexSet::range(g.order()), cycle), outside),
                                 outside};
            sep.validate(g);
            const auto rest = remove_vertices(g, cycle);
            std::optional<BoxRepresentation> rep;
            const int d = recurse(restrict(p, rest), rest.to_original, step->sub, path + "/sub", rep);
            if (build_) {
                const BoxRepresentation gadget = figure1_gadget(g, cls);
                const BoxRepresentation doubled = sur2bis_double(gadget, outside);
                *out = sur2_compose(g, sep, doubled, *rep);
            }
            return {d + 5, "2 box(H) + box(G\\V(C)) + 1 = 2 * 2 + " + std::to_string(d) + " + 1"};
        }
        if (const auto* step = std::get_if<AcyclicStep>(&s.step)) {
            Coloring coloring;
            if (step->coloring) {
                coloring.color.assign(g.order(), -1);
                for (Vertex v = 0; v < g.order(); ++v) {
                    auto it = step->coloring->find(p.to_root[v]);
                    BOXICITY_REQUIRE(it != step->coloring->end(), ErrorKind::InvalidInput, "vertex ", p.to_root[v],
                                     " has no colour");
                    coloring.color[v] = it->second;
                }
                int k = 0;
                for (int c : coloring.color) k = std::max(k, c + 1);
                coloring.colors = step->colors.value_or(k);
            } else {
                const int k = std::max(2, acyclic_chromatic_number(g));
                coloring = *acyclic_coloring(g, k);
            }
            BOXICITY_REQUIRE(coloring.colors >= 2, ErrorKind::InvalidInput, "acyclic step needs at least 2 colours");
            coloring.validate_acyclic(g);
            if (build_) *out = acyclic_pipeline(g, coloring);
            const int k = coloring.colors;
            return {k * (k - 1), "k(k-1) = " + std::to_string(k) + " * " + std::to_string(k - 1)};
        }
        if (const auto* step = std::get_if<Girth4Step>(&s.step)) {
            ForestStablePartition part;
            if (step->partition) {
                part = ForestStablePartition{tr.set(step->partition->forest), tr.set(step->partition->stable)};
            } else {
                auto found = find_forest_stable_partition(g);
                BOXICITY_REQUIRE(found.partition, found.budget_exhausted ? ErrorKind::BudgetExhausted
                                                                         : ErrorKind::InvalidInput,
                                 "no forest/stable partition found");
                part = *found.partition;
            }
            part.validate(g);
            if (build_) *out = girth4_pipeline(g, part);
            return {4, "4"};
        }
        if (std::holds_alternative<RobertsStep>(s.step)) {
            if (build_) {
                *out = cocktail_party_representation(g);
            } else {
                const Graph missing = complement(g);
                for (Vertex v = 0; v < g.order(); ++v)
                    BOXICITY_REQUIRE(missing.degree(v) == 1, ErrorKind::InvalidInput,
                                     "complement is not a perfect matching at vertex ", p.to_root[v]);
                BOXICITY_REQUIRE(g.order() >= 2, ErrorKind::InvalidInput, "complement is not a perfect matching");
            }
            return {g.order() / 2, "n/2 = " + std::to_string(g.order() / 2)};
        }
        if (const auto* step = std::get_if<BaseExplicitStep>(&s.step)) {
            BoxRepresentation local(step->representation.dimension());
            for (const auto& [v, box] : step->representation.map()) local.set(tr.vertex(v), box);
            BOXICITY_REQUIRE(local.map().size() == static_cast<std::size_t>(g.order()), ErrorKind::InvalidInput,
                             "explicit representation covers ", local.map().size(), " of ", g.order(), " vertices");
            require_equal(verify_representation(local, g), "explicit base representation");
            if (build_) *out = local;
            return {local.dimension(), "explicit " + std::to_string(local.dimension())};
        }
        const auto& step = std::get<BaseOracleStep>(s.step);
        const BoxicityResult result = exact_boxicity(g, step.d_max, step.budget);
        BOXICITY_REQUIRE(result.status != SearchStatus::BudgetExhausted, ErrorKind::BudgetExhausted,
                         "oracle ran out of budget after refuting d < ", result.lower_bound);
        BOXICITY_REQUIRE(result.status == SearchStatus::Exact, ErrorKind::InvalidInput, "oracle found box > ",
                         step.d_max);
        if (build_) *out = *result.witness;
        return {*result.value, "oracle box = " + std::to_string(*result.value)};
    }

    bool build_;
    DerivationReport report_;
};

}  // namespace

Derivation assemble(const Graph& g, const DerivationScript& script) {
    Problem root{g, {}};
    for (Vertex v = 0; v < g.order(); ++v) root.to_root.push_back(v);
    Runner runner(true);
    BoxRepresentation rep(1);
    runner.run(root, script, "", &rep);
    Derivation out{std::move(rep), runner.take_report()};
    out.report.total_dimension = out.representation.dimension();
    out.report.verified = true;
    return out;
}

void validate_script(const Graph& g, const DerivationScript& script) {
    Problem root{g, {}};
    for (Vertex v = 0; v < g.order(); ++v) root.to_root.push_back(v);
    Runner runner(false);
    runner.run(root, script, "", nullptr);
}

io::Json to_json(const DerivationReport& report) {
    io::Json steps = io::Json::array();
    io::Json assertions = io::Json::array();
    for (const auto& s : report.steps) {
        io::Json entry;
        entry["path"] = s.path.empty() ? "/" : s.path;
        entry["rule"] = s.rule;
        entry["vertices"] = s.vertices;
        entry["formula"] = s.formula;
        entry["claimed"] = s.claimed;
        entry["achieved"] = s.achieved;
        entry["verified"] = s.verified;
        if (!s.note.empty()) {
            entry["note"] = s.note;
            assertions.push_back({{"path", entry["path"]}, {"assertion", s.note}});
        }
        steps.push_back(entry);
    }
    io::Json out;
    out["verified"] = report.verified;
    out["total_dimension"] = report.total_dimension;
    out["steps"] = steps;
    out["caller_assertions"] = assertions;
    return out;
}

}  // namespace boxicity
