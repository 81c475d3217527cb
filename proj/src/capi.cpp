// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "boxicity/boxicity.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "boxicity/boxrep.hpp"
#include "boxicity/derivation.hpp"
#include "boxicity/error.hpp"
#include "boxicity/exact.hpp"
#include "boxicity/json_io.hpp"
#include "boxicity/poset.hpp"

struct bx_graph {
    boxicity::Graph value;
};

struct bx_boxrep {
    boxicity::BoxRepresentation value;
};

namespace {

using namespace boxicity;
using io::Json;

thread_local std::string last_error;

bx_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return BX_INVALID_INPUT;
        case ErrorKind::Parse: return BX_PARSE_ERROR;
        case ErrorKind::Precondition: return BX_PRECONDITION;
        case ErrorKind::Verification: return BX_VERIFICATION_FAILED;
        case ErrorKind::BudgetExhausted: return BX_BUDGET_EXHAUSTED;
    }
    return BX_INTERNAL;
}

// Runs fn, translating exceptions into a status and the thread's last error.
template <typename Fn>
bx_status guarded(Fn&& fn) {
    last_error.clear();
    try {
        return fn();
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const nlohmann::json::exception& e) {
        last_error = std::string("malformed document: ") + e.what();
        return BX_PARSE_ERROR;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return BX_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return BX_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(const Json& doc, char** out) {
    if (out) *out = copy_string(io::dump(doc));
}

void require_arg(const void* p, const char* name) {
    BOXICITY_REQUIRE(p != nullptr, ErrorKind::InvalidInput, "argument ", name, " is null");
}

Json parse_optional(const char* text) { return text ? io::parse_document(text) : Json(); }

}  // namespace

extern "C" {

const char* bx_version(void) { return "1.0.0"; }

const char* bx_last_error(void) { return last_error.c_str(); }

const char* bx_status_name(bx_status status) {
    switch (status) {
        case BX_OK: return "ok";
        case BX_VERIFICATION_FAILED: return "verification-failed";
        case BX_INVALID_INPUT: return "invalid-input";
        case BX_BUDGET_EXHAUSTED: return "budget-exhausted";
        case BX_PARSE_ERROR: return "parse-error";
        case BX_PRECONDITION: return "precondition-violation";
        case BX_INTERNAL: return "internal-error";
    }
    return "unknown";
}

void bx_string_free(char* text) { std::free(text); }

bx_status bx_graph_from_json(const char* text, bx_graph** out) {
    return guarded([&] {
        require_arg(text, "text");
        require_arg(out, "out");
        *out = new bx_graph{io::graph_from_json(io::parse_document(text))};
        return BX_OK;
    });
}

bx_status bx_graph_to_json(const bx_graph* graph, char** out) {
    return guarded([&] {
        require_arg(graph, "graph");
        require_arg(out, "out");
        emit(io::to_json(graph->value), out);
        return BX_OK;
    });
}

int bx_graph_order(const bx_graph* graph) { return graph ? graph->value.order() : -1; }

void bx_graph_free(bx_graph* graph) { delete graph; }

bx_status bx_graph_generate(const char* family, int n, int m, double p, uint64_t seed, bx_graph** out) {
    return guarded([&] {
        require_arg(family, "family");
        require_arg(out, "out");
        const std::string f = family;
        Graph g;
        if (f == "complete") g = complete_graph(n);
        else if (f == "cycle") g = cycle_graph(n);
        else if (f == "path") g = path_graph(n);
        else if (f == "empty") g = empty_graph(n);
        else if (f == "roberts") g = roberts_graph(n);
        else if (f == "subdivided_complete") g = subdivided_complete(n);
        else if (f == "random") {
            BOXICITY_REQUIRE(p >= 0.0 && p <= 1.0, ErrorKind::InvalidInput, "edge probability ", p,
                             " outside [0,1]");
            g = random_graph(n, p, seed);
        } else if (f == "forest") g = random_forest(n, seed);
        else if (f == "torus") g = torus_grid(n, m);
        else detail::raise(ErrorKind::InvalidInput, "unknown graph family \"", f, "\"");
        *out = new bx_graph{std::move(g)};
        return BX_OK;
    });
}

bx_status bx_boxrep_from_json(const char* text, bx_boxrep** out) {
    return guarded([&] {
        require_arg(text, "text");
        require_arg(out, "out");
        *out = new bx_boxrep{io::box_rep_from_json(io::parse_document(text))};
        return BX_OK;
    });
}

bx_status bx_boxrep_to_json(const bx_boxrep* rep, char** out) {
    return guarded([&] {
        require_arg(rep, "rep");
        require_arg(out, "out");
        emit(io::to_json(rep->value), out);
        return BX_OK;
    });
}

int bx_boxrep_dimension(const bx_boxrep* rep) { return rep ? rep->value.dimension() : -1; }

void bx_boxrep_free(bx_boxrep* rep) { delete rep; }

bx_status bx_verify(const bx_graph* graph, const bx_boxrep* rep, char** report) {
    return guarded([&] {
        require_arg(graph, "graph");
        require_arg(rep, "rep");
        const auto r = verify_representation(rep->value, graph->value);
        emit(io::to_json(r), report);
        if (!r.equal) last_error = "representation does not match the graph";
        return r.equal ? BX_OK : BX_VERIFICATION_FAILED;
    });
}

bx_status bx_exact(const bx_graph* graph, int d_max, uint64_t max_nodes, double time_limit, int symmetry_pruning,
                   char** result, bx_boxrep** witness) {
    return guarded([&] {
        require_arg(graph, "graph");
        SearchBudget budget;
        budget.max_nodes = max_nodes;
        budget.time_limit_seconds = time_limit > 0 ? time_limit : 0.0;
        budget.symmetry_pruning = symmetry_pruning != 0;
        const BoxicityResult r = exact_boxicity(graph->value, d_max, budget);
        emit(io::to_json(r), result);
        if (witness) *witness = r.witness ? new bx_boxrep{*r.witness} : nullptr;
        switch (r.status) {
            case SearchStatus::Exact: return BX_OK;
            case SearchStatus::LowerBoundOnly:
                last_error = "no representation with d <= " + std::to_string(d_max);
                return BX_BUDGET_EXHAUSTED;
            case SearchStatus::BudgetExhausted:
                last_error = "search budget exhausted; every d < " + std::to_string(r.lower_bound) + " refuted";
                return BX_BUDGET_EXHAUSTED;
        }
        return BX_INTERNAL;
    });
}

bx_status bx_construct(const bx_graph* graph, const char* method, const char* certificate, bx_boxrep** out) {
    return guarded([&] {
        require_arg(graph, "graph");
        require_arg(method, "method");
        require_arg(out, "out");
        const Graph& g = graph->value;
        const std::string m = method;
        const Json cert = parse_optional(certificate);
        BoxRepresentation rep;
        if (m == "acyclic") {
            Coloring c;
            if (certificate) {
                c = io::coloring_from_json(cert);
            } else {
                auto found = acyclic_coloring(g, std::max(2, acyclic_chromatic_number(g)));
                BOXICITY_REQUIRE(found, ErrorKind::InvalidInput, "no acyclic colouring found");
                c = *found;
            }
            rep = acyclic_pipeline(g, c);
        } else if (m == "roberts") {
            rep = cocktail_party_representation(g);
        } else if (m == "girth4") {
            ForestStablePartition part;
            if (certificate) {
                part = io::partition_from_json(cert);
            } else {
                auto found = find_forest_stable_partition(g);
                BOXICITY_REQUIRE(found.partition,
                                 found.budget_exhausted ? ErrorKind::BudgetExhausted : ErrorKind::InvalidInput,
                                 "no forest/stable-set partition found");
                part = *found.partition;
            }
            rep = girth4_pipeline(g, part);
        } else if (m == "forest") {
            rep = forest_two_dim(g);
        } else if (m == "figure1") {
            BOXICITY_REQUIRE(certificate != nullptr, ErrorKind::InvalidInput,
                             "figure1 needs a cycle classification certificate");
            rep = figure1_gadget(g, io::classification_from_json(cert, g));
        } else {
            detail::raise(ErrorKind::InvalidInput, "unknown construction \"", m, "\"");
        }
        *out = new bx_boxrep{std::move(rep)};
        return BX_OK;
    });
}

bx_status bx_derive(const bx_graph* graph, const char* script, bx_boxrep** out, char** report) {
    return guarded([&] {
        require_arg(graph, "graph");
        require_arg(script, "script");
        require_arg(out, "out");
        const ScriptPtr s = script_from_json(io::parse_document(script));
        try {
            Derivation d = assemble(graph->value, *s);
            emit(to_json(d.report), report);
            *out = new bx_boxrep{std::move(d.representation)};
            return BX_OK;
        } catch (const Error& e) {
            Json failed;
            failed["verified"] = false;
            failed["error"] = e.what();
            failed["error_kind"] = to_string(e.kind());
            emit(failed, report);
            throw;
        }
    });
}

bx_status bx_poset_realizer(const bx_graph* graph, const char* coloring, char** out) {
    return guarded([&] {
        require_arg(graph, "graph");
        const Graph& g = graph->value;
        Coloring c;
        if (coloring) {
            c = io::coloring_from_json(io::parse_document(coloring));
        } else {
            c = *proper_coloring(g, std::max(1, chromatic_number(g)));
        }
        const auto orders = chi_realizer_extensions(g, c);
        const Poset p = adjacency_poset(g);
        bool all_extensions = true;
        for (const auto& o : orders) all_extensions = all_extensions && is_linear_extension(p, o);
        const bool exact =
            relation_intersection(intersect_orders(orders), starred_poset(g).relation()) == p.relation();
        Json doc;
        doc["elements"] = 2 * g.order();
        doc["coloring"] = io::to_json(c);
        doc["orders"] = io::to_json(orders);
        doc["all_linear_extensions"] = all_extensions;
        doc["starred_intersection_equals_poset"] = exact;
        emit(doc, out);
        if (!(all_extensions && exact)) {
            last_error = "realizer checks failed";
            return BX_VERIFICATION_FAILED;
        }
        return BX_OK;
    });
}

bx_status bx_bounds(int genus, int orientable, int box, int chi, char** out) {
    return guarded([&] {
        std::optional<int> b, c;
        if (box >= 0) b = box;
        if (chi >= 0) c = chi;
        BOXICITY_REQUIRE(b.has_value() == c.has_value(), ErrorKind::InvalidInput,
                         "box and chi must be given together");
        emit(io::to_json(bound_calculator(genus, orientable != 0, b, c)), out);
        return BX_OK;
    });
}

}  // extern "C"
