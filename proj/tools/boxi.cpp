// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
//
// boxi: command-line front end over the C interface.
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
// 3 search budget exhausted (or no witness within --max-d).
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "boxicity/boxicity.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kMismatch = 1, kInvalid = 2, kBudget = 3 };

struct Failure {
    int code;
    std::string message;
};

int exit_code(bx_status s) {
    switch (s) {
        case BX_OK: return kOk;
        case BX_VERIFICATION_FAILED: return kMismatch;
        case BX_BUDGET_EXHAUSTED: return kBudget;
        default: return kInvalid;
    }
}

void check(bx_status s) {
    if (s != BX_OK) throw Failure{exit_code(s), bx_last_error()};
}

struct StringDeleter {
    void operator()(char* p) const { bx_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
    void operator()(bx_graph* p) const { bx_graph_free(p); }
};
using GraphPtr = std::unique_ptr<bx_graph, GraphDeleter>;

struct RepDeleter {
    void operator()(bx_boxrep* p) const { bx_boxrep_free(p); }
};
using RepPtr = std::unique_ptr<bx_boxrep, RepDeleter>;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kInvalid, "cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes through a temporary file in the target directory, then renames.
void write_file(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path dir = target.has_parent_path() ? target.parent_path() : fs::path(".");
    const fs::path tmp = dir / ("." + target.filename().string() + ".tmp" + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Failure{kInvalid, "cannot write " + path};
        out << text;
        out.flush();
        if (!out) throw Failure{kInvalid, "cannot write " + path};
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Failure{kInvalid, "cannot write " + path};
    }
}

// Writes to path, or to stdout when path is empty or "-".
void output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") std::cout << text;
    else write_file(path, text);
}

GraphPtr load_graph(const std::string& path) {
    bx_graph* g = nullptr;
    const std::string text = read_file(path);
    if (bx_graph_from_json(text.c_str(), &g) != BX_OK) throw Failure{kInvalid, path + ": " + bx_last_error()};
    return GraphPtr(g);
}

RepPtr load_rep(const std::string& path) {
    bx_boxrep* r = nullptr;
    const std::string text = read_file(path);
    if (bx_boxrep_from_json(text.c_str(), &r) != BX_OK) throw Failure{kInvalid, path + ": " + bx_last_error()};
    return RepPtr(r);
}

std::string rep_json(const bx_boxrep* rep) {
    char* out = nullptr;
    check(bx_boxrep_to_json(rep, &out));
    return OwnedString(out).get();
}

std::optional<std::string> optional_file(const std::string& path) {
    if (path.empty()) return std::nullopt;
    return read_file(path);
}

// ---------------------------------------------------------------------------

struct GenArgs {
    std::string family, out;
    int n = 0, m = 3;
    double p = 0.5;
    std::optional<std::uint64_t> seed;
};

int run_gen(const GenArgs& a) {
    const bool random = a.family == "random" || a.family == "forest";
    if (random && !a.seed) throw Failure{kInvalid, "family " + a.family + " needs an explicit --seed"};
    bx_graph* g = nullptr;
    check(bx_graph_generate(a.family.c_str(), a.n, a.m, a.p, a.seed.value_or(0), &g));
    GraphPtr owned(g);
    char* text = nullptr;
    check(bx_graph_to_json(g, &text));
    output(a.out, OwnedString(text).get());
    return kOk;
}

struct ExactArgs {
    std::string graph, out, witness;
    int max_d = 4;
    std::uint64_t max_nodes = 200'000'000;
    double time_limit = 600;
    bool no_symmetry = false;
};

int run_exact(const ExactArgs& a) {
    auto g = load_graph(a.graph);
    char* result = nullptr;
    bx_boxrep* witness = nullptr;
    const bx_status s = bx_exact(g.get(), a.max_d, a.max_nodes, a.time_limit, a.no_symmetry ? 0 : 1, &result,
                                 &witness);
    RepPtr owned_witness(witness);
    if (!result) check(s);
    OwnedString owned(result);
    const Json doc = Json::parse(result);
    if (!a.out.empty()) write_file(a.out, result);
    if (witness && !a.witness.empty()) write_file(a.witness, rep_json(witness));
    const std::string status = doc["status"];
    if (status == "exact") {
        std::cout << doc["value"].get<int>() << "\n";
    } else if (status == "lower-bound-only") {
        std::cout << "box > " << a.max_d << " (every d <= " << a.max_d << " refuted)\n";
    } else {
        std::cout << "unknown: budget exhausted, box >= " << doc["lower_bound"].get<int>() << "\n";
    }
    return exit_code(s);
}

struct ConstructArgs {
    std::string method, graph, out, coloring, partition, classification;
};

int run_construct(const ConstructArgs& a) {
    auto g = load_graph(a.graph);
    std::optional<std::string> cert;
    if (a.method == "acyclic") cert = optional_file(a.coloring);
    else if (a.method == "girth4") cert = optional_file(a.partition);
    else if (a.method == "figure1") {
        if (a.classification.empty()) throw Failure{kInvalid, "figure1 needs --classification"};
        cert = read_file(a.classification);
    }
    bx_boxrep* rep = nullptr;
    check(bx_construct(g.get(), a.method.c_str(), cert ? cert->c_str() : nullptr, &rep));
    RepPtr owned(rep);
    output(a.out, rep_json(rep));
    std::cerr << a.method << ": verified, d = " << bx_boxrep_dimension(rep) << "\n";
    return kOk;
}

struct DeriveArgs {
    std::string graph, script, out, report;
};

int run_derive(const DeriveArgs& a) {
    auto g = load_graph(a.graph);
    const std::string script = read_file(a.script);
    bx_boxrep* rep = nullptr;
    char* report = nullptr;
    const bx_status s = bx_derive(g.get(), script.c_str(), &rep, &report);
    RepPtr owned(rep);
    OwnedString owned_report(report);
    if (report && !a.report.empty()) write_file(a.report, report);
    check(s);
    output(a.out, rep_json(rep));
    std::cerr << "derivation verified, d = " << bx_boxrep_dimension(rep) << "\n";
    return kOk;
}

struct VerifyArgs {
    std::string graph, rep, report;
};

int run_verify(const VerifyArgs& a) {
    auto g = load_graph(a.graph);
    auto r = load_rep(a.rep);
    char* report = nullptr;
    const bx_status s = bx_verify(g.get(), r.get(), &report);
    if (!report) check(s);
    OwnedString owned(report);
    if (!a.report.empty()) write_file(a.report, report);
    const Json doc = Json::parse(report);
    if (s == BX_OK) {
        std::cout << "equal, d = " << bx_boxrep_dimension(r.get()) << "\n";
        return kOk;
    }
    std::cout << "mismatch\n";
    for (const auto& e : doc["missing_edges"]) std::cout << "missing " << e[0] << " " << e[1] << "\n";
    for (const auto& e : doc["extra_edges"]) std::cout << "extra " << e[0] << " " << e[1] << "\n";
    return exit_code(s);
}

struct PosetArgs {
    std::string graph, coloring, out;
    bool realizer = false;
};

int run_poset(const PosetArgs& a) {
    if (!a.realizer) throw Failure{kInvalid, "nothing to do: pass --realizer"};
    auto g = load_graph(a.graph);
    const auto coloring = optional_file(a.coloring);
    char* out = nullptr;
    const bx_status s = bx_poset_realizer(g.get(), coloring ? coloring->c_str() : nullptr, &out);
    if (!out) check(s);
    OwnedString owned(out);
    output(a.out, out);
    return exit_code(s);
}

struct BoundsArgs {
    int genus = 1;
    bool orientable = false, non_orientable = false;
    int box = -1, chi = -1;
    std::string out;
};

int run_bounds(const BoundsArgs& a) {
    if (a.orientable == a.non_orientable) throw Failure{kInvalid, "pass exactly one of --orientable, --non-orientable"};
    char* out = nullptr;
    check(bx_bounds(a.genus, a.orientable ? 1 : 0, a.box, a.chi, &out));
    OwnedString owned(out);
    output(a.out, out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boxi: box representations, boxicity oracles and verified constructions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", bx_version());

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
    gen_cmd->add_option("family", gen.family,
                        "complete|cycle|path|empty|roberts|subdivided_complete|random|forest|torus")
        ->required();
    gen_cmd->add_option("n", gen.n, "Order (half-order for roberts, rows for torus)")->required();
    gen_cmd->add_option("--m", gen.m, "Columns for torus");
    gen_cmd->add_option("--p", gen.p, "Edge probability for random");
    gen_cmd->add_option("--seed", gen.seed, "Seed (required for random and forest)");
    gen_cmd->add_option("-o,--output", gen.out, "Output graph file (default stdout)");

    ExactArgs ex;
    auto* exact_cmd = app.add_subcommand("exact", "Exact boxicity by exhaustive search");
    exact_cmd->add_option("graph", ex.graph, "Graph file")->required();
    exact_cmd->add_option("--max-d", ex.max_d, "Largest dimension to try")->check(CLI::PositiveNumber);
    exact_cmd->add_option("--max-nodes", ex.max_nodes, "Search node budget (0 = unlimited)");
    exact_cmd->add_option("--time-limit", ex.time_limit, "Seconds (0 = unlimited)");
    exact_cmd->add_flag("--no-symmetry", ex.no_symmetry, "Disable dimension symmetry pruning");
    exact_cmd->add_option("-o,--output", ex.out, "Write the result document");
    exact_cmd->add_option("--witness", ex.witness, "Write the witness representation");

    ConstructArgs con;
    auto* con_cmd = app.add_subcommand("construct", "Build a verified representation");
    con_cmd->add_option("method", con.method, "acyclic|roberts|girth4|forest|figure1")
        ->required()
        ->check(CLI::IsMember({"acyclic", "roberts", "girth4", "forest", "figure1"}));
    con_cmd->add_option("graph", con.graph, "Graph file")->required();
    con_cmd->add_option("--coloring", con.coloring, "Acyclic colouring (acyclic)");
    con_cmd->add_option("--partition", con.partition, "Forest/stable partition (girth4)");
    con_cmd->add_option("--classification", con.classification, "Cycle classification (figure1)");
    con_cmd->add_option("-o,--output", con.out, "Output representation (default stdout)");

    DeriveArgs der;
    auto* der_cmd = app.add_subcommand("derive", "Replay a derivation script");
    der_cmd->add_option("graph", der.graph, "Graph file")->required();
    der_cmd->add_option("script", der.script, "Script file")->required();
    der_cmd->add_option("-o,--output", der.out, "Output representation (default stdout)");
    der_cmd->add_option("--report", der.report, "Write the step report");

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "Compare a representation with a graph");
    ver_cmd->add_option("graph", ver.graph, "Graph file")->required();
    ver_cmd->add_option("rep", ver.rep, "Representation file")->required();
    ver_cmd->add_option("--report", ver.report, "Write the verification report");

    PosetArgs pos;
    auto* pos_cmd = app.add_subcommand("poset", "Adjacency poset realizer extensions");
    pos_cmd->add_option("graph", pos.graph, "Graph file")->required();
    pos_cmd->add_flag("--realizer", pos.realizer, "Build and check the colour-class extensions");
    pos_cmd->add_option("--coloring", pos.coloring, "Proper colouring (default: optimal)");
    pos_cmd->add_option("-o,--output", pos.out, "Output file (default stdout)");

    BoundsArgs bnd;
    auto* bnd_cmd = app.add_subcommand("bounds", "Surface bounds");
    bnd_cmd->add_option("--genus", bnd.genus, "Genus g >= 1")->required();
    bnd_cmd->add_flag("--orientable", bnd.orientable, "Orientable surface");
    bnd_cmd->add_flag("--non-orientable", bnd.non_orientable, "Non-orientable surface");
    bnd_cmd->add_option("--box", bnd.box, "Boxicity, for 2 box + chi + 4");
    bnd_cmd->add_option("--chi", bnd.chi, "Chromatic number, for 2 box + chi + 4");
    bnd_cmd->add_option("-o,--output", bnd.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalid;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*exact_cmd) return run_exact(ex);
        if (*con_cmd) return run_construct(con);
        if (*der_cmd) return run_derive(der);
        if (*ver_cmd) return run_verify(ver);
        if (*pos_cmd) return run_poset(pos);
        if (*bnd_cmd) return run_bounds(bnd);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}
