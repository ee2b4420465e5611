// engine.hpp - the check pipeline and incremental rechecking
//
// A check runs: parse (.asr documents, .gcl model files) -> elaborate ->
// reference check -> structure check -> discharge obligations -> claim
// status -> sorted diagnostics. Incremental runs reuse parses of untouched
// files and cached obligation verdicts keyed by content fingerprints, and
// report which nodes an edit reaches; their diagnostics match a from-scratch
// check exactly.
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <fstream>
#include <sstream>

#include "assurkit/depgraph.hpp"

namespace assurkit::engine {

using check::EffectiveStatus;

struct Input {
    std::string path;
    std::string source;
};

inline bool is_gcl_path(const std::string& path) {
    return path.size() >= 4 && path.compare(path.size() - 4, 4, ".gcl") == 0;
}

inline std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CheckState {
    // inputs and their parses
    std::map<std::string, std::string> files;  // path -> source
    std::map<std::string, Fingerprint> file_hash;
    std::map<std::string, dsl::ParseResult> parsed_asr;  // .asr only

    // results of the latest run
    gcl::GclRegistry registry;
    sacm::ArgumentModel model;
    dep::DepGraph graph;
    std::map<std::string, Fingerprint> fingerprints;  // node -> content hash
    std::map<sacm::Gid, EffectiveStatus> status;
    std::map<sacm::Gid, gcl::Verdict> verdicts;
    std::vector<Diagnostic> diagnostics;  // sorted

    // carried across runs
    std::map<Fingerprint, gcl::Verdict> verdict_cache;
    std::map<std::string, std::set<std::string>> prev_used_by;  // last run's reverse edges

    std::int64_t state_cap = gcl::kDefaultStateCap;
};

struct RunReport {
    std::set<std::string> changed;   // nodes whose fingerprint changed
    std::set<std::string> affected;  // changed plus reverse dependents
    std::vector<Diagnostic> diagnostics;
};

namespace detail {

/// Re-parse edited files, rebuild the model and registry, run every check,
/// and diff node fingerprints against the previous run.
inline RunReport run_pipeline(CheckState& st, const std::set<std::string>& edited_paths) {
    RunReport report;
    std::vector<Diagnostic> diags;

    // Parse .asr files, reusing previous parses of untouched files.
    for (const auto& [path, source] : st.files) {
        if (is_gcl_path(path)) continue;
        Fingerprint h = fingerprint(source);
        auto it = st.file_hash.find(path);
        if (it != st.file_hash.end() && it->second == h && st.parsed_asr.count(path)) continue;
        st.parsed_asr[path] = dsl::parse_document(source, path);
        st.file_hash[path] = h;
    }
    for (auto it = st.parsed_asr.begin(); it != st.parsed_asr.end();) {
        if (!st.files.count(it->first)) {
            st.file_hash.erase(it->first);
            it = st.parsed_asr.erase(it);
        } else {
            ++it;
        }
    }

    // Model files are small; the registry is rebuilt every run.
    st.registry = gcl::GclRegistry();
    for (const auto& [path, source] : st.files) {
        if (!is_gcl_path(path)) continue;
        try {
            gcl::parse_model_file(gcl::TextSource::from_file_content(source, path),
                                  st.registry);
        } catch (const gcl::GclTextError& e) {
            diags.push_back(Diagnostic::error("E032", e.span, e.what()));
        }
        st.file_hash[path] = fingerprint(source);
    }

    std::vector<dsl::Document> documents;
    for (const auto& [path, parsed] : st.parsed_asr) {
        documents.push_back(parsed.document);
        for (const auto& d : parsed.diagnostics) diags.push_back(d);
    }

    auto elaborated = check::elaborate(documents, st.registry);
    st.model = std::move(elaborated.model);
    for (auto& d : elaborated.diagnostics) diags.push_back(std::move(d));

    auto refs = check::check_references(st.model);
    for (auto& d : refs.diagnostics) diags.push_back(std::move(d));

    for (auto& d : check::check_structure(st.model, refs.broken))
        diags.push_back(std::move(d));

    auto discharge = check::discharge_obligations(st.model, st.registry, st.state_cap,
                                                  &st.verdict_cache);
    for (auto& d : discharge.diagnostics) diags.push_back(std::move(d));
    st.verdicts = std::move(discharge.verdicts);

    check::StatusComputer computer(st.model, refs.broken, discharge.passed);
    st.status = computer.all_claims();
    for (auto& d : check::status_warnings(st.model, st.status)) diags.push_back(std::move(d));

    st.graph = dep::build_graph(st.model, st.registry, documents, elaborated.entity_doc);

    // Node fingerprints: canonical command text for entities, definition
    // text for the formal model, a marker for referenced-but-missing nodes.
    std::map<std::string, Fingerprint> fresh;
    for (const auto& [node, printed] : elaborated.prints) fresh[node] = fingerprint(printed);
    for (const auto& def : st.registry.defs())
        fresh["gcl:" + def.name] = fingerprint(def.printed);
    if (st.registry.space().var_count() > 0 || !st.registry.defs().empty())
        fresh["gcl:#space"] = fingerprint(st.registry.space_printed());
    for (const auto& node : st.graph.placeholders)
        if (!fresh.count(node)) fresh[node] = fingerprint("#missing");

    dep::DepGraph union_graph = st.graph;  // old edges keep deleted nodes reachable
    for (const auto& [used, users] : st.prev_used_by)
        for (const auto& user : users) union_graph.used_by[used].insert(user);

    for (const auto& [node, h] : fresh) {
        auto it = st.fingerprints.find(node);
        if (it == st.fingerprints.end() || it->second != h) report.changed.insert(node);
    }
    for (const auto& [node, h] : st.fingerprints)
        if (!fresh.count(node)) report.changed.insert(node);  // deleted

    report.affected = dep::affected(union_graph, report.changed);
    st.fingerprints = std::move(fresh);
    st.prev_used_by = st.graph.used_by;

    (void)edited_paths;
    sort_diagnostics(diags);
    st.diagnostics = diags;
    report.diagnostics = std::move(diags);
    return report;
}

}  // namespace detail

/// Full check over a set of inputs.
inline std::pair<CheckState, RunReport> full_check(const std::vector<Input>& inputs,
                                                   std::int64_t state_cap =
                                                       gcl::configured_state_cap()) {
    CheckState st;
    st.state_cap = state_cap;
    std::set<std::string> edited;
    for (const auto& in : inputs) {
        st.files[in.path] = in.source;
        edited.insert(in.path);
    }
    auto report = detail::run_pipeline(st, edited);
    return {std::move(st), std::move(report)};
}

/// Re-check after edits. Diagnostics equal those of a from-scratch check on
/// the edited inputs; parsing and obligation verification are redone only
/// where content actually changed.
inline RunReport incremental_check(CheckState& st,
                                   const std::vector<Input>& edits) {
    std::set<std::string> edited;
    for (const auto& in : edits) {
        st.files[in.path] = in.source;
        edited.insert(in.path);
    }
    return detail::run_pipeline(st, edited);
}

/// Remove an input file entirely.
inline RunReport remove_input(CheckState& st, const std::string& path) {
    st.files.erase(path);
    return detail::run_pipeline(st, {path});
}

}  // namespace assurkit::engine
