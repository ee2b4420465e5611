// depgraph.hpp - dependency graph over entities, documents, and model
// definitions; change propagation; DOT export
//
// Node ids: entity gids as-is, documents as `doc:<name>`, commentary blocks
// as `text:<doc>:<n>`, formal definitions as `gcl:<name>`, the state space
// as `gcl:#space`. References to gids that no entity defines become
// placeholder nodes, so adding the missing entity later registers as a
// change to it.
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "assurkit/checker.hpp"

namespace assurkit::dep {

using sacm::ArgumentAsset;
using sacm::ArgumentModel;

struct DepGraph {
    std::set<std::string> nodes;
    std::map<std::string, std::set<std::string>> uses;     // user -> used
    std::map<std::string, std::set<std::string>> used_by;  // used -> users
    std::set<std::string> placeholders;  // referenced but undefined

    void add_node(const std::string& n) { nodes.insert(n); }

    void add_edge(const std::string& user, const std::string& used) {
        nodes.insert(user);
        nodes.insert(used);
        uses[user].insert(used);
        used_by[used].insert(user);
    }
};

/// Derive the graph: relationship endpoints, artifact citations,
/// antiquotations, obligation-to-model links, definition-to-definition
/// links, document imports, and each entity's home document.
inline DepGraph build_graph(const ArgumentModel& model, const gcl::GclRegistry& registry,
                            const std::vector<dsl::Document>& documents,
                            const std::map<std::string, std::string>& entity_doc) {
    DepGraph g;

    auto entity_edge = [&](const std::string& user, const sacm::Gid& used) {
        if (!sacm::exists(model, used)) g.placeholders.insert(used.str());
        g.add_edge(user, used.str());
    };
    auto content_edges = [&](const std::string& user, const sacm::MultiLangString& mls) {
        for (const auto& frag : sacm::collect_refs(mls)) entity_edge(user, *frag.target);
    };
    auto home_edge = [&](const std::string& node) {
        auto it = entity_doc.find(node);
        if (it != entity_doc.end()) g.add_edge(node, "doc:" + it->second);
    };

    for (const auto& doc : documents) {
        g.add_node("doc:" + doc.name);
        for (const auto& imp : doc.imports) g.add_edge("doc:" + doc.name, "doc:" + imp.name);
    }

    for (const auto& [gid, asset] : model.assets) {
        g.add_node(gid.str());
        home_edge(gid.str());
        content_edges(gid.str(), asset.content);
        if (asset.variant == ArgumentAsset::Variant::Relationship) {
            for (const auto& r : asset.source) entity_edge(gid.str(), r.gid);
            for (const auto& r : asset.target) entity_edge(gid.str(), r.gid);
            if (asset.reasoning) entity_edge(gid.str(), asset.reasoning->gid);
        } else if (asset.variant == ArgumentAsset::Variant::ArtifactReference) {
            for (const auto& r : asset.referenced_artifacts) entity_edge(gid.str(), r.gid);
        }
    }
    for (const auto& [gid, element] : model.artifacts) {
        g.add_node(gid.str());
        home_edge(gid.str());
        content_edges(gid.str(), element.content);
        for (const auto& r : element.source) entity_edge(gid.str(), r.gid);
        for (const auto& r : element.target) entity_edge(gid.str(), r.gid);
    }
    for (const auto& [gid, e] : model.expressions) {
        g.add_node(gid.str());
        home_edge(gid.str());
    }
    for (const auto& text : model.texts) {
        g.add_node(text.id);
        home_edge(text.id);
        content_edges(text.id, text.content);
    }

    bool any_gcl = registry.space().var_count() > 0 || !registry.defs().empty();
    if (any_gcl) g.add_node("gcl:#space");
    for (const auto& def : registry.defs()) {
        g.add_edge("gcl:" + def.name, "gcl:#space");
        for (const auto& r : def.refs) g.add_edge("gcl:" + def.name, "gcl:" + r);
    }
    for (const auto& [gid, ob] : model.obligations) {
        g.add_node(gid.str());
        home_edge(gid.str());
        if (any_gcl) g.add_edge(gid.str(), "gcl:#space");
        for (const auto& r : ob.model_refs) g.add_edge(gid.str(), "gcl:" + r);
    }
    return g;
}

/// The changed nodes plus everything that transitively depends on one.
/// Names that are not in the graph (deleted nodes) still propagate through
/// any edges recorded for them.
inline std::set<std::string> affected(const DepGraph& g, const std::set<std::string>& changed) {
    std::set<std::string> out = changed;
    std::vector<std::string> frontier(changed.begin(), changed.end());
    while (!frontier.empty()) {
        std::string n = std::move(frontier.back());
        frontier.pop_back();
        auto it = g.used_by.find(n);
        if (it == g.used_by.end()) continue;
        for (const auto& user : it->second)
            if (out.insert(user).second) frontier.push_back(user);
    }
    return out;
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out += "\"";
    return out;
}

inline const char* asset_shape(const ArgumentAsset& a) {
    switch (a.variant) {
        case ArgumentAsset::Variant::Claim: return "box";
        case ArgumentAsset::Variant::Reasoning: return "parallelogram";
        case ArgumentAsset::Variant::ArtifactReference: return "folder";
        case ArgumentAsset::Variant::Relationship: return "diamond";
    }
    return "box";
}

}  // namespace detail

/// Entity-level view of the argument: assets, artifacts, expressions, and
/// obligations with their reference edges. Counter relationships draw red
/// dashed edges; unresolved references draw as dashed placeholder nodes.
/// Output is deterministic (sorted by gid).
inline std::string export_dot(const ArgumentModel& model) {
    if (model.assets.empty() && model.artifacts.empty() && model.expressions.empty() &&
        model.obligations.empty())
        return "digraph assurance { }\n";
    std::string out = "digraph assurance {\n";
    std::set<std::string> declared;
    std::vector<std::string> edges;

    auto declare = [&](const std::string& id, const std::string& attrs) {
        if (declared.insert(id).second)
            out += "  " + detail::dot_quote(id) + " [" + attrs + "];\n";
    };
    auto edge = [&](const std::string& from, const std::string& to, const std::string& attrs) {
        std::string e = "  " + detail::dot_quote(from) + " -> " + detail::dot_quote(to);
        if (!attrs.empty()) e += " [" + attrs + "]";
        edges.push_back(e + ";\n");
    };
    auto target_of = [&](const sacm::Gid& gid) {
        if (!sacm::exists(model, gid))
            declare(gid.str(), "shape=box, style=dashed, color=red, label=" +
                                   detail::dot_quote(gid.str() + "?"));
        return gid.str();
    };

    for (const auto& [gid, asset] : model.assets) {
        std::string attrs = std::string("shape=") + detail::asset_shape(asset);
        if (asset.variant == ArgumentAsset::Variant::Claim)
            attrs += ", label=" + detail::dot_quote(gid.str() + "\n[" +
                                                    sacm::declaration_name(asset.declaration) +
                                                    "]");
        declare(gid.str(), attrs);
    }
    for (const auto& [gid, element] : model.artifacts)
        declare(gid.str(),
                element.kind == sacm::ArtifactKind::Relationship
                    ? "shape=cds"
                    : std::string("shape=component, label=") +
                          detail::dot_quote(gid.str() + "\n(" +
                                            sacm::artifact_kind_name(element.kind) + ")"));
    for (const auto& [gid, e] : model.expressions) declare(gid.str(), "shape=note");
    for (const auto& [gid, o] : model.obligations) declare(gid.str(), "shape=hexagon");

    for (const auto& [gid, asset] : model.assets) {
        if (asset.variant == ArgumentAsset::Variant::Relationship) {
            std::string attrs = asset.is_counter ? "color=red, style=dashed" : "";
            for (const auto& r : asset.source) edge(gid.str(), target_of(r.gid), attrs);
            for (const auto& r : asset.target) edge(gid.str(), target_of(r.gid), attrs);
        } else if (asset.variant == ArgumentAsset::Variant::ArtifactReference) {
            for (const auto& r : asset.referenced_artifacts)
                edge(gid.str(), target_of(r.gid), "style=dotted");
        }
        for (const auto& frag : sacm::collect_refs(asset.content))
            edge(gid.str(), target_of(*frag.target), "style=dotted, arrowhead=open");
    }
    for (const auto& [gid, element] : model.artifacts) {
        for (const auto& r : element.source) edge(gid.str(), target_of(r.gid), "");
        for (const auto& r : element.target) edge(gid.str(), target_of(r.gid), "");
        for (const auto& frag : sacm::collect_refs(element.content))
            edge(gid.str(), target_of(*frag.target), "style=dotted, arrowhead=open");
    }

    for (const auto& e : edges) out += e;
    out += "}\n";
    return out;
}

}  // namespace assurkit::dep
