// checker.hpp - elaboration, cross-reference and structure checks, claim
// status, and obligation discharge
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <functional>

#include "assurkit/asr_printer.hpp"
#include "assurkit/gcl/text.hpp"
#include "assurkit/hash.hpp"
#include "assurkit/sacm_model.hpp"

namespace assurkit::check {

using sacm::ArgumentAsset;
using sacm::ArgumentModel;
using sacm::ArtifactElement;
using sacm::ArtifactKind;
using sacm::EntityKind;
using sacm::Gid;
using sacm::RelKind;

// ---------------------------------------------------------------------------
// Elaboration: parsed documents -> argument model
// ---------------------------------------------------------------------------

struct Elaboration {
    ArgumentModel model;
    std::vector<Diagnostic> diagnostics;
    std::vector<std::string> document_order;       // topological, imports first
    std::map<std::string, std::string> entity_doc;  // node id -> owning document
    std::map<std::string, std::string> prints;      // node id -> canonical text
};

namespace detail {

/// Documents in import order (imported before importing), input order as the
/// tiebreak; cyclic leftovers keep input order. Unknown imports and cycles
/// are reported.
inline std::vector<size_t> document_order(const std::vector<dsl::Document>& docs,
                                          std::vector<Diagnostic>& diags) {
    std::map<std::string, size_t> by_name;
    for (size_t i = 0; i < docs.size(); ++i) {
        auto [it, fresh] = by_name.emplace(docs[i].name, i);
        if (!fresh)
            diags.push_back(Diagnostic::error(
                "E001", docs[i].name_span,
                "duplicate document name `" + docs[i].name + "`"));
    }

    std::map<size_t, std::set<size_t>> uses;  // doc -> imported docs
    for (size_t i = 0; i < docs.size(); ++i) {
        for (const auto& imp : docs[i].imports) {
            auto it = by_name.find(imp.name);
            if (it == by_name.end()) {
                diags.push_back(Diagnostic::error(
                    "E004", imp.span, "imported document `" + imp.name + "` does not exist"));
                continue;
            }
            if (it->second != i) uses[i].insert(it->second);
        }
    }

    std::vector<int> pending(docs.size(), 0);
    std::map<size_t, std::set<size_t>> users;
    for (const auto& [user, used] : uses)
        for (size_t u : used) {
            ++pending[user];
            users[u].insert(user);
        }

    std::vector<size_t> order;
    std::set<size_t> ready;
    for (size_t i = 0; i < docs.size(); ++i)
        if (pending[i] == 0) ready.insert(i);
    while (!ready.empty()) {
        size_t i = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(i);
        for (size_t user : users[i])
            if (--pending[user] == 0) ready.insert(user);
    }

    if (order.size() < docs.size()) {
        std::vector<size_t> cyclic;
        for (size_t i = 0; i < docs.size(); ++i)
            if (pending[i] > 0) cyclic.push_back(i);
        std::string names;
        for (size_t i : cyclic) {
            if (!names.empty()) names += " -> ";
            names += docs[i].name;
        }
        diags.push_back(Diagnostic::error("E002", docs[cyclic.front()].name_span,
                                          "import cycle: " + names));
        for (size_t i : cyclic) order.push_back(i);
    }
    return order;
}

}  // namespace detail

/// Convert commands to entities. Every command that parsed lands in the
/// model (unless its gid is taken), so downstream checks see the whole
/// document even when parts of it are faulty. Obligation specifications are
/// parsed against the registered formal model here.
inline Elaboration elaborate(const std::vector<dsl::Document>& docs,
                             const gcl::GclRegistry& registry) {
    Elaboration out;
    auto order = detail::document_order(docs, out.diagnostics);

    auto claim_gid_taken = [&](const Gid& gid, const Span& span) {
        if (!out.model.gid_taken(gid)) return false;
        out.diagnostics.push_back(
            Diagnostic::error("E001", span, "duplicate gid `" + gid.str() + "`", gid.str()));
        return true;
    };

    for (size_t idx : order) {
        const auto& doc = docs[idx];
        out.document_order.push_back(doc.name);
        std::string doc_header = "DOCUMENT " + doc.name;
        for (const auto& imp : doc.imports) doc_header += " IMPORTS " + imp.name;
        out.prints["doc:" + doc.name] = doc_header;

        int text_counter = 0;
        for (const auto& cmd : doc.commands) {
            std::string printed = dsl::print_command(cmd);
            std::visit(
                [&](const auto& c) {
                    using T = std::decay_t<decltype(c)>;
                    auto record = [&](const Gid& gid) {
                        out.entity_doc[gid.str()] = doc.name;
                        out.prints[gid.str()] = printed;
                    };
                    try {
                        if constexpr (std::is_same_v<T, dsl::ClaimCmd>) {
                            if (claim_gid_taken(c.gid, c.gid_span)) return;
                            auto a = sacm::make_claim(c.gid, c.content, c.declaration);
                            a.span = cmd.span;
                            out.model.assets.emplace(c.gid, std::move(a));
                            record(c.gid);
                        } else if constexpr (std::is_same_v<T, dsl::RelCmd>) {
                            if (claim_gid_taken(c.gid, c.gid_span)) return;
                            auto a = sacm::make_relationship(
                                c.gid, sacm::MultiLangString::text(""), c.kind, c.is_counter,
                                c.source, c.target);
                            a.span = cmd.span;
                            out.model.assets.emplace(c.gid, std::move(a));
                            record(c.gid);
                        } else if constexpr (std::is_same_v<T, dsl::ArtifactCmd>) {
                            if (claim_gid_taken(c.gid, c.gid_span)) return;
                            auto e = sacm::make_artifact(c.gid, c.kind, c.version, c.date,
                                                         c.content);
                            e.span = cmd.span;
                            out.model.artifacts.emplace(c.gid, std::move(e));
                            record(c.gid);
                        } else if constexpr (std::is_same_v<T, dsl::ArtifactRelCmd>) {
                            if (claim_gid_taken(c.gid, c.gid_span)) return;
                            auto e = sacm::make_artifact_relationship(c.gid, c.content,
                                                                      c.source, c.target);
                            e.span = cmd.span;
                            out.model.artifacts.emplace(c.gid, std::move(e));
                            record(c.gid);
                        } else if constexpr (std::is_same_v<T, dsl::ArtifactRefCmd>) {
                            if (claim_gid_taken(c.gid, c.gid_span)) return;
                            auto a = sacm::make_artifact_reference(c.gid, c.content, c.refs);
                            a.span = cmd.span;
                            out.model.assets.emplace(c.gid, std::move(a));
                            record(c.gid);
                        } else if constexpr (std::is_same_v<T, dsl::ExpressionCmd>) {
                            if (claim_gid_taken(c.gid, c.gid_span)) return;
                            auto e = sacm::ExpressionEntity(c.gid, c.lang, c.body);
                            e.span = cmd.span;
                            out.model.expressions.emplace(c.gid, std::move(e));
                            record(c.gid);
                        } else if constexpr (std::is_same_v<T, dsl::ObligationCmd>) {
                            if (claim_gid_taken(c.gid, c.gid_span)) return;
                            auto o = sacm::ObligationEntity(c.gid, c.spec);
                            o.span = cmd.span;
                            o.spec_span = c.spec_span;
                            gcl::TextSource src;
                            src.text = c.spec;
                            src.file = doc.file;
                            src.pos = c.spec_pos;
                            try {
                                auto parsed =
                                    gcl::parse_obligation_spec(src, registry, c.gid.str());
                                o.parsed = std::make_shared<gcl::Obligation>(
                                    std::move(parsed.obligation));
                                o.model_refs = std::move(parsed.refs);
                            } catch (const gcl::GclTextError& e) {
                                out.diagnostics.push_back(Diagnostic::error(
                                    "E031", e.span,
                                    "obligation `" + c.gid.str() +
                                        "` does not parse against the model: " + e.what(),
                                    c.gid.str()));
                            }
                            out.model.obligations.emplace(c.gid, std::move(o));
                            record(c.gid);
                        } else {
                            static_assert(std::is_same_v<T, dsl::TextCmd>);
                            sacm::TextBlock block;
                            block.id =
                                "text:" + doc.name + ":" + std::to_string(++text_counter);
                            block.content = c.content;
                            block.span = cmd.span;
                            out.model.texts.push_back(std::move(block));
                            out.entity_doc[out.model.texts.back().id] = doc.name;
                            out.prints[out.model.texts.back().id] = printed;
                        }
                    } catch (const sacm::ModelError& e) {
                        const char* code =
                            std::is_same_v<T, dsl::RelCmd> ||
                                    std::is_same_v<T, dsl::ArtifactRelCmd>
                                ? "E006"
                                : "E005";
                        out.diagnostics.push_back(Diagnostic::error(code, cmd.span, e.what()));
                    }
                },
                cmd.form);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reference checking
// ---------------------------------------------------------------------------

struct ReferenceReport {
    std::vector<Diagnostic> diagnostics;
    /// Entities whose own structural references failed; they do not take
    /// part in support and antiquotations against them fail, mirroring a
    /// command that was never successfully executed.
    std::set<Gid> broken;
};

/// One error per unresolved or mistyped gid in any SOURCE/TARGET list,
/// artifact reference set, or antiquotation. Messages name the missing gid.
inline ReferenceReport check_references(const ArgumentModel& model) {
    ReferenceReport out;

    auto missing = [&](const std::string& code, const Span& span, const Gid& gid,
                       const std::string& subject) {
        out.diagnostics.push_back(Diagnostic::error(
            code, span, "`" + gid.str() + "` does not exist", subject));
    };
    auto mistyped = [&](const std::string& code, const Span& span, const Gid& gid,
                        const std::string& expected, const std::string& subject) {
        out.diagnostics.push_back(Diagnostic::error(
            code, span, "`" + gid.str() + "` is not " + expected, subject));
    };

    // Structural references first; entities with failures count as broken.
    for (const auto& [gid, asset] : model.assets) {
        bool ok = true;
        if (asset.variant == ArgumentAsset::Variant::Relationship) {
            for (const auto& list : {&asset.source, &asset.target})
                for (const auto& ref : *list)
                    if (!sacm::exists(model, ref.gid)) {
                        missing("E010", ref.span, ref.gid, gid.str());
                        ok = false;
                    }
        } else if (asset.variant == ArgumentAsset::Variant::ArtifactReference) {
            for (const auto& ref : asset.referenced_artifacts) {
                auto r = sacm::resolve(model, EntityKind::Artifact, ref.gid);
                if (r.status == sacm::Resolution::Status::Absent) {
                    missing("E010", ref.span, ref.gid, gid.str());
                    ok = false;
                } else if (r.status == sacm::Resolution::Status::KindMismatch) {
                    mistyped("E010", ref.span, ref.gid, "an artifact element", gid.str());
                    ok = false;
                }
            }
        }
        if (!ok) out.broken.insert(gid);
    }
    for (const auto& [gid, element] : model.artifacts) {
        if (element.kind != ArtifactKind::Relationship) continue;
        bool ok = true;
        for (const auto& list : {&element.source, &element.target})
            for (const auto& ref : *list) {
                auto r = sacm::resolve(model, EntityKind::Artifact, ref.gid);
                if (r.status == sacm::Resolution::Status::Absent) {
                    missing("E010", ref.span, ref.gid, gid.str());
                    ok = false;
                } else if (r.status == sacm::Resolution::Status::KindMismatch) {
                    mistyped("E010", ref.span, ref.gid, "an artifact element", gid.str());
                    ok = false;
                }
            }
        if (!ok) out.broken.insert(gid);
    }
    // Obligations that failed to parse against the model are broken too.
    for (const auto& [gid, ob] : model.obligations)
        if (!ob.parsed) out.broken.insert(gid);

    // Brokenness cascades along structural references: citing an entity
    // whose own definition failed is citing something that is not there.
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [gid, asset] : model.assets) {
            if (out.broken.count(gid) ||
                asset.variant != ArgumentAsset::Variant::Relationship)
                continue;
            for (const auto& list : {&asset.source, &asset.target})
                for (const auto& ref : *list)
                    if (out.broken.count(ref.gid) && !out.broken.count(gid)) {
                        mistyped("E012", ref.span, ref.gid,
                                 "available (its definition failed to check)", gid.str());
                        out.broken.insert(gid);
                        grew = true;
                    }
        }
    }

    // Antiquotations, everywhere content lives.
    auto check_content = [&](const sacm::MultiLangString& mls, const std::string& subject) {
        for (const auto& frag : sacm::collect_refs(mls)) {
            auto r = sacm::resolve(model, *frag.ref_kind, *frag.target);
            if (r.status == sacm::Resolution::Status::Absent) {
                missing("E011", frag.span, *frag.target, subject);
            } else if (r.status == sacm::Resolution::Status::KindMismatch) {
                mistyped("E011", frag.span, *frag.target,
                         std::string("a ") + sacm::kind_name(*frag.ref_kind), subject);
            } else if (out.broken.count(*frag.target)) {
                missing("E011", frag.span, *frag.target, subject);
            }
        }
    };
    for (const auto& [gid, asset] : model.assets) check_content(asset.content, gid.str());
    for (const auto& [gid, element] : model.artifacts) check_content(element.content, gid.str());
    for (const auto& text : model.texts) check_content(text.content, text.id);

    return out;
}

// ---------------------------------------------------------------------------
// Structural well-formedness
// ---------------------------------------------------------------------------

/// Support edges run from a relationship's sources to its targets through
/// inference and evidence relationships (counter links included).
inline bool carries_support(const ArgumentAsset& a) {
    return a.variant == ArgumentAsset::Variant::Relationship &&
           (a.rel_kind == RelKind::Inference || a.rel_kind == RelKind::Evidence);
}

/// R1 support-acyclicity, R2 evidence shape, R3 context shape, R4 reasoning
/// links. Broken relationships are skipped; their references already failed.
inline std::vector<Diagnostic> check_structure(const ArgumentModel& model,
                                               const std::set<Gid>& broken) {
    std::vector<Diagnostic> out;

    // R1: no cycle through support edges.
    std::map<Gid, std::set<Gid>> succ;
    for (const auto& [gid, asset] : model.assets) {
        if (!carries_support(asset) || broken.count(gid)) continue;
        for (const auto& s : asset.source)
            for (const auto& t : asset.target)
                if (model.assets.count(s.gid) && model.assets.count(t.gid))
                    succ[s.gid].insert(t.gid);
    }
    // iterative strongly-connected components (Tarjan)
    std::map<Gid, int> index, low;
    std::vector<Gid> stack;
    std::set<Gid> on_stack;
    int counter = 0;
    std::vector<std::vector<Gid>> cycles;
    std::function<void(const Gid&)> strongconnect = [&](const Gid& v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack.insert(v);
        auto it = succ.find(v);
        if (it != succ.end())
            for (const auto& w : it->second) {
                if (!index.count(w)) {
                    strongconnect(w);
                    low[v] = std::min(low[v], low[w]);
                } else if (on_stack.count(w)) {
                    low[v] = std::min(low[v], index[w]);
                }
            }
        if (low[v] == index[v]) {
            std::vector<Gid> comp;
            while (true) {
                Gid w = stack.back();
                stack.pop_back();
                on_stack.erase(w);
                comp.push_back(w);
                if (w == v) break;
            }
            if (comp.size() > 1) {
                std::sort(comp.begin(), comp.end());
                cycles.push_back(std::move(comp));
            }
        }
    };
    for (const auto& [v, _] : succ)
        if (!index.count(v)) strongconnect(v);
    std::sort(cycles.begin(), cycles.end());
    for (const auto& comp : cycles) {
        std::string names;
        for (const auto& g : comp) {
            if (!names.empty()) names += " -> ";
            names += g.str();
        }
        names += " -> " + comp.front().str();
        const auto& anchor = model.assets.at(comp.front());
        out.push_back(Diagnostic::error("E020", anchor.span, "support cycle: " + names,
                                        comp.front().str()));
    }

    // R2 evidence shape, R3 context shape, R4 reasoning links.
    for (const auto& [gid, asset] : model.assets) {
        if (asset.variant != ArgumentAsset::Variant::Relationship || broken.count(gid))
            continue;
        if (asset.rel_kind == RelKind::Evidence) {
            for (const auto& s : asset.source) {
                auto it = model.assets.find(s.gid);
                bool is_ref = it != model.assets.end() &&
                              it->second.variant == ArgumentAsset::Variant::ArtifactReference;
                bool is_oblig = model.obligations.count(s.gid) != 0;
                if (!is_ref && !is_oblig)
                    out.push_back(Diagnostic::error(
                        "E021", s.span,
                        "evidence source `" + s.gid.str() +
                            "` must be an artifact reference or an obligation",
                        gid.str()));
            }
        }
        if (asset.rel_kind == RelKind::Context) {
            for (const auto& s : asset.source) {
                auto it = model.assets.find(s.gid);
                bool shape_ok =
                    it != model.assets.end() &&
                    (it->second.variant == ArgumentAsset::Variant::ArtifactReference ||
                     it->second.variant == ArgumentAsset::Variant::Claim);
                if (!shape_ok)
                    out.push_back(Diagnostic::error(
                        "E022", s.span,
                        "context source `" + s.gid.str() +
                            "` must be an artifact reference or a claim",
                        gid.str()));
            }
        }
        if (asset.reasoning) {
            auto r = sacm::resolve(model, EntityKind::ArgumentReasoning, asset.reasoning->gid);
            if (!r.found())
                out.push_back(Diagnostic::error(
                    "E023", asset.reasoning->span,
                    "`" + asset.reasoning->gid.str() + "` is not argument reasoning",
                    gid.str()));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Effective claim status
// ---------------------------------------------------------------------------

enum class EffectiveStatus { Supported, Axiomatic, Assumed, NeedsSupport, Defeated };

inline const char* status_name(EffectiveStatus s) {
    switch (s) {
        case EffectiveStatus::Supported: return "supported";
        case EffectiveStatus::Axiomatic: return "axiomatic";
        case EffectiveStatus::Assumed: return "assumed";
        case EffectiveStatus::NeedsSupport: return "needs-support";
        case EffectiveStatus::Defeated: return "defeated";
    }
    return "?";
}

class StatusComputer {
public:
    StatusComputer(const ArgumentModel& model, const std::set<Gid>& broken,
                   const std::set<Gid>& passed_obligations)
        : model_(model), broken_(broken), passed_(passed_obligations) {
        for (const auto& [gid, asset] : model.assets) {
            if (!carries_support(asset) || broken.count(gid)) continue;
            for (const auto& t : asset.target) incoming_[t.gid].push_back(&asset);
        }
    }

    /// Declared axiomatic/assumed/defeated claims keep their declaration.
    /// Otherwise a claim is defeated when a counter-relationship with fully
    /// supported sources targets it; supported when some ordinary inference
    /// or evidence with fully supported sources does; needs-support else.
    /// Artifact references and passed obligations are terminal support.
    EffectiveStatus status(const Gid& claim) {
        auto memo = memo_.find(claim);
        if (memo != memo_.end()) return memo->second;
        if (on_stack_.count(claim)) return EffectiveStatus::NeedsSupport;  // cycle guard

        const auto& asset = model_.assets.at(claim);
        EffectiveStatus result = EffectiveStatus::NeedsSupport;
        switch (asset.declaration) {
            case sacm::AssertionDeclaration::Axiomatic:
                result = EffectiveStatus::Axiomatic;
                break;
            case sacm::AssertionDeclaration::Assumed:
                result = EffectiveStatus::Assumed;
                break;
            case sacm::AssertionDeclaration::Defeated:
                result = EffectiveStatus::Defeated;
                break;
            default: {
                on_stack_.insert(claim);
                bool defeated = false, supported = false;
                auto it = incoming_.find(claim);
                if (it != incoming_.end()) {
                    for (const ArgumentAsset* rel : it->second) {
                        bool all = true;
                        for (const auto& s : rel->source)
                            if (!supportive(s.gid)) {
                                all = false;
                                break;
                            }
                        if (!all) continue;
                        (rel->is_counter ? defeated : supported) = true;
                    }
                }
                on_stack_.erase(claim);
                // a standing refutation beats standing support
                result = defeated    ? EffectiveStatus::Defeated
                         : supported ? EffectiveStatus::Supported
                                     : EffectiveStatus::NeedsSupport;
            }
        }
        memo_[claim] = result;
        return result;
    }

    std::map<Gid, EffectiveStatus> all_claims() {
        std::map<Gid, EffectiveStatus> out;
        for (const auto& [gid, asset] : model_.assets)
            if (asset.variant == ArgumentAsset::Variant::Claim) out.emplace(gid, status(gid));
        return out;
    }

private:
    bool supportive(const Gid& gid) {
        if (broken_.count(gid)) return false;
        auto asset = model_.assets.find(gid);
        if (asset != model_.assets.end()) {
            switch (asset->second.variant) {
                case ArgumentAsset::Variant::Claim: {
                    auto s = status(gid);
                    return s == EffectiveStatus::Supported ||
                           s == EffectiveStatus::Axiomatic || s == EffectiveStatus::Assumed;
                }
                case ArgumentAsset::Variant::ArtifactReference: return true;
                default: return false;
            }
        }
        if (model_.obligations.count(gid)) return passed_.count(gid) != 0;
        return false;  // absent, expressions, artifact elements
    }

    const ArgumentModel& model_;
    const std::set<Gid>& broken_;
    const std::set<Gid>& passed_;
    std::map<Gid, std::vector<const ArgumentAsset*>> incoming_;
    std::map<Gid, EffectiveStatus> memo_;
    std::set<Gid> on_stack_;
};

/// Warnings for claims the argument leaves open or refutes.
inline std::vector<Diagnostic> status_warnings(const ArgumentModel& model,
                                               const std::map<Gid, EffectiveStatus>& status) {
    std::vector<Diagnostic> out;
    for (const auto& [gid, st] : status) {
        const auto& asset = model.assets.at(gid);
        if (st == EffectiveStatus::NeedsSupport)
            out.push_back(Diagnostic::warning(
                "W001", asset.span, "claim `" + gid.str() + "` needs support", gid.str()));
        else if (st == EffectiveStatus::Defeated)
            out.push_back(Diagnostic::warning(
                "W002", asset.span, "claim `" + gid.str() + "` is defeated", gid.str()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Obligation discharge
// ---------------------------------------------------------------------------

struct DischargeResult {
    std::vector<Diagnostic> diagnostics;
    std::map<Gid, gcl::Verdict> verdicts;  // parsed obligations only
    std::set<Gid> passed;
};

inline std::string render_state_inline(const gcl::StateSpace& space, const gcl::State& s) {
    std::map<std::string, std::string> rows;
    for (int i = 0; i < space.var_count(); ++i)
        rows[space.var(i).path] = space.var(i).domain.value_name(s[static_cast<size_t>(i)]);
    std::string out;
    for (const auto& [path, value] : rows) {
        if (!out.empty()) out += ", ";
        out += path + " = " + value;
    }
    return out;
}

/// Fingerprint of everything an obligation's verdict depends on: its spec
/// text, the state space, and the transitive closure of the definitions it
/// references. Cached verdicts are reused only on exact matches.
inline Fingerprint obligation_fingerprint(const sacm::ObligationEntity& ob,
                                          const gcl::GclRegistry& registry) {
    std::string content = ob.spec_text + "\n--space--\n" + registry.space_printed();
    for (const auto& name : registry.transitive_refs(ob.model_refs)) {
        content += "\n--def " + name + "--\n";
        if (const auto* def = registry.find(name)) content += def->printed;
    }
    return fingerprint(content);
}

inline DischargeResult discharge_obligations(
    const ArgumentModel& model, const gcl::GclRegistry& registry, std::int64_t state_cap,
    std::map<Fingerprint, gcl::Verdict>* cache = nullptr) {
    DischargeResult out;
    for (const auto& [gid, ob] : model.obligations) {
        if (!ob.parsed) continue;  // E031 already reported during elaboration
        Fingerprint key = obligation_fingerprint(ob, registry);
        gcl::Verdict verdict;
        bool cached = false;
        if (cache) {
            auto it = cache->find(key);
            if (it != cache->end()) {
                verdict = it->second;
                cached = true;
            }
        }
        if (!cached) {
            try {
                verdict = gcl::check_obligation(*ob.parsed, state_cap);
            } catch (const gcl::SpaceTooLarge& e) {
                out.diagnostics.push_back(Diagnostic::error(
                    "E033", ob.spec_span,
                    "obligation `" + gid.str() + "` is not checkable: " + e.what(),
                    gid.str()));
                continue;
            }
            if (cache) (*cache)[key] = verdict;
        }
        out.verdicts.emplace(gid, verdict);
        if (verdict.pass) {
            out.passed.insert(gid);
        } else {
            std::string cx = verdict.counterexample
                                 ? render_state_inline(*ob.parsed->space,
                                                       *verdict.counterexample)
                                 : std::string("none");
            out.diagnostics.push_back(Diagnostic::error(
                "E030", ob.spec_span,
                "obligation `" + gid.str() + "` does not hold; counterexample: " + cx,
                gid.str()));
        }
    }
    return out;
}

}  // namespace assurkit::check
