// sacm_model.hpp - in-memory argumentation and artifact model
//
// Arguments are collections of assets (claims, reasoning, artifact
// references, asserted relationships), artifact elements, expressions, and
// formal obligations, all keyed by a single global identifier namespace.
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "assurkit/gcl/verify.hpp"
#include "assurkit/source_span.hpp"

namespace assurkit::sacm {

class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Global identifier: `[A-Za-z_][A-Za-z0-9_]*`, unique across every entity
/// namespace of a model.
class Gid {
public:
    static bool valid(const std::string& s) {
        if (s.empty()) return false;
        auto head = [](char c) {
            return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
        };
        if (!head(s[0])) return false;
        for (char c : s)
            if (!head(c) && !(c >= '0' && c <= '9')) return false;
        return true;
    }

    static Gid parse(const std::string& s) {
        if (!valid(s)) throw ModelError("invalid identifier: `" + s + "`");
        return Gid(s);
    }

    const std::string& str() const { return value_; }

    friend bool operator==(const Gid& a, const Gid& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Gid& a, const Gid& b) { return a.value_ != b.value_; }
    friend bool operator<(const Gid& a, const Gid& b) { return a.value_ < b.value_; }

private:
    explicit Gid(std::string v) : value_(std::move(v)) {}
    std::string value_;
};

enum class AssertionDeclaration { Asserted, Axiomatic, Defeated, Assumed, NeedsSupport };

inline const char* declaration_name(AssertionDeclaration d) {
    switch (d) {
        case AssertionDeclaration::Asserted: return "asserted";
        case AssertionDeclaration::Axiomatic: return "axiomatic";
        case AssertionDeclaration::Defeated: return "defeated";
        case AssertionDeclaration::Assumed: return "assumed";
        case AssertionDeclaration::NeedsSupport: return "needs_support";
    }
    return "?";
}

inline std::optional<AssertionDeclaration> declaration_of(const std::string& s) {
    if (s == "asserted") return AssertionDeclaration::Asserted;
    if (s == "axiomatic") return AssertionDeclaration::Axiomatic;
    if (s == "defeated") return AssertionDeclaration::Defeated;
    if (s == "assumed") return AssertionDeclaration::Assumed;
    if (s == "needs_support") return AssertionDeclaration::NeedsSupport;
    return std::nullopt;
}

/// Entity kinds nameable from antiquotations and reference checks.
/// `Artifact` matches any artifact element; `Constant` is the antiquotation
/// kind for expressions holding formal terms.
enum class EntityKind {
    Claim,
    ArgumentReasoning,
    ArtifactReference,
    AssertedInference,
    AssertedContext,
    AssertedEvidence,
    AssertedArtifactSupport,
    Artifact,
    Activity,
    Participant,
    Resource,
    Technique,
    ArtifactRelationship,
    Expression,
    Constant,
    Obligation,
};

inline const char* kind_name(EntityKind k) {
    switch (k) {
        case EntityKind::Claim: return "Claim";
        case EntityKind::ArgumentReasoning: return "ArgumentReasoning";
        case EntityKind::ArtifactReference: return "ArtifactReference";
        case EntityKind::AssertedInference: return "AssertedInference";
        case EntityKind::AssertedContext: return "AssertedContext";
        case EntityKind::AssertedEvidence: return "AssertedEvidence";
        case EntityKind::AssertedArtifactSupport: return "AssertedArtifactSupport";
        case EntityKind::Artifact: return "Artifact";
        case EntityKind::Activity: return "Activity";
        case EntityKind::Participant: return "Participant";
        case EntityKind::Resource: return "Resource";
        case EntityKind::Technique: return "Technique";
        case EntityKind::ArtifactRelationship: return "ArtifactRelationship";
        case EntityKind::Expression: return "Expression";
        case EntityKind::Constant: return "Constant";
        case EntityKind::Obligation: return "Obligation";
    }
    return "?";
}

inline std::optional<EntityKind> kind_of_name(const std::string& s) {
    static const std::map<std::string, EntityKind> table = {
        {"Claim", EntityKind::Claim},
        {"ArgumentReasoning", EntityKind::ArgumentReasoning},
        {"ArtifactReference", EntityKind::ArtifactReference},
        {"AssertedInference", EntityKind::AssertedInference},
        {"AssertedContext", EntityKind::AssertedContext},
        {"AssertedEvidence", EntityKind::AssertedEvidence},
        {"AssertedArtifactSupport", EntityKind::AssertedArtifactSupport},
        {"Artifact", EntityKind::Artifact},
        {"Activity", EntityKind::Activity},
        {"Participant", EntityKind::Participant},
        {"Resource", EntityKind::Resource},
        {"Technique", EntityKind::Technique},
        {"ArtifactRelationship", EntityKind::ArtifactRelationship},
        {"Expression", EntityKind::Expression},
        {"Constant", EntityKind::Constant},
        {"Obligation", EntityKind::Obligation},
    };
    auto it = table.find(s);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------
// Content
// ---------------------------------------------------------------------------

/// One piece of an entity's content: plain text in some language, a checked
/// reference to another entity, or an embedded formal phrase.
struct Fragment {
    enum class Type { Text, Ref, Formal };
    Type type = Type::Text;
    std::string body;          // Text and Formal
    std::string lang = "en";   // Text language tag, or the Formal notation tag
    std::optional<EntityKind> ref_kind;
    std::optional<Gid> target;
    Span span;

    static Fragment text(std::string body, std::string lang = "en") {
        Fragment f;
        f.type = Type::Text;
        f.body = std::move(body);
        f.lang = std::move(lang);
        return f;
    }
    static Fragment ref(EntityKind kind, Gid target) {
        Fragment f;
        f.type = Type::Ref;
        f.ref_kind = kind;
        f.target = std::move(target);
        return f;
    }
    static Fragment formal(std::string lang, std::string body) {
        Fragment f;
        f.type = Type::Formal;
        f.lang = std::move(lang);
        f.body = std::move(body);
        return f;
    }
};

/// Mixed-language content; always at least one fragment.
struct MultiLangString {
    std::vector<Fragment> fragments;

    static MultiLangString of(std::vector<Fragment> fragments) {
        if (fragments.empty()) throw ModelError("content needs at least one fragment");
        MultiLangString m;
        m.fragments = std::move(fragments);
        return m;
    }
    static MultiLangString text(std::string body, std::string lang = "en") {
        return of({Fragment::text(std::move(body), std::move(lang))});
    }
};

/// Reference fragments in document order.
inline std::vector<Fragment> collect_refs(const MultiLangString& mls) {
    std::vector<Fragment> out;
    for (const auto& f : mls.fragments)
        if (f.type == Fragment::Type::Ref) out.push_back(f);
    return out;
}

// ---------------------------------------------------------------------------
// Entities
// ---------------------------------------------------------------------------

enum class RelKind { Inference, Context, Evidence, ArtifactSupport };

inline const char* rel_kind_name(RelKind k) {
    switch (k) {
        case RelKind::Inference: return "AssertedInference";
        case RelKind::Context: return "AssertedContext";
        case RelKind::Evidence: return "AssertedEvidence";
        case RelKind::ArtifactSupport: return "AssertedArtifactSupport";
    }
    return "?";
}

/// A reference to another entity together with where it was written.
struct GidRef {
    Gid gid;
    Span span;
};

/// Argument assets: claims, reasoning, artifact references, and asserted
/// relationships share an identifier and content; the variant carries the
/// rest.
struct ArgumentAsset {
    enum class Variant { Claim, Reasoning, ArtifactReference, Relationship };

    Gid gid;
    MultiLangString content;
    Variant variant;
    Span span;  // defining command

    // Claim and Relationship
    AssertionDeclaration declaration = AssertionDeclaration::Asserted;

    // Relationship
    RelKind rel_kind = RelKind::Inference;
    bool is_counter = false;
    std::optional<GidRef> reasoning;
    std::vector<GidRef> source;
    std::vector<GidRef> target;

    // ArtifactReference
    std::vector<GidRef> referenced_artifacts;

    ArgumentAsset(Gid g, MultiLangString c, Variant v)
        : gid(std::move(g)), content(std::move(c)), variant(v) {}
};

inline ArgumentAsset make_claim(Gid gid, MultiLangString content,
                                AssertionDeclaration decl = AssertionDeclaration::Asserted) {
    ArgumentAsset a(std::move(gid), std::move(content), ArgumentAsset::Variant::Claim);
    a.declaration = decl;
    return a;
}

inline ArgumentAsset make_reasoning(Gid gid, MultiLangString content) {
    return ArgumentAsset(std::move(gid), std::move(content), ArgumentAsset::Variant::Reasoning);
}

inline ArgumentAsset make_artifact_reference(Gid gid, MultiLangString content,
                                             std::vector<GidRef> artifacts) {
    if (artifacts.empty())
        throw ModelError("artifact reference `" + gid.str() + "` cites no artifacts");
    ArgumentAsset a(std::move(gid), std::move(content),
                    ArgumentAsset::Variant::ArtifactReference);
    a.referenced_artifacts = std::move(artifacts);
    return a;
}

inline ArgumentAsset make_relationship(Gid gid, MultiLangString content, RelKind kind,
                                       bool is_counter, std::vector<GidRef> source,
                                       std::vector<GidRef> target,
                                       AssertionDeclaration decl = AssertionDeclaration::Asserted) {
    if (source.empty() || target.empty())
        throw ModelError("relationship `" + gid.str() + "` needs sources and targets");
    for (const auto& s : source)
        for (const auto& t : target)
            if (s.gid == t.gid)
                throw ModelError("relationship `" + gid.str() + "` lists `" + s.gid.str() +
                                 "` as both source and target");
    ArgumentAsset a(std::move(gid), std::move(content), ArgumentAsset::Variant::Relationship);
    a.rel_kind = kind;
    a.is_counter = is_counter;
    a.declaration = decl;
    a.source = std::move(source);
    a.target = std::move(target);
    return a;
}

enum class ArtifactKind { Artifact, Activity, Participant, Resource, Technique, Relationship };

inline const char* artifact_kind_name(ArtifactKind k) {
    switch (k) {
        case ArtifactKind::Artifact: return "artifact";
        case ArtifactKind::Activity: return "activity";
        case ArtifactKind::Participant: return "participant";
        case ArtifactKind::Resource: return "resource";
        case ArtifactKind::Technique: return "technique";
        case ArtifactKind::Relationship: return "relationship";
    }
    return "?";
}

inline std::optional<ArtifactKind> artifact_kind_of(const std::string& s) {
    if (s == "artifact") return ArtifactKind::Artifact;
    if (s == "activity") return ArtifactKind::Activity;
    if (s == "participant") return ArtifactKind::Participant;
    if (s == "resource") return ArtifactKind::Resource;
    if (s == "technique") return ArtifactKind::Technique;
    return std::nullopt;
}

/// Calendar date, YYYY-MM-DD. Dates are provenance metadata; empty is
/// allowed on artifact relationships, which carry none.
inline bool is_iso_date(const std::string& s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
        if (s[i] < '0' || s[i] > '9') return false;
    int month = (s[5] - '0') * 10 + (s[6] - '0');
    int day = (s[8] - '0') * 10 + (s[9] - '0');
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

struct ArtifactElement {
    Gid gid;
    ArtifactKind kind = ArtifactKind::Artifact;
    std::string version;
    std::string date;
    MultiLangString content;
    Span span;
    std::vector<GidRef> source;  // relationships only
    std::vector<GidRef> target;

    ArtifactElement(Gid g, MultiLangString c) : gid(std::move(g)), content(std::move(c)) {}
};

inline ArtifactElement make_artifact(Gid gid, ArtifactKind kind, std::string version,
                                     std::string date, MultiLangString content) {
    if (kind == ArtifactKind::Relationship)
        throw ModelError("use make_artifact_relationship for relationships");
    if (!is_iso_date(date))
        throw ModelError("artifact `" + gid.str() + "` needs an ISO-8601 date, got `" + date +
                         "`");
    ArtifactElement e(std::move(gid), std::move(content));
    e.kind = kind;
    e.version = std::move(version);
    e.date = std::move(date);
    return e;
}

inline ArtifactElement make_artifact_relationship(Gid gid, MultiLangString content,
                                                  std::vector<GidRef> source,
                                                  std::vector<GidRef> target) {
    if (source.empty() || target.empty())
        throw ModelError("artifact relationship `" + gid.str() + "` needs sources and targets");
    ArtifactElement e(std::move(gid), std::move(content));
    e.kind = ArtifactKind::Relationship;
    e.source = std::move(source);
    e.target = std::move(target);
    return e;
}

/// A named formal term or phrase, referenced from claim content.
struct ExpressionEntity {
    Gid gid;
    std::string lang;
    std::string body;
    Span span;

    ExpressionEntity(Gid g, std::string lang_, std::string body_)
        : gid(std::move(g)), lang(std::move(lang_)), body(std::move(body_)) {
        if (body.empty()) throw ModelError("expression `" + gid.str() + "` has an empty body");
    }
};

/// A formal obligation attached as evidence. The specification text parses
/// against the registered model; `parsed` stays null when it does not.
struct ObligationEntity {
    Gid gid;
    std::string spec_text;
    Span span;       // defining command
    Span spec_span;  // the SPEC string
    std::shared_ptr<const gcl::Obligation> parsed;
    std::vector<std::string> model_refs;  // named definitions the spec uses

    ObligationEntity(Gid g, std::string spec) : gid(std::move(g)), spec_text(std::move(spec)) {}
};

/// Anonymous commentary with checked references (not addressable by gid).
struct TextBlock {
    std::string id;  // synthesized, unique per model
    MultiLangString content;
    Span span;
};

// ---------------------------------------------------------------------------
// The model
// ---------------------------------------------------------------------------

struct ArgumentModel {
    std::map<Gid, ArgumentAsset> assets;
    std::map<Gid, ArtifactElement> artifacts;
    std::map<Gid, ExpressionEntity> expressions;
    std::map<Gid, ObligationEntity> obligations;
    std::vector<TextBlock> texts;

    bool gid_taken(const Gid& g) const {
        return assets.count(g) || artifacts.count(g) || expressions.count(g) ||
               obligations.count(g);
    }
};

/// Functional insert; nullopt when the gid already names any entity.
inline std::optional<ArgumentModel> add_asset(const ArgumentModel& model, ArgumentAsset asset) {
    if (model.gid_taken(asset.gid)) return std::nullopt;
    ArgumentModel out = model;
    Gid g = asset.gid;
    out.assets.emplace(std::move(g), std::move(asset));
    return out;
}

inline std::optional<ArgumentModel> add_artifact(const ArgumentModel& model,
                                                 ArtifactElement element) {
    if (model.gid_taken(element.gid)) return std::nullopt;
    ArgumentModel out = model;
    Gid g = element.gid;
    out.artifacts.emplace(std::move(g), std::move(element));
    return out;
}

inline std::optional<ArgumentModel> add_expression(const ArgumentModel& model,
                                                   ExpressionEntity e) {
    if (model.gid_taken(e.gid)) return std::nullopt;
    ArgumentModel out = model;
    Gid g = e.gid;
    out.expressions.emplace(std::move(g), std::move(e));
    return out;
}

inline std::optional<ArgumentModel> add_obligation(const ArgumentModel& model,
                                                   ObligationEntity o) {
    if (model.gid_taken(o.gid)) return std::nullopt;
    ArgumentModel out = model;
    Gid g = o.gid;
    out.obligations.emplace(std::move(g), std::move(o));
    return out;
}

// ---------------------------------------------------------------------------
// Resolution
// ---------------------------------------------------------------------------

struct Resolution {
    enum class Status { Found, Absent, KindMismatch };
    Status status = Status::Absent;
    const ArgumentAsset* asset = nullptr;
    const ArtifactElement* artifact = nullptr;
    const ExpressionEntity* expression = nullptr;
    const ObligationEntity* obligation = nullptr;

    bool found() const { return status == Status::Found; }
};

namespace detail {

inline bool asset_matches(const ArgumentAsset& a, EntityKind kind) {
    using V = ArgumentAsset::Variant;
    switch (kind) {
        case EntityKind::Claim: return a.variant == V::Claim;
        case EntityKind::ArgumentReasoning: return a.variant == V::Reasoning;
        case EntityKind::ArtifactReference: return a.variant == V::ArtifactReference;
        case EntityKind::AssertedInference:
            return a.variant == V::Relationship && a.rel_kind == RelKind::Inference;
        case EntityKind::AssertedContext:
            return a.variant == V::Relationship && a.rel_kind == RelKind::Context;
        case EntityKind::AssertedEvidence:
            return a.variant == V::Relationship && a.rel_kind == RelKind::Evidence;
        case EntityKind::AssertedArtifactSupport:
            return a.variant == V::Relationship && a.rel_kind == RelKind::ArtifactSupport;
        default: return false;
    }
}

inline bool artifact_matches(const ArtifactElement& e, EntityKind kind) {
    switch (kind) {
        case EntityKind::Artifact: return true;  // the generic artifact kind
        case EntityKind::Activity: return e.kind == ArtifactKind::Activity;
        case EntityKind::Participant: return e.kind == ArtifactKind::Participant;
        case EntityKind::Resource: return e.kind == ArtifactKind::Resource;
        case EntityKind::Technique: return e.kind == ArtifactKind::Technique;
        case EntityKind::ArtifactRelationship: return e.kind == ArtifactKind::Relationship;
        default: return false;
    }
}

}  // namespace detail

/// Resolve a gid against an expected kind. Distinguishes "absent" (no entity
/// of any kind carries the gid) from "kind mismatch".
inline Resolution resolve(const ArgumentModel& model, EntityKind kind, const Gid& gid) {
    Resolution r;
    bool exists = false;
    if (auto it = model.assets.find(gid); it != model.assets.end()) {
        exists = true;
        if (detail::asset_matches(it->second, kind)) {
            r.status = Resolution::Status::Found;
            r.asset = &it->second;
            return r;
        }
    }
    if (auto it = model.artifacts.find(gid); it != model.artifacts.end()) {
        exists = true;
        if (detail::artifact_matches(it->second, kind)) {
            r.status = Resolution::Status::Found;
            r.artifact = &it->second;
            return r;
        }
    }
    if (auto it = model.expressions.find(gid); it != model.expressions.end()) {
        exists = true;
        if (kind == EntityKind::Expression || kind == EntityKind::Constant) {
            r.status = Resolution::Status::Found;
            r.expression = &it->second;
            return r;
        }
    }
    if (auto it = model.obligations.find(gid); it != model.obligations.end()) {
        exists = true;
        if (kind == EntityKind::Obligation) {
            r.status = Resolution::Status::Found;
            r.obligation = &it->second;
            return r;
        }
    }
    r.status = exists ? Resolution::Status::KindMismatch : Resolution::Status::Absent;
    return r;
}

/// Resolve a gid against any kind at all (existence).
inline bool exists(const ArgumentModel& model, const Gid& gid) { return model.gid_taken(gid); }

}  // namespace assurkit::sacm
