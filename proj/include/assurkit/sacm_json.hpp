// sacm_json.hpp - JSON export of a full argument model
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <json.hpp>

#include "assurkit/sacm_model.hpp"

namespace assurkit::sacm {

using Json = nlohmann::ordered_json;

inline Json to_json(const MultiLangString& mls) {
    Json out = Json::array();
    for (const auto& f : mls.fragments) {
        Json j;
        switch (f.type) {
            case Fragment::Type::Text:
                j["t"] = "text";
                j["body"] = f.body;
                j["lang"] = f.lang;
                break;
            case Fragment::Type::Ref:
                j["t"] = "ref";
                j["kind"] = kind_name(*f.ref_kind);
                j["target"] = f.target->str();
                break;
            case Fragment::Type::Formal:
                j["t"] = "formal";
                j["lang"] = f.lang;
                j["body"] = f.body;
                break;
        }
        out.push_back(std::move(j));
    }
    return out;
}

inline Json to_json(const ArgumentAsset& a) {
    Json j;
    j["gid"] = a.gid.str();
    switch (a.variant) {
        case ArgumentAsset::Variant::Claim:
            j["kind"] = "Claim";
            j["declaration"] = declaration_name(a.declaration);
            break;
        case ArgumentAsset::Variant::Reasoning:
            j["kind"] = "ArgumentReasoning";
            break;
        case ArgumentAsset::Variant::ArtifactReference: {
            j["kind"] = "ArtifactReference";
            Json refs = Json::array();
            for (const auto& r : a.referenced_artifacts) refs.push_back(r.gid.str());
            j["referencedArtifacts"] = std::move(refs);
            break;
        }
        case ArgumentAsset::Variant::Relationship: {
            j["kind"] = rel_kind_name(a.rel_kind);
            j["declaration"] = declaration_name(a.declaration);
            j["isCounter"] = a.is_counter;
            Json src = Json::array(), tgt = Json::array();
            for (const auto& r : a.source) src.push_back(r.gid.str());
            for (const auto& r : a.target) tgt.push_back(r.gid.str());
            j["source"] = std::move(src);
            j["target"] = std::move(tgt);
            if (a.reasoning) j["reasoning"] = a.reasoning->gid.str();
            break;
        }
    }
    j["content"] = to_json(a.content);
    return j;
}

inline Json to_json(const ArtifactElement& e) {
    Json j;
    j["gid"] = e.gid.str();
    j["kind"] = artifact_kind_name(e.kind);
    j["version"] = e.version;
    j["date"] = e.date;
    j["content"] = to_json(e.content);
    if (e.kind == ArtifactKind::Relationship) {
        Json src = Json::array(), tgt = Json::array();
        for (const auto& r : e.source) src.push_back(r.gid.str());
        for (const auto& r : e.target) tgt.push_back(r.gid.str());
        j["source"] = std::move(src);
        j["target"] = std::move(tgt);
    }
    return j;
}

inline Json to_json(const ExpressionEntity& e) {
    Json j;
    j["gid"] = e.gid.str();
    j["kind"] = "Expression";
    j["lang"] = e.lang;
    j["body"] = e.body;
    return j;
}

inline Json to_json(const ObligationEntity& o) {
    Json j;
    j["gid"] = o.gid.str();
    j["kind"] = "Obligation";
    j["spec"] = o.spec_text;
    j["parses"] = o.parsed != nullptr;
    return j;
}

inline Json to_json(const ArgumentModel& model) {
    Json j;
    j["assets"] = Json::object();
    for (const auto& [gid, a] : model.assets) j["assets"][gid.str()] = to_json(a);
    j["artifacts"] = Json::object();
    for (const auto& [gid, e] : model.artifacts) j["artifacts"][gid.str()] = to_json(e);
    j["expressions"] = Json::object();
    for (const auto& [gid, e] : model.expressions) j["expressions"][gid.str()] = to_json(e);
    j["obligations"] = Json::object();
    for (const auto& [gid, o] : model.obligations) j["obligations"][gid.str()] = to_json(o);
    return j;
}

}  // namespace assurkit::sacm
