// asr_printer.hpp - canonical text for parsed documents
//
// The printed form re-parses to a structurally equal document; it is also
// the content that gets fingerprinted, so whitespace and comment edits are
// change-free by construction.
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "assurkit/asr_parser.hpp"

namespace assurkit::dsl {

inline std::string escape_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

/// Render content back to its string form. Text containing a literal `@{`
/// has no escaped spelling in this grammar and will not round-trip.
inline std::string print_mls(const MultiLangString& mls) {
    std::string out;
    for (const auto& f : mls.fragments) {
        switch (f.type) {
            case sacm::Fragment::Type::Text: out += f.body; break;
            case sacm::Fragment::Type::Ref:
                out += "@{" + std::string(sacm::kind_name(*f.ref_kind)) + " " +
                       f.target->str() + "}";
                break;
            case sacm::Fragment::Type::Formal:
                out += "@{formal " + f.lang + ": " + f.body + "}";
                break;
        }
    }
    return escape_string(out);
}

inline std::string print_gids(const std::vector<GidRef>& refs) {
    std::string out;
    for (const auto& r : refs) {
        out.push_back(' ');
        out += r.gid.str();
    }
    return out;
}

inline std::string print_command(const Command& cmd) {
    return std::visit(
        [](const auto& c) -> std::string {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, ClaimCmd>) {
                std::string out = "CLAIM " + c.gid.str();
                if (c.declaration != AssertionDeclaration::Asserted)
                    out += std::string(" DECL ") + sacm::declaration_name(c.declaration);
                return out + " CONTENT " + print_mls(c.content);
            } else if constexpr (std::is_same_v<T, RelCmd>) {
                std::string out;
                switch (c.kind) {
                    case RelKind::Inference: out = "ASSERTED_INFERENCE"; break;
                    case RelKind::Context: out = "ASSERTED_CONTEXT"; break;
                    case RelKind::Evidence: out = "ASSERTED_EVIDENCE"; break;
                    case RelKind::ArtifactSupport: out = "ASSERTED_ARTIFACT_SUPPORT"; break;
                }
                out += " " + c.gid.str();
                if (c.is_counter) out += " COUNTER";
                return out + " SOURCE" + print_gids(c.source) + " TARGET" + print_gids(c.target);
            } else if constexpr (std::is_same_v<T, ArtifactCmd>) {
                std::string out = "ARTIFACT " + c.gid.str();
                if (c.kind != ArtifactKind::Artifact)
                    out += std::string(" KIND ") + sacm::artifact_kind_name(c.kind);
                return out + " VERSION " + escape_string(c.version) + " DATE " +
                       escape_string(c.date) + " CONTENT " + print_mls(c.content);
            } else if constexpr (std::is_same_v<T, ArtifactRelCmd>) {
                return "ARTIFACT_REL " + c.gid.str() + " SOURCE" + print_gids(c.source) +
                       " TARGET" + print_gids(c.target) + " CONTENT " + print_mls(c.content);
            } else if constexpr (std::is_same_v<T, ArtifactRefCmd>) {
                return "ARTIFACT_REFERENCE " + c.gid.str() + " REFS" + print_gids(c.refs) +
                       " CONTENT " + print_mls(c.content);
            } else if constexpr (std::is_same_v<T, ExpressionCmd>) {
                return "EXPRESSION " + c.gid.str() + " LANG " + escape_string(c.lang) +
                       " BODY " + escape_string(c.body);
            } else if constexpr (std::is_same_v<T, ObligationCmd>) {
                return "OBLIGATION " + c.gid.str() + " SPEC " + escape_string(c.spec);
            } else {
                static_assert(std::is_same_v<T, TextCmd>);
                return "TEXT " + print_mls(c.content);
            }
        },
        cmd.form);
}

inline std::string print_document(const Document& doc) {
    std::string out = "DOCUMENT " + doc.name;
    for (const auto& imp : doc.imports) out += " IMPORTS " + imp.name;
    out += "\n\n";
    for (const auto& cmd : doc.commands) {
        out += print_command(cmd);
        out += "\n";
    }
    return out;
}

}  // namespace assurkit::dsl
