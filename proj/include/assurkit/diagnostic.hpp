// diagnostic.hpp - positioned errors and warnings, rendering and ordering
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "assurkit/source_span.hpp"

namespace assurkit {

enum class Severity { Error, Warning };

// Diagnostic codes. Errors block a clean verdict, warnings do not.
//
//   E000 lexical error                 E012 reference to an invalid entity
//   E001 duplicate global identifier   E020 support cycle
//   E002 import cycle                  E021 evidence source has wrong shape
//   E003 parse error                   E022 context source has wrong shape
//   E004 unknown import                E023 reasoning link has wrong shape
//   E005 invalid field value           E030 obligation failed (counterexample)
//   E006 invalid relationship          E031 obligation spec does not parse/type
//   E010 dangling or mistyped gid      E032 model definition error (.gcl)
//   E011 bad antiquotation             E033 state space too large
//   W001 claim needs support           W002 claim defeated
struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    Span span;
    std::string message;
    std::optional<std::string> subject;  // gid of the entity at fault, when one exists

    static Diagnostic error(std::string code, Span span, std::string message,
                            std::optional<std::string> subject = std::nullopt) {
        return Diagnostic{Severity::Error, std::move(code), std::move(span), std::move(message),
                          std::move(subject)};
    }
    static Diagnostic warning(std::string code, Span span, std::string message,
                              std::optional<std::string> subject = std::nullopt) {
        return Diagnostic{Severity::Warning, std::move(code), std::move(span), std::move(message),
                          std::move(subject)};
    }

    /// `file:line:col: severity[code]: message`
    std::string render() const {
        std::string sev = severity == Severity::Error ? "error" : "warning";
        return span.to_string() + ": " + sev + "[" + code + "]: " + message;
    }

    friend bool operator==(const Diagnostic& a, const Diagnostic& b) {
        return a.severity == b.severity && a.code == b.code && a.span == b.span &&
               a.message == b.message && a.subject == b.subject;
    }
};

/// Deterministic output order: by (file, span, code, message).
inline void sort_diagnostics(std::vector<Diagnostic>& diags) {
    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return std::tie(a.span, a.code, a.message) < std::tie(b.span, b.code, b.message);
    });
}

inline bool has_errors(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

inline std::string render_all(const std::vector<Diagnostic>& diags) {
    std::string out;
    for (const auto& d : diags) {
        out += d.render();
        out += '\n';
    }
    return out;
}

}  // namespace assurkit
