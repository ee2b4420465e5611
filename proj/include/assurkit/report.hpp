// report.hpp - self-contained HTML rendering of a checked argument
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "assurkit/engine.hpp"

namespace assurkit::report {

inline std::string html_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

inline std::string render_content(const sacm::MultiLangString& mls) {
    std::string out;
    for (const auto& f : mls.fragments) {
        switch (f.type) {
            case sacm::Fragment::Type::Text: out += html_escape(f.body); break;
            case sacm::Fragment::Type::Ref:
                out += "<a href=\"#" + html_escape(f.target->str()) + "\"><code>@" +
                       html_escape(sacm::kind_name(*f.ref_kind)) + " " +
                       html_escape(f.target->str()) + "</code></a>";
                break;
            case sacm::Fragment::Type::Formal:
                out += "<code class=\"formal\">" + html_escape(f.body) + "</code>";
                break;
        }
    }
    return out;
}

/// One hyperlinked page: claims with their effective status, relationships,
/// artifacts, obligation verdicts, and diagnostics. When `graph_svg` is
/// non-empty it is inlined; otherwise `dot_href` (if any) links the graph.
inline std::string html_report(const engine::CheckState& st, const std::string& graph_svg,
                               const std::string& dot_href) {
    using check::EffectiveStatus;
    std::string h;
    h += "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\">\n";
    h += "<title>assurance report</title>\n<style>\n";
    h += "body { font-family: sans-serif; margin: 2em; }\n";
    h += "table { border-collapse: collapse; margin: 1em 0; }\n";
    h += "td, th { border: 1px solid #999; padding: 0.3em 0.6em; text-align: left; }\n";
    h += ".supported { background: #e6ffe6; } .axiomatic, .assumed { background: #eef6ff; }\n";
    h += ".needs-support { background: #fff6e0; } .defeated { background: #ffe6e6; }\n";
    h += ".pass { color: #0a0; font-weight: bold; } .fail { color: #a00; font-weight: bold; }\n";
    h += "code.formal { background: #f4f4f4; padding: 0 0.2em; }\n";
    h += ".diag-error { color: #a00; } .diag-warning { color: #a60; }\n";
    h += "</style></head><body>\n<h1>Assurance report</h1>\n";

    size_t n_errors = 0, n_warnings = 0;
    for (const auto& d : st.diagnostics)
        (d.severity == Severity::Error ? n_errors : n_warnings) += 1;
    h += "<p>" + std::to_string(st.model.assets.size()) + " assets, " +
         std::to_string(st.model.artifacts.size()) + " artifacts, " +
         std::to_string(st.model.expressions.size()) + " expressions, " +
         std::to_string(st.model.obligations.size()) + " obligations &mdash; " +
         std::to_string(n_errors) + " error(s), " + std::to_string(n_warnings) +
         " warning(s)</p>\n";

    if (!graph_svg.empty()) {
        h += "<h2>Argument graph</h2>\n<div>" + graph_svg + "</div>\n";
    } else if (!dot_href.empty()) {
        h += "<p>Argument graph: <a href=\"" + html_escape(dot_href) + "\">" +
             html_escape(dot_href) + "</a></p>\n";
    }

    h += "<h2>Claims</h2>\n<table>\n<tr><th>claim</th><th>declaration</th><th>status</th>"
         "<th>content</th></tr>\n";
    for (const auto& [gid, asset] : st.model.assets) {
        if (asset.variant != sacm::ArgumentAsset::Variant::Claim) continue;
        auto it = st.status.find(gid);
        std::string status =
            it != st.status.end() ? check::status_name(it->second) : "unknown";
        h += "<tr class=\"" + status + "\" id=\"" + html_escape(gid.str()) + "\"><td>" +
             html_escape(gid.str()) + "</td><td>" +
             sacm::declaration_name(asset.declaration) + "</td><td>" + status + "</td><td>" +
             render_content(asset.content) + "</td></tr>\n";
    }
    h += "</table>\n";

    h += "<h2>Relationships</h2>\n<table>\n<tr><th>relationship</th><th>kind</th>"
         "<th>sources</th><th>targets</th></tr>\n";
    for (const auto& [gid, asset] : st.model.assets) {
        if (asset.variant != sacm::ArgumentAsset::Variant::Relationship) continue;
        auto links = [&](const std::vector<sacm::GidRef>& refs) {
            std::string out;
            for (const auto& r : refs) {
                if (!out.empty()) out += ", ";
                out += "<a href=\"#" + html_escape(r.gid.str()) + "\">" +
                       html_escape(r.gid.str()) + "</a>";
            }
            return out;
        };
        h += "<tr id=\"" + html_escape(gid.str()) + "\"><td>" + html_escape(gid.str()) +
             "</td><td>" + sacm::rel_kind_name(asset.rel_kind) +
             (asset.is_counter ? " (counter)" : "") + "</td><td>" + links(asset.source) +
             "</td><td>" + links(asset.target) + "</td></tr>\n";
    }
    h += "</table>\n";

    h += "<h2>Artifacts</h2>\n<table>\n<tr><th>artifact</th><th>kind</th><th>version</th>"
         "<th>date</th><th>content</th></tr>\n";
    for (const auto& [gid, e] : st.model.artifacts)
        h += "<tr id=\"" + html_escape(gid.str()) + "\"><td>" + html_escape(gid.str()) +
             "</td><td>" + sacm::artifact_kind_name(e.kind) + "</td><td>" +
             html_escape(e.version) + "</td><td>" + html_escape(e.date) + "</td><td>" +
             render_content(e.content) + "</td></tr>\n";
    h += "</table>\n";

    if (!st.model.expressions.empty()) {
        h += "<h2>Expressions</h2>\n<table>\n<tr><th>expression</th><th>lang</th>"
             "<th>body</th></tr>\n";
        for (const auto& [gid, e] : st.model.expressions)
            h += "<tr id=\"" + html_escape(gid.str()) + "\"><td>" + html_escape(gid.str()) +
                 "</td><td>" + html_escape(e.lang) + "</td><td>" + html_escape(e.body) +
                 "</td></tr>\n";
        h += "</table>\n";
    }

    h += "<h2>Obligations</h2>\n<table>\n<tr><th>obligation</th><th>verdict</th>"
         "<th>specification</th></tr>\n";
    for (const auto& [gid, ob] : st.model.obligations) {
        std::string verdict = "<span class=\"fail\">does not parse</span>";
        auto it = st.verdicts.find(gid);
        if (it != st.verdicts.end()) {
            if (it->second.pass) {
                verdict = "<span class=\"pass\">pass</span>";
            } else {
                verdict = "<span class=\"fail\">fail</span>";
                if (it->second.counterexample && ob.parsed)
                    verdict += "<br><code>" +
                               html_escape(check::render_state_inline(
                                   *ob.parsed->space, *it->second.counterexample)) +
                               "</code>";
            }
        }
        h += "<tr id=\"" + html_escape(gid.str()) + "\"><td>" + html_escape(gid.str()) +
             "</td><td>" + verdict + "</td><td><code>" + html_escape(ob.spec_text) +
             "</code></td></tr>\n";
    }
    h += "</table>\n";

    h += "<h2>Diagnostics</h2>\n";
    if (st.diagnostics.empty()) {
        h += "<p>clean</p>\n";
    } else {
        h += "<ul>\n";
        for (const auto& d : st.diagnostics) {
            const char* cls = d.severity == Severity::Error ? "diag-error" : "diag-warning";
            h += "<li class=\"" + std::string(cls) + "\"><code>" + html_escape(d.render()) +
                 "</code></li>\n";
        }
        h += "</ul>\n";
    }
    h += "</body></html>\n";
    return h;
}

}  // namespace assurkit::report
