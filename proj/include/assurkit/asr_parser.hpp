// asr_parser.hpp - commands and documents of the assurance DSL
//
// Grammar (one command per construct, leading keyword, UTF-8, `#` comments):
//
//   document   = "DOCUMENT" ident {"IMPORTS" ident} {command}
//   command    = claim | rel | artifact | artrel | artref | expr | oblig | text
//   claim      = "CLAIM" gid ["DECL" decl] "CONTENT" string
//   decl       = "asserted"|"axiomatic"|"assumed"|"defeated"|"needs_support"
//   rel        = relkw gid ["COUNTER"] "SOURCE" gid+ "TARGET" gid+
//   relkw      = "ASSERTED_INFERENCE"|"ASSERTED_CONTEXT"|"ASSERTED_EVIDENCE"
//              | "ASSERTED_ARTIFACT_SUPPORT"
//   artifact   = "ARTIFACT" gid ["KIND" artkind] "VERSION" string "DATE" string
//                "CONTENT" string
//   artkind    = "artifact"|"activity"|"participant"|"resource"|"technique"
//   artrel     = "ARTIFACT_REL" gid "SOURCE" gid+ "TARGET" gid+ "CONTENT" string
//   artref     = "ARTIFACT_REFERENCE" gid "REFS" gid+ ["CONTENT" string]
//   expr       = "EXPRESSION" gid "LANG" string "BODY" string
//   oblig      = "OBLIGATION" gid "SPEC" string
//   text       = "TEXT" string
//
// String content is a MultiLangString: plain text mixed with antiquotations
// `@{Kind gid}` and formal phrases `@{formal lang: body}`.
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <variant>

#include "assurkit/asr_lexer.hpp"
#include "assurkit/sacm_model.hpp"

namespace assurkit::dsl {

using sacm::ArtifactKind;
using sacm::AssertionDeclaration;
using sacm::EntityKind;
using sacm::Gid;
using sacm::GidRef;
using sacm::MultiLangString;
using sacm::RelKind;

struct ClaimCmd {
    Gid gid;
    AssertionDeclaration declaration = AssertionDeclaration::Asserted;
    MultiLangString content;
    Span gid_span;
};

struct RelCmd {
    RelKind kind = RelKind::Inference;
    Gid gid;
    bool is_counter = false;
    std::vector<GidRef> source;
    std::vector<GidRef> target;
    Span gid_span;
};

struct ArtifactCmd {
    Gid gid;
    ArtifactKind kind = ArtifactKind::Artifact;
    std::string version;
    std::string date;
    MultiLangString content;
    Span gid_span;
    Span date_span;
};

struct ArtifactRelCmd {
    Gid gid;
    std::vector<GidRef> source;
    std::vector<GidRef> target;
    MultiLangString content;
    Span gid_span;
};

struct ArtifactRefCmd {
    Gid gid;
    std::vector<GidRef> refs;
    MultiLangString content;
    Span gid_span;
};

struct ExpressionCmd {
    Gid gid;
    std::string lang;
    std::string body;
    Span gid_span;
};

struct ObligationCmd {
    Gid gid;
    std::string spec;
    std::vector<std::pair<int, int>> spec_pos;  // file position per spec character
    Span gid_span;
    Span spec_span;
};

struct TextCmd {
    MultiLangString content;
};

struct ImportCmd {
    std::string name;
    Span span;
};

using CommandForm = std::variant<ClaimCmd, RelCmd, ArtifactCmd, ArtifactRelCmd, ArtifactRefCmd,
                                 ExpressionCmd, ObligationCmd, TextCmd>;

struct Command {
    Span span;
    CommandForm form;
};

struct Document {
    std::string file;
    std::string name;
    Span name_span;
    std::vector<ImportCmd> imports;
    std::vector<Command> commands;  // source order
};

struct ParseResult {
    Document document;  // every command that parsed, even when errors follow
    std::vector<Diagnostic> diagnostics;
};

// ---------------------------------------------------------------------------
// MultiLangString parsing
// ---------------------------------------------------------------------------

struct MlsResult {
    std::optional<MultiLangString> mls;
    std::vector<Diagnostic> errors;
};

/// Split string content into text, `@{Kind gid}` references, and
/// `@{formal lang: body}` phrases. Positions come from the string token's
/// character map, so fragment spans point into the real file.
inline MlsResult parse_multilang(const Token& str) {
    MlsResult out;
    std::vector<sacm::Fragment> frags;
    const std::string& v = str.text;
    auto pos_at = [&](size_t i) {
        size_t k = i < str.char_pos.size() ? i : str.char_pos.size() - 1;
        return str.char_pos[k];
    };
    auto span_of = [&](size_t from, size_t to) {
        auto [sl, sc] = pos_at(from);
        auto [el, ec] = pos_at(to);
        return Span(str.span.file, sl, sc, el, ec);
    };
    auto fail = [&](size_t from, size_t to, const std::string& msg) {
        out.errors.push_back(Diagnostic::error("E003", span_of(from, to), msg));
    };

    std::string text;
    size_t text_start = 0;
    auto flush_text = [&](size_t end) {
        if (!text.empty()) {
            auto f = sacm::Fragment::text(text);
            f.span = span_of(text_start, end);
            frags.push_back(std::move(f));
            text.clear();
        }
    };

    size_t i = 0;
    while (i < v.size()) {
        if (v[i] == '@' && i + 1 < v.size() && v[i + 1] == '{') {
            size_t open = i;
            size_t close = v.find('}', i + 2);
            if (close == std::string::npos) {
                fail(open, v.size(), "unclosed antiquotation");
                return out;
            }
            flush_text(open);
            std::string inner = v.substr(i + 2, close - (i + 2));
            // formal phrase: @{formal lang: body}
            if (inner.rfind("formal", 0) == 0 &&
                (inner.size() == 6 || inner[6] == ' ' || inner[6] == '\t')) {
                size_t colon = inner.find(':');
                if (colon == std::string::npos) {
                    fail(open, close + 1, "formal phrase needs `lang: body`");
                    return out;
                }
                std::string lang = inner.substr(6, colon - 6);
                // trim
                while (!lang.empty() && (lang.front() == ' ' || lang.front() == '\t'))
                    lang.erase(lang.begin());
                while (!lang.empty() && (lang.back() == ' ' || lang.back() == '\t'))
                    lang.pop_back();
                std::string body = inner.substr(colon + 1);
                if (!body.empty() && body.front() == ' ') body.erase(body.begin());
                if (lang.empty()) {
                    fail(open, close + 1, "formal phrase needs a language tag");
                    return out;
                }
                auto f = sacm::Fragment::formal(lang, body);
                f.span = span_of(open, close + 1);
                frags.push_back(std::move(f));
            } else {
                size_t sp = inner.find(' ');
                if (sp == std::string::npos) {
                    fail(open, close + 1, "antiquotation needs `Kind gid`");
                    return out;
                }
                std::string kind_text = inner.substr(0, sp);
                std::string gid_text = inner.substr(sp + 1);
                while (!gid_text.empty() && gid_text.front() == ' ') gid_text.erase(gid_text.begin());
                while (!gid_text.empty() && gid_text.back() == ' ') gid_text.pop_back();
                auto kind = sacm::kind_of_name(kind_text);
                if (!kind) {
                    fail(open, close + 1, "unknown entity kind `" + kind_text + "`");
                    return out;
                }
                if (!Gid::valid(gid_text)) {
                    fail(open, close + 1, "malformed identifier `" + gid_text + "`");
                    return out;
                }
                auto f = sacm::Fragment::ref(*kind, Gid::parse(gid_text));
                f.span = span_of(open, close + 1);
                frags.push_back(std::move(f));
            }
            i = close + 1;
            text_start = i;
            continue;
        }
        if (text.empty()) text_start = i;
        text.push_back(v[i]);
        ++i;
    }
    flush_text(v.size());
    if (frags.empty()) {
        auto f = sacm::Fragment::text("");
        f.span = str.span;
        frags.push_back(std::move(f));
    }
    out.mls = MultiLangString::of(std::move(frags));
    return out;
}

// ---------------------------------------------------------------------------
// Document parsing with per-command error recovery
// ---------------------------------------------------------------------------

namespace parse_detail {

class Parser {
public:
    Parser(const std::string& source, const std::string& file) : file_(file) {
        auto lexed = tokenize(source, file);
        toks_ = std::move(lexed.tokens);
        diags_ = std::move(lexed.errors);
    }

    ParseResult run() {
        ParseResult out;
        out.document.file = file_;
        out.document.name = stem(file_);

        if (peek().kind != Token::Kind::End) {
            if (is_kw("DOCUMENT")) {
                next();
                if (peek().kind == Token::Kind::Ident) {
                    out.document.name = peek().text;
                    out.document.name_span = peek().span;
                    next();
                } else {
                    error(peek().span, "expected a document name");
                    recover();
                }
                while (is_kw("IMPORTS")) {
                    next();
                    if (peek().kind == Token::Kind::Ident) {
                        out.document.imports.push_back(ImportCmd{peek().text, peek().span});
                        next();
                    } else {
                        error(peek().span, "expected a document name after IMPORTS");
                        recover();
                        break;
                    }
                }
            } else {
                error(peek().span, "a document starts with DOCUMENT <name>");
            }
        }

        while (peek().kind != Token::Kind::End) {
            auto cmd = parse_command();
            if (cmd) out.document.commands.push_back(std::move(*cmd));
        }
        out.diagnostics = std::move(diags_);
        return out;
    }

private:
    std::string file_;
    std::vector<Token> toks_;
    std::vector<Diagnostic> diags_;
    size_t pos_ = 0;

    static std::string stem(const std::string& path) {
        size_t slash = path.find_last_of("/\\");
        std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
        size_t dot = base.find_last_of('.');
        return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
    }

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool is_kw(const char* k) const {
        return peek().kind == Token::Kind::Keyword && peek().text == k;
    }
    bool accept_kw(const char* k) {
        if (!is_kw(k)) return false;
        next();
        return true;
    }

    void error(const Span& span, const std::string& msg) {
        diags_.push_back(Diagnostic::error("E003", span, msg));
    }

    /// Skip to the next top-level keyword so one malformed command does not
    /// take the rest of the file with it.
    void recover() {
        while (peek().kind != Token::Kind::End &&
               !(peek().kind == Token::Kind::Keyword && command_keywords().count(peek().text)))
            next();
    }

    std::optional<Gid> expect_gid(const char* what) {
        if (peek().kind == Token::Kind::Ident && Gid::valid(peek().text))
            return Gid::parse(next().text);
        error(peek().span, std::string("expected ") + what);
        return std::nullopt;
    }

    std::optional<Token> expect_string(const char* what) {
        if (peek().kind == Token::Kind::String) return next();
        error(peek().span, std::string("expected ") + what);
        return std::nullopt;
    }

    bool expect_kw(const char* k) {
        if (accept_kw(k)) return true;
        error(peek().span, std::string("expected ") + k);
        return false;
    }

    std::optional<MultiLangString> expect_content(const char* what) {
        auto str = expect_string(what);
        if (!str) return std::nullopt;
        auto mls = parse_multilang(*str);
        for (auto& d : mls.errors) diags_.push_back(std::move(d));
        if (!mls.mls) return std::nullopt;
        return std::move(*mls.mls);
    }

    /// One or more gids; stops at the next keyword.
    std::optional<std::vector<GidRef>> gid_list(const char* after) {
        std::vector<GidRef> out;
        while (peek().kind == Token::Kind::Ident) {
            if (!Gid::valid(peek().text)) {
                error(peek().span, "malformed identifier `" + peek().text + "`");
                return std::nullopt;
            }
            out.push_back(GidRef{Gid::parse(peek().text), peek().span});
            next();
        }
        if (out.empty()) {
            error(peek().span, std::string("expected at least one gid after ") + after);
            return std::nullopt;
        }
        return out;
    }

    std::optional<Command> parse_command() {
        const Token& head = peek();
        Span start = head.span;
        auto done = [&](CommandForm form) {
            Span span = start;
            span.end_line = toks_[pos_ - 1].span.end_line;
            span.end_col = toks_[pos_ - 1].span.end_col;
            return Command{span, std::move(form)};
        };
        auto bail = [&]() -> std::optional<Command> {
            recover();
            return std::nullopt;
        };

        if (accept_kw("CLAIM")) {
            Span gid_span = peek().span;
            auto gid = expect_gid("a claim gid");
            if (!gid) return bail();
            AssertionDeclaration decl = AssertionDeclaration::Asserted;
            if (accept_kw("DECL")) {
                if (peek().kind != Token::Kind::Ident) {
                    error(peek().span, "expected a declaration after DECL");
                    return bail();
                }
                auto d = sacm::declaration_of(peek().text);
                if (!d) {
                    error(peek().span, "unknown declaration `" + peek().text + "`");
                    return bail();
                }
                decl = *d;
                next();
            }
            if (!expect_kw("CONTENT")) return bail();
            auto content = expect_content("the claim content string");
            if (!content) return bail();
            return done(ClaimCmd{*gid, decl, std::move(*content), gid_span});
        }

        for (auto [kw, kind] : {std::pair{"ASSERTED_INFERENCE", RelKind::Inference},
                                std::pair{"ASSERTED_CONTEXT", RelKind::Context},
                                std::pair{"ASSERTED_EVIDENCE", RelKind::Evidence},
                                std::pair{"ASSERTED_ARTIFACT_SUPPORT", RelKind::ArtifactSupport}}) {
            if (!accept_kw(kw)) continue;
            Span gid_span = peek().span;
            auto gid = expect_gid("a relationship gid");
            if (!gid) return bail();
            bool counter = accept_kw("COUNTER");
            if (!expect_kw("SOURCE")) return bail();
            auto source = gid_list("SOURCE");
            if (!source) return bail();
            if (!expect_kw("TARGET")) return bail();
            auto target = gid_list("TARGET");
            if (!target) return bail();
            return done(RelCmd{kind, *gid, counter, std::move(*source), std::move(*target),
                               gid_span});
        }

        if (accept_kw("ARTIFACT")) {
            Span gid_span = peek().span;
            auto gid = expect_gid("an artifact gid");
            if (!gid) return bail();
            ArtifactKind kind = ArtifactKind::Artifact;
            if (accept_kw("KIND")) {
                if (peek().kind != Token::Kind::Ident) {
                    error(peek().span, "expected an artifact kind after KIND");
                    return bail();
                }
                auto k = sacm::artifact_kind_of(peek().text);
                if (!k) {
                    error(peek().span, "unknown artifact kind `" + peek().text + "`");
                    return bail();
                }
                kind = *k;
                next();
            }
            if (!expect_kw("VERSION")) return bail();
            auto version = expect_string("a version string");
            if (!version) return bail();
            if (!expect_kw("DATE")) return bail();
            auto date = expect_string("a date string");
            if (!date) return bail();
            if (!expect_kw("CONTENT")) return bail();
            auto content = expect_content("the artifact content string");
            if (!content) return bail();
            return done(ArtifactCmd{*gid, kind, version->text, date->text, std::move(*content),
                                    gid_span, date->span});
        }

        if (accept_kw("ARTIFACT_REL")) {
            Span gid_span = peek().span;
            auto gid = expect_gid("an artifact relationship gid");
            if (!gid) return bail();
            if (!expect_kw("SOURCE")) return bail();
            auto source = gid_list("SOURCE");
            if (!source) return bail();
            if (!expect_kw("TARGET")) return bail();
            auto target = gid_list("TARGET");
            if (!target) return bail();
            if (!expect_kw("CONTENT")) return bail();
            auto content = expect_content("the relationship content string");
            if (!content) return bail();
            return done(ArtifactRelCmd{*gid, std::move(*source), std::move(*target),
                                       std::move(*content), gid_span});
        }

        if (accept_kw("ARTIFACT_REFERENCE")) {
            Span gid_span = peek().span;
            auto gid = expect_gid("an artifact reference gid");
            if (!gid) return bail();
            if (!expect_kw("REFS")) return bail();
            auto refs = gid_list("REFS");
            if (!refs) return bail();
            MultiLangString content = MultiLangString::text("");
            if (accept_kw("CONTENT")) {
                auto c = expect_content("the reference content string");
                if (!c) return bail();
                content = std::move(*c);
            }
            return done(ArtifactRefCmd{*gid, std::move(*refs), std::move(content), gid_span});
        }

        if (accept_kw("EXPRESSION")) {
            Span gid_span = peek().span;
            auto gid = expect_gid("an expression gid");
            if (!gid) return bail();
            if (!expect_kw("LANG")) return bail();
            auto lang = expect_string("a language tag");
            if (!lang) return bail();
            if (!expect_kw("BODY")) return bail();
            auto body = expect_string("the expression body");
            if (!body) return bail();
            if (body->text.empty()) {
                error(body->span, "expression body must be non-empty");
                return bail();
            }
            return done(ExpressionCmd{*gid, lang->text, body->text, gid_span});
        }

        if (accept_kw("OBLIGATION")) {
            Span gid_span = peek().span;
            auto gid = expect_gid("an obligation gid");
            if (!gid) return bail();
            if (!expect_kw("SPEC")) return bail();
            auto spec = expect_string("the obligation specification string");
            if (!spec) return bail();
            return done(ObligationCmd{*gid, spec->text, spec->char_pos, gid_span, spec->span});
        }

        if (accept_kw("TEXT")) {
            auto content = expect_content("the text content string");
            if (!content) return bail();
            return done(TextCmd{std::move(*content)});
        }

        error(head.span, "expected a command, got `" + head.text + "`");
        next();
        return bail();
    }
};

}  // namespace parse_detail

/// Parse one document. The result always contains a document holding every
/// command that parsed; errors are reported alongside, positioned, several
/// per run thanks to keyword-anchored recovery.
inline ParseResult parse_document(const std::string& source, const std::string& file) {
    return parse_detail::Parser(source, file).run();
}

}  // namespace assurkit::dsl
