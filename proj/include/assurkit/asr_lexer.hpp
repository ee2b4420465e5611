// asr_lexer.hpp - tokens for the assurance DSL (.asr files)
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <set>

#include "assurkit/diagnostic.hpp"
#include "assurkit/source_span.hpp"

namespace assurkit::dsl {

inline const std::set<std::string>& keywords() {
    static const std::set<std::string> kw = {
        "DOCUMENT", "IMPORTS", "CLAIM", "DECL", "CONTENT",
        "ASSERTED_INFERENCE", "ASSERTED_CONTEXT", "ASSERTED_EVIDENCE",
        "ASSERTED_ARTIFACT_SUPPORT", "COUNTER", "SOURCE", "TARGET",
        "ARTIFACT", "KIND", "VERSION", "DATE", "ARTIFACT_REL",
        "ARTIFACT_REFERENCE", "REFS", "EXPRESSION", "LANG", "BODY",
        "OBLIGATION", "SPEC", "TEXT"};
    return kw;
}

/// Keywords that may open a command; error recovery skips to the next one.
inline const std::set<std::string>& command_keywords() {
    static const std::set<std::string> kw = {
        "DOCUMENT", "CLAIM", "ASSERTED_INFERENCE", "ASSERTED_CONTEXT",
        "ASSERTED_EVIDENCE", "ASSERTED_ARTIFACT_SUPPORT", "ARTIFACT",
        "ARTIFACT_REL", "ARTIFACT_REFERENCE", "EXPRESSION", "OBLIGATION", "TEXT"};
    return kw;
}

struct Token {
    enum class Kind { Keyword, Ident, String, End };
    Kind kind = Kind::End;
    std::string text;  // keyword/identifier spelling, or the unescaped string value
    Span span;
    /// Strings only: file position of every content character plus one
    /// trailing entry, so embedded notations report exact positions.
    std::vector<std::pair<int, int>> char_pos;
};

struct LexResult {
    std::vector<Token> tokens;
    std::vector<Diagnostic> errors;
};

/// Tokenize a document. `#` starts a comment running to the end of the line.
/// Strings are double-quoted with `\"` and `\\` escapes and may span lines.
/// Lexing continues past errors so the parser can report several at once.
inline LexResult tokenize(const std::string& source, const std::string& file) {
    LexResult out;
    Cursor cur;
    size_t i = 0;
    auto is_word_start = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    };
    auto is_word_char = [&](char c) { return is_word_start(c) || (c >= '0' && c <= '9'); };

    while (i < source.size()) {
        char c = source[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            cur.advance(c);
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < source.size() && source[i] != '\n') {
                cur.advance(source[i]);
                ++i;
            }
            continue;
        }
        if (is_word_start(c)) {
            Cursor from = cur;
            size_t start = i;
            while (i < source.size() && is_word_char(source[i])) {
                cur.advance(source[i]);
                ++i;
            }
            Token t;
            t.text = source.substr(start, i - start);
            t.kind = keywords().count(t.text) ? Token::Kind::Keyword : Token::Kind::Ident;
            t.span = make_span(file, from, cur);
            out.tokens.push_back(std::move(t));
            continue;
        }
        if (c == '"') {
            Cursor from = cur;
            cur.advance(c);
            ++i;
            Token t;
            t.kind = Token::Kind::String;
            bool closed = false;
            while (i < source.size()) {
                char d = source[i];
                if (d == '"') {
                    cur.advance(d);
                    ++i;
                    closed = true;
                    break;
                }
                if (d == '\\') {
                    if (i + 1 < source.size() && (source[i + 1] == '"' || source[i + 1] == '\\')) {
                        t.char_pos.emplace_back(cur.line, cur.col);
                        t.text.push_back(source[i + 1]);
                        cur.advance(d);
                        cur.advance(source[i + 1]);
                        i += 2;
                        continue;
                    }
                    out.errors.push_back(Diagnostic::error(
                        "E000", Span(file, cur.line, cur.col, cur.line, cur.col + 2),
                        "unknown escape sequence; only \\\" and \\\\ are recognised"));
                    t.char_pos.emplace_back(cur.line, cur.col);
                    t.text.push_back(d);
                    cur.advance(d);
                    ++i;
                    continue;
                }
                t.char_pos.emplace_back(cur.line, cur.col);
                t.text.push_back(d);
                cur.advance(d);
                ++i;
            }
            t.char_pos.emplace_back(cur.line, cur.col);
            t.span = make_span(file, from, cur);
            if (!closed) {
                out.errors.push_back(
                    Diagnostic::error("E000", t.span, "unterminated string"));
            }
            out.tokens.push_back(std::move(t));
            continue;
        }
        out.errors.push_back(
            Diagnostic::error("E000", Span(file, cur.line, cur.col, cur.line, cur.col + 1),
                              std::string("illegal character `") + c + "`"));
        cur.advance(c);
        ++i;
    }
    Token end;
    end.kind = Token::Kind::End;
    end.span = Span(file, cur.line, cur.col, cur.line, cur.col);
    out.tokens.push_back(std::move(end));
    return out;
}

}  // namespace assurkit::dsl
