// text.hpp - concrete syntax for state spaces, programs, and obligations
//
// Model files (.gcl) declare variables and name predicates and programs:
//
//   VAR tis.status : {quiescent, gotUserToken}
//   VAR rw.mon.now : nat(3)
//   PRED Ready = tis.status = quiescent
//   PROG Step  = Ready -> tis.status := gotUserToken
//
// Obligation specifications reference those names:
//
//   hoare {Ready} Step {true}
//   wp {Ready} Step {tis.status = gotUserToken} implies {Ready}
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <utility>

#include "assurkit/diagnostic.hpp"
#include "assurkit/gcl/verify.hpp"
#include "assurkit/hash.hpp"
#include "assurkit/source_span.hpp"

namespace assurkit::gcl {

/// Parse failure inside model or obligation text, with the file position.
class GclTextError : public std::runtime_error {
public:
    GclTextError(std::string msg, Span span)
        : std::runtime_error(std::move(msg)), span(std::move(span)) {}
    Span span;
};

/// Text plus a file position per character, so errors point into the real
/// source even when the text arrived through an escaped string literal.
struct TextSource {
    std::string text;
    std::string file;
    std::vector<std::pair<int, int>> pos;  // (line, col) per character

    static TextSource from_file_content(std::string content, std::string file) {
        TextSource src;
        src.pos.reserve(content.size() + 1);
        Cursor c;
        for (char ch : content) {
            src.pos.emplace_back(c.line, c.col);
            c.advance(ch);
        }
        src.pos.emplace_back(c.line, c.col);
        src.text = std::move(content);
        src.file = std::move(file);
        return src;
    }

    Span span_at(size_t from, size_t to) const {
        auto clamp = [&](size_t i) { return i < pos.size() ? i : pos.size() - 1; };
        auto [sl, sc] = pos[clamp(from)];
        auto [el, ec] = pos[clamp(to)];
        return Span(file, sl, sc, el, ec);
    }
};

/// A named definition from a model file.
struct GclDef {
    enum class Kind { PredDef, ProgDef };
    Kind kind;
    std::string name;
    PredPtr pred;
    ProgPtr prog;
    std::vector<std::string> refs;  // other definitions this one mentions
    std::string printed;            // canonical form, used for fingerprints
    Span span;
};

/// The registered model: one state space and the named definitions from all
/// loaded model files. Definitions must precede their uses.
class GclRegistry {
public:
    GclRegistry() : space_(std::make_shared<StateSpace>()) {}

    StateSpace& space() { return *space_; }
    const StateSpace& space() const { return *space_; }
    SpacePtr space_ptr() const { return space_; }

    bool has_def(const std::string& name) const { return by_name_.count(name) != 0; }

    const GclDef* find(const std::string& name) const {
        auto it = by_name_.find(name);
        return it == by_name_.end() ? nullptr : &defs_[it->second];
    }

    void add_def(GclDef def) {
        if (by_name_.count(def.name))
            throw GclTextError("duplicate definition of `" + def.name + "`", def.span);
        if (space_->index_of(def.name) >= 0)
            throw GclTextError("`" + def.name + "` already names a variable", def.span);
        by_name_[def.name] = defs_.size();
        defs_.push_back(std::move(def));
    }

    const std::vector<GclDef>& defs() const { return defs_; }

    /// Transitive closure of definition references, the requesting names
    /// included, in deterministic order.
    std::vector<std::string> transitive_refs(const std::vector<std::string>& roots) const {
        std::set<std::string> seen;
        std::vector<std::string> order;
        std::function<void(const std::string&)> go = [&](const std::string& n) {
            if (!seen.insert(n).second) return;
            order.push_back(n);
            if (const GclDef* d = find(n))
                for (const auto& r : d->refs) go(r);
        };
        for (const auto& r : roots) go(r);
        std::sort(order.begin(), order.end());
        return order;
    }

    std::string space_printed() const {
        std::string out;
        for (const auto& v : space_->variables())
            out += v.path + " : " + v.domain.describe() + "\n";
        return out;
    }

private:
    std::shared_ptr<StateSpace> space_;
    std::vector<GclDef> defs_;
    std::map<std::string, size_t> by_name_;
};

struct ParsedObligation {
    Obligation obligation;
    std::vector<std::string> refs;  // definitions the spec text mentions
};

// ---------------------------------------------------------------------------
// Lexing
// ---------------------------------------------------------------------------

namespace text_detail {

struct Token {
    enum class Kind {
        Ident,    // possibly dotted; `primed` when followed by '
        Number,
        Sym,      // one of the operator/punctuation spellings
        End,
    };
    Kind kind = Kind::End;
    std::string text;
    bool primed = false;
    size_t from = 0, to = 0;  // character range in the source
};

inline bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

inline std::vector<Token> lex(const TextSource& src) {
    std::vector<Token> out;
    const std::string& t = src.text;
    size_t i = 0;
    auto sym = [&](const char* s, size_t len) {
        out.push_back({Token::Kind::Sym, std::string(s, len), false, i, i + len});
        i += len;
    };
    while (i < t.size()) {
        char c = t[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < t.size() && t[i] != '\n') ++i;
            continue;
        }
        if (ident_start(c)) {
            size_t from = i;
            while (i < t.size() && ident_char(t[i])) ++i;
            // dotted path segments
            while (i + 1 < t.size() && t[i] == '.' && ident_start(t[i + 1])) {
                ++i;
                while (i < t.size() && ident_char(t[i])) ++i;
            }
            Token tok{Token::Kind::Ident, t.substr(from, i - from), false, from, i};
            if (i < t.size() && t[i] == '\'') {
                tok.primed = true;
                tok.to = ++i;
            }
            out.push_back(std::move(tok));
            continue;
        }
        if (c >= '0' && c <= '9') {
            size_t from = i;
            while (i < t.size() && t[i] >= '0' && t[i] <= '9') ++i;
            out.push_back({Token::Kind::Number, t.substr(from, i - from), false, from, i});
            continue;
        }
        if (t.compare(i, 3, "|~|") == 0) { sym("|~|", 3); continue; }
        if (t.compare(i, 2, ":=") == 0) { sym(":=", 2); continue; }
        if (t.compare(i, 2, "->") == 0) { sym("->", 2); continue; }
        if (t.compare(i, 2, "=>") == 0) { sym("=>", 2); continue; }
        if (t.compare(i, 2, "<=") == 0) { sym("<=", 2); continue; }
        if (t.compare(i, 2, "/\\") == 0) { sym("/\\", 2); continue; }
        if (t.compare(i, 2, "\\/") == 0) { sym("\\/", 2); continue; }
        if (std::string("{}(),:;=~[]").find(c) != std::string::npos) {
            char buf[2] = {c, 0};
            sym(buf, 1);
            continue;
        }
        throw GclTextError(std::string("unexpected character `") + c + "`",
                           src.span_at(i, i + 1));
    }
    out.push_back({Token::Kind::End, "", false, t.size(), t.size()});
    return out;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser
// ---------------------------------------------------------------------------

class Parser {
public:
    Parser(const TextSource& src, const GclRegistry& reg, GclRegistry* mut)
        : src_(src), reg_(reg), mut_(mut), toks_(lex(src)) {}

    /// Model file: a sequence of VAR / PRED / PROG declarations.
    void parse_model_file() {
        while (!at_end()) {
            const Token& tok = peek();
            if (is_word("VAR")) {
                next();
                parse_var_decl();
            } else if (is_word("PRED")) {
                next();
                parse_def(GclDef::Kind::PredDef);
            } else if (is_word("PROG")) {
                next();
                parse_def(GclDef::Kind::ProgDef);
            } else {
                fail("expected VAR, PRED, or PROG", tok);
            }
        }
    }

    ParsedObligation parse_obligation(const std::string& gid) {
        ParsedObligation out;
        out.obligation.gid = gid;
        out.obligation.space = reg_.space_ptr();
        if (accept_word("hoare")) {
            out.obligation.form = Obligation::Form::Hoare;
            out.obligation.pre = braced_pred();
            out.obligation.prog = parse_prog();
            out.obligation.post = braced_pred();
        } else if (accept_word("wp")) {
            out.obligation.form = Obligation::Form::WpImplies;
            out.obligation.pre = braced_pred();
            out.obligation.prog = parse_prog();
            out.obligation.post = braced_pred();
            expect_word("implies");
            out.obligation.conclusion = braced_pred();
        } else {
            fail("expected `hoare` or `wp`", peek());
        }
        if (!at_end()) fail("trailing input after obligation", peek());
        out.refs.assign(refs_.begin(), refs_.end());
        return out;
    }

private:
    const TextSource& src_;
    const GclRegistry& reg_;
    GclRegistry* mut_;  // null when parsing obligation text
    std::vector<Token> toks_;
    size_t pos_ = 0;
    std::set<std::string> refs_;
    bool allow_primed_ = false;

    // A term is either a resolved expression or a bare name/number whose
    // domain the surrounding comparison determines.
    struct PendingExpr {
        ExprPtr expr;
        std::string name;  // unresolved label
        bool number = false;
        int num = 0;
    };

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool at_end() const { return peek().kind == Token::Kind::End; }

    bool is_word(const char* w) const {
        return peek().kind == Token::Kind::Ident && !peek().primed && peek().text == w;
    }
    bool is_sym(const char* s) const {
        return peek().kind == Token::Kind::Sym && peek().text == s;
    }
    bool accept_word(const char* w) {
        if (!is_word(w)) return false;
        next();
        return true;
    }
    bool accept_sym(const char* s) {
        if (!is_sym(s)) return false;
        next();
        return true;
    }
    void expect_word(const char* w) {
        if (!accept_word(w)) fail(std::string("expected `") + w + "`", peek());
    }
    void expect_sym(const char* s) {
        if (!accept_sym(s)) fail(std::string("expected `") + s + "`", peek());
    }

    [[noreturn]] void fail(const std::string& msg, const Token& at) const {
        throw GclTextError(msg, src_.span_at(at.from, at.to));
    }

    Span token_span(const Token& t) const { return src_.span_at(t.from, t.to); }

    // -- declarations -------------------------------------------------------

    void parse_var_decl() {
        const Token& name = next();
        if (name.kind != Token::Kind::Ident || name.primed) fail("expected a variable path", name);
        expect_sym(":");
        Domain d = parse_domain();
        if (!mut_) fail("variable declarations belong in model files", name);
        if (reg_.has_def(name.text)) fail("`" + name.text + "` already names a definition", name);
        try {
            mut_->space().add(name.text, std::move(d));
        } catch (const TypeError& e) {
            fail(e.what(), name);
        }
    }

    Domain parse_domain() {
        const Token& tok = peek();
        try {
            if (accept_word("bool")) return Domain::boolean();
            if (accept_word("nat")) {
                expect_sym("(");
                const Token& n = next();
                if (n.kind != Token::Kind::Number) fail("expected a bound", n);
                expect_sym(")");
                return Domain::bounded_nat(std::stoi(n.text));
            }
            if (accept_word("map")) {
                expect_sym("(");
                Domain key = parse_domain();
                expect_sym("->");
                Domain value = parse_domain();
                expect_sym(")");
                return Domain::finite_map(std::move(key), std::move(value));
            }
            if (accept_sym("{")) {
                std::vector<std::string> labels;
                do {
                    const Token& l = next();
                    if (l.kind != Token::Kind::Ident || l.primed) fail("expected a label", l);
                    labels.push_back(l.text);
                } while (accept_sym(","));
                expect_sym("}");
                return Domain::enumeration(std::move(labels));
            }
        } catch (const TypeError& e) {
            fail(e.what(), tok);
        }
        fail("expected a domain", tok);
    }

    void parse_def(GclDef::Kind kind) {
        const Token& name = next();
        if (name.kind != Token::Kind::Ident || name.primed || name.text.find('.') != std::string::npos)
            fail("expected a definition name", name);
        expect_sym("=");
        refs_.clear();
        GclDef def;
        def.kind = kind;
        def.name = name.text;
        def.span = token_span(name);
        if (kind == GclDef::Kind::PredDef) {
            def.pred = parse_pred();
            def.printed = print_pred(reg_.space(), *def.pred);
        } else {
            def.prog = parse_prog();
            def.printed = print_prog(reg_.space(), *def.prog);
        }
        def.refs.assign(refs_.begin(), refs_.end());
        if (!mut_) fail("definitions belong in model files", name);
        mut_->add_def(std::move(def));
    }

    // -- programs -----------------------------------------------------------

    ProgPtr parse_prog() {  // choice level
        ProgPtr acc = parse_guarded();
        while (accept_sym("|~|")) acc = choice(acc, parse_guarded());
        return acc;
    }

    ProgPtr parse_guarded() {
        // try `pred -> seq`, fall back to a bare sequence
        size_t save = pos_;
        try {
            PredPtr g = parse_pred();
            if (accept_sym("->")) return guard(std::move(g), parse_seq());
        } catch (const GclTextError&) {
        } catch (const TypeError&) {
        }
        pos_ = save;
        return parse_seq();
    }

    ProgPtr parse_seq() {
        ProgPtr acc = parse_prog_atom();
        while (accept_sym(";")) acc = seq(acc, parse_prog_atom());
        return acc;
    }

    ProgPtr parse_prog_atom() {
        const Token& tok = peek();
        if (accept_word("skip")) return skip();
        if (accept_word("abort")) return abort_prog();
        if (accept_word("rel")) {
            expect_sym("[");
            bool saved = allow_primed_;
            allow_primed_ = true;
            PredPtr r = parse_pred();
            allow_primed_ = saved;
            expect_sym("]");
            return rel_spec(std::move(r));
        }
        if (accept_word("frame")) {
            const Token& ns = next();
            if (ns.kind != Token::Kind::Ident || ns.primed) fail("expected a namespace", ns);
            expect_word("in");
            ProgPtr body = parse_prog_atom();
            try {
                return frame(reg_.space(), ns.text, std::move(body));
            } catch (const TypeError& e) {
                fail(e.what(), ns);
            }
        }
        if (accept_sym("(")) {
            ProgPtr p = parse_prog();
            expect_sym(")");
            return p;
        }
        if (tok.kind == Token::Kind::Ident && !tok.primed) {
            // assignment target or a named program
            if (toks_[pos_ + 1].kind == Token::Kind::Sym && toks_[pos_ + 1].text == ":=") {
                next();
                next();
                int vi = reg_.space().index_of(tok.text);
                if (vi < 0) fail("unknown variable `" + tok.text + "`", tok);
                PendingExpr pe = parse_term();
                ExprPtr rhs = resolve(pe, &reg_.space().var(vi).domain, tok);
                try {
                    return assign(reg_.space(), tok.text, std::move(rhs));
                } catch (const TypeError& e) {
                    fail(e.what(), tok);
                }
            }
            if (const GclDef* d = reg_.find(tok.text)) {
                if (d->kind != GclDef::Kind::ProgDef)
                    fail("`" + tok.text + "` is a predicate, not a program", tok);
                next();
                refs_.insert(tok.text);
                return d->prog;
            }
            fail("unknown program `" + tok.text + "`", tok);
        }
        fail("expected a program", tok);
    }

    // -- predicates ---------------------------------------------------------

    PredPtr braced_pred() {
        expect_sym("{");
        PredPtr p = parse_pred();
        expect_sym("}");
        return p;
    }

    PredPtr parse_pred() {  // implication level, right associative
        PredPtr a = parse_disj();
        if (accept_sym("=>")) return implies(std::move(a), parse_pred());
        return a;
    }

    PredPtr parse_disj() {
        PredPtr acc = parse_conj();
        while (accept_sym("\\/")) acc = or_(acc, parse_conj());
        return acc;
    }

    PredPtr parse_conj() {
        PredPtr acc = parse_neg();
        while (accept_sym("/\\")) acc = and_(acc, parse_neg());
        return acc;
    }

    PredPtr parse_neg() {
        if (accept_sym("~")) return not_(parse_neg());
        return parse_pred_atom();
    }

    PredPtr parse_pred_atom() {
        const Token& tok = peek();
        if (accept_word("true")) {
            // `true` standing alone is the predicate; in comparisons it is a
            // literal, which parse_term handles
            if (is_sym("=")) {
                --pos_;
            } else {
                return pred_true();
            }
        }
        if (accept_word("false")) {
            if (is_sym("=")) {
                --pos_;
            } else {
                return pred_false();
            }
        }
        if (accept_sym("(")) {
            PredPtr p = parse_pred();
            expect_sym(")");
            return p;
        }
        if (tok.kind == Token::Kind::Ident && !tok.primed) {
            if (const GclDef* d = reg_.find(tok.text)) {
                if (d->kind != GclDef::Kind::PredDef)
                    fail("`" + tok.text + "` is a program, not a predicate", tok);
                next();
                refs_.insert(tok.text);
                return d->pred;
            }
        }
        return parse_comparison();
    }

    PredPtr parse_comparison() {
        const Token& tok = peek();
        PendingExpr lhs = parse_term();
        if (accept_sym("=")) {
            PendingExpr rhs = parse_term();
            return finish_eq(tok, lhs, rhs);
        }
        if (accept_sym("<=")) {
            PendingExpr rhs = parse_term();
            ExprPtr l = resolve(lhs, nullptr, tok);
            ExprPtr r = resolve(rhs, &l->domain, tok);
            try {
                return le(std::move(l), std::move(r));
            } catch (const TypeError& e) {
                fail(e.what(), tok);
            }
        }
        if (accept_word("in")) {
            ExprPtr l = resolve(lhs, nullptr, tok);
            expect_sym("{");
            std::vector<int> members;
            do {
                const Token& m = next();
                if (m.kind != Token::Kind::Ident && m.kind != Token::Kind::Number)
                    fail("expected a value", m);
                auto v = l->domain.value_of(m.text);
                if (!v) fail("value `" + m.text + "` not in " + l->domain.describe(), m);
                members.push_back(*v);
            } while (accept_sym(","));
            expect_sym("}");
            try {
                return in_set(std::move(l), std::move(members));
            } catch (const TypeError& e) {
                fail(e.what(), tok);
            }
        }
        // a bare boolean variable abbreviates `v = true`
        ExprPtr l = resolve(lhs, nullptr, tok);
        if (l->domain.kind() != Domain::Kind::Bool)
            fail("expected a comparison or a boolean variable", tok);
        return eq(std::move(l), literal(Domain::boolean(), 1));
    }

    PredPtr finish_eq(const Token& at, PendingExpr& lhs, PendingExpr& rhs) {
        try {
            if (lhs.expr) {
                ExprPtr l = lhs.expr;
                ExprPtr r = resolve(rhs, &l->domain, at);
                return eq(std::move(l), std::move(r));
            }
            if (rhs.expr) {
                ExprPtr r = rhs.expr;
                ExprPtr l = resolve(lhs, &r->domain, at);
                return eq(std::move(l), std::move(r));
            }
        } catch (const TypeError& e) {
            fail(e.what(), at);
        }
        fail("cannot infer the domain of the comparison", at);
    }

    // -- expressions --------------------------------------------------------

    PendingExpr parse_term() {
        const Token& tok = peek();
        if (tok.kind == Token::Kind::Number) {
            next();
            return PendingExpr{nullptr, "", true, std::stoi(tok.text)};
        }
        if (accept_word("succ")) {
            expect_sym("(");
            PendingExpr inner = parse_term();
            ExprPtr e = resolve(inner, nullptr, tok);
            expect_sym(")");
            try {
                return PendingExpr{succ(std::move(e)), "", false, 0};
            } catch (const TypeError& e2) {
                fail(e2.what(), tok);
            }
        }
        if (accept_word("true")) return PendingExpr{literal(Domain::boolean(), 1), "", false, 0};
        if (accept_word("false")) return PendingExpr{literal(Domain::boolean(), 0), "", false, 0};
        if (tok.kind == Token::Kind::Ident) {
            next();
            int vi = reg_.space().index_of(tok.text);
            if (vi >= 0) {
                if (tok.primed && !allow_primed_)
                    fail("primed variables are only legal inside rel[...]", tok);
                ExprPtr e = var_ref(reg_.space(), tok.text, tok.primed);
                if (accept_sym("(")) {  // finite map application
                    PendingExpr key = parse_term();
                    ExprPtr k = resolve(key, e->domain.kind() == Domain::Kind::Map
                                                 ? &e->domain.key_domain()
                                                 : nullptr,
                                        tok);
                    expect_sym(")");
                    try {
                        e = map_app(std::move(e), std::move(k));
                    } catch (const TypeError& err) {
                        fail(err.what(), tok);
                    }
                }
                return PendingExpr{std::move(e), "", false, 0};
            }
            if (tok.primed) fail("unknown variable `" + tok.text + "`", tok);
            return PendingExpr{nullptr, tok.text, false, 0};  // label, resolved later
        }
        fail("expected an expression", tok);
    }

    ExprPtr resolve(PendingExpr& pe, const Domain* hint, const Token& at) {
        if (pe.expr) return pe.expr;
        if (!hint) fail(pe.number ? "cannot infer the domain of a number"
                                  : "unknown variable or label `" + pe.name + "`",
                        at);
        if (pe.number) {
            if (hint->kind() != Domain::Kind::Nat) fail("number used against " + hint->describe(), at);
            if (pe.num > hint->nat_max()) fail("number exceeds the domain bound", at);
            return literal(*hint, pe.num);
        }
        auto v = hint->value_of(pe.name);
        if (!v) fail("value `" + pe.name + "` not in " + hint->describe(), at);
        return literal(*hint, *v);
    }
};

}  // namespace text_detail

/// Load a model file's declarations into the registry. Throws GclTextError.
inline void parse_model_file(const TextSource& src, GclRegistry& reg) {
    text_detail::Parser(src, reg, &reg).parse_model_file();
}

/// Parse one obligation specification against the registered model.
inline ParsedObligation parse_obligation_spec(const TextSource& src, const GclRegistry& reg,
                                              const std::string& gid) {
    return text_detail::Parser(src, reg, nullptr).parse_obligation(gid);
}

}  // namespace assurkit::gcl
