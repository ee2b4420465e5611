// ast.hpp - guarded-command programs and predicates over finite state spaces
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "assurkit/gcl/state_space.hpp"

namespace assurkit::gcl {

struct Expr;
struct Pred;
struct Prog;
using ExprPtr = std::shared_ptr<const Expr>;
using PredPtr = std::shared_ptr<const Pred>;
using ProgPtr = std::shared_ptr<const Prog>;

/// Expression AST: variable reference (possibly primed, inside relational
/// predicates), literal, saturating successor on bounded naturals, or finite
/// map application.
struct Expr {
    enum class Kind { Var, Lit, Succ, MapApp };
    Kind kind;
    int var = -1;       // Var
    bool primed = false;
    int lit = 0;        // Lit: value index in `domain`
    Domain domain;      // result domain
    ExprPtr a, b;       // Succ: a; MapApp: a = map, b = key
};

/// Predicate AST. Primed variable references are only legal inside
/// relational specifications (and internally during wp expansion).
struct Pred {
    enum class Kind { True, False, Eq, In, Le, Not, And, Or, Implies };
    Kind kind;
    ExprPtr x, y;          // Eq, Le; In: x only
    std::vector<int> set;  // In: sorted member value indices
    PredPtr a, b;          // Not: a; And/Or/Implies: a, b
};

/// Program AST.
struct Prog {
    enum class Kind { Skip, Abort, Seq, Guard, Choice, Assign, Frame, RelSpec };
    Kind kind;
    PredPtr pred;    // Guard: guard; RelSpec: relation over unprimed/primed state
    ProgPtr a, b;    // Seq/Choice: a, b; Guard/Frame: a
    int var = -1;    // Assign target
    ExprPtr expr;    // Assign rhs
    std::string ns;  // Frame namespace
};

// ---------------------------------------------------------------------------
// Expression builders
// ---------------------------------------------------------------------------

inline ExprPtr var_ref(const StateSpace& space, const std::string& path, bool primed = false) {
    int idx = space.index_of(path);
    if (idx < 0) throw TypeError("unknown variable: " + path);
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Var;
    e->var = idx;
    e->primed = primed;
    e->domain = space.var(idx).domain;
    return e;
}

inline ExprPtr literal(Domain domain, int value) {
    if (value < 0 || value >= domain.size()) throw TypeError("literal outside its domain");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Lit;
    e->lit = value;
    e->domain = std::move(domain);
    return e;
}

/// Literal named by a label of the given domain.
inline ExprPtr label_lit(const Domain& domain, const std::string& name) {
    auto v = domain.value_of(name);
    if (!v) throw TypeError("value `" + name + "` not in domain " + domain.describe());
    return literal(domain, *v);
}

/// Saturating successor on a bounded natural.
inline ExprPtr succ(ExprPtr e) {
    if (e->domain.kind() != Domain::Kind::Nat) throw TypeError("succ needs a nat operand");
    auto n = std::make_shared<Expr>();
    n->kind = Expr::Kind::Succ;
    n->domain = e->domain;
    n->a = std::move(e);
    return n;
}

inline ExprPtr map_app(ExprPtr m, ExprPtr k) {
    if (m->domain.kind() != Domain::Kind::Map) throw TypeError("application needs a map");
    if (!m->domain.key_domain().same(k->domain))
        throw TypeError("map key domain mismatch");
    auto n = std::make_shared<Expr>();
    n->kind = Expr::Kind::MapApp;
    n->domain = m->domain.value_domain();
    n->a = std::move(m);
    n->b = std::move(k);
    return n;
}

// ---------------------------------------------------------------------------
// Predicate builders. Constant cases fold at construction so that formulas
// produced by wp stay readable.
// ---------------------------------------------------------------------------

inline PredPtr pred_true() {
    static PredPtr t = [] {
        auto p = std::make_shared<Pred>();
        p->kind = Pred::Kind::True;
        return p;
    }();
    return t;
}

inline PredPtr pred_false() {
    static PredPtr f = [] {
        auto p = std::make_shared<Pred>();
        p->kind = Pred::Kind::False;
        return p;
    }();
    return f;
}

inline PredPtr eq(ExprPtr x, ExprPtr y) {
    if (!x->domain.same(y->domain)) throw TypeError("= requires equal domains");
    if (x->kind == Expr::Kind::Lit && y->kind == Expr::Kind::Lit)
        return x->lit == y->lit ? pred_true() : pred_false();
    auto p = std::make_shared<Pred>();
    p->kind = Pred::Kind::Eq;
    p->x = std::move(x);
    p->y = std::move(y);
    return p;
}

inline PredPtr in_set(ExprPtr x, std::vector<int> members) {
    if (x->domain.kind() == Domain::Kind::Map) throw TypeError("`in` needs a scalar operand");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int m : members)
        if (m < 0 || m >= x->domain.size()) throw TypeError("set member outside domain");
    if (members.empty()) return pred_false();
    if (static_cast<std::int64_t>(members.size()) == x->domain.size()) return pred_true();
    if (x->kind == Expr::Kind::Lit)
        return std::binary_search(members.begin(), members.end(), x->lit) ? pred_true()
                                                                          : pred_false();
    auto p = std::make_shared<Pred>();
    p->kind = Pred::Kind::In;
    p->x = std::move(x);
    p->set = std::move(members);
    return p;
}

inline PredPtr le(ExprPtr x, ExprPtr y) {
    if (x->domain.kind() != Domain::Kind::Nat || y->domain.kind() != Domain::Kind::Nat)
        throw TypeError("<= is defined on bounded naturals only");
    if (x->kind == Expr::Kind::Lit && y->kind == Expr::Kind::Lit)
        return x->lit <= y->lit ? pred_true() : pred_false();
    if (x->kind == Expr::Kind::Lit && x->lit == 0) return pred_true();
    if (y->kind == Expr::Kind::Lit && y->lit == y->domain.nat_max()) return pred_true();
    auto p = std::make_shared<Pred>();
    p->kind = Pred::Kind::Le;
    p->x = std::move(x);
    p->y = std::move(y);
    return p;
}

inline PredPtr not_(PredPtr a) {
    if (a->kind == Pred::Kind::True) return pred_false();
    if (a->kind == Pred::Kind::False) return pred_true();
    if (a->kind == Pred::Kind::Not) return a->a;
    auto p = std::make_shared<Pred>();
    p->kind = Pred::Kind::Not;
    p->a = std::move(a);
    return p;
}

inline PredPtr and_(PredPtr a, PredPtr b) {
    if (a->kind == Pred::Kind::False || b->kind == Pred::Kind::False) return pred_false();
    if (a->kind == Pred::Kind::True) return b;
    if (b->kind == Pred::Kind::True) return a;
    if (a == b) return a;
    auto p = std::make_shared<Pred>();
    p->kind = Pred::Kind::And;
    p->a = std::move(a);
    p->b = std::move(b);
    return p;
}

inline PredPtr or_(PredPtr a, PredPtr b) {
    if (a->kind == Pred::Kind::True || b->kind == Pred::Kind::True) return pred_true();
    if (a->kind == Pred::Kind::False) return b;
    if (b->kind == Pred::Kind::False) return a;
    if (a == b) return a;
    auto p = std::make_shared<Pred>();
    p->kind = Pred::Kind::Or;
    p->a = std::move(a);
    p->b = std::move(b);
    return p;
}

inline PredPtr implies(PredPtr a, PredPtr b) {
    if (a->kind == Pred::Kind::False || b->kind == Pred::Kind::True) return pred_true();
    if (a->kind == Pred::Kind::True) return b;
    if (b->kind == Pred::Kind::False) return not_(a);
    auto p = std::make_shared<Pred>();
    p->kind = Pred::Kind::Implies;
    p->a = std::move(a);
    p->b = std::move(b);
    return p;
}

inline PredPtr and_list(const std::vector<PredPtr>& ps) {
    PredPtr acc = pred_true();
    for (const auto& p : ps) acc = and_(acc, p);
    return acc;
}

namespace detail {
/// If the predicate is a bare (in)equality pinning an unprimed variable to
/// literal values, report the variable and the admitted values.
inline bool var_value_atom(const Pred& p, int& out_var, std::vector<int>& out_vals) {
    const Expr* v = nullptr;
    const Expr* l = nullptr;
    if (p.kind == Pred::Kind::Eq) {
        if (p.x->kind == Expr::Kind::Var && p.y->kind == Expr::Kind::Lit) {
            v = p.x.get();
            l = p.y.get();
        } else if (p.y->kind == Expr::Kind::Var && p.x->kind == Expr::Kind::Lit) {
            v = p.y.get();
            l = p.x.get();
        } else {
            return false;
        }
        if (v->primed) return false;
        out_var = v->var;
        out_vals = {l->lit};
        return true;
    }
    if (p.kind == Pred::Kind::In && p.x->kind == Expr::Kind::Var && !p.x->primed) {
        out_var = p.x->var;
        out_vals = p.set;
        return true;
    }
    return false;
}
}  // namespace detail

/// Disjunction of a list. Detects the case where single-variable atoms cover
/// a variable's whole domain, which the quantifier expansion in wp produces
/// in bulk.
inline PredPtr or_list(const StateSpace& space, const std::vector<PredPtr>& ps) {
    std::map<int, std::set<int>> cover;
    for (const auto& p : ps) {
        if (p->kind == Pred::Kind::True) return pred_true();
        int v;
        std::vector<int> vals;
        if (detail::var_value_atom(*p, v, vals)) {
            auto& s = cover[v];
            s.insert(vals.begin(), vals.end());
            if (static_cast<std::int64_t>(s.size()) == space.var(v).domain.size())
                return pred_true();
        }
    }
    PredPtr acc = pred_false();
    for (const auto& p : ps) acc = or_(acc, p);
    return acc;
}

// ---------------------------------------------------------------------------
// Occurrence checks
// ---------------------------------------------------------------------------

inline void collect_expr_vars(const Expr& e, bool primed, std::set<int>& out) {
    switch (e.kind) {
        case Expr::Kind::Var:
            if (e.primed == primed) out.insert(e.var);
            return;
        case Expr::Kind::Lit: return;
        case Expr::Kind::Succ: collect_expr_vars(*e.a, primed, out); return;
        case Expr::Kind::MapApp:
            collect_expr_vars(*e.a, primed, out);
            collect_expr_vars(*e.b, primed, out);
            return;
    }
}

inline void collect_pred_vars(const Pred& p, bool primed, std::set<int>& out) {
    switch (p.kind) {
        case Pred::Kind::True:
        case Pred::Kind::False: return;
        case Pred::Kind::Eq:
        case Pred::Kind::Le:
            collect_expr_vars(*p.x, primed, out);
            collect_expr_vars(*p.y, primed, out);
            return;
        case Pred::Kind::In: collect_expr_vars(*p.x, primed, out); return;
        case Pred::Kind::Not: collect_pred_vars(*p.a, primed, out); return;
        case Pred::Kind::And:
        case Pred::Kind::Or:
        case Pred::Kind::Implies:
            collect_pred_vars(*p.a, primed, out);
            collect_pred_vars(*p.b, primed, out);
            return;
    }
}

inline void collect_prog_vars(const Prog& s, std::set<int>& out) {
    switch (s.kind) {
        case Prog::Kind::Skip:
        case Prog::Kind::Abort: return;
        case Prog::Kind::Seq:
        case Prog::Kind::Choice:
            collect_prog_vars(*s.a, out);
            collect_prog_vars(*s.b, out);
            return;
        case Prog::Kind::Guard:
            collect_pred_vars(*s.pred, false, out);
            collect_pred_vars(*s.pred, true, out);
            collect_prog_vars(*s.a, out);
            return;
        case Prog::Kind::Assign: {
            out.insert(s.var);
            collect_expr_vars(*s.expr, false, out);
            return;
        }
        case Prog::Kind::Frame: collect_prog_vars(*s.a, out); return;
        case Prog::Kind::RelSpec:
            collect_pred_vars(*s.pred, false, out);
            collect_pred_vars(*s.pred, true, out);
            return;
    }
}

inline bool pred_has_primed(const Pred& p) {
    std::set<int> vs;
    collect_pred_vars(p, true, vs);
    return !vs.empty();
}

// ---------------------------------------------------------------------------
// Program builders
// ---------------------------------------------------------------------------

inline ProgPtr skip() {
    auto s = std::make_shared<Prog>();
    s->kind = Prog::Kind::Skip;
    return s;
}

inline ProgPtr abort_prog() {
    auto s = std::make_shared<Prog>();
    s->kind = Prog::Kind::Abort;
    return s;
}

inline ProgPtr seq(ProgPtr a, ProgPtr b) {
    auto s = std::make_shared<Prog>();
    s->kind = Prog::Kind::Seq;
    s->a = std::move(a);
    s->b = std::move(b);
    return s;
}

inline ProgPtr seq_list(std::vector<ProgPtr> ps) {
    if (ps.empty()) return skip();
    ProgPtr acc = ps.front();
    for (size_t i = 1; i < ps.size(); ++i) acc = seq(acc, ps[i]);
    return acc;
}

inline ProgPtr guard(PredPtr g, ProgPtr body) {
    if (pred_has_primed(*g)) throw TypeError("guards must not use primed variables");
    auto s = std::make_shared<Prog>();
    s->kind = Prog::Kind::Guard;
    s->pred = std::move(g);
    s->a = std::move(body);
    return s;
}

inline ProgPtr choice(ProgPtr a, ProgPtr b) {
    auto s = std::make_shared<Prog>();
    s->kind = Prog::Kind::Choice;
    s->a = std::move(a);
    s->b = std::move(b);
    return s;
}

inline ProgPtr choice_list(std::vector<ProgPtr> ps) {
    if (ps.empty()) throw TypeError("choice over an empty list");
    ProgPtr acc = ps.front();
    for (size_t i = 1; i < ps.size(); ++i) acc = choice(acc, ps[i]);
    return acc;
}

inline ProgPtr assign(const StateSpace& space, const std::string& path, ExprPtr rhs) {
    int idx = space.index_of(path);
    if (idx < 0) throw TypeError("unknown variable: " + path);
    if (!space.var(idx).domain.same(rhs->domain))
        throw TypeError("assignment domain mismatch on " + path);
    std::set<int> rhs_primed;
    collect_expr_vars(*rhs, true, rhs_primed);
    if (!rhs_primed.empty()) throw TypeError("assignment right-hand sides are unprimed");
    auto s = std::make_shared<Prog>();
    s->kind = Prog::Kind::Assign;
    s->var = idx;
    s->expr = std::move(rhs);
    return s;
}

/// Static containment check: a frame body may only mention variables under
/// the frame's namespace.
inline ProgPtr frame(const StateSpace& space, const std::string& ns, ProgPtr body) {
    if (!space.namespace_exists(ns)) throw TypeError("empty frame namespace: " + ns);
    std::set<int> used;
    collect_prog_vars(*body, used);
    for (int v : used)
        if (!space.in_namespace(v, ns))
            throw TypeError("frame body refers to " + space.var(v).path + " outside " + ns);
    auto s = std::make_shared<Prog>();
    s->kind = Prog::Kind::Frame;
    s->ns = ns;
    s->a = std::move(body);
    return s;
}

/// Relational specification: successors are exactly the states related to the
/// current one by `r` (primed variables name the successor state). Variables
/// in scope that `r` leaves unconstrained range over their whole domain.
inline ProgPtr rel_spec(PredPtr r) {
    auto s = std::make_shared<Prog>();
    s->kind = Prog::Kind::RelSpec;
    s->pred = std::move(r);
    return s;
}

/// Havoc a single variable: any value in its domain may be assigned.
inline ProgPtr havoc(const StateSpace& space, const std::string& path) {
    if (space.index_of(path) < 0) throw TypeError("unknown variable: " + path);
    return frame(space, path, rel_spec(pred_true()));
}

// ---------------------------------------------------------------------------
// Pretty-printing (also the canonical form used for fingerprints)
// ---------------------------------------------------------------------------

inline std::string print_expr(const StateSpace& space, const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Var:
            return space.var(e.var).path + (e.primed ? "'" : "");
        case Expr::Kind::Lit: return e.domain.value_name(e.lit);
        case Expr::Kind::Succ: return "succ(" + print_expr(space, *e.a) + ")";
        case Expr::Kind::MapApp:
            return print_expr(space, *e.a) + "(" + print_expr(space, *e.b) + ")";
    }
    return "?";
}

// Predicate precedence: => 1 (right), \/ 2, /\ 3, ~ 4, atoms 5.
inline std::string print_pred(const StateSpace& space, const Pred& p, int ctx = 0) {
    auto wrap = [&](int prec, const std::string& s) {
        return prec < ctx ? "(" + s + ")" : s;
    };
    switch (p.kind) {
        case Pred::Kind::True: return "true";
        case Pred::Kind::False: return "false";
        case Pred::Kind::Eq:
            return wrap(5, print_expr(space, *p.x) + " = " + print_expr(space, *p.y));
        case Pred::Kind::Le:
            return wrap(5, print_expr(space, *p.x) + " <= " + print_expr(space, *p.y));
        case Pred::Kind::In: {
            std::string s = print_expr(space, *p.x) + " in {";
            for (size_t i = 0; i < p.set.size(); ++i) {
                if (i) s += ", ";
                s += p.x->domain.value_name(p.set[i]);
            }
            return wrap(5, s + "}");
        }
        case Pred::Kind::Not: return wrap(4, "~" + print_pred(space, *p.a, 5));
        case Pred::Kind::And:
            return wrap(3, print_pred(space, *p.a, 3) + " /\\ " + print_pred(space, *p.b, 4));
        case Pred::Kind::Or:
            return wrap(2, print_pred(space, *p.a, 2) + " \\/ " + print_pred(space, *p.b, 3));
        case Pred::Kind::Implies:
            return wrap(1, print_pred(space, *p.a, 2) + " => " + print_pred(space, *p.b, 1));
    }
    return "?";
}

// Program precedence: |~| 1, ; 2, -> 3, atoms 4.
inline std::string print_prog(const StateSpace& space, const Prog& s, int ctx = 0) {
    auto wrap = [&](int prec, const std::string& str) {
        return prec < ctx ? "(" + str + ")" : str;
    };
    switch (s.kind) {
        case Prog::Kind::Skip: return "skip";
        case Prog::Kind::Abort: return "abort";
        case Prog::Kind::Seq:
            return wrap(2, print_prog(space, *s.a, 2) + " ; " + print_prog(space, *s.b, 3));
        case Prog::Kind::Choice:
            return wrap(1, print_prog(space, *s.a, 1) + " |~| " + print_prog(space, *s.b, 2));
        case Prog::Kind::Guard:
            return wrap(3, print_pred(space, *s.pred, 0) + " -> " + print_prog(space, *s.a, 3));
        case Prog::Kind::Assign:
            return wrap(4, space.var(s.var).path + " := " + print_expr(space, *s.expr));
        case Prog::Kind::Frame:
            return wrap(4, "frame " + s.ns + " in " + print_prog(space, *s.a, 4));
        case Prog::Kind::RelSpec:
            return wrap(4, "rel[" + print_pred(space, *s.pred, 0) + "]");
    }
    return "?";
}

}  // namespace assurkit::gcl
