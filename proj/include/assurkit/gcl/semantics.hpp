// semantics.hpp - substitution, evaluation, and relational execution
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <functional>
#include <optional>
#include <set>

#include "assurkit/gcl/ast.hpp"

namespace assurkit::gcl {

/// Writable-variable mask; exec and wp treat variables outside the mask as
/// constants (the frame operator narrows it).
using Mask = std::vector<char>;

inline Mask full_mask(const StateSpace& space) {
    return Mask(static_cast<size_t>(space.var_count()), 1);
}

inline Mask narrow_mask(const StateSpace& space, const Mask& mask, const std::string& ns) {
    Mask out(mask.size(), 0);
    for (int i = 0; i < space.var_count(); ++i)
        if (mask[static_cast<size_t>(i)] && space.in_namespace(i, ns))
            out[static_cast<size_t>(i)] = 1;
    return out;
}

// ---------------------------------------------------------------------------
// Substitution (capture-free by construction: predicates have no binders)
// ---------------------------------------------------------------------------

inline ExprPtr subst_expr(const Expr& e, int var, bool primed, const ExprPtr& repl) {
    switch (e.kind) {
        case Expr::Kind::Var:
            if (e.var == var && e.primed == primed) return repl;
            return std::make_shared<Expr>(e);
        case Expr::Kind::Lit: return std::make_shared<Expr>(e);
        case Expr::Kind::Succ: return succ(subst_expr(*e.a, var, primed, repl));
        case Expr::Kind::MapApp:
            return map_app(subst_expr(*e.a, var, primed, repl),
                           subst_expr(*e.b, var, primed, repl));
    }
    return nullptr;
}

/// Substitute an expression for a variable. Rebuilding through the builders
/// re-applies constant folding, so `subst(x = 1, x, 1)` yields `true`.
inline PredPtr subst(const Pred& p, int var, bool primed, const ExprPtr& repl) {
    switch (p.kind) {
        case Pred::Kind::True: return pred_true();
        case Pred::Kind::False: return pred_false();
        case Pred::Kind::Eq:
            return eq(subst_expr(*p.x, var, primed, repl), subst_expr(*p.y, var, primed, repl));
        case Pred::Kind::Le:
            return le(subst_expr(*p.x, var, primed, repl), subst_expr(*p.y, var, primed, repl));
        case Pred::Kind::In: {
            auto x = subst_expr(*p.x, var, primed, repl);
            return in_set(std::move(x), p.set);
        }
        case Pred::Kind::Not: return not_(subst(*p.a, var, primed, repl));
        case Pred::Kind::And:
            return and_(subst(*p.a, var, primed, repl), subst(*p.b, var, primed, repl));
        case Pred::Kind::Or:
            return or_(subst(*p.a, var, primed, repl), subst(*p.b, var, primed, repl));
        case Pred::Kind::Implies:
            return implies(subst(*p.a, var, primed, repl), subst(*p.b, var, primed, repl));
    }
    return nullptr;
}

inline PredPtr subst(const StateSpace& space, const Pred& p, const std::string& path,
                     const ExprPtr& repl) {
    int idx = space.index_of(path);
    if (idx < 0) throw TypeError("unknown variable: " + path);
    if (!space.var(idx).domain.same(repl->domain))
        throw TypeError("substitution domain mismatch on " + path);
    return subst(p, idx, false, repl);
}

inline PredPtr subst_value(const Pred& p, int var, bool primed, const Domain& dom, int value) {
    return subst(p, var, primed, literal(dom, value));
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Evaluate an expression; primed variables read `post` (pass the same state
/// twice for unprimed evaluation).
inline int eval_expr(const Expr& e, const State& pre, const State& post) {
    switch (e.kind) {
        case Expr::Kind::Var:
            return (e.primed ? post : pre)[static_cast<size_t>(e.var)];
        case Expr::Kind::Lit: return e.lit;
        case Expr::Kind::Succ: {
            int v = eval_expr(*e.a, pre, post);
            return v >= e.domain.nat_max() ? e.domain.nat_max() : v + 1;  // saturating
        }
        case Expr::Kind::MapApp: {
            int m = eval_expr(*e.a, pre, post);
            int k = eval_expr(*e.b, pre, post);
            return e.a->domain.map_at(m, k);
        }
    }
    return 0;
}

/// Truth-functional evaluation of a relational predicate over a state pair.
inline bool eval_rel(const Pred& p, const State& pre, const State& post) {
    switch (p.kind) {
        case Pred::Kind::True: return true;
        case Pred::Kind::False: return false;
        case Pred::Kind::Eq: return eval_expr(*p.x, pre, post) == eval_expr(*p.y, pre, post);
        case Pred::Kind::Le: return eval_expr(*p.x, pre, post) <= eval_expr(*p.y, pre, post);
        case Pred::Kind::In: {
            int v = eval_expr(*p.x, pre, post);
            return std::binary_search(p.set.begin(), p.set.end(), v);
        }
        case Pred::Kind::Not: return !eval_rel(*p.a, pre, post);
        case Pred::Kind::And: return eval_rel(*p.a, pre, post) && eval_rel(*p.b, pre, post);
        case Pred::Kind::Or: return eval_rel(*p.a, pre, post) || eval_rel(*p.b, pre, post);
        case Pred::Kind::Implies: return !eval_rel(*p.a, pre, post) || eval_rel(*p.b, pre, post);
    }
    return false;
}

inline bool eval_pred(const Pred& p, const State& s) { return eval_rel(p, s, s); }

// ---------------------------------------------------------------------------
// Relational execution
// ---------------------------------------------------------------------------

/// Successor set of a program from one state; nullopt means the program can
/// abort from there. States are kept sorted, so execution is deterministic.
using Successors = std::optional<std::set<State>>;

namespace detail {

inline void enumerate_mask(const StateSpace& space, const Mask& mask, const State& base,
                           std::int64_t cap,
                           const std::function<void(const State&)>& visit) {
    std::vector<int> vars;
    std::int64_t count = 1;
    for (int i = 0; i < space.var_count(); ++i)
        if (mask[static_cast<size_t>(i)]) {
            vars.push_back(i);
            count *= space.var(i).domain.size();
            if (count > cap)
                throw SpaceTooLarge("relational specification ranges over " +
                                    std::to_string(count) + "+ assignments (cap " +
                                    std::to_string(cap) + ")");
        }
    State s = base;
    std::vector<int> digits(vars.size(), 0);
    for (size_t i = 0; i < vars.size(); ++i) s[static_cast<size_t>(vars[i])] = 0;
    while (true) {
        visit(s);
        size_t i = vars.size();
        while (i > 0) {
            --i;
            int v = vars[i];
            if (s[static_cast<size_t>(v)] + 1 < space.var(v).domain.size()) {
                ++s[static_cast<size_t>(v)];
                for (size_t j = i + 1; j < vars.size(); ++j) s[static_cast<size_t>(vars[j])] = 0;
                break;
            }
            if (i == 0) return;
        }
        if (vars.empty()) return;
    }
}

}  // namespace detail

inline Successors exec(const StateSpace& space, const Prog& prog, const State& s,
                       const Mask& mask, std::int64_t relspec_cap = 1 << 20) {
    switch (prog.kind) {
        case Prog::Kind::Skip: return std::set<State>{s};
        case Prog::Kind::Abort: return std::nullopt;
        case Prog::Kind::Seq: {
            auto mids = exec(space, *prog.a, s, mask, relspec_cap);
            if (!mids) return std::nullopt;
            std::set<State> out;
            for (const auto& m : *mids) {
                auto fin = exec(space, *prog.b, m, mask, relspec_cap);
                if (!fin) return std::nullopt;  // abortion anywhere is abortion
                out.insert(fin->begin(), fin->end());
            }
            return out;
        }
        case Prog::Kind::Guard:
            if (!eval_pred(*prog.pred, s)) return std::set<State>{};
            return exec(space, *prog.a, s, mask, relspec_cap);
        case Prog::Kind::Choice: {
            auto l = exec(space, *prog.a, s, mask, relspec_cap);
            if (!l) return std::nullopt;
            auto r = exec(space, *prog.b, s, mask, relspec_cap);
            if (!r) return std::nullopt;
            l->insert(r->begin(), r->end());
            return l;
        }
        case Prog::Kind::Assign: {
            if (!mask[static_cast<size_t>(prog.var)])
                throw TypeError("assignment to framed-out variable " +
                                space.var(prog.var).path);
            State t = s;
            t[static_cast<size_t>(prog.var)] = eval_expr(*prog.expr, s, s);
            return std::set<State>{t};
        }
        case Prog::Kind::Frame: {
            Mask inner = narrow_mask(space, mask, prog.ns);
            return exec(space, *prog.a, s, inner, relspec_cap);
        }
        case Prog::Kind::RelSpec: {
            std::set<State> out;
            detail::enumerate_mask(space, mask, s, relspec_cap, [&](const State& t) {
                if (eval_rel(*prog.pred, s, t)) out.insert(t);
            });
            return out;
        }
    }
    return std::nullopt;
}

inline Successors exec(const StateSpace& space, const Prog& prog, const State& s,
                       std::int64_t relspec_cap = 1 << 20) {
    return exec(space, prog, s, full_mask(space), relspec_cap);
}

/// A program is enabled at a state when it has at least one successor.
inline bool enabled(const StateSpace& space, const Prog& prog, const State& s) {
    auto r = exec(space, prog, s);
    return r && !r->empty();
}

}  // namespace assurkit::gcl
