// verify.hpp - weakest preconditions, enumeration-based validity, obligations
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdlib>
#include <map>

#include "assurkit/gcl/semantics.hpp"

namespace assurkit::gcl {

constexpr std::int64_t kDefaultStateCap = 100000000;  // 10^8
constexpr std::int64_t kExpansionCap = 1 << 20;       // quantifier instances per relation

namespace detail {

inline void flatten_and(const PredPtr& p, std::vector<PredPtr>& out) {
    if (p->kind == Pred::Kind::And) {
        flatten_and(p->a, out);
        flatten_and(p->b, out);
    } else if (p->kind != Pred::Kind::True) {
        out.push_back(p);
    }
}

/// Enumerate all assignments of values to `vars`, most significant first.
inline void for_each_assignment(const StateSpace& space, const std::vector<int>& vars,
                                const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> vals(vars.size(), 0);
    while (true) {
        visit(vals);
        size_t i = vars.size();
        while (true) {
            if (i == 0) return;
            --i;
            if (vals[i] + 1 < space.var(vars[i]).domain.size()) {
                ++vals[i];
                for (size_t j = i + 1; j < vals.size(); ++j) vals[j] = 0;
                break;
            }
            if (i == 0) return;
        }
        if (vars.empty()) return;
    }
}

inline std::int64_t assignment_count(const StateSpace& space, const std::vector<int>& vars,
                                     std::int64_t cap) {
    std::int64_t n = 1;
    for (int v : vars) {
        n *= space.var(v).domain.size();
        if (n > cap)
            throw SpaceTooLarge("quantifier expansion over " + std::to_string(vars.size()) +
                                " variables exceeds the cap");
    }
    return n;
}

struct UnionFind {
    std::map<int, int> parent;
    int find(int x) {
        if (!parent.count(x)) parent[x] = x;
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// wp of a relational specification: for every related successor over the
/// writable variables, the postcondition holds. The universal quantifier is
/// expanded over the finite domains of the variables the relation constrains
/// or the postcondition observes; independent groups of constraints collapse
/// to satisfiability tests on the antecedent side, which keeps the expanded
/// formula small.
inline PredPtr wp_relspec(const StateSpace& space, const PredPtr& rel, const PredPtr& post,
                          const Mask& mask) {
    std::vector<PredPtr> conjs;
    flatten_and(rel, conjs);

    std::set<int> post_vars_all;
    collect_pred_vars(*post, false, post_vars_all);
    std::set<int> post_vars;  // writable variables the postcondition observes
    for (int v : post_vars_all)
        if (mask[static_cast<size_t>(v)]) post_vars.insert(v);

    // Group conjuncts by the primed variables they share. Conjuncts with no
    // primed variables constrain the pre-state only.
    UnionFind uf;
    std::vector<std::set<int>> conj_primed(conjs.size());
    std::vector<PredPtr> pre_conjs;
    for (size_t i = 0; i < conjs.size(); ++i) {
        collect_pred_vars(*conjs[i], true, conj_primed[i]);
        for (int v : conj_primed[i]) {
            if (!mask[static_cast<size_t>(v)])
                throw TypeError("relation constrains framed-out variable " +
                                space.var(v).path + "'");
            uf.unite(*conj_primed[i].begin(), v);
        }
        if (conj_primed[i].empty()) pre_conjs.push_back(conjs[i]);
    }
    for (int v : post_vars) uf.find(v);  // ensure every observed variable has a class

    // Classes that touch the postcondition expand jointly under the universal
    // quantifier; the rest only need a satisfiability witness.
    std::set<int> post_roots;
    for (int v : post_vars) post_roots.insert(uf.find(v));

    std::map<int, std::vector<int>> class_vars;
    for (const auto& [v, _] : uf.parent) class_vars[uf.find(v)].push_back(v);

    std::vector<int> forall_vars;
    std::vector<PredPtr> forall_conjs;
    std::vector<PredPtr> exists_parts;

    for (auto& [root, vars] : class_vars) {
        std::sort(vars.begin(), vars.end());
        std::vector<PredPtr> cls_conjs;
        for (size_t i = 0; i < conjs.size(); ++i)
            if (!conj_primed[i].empty() && uf.find(*conj_primed[i].begin()) == root)
                cls_conjs.push_back(conjs[i]);
        if (post_roots.count(root)) {
            forall_vars.insert(forall_vars.end(), vars.begin(), vars.end());
            forall_conjs.insert(forall_conjs.end(), cls_conjs.begin(), cls_conjs.end());
        } else {
            // exists s'. constraints  ==  some successor value is admissible
            assignment_count(space, vars, kExpansionCap);
            std::vector<PredPtr> cases;
            for_each_assignment(space, vars, [&](const std::vector<int>& vals) {
                PredPtr inst = and_list(cls_conjs);
                for (size_t i = 0; i < vars.size(); ++i)
                    inst = subst_value(*inst, vars[i], true,
                                       space.var(vars[i]).domain, vals[i]);
                cases.push_back(inst);
            });
            exists_parts.push_back(or_list(space, cases));
        }
    }

    std::sort(forall_vars.begin(), forall_vars.end());
    assignment_count(space, forall_vars, kExpansionCap);
    std::vector<PredPtr> instances;
    for_each_assignment(space, forall_vars, [&](const std::vector<int>& vals) {
        PredPtr ante = and_list(forall_conjs);
        PredPtr cons = post;
        for (size_t i = 0; i < forall_vars.size(); ++i) {
            const Domain& d = space.var(forall_vars[i]).domain;
            ante = subst_value(*ante, forall_vars[i], true, d, vals[i]);
            cons = subst_value(*cons, forall_vars[i], false, d, vals[i]);
        }
        instances.push_back(implies(ante, cons));
    });

    PredPtr antecedent = and_(and_list(pre_conjs), and_list(exists_parts));
    return implies(antecedent, and_list(instances));
}

inline PredPtr wp_masked(const StateSpace& space, const Prog& prog, PredPtr post,
                         const Mask& mask) {
    switch (prog.kind) {
        case Prog::Kind::Skip: return post;
        case Prog::Kind::Abort: return pred_false();
        case Prog::Kind::Seq:
            return wp_masked(space, *prog.a, wp_masked(space, *prog.b, std::move(post), mask),
                             mask);
        case Prog::Kind::Guard:
            return implies(prog.pred, wp_masked(space, *prog.a, std::move(post), mask));
        case Prog::Kind::Choice:
            return and_(wp_masked(space, *prog.a, post, mask),
                        wp_masked(space, *prog.b, post, mask));
        case Prog::Kind::Assign: {
            if (!mask[static_cast<size_t>(prog.var)])
                throw TypeError("assignment to framed-out variable " +
                                space.var(prog.var).path);
            return subst(*post, prog.var, false, prog.expr);
        }
        case Prog::Kind::Frame:
            return wp_masked(space, *prog.a, std::move(post),
                             narrow_mask(space, mask, prog.ns));
        case Prog::Kind::RelSpec: return wp_relspec(space, prog.pred, post, mask);
    }
    return pred_false();
}

}  // namespace detail

/// Weakest precondition: the states from which every execution of `prog`
/// terminates without aborting in a state satisfying `post`. A program with
/// no enabled branch satisfies this vacuously.
inline PredPtr wp(const StateSpace& space, const Prog& prog, PredPtr post) {
    if (pred_has_primed(*post)) throw TypeError("postconditions are unprimed");
    return detail::wp_masked(space, prog, std::move(post), full_mask(space));
}

/// Conjugate precondition: the states from which some execution of `prog`
/// can reach a state satisfying `post`.
inline PredPtr reach_pre(const StateSpace& space, const Prog& prog, PredPtr post) {
    return not_(wp(space, prog, not_(std::move(post))));
}

// ---------------------------------------------------------------------------
// Validity by exhaustive enumeration
// ---------------------------------------------------------------------------

struct ValidityResult {
    bool valid = false;
    std::optional<State> counterexample;  // first falsifying state in enumeration order
};

inline ValidityResult valid(const StateSpace& space, const Pred& pred,
                            std::int64_t state_cap = kDefaultStateCap) {
    if (pred_has_primed(pred)) throw TypeError("validity is defined on unprimed predicates");
    std::int64_t n = space.state_count(state_cap);
    if (n > state_cap)
        throw SpaceTooLarge("state space exceeds the cap of " + std::to_string(state_cap) +
                            " states");
    State s = space.initial_state();
    if (space.var_count() == 0) {
        if (eval_pred(pred, s)) return {true, std::nullopt};
        return {false, s};
    }
    do {
        if (!eval_pred(pred, s)) return {false, s};
    } while (space.next_state(s));
    return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Obligations
// ---------------------------------------------------------------------------

/// A named formal claim over a state space. Two forms:
///  - Hoare{pre, prog, post}: every run from `pre` ends in `post`,
///    checked as valid(pre => wp(prog, post));
///  - WpImplies{context, prog, post, conclusion}: any state satisfying the
///    context from which the program can reach `post` satisfies the
///    conclusion, checked as valid(context /\ reach_pre(prog, post) =>
///    conclusion).
struct Obligation {
    enum class Form { Hoare, WpImplies };
    std::string gid;
    SpacePtr space;
    Form form = Form::Hoare;
    PredPtr pre;  // Hoare precondition, or the WpImplies context
    ProgPtr prog;
    PredPtr post;
    PredPtr conclusion;  // WpImplies only
};

struct Verdict {
    bool pass = false;
    std::optional<State> counterexample;
};

inline PredPtr obligation_condition(const Obligation& ob) {
    switch (ob.form) {
        case Obligation::Form::Hoare:
            return implies(ob.pre, wp(*ob.space, *ob.prog, ob.post));
        case Obligation::Form::WpImplies:
            return implies(and_(ob.pre, reach_pre(*ob.space, *ob.prog, ob.post)),
                           ob.conclusion);
    }
    return pred_false();
}

inline Verdict check_obligation(const Obligation& ob,
                                std::int64_t state_cap = kDefaultStateCap) {
    auto r = valid(*ob.space, *obligation_condition(ob), state_cap);
    return Verdict{r.valid, r.counterexample};
}

/// State cap honouring the ASSURKIT_STATE_CAP environment variable.
inline std::int64_t configured_state_cap() {
    if (const char* env = std::getenv("ASSURKIT_STATE_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultStateCap;
}

}  // namespace assurkit::gcl
