// Tests for state spaces, evaluation, execution, and the wp calculus.
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <catch2/catch_amalgamated.hpp>

#include "assurkit/gcl/verify.hpp"
#include "gcl_gen.hpp"

using namespace assurkit::gcl;

namespace {

SpacePtr demo_space() {
    auto sp = std::make_shared<StateSpace>();
    sp->add("door.latch", Domain::enumeration({"locked", "unlocked"}));
    sp->add("door.count", Domain::bounded_nat(3));
    sp->add("sys.ok", Domain::boolean());
    return sp;
}

State state_of(const StateSpace& sp, std::initializer_list<std::pair<const char*, const char*>> kv) {
    State s(static_cast<size_t>(sp.var_count()), 0);
    for (auto& [path, val] : kv) {
        int i = sp.index_of(path);
        REQUIRE(i >= 0);
        auto v = sp.var(i).domain.value_of(val);
        REQUIRE(v.has_value());
        s[static_cast<size_t>(i)] = *v;
    }
    return s;
}

bool pred_equiv(const StateSpace& sp, const PredPtr& a, const PredPtr& b) {
    auto both = and_(implies(a, b), implies(b, a));
    return valid(sp, *both).valid;
}

}  // namespace

TEST_CASE("domains") {
    auto e = Domain::enumeration({"x", "y", "z"});
    CHECK(e.size() == 3);
    CHECK(e.value_of("y") == 1);
    CHECK(!e.value_of("w").has_value());
    CHECK(e.value_name(2) == "z");

    auto n = Domain::bounded_nat(3);
    CHECK(n.size() == 4);
    CHECK(n.value_of("3") == 3);
    CHECK(!n.value_of("4").has_value());

    auto m = Domain::finite_map(Domain::enumeration({"a", "b"}), Domain::boolean());
    CHECK(m.size() == 4);
    // encoded value 2 = {a: false, b: true}
    CHECK(m.map_at(2, 0) == 0);
    CHECK(m.map_at(2, 1) == 1);
    CHECK_THROWS_AS(Domain::finite_map(Domain::bounded_nat(2), Domain::boolean()), TypeError);
}

TEST_CASE("state enumeration is deterministic and complete") {
    auto sp = demo_space();
    State s = sp->initial_state();
    int count = 1;
    while (sp->next_state(s)) ++count;
    CHECK(count == 2 * 4 * 2);
    CHECK(sp->state_count(1000) == 16);
    CHECK(sp->state_count(10) == 11);  // saturates above the cap
}

TEST_CASE("expression evaluation") {
    auto sp = demo_space();
    auto s = state_of(*sp, {{"door.count", "3"}, {"sys.ok", "true"}});

    auto count = var_ref(*sp, "door.count");
    CHECK(eval_expr(*count, s, s) == 3);
    CHECK(eval_expr(*succ(count), s, s) == 3);  // saturates at the bound
    auto s2 = state_of(*sp, {{"door.count", "1"}});
    CHECK(eval_expr(*succ(count), s2, s2) == 2);
}

TEST_CASE("predicate evaluation") {
    auto sp = demo_space();
    auto s = state_of(*sp, {{"door.latch", "locked"}});

    CHECK(eval_pred(*pred_true(), s));
    auto latch = var_ref(*sp, "door.latch");
    CHECK(eval_pred(*eq(latch, label_lit(latch->domain, "locked")), s));
    CHECK_FALSE(eval_pred(*eq(latch, label_lit(latch->domain, "unlocked")), s));
    auto member = in_set(latch, {0});
    CHECK(eval_pred(*member, s));
}

TEST_CASE("substitution") {
    auto sp = demo_space();
    auto ok = var_ref(*sp, "sys.ok");
    auto t = literal(Domain::boolean(), 1);

    // substituting the asserted value folds the atom away
    auto p = eq(ok, t);
    CHECK(subst(*sp, *p, "sys.ok", t)->kind == Pred::Kind::True);

    // untouched variables are preserved
    auto latch = var_ref(*sp, "door.latch");
    auto q = eq(latch, label_lit(latch->domain, "locked"));
    auto q2 = subst(*sp, *q, "sys.ok", t);
    CHECK(print_pred(*sp, *q2) == print_pred(*sp, *q));
}

TEST_CASE("substitute-then-evaluate agrees with state update") {
    auto gen = assurkit::testgen::Gen(assurkit::testgen::small_space(), 20260810);
    const auto& sp = gen.space();
    for (int round = 0; round < 200; ++round) {
        auto pred = gen.random_pred(3, false);
        int var = gen.pick(sp.var_count());
        auto repl = gen.random_expr(var);
        auto substituted = subst(*pred, var, false, repl);
        State s = sp.initial_state();
        do {
            State updated = s;
            updated[static_cast<size_t>(var)] = eval_expr(*repl, s, s);
            REQUIRE(eval_pred(*substituted, s) == eval_pred(*pred, updated));
        } while (sp.next_state(s));
    }
}

TEST_CASE("execution of the core constructs") {
    auto sp = demo_space();
    auto s = state_of(*sp, {{"door.latch", "locked"}});

    SECTION("skip is the identity") {
        auto r = exec(*sp, *skip(), s);
        REQUIRE(r.has_value());
        CHECK(*r == std::set<State>{s});
    }
    SECTION("abort aborts") { CHECK_FALSE(exec(*sp, *abort_prog(), s).has_value()); }
    SECTION("a false guard blocks") {
        auto r = exec(*sp, *guard(pred_false(), skip()), s);
        REQUIRE(r.has_value());
        CHECK(r->empty());
    }
    SECTION("assignment updates one variable") {
        auto latch = var_ref(*sp, "door.latch");
        auto p = assign(*sp, "door.latch", label_lit(latch->domain, "unlocked"));
        auto r = exec(*sp, *p, s);
        REQUIRE(r.has_value());
        REQUIRE(r->size() == 1);
        CHECK(eval_pred(*eq(latch, label_lit(latch->domain, "unlocked")), *r->begin()));
    }
    SECTION("abort absorbs through choice and sequence") {
        CHECK_FALSE(exec(*sp, *choice(skip(), abort_prog()), s).has_value());
        CHECK_FALSE(exec(*sp, *seq(skip(), abort_prog()), s).has_value());
        // ... but a blocked abort is no abort at all
        auto r = exec(*sp, *guard(pred_false(), abort_prog()), s);
        REQUIRE(r.has_value());
        CHECK(r->empty());
    }
    SECTION("havoc ranges over the variable's domain only") {
        auto r = exec(*sp, *havoc(*sp, "door.count"), s);
        REQUIRE(r.has_value());
        CHECK(r->size() == 4);
        for (const auto& t : *r) {
            CHECK(t[0] == s[0]);
            CHECK(t[2] == s[2]);
        }
    }
    SECTION("frames restore out-of-namespace variables") {
        auto body = rel_spec(pred_true());
        auto fr = frame(*sp, "door", body);
        auto r = exec(*sp, *fr, s);
        REQUIRE(r.has_value());
        CHECK(r->size() == 2 * 4);
        for (const auto& t : *r) CHECK(t[2] == s[2]);
    }
    SECTION("frame bodies may not reach outside their namespace") {
        auto bad = assign(*sp, "sys.ok", literal(Domain::boolean(), 1));
        CHECK_THROWS_AS(frame(*sp, "door", bad), TypeError);
    }
    SECTION("relational specification selects exactly the related successors") {
        auto count = var_ref(*sp, "door.count");
        auto countp = var_ref(*sp, "door.count", true);
        auto rel = frame(*sp, "door.count", rel_spec(le(count, countp)));
        auto s1 = state_of(*sp, {{"door.count", "2"}});
        auto r = exec(*sp, *rel, s1);
        REQUIRE(r.has_value());
        CHECK(r->size() == 2);  // 2 and 3
    }
}

TEST_CASE("wp equations") {
    auto sp = demo_space();
    auto latch = var_ref(*sp, "door.latch");
    auto locked = label_lit(latch->domain, "locked");
    auto unlocked = label_lit(latch->domain, "unlocked");
    auto q = eq(latch, unlocked);

    SECTION("skip") { CHECK(wp(*sp, *skip(), q) == q); }
    SECTION("abort") { CHECK(wp(*sp, *abort_prog(), q)->kind == Pred::Kind::False); }
    SECTION("assignment substitutes and folds") {
        auto p = assign(*sp, "door.latch", locked);
        CHECK(wp(*sp, *p, q)->kind == Pred::Kind::False);
        auto p2 = assign(*sp, "door.latch", unlocked);
        CHECK(wp(*sp, *p2, q)->kind == Pred::Kind::True);
    }
    SECTION("guarded command with a trivial postcondition") {
        auto g = eq(latch, locked);
        auto p = guard(g, assign(*sp, "door.latch", unlocked));
        CHECK(wp(*sp, *p, pred_true())->kind == Pred::Kind::True);
    }
    SECTION("choice takes the conjunction") {
        auto p = choice(assign(*sp, "door.latch", unlocked), skip());
        auto w = wp(*sp, *p, q);
        // both branches must establish q, so w reduces to q itself
        CHECK(pred_equiv(*sp, w, q));
    }
}

TEST_CASE("wp and exec agree on randomly generated programs") {
    auto gen = assurkit::testgen::Gen(assurkit::testgen::small_space(), 42);
    const auto& sp = gen.space();
    for (int round = 0; round < 300; ++round) {
        auto prog = gen.random_prog(4);
        auto post = gen.random_pred(3, false);
        PredPtr w;
        try {
            w = wp(sp, *prog, post);
        } catch (const SpaceTooLarge&) {
            continue;
        }
        State s = sp.initial_state();
        do {
            bool via_wp = eval_pred(*w, s);
            bool via_exec = assurkit::testgen::exec_guarantees(sp, *prog, s, *post);
            if (via_wp != via_exec) {
                INFO("program: " << print_prog(sp, *prog));
                INFO("post: " << print_pred(sp, *post));
                INFO("state:\n" << sp.render_state(s));
                REQUIRE(via_wp == via_exec);
            }
        } while (sp.next_state(s));
    }
}

TEST_CASE("wp algebraic identities") {
    auto gen = assurkit::testgen::Gen(assurkit::testgen::small_space(), 7);
    const auto& sp = gen.space();
    auto spp = gen.space_ptr();
    for (int round = 0; round < 100; ++round) {
        auto s1 = gen.random_prog(3);
        auto s2 = gen.random_prog(3);
        auto post = gen.random_pred(3, false);
        SECTION("") {}
        // choice is commutative
        CHECK(pred_equiv(*spp, wp(sp, *choice(s1, s2), post), wp(sp, *choice(s2, s1), post)));
        // skip is a left unit of sequence
        CHECK(pred_equiv(*spp, wp(sp, *seq(skip(), s1), post), wp(sp, *s1, post)));
        // framing over the whole namespace changes nothing
        try {
            auto framed = frame(sp, "m", s1);
            CHECK(pred_equiv(*spp, wp(sp, *framed, post), wp(sp, *s1, post)));
        } catch (const TypeError&) {
        }
    }
}

TEST_CASE("execution preserves domains") {
    auto gen = assurkit::testgen::Gen(assurkit::testgen::small_space(), 99);
    const auto& sp = gen.space();
    for (int round = 0; round < 100; ++round) {
        auto prog = gen.random_prog(4);
        State s = sp.initial_state();
        do {
            auto r = exec(sp, *prog, s);
            if (!r) continue;
            for (const auto& t : *r) {
                REQUIRE(t.size() == s.size());
                for (size_t i = 0; i < t.size(); ++i) {
                    REQUIRE(t[i] >= 0);
                    REQUIRE(t[i] < sp.var(static_cast<int>(i)).domain.size());
                }
            }
        } while (sp.next_state(s));
    }
}

TEST_CASE("validity and counterexamples") {
    auto sp = demo_space();
    CHECK(valid(*sp, *pred_true()).valid);

    auto latch = var_ref(*sp, "door.latch");
    auto r = valid(*sp, *eq(latch, label_lit(latch->domain, "locked")));
    CHECK_FALSE(r.valid);
    REQUIRE(r.counterexample.has_value());
    // first falsifying state in declaration order: latch is the most
    // significant variable, so the counterexample has it unlocked
    CHECK((*r.counterexample)[0] == 1);
    CHECK((*r.counterexample)[1] == 0);

    CHECK_THROWS_AS(valid(*sp, *pred_true(), 4), SpaceTooLarge);
}

TEST_CASE("obligation checking") {
    auto sp = demo_space();
    auto latch = var_ref(*sp, "door.latch");
    auto unlocked = label_lit(latch->domain, "unlocked");

    SECTION("a false precondition passes vacuously") {
        Obligation ob;
        ob.gid = "vacuous";
        ob.space = sp;
        ob.form = Obligation::Form::Hoare;
        ob.pre = pred_false();
        ob.prog = abort_prog();
        ob.post = pred_false();
        CHECK(check_obligation(ob).pass);
    }
    SECTION("skip cannot establish false") {
        Obligation ob;
        ob.gid = "skip_false";
        ob.space = sp;
        ob.form = Obligation::Form::Hoare;
        ob.pre = pred_true();
        ob.prog = skip();
        ob.post = pred_false();
        auto v = check_obligation(ob);
        CHECK_FALSE(v.pass);
        CHECK(v.counterexample.has_value());
    }
    SECTION("reach_pre is guard-sensitive") {
        auto unlock = guard(eq(latch, label_lit(latch->domain, "locked")),
                            assign(*sp, "door.latch", unlocked));
        auto pre = reach_pre(*sp, *unlock, eq(latch, unlocked));
        // only locked states can reach the unlocked door through this program
        auto expect = eq(latch, label_lit(latch->domain, "locked"));
        CHECK(pred_equiv(*sp, pre, expect));
    }
}
