// Tests for the argumentation model: construction invariants, insertion,
// resolution, reference collection, and JSON export.
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <catch2/catch_amalgamated.hpp>

#include "assurkit/sacm_json.hpp"
#include "assurkit/sacm_model.hpp"

using namespace assurkit::sacm;

namespace {

Gid g(const char* s) { return Gid::parse(s); }

ArgumentModel sample_model() {
    ArgumentModel m;
    m = *add_asset(m, make_claim(g("TIS_SFR1_C1"), MultiLangString::text("top claim")));
    m = *add_artifact(m, make_artifact(g("TIS"), ArtifactKind::Resource, "1.0", "2019-03-01",
                                       MultiLangString::text("system specification")));
    m = *add_expression(m, ExpressionEntity(g("SFR1"), "en", "unlock needs credentials"));
    m = *add_obligation(m, ObligationEntity(g("THM"), "hoare {true} skip {true}"));
    return m;
}

}  // namespace

TEST_CASE("identifiers") {
    CHECK(Gid::valid("TIS_SFR1_C1"));
    CHECK(Gid::valid("_x9"));
    CHECK_FALSE(Gid::valid(""));
    CHECK_FALSE(Gid::valid("9x"));
    CHECK_FALSE(Gid::valid("a-b"));
    CHECK_FALSE(Gid::valid("a b"));
    CHECK_THROWS_AS(Gid::parse("a.b"), ModelError);
}

TEST_CASE("construction invariants") {
    CHECK_THROWS_AS(MultiLangString::of({}), ModelError);
    CHECK_THROWS_AS(make_artifact_reference(g("R"), MultiLangString::text("x"), {}), ModelError);
    CHECK_THROWS_AS(make_relationship(g("R"), MultiLangString::text("x"), RelKind::Inference,
                                      false, {}, {{g("B"), {}}}),
                    ModelError);
    // source and target must not overlap
    CHECK_THROWS_AS(make_relationship(g("R"), MultiLangString::text("x"), RelKind::Inference,
                                      false, {{g("A"), {}}}, {{g("A"), {}}}),
                    ModelError);
    CHECK_THROWS_AS(ExpressionEntity(g("E"), "en", ""), ModelError);
    CHECK_THROWS_AS(
        make_artifact(g("A"), ArtifactKind::Artifact, "1", "bad", MultiLangString::text("x")),
        ModelError);
    CHECK(is_iso_date("2019-03-01"));
    CHECK_FALSE(is_iso_date("2019-13-01"));
    CHECK_FALSE(is_iso_date("2019-3-1"));
}

TEST_CASE("insertion keeps the namespace globally unique") {
    auto m = sample_model();
    CHECK(m.assets.size() == 1);

    // adding, then resolving, returns the same asset
    auto m2 = add_asset(m, make_claim(g("C2"), MultiLangString::text("second")));
    REQUIRE(m2.has_value());
    auto r = resolve(*m2, EntityKind::Claim, g("C2"));
    REQUIRE(r.found());
    CHECK(r.asset->gid == g("C2"));
    // the original model is untouched
    CHECK_FALSE(exists(m, g("C2")));

    // duplicates are refused across all four namespaces
    CHECK_FALSE(add_asset(*m2, make_claim(g("C2"), MultiLangString::text("dup"))).has_value());
    CHECK_FALSE(add_asset(*m2, make_claim(g("TIS"), MultiLangString::text("dup"))).has_value());
    CHECK_FALSE(
        add_artifact(*m2, make_artifact(g("SFR1"), ArtifactKind::Artifact, "1", "2019-01-01",
                                        MultiLangString::text("x")))
            .has_value());
    CHECK_FALSE(add_obligation(*m2, ObligationEntity(g("TIS_SFR1_C1"), "s")).has_value());
}

TEST_CASE("resolution distinguishes absence from kind mismatch") {
    auto m = sample_model();

    auto absent = resolve(m, EntityKind::AssertedInference, g("Rel_A"));
    CHECK(absent.status == Resolution::Status::Absent);

    auto mismatch = resolve(m, EntityKind::Claim, g("TIS"));
    CHECK(mismatch.status == Resolution::Status::KindMismatch);

    // the generic Artifact kind matches a resource element
    CHECK(resolve(m, EntityKind::Artifact, g("TIS")).found());
    CHECK(resolve(m, EntityKind::Resource, g("TIS")).found());
    CHECK(resolve(m, EntityKind::Activity, g("TIS")).status ==
          Resolution::Status::KindMismatch);

    // Constant is an alias kind for expressions
    CHECK(resolve(m, EntityKind::Constant, g("SFR1")).found());
    CHECK(resolve(m, EntityKind::Expression, g("SFR1")).found());

    CHECK(resolve(m, EntityKind::Obligation, g("THM")).found());

    // a gid never resolves in two of the four namespaces
    for (const char* name : {"TIS_SFR1_C1", "TIS", "SFR1", "THM"}) {
        int hits = 0;
        hits += m.assets.count(g(name));
        hits += m.artifacts.count(g(name));
        hits += m.expressions.count(g(name));
        hits += m.obligations.count(g(name));
        CHECK(hits == 1);
    }
}

TEST_CASE("reference collection preserves document order") {
    auto mls = MultiLangString::of({
        Fragment::text("see "),
        Fragment::ref(EntityKind::Artifact, g("TIS")),
        Fragment::formal("gcl", "x = 1"),
        Fragment::ref(EntityKind::Constant, g("TIS_model")),
    });
    auto refs = collect_refs(mls);
    REQUIRE(refs.size() == 2);
    CHECK(refs[0].target == g("TIS"));
    CHECK(*refs[0].ref_kind == EntityKind::Artifact);
    CHECK(refs[1].target == g("TIS_model"));
    CHECK(*refs[1].ref_kind == EntityKind::Constant);

    CHECK(collect_refs(MultiLangString::text("plain")).empty());
}

TEST_CASE("json export") {
    auto m = sample_model();
    auto j = to_json(m);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"assets", "artifacts", "expressions", "obligations"});
    CHECK(j["assets"]["TIS_SFR1_C1"]["kind"] == "Claim");
    CHECK(j["artifacts"]["TIS"]["kind"] == "resource");
    CHECK(j["artifacts"]["TIS"]["date"] == "2019-03-01");
    CHECK(j["expressions"]["SFR1"]["body"] == "unlock needs credentials");
    CHECK(j["obligations"]["THM"]["parses"] == false);

    // fragments are tagged objects
    auto mls = MultiLangString::of(
        {Fragment::text("see "), Fragment::ref(EntityKind::Claim, g("C"))});
    auto jf = to_json(mls);
    CHECK(jf[0]["t"] == "text");
    CHECK(jf[1]["t"] == "ref");
    CHECK(jf[1]["target"] == "C");

    // export is deterministic
    CHECK(to_json(m).dump(2) == to_json(sample_model()).dump(2));
}
