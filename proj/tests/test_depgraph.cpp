// Tests for the dependency graph, change propagation, DOT export, and the
// incremental-equals-full contract.
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "assurkit/corpus.hpp"

using namespace assurkit;

namespace {

const std::string kCorpusDir = ASSURKIT_CORPUS_DIR;

size_t count_substr(const std::string& hay, const std::string& needle) {
    size_t n = 0;
    for (size_t at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("graph derivation") {
    SECTION("relationships point at their endpoints") {
        auto [st, report] = engine::full_check(
            {{"d.asr", "DOCUMENT D\n"
                       "CLAIM Claim_A CONTENT \"a\"\n"
                       "CLAIM Claim_B CONTENT \"b\"\n"
                       "ASSERTED_INFERENCE Rel_A SOURCE Claim_A TARGET Claim_B\n"}});
        const auto& uses = st.graph.uses.at("Rel_A");
        CHECK(uses.count("Claim_A"));
        CHECK(uses.count("Claim_B"));
    }
    SECTION("an empty model yields a graph with no entity nodes") {
        auto [st, report] = engine::full_check({{"d.asr", ""}});
        // just the document node for the empty file
        CHECK(st.graph.nodes == std::set<std::string>{"doc:d"});
    }
    SECTION("obligations depend on the definitions they mention") {
        auto [st, report] = engine::full_check(
            {{"m.gcl", "VAR x : bool\nPROG Flip = x := true\nPROG Outer = Flip\n"},
             {"d.asr", "DOCUMENT D\nOBLIGATION T SPEC \"hoare {true} Outer {x = true}\"\n"}});
        const auto& uses = st.graph.uses.at("T");
        CHECK(uses.count("gcl:Outer"));
        CHECK(uses.count("gcl:#space"));
        // and the definition chain is recorded
        CHECK(st.graph.uses.at("gcl:Outer").count("gcl:Flip"));
    }
}

TEST_CASE("affected sets") {
    auto [st, report] = engine::full_check(
        {{"d.asr", "DOCUMENT D\n"
                   "CLAIM Claim_A CONTENT \"a\"\n"
                   "CLAIM Claim_B CONTENT \"b\"\n"
                   "ASSERTED_INFERENCE Rel_A SOURCE Claim_A TARGET Claim_B\n"
                   "TEXT \"see @{AssertedInference Rel_A}\"\n"}});

    SECTION("transitive reverse dependents") {
        auto out = dep::affected(st.graph, {"Claim_A"});
        CHECK(out == std::set<std::string>{"Claim_A", "Rel_A", "text:D:1"});
    }
    SECTION("nothing changed, nothing affected") {
        CHECK(dep::affected(st.graph, {}).empty());
    }
    SECTION("changed nodes are always affected, and growth is monotone") {
        std::set<std::string> one = {"Claim_B"};
        std::set<std::string> two = {"Claim_B", "Claim_A"};
        auto a1 = dep::affected(st.graph, one);
        auto a2 = dep::affected(st.graph, two);
        CHECK(std::includes(a1.begin(), a1.end(), one.begin(), one.end()));
        CHECK(std::includes(a2.begin(), a2.end(), a1.begin(), a1.end()));
    }
}

TEST_CASE("dot export") {
    SECTION("empty model") {
        sacm::ArgumentModel empty;
        CHECK(dep::export_dot(empty) == "digraph assurance { }\n");
    }
    SECTION("a dangling target renders as a placeholder") {
        auto [st, report] = engine::full_check(
            {{"d.asr", "DOCUMENT D\n"
                       "CLAIM Claim_A CONTENT \"a\"\n"
                       "ASSERTED_INFERENCE Rel_A SOURCE Claim_A TARGET Claim_B\n"}});
        auto dot = dep::export_dot(st.model);
        // three nodes (one dashed) and two edges
        CHECK(count_substr(dot, "style=dashed") == 1);
        CHECK(count_substr(dot, " -> ") == 2);
        CHECK(dot.find("\"Claim_B\"") != std::string::npos);
    }
    SECTION("the argument fragment shows its five claims") {
        auto inputs = tokeneer::corpus_inputs(kCorpusDir);
        std::vector<engine::Input> fragment;
        for (auto& in : inputs)
            if (in.path.find("argument.asr") != std::string::npos) fragment.push_back(in);
        auto [st, report] = engine::full_check(fragment);
        auto dot = dep::export_dot(st.model);
        CHECK(count_substr(dot, "shape=box, label=") == 5);
        // counter edges are styled; none exist here
        CHECK(dot.find("color=red, style=dashed") == std::string::npos);
    }
    SECTION("deterministic output") {
        auto inputs = tokeneer::corpus_inputs(kCorpusDir);
        auto [st1, r1] = engine::full_check(inputs);
        auto [st2, r2] = engine::full_check(inputs);
        CHECK(dep::export_dot(st1.model) == dep::export_dot(st2.model));
    }
}

TEST_CASE("incremental rechecking") {
    auto inputs = tokeneer::corpus_inputs(kCorpusDir);
    auto [st, first] = engine::full_check(inputs);
    REQUIRE(has_errors(first.diagnostics) == false);

    SECTION("a no-op edit affects nothing") {
        auto argument = inputs[2];
        REQUIRE(argument.path.find("argument.asr") != std::string::npos);
        argument.source += "\n# a trailing comment\n";
        auto report = engine::incremental_check(st, {argument});
        CHECK(report.changed.empty());
        CHECK(report.affected.empty());
        CHECK(render_all(report.diagnostics) == render_all(first.diagnostics));
    }
    SECTION("restoring a missing entity clears the errors it caused") {
        // drop the C4 claim, then put it back
        auto argument = inputs[2];
        auto parsed = dsl::parse_document(argument.source, argument.path);
        auto pruned = parsed.document;
        pruned.commands.erase(
            std::remove_if(pruned.commands.begin(), pruned.commands.end(),
                           [](const dsl::Command& c) {
                               const auto* claim = std::get_if<dsl::ClaimCmd>(&c.form);
                               return claim && claim->gid.str() == "TIS_SFR1_C4";
                           }),
            pruned.commands.end());
        auto broken_edit = argument;
        broken_edit.source = dsl::print_document(pruned);
        auto broken_report = engine::incremental_check(st, {broken_edit});
        CHECK(has_errors(broken_report.diagnostics));

        auto restore_edit = argument;
        restore_edit.source = dsl::print_document(parsed.document);
        auto fixed_report = engine::incremental_check(st, {restore_edit});
        CHECK_FALSE(has_errors(fixed_report.diagnostics));
        // the dependents of the restored claim were rechecked
        CHECK(fixed_report.affected.count("TIS_SFR1_S1"));
        CHECK(fixed_report.affected.count("SFR1_PROOF"));
    }
    SECTION("editing the formal model re-verifies and degrades the argument") {
        auto model_file = inputs[3];
        REQUIRE(engine::is_gcl_path(model_file.path));
        // weaken the unlock guard: drop the token-removed conjunct
        auto at = model_file.source.find(
            "(tis.status = waitingRemoveTokenSuccess /\\ tis.userTokenPresence = absent)");
        REQUIRE(at != std::string::npos);
        model_file.source.replace(
            at, std::string("(tis.status = waitingRemoveTokenSuccess /\\ "
                            "tis.userTokenPresence = absent)")
                    .size(),
            "(tis.status = waitingRemoveTokenSuccess)");
        auto report = engine::incremental_check(st, {model_file});
        bool found_e030 = false;
        for (const auto& d : report.diagnostics)
            if (d.code == "E030" && d.subject == "TIS_FSFR1_SATISFACTION") found_e030 = true;
        CHECK(found_e030);
        CHECK(st.status.at(sacm::Gid::parse("TIS_SFR1_C1")) ==
              check::EffectiveStatus::NeedsSupport);
        CHECK(report.affected.count("TIS_FSFR1_SATISFACTION"));
        // the invariant obligation does not mention the unlock transition's
        // definition alone, but shares TISUserEntryOp, so it is re-verified too
        CHECK(report.affected.count("TIS_INV_PRESERVATION"));
    }
    SECTION("a one-claim edit touches a small corner of the graph") {
        auto requirements = inputs[0];
        REQUIRE(requirements.path.find("requirements.asr") != std::string::npos);
        auto at = requirements.source.find("audit alarm being raised");
        REQUIRE(at != std::string::npos);
        requirements.source.insert(at, "separate ");
        auto report = engine::incremental_check(st, {requirements});

        size_t entity_nodes = 0, affected_entities = 0;
        for (const auto& node : st.graph.nodes) {
            if (node.rfind("doc:", 0) == 0 || node.rfind("gcl:", 0) == 0) continue;
            ++entity_nodes;
            if (report.affected.count(node)) ++affected_entities;
        }
        CHECK(affected_entities >= 1);
        CHECK(affected_entities * 5 < entity_nodes);  // under 20%
    }
}

TEST_CASE("incremental equals full over random edit sequences") {
    auto inputs = tokeneer::corpus_inputs(kCorpusDir);
    std::mt19937_64 rng(97);
    auto pick = [&](size_t n) { return static_cast<size_t>(rng() % n); };

    auto [st, initial] = engine::full_check(inputs);
    std::map<std::string, std::string> current;
    for (const auto& in : inputs) current[in.path] = in.source;

    for (int round = 0; round < 40; ++round) {
        // mutate one file
        size_t which = pick(inputs.size());
        std::string path = inputs[which].path;
        std::string source = current[path];
        switch (pick(4)) {
            case 0:  // whitespace-only edit
                source += "\n# round " + std::to_string(round) + "\n";
                break;
            case 1: {  // append commentary referencing a random entity
                if (engine::is_gcl_path(path)) break;
                static const char* gids[] = {"TIS_SFR1_C1", "TIS", "Ghost_Entity",
                                             "TIS_FSFR1_SATISFACTION"};
                source += "\nTEXT \"round " + std::to_string(round) + " cites @{Artifact " +
                          gids[pick(4)] + "}\"\n";
                break;
            }
            case 2: {  // drop a random command
                if (engine::is_gcl_path(path)) break;
                auto parsed = dsl::parse_document(source, path);
                if (parsed.document.commands.empty()) break;
                auto doc = parsed.document;
                doc.commands.erase(doc.commands.begin() +
                                   static_cast<long>(pick(doc.commands.size())));
                source = dsl::print_document(doc);
                break;
            }
            default:  // restore the pristine file
                source = inputs[which].source;
        }
        current[path] = source;

        auto incremental = engine::incremental_check(st, {{path, source}});

        std::vector<engine::Input> fresh;
        for (const auto& [p, s] : current) fresh.push_back({p, s});
        auto [fresh_state, full] = engine::full_check(fresh);

        if (render_all(incremental.diagnostics) != render_all(full.diagnostics)) {
            INFO("round " << round << " editing " << path);
            INFO("incremental:\n" << render_all(incremental.diagnostics));
            INFO("full:\n" << render_all(full.diagnostics));
            REQUIRE(render_all(incremental.diagnostics) == render_all(full.diagnostics));
        }
    }
}
