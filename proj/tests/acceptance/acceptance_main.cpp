// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>

#include "assurkit/corpus.hpp"
#include "assurkit/report.hpp"
#include "../gcl_gen.hpp"

using namespace assurkit;
using namespace assurkit::tokeneer;

namespace {

const std::string kCorpusDir = ASSURKIT_CORPUS_DIR;
const std::string kCliPath = ASSURKIT_CLI_PATH;

int failures = 0;

void verdict_line(int number, const std::string& name, bool pass,
                  const std::string& detail = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << number << ". " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// The shipped corpus, parsed fresh.
std::vector<engine::Input> corpus() { return corpus_inputs(kCorpusDir); }

gcl::GclRegistry corpus_registry() {
    gcl::GclRegistry reg;
    for (const auto& in : corpus())
        if (engine::is_gcl_path(in.path))
            gcl::parse_model_file(gcl::TextSource::from_file_content(in.source, in.path), reg);
    return reg;
}

gcl::Obligation corpus_obligation(const gcl::GclRegistry& reg, const std::string& gid,
                                  const std::string& spec) {
    auto src = gcl::TextSource::from_file_content(spec, "acceptance");
    return gcl::parse_obligation_spec(src, reg, gid).obligation;
}

// --- criterion 1: the invariant-preservation obligation holds ---------------

void criterion_1() {
    auto reg = corpus_registry();
    bool desk_scale = reg.space().state_count(1000000) <= 1000000;
    auto ob = corpus_obligation(reg, "TIS_INV_PRESERVATION",
                                "hoare {TISInv} TISUserEntryOp {TISInv}");
    auto t0 = std::chrono::steady_clock::now();
    auto verdict = gcl::check_obligation(ob);
    double secs = seconds_since(t0);
    verdict_line(1, "invariant preservation holds on the shipped model",
                 verdict.pass && desk_scale && secs < 60.0,
                 "space=" + std::to_string(reg.space().state_count(1000000)) + " states, " +
                     std::to_string(secs) + "s");
}

// --- criterion 2: the unlock-security obligation holds ----------------------

void criterion_2() {
    auto reg = corpus_registry();
    auto ob = corpus_obligation(
        reg, "TIS_FSFR1_SATISFACTION",
        "wp {TISInv /\\ tis.currentLatch = locked} TISUserEntryOp ; TISUpdate "
        "{rw.ctrl.latch = unlocked} implies "
        "{tis.userTokenOK /\\ tis.fingerOK \\/ tis.userTokenWithOKAuthCert}");
    auto t0 = std::chrono::steady_clock::now();
    auto verdict = gcl::check_obligation(ob);
    double secs = seconds_since(t0);
    verdict_line(2, "unlock requires credentials on the shipped model", verdict.pass && secs < 120.0,
                 std::to_string(secs) + "s");
}

// --- criterion 3: guard mutations flip the unlock obligation ----------------

void criterion_3() {
    using UG = BuildOptions::UnlockGuard;
    struct Mutant {
        UG guard;
        const char* name;
    };
    std::array<Mutant, 4> mutants = {{{UG::DropTokenAbsent, "drop token-removed conjunct"},
                                      {UG::AlsoFromWaitingFinger, "unlock from waitingFinger"},
                                      {UG::RequireTokenPresent, "inverted removal check"},
                                      {UG::AnyStatus, "ignore the status"}}};
    bool all_detected = true;
    for (const auto& mutant : mutants) {
        BuildOptions opt;
        opt.unlock_guard = mutant.guard;
        auto m = build_model(opt);
        auto verdict = gcl::check_obligation(unlock_requires_credentials(m));
        bool detected = !verdict.pass && verdict.counterexample.has_value();
        std::cout << "  mutant `" << mutant.name << "`: "
                  << (detected ? "detected" : "MISSED") << "\n";
        if (detected)
            std::cout << "    counterexample: "
                      << check::render_state_inline(*m.space, *verdict.counterexample) << "\n";
        all_detected = all_detected && detected;
    }
    verdict_line(3, "all unlock-guard mutants are detected with counterexamples", all_detected,
                 std::to_string(mutants.size()) + " mutants");
}

// --- criterion 4: wp agrees with execution ----------------------------------

void criterion_4() {
    auto gen = testgen::Gen(testgen::small_space(), 20260810);
    const auto& sp = gen.space();
    int programs = 0, discrepancies = 0;
    while (programs < 1000) {
        auto prog = gen.random_prog(4);
        auto post = gen.random_pred(3, false);
        gcl::PredPtr w;
        try {
            w = gcl::wp(sp, *prog, post);
        } catch (const gcl::SpaceTooLarge&) {
            continue;
        }
        ++programs;
        gcl::State s = sp.initial_state();
        do {
            bool via_wp = gcl::eval_pred(*w, s);
            bool via_exec = testgen::exec_guarantees(sp, *prog, s, *post);
            if (via_wp != via_exec) {
                ++discrepancies;
                std::cout << "  discrepancy on " << gcl::print_prog(sp, *prog) << "\n";
                break;
            }
        } while (sp.next_state(s));
    }
    verdict_line(4, "wp matches exhaustive execution on random programs", discrepancies == 0,
                 std::to_string(programs) + " programs, " + std::to_string(discrepancies) +
                     " discrepancies");
}

// --- criterion 5: dangling-reference behaviour ------------------------------

void criterion_5() {
    const std::string text =
        "DOCUMENT Fig\n"
        "CLAIM Claim_A CONTENT \"the premise\"\n"
        "ASSERTED_INFERENCE Rel_A SOURCE Claim_A TARGET Claim_B\n"
        "TEXT \"as shown by @{AssertedInference Rel_A}\"\n";
    auto [st, report] = engine::full_check({{"dangling.asr", text}});

    std::vector<Diagnostic> errors;
    for (const auto& d : report.diagnostics)
        if (d.severity == Severity::Error) errors.push_back(d);

    bool ok = errors.size() == 2;
    // E010 on the dangling TARGET gid: line 3, the Claim_B token
    ok = ok && errors[0].code == "E010" && errors[0].span.start_line == 3 &&
         errors[0].span.start_col == 48 && errors[0].message == "`Claim_B` does not exist";
    // E011 on the antiquotation of the failed relationship: line 4, at `@{`
    ok = ok && errors[1].code == "E011" && errors[1].span.start_line == 4 &&
         errors[1].span.start_col == 19 && errors[1].message == "`Rel_A` does not exist";

    auto [st2, fixed] = engine::full_check(
        {{"dangling.asr", text + "CLAIM Claim_B CONTENT \"the conclusion\"\n"}});
    ok = ok && !has_errors(fixed.diagnostics);

    verdict_line(5, "dangling target and antiquotation yield exactly two positioned errors",
                 ok);
}

// --- criterion 6: corpus soundness ------------------------------------------

void criterion_6() {
    auto [st, report] = engine::full_check(corpus());
    bool clean = !has_errors(report.diagnostics);
    bool top_supported =
        st.status.at(sacm::Gid::parse("TIS_SFR1_C1")) == check::EffectiveStatus::Supported;

    // deleting the formal satisfaction claim degrades the argument
    auto inputs = corpus();
    for (auto& in : inputs) {
        if (in.path.find("argument.asr") == std::string::npos) continue;
        auto parsed = dsl::parse_document(in.source, in.path);
        auto doc = parsed.document;
        doc.commands.erase(std::remove_if(doc.commands.begin(), doc.commands.end(),
                                          [](const dsl::Command& c) {
                                              const auto* claim =
                                                  std::get_if<dsl::ClaimCmd>(&c.form);
                                              return claim &&
                                                     claim->gid.str() == "TIS_SFR1_C4";
                                          }),
                           doc.commands.end());
        in.source = dsl::print_document(doc);
    }
    auto [st2, degraded] = engine::full_check(inputs);
    bool degrades = st2.status.at(sacm::Gid::parse("TIS_SFR1_C1")) ==
                    check::EffectiveStatus::NeedsSupport;

    verdict_line(6, "the shipped corpus checks cleanly and grounds its top claim",
                 clean && top_supported && degrades);
}

// --- criterion 7: incremental equals full -----------------------------------

void criterion_7() {
    auto inputs = corpus();
    std::mt19937_64 rng(7001);
    auto pick = [&](size_t n) { return static_cast<size_t>(rng() % n); };

    auto [st, initial] = engine::full_check(inputs);
    std::map<std::string, std::string> current;
    for (const auto& in : inputs) current[in.path] = in.source;

    int rounds = 200, mismatches = 0;
    for (int round = 0; round < rounds; ++round) {
        size_t which = pick(inputs.size());
        std::string path = inputs[which].path;
        std::string source = current[path];
        switch (pick(5)) {
            case 0:
                source += "\n# noise " + std::to_string(round) + "\n";
                break;
            case 1: {
                if (engine::is_gcl_path(path)) break;
                static const char* gids[] = {"TIS_SFR1_C1", "TIS", "Missing_One",
                                             "TIS_INV_PRESERVATION", "SFR1"};
                source += "\nTEXT \"round " + std::to_string(round) + " cites @{Artifact " +
                          gids[pick(5)] + "}\"\n";
                break;
            }
            case 2: {
                if (engine::is_gcl_path(path)) break;
                auto parsed = dsl::parse_document(source, path);
                if (parsed.document.commands.empty()) break;
                auto doc = parsed.document;
                doc.commands.erase(doc.commands.begin() +
                                   static_cast<long>(pick(doc.commands.size())));
                source = dsl::print_document(doc);
                break;
            }
            case 3: {
                // a small formal edit now and then: rename-safe whitespace in .gcl
                if (!engine::is_gcl_path(path)) break;
                source += "\n# formal noise " + std::to_string(round) + "\n";
                break;
            }
            default:
                source = inputs[which].source;  // restore pristine
        }
        current[path] = source;

        auto incremental = engine::incremental_check(st, {{path, source}});
        std::vector<engine::Input> fresh;
        for (const auto& [p, s] : current) fresh.push_back({p, s});
        auto [fresh_state, full] = engine::full_check(fresh);
        if (render_all(incremental.diagnostics) != render_all(full.diagnostics)) {
            ++mismatches;
            std::cout << "  mismatch at round " << round << " editing " << path << "\n";
        }
    }

    // a one-claim content edit reaches a small corner of the graph
    auto [wst, wreport] = engine::full_check(corpus());
    auto requirements = corpus()[0];
    auto at = requirements.source.find("audit alarm being raised");
    requirements.source.insert(at, "separate ");
    auto touched = engine::incremental_check(wst, {requirements});
    size_t entity_nodes = 0, affected_entities = 0;
    for (const auto& node : wst.graph.nodes) {
        if (node.rfind("doc:", 0) == 0 || node.rfind("gcl:", 0) == 0) continue;
        ++entity_nodes;
        if (touched.affected.count(node)) ++affected_entities;
    }
    bool small_touch = affected_entities >= 1 && affected_entities * 5 < entity_nodes;

    verdict_line(7, "incremental rechecking matches a from-scratch check",
                 mismatches == 0 && small_touch,
                 std::to_string(rounds) + " rounds, " + std::to_string(mismatches) +
                     " mismatches; one-claim edit touches " +
                     std::to_string(affected_entities) + "/" + std::to_string(entity_nodes) +
                     " entities");
}

// --- criterion 8: byte-identical tool output --------------------------------

std::string run_cli(const std::string& args) {
    std::string cmd = kCliPath + " " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
}

void criterion_8() {
    std::string args = "check --format json";
    for (const auto& name : corpus_files()) args += " " + kCorpusDir + "/" + name;
    auto first = run_cli(args);
    auto second = run_cli(args);
    bool ok = !first.empty() && first == second;
    verdict_line(8, "repeated json runs are byte-identical", ok,
                 std::to_string(first.size()) + " bytes");
}

}  // namespace

int main() {
    std::cout << "assurkit acceptance suite\n";
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    std::cout << (failures == 0 ? "all criteria hold\n"
                                : std::to_string(failures) + " criteria failed\n");
    return failures == 0 ? 0 : 1;
}
