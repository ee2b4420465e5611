// assurkit - check assurance documents, discharge their formal obligations,
// and render argument graphs and reports
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <sys/stat.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "assurkit/engine.hpp"
#include "assurkit/report.hpp"
#include "assurkit/sacm_json.hpp"

namespace {

using namespace assurkit;

struct CommonOptions {
    std::vector<std::string> paths;
    std::string format = "text";
    bool fail_on_warnings = false;
    std::int64_t state_cap = gcl::configured_state_cap();
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("files", opt.paths, "input files (.asr documents, .gcl models)")
        ->required()
        ->expected(-1);
    cmd->add_option("--state-cap", opt.state_cap,
                    "largest state space an obligation may enumerate");
}

std::optional<std::vector<engine::Input>> load_inputs(const CommonOptions& opt) {
    std::vector<engine::Input> inputs;
    for (const auto& path : opt.paths) {
        auto source = engine::read_file(path);
        if (!source) {
            std::cerr << "assurkit: cannot read " << path << "\n";
            return std::nullopt;
        }
        inputs.push_back(engine::Input{path, std::move(*source)});
    }
    return inputs;
}

nlohmann::ordered_json diagnostics_json(const std::vector<Diagnostic>& diags) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& d : diags) {
        nlohmann::ordered_json j;
        j["severity"] = d.severity == Severity::Error ? "error" : "warning";
        j["code"] = d.code;
        j["file"] = d.span.file;
        j["line"] = d.span.start_line;
        j["col"] = d.span.start_col;
        j["endLine"] = d.span.end_line;
        j["endCol"] = d.span.end_col;
        j["message"] = d.message;
        if (d.subject) j["subject"] = *d.subject;
        arr.push_back(std::move(j));
    }
    return arr;
}

void print_diagnostics(const std::vector<Diagnostic>& diags, const std::string& format) {
    if (format == "json") {
        std::cout << diagnostics_json(diags).dump(2) << "\n";
    } else {
        for (const auto& d : diags) std::cout << d.render() << "\n";
    }
}

int exit_code(const std::vector<Diagnostic>& diags, bool fail_on_warnings) {
    for (const auto& d : diags) {
        if (d.severity == Severity::Error) return 1;
        if (fail_on_warnings) return 1;
    }
    return 0;
}

bool write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "assurkit: cannot write " << path << "\n";
        return false;
    }
    out << content;
    return true;
}

/// Render DOT to SVG through graphviz when it is installed.
std::string render_svg(const std::string& dot) {
    std::string tmp_dot = "/tmp/assurkit_graph.dot";
    std::string tmp_svg = "/tmp/assurkit_graph.svg";
    if (!write_text(tmp_dot, dot)) return "";
    std::string cmd = "dot -Tsvg " + tmp_dot + " -o " + tmp_svg + " 2>/dev/null";
    if (std::system(cmd.c_str()) != 0) return "";
    auto svg = engine::read_file(tmp_svg);
    if (!svg) return "";
    // strip everything before the <svg> element so it can be inlined
    auto at = svg->find("<svg");
    return at == std::string::npos ? "" : svg->substr(at);
}

int run_check(const CommonOptions& opt, const std::string& model_json_path) {
    auto inputs = load_inputs(opt);
    if (!inputs) return 2;
    auto [st, report] = engine::full_check(*inputs, opt.state_cap);
    print_diagnostics(report.diagnostics, opt.format);
    if (!model_json_path.empty() &&
        !write_text(model_json_path, sacm::to_json(st.model).dump(2) + "\n"))
        return 2;
    return exit_code(report.diagnostics, opt.fail_on_warnings);
}

int run_verify(const CommonOptions& opt, const std::string& only) {
    auto inputs = load_inputs(opt);
    if (!inputs) return 2;
    auto [st, report] = engine::full_check(*inputs, opt.state_cap);

    bool any_fail = false, any = false;
    for (const auto& [gid, ob] : st.model.obligations) {
        if (!only.empty() && gid.str() != only) continue;
        any = true;
        auto v = st.verdicts.find(gid);
        if (!ob.parsed || v == st.verdicts.end()) {
            std::cout << gid.str() << ": Fail (specification does not parse)\n";
            any_fail = true;
            continue;
        }
        if (v->second.pass) {
            std::cout << gid.str() << ": Pass\n";
        } else {
            std::cout << gid.str() << ": Fail\n";
            if (v->second.counterexample)
                std::cout << "  counterexample:\n"
                          << ob.parsed->space->render_state(*v->second.counterexample);
            any_fail = true;
        }
    }
    if (!only.empty() && !any) {
        std::cerr << "assurkit: no obligation named `" << only << "`\n";
        return 2;
    }
    return any_fail ? 1 : 0;
}

int run_graph(const CommonOptions& opt, const std::string& dot_path) {
    auto inputs = load_inputs(opt);
    if (!inputs) return 2;
    auto [st, report] = engine::full_check(*inputs, opt.state_cap);
    if (!write_text(dot_path, dep::export_dot(st.model))) return 2;
    return exit_code(report.diagnostics, opt.fail_on_warnings);
}

int run_report(const CommonOptions& opt, const std::string& html_path) {
    auto inputs = load_inputs(opt);
    if (!inputs) return 2;
    auto [st, report] = engine::full_check(*inputs, opt.state_cap);

    std::string dot = dep::export_dot(st.model);
    std::string svg = render_svg(dot);
    std::string dot_href;
    if (svg.empty()) {
        dot_href = html_path + ".dot";
        if (!write_text(dot_href, dot)) return 2;
    }
    if (!write_text(html_path, report::html_report(st, svg, dot_href))) return 2;
    std::cout << "report written to " << html_path << "\n";
    return exit_code(report.diagnostics, opt.fail_on_warnings);
}

std::map<std::string, std::int64_t> stat_mtimes(const std::vector<std::string>& paths) {
    std::map<std::string, std::int64_t> out;
    for (const auto& p : paths) {
        struct stat sb {};
        out[p] = ::stat(p.c_str(), &sb) == 0
                     ? static_cast<std::int64_t>(sb.st_mtime) * 1000000 + sb.st_size
                     : -1;
    }
    return out;
}

int run_watch(const CommonOptions& opt) {
    auto inputs = load_inputs(opt);
    if (!inputs) return 2;
    auto [st, report] = engine::full_check(*inputs, opt.state_cap);
    print_diagnostics(report.diagnostics, opt.format);
    std::cout << "-- watching " << opt.paths.size() << " file(s); ctrl-c to stop --"
              << std::endl;

    auto mtimes = stat_mtimes(opt.paths);
    while (true) {
        std::this_thread::sleep_for(std::chrono::milliseconds(100));
        auto fresh = stat_mtimes(opt.paths);
        std::set<std::string> touched;
        for (const auto& [path, stamp] : fresh)
            if (mtimes[path] != stamp) touched.insert(path);
        if (touched.empty()) continue;
        // debounce: wait for the burst to settle
        while (true) {
            std::this_thread::sleep_for(std::chrono::milliseconds(100));
            auto again = stat_mtimes(opt.paths);
            if (again == fresh) break;
            for (const auto& [path, stamp] : again)
                if (fresh[path] != stamp) touched.insert(path);
            fresh = std::move(again);
        }
        mtimes = fresh;

        std::vector<engine::Input> edits;
        for (const auto& path : touched) {
            auto source = engine::read_file(path);
            if (source) edits.push_back(engine::Input{path, std::move(*source)});
        }
        auto run = engine::incremental_check(st, edits);

        // reprint only what the edit reached
        std::vector<Diagnostic> changed;
        for (const auto& d : run.diagnostics)
            if (!d.subject || run.affected.count(*d.subject)) changed.push_back(d);
        std::cout << "-- " << run.affected.size() << " node(s) rechecked, "
                  << changed.size() << " diagnostic(s) --\n";
        print_diagnostics(changed, opt.format);
        std::cout << std::flush;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"machine-checked assurance cases with formal evidence"};
    app.require_subcommand(1);

    CommonOptions check_opt, verify_opt, graph_opt, report_opt, watch_opt;
    std::string model_json_path, only_gid, dot_path, html_path;

    auto* check = app.add_subcommand("check", "parse, check, and discharge obligations");
    add_common(check, check_opt);
    check->add_option("--format", check_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    check->add_flag("--fail-on-warnings", check_opt.fail_on_warnings,
                    "warnings also fail the run");
    check->add_option("--model-json", model_json_path, "write the model as JSON to this file");

    auto* verify = app.add_subcommand("verify", "discharge formal obligations only");
    add_common(verify, verify_opt);
    verify->add_option("--only", only_gid, "check a single obligation");

    auto* graph = app.add_subcommand("graph", "export the argument graph as DOT");
    add_common(graph, graph_opt);
    graph->add_option("--dot", dot_path, "output path")->required();

    auto* report = app.add_subcommand("report", "write a hyperlinked HTML report");
    add_common(report, report_opt);
    report->add_option("--html", html_path, "output path")->required();

    auto* watch = app.add_subcommand("watch", "recheck on every file change");
    add_common(watch, watch_opt);
    watch->add_option("--format", watch_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems exit 2, --help exits 0
    }

    try {
        if (check->parsed()) return run_check(check_opt, model_json_path);
        if (verify->parsed()) return run_verify(verify_opt, only_gid);
        if (graph->parsed()) return run_graph(graph_opt, dot_path);
        if (report->parsed()) return run_report(report_opt, html_path);
        if (watch->parsed()) return run_watch(watch_opt);
    } catch (const std::exception& e) {
        std::cerr << "assurkit: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
