// corpus.hpp - the shipped Tokeneer case-study documents
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "assurkit/engine.hpp"
#include "assurkit/tokeneer.hpp"

namespace assurkit::tokeneer {

inline const std::vector<std::string>& corpus_files() {
    static const std::vector<std::string> files = {"requirements.asr", "artifacts.asr",
                                                   "argument.asr", "tis.gcl"};
    return files;
}

/// Load the shipped case-study inputs from a corpus directory.
inline std::vector<engine::Input> corpus_inputs(const std::string& dir) {
    std::vector<engine::Input> out;
    for (const auto& name : corpus_files()) {
        std::string path = dir + "/" + name;
        auto source = engine::read_file(path);
        if (!source) throw std::runtime_error("cannot read corpus file " + path);
        out.push_back(engine::Input{path, std::move(*source)});
    }
    return out;
}

/// The argument documents of the corpus, parsed.
inline std::vector<dsl::Document> corpus_documents(const std::string& dir) {
    std::vector<dsl::Document> out;
    for (const auto& in : corpus_inputs(dir)) {
        if (engine::is_gcl_path(in.path)) continue;
        auto parsed = dsl::parse_document(in.source, in.path);
        out.push_back(std::move(parsed.document));
    }
    return out;
}

}  // namespace assurkit::tokeneer
