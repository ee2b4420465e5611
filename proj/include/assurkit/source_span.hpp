// source_span.hpp - positions and ranges in input files
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <string>
#include <tuple>

namespace assurkit {

/// A half-open range of source text, 1-based lines and columns.
/// The end position points one past the last character of the range.
struct Span {
    std::string file;
    int start_line = 1;
    int start_col = 1;
    int end_line = 1;
    int end_col = 1;

    Span() = default;
    Span(std::string f, int sl, int sc, int el, int ec)
        : file(std::move(f)), start_line(sl), start_col(sc), end_line(el), end_col(ec) {}

    friend bool operator==(const Span& a, const Span& b) {
        return a.file == b.file && a.start_line == b.start_line && a.start_col == b.start_col &&
               a.end_line == b.end_line && a.end_col == b.end_col;
    }

    friend bool operator<(const Span& a, const Span& b) {
        return std::tie(a.file, a.start_line, a.start_col, a.end_line, a.end_col) <
               std::tie(b.file, b.start_line, b.start_col, b.end_line, b.end_col);
    }

    std::string to_string() const {
        return file + ":" + std::to_string(start_line) + ":" + std::to_string(start_col);
    }
};

/// Running position while scanning text; converts to the start of a Span.
struct Cursor {
    int line = 1;
    int col = 1;

    void advance(char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
};

inline Span make_span(const std::string& file, Cursor from, Cursor to) {
    return Span(file, from.line, from.col, to.line, to.col);
}

}  // namespace assurkit
