// hash.hpp - stable content fingerprints (FNV-1a)
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <string>

namespace assurkit {

using Fingerprint = std::uint64_t;

inline Fingerprint fingerprint(const std::string& data, Fingerprint seed = 0xcbf29ce484222325ull) {
    Fingerprint h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace assurkit
