// state_space.hpp - hierarchical finite state spaces and their enumeration
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace assurkit::gcl {

/// Raised on ill-typed programs, predicates, or expressions.
class TypeError : public std::runtime_error {
public:
    explicit TypeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when an enumeration would exceed the configured state cap.
class SpaceTooLarge : public std::runtime_error {
public:
    explicit SpaceTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

/// Value domain of a state variable. Every domain is finite; values are
/// represented as indices in [0, size). Map domains encode a total function
/// from the key domain into the value domain as a single mixed-radix index
/// (key 0 is the least significant digit).
class Domain {
public:
    enum class Kind { Bool, Enum, Nat, Map };

    static Domain boolean() {
        Domain d;
        d.kind_ = Kind::Bool;
        return d;
    }

    static Domain enumeration(std::vector<std::string> labels) {
        if (labels.empty()) throw TypeError("enum domain needs at least one label");
        Domain d;
        d.kind_ = Kind::Enum;
        d.labels_ = std::move(labels);
        return d;
    }

    /// Values 0..max inclusive.
    static Domain bounded_nat(int max) {
        if (max < 0) throw TypeError("nat domain bound must be non-negative");
        Domain d;
        d.kind_ = Kind::Nat;
        d.nat_max_ = max;
        return d;
    }

    static Domain finite_map(Domain key, Domain value) {
        if (key.kind_ == Kind::Map || key.kind_ == Kind::Nat || value.kind_ == Kind::Map ||
            value.kind_ == Kind::Nat)
            throw TypeError("map key and value domains must be bool or enum");
        Domain d;
        d.kind_ = Kind::Map;
        d.key_ = std::make_shared<Domain>(std::move(key));
        d.value_ = std::make_shared<Domain>(std::move(value));
        return d;
    }

    Kind kind() const { return kind_; }
    const std::vector<std::string>& labels() const { return labels_; }
    int nat_max() const { return nat_max_; }
    const Domain& key_domain() const { return *key_; }
    const Domain& value_domain() const { return *value_; }

    std::int64_t size() const {
        switch (kind_) {
            case Kind::Bool: return 2;
            case Kind::Enum: return static_cast<std::int64_t>(labels_.size());
            case Kind::Nat: return nat_max_ + 1;
            case Kind::Map: {
                std::int64_t n = 1;
                for (std::int64_t i = 0; i < key_->size(); ++i) n *= value_->size();
                return n;
            }
        }
        return 0;
    }

    /// Index of a named value (enum label, "true"/"false", or a decimal nat).
    std::optional<int> value_of(const std::string& name) const {
        switch (kind_) {
            case Kind::Bool:
                if (name == "true") return 1;
                if (name == "false") return 0;
                return std::nullopt;
            case Kind::Enum:
                for (size_t i = 0; i < labels_.size(); ++i)
                    if (labels_[i] == name) return static_cast<int>(i);
                return std::nullopt;
            case Kind::Nat: {
                if (name.empty()) return std::nullopt;
                for (char c : name)
                    if (c < '0' || c > '9') return std::nullopt;
                long v = std::stol(name);
                if (v > nat_max_) return std::nullopt;
                return static_cast<int>(v);
            }
            case Kind::Map: return std::nullopt;
        }
        return std::nullopt;
    }

    std::string value_name(int v) const {
        switch (kind_) {
            case Kind::Bool: return v ? "true" : "false";
            case Kind::Enum: return labels_.at(static_cast<size_t>(v));
            case Kind::Nat: return std::to_string(v);
            case Kind::Map: {
                std::string out = "{";
                std::int64_t rest = v;
                std::int64_t vs = value_->size();
                for (std::int64_t k = 0; k < key_->size(); ++k) {
                    if (k) out += ", ";
                    out += key_->value_name(static_cast<int>(k)) + ": " +
                           value_->value_name(static_cast<int>(rest % vs));
                    rest /= vs;
                }
                return out + "}";
            }
        }
        return "?";
    }

    /// Look up a map value at a key index.
    int map_at(int encoded, int key_index) const {
        std::int64_t vs = value_->size();
        std::int64_t rest = encoded;
        for (int k = 0; k < key_index; ++k) rest /= vs;
        return static_cast<int>(rest % vs);
    }

    bool same(const Domain& o) const {
        if (kind_ != o.kind_) return false;
        switch (kind_) {
            case Kind::Bool: return true;
            case Kind::Enum: return labels_ == o.labels_;
            case Kind::Nat: return nat_max_ == o.nat_max_;
            case Kind::Map: return key_->same(*o.key_) && value_->same(*o.value_);
        }
        return false;
    }

    std::string describe() const {
        switch (kind_) {
            case Kind::Bool: return "bool";
            case Kind::Nat: return "nat(" + std::to_string(nat_max_) + ")";
            case Kind::Enum: {
                std::string out = "{";
                for (size_t i = 0; i < labels_.size(); ++i) {
                    if (i) out += ", ";
                    out += labels_[i];
                }
                return out + "}";
            }
            case Kind::Map:
                return "map(" + key_->describe() + " -> " + value_->describe() + ")";
        }
        return "?";
    }

private:
    Kind kind_ = Kind::Bool;
    std::vector<std::string> labels_;
    int nat_max_ = 0;
    std::shared_ptr<const Domain> key_, value_;
};

struct Variable {
    std::string path;  // dotted, e.g. "tis.status"
    Domain domain;
};

/// A state assigns every variable a value index, aligned with the space's
/// variable order.
using State = std::vector<int>;

/// Ordered collection of variables. Hierarchy is expressed by dotted path
/// prefixes; declaration order fixes the enumeration order (first variable
/// most significant).
class StateSpace {
public:
    int add(const std::string& path, Domain domain) {
        if (path.empty()) throw TypeError("variable path must be non-empty");
        if (index_.count(path)) throw TypeError("duplicate variable path: " + path);
        int idx = static_cast<int>(vars_.size());
        index_[path] = idx;
        vars_.push_back(Variable{path, std::move(domain)});
        return idx;
    }

    int index_of(const std::string& path) const {
        auto it = index_.find(path);
        return it == index_.end() ? -1 : it->second;
    }

    const Variable& var(int i) const { return vars_.at(static_cast<size_t>(i)); }
    int var_count() const { return static_cast<int>(vars_.size()); }
    const std::vector<Variable>& variables() const { return vars_; }

    /// Whether the variable sits under a dotted namespace prefix.
    bool in_namespace(int i, const std::string& ns) const {
        const std::string& p = vars_.at(static_cast<size_t>(i)).path;
        if (p == ns) return true;
        return p.size() > ns.size() && p.compare(0, ns.size(), ns) == 0 && p[ns.size()] == '.';
    }

    bool namespace_exists(const std::string& ns) const {
        for (int i = 0; i < var_count(); ++i)
            if (in_namespace(i, ns)) return true;
        return false;
    }

    /// Total number of states, saturated at `cap + 1` so callers can compare
    /// against a cap without overflow.
    std::int64_t state_count(std::int64_t cap) const {
        std::int64_t n = 1;
        for (const auto& v : vars_) {
            n *= v.domain.size();
            if (n > cap) return cap + 1;
        }
        return n;
    }

    State initial_state() const { return State(vars_.size(), 0); }

    /// Advance to the next state in enumeration order; false after the last.
    /// The last variable varies fastest.
    bool next_state(State& s) const {
        for (int i = var_count() - 1; i >= 0; --i) {
            if (s[static_cast<size_t>(i)] + 1 < vars_[static_cast<size_t>(i)].domain.size()) {
                ++s[static_cast<size_t>(i)];
                for (size_t j = static_cast<size_t>(i) + 1; j < vars_.size(); ++j) s[j] = 0;
                return true;
            }
        }
        return false;
    }

    /// Counterexamples and witness states render as `path = value` lines
    /// sorted by path.
    std::string render_state(const State& s) const {
        std::map<std::string, std::string> rows;
        for (size_t i = 0; i < vars_.size(); ++i)
            rows[vars_[i].path] = vars_[i].domain.value_name(s[i]);
        std::string out;
        for (const auto& [path, val] : rows) out += path + " = " + val + "\n";
        return out;
    }

private:
    std::vector<Variable> vars_;
    std::map<std::string, int> index_;
};

using SpacePtr = std::shared_ptr<const StateSpace>;

}  // namespace assurkit::gcl
