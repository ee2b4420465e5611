// tokeneer.hpp - desk-scale formal model of the token-based ID station
//
// The station guards entry to a secure enclave: it reads a token, optionally
// takes a fingerprint, writes an authorisation certificate, and unlocks the
// door latch once the token is removed. Certificate checking is abstracted to
// three opaque predicates (userTokenOK, userTokenWithOKAuthCert, fingerOK);
// reading a token refreshes them nondeterministically.
//
// Copyright 2026 the assurkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <utility>

#include "assurkit/gcl/verify.hpp"

namespace assurkit::tokeneer {

using namespace assurkit::gcl;

/// Station statuses, in the order the entry workflow visits them.
inline const std::vector<std::string>& status_labels() {
    static const std::vector<std::string> labels = {
        "quiescent",      "gotUserToken",       "waitingFinger",
        "gotFinger",      "waitingUpdateToken", "waitingEntry",
        "waitingRemoveTokenSuccess", "waitingUpdateTokenSuccess"};
    return labels;
}

inline const std::vector<std::string>& display_labels() {
    static const std::vector<std::string> labels = {"welcome", "insertFinger", "wait",
                                                    "doorUnlocked", "removeToken"};
    return labels;
}

/// The system state: the station's own variables under `tis`, the physical
/// world under `rw` (controlled latch and display, monitored clock and token
/// sensor). About 2*10^5 states, enumerable in well under a second.
inline SpacePtr build_space() {
    auto sp = std::make_shared<StateSpace>();
    auto presence = Domain::enumeration({"present", "absent"});
    auto latch = Domain::enumeration({"locked", "unlocked"});
    sp->add("tis.status", Domain::enumeration(status_labels()));
    sp->add("tis.userTokenPresence", presence);
    sp->add("tis.fingerPresence", presence);
    sp->add("tis.currentDisplay", Domain::enumeration(display_labels()));
    sp->add("tis.currentLatch", latch);
    sp->add("tis.userTokenOK", Domain::boolean());
    sp->add("tis.userTokenWithOKAuthCert", Domain::boolean());
    sp->add("tis.fingerOK", Domain::boolean());
    sp->add("rw.ctrl.latch", latch);
    sp->add("rw.ctrl.display", Domain::enumeration(display_labels()));
    sp->add("rw.mon.now", Domain::bounded_nat(3));
    sp->add("rw.mon.userTokenPresence", presence);
    return sp;
}

/// Guard-weakening knobs for the mutation-sensitivity checks, plus the two
/// switches the invariant-analysis tests flip.
struct BuildOptions {
    enum class UnlockGuard {
        Standard,              // waitingRemoveTokenSuccess and token removed
        DropTokenAbsent,       // forgets to require the token's removal
        AlsoFromWaitingFinger, // fires one state too early
        RequireTokenPresent,   // inverted removal check
        AnyStatus,             // ignores the status entirely
    };
    UnlockGuard unlock_guard = UnlockGuard::Standard;
    bool write_token_sets_cert = true;      // WriteUserTokenOK records the certificate
    bool entry_inv_covers_update_success = true;  // entry-credential invariant scope
};

struct TisModel {
    SpacePtr space;
    /// Station-level transitions by name, each a guarded command.
    std::vector<std::pair<std::string, ProgPtr>> ops;
    ProgPtr user_entry_op;  // demonic choice over the promoted transitions
    ProgPtr update;         // pushes currentLatch/currentDisplay to the world
    PredPtr inv;            // conjunction of the three credential invariants
    PredPtr inv_creds_read;
    PredPtr inv_creds_entry;
    PredPtr inv_creds_unlock;

    ProgPtr op(const std::string& name) const {
        for (const auto& [n, p] : ops)
            if (n == name) return p;
        throw TypeError("no such operation: " + name);
    }
};

/// Promote a station operation to the full system: the world evolves
/// arbitrarily alongside it, except that time is monotone and the controlled
/// variables hold still.
inline ProgPtr uec(const StateSpace& space, ProgPtr op) {
    auto now = var_ref(space, "rw.mon.now");
    auto now_p = var_ref(space, "rw.mon.now", true);
    auto latch = var_ref(space, "rw.ctrl.latch");
    auto latch_p = var_ref(space, "rw.ctrl.latch", true);
    auto disp = var_ref(space, "rw.ctrl.display");
    auto disp_p = var_ref(space, "rw.ctrl.display", true);
    auto world = rel_spec(and_list({le(now, now_p), eq(latch_p, latch), eq(disp_p, disp)}));
    return seq(frame(space, "tis", std::move(op)), frame(space, "rw", std::move(world)));
}

/// World update after each iteration: time moves, monitored inputs change
/// freely, then the physical latch and display take the station's values.
inline ProgPtr tis_update(const StateSpace& space) {
    auto now = var_ref(space, "rw.mon.now");
    auto now_p = var_ref(space, "rw.mon.now", true);
    return seq_list({frame(space, "rw", rel_spec(le(now, now_p))),
                     assign(space, "rw.ctrl.latch", var_ref(space, "tis.currentLatch")),
                     assign(space, "rw.ctrl.display", var_ref(space, "tis.currentDisplay"))});
}

inline TisModel build_model(const BuildOptions& opt = {}) {
    TisModel m;
    m.space = build_space();
    const StateSpace& sp = *m.space;

    auto v = [&](const char* path) { return var_ref(sp, path); };
    auto is = [&](const char* path, const char* label) {
        auto x = v(path);
        auto l = label_lit(x->domain, label);
        return eq(std::move(x), std::move(l));
    };
    auto status_in = [&](std::initializer_list<const char*> labels) {
        auto x = v("tis.status");
        std::vector<int> members;
        for (const char* l : labels) members.push_back(*x->domain.value_of(l));
        return in_set(std::move(x), std::move(members));
    };
    auto set = [&](const char* path, const char* label) {
        auto d = sp.var(sp.index_of(path)).domain;
        return assign(sp, path, label_lit(d, label));
    };
    auto set_bool = [&](const char* path, bool b) {
        return assign(sp, path, literal(Domain::boolean(), b ? 1 : 0));
    };
    auto truthy = [&](const char* path) { return eq(v(path), literal(Domain::boolean(), 1)); };
    auto falsy = [&](const char* path) { return eq(v(path), literal(Domain::boolean(), 0)); };

    auto token_in = is("tis.userTokenPresence", "present");
    auto token_out = is("tis.userTokenPresence", "absent");

    // Reading the token refreshes the certificate predicates.
    auto read_user_token =
        guard(and_(is("tis.status", "quiescent"), token_in),
              seq_list({set("tis.status", "gotUserToken"), set("tis.currentDisplay", "wait"),
                        havoc(sp, "tis.userTokenOK"),
                        havoc(sp, "tis.userTokenWithOKAuthCert"), havoc(sp, "tis.fingerOK")}));

    auto bio_check_required =
        guard(and_list({is("tis.status", "gotUserToken"), token_in,
                        truthy("tis.userTokenOK"), falsy("tis.userTokenWithOKAuthCert")}),
              seq(set("tis.status", "waitingFinger"), set("tis.currentDisplay", "insertFinger")));

    // A valid authorisation certificate skips the fingerprint check.
    auto bio_check_not_required =
        guard(and_list({is("tis.status", "gotUserToken"), token_in,
                        truthy("tis.userTokenWithOKAuthCert")}),
              seq(set("tis.status", "waitingEntry"), set("tis.currentDisplay", "wait")));

    auto read_finger_ok =
        guard(and_list({is("tis.status", "waitingFinger"), is("tis.fingerPresence", "present"),
                        token_in}),
              seq(set("tis.status", "gotFinger"), set("tis.currentDisplay", "wait")));

    auto validate_finger_ok =
        guard(and_list({is("tis.status", "gotFinger"), truthy("tis.fingerOK"), token_in}),
              seq(set("tis.status", "waitingUpdateToken"), set("tis.currentDisplay", "wait")));

    auto write_user_token_ok =
        guard(and_(is("tis.status", "waitingUpdateToken"), token_in),
              opt.write_token_sets_cert
                  ? seq_list({set_bool("tis.userTokenWithOKAuthCert", true),
                              set("tis.status", "waitingUpdateTokenSuccess"),
                              set("tis.currentDisplay", "wait")})
                  : seq_list({set("tis.status", "waitingUpdateTokenSuccess"),
                              set("tis.currentDisplay", "wait")}));

    auto entry_ok =
        guard(and_(status_in({"waitingEntry", "waitingUpdateTokenSuccess"}), token_in),
              seq(set("tis.status", "waitingRemoveTokenSuccess"),
                  set("tis.currentDisplay", "removeToken")));

    PredPtr unlock_guard;
    switch (opt.unlock_guard) {
        case BuildOptions::UnlockGuard::Standard:
            unlock_guard = and_(is("tis.status", "waitingRemoveTokenSuccess"), token_out);
            break;
        case BuildOptions::UnlockGuard::DropTokenAbsent:
            unlock_guard = is("tis.status", "waitingRemoveTokenSuccess");
            break;
        case BuildOptions::UnlockGuard::AlsoFromWaitingFinger:
            unlock_guard =
                and_(status_in({"waitingRemoveTokenSuccess", "waitingFinger"}), token_out);
            break;
        case BuildOptions::UnlockGuard::RequireTokenPresent:
            unlock_guard = and_(is("tis.status", "waitingRemoveTokenSuccess"), token_in);
            break;
        case BuildOptions::UnlockGuard::AnyStatus:
            unlock_guard = token_out;
            break;
    }
    // UnlockDoor proper is just the latch move; the rest restores quiescence.
    auto unlock_door_ok =
        guard(std::move(unlock_guard),
              seq_list({set("tis.currentLatch", "unlocked"), set("tis.status", "quiescent"),
                        set("tis.currentDisplay", "doorUnlocked")}));

    // Tearing the token out mid-attempt abandons the entry.
    auto complete_failed_access =
        guard(and_(status_in({"gotUserToken", "waitingFinger", "gotFinger",
                              "waitingUpdateToken", "waitingEntry",
                              "waitingUpdateTokenSuccess"}),
                   token_out),
              seq(set("tis.status", "quiescent"), set("tis.currentDisplay", "welcome")));

    m.ops = {
        {"ReadUserToken", read_user_token},
        {"BioCheckRequired", bio_check_required},
        {"BioCheckNotRequired", bio_check_not_required},
        {"ReadFingerOK", read_finger_ok},
        {"ValidateFingerOK", validate_finger_ok},
        {"WriteUserTokenOK", write_user_token_ok},
        {"EntryOK", entry_ok},
        {"UnlockDoorOK", unlock_door_ok},
        {"CompleteFailedAccess", complete_failed_access},
    };

    std::vector<ProgPtr> promoted;
    for (const auto& [name, op] : m.ops) promoted.push_back(uec(sp, op));
    m.user_entry_op = choice_list(std::move(promoted));
    m.update = tis_update(sp);

    auto cert_ok = truthy("tis.userTokenWithOKAuthCert");

    // Past the token read, the token was valid or carried a certificate.
    m.inv_creds_read =
        implies(status_in({"gotFinger", "waitingFinger", "waitingUpdateToken", "waitingEntry",
                           "waitingUpdateTokenSuccess"}),
                or_(cert_ok, truthy("tis.userTokenOK")));

    // At the entry check, a certificate or a matching fingerprint is in hand.
    m.inv_creds_entry =
        implies(opt.entry_inv_covers_update_success
                    ? status_in({"waitingEntry", "waitingUpdateTokenSuccess"})
                    : status_in({"waitingEntry"}),
                or_(cert_ok, truthy("tis.fingerOK")));

    // Once the token is removed and the door may open, full credentials held.
    m.inv_creds_unlock =
        implies(and_(is("tis.status", "waitingRemoveTokenSuccess"), token_out),
                or_(cert_ok, and_(truthy("tis.userTokenOK"), truthy("tis.fingerOK"))));

    m.inv = and_list({m.inv_creds_read, m.inv_creds_entry, m.inv_creds_unlock});
    return m;
}

/// Every entry operation preserves the station invariant.
inline Obligation invariant_preservation(const TisModel& m) {
    Obligation ob;
    ob.gid = "TIS_INV_PRESERVATION";
    ob.space = m.space;
    ob.form = Obligation::Form::Hoare;
    ob.pre = m.inv;
    ob.prog = m.user_entry_op;
    ob.post = m.inv;
    return ob;
}

/// The unlock security requirement: from any invariant state with the latch
/// locked, if one iteration can end with the physical latch unlocked, then
/// the user held a valid token and fingerprint, or a valid authorisation
/// certificate.
inline Obligation unlock_requires_credentials(const TisModel& m) {
    const StateSpace& sp = *m.space;
    auto boolean = [&](const char* path, bool val) {
        return eq(var_ref(sp, path), literal(Domain::boolean(), val ? 1 : 0));
    };
    auto latch = var_ref(sp, "tis.currentLatch");
    auto world_latch = var_ref(sp, "rw.ctrl.latch");

    Obligation ob;
    ob.gid = "TIS_FSFR1_SATISFACTION";
    ob.space = m.space;
    ob.form = Obligation::Form::WpImplies;
    ob.pre = and_(m.inv, eq(latch, label_lit(latch->domain, "locked")));
    ob.prog = seq(m.user_entry_op, m.update);
    ob.post = eq(world_latch, label_lit(world_latch->domain, "unlocked"));
    ob.conclusion = or_(and_(boolean("tis.userTokenOK", true), boolean("tis.fingerOK", true)),
                        boolean("tis.userTokenWithOKAuthCert", true));
    return ob;
}

/// A quiescent starting state satisfying the invariant.
inline State quiescent_state(const StateSpace& sp, bool token_present) {
    State s(static_cast<size_t>(sp.var_count()), 0);
    auto put = [&](const char* path, const char* value) {
        int i = sp.index_of(path);
        s[static_cast<size_t>(i)] = *sp.var(i).domain.value_of(value);
    };
    put("tis.status", "quiescent");
    put("tis.userTokenPresence", token_present ? "present" : "absent");
    put("tis.fingerPresence", "present");
    put("tis.currentDisplay", "welcome");
    put("tis.currentLatch", "locked");
    put("rw.ctrl.latch", "locked");
    put("rw.ctrl.display", "welcome");
    put("rw.mon.userTokenPresence", token_present ? "present" : "absent");
    return s;
}

}  // namespace assurkit::tokeneer
