// protocol.hpp — the dense-coding round trip.
//
// N senders share an (N+1)-particle resource state with one receiver.  Each
// sender encodes a symbol by applying one allowed phase-and-shift unitary to
// their own particle (sender k holds particle k+1); the receiver then
// identifies the resulting Bell basis state with a single collective
// measurement and inverts the plan's message -> label map.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdc/bell.hpp"
#include "qdc/core.hpp"
#include "qdc/weyl.hpp"

namespace qdc {

// One symbol per sender, each drawn from that sender's allowed set.
using Message = std::vector<WeylLabel>;

// The state handed to measure_decode is not a Bell basis state.
class AmbiguousStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two distinct messages of a plan map to the same Bell label.
class DecodeCollisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Per-sender allowed operation sets.
struct SenderPlan {
    RegisterShape shape;
    std::vector<std::vector<WeylLabel>> allowed;  // one set per sender, in sender order

    SenderPlan(RegisterShape shape_, std::vector<std::vector<WeylLabel>> allowed_)
        : shape(shape_), allowed(std::move(allowed_)) {
        if (allowed.size() != static_cast<std::size_t>(shape.senders())) {
            throw std::invalid_argument("SenderPlan: expected " + std::to_string(shape.senders()) +
                                        " allowed sets, got " + std::to_string(allowed.size()));
        }
        for (const auto& set : allowed) {
            if (set.empty()) throw std::invalid_argument("SenderPlan: empty allowed set");
            for (const WeylLabel& label : set) detail::check_weyl_label(shape.d(), label);
            for (std::size_t i = 0; i < set.size(); ++i) {
                for (std::size_t j = i + 1; j < set.size(); ++j) {
                    if (set[i] == set[j]) {
                        throw std::invalid_argument("SenderPlan: duplicate label in allowed set");
                    }
                }
            }
        }
    }

    // Number of distinct messages, i.e. the product of the set sizes.
    std::uint64_t message_count() const {
        std::uint64_t total = 1;
        for (const auto& set : allowed) total *= static_cast<std::uint64_t>(set.size());
        return total;
    }
};

struct ProtocolTranscript {
    SenderPlan plan;
    Message message;
    PureState encoded_state;
    BellLabel decoded_label;
    Message decoded_message;
};

struct MeasureResult {
    BellLabel label;
    double fidelity;  // squared overlap with the winning basis state
};

// Sender 1 may use all d^2 operations, every further sender only the d
// phase-zero shifts U_{0m}; the message space then exactly fills the basis.
inline SenderPlan canonical_plan(const RegisterShape& shape) {
    std::vector<std::vector<WeylLabel>> allowed;
    allowed.reserve(static_cast<std::size_t>(shape.senders()));
    allowed.push_back(all_weyl_labels(shape.d()));
    for (int k = 1; k < shape.senders(); ++k) {
        std::vector<WeylLabel> phase_zero;
        phase_zero.reserve(static_cast<std::size_t>(shape.d()));
        for (int m = 0; m < shape.d(); ++m) phase_zero.push_back(WeylLabel{0, m});
        allowed.push_back(std::move(phase_zero));
    }
    return SenderPlan(shape, std::move(allowed));
}

inline void check_message(const SenderPlan& plan, const Message& message) {
    if (message.size() != plan.allowed.size()) {
        throw std::invalid_argument("Message: expected " + std::to_string(plan.allowed.size()) +
                                    " symbols, got " + std::to_string(message.size()));
    }
    for (std::size_t k = 0; k < message.size(); ++k) {
        const auto& set = plan.allowed[k];
        if (std::find(set.begin(), set.end(), message[k]) == set.end()) {
            std::string allowed_str;
            for (const WeylLabel& l : set) {
                if (!allowed_str.empty()) allowed_str += ", ";
                allowed_str += "(" + std::to_string(l.n) + "," + std::to_string(l.m) + ")";
            }
            throw std::invalid_argument("Message: symbol (" + std::to_string(message[k].n) + "," +
                                        std::to_string(message[k].m) + ") not allowed for sender " +
                                        std::to_string(k + 1) + "; allowed set is {" + allowed_str +
                                        "}");
        }
    }
}

// Apply each sender's chosen unitary to their particle of the resource state.
inline PureState encode(const SenderPlan& plan, const Message& message) {
    check_message(plan, message);
    PureState state = shared_initial_state(plan.shape);
    for (std::size_t k = 0; k < message.size(); ++k) {
        state = apply_local(state, static_cast<int>(k) + 2,
                            weyl_unitary(plan.shape.d(), message[k]));
    }
    return state;
}

namespace detail {

// <Psi_label|state> for every label, in enumeration order.  Each basis state
// has only d nonzero amplitudes, so the overlap is a d-term sum.
inline std::vector<Amp> bell_overlaps(const PureState& state) {
    const RegisterShape& shape = state.shape();
    const int d = shape.d();
    const double coeff = 1.0 / std::sqrt(static_cast<double>(d));
    const std::size_t shift_count = shape.dimension() / static_cast<std::size_t>(d);

    std::vector<Amp> overlaps(shape.dimension());
    std::vector<int> shifts(static_cast<std::size_t>(shape.senders()), 0);
    std::vector<int> digits(static_cast<std::size_t>(shape.parties()));
    std::vector<Amp> support(static_cast<std::size_t>(d));
    for (std::size_t rank = 0; rank < shift_count; ++rank) {
        for (int j = 0; j < d; ++j) {
            digits[0] = j;
            for (int k = 0; k < shape.senders(); ++k) {
                digits[static_cast<std::size_t>(k) + 1] =
                    (j + shifts[static_cast<std::size_t>(k)]) % d;
            }
            support[static_cast<std::size_t>(j)] = state[shape.index_of(digits)];
        }
        for (int n = 0; n < d; ++n) {
            Amp s{0.0, 0.0};
            for (int j = 0; j < d; ++j) {
                s += root_of_unity(-static_cast<std::int64_t>(j) * n, d) *
                     support[static_cast<std::size_t>(j)];
            }
            overlaps[rank * static_cast<std::size_t>(d) + static_cast<std::size_t>(n)] = coeff * s;
        }
        // next shift vector in lexicographic order
        for (int k = shape.senders() - 1; k >= 0; --k) {
            if (++shifts[static_cast<std::size_t>(k)] < d) break;
            shifts[static_cast<std::size_t>(k)] = 0;
        }
    }
    return overlaps;
}

}  // namespace detail

// Collective Bell measurement as deterministic identification: returns the
// label with the largest squared overlap.  Anything that is not a basis state
// (best overlap below 1 - 1e-6) is rejected rather than guessed at.
inline MeasureResult measure_decode(const PureState& state) {
    const std::vector<Amp> overlaps = detail::bell_overlaps(state);
    std::size_t best = 0;
    double best_p = -1.0;
    for (std::size_t ord = 0; ord < overlaps.size(); ++ord) {
        const double p = std::norm(overlaps[ord]);
        if (p > best_p) {
            best_p = p;
            best = ord;
        }
    }
    if (best_p < 1.0 - 1e-6) {
        throw AmbiguousStateError("measure_decode: state is not a Bell basis state (best overlap " +
                                  std::to_string(best_p) + ")");
    }
    return MeasureResult{bell_label_at(state.shape(), best), best_p};
}

// One projective measurement sample.  Reproducible by construction: the
// generator is std::mt19937_64 seeded with `seed`, a single draw is mapped to
// [0,1) as (x >> 11) * 2^-53, and the cumulative Born weights are walked in
// basis enumeration order.
inline BellLabel born_sample(const PureState& state, std::uint64_t seed) {
    const std::vector<Amp> overlaps = detail::bell_overlaps(state);
    std::mt19937_64 rng(seed);
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    double cumulative = 0.0;
    for (std::size_t ord = 0; ord < overlaps.size(); ++ord) {
        cumulative += std::norm(overlaps[ord]);
        if (u < cumulative) return bell_label_at(state.shape(), ord);
    }
    return bell_label_at(state.shape(), overlaps.size() - 1);
}

namespace detail {

// Message -> label table for a plan, failing on the first duplicate label.
// Messages are enumerated with sender 1 varying slowest.
inline std::vector<std::pair<BellLabel, Message>> plan_code_table(const SenderPlan& plan) {
    std::vector<std::pair<BellLabel, Message>> table;
    std::vector<char> seen(plan.shape.dimension(), 0);
    const std::size_t senders = plan.allowed.size();
    std::vector<std::size_t> pick(senders, 0);
    Message message(senders);
    while (true) {
        for (std::size_t k = 0; k < senders; ++k) message[k] = plan.allowed[k][pick[k]];
        BellLabel label = weyl_action_label(plan.shape.d(), message);
        const std::size_t ord = bell_label_ordinal(plan.shape, label);
        if (seen[ord]) {
            throw DecodeCollisionError("plan is not decodable: two messages map to the same label");
        }
        seen[ord] = 1;
        table.emplace_back(std::move(label), message);
        int k = static_cast<int>(senders) - 1;
        for (; k >= 0; --k) {
            if (++pick[static_cast<std::size_t>(k)] < plan.allowed[static_cast<std::size_t>(k)].size()) break;
            pick[static_cast<std::size_t>(k)] = 0;
        }
        if (k < 0) break;
    }
    return table;
}

}  // namespace detail

// encode -> measure -> invert the plan's message table.
inline ProtocolTranscript roundtrip(const SenderPlan& plan, const Message& message) {
    check_message(plan, message);
    const auto table = detail::plan_code_table(plan);
    PureState encoded = encode(plan, message);
    MeasureResult measured = measure_decode(encoded);
    const Message* decoded = nullptr;
    for (const auto& [label, msg] : table) {
        if (label == measured.label) {
            decoded = &msg;
            break;
        }
    }
    if (decoded == nullptr) {
        // Cannot happen for a message drawn from the plan itself.
        throw DecodeCollisionError("roundtrip: measured label is outside the plan's code table");
    }
    return ProtocolTranscript{plan, message, std::move(encoded), std::move(measured.label), *decoded};
}

// Classical capacity of the canonical plan: parties * log2(d) bits, the
// base-2 log of the d^parties distinguishable messages.
inline double capacity_bits(int d, int parties) {
    if (d < 1) throw std::invalid_argument("capacity_bits: d must be >= 1");
    if (parties < 2) throw std::invalid_argument("capacity_bits: need at least 2 parties");
    return static_cast<double>(parties) * std::log2(static_cast<double>(d));
}

}  // namespace qdc
