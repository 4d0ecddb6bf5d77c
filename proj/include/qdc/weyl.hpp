// weyl.hpp — the d^2 phase-and-shift unitaries U_{nm} on a single qudit and
// their label algebra.
//
//   (U_{nm})_{j',j} = e^{2 pi i j n / d}  when j' = j+m mod d, else 0.
//
// U_{0m} is the cyclic shift by m, U_{n0} the phase ramp ("clock"), and the
// composition acting on the shared resource state obeys a closed-form rule:
// phase indices add mod d, shifts concatenate.  weyl_action_label exposes
// that rule; it is tested against the dense-matrix path, never derived from it.

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdc/bell.hpp"
#include "qdc/core.hpp"

namespace qdc {

// Label (n, m) of one phase-and-shift unitary: n = phase index, m = shift index.
struct WeylLabel {
    int n = 0;
    int m = 0;

    bool operator==(const WeylLabel& other) const { return n == other.n && m == other.m; }
    bool operator!=(const WeylLabel& other) const { return !(*this == other); }
};

namespace detail {

inline void check_weyl_label(int d, const WeylLabel& label) {
    if (label.n < 0 || label.n >= d || label.m < 0 || label.m >= d) {
        throw std::invalid_argument("WeylLabel: (" + std::to_string(label.n) + ", " +
                                    std::to_string(label.m) + ") out of range for d = " +
                                    std::to_string(d));
    }
}

}  // namespace detail

// Position of `label` in the conventional operator listing U_00, U_10, ...,
// U_{d-1,0}, U_01, ... (shift-major, phase-minor).
inline std::size_t weyl_label_ordinal(int d, const WeylLabel& label) {
    detail::check_weyl_label(d, label);
    return static_cast<std::size_t>(label.m) * static_cast<std::size_t>(d) +
           static_cast<std::size_t>(label.n);
}

inline WeylLabel weyl_label_at(int d, std::size_t ordinal) {
    if (d < 1 || ordinal >= static_cast<std::size_t>(d) * static_cast<std::size_t>(d)) {
        throw std::out_of_range("weyl_label_at: ordinal out of range");
    }
    return WeylLabel{static_cast<int>(ordinal % static_cast<std::size_t>(d)),
                     static_cast<int>(ordinal / static_cast<std::size_t>(d))};
}

// All d^2 labels in shift-major order.
inline std::vector<WeylLabel> all_weyl_labels(int d) {
    if (d < 1) throw std::invalid_argument("all_weyl_labels: d must be >= 1");
    std::vector<WeylLabel> labels;
    labels.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) labels.push_back(WeylLabel{n, m});
    }
    return labels;
}

inline LocalMatrix weyl_unitary(int d, const WeylLabel& label) {
    if (d < 1) throw std::invalid_argument("weyl_unitary: d must be >= 1");
    detail::check_weyl_label(d, label);
    std::vector<Amp> entries(static_cast<std::size_t>(d) * static_cast<std::size_t>(d),
                             Amp{0.0, 0.0});
    for (int j = 0; j < d; ++j) {
        const int row = (j + label.m) % d;
        entries[static_cast<std::size_t>(row) * static_cast<std::size_t>(d) +
                static_cast<std::size_t>(j)] =
            detail::root_of_unity(static_cast<std::int64_t>(j) * label.n, d);
    }
    return LocalMatrix(d, std::move(entries));
}

// Closed-form label of (x)_k U_{n_k m_k} applied to the shared resource state:
// the result is the Bell state with phase sum(n_k) mod d and shifts (m_1...m_N).
inline BellLabel weyl_action_label(int d, std::span<const WeylLabel> labels_per_sender) {
    if (d < 1) throw std::invalid_argument("weyl_action_label: d must be >= 1");
    if (labels_per_sender.empty()) {
        throw std::invalid_argument("weyl_action_label: sender list is empty");
    }
    BellLabel out;
    out.shifts.reserve(labels_per_sender.size());
    int phase = 0;
    for (const WeylLabel& label : labels_per_sender) {
        detail::check_weyl_label(d, label);
        phase = (phase + label.n) % d;
        out.shifts.push_back(label.m);
    }
    out.n = phase;
    return out;
}

inline BellLabel weyl_action_label(int d, const std::vector<WeylLabel>& labels_per_sender) {
    return weyl_action_label(d, std::span<const WeylLabel>(labels_per_sender));
}

// The d labels sharing shift index m: {(0,m), (1,m), ..., (d-1,m)}.
inline std::vector<WeylLabel> shift_coset(int d, int m) {
    if (d < 1) throw std::invalid_argument("shift_coset: d must be >= 1");
    if (m < 0 || m >= d) {
        throw std::invalid_argument("shift_coset: m = " + std::to_string(m) +
                                    " out of range [0, " + std::to_string(d) + ")");
    }
    std::vector<WeylLabel> coset;
    coset.reserve(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n) coset.push_back(WeylLabel{n, m});
    return coset;
}

}  // namespace qdc
