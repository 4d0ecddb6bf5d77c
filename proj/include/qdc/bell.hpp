// bell.hpp — generalized Bell bases for registers of N+1 qudits.
//
// A basis state is labeled by one phase index n in [0, d) and a shift vector
// (i1 ... iN), one shift per sender particle:
//
//   |Psi^n_{i1...iN}> = (1/sqrt d) sum_j e^{2 pi i j n / d}
//                         |j> (x) |j+i1 mod d> (x) ... (x) |j+iN mod d>
//
// The two-party basis is the N=1 case of the same formula.  Enumeration
// order is shift-vector lexicographic, then n ascending, which matches the
// usual listing of the d=3 basis (all n for shift 0, then all n for shift 1,
// and so on).

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdc/core.hpp"

namespace qdc {

// Label (n, shifts) of one generalized Bell state; shifts has parties-1 entries.
struct BellLabel {
    int n = 0;
    std::vector<int> shifts;

    bool operator==(const BellLabel& other) const {
        return n == other.n && shifts == other.shifts;
    }
    bool operator!=(const BellLabel& other) const { return !(*this == other); }
};

namespace detail {

inline void check_bell_label(const RegisterShape& shape, const BellLabel& label) {
    const int d = shape.d();
    if (label.n < 0 || label.n >= d) {
        throw std::invalid_argument("BellLabel: phase index " + std::to_string(label.n) +
                                    " out of range [0, " + std::to_string(d) + ")");
    }
    if (label.shifts.size() != static_cast<std::size_t>(shape.senders())) {
        throw std::invalid_argument("BellLabel: expected " + std::to_string(shape.senders()) +
                                    " shifts, got " + std::to_string(label.shifts.size()));
    }
    for (int s : label.shifts) {
        if (s < 0 || s >= d) {
            throw std::invalid_argument("BellLabel: shift " + std::to_string(s) +
                                        " out of range [0, " + std::to_string(d) + ")");
        }
    }
}

}  // namespace detail

// Position of `label` in enumeration order: shift-vector lexicographic rank
// times d, plus n.  Inverse of bell_label_at.
inline std::size_t bell_label_ordinal(const RegisterShape& shape, const BellLabel& label) {
    detail::check_bell_label(shape, label);
    std::size_t rank = 0;
    for (int s : label.shifts) rank = rank * static_cast<std::size_t>(shape.d()) + static_cast<std::size_t>(s);
    return rank * static_cast<std::size_t>(shape.d()) + static_cast<std::size_t>(label.n);
}

inline BellLabel bell_label_at(const RegisterShape& shape, std::size_t ordinal) {
    if (ordinal >= shape.dimension()) {
        throw std::out_of_range("bell_label_at: ordinal out of range");
    }
    BellLabel label;
    const std::size_t d = static_cast<std::size_t>(shape.d());
    label.n = static_cast<int>(ordinal % d);
    std::size_t rank = ordinal / d;
    label.shifts.assign(static_cast<std::size_t>(shape.senders()), 0);
    for (int k = shape.senders() - 1; k >= 0; --k) {
        label.shifts[static_cast<std::size_t>(k)] = static_cast<int>(rank % d);
        rank /= d;
    }
    return label;
}

inline PureState bell_state(const RegisterShape& shape, const BellLabel& label) {
    detail::check_bell_label(shape, label);
    const int d = shape.d();
    const double coeff = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<Amp> amps(shape.dimension(), Amp{0.0, 0.0});
    std::vector<int> digits(static_cast<std::size_t>(shape.parties()));
    for (int j = 0; j < d; ++j) {
        digits[0] = j;
        for (int k = 0; k < shape.senders(); ++k) {
            digits[static_cast<std::size_t>(k) + 1] = (j + label.shifts[static_cast<std::size_t>(k)]) % d;
        }
        amps[shape.index_of(digits)] =
            coeff * detail::root_of_unity(static_cast<std::int64_t>(j) * label.n, d);
    }
    return PureState(shape, std::move(amps));
}

// The resource state (|00...0> + |11...1> + ...)/sqrt d, i.e. the all-zero label.
inline PureState shared_initial_state(const RegisterShape& shape) {
    BellLabel zero;
    zero.n = 0;
    zero.shifts.assign(static_cast<std::size_t>(shape.senders()), 0);
    return bell_state(shape, zero);
}

// All d^parties basis states in enumeration order.
inline std::vector<std::pair<BellLabel, PureState>> enumerate_basis(const RegisterShape& shape) {
    std::vector<std::pair<BellLabel, PureState>> basis;
    basis.reserve(shape.dimension());
    for (std::size_t ord = 0; ord < shape.dimension(); ++ord) {
        BellLabel label = bell_label_at(shape, ord);
        PureState state = bell_state(shape, label);
        basis.emplace_back(std::move(label), std::move(state));
    }
    return basis;
}

}  // namespace qdc
