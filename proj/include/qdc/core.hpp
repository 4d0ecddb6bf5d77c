// core.hpp — dense complex amplitude vectors over tensor-product qudit
// registers, plus single-particle unitary application.
//
// Conventions used throughout the library:
//   * A register holds `parties` qudits of local dimension d.  Party 1 is
//     the leftmost tensor factor and owns the most significant digit of the
//     flat index, i.e. index k encodes the base-d digit string j1 j2 ... jP.
//   * States are unit vectors (sum |amp|^2 = 1 within kNormTol), enforced at
//     construction.  All values are immutable after construction, so every
//     operation here is a pure function and safe to call concurrently.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdc {

using Amp = std::complex<double>;

inline constexpr double kNormTol = 1e-10;
inline constexpr double kEntryTol = 1e-10;
inline constexpr std::size_t kDefaultDimCap = std::size_t{1} << 20;

// Raised when d^parties would exceed the configured register cap.
class DimCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_finite(const Amp& a) {
    return std::isfinite(a.real()) && std::isfinite(a.imag());
}

// e^{2*pi*i*num/den} with the argument reduced mod den first, so the d-th
// roots of unity come out at full double precision for every j*n product.
inline Amp root_of_unity(std::int64_t num, std::int64_t den) {
    const std::int64_t r = ((num % den) + den) % den;
    if (r == 0) return Amp{1.0, 0.0};
    const double theta = 2.0 * M_PI * static_cast<double>(r) / static_cast<double>(den);
    return Amp{std::cos(theta), std::sin(theta)};
}

}  // namespace detail

// Register geometry: `parties` qudits of dimension d, total dimension
// d^parties.  Construction fails if the total would exceed `cap`.
class RegisterShape {
public:
    RegisterShape(int d, int parties, std::size_t cap = kDefaultDimCap)
        : d_(d), parties_(parties) {
        if (d < 1) throw std::invalid_argument("RegisterShape: local dimension must be >= 1");
        if (parties < 2) throw std::invalid_argument("RegisterShape: need at least 2 parties");
        std::size_t total = 1;
        for (int p = 0; p < parties; ++p) {
            if (total > cap / static_cast<std::size_t>(d)) {
                throw DimCapError("RegisterShape: d^parties = " + std::to_string(d) + "^" +
                                  std::to_string(parties) + " exceeds cap " + std::to_string(cap));
            }
            total *= static_cast<std::size_t>(d);
        }
        if (total > cap) {
            throw DimCapError("RegisterShape: total dimension exceeds cap");
        }
        dim_ = total;
    }

    int d() const { return d_; }
    int parties() const { return parties_; }
    int senders() const { return parties_ - 1; }
    std::size_t dimension() const { return dim_; }

    bool operator==(const RegisterShape& other) const {
        return d_ == other.d_ && parties_ == other.parties_;
    }
    bool operator!=(const RegisterShape& other) const { return !(*this == other); }

    // Flat index of a digit string, party 1 most significant.
    std::size_t index_of(std::span<const int> digits) const {
        if (digits.size() != static_cast<std::size_t>(parties_)) {
            throw std::invalid_argument("RegisterShape: digit count != parties");
        }
        std::size_t k = 0;
        for (int digit : digits) {
            if (digit < 0 || digit >= d_) {
                throw std::invalid_argument("RegisterShape: digit " + std::to_string(digit) +
                                            " out of range [0, " + std::to_string(d_) + ")");
            }
            k = k * static_cast<std::size_t>(d_) + static_cast<std::size_t>(digit);
        }
        return k;
    }

    std::vector<int> digits_of(std::size_t index) const {
        if (index >= dim_) throw std::out_of_range("RegisterShape: index out of range");
        std::vector<int> digits(static_cast<std::size_t>(parties_));
        for (int p = parties_ - 1; p >= 0; --p) {
            digits[static_cast<std::size_t>(p)] = static_cast<int>(index % static_cast<std::size_t>(d_));
            index /= static_cast<std::size_t>(d_);
        }
        return digits;
    }

private:
    int d_;
    int parties_;
    std::size_t dim_;
};

// Normalized amplitude vector over the computational basis of a register.
class PureState {
public:
    PureState(RegisterShape shape, std::vector<Amp> amps)
        : shape_(shape), amps_(std::move(amps)) {
        if (amps_.size() != shape_.dimension()) {
            throw std::invalid_argument("PureState: amplitude count != d^parties");
        }
        double n2 = 0.0;
        for (const Amp& a : amps_) {
            if (!detail::is_finite(a)) throw std::invalid_argument("PureState: non-finite amplitude");
            n2 += std::norm(a);
        }
        if (std::abs(n2 - 1.0) > kNormTol) {
            throw std::invalid_argument("PureState: not normalized (sum |amp|^2 = " +
                                        std::to_string(n2) + ")");
        }
    }

    const RegisterShape& shape() const { return shape_; }
    std::span<const Amp> amps() const { return amps_; }
    const Amp& operator[](std::size_t k) const { return amps_[k]; }
    std::size_t dimension() const { return amps_.size(); }

    double norm_sq() const {
        double n2 = 0.0;
        for (const Amp& a : amps_) n2 += std::norm(a);
        return n2;
    }

private:
    RegisterShape shape_;
    std::vector<Amp> amps_;
};

// d x d unitary acting on a single qudit; entry (row, col) maps |col> to |row>.
class LocalMatrix {
public:
    LocalMatrix(int d, std::vector<Amp> entries) : d_(d), entries_(std::move(entries)) {
        if (d < 1) throw std::invalid_argument("LocalMatrix: dimension must be >= 1");
        if (entries_.size() != static_cast<std::size_t>(d) * static_cast<std::size_t>(d)) {
            throw std::invalid_argument("LocalMatrix: entry count != d*d");
        }
        for (const Amp& e : entries_) {
            if (!detail::is_finite(e)) throw std::invalid_argument("LocalMatrix: non-finite entry");
        }
        // U^dagger U must be the identity, entrywise.
        for (int r = 0; r < d_; ++r) {
            for (int c = 0; c < d_; ++c) {
                Amp s{0.0, 0.0};
                for (int k = 0; k < d_; ++k) s += std::conj((*this)(k, r)) * (*this)(k, c);
                const Amp want = (r == c) ? Amp{1.0, 0.0} : Amp{0.0, 0.0};
                if (std::abs(s - want) > kEntryTol) {
                    throw std::invalid_argument("LocalMatrix: matrix is not unitary");
                }
            }
        }
    }

    static LocalMatrix identity(int d) {
        std::vector<Amp> e(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), Amp{0.0, 0.0});
        for (int j = 0; j < d; ++j) e[static_cast<std::size_t>(j) * d + j] = Amp{1.0, 0.0};
        return LocalMatrix(d, std::move(e));
    }

    int d() const { return d_; }
    const Amp& operator()(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * static_cast<std::size_t>(d_) +
                        static_cast<std::size_t>(col)];
    }
    std::span<const Amp> entries() const { return entries_; }

private:
    int d_;
    std::vector<Amp> entries_;
};

// Computational basis ket |j1 j2 ... jP>.
inline PureState basis_ket(const RegisterShape& shape, std::span<const int> digits) {
    std::vector<Amp> amps(shape.dimension(), Amp{0.0, 0.0});
    amps[shape.index_of(digits)] = Amp{1.0, 0.0};
    return PureState(shape, std::move(amps));
}

inline PureState basis_ket(const RegisterShape& shape, const std::vector<int>& digits) {
    return basis_ket(shape, std::span<const int>(digits));
}

// <a|b>, with a conjugated.
inline Amp inner_product(const PureState& a, const PureState& b) {
    if (a.shape() != b.shape()) {
        throw std::invalid_argument("inner_product: shape mismatch");
    }
    Amp s{0.0, 0.0};
    for (std::size_t k = 0; k < a.dimension(); ++k) s += std::conj(a[k]) * b[k];
    return s;
}

// (I x ... x u x ... x I)|state> with u in tensor slot `particle` (1-based).
inline PureState apply_local(const PureState& state, int particle, const LocalMatrix& u) {
    const RegisterShape& shape = state.shape();
    if (particle < 1 || particle > shape.parties()) {
        throw std::out_of_range("apply_local: particle index out of range");
    }
    if (u.d() != shape.d()) {
        throw std::invalid_argument("apply_local: matrix dimension != register local dimension");
    }
    const std::size_t d = static_cast<std::size_t>(shape.d());
    // Amplitudes whose `particle` digit differs by 1 are `stride` apart.
    std::size_t stride = 1;
    for (int p = shape.parties(); p > particle; --p) stride *= d;

    std::vector<Amp> out(state.dimension(), Amp{0.0, 0.0});
    std::vector<Amp> column(d);
    const std::size_t block = stride * d;
    for (std::size_t base = 0; base < state.dimension(); base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            for (std::size_t j = 0; j < d; ++j) column[j] = state[base + off + j * stride];
            for (std::size_t row = 0; row < d; ++row) {
                Amp s{0.0, 0.0};
                for (std::size_t col = 0; col < d; ++col) {
                    s += u(static_cast<int>(row), static_cast<int>(col)) * column[col];
                }
                out[base + off + row * stride] = s;
            }
        }
    }
    return PureState(shape, std::move(out));
}

}  // namespace qdc
