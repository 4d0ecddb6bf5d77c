// Test-only utilities: fixture state construction, independent tensor-product
// oracle for single-particle operators, and seeded random states/unitaries.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qdc/core.hpp"

namespace qdc::test {

inline constexpr double kSqrt2Inv = 0.70710678118654752440;
inline constexpr double kSqrt3Inv = 0.57735026918962576451;
// primitive cube root of unity e^{2 pi i/3} and its square
inline const Amp kW3{-0.5, 0.86602540378443864676};
inline const Amp kW3Sq{-0.5, -0.86602540378443864676};

inline std::vector<int> digits_from_string(const std::string& kets) {
    std::vector<int> digits;
    digits.reserve(kets.size());
    for (char c : kets) digits.push_back(c - '0');
    return digits;
}

// Build a state from ket-string -> amplitude pairs (digits 0..9 only).
inline PureState state_from_kets(const RegisterShape& shape,
                                 const std::map<std::string, Amp>& kets) {
    std::vector<Amp> amps(shape.dimension(), Amp{0.0, 0.0});
    for (const auto& [ket, amp] : kets) {
        amps[shape.index_of(digits_from_string(ket))] = amp;
    }
    return PureState(shape, std::move(amps));
}

inline double max_amp_diff(const PureState& a, const PureState& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

inline double max_entry_diff(const LocalMatrix& a, const LocalMatrix& b) {
    double worst = 0.0;
    for (int r = 0; r < a.d(); ++r) {
        for (int c = 0; c < a.d(); ++c) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

// Independent oracle for apply_local: materialize I (x) ... (x) u (x) ... (x) I
// as a dense matrix (Kronecker product, row-major) and multiply naively.
inline PureState apply_local_oracle(const PureState& state, int particle, const LocalMatrix& u) {
    const RegisterShape& shape = state.shape();
    const std::size_t dim = shape.dimension();
    std::vector<Amp> full(dim * dim, Amp{0.0, 0.0});
    for (std::size_t row = 0; row < dim; ++row) {
        const std::vector<int> rd = shape.digits_of(row);
        for (std::size_t col = 0; col < dim; ++col) {
            const std::vector<int> cd = shape.digits_of(col);
            Amp entry{1.0, 0.0};
            for (int p = 1; p <= shape.parties(); ++p) {
                const int r = rd[static_cast<std::size_t>(p - 1)];
                const int c = cd[static_cast<std::size_t>(p - 1)];
                if (p == particle) {
                    entry *= u(r, c);
                } else if (r != c) {
                    entry = Amp{0.0, 0.0};
                    break;
                }
            }
            full[row * dim + col] = entry;
        }
    }
    std::vector<Amp> out(dim, Amp{0.0, 0.0});
    for (std::size_t row = 0; row < dim; ++row) {
        Amp s{0.0, 0.0};
        for (std::size_t col = 0; col < dim; ++col) s += full[row * dim + col] * state[col];
        out[row] = s;
    }
    return PureState(shape, std::move(out));
}

// Seeded random normalized state; plain mt19937_64 bits so every platform
// draws the same amplitudes.
inline PureState random_state(const RegisterShape& shape, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto unit = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    };
    std::vector<Amp> amps(shape.dimension());
    double n2 = 0.0;
    for (Amp& a : amps) {
        a = Amp{unit(), unit()};
        n2 += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (Amp& a : amps) a *= scale;
    return PureState(shape, std::move(amps));
}

// Cells of a pipe-delimited markdown table, separator row dropped.
inline std::vector<std::vector<std::string>> parse_markdown_table(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line.front() != '|') continue;
        if (line.find("---") != std::string::npos) continue;
        std::vector<std::string> cells;
        std::size_t start = 1;
        while (start < line.size()) {
            const std::size_t end = line.find('|', start);
            if (end == std::string::npos) break;
            std::string cell = line.substr(start, end - start);
            const std::size_t first = cell.find_first_not_of(' ');
            const std::size_t last = cell.find_last_not_of(' ');
            cells.push_back(first == std::string::npos ? ""
                                                       : cell.substr(first, last - first + 1));
            start = end + 1;
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

// Seeded random unitary via Gram-Schmidt on random complex columns.
inline LocalMatrix random_unitary(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto unit = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    };
    const std::size_t n = static_cast<std::size_t>(d);
    std::vector<std::vector<Amp>> cols(n, std::vector<Amp>(n));
    for (auto& col : cols) {
        for (Amp& a : col) a = Amp{unit(), unit()};
    }
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            Amp proj{0.0, 0.0};
            for (std::size_t r = 0; r < n; ++r) proj += std::conj(cols[prev][r]) * cols[c][r];
            for (std::size_t r = 0; r < n; ++r) cols[c][r] -= proj * cols[prev][r];
        }
        double n2 = 0.0;
        for (const Amp& a : cols[c]) n2 += std::norm(a);
        const double scale = 1.0 / std::sqrt(n2);
        for (Amp& a : cols[c]) a *= scale;
    }
    std::vector<Amp> entries(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) entries[r * n + c] = cols[c][r];
    }
    return LocalMatrix(d, std::move(entries));
}

}  // namespace qdc::test
