// Hand-written d=3 fixtures: the nine two-party Bell states, the nine 3x3
// phase-and-shift unitaries, a few three-party basis states, and the full
// 9x9 three-party transformation table, all spelled out longhand so the
// tests never depend on the code paths they are checking.

#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "helpers.hpp"
#include "qdc/bell.hpp"
#include "qdc/core.hpp"
#include "qdc/weyl.hpp"

namespace qdc::test {

// (label, kets) for the two-party d=3 basis in its conventional listing
// order: all phases for shift 0, then shift 1, then shift 2.
inline std::vector<std::pair<BellLabel, std::map<std::string, Amp>>> two_party_basis_d3() {
    const Amp one{1.0, 0.0};
    const double s = kSqrt3Inv;
    return {
        {BellLabel{0, {0}}, {{"00", s * one}, {"11", s * one}, {"22", s * one}}},
        {BellLabel{1, {0}}, {{"00", s * one}, {"11", s * kW3}, {"22", s * kW3Sq}}},
        {BellLabel{2, {0}}, {{"00", s * one}, {"11", s * kW3Sq}, {"22", s * kW3}}},
        {BellLabel{0, {1}}, {{"01", s * one}, {"12", s * one}, {"20", s * one}}},
        {BellLabel{1, {1}}, {{"01", s * one}, {"12", s * kW3}, {"20", s * kW3Sq}}},
        {BellLabel{2, {1}}, {{"01", s * one}, {"12", s * kW3Sq}, {"20", s * kW3}}},
        {BellLabel{0, {2}}, {{"02", s * one}, {"10", s * one}, {"21", s * one}}},
        {BellLabel{1, {2}}, {{"02", s * one}, {"10", s * kW3}, {"21", s * kW3Sq}}},
        {BellLabel{2, {2}}, {{"02", s * one}, {"10", s * kW3Sq}, {"21", s * kW3}}},
    };
}

// The nine 3x3 unitaries in the same listing order, row-major.
inline std::vector<std::pair<WeylLabel, std::array<Amp, 9>>> weyl_matrices_d3() {
    const Amp o{1.0, 0.0};
    const Amp z{0.0, 0.0};
    const Amp w = kW3;
    const Amp w2 = kW3Sq;
    return {
        {WeylLabel{0, 0}, {o, z, z, z, o, z, z, z, o}},
        {WeylLabel{1, 0}, {o, z, z, z, w, z, z, z, w2}},
        {WeylLabel{2, 0}, {o, z, z, z, w2, z, z, z, w}},
        {WeylLabel{0, 1}, {z, z, o, o, z, z, z, o, z}},
        {WeylLabel{1, 1}, {z, z, w2, o, z, z, z, w, z}},
        {WeylLabel{2, 1}, {z, z, w, o, z, z, z, w2, z}},
        {WeylLabel{0, 2}, {z, o, z, z, z, o, o, z, z}},
        {WeylLabel{1, 2}, {z, w, z, z, z, w2, o, z, z}},
        {WeylLabel{2, 2}, {z, w2, z, z, z, w, o, z, z}},
    };
}

// The explicitly listed three-party d=3 basis states.
inline std::vector<std::pair<BellLabel, std::map<std::string, Amp>>> three_party_states_d3() {
    const Amp one{1.0, 0.0};
    const double s = kSqrt3Inv;
    return {
        {BellLabel{0, {0, 0}}, {{"000", s * one}, {"111", s * one}, {"222", s * one}}},
        {BellLabel{0, {0, 1}}, {{"001", s * one}, {"112", s * one}, {"220", s * one}}},
        {BellLabel{0, {0, 2}}, {{"002", s * one}, {"110", s * one}, {"221", s * one}}},
        {BellLabel{2, {2, 2}}, {{"022", s * one}, {"100", s * kW3Sq}, {"211", s * kW3}}},
    };
}

// Row labels of the d=3 transformation table (the row that is misprinted
// U_{20} in the published table appears here under its corrected label U_{02}).
inline std::vector<std::string> table_row_labels_d3() {
    return {"U_{00}", "U_{10}", "U_{20}", "U_{01}", "U_{11}",
            "U_{21}", "U_{02}", "U_{12}", "U_{22}"};
}

inline std::vector<std::string> table_col_labels_d3() {
    return {"U_{00}", "U_{10}", "U_{20}", "U_{01}", "U_{11}",
            "U_{21}", "U_{02}", "U_{12}", "U_{22}"};
}

// All 81 cells, row by row, transcribed entry by entry.
inline std::vector<std::vector<std::string>> table_cells_d3() {
    return {
        {"Psi^0_{00}", "Psi^1_{00}", "Psi^2_{00}", "Psi^0_{01}", "Psi^1_{01}", "Psi^2_{01}",
         "Psi^0_{02}", "Psi^1_{02}", "Psi^2_{02}"},
        {"Psi^1_{00}", "Psi^2_{00}", "Psi^0_{00}", "Psi^1_{01}", "Psi^2_{01}", "Psi^0_{01}",
         "Psi^1_{02}", "Psi^2_{02}", "Psi^0_{02}"},
        {"Psi^2_{00}", "Psi^0_{00}", "Psi^1_{00}", "Psi^2_{01}", "Psi^0_{01}", "Psi^1_{01}",
         "Psi^2_{02}", "Psi^0_{02}", "Psi^1_{02}"},
        {"Psi^0_{10}", "Psi^1_{10}", "Psi^2_{10}", "Psi^0_{11}", "Psi^1_{11}", "Psi^2_{11}",
         "Psi^0_{12}", "Psi^1_{12}", "Psi^2_{12}"},
        {"Psi^1_{10}", "Psi^2_{10}", "Psi^0_{10}", "Psi^1_{11}", "Psi^2_{11}", "Psi^0_{11}",
         "Psi^1_{12}", "Psi^2_{12}", "Psi^0_{12}"},
        {"Psi^2_{10}", "Psi^0_{10}", "Psi^1_{10}", "Psi^2_{11}", "Psi^0_{11}", "Psi^1_{11}",
         "Psi^2_{12}", "Psi^0_{12}", "Psi^1_{12}"},
        {"Psi^0_{20}", "Psi^1_{20}", "Psi^2_{20}", "Psi^0_{21}", "Psi^1_{21}", "Psi^2_{21}",
         "Psi^0_{22}", "Psi^1_{22}", "Psi^2_{22}"},
        {"Psi^1_{20}", "Psi^2_{20}", "Psi^0_{20}", "Psi^1_{21}", "Psi^2_{21}", "Psi^0_{21}",
         "Psi^1_{22}", "Psi^2_{22}", "Psi^0_{22}"},
        {"Psi^2_{20}", "Psi^0_{20}", "Psi^1_{20}", "Psi^2_{21}", "Psi^0_{21}", "Psi^1_{21}",
         "Psi^2_{22}", "Psi^0_{22}", "Psi^1_{22}"},
    };
}

}  // namespace qdc::test
