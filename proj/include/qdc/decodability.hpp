// decodability.hpp — exhaustive certification of sender plans.
//
// A plan is decodable when distinct message tuples always land on distinct
// Bell labels.  The verifier enumerates every message combination and counts
// distinct labels, recording collision witnesses as it goes.  Labels come
// from the closed-form composition rule by default; an opt-in numeric path
// re-derives each label by dense matrix application and collective
// measurement, so the two routes can be checked against each other.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdc/bell.hpp"
#include "qdc/core.hpp"
#include "qdc/protocol.hpp"
#include "qdc/weyl.hpp"

namespace qdc {

// Enumeration work would exceed the configured budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Collision {
    Message first;   // earliest message mapping to the label
    Message second;  // a later message mapping to the same label
    BellLabel label;
};

struct DecodabilityReport {
    SenderPlan plan;
    std::uint64_t total_messages = 0;
    std::uint64_t distinct_labels = 0;
    bool decodable = false;
    bool numeric_oracle = false;  // which path produced the labels
    std::vector<Collision> collisions = {};
    std::uint64_t collisions_omitted = 0;  // witnesses beyond the cap
};

struct VerifyOptions {
    bool numeric_oracle = false;
    std::uint64_t message_budget = 1'000'000;
    std::size_t witness_cap = 32;
};

namespace detail {

// Message with the given mixed-radix ordinal (sender 1 most significant).
inline Message message_at(const SenderPlan& plan, std::uint64_t ordinal) {
    Message message(plan.allowed.size());
    for (std::size_t k = plan.allowed.size(); k-- > 0;) {
        const std::uint64_t size = plan.allowed[k].size();
        message[k] = plan.allowed[k][static_cast<std::size_t>(ordinal % size)];
        ordinal /= size;
    }
    return message;
}

}  // namespace detail

inline DecodabilityReport verify_plan(const SenderPlan& plan, const VerifyOptions& opts = {}) {
    DecodabilityReport report{plan};
    report.numeric_oracle = opts.numeric_oracle;
    report.total_messages = plan.message_count();
    if (report.total_messages > opts.message_budget) {
        throw BudgetError("verify_plan: " + std::to_string(report.total_messages) +
                          " messages exceed budget " + std::to_string(opts.message_budget));
    }

    // first_seen[label ordinal] = message ordinal, or -1 while unseen
    std::vector<std::int64_t> first_seen(plan.shape.dimension(), -1);
    const std::size_t senders = plan.allowed.size();
    std::vector<std::size_t> pick(senders, 0);
    Message message(senders);
    for (std::uint64_t ordinal = 0; ordinal < report.total_messages; ++ordinal) {
        for (std::size_t k = 0; k < senders; ++k) message[k] = plan.allowed[k][pick[k]];

        BellLabel label = opts.numeric_oracle
                              ? measure_decode(encode(plan, message)).label
                              : weyl_action_label(plan.shape.d(), message);
        const std::size_t ord = bell_label_ordinal(plan.shape, label);
        if (first_seen[ord] < 0) {
            first_seen[ord] = static_cast<std::int64_t>(ordinal);
            ++report.distinct_labels;
        } else if (report.collisions.size() < opts.witness_cap) {
            report.collisions.push_back(
                Collision{detail::message_at(plan, static_cast<std::uint64_t>(first_seen[ord])),
                          message, std::move(label)});
        } else {
            ++report.collisions_omitted;
        }

        for (std::size_t k = senders; k-- > 0;) {
            if (++pick[k] < plan.allowed[k].size()) break;
            pick[k] = 0;
        }
    }
    report.decodable = (report.distinct_labels == report.total_messages);
    return report;
}

// Three-party plans where sender 1 keeps all d^2 operations and sender 2
// picks exactly one operation from each of the d shift cosets: d^d plans,
// enumerated lexicographically over the per-coset phase choices.
inline std::vector<SenderPlan> one_per_coset_plans(int d, std::size_t cap = kDefaultDimCap) {
    if (d < 2) throw std::invalid_argument("one_per_coset_plans: d must be >= 2");
    const RegisterShape shape(d, 3, cap);
    std::vector<SenderPlan> plans;
    std::vector<int> phase_for_coset(static_cast<std::size_t>(d), 0);
    while (true) {
        std::vector<WeylLabel> picks;
        picks.reserve(static_cast<std::size_t>(d));
        for (int m = 0; m < d; ++m) {
            picks.push_back(WeylLabel{phase_for_coset[static_cast<std::size_t>(m)], m});
        }
        plans.emplace_back(shape,
                           std::vector<std::vector<WeylLabel>>{all_weyl_labels(d), std::move(picks)});
        int m = d - 1;
        for (; m >= 0; --m) {
            if (++phase_for_coset[static_cast<std::size_t>(m)] < d) break;
            phase_for_coset[static_cast<std::size_t>(m)] = 0;
        }
        if (m < 0) break;
    }
    return plans;
}

struct TransformationTable {
    int d = 0;
    std::vector<WeylLabel> row_labels;  // sender 1 operation (particle 2)
    std::vector<WeylLabel> col_labels;  // sender 2 operation (particle 3)
    std::vector<std::vector<BellLabel>> cells;
};

// The d^2 x d^2 table of Bell labels produced by (row op on particle 2,
// col op on particle 3) acting on the three-party resource state.  Rows and
// columns are listed shift-major (U_00, U_10, ..., U_01, ...).
inline TransformationTable transformation_table(int d) {
    if (d < 1) throw std::invalid_argument("transformation_table: d must be >= 1");
    TransformationTable table;
    table.d = d;
    table.row_labels = all_weyl_labels(d);
    table.col_labels = all_weyl_labels(d);
    table.cells.reserve(table.row_labels.size());
    for (const WeylLabel& row : table.row_labels) {
        std::vector<BellLabel> cells_row;
        cells_row.reserve(table.col_labels.size());
        for (const WeylLabel& col : table.col_labels) {
            cells_row.push_back(weyl_action_label(d, std::vector<WeylLabel>{row, col}));
        }
        table.cells.push_back(std::move(cells_row));
    }
    return table;
}

struct SearchResult {
    std::vector<DecodabilityReport> reports;  // decodable plans first, enumeration order within
    bool truncated = false;                   // plan budget ran out before the space was covered
    std::uint64_t plans_enumerated = 0;
    std::uint64_t plans_total = 0;  // full space size (saturating)
};

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a * b;
}

inline std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = saturating_mul(result, n - k + i);
        if (result == std::numeric_limits<std::uint64_t>::max()) return result;
        result /= i;
    }
    return result;
}

// Lexicographically next k-combination of {0, ..., n-1}; false when done.
inline bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
    const std::size_t k = comb.size();
    std::size_t i = k;
    while (i-- > 0) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

// Exhaustive sweep over restricted plans: sender 1 keeps all d^2 operations,
// every other sender gets a subset of exactly `subset_size` labels, and all
// subset combinations are enumerated (lexicographic in the shift-major label
// ordering, later senders varying fastest).  Decodable plans are listed
// first.  Stops after `plan_budget` plans and marks the result truncated.
inline SearchResult search_restricted_plans(const RegisterShape& shape, std::size_t subset_size,
                                            std::uint64_t plan_budget,
                                            const VerifyOptions& verify_opts = {}) {
    const int d = shape.d();
    const std::size_t label_count = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
    if (subset_size < 1 || subset_size > label_count) {
        throw std::invalid_argument("search_restricted_plans: subset size must be in [1, d^2]");
    }
    const std::size_t restricted = static_cast<std::size_t>(shape.senders()) - 1;
    const std::vector<WeylLabel> labels = all_weyl_labels(d);

    SearchResult result;
    result.plans_total = 1;
    const std::uint64_t per_sender = detail::binomial_saturating(label_count, subset_size);
    for (std::size_t k = 0; k < restricted; ++k) {
        result.plans_total = detail::saturating_mul(result.plans_total, per_sender);
    }

    std::vector<std::vector<std::size_t>> combs(restricted);
    for (auto& comb : combs) {
        comb.resize(subset_size);
        for (std::size_t i = 0; i < subset_size; ++i) comb[i] = i;
    }

    std::vector<DecodabilityReport> decodable;
    std::vector<DecodabilityReport> undecodable;
    while (true) {
        if (result.plans_enumerated >= plan_budget) {
            result.truncated = true;
            break;
        }
        std::vector<std::vector<WeylLabel>> allowed;
        allowed.reserve(restricted + 1);
        allowed.push_back(labels);
        for (const auto& comb : combs) {
            std::vector<WeylLabel> subset;
            subset.reserve(subset_size);
            for (std::size_t idx : comb) subset.push_back(labels[idx]);
            allowed.push_back(std::move(subset));
        }
        DecodabilityReport report = verify_plan(SenderPlan(shape, std::move(allowed)), verify_opts);
        ++result.plans_enumerated;
        (report.decodable ? decodable : undecodable).push_back(std::move(report));

        if (restricted == 0) break;
        std::size_t k = restricted;
        bool advanced = false;
        while (k-- > 0) {
            if (detail::next_combination(combs[k], label_count)) {
                advanced = true;
                break;
            }
            for (std::size_t i = 0; i < subset_size; ++i) combs[k][i] = i;
        }
        if (!advanced) break;
    }

    result.reports = std::move(decodable);
    result.reports.insert(result.reports.end(), std::make_move_iterator(undecodable.begin()),
                          std::make_move_iterator(undecodable.end()));
    return result;
}

}  // namespace qdc
