// cli.hpp — command-line front end and serialization.
//
// Subcommands: basis, ops, table, roundtrip, verify, search, capacity.
// Output formats: json (full fidelity), csv (RFC-4180 quoting), markdown.
// Numeric text output is value-rounded to 12 decimal places so repeated runs
// are byte-identical.
//
// Exit codes:
//   0  success (for `verify`: plan is decodable)
//   1  usage or parse error
//   2  dimension cap or enumeration budget exceeded
//   3  `verify` completed and the plan is not decodable

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdc/bell.hpp"
#include "qdc/core.hpp"
#include "qdc/decodability.hpp"
#include "qdc/protocol.hpp"
#include "qdc/weyl.hpp"

namespace qdc::cli {

using json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitNotDecodable = 3;

enum class OutputFormat { json, csv, markdown };

struct RunConfig {
    int dim = 0;
    int parties = 2;
    std::optional<std::uint64_t> seed;
    OutputFormat format = OutputFormat::json;
    std::size_t dimension_cap = kDefaultDimCap;
    std::uint64_t budget = 1'000'000;
};

// Plan / message text did not parse; carries the offending position.
class PlanParseError : public std::runtime_error {
public:
    PlanParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// ---------------------------------------------------------------------------
// formatting helpers

// Round to 12 decimal places; -0 is normalized to +0.
inline double round12(double v) {
    double r = std::nearbyint(v * 1e12) / 1e12;
    if (r == 0.0) r = 0.0;
    return r;
}

inline std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", round12(v));
    return std::string(buf);
}

// Base-d digit string; digits are comma-separated once d needs more than one
// character per digit.
inline std::string digit_string(int d, std::span<const int> digits) {
    std::string s;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (d > 10 && i > 0) s += ',';
        s += std::to_string(digits[i]);
    }
    return s;
}

inline std::string ket_string(const RegisterShape& shape, std::size_t index) {
    const std::vector<int> digits = shape.digits_of(index);
    return digit_string(shape.d(), digits);
}

inline std::string bell_label_string(int d, const BellLabel& label) {
    return "Psi^" + std::to_string(label.n) + "_{" + digit_string(d, label.shifts) + "}";
}

inline std::string weyl_label_string(int d, const WeylLabel& label) {
    if (d > 10) return "U_{" + std::to_string(label.n) + "," + std::to_string(label.m) + "}";
    return "U_{" + std::to_string(label.n) + std::to_string(label.m) + "}";
}

// Compact token used by the plan grammar and --message: "nm" for d <= 10,
// "n.m" otherwise.
inline std::string weyl_label_token(int d, const WeylLabel& label) {
    if (d > 10) return std::to_string(label.n) + "." + std::to_string(label.m);
    return std::to_string(label.n) + std::to_string(label.m);
}

inline std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

// ---------------------------------------------------------------------------
// plan / message parsing

namespace detail {

inline WeylLabel parse_weyl_token(std::string_view token, int d, std::size_t pos) {
    if (token.empty()) throw PlanParseError("empty operation label", pos);
    const std::size_t dot = token.find('.');
    int n = 0;
    int m = 0;
    if (dot != std::string_view::npos) {
        const auto parse_int = [&](std::string_view text, std::size_t at) {
            int value = 0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size()) {
                throw PlanParseError("bad integer '" + std::string(text) + "'", at);
            }
            return value;
        };
        n = parse_int(token.substr(0, dot), pos);
        m = parse_int(token.substr(dot + 1), pos + dot + 1);
    } else {
        if (token.size() != 2 || !std::isdigit(static_cast<unsigned char>(token[0])) ||
            !std::isdigit(static_cast<unsigned char>(token[1]))) {
            throw PlanParseError("bad label '" + std::string(token) +
                                     "': expected two digits nm or n.m",
                                 pos);
        }
        n = token[0] - '0';
        m = token[1] - '0';
    }
    if (n < 0 || n >= d || m < 0 || m >= d) {
        throw PlanParseError("label (" + std::to_string(n) + "," + std::to_string(m) +
                                 ") out of range for dim " + std::to_string(d),
                             pos);
    }
    return WeylLabel{n, m};
}

// Split on `sep`, keeping the offset of each piece.
inline std::vector<std::pair<std::string_view, std::size_t>> split_with_pos(std::string_view text,
                                                                            char sep,
                                                                            std::size_t base) {
    std::vector<std::pair<std::string_view, std::size_t>> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = text.find(sep, start);
        if (end == std::string_view::npos) {
            parts.emplace_back(text.substr(start), base + start);
            return parts;
        }
        parts.emplace_back(text.substr(start, end - start), base + start);
        start = end + 1;
    }
}

}  // namespace detail

struct ParsedPlan {
    SenderPlan plan;
    std::vector<std::string> names;  // sender names as written in the spec
};

// Grammar: sender(';' sender)*, sender = NAME ':' ("all" | label(',' label)*),
// one sender per sender slot of the register, e.g. "B:all;C:00,10,20".
inline ParsedPlan parse_plan_spec(const std::string& spec, const RegisterShape& shape) {
    const auto senders = detail::split_with_pos(spec, ';', 0);
    if (senders.size() != static_cast<std::size_t>(shape.senders())) {
        throw PlanParseError("plan lists " + std::to_string(senders.size()) + " senders, register has " +
                                 std::to_string(shape.senders()),
                             0);
    }
    std::vector<std::string> names;
    std::vector<std::vector<WeylLabel>> allowed;
    for (const auto& [part, part_pos] : senders) {
        const std::size_t colon = part.find(':');
        if (colon == std::string_view::npos) {
            throw PlanParseError("missing ':' in sender spec '" + std::string(part) + "'", part_pos);
        }
        const std::string_view name = part.substr(0, colon);
        if (name.empty()) throw PlanParseError("empty sender name", part_pos);
        for (char c : name) {
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
                throw PlanParseError("bad sender name '" + std::string(name) + "'", part_pos);
            }
        }
        const std::string_view body = part.substr(colon + 1);
        const std::size_t body_pos = part_pos + colon + 1;
        std::vector<WeylLabel> set;
        if (body == "all") {
            set = all_weyl_labels(shape.d());
        } else {
            if (body.empty()) throw PlanParseError("empty allowed set", body_pos);
            for (const auto& [token, token_pos] : detail::split_with_pos(body, ',', body_pos)) {
                set.push_back(detail::parse_weyl_token(token, shape.d(), token_pos));
            }
        }
        names.emplace_back(name);
        allowed.push_back(std::move(set));
    }
    return ParsedPlan{SenderPlan(shape, std::move(allowed)), std::move(names)};
}

// Comma-separated label tokens, one per sender: "11,02".
inline Message parse_message_text(const std::string& text, const RegisterShape& shape) {
    Message message;
    for (const auto& [token, pos] : detail::split_with_pos(text, ',', 0)) {
        message.push_back(detail::parse_weyl_token(token, shape.d(), pos));
    }
    if (message.size() != static_cast<std::size_t>(shape.senders())) {
        throw PlanParseError("message lists " + std::to_string(message.size()) +
                                 " symbols, register has " + std::to_string(shape.senders()) +
                                 " senders",
                             0);
    }
    return message;
}

// Compact spec string for a plan ("S1:all;S2:00,11,22"); inverse of
// parse_plan_spec up to sender naming.
inline std::string plan_spec_string(const SenderPlan& plan,
                                    const std::vector<std::string>& names = {}) {
    const int d = plan.shape.d();
    const std::size_t all = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
    std::string spec;
    for (std::size_t k = 0; k < plan.allowed.size(); ++k) {
        if (k > 0) spec += ';';
        spec += (k < names.size()) ? names[k] : "S" + std::to_string(k + 1);
        spec += ':';
        if (plan.allowed[k].size() == all) {
            spec += "all";
        } else {
            for (std::size_t i = 0; i < plan.allowed[k].size(); ++i) {
                if (i > 0) spec += ',';
                spec += weyl_label_token(d, plan.allowed[k][i]);
            }
        }
    }
    return spec;
}

// ---------------------------------------------------------------------------
// shared JSON fragments

namespace detail {

inline json config_head(const char* command, const RunConfig& config, bool with_parties = true) {
    json head;
    head["command"] = command;
    head["dim"] = config.dim;
    if (with_parties) head["parties"] = config.parties;
    if (config.seed) head["seed"] = *config.seed;
    return head;
}

inline json amplitudes_json(const PureState& state) {
    json arr = json::array();
    for (std::size_t k = 0; k < state.dimension(); ++k) {
        const Amp& a = state[k];
        if (a.real() == 0.0 && a.imag() == 0.0) continue;
        json rec;
        rec["ket"] = ket_string(state.shape(), k);
        rec["re"] = round12(a.real());
        rec["im"] = round12(a.imag());
        arr.push_back(std::move(rec));
    }
    return arr;
}

inline json bell_label_json(int d, const BellLabel& label) {
    json rec;
    rec["n"] = label.n;
    rec["shifts"] = label.shifts;
    rec["label"] = bell_label_string(d, label);
    return rec;
}

inline json message_json(const Message& message) {
    json arr = json::array();
    for (const WeylLabel& l : message) arr.push_back(json::array({l.n, l.m}));
    return arr;
}

inline json plan_json(const SenderPlan& plan, const std::vector<std::string>& names = {}) {
    json arr = json::array();
    for (std::size_t k = 0; k < plan.allowed.size(); ++k) {
        json rec;
        rec["sender"] = (k < names.size()) ? names[k] : "S" + std::to_string(k + 1);
        json labels = json::array();
        for (const WeylLabel& l : plan.allowed[k]) labels.push_back(weyl_label_string(plan.shape.d(), l));
        rec["allowed"] = std::move(labels);
        arr.push_back(std::move(rec));
    }
    return arr;
}

inline void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace detail

// ---------------------------------------------------------------------------
// commands

inline int cmd_basis(const RunConfig& config, std::ostream& out) {
    const RegisterShape shape(config.dim, config.parties, config.dimension_cap);
    const auto basis = enumerate_basis(shape);
    switch (config.format) {
        case OutputFormat::json: {
            json j = detail::config_head("basis", config);
            json states = json::array();
            for (const auto& [label, state] : basis) {
                json rec = detail::bell_label_json(shape.d(), label);
                rec["amplitudes"] = detail::amplitudes_json(state);
                states.push_back(std::move(rec));
            }
            j["states"] = std::move(states);
            detail::emit_json(out, j);
            break;
        }
        case OutputFormat::csv: {
            out << "n,shifts,ket,re,im\r\n";
            for (const auto& [label, state] : basis) {
                const std::string shifts = digit_string(shape.d(), label.shifts);
                for (std::size_t k = 0; k < state.dimension(); ++k) {
                    const Amp& a = state[k];
                    if (a.real() == 0.0 && a.imag() == 0.0) continue;
                    out << label.n << ',' << csv_field(shifts) << ','
                        << csv_field(ket_string(shape, k)) << ',' << fmt_num(a.real()) << ','
                        << fmt_num(a.imag()) << "\r\n";
                }
            }
            break;
        }
        case OutputFormat::markdown: {
            out << "| state | ket | re | im |\n| --- | --- | --- | --- |\n";
            for (const auto& [label, state] : basis) {
                const std::string name = bell_label_string(shape.d(), label);
                for (std::size_t k = 0; k < state.dimension(); ++k) {
                    const Amp& a = state[k];
                    if (a.real() == 0.0 && a.imag() == 0.0) continue;
                    out << "| " << name << " | " << ket_string(shape, k) << " | "
                        << fmt_num(a.real()) << " | " << fmt_num(a.imag()) << " |\n";
                }
            }
            break;
        }
    }
    return kExitOk;
}

inline int cmd_ops(const RunConfig& config, std::ostream& out) {
    if (config.dim < 1) throw std::invalid_argument("ops: dim must be >= 1");
    const int d = config.dim;
    const auto labels = all_weyl_labels(d);
    switch (config.format) {
        case OutputFormat::json: {
            json j = detail::config_head("ops", config, /*with_parties=*/false);
            json operators = json::array();
            for (const WeylLabel& label : labels) {
                const LocalMatrix u = weyl_unitary(d, label);
                json rec;
                rec["n"] = label.n;
                rec["m"] = label.m;
                rec["label"] = weyl_label_string(d, label);
                json nonzero = json::array();
                for (int col = 0; col < d; ++col) {
                    const int row = (col + label.m) % d;
                    const Amp& e = u(row, col);
                    json cell;
                    cell["row"] = row;
                    cell["col"] = col;
                    cell["re"] = round12(e.real());
                    cell["im"] = round12(e.imag());
                    nonzero.push_back(std::move(cell));
                }
                rec["nonzero"] = std::move(nonzero);
                operators.push_back(std::move(rec));
            }
            j["operators"] = std::move(operators);
            detail::emit_json(out, j);
            break;
        }
        case OutputFormat::csv: {
            out << "n,m,row,col,re,im\r\n";
            for (const WeylLabel& label : labels) {
                const LocalMatrix u = weyl_unitary(d, label);
                for (int col = 0; col < d; ++col) {
                    const int row = (col + label.m) % d;
                    const Amp& e = u(row, col);
                    out << label.n << ',' << label.m << ',' << row << ',' << col << ','
                        << fmt_num(e.real()) << ',' << fmt_num(e.imag()) << "\r\n";
                }
            }
            break;
        }
        case OutputFormat::markdown: {
            out << "| operator | row | col | re | im |\n| --- | --- | --- | --- | --- |\n";
            for (const WeylLabel& label : labels) {
                const LocalMatrix u = weyl_unitary(d, label);
                for (int col = 0; col < d; ++col) {
                    const int row = (col + label.m) % d;
                    const Amp& e = u(row, col);
                    out << "| " << weyl_label_string(d, label) << " | " << row << " | " << col
                        << " | " << fmt_num(e.real()) << " | " << fmt_num(e.imag()) << " |\n";
                }
            }
            break;
        }
    }
    return kExitOk;
}

inline int cmd_table(const RunConfig& config, std::ostream& out) {
    if (config.parties != 3) {
        throw std::invalid_argument("table: the transformation table is three-party (parties = 3)");
    }
    const RegisterShape shape(config.dim, 3, config.dimension_cap);  // cap check
    const TransformationTable table = transformation_table(config.dim);
    const int d = table.d;
    switch (config.format) {
        case OutputFormat::json: {
            json j = detail::config_head("table", config);
            json rows = json::array();
            for (const WeylLabel& l : table.row_labels) rows.push_back(weyl_label_string(d, l));
            json cols = json::array();
            for (const WeylLabel& l : table.col_labels) cols.push_back(weyl_label_string(d, l));
            json cells = json::array();
            for (const auto& row : table.cells) {
                json row_json = json::array();
                for (const BellLabel& cell : row) row_json.push_back(bell_label_string(d, cell));
                cells.push_back(std::move(row_json));
            }
            j["rows"] = std::move(rows);
            j["cols"] = std::move(cols);
            j["cells"] = std::move(cells);
            detail::emit_json(out, j);
            break;
        }
        case OutputFormat::csv: {
            for (const WeylLabel& l : table.col_labels) out << ',' << csv_field(weyl_label_string(d, l));
            out << "\r\n";
            for (std::size_t r = 0; r < table.cells.size(); ++r) {
                out << csv_field(weyl_label_string(d, table.row_labels[r]));
                for (const BellLabel& cell : table.cells[r]) {
                    out << ',' << csv_field(bell_label_string(d, cell));
                }
                out << "\r\n";
            }
            break;
        }
        case OutputFormat::markdown: {
            out << "| U(B) \\ U(C) |";
            for (const WeylLabel& l : table.col_labels) out << ' ' << weyl_label_string(d, l) << " |";
            out << "\n|";
            for (std::size_t c = 0; c <= table.col_labels.size(); ++c) out << " --- |";
            out << "\n";
            for (std::size_t r = 0; r < table.cells.size(); ++r) {
                out << "| " << weyl_label_string(d, table.row_labels[r]) << " |";
                for (const BellLabel& cell : table.cells[r]) {
                    out << ' ' << bell_label_string(d, cell) << " |";
                }
                out << "\n";
            }
            break;
        }
    }
    return kExitOk;
}

inline int cmd_roundtrip(const RunConfig& config, const std::string& message_text,
                         std::ostream& out) {
    const RegisterShape shape(config.dim, config.parties, config.dimension_cap);
    const SenderPlan plan = canonical_plan(shape);
    const Message message = parse_message_text(message_text, shape);
    const ProtocolTranscript transcript = roundtrip(plan, message);
    const bool match = (transcript.decoded_message == transcript.message);

    switch (config.format) {
        case OutputFormat::json: {
            json j = detail::config_head("roundtrip", config);
            j["plan"] = detail::plan_json(plan);
            j["message"] = detail::message_json(transcript.message);
            json labels = json::array();
            for (const WeylLabel& l : transcript.message) {
                labels.push_back(weyl_label_string(shape.d(), l));
            }
            j["message_labels"] = std::move(labels);
            j["encoded_amplitudes"] = detail::amplitudes_json(transcript.encoded_state);
            j["decoded_label"] = detail::bell_label_json(shape.d(), transcript.decoded_label);
            j["decoded_message"] = detail::message_json(transcript.decoded_message);
            j["match"] = match;
            detail::emit_json(out, j);
            break;
        }
        case OutputFormat::csv: {
            out << "key,value\r\n";
            out << "dim," << config.dim << "\r\n";
            out << "parties," << config.parties << "\r\n";
            out << "message," << csv_field(message_text) << "\r\n";
            out << "decoded_label,"
                << csv_field(bell_label_string(shape.d(), transcript.decoded_label)) << "\r\n";
            std::string decoded;
            for (std::size_t k = 0; k < transcript.decoded_message.size(); ++k) {
                if (k > 0) decoded += ',';
                decoded += weyl_label_token(shape.d(), transcript.decoded_message[k]);
            }
            out << "decoded_message," << csv_field(decoded) << "\r\n";
            out << "match," << (match ? "true" : "false") << "\r\n";
            break;
        }
        case OutputFormat::markdown: {
            out << "- message:";
            for (const WeylLabel& l : transcript.message) {
                out << ' ' << weyl_label_string(shape.d(), l);
            }
            out << "\n- decoded label: " << bell_label_string(shape.d(), transcript.decoded_label)
                << "\n- decoded message:";
            for (const WeylLabel& l : transcript.decoded_message) {
                out << ' ' << weyl_label_string(shape.d(), l);
            }
            out << "\n- match: " << (match ? "true" : "false") << "\n";
            break;
        }
    }
    return kExitOk;
}

inline int cmd_verify(const RunConfig& config, const std::string& plan_spec, bool numeric_oracle,
                      std::ostream& out) {
    const RegisterShape shape(config.dim, config.parties, config.dimension_cap);
    ParsedPlan parsed = parse_plan_spec(plan_spec, shape);
    VerifyOptions opts;
    opts.numeric_oracle = numeric_oracle;
    opts.message_budget = config.budget;
    const DecodabilityReport report = verify_plan(parsed.plan, opts);

    switch (config.format) {
        case OutputFormat::json: {
            json j = detail::config_head("verify", config);
            j["plan"] = detail::plan_json(parsed.plan, parsed.names);
            j["plan_spec"] = plan_spec_string(parsed.plan, parsed.names);
            j["oracle"] = report.numeric_oracle ? "numeric" : "analytic";
            j["total_messages"] = report.total_messages;
            j["distinct_labels"] = report.distinct_labels;
            j["decodable"] = report.decodable;
            json collisions = json::array();
            for (const Collision& c : report.collisions) {
                json rec;
                rec["first"] = detail::message_json(c.first);
                rec["second"] = detail::message_json(c.second);
                rec["label"] = detail::bell_label_json(shape.d(), c.label);
                collisions.push_back(std::move(rec));
            }
            j["collisions"] = std::move(collisions);
            j["collisions_omitted"] = report.collisions_omitted;
            detail::emit_json(out, j);
            break;
        }
        case OutputFormat::csv: {
            out << "key,value\r\n";
            out << "plan," << csv_field(plan_spec_string(parsed.plan, parsed.names)) << "\r\n";
            out << "oracle," << (report.numeric_oracle ? "numeric" : "analytic") << "\r\n";
            out << "total_messages," << report.total_messages << "\r\n";
            out << "distinct_labels," << report.distinct_labels << "\r\n";
            out << "decodable," << (report.decodable ? "true" : "false") << "\r\n";
            out << "collision_witnesses," << report.collisions.size() << "\r\n";
            out << "collisions_omitted," << report.collisions_omitted << "\r\n";
            break;
        }
        case OutputFormat::markdown: {
            out << "- plan: " << plan_spec_string(parsed.plan, parsed.names) << "\n";
            out << "- oracle: " << (report.numeric_oracle ? "numeric" : "analytic") << "\n";
            out << "- total messages: " << report.total_messages << "\n";
            out << "- distinct labels: " << report.distinct_labels << "\n";
            out << "- decodable: " << (report.decodable ? "true" : "false") << "\n";
            for (const Collision& c : report.collisions) {
                out << "- collision: ";
                for (std::size_t k = 0; k < c.first.size(); ++k) {
                    out << (k ? "," : "") << weyl_label_token(shape.d(), c.first[k]);
                }
                out << " vs ";
                for (std::size_t k = 0; k < c.second.size(); ++k) {
                    out << (k ? "," : "") << weyl_label_token(shape.d(), c.second[k]);
                }
                out << " -> " << bell_label_string(shape.d(), c.label) << "\n";
            }
            if (report.collisions_omitted > 0) {
                out << "- collisions omitted: " << report.collisions_omitted << "\n";
            }
            break;
        }
    }
    return report.decodable ? kExitOk : kExitNotDecodable;
}

inline int cmd_search(const RunConfig& config, std::size_t subset_size, bool numeric_oracle,
                      std::ostream& out) {
    const RegisterShape shape(config.dim, config.parties, config.dimension_cap);
    VerifyOptions opts;
    opts.numeric_oracle = numeric_oracle;
    const SearchResult result = search_restricted_plans(shape, subset_size, config.budget, opts);

    switch (config.format) {
        case OutputFormat::json: {
            json j = detail::config_head("search", config);
            j["subset_size"] = subset_size;
            j["plans_total"] = result.plans_total;
            j["plans_enumerated"] = result.plans_enumerated;
            j["truncated"] = result.truncated;
            json reports = json::array();
            for (const DecodabilityReport& report : result.reports) {
                json rec;
                rec["plan_spec"] = plan_spec_string(report.plan);
                rec["total_messages"] = report.total_messages;
                rec["distinct_labels"] = report.distinct_labels;
                rec["decodable"] = report.decodable;
                rec["collision_count"] = report.collisions_omitted + report.collisions.size();
                reports.push_back(std::move(rec));
            }
            j["results"] = std::move(reports);
            detail::emit_json(out, j);
            break;
        }
        case OutputFormat::csv: {
            out << "plan,decodable,total_messages,distinct_labels\r\n";
            for (const DecodabilityReport& report : result.reports) {
                out << csv_field(plan_spec_string(report.plan)) << ','
                    << (report.decodable ? "true" : "false") << ',' << report.total_messages << ','
                    << report.distinct_labels << "\r\n";
            }
            if (result.truncated) out << "truncated,true,," << "\r\n";
            break;
        }
        case OutputFormat::markdown: {
            out << "| plan | decodable | total | distinct |\n| --- | --- | --- | --- |\n";
            for (const DecodabilityReport& report : result.reports) {
                out << "| " << plan_spec_string(report.plan) << " | "
                    << (report.decodable ? "true" : "false") << " | " << report.total_messages
                    << " | " << report.distinct_labels << " |\n";
            }
            if (result.truncated) out << "\n(truncated: plan budget exhausted)\n";
            break;
        }
    }
    return result.truncated ? kExitResource : kExitOk;
}

inline int cmd_capacity(const RunConfig& config, std::ostream& out) {
    const RegisterShape shape(config.dim, config.parties, config.dimension_cap);
    const double bits = capacity_bits(config.dim, config.parties);
    const std::uint64_t messages = shape.dimension();
    switch (config.format) {
        case OutputFormat::json: {
            json j = detail::config_head("capacity", config);
            j["bits"] = round12(bits);
            j["message_count"] = messages;
            detail::emit_json(out, j);
            break;
        }
        case OutputFormat::csv:
            out << "dim,parties,bits,message_count\r\n";
            out << config.dim << ',' << config.parties << ',' << fmt_num(bits) << ',' << messages
                << "\r\n";
            break;
        case OutputFormat::markdown:
            out << "- dim: " << config.dim << "\n- parties: " << config.parties
                << "\n- bits per round trip: " << fmt_num(bits)
                << "\n- distinguishable messages: " << messages << "\n";
            break;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// argument parsing and dispatch

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qudit dense-coding simulator and decodability toolkit"};
    app.require_subcommand(1);

    RunConfig config;
    std::optional<int> parties_arg;
    std::string format_name = "json";
    std::string message_text;
    std::string plan_spec;
    std::size_t subset_size = 1;
    bool numeric_oracle = false;

    const auto add_common = [&](CLI::App* sub, bool with_parties) {
        sub->add_option("--dim,-d", config.dim, "local dimension d")->required();
        if (with_parties) {
            sub->add_option("--parties,-p", parties_arg,
                            "number of qudits including the receiver");
        }
        sub->add_option("--format,-f", format_name, "output format: json, csv or markdown")
            ->check(CLI::IsMember({"json", "csv", "markdown"}));
        sub->add_option("--cap", config.dimension_cap, "register dimension cap")
            ->envname("QDC_DIM_CAP");
        sub->add_option("--seed", config.seed, "seed echoed into the output");
    };

    CLI::App* basis = app.add_subcommand("basis", "list every Bell basis state");
    add_common(basis, true);

    CLI::App* ops = app.add_subcommand("ops", "list the d^2 phase-and-shift unitaries");
    add_common(ops, false);

    CLI::App* table = app.add_subcommand("table", "three-party transformation table");
    add_common(table, true);

    CLI::App* rtrip = app.add_subcommand("roundtrip", "encode and decode one message");
    add_common(rtrip, true);
    rtrip->add_option("--message,-m", message_text,
                      "one label per sender, comma separated (e.g. 11,02)")
        ->required();

    CLI::App* verify = app.add_subcommand("verify", "certify a sender plan");
    add_common(verify, true);
    verify->add_option("--plan", plan_spec, "plan spec, e.g. \"B:all;C:00,01,02\"")->required();
    verify->add_option("--budget", config.budget, "message enumeration budget");
    verify->add_flag("--numeric-oracle", numeric_oracle,
                     "derive labels by dense matrix application instead of the composition rule");

    CLI::App* search = app.add_subcommand("search", "sweep restricted sender subsets");
    add_common(search, true);
    search->add_option("--subset-size,-s", subset_size, "allowed-set size for restricted senders")
        ->required();
    search->add_option("--budget", config.budget, "plan enumeration budget");
    search->add_flag("--numeric-oracle", numeric_oracle,
                     "derive labels by dense matrix application instead of the composition rule");

    CLI::App* capacity = app.add_subcommand("capacity", "bits per round trip");
    add_common(capacity, true);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (format_name == "csv") {
        config.format = OutputFormat::csv;
    } else if (format_name == "markdown") {
        config.format = OutputFormat::markdown;
    } else {
        config.format = OutputFormat::json;
    }
    // table and search are three-party tools by default; everything else pairs up
    config.parties = parties_arg.value_or((table->parsed() || search->parsed()) ? 3 : 2);

    try {
        if (basis->parsed()) return cmd_basis(config, out);
        if (ops->parsed()) return cmd_ops(config, out);
        if (table->parsed()) return cmd_table(config, out);
        if (rtrip->parsed()) return cmd_roundtrip(config, message_text, out);
        if (verify->parsed()) return cmd_verify(config, plan_spec, numeric_oracle, out);
        if (search->parsed()) return cmd_search(config, subset_size, numeric_oracle, out);
        if (capacity->parsed()) return cmd_capacity(config, out);
    } catch (const DimCapError& e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace qdc::cli
