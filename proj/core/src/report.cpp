#include <cmath>
#include <cstdio>
#include <string>

#include "validity/bench.hpp"
#include "validity/data.hpp"

namespace validity::bench {

namespace {

std::string format_number(const char* spec, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, value);
    return buf;
}

std::string format_score(double value) {
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    if (std::isnan(value)) {
        return "nan";
    }
    return format_number("%.4g", value);
}

std::string format_param(double value) { return format_number("%.10g", value); }

std::string optional_count(const std::optional<std::size_t>& c) { return c ? std::to_string(*c) : "-"; }

/// Lines describing every parameter that affects a score, plus per-c FCM metadata and notes.
std::vector<std::string> header_lines(const ValidityReport& r) {
    const auto& cfg = r.config;
    std::vector<std::string> out;
    out.push_back("dataset=" + r.dataset + " n=" + std::to_string(r.n) + " d=" + std::to_string(r.d));
    out.push_back("c_min=" + std::to_string(cfg.c_min) + " c_max=" + std::to_string(r.c_max));
    out.push_back("fcm.m=" + format_param(cfg.fcm.m) + " fcm.epsilon=" + format_param(cfg.fcm.epsilon) +
                  " fcm.max_iter=" + std::to_string(cfg.fcm.max_iter) + " fcm.restarts=" +
                  std::to_string(cfg.fcm.restarts) + " fcm.seed=" + std::to_string(cfg.fcm.seed));
    out.push_back("mu_step=" + format_param(cfg.grid.step) + " omega=" + std::string(proximity::to_string(cfg.weight.mode)) +
                  " omega.vague_floor=" + format_param(cfg.weight.vague_floor) +
                  " omega.crisp_ceiling=" + format_param(cfg.weight.crisp_ceiling));
    out.push_back("pe.log_base=" + format_param(cfg.pe.log_base) + " cwb.alpha=" + format_param(r.cwb_alpha) +
                  (r.cwb_alpha_self_scaled ? " (self-scaled)" : "") + " bcrit.alpha=" + format_param(cfg.bcrit.alpha));
    for (const auto& row : r.rows) {
        if (row.failed) {
            out.push_back("fcm c=" + std::to_string(row.c) + " FAILED: " + row.failure);
            continue;
        }
        const auto& res = *row.result;
        out.push_back("fcm c=" + std::to_string(row.c) + " jm=" + format_param(res.final_jm()) +
                      " iterations=" + std::to_string(res.iterations) + " converged=" +
                      (res.converged ? "yes" : "no") + " restart=" + std::to_string(res.restart_index) +
                      " seed=" + std::to_string(res.seed_used));
    }
    std::string sel = "selected";
    for (std::size_t k = 0; k < r.indexes.size(); ++k) {
        sel += " " + std::string(label(r.indexes[k])) + "=" + optional_count(r.selected[k]);
    }
    out.push_back(sel);
    for (const auto& note : r.notes) {
        out.push_back("note: " + note);
    }
    return out;
}

std::string join_row(const std::vector<std::string>& cells, TableFormat format) {
    std::string line;
    if (format == TableFormat::tsv) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            line += (k ? "\t" : "") + cells[k];
        }
    } else {
        line = "|";
        for (const auto& cell : cells) {
            line += " " + cell + " |";
        }
    }
    return line + "\n";
}

std::string separator_row(std::size_t columns) {
    std::string line = "|";
    for (std::size_t k = 0; k < columns; ++k) {
        line += " --- |";
    }
    return line + "\n";
}

}  // namespace

TableFormat parse_table_format(std::string_view text) {
    if (text == "tsv") {
        return TableFormat::tsv;
    }
    if (text == "markdown" || text == "md") {
        return TableFormat::markdown;
    }
    throw Error(ErrorKind::invalid_request, "unknown table format '" + std::string(text) + "' (expected tsv|markdown)");
}

std::string emit_table(const ValidityReport& report, TableFormat format) {
    if (report.rows.empty()) {
        throw Error(ErrorKind::invalid_request, "cannot emit an empty report");
    }
    std::string out;
    for (const auto& line : header_lines(report)) {
        out += (format == TableFormat::tsv ? "# " : "> ") + line + (format == TableFormat::markdown ? "  \n" : "\n");
    }
    if (format == TableFormat::markdown) {
        out += "\n";
    }

    std::vector<std::string> head{"c"};
    for (auto id : report.indexes) {
        head.emplace_back(label(id));
    }
    out += join_row(head, format);
    if (format == TableFormat::markdown) {
        out += separator_row(head.size());
    }

    for (const auto& row : report.rows) {
        std::vector<std::string> cells{std::to_string(row.c)};
        for (std::size_t k = 0; k < report.indexes.size(); ++k) {
            if (row.failed) {
                cells.emplace_back("FAILED");
                continue;
            }
            std::string cell = format_score(row.scores[k]);
            if (report.selected[k] == row.c) {
                cell = format == TableFormat::tsv ? cell + "*" : "**" + cell + "**";
            }
            cells.push_back(std::move(cell));
        }
        out += join_row(cells, format);
    }
    return out;
}

std::string emit_summary(const std::vector<SummaryEntry>& entries, TableFormat format) {
    std::vector<std::string> head{"dataset", "c_optimal"};
    for (auto id : kAllIndexes) {
        head.emplace_back(label(id));
    }
    std::string out = join_row(head, format);
    if (format == TableFormat::markdown) {
        out += separator_row(head.size());
    }
    for (const auto& e : entries) {
        std::vector<std::string> cells{e.dataset, optional_count(e.c_optimal)};
        for (auto id : kAllIndexes) {
            cells.push_back(e.report ? optional_count(e.report->selected_for(id)) : "-");
        }
        out += join_row(cells, format);
    }
    return out;
}

std::string run_suite(std::uint64_t seed, TableFormat format) {
    SweepConfig cfg;
    cfg.fcm.seed = seed;

    std::vector<ValidityReport> reports;
    std::vector<std::optional<std::size_t>> optimal;
    for (auto name : data::kAllBuiltins) {
        auto [ds, spec] = data::builtin(name, seed);
        auto report = sweep(ds, cfg);
        if (!spec.note.empty()) {
            report.notes.push_back(spec.note);
        }
        reports.push_back(std::move(report));
        optimal.push_back(spec.c_optimal);
    }

    std::string text;
    std::vector<SummaryEntry> entries;
    for (std::size_t k = 0; k < reports.size(); ++k) {
        text += emit_table(reports[k], format) + "\n";
        entries.push_back({reports[k].dataset, optimal[k], &reports[k]});
    }
    return text + emit_summary(entries, format);
}

}  // namespace validity::bench
