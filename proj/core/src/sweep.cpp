#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "validity/bench.hpp"

namespace validity::bench {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double score(IndexId id, const DataSet& data, const fcm::FcmResult& r, const SweepConfig& cfg, double cwb_alpha) {
    try {
        switch (id) {
        case IndexId::pc: return indexes::v_pc(r.u);
        case IndexId::pe: return indexes::v_pe(r.u, cfg.pe);
        case IndexId::xb: return indexes::v_xb(data, r.u, r.v);
        case IndexId::fs: return indexes::v_fs(data, r.u, r.v);
        case IndexId::k: return indexes::v_k(data, r.u, r.v);
        case IndexId::cwb: return indexes::v_cwb(data, r.u, r.v, indexes::CwbParams{cwb_alpha});
        case IndexId::bcrit: return indexes::v_bcrit(data, r.u, r.v, cfg.bcrit);
        case IndexId::proposed: return proximity::v_proposed(r.u, cfg.grid, cfg.weight);
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::separation_zero) {
            return kInf;
        }
        throw;
    }
    return kInf;
}

}  // namespace

std::string_view to_string(IndexId id) noexcept {
    switch (id) {
    case IndexId::pc: return "pc";
    case IndexId::pe: return "pe";
    case IndexId::xb: return "xb";
    case IndexId::fs: return "fs";
    case IndexId::k: return "k";
    case IndexId::cwb: return "cwb";
    case IndexId::bcrit: return "bcrit";
    case IndexId::proposed: return "proposed";
    }
    return "unknown";
}

std::string_view label(IndexId id) noexcept {
    switch (id) {
    case IndexId::pc: return "V_PC";
    case IndexId::pe: return "V_PE";
    case IndexId::xb: return "V_XB";
    case IndexId::fs: return "V_FS";
    case IndexId::k: return "V_K";
    case IndexId::cwb: return "V_CWB";
    case IndexId::bcrit: return "V_Bcrit";
    case IndexId::proposed: return "V_proposed";
    }
    return "?";
}

IndexId parse_index(std::string_view text) {
    for (auto id : kAllIndexes) {
        if (text == to_string(id)) {
            return id;
        }
    }
    throw Error(ErrorKind::invalid_request, "unknown index '" + std::string(text) +
                                                "' (expected pc|pe|xb|fs|k|cwb|bcrit|proposed)");
}

std::vector<IndexId> parse_index_list(std::string_view text) {
    if (text == "all") {
        return {std::begin(kAllIndexes), std::end(kAllIndexes)};
    }
    std::vector<IndexId> out;
    while (true) {
        const auto comma = text.find(',');
        auto item = text.substr(0, comma);
        while (!item.empty() && item.front() == ' ') {
            item.remove_prefix(1);
        }
        while (!item.empty() && item.back() == ' ') {
            item.remove_suffix(1);
        }
        const IndexId id = parse_index(item);
        if (std::find(out.begin(), out.end(), id) != out.end()) {
            throw Error(ErrorKind::invalid_request, "index '" + std::string(item) + "' listed twice");
        }
        out.push_back(id);
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return out;
}

bool maximized(IndexId id) noexcept { return id == IndexId::pc; }

std::size_t SweepConfig::resolved_c_max(std::size_t n) const {
    if (c_max) {
        return *c_max;
    }
    return static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
}

void SweepConfig::validate(std::size_t n) const {
    const std::size_t upper = resolved_c_max(n);
    if (c_min < 2 || c_min > upper || upper + 1 > n) {
        throw Error(ErrorKind::invalid_request, "cluster range [" + std::to_string(c_min) + ", " +
                                                    std::to_string(upper) + "] must satisfy 2 <= c_min <= c_max <= " +
                                                    std::to_string(n) + " - 1");
    }
    if (indexes.empty()) {
        throw Error(ErrorKind::invalid_request, "no indexes selected");
    }
    fcm.validate();
    grid.validate();
    weight.validate();
    pe.validate();
    if (cwb) {
        cwb->validate();
    }
    bcrit.validate();
}

std::optional<std::size_t> ValidityReport::selected_for(IndexId id) const {
    for (std::size_t k = 0; k < indexes.size(); ++k) {
        if (indexes[k] == id) {
            return selected[k];
        }
    }
    return std::nullopt;
}

const SweepRow* ValidityReport::row_for(std::size_t c) const {
    for (const auto& row : rows) {
        if (row.c == c) {
            return &row;
        }
    }
    return nullptr;
}

bool ValidityReport::all_failed() const {
    return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.failed; });
}

std::vector<std::optional<std::size_t>> select(const std::vector<IndexId>& ids, const std::vector<SweepRow>& rows) {
    std::vector<std::optional<std::size_t>> out(ids.size());
    for (std::size_t k = 0; k < ids.size(); ++k) {
        const bool want_max = maximized(ids[k]);
        std::optional<double> best;
        for (const auto& row : rows) {
            if (row.failed || !std::isfinite(row.scores[k])) {
                continue;
            }
            const double s = row.scores[k];
            // Strict comparison: ties go to the smaller c.
            if (!best || (want_max ? s > *best : s < *best)) {
                best = s;
                out[k] = row.c;
            }
        }
    }
    return out;
}

ValidityReport sweep(const DataSet& data, const SweepConfig& cfg) {
    cfg.validate(data.size());

    ValidityReport report;
    report.dataset = data.name();
    report.n = data.size();
    report.d = data.dim();
    report.config = cfg;
    report.c_max = cfg.resolved_c_max(data.size());
    report.config.c_max = report.c_max;
    report.indexes = cfg.indexes;

    for (std::size_t c = cfg.c_min; c <= report.c_max; ++c) {
        SweepRow row;
        row.c = c;
        try {
            row.result = fcm::run(data, c, cfg.fcm);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::solver_failure) {
                throw;
            }
            row.failed = true;
            row.failure = e.what();
        }
        report.rows.push_back(std::move(row));
    }

    const bool wants_cwb = std::find(cfg.indexes.begin(), cfg.indexes.end(), IndexId::cwb) != cfg.indexes.end();
    if (cfg.cwb) {
        report.cwb_alpha = cfg.cwb->alpha;
    } else if (wants_cwb) {
        // Self-scaling alpha: the separation term of the c = 2 partition.
        report.cwb_alpha_self_scaled = true;
        report.cwb_alpha = 1.0;
        std::optional<fcm::FcmResult> two;
        if (const SweepRow* r = report.row_for(2); r && !r->failed) {
            two = r->result;
        } else if (!report.row_for(2)) {
            try {
                two = fcm::run(data, 2, cfg.fcm);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::solver_failure) {
                    throw;
                }
            }
        }
        double alpha = kInf;
        if (two) {
            try {
                alpha = indexes::cwb_separation(two->v);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::separation_zero) {
                    throw;
                }
            }
        }
        if (std::isfinite(alpha)) {
            report.cwb_alpha = alpha;
        } else {
            report.notes.push_back("CWB alpha could not be self-scaled from the c=2 partition; using 1.0");
        }
    }

    for (auto& row : report.rows) {
        if (row.failed) {
            continue;
        }
        row.scores.reserve(cfg.indexes.size());
        for (auto id : cfg.indexes) {
            row.scores.push_back(score(id, data, *row.result, cfg, report.cwb_alpha));
        }
    }

    report.selected = select(report.indexes, report.rows);
    return report;
}

}  // namespace validity::bench
