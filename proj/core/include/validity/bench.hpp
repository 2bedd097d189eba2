#ifndef VALIDITY_BENCH_HPP
#define VALIDITY_BENCH_HPP

/**
 * @file bench.hpp
 * @brief Sweep the cluster count, score every partition with every index,
 * and select the preferred c per index.
 */

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "validity/classic_indexes.hpp"
#include "validity/core.hpp"
#include "validity/fcm.hpp"
#include "validity/proximity_index.hpp"

namespace validity::bench {

enum class IndexId { pc, pe, xb, fs, k, cwb, bcrit, proposed };

inline constexpr IndexId kAllIndexes[] = {IndexId::pc, IndexId::pe,  IndexId::xb,    IndexId::fs,
                                          IndexId::k,  IndexId::cwb, IndexId::bcrit, IndexId::proposed};

/// Short CLI name: pc, pe, xb, fs, k, cwb, bcrit, proposed.
std::string_view to_string(IndexId id) noexcept;

/// Column label: V_PC, V_PE, ..., V_proposed.
std::string_view label(IndexId id) noexcept;

/// Throws Error{invalid_request} for an unknown name.
IndexId parse_index(std::string_view text);

/// Comma-separated list of index names; "all" selects every index.
std::vector<IndexId> parse_index_list(std::string_view text);

/// The partition coefficient is maximized; every other index is minimized.
bool maximized(IndexId id) noexcept;

struct SweepConfig {
    std::size_t c_min = 2;
    /// Defaults to floor(sqrt(n)).
    std::optional<std::size_t> c_max;
    FcmConfig fcm;
    proximity::MuGrid grid;
    proximity::WeightConfig weight;
    indexes::PeConfig pe;
    /// Unset means self-scaling: alpha is the CWB separation term of the c = 2 partition.
    std::optional<indexes::CwbParams> cwb;
    indexes::BcritParams bcrit;
    std::vector<IndexId> indexes{std::begin(kAllIndexes), std::end(kAllIndexes)};

    /// Resolved upper bound for a data set of n points.
    std::size_t resolved_c_max(std::size_t n) const;

    /// Throws Error{invalid_request} unless 2 <= c_min <= c_max <= n - 1 and all parameters are valid.
    void validate(std::size_t n) const;
};

struct SweepRow {
    std::size_t c = 0;
    bool failed = false;
    std::string failure;

    /// One score per report index, in report order. +inf marks an undefined score.
    std::vector<double> scores;

    std::optional<fcm::FcmResult> result;
};

struct ValidityReport {
    std::string dataset;
    std::size_t n = 0;
    std::size_t d = 0;

    /// Echo of the configuration with c_max and the CWB alpha resolved.
    SweepConfig config;
    std::size_t c_max = 0;
    double cwb_alpha = 0.0;
    bool cwb_alpha_self_scaled = false;

    std::vector<IndexId> indexes;
    std::vector<SweepRow> rows;

    /// Selected c per index (parallel to `indexes`); unset if no finite score exists.
    std::vector<std::optional<std::size_t>> selected;

    std::vector<std::string> notes;

    /// Selected c for `id`, if the index is present and has a finite score.
    std::optional<std::size_t> selected_for(IndexId id) const;

    /// Row for cluster count c, or nullptr.
    const SweepRow* row_for(std::size_t c) const;

    bool all_failed() const;
};

/// Pick the extreme finite score for each index column. Failed rows and +inf cells are skipped.
std::vector<std::optional<std::size_t>> select(const std::vector<IndexId>& indexes, const std::vector<SweepRow>& rows);

/**
 * Run FCM for c = c_min..c_max and score each winning partition. A solver
 * failure marks that row failed and the sweep continues.
 */
ValidityReport sweep(const DataSet& data, const SweepConfig& cfg);

enum class TableFormat { tsv, markdown };

/// Throws Error{invalid_request} unless "tsv" or "markdown".
TableFormat parse_table_format(std::string_view text);

/**
 * One row per c, one column per index. Selected cells are marked (bold in
 * markdown, trailing '*' in TSV); scores use 4 significant digits and +inf
 * prints as "inf". A header block echoes every scoring parameter, the FCM
 * metadata per c, and any notes.
 */
std::string emit_table(const ValidityReport& report, TableFormat format);

struct SummaryEntry {
    std::string dataset;
    std::optional<std::size_t> c_optimal;
    const ValidityReport* report = nullptr;
};

/// One row per data set: the reference c followed by the selected c of each index.
std::string emit_summary(const std::vector<SummaryEntry>& entries, TableFormat format);

/**
 * Sweep every builtin data set with default settings and `seed` (used as both
 * generator and FCM seed), then append the summary. This is the full benchmark
 * suite; output is byte-identical for a fixed seed.
 */
std::string run_suite(std::uint64_t seed, TableFormat format);

struct PlotOutcome {
    std::vector<std::string> warnings;
};

/**
 * Scatter plot as SVG: points coloured by their highest-membership cluster
 * with opacity equal to that membership, centroids drawn as crosses. Data with
 * d > 2 is projected onto the first two coordinates and a warning returned.
 */
std::string render_svg(const DataSet& data, const fcm::FcmResult& result, PlotOutcome* outcome = nullptr);

/// Write render_svg output to `path`. Throws Error{io} on failure.
PlotOutcome emit_plot(const DataSet& data, const fcm::FcmResult& result, const std::filesystem::path& path);

}  // namespace validity::bench

#endif
