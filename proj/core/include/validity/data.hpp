#ifndef VALIDITY_DATA_HPP
#define VALIDITY_DATA_HPP

/**
 * @file data.hpp
 * @brief CSV ingestion and the bundled benchmark data sets.
 *
 * Builtins:
 *
 * - `iris`: the canonical 150 x 4 measurements, compiled in from
 *   core/data/iris.csv (SHA-256 pinned in iris.csv.sha256). Seed is ignored.
 * - `x30`: three groups of 10 points, uniform in unit disks centred on an
 *   equilateral triangle of side 15.
 * - `bensaid`: 49 points in three elongated groups of 24, 15 and 10 points,
 *   each uniform in a rotated rectangle.
 * - `starfield`: 66 points in eight compact groups (9, 9, 8, 8, 8, 8, 8, 8)
 *   uniform in unit disks on a 4 x 2 lattice with spacing 6. The original set
 *   is described as having eight or nine natural clusters; this generator
 *   targets eight.
 * - `butterfly`: fixed 15-point layout, two mirrored 7-point wings and one
 *   bridge point at the origin equidistant from both wing centres. Seed is
 *   ignored.
 *
 * Only iris reproduces published coordinates. The other sets are synthetic
 * stand-ins matching the published point counts, dimensionality and cluster
 * structure, and are deterministic in the seed.
 */

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "validity/core.hpp"

namespace validity::data {

enum class BuiltinName { bensaid, starfield, iris, x30, butterfly };

std::string_view to_string(BuiltinName name) noexcept;

/// Throws Error{invalid_request} for an unknown name.
BuiltinName parse_builtin_name(std::string_view text);

inline constexpr BuiltinName kAllBuiltins[] = {BuiltinName::bensaid, BuiltinName::starfield, BuiltinName::iris,
                                               BuiltinName::x30, BuiltinName::butterfly};

struct DatasetSpec {
    std::variant<std::filesystem::path, BuiltinName> source;
    std::optional<std::size_t> expected_n;
    std::optional<std::size_t> expected_d;
    std::optional<std::size_t> c_optimal;
    /// Free-form remark carried into reports.
    std::string note;
};

/**
 * Parse CSV text: comma-separated finite reals, one point per line, uniform
 * width. Lines starting with '#' and blank lines are skipped. Errors report
 * 1-based line numbers (and columns for bad cells).
 */
DataSet parse_csv(std::string_view text, std::string name = {});

/// Read and parse a CSV file. Throws Error{io} if it cannot be read.
DataSet load_csv(const std::filesystem::path& path);

std::pair<DataSet, DatasetSpec> builtin(BuiltinName name, std::uint64_t seed);
std::pair<DataSet, DatasetSpec> builtin(std::string_view name, std::uint64_t seed);

/// The embedded IRIS CSV text and the checksum it was verified against at build time.
std::string_view iris_csv_text() noexcept;
std::string_view iris_csv_sha256() noexcept;

}  // namespace validity::data

#endif
