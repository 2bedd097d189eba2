#include "validity/data.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace validity::detail {
extern const std::string_view iris_csv_text;
extern const std::string_view iris_csv_sha256;
}  // namespace validity::detail

namespace validity::data {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_cell(std::string_view cell, std::size_t line, std::size_t column) {
    cell = trim(cell);
    double value = 0.0;
    const char* end = cell.data() + cell.size();
    // from_chars rejects a leading '+', which some writers emit.
    const char* begin = (!cell.empty() && cell.front() == '+') ? cell.data() + 1 : cell.data();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (cell.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw Error(ErrorKind::format, "non-numeric cell '" + std::string(cell) + "' at row " + std::to_string(line) +
                                           ", column " + std::to_string(column));
    }
    return value;
}

}  // namespace

std::string_view to_string(BuiltinName name) noexcept {
    switch (name) {
    case BuiltinName::bensaid: return "bensaid";
    case BuiltinName::starfield: return "starfield";
    case BuiltinName::iris: return "iris";
    case BuiltinName::x30: return "x30";
    case BuiltinName::butterfly: return "butterfly";
    }
    return "unknown";
}

BuiltinName parse_builtin_name(std::string_view text) {
    for (auto name : kAllBuiltins) {
        if (text == to_string(name)) {
            return name;
        }
    }
    throw Error(ErrorKind::invalid_request, "unknown builtin data set '" + std::string(text) +
                                                "' (expected bensaid|starfield|iris|x30|butterfly)");
}

DataSet parse_csv(std::string_view text, std::string name) {
    std::vector<double> values;
    std::size_t width = 0;
    std::size_t rows = 0;
    std::size_t line_no = 0;

    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }

        std::size_t cells = 0;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            values.push_back(parse_cell(line.substr(start, comma - start), line_no, cells + 1));
            ++cells;
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }

        if (rows == 0) {
            width = cells;
        } else if (cells != width) {
            throw Error(ErrorKind::format, "ragged row at row " + std::to_string(line_no) + ": " +
                                               std::to_string(cells) + " cells, expected " + std::to_string(width));
        }
        ++rows;
    }

    if (rows < 2) {
        throw Error(ErrorKind::too_small, "CSV has " + std::to_string(rows) + " data rows; at least 2 are required");
    }
    return DataSet(width, std::move(values), std::move(name));
}

DataSet load_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::io, "cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw Error(ErrorKind::io, "failed reading " + path.string());
    }
    return parse_csv(buffer.str(), path.stem().string());
}

std::string_view iris_csv_text() noexcept { return detail::iris_csv_text; }
std::string_view iris_csv_sha256() noexcept { return detail::iris_csv_sha256; }

std::pair<DataSet, DatasetSpec> builtin(std::string_view name, std::uint64_t seed) {
    return builtin(parse_builtin_name(name), seed);
}

}  // namespace validity::data
