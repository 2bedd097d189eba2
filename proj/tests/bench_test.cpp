#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "validity/bench.hpp"
#include "validity/data.hpp"

using namespace validity;
using namespace validity::bench;

namespace {

size_t count_of(const std::string& text, const std::string& needle) {
    size_t n = 0;
    for (size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
    return n;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

/// Re-derive each index's preferred c from its column.
void check_selection(const ValidityReport& r) {
    for (size_t k = 0; k < r.indexes.size(); ++k) {
        std::optional<size_t> best;
        double best_score = 0;
        for (const auto& row : r.rows) {
            if (row.failed || !std::isfinite(row.scores[k])) continue;
            const double s = row.scores[k];
            const bool better = maximized(r.indexes[k]) ? s > best_score : s < best_score;
            if (!best || better) {
                best = row.c;
                best_score = s;
            }
        }
        CHECK_MESSAGE(r.selected[k] == best, label(r.indexes[k]));
    }
}

ValidityReport hand_report() {
    ValidityReport r;
    r.dataset = "hand";
    r.n = 10;
    r.d = 2;
    r.c_max = 3;
    r.indexes = {IndexId::pc};
    SweepRow ok;
    ok.c = 2;
    ok.scores = {0.75};
    ok.result = fcm::run(DataSet({{0.0}, {1.0}, {5.0}}), 2, FcmConfig{});
    SweepRow bad;
    bad.c = 3;
    bad.failed = true;
    bad.failure = "every restart degenerated";
    r.rows = {ok, bad};
    r.selected = select(r.indexes, r.rows);
    return r;
}

}  // namespace

TEST_CASE("index names") {
    for (auto id : kAllIndexes) CHECK(parse_index(to_string(id)) == id);
    CHECK(label(IndexId::proposed) == "V_proposed");
    CHECK(maximized(IndexId::pc));
    CHECK_FALSE(maximized(IndexId::pe));
    CHECK(parse_index_list("all").size() == 8);
    CHECK(parse_index_list("pc, xb") == std::vector<IndexId>{IndexId::pc, IndexId::xb});
    CHECK_THROWS_KIND(parse_index_list("pc,pc"), ErrorKind::invalid_request);
    CHECK_THROWS_KIND(parse_index_list("pc,dunn"), ErrorKind::invalid_request);
    CHECK_THROWS_KIND(parse_table_format("csv"), ErrorKind::invalid_request);
}

TEST_CASE("select") {
    std::vector<SweepRow> rows(4);
    const double inf = std::numeric_limits<double>::infinity();
    const std::vector<std::vector<double>> scores{{0.5, 3.0, inf}, {0.9, 2.0, inf}, {0.9, 1.0, inf}, {0.1, 1.0, inf}};
    for (size_t k = 0; k < 4; ++k) {
        rows[k].c = k + 2;
        rows[k].scores = scores[k];
    }
    auto sel = select({IndexId::pc, IndexId::xb, IndexId::k}, rows);
    CHECK(sel[0] == 3u);  // tie goes to the smaller c
    CHECK(sel[1] == 4u);
    CHECK_FALSE(sel[2].has_value());
    rows[1].failed = true;
    sel = select({IndexId::pc, IndexId::xb, IndexId::k}, rows);
    CHECK(sel[0] == 4u);
}

TEST_CASE("SweepConfig") {
    SweepConfig cfg;
    CHECK(cfg.resolved_c_max(30) == 5);
    CHECK(cfg.resolved_c_max(150) == 12);
    CHECK_NOTHROW(cfg.validate(30));
    cfg.c_min = 1;
    CHECK_THROWS_KIND(cfg.validate(30), ErrorKind::invalid_request);
    cfg.c_min = 4;
    cfg.c_max = 3;
    CHECK_THROWS_KIND(cfg.validate(30), ErrorKind::invalid_request);
    cfg.c_min = 2;
    cfg.c_max = 30;
    CHECK_THROWS_KIND(cfg.validate(30), ErrorKind::invalid_request);
    cfg.c_max = 29;
    CHECK_NOTHROW(cfg.validate(30));
}

TEST_CASE("sweep on x30") {
    auto [ds, spec] = data::builtin(data::BuiltinName::x30, 0);
    SweepConfig cfg;
    auto r = sweep(ds, cfg);
    CHECK(r.c_max == 5);
    CHECK(r.rows.size() == 4);
    CHECK(r.indexes.size() == 8);
    CHECK(r.cwb_alpha_self_scaled);
    CHECK(r.cwb_alpha == doctest::Approx(indexes::cwb_separation(r.rows[0].result->v)));
    check_selection(r);
    CHECK(r.selected_for(IndexId::proposed) == 3u);
    for (const auto& row : r.rows) {
        REQUIRE(row.result);
        CHECK(row.result->u.clusters() == row.c);
    }

    SUBCASE("deterministic") {
        auto again = sweep(ds, cfg);
        CHECK(emit_table(r, TableFormat::tsv) == emit_table(again, TableFormat::tsv));
    }
    SUBCASE("single index") {
        cfg.indexes = {IndexId::pc};
        auto one = sweep(ds, cfg);
        for (const auto& row : one.rows) CHECK(row.scores.size() == 1);
        const auto lines = lines_of(emit_table(one, TableFormat::tsv));
        size_t data_lines = 0;
        for (const auto& l : lines)
            if (l[0] != '#') {
                CHECK(count_of(l, "\t") == 1);
                ++data_lines;
            }
        CHECK(data_lines == one.rows.size() + 1);
    }
    SUBCASE("explicit alpha is echoed") {
        cfg.cwb = indexes::CwbParams{0.25};
        auto fixed = sweep(ds, cfg);
        CHECK_FALSE(fixed.cwb_alpha_self_scaled);
        CHECK(fixed.cwb_alpha == 0.25);
    }
    SUBCASE("c_min above 2 still self-scales from c = 2") {
        cfg.c_min = 3;
        auto later = sweep(ds, cfg);
        CHECK(later.rows.front().c == 3);
        CHECK(later.cwb_alpha == doctest::Approx(r.cwb_alpha));
    }
}

TEST_CASE("sweep marks failed rows and continues") {
    DataSet x({{0.0}, {1e200}, {-1e200}, {2e200}, {-2e200}});
    SweepConfig cfg;
    cfg.c_max = 3;
    cfg.fcm.restarts = 2;
    auto r = sweep(x, cfg);
    CHECK(r.rows.size() == 2);
    CHECK(r.all_failed());
    for (const auto& row : r.rows) CHECK(row.failed);
    for (const auto& s : r.selected) CHECK_FALSE(s.has_value());
    CHECK(count_of(emit_table(r, TableFormat::tsv), "FAILED") >= 16);
}

TEST_CASE("emit_table") {
    const auto r = hand_report();
    SUBCASE("tsv") {
        const auto text = emit_table(r, TableFormat::tsv);
        const auto lines = lines_of(text);
        std::vector<std::string> body;
        for (const auto& l : lines)
            if (l[0] != '#') body.push_back(l);
        REQUIRE(body.size() == 3);
        CHECK(body[0] == "c\tV_PC");
        CHECK(body[1] == "2\t0.75*");
        CHECK(body[2] == "3\tFAILED");
    }
    SUBCASE("markdown pipes balance") {
        const auto text = emit_table(r, TableFormat::markdown);
        size_t table_rows = 0;
        for (const auto& l : lines_of(text)) {
            if (l.empty() || l[0] != '|') continue;
            ++table_rows;
            CHECK(l.back() == '|');
            CHECK(count_of(l, "|") == 3);
        }
        CHECK(table_rows == 4);
        CHECK(text.find("**0.75**") != std::string::npos);
    }
    SUBCASE("four significant digits and inf") {
        auto r2 = hand_report();
        r2.rows[1].failed = false;
        r2.rows[1].scores = {std::numeric_limits<double>::infinity()};
        r2.rows[1].result = r2.rows[0].result;
        r2.rows[0].scores = {0.123456789};
        r2.selected = select(r2.indexes, r2.rows);
        const auto text = emit_table(r2, TableFormat::tsv);
        CHECK(text.find("2\t0.1235*") != std::string::npos);
        CHECK(text.find("3\tinf") != std::string::npos);
    }
    CHECK_THROWS_KIND(emit_table(ValidityReport{}, TableFormat::tsv), ErrorKind::invalid_request);
}

TEST_CASE("report header echoes every scoring parameter") {
    auto [ds, spec] = data::builtin(data::BuiltinName::butterfly, 0);
    SweepConfig cfg;
    cfg.fcm.seed = 1234;
    cfg.grid.step = 0.05;
    cfg.weight.mode = proximity::WeightMode::constant_one;
    cfg.pe.log_base = 2.0;
    cfg.bcrit.alpha = 0.5;
    cfg.cwb = indexes::CwbParams{0.75};
    for (auto format : {TableFormat::tsv, TableFormat::markdown}) {
        const auto text = emit_table(sweep(ds, cfg), format);
        for (const char* needle : {"fcm.seed=1234", "mu_step=0.05", "omega=one", "pe.log_base=2", "cwb.alpha=0.75",
                                   "bcrit.alpha=0.5", "fcm.m=2", "fcm.epsilon=0.001", "fcm.restarts=10",
                                   "fcm.max_iter=300", "omega.vague_floor=0.5", "c_max=3", "fcm c=2 jm=", "seed="}) {
            CHECK_MESSAGE(text.find(needle) != std::string::npos, needle);
        }
    }
}

TEST_CASE("emit_summary") {
    auto [ds, spec] = data::builtin(data::BuiltinName::butterfly, 0);
    auto r = sweep(ds, SweepConfig{});
    const auto text = emit_summary({{"butterfly", spec.c_optimal, &r}}, TableFormat::tsv);
    const auto lines = lines_of(text);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].rfind("dataset\tc_optimal\tV_PC", 0) == 0);
    CHECK(lines[1].rfind("butterfly\t2\t", 0) == 0);
    CHECK(count_of(lines[1], "\t") == 9);
}

TEST_CASE("plots") {
    auto [ds, spec] = data::builtin(data::BuiltinName::butterfly, 0);
    auto r = fcm::run(ds, 2, FcmConfig{});
    PlotOutcome outcome;
    const auto svg = render_svg(ds, r, &outcome);
    CHECK(count_of(svg, "class=\"point\"") == 15);
    CHECK(count_of(svg, "class=\"centroid\"") == 2);
    CHECK(outcome.warnings.empty());
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count_of(svg, "<svg ") == 1);
    CHECK(svg == render_svg(ds, r));

    const auto dir = std::filesystem::temp_directory_path() / "validity_plot_test";
    std::filesystem::create_directories(dir);
    emit_plot(ds, r, dir / "a.svg");
    emit_plot(ds, r, dir / "b.svg");
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    };
    CHECK(slurp(dir / "a.svg") == slurp(dir / "b.svg"));
    CHECK(slurp(dir / "a.svg") == svg);
    CHECK_THROWS_KIND(emit_plot(ds, r, dir / "no" / "such" / "dir" / "c.svg"), ErrorKind::io);
    std::filesystem::remove_all(dir);

    auto [iris, iris_spec] = data::builtin(data::BuiltinName::iris, 0);
    auto ri = fcm::run(iris, 3, FcmConfig{});
    PlotOutcome iris_outcome;
    const auto iris_svg = render_svg(iris, ri, &iris_outcome);
    CHECK(iris_outcome.warnings.size() == 1);
    CHECK(count_of(iris_svg, "class=\"point\"") == 150);
    CHECK(count_of(iris_svg, "class=\"centroid\"") == 3);
}
