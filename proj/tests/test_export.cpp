#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "toro/export.hpp"
#include "toro/families.hpp"

using namespace toro;

namespace {

SampleSeries cardioid_series(int samples) {
    const Preset* preset = find_preset("cardioid-strict");
    REQUIRE(preset != nullptr);
    CylindricalLift lift = preset_lift(*preset);
    TorusCompatibility compat = torus_compat(preset_family(*preset), preset_torus(*preset));
    return sample_lift(lift, compat.cusp_params, samples);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> cells;
    size_t start = 0;
    for (;;) {
        size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            cells.push_back(line.substr(start));
            return cells;
        }
        cells.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace

TEST_CASE("format_double is shortest round-trip") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(12345.678) == "12345.678");

    double third = 1.0 / 3.0;
    std::string repr = format_double(third);
    CHECK(std::stod(repr) == third);
    // capped at 17 significant digits
    size_t digits = 0;
    for (char c : repr)
        if (c >= '0' && c <= '9') ++digits;
    CHECK(digits <= 17);
}

TEST_CASE("csv carries the fixed versioned header") {
    SampleSeries series = cardioid_series(41);
    std::string csv = to_csv(series);
    std::istringstream in(csv);
    std::string line;

    std::getline(in, line);
    CHECK(line == "# toro-csv v1");
    std::getline(in, line);
    CHECK(line ==
          "t,status,alpha_x,alpha_y,f,gamma_x,gamma_y,gamma_z,s_dot,K,T_x,T_y,T_z,N_x,N_y,N_z,"
          "B_x,B_y,B_z,kappa,tau,c1,c2,C_x,C_y,C_z,beta_x,beta_y,f_tilde");

    int rows = 0;
    while (std::getline(in, line)) {
        auto cells = split(line, ',');
        CHECK(cells.size() >= 2);
        if (cells[1] == "ok") {
            CHECK(cells.size() == 29);
            for (size_t i = 2; i < cells.size(); ++i) CHECK_FALSE(cells[i].empty());
        } else {
            // numeric cells stay empty off the ok path
            for (size_t i = 2; i < cells.size(); ++i) CHECK(cells[i].empty());
        }
        ++rows;
    }
    CHECK(rows == 41);
}

TEST_CASE("json and csv encode identical values") {
    SampleSeries series = cardioid_series(33);
    std::string csv = to_csv(series);
    std::string json_text = to_json(series, "cardioid-strict");

    nlohmann::json doc = nlohmann::json::parse(json_text);
    CHECK(doc["format"] == "toro-json v1");
    CHECK(doc["curve"] == "cardioid-strict");
    CHECK(doc["samples"] == 33);
    REQUIRE(doc["records"].size() == 33);

    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    auto header = split(line, ',');

    for (const auto& rec : doc["records"]) {
        REQUIRE(std::getline(in, line));
        auto cells = split(line, ',');
        CHECK(format_double(rec["t"].get<double>()) == cells[0]);
        CHECK(rec["status"].get<std::string>() == cells[1]);
        for (size_t i = 2; i < header.size(); ++i) {
            const auto& value = rec[header[i]];
            if (value.is_null())
                CHECK(cells[i].empty());
            else
                CHECK(format_double(value.get<double>()) == cells[i]);
        }
    }
}

TEST_CASE("svg draws one path per arc and curve") {
    SampleSeries series = cardioid_series(100);
    REQUIRE(series.arcs.size() == 1);
    std::string svg = to_svg(series);

    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"") == 0);
    CHECK(svg.find("stroke=\"red\"") != std::string::npos);
    CHECK(svg.find("stroke=\"purple\"") != std::string::npos);
    size_t paths = 0;
    for (size_t pos = svg.find("<path"); pos != std::string::npos;
         pos = svg.find("<path", pos + 1))
        ++paths;
    CHECK(paths == 2 * series.arcs.size());

    SUBCASE("empty series refuses to draw") {
        SampleSeries empty;
        CHECK_THROWS_AS(to_svg(empty), InvalidArgument);
        CHECK_THROWS_AS(to_obj(empty), InvalidArgument);
    }
}

TEST_CASE("obj lists both polylines with consistent indices") {
    SampleSeries series = cardioid_series(100);
    std::string obj = to_obj(series);
    std::istringstream in(obj);
    std::string line;
    int vertices = 0, polylines = 0, objects = 0;
    int max_index = 0;
    while (std::getline(in, line)) {
        if (line.rfind("v ", 0) == 0) ++vertices;
        if (line.rfind("o ", 0) == 0) ++objects;
        if (line.rfind("l ", 0) == 0) {
            ++polylines;
            auto cells = split(line, ' ');
            for (size_t i = 1; i < cells.size(); ++i) max_index = std::max(max_index, std::stoi(cells[i]));
        }
    }
    int ok_records = 0;
    for (const auto& rec : series.records)
        if (rec.status == SampleStatus::Ok) ++ok_records;
    CHECK(objects == 2);
    CHECK(vertices == 2 * ok_records);
    CHECK(polylines == 2 * static_cast<int>(series.arcs.size()));
    CHECK(max_index == vertices);
}

TEST_CASE("atomic_write leaves no temp file behind") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "toro-export-test";
    fs::create_directories(dir);
    fs::path target = dir / "data.csv";

    atomic_write(target.string(), "hello\n");
    CHECK(fs::exists(target));
    CHECK_FALSE(fs::exists(target.string() + ".tmp"));
    std::ifstream in(target);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == "hello\n");

    atomic_write(target.string(), "replaced\n");
    std::ifstream again(target);
    std::string content2((std::istreambuf_iterator<char>(again)),
                         std::istreambuf_iterator<char>());
    CHECK(content2 == "replaced\n");
    fs::remove_all(dir);
}

TEST_CASE("byte-identical output for repeated runs") {
    SampleSeries a = cardioid_series(64);
    SampleSeries b = cardioid_series(64);
    CHECK(to_csv(a) == to_csv(b));
    CHECK(to_json(a, "x") == to_json(b, "x"));
    CHECK(to_svg(a) == to_svg(b));
    CHECK(to_obj(a) == to_obj(b));
}
