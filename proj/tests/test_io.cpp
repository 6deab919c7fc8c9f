#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "jordan/io.hpp"
#include "jordan/shapes.hpp"

using namespace jordan;

TEST_CASE("curve json round trip") {
    JordanDomain e = make_ellipse(2., 1., Point2(0.5, -0.25), 64);
    std::string text = curve_to_json(e.boundary);
    JordanDomain back = parse_curve_json(text);
    CHECK(hausdorff(e, back) < 1e-5);
}

TEST_CASE("curve json validation") {
    CHECK_THROWS_AS(parse_curve_json("not json"), Error);
    CHECK_THROWS_AS(parse_curve_json("{\"closed\": true}"), Error);
    CHECK_THROWS_AS(parse_curve_json("{\"samples\": [[0, 1], [\"x\", 2]], \"closed\": true}"), Error);
    CHECK_THROWS_AS(parse_curve_json("{\"samples\": [[0, 1]], \"closed\": false}"), Error);
}

TEST_CASE("atomic write and read back") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "jordan_io_test";
    fs::create_directories(dir);
    std::string path = (dir / "curve.json").string();
    JordanDomain lune = make_lune();
    write_text_atomic(path, curve_to_json(lune.boundary));
    JordanDomain back = read_curve_json(path);
    CHECK(hausdorff(lune, back) < 1e-4 * domain_diameter(lune));
    CHECK(!fs::exists(path + ".tmp"));
    fs::remove_all(dir);
}

TEST_CASE("frames csv schema") {
    FlowFrame frame;
    frame.time = 0.25;
    frame.curve = make_circle(1., Point2(0., 0.), 16).boundary;
    std::string csv = frames_to_csv({frame});
    CHECK(csv.rfind("frame_index,time,x,y\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 17); // header + 16 samples
    CHECK(csv.find("0,0.25,") != std::string::npos);
}

TEST_CASE("medial csv schema") {
    MedialAxisApprox axis;
    axis.vertices.push_back({Point2(0.5, -1.), 0.25});
    std::string csv = medial_to_csv(axis);
    CHECK(csv == "x,y,radius\n0.5,-1,0.25\n");
}

TEST_CASE("svg emission") {
    std::vector<JordanCurve> curves{make_circle(1.).boundary, make_circle(0.5).boundary};
    std::string svg = curves_to_svg(curves, true);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), '\n') > 2);
    // one path per curve
    size_t paths = 0, pos = 0;
    while ((pos = svg.find("<path", pos)) != std::string::npos) {
        ++paths;
        ++pos;
    }
    CHECK(paths == 2);
    // viewBox fits the unit circumcircle padded 10%
    CHECK(svg.find("viewBox=\"-1.1 -1.1 2.2 2.2\"") != std::string::npos);
}
