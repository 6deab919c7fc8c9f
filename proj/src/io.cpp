#include "jordan/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace jordan {

using nlohmann::json;

JordanDomain parse_curve_json(const std::string &text, const CurveConfig &config) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw Error(ErrorCode::NonFinite, std::string("curve file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("samples") || !j["samples"].is_array())
        throw Error(ErrorCode::NonFinite, "curve file must be an object with a \"samples\" array");
    if (j.contains("closed") && !j["closed"].get<bool>())
        throw Error(ErrorCode::NonFinite, "only closed curves are supported");

    std::vector<Point2> samples;
    samples.reserve(j["samples"].size());
    for (const auto &row : j["samples"]) {
        if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number())
            throw Error(ErrorCode::NonFinite, "each sample must be a [x, y] pair of numbers");
        samples.emplace_back(row[0].get<double>(), row[1].get<double>());
    }
    return build_domain(std::move(samples), config);
}

JordanDomain read_curve_json(const std::string &path, const CurveConfig &config) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::NonFinite, "cannot open curve file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_curve_json(buf.str(), config);
}

std::string curve_to_json(const JordanCurve &curve) {
    json samples = json::array();
    for (const Point2 &p : curve.samples())
        samples.push_back(json::array({p.x(), p.y()}));
    json j;
    j["samples"] = std::move(samples);
    j["closed"] = true;
    return j.dump();
}

void write_text_atomic(const std::string &path, const std::string &content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path dir = target.parent_path();
    if (!dir.empty())
        fs::create_directories(dir);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(ErrorCode::NonFinite, "cannot write file: " + tmp.string());
        out << content;
    }
    fs::rename(tmp, target);
}

std::string frames_to_csv(const std::vector<FlowFrame> &frames) {
    std::ostringstream out;
    out.precision(12);
    out << "frame_index,time,x,y\n";
    for (size_t i = 0; i < frames.size(); ++i)
        for (const Point2 &p : frames[i].curve.samples())
            out << i << ',' << frames[i].time << ',' << p.x() << ',' << p.y() << '\n';
    return out.str();
}

std::string medial_to_csv(const MedialAxisApprox &axis) {
    std::ostringstream out;
    out.precision(12);
    out << "x,y,radius\n";
    for (const MedialVertex &v : axis.vertices)
        out << v.position.x() << ',' << v.position.y() << ',' << v.radius << '\n';
    return out.str();
}

std::string curves_to_svg(const std::vector<JordanCurve> &curves, bool opacity_ramp) {
    if (curves.empty())
        throw Error(ErrorCode::TooFewSamples, "nothing to render");
    Circle frame = circumscribing_circle(JordanDomain{curves.front()});
    double r = frame.radius * 1.1;

    std::ostringstream out;
    out.precision(9);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << frame.center.x() - r << ' '
        << -frame.center.y() - r << ' ' << 2. * r << ' ' << 2. * r << "\">\n";
    out << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"#1f3d7a\" stroke-width=\""
        << 0.004 * r << "\">\n";
    const size_t n = curves.size();
    for (size_t i = 0; i < n; ++i) {
        double opacity = opacity_ramp && n > 1 ? 0.15 + 0.85 * double(i) / double(n - 1) : 1.;
        out << "<path opacity=\"" << opacity << "\" d=\"";
        const auto &pts = curves[i].samples();
        for (size_t k = 0; k < pts.size(); ++k)
            out << (k == 0 ? 'M' : 'L') << pts[k].x() << ' ' << pts[k].y() << ' ';
        out << "Z\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

} // namespace jordan
