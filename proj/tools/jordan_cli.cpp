// jordan: canonical centers, conformal maps, reach geometry, and disk flows for
// planar Jordan domains.

#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jordan/flow.hpp"
#include "jordan/io.hpp"
#include "jordan/shapes.hpp"
#include "jordan/verify.hpp"

using namespace jordan;
using nlohmann::json;

namespace {

struct InputOptions {
    std::string in_path;
    std::string shape;
    double a = 2., b = 1., r = 1., cx = 0., cy = 0.;
    size_t n = 512;
};

void add_input_options(CLI::App *cmd, InputOptions &opt) {
    cmd->add_option("--in", opt.in_path, "curve JSON file {\"samples\": [[x,y],...], \"closed\": true}");
    cmd->add_option("--shape", opt.shape, "generator: circle | ellipse | egg | lune-smoothed | blob");
    cmd->add_option("--a", opt.a, "ellipse semi-axis a");
    cmd->add_option("--b", opt.b, "ellipse semi-axis b");
    cmd->add_option("--r", opt.r, "circle radius");
    cmd->add_option("--cx", opt.cx, "shape center x");
    cmd->add_option("--cy", opt.cy, "shape center y");
    cmd->add_option("--n", opt.n, "boundary sample count")->default_val(512);
}

JordanDomain load_domain(const InputOptions &opt) {
    if (!opt.in_path.empty() && !opt.shape.empty())
        throw Error(ErrorCode::NonFinite, "give either --in or --shape, not both");
    if (!opt.in_path.empty())
        return read_curve_json(opt.in_path);
    if (!opt.shape.empty()) {
        ShapeSpec spec;
        spec.name = opt.shape;
        spec.a = opt.a;
        spec.b = opt.b;
        spec.r = opt.r;
        spec.cx = opt.cx;
        spec.cy = opt.cy;
        spec.n = opt.n;
        return make_shape(spec);
    }
    throw Error(ErrorCode::NonFinite, "an input is required: --in PATH or --shape NAME");
}

json point_json(const Point2 &p) { return json::array({p.x(), p.y()}); }

void emit(const std::string &command, json result, json residuals, json config) {
    json out;
    out["command"] = command;
    out["result"] = std::move(result);
    out["residuals"] = std::move(residuals);
    out["config"] = std::move(config);
    std::cout << out.dump(2) << "\n";
}

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::DidNotConverge:
    case ErrorCode::DegenerateVoronoi:
    case ErrorCode::InverseFailed: return 3;
    default: return 2;
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"canonical centers, conformal maps, and disk flows for planar Jordan domains"};
    app.require_subcommand(1);

    InputOptions input;
    double tol = 1e-3;
    std::string kind_name = "centroid";
    std::string out_path, medial_out, svg_out, stage_dump;
    size_t frames = 16;
    double px = 0., py = 0., ux = 1., uy = 0., x = 0., y = 0., t = 1., s = 0.;
    size_t trials = 20;
    uint64_t seed = 7;
    std::string suite = "all";
    bool with_medial = false;

    auto add_common = [&](CLI::App *cmd) {
        add_input_options(cmd, input);
        cmd->add_option("--tol", tol, "conformal map boundary tolerance (relative)")->default_val(1e-3);
        cmd->add_option("--out", out_path, "output file path");
    };

    CLI::App *c_center = app.add_subcommand("center", "canonical equivariant center of a domain");
    add_common(c_center);
    c_center->add_option("--kind", kind_name, "centroid | circumcenter | steiner")->default_val("centroid");

    CLI::App *c_map = app.add_subcommand("map", "build the interior conformal map and report diagnostics");
    add_common(c_map);
    CLI::Option *opt_px = c_map->add_option("--px", px, "map anchor x (default: area centroid)");
    c_map->add_option("--py", py, "map anchor y");
    c_map->add_option("--ux", ux, "derivative direction x")->default_val(1.);
    c_map->add_option("--uy", uy, "derivative direction y")->default_val(0.);
    c_map->add_option("--dump-stages", stage_dump, "write stage parameters as JSON to this path");

    CLI::App *c_retract = app.add_subcommand("retract-point", "retract a point onto a domain");
    add_common(c_retract);
    c_retract->add_option("--x", x, "point x")->required();
    c_retract->add_option("--y", y, "point y")->required();
    c_retract->add_option("--t", t, "retraction time in [0,1]")->default_val(1.);

    CLI::App *c_flow = app.add_subcommand("flow", "domain-to-disk deformation frames");
    add_common(c_flow);
    c_flow->add_option("--kind", kind_name, "center kind for the flow anchor")->default_val("centroid");
    c_flow->add_option("--frames", frames, "frame count")->default_val(16);
    c_flow->add_option("--svg", svg_out, "also write a layered SVG animation to this path");

    CLI::App *c_reach = app.add_subcommand("reach", "inner reach and medial axis");
    add_common(c_reach);
    c_reach->add_option("--medial-out", medial_out, "write the medial axis as CSV (x,y,radius)");

    CLI::App *c_offset = app.add_subcommand("offset", "inward offset domain");
    add_common(c_offset);
    c_offset->add_option("--s", s, "offset distance (0 < s < reach)")->required();

    CLI::App *c_verify = app.add_subcommand("verify", "run a property-verification suite");
    c_verify
        ->add_option("--suite", suite,
                     "equivariance | convex-agreement | interiority | reach | flow | convergence | all")
        ->default_val("all");
    c_verify->add_option("--trials", trials, "random similarities per fixture")->default_val(20);
    c_verify->add_option("--seed", seed, "random seed")->default_val(7);
    c_verify->add_option("--tol", tol, "conformal map boundary tolerance")->default_val(1e-3);

    CLI::App *c_render = app.add_subcommand("render", "render a domain (optionally with its medial axis) as SVG");
    add_common(c_render);
    c_render->add_flag("--medial", with_medial, "overlay medial-axis disks as circles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        json config;
        config["tol"] = tol;
        config["n"] = input.n;

        if (c_center->parsed()) {
            JordanDomain d = load_domain(input);
            CenterConfig cc;
            cc.map.tol = tol;
            CenterResult r = canonical_center_detailed(d, parse_center_kind(kind_name), cc);
            json result;
            result["kind"] = center_kind_name(r.kind);
            result["point"] = point_json(r.point);
            result["clearance"] = r.clearance;
            result["reach"] = r.reach;
            json residuals;
            residuals["retracted"] = r.retracted;
            if (!out_path.empty())
                write_text_atomic(out_path, json{{"kind", center_kind_name(r.kind)},
                                                 {"point", point_json(r.point)},
                                                 {"clearance", r.clearance},
                                                 {"reach", r.reach}}
                                                .dump(2));
            emit("center", result, residuals, config);
        } else if (c_map->parsed()) {
            JordanDomain d = load_domain(input);
            Point2 p(px, py);
            if (opt_px->count() == 0)
                p = area_and_centroid(d).second;
            MapConfig mc;
            mc.tol = tol;
            ConformalMap f = build_interior_map(d, p, Point2(ux, uy), mc);
            json result;
            result["anchor"] = point_json(f.center_value());
            result["derivative"] = json::array({f.center_derivative().real(), f.center_derivative().imag()});
            result["samples"] = f.sample_count();
            json residuals;
            residuals["boundary_defect"] = f.boundary_defect();
            if (!stage_dump.empty()) {
                json stages = json::array();
                for (const StageInfo &st : f.stages())
                    stages.push_back(json{{"kind", st.kind}, {"params", st.params}});
                write_text_atomic(stage_dump, stages.dump(2));
                result["stage_dump"] = stage_dump;
            }
            emit("map", result, residuals, config);
        } else if (c_retract->parsed()) {
            JordanDomain d = load_domain(input);
            MapConfig mc;
            mc.tol = tol;
            RetractionContext ctx = RetractionContext::build(std::move(d), mc);
            Point2 rp = retract_point(ctx, Point2(x, y), t);
            json result;
            result["point"] = point_json(rp);
            result["time"] = t;
            result["signed_distance"] = locate(ctx.domain, rp).signed_distance;
            emit("retract-point", result, json::object(), config);
        } else if (c_flow->parsed()) {
            JordanDomain d = load_domain(input);
            FlowConfig fc;
            fc.map.tol = tol;
            fc.center.map.tol = tol;
            CenterKind kind = parse_center_kind(kind_name);
            auto fr = flow_frames(d, kind, frames, fc);
            if (!out_path.empty())
                write_text_atomic(out_path, frames_to_csv(fr));
            if (!svg_out.empty()) {
                std::vector<JordanCurve> curves;
                for (const FlowFrame &f : fr)
                    curves.push_back(f.curve);
                write_text_atomic(svg_out, curves_to_svg(curves, true));
            }
            json result;
            result["frames"] = fr.size();
            result["final_radius"] = round_target(d, canonical_center(d, kind, fc.center)).radius;
            if (!out_path.empty())
                result["csv"] = out_path;
            if (!svg_out.empty())
                result["svg"] = svg_out;
            json residuals;
            residuals["first_frame_vs_boundary"] = hausdorff(JordanDomain{fr.front().curve}, d);
            emit("flow", result, residuals, config);
        } else if (c_reach->parsed()) {
            JordanDomain d = load_domain(input);
            size_t n_reach = std::max<size_t>(input.n, 2048);
            double r = reach(d, n_reach);
            json result;
            result["reach"] = r;
            if (!medial_out.empty()) {
                write_text_atomic(medial_out, medial_to_csv(medial_axis(d, n_reach)));
                result["medial_csv"] = medial_out;
            }
            emit("reach", result, json::object(), config);
        } else if (c_offset->parsed()) {
            JordanDomain d = load_domain(input);
            JordanDomain off = inner_offset(d, s);
            std::string payload = curve_to_json(off.boundary);
            json result;
            result["area"] = area_and_centroid(off).first;
            if (!out_path.empty()) {
                write_text_atomic(out_path, payload);
                result["out"] = out_path;
            } else {
                result["curve"] = json::parse(payload);
            }
            emit("offset", result, json::object(), config);
        } else if (c_verify->parsed()) {
            verify::VerifyConfig vc;
            vc.trials = trials;
            vc.seed = seed;
            vc.map_tol = tol;
            verify::SuiteReport report = verify::run_suite(suite, vc);
            json checks = json::array();
            double worst = 0.;
            for (const auto &c : report.checks) {
                checks.push_back(json{{"name", c.name},
                                      {"residual", c.residual},
                                      {"tolerance", c.tolerance},
                                      {"pass", c.pass}});
                if (c.tolerance > 0.)
                    worst = std::max(worst, c.residual / c.tolerance);
            }
            json result;
            result["suite"] = report.suite;
            result["pass"] = report.pass;
            result["checks"] = std::move(checks);
            json residuals;
            residuals["worst_relative_residual"] = worst;
            json vconfig;
            vconfig["trials"] = trials;
            vconfig["seed"] = seed;
            vconfig["tol"] = tol;
            emit("verify", result, residuals, vconfig);
            return report.pass ? 0 : 3;
        } else if (c_render->parsed()) {
            JordanDomain d = load_domain(input);
            std::vector<JordanCurve> curves{d.boundary};
            if (with_medial)
                for (const MedialVertex &v : medial_axis(d, std::max<size_t>(input.n, 512)).vertices) {
                    std::vector<Point2> circle(32);
                    for (int k = 0; k < 32; ++k)
                        circle[size_t(k)] =
                            v.position + v.radius * Point2(std::cos(2. * pi * k / 32.), std::sin(2. * pi * k / 32.));
                    CurveConfig lax;
                    lax.min_samples = 8;
                    curves.push_back(build_curve(std::move(circle), lax));
                }
            if (out_path.empty())
                throw Error(ErrorCode::NonFinite, "render requires --out PATH");
            write_text_atomic(out_path, curves_to_svg(curves, false));
            json result;
            result["out"] = out_path;
            result["curves"] = curves.size();
            emit("render", result, json::object(), config);
        }
        return 0;
    } catch (const Error &e) {
        std::cerr << "error (" << error_code_name(e.code()) << "): " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
