#ifndef jordan_io_hpp_
#define jordan_io_hpp_

#include <string>

#include "jordan/flow.hpp"
#include "jordan/medial.hpp"

namespace jordan {

// Curve files: {"samples": [[x, y], ...], "closed": true}
JordanDomain parse_curve_json(const std::string &text, const CurveConfig &config = {});
JordanDomain read_curve_json(const std::string &path, const CurveConfig &config = {});
std::string curve_to_json(const JordanCurve &curve);

// Writes via a temporary file in the same directory, then renames.
void write_text_atomic(const std::string &path, const std::string &content);

// frame_index,time,x,y rows, one block per frame.
std::string frames_to_csv(const std::vector<FlowFrame> &frames);

// x,y,radius rows.
std::string medial_to_csv(const MedialAxisApprox &axis);

// One path element per curve; viewBox fits the circumscribing circle of the first curve
// padded by 10%.  With opacity_ramp, later curves fade in from 0.15 to 1.
std::string curves_to_svg(const std::vector<JordanCurve> &curves, bool opacity_ramp = false);

} // namespace jordan

#endif
