#ifndef jordan_types_hpp_
#define jordan_types_hpp_

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace jordan {

using Point2  = Eigen::Vector2d;
using Complex = std::complex<double>;

inline Complex to_complex(const Point2 &p) { return Complex(p.x(), p.y()); }
inline Point2  to_point(const Complex &z) { return Point2(z.real(), z.imag()); }

inline Point2 rotate90(const Point2 &v) { return Point2(-v.y(), v.x()); }

constexpr double pi = 3.14159265358979323846;

enum class ErrorCode {
    SelfIntersecting,
    TooFewSamples,
    NonFinite,
    PointNotInterior,
    ZeroDirection,
    DidNotConverge,
    OutOfDomain,
    NotConvex,
    OffsetTooLarge,
    DegenerateVoronoi,
    InverseFailed,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), m_code(code) {}
    ErrorCode code() const { return m_code; }

private:
    ErrorCode m_code;
};

const char *error_code_name(ErrorCode code);

struct Circle {
    Point2 center{0., 0.};
    double radius{0.};
};

// Orientation-aware planar similarity g(x) = scale * R(angle) * (reflect ? conj x : x) + translation.
// Internally the linear part is the complex coefficient a = scale * exp(i*angle).
class Similarity {
public:
    Similarity() = default;
    Similarity(double scale, double angle, bool reflect, const Point2 &translation);

    static Similarity identity() { return Similarity(); }
    static Similarity translation(const Point2 &b) { return Similarity(1., 0., false, b); }
    static Similarity dilation(double r) { return Similarity(r, 0., false, Point2(0., 0.)); }
    static Similarity rotation(double angle) { return Similarity(1., angle, false, Point2(0., 0.)); }
    static Similarity reflection(double axis_angle);

    double scale() const { return m_scale; }
    double angle() const { return m_angle; }
    bool   reflect() const { return m_reflect; }
    const Point2 &translation() const { return m_translation; }

    Complex linear_coeff() const { return std::polar(m_scale, m_angle); }

    Point2  operator()(const Point2 &p) const { return to_point((*this)(to_complex(p))); }
    Complex operator()(const Complex &z) const {
        return linear_coeff() * (m_reflect ? std::conj(z) : z) + to_complex(m_translation);
    }

    // (g1 * g2)(x) = g1(g2(x))
    Similarity operator*(const Similarity &rhs) const;
    Similarity inverse() const;

    bool is_isometry(double tol = 1e-12) const { return std::abs(m_scale - 1.) <= tol; }

private:
    double m_scale = 1.;
    double m_angle = 0.;
    bool   m_reflect = false;
    Point2 m_translation{0., 0.};
};

inline bool finite(const Point2 &p) { return std::isfinite(p.x()) && std::isfinite(p.y()); }

} // namespace jordan

#endif
