#ifndef jordan_conformal_hpp_
#define jordan_conformal_hpp_

#include "jordan/curve.hpp"

namespace jordan {

struct MapConfig {
    double tol = 1e-3;         // boundary defect tolerance, relative to the domain diameter
    size_t samples = 512;      // initial boundary sample count for the map
    size_t max_samples = 4096; // refinement doubles samples up to this bound
    size_t probes = 256;       // boundary probes used to measure the defect
};

struct StageInfo {
    std::string kind;
    std::vector<double> params;
};

class ExteriorMap;
class ConformalMap;
ConformalMap build_interior_map(const JordanDomain &domain, const Point2 &p, const Point2 &u,
                                const MapConfig &config);
ExteriorMap build_exterior_map(const JordanDomain &normalized_domain, const MapConfig &config);

// Conformal map of the closed unit disk onto a Jordan domain, built by the geodesic
// (zipper-family) algorithm from ordered boundary samples.  The map is stored as a
// composition of elementary conformal factors, each invertible in closed form, so both
// directions evaluate in O(samples) with boundary extension included.
class ConformalMap {
public:
    ConformalMap() = default;

    struct GeodesicStage {
        double x0_inv; // reciprocal of the real base point of the slit geodesic (0 = vertical)
        double h;      // height of the straightened slit
    };

    // Unchecked complex evaluation.  forward: |z| <= 1 -> closure(D); inverse: the other way.
    Complex forward_c(Complex z) const;
    Complex inverse_c(Complex w) const;

    // Checked evaluation with domain tests (OutOfDomain on violation).
    Point2 forward(const Point2 &disk_point) const;
    Point2 inverse(const Point2 &domain_point) const;

    Point2 center_value() const { return to_point(m_center_value); }      // f(o)
    Complex center_derivative() const { return m_center_derivative; }     // f'(0)
    double boundary_defect() const { return m_boundary_defect; }
    size_t sample_count() const { return m_samples.size(); }
    const std::vector<Point2> &boundary_samples() const { return m_samples; }
    double domain_diam() const { return m_diam; }

    std::vector<StageInfo> stages() const; // diagnostic dump of stage parameters

private:
    friend ConformalMap build_interior_map(const JordanDomain &, const Point2 &, const Point2 &,
                                           const MapConfig &);
    friend ExteriorMap build_exterior_map(const JordanDomain &, const MapConfig &);
    friend class ExteriorMap;

    static ConformalMap build_stages(const std::vector<Complex> &samples, Complex anchor);
    static void normalize_derivative(ConformalMap &map, Complex u);

    Complex zip(Complex z) const; // domain -> H -> disk

    Complex m_z0{0., 0.}, m_z1{0., 0.};
    std::vector<GeodesicStage> m_geodesic;
    double m_xinf_inv = 0.;
    int m_orientation_sign = 1; // closing-square branch for the interior component
    Complex m_wp{0., 1.};       // image of the map anchor in the half-plane
    double m_alpha = 0.;        // disk rotation aligning the derivative direction

    Complex m_center_value{0., 0.};
    Complex m_center_derivative{1., 0.};
    double m_boundary_defect = 0.;
    double m_diam = 0.;
    std::vector<Point2> m_samples;
};

// Riemann map f with f(o) = p and df_o((1,0)) parallel to u, Caratheodory-extended to the
// closed disk; refines the boundary sampling until the defect is within config.tol * diam.
ConformalMap build_interior_map(const JordanDomain &domain, const Point2 &p, const Point2 &u,
                                const MapConfig &config = {});

enum class MapDirection { Forward, Inverse };

Point2 evaluate(const ConformalMap &map, const Point2 &z, MapDirection direction);

// Conformal map of the punctured closed disk onto the closed complement of a normalized
// domain (circumcenter o, circumradius 1), with g(o) at infinity.  Realized through the
// chart w -> 1/(w - c) about a deep interior point c, with the rotational gauge fixed by
// making the leading coefficient of 1/g at the puncture real positive.
class ExteriorMap {
public:
    ExteriorMap() = default;

    Complex forward_c(Complex z) const; // B^2 minus the origin -> closure of the complement
    Complex inverse_c(Complex w) const;

    Point2 forward(const Point2 &disk_point) const;
    Point2 inverse(const Point2 &exterior_point) const;

    const ConformalMap &chart_map() const { return m_inner; }
    Point2 chart_center() const { return to_point(m_chart_center); }
    double boundary_defect() const { return m_boundary_defect; }

private:
    friend ExteriorMap build_exterior_map(const JordanDomain &, const MapConfig &);

    Complex m_chart_center{0., 0.};
    ConformalMap m_inner;
    double m_boundary_defect = 0.;
};

ExteriorMap build_exterior_map(const JordanDomain &normalized_domain, const MapConfig &config = {});

// sup |f_{D_i,p,u} - f_{D,p,u}| over a closed-disk evaluation grid, one value per perturbation.
std::vector<double> convergence_probe(const JordanDomain &domain,
                                      const std::vector<JordanDomain> &perturbations, const Point2 &p,
                                      const Point2 &u, const MapConfig &config = {});

// Upper-bound companion to the boundary Hausdorff distance: the sup distance between the
// two domains under their normalized conformal parametrizations (anchor p, direction u).
double normalized_sup_distance(const JordanDomain &a, const JordanDomain &b, const Point2 &p,
                               const Point2 &u, const MapConfig &config = {});

} // namespace jordan

#endif
