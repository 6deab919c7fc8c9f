#ifndef jordan_gauss_legendre_hpp_
#define jordan_gauss_legendre_hpp_

namespace jordan::gl8 {

// 8-node Gauss-Legendre rule on [0,1].
constexpr int    n = 8;
constexpr double x[n] = {0.01985507175123188, 0.10166676129318664, 0.2372337950418355, 0.40828267875217505,
                         0.5917173212478249,  0.7627662049581645,  0.8983332387068134, 0.9801449282487682};
constexpr double w[n] = {0.05061426814518813, 0.11119051722668723, 0.15685332293894363, 0.18134189168918097,
                         0.18134189168918097, 0.15685332293894363, 0.11119051722668723, 0.05061426814518813};

} // namespace jordan::gl8

#endif
