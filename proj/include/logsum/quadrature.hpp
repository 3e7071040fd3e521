#ifndef LOGSUM_QUADRATURE_HPP
#define LOGSUM_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace logsum {

/// Gauss-Hermite rule for integrals against exp(-t^2) on the real line.
/// Nodes/weights from the Golub-Welsch eigenvalue construction.
class GaussHermite {
  public:
    explicit GaussHermite(int n);

    // E_{u ~ N(0,1)}[f(u)]
    double gaussian_expect(const std::function<double(double)>& f) const;

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

  private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

// Adaptive Gauss-Kronrod (G7, K15) on [a, b] to absolute tolerance abs_tol.
double adaptive_gk15(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     int max_depth = 30);

// Integral of phi(xi) * f(xi) over [-cutoff, cutoff], split at the given
// breakpoints (values outside the window are ignored). phi is the standard
// normal density. Each piece is integrated adaptively to abs_tol.
double gaussian_integral_piecewise(const std::function<double(double)>& f,
                                   std::vector<double> breakpoints, double cutoff,
                                   double abs_tol);

// Standard normal pdf.
double normal_pdf(double x);

}  // namespace logsum

#endif
