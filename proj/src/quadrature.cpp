#include "logsum/quadrature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace logsum {

namespace {

// QUADPACK dqk15 abscissae/weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Gk15Result {
    double value;
    double error;
};

Gk15Result gk15(const std::function<double(double)>& f, double a, double b) {
    double c = 0.5 * (a + b);
    double h = 0.5 * (b - a);
    double fc = f(c);
    double res_g = fc * kWg[3];
    double res_k = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        double fsum = f(c - x) + f(c + x);
        res_k += kWgk[j] * fsum;
        if (j % 2 == 1) res_g += kWg[j / 2] * fsum;
    }
    return {res_k * h, std::abs((res_k - res_g) * h)};
}

double adaptive_gk15_impl(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int depth) {
    Gk15Result r = gk15(f, a, b);
    if (r.error <= abs_tol || depth <= 0) return r.value;
    double c = 0.5 * (a + b);
    return adaptive_gk15_impl(f, a, c, 0.5 * abs_tol, depth - 1) +
           adaptive_gk15_impl(f, c, b, 0.5 * abs_tol, depth - 1);
}

}  // namespace

double normal_pdf(double x) {
    static const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

GaussHermite::GaussHermite(int n) {
    if (n < 1) throw std::invalid_argument("GaussHermite: need n >= 1");
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        double b = std::sqrt(0.5 * k);
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    const double mu0 = std::sqrt(std::numbers::pi);
    nodes_.resize(n);
    weights_.resize(n);
    for (int i = 0; i < n; ++i) {
        nodes_[i] = es.eigenvalues()(i);
        double v0 = es.eigenvectors()(0, i);
        weights_[i] = mu0 * v0 * v0;
    }
}

double GaussHermite::gaussian_expect(const std::function<double(double)>& f) const {
    const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
    const double sqrt2 = std::numbers::sqrt2;
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        acc += weights_[i] * f(sqrt2 * nodes_[i]);
    }
    return acc * inv_sqrt_pi;
}

double adaptive_gk15(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     int max_depth) {
    if (!(b > a)) return 0.0;
    return adaptive_gk15_impl(f, a, b, abs_tol, max_depth);
}

double gaussian_integral_piecewise(const std::function<double(double)>& f,
                                   std::vector<double> breakpoints, double cutoff,
                                   double abs_tol) {
    std::vector<double> pts;
    pts.push_back(-cutoff);
    for (double bp : breakpoints) {
        if (bp > -cutoff && bp < cutoff) pts.push_back(bp);
    }
    pts.push_back(cutoff);
    std::sort(pts.begin(), pts.end());
    auto weighted = [&f](double xi) { return normal_pdf(xi) * f(xi); };
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double p = pts[i], q = pts[i + 1];
        if (q - p < 1e-300) continue;
        // Integrands can carry inverse-square-root singularities at the
        // breakpoints (the denoiser derivative at the convexity edge), so each
        // half adjacent to an interior breakpoint is integrated under the
        // substitution xi = endpoint +/- u^2, which removes them.
        double m = 0.5 * (p + q);
        if (i != 0) {
            acc += adaptive_gk15(
                [&](double u) { return 2.0 * u * weighted(p + u * u); }, 0.0,
                std::sqrt(m - p), abs_tol);
        } else {
            acc += adaptive_gk15(weighted, p, m, abs_tol);
        }
        if (i + 1 != pts.size() - 1) {
            acc += adaptive_gk15(
                [&](double u) { return 2.0 * u * weighted(q - u * u); }, 0.0,
                std::sqrt(q - m), abs_tol);
        } else {
            acc += adaptive_gk15(weighted, m, q, abs_tol);
        }
    }
    return acc;
}

}  // namespace logsum
