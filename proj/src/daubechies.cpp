#include "holder/daubechies.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>
#include <algorithm>
#include <cmath>
#include <complex>

#include "holder/errors.hpp"

namespace holder {

std::vector<double> daubechies_filter(int N) {
    if (N < 1 || N > 10)
        throw domain_error("daubechies filters are available for 1..10 vanishing moments");
    using cplx = std::complex<double>;

    // |L(e^{-i xi})|^2 = P(sin^2(xi/2)), P(y) = sum_k C(N-1+k, k) y^k
    std::vector<cplx> zeros;
    if (N > 1) {
        Eigen::VectorXd coeffs(N);
        double c = 1.0;
        for (int k = 0; k < N; ++k) {
            coeffs[k] = c;
            c = c * (N + k) / (k + 1);
        }
        Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
        solver.compute(coeffs);
        for (const cplx& y : solver.roots()) {
            // y = (2 - z - 1/z)/4  <=>  z^2 - (2 - 4y) z + 1 = 0; keep the root outside the circle
            const cplx b = 2.0 - 4.0 * y;
            const cplx disc = std::sqrt(b * b - 4.0);
            cplx z = (b + disc) / 2.0;
            if (std::abs(z) < 1.0) z = (b - disc) / 2.0;
            zeros.push_back(z);
        }
    }

    // (1 + w)^N * prod (w - z_i), coefficients in ascending powers of w
    std::vector<cplx> poly{1.0};
    auto multiply = [&poly](cplx root_term, cplx lead) {
        std::vector<cplx> next(poly.size() + 1, 0.0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i] * root_term;
            next[i + 1] += poly[i] * lead;
        }
        poly = std::move(next);
    };
    for (int i = 0; i < N; ++i) multiply(1.0, 1.0);
    for (const cplx& z : zeros) multiply(-z, 1.0);

    std::vector<double> h(poly.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        h[i] = poly[i].real();
        sum += h[i];
    }
    const double scale = std::sqrt(2.0) / sum;
    for (double& v : h) v *= scale;
    // standard tap order has the large taps first
    if (std::abs(h.front()) < std::abs(h.back())) std::reverse(h.begin(), h.end());
    return h;
}

std::vector<double> quadrature_mirror(const std::vector<double>& h) {
    const std::size_t L = h.size();
    std::vector<double> g(L);
    for (std::size_t n = 0; n < L; ++n) g[n] = (n % 2 == 0 ? 1.0 : -1.0) * h[L - 1 - n];
    return g;
}

double daubechies_regularity(int N) {
    // Hölder exponents of psi reported in the wavelet literature (N >= 2)
    static const double table[] = {0.0,   0.0,   0.550, 1.088, 1.618, 1.969,
                                   2.189, 2.460, 2.761, 3.074, 3.361};
    if (N < 2 || N > 10)
        throw domain_error("regularity is tabulated for 2..10 vanishing moments");
    return table[N];
}

double RenderedFunction::operator()(double x) const {
    if (values.empty()) return 0.0;
    const double t = (x - x_min) / step;
    if (t < 0.0 || t > static_cast<double>(values.size() - 1)) return 0.0;
    const auto i = static_cast<std::size_t>(std::floor(t));
    if (i + 1 >= values.size()) return values.back();
    const double frac = t - static_cast<double>(i);
    return values[i] + frac * (values[i + 1] - values[i]);
}

std::vector<double> scaling_integer_values(const std::vector<double>& h) {
    const int L = static_cast<int>(h.size());
    if (L == 2) return {1.0, 0.0};
    // phi(k) = sqrt(2) sum_n h[n] phi(2k - n), k = 0..L-1, with sum phi(k) = 1
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(L, L);
    for (int k = 0; k < L; ++k)
        for (int m = 0; m < L; ++m) {
            const int n = 2 * k - m;
            if (n >= 0 && n < L) A(k, m) = std::sqrt(2.0) * h[static_cast<std::size_t>(n)];
        }
    Eigen::MatrixXd sys = A - Eigen::MatrixXd::Identity(L, L);
    sys.row(L - 1).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(L);
    rhs[L - 1] = 1.0;
    Eigen::VectorXd phi = sys.fullPivLu().solve(rhs);
    return std::vector<double>(phi.data(), phi.data() + L);
}

RenderedFunction cascade_scaling(const std::vector<double>& h, int levels) {
    if (levels < 0 || levels > 20) throw domain_error("cascade depth must be in 0..20");
    const int L = static_cast<int>(h.size());
    std::vector<double> cur = scaling_integer_values(h);
    for (int lev = 1; lev <= levels; ++lev) {
        // values at k / 2^lev from those at k / 2^(lev-1)
        const long prev_den = 1L << (lev - 1);
        const long count = static_cast<long>(L - 1) * (1L << lev) + 1;
        std::vector<double> next(static_cast<std::size_t>(count), 0.0);
        for (long k = 0; k < count; ++k) {
            if (k % 2 == 0) {
                next[static_cast<std::size_t>(k)] = cur[static_cast<std::size_t>(k / 2)];
                continue;
            }
            double acc = 0.0;
            for (int n = 0; n < L; ++n) {
                const long idx = k - n * prev_den;  // phi(2x - n) on the previous grid
                if (idx >= 0 && idx < static_cast<long>(cur.size()))
                    acc += h[static_cast<std::size_t>(n)] * cur[static_cast<std::size_t>(idx)];
            }
            next[static_cast<std::size_t>(k)] = std::sqrt(2.0) * acc;
        }
        cur = std::move(next);
    }
    return {0.0, std::ldexp(1.0, -levels), std::move(cur)};
}

RenderedFunction cascade_wavelet(const std::vector<double>& h, int levels) {
    const RenderedFunction phi = cascade_scaling(h, levels);
    const auto g = quadrature_mirror(h);
    const int L = static_cast<int>(h.size());
    const long den = 1L << levels;
    const long count = static_cast<long>(L - 1) * den + 1;
    std::vector<double> psi(static_cast<std::size_t>(count), 0.0);
    for (long k = 0; k < count; ++k) {
        double acc = 0.0;
        for (int n = 0; n < L; ++n) {
            const long idx = 2 * k - n * den;
            if (idx >= 0 && idx < static_cast<long>(phi.values.size()))
                acc += g[static_cast<std::size_t>(n)] * phi.values[static_cast<std::size_t>(idx)];
        }
        psi[static_cast<std::size_t>(k)] = std::sqrt(2.0) * acc;
    }
    return {0.0, phi.step, std::move(psi)};
}

} // namespace holder
