#include "gaussint/rys.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "gaussint/boys.hpp"

namespace gaussint {

namespace {

constexpr int kRysMaxPoints = 10;

// Recurrence coefficients (alpha_k, beta_k) of the polynomials orthogonal
// under the induced measure in u = t^2 on [0, 1], from the raw moments
// mu_k = F_k(T) via the Chebyshev sigma table. Extended precision keeps the
// intrinsic cancellation of the raw-moment map harmless for n <= 10.
void chebyshev_recurrence(const std::vector<double>& mu, int n, std::vector<long double>& alpha,
                          std::vector<long double>& beta) {
    const int two_n = 2 * n;
    std::vector<std::vector<long double>> sigma(static_cast<std::size_t>(n) + 1,
                                                std::vector<long double>(static_cast<std::size_t>(two_n), 0.0L));
    for (int l = 0; l < two_n; ++l) sigma[1][static_cast<std::size_t>(l)] = mu[static_cast<std::size_t>(l)];

    alpha.assign(static_cast<std::size_t>(n), 0.0L);
    beta.assign(static_cast<std::size_t>(n), 0.0L);
    alpha[0] = sigma[1][1] / sigma[1][0];
    beta[0] = sigma[1][0];

    for (int k = 1; k < n; ++k) {
        auto& cur = sigma[static_cast<std::size_t>(k) + 1];
        const auto& prev = sigma[static_cast<std::size_t>(k)];
        const auto& prev2 = sigma[static_cast<std::size_t>(k) - 1];
        for (int l = k; l < two_n - k; ++l)
            cur[static_cast<std::size_t>(l)] =
                prev[static_cast<std::size_t>(l) + 1] - alpha[static_cast<std::size_t>(k) - 1] * prev[static_cast<std::size_t>(l)] -
                (k > 1 ? beta[static_cast<std::size_t>(k) - 1] * prev2[static_cast<std::size_t>(l)] : 0.0L);
        alpha[static_cast<std::size_t>(k)] =
            cur[static_cast<std::size_t>(k) + 1] / cur[static_cast<std::size_t>(k)] -
            prev[static_cast<std::size_t>(k)] / prev[static_cast<std::size_t>(k) - 1];
        beta[static_cast<std::size_t>(k)] = cur[static_cast<std::size_t>(k)] / prev[static_cast<std::size_t>(k) - 1];
    }
}

// Newton polish of the moment system sum_i W_i u_i^k = mu_k, k = 0..2n-1,
// in the scaled residual. The Jacobian may be ill-conditioned; the residual
// itself is what the rule promises, and Newton drives it to rounding level.
void newton_polish(std::vector<double>& u, std::vector<double>& w, const std::vector<double>& mu) {
    const int n = static_cast<int>(u.size());
    const int m = 2 * n;
    Eigen::VectorXd r(m);
    Eigen::MatrixXd J(m, m);
    auto residual_norm = [&](const std::vector<double>& uu, const std::vector<double>& ww) {
        double worst = 0.0;
        for (int k = 0; k < m; ++k) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += ww[static_cast<std::size_t>(i)] * std::pow(uu[static_cast<std::size_t>(i)], k);
            worst = std::max(worst, std::abs(s - mu[static_cast<std::size_t>(k)]) / mu[static_cast<std::size_t>(k)]);
        }
        return worst;
    };

    double best = residual_norm(u, w);
    auto best_u = u;
    auto best_w = w;
    for (int iter = 0; iter < 12 && best > 1e-15; ++iter) {
        for (int k = 0; k < m; ++k) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) {
                const double ui = u[static_cast<std::size_t>(i)];
                const double wi = w[static_cast<std::size_t>(i)];
                const double up = k > 0 ? std::pow(ui, k - 1) : 0.0;
                s += wi * (k > 0 ? up * ui : 1.0);
                J(k, i) = k > 0 ? k * wi * up : 0.0;    // d/du_i
                J(k, n + i) = k > 0 ? up * ui : 1.0;    // d/dW_i
            }
            r(k) = (s - mu[static_cast<std::size_t>(k)]) / mu[static_cast<std::size_t>(k)];
            for (int i = 0; i < 2 * n; ++i) J(k, i) /= mu[static_cast<std::size_t>(k)];
        }
        Eigen::VectorXd step = J.partialPivLu().solve(-r);
        if (!step.allFinite()) break;

        double damp = 1.0;
        for (int half = 0; half < 6; ++half, damp *= 0.5) {
            auto cu = u;
            auto cw = w;
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                cu[static_cast<std::size_t>(i)] += damp * step(i);
                cw[static_cast<std::size_t>(i)] += damp * step(n + i);
                if (!(cu[static_cast<std::size_t>(i)] > 0.0 && cu[static_cast<std::size_t>(i)] < 1.0 &&
                      cw[static_cast<std::size_t>(i)] > 0.0))
                    ok = false;
            }
            if (!ok) continue;
            const double rn = residual_norm(cu, cw);
            if (rn < best) {
                best = rn;
                best_u = cu;
                best_w = cw;
                u = cu;
                w = cw;
                break;
            }
        }
    }
    u = best_u;
    w = best_w;
}

}  // namespace

RysRule rys_rule(int n, double T) {
    if (n < 1 || n > kRysMaxPoints) throw std::domain_error("Rys point count out of supported range 1..10");
    if (!(T >= 0.0)) throw std::domain_error("Rys argument must be >= 0");

    const BoysTable fm = boys(2 * n - 1, T);
    const std::vector<double>& mu = fm.values;

    std::vector<long double> alpha, beta;
    chebyshev_recurrence(mu, n, alpha, beta);

    // Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights come
    // from the first components of the normalized eigenvectors.
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        jac(k, k) = static_cast<double>(alpha[static_cast<std::size_t>(k)]);
        if (k + 1 < n) {
            const double off = std::sqrt(static_cast<double>(beta[static_cast<std::size_t>(k) + 1]));
            jac(k, k + 1) = off;
            jac(k + 1, k) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    if (es.info() != Eigen::Success) throw std::runtime_error("Rys Jacobi eigensolve failed");

    std::vector<double> u(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        u[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
        const double q0 = es.eigenvectors()(0, i);
        w[static_cast<std::size_t>(i)] = mu[0] * q0 * q0;
    }

    newton_polish(u, w, mu);

    RysRule rule;
    rule.n = n;
    rule.T = T;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights = w;
    for (int i = 0; i < n; ++i) {
        const double ui = u[static_cast<std::size_t>(i)];
        if (!(ui > 0.0 && ui < 1.0) || !(w[static_cast<std::size_t>(i)] > 0.0))
            throw std::runtime_error("Rys rule construction produced an invalid node or weight");
        rule.nodes[static_cast<std::size_t>(i)] = std::sqrt(ui);
    }
    return rule;
}

double eri_ssss_via_rys(const QuartetGeometry& geom) {
    const RysRule rule = rys_rule(1, geom.T);
    return geom.prefactor() * rule.weights[0];
}

}  // namespace gaussint
