#include "ergm_engine.hpp"
#include "tradenet/errors.hpp"
#include "tradenet/parallel.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace tradenet {

namespace {

// log(1 + e^x) without overflow on either tail.
double softplus(double x) {
    if (x > 0.0) return x + std::log1p(std::exp(-x));
    return std::log1p(std::exp(x));
}

std::string join_names(const std::vector<std::string>& names, const std::vector<int>& idx) {
    std::string out;
    for (int k : idx) {
        if (!out.empty()) out += ", ";
        out += names[static_cast<size_t>(k)];
    }
    return out;
}

} // namespace

ErgmFit fit_mple(const TradeGraph& graph, const ModelSpec& model) {
    detail::require_bound(model, graph.node_labels());
    auto n = static_cast<int>(graph.node_count());
    if (n < 2) {
        throw DataError("pseudo-likelihood fit needs at least 2 nodes");
    }
    auto compiled = detail::compile_model(model, n);
    auto p = static_cast<Eigen::Index>(compiled.size());
    auto dyads = static_cast<Eigen::Index>(n) * (n - 1);

    if (graph.edge_count() == 0 || static_cast<Eigen::Index>(graph.edge_count()) == dyads) {
        throw NumericalError(
            "perfect separation: every dyad has the same state, coefficients diverge");
    }

    auto dense = DenseDigraph::from_graph(graph);
    Eigen::MatrixXd X(dyads, p);
    Eigen::VectorXd y(dyads);
    parallel_for(n, resolve_threads(0), [&](int i) {
        std::vector<double> row(compiled.size());
        Eigen::Index r = static_cast<Eigen::Index>(i) * (n - 1);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            detail::change_stats(dense, compiled, i, j, row.data());
            for (Eigen::Index k = 0; k < p; ++k) X(r, k) = row[static_cast<size_t>(k)];
            y(r) = dense.has_edge(i, j) ? 1.0 : 0.0;
            ++r;
        }
    });

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    if (qr.rank() < p) {
        std::vector<int> dependent;
        const auto& perm = qr.colsPermutation().indices();
        for (Eigen::Index k = qr.rank(); k < p; ++k) {
            dependent.push_back(perm(k));
        }
        throw NumericalError("rank-deficient design; collinear statistics: " +
                             join_names(compiled.names, dependent));
    }

    Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
    Eigen::VectorXd eta(dyads), mu(dyads), w(dyads);
    Eigen::MatrixXd info(p, p);
    bool converged = false;
    int iterations = 0;
    for (int iter = 1; iter <= 50; ++iter) {
        iterations = iter;
        eta = X * beta;
        for (Eigen::Index r = 0; r < dyads; ++r) {
            double m = 1.0 / (1.0 + std::exp(-eta(r)));
            mu(r) = m;
            w(r) = m * (1.0 - m);
        }
        Eigen::VectorXd grad = X.transpose() * (y - mu);
        info = X.transpose() * w.asDiagonal() * X;
        Eigen::VectorXd step = info.ldlt().solve(grad);
        if (!step.allFinite()) {
            throw NumericalError("non-finite Newton step; design may be separated");
        }
        beta += step;
        if (beta.cwiseAbs().maxCoeff() > 30.0) {
            throw NumericalError(
                "coefficients diverging (|theta| > 30); possible perfect separation");
        }
        if (step.cwiseAbs().maxCoeff() < 1e-8) {
            converged = true;
            break;
        }
    }

    eta = X * beta;
    double pll = 0.0;
    for (Eigen::Index r = 0; r < dyads; ++r) {
        pll += y(r) * eta(r) - softplus(eta(r));
        double m = 1.0 / (1.0 + std::exp(-eta(r)));
        w(r) = m * (1.0 - m);
    }
    info = X.transpose() * w.asDiagonal() * X;
    Eigen::MatrixXd cov = info.ldlt().solve(Eigen::MatrixXd::Identity(p, p));

    ErgmFit fit;
    fit.names = compiled.names;
    fit.coefficients.resize(static_cast<size_t>(p));
    fit.standard_errors.resize(static_cast<size_t>(p));
    for (Eigen::Index k = 0; k < p; ++k) {
        fit.coefficients[static_cast<size_t>(k)] = beta(k);
        double v = cov(k, k);
        if (!std::isfinite(v) || v <= 0.0) {
            throw NumericalError("observed information is not positive definite at the optimum");
        }
        fit.standard_errors[static_cast<size_t>(k)] = std::sqrt(v);
    }
    fit.pseudo_loglik = pll;
    fit.aic = 2.0 * static_cast<double>(p) - 2.0 * pll;
    fit.converged = converged;
    fit.iterations = iterations;
    fit.caveat =
        "estimates maximize the pseudo-likelihood; standard errors use the same "
        "approximation and understate uncertainty under dyad dependence";
    return fit;
}

} // namespace tradenet
