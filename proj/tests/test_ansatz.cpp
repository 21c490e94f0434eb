#include <doctest.h>

#include <cmath>

#include "catgate/ansatz.hpp"

using namespace catgate;

namespace {

double get_param(const AnsatzParams& p, int k) {
    const int nm = p.n_mu(), ne = p.n_eta();
    if (k < nm) return p.W1[k];
    if (k < 2 * nm) return p.B1[k - nm];
    if (k < 3 * nm) return p.phi1[k - 2 * nm];
    if (k < 4 * nm) return p.W2[k - 3 * nm];
    const int j = k - 4 * nm;
    if (j < ne) return p.W3[j];
    if (j < 2 * ne) return p.B3[j - ne];
    if (j < 3 * ne) return p.phi2[j - 2 * ne];
    return p.W4[j - 3 * ne];
}

void set_param(AnsatzParams& p, int k, double v) {
    const int nm = p.n_mu(), ne = p.n_eta();
    if (k < nm) p.W1[k] = v;
    else if (k < 2 * nm) p.B1[k - nm] = v;
    else if (k < 3 * nm) p.phi1[k - 2 * nm] = v;
    else if (k < 4 * nm) p.W2[k - 3 * nm] = v;
    else {
        const int j = k - 4 * nm;
        if (j < ne) p.W3[j] = v;
        else if (j < 2 * ne) p.B3[j - ne] = v;
        else if (j < 3 * ne) p.phi2[j - 2 * ne] = v;
        else p.W4[j - 3 * ne] = v;
    }
}

}  // namespace

TEST_CASE("boundary pinning and periodicity") {
    const AnsatzParams p = random_ansatz(6, 0.37, -1.2, 1.0, 7);
    double mu, eta, dmu, deta;
    eval_values(p, 0.0, mu, eta, dmu, deta);
    CHECK(mu == doctest::Approx(0.37).epsilon(1e-14));
    CHECK(eta == doctest::Approx(-1.2).epsilon(1e-14));
    // the mu features have period L, so mu(L) = mu(0) structurally
    double muL, etaL, d1, d2;
    eval_values(p, 1.0, muL, etaL, d1, d2);
    CHECK(muL == doctest::Approx(mu).epsilon(1e-12));
    // pinned bias closes the t = 0 sum exactly
    double s = p.pinned_B2();
    for (std::size_t i = 0; i < p.W1.size(); ++i)
        s += p.W2[i] * std::tanh(p.W1[i] * std::cos(p.phi1[i]) + p.B1[i]);
    CHECK(s == doctest::Approx(0.37).epsilon(1e-14));
}

TEST_CASE("deterministic initialization") {
    const AnsatzParams a = random_ansatz(6, 0.0, 0.0, 1.0, 42);
    const AnsatzParams b = random_ansatz(6, 0.0, 0.0, 1.0, 42);
    const AnsatzParams c = random_ansatz(6, 0.0, 0.0, 1.0, 43);
    CHECK(a.W1 == b.W1);
    CHECK(a.W4 == b.W4);
    CHECK(a.W1 != c.W1);
    for (const double w : a.W1) {
        CHECK(w >= -0.5);
        CHECK(w <= 0.5);
    }
}

TEST_CASE("parameter gradients against central differences") {
    const AnsatzParams p = random_ansatz(6, 0.3, 0.8, 1.0, 11);
    const int np = p.n_learnable();
    const double h = 1e-6;
    for (const double t : {0.13, 0.5, 0.92}) {
        const AnsatzEval e = eval_with_gradients(p, t);
        for (int k = 0; k < np; ++k) {
            AnsatzParams pp = p, pm = p;
            set_param(pp, k, get_param(p, k) + h);
            set_param(pm, k, get_param(p, k) - h);
            double mup, etap, dmup, detap, mum, etam, dmum, detam;
            eval_values(pp, t, mup, etap, dmup, detap);
            eval_values(pm, t, mum, etam, dmum, detam);
            const double fd_mu = (mup - mum) / (2 * h);
            const double fd_eta = (etap - etam) / (2 * h);
            const double fd_dmu = (dmup - dmum) / (2 * h);
            const double fd_deta = (detap - detam) / (2 * h);
            CHECK(std::abs(e.dmu_dp[k] - fd_mu) < 1e-5 * std::max(1.0, std::abs(fd_mu)));
            CHECK(std::abs(e.deta_dp[k] - fd_eta) <
                  1e-5 * std::max(1.0, std::abs(fd_eta)));
            CHECK(std::abs(e.ddmu_dp[k] - fd_dmu) <
                  1e-5 * std::max(1.0, std::abs(fd_dmu)));
            CHECK(std::abs(e.ddeta_dp[k] - fd_deta) <
                  1e-5 * std::max(1.0, std::abs(fd_deta)));
        }
    }
}

TEST_CASE("time derivative consistency") {
    const AnsatzParams p = random_ansatz(6, 0.0, 0.0, 1.0, 3);
    const double h = 1e-6;
    for (const double t : {0.2, 0.66}) {
        double mu1, eta1, a, b, mu2, eta2, c, d, mu0v, eta0v, dmu, deta;
        eval_values(p, t + h, mu1, eta1, a, b);
        eval_values(p, t - h, mu2, eta2, c, d);
        eval_values(p, t, mu0v, eta0v, dmu, deta);
        CHECK(dmu == doctest::Approx((mu1 - mu2) / (2 * h)).epsilon(1e-5));
        CHECK(deta == doctest::Approx((eta1 - eta2) / (2 * h)).epsilon(1e-5));
    }
}

TEST_CASE("output weight classification") {
    const AnsatzParams p = random_ansatz(6, 0.0, 0.0, 1.0, 1);
    int fast = 0;
    for (int k = 0; k < p.n_learnable(); ++k)
        if (p.is_output_weight(k)) ++fast;
    CHECK(fast == 6);  // W2 and W4 blocks
    CHECK(p.is_output_weight(9));
    CHECK_FALSE(p.is_output_weight(0));
}

TEST_CASE("pretraining reaches the trig seed path") {
    AnsatzParams p = random_ansatz(6, 0.0, 0.0, 1.0, 42);
    const double err = pretrain(p, 2.31253, 10000, 1001);
    CHECK(err < 1e-3);
    // seed path recovered: forward matches the trig protocol everywhere
    const ControlPath target = trig_path(0.0, 0.0, 2.31253, 1.0, 101);
    const ControlPath got = forward(p, target.t);
    for (std::size_t i = 0; i < got.size(); i += 10)
        CHECK(std::abs(got.mu[i] - target.mu[i]) < 2e-3);
}

TEST_CASE("pretraining failure is reported") {
    AnsatzParams p = random_ansatz(6, 0.0, 0.0, 1.0, 42);
    CHECK_THROWS_AS(pretrain(p, 5.0, 0, 101), ConvergenceFailure);
}
