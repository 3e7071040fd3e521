#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "logsum/model.hpp"

using logsum::ProblemInstance;
using logsum::ProblemSpec;

TEST_CASE("spec validation and shape") {
    ProblemSpec s{1000, 0.5, 0.2, 42};
    s.validate();
    CHECK(s.m() == 500);
    CHECK(ProblemSpec{1000, 0.6337, 0.2, 0}.m() == 634);

    CHECK_THROWS_AS((ProblemSpec{0, 0.5, 0.2, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((ProblemSpec{100, 0.0, 0.2, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((ProblemSpec{100, 1.5, 0.2, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((ProblemSpec{100, 0.5, 0.0, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((ProblemSpec{100, 0.5, 1.0, 0}).validate(), std::invalid_argument);
}

TEST_CASE("generation is deterministic and seed-sensitive") {
    ProblemSpec s{500, 0.5, 0.2, 7};
    ProblemInstance a = logsum::generate(s);
    ProblemInstance b = logsum::generate(s);
    CHECK(a.a == b.a);
    CHECK(a.x0 == b.x0);
    CHECK(a.y == b.y);

    ProblemSpec s2 = s;
    s2.seed = 8;
    CHECK(logsum::generate(s2).a != a.a);
    CHECK(logsum::generate(s, 1).a != a.a);

    // The per-instance stream only depends on seed ^ index.
    ProblemSpec s3 = s;
    s3.seed = 7 ^ 3;
    CHECK(logsum::generate(s3, 0).a == logsum::generate(s, 3).a);
}

TEST_CASE("matrix and signal statistics") {
    ProblemSpec s{2000, 0.5, 0.2, 123};
    ProblemInstance inst = logsum::generate(s);
    const int n = s.n;
    const int m = s.m();

    double mean = inst.a.mean();
    double var = (inst.a.array() - mean).square().sum() / (double(m) * n - 1.0);
    CHECK(std::abs(mean) < 4.0 / std::sqrt(double(m) * n * (1.0 / n)));
    CHECK(var == doctest::Approx(1.0 / n).epsilon(0.01));

    int nonzero = (inst.x0.array() != 0.0).count();
    double p = 0.2;
    double sd = std::sqrt(n * p * (1.0 - p));
    CHECK(std::abs(nonzero - n * p) < 5.0 * sd);

    // Nonzero entries are standard normal.
    double ss = 0.0;
    for (int i = 0; i < n; ++i) ss += inst.x0[i] * inst.x0[i];
    double nz_var = ss / nonzero;
    CHECK(nz_var == doctest::Approx(1.0).epsilon(0.15));

    CHECK((inst.y - inst.a * inst.x0).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("mse basics and the trivial-estimator baseline") {
    Eigen::VectorXd a(3), b(3);
    a << 1, 2, 3;
    b << 1, 2, 3;
    CHECK(logsum::mse(a, b) == 0.0);
    b << 1, 2, 6;
    CHECK(logsum::mse(a, b) == doctest::Approx(3.0).epsilon(1e-15));
    Eigen::VectorXd c(2);
    CHECK_THROWS_AS(logsum::mse(a, c), std::invalid_argument);

    // E mse(0, x0) = rho: average over several instances.
    double acc = 0.0;
    int reps = 20;
    for (int r = 0; r < reps; ++r) {
        ProblemInstance inst = logsum::generate(ProblemSpec{2000, 0.5, 0.3, 99}, r);
        acc += logsum::mse(Eigen::VectorXd::Zero(2000), inst.x0);
    }
    CHECK(acc / reps == doctest::Approx(0.3).epsilon(0.05));
}

TEST_CASE("memory budget guard") {
    ProblemSpec s{4000, 0.5, 0.2, 1};
    CHECK_THROWS_AS(logsum::generate(s, 0, std::size_t{1} << 20), std::length_error);
}

TEST_CASE("instance round trip through the binary container") {
    ProblemSpec s{200, 0.45, 0.25, 77};
    ProblemInstance inst = logsum::generate(s);
    std::string path = "test_model_roundtrip.bin";
    logsum::save_instance(inst, path);
    ProblemInstance back = logsum::load_instance(path);
    std::remove(path.c_str());

    CHECK(back.spec.n == s.n);
    CHECK(back.spec.alpha == s.alpha);
    CHECK(back.spec.rho == s.rho);
    CHECK(back.spec.seed == s.seed);
    CHECK(back.a == inst.a);
    CHECK(back.x0 == inst.x0);
    CHECK(back.y == inst.y);
}
