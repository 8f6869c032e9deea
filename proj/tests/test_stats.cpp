#include <doctest.h>

#include <chrono>
#include <cmath>
#include <random>

#include "ontolink/errors.hpp"
#include "ontolink/stats.hpp"
#include "support/fixtures.hpp"
#include "support/stat_oracles.hpp"

using namespace ontolink;

namespace {

// dataset with the nine features filled from a raw matrix (column-cycled)
Dataset dataset_from(const Matrix& x, const std::vector<int>& y) {
    Dataset ds;
    ds.model_name = "fixture";
    for (std::size_t i = 0; i < x.rows; ++i) {
        FeatureVector v;
        char digits[8];
        std::snprintf(digits, sizeof(digits), "%07zu", i);
        v.term_id = Curie("HP", digits);
        // raw doubles ride the one double-typed field; the rest vary
        // deterministically so no column is constant
        v.identifier_entropy = x.at(i, 0);
        v.pmc_terms = (i * 7) % 23;
        v.pmc_identifiers = (i * 11) % 19;
        v.annotation_count = static_cast<std::uint64_t>(i % 7);
        v.no_annotation = (v.annotation_count == 0);
        v.characters = 1 + (i * 13) % 40;
        v.leading_000 = (i % 3) == 0;
        v.leaf = (i % 2) == 0;
        v.depth = i % 11;
        ds.rows.push_back(DatasetRow{v, y[i] != 0});
    }
    return ds;
}

Matrix matrix_from(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (double v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

std::vector<double> column(const Matrix& m, std::size_t j) {
    std::vector<double> out;
    for (std::size_t i = 0; i < m.rows; ++i) out.push_back(m.at(i, j));
    return out;
}

}  // namespace

TEST_SUITE("stats") {

TEST_CASE("standardizer on [1,2,3]") {
    Matrix m = matrix_from({{1.0}, {2.0}, {3.0}});
    auto s = fit_standardizer(m);
    CHECK(s.means[0] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(s.sds[0] == doctest::Approx(1.0).epsilon(1e-15));
    s.apply_in_place(m);
    CHECK(m.at(0, 0) == doctest::Approx(-1.0));
    CHECK(m.at(1, 0) == doctest::Approx(0.0));
    CHECK(m.at(2, 0) == doctest::Approx(1.0));
}

TEST_CASE("standardized data transforms to mean 0 sd 1 within 1e-9") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss(3.0, 7.0);
    Matrix m(400, 2);
    for (std::size_t i = 0; i < m.rows; ++i) {
        m.at(i, 0) = gauss(rng);
        m.at(i, 1) = gauss(rng) * 0.01;
    }
    auto s = fit_standardizer(m);
    s.apply_in_place(m);
    for (std::size_t j = 0; j < 2; ++j) {
        auto col = column(m, j);
        double mean = 0;
        for (double v : col) mean += v;
        mean /= col.size();
        double ss = 0;
        for (double v : col) ss += (v - mean) * (v - mean);
        double sd = std::sqrt(ss / (col.size() - 1));
        CHECK(std::fabs(mean) < 1e-9);
        CHECK(std::fabs(sd - 1.0) < 1e-9);
    }
    // re-standardizing is close to the identity
    auto s2 = fit_standardizer(m);
    CHECK(std::fabs(s2.means[0]) < 1e-9);
    CHECK(s2.sds[0] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("constant column is a degenerate-column error naming it") {
    Matrix m = matrix_from({{1.0, 5.0}, {2.0, 5.0}, {3.0, 5.0}});
    std::vector<std::string> names{"good", "flat"};
    CHECK_THROWS_WITH_AS(fit_standardizer(m, names), doctest::Contains("flat"),
                         DegenerateError);
}

TEST_CASE("welch t on identical samples") {
    std::vector<double> a{1.0, 2.0, 3.0};
    auto r = welch_t(a, a);
    CHECK(r.t == 0.0);
    CHECK(r.p == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("welch t hand-computed fixture") {
    std::vector<double> a{1.0, 2.0, 3.0};
    std::vector<double> b{3.0, 4.0, 5.0};
    auto r = welch_t(a, b);
    CHECK(r.t == doctest::Approx(-std::sqrt(6.0)).epsilon(1e-12));
    CHECK(r.t == doctest::Approx(-2.449).epsilon(1e-3));
    CHECK(r.df == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(r.p == doctest::Approx(0.0705).epsilon(2e-3));
}

TEST_CASE("welch t separation limit") {
    std::vector<double> a{0.0, 0.001, -0.001, 0.0005};
    std::vector<double> b{100.0, 100.001, 99.999, 100.0005};
    auto r = welch_t(a, b);
    CHECK(r.p < 1e-6);
    CHECK(r.t < 0.0);
}

TEST_CASE("welch t rejects undersized samples") {
    std::vector<double> one{1.0};
    std::vector<double> two{1.0, 2.0};
    CHECK_THROWS_AS(welch_t(one, two), DegenerateError);
}

TEST_CASE("t survival function against quadrature") {
    for (auto [t, df] : {std::pair{2.449, 4.0}, {1.0, 10.0}, {3.3, 25.0}, {0.2, 6.5}}) {
        double ours = student_t_sf(t, df);
        double ref = testsupport::t_sf_by_quadrature(t, df);
        CHECK(std::fabs(ours - ref) < 1e-6);
        // symmetry
        CHECK(student_t_sf(-t, df) == doctest::Approx(1.0 - ours).epsilon(1e-12));
    }
}

TEST_CASE("cohens d") {
    std::vector<double> a{1.0, 2.0, 3.0};
    std::vector<double> b{3.0, 4.0, 5.0};
    CHECK(cohens_d(a, a) == 0.0);
    CHECK(cohens_d(a, b) == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(cohens_d(b, a) == doctest::Approx(2.0).epsilon(1e-9));  // antisymmetry
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        std::vector<double> x, y;
        for (int k = 0; k < 8; ++k) x.push_back(static_cast<double>(rng() % 100));
        for (int k = 0; k < 5; ++k) y.push_back(static_cast<double>(rng() % 100));
        if (x == y) continue;
        CHECK(cohens_d(x, y) == doctest::Approx(-cohens_d(y, x)).epsilon(1e-12));
    }
    std::vector<double> flat{2.0, 2.0, 2.0};
    std::vector<double> flat_other{3.0, 3.0};
    CHECK_THROWS_AS(cohens_d(flat, flat_other), DegenerateError);
}

TEST_CASE("logistic: intercept-only on balanced labels") {
    Matrix empty(8, 0);
    std::vector<int> y{0, 1, 0, 1, 0, 1, 0, 1};
    auto fit = fit_logistic_raw(empty, y);
    CHECK(fit.converged);
    CHECK(fit.beta[0] == doctest::Approx(0.0).epsilon(1e-10));
    auto probs = logistic_predict(empty, fit.beta);
    for (double p : probs) CHECK(p == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("logistic: intercept-only has McFadden exactly zero") {
    std::vector<int> y{0, 0, 1, 0, 1, 1, 0, 0, 0, 1};
    Matrix empty(y.size(), 0);
    auto model_fit = fit_logistic_raw(empty, y);
    auto null_fit = fit_logistic_raw(empty, y);
    double mcfadden = 1.0 - model_fit.log_likelihood / null_fit.log_likelihood;
    CHECK(mcfadden == 0.0);  // bitwise-identical fits
}

TEST_CASE("logistic: tiny instances match the coordinate-ascent maximizer") {
    // all fixtures non-separable, <= 12 rows, <= 2 features
    struct Fixture {
        Matrix x;
        std::vector<int> y;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({matrix_from({{0.0}, {1.0}, {2.0}, {3.0}, {0.5}, {2.5}}),
                        {0, 1, 0, 1, 1, 0}});
    fixtures.push_back({matrix_from({{-1.0}, {-0.5}, {0.0}, {0.5}, {1.0}, {1.5}, {2.0}, {-2.0}}),
                        {0, 0, 1, 0, 1, 1, 1, 1}});
    fixtures.push_back({matrix_from({{0.0, 1.0},
                                     {1.0, 0.0},
                                     {1.0, 1.0},
                                     {0.0, 0.0},
                                     {2.0, 1.0},
                                     {1.0, 2.0},
                                     {2.0, 2.0},
                                     {0.5, 1.5},
                                     {1.5, 0.5},
                                     {0.25, 0.75},
                                     {1.75, 1.25},
                                     {0.75, 0.25}}),
                        {0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0}});
    fixtures.push_back({matrix_from({{3.0, -2.0},
                                     {1.0, 4.0},
                                     {-2.0, 1.0},
                                     {0.0, 0.5},
                                     {2.0, 2.0},
                                     {-1.0, -1.0},
                                     {4.0, 0.0}}),
                        {1, 0, 0, 1, 1, 0, 0}});

    for (std::size_t f = 0; f < fixtures.size(); ++f) {
        CAPTURE(f);
        const auto& fx = fixtures[f];
        auto fit = fit_logistic_raw(fx.x, fx.y);
        REQUIRE(fit.converged);
        auto oracle = testsupport::brute_force_logistic(fx.x, fx.y);
        REQUIRE(oracle.size() == fit.beta.size());
        for (std::size_t k = 0; k < oracle.size(); ++k) {
            CAPTURE(k);
            CHECK(std::fabs(fit.beta[k] - oracle[k]) < 1e-4);
        }
        // the oracle must not have found a better optimum
        double ll_fit = logistic_log_likelihood(fx.x, fx.y, fit.beta);
        double ll_oracle = logistic_log_likelihood(fx.x, fx.y, oracle);
        CHECK(ll_fit >= ll_oracle - 1e-8);
    }
}

TEST_CASE("logistic: analytic gradient matches finite differences at the optimum") {
    Matrix x = matrix_from({{0.2, -1.0},
                            {1.4, 0.3},
                            {-0.7, 0.9},
                            {2.2, -0.4},
                            {0.0, 0.0},
                            {-1.5, 1.5},
                            {0.9, 0.8},
                            {1.1, -1.2}});
    std::vector<int> y{0, 1, 0, 1, 1, 0, 1, 0};
    auto fit = fit_logistic_raw(x, y);
    auto analytic = logistic_gradient(x, y, fit.beta);
    const double h = 1e-6;
    for (std::size_t k = 0; k < fit.beta.size(); ++k) {
        auto plus = fit.beta, minus = fit.beta;
        plus[k] += h;
        minus[k] -= h;
        double fd = (logistic_log_likelihood(x, y, plus) -
                     logistic_log_likelihood(x, y, minus)) /
                    (2.0 * h);
        double denom = std::max({1.0, std::fabs(analytic[k]), std::fabs(fd)});
        CHECK(std::fabs(analytic[k] - fd) / denom < 1e-5);
    }
}

TEST_CASE("logistic: synthetic recovery within 0.1 per coefficient") {
    auto started = std::chrono::steady_clock::now();
    const std::size_t n = 5000;
    const std::array<double, kFeatureCount> truth = {0.8, -1.2, 0.5,  0.0, 0.3,
                                                     -0.7, 1.0, 0.2, -0.4};
    const double true_intercept = -0.9;

    std::mt19937_64 rng(123456);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix x(n, kFeatureCount);
    std::vector<int> y(n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        double eta = true_intercept;
        for (std::size_t j = 0; j < kFeatureCount; ++j) {
            x.at(i, j) = gauss(rng);
            eta += truth[j] * x.at(i, j);
        }
        y[i] = unit(rng) < 1.0 / (1.0 + std::exp(-eta)) ? 1 : 0;
    }
    auto fit = fit_logistic_raw(x, y);
    REQUIRE(fit.converged);
    CHECK(std::fabs(fit.beta[0] - true_intercept) < 0.1);
    for (std::size_t j = 0; j < kFeatureCount; ++j) {
        CAPTURE(j);
        CHECK(std::fabs(fit.beta[j + 1] - truth[j]) < 0.1);
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    CHECK(elapsed < 30);
}

TEST_CASE("logistic: complete separation is flagged, not fatal") {
    Matrix x(10, 1);
    std::vector<int> y(10);
    for (std::size_t i = 0; i < 10; ++i) {
        y[i] = i < 5 ? 0 : 1;
        x.at(i, 0) = y[i];  // predictor equals the label
    }
    auto fit = fit_logistic_raw(x, y);
    CHECK(fit.separation_suspected);
}

TEST_CASE("logistic: duplicated column rides through the ridge jitter") {
    std::mt19937_64 rng(7);
    Matrix x(30, 2);
    std::vector<int> y(30);
    for (std::size_t i = 0; i < 30; ++i) {
        double v = static_cast<double>(rng() % 7) - 3.0;
        x.at(i, 0) = v;
        x.at(i, 1) = v;  // exact duplicate: singular normal equations
        y[i] = (v + static_cast<double>(rng() % 3)) > 0 ? 1 : 0;
    }
    auto fit = fit_logistic_raw(x, y);
    CHECK(fit.ridge_applied);
    // the duplicated pair still acts like one predictor
    auto probs = logistic_predict(x, fit.beta);
    for (double p : probs) {
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
    }
}

TEST_CASE("logistic: predictions are invariant to pre-standardization") {
    std::mt19937_64 rng(31337);
    std::normal_distribution<double> gauss(5.0, 3.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Matrix raw(300, 3);
    std::vector<int> y(300);
    for (std::size_t i = 0; i < raw.rows; ++i) {
        for (std::size_t j = 0; j < raw.cols; ++j) raw.at(i, j) = gauss(rng);
        double eta = -2.0 + 0.3 * raw.at(i, 0) - 0.2 * raw.at(i, 1) + 0.1 * raw.at(i, 2);
        y[i] = unit(rng) < 1.0 / (1.0 + std::exp(-eta)) ? 1 : 0;
    }
    Matrix standardized = raw;
    auto s = fit_standardizer(standardized);
    s.apply_in_place(standardized);

    auto fit_raw = fit_logistic_raw(raw, y);
    auto fit_std = fit_logistic_raw(standardized, y);
    auto p_raw = logistic_predict(raw, fit_raw.beta);
    auto p_std = logistic_predict(standardized, fit_std.beta);
    for (std::size_t i = 0; i < p_raw.size(); ++i) {
        CHECK(std::fabs(p_raw[i] - p_std[i]) < 1e-8);
    }
}

TEST_CASE("fit_logistic end to end on a dataset") {
    std::mt19937_64 rng(2718);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix x(600, kFeatureCount);
    std::vector<int> y(600);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = 0; j < x.cols; ++j) x.at(i, j) = gauss(rng);
        double eta = -0.5 + 1.2 * x.at(i, 0) - 0.8 * x.at(i, 1);
        y[i] = unit(rng) < 1.0 / (1.0 + std::exp(-eta)) ? 1 : 0;
    }
    // build a dataset whose feature_matrix reproduces x exactly is awkward;
    // instead check the public path on a dataset derived from x's first col
    auto ds = dataset_from(x, y);
    auto model = fit_logistic(ds);
    CHECK(model.feature_names.size() == kFeatureCount);
    CHECK(model.coefficients.size() == kFeatureCount);
    CHECK(model.null_log_likelihood < 0.0);
    CHECK(model.log_likelihood >= model.null_log_likelihood);
    double mcfadden = 1.0 - model.log_likelihood / model.null_log_likelihood;
    CHECK(mcfadden >= 0.0);
    CHECK(mcfadden < 1.0);

    auto m = metrics(model, ds);
    CHECK(m.auc >= 0.5);
    CHECK(m.accuracy > 0.0);
    CHECK(m.mcfadden_r2 == doctest::Approx(mcfadden).epsilon(1e-15));

    // tjur equals the definitional group-mean difference
    auto probs = predict_probabilities(model, ds);
    double sp = 0, sn = 0;
    std::size_t np = 0, nn = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (ds.rows[i].label) {
            sp += probs[i];
            ++np;
        } else {
            sn += probs[i];
            ++nn;
        }
    }
    CHECK(std::fabs(m.tjur_r2 - (sp / np - sn / nn)) < 1e-12);
}

TEST_CASE("fit_logistic refuses single-class data") {
    Matrix x(6, kFeatureCount);
    std::vector<int> y(6, 1);
    auto ds = dataset_from(x, y);
    CHECK_THROWS_AS(fit_logistic(ds), DegenerateError);
}

TEST_CASE("auc on the worked fixture") {
    std::vector<double> scores{0.1, 0.4, 0.35, 0.8};
    std::vector<int> labels{0, 0, 1, 1};
    CHECK(auc_rank(scores, labels) == 0.75);
    CHECK(testsupport::brute_force_auc(scores, labels) == 0.75);
}

TEST_CASE("auc equals the brute-force pairwise statistic on random data") {
    std::mt19937_64 rng(99991);
    for (int trial = 0; trial < 100; ++trial) {
        CAPTURE(trial);
        std::size_t n = 2 + rng() % 199;
        std::vector<double> scores(n);
        std::vector<int> labels(n);
        bool has0 = false, has1 = false;
        for (std::size_t i = 0; i < n; ++i) {
            // coarse grid of scores forces plenty of ties
            scores[i] = static_cast<double>(rng() % 20) / 19.0;
            labels[i] = static_cast<int>(rng() % 2);
            has0 |= labels[i] == 0;
            has1 |= labels[i] == 1;
        }
        if (!has0) labels[0] = 0;
        if (!has1) labels[n - 1] = 1;
        CHECK(auc_rank(scores, labels) == testsupport::brute_force_auc(scores, labels));
    }
}

TEST_CASE("auc rejects single-class labels") {
    std::vector<double> scores{0.1, 0.2};
    std::vector<int> labels{1, 1};
    CHECK_THROWS_AS(auc_rank(scores, labels), DegenerateError);
}

namespace {

// identity standardizer + explicit coefficients, for testing metric
// arithmetic in isolation
LogisticModel hand_model(double intercept, std::array<double, kFeatureCount> coefs,
                         double ll, double null_ll) {
    LogisticModel m;
    m.feature_names.assign(kFeatureNames.begin(), kFeatureNames.end());
    m.standardizer.means.assign(kFeatureCount, 0.0);
    m.standardizer.sds.assign(kFeatureCount, 1.0);
    m.intercept = intercept;
    m.coefficients.assign(coefs.begin(), coefs.end());
    m.log_likelihood = ll;
    m.null_log_likelihood = null_ll;
    m.converged = true;
    return m;
}

}  // namespace

TEST_CASE("metrics on perfect predictions are all 1") {
    // depth equals the label; a huge coefficient saturates the sigmoid
    Matrix x(8, 1);
    std::vector<int> y{1, 0, 1, 0, 1, 1, 0, 0};
    auto ds = dataset_from(x, y);
    for (auto& row : ds.rows) row.features.depth = row.label ? 1 : 0;

    auto coefs = std::array<double, kFeatureCount>{};
    coefs[8] = 200.0;  // depth column
    auto model = hand_model(-100.0, coefs, 0.0, -100.0);
    auto m = metrics(model, ds);
    CHECK(m.accuracy == 1.0);
    CHECK(m.precision == 1.0);
    CHECK(m.recall == 1.0);
    CHECK(m.f1 == 1.0);
    CHECK(m.auc == 1.0);
    CHECK(m.mcfadden_r2 == 1.0);
    CHECK(m.tjur_r2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("metrics flags a model that never predicts positive") {
    Matrix x(40, 1);
    std::vector<int> y(40);
    for (std::size_t i = 0; i < 40; ++i) y[i] = (i % 10 == 0) ? 1 : 0;
    auto ds = dataset_from(x, y);

    auto model = hand_model(-3.0, std::array<double, kFeatureCount>{}, -10.0, -12.0);
    auto m = metrics(model, ds);
    CHECK(m.no_positive_predictions);
    CHECK(m.precision == 0.0);
    CHECK(m.f1 == 0.0);
    CHECK(m.recall == 0.0);
    CHECK(m.accuracy == doctest::Approx(0.9));
}

TEST_CASE("univariate report orders by effect size and flags definitional cases") {
    std::mt19937_64 rng(13579);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix x(200, 1);
    std::vector<int> y(200);
    for (std::size_t i = 0; i < 200; ++i) {
        y[i] = static_cast<int>(i % 2);
        x.at(i, 0) = gauss(rng);
    }
    auto ds = dataset_from(x, y);
    // make one feature equal to the label: it must dominate the |d| ranking
    for (auto& row : ds.rows) {
        row.features.leaf = row.label;
        row.features.depth = static_cast<std::uint64_t>(3 + (rng() % 5));
    }
    auto report = univariate_report(ds);
    REQUIRE(report.rows.size() == kFeatureCount);
    CHECK(report.rows.front().feature == "leaf");
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
        CHECK(std::fabs(report.rows[i - 1].cohens_d) >=
              std::fabs(report.rows[i].cohens_d) - 1e-15);
    }
    for (const auto& row : report.rows) {
        // diff and d agree in sign (both zero counts as agreement)
        CHECK(row.diff * row.cohens_d >= 0.0);
    }
}

TEST_CASE("univariate report on a feature with identical class distributions") {
    // identical values in both classes: diff 0, d 0 for that feature
    Dataset ds;
    ds.model_name = "fixture";
    std::mt19937_64 rng(24680);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (std::size_t i = 0; i < 100; ++i) {
        FeatureVector v;
        char digits[8];
        std::snprintf(digits, sizeof(digits), "%07zu", i);
        v.term_id = Curie("HP", digits);
        v.identifier_entropy = gauss(rng);
        v.characters = (i / 2) % 9 + 1;  // same sequence in both classes
        v.annotation_count = i % 4;
        v.no_annotation = (v.annotation_count == 0);
        v.pmc_terms = i % 5;
        v.pmc_identifiers = i % 6;
        v.leading_000 = (i % 4) < 2;
        v.leaf = (i % 8) < 4;
        v.depth = i % 10;
        ds.rows.push_back(DatasetRow{v, (i % 2) == 0});
    }
    auto report = univariate_report(ds);
    for (const auto& row : report.rows) {
        if (row.feature == "characters") {
            CHECK(row.diff == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(row.cohens_d == doctest::Approx(0.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("univariate report rejects single-class datasets") {
    Matrix x(10, 1);
    for (std::size_t i = 0; i < 10; ++i) x.at(i, 0) = static_cast<double>(i);
    std::vector<int> y(10, 0);
    auto ds = dataset_from(x, y);
    CHECK_THROWS_AS(univariate_report(ds), DegenerateError);
}

TEST_CASE("model JSON round trip") {
    std::mt19937_64 rng(4444);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Matrix x(120, kFeatureCount);
    std::vector<int> y(120);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = 0; j < x.cols; ++j) x.at(i, j) = gauss(rng);
        y[i] = unit(rng) < 0.4 ? 1 : 0;
    }
    auto ds = dataset_from(x, y);
    ds.ontology = OntologyKind::GO_CC;
    ds.model_name = "round-trip";
    auto model = fit_logistic(ds);

    testsupport::TempDir tmp("model_json");
    save_model_json(model, tmp.file("model.json"));
    auto loaded = load_model_json(tmp.file("model.json"));
    CHECK(loaded.intercept == model.intercept);
    CHECK(loaded.coefficients == model.coefficients);
    CHECK(loaded.standardizer.means == model.standardizer.means);
    CHECK(loaded.standardizer.sds == model.standardizer.sds);
    CHECK(loaded.log_likelihood == model.log_likelihood);
    CHECK(loaded.null_log_likelihood == model.null_log_likelihood);
    CHECK(loaded.ontology == "GO-CC");
    CHECK(loaded.model_name == "round-trip");
}

}  // TEST_SUITE
