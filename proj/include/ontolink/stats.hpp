#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ontolink/features.hpp"

namespace ontolink {

// Dense row-major matrix; all the fits here are tiny (p <= 10).
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// n x 9 predictor matrix and 0/1 labels in row order.
Matrix feature_matrix(const Dataset& ds);
std::vector<int> label_vector(const Dataset& ds);

// Column-wise z-scoring parameters: sample mean and sample SD (n-1).
struct Standardizer {
    std::vector<double> means;
    std::vector<double> sds;

    void apply_in_place(Matrix& m) const;
    std::vector<double> transform_row(std::span<const double> row) const;
};

// Throws DegenerateError naming the first zero-variance column.
// `names` supplies the column names for error messages (may be empty).
Standardizer fit_standardizer(const Matrix& m, std::span<const std::string> names = {});

// Regularized incomplete beta I_x(a,b), |error| < 1e-12 over the t-test
// domain. Exposed for verification against quadrature.
double regularized_incomplete_beta(double a, double b, double x);

// Survival function P(T > t) for Student's t with `df` degrees of freedom.
double student_t_sf(double t, double df);

struct WelchResult {
    double t = 0.0;
    double df = 0.0;
    double p = 1.0;  // two-sided
};

// Welch's unequal-variance t-test with Welch-Satterthwaite df.
// Requires at least two observations per sample.
WelchResult welch_t(std::span<const double> a, std::span<const double> b);

// (mean(a) - mean(b)) / pooled SD. DegenerateError on zero pooled SD.
double cohens_d(std::span<const double> a, std::span<const double> b);

struct UnivariateRow {
    std::string feature;
    double mean_z_correct = 0.0;
    double mean_z_incorrect = 0.0;
    double diff = 0.0;  // correct - incorrect
    double t_statistic = 0.0;
    double p_value = 1.0;
    double cohens_d = 0.0;
};

struct UnivariateReport {
    std::vector<UnivariateRow> rows;  // |d| descending
};

// Standardizes over all rows, then contrasts correct vs incorrect groups.
// DegenerateError when either class is empty (or has fewer than two rows).
UnivariateReport univariate_report(const Dataset& ds);

struct LogisticFitOptions {
    double gradient_tolerance = 1e-8;
    double ll_tolerance = 1e-10;
    int max_iterations = 100;
    double ridge_jitter = 1e-10;  // applied once if the normal matrix is singular
};

// Newton/IRLS fit over an explicit design; X carries the predictors only,
// the intercept column is added internally, no standardization happens here.
struct LogisticFit {
    std::vector<double> beta;  // intercept first, then one per X column
    double log_likelihood = 0.0;
    bool converged = false;
    int iterations = 0;
    bool separation_suspected = false;
    bool ridge_applied = false;
};

LogisticFit fit_logistic_raw(const Matrix& x, const std::vector<int>& y,
                             const LogisticFitOptions& options = {});

double logistic_log_likelihood(const Matrix& x, const std::vector<int>& y,
                               std::span<const double> beta);
std::vector<double> logistic_gradient(const Matrix& x, const std::vector<int>& y,
                                      std::span<const double> beta);
std::vector<double> logistic_predict(const Matrix& x, std::span<const double> beta);

// The paper-facing model: nine standardized predictors plus intercept.
struct LogisticModel {
    std::vector<std::string> feature_names;
    Standardizer standardizer;
    double intercept = 0.0;
    std::vector<double> coefficients;  // standardized scale
    double log_likelihood = 0.0;
    double null_log_likelihood = 0.0;  // intercept-only fit on the same rows
    bool converged = false;
    int iterations = 0;
    bool separation_suspected = false;
    std::string ontology;
    std::string model_name;
};

// Unpenalized maximum likelihood on the standardized design. Requires both
// classes present; zero-variance predictors and unrecoverably singular
// normal equations raise DegenerateError. Non-convergence (possible
// complete separation) is reported in the model, not thrown.
LogisticModel fit_logistic(const Dataset& ds);

std::vector<double> predict_probabilities(const LogisticModel& model, const Dataset& ds);

struct MetricsReport {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double auc = 0.0;
    double mcfadden_r2 = 0.0;
    double tjur_r2 = 0.0;
    bool no_positive_predictions = false;  // precision reported as 0
};

// AUC by the Mann-Whitney rank statistic; ties contribute one half.
// Exact (integer rank arithmetic). DegenerateError on single-class labels.
double auc_rank(std::span<const double> scores, std::span<const int> labels);

// Classification threshold 0.5 (p >= 0.5 predicts the positive class).
MetricsReport metrics(const LogisticModel& model, const Dataset& ds);

void write_univariate_csv(const UnivariateReport& report, const std::string& ontology,
                          const std::string& model_name, const std::filesystem::path& path);
void write_coefficients_csv(const LogisticModel& model, const std::filesystem::path& path);
void write_metrics_csv(const MetricsReport& report, const std::string& ontology,
                       const std::string& model_name, const std::filesystem::path& path);
void save_model_json(const LogisticModel& model, const std::filesystem::path& path);
LogisticModel load_model_json(const std::filesystem::path& path);

}  // namespace ontolink
