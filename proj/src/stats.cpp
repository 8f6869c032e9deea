#include "ontolink/stats.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ontolink/errors.hpp"
#include "ontolink/textio.hpp"

namespace ontolink {

using nlohmann::json;

Matrix feature_matrix(const Dataset& ds) {
    Matrix m(ds.rows.size(), kFeatureCount);
    for (std::size_t i = 0; i < ds.rows.size(); ++i) {
        auto vals = feature_values(ds.rows[i].features);
        for (std::size_t j = 0; j < kFeatureCount; ++j) m.at(i, j) = vals[j];
    }
    return m;
}

std::vector<int> label_vector(const Dataset& ds) {
    std::vector<int> y;
    y.reserve(ds.rows.size());
    for (const auto& r : ds.rows) y.push_back(r.label ? 1 : 0);
    return y;
}

void Standardizer::apply_in_place(Matrix& m) const {
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            m.at(i, j) = (m.at(i, j) - means[j]) / sds[j];
        }
    }
}

std::vector<double> Standardizer::transform_row(std::span<const double> row) const {
    std::vector<double> out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) out[j] = (row[j] - means[j]) / sds[j];
    return out;
}

Standardizer fit_standardizer(const Matrix& m, std::span<const std::string> names) {
    if (m.rows < 2) throw DegenerateError("standardization needs at least two rows");
    Standardizer s;
    s.means.resize(m.cols);
    s.sds.resize(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < m.rows; ++i) sum += m.at(i, j);
        double mean = sum / static_cast<double>(m.rows);
        double ss = 0.0;
        for (std::size_t i = 0; i < m.rows; ++i) {
            double d = m.at(i, j) - mean;
            ss += d * d;
        }
        double sd = std::sqrt(ss / static_cast<double>(m.rows - 1));
        if (!(sd > 0.0)) {
            std::string name = j < names.size() ? names[j] : ("column " + std::to_string(j));
            throw DegenerateError("zero-variance column cannot be standardized: " + name);
        }
        s.means[j] = mean;
        s.sds[j] = sd;
    }
    return s;
}

// ---- Student's t tail via the regularized incomplete beta ----------------

namespace {

// Continued fraction for I_x(a,b) (modified Lentz).
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 1e-15;
    constexpr double kTiny = 1e-300;

    double qab = a + b;
    double qap = a + 1.0;
    double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw Error("incomplete beta requires a, b > 0");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                   a * std::log(x) + b * std::log1p(-x);
    double bt = std::exp(ln_bt);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return bt * beta_cf(a, b, x) / a;
    }
    return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_sf(double t, double df) {
    if (!(df > 0.0)) throw Error("t distribution needs df > 0");
    double x = df / (df + t * t);
    double half_two_sided = 0.5 * regularized_incomplete_beta(df / 2.0, 0.5, x);
    return t >= 0.0 ? half_two_sided : 1.0 - half_two_sided;
}

// ---- Welch t and Cohen's d ------------------------------------------------

namespace {

struct SampleStats {
    double mean = 0.0;
    double var = 0.0;  // n-1 denominator
    std::size_t n = 0;
};

SampleStats sample_stats(std::span<const double> xs) {
    SampleStats s;
    s.n = xs.size();
    for (double v : xs) s.mean += v;
    s.mean /= static_cast<double>(s.n);
    for (double v : xs) {
        double d = v - s.mean;
        s.var += d * d;
    }
    s.var /= static_cast<double>(s.n - 1);
    return s;
}

}  // namespace

WelchResult welch_t(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2) {
        throw DegenerateError("Welch t-test needs at least two observations per sample");
    }
    auto sa = sample_stats(a);
    auto sb = sample_stats(b);
    double ga = sa.var / static_cast<double>(sa.n);
    double gb = sb.var / static_cast<double>(sb.n);
    WelchResult r;
    if (ga + gb == 0.0) {
        // both groups constant: either no difference at all, or a difference
        // with zero sampling noise
        r.df = static_cast<double>(sa.n + sb.n - 2);
        if (sa.mean == sb.mean) {
            r.t = 0.0;
            r.p = 1.0;
        } else {
            r.t = sa.mean > sb.mean ? std::numeric_limits<double>::infinity()
                                    : -std::numeric_limits<double>::infinity();
            r.p = 0.0;
        }
        return r;
    }
    r.t = (sa.mean - sb.mean) / std::sqrt(ga + gb);
    double denom = ga * ga / static_cast<double>(sa.n - 1) +
                   gb * gb / static_cast<double>(sb.n - 1);
    r.df = (ga + gb) * (ga + gb) / denom;
    r.p = 2.0 * student_t_sf(std::fabs(r.t), r.df);
    if (r.p > 1.0) r.p = 1.0;
    return r;
}

double cohens_d(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2) {
        throw DegenerateError("Cohen's d needs at least two observations per sample");
    }
    auto sa = sample_stats(a);
    auto sb = sample_stats(b);
    double na = static_cast<double>(sa.n);
    double nb = static_cast<double>(sb.n);
    double pooled = std::sqrt(((na - 1.0) * sa.var + (nb - 1.0) * sb.var) / (na + nb - 2.0));
    if (!(pooled > 0.0)) {
        if (sa.mean == sb.mean) return 0.0;  // identical constants
        throw DegenerateError("Cohen's d undefined: zero pooled standard deviation");
    }
    return (sa.mean - sb.mean) / pooled;
}

// ---- Univariate report ----------------------------------------------------

UnivariateReport univariate_report(const Dataset& ds) {
    Matrix m = feature_matrix(ds);
    auto y = label_vector(ds);
    std::size_t n_pos = static_cast<std::size_t>(std::count(y.begin(), y.end(), 1));
    std::size_t n_neg = y.size() - n_pos;
    if (n_pos < 2 || n_neg < 2) {
        throw DegenerateError("univariate analysis needs at least two rows per class");
    }
    std::vector<std::string> names(kFeatureNames.begin(), kFeatureNames.end());
    Standardizer std_ = fit_standardizer(m, names);
    std_.apply_in_place(m);

    UnivariateReport report;
    for (std::size_t j = 0; j < kFeatureCount; ++j) {
        std::vector<double> zc, zi;
        zc.reserve(n_pos);
        zi.reserve(n_neg);
        for (std::size_t i = 0; i < m.rows; ++i) {
            (y[i] ? zc : zi).push_back(m.at(i, j));
        }
        UnivariateRow row;
        row.feature = kFeatureNames[j];
        row.mean_z_correct = std::accumulate(zc.begin(), zc.end(), 0.0) / zc.size();
        row.mean_z_incorrect = std::accumulate(zi.begin(), zi.end(), 0.0) / zi.size();
        row.diff = row.mean_z_correct - row.mean_z_incorrect;
        auto w = welch_t(zc, zi);
        row.t_statistic = w.t;
        row.p_value = w.p;
        bool zc_const = std::all_of(zc.begin(), zc.end(), [&](double v) { return v == zc[0]; });
        bool zi_const = std::all_of(zi.begin(), zi.end(), [&](double v) { return v == zi[0]; });
        if (zc_const && zi_const) {
            // a feature that exactly mirrors the label (e.g. a binary flag
            // equal to correctness): unbounded effect, ranked first
            row.cohens_d = row.diff == 0.0
                               ? 0.0
                               : std::copysign(std::numeric_limits<double>::infinity(), row.diff);
        } else {
            row.cohens_d = cohens_d(zc, zi);
        }
        report.rows.push_back(std::move(row));
    }
    std::stable_sort(report.rows.begin(), report.rows.end(),
                     [](const UnivariateRow& a, const UnivariateRow& b) {
                         return std::fabs(a.cohens_d) > std::fabs(b.cohens_d);
                     });
    return report;
}

// ---- Logistic regression by IRLS/Newton -----------------------------------

namespace {

double sigmoid(double eta) {
    if (eta >= 0.0) {
        return 1.0 / (1.0 + std::exp(-eta));
    }
    double e = std::exp(eta);
    return e / (1.0 + e);
}

// log(1 + exp(eta)) without overflow
double log1pexp(double eta) {
    if (eta > 0.0) return eta + std::log1p(std::exp(-eta));
    return std::log1p(std::exp(eta));
}

// Cholesky solve of A x = b for symmetric positive definite A (in place).
// Returns false when a pivot is not positive.
bool cholesky_solve(Matrix& a, std::vector<double>& b) {
    std::size_t n = a.rows;
    for (std::size_t k = 0; k < n; ++k) {
        double pivot = a.at(k, k);
        for (std::size_t j = 0; j < k; ++j) pivot -= a.at(k, j) * a.at(k, j);
        if (!(pivot > 0.0) || !std::isfinite(pivot)) return false;
        pivot = std::sqrt(pivot);
        a.at(k, k) = pivot;
        for (std::size_t i = k + 1; i < n; ++i) {
            double v = a.at(i, k);
            for (std::size_t j = 0; j < k; ++j) v -= a.at(i, j) * a.at(k, j);
            a.at(i, k) = v / pivot;
        }
    }
    // forward: L z = b
    for (std::size_t i = 0; i < n; ++i) {
        double v = b[i];
        for (std::size_t j = 0; j < i; ++j) v -= a.at(i, j) * b[j];
        b[i] = v / a.at(i, i);
    }
    // backward: L^T x = z
    for (std::size_t ii = n; ii-- > 0;) {
        double v = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) v -= a.at(j, ii) * b[j];
        b[ii] = v / a.at(ii, ii);
    }
    return true;
}

// eta = beta0 + X row . beta[1..]
double linear_predictor(const Matrix& x, std::size_t row, std::span<const double> beta) {
    double eta = beta[0];
    for (std::size_t j = 0; j < x.cols; ++j) eta += x.at(row, j) * beta[j + 1];
    return eta;
}

constexpr double kSeparationBetaThreshold = 15.0;

}  // namespace

double logistic_log_likelihood(const Matrix& x, const std::vector<int>& y,
                               std::span<const double> beta) {
    double ll = 0.0;
    for (std::size_t i = 0; i < x.rows; ++i) {
        double eta = linear_predictor(x, i, beta);
        ll += y[i] * eta - log1pexp(eta);
    }
    return ll;
}

std::vector<double> logistic_gradient(const Matrix& x, const std::vector<int>& y,
                                      std::span<const double> beta) {
    std::vector<double> g(x.cols + 1, 0.0);
    for (std::size_t i = 0; i < x.rows; ++i) {
        double resid = y[i] - sigmoid(linear_predictor(x, i, beta));
        g[0] += resid;
        for (std::size_t j = 0; j < x.cols; ++j) g[j + 1] += resid * x.at(i, j);
    }
    return g;
}

std::vector<double> logistic_predict(const Matrix& x, std::span<const double> beta) {
    std::vector<double> p(x.rows);
    for (std::size_t i = 0; i < x.rows; ++i) p[i] = sigmoid(linear_predictor(x, i, beta));
    return p;
}

LogisticFit fit_logistic_raw(const Matrix& x, const std::vector<int>& y,
                             const LogisticFitOptions& options) {
    if (x.rows != y.size()) throw Error("design/label size mismatch");
    if (x.rows == 0) throw DegenerateError("cannot fit on an empty dataset");

    std::size_t p = x.cols + 1;  // intercept + predictors
    LogisticFit fit;
    fit.beta.assign(p, 0.0);
    double ll = logistic_log_likelihood(x, y, fit.beta);
    bool ridge_enabled = false;

    for (int iter = 1; iter <= options.max_iterations; ++iter) {
        fit.iterations = iter;
        auto g = logistic_gradient(x, y, fit.beta);

        // Hessian of -ll: Z^T W Z with w_i = mu_i (1 - mu_i)
        Matrix h(p, p);
        for (std::size_t i = 0; i < x.rows; ++i) {
            double mu = sigmoid(linear_predictor(x, i, fit.beta));
            double w = mu * (1.0 - mu);
            // z_i = [1, x_i...]
            for (std::size_t a = 0; a < p; ++a) {
                double za = a == 0 ? 1.0 : x.at(i, a - 1);
                for (std::size_t b = a; b < p; ++b) {
                    double zb = b == 0 ? 1.0 : x.at(i, b - 1);
                    h.at(a, b) += w * za * zb;
                }
            }
        }
        for (std::size_t a = 0; a < p; ++a) {
            for (std::size_t b = 0; b < a; ++b) h.at(a, b) = h.at(b, a);
        }
        if (ridge_enabled) {
            for (std::size_t a = 0; a < p; ++a) h.at(a, a) += options.ridge_jitter;
        }

        std::vector<double> delta = g;
        Matrix h_copy = h;
        if (!cholesky_solve(h_copy, delta)) {
            if (!ridge_enabled) {
                ridge_enabled = true;
                fit.ridge_applied = true;
                for (std::size_t a = 0; a < p; ++a) h.at(a, a) += options.ridge_jitter;
                delta = g;
                if (!cholesky_solve(h, delta)) {
                    throw DegenerateError(
                        "singular weighted normal matrix (even after ridge jitter)");
                }
            } else {
                throw DegenerateError(
                    "singular weighted normal matrix (even after ridge jitter)");
            }
        }

        // Newton step with halving whenever the log-likelihood would drop.
        std::vector<double> candidate(p);
        double step = 1.0;
        double new_ll = -std::numeric_limits<double>::infinity();
        for (int halving = 0; halving < 40; ++halving) {
            for (std::size_t a = 0; a < p; ++a) candidate[a] = fit.beta[a] + step * delta[a];
            new_ll = logistic_log_likelihood(x, y, candidate);
            if (new_ll >= ll - 1e-12 || !std::isfinite(ll)) break;
            step *= 0.5;
        }
        fit.beta = candidate;

        double grad_max = 0.0;
        for (double v : logistic_gradient(x, y, fit.beta)) {
            grad_max = std::max(grad_max, std::fabs(v));
        }
        double ll_change = std::fabs(new_ll - ll);
        ll = new_ll;
        if (grad_max <= options.gradient_tolerance || ll_change <= options.ll_tolerance) {
            fit.converged = true;
            break;
        }
    }

    fit.log_likelihood = ll;
    for (double b : fit.beta) {
        if (std::fabs(b) > kSeparationBetaThreshold) fit.separation_suspected = true;
    }
    if (!fit.converged) fit.separation_suspected = true;
    return fit;
}

LogisticModel fit_logistic(const Dataset& ds) {
    Matrix x = feature_matrix(ds);
    auto y = label_vector(ds);
    std::size_t n_pos = static_cast<std::size_t>(std::count(y.begin(), y.end(), 1));
    if (n_pos == 0 || n_pos == y.size()) {
        throw DegenerateError("logistic regression needs both classes present");
    }

    std::vector<std::string> names(kFeatureNames.begin(), kFeatureNames.end());
    LogisticModel model;
    model.feature_names = names;
    model.ontology = ontology_kind_name(ds.ontology);
    model.model_name = ds.model_name;
    model.standardizer = fit_standardizer(x, names);
    model.standardizer.apply_in_place(x);

    LogisticFit fit = fit_logistic_raw(x, y);
    model.intercept = fit.beta[0];
    model.coefficients.assign(fit.beta.begin() + 1, fit.beta.end());
    model.log_likelihood = fit.log_likelihood;
    model.converged = fit.converged;
    model.iterations = fit.iterations;
    model.separation_suspected = fit.separation_suspected;

    // Null model: the same routine on a zero-predictor design, so a model
    // that itself has no usable predictors reproduces this value bitwise.
    Matrix empty(x.rows, 0);
    LogisticFit null_fit = fit_logistic_raw(empty, y);
    model.null_log_likelihood = null_fit.log_likelihood;
    return model;
}

std::vector<double> predict_probabilities(const LogisticModel& model, const Dataset& ds) {
    std::vector<double> out;
    out.reserve(ds.rows.size());
    for (const auto& row : ds.rows) {
        auto raw = feature_values(row.features);
        auto z = model.standardizer.transform_row(raw);
        double eta = model.intercept;
        for (std::size_t j = 0; j < z.size(); ++j) eta += model.coefficients[j] * z[j];
        out.push_back(sigmoid(eta));
    }
    return out;
}

// ---- Metrics ----------------------------------------------------------------

double auc_rank(std::span<const double> scores, std::span<const int> labels) {
    if (scores.size() != labels.size()) throw Error("score/label size mismatch");
    std::size_t n = scores.size();
    std::size_t n_pos = 0;
    for (int l : labels) n_pos += (l != 0);
    std::size_t n_neg = n - n_pos;
    if (n_pos == 0 || n_neg == 0) {
        throw DegenerateError("AUC undefined with a single class");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // doubled average ranks keep everything in exact integer arithmetic
    std::vector<std::uint64_t> rank2(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
        std::uint64_t r2 = static_cast<std::uint64_t>(i + j + 2);  // (i+1)+(j+1)
        for (std::size_t k = i; k <= j; ++k) rank2[order[k]] = r2;
        i = j + 1;
    }
    std::uint64_t sum_rank2_pos = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (labels[k] != 0) sum_rank2_pos += rank2[k];
    }
    std::uint64_t u2 = sum_rank2_pos - static_cast<std::uint64_t>(n_pos) * (n_pos + 1);
    return static_cast<double>(u2) /
           (2.0 * static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

MetricsReport metrics(const LogisticModel& model, const Dataset& ds) {
    auto probs = predict_probabilities(model, ds);
    auto y = label_vector(ds);

    std::size_t tp = 0, tn = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        bool pred = probs[i] >= 0.5;
        if (pred && y[i]) ++tp;
        else if (pred && !y[i]) ++fp;
        else if (!pred && y[i]) ++fn;
        else ++tn;
    }

    MetricsReport r;
    std::size_t n = probs.size();
    r.accuracy = n ? static_cast<double>(tp + tn) / n : 0.0;
    if (tp + fp == 0) {
        r.precision = 0.0;
        r.no_positive_predictions = true;
    } else {
        r.precision = static_cast<double>(tp) / (tp + fp);
    }
    r.recall = (tp + fn) ? static_cast<double>(tp) / (tp + fn) : 0.0;
    r.f1 = (r.precision + r.recall) > 0.0
               ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
               : 0.0;
    r.auc = auc_rank(probs, y);
    r.mcfadden_r2 = 1.0 - model.log_likelihood / model.null_log_likelihood;

    double sum_pos = 0.0, sum_neg = 0.0;
    std::size_t n_pos = 0, n_neg = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (y[i]) {
            sum_pos += probs[i];
            ++n_pos;
        } else {
            sum_neg += probs[i];
            ++n_neg;
        }
    }
    r.tjur_r2 = sum_pos / n_pos - sum_neg / n_neg;
    return r;
}

// ---- Persistence ------------------------------------------------------------

void write_univariate_csv(const UnivariateReport& report, const std::string& ontology,
                          const std::string& model_name, const std::filesystem::path& path) {
    std::string out =
        "ontology,model_name,feature,mean_z_correct,mean_z_incorrect,diff,t,p,cohens_d\n";
    for (const auto& r : report.rows) {
        out += csv_field(ontology) + "," + csv_field(model_name) + "," + r.feature;
        out += "," + format_double(r.mean_z_correct, 10);
        out += "," + format_double(r.mean_z_incorrect, 10);
        out += "," + format_double(r.diff, 10);
        out += "," + format_double(r.t_statistic, 10);
        out += "," + format_double(r.p_value, 10);
        out += "," + format_double(r.cohens_d, 10);
        out += "\n";
    }
    write_file(path, out);
}

void write_coefficients_csv(const LogisticModel& model, const std::filesystem::path& path) {
    std::string out = "ontology,model_name,term,coefficient\n";
    out += csv_field(model.ontology) + "," + csv_field(model.model_name) + ",_intercept," +
           format_double(model.intercept, 10) + "\n";
    std::vector<std::size_t> order(model.coefficients.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::fabs(model.coefficients[a]) > std::fabs(model.coefficients[b]);
    });
    for (std::size_t j : order) {
        out += csv_field(model.ontology) + "," + csv_field(model.model_name) + ",";
        out += model.feature_names[j];
        out += "," + format_double(model.coefficients[j], 10) + "\n";
    }
    write_file(path, out);
}

void write_metrics_csv(const MetricsReport& report, const std::string& ontology,
                       const std::string& model_name, const std::filesystem::path& path) {
    std::string out =
        "ontology,model_name,accuracy,precision,recall,f1,auc,mcfadden_r2,tjur_r2,"
        "no_positive_predictions\n";
    out += csv_field(ontology) + "," + csv_field(model_name);
    out += "," + format_double(report.accuracy, 10);
    out += "," + format_double(report.precision, 10);
    out += "," + format_double(report.recall, 10);
    out += "," + format_double(report.f1, 10);
    out += "," + format_double(report.auc, 10);
    out += "," + format_double(report.mcfadden_r2, 10);
    out += "," + format_double(report.tjur_r2, 10);
    out += report.no_positive_predictions ? ",1\n" : ",0\n";
    write_file(path, out);
}

void save_model_json(const LogisticModel& model, const std::filesystem::path& path) {
    json j{{"ontology", model.ontology},
           {"model_name", model.model_name},
           {"feature_names", model.feature_names},
           {"means", model.standardizer.means},
           {"sds", model.standardizer.sds},
           {"intercept", model.intercept},
           {"coefficients", model.coefficients},
           {"log_likelihood", model.log_likelihood},
           {"null_log_likelihood", model.null_log_likelihood},
           {"converged", model.converged},
           {"iterations", model.iterations},
           {"separation_suspected", model.separation_suspected}};
    write_file(path, j.dump(2) + "\n");
}

LogisticModel load_model_json(const std::filesystem::path& path) {
    json j = json::parse(read_file(path), nullptr, false);
    if (j.is_discarded()) throw ParseError("model JSON is not valid JSON: " + path.string());
    LogisticModel m;
    try {
        m.ontology = j.at("ontology").get<std::string>();
        m.model_name = j.at("model_name").get<std::string>();
        m.feature_names = j.at("feature_names").get<std::vector<std::string>>();
        m.standardizer.means = j.at("means").get<std::vector<double>>();
        m.standardizer.sds = j.at("sds").get<std::vector<double>>();
        m.intercept = j.at("intercept").get<double>();
        m.coefficients = j.at("coefficients").get<std::vector<double>>();
        m.log_likelihood = j.at("log_likelihood").get<double>();
        m.null_log_likelihood = j.at("null_log_likelihood").get<double>();
        m.converged = j.at("converged").get<bool>();
        m.iterations = j.at("iterations").get<int>();
        m.separation_suspected = j.at("separation_suspected").get<bool>();
    } catch (const json::exception& e) {
        throw ParseError("model JSON missing fields: " + std::string(e.what()));
    }
    return m;
}

}  // namespace ontolink
