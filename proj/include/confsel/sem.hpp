#ifndef CONFSEL_SEM_HPP
#define CONFSEL_SEM_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "confsel/ci_oracle.hpp"
#include "confsel/dag.hpp"
#include "confsel/graph_io.hpp"

namespace confsel {

/// A linear-Gaussian structural equation model over a causal DAG: every
/// vertex is the coefficient-weighted sum of its parents plus independent
/// Gaussian noise. Coefficients are keyed exactly by the graph's edges and
/// all noise variances are strictly positive, so the joint density is
/// everywhere positive.
///
/// When the binary-treatment mechanism is enabled, the treatment value is
/// thresholded at zero (indicator of linear index + noise > 0) and
/// downstream equations stay linear in the resulting 0/1 value.
class LinearSem {
public:
    LinearSem(Dag dag, std::map<std::pair<std::string, std::string>, double> coef,
              std::map<std::string, double> noise_var);

    /// Builds from a parsed .cg file; every edge needs a coef line and every
    /// vertex a noise line, otherwise a GraphParseError is raised.
    static LinearSem from_parsed(const ParsedGraph& parsed);

    const Dag& dag() const { return dag_; }
    double coef(const std::string& src, const std::string& dst) const;
    double noise_var(const std::string& vertex) const;

    LinearSem with_binary_treatment() const;
    bool binary_treatment() const { return binary_treatment_; }

    /// Short structural tag recorded in dataset provenance.
    const std::string& id() const { return id_; }

private:
    Dag dag_;
    std::map<std::pair<std::string, std::string>, double> coef_;
    std::map<std::string, double> noise_var_;
    bool binary_treatment_ = false;
    std::string id_;
};

/// A covariance (or sample covariance) matrix with row/column labels in
/// canonical vertex order.
struct CovarianceMatrix {
    std::vector<std::string> labels;
    Eigen::MatrixXd values;

    int index_of(const std::string& label) const;  // throws UnknownVertexError
    double operator()(const std::string& a, const std::string& b) const;
};

/// Exact covariance of the SEM via path algebra: with B the edge-coefficient
/// matrix and Omega the diagonal of noise variances, the covariance is
/// (I - B)^-T Omega (I - B)^-1. Symmetric positive definite.
CovarianceMatrix exact_covariance(const LinearSem& m);

/// Gaussian partial correlation of x and y given a set, from the inverse of
/// the covariance submatrix over {x, y} ∪ given. Always in [-1, 1].
double partial_correlation(const CovarianceMatrix& sigma, const std::string& x,
                           const std::string& y, const VertexSet& given);

/// Deterministic standard-normal stream: 53-bit uniform doubles from
/// mt19937_64 fed through the Box-Muller transform. The stream is fixed by
/// this definition, so datasets are reproducible per seed.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}
    double operator()();

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

struct DatasetProvenance {
    std::uint64_t seed = 0;
    std::string sem_id;
};

/// A rectangular table of named real columns with no missing values.
class Dataset {
public:
    Dataset() = default;
    Dataset(std::vector<std::string> columns, std::vector<double> row_major_values,
            DatasetProvenance provenance = {});

    std::size_t n_rows() const { return rows_; }
    const std::vector<std::string>& columns() const { return columns_; }
    int column_index(const std::string& name) const;  // throws UnknownVertexError
    bool has_column(const std::string& name) const;
    double value(std::size_t row, int column) const {
        return values_[row * columns_.size() + static_cast<std::size_t>(column)];
    }
    const DatasetProvenance& provenance() const { return provenance_; }

    Eigen::VectorXd column(const std::string& name) const;

    /// Sample covariance (n-1 denominator) over all columns.
    CovarianceMatrix sample_covariance() const;

    /// CSV with a header row, comma delimiter, '.' decimal separator and no
    /// index column.
    void write_csv(std::ostream& out) const;
    static Dataset read_csv(std::istream& in);
    static Dataset read_csv_file(const std::string& path);

private:
    std::vector<std::string> columns_;
    std::vector<double> values_;  // row-major
    std::size_t rows_ = 0;
    DatasetProvenance provenance_;
};

/// Draws n i.i.d. rows in topological order. Latent columns are excluded
/// unless `include_latent` is set. Deterministic per (seed, n, model).
Dataset sample(const LinearSem& m, std::size_t n, std::uint64_t seed, bool include_latent = false);

/// One shared noise draw per row: the factual treatment from its (binary)
/// mechanism, plus both potential outcomes generated by forcing the
/// treatment to 0 and to 1 with the same noises. Row-wise, the factual
/// outcome equals the potential outcome picked by the factual treatment.
struct CounterfactualSample {
    std::vector<std::string> covariate_columns;  // observed, factual values
    std::vector<double> a_factual;
    std::vector<double> y_factual;
    std::vector<double> y0;
    std::vector<double> y1;
    std::vector<double> covariates;  // row-major

    std::size_t n_rows() const { return a_factual.size(); }
    double covariate(std::size_t row, std::size_t column) const {
        return covariates[row * covariate_columns.size() + column];
    }
};

CounterfactualSample sample_counterfactual(const LinearSem& m, std::size_t n, std::uint64_t seed);

struct FisherZResult {
    bool independent = false;
    double r = 0.0;          // sample partial correlation
    double statistic = 0.0;  // |atanh(r)| * sqrt(n - |given| - 3)
    double p_value = 1.0;
};

/// Fisher-z conditional independence test at level alpha; requires
/// n > |given| + 3 and non-constant columns.
FisherZResult fisher_z_test(const Dataset& d, const std::string& x, const std::string& y,
                            const VertexSet& given, double alpha);

/// Oracle over the exact covariance: independent iff the magnitude of every
/// pairwise partial correlation is below tol. For generic coefficients this
/// matches d-separation in the SEM's graph.
class GaussianOracle final : public CiOracle {
public:
    explicit GaussianOracle(const LinearSem& m, double tol = 1e-9);

protected:
    bool query_impl(const VertexSet& xs, const VertexSet& ys,
                    const VertexSet& given) const override;

private:
    CovarianceMatrix sigma_;
    double tol_;
};

/// Oracle running Fisher-z tests against a dataset's sample covariance
/// (precomputed once). Deterministic for a fixed dataset and alpha.
class FisherZOracle final : public CiOracle {
public:
    FisherZOracle(const Dataset& d, std::string treatment, std::string outcome, double alpha);

    double alpha() const { return alpha_; }

protected:
    bool query_impl(const VertexSet& xs, const VertexSet& ys,
                    const VertexSet& given) const override;

private:
    CovarianceMatrix sigma_;
    std::size_t n_;
    double alpha_;
};

/// Plug-in effect estimate under the back-door formula, specialized to the
/// linear model: the treatment coefficient from regressing the outcome on
/// the treatment and the adjustment set (with intercept).
double ate_standardization(const Dataset& d, const std::string& treatment,
                           const std::string& outcome, const VertexSet& adjust);

}  // namespace confsel

#endif
