#include "confsel/sem.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "confsel/errors.hpp"

namespace confsel {

LinearSem::LinearSem(Dag dag, std::map<std::pair<std::string, std::string>, double> coef,
                     std::map<std::string, double> noise_var)
    : dag_(std::move(dag)), coef_(std::move(coef)), noise_var_(std::move(noise_var)) {
    if (coef_.size() != dag_.edges().size()) {
        throw std::invalid_argument("coefficients must be keyed exactly by the graph's edges");
    }
    for (const auto& edge : dag_.edges()) {
        if (!coef_.count(edge)) {
            throw std::invalid_argument("missing coefficient for edge " + edge.first + " -> " +
                                        edge.second);
        }
    }
    for (const auto& name : dag_.vertices()) {
        const auto it = noise_var_.find(name);
        if (it == noise_var_.end()) {
            throw std::invalid_argument("missing noise variance for vertex " + name);
        }
        if (!(it->second > 0.0)) {
            throw std::invalid_argument("noise variance must be positive for vertex " + name);
        }
    }
    if (noise_var_.size() != static_cast<std::size_t>(dag_.vertex_count())) {
        throw std::invalid_argument("noise variance given for a vertex not in the graph");
    }
    id_ = dag_.treatment() + "->" + dag_.outcome() + ":" + std::to_string(dag_.vertex_count()) +
          "v" + std::to_string(dag_.edges().size()) + "e";
}

LinearSem LinearSem::from_parsed(const ParsedGraph& parsed) {
    for (const auto& edge : parsed.dag.edges()) {
        if (!parsed.coef.count(edge)) {
            throw GraphParseError("missing coef line for edge " + edge.first + " -> " +
                                  edge.second);
        }
    }
    for (const auto& name : parsed.dag.vertices()) {
        if (!parsed.noise.count(name)) {
            throw GraphParseError("missing noise line for vertex " + name);
        }
    }
    return LinearSem(parsed.dag, parsed.coef, parsed.noise);
}

double LinearSem::coef(const std::string& src, const std::string& dst) const {
    const auto it = coef_.find({src, dst});
    if (it == coef_.end()) {
        throw std::invalid_argument("no such edge: " + src + " -> " + dst);
    }
    return it->second;
}

double LinearSem::noise_var(const std::string& vertex) const {
    const auto it = noise_var_.find(vertex);
    if (it == noise_var_.end()) throw UnknownVertexError(vertex);
    return it->second;
}

LinearSem LinearSem::with_binary_treatment() const {
    LinearSem copy = *this;
    copy.binary_treatment_ = true;
    return copy;
}

int CovarianceMatrix::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) return static_cast<int>(i);
    }
    throw UnknownVertexError(label);
}

double CovarianceMatrix::operator()(const std::string& a, const std::string& b) const {
    return values(index_of(a), index_of(b));
}

CovarianceMatrix exact_covariance(const LinearSem& m) {
    const Dag& g = m.dag();
    const int n = g.vertex_count();
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [src, dst] : g.edges()) {
        b(g.index_of(src), g.index_of(dst)) = m.coef(src, dst);
    }
    Eigen::VectorXd omega(n);
    for (int i = 0; i < n; ++i) omega(i) = m.noise_var(g.name_of(i));

    // x = (I - B^T)^-1 eps, so Sigma = M Omega M^T with M the inverse.
    const Eigen::MatrixXd map =
        (Eigen::MatrixXd::Identity(n, n) - b.transpose()).partialPivLu().inverse();
    CovarianceMatrix sigma;
    sigma.labels = g.vertices().names();
    sigma.values = map * omega.asDiagonal() * map.transpose();
    return sigma;
}

double partial_correlation(const CovarianceMatrix& sigma, const std::string& x,
                           const std::string& y, const VertexSet& given) {
    if (x == y) throw std::invalid_argument("partial correlation needs distinct variables");
    if (given.contains(x) || given.contains(y)) {
        throw std::invalid_argument("conditioning set may not contain the tested variables");
    }
    std::vector<int> idx{sigma.index_of(x), sigma.index_of(y)};
    for (const auto& name : given) idx.push_back(sigma.index_of(name));

    const int k = static_cast<int>(idx.size());
    Eigen::MatrixXd sub(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) sub(i, j) = sigma.values(idx[i], idx[j]);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(sub);
    if (!lu.isInvertible()) {
        throw std::invalid_argument("singular covariance submatrix in partial correlation");
    }
    const Eigen::MatrixXd precision = lu.inverse();
    const double r = -precision(0, 1) / std::sqrt(precision(0, 0) * precision(1, 1));
    return std::clamp(r, -1.0, 1.0);
}

double GaussianSampler::operator()() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // 53-bit uniforms; u1 shifted into (0, 1] so the log is finite.
    const double u1 = 1.0 - static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Dataset::Dataset(std::vector<std::string> columns, std::vector<double> row_major_values,
                 DatasetProvenance provenance)
    : columns_(std::move(columns)), values_(std::move(row_major_values)),
      provenance_(std::move(provenance)) {
    if (columns_.empty()) throw std::invalid_argument("dataset needs at least one column");
    if (values_.size() % columns_.size() != 0) {
        throw std::invalid_argument("dataset values are not rectangular");
    }
    rows_ = values_.size() / columns_.size();
}

int Dataset::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i] == name) return static_cast<int>(i);
    }
    throw UnknownVertexError(name);
}

bool Dataset::has_column(const std::string& name) const {
    for (const auto& c : columns_) {
        if (c == name) return true;
    }
    return false;
}

Eigen::VectorXd Dataset::column(const std::string& name) const {
    const int c = column_index(name);
    Eigen::VectorXd out(static_cast<Eigen::Index>(rows_));
    for (std::size_t r = 0; r < rows_; ++r) out(static_cast<Eigen::Index>(r)) = value(r, c);
    return out;
}

CovarianceMatrix Dataset::sample_covariance() const {
    const std::size_t k = columns_.size();
    if (rows_ < 2) throw std::invalid_argument("sample covariance needs at least two rows");
    Eigen::MatrixXd data(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(k));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            data(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                value(r, static_cast<int>(c));
        }
    }
    const Eigen::RowVectorXd mean = data.colwise().mean();
    data.rowwise() -= mean;
    CovarianceMatrix sigma;
    sigma.labels = columns_;
    sigma.values = (data.transpose() * data) / static_cast<double>(rows_ - 1);
    return sigma;
}

void Dataset::write_csv(std::ostream& out) const {
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (c > 0) out << ',';
        out << columns_[c];
    }
    out << '\n';
    out << std::setprecision(17);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            if (c > 0) out << ',';
            out << value(r, static_cast<int>(c));
        }
        out << '\n';
    }
}

Dataset Dataset::read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty dataset file");
    std::vector<std::string> columns;
    {
        std::istringstream header(line);
        std::string token;
        while (std::getline(header, token, ',')) {
            if (token.empty()) throw std::invalid_argument("empty column name in CSV header");
            columns.push_back(token);
        }
    }
    std::vector<double> values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string token;
        std::size_t count = 0;
        while (std::getline(row, token, ',')) {
            try {
                std::size_t consumed = 0;
                values.push_back(std::stod(token, &consumed));
                if (consumed != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": expected a number, got '" + token + "'");
            }
            ++count;
        }
        if (count != columns.size()) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                        std::to_string(columns.size()) + " fields, got " +
                                        std::to_string(count));
        }
    }
    return Dataset(std::move(columns), std::move(values));
}

Dataset Dataset::read_csv_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) throw std::invalid_argument("cannot open dataset file: " + path);
    return read_csv(stream);
}

namespace {

// Generates one row per call into `row` (indexed by vertex), drawing noises
// in topological order. If `forced_treatment` is non-negative the treatment
// is clamped to that value after its noise draw, keeping the stream aligned
// with the factual pass.
class RowGenerator {
public:
    RowGenerator(const LinearSem& m) : model_(m), g_(m.dag()) {
        for (int v : g_.topological_order()) {
            scales_.push_back(std::sqrt(model_.noise_var(g_.name_of(v))));
            std::vector<std::pair<int, double>> terms;
            for (int p : g_.parents_of(v)) {
                terms.emplace_back(p, model_.coef(g_.name_of(p), g_.name_of(v)));
            }
            parent_terms_.push_back(std::move(terms));
        }
    }

    void generate(const std::vector<double>& noises, double forced_treatment,
                  std::vector<double>& row) const {
        const auto& order = g_.topological_order();
        for (std::size_t k = 0; k < order.size(); ++k) {
            const int v = order[k];
            double value = noises[k] * scales_[k];
            for (const auto& [p, c] : parent_terms_[k]) {
                value += c * row[static_cast<std::size_t>(p)];
            }
            if (v == g_.treatment_index()) {
                if (forced_treatment >= 0.0) {
                    value = forced_treatment;
                } else if (model_.binary_treatment()) {
                    value = value > 0.0 ? 1.0 : 0.0;
                }
            }
            row[static_cast<std::size_t>(v)] = value;
        }
    }

private:
    const LinearSem& model_;
    const Dag& g_;
    std::vector<double> scales_;
    std::vector<std::vector<std::pair<int, double>>> parent_terms_;
};

}  // namespace

Dataset sample(const LinearSem& m, std::size_t n, std::uint64_t seed, bool include_latent) {
    if (n < 1) throw std::invalid_argument("sample size must be at least 1");
    const Dag& g = m.dag();
    const RowGenerator generator(m);
    GaussianSampler normal(seed);

    std::vector<int> emit;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (include_latent || !g.is_latent(v)) emit.push_back(v);
    }
    std::vector<std::string> columns;
    for (int v : emit) columns.push_back(g.name_of(v));

    std::vector<double> values;
    values.reserve(n * emit.size());
    std::vector<double> noises(static_cast<std::size_t>(g.vertex_count()));
    std::vector<double> row(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t r = 0; r < n; ++r) {
        for (auto& z : noises) z = normal();
        generator.generate(noises, -1.0, row);
        for (int v : emit) values.push_back(row[static_cast<std::size_t>(v)]);
    }
    return Dataset(std::move(columns), std::move(values), DatasetProvenance{seed, m.id()});
}

CounterfactualSample sample_counterfactual(const LinearSem& m, std::size_t n, std::uint64_t seed) {
    if (!m.binary_treatment()) {
        throw std::invalid_argument(
            "counterfactual sampling needs the binary treatment mechanism enabled");
    }
    if (n < 1) throw std::invalid_argument("sample size must be at least 1");
    const Dag& g = m.dag();
    const RowGenerator generator(m);
    GaussianSampler normal(seed);

    std::vector<int> covariate_idx;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v != g.treatment_index() && v != g.outcome_index() && !g.is_latent(v)) {
            covariate_idx.push_back(v);
        }
    }

    CounterfactualSample out;
    for (int v : covariate_idx) out.covariate_columns.push_back(g.name_of(v));
    out.a_factual.reserve(n);
    out.y_factual.reserve(n);
    out.y0.reserve(n);
    out.y1.reserve(n);
    out.covariates.reserve(n * covariate_idx.size());

    const std::size_t yi = static_cast<std::size_t>(g.outcome_index());
    const std::size_t ai = static_cast<std::size_t>(g.treatment_index());
    std::vector<double> noises(static_cast<std::size_t>(g.vertex_count()));
    std::vector<double> factual(noises.size()), row0(noises.size()), row1(noises.size());
    for (std::size_t r = 0; r < n; ++r) {
        for (auto& z : noises) z = normal();
        generator.generate(noises, -1.0, factual);
        generator.generate(noises, 0.0, row0);
        generator.generate(noises, 1.0, row1);
        out.a_factual.push_back(factual[ai]);
        out.y_factual.push_back(factual[yi]);
        out.y0.push_back(row0[yi]);
        out.y1.push_back(row1[yi]);
        for (int v : covariate_idx) out.covariates.push_back(factual[static_cast<std::size_t>(v)]);
    }
    return out;
}

namespace {

FisherZResult fisher_z_from_covariance(const CovarianceMatrix& sigma, std::size_t n,
                                       const std::string& x, const std::string& y,
                                       const VertexSet& given, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0, 1)");
    if (n <= given.size() + 3) {
        throw std::invalid_argument("insufficient sample size for Fisher-z: need n > |given| + 3");
    }
    for (const auto& name : VertexSet{x, y} | given) {
        if (!(sigma.values(sigma.index_of(name), sigma.index_of(name)) > 0.0)) {
            throw std::invalid_argument("constant column: " + name);
        }
    }
    FisherZResult result;
    result.r = partial_correlation(sigma, x, y, given);
    const double df = static_cast<double>(n - given.size() - 3);
    result.statistic = std::abs(std::atanh(result.r)) * std::sqrt(df);
    // Two-sided p-value; independence iff statistic is below the normal
    // quantile at 1 - alpha/2, equivalently p >= alpha.
    result.p_value = std::erfc(result.statistic / std::numbers::sqrt2);
    result.independent = result.p_value >= alpha;
    return result;
}

}  // namespace

FisherZResult fisher_z_test(const Dataset& d, const std::string& x, const std::string& y,
                            const VertexSet& given, double alpha) {
    std::vector<std::string> needed{x, y};
    for (const auto& name : given) needed.push_back(name);
    for (const auto& name : needed) (void)d.column_index(name);
    return fisher_z_from_covariance(d.sample_covariance(), d.n_rows(), x, y, given, alpha);
}

GaussianOracle::GaussianOracle(const LinearSem& m, double tol)
    : CiOracle(m.dag().treatment(), m.dag().outcome()), sigma_(exact_covariance(m)), tol_(tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

bool GaussianOracle::query_impl(const VertexSet& xs, const VertexSet& ys,
                                const VertexSet& given) const {
    for (const auto& x : xs) {
        for (const auto& y : ys) {
            if (std::abs(partial_correlation(sigma_, x, y, given)) >= tol_) return false;
        }
    }
    return true;
}

FisherZOracle::FisherZOracle(const Dataset& d, std::string treatment, std::string outcome,
                             double alpha)
    : CiOracle(std::move(treatment), std::move(outcome)), sigma_(d.sample_covariance()),
      n_(d.n_rows()), alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0, 1)");
    (void)sigma_.index_of(this->treatment());
    (void)sigma_.index_of(this->outcome());
}

bool FisherZOracle::query_impl(const VertexSet& xs, const VertexSet& ys,
                               const VertexSet& given) const {
    for (const auto& x : xs) {
        for (const auto& y : ys) {
            if (!fisher_z_from_covariance(sigma_, n_, x, y, given, alpha_).independent) {
                return false;
            }
        }
    }
    return true;
}

double ate_standardization(const Dataset& d, const std::string& treatment,
                           const std::string& outcome, const VertexSet& adjust) {
    if (adjust.contains(treatment) || adjust.contains(outcome)) {
        throw std::invalid_argument("adjustment set may not contain treatment or outcome");
    }
    const std::size_t n = d.n_rows();
    const std::size_t k = adjust.size() + 2;  // intercept + treatment + adjusters
    if (n <= k) throw std::invalid_argument("not enough rows to fit the outcome regression");

    Eigen::MatrixXd design(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
    design.col(0).setOnes();
    design.col(1) = d.column(treatment);
    Eigen::Index col = 2;
    for (const auto& name : adjust) design.col(col++) = d.column(name);
    const Eigen::VectorXd response = d.column(outcome);

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < static_cast<Eigen::Index>(k)) {
        throw std::invalid_argument("collinear design in outcome regression");
    }
    const Eigen::VectorXd beta = qr.solve(response);
    return beta(1);
}

}  // namespace confsel
