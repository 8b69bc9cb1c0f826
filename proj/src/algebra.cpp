#include "ncfusion/algebra.hpp"

#include "ncfusion/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ncfusion {

namespace {

bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-300});
}

} // namespace

MultiMatrixAlgebra::MultiMatrixAlgebra(std::vector<MatrixBlock> blocks, double tolerance)
    : blocks_(std::move(blocks)), tolerance_(tolerance) {
    if (blocks_.empty())
        throw ValidationError("algebra needs at least one block");
    double mass = 0.0;
    for (const auto &b : blocks_) {
        if (b.size < 1)
            throw ValidationError("block size must be >= 1");
        if (b.q.size() != static_cast<std::size_t>(b.size))
            throw ValidationError("block of size " + std::to_string(b.size) + " needs " +
                                  std::to_string(b.size) + " weights, got " +
                                  std::to_string(b.q.size()));
        for (double w : b.q) {
            if (!(w > 0.0) || !std::isfinite(w))
                throw ValidationError("weights must be finite and strictly positive");
            mass += w;
        }
        offsets_.push_back(dim_);
        dim_ += b.size * b.size;
    }
    if (std::abs(mass - 1.0) > tolerance_)
        throw ValidationError("weights sum to " + std::to_string(mass) + ", not 1");
}

MultiMatrixAlgebra MultiMatrixAlgebra::commutative_uniform(int n) {
    if (n < 1)
        throw ValidationError("C^n needs n >= 1");
    std::vector<MatrixBlock> blocks(static_cast<std::size_t>(n), MatrixBlock{1, {1.0 / n}});
    return MultiMatrixAlgebra(std::move(blocks));
}

MultiMatrixAlgebra MultiMatrixAlgebra::from_json(const std::string &json_text) {
    std::vector<MatrixBlock> blocks;
    try {
        const auto j = nlohmann::json::parse(json_text);
        for (const auto &b : j.at("blocks"))
            blocks.push_back({b.at("size").get<int>(), b.at("q").get<std::vector<double>>()});
    } catch (const nlohmann::json::exception &ex) {
        throw ParseError(std::string("algebra JSON: ") + ex.what());
    }
    return MultiMatrixAlgebra(std::move(blocks));
}

std::string MultiMatrixAlgebra::to_json() const {
    nlohmann::json j;
    j["blocks"] = nlohmann::json::array();
    for (const auto &b : blocks_)
        j["blocks"].push_back({{"size", b.size}, {"q", b.q}});
    return j.dump();
}

void MultiMatrixAlgebra::check(const BasisIndex &x) const {
    if (x.block < 1 || x.block > block_count())
        throw ValidationError("block index out of range");
    const int n = blocks_[static_cast<std::size_t>(x.block - 1)].size;
    if (x.row < 1 || x.row > n || x.col < 1 || x.col > n)
        throw ValidationError("matrix unit index out of range");
}

int MultiMatrixAlgebra::linear_index(const BasisIndex &x) const {
    check(x);
    const int n = blocks_[static_cast<std::size_t>(x.block - 1)].size;
    return offsets_[static_cast<std::size_t>(x.block - 1)] + (x.row - 1) * n + (x.col - 1);
}

BasisIndex MultiMatrixAlgebra::basis_at(int linear) const {
    if (linear < 0 || linear >= dim_)
        throw ValidationError("basis position out of range");
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), linear);
    const auto a = static_cast<std::size_t>(it - offsets_.begin() - 1);
    const int n = blocks_[a].size;
    const int r = linear - offsets_[a];
    return {static_cast<int>(a) + 1, r / n + 1, r % n + 1};
}

std::vector<BasisIndex> MultiMatrixAlgebra::basis() const {
    std::vector<BasisIndex> out;
    out.reserve(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i)
        out.push_back(basis_at(i));
    return out;
}

double MultiMatrixAlgebra::state_value(const BasisIndex &x) const {
    check(x);
    if (x.row != x.col)
        return 0.0;
    return blocks_[static_cast<std::size_t>(x.block - 1)].q[static_cast<std::size_t>(x.row - 1)];
}

std::optional<BasisIndex> MultiMatrixAlgebra::mul_units(const BasisIndex &x,
                                                        const BasisIndex &y) const {
    check(x);
    check(y);
    if (x.block != y.block || x.col != y.row)
        return std::nullopt;
    return BasisIndex{x.block, x.row, y.col};
}

std::optional<ScaledBasis> MultiMatrixAlgebra::mul_basis(const BasisIndex &x,
                                                         const BasisIndex &y) const {
    auto unit = mul_units(x, y);
    if (!unit)
        return std::nullopt;
    // psi(e_jj)^{-1/2} psi(e_ll)^{-1/2} e_il = psi(e_jj)^{-1/2} b_il
    return ScaledBasis{1.0 / std::sqrt(column_weight(x)), *unit};
}

double MultiMatrixAlgebra::inner_product(std::span<const double> x,
                                         std::span<const double> y) const {
    if (x.size() != static_cast<std::size_t>(dim_) || y.size() != static_cast<std::size_t>(dim_))
        throw ShapeError("coefficient vectors must have length dim B");
    // psi(b_kl^* b_ij) = psi(e_kl)^{-1/2} psi(e_jj)^{-1/2} psi(e_lk e_ij)
    //                  = delta_ki delta_lj (psi(e_jj)^{-1} Q_j) = delta_ki delta_lj
    // evaluated term by term through the matrix units.
    double sum = 0.0;
    for (int a = 0; a < dim_; ++a) {
        if (x[static_cast<std::size_t>(a)] == 0.0)
            continue;
        const auto xi = basis_at(a);
        for (int b = 0; b < dim_; ++b) {
            if (y[static_cast<std::size_t>(b)] == 0.0)
                continue;
            const auto yi = basis_at(b);
            const BasisIndex y_adj{yi.block, yi.col, yi.row};
            auto prod = mul_units(y_adj, xi);
            if (!prod)
                continue;
            const double scale =
                1.0 / std::sqrt(column_weight(yi)) / std::sqrt(column_weight(xi));
            sum += y[static_cast<std::size_t>(b)] * x[static_cast<std::size_t>(a)] * scale *
                   state_value(*prod);
        }
    }
    return sum;
}

double MultiMatrixAlgebra::unit_inner_product(const BasisIndex &x, const BasisIndex &y) const {
    auto prod = mul_units({y.block, y.col, y.row}, x);
    return prod ? state_value(*prod) : 0.0;
}

std::vector<double> MultiMatrixAlgebra::block_delta_values() const {
    std::vector<double> out;
    for (const auto &b : blocks_) {
        double s = 0.0;
        for (double w : b.q)
            s += 1.0 / w;
        out.push_back(s);
    }
    return out;
}

std::optional<double> MultiMatrixAlgebra::delta_form() const {
    const auto vals = block_delta_values();
    for (double v : vals)
        if (!close(v, vals.front(), tolerance_))
            return std::nullopt;
    return vals.front();
}

MultiMatrixAlgebra MultiMatrixAlgebra::restrict_normalized(std::span<const int> block_ids) const {
    std::vector<MatrixBlock> sub;
    double mass = 0.0;
    for (int id : block_ids) {
        if (id < 0 || id >= block_count())
            throw ValidationError("block id out of range");
        sub.push_back(blocks_[static_cast<std::size_t>(id)]);
        for (double w : sub.back().q)
            mass += w;
    }
    for (auto &b : sub)
        for (double &w : b.q)
            w /= mass;
    return MultiMatrixAlgebra(std::move(sub), tolerance_);
}

std::vector<DeltaFactor> decompose_by_delta(const MultiMatrixAlgebra &a) {
    // Restricting to a union of blocks and renormalizing scales every Q_alpha
    // by the same factor, so the union is a delta-form iff its blocks share
    // Tr(Q_alpha^{-1}). Grouping by that value is therefore the coarsest choice.
    const auto vals = a.block_delta_values();
    const int c = a.block_count();
    std::vector<int> order(static_cast<std::size_t>(c));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return vals[static_cast<std::size_t>(x)] < vals[static_cast<std::size_t>(y)];
    });
    std::vector<int> cluster(static_cast<std::size_t>(c), 0);
    int next = 0;
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (!close(vals[static_cast<std::size_t>(order[i])],
                   vals[static_cast<std::size_t>(order[i - 1])], a.tolerance()))
            ++next;
        cluster[static_cast<std::size_t>(order[i])] = next;
    }

    std::vector<int> seen;
    std::vector<DeltaFactor> out;
    for (int alpha = 0; alpha < c; ++alpha) {
        const int cl = cluster[static_cast<std::size_t>(alpha)];
        if (std::find(seen.begin(), seen.end(), cl) != seen.end())
            continue;
        seen.push_back(cl);
        std::vector<int> ids;
        double mass = 0.0;
        double value = 0.0;
        for (int beta = alpha; beta < c; ++beta) {
            if (cluster[static_cast<std::size_t>(beta)] != cl)
                continue;
            ids.push_back(beta);
            value += vals[static_cast<std::size_t>(beta)];
            for (double w : a.blocks()[static_cast<std::size_t>(beta)].q)
                mass += w;
        }
        value /= static_cast<double>(ids.size());
        out.push_back({ids, a.restrict_normalized(ids), mass * value, mass});
    }
    return out;
}

} // namespace ncfusion
