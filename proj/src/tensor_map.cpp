#include "ncfusion/tensor_map.hpp"

#include "ncfusion/errors.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace ncfusion {

namespace {

// Flattened view of the basis for the inner loops.
struct BasisTable {
    std::vector<int> block, row, col;
    std::vector<double> inv_sqrt_col; // psi(e_jj)^{-1/2}
    std::vector<std::vector<double>> q;

    explicit BasisTable(const MultiMatrixAlgebra &a) {
        for (const auto &x : a.basis()) {
            block.push_back(x.block);
            row.push_back(x.row);
            col.push_back(x.col);
            inv_sqrt_col.push_back(1.0 / std::sqrt(a.column_weight(x)));
        }
        for (const auto &b : a.blocks())
            q.push_back(b.q);
    }
    double weight(int blk, int i) const {
        return q[static_cast<std::size_t>(blk - 1)][static_cast<std::size_t>(i - 1)];
    }
};

// Points of one block in natural order; positions index the assignment
// vector (upper points first, then lower points).
struct BlockPoints {
    std::vector<int> upper;
    std::vector<int> lower;
};

std::vector<BlockPoints> block_points(const Partition &p) {
    std::vector<BlockPoints> out(static_cast<std::size_t>(p.block_count()));
    for (int i = 1; i <= p.upper(); ++i)
        out[static_cast<std::size_t>(p.block_of_upper(i))].upper.push_back(i - 1);
    for (int j = 1; j <= p.lower(); ++j)
        out[static_cast<std::size_t>(p.block_of_lower(j))].lower.push_back(p.upper() + j - 1);
    return out;
}

struct ChainProduct {
    bool zero = true;
    int block = 0, row = 0, col = 0;
    double scale = 1.0;
};

// Ordered product b_{x1} b_{x2} ... of normalized basis elements.
ChainProduct chain(const BasisTable &t, std::span<const int> points, const int *assignment) {
    ChainProduct out;
    bool first = true;
    for (int pos : points) {
        const auto b = static_cast<std::size_t>(assignment[pos]);
        if (first) {
            out = {false, t.block[b], t.row[b], t.col[b], t.inv_sqrt_col[b]};
            first = false;
            continue;
        }
        if (t.block[b] != out.block || t.row[b] != out.col)
            return {};
        out.col = t.col[b];
        out.scale *= t.inv_sqrt_col[b];
    }
    return out;
}

double block_value(const BasisTable &t, const BlockPoints &bp, const int *assignment) {
    if (bp.lower.empty()) {
        auto up = chain(t, bp.upper, assignment);
        if (up.zero || up.row != up.col)
            return 0.0;
        return up.scale * t.weight(up.block, up.row);
    }
    if (bp.upper.empty()) {
        auto low = chain(t, bp.lower, assignment);
        if (low.zero || low.row != low.col)
            return 0.0;
        return low.scale * t.weight(low.block, low.row);
    }
    auto up = chain(t, bp.upper, assignment);
    if (up.zero)
        return 0.0;
    auto low = chain(t, bp.lower, assignment);
    if (low.zero)
        return 0.0;
    // psi((s e_{a'c'})^* r e_{ac}) = r s delta_{a'a} delta_{c'c} Q_c
    if (up.block != low.block || up.row != low.row || up.col != low.col)
        return 0.0;
    return up.scale * low.scale * t.weight(up.block, up.col);
}

std::size_t checked_power(int n, int e, std::size_t limit) {
    std::size_t out = 1;
    for (int i = 0; i < e; ++i) {
        if (out > limit / static_cast<std::size_t>(n))
            throw SizeLimitError("tensor power B^" + std::to_string(e) + " exceeds the size bound");
        out *= static_cast<std::size_t>(n);
    }
    return out;
}

} // namespace

std::size_t multi_index_position(const MultiMatrixAlgebra &a, std::span<const BasisIndex> idx) {
    std::size_t pos = 0;
    for (const auto &x : idx)
        pos = pos * static_cast<std::size_t>(a.dim()) + static_cast<std::size_t>(a.linear_index(x));
    return pos;
}

MultiIndex multi_index_at(const MultiMatrixAlgebra &a, int power, std::size_t position) {
    MultiIndex out(static_cast<std::size_t>(power));
    const auto n = static_cast<std::size_t>(a.dim());
    for (int t = power - 1; t >= 0; --t) {
        out[static_cast<std::size_t>(t)] = a.basis_at(static_cast<int>(position % n));
        position /= n;
    }
    if (position != 0)
        throw ValidationError("multi-index position out of range");
    return out;
}

double delta_coefficient(const MultiMatrixAlgebra &a, const Partition &p,
                         std::span<const BasisIndex> upper, std::span<const BasisIndex> lower) {
    if (upper.size() != static_cast<std::size_t>(p.upper()) ||
        lower.size() != static_cast<std::size_t>(p.lower()))
        throw ShapeError("multi-index lengths do not match the partition");
    const BasisTable table(a);
    std::vector<int> assignment;
    for (const auto &x : upper)
        assignment.push_back(a.linear_index(x));
    for (const auto &x : lower)
        assignment.push_back(a.linear_index(x));
    double value = 1.0;
    for (const auto &bp : block_points(p)) {
        value *= block_value(table, bp, assignment.data());
        if (value == 0.0)
            break;
    }
    return value;
}

TensorMap build_map(const MultiMatrixAlgebra &a, const Partition &p, std::size_t max_entries) {
    const int n = a.dim();
    const int k = p.upper();
    const int l = p.lower();
    const std::size_t cols = checked_power(n, k, max_entries);
    const std::size_t rows = checked_power(n, l, max_entries);
    if (rows > max_entries / cols)
        throw SizeLimitError("T_p would have more than " + std::to_string(max_entries) +
                             " entries");

    TensorMap out{n, k, l,
                  Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows),
                                        static_cast<Eigen::Index>(cols))};
    const BasisTable table(a);
    const auto blocks = block_points(p);
    std::vector<int> assignment(static_cast<std::size_t>(k + l), 0);

    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t rest = c;
        for (int t = k - 1; t >= 0; --t) {
            assignment[static_cast<std::size_t>(t)] = static_cast<int>(rest % static_cast<std::size_t>(n));
            rest /= static_cast<std::size_t>(n);
        }
        for (std::size_t r = 0; r < rows; ++r) {
            rest = r;
            for (int t = l - 1; t >= 0; --t) {
                assignment[static_cast<std::size_t>(k + t)] =
                    static_cast<int>(rest % static_cast<std::size_t>(n));
                rest /= static_cast<std::size_t>(n);
            }
            double value = 1.0;
            for (const auto &bp : blocks) {
                value *= block_value(table, bp, assignment.data());
                if (value == 0.0)
                    break;
            }
            out.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = value;
        }
    }
    return out;
}

TensorMap tensor(const TensorMap &s, const TensorMap &t) {
    if (s.basis_dim != t.basis_dim)
        throw ShapeError("tensor of maps over different algebras");
    const auto sr = s.matrix.rows(), sc = s.matrix.cols();
    const auto tr = t.matrix.rows(), tc = t.matrix.cols();
    TensorMap out{s.basis_dim, s.domain_power + t.domain_power,
                  s.codomain_power + t.codomain_power, Eigen::MatrixXd(sr * tr, sc * tc)};
    for (Eigen::Index i = 0; i < sr; ++i)
        for (Eigen::Index j = 0; j < sc; ++j)
            out.matrix.block(i * tr, j * tc, tr, tc) = s.matrix(i, j) * t.matrix;
    return out;
}

TensorMap adjoint(const TensorMap &t) {
    return {t.basis_dim, t.codomain_power, t.domain_power, t.matrix.transpose()};
}

double composition_deviation(const TensorMap &tp, const TensorMap &tq, const TensorMap &tqp,
                             double delta, int cycles) {
    if (tp.codomain_power != tq.domain_power)
        throw ShapeError("maps are not composable");
    if (tqp.domain_power != tp.domain_power || tqp.codomain_power != tq.codomain_power)
        throw ShapeError("composite map has the wrong shape");
    const double factor = std::pow(delta, -cycles);
    return (tqp.matrix - factor * (tq.matrix * tp.matrix)).cwiseAbs().maxCoeff();
}

double verify_composition(const MultiMatrixAlgebra &a, const Partition &p, const Partition &q) {
    const auto delta = a.delta_form();
    if (!delta)
        throw PreconditionError("composition law needs a delta-form state");
    const auto c = compose(p, q);
    return composition_deviation(build_map(a, p), build_map(a, q), build_map(a, c.result), *delta,
                                 c.cycles);
}

int gram_rank(std::span<const TensorMap> maps, double threshold) {
    if (maps.empty())
        return 0;
    const auto &ref = maps.front();
    for (const auto &m : maps)
        if (m.basis_dim != ref.basis_dim || m.domain_power != ref.domain_power ||
            m.codomain_power != ref.codomain_power)
            throw ShapeError("gram_rank needs maps of one shape");
    const auto count = static_cast<Eigen::Index>(maps.size());
    Eigen::MatrixXd gram(count, count);
    for (Eigen::Index i = 0; i < count; ++i)
        for (Eigen::Index j = 0; j <= i; ++j) {
            const double g = maps[static_cast<std::size_t>(i)].matrix.cwiseProduct(
                                                                       maps[static_cast<std::size_t>(j)].matrix)
                                 .sum();
            gram(i, j) = g;
            gram(j, i) = g;
        }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(gram);
    const auto &sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0)
        return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > threshold * sv(0))
            ++rank;
    return rank;
}

BigInt hom_dimension(int upper, int lower, int max_points) {
    if (upper < 0 || lower < 0)
        throw ValidationError("negative row size");
    if (upper + lower > max_points)
        throw SizeLimitError("NC(" + std::to_string(upper) + "," + std::to_string(lower) +
                             ") exceeds the bound of " + std::to_string(max_points) + " points");
    return catalan(upper + lower);
}

const TensorMap &MapCache::get(const Partition &p) {
    auto it = maps_.find(p);
    if (it == maps_.end())
        it = maps_.emplace(p, build_map(algebra_, p, max_entries_)).first;
    return it->second;
}

} // namespace ncfusion
