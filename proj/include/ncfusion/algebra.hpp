#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ncfusion {

inline constexpr double kDefaultTolerance = 1e-9;

// Matrix unit e_ij^alpha or its normalized counterpart b_ij^alpha, 1-based.
struct BasisIndex {
    int block = 1;
    int row = 1;
    int col = 1;

    friend bool operator==(const BasisIndex &, const BasisIndex &) = default;
};

// scale * (basis element)
struct ScaledBasis {
    double scale = 0.0;
    BasisIndex index;
};

struct MatrixBlock {
    int size = 1;
    std::vector<double> q; // eigenvalues of Q_alpha in the diagonalizing basis
};

// B = (+)_alpha M_{n_alpha}(C) with the faithful state psi = (+)_alpha Tr(Q_alpha .),
// Q_alpha diagonal. The orthonormal basis used throughout is
// b_ij = psi(e_jj)^{-1/2} e_ij, ordered by block, then row, then column.
class MultiMatrixAlgebra {
public:
    // Throws ValidationError for non-positive weights, wrong weight counts, or
    // total mass off 1 by more than `tolerance` (relative).
    explicit MultiMatrixAlgebra(std::vector<MatrixBlock> blocks,
                                double tolerance = kDefaultTolerance);

    // Uniform state on C^n.
    static MultiMatrixAlgebra commutative_uniform(int n);
    static MultiMatrixAlgebra from_json(const std::string &json_text);
    std::string to_json() const;

    const std::vector<MatrixBlock> &blocks() const noexcept { return blocks_; }
    int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
    // sum of n_alpha^2
    int dim() const noexcept { return dim_; }
    double tolerance() const noexcept { return tolerance_; }

    // Position of b_ij^alpha in the canonical order, 0-based.
    int linear_index(const BasisIndex &x) const;
    BasisIndex basis_at(int linear) const;
    std::vector<BasisIndex> basis() const;

    // psi(e_ij^alpha) = delta_ij Q_{i,alpha}
    double state_value(const BasisIndex &x) const;
    // Q_{j,alpha}, the weight of the column of x.
    double column_weight(const BasisIndex &x) const { return state_value({x.block, x.col, x.col}); }

    // e_ij e_kl in matrix units: e_il when same block and j == k.
    std::optional<BasisIndex> mul_units(const BasisIndex &x, const BasisIndex &y) const;
    // b_ij b_kl = psi(e_jj)^{-1/2} b_il when same block and j == k.
    std::optional<ScaledBasis> mul_basis(const BasisIndex &x, const BasisIndex &y) const;

    // <x, y> = psi(y* x) for coefficient vectors over the normalized basis.
    double inner_product(std::span<const double> x, std::span<const double> y) const;
    // <e_ij, e_kl> for un-normalized matrix units.
    double unit_inner_product(const BasisIndex &x, const BasisIndex &y) const;

    // Tr(Q_alpha^{-1}) per block.
    std::vector<double> block_delta_values() const;
    // delta when every block has the same Tr(Q_alpha^{-1}) (within tolerance).
    std::optional<double> delta_form() const;

    // Restriction of psi to a subset of blocks, renormalized to a state.
    MultiMatrixAlgebra restrict_normalized(std::span<const int> block_ids) const;

private:
    void check(const BasisIndex &x) const;

    std::vector<MatrixBlock> blocks_;
    std::vector<int> offsets_; // first linear index of each block
    int dim_ = 0;
    double tolerance_ = kDefaultTolerance;
};

inline std::optional<double> is_delta_form(const MultiMatrixAlgebra &a) { return a.delta_form(); }

struct DeltaFactor {
    std::vector<int> block_ids; // 0-based blocks of the parent algebra
    MultiMatrixAlgebra algebra;  // renormalized restriction
    double delta = 0.0;
    double mass = 0.0; // psi(1_{B_i}) before renormalization
};

// Coarsest splitting of B into summands whose renormalized states are
// delta-forms. Blocks are grouped by equal Tr(Q_alpha^{-1}); factors are
// listed by their first block.
std::vector<DeltaFactor> decompose_by_delta(const MultiMatrixAlgebra &a);

} // namespace ncfusion
