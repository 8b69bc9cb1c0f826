#pragma once

#include "ncfusion/algebra.hpp"
#include "ncfusion/partition.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

namespace ncfusion {

// Upper bound on n^k * n^l matrix entries built by default (~128 MiB of doubles).
inline constexpr std::size_t kDefaultMaxEntries = std::size_t{1} << 24;

// Singular values below this fraction of the largest count as zero.
inline constexpr double kRankThreshold = 1e-7;

using MultiIndex = std::vector<BasisIndex>;

// T_p : B^{(x)k} -> B^{(x)l} as a dense n^l x n^k matrix in the orthonormal
// basis, tensor factors in row-major order (first factor most significant).
struct TensorMap {
    int basis_dim = 0;
    int domain_power = 0;
    int codomain_power = 0;
    Eigen::MatrixXd matrix;
};

// Canonical multi-index <-> linear position in B^{(x)power}.
std::size_t multi_index_position(const MultiMatrixAlgebra &a, std::span<const BasisIndex> idx);
MultiIndex multi_index_at(const MultiMatrixAlgebra &a, int power, std::size_t position);

// Product over blocks v of psi((b_v^down)^* b_v^up), each side being the
// left-to-right product of the normalized basis elements on that row of the
// block (the unit when the row is empty).
double delta_coefficient(const MultiMatrixAlgebra &a, const Partition &p,
                         std::span<const BasisIndex> upper, std::span<const BasisIndex> lower);

TensorMap build_map(const MultiMatrixAlgebra &a, const Partition &p,
                    std::size_t max_entries = kDefaultMaxEntries);

// Kronecker product, first argument on the leading tensor factors.
TensorMap tensor(const TensorMap &s, const TensorMap &t);
// Conjugate transpose; all entries are real.
TensorMap adjoint(const TensorMap &t);

// max |T_qp - delta^{-cy} T_q T_p| from prebuilt maps.
double composition_deviation(const TensorMap &tp, const TensorMap &tq, const TensorMap &tqp,
                             double delta, int cycles);

// Builds the three maps and returns the deviation above. Throws
// PreconditionError when psi is not a delta-form.
double verify_composition(const MultiMatrixAlgebra &a, const Partition &p, const Partition &q);

// Rank of the Gram matrix G_pq = trace(T_q^* T_p).
int gram_rank(std::span<const TensorMap> maps, double threshold = kRankThreshold);

// |NC(k,l)|, the dimension of Hom(u^{(x)k}, u^{(x)l}) whenever dim B >= 4.
BigInt hom_dimension(int upper, int lower, int max_points = kDefaultMaxPoints);

// Memoized build_map for one algebra. Not synchronized; use one per thread.
class MapCache {
public:
    explicit MapCache(const MultiMatrixAlgebra &a, std::size_t max_entries = kDefaultMaxEntries)
        : algebra_(a), max_entries_(max_entries) {}

    const TensorMap &get(const Partition &p);
    std::size_t size() const noexcept { return maps_.size(); }

private:
    const MultiMatrixAlgebra &algebra_;
    std::size_t max_entries_;
    std::unordered_map<Partition, TensorMap> maps_;
};

} // namespace ncfusion
