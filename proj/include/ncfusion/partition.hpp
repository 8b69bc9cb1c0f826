#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ncfusion {

using BigInt = boost::multiprecision::cpp_int;

enum class Side : std::uint8_t { Upper, Lower };

// A point of a diagram. Indices are 1-based within their row.
struct PointRef {
    Side side = Side::Upper;
    int index = 1;

    friend bool operator==(const PointRef &, const PointRef &) = default;
};

std::string to_string(const PointRef &pt);
PointRef parse_point(const std::string &token);

inline constexpr int kDefaultMaxPoints = 16;

// Noncrossing partition between k upper and l lower points.
//
// Points are linearized as u1..uk followed by l_l..l_1 (the lower row read
// right to left). Internally each point carries a block label in that linear
// order, labels numbered by first appearance, so two equal partitions have
// identical label vectors and equality is structural.
class Partition {
public:
    Partition() = default;

    // Validates coverage and the noncrossing condition.
    static Partition from_blocks(int upper, int lower,
                                 const std::vector<std::vector<PointRef>> &blocks);

    // Block labels given in linear order; any labelling is accepted and
    // re-canonicalized. Validates the noncrossing condition.
    static Partition from_linear_labels(int upper, int lower, std::span<const int> labels);

    static Partition identity(int n);
    // Single block joining every point.
    static Partition one_block(int upper, int lower);
    // Every point its own block.
    static Partition singletons(int upper, int lower);

    int upper() const noexcept { return upper_; }
    int lower() const noexcept { return lower_; }
    int points() const noexcept { return upper_ + lower_; }
    int block_count() const noexcept { return blocks_; }

    // Canonical block list: blocks by minimal linear position, points sorted
    // in linear order within a block.
    std::vector<std::vector<PointRef>> blocks() const;

    // Block label of the i-th upper / j-th lower point (1-based indices).
    int block_of_upper(int i) const { return labels_[static_cast<std::size_t>(i - 1)]; }
    int block_of_lower(int j) const {
        return labels_[static_cast<std::size_t>(upper_ + lower_ - j)];
    }

    std::span<const int> linear_labels() const noexcept { return labels_; }

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &, const Partition &) = default;

private:
    Partition(int upper, int lower, std::vector<int> labels);

    int upper_ = 0;
    int lower_ = 0;
    int blocks_ = 0;
    std::vector<int> labels_;

    friend Partition make_partition_unchecked(int, int, std::vector<int>);
};

// Trusted construction from linear labels known to be noncrossing.
Partition make_partition_unchecked(int upper, int lower, std::vector<int> labels);

// True when the blocks (which must be a set partition of the k+l points) do
// not cross in the linearized order. Throws ValidationError on missing or
// duplicated points.
bool is_noncrossing(const std::vector<std::vector<PointRef>> &blocks, int upper, int lower);

// All of NC(k,l) in lexicographic order of the canonical linear labels.
std::vector<Partition> enumerate(int upper, int lower, int max_points = kDefaultMaxPoints);

// Streams NC(k,l) in the same order without materializing the list.
void for_each_partition(int upper, int lower, const std::function<void(const Partition &)> &visit,
                        int max_points = kDefaultMaxPoints);

Partition tensor(const Partition &p, const Partition &q);

struct Composition {
    Partition result; // qp
    int central_blocks = 0;
    int cycles = 0;
};

// Vertical composition qp: p on top, q below; requires lower(p) == upper(q).
Composition compose(const Partition &p, const Partition &q);

Partition adjoint(const Partition &p);

BigInt catalan(int k);

} // namespace ncfusion

template <>
struct std::hash<ncfusion::Partition> {
    std::size_t operator()(const ncfusion::Partition &p) const noexcept;
};
