#pragma once

#include "ncfusion/fusion.hpp"
#include "ncfusion/group.hpp"
#include "ncfusion/partition.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ncfusion {

// Noncrossing partition with group labels on its points.
struct DecoratedPartition {
    Partition partition;
    Word upper_labels;
    Word lower_labels;

    friend bool operator==(const DecoratedPartition &, const DecoratedPartition &) = default;
};

// In every block the left-to-right product of the upper labels equals the
// left-to-right product of the lower labels; an empty row contributes e.
// ShapeError when the label counts do not match the partition.
bool is_admissible(const Group &g, const Partition &p, std::span<const GroupElement> upper,
                   std::span<const GroupElement> lower);

inline bool is_admissible(const Group &g, const DecoratedPartition &d) {
    return is_admissible(g, d.partition, d.upper_labels, d.lower_labels);
}

// Admissible partitions of NC(k,l) for fixed labels, in enumeration order.
std::vector<DecoratedPartition> enumerate_decorated(const Group &g,
                                                    std::span<const GroupElement> upper,
                                                    std::span<const GroupElement> lower,
                                                    int max_points = kDefaultMaxPoints);

// dim Hom(a(g1) (x) .. (x) a(gk), a(h1) (x) .. (x) a(hl)) for dim B >= 4.
std::uint64_t decorated_hom_dimension(const Group &g, std::span<const GroupElement> upper,
                                      std::span<const GroupElement> lower,
                                      int max_points = kDefaultMaxPoints);

// Strict mode: the diagram count next to the trivial multiplicity of
// conj(a(g1)..a(gk)) (x) a(h1)..a(hl) from the fusion rules.
struct FusionCrossCheck {
    std::uint64_t diagram_count = 0;
    std::uint64_t fusion_count = 0;
    bool agrees() const noexcept { return diagram_count == fusion_count; }
};

FusionCrossCheck cross_check_with_fusion(const Group &g, std::span<const GroupElement> upper,
                                         std::span<const GroupElement> lower,
                                         int max_points = kDefaultMaxPoints);

} // namespace ncfusion
