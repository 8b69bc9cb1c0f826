#include "ncfusion/decorated.hpp"

#include "ncfusion/errors.hpp"

namespace ncfusion {

bool is_admissible(const Group &g, const Partition &p, std::span<const GroupElement> upper,
                   std::span<const GroupElement> lower) {
    if (upper.size() != static_cast<std::size_t>(p.upper()) ||
        lower.size() != static_cast<std::size_t>(p.lower()))
        throw ShapeError("label counts do not match NC(" + std::to_string(p.upper()) + "," +
                         std::to_string(p.lower()) + ")");
    const auto nb = static_cast<std::size_t>(p.block_count());
    std::vector<GroupElement> up(nb, g.identity());
    std::vector<GroupElement> down(nb, g.identity());
    for (int i = 1; i <= p.upper(); ++i) {
        auto &acc = up[static_cast<std::size_t>(p.block_of_upper(i))];
        acc = g.mul(acc, upper[static_cast<std::size_t>(i - 1)]);
    }
    for (int j = 1; j <= p.lower(); ++j) {
        auto &acc = down[static_cast<std::size_t>(p.block_of_lower(j))];
        acc = g.mul(acc, lower[static_cast<std::size_t>(j - 1)]);
    }
    return up == down;
}

std::vector<DecoratedPartition> enumerate_decorated(const Group &g,
                                                    std::span<const GroupElement> upper,
                                                    std::span<const GroupElement> lower,
                                                    int max_points) {
    const Word up(upper.begin(), upper.end());
    const Word down(lower.begin(), lower.end());
    std::vector<DecoratedPartition> out;
    for_each_partition(
        static_cast<int>(up.size()), static_cast<int>(down.size()),
        [&](const Partition &p) {
            if (is_admissible(g, p, up, down))
                out.push_back({p, up, down});
        },
        max_points);
    return out;
}

std::uint64_t decorated_hom_dimension(const Group &g, std::span<const GroupElement> upper,
                                      std::span<const GroupElement> lower, int max_points) {
    std::uint64_t count = 0;
    for_each_partition(
        static_cast<int>(upper.size()), static_cast<int>(lower.size()),
        [&](const Partition &p) {
            if (is_admissible(g, p, upper, lower))
                ++count;
        },
        max_points);
    return count;
}

FusionCrossCheck cross_check_with_fusion(const Group &g, std::span<const GroupElement> upper,
                                         std::span<const GroupElement> lower, int max_points) {
    FusionCrossCheck out;
    out.diagram_count = decorated_hom_dimension(g, upper, lower, max_points);
    // Hom(X, Y) = Hom(1, conj(X) (x) Y) and conj(a(g)) = a(g^{-1}).
    Word letters;
    for (auto it = upper.rbegin(); it != upper.rend(); ++it)
        letters.push_back(g.inv(*it));
    letters.insert(letters.end(), lower.begin(), lower.end());
    out.fusion_count = a_rep_trivial_multiplicity(g, letters);
    return out;
}

} // namespace ncfusion
