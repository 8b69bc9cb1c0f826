#include "ncfusion/decorated.hpp"
#include "ncfusion/errors.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace ncfusion;

namespace {

Group s3() { return Group::parse_spec(std::string("table:") + NCFUSION_DATA_DIR + "/groups/s3.json"); }

std::uint64_t brute_count(const Group &g, const Word &up, const Word &down) {
    const int k = static_cast<int>(up.size()), l = static_cast<int>(down.size());
    std::uint64_t n = 0;
    for (const auto &rgs : oracle::noncrossing(k, l))
        if (oracle::admissible(g, rgs, k, l, up, down))
            ++n;
    return n;
}

void for_each_word(const Group &g, int len, const std::function<void(const Word &)> &f) {
    const auto letters = g.elements();
    std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
    while (true) {
        Word w;
        for (auto i : idx)
            w.push_back(letters[i]);
        f(w);
        int pos = len - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == letters.size())
            idx[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0)
            return;
    }
}

} // namespace

TEST(DecoratedTest, AdmissibilityRule) {
    const auto g = s3();
    const auto p = Partition::one_block(2, 1);
    const auto r = g.parse_element("r"), t = g.parse_element("t");
    EXPECT_TRUE(is_admissible(g, p, Word{r, t}, Word{g.mul(r, t)}));
    EXPECT_FALSE(is_admissible(g, p, Word{r, t}, Word{g.mul(t, r)}));
    EXPECT_THROW(is_admissible(g, p, Word{r}, Word{r}), ShapeError);
    const auto sing = Partition::singletons(1, 1);
    EXPECT_TRUE(is_admissible(g, sing, Word{g.identity()}, Word{g.identity()}));
    EXPECT_FALSE(is_admissible(g, sing, Word{r}, Word{r}));
}

TEST(DecoratedTest, CountsMatchBruteForce) {
    for (const auto &g : {Group::cyclic(2), Group::cyclic(3), s3()}) {
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; l + k <= 4; ++l)
                for_each_word(g, k, [&](const Word &up) {
                    for_each_word(g, l, [&](const Word &down) {
                        const auto list = enumerate_decorated(g, up, down);
                        EXPECT_EQ(list.size(), brute_count(g, up, down));
                        EXPECT_EQ(decorated_hom_dimension(g, up, down), list.size());
                        for (const auto &d : list)
                            EXPECT_TRUE(is_admissible(g, d));
                    });
                });
    }
}

TEST(DecoratedTest, TrivialLabelsGiveCatalan) {
    const auto g = Group::cyclic(2);
    for (int k = 0; k <= 10; ++k)
        EXPECT_EQ(decorated_hom_dimension(g, {}, Word(static_cast<std::size_t>(k), g.identity())),
                  oracle::catalan(k));
}

TEST(DecoratedTest, AgreesWithFusionForAbelian) {
    for (const auto &g : {Group::cyclic(2), Group::cyclic(3)}) {
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; l + k <= 4; ++l)
                for_each_word(g, k, [&](const Word &up) {
                    for_each_word(g, l, [&](const Word &down) {
                        EXPECT_TRUE(cross_check_with_fusion(g, up, down).agrees());
                    });
                });
    }
}

TEST(DecoratedTest, SizeBound) {
    const auto g = Group::cyclic(2);
    EXPECT_THROW(decorated_hom_dimension(g, {}, Word(17, g.identity())), SizeLimitError);
}
