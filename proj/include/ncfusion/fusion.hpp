#pragma once

#include "ncfusion/algebra.hpp"
#include "ncfusion/group.hpp"
#include "ncfusion/partition.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ncfusion {

// Word over the group, indexing the irreducible omega(x). Letters equal to the
// identity are kept: (e) is the nontrivial irreducible a(e) minus 1, distinct
// from the empty word (the trivial representation).
using Word = std::vector<GroupElement>;

// Shorter words first, then lexicographic by element handle.
struct WordLess {
    bool operator()(const Word &a, const Word &b) const;
};

// Element names joined by commas; "" is the empty word.
Word parse_word(const Group &g, const std::string &text);
std::string format_word(const Group &g, const Word &w);

Word involution(const Group &g, const Word &x);
Word concat(const Word &x, const Word &y);
// (g1..gk).(h1..hl) = (g1, .., gk h1, .., hl); DomainError on an empty operand.
Word fuse_words(const Group &g, const Word &x, const Word &y);

// Finite formal sum of irreducibles with positive multiplicities.
class RepCombination {
public:
    using Terms = std::map<Word, std::uint64_t, WordLess>;

    RepCombination() = default;
    static RepCombination single(const Word &w) {
        RepCombination c;
        c.add(w);
        return c;
    }

    void add(const Word &w, std::uint64_t mult = 1);
    void add(Word &&w, std::uint64_t mult = 1);
    void add(const RepCombination &other, std::uint64_t scale = 1);

    std::uint64_t multiplicity(const Word &w) const;
    const Terms &terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::uint64_t total_multiplicity() const;

    friend bool operator==(const RepCombination &, const RepCombination &) = default;

private:
    Terms terms_;
};

// omega(x) (x) omega(y): every split x = (u,t), y = (t-bar, v) contributes
// omega(u,v), plus omega(u.v) when u and v are both nonempty.
RepCombination fusion_product(const Group &g, const Word &x, const Word &y);
RepCombination fusion_product(const Group &g, const RepCombination &x, const RepCombination &y);

// dim omega(x) for dim B = n >= 4.
BigInt dimension(const Group &g, const Word &x, int n);
BigInt dimension(const Group &g, const RepCombination &c, int n);

// Multiplicity of the trivial representation in omega(x) (x) omega(y).
int multiplicity_of_trivial(const Group &g, const Word &x, const Word &y);

// Multiplicity of the trivial representation in a(g1) (x) ... (x) a(gk),
// using a(g) = omega(g) (+) [g = e] 1.
std::uint64_t a_rep_trivial_multiplicity(const Group &g, std::span<const GroupElement> letters);

// Abstract fusion ring with word-valued labels; the empty label is trivial.
class FusionRing {
public:
    virtual ~FusionRing() = default;

    virtual Word trivial() const { return {}; }
    virtual bool is_trivial(const Word &label) const { return label.empty(); }
    virtual Word involution(const Word &label) const = 0;
    virtual RepCombination fuse(const Word &a, const Word &b) const = 0;
    virtual BigInt dimension(const Word &label) const = 0;
    virtual std::string format(const Word &label) const = 0;
    virtual Word parse(const std::string &text) const = 0;
};

// Representation ring of the free wreath product of the group dual by the
// quantum automorphism group of a delta-form algebra of dimension n.
class WreathWordRing final : public FusionRing {
public:
    WreathWordRing(Group group, int n);

    const Group &group() const noexcept { return group_; }
    int n() const noexcept { return n_; }

    Word involution(const Word &label) const override;
    RepCombination fuse(const Word &a, const Word &b) const override;
    BigInt dimension(const Word &label) const override;
    std::string format(const Word &label) const override;
    Word parse(const std::string &text) const override;

private:
    Group group_;
    int n_;
};

using RingList = std::vector<std::shared_ptr<const FusionRing>>;

struct AlternatingLetter {
    std::size_t factor = 0; // 0-based index into the ring list
    Word label;

    friend bool operator==(const AlternatingLetter &, const AlternatingLetter &) = default;
};

// Irreducible of a free product: nontrivial labels from alternating factors.
using AlternatingWord = std::vector<AlternatingLetter>;

struct AlternatingWordLess {
    bool operator()(const AlternatingWord &a, const AlternatingWord &b) const;
};

class FreeCombination {
public:
    using Terms = std::map<AlternatingWord, std::uint64_t, AlternatingWordLess>;

    void add(const AlternatingWord &w, std::uint64_t mult = 1);
    void add(const FreeCombination &other, std::uint64_t scale = 1);
    std::uint64_t multiplicity(const AlternatingWord &w) const;
    const Terms &terms() const noexcept { return terms_; }

    friend bool operator==(const FreeCombination &, const FreeCombination &) = default;

private:
    Terms terms_;
};

// Throws ValidationError unless factors are in range, adjacent factors differ
// and every label is nontrivial.
void validate_alternating(const RingList &rings, const AlternatingWord &w);

FreeCombination free_product_fusion(const RingList &rings, const AlternatingWord &w1,
                                    const AlternatingWord &w2);
FreeCombination free_product_fusion(const RingList &rings, const FreeCombination &c1,
                                    const FreeCombination &c2);
BigInt dimension(const RingList &rings, const AlternatingWord &w);
BigInt dimension(const RingList &rings, const FreeCombination &c);

// "<factor>:<word>" letters (factor 1-based) separated by ';'; "" is empty.
AlternatingWord parse_alternating(const RingList &rings, const std::string &text);
std::string format_alternating(const RingList &rings, const AlternatingWord &w);

// One word ring per delta-homogeneous summand of the algebra, in the order of
// decompose_by_delta. DomainError if a summand has dimension below 4.
RingList factor_rings(const MultiMatrixAlgebra &a, const Group &g);

} // namespace ncfusion
