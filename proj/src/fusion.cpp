#include "ncfusion/fusion.hpp"

#include "ncfusion/errors.hpp"

#include <algorithm>
#include <charconv>

namespace ncfusion {

namespace {

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    return out;
}

void require_dim(int n) {
    if (n < 4)
        throw DomainError("fusion rules need dim B >= 4, got " + std::to_string(n));
}

BigInt dimension_memo(const Group &g, const Word &w, int n, std::map<Word, BigInt, WordLess> &memo) {
    if (w.empty())
        return 1;
    if (w.size() == 1)
        return BigInt(n - (g.is_identity(w.front()) ? 1 : 0));
    if (auto it = memo.find(w); it != memo.end())
        return it->second;
    // omega(x) (x) omega(h) = omega(x,h) + omega(x.h) + [last(x) = h^{-1}] omega(x minus last)
    const Word x(w.begin(), w.end() - 1);
    const Word h{w.back()};
    BigInt d = dimension_memo(g, x, n, memo) * dimension_memo(g, h, n, memo);
    d -= dimension_memo(g, fuse_words(g, x, h), n, memo);
    if (x.back() == g.inv(h.front()))
        d -= dimension_memo(g, Word(x.begin(), x.end() - 1), n, memo);
    memo.emplace(w, d);
    return d;
}

} // namespace

bool WordLess::operator()(const Word &a, const Word &b) const {
    if (a.size() != b.size())
        return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Word parse_word(const Group &g, const std::string &text) {
    const auto t = trim(text);
    if (t.empty() || t == "()")
        return {};
    Word out;
    for (const auto &tok : split(t, ',')) {
        if (tok.empty())
            throw ValidationError("empty letter in word '" + text + "'");
        out.push_back(g.parse_element(tok));
    }
    return out;
}

std::string format_word(const Group &g, const Word &w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ',';
        out += g.name(w[i]);
    }
    return out;
}

Word involution(const Group &g, const Word &x) {
    Word out;
    out.reserve(x.size());
    for (auto it = x.rbegin(); it != x.rend(); ++it)
        out.push_back(g.inv(*it));
    return out;
}

Word concat(const Word &x, const Word &y) {
    Word out(x);
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

Word fuse_words(const Group &g, const Word &x, const Word &y) {
    if (x.empty() || y.empty())
        throw DomainError("fusion of words needs two nonempty words");
    Word out(x.begin(), x.end() - 1);
    out.push_back(g.mul(x.back(), y.front()));
    out.insert(out.end(), y.begin() + 1, y.end());
    return out;
}

void RepCombination::add(const Word &w, std::uint64_t mult) {
    if (mult == 0)
        return;
    terms_[w] += mult;
}

void RepCombination::add(Word &&w, std::uint64_t mult) {
    if (mult == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), mult);
    if (!inserted)
        it->second += mult;
}

void RepCombination::add(const RepCombination &other, std::uint64_t scale) {
    for (const auto &[w, m] : other.terms_)
        add(w, m * scale);
}

std::uint64_t RepCombination::multiplicity(const Word &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

std::uint64_t RepCombination::total_multiplicity() const {
    std::uint64_t s = 0;
    for (const auto &[w, m] : terms_)
        s += m;
    return s;
}

RepCombination fusion_product(const Group &g, const Word &x, const Word &y) {
    for (const auto *w : {&x, &y})
        for (const auto &a : *w)
            if (!g.owns(a))
                throw DomainError("letter does not belong to group " + g.describe());
    RepCombination out;
    const std::size_t max_t = std::min(x.size(), y.size());
    for (std::size_t s = 0; s <= max_t; ++s) {
        // t = last s letters of x; t-bar must be the first s letters of y.
        if (s > 0 && y[s - 1] != g.inv(x[x.size() - s]))
            break;
        const auto u_end = x.end() - static_cast<std::ptrdiff_t>(s);
        const auto v_begin = y.begin() + static_cast<std::ptrdiff_t>(s);
        Word joined;
        joined.reserve(x.size() + y.size() - 2 * s);
        joined.insert(joined.end(), x.begin(), u_end);
        joined.insert(joined.end(), v_begin, y.end());
        if (u_end != x.begin() && v_begin != y.end()) {
            const std::size_t seam = static_cast<std::size_t>(u_end - x.begin()) - 1;
            Word fused(joined);
            fused[seam] = g.mul(joined[seam], joined[seam + 1]);
            fused.erase(fused.begin() + static_cast<std::ptrdiff_t>(seam) + 1);
            out.add(std::move(fused));
        }
        out.add(std::move(joined));
    }
    return out;
}

RepCombination fusion_product(const Group &g, const RepCombination &x, const RepCombination &y) {
    RepCombination out;
    for (const auto &[a, ma] : x.terms())
        for (const auto &[b, mb] : y.terms())
            out.add(fusion_product(g, a, b), ma * mb);
    return out;
}

BigInt dimension(const Group &g, const Word &x, int n) {
    require_dim(n);
    std::map<Word, BigInt, WordLess> memo;
    return dimension_memo(g, x, n, memo);
}

BigInt dimension(const Group &g, const RepCombination &c, int n) {
    require_dim(n);
    std::map<Word, BigInt, WordLess> memo;
    BigInt total = 0;
    for (const auto &[w, m] : c.terms())
        total += dimension_memo(g, w, n, memo) * m;
    return total;
}

int multiplicity_of_trivial(const Group &g, const Word &x, const Word &y) {
    return y == involution(g, x) ? 1 : 0;
}

std::uint64_t a_rep_trivial_multiplicity(const Group &g, std::span<const GroupElement> letters) {
    RepCombination acc = RepCombination::single({});
    for (const auto &h : letters) {
        RepCombination next = fusion_product(g, acc, RepCombination::single({h}));
        if (g.is_identity(h))
            next.add(acc);
        acc = std::move(next);
    }
    return acc.multiplicity({});
}

WreathWordRing::WreathWordRing(Group group, int n) : group_(std::move(group)), n_(n) {
    require_dim(n);
}

Word WreathWordRing::involution(const Word &label) const {
    return ncfusion::involution(group_, label);
}

RepCombination WreathWordRing::fuse(const Word &a, const Word &b) const {
    return fusion_product(group_, a, b);
}

BigInt WreathWordRing::dimension(const Word &label) const {
    return ncfusion::dimension(group_, label, n_);
}

std::string WreathWordRing::format(const Word &label) const { return format_word(group_, label); }

Word WreathWordRing::parse(const std::string &text) const { return parse_word(group_, text); }

bool AlternatingWordLess::operator()(const AlternatingWord &a, const AlternatingWord &b) const {
    if (a.size() != b.size())
        return a.size() < b.size();
    const WordLess less;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].factor != b[i].factor)
            return a[i].factor < b[i].factor;
        if (less(a[i].label, b[i].label))
            return true;
        if (less(b[i].label, a[i].label))
            return false;
    }
    return false;
}

void FreeCombination::add(const AlternatingWord &w, std::uint64_t mult) {
    if (mult == 0)
        return;
    terms_[w] += mult;
}

void FreeCombination::add(const FreeCombination &other, std::uint64_t scale) {
    for (const auto &[w, m] : other.terms_)
        add(w, m * scale);
}

std::uint64_t FreeCombination::multiplicity(const AlternatingWord &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

void validate_alternating(const RingList &rings, const AlternatingWord &w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].factor >= rings.size())
            throw ValidationError("factor index " + std::to_string(w[i].factor + 1) +
                                  " out of range");
        if (rings[w[i].factor]->is_trivial(w[i].label))
            throw ValidationError("alternating word contains a trivial label");
        if (i > 0 && w[i - 1].factor == w[i].factor)
            throw ValidationError("adjacent letters from the same factor");
    }
}

FreeCombination free_product_fusion(const RingList &rings, const AlternatingWord &w1,
                                    const AlternatingWord &w2) {
    validate_alternating(rings, w1);
    validate_alternating(rings, w2);
    FreeCombination out;
    if (w1.empty() || w2.empty() || w1.back().factor != w2.front().factor) {
        AlternatingWord joined(w1);
        joined.insert(joined.end(), w2.begin(), w2.end());
        out.add(joined);
        return out;
    }
    const std::size_t f = w1.back().factor;
    const auto &ring = *rings[f];
    const AlternatingWord head(w1.begin(), w1.end() - 1);
    const AlternatingWord tail(w2.begin() + 1, w2.end());
    const RepCombination fused = ring.fuse(w1.back().label, w2.front().label);
    for (const auto &[t, m] : fused.terms()) {
        if (ring.is_trivial(t)) {
            // The boundary letters cancel; the neighbours may now interact.
            out.add(free_product_fusion(rings, head, tail), m);
            continue;
        }
        AlternatingWord spliced(head);
        spliced.push_back({f, t});
        spliced.insert(spliced.end(), tail.begin(), tail.end());
        out.add(spliced, m);
    }
    return out;
}

FreeCombination free_product_fusion(const RingList &rings, const FreeCombination &c1,
                                    const FreeCombination &c2) {
    FreeCombination out;
    for (const auto &[a, ma] : c1.terms())
        for (const auto &[b, mb] : c2.terms())
            out.add(free_product_fusion(rings, a, b), ma * mb);
    return out;
}

BigInt dimension(const RingList &rings, const AlternatingWord &w) {
    validate_alternating(rings, w);
    BigInt d = 1;
    for (const auto &letter : w)
        d *= rings[letter.factor]->dimension(letter.label);
    return d;
}

BigInt dimension(const RingList &rings, const FreeCombination &c) {
    BigInt total = 0;
    for (const auto &[w, m] : c.terms())
        total += dimension(rings, w) * m;
    return total;
}

AlternatingWord parse_alternating(const RingList &rings, const std::string &text) {
    AlternatingWord out;
    const auto t = trim(text);
    if (t.empty() || t == "()")
        return out;
    for (const auto &part : split(t, ';')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos)
            throw ValidationError("alternating letter '" + part + "' needs <factor>:<word>");
        const auto idx_text = trim(part.substr(0, colon));
        std::size_t idx = 0;
        auto [ptr, ec] = std::from_chars(idx_text.data(), idx_text.data() + idx_text.size(), idx);
        if (ec != std::errc{} || ptr != idx_text.data() + idx_text.size() || idx < 1 ||
            idx > rings.size())
            throw ValidationError("bad factor index '" + idx_text + "'");
        out.push_back({idx - 1, rings[idx - 1]->parse(part.substr(colon + 1))});
    }
    validate_alternating(rings, out);
    return out;
}

std::string format_alternating(const RingList &rings, const AlternatingWord &w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ';';
        out += std::to_string(w[i].factor + 1) + ":" + rings[w[i].factor]->format(w[i].label);
    }
    return out;
}

RingList factor_rings(const MultiMatrixAlgebra &a, const Group &g) {
    RingList out;
    for (const auto &f : decompose_by_delta(a))
        out.push_back(std::make_shared<WreathWordRing>(g, f.algebra.dim()));
    return out;
}

} // namespace ncfusion
