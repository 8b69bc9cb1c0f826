// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include "ncfusion/algebra.hpp"
#include "ncfusion/decorated.hpp"
#include "ncfusion/errors.hpp"
#include "ncfusion/fusion.hpp"
#include "ncfusion/partition.hpp"
#include "ncfusion/tensor_map.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace ncfusion;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Check {
public:
    void require(bool cond, const std::string &what) {
        if (!cond && failures_++ < 5)
            notes_ << (notes_.tellp() ? "; " : "") << what;
    }
    bool ok() const { return failures_ == 0; }
    std::string notes() const { return notes_.str(); }
    int failures() const { return failures_; }

private:
    int failures_ = 0;
    std::ostringstream notes_;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

Group s3() { return Group::parse_spec(std::string("table:") + NCFUSION_DATA_DIR + "/groups/s3.json"); }

MultiMatrixAlgebra c4() { return MultiMatrixAlgebra::commutative_uniform(4); }
MultiMatrixAlgebra m2() { return MultiMatrixAlgebra({{2, {0.5, 0.5}}}); }

double max_abs(const Eigen::MatrixXd &m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

std::vector<Word> words_up_to(const std::vector<GroupElement> &alphabet, std::size_t len) {
    std::vector<Word> out{{}};
    std::vector<Word> frontier{{}};
    for (std::size_t l = 1; l <= len; ++l) {
        std::vector<Word> next;
        for (const auto &w : frontier)
            for (const auto &a : alphabet) {
                auto v = w;
                v.push_back(a);
                next.push_back(std::move(v));
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

// 1
Outcome catalan_moments() {
    static const std::uint64_t expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    const auto g = Group::cyclic(2);
    Check c;
    for (int k = 0; k <= 10; ++k) {
        const auto count = enumerate(0, k).size();
        const auto cat = catalan(k);
        const auto hom = decorated_hom_dimension(g, {}, Word(static_cast<std::size_t>(k), g.identity()));
        c.require(count == expected[k] && cat == expected[k] && hom == expected[k],
                  "k=" + std::to_string(k));
    }
    return {c.ok(), "k=0..10 " + c.notes()};
}

// 2
Outcome worked_example() {
    auto U = [](int i) { return PointRef{Side::Upper, i}; };
    auto L = [](int i) { return PointRef{Side::Lower, i}; };
    const auto p = Partition::from_blocks(4, 17,
                                          {{U(1), L(1), L(2), L(3)},
                                           {U(2), L(4), L(5), L(6), L(7), L(8)},
                                           {U(3), L(9), L(10), L(11)},
                                           {L(12)},
                                           {U(4), L(13), L(17)},
                                           {L(14), L(15), L(16)}});
    const auto q = Partition::from_blocks(17, 5,
                                          {{U(1), U(2), U(3), L(1), L(2)},
                                           {U(4), U(5), L(3)},
                                           {U(6), U(7), U(8), U(9), U(10), L(4), L(5)},
                                           {U(11)},
                                           {U(12)},
                                           {U(13), U(14)},
                                           {U(15), U(16), U(17)}});
    const auto c = compose(p, q);
    std::ostringstream os;
    os << "b(p)=" << p.block_count() << " b(q)=" << q.block_count()
       << " b(qp)=" << c.result.block_count() << " cb=" << c.central_blocks << " cy=" << c.cycles;
    const bool ok = p.block_count() == 6 && q.block_count() == 7 && c.result.block_count() == 3 &&
                    c.central_blocks == 1 && c.cycles == 8;
    return {ok, os.str()};
}

// 3
Outcome cycle_relation() {
    Check c;
    std::uint64_t triples = 0;
    auto relation = [&](const Partition &p, const Partition &r, const Partition &s) {
        const auto rp = compose(p, r);
        const auto sr = compose(r, s);
        ++triples;
        return compose(p, sr.result).cycles ==
               rp.cycles + compose(rp.result, s).cycles - sr.cycles;
    };
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; a + b <= 5; ++b)
            for (int cc = 0; b + cc <= 5; ++cc)
                for (int d = 0; cc + d <= 5; ++d) {
                    const auto ps = enumerate(a, b), rs = enumerate(b, cc), ss = enumerate(cc, d);
                    for (const auto &p : ps)
                        for (const auto &r : rs)
                            for (const auto &s : ss)
                                c.require(relation(p, r, s), "exhaustive triple failed");
                }
    const auto exhaustive = triples;
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> size(3, 8);
    for (int t = 0; t < 1000; ++t) {
        const int a = size(rng), b = size(rng), cc = size(rng), d = size(rng);
        const auto p = oracle::random_partition(rng, a, b);
        const auto r = oracle::random_partition(rng, b, cc);
        const auto s = oracle::random_partition(rng, cc, d);
        c.require(relation(p, r, s), "random triple failed");
    }
    return {c.ok(), std::to_string(exhaustive) + " exhaustive + 1000 random triples " + c.notes()};
}

// 4
Outcome functoriality() {
    Check c;
    double worst_comp = 0.0, worst_tensor = 0.0, worst_adj = 0.0;
    std::uint64_t pairs = 0;
    for (const auto &a : {c4(), m2()}) {
        const double delta = *a.delta_form();
        MapCache cache(a);
        for (int k = 0; k <= 6; ++k)
            for (int l = 0; k + l <= 6; ++l) {
                const auto ps = enumerate(k, l);
                for (int m = 0; l + m <= 6 && k + m <= 6; ++m) {
                    const auto qs = enumerate(l, m);
                    for (const auto &p : ps) {
                        const auto &tp = cache.get(p);
                        for (const auto &q : qs) {
                            const auto comp = compose(p, q);
                            worst_comp = std::max(
                                worst_comp, composition_deviation(tp, cache.get(q),
                                                                  cache.get(comp.result), delta,
                                                                  comp.cycles));
                            ++pairs;
                        }
                    }
                }
            }
        std::vector<Partition> small;
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= n; ++k)
                for (const auto &p : enumerate(k, n - k))
                    small.push_back(p);
        for (const auto &p : small) {
            worst_adj = std::max(worst_adj,
                                 max_abs(cache.get(adjoint(p)).matrix - adjoint(cache.get(p)).matrix));
            for (const auto &q : small) {
                if (p.points() + q.points() > 6)
                    continue;
                worst_tensor = std::max(worst_tensor,
                                        max_abs(cache.get(tensor(p, q)).matrix -
                                                tensor(cache.get(p), cache.get(q)).matrix));
            }
        }
    }
    c.require(worst_comp <= 1e-9, "composition deviation " + fmt(worst_comp));
    c.require(worst_tensor <= 1e-12, "tensor deviation " + fmt(worst_tensor));
    c.require(worst_adj <= 1e-12, "adjoint deviation " + fmt(worst_adj));
    return {c.ok(), std::to_string(pairs) + " pairs, max dev comp=" + fmt(worst_comp) +
                        " tensor=" + fmt(worst_tensor) + " adjoint=" + fmt(worst_adj) + " " +
                        c.notes()};
}

// 5
Outcome multiplication_map() {
    double worst = 0.0;
    for (const auto &a : {c4(), m2()}) {
        const auto t = build_map(a, Partition::one_block(2, 1));
        worst = std::max(worst, max_abs(t.matrix - oracle::DenseAlgebra(a).multiplication()));
    }
    return {worst <= 1e-12, "max dev " + fmt(worst)};
}

// 6
Outcome linear_independence() {
    Check c;
    int families = 0;
    for (const auto &a : {c4(), m2()}) {
        MapCache cache(a);
        for (int k = 0; k <= 6; ++k)
            for (int l = 0; k + l <= 6; ++l) {
                std::vector<TensorMap> maps;
                for (const auto &p : enumerate(k, l))
                    maps.push_back(cache.get(p));
                const int rank = gram_rank(maps);
                ++families;
                c.require(rank == static_cast<int>(maps.size()),
                          "NC(" + std::to_string(k) + "," + std::to_string(l) + ") rank " +
                              std::to_string(rank) + " of " + std::to_string(maps.size()));
            }
    }
    const auto c2 = MultiMatrixAlgebra::commutative_uniform(2);
    std::vector<TensorMap> maps;
    for (const auto &p : enumerate(0, 4))
        maps.push_back(build_map(c2, p));
    const int rank_c2 = gram_rank(maps);
    c.require(rank_c2 < 14, "C^2 rank not degenerate");
    return {c.ok(), std::to_string(families) + " families full rank; C^2 NC(0,4) rank " +
                        std::to_string(rank_c2) + " < 14 " + c.notes()};
}

// Blocks with prescribed Tr(Q^{-1}) classes, then normalized to a state.
MultiMatrixAlgebra random_grouped_algebra(std::mt19937 &rng, int c) {
    std::uniform_int_distribution<int> size(1, 2);
    std::uniform_real_distribution<double> w(0.2, 1.0);
    std::uniform_int_distribution<int> cls(0, 1);
    const double targets[] = {4.0, 9.0};
    std::vector<MatrixBlock> blocks;
    double mass = 0.0;
    for (int i = 0; i < c; ++i) {
        MatrixBlock b{size(rng), {}};
        double inv = 0.0;
        for (int j = 0; j < b.size; ++j) {
            b.q.push_back(w(rng));
            inv += 1.0 / b.q.back();
        }
        const double scale = inv / targets[cls(rng)];
        for (double &x : b.q) {
            x *= scale;
            mass += x;
        }
        blocks.push_back(b);
    }
    for (auto &b : blocks)
        for (double &x : b.q)
            x /= mass;
    return MultiMatrixAlgebra(blocks);
}

// 7
Outcome delta_bookkeeping() {
    Check c;
    for (const auto &a : {c4(), m2()}) {
        const auto d = is_delta_form(a);
        c.require(d && std::abs(*d - 4.0) <= 1e-12, "delta != 4");
        const double dev = verify_composition(a, adjoint(Partition::one_block(2, 1)),
                                              Partition::one_block(2, 1));
        c.require(dev <= 1e-9, "mm* deviation " + fmt(dev));
    }
    auto same_groups = [](const MultiMatrixAlgebra &a) {
        const auto got = decompose_by_delta(a);
        const auto want = oracle::coarsest_delta_grouping(a);
        std::vector<std::vector<int>> groups;
        for (const auto &f : got)
            groups.push_back(f.block_ids);
        std::sort(groups.begin(), groups.end());
        if (groups != want.groups)
            return false;
        for (const auto &f : got) {
            const auto it = std::find(want.groups.begin(), want.groups.end(), f.block_ids);
            const double d = want.deltas[static_cast<std::size_t>(it - want.groups.begin())];
            if (std::abs(f.delta - d) > 1e-9 * d)
                return false;
        }
        return true;
    };
    std::vector<MatrixBlock> mixed(3, MatrixBlock{1, {1.0 / 6}});
    mixed.insert(mixed.end(), 5, MatrixBlock{1, {0.1}});
    const MultiMatrixAlgebra c3c5(mixed);
    c.require(decompose_by_delta(c3c5).size() == 2, "C^3+C^5 factor count");
    c.require(same_groups(c3c5), "C^3+C^5 grouping differs from oracle");
    std::mt19937 rng(99);
    int random_cases = 0;
    for (int cblocks = 1; cblocks <= 4; ++cblocks)
        for (int t = 0; t < 25; ++t, ++random_cases)
            c.require(same_groups(random_grouped_algebra(rng, cblocks)),
                      "random c=" + std::to_string(cblocks) + " grouping differs");
    return {c.ok(), "delta=4 on both, mm*=delta id, C^3+C^5 -> 2 factors, " +
                        std::to_string(random_cases) + " oracle groupings " + c.notes()};
}

// Multiset of words as sorted (code, multiplicity) pairs; letters must lie in [-16, 16).
using Packed = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

std::uint64_t pack(const Word &w) {
    std::uint64_t code = w.size();
    for (const auto &a : w) {
        if (a.value() < -16 || a.value() >= 16)
            throw std::out_of_range("letter outside the packing range");
        code = code * 32 + static_cast<std::uint64_t>(a.value() + 16);
    }
    return code;
}

void append(Packed &acc, const RepCombination &c, std::uint64_t scale) {
    for (const auto &[w, m] : c.terms())
        acc.emplace_back(pack(w), m * scale);
}

const Packed &normalize(Packed &v) {
    std::sort(v.begin(), v.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (out > 0 && v[out - 1].first == v[i].first)
            v[out - 1].second += v[i].second;
        else
            v[out++] = v[i];
    }
    v.resize(out);
    return v;
}

// 8
Outcome fusion_ring_axioms() {
    Check c;
    std::uint64_t triples = 0;
    const auto z2 = Group::cyclic(2), z3 = Group::cyclic(3), zz = Group::integers(), sym = s3();
    const std::vector<std::pair<Group, std::vector<GroupElement>>> cases = {
        {z2, z2.elements()},
        {z3, z3.elements()},
        {zz, {zz.element(-1), zz.element(0), zz.element(1), zz.element(2)}},
        {sym, sym.elements()},
    };
    for (const auto &[g, alphabet] : cases) {
        const auto ws = words_up_to(alphabet, 3);
        const std::size_t n = ws.size();
        std::vector<RepCombination> prod(n * n);
        std::vector<Word> bar(n);
        for (std::size_t i = 0; i < n; ++i) {
            bar[i] = involution(g, ws[i]);
            for (std::size_t j = 0; j < n; ++j)
                prod[i * n + j] = fusion_product(g, ws[i], ws[j]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            c.require(prod[i] == RepCombination::single(ws[i]), "left unit");
            c.require(prod[i * n] == RepCombination::single(ws[i]), "right unit");
            for (std::size_t j = 0; j < n; ++j) {
                const auto &xy = prod[i * n + j];
                const bool conj_pair = ws[j] == bar[i];
                c.require(xy.multiplicity({}) == (conj_pair ? 1u : 0u) &&
                              multiplicity_of_trivial(g, ws[i], ws[j]) == (conj_pair ? 1 : 0),
                          "trivial multiplicity");
                RepCombination conj;
                for (const auto &[w, m] : xy.terms())
                    conj.add(involution(g, w), m);
                c.require(conj == fusion_product(g, bar[j], bar[i]), "conjugation");
                for (int dim : {4, 5, 9})
                    c.require(dimension(g, xy, dim) == dimension(g, ws[i], dim) * dimension(g, ws[j], dim),
                              "dimension homomorphism");
            }
        }
        Packed left, right;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto &xy = prod[i * n + j];
                for (std::size_t k = 0; k < n; ++k) {
                    left.clear();
                    right.clear();
                    for (const auto &[w, m] : xy.terms())
                        append(left, fusion_product(g, w, ws[k]), m);
                    for (const auto &[w, m] : prod[j * n + k].terms())
                        append(right, fusion_product(g, ws[i], w), m);
                    ++triples;
                    c.require(normalize(left) == normalize(right), "associativity " + g.describe());
                }
            }
    }
    return {c.ok(), "Z2,Z3,Z,S3 words <= 3, " + std::to_string(triples) + " associativity triples " +
                        c.notes()};
}

// 9
Outcome cross_module() {
    Check c;
    std::uint64_t tuples = 0;
    auto compare = [&](const Group &g, std::uint64_t &agree, std::uint64_t &total) {
        const auto elems = g.elements();
        for (const auto &w : words_up_to(elems, 5)) {
            ++total;
            if (a_rep_trivial_multiplicity(g, w) == decorated_hom_dimension(g, {}, w))
                ++agree;
        }
    };
    for (const auto &g : {Group::cyclic(2), Group::cyclic(3)}) {
        std::uint64_t agree = 0, total = 0;
        compare(g, agree, total);
        tuples += total;
        c.require(agree == total, g.describe() + " " + std::to_string(total - agree) + " mismatches");
    }
    std::uint64_t agree = 0, total = 0;
    compare(s3(), agree, total);
    return {c.ok(), std::to_string(tuples) + " Z2/Z3 tuples equal; S3 (reported only): " +
                        std::to_string(agree) + "/" + std::to_string(total) + " agree " + c.notes()};
}

// 10
Outcome free_product() {
    Check c;
    const auto g = Group::cyclic(2);
    const RingList rings{std::make_shared<WreathWordRing>(g, 4), std::make_shared<WreathWordRing>(g, 5)};
    auto alternating = [&](std::size_t label_len) {
        std::vector<Word> labels;
        for (auto &w : words_up_to(g.elements(), label_len))
            if (!w.empty())
                labels.push_back(w);
        std::vector<AlternatingWord> out{{}};
        std::vector<AlternatingWord> frontier{{}};
        for (int len = 1; len <= 3; ++len) {
            std::vector<AlternatingWord> next;
            for (const auto &w : frontier)
                for (std::size_t f = 0; f < rings.size(); ++f) {
                    if (!w.empty() && w.back().factor == f)
                        continue;
                    for (const auto &lab : labels) {
                        auto v = w;
                        v.push_back(AlternatingLetter{f, lab});
                        next.push_back(std::move(v));
                    }
                }
            out.insert(out.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
        return out;
    };
    auto assoc = [&](const AlternatingWord &x, const AlternatingWord &y, const AlternatingWord &z) {
        FreeCombination left, right;
        const auto xy = free_product_fusion(rings, x, y);
        for (const auto &[w, m] : xy.terms())
            left.add(free_product_fusion(rings, w, z), m);
        const auto yz = free_product_fusion(rings, y, z);
        for (const auto &[w, m] : yz.terms())
            right.add(free_product_fusion(rings, x, w), m);
        return left == right;
    };
    const auto short_words = alternating(1);
    for (const auto &x : short_words)
        for (const auto &y : short_words)
            for (const auto &z : short_words)
                c.require(assoc(x, y, z), "associativity");
    const auto long_words = alternating(2);
    for (const auto &x : long_words)
        for (const auto &y : long_words)
            c.require(dimension(rings, free_product_fusion(rings, x, y)) ==
                          dimension(rings, x) * dimension(rings, y),
                      "dimension multiplicativity");
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, long_words.size() - 1);
    for (int t = 0; t < 20000; ++t)
        c.require(assoc(long_words[pick(rng)], long_words[pick(rng)], long_words[pick(rng)]),
                  "associativity (random)");
    const RingList single{rings[0]};
    const auto ws = words_up_to(g.elements(), 3);
    for (const auto &x : ws)
        for (const auto &y : ws) {
            AlternatingWord ax, ay;
            if (!x.empty())
                ax.push_back(AlternatingLetter{0, x});
            if (!y.empty())
                ay.push_back(AlternatingLetter{0, y});
            FreeCombination want;
            const auto xy = fusion_product(g, x, y);
            for (const auto &[z, m] : xy.terms())
                want.add(z.empty() ? AlternatingWord{} : AlternatingWord{AlternatingLetter{0, z}}, m);
            c.require(free_product_fusion(single, ax, ay) == want, "single factor");
        }
    return {c.ok(), std::to_string(short_words.size()) + "^3 exhaustive + 20000 random triples, " +
                        std::to_string(long_words.size()) + "^2 dimension pairs, single factor ok " +
                        c.notes()};
}

} // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Outcome()> run;
        double time_limit; // seconds, 0 for none
    };
    const std::vector<Criterion> criteria = {
        {"catalan moments", catalan_moments, 10.0},
        {"worked composition example", worked_example, 0.0},
        {"cycle relation", cycle_relation, 0.0},
        {"map functoriality", functoriality, 60.0},
        {"multiplication map", multiplication_map, 0.0},
        {"linear independence", linear_independence, 0.0},
        {"delta-form bookkeeping", delta_bookkeeping, 0.0},
        {"fusion ring", fusion_ring_axioms, 60.0},
        {"cross-module consistency", cross_module, 0.0},
        {"free-product fusion", free_product, 0.0},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto &cr = criteria[i];
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = cr.run();
        } catch (const std::exception &ex) {
            out = {false, std::string("exception: ") + ex.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (cr.time_limit > 0 && secs > cr.time_limit) {
            out.pass = false;
            out.detail += " over time limit " + fmt(cr.time_limit) + "s";
        }
        if (!out.pass)
            ++failed;
        std::cout << (out.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << cr.name << ": "
                  << out.detail << " (" << fmt(secs) << "s)" << std::endl;
    }
    return failed ? 1 : 0;
}
