#include "ncfusion/partition.hpp"

#include "ncfusion/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

namespace ncfusion {

namespace {

// Relabel by order of first appearance.
std::vector<int> canonical_labels(std::span<const int> raw, int &block_count) {
    std::vector<int> out(raw.size());
    std::vector<std::pair<int, int>> seen; // raw label -> canonical
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto it = std::find_if(seen.begin(), seen.end(),
                               [&](const auto &e) { return e.first == raw[i]; });
        if (it == seen.end()) {
            seen.emplace_back(raw[i], static_cast<int>(seen.size()));
            out[i] = static_cast<int>(seen.size()) - 1;
        } else {
            out[i] = it->second;
        }
    }
    block_count = static_cast<int>(seen.size());
    return out;
}

bool labels_noncrossing(std::span<const int> labels, int block_count) {
    const int n = static_cast<int>(labels.size());
    std::vector<int> first(static_cast<std::size_t>(block_count), n);
    std::vector<int> last(static_cast<std::size_t>(block_count), -1);
    for (int i = 0; i < n; ++i) {
        auto b = static_cast<std::size_t>(labels[static_cast<std::size_t>(i)]);
        first[b] = std::min(first[b], i);
        last[b] = std::max(last[b], i);
    }
    // Between two consecutive points of a block, every other block must be
    // entirely enclosed.
    std::vector<int> prev(static_cast<std::size_t>(block_count), -1);
    for (int j = 0; j < n; ++j) {
        auto b = static_cast<std::size_t>(labels[static_cast<std::size_t>(j)]);
        const int i = prev[b];
        if (i >= 0) {
            for (int t = i + 1; t < j; ++t) {
                auto c = static_cast<std::size_t>(labels[static_cast<std::size_t>(t)]);
                if (first[c] < i || last[c] > j)
                    return false;
            }
        }
        prev[b] = j;
    }
    return true;
}

int linear_position(const PointRef &pt, int upper, int lower) {
    return pt.side == Side::Upper ? pt.index - 1 : upper + lower - pt.index;
}

PointRef point_at(int pos, int upper, int lower) {
    if (pos < upper)
        return {Side::Upper, pos + 1};
    return {Side::Lower, upper + lower - pos};
}

// Block labels in linear order from an explicit block list; validates coverage.
std::vector<int> labels_from_blocks(const std::vector<std::vector<PointRef>> &blocks, int upper,
                                    int lower) {
    if (upper < 0 || lower < 0)
        throw ValidationError("negative row size");
    const int n = upper + lower;
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw ValidationError("empty block");
        for (const auto &pt : blocks[b]) {
            const int row = pt.side == Side::Upper ? upper : lower;
            if (pt.index < 1 || pt.index > row)
                throw ValidationError("point " + to_string(pt) + " out of range");
            auto &slot = labels[static_cast<std::size_t>(linear_position(pt, upper, lower))];
            if (slot != -1)
                throw ValidationError("point " + to_string(pt) + " appears twice");
            slot = static_cast<int>(b);
        }
    }
    for (int pos = 0; pos < n; ++pos) {
        if (labels[static_cast<std::size_t>(pos)] == -1)
            throw ValidationError("point " + to_string(point_at(pos, upper, lower)) +
                                  " not covered");
    }
    return labels;
}

void check_bound(int upper, int lower, int max_points) {
    if (upper < 0 || lower < 0)
        throw ValidationError("negative row size");
    if (upper + lower > max_points)
        throw SizeLimitError("NC(" + std::to_string(upper) + "," + std::to_string(lower) +
                             ") exceeds the bound of " + std::to_string(max_points) + " points");
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            auto &px = parent[static_cast<std::size_t>(x)];
            px = parent[static_cast<std::size_t>(px)];
            x = px;
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

} // namespace

std::string to_string(const PointRef &pt) {
    return (pt.side == Side::Upper ? "u" : "l") + std::to_string(pt.index);
}

PointRef parse_point(const std::string &token) {
    if (token.size() < 2 || (token[0] != 'u' && token[0] != 'l'))
        throw ParseError("bad point token '" + token + "'");
    int idx = 0;
    const char *begin = token.data() + 1;
    const char *end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, idx);
    if (ec != std::errc{} || ptr != end || idx < 1)
        throw ParseError("bad point token '" + token + "'");
    return {token[0] == 'u' ? Side::Upper : Side::Lower, idx};
}

Partition::Partition(int upper, int lower, std::vector<int> labels)
    : upper_(upper), lower_(lower), labels_(std::move(labels)) {
    labels_ = canonical_labels(labels_, blocks_);
}

Partition make_partition_unchecked(int upper, int lower, std::vector<int> labels) {
    return Partition(upper, lower, std::move(labels));
}

Partition Partition::from_blocks(int upper, int lower,
                                 const std::vector<std::vector<PointRef>> &blocks) {
    auto labels = labels_from_blocks(blocks, upper, lower);
    return from_linear_labels(upper, lower, labels);
}

Partition Partition::from_linear_labels(int upper, int lower, std::span<const int> labels) {
    if (upper < 0 || lower < 0)
        throw ValidationError("negative row size");
    if (labels.size() != static_cast<std::size_t>(upper + lower))
        throw ValidationError("label count does not match k+l");
    Partition p(upper, lower, std::vector<int>(labels.begin(), labels.end()));
    if (!labels_noncrossing(p.labels_, p.blocks_))
        throw ValidationError("blocks cross");
    return p;
}

Partition Partition::identity(int n) {
    // u_i is linked to l_i: linear positions i and 2n-1-i.
    std::vector<int> labels(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        labels[static_cast<std::size_t>(i)] = i;
        labels[static_cast<std::size_t>(2 * n - 1 - i)] = i;
    }
    return Partition(n, n, std::move(labels));
}

Partition Partition::one_block(int upper, int lower) {
    return Partition(upper, lower, std::vector<int>(static_cast<std::size_t>(upper + lower), 0));
}

Partition Partition::singletons(int upper, int lower) {
    std::vector<int> labels(static_cast<std::size_t>(upper + lower));
    std::iota(labels.begin(), labels.end(), 0);
    return Partition(upper, lower, std::move(labels));
}

std::vector<std::vector<PointRef>> Partition::blocks() const {
    std::vector<std::vector<PointRef>> out(static_cast<std::size_t>(blocks_));
    for (int pos = 0; pos < points(); ++pos)
        out[static_cast<std::size_t>(labels_[static_cast<std::size_t>(pos)])].push_back(
            point_at(pos, upper_, lower_));
    return out;
}

bool is_noncrossing(const std::vector<std::vector<PointRef>> &blocks, int upper, int lower) {
    auto labels = labels_from_blocks(blocks, upper, lower);
    int count = 0;
    auto canon = canonical_labels(labels, count);
    return labels_noncrossing(canon, count);
}

void for_each_partition(int upper, int lower, const std::function<void(const Partition &)> &visit,
                        int max_points) {
    check_bound(upper, lower, max_points);
    const int n = upper + lower;
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::vector<int> open;
    open.reserve(static_cast<std::size_t>(n));

    // Each position either joins a block still open on the stack (closing
    // every block above it) or opens a new one.
    auto rec = [&](auto &&self, int pos, int next_label) -> void {
        if (pos == n) {
            visit(make_partition_unchecked(upper, lower, labels));
            return;
        }
        for (std::size_t s = 0; s < open.size(); ++s) {
            const int label = open[s];
            std::vector<int> closed(open.begin() + static_cast<std::ptrdiff_t>(s) + 1, open.end());
            open.resize(s + 1);
            labels[static_cast<std::size_t>(pos)] = label;
            self(self, pos + 1, next_label);
            open.insert(open.end(), closed.begin(), closed.end());
        }
        labels[static_cast<std::size_t>(pos)] = next_label;
        open.push_back(next_label);
        self(self, pos + 1, next_label + 1);
        open.pop_back();
    };
    rec(rec, 0, 0);
}

std::vector<Partition> enumerate(int upper, int lower, int max_points) {
    std::vector<Partition> out;
    for_each_partition(
        upper, lower, [&](const Partition &p) { out.push_back(p); }, max_points);
    return out;
}

Partition tensor(const Partition &p, const Partition &q) {
    const auto pl = p.linear_labels();
    const auto ql = q.linear_labels();
    const auto pk = static_cast<std::size_t>(p.upper());
    const int shift = p.block_count();

    std::vector<int> labels;
    labels.reserve(pl.size() + ql.size());
    labels.insert(labels.end(), pl.begin(), pl.begin() + static_cast<std::ptrdiff_t>(pk));
    for (int v : ql)
        labels.push_back(v + shift);
    labels.insert(labels.end(), pl.begin() + static_cast<std::ptrdiff_t>(pk), pl.end());
    return make_partition_unchecked(p.upper() + q.upper(), p.lower() + q.lower(),
                                    std::move(labels));
}

Composition compose(const Partition &p, const Partition &q) {
    if (p.lower() != q.upper())
        throw ShapeError("cannot compose: p has " + std::to_string(p.lower()) +
                         " lower points but q has " + std::to_string(q.upper()) + " upper points");
    const int k = p.upper();
    const int l = p.lower();
    const int w = q.lower();
    UnionFind uf(k + l + w);

    // Nodes: p upper [0,k), middle [k,k+l), q lower [k+l,k+l+w).
    std::vector<int> rep_p(static_cast<std::size_t>(p.block_count()), -1);
    auto join_p = [&](int label, int node) {
        auto &r = rep_p[static_cast<std::size_t>(label)];
        if (r < 0)
            r = node;
        else
            uf.unite(node, r);
    };
    for (int i = 1; i <= k; ++i)
        join_p(p.block_of_upper(i), i - 1);
    for (int j = 1; j <= l; ++j)
        join_p(p.block_of_lower(j), k + j - 1);

    std::vector<int> rep_q(static_cast<std::size_t>(q.block_count()), -1);
    auto join_q = [&](int label, int node) {
        auto &r = rep_q[static_cast<std::size_t>(label)];
        if (r < 0)
            r = node;
        else
            uf.unite(node, r);
    };
    for (int j = 1; j <= l; ++j)
        join_q(q.block_of_upper(j), k + j - 1);
    for (int t = 1; t <= w; ++t)
        join_q(q.block_of_lower(t), k + l + t - 1);

    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(k + w));
    for (int i = 0; i < k; ++i)
        labels.push_back(uf.find(i));
    for (int t = w; t >= 1; --t)
        labels.push_back(uf.find(k + l + t - 1));

    std::vector<int> middle_roots;
    for (int j = 0; j < l; ++j) {
        const int r = uf.find(k + j);
        if (std::find(labels.begin(), labels.end(), r) == labels.end() &&
            std::find(middle_roots.begin(), middle_roots.end(), r) == middle_roots.end())
            middle_roots.push_back(r);
    }

    Composition out{make_partition_unchecked(k, w, std::move(labels)),
                    static_cast<int>(middle_roots.size()), 0};
    out.cycles = l + out.result.block_count() + out.central_blocks - p.block_count() -
                 q.block_count();
    return out;
}

Partition adjoint(const Partition &p) {
    // Reflection reverses the linear order.
    auto src = p.linear_labels();
    std::vector<int> labels(src.rbegin(), src.rend());
    return make_partition_unchecked(p.lower(), p.upper(), std::move(labels));
}

BigInt catalan(int k) {
    if (k < 0)
        throw DomainError("catalan of a negative index");
    BigInt c = 1;
    for (int n = 0; n < k; ++n)
        c = c * 2 * (2 * n + 1) / (n + 2);
    return c;
}

} // namespace ncfusion

std::size_t std::hash<ncfusion::Partition>::operator()(const ncfusion::Partition &p) const noexcept {
    std::size_t h = static_cast<std::size_t>(p.upper()) * 1000003u + static_cast<std::size_t>(p.lower());
    for (int v : p.linear_labels())
        h = h * 31u + static_cast<std::size_t>(v);
    return h;
}
