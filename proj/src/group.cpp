#include "ncfusion/group.hpp"

#include "ncfusion/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

namespace ncfusion {

struct Group::Impl {
    Kind kind = Kind::Cyclic;
    std::int64_t order = 0; // cyclic order or table size; 0 for Z
    std::vector<std::string> names;
    std::vector<std::vector<int>> table;
    std::vector<int> inverse;
    int identity = 0;
};

namespace {

std::int64_t parse_int(const std::string &s, const std::string &what) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ValidationError("bad " + what + " '" + s + "'");
    return v;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

Group Group::cyclic(std::int64_t order) {
    if (order < 1)
        throw ValidationError("cyclic group order must be >= 1");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Cyclic;
    impl->order = order;
    return Group(std::move(impl));
}

Group Group::integers() {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Integers;
    return Group(std::move(impl));
}

Group Group::table(std::vector<std::string> names, const std::string &identity_name,
                   std::vector<std::vector<int>> table) {
    const auto n = names.size();
    if (n == 0)
        throw ValidationError("group table has no elements");
    for (std::size_t i = 0; i < n; ++i) {
        if (names[i].empty())
            throw ValidationError("empty element name");
        if (std::find(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(i), names[i]) !=
            names.begin() + static_cast<std::ptrdiff_t>(i))
            throw ValidationError("duplicate element name '" + names[i] + "'");
    }
    auto id_it = std::find(names.begin(), names.end(), identity_name);
    if (id_it == names.end())
        throw ValidationError("identity '" + identity_name + "' is not an element");
    const int e = static_cast<int>(id_it - names.begin());

    if (table.size() != n)
        throw ValidationError("multiplication table must have one row per element");
    for (const auto &row : table) {
        if (row.size() != n)
            throw ValidationError("multiplication table must be square");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw ValidationError("multiplication table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (table[static_cast<std::size_t>(e)][a] != static_cast<int>(a) ||
            table[a][static_cast<std::size_t>(e)] != static_cast<int>(a))
            throw ValidationError("identity '" + identity_name + "' is not two-sided");
    }
    // Latin square: every row and column is a permutation (gives cancellation
    // and unique inverses).
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<char> row_seen(n, 0), col_seen(n, 0);
        for (std::size_t b = 0; b < n; ++b) {
            row_seen[static_cast<std::size_t>(table[a][b])] = 1;
            col_seen[static_cast<std::size_t>(table[b][a])] = 1;
        }
        if (std::count(row_seen.begin(), row_seen.end(), 0) ||
            std::count(col_seen.begin(), col_seen.end(), 0))
            throw ValidationError("multiplication table is not a Latin square");
    }
    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
        const auto ab = static_cast<std::size_t>(table[a][b]);
        const auto bc = static_cast<std::size_t>(table[b][c]);
        return table[ab][c] == table[a][bc];
    };
    if (n <= 128) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (!assoc(a, b, c))
                        throw ValidationError("multiplication table is not associative");
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int t = 0; t < 200000; ++t)
            if (!assoc(pick(rng), pick(rng), pick(rng)))
                throw ValidationError("multiplication table is not associative");
    }

    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Table;
    impl->order = static_cast<std::int64_t>(n);
    impl->identity = e;
    impl->inverse.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] == e)
                impl->inverse[a] = static_cast<int>(b);
    impl->names = std::move(names);
    impl->table = std::move(table);
    return Group(std::move(impl));
}

Group Group::from_table_json(const std::string &json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
        return table(j.at("elements").get<std::vector<std::string>>(),
                     j.at("identity").get<std::string>(),
                     j.at("table").get<std::vector<std::vector<int>>>());
    } catch (const nlohmann::json::exception &ex) {
        throw ParseError(std::string("group table JSON: ") + ex.what());
    }
}

std::string Group::table_json() const {
    if (impl_->kind != Kind::Table)
        throw DomainError("only table groups serialize as a table");
    nlohmann::json j;
    j["elements"] = impl_->names;
    j["identity"] = impl_->names[static_cast<std::size_t>(impl_->identity)];
    j["table"] = impl_->table;
    return j.dump();
}

Group Group::parse_spec(const std::string &spec) {
    if (spec == "integers")
        return integers();
    if (spec.starts_with("cyclic:"))
        return cyclic(parse_int(spec.substr(7), "cyclic order"));
    if (spec.starts_with("table:")) {
        const auto path = spec.substr(6);
        std::ifstream in(path);
        if (!in)
            throw FileError("cannot open group table '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return from_table_json(ss.str());
    }
    throw ValidationError("unknown group spec '" + spec + "'");
}

Group::Kind Group::kind() const noexcept { return impl_->kind; }

bool Group::is_finite() const noexcept { return impl_->kind != Kind::Integers; }

bool Group::is_abelian() const {
    if (impl_->kind != Kind::Table)
        return true;
    const auto &t = impl_->table;
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = a + 1; b < t.size(); ++b)
            if (t[a][b] != t[b][a])
                return false;
    return true;
}

std::int64_t Group::order() const noexcept { return impl_->order; }

std::string Group::describe() const {
    switch (impl_->kind) {
    case Kind::Cyclic:
        return "cyclic:" + std::to_string(impl_->order);
    case Kind::Integers:
        return "integers";
    case Kind::Table:
        break;
    }
    return "table(" + std::to_string(impl_->order) + ")";
}

bool Group::owns(const GroupElement &a) const noexcept { return a.owner_ == impl_.get(); }

void Group::check(const GroupElement &a) const {
    if (!owns(a))
        throw DomainError("element does not belong to group " + describe());
}

GroupElement Group::identity() const {
    return GroupElement(impl_->kind == Kind::Table ? impl_->identity : 0, impl_.get());
}

GroupElement Group::element(std::int64_t value) const {
    switch (impl_->kind) {
    case Kind::Cyclic:
    case Kind::Table:
        if (value < 0 || value >= impl_->order)
            throw DomainError("element handle " + std::to_string(value) + " out of range for " +
                              describe());
        break;
    case Kind::Integers:
        break;
    }
    return GroupElement(value, impl_.get());
}

std::vector<GroupElement> Group::elements() const {
    if (!is_finite())
        throw DomainError("cannot list the elements of an infinite group");
    std::vector<GroupElement> out;
    for (std::int64_t v = 0; v < impl_->order; ++v)
        out.push_back(GroupElement(v, impl_.get()));
    return out;
}

GroupElement Group::mul(const GroupElement &a, const GroupElement &b) const {
    check(a);
    check(b);
    switch (impl_->kind) {
    case Kind::Cyclic:
        return GroupElement((a.value_ + b.value_) % impl_->order, impl_.get());
    case Kind::Integers:
        return GroupElement(a.value_ + b.value_, impl_.get());
    case Kind::Table:
        break;
    }
    return GroupElement(impl_->table[static_cast<std::size_t>(a.value_)]
                                    [static_cast<std::size_t>(b.value_)],
                        impl_.get());
}

GroupElement Group::inv(const GroupElement &a) const {
    check(a);
    switch (impl_->kind) {
    case Kind::Cyclic:
        return GroupElement(mod(-a.value_, impl_->order), impl_.get());
    case Kind::Integers:
        return GroupElement(-a.value_, impl_.get());
    case Kind::Table:
        break;
    }
    return GroupElement(impl_->inverse[static_cast<std::size_t>(a.value_)], impl_.get());
}

bool Group::is_identity(const GroupElement &a) const {
    check(a);
    return a == identity();
}

std::string Group::name(const GroupElement &a) const {
    check(a);
    switch (impl_->kind) {
    case Kind::Cyclic:
        if (a.value_ == 0)
            return "e";
        if (a.value_ == 1)
            return "s";
        return "s^" + std::to_string(a.value_);
    case Kind::Integers:
        return std::to_string(a.value_);
    case Kind::Table:
        break;
    }
    return impl_->names[static_cast<std::size_t>(a.value_)];
}

GroupElement Group::parse_element(const std::string &token) const {
    switch (impl_->kind) {
    case Kind::Cyclic:
        if (token == "e")
            return identity();
        if (token == "s")
            return GroupElement(mod(1, impl_->order), impl_.get());
        if (token.starts_with("s^"))
            return GroupElement(mod(parse_int(token.substr(2), "element"), impl_->order),
                                impl_.get());
        return GroupElement(mod(parse_int(token, "element"), impl_->order), impl_.get());
    case Kind::Integers:
        if (token == "e")
            return identity();
        return GroupElement(parse_int(token, "element"), impl_.get());
    case Kind::Table:
        break;
    }
    auto it = std::find(impl_->names.begin(), impl_->names.end(), token);
    if (it == impl_->names.end())
        throw ValidationError("unknown element '" + token + "'");
    return GroupElement(it - impl_->names.begin(), impl_.get());
}

} // namespace ncfusion
