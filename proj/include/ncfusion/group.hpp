#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ncfusion {

class Group;

// Handle to an element of one particular Group: a residue for cyclic groups,
// the integer itself for Z, a row index for table groups. Elements compare by
// value; mixing handles of different Group objects in an operation raises
// DomainError.
class GroupElement {
public:
    GroupElement() = default;

    std::int64_t value() const noexcept { return value_; }

    friend bool operator==(const GroupElement &a, const GroupElement &b) noexcept {
        return a.value_ == b.value_;
    }
    friend auto operator<=>(const GroupElement &a, const GroupElement &b) noexcept {
        return a.value_ <=> b.value_;
    }

private:
    friend class Group;
    GroupElement(std::int64_t v, const void *owner) : value_(v), owner_(owner) {}

    std::int64_t value_ = 0;
    const void *owner_ = nullptr;
};

// Discrete group used for decorations and fusion words. Three flavours:
//   cyclic(s)   Z/sZ, elements named "e", "s", "s^2", ... (residues also parse)
//   integers()  Z, elements named by their decimal value ("e" parses as 0)
//   table(...)  finite group from an explicit multiplication table
// Copies share the same underlying data, so elements stay valid across copies.
class Group {
public:
    enum class Kind { Cyclic, Integers, Table };

    static Group cyclic(std::int64_t order);
    static Group integers();
    // table[a][b] is the index of a*b. Throws ValidationError unless the table
    // defines a group.
    static Group table(std::vector<std::string> names, const std::string &identity_name,
                       std::vector<std::vector<int>> table);

    // "cyclic:<s>", "integers", "table:<path>"
    static Group parse_spec(const std::string &spec);
    static Group from_table_json(const std::string &json_text);
    std::string table_json() const;

    Kind kind() const noexcept;
    bool is_finite() const noexcept;
    bool is_abelian() const;
    // Number of elements; 0 for Z.
    std::int64_t order() const noexcept;
    std::string describe() const;

    GroupElement identity() const;
    GroupElement mul(const GroupElement &a, const GroupElement &b) const;
    GroupElement inv(const GroupElement &a) const;
    bool is_identity(const GroupElement &a) const;

    // Element from its handle value (residue, integer, or table index).
    GroupElement element(std::int64_t value) const;
    // All elements of a finite group in handle order.
    std::vector<GroupElement> elements() const;

    std::string name(const GroupElement &a) const;
    GroupElement parse_element(const std::string &token) const;

    bool owns(const GroupElement &a) const noexcept;

private:
    struct Impl;
    explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    void check(const GroupElement &a) const;

    std::shared_ptr<const Impl> impl_;
};

} // namespace ncfusion
