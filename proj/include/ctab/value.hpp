#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ctab {

/// An opaque table entry: a token with total equality and ordering given by
/// its canonical text form.
class Value {
public:
    explicit Value(std::string text) : text_(std::move(text)) {}
    explicit Value(std::string_view text) : text_(text) {}
    explicit Value(const char* text) : text_(text) {}

    const std::string& text() const { return text_; }

    auto operator<=>(const Value&) const = default;

private:
    std::string text_;
};

std::ostream& operator<<(std::ostream&, const Value&);

/// A finite, duplicate-free, ordered set of values: the base G the algebra
/// is taken over. May be empty (the degenerate base).
class Base {
public:
    Base() = default;
    explicit Base(std::vector<Value> elems);

    /// One single-character value per letter, e.g. "ab" -> {a, b}.
    static Base letters(std::string_view letters);

    bool contains(const Value& v) const;
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    const std::vector<Value>& items() const { return elems_; }

    std::string to_string() const;

    bool operator==(const Base&) const = default;

private:
    std::vector<Value> elems_;  // sorted, duplicate-free
};

std::ostream& operator<<(std::ostream&, const Base&);

}  // namespace ctab
