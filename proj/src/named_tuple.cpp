#include "ctab/named_tuple.hpp"

#include <algorithm>

#include "ctab/errors.hpp"

namespace ctab {

NamedTuple NamedTuple::of(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i - 1].first == entries[i].first)
            throw ConstructionError("duplicate variable " +
                                    entries[i].first.name() + " in tuple");
    }
    NamedTuple t;
    t.entries_ = std::move(entries);
    return t;
}

VarSet NamedTuple::domain() const {
    std::vector<Variable> vars;
    vars.reserve(entries_.size());
    for (const Entry& e : entries_) vars.push_back(e.first);
    return VarSet(std::move(vars));
}

bool NamedTuple::has(Variable x) const { return find(x) != nullptr; }

const Value* NamedTuple::find(Variable x) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), x,
        [](const Entry& e, const Variable& v) { return e.first < v; });
    if (it == entries_.end() || it->first != x) return nullptr;
    return &it->second;
}

const Value& NamedTuple::at(Variable x) const {
    const Value* v = find(x);
    if (v == nullptr)
        throw DomainError("tuple " + to_string() + " has no entry for " +
                          x.name());
    return *v;
}

NamedTuple NamedTuple::restricted(const VarSet& X) const {
    std::vector<Entry> out;
    out.reserve(X.size());
    VarSet missing;
    for (Variable x : X) {
        const Value* v = find(x);
        if (v == nullptr)
            missing = missing.with(x);
        else
            out.emplace_back(x, *v);
    }
    if (!missing.empty())
        throw DomainError("restriction of " + to_string() +
                          " is missing variables " + missing.to_string());
    NamedTuple t;
    t.entries_ = std::move(out);  // subset of a sorted list stays sorted
    return t;
}

NamedTuple NamedTuple::merged(const NamedTuple& other) const {
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
        if (a->first < b->first) {
            out.push_back(*a++);
        } else if (b->first < a->first) {
            out.push_back(*b++);
        } else {
            if (a->second != b->second)
                throw ConstructionError("tuples disagree on " +
                                        a->first.name());
            out.push_back(*a);
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, entries_.end());
    out.insert(out.end(), b, other.entries_.end());
    NamedTuple t;
    t.entries_ = std::move(out);
    return t;
}

std::string NamedTuple::to_string() const {
    if (entries_.empty()) return "()";
    std::string out = "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) out += ", ";
        out += entries_[i].first.name() + "=" + entries_[i].second.text();
    }
    out += "}";
    return out;
}

std::ostream& operator<<(std::ostream& os, const NamedTuple& t) {
    return os << t.to_string();
}

}  // namespace ctab
