#include "ctab/value.hpp"

#include <algorithm>

namespace ctab {

std::ostream& operator<<(std::ostream& os, const Value& v) {
    return os << v.text();
}

Base::Base(std::vector<Value> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

Base Base::letters(std::string_view letters) {
    std::vector<Value> elems;
    elems.reserve(letters.size());
    for (char c : letters) elems.emplace_back(std::string(1, c));
    return Base(std::move(elems));
}

bool Base::contains(const Value& v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

std::string Base::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i > 0) out += ", ";
        out += elems_[i].text();
    }
    out += "}";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Base& b) {
    return os << b.to_string();
}

}  // namespace ctab
