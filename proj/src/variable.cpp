#include "ctab/variable.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "ctab/errors.hpp"

namespace ctab {

namespace {

constexpr std::uint64_t kNamedBase = std::uint64_t{1} << 32;

struct Registry {
    std::mutex mutex;
    std::unordered_map<std::string, std::uint64_t> by_name;
    std::unordered_map<std::uint64_t, std::string> by_id;
    std::uint64_t next = kNamedBase;
};

Registry& registry() {
    static Registry r;
    return r;
}

// "x<k>", k >= 1, no leading zero.
bool parse_canonical(std::string_view name, std::uint64_t& k) {
    if (name.size() < 2 || name[0] != 'x') return false;
    std::string_view digits = name.substr(1);
    if (digits[0] == '0') return false;
    std::uint64_t value = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') return false;
        if (value > (UINT64_MAX - (c - '0')) / 10) return false;
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    k = value;
    return true;
}

}  // namespace

Variable Variable::indexed(std::uint64_t k) {
    if (k == 0) throw ConstructionError("variable index must be >= 1");
    return Variable(k);
}

Variable Variable::named(std::string_view name) {
    if (name.empty()) throw ConstructionError("variable name must be nonempty");
    std::uint64_t k = 0;
    if (parse_canonical(name, k)) {
        if (k >= kNamedBase)
            throw ConstructionError("variable index too large: " + std::string(name));
        return Variable(k);
    }
    Registry& r = registry();
    std::scoped_lock lock(r.mutex);
    auto it = r.by_name.find(std::string(name));
    if (it != r.by_name.end()) return Variable(it->second);
    std::uint64_t id = r.next++;
    r.by_name.emplace(std::string(name), id);
    r.by_id.emplace(id, std::string(name));
    return Variable(id);
}

std::string Variable::name() const {
    if (id_ >= kNamedBase) {
        Registry& r = registry();
        std::scoped_lock lock(r.mutex);
        auto it = r.by_id.find(id_);
        if (it != r.by_id.end()) return it->second;
    }
    return "x" + std::to_string(id_);
}

std::ostream& operator<<(std::ostream& os, const Variable& v) {
    return os << v.name();
}

VarSet::VarSet(std::initializer_list<Variable> vars)
    : VarSet(std::vector<Variable>(vars)) {}

VarSet::VarSet(std::vector<Variable> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

bool VarSet::contains(Variable x) const {
    return std::binary_search(vars_.begin(), vars_.end(), x);
}

bool VarSet::subset_of(const VarSet& other) const {
    return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(),
                         vars_.end());
}

VarSet VarSet::unioned(const VarSet& other) const {
    std::vector<Variable> out;
    out.reserve(vars_.size() + other.vars_.size());
    std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(),
                   other.vars_.end(), std::back_inserter(out));
    VarSet result;
    result.vars_ = std::move(out);
    return result;
}

VarSet VarSet::intersected(const VarSet& other) const {
    std::vector<Variable> out;
    std::set_intersection(vars_.begin(), vars_.end(), other.vars_.begin(),
                          other.vars_.end(), std::back_inserter(out));
    VarSet result;
    result.vars_ = std::move(out);
    return result;
}

VarSet VarSet::minus(const VarSet& other) const {
    std::vector<Variable> out;
    std::set_difference(vars_.begin(), vars_.end(), other.vars_.begin(),
                        other.vars_.end(), std::back_inserter(out));
    VarSet result;
    result.vars_ = std::move(out);
    return result;
}

VarSet VarSet::with(Variable x) const { return unioned(VarSet{x}); }

VarSet VarSet::without(Variable x) const { return minus(VarSet{x}); }

std::string VarSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i > 0) out += ", ";
        out += vars_[i].name();
    }
    out += "}";
    return out;
}

std::ostream& operator<<(std::ostream& os, const VarSet& vs) {
    return os << vs.to_string();
}

std::vector<Variable> fresh_variables(const VarSet& avoid, std::size_t count,
                                      std::size_t offset) {
    std::vector<Variable> out;
    out.reserve(count);
    std::uint64_t id = 1;
    std::size_t to_skip = offset;
    while (out.size() < count) {
        Variable candidate = Variable::indexed(id++);
        if (avoid.contains(candidate)) continue;
        if (to_skip > 0) {
            --to_skip;
            continue;
        }
        out.push_back(candidate);
    }
    return out;
}

}  // namespace ctab
