#include "ctab/algebra.hpp"

#include <algorithm>
#include <unordered_map>

#include "ctab/errors.hpp"

namespace ctab {

namespace {

std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

struct KeyHash {
    std::size_t operator()(const std::vector<Value>& key) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (const Value& v : key)
            h = hash_mix(h, std::hash<std::string>{}(v.text()));
        return static_cast<std::size_t>(h);
    }
};

std::vector<Value> key_of(const NamedTuple& t, const VarSet& vars) {
    std::vector<Value> key;
    key.reserve(vars.size());
    for (Variable x : vars) key.push_back(t.at(x));
    return key;
}

}  // namespace

std::vector<NamedTuple> enumerate_tuples(const VarSet& X, const Base& G) {
    if (X.empty()) return {NamedTuple()};
    if (G.empty()) return {};
    const auto& vars = X.items();
    const auto& vals = G.items();
    std::vector<std::size_t> odo(vars.size(), 0);
    std::vector<NamedTuple> out;
    for (;;) {
        std::vector<NamedTuple::Entry> entries;
        entries.reserve(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i)
            entries.emplace_back(vars[i], vals[odo[i]]);
        out.push_back(NamedTuple::of(std::move(entries)));
        std::size_t i = vars.size();
        while (i > 0) {
            --i;
            if (++odo[i] < vals.size()) break;
            odo[i] = 0;
            if (i == 0) return out;
        }
    }
}

Table join(const Table& T1, const Table& T2) {
    if (T1.is_empty() || T2.is_empty()) return Table::empty();
    const VarSet& X1 = T1.columns();
    const VarSet& X2 = T2.columns();
    VarSet shared = X1.intersected(X2);

    // Index the smaller side by its shared-column values.
    const Table& build = T1.row_count() <= T2.row_count() ? T1 : T2;
    const Table& probe = T1.row_count() <= T2.row_count() ? T2 : T1;
    std::unordered_map<std::vector<Value>, std::vector<const NamedTuple*>, KeyHash>
        index;
    for (const NamedTuple& t : build.rows())
        index[key_of(t, shared)].push_back(&t);

    std::vector<NamedTuple> rows;
    for (const NamedTuple& t : probe.rows()) {
        auto it = index.find(key_of(t, shared));
        if (it == index.end()) continue;
        for (const NamedTuple* partner : it->second)
            rows.push_back(t.merged(*partner));
    }
    return Table::make(X1.unioned(X2), std::move(rows));
}

Table delete_column(Variable x, const Table& T) {
    if (T.is_empty()) return T;
    if (!T.columns().contains(x)) return T;
    VarSet kept = T.columns().without(x);
    std::vector<NamedTuple> rows;
    rows.reserve(T.row_count());
    for (const NamedTuple& t : T.rows()) rows.push_back(t.restricted(kept));
    return Table::make(std::move(kept), std::move(rows));
}

Table delete_columns(const VarSet& Z, const Table& T) {
    Table out = T;
    for (Variable x : Z) out = delete_column(x, out);
    return out;
}

Table project(const VarSet& Y, const Table& T) {
    if (T.is_empty()) return T;
    if (!Y.subset_of(T.columns()))
        throw SchemaError("projection onto " + Y.to_string() +
                          " is not contained in the schema " +
                          T.columns().to_string() + "; extra variables " +
                          Y.minus(T.columns()).to_string());
    return delete_columns(T.columns().minus(Y), T);
}

Table select_eq(Variable x, Variable y, const Table& T) {
    if (T.is_empty()) return T;
    for (Variable v : {x, y}) {
        if (!T.columns().contains(v))
            throw SchemaError("selection " + x.name() + "=" + y.name() +
                              " needs column " + v.name() + " in schema " +
                              T.columns().to_string());
    }
    std::vector<NamedTuple> rows;
    for (const NamedTuple& t : T.rows())
        if (t.at(x) == t.at(y)) rows.push_back(t);
    return Table::make(T.columns(), std::move(rows));
}

bool table_leq(const Table& T1, const Table& T2) { return T1 == join(T1, T2); }

Schema dom(const Table& T) { return T.schema(); }

VarSet dim(const Table& T, const VarSet& probe) {
    std::vector<Variable> out;
    for (Variable x : probe)
        if (delete_column(x, T) != T) out.push_back(x);
    return VarSet(std::move(out));
}

VarSet dim(const Table& T) {
    VarSet probe = T.is_empty() ? VarSet{} : T.columns();
    for (Variable x : fresh_variables(probe, 2)) probe = probe.with(x);
    return dim(T, probe);
}

Table TableAlgebra::equality_table(Variable x, Variable y) const {
    std::vector<NamedTuple> rows;
    rows.reserve(base_.size());
    for (const Value& g : base_) {
        if (x == y)
            rows.push_back(NamedTuple::of({{x, g}}));
        else
            rows.push_back(NamedTuple::of({{x, g}, {y, g}}));
    }
    return Table::make(x == y ? VarSet{x} : VarSet{x, y}, std::move(rows));
}

Table TableAlgebra::equality_table(std::span<const VarPair> pairs) const {
    Table out = Table::unit();
    for (const auto& [x, y] : pairs) out = join(out, equality_table(x, y));
    return out;
}

Table TableAlgebra::duplicate(Variable x, Variable y, const Table& T) const {
    if (x == y)
        throw SchemaError("duplicate needs distinct variables, got " + x.name());
    if (!T.is_empty()) {
        if (!T.columns().contains(x))
            throw SchemaError("duplicate source " + x.name() +
                              " is not a column of " + T.columns().to_string());
        if (T.columns().contains(y))
            throw SchemaError("duplicate target " + y.name() +
                              " is already a column of " +
                              T.columns().to_string());
    }
    return join(T, equality_table(x, y));
}

Table TableAlgebra::rename(Variable x, Variable y, const Table& T) const {
    if (x == y)
        throw SchemaError("rename needs distinct variables, got " + x.name());
    if (!T.is_empty()) {
        if (!T.columns().contains(x))
            throw SchemaError("rename source " + x.name() +
                              " is not a column of " + T.columns().to_string());
        if (T.columns().contains(y))
            throw SchemaError("rename target " + y.name() +
                              " is already a column of " +
                              T.columns().to_string());
    }
    return delete_column(x, join(T, equality_table(x, y)));
}

Table TableAlgebra::select_const(Variable x, const Value& g,
                                 const Table& T) const {
    if (!base_.contains(g))
        throw ValueError("value '" + g.text() + "' is not in the base " +
                         base_.to_string());
    if (T.is_empty()) return T;
    if (!T.columns().contains(x))
        throw SchemaError("selection " + x.name() + "='" + g.text() +
                          "' needs column " + x.name() + " in schema " +
                          T.columns().to_string());
    std::vector<NamedTuple> rows;
    for (const NamedTuple& t : T.rows())
        if (t.at(x) == g) rows.push_back(t);
    return Table::make(T.columns(), std::move(rows));
}

}  // namespace ctab
