#include "ctab/table.hpp"

#include <algorithm>

#include "ctab/errors.hpp"

namespace ctab {

const VarSet& Schema::vars() const {
    if (all_) throw SchemaError("the all-variables schema has no finite variable set");
    return vars_;
}

std::string Schema::to_string() const {
    return all_ ? "*" : vars_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Schema& s) {
    return os << s.to_string();
}

Table Table::unit() {
    Table t;
    t.rows_.push_back(NamedTuple());
    return t;
}

Table Table::make(VarSet schema, std::vector<NamedTuple> rows) {
    if (rows.empty()) return Table::empty();
    for (const NamedTuple& row : rows) {
        if (row.domain() != schema)
            throw ConstructionError("row " + row.to_string() +
                                    " does not match schema " +
                                    schema.to_string());
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    Table t;
    t.schema_ = std::move(schema);
    t.rows_ = std::move(rows);
    return t;
}

Schema Table::schema() const {
    return is_empty() ? Schema::all() : Schema::finite(schema_);
}

const VarSet& Table::columns() const {
    if (is_empty()) throw SchemaError("the empty table has no finite schema");
    return schema_;
}

bool Table::contains_row(const NamedTuple& t) const {
    return std::binary_search(rows_.begin(), rows_.end(), t);
}

std::string Table::to_string() const {
    if (is_empty()) return "EMPTY";
    if (is_unit()) return "{()}";
    std::string out = "{";
    bool first_var = true;
    for (Variable x : schema_) {
        if (!first_var) out += " ";
        out += x.name();
        first_var = false;
    }
    for (const NamedTuple& row : rows_) {
        out += " |";
        for (const auto& [x, v] : row.entries()) out += " " + v.text();
    }
    out += "}";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Table& t) {
    return os << t.to_string();
}

bool extends_member(const NamedTuple& t, const Table& T) {
    if (T.is_empty()) return false;
    if (!T.columns().subset_of(t.domain())) return false;
    return T.contains_row(t.restricted(T.columns()));
}

}  // namespace ctab
