#include "ctab/render.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "ctab/errors.hpp"

namespace ctab {

namespace {

constexpr std::string_view kEmptyMarker = "EMPTY schema=*";
constexpr std::string_view kUnitMarker = "()";

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == sep) {
            out.push_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            out.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

}  // namespace

std::string to_tsv(const Table& T) {
    if (T.is_empty()) return std::string(kEmptyMarker) + "\n";
    if (T.is_unit()) return std::string(kUnitMarker) + "\n";
    std::string out;
    bool first = true;
    for (Variable x : T.columns()) {
        if (!first) out += "\t";
        out += x.name();
        first = false;
    }
    out += "\n";
    for (const NamedTuple& row : T.rows()) {
        first = true;
        for (const auto& [x, v] : row.entries()) {
            if (!first) out += "\t";
            out += v.text();
            first = false;
        }
        out += "\n";
    }
    return out;
}

Table parse_tsv(std::string_view text) {
    auto lines = lines_of(text);
    if (lines.empty()) throw ParseError("empty table text", 1, 1);
    if (lines[0] == kEmptyMarker) return Table::empty();
    if (lines[0] == kUnitMarker) return Table::unit();
    auto header = split(lines[0], '\t');
    std::vector<Variable> vars;
    vars.reserve(header.size());
    for (auto name : header) {
        if (name.empty()) throw ParseError("empty column name in header", 1, 1);
        vars.push_back(Variable::named(name));
    }
    VarSet schema(vars);
    if (schema.size() != vars.size())
        throw ParseError("duplicate column name in header", 1, 1);
    std::vector<NamedTuple> rows;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        auto cells = split(lines[li], '\t');
        if (cells.size() != vars.size())
            throw ParseError("row has " + std::to_string(cells.size()) +
                                 " cells, expected " +
                                 std::to_string(vars.size()),
                             li + 1, 1);
        std::vector<NamedTuple::Entry> entries;
        entries.reserve(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i)
            entries.emplace_back(vars[i], Value(std::string(cells[i])));
        rows.push_back(NamedTuple::of(std::move(entries)));
    }
    if (rows.empty())
        throw ParseError("table with a header needs at least one row", 1, 1);
    return Table::make(std::move(schema), std::move(rows));
}

std::string to_pretty(const Table& T) {
    if (T.is_empty()) return std::string(kEmptyMarker) + "\n";
    if (T.is_unit()) return std::string(kUnitMarker) + "\n";
    std::vector<std::size_t> widths;
    std::vector<std::string> names;
    for (Variable x : T.columns()) {
        names.push_back(x.name());
        widths.push_back(names.back().size());
    }
    for (const NamedTuple& row : T.rows()) {
        std::size_t i = 0;
        for (const auto& [x, v] : row.entries()) {
            widths[i] = std::max(widths[i], v.text().size());
            ++i;
        }
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size(), ' ');
    };
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i)
        out += (i ? " | " : "") + pad(names[i], widths[i]);
    out += "\n";
    for (std::size_t i = 0; i < names.size(); ++i)
        out += (i ? "-+-" : "") + std::string(widths[i], '-');
    out += "\n";
    for (const NamedTuple& row : T.rows()) {
        std::size_t i = 0;
        for (const auto& [x, v] : row.entries()) {
            out += (i ? " | " : "") + pad(v.text(), widths[i]);
            ++i;
        }
        out += "\n";
    }
    return out;
}

namespace {

[[noreturn]] void structure_fail(const std::string& msg, std::size_t line) {
    throw ParseError("structure line " + std::to_string(line) + ": " + msg,
                     line, 1);
}

std::vector<std::string> tokens_of(std::string_view text, std::size_t line) {
    std::vector<std::string> out;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            out.push_back(current);
            current.clear();
        }
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else if (c == '(' || c == ')' || c == ',') {
            flush();
            out.push_back(std::string(1, c));
        } else if (c == '#') {
            break;
        } else {
            current += c;
        }
    }
    flush();
    (void)line;
    return out;
}

}  // namespace

Structure parse_structure(std::string_view text) {
    bool have_base = false;
    Base base;
    std::map<std::string, Relation> relations;

    auto lines = lines_of(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::size_t lineno = li + 1;
        std::string_view line = lines[li];
        auto hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        line = line.substr(first);

        if (line.rfind("base:", 0) == 0) {
            if (have_base) structure_fail("duplicate base line", lineno);
            std::vector<Value> elems;
            for (const auto& tok : tokens_of(line.substr(5), lineno)) {
                if (tok == "(" || tok == ")" || tok == ",")
                    structure_fail("unexpected '" + tok + "' in base line",
                                   lineno);
                elems.emplace_back(tok);
            }
            base = Base(std::move(elems));
            have_base = true;
            continue;
        }
        if (line.rfind("rel ", 0) == 0) {
            if (!have_base)
                structure_fail("relation declared before the base", lineno);
            std::string_view rest = line.substr(4);
            auto slash = rest.find('/');
            auto colon = rest.find(':');
            if (slash == std::string_view::npos || colon == std::string_view::npos ||
                colon < slash)
                structure_fail("expected 'rel NAME/ARITY: (tuples)'", lineno);
            std::string name(rest.substr(0, slash));
            std::size_t arity = 0;
            {
                std::string digits(rest.substr(slash + 1, colon - slash - 1));
                if (digits.empty() ||
                    digits.find_first_not_of("0123456789") != std::string::npos)
                    structure_fail("bad arity '" + digits + "'", lineno);
                arity = static_cast<std::size_t>(std::stoul(digits));
            }
            if (relations.count(name))
                structure_fail("duplicate relation " + name, lineno);

            Relation rel;
            rel.arity = arity;
            auto toks = tokens_of(rest.substr(colon + 1), lineno);
            std::size_t i = 0;
            while (i < toks.size()) {
                if (toks[i] != "(")
                    structure_fail("expected '(' to open a tuple", lineno);
                ++i;
                std::vector<Value> tuple;
                if (i < toks.size() && toks[i] == ")") {
                    ++i;  // the empty tuple "()"
                } else {
                    for (;;) {
                        if (i >= toks.size() || toks[i] == "(" || toks[i] == ")" ||
                            toks[i] == ",")
                            structure_fail("expected a value in tuple", lineno);
                        tuple.emplace_back(toks[i]);
                        ++i;
                        if (i >= toks.size())
                            structure_fail("unterminated tuple", lineno);
                        if (toks[i] == ")") {
                            ++i;
                            break;
                        }
                        if (toks[i] != ",")
                            structure_fail("expected ',' or ')' in tuple",
                                           lineno);
                        ++i;
                    }
                }
                rel.tuples.push_back(std::move(tuple));
            }
            relations.emplace(std::move(name), std::move(rel));
            continue;
        }
        structure_fail("unrecognized line", lineno);
    }
    if (!have_base) throw ParseError("structure has no base line", 1, 1);
    try {
        return Structure::make(std::move(base), std::move(relations));
    } catch (const ConstructionError& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

Structure load_structure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open structure file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_structure(buf.str());
}

}  // namespace ctab
