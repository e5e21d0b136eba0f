#include "ctab/formula.hpp"

#include <cassert>

#include "ctab/errors.hpp"

namespace ctab {

struct Formula::Node {
    Kind kind;
    std::vector<Variable> vars;  // Eq: {x, y}; Rel: args; Exists: {bound}
    std::string name;            // Rel only
    std::shared_ptr<const Node> left;   // And lhs / Exists body
    std::shared_ptr<const Node> right;  // And rhs
};

namespace {

std::shared_ptr<Formula::Node> make_node(Formula::Kind kind,
                                         std::vector<Variable> vars = {},
                                         std::string name = {}) {
    auto node = std::make_shared<Formula::Node>();
    node->kind = kind;
    node->vars = std::move(vars);
    node->name = std::move(name);
    return node;
}

}  // namespace

Formula Formula::truth() { return Formula(make_node(Kind::True)); }
Formula Formula::falsity() { return Formula(make_node(Kind::False)); }

Formula Formula::eq(Variable x, Variable y) {
    return Formula(make_node(Kind::Eq, {x, y}));
}

Formula Formula::rel(std::string name, std::vector<Variable> args) {
    if (name.empty()) throw ConstructionError("relation atom needs a name");
    if (args.empty())
        throw ConstructionError("relation atom " + name + " needs arguments");
    return Formula(make_node(Kind::Rel, std::move(args), std::move(name)));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
    auto node = make_node(Kind::And);
    node->left = lhs.node_;
    node->right = rhs.node_;
    return Formula(std::move(node));
}

Formula Formula::exists(Variable x, Formula body) {
    auto node = make_node(Kind::Exists, {x});
    node->left = body.node_;
    return Formula(std::move(node));
}

Formula::Kind Formula::kind() const { return node_->kind; }

Variable Formula::eq_lhs() const {
    assert(kind() == Kind::Eq);
    return node_->vars[0];
}

Variable Formula::eq_rhs() const {
    assert(kind() == Kind::Eq);
    return node_->vars[1];
}

const std::string& Formula::rel_name() const {
    assert(kind() == Kind::Rel);
    return node_->name;
}

std::span<const Variable> Formula::rel_args() const {
    assert(kind() == Kind::Rel);
    return node_->vars;
}

Formula Formula::and_lhs() const {
    assert(kind() == Kind::And);
    return Formula(node_->left);
}

Formula Formula::and_rhs() const {
    assert(kind() == Kind::And);
    return Formula(node_->right);
}

Variable Formula::bound() const {
    assert(kind() == Kind::Exists);
    return node_->vars[0];
}

Formula Formula::body() const {
    assert(kind() == Kind::Exists);
    return Formula(node_->left);
}

VarSet Formula::free_variables() const {
    switch (kind()) {
        case Kind::True:
        case Kind::False:
            return {};
        case Kind::Eq:
            return VarSet{eq_lhs(), eq_rhs()};
        case Kind::Rel:
            return VarSet(std::vector<Variable>(node_->vars));
        case Kind::And:
            return and_lhs().free_variables().unioned(
                and_rhs().free_variables());
        case Kind::Exists:
            return body().free_variables().without(bound());
    }
    return {};
}

namespace {

// And children that are themselves Exists (or right-nested Ands) need
// parentheses to re-parse to the same tree.
void print(const Formula& f, std::string& out, bool parenthesize_exists,
           bool parenthesize_and) {
    switch (f.kind()) {
        case Formula::Kind::True:
            out += "true";
            return;
        case Formula::Kind::False:
            out += "false";
            return;
        case Formula::Kind::Eq:
            out += f.eq_lhs().name() + " = " + f.eq_rhs().name();
            return;
        case Formula::Kind::Rel: {
            out += f.rel_name() + "(";
            auto args = f.rel_args();
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (i > 0) out += ", ";
                out += args[i].name();
            }
            out += ")";
            return;
        }
        case Formula::Kind::And: {
            if (parenthesize_and) out += "(";
            print(f.and_lhs(), out, true, false);
            out += " & ";
            print(f.and_rhs(), out, true, true);
            if (parenthesize_and) out += ")";
            return;
        }
        case Formula::Kind::Exists: {
            if (parenthesize_exists) out += "(";
            out += "exists " + f.bound().name();
            Formula body = f.body();
            while (body.kind() == Formula::Kind::Exists) {
                out += ", " + body.bound().name();
                body = body.body();
            }
            out += " . ";
            print(body, out, false, false);
            if (parenthesize_exists) out += ")";
            return;
        }
    }
}

}  // namespace

std::string Formula::to_string() const {
    std::string out;
    print(*this, out, false, false);
    return out;
}

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) return true;
    if (kind() != other.kind()) return false;
    switch (kind()) {
        case Kind::True:
        case Kind::False:
            return true;
        case Kind::Eq:
            return eq_lhs() == other.eq_lhs() && eq_rhs() == other.eq_rhs();
        case Kind::Rel:
            return rel_name() == other.rel_name() &&
                   node_->vars == other.node_->vars;
        case Kind::And:
            return and_lhs() == other.and_lhs() && and_rhs() == other.and_rhs();
        case Kind::Exists:
            return bound() == other.bound() && body() == other.body();
    }
    return false;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
    return os << f.to_string();
}

}  // namespace ctab
