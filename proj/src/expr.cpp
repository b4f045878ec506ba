#include "smcstrict/expr.hpp"

namespace smc {

OneCell OneCell::gen(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Gen;
    n->s1 = std::move(name);
    return OneCell(std::move(n));
}

OneCell OneCell::id_unit(std::string zero_cell) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::IdUnit;
    n->s1 = std::move(zero_cell);
    return OneCell(std::move(n));
}

OneCell OneCell::zero_unit(std::string src, std::string tgt) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::ZeroUnit;
    n->s1 = std::move(src);
    n->s2 = std::move(tgt);
    return OneCell(std::move(n));
}

OneCell OneCell::hcomp(OneCell outer, OneCell inner) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::HComp;
    n->a = std::move(outer);
    n->b = std::move(inner);
    return OneCell(std::move(n));
}

OneCell OneCell::sum(OneCell left, OneCell right) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sum;
    n->a = std::move(left);
    n->b = std::move(right);
    return OneCell(std::move(n));
}

bool expr_equal(const OneCell& a, const OneCell& b) {
    if (a.node_key() == b.node_key()) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case OneCell::Kind::Gen:
            return a.gen_name() == b.gen_name();
        case OneCell::Kind::IdUnit:
            return a.unit_cell() == b.unit_cell();
        case OneCell::Kind::ZeroUnit:
            return a.zero_src() == b.zero_src() && a.zero_tgt() == b.zero_tgt();
        case OneCell::Kind::HComp:
            return expr_equal(a.outer(), b.outer()) && expr_equal(a.inner(), b.inner());
        case OneCell::Kind::Sum:
            return expr_equal(a.left(), b.left()) && expr_equal(a.right(), b.right());
    }
    return false;
}

bool OneCell::operator==(const OneCell& other) const { return expr_equal(*this, other); }

namespace {

// Parenthesization against a left-associating parser where '*' binds
// tighter than '+': right-nested chains and sums under composition need
// parens, everything else round-trips bare.
enum class Slot { Top, SumLeft, SumRight, CompLeft, CompRight };

void print(const OneCell& e, Slot slot, std::string& out) {
    const auto kind = e.kind();
    bool parens = false;
    if (kind == OneCell::Kind::Sum)
        parens = slot == Slot::SumRight || slot == Slot::CompLeft || slot == Slot::CompRight;
    else if (kind == OneCell::Kind::HComp)
        parens = slot == Slot::CompRight;
    if (parens) out += '(';
    switch (kind) {
        case OneCell::Kind::Gen:
            out += e.gen_name();
            break;
        case OneCell::Kind::IdUnit:
            out += "1@";
            out += e.unit_cell();
            break;
        case OneCell::Kind::ZeroUnit:
            out += "0@";
            out += e.zero_src();
            out += "->";
            out += e.zero_tgt();
            break;
        case OneCell::Kind::HComp:
            print(e.outer(), Slot::CompLeft, out);
            out += " * ";
            print(e.inner(), Slot::CompRight, out);
            break;
        case OneCell::Kind::Sum:
            print(e.left(), Slot::SumLeft, out);
            out += " + ";
            print(e.right(), Slot::SumRight, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string to_text(const OneCell& e) {
    std::string out;
    print(e, Slot::Top, out);
    return out;
}

OneCell opposite(const OneCell& e) {
    switch (e.kind()) {
        case OneCell::Kind::Gen:
            return e;
        case OneCell::Kind::IdUnit:
            return e;
        case OneCell::Kind::ZeroUnit:
            return OneCell::zero_unit(e.zero_tgt(), e.zero_src());
        case OneCell::Kind::HComp:
            return OneCell::hcomp(opposite(e.inner()), opposite(e.outer()));
        case OneCell::Kind::Sum:
            return OneCell::sum(opposite(e.left()), opposite(e.right()));
    }
    return e;  // unreachable
}

}  // namespace smc
