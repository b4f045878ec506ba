#include "smcstrict/finset.hpp"

namespace smc {

FsElem FsElem::atom(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Atom;
    n->name = std::move(name);
    return FsElem(std::move(n));
}

FsElem FsElem::pair(FsElem first, FsElem second) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Pair;
    n->a = std::move(first);
    n->b = std::move(second);
    return FsElem(std::move(n));
}

FsElem FsElem::inl(FsElem inner) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::InL;
    n->a = std::move(inner);
    return FsElem(std::move(n));
}

FsElem FsElem::inr(FsElem inner) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::InR;
    n->a = std::move(inner);
    return FsElem(std::move(n));
}

bool FsElem::operator==(const FsElem& o) const {
    if (node_.get() == o.node_.get()) return true;
    if (kind() != o.kind()) return false;
    switch (kind()) {
        case Kind::Atom:
            return name() == o.name();
        case Kind::Pair:
            return first() == o.first() && second() == o.second();
        case Kind::InL:
        case Kind::InR:
            return inner() == o.inner();
    }
    return false;
}

std::string FsElem::to_string() const {
    switch (kind()) {
        case Kind::Atom:
            return name();
        case Kind::Pair:
            return "(" + first().to_string() + "," + second().to_string() + ")";
        case Kind::InL:
            return "l." + inner().to_string();
        case Kind::InR:
            return "r." + inner().to_string();
    }
    return "?";
}

FinSetObj FinSetObj::of_atoms(const std::vector<std::string>& names) {
    FinSetObj out;
    out.elements.reserve(names.size());
    for (const auto& n : names) out.elements.push_back(FsElem::atom(n));
    return out;
}

std::optional<std::size_t> FinSetObj::find(const FsElem& e) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == e) return i;
    return std::nullopt;
}

bool FinSetObj::operator==(const FinSetObj& o) const { return elements == o.elements; }

bool FinSetObj::duplicate_free() const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = i + 1; j < elements.size(); ++j)
            if (elements[i] == elements[j]) return false;
    return true;
}

std::string FinSetObj::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i) out += ", ";
        out += elements[i].to_string();
    }
    return out + "}";
}

}  // namespace smc
