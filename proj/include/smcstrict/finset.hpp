#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace smc {

// An element of a finite set. Composite spans build structured elements:
// pullback apexes hold pairs, coproduct apexes hold tagged injections.
// Structure matters: the canonical bijections of the span model are computed
// by rebuilding element shapes.
class FsElem {
  public:
    enum class Kind : std::uint8_t { Atom, Pair, InL, InR };

    FsElem() = default;

    static FsElem atom(std::string name);
    static FsElem pair(FsElem first, FsElem second);
    static FsElem inl(FsElem inner);
    static FsElem inr(FsElem inner);

    Kind kind() const { return node_->kind; }
    const std::string& name() const { return node_->name; }
    const FsElem& first() const { return node_->a; }
    const FsElem& second() const { return node_->b; }
    const FsElem& inner() const { return node_->a; }

    bool operator==(const FsElem& o) const;
    std::string to_string() const;

  private:
    struct Node {
        Kind kind;
        FsElem a, b;
        std::string name;
    };
    explicit FsElem(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// An ordered, duplicate-free finite set.
struct FinSetObj {
    std::vector<FsElem> elements;

    static FinSetObj of_atoms(const std::vector<std::string>& names);

    std::size_t size() const { return elements.size(); }
    std::optional<std::size_t> find(const FsElem& e) const;
    bool operator==(const FinSetObj& o) const;
    bool duplicate_free() const;
    std::string to_string() const;
};

}  // namespace smc
