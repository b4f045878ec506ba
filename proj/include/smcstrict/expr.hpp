#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>

namespace smc {

// A 1-cell expression over a signature: generators, horizontal composition
// (outer after inner), binary sums, the horizontal unit 1@a and the additive
// unit 0@a->b. Expressions are immutable trees with shared subterms; copying
// a OneCell copies a handle, not the tree. Generator references are by name
// and are resolved against a signature only when typing or evaluating.
class OneCell {
  public:
    enum class Kind : std::uint8_t { Gen, IdUnit, ZeroUnit, HComp, Sum };

    // Empty handle; usable only as a placeholder before assignment.
    OneCell() = default;

    static OneCell gen(std::string name);
    static OneCell id_unit(std::string zero_cell);
    static OneCell zero_unit(std::string src, std::string tgt);
    // outer \circ inner; inner applies first.
    static OneCell hcomp(OneCell outer, OneCell inner);
    static OneCell sum(OneCell left, OneCell right);

    Kind kind() const { return node_->kind; }

    const std::string& gen_name() const { return node_->s1; }   // Gen
    const std::string& unit_cell() const { return node_->s1; }  // IdUnit
    const std::string& zero_src() const { return node_->s1; }   // ZeroUnit
    const std::string& zero_tgt() const { return node_->s2; }   // ZeroUnit

    const OneCell& outer() const { return node_->a; }  // HComp
    const OneCell& inner() const { return node_->b; }  // HComp
    const OneCell& left() const { return node_->a; }   // Sum
    const OneCell& right() const { return node_->b; }  // Sum

    // Stable identity of the underlying node, usable as a memoization key
    // for as long as some handle keeps the node alive.
    const void* node_key() const { return node_.get(); }

    bool operator==(const OneCell& other) const;

  private:
    struct Node {
        Kind kind;
        OneCell a;  // HComp outer / Sum left
        OneCell b;  // HComp inner / Sum right
        std::string s1;
        std::string s2;
    };

    explicit OneCell(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

// Syntactic equality of expression trees. Unitors, associators etc. are
// 2-cells, never equalities: hcomp(f, id_unit(a)) != f.
bool expr_equal(const OneCell& a, const OneCell& b);

// DSL rendering with minimal parentheses: `*` for composition, `+` for sum,
// `1@a`, `0@a->b`. parse of the result reproduces the tree exactly.
std::string to_text(const OneCell& e);

// swaps composition order and endpoints; involutive.
OneCell opposite(const OneCell& e);

}  // namespace smc
