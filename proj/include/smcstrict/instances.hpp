#pragma once

#include <functional>
#include <unordered_map>
#include <variant>

#include "smcstrict/permcat.hpp"
#include "smcstrict/semiring.hpp"
#include "smcstrict/span.hpp"
#include "smcstrict/twocell.hpp"

namespace smc {

// Interpretation of a signature into Span(FinSet): a finite set per 0-cell,
// a span per generating 1-cell, and optionally an apex bijection per
// generating 2-cell.
struct SpanInstance {
    SmcSignature sig;
    std::vector<FinSetObj> zero_obj;                       // indexed by ZeroIx
    std::unordered_map<std::string, SpanCell> gen_assign;  // by generator name
    std::unordered_map<std::string, SpanBijection> gen2_assign;

    const FinSetObj& obj_of(ZeroIx z) const { return zero_obj[z]; }
};

// Interpretation into the free-permutative-category model: 1-cells act as
// strong symmetric monoidal functors, + is functor sum, * is composition.
struct PermInstance {
    SmcSignature sig;
    std::unordered_map<std::string, MonoidalFunctorData> gen_assign;
};

Nat eval_one_cell(const OneCell& e, const SemiringInstance& inst);
SpanCell eval_one_cell(const OneCell& e, const SpanInstance& inst);
MonoidalFunctorData eval_one_cell(const OneCell& e, const PermInstance& inst);

// Discrete hom-categories: a structural cell evaluates to the identity;
// boundaries that evaluate unequal raise NonDegenerate.
Nat eval_two_cell(const TwoCell& c, const SemiringInstance& inst);

// The concrete apex bijection realizing a structural cell in the span model.
SpanBijection eval_two_cell(const TwoCell& c, const SpanInstance& inst);

// A natural isomorphism in the functor model, by components.
struct PermNatIso {
    std::function<PermArrow(const Word&)> component;
};
PermNatIso eval_two_cell(const TwoCell& c, const PermInstance& inst);

// The strictly-unital right-multiplication of the single-object case:
// n (x)~ m is n (x) m unless n is the additive unit, which is absorbed.
Nat tilde_tensor(Nat n, Nat m);
Word tilde_tensor(const Word& n, const Word& m,
                  const std::function<Word(const Word&, const Word&)>& tensor);

using Instance = std::variant<SemiringInstance, SpanInstance, PermInstance>;

}  // namespace smc
