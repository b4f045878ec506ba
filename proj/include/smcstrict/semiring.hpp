#pragma once

#include <string>
#include <unordered_map>

#include "smcstrict/signature.hpp"

namespace smc {

// Exact natural-number carrier for the semiring model. 128 bits covers every
// expression the suites generate (products of at most 32 factors bounded
// by 9).
using Nat = unsigned __int128;

std::string nat_to_string(Nat n);
Nat nat_from_string(const std::string& s);

// Example-2.3 style model: a semiring seen as a one-object structure, with
// every hom-category discrete. Evaluation collapses all 0-cells, so any
// well-formed expression over `sig` can be evaluated; composition is
// multiplication and sum is addition.
struct SemiringInstance {
    SmcSignature sig;
    std::unordered_map<std::string, Nat> assign;
};

}  // namespace smc
