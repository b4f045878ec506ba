#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace smc {

// The free permutative category on a letter set: objects are words over the
// letters, tensor is concatenation with the empty word as strict unit, and
// morphisms are letter-preserving permutations.
using Word = std::vector<std::string>;

std::string word_to_string(const Word& w);
Word word_concat(const Word& x, const Word& y);

// A morphism src -> tgt: perm[i] is the target position of source letter i,
// with tgt[perm[i]] == src[i].
struct PermArrow {
    Word src;
    Word tgt;
    std::vector<std::size_t> perm;

    bool valid() const;
    bool is_identity() const;
    bool operator==(const PermArrow& o) const {
        return src == o.src && tgt == o.tgt && perm == o.perm;
    }
};

PermArrow perm_identity(Word w);
PermArrow perm_inverse(const PermArrow& a);
// g after f
PermArrow perm_compose(const PermArrow& g, const PermArrow& f);
// block sum, left block first
PermArrow perm_tensor(const PermArrow& a, const PermArrow& b);
// the symmetry x ++ y -> y ++ x
PermArrow perm_symmetry(const Word& x, const Word& y);

struct PermCatInstance {
    std::vector<std::string> letters;

    // all words of length <= max_len over the letters, shortest first,
    // letters in declaration order
    std::vector<Word> objects_up_to(std::size_t max_len) const;
};

// A strong symmetric monoidal endo-functor datum between free permutative
// categories, carried as closures so that sums, composites and the
// strictly-unital replacement stay first-class values.
//   structure_iso(x, y) : F(x) ++ F(y)  ->  F(x ++ y)
//   unit_iso            : u2 -> F(u1)
struct MonoidalFunctorData {
    std::function<Word(const Word&)> object_map;
    std::function<PermArrow(const PermArrow&)> morphism_map;
    std::function<PermArrow(const Word&, const Word&)> structure_iso;
    PermArrow unit_iso;

    bool strictly_unital() const {
        return unit_iso.src.empty() && unit_iso.tgt.empty();
    }
};

// The strict monoidal functor induced by a letter substitution.
MonoidalFunctorData substitution_functor(std::function<std::string(const std::string&)> sub);
MonoidalFunctorData identity_functor();
// The constant functor at the empty word (the additive unit 1-cell).
MonoidalFunctorData constant_unit_functor();

// G after F, with the composite structure morphism G(F_2) . G_2.
MonoidalFunctorData functor_compose(const MonoidalFunctorData& G, const MonoidalFunctorData& F);

// The pointwise sum (F+G)(c) = F(c) ++ G(c). Its structure morphism is the
// four-step chain: re-associate, swap the middle blocks G(c1) and F(c2),
// re-associate, then apply F_2 ++ G_2. Strictly unital inputs give a
// strictly unital sum.
MonoidalFunctorData functor_sum(const MonoidalFunctorData& F, const MonoidalFunctorData& G);

// Checks functor data on sample objects (typing of morphism images,
// structure-iso endpoints, associativity and symmetry coherence, unit laws).
// Throws InvalidFunctor with the offending sample.
void validate_functor(const MonoidalFunctorData& F, std::span<const Word> samples);

struct StrictlyUnitalized {
    MonoidalFunctorData psi;
    // the monoidal natural isomorphism psi ~ phi, by components
    std::function<PermArrow(const Word&)> eta;
};

// The strictly unital replacement: psi agrees with phi away from the unit,
// sends u1 to u2 on the nose, conjugates morphism images by the unit iso at
// unit endpoints, and comes with the component-wise isomorphism eta that is
// unit_iso at u1 and the identity elsewhere. Validates phi on the samples.
StrictlyUnitalized strictly_unitalize(const MonoidalFunctorData& phi, const Word& u1,
                                      const Word& u2, std::span<const Word> samples);

}  // namespace smc
