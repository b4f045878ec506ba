#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "smcstrict/signature.hpp"

namespace smc {

// One composable string of generators, outermost letter first: reading
// gens = (f_n, ..., f_1), f_1 applies first, so tgt(f_1)=src(f_2) and so on,
// with src(f_1) = src and tgt(f_n) = tgt. An empty string is the strict
// horizontal unit and requires src = tgt.
struct Monomial {
    ZeroIx src = 0;
    ZeroIx tgt = 0;
    std::vector<GenIx> gens;

    bool operator==(const Monomial& o) const {
        return src == o.src && tgt == o.tgt && gens == o.gens;
    }
};

// An ordered formal sum of monomials sharing endpoints: a 1-cell of the
// strictified category. The empty sum is the strict additive unit; order is
// significant throughout (the strict hom-categories are permutative, not
// commutative). Storage is flat: letters of monomial i occupy
// letters[offs[i] .. offs[i+1]).
class NormalForm {
  public:
    NormalForm() = default;

    static NormalForm zero(ZeroIx src, ZeroIx tgt);
    // The strict horizontal unit 1_a: one empty monomial.
    static NormalForm unit(ZeroIx a);
    static NormalForm single(const Monomial& m);
    static NormalForm from_monomials(ZeroIx src, ZeroIx tgt, std::span<const Monomial> ms);

    ZeroIx src() const { return src_; }
    ZeroIx tgt() const { return tgt_; }
    std::size_t monomial_count() const { return offs_.size() - 1; }
    bool is_zero() const { return monomial_count() == 0; }

    std::span<const GenIx> monomial(std::size_t i) const {
        return {letters_.data() + offs_[i], static_cast<std::size_t>(offs_[i + 1] - offs_[i])};
    }
    Monomial monomial_value(std::size_t i) const {
        auto m = monomial(i);
        return Monomial{src_, tgt_, {m.begin(), m.end()}};
    }
    std::vector<Monomial> monomials() const;

    bool operator==(const NormalForm& o) const {
        return src_ == o.src_ && tgt_ == o.tgt_ && offs_ == o.offs_ && letters_ == o.letters_;
    }

    // 128-bit content hash, used for de-duplicating large sweeps.
    std::pair<std::uint64_t, std::uint64_t> hash128() const;

    friend NormalForm strict_compose(const NormalForm& x, const NormalForm& y);
    friend NormalForm strict_sum(const NormalForm& x, const NormalForm& y);

  private:
    ZeroIx src_ = 0;
    ZeroIx tgt_ = 0;
    std::vector<GenIx> letters_;
    std::vector<std::uint32_t> offs_ = {0};
};

// x after y, expanded in first-factor-major order: the result lists
// x_1y_1, x_1y_2, ..., x_1y_l, x_2y_1, ..., x_ky_l, each concatenated as
// x-letters then y-letters. Empty on either side absorbs. Requires
// src(x) = tgt(y).
NormalForm strict_compose(const NormalForm& x, const NormalForm& y);

// Concatenation of the two monomial sequences; the empty sum is the strict
// unit. Requires matching endpoints.
NormalForm strict_sum(const NormalForm& x, const NormalForm& y);

// Memo table for normalize(), keyed by expression node identity. Only valid
// while the expressions that populated it are alive.
using NfCache = std::unordered_map<const void*, NormalForm>;

// The strictification map: evaluates an expression to its normal form.
// Gen -> one-letter monomial, 1@a -> the unit monomial at a, 0 -> empty sum,
// sums concatenate, compositions expand first-factor-major. A cache, when
// given, is consulted and filled by node identity; keep the expressions that
// populated it alive for as long as it is used.
NormalForm normalize(const OneCell& e, const SmcSignature& sig, NfCache* cache = nullptr);

// Cache-consulting variant that never inserts: safe to use with caches whose
// keys must stay confined to long-lived expressions.
NormalForm normalize_lookup(const OneCell& e, const SmcSignature& sig, const NfCache* cache);

// The embedding back into expressions: right-nested sums of right-nested
// compositions, the empty monomial as 1@a and the empty sum as 0@a->b.
// normalize(embed(nf, sig), sig) == nf for every well-formed nf.
OneCell embed(const NormalForm& nf, const SmcSignature& sig);

// Canonical text form: `0@a->b` for the empty sum, otherwise monomials
// joined by " + ", each a "."-joined generator string or `1@a`.
std::string nf_to_text(const NormalForm& nf, const SmcSignature& sig);

}  // namespace smc
