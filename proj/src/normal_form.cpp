#include "smcstrict/normal_form.hpp"

#include "smcstrict/errors.hpp"

namespace smc {

NormalForm NormalForm::zero(ZeroIx src, ZeroIx tgt) {
    NormalForm nf;
    nf.src_ = src;
    nf.tgt_ = tgt;
    return nf;
}

NormalForm NormalForm::unit(ZeroIx a) {
    NormalForm nf;
    nf.src_ = a;
    nf.tgt_ = a;
    nf.offs_.push_back(0);
    return nf;
}

NormalForm NormalForm::single(const Monomial& m) {
    NormalForm nf;
    nf.src_ = m.src;
    nf.tgt_ = m.tgt;
    nf.letters_ = m.gens;
    nf.offs_.push_back(static_cast<std::uint32_t>(nf.letters_.size()));
    return nf;
}

NormalForm NormalForm::from_monomials(ZeroIx src, ZeroIx tgt, std::span<const Monomial> ms) {
    NormalForm nf;
    nf.src_ = src;
    nf.tgt_ = tgt;
    for (const auto& m : ms) {
        if (m.src != src || m.tgt != tgt)
            throw EndpointMismatch("monomial endpoints disagree with the normal form");
        nf.letters_.insert(nf.letters_.end(), m.gens.begin(), m.gens.end());
        nf.offs_.push_back(static_cast<std::uint32_t>(nf.letters_.size()));
    }
    return nf;
}

std::vector<Monomial> NormalForm::monomials() const {
    std::vector<Monomial> out;
    out.reserve(monomial_count());
    for (std::size_t i = 0; i < monomial_count(); ++i) out.push_back(monomial_value(i));
    return out;
}

std::pair<std::uint64_t, std::uint64_t> NormalForm::hash128() const {
    // Two FNV-1a streams with distinct primes over the same content.
    std::uint64_t h1 = 0xcbf29ce484222325ULL ^ (std::uint64_t(src_) << 32 | tgt_);
    std::uint64_t h2 = 0x9e3779b97f4a7c15ULL + (std::uint64_t(tgt_) << 32 | src_);
    auto mix = [&](std::uint64_t v) {
        h1 = (h1 ^ v) * 0x100000001b3ULL;
        h2 = (h2 ^ (v + 0x9e3779b97f4a7c15ULL)) * 0xc6a4a7935bd1e995ULL;
        h2 ^= h2 >> 29;
    };
    mix(offs_.size());
    for (auto o : offs_) mix(o);
    for (auto l : letters_) mix(l + 0x517cc1b727220a95ULL);
    return {h1, h2};
}

NormalForm strict_compose(const NormalForm& x, const NormalForm& y) {
    if (x.src_ != y.tgt_)
        throw EndpointMismatch("strict_compose: src of first factor != tgt of second");
    NormalForm out;
    out.src_ = y.src_;
    out.tgt_ = x.tgt_;
    const std::size_t k = x.monomial_count(), l = y.monomial_count();
    if (k == 0 || l == 0) return out;
    out.offs_.reserve(k * l + 1);
    out.letters_.reserve(k * y.letters_.size() + l * x.letters_.size());
    for (std::size_t i = 0; i < k; ++i) {
        const auto xi = x.monomial(i);
        for (std::size_t j = 0; j < l; ++j) {
            const auto yj = y.monomial(j);
            out.letters_.insert(out.letters_.end(), xi.begin(), xi.end());
            out.letters_.insert(out.letters_.end(), yj.begin(), yj.end());
            out.offs_.push_back(static_cast<std::uint32_t>(out.letters_.size()));
        }
    }
    return out;
}

NormalForm strict_sum(const NormalForm& x, const NormalForm& y) {
    if (x.src_ != y.src_ || x.tgt_ != y.tgt_)
        throw EndpointMismatch("strict_sum: endpoints disagree");
    NormalForm out = x;
    out.letters_.insert(out.letters_.end(), y.letters_.begin(), y.letters_.end());
    const auto base = out.offs_.back();
    for (std::size_t j = 1; j < y.offs_.size(); ++j)
        out.offs_.push_back(base + y.offs_[j]);
    return out;
}

namespace {

NormalForm normalize_rec(const OneCell& e, const SmcSignature& sig, NfCache* cache) {
    if (cache) {
        auto it = cache->find(e.node_key());
        if (it != cache->end()) return it->second;
    }
    NormalForm nf;
    switch (e.kind()) {
        case OneCell::Kind::Gen: {
            auto g = sig.gen_index(e.gen_name());
            if (!g) throw IllTyped("unknown generator '" + e.gen_name() + "'", "");
            nf = NormalForm::single(Monomial{sig.gen_src(*g), sig.gen_tgt(*g), {*g}});
            break;
        }
        case OneCell::Kind::IdUnit: {
            auto a = sig.zero_index(e.unit_cell());
            if (!a) throw IllTyped("unknown 0-cell '" + e.unit_cell() + "'", "");
            nf = NormalForm::unit(*a);
            break;
        }
        case OneCell::Kind::ZeroUnit: {
            auto s = sig.zero_index(e.zero_src());
            auto t = sig.zero_index(e.zero_tgt());
            if (!s || !t) throw IllTyped("unknown 0-cell in additive unit", "");
            nf = NormalForm::zero(*s, *t);
            break;
        }
        case OneCell::Kind::HComp:
            nf = strict_compose(normalize_rec(e.outer(), sig, cache),
                                normalize_rec(e.inner(), sig, cache));
            break;
        case OneCell::Kind::Sum:
            nf = strict_sum(normalize_rec(e.left(), sig, cache),
                            normalize_rec(e.right(), sig, cache));
            break;
    }
    if (cache) cache->emplace(e.node_key(), nf);
    return nf;
}

}  // namespace

NormalForm normalize(const OneCell& e, const SmcSignature& sig, NfCache* cache) {
    if (cache) {
        auto it = cache->find(e.node_key());
        if (it != cache->end()) return it->second;
    }
    try {
        return normalize_rec(e, sig, cache);
    } catch (const EndpointMismatch&) {
        // Re-run typing to surface the usual IllTyped with the offending path.
        endpoints_ix(e, sig);
        throw;
    }
}

namespace {

NormalForm lookup_rec(const OneCell& e, const SmcSignature& sig, const NfCache* cache) {
    if (cache) {
        auto it = cache->find(e.node_key());
        if (it != cache->end()) return it->second;
    }
    switch (e.kind()) {
        case OneCell::Kind::HComp:
            return strict_compose(lookup_rec(e.outer(), sig, cache),
                                  lookup_rec(e.inner(), sig, cache));
        case OneCell::Kind::Sum:
            return strict_sum(lookup_rec(e.left(), sig, cache),
                              lookup_rec(e.right(), sig, cache));
        default:
            return normalize_rec(e, sig, nullptr);
    }
}

}  // namespace

NormalForm normalize_lookup(const OneCell& e, const SmcSignature& sig, const NfCache* cache) {
    if (cache) {
        auto it = cache->find(e.node_key());
        if (it != cache->end()) return it->second;
    }
    try {
        return lookup_rec(e, sig, cache);
    } catch (const EndpointMismatch&) {
        endpoints_ix(e, sig);
        throw;
    }
}

namespace {

OneCell embed_monomial(std::span<const GenIx> gens, ZeroIx src, const SmcSignature& sig) {
    if (gens.empty()) return OneCell::id_unit(sig.zero_name(src));
    OneCell acc = OneCell::gen(sig.gen_name(gens.back()));
    for (std::size_t i = gens.size() - 1; i-- > 0;)
        acc = OneCell::hcomp(OneCell::gen(sig.gen_name(gens[i])), std::move(acc));
    return acc;
}

}  // namespace

OneCell embed(const NormalForm& nf, const SmcSignature& sig) {
    if (nf.is_zero())
        return OneCell::zero_unit(sig.zero_name(nf.src()), sig.zero_name(nf.tgt()));
    const std::size_t n = nf.monomial_count();
    OneCell acc = embed_monomial(nf.monomial(n - 1), nf.src(), sig);
    for (std::size_t i = n - 1; i-- > 0;)
        acc = OneCell::sum(embed_monomial(nf.monomial(i), nf.src(), sig), std::move(acc));
    return acc;
}

std::string nf_to_text(const NormalForm& nf, const SmcSignature& sig) {
    if (nf.is_zero())
        return "0@" + sig.zero_name(nf.src()) + "->" + sig.zero_name(nf.tgt());
    std::string out;
    for (std::size_t i = 0; i < nf.monomial_count(); ++i) {
        if (i) out += " + ";
        const auto m = nf.monomial(i);
        if (m.empty()) {
            out += "1@" + sig.zero_name(nf.src());
        } else {
            for (std::size_t j = 0; j < m.size(); ++j) {
                if (j) out += '.';
                out += sig.gen_name(m[j]);
            }
        }
    }
    return out;
}

}  // namespace smc
