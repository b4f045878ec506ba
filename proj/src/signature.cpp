#include "smcstrict/signature.hpp"

namespace smc {

void SmcSignature::add_zero_cell(const std::string& name) {
    if (zero_by_name_.count(name))
        throw Error("duplicate 0-cell '" + name + "'");
    zero_by_name_.emplace(name, static_cast<ZeroIx>(zero_names_.size()));
    zero_names_.push_back(name);
}

void SmcSignature::add_gen1(const std::string& name, const std::string& src,
                            const std::string& tgt) {
    if (gen_by_name_.count(name))
        throw Error("duplicate 1-cell '" + name + "'");
    auto s = zero_index(src);
    auto t = zero_index(tgt);
    if (!s) throw ResolveError("unknown 0-cell '" + src + "' in 1-cell '" + name + "'");
    if (!t) throw ResolveError("unknown 0-cell '" + tgt + "' in 1-cell '" + name + "'");
    gen_by_name_.emplace(name, static_cast<GenIx>(gen_names_.size()));
    gen_names_.push_back(name);
    gen_src_.push_back(*s);
    gen_tgt_.push_back(*t);
}

void SmcSignature::add_gen2(const std::string& name, OneCell src, OneCell tgt) {
    if (find_gen2(name))
        throw Error("duplicate 2-cell '" + name + "'");
    auto se = endpoints_ix(src, *this);
    auto te = endpoints_ix(tgt, *this);
    if (se != te)
        throw BoundaryMismatch("2-cell '" + name + "' boundary expressions are not parallel");
    gen2_.push_back(Gen2Cell{name, std::move(src), std::move(tgt)});
}

std::optional<ZeroIx> SmcSignature::zero_index(const std::string& name) const {
    auto it = zero_by_name_.find(name);
    if (it == zero_by_name_.end()) return std::nullopt;
    return it->second;
}

std::optional<GenIx> SmcSignature::gen_index(const std::string& name) const {
    auto it = gen_by_name_.find(name);
    if (it == gen_by_name_.end()) return std::nullopt;
    return it->second;
}

const Gen2Cell* SmcSignature::find_gen2(const std::string& name) const {
    for (const auto& c : gen2_)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

std::pair<ZeroIx, ZeroIx> endpoints_at(const OneCell& e, const SmcSignature& sig,
                                       std::string& path) {
    switch (e.kind()) {
        case OneCell::Kind::Gen: {
            auto g = sig.gen_index(e.gen_name());
            if (!g) throw IllTyped("unknown generator '" + e.gen_name() + "'", path);
            return {sig.gen_src(*g), sig.gen_tgt(*g)};
        }
        case OneCell::Kind::IdUnit: {
            auto a = sig.zero_index(e.unit_cell());
            if (!a) throw IllTyped("unknown 0-cell '" + e.unit_cell() + "'", path);
            return {*a, *a};
        }
        case OneCell::Kind::ZeroUnit: {
            auto s = sig.zero_index(e.zero_src());
            auto t = sig.zero_index(e.zero_tgt());
            if (!s) throw IllTyped("unknown 0-cell '" + e.zero_src() + "'", path);
            if (!t) throw IllTyped("unknown 0-cell '" + e.zero_tgt() + "'", path);
            return {*s, *t};
        }
        case OneCell::Kind::HComp: {
            const auto n = path.size();
            path += "/outer";
            auto o = endpoints_at(e.outer(), sig, path);
            path.resize(n);
            path += "/inner";
            auto i = endpoints_at(e.inner(), sig, path);
            path.resize(n);
            if (i.second != o.first)
                throw IllTyped("composition endpoint mismatch: inner ends at '" +
                                   sig.zero_name(i.second) + "', outer starts at '" +
                                   sig.zero_name(o.first) + "'",
                               path);
            return {i.first, o.second};
        }
        case OneCell::Kind::Sum: {
            const auto n = path.size();
            path += "/left";
            auto l = endpoints_at(e.left(), sig, path);
            path.resize(n);
            path += "/right";
            auto r = endpoints_at(e.right(), sig, path);
            path.resize(n);
            if (l != r)
                throw IllTyped("sum endpoint mismatch: left is " + sig.zero_name(l.first) +
                                   "->" + sig.zero_name(l.second) + ", right is " +
                                   sig.zero_name(r.first) + "->" + sig.zero_name(r.second),
                               path);
            return l;
        }
    }
    throw IllTyped("malformed expression node", path);
}

}  // namespace

std::pair<ZeroIx, ZeroIx> endpoints_ix(const OneCell& e, const SmcSignature& sig) {
    std::string path;
    return endpoints_at(e, sig, path);
}

std::pair<ZeroCellId, ZeroCellId> endpoints(const OneCell& e, const SmcSignature& sig) {
    auto [s, t] = endpoints_ix(e, sig);
    return {ZeroCellId{sig.zero_name(s)}, ZeroCellId{sig.zero_name(t)}};
}

bool well_formed(const OneCell& e, const SmcSignature& sig) {
    try {
        endpoints_ix(e, sig);
        return true;
    } catch (const IllTyped&) {
        return false;
    }
}

SmcSignature opposite(const SmcSignature& sig) {
    SmcSignature op;
    for (ZeroIx i = 0; i < sig.zero_cell_count(); ++i)
        op.add_zero_cell(sig.zero_name(i));
    for (GenIx i = 0; i < sig.gen1_count(); ++i)
        op.add_gen1(sig.gen_name(i), sig.zero_name(sig.gen_tgt(i)), sig.zero_name(sig.gen_src(i)));
    for (const auto& c : sig.gen2_cells())
        op.add_gen2(c.name, opposite(c.src), opposite(c.tgt));
    return op;
}

SmcSignature standard_signature() {
    SmcSignature sig;
    sig.add_zero_cell("a");
    sig.add_zero_cell("b");
    sig.add_zero_cell("c");
    sig.add_gen1("f", "a", "b");
    sig.add_gen1("f'", "a", "b");
    sig.add_gen1("g", "b", "c");
    sig.add_gen1("g'", "b", "c");
    sig.add_gen1("h", "a", "c");
    return sig;
}

SmcSignature semiring_test_signature() {
    SmcSignature sig;
    sig.add_zero_cell("u");
    for (const char* n : {"p", "q", "r", "s", "t"}) sig.add_gen1(n, "u", "u");
    return sig;
}

}  // namespace smc
