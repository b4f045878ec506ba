#include "smcstrict/permcat.hpp"

#include "smcstrict/errors.hpp"

namespace smc {

std::string word_to_string(const Word& w) {
    if (w.empty()) return "()";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += '.';
        out += w[i];
    }
    return out;
}

Word word_concat(const Word& x, const Word& y) {
    Word out = x;
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

bool PermArrow::valid() const {
    if (src.size() != tgt.size() || perm.size() != src.size()) return false;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= perm.size() || seen[perm[i]]) return false;
        seen[perm[i]] = true;
        if (tgt[perm[i]] != src[i]) return false;
    }
    return true;
}

bool PermArrow::is_identity() const {
    if (!(src == tgt)) return false;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != i) return false;
    return true;
}

PermArrow perm_identity(Word w) {
    PermArrow a;
    a.perm.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) a.perm[i] = i;
    a.src = w;
    a.tgt = std::move(w);
    return a;
}

PermArrow perm_inverse(const PermArrow& a) {
    PermArrow out;
    out.src = a.tgt;
    out.tgt = a.src;
    out.perm.resize(a.perm.size());
    for (std::size_t i = 0; i < a.perm.size(); ++i) out.perm[a.perm[i]] = i;
    return out;
}

PermArrow perm_compose(const PermArrow& g, const PermArrow& f) {
    if (!(f.tgt == g.src))
        throw BoundaryMismatch("perm_compose: middle words disagree");
    PermArrow out;
    out.src = f.src;
    out.tgt = g.tgt;
    out.perm.resize(f.perm.size());
    for (std::size_t i = 0; i < f.perm.size(); ++i) out.perm[i] = g.perm[f.perm[i]];
    return out;
}

PermArrow perm_tensor(const PermArrow& a, const PermArrow& b) {
    PermArrow out;
    out.src = word_concat(a.src, b.src);
    out.tgt = word_concat(a.tgt, b.tgt);
    out.perm.reserve(a.perm.size() + b.perm.size());
    for (auto p : a.perm) out.perm.push_back(p);
    for (auto p : b.perm) out.perm.push_back(a.perm.size() + p);
    return out;
}

PermArrow perm_symmetry(const Word& x, const Word& y) {
    PermArrow out;
    out.src = word_concat(x, y);
    out.tgt = word_concat(y, x);
    out.perm.reserve(x.size() + y.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.perm.push_back(y.size() + i);
    for (std::size_t j = 0; j < y.size(); ++j) out.perm.push_back(j);
    return out;
}

std::vector<Word> PermCatInstance::objects_up_to(std::size_t max_len) const {
    std::vector<Word> out{Word{}};
    std::size_t layer_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t layer_end = out.size();
        for (std::size_t i = layer_begin; i < layer_end; ++i)
            for (const auto& l : letters) {
                Word w = out[i];
                w.push_back(l);
                out.push_back(std::move(w));
            }
        layer_begin = layer_end;
    }
    return out;
}

MonoidalFunctorData substitution_functor(std::function<std::string(const std::string&)> sub) {
    MonoidalFunctorData F;
    F.object_map = [sub](const Word& w) {
        Word out;
        out.reserve(w.size());
        for (const auto& l : w) out.push_back(sub(l));
        return out;
    };
    F.morphism_map = [obj = F.object_map](const PermArrow& a) {
        PermArrow out;
        out.src = obj(a.src);
        out.tgt = obj(a.tgt);
        out.perm = a.perm;
        return out;
    };
    F.structure_iso = [obj = F.object_map](const Word& x, const Word& y) {
        return perm_identity(word_concat(obj(x), obj(y)));
    };
    F.unit_iso = perm_identity(Word{});
    return F;
}

MonoidalFunctorData identity_functor() {
    return substitution_functor([](const std::string& l) { return l; });
}

MonoidalFunctorData constant_unit_functor() {
    MonoidalFunctorData F;
    F.object_map = [](const Word&) { return Word{}; };
    F.morphism_map = [](const PermArrow&) { return perm_identity(Word{}); };
    F.structure_iso = [](const Word&, const Word&) { return perm_identity(Word{}); };
    F.unit_iso = perm_identity(Word{});
    return F;
}

MonoidalFunctorData functor_compose(const MonoidalFunctorData& G, const MonoidalFunctorData& F) {
    MonoidalFunctorData out;
    out.object_map = [G, F](const Word& w) { return G.object_map(F.object_map(w)); };
    out.morphism_map = [G, F](const PermArrow& a) { return G.morphism_map(F.morphism_map(a)); };
    out.structure_iso = [G, F](const Word& x, const Word& y) {
        // GF(x) ++ GF(y) -> G(F(x) ++ F(y)) -> GF(x ++ y)
        return perm_compose(G.morphism_map(F.structure_iso(x, y)),
                            G.structure_iso(F.object_map(x), F.object_map(y)));
    };
    out.unit_iso = perm_compose(G.morphism_map(F.unit_iso), G.unit_iso);
    return out;
}

MonoidalFunctorData functor_sum(const MonoidalFunctorData& F, const MonoidalFunctorData& G) {
    MonoidalFunctorData out;
    out.object_map = [F, G](const Word& w) {
        return word_concat(F.object_map(w), G.object_map(w));
    };
    out.morphism_map = [F, G](const PermArrow& a) {
        return perm_tensor(F.morphism_map(a), G.morphism_map(a));
    };
    out.structure_iso = [F, G](const Word& x, const Word& y) {
        const Word fx = F.object_map(x), gx = G.object_map(x);
        const Word fy = F.object_map(y), gy = G.object_map(y);
        // F(x).G(x).F(y).G(y): associate, swap the middle two blocks,
        // associate back, then apply the two structure morphisms.
        PermArrow middle = perm_tensor(
            perm_tensor(perm_identity(fx), perm_symmetry(gx, fy)), perm_identity(gy));
        PermArrow structure = perm_tensor(F.structure_iso(x, y), G.structure_iso(x, y));
        return perm_compose(structure, middle);
    };
    out.unit_iso = perm_tensor(F.unit_iso, G.unit_iso);
    return out;
}

void validate_functor(const MonoidalFunctorData& F, std::span<const Word> samples) {
    auto fail = [](const std::string& what, const Word& x) {
        throw InvalidFunctor(what + " (sample " + word_to_string(x) + ")");
    };
    if (!F.unit_iso.valid() || !(F.unit_iso.tgt == F.object_map(F.unit_iso.src)))
        throw InvalidFunctor("unit iso does not land in F(unit)");
    for (const auto& x : samples) {
        for (const auto& y : samples) {
            PermArrow s = F.structure_iso(x, y);
            if (!s.valid()) fail("structure iso is not a permutation", x);
            if (!(s.src == word_concat(F.object_map(x), F.object_map(y))) ||
                !(s.tgt == F.object_map(word_concat(x, y))))
                fail("structure iso has wrong endpoints", x);
            // symmetry coherence: F(sym) . F2(x,y) == F2(y,x) . sym(Fx,Fy)
            PermArrow lhs = perm_compose(F.morphism_map(perm_symmetry(x, y)), s);
            PermArrow rhs = perm_compose(F.structure_iso(y, x),
                                         perm_symmetry(F.object_map(x), F.object_map(y)));
            if (!(lhs == rhs)) fail("symmetry coherence fails", x);
            // morphism images must be typed permutations
            PermArrow img = F.morphism_map(perm_symmetry(x, y));
            if (!img.valid() || !(img.src == F.object_map(word_concat(x, y))))
                fail("morphism image ill-typed", x);
            for (const auto& z : samples) {
                // associativity square (assoc is strict in a permutative category)
                PermArrow p1 = perm_compose(F.structure_iso(word_concat(x, y), z),
                                            perm_tensor(s, perm_identity(F.object_map(z))));
                PermArrow p2 = perm_compose(F.structure_iso(x, word_concat(y, z)),
                                            perm_tensor(perm_identity(F.object_map(x)),
                                                        F.structure_iso(y, z)));
                if (!(p1 == p2)) fail("associativity coherence fails", z);
            }
        }
        // unit laws: F2(u, x) and F2(x, u) reduce to unit_iso padding
        PermArrow lu = F.structure_iso(F.unit_iso.src, x);
        PermArrow expected_lu =
            perm_tensor(perm_inverse(F.unit_iso), perm_identity(F.object_map(x)));
        if (!(lu == expected_lu)) fail("left unit coherence fails", x);
        PermArrow ru = F.structure_iso(x, F.unit_iso.src);
        PermArrow expected_ru =
            perm_tensor(perm_identity(F.object_map(x)), perm_inverse(F.unit_iso));
        if (!(ru == expected_ru)) fail("right unit coherence fails", x);
    }
}

StrictlyUnitalized strictly_unitalize(const MonoidalFunctorData& phi, const Word& u1,
                                      const Word& u2, std::span<const Word> samples) {
    validate_functor(phi, samples);
    if (!(phi.unit_iso.src == u2) || !(phi.unit_iso.tgt == phi.object_map(u1)))
        throw InvalidFunctor("unit iso endpoints disagree with the given units");

    StrictlyUnitalized out;
    MonoidalFunctorData& psi = out.psi;
    psi.object_map = [phi, u1, u2](const Word& x) {
        return x == u1 ? u2 : phi.object_map(x);
    };
    psi.morphism_map = [phi, u1](const PermArrow& f) {
        PermArrow img = phi.morphism_map(f);
        if (f.src == u1) img = perm_compose(img, phi.unit_iso);
        if (f.tgt == u1) img = perm_compose(perm_inverse(phi.unit_iso), img);
        return img;
    };
    psi.structure_iso = [phi, psi_obj = psi.object_map, u1](const Word& x, const Word& y) {
        // at the unit the structure morphism collapses to an identity,
        // since u1 ++ y == y and x ++ u1 == x on the nose
        if (x == u1) return perm_identity(psi_obj(y));
        if (y == u1) return perm_identity(psi_obj(x));
        return phi.structure_iso(x, y);
    };
    psi.unit_iso = perm_identity(u2);

    out.eta = [phi, u1](const Word& x) {
        if (x == u1) return phi.unit_iso;
        return perm_identity(phi.object_map(x));
    };
    return out;
}

}  // namespace smc
