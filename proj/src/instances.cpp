#include "smcstrict/instances.hpp"

#include <algorithm>

#include "smcstrict/errors.hpp"

namespace smc {

std::string nat_to_string(Nat n) {
    if (n == 0) return "0";
    std::string out;
    while (n > 0) {
        out += static_cast<char>('0' + static_cast<unsigned>(n % 10));
        n /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Nat nat_from_string(const std::string& s) {
    Nat n = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw Error("not a natural number: '" + s + "'");
        n = n * 10 + static_cast<unsigned>(c - '0');
    }
    return n;
}

Nat eval_one_cell(const OneCell& e, const SemiringInstance& inst) {
    endpoints_ix(e, inst.sig);
    struct Rec {
        const SemiringInstance& inst;
        Nat go(const OneCell& e) const {
            switch (e.kind()) {
                case OneCell::Kind::Gen: {
                    auto it = inst.assign.find(e.gen_name());
                    if (it == inst.assign.end())
                        throw MissingAssignment("no semiring value for generator '" +
                                                e.gen_name() + "'");
                    return it->second;
                }
                case OneCell::Kind::IdUnit:
                    return 1;
                case OneCell::Kind::ZeroUnit:
                    return 0;
                case OneCell::Kind::HComp:
                    return go(e.outer()) * go(e.inner());
                case OneCell::Kind::Sum:
                    return go(e.left()) + go(e.right());
            }
            throw Error("malformed expression node");
        }
    };
    return Rec{inst}.go(e);
}

SpanCell eval_one_cell(const OneCell& e, const SpanInstance& inst) {
    auto ends = endpoints_ix(e, inst.sig);
    (void)ends;
    struct Rec {
        const SpanInstance& inst;
        SpanCell go(const OneCell& e) const {
            switch (e.kind()) {
                case OneCell::Kind::Gen: {
                    auto it = inst.gen_assign.find(e.gen_name());
                    if (it == inst.gen_assign.end())
                        throw MissingAssignment("no span assigned to generator '" +
                                                e.gen_name() + "'");
                    return it->second;
                }
                case OneCell::Kind::IdUnit:
                    return identity_span(inst.obj_of(*inst.sig.zero_index(e.unit_cell())));
                case OneCell::Kind::ZeroUnit:
                    return empty_span(inst.obj_of(*inst.sig.zero_index(e.zero_src())),
                                      inst.obj_of(*inst.sig.zero_index(e.zero_tgt())));
                case OneCell::Kind::HComp:
                    return span_compose(go(e.outer()), go(e.inner()));
                case OneCell::Kind::Sum:
                    return span_sum(go(e.left()), go(e.right()));
            }
            throw Error("malformed expression node");
        }
    };
    return Rec{inst}.go(e);
}

MonoidalFunctorData eval_one_cell(const OneCell& e, const PermInstance& inst) {
    endpoints_ix(e, inst.sig);
    struct Rec {
        const PermInstance& inst;
        MonoidalFunctorData go(const OneCell& e) const {
            switch (e.kind()) {
                case OneCell::Kind::Gen: {
                    auto it = inst.gen_assign.find(e.gen_name());
                    if (it == inst.gen_assign.end())
                        throw MissingAssignment("no functor assigned to generator '" +
                                                e.gen_name() + "'");
                    return it->second;
                }
                case OneCell::Kind::IdUnit:
                    return identity_functor();
                case OneCell::Kind::ZeroUnit:
                    return constant_unit_functor();
                case OneCell::Kind::HComp:
                    return functor_compose(go(e.outer()), go(e.inner()));
                case OneCell::Kind::Sum:
                    return functor_sum(go(e.left()), go(e.right()));
            }
            throw Error("malformed expression node");
        }
    };
    return Rec{inst}.go(e);
}

Nat eval_two_cell(const TwoCell& c, const SemiringInstance& inst) {
    auto [src, tgt] = boundary(c, inst.sig);
    Nat a = eval_one_cell(src, inst);
    Nat b = eval_one_cell(tgt, inst);
    if (a != b)
        throw NonDegenerate("2-cell boundaries evaluate to " + nat_to_string(a) + " and " +
                            nat_to_string(b) + " in a discrete hom-category");
    return a;
}

namespace {

// Evaluate a structural cell to the function its bijection applies to apex
// elements, then realize it against the evaluated boundary spans.
SpanBijection span_cell_rec(const TwoCell& c, const SpanInstance& inst);

SpanBijection by_element_map(const TwoCell& c, const SpanInstance& inst,
                             const std::function<FsElem(const FsElem&)>& fn) {
    auto [src, tgt] = boundary(c, inst.sig);
    SpanCell s = eval_one_cell(src, inst);
    SpanCell t = eval_one_cell(tgt, inst);
    SpanBijection b;
    b.map.reserve(s.apex.size());
    for (const auto& e : s.apex.elements) {
        auto pos = t.apex.find(fn(e));
        if (!pos)
            throw Error("span evaluation of " + to_text(c) + ": image of " + e.to_string() +
                        " missing from the target apex");
        b.map.push_back(*pos);
    }
    b.source = std::move(s);
    b.target = std::move(t);
    if (b.map.size() != b.target.apex.size())
        throw Error("span evaluation of " + to_text(c) + ": not onto");
    return b;
}

FsElem assoc_shape(const FsElem& e) {
    return FsElem::pair(e.first().first(), FsElem::pair(e.first().second(), e.second()));
}

FsElem add_assoc_shape(const FsElem& e) {
    if (e.kind() == FsElem::Kind::InL) return FsElem::inl(FsElem::inl(e.inner()));
    const FsElem& in = e.inner();
    if (in.kind() == FsElem::Kind::InL) return FsElem::inl(FsElem::inr(in.inner()));
    return FsElem::inr(in.inner());
}

SpanBijection span_cell_rec(const TwoCell& c, const SpanInstance& inst) {
    using K = TwoCell::Kind;
    switch (c.kind()) {
        case K::Id2:
            return SpanBijection::identity(eval_one_cell(c.arg0(), inst));
        case K::Gen2: {
            auto it = inst.gen2_assign.find(c.gen2_name());
            if (it == inst.gen2_assign.end())
                throw MissingAssignment("no apex bijection assigned to 2-cell '" +
                                        c.gen2_name() + "'");
            return it->second;
        }
        case K::VComp:
            return SpanBijection::compose(span_cell_rec(c.first_cell(), inst),
                                          span_cell_rec(c.second_cell(), inst));
        case K::Inv:
            return span_cell_rec(c.first_cell(), inst).inverse();
        case K::SumCells: {
            SpanBijection l = span_cell_rec(c.first_cell(), inst);
            SpanBijection r = span_cell_rec(c.second_cell(), inst);
            return by_element_map(c, inst, [l, r](const FsElem& e) {
                if (e.kind() == FsElem::Kind::InL) {
                    auto pos = l.source.apex.find(e.inner());
                    if (!pos) throw Error("sum cell: element missing from left block");
                    return FsElem::inl(l.target.apex.elements[l.map[*pos]]);
                }
                auto pos = r.source.apex.find(e.inner());
                if (!pos) throw Error("sum cell: element missing from right block");
                return FsElem::inr(r.target.apex.elements[r.map[*pos]]);
            });
        }
        case K::HComp2: {
            SpanBijection outer = span_cell_rec(c.first_cell(), inst);
            SpanBijection inner = span_cell_rec(c.second_cell(), inst);
            return by_element_map(c, inst, [outer, inner](const FsElem& e) {
                auto xi = inner.source.apex.find(e.first());
                auto xo = outer.source.apex.find(e.second());
                if (!xi || !xo) throw Error("whiskering: element missing from factor apex");
                return FsElem::pair(inner.target.apex.elements[inner.map[*xi]],
                                    outer.target.apex.elements[outer.map[*xo]]);
            });
        }
        case K::AssocH:
            return by_element_map(c, inst, assoc_shape);
        case K::LUnit:
            return by_element_map(c, inst, [](const FsElem& e) { return e.first(); });
        case K::RUnit:
            return by_element_map(c, inst, [](const FsElem& e) { return e.second(); });
        case K::AddAssoc:
            return by_element_map(c, inst, add_assoc_shape);
        case K::AddUnitL:
        case K::AddUnitR:
            return by_element_map(c, inst, [](const FsElem& e) { return e.inner(); });
        case K::Sym:
            return by_element_map(c, inst, [](const FsElem& e) {
                return e.kind() == FsElem::Kind::InL ? FsElem::inr(e.inner())
                                                     : FsElem::inl(e.inner());
            });
        case K::DistL:
            return by_element_map(c, inst, [](const FsElem& e) {
                const FsElem& tagged = e.first();
                if (tagged.kind() == FsElem::Kind::InL)
                    return FsElem::inl(FsElem::pair(tagged.inner(), e.second()));
                return FsElem::inr(FsElem::pair(tagged.inner(), e.second()));
            });
        case K::DistR:
            return by_element_map(c, inst, [](const FsElem& e) {
                const FsElem& tagged = e.second();
                if (tagged.kind() == FsElem::Kind::InL)
                    return FsElem::inl(FsElem::pair(e.first(), tagged.inner()));
                return FsElem::inr(FsElem::pair(e.first(), tagged.inner()));
            });
        case K::NullL:
        case K::NullR:
            return by_element_map(c, inst, [](const FsElem& e) { return e; });
    }
    throw Error("malformed 2-cell node");
}

}  // namespace

SpanBijection eval_two_cell(const TwoCell& c, const SpanInstance& inst) {
    return span_cell_rec(c, inst);
}

namespace {

PermNatIso pointwise(std::function<PermArrow(const Word&)> fn) { return PermNatIso{std::move(fn)}; }

}  // namespace

PermNatIso eval_two_cell(const TwoCell& c, const PermInstance& inst) {
    using K = TwoCell::Kind;
    switch (c.kind()) {
        case K::Gen2:
            throw MissingAssignment(
                "the functor model carries no assignments for 2-cell generators");
        case K::VComp: {
            PermNatIso later = eval_two_cell(c.first_cell(), inst);
            PermNatIso earlier = eval_two_cell(c.second_cell(), inst);
            return pointwise([later, earlier](const Word& x) {
                return perm_compose(later.component(x), earlier.component(x));
            });
        }
        case K::Inv: {
            PermNatIso body = eval_two_cell(c.first_cell(), inst);
            return pointwise(
                [body](const Word& x) { return perm_inverse(body.component(x)); });
        }
        case K::SumCells: {
            PermNatIso l = eval_two_cell(c.first_cell(), inst);
            PermNatIso r = eval_two_cell(c.second_cell(), inst);
            return pointwise([l, r](const Word& x) {
                return perm_tensor(l.component(x), r.component(x));
            });
        }
        case K::HComp2: {
            // (alpha * beta)_x = alpha_{G'(x)} . F(beta_x), for alpha: F => F'
            // whiskered over beta: G => G'.
            auto [src_o, tgt_o] = boundary(c.first_cell(), inst.sig);
            (void)tgt_o;
            auto [src_i, tgt_i] = boundary(c.second_cell(), inst.sig);
            (void)src_i;
            MonoidalFunctorData F = eval_one_cell(src_o, inst);
            MonoidalFunctorData Gp = eval_one_cell(tgt_i, inst);
            PermNatIso alpha = eval_two_cell(c.first_cell(), inst);
            PermNatIso beta = eval_two_cell(c.second_cell(), inst);
            return pointwise([F, Gp, alpha, beta](const Word& x) {
                return perm_compose(alpha.component(Gp.object_map(x)),
                                    F.morphism_map(beta.component(x)));
            });
        }
        case K::Sym: {
            MonoidalFunctorData F = eval_one_cell(c.arg0(), inst);
            MonoidalFunctorData G = eval_one_cell(c.arg1(), inst);
            return pointwise([F, G](const Word& x) {
                return perm_symmetry(F.object_map(x), G.object_map(x));
            });
        }
        case K::DistL: {
            // F(G(x) ++ H(x)) -> F(G(x)) ++ F(H(x)): the inverse structure iso.
            MonoidalFunctorData F = eval_one_cell(c.arg0(), inst);
            MonoidalFunctorData G = eval_one_cell(c.arg1(), inst);
            MonoidalFunctorData H = eval_one_cell(c.arg2(), inst);
            return pointwise([F, G, H](const Word& x) {
                return perm_inverse(F.structure_iso(G.object_map(x), H.object_map(x)));
            });
        }
        default: {
            // Associators, unitors, right distributivity and nullities are
            // strict in the functor model; Id2 also lands here.
            auto [src, tgt] = boundary(c, inst.sig);
            (void)tgt;
            MonoidalFunctorData F = eval_one_cell(src, inst);
            return pointwise(
                [F](const Word& x) { return perm_identity(F.object_map(x)); });
        }
    }
}

Nat tilde_tensor(Nat n, Nat m) { return n == 0 ? Nat(0) : n * m; }

Word tilde_tensor(const Word& n, const Word& m,
                  const std::function<Word(const Word&, const Word&)>& tensor) {
    if (n.empty()) return Word{};
    return tensor(n, m);
}

}  // namespace smc
