#include "smcstrict/twocell.hpp"

#include <algorithm>

#include "smcstrict/errors.hpp"
#include "smcstrict/testing.hpp"

namespace smc {

namespace testing {
MutationHooks& mutation_hooks() {
    static MutationHooks hooks;
    return hooks;
}
}  // namespace testing

#define SMC_CELL_NODE(k)                       \
    auto n = std::make_shared<Node>();         \
    n->kind = Kind::k

TwoCell TwoCell::id2(OneCell e) {
    SMC_CELL_NODE(Id2);
    n->ea = std::move(e);
    return TwoCell(std::move(n));
}

TwoCell TwoCell::gen2(std::string name) {
    SMC_CELL_NODE(Gen2);
    n->name = std::move(name);
    return TwoCell(std::move(n));
}

TwoCell TwoCell::vcomp(TwoCell later, TwoCell earlier) {
    SMC_CELL_NODE(VComp);
    n->ca = std::move(later);
    n->cb = std::move(earlier);
    return TwoCell(std::move(n));
}

TwoCell TwoCell::hcomp2(TwoCell outer, TwoCell inner) {
    SMC_CELL_NODE(HComp2);
    n->ca = std::move(outer);
    n->cb = std::move(inner);
    return TwoCell(std::move(n));
}

TwoCell TwoCell::sum_cells(TwoCell left, TwoCell right) {
    SMC_CELL_NODE(SumCells);
    n->ca = std::move(left);
    n->cb = std::move(right);
    return TwoCell(std::move(n));
}

TwoCell TwoCell::inv(TwoCell c) {
    if (!is_structural(c))
        throw NotStructural("Inv applies only to cells without 2-cell generators");
    SMC_CELL_NODE(Inv);
    n->ca = std::move(c);
    return TwoCell(std::move(n));
}

TwoCell TwoCell::assoc_h(OneCell f, OneCell g, OneCell h) {
    SMC_CELL_NODE(AssocH);
    n->ea = std::move(f);
    n->eb = std::move(g);
    n->ec = std::move(h);
    return TwoCell(std::move(n));
}

TwoCell TwoCell::lunit(OneCell f) {
    SMC_CELL_NODE(LUnit);
    n->ea = std::move(f);
    return TwoCell(std::move(n));
}

TwoCell TwoCell::runit(OneCell f) {
    SMC_CELL_NODE(RUnit);
    n->ea = std::move(f);
    return TwoCell(std::move(n));
}

TwoCell TwoCell::add_assoc(OneCell f, OneCell g, OneCell h) {
    SMC_CELL_NODE(AddAssoc);
    n->ea = std::move(f);
    n->eb = std::move(g);
    n->ec = std::move(h);
    return TwoCell(std::move(n));
}

TwoCell TwoCell::add_unit_l(OneCell f) {
    SMC_CELL_NODE(AddUnitL);
    n->ea = std::move(f);
    return TwoCell(std::move(n));
}

TwoCell TwoCell::add_unit_r(OneCell f) {
    SMC_CELL_NODE(AddUnitR);
    n->ea = std::move(f);
    return TwoCell(std::move(n));
}

TwoCell TwoCell::sym(OneCell f, OneCell g) {
    SMC_CELL_NODE(Sym);
    n->ea = std::move(f);
    n->eb = std::move(g);
    return TwoCell(std::move(n));
}

TwoCell TwoCell::dist_l(OneCell f, OneCell g, OneCell h) {
    SMC_CELL_NODE(DistL);
    n->ea = std::move(f);
    n->eb = std::move(g);
    n->ec = std::move(h);
    return TwoCell(std::move(n));
}

TwoCell TwoCell::dist_r(OneCell f, OneCell g, OneCell h) {
    SMC_CELL_NODE(DistR);
    n->ea = std::move(f);
    n->eb = std::move(g);
    n->ec = std::move(h);
    return TwoCell(std::move(n));
}

TwoCell TwoCell::null_l(OneCell f, std::string far) {
    SMC_CELL_NODE(NullL);
    n->ea = std::move(f);
    n->name = std::move(far);
    return TwoCell(std::move(n));
}

TwoCell TwoCell::null_r(OneCell f, std::string far) {
    SMC_CELL_NODE(NullR);
    n->ea = std::move(f);
    n->name = std::move(far);
    return TwoCell(std::move(n));
}

#undef SMC_CELL_NODE

bool is_structural(const TwoCell& c) {
    switch (c.kind()) {
        case TwoCell::Kind::Gen2:
            return false;
        case TwoCell::Kind::VComp:
        case TwoCell::Kind::HComp2:
        case TwoCell::Kind::SumCells:
            return is_structural(c.first_cell()) && is_structural(c.second_cell());
        case TwoCell::Kind::Inv:
            return is_structural(c.first_cell());
        default:
            return true;
    }
}

bool cell_equal(const TwoCell& a, const TwoCell& b) {
    if (a.node_key() == b.node_key()) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case TwoCell::Kind::Id2:
            return expr_equal(a.arg0(), b.arg0());
        case TwoCell::Kind::Gen2:
            return a.gen2_name() == b.gen2_name();
        case TwoCell::Kind::VComp:
        case TwoCell::Kind::HComp2:
        case TwoCell::Kind::SumCells:
            return cell_equal(a.first_cell(), b.first_cell()) &&
                   cell_equal(a.second_cell(), b.second_cell());
        case TwoCell::Kind::Inv:
            return cell_equal(a.first_cell(), b.first_cell());
        case TwoCell::Kind::LUnit:
        case TwoCell::Kind::RUnit:
        case TwoCell::Kind::AddUnitL:
        case TwoCell::Kind::AddUnitR:
            return expr_equal(a.arg0(), b.arg0());
        case TwoCell::Kind::Sym:
            return expr_equal(a.arg0(), b.arg0()) && expr_equal(a.arg1(), b.arg1());
        case TwoCell::Kind::AssocH:
        case TwoCell::Kind::AddAssoc:
        case TwoCell::Kind::DistL:
        case TwoCell::Kind::DistR:
            return expr_equal(a.arg0(), b.arg0()) && expr_equal(a.arg1(), b.arg1()) &&
                   expr_equal(a.arg2(), b.arg2());
        case TwoCell::Kind::NullL:
        case TwoCell::Kind::NullR:
            return expr_equal(a.arg0(), b.arg0()) && a.far_cell() == b.far_cell();
    }
    return false;
}

std::string to_text(const TwoCell& c) {
    auto unary = [&](const char* name) { return std::string(name) + "(" + to_text(c.arg0()) + ")"; };
    auto ternary = [&](const char* name) {
        return std::string(name) + "(" + to_text(c.arg0()) + ", " + to_text(c.arg1()) + ", " +
               to_text(c.arg2()) + ")";
    };
    switch (c.kind()) {
        case TwoCell::Kind::Id2:
            return "id(" + to_text(c.arg0()) + ")";
        case TwoCell::Kind::Gen2:
            return c.gen2_name();
        case TwoCell::Kind::VComp:
            return "vcomp(" + to_text(c.first_cell()) + ", " + to_text(c.second_cell()) + ")";
        case TwoCell::Kind::HComp2:
            return "hcomp(" + to_text(c.first_cell()) + ", " + to_text(c.second_cell()) + ")";
        case TwoCell::Kind::SumCells:
            return "sum(" + to_text(c.first_cell()) + ", " + to_text(c.second_cell()) + ")";
        case TwoCell::Kind::Inv:
            return "inv(" + to_text(c.first_cell()) + ")";
        case TwoCell::Kind::AssocH:
            return ternary("assoc");
        case TwoCell::Kind::LUnit:
            return unary("lunit");
        case TwoCell::Kind::RUnit:
            return unary("runit");
        case TwoCell::Kind::AddAssoc:
            return ternary("addassoc");
        case TwoCell::Kind::AddUnitL:
            return unary("addunitl");
        case TwoCell::Kind::AddUnitR:
            return unary("addunitr");
        case TwoCell::Kind::Sym:
            return "sym(" + to_text(c.arg0()) + ", " + to_text(c.arg1()) + ")";
        case TwoCell::Kind::DistL:
            return ternary("distl");
        case TwoCell::Kind::DistR:
            return ternary("distr");
        case TwoCell::Kind::NullL:
            return "nulll(" + to_text(c.arg0()) +
                   (c.far_cell().empty() ? ")" : ", " + c.far_cell() + ")");
        case TwoCell::Kind::NullR:
            return "nullr(" + to_text(c.arg0()) +
                   (c.far_cell().empty() ? ")" : ", " + c.far_cell() + ")");
    }
    return "?";
}

namespace {

// Require (s,t) endpoints for each listed expression to agree pairwise.
void require_parallel(const OneCell& a, const OneCell& b, const SmcSignature& sig,
                      const char* what) {
    if (endpoints_ix(a, sig) != endpoints_ix(b, sig))
        throw IllTyped(std::string(what) + ": summands are not parallel", "");
}

void require_composable(const OneCell& outer, const OneCell& inner, const SmcSignature& sig,
                        const char* what) {
    if (endpoints_ix(inner, sig).second != endpoints_ix(outer, sig).first)
        throw IllTyped(std::string(what) + ": factors are not composable", "");
}

ZeroIx resolve_zero(const std::string& name, const SmcSignature& sig) {
    auto z = sig.zero_index(name);
    if (!z) throw IllTyped("unknown 0-cell '" + name + "'", "");
    return *z;
}

OneCell zero_expr(ZeroIx s, ZeroIx t, const SmcSignature& sig) {
    return OneCell::zero_unit(sig.zero_name(s), sig.zero_name(t));
}

}  // namespace

std::pair<OneCell, OneCell> boundary(const TwoCell& c, const SmcSignature& sig) {
    using K = TwoCell::Kind;
    switch (c.kind()) {
        case K::Id2: {
            endpoints_ix(c.arg0(), sig);
            return {c.arg0(), c.arg0()};
        }
        case K::Gen2: {
            const Gen2Cell* g = sig.find_gen2(c.gen2_name());
            if (!g) throw IllTyped("unknown 2-cell generator '" + c.gen2_name() + "'", "");
            return {g->src, g->tgt};
        }
        case K::VComp: {
            auto earlier = boundary(c.second_cell(), sig);
            auto later = boundary(c.first_cell(), sig);
            if (!expr_equal(earlier.second, later.first))
                throw BoundaryMismatch("vertical composition: target of earlier cell is " +
                                       to_text(earlier.second) + ", source of later cell is " +
                                       to_text(later.first));
            return {earlier.first, later.second};
        }
        case K::HComp2: {
            auto outer = boundary(c.first_cell(), sig);
            auto inner = boundary(c.second_cell(), sig);
            if (endpoints_ix(inner.first, sig).second != endpoints_ix(outer.first, sig).first)
                throw BoundaryMismatch("horizontal composition of cells: boundaries do not compose");
            return {OneCell::hcomp(outer.first, inner.first),
                    OneCell::hcomp(outer.second, inner.second)};
        }
        case K::SumCells: {
            auto l = boundary(c.first_cell(), sig);
            auto r = boundary(c.second_cell(), sig);
            if (endpoints_ix(l.first, sig) != endpoints_ix(r.first, sig))
                throw BoundaryMismatch("sum of cells: boundaries are not parallel");
            return {OneCell::sum(l.first, r.first), OneCell::sum(l.second, r.second)};
        }
        case K::Inv: {
            auto b = boundary(c.first_cell(), sig);
            return {b.second, b.first};
        }
        case K::AssocH: {
            require_composable(c.arg1(), c.arg2(), sig, "assoc");
            require_composable(c.arg0(), c.arg1(), sig, "assoc");
            return {OneCell::hcomp(c.arg0(), OneCell::hcomp(c.arg1(), c.arg2())),
                    OneCell::hcomp(OneCell::hcomp(c.arg0(), c.arg1()), c.arg2())};
        }
        case K::LUnit: {
            auto [s, t] = endpoints_ix(c.arg0(), sig);
            (void)s;
            return {OneCell::hcomp(OneCell::id_unit(sig.zero_name(t)), c.arg0()), c.arg0()};
        }
        case K::RUnit: {
            auto [s, t] = endpoints_ix(c.arg0(), sig);
            (void)t;
            return {OneCell::hcomp(c.arg0(), OneCell::id_unit(sig.zero_name(s))), c.arg0()};
        }
        case K::AddAssoc: {
            require_parallel(c.arg0(), c.arg1(), sig, "addassoc");
            require_parallel(c.arg1(), c.arg2(), sig, "addassoc");
            return {OneCell::sum(c.arg0(), OneCell::sum(c.arg1(), c.arg2())),
                    OneCell::sum(OneCell::sum(c.arg0(), c.arg1()), c.arg2())};
        }
        case K::AddUnitL: {
            auto [s, t] = endpoints_ix(c.arg0(), sig);
            return {OneCell::sum(zero_expr(s, t, sig), c.arg0()), c.arg0()};
        }
        case K::AddUnitR: {
            auto [s, t] = endpoints_ix(c.arg0(), sig);
            return {OneCell::sum(c.arg0(), zero_expr(s, t, sig)), c.arg0()};
        }
        case K::Sym: {
            require_parallel(c.arg0(), c.arg1(), sig, "sym");
            return {OneCell::sum(c.arg0(), c.arg1()), OneCell::sum(c.arg1(), c.arg0())};
        }
        case K::DistL: {
            require_parallel(c.arg1(), c.arg2(), sig, "distl");
            require_composable(c.arg0(), c.arg1(), sig, "distl");
            return {OneCell::hcomp(c.arg0(), OneCell::sum(c.arg1(), c.arg2())),
                    OneCell::sum(OneCell::hcomp(c.arg0(), c.arg1()),
                                 OneCell::hcomp(c.arg0(), c.arg2()))};
        }
        case K::DistR: {
            require_parallel(c.arg0(), c.arg1(), sig, "distr");
            require_composable(c.arg0(), c.arg2(), sig, "distr");
            return {OneCell::hcomp(OneCell::sum(c.arg0(), c.arg1()), c.arg2()),
                    OneCell::sum(OneCell::hcomp(c.arg0(), c.arg2()),
                                 OneCell::hcomp(c.arg1(), c.arg2()))};
        }
        case K::NullL: {
            auto [s, t] = endpoints_ix(c.arg0(), sig);
            ZeroIx far = resolve_zero(c.far_cell(), sig);
            return {OneCell::hcomp(zero_expr(t, far, sig), c.arg0()), zero_expr(s, far, sig)};
        }
        case K::NullR: {
            auto [s, t] = endpoints_ix(c.arg0(), sig);
            ZeroIx far = resolve_zero(c.far_cell(), sig);
            return {OneCell::hcomp(c.arg0(), zero_expr(far, s, sig)), zero_expr(far, t, sig)};
        }
    }
    throw IllTyped("malformed 2-cell node", "");
}

MonomialBijection MonomialBijection::identity(NormalForm nf) {
    MonomialBijection b;
    b.map.resize(nf.monomial_count());
    for (std::size_t i = 0; i < b.map.size(); ++i) b.map[i] = static_cast<std::uint32_t>(i);
    b.source_nf = nf;
    b.target_nf = std::move(nf);
    return b;
}

MonomialBijection MonomialBijection::inverse() const {
    MonomialBijection out;
    out.source_nf = target_nf;
    out.target_nf = source_nf;
    out.map.resize(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) out.map[map[i]] = static_cast<std::uint32_t>(i);
    return out;
}

MonomialBijection MonomialBijection::compose(const MonomialBijection& g,
                                             const MonomialBijection& f) {
    if (!(f.target_nf == g.source_nf))
        throw BoundaryMismatch("bijection composition: middle normal forms disagree");
    MonomialBijection out;
    out.source_nf = f.source_nf;
    out.target_nf = g.target_nf;
    out.map.resize(f.map.size());
    for (std::size_t i = 0; i < f.map.size(); ++i) out.map[i] = g.map[f.map[i]];
    return out;
}

bool MonomialBijection::content_preserving() const {
    if (source_nf.monomial_count() != target_nf.monomial_count()) return false;
    if (map.size() != source_nf.monomial_count()) return false;
    for (std::size_t i = 0; i < map.size(); ++i) {
        const auto s = source_nf.monomial(i);
        const auto t = target_nf.monomial(map[i]);
        if (!std::equal(s.begin(), s.end(), t.begin(), t.end())) return false;
    }
    return true;
}

bool MonomialBijection::is_identity_map() const {
    for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i] != i) return false;
    return true;
}

namespace {

MonomialBijection perm_rec(const TwoCell& c, const SmcSignature& sig,
                           const NfCache* cache) {
    using K = TwoCell::Kind;
    auto nf = [&](const OneCell& e) { return normalize_lookup(e, sig, cache); };
    switch (c.kind()) {
        case K::Id2:
            return MonomialBijection::identity(nf(c.arg0()));
        case K::Gen2:
            throw NotStructural("free semantics is undefined for 2-cell generator '" +
                                c.gen2_name() + "'");
        case K::VComp:
            return MonomialBijection::compose(perm_rec(c.first_cell(), sig, cache),
                                              perm_rec(c.second_cell(), sig, cache));
        case K::HComp2: {
            auto outer = perm_rec(c.first_cell(), sig, cache);
            auto inner = perm_rec(c.second_cell(), sig, cache);
            MonomialBijection out;
            out.source_nf = strict_compose(outer.source_nf, inner.source_nf);
            out.target_nf = strict_compose(outer.target_nf, inner.target_nf);
            const std::size_t l = inner.map.size();
            out.map.resize(outer.map.size() * l);
            for (std::size_t i = 0; i < outer.map.size(); ++i)
                for (std::size_t j = 0; j < l; ++j)
                    out.map[i * l + j] =
                        static_cast<std::uint32_t>(outer.map[i] * l + inner.map[j]);
            return out;
        }
        case K::SumCells: {
            auto left = perm_rec(c.first_cell(), sig, cache);
            auto right = perm_rec(c.second_cell(), sig, cache);
            MonomialBijection out;
            const std::size_t k = left.map.size();
            out.source_nf = strict_sum(left.source_nf, right.source_nf);
            out.target_nf = strict_sum(left.target_nf, right.target_nf);
            out.map.resize(k + right.map.size());
            for (std::size_t i = 0; i < k; ++i) out.map[i] = left.map[i];
            for (std::size_t j = 0; j < right.map.size(); ++j)
                out.map[k + j] = static_cast<std::uint32_t>(k + right.map[j]);
            return out;
        }
        case K::Inv:
            return perm_rec(c.first_cell(), sig, cache).inverse();
        case K::AssocH: {
            require_composable(c.arg1(), c.arg2(), sig, "assoc");
            require_composable(c.arg0(), c.arg1(), sig, "assoc");
            return MonomialBijection::identity(
                strict_compose(nf(c.arg0()), strict_compose(nf(c.arg1()), nf(c.arg2()))));
        }
        case K::LUnit:
        case K::RUnit:
            return MonomialBijection::identity(nf(c.arg0()));
        case K::AddAssoc: {
            require_parallel(c.arg0(), c.arg1(), sig, "addassoc");
            require_parallel(c.arg1(), c.arg2(), sig, "addassoc");
            return MonomialBijection::identity(
                strict_sum(nf(c.arg0()), strict_sum(nf(c.arg1()), nf(c.arg2()))));
        }
        case K::AddUnitL:
        case K::AddUnitR:
            return MonomialBijection::identity(nf(c.arg0()));
        case K::Sym: {
            require_parallel(c.arg0(), c.arg1(), sig, "sym");
            auto F = nf(c.arg0());
            auto G = nf(c.arg1());
            MonomialBijection out;
            out.source_nf = strict_sum(F, G);
            out.target_nf = strict_sum(G, F);
            const std::size_t k = F.monomial_count(), l = G.monomial_count();
            out.map.resize(k + l);
            for (std::size_t i = 0; i < k; ++i) out.map[i] = static_cast<std::uint32_t>(l + i);
            for (std::size_t j = 0; j < l; ++j) out.map[k + j] = static_cast<std::uint32_t>(j);
            return out;
        }
        case K::DistL: {
            require_parallel(c.arg1(), c.arg2(), sig, "distl");
            require_composable(c.arg0(), c.arg1(), sig, "distl");
            auto F = nf(c.arg0());
            auto G = nf(c.arg1());
            auto H = nf(c.arg2());
            MonomialBijection out;
            out.source_nf = strict_compose(F, strict_sum(G, H));
            out.target_nf = strict_sum(strict_compose(F, G), strict_compose(F, H));
            const std::size_t k = F.monomial_count();
            const std::size_t m = G.monomial_count(), n = H.monomial_count();
            out.map.resize(k * (m + n));
            if (testing::mutation_hooks().distl_identity_perm) {
                for (std::size_t i = 0; i < out.map.size(); ++i)
                    out.map[i] = static_cast<std::uint32_t>(i);
                return out;
            }
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < m + n; ++j)
                    out.map[i * (m + n) + j] = static_cast<std::uint32_t>(
                        j < m ? i * m + j : k * m + i * n + (j - m));
            return out;
        }
        case K::DistR: {
            require_parallel(c.arg0(), c.arg1(), sig, "distr");
            require_composable(c.arg0(), c.arg2(), sig, "distr");
            return MonomialBijection::identity(
                strict_compose(strict_sum(nf(c.arg0()), nf(c.arg1())), nf(c.arg2())));
        }
        case K::NullL: {
            auto [s, t] = endpoints_ix(c.arg0(), sig);
            (void)t;
            ZeroIx far = resolve_zero(c.far_cell(), sig);
            return MonomialBijection::identity(NormalForm::zero(s, far));
        }
        case K::NullR: {
            auto [s, t] = endpoints_ix(c.arg0(), sig);
            (void)s;
            ZeroIx far = resolve_zero(c.far_cell(), sig);
            return MonomialBijection::identity(NormalForm::zero(far, t));
        }
    }
    throw IllTyped("malformed 2-cell node", "");
}

}  // namespace

MonomialBijection perm_of(const TwoCell& c, const SmcSignature& sig,
                          const NfCache* cache) {
    return perm_rec(c, sig, cache);
}

TwoCell invert(const TwoCell& c) {
    using K = TwoCell::Kind;
    switch (c.kind()) {
        case K::Id2:
            return c;
        case K::Gen2:
            throw NotStructural("cannot invert a 2-cell generator");
        case K::VComp:
            return TwoCell::vcomp(invert(c.second_cell()), invert(c.first_cell()));
        case K::HComp2:
            return TwoCell::hcomp2(invert(c.first_cell()), invert(c.second_cell()));
        case K::SumCells:
            return TwoCell::sum_cells(invert(c.first_cell()), invert(c.second_cell()));
        case K::Inv:
            return c.first_cell();
        default:
            return TwoCell::inv(c);
    }
}

CheckReport check_diagram(std::span<const TwoCell> path1, std::span<const TwoCell> path2,
                          const SmcSignature& sig, const NfCache* cache) {
    if (path1.empty() || path2.empty())
        throw BoundaryMismatch("a diagram path must contain at least one cell");

    auto compose_path = [&](std::span<const TwoCell> path)
        -> std::pair<std::pair<OneCell, OneCell>, MonomialBijection> {
        auto bounds = boundary(path[0], sig);
        auto perm = perm_of(path[0], sig, cache);
        OneCell tgt = bounds.second;
        for (std::size_t i = 1; i < path.size(); ++i) {
            auto b = boundary(path[i], sig);
            if (!expr_equal(tgt, b.first))
                throw BoundaryMismatch("path is not vertically composable at step " +
                                       std::to_string(i) + ": have " + to_text(tgt) +
                                       ", next cell starts at " + to_text(b.first));
            perm = MonomialBijection::compose(perm_of(path[i], sig, cache), perm);
            tgt = b.second;
        }
        return {{bounds.first, tgt}, perm};
    };

    auto [b1, p1] = compose_path(path1);
    auto [b2, p2] = compose_path(path2);
    if (!expr_equal(b1.first, b2.first) || !expr_equal(b1.second, b2.second))
        throw BoundaryMismatch("the two paths do not share an outer boundary");

    CheckReport report;
    report.source = b1.first;
    report.target = b1.second;
    report.commutes = p1 == p2;
    report.path1_perm = std::move(p1);
    report.path2_perm = std::move(p2);
    return report;
}

// ---------------------------------------------------------------------------
// canonical_iso

namespace {

bool is_id2(const TwoCell& c) { return c.kind() == TwoCell::Kind::Id2; }

// Vertical composition that drops identity cells.
TwoCell vc(TwoCell later, TwoCell earlier) {
    if (is_id2(earlier)) return later;
    if (is_id2(later)) return earlier;
    return TwoCell::vcomp(std::move(later), std::move(earlier));
}

TwoCell sc(TwoCell left, TwoCell right) {
    if (is_id2(left) && is_id2(right))
        return TwoCell::id2(OneCell::sum(left.arg0(), right.arg0()));
    return TwoCell::sum_cells(std::move(left), std::move(right));
}

TwoCell hc(TwoCell outer, TwoCell inner) {
    if (is_id2(outer) && is_id2(inner))
        return TwoCell::id2(OneCell::hcomp(outer.arg0(), inner.arg0()));
    return TwoCell::hcomp2(std::move(outer), std::move(inner));
}

NormalForm nf_slice(const NormalForm& nf, std::size_t from) {
    std::vector<Monomial> ms;
    ms.reserve(nf.monomial_count() - from);
    for (std::size_t i = from; i < nf.monomial_count(); ++i) ms.push_back(nf.monomial_value(i));
    return NormalForm::from_monomials(nf.src(), nf.tgt(), ms);
}

OneCell embed_mono(const Monomial& m, const SmcSignature& sig) {
    return embed(NormalForm::single(m), sig);
}

// E(m1) * E(m2)  =>  E(m1 . m2), by re-association and unitors.
TwoCell mono_mono(const Monomial& m1, const Monomial& m2, const SmcSignature& sig) {
    if (m1.gens.empty()) return TwoCell::lunit(embed_mono(m2, sig));
    if (m2.gens.empty()) return TwoCell::runit(embed_mono(m1, sig));
    if (m1.gens.size() == 1)
        return TwoCell::id2(
            OneCell::hcomp(OneCell::gen(sig.gen_name(m1.gens[0])), embed_mono(m2, sig)));
    // Peel the outermost letter; the tail string ends at its source.
    Monomial rest{m1.src, sig.gen_src(m1.gens[0]), {m1.gens.begin() + 1, m1.gens.end()}};
    OneCell head = OneCell::gen(sig.gen_name(m1.gens[0]));
    TwoCell reassoc =
        TwoCell::inv(TwoCell::assoc_h(head, embed_mono(rest, sig), embed_mono(m2, sig)));
    TwoCell deeper = hc(TwoCell::id2(head), mono_mono(rest, m2, sig));
    return vc(std::move(deeper), std::move(reassoc));
}

// embed(A) + embed(B)  =>  embed(A ++ B): unitors and re-association only.
TwoCell merge_sum(const NormalForm& A, const NormalForm& B, const SmcSignature& sig) {
    if (A.is_zero()) return TwoCell::add_unit_l(embed(B, sig));
    if (B.is_zero()) return TwoCell::add_unit_r(embed(A, sig));
    if (A.monomial_count() == 1)
        return TwoCell::id2(OneCell::sum(embed(A, sig), embed(B, sig)));
    OneCell head = embed_mono(A.monomial_value(0), sig);
    NormalForm rest = nf_slice(A, 1);
    TwoCell reassoc =
        TwoCell::inv(TwoCell::add_assoc(head, embed(rest, sig), embed(B, sig)));
    TwoCell deeper = sc(TwoCell::id2(std::move(head)), merge_sum(rest, B, sig));
    return vc(std::move(deeper), std::move(reassoc));
}

// E(m) * embed(B)  =>  embed([m] compose B); B nonempty.
TwoCell mono_comp(const Monomial& m, const NormalForm& B, const SmcSignature& sig) {
    NormalForm M = NormalForm::single(m);
    if (B.monomial_count() == 1) return mono_mono(m, B.monomial_value(0), sig);
    Monomial w1 = B.monomial_value(0);
    NormalForm rest = nf_slice(B, 1);
    TwoCell split =
        TwoCell::dist_l(embed_mono(m, sig), embed_mono(w1, sig), embed(rest, sig));
    TwoCell blocks = sc(mono_mono(m, w1, sig), mono_comp(m, rest, sig));
    TwoCell flatten = merge_sum(strict_compose(M, NormalForm::single(w1)),
                                strict_compose(M, rest), sig);
    return vc(std::move(flatten), vc(std::move(blocks), std::move(split)));
}

// embed(A) * embed(B)  =>  embed(A compose B).
TwoCell comp_merge(const NormalForm& A, const NormalForm& B, const SmcSignature& sig) {
    if (A.is_zero()) return TwoCell::null_l(embed(B, sig), sig.zero_name(A.tgt()));
    if (B.is_zero()) return TwoCell::null_r(embed(A, sig), sig.zero_name(B.src()));
    if (A.monomial_count() == 1) return mono_comp(A.monomial_value(0), B, sig);
    Monomial m1 = A.monomial_value(0);
    NormalForm rest = nf_slice(A, 1);
    TwoCell split =
        TwoCell::dist_r(embed_mono(m1, sig), embed(rest, sig), embed(B, sig));
    TwoCell blocks = sc(mono_comp(m1, B, sig), comp_merge(rest, B, sig));
    TwoCell flatten = merge_sum(strict_compose(NormalForm::single(m1), B),
                                strict_compose(rest, B), sig);
    return vc(std::move(flatten), vc(std::move(blocks), std::move(split)));
}

TwoCell canonical_rec(const OneCell& e, const SmcSignature& sig, NfCache* cache) {
    switch (e.kind()) {
        case OneCell::Kind::Gen:
        case OneCell::Kind::IdUnit:
        case OneCell::Kind::ZeroUnit:
            return TwoCell::id2(e);
        case OneCell::Kind::Sum: {
            TwoCell cl = canonical_rec(e.left(), sig, cache);
            TwoCell cr = canonical_rec(e.right(), sig, cache);
            TwoCell under = sc(std::move(cl), std::move(cr));
            // sc() rebuilt the sum of the children; pin the source to e itself.
            if (is_id2(under)) under = TwoCell::id2(e);
            return vc(merge_sum(normalize(e.left(), sig, cache),
                                normalize(e.right(), sig, cache), sig),
                      std::move(under));
        }
        case OneCell::Kind::HComp: {
            TwoCell co = canonical_rec(e.outer(), sig, cache);
            TwoCell ci = canonical_rec(e.inner(), sig, cache);
            TwoCell under = hc(std::move(co), std::move(ci));
            if (is_id2(under)) under = TwoCell::id2(e);
            return vc(comp_merge(normalize(e.outer(), sig, cache),
                                 normalize(e.inner(), sig, cache), sig),
                      std::move(under));
        }
    }
    throw IllTyped("malformed expression node", "");
}

}  // namespace

TwoCell canonical_iso(const OneCell& e, const SmcSignature& sig) {
    endpoints_ix(e, sig);
    NfCache cache;
    return canonical_rec(e, sig, &cache);
}

}  // namespace smc
