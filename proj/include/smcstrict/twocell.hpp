#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "smcstrict/normal_form.hpp"

namespace smc {

// A formal structural (canonical) 2-cell: the associativity, unit, symmetry,
// distributivity and nullity isomorphisms, closed under vertical and
// horizontal composition, sums and inverses, plus declared generating
// 2-cells. Boundaries are derivable; the free semantics lives in perm_of().
//
// Directions of the atomic constructors:
//   AssocH(f,g,h):   f*(g*h)  =>  (f*g)*h
//   LUnit(f):        1@tgt(f) * f  =>  f
//   RUnit(f):        f * 1@src(f)  =>  f
//   AddAssoc(f,g,h): f+(g+h)  =>  (f+g)+h
//   AddUnitL(f):     0+f  =>  f
//   AddUnitR(f):     f+0  =>  f
//   Sym(f,g):        f+g  =>  g+f
//   DistL(f,g,h):    f*(g+h)  =>  f*g + f*h
//   DistR(f,g,h):    (f+g)*h  =>  f*h + g*h
//   NullL(f,c):      0@tgt(f)->c * f  =>  0@src(f)->c
//   NullR(f,c):      f * 0@c->src(f)  =>  0@c->tgt(f)
class TwoCell {
  public:
    enum class Kind : std::uint8_t {
        Id2, Gen2, VComp, HComp2, SumCells, Inv,
        AssocH, LUnit, RUnit, AddAssoc, AddUnitL, AddUnitR,
        Sym, DistL, DistR, NullL, NullR
    };

    // Empty handle; usable only as a placeholder before assignment.
    TwoCell() = default;

    static TwoCell id2(OneCell e);
    static TwoCell gen2(std::string name);
    // earlier applies first: vcomp(later, earlier).
    static TwoCell vcomp(TwoCell later, TwoCell earlier);
    static TwoCell hcomp2(TwoCell outer, TwoCell inner);
    static TwoCell sum_cells(TwoCell left, TwoCell right);
    static TwoCell inv(TwoCell c);
    static TwoCell assoc_h(OneCell f, OneCell g, OneCell h);
    static TwoCell lunit(OneCell f);
    static TwoCell runit(OneCell f);
    static TwoCell add_assoc(OneCell f, OneCell g, OneCell h);
    static TwoCell add_unit_l(OneCell f);
    static TwoCell add_unit_r(OneCell f);
    static TwoCell sym(OneCell f, OneCell g);
    static TwoCell dist_l(OneCell f, OneCell g, OneCell h);
    static TwoCell dist_r(OneCell f, OneCell g, OneCell h);
    static TwoCell null_l(OneCell f, std::string far);
    static TwoCell null_r(OneCell f, std::string far);

    Kind kind() const { return node_->kind; }
    const std::string& gen2_name() const { return node_->name; }
    const std::string& far_cell() const { return node_->name; }  // NullL/NullR
    const TwoCell& first_cell() const { return node_->ca; }   // VComp later / HComp2 outer / SumCells left / Inv body
    const TwoCell& second_cell() const { return node_->cb; }  // VComp earlier / HComp2 inner / SumCells right
    const OneCell& arg0() const { return node_->ea; }
    const OneCell& arg1() const { return node_->eb; }
    const OneCell& arg2() const { return node_->ec; }

    const void* node_key() const { return node_.get(); }

  private:
    struct Node {
        Kind kind;
        TwoCell ca, cb;
        OneCell ea, eb, ec;
        std::string name;  // Gen2 name, or the far 0-cell of NullL/NullR
    };
    explicit TwoCell(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

bool cell_equal(const TwoCell& a, const TwoCell& b);
std::string to_text(const TwoCell& c);

// true iff c contains no Gen2 anywhere.
bool is_structural(const TwoCell& c);

// Source and target expressions of c. Throws IllTyped for ill-formed
// constituents and BoundaryMismatch when composite constructors do not
// line up syntactically.
std::pair<OneCell, OneCell> boundary(const TwoCell& c, const SmcSignature& sig);

// The semantics of a structural cell: a content-preserving bijection between
// the monomial positions of its boundary normal forms. map[i] is the target
// position of source position i.
struct MonomialBijection {
    NormalForm source_nf;
    NormalForm target_nf;
    std::vector<std::uint32_t> map;

    static MonomialBijection identity(NormalForm nf);
    MonomialBijection inverse() const;
    // g after f (f first).
    static MonomialBijection compose(const MonomialBijection& g, const MonomialBijection& f);
    bool content_preserving() const;
    bool is_identity_map() const;
    bool operator==(const MonomialBijection& o) const {
        return source_nf == o.source_nf && target_nf == o.target_nf && map == o.map;
    }
};

// Free semantics of a structural 2-cell. Strict-by-construction cells
// (associators, unitors, right distributivity, nullities) are identity
// position maps between equal normal forms; Sym is the block transposition;
// DistL is the shuffle aligning the first-factor-major expansion with block
// order. Throws NotStructural on Gen2.
MonomialBijection perm_of(const TwoCell& c, const SmcSignature& sig,
                          const NfCache* cache = nullptr);

// Formal inverse: pushes through compositional constructors, wraps atomic
// cells in Inv, cancels Inv(Inv(c)) and fixes Id2. Gen2-free input only.
TwoCell invert(const TwoCell& c);

struct CheckReport {
    bool commutes = false;
    OneCell source;
    OneCell target;
    MonomialBijection path1_perm;
    MonomialBijection path2_perm;
};

// Compares the composite bijections of two vertically-composable cell paths
// sharing an outer boundary. Cells in a path are listed earliest first.
CheckReport check_diagram(std::span<const TwoCell> path1, std::span<const TwoCell> path2,
                          const SmcSignature& sig, const NfCache* cache = nullptr);

// The witness that e is canonically isomorphic to its strictification:
// a structural cell with boundary (e, embed(normalize(e))) whose bijection
// is the identity position map.
TwoCell canonical_iso(const OneCell& e, const SmcSignature& sig);

}  // namespace smc
