#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "smcstrict/errors.hpp"
#include "smcstrict/expr.hpp"

namespace smc {

// Index of a 0-cell within a signature. Normal forms and instance tables
// work with indices; names live only in the signature.
using ZeroIx = std::uint32_t;
// Index of a generating 1-cell within a signature.
using GenIx = std::uint32_t;

// A 0-cell, identified by name.
struct ZeroCellId {
    std::string name;
    bool operator==(const ZeroCellId& o) const { return name == o.name; }
};

struct Gen1Cell {
    std::string name;
    ZeroCellId src;
    ZeroCellId tgt;
};

struct Gen2Cell {
    std::string name;
    OneCell src;
    OneCell tgt;
};

// A finite presentation of a free SMC-category: 0-cells, generating 1-cells
// with endpoints, and generating 2-cells with expression boundaries. All
// three name spaces must be duplicate-free and all references must resolve;
// `validate()` enforces this and is called by the building API.
class SmcSignature {
  public:
    SmcSignature() = default;

    void add_zero_cell(const std::string& name);
    void add_gen1(const std::string& name, const std::string& src, const std::string& tgt);
    void add_gen2(const std::string& name, OneCell src, OneCell tgt);

    std::size_t zero_cell_count() const { return zero_names_.size(); }
    std::size_t gen1_count() const { return gen_names_.size(); }
    std::size_t gen2_count() const { return gen2_.size(); }

    const std::string& zero_name(ZeroIx i) const { return zero_names_[i]; }
    const std::string& gen_name(GenIx i) const { return gen_names_[i]; }
    ZeroIx gen_src(GenIx i) const { return gen_src_[i]; }
    ZeroIx gen_tgt(GenIx i) const { return gen_tgt_[i]; }

    std::optional<ZeroIx> zero_index(const std::string& name) const;
    std::optional<GenIx> gen_index(const std::string& name) const;
    const Gen2Cell* find_gen2(const std::string& name) const;
    const std::vector<Gen2Cell>& gen2_cells() const { return gen2_; }

    Gen1Cell gen1_cell(GenIx i) const {
        return Gen1Cell{gen_names_[i], {zero_names_[gen_src_[i]]}, {zero_names_[gen_tgt_[i]]}};
    }

  private:
    std::vector<std::string> zero_names_;
    std::vector<std::string> gen_names_;
    std::vector<ZeroIx> gen_src_;
    std::vector<ZeroIx> gen_tgt_;
    std::vector<Gen2Cell> gen2_;
    std::unordered_map<std::string, ZeroIx> zero_by_name_;
    std::unordered_map<std::string, GenIx> gen_by_name_;
};

// Source and target 0-cells of a well-formed expression. Throws IllTyped,
// carrying the path of the offending sub-expression, on composition or sum
// endpoint mismatches and on unknown generators.
std::pair<ZeroCellId, ZeroCellId> endpoints(const OneCell& e, const SmcSignature& sig);

// Index-level variant used by everything downstream of typing.
std::pair<ZeroIx, ZeroIx> endpoints_ix(const OneCell& e, const SmcSignature& sig);

// Total: true iff endpoints() succeeds.
bool well_formed(const OneCell& e, const SmcSignature& sig);

// The opposite signature: every generator's endpoints swapped, 2-cell
// boundaries mapped through opposite(). Involutive.
SmcSignature opposite(const SmcSignature& sig);

// The built-in signature used by the command line and the verification
// suites when nothing else is declared: 0-cells a, b, c with f, f': a -> b,
// g, g': b -> c and h: a -> c.
SmcSignature standard_signature();

// A one-0-cell signature for the semiring model: generators p, q, r, s, t
// on a single 0-cell u.
SmcSignature semiring_test_signature();

}  // namespace smc
