#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "smcstrict/instances.hpp"
#include "smcstrict/twocell.hpp"

namespace smc {

// All well-formed expressions of tree depth <= depth (leaves are depth 0),
// deterministic order, duplicate-free. Materializes the whole layer; use
// for_each_expr for the big sweeps.
std::vector<OneCell> enumerate_exprs(const SmcSignature& sig, int depth);

// Streams every expression of depth <= depth exactly once without keeping
// them: the callback receives the expression and its normal form.
void for_each_expr(const SmcSignature& sig, int depth,
                   const std::function<void(const OneCell&, const NormalForm&)>& fn);

// All composable generator strings of length <= max_len (plus the empty
// string at each 0-cell), deterministic order.
std::vector<Monomial> enumerate_monomials(const SmcSignature& sig, int max_len);

// All normal forms with <= max_monomials monomials over the monomial set
// above, per endpoint pair, ordered sequences with repetition.
std::vector<NormalForm> enumerate_normal_forms(const SmcSignature& sig, int max_monomials,
                                               int max_len);

// Seeded random expression generators; deterministic across platforms.
OneCell random_expr_at(const SmcSignature& sig, std::mt19937_64& eng, int depth, ZeroIx s,
                       ZeroIx t);
OneCell random_expr(const SmcSignature& sig, std::mt19937_64& eng, int depth);

// The independent reference path: exhaustive application of the single-step
// distribution/unit/nullity rewrite rules (left distribution only under a
// sum-free first factor, so expansion comes out first-factor-major), then the
// sum-of-products tree is read off as a normal form.
NormalForm naive_sop_oracle(const OneCell& e, const SmcSignature& sig);

struct SuiteFailure {
    std::string case_label;
    std::string reproducer;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t cases = 0;
    std::vector<SuiteFailure> failures;
    std::optional<std::uint64_t> seed;
    double elapsed_ms = 0.0;

    bool passed() const { return failures.empty(); }
};

// Equality for determinism checks; elapsed_ms is wall time and not compared.
bool reports_equal(const SuiteReport& a, const SuiteReport& b);

// Suites stop collecting after this many failures (they keep the failure
// count deterministic by stopping the sweep as well).
inline constexpr std::size_t kMaxRecordedFailures = 64;

// The five PC coherence diagrams instantiated over every tuple of enumerated
// expressions of depth <= depth.
SuiteReport pc_axiom_suite(const SmcSignature& sig, int depth);

// Strict laws on the enumerated normal-form box.
SuiteReport strict_law_suite(const SmcSignature& sig, int max_monomials, int max_len);

// normalize(embed(nf)) == nf on the box, and idempotence through embed over
// every expression of depth <= depth.
SuiteReport roundtrip_suite(const SmcSignature& sig, int depth, int max_monomials, int max_len);

// The left-distributivity defect, made exact: multisets always agree; the
// sides agree as sequences when the first factor has <= 1 monomial or a
// summand is empty; the aligning shuffle is non-identity exactly otherwise;
// and distinct-content instances with a non-identity shuffle differ as
// sequences.
SuiteReport left_defect_suite(const SmcSignature& sig, std::uint64_t random_samples,
                              std::uint64_t seed);

// canonical_iso boundaries, structurality and identity bijections over every
// expression of depth <= depth.
SuiteReport canonical_iso_suite(const SmcSignature& sig, int depth);

// normalize against the naive rewriter over every expression of
// depth <= depth plus seeded random expressions of depth <= random_depth.
SuiteReport oracle_suite(const SmcSignature& sig, int depth, std::uint64_t random_count,
                         int random_depth, std::uint64_t seed);

// The aggregate strictification suite: strict laws, round trips, the
// left-distributivity defect, canonical witnesses, and oracle agreement.
SuiteReport strictification_suite(const SmcSignature& sig, int depth);

// Randomized model checks. For spans: distributivity/nullity/unit bijections
// exist and are natural, pullback composition is associative up to the
// canonical bijection, and the composite apex honors the documented pair
// order. For semirings: strictification commutes with evaluation and the
// bilinearity identities hold numerically.
SuiteReport instance_axiom_suite(const SpanInstance& inst, std::uint64_t samples,
                                 std::uint64_t seed);
SuiteReport instance_axiom_suite(const SemiringInstance& inst, std::uint64_t samples,
                                 std::uint64_t seed);
SuiteReport instance_axiom_suite(const Instance& inst, std::uint64_t samples,
                                 std::uint64_t seed);

// Free-to-model soundness: seeded structural diagrams that commute in the
// free semantics are evaluated in seeded random span interpretations; the
// two path bijections must coincide.
SuiteReport span_transport_suite(const SmcSignature& sig, std::uint64_t diagrams,
                                 std::uint64_t seed);

// Seeded random span interpretation of sig with carrier sets of size
// <= max_set.
SpanInstance random_span_instance(const SmcSignature& sig, std::mt19937_64& eng,
                                  std::size_t max_set);

// Re-runs one reported failure from its reproducer string alone; returns
// true if the case still fails.
bool replay_failure(const std::string& reproducer);

}  // namespace smc
