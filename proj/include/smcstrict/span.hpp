#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smcstrict/finset.hpp"

namespace smc {

// A span src <- apex -> tgt of finite sets. Legs are total maps given by
// element positions: left_leg[i] / right_leg[i] are positions in src / tgt
// of the images of apex element i.
struct SpanCell {
    FinSetObj src;
    FinSetObj tgt;
    FinSetObj apex;
    std::vector<std::size_t> left_leg;
    std::vector<std::size_t> right_leg;

    bool valid() const;
    bool operator==(const SpanCell& o) const;
    std::string to_string() const;
};

SpanCell identity_span(const FinSetObj& x);
SpanCell empty_span(const FinSetObj& src, const FinSetObj& tgt);

// Pullback composition, t after s. The apex lists the matched pairs
// (x, y), x in apex(s), y in apex(t) with right_s(x) = left_t(y), ordered
// lexicographically by the position of x, then of y. Requires
// src(t) == tgt(s).
SpanCell span_compose(const SpanCell& t, const SpanCell& s);

// Coproduct of apexes: left block tagged inl, then right block tagged inr;
// legs act blockwise. Requires matching endpoints.
SpanCell span_sum(const SpanCell& a, const SpanCell& b);

// A 2-cell of the span model: an apex bijection commuting with both legs.
struct SpanBijection {
    SpanCell source;
    SpanCell target;
    std::vector<std::size_t> map;

    static SpanBijection identity(SpanCell s);
    SpanBijection inverse() const;
    static SpanBijection compose(const SpanBijection& g, const SpanBijection& f);
    // commutes with legs on every element
    bool natural() const;
    bool operator==(const SpanBijection& o) const {
        return source == o.source && target == o.target && map == o.map;
    }
};

// The canonical unitor bijection compose(identity_span(tgt(s)), s) ~ s, and
// its right-handed companion.
SpanBijection span_lunit(const SpanCell& s);
SpanBijection span_runit(const SpanCell& s);

// The canonical tag-stripping bijections span_sum(empty, s) ~ s and
// span_sum(s, empty) ~ s.
SpanBijection span_sum_unit_l(const SpanCell& s);
SpanBijection span_sum_unit_r(const SpanCell& s);

// The canonical re-association bijection compose(t, compose(s, r)) ~
// compose(compose(t, s), r).
SpanBijection span_assoc(const SpanCell& t, const SpanCell& s, const SpanCell& r);

// The instance-level distributivity: compose(t, span_sum(s1, s2)) ~
// span_sum(compose(t, s1), compose(t, s2)).
SpanBijection span_dist_l(const SpanCell& t, const SpanCell& s1, const SpanCell& s2);

}  // namespace smc
