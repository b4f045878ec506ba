#include "smcstrict/span.hpp"

#include "smcstrict/errors.hpp"
#include "smcstrict/testing.hpp"

namespace smc {

bool SpanCell::valid() const {
    if (!src.duplicate_free() || !tgt.duplicate_free() || !apex.duplicate_free()) return false;
    if (left_leg.size() != apex.size() || right_leg.size() != apex.size()) return false;
    for (auto p : left_leg)
        if (p >= src.size()) return false;
    for (auto p : right_leg)
        if (p >= tgt.size()) return false;
    return true;
}

bool SpanCell::operator==(const SpanCell& o) const {
    return src == o.src && tgt == o.tgt && apex == o.apex && left_leg == o.left_leg &&
           right_leg == o.right_leg;
}

std::string SpanCell::to_string() const {
    std::string out = "apex = " + apex.to_string() + "; left:";
    for (std::size_t i = 0; i < apex.size(); ++i)
        out += (i ? ", " : " ") + apex.elements[i].to_string() + "->" +
               src.elements[left_leg[i]].to_string();
    out += "; right:";
    for (std::size_t i = 0; i < apex.size(); ++i)
        out += (i ? ", " : " ") + apex.elements[i].to_string() + "->" +
               tgt.elements[right_leg[i]].to_string();
    return out;
}

SpanCell identity_span(const FinSetObj& x) {
    SpanCell s;
    s.src = x;
    s.tgt = x;
    s.apex = x;
    s.left_leg.resize(x.size());
    s.right_leg.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s.left_leg[i] = s.right_leg[i] = i;
    return s;
}

SpanCell empty_span(const FinSetObj& src, const FinSetObj& tgt) {
    SpanCell s;
    s.src = src;
    s.tgt = tgt;
    return s;
}

SpanCell span_compose(const SpanCell& t, const SpanCell& s) {
    if (!(t.src == s.tgt))
        throw EndpointMismatch("span_compose: src of outer span differs from tgt of inner span");
    SpanCell out;
    out.src = s.src;
    out.tgt = t.tgt;
    auto emit = [&](std::size_t x, std::size_t y) {
        out.apex.elements.push_back(FsElem::pair(s.apex.elements[x], t.apex.elements[y]));
        out.left_leg.push_back(s.left_leg[x]);
        out.right_leg.push_back(t.right_leg[y]);
    };
    if (testing::mutation_hooks().span_compose_swapped_pairs) {
        for (std::size_t y = 0; y < t.apex.size(); ++y)
            for (std::size_t x = 0; x < s.apex.size(); ++x)
                if (s.right_leg[x] == t.left_leg[y]) emit(x, y);
        return out;
    }
    for (std::size_t x = 0; x < s.apex.size(); ++x)
        for (std::size_t y = 0; y < t.apex.size(); ++y)
            if (s.right_leg[x] == t.left_leg[y]) emit(x, y);
    return out;
}

SpanCell span_sum(const SpanCell& a, const SpanCell& b) {
    if (!(a.src == b.src) || !(a.tgt == b.tgt))
        throw EndpointMismatch("span_sum: endpoints disagree");
    SpanCell out;
    out.src = a.src;
    out.tgt = a.tgt;
    out.apex.elements.reserve(a.apex.size() + b.apex.size());
    for (std::size_t i = 0; i < a.apex.size(); ++i) {
        out.apex.elements.push_back(FsElem::inl(a.apex.elements[i]));
        out.left_leg.push_back(a.left_leg[i]);
        out.right_leg.push_back(a.right_leg[i]);
    }
    for (std::size_t i = 0; i < b.apex.size(); ++i) {
        out.apex.elements.push_back(FsElem::inr(b.apex.elements[i]));
        out.left_leg.push_back(b.left_leg[i]);
        out.right_leg.push_back(b.right_leg[i]);
    }
    return out;
}

SpanBijection SpanBijection::identity(SpanCell s) {
    SpanBijection b;
    b.map.resize(s.apex.size());
    for (std::size_t i = 0; i < b.map.size(); ++i) b.map[i] = i;
    b.source = s;
    b.target = std::move(s);
    return b;
}

SpanBijection SpanBijection::inverse() const {
    SpanBijection out;
    out.source = target;
    out.target = source;
    out.map.resize(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) out.map[map[i]] = i;
    return out;
}

SpanBijection SpanBijection::compose(const SpanBijection& g, const SpanBijection& f) {
    if (!(f.target == g.source))
        throw BoundaryMismatch("span bijection composition: middle spans disagree");
    SpanBijection out;
    out.source = f.source;
    out.target = g.target;
    out.map.resize(f.map.size());
    for (std::size_t i = 0; i < f.map.size(); ++i) out.map[i] = g.map[f.map[i]];
    return out;
}

bool SpanBijection::natural() const {
    if (map.size() != source.apex.size() || map.size() != target.apex.size()) return false;
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (source.left_leg[i] != target.left_leg[map[i]]) return false;
        if (source.right_leg[i] != target.right_leg[map[i]]) return false;
    }
    return true;
}

namespace {

// Build the bijection sending each apex element of `from` through `shape`,
// locating the image in `to`. Throws if an image is missing: for the
// canonical cells this means the model law under test failed.
template <typename F>
SpanBijection by_shape(SpanCell from, SpanCell to, F&& shape) {
    SpanBijection b;
    b.map.reserve(from.apex.size());
    for (const auto& e : from.apex.elements) {
        auto pos = to.apex.find(shape(e));
        if (!pos)
            throw Error("canonical span bijection: image of " + e.to_string() +
                        " is missing from the target apex");
        b.map.push_back(*pos);
    }
    b.source = std::move(from);
    b.target = std::move(to);
    if (b.map.size() != b.target.apex.size())
        throw Error("canonical span bijection: not onto");
    return b;
}

}  // namespace

SpanBijection span_lunit(const SpanCell& s) {
    return by_shape(span_compose(identity_span(s.tgt), s), s,
                    [](const FsElem& e) { return e.first(); });
}

SpanBijection span_runit(const SpanCell& s) {
    return by_shape(span_compose(s, identity_span(s.src)), s,
                    [](const FsElem& e) { return e.second(); });
}

SpanBijection span_sum_unit_l(const SpanCell& s) {
    return by_shape(span_sum(empty_span(s.src, s.tgt), s), s,
                    [](const FsElem& e) { return e.inner(); });
}

SpanBijection span_sum_unit_r(const SpanCell& s) {
    return by_shape(span_sum(s, empty_span(s.src, s.tgt)), s,
                    [](const FsElem& e) { return e.inner(); });
}

SpanBijection span_assoc(const SpanCell& t, const SpanCell& s, const SpanCell& r) {
    // ((x_r, x_s), x_t)  ->  (x_r, (x_s, x_t))
    return by_shape(span_compose(t, span_compose(s, r)),
                    span_compose(span_compose(t, s), r), [](const FsElem& e) {
                        const FsElem& xr = e.first().first();
                        const FsElem& xs = e.first().second();
                        const FsElem& xt = e.second();
                        return FsElem::pair(xr, FsElem::pair(xs, xt));
                    });
}

SpanBijection span_dist_l(const SpanCell& t, const SpanCell& s1, const SpanCell& s2) {
    return by_shape(span_compose(t, span_sum(s1, s2)),
                    span_sum(span_compose(t, s1), span_compose(t, s2)), [](const FsElem& e) {
                        const FsElem& tagged = e.first();
                        const FsElem& y = e.second();
                        if (tagged.kind() == FsElem::Kind::InL)
                            return FsElem::inl(FsElem::pair(tagged.inner(), y));
                        return FsElem::inr(FsElem::pair(tagged.inner(), y));
                    });
}

}  // namespace smc
