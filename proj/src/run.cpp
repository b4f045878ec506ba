#include "smcstrict/run.hpp"

#include <ostream>

#include "smcstrict/errors.hpp"
#include "smcstrict/json_io.hpp"
#include "smcstrict/verify.hpp"

namespace smc {

namespace {

std::string span_value_text(const SpanCell& s, const SmcSignature& sig, const OneCell& e) {
    auto [src, tgt] = endpoints(e, sig);
    return "span " + src.name + " -> " + tgt.name + ": " + s.to_string();
}

}  // namespace

int run_program(const ResolvedProgram& rp, const RunOptions& opts, std::ostream& out) {
    const SmcSignature& sig = rp.sig;
    bool failed = false;

    std::vector<std::pair<std::string, SemiringInstance>> nat_instances;
    std::vector<std::pair<std::string, SpanInstance>> span_instances;

    auto build_nat = [&sig](const NatInstanceDecl& d) {
        SemiringInstance inst;
        inst.sig = sig;
        for (const auto& [g, v] : d.assign) inst.assign[g] = v;
        return inst;
    };

    for (const auto& st : rp.program.statements) {
        if (const auto* nd = std::get_if<NatInstanceDecl>(&st)) {
            nat_instances.emplace_back(nd->name, build_nat(*nd));
        } else if (const auto* sd = std::get_if<SpanInstanceDecl>(&st)) {
            span_instances.emplace_back(sd->name, build_span_instance(*sd, sig));
        } else if (const auto* nc = std::get_if<NormalizeCmd>(&st)) {
            std::string text = nf_to_text(normalize(nc->expr, sig), sig);
            if (opts.json) {
                nlohmann::ordered_json j;
                j["command"] = "normalize";
                j["input"] = to_text(nc->expr);
                j["normal_form"] = text;
                out << j.dump() << "\n";
            } else {
                out << text << "\n";
            }
        } else if (const auto* cc = std::get_if<CheckCmd>(&st)) {
            CheckReport r = check_diagram(cc->path1, cc->path2, sig);
            if (!r.commutes) failed = true;
            out << to_json(r).dump() << "\n";
        } else if (const auto* sc = std::get_if<SuiteCmd>(&st)) {
            int depth = sc->depth.value_or(opts.depth);
            std::uint64_t seed = sc->seed.value_or(opts.seed);
            std::uint64_t samples = sc->samples.value_or(opts.samples);
            SuiteReport rep;
            if (sc->which == "pc") {
                rep = pc_axiom_suite(sig, depth);
            } else if (sc->which == "strict") {
                rep = strictification_suite(sig, depth);
            } else {
                if (!span_instances.empty()) {
                    rep = instance_axiom_suite(span_instances.back().second, samples, seed);
                } else if (!nat_instances.empty()) {
                    rep = instance_axiom_suite(nat_instances.back().second, samples, seed);
                } else {
                    std::mt19937_64 eng(seed);
                    SpanInstance inst = random_span_instance(sig, eng, 4);
                    rep = instance_axiom_suite(inst, samples, seed);
                }
            }
            if (!rep.passed()) failed = true;
            out << to_json(rep).dump() << "\n";
        } else if (const auto* ec = std::get_if<EvalCmd>(&st)) {
            std::string value;
            if (const auto* inl = std::get_if<NatInstanceDecl>(&ec->instance)) {
                value = nat_to_string(eval_one_cell(ec->expr, build_nat(*inl)));
            } else {
                const std::string& name = std::get<std::string>(ec->instance);
                const SemiringInstance* ni = nullptr;
                const SpanInstance* si = nullptr;
                for (const auto& [n, inst] : nat_instances)
                    if (n == name) ni = &inst;
                for (const auto& [n, inst] : span_instances)
                    if (n == name) si = &inst;
                if (ni)
                    value = nat_to_string(eval_one_cell(ec->expr, *ni));
                else if (si)
                    value = span_value_text(eval_one_cell(ec->expr, *si), sig, ec->expr);
                else
                    throw ResolveError("unknown instance '" + name + "'");
            }
            if (opts.json) {
                nlohmann::ordered_json j;
                j["command"] = "eval";
                j["input"] = to_text(ec->expr);
                j["value"] = value;
                out << j.dump() << "\n";
            } else {
                out << value << "\n";
            }
        } else if (std::get_if<StrictifyReportCmd>(&st)) {
            SuiteReport rt = roundtrip_suite(sig, opts.depth, 4, 3);
            SuiteReport canon = canonical_iso_suite(sig, opts.depth);
            if (!rt.passed() || !canon.passed()) failed = true;
            if (opts.json) {
                nlohmann::ordered_json j;
                j["command"] = "strictify-report";
                j["depth"] = opts.depth;
                j["roundtrip"] = to_json(rt);
                j["canonical"] = to_json(canon);
                out << j.dump() << "\n";
            } else {
                out << "strictify report (depth " << opts.depth << ")\n";
                out << "  embed/normalize round trips: " << rt.cases << " cases, "
                    << rt.failures.size() << " failures\n";
                out << "  canonical witnesses: " << canon.cases << " cases, "
                    << canon.failures.size() << " failures\n";
            }
        }
    }
    return failed ? 1 : 0;
}

}  // namespace smc
