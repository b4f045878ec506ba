#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "smcstrict/instances.hpp"
#include "smcstrict/semiring.hpp"
#include "smcstrict/twocell.hpp"

namespace smc {

// Program statements, in source order. Declarations build the signature;
// commands run against it. A program with commands but no declarations runs
// against the built-in standard signature.

struct ZeroDeclStmt {
    std::vector<std::string> names;
};
struct Gen1DeclStmt {
    std::string name, src, tgt;
};
struct Gen2DeclStmt {
    std::string name;
    OneCell src, tgt;
};
struct NatInstanceDecl {
    std::string name;  // empty for the inline form N{...}
    std::vector<std::pair<std::string, Nat>> assign;
};
struct SpanObjItem {
    std::string zero;
    std::vector<std::string> elems;
};
struct SpanGenRow {
    std::string apex_elem, left, right;
};
struct SpanGenItem {
    std::string gen;
    std::vector<SpanGenRow> rows;
};
struct SpanInstanceDecl {
    std::string name;
    std::vector<SpanObjItem> objs;
    std::vector<SpanGenItem> spans;
};
struct NormalizeCmd {
    OneCell expr;
};
struct CheckCmd {
    std::vector<TwoCell> path1, path2;
};
struct SuiteCmd {
    std::string which;  // pc | strict | instance
    std::optional<int> depth;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> samples;
};
struct EvalCmd {
    OneCell expr;
    // named instance, or an inline naturals instance
    std::variant<std::string, NatInstanceDecl> instance;
};
struct StrictifyReportCmd {};

using Statement = std::variant<ZeroDeclStmt, Gen1DeclStmt, Gen2DeclStmt, NatInstanceDecl,
                               SpanInstanceDecl, NormalizeCmd, CheckCmd, SuiteCmd, EvalCmd,
                               StrictifyReportCmd>;

struct Program {
    std::vector<Statement> statements;
};

// Parses a program; checks the grammar only. Name resolution and typing run
// in resolve_program.
Program parse_program(const std::string& text);

// Builds the declared signature (or the standard one when the program
// declares nothing) and type-checks every expression and cell argument.
// Throws ResolveError / IllTyped on bad references.
struct ResolvedProgram {
    Program program;
    SmcSignature sig;
    bool declared_signature = false;
};
ResolvedProgram resolve_program(Program p);

std::string pretty_print(const Program& p);
bool program_equal(const Program& a, const Program& b);

// Stand-alone fragment parsers, used by reproducer replay and tests.
OneCell parse_expression(const std::string& text);
TwoCell parse_cell(const std::string& text);
NormalForm parse_normal_form(const std::string& text, const SmcSignature& sig);

// The signature as declaration statements (one line), parseable back.
std::string signature_to_text(const SmcSignature& sig);
SmcSignature signature_from_text(const std::string& text);

// Materializes a declared span interpretation: every 0-cell needs an obj
// item; spans must be total leg tables over declared elements.
SpanInstance build_span_instance(const SpanInstanceDecl& decl, const SmcSignature& sig);

// Renders a span instance whose elements are all atoms back into declaration
// form (used for self-contained failure reproducers).
std::string span_instance_to_text(const SpanInstance& inst, const std::string& name);

}  // namespace smc
