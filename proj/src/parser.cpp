#include "smcstrict/parser.hpp"

#include <cctype>

#include "smcstrict/errors.hpp"

namespace smc {

namespace {

enum class Tok : std::uint8_t { Word, Number, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1, col = 1;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
  public:
    explicit Lexer(const std::string& text) : s_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        skip_ws();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_ = Token{Tok::End, "", line_, col_};
            return;
        }
        char c = s_[pos_];
        if (ident_start(c)) {
            tok_ = Token{Tok::Word, take_word(), tok_.line, tok_.col};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                num += get();
            if (pos_ < s_.size() && ident_start(s_[pos_])) {
                // digit-led keyword such as 0cells / 1cell / 2cell
                tok_ = Token{Tok::Word, num + take_word(), tok_.line, tok_.col};
            } else {
                tok_ = Token{Tok::Number, num, tok_.line, tok_.col};
            }
            return;
        }
        if (c == '-') {
            if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
                get();
                get();
                tok_ = Token{Tok::Punct, "->", tok_.line, tok_.col};
                return;
            }
            if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '-') {
                get();
                get();
                std::string flag = "--";
                if (pos_ < s_.size() && ident_start(s_[pos_])) flag += take_word();
                tok_ = Token{Tok::Word, flag, tok_.line, tok_.col};
                return;
            }
            throw ParseError("stray '-'", line_, col_, "'->' or '--option'");
        }
        if (c == '=') {
            get();
            if (pos_ < s_.size() && s_[pos_] == '>') {
                get();
                tok_ = Token{Tok::Punct, "=>", tok_.line, tok_.col};
            } else if (pos_ < s_.size() && s_[pos_] == '=') {
                get();
                tok_ = Token{Tok::Punct, "==", tok_.line, tok_.col};
            } else {
                tok_ = Token{Tok::Punct, "=", tok_.line, tok_.col};
            }
            return;
        }
        static const std::string singles = ";:,()[]{}+*@.";
        if (singles.find(c) != std::string::npos) {
            get();
            tok_ = Token{Tok::Punct, std::string(1, c), tok_.line, tok_.col};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_, "");
    }

    std::string take_word() {
        std::string w;
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (ident_char(c)) {
                w += get();
            } else if (c == '-' && pos_ + 1 < s_.size() && ident_start(s_[pos_ + 1])) {
                // hyphenated keywords like strictify-report
                w += get();
            } else {
                break;
            }
        }
        return w;
    }

    void skip_ws() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') get();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                get();
            } else {
                break;
            }
        }
    }

    char get() {
        char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Program program() {
        Program p;
        while (lex_.peek().kind != Tok::End) {
            if (accept_punct(";")) continue;
            p.statements.push_back(statement());
            if (lex_.peek().kind != Tok::End) expect_punct(";");
        }
        return p;
    }

    OneCell expression() { return expr(); }
    TwoCell cell_expr() { return cell(); }
    void expect_end() {
        if (lex_.peek().kind != Tok::End)
            throw err("trailing input after expression", "end of input");
    }

  private:
    ParseError err(const std::string& msg, const std::string& expected) {
        const Token& t = lex_.peek();
        return ParseError(msg + " (found '" + (t.kind == Tok::End ? "<end>" : t.text) + "')",
                          t.line, t.col, expected);
    }

    bool peek_punct(const char* p) const {
        return lex_.peek().kind == Tok::Punct && lex_.peek().text == p;
    }
    bool accept_punct(const char* p) {
        if (peek_punct(p)) {
            lex_.next();
            return true;
        }
        return false;
    }
    void expect_punct(const char* p) {
        if (!accept_punct(p)) throw err("expected '" + std::string(p) + "'", p);
    }
    bool peek_word(const char* w) const {
        return lex_.peek().kind == Tok::Word && lex_.peek().text == w;
    }
    bool accept_word(const char* w) {
        if (peek_word(w)) {
            lex_.next();
            return true;
        }
        return false;
    }
    std::string expect_word(const char* what) {
        if (lex_.peek().kind != Tok::Word) throw err(std::string("expected ") + what, what);
        return lex_.next().text;
    }
    std::string expect_number(const char* what) {
        if (lex_.peek().kind != Tok::Number) throw err(std::string("expected ") + what, what);
        return lex_.next().text;
    }

    Statement statement() {
        if (accept_word("0cells")) {
            ZeroDeclStmt d;
            while (lex_.peek().kind == Tok::Word) d.names.push_back(lex_.next().text);
            if (d.names.empty()) throw err("expected 0-cell names", "name");
            return d;
        }
        if (accept_word("1cell")) {
            Gen1DeclStmt d;
            d.name = expect_word("1-cell name");
            expect_punct(":");
            d.src = expect_word("source 0-cell");
            expect_punct("->");
            d.tgt = expect_word("target 0-cell");
            return d;
        }
        if (accept_word("2cell")) {
            Gen2DeclStmt d;
            d.name = expect_word("2-cell name");
            expect_punct(":");
            d.src = expr();
            expect_punct("=>");
            d.tgt = expr();
            return d;
        }
        if (accept_word("instance")) return instance_decl();
        if (accept_word("normalize")) return NormalizeCmd{expr()};
        if (accept_word("check")) {
            CheckCmd c;
            c.path1 = cell_path();
            expect_punct("==");
            c.path2 = cell_path();
            return c;
        }
        if (accept_word("suite")) {
            SuiteCmd c;
            c.which = expect_word("suite name (pc, strict or instance)");
            for (;;) {
                if (accept_word("--depth"))
                    c.depth = std::stoi(expect_number("depth"));
                else if (accept_word("--seed"))
                    c.seed = std::stoull(expect_number("seed"));
                else if (accept_word("--samples"))
                    c.samples = std::stoull(expect_number("samples"));
                else
                    break;
            }
            return c;
        }
        if (accept_word("eval")) {
            EvalCmd c;
            c.expr = expr();
            if (!accept_word("in")) throw err("expected 'in'", "in");
            if (peek_word("N")) {
                lex_.next();
                expect_punct("{");
                NatInstanceDecl inl;
                if (!peek_punct("}")) {
                    do {
                        std::string g = expect_word("generator name");
                        expect_punct("=");
                        inl.assign.emplace_back(g, nat_from_string(expect_number("value")));
                    } while (accept_punct(","));
                }
                expect_punct("}");
                c.instance = std::move(inl);
            } else {
                c.instance = expect_word("instance name");
            }
            return c;
        }
        if (accept_word("strictify-report")) return StrictifyReportCmd{};
        throw err("expected a declaration or command", "0cells/1cell/2cell/instance/normalize/check/suite/eval/strictify-report");
    }

    Statement instance_decl() {
        std::string name = expect_word("instance name");
        if (accept_word("naturals")) {
            NatInstanceDecl d;
            d.name = name;
            expect_punct("{");
            if (!peek_punct("}")) {
                do {
                    std::string g = expect_word("generator name");
                    expect_punct("=");
                    d.assign.emplace_back(g, nat_from_string(expect_number("value")));
                } while (accept_punct(","));
            }
            expect_punct("}");
            return d;
        }
        if (accept_word("span")) {
            SpanInstanceDecl d;
            d.name = name;
            expect_punct("{");
            bool first = true;
            while (!peek_punct("}")) {
                if (!first) expect_punct(";");
                if (peek_punct("}")) break;  // trailing ';'
                first = false;
                if (accept_word("obj")) {
                    SpanObjItem item;
                    item.zero = expect_word("0-cell name");
                    expect_punct("=");
                    expect_punct("{");
                    if (!peek_punct("}")) {
                        do {
                            item.elems.push_back(expect_word("element name"));
                        } while (accept_punct(","));
                    }
                    expect_punct("}");
                    d.objs.push_back(std::move(item));
                } else if (accept_word("span")) {
                    SpanGenItem item;
                    item.gen = expect_word("generator name");
                    expect_punct("=");
                    expect_punct("{");
                    if (!peek_punct("}")) {
                        do {
                            SpanGenRow row;
                            row.apex_elem = expect_word("apex element");
                            expect_punct(":");
                            row.left = expect_word("left image");
                            expect_punct("->");
                            row.right = expect_word("right image");
                            item.rows.push_back(std::move(row));
                        } while (accept_punct(","));
                    }
                    expect_punct("}");
                    d.spans.push_back(std::move(item));
                } else {
                    throw err("expected 'obj' or 'span' item", "obj/span");
                }
            }
            expect_punct("}");
            return d;
        }
        throw err("expected instance kind", "naturals/span");
    }

    std::vector<TwoCell> cell_path() {
        expect_punct("[");
        std::vector<TwoCell> path;
        if (!peek_punct("]")) {
            do {
                path.push_back(cell());
            } while (accept_punct(","));
        }
        expect_punct("]");
        return path;
    }

    TwoCell cell() {
        std::string name = expect_word("2-cell");
        if (!peek_punct("(")) return TwoCell::gen2(name);
        expect_punct("(");
        auto close = [&]() { expect_punct(")"); };
        auto one_expr = [&]() {
            OneCell e = expr();
            close();
            return e;
        };
        if (name == "id") return TwoCell::id2(one_expr());
        if (name == "lunit") return TwoCell::lunit(one_expr());
        if (name == "runit") return TwoCell::runit(one_expr());
        if (name == "addunitl") return TwoCell::add_unit_l(one_expr());
        if (name == "addunitr") return TwoCell::add_unit_r(one_expr());
        if (name == "sym") {
            OneCell f = expr();
            expect_punct(",");
            OneCell g = expr();
            close();
            return TwoCell::sym(std::move(f), std::move(g));
        }
        if (name == "assoc" || name == "addassoc" || name == "distl" || name == "distr") {
            OneCell f = expr();
            expect_punct(",");
            OneCell g = expr();
            expect_punct(",");
            OneCell h = expr();
            close();
            if (name == "assoc") return TwoCell::assoc_h(std::move(f), std::move(g), std::move(h));
            if (name == "addassoc")
                return TwoCell::add_assoc(std::move(f), std::move(g), std::move(h));
            if (name == "distl") return TwoCell::dist_l(std::move(f), std::move(g), std::move(h));
            return TwoCell::dist_r(std::move(f), std::move(g), std::move(h));
        }
        if (name == "nulll" || name == "nullr") {
            OneCell f = expr();
            std::string far;  // empty: resolved to the default endpoint later
            if (accept_punct(",")) far = expect_word("0-cell name");
            close();
            return name == "nulll" ? TwoCell::null_l(std::move(f), std::move(far))
                                   : TwoCell::null_r(std::move(f), std::move(far));
        }
        if (name == "inv") {
            TwoCell c = cell();
            close();
            return TwoCell::inv(std::move(c));
        }
        if (name == "vcomp" || name == "hcomp" || name == "sum") {
            TwoCell a = cell();
            expect_punct(",");
            TwoCell b = cell();
            close();
            if (name == "vcomp") return TwoCell::vcomp(std::move(a), std::move(b));
            if (name == "hcomp") return TwoCell::hcomp2(std::move(a), std::move(b));
            return TwoCell::sum_cells(std::move(a), std::move(b));
        }
        throw err("unknown 2-cell constructor '" + name + "'", "constructor");
    }

    OneCell expr() {
        OneCell acc = term();
        while (accept_punct("+")) acc = OneCell::sum(std::move(acc), term());
        return acc;
    }

    OneCell term() {
        OneCell acc = atom();
        while (accept_punct("*")) acc = OneCell::hcomp(std::move(acc), atom());
        return acc;
    }

    OneCell atom() {
        if (accept_punct("(")) {
            OneCell e = expr();
            expect_punct(")");
            return e;
        }
        if (lex_.peek().kind == Tok::Number) {
            std::string n = lex_.next().text;
            if (n == "1") {
                expect_punct("@");
                return OneCell::id_unit(expect_word("0-cell name"));
            }
            if (n == "0") {
                expect_punct("@");
                std::string s = expect_word("0-cell name");
                expect_punct("->");
                std::string t = expect_word("0-cell name");
                return OneCell::zero_unit(std::move(s), std::move(t));
            }
            throw err("expected 0@.. or 1@..", "unit");
        }
        if (lex_.peek().kind == Tok::Word) return OneCell::gen(lex_.next().text);
        throw err("expected an expression", "expression");
    }

    Lexer lex_;
};

}  // namespace

Program parse_program(const std::string& text) { return Parser(text).program(); }

OneCell parse_expression(const std::string& text) {
    Parser p(text);
    OneCell e = p.expression();
    p.expect_end();
    return e;
}

TwoCell parse_cell(const std::string& text) {
    Parser p(text);
    TwoCell c = p.cell_expr();
    p.expect_end();
    return c;
}

NormalForm parse_normal_form(const std::string& text, const SmcSignature& sig) {
    Lexer lex(text);
    auto resolve_zero = [&sig](const std::string& n) {
        auto z = sig.zero_index(n);
        if (!z) throw ResolveError("unknown 0-cell '" + n + "' in normal form");
        return *z;
    };
    auto word = [&lex]() {
        if (lex.peek().kind != Tok::Word)
            throw ParseError("expected a name", lex.peek().line, lex.peek().col, "name");
        return lex.next().text;
    };
    auto punct = [&lex](const char* p) {
        if (lex.peek().kind != Tok::Punct || lex.peek().text != p)
            throw ParseError("expected '" + std::string(p) + "'", lex.peek().line,
                             lex.peek().col, p);
        lex.next();
    };
    // empty sum: 0@a->b
    if (lex.peek().kind == Tok::Number && lex.peek().text == "0") {
        lex.next();
        punct("@");
        ZeroIx s = resolve_zero(word());
        punct("->");
        ZeroIx t = resolve_zero(word());
        return NormalForm::zero(s, t);
    }
    std::vector<Monomial> ms;
    for (;;) {
        if (lex.peek().kind == Tok::Number && lex.peek().text == "1") {
            lex.next();
            punct("@");
            ZeroIx a = resolve_zero(word());
            ms.push_back(Monomial{a, a, {}});
        } else {
            std::vector<GenIx> letters;
            for (;;) {
                std::string n = word();
                auto g = sig.gen_index(n);
                if (!g) throw ResolveError("unknown generator '" + n + "' in normal form");
                letters.push_back(*g);
                if (lex.peek().kind == Tok::Punct && lex.peek().text == ".")
                    lex.next();
                else
                    break;
            }
            // letters are outermost-first; the string starts at the source of
            // its innermost letter
            for (std::size_t i = 0; i + 1 < letters.size(); ++i)
                if (sig.gen_src(letters[i]) != sig.gen_tgt(letters[i + 1]))
                    throw ResolveError("monomial letters are not composable");
            ms.push_back(Monomial{sig.gen_src(letters.back()), sig.gen_tgt(letters.front()),
                                  std::move(letters)});
        }
        if (lex.peek().kind == Tok::Punct && lex.peek().text == "+")
            lex.next();
        else
            break;
    }
    if (lex.peek().kind != Tok::End)
        throw ParseError("trailing input after normal form", lex.peek().line, lex.peek().col,
                         "end of input");
    for (const auto& m : ms)
        if (m.src != ms[0].src || m.tgt != ms[0].tgt)
            throw ResolveError("normal form monomials have mismatched endpoints");
    return NormalForm::from_monomials(ms[0].src, ms[0].tgt, ms);
}

namespace {

// Fills in the defaulted far 0-cell of nulll(f)/nullr(f) once a signature
// is available.
TwoCell resolve_nulls(const TwoCell& c, const SmcSignature& sig) {
    using K = TwoCell::Kind;
    switch (c.kind()) {
        case K::VComp:
            return TwoCell::vcomp(resolve_nulls(c.first_cell(), sig),
                                  resolve_nulls(c.second_cell(), sig));
        case K::HComp2:
            return TwoCell::hcomp2(resolve_nulls(c.first_cell(), sig),
                                   resolve_nulls(c.second_cell(), sig));
        case K::SumCells:
            return TwoCell::sum_cells(resolve_nulls(c.first_cell(), sig),
                                      resolve_nulls(c.second_cell(), sig));
        case K::Inv:
            return TwoCell::inv(resolve_nulls(c.first_cell(), sig));
        case K::NullL:
            if (c.far_cell().empty()) {
                auto ends = endpoints_ix(c.arg0(), sig);
                return TwoCell::null_l(c.arg0(), sig.zero_name(ends.second));
            }
            return c;
        case K::NullR:
            if (c.far_cell().empty()) {
                auto ends = endpoints_ix(c.arg0(), sig);
                return TwoCell::null_r(c.arg0(), sig.zero_name(ends.first));
            }
            return c;
        default:
            return c;
    }
}

}  // namespace

ResolvedProgram resolve_program(Program p) {
    ResolvedProgram out;
    SmcSignature sig;
    bool declared = false;
    for (const auto& st : p.statements) {
        try {
            if (const auto* z = std::get_if<ZeroDeclStmt>(&st)) {
                declared = true;
                for (const auto& n : z->names) sig.add_zero_cell(n);
            } else if (const auto* g1 = std::get_if<Gen1DeclStmt>(&st)) {
                declared = true;
                sig.add_gen1(g1->name, g1->src, g1->tgt);
            } else if (const auto* g2 = std::get_if<Gen2DeclStmt>(&st)) {
                declared = true;
                sig.add_gen2(g2->name, g2->src, g2->tgt);
            }
        } catch (const Error& e) {
            throw ResolveError(e.what());
        }
    }
    if (!declared) sig = standard_signature();

    auto check_expr = [&sig](const OneCell& e) {
        try {
            endpoints_ix(e, sig);
        } catch (const IllTyped& err) {
            throw ResolveError(err.what());
        }
    };

    std::vector<std::string> instance_names;
    for (auto& st : p.statements) {
        if (auto* n = std::get_if<NatInstanceDecl>(&st)) {
            for (const auto& [g, v] : n->assign) {
                (void)v;
                if (!sig.gen_index(g))
                    throw ResolveError("instance '" + n->name + "': unknown generator '" + g +
                                       "'");
            }
            instance_names.push_back(n->name);
        } else if (auto* sp = std::get_if<SpanInstanceDecl>(&st)) {
            for (const auto& o : sp->objs)
                if (!sig.zero_index(o.zero))
                    throw ResolveError("instance '" + sp->name + "': unknown 0-cell '" + o.zero +
                                       "'");
            for (const auto& s : sp->spans)
                if (!sig.gen_index(s.gen))
                    throw ResolveError("instance '" + sp->name + "': unknown generator '" +
                                       s.gen + "'");
            instance_names.push_back(sp->name);
        } else if (auto* nc = std::get_if<NormalizeCmd>(&st)) {
            check_expr(nc->expr);
        } else if (auto* g2 = std::get_if<Gen2DeclStmt>(&st)) {
            check_expr(g2->src);
            check_expr(g2->tgt);
        } else if (auto* cc = std::get_if<CheckCmd>(&st)) {
            for (auto* path : {&cc->path1, &cc->path2})
                for (auto& c : *path) {
                    try {
                        c = resolve_nulls(c, sig);
                        boundary(c, sig);
                    } catch (const Error& e) {
                        throw ResolveError(e.what());
                    }
                }
        } else if (auto* ec = std::get_if<EvalCmd>(&st)) {
            check_expr(ec->expr);
            if (const auto* named = std::get_if<std::string>(&ec->instance)) {
                bool found = false;
                for (const auto& n : instance_names) found = found || n == *named;
                if (!found) throw ResolveError("unknown instance '" + *named + "'");
            } else {
                for (const auto& [g, v] : std::get<NatInstanceDecl>(ec->instance).assign) {
                    (void)v;
                    if (!sig.gen_index(g))
                        throw ResolveError("inline instance: unknown generator '" + g + "'");
                }
            }
        } else if (auto* sc = std::get_if<SuiteCmd>(&st)) {
            if (sc->which != "pc" && sc->which != "strict" && sc->which != "instance")
                throw ResolveError("unknown suite '" + sc->which + "'");
        }
    }

    out.program = std::move(p);
    out.sig = std::move(sig);
    out.declared_signature = declared;
    return out;
}

namespace {

struct Printer {
    std::string out;

    void stmt(const Statement& st) {
        std::visit([this](const auto& s) { print(s); }, st);
        out += ";\n";
    }

    void print(const ZeroDeclStmt& d) {
        out += "0cells";
        for (const auto& n : d.names) out += " " + n;
    }
    void print(const Gen1DeclStmt& d) {
        out += "1cell " + d.name + ": " + d.src + " -> " + d.tgt;
    }
    void print(const Gen2DeclStmt& d) {
        out += "2cell " + d.name + ": " + to_text(d.src) + " => " + to_text(d.tgt);
    }
    void print(const NatInstanceDecl& d) {
        out += "instance " + d.name + " naturals { ";
        for (std::size_t i = 0; i < d.assign.size(); ++i) {
            if (i) out += ", ";
            out += d.assign[i].first + " = " + nat_to_string(d.assign[i].second);
        }
        out += d.assign.empty() ? "}" : " }";
    }
    void print(const SpanInstanceDecl& d) {
        out += "instance " + d.name + " span { ";
        bool first = true;
        for (const auto& o : d.objs) {
            if (!first) out += "; ";
            first = false;
            out += "obj " + o.zero + " = { ";
            for (std::size_t i = 0; i < o.elems.size(); ++i) {
                if (i) out += ", ";
                out += o.elems[i];
            }
            out += o.elems.empty() ? "}" : " }";
        }
        for (const auto& s : d.spans) {
            if (!first) out += "; ";
            first = false;
            out += "span " + s.gen + " = { ";
            for (std::size_t i = 0; i < s.rows.size(); ++i) {
                if (i) out += ", ";
                out += s.rows[i].apex_elem + ": " + s.rows[i].left + " -> " + s.rows[i].right;
            }
            out += s.rows.empty() ? "}" : " }";
        }
        out += " }";
    }
    void print(const NormalizeCmd& c) { out += "normalize " + to_text(c.expr); }
    void print(const CheckCmd& c) {
        out += "check ";
        path(c.path1);
        out += " == ";
        path(c.path2);
    }
    void path(const std::vector<TwoCell>& p) {
        out += "[";
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out += ", ";
            out += to_text(p[i]);
        }
        out += "]";
    }
    void print(const SuiteCmd& c) {
        out += "suite " + c.which;
        if (c.depth) out += " --depth " + std::to_string(*c.depth);
        if (c.seed) out += " --seed " + std::to_string(*c.seed);
        if (c.samples) out += " --samples " + std::to_string(*c.samples);
    }
    void print(const EvalCmd& c) {
        out += "eval " + to_text(c.expr) + " in ";
        if (const auto* name = std::get_if<std::string>(&c.instance)) {
            out += *name;
        } else {
            const auto& inl = std::get<NatInstanceDecl>(c.instance);
            out += "N{";
            for (std::size_t i = 0; i < inl.assign.size(); ++i) {
                if (i) out += ", ";
                out += inl.assign[i].first + " = " + nat_to_string(inl.assign[i].second);
            }
            out += "}";
        }
    }
    void print(const StrictifyReportCmd&) { out += "strictify-report"; }
};

template <typename T>
bool same_alt(const Statement& a, const Statement& b, bool (*eq)(const T&, const T&)) {
    const T* x = std::get_if<T>(&a);
    const T* y = std::get_if<T>(&b);
    if (!x || !y) return false;
    return eq(*x, *y);
}

bool stmt_equal(const Statement& a, const Statement& b) {
    if (a.index() != b.index()) return false;
    return same_alt<ZeroDeclStmt>(a, b, +[](const ZeroDeclStmt& x, const ZeroDeclStmt& y) {
               return x.names == y.names;
           }) ||
           same_alt<Gen1DeclStmt>(a, b, +[](const Gen1DeclStmt& x, const Gen1DeclStmt& y) {
               return x.name == y.name && x.src == y.src && x.tgt == y.tgt;
           }) ||
           same_alt<Gen2DeclStmt>(a, b, +[](const Gen2DeclStmt& x, const Gen2DeclStmt& y) {
               return x.name == y.name && expr_equal(x.src, y.src) && expr_equal(x.tgt, y.tgt);
           }) ||
           same_alt<NatInstanceDecl>(a, b, +[](const NatInstanceDecl& x, const NatInstanceDecl& y) {
               return x.name == y.name && x.assign == y.assign;
           }) ||
           same_alt<SpanInstanceDecl>(a, b, +[](const SpanInstanceDecl& x,
                                                const SpanInstanceDecl& y) {
               if (x.name != y.name || x.objs.size() != y.objs.size() ||
                   x.spans.size() != y.spans.size())
                   return false;
               for (std::size_t i = 0; i < x.objs.size(); ++i)
                   if (x.objs[i].zero != y.objs[i].zero || x.objs[i].elems != y.objs[i].elems)
                       return false;
               for (std::size_t i = 0; i < x.spans.size(); ++i) {
                   if (x.spans[i].gen != y.spans[i].gen ||
                       x.spans[i].rows.size() != y.spans[i].rows.size())
                       return false;
                   for (std::size_t j = 0; j < x.spans[i].rows.size(); ++j) {
                       const auto& r = x.spans[i].rows[j];
                       const auto& s = y.spans[i].rows[j];
                       if (r.apex_elem != s.apex_elem || r.left != s.left || r.right != s.right)
                           return false;
                   }
               }
               return true;
           }) ||
           same_alt<NormalizeCmd>(a, b, +[](const NormalizeCmd& x, const NormalizeCmd& y) {
               return expr_equal(x.expr, y.expr);
           }) ||
           same_alt<CheckCmd>(a, b, +[](const CheckCmd& x, const CheckCmd& y) {
               if (x.path1.size() != y.path1.size() || x.path2.size() != y.path2.size())
                   return false;
               for (std::size_t i = 0; i < x.path1.size(); ++i)
                   if (!cell_equal(x.path1[i], y.path1[i])) return false;
               for (std::size_t i = 0; i < x.path2.size(); ++i)
                   if (!cell_equal(x.path2[i], y.path2[i])) return false;
               return true;
           }) ||
           same_alt<SuiteCmd>(a, b, +[](const SuiteCmd& x, const SuiteCmd& y) {
               return x.which == y.which && x.depth == y.depth && x.seed == y.seed &&
                      x.samples == y.samples;
           }) ||
           same_alt<EvalCmd>(a, b, +[](const EvalCmd& x, const EvalCmd& y) {
               if (!expr_equal(x.expr, y.expr) || x.instance.index() != y.instance.index())
                   return false;
               if (const auto* n = std::get_if<std::string>(&x.instance))
                   return *n == std::get<std::string>(y.instance);
               const auto& xi = std::get<NatInstanceDecl>(x.instance);
               const auto& yi = std::get<NatInstanceDecl>(y.instance);
               return xi.name == yi.name && xi.assign == yi.assign;
           }) ||
           same_alt<StrictifyReportCmd>(a, b, +[](const StrictifyReportCmd&,
                                                  const StrictifyReportCmd&) { return true; });
}

}  // namespace

std::string pretty_print(const Program& p) {
    Printer pr;
    for (const auto& st : p.statements) pr.stmt(st);
    return pr.out;
}

bool program_equal(const Program& a, const Program& b) {
    if (a.statements.size() != b.statements.size()) return false;
    for (std::size_t i = 0; i < a.statements.size(); ++i)
        if (!stmt_equal(a.statements[i], b.statements[i])) return false;
    return true;
}

std::string signature_to_text(const SmcSignature& sig) {
    std::string out = "0cells";
    for (ZeroIx i = 0; i < sig.zero_cell_count(); ++i) out += " " + sig.zero_name(i);
    out += ";";
    for (GenIx i = 0; i < sig.gen1_count(); ++i)
        out += " 1cell " + sig.gen_name(i) + ": " + sig.zero_name(sig.gen_src(i)) + " -> " +
               sig.zero_name(sig.gen_tgt(i)) + ";";
    for (const auto& c : sig.gen2_cells())
        out += " 2cell " + c.name + ": " + to_text(c.src) + " => " + to_text(c.tgt) + ";";
    return out;
}

SmcSignature signature_from_text(const std::string& text) {
    return resolve_program(parse_program(text)).sig;
}

SpanInstance build_span_instance(const SpanInstanceDecl& decl, const SmcSignature& sig) {
    SpanInstance inst;
    inst.sig = sig;
    inst.zero_obj.resize(sig.zero_cell_count());
    std::vector<bool> have(sig.zero_cell_count(), false);
    for (const auto& o : decl.objs) {
        auto z = sig.zero_index(o.zero);
        if (!z) throw ResolveError("span instance: unknown 0-cell '" + o.zero + "'");
        inst.zero_obj[*z] = FinSetObj::of_atoms(o.elems);
        if (!inst.zero_obj[*z].duplicate_free())
            throw ResolveError("span instance: duplicate elements for 0-cell '" + o.zero + "'");
        have[*z] = true;
    }
    for (ZeroIx z = 0; z < sig.zero_cell_count(); ++z)
        if (!have[z])
            throw ResolveError("span instance: no carrier set for 0-cell '" +
                               sig.zero_name(z) + "'");
    for (const auto& sp : decl.spans) {
        auto g = sig.gen_index(sp.gen);
        if (!g) throw ResolveError("span instance: unknown generator '" + sp.gen + "'");
        SpanCell cell;
        cell.src = inst.zero_obj[sig.gen_src(*g)];
        cell.tgt = inst.zero_obj[sig.gen_tgt(*g)];
        for (const auto& row : sp.rows) {
            FsElem apex_elem = FsElem::atom(row.apex_elem);
            if (cell.apex.find(apex_elem))
                throw ResolveError("span instance: duplicate apex element '" + row.apex_elem +
                                   "' in span for '" + sp.gen + "'");
            auto l = cell.src.find(FsElem::atom(row.left));
            auto r = cell.tgt.find(FsElem::atom(row.right));
            if (!l)
                throw ResolveError("span instance: '" + row.left +
                                   "' is not an element of the source of '" + sp.gen + "'");
            if (!r)
                throw ResolveError("span instance: '" + row.right +
                                   "' is not an element of the target of '" + sp.gen + "'");
            cell.apex.elements.push_back(std::move(apex_elem));
            cell.left_leg.push_back(*l);
            cell.right_leg.push_back(*r);
        }
        inst.gen_assign.emplace(sp.gen, std::move(cell));
    }
    return inst;
}

std::string span_instance_to_text(const SpanInstance& inst, const std::string& name) {
    auto atom_name = [](const FsElem& e) {
        if (e.kind() != FsElem::Kind::Atom)
            throw Error("span instance serialization requires atomic elements");
        return e.name();
    };
    std::string out = "instance " + name + " span { ";
    bool first = true;
    for (ZeroIx z = 0; z < inst.sig.zero_cell_count(); ++z) {
        if (!first) out += "; ";
        first = false;
        out += "obj " + inst.sig.zero_name(z) + " = { ";
        const auto& obj = inst.zero_obj[z];
        for (std::size_t i = 0; i < obj.size(); ++i) {
            if (i) out += ", ";
            out += atom_name(obj.elements[i]);
        }
        out += obj.size() ? " }" : "}";
    }
    for (GenIx g = 0; g < inst.sig.gen1_count(); ++g) {
        auto it = inst.gen_assign.find(inst.sig.gen_name(g));
        if (it == inst.gen_assign.end()) continue;
        const SpanCell& s = it->second;
        if (!first) out += "; ";
        first = false;
        out += "span " + inst.sig.gen_name(g) + " = { ";
        for (std::size_t i = 0; i < s.apex.size(); ++i) {
            if (i) out += ", ";
            out += atom_name(s.apex.elements[i]) + ": " +
                   atom_name(s.src.elements[s.left_leg[i]]) + " -> " +
                   atom_name(s.tgt.elements[s.right_leg[i]]);
        }
        out += s.apex.size() ? " }" : "}";
    }
    out += " };";
    return out;
}

}  // namespace smc
