#include "ioelim/model.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "ioelim/error.hpp"

namespace ioelim {

void normalize_fraction(Poly& num, Poly& den) {
    assert(!den.is_zero());
    if (num.is_zero()) {
        den = Poly(1);
        return;
    }
    Monomial g = num.terms().front().first;
    for (const auto& [m, c] : num.terms()) g = Monomial::gcd(g, m);
    for (const auto& [m, c] : den.terms()) g = Monomial::gcd(g, m);
    if (!g.is_one()) {
        auto strip = [&](const Poly& p) {
            std::vector<Poly::Term> ts;
            for (const auto& [m, c] : p.terms()) ts.emplace_back(m.divided_by(g), c);
            return Poly::from_terms(std::move(ts));
        };
        num = strip(num);
        den = strip(den);
    }
    Rat s = den.content();
    num = num * (1 / s);
    den = den * (1 / s);
    if (num == den) {
        num = Poly(1);
        den = Poly(1);
    } else if (num == -den) {
        num = Poly(-1);
        den = Poly(1);
    }
}

namespace {

// ---------------------------------------------------------------------------
// Lexer

struct Token {
    enum Type { Ident, Number, Sym, End } type = End;
    std::string text;  // identifier or symbol spelling
    Rat value;         // for Number
    int primes = 0;    // for Ident
    int line = 0;
    int col = 0;
};

[[noreturn]] void fail(ErrorKind kind, int line, int col, const std::string& msg) {
    std::ostringstream os;
    os << "line " << line << ", column " << col << ": " << msg;
    throw Error(kind, os.str(), line);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex_line(const std::string& text, int line_no) {
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.line = line_no;
        t.col = static_cast<int>(i) + 1;
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j])) ++j;
            t.type = Token::Ident;
            t.text = text.substr(i, j - i);
            while (j < text.size() && text[j] == '\'') {
                ++t.primes;
                ++j;
            }
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            std::string digits = text.substr(i, j - i);
            std::string frac;
            if (j < text.size() && text[j] == '.') {
                ++j;
                std::size_t k = j;
                while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                if (k == j) fail(ErrorKind::Syntax, line_no, t.col, "malformed number");
                frac = text.substr(j, k - j);
                j = k;
            }
            t.type = Token::Number;
            mpz_class numer(digits + frac);
            mpz_class denom(1);
            for (std::size_t d = 0; d < frac.size(); ++d) denom *= 10;
            t.value = Rat(numer, denom);
            t.value.canonicalize();
            i = j;
        } else if (std::string("+-*/^(),:=").find(c) != std::string::npos) {
            t.type = Token::Sym;
            t.text = std::string(1, c);
            ++i;
        } else {
            fail(ErrorKind::Syntax, line_no, t.col, std::string("unexpected character '") + c + "'");
        }
        toks.push_back(std::move(t));
    }
    Token end;
    end.line = line_no;
    end.col = static_cast<int>(text.size()) + 1;
    toks.push_back(end);
    return toks;
}

// ---------------------------------------------------------------------------
// Expression parser

struct SymbolUse {
    JetVar var;
    int line;
    int col;
};

struct SymbolTable {
    const std::vector<std::string>* states;
    const std::vector<std::string>* outputs;
    const std::vector<std::string>* inputs;
    const std::vector<std::string>* params;

    std::optional<JetVar> resolve(const std::string& name, int primes) const {
        auto find = [&](const std::vector<std::string>& pool) -> int {
            auto it = std::find(pool.begin(), pool.end(), name);
            return it == pool.end() ? 0 : static_cast<int>(it - pool.begin()) + 1;
        };
        if (int i = find(*states)) return JetVar(VarKind::State, i, primes);
        if (int i = find(*outputs)) return JetVar(VarKind::Output, i, primes);
        if (int i = find(*inputs)) return JetVar(VarKind::Input, i, primes);
        if (int i = find(*params)) {
            if (primes > 0) return std::nullopt; // handled by caller
            return JetVar(VarKind::Param, i, 0);
        }
        return std::nullopt;
    }
};

RationalFn rf_add(const RationalFn& a, const RationalFn& b) {
    RationalFn r{a.num * b.den + b.num * a.den, a.den * b.den};
    normalize_fraction(r.num, r.den);
    return r;
}

RationalFn rf_mul(const RationalFn& a, const RationalFn& b) {
    RationalFn r{a.num * b.num, a.den * b.den};
    normalize_fraction(r.num, r.den);
    return r;
}

RationalFn rf_neg(const RationalFn& a) { return {-a.num, a.den}; }

RationalFn rf_div(const RationalFn& a, const RationalFn& b, int line, int col) {
    if (b.num.is_zero())
        fail(ErrorKind::ZeroDenominator, line, col, "division by a zero expression");
    RationalFn r{a.num * b.den, a.den * b.num};
    normalize_fraction(r.num, r.den);
    return r;
}

class ExprParser {
  public:
    ExprParser(const std::vector<Token>& toks, std::size_t pos, const SymbolTable& syms,
               std::vector<SymbolUse>* uses)
        : toks_(toks), pos_(pos), syms_(syms), uses_(uses) {}

    RationalFn parse_expr() {
        RationalFn acc;
        bool negate = false;
        if (peek().type == Token::Sym && (peek().text == "-" || peek().text == "+")) {
            negate = peek().text == "-";
            advance();
        }
        acc = parse_term();
        if (negate) acc = rf_neg(acc);
        while (peek().type == Token::Sym && (peek().text == "+" || peek().text == "-")) {
            bool sub = peek().text == "-";
            advance();
            RationalFn rhs = parse_term();
            acc = rf_add(acc, sub ? rf_neg(rhs) : rhs);
        }
        return acc;
    }

    std::size_t pos() const { return pos_; }

    void expect_end(const char* what) const {
        if (peek().type != Token::End)
            fail(ErrorKind::Syntax, peek().line, peek().col,
                 std::string("unexpected trailing input in ") + what);
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    void advance() { ++pos_; }

    RationalFn parse_term() {
        RationalFn acc = parse_factor();
        while (peek().type == Token::Sym && (peek().text == "*" || peek().text == "/")) {
            bool div = peek().text == "/";
            int line = peek().line, col = peek().col;
            advance();
            RationalFn rhs = parse_factor();
            acc = div ? rf_div(acc, rhs, line, col) : rf_mul(acc, rhs);
        }
        return acc;
    }

    RationalFn parse_factor() {
        if (peek().type == Token::Sym && peek().text == "-") {
            advance();
            return rf_neg(parse_factor());
        }
        RationalFn base = parse_atom();
        if (peek().type == Token::Sym && peek().text == "^") {
            int line = peek().line, col = peek().col;
            advance();
            bool neg = false;
            if (peek().type == Token::Sym && peek().text == "-") {
                neg = true;
                advance();
            }
            if (peek().type != Token::Number || peek().value.get_den() != 1)
                fail(ErrorKind::Syntax, peek().line, peek().col, "exponent must be an integer");
            long e = peek().value.get_num().get_si();
            advance();
            RationalFn acc{Poly(1), Poly(1)};
            for (long i = 0; i < e; ++i) acc = rf_mul(acc, base);
            if (neg) acc = rf_div({Poly(1), Poly(1)}, acc, line, col);
            return acc;
        }
        return base;
    }

    RationalFn parse_atom() {
        const Token& t = peek();
        if (t.type == Token::Number) {
            advance();
            return {Poly(t.value), Poly(1)};
        }
        if (t.type == Token::Ident) {
            auto var = syms_.resolve(t.text, t.primes);
            if (!var) {
                // distinguish an undeclared name from a primed parameter
                if (syms_.resolve(t.text, 0) && t.primes > 0)
                    fail(ErrorKind::InvalidReference, t.line, t.col,
                         "parameter '" + t.text + "' has no derivatives");
                fail(ErrorKind::UndeclaredSymbol, t.line, t.col,
                     "symbol '" + t.text + "' is not declared");
            }
            if (uses_) uses_->push_back({*var, t.line, t.col});
            advance();
            return {Poly(*var), Poly(1)};
        }
        if (t.type == Token::Sym && t.text == "(") {
            advance();
            RationalFn inner = parse_expr();
            if (!(peek().type == Token::Sym && peek().text == ")"))
                fail(ErrorKind::Syntax, peek().line, peek().col, "expected ')'");
            advance();
            return inner;
        }
        fail(ErrorKind::Syntax, t.line, t.col, "expected a number, symbol or '('");
    }

    const std::vector<Token>& toks_;
    std::size_t pos_;
    const SymbolTable& syms_;
    std::vector<SymbolUse>* uses_;
};

struct RawEquation {
    std::string lhs_name;
    int lhs_primes;
    int line;
    std::vector<Token> toks;
    std::size_t expr_pos;
};

} // namespace

Model parse_model(std::string_view text) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        lines.push_back(cur);
    }

    Model mdl;
    std::map<std::string, int> decl_lines; // which keyword lists were seen
    std::vector<RawEquation> raw_eqs;

    auto declared = [&](const std::string& name) {
        auto in = [&](const std::vector<std::string>& pool) {
            return std::find(pool.begin(), pool.end(), name) != pool.end();
        };
        return in(mdl.state_names) || in(mdl.output_names) || in(mdl.input_names) ||
               in(mdl.param_names);
    };

    for (std::size_t li = 0; li < lines.size(); ++li) {
        int line_no = static_cast<int>(li) + 1;
        std::vector<Token> toks = lex_line(lines[li], line_no);
        if (toks.front().type == Token::End) continue;

        const Token& head = toks[0];
        if (head.type != Token::Ident)
            fail(ErrorKind::Syntax, head.line, head.col, "expected a declaration or an equation");

        bool is_decl = toks.size() > 1 && toks[1].type == Token::Sym && toks[1].text == ":";
        if (is_decl) {
            static const char* kinds[] = {"states", "params", "inputs", "outputs"};
            if (std::find(std::begin(kinds), std::end(kinds), head.text) == std::end(kinds))
                fail(ErrorKind::Syntax, head.line, head.col,
                     "unknown declaration '" + head.text + "'");
            if (head.primes)
                fail(ErrorKind::Syntax, head.line, head.col, "unexpected prime mark");
            if (decl_lines.count(head.text))
                fail(ErrorKind::DuplicateDeclaration, head.line, head.col,
                     "'" + head.text + "' declared twice");
            decl_lines[head.text] = line_no;

            std::vector<std::string>* target = nullptr;
            if (head.text == "states") target = &mdl.state_names;
            else if (head.text == "params") target = &mdl.param_names;
            else if (head.text == "inputs") target = &mdl.input_names;
            else target = &mdl.output_names;

            std::size_t p = 2;
            bool want_name = true;
            while (toks[p].type != Token::End) {
                const Token& t = toks[p];
                if (want_name) {
                    if (t.type != Token::Ident || t.primes)
                        fail(ErrorKind::Syntax, t.line, t.col, "expected a symbol name");
                    if (declared(t.text))
                        fail(ErrorKind::DuplicateDeclaration, t.line, t.col,
                             "symbol '" + t.text + "' declared twice");
                    target->push_back(t.text);
                } else {
                    if (!(t.type == Token::Sym && t.text == ","))
                        fail(ErrorKind::Syntax, t.line, t.col, "expected ','");
                }
                want_name = !want_name;
                ++p;
            }
            continue;
        }

        // equation line
        if (toks.size() < 2 || !(toks[1].type == Token::Sym && toks[1].text == "="))
            fail(ErrorKind::Syntax, head.line, head.col, "expected '=' after the left-hand side");
        raw_eqs.push_back({head.text, head.primes, line_no, std::move(toks), 2});
    }

    mdl.n = static_cast<int>(mdl.state_names.size());
    mdl.m = static_cast<int>(mdl.output_names.size());
    mdl.r = static_cast<int>(mdl.input_names.size());
    if (mdl.n == 0) throw Error(ErrorKind::Syntax, "model declares no states");
    if (mdl.m == 0) throw Error(ErrorKind::Syntax, "model declares no outputs");

    SymbolTable syms{&mdl.state_names, &mdl.output_names, &mdl.input_names, &mdl.param_names};
    mdl.state_rhs.resize(mdl.n);
    mdl.output_rhs.resize(mdl.m);
    std::vector<bool> have_state(mdl.n, false), have_output(mdl.m, false);

    for (const RawEquation& eq : raw_eqs) {
        auto base = syms.resolve(eq.lhs_name, 0);
        if (!base)
            fail(ErrorKind::UndeclaredSymbol, eq.line, 1,
                 "symbol '" + eq.lhs_name + "' is not declared");

        std::vector<SymbolUse> uses;
        ExprParser parser(eq.toks, eq.expr_pos, syms, &uses);
        RationalFn rhs = parser.parse_expr();
        parser.expect_end("equation");

        if (base->kind() == VarKind::State) {
            if (eq.lhs_primes != 1)
                fail(ErrorKind::Syntax, eq.line, 1,
                     "state equations use the primed form " + eq.lhs_name + "' = ...");
            int idx = static_cast<int>(base->index());
            if (have_state[idx - 1])
                fail(ErrorKind::DuplicateDeclaration, eq.line, 1,
                     "duplicate equation for state '" + eq.lhs_name + "'");
            for (const SymbolUse& u : uses) {
                if (u.var.order() > 0)
                    fail(ErrorKind::Syntax, u.line, u.col,
                         "derivatives cannot appear on a right-hand side");
                if (u.var.kind() == VarKind::Output)
                    fail(ErrorKind::InvalidReference, u.line, u.col,
                         "outputs cannot appear in state equations");
            }
            have_state[idx - 1] = true;
            mdl.state_rhs[idx - 1] = rhs;
        } else if (base->kind() == VarKind::Output) {
            if (eq.lhs_primes != 0)
                fail(ErrorKind::Syntax, eq.line, 1, "output equations define the undifferentiated output");
            int idx = static_cast<int>(base->index());
            if (have_output[idx - 1])
                fail(ErrorKind::DuplicateDeclaration, eq.line, 1,
                     "duplicate equation for output '" + eq.lhs_name + "'");
            for (const SymbolUse& u : uses) {
                if (u.var.order() > 0)
                    fail(ErrorKind::OutputDependsOnDerivative, u.line, u.col,
                         "output equations cannot reference derivatives");
                if (u.var.kind() == VarKind::Input)
                    fail(ErrorKind::OutputDependsOnInput, u.line, u.col,
                         "output equations cannot reference inputs");
                if (u.var.kind() == VarKind::Output)
                    fail(ErrorKind::InvalidReference, u.line, u.col,
                         "outputs cannot reference outputs");
            }
            have_output[idx - 1] = true;
            mdl.output_rhs[idx - 1] = rhs;
        } else {
            fail(ErrorKind::Syntax, eq.line, 1,
                 "only state derivatives and outputs may be defined");
        }
    }

    for (int i = 0; i < mdl.n; ++i)
        if (!have_state[i])
            throw Error(ErrorKind::Syntax, "missing equation for state '" + mdl.state_names[i] + "'");
    for (int j = 0; j < mdl.m; ++j)
        if (!have_output[j])
            throw Error(ErrorKind::Syntax,
                        "missing equation for output '" + mdl.output_names[j] + "'");
    return mdl;
}

static std::string print_rhs(const RationalFn& rf, const NameTable& names) {
    if (rf.den == Poly(1)) return to_string(rf.num, names);
    return "(" + to_string(rf.num, names) + ") / (" + to_string(rf.den, names) + ")";
}

std::string print_model(const Model& mdl) {
    NameTable names = mdl.names();
    std::ostringstream os;
    auto list = [&os](const char* kw, const std::vector<std::string>& pool) {
        os << kw << ":";
        for (std::size_t i = 0; i < pool.size(); ++i) os << (i ? ", " : " ") << pool[i];
        os << "\n";
    };
    list("states", mdl.state_names);
    list("params", mdl.param_names);
    if (mdl.r > 0) list("inputs", mdl.input_names);
    list("outputs", mdl.output_names);
    for (int i = 0; i < mdl.n; ++i)
        os << mdl.state_names[i] << "' = " << print_rhs(mdl.state_rhs[i], names) << "\n";
    for (int j = 0; j < mdl.m; ++j)
        os << mdl.output_names[j] << " = " << print_rhs(mdl.output_rhs[j], names) << "\n";
    return os.str();
}

std::vector<PolyEquation> to_poly_system(const Model& mdl) {
    std::vector<PolyEquation> sys;
    for (int i = 1; i <= mdl.n; ++i) {
        const RationalFn& rf = mdl.state_rhs[i - 1];
        if (rf.den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "zero denominator");
        sys.push_back({rf.den * Poly(mdl.state(i, 1)) - rf.num, VarKind::State, i, 0});
    }
    for (int j = 1; j <= mdl.m; ++j) {
        const RationalFn& rf = mdl.output_rhs[j - 1];
        if (rf.den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "zero denominator");
        sys.push_back({rf.den * Poly(mdl.output(j)) - rf.num, VarKind::Output, j, 0});
    }
    return sys;
}

RationalFn parse_expression(std::string_view text, const Model& mdl) {
    std::vector<Token> toks = lex_line(std::string(text), 1);
    SymbolTable syms{&mdl.state_names, &mdl.output_names, &mdl.input_names, &mdl.param_names};
    ExprParser parser(toks, 0, syms, nullptr);
    RationalFn rf = parser.parse_expr();
    parser.expect_end("expression");
    return rf;
}

Poly parse_poly(std::string_view text, const Model& mdl) {
    RationalFn rf = parse_expression(text, mdl);
    if (rf.den != Poly(1))
        throw Error(ErrorKind::Syntax, "expected a polynomial expression");
    return rf.num;
}

Monomial parse_monomial(std::string_view text, const Model& mdl) {
    Poly p = parse_poly(text, mdl);
    if (p.term_count() != 1 || p.leading_coeff() != 1)
        throw Error(ErrorKind::Syntax, "expected a monomial");
    return p.leading_monomial();
}

} // namespace ioelim
