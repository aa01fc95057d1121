#include <jetsym/syntax.hpp>

#include <cctype>
#include <limits>
#include <optional>

namespace jetsym {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::optional<FunctionId> function_named(std::string_view s)
{
    if (s == "u") return FunctionId::u;
    if (s == "Phi") return FunctionId::Phi;
    if (s == "phi") return FunctionId::phi;
    return std::nullopt;
}

std::optional<Atom> plain_identifier(std::string_view s)
{
    if (s == "x0") return Atom{BaseVar::x0};
    if (s == "x1") return Atom{BaseVar::x1};
    if (s == "x2") return Atom{BaseVar::x2};
    if (s == "x3") return Atom{BaseVar::x3};
    if (s == "tau") return Atom{BaseVar::tau};
    if (s == "m") return Atom{Param::m};
    if (s == "lambda") return Atom{Param::lambda};
    if (s == "n") return Atom{Param::n};
    return std::nullopt;
}

std::optional<BaseVar> index_named(char c)
{
    switch (c) {
    case '0': return BaseVar::x0;
    case '1': return BaseVar::x1;
    case '2': return BaseVar::x2;
    case '3': return BaseVar::x3;
    case 't': return BaseVar::tau;
    default: return std::nullopt;
    }
}

class Parser {
public:
    Parser(std::string_view text, const Settings& s) : text_(text), settings_(s) {}

    Expr run()
    {
        Expr e = sum();
        skip_blanks();
        if (!at_end()) {
            fail("unexpected '" + std::string(1, peek()) + "'");
        }
        return e;
    }

private:
    std::string_view text_;
    const Settings& settings_;
    std::size_t pos_ = 0;
    std::optional<std::vector<CatalogEntry>> entries_;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_ + 1, msg); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const { throw ParseError(pos + 1, msg); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_blanks()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_blanks();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what)
    {
        if (!accept(c)) {
            fail(std::string("expected ") + what);
        }
    }

    Expr sum()
    {
        Expr e = product();
        for (;;) {
            if (accept('+')) {
                e += product();
            } else if (accept('-')) {
                e -= product();
            } else {
                return e;
            }
        }
    }

    Expr product()
    {
        Expr e = unary();
        for (;;) {
            skip_blanks();
            const std::size_t at = pos_;
            if (accept('*')) {
                e = e * unary();
            } else if (accept('/')) {
                Expr d = unary();
                if (d.is_zero()) {
                    fail_at(at, "division by zero");
                }
                e = e / d;
            } else {
                return e;
            }
        }
    }

    Expr unary()
    {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    Expr power()
    {
        Expr base = primary();
        skip_blanks();
        const std::size_t at = pos_;
        if (!accept('^')) {
            return base;
        }
        skip_blanks();
        const std::size_t exp_at = pos_;
        const Expr ex = unary();
        const auto c = ex.constant_value();
        if (!c || !c->is_real()) {
            fail_at(exp_at, "exponent must be a real rational constant");
        }
        const mpq_class& q = c->re();
        if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) {
            fail_at(exp_at, "exponent out of range");
        }
        try {
            return pow(base, Rational(q.get_num().get_si(), q.get_den().get_si()));
        } catch (const DomainError& e) {
            fail_at(at, e.what());
        }
    }

    Expr number()
    {
        const std::size_t start = pos_;
        while (is_digit(peek())) {
            ++pos_;
        }
        if (peek() == '.') {
            fail("decimal numbers are not supported; write a fraction");
        }
        return Expr(Gaussian(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start))))));
    }

    std::string identifier()
    {
        const std::size_t start = pos_;
        while (is_ident_char(peek())) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    // After a function name: '*' means conjugation when followed by a
    // character that cannot start a factor.
    bool conjugation_star()
    {
        if (peek() != '*') {
            return false;
        }
        std::size_t k = pos_ + 1;
        while (k < text_.size() && std::isspace(static_cast<unsigned char>(text_[k]))) {
            ++k;
        }
        if (k >= text_.size()) {
            ++pos_;
            return true;
        }
        switch (text_[k]) {
        case '[': case '*': case '^': case ')': case '+': case '-': case '/': case ',': case ']':
            ++pos_;
            return true;
        default:
            return false;
        }
    }

    FunctionId function_argument()
    {
        skip_blanks();
        const std::size_t at = pos_;
        if (!is_ident_start(peek())) {
            fail("expected a function name");
        }
        const std::string id = identifier();
        auto f = function_named(id);
        if (!f) {
            throw UnknownIdentifierError(at + 1, "unknown function '" + id + "'");
        }
        skip_blanks();
        return conjugation_star() ? conjugate(*f) : *f;
    }

    JetVar jet_suffix(FunctionId f)
    {
        MultiIndex idx;
        skip_blanks();
        if (peek() != '[') {
            return JetVar{f, idx};
        }
        ++pos_;
        for (;;) {
            skip_blanks();
            const std::size_t at = pos_;
            const auto v = at_end() ? std::nullopt : index_named(peek());
            if (!v) {
                fail("expected a derivative index");
            }
            if (!in_domain(f, *v)) {
                fail_at(at, name(f) + " does not depend on " + name(*v));
            }
            ++pos_;
            idx = idx.plus(*v);
            skip_blanks();
            if (accept(']')) {
                return JetVar{f, idx};
            }
            expect(',', "',' or ']'");
        }
    }

    Expr call(const std::string& id, std::size_t at)
    {
        if (id == "exp") {
            Expr a = sum();
            expect(')', "')'");
            return exp(a);
        }
        if (id == "box") {
            const FunctionId f = function_argument();
            expect(')', "')'");
            if (domain(f).size() != 4) {
                fail_at(at, "box needs a function of x0..x3");
            }
            return box(f);
        }
        if ((id[0] == 'S' || id[0] == 'R') && id.size() > 1) {
            for (std::size_t k = 1; k < id.size(); ++k) {
                if (!is_digit(id[k])) {
                    throw UnknownIdentifierError(at + 1, "unknown function '" + id + "'");
                }
            }
            const FunctionId f = function_argument();
            std::optional<FunctionId> g;
            if (accept(',')) {
                g = function_argument();
            }
            expect(')', "')'");
            const IndexSpace sp = natural_space(f);
            if (g && natural_space(*g).vars != sp.vars) {
                fail_at(at, "arguments live on different variable spaces");
            }
            const std::string digits = id.substr(1);
            if (id[0] == 'R') {
                const int k = std::stoi(digits);
                if (k < 1) {
                    fail_at(at, "R index must be at least 1");
                }
                return R_k(gradient(f, sp), hessian(g.value_or(f), sp), k, sp);
            }
            if (!g) {
                const int k = std::stoi(digits);
                if (k < 1) {
                    fail_at(at, "S index must be at least 1");
                }
                return S_k(hessian(f, sp), k, sp);
            }
            if (digits.size() < 2) {
                fail_at(at, "S with two arguments needs two indices, e.g. S12");
            }
            const int j = digits[0] - '0';
            const int k = std::stoi(digits.substr(1));
            if (j > k || k < 1) {
                fail_at(at, "S indices need j <= k");
            }
            return S_jk(hessian(f, sp), hessian(*g, sp), j, k, sp);
        }
        throw UnknownIdentifierError(at + 1, "unknown function '" + id + "'");
    }

    Expr reference()
    {
        const std::size_t at = pos_;
        std::string nm;
        if (peek() == '"') {
            ++pos_;
            while (!at_end() && peek() != '"') {
                nm += text_[pos_++];
            }
            if (at_end()) {
                fail("unterminated catalog name");
            }
            ++pos_;
        } else {
            while (!at_end() && (is_ident_char(peek()) || peek() == '.')) {
                nm += text_[pos_++];
            }
        }
        if (nm.empty()) {
            fail("expected a catalog name after '@'");
        }
        if (!entries_) {
            entries_ = all_entries(settings_);
        }
        if (const auto* e = find_entry(*entries_, nm)) {
            return e->expr;
        }
        throw UnknownIdentifierError(at + 1, "no catalog entry '" + nm + "'");
    }

    Expr primary()
    {
        skip_blanks();
        const std::size_t at = pos_;
        if (at_end()) {
            fail("unexpected end of input");
        }
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Expr e = sum();
            expect(')', "')'");
            return e;
        }
        if (is_digit(c)) {
            return number();
        }
        if (c == '@') {
            ++pos_;
            return reference();
        }
        if (!is_ident_start(c)) {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        const std::string id = identifier();
        skip_blanks();
        if (peek() == '(') {
            ++pos_;
            return call(id, at);
        }
        if (id == "i") {
            return imag_unit();
        }
        if (auto a = plain_identifier(id)) {
            return Expr::of(*a);
        }
        if (auto f = function_named(id)) {
            const FunctionId g = conjugation_star() ? conjugate(*f) : *f;
            return Expr::of(jet_suffix(g));
        }
        throw UnknownIdentifierError(at + 1, "unknown identifier '" + id + "'");
    }
};

std::string exponent_text(const Rational& r)
{
    if (r.is_integer() && r.sign() > 0) {
        return r.str();
    }
    return "(" + r.str() + ")";
}

std::string atom_text(const Atom& a)
{
    if (const auto* b = std::get_if<BaseVar>(&a)) {
        return name(*b);
    }
    if (const auto* p = std::get_if<Param>(&a)) {
        return name(*p);
    }
    if (const auto* j = std::get_if<JetVar>(&a)) {
        return to_string(*j);
    }
    if (const auto* e = std::get_if<ExpAtom>(&a)) {
        return "exp(" + print(*e->arg) + ")";
    }
    return "(" + print(*std::get<PowAtom>(a).base) + ")";
}

// Coefficient text without its sign; `negative` reports the sign pulled out.
std::string coefficient_text(const Gaussian& c, bool& negative)
{
    negative = false;
    if (c.is_real()) {
        negative = sgn(c.re()) < 0;
        return to_string(abs(c.re()));
    }
    if (sgn(c.re()) == 0) {
        negative = sgn(c.im()) < 0;
        const mpq_class m = abs(c.im());
        return m == 1 ? "i" : to_string(m) + "*i";
    }
    const mpq_class m = abs(c.im());
    return "(" + to_string(c.re()) + (sgn(c.im()) < 0 ? "-" : "+") + (m == 1 ? "" : to_string(m) + "*") + "i)";
}

} // namespace

Expr parse(std::string_view text, const Settings& s)
{
    return Parser(text, s).run();
}

std::string print(const Expr& e)
{
    if (e.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& t : e.terms()) {
        bool negative = false;
        std::string coef = coefficient_text(t.coeff, negative);
        std::string body;
        if (coef != "1" || t.monomial.empty()) {
            body = coef;
        }
        for (const auto& f : t.monomial) {
            if (!body.empty()) {
                body += '*';
            }
            body += atom_text(f.atom);
            if (!(f.exponent == Rational(1))) {
                body += "^" + exponent_text(f.exponent);
            }
        }
        if (first) {
            out += negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
        first = false;
    }
    return out;
}

} // namespace jetsym
