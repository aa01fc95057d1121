#include <jetsym/expr.hpp>

#include <algorithm>
#include <cassert>

namespace jetsym {

// Grants the kernel's free functions access to Expr's private term vector.
struct ExprAccess {
    static Expr adopt(std::vector<Term>&& terms)
    {
        Expr e;
        e.terms_ = std::move(terms);
        return e;
    }
};

namespace {

template <typename T>
int three_way(const T& a, const T& b)
{
    return (a > b) - (a < b);
}

void canonicalize(std::vector<Term>& terms);
void emit_term(Gaussian c, Monomial m, std::vector<Term>& out);

Monomial merge_monomials(const Monomial& a, const Monomial& b)
{
    Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const int c = compare(a[i].atom, b[j].atom);
        if (c < 0) {
            r.push_back(a[i++]);
        } else if (c > 0) {
            r.push_back(b[j++]);
        } else {
            Rational s = a[i].exponent + b[j].exponent;
            // Two identical exp atoms still need merging into exp(2a); keep
            // both and let emit_term fold them.
            if (std::holds_alternative<ExpAtom>(a[i].atom)) {
                r.push_back(a[i]);
                r.push_back(b[j]);
            } else if (!s.is_zero()) {
                r.push_back(Factor{a[i].atom, s});
            }
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) {
        r.push_back(a[i]);
    }
    for (; j < b.size(); ++j) {
        r.push_back(b[j]);
    }
    return r;
}

Monomial sort_monomial(Monomial m)
{
    std::stable_sort(m.begin(), m.end(), [](const Factor& a, const Factor& b) { return compare(a.atom, b.atom) < 0; });
    Monomial r;
    r.reserve(m.size());
    for (auto& f : m) {
        if (!r.empty() && compare(r.back().atom, f.atom) == 0 && !std::holds_alternative<ExpAtom>(f.atom)) {
            r.back().exponent = r.back().exponent + f.exponent;
        } else {
            r.push_back(std::move(f));
        }
    }
    return r;
}

Expr pow_expand(const Expr& base, std::int64_t k)
{
    assert(k > 0);
    Expr result(1);
    Expr b = base;
    while (k > 0) {
        if (k & 1) {
            result = result * b;
        }
        k >>= 1;
        if (k > 0) {
            b = b * b;
        }
    }
    return result;
}

// Appends the canonical expansion of c * m to out (not yet sorted/combined).
void emit_term(Gaussian c, Monomial m, std::vector<Term>& out)
{
    if (c.is_zero()) {
        return;
    }
    int exp_count = 0;
    bool exp_fix = false;
    for (const auto& f : m) {
        if (const auto* ea = std::get_if<ExpAtom>(&f.atom)) {
            ++exp_count;
            if (f.exponent != Rational(1) || ea->arg->is_zero()) {
                exp_fix = true;
            }
        }
    }
    if (exp_count > 1 || exp_fix) {
        Expr sum;
        Monomial rest;
        rest.reserve(m.size());
        for (auto& f : m) {
            if (const auto* ea = std::get_if<ExpAtom>(&f.atom)) {
                sum += Expr(Gaussian(f.exponent)) * *ea->arg;
            } else {
                rest.push_back(std::move(f));
            }
        }
        if (!sum.is_zero()) {
            Factor ef{ExpAtom{std::make_shared<const Expr>(std::move(sum))}, Rational(1)};
            auto pos = std::lower_bound(rest.begin(), rest.end(), ef,
                                        [](const Factor& a, const Factor& b) { return compare(a.atom, b.atom) < 0; });
            rest.insert(pos, std::move(ef));
        }
        m = std::move(rest);
    }
    std::erase_if(m, [](const Factor& f) { return f.exponent.is_zero(); });

    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto* pa = std::get_if<PowAtom>(&m[i].atom);
        if (pa == nullptr || !m[i].exponent.is_integer() || pa->base->size() != 1) {
            continue;
        }
        // Integer powers of single-term bases distribute; fold them back.
        const Term bt = pa->base->terms().front();
        const Rational k = m[i].exponent;
        m.erase(m.begin() + static_cast<std::ptrdiff_t>(i));
        c *= bt.coeff.pow(k.num());
        for (const auto& bf : bt.monomial) {
            m.push_back(Factor{bf.atom, bf.exponent * k});
        }
        emit_term(std::move(c), sort_monomial(std::move(m)), out);
        return;
    }

    std::vector<std::pair<std::shared_ptr<const Expr>, std::int64_t>> expand;
    for (const auto& f : m) {
        if (const auto* pa = std::get_if<PowAtom>(&f.atom)) {
            if (f.exponent.is_integer() && f.exponent.sign() > 0) {
                expand.emplace_back(pa->base, f.exponent.num());
            }
        }
    }
    if (expand.empty()) {
        out.push_back(Term{std::move(c), std::move(m)});
        return;
    }
    std::erase_if(m, [](const Factor& f) {
        return std::holds_alternative<PowAtom>(f.atom) && f.exponent.is_integer() && f.exponent.sign() > 0;
    });
    std::vector<Term> single;
    single.push_back(Term{std::move(c), std::move(m)});
    Expr acc = ExprAccess::adopt(std::move(single));
    for (const auto& [base, k] : expand) {
        acc = acc * pow_expand(*base, k);
    }
    for (const auto& t : acc.terms()) {
        out.push_back(t);
    }
}

void canonicalize(std::vector<Term>& terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return compare(a.monomial, b.monomial) < 0; });
    std::vector<Term> r;
    r.reserve(terms.size());
    for (auto& t : terms) {
        if (!r.empty() && compare(r.back().monomial, t.monomial) == 0) {
            r.back().coeff += t.coeff;
        } else {
            if (!r.empty() && r.back().coeff.is_zero()) {
                r.pop_back();
            }
            r.push_back(std::move(t));
        }
    }
    if (!r.empty() && r.back().coeff.is_zero()) {
        r.pop_back();
    }
    terms = std::move(r);
}

Expr pow_single(const Term& t, const Rational& r)
{
    if (r.is_integer()) {
        Monomial m = t.monomial;
        for (auto& f : m) {
            f.exponent = f.exponent * r;
        }
        std::vector<Term> raw;
        emit_term(t.coeff.pow(r.num()), sort_monomial(std::move(m)), raw);
        canonicalize(raw);
        return ExprAccess::adopt(std::move(raw));
    }
    bool splittable = t.coeff.is_one();
    if (splittable) {
        for (const auto& f : t.monomial) {
            if (is_simple(f.atom) && !(f.exponent * r).is_integer()) {
                splittable = false;
                break;
            }
        }
    }
    if (splittable) {
        Monomial m = t.monomial;
        for (auto& f : m) {
            f.exponent = f.exponent * r;
        }
        std::vector<Term> raw;
        emit_term(Gaussian(1), std::move(m), raw);
        canonicalize(raw);
        return ExprAccess::adopt(std::move(raw));
    }
    Expr base = ExprAccess::adopt(std::vector<Term>{t});
    std::vector<Term> raw;
    raw.push_back(Term{Gaussian(1), Monomial{Factor{PowAtom{std::make_shared<const Expr>(std::move(base))}, r}}});
    return ExprAccess::adopt(std::move(raw));
}

// Largest monomial dividing every term (exponents may be negative).
Monomial common_content(const Expr& e)
{
    std::map<Atom, Rational, AtomLess> mins;
    std::map<Atom, std::size_t, AtomLess> seen;
    const std::size_t n = e.size();
    for (const auto& t : e.terms()) {
        for (const auto& f : t.monomial) {
            if (std::holds_alternative<ExpAtom>(f.atom)) {
                continue;
            }
            auto it = mins.find(f.atom);
            if (it == mins.end()) {
                mins.emplace(f.atom, f.exponent);
                seen.emplace(f.atom, 1);
            } else {
                if (f.exponent < it->second) {
                    it->second = f.exponent;
                }
                ++seen[f.atom];
            }
        }
    }
    Monomial content;
    for (auto& [atom, mn] : mins) {
        Rational v = mn;
        if (seen[atom] < n && v.sign() > 0) {
            v = Rational(0);
        }
        if (!v.is_zero()) {
            content.push_back(Factor{atom, v});
        }
    }
    // A shared exponential factors out only when it is the same in every term.
    const ExpAtom* shared = nullptr;
    bool all = true;
    for (const auto& t : e.terms()) {
        const ExpAtom* here = nullptr;
        for (const auto& f : t.monomial) {
            if (const auto* ea = std::get_if<ExpAtom>(&f.atom)) {
                here = ea;
            }
        }
        if (here == nullptr || (shared != nullptr && compare(*here->arg, *shared->arg) != 0)) {
            all = false;
            break;
        }
        shared = here;
    }
    if (all && shared != nullptr) {
        content.push_back(Factor{*shared, Rational(1)});
        content = sort_monomial(std::move(content));
    }
    return content;
}

Monomial invert_monomial(const Monomial& m)
{
    Monomial r;
    r.reserve(m.size());
    for (const auto& f : m) {
        if (const auto* ea = std::get_if<ExpAtom>(&f.atom)) {
            r.push_back(Factor{ExpAtom{std::make_shared<const Expr>(-*ea->arg)}, Rational(1)});
        } else {
            r.push_back(Factor{f.atom, -f.exponent});
        }
    }
    return sort_monomial(std::move(r));
}

Expr multiply_by_monomial(const Expr& e, const Gaussian& c, const Monomial& m)
{
    std::vector<Term> out;
    out.reserve(e.size());
    for (const auto& t : e.terms()) {
        emit_term(t.coeff * c, merge_monomials(t.monomial, m), out);
    }
    canonicalize(out);
    return ExprAccess::adopt(std::move(out));
}

using AtomImage = std::variant<Factor, Expr>;

// Rebuilds e with each factor replaced by its image.
template <typename ImageFn>
Expr map_atoms(const Expr& e, bool conj_coeffs, ImageFn&& image)
{
    std::vector<Term> raw;
    raw.reserve(e.size());
    Expr extra;
    for (const auto& t : e.terms()) {
        Monomial simple;
        simple.reserve(t.monomial.size());
        std::vector<Expr> products;
        for (const auto& f : t.monomial) {
            AtomImage img = image(f);
            if (auto* fp = std::get_if<Factor>(&img)) {
                simple.push_back(std::move(*fp));
            } else {
                products.push_back(std::move(std::get<Expr>(img)));
            }
        }
        Gaussian c = conj_coeffs ? t.coeff.conj() : t.coeff;
        if (products.empty()) {
            raw.push_back(Term{std::move(c), std::move(simple)});
            continue;
        }
        std::vector<Term> one;
        emit_term(std::move(c), sort_monomial(std::move(simple)), one);
        canonicalize(one);
        Expr acc = ExprAccess::adopt(std::move(one));
        for (const auto& p : products) {
            acc = acc * p;
            if (acc.is_zero()) {
                break;
            }
        }
        extra += acc;
    }
    return Expr::from_terms(std::move(raw)) + extra;
}

void collect_simple(const Expr& e, std::set<Atom, AtomLess>& out)
{
    for (const auto& t : e.terms()) {
        for (const auto& f : t.monomial) {
            if (const auto* ea = std::get_if<ExpAtom>(&f.atom)) {
                collect_simple(*ea->arg, out);
            } else if (const auto* pa = std::get_if<PowAtom>(&f.atom)) {
                collect_simple(*pa->base, out);
            } else {
                out.insert(f.atom);
            }
        }
    }
}

} // namespace

int compare(const Atom& a, const Atom& b)
{
    if (a.index() != b.index()) {
        return a.index() < b.index() ? -1 : 1;
    }
    switch (a.index()) {
    case 0:
        return three_way(std::get<BaseVar>(a), std::get<BaseVar>(b));
    case 1:
        return three_way(std::get<Param>(a), std::get<Param>(b));
    case 2: {
        const auto c = std::get<JetVar>(a) <=> std::get<JetVar>(b);
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case 3: {
        const auto& x = std::get<ExpAtom>(a).arg;
        const auto& y = std::get<ExpAtom>(b).arg;
        return x == y ? 0 : compare(*x, *y);
    }
    default: {
        const auto& x = std::get<PowAtom>(a).base;
        const auto& y = std::get<PowAtom>(b).base;
        return x == y ? 0 : compare(*x, *y);
    }
    }
}

bool is_simple(const Atom& a) { return a.index() <= 2; }

int compare(const Monomial& a, const Monomial& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (int c = compare(a[i].atom, b[i].atom); c != 0) {
            return c;
        }
        if (a[i].exponent != b[i].exponent) {
            return a[i].exponent < b[i].exponent ? -1 : 1;
        }
    }
    return three_way(a.size(), b.size());
}

int compare(const Expr& a, const Expr& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (int c = compare(a.terms_[i].monomial, b.terms_[i].monomial); c != 0) {
            return c;
        }
        if (int c = compare(a.terms_[i].coeff, b.terms_[i].coeff); c != 0) {
            return c;
        }
    }
    return three_way(a.size(), b.size());
}

bool operator==(const Expr& a, const Expr& b) { return a.size() == b.size() && compare(a, b) == 0; }

Expr::Expr(long c)
{
    if (c != 0) {
        terms_.push_back(Term{Gaussian(c), {}});
    }
}

Expr::Expr(Gaussian c)
{
    if (!c.is_zero()) {
        terms_.push_back(Term{std::move(c), {}});
    }
}

Expr Expr::from_terms(std::vector<Term> terms)
{
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        emit_term(std::move(t.coeff), sort_monomial(std::move(t.monomial)), out);
    }
    canonicalize(out);
    return ExprAccess::adopt(std::move(out));
}

Expr Expr::of(const Atom& a, Rational exponent)
{
    if (const auto* pa = std::get_if<PowAtom>(&a)) {
        return pow(*pa->base, exponent);
    }
    return from_terms({Term{Gaussian(1), Monomial{Factor{a, exponent}}}});
}

bool Expr::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.empty()); }

std::optional<Gaussian> Expr::constant_value() const
{
    if (terms_.empty()) {
        return Gaussian(0);
    }
    if (terms_.size() == 1 && terms_[0].monomial.empty()) {
        return terms_[0].coeff;
    }
    return std::nullopt;
}

std::optional<Atom> Expr::as_atom() const
{
    if (terms_.size() == 1 && terms_[0].coeff.is_one() && terms_[0].monomial.size() == 1 &&
        terms_[0].monomial[0].exponent == Rational(1)) {
        return terms_[0].monomial[0].atom;
    }
    return std::nullopt;
}

Expr Expr::operator-() const
{
    Expr r = *this;
    for (auto& t : r.terms_) {
        t.coeff = -t.coeff;
    }
    return r;
}

Expr& Expr::operator+=(const Expr& o)
{
    if (o.terms_.empty()) {
        return *this;
    }
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    std::vector<Term> r;
    r.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const int c = compare(terms_[i].monomial, o.terms_[j].monomial);
        if (c < 0) {
            r.push_back(std::move(terms_[i++]));
        } else if (c > 0) {
            r.push_back(o.terms_[j++]);
        } else {
            Gaussian s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) {
                r.push_back(Term{std::move(s), std::move(terms_[i].monomial)});
            }
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) {
        r.push_back(std::move(terms_[i]));
    }
    for (; j < o.terms_.size(); ++j) {
        r.push_back(o.terms_[j]);
    }
    terms_ = std::move(r);
    return *this;
}

Expr& Expr::operator-=(const Expr& o) { return *this += -o; }

Expr& Expr::operator*=(const Expr& o) { return *this = *this * o; }

Expr operator*(const Expr& a, const Expr& b)
{
    if (a.terms_.empty() || b.terms_.empty()) {
        return Expr();
    }
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            emit_term(ta.coeff * tb.coeff, merge_monomials(ta.monomial, tb.monomial), out);
        }
    }
    canonicalize(out);
    return ExprAccess::adopt(std::move(out));
}

Expr operator/(const Expr& a, const Expr& b) { return a * pow(b, Rational(-1)); }

Expr pow(const Expr& base, const Rational& r)
{
    if (r.is_zero()) {
        if (base.is_zero()) {
            throw DomainError("0^0 is undefined");
        }
        return Expr(1);
    }
    if (base.is_zero()) {
        if (r.sign() > 0) {
            return Expr();
        }
        throw DomainError("negative power of zero");
    }
    if (r == Rational(1)) {
        return base;
    }
    if (base.size() == 1) {
        return pow_single(base.terms().front(), r);
    }
    if (r.is_integer() && r.sign() > 0) {
        return pow_expand(base, r.num());
    }
    const Monomial content = common_content(base);
    Expr p = content.empty() ? base : multiply_by_monomial(base, Gaussian(1), invert_monomial(content));
    Expr prefactor = content.empty() ? Expr(1) : pow_single(Term{Gaussian(1), content}, r);
    // Compound bases are stored monic so every path to the same power agrees.
    Gaussian lead = p.terms().front().coeff;
    if (!lead.is_one()) {
        p = Expr(lead.inverse()) * p;
        prefactor = pow_single(Term{lead, {}}, r) * prefactor;
    }
    std::vector<Term> raw;
    raw.push_back(Term{Gaussian(1), Monomial{Factor{PowAtom{std::make_shared<const Expr>(std::move(p))}, r}}});
    return prefactor * ExprAccess::adopt(std::move(raw));
}

Expr exp(const Expr& arg)
{
    if (arg.is_zero()) {
        return Expr(1);
    }
    std::vector<Term> raw;
    raw.push_back(Term{Gaussian(1), Monomial{Factor{ExpAtom{std::make_shared<const Expr>(arg)}, Rational(1)}}});
    return ExprAccess::adopt(std::move(raw));
}

Expr normalize(const Expr& e) { return Expr::from_terms(e.terms()); }

Expr derive(const Expr& e, const SimpleAtomDerivative& rule)
{
    std::map<Atom, Expr, AtomLess> cache;
    auto inner = [&](const Atom& a) -> const Expr& {
        auto it = cache.find(a);
        if (it != cache.end()) {
            return it->second;
        }
        Expr d;
        if (const auto* ea = std::get_if<ExpAtom>(&a)) {
            d = derive(*ea->arg, rule);
        } else if (const auto* pa = std::get_if<PowAtom>(&a)) {
            d = derive(*pa->base, rule);
        } else {
            d = rule(a);
        }
        return cache.emplace(a, std::move(d)).first->second;
    };

    std::vector<Term> out;
    for (const auto& t : e.terms()) {
        for (std::size_t i = 0; i < t.monomial.size(); ++i) {
            const Factor& f = t.monomial[i];
            const Expr& d = inner(f.atom);
            if (d.is_zero()) {
                continue;
            }
            Gaussian c = t.coeff;
            Monomial m = t.monomial;
            if (!std::holds_alternative<ExpAtom>(f.atom)) {
                c *= Gaussian(f.exponent);
                m[i].exponent = f.exponent - Rational(1);
                if (m[i].exponent.is_zero()) {
                    m.erase(m.begin() + static_cast<std::ptrdiff_t>(i));
                }
            }
            for (const auto& dt : d.terms()) {
                emit_term(c * dt.coeff, merge_monomials(m, dt.monomial), out);
            }
        }
    }
    canonicalize(out);
    return ExprAccess::adopt(std::move(out));
}

Expr partial(const Expr& e, const Atom& v)
{
    if (!is_simple(v)) {
        throw std::invalid_argument("partial derivative needs a variable, jet or parameter");
    }
    return derive(e, [&v](const Atom& a) { return compare(a, v) == 0 ? Expr(1) : Expr(); });
}

Expr total_derivative(const Expr& e, BaseVar v)
{
    return derive(e, [v](const Atom& a) -> Expr {
        if (const auto* b = std::get_if<BaseVar>(&a)) {
            return *b == v ? Expr(1) : Expr();
        }
        if (const auto* j = std::get_if<JetVar>(&a)) {
            if (in_domain(j->function, v)) {
                return Expr::of(JetVar{j->function, j->index.plus(v)});
            }
        }
        return Expr();
    });
}

Expr total_derivative(const Expr& e, const MultiIndex& idx)
{
    Expr r = e;
    for (std::size_t k = 0; k < kBaseVarCount; ++k) {
        for (int c = 0; c < idx.counts()[k]; ++c) {
            r = total_derivative(r, static_cast<BaseVar>(k));
        }
    }
    return r;
}

Expr conjugate(const Expr& e)
{
    std::map<Atom, Expr, AtomLess> cache;
    return map_atoms(e, true, [&](const Factor& f) -> AtomImage {
        if (const auto* j = std::get_if<JetVar>(&f.atom)) {
            return Factor{JetVar{conjugate(j->function), j->index}, f.exponent};
        }
        if (is_simple(f.atom)) {
            return f;
        }
        auto it = cache.find(f.atom);
        if (it == cache.end()) {
            Expr img;
            if (const auto* ea = std::get_if<ExpAtom>(&f.atom)) {
                img = exp(conjugate(*ea->arg));
            } else {
                img = conjugate(*std::get<PowAtom>(f.atom).base);
            }
            it = cache.emplace(f.atom, std::move(img)).first;
        }
        if (std::holds_alternative<ExpAtom>(f.atom)) {
            return it->second;
        }
        return pow(it->second, f.exponent);
    });
}

Expr substitute(const Expr& e, const Bindings& bindings, int closed_order)
{
    if (bindings.empty()) {
        return e;
    }
    for (const auto& [k, _] : bindings) {
        if (!is_simple(k)) {
            throw SubstitutionError("substitution keys must be variables, jets or parameters");
        }
    }
    if (closed_order >= 0) {
        std::set<FunctionId> bound;
        for (const auto& [k, _] : bindings) {
            if (const auto* j = std::get_if<JetVar>(&k)) {
                bound.insert(j->function);
            }
        }
        for (const auto& j : jet_vars(e)) {
            if (bound.count(j.function) && j.order() <= closed_order && !bindings.count(Atom{j})) {
                throw SubstitutionError("partial substitution: " + to_string(j) + " is not bound");
            }
        }
    }
    std::map<Atom, Expr, AtomLess> compound;
    return map_atoms(e, false, [&](const Factor& f) -> AtomImage {
        if (is_simple(f.atom)) {
            auto it = bindings.find(f.atom);
            if (it == bindings.end()) {
                return f;
            }
            return pow(it->second, f.exponent);
        }
        auto it = compound.find(f.atom);
        if (it == compound.end()) {
            const Expr& inner = std::holds_alternative<ExpAtom>(f.atom) ? *std::get<ExpAtom>(f.atom).arg
                                                                         : *std::get<PowAtom>(f.atom).base;
            it = compound.emplace(f.atom, substitute(inner, bindings)).first;
        }
        if (std::holds_alternative<ExpAtom>(f.atom)) {
            if (it->second == *std::get<ExpAtom>(f.atom).arg) {
                return f;
            }
            return exp(it->second);
        }
        if (it->second == *std::get<PowAtom>(f.atom).base) {
            return f;
        }
        return pow(it->second, f.exponent);
    });
}

bool has_denominators(const Expr& e)
{
    for (const auto& t : e.terms()) {
        for (const auto& f : t.monomial) {
            if (std::holds_alternative<PowAtom>(f.atom) && f.exponent.sign() < 0) {
                return true;
            }
        }
    }
    return false;
}

Expr clear_denominators(const Expr& e)
{
    Expr cur = e;
    for (int iter = 0; iter < 64; ++iter) {
        std::map<Atom, Rational, AtomLess> mins;
        std::map<Atom, std::size_t, AtomLess> seen;
        for (const auto& t : cur.terms()) {
            for (const auto& f : t.monomial) {
                if (!std::holds_alternative<PowAtom>(f.atom)) {
                    continue;
                }
                auto it = mins.find(f.atom);
                if (it == mins.end()) {
                    mins.emplace(f.atom, f.exponent);
                } else if (f.exponent < it->second) {
                    it->second = f.exponent;
                }
                ++seen[f.atom];
            }
        }
        Monomial multiplier;
        for (const auto& [atom, mn] : mins) {
            if (mn.sign() < 0) {
                multiplier.push_back(Factor{atom, -mn});
            }
        }
        if (multiplier.empty()) {
            return cur;
        }
        cur = multiply_by_monomial(cur, Gaussian(1), multiplier);
    }
    throw Error("denominator clearing did not terminate");
}

bool is_zero(const Expr& e)
{
    if (e.is_zero()) {
        return true;
    }
    if (!has_denominators(e)) {
        return false;
    }
    return clear_denominators(e).is_zero();
}

std::set<JetVar> jet_vars(const Expr& e)
{
    std::set<JetVar> r;
    for (const auto& a : simple_atoms(e)) {
        if (const auto* j = std::get_if<JetVar>(&a)) {
            r.insert(*j);
        }
    }
    return r;
}

std::set<Atom, AtomLess> simple_atoms(const Expr& e)
{
    std::set<Atom, AtomLess> r;
    collect_simple(e, r);
    return r;
}

int jet_order(const Expr& e)
{
    int o = -1;
    for (const auto& j : jet_vars(e)) {
        o = std::max(o, j.order());
    }
    return o;
}

bool depends_on(const Expr& e, const Atom& a) { return simple_atoms(e).count(a) > 0; }

} // namespace jetsym
