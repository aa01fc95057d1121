#include <jetsym/catalog.hpp>

#include <stdexcept>

namespace jetsym {

namespace {

using enum BaseVar;

Expr X(BaseVar v) { return Expr::of(v); }
Expr P(Param p) { return Expr::of(p); }
Expr J(FunctionId f, std::initializer_list<BaseVar> vs = {}) { return Expr::of(jet(f, vs)); }
Expr half() { return rational(1, 2); }
Expr I() { return imag_unit(); }

Mat product(const Mat& a, const Mat& b, const IndexSpace& s)
{
    const std::size_t n = s.size();
    Mat r(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Expr acc;
            for (std::size_t k = 0; k < n; ++k) {
                if (!a[i][k].is_zero() && !b[k][j].is_zero()) {
                    acc += Expr(s.signs[k]) * a[i][k] * b[k][j];
                }
            }
            r[i][j] = std::move(acc);
        }
    }
    return r;
}

Expr trace(const Mat& t, const IndexSpace& s)
{
    Expr acc;
    for (std::size_t i = 0; i < s.size(); ++i) {
        acc += Expr(s.signs[i]) * t[i][i];
    }
    return acc;
}

Mat identity_like(const IndexSpace& s)
{
    // Identity for the signed product: diag(signs), so that product(E, t) = t.
    Mat r(s.size(), Vec(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        r[i][i] = Expr(s.signs[i]);
    }
    return r;
}

Vec add(const Vec& a, const Vec& b)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
    }
    return r;
}

Vec scale(const Vec& a, const Expr& c)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] * c;
    }
    return r;
}

Mat scale(const Mat& a, const Expr& c)
{
    Mat r = a;
    for (auto& row : r) {
        for (auto& e : row) {
            e = e * c;
        }
    }
    return r;
}

VectorField phase_chart(VectorField X) { return with_log_chart(X, FunctionId::Phi, FunctionId::phi); }

// c (Phi d_Phi - Phi* d_Phi*).
void add_phase(VectorField& X, const Expr& c)
{
    X.eta[FunctionId::Phi] += c * J(FunctionId::Phi);
    X.eta[FunctionId::Phi_conj] -= c * J(FunctionId::Phi_conj);
}

// c (Phi d_Phi + Phi* d_Phi*).
void add_scale(VectorField& X, const Expr& c)
{
    X.eta[FunctionId::Phi] += c * J(FunctionId::Phi);
    X.eta[FunctionId::Phi_conj] += c * J(FunctionId::Phi_conj);
}

Expr x_square_spatial() { return X(x1) * X(x1) + X(x2) * X(x2); }

Expr phi_laplacian() { return J(FunctionId::phi, {x1, x1}) + J(FunctionId::phi, {x2, x2}); }

Expr grad_square(FunctionId f) { return R_k(gradient(f, natural_space(f)), {}, 1, natural_space(f)); }

std::string digit(int k) { return std::to_string(k); }

} // namespace

IndexSpace greek() { return IndexSpace{{x0, x1, x2, x3}, {-1, 1, 1, 1}}; }

IndexSpace latin() { return IndexSpace{{x1, x2}, {1, 1}}; }

IndexSpace natural_space(FunctionId f)
{
    return (f == FunctionId::u || f == FunctionId::u_conj) ? greek() : latin();
}

Vec gradient(FunctionId f, const IndexSpace& s)
{
    Vec r;
    for (auto v : s.vars) {
        r.push_back(J(f, {v}));
    }
    return r;
}

Mat hessian(FunctionId f, const IndexSpace& s)
{
    Mat r(s.size(), Vec(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            r[i][j] = Expr::of(JetVar{f, make_index({s.vars[i], s.vars[j]})});
        }
    }
    return r;
}

Vec conjugate(const Vec& v)
{
    Vec r;
    for (const auto& e : v) {
        r.push_back(conjugate(e));
    }
    return r;
}

Mat conjugate(const Mat& t)
{
    Mat r;
    for (const auto& row : t) {
        r.push_back(conjugate(row));
    }
    return r;
}

Expr S_k(const Mat& t, int k, const IndexSpace& s) { return S_jk(t, t, k, k, s); }

Expr S_jk(const Mat& t1, const Mat& t2, int j, int k, const IndexSpace& s)
{
    if (k < 1 || j < 0 || j > k) {
        throw std::invalid_argument("S_jk needs 0 <= j <= k and k >= 1");
    }
    if (t1.size() != s.size() || t2.size() != s.size()) {
        throw std::invalid_argument("tensor size does not match the index range");
    }
    Mat acc = identity_like(s);
    for (int i = 0; i < j; ++i) {
        acc = product(acc, t1, s);
    }
    for (int i = j; i < k; ++i) {
        acc = product(acc, t2, s);
    }
    return trace(acc, s);
}

Expr R_k(const Vec& v, const Mat& t, int k, const IndexSpace& s)
{
    if (k < 1) {
        throw std::invalid_argument("R_k needs k >= 1");
    }
    if (v.size() != s.size() || (k > 1 && t.size() != s.size())) {
        throw std::invalid_argument("argument size does not match the index range");
    }
    // w = v^T eta (t eta)^(k-1), then contract with v.
    Vec w(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        w[i] = Expr(s.signs[i]) * v[i];
    }
    for (int step = 1; step < k; ++step) {
        Vec nw(s.size());
        for (std::size_t j = 0; j < s.size(); ++j) {
            Expr acc;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (!w[i].is_zero() && !t[i][j].is_zero()) {
                    acc += w[i] * t[i][j];
                }
            }
            nw[j] = Expr(s.signs[j]) * acc;
        }
        w = std::move(nw);
    }
    Expr r;
    for (std::size_t i = 0; i < s.size(); ++i) {
        r += w[i] * v[i];
    }
    return r;
}

std::vector<VectorField> poincare_algebra()
{
    const IndexSpace g{{x0, x1, x2, x3}, {1, -1, -1, -1}};
    std::vector<VectorField> out;
    for (std::size_t mu = 0; mu < 4; ++mu) {
        VectorField p;
        p.name = "P" + digit(static_cast<int>(mu));
        p.xi[g.vars[mu]] = Expr(g.signs[mu]) * I();
        out.push_back(std::move(p));
    }
    for (std::size_t mu = 0; mu < 4; ++mu) {
        for (std::size_t nu = mu + 1; nu < 4; ++nu) {
            VectorField j;
            j.name = "J" + digit(static_cast<int>(mu)) + digit(static_cast<int>(nu));
            j.xi[g.vars[nu]] += Expr(g.signs[nu]) * I() * X(g.vars[mu]);
            j.xi[g.vars[mu]] -= Expr(g.signs[mu]) * I() * X(g.vars[nu]);
            out.push_back(std::move(j));
        }
    }
    return out;
}

std::vector<VectorField> galilei_algebra()
{
    std::vector<VectorField> out;
    VectorField dt;
    dt.name = "galilei.dtau";
    dt.xi[tau] = Expr(1);
    out.push_back(dt);
    for (auto v : {x1, x2}) {
        VectorField d;
        d.name = "galilei.d" + index_label(v);
        d.xi[v] = Expr(1);
        out.push_back(d);
    }
    VectorField rot;
    rot.name = "galilei.J12";
    rot.xi[x2] = X(x1);
    rot.xi[x1] = -X(x2);
    out.push_back(rot);
    for (auto v : {x1, x2}) {
        VectorField g;
        g.name = "galilei.G" + index_label(v);
        g.xi[v] = X(tau);
        add_phase(g, I() * P(Param::m) * X(v));
        out.push_back(g);
    }
    VectorField ph;
    ph.name = "galilei.J";
    add_phase(ph, Expr(1));
    out.push_back(ph);
    for (auto& f : out) {
        f = phase_chart(f);
    }
    return out;
}

VectorField galilei_boost_massless(int a)
{
    const BaseVar v = a == 1 ? x1 : x2;
    VectorField g;
    g.name = "galilei.G" + digit(a) + ".printed";
    g.xi[v] = X(tau);
    add_phase(g, I() * X(v));
    return phase_chart(g);
}

VectorField dilation()
{
    VectorField d;
    d.name = "D";
    d.xi[tau] = Expr(2) * X(tau);
    d.xi[x1] = X(x1);
    d.xi[x2] = X(x2);
    add_scale(d, Expr(-1));
    return phase_chart(d);
}

VectorField projective_A()
{
    VectorField a;
    a.name = "A";
    a.xi[tau] = X(tau) * X(tau);
    a.xi[x1] = X(tau) * X(x1);
    a.xi[x2] = X(tau) * X(x2);
    add_phase(a, half() * I() * P(Param::m) * x_square_spatial());
    add_scale(a, -X(tau));
    return phase_chart(a);
}

VectorField projective_A1(int n, XSquare x2sq, int weight_sign)
{
    VectorField a;
    a.name = "A1";
    if (x2sq == XSquare::lorentz) {
        a.name += ".lorentz";
    }
    if (weight_sign > 0) {
        a.name += ".printed";
    }
    const Expr d = X(x0) - X(x3);
    a.xi[x0] = half() * d * d;
    a.xi[x3] = -(half() * d * d);
    a.xi[x1] = d * X(x1);
    a.xi[x2] = d * X(x2);
    const Expr xsq = x2sq == XSquare::spatial
                         ? x_square_spatial()
                         : X(x0) * X(x0) - X(x1) * X(x1) - X(x2) * X(x2) - X(x3) * X(x3);
    const Expr phase = half() * I() * P(Param::m) * xsq;
    const Expr weight = Expr(weight_sign) * rational(n - 1, 2) * d;
    a.eta[FunctionId::u] = (phase + weight) * J(FunctionId::u);
    a.eta[FunctionId::u_conj] = (weight - phase) * J(FunctionId::u_conj);
    return a;
}

Expr box(FunctionId f) { return S_k(hessian(f, greek()), 1, greek()); }

Expr condition() { return J(FunctionId::u, {x0}) + J(FunctionId::u, {x3}) + I() * P(Param::m) * J(FunctionId::u); }

Expr wave_equation()
{
    return box(FunctionId::u) - P(Param::lambda) * J(FunctionId::u) * J(FunctionId::u) * J(FunctionId::u_conj);
}

Expr M1(const Settings&)
{
    return Expr(2) * I() * P(Param::m) * J(FunctionId::phi, {tau}) + grad_square(FunctionId::phi);
}

Expr M2()
{
    const auto gphi = gradient(FunctionId::phi, latin());
    Expr mixed;
    for (std::size_t a = 0; a < 2; ++a) {
        mixed += gphi[a] * Expr::of(JetVar{FunctionId::phi, make_index({latin().vars[a], tau})});
    }
    return -(P(Param::m) * P(Param::m) * J(FunctionId::phi, {tau, tau})) + Expr(2) * I() * P(Param::m) * mixed +
           R_k(gphi, hessian(FunctionId::phi, latin()), 2, latin());
}

Expr N1() { return M1() + phi_laplacian(); }

Expr N2(const Settings& s, bool printed)
{
    const Expr inv_n = rational(1, s.n_schrodinger);
    const Expr lap = phi_laplacian();
    return inv_n * lap * N1() + rational(printed ? 1 : -1, 2 * s.n_schrodinger) * lap * lap + M2();
}

Vec theta()
{
    const auto gphi = gradient(FunctionId::phi, latin());
    const auto h = hessian(FunctionId::phi, latin());
    Vec r;
    for (std::size_t a = 0; a < 2; ++a) {
        Expr t = I() * P(Param::m) * Expr::of(JetVar{FunctionId::phi, make_index({latin().vars[a], tau})});
        for (std::size_t b = 0; b < 2; ++b) {
            t += gphi[b] * h[b][a];
        }
        r.push_back(std::move(t));
    }
    return r;
}

Mat rho_tensor(const Settings& s)
{
    Mat h = hessian(FunctionId::phi, latin());
    const Expr lap_n = rational(1, s.n_schrodinger) * phi_laplacian();
    for (std::size_t a = 0; a < 2; ++a) {
        h[a][a] -= lap_n;
    }
    return scale(h, pow(N1(), -1L));
}

Vec rho_vector() { return scale(theta(), pow(N1(), Rational(-3, 2))); }

std::vector<CatalogEntry> poincare_basis()
{
    const IndexSpace g = greek();
    const Mat hu = hessian(FunctionId::u, g);
    const Mat hc = hessian(FunctionId::u_conj, g);
    std::vector<CatalogEntry> out;
    out.push_back({"poincare.u", "poincare", J(FunctionId::u), ""});
    out.push_back({"poincare.u*", "poincare", J(FunctionId::u_conj), ""});
    for (FunctionId r : {FunctionId::u, FunctionId::u_conj}) {
        for (int k = 1; k <= 4; ++k) {
            out.push_back({"poincare.R" + digit(k) + "(" + name(r) + ")", "poincare", R_k(gradient(r, g), hu, k, g), ""});
        }
    }
    auto add_unique = [&out](CatalogEntry e) {
        for (const auto& o : out) {
            if (o.expr == e.expr) {
                return;
            }
        }
        out.push_back(std::move(e));
    };
    for (const auto& [rname, t] : {std::pair{std::string("u"), hu}, std::pair{std::string("u*"), hc}}) {
        for (int k = 1; k <= 4; ++k) {
            for (int j = 0; j <= k; ++j) {
                std::string nm = j == 0 ? "poincare.S" + digit(k) + "(u)"
                                        : "poincare.S" + digit(j) + digit(k) + "(" + rname + ",u)";
                add_unique({nm, "poincare", S_jk(t, hu, j, k, g), ""});
            }
        }
    }
    return out;
}

std::vector<CatalogEntry> galilei_basis()
{
    const IndexSpace l = latin();
    const Mat h = hessian(FunctionId::phi, l);
    const Mat hc = conjugate(h);
    const Vec th = theta();
    const Vec sum = add(gradient(FunctionId::phi, l), gradient(FunctionId::phi_conj, l));
    std::vector<CatalogEntry> out;
    out.push_back({"galilei.phi+phi*", "galilei", J(FunctionId::phi) + J(FunctionId::phi_conj), ""});
    out.push_back({"galilei.M1", "galilei", M1(), ""});
    out.push_back({"galilei.M1*", "galilei", conjugate(M1()), ""});
    out.push_back({"galilei.M2", "galilei", M2(), ""});
    out.push_back({"galilei.M2*", "galilei", conjugate(M2()), ""});
    for (int k = 1; k <= 2; ++k) {
        for (int j = 0; j <= k; ++j) {
            out.push_back({"galilei.S" + digit(j) + digit(k), "galilei", S_jk(h, hc, j, k, l), ""});
        }
    }
    const std::pair<std::string, Vec> vectors[] = {{"R1_", th}, {"R2_", conjugate(th)}, {"R3_", sum}};
    for (const auto& [nm, v] : vectors) {
        for (int j = 1; j <= 2; ++j) {
            out.push_back({"galilei." + nm + digit(j), "galilei", R_k(v, h, j, l), ""});
        }
    }
    return out;
}

std::vector<CatalogEntry> extended_basis(const Settings& s)
{
    const IndexSpace l = latin();
    const Expr n1 = N1();
    const Expr n1c = conjugate(n1);
    const Expr n1_inv = pow(n1, -1L);
    const Expr w = J(FunctionId::phi) + J(FunctionId::phi_conj);
    const Mat rho = rho_tensor(s);
    const Mat rhoc = conjugate(rho);
    const Vec rv = rho_vector();
    const Vec sum = add(gradient(FunctionId::phi, l), gradient(FunctionId::phi_conj, l));
    std::vector<CatalogEntry> out;
    out.push_back({"extended.N1e", "extended", n1 * exp(-w), "exponent -(phi+phi*)"});
    out.push_back({"extended.N1/N1*", "extended", n1 * pow(n1c, -1L), ""});
    out.push_back({"extended.N2/N1^2", "extended", N2(s) * pow(n1, -2L), ""});
    out.push_back({"extended.N2*/N1*^2", "extended", conjugate(N2(s)) * pow(n1c, -2L), ""});
    // rho is traceless, so the k = 1 traces vanish and are left out.
    for (int j = 0; j <= 2; ++j) {
        out.push_back({"extended.S" + digit(j) + "2", "extended", S_jk(rho, rhoc, j, 2, l), ""});
    }
    for (int j = 1; j <= 2; ++j) {
        out.push_back({"extended.Rrho_" + digit(j), "extended", R_k(rv, rho, j, l), ""});
    }
    for (int j = 1; j <= 2; ++j) {
        out.push_back({"extended.Rrho*_" + digit(j), "extended", R_k(conjugate(rv), rho, j, l), ""});
    }
    for (int j = 1; j <= 2; ++j) {
        out.push_back({"extended.Rsum_" + digit(j), "extended", R_k(sum, rho, j, l) * n1_inv, ""});
    }
    out.push_back({"extended.trace", "extended", (phi_laplacian() + conjugate(phi_laplacian())) * n1_inv, ""});
    return out;
}

std::vector<ConditionalInvariant> conditional_invariants(const Settings& s)
{
    const IndexSpace g = greek();
    const Expr u = J(FunctionId::u);
    const Expr uc = J(FunctionId::u_conj);
    const Expr bu = box(FunctionId::u);
    const Expr buc = box(FunctionId::u_conj);
    const Vec gu = gradient(FunctionId::u, g);
    const Vec gc = gradient(FunctionId::u_conj, g);
    const Mat hu = hessian(FunctionId::u, g);
    const Expr uu = R_k(gu, hu, 1, g);
    const Expr uuu = R_k(gu, hu, 2, g);
    Expr ucu;
    for (std::size_t i = 0; i < 4; ++i) {
        ucu += Expr(g.signs[i]) * gu[i] * gc[i];
    }
    const Expr n1 = N1();
    const Expr n1c = conjugate(n1);
    const Expr w = J(FunctionId::phi) + J(FunctionId::phi_conj);
    const Expr inv_n = rational(1, s.n_schrodinger);
    const Vec sum = add(gradient(FunctionId::phi, latin()), gradient(FunctionId::phi_conj, latin()));
    const Expr r1_sum = R_k(sum, rho_tensor(s), 1, latin());

    std::vector<ConditionalInvariant> out;
    out.push_back({"cond.I1", bu * pow(u, -2L) * pow(uc, -1L), n1 * exp(-w), true, true,
                   "uses exponent -(phi+phi*); the printed square is cond.I1.printed"});
    out.push_back({"cond.I1.printed", bu * pow(u, -3L) * pow(uc, -2L), n1 * exp(Expr(-2) * w), false, true,
                   "printed form; forms agree but are not invariant"});
    out.push_back({"cond.I2", uc * bu * pow(u * buc, -1L), n1 * pow(n1c, -1L), true, true, ""});
    const Expr i3_den = pow(u * u * bu * bu, -1L);
    const Expr i3_num = u * uuu + rational(1, 2 * s.n_schrodinger) * u * u * bu * bu -
                        (Expr(1) + rational(1, 2 * s.n_schrodinger)) * uu * uu;
    out.push_back({"cond.I3", i3_num * i3_den, N2(s) * pow(n1, -2L), true, true,
                   "N2 with -phi_aa^2/(2n); the printed sign is cond.I3.printed"});
    const Expr i3_printed = u * uuu + rational(3, 2 * s.n_schrodinger) * u * u * bu * bu +
                            (rational(1, 2 * s.n_schrodinger) - Expr(1)) * uu * uu - Expr(2) * inv_n * u * bu * uu;
    out.push_back({"cond.I3.printed", i3_printed * i3_den, N2(s, true) * pow(n1, -2L), false, true,
                   "printed form; forms agree but are not invariant"});
    Vec wv(4);
    for (std::size_t i = 0; i < 4; ++i) {
        wv[i] = uc * gu[i] + u * gc[i];
    }
    const Expr ww = R_k(wv, {}, 1, g);
    out.push_back({"cond.I4", u * ww * pow(u * uc, -2L) * pow(bu, -1L), r1_sum * pow(n1, -1L), true, true,
                   "u-form derived for R_1(phi_a+phi*_a, rho_ab)/N1"});
    out.push_back({"cond.I4.printed", (uc * bu + u * buc - Expr(2) * ucu) * pow(uc * bu, -1L), r1_sum * pow(n1, -1L),
                   true, false, "printed u-form; invariant, but its phi-form is (N1+N1*+M1+M1*-(phi_a+phi*_a)^2)/N1"});
    return out;
}

std::vector<CatalogEntry> all_entries(const Settings& s)
{
    std::vector<CatalogEntry> out;
    auto append = [&out](std::vector<CatalogEntry> v) {
        for (auto& e : v) {
            out.push_back(std::move(e));
        }
    };
    append(poincare_basis());
    append(galilei_basis());
    append(extended_basis(s));
    const Expr w = J(FunctionId::phi) + J(FunctionId::phi_conj);
    out.push_back({"extended.N1e.printed", "control", N1() * exp(Expr(-2) * w), "printed exponent -2(phi+phi*)"});
    out.push_back({"extended.N2/N1^2.printed", "control", N2(s, true) * pow(N1(), -2L), "printed +phi_aa^2/(2n)"});
    for (const auto& ci : conditional_invariants(s)) {
        out.push_back({ci.name, "conditional", ci.u_form, ci.note});
        out.push_back({ci.name + ".phi", "conditional", ci.phi_form, ""});
    }
    out.push_back({"wave.box", "wave", box(FunctionId::u), ""});
    out.push_back({"wave.condition", "wave", condition(), ""});
    out.push_back({"wave.equation", "wave", wave_equation(), ""});
    out.push_back({"reduced.M1", "reduced", M1(), ""});
    out.push_back({"reduced.M2", "reduced", M2(), ""});
    out.push_back({"reduced.N1", "reduced", N1(), ""});
    out.push_back({"reduced.N2", "reduced", N2(s), ""});
    return out;
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, const std::string& name)
{
    for (const auto& e : entries) {
        if (e.name == name) {
            return &e;
        }
    }
    return nullptr;
}

std::vector<VectorField> all_operators(const Settings& s)
{
    std::vector<VectorField> out = poincare_algebra();
    for (auto& f : galilei_algebra()) {
        out.push_back(std::move(f));
    }
    out.push_back(galilei_boost_massless(1));
    out.push_back(galilei_boost_massless(2));
    out.push_back(dilation());
    out.push_back(projective_A());
    out.push_back(projective_A1(s.n_wave));
    out.push_back(projective_A1(s.n_wave, XSquare::spatial, +1));
    out.push_back(projective_A1(s.n_wave, XSquare::lorentz));
    return out;
}

std::optional<VectorField> find_operator(const std::string& name, const Settings& s)
{
    for (auto& f : all_operators(s)) {
        if (f.name == name) {
            return f;
        }
    }
    return std::nullopt;
}

} // namespace jetsym
