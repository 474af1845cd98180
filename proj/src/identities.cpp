#include "homcalc/identities.hpp"

#include <functional>
#include <stdexcept>

namespace homcalc {

namespace {

enum class SlotKind { function, vector, form };

struct Slot {
    SlotKind kind;
    std::vector<unsigned> grades;
};

struct Sample {
    std::vector<Poly> f;
    std::vector<MultiVector> v;
    std::vector<MultiForm> w;
    std::vector<unsigned> grades;

    std::string to_string() const
    {
        std::string out;
        auto add = [&](const std::string& name, const std::string& value) {
            out += (out.empty() ? "" : ", ") + name + "=" + value;
        };
        for (std::size_t i = 0; i < v.size(); ++i) add("X" + std::to_string(i + 1), v[i].to_string());
        for (std::size_t i = 0; i < w.size(); ++i) add("Xi" + std::to_string(i + 1), w[i].to_string());
        for (std::size_t i = 0; i < f.size(); ++i) add("f" + std::to_string(i + 1), f[i].to_string());
        return out;
    }
};

using Predicate = std::function<bool(const std::vector<unsigned>&)>;
using Body = std::function<void(const HomLieAlgebroid&, const Sample&, AxiomCheck&)>;

struct Identity {
    IdentityInfo info;
    std::vector<Slot> slots;
    Predicate valid;
    Body body;
};

bool odd(int e) { return e % 2 != 0; }

template <class T>
T sign(const T& x, bool negate)
{
    return negate ? -x : x;
}

std::vector<unsigned> upto(unsigned top, unsigned from = 0)
{
    std::vector<unsigned> out;
    for (unsigned g = from; g <= top; ++g) out.push_back(g);
    return out;
}

Slot fn() { return {SlotKind::function, {0}}; }
Slot vec(std::vector<unsigned> grades) { return {SlotKind::vector, std::move(grades)}; }
Slot form(std::vector<unsigned> grades) { return {SlotKind::form, std::move(grades)}; }

// Shorthands over one algebroid.
struct Calc {
    const HomLieAlgebroid& a;

    MultiVector phi(const MultiVector& x) const { return a.bundle().phi().apply(x); }
    MultiVector phi_inv(const MultiVector& x) const { return a.bundle().phi_inverse().apply(x); }
    MultiForm dag(const MultiForm& x) const { return a.bundle().dagger().apply(x); }
    MultiForm dag_inv(const MultiForm& x) const { return a.bundle().dagger_inverse().apply(x); }
    Poly sigma(const Poly& f) const { return a.twist().apply(f); }
    Poly sigma_inv(const Poly& f) const { return a.twist().inverse().apply(f); }
    MultiForm d(const MultiForm& x) const { return differential(a, x); }
    MultiForm d(const Poly& f) const { return differential(a, f); }
    MultiVector br(const MultiVector& x, const MultiVector& y) const { return schouten(a, x, y); }
    MultiForm i(const MultiVector& x, const MultiForm& xi) const { return interior(a, x, xi); }
    MultiVector i(const MultiForm& xi, const MultiVector& x) const { return interior(a, xi, x); }
    MultiForm L(const MultiVector& x, const MultiForm& xi) const { return lie_derivative(a, x, xi); }
    MultiVector L(const MultiVector& x, const MultiVector& y) const { return lie_derivative(a, x, y); }
    MultiVector scalar(const Poly& f) const { return MultiVector::scalar(a.rank(), f); }
    MultiForm scalar_form(const Poly& f) const { return MultiForm::scalar(a.rank(), f); }
    Poly eval(const MultiVector& pi, const MultiForm& xi, const MultiForm& eta) const { return pair(wedge(xi, eta), pi); }
};

std::vector<Identity> build_catalog()
{
    std::vector<Identity> c;
    const unsigned any = 3;

    c.push_back({{"d-squared", "d^2 = 0"}, {form(upto(any))}, nullptr, [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     chk.equal(k.d(k.d(s.w[0])), MultiForm(a.variables(), a.rank(), s.w[0].grade() + 2),
                               [&] { return s.to_string(); });
                 }});

    c.push_back({{"d-twist", "d o phi^dagger = phi^dagger o d"}, {form(upto(any))}, nullptr,
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     chk.equal(k.d(k.dag(s.w[0])), k.dag(k.d(s.w[0])), [&] { return s.to_string(); });
                 }});

    c.push_back({{"d-leibniz", "d(Xi ^ Theta) = dXi ^ phi^dagger Theta + (-1)^k phi^dagger Xi ^ dTheta"},
                 {form(upto(2)), form(upto(2))},
                 nullptr,
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const auto& xi = s.w[0];
                     const auto& th = s.w[1];
                     MultiForm rhs = wedge(k.d(xi), k.dag(th)) + sign(wedge(k.dag(xi), k.d(th)), odd(xi.grade()));
                     chk.equal(k.d(wedge(xi, th)), rhs, [&] { return s.to_string(); });
                 }});

    c.push_back({{"interior-composition",
                  "i_{phi X} o i_Y = i_{phi(Y ^ X)} o phi^dagger = (-1)^{kl} i_{phi Y} o i_X"},
                 {vec(upto(2, 1)), vec(upto(2, 1)), form(upto(any))},
                 [](const std::vector<unsigned>& g) { return g[2] >= g[0] + g[1]; },
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const auto& x = s.v[0];
                     const auto& y = s.v[1];
                     const auto& xi = s.w[0];
                     MultiForm lhs = k.i(k.phi(x), k.i(y, xi));
                     if (!chk.equal(lhs, k.i(k.phi(wedge(y, x)), k.dag(xi)), [&] { return s.to_string(); })) return;
                     chk.equal(lhs, sign(k.i(k.phi(y), k.i(x, xi)), odd(x.grade() * y.grade())),
                               [&] { return s.to_string(); });
                 }});

    c.push_back({{"interior-twist", "phi^dagger(i_X Xi) = i_{phi X} phi^dagger Xi"},
                 {vec(upto(any)), form(upto(any))},
                 [](const std::vector<unsigned>& g) { return g[1] >= g[0]; },
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     chk.equal(k.dag(k.i(s.v[0], s.w[0])), k.i(k.phi(s.v[0]), k.dag(s.w[0])),
                               [&] { return s.to_string(); });
                 }});

    c.push_back({{"interior-twist-inverse", "(phi^dagger)^-1(i_X Xi) = i_{phi^-1 X} (phi^dagger)^-1 Xi"},
                 {vec(upto(any)), form(upto(any))},
                 [](const std::vector<unsigned>& g) { return g[1] >= g[0]; },
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     chk.equal(k.dag_inv(k.i(s.v[0], s.w[0])), k.i(k.phi_inv(s.v[0]), k.dag_inv(s.w[0])),
                               [&] { return s.to_string(); });
                 }});

    c.push_back({{"interior-contraction", "i_x xi = sigma <xi, x> for a section and a 1-form"},
                 {vec({1}), form({1})},
                 nullptr,
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     chk.equal(k.i(s.v[0], s.w[0]).to_poly(), k.sigma(pair(s.w[0], s.v[0])),
                               [&] { return s.to_string(); });
                 }});

    c.push_back({{"bracket-leibniz",
                  "[x, fy] = sigma(f)[x,y] + a(phi x)(f) phi y and [fx, y] = sigma(f)[x,y] - a(phi y)(f) phi x"},
                 {vec({1}), vec({1}), fn()},
                 nullptr,
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const auto& x = s.v[0];
                     const auto& y = s.v[1];
                     const Poly& f = s.f[0];
                     const MultiVector xy = bracket(a, x, y).scaled(k.sigma(f));
                     MultiVector rhs = xy + k.phi(y).scaled(anchor_of_twisted(a, x).apply(f));
                     if (!chk.equal(bracket(a, x, y.scaled(f)), rhs, [&] { return s.to_string(); })) return;
                     rhs = xy - k.phi(x).scaled(anchor_of_twisted(a, y).apply(f));
                     chk.equal(bracket(a, x.scaled(f), y), rhs, [&] { return s.to_string(); });
                 }});

    c.push_back({{"anchor-morphism",
                  "anchor is a morphism to the tangent Hom-Lie algebroid: a(phi x) = Ad(a x), a[x,y] = [a x, a y]"},
                 {vec({1}), vec({1})},
                 nullptr,
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const auto& x = s.v[0];
                     const auto& y = s.v[1];
                     if (!chk.equal(anchor_of(a, k.phi(x)), anchor_of(a, x).ad(), [&] { return s.to_string(); }))
                         return;
                     chk.equal(anchor_of(a, bracket(a, x, y)), sder_bracket(anchor_of(a, x), anchor_of(a, y)),
                               [&] { return s.to_string(); });
                 }});

    c.push_back({{"schouten-skew", "[[X,Y]] = -(-1)^{(k-1)(l-1)} [[Y,X]]"},
                 {vec(upto(any)), vec(upto(any))},
                 [](const std::vector<unsigned>& g) { return g[0] + g[1] >= 1; },
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const int p = static_cast<int>(s.v[0].grade()) - 1;
                     const int q = static_cast<int>(s.v[1].grade()) - 1;
                     chk.equal(k.br(s.v[0], s.v[1]), sign(k.br(s.v[1], s.v[0]), !odd(p * q)),
                               [&] { return s.to_string(); });
                 }});

    c.push_back({{"schouten-leibniz", "[[X, Y ^ Z]] = [[X,Y]] ^ phi Z + (-1)^{(k-1)l} phi Y ^ [[X,Z]]"},
                 {vec(upto(2)), vec(upto(2)), vec(upto(2))},
                 [](const std::vector<unsigned>& g) { return g[0] >= 1 || (g[1] >= 1 && g[2] >= 1); },
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const auto& x = s.v[0];
                     const auto& y = s.v[1];
                     const auto& z = s.v[2];
                     const int kk = static_cast<int>(x.grade()) - 1;
                     MultiVector rhs = wedge(k.br(x, y), k.phi(z)) + sign(wedge(k.phi(y), k.br(x, z)), odd(kk * static_cast<int>(y.grade())));
                     chk.equal(k.br(x, wedge(y, z)), rhs, [&] { return s.to_string(); });
                 }});

    c.push_back({{"lie-multivector-leibniz", "L_x(X ^ Y) = L_x X ^ phi Y + phi X ^ L_x Y"},
                 {vec({1}), vec(upto(2)), vec(upto(2))},
                 nullptr,
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const auto& x = s.v[0];
                     const auto& y = s.v[1];
                     const auto& z = s.v[2];
                     chk.equal(k.L(x, wedge(y, z)), wedge(k.L(x, y), k.phi(z)) + wedge(k.phi(y), k.L(x, z)),
                               [&] { return s.to_string(); });
                 }});

    c.push_back({{"lie-multivector-bracket", "L_{[x,y]} o phi = L_{phi x} L_y - L_{phi y} L_x"},
                 {vec({1}), vec({1}), vec(upto(2))},
                 nullptr,
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const auto& x = s.v[0];
                     const auto& y = s.v[1];
                     const auto& z = s.v[2];
                     chk.equal(k.L(bracket(a, x, y), k.phi(z)), k.L(k.phi(x), k.L(y, z)) - k.L(k.phi(y), k.L(x, z)),
                               [&] { return s.to_string(); });
                 }});

    c.push_back({{"lie-multivector-function", "L_x(fX) = sigma(f) L_x X + a(phi x)(f) phi X"},
                 {vec({1}), vec(upto(2)), fn()},
                 nullptr,
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const auto& x = s.v[0];
                     const auto& y = s.v[1];
                     const Poly& f = s.f[0];
                     MultiVector rhs = k.L(x, y).scaled(k.sigma(f)) + k.phi(y).scaled(anchor_of_twisted(a, x).apply(f));
                     chk.equal(k.L(x, y.scaled(f)), rhs, [&] { return s.to_string(); });
                 }});

    c.push_back({{"lie-multivector-function-section",
                  "L_{fx} X = sigma(f) L_x X - phi x ^ i_{(phi^dagger)^-1 df} X"},
                 {vec({1}), vec(upto(any, 1)), fn()},
                 nullptr,
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const auto& x = s.v[0];
                     const auto& y = s.v[1];
                     const Poly& f = s.f[0];
                     MultiVector rhs = k.L(x, y).scaled(k.sigma(f)) - wedge(k.phi(x), k.i(k.dag_inv(k.d(f)), y));
                     chk.equal(k.L(x.scaled(f), y), rhs, [&] { return s.to_string(); });
                 }});

    c.push_back({{"interior-leibniz", "i_x(Xi ^ Theta) = i_x Xi ^ phi^dagger Theta + (-1)^m phi^dagger Xi ^ i_x Theta"},
                 {vec({1}), form(upto(2, 1)), form(upto(2, 1))},
                 nullptr,
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const auto& x = s.v[0];
                     const auto& xi = s.w[0];
                     const auto& th = s.w[1];
                     MultiForm rhs = wedge(k.i(x, xi), k.dag(th)) + sign(wedge(k.dag(xi), k.i(x, th)), odd(xi.grade()));
                     chk.equal(k.i(x, wedge(xi, th)), rhs, [&] { return s.to_string(); });
                 }});

    c.push_back({{"lie-form-leibniz", "L_x(Xi ^ Theta) = L_x Xi ^ phi^dagger Theta + phi^dagger Xi ^ L_x Theta"},
                 {vec({1}), form(upto(2)), form(upto(2))},
                 nullptr,
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const auto& x = s.v[0];
                     const auto& xi = s.w[0];
                     const auto& th = s.w[1];
                     chk.equal(k.L(x, wedge(xi, th)), wedge(k.L(x, xi), k.dag(th)) + wedge(k.dag(xi), k.L(x, th)),
                               [&] { return s.to_string(); });
                 }});

    c.push_back({{"lie-form-twist", "phi^dagger(L_X Xi) = L_{phi X} phi^dagger Xi"},
                 {vec(upto(2)), form(upto(any))},
                 [](const std::vector<unsigned>& g) { return g[1] + 1 >= g[0]; },
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     chk.equal(k.dag(k.L(s.v[0], s.w[0])), k.L(k.phi(s.v[0]), k.dag(s.w[0])),
                               [&] { return s.to_string(); });
                 }});

    c.push_back({{"lie-form-bracket",
                  "L_{[[X,Y]]} o phi^dagger = (-1)^{(k-1)(l-1)} (L_{phi X} L_Y - (-1)^{(k-1)(l-1)} L_{phi Y} L_X)"},
                 {vec(upto(2)), vec(upto(2)), form(upto(any))},
                 [](const std::vector<unsigned>& g) {
                     const unsigned k = g[0], l = g[1], m = g[2];
                     return k + l >= 1 && m + 1 >= l && m + 2 >= l + k && m + 1 >= k && m + 2 >= k + l;
                 },
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const auto& x = s.v[0];
                     const auto& y = s.v[1];
                     const auto& xi = s.w[0];
                     const int e = (static_cast<int>(x.grade()) - 1) * (static_cast<int>(y.grade()) - 1);
                     MultiForm rhs = k.L(k.phi(x), k.L(y, xi)) - sign(k.L(k.phi(y), k.L(x, xi)), odd(e));
                     chk.equal(k.L(k.br(x, y), k.dag(xi)), sign(rhs, odd(e)), [&] { return s.to_string(); });
                 }});

    c.push_back({{"lie-form-twist-inverse", "(phi^dagger)^-1 o L_X = L_{phi^-1 X} o (phi^dagger)^-1"},
                 {vec(upto(2)), form(upto(any))},
                 [](const std::vector<unsigned>& g) { return g[1] + 1 >= g[0]; },
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     chk.equal(k.dag_inv(k.L(s.v[0], s.w[0])), k.L(k.phi_inv(s.v[0]), k.dag_inv(s.w[0])),
                               [&] { return s.to_string(); });
                 }});

    c.push_back({{"lie-form-differential", "d o L_X = -(-1)^k L_{phi X} o d"},
                 {vec(upto(2)), form(upto(any))},
                 [](const std::vector<unsigned>& g) { return g[1] + 1 >= g[0]; },
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const auto& x = s.v[0];
                     chk.equal(k.d(k.L(x, s.w[0])), sign(k.L(k.phi(x), k.d(s.w[0])), !odd(x.grade())),
                               [&] { return s.to_string(); });
                 }});

    c.push_back({{"interior-schouten",
                  "i_{[[X,Y]]} o phi^dagger = (-1)^{(k-1)(l-1)} (L_{phi X} o i_Y - (-1)^{(k-1)l} i_{phi Y} o L_X)"},
                 {vec(upto(2)), vec(upto(2)), form(upto(any))},
                 [](const std::vector<unsigned>& g) {
                     const unsigned k = g[0], l = g[1], m = g[2];
                     return k + l >= 1 && m >= l && m + 1 >= k + l;
                 },
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const auto& x = s.v[0];
                     const auto& y = s.v[1];
                     const auto& xi = s.w[0];
                     const int kk = static_cast<int>(x.grade()) - 1;
                     const int ll = static_cast<int>(y.grade());
                     MultiForm rhs = k.L(k.phi(x), k.i(y, xi)) - sign(k.i(k.phi(y), k.L(x, xi)), odd(kk * ll));
                     chk.equal(k.i(k.br(x, y), k.dag(xi)), sign(rhs, odd(kk * (ll - 1))), [&] { return s.to_string(); });
                 }});

    c.push_back({{"lie-form-function-section", "L_{fX} Xi = sigma(f) L_X Xi - (-1)^k df ^ i_X Xi"},
                 {vec(upto(2)), form(upto(any)), fn()},
                 [](const std::vector<unsigned>& g) { return g[1] >= g[0]; },
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const auto& x = s.v[0];
                     const auto& xi = s.w[0];
                     const Poly& f = s.f[0];
                     MultiForm rhs = k.L(x, xi).scaled(k.sigma(f)) - sign(wedge(k.d(f), k.i(x, xi)), odd(x.grade()));
                     chk.equal(k.L(x.scaled(f), xi), rhs, [&] { return s.to_string(); });
                 }});

    c.push_back({{"lie-form-function", "L_x(f Xi) = sigma(f) L_x Xi + a(phi x)(f) phi^dagger Xi"},
                 {vec({1}), form(upto(any)), fn()},
                 nullptr,
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const auto& x = s.v[0];
                     const auto& xi = s.w[0];
                     const Poly& f = s.f[0];
                     MultiForm rhs = k.L(x, xi).scaled(k.sigma(f)) + k.dag(xi).scaled(anchor_of_twisted(a, x).apply(f));
                     chk.equal(k.L(x, xi.scaled(f)), rhs, [&] { return s.to_string(); });
                 }});

    c.push_back({{"lie-form-pairing", "<L_x Xi, Y> = a(phi x)<Xi, phi^-1 Y> - <phi^dagger Xi, L_x phi^-1 Y>"},
                 {vec({1}), form(upto(any)), vec(upto(any))},
                 [](const std::vector<unsigned>& g) { return g[1] == g[2]; },
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const auto& x = s.v[0];
                     const auto& xi = s.w[0];
                     const auto& y = s.v[1];
                     Poly rhs = anchor_of_twisted(a, x).apply(pair(xi, k.phi_inv(y))) - pair(k.dag(xi), k.L(x, k.phi_inv(y)));
                     chk.equal(pair(k.L(x, xi), y), rhs, [&] { return s.to_string(); });
                 }});

    c.push_back({{"poisson-jacobiator-formula",
                  "i_{[[pi,pi]]}(df ^ dg ^ dh) = -2 (sigma^2 pi(d sigma^-1 pi(d sigma^-1 f, d sigma^-1 g), d sigma^-1 h) + c.p.)"},
                 {vec({2}), fn(), fn(), fn()},
                 nullptr,
                 [](const HomLieAlgebroid& a, const Sample& s, AxiomCheck& chk) {
                     Calc k{a};
                     const auto& pi = s.v[0];
                     const Poly& f = s.f[0];
                     const Poly& g = s.f[1];
                     const Poly& h = s.f[2];
                     Poly lhs = k.i(k.br(pi, pi), wedge(wedge(k.d(f), k.d(g)), k.d(h))).to_poly();
                     auto term = [&](const Poly& u, const Poly& v, const Poly& w) {
                         Poly inner = k.eval(pi, k.d(k.sigma_inv(u)), k.d(k.sigma_inv(v)));
                         return k.eval(pi, k.d(k.sigma_inv(inner)), k.d(k.sigma_inv(w)));
                     };
                     Poly sum = term(f, g, h) + term(g, h, f) + term(h, f, g);
                     Poly rhs = k.sigma(k.sigma(sum)) * Rational(-2);
                     chk.equal(lhs, rhs, [&] { return s.to_string(); });
                 }});

    c.push_back({{"dgca-roundtrip", "anchor and bracket recovered from d: a(x)(f) = <df, x> and the bracket formula"},
                 {},
                 nullptr,
                 [](const HomLieAlgebroid& a, const Sample&, AxiomCheck& chk) {
                     HomLieAlgebroid rebuilt = reconstruct_from_differential(
                         a.bundle(), [&](const MultiForm& xi) { return differential(a, xi); }, SampleConfig{1});
                     chk.holds(rebuilt == a, [] { return std::string("structure functions"); },
                               [&] { return rebuilt.to_string(); }, [&] { return a.to_string(); });
                 }});

    return c;
}

const std::vector<Identity>& catalog()
{
    static const std::vector<Identity> c = build_catalog();
    return c;
}

struct Choice {
    unsigned grade;
    IndexSet set;
};

void run(const HomLieAlgebroid& alg, const Identity& id, const SampleConfig& config, AxiomCheck& chk)
{
    const unsigned n = alg.rank();
    const Variables& vars = alg.variables();
    const std::size_t slots = id.slots.size();
    std::vector<std::vector<Choice>> options(slots);
    for (std::size_t s = 0; s < slots; ++s) {
        if (id.slots[s].kind == SlotKind::function) {
            options[s].push_back({0, 0});
            continue;
        }
        for (unsigned g : id.slots[s].grades)
            for (IndexSet set : index_sets(n, g)) options[s].push_back({g, set});
    }
    std::vector<Choice> current(slots);
    std::function<bool(std::size_t)> choose = [&](std::size_t s) -> bool {
        if (s == slots) {
            std::vector<unsigned> grades;
            for (const auto& c : current) grades.push_back(c.grade);
            if (id.valid && !id.valid(grades)) return true;
            return for_each_monomial_tuple(vars->size(), slots, config.max_degree, [&](const std::vector<Monomial>& m) {
                Sample sample;
                sample.grades = grades;
                for (std::size_t t = 0; t < slots; ++t) {
                    Poly coeff = Poly::monomial(vars, m[t]);
                    switch (id.slots[t].kind) {
                    case SlotKind::function: sample.f.push_back(coeff); break;
                    case SlotKind::vector: sample.v.push_back(MultiVector::basis(vars, n, current[t].set, coeff)); break;
                    case SlotKind::form: sample.w.push_back(MultiForm::basis(vars, n, current[t].set, coeff)); break;
                    }
                }
                id.body(alg, sample, chk);
                return !chk.failed();
            });
        }
        for (const auto& c : options[s]) {
            current[s] = c;
            if (!choose(s + 1)) return false;
        }
        return true;
    };
    if (slots == 0) {
        id.body(alg, Sample{}, chk);
        return;
    }
    choose(0);
}

} // namespace

const std::vector<IdentityInfo>& identity_catalog()
{
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> out;
        for (const auto& id : catalog()) out.push_back(id.info);
        return out;
    }();
    return infos;
}

AxiomResult verify_identity(const HomLieAlgebroid& alg, const std::string& id, const SampleConfig& config)
{
    for (const auto& entry : catalog()) {
        if (entry.info.id != id) continue;
        AxiomCheck chk(entry.info.id, entry.info.anchor);
        try {
            run(alg, entry, config, chk);
        } catch (const Error& e) {
            chk.fail("evaluation", e.what(), "");
        }
        return chk.result();
    }
    throw std::invalid_argument("unknown identity '" + id + "'");
}

VerificationReport verify_identities(const HomLieAlgebroid& alg, const SampleConfig& config)
{
    VerificationReport report;
    report.structure = "calculus identities on a Hom-Lie algebroid of rank " + std::to_string(alg.rank());
    report.sample_degree = config.max_degree;
    for (const auto& entry : catalog()) report.axioms.push_back(verify_identity(alg, entry.info.id, config));
    return report;
}

} // namespace homcalc
