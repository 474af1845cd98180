#include "homcalc/courant.hpp"

#include <bit>
#include <sstream>

namespace homcalc {

namespace {

unsigned index_of(IndexSet s) { return static_cast<unsigned>(std::countr_zero(s)); }

IndexSet bit(unsigned i) { return IndexSet{1} << i; }

void require_section(const HomCourantAlgebroid& c, const MultiVector& e, const char* what)
{
    if (e.rank() != c.rank()) throw RankMismatch(std::string(what) + " has the wrong rank");
    if (e.grade() != 1) throw GradeError(std::string(what) + " must be a section, got grade " + std::to_string(e.grade()));
}

std::string assign(std::initializer_list<std::pair<const char*, std::string>> parts)
{
    std::string out;
    for (const auto& [name, value] : parts) out += (out.empty() ? "" : ", ") + std::string(name) + "=" + value;
    return out;
}

} // namespace

HomCourantAlgebroid::HomCourantAlgebroid(HomBundle bundle, PolyMatrix pairing, std::vector<Poly> circ,
                                         std::vector<SigmaDerivation> anchor)
    : bundle_(std::move(bundle)), pairing_(std::move(pairing)), circ_(std::move(circ)), anchor_(std::move(anchor))
{
    const std::size_t n = rank();
    if (pairing_.rows() != n || pairing_.cols() != n) throw RankMismatch("pairing matrix has the wrong size");
    if (circ_.size() != n * n * n) throw std::invalid_argument("operation table has the wrong size");
    if (anchor_.size() != n) throw std::invalid_argument("anchor needs one derivation per basis section");
    if (!same_variables(pairing_.variables(), variables())) throw VariableMismatch("pairing over a different ring");
    for (const auto& f : circ_)
        if (!same_variables(f.variables(), variables())) throw VariableMismatch("operation table over a different ring");
    for (const auto& a : anchor_)
        if (!(a.sigma() == twist())) throw VariableMismatch("anchor derivation uses a different automorphism");
    if (!(pairing_ == pairing_.transpose())) throw PreconditionError("pairing must be symmetric");

    auto cache = std::make_shared<Cache>();
    cache->pairing_inverse = pairing_.inverse();
    const PolyMatrix& p = bundle_.phi().matrix();
    for (unsigned i = 0; i < n; ++i) {
        cache->phi_basis.push_back(bundle_.phi().apply(MultiVector::basis(variables(), n, bit(i))));
        SigmaDerivation a = SigmaDerivation::zero(twist());
        for (unsigned k = 0; k < n; ++k)
            if (!p(k, i).is_zero()) a += anchor_[k].scaled(p(k, i));
        cache->anchor_phi.push_back(std::move(a));
    }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            MultiVector out(variables(), n, 1);
            for (unsigned k = 0; k < n; ++k) out.add(bit(k), this->circ(i, j, k));
            cache->basis_circ.push_back(std::move(out));
        }
    cache_ = cache;
}

MultiVector HomCourantAlgebroid::section(unsigned i, const Poly& f) const
{
    return MultiVector::basis(variables(), rank(), bit(i)).scaled(f);
}

std::string HomCourantAlgebroid::to_string() const
{
    std::ostringstream out;
    const unsigned n = rank();
    out << "rank " << n << " over Q[";
    for (std::size_t v = 0; v < variables()->size(); ++v) out << (v ? "," : "") << variables()->name(v);
    out << "]\n";
    out << "twist matrix " << bundle_.phi().matrix().to_string() << "\n";
    out << "pairing " << pairing_.to_string() << "\n";
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (!basis_circ(i, j).is_zero())
                out << "e_" << i + 1 << " . e_" << j + 1 << " = " << basis_circ(i, j).to_string() << "\n";
    for (unsigned i = 0; i < n; ++i) out << "rho(e_" << i + 1 << ") = " << anchor_[i].to_string() << "\n";
    return out.str();
}

Poly pairing(const HomCourantAlgebroid& c, const MultiVector& e, const MultiVector& h)
{
    require_section(c, e, "pairing argument");
    require_section(c, h, "pairing argument");
    Poly out(c.variables());
    for (const auto& [si, f] : e.components())
        for (const auto& [sj, g] : h.components()) {
            const Poly& b = c.pairing()(index_of(si), index_of(sj));
            if (!b.is_zero()) out += f * g * b;
        }
    return out;
}

SigmaDerivation anchor_of(const HomCourantAlgebroid& c, const MultiVector& e)
{
    require_section(c, e, "anchor argument");
    SigmaDerivation out = SigmaDerivation::zero(c.twist());
    for (const auto& [s, f] : e.components()) out += c.anchor(index_of(s)).scaled(f);
    return out;
}

MultiVector gradient(const HomCourantAlgebroid& c, const Poly& f)
{
    const unsigned n = c.rank();
    std::vector<Poly> r;
    r.reserve(n);
    for (unsigned i = 0; i < n; ++i) r.push_back(c.anchor(i).apply(f));
    MultiVector out(c.variables(), n, 1);
    const PolyMatrix& inv = c.pairing_inverse();
    for (unsigned k = 0; k < n; ++k) {
        Poly entry(c.variables());
        for (unsigned i = 0; i < n; ++i)
            if (!inv(k, i).is_zero() && !r[i].is_zero()) entry += inv(k, i) * r[i];
        out.add(bit(k), entry);
    }
    return out;
}

MultiVector circ(const HomCourantAlgebroid& c, const MultiVector& e, const MultiVector& h)
{
    require_section(c, e, "operation argument");
    require_section(c, h, "operation argument");
    const RingAuto& sigma = c.twist();
    MultiVector out(c.variables(), c.rank(), 1);
    for (const auto& [si, f] : e.components()) {
        const unsigned i = index_of(si);
        const Poly sf = sigma.apply(f);
        const MultiVector df = gradient(c, f);
        for (const auto& [sj, g] : h.components()) {
            const unsigned j = index_of(sj);
            const Poly sg = sigma.apply(g);
            // e_i . g e_j, then the multiplier f on the left.
            MultiVector right = c.basis_circ(i, j).scaled(sg) + c.phi_basis(j).scaled(c.anchor_phi(i).apply(g));
            out += right.scaled(sf);
            out -= c.phi_basis(i).scaled(sg * c.anchor_phi(j).apply(f));
            const Poly& b = c.pairing()(i, j);
            if (!b.is_zero()) out += df.scaled(sigma.apply(g * b));
        }
    }
    return out;
}

MultiVector skew_bracket(const HomCourantAlgebroid& c, const MultiVector& e, const MultiVector& h)
{
    return (circ(c, e, h) - circ(c, h, e)).scaled(Poly::constant(c.variables(), Rational(1, 2)));
}

VerificationReport verify_courant(const HomCourantAlgebroid& c, const SampleConfig& config)
{
    VerificationReport report;
    const unsigned n = c.rank();
    report.structure = "Hom-Courant algebroid of rank " + std::to_string(n);
    report.sample_degree = config.max_degree;
    const Variables& vars = c.variables();
    const std::size_t nv = vars->size();
    const RingAuto& sigma = c.twist();
    const SemilinearMap& phi = c.bundle().phi();
    const MultiVector zero(vars, n, 1);
    const Poly half = Poly::constant(vars, Rational(1, 2));
    auto mono = [&](const Monomial& m) { return Poly::monomial(vars, m); };
    auto sec = [&](unsigned i, const Monomial& m) { return c.section(i, mono(m)); };

    AxiomCheck morphism("twist-morphism", "Hom-Courant (i): phi(e1 . e2) = phi e1 . phi e2");
    AxiomCheck anchor_twist("anchor-twist", "Hom-Courant (ii): rho(phi e) o sigma = sigma o rho(e)");
    AxiomCheck anchor_bracket("anchor-bracket", "Hom-Courant (iii): rho(e1 . e2) = [rho e1, rho e2]_sigma");
    AxiomCheck square("square", "Hom-Courant (iv): e . e = D B(e,e) / 2");
    AxiomCheck pairing_twist("pairing-twist", "Hom-Courant (v): B(phi e1, phi e2) = sigma B(e1,e2)");
    AxiomCheck kills("anchor-kills-D", "Hom-Courant derived: rho o D = 0");
    AxiomCheck twist_d("twist-D", "Hom-Courant derived: phi o D = D o sigma");
    AxiomCheck d_leibniz("D-leibniz", "Hom-Courant derived: D(fg) = D(f) sigma(g) + sigma(f) D(g)");
    AxiomCheck circ_d_right("circ-D-right", "Hom-Courant derived: e . Df = D B(Df, e)");
    AxiomCheck circ_d_left("circ-D-left", "Hom-Courant derived: Df . e = 0");
    for_each_monomial_tuple(nv, 2, config.max_degree, [&](const std::vector<Monomial>& m) {
        const Poly f = mono(m[0]);
        const Poly g = mono(m[1]);
        const MultiVector df = gradient(c, f);
        if (!kills.failed())
            kills.equal(anchor_of(c, df), SigmaDerivation::zero(sigma), [&] { return "f=" + f.to_string(); });
        if (!twist_d.failed())
            twist_d.equal(phi.apply(df), gradient(c, sigma.apply(f)), [&] { return "f=" + f.to_string(); });
        if (!d_leibniz.failed())
            d_leibniz.equal(gradient(c, f * g), df.scaled(sigma.apply(g)) + gradient(c, g).scaled(sigma.apply(f)),
                            [&] { return assign({{"f", f.to_string()}, {"g", g.to_string()}}); });
        for (unsigned i = 0; i < n; ++i) {
            const MultiVector e1 = sec(i, m[0]);
            if (!anchor_twist.failed())
                anchor_twist.equal(anchor_of(c, phi.apply(e1)).apply(sigma.apply(g)),
                                   sigma.apply(anchor_of(c, e1).apply(g)),
                                   [&] { return assign({{"e", e1.to_string()}, {"f", g.to_string()}}); });
            const MultiVector e = c.section(i, g);
            if (!circ_d_right.failed())
                circ_d_right.equal(circ(c, e, df), gradient(c, pairing(c, df, e)),
                                   [&] { return assign({{"e", e.to_string()}, {"f", f.to_string()}}); });
            if (!circ_d_left.failed())
                circ_d_left.equal(circ(c, df, e), zero,
                                  [&] { return assign({{"f", f.to_string()}, {"e", e.to_string()}}); });
            for (unsigned j = 0; j < n; ++j) {
                const MultiVector e2 = sec(j, m[1]);
                auto pair_text = [&] { return assign({{"e1", e1.to_string()}, {"e2", e2.to_string()}}); };
                const MultiVector prod = circ(c, e1, e2);
                if (!morphism.failed())
                    morphism.equal(phi.apply(prod), circ(c, phi.apply(e1), phi.apply(e2)), pair_text);
                if (!anchor_bracket.failed())
                    anchor_bracket.equal(anchor_of(c, prod), sder_bracket(anchor_of(c, e1), anchor_of(c, e2)),
                                         pair_text);
                if (!pairing_twist.failed())
                    pairing_twist.equal(pairing(c, phi.apply(e1), phi.apply(e2)), sigma.apply(pairing(c, e1, e2)),
                                        pair_text);
                if (!square.failed()) {
                    const MultiVector s = e1 + e2;
                    square.equal(circ(c, s, s), gradient(c, pairing(c, s, s)).scaled(half),
                                 [&] { return "e=" + s.to_string(); });
                }
            }
        }
        return !(morphism.failed() && anchor_twist.failed() && anchor_bracket.failed() && square.failed() &&
                 pairing_twist.failed() && kills.failed() && twist_d.failed() && d_leibniz.failed() &&
                 circ_d_right.failed() && circ_d_left.failed());
    });

    AxiomCheck leibniz("hom-leibniz", "Hom-Courant (i): phi e1 . (e2 . e3) = (e1 . e2) . phi e3 + phi e2 . (e1 . e3)");
    AxiomCheck invariance("invariance",
                          "Hom-Courant (vi): rho(phi e) B(h1,h2) = B(e . h1, phi h2) + B(phi h1, e . h2)");
    AxiomCheck right_leibniz("circ-right-leibniz", "Hom-Courant derived: e . fh = sigma(f) e . h + rho(phi e)(f) phi h");
    AxiomCheck left_leibniz("circ-left-leibniz",
                            "Hom-Courant derived: (fe) . h = sigma(f) e . h - rho(phi h)(f) phi e + D(f) sigma(B(e,h))");
    for_each_monomial_tuple(nv, 3, config.max_degree, [&](const std::vector<Monomial>& m) {
        const Poly f = mono(m[2]);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                const MultiVector e = sec(i, m[0]);
                const MultiVector h = sec(j, m[1]);
                const MultiVector eh = circ(c, e, h);
                auto text = [&] { return assign({{"e", e.to_string()}, {"h", h.to_string()}, {"f", f.to_string()}}); };
                if (!right_leibniz.failed())
                    right_leibniz.equal(circ(c, e, h.scaled(f)),
                                        eh.scaled(sigma.apply(f)) +
                                            phi.apply(h).scaled(anchor_of(c, phi.apply(e)).apply(f)),
                                        text);
                if (!left_leibniz.failed())
                    left_leibniz.equal(circ(c, e.scaled(f), h),
                                       eh.scaled(sigma.apply(f)) -
                                           phi.apply(e).scaled(anchor_of(c, phi.apply(h)).apply(f)) +
                                           gradient(c, f).scaled(sigma.apply(pairing(c, e, h))),
                                       text);
                if (leibniz.failed() && invariance.failed()) continue;
                for (unsigned k = 0; k < n; ++k) {
                    const MultiVector z = sec(k, m[2]);
                    auto triple = [&] {
                        return assign({{"e1", e.to_string()}, {"e2", h.to_string()}, {"e3", z.to_string()}});
                    };
                    if (!leibniz.failed()) {
                        MultiVector lhs = circ(c, phi.apply(e), circ(c, h, z));
                        MultiVector rhs = circ(c, eh, phi.apply(z)) + circ(c, phi.apply(h), circ(c, e, z));
                        leibniz.equal(lhs, rhs, triple);
                    }
                    if (!invariance.failed()) {
                        Poly lhs = anchor_of(c, phi.apply(e)).apply(pairing(c, h, z));
                        Poly rhs = pairing(c, eh, phi.apply(z)) + pairing(c, phi.apply(h), circ(c, e, z));
                        invariance.equal(lhs, rhs, [&] {
                            return assign({{"e", e.to_string()}, {"h1", h.to_string()}, {"h2", z.to_string()}});
                        });
                    }
                }
            }
        return !(leibniz.failed() && invariance.failed() && right_leibniz.failed() && left_leibniz.failed());
    });

    report.axioms = {morphism.result(),      leibniz.result(),       anchor_twist.result(),
                     anchor_bracket.result(), square.result(),        pairing_twist.result(),
                     invariance.result(),     kills.result(),         twist_d.result(),
                     d_leibniz.result(),      circ_d_right.result(),  circ_d_left.result(),
                     right_leibniz.result(),  left_leibniz.result()};
    return report;
}

namespace {

struct Split {
    MultiVector x;
    MultiForm xi;
};

Split split(const HomLieBialgebroid& b, const MultiVector& e)
{
    const unsigned n = b.algebroid().rank();
    if (e.rank() != 2 * n) throw RankMismatch("section of the double has the wrong rank");
    if (e.grade() != 1) throw GradeError("section of the double must have grade 1");
    Split out{MultiVector(b.algebroid().variables(), n, 1), MultiForm(b.algebroid().variables(), n, 1)};
    for (const auto& [s, f] : e.components()) {
        const unsigned i = index_of(s);
        if (i < n)
            out.x.add(bit(i), f);
        else
            out.xi.add(bit(i - n), f);
    }
    return out;
}

} // namespace

MultiVector double_operation(const HomLieBialgebroid& b, const MultiVector& e, const MultiVector& h)
{
    const HomLieAlgebroid& a = b.algebroid();
    const HomLieAlgebroid& s = b.dual();
    const unsigned n = a.rank();
    const auto [x, xi] = split(b, e);
    const auto [y, eta] = split(b, h);

    MultiVector lower = bracket(a, x, y) + relabel(lie_derivative(s, relabel(xi), relabel(y))) -
                        relabel(interior(s, relabel(eta), differential(s, relabel(a.bundle().phi_inverse().apply(x)))));
    MultiForm upper = relabel(bracket(s, relabel(xi), relabel(eta))) + lie_derivative(a, x, eta) -
                      interior(a, y, differential(a, a.bundle().dagger_inverse().apply(xi)));

    MultiVector out(a.variables(), 2 * n, 1);
    for (const auto& [set, f] : lower.components()) out.add(set, f);
    for (const auto& [set, f] : upper.components()) out.add(bit(index_of(set) + n), f);
    return out;
}

HomCourantAlgebroid build_double(const HomLieBialgebroid& b)
{
    const HomLieAlgebroid& a = b.algebroid();
    const unsigned n = a.rank();
    const unsigned big = 2 * n;
    const Variables& vars = a.variables();

    PolyMatrix twist(vars, big, big);
    PolyMatrix form(vars, big, big);
    const PolyMatrix& p = a.bundle().phi().matrix();
    const PolyMatrix& q = a.bundle().dagger().matrix();
    for (unsigned i = 0; i < n; ++i) {
        form(i, i + n) = Poly::constant(vars, 1);
        form(i + n, i) = Poly::constant(vars, 1);
        for (unsigned j = 0; j < n; ++j) {
            twist(i, j) = p(i, j);
            twist(i + n, j + n) = q(i, j);
        }
    }

    std::vector<SigmaDerivation> anchor = a.anchors();
    for (const auto& d : b.dual().anchors()) anchor.push_back(d);

    std::vector<Poly> table(static_cast<std::size_t>(big) * big * big, Poly(vars));
    for (unsigned i = 0; i < big; ++i)
        for (unsigned j = 0; j < big; ++j) {
            MultiVector prod = double_operation(b, MultiVector::basis(vars, big, bit(i)), MultiVector::basis(vars, big, bit(j)));
            for (const auto& [set, f] : prod.components()) table[(i * big + j) * big + index_of(set)] = f;
        }
    return HomCourantAlgebroid(HomBundle(SemilinearMap(std::move(twist), a.twist())), std::move(form), std::move(table),
                               std::move(anchor));
}

HomCourantAlgebroid standard_courant(const RingAuto& sigma)
{
    return build_double(with_trivial_dual(tangent_algebroid(sigma)));
}

Poly courant_cubic(const HomCourantAlgebroid& c, const MultiVector& e1, const MultiVector& e2, const MultiVector& e3)
{
    const SemilinearMap& phi = c.bundle().phi();
    Poly sum = pairing(c, skew_bracket(c, e1, e2), phi.apply(e3)) +
               pairing(c, skew_bracket(c, e2, e3), phi.apply(e1)) +
               pairing(c, skew_bracket(c, e3, e1), phi.apply(e2));
    return sum * Rational(1, 6);
}

HomLie2Algebra to_hom_lie_2(const HomCourantAlgebroid& c)
{
    VerificationReport check = verify_courant(c, SampleConfig{1});
    if (!check.passed()) throw PreconditionError("not a Hom-Courant algebroid: " + check.first_failure() + " fails");
    auto shared = std::make_shared<const HomCourantAlgebroid>(c);
    HomLie2Algebra t;
    t.variables = c.variables();
    t.rank = c.rank();
    t.l1 = [shared](const Poly& f) { return gradient(*shared, f); };
    t.l2 = [shared](const MultiVector& e, const MultiVector& h) { return skew_bracket(*shared, e, h); };
    t.l2_mixed = [shared](const MultiVector& e, const Poly& f) {
        return pairing(*shared, e, gradient(*shared, f)) * Rational(1, 2);
    };
    t.l3 = [shared](const MultiVector& e1, const MultiVector& e2, const MultiVector& e3) {
        return -courant_cubic(*shared, e1, e2, e3);
    };
    t.phi0 = [shared](const MultiVector& e) { return shared->bundle().phi().apply(e); };
    t.phi1 = [shared](const Poly& f) { return shared->twist().apply(f); };
    return t;
}

VerificationReport verify_hom_lie_2(const HomLie2Algebra& t, const SampleConfig& config)
{
    VerificationReport report;
    const unsigned n = t.rank;
    report.structure = "Hom-Lie 2-algebra on sections of rank " + std::to_string(n);
    report.sample_degree = config.max_degree;
    const Variables& vars = t.variables;
    const std::size_t nv = vars->size();
    auto mono = [&](const Monomial& m) { return Poly::monomial(vars, m); };
    auto sec = [&](unsigned i, const Monomial& m) { return MultiVector::basis(vars, n, bit(i)).scaled(mono(m)); };
    // l2 with a function on the left.
    auto l2_left = [&](const Poly& m, const MultiVector& x) { return -t.l2_mixed(x, m); };

    AxiomCheck sq_l1("square-l1", "Hom-Lie 2-algebra: phi0 o l1 = l1 o phi1");
    AxiomCheck sq_l2("square-l2", "Hom-Lie 2-algebra: phi0 o l2 = l2 o (phi0 x phi0)");
    AxiomCheck sq_mixed("square-l2-mixed", "Hom-Lie 2-algebra: phi1 o l2 = l2 o (phi0 x phi1)");
    AxiomCheck skew("skew", "Hom-Lie 2-algebra (a): l2(x,y) = -l2(y,x)");
    AxiomCheck b1("l1-l2", "Hom-Lie 2-algebra (b): l1 l2(x,m) = l2(x, l1 m)");
    AxiomCheck b2("l2-l1", "Hom-Lie 2-algebra (b): l2(l1 m, n) = l2(m, l1 n)");
    for_each_monomial_tuple(nv, 2, config.max_degree, [&](const std::vector<Monomial>& m) {
        const Poly f = mono(m[0]);
        const Poly g = mono(m[1]);
        if (!sq_l1.failed()) sq_l1.equal(t.phi0(t.l1(f)), t.l1(t.phi1(f)), [&] { return "m=" + f.to_string(); });
        if (!b2.failed())
            b2.equal(t.l2_mixed(t.l1(f), g), l2_left(f, t.l1(g)),
                     [&] { return assign({{"m", f.to_string()}, {"n", g.to_string()}}); });
        for (unsigned i = 0; i < n; ++i) {
            const MultiVector x = sec(i, m[0]);
            auto xm = [&] { return assign({{"x", x.to_string()}, {"m", g.to_string()}}); };
            if (!sq_mixed.failed()) sq_mixed.equal(t.phi1(t.l2_mixed(x, g)), t.l2_mixed(t.phi0(x), t.phi1(g)), xm);
            if (!b1.failed()) b1.equal(t.l1(t.l2_mixed(x, g)), t.l2(x, t.l1(g)), xm);
            for (unsigned j = 0; j < n; ++j) {
                const MultiVector y = sec(j, m[1]);
                auto xy = [&] { return assign({{"x", x.to_string()}, {"y", y.to_string()}}); };
                const MultiVector l = t.l2(x, y);
                if (!sq_l2.failed()) sq_l2.equal(t.phi0(l), t.l2(t.phi0(x), t.phi0(y)), xy);
                if (!skew.failed()) skew.equal(l, -t.l2(y, x), xy);
            }
        }
        return !(sq_l1.failed() && sq_l2.failed() && sq_mixed.failed() && skew.failed() && b1.failed() && b2.failed());
    });

    AxiomCheck sq_l3("square-l3", "Hom-Lie 2-algebra: l3 o phi0 = phi1 o l3");
    AxiomCheck skew3("l3-skew", "Hom-Lie 2-algebra: l3 is skew-symmetric");
    AxiomCheck c1("c1", "Hom-Lie 2-algebra (c1): l1 l3(x,y,z) = l2(phi0 x, l2(y,z)) + c.p.");
    AxiomCheck c2("c2", "Hom-Lie 2-algebra (c2): l3(x,y,l1 m) = l2(phi0 x, l2(y,m)) + l2(phi0 y, l2(m,x)) + "
                        "l2(phi1 m, l2(x,y))");
    for_each_monomial_tuple(nv, 3, config.max_degree, [&](const std::vector<Monomial>& m) {
        const Poly p = mono(m[2]);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                const MultiVector x = sec(i, m[0]);
                const MultiVector y = sec(j, m[1]);
                if (!c2.failed()) {
                    Poly rhs = t.l2_mixed(t.phi0(x), t.l2_mixed(y, p)) + t.l2_mixed(t.phi0(y), l2_left(p, x)) +
                               l2_left(t.phi1(p), t.l2(x, y));
                    c2.equal(t.l3(x, y, t.l1(p)), rhs,
                             [&] { return assign({{"x", x.to_string()}, {"y", y.to_string()}, {"m", p.to_string()}}); });
                }
                if (sq_l3.failed() && skew3.failed() && c1.failed()) continue;
                for (unsigned k = 0; k < n; ++k) {
                    const MultiVector z = sec(k, m[2]);
                    auto xyz = [&] { return assign({{"x", x.to_string()}, {"y", y.to_string()}, {"z", z.to_string()}}); };
                    const Poly l = t.l3(x, y, z);
                    if (!sq_l3.failed()) sq_l3.equal(t.l3(t.phi0(x), t.phi0(y), t.phi0(z)), t.phi1(l), xyz);
                    if (!skew3.failed() && skew3.equal(t.l3(y, x, z), -l, xyz)) skew3.equal(t.l3(x, z, y), -l, xyz);
                    if (!c1.failed()) {
                        MultiVector rhs = t.l2(t.phi0(x), t.l2(y, z)) + t.l2(t.phi0(y), t.l2(z, x)) +
                                          t.l2(t.phi0(z), t.l2(x, y));
                        c1.equal(t.l1(l), rhs, xyz);
                    }
                }
            }
        return !(sq_l3.failed() && skew3.failed() && c1.failed() && c2.failed());
    });

    AxiomCheck d("d", "Hom-Lie 2-algebra (d): coherence of l3 with l2 on four elements of V0");
    auto phi2 = [&](const MultiVector& v) { return t.phi0(t.phi0(v)); };
    for_each_monomial_tuple(nv, 4, config.max_degree, [&](const std::vector<Monomial>& m) {
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                for (unsigned k = 0; k < n; ++k)
                    for (unsigned q = 0; q < n; ++q) {
                        const MultiVector w = sec(i, m[0]);
                        const MultiVector x = sec(j, m[1]);
                        const MultiVector y = sec(k, m[2]);
                        const MultiVector z = sec(q, m[3]);
                        const MultiVector pw = t.phi0(w);
                        const MultiVector px = t.phi0(x);
                        const MultiVector py = t.phi0(y);
                        const MultiVector pz = t.phi0(z);
                        Poly lhs = t.l3(t.l2(w, x), py, pz) + l2_left(t.l3(w, x, z), phi2(y)) +
                                   t.l3(pw, t.l2(x, z), py) + t.l3(t.l2(w, z), px, py);
                        Poly rhs = l2_left(t.l3(w, x, y), phi2(z)) + t.l3(t.l2(w, y), px, pz) +
                                   t.l3(pw, t.l2(x, y), pz) + t.l2_mixed(phi2(w), t.l3(x, y, z)) +
                                   l2_left(t.l3(w, y, z), phi2(x)) + t.l3(pw, t.l2(y, z), px);
                        if (!d.equal(lhs, rhs, [&] {
                                return assign({{"w", w.to_string()}, {"x", x.to_string()}, {"y", y.to_string()},
                                               {"z", z.to_string()}});
                            }))
                            return false;
                    }
        return true;
    });

    report.axioms = {sq_l1.result(), sq_l2.result(), sq_mixed.result(), sq_l3.result(), skew.result(),
                     skew3.result(), b1.result(),    b2.result(),       c1.result(),    c2.result(), d.result()};
    return report;
}

} // namespace homcalc
