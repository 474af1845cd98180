#include "homcalc/homlie.hpp"

#include "homcalc/error.hpp"

#include <string>

namespace homcalc {

namespace {

std::string vector_string(const RationalVector& v, const char* basis = "e_")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        bool neg = v[i] < 0;
        Rational mag = abs(v[i]);
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (mag != 1) out += mag.get_str() + "*";
        out += basis + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

std::string basis_name(unsigned i) { return "e_" + std::to_string(i + 1); }

RationalVector add(RationalVector a, const RationalVector& b, const Rational& scale = 1)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
    return a;
}

RationalMatrix add(RationalMatrix a, const RationalMatrix& b, const Rational& scale = 1)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += scale * b(i, j);
    return a;
}

MultiVector point_basis(unsigned rank, IndexSet set) { return MultiVector::basis(make_variables({}), rank, set); }

MultiVector twist_wedge(const HomLieAlgebra& g, const std::vector<unsigned>& factors, std::size_t skip)
{
    MultiVector acc = point_basis(g.dim(), 0);
    for (std::size_t a = 0; a < factors.size(); ++a) {
        if (a == skip) continue;
        acc = wedge(acc, to_multivector(g.twist().apply(g.basis_vector(factors[a]))));
    }
    return acc;
}

} // namespace

HomLieAlgebra::HomLieAlgebra(unsigned dim, std::vector<Rational> structure, RationalMatrix twist)
    : dim_(dim), c_(std::move(structure)), twist_(std::move(twist))
{
    if (c_.size() != static_cast<std::size_t>(dim) * dim * dim)
        throw std::invalid_argument("structure constant table has the wrong size");
    if (twist_.rows() != dim || twist_.cols() != dim) throw std::invalid_argument("twist is not a dim x dim matrix");
    twist_inverse_ = twist_.inverse();
}

HomLieAlgebra HomLieAlgebra::abelian(unsigned dim, RationalMatrix twist)
{
    return HomLieAlgebra(dim, std::vector<Rational>(static_cast<std::size_t>(dim) * dim * dim), std::move(twist));
}

void HomLieAlgebra::set_bracket(unsigned i, unsigned j, const RationalVector& v)
{
    if (i >= dim_ || j >= dim_ || v.size() != dim_) throw std::out_of_range("bracket index out of range");
    for (unsigned k = 0; k < dim_; ++k) {
        c_[(i * dim_ + j) * dim_ + k] = v[k];
        c_[(j * dim_ + i) * dim_ + k] = -v[k];
    }
}

RationalVector HomLieAlgebra::basis_vector(unsigned i) const
{
    RationalVector v(dim_);
    v.at(i) = 1;
    return v;
}

RationalVector HomLieAlgebra::bracket(const RationalVector& x, const RationalVector& y) const
{
    RationalVector out(dim_);
    for (unsigned i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (unsigned j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            Rational s = x[i] * y[j];
            for (unsigned k = 0; k < dim_; ++k) out[k] += s * structure(i, j, k);
        }
    }
    return out;
}

VerificationReport verify_homlie(const HomLieAlgebra& g)
{
    VerificationReport report;
    report.structure = "Hom-Lie algebra of dimension " + std::to_string(g.dim());
    const unsigned n = g.dim();
    auto e = [&](unsigned i) { return g.basis_vector(i); };
    auto phi = [&](const RationalVector& v) { return g.twist().apply(v); };

    AxiomCheck skew("skew-symmetry", "Hom-Lie algebra: [x,y] = -[y,x]");
    for (unsigned i = 0; i < n && !skew.failed(); ++i)
        for (unsigned j = i; j < n && !skew.failed(); ++j) {
            RationalVector lhs = g.bracket(e(i), e(j));
            RationalVector rhs = add(RationalVector(n), g.bracket(e(j), e(i)), -1);
            skew.holds(lhs == rhs, [&] { return "x=" + basis_name(i) + ", y=" + basis_name(j); },
                       [&] { return vector_string(lhs); }, [&] { return vector_string(rhs); });
        }

    AxiomCheck morphism("twist-morphism", "Hom-Lie algebra: phi[x,y] = [phi x, phi y]");
    for (unsigned i = 0; i < n && !morphism.failed(); ++i)
        for (unsigned j = 0; j < n && !morphism.failed(); ++j) {
            RationalVector lhs = phi(g.bracket(e(i), e(j)));
            RationalVector rhs = g.bracket(phi(e(i)), phi(e(j)));
            morphism.holds(lhs == rhs, [&] { return "x=" + basis_name(i) + ", y=" + basis_name(j); },
                           [&] { return vector_string(lhs); }, [&] { return vector_string(rhs); });
        }

    AxiomCheck jacobi("hom-jacobi", "Hom-Jacobi identity: [phi x,[y,z]] + c.p. = 0");
    for (unsigned i = 0; i < n && !jacobi.failed(); ++i)
        for (unsigned j = 0; j < n && !jacobi.failed(); ++j)
            for (unsigned k = 0; k < n && !jacobi.failed(); ++k) {
                RationalVector sum = g.bracket(phi(e(i)), g.bracket(e(j), e(k)));
                sum = add(sum, g.bracket(phi(e(j)), g.bracket(e(k), e(i))));
                sum = add(sum, g.bracket(phi(e(k)), g.bracket(e(i), e(j))));
                jacobi.holds(sum == RationalVector(n),
                             [&] { return "x=" + basis_name(i) + ", y=" + basis_name(j) + ", z=" + basis_name(k); },
                             [&] { return vector_string(sum); }, [] { return std::string("0"); });
            }

    report.axioms = {skew.result(), morphism.result(), jacobi.result()};
    return report;
}

RationalMatrix Representation::action(const RationalVector& x) const
{
    RationalMatrix out(beta.rows(), beta.cols());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) out = add(out, rho[i], x[i]);
    return out;
}

VerificationReport verify_representation(const HomLieAlgebra& g, const Representation& r)
{
    VerificationReport report;
    report.structure = "representation of dimension " + std::to_string(r.beta.rows());
    const unsigned n = g.dim();
    if (r.rho.size() != n) throw std::invalid_argument("representation needs one matrix per basis element");

    AxiomCheck twist("twist-compatibility", "representation: rho(phi x) beta = beta rho(x)");
    for (unsigned i = 0; i < n && !twist.failed(); ++i) {
        RationalMatrix lhs = r.action(g.twist().apply(g.basis_vector(i))) * r.beta;
        RationalMatrix rhs = r.beta * r.rho[i];
        twist.holds(lhs == rhs, [&] { return "x=" + basis_name(i); }, [&] { return lhs.to_string(); },
                    [&] { return rhs.to_string(); });
    }
    AxiomCheck bracket("bracket-compatibility", "representation: rho([x,y]) beta = rho(phi x)rho(y) - rho(phi y)rho(x)");
    for (unsigned i = 0; i < n && !bracket.failed(); ++i)
        for (unsigned j = 0; j < n && !bracket.failed(); ++j) {
            RationalVector x = g.basis_vector(i), y = g.basis_vector(j);
            RationalMatrix lhs = r.action(g.bracket(x, y)) * r.beta;
            RationalMatrix rhs = add(r.action(g.twist().apply(x)) * r.rho[j], r.action(g.twist().apply(y)) * r.rho[i], -1);
            bracket.holds(lhs == rhs, [&] { return "x=" + basis_name(i) + ", y=" + basis_name(j); },
                          [&] { return lhs.to_string(); }, [&] { return rhs.to_string(); });
        }
    report.axioms = {twist.result(), bracket.result()};
    return report;
}

Representation adjoint(const HomLieAlgebra& g)
{
    Representation r{g.twist(), {}};
    for (unsigned i = 0; i < g.dim(); ++i) {
        RationalMatrix m(g.dim(), g.dim());
        for (unsigned j = 0; j < g.dim(); ++j)
            for (unsigned k = 0; k < g.dim(); ++k) m(k, j) = g.structure(i, j, k);
        r.rho.push_back(std::move(m));
    }
    return r;
}

Representation dual_representation(const HomLieAlgebra& g, const Representation& r)
{
    RationalMatrix beta_inv = r.beta.inverse();
    RationalMatrix beta_inv2 = beta_inv * beta_inv;
    Representation out{beta_inv.transpose(), {}};
    for (unsigned i = 0; i < g.dim(); ++i) {
        RationalMatrix m = (r.action(g.twist_inverse().apply(g.basis_vector(i))) * beta_inv2).transpose();
        out.rho.push_back(add(RationalMatrix(m.rows(), m.cols()), m, -1));
    }
    return out;
}

Representation coadjoint(const HomLieAlgebra& g) { return dual_representation(g, adjoint(g)); }

MultiVector to_multivector(const RationalVector& v)
{
    auto vars = make_variables({});
    MultiVector out(vars, static_cast<unsigned>(v.size()), 1);
    for (unsigned i = 0; i < v.size(); ++i) out.add(IndexSet{1} << i, Poly::constant(vars, v[i]));
    return out;
}

MultiVector apply_twist(const HomLieAlgebra& g, const MultiVector& x)
{
    MultiVector out(x.variables(), g.dim(), x.grade());
    for (const auto& [set, c] : x.components()) out += twist_wedge(g, indices_of(set), SIZE_MAX).scaled(c);
    return out;
}

MultiVector extended_bracket(const HomLieAlgebra& g, const MultiVector& x, const MultiVector& y)
{
    if (x.rank() != g.dim() || y.rank() != g.dim()) throw RankMismatch("multivector rank differs from algebra dimension");
    if (x.grade() + y.grade() == 0) throw GradeError("bracket of two scalars has no grade");
    MultiVector out(make_variables({}), g.dim(), x.grade() + y.grade() - 1);
    if (x.grade() == 0 || y.grade() == 0) return out;
    for (const auto& [sx, cx] : x.components())
        for (const auto& [sy, cy] : y.components()) {
            auto xs = indices_of(sx), ys = indices_of(sy);
            Poly coeff = cx * cy;
            for (std::size_t a = 0; a < xs.size(); ++a)
                for (std::size_t b = 0; b < ys.size(); ++b) {
                    MultiVector br = to_multivector(g.bracket(g.basis_vector(xs[a]), g.basis_vector(ys[b])));
                    MultiVector term = wedge(wedge(br, twist_wedge(g, xs, a)), twist_wedge(g, ys, b));
                    out += (a + b) % 2 ? term.scaled(-coeff) : term.scaled(coeff);
                }
        }
    return out;
}

PurelyHomLieBialgebra::PurelyHomLieBialgebra(HomLieAlgebra g, HomLieAlgebra dual) : g_(std::move(g)), dual_(std::move(dual))
{
    if (g_.dim() != dual_.dim()) throw PreconditionError("algebra and dual have different dimensions");
    if (!(dual_.twist() == g_.twist_inverse().transpose()))
        throw PreconditionError("dual twist must be the inverse transpose of the algebra twist");
}

MultiVector PurelyHomLieBialgebra::cobracket(const RationalVector& x) const
{
    const unsigned n = g_.dim();
    auto vars = make_variables({});
    MultiVector out(vars, n, 2);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            Rational c = 0;
            for (unsigned k = 0; k < n; ++k) c += x[k] * dual_.structure(i, j, k);
            out.add(index_set({i, j}), Poly::constant(vars, c));
        }
    return out;
}

namespace {

void append_prefixed(VerificationReport& report, const VerificationReport& part, const std::string& prefix)
{
    for (auto a : part.axioms) {
        a.id = prefix + a.id;
        report.axioms.push_back(std::move(a));
    }
}

} // namespace

VerificationReport verify_bialgebra(const PurelyHomLieBialgebra& b)
{
    VerificationReport report;
    report.structure = "purely Hom-Lie bialgebra of dimension " + std::to_string(b.algebra().dim());
    append_prefixed(report, verify_homlie(b.algebra()), "g/");
    append_prefixed(report, verify_homlie(b.dual()), "dual/");
    const HomLieAlgebra& g = b.algebra();
    AxiomCheck compat("cobracket-compatibility",
                      "purely Hom-Lie bialgebra: Delta[x,y] = ad_{phi^-1 x} Delta(y) - ad_{phi^-1 y} Delta(x)");
    for (unsigned i = 0; i < g.dim() && !compat.failed(); ++i)
        for (unsigned j = 0; j < g.dim() && !compat.failed(); ++j) {
            RationalVector x = g.basis_vector(i), y = g.basis_vector(j);
            MultiVector lhs = b.cobracket(g.bracket(x, y));
            MultiVector rhs = extended_bracket(g, to_multivector(g.twist_inverse().apply(x)), b.cobracket(y)) -
                              extended_bracket(g, to_multivector(g.twist_inverse().apply(y)), b.cobracket(x));
            compat.equal(lhs, rhs, [&] { return "x=" + basis_name(i) + ", y=" + basis_name(j); });
        }
    report.axioms.push_back(compat.result());
    return report;
}

QuadraticHomLieAlgebra build_double(const PurelyHomLieBialgebra& b)
{
    VerificationReport pre = verify_bialgebra(b);
    if (!pre.passed()) throw PreconditionError("input is not a purely Hom-Lie bialgebra: " + pre.first_failure());
    const HomLieAlgebra& g = b.algebra();
    const HomLieAlgebra& d = b.dual();
    const unsigned n = g.dim();
    Representation ad_g = coadjoint(g); // acts on g*
    Representation ad_d = coadjoint(d); // acts on g** = g
    std::vector<Rational> c(static_cast<std::size_t>(8) * n * n * n);
    auto set = [&](unsigned a, unsigned bb, const RationalVector& lower, const RationalVector& upper) {
        for (unsigned k = 0; k < n; ++k) {
            c[(a * 2 * n + bb) * 2 * n + k] = lower[k];
            c[(a * 2 * n + bb) * 2 * n + n + k] = upper[k];
        }
    };
    RationalVector zero(n);
    auto neg = [&](RationalVector v) {
        for (auto& x : v) x = -x;
        return v;
    };
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            RationalVector ei = g.basis_vector(i), ej = g.basis_vector(j);
            set(i, j, g.bracket(ei, ej), zero);
            set(i, n + j, neg(ad_d.rho[j].apply(ei)), ad_g.rho[i].apply(ej));
            set(n + i, j, ad_d.rho[i].apply(ej), neg(ad_g.rho[j].apply(ei)));
            set(n + i, n + j, zero, d.bracket(ei, ej));
        }
    RationalMatrix twist(2 * n, 2 * n), pairing(2 * n, 2 * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            twist(i, j) = g.twist()(i, j);
            twist(n + i, n + j) = d.twist()(i, j);
        }
    for (unsigned i = 0; i < n; ++i) pairing(i, n + i) = pairing(n + i, i) = 1;
    return QuadraticHomLieAlgebra{HomLieAlgebra(2 * n, std::move(c), twist), pairing};
}

VerificationReport verify_quadratic(const QuadraticHomLieAlgebra& q)
{
    const HomLieAlgebra& g = q.algebra;
    const unsigned n = g.dim();
    VerificationReport report = verify_homlie(g);
    report.structure = "quadratic Hom-Lie algebra of dimension " + std::to_string(n);
    auto B = [&](const RationalVector& u, const RationalVector& v) {
        Rational s = 0;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) s += u[i] * q.pairing(i, j) * v[j];
        return s;
    };
    AxiomCheck symmetric("pairing-symmetric", "pairing: B(u,v) = B(v,u), det B != 0");
    symmetric.holds(q.pairing == q.pairing.transpose() && q.pairing.determinant() != 0,
                    [] { return std::string("pairing matrix"); }, [&] { return q.pairing.to_string(); },
                    [] { return std::string("symmetric nondegenerate"); });
    AxiomCheck twist("pairing-twist", "pairing: B(phi u, phi v) = B(u, v)");
    AxiomCheck invariance("pairing-invariance", "pairing: B([e,h1], phi h2) + B(phi h1, [e,h2]) = 0");
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            RationalVector u = g.basis_vector(a), v = g.basis_vector(b);
            Rational lhs = B(g.twist().apply(u), g.twist().apply(v)), rhs = B(u, v);
            if (!twist.failed())
                twist.holds(lhs == rhs, [&] { return "u=" + basis_name(a) + ", v=" + basis_name(b); },
                            [&] { return lhs.get_str(); }, [&] { return rhs.get_str(); });
            for (unsigned c = 0; c < n && !invariance.failed(); ++c) {
                RationalVector w = g.basis_vector(c);
                Rational s = B(g.bracket(u, v), g.twist().apply(w)) + B(g.twist().apply(v), g.bracket(u, w));
                invariance.holds(s == 0,
                                 [&] { return "e=" + basis_name(a) + ", h1=" + basis_name(b) + ", h2=" + basis_name(c); },
                                 [&] { return s.get_str(); }, [] { return std::string("0"); });
            }
        }
    report.axioms.push_back(symmetric.result());
    report.axioms.push_back(twist.result());
    report.axioms.push_back(invariance.result());
    return report;
}

} // namespace homcalc
