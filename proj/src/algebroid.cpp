#include "homcalc/algebroid.hpp"

#include <bit>
#include <sstream>

namespace homcalc {

namespace {

unsigned index_of(IndexSet s) { return static_cast<unsigned>(std::countr_zero(s)); }

Poly signed_poly(const Poly& p, bool negate) { return negate ? -p : p; }

void require_section(const HomLieAlgebroid& alg, const MultiVector& x, unsigned grade, const char* what)
{
    if (x.rank() != alg.rank()) throw RankMismatch(std::string(what) + " has the wrong rank");
    if (x.grade() != grade)
        throw GradeError(std::string(what) + " must have grade " + std::to_string(grade) + ", got " +
                         std::to_string(x.grade()));
}

std::string basis_name(unsigned i) { return "e_" + std::to_string(i + 1); }

} // namespace

HomBundle::HomBundle(SemilinearMap phi)
    : phi_(std::move(phi)), phi_inverse_(phi_.inverse()), dagger_(phi_.dagger()), dagger_inverse_(dagger_.inverse())
{
}

HomBundle HomBundle::dual() const { return HomBundle(dagger_); }

std::vector<Mutation> all_mutations()
{
    return {Mutation::differential_anchor_sign, Mutation::differential_bracket_sign,
            Mutation::differential_function_sign, Mutation::schouten_sign,
            Mutation::schouten_anchor_sign, Mutation::schouten_function_sign,
            Mutation::interior_sign, Mutation::interior_multivector_sign,
            Mutation::lie_form_sign, Mutation::bracket_left_leibniz_sign,
            Mutation::bracket_right_leibniz_sign};
}

std::string to_string(Mutation m)
{
    switch (m) {
    case Mutation::none: return "none";
    case Mutation::differential_anchor_sign: return "differential-anchor-sign";
    case Mutation::differential_bracket_sign: return "differential-bracket-sign";
    case Mutation::differential_function_sign: return "differential-function-sign";
    case Mutation::schouten_sign: return "schouten-sign";
    case Mutation::schouten_anchor_sign: return "schouten-anchor-sign";
    case Mutation::schouten_function_sign: return "schouten-function-sign";
    case Mutation::interior_sign: return "interior-sign";
    case Mutation::interior_multivector_sign: return "interior-multivector-sign";
    case Mutation::lie_form_sign: return "lie-form-sign";
    case Mutation::bracket_left_leibniz_sign: return "bracket-left-leibniz-sign";
    case Mutation::bracket_right_leibniz_sign: return "bracket-right-leibniz-sign";
    }
    return "unknown";
}

HomLieAlgebroid::HomLieAlgebroid(HomBundle bundle, std::vector<Poly> structure, std::vector<SigmaDerivation> anchor)
    : bundle_(std::move(bundle)), c_(std::move(structure)), anchor_(std::move(anchor))
{
    const std::size_t n = rank();
    if (c_.size() != n * n * n) throw std::invalid_argument("structure function table has the wrong size");
    if (anchor_.size() != n) throw std::invalid_argument("anchor needs one derivation per basis section");
    for (auto& c : c_) {
        if (c.variables()->size() == 0 && c.is_constant()) c = Poly::constant(variables(), c.constant_value());
        if (!same_variables(c.variables(), variables()))
            throw VariableMismatch("structure function over a different ring");
    }
    for (const auto& a : anchor_)
        if (!(a.sigma() == twist())) throw VariableMismatch("anchor derivation uses a different automorphism");
    build_cache();
}

void HomLieAlgebroid::build_cache()
{
    const unsigned n = rank();
    auto cache = std::make_shared<Cache>();
    for (unsigned i = 0; i < n; ++i) {
        MultiVector e = MultiVector::basis(variables(), n, IndexSet{1} << i);
        cache->phi_basis.push_back(bundle_.phi().apply(e));
        cache->inverse_basis.push_back(bundle_.phi_inverse().apply(e));
        SigmaDerivation a = SigmaDerivation::zero(twist());
        const PolyMatrix& p = bundle_.phi().matrix();
        for (unsigned k = 0; k < n; ++k)
            if (!p(k, i).is_zero()) a += anchor_[k].scaled(p(k, i));
        cache->anchor_phi.push_back(std::move(a));
    }
    cache_ = cache;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            cache->shifted.push_back(bracket(*this, cache->inverse_basis[i], cache->inverse_basis[j]));
}

MultiVector HomLieAlgebroid::basis_bracket(unsigned i, unsigned j) const
{
    MultiVector out(variables(), rank(), 1);
    for (unsigned k = 0; k < rank(); ++k) out.add(IndexSet{1} << k, structure(i, j, k));
    return out;
}

MultiVector HomLieAlgebroid::section(unsigned i, const Poly& f) const
{
    return MultiVector::basis(variables(), rank(), IndexSet{1} << i, f);
}

MultiForm HomLieAlgebroid::coframe(unsigned i, const Poly& f) const
{
    return MultiForm::basis(variables(), rank(), IndexSet{1} << i, f);
}

HomLieAlgebroid HomLieAlgebroid::with_mutation(Mutation m) const
{
    HomLieAlgebroid out = *this;
    out.mutation_ = m;
    out.build_cache();
    return out;
}

std::string HomLieAlgebroid::to_string() const
{
    std::ostringstream out;
    const unsigned n = rank();
    out << "rank " << n << " over Q[";
    for (std::size_t v = 0; v < variables()->size(); ++v) out << (v ? "," : "") << variables()->name(v);
    out << "]\n";
    out << "twist matrix " << bundle_.phi().matrix().to_string() << "\n";
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) out << "[e_" << i + 1 << ",e_" << j + 1 << "] = " << basis_bracket(i, j).to_string() << "\n";
    for (unsigned i = 0; i < n; ++i) out << "a(e_" << i + 1 << ") = " << anchor_[i].to_string() << "\n";
    return out.str();
}

SigmaDerivation anchor_of(const HomLieAlgebroid& alg, const MultiVector& x)
{
    require_section(alg, x, 1, "anchor argument");
    SigmaDerivation out = SigmaDerivation::zero(alg.twist());
    for (const auto& [s, f] : x.components()) out += alg.anchor(index_of(s)).scaled(f);
    return out;
}

SigmaDerivation anchor_of_twisted(const HomLieAlgebroid& alg, const MultiVector& x)
{
    require_section(alg, x, 1, "anchor argument");
    SigmaDerivation out = SigmaDerivation::zero(alg.twist());
    for (const auto& [s, f] : x.components()) out += alg.anchor_phi(index_of(s)).scaled(alg.twist().apply(f));
    return out;
}

MultiVector bracket(const HomLieAlgebroid& alg, const MultiVector& x, const MultiVector& y)
{
    require_section(alg, x, 1, "bracket argument");
    require_section(alg, y, 1, "bracket argument");
    const unsigned n = alg.rank();
    const RingAuto& sigma = alg.twist();
    MultiVector out(alg.variables(), n, 1);
    for (const auto& [si, f] : x.components()) {
        const unsigned i = index_of(si);
        const Poly sf = sigma.apply(f);
        for (const auto& [sj, g] : y.components()) {
            const unsigned j = index_of(sj);
            const Poly s = sf * sigma.apply(g);
            for (unsigned k = 0; k < n; ++k) {
                const Poly& c = alg.structure(i, j, k);
                if (!c.is_zero()) out.add(IndexSet{1} << k, s * c);
            }
        }
    }
    const bool flip_right = alg.mutation() == Mutation::bracket_right_leibniz_sign;
    const bool flip_left = alg.mutation() == Mutation::bracket_left_leibniz_sign;
    const SigmaDerivation ax = anchor_of_twisted(alg, x);
    for (const auto& [sj, g] : y.components()) {
        if (g.is_constant()) continue;
        const Poly v = ax.apply(g);
        if (!v.is_zero()) out += alg.phi_basis(index_of(sj)).scaled(signed_poly(v, flip_right));
    }
    const SigmaDerivation ay = anchor_of_twisted(alg, y);
    for (const auto& [si, f] : x.components()) {
        if (f.is_constant()) continue;
        const Poly v = ay.apply(f);
        if (!v.is_zero()) out -= alg.phi_basis(index_of(si)).scaled(signed_poly(v, flip_left));
    }
    return out;
}

MultiForm differential(const HomLieAlgebroid& alg, const Poly& f)
{
    const unsigned n = alg.rank();
    const bool flip = alg.mutation() == Mutation::differential_function_sign;
    MultiForm out(alg.variables(), n, 1);
    for (unsigned i = 0; i < n; ++i) out.add(IndexSet{1} << i, signed_poly(alg.anchor(i).apply(f), flip));
    return out;
}

MultiForm differential(const HomLieAlgebroid& alg, const MultiForm& xi)
{
    if (xi.rank() != alg.rank()) throw RankMismatch("form has the wrong rank");
    const unsigned k = xi.grade();
    if (k == 0) return differential(alg, xi.to_poly());
    const unsigned n = alg.rank();
    const Variables& vars = alg.variables();
    MultiForm out(vars, n, k + 1);
    if (k + 1 > n || xi.is_zero()) return out;
    const bool flip_anchor = alg.mutation() == Mutation::differential_anchor_sign;
    const bool flip_bracket = alg.mutation() == Mutation::differential_bracket_sign;
    const MultiForm xi_dagger = alg.bundle().dagger().apply(xi);
    // Xi on phi^-1 of each grade-k basis multivector.
    std::map<IndexSet, Poly> shifted_values;
    auto shifted_value = [&](IndexSet rest) -> const Poly& {
        auto it = shifted_values.find(rest);
        if (it == shifted_values.end())
            it = shifted_values
                     .emplace(rest, pair(xi, alg.bundle().phi_inverse().apply(MultiVector::basis(vars, n, rest))))
                     .first;
        return it->second;
    };
    for (IndexSet set : index_sets(n, k + 1)) {
        const auto idx = indices_of(set);
        Poly value(vars);
        for (unsigned p = 0; p <= k; ++p) {
            const Poly& inner = shifted_value(set & ~(IndexSet{1} << idx[p]));
            if (inner.is_zero()) continue;
            Poly term = alg.anchor(idx[p]).apply(inner);
            value += signed_poly(term, (p % 2 == 1) != flip_anchor);
        }
        for (unsigned p = 0; p <= k; ++p)
            for (unsigned q = p + 1; q <= k; ++q) {
                const MultiVector& beta = alg.shifted_bracket(idx[p], idx[q]);
                if (beta.is_zero()) continue;
                IndexSet rest = set & ~(IndexSet{1} << idx[p]) & ~(IndexSet{1} << idx[q]);
                Poly term = pair(xi_dagger, wedge(beta, MultiVector::basis(vars, n, rest)));
                value += signed_poly(term, ((p + q) % 2 == 1) != flip_bracket);
            }
        out.add(set, value);
    }
    return out;
}

namespace {

// [[f, Y]] for a function f and a multisection Y of grade q >= 1.
MultiVector schouten_function_left(const HomLieAlgebroid& alg, const Poly& f, const MultiVector& y)
{
    const unsigned n = alg.rank();
    MultiVector out(alg.variables(), n, y.grade() - 1);
    for (const auto& [set, g] : y.components()) {
        const Poly sg = alg.twist().apply(g);
        const auto idx = indices_of(set);
        for (std::size_t b = 0; b < idx.size(); ++b) {
            Poly value = alg.anchor_phi(idx[b]).apply(f);
            if (value.is_zero()) continue;
            value *= sg;
            const MultiVector rest =
                alg.bundle().phi().apply(MultiVector::basis(alg.variables(), n, set & ~(IndexSet{1} << idx[b])));
            out += rest.scaled(b % 2 == 0 ? -value : value);
        }
    }
    if (alg.mutation() == Mutation::schouten_function_sign) out = -out;
    return out;
}

} // namespace

MultiVector schouten(const HomLieAlgebroid& alg, const MultiVector& x, const MultiVector& y)
{
    if (x.rank() != alg.rank() || y.rank() != alg.rank()) throw RankMismatch("multisection has the wrong rank");
    const unsigned p = x.grade();
    const unsigned q = y.grade();
    if (p == 0 && q == 0) throw GradeError("Hom-Schouten bracket of two functions");
    if (p == 0) return schouten_function_left(alg, x.to_poly(), y);
    if (q == 0) {
        MultiVector out = schouten_function_left(alg, y.to_poly(), x);
        const bool negate = (p % 2 == 1) != (alg.mutation() == Mutation::schouten_anchor_sign);
        return negate ? -out : out;
    }
    const unsigned n = alg.rank();
    const Variables& vars = alg.variables();
    const SemilinearMap& phi = alg.bundle().phi();
    const bool flip = alg.mutation() == Mutation::schouten_sign;
    MultiVector out(vars, n, p + q - 1);
    const Poly one = Poly::constant(vars, 1);
    for (const auto& [sx, f] : x.components()) {
        const auto ix = indices_of(sx);
        for (const auto& [sy, g] : y.components()) {
            const auto iy = indices_of(sy);
            // The coefficient rides on the first factor of each decomposable term.
            for (std::size_t a = 0; a < ix.size(); ++a) {
                const MultiVector xa = alg.section(ix[a], a == 0 ? f : one);
                const MultiVector rest_x =
                    phi.apply(MultiVector::basis(vars, n, sx & ~(IndexSet{1} << ix[a]), a == 0 ? one : f));
                for (std::size_t b = 0; b < iy.size(); ++b) {
                    const MultiVector yb = alg.section(iy[b], b == 0 ? g : one);
                    MultiVector term = bracket(alg, xa, yb);
                    if (term.is_zero()) continue;
                    const MultiVector rest_y =
                        phi.apply(MultiVector::basis(vars, n, sy & ~(IndexSet{1} << iy[b]), b == 0 ? one : g));
                    term = wedge(wedge(term, rest_x), rest_y);
                    const bool negate = ((a + b) % 2 == 1) != (flip && b > 0);
                    if (negate)
                        out -= term;
                    else
                        out += term;
                }
            }
        }
    }
    return out;
}

MultiForm interior(const HomLieAlgebroid& alg, const MultiVector& x, const MultiForm& xi)
{
    MultiForm out = interior(alg.bundle().phi(), alg.bundle().dagger(), x, xi);
    if (alg.mutation() == Mutation::interior_sign && x.grade() >= 2) out = -out;
    return out;
}

MultiVector interior(const HomLieAlgebroid& alg, const MultiForm& xi, const MultiVector& x)
{
    if (xi.grade() > x.grade())
        throw GradeError("interior product of a " + std::to_string(xi.grade()) + "-form into a grade " +
                         std::to_string(x.grade()) + " multivector");
    MultiVector out = contract(alg.bundle().dagger().apply(xi), alg.bundle().phi().apply(x));
    if (alg.mutation() == Mutation::interior_multivector_sign) out = -out;
    return out;
}

MultiVector lie_derivative(const HomLieAlgebroid& alg, const MultiVector& x, const MultiVector& y)
{
    require_section(alg, x, 1, "Lie derivative direction");
    return schouten(alg, x, y);
}

MultiForm lie_derivative(const HomLieAlgebroid& alg, const MultiVector& x, const MultiForm& xi)
{
    const unsigned k = x.grade();
    const unsigned m = xi.grade();
    if (m + 1 < k)
        throw GradeError("Lie derivative along a grade " + std::to_string(k) + " multivector of a " +
                         std::to_string(m) + "-form");
    const MultiForm shifted = alg.bundle().dagger_inverse().apply(xi);
    MultiForm out = interior(alg, x, differential(alg, shifted));
    if (m >= k) {
        MultiForm second = differential(alg, interior(alg, alg.bundle().phi_inverse().apply(x), shifted));
        const bool negate = (k % 2 == 0) != (alg.mutation() == Mutation::lie_form_sign);
        if (negate)
            out -= second;
        else
            out += second;
    }
    return out;
}

RationalMatrix ad_matrix(const RingAuto& sigma)
{
    const std::size_t n = sigma.variables()->size();
    RationalMatrix m(n, n);
    for (std::size_t mu = 0; mu < n; ++mu) {
        SigmaDerivation ad = SigmaDerivation::basis(sigma, mu).ad();
        for (std::size_t nu = 0; nu < n; ++nu) {
            const Poly& c = ad.coefficient(nu);
            if (!c.is_constant()) throw PreconditionError("Ad of a basis derivation has non-constant coefficients");
            m(nu, mu) = c.constant_value();
        }
    }
    return m;
}

HomLieAlgebroid tangent_algebroid(const RingAuto& sigma)
{
    const Variables& vars = sigma.variables();
    const unsigned n = static_cast<unsigned>(vars->size());
    std::vector<SigmaDerivation> basis;
    for (unsigned mu = 0; mu < n; ++mu) basis.push_back(SigmaDerivation::basis(sigma, mu));
    std::vector<Poly> c(static_cast<std::size_t>(n) * n * n, Poly(vars));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            SigmaDerivation b = sder_bracket(basis[i], basis[j]);
            for (unsigned k = 0; k < n; ++k) c[(i * n + j) * n + k] = b.coefficient(k);
        }
    HomBundle bundle(SemilinearMap(PolyMatrix::from_rational(vars, ad_matrix(sigma)), sigma));
    return HomLieAlgebroid(std::move(bundle), std::move(c), std::move(basis));
}

HomLieAlgebroid action_algebroid(const HomLieAlgebra& g, const std::vector<SigmaDerivation>& action)
{
    const unsigned n = g.dim();
    if (n == 0) throw std::invalid_argument("action of a zero-dimensional algebra");
    if (action.size() != n) throw std::invalid_argument("action needs one derivation per basis element");
    const RingAuto& sigma = action[0].sigma();
    for (const auto& r : action)
        if (!(r.sigma() == sigma)) throw VariableMismatch("action derivations use different automorphisms");
    auto rho = [&](const RationalVector& v) {
        SigmaDerivation out = SigmaDerivation::zero(sigma);
        for (unsigned k = 0; k < n; ++k)
            if (v[k] != 0) out += action[k].scaled(Poly::constant(sigma.variables(), v[k]));
        return out;
    };
    for (unsigned i = 0; i < n; ++i) {
        SigmaDerivation lhs = rho(g.twist().apply(g.basis_vector(i)));
        SigmaDerivation rhs = action[i].ad();
        if (!(lhs == rhs))
            throw PreconditionError("action is not twist-equivariant at " + basis_name(i) + ": rho(phi x) = " +
                                    lhs.to_string() + ", Ad(rho x) = " + rhs.to_string());
    }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            SigmaDerivation lhs = rho(g.bracket(g.basis_vector(i), g.basis_vector(j)));
            SigmaDerivation rhs = sder_bracket(action[i], action[j]);
            if (!(lhs == rhs))
                throw PreconditionError("action does not preserve the bracket at (" + basis_name(i) + ", " +
                                        basis_name(j) + "): rho([x,y]) = " + lhs.to_string() +
                                        ", [rho x, rho y] = " + rhs.to_string());
        }
    const Variables& vars = sigma.variables();
    std::vector<Poly> c;
    c.reserve(g.structure().size());
    for (const auto& v : g.structure()) c.push_back(Poly::constant(vars, v));
    HomBundle bundle(SemilinearMap(PolyMatrix::from_rational(vars, g.twist()), sigma));
    return HomLieAlgebroid(std::move(bundle), std::move(c), action);
}

HomLieAlgebroid twist_lie_algebroid(const HomLieAlgebroid& classical, const SemilinearMap& alpha)
{
    if (!classical.bundle().phi().is_identity())
        throw PreconditionError("twisting requires a classical Lie algebroid (identity twists)");
    const unsigned n = classical.rank();
    if (alpha.rank() != n) throw RankMismatch("twist map has the wrong rank");
    if (!same_variables(alpha.variables(), classical.variables()))
        throw VariableMismatch("twist map over a different ring");
    const RingAuto& sigma = alpha.twist();
    const Variables& vars = classical.variables();
    std::vector<MultiVector> image;
    for (unsigned i = 0; i < n; ++i) image.push_back(alpha.apply(classical.section(i, classical.function(1))));

    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            MultiVector lhs = alpha.apply(classical.basis_bracket(i, j));
            MultiVector rhs = bracket(classical, image[i], image[j]);
            if (!(lhs == rhs))
                throw PreconditionError("twist map is not a bracket morphism at (" + basis_name(i) + ", " +
                                        basis_name(j) + "): alpha[x,y] = " + lhs.to_string() +
                                        ", [alpha x, alpha y] = " + rhs.to_string());
        }
    for (unsigned i = 0; i < n; ++i) {
        SigmaDerivation a_image = anchor_of(classical, image[i]);
        for (std::size_t v = 0; v < vars->size(); ++v) {
            Poly x = Poly::variable(vars, v);
            Poly lhs = a_image.apply(sigma.apply(x));
            Poly rhs = sigma.apply(classical.anchor(i).apply(x));
            if (!(lhs == rhs))
                throw PreconditionError("anchor does not intertwine the twist at " + basis_name(i) + " on " +
                                        vars->name(v) + ": a(alpha x)(sigma f) = " + lhs.to_string() +
                                        ", sigma(a(x) f) = " + rhs.to_string());
        }
    }

    std::vector<Poly> c(static_cast<std::size_t>(n) * n * n, Poly(vars));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            MultiVector b = bracket(classical, image[i], image[j]);
            for (unsigned k = 0; k < n; ++k) c[(i * n + j) * n + k] = sigma.apply(b.component(IndexSet{1} << k));
        }
    std::vector<SigmaDerivation> anchor;
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Poly> h;
        for (const auto& coeff : classical.anchor(i).coefficients()) h.push_back(sigma.apply(coeff));
        anchor.emplace_back(sigma, std::move(h));
    }
    HomBundle bundle(SemilinearMap(alpha.matrix().map(sigma), sigma));
    return HomLieAlgebroid(std::move(bundle), std::move(c), std::move(anchor));
}

namespace {

void check_dgca_laws(const HomBundle& bundle, const DifferentialOracle& d, const SampleConfig& config)
{
    const unsigned n = bundle.rank();
    const Variables& vars = bundle.variables();
    const auto monomials = monomials_up_to(vars->size(), config.max_degree);
    auto fail = [](const std::string& law, const std::string& at, const std::string& lhs, const std::string& rhs) {
        throw PreconditionError("operator violates " + law + " at " + at + ": " + lhs + " != " + rhs);
    };
    auto element = [&](IndexSet set, const Monomial& m) {
        return MultiForm::basis(vars, n, set, Poly::monomial(vars, m));
    };
    for (unsigned k = 0; k <= n; ++k)
        for (IndexSet set : index_sets(n, k))
            for (const auto& m : monomials) {
                const MultiForm xi = element(set, m);
                const MultiForm dxi = d(xi);
                if (dxi.grade() != k + 1) fail("degree one", xi.to_string(), dxi.to_string(), "grade " + std::to_string(k + 1));
                const MultiForm ddxi = d(dxi);
                if (!ddxi.is_zero()) fail("d^2 = 0", xi.to_string(), ddxi.to_string(), "0");
                const MultiForm lhs = d(bundle.dagger().apply(xi));
                const MultiForm rhs = bundle.dagger().apply(dxi);
                if (!(lhs == rhs)) fail("d o phi^dagger = phi^dagger o d", xi.to_string(), lhs.to_string(), rhs.to_string());
            }
    for (unsigned k = 0; k <= n; ++k)
        for (unsigned l = 0; k + l <= n; ++l)
            for (IndexSet s1 : index_sets(n, k))
                for (IndexSet s2 : index_sets(n, l))
                    for_each_monomial_tuple(vars->size(), 2, config.max_degree, [&](const std::vector<Monomial>& m) {
                        const MultiForm xi = element(s1, m[0]);
                        const MultiForm theta = element(s2, m[1]);
                        const MultiForm lhs = d(wedge(xi, theta));
                        MultiForm rhs = wedge(d(xi), bundle.dagger().apply(theta));
                        MultiForm second = wedge(bundle.dagger().apply(xi), d(theta));
                        if (k % 2) rhs -= second;
                        else rhs += second;
                        if (!(lhs == rhs))
                            fail("the twisted graded Leibniz rule", xi.to_string() + ", " + theta.to_string(),
                                 lhs.to_string(), rhs.to_string());
                        return true;
                    });
}

} // namespace

HomLieAlgebroid reconstruct_from_differential(const HomBundle& bundle, const DifferentialOracle& d,
                                              const SampleConfig& config)
{
    check_dgca_laws(bundle, d, config);
    const unsigned n = bundle.rank();
    const Variables& vars = bundle.variables();
    const RingAuto& sigma = bundle.twist();

    std::vector<SigmaDerivation> anchor;
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Poly> h;
        for (std::size_t v = 0; v < vars->size(); ++v)
            h.push_back(d(MultiForm::scalar(n, Poly::variable(vars, v))).component(IndexSet{1} << i));
        anchor.emplace_back(sigma, std::move(h));
    }
    const PolyMatrix& p = bundle.phi().matrix();
    std::vector<SigmaDerivation> anchor_phi;
    for (unsigned i = 0; i < n; ++i) {
        SigmaDerivation a = SigmaDerivation::zero(sigma);
        for (unsigned k = 0; k < n; ++k)
            if (!p(k, i).is_zero()) a += anchor[k].scaled(p(k, i));
        anchor_phi.push_back(std::move(a));
    }
    std::vector<MultiVector> phi_e;
    for (unsigned i = 0; i < n; ++i) phi_e.push_back(bundle.phi().apply(MultiVector::basis(vars, n, IndexSet{1} << i)));

    std::vector<Poly> c(static_cast<std::size_t>(n) * n * n, Poly(vars));
    for (unsigned k = 0; k < n; ++k) {
        const MultiForm xi = bundle.dagger_inverse().apply(MultiForm::basis(vars, n, IndexSet{1} << k));
        const MultiForm dxi = d(xi);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                Poly value = -pair(dxi, wedge(phi_e[i], phi_e[j]));
                value += anchor_phi[i].apply(xi.component(IndexSet{1} << j));
                value -= anchor_phi[j].apply(xi.component(IndexSet{1} << i));
                c[(i * n + j) * n + k] = value;
            }
    }
    return HomLieAlgebroid(bundle, std::move(c), std::move(anchor));
}

VerificationReport verify_algebroid(const HomLieAlgebroid& alg, const SampleConfig& config)
{
    VerificationReport report;
    report.structure = "Hom-Lie algebroid of rank " + std::to_string(alg.rank());
    report.sample_degree = config.max_degree;
    const unsigned n = alg.rank();
    const Variables& vars = alg.variables();
    const std::size_t nv = vars->size();
    const RingAuto& sigma = alg.twist();
    const SemilinearMap& phi = alg.bundle().phi();
    auto mono = [&](const Monomial& m) { return Poly::monomial(vars, m); };
    auto sec = [&](unsigned i, const Monomial& m) { return alg.section(i, mono(m)); };

    AxiomCheck skew("bracket-skew", "Hom-Lie algebra of sections: [x,y] = -[y,x]");
    AxiomCheck morphism("twist-morphism", "Hom-Lie algebra of sections: phi[x,y] = [phi x, phi y]");
    AxiomCheck anchor_twist("anchor-twist", "anchor representation: a(phi x) o sigma = sigma o a(x)");
    for_each_monomial_tuple(nv, 2, config.max_degree, [&](const std::vector<Monomial>& m) {
        for (unsigned i = 0; i < n; ++i) {
            const MultiVector x = sec(i, m[0]);
            if (!anchor_twist.failed()) {
                const Poly f = mono(m[1]);
                anchor_twist.equal(anchor_of_twisted(alg, x).apply(sigma.apply(f)), sigma.apply(anchor_of(alg, x).apply(f)),
                                   [&] { return "x=" + x.to_string() + ", f=" + f.to_string(); });
            }
            for (unsigned j = 0; j < n; ++j) {
                const MultiVector y = sec(j, m[1]);
                const MultiVector xy = bracket(alg, x, y);
                if (!skew.failed())
                    skew.equal(xy, -bracket(alg, y, x), [&] { return "x=" + x.to_string() + ", y=" + y.to_string(); });
                if (!morphism.failed())
                    morphism.equal(phi.apply(xy), bracket(alg, phi.apply(x), phi.apply(y)),
                                   [&] { return "x=" + x.to_string() + ", y=" + y.to_string(); });
            }
        }
        return !(skew.failed() && morphism.failed() && anchor_twist.failed());
    });

    AxiomCheck jacobi("hom-jacobi", "Hom-Jacobi identity: [[x,y],phi z] + c.p. = 0");
    AxiomCheck leibniz("leibniz", "Hom-Lie algebroid (i): [x,fy] = sigma(f)[x,y] + a(phi x)(f) phi y");
    AxiomCheck anchor_bracket("anchor-bracket",
                              "anchor representation: a([x,y]) o sigma = a(phi x) a(y) - a(phi y) a(x)");
    for_each_monomial_tuple(nv, 3, config.max_degree, [&](const std::vector<Monomial>& m) {
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                const MultiVector x = sec(i, m[0]);
                const MultiVector y = sec(j, m[1]);
                const Poly f = mono(m[2]);
                if (!leibniz.failed()) {
                    MultiVector rhs = bracket(alg, x, y).scaled(sigma.apply(f)) +
                                      phi.apply(y).scaled(anchor_of_twisted(alg, x).apply(f));
                    leibniz.equal(bracket(alg, x, y.scaled(f)), rhs, [&] {
                        return "x=" + x.to_string() + ", y=" + y.to_string() + ", f=" + f.to_string();
                    });
                }
                if (!anchor_bracket.failed()) {
                    Poly lhs = anchor_of(alg, bracket(alg, x, y)).apply(sigma.apply(f));
                    Poly rhs = anchor_of_twisted(alg, x).apply(anchor_of(alg, y).apply(f)) -
                               anchor_of_twisted(alg, y).apply(anchor_of(alg, x).apply(f));
                    anchor_bracket.equal(lhs, rhs, [&] {
                        return "x=" + x.to_string() + ", y=" + y.to_string() + ", f=" + f.to_string();
                    });
                }
                if (jacobi.failed()) continue;
                for (unsigned k = 0; k < n; ++k) {
                    const MultiVector z = sec(k, m[2]);
                    MultiVector sum = bracket(alg, bracket(alg, x, y), phi.apply(z));
                    sum += bracket(alg, bracket(alg, y, z), phi.apply(x));
                    sum += bracket(alg, bracket(alg, z, x), phi.apply(y));
                    if (!jacobi.equal(sum, MultiVector(vars, n, 1), [&] {
                            return "x=" + x.to_string() + ", y=" + y.to_string() + ", z=" + z.to_string();
                        }))
                        break;
                }
            }
        return !(jacobi.failed() && leibniz.failed() && anchor_bracket.failed());
    });

    report.axioms = {skew.result(), morphism.result(), jacobi.result(),
                     leibniz.result(), anchor_twist.result(), anchor_bracket.result()};
    return report;
}

} // namespace homcalc
