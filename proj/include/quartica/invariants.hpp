#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quartica/multipoly.hpp"

namespace quartica {

/// Permutation of {0..n-1}; image[i] is where i goes. Acting on a
/// polynomial ring, variable i is replaced by variable image[i].
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> image);
    static Permutation identity(std::size_t n);
    /// Parses 1-based cycle notation such as "(1,2,3)" or "(1,2)(3,4)";
    /// "()" is the identity.
    static Permutation parse(const std::string& cycles, std::size_t n);

    std::size_t degree() const { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_[i]; }
    const std::vector<std::size_t>& image() const { return image_; }
    /// (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    Permutation inverse() const;
    bool is_identity() const;
    /// Cycle lengths including fixed points, sorted descending.
    std::vector<std::size_t> cycle_type() const;
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> image_;
};

/// Subgroup of S_n generated by a list of permutations, with its full
/// element list (sorted, identity first).
class PermGroup {
public:
    PermGroup(std::vector<Permutation> generators, std::size_t n);
    /// Generators as semicolon-separated cycle strings, e.g. "(1,2);(3,4)".
    static PermGroup parse(const std::string& generators, std::size_t n);
    static PermGroup symmetric(std::size_t n);

    std::size_t degree() const { return n_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    bool contains(const Permutation& p) const;

private:
    std::size_t n_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
};

/// Hilbert series of the invariant ring as numerator/denominator integer
/// polynomials (ascending, denominator constant term 1) together with the
/// exact expansion c_0..c_D.
struct MolienSeries {
    std::vector<Integer> numerator;
    std::vector<Integer> denominator;
    std::vector<Integer> coefficients;

    Integer operator[](std::size_t d) const { return coefficients.at(d); }
    std::string to_string() const;
};

MolienSeries molien(const PermGroup& group, std::size_t degree_cap);

/// Degree bound used when searching for generators: the group order capped
/// by max(n, n(n-1)/2), which bounds generator degrees for permutation
/// groups.
std::size_t invariant_degree_bound(const PermGroup& group);

/// f∘π: variable i replaced by variable π(i).
template <CoefficientField F>
MultiPoly<F> act(const MultiPoly<F>& f, const Permutation& pi) {
    if (pi.degree() != f.ring()->nvars()) throw std::invalid_argument("permutation degree differs from variable count");
    return f.permute_vars(pi.image());
}

template <CoefficientField F>
bool is_invariant(const MultiPoly<F>& f, const PermGroup& group) {
    for (const auto& g : group.generators())
        if (!(act(f, g) == f)) return false;
    return true;
}

/// First group element moving f, if any.
template <CoefficientField F>
std::optional<Permutation> invariance_witness(const MultiPoly<F>& f, const PermGroup& group) {
    for (const auto& g : group.generators())
        if (!(act(f, g) == f)) return g;
    return std::nullopt;
}

template <CoefficientField F>
MultiPoly<F> reynolds(const MultiPoly<F>& f, const PermGroup& group) {
    std::uint64_t ch = f.field().characteristic();
    if (ch != 0 && group.order() % ch == 0)
        throw std::domain_error("Reynolds operator undefined: characteristic " + std::to_string(ch) +
                                " divides the group order " + std::to_string(group.order()));
    MultiPoly<F> acc(f.ring());
    for (const auto& g : group.elements()) acc += act(f, g);
    return acc.scaled(f.field().one() / f.field().from_integer(static_cast<long>(group.order())));
}

/// Sum of the distinct images of a monomial.
template <CoefficientField F>
MultiPoly<F> orbit_sum(const Monomial& m, const std::shared_ptr<const PolyRing<F>>& ring, const PermGroup& group) {
    std::set<Monomial> orbit;
    for (const auto& g : group.elements()) {
        Monomial img(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) img[g(i)] = m[i];
        orbit.insert(img);
    }
    std::vector<typename MultiPoly<F>::Term> terms;
    for (const auto& o : orbit) terms.push_back({o, ring->field().one()});
    return MultiPoly<F>(ring, std::move(terms));
}

/// All monomials of total degree d in n variables, in descending lex order
/// on the exponent vector (x^d first).
std::vector<Monomial> monomials_of_degree(std::size_t n, std::size_t d);

/// Incrementally built linear span of polynomials; rows are kept with
/// distinct leading monomials so membership is a leading-term reduction.
template <CoefficientField F>
class LinearSpan {
public:
    /// Reduces f against the span; zero iff f lies in it.
    MultiPoly<F> reduce(MultiPoly<F> f) const {
        while (!f.is_zero()) {
            auto it = rows_.find(f.leading_monomial());
            if (it == rows_.end()) break;
            auto c = f.leading_coeff();
            f.sub_mul(c, Monomial(f.leading_monomial().size()), it->second);
        }
        // leading term is new; continue on the tail so the result is canonical
        if (f.is_zero()) return f;
        auto lead = MultiPoly<F>::term(f.ring(), f.leading_monomial(), f.leading_coeff());
        return lead + reduce(f - lead);
    }
    bool contains(const MultiPoly<F>& f) const { return reduce(f).is_zero(); }
    /// Adds f; returns true when the dimension grew.
    bool add(const MultiPoly<F>& f) {
        auto r = reduce(f);
        if (r.is_zero()) return false;
        r = r.monic();
        rows_.emplace(r.leading_monomial(), r);
        return true;
    }
    std::size_t dimension() const { return rows_.size(); }

private:
    std::map<Monomial, MultiPoly<F>> rows_;
};

/// Dimension of the degree-d invariant subspace computed directly: rank of
/// the Reynolds images of all degree-d monomials.
template <CoefficientField F>
std::size_t invariant_dimension(const std::shared_ptr<const PolyRing<F>>& ring, const PermGroup& group, std::size_t d) {
    LinearSpan<F> span;
    for (const auto& m : monomials_of_degree(ring->nvars(), d))
        span.add(reynolds(MultiPoly<F>::term(ring, m, ring->field().one()), group));
    return span.dimension();
}

/// Degree-d part of the algebra generated by `gens` (all homogeneous).
template <CoefficientField F>
LinearSpan<F> graded_piece(const std::vector<MultiPoly<F>>& gens, const std::shared_ptr<const PolyRing<F>>& ring,
                           std::size_t d) {
    LinearSpan<F> span;
    std::vector<std::size_t> deg;
    for (const auto& g : gens) deg.push_back(static_cast<std::size_t>(g.total_degree()));
    // depth-first over exponent vectors of the generators with weighted sum d
    auto one = MultiPoly<F>::constant(ring, ring->field().one());
    std::function<void(std::size_t, std::size_t, const MultiPoly<F>&)> rec = [&](std::size_t k, std::size_t left,
                                                                               const MultiPoly<F>& acc) {
        if (left == 0) {
            span.add(acc);
            return;
        }
        if (k == gens.size()) return;
        rec(k + 1, left, acc);
        if (deg[k] == 0 || deg[k] > left) return;
        rec(k, left - deg[k], acc * gens[k]);
    };
    rec(0, d, one);
    return span;
}

/// Homogeneous generators of the invariant ring, chosen greedily: for each
/// degree up to the bound, orbit sums of monomials (descending lex order)
/// are added while the graded piece of the generated algebra is smaller
/// than the Molien count.
template <CoefficientField F>
std::vector<MultiPoly<F>> fundamental_invariants(const std::shared_ptr<const PolyRing<F>>& ring,
                                                 const PermGroup& group) {
    if (group.degree() != ring->nvars()) throw std::invalid_argument("group degree differs from variable count");
    std::uint64_t ch = ring->field().characteristic();
    if (ch != 0 && group.order() % ch == 0) throw std::domain_error("characteristic divides the group order");
    std::size_t bound = invariant_degree_bound(group);
    auto series = molien(group, bound);
    std::vector<MultiPoly<F>> gens;
    for (std::size_t d = 1; d <= bound; ++d) {
        auto span = graded_piece(gens, ring, d);
        auto target = series[d];
        for (const auto& m : monomials_of_degree(ring->nvars(), d)) {
            if (Integer(static_cast<unsigned long>(span.dimension())) >= target) break;
            auto s = orbit_sum<F>(m, ring, group);
            if (span.add(s)) gens.push_back(s);
        }
        if (Integer(static_cast<unsigned long>(span.dimension())) != target)
            throw std::logic_error("invariant search fell short of the Molien count in degree " + std::to_string(d));
    }
    return gens;
}

}  // namespace quartica
