#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quartica/multipoly.hpp"
#include "quartica/upoly.hpp"

namespace quartica {

/// Remainder of f on division by G. Divisors are tried in list order on
/// the current leading term; terms no divisor handles move to the
/// remainder, so no term of the result is divisible by any leading term.
template <CoefficientField F>
MultiPoly<F> normal_form(MultiPoly<F> f, const std::vector<MultiPoly<F>>& G) {
    using Term = typename MultiPoly<F>::Term;
    std::vector<Term> rem;
    while (!f.is_zero()) {
        const auto& lt = f.leading_term();
        bool reduced = false;
        for (const auto& g : G) {
            if (g.is_zero() || !g.leading_monomial().divides(lt.mono)) continue;
            auto c = lt.coeff / g.leading_coeff();
            auto m = lt.mono / g.leading_monomial();
            f.sub_mul(c, m, g);
            reduced = true;
            break;
        }
        if (!reduced) rem.push_back(f.pop_leading());
    }
    return MultiPoly<F>::from_sorted(f.ring(), std::move(rem));
}

template <CoefficientField F>
MultiPoly<F> s_polynomial(const MultiPoly<F>& f, const MultiPoly<F>& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of a zero polynomial");
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    auto one = f.field().one();
    auto a = f.mul_term(l / f.leading_monomial(), one / f.leading_coeff());
    a.sub_mul(one / g.leading_coeff(), l / g.leading_monomial(), g);
    return a;
}

struct GroebnerStats {
    std::size_t pairs_total = 0;
    std::size_t skipped_coprime = 0;
    std::size_t skipped_chain = 0;
    std::size_t zero_reductions = 0;
};

template <CoefficientField F>
struct GroebnerBasis {
    std::vector<MultiPoly<F>> elements;
    GroebnerStats stats;
};

/// Interreduces a Gröbner basis into the reduced one: monic, minimal, each
/// element fully reduced by the others, sorted by descending leading term.
template <CoefficientField F>
std::vector<MultiPoly<F>> reduce_basis(std::vector<MultiPoly<F>> G) {
    std::erase_if(G, [](const auto& g) { return g.is_zero(); });
    std::vector<MultiPoly<F>> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j || !G[j].leading_monomial().divides(G[i].leading_monomial())) continue;
            // equal leading monomials: keep the first occurrence only
            redundant = G[j].leading_monomial() != G[i].leading_monomial() || j < i;
        }
        if (!redundant) minimal.push_back(G[i].monic());
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly<F>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        auto lead = MultiPoly<F>::term(minimal[i].ring(), minimal[i].leading_monomial(), minimal[i].leading_coeff());
        minimal[i] = (lead + normal_form(minimal[i] - lead, others)).monic();
    }
    if (!minimal.empty()) {
        const auto& R = *minimal.front().ring();
        std::sort(minimal.begin(), minimal.end(), [&R](const auto& a, const auto& b) {
            return R.compare(a.leading_monomial(), b.leading_monomial()) > 0;
        });
    }
    return minimal;
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree, then smallest index pair), the coprime criterion and the chain
/// criterion. Returns the reduced basis.
template <CoefficientField F>
GroebnerBasis<F> buchberger(const std::vector<MultiPoly<F>>& generators) {
    GroebnerBasis<F> out;
    std::vector<MultiPoly<F>> G;
    for (const auto& f : generators)
        if (!f.is_zero()) G.push_back(f.monic());
    if (G.empty()) return out;
    for (std::size_t i = 1; i < G.size(); ++i)
        if (!(*G[i].ring() == *G[0].ring())) throw std::invalid_argument("generators live in different rings");

    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});
    out.stats.pairs_total = pending.size();

    auto pair_lcm = [&G](const std::pair<std::size_t, std::size_t>& pr) {
        return lcm(G[pr.first].leading_monomial(), G[pr.second].leading_monomial());
    };
    auto is_pending = [&pending](std::size_t a, std::size_t b) {
        return pending.count({std::min(a, b), std::max(a, b)}) > 0;
    };

    while (!pending.empty()) {
        auto best = pending.begin();
        auto best_deg = pair_lcm(*best).total_degree();
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            auto d = pair_lcm(*it).total_degree();
            if (d < best_deg) {
                best = it;
                best_deg = d;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);
        const auto& li = G[i].leading_monomial();
        const auto& lj = G[j].leading_monomial();
        if (coprime(li, lj)) {
            ++out.stats.skipped_coprime;
            continue;
        }
        Monomial l = lcm(li, lj);
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k)
            chain = k != i && k != j && G[k].leading_monomial().divides(l) && !is_pending(i, k) && !is_pending(j, k);
        if (chain) {
            ++out.stats.skipped_chain;
            continue;
        }
        auto h = normal_form(s_polynomial(G[i], G[j]), G);
        if (h.is_zero()) {
            ++out.stats.zero_reductions;
            continue;
        }
        G.push_back(h.monic());
        std::size_t n = G.size() - 1;
        for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
        out.stats.pairs_total += n;
    }
    out.elements = reduce_basis(std::move(G));
    return out;
}

/// Buchberger's criterion checked exhaustively: every S-polynomial of G
/// reduces to zero modulo G.
template <CoefficientField F>
bool is_groebner_basis(const std::vector<MultiPoly<F>>& G) {
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j)
            if (!normal_form(s_polynomial(G[i], G[j]), G).is_zero()) return false;
    return true;
}

/// True when G is the reduced basis of its ideal: monic, no term of any
/// element divisible by another element's leading term, and a Gröbner basis.
template <CoefficientField F>
bool is_reduced_groebner_basis(const std::vector<MultiPoly<F>>& G) {
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero() || !(G[i].leading_coeff() == G[i].field().one())) return false;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : G[i].terms())
                if (G[j].leading_monomial().divides(t.mono)) return false;
        }
    }
    return is_groebner_basis(G);
}

template <CoefficientField F>
bool ideal_member(const MultiPoly<F>& f, const std::vector<MultiPoly<F>>& generators) {
    auto gb = buchberger(generators);
    return normal_form(f, gb.elements).is_zero();
}

/// Generators of <I> ∩ K[keep]. The basis is computed under an elimination
/// order placing the discarded variables first (Block by default, Lex on
/// request); the surviving elements are returned as a reduced basis in the
/// ring K[keep] under lex in the order `keep` is given.
template <CoefficientField F>
std::vector<MultiPoly<F>> eliminate(const std::vector<MultiPoly<F>>& generators, const std::vector<std::string>& keep,
                                    OrderKind kind = OrderKind::Block) {
    if (generators.empty()) throw std::invalid_argument("eliminate needs at least one generator");
    const auto& R = generators.front().ring();
    std::vector<std::string> priority;
    for (const auto& v : R->vars())
        if (std::find(keep.begin(), keep.end(), v) == keep.end()) priority.push_back(v);
    std::size_t discarded = priority.size();
    for (const auto& v : keep) {
        R->index_of(v);
        priority.push_back(v);
    }
    MonomialOrder order = kind == OrderKind::Lex ? MonomialOrder::lex(priority)
                                                 : MonomialOrder::block_order(priority, discarded);
    auto elim_ring = R->with_order(order);
    std::vector<MultiPoly<F>> gens;
    for (const auto& g : generators) gens.push_back(g.to_ring(elim_ring));
    auto gb = buchberger(gens);

    auto keep_ring = PolyRing<F>::make(keep, R->field(), MonomialOrder::lex(keep));
    std::vector<std::size_t> keep_idx;
    for (const auto& v : keep) keep_idx.push_back(elim_ring->index_of(v));
    std::vector<MultiPoly<F>> kept;
    for (const auto& g : gb.elements)
        if (g.involves_only(keep_idx)) kept.push_back(g.to_ring(keep_ring));
    return buchberger(kept).elements;
}

/// Monomials not divisible by any leading monomial of G (the standard
/// monomials). Throws when the set is infinite, i.e. the ideal is not
/// zero-dimensional.
template <CoefficientField F>
std::vector<Monomial> standard_monomials(const std::vector<MultiPoly<F>>& G) {
    if (G.empty()) throw std::invalid_argument("standard monomials of the zero ideal are infinite");
    std::size_t n = G.front().ring()->nvars();
    std::vector<std::uint32_t> bound(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (const auto& g : G) {
            const auto& lm = g.leading_monomial();
            bool pure = true;
            for (std::size_t k = 0; k < n; ++k)
                if (k != v && lm[k]) pure = false;
            if (pure && lm[v] > 0 && (bound[v] == 0 || lm[v] < bound[v])) bound[v] = lm[v];
        }
        if (bound[v] == 0 && !(G.size() == 1 && G[0].is_constant()))
            throw std::domain_error("ideal is not zero-dimensional (no pure power of " + G.front().ring()->vars()[v] +
                                    " among leading terms)");
    }
    std::vector<Monomial> out;
    for (const auto& g : G)
        if (g.is_constant()) return out;
    Monomial m(n);
    for (;;) {
        bool standard = std::none_of(G.begin(), G.end(), [&m](const auto& g) { return g.leading_monomial().divides(m); });
        if (standard) out.push_back(m);
        std::size_t k = 0;
        while (k < n && ++m[k] >= bound[k]) m[k++] = 0;
        if (k == n) break;
    }
    return out;
}

/// dim_K K[x]/I for a zero-dimensional ideal given by a Gröbner basis.
template <CoefficientField F>
std::size_t quotient_dimension(const std::vector<MultiPoly<F>>& G) {
    return standard_monomials(G).size();
}

/// Converts a polynomial involving only variable `var` into a UPoly.
template <CoefficientField F>
UPoly<F> to_univariate(const MultiPoly<F>& p, std::size_t var) {
    std::vector<typename F::value_type> c(static_cast<std::size_t>(std::max<std::int64_t>(0, p.degree_in(var) + 1)),
                                          p.field().zero());
    for (const auto& t : p.terms()) {
        for (std::size_t k = 0; k < t.mono.size(); ++k)
            if (k != var && t.mono[k]) throw std::invalid_argument("polynomial is not univariate");
        c[t.mono[var]] = t.coeff;
    }
    return UPoly<F>(p.field(), std::move(c));
}

template <CoefficientField F>
MultiPoly<F> from_univariate(const UPoly<F>& u, const std::shared_ptr<const PolyRing<F>>& ring, std::size_t var) {
    std::vector<typename MultiPoly<F>::Term> terms;
    for (std::size_t e = 0; e < u.coeffs().size(); ++e) {
        Monomial m(ring->nvars());
        m[var] = static_cast<std::uint32_t>(e);
        terms.push_back({std::move(m), u.coeffs()[e]});
    }
    return MultiPoly<F>(ring, std::move(terms));
}

/// Monic generator of <I> ∩ K[var]; zero when the intersection is trivial.
template <CoefficientField F>
UPoly<F> univariate_eliminant(const std::vector<MultiPoly<F>>& generators, const std::string& var) {
    auto e = eliminate(generators, {var});
    if (e.empty()) return UPoly<F>(generators.front().field());
    return to_univariate(e.front(), 0);
}

/// Radical of a zero-dimensional ideal (characteristic 0 or large
/// characteristic): adjoin the squarefree part of each univariate eliminant.
/// Returns the reduced basis of the radical in the original ring.
template <CoefficientField F>
std::vector<MultiPoly<F>> radical_zero_dim(const std::vector<MultiPoly<F>>& generators) {
    const auto& R = generators.front().ring();
    std::vector<MultiPoly<F>> gens = generators;
    for (std::size_t v = 0; v < R->nvars(); ++v) {
        auto u = univariate_eliminant(generators, R->vars()[v]);
        if (u.is_zero()) throw std::domain_error("ideal is not zero-dimensional in " + R->vars()[v]);
        gens.push_back(from_univariate(squarefree_part(u), R, v));
    }
    return buchberger(gens).elements;
}

}  // namespace quartica
