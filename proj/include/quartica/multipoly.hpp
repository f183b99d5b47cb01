#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quartica/field.hpp"

namespace quartica {

/// Exponent vector, one entry per ring variable.
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    std::size_t size() const { return exps.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps[i]; }
    std::uint64_t total_degree() const {
        return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
    }
    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > o.exps[i]) return false;
        return true;
    }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.exps[i] = a.exps[i] + b.exps[i];
        return r;
    }
    /// a / b; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.exps[i] = a.exps[i] - b.exps[i];
        return r;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.exps[i] && b.exps[i]) return false;
    return true;
}

enum class OrderKind { Lex, GrevLex, Block };

/// Lexicographic or graded-reverse-lexicographic order with an explicit
/// variable priority (highest first). Elimination orders put the variables
/// to eliminate first, either under plain Lex or as a Block order: the first
/// `block` priority variables compared by grevlex, ties broken by grevlex on
/// the rest. An empty priority list means declaration order.
struct MonomialOrder {
    OrderKind kind = OrderKind::Lex;
    std::vector<std::string> priority;
    std::size_t block = 0;

    static MonomialOrder lex(std::vector<std::string> vars = {}) {
        return {OrderKind::Lex, std::move(vars)};
    }
    static MonomialOrder grevlex(std::vector<std::string> vars = {}) {
        return {OrderKind::GrevLex, std::move(vars)};
    }
    static MonomialOrder block_order(std::vector<std::string> vars, std::size_t first_block) {
        return {OrderKind::Block, std::move(vars), first_block};
    }
    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Variable names, coefficient field and term order of a polynomial ring.
template <CoefficientField F>
class PolyRing {
public:
    PolyRing(std::vector<std::string> vars, F field, MonomialOrder order = {})
        : vars_(std::move(vars)), field_(std::move(field)), order_(std::move(order)) {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (vars_[i] == vars_[j]) throw std::invalid_argument("duplicate variable " + vars_[i]);
        if (order_.kind == OrderKind::Block && order_.block > vars_.size())
            throw std::invalid_argument("block size exceeds variable count");
        if (order_.priority.empty()) {
            rank_.resize(vars_.size());
            std::iota(rank_.begin(), rank_.end(), 0);
        } else {
            if (order_.priority.size() != vars_.size())
                throw std::invalid_argument("monomial order must rank every ring variable");
            for (const auto& v : order_.priority) rank_.push_back(index_of(v));
            auto sorted = rank_;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw std::invalid_argument("monomial order lists a variable twice");
        }
    }

    static std::shared_ptr<const PolyRing> make(std::vector<std::string> vars, F field = F{},
                                                MonomialOrder order = {}) {
        return std::make_shared<const PolyRing>(std::move(vars), std::move(field), std::move(order));
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const F& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }

    std::size_t index_of(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw std::invalid_argument("variable '" + name + "' not in ring");
        return static_cast<std::size_t>(it - vars_.begin());
    }
    bool has_var(const std::string& name) const {
        return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
    }

    /// Three-way comparison of monomials under the ring order.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (order_.kind) {
            case OrderKind::GrevLex:
                return grevlex(a, b, 0, rank_.size());
            case OrderKind::Block:
                if (int c = grevlex(a, b, 0, order_.block)) return c;
                return grevlex(a, b, order_.block, rank_.size());
            case OrderKind::Lex:
                break;
        }
        for (auto i : rank_)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    std::string describe() const {
        std::string s = field_.name() + "[";
        for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
        return s + "]";
    }

    friend bool operator==(const PolyRing& a, const PolyRing& b) {
        return a.vars_ == b.vars_ && a.field_ == b.field_ && a.rank_ == b.rank_ &&
               a.order_.kind == b.order_.kind && a.order_.block == b.order_.block;
    }

    /// Same variables and field under a different order.
    std::shared_ptr<const PolyRing> with_order(MonomialOrder order) const {
        return make(vars_, field_, std::move(order));
    }

private:
    // grevlex restricted to the priority positions [lo, hi).
    int grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
        std::uint64_t da = 0, db = 0;
        for (std::size_t k = lo; k < hi; ++k) {
            da += a[rank_[k]];
            db += b[rank_[k]];
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t k = hi; k-- > lo;) {
            auto i = rank_[k];
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }

    std::vector<std::string> vars_;
    F field_;
    MonomialOrder order_;
    std::vector<std::size_t> rank_;
};

/// Sparse multivariate polynomial. Terms are kept sorted in strictly
/// descending order under the ring's monomial order with no zero
/// coefficients, so structural equality is polynomial equality.
template <CoefficientField F>
class MultiPoly {
public:
    using K = typename F::value_type;
    using Ring = PolyRing<F>;
    using RingPtr = std::shared_ptr<const Ring>;
    struct Term {
        Monomial mono;
        K coeff;
    };

    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
    MultiPoly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
        normalize();
    }

    static MultiPoly constant(RingPtr ring, K c) {
        Monomial one(ring->nvars());
        return MultiPoly(ring, {Term{std::move(one), std::move(c)}});
    }
    static MultiPoly variable(RingPtr ring, const std::string& name) {
        Monomial m(ring->nvars());
        m[ring->index_of(name)] = 1;
        auto one = ring->field().one();
        return MultiPoly(ring, {Term{std::move(m), std::move(one)}});
    }
    static MultiPoly term(RingPtr ring, Monomial m, K c) {
        return MultiPoly(ring, {Term{std::move(m), std::move(c)}});
    }

    const RingPtr& ring() const { return ring_; }
    const F& field() const { return ring_->field(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    const Monomial& leading_monomial() const { require_nonzero(); return terms_.front().mono; }
    const K& leading_coeff() const { require_nonzero(); return terms_.front().coeff; }
    const Term& leading_term() const { require_nonzero(); return terms_.front(); }

    std::int64_t total_degree() const {
        std::int64_t d = -1;
        for (const auto& t : terms_) d = std::max<std::int64_t>(d, static_cast<std::int64_t>(t.mono.total_degree()));
        return d;
    }
    std::int64_t degree_in(std::size_t var) const {
        std::int64_t d = -1;
        for (const auto& t : terms_) d = std::max<std::int64_t>(d, t.mono[var]);
        return d;
    }
    std::int64_t degree_in(const std::string& var) const { return degree_in(ring_->index_of(var)); }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        auto d = terms_.front().mono.total_degree();
        return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.total_degree() == d; });
    }
    /// True when only variables in `vars` (indices) occur.
    bool involves_only(const std::vector<std::size_t>& vars) const {
        for (const auto& t : terms_)
            for (std::size_t i = 0; i < t.mono.size(); ++i)
                if (t.mono[i] && std::find(vars.begin(), vars.end(), i) == vars.end()) return false;
        return true;
    }
    K coeff_of(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mono == m) return t.coeff;
        return field().zero();
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }
    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check_ring(a, b);
        std::vector<Term> out;
        out.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) out.push_back(Term{s.mono * t.mono, s.coeff * t.coeff});
        return MultiPoly(a.ring_, std::move(out));
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (!(*a.ring_ == *b.ring_) || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
        return true;
    }

    MultiPoly scaled(const K& c) const {
        if (detail::element_is_zero(c)) return MultiPoly(ring_);
        MultiPoly r = *this;
        for (auto& t : r.terms_) t.coeff = t.coeff * c;
        return r;
    }
    /// Multiplies by c * m; order is multiplicative so no resort is needed.
    MultiPoly mul_term(const Monomial& m, const K& c) const {
        if (detail::element_is_zero(c)) return MultiPoly(ring_);
        MultiPoly r = *this;
        for (auto& t : r.terms_) {
            t.mono = t.mono * m;
            t.coeff = t.coeff * c;
        }
        return r;
    }
    MultiPoly monic() const {
        if (is_zero()) return *this;
        return scaled(field().one() / leading_coeff());
    }
    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(ring_, field().one()), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    /// Subtracts c*m*g in place (the reduction step of division).
    void sub_mul(const K& c, const Monomial& m, const MultiPoly& g) {
        std::vector<Term> out;
        out.reserve(terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        const Ring& R = *ring_;
        while (i < terms_.size() || j < g.terms_.size()) {
            if (j == g.terms_.size()) {
                out.push_back(std::move(terms_[i++]));
                continue;
            }
            Monomial gm = g.terms_[j].mono * m;
            int cmp = i == terms_.size() ? -1 : R.compare(terms_[i].mono, gm);
            if (cmp > 0) {
                out.push_back(std::move(terms_[i++]));
            } else if (cmp < 0) {
                out.push_back(Term{std::move(gm), -(c * g.terms_[j].coeff)});
                ++j;
            } else {
                K v = terms_[i].coeff - c * g.terms_[j].coeff;
                if (!detail::element_is_zero(v)) out.push_back(Term{std::move(gm), std::move(v)});
                ++i;
                ++j;
            }
        }
        terms_ = std::move(out);
    }

    K evaluate(const std::vector<K>& point) const {
        if (point.size() != ring_->nvars()) throw std::invalid_argument("evaluation point has wrong arity");
        K acc = field().zero();
        for (const auto& t : terms_) {
            K v = t.coeff;
            for (std::size_t i = 0; i < point.size(); ++i)
                for (std::uint32_t e = 0; e < t.mono[i]; ++e) v = v * point[i];
            acc = acc + v;
        }
        return acc;
    }

    MultiPoly derivative(std::size_t var) const {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            if (t.mono[var] == 0) continue;
            Monomial m = t.mono;
            K c = t.coeff * field().from_integer(static_cast<long>(m[var]));
            m[var] -= 1;
            out.push_back(Term{std::move(m), std::move(c)});
        }
        return MultiPoly(ring_, std::move(out));
    }
    MultiPoly derivative(const std::string& var) const { return derivative(ring_->index_of(var)); }

    /// Re-expresses the polynomial in another ring containing (by name)
    /// every variable that occurs here.
    MultiPoly to_ring(const RingPtr& target) const {
        std::vector<std::optional<std::size_t>> map(ring_->nvars());
        for (std::size_t i = 0; i < ring_->nvars(); ++i)
            if (target->has_var(ring_->vars()[i])) map[i] = target->index_of(ring_->vars()[i]);
        std::vector<Term> out;
        for (const auto& t : terms_) {
            Monomial m(target->nvars());
            for (std::size_t i = 0; i < t.mono.size(); ++i) {
                if (!t.mono[i]) continue;
                if (!map[i])
                    throw std::invalid_argument("variable '" + ring_->vars()[i] + "' missing from target ring " +
                                                target->describe());
                m[*map[i]] = t.mono[i];
            }
            out.push_back(Term{std::move(m), t.coeff});
        }
        return MultiPoly(target, std::move(out));
    }

    /// Polynomial substitution: variable i is replaced by images[i], all
    /// images living in a common target ring.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const {
        if (images.size() != ring_->nvars()) throw std::invalid_argument("substitution needs one image per variable");
        const RingPtr& target = images.front().ring();
        std::vector<std::vector<MultiPoly>> powers(images.size());
        auto power = [&](std::size_t i, std::uint32_t e) -> const MultiPoly& {
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(constant(target, target->field().one()));
            while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
            return cache[e];
        };
        MultiPoly acc(target);
        for (const auto& t : terms_) {
            MultiPoly v = constant(target, t.coeff);
            for (std::size_t i = 0; i < t.mono.size(); ++i)
                if (t.mono[i]) v *= power(i, t.mono[i]);
            acc += v;
        }
        return acc;
    }

    /// Permutes variables: variable i is sent to variable image[i].
    MultiPoly permute_vars(const std::vector<std::size_t>& image) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m(t.mono.size());
            for (std::size_t i = 0; i < t.mono.size(); ++i) m[image[i]] = t.mono[i];
            out.push_back(Term{std::move(m), t.coeff});
        }
        return MultiPoly(ring_, std::move(out));
    }

    /// Removes and returns the leading term.
    Term pop_leading() {
        require_nonzero();
        Term t = std::move(terms_.front());
        terms_.erase(terms_.begin());
        return t;
    }
    /// Builds from terms already sorted descending with no zero or repeated
    /// monomials (skips normalization).
    static MultiPoly from_sorted(RingPtr ring, std::vector<Term> terms) {
        MultiPoly r(std::move(ring));
        r.terms_ = std::move(terms);
        return r;
    }

    std::string to_string() const;

private:
    void require_nonzero() const {
        if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    }
    static void check_ring(const MultiPoly& a, const MultiPoly& b) {
        if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_))
            throw std::invalid_argument("ring mismatch: " + a.ring_->describe() + " vs " + b.ring_->describe());
    }
    static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
        check_ring(a, b);
        std::vector<Term> out;
        out.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        const Ring& R = *a.ring_;
        auto take_b = [&](const Term& t) { out.push_back(Term{t.mono, subtract ? -t.coeff : t.coeff}); };
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size()) {
                out.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size()) {
                take_b(b.terms_[j++]);
            } else {
                int cmp = R.compare(a.terms_[i].mono, b.terms_[j].mono);
                if (cmp > 0) {
                    out.push_back(a.terms_[i++]);
                } else if (cmp < 0) {
                    take_b(b.terms_[j++]);
                } else {
                    K v = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
                    if (!detail::element_is_zero(v)) out.push_back(Term{a.terms_[i].mono, std::move(v)});
                    ++i;
                    ++j;
                }
            }
        }
        MultiPoly r(a.ring_);
        r.terms_ = std::move(out);
        return r;
    }
    void normalize() {
        for (const auto& t : terms_)
            if (t.mono.size() != ring_->nvars()) throw std::invalid_argument("monomial arity does not match ring");
        const Ring& R = *ring_;
        std::sort(terms_.begin(), terms_.end(),
                  [&R](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono)
                out.back().coeff = out.back().coeff + t.coeff;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Term& t) { return detail::element_is_zero(t.coeff); });
        terms_ = std::move(out);
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

template <CoefficientField F>
std::string MultiPoly<F>::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = detail::element_to_string(t.coeff);
        bool compound = c.find_first_of("+- ", 1) != std::string::npos;
        bool negative = !compound && !c.empty() && c[0] == '-';
        if (negative) c = c.substr(1);
        if (compound) c = "(" + c + ")";
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (!t.mono[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->vars()[i];
            if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
        }
        if (mono.empty())
            os << c;
        else if (c == "1")
            os << mono;
        else
            os << c << "*" << mono;
    }
    return os.str();
}

template <CoefficientField F>
std::ostream& operator<<(std::ostream& os, const MultiPoly<F>& p) {
    return os << p.to_string();
}

/// A quotient num/den of polynomials in one ring.
template <CoefficientField F>
struct RationalFunction {
    MultiPoly<F> num;
    MultiPoly<F> den;

    static RationalFunction polynomial(MultiPoly<F> p) {
        auto one = MultiPoly<F>::constant(p.ring(), p.field().one());
        return {std::move(p), std::move(one)};
    }
};

/// Substitutes rational functions for variables and clears denominators.
/// Variables absent from `images` are carried over by name into the target
/// ring. With images n_i/d_i the result is
///   num = sum_t c_t prod_i n_i^{e_i} d_i^{D_i - e_i},  den = prod_i d_i^{D_i}
/// where D_i is the degree of p in variable i, so polynomial images give
/// den = 1.
template <CoefficientField F>
RationalFunction<F> substitute(const MultiPoly<F>& p, const std::map<std::string, RationalFunction<F>>& images,
                               const std::shared_ptr<const PolyRing<F>>& target) {
    const auto& R = *p.ring();
    for (const auto& [name, rf] : images) {
        if (!R.has_var(name)) throw std::invalid_argument("substitution for undeclared variable '" + name + "'");
        if (rf.den.is_zero()) throw std::domain_error("zero denominator in image of '" + name + "'");
    }
    std::vector<RationalFunction<F>> img;
    for (std::size_t i = 0; i < R.nvars(); ++i) {
        auto it = images.find(R.vars()[i]);
        if (it != images.end())
            img.push_back({it->second.num.to_ring(target), it->second.den.to_ring(target)});
        else
            img.push_back(RationalFunction<F>::polynomial(MultiPoly<F>::variable(target, R.vars()[i])));
    }
    auto one = MultiPoly<F>::constant(target, target->field().one());
    std::vector<std::int64_t> deg(R.nvars());
    std::vector<std::vector<MultiPoly<F>>> npow(R.nvars()), dpow(R.nvars());
    MultiPoly<F> den = one;
    for (std::size_t i = 0; i < R.nvars(); ++i) {
        deg[i] = std::max<std::int64_t>(0, p.degree_in(i));
        npow[i].push_back(one);
        dpow[i].push_back(one);
        for (std::int64_t e = 1; e <= deg[i]; ++e) {
            npow[i].push_back(npow[i].back() * img[i].num);
            dpow[i].push_back(dpow[i].back() * img[i].den);
        }
        den *= dpow[i][deg[i]];
    }
    MultiPoly<F> num(target);
    for (const auto& t : p.terms()) {
        MultiPoly<F> v = MultiPoly<F>::constant(target, t.coeff);
        for (std::size_t i = 0; i < R.nvars(); ++i) {
            if (deg[i] == 0) continue;
            v *= npow[i][t.mono[i]];
            v *= dpow[i][deg[i] - t.mono[i]];
        }
        num += v;
    }
    return {std::move(num), std::move(den)};
}

/// Homogenizes with respect to `var`, which must be a ring variable not
/// occurring in p.
template <CoefficientField F>
MultiPoly<F> homogenize(const MultiPoly<F>& p, const std::string& var) {
    std::size_t h = p.ring()->index_of(var);
    if (p.degree_in(h) > 0) throw std::invalid_argument("homogenizing variable '" + var + "' already occurs");
    auto d = static_cast<std::uint32_t>(std::max<std::int64_t>(0, p.total_degree()));
    std::vector<typename MultiPoly<F>::Term> out;
    for (const auto& t : p.terms()) {
        Monomial m = t.mono;
        m[h] = d - static_cast<std::uint32_t>(m.total_degree());
        out.push_back({std::move(m), t.coeff});
    }
    return MultiPoly<F>(p.ring(), std::move(out));
}

/// Sets `var` to 1 (same ring).
template <CoefficientField F>
MultiPoly<F> dehomogenize(const MultiPoly<F>& p, const std::string& var) {
    std::size_t h = p.ring()->index_of(var);
    std::vector<typename MultiPoly<F>::Term> out;
    for (const auto& t : p.terms()) {
        Monomial m = t.mono;
        m[h] = 0;
        out.push_back({std::move(m), t.coeff});
    }
    return MultiPoly<F>(p.ring(), std::move(out));
}

using QRing = PolyRing<RationalField>;
using QRingPtr = std::shared_ptr<const QRing>;
using QPoly = MultiPoly<RationalField>;

/// Integer-coefficient representative of the line through p: denominators
/// cleared, content removed, leading coefficient positive.
inline QPoly primitive_part(const QPoly& p) {
    if (p.is_zero()) return p;
    Integer den = 1, content = 0;
    for (const auto& t : p.terms()) den = lcm(den, t.coeff.den());
    for (const auto& t : p.terms()) content = gcd(content, Integer(t.coeff.num() * (den / t.coeff.den())));
    Rational scale(den, content);
    if (p.leading_coeff().sign() < 0) scale = -scale;
    return p.scaled(scale);
}

}  // namespace quartica
