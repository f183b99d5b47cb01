#include "quartica/invariants.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "quartica/upoly.hpp"

namespace quartica {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (auto v : image_) {
        if (v >= image_.size() || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::parse(const std::string& cycles, std::size_t n) {
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = i;
    std::vector<std::size_t> moved(n, 0);
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad cycle notation '" + cycles + "': " + why);
    };
    while (pos < cycles.size()) {
        if (std::isspace(static_cast<unsigned char>(cycles[pos]))) {
            ++pos;
            continue;
        }
        if (cycles[pos] != '(') fail("expected '('");
        auto close = cycles.find(')', pos);
        if (close == std::string::npos) fail("unbalanced parenthesis");
        std::vector<std::size_t> cyc;
        std::stringstream ss(cycles.substr(pos + 1, close - pos - 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
            if (item.empty()) continue;
            std::size_t v = 0;
            try {
                v = std::stoul(item);
            } catch (const std::exception&) {
                fail("non-numeric point '" + item + "'");
            }
            if (v < 1 || v > n) fail("point " + item + " outside 1.." + std::to_string(n));
            if (moved[v - 1]++) fail("point " + item + " repeated");
            cyc.push_back(v - 1);
        }
        for (std::size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
        pos = close + 1;
    }
    return Permutation(std::move(img));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    std::vector<std::size_t> img(a.degree());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = a(b(i));
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> img(degree());
    for (std::size_t i = 0; i < img.size(); ++i) img[image_[i]] = i;
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[i] != i) return false;
    return true;
}

std::vector<std::size_t> Permutation::cycle_type() const {
    std::vector<bool> seen(degree(), false);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = image_[j]) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::string Permutation::to_string() const {
    std::string s;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
        if (seen[i] || image_[i] == i) continue;
        s += "(";
        for (std::size_t j = i; !seen[j]; j = image_[j]) {
            seen[j] = true;
            s += (j == i ? "" : ",") + std::to_string(j + 1);
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

PermGroup::PermGroup(std::vector<Permutation> generators, std::size_t n)
    : n_(n), generators_(std::move(generators)) {
    for (const auto& g : generators_)
        if (g.degree() != n) throw std::invalid_argument("generator degree differs from group degree");
    std::set<Permutation> seen{Permutation::identity(n)};
    std::deque<Permutation> queue{Permutation::identity(n)};
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        for (const auto& g : generators_) {
            auto next = g * cur;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    elements_.assign(seen.begin(), seen.end());
}

PermGroup PermGroup::parse(const std::string& generators, std::size_t n) {
    std::vector<Permutation> gens;
    std::stringstream ss(generators);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (item.find_first_not_of(" \t") != std::string::npos) gens.push_back(Permutation::parse(item, n));
    return PermGroup(std::move(gens), n);
}

PermGroup PermGroup::symmetric(std::size_t n) {
    std::vector<Permutation> gens;
    if (n >= 2) {
        std::vector<std::size_t> swap(n), cycle(n);
        for (std::size_t i = 0; i < n; ++i) {
            swap[i] = i;
            cycle[i] = (i + 1) % n;
        }
        std::swap(swap[0], swap[1]);
        gens.emplace_back(swap);
        gens.emplace_back(cycle);
    }
    return PermGroup(std::move(gens), n);
}

bool PermGroup::contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t invariant_degree_bound(const PermGroup& group) {
    std::size_t n = group.degree();
    return std::min(group.order(), std::max(n, n * (n - 1) / 2));
}

std::vector<Monomial> monomials_of_degree(std::size_t n, std::size_t d) {
    std::vector<Monomial> out;
    if (n == 0) {
        if (d == 0) out.emplace_back(0);
        return out;
    }
    Monomial m(n);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t left) {
        if (k == n - 1) {
            m[k] = static_cast<std::uint32_t>(left);
            out.push_back(m);
            return;
        }
        for (std::size_t e = left + 1; e-- > 0;) {
            m[k] = static_cast<std::uint32_t>(e);
            rec(k + 1, left - e);
        }
    };
    rec(0, d);
    return out;
}

namespace {

using ZPoly = std::vector<Integer>;

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    ZPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

ZPoly one_minus_z_pow(std::size_t l) {
    ZPoly p(l + 1, 0);
    p[0] = 1;
    p[l] = -1;
    return p;
}

UPoly<RationalField> to_q(const ZPoly& p) {
    std::vector<Rational> c;
    for (const auto& v : p) c.emplace_back(v);
    return UPoly<RationalField>(RationalField{}, std::move(c));
}

}  // namespace

MolienSeries molien(const PermGroup& group, std::size_t degree_cap) {
    // group elements by cycle type
    std::map<std::vector<std::size_t>, std::size_t> types;
    for (const auto& g : group.elements()) ++types[g.cycle_type()];

    MolienSeries out;
    // series: sum over types of count * prod 1/(1 - z^l), truncated
    std::vector<Integer> total(degree_cap + 1, 0);
    for (const auto& [type, count] : types) {
        std::vector<Integer> s(degree_cap + 1, 0);
        s[0] = 1;
        for (auto l : type)
            for (std::size_t d = l; d <= degree_cap; ++d) s[d] += s[d - l];
        for (std::size_t d = 0; d <= degree_cap; ++d) total[d] += s[d] * static_cast<unsigned long>(count);
    }
    for (auto& v : total) {
        if (v % static_cast<unsigned long>(group.order()) != 0)
            throw std::logic_error("Molien coefficient not integral");
        v /= static_cast<unsigned long>(group.order());
    }
    out.coefficients = std::move(total);

    // closed form: common denominator via lcm of the per-type denominators
    auto lcm_poly = to_q(ZPoly{1});
    std::vector<std::pair<UPoly<RationalField>, std::size_t>> dens;
    for (const auto& [type, count] : types) {
        ZPoly d{1};
        for (auto l : type) d = mul(d, one_minus_z_pow(l));
        auto q = to_q(d);
        dens.emplace_back(q, count);
        lcm_poly = lcm_poly * q / gcd(lcm_poly, q);
    }
    UPoly<RationalField> num(RationalField{});
    for (const auto& [d, count] : dens)
        num += (lcm_poly / d).scaled(Rational(static_cast<long>(count), static_cast<long>(group.order())));
    auto g = gcd(num, lcm_poly);
    num = num / g;
    auto den = lcm_poly / g;
    auto c0 = den.coeff(0);
    num = num.scaled(Rational(1) / c0);
    den = den.scaled(Rational(1) / c0);
    for (const auto& c : num.coeffs()) {
        if (!c.is_integer()) throw std::logic_error("Molien numerator not integral");
        out.numerator.push_back(c.num());
    }
    for (const auto& c : den.coeffs()) out.denominator.push_back(c.num());
    return out;
}

std::string MolienSeries::to_string() const {
    auto render = [](const std::vector<Integer>& p) {
        std::vector<Rational> c;
        for (const auto& v : p) c.emplace_back(v);
        return "(" + UPoly<RationalField>(RationalField{}, std::move(c)).to_string("t") + ")";
    };
    return render(numerator) + "/" + render(denominator);
}

}  // namespace quartica
