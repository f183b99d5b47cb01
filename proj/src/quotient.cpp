#include "quartica/quotient.hpp"

#include <sstream>
#include <stdexcept>

#include "quartica/parse.hpp"

namespace quartica {

QuotientIdeal quotient_ideal(const std::vector<QPoly>& F, const PermGroup& group, std::vector<QPoly> invariants,
                             std::vector<std::string> names) {
    if (F.empty()) throw std::invalid_argument("quotient_ideal needs at least one equation");
    const auto& R = F.front().ring();
    for (const auto& f : F) {
        if (auto g = invariance_witness(f, group))
            throw std::invalid_argument("equation " + f.to_string() + " is not invariant under " + g->to_string());
    }
    if (invariants.empty()) invariants = fundamental_invariants(R, group);
    for (const auto& inv : invariants)
        if (auto g = invariance_witness(inv.to_ring(R), group))
            throw std::invalid_argument("proposed invariant " + inv.to_string() + " is moved by " + g->to_string());
    if (names.empty()) {
        for (char c = 'a'; names.size() < invariants.size(); ++c) {
            if (c > 'z') throw std::invalid_argument("too many invariants for automatic names");
            std::string n(1, c);
            if (!R->has_var(n)) names.push_back(n);
        }
    }
    if (names.size() != invariants.size()) throw std::invalid_argument("one name per invariant required");

    std::vector<std::string> all = R->vars();
    all.insert(all.end(), names.begin(), names.end());
    auto big = QRing::make(all);
    std::vector<QPoly> gens;
    for (const auto& f : F) gens.push_back(f.to_ring(big));
    for (std::size_t j = 0; j < invariants.size(); ++j)
        gens.push_back(invariants[j].to_ring(big) - QPoly::variable(big, names[j]));

    QuotientIdeal out;
    out.invariants = invariants;
    out.ideal = eliminate(gens, names);
    out.ring = out.ideal.empty() ? QRing::make(names) : out.ideal.front().ring();
    return out;
}

std::vector<QPoly> affine_curve_equations() {
    auto r = QRing::make({"x", "y", "z"});
    return {parse_poly(r, "x^2+y^2+z^2+1"), parse_poly(r, "x^3+y^3+z^3+1")};
}

std::vector<QPoly> catalog_invariants(const std::string& key, const QRingPtr& ring) {
    auto P = [&ring](const char* s) { return parse_poly(ring, s); };
    if (key == "(1,2)") return {P("x+y"), P("z"), P("x^2+y^2")};
    if (key == "(1,2,3)") return {P("x+y+z"), P("x^2+y^2+z^2"), P("x^3+y^3+z^3"), P("x^2z+xy^2+yz^2")};
    if (key == "S4")
        return {P("x+y+z+w"), P("x^2+y^2+z^2+w^2"), P("x^3+y^3+z^3+w^3"), P("x^4+y^4+z^4+w^4")};
    throw std::invalid_argument("no catalog invariants for group " + key);
}

std::string MapVerdict::to_string() const {
    if (holds) return "holds";
    std::string s = "fails; residual";
    for (const auto& r : residuals)
        if (!r.is_zero()) s += " " + r.to_string();
    return s;
}

MapVerdict verify_model_map(const std::vector<QPoly>& src, const std::vector<QPoly>& dst, const VariableMap& map) {
    if (src.empty() || dst.empty()) throw std::invalid_argument("map verification needs equations on both sides");
    const auto& target = src.front().ring();
    auto gb = buchberger(src).elements;
    MapVerdict v;
    v.holds = true;
    for (const auto& eq : dst) {
        auto pulled = substitute(eq, map, target);
        auto r = normal_form(pulled.num, gb);
        v.holds = v.holds && r.is_zero();
        v.residuals.push_back(r);
    }
    return v;
}

namespace {

using RF = RationalFunction<RationalField>;

RF poly_image(const QRingPtr& r, const char* s) { return RF::polynomial(parse_poly(r, s)); }

}  // namespace

std::vector<ModelMapRecord> catalog_model_maps() {
    std::vector<ModelMapRecord> out;
    auto xy = QRing::make({"x", "y"});
    auto xyz = QRing::make({"x", "y", "z"});
    auto abw = QRing::make({"a", "b", "w"});
    auto ad = QRing::make({"a", "d"});
    auto e = [](const std::string& l) { return std::get<EllipticLong>(catalog(l).model); };

    out.push_back({"C12-from-quotient",
                   "x=3a, y=9b, z=-a+b+w carries the homogenized (1,2)-quotient cubic to the long model of C12",
                   {parse_poly(abw, "a^3+3ab^2+3aw^2-2b^3-2w^3")},
                   {elliptic_equation(e("C12"), xyz, true)},
                   {{"x", poly_image(abw, "3a")}, {"y", poly_image(abw, "9b")}, {"z", poly_image(abw, "-a+b+w")}},
                   true});
    out.push_back({"C12-short-form",
                   "X = 4x+3, Y = 8y-12x-36 carries C12 to y^2 = x^3-27x-378",
                   defining_equations(catalog("C12")),
                   defining_equations(catalog("C12.weier")),
                   {{"x", poly_image(xy, "4x+3")}, {"y", poly_image(xy, "8y-12x-36")}},
                   true});
    out.push_back({"C12-to-C1234-as-stated",
                   "stated isomorphism (x,y) -> (1024x-1152, 32768y-2580481) from C12 to C1234",
                   defining_equations(catalog("C12")),
                   defining_equations(catalog("C1234")),
                   {{"x", poly_image(xy, "1024x-1152")}, {"y", poly_image(xy, "32768y-2580481")}},
                   false});
    out.push_back({"C12-to-C1234-fitted",
                   "fitted isomorphism (x,y) -> (1024x-1152, 32768y-258048) from C12 to C1234",
                   defining_equations(catalog("C12")),
                   defining_equations(catalog("C1234")),
                   {{"x", poly_image(xy, "1024x-1152")}, {"y", poly_image(xy, "32768y-258048")}},
                   true});
    auto g = parse_poly(ad, "a^6+9a^4-8a^3+27a^2+24ad-48a+24d^2-24d+27");
    out.push_back({"C123-as-stated",
                   "stated change y = -a/2 - 3d/2, x = (1-a)/2 from the (1,2,3)-quotient to C123",
                   {g},
                   defining_equations(catalog("C123")),
                   {{"x", poly_image(ad, "(1-a)/2")}, {"y", poly_image(ad, "-a/2-3d/2")}},
                   false});
    out.push_back({"C123-fitted",
                   "x = 2/(1-a), y = -4(a+3d)/(1-a)^3 carries the (1,2,3)-quotient to C123",
                   {g},
                   defining_equations(catalog("C123")),
                   {{"x", RF{parse_poly(ad, "2"), parse_poly(ad, "1-a")}},
                    {"y", RF{parse_poly(ad, "-4a-12d"), parse_poly(ad, "(1-a)^3")}}},
                   true});
    out.push_back({"C123-to-sextic",
                   "x -> -x, y -> 2y + x^3 + x^2 carries C123 to y^2 = -3x^6-18x^5-99x^4-144x^3-144x^2-72x-24",
                   defining_equations(catalog("C123")),
                   defining_equations(catalog("C123.weier")),
                   {{"x", poly_image(xy, "-x")}, {"y", poly_image(xy, "2y+x^3+x^2")}},
                   true});
    return out;
}

PlaneAffine plane_model() {
    auto eqs = affine_curve_equations();
    auto elim = eliminate(eqs, {"x", "y"});
    if (elim.size() != 1) throw std::logic_error("eliminating z did not give a principal ideal");
    return PlaneAffine{primitive_part(elim.front())};
}

namespace {

// A homogeneous polynomial in (x, y, z) restricted to z = 0 with x, y
// replaced by polynomials in the single variable of `rt`.
QUPoly restrict_to_line(const QPoly& f, const QRingPtr& rt, const char* x_img, const char* y_img) {
    const auto& v = f.ring()->vars();
    auto r = substitute(f,
                        {{v[0], RF::polynomial(parse_poly(rt, x_img))},
                         {v[1], RF::polynomial(parse_poly(rt, y_img))},
                         {v[2], RF::polynomial(QPoly(rt))}},
                        rt);
    return to_univariate(r.num, 0);
}

bool in_ideal(const QPoly& f, const std::vector<QPoly>& gb) { return normal_form(f, gb).is_zero(); }

}  // namespace

std::string GenusReport::to_string() const {
    std::ostringstream os;
    os << "degree " << degree << ", arithmetic genus " << arithmetic_genus << ", " << singular_points
       << " singular points (" << nodes << " nodes, " << cusps << " cusps, total Tjurina number " << tjurina_total
       << "), x-coordinates are roots of " << singular_x_polynomial.to_string() << ", genus " << genus;
    return os.str();
}

GenusReport genus_plane(const QPoly& f) {
    const auto& R0 = f.ring();
    if (R0->nvars() != 2) throw std::invalid_argument("genus_plane expects a polynomial in two variables");
    auto R = R0->with_order(MonomialOrder::grevlex());
    auto F = f.to_ring(R);
    const std::string xv = R->vars()[0], yv = R->vars()[1];
    GenusReport rep;
    rep.degree = static_cast<int>(F.total_degree());
    rep.arithmetic_genus = (rep.degree - 1) * (rep.degree - 2) / 2;

    auto fx = F.derivative(0), fy = F.derivative(1);
    std::vector<QPoly> J = {F, fx, fy};
    auto jgb = buchberger(J).elements;
    rep.tjurina_total = quotient_dimension(jgb);
    auto rad = radical_zero_dim(J);
    rep.singular_points = quotient_dimension(rad);
    rep.singular_x_polynomial = squarefree_part(univariate_eliminant(rad, xv));
    // scale to a primitive integer polynomial for display
    {
        auto rx = QRing::make({xv});
        auto prim = primitive_part(from_univariate(rep.singular_x_polynomial, rx, 0));
        rep.singular_x_polynomial = to_univariate(prim, 0);
    }

    if (rep.singular_points > 0) {
        auto fxx = fx.derivative(0), fxy = fx.derivative(1), fyy = fy.derivative(1);
        auto triple = rad;
        triple.insert(triple.end(), {fxx, fxy, fyy});
        if (!buchberger(triple).elements.front().is_constant())
            throw std::domain_error("singular point of multiplicity at least 3; delta not determined");
        auto hessian = fxy * fxy - fxx * fyy;
        std::size_t degenerate = 0;
        if (in_ideal(hessian, rad)) {
            degenerate = rep.singular_points;
        } else {
            auto with_h = rad;
            with_h.push_back(hessian);
            auto hgb = buchberger(with_h).elements;
            degenerate = hgb.front().is_constant() ? 0 : quotient_dimension(hgb);
        }
        rep.nodes = rep.singular_points - degenerate;
        // a node has Tjurina number 1, a degenerate double point at least 2
        // with equality exactly for an ordinary cusp
        std::size_t degenerate_tau = rep.tjurina_total - rep.nodes;
        if (degenerate_tau != 2 * degenerate)
            throw std::domain_error("double points worse than ordinary cusps; delta not determined");
        rep.cusps = degenerate;
    }

    // singular points at infinity: common zeros of the partials of the
    // projective closure on z = 0, in the chart y = 1 and at (1:0:0)
    auto hom_ring = QRing::make({xv, yv, "z_"});
    auto H = homogenize(F.to_ring(hom_ring), "z_");
    std::vector<QPoly> partials = {H.derivative(0), H.derivative(1), H.derivative(2)};
    auto rt = QRing::make({"t"});
    QUPoly common(RationalField{});
    bool corner = true;
    std::vector<Rational> pt = {Rational(1), Rational(0), Rational(0)};
    for (const auto& d : partials) {
        common = gcd(common, restrict_to_line(d, rt, "t", "1"));
        corner = corner && d.evaluate(pt).is_zero();
    }
    rep.smooth_at_infinity = !corner && !common.is_zero() && common.degree() == 0;
    if (!rep.smooth_at_infinity) throw std::domain_error("plane curve is singular at infinity; not supported");

    rep.genus = rep.arithmetic_genus - static_cast<int>(rep.nodes + rep.cusps);
    return rep;
}

namespace {

template <CoefficientField K>
bool chart_is_empty(const std::shared_ptr<const PolyRing<K>>& ring, const std::string& chart) {
    auto P = [&ring](const char* s) { return parse_poly(ring, s); };
    std::vector<MultiPoly<K>> gens = {P("x^2+y^2+z^2+w^2"), P("x^3+y^3+z^3+w^3")};
    const char* v[4] = {"x", "y", "z", "w"};
    // 2x2 minors of [[2x,2y,2z,2w],[3x^2,3y^2,3z^2,3w^2]] up to the unit 6
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            gens.push_back(P((std::string(v[i]) + "*" + v[j] + "^2 - " + v[j] + "*" + v[i] + "^2").c_str()));
    for (auto& g : gens) g = dehomogenize(g, chart);
    auto gb = buchberger(gens).elements;
    return !gb.empty() && gb.front().is_constant();
}

}  // namespace

SmoothnessReport smoothness_check(std::uint64_t p) {
    if (p == 2 || p == 3) throw std::domain_error("bad reduction excluded by hypothesis p >= 5");
    SmoothnessReport rep;
    rep.smooth = true;
    for (const char* chart : {"w", "z", "y", "x"}) {
        bool ok;
        if (p == 0) {
            ok = chart_is_empty(QRing::make({"x", "y", "z", "w"}), chart);
        } else {
            ok = chart_is_empty(PolyRing<PrimeField>::make({"x", "y", "z", "w"}, PrimeField(p)), chart);
        }
        rep.charts.emplace_back(chart, ok);
        rep.smooth = rep.smooth && ok;
    }
    rep.field = p == 0 ? "QQ" : "GF(" + std::to_string(p) + ")";
    return rep;
}

}  // namespace quartica
