#include "toroidal/slopes.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace toroidal {

const QuadInt& Slope::alpha() const {
    if (!alpha_) throw std::logic_error("the slope at infinity has no finite value");
    return *alpha_;
}

bool operator==(const Slope& x, const Slope& y) {
    if (x.order_ != y.order_) return false;
    if (x.is_infinity() || y.is_infinity()) return x.is_infinity() && y.is_infinity();
    return *x.alpha_ == *y.alpha_;
}

bool operator<(const Slope& x, const Slope& y) {
    if (x.order_ != y.order_)
        throw std::invalid_argument("comparing slopes over different orders");
    if (x.is_infinity() || y.is_infinity()) return x.is_infinity() && !y.is_infinity();
    return *x.alpha_ < *y.alpha_;
}

std::string render(const Slope& s) {
    return s.is_infinity() ? "inf" : render(s.alpha());
}

std::ostream& operator<<(std::ostream& os, const Slope& s) {
    return os << render(s);
}

Slope parse_slope(const std::string& text, OrderKind order) {
    if (text == "inf") return Slope::infinity(order);
    return Slope::finite(parse_quadint(text, order));
}

Configuration::Configuration(OrderKind order, std::vector<Slope> slopes)
    : order_(order), slopes_(std::move(slopes)) {
    for (const Slope& s : slopes_) {
        if (s.order() != order_)
            throw std::invalid_argument("configuration mixes slopes over different orders");
    }
    std::sort(slopes_.begin(), slopes_.end());
    if (std::adjacent_find(slopes_.begin(), slopes_.end()) != slopes_.end())
        throw std::invalid_argument("configuration contains a duplicate slope");
}

bool operator==(const Configuration& x, const Configuration& y) {
    return x.order_ == y.order_ && x.slopes_ == y.slopes_;
}

bool operator<(const Configuration& x, const Configuration& y) {
    return std::lexicographical_compare(x.slopes_.begin(), x.slopes_.end(),
                                        y.slopes_.begin(), y.slopes_.end());
}

MobiusMap::MobiusMap(QuadInt m11, QuadInt m12, QuadInt m21, QuadInt m22)
    : m11_(std::move(m11)), m12_(std::move(m12)), m21_(std::move(m21)), m22_(std::move(m22)) {
    if (m11_.order() != m12_.order() || m11_.order() != m21_.order() || m11_.order() != m22_.order())
        throw std::invalid_argument("map entries must share one order");
    if (!is_unit(det()))
        throw std::invalid_argument("map determinant must be a unit");
}

QuadInt MobiusMap::det() const {
    return m11_ * m22_ - m12_ * m21_;
}

MobiusMap MobiusMap::identity(OrderKind order) {
    const QuadInt one = QuadInt::one(order);
    const QuadInt zero = QuadInt::zero(order);
    return {one, zero, zero, one};
}

MobiusMap MobiusMap::shear(const QuadInt& beta) {
    const OrderKind order = beta.order();
    return {QuadInt::one(order), beta, QuadInt::zero(order), QuadInt::one(order)};
}

MobiusMap MobiusMap::scale_by_unit(const QuadInt& unit) {
    if (!is_unit(unit)) throw std::invalid_argument("scale factor must be a unit");
    const OrderKind order = unit.order();
    return {unit, QuadInt::zero(order), QuadInt::zero(order), QuadInt::one(order)};
}

MobiusMap MobiusMap::inversion_at(const QuadInt& pivot) {
    const OrderKind order = pivot.order();
    return {QuadInt::zero(order), QuadInt::one(order), QuadInt::one(order), -pivot};
}

MobiusMap MobiusMap::factor_swap(OrderKind order) {
    return {QuadInt::zero(order), QuadInt::one(order), QuadInt::one(order), QuadInt::zero(order)};
}

Int intersection_number(const Slope& s1, const Slope& s2) {
    if (s1.order() != s2.order())
        throw std::invalid_argument("intersecting curves over different orders");
    if (s1 == s2) return 0;
    if (s1.is_infinity() || s2.is_infinity()) return 1;
    return norm(s1.alpha() - s2.alpha());
}

bool operator<(const SurfacePoint& p, const SurfacePoint& q) {
    for (int i = 0; i < 2; ++i) {
        if (p.w[i] != q.w[i]) return p.w[i] < q.w[i];
    }
    for (int i = 0; i < 2; ++i) {
        if (p.z[i] != q.z[i]) return p.z[i] < q.z[i];
    }
    return false;
}

std::vector<SurfacePoint> intersection_points(const Slope& s1, const Slope& s2) {
    if (s1.order() != s2.order())
        throw std::invalid_argument("intersecting curves over different orders");
    if (s1 == s2)
        throw std::invalid_argument("equal slopes intersect in the whole curve");

    const TorsionPoint origin2 = {Frac{}, Frac{}};
    if (s1.is_infinity() || s2.is_infinity()) {
        // z = 0 meets w = alpha*z only at the origin.
        return {SurfacePoint{origin2, origin2}};
    }

    const QuadInt& alpha = s1.alpha();
    const TorsionGroup zs = quotient_reps(alpha - s2.alpha());
    const IntMat2 act = mult_matrix(alpha);
    std::vector<SurfacePoint> points;
    points.reserve(zs.reps.size());
    for (const TorsionPoint& z : zs.reps) {
        const TorsionPoint w = {(act.m11 * z[0] + act.m12 * z[1]).mod1(),
                                (act.m21 * z[0] + act.m22 * z[1]).mod1()};
        points.push_back({w, z});
    }
    std::sort(points.begin(), points.end());
    return points;
}

bool is_good_configuration(const Configuration& cfg) {
    if (cfg.size() != 4)
        throw std::invalid_argument("a good configuration has exactly four curves");
    const auto& s = cfg.slopes();
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (intersection_number(s[i], s[j]) != 1) return false;
        }
    }
    // Pairwise number 1 through the common origin pins every pairwise
    // intersection to {origin}, so the quadruple point is the origin.
    return true;
}

Slope mobius_apply(const MobiusMap& m, const Slope& s) {
    if (m.m11().order() != s.order())
        throw std::invalid_argument("applying a map over a different order");
    // Projective coordinates (num : den); infinity is (1 : 0).
    QuadInt num = s.is_finite() ? m.m11() * s.alpha() + m.m12() : m.m11();
    QuadInt den = s.is_finite() ? m.m21() * s.alpha() + m.m22() : m.m21();
    if (den.is_zero()) return Slope::infinity(s.order());
    const std::optional<QuadInt> q = try_div_exact(num, den);
    if (!q)
        throw std::domain_error("slope image " + render(num) + "/(" + render(den) +
                                ") is not representable in the order");
    return Slope::finite(*q);
}

Configuration mobius_apply(const MobiusMap& m, const Configuration& cfg) {
    std::vector<Slope> images;
    images.reserve(cfg.size());
    for (const Slope& s : cfg.slopes()) images.push_back(mobius_apply(m, s));
    return {cfg.order(), std::move(images)};
}

namespace {

// Moves (triple[0], triple[1], triple[2]) to (inf, 0, 1) by an inversion,
// a shear and a unit scaling, and returns the image of the remaining slope.
// Each step keeps pairwise differences of the images units, so every
// division below is exact on a good configuration.
QuadInt normalize_tail(const Configuration& cfg, const Slope& to_inf, const Slope& to_zero,
                       const Slope& to_one, const Slope& tail) {
    const OrderKind order = cfg.order();
    std::vector<Slope> s = {to_inf, to_zero, to_one, tail};

    if (s[0].is_finite()) {
        const MobiusMap inv = MobiusMap::inversion_at(s[0].alpha());
        for (Slope& x : s) x = mobius_apply(inv, x);
    }
    const MobiusMap shear = MobiusMap::shear(-s[1].alpha());
    for (Slope& x : s) x = mobius_apply(shear, x);

    const QuadInt pivot = s[2].alpha();
    if (!is_unit(pivot))
        throw std::logic_error("normalization pivot must be a unit on a good configuration");
    const MobiusMap scale = MobiusMap::scale_by_unit(conj(pivot));   // conj = inverse for units
    for (Slope& x : s) x = mobius_apply(scale, x);

    assert(s[0].is_infinity());
    assert(s[1].alpha().is_zero());
    assert(s[2].alpha() == QuadInt::one(order));
    (void)order;
    return s[3].alpha();
}

} // namespace

Configuration canonicalize(const Configuration& cfg) {
    if (!is_good_configuration(cfg))
        throw std::invalid_argument("canonicalize requires a good configuration");

    const auto& s = cfg.slopes();
    std::optional<QuadInt> best;
    auto consider = [&best](const QuadInt& u) {
        if (!best || u < *best) best = u;
    };
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            for (std::size_t k = 0; k < 4; ++k) {
                if (i == j || i == k || j == k) continue;
                const std::size_t l = 6 - i - j - k;
                const QuadInt u = normalize_tail(cfg, s[i], s[j], s[k], s[l]);
                consider(u);
                consider(conj(u));   // factor swap sends {inf,0,1,u} to {inf,0,1,1/u}
            }
        }
    }

    const OrderKind order = cfg.order();
    return {order, {Slope::infinity(order), Slope::finite(QuadInt::zero(order)),
                    Slope::finite(QuadInt::one(order)), Slope::finite(*best)}};
}

QuadInt normal_form_tail(const Configuration& cfg) {
    const OrderKind order = cfg.order();
    const Slope zero = Slope::finite(QuadInt::zero(order));
    const Slope one = Slope::finite(QuadInt::one(order));
    const auto& s = cfg.slopes();
    if (cfg.size() != 4 || !s[0].is_infinity() ||
        std::find(s.begin(), s.end(), zero) == s.end() ||
        std::find(s.begin(), s.end(), one) == s.end())
        throw std::invalid_argument("configuration is not in normal form");
    for (const Slope& x : s) {
        if (x.is_finite() && !x.alpha().is_zero() && x.alpha() != QuadInt::one(order))
            return x.alpha();
    }
    throw std::invalid_argument("configuration is not in normal form");
}

std::vector<Configuration> search_good_configurations(OrderKind order) {
    const QuadInt one = QuadInt::one(order);
    std::set<QuadInt> tails;
    for (const QuadInt& u : units(order)) {
        if (u == one || !is_unit(u - one)) continue;
        const Configuration candidate(order, {Slope::infinity(order), Slope::finite(QuadInt::zero(order)),
                                              Slope::finite(one), Slope::finite(u)});
        if (!is_good_configuration(candidate)) continue;
        tails.insert(normal_form_tail(canonicalize(candidate)));
    }
    std::vector<Configuration> classes;
    for (const QuadInt& u : tails) {
        classes.emplace_back(order, std::vector<Slope>{Slope::infinity(order),
                                                       Slope::finite(QuadInt::zero(order)),
                                                       Slope::finite(one), Slope::finite(u)});
    }
    return classes;
}

} // namespace toroidal
