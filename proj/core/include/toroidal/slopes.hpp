#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "toroidal/lattice.hpp"
#include "toroidal/quadint.hpp"

namespace toroidal {

// An elliptic curve through the origin of the product surface C x C:
// either w = alpha*z for alpha in the endomorphism order, or the factor
// z = 0, written as the slope at infinity.
class Slope {
public:
    static Slope infinity(OrderKind order) { return Slope(order); }
    static Slope finite(QuadInt alpha) { return Slope(std::move(alpha)); }

    bool is_infinity() const { return !alpha_.has_value(); }
    bool is_finite() const { return alpha_.has_value(); }
    const QuadInt& alpha() const;   // throws if infinite
    OrderKind order() const { return order_; }

    friend bool operator==(const Slope& x, const Slope& y);
    friend bool operator!=(const Slope& x, const Slope& y) { return !(x == y); }
    // Infinity first, then the total order on elements.
    friend bool operator<(const Slope& x, const Slope& y);

    friend std::ostream& operator<<(std::ostream& os, const Slope& s);

private:
    explicit Slope(OrderKind order) : order_(order) {}
    explicit Slope(QuadInt alpha) : order_(alpha.order()), alpha_(std::move(alpha)) {}

    OrderKind order_;
    std::optional<QuadInt> alpha_;
};

std::string render(const Slope& s);                          // "inf" or element grammar
Slope parse_slope(const std::string& text, OrderKind order);

// A finite set of distinct slopes over one order.  Slopes are stored
// sorted, so configurations compare as sets.
class Configuration {
public:
    Configuration(OrderKind order, std::vector<Slope> slopes);

    OrderKind order() const { return order_; }
    const std::vector<Slope>& slopes() const { return slopes_; }
    std::size_t size() const { return slopes_.size(); }

    friend bool operator==(const Configuration& x, const Configuration& y);
    friend bool operator!=(const Configuration& x, const Configuration& y) { return !(x == y); }
    friend bool operator<(const Configuration& x, const Configuration& y);

private:
    OrderKind order_;
    std::vector<Slope> slopes_;
};

// Automorphism of the slope line P^1 over the order: a 2x2 matrix with
// unit determinant, acting by alpha -> (m11*alpha + m12) / (m21*alpha + m22).
class MobiusMap {
public:
    MobiusMap(QuadInt m11, QuadInt m12, QuadInt m21, QuadInt m22);

    static MobiusMap identity(OrderKind order);
    static MobiusMap shear(const QuadInt& beta);          // alpha -> alpha + beta
    static MobiusMap scale_by_unit(const QuadInt& unit);  // alpha -> unit * alpha
    static MobiusMap inversion_at(const QuadInt& pivot);  // alpha -> 1 / (alpha - pivot)
    static MobiusMap factor_swap(OrderKind order);        // alpha -> 1 / alpha

    const QuadInt& m11() const { return m11_; }
    const QuadInt& m12() const { return m12_; }
    const QuadInt& m21() const { return m21_; }
    const QuadInt& m22() const { return m22_; }
    QuadInt det() const;

private:
    QuadInt m11_, m12_, m21_, m22_;
};

// Pairwise intersection number of the two curves: norm(alpha - beta) for
// distinct finite slopes, 1 against the slope at infinity, 0 for equal
// slopes (elliptic curves on an abelian surface have self-intersection 0).
Int intersection_number(const Slope& s1, const Slope& s2);

// A point of C x C in lattice coordinates, (w, z) each in [0,1)^2.
struct SurfacePoint {
    TorsionPoint w;
    TorsionPoint z;

    friend bool operator==(const SurfacePoint& p, const SurfacePoint& q) {
        return p.w == q.w && p.z == q.z;
    }
    friend bool operator<(const SurfacePoint& p, const SurfacePoint& q);
};

// The full intersection locus of two distinct curves through the origin.
// For finite slopes the z coordinates run over the kernel of alpha - beta.
// Throws on equal slopes (the locus is the whole curve).
std::vector<SurfacePoint> intersection_points(const Slope& s1, const Slope& s2);

// Four curves meeting pairwise once; they then meet only at the common
// origin, which is the configuration the classification looks for.
bool is_good_configuration(const Configuration& cfg);

// Image of a slope under the map, exact in O union {inf}.  Throws when the
// image is not representable, which signals a map/configuration mismatch.
Slope mobius_apply(const MobiusMap& m, const Slope& s);

Configuration mobius_apply(const MobiusMap& m, const Configuration& cfg);

// Orbit representative of a good configuration in the normal form
// {inf, 0, 1, u}: u minimized over every choice of normalizing triple and
// the factor swap.  Idempotent and constant on orbits.
Configuration canonicalize(const Configuration& cfg);

// For a configuration already in normal form, its defining fourth slope.
QuadInt normal_form_tail(const Configuration& cfg);

// Complete normalized search: every good configuration is isomorphic to
// {inf, 0, 1, u} with u a unit such that u - 1 is a unit, so scanning the
// units suffices.  Returns canonical representatives, deduplicated, sorted.
std::vector<Configuration> search_good_configurations(OrderKind order);

} // namespace toroidal
