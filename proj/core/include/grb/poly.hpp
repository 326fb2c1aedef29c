#pragma once

#include "grb/rational.hpp"
#include "grb/symbols.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace grb {

/// Product of coordinate powers and base-function-symbol powers.
/// Factors are kept sorted; exponents are positive.
struct Monomial {
    std::vector<std::pair<CoordSymbol, int>> coords;
    std::vector<std::pair<FnSymbol, int>> fns;

    void normalise();
    bool empty() const { return coords.empty() && fns.empty(); }
    int degreeIn(const CoordSymbol::Key& k) const;
    MultiWeight weight(int ncomp) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Sparse exact polynomial in homogeneous coordinates over the formal
/// base algebra of opaque function symbols. The zero polynomial is the
/// empty term map; stored coefficients are never zero.
class Poly {
  public:
    Poly() = default;

    static Poly constant(const Rational& c);
    static Poly coordinate(const CoordSymbol& c);
    static Poly fn(const FnSymbol& f);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;

    void addTerm(const Monomial& m, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Rational& c) const;

    friend bool operator==(const Poly&, const Poly&) = default;

    Rational coefficientOf(const Monomial& m) const;
    std::string str() const;

  private:
    std::map<Monomial, Rational> terms_;
};

/// Leibniz-correct formal partial derivative. Differentiating an opaque
/// symbol by an unlifted base coordinate extends its derivative
/// multi-index; fibre and lifted coordinates annihilate symbols.
Poly formalPartial(const Poly& p, const CoordSymbol& by);

enum class SubstMode {
    Strict,  // every fibre coordinate of p must be covered
    Partial, // unmapped coordinates stay
};

using Assignment = std::map<CoordSymbol::Key, Poly>;

Poly substitute(const Poly& p, const Assignment& a, SubstMode mode = SubstMode::Partial);

/// Result of a homogeneity check in one weight component.
struct WeightCheck {
    bool homogeneous = true;
    int degree = 0;                  // valid when homogeneous
    std::vector<Monomial> offending; // terms with deviating degree
};

WeightCheck weightCheck(const Poly& p, int component);
std::optional<MultiWeight> weightOf(const Poly& p, int ncomp);

Poly mapCoords(const Poly& p, const std::function<CoordSymbol(const CoordSymbol&)>& f);
std::vector<CoordSymbol> coordsIn(const Poly& p);
std::vector<FnSymbol> fnsIn(const Poly& p);

} // namespace grb
