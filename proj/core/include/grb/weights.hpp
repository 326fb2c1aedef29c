#pragma once

#include <compare>
#include <string>
#include <vector>

namespace grb {

/// Multi-weight of a coordinate: one non-negative integer per weight
/// vector field of the presentation.
struct MultiWeight {
    std::vector<int> comp;

    MultiWeight() = default;
    explicit MultiWeight(std::vector<int> c) : comp(std::move(c)) {}
    static MultiWeight zeros(int n) { return MultiWeight(std::vector<int>(n, 0)); }

    int size() const { return static_cast<int>(comp.size()); }
    int operator[](int i) const { return comp[i]; }
    int total() const;
    bool isZero() const { return total() == 0; }
    bool allAtMostOne() const;

    MultiWeight& operator+=(const MultiWeight& o);
    friend MultiWeight operator+(MultiWeight a, const MultiWeight& b) { return a += b; }
    MultiWeight scaled(int k) const;
    MultiWeight appended(int bit) const;

    friend bool operator==(const MultiWeight&, const MultiWeight&) = default;
    friend auto operator<=>(const MultiWeight&, const MultiWeight&) = default;

    std::string str() const; // "(1,0,2)"
};

/// Integer combination X = sum a_s Delta^s of the weight vector fields.
/// Negative coefficients are allowed.
struct WeightCombo {
    std::vector<long long> coeff;

    WeightCombo() = default;
    explicit WeightCombo(std::vector<long long> a) : coeff(std::move(a)) {}
    static WeightCombo unit(int n, int s);   // Delta^s
    static WeightCombo total(int n);         // sum of all Delta^s

    int size() const { return static_cast<int>(coeff.size()); }
    WeightCombo operator-() const;
    bool allNonNegative() const;

    long long weightOf(const MultiWeight& w) const;
};

/// Permutation of {1..k}, stored 0-based: g[i] is the image of slot i.
using Perm = std::vector<int>;

Perm permIdentity(int k);
Perm permCompose(const Perm& g1, const Perm& g2); // g1 after g2: (g1*g2)[i] = g1[g2[i]]
Perm permInverse(const Perm& g);
Perm permTransposition(int k, int i, int j);      // 0-based slots
std::vector<Perm> allPerms(int k);
bool isPerm(const Perm& g);
std::string permStr(const Perm& g);               // "(2,1,3)" one-line, 1-based

/// Right action eps.g = (eps[g(1)], ..., eps[g(k)]) on lift multi-indices.
std::vector<int> epsAct(const std::vector<int>& eps, const Perm& g);

} // namespace grb
