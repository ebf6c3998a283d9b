// Exponents α ∈ ℕⁿ and strictly positive rational weight vectors a ∈ U₁ⁿ.
#pragma once

#include "canonfan/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace canonfan {

/// A point of ℕⁿ. Structural (lexicographic) ordering so exponents can key maps;
/// the mathematical orderings live in orders.hpp.
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(std::vector<int> coords);
    static Exponent zero(int n);
    static Exponent unit(int n, int axis);  // e_axis

    int dim() const { return static_cast<int>(coords_.size()); }
    int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& coords() const { return coords_; }

    int total_degree() const;
    bool is_zero() const;

    Exponent operator+(const Exponent& other) const;
    // Componentwise difference; requires *this >= other componentwise.
    Exponent operator-(const Exponent& other) const;
    Exponent scaled(int k) const;

    /// Componentwise α ≤ β (β - α ∈ ℕⁿ).
    bool divides(const Exponent& beta) const;

    friend bool operator==(const Exponent&, const Exponent&) = default;
    // Structural order only: lexicographic on the coordinate vector.
    std::strong_ordering operator<=>(const Exponent& other) const {
        return coords_ <=> other.coords_;
    }

    std::string to_string() const;  // "(a1,...,an)"

private:
    std::vector<int> coords_;
};

/// a ∈ U₁ⁿ: strictly positive rationals.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<Rational> coords);

    int dim() const { return static_cast<int>(coords_.size()); }
    const Rational& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& coords() const { return coords_; }

    /// ⟨a,α⟩
    Rational weight_of(const Exponent& alpha) const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

    std::string to_string() const;  // "a1,...,an"

private:
    std::vector<Rational> coords_;
};

void require_same_dim(int lhs, int rhs, const char* what);

}  // namespace canonfan
