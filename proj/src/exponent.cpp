#include "canonfan/exponent.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace canonfan {

Exponent::Exponent(std::vector<int> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("exponent needs dimension >= 1");
    for (int c : coords_)
        if (c < 0) throw std::invalid_argument("negative exponent coordinate");
}

Exponent Exponent::zero(int n) { return Exponent(std::vector<int>(static_cast<std::size_t>(n), 0)); }

Exponent Exponent::unit(int n, int axis) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    c.at(static_cast<std::size_t>(axis)) = 1;
    return Exponent(std::move(c));
}

int Exponent::total_degree() const {
    return std::accumulate(coords_.begin(), coords_.end(), 0);
}

bool Exponent::is_zero() const {
    for (int c : coords_)
        if (c != 0) return false;
    return true;
}

Exponent Exponent::operator+(const Exponent& other) const {
    require_same_dim(dim(), other.dim(), "exponent sum");
    std::vector<int> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
    return Exponent(std::move(c));
}

Exponent Exponent::operator-(const Exponent& other) const {
    require_same_dim(dim(), other.dim(), "exponent difference");
    std::vector<int> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] -= other.coords_[i];
        if (c[i] < 0) throw std::invalid_argument("exponent difference leaves ℕⁿ");
    }
    return Exponent(std::move(c));
}

Exponent Exponent::scaled(int k) const {
    if (k < 0) throw std::invalid_argument("negative exponent multiple");
    std::vector<int> c(coords_);
    for (int& v : c) v *= k;
    return Exponent(std::move(c));
}

bool Exponent::divides(const Exponent& beta) const {
    require_same_dim(dim(), beta.dim(), "exponent divisibility");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] > beta.coords_[i]) return false;
    return true;
}

std::string Exponent::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ',';
        out << coords_[i];
    }
    out << ')';
    return out.str();
}

WeightVector::WeightVector(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("weight vector needs dimension >= 1");
    for (const Rational& c : coords_)
        if (c <= 0) throw std::invalid_argument("weight coordinates must be strictly positive");
}

Rational WeightVector::weight_of(const Exponent& alpha) const {
    require_same_dim(dim(), alpha.dim(), "weight evaluation");
    Rational acc = 0;
    for (int i = 0; i < dim(); ++i) acc += coords_[static_cast<std::size_t>(i)] * alpha[i];
    return acc;
}

std::string WeightVector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ',';
        out += canonfan::to_string(coords_[i]);
    }
    return out;
}

void require_same_dim(int lhs, int rhs, const char* what) {
    if (lhs != rhs) {
        std::ostringstream msg;
        msg << "dimension mismatch in " << what << ": " << lhs << " vs " << rhs;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace canonfan
