#include "spherical/coeff_table.hpp"

#include "spherical/characters.hpp"
#include "spherical/errors.hpp"

namespace spherical {

CoeffTable::CoeffTable(const BlockTriple& n, int k)
    : n_(n), k_(k), values_(static_cast<std::size_t>((n.n1() + 1) * (n.n2() + 1))) {
    require_two_row(n, k);
}

bool CoeffTable::admissible(int u, int v) const {
    const int w = k_ - u - v;
    return u >= 0 && u <= n_.n1() && v >= 0 && v <= n_.n2() && w >= 0 && w <= n_.n3();
}

std::size_t CoeffTable::index(int u, int v) const {
    return static_cast<std::size_t>(u * (n_.n2() + 1) + v);
}

Rational CoeffTable::at(int u, int v) const {
    if (!admissible(u, v)) return Rational(0);
    return values_[index(u, v)];
}

Rational CoeffTable::at_occupation(int u1, int u2, int u3) const {
    if (u1 + u2 + u3 != k_) return Rational(0);
    return at(u1, u2);
}

void CoeffTable::set(int u, int v, Rational value) {
    if (!admissible(u, v))
        throw InvalidInput("CoeffTable::set outside the admissible grid at (" + std::to_string(u) + "," +
                           std::to_string(v) + ")");
    values_[index(u, v)] = std::move(value);
}

std::vector<std::pair<int, int>> CoeffTable::grid() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u <= n_.n1(); ++u)
        for (int v = 0; v <= n_.n2(); ++v)
            if (admissible(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<Rational> CoeffTable::values() const {
    std::vector<Rational> out;
    for (auto [u, v] : grid()) out.push_back(at(u, v));
    return out;
}

bool CoeffTable::is_zero() const {
    for (const Rational& x : values_)
        if (!x.is_zero()) return false;
    return true;
}

void CoeffTable::require_same_shape(const CoeffTable& rhs) const {
    if (!(n_ == rhs.n_) || k_ != rhs.k_) throw InvalidInput("CoeffTable shapes differ");
}

CoeffTable& CoeffTable::operator+=(const CoeffTable& rhs) {
    require_same_shape(rhs);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
    return *this;
}

CoeffTable& CoeffTable::operator-=(const CoeffTable& rhs) {
    require_same_shape(rhs);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= rhs.values_[i];
    return *this;
}

CoeffTable& CoeffTable::operator*=(const Rational& scale) {
    for (Rational& x : values_) x *= scale;
    return *this;
}

bool operator==(const CoeffTable& a, const CoeffTable& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.values_ == b.values_;
}

std::string CoeffTable::str() const {
    std::string out = "{";
    bool first = true;
    for (auto [u, v] : grid()) {
        if (!first) out += ", ";
        first = false;
        out += "(" + std::to_string(u) + "," + std::to_string(v) + "):" + at(u, v).str();
    }
    return out + "}";
}

}  // namespace spherical
