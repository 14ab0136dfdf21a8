#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spherical/blocks.hpp"
#include "spherical/rational.hpp"

namespace spherical {

/// Coefficients f(u, v) of a G_n-invariant of degree k written as
///   sum_{u,v} f(u,v) e_u(x^(1)) e_v(x^(2)) e_{k-u-v}(x^(3)),
/// where e_j(x^(i)) is the elementary symmetric polynomial in the variables of
/// block i. Only the admissible grid 0<=u<=n1, 0<=v<=n2, 0<=k-u-v<=n3 is
/// stored; reads anywhere else return zero.
class CoeffTable {
public:
    CoeffTable(const BlockTriple& n, int k);

    const BlockTriple& blocks() const { return n_; }
    int k() const { return k_; }

    bool admissible(int u, int v) const;
    Rational at(int u, int v) const;
    /// Entry by block occupation (u1, u2, u3); zero unless u1+u2+u3 == k.
    Rational at_occupation(int u1, int u2, int u3) const;
    void set(int u, int v, Rational value);

    /// Admissible (u, v), u-major.
    std::vector<std::pair<int, int>> grid() const;
    /// Entries in grid() order.
    std::vector<Rational> values() const;

    bool is_zero() const;

    CoeffTable& operator+=(const CoeffTable& rhs);
    CoeffTable& operator-=(const CoeffTable& rhs);
    CoeffTable& operator*=(const Rational& scale);
    friend CoeffTable operator-(CoeffTable lhs, const CoeffTable& rhs) { return lhs -= rhs; }
    friend CoeffTable operator*(const Rational& s, CoeffTable t) { return t *= s; }

    friend bool operator==(const CoeffTable& a, const CoeffTable& b);

    std::string str() const;

private:
    std::size_t index(int u, int v) const;
    void require_same_shape(const CoeffTable& rhs) const;

    BlockTriple n_;
    int k_;
    std::vector<Rational> values_;
};

}  // namespace spherical
