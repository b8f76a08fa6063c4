#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "mahonian/core.hpp"

namespace mahonian {

using Integer = boost::multiprecision::cpp_int;

enum class Var { T = 0, Q = 1, X = 2 };

// Exponent triple ordered (t, q, x).
using Exponent = std::array<int, 3>;

class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(long long c);  // NOLINT: constants convert implicitly
    static MultiPoly monomial(Integer c, int et, int eq, int ex);
    static MultiPoly var(Var v, int power = 1);

    const std::map<Exponent, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(const Exponent& e) const;
    void add_term(const Exponent& e, const Integer& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly operator-() const;
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    MultiPoly scale(const Integer& c) const;
    // Sum of coefficients, i.e. the value at t = q = x = 1.
    Integer at_ones() const;
    int degree(Var v) const;
    // Substitute 1 for the variable v.
    MultiPoly specialize_one(Var v) const;

    std::string to_text() const;
    std::string to_json() const;
    static MultiPoly from_json(const std::string& s);

private:
    std::map<Exponent, Integer> terms_;
};

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

MultiPoly q_int(int i);
MultiPoly q_factorial(int i);
MultiPoly q_binomial(int n, int k);
MultiPoly q_multinomial(int n, const Composition& parts);
MultiPoly det_poly(const PolyMatrix& M);
MultiPoly mahonian_stirling_product(int n);

// Closed forms used by the identity checks.
MultiPoly stanley_matrix_det(int n, const PositionSet& S);
Integer multinomial(int n, const Composition& parts);
Integer binomial(int n, int k);
Integer macmahon_det(int n, const PositionSet& S);

}  // namespace mahonian
