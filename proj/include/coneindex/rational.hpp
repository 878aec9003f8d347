#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <vector>

namespace coneindex {

// Exact arbitrary-precision scalars. All cone geometry is computed over the
// rationals; floating point appears only where a norm or an angle forces it.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

// Parses "p/q" or "p" with arbitrary-precision integers. Throws
// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

double to_double(const Rational& r);
Eigen::VectorXd to_double(const RationalVector& v);
Eigen::MatrixXd to_double(const RationalMatrix& m);

// Exact conversion; every finite double is a binary rational.
RationalVector rational_from_double(const Eigen::VectorXd& v);

// Scales a nonzero vector by a positive rational so that the entries become
// coprime integers. Ray directions compare equal iff their primitive forms do.
RationalVector primitive_ray(const RationalVector& v);

bool lex_less(const RationalVector& a, const RationalVector& b);

bool is_zero(const RationalVector& v);

RationalVector unit_vector(Index dim, Index axis);

}  // namespace coneindex
