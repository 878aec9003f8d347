#include "coneindex/rational.hpp"

#include <boost/multiprecision/number.hpp>

#include <stdexcept>

namespace coneindex {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(text));
    }
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  }
}

std::string to_string(const Rational& r) { return r.str(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

Eigen::VectorXd to_double(const RationalVector& v) {
  Eigen::VectorXd out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

Eigen::MatrixXd to_double(const RationalMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

RationalVector rational_from_double(const Eigen::VectorXd& v) {
  RationalVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

RationalVector primitive_ray(const RationalVector& v) {
  Int den_lcm = 1;
  for (Index i = 0; i < v.size(); ++i)
    den_lcm = lcm(den_lcm, Int(denominator(v[i])));
  Int content = 0;
  RationalVector scaled = v;
  for (Index i = 0; i < v.size(); ++i) {
    scaled[i] = v[i] * den_lcm;
    content = gcd(content, Int(numerator(scaled[i])));
  }
  if (content == 0) throw std::invalid_argument("primitive_ray of the zero vector");
  for (Index i = 0; i < v.size(); ++i) scaled[i] /= Rational(content);
  return scaled;
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
  const Index n = std::min(a.size(), b.size());
  for (Index i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

bool is_zero(const RationalVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

RationalVector unit_vector(Index dim, Index axis) {
  RationalVector e = RationalVector::Zero(dim);
  e[axis] = 1;
  return e;
}

}  // namespace coneindex
