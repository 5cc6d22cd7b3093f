#include "liftreg/rational.hpp"

#include <sstream>

namespace liftreg {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rat Rat::parse(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    fail(ErrorCode::kParse, "invalid rational '" + text + "'");
  Int n(num), d(den);
  if (d == 0) fail(ErrorCode::kParse, "zero denominator in '" + text + "'");
  return Rat(n, d);
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Int Rat::floor() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
  return q;
}

Int Rat::ceil() const {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
  return q;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) fail(ErrorCode::kInternal, "dot: size mismatch");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  if (a.size() != b.size()) fail(ErrorCode::kInternal, "dot: size mismatch");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) fail(ErrorCode::kInternal, "dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scaled(const Rat& s, const RatVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

IntVec neg(const IntVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

RatVec parse_rat_vec(const std::string& text) {
  RatVec out;
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, ',')) out.push_back(Rat::parse(token));
  if (out.empty()) fail(ErrorCode::kParse, "empty vector '" + text + "'");
  return out;
}

std::string str(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

std::string str(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

IntVec primitive_vector(const RatVec& v) {
  bool all_zero = true;
  for (const auto& x : v)
    if (!x.is_zero()) all_zero = false;
  if (all_zero) fail(ErrorCode::kZeroVector, "primitive_vector of zero vector");
  Int L = 1;
  for (const auto& x : v) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.den().get_mpz_t());
  IntVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(L);
    w[i] = s.num();  // integral by construction
  }
  return primitive_vector(w);
}

IntVec primitive_vector(const IntVec& v) {
  if (is_zero(v)) fail(ErrorCode::kZeroVector, "primitive_vector of zero vector");
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  IntVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
  return w;
}

}  // namespace liftreg
