#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "treeskel/rational.hpp"

namespace treeskel {

namespace detail {

inline long long isqrt_ll(long long v) {
  if (v < 0) throw std::invalid_argument("isqrt of negative value");
  long long t = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (t > 0 && t * t > v) --t;
  while ((t + 1) * (t + 1) <= v) ++t;
  return t;
}

inline Integer pow2(long long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

}  // namespace detail

/// The clique lower bound 2^((sqrt(floor(m/2)) - 9)/2), where the argument m
/// depends on the theorem: n-k-1 (leaf-constrained), |U|-k-1 (restricted
/// leaf-set), n-|U|-1 (set-of-vertices), s-1 (degree-constrained, with
/// s = floor((n-2)/(k-1))), or n (travelling salesman).
struct CliqueBound {
  std::string theorem;
  long long m = 0;
  long long f = 0;  // floor(m/2)
  bool exponent_is_rational = false;
  Rational exponent;  // (sqrt(f)-9)/2, valid when f is a perfect square
  std::string expression;
  double approx = 0.0;
  bool vacuous = false;  // bound < 1, i.e. f < 81
};

/// The formula argument m for a theorem's parameters; domain violations raise
/// invalid_argument.
inline long long clique_bound_arg(const std::string& theorem, int n, std::optional<int> k,
                                  std::optional<int> u_size) {
  if (theorem == "lcmst") {
    if (!k) throw std::invalid_argument("lcmst bound needs k");
    if (*k < 1 || *k >= n) throw std::invalid_argument("lcmst bound needs 1 <= k < n");
    return static_cast<long long>(n) - *k - 1;
  }
  if (theorem == "rlsmst") {
    if (!k || !u_size) throw std::invalid_argument("rlsmst bound needs k and |U|");
    if (*u_size < 1 || *u_size > n) throw std::invalid_argument("rlsmst bound needs 1 <= |U| <= n");
    if (*k < 1 || *k >= *u_size) throw std::invalid_argument("rlsmst bound needs 1 <= k < |U|");
    return static_cast<long long>(*u_size) - *k - 1;
  }
  if (theorem == "svmst") {
    if (!u_size) throw std::invalid_argument("svmst bound needs |U|");
    if (*u_size < 1 || *u_size > n) throw std::invalid_argument("svmst bound needs 1 <= |U| <= n");
    return static_cast<long long>(n) - *u_size - 1;
  }
  if (theorem == "dcmst") {
    if (!k) throw std::invalid_argument("dcmst bound needs k");
    if (*k < 2) throw std::invalid_argument("dcmst bound needs k >= 2");
    return static_cast<long long>((n - 2) / (*k - 1)) - 1;
  }
  if (theorem == "tsp") {
    if (n < 1) throw std::invalid_argument("tsp bound needs n >= 1");
    return n;
  }
  throw std::invalid_argument("unknown bound theorem: " + theorem);
}

inline CliqueBound clique_bound(const std::string& theorem, int n, std::optional<int> k = {},
                                std::optional<int> u_size = {}) {
  CliqueBound b;
  b.theorem = theorem;
  b.m = clique_bound_arg(theorem, n, k, u_size);
  if (b.m < 0) throw std::invalid_argument("bound argument m is negative; out of the theorem's domain");
  b.f = b.m / 2;
  b.approx = std::exp2((std::sqrt(static_cast<double>(b.f)) - 9.0) / 2.0);
  b.vacuous = b.f < 81;
  long long t = detail::isqrt_ll(b.f);
  b.expression = "2^((sqrt(" + std::to_string(b.f) + ")-9)/2)";
  if (t * t == b.f) {
    b.exponent_is_rational = true;
    b.exponent = make_rational(t - 9, 2);
    b.expression += " = 2^(" + to_string(b.exponent) + ")";
    Rational e = b.exponent;
    if (is_integer(e) && e >= 0) {
      Integer v = detail::pow2(mpz_get_si(e.get_num_mpz_t()));
      b.expression += " = " + v.get_str();
    }
  }
  return b;
}

/// Exact decision of omega >= 2^((sqrt(f)-9)/2) for an integer omega >= 1.
/// f <= 81 makes the bound at most 1, perfect squares reduce to integer
/// powers, and otherwise the comparison 512*omega^2 vs 2^sqrt(f) (equality
/// impossible: the right side is irrational) is decided by bracketing the
/// exponent; the floating-point tail is unreachable until f > 81, far beyond
/// enumerable sizes, and refuses rather than guesses when its margin is too
/// small.
inline bool clique_meets_bound(const Integer& omega, long long f) {
  if (omega < 1) throw std::invalid_argument("clique size must be at least 1");
  if (f <= 81) return true;
  long long t = detail::isqrt_ll(f);
  if (t * t == f) {
    long long num = t - 9;  // exponent is num/2 > 0 here
    if (num % 2 == 0) return omega >= detail::pow2(num / 2);
    Integer sq = omega * omega;
    return sq >= detail::pow2(num);
  }
  Integer a = 512 * omega * omega;  // compare a vs 2^sqrt(f), sqrt(f) in (t, t+1)
  if (a >= detail::pow2(t + 1)) return true;
  if (a <= detail::pow2(t)) return false;
  long exp2_of_a = 0;
  double mant = mpz_get_d_2exp(&exp2_of_a, a.get_mpz_t());
  double log2_a = std::log2(mant) + static_cast<double>(exp2_of_a);
  double diff = log2_a * log2_a - static_cast<double>(f);
  if (std::abs(diff) < 1e-6)
    throw std::runtime_error("bound comparison too close to decide in floating point");
  return diff > 0;
}

}  // namespace treeskel
