#ifndef RANKFORGE_POSITIVE_KERNEL_HPP_
#define RANKFORGE_POSITIVE_KERNEL_HPP_

// Exact feasibility of { c : M c = 0, c_j >= 1 for all j } by Fourier-Motzkin
// elimination over the rationals, with back substitution to produce a
// witness. Equalities are used to substitute a variable away before any
// pairwise combination happens.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "int_matrix.hpp"

namespace rankforge {

  using Rational = boost::multiprecision::cpp_rational;

  // Positive integer vector c with M c = 0, every entry >= 1, scaled to be
  // primitive (gcd of the entries is 1).
  struct PositiveKernelCertificate {
    std::vector<BigInt> coefficients;
  };

  namespace detail {

    // coeffs . x <= bound, or == bound when `equality`.
    struct LinearConstraint {
      std::vector<Rational> coeffs;
      Rational              bound;
      bool                  equality = false;

      bool operator<(LinearConstraint const& o) const {
        return std::tie(coeffs, bound, equality) < std::tie(o.coeffs, o.bound, o.equality);
      }
    };

    // Scales so the first nonzero coefficient has absolute value 1 (and is
    // positive for equalities), making duplicates detectable.
    inline LinearConstraint normalized(LinearConstraint c) {
      auto it = std::find_if(c.coeffs.begin(), c.coeffs.end(), [](auto& x) {
        return x != 0;
      });
      if (it == c.coeffs.end()) {
        return c;
      }
      Rational k = abs(*it);
      if (c.equality && *it < 0) {
        k = -k;
      }
      for (auto& x : c.coeffs) {
        x /= k;
      }
      c.bound /= k;
      return c;
    }

    inline bool trivially_true(LinearConstraint const& c) {
      bool zero = std::all_of(
          c.coeffs.begin(), c.coeffs.end(), [](auto& x) { return x == 0; });
      return zero && (c.equality ? c.bound == 0 : c.bound >= 0);
    }

    inline bool trivially_false(LinearConstraint const& c) {
      bool zero = std::all_of(
          c.coeffs.begin(), c.coeffs.end(), [](auto& x) { return x == 0; });
      return zero && (c.equality ? c.bound != 0 : c.bound < 0);
    }

    using System = std::vector<LinearConstraint>;

    inline System simplified(System const& s) {
      std::set<LinearConstraint> seen;
      System                     out;
      for (auto const& c : s) {
        if (trivially_true(c)) {
          continue;
        }
        auto n = normalized(c);
        if (seen.insert(n).second) {
          out.push_back(std::move(n));
        }
      }
      return out;
    }

    // a + k * b, coefficientwise
    inline LinearConstraint combine(LinearConstraint const& a,
                                    Rational const&         k,
                                    LinearConstraint const& b) {
      LinearConstraint out = a;
      for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
        out.coeffs[i] += k * b.coeffs[i];
      }
      out.bound += k * b.bound;
      return out;
    }

    // Removes variable `k` from `s`. Result constraints have coefficient 0
    // on variables 0..k.
    inline System eliminate(System const& s, std::size_t k) {
      auto pivot = std::find_if(s.begin(), s.end(), [k](auto const& c) {
        return c.equality && c.coeffs[k] != 0;
      });
      System out;
      if (pivot != s.end()) {
        for (auto it = s.begin(); it != s.end(); ++it) {
          if (it == pivot) {
            continue;
          }
          if (it->coeffs[k] == 0) {
            out.push_back(*it);
          } else {
            out.push_back(combine(*it, -it->coeffs[k] / pivot->coeffs[k], *pivot));
          }
        }
        return simplified(out);
      }
      std::vector<LinearConstraint const*> upper, lower;
      for (auto const& c : s) {
        if (c.coeffs[k] > 0) {
          upper.push_back(&c);
        } else if (c.coeffs[k] < 0) {
          lower.push_back(&c);
        } else {
          out.push_back(c);
        }
      }
      for (auto const* u : upper) {
        for (auto const* l : lower) {
          // u / u_k + l / |l_k|
          LinearConstraint sum = combine(*u, u->coeffs[k] / -l->coeffs[k], *l);
          out.push_back(std::move(sum));
        }
      }
      return simplified(out);
    }

    // Value for variable k given values for variables > k, chosen as the
    // greatest lower bound (there always is one: x_k >= 1).
    inline std::optional<Rational> pick(System const&                s,
                                        std::size_t                  k,
                                        std::vector<Rational> const& x) {
      std::optional<Rational> lo, hi, fixed;
      for (auto const& c : s) {
        Rational rest = c.bound;
        for (std::size_t i = k + 1; i < c.coeffs.size(); ++i) {
          rest -= c.coeffs[i] * x[i];
        }
        Rational a = c.coeffs[k];
        if (a == 0) {
          if (c.equality ? rest != 0 : rest < 0) {
            return std::nullopt;
          }
          continue;
        }
        Rational v = rest / a;
        if (c.equality) {
          if (fixed && *fixed != v) {
            return std::nullopt;
          }
          fixed = v;
        } else if (a > 0) {
          hi = hi ? std::min(*hi, v) : v;
        } else {
          lo = lo ? std::max(*lo, v) : v;
        }
      }
      Rational value = fixed ? *fixed : (lo ? *lo : (hi ? *hi : Rational(0)));
      if ((lo && value < *lo) || (hi && value > *hi)) {
        return std::nullopt;
      }
      return value;
    }

  }  // namespace detail

  [[nodiscard]] inline std::optional<PositiveKernelCertificate>
  positive_kernel_exists(IntMatrix const& M) {
    std::size_t const m = M.cols();
    detail::System    system;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      detail::LinearConstraint c{std::vector<Rational>(m), Rational(0), true};
      for (std::size_t j = 0; j < m; ++j) {
        c.coeffs[j] = Rational(M(i, j));
      }
      system.push_back(std::move(c));
    }
    for (std::size_t j = 0; j < m; ++j) {
      detail::LinearConstraint c{std::vector<Rational>(m), Rational(-1), false};
      c.coeffs[j] = -1;
      system.push_back(std::move(c));
    }

    std::vector<detail::System> stages{detail::simplified(system)};
    for (std::size_t k = 0; k < m; ++k) {
      stages.push_back(detail::eliminate(stages.back(), k));
    }
    if (std::any_of(stages.back().begin(),
                    stages.back().end(),
                    detail::trivially_false)) {
      return std::nullopt;
    }

    std::vector<Rational> x(m);
    for (std::size_t k = m; k-- > 0;) {
      auto v = detail::pick(stages[k], k, x);
      if (!v) {
        return std::nullopt;
      }
      x[k] = *v;
    }

    BigInt scale = 1;
    for (auto const& v : x) {
      scale = lcm(scale, denominator(v));
    }
    PositiveKernelCertificate cert;
    BigInt                    g = 0;
    for (auto const& v : x) {
      BigInt c = numerator(v) * (scale / denominator(v));
      g        = gcd(g, c);
      cert.coefficients.push_back(std::move(c));
    }
    if (g > 1) {
      for (auto& c : cert.coefficients) {
        c /= g;
      }
    }
    return cert;
  }

}  // namespace rankforge

#endif  // RANKFORGE_POSITIVE_KERNEL_HPP_
