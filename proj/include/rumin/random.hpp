#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rumin/operators.hpp"

namespace rumin {

/// Seeded source of small random polynomials and forms. Draws use plain modular
/// reduction of mt19937_64 output so sequences are identical across standard libraries.
class FormSampler {
 public:
  explicit FormSampler(std::uint64_t seed) : rng_(seed) {}
  FormSampler(std::uint64_t seed, std::initializer_list<std::uint64_t> salt) : rng_(mix(seed, salt)) {}

  int uniform(int lo, int hi) {
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// num/den with |num| <= 3, 1 <= den <= 3; the imaginary part is zero half the time.
  GaussRational coefficient() {
    Rational re = small_rational();
    Rational im = uniform(0, 1) ? small_rational() : Rational(0);
    if (sgn(re) == 0 && sgn(im) == 0) re = 1;
    return GaussRational(re, im);
  }

  /// 1 to 3 terms of total degree at most 3 in z, zbar.
  Poly poly(int n) {
    Poly p(n);
    const int terms = uniform(1, 3);
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      const int deg = uniform(0, 3);
      for (int k = 0; k < deg; ++k) {
        const int var = uniform(0, 2 * n - 1);
        if (var < n) ++m.hol(var);
        else ++m.anti(var - n);
      }
      p.add_term(m, coefficient());
    }
    return p;
  }

  /// 1 to 3 words of bidegree (p, q), each with a random coefficient. Zero when the
  /// bidegree has no words.
  Form form(int n, int p, int q) {
    Form w(n);
    const std::vector<WedgeWord> words = words_of_bidegree(n, p, q);
    if (words.empty()) return w;
    const int count = uniform(1, 3);
    for (int k = 0; k < count; ++k) w.add(words[static_cast<std::size_t>(uniform(0, static_cast<int>(words.size()) - 1))], poly(n));
    return w;
  }

 private:
  Rational small_rational() {
    Rational r(uniform(-3, 3), uniform(1, 3));
    r.canonicalize();
    return r;
  }
  static std::uint64_t mix(std::uint64_t seed, std::initializer_list<std::uint64_t> salt) {
    std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t s : salt) {
      h ^= s + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
    }
    return h;
  }
  std::mt19937_64 rng_;
};

}  // namespace rumin
