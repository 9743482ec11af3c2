#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rumin/exterior.hpp"

namespace rumin {

enum class OpTag {
  L_tau,
  L_taubar,
  L_dtau,
  L_theta,
  i_T,
  i_Tbar,
  i_E,
  Del,
  Dbar,
  D,
  i_dj,
  i_dbarj,
  L_zetaj,
  L_xij,
};

/// Names one of the basic operators on forms; indexed ones carry a 0-based j.
struct OperatorHandle {
  OpTag tag;
  int index = -1;
};

inline Form zeta(int n, int j);
inline Form xi(int n, int j);

/// A linear operator on forms with a printable name.
class Operator {
 public:
  using Fn = std::function<Form(const Form&)>;

  Operator(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  Form operator()(const Form& w) const { return fn_(w); }
  const std::string& name() const { return name_; }

  static Operator identity() {
    return {"1", [](const Form& w) { return w; }};
  }
  static Operator wedge_left(std::string name, Form a) {
    return {std::move(name), [a = std::move(a)](const Form& w) { return wedge(a, w); }};
  }
  /// Multiplication by a function (|z|^2, constants, ...).
  static Operator multiply(std::string name, Poly f) {
    return {std::move(name), [f = std::move(f)](const Form& w) { return f * w; }};
  }

  friend Operator operator*(const Operator& a, const Operator& b) {
    return {a.name_ + " " + b.name_, [a, b](const Form& w) { return a(b(w)); }};
  }
  friend Operator operator+(const Operator& a, const Operator& b) {
    return {"(" + a.name_ + " + " + b.name_ + ")", [a, b](const Form& w) { return a(w) + b(w); }};
  }
  friend Operator operator-(const Operator& a, const Operator& b) {
    return {"(" + a.name_ + " - " + b.name_ + ")", [a, b](const Form& w) { return a(w) - b(w); }};
  }
  friend Operator operator*(const GaussRational& c, const Operator& a) {
    return {c.str() + " " + a.name_, [c, a](const Form& w) { return a(w) * c; }};
  }

 private:
  std::string name_;
  Fn fn_;
};

inline Operator commutator(const Operator& a, const Operator& b) {
  return {"[" + a.name() + ", " + b.name() + "]",
          [a, b](const Form& w) { return a(b(w)) - b(a(w)); }};
}
inline Operator anticommutator(const Operator& a, const Operator& b) {
  return {"{" + a.name() + ", " + b.name() + "}",
          [a, b](const Form& w) { return a(b(w)) + b(a(w)); }};
}

inline Operator make_operator(int n, OperatorHandle h) {
  const int j = h.index;
  auto need_index = [&] {
    if (j < 0 || j >= n) throw std::invalid_argument("operator index out of range");
  };
  const std::string sj = std::to_string(j + 1);
  switch (h.tag) {
    case OpTag::L_tau: return Operator::wedge_left("L_tau", tau(n));
    case OpTag::L_taubar: return Operator::wedge_left("L_taubar", tau_bar(n));
    case OpTag::L_dtau: return Operator::wedge_left("L_dtau", dtau(n));
    case OpTag::L_theta: return Operator::wedge_left("L_theta", theta(n));
    case OpTag::i_T: return {"i_T", [](const Form& w) { return i_T(w); }};
    case OpTag::i_Tbar: return {"i_Tbar", [](const Form& w) { return i_Tbar(w); }};
    case OpTag::i_E: return {"i_E", [](const Form& w) { return i_E(w); }};
    case OpTag::Del: return {"del", [](const Form& w) { return del(w); }};
    case OpTag::Dbar: return {"dbar", [](const Form& w) { return dbar(w); }};
    case OpTag::D: return {"d", [](const Form& w) { return d(w); }};
    case OpTag::i_dj:
      need_index();
      return {"i_d" + sj, [j](const Form& w) { return contract(j, Slot::Hol, w); }};
    case OpTag::i_dbarj:
      need_index();
      return {"i_dbar" + sj, [j](const Form& w) { return contract(j, Slot::Anti, w); }};
    case OpTag::L_zetaj: need_index(); return Operator::wedge_left("L_zeta" + sj, zeta(n, j));
    case OpTag::L_xij: need_index(); return Operator::wedge_left("L_xi" + sj, xi(n, j));
  }
  throw std::invalid_argument("unknown operator tag");
}

/// zeta_j = dzbar_j - zbar_j taubar.
inline Form zeta(int n, int j) { return Form::dzbar(n, j) - Poly::zbar(n, j) * tau_bar(n); }
/// xi_j = dz_j - z_j tau.
inline Form xi(int n, int j) { return Form::dz(n, j) - Poly::z(n, j) * tau(n); }

/// All canonical words of bidegree (p, q) in dimension n.
inline std::vector<WedgeWord> words_of_bidegree(int n, int p, int q) {
  std::vector<WedgeWord> out;
  if (p < 0 || q < 0) return out;
  for (unsigned a = 0; a < (1u << n); ++a) {
    if (std::popcount(a) != q) continue;
    for (unsigned h = 0; h < (1u << n); ++h) {
      if (std::popcount(h) != p) continue;
      out.push_back(WedgeWord{static_cast<std::uint16_t>(a | (h << kMaxDim))});
    }
  }
  return out;
}

/// Thrown when a commutator does not act as a scalar on the probed bidegree.
struct NotScalar : std::runtime_error {
  NotScalar(const std::string& op, std::string w)
      : std::runtime_error(op + " is not scalar; witness input " + w), witness(std::move(w)) {}
  std::string witness;
};

/// Applies [A, B] to every constant-coefficient word of bidegree (p, q-1) and
/// returns the common multiplier. Throws NotScalar with the offending word otherwise.
inline Poly commutator_scalar_probe(int n, OperatorHandle a, OperatorHandle b, int p, int q) {
  if (p + q > n) throw std::invalid_argument("commutator_scalar_probe: p+q > n");
  const Operator c = commutator(make_operator(n, a), make_operator(n, b));
  std::optional<Poly> common;
  for (WedgeWord w : words_of_bidegree(n, p, q - 1)) {
    const Form in = Form::word(n, w, Poly(n, GaussRational(1)));
    const Form out = c(in);
    // Scalar action: out = s * in for a single polynomial s.
    if (out.terms().size() > 1 || (!out.is_zero() && out.terms().begin()->first != w))
      throw NotScalar(c.name(), w.str());
    const Poly s = out.coefficient(w);
    if (!common) {
      common = s;
    } else if (!(*common == s)) {
      throw NotScalar(c.name(), w.str());
    }
  }
  return common.value_or(Poly(n));
}

}  // namespace rumin
