/* hnn.hpp -- Britton reduction over a pluggable base-group oracle, with an
 * exact affine model of Z x BS(1,2) as the shipped instance. */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpres/matrix.hpp"
#include "fpres/report.hpp"
#include "fpres/word.hpp"

namespace fpres {

/// A dyadic rational num / 2^den_exp in lowest terms (num odd or zero).
struct Dyadic {
  Int num = 0;
  unsigned den_exp = 0;

  static Dyadic of(Int num, unsigned den_exp = 0);
  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-() const;
  /// Value scaled by 2^k (k may be negative).
  Dyadic scaled(int k) const;
  bool operator==(const Dyadic&) const = default;
  std::string str() const;
};

/// The affine map u -> 2^scale_exp * u + translation.
struct AffineMap {
  int scale_exp = 0;
  Dyadic translation;

  static AffineMap identity() { return {}; }
  /// Left action: (f o g)(u) = f(g(u)).
  AffineMap compose(const AffineMap& g) const;
  AffineMap inverse() const;
  bool operator==(const AffineMap&) const = default;
  std::string str() const;
};

/// Evaluates a signed word over {x, y} with x: u -> 2u and y: u -> u+1,
/// composing left to right as a left action.
AffineMap bs12_eval(const Word& w);

/// An element of Z x BS(1,2): the Z factor (generator z) plus the affine
/// BS(1,2) factor (generators x, y).
struct KElement {
  long long z_exp = 0;
  AffineMap bs;

  bool operator==(const KElement&) const = default;
  std::string str() const;
};

/// Evaluates a signed word over {x, y, z}; z is central.
KElement k_eval(const Word& w);

/// Exponent k with e = x^k, i.e. e has no Z part, no translation, and
/// pure scale 2^k; nullopt otherwise.
std::optional<long long> k_membership_in_x(const KElement& e);

/// Oracle for Britton reduction in H = < K, t | t x t^{-1} = x >: base
/// evaluation, equality, membership in the associated subgroup <x>, and a
/// canonical right <x>-coset decomposition used for normal forms.
struct ZxBs12Oracle {
  using Element = KElement;

  Element identity() const { return {}; }
  Element eval(const Word& base_word) const { return k_eval(base_word); }
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::optional<long long> assoc_exponent(const Element& e) const {
    return k_membership_in_x(e);
  }
  Element assoc_power(long long k) const;
  /// g = result.first * x^result.second with result.first of scale 1.
  std::pair<Element, long long> right_normalize(const Element& g) const;
  std::string str(const Element& e) const { return e.str(); }
};

/// Alternating form g_0 t^{e_1} g_1 ... t^{e_n} g_n over a base oracle.
template <class Oracle>
struct HnnWord {
  struct Segment {
    int sign = +1;  // exponent of the t between the previous element and g
    typename Oracle::Element g;
  };
  typename Oracle::Element head;
  std::vector<Segment> tail;

  std::size_t t_length() const { return tail.size(); }
  long long t_exponent_sum() const {
    long long sum = 0;
    for (const auto& seg : tail) sum += seg.sign;
    return sum;
  }
};

/// Splits a mixed word at the stable letter, evaluates base segments with
/// the oracle, and removes pinches t^e a^k t^{-e} -> a^k (the association
/// is the identity on <a>) until none remain.
template <class Oracle>
HnnWord<Oracle> britton_reduce(const Oracle& oracle, const std::string& stable,
                               const Word& w);

/// True iff the reduced word contains no pinch; reduced outputs satisfy
/// this by construction.
template <class Oracle>
bool is_pinch_free(const Oracle& oracle, const HnnWord<Oracle>& w);

/// Canonical representative: sweeps powers of the associated generator
/// rightward so every segment except the last has trivial <a>-part on the
/// right. Two reduced words are equal in the HNN extension iff their
/// canonical forms agree segment-wise.
template <class Oracle>
HnnWord<Oracle> hnn_canonical(const Oracle& oracle, HnnWord<Oracle> w);

template <class Oracle>
bool hnn_equal(const Oracle& oracle, const HnnWord<Oracle>& a, const HnnWord<Oracle>& b);

template <class Oracle>
std::string hnn_str(const Oracle& oracle, const HnnWord<Oracle>& w,
                    const std::string& stable);

/// Value of a mixed word over {t, x, y, z} in H, as a canonical-form key.
std::string h_value_key(const Word& w);

/// Checks the trace-submonoid structure of < t, x, z, xy > in H: adjacent
/// generator pairs commute, non-adjacent pairs separate, and ball counts
/// match swap-closure trace classes up to length `ball`.
VerificationReport verify_trace_submonoid(int ball);

// --- template definitions ---

template <class Oracle>
HnnWord<Oracle> britton_reduce(const Oracle& oracle, const std::string& stable,
                               const Word& w) {
  HnnWord<Oracle> out;
  out.head = oracle.identity();
  Word base_acc;
  auto flush = [&](int sign) {
    typename Oracle::Element g = oracle.eval(base_acc);
    base_acc = Word{};
    if (out.tail.empty())
      out.head = oracle.multiply(out.head, g);
    else
      out.tail.back().g = oracle.multiply(out.tail.back().g, g);
    if (sign != 0) out.tail.push_back({sign, oracle.identity()});
  };
  for (const Symbol& s : w.syms) {
    if (s.name == stable)
      flush(s.sign);
    else
      base_acc *= s;
  }
  flush(0);

  // Pinch removal: t^e g t^{-e} with g in <a> collapses to g.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < out.tail.size(); ++i) {
      if (out.tail[i].sign != -out.tail[i + 1].sign) continue;
      if (!oracle.assoc_exponent(out.tail[i].g)) continue;
      typename Oracle::Element merged = oracle.multiply(out.tail[i].g, out.tail[i + 1].g);
      if (i == 0)
        out.head = oracle.multiply(out.head, merged);
      else
        out.tail[i - 1].g = oracle.multiply(out.tail[i - 1].g, merged);
      out.tail.erase(out.tail.begin() + i, out.tail.begin() + i + 2);
      changed = true;
      break;
    }
  }
  return out;
}

template <class Oracle>
bool is_pinch_free(const Oracle& oracle, const HnnWord<Oracle>& w) {
  for (std::size_t i = 0; i + 1 < w.tail.size(); ++i) {
    if (w.tail[i].sign == -w.tail[i + 1].sign && oracle.assoc_exponent(w.tail[i].g))
      return false;
  }
  return true;
}

template <class Oracle>
HnnWord<Oracle> hnn_canonical(const Oracle& oracle, HnnWord<Oracle> w) {
  if (w.tail.empty()) return w;
  auto [head, carry] = oracle.right_normalize(w.head);
  w.head = head;
  for (std::size_t i = 0; i < w.tail.size(); ++i) {
    typename Oracle::Element g =
        oracle.multiply(oracle.assoc_power(carry), w.tail[i].g);
    if (i + 1 < w.tail.size()) {
      auto [norm, next_carry] = oracle.right_normalize(g);
      w.tail[i].g = norm;
      carry = next_carry;
    } else {
      w.tail[i].g = g;
    }
  }
  return w;
}

template <class Oracle>
bool hnn_equal(const Oracle& oracle, const HnnWord<Oracle>& a, const HnnWord<Oracle>& b) {
  if (a.tail.size() != b.tail.size()) return false;
  HnnWord<Oracle> ca = hnn_canonical(oracle, a);
  HnnWord<Oracle> cb = hnn_canonical(oracle, b);
  if (!oracle.equal(ca.head, cb.head)) return false;
  for (std::size_t i = 0; i < ca.tail.size(); ++i) {
    if (ca.tail[i].sign != cb.tail[i].sign) return false;
    if (!oracle.equal(ca.tail[i].g, cb.tail[i].g)) return false;
  }
  return true;
}

template <class Oracle>
std::string hnn_str(const Oracle& oracle, const HnnWord<Oracle>& w,
                    const std::string& stable) {
  std::string out = oracle.str(w.head);
  for (const auto& seg : w.tail) {
    out += " " + stable + (seg.sign > 0 ? "" : "^-1") + " " + oracle.str(seg.g);
  }
  return out;
}

}  // namespace fpres
