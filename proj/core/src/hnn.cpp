#include "fpres/hnn.hpp"

#include <chrono>
#include <map>
#include <set>

#include "fpres/families.hpp"

namespace fpres {

Dyadic Dyadic::of(Int num, unsigned den_exp) {
  while (num != 0 && den_exp > 0 && num % 2 == 0) {
    num /= 2;
    --den_exp;
  }
  if (num == 0) den_exp = 0;
  return Dyadic{std::move(num), den_exp};
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  unsigned e = std::max(den_exp, o.den_exp);
  Int a = num << (e - den_exp);
  Int b = o.num << (e - o.den_exp);
  return Dyadic::of(a + b, e);
}

Dyadic Dyadic::operator-() const { return Dyadic{-num, den_exp}; }

Dyadic Dyadic::scaled(int k) const {
  if (k >= 0) return Dyadic::of(num << k, den_exp);
  return Dyadic::of(num, den_exp + static_cast<unsigned>(-k));
}

std::string Dyadic::str() const {
  std::string out = num.str();
  if (den_exp > 0) out += "/2^" + std::to_string(den_exp);
  return out;
}

AffineMap AffineMap::compose(const AffineMap& g) const {
  // (f o g)(u) = 2^{kf} (2^{kg} u + tg) + tf
  return AffineMap{scale_exp + g.scale_exp, g.translation.scaled(scale_exp) + translation};
}

AffineMap AffineMap::inverse() const {
  return AffineMap{-scale_exp, (-translation).scaled(-scale_exp)};
}

std::string AffineMap::str() const {
  return "2^" + std::to_string(scale_exp) + "*u+" + translation.str();
}

AffineMap bs12_eval(const Word& w) {
  const AffineMap x{1, Dyadic{}};
  const AffineMap y{0, Dyadic{1, 0}};
  AffineMap acc;
  for (const Symbol& s : w.syms) {
    AffineMap m;
    if (s.name == "x")
      m = x;
    else if (s.name == "y")
      m = y;
    else
      throw std::invalid_argument("bs12_eval: word must be over {x, y}");
    if (s.sign < 0) m = m.inverse();
    acc = acc.compose(m);
  }
  return acc;
}

KElement k_eval(const Word& w) {
  KElement out;
  Word xy_part;
  for (const Symbol& s : w.syms) {
    if (s.name == "z")
      out.z_exp += s.sign;
    else
      xy_part *= s;
  }
  out.bs = bs12_eval(xy_part);
  return out;
}

std::optional<long long> k_membership_in_x(const KElement& e) {
  if (e.z_exp != 0 || e.bs.translation.num != 0) return std::nullopt;
  return e.bs.scale_exp;
}

std::string KElement::str() const {
  return "z^" + std::to_string(z_exp) + " " + bs.str();
}

KElement ZxBs12Oracle::multiply(const KElement& a, const KElement& b) const {
  return KElement{a.z_exp + b.z_exp, a.bs.compose(b.bs)};
}

KElement ZxBs12Oracle::inverse(const KElement& a) const {
  return KElement{-a.z_exp, a.bs.inverse()};
}

KElement ZxBs12Oracle::assoc_power(long long k) const {
  return KElement{0, AffineMap{static_cast<int>(k), Dyadic{}}};
}

std::pair<KElement, long long> ZxBs12Oracle::right_normalize(const KElement& g) const {
  // Right-multiplying by x^j shifts the scale exponent only, so the coset
  // g<x> has a unique scale-1 representative.
  KElement norm = g;
  long long k = g.bs.scale_exp;
  norm.bs.scale_exp = 0;
  return {norm, k};
}

std::string h_value_key(const Word& w) {
  const ZxBs12Oracle oracle;
  auto reduced = hnn_canonical(oracle, britton_reduce(oracle, "t", w));
  return hnn_str(oracle, reduced, "t");
}

VerificationReport verify_trace_submonoid(int ball) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = "hnn-trace";
  if (ball < 2) {
    report.fail("hnn.ball", "ball radius must be >= 2");
    return report;
  }

  const std::vector<std::string> gen_names{"t", "x", "z", "xy"};
  const std::vector<Word> gens{
      Word::letter("t"),
      Word::letter("x"),
      Word::letter("z"),
      Word::letter("x") * Word::letter("y"),
  };

  // (a) adjacency: P4-adjacent pairs commute, others do not.
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const bool adjacent = (j == i + 1);
      const bool commute = h_value_key(gens[i] * gens[j]) == h_value_key(gens[j] * gens[i]);
      report.check(commute == adjacent,
                   "hnn.pair." + gen_names[i] + "." + gen_names[j],
                   (adjacent ? "expected commuting, " : "expected separating, ") +
                       ("got " + std::string(commute ? "commuting" : "separating")));
    }
  }

  // (c) ball census: distinct H-values vs swap-closure trace classes.
  const TraceGraph p4 = TraceGraph::path({"u1", "u2", "u3", "u4"});
  std::map<std::string, std::set<Word>> by_value;   // H value -> trace forms
  std::map<Word, std::set<std::string>> by_class;   // trace form -> H values
  std::size_t sequences = 0;
  std::vector<std::vector<std::size_t>> level{{}};
  for (int len = 1; len <= ball; ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& seq : level) {
      for (std::size_t g = 0; g < 4; ++g) {
        auto extended = seq;
        extended.push_back(g);
        ++sequences;
        Word image, letters;
        for (std::size_t idx : extended) {
          image *= gens[idx];
          letters *= Word::letter("u" + std::to_string(idx + 1));
        }
        const std::string value = h_value_key(image);
        const Word trace_form = foata_normal_form(p4, letters);
        by_value[value].insert(trace_form);
        by_class[trace_form].insert(value);
        next.push_back(std::move(extended));
      }
    }
    level = std::move(next);
  }
  bool injective = true;
  std::string offender;
  for (const auto& [value, classes] : by_value) {
    if (classes.size() > 1) {
      injective = false;
      offender = "H-value " + value + " has " + std::to_string(classes.size()) +
                 " trace classes";
      break;
    }
  }
  for (const auto& [form, values] : by_class) {
    if (values.size() > 1) {
      injective = false;
      offender = "trace class " + to_string(form) + " has " +
                 std::to_string(values.size()) + " H-values";
      break;
    }
  }
  report.check(injective && by_value.size() == by_class.size(), "hnn.ball-census",
               std::to_string(sequences) + " sequences, " +
                   std::to_string(by_value.size()) + " H-values, " +
                   std::to_string(by_class.size()) + " trace classes" +
                   (offender.empty() ? "" : "; " + offender));

  // Homomorphism property of the affine model on pseudorandom word pairs.
  {
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next_rand = [&state]() {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    bool hom_ok = true;
    std::string hom_witness;
    for (int trial = 0; trial < 1000 && hom_ok; ++trial) {
      auto random_word = [&next_rand]() {
        Word w;
        const std::size_t len = next_rand() % 12;
        for (std::size_t i = 0; i < len; ++i) {
          w *= Symbol{next_rand() % 2 == 0 ? "x" : "y", next_rand() % 2 == 0 ? +1 : -1};
        }
        return w;
      };
      Word u = random_word(), v = random_word();
      if (!(bs12_eval(u * v) == bs12_eval(u).compose(bs12_eval(v)))) {
        hom_ok = false;
        hom_witness = "u = " + to_string(u) + ", v = " + to_string(v);
      }
    }
    report.check(hom_ok, "hnn.bs12-homomorphism",
                 hom_ok ? "1000 random pairs" : hom_witness);
  }

  // The defining BS(1,2) relation holds in the model.
  report.check(bs12_eval(parse_word("y y x")) == bs12_eval(parse_word("x y")),
               "hnn.bs12-relation", "y^2 x = x y");

  report.elapsed = std::chrono::steady_clock::now() - t0;
  return report;
}

}  // namespace fpres
