#pragma once

// Taxonomy of beam-splitting configurations. Deflection of component j is
// proportional to chi_j times the effective gradient sign; the lettered cases
// (a)-(l) are defined for a positive gradient, and a negative gradient
// mirrors both bend directions while keeping category and letter.

#include <sglight/derived.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>

namespace sglight {

enum class SplitCategory { Symmetric, SameDirection, OppositeDirection, SingleBent, CommonDeflection, NoDeflection };
enum class Bend { Left, Right, Straight };
enum class MagnitudeOrder { FirstLarger, SecondLarger, Equal };

inline const char* to_string(SplitCategory c) {
  switch (c) {
    case SplitCategory::Symmetric: return "Symmetric";
    case SplitCategory::SameDirection: return "SameDirection";
    case SplitCategory::OppositeDirection: return "OppositeDirection";
    case SplitCategory::SingleBent: return "SingleBent";
    case SplitCategory::CommonDeflection: return "CommonDeflection";
    case SplitCategory::NoDeflection: return "NoDeflection";
  }
  return "?";
}

inline const char* to_string(Bend b) {
  switch (b) {
    case Bend::Left: return "Left";
    case Bend::Right: return "Right";
    case Bend::Straight: return "Straight";
  }
  return "?";
}

inline const char* to_string(MagnitudeOrder m) {
  switch (m) {
    case MagnitudeOrder::FirstLarger: return "FirstLarger";
    case MagnitudeOrder::SecondLarger: return "SecondLarger";
    case MagnitudeOrder::Equal: return "Equal";
  }
  return "?";
}

struct SplitVerdict {
  SplitCategory category = SplitCategory::NoDeflection;
  std::optional<char> condition_label;
  std::array<Bend, 2> bend_direction{Bend::Straight, Bend::Straight};
  MagnitudeOrder magnitude_order = MagnitudeOrder::Equal;

  bool operator==(const SplitVerdict&) const = default;
};

/// `category=<...> label=<...> dir1=<...> dir2=<...> order=<...>`
inline std::string format_verdict(const SplitVerdict& v) {
  std::string s = "category=";
  s += to_string(v.category);
  s += " label=";
  s += v.condition_label ? std::string(1, *v.condition_label) : std::string("-");
  s += " dir1=";
  s += to_string(v.bend_direction[0]);
  s += " dir2=";
  s += to_string(v.bend_direction[1]);
  s += " order=";
  s += to_string(v.magnitude_order);
  return s;
}

inline SplitVerdict classify(double chi1, double chi2, int gradient_sign) {
  const double tol = 1e-12 * std::max({std::abs(chi1), std::abs(chi2), 1.0});
  const auto sgn = [tol](double v) { return v > tol ? 1 : (v < -tol ? -1 : 0); };
  const int s1 = sgn(chi1);
  const int s2 = sgn(chi2);
  const int g = gradient_sign > 0 ? 1 : (gradient_sign < 0 ? -1 : 0);

  SplitVerdict v;
  if (g == 0 || (s1 == 0 && s2 == 0)) return v;

  const auto bend = [g](int s) { return s * g > 0 ? Bend::Right : (s * g < 0 ? Bend::Left : Bend::Straight); };
  v.bend_direction = {bend(s1), bend(s2)};
  const int order = sgn(std::abs(chi1) - std::abs(chi2));
  v.magnitude_order = order > 0 ? MagnitudeOrder::FirstLarger
                                : (order < 0 ? MagnitudeOrder::SecondLarger : MagnitudeOrder::Equal);

  if (sgn(chi1 + chi2) == 0) {
    v.category = SplitCategory::Symmetric;
  } else if (sgn(chi1 - chi2) == 0) {
    v.category = SplitCategory::CommonDeflection;
  } else if (s1 == 0) {
    v.category = SplitCategory::SingleBent;
    v.condition_label = s2 > 0 ? 'i' : 'j';
  } else if (s2 == 0) {
    v.category = SplitCategory::SingleBent;
    v.condition_label = s1 > 0 ? 'k' : 'l';
  } else if (s1 == s2) {
    v.category = SplitCategory::SameDirection;
    if (s1 < 0) v.condition_label = chi1 < chi2 ? 'a' : 'b';
    else v.condition_label = chi2 > chi1 ? 'c' : 'd';
  } else {
    v.category = SplitCategory::OppositeDirection;
    const bool first_larger = order > 0;
    if (s1 > 0) v.condition_label = first_larger ? 'e' : 'f';
    else v.condition_label = first_larger ? 'h' : 'g';
  }
  return v;
}

/// Effective gradient sign: sign(B1) for a magnetic gradient, sign(a B) behind
/// a Gaussian control beam, none for uniform fields.
inline SplitVerdict classify_scenario(const Scenario& s, const DerivedParams& p) {
  const auto sign = [](double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
  switch (s.mode) {
    case Mode::MagneticGradient: return classify(p.chi[0], p.chi[1], sign(s.b1));
    case Mode::OpticalGradient: return classify(p.chi[0], p.chi[1], sign(s.probe_a) * sign(s.b0));
    case Mode::Uniform: break;
  }
  return {};
}

}  // namespace sglight
