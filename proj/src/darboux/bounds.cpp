#include <string>

#include "effint/darboux.hpp"
#include "effint/error.hpp"

namespace effint {

int bound_multiplier(BoundProfile profile) {
  switch (profile) {
    case BoundProfile::ThmA:
      return 12;
    case BoundProfile::ThmA2_g1_isotrivial:
      return 6;
    case BoundProfile::ThmA2_g1_nonisotrivial:
      return 12;
    case BoundProfile::ThmA2_hyperbolic:
      return 42;
  }
  return 12;
}

std::string_view profile_name(BoundProfile profile) {
  switch (profile) {
    case BoundProfile::ThmA:
      return "ThmA";
    case BoundProfile::ThmA2_g1_isotrivial:
      return "ThmA2_g1_isotrivial";
    case BoundProfile::ThmA2_g1_nonisotrivial:
      return "ThmA2_g1_nonisotrivial";
    case BoundProfile::ThmA2_hyperbolic:
      return "ThmA2_hyperbolic";
  }
  return "ThmA";
}

std::string_view profile_cli_name(BoundProfile profile) {
  switch (profile) {
    case BoundProfile::ThmA:
      return "thmA";
    case BoundProfile::ThmA2_g1_isotrivial:
      return "a2g1";
    case BoundProfile::ThmA2_g1_nonisotrivial:
      return "a2g1n";
    case BoundProfile::ThmA2_hyperbolic:
      return "a2hyp";
  }
  return "thmA";
}

std::optional<BoundProfile> parse_profile(std::string_view text) {
  for (auto p : {BoundProfile::ThmA, BoundProfile::ThmA2_g1_isotrivial,
                 BoundProfile::ThmA2_g1_nonisotrivial, BoundProfile::ThmA2_hyperbolic}) {
    if (text == profile_cli_name(p) || text == profile_name(p)) return p;
  }
  return std::nullopt;
}

int degree_bound(int d, BoundProfile profile) {
  if (d < 2)
    throw DegreeTooSmall("degree bounds need a foliation of degree d >= 2 (got " +
                         std::to_string(d) + ")");
  return bound_multiplier(profile) * (d - 1);
}

}  // namespace effint
