// Verifiable contracts for the Mellin-Barnes and hypergeometric identities
// used throughout the library.  Each tag pairs a quadrature/series evaluation
// of the left side with an independent closed-form (or independently summed)
// right side, so the suite doubles as the oracle layer for the Stade and
// kernel modules.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gl3/rng.hpp"
#include "gl3/types.hpp"

namespace gl3 {

enum class IdentityTag {
  kPFqToMB,
  kBetaInvMellin,
  kThomaeMB,
  kEulerBeta,
  kElem2F1,
  kPfaff,
  kBarnesFirst,
  kGaussThm,
  kSimpleMB,
  kMB1F0Eval,
  kTwoF1toBeta,
};

inline constexpr int kIdentityTagCount = 11;

const std::vector<IdentityTag>& all_identity_tags();
std::string identity_tag_name(IdentityTag tag);
std::optional<IdentityTag> identity_tag_from_name(std::string_view name);

using ParamMap = std::map<std::string, cx>;

struct IdentityCase {
  IdentityTag tag;
  ParamMap params;
};

struct IdentityReport {
  cx lhs = 0.0;
  cx rhs = 0.0;
  double rel_error = 0.0;
  bool pass = false;
};

// Safe-region predicate for the tag: inequalities on the parameters that keep
// every contour pole-separating, every series convergent, and every endpoint
// singularity integrable.  verify_identity rejects parameters outside it.
bool identity_params_valid(const IdentityCase& c);

// Evaluates both sides and compares at relative tolerance tol (absolute when
// both sides are below 1e-8 in magnitude, e.g. the vanishing branch of
// BetaInvMellin).
IdentityReport verify_identity(const IdentityCase& c, double tol);

// Draws a parameter assignment from the tag's safe region.
IdentityCase random_identity_case(IdentityTag tag, Lcg64& rng);

struct SweepReport {
  IdentityTag tag = IdentityTag::kPFqToMB;
  int count = 0;
  int failures = 0;
  double max_rel_error = 0.0;
  std::vector<IdentityCase> failed_cases;
};

// Runs `count` random cases of the tag at tolerance tol.  The generator is
// seeded by `seed` mixed with the tag index, so sweeps are reproducible per
// tag and independent across tags.
SweepReport random_sweep(IdentityTag tag, int count, std::uint64_t seed, double tol);

}  // namespace gl3
