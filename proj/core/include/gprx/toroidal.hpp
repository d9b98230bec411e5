#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gprx/extension.hpp"
#include "gprx/gpr_graph.hpp"
#include "gprx/group.hpp"
#include "gprx/verify.hpp"

namespace gprx {

/// Parameters of the torus map {4,4}_(b,c) and its translation exponent t
/// with t^2 = -1 (mod n), picked divisible by 4 or congruent to 3 mod 4.
struct ToroidalParams {
  int b = 0;
  int c = 0;
  int n = 0;  // b^2 + c^2
  int t = 0;
  bool prime_n = false;
};

/// Validates b != c, b,c >= 1 (the degenerate and reflexible maps are
/// rejected) and computes t. Throws std::invalid_argument on bad parameters
/// or when no admissible t exists ("t undefined").
ToroidalParams toroidal_params(int b, int c);

/// Just the exponent; same validation as toroidal_params.
int t_parameter(int b, int c);

struct ToroidalCayley {
  GprGraph graph;  // Cayley GPR graph on 4n vertices, labels {1,2}
  Permutation sigma1, sigma2;
};

/// The flag-numbered Cayley graph of {4,4}_(b,c):
/// sigma1 = (1,2,3,4)(5,6,7,8)... and
/// sigma2 = prod_i (4i+1, 4i+4t+2, 4i+4t+7, 4i+8) with entries mod 4n.
ToroidalCayley toroidal_cayley(int b, int c);

/// The explicit matching between the two copies, on 8n points with primed
/// vertex j' stored as 4n+j:
///   (5,(4t+1)')(6,(4t+4)')(7,(4t+3)')(8,(4t+2)')
///   (4t+1,5')(4t+2,8')(4t+3,7')(4t+4,6')
///   and (4i+1,(4i+1)')(4i+2,(4i+4)')(4i+3,(4i+3)')(4i+4,(4i+2)') elsewhere.
Permutation toroidal_matching(int b, int c);

/// Two copies of the Cayley graph joined by the explicit matching, with
/// sigma_3 = sigma_2^-1 * tau.
ExtendedGpr toroidal_extension(int b, int c);

/// The named elements of the extended group, all on 8n points:
/// x = s2^-1 s1, y = s1 s2^-1, z = x tau x tau, the half-turn R, and the
/// copy swap p = (1,1')...(4n,(4n)').
struct SpecialElements {
  Permutation x, y, z, big_r, p;
};

SpecialElements special_elements(int b, int c);

/// Vertices 4i+k of one copy (k in 1..4, primed = false/true), ascending.
std::vector<int> vertex_class(const ToroidalParams& params, int k, bool primed);

/// Cycle lengths (m1, m2) of z on class 1: (t-1, (n-t+1)/2) for even t,
/// (n-t+1, (t-1)/2) for odd t.
std::pair<long long, long long> z_cycle_parameters(const ToroidalParams& params);

enum class LambdaStructure { AnxAn, A5Special, RecordedOnly };

inline const char* to_string(LambdaStructure s) {
  switch (s) {
    case LambdaStructure::AnxAn: return "AnxAn";
    case LambdaStructure::A5Special: return "A5_special";
    default: return "recorded_only";
  }
}

struct StructureReport {
  ToroidalParams params;
  VerificationReport battery;
  std::vector<long long> schlafli;
  long long last_entry_q = 0;  // last Schlafli entry is 2q
  BigInt group_order;

  bool block_system_dihedral = false;  // 8 vertex classes, D4 quotient
  long long block_quotient_order = 0;
  BigInt lambda_order;                  // kernel of the class action
  bool lambda_generated_by_x = false;   // <x, tau x tau> matches the kernel order
  bool rp_blocks_ok = false;            // <R,p> orbits are size-4 blocks kept by the group
  bool lambda_parity_even = false;      // x and tau x tau even on classes 1 and 2
  LambdaStructure lambda_structure = LambdaStructure::RecordedOnly;
  Chirality chirality = Chirality::Chiral;

  bool closure_computed = false;  // prime n only
  BigInt closure_index;
  bool closure_contains_x = false;

  std::string digest;
};

/// Error carrying the verification report when the battery rejects a graph.
struct BatteryError : std::runtime_error {
  explicit BatteryError(VerificationReport r)
      : std::runtime_error("verification battery failed"), report(std::move(r)) {}
  VerificationReport report;
};

/// Builds the extension of {4,4}_(b,c), runs the full battery (throwing
/// BatteryError on failure), then verifies the structure facts: the eight
/// vertex classes form a block system with a dihedral quotient of order 8,
/// the kernel is <x, tau x tau>, the <R,p> orbits are size-4 blocks, the
/// kernel generators are even on classes 1 and 2, and for prime n the normal
/// closure of x^b y^c is indexed and tested for x.
StructureReport analyze(int b, int c);

/// Index of the normal closure of {x^b y^c} in the extended group, plus
/// whether the closure contains x. Requires prime n.
std::pair<BigInt, bool> chirality_closure_bound(int b, int c);

std::string report_to_json(const StructureReport& report);
std::string report_to_text(const StructureReport& report);

}  // namespace gprx
