#pragma once

#include <optional>
#include <unordered_map>

#include "parcount/classify.hpp"
#include "parcount/green.hpp"

namespace parcount {

enum class Quantity { kGroup, kLieParabolic, kLieNilradical };
enum class Engine { kBrute, kFormula, kBoth };

std::string to_string(Quantity q);
std::optional<Quantity> quantity_from_string(const std::string& s);

// Element-level census: every element classified by its type; fiber sizes
// partition |G^F| (resp. |g^F|).
struct TypeFiber {
  TypeLabel type;
  long long count = 0;
};
std::vector<TypeFiber> type_partition_group(const GroupSpec& g, const Budget& b = {});
std::vector<TypeFiber> type_partition_lie(const GroupSpec& g, const Budget& b = {});

// Class-level census: one entry per conjugacy class / adjoint orbit, with
// deterministic representatives and the class type.
struct ClassDatum {
  Mat rep;
  long long orbit_size = 0;
  long long centralizer = 0;
  TypeLabel type{{}};
};

struct OrbitData {
  std::vector<ClassDatum> classes;
  // element code -> index into classes
  std::unordered_map<long long, int> orbit_of;
};

const OrbitData& group_orbits(const GroupSpec& g, const Budget& b = {});
const OrbitData& lie_orbits(const GroupSpec& g, const Budget& b = {});

// Sign convention candidates for the nilradical formula. The constant
// candidates read the exponent off (epsilon_G, epsilon_L); the per-torus
// candidate uses epsilon_L * epsilon_{T_w} = (-1)^{n - l(rho(w))}, which is
// what the dimension formula for R_{T_w}^L(1) actually produces.
enum class SignRule { kProductConstant, kSumConstant, kPerTorus };
std::string to_string(SignRule r);
// Calibrated once against brute force on GL_2(F_2), GL_2(F_3) and GL_3(F_2)
// over all compositions; hard error if no candidate survives.
SignRule selected_sign_rule(const Budget& b = {});

struct TypeTerm {
  TypeLabel type{{}};
  long long fiber = 0;  // classes of this type (reported 0 when empty at q)
  Rat inner{0};         // (1/|W_L|) sum_w delta * Q * index
};

struct CountReport {
  GroupSpec group;
  ParabolicSpec parabolic{{1}};
  Quantity quantity = Quantity::kGroup;
  std::optional<long long> brute;
  std::optional<long long> formula;
  std::vector<TypeTerm> breakdown;           // formula engine only
  long long representatives = -1;            // |R(.)| for the lie/nil cases
  std::string sign_rule;                     // nilradical case
  bool agree = false;                        // both engines ran and matched
  double ms_brute = 0.0;
  double ms_formula = 0.0;
};

CountReport k_group(const GroupSpec& g, const ParabolicSpec& p, Engine e, const Budget& b = {});
CountReport k_lie(const GroupSpec& g, const ParabolicSpec& p, Engine e, const Budget& b = {});
CountReport k_nil(const GroupSpec& g, const ParabolicSpec& p, Engine e, const Budget& b = {});

}  // namespace parcount
