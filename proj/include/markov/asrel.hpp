#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "markov/kernel.hpp"

namespace markov {

/// f, g : W⊗X -> Y compared almost surely with respect to p : A -> X.
/// The W factor is identified by its size; w_size = 1 means no parameter.
struct AseQuery {
  Kernel p;
  Kernel f;
  Kernel g;
  std::size_t w_size = 1;
};

/// Elements x with p(x|a) != 0 for some a (nonempty image union for Multi).
std::vector<std::size_t> positive_support(const Kernel& p);

/// f =_p g, decided by comparing columns (w, x) for every x in the
/// positive support of p.
bool ase(const AseQuery& q);
bool ase(const Kernel& p, const Kernel& f, const Kernel& g);

/// Same relation evaluated as the joint-diagram equation
/// (f⊗id_X)∘(id_W⊗(copy_X∘p)) = (g⊗id_X)∘(id_W⊗(copy_X∘p)).
bool ase_joint_diagram(const AseQuery& q);

/// q ≫ p: support of p is contained in the support of q. Stoch and Multi
/// only; Signed raises Error(UnsupportedKind).
bool abs_cont(const Kernel& q, const Kernel& p);

/// Indicator-function witness for a failure of q ≫ p: f =_q g but not
/// f =_p g, where f is constantly 0 and g is the indicator of `element`.
struct AcWitness {
  Kernel f;
  Kernel g;
  std::size_t index;
  std::string element;
};

std::optional<AcWitness> refute_abs_cont(const Kernel& q, const Kernel& p);

bool acsim(const Kernel& p, const Kernel& q);

/// copy∘p ≪ p⊗p.
bool is_atomic(const Kernel& p);

/// Replaces every column (w, x) of f with x outside the support of p by a
/// seeded random valid column that differs from the original when possible.
/// f.dom must be W⊗X with |X| = |p.cod|.
Kernel perturb_off_support(const Kernel& f, const Kernel& p, std::uint64_t seed);

struct ImplicationReport {
  bool antecedent = false;
  bool consequent = false;
  bool implication_ok = false;
};

/// For f : A -> X, g : X -> Y, h1, h2 : Y -> Z:
///   antecedent: h1 =_{g∘f} h2,   consequent: h1∘g =_f h2∘g.
ImplicationReport check_causality_instance(const Kernel& f, const Kernel& g, const Kernel& h1,
                                           const Kernel& h2);

}  // namespace markov
