#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "markov/asrel.hpp"
#include "markov/kernel.hpp"

namespace markov {

/// Two steps of the chain with the intermediate state recorded:
/// result((y, z) | x) = e(y|x)·e(z|y), y the intermediate, z the final state.
Kernel two_step(const Kernel& e);

/// First violated entry: input x, output pair (y, z) when the checked
/// equation lives in X⊗X, or output y alone.
struct Witness {
  std::size_t x = 0;
  std::size_t y = 0;
  std::optional<std::size_t> z;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct IdempotentReport {
  bool idempotent = false;
  bool deterministic = false;
  bool is_static = false;
  bool strong = false;
  bool balanced = false;

  std::optional<Witness> idempotent_witness;
  std::optional<Witness> deterministic_witness;
  std::optional<Witness> static_witness;
  std::optional<Witness> strong_witness;
  std::optional<Witness> balanced_witness;
};

/// With L = two_step(e):
///   static   : L(y,z|x) = [y = z]·e(y|x)
///   strong   : L(y,z|x) = e(y|x)·e(z|x)
///   balanced : L(y,z|x) = Σ_w e(y|w)·e(z|w)·e(w|x)
/// A non-idempotent e reports every flag false. Throws Error(NotEndo).
IdempotentReport classify(const Kernel& e);

/// The four equivalent descriptions of a balanced idempotent, each decided
/// independently. Throws Error(NotIdempotent).
struct BalancedCrossCheck {
  bool balanced_equation = false;
  bool detailed_balance = false;
  bool strong_almost_surely = false;
  bool self_adjoint_on_invariants = false;
  std::optional<Witness> witness;

  bool all_agree() const {
    return balanced_equation == detailed_balance && detailed_balance == strong_almost_surely &&
           strong_almost_surely == self_adjoint_on_invariants;
  }
};

BalancedCrossCheck balanced_cross_check(const Kernel& e);

/// e = ι∘π with π∘ι = id_T. For blackwell_split, `classes` lists the
/// recurrent classes and `transient` the remaining states.
struct SplitData {
  FinObject t;
  Kernel pi;
  Kernel iota;
  std::vector<std::vector<std::string>> classes;
  std::vector<std::string> transient;
};

/// Splits a stochastic idempotent through its recurrent communication
/// classes. Class t is labeled "C_" + its first member; ι(·|t) is the common
/// column of e on the class and π(t|x) = e(C_t|x), which is the only choice
/// compatible with e = ι∘π. Throws Error(UnsupportedKind),
/// Error(NotIdempotent), or Error(StructureViolation) if a checked invariant
/// fails.
SplitData blackwell_split(const Kernel& e);

struct SearchOptions {
  std::size_t max_candidates = 10'000'000;
  /// Stoch search enumerates columns with entries in {0, 1/d, ..., 1}.
  std::size_t grid_denominator = 2;
};

/// Exhaustive search for a splitting through objects of size 1..max_t.
/// Multi kernels enumerate all boolean kernels; Stoch kernels enumerate the
/// declared grid. nullopt means no splitting exists up to max_t (within the
/// grid). Throws Error(SizeLimitExceeded) when the search space exceeds
/// opts.max_candidates.
std::optional<SplitData> search_split(const Kernel& e, std::size_t max_t,
                                      const SearchOptions& opts = {});

struct SplitVerification {
  IdempotentReport report;
  bool iota_deterministic = false;
  bool pi_deterministic = false;
  /// π is ι-almost surely deterministic.
  bool pi_as_deterministic = false;
  /// ι deterministic ⟺ static, π deterministic ⟺ strong, e balanced and
  /// π ι-a.s. deterministic.
  bool theorem_ok = false;
};

/// Throws Error(NotASplitting) naming the first failed equation.
SplitVerification verify_split(const Kernel& e, const Kernel& iota, const Kernel& pi);

/// f : A -> B, g : B -> X, h : X -> Y.
///   antecedent: Σ_b f(b|a)·(hg)(y1|b)·(hg)(y2|b) = Σ_b f(b|a)·Σ_x h(y1|x)h(y2|x)g(x|b)
///   consequent: g(x|b)·h(y|x) = g(x|b)·(hg)(y|b) for every b with f(b|a) != 0.
ImplicationReport cauchy_schwarz(const Kernel& f, const Kernel& g, const Kernel& h);

}  // namespace markov
