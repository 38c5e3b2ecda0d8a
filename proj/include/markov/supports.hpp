#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "markov/kernel.hpp"

namespace markov {

/// Support of p : A -> X, with inclusion ι : S -> X and factorization
/// p̂ : A -> S satisfying ι∘p̂ = p. For a split support the projection
/// π : X -> S is present and π∘ι = id_S.
struct SupportData {
  Kernel base;
  FinObject supp_object;
  Kernel inclusion;
  Kernel factorization;
  std::optional<Kernel> projection;
};

/// Stoch and Multi only. S keeps the labels and order of X.
SupportData support(const Kernel& p);

/// The unique f̂ with ι∘f̂ = f, which exists iff sd.base ≫ f. Throws
/// Error(NotAbsolutelyContinuous) naming the first offending element.
Kernel factor_through_support(const Kernel& f, const SupportData& sd);

/// Support plus projection; off-support elements go to the first support
/// element. Throws Error(EmptySupport).
SupportData split_support(const Kernel& p);

/// Given a commuting square g∘p = q∘f (p : A -> X, q : B -> Y, f : A -> B,
/// g : X -> Y), the induced map S_p -> S_q with ι_q∘m = g∘ι_p.
Kernel support_functor_map(const Kernel& p, const Kernel& q, const Kernel& f, const Kernel& g);

struct EqualizerData {
  FinObject object;
  Kernel inclusion;
  Kernel factored;
};

/// For deterministic f, g : X -> Y and p : A -> X with f =_p g, the
/// factorization of p across the equalizer {x : f(x) = g(x)}.
/// Throws Error(NotDeterministic) or Error(NotAse).
EqualizerData equalizer_factor(const Kernel& p, const Kernel& f, const Kernel& g);

/// First a (in label order) with p(x|a) > 0; nullopt when x lies outside
/// the support.
std::optional<std::string> point_lift(const Kernel& p, std::string_view x);

struct PreciseSupportReport {
  bool joint_dominates = false;
  bool pointwise = false;
  bool agree = false;
};

/// Compares membership of (x, y) in the support of the joint
/// (id⊗f)∘copy∘p against x ∈ Supp(p) and y ∈ Supp(f(·|x)).
PreciseSupportReport precise_supports_equiv(const Kernel& p, const Kernel& f, std::string_view x,
                                            std::string_view y);

// ---------------------------------------------------------------------------
// Free support completion. Objects are pairs (X, p) with p atomic; a
// morphism (X, p) -> (Y, q) is a p-a.s. class of f : X -> Y with f∘p ≪ q,
// stored as its canonical representative (columns outside Supp(p) replaced
// by the point mass on the first element of Y).

struct SuppCompCell {
  FinObject object;
  Kernel anchor;
};

struct SuppCompMorphism {
  SuppCompCell src;
  SuppCompCell dst;
  Kernel representative;
};

bool cell_equal(const SuppCompCell& a, const SuppCompCell& b);
bool scomp_equal(const SuppCompMorphism& a, const SuppCompMorphism& b);

/// Throws Error(InvalidArgument) when the anchor is not atomic.
SuppCompCell scomp_cell(const Kernel& anchor);

/// Canonical representative of the p-a.s. class of f.
Kernel canonicalize(const Kernel& f, const Kernel& anchor);

/// Throws Error(NotMember) naming an element of Supp(f∘p) \ Supp(q).
SuppCompMorphism scomp_hom(const SuppCompCell& src, const SuppCompCell& dst, const Kernel& f);
SuppCompMorphism scomp_identity(const SuppCompCell& cell);
SuppCompMorphism scomp_compose(const SuppCompMorphism& g, const SuppCompMorphism& f);
SuppCompMorphism scomp_tensor(const SuppCompMorphism& f, const SuppCompMorphism& g);
SuppCompCell scomp_tensor(const SuppCompCell& a, const SuppCompCell& b);
SuppCompMorphism scomp_copy(const SuppCompCell& cell);
SuppCompMorphism scomp_discard(const SuppCompCell& cell);
SuppCompMorphism scomp_swap(const SuppCompCell& a, const SuppCompCell& b);

/// [f] ≪ [g] for morphisms into the same cell, decided as f∘p ≪ g∘r.
bool scomp_abs_cont(const SuppCompMorphism& f, const SuppCompMorphism& g);

/// Support of [f] : (X, p) -> (Y, q): the cell (Y, f∘p) together with the
/// inclusion class [id_Y] : (Y, f∘p) -> (Y, q).
std::pair<SuppCompCell, SuppCompMorphism> scomp_support(const SuppCompMorphism& f);

}  // namespace markov
