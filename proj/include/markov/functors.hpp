#pragma once

#include <cstddef>

#include "markov/kernel.hpp"

namespace markov {

/// Input-output relation of a stochastic kernel: a ↦ {x : p(x|a) > 0}.
/// Throws Error(KindMismatch) for non-stochastic input.
Kernel upsilon(const Kernel& p);

struct UpsilonReport {
  bool identity_ok = false;
  bool composition_ok = false;
  bool tensor_ok = false;
  bool copy_ok = false;

  bool all() const { return identity_ok && composition_ok && tensor_ok && copy_ok; }
};

/// Functor laws at p : A -> B and g : B -> C: identities, Υ(g∘p) = Υ(g)∘Υ(p),
/// Υ(p⊗g) = Υ(p)⊗Υ(g) and Υ(copy_A) = copy_A. Throws Error(ShapeMismatch).
UpsilonReport upsilon_check(const Kernel& p, const Kernel& g);

/// A morphism A -> X of the parametric category over W, stored as its
/// underlying kernel W⊗A -> X.
struct ParamMorphism {
  FinObject w;
  FinObject a;
  FinObject x;
  Kernel inner;
};

/// Relabels inner's domain as W⊗A. Throws Error(ShapeMismatch) when the
/// sizes do not fit.
ParamMorphism param_morphism(const FinObject& w, const FinObject& a, const Kernel& inner);

/// g.inner∘(id_W⊗f.inner)∘(copy_W⊗id_A). Throws Error(ParamMismatch) for
/// different parameter objects and Error(ShapeMismatch) when f.x != g.a.
ParamMorphism param_compose(const ParamMorphism& g, const ParamMorphism& f);
/// discard_W⊗f.
ParamMorphism param_lift(const Kernel& f, const FinObject& w);
ParamMorphism param_identity(Kind kind, const FinObject& w, const FinObject& a);
ParamMorphism param_copy(Kind kind, const FinObject& w, const FinObject& a);
ParamMorphism param_discard(Kind kind, const FinObject& w, const FinObject& a);
ParamMorphism param_swap(Kind kind, const FinObject& w, const FinObject& a, const FinObject& b);
/// Both factors read the same copy of the parameter.
ParamMorphism param_tensor(const ParamMorphism& f, const ParamMorphism& g);

bool param_equal(const ParamMorphism& f, const ParamMorphism& g);

/// f : A -> X⊗Y with |X| = left_size. Returns f_{|X} : X⊗A -> Y with
/// f_{|X}(y|x,a) = f((x,y)|a) / f_X(x|a); zero-mass columns get the point
/// mass on the first element of Y. The reconstruction equation is verified
/// before returning. Throws Error(UnsupportedKind) for non-stochastic f and
/// Error(ShapeMismatch) when the codomain does not factor.
Kernel conditional(const Kernel& f, std::size_t left_size);

/// (f_X⊗id_A)∘copy_A : A -> X⊗A, the state against which conditionals are
/// unique almost surely.
Kernel conditional_box(const Kernel& f, std::size_t left_size);

/// (id_X⊗c)∘(copy_X⊗id_A)∘conditional_box(f), relabeled onto f's codomain.
Kernel reconstruct_from_conditional(const Kernel& f, const Kernel& c, std::size_t left_size);

bool verify_conditional_eq(const Kernel& f, const Kernel& c, std::size_t left_size);

/// ase(conditional_box(f), c1, c2). Throws Error(NotAConditional) when either
/// candidate fails the reconstruction equation.
bool verify_conditional_unique(const Kernel& f, const Kernel& c1, const Kernel& c2,
                               std::size_t left_size);

}  // namespace markov
