#pragma once

#include <cstdint>
#include <string_view>

#include "markov/asrel.hpp"
#include "markov/kernel.hpp"

namespace markov {

enum class Flavor { Karoubi, Blackwell };

std::string_view to_string(Flavor flavor);

/// An object (X, e) of an envelope. Cells are only built through env_cell
/// and env_tensor, which check the idempotent (and balance for Blackwell).
class EnvelopeCell {
 public:
  const FinObject& object() const { return endo_.dom(); }
  const Kernel& endo() const { return endo_; }
  Flavor flavor() const { return flavor_; }

  friend bool operator==(const EnvelopeCell& a, const EnvelopeCell& b);

 private:
  EnvelopeCell(Kernel endo, Flavor flavor) : endo_(std::move(endo)), flavor_(flavor) {}

  Kernel endo_;
  Flavor flavor_;

  friend EnvelopeCell env_cell(const FinObject& x, const Kernel& e, Flavor flavor);
  friend EnvelopeCell env_tensor(const EnvelopeCell& a, const EnvelopeCell& b);
  friend EnvelopeCell env_unit(Kind kind, Flavor flavor);
  // Lets negative tests build cells that skip validation.
  friend struct EnvelopeTestAccess;
};

/// f : src -> dst with f∘e_src = f = e_dst∘f.
struct EnvelopeMorphism {
  EnvelopeCell src;
  EnvelopeCell dst;
  Kernel f;
};

bool env_equal(const EnvelopeMorphism& a, const EnvelopeMorphism& b);

/// Throws Error(NotEndo), Error(NotIdempotent) or, for Blackwell cells,
/// Error(NotBalanced).
EnvelopeCell env_cell(const FinObject& x, const Kernel& e, Flavor flavor);
/// (I, id_I).
EnvelopeCell env_unit(Kind kind, Flavor flavor);

/// Throws Error(NotHom) naming the absorption equation that fails.
EnvelopeMorphism env_hom(const EnvelopeCell& src, const EnvelopeCell& dst, const Kernel& f);
/// The identity of (X, e) is e itself.
EnvelopeMorphism env_identity(const EnvelopeCell& cell);
/// Throws Error(CellMismatch).
EnvelopeMorphism env_compose(const EnvelopeMorphism& g, const EnvelopeMorphism& f);
/// (X⊗Y, e_X⊗e_Y); Blackwell only when both factors are.
EnvelopeCell env_tensor(const EnvelopeCell& a, const EnvelopeCell& b);
EnvelopeMorphism env_tensor(const EnvelopeMorphism& f, const EnvelopeMorphism& g);
EnvelopeMorphism env_swap(const EnvelopeCell& a, const EnvelopeCell& b);

/// (e⊗e)∘copy∘e : (X, e) -> (X, e)⊗(X, e). Throws Error(NotBalanced) for
/// Karoubi cells.
EnvelopeMorphism blackwell_copy(const EnvelopeCell& cell);
/// discard∘e : (X, e) -> (I, id).
EnvelopeMorphism env_discard(const EnvelopeCell& cell);

struct LawReport {
  bool counit_left = false;
  bool counit_right = false;
  bool coassociative = false;
  bool cocommutative = false;
  bool discard_natural = false;

  bool all() const {
    return counit_left && counit_right && coassociative && cocommutative && discard_natural;
  }
};

/// Evaluates the copy formula on any cell, whatever its flavor, and checks
/// the comonoid laws plus discard naturality on `samples` random cell
/// endomorphisms e∘k∘e.
LawReport env_check_markov_laws(const EnvelopeCell& cell, std::uint64_t seed = 0,
                                std::size_t samples = 8);

/// p : (A, e_A) -> (X, e_X), f, g : (X, e_X) -> (Y, e_Y). Evaluates the
/// joint (f⊗id)∘copy∘p with the envelope copy and identity, and throws
/// Error(StructureViolation) if the verdict differs from plain ase on the
/// underlying kernels.
bool env_ase(const EnvelopeMorphism& p, const EnvelopeMorphism& f, const EnvelopeMorphism& g);

/// check_causality_instance with both a.s. equalities read in the envelope.
ImplicationReport env_causality_instance(const EnvelopeMorphism& f, const EnvelopeMorphism& g,
                                         const EnvelopeMorphism& h1, const EnvelopeMorphism& h2);

}  // namespace markov
