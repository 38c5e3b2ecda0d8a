#include "markov/envelopes.hpp"

#include "markov/error.hpp"
#include "markov/idempotents.hpp"
#include "markov/random.hpp"

namespace markov {

namespace {

bool is_balanced(const Kernel& e) { return classify(e).balanced; }

Kernel copy_formula(const Kernel& e) {
  return compose(compose(tensor(e, e), copy(e.kind(), e.dom())), e);
}

EnvelopeMorphism unchecked(const EnvelopeCell& src, const EnvelopeCell& dst, Kernel f) {
  return EnvelopeMorphism{src, dst, std::move(f)};
}

void require_same_cell(const EnvelopeCell& a, const EnvelopeCell& b, std::string_view what) {
  if (!(a == b)) {
    fail(ErrorCode::CellMismatch, std::string(what));
  }
}

// (f⊗e_X)∘copy_env∘p, the envelope reading of the ase joint.
Kernel envelope_joint(const EnvelopeMorphism& p, const EnvelopeMorphism& f) {
  const Kernel& e = f.src.endo();
  const Kernel c = copy_formula(e);
  return compose(compose(tensor(f.f, e), c), p.f);
}

}  // namespace

std::string_view to_string(Flavor flavor) {
  return flavor == Flavor::Karoubi ? "karoubi" : "blackwell";
}

bool operator==(const EnvelopeCell& a, const EnvelopeCell& b) {
  return a.flavor_ == b.flavor_ && kernel_equal(a.endo_, b.endo_);
}

bool env_equal(const EnvelopeMorphism& a, const EnvelopeMorphism& b) {
  return a.src == b.src && a.dst == b.dst && kernel_equal(a.f, b.f);
}

EnvelopeCell env_cell(const FinObject& x, const Kernel& e, Flavor flavor) {
  if (!(e.dom() == x) || !(e.cod() == x)) {
    fail(ErrorCode::NotEndo, "cell kernel must be an endomorphism of the given object");
  }
  if (!kernel_equal(compose(e, e), e)) {
    fail(ErrorCode::NotIdempotent, "e∘e differs from e");
  }
  if (flavor == Flavor::Blackwell && !is_balanced(e)) {
    fail(ErrorCode::NotBalanced, "Blackwell cells need a balanced idempotent");
  }
  return EnvelopeCell(e, flavor);
}

EnvelopeCell env_unit(Kind kind, Flavor flavor) {
  return EnvelopeCell(identity(kind, FinObject::unit()), flavor);
}

EnvelopeMorphism env_hom(const EnvelopeCell& src, const EnvelopeCell& dst, const Kernel& f) {
  if (!(f.dom() == src.object()) || !(f.cod() == dst.object()) ||
      f.kind() != src.endo().kind() || f.kind() != dst.endo().kind()) {
    fail(ErrorCode::ShapeMismatch, "morphism does not connect the two cells");
  }
  if (!kernel_equal(compose(f, src.endo()), f)) {
    fail(ErrorCode::NotHom, "f∘e_src differs from f");
  }
  if (!kernel_equal(compose(dst.endo(), f), f)) {
    fail(ErrorCode::NotHom, "e_dst∘f differs from f");
  }
  return unchecked(src, dst, f);
}

EnvelopeMorphism env_identity(const EnvelopeCell& cell) {
  return unchecked(cell, cell, cell.endo());
}

EnvelopeMorphism env_compose(const EnvelopeMorphism& g, const EnvelopeMorphism& f) {
  require_same_cell(f.dst, g.src, "target of f is not the source of g");
  return env_hom(f.src, g.dst, compose(g.f, f.f));
}

EnvelopeCell env_tensor(const EnvelopeCell& a, const EnvelopeCell& b) {
  Kernel e = tensor(a.endo(), b.endo());
  const Flavor flavor = a.flavor() == Flavor::Blackwell && b.flavor() == Flavor::Blackwell
                            ? Flavor::Blackwell
                            : Flavor::Karoubi;
  if (flavor == Flavor::Blackwell && !is_balanced(e)) {
    fail(ErrorCode::StructureViolation, "tensor of balanced idempotents is not balanced");
  }
  return EnvelopeCell(std::move(e), flavor);
}

EnvelopeMorphism env_tensor(const EnvelopeMorphism& f, const EnvelopeMorphism& g) {
  return env_hom(env_tensor(f.src, g.src), env_tensor(f.dst, g.dst), tensor(f.f, g.f));
}

EnvelopeMorphism env_swap(const EnvelopeCell& a, const EnvelopeCell& b) {
  const Kind kind = a.endo().kind();
  const Kernel s = compose(swap(kind, a.object(), b.object()), tensor(a.endo(), b.endo()));
  return env_hom(env_tensor(a, b), env_tensor(b, a), s);
}

EnvelopeMorphism blackwell_copy(const EnvelopeCell& cell) {
  if (cell.flavor() != Flavor::Blackwell) {
    fail(ErrorCode::NotBalanced, "the envelope copy is defined on Blackwell cells");
  }
  return env_hom(cell, env_tensor(cell, cell), copy_formula(cell.endo()));
}

EnvelopeMorphism env_discard(const EnvelopeCell& cell) {
  const Kernel& e = cell.endo();
  return env_hom(cell, env_unit(e.kind(), cell.flavor()),
                 compose(discard(e.kind(), e.dom()), e));
}

LawReport env_check_markov_laws(const EnvelopeCell& cell, std::uint64_t seed,
                                std::size_t samples) {
  const Kernel& e = cell.endo();
  const Kind kind = e.kind();
  const FinObject& x = cell.object();
  const Kernel c = copy_formula(e);
  const Kernel d = compose(discard(kind, x), e);

  LawReport r;
  r.counit_left = same_matrix(compose(tensor(d, e), c), e);
  r.counit_right = same_matrix(compose(tensor(e, d), c), e);
  // The two sides land in (X⊗X)⊗X and X⊗(X⊗X); only the matrices compare.
  r.coassociative = same_matrix(compose(tensor(c, e), c), compose(tensor(e, c), c));
  r.cocommutative = kernel_equal(compose(swap(kind, x, x), c), c);

  r.discard_natural = true;
  Rng rng(seed);
  for (std::size_t i = 0; i < samples && r.discard_natural; ++i) {
    const Kernel f = compose(compose(e, random_kernel(kind, x, x, rng)), e);
    r.discard_natural = kernel_equal(compose(d, f), d);
  }
  return r;
}

bool env_ase(const EnvelopeMorphism& p, const EnvelopeMorphism& f, const EnvelopeMorphism& g) {
  if (!(f.src == g.src) || !(f.dst == g.dst)) {
    fail(ErrorCode::ShapeMismatch, "f and g must be parallel envelope morphisms");
  }
  if (!(p.dst == f.src)) {
    fail(ErrorCode::ShapeMismatch, "p must land in the source cell of f and g");
  }
  const bool envelope = same_matrix(envelope_joint(p, f), envelope_joint(p, g));
  const bool base = ase(p.f, f.f, g.f);
  if (envelope != base) {
    fail(ErrorCode::StructureViolation, "envelope and base a.s. verdicts disagree");
  }
  return envelope;
}

ImplicationReport env_causality_instance(const EnvelopeMorphism& f, const EnvelopeMorphism& g,
                                         const EnvelopeMorphism& h1, const EnvelopeMorphism& h2) {
  ImplicationReport r;
  r.antecedent = env_ase(env_compose(g, f), h1, h2);
  r.consequent = env_ase(f, env_compose(h1, g), env_compose(h2, g));
  r.implication_ok = !r.antecedent || r.consequent;
  return r;
}

}  // namespace markov
