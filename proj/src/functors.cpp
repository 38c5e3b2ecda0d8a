#include "markov/functors.hpp"

#include "markov/asrel.hpp"
#include "markov/error.hpp"

namespace markov {

namespace {

std::pair<FinObject, FinObject> factors(const Kernel& f, std::size_t left_size) {
  auto parts = split_tensor(f.cod(), left_size);
  if (!parts) {
    fail(ErrorCode::ShapeMismatch,
         "codomain does not factor with a left factor of size " + std::to_string(left_size));
  }
  return *parts;
}

void require_same_w(const ParamMorphism& f, const ParamMorphism& g) {
  if (!(f.w == g.w) || f.inner.kind() != g.inner.kind()) {
    fail(ErrorCode::ParamMismatch, "parametric morphisms over different parameters");
  }
}

}  // namespace

Kernel upsilon(const Kernel& p) {
  if (p.kind() != Kind::Stoch) {
    fail(ErrorCode::KindMismatch, "the input-output relation is taken of stochastic kernels");
  }
  std::vector<Rational> entries;
  entries.reserve(p.entries().size());
  for (const Rational& v : p.entries()) {
    entries.emplace_back(v.sign() > 0 ? 1 : 0);
  }
  return Kernel(Kind::Multi, p.dom(), p.cod(), std::move(entries));
}

UpsilonReport upsilon_check(const Kernel& p, const Kernel& g) {
  if (!(p.cod() == g.dom())) {
    fail(ErrorCode::ShapeMismatch, "g∘p is not composable");
  }
  UpsilonReport r;
  r.identity_ok = kernel_equal(upsilon(identity(Kind::Stoch, p.dom())),
                               identity(Kind::Multi, p.dom()));
  r.composition_ok = kernel_equal(upsilon(compose(g, p)), compose(upsilon(g), upsilon(p)));
  r.tensor_ok = kernel_equal(upsilon(tensor(p, g)), tensor(upsilon(p), upsilon(g)));
  r.copy_ok = kernel_equal(upsilon(copy(Kind::Stoch, p.dom())), copy(Kind::Multi, p.dom()));
  return r;
}

ParamMorphism param_morphism(const FinObject& w, const FinObject& a, const Kernel& inner) {
  const FinObject wa = tensor(w, a);
  if (inner.cols() != wa.size()) {
    fail(ErrorCode::ShapeMismatch, "inner kernel domain is not W⊗A");
  }
  return ParamMorphism{w, a, inner.cod(), inner.with_objects(wa, inner.cod())};
}

ParamMorphism param_compose(const ParamMorphism& g, const ParamMorphism& f) {
  require_same_w(f, g);
  if (!(f.x == g.a)) {
    fail(ErrorCode::ShapeMismatch, "f's codomain differs from g's domain");
  }
  const Kind kind = f.inner.kind();
  // copy_W⊗id_A lands in (W⊗W)⊗A, which is W⊗(W⊗A) up to relabeling.
  const Kernel spread = tensor(copy(kind, f.w), identity(kind, f.a));
  const Kernel wiring = spread.with_objects(spread.dom(), tensor(f.w, tensor(f.w, f.a)));
  const Kernel inner = compose(g.inner, compose(tensor(identity(kind, f.w), f.inner), wiring));
  return ParamMorphism{f.w, f.a, g.x, inner};
}

ParamMorphism param_lift(const Kernel& f, const FinObject& w) {
  const Kernel lifted = tensor(discard(f.kind(), w), f);
  return ParamMorphism{w, f.dom(), f.cod(), lifted.with_objects(lifted.dom(), f.cod())};
}

ParamMorphism param_identity(Kind kind, const FinObject& w, const FinObject& a) {
  return param_lift(identity(kind, a), w);
}

ParamMorphism param_copy(Kind kind, const FinObject& w, const FinObject& a) {
  return param_lift(copy(kind, a), w);
}

ParamMorphism param_discard(Kind kind, const FinObject& w, const FinObject& a) {
  return param_lift(discard(kind, a), w);
}

ParamMorphism param_swap(Kind kind, const FinObject& w, const FinObject& a, const FinObject& b) {
  return param_lift(swap(kind, a, b), w);
}

ParamMorphism param_tensor(const ParamMorphism& f, const ParamMorphism& g) {
  require_same_w(f, g);
  const Kind kind = f.inner.kind();
  const FinObject ab = tensor(f.a, g.a);
  const FinObject xy = tensor(f.x, g.x);
  const std::size_t nw = f.w.size();
  const std::size_t na = f.a.size();
  const std::size_t nb = g.a.size();
  const std::size_t nx = f.x.size();
  const std::size_t ny = g.x.size();
  const std::size_t cols = nw * na * nb;
  std::vector<Rational> entries(nx * ny * cols);
  for (std::size_t w = 0; w < nw; ++w) {
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t b = 0; b < nb; ++b) {
        const std::size_t col = (w * na + a) * nb + b;
        for (std::size_t x = 0; x < nx; ++x) {
          const Rational& fx = f.inner(x, w * na + a);
          if (fx.is_zero()) {
            continue;
          }
          for (std::size_t y = 0; y < ny; ++y) {
            entries[(x * ny + y) * cols + col] = fx * g.inner(y, w * nb + b);
          }
        }
      }
    }
  }
  return ParamMorphism{f.w, ab, xy, Kernel(kind, tensor(f.w, ab), xy, std::move(entries))};
}

bool param_equal(const ParamMorphism& f, const ParamMorphism& g) {
  return f.w == g.w && f.a == g.a && f.x == g.x && kernel_equal(f.inner, g.inner);
}

Kernel conditional_box(const Kernel& f, std::size_t left_size) {
  const auto [x, y] = factors(f, left_size);
  const Kind kind = f.kind();
  const Kernel marginal = marginalize(f, x, y, Side::Right);
  return compose(tensor(marginal, identity(kind, f.dom())), copy(kind, f.dom()));
}

Kernel reconstruct_from_conditional(const Kernel& f, const Kernel& c, std::size_t left_size) {
  const auto [x, y] = factors(f, left_size);
  const Kind kind = f.kind();
  const FinObject& a = f.dom();
  const FinObject xa = tensor(x, a);
  if (c.kind() != kind || c.cols() != xa.size() || !(c.cod() == y)) {
    fail(ErrorCode::ShapeMismatch, "conditional must be a kernel X⊗A -> Y");
  }
  const Kernel spread = tensor(copy(kind, x), identity(kind, a));
  const Kernel wiring = spread.with_objects(xa, tensor(x, xa));
  const Kernel tail = tensor(identity(kind, x), c.with_objects(xa, y));
  const Kernel joint = compose(compose(tail, wiring), conditional_box(f, left_size));
  return joint.with_objects(f.dom(), f.cod());
}

bool verify_conditional_eq(const Kernel& f, const Kernel& c, std::size_t left_size) {
  return kernel_equal(reconstruct_from_conditional(f, c, left_size), f);
}

Kernel conditional(const Kernel& f, std::size_t left_size) {
  if (f.kind() != Kind::Stoch) {
    fail(ErrorCode::UnsupportedKind, "conditionals are computed for stochastic kernels");
  }
  const auto [x, y] = factors(f, left_size);
  const std::size_t nx = x.size();
  const std::size_t ny = y.size();
  const std::size_t na = f.cols();
  const std::size_t cols = nx * na;
  std::vector<Rational> entries(ny * cols);
  for (std::size_t xi = 0; xi < nx; ++xi) {
    for (std::size_t a = 0; a < na; ++a) {
      const std::size_t col = xi * na + a;
      Rational mass;
      for (std::size_t yi = 0; yi < ny; ++yi) {
        mass += f(xi * ny + yi, a);
      }
      if (mass.is_zero()) {
        entries[col] = 1;
        continue;
      }
      for (std::size_t yi = 0; yi < ny; ++yi) {
        entries[yi * cols + col] = f(xi * ny + yi, a) / mass;
      }
    }
  }
  Kernel c(Kind::Stoch, tensor(x, f.dom()), y, std::move(entries));
  if (!verify_conditional_eq(f, c, left_size)) {
    fail(ErrorCode::StructureViolation, "conditional does not reconstruct f");
  }
  return c;
}

bool verify_conditional_unique(const Kernel& f, const Kernel& c1, const Kernel& c2,
                               std::size_t left_size) {
  if (!verify_conditional_eq(f, c1, left_size)) {
    fail(ErrorCode::NotAConditional, "first candidate does not reconstruct f");
  }
  if (!verify_conditional_eq(f, c2, left_size)) {
    fail(ErrorCode::NotAConditional, "second candidate does not reconstruct f");
  }
  const Kernel box = conditional_box(f, left_size);
  return ase(box, c1.with_objects(box.cod(), c1.cod()), c2.with_objects(box.cod(), c2.cod()));
}

}  // namespace markov
