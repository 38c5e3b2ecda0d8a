#include "markov/asrel.hpp"

#include <algorithm>

#include "markov/error.hpp"
#include "markov/random.hpp"

namespace markov {

namespace {

void require_ase_shapes(const AseQuery& q) {
  const std::size_t nx = q.p.rows();
  if (q.f.kind() != q.p.kind() || q.g.kind() != q.p.kind()) {
    fail(ErrorCode::KindMismatch, "ase arguments must share one kind");
  }
  if (q.w_size == 0 || q.f.cols() != q.w_size * nx || !(q.f.dom() == q.g.dom()) ||
      !(q.f.cod() == q.g.cod())) {
    fail(ErrorCode::ShapeMismatch, "f, g must both be W⊗X -> Y with |W| = " +
                                       std::to_string(q.w_size) + " and |X| = " +
                                       std::to_string(nx));
  }
}

void require_ac_kinds(const Kernel& q, const Kernel& p) {
  if (q.kind() != p.kind()) {
    fail(ErrorCode::KindMismatch, "absolute continuity compares kernels of one kind");
  }
  if (q.kind() == Kind::Signed) {
    fail(ErrorCode::UnsupportedKind, "absolute continuity has no characterization for signed kernels");
  }
  if (!(q.cod() == p.cod())) {
    fail(ErrorCode::CodMismatch, "absolute continuity needs a common codomain");
  }
}

std::vector<bool> support_mask(const Kernel& p) {
  std::vector<bool> mask(p.rows(), false);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.cols() && !mask[i]; ++j) {
      mask[i] = p.nonzero(i, j);
    }
  }
  return mask;
}

Kernel indicator(Kind kind, const FinObject& x, std::optional<std::size_t> hot) {
  const FinObject bits{"0", "1"};
  std::vector<Rational> entries(2 * x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const std::size_t row = (hot && *hot == j) ? 1 : 0;
    entries[row * x.size() + j] = 1;
  }
  return Kernel(kind, x, bits, std::move(entries));
}

}  // namespace

std::vector<std::size_t> positive_support(const Kernel& p) {
  std::vector<std::size_t> out;
  const auto mask = support_mask(p);
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) {
      out.push_back(i);
    }
  }
  return out;
}

bool ase(const AseQuery& q) {
  require_ase_shapes(q);
  const std::size_t nx = q.p.rows();
  for (std::size_t x : positive_support(q.p)) {
    for (std::size_t w = 0; w < q.w_size; ++w) {
      const std::size_t col = w * nx + x;
      for (std::size_t y = 0; y < q.f.rows(); ++y) {
        if (q.f(y, col) != q.g(y, col)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool ase(const Kernel& p, const Kernel& f, const Kernel& g) { return ase(AseQuery{p, f, g, 1}); }

bool ase_joint_diagram(const AseQuery& q) {
  require_ase_shapes(q);
  const Kind kind = q.p.kind();
  const FinObject w = FinObject::range(q.w_size, "w");
  const FinObject& x = q.p.cod();
  const FinObject wx = tensor(w, x);
  // id_W ⊗ (copy_X ∘ p) : W⊗A -> W⊗(X⊗X), reread as (W⊗X)⊗X.
  const Kernel prefix = tensor(identity(kind, w), compose(copy(kind, x), q.p));
  const Kernel wiring = prefix.with_objects(prefix.dom(), tensor(wx, x));
  auto joint = [&](const Kernel& h) {
    return compose(tensor(h.with_objects(wx, h.cod()), identity(kind, x)), wiring);
  };
  return same_matrix(joint(q.f), joint(q.g));
}

bool abs_cont(const Kernel& q, const Kernel& p) {
  require_ac_kinds(q, p);
  const auto q_mask = support_mask(q);
  const auto p_mask = support_mask(p);
  for (std::size_t i = 0; i < p_mask.size(); ++i) {
    if (p_mask[i] && !q_mask[i]) {
      return false;
    }
  }
  return true;
}

std::optional<AcWitness> refute_abs_cont(const Kernel& q, const Kernel& p) {
  require_ac_kinds(q, p);
  const auto q_mask = support_mask(q);
  const auto p_mask = support_mask(p);
  for (std::size_t i = 0; i < p_mask.size(); ++i) {
    if (p_mask[i] && !q_mask[i]) {
      return AcWitness{indicator(p.kind(), p.cod(), std::nullopt),
                       indicator(p.kind(), p.cod(), i), i, p.cod().label(i)};
    }
  }
  return std::nullopt;
}

bool acsim(const Kernel& p, const Kernel& q) { return abs_cont(p, q) && abs_cont(q, p); }

bool is_atomic(const Kernel& p) {
  return abs_cont(tensor(p, p), compose(copy(p.kind(), p.cod()), p));
}

Kernel perturb_off_support(const Kernel& f, const Kernel& p, std::uint64_t seed) {
  const std::size_t nx = p.rows();
  if (nx == 0 || f.cols() % nx != 0) {
    fail(ErrorCode::ShapeMismatch, "domain of f must end in the codomain of p");
  }
  const std::size_t nw = f.cols() / nx;
  const auto mask = support_mask(p);
  Rng rng(seed);
  std::vector<Rational> entries(f.entries().begin(), f.entries().end());
  for (std::size_t x = 0; x < nx; ++x) {
    if (mask[x]) {
      continue;
    }
    for (std::size_t w = 0; w < nw; ++w) {
      const std::size_t col = w * nx + x;
      const auto original = f.column(col);
      std::vector<Rational> replacement;
      for (int attempt = 0; attempt < 32; ++attempt) {
        replacement = random_column(f.kind(), f.rows(), rng);
        if (replacement != original) {
          break;
        }
      }
      if (replacement == original && f.rows() > 1) {
        replacement = point_column(f.rows(), original[0].is_one() ? 1 : 0);
      }
      for (std::size_t y = 0; y < f.rows(); ++y) {
        entries[y * f.cols() + col] = replacement[y];
      }
    }
  }
  return Kernel(f.kind(), f.dom(), f.cod(), std::move(entries));
}

ImplicationReport check_causality_instance(const Kernel& f, const Kernel& g, const Kernel& h1,
                                           const Kernel& h2) {
  if (!(f.cod() == g.dom()) || !(g.cod() == h1.dom()) || !(h1.dom() == h2.dom()) ||
      !(h1.cod() == h2.cod())) {
    fail(ErrorCode::ShapeMismatch, "expected f: A->X, g: X->Y, h1, h2: Y->Z");
  }
  ImplicationReport r;
  r.antecedent = ase_joint_diagram(AseQuery{compose(g, f), h1, h2, 1});
  r.consequent = ase_joint_diagram(AseQuery{f, compose(h1, g), compose(h2, g), 1});
  r.implication_ok = !r.antecedent || r.consequent;
  return r;
}

}  // namespace markov
