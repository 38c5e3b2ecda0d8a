#include "markov/supports.hpp"

#include "markov/asrel.hpp"
#include "markov/error.hpp"

namespace markov {

namespace {

void require_positive_kind(const Kernel& p, std::string_view what) {
  if (p.kind() == Kind::Signed) {
    fail(ErrorCode::UnsupportedKind, std::string(what) + " is defined for stoch and multi kernels");
  }
}

Kernel restrict_rows(const Kernel& f, const FinObject& sub, const std::vector<std::size_t>& rows) {
  std::vector<Rational> entries;
  entries.reserve(rows.size() * f.cols());
  for (std::size_t r : rows) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      entries.push_back(f(r, j));
    }
  }
  return Kernel(f.kind(), f.dom(), sub, std::move(entries));
}

Kernel subset_inclusion(Kind kind, const FinObject& sub, const FinObject& x,
                        const std::vector<std::size_t>& rows) {
  std::vector<Rational> entries(x.size() * sub.size());
  for (std::size_t s = 0; s < rows.size(); ++s) {
    entries[rows[s] * sub.size() + s] = 1;
  }
  return Kernel(kind, sub, x, std::move(entries));
}

}  // namespace

SupportData support(const Kernel& p) {
  require_positive_kind(p, "support");
  const auto rows = positive_support(p);
  FinObject s = subset(p.cod(), rows);
  Kernel inc = subset_inclusion(p.kind(), s, p.cod(), rows);
  Kernel fac = restrict_rows(p, s, rows);
  return SupportData{p, std::move(s), std::move(inc), std::move(fac), std::nullopt};
}

Kernel factor_through_support(const Kernel& f, const SupportData& sd) {
  if (!(f.cod() == sd.base.cod())) {
    fail(ErrorCode::CodMismatch, "f must land in the codomain of the supported kernel");
  }
  if (auto w = refute_abs_cont(sd.base, f)) {
    fail(ErrorCode::NotAbsolutelyContinuous,
         "f charges \"" + w->element + "\", which lies outside the support");
  }
  std::vector<std::size_t> rows;
  for (const auto& label : sd.supp_object.labels()) {
    rows.push_back(f.cod().require_index(label));
  }
  return restrict_rows(f, sd.supp_object, rows);
}

SupportData split_support(const Kernel& p) {
  SupportData sd = support(p);
  const std::size_t ns = sd.supp_object.size();
  if (ns == 0) {
    fail(ErrorCode::EmptySupport, "a split support needs a nonempty support");
  }
  const std::size_t nx = p.rows();
  std::vector<Rational> entries(ns * nx);
  for (std::size_t x = 0; x < nx; ++x) {
    const auto s = sd.supp_object.index_of(p.cod().label(x));
    entries[s.value_or(0) * nx + x] = 1;
  }
  sd.projection = Kernel(p.kind(), p.cod(), sd.supp_object, std::move(entries));
  return sd;
}

Kernel support_functor_map(const Kernel& p, const Kernel& q, const Kernel& f, const Kernel& g) {
  if (!(p.dom() == f.dom()) || !(f.cod() == q.dom()) || !(p.cod() == g.dom()) ||
      !(g.cod() == q.cod())) {
    fail(ErrorCode::ShapeMismatch, "expected p: A->X, q: B->Y, f: A->B, g: X->Y");
  }
  if (!kernel_equal(compose(g, p), compose(q, f))) {
    fail(ErrorCode::NotCommutative, "g∘p differs from q∘f");
  }
  const SupportData sp = support(p);
  const SupportData sq = support(q);
  const Kernel pushed = compose(g, sp.inclusion);
  Kernel dashed = [&] {
    try {
      return factor_through_support(pushed, sq);
    } catch (const Error& e) {
      fail(ErrorCode::FactorizationFailed, e.what());
    }
  }();
  if (!kernel_equal(compose(sq.inclusion, dashed), pushed)) {
    fail(ErrorCode::FactorizationFailed, "induced map does not commute with the inclusions");
  }
  return dashed;
}

EqualizerData equalizer_factor(const Kernel& p, const Kernel& f, const Kernel& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()) || !(p.cod() == f.dom())) {
    fail(ErrorCode::ShapeMismatch, "expected p: A->X and parallel f, g: X->Y");
  }
  if (!is_deterministic(f) || !is_deterministic(g)) {
    fail(ErrorCode::NotDeterministic, "equalizers are taken of deterministic pairs");
  }
  std::vector<std::size_t> rows;
  for (std::size_t x = 0; x < f.cols(); ++x) {
    if (f.column(x) == g.column(x)) {
      rows.push_back(x);
    }
  }
  if (!ase(p, f, g)) {
    fail(ErrorCode::NotAse, "f and g differ on the support of p");
  }
  FinObject e = subset(p.cod(), rows);
  Kernel inc = subset_inclusion(p.kind(), e, p.cod(), rows);
  Kernel fac = restrict_rows(p, e, rows);
  return EqualizerData{std::move(e), std::move(inc), std::move(fac)};
}

std::optional<std::string> point_lift(const Kernel& p, std::string_view x) {
  require_positive_kind(p, "point lifting");
  const std::size_t row = p.cod().require_index(x);
  for (std::size_t a = 0; a < p.cols(); ++a) {
    if (p.nonzero(row, a)) {
      return p.dom().label(a);
    }
  }
  return std::nullopt;
}

PreciseSupportReport precise_supports_equiv(const Kernel& p, const Kernel& f, std::string_view x,
                                            std::string_view y) {
  if (p.cols() != 1 || !(f.dom() == p.cod())) {
    fail(ErrorCode::ShapeMismatch, "expected a state p: I->X and f: X->Y");
  }
  require_positive_kind(p, "precise supports");
  const std::size_t xi = p.cod().require_index(x);
  const std::size_t yi = f.cod().require_index(y);
  const Kernel joint =
      compose(tensor(identity(p.kind(), p.cod()), f), compose(copy(p.kind(), p.cod()), p));
  PreciseSupportReport r;
  r.joint_dominates = joint.nonzero(xi * f.rows() + yi, 0);
  r.pointwise = p.nonzero(xi, 0) && f.nonzero(yi, xi);
  r.agree = r.joint_dominates == r.pointwise;
  return r;
}

bool cell_equal(const SuppCompCell& a, const SuppCompCell& b) {
  return a.object == b.object && kernel_equal(a.anchor, b.anchor);
}

bool scomp_equal(const SuppCompMorphism& a, const SuppCompMorphism& b) {
  return cell_equal(a.src, b.src) && cell_equal(a.dst, b.dst) &&
         kernel_equal(a.representative, b.representative);
}

SuppCompCell scomp_cell(const Kernel& anchor) {
  if (!is_atomic(anchor)) {
    fail(ErrorCode::InvalidArgument, "support completion objects need an atomic anchor");
  }
  return SuppCompCell{anchor.cod(), anchor};
}

Kernel canonicalize(const Kernel& f, const Kernel& anchor) {
  if (!(f.dom() == anchor.cod())) {
    fail(ErrorCode::ShapeMismatch, "representative must start at the anchor's codomain");
  }
  std::vector<bool> keep(f.cols(), false);
  for (std::size_t x : positive_support(anchor)) {
    keep[x] = true;
  }
  std::vector<Rational> entries(f.entries().begin(), f.entries().end());
  for (std::size_t x = 0; x < f.cols(); ++x) {
    if (keep[x]) {
      continue;
    }
    for (std::size_t y = 0; y < f.rows(); ++y) {
      entries[y * f.cols() + x] = y == 0 ? Rational(1) : Rational(0);
    }
  }
  return Kernel(f.kind(), f.dom(), f.cod(), std::move(entries));
}

SuppCompMorphism scomp_hom(const SuppCompCell& src, const SuppCompCell& dst, const Kernel& f) {
  if (!(f.dom() == src.object) || !(f.cod() == dst.object)) {
    fail(ErrorCode::ShapeMismatch, "representative does not connect the two cells");
  }
  if (auto w = refute_abs_cont(dst.anchor, compose(f, src.anchor))) {
    fail(ErrorCode::NotMember, "f∘p charges \"" + w->element + "\" outside the target support");
  }
  return SuppCompMorphism{src, dst, canonicalize(f, src.anchor)};
}

SuppCompMorphism scomp_identity(const SuppCompCell& cell) {
  return scomp_hom(cell, cell, identity(cell.anchor.kind(), cell.object));
}

SuppCompMorphism scomp_compose(const SuppCompMorphism& g, const SuppCompMorphism& f) {
  if (!cell_equal(f.dst, g.src)) {
    fail(ErrorCode::CellMismatch, "target of f is not the source of g");
  }
  return scomp_hom(f.src, g.dst, compose(g.representative, f.representative));
}

SuppCompCell scomp_tensor(const SuppCompCell& a, const SuppCompCell& b) {
  return SuppCompCell{tensor(a.object, b.object), tensor(a.anchor, b.anchor)};
}

SuppCompMorphism scomp_tensor(const SuppCompMorphism& f, const SuppCompMorphism& g) {
  return scomp_hom(scomp_tensor(f.src, g.src), scomp_tensor(f.dst, g.dst),
                   tensor(f.representative, g.representative));
}

SuppCompMorphism scomp_copy(const SuppCompCell& cell) {
  return scomp_hom(cell, scomp_tensor(cell, cell), copy(cell.anchor.kind(), cell.object));
}

SuppCompMorphism scomp_discard(const SuppCompCell& cell) {
  const Kind kind = cell.anchor.kind();
  const SuppCompCell unit{FinObject::unit(), identity(kind, FinObject::unit())};
  return scomp_hom(cell, unit, discard(kind, cell.object));
}

SuppCompMorphism scomp_swap(const SuppCompCell& a, const SuppCompCell& b) {
  return scomp_hom(scomp_tensor(a, b), scomp_tensor(b, a),
                   swap(a.anchor.kind(), a.object, b.object));
}

bool scomp_abs_cont(const SuppCompMorphism& f, const SuppCompMorphism& g) {
  if (!cell_equal(f.dst, g.dst)) {
    fail(ErrorCode::CellMismatch, "absolute continuity compares morphisms into one cell");
  }
  return abs_cont(compose(g.representative, g.src.anchor),
                  compose(f.representative, f.src.anchor));
}

std::pair<SuppCompCell, SuppCompMorphism> scomp_support(const SuppCompMorphism& f) {
  SuppCompCell cell{f.dst.object, compose(f.representative, f.src.anchor)};
  SuppCompMorphism inc =
      scomp_hom(cell, f.dst, identity(f.representative.kind(), f.dst.object));
  return {std::move(cell), std::move(inc)};
}

}  // namespace markov
