#include "markov/idempotents.hpp"

#include <algorithm>
#include <functional>

#include "markov/error.hpp"

namespace markov {

namespace {

void require_endo(const Kernel& e) {
  if (!(e.dom() == e.cod())) {
    fail(ErrorCode::NotEndo, "expected an endomorphism");
  }
}

bool is_idempotent(const Kernel& e) { return kernel_equal(compose(e, e), e); }

// First column-major mismatch between two kernels with equal shapes. Rows of
// a kernel into X⊗X are decoded as (y, z).
std::optional<Witness> first_mismatch(const Kernel& lhs, const Kernel& rhs, std::size_t pair_base) {
  for (std::size_t x = 0; x < lhs.cols(); ++x) {
    for (std::size_t r = 0; r < lhs.rows(); ++r) {
      if (lhs(r, x) != rhs(r, x)) {
        if (pair_base == 0) {
          return Witness{x, r, std::nullopt};
        }
        return Witness{x, r / pair_base, r % pair_base};
      }
    }
  }
  return std::nullopt;
}

Kernel strong_rhs(const Kernel& e) { return compose(tensor(e, e), copy(e.kind(), e.dom())); }

Kernel static_rhs(const Kernel& e) { return compose(copy(e.kind(), e.cod()), e); }

Kernel balanced_rhs(const Kernel& e) { return compose(strong_rhs(e), e); }

// Tarjan's strongly connected components on x -> y iff e(y|x) != 0.
std::vector<std::vector<std::size_t>> strongly_connected_components(const Kernel& e) {
  const std::size_t n = e.cols();
  std::vector<std::size_t> index(n, SIZE_MAX);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (!e.nonzero(w, v)) {
        continue;
      }
      if (index[w] == SIZE_MAX) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> component;
      std::size_t w = 0;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      std::sort(component.begin(), component.end());
      components.push_back(std::move(component));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] == SIZE_MAX) {
      visit(v);
    }
  }
  return components;
}

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) {
      return cap + 1;
    }
    out *= base;
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

// All valid columns of length n for the search: nonempty boolean columns
// for Multi, grid distributions for Stoch.
std::vector<std::vector<Rational>> enumerate_columns(Kind kind, std::size_t n, std::size_t grid) {
  std::vector<std::vector<Rational>> out;
  if (kind == Kind::Multi) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Rational> col(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t{1} << i)) {
          col[i] = 1;
        }
      }
      out.push_back(std::move(col));
    }
    return out;
  }
  std::vector<std::size_t> parts(n, 0);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t left) {
    if (i + 1 == n) {
      parts[i] = left;
      std::vector<Rational> col;
      for (std::size_t p : parts) {
        col.emplace_back(static_cast<std::int64_t>(p), static_cast<std::int64_t>(grid));
      }
      out.push_back(std::move(col));
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      parts[i] = v;
      fill(i + 1, left - v);
    }
  };
  if (n > 0) {
    fill(0, grid);
  }
  return out;
}

Kernel from_columns(Kind kind, const FinObject& dom, const FinObject& cod,
                    const std::vector<const std::vector<Rational>*>& cols) {
  std::vector<Rational> entries(dom.size() * cod.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < cod.size(); ++i) {
      entries[i * dom.size() + j] = (*cols[j])[i];
    }
  }
  return Kernel(kind, dom, cod, std::move(entries));
}

}  // namespace

Kernel two_step(const Kernel& e) {
  require_endo(e);
  const std::size_t n = e.cols();
  std::vector<Rational> entries(n * n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (e(y, x).is_zero()) {
        continue;
      }
      for (std::size_t z = 0; z < n; ++z) {
        entries[(y * n + z) * n + x] = e(y, x) * e(z, y);
      }
    }
  }
  return Kernel(e.kind(), e.dom(), tensor(e.cod(), e.cod()), std::move(entries));
}

IdempotentReport classify(const Kernel& e) {
  require_endo(e);
  IdempotentReport r;
  r.idempotent_witness = first_mismatch(compose(e, e), e, 0);
  r.idempotent = !r.idempotent_witness;
  for (std::size_t x = 0; x < e.cols() && !r.deterministic_witness; ++x) {
    std::size_t hits = 0;
    std::size_t first = 0;
    for (std::size_t y = 0; y < e.rows(); ++y) {
      if (e.nonzero(y, x)) {
        if (hits++ == 0) {
          first = y;
        }
      }
    }
    if (hits != 1 || !e(first, x).is_one()) {
      r.deterministic_witness = Witness{x, first, std::nullopt};
    }
  }
  if (!r.idempotent) {
    return r;
  }
  r.deterministic = !r.deterministic_witness;
  const std::size_t n = e.cols();
  const Kernel lhs = two_step(e);
  r.static_witness = first_mismatch(lhs, static_rhs(e), n);
  r.strong_witness = first_mismatch(lhs, strong_rhs(e), n);
  r.balanced_witness = first_mismatch(lhs, balanced_rhs(e), n);
  r.is_static = !r.static_witness;
  r.strong = !r.strong_witness;
  r.balanced = !r.balanced_witness;
  return r;
}

BalancedCrossCheck balanced_cross_check(const Kernel& e) {
  require_endo(e);
  if (!is_idempotent(e)) {
    fail(ErrorCode::NotIdempotent, "balance is defined for idempotents");
  }
  const Kind kind = e.kind();
  const FinObject& x = e.dom();
  const std::size_t n = x.size();
  const Kernel lhs = two_step(e);

  BalancedCrossCheck c;
  c.witness = first_mismatch(lhs, balanced_rhs(e), n);
  c.balanced_equation = !c.witness;
  c.detailed_balance = kernel_equal(lhs, compose(swap(kind, x, x), lhs));
  c.strong_almost_surely = ase(AseQuery{e, lhs, strong_rhs(e), 1});

  // Invariant kernels are spanned by the columns of e; the self-adjointness
  // equation is linear in p, so checking the states e∘δ_x suffices.
  c.self_adjoint_on_invariants = true;
  const Kernel e_then_id = tensor(e, identity(kind, x));
  const Kernel id_then_e = tensor(identity(kind, x), e);
  const Kernel cp = copy(kind, x);
  for (std::size_t col = 0; col < n && c.self_adjoint_on_invariants; ++col) {
    const Kernel p = compose(e, delta(kind, x, x.label(col)));
    const Kernel joint = compose(cp, p);
    c.self_adjoint_on_invariants =
        kernel_equal(compose(e_then_id, joint), compose(id_then_e, joint));
  }
  return c;
}

SplitData blackwell_split(const Kernel& e) {
  require_endo(e);
  if (e.kind() != Kind::Stoch) {
    fail(ErrorCode::UnsupportedKind, "recurrent-class splitting needs a stochastic idempotent");
  }
  if (!is_idempotent(e)) {
    fail(ErrorCode::NotIdempotent, "e∘e differs from e");
  }
  const std::size_t n = e.cols();
  const FinObject& x = e.dom();

  auto components = strongly_connected_components(e);
  std::vector<std::size_t> component_of(n);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (std::size_t v : components[c]) {
      component_of[v] = c;
    }
  }
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t c = 0; c < components.size(); ++c) {
    bool closed = true;
    for (std::size_t v : components[c]) {
      for (std::size_t w = 0; w < n && closed; ++w) {
        closed = !e.nonzero(w, v) || component_of[w] == c;
      }
    }
    if (closed) {
      classes.push_back(components[c]);
    }
  }
  std::sort(classes.begin(), classes.end());

  std::vector<bool> recurrent(n, false);
  std::vector<std::string> t_labels;
  SplitData out{FinObject(), e, e, {}, {}};
  for (const auto& cls : classes) {
    t_labels.push_back("C_" + x.label(cls.front()));
    std::vector<std::string> members;
    for (std::size_t v : cls) {
      recurrent[v] = true;
      members.push_back(x.label(v));
    }
    out.classes.push_back(std::move(members));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!recurrent[v]) {
      out.transient.push_back(x.label(v));
    }
  }
  const std::size_t k = classes.size();
  out.t = FinObject(std::move(t_labels));

  std::vector<Rational> iota(n * k);
  std::vector<Rational> pi(k * n);
  for (std::size_t t = 0; t < k; ++t) {
    const auto column = e.column(classes[t].front());
    for (std::size_t v : classes[t]) {
      if (e.column(v) != column) {
        fail(ErrorCode::StructureViolation, "e is not constant on class " + out.t.label(t));
      }
    }
    for (std::size_t y = 0; y < n; ++y) {
      iota[y * k + t] = column[y];
    }
    for (std::size_t v = 0; v < n; ++v) {
      Rational mass;
      for (std::size_t y : classes[t]) {
        mass += e(y, v);
      }
      pi[t * n + v] = mass;
    }
  }
  out.iota = Kernel(Kind::Stoch, out.t, x, std::move(iota));
  out.pi = Kernel(Kind::Stoch, x, out.t, std::move(pi));

  if (!kernel_equal(compose(out.pi, out.iota), identity(Kind::Stoch, out.t))) {
    fail(ErrorCode::StructureViolation, "π∘ι is not the identity");
  }
  if (!kernel_equal(compose(out.iota, out.pi), e)) {
    fail(ErrorCode::StructureViolation, "ι∘π differs from e");
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!recurrent[y] && e.nonzero(y, v)) {
        fail(ErrorCode::StructureViolation, "transient state " + x.label(y) + " is charged");
      }
    }
  }
  const IdempotentReport report = classify(e);
  if (is_deterministic(out.iota) != report.is_static ||
      is_deterministic(out.pi) != report.strong) {
    fail(ErrorCode::StructureViolation, "splitting data disagrees with the idempotent's type");
  }
  return out;
}

std::optional<SplitData> search_split(const Kernel& e, std::size_t max_t,
                                      const SearchOptions& opts) {
  require_endo(e);
  if (e.kind() == Kind::Signed) {
    fail(ErrorCode::UnsupportedKind, "splitting search covers multi and gridded stoch kernels");
  }
  if (e.kind() == Kind::Stoch && opts.grid_denominator == 0) {
    fail(ErrorCode::InvalidArgument, "stoch search needs a positive grid denominator");
  }
  if (!is_idempotent(e)) {
    fail(ErrorCode::NotIdempotent, "e∘e differs from e");
  }
  const Kind kind = e.kind();
  const std::size_t n = e.cols();
  const std::size_t cap = opts.max_candidates;
  auto column_count = [&](std::size_t len) -> std::size_t {
    if (kind == Kind::Multi) {
      return len >= 63 ? cap + 1 : (std::size_t{1} << len) - 1;
    }
    return binomial(opts.grid_denominator + len - 1, len - 1);
  };
  std::size_t total = 0;
  for (std::size_t k = 1; k <= max_t; ++k) {
    const std::size_t pis = checked_pow(column_count(k), n, cap);
    const std::size_t iotas = checked_pow(column_count(n), k, cap);
    if (pis > cap || iotas > cap || (iotas != 0 && pis > cap / iotas)) {
      fail(ErrorCode::SizeLimitExceeded, "search space exceeds " + std::to_string(cap));
    }
    total += pis * iotas;
    if (total > cap) {
      fail(ErrorCode::SizeLimitExceeded, "search space exceeds " + std::to_string(cap));
    }
  }

  const FinObject& x = e.dom();
  const auto x_columns = enumerate_columns(kind, n, opts.grid_denominator);
  for (std::size_t k = 1; k <= max_t; ++k) {
    const FinObject t = FinObject::range(k, "t");
    const auto t_columns = enumerate_columns(kind, k, opts.grid_denominator);
    std::vector<std::size_t> digits(n, 0);
    while (true) {
      std::vector<const std::vector<Rational>*> pi_cols;
      for (std::size_t d : digits) {
        pi_cols.push_back(&t_columns[d]);
      }
      const Kernel pi = from_columns(kind, x, t, pi_cols);
      // Columns of ι are independent under π∘ι = id: filter them per t.
      std::vector<std::vector<const std::vector<Rational>*>> options(k);
      bool feasible = true;
      for (std::size_t s = 0; s < k && feasible; ++s) {
        const auto target = point_column(k, s);
        for (const auto& col : x_columns) {
          std::vector<Rational> image(k);
          for (std::size_t r = 0; r < k; ++r) {
            mpq_class acc = 0;
            for (std::size_t v = 0; v < n; ++v) {
              acc += pi(r, v).raw() * col[v].raw();
            }
            if (kind == Kind::Multi && sgn(acc) != 0) {
              acc = 1;
            }
            image[r] = Rational(acc);
          }
          if (image == target) {
            options[s].push_back(&col);
          }
        }
        feasible = !options[s].empty();
      }
      if (feasible) {
        std::vector<std::size_t> pick(k, 0);
        while (true) {
          std::vector<const std::vector<Rational>*> iota_cols;
          for (std::size_t s = 0; s < k; ++s) {
            iota_cols.push_back(options[s][pick[s]]);
          }
          Kernel iota = from_columns(kind, t, x, iota_cols);
          if (kernel_equal(compose(iota, pi), e)) {
            return SplitData{t, pi, std::move(iota), {}, {}};
          }
          std::size_t s = 0;
          while (s < k && ++pick[s] == options[s].size()) {
            pick[s++] = 0;
          }
          if (s == k) {
            break;
          }
        }
      }
      std::size_t i = 0;
      while (i < n && ++digits[i] == t_columns.size()) {
        digits[i++] = 0;
      }
      if (i == n) {
        break;
      }
    }
  }
  return std::nullopt;
}

SplitVerification verify_split(const Kernel& e, const Kernel& iota, const Kernel& pi) {
  require_endo(e);
  if (!(pi.dom() == e.dom()) || !(iota.cod() == e.cod()) || !(pi.cod() == iota.dom()) ||
      pi.kind() != e.kind() || iota.kind() != e.kind()) {
    fail(ErrorCode::NotASplitting, "π: X->T and ι: T->X do not fit e: X->X");
  }
  if (!kernel_equal(compose(pi, iota), identity(e.kind(), iota.dom()))) {
    fail(ErrorCode::NotASplitting, "π∘ι is not the identity");
  }
  if (!kernel_equal(compose(iota, pi), e)) {
    fail(ErrorCode::NotASplitting, "ι∘π differs from e");
  }
  SplitVerification v;
  v.report = classify(e);
  v.iota_deterministic = is_deterministic(iota);
  v.pi_deterministic = is_deterministic(pi);
  const Kind kind = e.kind();
  const FinObject& t = pi.cod();
  v.pi_as_deterministic = ase(AseQuery{iota, compose(copy(kind, t), pi),
                                       compose(tensor(pi, pi), copy(kind, e.dom())), 1});
  v.theorem_ok = v.iota_deterministic == v.report.is_static &&
                 v.pi_deterministic == v.report.strong && v.report.balanced &&
                 v.pi_as_deterministic;
  return v;
}

ImplicationReport cauchy_schwarz(const Kernel& f, const Kernel& g, const Kernel& h) {
  if (!(f.cod() == g.dom()) || !(g.cod() == h.dom()) || f.kind() != g.kind() ||
      g.kind() != h.kind()) {
    fail(ErrorCode::ShapeMismatch, "expected f: A->B, g: B->X, h: X->Y of one kind");
  }
  const Kind kind = f.kind();
  const FinObject& b = g.dom();
  const FinObject& x = g.cod();
  const Kernel hg = compose(h, g);

  ImplicationReport r;
  const Kernel product_side = compose(compose(tensor(hg, hg), copy(kind, b)), f);
  const Kernel square_side = compose(compose(compose(tensor(h, h), copy(kind, x)), g), f);
  r.antecedent = kernel_equal(product_side, square_side);

  // (h⊗id)∘copy∘g versus (hg⊗g)∘copy, compared f-almost surely.
  const Kernel pointwise = compose(tensor(h, identity(kind, x)), compose(copy(kind, x), g));
  const Kernel averaged = compose(tensor(hg, g), copy(kind, b));
  r.consequent = ase(AseQuery{f, pointwise, averaged, 1});
  r.implication_ok = !r.antecedent || r.consequent;
  return r;
}

}  // namespace markov
