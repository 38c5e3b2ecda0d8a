#include "markov/kernel.hpp"

#include <algorithm>

#include "markov/error.hpp"

namespace markov {

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::Stoch: return "stoch";
    case Kind::Signed: return "signed";
    case Kind::Multi: return "multi";
  }
  return "?";
}

std::optional<Kind> parse_kind(std::string_view text) {
  if (text == "stoch") return Kind::Stoch;
  if (text == "signed") return Kind::Signed;
  if (text == "multi") return Kind::Multi;
  return std::nullopt;
}

Kernel::Kernel(Kind kind, FinObject dom, FinObject cod, std::vector<Rational> entries)
    : kind_(kind), dom_(std::move(dom)), cod_(std::move(cod)), entries_(std::move(entries)) {
  if (entries_.size() != dom_.size() * cod_.size()) {
    fail(ErrorCode::ShapeMismatch, "expected " + std::to_string(cod_.size()) + "x" +
                                       std::to_string(dom_.size()) + " entries, got " +
                                       std::to_string(entries_.size()));
  }
  if (kind_ == Kind::Multi) {
    for (const auto& v : entries_) {
      if (!v.is_zero() && !v.is_one()) {
        fail(ErrorCode::InvalidArgument, "multi kernel entries must be 0 or 1, got " + v.str());
      }
    }
  }
}

Kernel Kernel::from_rows(Kind kind, FinObject dom, FinObject cod,
                         const std::vector<std::vector<Rational>>& rows) {
  if (rows.size() != cod.size()) {
    fail(ErrorCode::ShapeMismatch, "row count " + std::to_string(rows.size()) +
                                       " does not match codomain size " +
                                       std::to_string(cod.size()));
  }
  std::vector<Rational> entries;
  entries.reserve(dom.size() * cod.size());
  for (const auto& row : rows) {
    if (row.size() != dom.size()) {
      fail(ErrorCode::ShapeMismatch, "row length " + std::to_string(row.size()) +
                                         " does not match domain size " +
                                         std::to_string(dom.size()));
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Kernel(kind, std::move(dom), std::move(cod), std::move(entries));
}

Kernel Kernel::from_images(FinObject dom, FinObject cod,
                           const std::vector<std::vector<std::string>>& images) {
  if (images.size() != dom.size()) {
    fail(ErrorCode::ShapeMismatch, "image count does not match domain size");
  }
  std::vector<Rational> entries(dom.size() * cod.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (const auto& label : images[j]) {
      entries[cod.require_index(label) * dom.size() + j] = 1;
    }
  }
  return Kernel(Kind::Multi, std::move(dom), std::move(cod), std::move(entries));
}

std::vector<Rational> Kernel::column(std::size_t col) const {
  std::vector<Rational> out;
  out.reserve(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    out.push_back((*this)(i, col));
  }
  return out;
}

Kernel Kernel::with_objects(FinObject dom, FinObject cod) const {
  if (dom.size() != dom_.size() || cod.size() != cod_.size()) {
    fail(ErrorCode::ShapeMismatch, "relabeling must preserve object sizes");
  }
  return Kernel(kind_, std::move(dom), std::move(cod), entries_);
}

ValidationReport validate(const Kernel& k) {
  ValidationReport report;
  for (std::size_t j = 0; j < k.cols(); ++j) {
    if (k.kind() == Kind::Multi) {
      bool any = false;
      for (std::size_t i = 0; i < k.rows(); ++i) {
        any = any || k.nonzero(i, j);
      }
      if (!any) {
        report.ok = false;
        report.column = j;
        report.message = "column " + std::to_string(j) + " has an empty image";
        return report;
      }
      continue;
    }
    Rational sum;
    for (std::size_t i = 0; i < k.rows(); ++i) {
      if (k.kind() == Kind::Stoch && k(i, j).sign() < 0) {
        report.ok = false;
        report.column = j;
        report.message = "column " + std::to_string(j) + " has negative entry " + k(i, j).str() +
                         " at row " + std::to_string(i);
        return report;
      }
      sum += k(i, j);
    }
    if (!sum.is_one()) {
      report.ok = false;
      report.column = j;
      report.message = "column " + std::to_string(j) + " sums to " + sum.str();
      return report;
    }
  }
  return report;
}

Kernel checked(Kernel k) {
  auto report = validate(k);
  if (!report.ok) {
    fail(ErrorCode::ValidationError, report.message);
  }
  return k;
}

namespace {

void require_same_kind(const Kernel& a, const Kernel& b) {
  if (a.kind() != b.kind()) {
    fail(ErrorCode::KindMismatch, std::string(to_string(a.kind())) + " vs " +
                                      std::string(to_string(b.kind())));
  }
}

// Boolean semiring: any positive accumulated value collapses to 1.
void saturate(Kind kind, mpq_class& v) {
  if (kind == Kind::Multi && sgn(v) != 0) {
    v = 1;
  }
}

std::vector<Rational> to_entries(Kind kind, std::vector<mpq_class>& acc) {
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& v : acc) {
    saturate(kind, v);
    out.emplace_back(std::move(v));
  }
  return out;
}

}  // namespace

Kernel compose(const Kernel& g, const Kernel& f) {
  require_same_kind(g, f);
  if (!(f.cod() == g.dom())) {
    fail(ErrorCode::DomainMismatch, "codomain of f (size " + std::to_string(f.rows()) +
                                        ") is not the domain of g (size " +
                                        std::to_string(g.cols()) + ")");
  }
  const std::size_t n_out = g.rows();
  const std::size_t n_mid = f.rows();
  const std::size_t n_in = f.cols();
  std::vector<mpq_class> acc(n_out * n_in);
  for (std::size_t j = 0; j < n_in; ++j) {
    for (std::size_t k = 0; k < n_mid; ++k) {
      const auto& fk = f(k, j).raw();
      if (sgn(fk) == 0) {
        continue;
      }
      for (std::size_t i = 0; i < n_out; ++i) {
        const auto& gk = g(i, k).raw();
        if (sgn(gk) != 0) {
          acc[i * n_in + j] += gk * fk;
        }
      }
    }
  }
  return Kernel(g.kind(), f.dom(), g.cod(), to_entries(g.kind(), acc));
}

Kernel tensor(const Kernel& f, const Kernel& g) {
  require_same_kind(f, g);
  const std::size_t rows = f.rows() * g.rows();
  const std::size_t cols = f.cols() * g.cols();
  std::vector<Rational> entries(rows * cols);
  for (std::size_t y = 0; y < f.rows(); ++y) {
    for (std::size_t z = 0; z < g.rows(); ++z) {
      for (std::size_t a = 0; a < f.cols(); ++a) {
        if (f(y, a).is_zero()) {
          continue;
        }
        for (std::size_t b = 0; b < g.cols(); ++b) {
          entries[(y * g.rows() + z) * cols + (a * g.cols() + b)] = f(y, a) * g(z, b);
        }
      }
    }
  }
  return Kernel(f.kind(), tensor(f.dom(), g.dom()), tensor(f.cod(), g.cod()),
                std::move(entries));
}

Kernel identity(Kind kind, const FinObject& x) {
  const std::size_t n = x.size();
  std::vector<Rational> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    entries[i * n + i] = 1;
  }
  return Kernel(kind, x, x, std::move(entries));
}

Kernel copy(Kind kind, const FinObject& x) {
  const std::size_t n = x.size();
  std::vector<Rational> entries(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    entries[(i * n + i) * n + i] = 1;
  }
  return Kernel(kind, x, tensor(x, x), std::move(entries));
}

Kernel discard(Kind kind, const FinObject& x) {
  return Kernel(kind, x, FinObject::unit(), std::vector<Rational>(x.size(), Rational(1)));
}

Kernel swap(Kind kind, const FinObject& x, const FinObject& y) {
  const std::size_t nx = x.size();
  const std::size_t ny = y.size();
  const std::size_t n = nx * ny;
  std::vector<Rational> entries(n * n);
  for (std::size_t a = 0; a < nx; ++a) {
    for (std::size_t b = 0; b < ny; ++b) {
      entries[(b * nx + a) * n + (a * ny + b)] = 1;
    }
  }
  return Kernel(kind, tensor(x, y), tensor(y, x), std::move(entries));
}

Kernel delta(Kind kind, const FinObject& x, std::string_view label) {
  const std::size_t row = x.require_index(label);
  return Kernel(kind, FinObject::unit(), x, point_column(x.size(), row));
}

Kernel structure(Kind kind, StructureKind which, const FinObject& x,
                 const std::optional<FinObject>& y, std::optional<std::string_view> label) {
  switch (which) {
    case StructureKind::Copy: return copy(kind, x);
    case StructureKind::Discard: return discard(kind, x);
    case StructureKind::Identity: return identity(kind, x);
    case StructureKind::Swap:
      if (!y) {
        fail(ErrorCode::InvalidArgument, "swap requires a second object");
      }
      return swap(kind, x, *y);
    case StructureKind::Delta:
      if (!label) {
        fail(ErrorCode::InvalidArgument, "delta requires an element label");
      }
      return delta(kind, x, *label);
  }
  fail(ErrorCode::InvalidArgument, "unknown structure kind");
}

Kernel marginalize(const Kernel& f, std::size_t left_size, Side drop) {
  auto factors = split_tensor(f.cod(), left_size);
  if (!factors) {
    fail(ErrorCode::BadSplit, "codomain of size " + std::to_string(f.rows()) +
                                  " does not factor as a tensor with left size " +
                                  std::to_string(left_size));
  }
  return marginalize(f, factors->first, factors->second, drop);
}

Kernel marginalize(const Kernel& f, const FinObject& left, const FinObject& right, Side drop) {
  if (left.size() * right.size() != f.rows()) {
    fail(ErrorCode::BadSplit, "factor sizes do not multiply to the codomain size");
  }
  const FinObject& kept = drop == Side::Left ? right : left;
  std::vector<mpq_class> acc(kept.size() * f.cols());
  for (std::size_t l = 0; l < left.size(); ++l) {
    for (std::size_t r = 0; r < right.size(); ++r) {
      const std::size_t row = l * right.size() + r;
      const std::size_t out = drop == Side::Left ? r : l;
      for (std::size_t j = 0; j < f.cols(); ++j) {
        acc[out * f.cols() + j] += f(row, j).raw();
      }
    }
  }
  return Kernel(f.kind(), f.dom(), kept, to_entries(f.kind(), acc));
}

bool is_deterministic(const Kernel& f) {
  for (std::size_t j = 0; j < f.cols(); ++j) {
    std::size_t nonzeros = 0;
    bool unit_mass = false;
    for (std::size_t i = 0; i < f.rows(); ++i) {
      if (f.nonzero(i, j)) {
        ++nonzeros;
        unit_mass = f(i, j).is_one();
      }
    }
    if (nonzeros != 1 || !unit_mass) {
      return false;
    }
  }
  return true;
}

bool is_deterministic_by_comonoid(const Kernel& f) {
  const Kernel lhs = compose(copy(f.kind(), f.cod()), f);
  const Kernel rhs = compose(tensor(f, f), copy(f.kind(), f.dom()));
  return kernel_equal(lhs, rhs);
}

bool kernel_equal(const Kernel& f, const Kernel& g) {
  return f.kind() == g.kind() && f.dom() == g.dom() && f.cod() == g.cod() &&
         std::equal(f.entries().begin(), f.entries().end(), g.entries().begin(),
                    g.entries().end());
}

bool same_matrix(const Kernel& f, const Kernel& g) {
  return f.kind() == g.kind() && f.rows() == g.rows() && f.cols() == g.cols() &&
         std::equal(f.entries().begin(), f.entries().end(), g.entries().begin(),
                    g.entries().end());
}

std::vector<Rational> point_column(std::size_t cod_size, std::size_t row) {
  std::vector<Rational> col(cod_size);
  col.at(row) = 1;
  return col;
}

}  // namespace markov
