#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "markov/fin_object.hpp"
#include "markov/scalar.hpp"

namespace markov {

/// The three finite models sharing one formula set:
///   Stoch  - column-stochastic matrices over nonnegative rationals,
///   Signed - rational matrices whose columns sum to 1,
///   Multi  - boolean matrices with nonempty columns (multivalued maps).
enum class Kind { Stoch, Signed, Multi };

std::string_view to_string(Kind kind);
std::optional<Kind> parse_kind(std::string_view text);

/// A morphism dom -> cod. Entry (i, j) is the weight of codomain element i
/// given domain element j, so p∘δ_a reads off column a. Multi kernels store
/// 0/1 entries and compose over the boolean semiring.
///
/// The constructor checks shapes only; the column law is checked by
/// validate() / checked() so that malformed input can still be reported on.
class Kernel {
 public:
  Kernel(Kind kind, FinObject dom, FinObject cod, std::vector<Rational> entries);

  static Kernel from_rows(Kind kind, FinObject dom, FinObject cod,
                          const std::vector<std::vector<Rational>>& rows);
  /// Multi kernel from per-domain-element images.
  static Kernel from_images(FinObject dom, FinObject cod,
                            const std::vector<std::vector<std::string>>& images);

  Kind kind() const { return kind_; }
  const FinObject& dom() const { return dom_; }
  const FinObject& cod() const { return cod_; }
  std::size_t rows() const { return cod_.size(); }
  std::size_t cols() const { return dom_.size(); }

  const Rational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * cols() + col];
  }
  bool nonzero(std::size_t row, std::size_t col) const { return !(*this)(row, col).is_zero(); }
  std::span<const Rational> entries() const { return entries_; }
  std::vector<Rational> column(std::size_t col) const;

  /// Same matrix viewed between different objects of the same sizes.
  Kernel with_objects(FinObject dom, FinObject cod) const;

 private:
  Kind kind_;
  FinObject dom_;
  FinObject cod_;
  std::vector<Rational> entries_;
};

struct ValidationReport {
  bool ok = true;
  std::optional<std::size_t> column;
  std::string message;
};

ValidationReport validate(const Kernel& k);
/// Returns k unchanged, or throws Error(ValidationError) with the report.
Kernel checked(Kernel k);

Kernel compose(const Kernel& g, const Kernel& f);
Kernel tensor(const Kernel& f, const Kernel& g);

Kernel identity(Kind kind, const FinObject& x);
Kernel copy(Kind kind, const FinObject& x);
Kernel discard(Kind kind, const FinObject& x);
Kernel swap(Kind kind, const FinObject& x, const FinObject& y);
Kernel delta(Kind kind, const FinObject& x, std::string_view label);

enum class StructureKind { Copy, Discard, Swap, Identity, Delta };

Kernel structure(Kind kind, StructureKind which, const FinObject& x,
                 const std::optional<FinObject>& y = std::nullopt,
                 std::optional<std::string_view> label = std::nullopt);

enum class Side { Left, Right };

/// Discards one factor of a tensor codomain: `drop` names the factor that
/// is summed (or OR-ed) out. The factors are recovered from the tensor
/// labels; throws Error(BadSplit) when the codomain does not factor.
Kernel marginalize(const Kernel& f, std::size_t left_size, Side drop);
Kernel marginalize(const Kernel& f, const FinObject& left, const FinObject& right, Side drop);

/// Column test: every column is a point mass (a singleton image for Multi).
bool is_deterministic(const Kernel& f);
/// The defining equation copy∘f = (f⊗f)∘copy, evaluated literally.
bool is_deterministic_by_comonoid(const Kernel& f);

bool kernel_equal(const Kernel& f, const Kernel& g);
/// Equal kinds, shapes and entries; labels are ignored.
bool same_matrix(const Kernel& f, const Kernel& g);

/// Point-mass column on element `row` of cod, in the semiring of `kind`.
std::vector<Rational> point_column(std::size_t cod_size, std::size_t row);

}  // namespace markov
