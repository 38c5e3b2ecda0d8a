#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace markov {

/// A finite set with an ordered list of distinct labels. The element order
/// is significant: it fixes matrix indexing and every tie-break.
class FinObject {
 public:
  /// The empty object.
  FinObject();
  /// Throws Error(InvalidArgument) on duplicate labels.
  explicit FinObject(std::vector<std::string> labels);
  FinObject(std::initializer_list<std::string> labels);

  /// The monoidal unit: one element labeled "•".
  static FinObject unit();
  /// Elements prefix0, prefix1, ...
  static FinObject range(std::size_t n, std::string_view prefix = "");

  std::size_t size() const { return data_->labels.size(); }
  bool empty() const { return size() == 0; }
  const std::string& label(std::size_t i) const { return data_->labels.at(i); }
  const std::vector<std::string>& labels() const { return data_->labels; }

  std::optional<std::size_t> index_of(std::string_view label) const;
  /// Throws Error(UnknownLabel).
  std::size_t require_index(std::string_view label) const;

  friend bool operator==(const FinObject& a, const FinObject& b) {
    return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
  }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

inline constexpr std::string_view kUnitLabel = "•";

/// X⊗Y with elements (x,y) in x-major order, labeled "(x,y)".
FinObject tensor(const FinObject& x, const FinObject& y);

/// Recovers the factors of an object built by tensor(), given the size of
/// the left factor. Returns nullopt when the labels do not have that shape.
std::optional<std::pair<FinObject, FinObject>> split_tensor(const FinObject& obj,
                                                            std::size_t left_size);

/// Subobject on the given element indices (kept in the given order).
FinObject subset(const FinObject& obj, std::span<const std::size_t> indices);

/// Splits "(a,b)" at its top-level comma. nullopt for non-pair labels.
std::optional<std::pair<std::string, std::string>> split_pair_label(std::string_view label);

}  // namespace markov
