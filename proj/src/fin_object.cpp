#include "markov/fin_object.hpp"

#include "markov/error.hpp"

namespace markov {

FinObject::FinObject() : FinObject(std::vector<std::string>{}) {}

FinObject::FinObject(std::initializer_list<std::string> labels)
    : FinObject(std::vector<std::string>(labels)) {}

FinObject::FinObject(std::vector<std::string> labels) {
  auto data = std::make_shared<Data>();
  data->index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!data->index.emplace(labels[i], i).second) {
      fail(ErrorCode::InvalidArgument, "duplicate label \"" + labels[i] + "\"");
    }
  }
  data->labels = std::move(labels);
  data_ = std::move(data);
}

FinObject FinObject::unit() {
  static const FinObject u{std::string(kUnitLabel)};
  return u;
}

FinObject FinObject::range(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::string(prefix) + std::to_string(i));
  }
  return FinObject(std::move(labels));
}

std::optional<std::size_t> FinObject::index_of(std::string_view label) const {
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::size_t FinObject::require_index(std::string_view label) const {
  if (auto i = index_of(label)) {
    return *i;
  }
  fail(ErrorCode::UnknownLabel, "no element \"" + std::string(label) + "\"");
}

FinObject tensor(const FinObject& x, const FinObject& y) {
  std::vector<std::string> labels;
  labels.reserve(x.size() * y.size());
  for (const auto& a : x.labels()) {
    for (const auto& b : y.labels()) {
      labels.push_back("(" + a + "," + b + ")");
    }
  }
  return FinObject(std::move(labels));
}

std::optional<std::pair<std::string, std::string>> split_pair_label(std::string_view label) {
  if (label.size() < 3 || label.front() != '(' || label.back() != ')') {
    return std::nullopt;
  }
  const std::string_view inner = label.substr(1, label.size() - 2);
  int depth = 0;
  std::optional<std::size_t> comma;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const char c = inner[i];
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (--depth < 0) {
        return std::nullopt;
      }
    } else if (c == ',' && depth == 0) {
      if (comma) {
        return std::nullopt;
      }
      comma = i;
    }
  }
  if (!comma || depth != 0) {
    return std::nullopt;
  }
  return std::make_pair(std::string(inner.substr(0, *comma)),
                        std::string(inner.substr(*comma + 1)));
}

std::optional<std::pair<FinObject, FinObject>> split_tensor(const FinObject& obj,
                                                            std::size_t left_size) {
  if (left_size == 0 || obj.size() % left_size != 0) {
    return std::nullopt;
  }
  const std::size_t right_size = obj.size() / left_size;
  if (right_size == 0) {
    return std::nullopt;
  }
  std::vector<std::string> left;
  std::vector<std::string> right;
  for (std::size_t i = 0; i < obj.size(); ++i) {
    auto parts = split_pair_label(obj.label(i));
    if (!parts) {
      return std::nullopt;
    }
    const std::size_t li = i / right_size;
    const std::size_t ri = i % right_size;
    if (ri == 0) {
      left.push_back(parts->first);
    } else if (parts->first != left[li]) {
      return std::nullopt;
    }
    if (li == 0) {
      right.push_back(parts->second);
    } else if (parts->second != right[ri]) {
      return std::nullopt;
    }
  }
  try {
    return std::make_pair(FinObject(std::move(left)), FinObject(std::move(right)));
  } catch (const Error&) {
    return std::nullopt;
  }
}

FinObject subset(const FinObject& obj, std::span<const std::size_t> indices) {
  std::vector<std::string> labels;
  labels.reserve(indices.size());
  for (std::size_t i : indices) {
    labels.push_back(obj.label(i));
  }
  return FinObject(std::move(labels));
}

}  // namespace markov
