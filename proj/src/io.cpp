#include "markov/io.hpp"

#include <fstream>
#include <iterator>

#include "json.hpp"

#include "markov/error.hpp"

namespace markov {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bad_field(const std::string& field, const std::string& msg) {
  fail(ErrorCode::ParseError, "field '" + field + "': " + msg);
}

const json& require_field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) {
    bad_field(name, "missing");
  }
  return *it;
}

FinObject parse_labels(const json& doc, const char* name) {
  const json& arr = require_field(doc, name);
  if (!arr.is_array()) {
    bad_field(name, "expected an array of labels");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) {
      bad_field(std::string(name) + "[" + std::to_string(i) + "]", "expected a string label");
    }
    labels.push_back(arr[i].get<std::string>());
  }
  try {
    return FinObject(std::move(labels));
  } catch (const Error& e) {
    bad_field(name, e.what());
  }
}

Rational parse_entry(const json& v, const std::string& field) {
  if (v.is_number_integer()) {
    return Rational(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
      bad_field(field, e.what());
    }
  }
  bad_field(field, "expected an integer or an \"n/d\" string");
}

Kernel parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("malformed JSON at byte ") + std::to_string(e.byte) +
                                    ": " + e.what());
  }
  if (!doc.is_object()) {
    fail(ErrorCode::ParseError, "document must be a JSON object");
  }
  const json& kind_field = require_field(doc, "kind");
  if (!kind_field.is_string()) {
    bad_field("kind", "expected a string");
  }
  const auto kind = parse_kind(kind_field.get<std::string>());
  if (!kind) {
    bad_field("kind", "unknown kind \"" + kind_field.get<std::string>() + "\"");
  }
  FinObject dom = parse_labels(doc, "dom");
  FinObject cod = parse_labels(doc, "cod");

  if (doc.contains("images")) {
    if (*kind != Kind::Multi) {
      bad_field("images", "only multi kernels are given by images");
    }
    const json& images = doc["images"];
    if (!images.is_array() || images.size() != dom.size()) {
      bad_field("images", "expected one image per domain element");
    }
    std::vector<Rational> entries(dom.size() * cod.size());
    for (std::size_t j = 0; j < images.size(); ++j) {
      const std::string field = "images[" + std::to_string(j) + "]";
      if (!images[j].is_array()) {
        bad_field(field, "expected an array of labels");
      }
      for (const json& label : images[j]) {
        if (!label.is_string()) {
          bad_field(field, "expected string labels");
        }
        const auto row = cod.index_of(label.get<std::string>());
        if (!row) {
          bad_field(field, "unknown codomain label \"" + label.get<std::string>() + "\"");
        }
        entries[*row * dom.size() + j] = 1;
      }
    }
    return Kernel(Kind::Multi, std::move(dom), std::move(cod), std::move(entries));
  }

  const json& matrix = require_field(doc, "matrix");
  if (!matrix.is_array() || matrix.size() != cod.size()) {
    bad_field("matrix", "expected " + std::to_string(cod.size()) + " rows");
  }
  std::vector<Rational> entries;
  entries.reserve(dom.size() * cod.size());
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const std::string row_field = "matrix[" + std::to_string(i) + "]";
    if (!matrix[i].is_array() || matrix[i].size() != dom.size()) {
      bad_field(row_field, "expected " + std::to_string(dom.size()) + " entries");
    }
    for (std::size_t j = 0; j < dom.size(); ++j) {
      entries.push_back(parse_entry(matrix[i][j], row_field + "[" + std::to_string(j) + "]"));
    }
  }
  try {
    return Kernel(*kind, std::move(dom), std::move(cod), std::move(entries));
  } catch (const Error& e) {
    bad_field("matrix", e.what());
  }
}

}  // namespace

Kernel parse_kernel_unchecked(std::string_view text) { return parse_document(text); }

Kernel parse_kernel(std::string_view text) { return checked(parse_document(text)); }

std::string emit_kernel(const Kernel& k) {
  ordered_json doc;
  doc["kind"] = std::string(to_string(k.kind()));
  doc["dom"] = k.dom().labels();
  doc["cod"] = k.cod().labels();
  if (k.kind() == Kind::Multi) {
    ordered_json images = ordered_json::array();
    for (std::size_t j = 0; j < k.cols(); ++j) {
      ordered_json image = ordered_json::array();
      for (std::size_t i = 0; i < k.rows(); ++i) {
        if (k.nonzero(i, j)) {
          image.push_back(k.cod().label(i));
        }
      }
      images.push_back(std::move(image));
    }
    doc["images"] = std::move(images);
  } else {
    ordered_json matrix = ordered_json::array();
    for (std::size_t i = 0; i < k.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < k.cols(); ++j) {
        row.push_back(k(i, j).str());
      }
      matrix.push_back(std::move(row));
    }
    doc["matrix"] = std::move(matrix);
  }
  return doc.dump(2);
}

std::string read_text(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(stdin_stream), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(ErrorCode::ParseError, "cannot read \"" + path + "\"");
  }
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace markov
