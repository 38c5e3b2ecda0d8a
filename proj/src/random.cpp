#include "markov/random.hpp"

#include <algorithm>
#include <numeric>

#include "markov/error.hpp"

namespace markov {

namespace {

std::vector<Rational> random_distribution(std::size_t n, Rng& rng, const RandomOptions& opts,
                                          bool full_support) {
  std::uniform_int_distribution<int> weight(1, std::max(1, opts.max_weight));
  std::bernoulli_distribution zero(full_support ? 0.0 : opts.zero_probability);
  std::vector<std::int64_t> w(n);
  std::int64_t total = 0;
  for (auto& v : w) {
    v = zero(rng) ? 0 : weight(rng);
    total += v;
  }
  if (total == 0) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    w[pick(rng)] = 1;
    total = 1;
  }
  std::vector<Rational> col;
  col.reserve(n);
  for (auto v : w) {
    col.emplace_back(v, total);
  }
  return col;
}

}  // namespace

std::vector<Rational> random_column(Kind kind, std::size_t n, Rng& rng,
                                    const RandomOptions& opts) {
  if (n == 0) {
    fail(ErrorCode::InvalidArgument, "no valid column on an empty codomain");
  }
  switch (kind) {
    case Kind::Stoch:
      return random_distribution(n, rng, opts, false);
    case Kind::Multi: {
      std::bernoulli_distribution in(1.0 - opts.zero_probability);
      std::vector<Rational> col(n);
      bool any = false;
      for (auto& v : col) {
        if (in(rng)) {
          v = 1;
          any = true;
        }
      }
      if (!any) {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        col[pick(rng)] = 1;
      }
      return col;
    }
    case Kind::Signed: {
      std::uniform_int_distribution<int> num(-opts.max_weight, opts.max_weight);
      std::uniform_int_distribution<int> den(1, 3);
      std::vector<Rational> col(n);
      Rational sum;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        col[i] = Rational(num(rng), den(rng));
        sum += col[i];
      }
      col[n - 1] = Rational(1) - sum;
      return col;
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown kind");
}

Kernel random_kernel(Kind kind, const FinObject& dom, const FinObject& cod, Rng& rng,
                     const RandomOptions& opts) {
  std::vector<Rational> entries(dom.size() * cod.size());
  for (std::size_t j = 0; j < dom.size(); ++j) {
    auto col = random_column(kind, cod.size(), rng, opts);
    for (std::size_t i = 0; i < cod.size(); ++i) {
      entries[i * dom.size() + j] = std::move(col[i]);
    }
  }
  return Kernel(kind, dom, cod, std::move(entries));
}

FinObject random_object(Rng& rng, std::size_t min_size, std::size_t max_size,
                        std::string_view prefix) {
  std::uniform_int_distribution<std::size_t> size(min_size, max_size);
  return FinObject::range(size(rng), prefix);
}

GeneratedIdempotent random_idempotent(const FinObject& x, Rng& rng, const RandomOptions& opts) {
  const std::size_t n = x.size();
  if (n == 0) {
    fail(ErrorCode::InvalidArgument, "idempotent generator needs a nonempty object");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  // Number of recurrent states, then cut them into nonempty classes.
  std::uniform_int_distribution<std::size_t> recurrent_count(1, n);
  const std::size_t n_rec = recurrent_count(rng);
  std::uniform_int_distribution<std::size_t> class_count(1, n_rec);
  const std::size_t n_classes = class_count(rng);

  std::vector<std::size_t> cuts(n_rec - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(n_classes - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(n_rec);

  std::vector<std::vector<std::size_t>> classes;
  std::size_t start = 0;
  for (std::size_t cut : cuts) {
    std::vector<std::size_t> cls(order.begin() + static_cast<std::ptrdiff_t>(start),
                                 order.begin() + static_cast<std::ptrdiff_t>(cut));
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
    start = cut;
  }
  std::sort(classes.begin(), classes.end());
  std::vector<std::size_t> transient(order.begin() + static_cast<std::ptrdiff_t>(n_rec),
                                     order.end());
  std::sort(transient.begin(), transient.end());

  const std::size_t k = classes.size();
  const FinObject t_obj = FinObject::range(k, "t");
  std::vector<Rational> iota(n * k);
  for (std::size_t t = 0; t < k; ++t) {
    auto mu = random_distribution(classes[t].size(), rng, opts, true);
    for (std::size_t m = 0; m < classes[t].size(); ++m) {
      iota[classes[t][m] * k + t] = mu[m];
    }
  }
  std::vector<Rational> pi(k * n);
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t xi : classes[t]) {
      pi[t * n + xi] = 1;
    }
  }
  for (std::size_t xi : transient) {
    auto mix = random_distribution(k, rng, opts, false);
    for (std::size_t t = 0; t < k; ++t) {
      pi[t * n + xi] = mix[t];
    }
  }
  Kernel iota_k(Kind::Stoch, t_obj, x, std::move(iota));
  Kernel pi_k(Kind::Stoch, x, t_obj, std::move(pi));
  Kernel e = compose(iota_k, pi_k);
  return GeneratedIdempotent{std::move(e), std::move(iota_k), std::move(pi_k), std::move(classes),
                             std::move(transient)};
}

}  // namespace markov
