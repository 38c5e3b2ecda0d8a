#include "markov/golden.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "markov/error.hpp"
#include "markov/idempotents.hpp"
#include "markov/io.hpp"

namespace markov {

namespace {

struct Flags {
  bool is_static;
  bool strong;
  bool balanced;
};

std::string describe(const IdempotentReport& r) {
  std::ostringstream out;
  out << "idempotent=" << r.idempotent << " static=" << r.is_static << " strong=" << r.strong
      << " balanced=" << r.balanced;
  return out.str();
}

class Runner {
 public:
  explicit Runner(std::string dir) : dir_(std::move(dir)) {}

  Kernel load(const std::string& file) {
    return parse_kernel(read_text(dir_ + "/" + file, std::cin));
  }

  void check(const std::string& group, const std::string& name,
             const std::function<std::pair<bool, std::string>()>& body) {
    GoldenCheck c{group, name, false, ""};
    try {
      auto [ok, detail] = body();
      c.passed = ok;
      c.detail = std::move(detail);
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    checks_.push_back(std::move(c));
  }

  std::vector<GoldenCheck> take() { return std::move(checks_); }

 private:
  std::string dir_;
  std::vector<GoldenCheck> checks_;
};

void splittable_example(Runner& run, const std::string& stem, Flags expected) {
  const std::string group = "classes and splittings";
  run.check(group, stem + " classify", [&] {
    const IdempotentReport r = classify(run.load(stem + ".json"));
    const bool ok = r.idempotent && r.is_static == expected.is_static &&
                    r.strong == expected.strong && r.balanced == expected.balanced;
    return std::pair{ok, describe(r)};
  });
  run.check(group, stem + " balance characterizations agree", [&] {
    const BalancedCrossCheck c = balanced_cross_check(run.load(stem + ".json"));
    return std::pair{c.all_agree() && c.balanced_equation, std::string()};
  });
  run.check(group, stem + " blackwell_split", [&] {
    const Kernel e = run.load(stem + ".json");
    const SplitData s = blackwell_split(e);
    const bool exact = kernel_equal(compose(s.pi, s.iota), identity(Kind::Stoch, s.t)) &&
                       kernel_equal(compose(s.iota, s.pi), e);
    const bool printed = same_splitting_up_to_relabeling(
        s.iota, s.pi, run.load(stem + "_iota.json"), run.load(stem + "_pi.json"));
    return std::pair{exact && printed, std::to_string(s.t.size()) + " classes"};
  });
  run.check(group, stem + " printed splitting", [&] {
    const SplitVerification v = verify_split(run.load(stem + ".json"), run.load(stem + "_iota.json"),
                                             run.load(stem + "_pi.json"));
    return std::pair{v.theorem_ok, describe(v.report)};
  });
}

void unbalanced_example(Runner& run, const std::string& stem, std::optional<std::size_t> search) {
  const std::string file = stem + ".json";
  const std::string group = "unbalanced idempotents";
  run.check(group, stem + " not balanced", [&] {
    const IdempotentReport r = classify(run.load(file));
    return std::pair{r.idempotent && !r.balanced, describe(r)};
  });
  run.check(group, stem + " characterizations agree", [&] {
    const BalancedCrossCheck c = balanced_cross_check(run.load(file));
    return std::pair{c.all_agree() && !c.balanced_equation, std::string()};
  });
  if (search) {
    run.check(group, stem + " has no splitting", [&] {
      const auto found = search_split(run.load(file), *search);
      return std::pair{!found, "searched |T| <= " + std::to_string(*search)};
    });
  }
}

}  // namespace

std::string default_fixture_dir() { return MARKOV_FIXTURE_DIR; }

bool same_splitting_up_to_relabeling(const Kernel& iota_a, const Kernel& pi_a,
                                     const Kernel& iota_b, const Kernel& pi_b) {
  const std::size_t k = iota_a.cols();
  if (iota_b.cols() != k || pi_a.rows() != k || pi_b.rows() != k ||
      iota_a.rows() != iota_b.rows() || pi_a.cols() != pi_b.cols()) {
    return false;
  }
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t t = 0; t < k && ok; ++t) {
      ok = iota_a.column(perm[t]) == iota_b.column(t);
      for (std::size_t x = 0; x < pi_a.cols() && ok; ++x) {
        ok = pi_a(perm[t], x) == pi_b(t, x);
      }
    }
    if (ok) {
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<GoldenCheck> run_golden_suite(const std::string& dir) {
  Runner run(dir);
  splittable_example(run, "e_strong", {false, true, true});
  splittable_example(run, "e_static", {true, false, true});
  splittable_example(run, "e_balanced4", {false, false, true});
  unbalanced_example(run, "multi_e", 2);
  unbalanced_example(run, "multi_chain3", std::nullopt);
  unbalanced_example(run, "signed_e", std::nullopt);
  return run.take();
}

}  // namespace markov
