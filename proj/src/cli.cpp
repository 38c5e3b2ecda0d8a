#include "markov/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "markov/asrel.hpp"
#include "markov/envelopes.hpp"
#include "markov/error.hpp"
#include "markov/functors.hpp"
#include "markov/golden.hpp"
#include "markov/idempotents.hpp"
#include "markov/io.hpp"
#include "markov/supports.hpp"

namespace markov::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::uint64_t seed = 0;
  std::size_t max_size = 2;
  std::string format = "pretty";
  std::string fixtures = default_fixture_dir();
  std::size_t w_size = 1;
  std::size_t left_size = 1;
  std::string flavor = "blackwell";
  std::vector<std::string> files;
};

struct Outcome {
  Json report;
  int code = kOk;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotIdempotent:
    case ErrorCode::NotBalanced:
    case ErrorCode::NotAbsolutelyContinuous:
    case ErrorCode::NotASplitting:
    case ErrorCode::NotHom:
    case ErrorCode::NotAConditional:
    case ErrorCode::NotMember:
    case ErrorCode::NotAse:
    case ErrorCode::NotCommutative:
    case ErrorCode::FactorizationFailed:
    case ErrorCode::NotDeterministic:
    case ErrorCode::EmptySupport:
      return kPropertyFailed;
    default:
      return kInputError;
  }
}

Json kernel_json(const Kernel& k) { return Json::parse(emit_kernel(k)); }

Json witness_json(const std::optional<Witness>& w, const FinObject& x) {
  if (!w) {
    return nullptr;
  }
  Json out;
  out["x"] = x.label(w->x);
  out["y"] = x.label(w->y);
  if (w->z) {
    out["z"] = x.label(*w->z);
  }
  return out;
}

Json report_json(const IdempotentReport& r, const FinObject& x) {
  Json out;
  out["idempotent"] = r.idempotent;
  out["deterministic"] = r.deterministic;
  out["static"] = r.is_static;
  out["strong"] = r.strong;
  out["balanced"] = r.balanced;
  Json witnesses;
  witnesses["idempotent"] = witness_json(r.idempotent_witness, x);
  witnesses["static"] = witness_json(r.static_witness, x);
  witnesses["strong"] = witness_json(r.strong_witness, x);
  witnesses["balanced"] = witness_json(r.balanced_witness, x);
  out["witnesses"] = std::move(witnesses);
  return out;
}

Json split_json(const SplitData& s) {
  Json out;
  out["T"] = s.t.labels();
  out["pi"] = kernel_json(s.pi);
  out["iota"] = kernel_json(s.iota);
  out["classes"] = s.classes;
  out["transient"] = s.transient;
  return out;
}

Json support_json(const SupportData& sd) {
  Json out;
  out["support"] = sd.supp_object.labels();
  out["inclusion"] = kernel_json(sd.inclusion);
  out["factorization"] = kernel_json(sd.factorization);
  if (sd.projection) {
    out["projection"] = kernel_json(*sd.projection);
  }
  return out;
}

class Session {
 public:
  Session(const Options& opts, std::istream& in) : opts_(opts), in_(in) {}

  Kernel kernel(std::size_t i) const { return parse_kernel(read_text(opts_.files.at(i), in_)); }

  Outcome validate() const {
    const Kernel k = parse_kernel_unchecked(read_text(opts_.files.at(0), in_));
    const ValidationReport v = markov::validate(k);
    Json out;
    out["ok"] = v.ok;
    out["column"] = v.column ? Json(k.dom().label(*v.column)) : Json(nullptr);
    out["message"] = v.message;
    return {out, v.ok ? kOk : kPropertyFailed};
  }

  Outcome classify_cmd() const {
    const Kernel e = kernel(0);
    const IdempotentReport r = classify(e);
    return {report_json(r, e.dom()), r.idempotent ? kOk : kPropertyFailed};
  }

  Outcome split() const {
    const Kernel e = kernel(0);
    if (e.kind() == Kind::Stoch) {
      return {split_json(blackwell_split(e)), kOk};
    }
    const auto found = search_split(e, opts_.max_size);
    if (!found) {
      Json out;
      out["split"] = false;
      out["no_split_up_to"] = opts_.max_size;
      return {out, kPropertyFailed};
    }
    Json out = split_json(*found);
    out["split"] = true;
    return {out, kOk};
  }

  Outcome support_cmd(bool with_projection) const {
    const Kernel p = kernel(0);
    return {support_json(with_projection ? split_support(p) : support(p)), kOk};
  }

  Outcome abscont() const {
    const Kernel q = kernel(0);
    const Kernel p = kernel(1);
    Json out;
    const auto w = refute_abs_cont(q, p);
    out["abs_cont"] = !w;
    if (w) {
      Json witness;
      witness["element"] = w->element;
      witness["f"] = kernel_json(w->f);
      witness["g"] = kernel_json(w->g);
      out["witness"] = std::move(witness);
    }
    return {out, w ? kPropertyFailed : kOk};
  }

  Outcome ase_cmd() const {
    const AseQuery q{kernel(0), kernel(1), kernel(2), opts_.w_size};
    const bool shortcut = ase(q);
    const bool joint = ase_joint_diagram(q);
    if (shortcut != joint) {
      fail(ErrorCode::StructureViolation, "support and joint-diagram readings disagree");
    }
    Json out;
    out["ase"] = shortcut;
    return {out, shortcut ? kOk : kPropertyFailed};
  }

  Outcome upsilon_cmd() const { return {kernel_json(upsilon(kernel(0))), kOk}; }

  Outcome conditional_cmd() const {
    const Kernel f = kernel(0);
    const Kernel c = conditional(f, opts_.left_size);
    Json out;
    out["conditional"] = kernel_json(c);
    out["reconstructs"] = verify_conditional_eq(f, c, opts_.left_size);
    return {out, kOk};
  }

  Outcome envelope_check() const {
    const Kernel e = kernel(0);
    Flavor flavor = Flavor::Blackwell;
    if (opts_.flavor == "karoubi") {
      flavor = Flavor::Karoubi;
    } else if (opts_.flavor != "blackwell") {
      fail(ErrorCode::InvalidArgument, "flavor must be karoubi or blackwell");
    }
    const EnvelopeCell cell = env_cell(e.dom(), e, flavor);
    const LawReport r = env_check_markov_laws(cell, opts_.seed);
    Json out;
    out["flavor"] = std::string(to_string(flavor));
    out["counit_left"] = r.counit_left;
    out["counit_right"] = r.counit_right;
    out["coassociative"] = r.coassociative;
    out["cocommutative"] = r.cocommutative;
    out["discard_natural"] = r.discard_natural;
    return {out, r.all() ? kOk : kPropertyFailed};
  }

  Outcome cauchy_schwarz_cmd() const {
    const ImplicationReport r = cauchy_schwarz(kernel(0), kernel(1), kernel(2));
    Json out;
    out["antecedent"] = r.antecedent;
    out["consequent"] = r.consequent;
    out["implication_ok"] = r.implication_ok;
    return {out, r.implication_ok ? kOk : kPropertyFailed};
  }

  Outcome verify_paper() const {
    const auto checks = run_golden_suite(opts_.fixtures);
    Json list = Json::array();
    bool all = true;
    for (const auto& c : checks) {
      Json row;
      row["group"] = c.group;
      row["name"] = c.name;
      row["passed"] = c.passed;
      row["detail"] = c.detail;
      list.push_back(std::move(row));
      all = all && c.passed;
    }
    Json out;
    out["passed"] = all;
    out["checks"] = std::move(list);
    return {out, all ? kOk : kPropertyFailed};
  }

 private:
  const Options& opts_;
  std::istream& in_;
};

void print_table(const Json& report, std::ostream& out) {
  for (const auto& row : report["checks"]) {
    out << (row["passed"].get<bool>() ? "PASS  " : "FAIL  ") << std::left << std::setw(24)
        << row["group"].get<std::string>() << std::setw(44) << row["name"].get<std::string>()
        << row["detail"].get<std::string>() << '\n';
  }
  out << (report["passed"].get<bool>() ? "all checks passed" : "some checks FAILED") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite Markov-category kernels: classification, supports, envelopes",
               "markovkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--seed", opts.seed, "Seed for randomized checks");
  app.add_option("--max-size", opts.max_size, "Largest splitting object searched");
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "pretty"}));
  app.add_option("--fixtures", opts.fixtures, "Directory of example kernels");

  using Handler = std::function<Outcome(const Session&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, std::size_t nfiles, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (nfiles > 0) {
      sub->add_option("files", opts.files, "Kernel documents (\"-\" for stdin)")
          ->expected(static_cast<int>(nfiles))
          ->required();
    }
    commands.emplace_back(sub, std::move(h));
    return sub;
  };
  add("validate", "Check the column law of a kernel", 1, &Session::validate);
  add("classify", "Classify an idempotent", 1, &Session::classify_cmd);
  add("split", "Split an idempotent", 1, &Session::split);
  add("support", "Support of a kernel", 1,
      [](const Session& s) { return s.support_cmd(false); });
  add("split-support", "Support with projection", 1,
      [](const Session& s) { return s.support_cmd(true); });
  add("abscont", "Decide Q >> P", 2, &Session::abscont);
  add("ase", "Decide F =_P G", 3, &Session::ase_cmd)
      ->add_option("--w-size", opts.w_size, "Size of the parameter wire");
  add("upsilon", "Input-output relation of a stochastic kernel", 1, &Session::upsilon_cmd);
  add("conditional", "Conditional of a joint kernel", 1, &Session::conditional_cmd)
      ->add_option("--left-size", opts.left_size, "Size of the conditioning factor");
  add("envelope-check", "Markov laws of an envelope cell", 1, &Session::envelope_check)
      ->add_option("--flavor", opts.flavor, "karoubi or blackwell")
      ->check(CLI::IsMember({"karoubi", "blackwell"}));
  add("cauchy-schwarz", "Cauchy-Schwarz implication for F, G, H", 3,
      &Session::cauchy_schwarz_cmd);
  add("verify-paper", "Run the worked-example suite", 0, &Session::verify_paper);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << '\n';
    return kInputError;
  }

  const Session session(opts, in);
  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) {
      continue;
    }
    try {
      const Outcome result = handler(session);
      if (opts.format == "json") {
        out << result.report.dump() << '\n';
      } else if (sub->get_name() == "verify-paper") {
        print_table(result.report, out);
      } else {
        out << result.report.dump(2) << '\n';
      }
      return result.code;
    } catch (const Error& e) {
      err << e.what() << '\n';
      return exit_code_for(e.code());
    } catch (const std::exception& e) {
      err << e.what() << '\n';
      return kInputError;
    }
  }
  return kInputError;
}

}  // namespace markov::cli
