// Command-line front end. Exit codes: 0 success, 2 usage, 3 resource budget,
// 4 internal invariant failure.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <string>

#include "cores/bfile.hpp"
#include "cores/diagram.hpp"
#include "cores/envelope.hpp"
#include "cores/errors.hpp"
#include "cores/families.hpp"
#include "cores/guess.hpp"
#include "cores/oracle.hpp"
#include "cores/profile_dp.hpp"

namespace {

using namespace cores;

constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

const char* kIndexNote = "offset 0: a(0) = 1 counts the empty lattice A_0; the e-lists start at n = 1";

struct Globals {
  std::string format = "plain";
  int threads = 1;
  std::uint64_t memory_budget = 0;
  double time_budget = 0;

  DpOptions dp() const { return {threads, memory_budget, time_budget}; }
};

int report(const std::string& kind, const std::string& message, const Globals& g, int code) {
  if (g.format == "json") {
    nlohmann::json j{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
    std::cerr << j.dump() << '\n';
  } else {
    std::cerr << "error (" << kind << "): " << message << '\n';
  }
  return code;
}

CountSequence oracle_sequence(const std::string& name, int max_n, const std::function<BigInt(int)>& term) {
  if (max_n < 0) throw DomainError("max_n must be >= 0");
  CountSequence seq{name, 0, {}};
  for (int n = 0; n <= max_n; ++n) seq.terms.push_back(term(n));
  return seq;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of simultaneous (s,t)-core partitions"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format: plain, json or bfile")
      ->envname("CORES_FORMAT")
      ->check(CLI::IsMember({"plain", "json", "bfile"}));
  app.add_option("--threads", g.threads, "Worker threads")->envname("CORES_THREADS")->check(CLI::Range(1, 256));
  app.add_option("--memory-budget", g.memory_budget, "Memo size limit in bytes (0 = none)")
      ->envname("CORES_MEMORY_BUDGET");
  app.add_option("--time-budget", g.time_budget, "Time limit in seconds (0 = none)")
      ->envname("CORES_TIME_BUDGET")
      ->check(CLI::NonNegativeNumber);

  OutputEnvelope env;
  std::function<void()> action;

  auto* anderson = app.add_subcommand("anderson", "Count (s,t)-cores by brute force");
  int s = 0, t = 0;
  anderson->add_option("--s", s)->required();
  anderson->add_option("--t", t)->required();
  anderson->callback([&] {
    action = [&] {
      const auto cores_list = enumerate_st_cores(s, t);
      const BigInt brute = cores_list.size();
      const BigInt closed = anderson_count(s, t);
      if (brute != closed) throw InternalError("brute force " + to_string(brute) + " != closed form " + to_string(closed));
      env.name = "anderson_" + std::to_string(s) + "_" + std::to_string(t);
      env.terms = {brute};
      env.method = "oracle";
      env.note = "agrees with (s+t-1)!/(s!t!)";
    };
  });

  int max_n = 0;
  std::string method;
  auto* straub = app.add_subcommand("straub", "Cores into odd parts, s_0..s_N");
  straub->add_option("--max-n", max_n)->required()->check(CLI::Range(0, 40));
  straub->add_option("--method", method, "dp or oracle")->default_val("dp")->check(CLI::IsMember({"dp", "oracle"}));
  straub->callback([&] {
    action = [&] {
      CountSequence seq = method == "dp"
                              ? straub_sequence(max_n, g.dp())
                              : oracle_sequence("straub", max_n, [](int n) {
                                  return count_filtered(n, CoreFilter::odd_parts());
                                });
      env = OutputEnvelope::from_sequence(seq, method, kIndexNote);
    };
  });

  auto* sister = app.add_subcommand("sister", "The sister sequence t_0..t_N");
  sister->add_option("--max-n", max_n)->required()->check(CLI::Range(0, 40));
  sister->add_option("--method", method, "dp, closed-form or oracle")
      ->default_val("dp")
      ->check(CLI::IsMember({"dp", "closed-form", "oracle"}));
  sister->callback([&] {
    action = [&] {
      CountSequence seq;
      if (method == "dp") {
        seq = sister_sequence(max_n, g.dp());
      } else if (method == "closed-form") {
        seq = sister_closed_form_sequence(max_n);
      } else {
        seq = oracle_sequence("sister", max_n,
                              [](int n) { return n == 0 ? BigInt(1) : count_alternation_class(n, (n + 1) % 2); });
      }
      env = OutputEnvelope::from_sequence(seq, method, kIndexNote);
    };
  });

  auto* family = app.add_subcommand("family", "Restricted families with rational generating functions");
  family->require_subcommand(1);
  int k = 1, count = 0;
  bool with_gf = false;
  auto add_family = [&](const char* name, const char* help, bool repeats) {
    auto* sub = family->add_subcommand(name, help);
    sub->add_option("--k", k)->required()->check(CLI::Range(1, 12));
    sub->add_option("--terms", count)->required()->check(CLI::Range(0, 100000));
    sub->add_flag("--gf", with_gf, "Also print the generating function");
    sub->callback([&, repeats] {
      action = [&, repeats] {
        // Without --gf the odd-diagonal terms come from path counting, which
        // avoids the rational solve for large k.
        const bool transfer = !repeats && !with_gf;
        const CountSequence seq = repeats    ? repeats_terms(k, count)
                                  : transfer ? odd_diag_terms_by_transfer(k, count)
                                             : odd_diag_terms(k, count);
        env = OutputEnvelope::from_sequence(seq, transfer ? "transfer" : "gf",
                                            repeats ? "parts repeated at most k times"
                                                    : "odd parts, ideal within the k outermost diagonals");
        if (with_gf) env.gf = repeats ? repeats_gf(k) : odd_diag_gf(k);
      };
    });
  };
  add_family("repeats", "(n+1,n+2)-cores with no part repeated more than k times", true);
  add_family("odd-diagonals", "Odd-part cores supported on the k outermost diagonals", false);

  auto* guess = app.add_subcommand("guess", "Guess an algebraic equation for a sequence's generating function");
  int degx = 0, degy = 1, margin = kDefaultGuessMargin;
  std::string terms_file, terms_csv;
  guess->add_option("--degx", degx)->required();
  guess->add_option("--degy", degy)->required();
  guess->add_option("--margin", margin)->default_val(kDefaultGuessMargin);
  auto* file_opt = guess->add_option("--terms-file", terms_file, "OEIS b-file");
  auto* csv_opt = guess->add_option("--terms", terms_csv, "Comma-separated terms");
  file_opt->excludes(csv_opt);
  guess->callback([&] {
    action = [&] {
      if (terms_file.empty() == terms_csv.empty()) throw DomainError("give exactly one of --terms-file or --terms");
      CountSequence seq = terms_file.empty() ? CountSequence{"terms", 0, parse_terms_csv(terms_csv)}
                                             : read_bfile_path(terms_file);
      env = OutputEnvelope::from_sequence(seq, "guess");
      env.name = "guess";
      env.equation = guess_algebraic({seq.terms, degx, degy, margin});
      env.note = env.equation ? "annihilates all " + std::to_string(seq.terms.size()) + " terms"
                              : "no equation within bounds (" + std::to_string(degx) + ", " +
                                    std::to_string(degy) + ") survives the held-back terms";
    };
  });

  auto* diagram = app.add_subcommand("diagram", "Write an SVG picture of A_n");
  int dn = 0, dc = 0;
  std::string ideal_labels, out_path;
  diagram->add_option("--n", dn)->required();
  diagram->add_option("--c", dc)->check(CLI::IsMember({0, 1}));
  diagram->add_option("--ideal", ideal_labels, "Comma-separated occupied labels");
  diagram->add_option("--out", out_path)->required();
  diagram->callback([&] {
    action = [&] {
      std::optional<OrderIdeal> ideal;
      if (!ideal_labels.empty()) {
        std::vector<long> labels;
        for (const auto& v : parse_terms_csv(ideal_labels)) {
          if (!v.fits_slong_p()) throw DomainError("label out of range");
          labels.push_back(v.get_si());
        }
        ideal = OrderIdeal::from_labels(dn, labels);
      }
      const std::string svg = render_diagram_svg(dn, dc, ideal ? &*ideal : nullptr);
      std::ofstream out(out_path);
      if (!out || !(out << svg)) throw DomainError("cannot write '" + out_path + "'");
      env.name = "diagram";
      env.method = "svg";
      env.note = "wrote " + out_path;
      if (ideal) env.terms = {BigInt(static_cast<unsigned long>(ideal->size()))};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    action();
    std::cout << render(env, parse_output_format(g.format));
    return 0;
  } catch (const ResourceError& e) {
    return report("resource", e.what(), g, kExitResource);
  } catch (const DomainError& e) {
    return report("usage", e.what(), g, kExitUsage);
  } catch (const ContractError& e) {
    return report("usage", e.what(), g, kExitUsage);
  } catch (const InternalError& e) {
    return report("internal", e.what(), g, kExitInternal);
  } catch (const std::exception& e) {
    return report("internal", e.what(), g, kExitInternal);
  }
}
