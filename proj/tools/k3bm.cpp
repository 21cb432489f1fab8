#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "k3bm/pipeline.hpp"

using namespace k3bm;

namespace {

json read_input(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  return read_json_file(path);
}

// A bare sextet, or any object carrying one under "sextet". Empty path: the
// bundled example.
QuadricSextet load_sextet(const std::string& path) {
  const json j = path.empty() ? read_json_file(example_fixture_path()) : read_input(path);
  return sextet_from_json(j.contains("sextet") ? j.at("sextet") : j);
}

std::vector<BigInt> load_primes(const std::string& path) {
  if (path.empty()) return {};
  if (path.ends_with(".json")) {
    const json j = read_json_file(path);
    const json& list = j.is_array() ? j : j.at("bad_primes");
    std::vector<BigInt> out;
    for (const auto& p : list) out.push_back(bigint_from_json(p));
    return out;
  }
  return read_prime_list(path);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw DomainError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void emit(const json& j, bool lines = false) { stream() << (lines ? j.dump() : j.dump(2)) << '\n'; }

 private:
  std::ofstream file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-2 K3 surfaces, their quaternion Brauer class, and Brauer-Manin certificates"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("-o,--output", out_path, "Write JSON here instead of stdout");

  std::string sextet_path, primes_path, counts_path, data_dir;
  std::uint64_t seed = 0x6b33626d;
  unsigned box = 1, depth = 6, threads = 1, samples = 25;
  std::string p_str = "3", pp_str = "11", strategy = "orbit";

  auto add_sextet = [&](CLI::App* c) {
    c->add_option("-s,--sextet", sextet_path, "Sextet JSON file, '-' for stdin (default: bundled example)");
  };

  auto* construct = app.add_subcommand("construct", "Branch sextic, hypothesis checks and representatives");
  add_sextet(construct);

  auto* invariants = app.add_subcommand("invariants", "Local invariant profile and verdict");
  add_sextet(invariants);
  invariants->add_option("--bad-primes", primes_path, "Bad primes: text file (one per line) or JSON list");
  invariants->add_option("--box", box, "Witness search box")->check(CLI::PositiveNumber);
  invariants->add_option("--seed", seed, "Sampling seed");
  invariants->add_option("--samples", samples, "Sampled points per place");

  auto* count = app.add_subcommand("count", "Point counts N_1..N_depth of w^2 = f over F_{p^n}");
  add_sextet(count);
  count->add_option("-p,--prime", p_str, "Odd prime");
  count->add_option("--depth", depth, "Largest n")->check(CLI::Range(1u, 20u));
  count->add_option("--strategy", strategy, "orbit or naive")->check(CLI::IsMember({"orbit", "naive"}));
  count->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* charpoly = app.add_subcommand("charpoly", "Frobenius characteristic polynomial from a count table");
  charpoly->add_option("-c,--counts", counts_path, "JSON {\"p\", \"N\": [...]} or an object with \"counts\"")
      ->required();

  auto* tritangent = app.add_subcommand("tritangent", "First tritangent line mod p");
  add_sextet(tritangent);
  tritangent->add_option("-p,--prime", p_str, "Odd prime");

  auto* picard = app.add_subcommand("picard", "Certify geometric Picard rank 1");
  add_sextet(picard);
  picard->add_option("-p,--prime", p_str, "Prime with a tritangent line");
  picard->add_option("--p-prime", pp_str, "Prime without tritangent lines");
  picard->add_option("-c,--counts", counts_path, "Count table at p (default: count to n = 10)");
  picard->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* badprimes = app.add_subcommand("badprimes", "Singularity reports for candidate primes");
  add_sextet(badprimes);
  badprimes->add_option("--primes", primes_path, "Candidate primes: text file or JSON list")->required();

  SearchConfig sc;
  bool replay_example = false;
  std::vector<unsigned> disabled;
  auto* search_cmd = app.add_subcommand("search", "Randomized search, one JSON report per line");
  search_cmd->add_option("--seed", sc.seed, "RNG seed");
  search_cmd->add_option("--draws", sc.draws, "Random draws");
  search_cmd->add_option("--min", sc.coeff_min, "Smallest coefficient");
  search_cmd->add_option("--max", sc.coeff_max, "Largest coefficient");
  search_cmd->add_option("--offdiag", sc.offdiag_bound, "Bound on off-diagonal coefficients");
  search_cmd->add_option("--box", sc.box, "Local point box")->check(CLI::PositiveNumber);
  search_cmd->add_option("--depth", sc.depth, "Counting depth at p = 3");
  search_cmd->add_option("--window", [&](const CLI::results_t& r) {
    sc.tritangent_lo = static_cast<unsigned>(std::stoul(r.at(0)));
    sc.tritangent_hi = static_cast<unsigned>(std::stoul(r.at(1)));
    return true;
  }, "Prime window for p'")->expected(2);
  search_cmd->add_option("--scan-bound", sc.bad_prime_scan, "Bad-prime scan bound for random draws");
  search_cmd->add_option("--disable-step", disabled, "Skip a filter step (1-7)")->check(CLI::Range(1u, 7u));
  search_cmd->add_flag("--replay-example", replay_example, "Examine the bundled example first");
  search_cmd->add_option("--threads", sc.threads, "Worker threads for counting")->check(CLI::PositiveNumber);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify-example", "Re-derive every certificate leg of the bundled example");
  verify->add_option("--data-dir", data_dir, "Fixture directory (default: bundled data)");
  verify->add_option("--depth", vo.depth, "Recompute N_1..N_depth; check the rest against fixtures");
  verify->add_flag("--full-count", vo.full_count, "Recompute all counts");
  verify->add_option("--threads", vo.threads, "Worker threads for counting")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    Output out(out_path);
    if (*construct) {
      const auto q = load_sextet(sextet_path);
      const auto X = build_k3(q);
      json reps = json::array();
      for (const auto& r : representatives(q))
        reps.push_back({{"tag", to_string(r.tag)}, {"left", to_json(r.left)}, {"right", to_json(r.right)}});
      out.emit({{"sextet", to_json(q)},
                {"branch_sextic", to_json(X.branch)},
                {"real_conditions", check_real_conditions(q)},
                {"two_adic_conditions", check_2adic_conditions(q)},
                {"smooth_over_q", is_smooth_curve(X.branch)},
                {"representatives", reps}});
    } else if (*invariants) {
      const auto X = build_k3(load_sextet(sextet_path));
      ProfileOptions opts;
      opts.box = box;
      opts.seed = seed;
      opts.samples = samples;
      const auto profile = invariant_profile(X, load_primes(primes_path), opts);
      json j = to_json(profile);
      j["verdict"] = to_string(bm_verdict(profile));
      out.emit(j);
    } else if (*count) {
      const auto X = build_k3(load_sextet(sextet_path));
      const BigInt p = parse_bigint(p_str);
      if (strategy == "naive") {
        CountSeries cs{p, depth, {}, {}};
        for (unsigned n = 1; n <= depth; ++n)
          cs.counts.push_back(count_points(X.branch, p, n, CountStrategy::naive, threads));
        out.emit(to_json(cs));
      } else {
        out.emit(to_json(count_series(X.branch, p, depth, threads)));
      }
    } else if (*charpoly) {
      const json j = read_input(counts_path);
      const auto cs = count_series_from_json(j.contains("counts") ? j.at("counts") : j);
      const auto fd = frobenius_charpoly(cs);
      json r = to_json(fd);
      r["unit_root_bound"] = unit_root_bound(fd);
      out.emit(r);
    } else if (*tritangent) {
      const auto X = build_k3(load_sextet(sextet_path));
      out.emit(to_json(find_tritangent(X.branch, parse_bigint(p_str))));
    } else if (*picard) {
      const auto X = build_k3(load_sextet(sextet_path));
      std::optional<CountSeries> cs;
      if (!counts_path.empty()) {
        const json j = read_input(counts_path);
        cs = count_series_from_json(j.contains("counts") ? j.at("counts") : j);
      }
      out.emit(to_json(certify_rank_one(X, parse_bigint(p_str), parse_bigint(pp_str), cs, threads)));
    } else if (*badprimes) {
      const auto X = build_k3(load_sextet(sextet_path));
      json reports = json::array();
      for (const auto& p : load_primes(primes_path)) {
        json entry = {{"p", to_decimal(p)}};
        const bool bad = is_bad_prime(X.branch, p);
        entry["bad"] = bad;
        if (bad && p != 2) entry["singular"] = to_json(singular_points(X.branch, p));
        reports.push_back(entry);
      }
      out.emit(reports);
    } else if (*search_cmd) {
      for (unsigned s : disabled) sc.steps[s] = false;
      if (replay_example) {
        const auto fx = load_example_fixture();
        sc.replay.push_back({fx.sextet, fx.bad_primes});
      }
      search(
          sc, [&](const ObstructionReport& r) { out.emit({{"report", to_json(r)}}, true); },
          [&](const Rejection& r) { out.emit({{"rejected", to_json(r)}}, true); });
    } else if (*verify) {
      const auto fx = load_example_fixture(data_dir.empty() ? example_fixture_path() : example_fixture_path(data_dir));
      out.emit(to_json(verify_example(fx, vo)));
    }
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure [" << e.leg() << "]: " << e.what() << '\n';
    return 1;
  } catch (const Inconclusive& e) {
    std::cerr << "inconclusive [" << e.leg() << "]: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
