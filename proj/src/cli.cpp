#include "hurwitz/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include <CLI11.hpp>

#include "hurwitz/geometric.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/parallel.hpp"
#include "hurwitz/tau.hpp"

namespace hurwitz::cli {
namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size() || value < 0)
      throw UsageError("malformed degree list \"" + text + "\"");
    out.push_back(value);
    if (comma == std::string::npos) return out;
    pos = comma + 1;
  }
}

const std::vector<std::string> kPipelines = {"geometric", "combinatorial", "tau"};

}  // namespace

Multidegree parse_degrees(const std::string& text, const std::vector<Species>& species) {
  auto semicolon = text.find(';');
  if (semicolon == std::string::npos) {
    auto values = parse_int_list(text);
    if (values.size() != species.size())
      throw UsageError("degrees \"" + text + "\" need " + std::to_string(species.size()) + " entries");
    return values;
  }
  auto e_values = parse_int_list(text.substr(0, semicolon));
  auto h_values = parse_int_list(text.substr(semicolon + 1));
  std::size_t e_count = std::count_if(species.begin(), species.end(), [](const Species& s) { return is_e_class(s.family); });
  if (e_values.size() != e_count || h_values.size() != species.size() - e_count)
    throw UsageError("degrees \"" + text + "\" do not match " + std::to_string(e_count) + " E-class and " +
                     std::to_string(species.size() - e_count) + " H-class species");
  Multidegree out;
  std::size_t e_next = 0, h_next = 0;
  for (const auto& s : species) out.push_back(is_e_class(s.family) ? e_values[e_next++] : h_values[h_next++]);
  return out;
}

CommandRequest parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"Exact weighted Hurwitz numbers", "hurwitz"};
  app.require_subcommand(1);

  CommandRequest req;
  std::string mu_text, nu_text, degrees_text, maxdeg_text;
  std::vector<std::string> species_text;

  auto add_pipeline_options = [&](CLI::App* sub) {
    sub->add_option("pipeline", req.target, "geometric | combinatorial | tau")
        ->required()
        ->check(CLI::IsMember(kPipelines));
    sub->add_option("--n", req.n, "symmetric group degree")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--species", species_text, "e.g. E:q=1/2, E':q=1/3, H:p=1/5, or E:q for formal q");
    sub->add_option("--degrees", degrees_text, "exact multidegree \"c1,..;d1,..\"");
    sub->add_option("--maxdeg", maxdeg_text, "degree bound \"c1,..;d1,..\"");
    sub->add_option("--N", req.N, "content shift (tau only)");
    sub->add_option("--format", req.format)->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--K", req.order, "series truncation order")->check(CLI::NonNegativeNumber);
    sub->add_option("--route", [&](const CLI::results_t& r) {
         req.route = r.front() == "paths" ? TransferRoute::Paths : TransferRoute::Spectral;
         return true;
       }, "combinatorial transfer matrices: spectral | paths")
        ->check(CLI::IsMember({"spectral", "paths"}));
  };

  auto* compute = app.add_subcommand("compute", "weighted Hurwitz numbers from one pipeline");
  add_pipeline_options(compute);
  compute->add_option("--mu", mu_text);
  compute->add_option("--nu", nu_text);

  auto* table = app.add_subcommand("table", "full coefficient table from one pipeline");
  add_pipeline_options(table);

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->add_option("suite", req.target, "triangle | frobenius | characters")
      ->required()
      ->check(CLI::IsMember({"triangle", "frobenius", "characters"}));
  verify->add_option("--n-min", req.n_min)->check(CLI::NonNegativeNumber);
  verify->add_option("--n-max", req.n_max)->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--deg-max", req.deg_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--k-max", req.k_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--species", species_text);
  verify->add_option("--K", req.order)->check(CLI::NonNegativeNumber);

  auto* oracle = app.add_subcommand("oracle", "brute-force oracles");
  oracle->add_option("name", req.target, "paths")->required()->check(CLI::IsMember({"paths"}));
  oracle->add_option("--n", req.n)->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--d", req.path_length)->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--mu", mu_text)->required();
  oracle->add_option("--nu", nu_text)->required();

  auto* chartable = app.add_subcommand("chartable", "character table of S_n");
  chartable->add_option("--n", req.n)->required()->check(CLI::NonNegativeNumber);
  chartable->add_option("--format", req.format)->check(CLI::IsMember({"json", "csv"}));

  for (auto* sub : {compute, table, verify, oracle, chartable})
    sub->add_option("--threads", req.threads, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw UsageError(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  req.command = app.get_subcommands().front()->get_name();

  try {
    if (!mu_text.empty() || compute->count("--mu") || oracle->count("--mu")) req.mu = Partition::parse(mu_text);
    if (!nu_text.empty() || compute->count("--nu") || oracle->count("--nu")) req.nu = Partition::parse(nu_text);
    for (const auto& s : species_text) req.config.species.push_back(parse_species(s, req.order));
    req.config.n = req.command == "verify" ? 0 : req.n;
    req.config.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }

  if (req.command == "compute" || req.command == "table") {
    if (req.mu.has_value() != req.nu.has_value()) throw UsageError("--mu and --nu must be given together");
    if (req.mu && (req.mu->weight() != req.n || req.nu->weight() != req.n))
      throw UsageError("weight mismatch: |mu| = " + std::to_string(req.mu->weight()) + ", |nu| = " +
                       std::to_string(req.nu->weight()) + ", n = " + std::to_string(req.n));
    if (req.config.species.empty()) throw UsageError("at least one --species is required");
    if (degrees_text.empty() == maxdeg_text.empty()) throw UsageError("exactly one of --degrees, --maxdeg is required");
    if (!degrees_text.empty()) req.degrees = parse_degrees(degrees_text, req.config.species);
    if (!maxdeg_text.empty()) req.max_degree = parse_degrees(maxdeg_text, req.config.species);
    if (req.N != 0 && req.target != "tau") throw UsageError("--N is only meaningful for the tau pipeline");
  }
  if (req.command == "oracle" && (req.mu->weight() != req.n || req.nu->weight() != req.n))
    throw UsageError("weight mismatch: |mu|, |nu| must equal n");
  if (req.command == "verify" && req.target == "triangle" && req.config.species.empty())
    throw UsageError("verify triangle needs at least one --species");
  return req;
}

namespace {

int run_pipeline(const CommandRequest& req, std::ostream& out) {
  WeightConfig config = req.config;
  config.n = req.n;
  const Multidegree bound = req.degrees ? *req.degrees : *req.max_degree;

  io::TableFilter filter{req.degrees, req.mu, req.nu};
  // A single entry with an exact multidegree is emitted as one record.
  if (req.command == "compute" && req.degrees && req.mu) {
    Scalar value;
    if (req.target == "geometric") {
      value = multispecies_hurwitz(config, *req.degrees, *req.mu, *req.nu);
    } else if (req.target == "combinatorial") {
      value = multispecies_transfer(config, *req.degrees, req.route).hurwitz_normalized().at(*req.mu, *req.nu);
    } else {
      value = tau_coefficients(config, req.N, bound).at(*req.degrees, *req.mu, *req.nu);
    }
    if (req.format == "csv") {
      HurwitzTable single(config, bound);
      single.at(*req.degrees, canonical_index(*req.mu), canonical_index(*req.nu)) = value;
      out << io::table_csv(single, filter);
    } else {
      out << io::record(config.n, *req.mu, *req.nu, *req.degrees, value).dump(2) << '\n';
    }
    return kOk;
  }

  HurwitzTable table = req.target == "geometric"       ? geometric_table(config, bound)
                       : req.target == "combinatorial" ? combinatorial_table(config, bound, req.route)
                                                       : tau_coefficients(config, req.N, bound);
  if (req.format == "csv")
    out << io::table_csv(table, filter);
  else
    out << io::table_json(table, filter).dump(2) << '\n';
  return kOk;
}

int run_verify(const CommandRequest& req, std::ostream& out) {
  io::Json doc;
  doc["suite"] = req.target;
  bool ok = true;
  io::Json runs = io::Json::array();

  if (req.target == "triangle") {
    for (int n = req.n_min; n <= req.n_max; ++n) {
      WeightConfig config = req.config;
      config.n = n;
      auto report = verify_triangle(config, Multidegree(config.slots(), req.deg_max));
      ok = ok && report.ok();
      runs.push_back(io::triangle_json(report));
    }
  } else if (req.target == "frobenius") {
    // n! * frobenius_hurwitz against brute-force tuple counts.
    for (int n = req.n_min; n <= req.n_max; ++n) {
      std::size_t checked = 0;
      io::Json failures = io::Json::array();
      const auto classes = enumerate_partitions(n);
      for (int k = 0; k <= req.k_max; ++k)
        for (int total = k; total <= std::max(req.deg_max, k); ++total) {
          if (k == 0 && total > 0) break;
          for (const auto& tuple : profile_tuples(n, total)) {
            if (static_cast<int>(tuple.size()) != k) continue;
            for (const auto& mu : classes)
              for (const auto& nu : classes) {
                BranchConfiguration config{n, tuple, mu, nu};
                Rational scaled = frobenius_hurwitz(config) * Rational(factorial(n));
                auto count = enumerate_factorizations(config);
                ++checked;
                if (scaled != Rational(Integer(static_cast<unsigned long>(count)))) {
                  io::Json f;
                  f["mu"] = mu.to_string();
                  f["nu"] = nu.to_string();
                  io::Json profiles = io::Json::array();
                  for (const auto& p : tuple) profiles.push_back(p.to_string());
                  f["profiles"] = profiles;
                  f["character_sum"] = format_rational(scaled);
                  f["count"] = count;
                  failures.push_back(f);
                }
              }
          }
        }
      ok = ok && failures.empty();
      runs.push_back({{"n", n}, {"configurations_checked", checked}, {"failures", failures}});
    }
  } else {
    for (int n = req.n_min; n <= req.n_max; ++n) {
      const auto& table = character_table(n);
      const std::size_t size = table.size();
      bool rows = true, columns = true;
      Integer dims = 0;
      for (std::size_t a = 0; a < size; ++a) {
        dims += Integer(table(a, size - 1)) * table(a, size - 1);
        for (std::size_t b = 0; b < size; ++b) {
          Rational row_sum = 0;
          Integer column_sum = 0;
          for (std::size_t c = 0; c < size; ++c) {
            row_sum += ratio(Integer(table(a, c) * table(b, c)), table.z(c));
            column_sum += Integer(table(c, a) * table(c, b));
          }
          rows = rows && row_sum == (a == b ? 1 : 0);
          columns = columns && column_sum == (a == b ? table.z(a) : Integer(0));
        }
      }
      bool dims_ok = dims == factorial(n);
      ok = ok && rows && columns && dims_ok;
      runs.push_back({{"n", n}, {"row_orthogonality", rows}, {"column_orthogonality", columns}, {"sum_dim_squared", dims_ok}});
    }
  }
  doc["ok"] = ok;
  doc["runs"] = runs;
  out << doc.dump(2) << '\n';
  return ok ? kOk : kDiscrepancy;
}

}  // namespace

int run(const CommandRequest& req, std::ostream& out) {
  set_thread_count(req.threads);
  if (req.command == "compute" || req.command == "table") return run_pipeline(req, out);
  if (req.command == "verify") return run_verify(req, out);
  if (req.command == "oracle") {
    auto counts = path_counts(req.n, req.path_length, *req.mu, *req.nu);
    out << io::path_counts_json(req.n, req.path_length, *req.mu, *req.nu, counts).dump(2) << '\n';
    return kOk;
  }
  const auto& table = character_table(req.n);
  if (req.format == "csv")
    out << io::chartable_csv(table);
  else
    out << io::chartable_json(table).dump(2) << '\n';
  return kOk;
}

int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  try {
    return run(parse_args(argv), out);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ModeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kComputation;
  } catch (const PoleError& e) {
    err << "pole error: " << e.what() << '\n';
    return kComputation;
  }
}

}  // namespace hurwitz::cli
