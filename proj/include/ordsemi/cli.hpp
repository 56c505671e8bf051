// Command-line front end: counting, tabulation, enumeration, generating
// sets, factorization, maximal subsemigroups, and the named verification
// battery, with machine-readable output.
//
// Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage
// error, 3 resource budget exceeded.

#pragma once

#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ordsemi/closure.hpp"
#include "ordsemi/counting.hpp"
#include "ordsemi/enumerate.hpp"
#include "ordsemi/generators.hpp"
#include "ordsemi/maximal.hpp"
#include "ordsemi/transform.hpp"
#include "ordsemi/verify.hpp"

namespace ordsemi {

using Json = nlohmann::ordered_json;

namespace cli_detail {

enum class Format { json, csv, lines, pretty };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "lines") return Format::lines;
  if (s == "pretty") return Format::pretty;
  throw CLI::ValidationError("--format", "expected json|csv|lines|pretty");
}

inline std::string big(const BigInt& v) { return v.str(); }

inline Json to_json(const VerificationRun& run) {
  Json j;
  j["check_id"] = run.check_id;
  j["n"] = run.n;
  j["r"] = run.r ? Json(*run.r) : Json(nullptr);
  j["status"] = run.pass ? "pass" : "fail";
  Json details = Json::array();
  for (const auto& d : run.details) {
    details.push_back(Json{{"what", d.what}, {"expected", d.expected}, {"actual", d.actual}});
  }
  j["details"] = details;
  j["elapsed_ms"] = run.elapsed_ms;
  return j;
}

inline void print_run(std::ostream& out, const VerificationRun& run, Format format) {
  switch (format) {
    case Format::json:
      out << to_json(run).dump() << "\n";
      break;
    case Format::csv:
      out << run.check_id << "," << run.n << ","
          << (run.r ? std::to_string(*run.r) : "") << ","
          << (run.pass ? "pass" : "fail") << "," << run.elapsed_ms << "\n";
      break;
    case Format::lines:
    case Format::pretty: {
      out << (run.pass ? "pass" : "FAIL") << " " << run.check_id << " n=" << run.n;
      if (run.r) out << " r=" << *run.r;
      out << " (" << run.elapsed_ms << " ms)\n";
      for (const auto& d : run.details) {
        out << "  mismatch: " << d.what << " expected " << d.expected << " got " << d.actual
            << "\n";
      }
      break;
    }
  }
}

struct CountRequest {
  int n = 0;
  std::optional<int> r;
  std::optional<int> m;
  std::string family = "ord";
  bool enumerate = false;
};

inline void require(bool ok, const std::string& message) {
  if (!ok) throw CLI::ValidationError("count", message);
}

inline CountReport build_count_report(const CountRequest& req, const Budgets& budgets) {
  CountReport report;
  report.n = req.n;
  report.r = req.r;
  report.m = req.m;
  report.family = req.family;
  FamilySelector sel;
  sel.n = req.n;
  if (req.family == "ord") {
    require(req.r.has_value(), "family ord requires --r");
    report.closed_form = count_oriented(req.n, *req.r);
    sel.family = Family::oriented;
    sel.rank_max = req.r;
  } else if (req.family == "ord-full") {
    report.closed_form = count_oriented_all(req.n);
    sel.family = Family::oriented;
  } else if (req.family == "opd") {
    require(req.r.has_value(), "family opd requires --r");
    report.closed_form = count_orientation_preserving(req.n, *req.r);
    sel.family = Family::orientation_preserving;
    sel.rank_max = req.r;
  } else if (req.family == "rdstar") {
    report.closed_form = count_reversing(req.n);
    sel.family = Family::reversing;
  } else if (req.family == "rdstar-slice") {
    require(req.m.has_value(), "family rdstar-slice requires --m");
    report.closed_form = count_reversing_by_degree(req.n, *req.m);
    sel.family = Family::reversing;
    sel.degree = req.m;
  } else if (req.family == "j") {
    require(req.r.has_value(), "family j requires --r");
    report.closed_form = count_reversing_rank(req.n, *req.r);
    sel.family = Family::reversing;
    sel.rank_exact = req.r;
  } else if (req.family == "j-slice") {
    require(req.r.has_value() && req.m.has_value(), "family j-slice requires --r and --m");
    report.closed_form = count_reversing_rank_by_degree(req.n, *req.r, *req.m);
    sel.family = Family::reversing;
    sel.rank_exact = req.r;
    sel.degree = req.m;
  } else if (req.family == "nilpotent") {
    require(req.r.has_value(), "family nilpotent requires --r");
    report.closed_form = count_nilpotent_oriented(req.n, *req.r);
    sel.family = Family::oriented;
    sel.rank_max = req.r;
    sel.nilpotents_only = true;
  } else {
    throw CLI::ValidationError(
        "--family", "expected ord|ord-full|opd|rdstar|rdstar-slice|j|j-slice|nilpotent");
  }
  if (req.enumerate) {
    detail::require_budget(req.n, budgets.enumeration, "enumeration");
    report.set_enumerated(BigInt(count_by_enumeration(sel)));
  }
  return report;
}

inline Json to_json(const CountReport& report) {
  Json j;
  j["n"] = report.n;
  j["r"] = report.r ? Json(*report.r) : Json(nullptr);
  j["m"] = report.m ? Json(*report.m) : Json(nullptr);
  j["family"] = report.family;
  j["closed_form"] = big(report.closed_form);
  j["enumerated"] = report.enumerated ? Json(big(*report.enumerated)) : Json(nullptr);
  j["match"] = report.match ? Json(*report.match) : Json(nullptr);
  return j;
}

inline Json to_json(const MaximalDescriptor& d) {
  Json j;
  j["kind"] = kind_name(d.kind);
  j["n"] = d.n;
  j["r"] = d.r;
  j["alpha"] = d.alpha ? Json(format_transformation(*d.alpha)) : Json(nullptr);
  j["m"] = d.m ? Json(*d.m) : Json(nullptr);
  j["lifted"] = d.full_semigroup && d.kind != MaximalDescriptor::Kind::drop_identity;
  return j;
}

}  // namespace cli_detail

/// Runs one CLI invocation; args excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using cli_detail::Format;

  CLI::App app{"exact toolkit for oriented order-decreasing transformation monoids"};
  app.require_subcommand(1);

  std::string format_name = "json";
  int budget_override = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "output format: json|csv|lines|pretty");
    cmd->add_option("--budget", budget_override,
                    "raise every chain-size budget to this value (use with care)");
    cmd->add_option("--seed", seed, "seed for randomized spot-checks");
    cmd->add_option("--threads", threads, "worker threads for independent verify cells")
        ->check(CLI::Range(1, 256));
  };

  // count
  cli_detail::CountRequest count_req;
  auto* count_cmd = app.add_subcommand("count", "closed-form count, optionally cross-checked");
  count_cmd->add_option("--n", count_req.n, "chain size")->required();
  count_cmd->add_option("--r", count_req.r, "image-size bound or exact rank");
  count_cmd->add_option("--m", count_req.m, "degree for slice families");
  count_cmd->add_option("--family", count_req.family,
                        "ord|ord-full|opd|rdstar|rdstar-slice|j|j-slice|nilpotent");
  count_cmd->add_flag("--enumerate", count_req.enumerate, "cross-check by brute force");
  add_common(count_cmd);

  // table
  int table_max_n = 0;
  bool table_enumerate = false;
  auto* table_cmd = app.add_subcommand("table", "per-(n,r) summary table");
  table_cmd->add_option("--max-n", table_max_n, "largest chain size (4..12)")->required();
  table_cmd->add_flag("--enumerate", table_enumerate, "add brute-force oracle columns");
  add_common(table_cmd);

  // enumerate
  FamilySelector enum_sel;
  std::string enum_family = "oriented";
  bool enum_count_only = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "list a family in canonical order");
  enum_cmd->add_option("--n", enum_sel.n, "chain size")->required();
  enum_cmd->add_option("--family", enum_family,
                       "decreasing|order-preserving|orientation-preserving|oriented|reversing");
  enum_cmd->add_option("--rank-max", enum_sel.rank_max, "bound |image| from above");
  enum_cmd->add_option("--rank", enum_sel.rank_exact, "require |image| exactly");
  enum_cmd->add_option("--degree", enum_sel.degree, "require the family degree");
  enum_cmd->add_flag("--idempotent", enum_sel.idempotents_only, "idempotents only");
  enum_cmd->add_flag("--nilpotent", enum_sel.nilpotents_only, "nilpotents only");
  enum_cmd->add_flag("--count", enum_count_only, "print the count instead of the elements");
  add_common(enum_cmd);

  // generators
  int gen_n = 0, gen_r = 0;
  auto* gen_cmd = app.add_subcommand("generators", "minimal generating set of ORD(n,r)");
  gen_cmd->add_option("--n", gen_n, "chain size")->required();
  gen_cmd->add_option("--r", gen_r, "rank bound")->required();
  add_common(gen_cmd);

  // factor
  int factor_n = 0, factor_r = 0;
  std::string factor_alpha;
  auto* factor_cmd = app.add_subcommand("factor", "factorize a reversing map over the generators");
  factor_cmd->add_option("--n", factor_n, "chain size")->required();
  factor_cmd->add_option("--r", factor_r, "rank bound")->required();
  factor_cmd->add_option("--alpha", factor_alpha, "target map, line format")->required();
  add_common(factor_cmd);

  // maximal
  int max_n_param = 0;
  std::optional<int> max_r_param;
  bool max_verify = false, max_full = false;
  auto* max_cmd = app.add_subcommand("maximal", "maximal subsemigroup descriptors");
  max_cmd->add_option("--n", max_n_param, "chain size")->required();
  max_cmd->add_option("--r", max_r_param, "rank bound (omit with --full-semigroup)");
  max_cmd->add_flag("--verify", max_verify, "run the closure battery per descriptor");
  max_cmd->add_flag("--full-semigroup", max_full, "classify the full monoid ORD_n");
  add_common(max_cmd);

  // verify
  std::string verify_check;
  std::optional<int> verify_n, verify_r, verify_max_n;
  auto* verify_cmd = app.add_subcommand("verify", "run a named verification check");
  verify_cmd->add_option("--check", verify_check, "check id or 'all'")->required();
  verify_cmd->add_option("--n", verify_n, "chain size");
  verify_cmd->add_option("--r", verify_r, "rank bound (default: all valid)");
  verify_cmd->add_option("--max-n", verify_max_n, "run for all chain sizes 4..max-n");
  add_common(verify_cmd);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Format format = cli_detail::parse_format(format_name);
    Budgets budgets;
    if (budget_override > 0) {
      if (budget_override > 6) {
        err << "warning: raising chain-size budgets to n = " << budget_override
            << "; closure and maximality batteries grow steeply\n";
      }
      budgets.raise_to(budget_override);
    }

    if (count_cmd->parsed()) {
      const CountReport report = cli_detail::build_count_report(count_req, budgets);
      switch (format) {
        case Format::json:
          out << cli_detail::to_json(report).dump() << "\n";
          break;
        case Format::csv:
          out << "n,r,m,family,closed_form,enumerated,match\n"
              << report.n << "," << (report.r ? std::to_string(*report.r) : "") << ","
              << (report.m ? std::to_string(*report.m) : "") << "," << report.family << ","
              << cli_detail::big(report.closed_form) << ","
              << (report.enumerated ? cli_detail::big(*report.enumerated) : "") << ","
              << (report.match ? (*report.match ? "true" : "false") : "") << "\n";
          break;
        case Format::lines:
          out << cli_detail::big(report.closed_form) << "\n";
          break;
        case Format::pretty:
          out << report.family << " n=" << report.n;
          if (report.r) out << " r=" << *report.r;
          if (report.m) out << " m=" << *report.m;
          out << ": closed form " << cli_detail::big(report.closed_form);
          if (report.enumerated) {
            out << ", enumerated " << cli_detail::big(*report.enumerated) << ", "
                << (*report.match ? "match" : "MISMATCH");
          }
          out << "\n";
          break;
      }
      return report.match && !*report.match ? 1 : 0;
    }

    if (table_cmd->parsed()) {
      if (table_max_n < 4) throw CLI::ValidationError("--max-n", "need max-n >= 4");
      if (table_max_n > 12) {
        throw resource_error("table: max-n beyond the n = 12 budget");
      }
      bool any_mismatch = false;
      struct Row {
        int n, r;
        BigInt card, rank_value, maximal;
        std::optional<BigInt> nilpotent, card_enum, nilpotent_enum;
      };
      std::vector<Row> rows;
      for (int n = 4; n <= table_max_n; ++n) {
        for (int r = 3; r <= n - 1; ++r) {
          Row row{n, r, count_oriented(n, r), rank_oriented(n, r), rank_oriented(n, r), {}, {}, {}};
          if (n >= 5) row.nilpotent = count_nilpotent_oriented(n, r);
          if (table_enumerate && n <= budgets.enumeration) {
            row.card_enum = BigInt(detail::count_family(n, Family::oriented, r));
            if (n >= 5) {
              row.nilpotent_enum =
                  BigInt(detail::count_family(n, Family::oriented, r, {}, {}, true));
            }
            if (*row.card_enum != row.card
                || (row.nilpotent && *row.nilpotent_enum != *row.nilpotent)) {
              any_mismatch = true;
            }
          }
          rows.push_back(std::move(row));
        }
      }
      auto opt_big = [](const std::optional<BigInt>& v) {
        return v ? cli_detail::big(*v) : std::string();
      };
      if (format == Format::json) {
        for (const auto& row : rows) {
          Json j;
          j["n"] = row.n;
          j["r"] = row.r;
          j["card"] = cli_detail::big(row.card);
          j["nilpotent"] = row.nilpotent ? Json(cli_detail::big(*row.nilpotent)) : Json(nullptr);
          j["rank"] = cli_detail::big(row.rank_value);
          j["maximal"] = cli_detail::big(row.maximal);
          if (table_enumerate) {
            j["card_enum"] = row.card_enum ? Json(cli_detail::big(*row.card_enum)) : Json(nullptr);
            j["nilpotent_enum"] =
                row.nilpotent_enum ? Json(cli_detail::big(*row.nilpotent_enum)) : Json(nullptr);
          }
          out << j.dump() << "\n";
        }
      } else {
        if (format != Format::lines) {
          out << "n,r,card,nilpotent,rank,maximal";
          if (table_enumerate) out << ",card_enum,nilpotent_enum";
          out << "\n";
        }
        for (const auto& row : rows) {
          out << row.n << "," << row.r << "," << cli_detail::big(row.card) << ","
              << opt_big(row.nilpotent) << "," << cli_detail::big(row.rank_value) << ","
              << cli_detail::big(row.maximal);
          if (table_enumerate) out << "," << opt_big(row.card_enum) << "," << opt_big(row.nilpotent_enum);
          out << "\n";
        }
      }
      return any_mismatch ? 1 : 0;
    }

    if (enum_cmd->parsed()) {
      if (enum_family == "decreasing") enum_sel.family = Family::decreasing;
      else if (enum_family == "order-preserving") enum_sel.family = Family::order_preserving;
      else if (enum_family == "orientation-preserving") enum_sel.family = Family::orientation_preserving;
      else if (enum_family == "oriented") enum_sel.family = Family::oriented;
      else if (enum_family == "reversing") enum_sel.family = Family::reversing;
      else {
        throw CLI::ValidationError("--family",
                                   "expected decreasing|order-preserving|"
                                   "orientation-preserving|oriented|reversing");
      }
      detail::require_budget(enum_sel.n, budgets.enumeration, "enumeration");
      if (enum_count_only) {
        out << count_by_enumeration(enum_sel) << "\n";
      } else {
        std::string line;
        visit(enum_sel, [&](const std::vector<std::uint8_t>& img) {
          line.clear();
          for (std::size_t i = 0; i < img.size(); ++i) {
            if (i) line.push_back(' ');
            line += std::to_string(img[i]);
          }
          out << line << "\n";
        });
      }
      return 0;
    }

    if (gen_cmd->parsed()) {
      detail::require_budget(gen_n, budgets.enumeration, "enumeration");
      const SemigroupSet gens = minimal_generating_set(gen_n, gen_r);
      Json header;
      header["n"] = gen_n;
      header["r"] = gen_r;
      header["rhat"] = effective_rank(gen_n, gen_r).value;
      header["size"] = gens.size();
      header["rank_formula"] = cli_detail::big(rank_oriented(gen_n, gen_r));
      out << header.dump() << "\n";
      for (const auto& g : gens) out << format_transformation(g) << "\n";
      return 0;
    }

    if (factor_cmd->parsed()) {
      const Transformation target = parse_transformation(factor_alpha);
      if (target.n() != factor_n) {
        throw std::domain_error("factor: --alpha has " + std::to_string(target.n())
                                + " entries but --n is " + std::to_string(factor_n));
      }
      const FactorizationWitness witness = factorize(target, factor_n, factor_r);
      if (format == Format::lines) {
        for (const auto& f : witness.word) out << format_transformation(f) << "\n";
      } else {
        Json j;
        j["n"] = factor_n;
        j["r"] = factor_r;
        j["target"] = format_transformation(target);
        j["degree"] = order_reversing_degree(target);
        j["rank"] = rank(target);
        Json word = Json::array();
        for (std::size_t i = 0; i < witness.word.size(); ++i) {
          word.push_back(Json{{"transformation", format_transformation(witness.word[i])},
                              {"class", factor_class_name(witness.classes[i])}});
        }
        j["word"] = word;
        j["product"] = format_transformation(witness.product());
        j["valid"] = witness.product() == target;
        out << j.dump() << "\n";
      }
      return 0;
    }

    if (max_cmd->parsed()) {
      std::vector<MaximalDescriptor> descriptors;
      if (max_full) {
        descriptors = maximal_descriptors_full(max_n_param);
      } else {
        if (!max_r_param) throw CLI::ValidationError("--r", "required unless --full-semigroup");
        descriptors = maximal_descriptors(max_n_param, *max_r_param);
      }
      detail::require_budget(max_n_param, budgets.enumeration, "enumeration");
      bool all_ok = true;
      std::optional<SemigroupSet> whole;
      if (max_verify) {
        detail::require_budget(max_n_param, budgets.maximality, "maximality");
        whole = max_full ? detail::enum_oriented(max_n_param)
                         : detail::enum_oriented(max_n_param, *max_r_param);
      }
      for (const auto& d : descriptors) {
        Json j = cli_detail::to_json(d);
        if (max_verify) {
          const auto start = std::chrono::steady_clock::now();
          const bool ok = is_maximal_in(realize(d), *whole);
          const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
          j["maximal"] = ok;
          j["elapsed_ms"] = elapsed;
          all_ok = all_ok && ok;
        }
        if (format == Format::pretty || format == Format::lines) {
          out << j["kind"].get<std::string>();
          if (!j["alpha"].is_null()) out << " " << j["alpha"].get<std::string>();
          if (!j["m"].is_null()) out << " m=" << j["m"].get<int>();
          if (max_verify) out << (j["maximal"].get<bool>() ? " maximal" : " NOT-MAXIMAL");
          out << "\n";
        } else {
          out << j.dump() << "\n";
        }
      }
      return all_ok ? 0 : 1;
    }

    if (verify_cmd->parsed()) {
      std::vector<const CheckSpec*> specs;
      if (verify_check == "all") {
        for (const auto& spec : check_registry()) specs.push_back(&spec);
      } else {
        const CheckSpec* spec = find_check(verify_check);
        if (!spec) throw CLI::ValidationError("--check", "unknown check id: " + verify_check);
        specs.push_back(spec);
      }
      if (!verify_n && !verify_max_n) {
        throw CLI::ValidationError("verify", "provide --n or --max-n");
      }
      const bool battery = verify_check == "all" || verify_max_n.has_value();
      int n_lo = verify_n ? *verify_n : 4;
      int n_hi = verify_max_n ? *verify_max_n : n_lo;
      if (n_lo > n_hi) throw CLI::ValidationError("verify", "--n exceeds --max-n");

      struct Cell {
        const CheckSpec* spec;
        int n;
        std::optional<int> r;
      };
      std::vector<Cell> cells;
      for (const CheckSpec* spec : specs) {
        for (int n = std::max(n_lo, spec->min_n); n <= n_hi; ++n) {
          if (n > spec->n_cap(budgets)) {
            if (battery) continue;  // out-of-budget cells are skipped in battery runs
            detail::require_budget(n, spec->n_cap(budgets), spec->id.c_str());
          }
          if (spec->r_values) {
            for (int r : spec->r_values(n)) {
              if (verify_r && r != *verify_r) continue;
              cells.push_back({spec, n, r});
            }
          } else {
            if (!verify_r) cells.push_back({spec, n, {}});
          }
        }
      }
      if (cells.empty()) {
        if (verify_n && *verify_n < 4) {
          throw CLI::ValidationError("--n", "checks assume chain size n >= 4");
        }
        throw CLI::ValidationError("verify", "no runnable (check, n, r) cells for these arguments");
      }

      bool all_pass = true;
      const Budgets run_budgets = budgets;
      const std::uint64_t run_seed = seed;
      for (std::size_t start = 0; start < cells.size(); start += static_cast<std::size_t>(threads)) {
        const std::size_t stop = std::min(cells.size(), start + static_cast<std::size_t>(threads));
        std::vector<std::future<VerificationRun>> wave;
        for (std::size_t i = start; i < stop; ++i) {
          const Cell& cell = cells[i];
          wave.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                    [&run_budgets, run_seed, cell] {
                                      return run_check(*cell.spec, cell.n, cell.r, run_budgets,
                                                       run_seed);
                                    }));
        }
        for (auto& fut : wave) {
          const VerificationRun run = fut.get();
          all_pass = all_pass && run.pass;
          cli_detail::print_run(out, run, format);
        }
      }
      return all_pass ? 0 : 1;
    }

    err << "usage error: no subcommand\n";
    return 2;
  } catch (const resource_error& e) {
    err << "resource budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ordsemi
