// qfock: partitions, canonical bases and closed formulas for the level-1
// q-deformed Fock space of type A(2)_2n.
//
// Exit codes: 0 success, 1 usage, 2 discrepancy, 3 internal assertion.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <thread>

#include "qfock/abacus.hpp"
#include "qfock/canonical.hpp"
#include "qfock/formulas.hpp"
#include "qfock/pairs.hpp"
#include "qfock/render.hpp"
#include "qfock/spin.hpp"

using namespace qfock;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDiscrepancy = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int h = 0;
  std::string core = "()";
  std::string partition;
  int weight = 0;
  int size = -1;
  bool restricted_only = false;
  bool show_abacus = false;
  bool provenance = false;
  bool dual_peel = false;
  int max_weight = 3;
  std::string format = "table";
  std::vector<int> hs;
  int max_core_size = 10;
  unsigned jobs = 1;
  int residue = 0;
  std::string column;
};

std::size_t block_cap() {
  if (const char* env = std::getenv("QFOCK_MAX_BLOCK")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError("QFOCK_MAX_BLOCK must be a positive integer");
  }
  return kDefaultEnumerationCap;
}

HParams params_of(int h) {
  if (h < 3 || h % 2 == 0) throw UsageError("--h must be odd and at least 3");
  return HParams(h);
}

BlockId block_of(const Options& o) {
  const HParams p = params_of(o.h);
  const Partition core = parse_partition(o.core);
  if (!is_h_strict(core, p) || !is_bar_core(core, p))
    throw UsageError(to_string(core) + " is not an " + std::to_string(o.h) + "-bar-core");
  if (o.weight < 0) throw UsageError("--weight must be non-negative");
  return BlockId(p, core, o.weight);
}

void check_oracle_weight(const Options& o) {
  if (o.weight > o.max_weight)
    throw UsageError("weight " + std::to_string(o.weight) + " exceeds the cap " +
                     std::to_string(o.max_weight) + " (raise it with --max-weight)");
}

CanonicalBasisMatrix oracle(const BlockId& b, bool dual) {
  return canonical_basis(b, dual ? PeelPolicy::largest_residue : PeelPolicy::smallest_residue,
                         block_cap());
}

void print_partitions(const std::vector<Partition>& list, Format f, const HParams& p) {
  if (f == Format::json) {
    json j = json::array();
    for (const auto& l : list)
      j.push_back({{"partition", to_string(l)}, {"restricted", is_restricted(l, p)}});
    std::cout << j.dump(2) << '\n';
    return;
  }
  if (f == Format::csv) std::cout << "partition,restricted\n";
  for (const auto& l : list) {
    if (f == Format::csv)
      std::cout << '"' << to_string(l) << "\"," << (is_restricted(l, p) ? "yes" : "no") << '\n';
    else
      std::cout << to_string(l) << (is_restricted(l, p) ? "  restricted" : "") << '\n';
  }
}

int cmd_block(const Options& o) {
  const Format f = parse_format(o.format);
  std::vector<Partition> list;
  HParams p = params_of(o.h);
  if (o.size >= 0) {
    list = enumerate_h_strict(o.size, p, block_cap());
  } else {
    list = enumerate_block(block_of(o), block_cap());
  }
  // Descending, as partitions are conventionally listed.
  std::reverse(list.begin(), list.end());
  if (o.restricted_only) std::erase_if(list, [&](const Partition& l) { return !is_restricted(l, p); });
  print_partitions(list, f, p);
  return 0;
}

int cmd_core(const Options& o) {
  const Format f = parse_format(o.format);
  const HParams p = params_of(o.h);
  const Partition lambda = parse_partition(o.partition);
  if (!is_h_strict(lambda, p)) throw UsageError(to_string(lambda) + " is not h-strict");
  const Partition core = bar_core(lambda, p);
  const int w = bar_weight(lambda, p);
  const auto content = h_content(lambda, p);
  const AbacusDisplay ab = AbacusDisplay::from_partition(lambda, p);
  if (f == Format::json) {
    json j{{"h", o.h}, {"partition", to_string(lambda)}, {"core", to_string(core)},
           {"weight", w}, {"content", content}, {"restricted", is_restricted(lambda, p)}};
    if (o.show_abacus) j["abacus"] = ab.render();
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::string content_text;
  for (std::size_t i = 0; i < content.size(); ++i)
    content_text += (i ? " " : "") + std::to_string(i) + "^" + std::to_string(content[i]);
  if (f == Format::csv) {
    std::cout << "partition,core,weight,content\n\"" << to_string(lambda) << "\",\""
              << to_string(core) << "\"," << w << ',' << content_text << '\n';
  } else {
    std::cout << "partition  " << to_string(lambda) << "\ncore       " << to_string(core)
              << "\nweight     " << w << "\ncontent    " << content_text << '\n';
  }
  if (o.show_abacus) std::cout << '\n' << ab.render();
  return 0;
}

int cmd_cb(const Options& o) {
  check_oracle_weight(o);
  std::cout << render_matrix(oracle(block_of(o), o.dual_peel), parse_format(o.format));
  return 0;
}

int cmd_formula(const Options& o) {
  if (o.weight > 2) throw UsageError("closed formulas exist only for weight 0, 1 and 2");
  const FormulaMatrix fm = formula_matrix(block_of(o));
  std::cout << render_matrix(fm.matrix, parse_format(o.format),
                             o.provenance ? &fm.provenance : nullptr);
  return 0;
}

struct DiffOutcome {
  BlockId block;
  std::size_t rows = 0;
  std::optional<std::string> discrepancy;
};

std::optional<std::string> first_difference(const CanonicalBasisMatrix& a,
                                            const CanonicalBasisMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return "row or column labels differ";
  for (std::size_t c = 0; c < a.cols().size(); ++c)
    for (std::size_t r = 0; r < a.rows().size(); ++r)
      if (a.entries()[r][c] != b.entries()[r][c])
        return "d" + to_string(a.rows()[r]) + to_string(a.cols()[c]) + ": oracle " +
               to_string(a.entries()[r][c]) + ", formula " + to_string(b.entries()[r][c]);
  return std::nullopt;
}

int cmd_diff(const Options& o) {
  if (o.weight > 2) throw UsageError("closed formulas exist only for weight 0, 1 and 2");
  if (o.weight < 0) throw UsageError("--weight must be non-negative");
  const Format f = parse_format(o.format);
  std::vector<BlockId> blocks;
  for (int h : o.hs) {
    const HParams p = params_of(h);
    for (const auto& core : enumerate_cores(o.max_core_size, p)) blocks.emplace_back(p, core, o.weight);
  }
  std::vector<std::optional<DiffOutcome>> results(blocks.size());
  std::vector<std::string> errors(blocks.size());
  std::atomic<std::size_t> next{0};
  const std::size_t cap = block_cap();
  auto worker = [&] {
    for (std::size_t k; (k = next++) < blocks.size();) {
      try {
        const auto oracle_m = canonical_basis(blocks[k], PeelPolicy::smallest_residue, cap);
        const auto formula_m = formula_matrix(blocks[k]).matrix;
        results[k] = DiffOutcome{blocks[k], oracle_m.rows().size(),
                                 first_difference(oracle_m, formula_m)};
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
    }
  };
  const unsigned jobs = std::max(1u, o.jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t k = 0; k < blocks.size(); ++k)
    if (!errors[k].empty()) throw InvariantViolation("block h=" + std::to_string(blocks[k].h()) +
                                                     " core " + to_string(blocks[k].core()) +
                                                     ": " + errors[k]);
  const auto bad = std::find_if(results.begin(), results.end(),
                                [](const auto& r) { return r->discrepancy.has_value(); });
  if (f == Format::json) {
    json j{{"weight", o.weight}, {"blocks", blocks.size()}, {"agree", bad == results.end()}};
    json list = json::array();
    for (const auto& r : results)
      list.push_back({{"h", r->block.h()},
                      {"core", to_string(r->block.core())},
                      {"rows", r->rows},
                      {"discrepancy", r->discrepancy ? json(*r->discrepancy) : json(nullptr)}});
    j["results"] = std::move(list);
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& r : results)
      std::cout << "h=" << r->block.h() << " core " << to_string(r->block.core()) << " weight "
                << o.weight << ": " << r->rows << " rows, "
                << (r->discrepancy ? "DISCREPANCY " + *r->discrepancy : "agree") << '\n';
    if (bad == results.end())
      std::cout << "all blocks agree (" << blocks.size() << " blocks)\n";
    else
      std::cout << "first discrepancy: h=" << (*bad)->block.h() << " core "
                << to_string((*bad)->block.core()) << ' ' << *(*bad)->discrepancy << '\n';
  }
  return bad == results.end() ? 0 : kExitDiscrepancy;
}

int cmd_verify_pair(const Options& o) {
  const HParams p = params_of(o.h);
  const Partition sigma = parse_partition(o.core);
  if (!is_h_strict(sigma, p) || !is_bar_core(sigma, p))
    throw UsageError(to_string(sigma) + " is not a bar-core");
  check_oracle_weight(o);
  const auto pairs = detect_pairs(sigma, p);
  const auto d = std::find_if(pairs.begin(), pairs.end(),
                              [&](const PairDescriptor& x) { return x.residue == o.residue; });
  if (d == pairs.end())
    throw UsageError(to_string(sigma) + " has no addable " + std::to_string(o.residue) + "-node");
  const PairReport r = verify_pair(*d, o.weight, block_cap());
  json j{{"h", o.h},
         {"sigma", to_string(d->sigma)},
         {"tau", to_string(d->tau)},
         {"residue", d->residue},
         {"k", d->k},
         {"kind", to_string(d->kind)},
         {"weight", o.weight},
         {"supported", r.supported},
         {"scopes_kessar_equivalent", r.scopes_kessar},
         {"criteria_predict_equivalence", scopes_kessar_predicted(*d, o.weight)},
         {"passed", r.all_passed()}};
  json checks = json::array();
  for (const auto& c : r.checks) {
    json jc{{"check", c.name}, {"passed", c.passed}};
    if (!c.passed) jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  std::cout << j.dump(2) << '\n';
  return r.all_passed() ? 0 : kExitDiscrepancy;
}

int cmd_predict_spin(const Options& o) {
  check_oracle_weight(o);
  const Format f = parse_format(o.format);
  const BlockId b = block_of(o);
  const CanonicalBasisMatrix m = oracle(b, false);
  const HParams& p = b.params();
  std::vector<Partition> cols = m.cols();
  if (!o.column.empty()) {
    const Partition mu = parse_partition(o.column);
    if (!m.has_col(mu)) throw UsageError(to_string(mu) + " is not a restricted partition of the block");
    cols = {mu};
  }
  std::vector<SpinPrediction> out;
  for (const auto& mu : cols)
    for (const auto& lambda : m.rows()) {
      const LaurentPoly& d = m.at(lambda, mu);
      if (!d.is_zero()) out.push_back(predict_reduced(lambda, mu, d, p));
    }
  if (f == Format::json) {
    json j = json::array();
    for (const auto& s : out)
      j.push_back({{"lambda", to_string(s.lambda)},
                   {"mu", to_string(s.mu)},
                   {"d_at_one", s.d_at_one.get_str()},
                   {"x_h", s.x_h},
                   {"mantissa", s.mantissa.get_str()},
                   {"half_power", s.half_power},
                   {"odd_half_power", s.odd_half_power},
                   {"lambda_strict", s.lambda_strict},
                   {"predicted", to_string(s)}});
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  if (f == Format::csv) std::cout << "lambda,mu,d_at_one,x_h,predicted,odd_half_power,lambda_strict\n";
  for (const auto& s : out) {
    if (f == Format::csv) {
      std::cout << '"' << to_string(s.lambda) << "\",\"" << to_string(s.mu) << "\","
                << s.d_at_one.get_str() << ',' << s.x_h << ',' << to_string(s) << ','
                << (s.odd_half_power ? "yes" : "no") << ',' << (s.lambda_strict ? "yes" : "no")
                << '\n';
    } else {
      std::cout << "D" << to_string(s.lambda) << to_string(s.mu) << " = " << to_string(s)
                << "  (d(1)=" << s.d_at_one.get_str() << ", x_h=" << s.x_h << ")"
                << (s.odd_half_power ? "  odd power" : "")
                << (s.lambda_strict ? "" : "  non-strict") << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical bases and q-decomposition numbers for the level-1 Fock space of type A(2)_2n"};
  app.require_subcommand(1);
  // --h is the modulus, so help is long-form only.
  app.set_help_flag("--help", "print this help and exit");
  Options o;

  auto add_h = [&](CLI::App* s) { s->add_option("--h", o.h, "odd modulus h >= 3")->required(); };
  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "json, csv or table")->capture_default_str();
  };
  auto add_block = [&](CLI::App* s) {
    add_h(s);
    s->add_option("--core", o.core, "bar-core, e.g. \"(4,2)\"")->capture_default_str();
    s->add_option("--weight", o.weight, "bar-weight")->capture_default_str();
    add_format(s);
  };
  auto add_cap = [&](CLI::App* s) {
    s->add_option("--max-weight", o.max_weight, "weight cap for oracle computations")
        ->capture_default_str();
  };

  auto* block = app.add_subcommand("block", "list the partitions of a block or of a size");
  add_block(block);
  block->add_option("--size", o.size, "list all h-strict partitions of this size instead");
  block->add_flag("--restricted-only", o.restricted_only, "only restricted partitions");

  auto* core = app.add_subcommand("core", "bar-core, bar-weight and content of a partition");
  add_h(core);
  core->add_option("--partition", o.partition, "h-strict partition")->required();
  core->add_flag("--show-abacus", o.show_abacus, "draw the abacus display");
  add_format(core);

  auto* cb = app.add_subcommand("cb", "canonical basis of a block by the oracle");
  add_block(cb);
  add_cap(cb);
  cb->add_flag("--dual-peel", o.dual_peel, "peel largest residues first");

  auto* formula = app.add_subcommand("formula", "closed-form matrix of a weight 0, 1 or 2 block");
  add_block(formula);
  formula->add_flag("--provenance", o.provenance, "name the rule behind each entry");

  auto* diff = app.add_subcommand("diff", "compare closed formulas with the oracle over a sweep");
  diff->add_option("--h", o.hs, "comma-separated moduli")->required()->delimiter(',');
  diff->add_option("--weight", o.weight, "bar-weight (0, 1 or 2)")->required();
  diff->add_option("--max-core-size", o.max_core_size, "largest core size")->capture_default_str();
  diff->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
  add_format(diff);

  auto* vp = app.add_subcommand("verify-pair", "check a [w:k]-pair against the oracle");
  add_h(vp);
  vp->add_option("--core", o.core, "source bar-core")->required();
  vp->add_option("--residue", o.residue, "residue i")->required();
  vp->add_option("--weight", o.weight, "bar-weight")->required();
  add_cap(vp);

  auto* spin = app.add_subcommand("predict-spin", "predicted reduced decomposition numbers");
  add_block(spin);
  add_cap(spin);
  spin->add_option("--column", o.column, "only this restricted partition");

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
    if (*block) return cmd_block(o);
    if (*core) return cmd_core(o);
    if (*cb) return cmd_cb(o);
    if (*formula) return cmd_formula(o);
    if (*diff) return cmd_diff(o);
    if (*vp) return cmd_verify_pair(o);
    if (*spin) return cmd_predict_spin(o);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal assertion failed: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
