#include "stanley/cli.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>

#include "stanley/errors.hpp"
#include "stanley/fixtures.hpp"
#include "stanley/invariants.hpp"
#include "stanley/polarization.hpp"
#include "stanley/random_ideals.hpp"

namespace stanley::cli {

namespace {

using nlohmann::ordered_json;

std::vector<int> to_one_based(const std::vector<int>& v) {
  std::vector<int> out;
  out.reserve(v.size());
  for (int i : v) out.push_back(i + 1);
  return out;
}

std::vector<int> to_zero_based(const std::vector<int>& v, int limit,
                               const char* what) {
  std::vector<int> out;
  out.reserve(v.size());
  for (int i : v) {
    if (i < 1 || i > limit)
      throw InvalidInputError(std::string(what) + " index out of range");
    out.push_back(i - 1);
  }
  return out;
}

ordered_json interval_json(const IntervalPartition& partition) {
  ordered_json arr = ordered_json::array();
  for (const Interval& iv : partition.intervals)
    arr.push_back(ordered_json{{"lower", iv.lower}, {"upper", iv.upper}});
  return arr;
}

ordered_json component_strings(const Decomposition& d) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : d.components()) arr.push_back(c.str());
  return arr;
}

void add_bool_check(Report& report, const std::string& name, bool pass) {
  report.checks.push_back(Check{name, pass ? 1 : 0, 1, "==", pass});
}

void add_eq_check(Report& report, const std::string& name, long long lhs,
                  long long rhs) {
  report.checks.push_back(Check{name, lhs, rhs, "==", lhs == rhs});
}

VarSet zvars_from(const IdealDocument& doc, const Options& options) {
  if (!options.zvars.empty()) {
    VarSet z;
    for (const std::string& name : options.zvars) {
      int j = doc.ring.var_index(name);
      if (j < 0) throw InvalidInputError("unknown variable '" + name + "'");
      z |= VarSet::single(j);
    }
    return z;
  }
  if (doc.zvars) return *doc.zvars;
  throw InvalidInputError("split needs --zvars or a document zvars hint");
}

void run_decompose(Report& report, const IdealDocument& doc,
                   const Options&) {
  MonomialIdeal ideal = document_ideal(doc);
  Decomposition d = irreducible_decomposition(ideal);
  report.values["ideal"] = ideal.str();
  report.values["components"] = component_strings(d);
  report.values["component_count"] = d.component_count();
}

void run_size(Report& report, const IdealDocument& doc, const Options&) {
  Decomposition d = document_decomposition(doc);
  SizeDetail detail = ideal_size_detail(d);
  std::vector<PrimeSupport> primes = ass_primes(d);
  ordered_json cover = ordered_json::array();
  for (int i : detail.cover) cover.push_back(primes[i].str());
  report.values["size"] = detail.value;
  report.values["h"] = detail.h;
  report.values["r"] = detail.r;
  report.values["cover"] = cover;
}

void run_bigsize(Report& report, const IdealDocument& doc,
                 const Options& options) {
  Decomposition d = document_decomposition(doc);
  if (!options.order.empty()) {
    TotalOrder order(d, to_zero_based(options.order, d.component_count(),
                                      "order"));
    report.values["order"] = options.order;
    bool admissible = is_admissible_order(order);
    report.values["admissible"] = admissible;
    if (!admissible) throw InvalidInputError("order is not admissible");
    Family family = maximal_admissible_family(order);
    report.values["family"] = to_one_based(family.indices());
    report.values["bigsize"] = bigsize_family(family);
    return;
  }
  if (options.all_orders) {
    std::vector<TotalOrder> orders =
        admissible_orders(d, options.max_components);
    ordered_json per_order = ordered_json::array();
    int best = -1;
    std::vector<int> best_order;
    for (const TotalOrder& order : orders) {
      int b = bigsize_for_order(order);
      per_order.push_back(ordered_json{{"order", to_one_based(order.perm())},
                                       {"bigsize", b}});
      if (b > best) {
        best = b;
        best_order = order.perm();
      }
    }
    report.values["admissible_order_count"] = orders.size();
    report.values["orders"] = per_order;
    report.values["bigsize"] = best;
    report.values["witness_order"] = to_one_based(best_order);
    return;
  }
  BigsizeResult result = bigsize_ideal(d, options.max_components);
  report.values["bigsize"] = result.value;
  report.values["witness_order"] = to_one_based(result.best_order);
  report.values["family"] = to_one_based(result.family_indices);
  report.values["admissible_order_count"] = result.admissible_order_count;
}

void run_sdepth(Report& report, const IdealDocument& doc,
                const Options& options) {
  MonomialIdeal ideal = document_ideal(doc);
  PosetMode mode = options.quotient ? PosetMode::Quotient : PosetMode::Ideal;
  CharacteristicPoset poset = char_poset(ideal, mode, options.max_box);
  SdepthResult result = sdepth_of_poset(poset);
  report.values["sdepth"] =
      ordered_json{{"value", result.value},
                   {"mode", options.quotient ? "quotient" : "ideal"},
                   {"poset_elements", poset.element_count()}};
  report.certificates["intervals"] = interval_json(result.certificate);
  add_bool_check(report, "certificate_valid",
                 valid_partition(poset, result.certificate, result.value));
}

void run_polarize(Report& report, const IdealDocument& doc,
                  const Options& options) {
  Decomposition current = document_decomposition(doc);
  int limit = options.steps.value_or(-1);

  ordered_json steps = ordered_json::array();
  ordered_json new_vars = ordered_json::array();
  int done = 0;
  for (;;) {
    if (limit >= 0 && done >= limit) break;
    int split = -1;
    for (int j = 0; j < current.ring().var_count() && split < 0; ++j)
      if (current.max_power(j) > 1) split = j;
    if (split < 0) {
      if (limit >= 0 && done < limit)
        report.notes.push_back("already squarefree after " +
                               std::to_string(done) + " steps");
      break;
    }
    PolarizationStep step = polarize_step(current, split);
    ordered_json step_json{
        {"split_var", current.ring().var_name(split)},
        {"degree", step.degree},
        {"raw_components", component_strings(step.raw_target)}};
    add_bool_check(report, "depolarize_step_" + std::to_string(done + 1),
                   depolarize_check(step));
    try {
      LcmLattice source_lattice = lcm_lattice(step.raw_target.intersection());
      LcmLattice target_lattice = lcm_lattice(step.source.intersection());
      std::vector<int> var_map(step.target_ring.var_count());
      for (int j = 0; j < step.source.ring().var_count(); ++j) var_map[j] = j;
      var_map[step.target_ring.var_count() - 1] = split;
      add_bool_check(
          report, "lattice_surjection_step_" + std::to_string(done + 1),
          lattice_surjection_check(source_lattice, target_lattice, var_map));
    } catch (const BoundError&) {
      report.notes.push_back("lattice check skipped at step " +
                             std::to_string(done + 1) +
                             ": generator bound exceeded");
    }
    new_vars.push_back(ordered_json{
        {"var", step.target_ring.var_name(step.target_ring.var_count() - 1)},
        {"stands_for", current.ring().var_name(split)},
        {"level", step.degree}});
    current = irredundantize(step.raw_target);
    step_json["components"] = component_strings(current);
    steps.push_back(std::move(step_json));
    ++done;
  }
  report.values["steps"] = done;
  report.values["ring_vars"] = current.ring().var_count();
  report.values["squarefree"] = current.is_squarefree();
  report.values["components"] = component_strings(current);
  report.values["new_vars"] = new_vars;
  report.certificates["steps"] = steps;
}

void run_split(Report& report, const IdealDocument& doc,
               const Options& options) {
  Decomposition d = document_decomposition(doc);
  VarSet z = zvars_from(doc, options);
  ordered_json znames = ordered_json::array();
  for (int j : z.members()) znames.push_back(d.ring().var_name(j));
  report.values["zvars"] = znames;

  if (!options.tau.empty()) {
    SplitData data = split_data(
        d, z, to_zero_based(options.tau, d.component_count(), "tau"),
        options.max_box);
    report.values["tau"] = to_one_based(data.tau);
    report.values["j_tau"] = data.j_tau.str();
    report.values["l_tau"] = data.l_tau.str();
    if (data.a_tau)
      report.values["a_tau"] = *data.a_tau;
    else
      report.values["a_tau"] = nullptr;
    return;
  }

  SplitScan scan = scan_splits(d, z, options.max_box, options.max_components);
  ordered_json qualifying = ordered_json::array();
  for (const SplitData& q : scan.qualifying)
    qualifying.push_back(ordered_json{{"tau", to_one_based(q.tau)},
                                      {"j_tau", q.j_tau.str()},
                                      {"l_tau", q.l_tau.str()},
                                      {"a_tau", *q.a_tau}});
  report.values["qualifying"] = qualifying;
  if (scan.a0)
    report.values["a0"] = *scan.a0;
  else
    report.values["a0"] = nullptr;
  if (scan.bound) {
    report.values["bound"] = *scan.bound;
    int sdepth = sdepth_exact(d.intersection(), PosetMode::Ideal,
                              options.max_box)
                     .value;
    report.checks.push_back(Check{"split_min_le_sdepth", *scan.bound, sdepth,
                                  "<=", *scan.bound <= sdepth});
  } else {
    report.values["bound"] = nullptr;
    report.notes.push_back("no nonzero restriction for this Z; bound vacuous");
  }
}

void append_verify(Report& report, const std::string& prefix,
                   const VerifyReport& vr) {
  for (const Check& c : vr.checks)
    report.checks.push_back(
        Check{prefix + "." + c.name, c.lhs, c.rhs, c.relation, c.pass});
  for (const std::string& n : vr.notes) report.notes.push_back(prefix + ": " + n);
}

Decomposition fixture_decomposition(const char* name) {
  const Fixture* fixture = find_fixture(name);
  return document_decomposition(parse_document(fixture->text));
}

// Frozen expected values for the built-in examples.
void run_reference_suite(Report& report, const Options& options) {
  VerifyOptions vopts;
  vopts.max_box = options.max_box;
  vopts.max_components = options.max_components;

  {  // e
    Decomposition d = fixture_decomposition("e");
    add_eq_check(report, "e.size", ideal_size(d), 1);
    auto adm = [&](std::vector<int> perm) {
      return is_admissible_order(TotalOrder(d, std::move(perm)));
    };
    add_bool_check(report, "e.order_231_not_admissible", !adm({1, 2, 0}));
    add_bool_check(report, "e.order_213_admissible", adm({1, 0, 2}));
    add_bool_check(report, "e.order_312_admissible", adm({2, 0, 1}));
    add_eq_check(report, "e.bigsize_usual",
                 bigsize_for_order(TotalOrder(d, {0, 1, 2})), 2);
    add_eq_check(report, "e.bigsize_213",
                 bigsize_for_order(TotalOrder(d, {1, 0, 2})), 2);
    add_eq_check(report, "e.bigsize_312",
                 bigsize_for_order(TotalOrder(d, {2, 0, 1})), 2);
    add_eq_check(report, "e.bigsize", bigsize_ideal(d).value, 2);
    append_verify(report, "e", verify_instance(d, vopts));
  }
  {  // ex
    Decomposition d = fixture_decomposition("ex");
    Family f = maximal_admissible_family(TotalOrder(d, {0, 1, 4, 2, 3}));
    Family g = maximal_admissible_family(TotalOrder(d, {0, 2, 3, 1, 4}));
    add_eq_check(report, "ex.family_f_bigsize", bigsize_family(f), 1);
    add_eq_check(report, "ex.family_g_bigsize", bigsize_family(g), 2);
    add_eq_check(report, "ex.family_f_prefix_bigsize",
                 bigsize_family(f.prefix(2)), 2);
    add_eq_check(report, "ex.family_f_reduced_bigsize",
                 bigsize_family(reduce_f1(f)), 0);
    add_eq_check(report, "ex.family_g_reduced_bigsize",
                 bigsize_family(reduce_f1(g)), 1);
    append_verify(report, "ex", verify_instance(d, vopts));
  }
  {  // e0
    Decomposition d = fixture_decomposition("e0");
    add_eq_check(report, "e0.size", ideal_size(d), 1);
    std::vector<TotalOrder> orders = admissible_orders(d);
    add_eq_check(report, "e0.admissible_order_count", orders.size(), 4);
    bool all_one = true;
    for (const TotalOrder& order : orders)
      all_one = all_one && bigsize_for_order(order) == 1;
    add_bool_check(report, "e0.bigsize_one_for_every_order", all_one);
    append_verify(report, "e0", verify_instance(d, vopts));
  }
  {  // e1
    Decomposition d = fixture_decomposition("e1");
    add_eq_check(report, "e1.size", ideal_size(d), 0);
    add_eq_check(report, "e1.bigsize", bigsize_ideal(d).value, 0);
    append_verify(report, "e1", verify_instance(d, vopts));
  }
  {  // e2
    Decomposition d = fixture_decomposition("e2");
    add_eq_check(report, "e2.size", ideal_size(d), 1);
    Family f = maximal_admissible_family(TotalOrder(d, {2, 3, 0, 1}));
    add_eq_check(report, "e2.family_bigsize", bigsize_family(f), 1);

    PolarizationStep step = polarize_step(d, 0);
    IrredundantResult reduced = irredundantize_indexed(step.raw_target);
    add_eq_check(report, "e2.polarized_component_count",
                 reduced.decomposition.component_count(), 4);
    Family g_tilde(reduced.decomposition.ring(),
                   reduced.decomposition.components(), reduced.kept);
    add_eq_check(report, "e2.bigsize_g_tilde", bigsize_family(g_tilde), 2);
    TransferContext ctx = make_transfer_context(step);
    Family g_back = replacement_family(ctx, g_tilde);
    add_bool_check(report, "e2.replacement_g",
                   g_back.indices() == std::vector<int>{2, 3});
    append_verify(report, "e2", verify_instance(d, vopts));
  }
  {  // e3
    Decomposition d = fixture_decomposition("e3");
    add_eq_check(report, "e3.size", ideal_size(d), 2);
    add_eq_check(report, "e3.bigsize_usual",
                 bigsize_for_order(TotalOrder(d, {0, 1, 2})), 2);
    PolarizationStep step = polarize_step(d, 0);
    add_eq_check(report, "e3.raw_component_count",
                 step.raw_target.component_count(), 5);
    Decomposition target = irredundantize(step.raw_target);
    add_eq_check(report, "e3.polarized_size", ideal_size(target), 2);
    append_verify(report, "e3", verify_instance(d, vopts));
  }
  {  // e-prime
    Decomposition d = fixture_decomposition("e-prime");
    SizeDetail detail = ideal_size_detail(d);
    add_eq_check(report, "e-prime.size", detail.value, 2);
    for (const std::string& note : find_fixture("e-prime")->notes)
      report.notes.push_back("e-prime: " + note);
    add_eq_check(report, "e-prime.bigsize_usual",
                 bigsize_for_order(TotalOrder(d, {0, 1, 2, 3, 4, 5, 6})), 4);
    add_eq_check(report, "e-prime.bigsize_75314",
                 bigsize_for_order(TotalOrder(d, {6, 4, 2, 0, 3, 1, 5})), 3);
    add_eq_check(report, "e-prime.bigsize", bigsize_ideal(d).value, 4);
    MonomialIdeal ideal = d.intersection();
    int sdepth =
        sdepth_exact(ideal, PosetMode::Ideal, options.max_box).value;
    int quotient =
        sdepth_exact(ideal, PosetMode::Quotient, options.max_box).value;
    add_eq_check(report, "e-prime.sdepth", sdepth, 5);
    add_eq_check(report, "e-prime.quotient_sdepth", quotient, 3);
    append_verify(report, "e-prime", verify_instance(d, vopts));
  }
  {  // e4 and e5 splits
    Decomposition d = fixture_decomposition("e-prime");
    SplitScan scan4 = scan_splits(d, VarSet::single(4), options.max_box);
    add_eq_check(report, "e4.qualifying_count", scan4.qualifying.size(), 1);
    add_bool_check(report, "e4.tau",
                   !scan4.qualifying.empty() &&
                       scan4.qualifying[0].tau ==
                           std::vector<int>{0, 1, 2, 3, 5});
    add_eq_check(report, "e4.bound", scan4.bound.value_or(-1), 5);
    SplitScan scan5 = scan_splits(d, VarSet::single(3), options.max_box);
    add_eq_check(report, "e5.qualifying_count", scan5.qualifying.size(), 1);
    add_bool_check(report, "e5.tau",
                   !scan5.qualifying.empty() &&
                       scan5.qualifying[0].tau ==
                           std::vector<int>{0, 1, 2, 4, 6});
    add_eq_check(report, "e5.bound", scan5.bound.value_or(-1), 5);
  }
  {  // j: round trip through full polarization
    Decomposition d = fixture_decomposition("j");
    FullPolarization fp = full_polarization(d);
    add_eq_check(report, "j.polarization_steps", fp.steps.size(), 2);
    Decomposition target = fixture_decomposition("e-prime");
    std::optional<std::vector<int>> bijection =
        find_variable_bijection(fp.result, target);
    add_bool_check(report, "j.polarization_matches_e_prime",
                   bijection.has_value());
    append_verify(report, "j", verify_instance(d, vopts));
  }
}

void run_random_suite(Report& report, const Options& options) {
  std::mt19937_64 rng(options.seed);
  RandomIdealOptions gen;
  VerifyOptions vopts;
  vopts.max_box = options.max_box;
  vopts.max_components = options.max_components;

  std::map<std::string, std::pair<long long, long long>> tally;
  for (int i = 0; i < options.count; ++i) {
    Decomposition d = random_decomposition(rng, gen);
    VerifyReport vr = verify_instance(d, vopts);
    for (const Check& c : vr.checks) {
      auto& [pass, total] = tally[c.name];
      ++total;
      if (c.pass) ++pass;
      if (!c.pass)
        report.notes.push_back("failure at instance " + std::to_string(i) +
                               ": " + d.str());
    }
  }
  report.values["instances"] = options.count;
  report.values["seed"] = options.seed;
  for (const auto& [name, counts] : tally)
    report.checks.push_back(Check{name + "_pass_count", counts.first,
                                  counts.second, "==",
                                  counts.first == counts.second});
}

}  // namespace

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

Report run_command(const std::string& command, const IdealDocument& doc,
                   const Options& options) {
  Report report;
  report.command = command;
  report.input = print_document(doc);
  auto started = std::chrono::steady_clock::now();

  if (command == "decompose")
    run_decompose(report, doc, options);
  else if (command == "size")
    run_size(report, doc, options);
  else if (command == "bigsize")
    run_bigsize(report, doc, options);
  else if (command == "sdepth")
    run_sdepth(report, doc, options);
  else if (command == "polarize")
    run_polarize(report, doc, options);
  else if (command == "split")
    run_split(report, doc, options);
  else if (command == "verify")
    append_verify(report, doc.label.empty() ? "instance" : doc.label,
                  verify_instance(document_decomposition(doc),
                                  VerifyOptions{options.max_box,
                                                options.max_components, true}));
  else
    throw InvalidInputError("unknown command '" + command + "'");

  if (options.timing) {
    auto elapsed = std::chrono::steady_clock::now() - started;
    report.values["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
  return report;
}

Report run_suite(const Options& options) {
  Report report;
  report.command = "verify";
  report.input = "suite:" + options.suite;
  auto started = std::chrono::steady_clock::now();

  if (options.suite == "paper-examples")
    run_reference_suite(report, options);
  else if (options.suite == "random")
    run_random_suite(report, options);
  else
    throw InvalidInputError("unknown suite '" + options.suite + "'");

  if (options.timing) {
    auto elapsed = std::chrono::steady_clock::now() - started;
    report.values["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
  return report;
}

namespace {

void emit_value_lines(std::string& out, const std::string& prefix,
                      const ordered_json& value) {
  if (value.is_object()) {
    for (const auto& [key, sub] : value.items())
      emit_value_lines(out, prefix.empty() ? key : prefix + "." + key, sub);
    return;
  }
  if (value.is_string())
    out += prefix + ": " + value.get<std::string>() + "\n";
  else
    out += prefix + ": " + value.dump() + "\n";
}

}  // namespace

std::string emit(const Report& report, bool as_json) {
  if (as_json) {
    ordered_json j;
    j["command"] = report.command;
    j["input"] = report.input;
    j["values"] = report.values;
    j["certificates"] = report.certificates;
    ordered_json checks = ordered_json::array();
    for (const Check& c : report.checks)
      checks.push_back(ordered_json{{"name", c.name},
                                    {"lhs", c.lhs},
                                    {"rhs", c.rhs},
                                    {"relation", c.relation},
                                    {"pass", c.pass}});
    j["checks"] = checks;
    j["notes"] = report.notes;
    return j.dump(2) + "\n";
  }

  std::string out = "command: " + report.command + "\n";
  out += "input: " + report.input + "\n";
  emit_value_lines(out, "", report.values);
  if (!report.certificates.empty())
    out += "certificates: " + report.certificates.dump() + "\n";
  for (const Check& c : report.checks)
    out += std::string(c.pass ? "[ok]   " : "[FAIL] ") + c.name + ": " +
           std::to_string(c.lhs) + " " + c.relation + " " +
           std::to_string(c.rhs) + "\n";
  for (const std::string& n : report.notes) out += "note: " + n + "\n";
  return out;
}

}  // namespace stanley::cli
