// Copyright 2026 The qinfo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver. Exit codes: 0 success, 1 validation error, 2 usage
// error. Results go to `out`, diagnostics to `err`.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qinfo/acceptance.hpp"
#include "qinfo/channel.hpp"
#include "qinfo/coding.hpp"
#include "qinfo/entangle.hpp"
#include "qinfo/io.hpp"
#include "qinfo/mub.hpp"
#include "qinfo/prob.hpp"
#include "qinfo/quantum.hpp"

namespace qinfo::cli {

using json = nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::vector<double> parse_numbers(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw ValidationError(what + ": empty entry in '" + text + "'");
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ValidationError(what + ": '" + item + "' is not a number");
    }
    if (used != item.size()) throw ValidationError(what + ": '" + item + "' is not a number");
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError(what + ": no values given");
  return out;
}

// Command-line probabilities: normalized (with a warning) when within 1e-6
// of summing to one, rejected otherwise.
inline ProbDist parse_dist(const std::string& text, const std::string& what, std::ostream& err) {
  std::vector<double> v = parse_numbers(text, what);
  double sum = 0.0;
  for (double x : v) {
    if (x < 0.0) throw ValidationError(what + ": negative probability");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-6)
    throw ValidationError(what + ": probabilities sum to " + std::to_string(sum) + ", not 1");
  if (sum != 1.0) {
    if (std::abs(sum - 1.0) >= tol::kSum)
      err << "warning: " << what << " sums to " << sum << "; normalizing\n";
    for (double& x : v) x /= sum;
  }
  return ProbDist(std::move(v));
}

inline std::vector<ProbDist> parse_dist_list(const std::string& text, const std::string& what,
                                             std::ostream& err) {
  std::vector<ProbDist> out;
  std::stringstream ss(text);
  std::string group;
  while (std::getline(ss, group, ';')) out.push_back(parse_dist(group, what, err));
  return out;
}

inline std::string format_number(double x) {
  if (std::abs(x) < 1e-12) return "0";
  char buf[64];
  if (std::abs(x) < 1e-4 || std::abs(x) >= 1e9) {
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
  }
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  return s;
}

inline std::string format_value(const json& v) {
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_array()) {
    std::string s;
    const bool nested = !v.empty() && v[0].is_array();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) s += nested ? "; " : ", ";
      s += format_value(v[i]);
    }
    return s;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline void print_text(const json& obj, std::ostream& out, const std::string& prefix = "") {
  for (const auto& [key, value] : obj.items()) {
    if (value.is_object()) {
      print_text(value, out, prefix + key + ".");
    } else {
      out << prefix << key << " = " << format_value(value) << '\n';
    }
  }
}

struct Globals {
  bool json_output = false;
  std::uint64_t seed = 1;
  double tol = tol::kOperator;
};

inline void emit(const std::string& command, const json& inputs, const json& result,
                 const Globals& g, std::ostream& out) {
  if (g.json_output) {
    json doc{{"command", command}, {"inputs", inputs}, {"result", result}};
    doc["inputs"]["tol"] = g.tol;
    out << doc.dump() << '\n';
  } else {
    print_text(result, out);
  }
}

struct StateArgs {
  std::string bloch;
  std::string file;
};

inline void add_state_options(CLI::App* sub, StateArgs& s) {
  auto* b = sub->add_option("--bloch", s.bloch, "qubit Bloch vector rx,ry,rz");
  auto* f = sub->add_option("--state", s.file, "state document (JSON)");
  b->excludes(f);
}

inline DensityOperator load_state(const StateArgs& s, json& inputs) {
  if (!s.bloch.empty()) {
    const auto r = parse_numbers(s.bloch, "--bloch");
    if (r.size() != 3) throw ValidationError("--bloch: need exactly three components");
    inputs["bloch"] = r;
    return DensityOperator::from_bloch({r[0], r[1], r[2]});
  }
  if (!s.file.empty()) {
    const json doc = io::read_json_file(s.file);
    inputs["state"] = doc;
    return io::state_from_json(doc);
  }
  throw ValidationError("a state is required: pass --bloch or --state");
}

inline json report_json(const UnbiasedReport& r) {
  return json{{"max_deviation", r.max_deviation},
              {"worst_pair", {r.worst.basis_a, r.worst.vector_a, r.worst.basis_b, r.worst.vector_b}},
              {"pairs_checked", r.pairs_checked},
              {"passed", r.passed}};
}

inline json report_json(const OrthogonalityReport& r) {
  return json{{"max_overlap", r.max_overlap},
              {"worst_pair", {r.worst.basis_a, r.worst.vector_a, r.worst.basis_b, r.worst.vector_b}},
              {"pairs_checked", r.pairs_checked},
              {"passed", r.passed}};
}

inline json povm_json(const Povm& m) {
  json effects = json::array();
  for (const auto& e : m.effects()) effects.push_back(io::hermitian_to_json(e));
  return effects;
}

inline std::string usage_text() {
  return "usage: qinfo <subcommand> [options]\n"
         "subcommands: entropy bzinfo grouping itot mub-verify mub-sum reconstruct holevo\n"
         "             accessible wrongbasis coding questions majorize entangle selftest\n"
         "global options: --json --seed N --tol X (try: qinfo <subcommand> --help)\n";
}

}  // namespace detail

/// Runs the command line `args` (program name excluded).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Classical and quantum information measures", "qinfo"};
  app.fallthrough(true);
  app.require_subcommand(1);

  Globals g;
  app.add_flag("--json", g.json_output, "machine-readable JSON output");
  app.add_option("--seed", g.seed, "seed for randomized operations")->capture_default_str();
  app.add_option("--tol", g.tol, "verification tolerance")->capture_default_str();

  // Each handler returns an exit code; parsing fills the captured variables.
  std::function<int()> handler;

  // entropy
  std::string dist;
  std::optional<std::size_t> surprise_index;
  auto* c_entropy = app.add_subcommand("entropy", "Shannon entropy H(p) and surprise");
  c_entropy->add_option("--dist", dist, "comma-separated probabilities")->required();
  c_entropy->add_option("--surprise", surprise_index, "also report -log2 p_i for this index");
  c_entropy->callback([&] {
    handler = [&] {
      const ProbDist p = parse_dist(dist, "--dist", err);
      json inputs{{"dist", p.vector()}};
      json result{{"H", shannon_entropy(p)}};
      if (surprise_index) {
        inputs["surprise_index"] = *surprise_index;
        result["surprise"] = surprise(p, *surprise_index);
      }
      emit("entropy", inputs, result, g, out);
      return kExitOk;
    };
  });

  // bzinfo
  double norm = 1.0;
  auto* c_bz = app.add_subcommand("bzinfo", "quadratic information N * sum (p_i - 1/n)^2");
  c_bz->add_option("--dist", dist, "comma-separated probabilities")->required();
  c_bz->add_option("--norm", norm, "normalization N")->capture_default_str();
  c_bz->callback([&] {
    handler = [&] {
      const ProbDist p = parse_dist(dist, "--dist", err);
      const double n = static_cast<double>(p.size());
      emit("bzinfo", {{"dist", p.vector()}, {"norm", norm}},
           {{"I", bz_information(p, norm)}, {"maximum", norm * (1.0 - 1.0 / n)}}, g, out);
      return kExitOk;
    };
  });

  // grouping
  auto* c_group = app.add_subcommand("grouping", "grouping-axiom residual; the last two entries are grouped");
  c_group->add_option("--dist", dist, "p_1..p_{n-1},q_1,q_2")->required();
  c_group->callback([&] {
    handler = [&] {
      const ProbDist p = parse_dist(dist, "--dist", err);
      const double residual = faddeev_residual(p);
      const double full = shannon_entropy(p);
      emit("grouping", {{"dist", p.vector()}},
           {{"residual", residual}, {"H_full", full}, {"H_grouped_plus_conditional", full - residual}},
           g, out);
      return kExitOk;
    };
  });

  // itot
  StateArgs state_args;
  auto* c_itot = app.add_subcommand("itot", "purity, total information and entropy of a state");
  add_state_options(c_itot, state_args);
  c_itot->callback([&] {
    handler = [&] {
      json inputs;
      const DensityOperator rho = load_state(state_args, inputs);
      emit("itot", inputs,
           {{"dim", rho.dim()},
            {"purity", purity(rho)},
            {"itot", itot(rho)},
            {"von_neumann_entropy", von_neumann_entropy(rho)},
            {"spectrum", spectrum(rho).eigenvalues.vector()},
            {"pure", is_pure(rho)}},
           g, out);
      return kExitOk;
    };
  });

  // mub-verify
  std::size_t dim = 0;
  auto* c_mubv = app.add_subcommand("mub-verify", "build and verify a complete set of MUBs");
  c_mubv->add_option("--dim", dim, "dimension (2 or an odd prime)")->required();
  c_mubv->callback([&] {
    handler = [&] {
      const MubSet m = build_mubs(dim);
      const auto u = verify_unbiased(m, g.tol);
      const auto o = hyperplane_orthogonality(m, g.tol);
      emit("mub-verify", {{"dim", dim}},
           {{"bases", m.size()},
            {"unbiased", report_json(u)},
            {"hyperplane_orthogonality", report_json(o)},
            {"independent_parameters", independent_parameter_count(m)}},
           g, out);
      return u.passed && o.passed ? kExitOk : kExitValidation;
    };
  });

  // mub-sum
  auto* c_mubs = app.add_subcommand("mub-sum", "sum of I(p^j) over a complete MUB set vs Tr(rho - 1/n)^2");
  c_mubs->add_option("--dim", dim, "dimension (2 or an odd prime)")->required();
  add_state_options(c_mubs, state_args);
  c_mubs->callback([&] {
    handler = [&] {
      json inputs{{"dim", dim}};
      const DensityOperator rho = load_state(state_args, inputs);
      require_same_dim(rho.dim(), dim, "mub-sum");
      const MubSet m = build_mubs(dim);
      std::vector<double> shannon;
      for (const auto& p : mub_statistics(rho, m)) shannon.push_back(shannon_entropy(p));
      const double total = itot_via_sum(rho, m);
      const double direct = itot(rho);
      emit("mub-sum", inputs,
           {{"per_basis_I", information_per_basis(rho, m)},
            {"total", total},
            {"itot", direct},
            {"difference", total - direct},
            {"per_basis_H", shannon},
            {"shannon_sum", shannon_sum(rho, m)}},
           g, out);
      return kExitOk;
    };
  });

  // reconstruct
  std::string probs_text;
  std::string out_path;
  auto* c_rec = app.add_subcommand("reconstruct", "linear state reconstruction from complete-MUB statistics");
  c_rec->add_option("--dim", dim, "dimension (2 or an odd prime)")->required();
  c_rec->add_option("--probs", probs_text, "n+1 distributions, ';'-separated, in build_mubs order")
      ->required();
  c_rec->add_option("--out", out_path, "write the reconstructed state document here");
  c_rec->callback([&] {
    handler = [&] {
      const auto probs = parse_dist_list(probs_text, "--probs", err);
      const MubSet m = build_mubs(dim);
      const Reconstruction r = reconstruct(probs, m);
      json plist = json::array();
      for (const auto& p : probs) plist.push_back(p.vector());
      const json doc = io::hermitian_to_json(r.matrix);
      if (!out_path.empty()) {
        const DensityOperator valid = r.state();  // refuses indefinite output
        std::ofstream f(out_path);
        if (!f) throw ValidationError("cannot write " + out_path);
        f << io::state_to_json(valid).dump() << '\n';
      }
      emit("reconstruct", {{"dim", dim}, {"probs", plist}},
           {{"state", doc},
            {"trace", r.trace},
            {"min_eigenvalue", r.min_eigenvalue},
            {"positive", r.positive(g.tol)}},
           g, out);
      return kExitOk;
    };
  });

  // holevo
  std::string ensemble_path;
  auto* c_hol = app.add_subcommand("holevo", "Holevo quantity and specification information");
  c_hol->add_option("--ensemble", ensemble_path, "ensemble document (JSON)")->required();
  c_hol->callback([&] {
    handler = [&] {
      const json doc = io::read_json_file(ensemble_path);
      const CqEnsemble e = io::ensemble_from_json(doc);
      emit("holevo", {{"ensemble", doc}},
           {{"chi", holevo_chi(e)},
            {"specification_information", specification_information(e)},
            {"average_state_entropy", von_neumann_entropy(DensityOperator(e.average_state()))}},
           g, out);
      return kExitOk;
    };
  });

  // accessible
  SearchConfig search;
  auto* c_acc = app.add_subcommand("accessible", "search for the accessible information (lower bound)");
  c_acc->add_option("--ensemble", ensemble_path, "ensemble document (JSON)")->required();
  c_acc->add_option("--restarts", search.restarts, "hill-climb restarts (dim > 2)")->capture_default_str();
  c_acc->add_option("--steps", search.steps_per_restart, "steps per restart (dim > 2)")
      ->capture_default_str();
  c_acc->callback([&] {
    handler = [&] {
      const json doc = io::read_json_file(ensemble_path);
      const CqEnsemble e = io::ensemble_from_json(doc);
      search.seed = g.seed;
      const AccessibleInfo a = accessible_information(e, search);
      emit("accessible",
           {{"ensemble", doc}, {"seed", g.seed}, {"restarts", search.restarts},
            {"steps", search.steps_per_restart}},
           {{"value", a.value},
            {"lower_bound", true},
            {"chi", holevo_chi(e)},
            {"specification_information", specification_information(e)},
            {"best_measurement", povm_json(a.best)}},
           g, out);
      return kExitOk;
    };
  });

  // wrongbasis
  double theta = 0.0;
  std::string priors_text = "0.5,0.5";
  auto* c_wb = app.add_subcommand("wrongbasis", "z-encoded bits read out in a tilted basis");
  c_wb->add_option("--theta", theta, "Bloch tilt angle in [0, pi] (radians)")->required();
  c_wb->add_option("--priors", priors_text, "prior of bits 0,1")->capture_default_str();
  c_wb->callback([&] {
    handler = [&] {
      const ProbDist priors = parse_dist(priors_text, "--priors", err);
      const WrongBasisReport r = wrong_basis_demo(theta, priors);
      json joint = json::array();
      for (Eigen::Index i = 0; i < r.joint.rows(); ++i)
        joint.push_back({r.joint.table()(i, 0), r.joint.table()(i, 1)});
      emit("wrongbasis", {{"theta", theta}, {"priors", priors.vector()}},
           {{"H_A", r.h_a}, {"H_B", r.h_b}, {"H_A_given_B", r.h_a_given_b}, {"H_A_B", r.mutual},
            {"joint", joint}},
           g, out);
      return kExitOk;
    };
  });

  // coding
  std::size_t block = 0;
  double eps = 0.0;
  std::uint64_t cap = kDefaultEnumerationCap;
  auto* c_cod = app.add_subcommand("coding", "typical-set enumeration");
  c_cod->add_option("--p", dist, "source distribution")->required();
  c_cod->add_option("--n", block, "block length N")->required();
  c_cod->add_option("--eps", eps, "typicality window epsilon")->required();
  c_cod->add_option("--cap", cap, "enumeration cap")->capture_default_str();
  c_cod->callback([&] {
    handler = [&] {
      const ProbDist p = parse_dist(dist, "--p", err);
      const TypicalSetReport r = typical_set(p, block, eps, cap);
      emit("coding", {{"p", p.vector()}, {"n", block}, {"eps", eps}, {"cap", cap}},
           {{"count", r.count},
            {"rate", r.rate},
            {"entropy", shannon_entropy(p)},
            {"total_probability", r.total_probability}},
           g, out);
      return kExitOk;
    };
  });

  // questions
  std::size_t k_block = 1;
  auto* c_q = app.add_subcommand("questions", "optimal yes/no questioning strategy (Huffman code)");
  c_q->add_option("--p", dist, "source distribution")->required();
  c_q->add_option("--block", k_block, "ask about blocks of k outcomes")->capture_default_str();
  c_q->callback([&] {
    handler = [&] {
      const ProbDist p = parse_dist(dist, "--p", err);
      const PrefixCode code = question_strategy(p);
      json result{{"lengths", code.lengths},
                  {"average_length", code.average_length},
                  {"kraft_sum", code.kraft_sum()},
                  {"entropy", shannon_entropy(p)}};
      if (k_block > 1) result["block_rate"] = block_question_rate(p, k_block);
      emit("questions", {{"p", p.vector()}, {"block", k_block}}, result, g, out);
      return kExitOk;
    };
  });

  // majorize
  std::string q_text;
  bool mix = false;
  auto* c_maj = app.add_subcommand("majorize", "majorization test, optionally after a random doubly stochastic mixing");
  c_maj->add_option("--p", dist, "first distribution")->required();
  c_maj->add_option("--q", q_text, "second distribution");
  c_maj->add_flag("--mix", mix, "set q = S p for a seeded random doubly stochastic S");
  c_maj->callback([&] {
    handler = [&] {
      const ProbDist p = parse_dist(dist, "--p", err);
      json inputs{{"p", p.vector()}};
      std::optional<ProbDist> q;
      if (mix) {
        q = apply_doubly_stochastic(random_doubly_stochastic(p.size(), g.seed), p);
        inputs["mix_seed"] = g.seed;
      } else if (!q_text.empty()) {
        q = parse_dist(q_text, "--q", err);
        inputs["q"] = q->vector();
      } else {
        throw CLI::RequiredError("--q or --mix");
      }
      const double t = g.tol;
      emit("majorize", inputs,
           {{"q", q->vector()},
            {"p_majorizes_q", majorizes(p, *q, t)},
            {"q_majorizes_p", majorizes(*q, p, t)},
            {"H_p", shannon_entropy(p)},
            {"H_q", shannon_entropy(*q)},
            {"I_p", bz_information(p)},
            {"I_q", bz_information(*q)}},
           g, out);
      return kExitOk;
    };
  });

  // entangle
  std::string obs1, obs2, answers_text = "1,1";
  auto* c_ent = app.add_subcommand("entangle", "two-qubit joint eigenstates and information split");
  c_ent->add_option("--obs1", obs1, "first Pauli product, e.g. xx");
  c_ent->add_option("--obs2", obs2, "second Pauli product, e.g. yy");
  c_ent->add_option("--answers", answers_text, "eigenvalues, e.g. 1,-1")->capture_default_str();
  c_ent->add_option("--state", state_args.file, "two-qubit state document (JSON)");
  c_ent->callback([&] {
    handler = [&] {
      auto observable = [](const std::string& s) {
        if (s.size() != 2) throw ValidationError("Pauli product label must have two characters: '" + s + "'");
        return pauli_product(parse_pauli(s[0]), parse_pauli(s[1]));
      };
      json inputs;
      json result;
      std::optional<DensityOperator> rho;
      if (!obs1.empty() || !obs2.empty()) {
        if (obs1.empty() || obs2.empty()) throw CLI::RequiredError("--obs1 and --obs2");
        const auto a = parse_numbers(answers_text, "--answers");
        if (a.size() != 2) throw ValidationError("--answers: need two values");
        const std::array<int, 2> answers{static_cast<int>(a[0]), static_cast<int>(a[1])};
        if (static_cast<double>(answers[0]) != a[0] || static_cast<double>(answers[1]) != a[1])
          throw ValidationError("--answers: values must be +1 or -1");
        const JointEigenstate js = joint_eigenstate(QuestionPair(observable(obs1), observable(obs2)), answers);
        inputs = {{"obs1", obs1}, {"obs2", obs2}, {"answers", answers}};
        json vec = json::array();
        for (Eigen::Index i = 0; i < js.vector.size(); ++i) vec.push_back({js.vector(i).real(), js.vector(i).imag()});
        result["eigenvector"] = vec;
        result["residual"] = js.residual;
        rho = js.state;
      } else if (!state_args.file.empty()) {
        json doc = io::read_json_file(state_args.file);
        inputs = {{"state", doc}};
        rho = io::state_from_json(doc);
      } else {
        throw CLI::RequiredError("--obs1/--obs2 or --state");
      }
      const InfoSplit s = info_split(*rho);
      result["individual"] = s.individual;
      result["correlation"] = s.correlation;
      result["correlations_dominate"] = s.correlations_dominate();
      result["itot"] = itot(*rho);
      emit("entangle", inputs, result, g, out);
      return kExitOk;
    };
  });

  // selftest
  auto* c_self = app.add_subcommand("selftest", "run the acceptance suite");
  c_self->callback([&] {
    handler = [&] {
      const auto results = acceptance::run_all();
      bool all = true;
      for (const auto& r : results) {
        all = all && r.passed;
        if (g.json_output) {
          out << json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}}.dump()
              << '\n';
        } else {
          out << acceptance::format_line(r) << '\n';
        }
      }
      if (!g.json_output) {
        out << (all ? "all criteria passed" : "some criteria FAILED") << '\n';
      }
      return all ? kExitOk : kExitValidation;
    };
  });

  if (args.empty()) {
    err << usage_text();
    return kExitUsage;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0 with the help text on `out`; real parse errors
    // print to `err`.
    if (app.exit(e, out, err) == 0) return kExitOk;
    err << usage_text();
    return kExitUsage;
  }

  try {
    return handler ? handler() : kExitUsage;
  } catch (const CLI::ParseError& e) {
    err << "error: missing " << e.what() << '\n' << usage_text();
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace qinfo::cli
