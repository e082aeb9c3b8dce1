//  Copyright 2026 The primlat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "primlat.hpp"

namespace primlat::cli {

namespace detail {

struct Options {
  std::string input = "-";
  std::string output;
  unsigned n = 0;
  bool best_effort = false;
  std::string choices;
  std::string level;
  std::vector<std::string> methods;
  std::string preset = "acgt-atcg";
  std::string fasta;
  std::size_t window = 100;
  bool list = false;
  std::string ball;
  std::string radius = "1";
  unsigned random_boolean = 0;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t limit = 1000;
  std::string name;
};

/// Reads a whole file, or standard input for "-".
inline std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw PreconditionError("cannot read '" + path + "'");
  buf << f.rdbuf();
  return buf.str();
}

inline std::string display_name(const std::string& path) { return path == "-" ? "<stdin>" : path; }

struct Context {
  const Options& o;
  std::istream& in;
  std::ostream& out;  // machine-readable result
  std::ostream& err;  // human summaries
};

inline LatticeDocument document(const Context& c) { return parse_lattice_text(slurp(c.o.input, c.in)); }

inline const char* method_names[] = {"zero", "sasaki", "metric", "ceiling"};

inline std::vector<ProjectionMethod> methods(const Options& o) {
  std::vector<ProjectionMethod> out;
  for (const auto& m : o.methods) out.push_back(parse_projection_method(m));
  return out;
}

inline PrimorialLattice family(const Context& c) {
  ReduceOptions opt{c.o.best_effort};
  if (c.o.choices.empty()) return generate_primorial(c.o.n, PrimorialStrategy::canonical_first(), opt);
  std::istringstream s(slurp(c.o.choices, c.in));
  try {
    return generate_primorial(c.o.n, PrimorialStrategy::explicit_carriers(read_choices(s, c.o.n)), opt);
  } catch (const ParseError& e) {
    throw PreconditionError(display_name(c.o.choices) + ": " + e.what());
  }
}

inline int classify_cmd(const Context& c) {
  auto doc = document(c);
  auto built = doc.build();
  if (auto* l = std::get_if<FiniteLattice>(&built)) {
    write_property_report(c.out, *l, classify(*l));
    return 0;
  }
  const auto& p = std::get<FinitePoset>(built);
  std::string reason;
  try {
    FiniteLattice::require(p);
  } catch (const PreconditionError& e) {
    reason = e.what();
  }
  write_poset_report(c.out, p, reason);
  return 0;
}

inline int ortho_cmd(const Context& c) {
  auto doc = document(c);
  auto l = FiniteLattice::require(doc.poset());
  if (!doc.ortho.empty()) {
    write_ortho_report(c.out, attach_ortho(std::move(l), doc.ortho));
    return 0;
  }
  auto found = find_orthocomplements(l, c.o.limit);
  c.out << "orthocomplementations: " << found.size() << '\n';
  for (const auto& perp : found) {
    OrthoLattice o(l, perp);
    c.out << "candidate:";
    for (Element x = 0; x < l.size(); ++x)
      if (x <= perp[x]) c.out << ' ' << l.label(x) << ':' << l.label(perp[x]);
    c.out << " orthomodular: " << yes_no(ortho_class(o).orthomodular) << '\n';
  }
  if (found.size() == c.o.limit) c.err << "stopped at --limit " << c.o.limit << '\n';
  return 0;
}

inline std::vector<Element> negation_of(const LatticeDocument& doc, const FiniteLattice& l) {
  if (!doc.negation.empty()) return negation_from_labels(l, doc.negation);
  if (!doc.ortho.empty()) return attach_ortho(l, doc.ortho).perp_map();
  throw PreconditionError("input has neither a 'negation' nor an 'ortho' stanza");
}

inline int negation_cmd(const Context& c) {
  auto doc = document(c);
  auto l = FiniteLattice::require(doc.poset());
  write_negation_report(c.out, l, negation_of(doc, l));
  return 0;
}

inline int metric_cmd(const Context& c) {
  auto doc = document(c);
  auto l = FiniteLattice::require(doc.poset());
  auto v = doc.valuation.empty() ? height_valuation(l)
                                 : LatticeDocument::table(l, doc.valuation, "valuation");
  auto m = metric_from_valuation(l, v);
  if (c.o.ball.empty()) {
    write_metric_tsv(c.out, l, m);
    return 0;
  }
  Element x = l.index_of(c.o.ball);
  Rational r = parse_rational(c.o.radius);
  c.out << "closed-ball: " << joined_labels(l.poset(), m.closed_ball(x, r)) << '\n';
  c.out << "open-ball: " << joined_labels(l.poset(), m.open_ball(x, r)) << '\n';
  return 0;
}

inline int reduce_cmd(const Context& c) {
  auto parent = Level::boolean(c.o.n);
  std::vector<Level> members;
  if (c.o.n <= kExactReduceRank && c.o.n >= 2) {
    auto census = reduce_census(parent);
    c.err << "pair selections tried: " << census.candidates << '\n';
    members = std::move(census.accepted);
  } else {
    members = reduce(parent, ReduceOptions{c.o.best_effort});
  }
  for (const auto& m : members) c.out << m.literal() << '\n';
  c.out << "count: " << members.size() << '\n';
  return 0;
}

inline int primorial_cmd(const Context& c) {
  write_primorial(c.out, family(c));
  return 0;
}

inline int dposet_cmd(const Context& c) {
  auto p = family(c);
  auto r = chain_dposet_check(p);
  write_dposet_report(c.out, p, r);
  return r.passed ? 0 : 1;
}

inline int project_cmd(const Context& c) {
  auto ref = LevelRef::parse(c.o.level);
  auto p = family(c);
  p.level(ref);  // rejects levels outside the family before reading input
  std::istringstream s(slurp(c.o.input, c.in));
  AnalysisPyramid py;
  py.input = read_subset_literals(s, c.o.n);
  py.levels = {ref};
  py.methods = methods(c.o);
  for (auto m : py.methods) py.sequences.push_back(project_sequence(p, ref, py.input, m));
  write_pyramid_tsv(c.out, py, [](Mask m) { return subset_literal(m); });
  return 0;
}

inline int probability_cmd(const Context& c) {
  if (c.o.random_boolean > 0) {
    auto level = Level::boolean(c.o.random_boolean);
    auto t = random_weight_trials(level.lattice(), c.o.trials, c.o.seed);
    c.out << "trials: " << t.trials << '\n';
    c.out << "valid: " << t.valid << '\n';
    c.out << "inclusion-exclusion: " << t.inclusion_exclusion << '\n';
    c.out << "subadditive: " << t.subadditive << '\n';
    if (t.first_failure) {
      c.err << "first failure: " << *t.first_failure << '\n';
      return 1;
    }
    return 0;
  }
  auto doc = document(c);
  auto l = FiniteLattice::require(doc.poset());
  auto neg = negation_of(doc, l);
  auto p = LatticeDocument::table(l, doc.prob, "prob");
  auto v = validate_probability(l, neg, p);
  if (auto* bad = std::get_if<ProbabilityViolation>(&v)) {
    c.out << "valid: false\nviolation: ";
    write_violation(c.out, l, *bad);
    c.out << '\n';
    return 1;
  }
  const auto& a = std::get<ProbabilityAssignment>(v);
  write_probability_report(c.out, a, probability_report(a));
  return 0;
}

inline int analyze_cmd(const Context& c) {
  auto preset = gsp_preset(parse_gsp_kind(c.o.preset));
  std::istringstream s(slurp(c.o.fasta, c.in));
  std::vector<FastaRecord> records;
  try {
    records = load_fasta(s, preset.alphabet);
  } catch (const ParseError& e) {
    throw PreconditionError(display_name(c.o.fasta) + ": " + e.what());
  }
  auto ms = methods(c.o);
  auto render = [&](Mask m) { return preset.alphabet.render(m); };
  for (const auto& r : records) {
    auto py = analyze(preset.lattice, preset.alphabet, r.tokens, ms);
    if (records.size() > 1) c.out << "# record " << r.name << '\n';
    write_pyramid_tsv(c.out, py, render);
    c.err << "record: " << r.name << '\n';
    write_summary(c.err, preset, gsp_summary(preset, r.tokens, py, c.o.window));
  }
  return 0;
}

inline int enumerate_cmd(const Context& c) {
  auto ls = enumerate_lattices(c.o.n);
  auto k = census(ls);
  c.out << "lattices: " << k.lattices << " modular: " << k.modular
        << " distributive: " << k.distributive << '\n';
  if (c.o.list)
    for (std::size_t i = 0; i < ls.size(); ++i)
      write_lattice_text(c.out, ls[i].poset(), "L" + std::to_string(c.o.n) + "_" + std::to_string(i + 1));
  return 0;
}

inline int hasse_cmd(const Context& c) {
  auto doc = document(c);
  write_hasse_dot(c.out, doc.poset(), c.o.name.empty() ? doc.name : c.o.name);
  return 0;
}

}  // namespace detail

/// Parses argv and runs one subcommand. Exit status: 0 success, 1 input or
/// validation failure, 2 usage error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
  using namespace detail;
  Options o;
  CLI::App app{"Finite lattices, primorial families and multiresolution projections", "primlat"};
  app.require_subcommand(1);
  app.add_option("-o,--output", o.output, "Write the result to this file instead of stdout");

  auto input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Lattice text file, '-' for stdin")->capture_default_str();
  };
  auto rank = [&](CLI::App* sub, unsigned lo, unsigned hi) {
    sub->add_option("-n,--n", o.n, "Number of atoms")->required()->check(CLI::Range(lo, hi));
  };
  auto family_opts = [&](CLI::App* sub) {
    rank(sub, 2, kMaxReduceRank);
    sub->add_option("--choices", o.choices, "File of reduction choices, one '<rank> {..} ..' per line");
    sub->add_flag("--best-effort", o.best_effort, "Allow rank 6 reductions");
  };
  auto method_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-m,--method", o.methods, "Projection method (repeatable)")
                    ->allow_extra_args(false)
                    ->check(CLI::IsMember(std::vector<std::string>(std::begin(method_names),
                                                                   std::end(method_names))));
    if (required) opt->required();
  };

  auto* classify_sub = app.add_subcommand("classify", "Lattice properties with witnesses");
  input(classify_sub);
  auto* ortho_sub = app.add_subcommand("ortho", "Check or search orthocomplementations");
  input(ortho_sub);
  ortho_sub->add_option("--limit", o.limit, "Stop the search after this many")->check(CLI::PositiveNumber);
  auto* negation_sub = app.add_subcommand("negation", "Classify a negation");
  input(negation_sub);
  auto* metric_sub = app.add_subcommand("metric", "Distance matrix from a valuation (height by default)");
  input(metric_sub);
  metric_sub->add_option("--ball", o.ball, "Centre element; print balls instead of the matrix");
  metric_sub->add_option("--radius", o.radius, "Ball radius, e.g. 1 or 3/2")->capture_default_str();
  auto* reduce_sub = app.add_subcommand("reduce", "Reduction of the Boolean lattice on N atoms");
  rank(reduce_sub, 2, kMaxReduceRank);
  reduce_sub->add_flag("--best-effort", o.best_effort, "Allow rank 6");
  auto* primorial_sub = app.add_subcommand("primorial", "Generate a primorial family");
  family_opts(primorial_sub);
  auto* dposet_sub = app.add_subcommand("dposet", "Difference-poset laws on a family's Boolean chain");
  family_opts(dposet_sub);
  auto* project_sub = app.add_subcommand("project", "Project a sequence of subsets onto a level");
  family_opts(project_sub);
  project_sub->add_option("--level", o.level, "Target level, e.g. L2^3 or D4")
      ->required()
      ->check([](const std::string& s) {
        try {
          LevelRef::parse(s);
          return std::string();
        } catch (const Error& e) {
          return std::string(e.what());
        }
      });
  method_opt(project_sub, true);
  project_sub->add_option("input", o.input, "Subset literals, '-' for stdin")->capture_default_str();
  auto* probability_sub = app.add_subcommand("probability", "Validate a probability assignment");
  input(probability_sub);
  auto* random_opt = probability_sub->add_option("--random-boolean", o.random_boolean,
                                                 "Random atom weights on the Boolean lattice with N atoms")
                         ->check(CLI::Range(1u, 8u));
  probability_sub->add_option("--trials", o.trials, "Number of random assignments")
      ->needs(random_opt)
      ->capture_default_str();
  probability_sub->add_option("--seed", o.seed, "Seed for random assignments")
      ->needs(random_opt)
      ->capture_default_str();
  auto* analyze_sub = app.add_subcommand("analyze", "Multiresolution analysis of a symbol sequence");
  analyze_sub->add_option("--preset", o.preset, "acgt-atcg or acgt-plus-x")
      ->check(CLI::IsMember({"acgt-atcg", "acgt-plus-x"}))
      ->capture_default_str();
  analyze_sub->add_option("--fasta", o.fasta, "FASTA file, '-' for stdin")->required();
  method_opt(analyze_sub, false);
  analyze_sub->add_option("--window", o.window, "Window length for content summaries")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* enumerate_sub = app.add_subcommand("enumerate", "Count lattices up to isomorphism");
  enumerate_sub->add_option("-n,--n", o.n, "Number of elements")
      ->required()
      ->check(CLI::Range(0u, static_cast<unsigned>(kMaxEnumerationSize)));
  enumerate_sub->add_flag("--list", o.list, "Print each lattice in text form");
  auto* hasse_sub = app.add_subcommand("hasse", "Hasse diagram as DOT");
  input(hasse_sub);
  hasse_sub->add_option("--name", o.name, "Graph name (defaults to the lattice name)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (o.methods.empty()) o.methods = {"ceiling"};

  std::ostringstream result;
  Context ctx{o, in, result, err};
  int status = 0;
  try {
    if (app.got_subcommand(classify_sub)) status = classify_cmd(ctx);
    else if (app.got_subcommand(ortho_sub)) status = ortho_cmd(ctx);
    else if (app.got_subcommand(negation_sub)) status = negation_cmd(ctx);
    else if (app.got_subcommand(metric_sub)) status = metric_cmd(ctx);
    else if (app.got_subcommand(reduce_sub)) status = reduce_cmd(ctx);
    else if (app.got_subcommand(primorial_sub)) status = primorial_cmd(ctx);
    else if (app.got_subcommand(dposet_sub)) status = dposet_cmd(ctx);
    else if (app.got_subcommand(project_sub)) status = project_cmd(ctx);
    else if (app.got_subcommand(probability_sub)) status = probability_cmd(ctx);
    else if (app.got_subcommand(analyze_sub)) status = analyze_cmd(ctx);
    else if (app.got_subcommand(enumerate_sub)) status = enumerate_cmd(ctx);
    else if (app.got_subcommand(hasse_sub)) status = hasse_cmd(ctx);
  } catch (const ParseError& e) {
    err << "error: " << display_name(o.input) << ": " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (o.output.empty()) {
    out << result.str();
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!(f << result.str())) {
      err << "error: cannot write '" << o.output << "'\n";
      return 1;
    }
  }
  return status;
}

}  // namespace primlat::cli
