// Command-line front end. Exit codes: 0 success or affirmative answer,
// 1 negative answer or domain error, 2 usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "sylgal/sylgal.hpp"

using namespace sylgal;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GeometryDocument load(const std::string& path) {
  if (path == "-") return read_document(std::cin);
  std::ifstream in(path);
  if (!in) throw InvalidArguments("cannot open '" + path + "'");
  return read_document(in);
}

ColoredPointSet load_points(const std::string& path) {
  if (path == "-") return read_point_set(std::cin);
  std::ifstream in(path);
  if (!in) throw InvalidArguments("cannot open '" + path + "'");
  return read_point_set(in);
}

std::vector<FieldElem> parse_elements(const FiniteField& f, const std::string& list) {
  std::vector<FieldElem> out;
  std::stringstream ss(list);
  for (std::string part; std::getline(ss, part, ';');)
    if (!part.empty()) out.push_back(f.parse(part));
  return out;
}

// ---- construct ----

struct ConstructArgs {
  std::string kind;
  int dim = 2, p = 3, m = 4, order = 3;
  long q = 2;
  std::string name, gens;
  bool center = false;
};

NamedConfig build(const ConstructArgs& a) {
  if (a.kind == "pg") return projective_space_config(a.dim, a.q);
  if (a.kind == "ag") return affine_space_config(a.dim, a.q);
  if (a.kind == "ag-plus") return ag_plus(a.q);
  if (a.kind == "parallel-planes") return parallel_planes_config(a.p);
  if (a.kind == "parallel-lines") return parallel_lines_config(a.p, a.m);
  if (a.kind == "inflection") return inflection_config(field_of_order(a.q));
  if (a.kind == "table4") return table4_deletion(a.name);
  if (a.kind == "van-wamelen") return van_wamelen_11(field_of_order(a.q));
  if (a.kind == "multiplicative") {
    auto f = field_of_order(a.q);
    return multiplicative_group_config(f, multiplicative_subgroup(f, a.order));
  }
  if (a.kind == "additive") {
    auto f = field_of_order(a.q);
    return additive_group_config(f, additive_span(f, parse_elements(f, a.gens)), a.center);
  }
  throw Usage("unknown construction '" + a.kind + "'");
}

int run_construct(const ConstructArgs& a) {
  auto c = build(a);
  std::cout << "# " << c.name << '\n';
  write_document(std::cout, {c.geometry, c.coloring, c.coords});
  return 0;
}

// ---- check ----

struct CheckArgs {
  std::string file = "-";
  int ksg = 0;
  bool chromatic = false, mr = false, structure = false;
};

const Coloring& need_coloring(const GeometryDocument& d) {
  if (!d.coloring) throw InvalidArguments("the file has no colouring");
  return *d.coloring;
}

int run_check(const CheckArgs& a) {
  auto d = load(a.file);
  const auto& g = d.geometry;
  const std::string ok = "ok, " + std::to_string(g.n_points()) + " points";
  if (a.ksg) {
    if (!is_k_sg(g, a.ksg)) {
      std::cout << "fails: a line has fewer than " << a.ksg << " points\n";
      return 1;
    }
    std::cout << ok << '\n';
    return 0;
  }
  if (a.chromatic) {
    auto v = is_chromatic(g, need_coloring(d));
    if (!v) {
      std::cout << "fails: points " << v.witness->first << ' ' << v.witness->second << " share "
                << colour_name(v.shared) << " with no third point of the other colour\n";
      return 1;
    }
    std::cout << ok << '\n';
    return 0;
  }
  if (a.mr) {
    if (!is_mr(g, need_coloring(d))) {
      std::cout << "fails: not an MR colouring\n";
      return 1;
    }
    std::cout << ok << '\n';
    return 0;
  }
  if (a.structure) {
    auto r = check_structure_props(g, need_coloring(d));
    for (const auto& c : r.checks)
      std::cout << c.name << '\t' << (!c.applicable ? "n/a" : c.passed ? "pass" : "FAIL") << '\t' << c.witness << '\n';
    return r.ok() ? 0 : 1;
  }
  std::cout << ok << ", " << g.n_lines() << " lines of size >= 3, " << g.two_line_count() << " 2-lines, dimension "
            << dimension(g) << '\n';
  return 0;
}

// ---- canon / iso ----

int run_canon(const std::string& file) {
  auto d = load(file);
  const Coloring* c = d.coloring ? &*d.coloring : nullptr;
  auto lab = canonical_labelling(d.geometry, c);
  std::cout << "# form " << to_hex(lab.form) << '\n';
  std::cout << "# automorphisms " << automorphism_group_order(d.geometry, c) << '\n';
  GeometryDocument out{d.geometry.permuted(lab.lab), {}, {}};
  if (d.coloring) out.coloring = permuted(*d.coloring, lab.lab);
  write_document(std::cout, out);
  return 0;
}

int run_iso(const std::string& a, const std::string& b) {
  auto da = load(a), db = load(b);
  const Coloring* ca = da.coloring && db.coloring ? &*da.coloring : nullptr;
  const Coloring* cb = da.coloring && db.coloring ? &*db.coloring : nullptr;
  auto sigma = are_isomorphic(da.geometry, ca, db.geometry, cb);
  if (!sigma) {
    std::cout << "no\n";
    return 1;
  }
  std::cout << "yes\n";
  for (std::size_t i = 0; i < sigma->size(); ++i) std::cout << "map " << i << ' ' << (*sigma)[i] << '\n';
  return 0;
}

// ---- enumerate ----

struct EnumerateArgs {
  int points = 0, min_line = 3, levels = 0;
  bool non_collinear = false;
  std::string filter = "none", out;
  double budget = 0;
};

int run_enumerate(const EnumerateArgs& a, int workers) {
  EnumSpec spec;
  spec.n_points = a.points;
  spec.min_line_size = a.min_line;
  spec.require_non_collinear = a.non_collinear;
  spec.colour_filter = parse_filter(a.filter);
  EnumOptions opts;
  opts.budget_seconds = a.budget;
  opts.workers = workers;
  opts.levels = a.levels;
  auto e = enumerate(spec, opts);
  if (!a.out.empty()) {
    std::filesystem::create_directories(a.out);
    for (std::size_t i = 0; i < e.items.size(); ++i) {
      std::ostringstream name;
      name << a.points << '-' << a.filter << '-' << std::setw(4) << std::setfill('0') << i << ".geom";
      std::ofstream f(std::filesystem::path(a.out) / name.str());
      f << "# form " << to_hex(e.items[i].form) << '\n';
      write_document(f, {e.items[i].geometry, e.items[i].coloring, {}});
    }
    std::ofstream counts(std::filesystem::path(a.out) / "counts.tsv");
    counts << "n_points\tfilter\tcount\n" << a.points << '\t' << a.filter << '\t' << e.items.size() << '\n';
  }
  std::cout << "n_points\tfilter\tcount";
  if (spec.colour_filter != ColourFilter::None) std::cout << "\tcount_up_to_swap";
  std::cout << '\n' << a.points << '\t' << a.filter << '\t' << e.items.size();
  if (spec.colour_filter != ColourFilter::None) std::cout << '\t' << count_up_to_swap(e);
  std::cout << '\n';
  return 0;
}

// ---- embed / fmin ----

struct EmbedArgs {
  std::string file;
  int dim = 2;
  long q = 2;
  bool all = false, full_span = false;
  std::size_t limit = 1000;
};

int run_embed(const EmbedArgs& a) {
  auto d = load(a.file);
  if (a.dim < 1) throw InvalidArguments("target dimension must be at least 1");
  ProjectiveSpace ps(a.dim, field_of_order(a.q));
  EmbedOptions opts;
  opts.full_span = a.full_span;
  if (a.all) {
    auto all = all_embeddings(d.geometry, ps, a.limit, opts);
    if (all.empty()) {
      std::cout << "no\n";
      return 1;
    }
    std::cout << "yes " << all.size() << (all.size() == a.limit ? " (limit reached)" : "") << '\n';
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::cout << "# embedding " << i << '\n';
      write_coordinates(std::cout, all[i].images);
    }
    return 0;
  }
  auto e = embeds_into(d.geometry, ps, opts);
  if (!e) {
    std::cout << "no\n";
    return 1;
  }
  std::cout << "yes\n";
  write_coordinates(std::cout, e->images);
  return 0;
}

struct FminArgs {
  int k = 3, dim = 2, p = 2, horizon = 1, size_cap = 30, enum_cap = 0;
  double budget = 0;
};

int run_fmin(const FminArgs& a, int workers) {
  FminOptions opts;
  opts.budget_seconds = a.budget;
  opts.enumeration_cap = a.enum_cap;
  opts.workers = workers;
  auto r = fmin(a.k, a.dim, a.p, a.horizon, a.size_cap, opts);
  std::cout << "k\tn\tp\thorizon\tlower\tlower_provenance\tupper\tupper_provenance\twitness\tresolved\thorizon_limited\n";
  std::cout << r.k << '\t' << r.n << '\t' << r.p << '\t' << r.horizon << '\t' << r.lower << '\t' << r.lower_provenance << '\t'
            << (r.upper ? std::to_string(*r.upper) : "none") << '\t' << (r.upper ? "witness-embedding" : "none") << '\t'
            << (r.upper ? r.witness_name : "none") << '\t' << (r.resolved ? "yes" : "no") << '\t'
            << (r.horizon_limited ? "yes" : "no") << '\n';
  for (const auto& note : r.notes) std::cout << "# " << note << '\n';
  if (r.witness) {
    std::cout << "# witness coordinates\n";
    write_coordinates(std::cout, r.witness->images);
  }
  return r.resolved ? 0 : 1;
}

// ---- witness ----

ColoredPointSet random_point_set(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(3, 30), coord(-6, 6), den(1, 4), colour(1, 3);
  const int n = size(rng);
  std::vector<ColoredPoint> pts;
  while (int(pts.size()) < n) {
    ColoredPoint p{Rational(coord(rng), den(rng)), Rational(coord(rng), den(rng)), Colour(colour(rng))};
    if (std::none_of(pts.begin(), pts.end(), [&](const ColoredPoint& o) { return o.x == p.x && o.y == p.y; }))
      pts.push_back(p);
  }
  return ColoredPointSet(std::move(pts));
}

int run_witness(const std::string& file, int random_trials, std::uint64_t seed) {
  if (random_trials > 0) {
    std::mt19937_64 rng(seed);
    int failures = 0, collinear = 0;
    for (int t = 0; t < random_trials; ++t) {
      auto s = random_point_set(rng);
      auto c = find_witness(s);
      if (!verify_certificate(s, c)) ++failures;
      collinear += c.kind == WitnessCertificate::Kind::Collinear;
    }
    std::cout << "trials\tseed\tcollinear\twitnesses\tfailures\n"
              << random_trials << '\t' << seed << '\t' << collinear << '\t' << random_trials - collinear << '\t' << failures
              << '\n';
    return failures == 0 ? 0 : 1;
  }
  if (file.empty()) throw Usage("witness needs a point file or --random");
  auto s = load_points(file);
  auto c = find_witness(s);
  write_certificate(std::cout, c);
  return c.kind == WitnessCertificate::Kind::Collinear ? 0 : 1;
}

// ---- report ----

struct ReportArgs {
  std::string id;
  bool pretty = false;
  std::string q_list;
  int max_points = 0;
  double budget = 0;
};

int run_report(const ReportArgs& a, int workers) {
  ReportOptions o;
  o.max_points = a.max_points;
  o.budget_seconds = a.budget;
  o.workers = workers;
  if (!a.q_list.empty()) {
    o.q_list.clear();
    std::stringstream ss(a.q_list);
    for (std::string part; std::getline(ss, part, ',');) {
      try {
        o.q_list.push_back(std::stol(part));
      } catch (...) {
        throw Usage("bad --q-list entry '" + part + "'");
      }
    }
  }
  auto r = emit_report(a.id, o);
  if (a.pretty) write_report_pretty(std::cout, r);
  else write_report_tsv(std::cout, r);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite incidence geometries with chromatic colourings"};
  app.require_subcommand(1);
  app.fallthrough();
  int workers = 0;
  std::uint64_t seed = 1;
  app.add_option("--workers", workers, "Worker threads (default: hardware, capped by SYLGAL_WORKERS)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Seed for randomized runs");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Write a named configuration");
  construct->add_option("kind", ca.kind,
                        "pg, ag, ag-plus, parallel-planes, parallel-lines, inflection, table4, van-wamelen, "
                        "multiplicative, additive")
      ->required();
  construct->add_option("--dim", ca.dim, "Dimension for pg/ag");
  construct->add_option("--q", ca.q, "Field order");
  construct->add_option("--p", ca.p, "Prime for parallel-planes/parallel-lines");
  construct->add_option("--m", ca.m, "Number of parallel lines");
  construct->add_option("--name", ca.name, "Deletion name for table4");
  construct->add_option("--order", ca.order, "Subgroup order for multiplicative");
  construct->add_option("--gens", ca.gens, "Additive generators, ';'-separated coefficient tuples");
  construct->add_flag("--center", ca.center, "Add the centre point to an additive configuration");

  CheckArgs ck;
  auto* check = app.add_subcommand("check", "Validate a geometry and test properties");
  check->add_option("file", ck.file, "Geometry file or - for stdin");
  auto* ksg_opt = check->add_option("--ksg", ck.ksg, "Every line has at least K points")->check(CLI::PositiveNumber);
  auto* chrom_opt = check->add_flag("--chromatic", ck.chromatic, "The colouring is chromatic");
  auto* mr_opt = check->add_flag("--mr", ck.mr, "The colouring is an MR colouring");
  auto* struct_opt = check->add_flag("--structure", ck.structure, "Run the structural property checks");
  ksg_opt->excludes(chrom_opt)->excludes(mr_opt)->excludes(struct_opt);
  chrom_opt->excludes(mr_opt)->excludes(struct_opt);
  mr_opt->excludes(struct_opt);

  std::string canon_file = "-";
  auto* canon = app.add_subcommand("canon", "Print the canonical relabelling and automorphism count");
  canon->add_option("file", canon_file, "Geometry file or - for stdin");

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two geometries");
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();

  EnumerateArgs ea;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate linear spaces up to isomorphism");
  enumerate_cmd->add_option("--points", ea.points, "Number of points")->required();
  enumerate_cmd->add_option("--min-line-size", ea.min_line, "Least stored line size (2 allows 2-lines)");
  enumerate_cmd->add_flag("--non-collinear", ea.non_collinear, "Skip the single-line geometry");
  enumerate_cmd->add_option("--filter", ea.filter, "none, mr or chromatic");
  enumerate_cmd->add_option("--budget", ea.budget, "Seconds before giving up (0: no limit)");
  enumerate_cmd->add_option("--levels", ea.levels, "Deduplicated levels before splitting (0: default)");
  enumerate_cmd->add_option("--out", ea.out, "Directory for one file per class plus counts.tsv");

  EmbedArgs em;
  auto* embed = app.add_subcommand("embed", "Embed a geometry into PG(n,q)");
  embed->add_option("file", em.file, "Geometry file or - for stdin")->required();
  embed->add_option("--dim", em.dim, "Target dimension")->required();
  embed->add_option("--q", em.q, "Field order")->required();
  embed->add_flag("--all", em.all, "List every embedding in normal form");
  embed->add_option("--limit", em.limit, "Stop --all after this many");
  embed->add_flag("--full-span", em.full_span, "The image must span the whole space");

  FminArgs fa;
  auto* fmin_cmd = app.add_subcommand("fmin", "Smallest size of an n-dimensional k-SG configuration in characteristic p");
  fmin_cmd->add_option("--k", fa.k)->required();
  fmin_cmd->add_option("--dim", fa.dim)->required();
  fmin_cmd->add_option("--char", fa.p)->required();
  fmin_cmd->add_option("--horizon", fa.horizon, "Largest extension degree tried");
  fmin_cmd->add_option("--size-cap", fa.size_cap, "Largest size tried");
  fmin_cmd->add_option("--budget", fa.budget, "Enumeration seconds (0: no limit)");
  fmin_cmd->add_option("--enum-cap", fa.enum_cap, "Largest size enumerated (0: no cap)");

  std::string witness_file;
  int trials = 0;
  auto* witness = app.add_subcommand("witness", "Collinearity certificate or witness line for a coloured point set");
  witness->add_option("file", witness_file, "Point file or - for stdin");
  witness->add_option("--random", trials, "Check this many seeded random point sets instead");

  ReportArgs ra;
  auto* report = app.add_subcommand("report", "Print a table with provenance");
  report->add_option("id", ra.id, "table1-sg, table1-mr, table2, table4-partial or fmin-summary")->required();
  report->add_flag("--pretty", ra.pretty, "Aligned text instead of TSV");
  report->add_option("--q-list", ra.q_list, "Field orders for table2, comma-separated");
  report->add_option("--max-points", ra.max_points, "Largest size for the counting tables");
  report->add_option("--budget", ra.budget, "Seconds per enumeration before citing published values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*construct) return run_construct(ca);
    if (*check) return run_check(ck);
    if (*canon) return run_canon(canon_file);
    if (*iso) return run_iso(iso_a, iso_b);
    if (*enumerate_cmd) return run_enumerate(ea, workers);
    if (*embed) return run_embed(em);
    if (*fmin_cmd) return run_fmin(fa, workers);
    if (*witness) return run_witness(witness_file, trials, seed);
    if (*report) return run_report(ra, workers);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const PartialResult& e) {
    std::cerr << "sylgal: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "sylgal: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "sylgal: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
