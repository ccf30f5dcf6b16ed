#include "tropgr/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tropgr/degeneration.hpp"
#include "tropgr/errors.hpp"
#include "tropgr/extrat.hpp"
#include "tropgr/laurent.hpp"
#include "tropgr/newick.hpp"
#include "tropgr/pairs.hpp"
#include "tropgr/plucker.hpp"
#include "tropgr/poly_text.hpp"
#include "tropgr/quotient.hpp"
#include "tropgr/rational.hpp"
#include "tropgr/section.hpp"
#include "tropgr/tree.hpp"
#include "tropgr/trop_point.hpp"

namespace tropgr {
namespace {

using nlohmann::ordered_json;

std::string read_text(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IncompatibleInputs("cannot open " + path);
    buf << f.rdbuf();
  }
  return buf.str();
}

TropPoint load_metric(const std::string& path) {
  return parse_metric_json(read_text(path));
}

Pair parse_pair_arg(const std::string& text) {
  const auto bad = [&] {
    return IncompatibleInputs("expected a pair like 1,3, got \"" + text + "\"");
  };
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) throw bad();
  int a = 0, b = 0;
  std::size_t used_a = 0, used_b = 0;
  try {
    a = std::stoi(text.substr(0, comma), &used_a);
    b = std::stoi(text.substr(comma + 1), &used_b);
  } catch (const std::exception&) {
    throw bad();
  }
  if (used_a != comma || used_b != text.size() - comma - 1) throw bad();
  return Pair(a, b);
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(Rat::parse(text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// "-" for the empty set, else space separated "a,b" entries.
std::string pairs_text(const std::set<Pair>& s) {
  if (s.empty()) return "-";
  std::string out;
  for (const Pair& p : s) {
    if (!out.empty()) out += ' ';
    out += p.to_string();
  }
  return out;
}

ordered_json pairs_json(const std::set<Pair>& s) {
  ordered_json arr = ordered_json::array();
  for (const Pair& p : s) arr.push_back(p.to_string());
  return arr;
}

std::string gens_text(const std::vector<ResiduePoly>& gens) {
  if (gens.empty()) return "-";
  std::string out;
  for (const ResiduePoly& g : gens) {
    if (!out.empty()) out += "; ";
    out += print_residue(g);
  }
  return out;
}

ordered_json gens_json(const std::vector<ResiduePoly>& gens) {
  ordered_json arr = ordered_json::array();
  for (const ResiduePoly& g : gens) arr.push_back(print_residue(g));
  return arr;
}

const char* text_bool(bool v) { return v ? "true" : "false"; }

void emit(std::ostream& out, const ordered_json& doc) {
  out << doc.dump(2) << "\n";
}

TropPoint load_valid_metric(const std::string& path) {
  TropPoint x = load_metric(path);
  if (!validate_point(x).ok)
    throw IncompatibleInputs("input violates the tropical quartet condition");
  return x;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact computations on tropical Pluecker vectors of 2 x n matrices",
               "tropgr"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expanded help for every subcommand");

  int rc = 0;

  // check-metric
  std::string check_path;
  bool check_json = false;
  auto* check = app.add_subcommand(
      "check-metric", "Validate the four point condition of a metric file");
  check->add_option("file", check_path, "metric JSON, - for stdin")->required();
  check->add_flag("--json", check_json, "machine readable output");
  check->callback([&] {
    const Verdict v = validate_point(load_metric(check_path));
    if (check_json) {
      ordered_json doc;
      doc["ok"] = v.ok;
      if (!v.ok) doc["witness"] = v.witness;
      emit(out, doc);
    } else if (v.ok) {
      out << "ok\n";
    } else {
      out << "violation at quartet " << v.witness[0] << ',' << v.witness[1]
          << ',' << v.witness[2] << ',' << v.witness[3] << "\n";
    }
    rc = v.ok ? 0 : 1;
  });

  // tree infer
  auto* tree = app.add_subcommand("tree", "Tree type operations");
  tree->require_subcommand(1);
  std::string infer_path;
  bool infer_json = false;
  auto* infer = tree->add_subcommand(
      "infer", "Topology and vanishing set realizing a metric");
  infer->add_option("file", infer_path, "metric JSON, - for stdin")->required();
  infer->add_flag("--json", infer_json, "machine readable output");
  infer->callback([&] {
    const TropPoint x = load_metric(infer_path);
    const auto [T, J] = infer_type(x);
    if (infer_json) {
      ordered_json doc;
      doc["topology"] = T.code();
      doc["trivalent"] = T.trivalent();
      doc["vanishing"] = pairs_json(J);
      emit(out, doc);
    } else {
      out << "topology: " << T.code() << "\n"
          << "trivalent: " << text_bool(T.trivalent()) << "\n"
          << "vanishing: " << pairs_text(J) << "\n";
    }
  });

  // metric from-tree
  auto* metric = app.add_subcommand("metric", "Metric constructions");
  metric->require_subcommand(1);
  std::string fromtree_path;
  bool fromtree_json = false;
  auto* fromtree = metric->add_subcommand(
      "from-tree", "Leaf path sums of a Newick tree, as metric JSON");
  fromtree->add_option("file", fromtree_path, "Newick file, - for stdin")
      ->required();
  fromtree->add_flag("--json", fromtree_json,
                     "machine readable output (same as the default)");
  fromtree->callback([&] {
    const PhyloTree t = newick_parse(read_text(fromtree_path));
    out << metric_to_json(metric_from_tree(t)) << "\n";
  });

  // section eval | verify | glue
  auto* section = app.add_subcommand("section", "Compatible coordinate charts");
  section->require_subcommand(1);

  std::string eval_path, eval_func, eval_anchor;
  bool eval_json = false;
  auto* seval = section->add_subcommand(
      "eval", "Evaluate the section seminorm on a Laurent polynomial");
  seval->add_option("file", eval_path, "metric JSON, - for stdin")->required();
  seval->add_option("-f,--function", eval_func,
                    "Laurent polynomial in the u_i_j variables")
      ->required();
  seval->add_option("--ij", eval_anchor,
                    "anchor pair a,b; default the first finite coordinate");
  seval->add_flag("--json", eval_json, "machine readable output");
  seval->callback([&] {
    const TropPoint x = load_valid_metric(eval_path);
    const LaurentPoly f = parse_poly(eval_func);
    const Seminorm s = eval_anchor.empty()
                           ? section_point(x)
                           : section_point_at(x, parse_pair_arg(eval_anchor));
    const ExtRat v = s.eval(f);
    if (eval_json) {
      ordered_json doc;
      doc["value"] = v.to_string();
      emit(out, doc);
    } else {
      out << v.to_string() << "\n";
    }
  });

  std::string verify_path, verify_anchor;
  bool verify_json = false;
  auto* sverify = section->add_subcommand(
      "verify", "Check the constructed chart against the input coordinates");
  sverify->add_option("file", verify_path, "metric JSON, - for stdin")
      ->required();
  sverify->add_option("--ij", verify_anchor,
                      "anchor pair a,b; default the first finite coordinate");
  sverify->add_flag("--json", verify_json, "machine readable output");
  sverify->callback([&] {
    const TropPoint x = load_valid_metric(verify_path);
    const Seminorm s = verify_anchor.empty()
                           ? section_point(x)
                           : section_point_at(x, parse_pair_arg(verify_anchor));
    const SectionReport rep = verify_section(s);
    if (verify_json) {
      ordered_json doc;
      doc["ok"] = rep.ok;
      doc["detail"] = rep.detail;
      emit(out, doc);
    } else if (rep.ok) {
      out << "ok\n";
    } else {
      out << "fail: " << rep.detail << "\n";
    }
    rc = rep.ok ? 0 : 1;
  });

  std::string glue_path, glue_ij, glue_pq;
  bool glue_json = false;
  auto* sglue = section->add_subcommand(
      "glue", "Compare the charts anchored at two pairs on shared functions");
  sglue->add_option("file", glue_path, "metric JSON, - for stdin")->required();
  sglue->add_option("--ij", glue_ij, "first anchor pair a,b")->required();
  sglue->add_option("--pq", glue_pq, "second anchor pair c,d")->required();
  sglue->add_flag("--json", glue_json, "machine readable output");
  sglue->callback([&] {
    const TropPoint x = load_valid_metric(glue_path);
    const bool ok =
        verify_gluing(x, parse_pair_arg(glue_ij), parse_pair_arg(glue_pq));
    if (glue_json) {
      ordered_json doc;
      doc["ok"] = ok;
      emit(out, doc);
    } else {
      out << (ok ? "ok\n" : "mismatch\n");
    }
    rc = ok ? 0 : 1;
  });

  // initial-ideal
  std::string ideal_path;
  bool ideal_json = false;
  auto* ideal = app.add_subcommand(
      "initial-ideal", "Generators of the initial ideal at a metric");
  ideal->add_option("file", ideal_path, "metric JSON, - for stdin")->required();
  ideal->add_flag("--json", ideal_json, "machine readable output");
  ideal->callback([&] {
    const TropPoint x = load_metric(ideal_path);
    const bool valid = validate_point(x).ok;
    if (!valid) {
      if (ideal_json) {
        ordered_json doc;
        doc["verdict"] = "unit_ideal";
        emit(out, doc);
      } else {
        out << "unit ideal\n";
      }
      rc = 1;
      return;
    }
    const MultiplicityCertificate cert = multiplicity_certificate(x);
    const auto gens = initial_ideal_gens(x);
    if (ideal_json) {
      ordered_json doc;
      doc["verdict"] = "multiplicity_one";
      doc["ij"] = cert.ij.to_string();
      doc["J"] = pairs_json(cert.J);
      doc["I"] = pairs_json(cert.I);
      doc["generators"] = gens_json(gens);
      emit(out, doc);
    } else {
      out << "anchor: " << cert.ij.to_string() << "\n"
          << "J: " << pairs_text(cert.J) << "\n"
          << "I: " << pairs_text(cert.I) << "\n"
          << "generators: " << gens.size() << "\n";
      for (const ResiduePoly& g : gens) out << print_residue(g) << "\n";
    }
  });

  // multiplicity
  std::string mult_path;
  bool mult_json = false;
  auto* mult = app.add_subcommand(
      "multiplicity", "Multiplicity certificate of the initial degeneration");
  mult->add_option("file", mult_path, "metric JSON, - for stdin")->required();
  mult->add_flag("--json", mult_json, "machine readable output");
  mult->callback([&] {
    const TropPoint x = load_metric(mult_path);
    if (validate_point(x).ok) {
      const MultiplicityCertificate cert = multiplicity_certificate(x);
      if (cert.verdict == DegenVerdict::multiplicity_one) {
        if (mult_json) {
          ordered_json doc;
          doc["verdict"] = "multiplicity_one";
          doc["ij"] = cert.ij.to_string();
          doc["J"] = pairs_json(cert.J);
          doc["I"] = pairs_json(cert.I);
          doc["multiplicity"] = cert.multiplicity;
          emit(out, doc);
        } else {
          out << "multiplicity: " << cert.multiplicity << "\n";
        }
        rc = 0;
        return;
      }
    }
    if (mult_json) {
      ordered_json doc;
      doc["verdict"] = "unit_ideal";
      doc["multiplicity"] = 0;
      emit(out, doc);
    } else {
      out << "unit ideal (multiplicity 0)\n";
    }
    rc = 1;
  });

  // gr24-catalog
  bool cat_json = false;
  auto* cat = app.add_subcommand(
      "gr24-catalog", "Golden degeneration table for four leaves");
  cat->add_flag("--json", cat_json, "machine readable output");
  cat->callback([&] {
    const std::vector<CatalogEntry> entries = gr24_catalog();
    if (cat_json) {
      ordered_json arr = ordered_json::array();
      for (const CatalogEntry& e : entries) {
        ordered_json doc;
        doc["case"] = e.name;
        doc["J"] = pairs_json(e.J);
        doc["ij"] = e.ij.to_string();
        doc["I"] = pairs_json(e.I);
        doc["generators"] = gens_json(e.generators);
        arr.push_back(std::move(doc));
      }
      emit(out, arr);
    } else {
      for (const CatalogEntry& e : entries)
        out << e.name << " | J: " << pairs_text(e.J)
            << " | I: " << pairs_text(e.I)
            << " | gens: " << gens_text(e.generators) << "\n";
    }
  });

  // fan
  int fan_n = 5;
  bool fan_json = false;
  auto* fan = app.add_subcommand(
      "fan", "Split complex of the quotient fan (Petersen graph at n = 5)");
  fan->add_option("--n", fan_n, "number of leaves (4..7)");
  fan->add_flag("--json", fan_json, "machine readable output");
  fan->callback([&] {
    const SplitComplex sc = split_complex(fan_n);
    if (fan_json) {
      out << split_complex_json(sc) << "\n";
    } else {
      out << "vertices: " << sc.vertices.size() << "\n"
          << "edges: " << sc.edges.size() << "\n"
          << "regular: " << text_bool(sc.regular()) << "\n"
          << "girth: " << sc.girth() << "\n"
          << "petersen: " << text_bool(sc.petersen()) << "\n";
    }
  });

  // fiber-check
  int fiber_n = 5, fiber_count = 10;
  std::uint64_t fiber_seed = 0;
  bool fiber_json = false;
  auto* fiber = app.add_subcommand(
      "fiber-check",
      "Sample monomial matrices and compare evaluation against the section");
  fiber->add_option("--n", fiber_n, "number of columns (4..8)");
  fiber->add_option("--seed", fiber_seed, "base RNG seed");
  fiber->add_option("--count", fiber_count, "sampling rounds, 3 matrices each");
  fiber->add_flag("--json", fiber_json, "machine readable output");
  fiber->callback([&] {
    int checks = 0;
    bool ok = true;
    std::vector<std::string> failures;
    for (int i = 0; i < fiber_count; ++i) {
      const FiberReport rep =
          sample_fiber_and_check_max(fiber_n, fiber_seed + i, 20);
      checks += rep.checked;
      ok = ok && rep.ok;
      failures.insert(failures.end(), rep.failures.begin(),
                      rep.failures.end());
    }
    if (fiber_json) {
      ordered_json doc;
      doc["rounds"] = fiber_count;
      doc["matrices"] = 3 * fiber_count;
      doc["checks"] = checks;
      doc["ok"] = ok;
      doc["failures"] = failures;
      emit(out, doc);
    } else {
      out << "rounds: " << fiber_count << "\n"
          << "matrices: " << 3 * fiber_count << "\n"
          << "checks: " << checks << "\n"
          << "ok: " << text_bool(ok) << "\n";
      for (const std::string& f : failures) out << "fail: " << f << "\n";
    }
    rc = ok ? 0 : 1;
  });

  // descent-check
  std::string descent_path, descent_lambda;
  bool descent_json = false;
  auto* descent = app.add_subcommand(
      "descent-check",
      "Check invariance of the section along a cut metric shift");
  descent->add_option("file", descent_path, "metric JSON, - for stdin")
      ->required();
  descent->add_option("--lambda", descent_lambda,
                      "comma separated rational weights, one per leaf")
      ->required();
  descent->add_flag("--json", descent_json, "machine readable output");
  descent->callback([&] {
    const TropPoint x = load_metric(descent_path);
    const bool ok = verify_descent(x, parse_rat_list(descent_lambda));
    if (descent_json) {
      ordered_json doc;
      doc["ok"] = ok;
      emit(out, doc);
    } else {
      out << "descends: " << text_bool(ok) << "\n";
    }
    rc = ok ? 0 : 1;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
    return rc;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotTreeMetric& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NoConeFound& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const CertificateFailure& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tropgr
