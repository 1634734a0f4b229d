#include "pmaps_cli/commands.hpp"

#include <functional>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "pmaps/errors.hpp"
#include "pmaps/numtheory.hpp"
#include "pmaps/pgroup.hpp"
#include "pmaps_cli/loading.hpp"
#include "pmaps_cli/paper_suite.hpp"

#ifndef PMAPS_VERSION
#define PMAPS_VERSION "0.0.0"
#endif
#ifndef PMAPS_CORPUS_DIR
#define PMAPS_CORPUS_DIR "corpus"
#endif

namespace pmaps::cli {

namespace {

RealizeOptions realize_options(const CommonOptions& o) {
  return {o.max_order, o.max_cosets};
}

ReportDocument new_document(std::string command, std::string_view text) {
  ReportDocument doc;
  doc.version = tool_version();
  doc.command = std::move(command);
  doc.input_digest = digest(text);
  return doc;
}

GroupSummary summarize(const std::string& name, const FiniteGroup& g) {
  GroupSummary s;
  s.name = name;
  s.group_order = g.order();
  s.solvable = is_solvable(g);
  for (std::uint64_t p : prime_divisors(g.order())) {
    s.o_p.push_back({p, o_p(g, p).order()});
  }
  return s;
}

void add_theorem_warning(ReportDocument& doc, const std::string& where,
                         const TheoremViolation& e) {
  doc.diagnostics.push_back(
      {"warning", "theorem_violation", where + ": " + e.what()});
}

template <class Map>
std::vector<std::string> generator_strings(const Map& m) {
  std::vector<std::string> out;
  for (Elem x : m.tuple()) out.push_back(m.group().element(x).to_cycle_string());
  return out;
}

template <class Map>
std::optional<ExceptionalCase> identify_shape(const Map& q) {
  const std::size_t v = vef_counts(q).vertices;
  try {
    if constexpr (std::is_same_v<Map, FlaggedMap>) {
      if (identify_c32(q)) return C32{};
      if (v == 1) {
        return std::visit([](auto s) -> ExceptionalCase { return s; },
                          identify_semistar(q));
      }
    }
    if (v == 2) return identify_dipole(q);
  } catch (const ClassificationError&) {
  }
  return std::nullopt;
}

// Report, classification and (for normal maps with primitive vertex action)
// the Sylow decomposition. Theorem violations become warnings on `doc`.
template <class Map>
MapEntry describe(const Map& m, const std::string& name, bool sylow,
                  ReportDocument& doc) {
  MapEntry e;
  e.name = name;
  e.kind = std::is_same_v<Map, OrientedMap> ? "oriented" : "flagged";
  e.generators = generator_strings(m);
  e.degeneracy = m.degeneracy();
  e.report = report(m);
  if (m.degenerate() || !detect_p_map(m)) return e;
  try {
    e.classification = classify(m);
  } catch (const TheoremViolation& ex) {
    add_theorem_warning(doc, name, ex);
    return e;
  }
  if (!sylow) return e;
  e.vertex_action_primitive = vertex_action_primitive(m);
  if (e.classification->normal && *e.vertex_action_primitive) {
    try {
      e.sylow_structure = verify_sylow_structure(m);
    } catch (const TheoremViolation& ex) {
      add_theorem_warning(doc, name, ex);
    }
  }
  return e;
}

void emit(const ReportDocument& doc, const CommonOptions& options, std::ostream& out) {
  if (options.json) {
    out << nlohmann::json(doc).dump(2) << '\n';
  } else {
    render_text(doc, out);
  }
}

int finish(const ReportDocument& doc, const CommonOptions& options, std::ostream& out,
           std::ostream& err) {
  emit(doc, options, out);
  int status = exit_ok;
  for (const auto& d : doc.diagnostics) {
    err << d.severity << ": " << d.message << '\n';
    if (d.code == "theorem_violation") status = exit_theorem_violation;
  }
  return status;
}

// Maps library exceptions onto exit statuses.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse_error;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return exit_resource_error;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << '\n';
    return exit_theorem_violation;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << '\n';
    return exit_contract_violation;
  } catch (const ClassificationError& e) {
    err << "classification failure: " << e.what() << '\n';
    return exit_theorem_violation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_parse_error;
  }
}

std::vector<std::vector<Point>> cycles_of(const Permutation& p) {
  std::vector<std::vector<Point>> cycles;
  std::vector<std::uint8_t> seen(p.degree(), 0);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    std::vector<Point> c;
    for (Point j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      c.push_back(j + 1);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string tool_version() { return PMAPS_VERSION; }

void render_text(const ReportDocument& doc, std::ostream& out) {
  if (doc.group) {
    const auto& g = *doc.group;
    out << "group " << g.name << ": order " << g.group_order << ", "
        << (g.solvable ? "solvable" : "not solvable");
    for (const auto& c : g.o_p) out << ", |O_" << c.p << "| = " << c.order;
    out << '\n';
  }
  for (const auto& m : doc.maps) {
    const auto& r = m.report;
    out << "map " << m.name << " (" << m.kind << ")\n";
    out << "  generators:";
    for (const auto& s : m.generators) out << ' ' << s;
    out << '\n';
    if (m.degeneracy.any()) {
      out << "  degenerate:";
      if (m.degeneracy.t_trivial) out << " t = 1";
      if (m.degeneracy.r_trivial) out << " r = 1";
      if (m.degeneracy.l_trivial) out << " l = 1";
      if (m.degeneracy.l_equals_t) out << " l = t";
      out << '\n';
    }
    out << "  vertices " << r.vertices << ", edges " << r.edges << ", faces "
        << r.faces << ", euler " << r.euler << '\n';
    out << "  " << (r.orientable ? "orientable" : "nonorientable");
    switch (r.genus_kind) {
      case GenusKind::orientable_genus:
        out << ", genus " << r.genus;
        break;
      case GenusKind::crosscap_number:
        out << ", crosscap number " << r.genus;
        break;
      case GenusKind::degenerate:
        out << ", degenerate surface";
        break;
    }
    out << '\n';
    out << "  valency " << r.valency << ", simple graph " << yes_no(r.simple_graph);
    if (r.reflexible) out << ", " << (*r.reflexible ? "reflexible" : "chiral");
    out << '\n';
    if (m.class_size) out << "  class size " << *m.class_size << '\n';
    if (m.vertex_action_primitive) {
      out << "  vertex action " << (*m.vertex_action_primitive ? "primitive" : "imprimitive")
          << '\n';
    }
    if (const auto& c = m.classification) {
      out << "  " << c->p << "-map with k = " << c->k << ", "
          << (c->solvable ? "solvable" : "not solvable") << ", "
          << (c->normal ? "normal" : "nonnormal") << ", |G/O_" << c->p
          << "| = " << c->quotient_order;
      if (c->exceptional_case) out << ", quotient " << label(*c->exceptional_case);
      out << ", " << to_string(c->orientation_status) << '\n';
    }
    if (const auto& s = m.sylow_structure) {
      out << "  sylow: " << to_string(s->case_tag) << ", |P| = " << s->sylow_order
          << ", |P0| = " << s->p0_order;
      if (s->case_tag == SylowCase::direct_product_elementary) {
        out << ", rank " << s->complement_rank;
      } else if (s->case_tag == SylowCase::central_product_extraspecial) {
        out << ", |E| = " << s->extraspecial_order;
      }
      out << '\n';
    }
    if (m.identification) out << "  identified as " << label(*m.identification) << '\n';
  }
  for (const auto& d : doc.diagnostics) {
    out << d.severity << ": " << d.message << '\n';
  }
}

int cmd_analyze(const std::string& path, const std::optional<std::string>& map_name,
                const CommonOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    LoadedFile in = load_group_file(path, realize_options(options));
    ReportDocument doc = new_document("analyze", in.text);
    doc.group = summarize(in.file.name, *in.realized.group);
    std::vector<const MapDecl*> decls;
    if (map_name) {
      decls.push_back(&select_map(in.file, *map_name));
    } else {
      for (const auto& d : in.file.maps) decls.push_back(&d);
    }
    for (const MapDecl* d : decls) {
      AnyMap m = map_from_decl(in, *d);
      doc.maps.push_back(std::visit(
          [&](const auto& map) { return describe(map, d->name, true, doc); }, m));
    }
    return finish(doc, options, out, err);
  });
}

int cmd_quotient(const std::string& path, const std::optional<std::string>& map_name,
                 std::uint64_t p, const CommonOptions& options, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    if (!is_prime(p)) throw ContractViolation(std::to_string(p) + " is not prime");
    LoadedFile in = load_group_file(path, realize_options(options));
    const MapDecl& decl = select_map(in.file, map_name.value_or(""));
    ReportDocument doc = new_document("quotient", in.text);
    AnyMap m = map_from_decl(in, decl);
    std::visit(
        [&](const auto& map) {
          Subgroup core = o_p(map.group(), p);
          auto q = quotient_map(map, core);
          doc.group = summarize(in.file.name + "/O_" + std::to_string(p), q.group());
          MapEntry e = describe(q, decl.name + "/O_" + std::to_string(p), false, doc);
          e.identification = identify_shape(q);
          doc.maps.push_back(std::move(e));
        },
        m);
    return finish(doc, options, out, err);
  });
}

int cmd_census(const std::string& path, MapKind kind, const CommonOptions& options,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    LoadedFile in = load_group_file(path, realize_options(options));
    ReportDocument doc = new_document("census", in.text);
    const auto& g = in.realized.group;
    doc.group = summarize(in.file.name, *g);
    CensusOptions co;
    co.threads = options.threads;
    co.max_order = options.census_max_order.value_or(kDefaultCensusMaxOrder);
    auto entries = kind == MapKind::oriented ? enumerate_oriented(g, co)
                                             : enumerate_flagged(g, co);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string name = in.file.name + "#" + std::to_string(i + 1);
      MapEntry e = std::visit(
          [&](const auto& map) { return describe(map, name, false, doc); },
          entries[i].map);
      e.class_size = entries[i].class_size;
      doc.maps.push_back(std::move(e));
    }
    return finish(doc, options, out, err);
  });
}

int cmd_verify_paper(const std::string& corpus_dir, const CommonOptions& options,
                     std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto results = run_paper_suite(corpus_dir, realize_options(options));
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed();
    if (options.json) {
      nlohmann::json j = {{"tool", "pmaps"},
                          {"version", tool_version()},
                          {"command", "verify-paper"},
                          {"passed", passed},
                          {"total", results.size()}};
      j["examples"] = nlohmann::json::array();
      for (const auto& r : results) {
        j["examples"].push_back({{"name", r.name},
                                 {"passed", r.passed()},
                                 {"checks", r.checks},
                                 {"failures", r.failures}});
      }
      out << j.dump(2) << '\n';
    } else {
      for (const auto& r : results) {
        out << r.name << "  " << (r.passed() ? "PASS" : "FAIL") << "  (" << r.checks
            << " checks)\n";
        for (const auto& f : r.failures) out << "    " << f << '\n';
      }
      out << passed << "/" << results.size() << " examples pass\n";
    }
    for (const auto& r : results) {
      for (const auto& f : r.failures) err << r.name << ": " << f << '\n';
    }
    return passed == results.size() ? exit_ok : exit_verify_failed;
  });
}

int cmd_tc(const std::string& path, bool export_perms, const CommonOptions& options,
           std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::string text = read_text(path);
    GroupFile file = parse_group_file(text);
    if (file.mode != InputMode::presentation) {
      throw ContractViolation("tc needs a presentation-mode file");
    }
    CosetTable table = todd_coxeter(file.presentation, {}, options.max_cosets);
    if (export_perms) {
      GroupFile perms = file;
      perms.mode = InputMode::permutation;
      perms.presentation = {};
      auto gens = table.permutations();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        perms.perms.push_back({file.symbols[i], cycles_of(gens[i])});
      }
      out << "# cosets: " << table.num_cosets() << '\n' << print_group_file(perms);
    } else if (options.json) {
      nlohmann::json j = {{"tool", "pmaps"},         {"version", tool_version()},
                          {"command", "tc"},         {"input_digest", digest(text)},
                          {"cosets", table.num_cosets()}};
      out << j.dump(2) << '\n';
    } else {
      out << "cosets: " << table.num_cosets() << '\n';
    }
    return exit_ok;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regular and orientably-regular maps with a prime-power number of vertices",
               "pmaps"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  CommonOptions common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-order", common.max_order, "Largest group order to build")
        ->each([&](const std::string&) { common.census_max_order = common.max_order; });
    sub->add_option("--max-cosets", common.max_cosets, "Coset enumeration limit");
    sub->add_option("--threads", common.threads, "Worker threads for the census")
        ->check(CLI::Range(1u, 256u));
    sub->add_flag("--json", common.json, "Machine-readable output");
  };

  std::string file;
  std::string map_name;
  std::uint64_t prime = 0;
  std::string kind_name;
  std::string corpus = PMAPS_CORPUS_DIR;
  bool export_perms = false;

  auto* analyze = app.add_subcommand("analyze", "Report on the maps of a group file");
  analyze->add_option("file", file, "Group file")->required();
  analyze->add_option("--map", map_name, "Map to analyze (default: all)");
  add_common(analyze);

  auto* quotient = app.add_subcommand("quotient", "Quotient map by O_p(G)");
  quotient->add_option("file", file, "Group file")->required();
  quotient->add_option("--map", map_name, "Map to project");
  quotient->add_option("--p", prime, "Prime p")->required();
  add_common(quotient);

  auto* census = app.add_subcommand("census", "All maps of a group up to isomorphism");
  census->add_option("file", file, "Group file")->required();
  census->add_option("--kind", kind_name, "oriented or flagged")
      ->required()
      ->check(CLI::IsMember({"oriented", "flagged"}));
  add_common(census);

  auto* verify = app.add_subcommand("verify-paper", "Check the shipped corpus examples");
  verify->add_option("--corpus", corpus, "Corpus directory");
  add_common(verify);

  auto* tc = app.add_subcommand("tc", "Coset enumeration of a presentation");
  tc->add_option("file", file, "Presentation-mode group file")->required();
  tc->add_flag("--export", export_perms, "Print the group as permutations");
  add_common(tc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_parse_error;
  }

  std::optional<std::string> selected;
  if (!map_name.empty()) selected = map_name;
  if (analyze->parsed()) return cmd_analyze(file, selected, common, out, err);
  if (quotient->parsed()) return cmd_quotient(file, selected, prime, common, out, err);
  if (census->parsed()) {
    return cmd_census(file, kind_name == "oriented" ? MapKind::oriented : MapKind::flagged,
                      common, out, err);
  }
  if (verify->parsed()) return cmd_verify_paper(corpus, common, out, err);
  return cmd_tc(file, export_perms, common, out, err);
}

}  // namespace pmaps::cli
