// Command-line driver: enumerate | green | schutz-pres | homotopy-base |
// verify, over the line-oriented presentation format. Exit codes: 0 success,
// 1 input error, 2 resource cap, 3 internal assertion / verification failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "schutzen/error.hpp"
#include "schutzen/json_io.hpp"
#include "schutzen/pipeline.hpp"

using namespace schutzen;

namespace {

struct RunConfig {
  std::string input_path;
  std::string h_class = "1";
  std::string stab_word = "1";
  std::string base_file;  // optional user homotopy base for the original
  int max_elements = 5000;
  int kb_max_rules = 2000;
  int kb_max_word_len = 64;
  long path_cap = 200000;
  std::string format = "text";
  bool verbose = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PipelineOptions options_of(const RunConfig& cfg) {
  PipelineOptions opts;
  opts.max_elements = cfg.max_elements;
  opts.kb.max_rules = cfg.kb_max_rules;
  opts.kb.max_word_len = cfg.kb_max_word_len;
  opts.path.max_nodes = cfg.path_cap;
  opts.group.max_elements = cfg.max_elements;
  opts.group.kb = opts.kb;
  return opts;
}

std::unique_ptr<Pipeline> make_pipeline(const RunConfig& cfg,
                                        const MonoidPresentation& pres) {
  Word selector = pres.alphabet.parse_word(cfg.h_class);
  Word stab = pres.alphabet.parse_word(cfg.stab_word);
  return Pipeline::build(pres, selector, stab, options_of(cfg));
}

std::string tag_string(const SchutzRelation& rel, const SchutzData& d) {
  std::string out;
  for (std::size_t k = 0; k < rel.tags.size(); ++k) {
    if (k > 0) {
      out += "+";
    }
    out += format_tag(rel.tags[k], d);
  }
  return out;
}

int cmd_enumerate(const RunConfig& cfg) {
  auto pres = parse_presentation(slurp(cfg.input_path));
  auto cs = knuth_bendix(pres, options_of(cfg).kb);
  auto u = enumerate_universe(cs, cfg.max_elements);
  if (cfg.format == "json") {
    std::ostringstream out;
    out << "{\n  \"elements\": " << u.size()
        << ",\n  \"rules\": " << cs.rules().size() << "\n}\n";
    std::cout << out.str();
  } else {
    std::cout << u.size() << " elements\n";
    std::cout << "completed system: " << cs.rules().size() << " rules\n";
    if (cfg.verbose) {
      for (const Rule& r : cs.rules()) {
        std::cout << "  " << pres.alphabet.format_word(r.lhs) << " -> "
                  << pres.alphabet.format_word(r.rhs) << "\n";
      }
      std::cout << "right Cayley table (element x letter):\n";
      for (int x = 0; x < u.size(); ++x) {
        std::cout << "  " << pres.alphabet.format_word(u.word(x)) << ":";
        for (Letter a = 0; a < static_cast<int>(pres.alphabet.size()); ++a) {
          std::cout << " "
                    << pres.alphabet.format_word(u.word(u.right(x, a)));
        }
        std::cout << "\n";
      }
    }
  }
  return 0;
}

void print_class_partition(const char* label,
                           const std::vector<std::vector<int>>& classes,
                           const MonoidUniverse& u) {
  std::cout << label << " (" << classes.size() << "):\n";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::cout << "  [" << c << "] {";
    for (std::size_t k = 0; k < classes[c].size(); ++k) {
      std::cout << (k ? ", " : "")
                << u.alphabet().format_word(u.word(classes[c][k]));
    }
    std::cout << "}\n";
  }
}

int cmd_green(const RunConfig& cfg) {
  auto pres = parse_presentation(slurp(cfg.input_path));
  auto p = make_pipeline(cfg, pres);
  const auto& star = p->data.star();
  const auto& lam = p->data.lambda();
  if (cfg.format == "json") {
    std::ostringstream out;
    out << "{\n  \"r_classes\": " << p->green.r_classes.size()
        << ",\n  \"l_classes\": " << p->green.l_classes.size()
        << ",\n  \"h_classes\": " << p->green.h_classes.size()
        << ",\n  \"lambda\": " << lam.size() << ",\n  \"I\": " << star.size()
        << ",\n  \"J\": " << star.J.size()
        << ",\n  \"omega\": " << star.omega + 1
        << ",\n  \"eta\": " << star.eta + 1 << "\n}\n";
    std::cout << out.str();
    return 0;
  }
  print_class_partition("R-classes", p->green.r_classes, p->universe);
  print_class_partition("L-classes", p->green.l_classes, p->universe);
  print_class_partition("H-classes", p->green.h_classes, p->universe);
  std::cout << "selected H-class: [" << p->h_class_id
            << "], h = " << pres.alphabet.format_word(p->data.h_word())
            << "\n";
  std::cout << "Lambda (" << lam.size() << "): H-class ids {";
  for (int k = 0; k < lam.size(); ++k) {
    std::cout << (k ? ", " : "") << lam.h_class_ids[k];
  }
  std::cout << "}\n";
  std::cout << "I (" << star.size() << " R-classes), distinguished: 1=i"
            << star.one + 1 << ", omega=i" << star.omega + 1 << ", eta=i"
            << star.eta + 1 << "\n";
  std::cout << "J = {";
  for (std::size_t k = 0; k < star.J.size(); ++k) {
    std::cout << (k ? ", " : "") << "i" << star.J[k] + 1;
  }
  std::cout << "}\n";
  if (cfg.verbose) {
    for (int i = 0; i < star.size(); ++i) {
      std::cout << "  r(i" << i + 1
                << ") = " << pres.alphabet.format_word(p->data.r(i)) << "\n";
    }
  }
  return 0;
}

PresentationDoc make_presentation_doc(const RunConfig& cfg, Pipeline& p,
                                      long checked, long failures) {
  PresentationDoc doc;
  const Alphabet& a = p.input.alphabet;
  doc.alphabet = a.names();
  for (const Rule& r : p.input.rules) {
    doc.input_rules.push_back({a.format_word(r.lhs), a.format_word(r.rhs)});
  }
  for (const Rule& r : p.cs.rules()) {
    doc.completed_rules.push_back({a.format_word(r.lhs), a.format_word(r.rhs)});
  }
  doc.h_class = cfg.h_class;
  doc.h_word = a.format_word(p.data.h_word());
  doc.stab_word = a.format_word(p.data.e_word());
  doc.generators = p.q.b_alphabet.names();
  for (const auto& rel : p.q.relations) {
    RelationTriple t{p.q.b_alphabet.format_word(rel.lhs),
                     p.q.b_alphabet.format_word(rel.rhs),
                     tag_string(rel, p.data)};
    (rel.trivial() ? doc.trivial_relations : doc.relations)
        .push_back(std::move(t));
  }
  doc.verified = checked;
  doc.failures = failures;
  return doc;
}

int cmd_schutz_pres(const RunConfig& cfg) {
  auto pres = parse_presentation(slurp(cfg.input_path));
  auto p = make_pipeline(cfg, pres);
  long checked = 0, failures = 0;
  for (const auto& rel : p->q.relations) {
    ++checked;
    if (!verify_relation(rel.lhs, rel.rhs, p->data)) {
      ++failures;
    }
  }
  if (cfg.format == "json") {
    std::cout << emit_presentation_doc(
        make_presentation_doc(cfg, *p, checked, failures));
  } else {
    std::cout << "generators (" << p->q.b_letters.size() << "):";
    for (const auto& name : p->q.b_alphabet.names()) {
      std::cout << " " << name;
    }
    std::cout << "\nrelations:\n";
    for (const auto& rel : p->q.relations) {
      if (rel.trivial() && !cfg.verbose) {
        continue;
      }
      std::cout << "  " << p->q.b_alphabet.format_word(rel.lhs) << " = "
                << p->q.b_alphabet.format_word(rel.rhs) << "    # "
                << tag_string(rel, p->data)
                << (rel.trivial() ? " (trivial)" : "") << "\n";
    }
    std::cout << "verification: " << checked << " relations checked, "
              << failures << " failures\n";
  }
  return failures == 0 ? 0 : 3;
}

int cmd_homotopy_base(const RunConfig& cfg) {
  auto pres = parse_presentation(slurp(cfg.input_path));
  auto p = make_pipeline(cfg, pres);
  std::optional<std::vector<DGPath>> user_x;
  if (!cfg.base_file.empty()) {
    user_x = parse_x_file(slurp(cfg.base_file), pres.alphabet);
    p->use_original_presentation();
    for (const DGPath& x : *user_x) {
      if (!path_valid(x, p->ctx.p_pres.rules) ||
          !path_closed(x, p->ctx.p_pres.rules)) {
        throw ParseError(0, "user homotopy base member not a closed path");
      }
    }
  }
  auto art = build_homotopy(*p, std::move(user_x));

  HomotopyBaseDoc doc;
  doc.b_alphabet = p->q.b_alphabet.names();
  for (const auto& rel : p->q.relations) {
    doc.relations.push_back({p->q.b_alphabet.format_word(rel.lhs),
                             p->q.b_alphabet.format_word(rel.rhs),
                             tag_string(rel, p->data)});
  }
  doc.x_size = art.x.size();
  doc.y1 = art.y1;
  doc.y2 = art.y2;
  doc.y3 = art.y3;
  const auto& qrules = p->ctx.q_pres.rules;
  for (const auto* family : {&art.y1, &art.y2, &art.y3}) {
    for (const DGPath& member : *family) {
      ++doc.closed_checked;
      if (!path_valid(member, qrules) || !path_closed(member, qrules)) {
        ++doc.closed_failures;
      }
    }
  }
  if (cfg.format == "json") {
    std::cout << emit_homotopy_doc(doc);
  } else {
    std::cout << "X size: " << art.x.size() << "\n";
    std::cout << "|Y1| = " << art.y1.size() << ", |Y2| = " << art.y2.size()
              << ", |Y3| = " << art.y3.size() << "\n";
    std::cout << "closedness audit: " << doc.closed_checked << " members, "
              << doc.closed_failures << " failures\n";
    if (cfg.verbose) {
      auto show = [&](const char* name, const std::vector<DGPath>& fam) {
        std::cout << name << ":\n";
        for (const DGPath& m : fam) {
          std::cout << "  base " << p->q.b_alphabet.format_word(m.base)
                    << ", " << m.size() << " edges\n";
        }
      };
      show("Y1", art.y1);
      show("Y2", art.y2);
      show("Y3", art.y3);
    }
  }
  return doc.closed_failures == 0 ? 0 : 3;
}

int cmd_verify(const RunConfig& cfg) {
  auto pres = parse_presentation(slurp(cfg.input_path));
  Word selector = pres.alphabet.parse_word(cfg.h_class);
  Word stab = pres.alphabet.parse_word(cfg.stab_word);
  const bool corrupt = std::getenv("SCHUTZEN_TEST_CORRUPT_KAPPA") != nullptr;
  auto p = corrupt ? Pipeline::build_corrupted(pres, selector, stab,
                                               options_of(cfg))
                   : Pipeline::build(pres, selector, stab, options_of(cfg));

  long checked = 0, failures = 0;
  for (const auto& rel : p->q.relations) {
    ++checked;
    if (!verify_relation(rel.lhs, rel.rhs, p->data)) {
      ++failures;
    }
  }

  // lemma spot checks (5.2(ii) and 5.3) on random words
  auto seed_env = std::getenv("SCHUTZEN_SEED");
  std::mt19937_64 rng(seed_env ? std::strtoull(seed_env, nullptr, 10)
                               : 0x5eed5eedULL);
  const SchutzData& d = p->data;
  const MonoidUniverse& u = p->universe;
  const int na = static_cast<int>(pres.alphabet.size());
  long lemma_checked = 0, lemma_failures = 0;
  std::uniform_int_distribution<int> len(0, 8);
  auto random_word = [&](int letters) {
    Word w(len(rng));
    std::uniform_int_distribution<int> pick(0, letters - 1);
    for (Letter& x : w) {
      x = pick(rng);
    }
    return w;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    if (na > 0) {
      Word w = random_word(na);
      for (int j : d.star().J) {
        const int wj = d.star().act_word(w, j);
        if (wj == kDead) {
          continue;
        }
        ++lemma_checked;
        if (u.element_of(cat(w, d.r(j))) !=
            u.element_of(cat(d.r(wj), d.kappa(w, j)))) {
          ++lemma_failures;
        }
      }
    }
    if (d.b_count() > 0) {
      Word wb = random_word(d.b_count());
      ++lemma_checked;
      if (u.element_of(cat(d.h_word(), d.psi(wb))) !=
          u.element_of(cat(d.pi(wb), d.h_word()))) {
        ++lemma_failures;
      }
    }
  }

  auto table = enumerate_group(p->q, options_of(cfg).group);
  auto direct = schutz_direct(p->universe, p->green, p->h_class_id);
  const bool iso = isomorphic(table, direct);
  const bool order_ok =
      table.order() ==
      static_cast<int>(p->green.h_classes[p->h_class_id].size());

  if (cfg.format == "json") {
    std::ostringstream out;
    out << "{\n  \"presented_order\": " << table.order()
        << ",\n  \"direct_order\": " << direct.order()
        << ",\n  \"h_class_size\": "
        << p->green.h_classes[p->h_class_id].size()
        << ",\n  \"isomorphic\": " << (iso ? "true" : "false")
        << ",\n  \"relations_checked\": " << checked
        << ",\n  \"relation_failures\": " << failures
        << ",\n  \"lemma_checked\": " << lemma_checked
        << ",\n  \"lemma_failures\": " << lemma_failures << "\n}\n";
    std::cout << out.str();
  } else {
    std::cout << "presented group order: " << table.order() << "\n";
    std::cout << "direct group order:    " << direct.order() << "\n";
    std::cout << "|H| = " << p->green.h_classes[p->h_class_id].size() << "\n";
    std::cout << "isomorphic: " << (iso ? "yes" : "NO") << "\n";
    std::cout << "relations: " << checked << " checked, " << failures
              << " failures\n";
    std::cout << "lemma suite: " << lemma_checked << " checked, "
              << lemma_failures << " failures\n";
  }
  return (failures == 0 && lemma_failures == 0 && iso && order_ok) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schutzenberger group presentations and homotopy bases"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string command;
  for (const char* name :
       {"enumerate", "green", "schutz-pres", "homotopy-base", "verify"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", cfg.input_path, "presentation file")
        ->required();
    sub->add_option("--h-class", cfg.h_class,
                    "word selecting the H-class (default the identity's)");
    sub->add_option("--stab-word", cfg.stab_word,
                    "pointwise stabilizer word e (default empty)");
    sub->add_option("--max-elements", cfg.max_elements, "element cap");
    sub->add_option("--kb-max-rules", cfg.kb_max_rules, "completion cap");
    sub->add_option("--path-cap", cfg.path_cap, "path search node cap");
    sub->add_option("--format", cfg.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--verbose", cfg.verbose, "more output");
    if (std::string(name) == "homotopy-base") {
      sub->add_option("--base-file", cfg.base_file,
                      "user homotopy base (JSON) over the original "
                      "presentation");
    }
    sub->callback([&cfg, &command, name] { command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (command == "enumerate") {
      return cmd_enumerate(cfg);
    }
    if (command == "green") {
      return cmd_green(cfg);
    }
    if (command == "schutz-pres") {
      return cmd_schutz_pres(cfg);
    }
    if (command == "homotopy-base") {
      return cmd_homotopy_base(cfg);
    }
    if (command == "verify") {
      return cmd_verify(cfg);
    }
    std::cerr << "unknown command\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const LimitExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 2;
  } catch (const SearchExhausted& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 2;
  } catch (const NotPointwiseStabilizer& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
