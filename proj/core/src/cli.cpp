#include <sl2w/cli.hpp>

#include <sl2w/config.hpp>
#include <sl2w/genfun.hpp>
#include <sl2w/graphs.hpp>
#include <sl2w/json_io.hpp>
#include <sl2w/sl2rep.hpp>
#include <sl2w/sweep.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace sl2w::cli {

namespace {

using Json = json_io::Json;

// ---- text rendering ----

std::string rat_text(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

std::string poly_c_text(const PolyC& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational q = p.coeff(k);
    if (q == 0) continue;
    bool neg = q < 0;
    Rational aq = neg ? Rational(-q) : q;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool unit = aq == 1 && k > 0;
    if (!unit) out += rat_text(aq);
    if (k > 0) {
      if (!unit) out += "*";
      out += "c";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::string selem_text(const SElem& v) {
  if (v.is_zero()) return "0";
  std::string var = basis_name(v.basis);
  std::string out;
  for (int k = v.top_degree(); k >= 0; --k) {
    PolyC p = v.coeff(k);
    if (p.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += "(" + poly_c_text(p) + ")";
      continue;
    }
    std::string head = p == PolyC::constant(Rational(1)) ? "" : "(" + poly_c_text(p) + ")*";
    out += head + var;
    if (k > 1) {
      if (v.basis == Basis::P || v.basis == Basis::E)
        out = out;  // p_2, e_2 spelled with an underscore below
    }
    if (v.basis == Basis::P || v.basis == Basis::E)
      out += "_" + std::to_string(k);
    else if (k > 1)
      out += "^" + std::to_string(k);
  }
  return out;
}

Json selem_json(const SElem& v) {
  Json j;
  j["var"] = basis_name(v.basis);
  Json coeffs = Json::array();
  for (const auto& p : v.coeffs) coeffs.push_back(json_io::poly_c(p));
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json rseries_json(const RSeries& r) {
  Json terms = Json::array();
  for (const auto& [k, rk] : r.terms) {
    Json t;
    t["k"] = k;
    t["r"] = json_io::poly_c(rk);
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

RSeries parse_rseries(const Json& j) {
  RSeries out;
  for (const auto& t : j.at("terms")) out.set(t.at("k").get<int>(), json_io::parse_poly_c(t.at("r")));
  return out;
}

std::string rseries_text(const RSeries& r) {
  std::ostringstream out;
  for (const auto& [k, rk] : r.terms) out << "r_" << k << " = " << poly_c_text(rk) << "\n";
  return out.str();
}

// SElem input: JSON {"var":...,"coeffs":[...]} or compact "p0; p1; ..." with
// each p a space separated list of rationals, ascending powers of c.
SElem parse_selem(const std::string& text, Basis basis) {
  std::string trimmed = text;
  auto first = trimmed.find_first_not_of(" \t\n");
  if (first == std::string::npos) throw InputError("empty polynomial");
  if (trimmed[first] == '{') {
    Json j = Json::parse(trimmed, nullptr, true);
    return SElem(basis, json_io::parse_poly_cy(j).coeffs());
  }
  std::vector<PolyC> coeffs;
  std::stringstream parts(trimmed);
  std::string part;
  while (std::getline(parts, part, ';')) {
    std::istringstream in(part);
    std::vector<Rational> qs;
    std::string tok;
    while (in >> tok) qs.push_back(parse_rational(tok));
    coeffs.push_back(PolyC(std::move(qs)));
  }
  return SElem(basis, std::move(coeffs));
}

SimpleGraph parse_graph_arg(const std::string& text) {
  auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{')
    return json_io::parse_graph(Json::parse(text));
  return SimpleGraph::parse(text);
}

struct Session {
  Config config;
  RewriteEngine engine;
  ShareSpace space{engine};

  void open_cache() {
    if (config.cache_path) engine.load_cache(*config.cache_path);
  }
  void close_cache() {
    if (config.cache_path) engine.save_cache(*config.cache_path);
  }
};

void emit(Session& s, std::ostream& out, const Json& j, const std::string& text) {
  if (s.config.output == Config::Output::Json)
    out << j.dump() << "\n";
  else
    out << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations for the sl2 weight system on chord diagrams and shares"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON config file");

  Session session;
  int exit_code = 0;
  std::function<void()> action;

  // eval-cd
  {
    auto* cmd = app.add_subcommand("eval-cd", "value of the weight system on a chord diagram");
    auto word = std::make_shared<std::string>();
    cmd->add_option("word", *word, "double occurrence word, e.g. \"1 2 1 2\"");
    cmd->callback([&, word] {
      action = [&, word] {
        PolyC v = session.engine.wsl2_diagram(ChordDiagram::parse(*word));
        emit(session, out, json_io::poly_c(v), poly_c_text(v));
      };
    });
  }
  // eval-share
  {
    auto* cmd = app.add_subcommand("eval-share", "value of a share in the algebra S (x basis)");
    auto text = std::make_shared<std::string>();
    cmd->add_option("share", *text, "share, e.g. \"1 2 | 2 1\"")->required();
    cmd->callback([&, text] {
      action = [&, text] {
        SElem v = session.space.from_share(Share::parse(*text));
        emit(session, out, selem_json(v), selem_text(v));
      };
    });
  }
  // normal-form
  {
    auto* cmd = app.add_subcommand("normal-form", "normal form of a share in C[c1,c2,x]");
    auto text = std::make_shared<std::string>();
    cmd->add_option("share", *text)->required();
    cmd->callback([&, text] {
      action = [&, text] {
        PolyC1C2X nf = session.engine.normal_form(Share::parse(*text));
        std::string plain;
        for (const auto& [m, q] : nf.terms()) {
          if (!plain.empty()) plain += " + ";
          plain += rat_text(q);
          if (m.c1) plain += "*c1^" + std::to_string(m.c1);
          if (m.c2) plain += "*c2^" + std::to_string(m.c2);
          if (m.x) plain += "*x^" + std::to_string(m.x);
        }
        emit(session, out, json_io::poly_c1c2x(nf), plain.empty() ? "0" : plain);
      };
    });
  }
  // basis-convert
  {
    auto* cmd = app.add_subcommand("basis-convert", "convert an element of S between bases");
    auto from = std::make_shared<std::string>("y");
    auto to = std::make_shared<std::string>("e");
    auto poly = std::make_shared<std::string>();
    cmd->add_option("--from", *from, "source basis: x, y, p or e");
    cmd->add_option("--to", *to, "target basis: x, y, p or e");
    cmd->add_option("poly", *poly, "element (JSON or \"p0; p1; ...\")")->required();
    cmd->callback([&, from, to, poly] {
      action = [&, from, to, poly] {
        SElem v = parse_selem(*poly, parse_basis(*from));
        SElem w = session.space.basis_convert(v, parse_basis(*to));
        emit(session, out, selem_json(w), selem_text(w));
      };
    });
  }
  // op-matrix
  {
    auto* cmd = app.add_subcommand("op-matrix", "matrix of a chord-adding operator");
    auto op = std::make_shared<std::string>();
    auto basis = std::make_shared<std::string>();
    auto size = std::make_shared<int>(0);
    cmd->add_option("op", *op, "U, X or Y")->required();
    cmd->add_option("basis", *basis, "x, y, p or e")->required();
    cmd->add_option("size", *size)->required()->check(CLI::PositiveNumber);
    cmd->callback([&, op, basis, size] {
      action = [&, op, basis, size] {
        OperatorMatrix m =
            session.space.operator_matrix(parse_op(*op), parse_basis(*basis), *size);
        Json j;
        j["op"] = op_name(m.op);
        j["basis"] = basis_name(m.basis);
        j["size"] = m.size;
        Json cols = Json::array();
        for (const auto& col : m.columns) {
          Json c = Json::array();
          for (const auto& p : col) c.push_back(json_io::poly_c(p));
          cols.push_back(std::move(c));
        }
        j["columns"] = std::move(cols);
        std::ostringstream plain;
        for (int row = 0; row < m.size; ++row) {
          for (int col = 0; col < m.size; ++col)
            plain << (col ? " | " : "") << poly_c_text(m.entry(row, col));
          plain << "\n";
        }
        emit(session, out, j, plain.str());
      };
    });
  }
  // rseries
  {
    auto* cmd = app.add_subcommand("rseries", "residues of the join series of a share");
    auto text = std::make_shared<std::string>();
    cmd->add_option("share", *text)->required();
    cmd->callback([&, text] {
      action = [&, text] {
        RSeries r = gen_series(session.space, session.space.from_share(Share::parse(*text)));
        emit(session, out, rseries_json(r), rseries_text(r));
      };
    });
  }
  // reconstruct
  {
    auto* cmd = app.add_subcommand("reconstruct", "recover an element of S from its residues");
    auto path = std::make_shared<std::string>();
    cmd->add_option("rseries", *path, "path to an RSeries JSON file")->required();
    cmd->callback([&, path] {
      action = [&, path] {
        std::ifstream in(*path);
        if (!in) throw InputError("cannot read '" + *path + "'");
        Json j;
        in >> j;
        SElem v = reconstruct_selem(session.space, parse_rseries(j));
        emit(session, out, selem_json(v), selem_text(v));
      };
    });
  }
  // kbipartite / ksplit / kcomplete
  {
    auto* cmd = app.add_subcommand("kbipartite", "residues of the complete bipartite series");
    auto m = std::make_shared<int>(0);
    cmd->add_option("m", *m)->required()->check(CLI::NonNegativeNumber);
    cmd->callback([&, m] {
      action = [&, m] {
        RSeries r = cb_series(session.space, *m);
        emit(session, out, rseries_json(r), rseries_text(r));
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("ksplit", "residues of the complete split series");
    auto m = std::make_shared<int>(0);
    cmd->add_option("m", *m)->required()->check(CLI::NonNegativeNumber);
    cmd->callback([&, m] {
      action = [&, m] {
        RSeries r = split_series(session.space, *m);
        emit(session, out, rseries_json(r), rseries_text(r));
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("kcomplete", "value of the weight system on K_m");
    auto m = std::make_shared<int>(0);
    cmd->add_option("m", *m)->required()->check(CLI::NonNegativeNumber);
    cmd->callback([&, m] {
      action = [&, m] {
        PolyC v = k_complete(session.space, *m);
        emit(session, out, json_io::poly_c(v), poly_c_text(v));
      };
    });
  }
  // graph-r
  {
    auto* cmd = app.add_subcommand("graph-r", "residues of the join series of a graph");
    auto text = std::make_shared<std::string>();
    cmd->add_option("graph", *text, "\"n: u-v,...\" or JSON")->required();
    cmd->callback([&, text] {
      action = [&, text] {
        RSeries r = graph_rseries(session.space, parse_graph_arg(*text),
                                  session.config.max_vertices);
        emit(session, out, rseries_json(r), rseries_text(r));
      };
    });
  }
  // verify-duality
  {
    auto* cmd = app.add_subcommand("verify-duality", "check the complement duality for a graph");
    auto text = std::make_shared<std::string>();
    cmd->add_option("graph", *text)->required();
    cmd->callback([&, text] {
      action = [&, text] {
        DualityReport rep =
            verify_duality(session.space, parse_graph_arg(*text), session.config.max_vertices);
        Json j;
        j["realizable"] = rep.realizable;
        j["pass"] = rep.pass;
        j["vertices"] = rep.vertices;
        Json terms = Json::array();
        std::ostringstream plain;
        plain << (rep.realizable ? (rep.pass ? "PASS" : "FAIL") : "NOT_REALIZABLE") << "\n";
        for (const auto& t : rep.terms) {
          Json jt;
          jt["k"] = t.k;
          jt["r_graph"] = json_io::poly_c(t.r_graph);
          jt["r_complement"] = json_io::poly_c(t.r_complement);
          jt["ok"] = t.ok;
          terms.push_back(std::move(jt));
          plain << "k=" << t.k << ": r = " << poly_c_text(t.r_graph)
                << "; complement r = " << poly_c_text(t.r_complement) << "; "
                << (t.ok ? "ok" : "MISMATCH") << "\n";
        }
        j["terms"] = std::move(terms);
        emit(session, out, j, plain.str());
        if (!rep.realizable)
          exit_code = 2;
        else if (!rep.pass)
          exit_code = 1;
      };
    });
  }
  // realize
  {
    auto* cmd = app.add_subcommand("realize", "realize a graph by a share and a chord diagram");
    auto text = std::make_shared<std::string>();
    cmd->add_option("graph", *text)->required();
    cmd->callback([&, text] {
      action = [&, text] {
        SimpleGraph g = parse_graph_arg(*text);
        auto share = realize_permutation(g, session.config.max_vertices);
        auto diagram = realize_circle(g, session.config.max_vertices);
        Json j;
        j["share"] = share ? Json(share->text()) : Json(nullptr);
        j["diagram"] = diagram ? Json(diagram->text()) : Json(nullptr);
        std::ostringstream plain;
        plain << "share: " << (share ? share->text() : "none") << "\n";
        plain << "diagram: " << (diagram ? diagram->text() : "none") << "\n";
        emit(session, out, j, plain.str());
      };
    });
  }
  // bouchet
  {
    auto* cmd = app.add_subcommand("bouchet", "scan the local-equivalence orbit for obstructions");
    auto text = std::make_shared<std::string>();
    auto budget = std::make_shared<size_t>(2000);
    cmd->add_option("graph", *text)->required();
    cmd->add_option("--budget", *budget, "orbit size budget");
    cmd->callback([&, text, budget] {
      action = [&, text, budget] {
        BouchetReport rep = bouchet_scan(parse_graph_arg(*text), *budget);
        const char* verdict = rep.verdict == BouchetVerdict::Obstructed    ? "OBSTRUCTED"
                              : rep.verdict == BouchetVerdict::Clear       ? "CLEAR"
                                                                           : "INCONCLUSIVE";
        Json j;
        j["verdict"] = verdict;
        j["subgraph_hit"] = rep.subgraph_hit;
        j["induced_hit"] = rep.induced_hit;
        j["obstruction"] = rep.obstruction;
        j["orbit_explored"] = rep.orbit_explored;
        j["witness"] = rep.witness;
        std::ostringstream plain;
        plain << verdict << " (orbit " << rep.orbit_explored << ")";
        if (rep.verdict == BouchetVerdict::Obstructed)
          plain << " obstruction " << rep.obstruction << (rep.induced_hit ? " (induced)" : "")
                << " in " << rep.witness;
        emit(session, out, j, plain.str());
      };
    });
  }
  // enumerate
  {
    auto* cmd = app.add_subcommand("enumerate", "canonical chord diagrams with n chords");
    auto n = std::make_shared<int>(0);
    cmd->add_option("n", *n)->required()->check(CLI::NonNegativeNumber);
    cmd->callback([&, n] {
      action = [&, n] {
        auto all = enumerate_diagrams(*n);
        Json j;
        j["n"] = *n;
        j["count"] = all.size();
        Json words = Json::array();
        std::ostringstream plain;
        for (const auto& d : all) {
          words.push_back(d.text());
          plain << d.text() << "\n";
        }
        j["classes"] = std::move(words);
        emit(session, out, j, plain.str());
      };
    });
  }
  // oracle-check
  {
    auto* cmd = app.add_subcommand("oracle-check",
                                   "cross-validate the rewrite engine against the "
                                   "representation oracle");
    auto max_chords = std::make_shared<int>(0);
    cmd->add_option("--max-chords", *max_chords, "overrides the configured oracle budget");
    cmd->callback([&, max_chords] {
      action = [&, max_chords] {
        int budget = *max_chords > 0 ? *max_chords : session.config.max_chords_oracle;
        int checked = 0;
        for (int n = 0; n <= budget; ++n) {
          for (const auto& d : enumerate_diagrams(n)) {
            PolyC engine_v = session.engine.wsl2_diagram(d);
            PolyC oracle_v = oracle_wsl2_diagram(d, budget);
            ++checked;
            if (!(engine_v == oracle_v)) {
              Json j;
              j["ok"] = false;
              j["diagram"] = d.text();
              j["engine"] = json_io::poly_c(engine_v);
              j["oracle"] = json_io::poly_c(oracle_v);
              emit(session, out, j, "MISMATCH on " + d.text());
              exit_code = 1;
              return;
            }
          }
        }
        Json j;
        j["ok"] = true;
        j["checked"] = checked;
        j["max_chords"] = budget;
        emit(session, out, j,
             "ok: " + std::to_string(checked) + " diagrams up to " + std::to_string(budget) +
                 " chords");
      };
    });
  }
  // sweep
  {
    auto* cmd = app.add_subcommand("sweep", "run the full verification sweep");
    cmd->callback([&] {
      action = [&] {
        bool all = run_sweep(session.space, [&](const CriterionResult& r) {
          std::ostringstream line;
          line << (r.pass ? "[PASS]" : "[FAIL]") << " " << std::setw(2) << std::setfill('0')
               << r.id << " " << r.name << " (" << std::fixed << std::setprecision(1)
               << r.seconds << "s): " << r.detail;
          out << line.str() << std::endl;
        });
        out << (all ? "sweep: all criteria passed" : "sweep: FAILURES") << std::endl;
        if (!all) exit_code = 1;
      };
    });
  }

  try {
    std::vector<const char*> argv;
    argv.push_back("sl2w");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!config_path.empty()) session.config = Config::load(config_path);
    session.open_cache();
    if (action) action();
    session.close_cache();
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const NotRealizableError& e) {
    err << "not realizable: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace sl2w::cli
