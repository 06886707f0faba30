// fqt-domain: command-line front end for the boundary-triple library.
// Field configuration (--q, --modulus) is global to the invocation; every
// argument is interpreted over that one field.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqt/domain.hpp"
#include "fqt/dynamics.hpp"
#include "fqt/oracle.hpp"
#include "fqt/parse.hpp"
#include "fqt/tree.hpp"

using json = nlohmann::json;
using namespace fqt;

namespace {

// Configuration problems are reported like parse errors (exit 2).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message) : Error("ConfigError", message) {}
};

FieldSpec build_field(uint32_t q, const std::string& modulus_text) {
  if (q < 2) throw ConfigError("--q must be at least 2");
  uint32_t p = 0;
  for (uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;  // q itself is prime
  uint32_t k = 0;
  for (uint32_t m = q; m > 1; m /= p) {
    if (m % p != 0) throw ConfigError("--q must be a prime power, got " + std::to_string(q));
    ++k;
  }
  if (k == 1) {
    if (!modulus_text.empty())
      throw ConfigError("--modulus only applies to extension fields (q = p^k, k > 1)");
    return FieldSpec(p);
  }
  if (modulus_text.empty())
    throw ConfigError("--modulus is required for q = " + std::to_string(p) + "^" +
                      std::to_string(k));
  return FieldSpec(p, k, parse_modulus(p, modulus_text));
}

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

// The `act` argument may be a triple, a vertex, or a point; dispatch on a
// successful parse.
std::string act_any(const FieldSpec& F, const GammaElem& g, const std::string& text) {
  try {
    return act_triple(g, parse_triple(F, text)).to_string();
  } catch (const ParseError&) {
  }
  try {
    return act_vertex(g, parse_vertex(F, text)).to_string();
  } catch (const ParseError&) {
  }
  return act_point(g, parse_point(F, text)).to_string();
}

Poly rand_poly(const FieldSpec& F, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> degree(-1, max_deg);
  int d = degree(rng);
  if (d < 0) return Poly::zero(F);
  std::vector<uint32_t> c(size_t(d) + 1);
  std::uniform_int_distribution<uint32_t> any(0, F.q() - 1), lead(1, F.q() - 1);
  for (int i = 0; i < d; ++i) c[size_t(i)] = any(rng);
  c[size_t(d)] = lead(rng);
  return Poly(F, std::move(c));
}

ProjPoint rand_point(const FieldSpec& F, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> pick(0, 9);
  if (pick(rng) == 0) return ProjPoint::infinity(F);
  Poly num = rand_poly(F, rng, max_deg);
  Poly den(F);
  do {
    den = rand_poly(F, rng, max_deg);
  } while (den.is_zero());
  return ProjPoint(std::move(num), std::move(den));
}

Triple rand_triple(const FieldSpec& F, std::mt19937_64& rng, int max_deg) {
  while (true) {
    ProjPoint a = rand_point(F, rng, max_deg);
    ProjPoint b = rand_point(F, rng, max_deg);
    ProjPoint c = rand_point(F, rng, max_deg);
    if (a != b && a != c && b != c) return make_triple(a, b, c);
  }
}

int run_verify_corpus(const FieldSpec& F, const std::string& file, const std::string& format) {
  std::ifstream fin;
  std::istream* in = &std::cin;
  if (file != "-") {
    fin.open(file);
    if (!fin) throw ConfigError("cannot open corpus file: " + file);
    in = &fin;
  }
  int checked = 0, pass = 0;
  std::vector<std::pair<int, std::string>> failures;
  std::string line;
  int lineno = 0;
  while (std::getline(*in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++checked;
    std::string reason;
    try {
      json j = json::parse(line);
      if (uint32_t(j.at("q").get<uint64_t>()) != F.q())
        throw ConfigError("corpus q " + j.at("q").dump() + " does not match the invocation field");
      auto pts = j.at("triple");
      if (!pts.is_array() || pts.size() != 3) throw ConfigError("triple must have 3 points");
      Triple T = make_triple(parse_point(F, pts[0].get<std::string>()),
                             parse_point(F, pts[1].get<std::string>()),
                             parse_point(F, pts[2].get<std::string>()));
      ReductionResult r = reduce(T);
      if (!r.gamma.product().in_gamma)
        reason = "gamma determinant is not a unit";
      else if (act_triple(r.gamma.product(), T) != r.reduced)
        reason = "gamma does not map the input onto the reduced triple";
      else if (!membership(r.reduced).in_S())
        reason = "reduced triple is outside the fundamental domain";
    } catch (const json::exception& e) {
      reason = std::string("bad JSON: ") + e.what();
    } catch (const Error& e) {
      reason = std::string(e.code()) + ": " + e.what();
    }
    if (reason.empty())
      ++pass;
    else
      failures.emplace_back(lineno, reason);
  }
  if (format == "json") {
    json out{{"checked", checked}, {"pass", pass}, {"fail", checked - pass}};
    json flist = json::array();
    for (const auto& [ln, why] : failures) flist.push_back({{"line", ln}, {"reason", why}});
    out["failures"] = flist;
    print_json(out);
  } else {
    for (const auto& [ln, why] : failures)
      std::cout << "line " << ln << ": " << why << "\n";
    std::cout << "checked " << checked << " lines: " << pass << " pass, "
              << (checked - pass) << " fail\n";
  }
  return failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical representatives of PGL2(F_q[t])-orbits of boundary triples"};
  app.require_subcommand(1);

  uint32_t q = 2;
  std::string modulus, format = "text";
  uint64_t seed = 0;
  app.add_option("--q", q, "Field size q = p^k")->capture_default_str();
  app.add_option("--modulus", modulus,
                 "Monic irreducible polynomial in 'a' defining F_{p^k} (k > 1 only)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "Randomness seed for gen-corpus")->capture_default_str();

  std::string arg1, arg2, corpus_file = "-";
  int from = -3, to = 3, steps = 1, count = 100, max_deg = 3;

  CLI::App* cf = app.add_subcommand("cf", "Continued fraction of a rational point");
  cf->add_option("point", arg1, "Point over F_q(t)")->required();
  CLI::App* red = app.add_subcommand("reduce", "Canonical orbit representative of a triple");
  red->add_option("triple", arg1, "Distinct ordered triple")->required();
  CLI::App* oeq = app.add_subcommand("orbit-eq", "Decide Gamma-equivalence of two triples");
  oeq->add_option("first", arg1)->required();
  oeq->add_option("second", arg2)->required();
  CLI::App* act = app.add_subcommand("act", "Apply a matrix to a triple, vertex, or point");
  act->add_option("matrix", arg1, "[[a,b],[c,d]] with polynomial entries")->required();
  act->add_option("object", arg2)->required();
  CLI::App* mem = app.add_subcommand("membership", "Fundamental-domain membership mask");
  mem->add_option("triple", arg1)->required();
  CLI::App* tnb = app.add_subcommand("tree-neighbors", "Neighbors of a tree vertex");
  tnb->add_option("vertex", arg1, "(n; f)")->required();
  CLI::App* tct = app.add_subcommand("tree-center", "Tripod center of a triple of ends");
  tct->add_option("triple", arg1)->required();
  CLI::App* tpa = app.add_subcommand("tree-path", "Vertices of the parametrized geodesic");
  tpa->add_option("triple", arg1)->required();
  tpa->add_option("--from", from, "First index")->capture_default_str();
  tpa->add_option("--to", to, "Last index")->capture_default_str();
  CLI::App* tcl = app.add_subcommand("tree-class", "Double-coset class of a vertex");
  tcl->add_option("vertex", arg1)->required();
  CLI::App* flw = app.add_subcommand("flow", "Iterate the fundamental-domain flow");
  flw->add_option("triple", arg1, "Triple inside the fundamental domain")->required();
  flw->add_option("--steps", steps, "Number of iterations")->capture_default_str();
  CLI::App* gen = app.add_subcommand("gen-corpus", "Emit a random triple corpus (JSON lines)");
  gen->add_option("--count", count, "Number of triples")->capture_default_str();
  gen->add_option("--max-deg", max_deg, "Degree bound for numerators/denominators")
      ->capture_default_str();
  CLI::App* ver = app.add_subcommand("verify-corpus", "Check reduction soundness over a corpus");
  ver->add_option("file", corpus_file, "Corpus file, or - for stdin")->capture_default_str();

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    FieldSpec F = build_field(q, modulus);
    CLI::App* sub = app.get_subcommands().front();
    bool js = format == "json";
    if (format == "dot" && sub != tnb && sub != tct && sub != tpa)
      throw ConfigError("--format dot is only available for tree subcommands");

    if (sub == cf) {
      ContinuedFraction c = cf_expand(parse_point(F, arg1));
      if (js) {
        json quot = json::array();
        for (const Poly& a : c.a) quot.push_back(a.to_string());
        print_json(json{{"cf", quot}});
      } else {
        std::cout << c.to_string() << "\n";
      }
    } else if (sub == red) {
      ReductionResult r = reduce(parse_triple(F, arg1));
      if (js) {
        print_json(json{{"gamma", r.gamma.product().to_string()},
                        {"word", r.gamma.to_string()},
                        {"reduced", r.reduced.to_string()},
                        {"steps", r.steps}});
      } else {
        std::cout << "gamma: " << r.gamma.product().to_string() << "\n"
                  << "word: " << r.gamma.to_string() << "\n"
                  << "reduced: " << r.reduced.to_string() << "\n"
                  << "steps: " << r.steps << "\n";
      }
    } else if (sub == oeq) {
      std::optional<GammaElem> g = orbit_equivalent(parse_triple(F, arg1), parse_triple(F, arg2));
      if (js) {
        json out{{"equivalent", g.has_value()}};
        if (g) out["gamma"] = g->to_string();
        print_json(out);
      } else if (g) {
        std::cout << "equivalent\ngamma: " << g->to_string() << "\n";
      } else {
        std::cout << "not equivalent\n";
      }
    } else if (sub == act) {
      std::string result = act_any(F, parse_matrix(F, arg1), arg2);
      if (js)
        print_json(json{{"result", result}});
      else
        std::cout << result << "\n";
    } else if (sub == mem) {
      MembershipMask m = membership(parse_triple(F, arg1));
      if (js)
        print_json(json{{"s0", m.s0},
                        {"s1", m.s1},
                        {"s2", m.s2},
                        {"s3", m.s3},
                        {"in_S", m.in_S()}});
      else
        std::cout << m.to_string() << "\n";
    } else if (sub == tnb) {
      Vertex v = parse_vertex(F, arg1);
      std::vector<Vertex> nb = neighbors(v);
      if (format == "dot") {
        std::cout << "graph tree {\n";
        for (const Vertex& w : nb)
          std::cout << "  \"" << v.to_string() << "\" -- \"" << w.to_string() << "\";\n";
        std::cout << "}\n";
      } else if (js) {
        json list = json::array();
        for (const Vertex& w : nb) list.push_back(w.to_string());
        print_json(json{{"neighbors", list}});
      } else {
        for (size_t i = 0; i < nb.size(); ++i)
          std::cout << (i ? ", " : "") << nb[i].to_string();
        std::cout << "\n";
      }
    } else if (sub == tct) {
      Vertex c = tripod_center(parse_triple(F, arg1));
      if (format == "dot")
        std::cout << "graph tree {\n  \"" << c.to_string() << "\";\n}\n";
      else if (js)
        print_json(json{{"center", c.to_string()}});
      else
        std::cout << c.to_string() << "\n";
    } else if (sub == tpa) {
      if (from > to) throw ConfigError("--from must be <= --to");
      ParamGeodesic ell = theta(parse_triple(F, arg1));
      if (format == "dot") {
        std::cout << "graph tree {\n";
        for (int i = from; i < to; ++i)
          std::cout << "  \"" << vertex_at(ell, i).to_string() << "\" -- \""
                    << vertex_at(ell, i + 1).to_string() << "\";\n";
        std::cout << "}\n";
      } else if (js) {
        json list = json::array();
        for (int i = from; i <= to; ++i)
          list.push_back({{"n", i}, {"vertex", vertex_at(ell, i).to_string()}});
        print_json(json{{"path", list}});
      } else {
        for (int i = from; i <= to; ++i)
          std::cout << i << ": " << vertex_at(ell, i).to_string() << "\n";
      }
    } else if (sub == tcl) {
      int cls = vertex_class(parse_vertex(F, arg1));
      if (js)
        print_json(json{{"class", cls}});
      else
        std::cout << cls << "\n";
    } else if (sub == flw) {
      std::vector<FlowStep> orbit = flow_orbit(parse_triple(F, arg1), steps);
      if (js) {
        json list = json::array();
        for (const FlowStep& s : orbit)
          list.push_back({{"pre", s.pre.to_string()},
                          {"post_raw", s.post_raw.to_string()},
                          {"post_reduced", s.post_reduced.to_string()},
                          {"gamma", s.gamma.product().to_string()},
                          {"word", s.gamma.to_string()}});
        print_json(json{{"steps", list}});
      } else {
        for (size_t i = 0; i < orbit.size(); ++i)
          std::cout << "step " << (i + 1) << ": raw " << orbit[i].post_raw.to_string()
                    << ", reduced " << orbit[i].post_reduced.to_string() << ", gamma "
                    << orbit[i].gamma.to_string() << "\n";
      }
    } else if (sub == gen) {
      if (count < 1) throw ConfigError("--count must be >= 1");
      if (max_deg < 0) throw ConfigError("--max-deg must be >= 0");
      std::mt19937_64 rng(seed);
      for (int i = 0; i < count; ++i) {
        Triple T = rand_triple(F, rng, max_deg);
        json line{{"q", F.q()},
                  {"triple", {T[0].to_string(), T[1].to_string(), T[2].to_string()}}};
        std::cout << line.dump() << "\n";
      }
    } else if (sub == ver) {
      return run_verify_corpus(F, corpus_file, format);
    }
    return 0;
  } catch (const Error& e) {
    if (format == "json")
      std::cerr << json{{"error", {{"code", e.code()}, {"message", e.what()}}}}.dump() << "\n";
    else
      std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return (e.code() == "ParseError" || e.code() == "ConfigError" ||
            e.code() == "InvalidFieldSpec")
               ? 2
               : 1;
  }
}
