// Command-line frontend: fixture management, invariant reports,
// classification runs, framed-loop evaluation.
//
// Exit codes: 0 ok, 2 validation failure (input violates a precondition),
// 3 computation error, 64 unknown verb, 65 malformed input.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vb5/classifier.hpp"
#include "vb5/fixtures.hpp"
#include "vb5/framed.hpp"
#include "vb5/invariants.hpp"
#include "vb5/steenrod.hpp"

using namespace vb5;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCompute = 3;
constexpr int kExitUnknownVerb = 64;
constexpr int kExitBadInput = 65;

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

SimplicialComplex load_complex(const std::string& ref) {
  if (ref.rfind("fixtures:", 0) == 0) return fixture(ref.substr(9));
  return parse_complex(read_file(ref));
}

void require_closed(const SimplicialComplex& K) {
  auto rep = validate(K);
  if (!rep.closed_connected()) {
    std::string what = "complex is not a closed connected pseudomanifold";
    if (!rep.failures.empty()) what += " (" + rep.failures[0].check + ")";
    throw ValidationError(what);
  }
}

std::string group_to_string(Ring ring, const GradedAbelianGroup& g) {
  std::vector<std::string> parts;
  std::string free;
  switch (ring) {
    case Ring::Z: free = "Z"; break;
    case Ring::Q: free = "Q"; break;
    case Ring::Z2: free = "Z/2"; break;
    case Ring::Z4: free = "Z/4"; break;
  }
  for (int i = 0; i < g.rank; ++i) parts.push_back(free);
  for (const Int& d : g.torsion) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

json group_to_json(const GradedAbelianGroup& g) {
  json j;
  j["degree"] = g.degree;
  j["rank"] = g.rank;
  j["torsion"] = json::array();
  for (const Int& d : g.torsion) j["torsion"].push_back(d.str());
  return j;
}

// generators are named g1, g2, ... : free generators first, then torsion
size_t basis_size(const Space& X, Ring r, int deg) {
  const auto& b = X.cohomology_basis(r, deg);
  return b.free_generators.size() + b.torsion_generators.size();
}

CohomologyClass basis_gen(const Space& X, Ring r, int deg, size_t idx) {
  const auto& b = X.cohomology_basis(r, deg);
  if (idx < b.free_generators.size()) return b.free_generators[idx];
  return b.torsion_generators[idx - b.free_generators.size()].rep;
}

std::string coords_to_string(const std::vector<Int>& coords) {
  std::string out;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (coords[i] != 1) out += coords[i].str() + "*";
    out += "g" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string class_to_string(const Space& X, const CohomologyClass& c) {
  auto coords = X.coordinates_of(c);
  if (!coords) return "<no coordinates>";
  return coords_to_string(*coords);
}

json class_to_json(const Space& X, const CohomologyClass& c) {
  json j;
  j["degree"] = c.degree;
  j["ring"] = ring_name(c.ring);
  auto coords = X.coordinates_of(c);
  j["coordinates"] = json::array();
  if (coords)
    for (const Int& v : *coords) j["coordinates"].push_back(v.str());
  return j;
}

// linear combination over the printed basis: "0", "g2", "3*g1 + g2";
// "@file" reads a raw cochain (whitespace separated integers)
CohomologyClass class_from_spec(const Space& X, Ring ring, int deg,
                                const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') {
    std::istringstream in(read_file(spec.substr(1)));
    CohomologyClass c = X.zero_class(ring, deg);
    for (auto& v : c.cocycle) {
      long long x;
      if (!(in >> x)) throw std::invalid_argument("cochain file too short");
      v = x;
    }
    if (!X.is_cocycle(c))
      throw std::invalid_argument("cochain file is not a cocycle");
    return c;
  }
  size_t n = basis_size(X, ring, deg);
  std::vector<long long> coords(n, 0);
  std::string s;
  for (char ch : spec)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty() || s == "0") {
    // zero class
  } else {
    size_t pos = 0;
    while (pos < s.size()) {
      size_t next = s.find('+', pos);
      std::string term = s.substr(pos, next == std::string::npos
                                           ? std::string::npos
                                           : next - pos);
      long long coef = 1;
      size_t star = term.find('*');
      std::string gname = term;
      if (star != std::string::npos) {
        coef = std::stoll(term.substr(0, star));
        gname = term.substr(star + 1);
      }
      if (gname.size() < 2 || gname[0] != 'g')
        throw std::invalid_argument("bad generator name '" + gname + "'");
      size_t idx = std::stoull(gname.substr(1));
      if (idx < 1 || idx > n)
        throw std::invalid_argument("generator index out of range in '" +
                                    term + "'");
      coords[idx - 1] += coef;
      pos = (next == std::string::npos) ? s.size() : next + 1;
    }
  }
  CohomologyClass out = X.zero_class(ring, deg);
  int mod = ring_modulus(ring);
  for (size_t i = 0; i < n; ++i) {
    if (coords[i] == 0) continue;
    auto g = basis_gen(X, ring, deg, i);
    for (size_t c = 0; c < out.cocycle.size(); ++c) {
      out.cocycle[c] += Int(coords[i]) * g.cocycle[c];
      if (mod != 0) {
        out.cocycle[c] %= mod;
        if (out.cocycle[c] < 0) out.cocycle[c] += mod;
      }
    }
  }
  return out;
}

struct Report {
  json j;
  std::vector<std::string> lines;
  bool as_json = false;

  void put(const std::string& key, const json& value,
           const std::string& line) {
    j["results"][key] = value;
    lines.push_back(line);
  }

  void emit() const {
    if (as_json) {
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& l : lines) std::cout << l << "\n";
    }
  }
};

int run(int argc, char** argv) {
  CLI::App app{"invariants and bundle classification for triangulated "
               "5-manifolds"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a machine-readable report");

  std::string space_ref, ring_s = "Z", mode_s = "mod2_source";
  std::string a_spec = "0", b_spec = "0", c_spec = "0", loop_file;
  bool half_p1_zero = false;
  int deg = -1;

  auto add_space = [&](CLI::App* sub) {
    sub->add_option("space", space_ref,
                    "fixtures:NAME or a path to a .scx file")
        ->required();
  };

  auto* v_fixtures = app.add_subcommand("fixtures", "list the fixture corpus");
  std::string dump_fixture;
  v_fixtures->add_option("name", dump_fixture,
                         "print this fixture in .scx format");
  auto* v_homology = app.add_subcommand("homology", "homology groups");
  add_space(v_homology);
  v_homology->add_option("--ring", ring_s, "Z | Z2 | Z4 | Q");
  v_homology->add_option("--deg", deg, "single degree (default: all)");
  auto* v_cohomology =
      app.add_subcommand("cohomology", "cohomology groups and basis");
  add_space(v_cohomology);
  v_cohomology->add_option("--ring", ring_s, "Z | Z2 | Z4 | Q");
  v_cohomology->add_option("--deg", deg, "single degree (default: all)");
  auto* v_wu = app.add_subcommand("wu", "Wu classes v1, v2");
  add_space(v_wu);
  auto* v_sw = app.add_subcommand("sw", "Stiefel-Whitney classes");
  add_space(v_sw);
  auto* v_spin = app.add_subcommand("spin-check", "w1 = w2 = 0 test");
  add_space(v_spin);
  auto* v_kervaire =
      app.add_subcommand("kervaire", "Kervaire semi-characteristic");
  add_space(v_kervaire);
  auto* v_conditions = app.add_subcommand(
      "conditions", "injectivity conditions for the characteristic triple");
  add_space(v_conditions);
  auto* v_gamma = app.add_subcommand(
      "gamma-check", "is (a, b, c) a characteristic triple");
  add_space(v_gamma);
  v_gamma->add_option("--a", a_spec, "mod-2 degree-2 class (basis combo)");
  v_gamma->add_option("--b", b_spec, "mod-2 degree-4 class (basis combo)");
  v_gamma->add_option("--c", c_spec, "integral degree-4 class (basis combo)");
  auto* v_pi4 = app.add_subcommand("pi4", "the group [M, S^4]");
  add_space(v_pi4);
  auto* v_enum = app.add_subcommand("enumerate-bundles",
                                    "quaternionic line bundles");
  add_space(v_enum);
  auto* v_classify =
      app.add_subcommand("classify", "rank-5 spinnable bundle classes");
  add_space(v_classify);
  auto* v_verdict = app.add_subcommand("verdict", "parallelizability");
  add_space(v_verdict);
  v_verdict->add_flag("--half-p1-zero", half_p1_zero,
                      "assert p1/2(M) = 0 (user metadata)");
  auto* v_kappa = app.add_subcommand("kappa-loop",
                                     "stable framing class of a framed loop");
  int example_n = 0;
  bool bounding = false;
  std::string dump_file;
  v_kappa->add_option("file", loop_file, "framed loop JSON file");
  v_kappa->add_option("--example", example_n,
                      "use the built-in divisor circle at N samples");
  v_kappa->add_flag("--bounding", bounding,
                    "use the bounding framing of the built-in example");
  v_kappa->add_option("--dump", dump_file,
                      "write the evaluated loop to a JSON file");

  for (auto* s : app.get_subcommands([](const CLI::App*) { return true; }))
    s->add_flag("--json", as_json, "emit a machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  }

  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.as_json = as_json;
  CLI::App* sub = app.get_subcommands().front();
  rep.j["command"] = sub->get_name();
  if (!space_ref.empty()) rep.j["input"] = space_ref;
  if (!loop_file.empty()) rep.j["input"] = loop_file;

  auto make_space = [&](bool closed_needed) {
    SimplicialComplex K = load_complex(space_ref);
    if (closed_needed) require_closed(K);
    rep.j["input_hash"] =
        std::to_string(std::hash<std::string>{}(serialize_complex(K)));
    return Space(std::move(K));
  };

  if (sub == v_fixtures) {
    if (!dump_fixture.empty()) {
      std::string text = serialize_complex(fixture(dump_fixture));
      rep.j["results"]["scx"] = text;
      rep.lines.push_back(text);
    } else {
      json names = json::array();
      for (const auto& n : fixture_names()) {
        names.push_back(n);
        rep.lines.push_back(n);
      }
      rep.j["results"]["fixtures"] = names;
    }
  } else if (sub == v_homology || sub == v_cohomology) {
    bool co = (sub == v_cohomology);
    Space X = make_space(false);
    Ring ring = ring_from_name(ring_s);
    int lo = (deg >= 0) ? deg : 0;
    int hi = (deg >= 0) ? deg : X.dim();
    for (int k = lo; k <= hi; ++k) {
      auto g = co ? X.cohomology(ring, k) : X.homology(ring, k);
      std::string label = (co ? "H^" : "H_") + std::to_string(k);
      std::string line = label + " = " + group_to_string(ring, g);
      if (co) {
        const auto& b = X.cohomology_basis(ring, k);
        size_t n = b.free_generators.size() + b.torsion_generators.size();
        if (n > 0) {
          line += "   basis:";
          for (size_t i = 0; i < n; ++i) {
            line += " g" + std::to_string(i + 1);
            if (i >= b.free_generators.size()) {
              line += "(order " +
                      b.torsion_generators[i - b.free_generators.size()]
                          .order.str() +
                      ")";
            }
          }
        }
      }
      rep.put(label, group_to_json(g), line);
    }
  } else if (sub == v_wu) {
    Space X = make_space(true);
    auto wu = wu_classes(X);
    rep.put("v1", class_to_json(X, wu.v1),
            "v1 = " + class_to_string(X, wu.v1));
    rep.put("v2", class_to_json(X, wu.v2),
            "v2 = " + class_to_string(X, wu.v2));
  } else if (sub == v_sw) {
    Space X = make_space(true);
    auto w = stiefel_whitney(X);
    for (size_t i = 0; i < w.size(); ++i) {
      std::string name = "w" + std::to_string(i + 1);
      rep.put(name, class_to_json(X, w[i]),
              name + " = " + class_to_string(X, w[i]));
    }
  } else if (sub == v_spin) {
    Space X = make_space(true);
    bool spin = is_spin(X);
    rep.put("spin", spin, std::string("spin: ") + (spin ? "true" : "false"));
  } else if (sub == v_kervaire) {
    Space X = make_space(true);
    int k = kervaire_semichar(X);
    rep.put("kervaire", k, "kervaire semi-characteristic: " +
                               std::to_string(k));
  } else if (sub == v_conditions) {
    Space X = make_space(true);
    auto r = classification_applicability(X);
    auto b2s = [](bool b) { return b ? "true" : "false"; };
    rep.put("condition_A", r.condition_A,
            std::string("condition A (no order-4 torsion in H^4): ") +
                b2s(r.condition_A));
    rep.put("condition_B_integral", r.condition_B_integral,
            std::string("condition B (integral source): ") +
                b2s(r.condition_B_integral));
    rep.put("condition_B_mod2", r.condition_B_mod2,
            std::string("condition B (mod-2 source): ") +
                b2s(r.condition_B_mod2));
    rep.put("injective_under_integral", r.injective_under_integral,
            std::string("triple map injective (integral reading): ") +
                b2s(r.injective_under_integral));
    rep.put("injective_under_mod2", r.injective_under_mod2,
            std::string("triple map injective (mod-2 reading): ") +
                b2s(r.injective_under_mod2));
  } else if (sub == v_gamma) {
    Space X = make_space(true);
    BundleTriple t{class_from_spec(X, Ring::Z2, 2, a_spec),
                   class_from_spec(X, Ring::Z2, 4, b_spec),
                   class_from_spec(X, Ring::Z, 4, c_spec)};
    bool ok = gamma_image_check(X, t);
    rep.put("realizable", ok,
            std::string("triple realizable by a rank-5 bundle: ") +
                (ok ? "true" : "false"));
  } else if (sub == v_pi4) {
    Space X = make_space(true);
    auto p = pi4_group(X);
    rep.put("base", group_to_json(p.base),
            "base H^4(M;Z) = " + group_to_string(Ring::Z, p.base));
    rep.put("kernel_order", p.kernel_order,
            "kernel order: " + std::to_string(p.kernel_order));
    rep.put("splits", p.splits,
            std::string("splits: ") + (p.splits ? "true" : "false"));
    rep.put("split_reason", split_reason_name(p.split_reason),
            "split reason: " + split_reason_name(p.split_reason));
  } else if (sub == v_enum) {
    Space X = make_space(true);
    auto e = enumerate_quaternionic(X);
    rep.put("finite", e.finite,
            std::string("finite: ") + (e.finite ? "true" : "false"));
    if (e.finite)
      rep.put("count", e.count.str(), "count: " + e.count.str());
    json cls = json::array();
    for (const auto& c : e.classes) {
      json jc;
      jc["half_p1"] = json::array();
      for (const Int& v : c.half_p1) jc["half_p1"].push_back(v.str());
      jc["kappa"] = c.kappa;
      cls.push_back(jc);
      rep.lines.push_back("  (" + coords_to_string(c.half_p1) + ", kappa=" +
                          std::to_string(c.kappa) + ")");
    }
    rep.j["results"]["classes"] = cls;
  } else if (sub == v_classify) {
    Space X = make_space(true);
    auto c = classify_rank5_spinnable(X);
    rep.put("h4", group_to_json(c.h4),
            "H^4(M;Z) = " + group_to_string(Ring::Z, c.h4));
    json kg = json::array();
    std::string kg_line = "ker rho2 generators:";
    for (const auto& g : c.ker_rho2.generators) {
      json jv = json::array();
      for (const Int& v : g) jv.push_back(v.str());
      kg.push_back(jv);
      kg_line += " [" + coords_to_string(g) + "]";
    }
    rep.j["results"]["ker_rho2_generators"] = kg;
    rep.lines.push_back(kg_line);
    rep.put("w1_finite", c.w1_finite,
            std::string("W1 finite: ") + (c.w1_finite ? "true" : "false"));
    if (c.w1_finite) {
      rep.put("w1_count", c.w1_count.str(),
              "W1 classes (quaternionic, with framing bit): " +
                  c.w1_count.str());
      rep.put("w2_count", c.w2_count.str(),
              "W2 classes (w4 nonzero): " + c.w2_count.str());
    }
    json notes = json::array();
    for (const auto& n : c.notes) {
      notes.push_back(n);
      rep.lines.push_back("note: " + n);
    }
    rep.j["results"]["notes"] = notes;
  } else if (sub == v_verdict) {
    Space X = make_space(true);
    auto v = parallelizability_verdict(X, half_p1_zero);
    rep.put("verdict", verdict_name(v.kind),
            "verdict: " + verdict_name(v.kind));
    rep.put("rule", v.rule, "rule: " + v.rule);
  } else if (sub == v_kappa) {
    FramedLoop fl;
    if (example_n > 0) {
      fl = example_s5_divisor(example_n, bounding);
    } else if (!loop_file.empty()) {
      fl = parse_framed_loop(read_file(loop_file));
    } else {
      throw std::invalid_argument("kappa-loop needs a file or --example N");
    }
    if (!dump_file.empty()) {
      std::ofstream out(dump_file);
      out << serialize_framed_loop(fl);
    }
    auto cls = spin_lift_class(loop_to_so5(fl));
    rep.put("kappa", cls.bit,
            "stable framing class: " + std::to_string(cls.bit));
  }

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  rep.j["timing_ms"] = ms;
  rep.emit();
  return 0;
}

const char* kVerbs[] = {"fixtures",   "homology", "cohomology",
                        "wu",         "sw",       "spin-check",
                        "kervaire",   "conditions", "gamma-check",
                        "pi4",        "enumerate-bundles", "classify",
                        "verdict",    "kappa-loop"};

}  // namespace

int main(int argc, char** argv) {
  if (argc >= 2 && argv[1][0] != '-') {
    bool known = false;
    for (const char* v : kVerbs)
      if (argv[1] == std::string(v)) known = true;
    if (!known) {
      std::cerr << "unknown verb '" << argv[1] << "'\n";
      return kExitUnknownVerb;
    }
  }
  try {
    return run(argc, argv);
  } catch (const ValidationError& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NonOrientableError& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kExitValidation;
  } catch (const OrientabilityRequired& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NotSpin& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ParseError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kExitCompute;
  }
}
