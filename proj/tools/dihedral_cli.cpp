// Copyright 2026 The Dihedral Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the toolkit only through the C API.
//
// Exit codes: 0 success, 1 failed verification or a computation that is
// undefined for the input, 2 usage or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dihedral/dihedral.h"
#include "json.hpp"

namespace {

using Json = nlohmann::json;

struct Failure {
  int code;
  std::string message;
};

struct Globals {
  int q = 2;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
  std::size_t jobs = 0;
};

int exit_code_for(dh_status s) {
  switch (s) {
    case DH_OPERATOR_UNDEFINED:
    case DH_AMBIGUOUS_OPERATOR:
    case DH_NOT_SIGNATURE_ELIGIBLE:
    case DH_CERTIFICATION_FAILED:
    case DH_UNREACHABLE:
    case DH_INTERNAL:
      return 1;
    default:
      return 2;
  }
}

void check(dh_status s) {
  if (s != DH_OK) throw Failure{exit_code_for(s), std::string(dh_status_name(s)) + ": " + dh_last_error()};
}

struct RepDeleter {
  void operator()(dh_rep* m) const { dh_rep_free(m); }
};
using RepPtr = std::unique_ptr<dh_rep, RepDeleter>;

std::string take(char* s) {
  std::string out(s == nullptr ? "" : s);
  dh_string_free(s);
  return out;
}

template <typename F>
std::string call_string(F&& f) {
  char* s = nullptr;
  check(f(&s));
  return take(s);
}

template <typename F>
RepPtr call_rep(F&& f) {
  dh_rep* m = nullptr;
  check(f(&m));
  return RepPtr(m);
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw Failure{2, "cannot read '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const Globals& g, const std::string& text) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (g.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw Failure{2, "cannot write '" + g.out + "'"};
  f << body;
}

bool want_json(const Globals& g) { return g.format == "json"; }

void require_format(const Globals& g, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (g.format == a) return;
  }
  throw Failure{2, "format '" + g.format + "' is not available for this command"};
}

// ------------------------------------------------------------ text forms

std::string summand_text(const Json& s) {
  const std::string kind = s.at("kind");
  std::string t;
  if (kind == "omega") t = "Omega(" + std::to_string(s.at("n").get<int>()) + ")";
  if (kind == "free") t = "Free";
  if (kind == "periodic") {
    t = "Periodic(" + s.at("poly").get<std::string>() + "," + std::to_string(s.at("power").get<int>()) + ")";
  }
  if (kind == "periodic_infinity") t = "PeriodicInfinity(" + std::to_string(s.at("power").get<int>()) + ")";
  const int mult = s.value("mult", 1);
  if (mult > 1) t += "x" + std::to_string(mult);
  return t;
}

std::string klein_text(const Json& d) {
  if (d.empty()) return "0";
  std::string out;
  for (const auto& s : d) out += (out.empty() ? "" : " + ") + summand_text(s);
  return out;
}

std::string matrix_text(const Json& m) {
  std::string out;
  for (const auto& r : m.at("data")) out += "  " + r.get<std::string>() + "\n";
  return out;
}

std::string module_text(const Json& m) {
  const std::size_t dim = m.at("x").at("rows");
  return "q=" + std::to_string(m.at("q").get<int>()) + " dim=" + std::to_string(dim) + "\nx:\n" +
         matrix_text(m.at("x")) + "y:\n" + matrix_text(m.at("y"));
}

std::string tag_text(const Json& t) {
  const std::string kind = t.at("kind");
  if (kind == "string" && !t.at("word").is_null()) return "string(" + t.at("word").get<std::string>() + ")";
  return kind;
}

std::string signature_text(const Json& s) {
  return "[" + std::to_string(s[0].get<int>()) + "," + std::to_string(s[1].get<int>()) + "]";
}

// ------------------------------------------------------------ module input

struct ModuleSource {
  std::string input;
  std::string word;
};

void add_module_source(CLI::App* cmd, ModuleSource& src, const std::string& name = "--input") {
  cmd->add_option(name, src.input, "module JSON file ('-' for stdin)");
  cmd->add_option("--word", src.word, "use the string module of this word");
}

RepPtr load_module(const ModuleSource& src, const Globals& g) {
  if (!src.input.empty() && !src.word.empty()) throw Failure{2, "give either --input or --word"};
  if (!src.word.empty()) return call_rep([&](dh_rep** m) { return dh_rep_string(src.word.c_str(), g.q, m); });
  if (src.input.empty()) throw Failure{2, "a module is required (--input or --word)"};
  const std::string text = read_input(src.input);
  return call_rep([&](dh_rep** m) { return dh_rep_from_json(text.c_str(), m); });
}

void emit_module(const Globals& g, const dh_rep* m) {
  require_format(g, {"json", "text"});
  const std::string j = call_string([&](char** s) { return dh_rep_to_json(m, s); });
  emit(g, want_json(g) ? j : module_text(Json::parse(j)));
}

// "11,01" or a matrix JSON object.
std::string matrix_arg(const std::string& text) {
  if (!text.empty() && text.front() == '{') return text;
  Json rows = Json::array();
  std::string row;
  std::stringstream ss(text);
  while (std::getline(ss, row, ',')) rows.push_back(row);
  return Json{{"data", rows}}.dump();
}

const char* kTrivialKlein = R"({"g1":{"rows":1,"cols":1,"data":["1"]},"g2":{"rows":1,"cols":1,"data":["1"]}})";

std::string omega_of_trivial_klein(int n) {
  if (n == 0) return kTrivialKlein;
  return call_string([&](char** s) { return dh_klein_omega(kTrivialKlein, -n, s); });
}

// ------------------------------------------------------------ commands

int run_word(const std::string& op, const std::string& word, const Globals& g) {
  require_format(g, {"json", "text"});
  if (op == "validate") {
    int valid = 0;
    check(dh_word_validate(word.c_str(), g.q, &valid));
    emit(g, want_json(g) ? Json{{"word", word}, {"q", g.q}, {"valid", valid != 0}}.dump()
                         : (valid ? "valid" : "invalid"));
    return valid ? 0 : 1;
  }
  std::string result;
  if (op == "invert") result = call_string([&](char** s) { return dh_word_invert(word.c_str(), s); });
  if (op == "lq") result = call_string([&](char** s) { return dh_word_apply_l(word.c_str(), g.q, s); });
  if (op == "rq") result = call_string([&](char** s) { return dh_word_apply_r(word.c_str(), g.q, s); });
  if (op == "omega2") result = call_string([&](char** s) { return dh_word_omega2(word.c_str(), g.q, s); });
  emit(g, want_json(g) ? Json{{"word", result}}.dump() : result);
  return 0;
}

int run_sweep(const std::string& word, int radius, const Globals& g) {
  dh_format f = DH_FORMAT_JSON;
  if (g.format == "dot") f = DH_FORMAT_DOT;
  const std::string out =
      call_string([&](char** s) { return dh_quiver_sweep(word.c_str(), g.q, radius, g.seed, g.jobs, f, s); });
  if (g.format != "text") {
    emit(g, out);
    return 0;
  }
  const Json r = Json::parse(out);
  std::ostringstream t;
  t << "component of M(" << r.at("base").get<std::string>() << "), q=" << r.at("q") << ", radius " << radius << "\n";
  for (int i = -radius; i <= radius; ++i) {
    t << "  i=" << i << ":";
    for (const auto& v : r.at("vertices")) {
      if (v.at("i") != i) continue;
      t << " " << (v.at("available").get<bool>() ? signature_text(v.at("signature")) : std::string("?"));
    }
    t << "\n";
  }
  std::size_t holds = 0, fails = 0, skipped = 0, unavailable = 0;
  for (const auto& d : r.at("diamonds")) {
    const std::string s = d.at("status");
    holds += s == "holds";
    fails += s == "fails";
    skipped += s == "skipped";
    unavailable += s == "unavailable";
  }
  t << "pattern " << r.at("pattern").get<std::string>() << ", [0,0] vertices " << r.at("zero_signatures")
    << ", diagonal " << (r.at("diagonal_ok").get<bool>() ? "ok" : "off") << "\n";
  t << "diamonds: " << holds << " hold, " << fails << " fail, " << skipped << " skipped, " << unavailable
    << " unavailable\n";
  t << "Omega^2 checks: " << r.at("omega2_checked") << ", failed " << r.at("omega2_failed");
  emit(g, t.str());
  return 0;
}

int run_probe(const ModuleSource& src, const std::string& preset, std::size_t max_dim, std::size_t max_classes,
              std::size_t max_rounds, const Globals& g) {
  require_format(g, {"json", "text"});
  RepPtr m;
  if (!preset.empty()) {
    if (preset == "trivial") {
      m = call_rep([&](dh_rep** r) { return dh_rep_trivial(g.q, r); });
    } else if (preset == "induced-trivial" || preset == "induced-omega") {
      const std::string k = omega_of_trivial_klein(preset == "induced-omega" ? 1 : 0);
      m = call_rep([&](dh_rep** r) { return dh_rep_induce(k.c_str(), "Y", g.q, r); });
    } else {
      throw Failure{2, "unknown preset '" + preset + "'"};
    }
  } else {
    m = load_module(src, g);
  }
  const std::string out = call_string(
      [&](char** s) { return dh_algebraic_probe(m.get(), max_dim, max_classes, max_rounds, g.seed, g.jobs, s); });
  if (want_json(g)) {
    emit(g, out);
    return 0;
  }
  const Json r = Json::parse(out);
  std::ostringstream t;
  t << "verdict " << r.at("verdict").get<std::string>() << " after " << r.at("rounds") << " rounds: "
    << r.at("reason").get<std::string>() << "\n";
  t << "classes " << r.at("classes").size() << "\n";
  for (const auto& c : r.at("classes")) {
    t << "  round " << c.at("round") << " dim " << c.at("dim") << " " << tag_text(c.at("tag"));
    if (!c.at("signature").is_null()) t << " " << signature_text(c.at("signature"));
    t << "\n";
  }
  t << "signatures grow: " << (r.at("signatures_grow").get<bool>() ? "yes" : "no");
  emit(g, t.str());
  return 0;
}

int run_verify(const std::string& suite, bool list, std::size_t max_length, int radius,
               const std::vector<std::string>& seeds, std::size_t samples, const Globals& g) {
  require_format(g, {"json", "text"});
  if (list) {
    const Json names = Json::parse(call_string([](char** s) { return dh_suite_names(s); }));
    if (want_json(g)) {
      emit(g, names.dump());
    } else {
      std::string t;
      for (const auto& n : names) t += n.at("name").get<std::string>() + "  " + n.at("summary").get<std::string>() + "\n";
      emit(g, t);
    }
    return 0;
  }
  if (suite.empty()) throw Failure{2, "--suite is required"};
  Json cfg = {{"q", g.q}, {"seed", g.seed}, {"jobs", g.jobs}, {"max_length", max_length}, {"radius", radius},
              {"samples", samples}};
  if (!seeds.empty()) cfg["seeds"] = seeds;
  int passed = 0;
  const std::string out = call_string([&](char** s) {
    return dh_verify(suite.c_str(), cfg.dump().c_str(), want_json(g) ? DH_FORMAT_JSON : DH_FORMAT_TEXT, s, &passed);
  });
  emit(g, out);
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modules for dihedral 2-groups over GF(2)"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--q", g.q, "group parameter q (order 4q)")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed (DIHEDRAL_SEED overrides)")->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "text", "dot"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "write output to this file");
  app.add_option("--jobs", g.jobs, "worker threads (0 = all cores)");

  int code = 0;
  std::function<int()> action;

  // word
  auto* word = app.add_subcommand("word", "word calculus");
  word->require_subcommand(1);
  std::string word_arg;
  for (const char* op : {"validate", "invert", "lq", "rq", "omega2"}) {
    auto* c = word->add_subcommand(op);
    c->add_option("--word", word_arg, "word such as \"a b- a\"")->required();
    c->callback([&, op = std::string(op)] { action = [&, op] { return run_word(op, word_arg, g); }; });
  }

  // module
  auto* module = app.add_subcommand("module", "module construction and operations");
  module->require_subcommand(1);
  std::string phi = "1";
  std::string subgroup;
  std::string klein_input;
  int omega_n = 0;
  int power = -1;
  ModuleSource src;
  ModuleSource other;

  auto* bs = module->add_subcommand("build-string", "string module M(w)");
  bs->add_option("--word", word_arg)->required();
  bs->callback([&] {
    action = [&] {
      RepPtr m = call_rep([&](dh_rep** r) { return dh_rep_string(word_arg.c_str(), g.q, r); });
      emit_module(g, m.get());
      return 0;
    };
  });

  auto* bb = module->add_subcommand("build-band", "band module for a cyclic word and invertible matrix");
  bb->add_option("--word", word_arg)->required();
  bb->add_option("--phi", phi, "matrix as rows \"11,01\" or JSON")->capture_default_str();
  bb->callback([&] {
    action = [&] {
      const std::string p = matrix_arg(phi);
      RepPtr m = call_rep([&](dh_rep** r) { return dh_rep_band(word_arg.c_str(), p.c_str(), g.q, r); });
      emit_module(g, m.get());
      return 0;
    };
  });

  auto* reg = module->add_subcommand("regular", "regular module KG");
  reg->callback([&] {
    action = [&] {
      RepPtr m = call_rep([&](dh_rep** r) { return dh_rep_regular(g.q, r); });
      emit_module(g, m.get());
      return 0;
    };
  });

  auto* ind = module->add_subcommand("induce", "induce a Klein four module to the whole group");
  ind->add_option("--subgroup", subgroup, "X or Y")->required();
  ind->add_option("--input", klein_input, "Klein module JSON {\"g1\",\"g2\"}; default the trivial module");
  ind->add_option("--omega", omega_n, "induce Omega^n of the trivial module instead");
  ind->callback([&] {
    action = [&] {
      const std::string k = klein_input.empty() ? omega_of_trivial_klein(omega_n) : read_input(klein_input);
      RepPtr m = call_rep([&](dh_rep** r) { return dh_rep_induce(k.c_str(), subgroup.c_str(), g.q, r); });
      emit_module(g, m.get());
      return 0;
    };
  });

  auto* res = module->add_subcommand("restrict", "restriction to x, y, X or Y");
  add_module_source(res, src);
  res->add_option("--subgroup", subgroup, "x, y, X or Y")->required();
  res->callback([&] {
    action = [&] {
      require_format(g, {"json", "text"});
      RepPtr m = load_module(src, g);
      const std::string j = call_string([&](char** s) { return dh_rep_restrict(m.get(), subgroup.c_str(), s); });
      if (want_json(g)) {
        emit(g, j);
      } else {
        const Json r = Json::parse(j);
        if (r.contains("decomposition")) {
          emit(g, r.at("subgroup").get<std::string>() + ": " + klein_text(r.at("decomposition")));
        } else {
          emit(g, r.at("subgroup").get<std::string>() + ": trivial " + std::to_string(r.at("trivial").get<int>()) +
                      ", free " + std::to_string(r.at("free").get<int>()));
        }
      }
      return 0;
    };
  });

  auto* du = module->add_subcommand("dual", "contragredient module");
  add_module_source(du, src);
  du->callback([&] {
    action = [&] {
      RepPtr m = load_module(src, g);
      RepPtr d = call_rep([&](dh_rep** r) { return dh_rep_dual(m.get(), r); });
      emit_module(g, d.get());
      return 0;
    };
  });

  auto* te = module->add_subcommand("tensor", "tensor product");
  add_module_source(te, src);
  te->add_option("--other", other.input, "second module JSON");
  te->add_option("--other-word", other.word, "second module as a string module");
  te->callback([&] {
    action = [&] {
      RepPtr a = load_module(src, g);
      RepPtr b = load_module(other, g);
      RepPtr t = call_rep([&](dh_rep** r) { return dh_rep_tensor(a.get(), b.get(), r); });
      emit_module(g, t.get());
      return 0;
    };
  });

  auto* om = module->add_subcommand("omega", "Heller translate");
  add_module_source(om, src);
  om->add_option("--power", power, "negative: syzygies, positive: cosyzygies")->capture_default_str();
  om->callback([&] {
    action = [&] {
      RepPtr m = load_module(src, g);
      RepPtr o = call_rep([&](dh_rep** r) { return dh_rep_omega(m.get(), power, r); });
      emit_module(g, o.get());
      return 0;
    };
  });

  // decompose
  auto* dec = app.add_subcommand("decompose", "Krull-Schmidt decomposition");
  add_module_source(dec, src);
  bool no_identify = false;
  bool with_modules = false;
  dec->add_flag("--no-identify", no_identify, "skip word recovery");
  dec->add_flag("--with-modules", with_modules, "include summand matrices in JSON");
  dec->callback([&] {
    action = [&] {
      require_format(g, {"json", "text"});
      RepPtr m = load_module(src, g);
      const std::string j = call_string(
          [&](char** s) { return dh_rep_decompose(m.get(), g.seed, no_identify ? 0 : 1, with_modules ? 1 : 0, s); });
      if (want_json(g)) {
        emit(g, j);
        return 0;
      }
      const Json r = Json::parse(j);
      std::ostringstream t;
      t << "dim " << r.at("dim") << ", seed " << r.at("seed") << "\n";
      for (const auto& s : r.at("summands")) {
        t << "  dim " << s.at("dim") << " x" << s.at("mult") << " " << tag_text(s.at("tag"))
          << (s.at("certified").get<bool>() ? "" : " (uncertified)") << "\n";
      }
      emit(g, t.str());
      return 0;
    };
  });

  // signature
  auto* sig = app.add_subcommand("signature", "signature of a non-periodic even-dimensional module");
  add_module_source(sig, src);
  sig->callback([&] {
    action = [&] {
      require_format(g, {"json", "text"});
      RepPtr m = load_module(src, g);
      const std::string j = call_string([&](char** s) { return dh_rep_signature(m.get(), s); });
      if (want_json(g)) {
        emit(g, j);
        return 0;
      }
      const Json r = Json::parse(j);
      emit(g, signature_text(r.at("signature")) + " on " + r.at("active").get<std::string>() +
                  "\nX: " + klein_text(r.at("X")) + "\nY: " + klein_text(r.at("Y")));
      return 0;
    };
  });

  // quiver sweep
  auto* quiver = app.add_subcommand("quiver", "stable Auslander-Reiten quiver");
  quiver->require_subcommand(1);
  auto* sweep = quiver->add_subcommand("sweep", "signatures and diamonds around M(w)");
  int radius = 2;
  sweep->add_option("--word", word_arg)->required();
  sweep->add_option("--radius", radius)->capture_default_str();
  sweep->callback([&] { action = [&] { return run_sweep(word_arg, radius, g); }; });

  // algebraic probe
  auto* alg = app.add_subcommand("algebraic", "tensor closure");
  alg->require_subcommand(1);
  auto* probe = alg->add_subcommand("probe", "tensor-power closure probe");
  add_module_source(probe, src);
  std::string preset;
  std::size_t max_dim = 0, max_classes = 0, max_rounds = 0;
  probe->add_option("--preset", preset, "trivial, induced-trivial or induced-omega");
  probe->add_option("--max-dim", max_dim);
  probe->add_option("--max-classes", max_classes);
  probe->add_option("--max-rounds", max_rounds);
  probe->callback([&] {
    action = [&] { return run_probe(src, preset, max_dim, max_classes, max_rounds, g); };
  });

  // verify
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  bool list = false;
  std::size_t max_length = 0, samples = 0;
  int suite_radius = 0;
  std::vector<std::string> seeds;
  ver->add_option("--suite", suite);
  ver->add_flag("--list", list, "list the suites");
  ver->add_option("--max-length", max_length);
  ver->add_option("--radius", suite_radius);
  ver->add_option("--seed-word", seeds, "seed word (repeatable)");
  ver->add_option("--samples", samples);
  ver->callback([&] {
    action = [&] { return run_verify(suite, list, max_length, suite_radius, seeds, samples, g); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (const char* env = std::getenv("DIHEDRAL_SEED"); env != nullptr && *env != '\0') {
    try {
      g.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: DIHEDRAL_SEED is not a number\n";
      return 2;
    }
  }
  try {
    code = action ? action() : 2;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
