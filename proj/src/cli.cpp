#include "smindy/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smindy/collections.hpp"
#include "smindy/hom_engine.hpp"
#include "smindy/kronecker.hpp"
#include "smindy/maps.hpp"
#include "smindy/orbit_category.hpp"
#include "smindy/perp.hpp"
#include "smindy/quiver.hpp"
#include "smindy/report.hpp"
#include "smindy/weyl.hpp"

namespace smindy {

namespace {

using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open quiver file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

ordered_json collection_json(const Collection& c) {
  ordered_json arr = ordered_json::array();
  for (const DerivedObject& x : c.objects) arr.push_back(format_object(x));
  return arr;
}

std::string join_collection(const Collection& c, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < c.objects.size(); ++i) {
    if (i) s += sep;
    s += format_object(c.objects[i]);
  }
  return s;
}

void print_report(const VerificationReport& rep, const std::string& format,
                  std::ostream& out) {
  if (format == "json") {
    out << rep.to_json().dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    out << "key,value\n";
    out << "quiver," << csv_quote(rep.quiver) << "\n";
    out << "w," << rep.w << "\n";
    out << "theorem," << csv_quote(rep.theorem) << "\n";
    for (const auto& [k, v] : rep.counts) out << k << "," << v << "\n";
    out << "pass," << (rep.pass ? "true" : "false") << "\n";
    if (rep.witness) out << "witness," << csv_quote(*rep.witness) << "\n";
    if (rep.elapsed_ms) out << "elapsed_ms," << *rep.elapsed_ms << "\n";
    return;
  }
  out << "theorem " << rep.theorem << " on " << rep.quiver << " (w=" << rep.w
      << "): " << (rep.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& [k, v] : rep.counts) out << "  " << k << " = " << v << "\n";
  if (rep.witness) out << "  witness: " << *rep.witness << "\n";
  if (rep.elapsed_ms) out << "  elapsed_ms: " << *rep.elapsed_ms << "\n";
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"simple-minded collections, systems and noncrossing partitions "
               "for Dynkin quivers"};
  app.require_subcommand(1);

  std::string quiver_path, format = "table";
  int w = 1;
  EnumOptions opts;
  bool timing = false;
  std::uint64_t seed_value = 0;
  bool seed_set = false;

  auto add_common = [&](CLI::App* sub, bool needs_quiver = true) {
    if (needs_quiver)
      sub->add_option("-q,--quiver", quiver_path, "quiver file, or '-' for stdin")
          ->required();
    sub->add_option("-f,--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
  };
  auto add_enum_opts = [&](CLI::App* sub) {
    sub->add_option("--budget", opts.budget, "search-space guard (subset count)");
    sub->add_option("--jobs", opts.jobs, "worker threads for enumeration")
        ->check(CLI::PositiveNumber);
  };

  // --- roots ---------------------------------------------------------------
  CLI::App* roots_cmd = app.add_subcommand("roots", "list the positive roots");
  add_common(roots_cmd);

  // --- hom -----------------------------------------------------------------
  std::string x_text, y_text;
  CLI::App* hom_cmd =
      app.add_subcommand("hom", "Hom dimension between indecomposable objects");
  add_common(hom_cmd);
  hom_cmd->add_option("-x,--x", x_text, "source object, e.g. '(1,0)@0'")->required();
  hom_cmd->add_option("-y,--y", y_text, "target object")->required();
  bool hom_orbit = false;
  hom_cmd->add_option("-w,--w", w, "compute in the orbit category C_{-w}")
      ->check(CLI::PositiveNumber)
      ->each([&](const std::string&) { hom_orbit = true; });

  // --- fd ------------------------------------------------------------------
  CLI::App* fd_cmd =
      app.add_subcommand("fd", "fundamental domain of the orbit category");
  add_common(fd_cmd);
  fd_cmd->add_option("-w,--w", w, "Calabi-Yau parameter")->check(CLI::PositiveNumber);

  // --- enumerate -------------------------------------------------------------
  std::string kind;
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "exhaustive enumerations");
  enum_cmd->add_option("kind", kind, "what to enumerate")
      ->required()
      ->check(CLI::IsMember({"smc", "sms", "nc", "nc-positive"}));
  add_common(enum_cmd);
  enum_cmd->add_option("-w,--w", w, "Calabi-Yau parameter")->check(CLI::PositiveNumber);
  add_enum_opts(enum_cmd);

  // --- verify -----------------------------------------------------------------
  std::string what;
  std::vector<std::string> seed_objects;
  int window = 1;
  CLI::App* verify_cmd = app.add_subcommand("verify", "machine-check a correspondence");
  verify_cmd->add_option("what", what, "which statement")
      ->required()
      ->check(CLI::IsMember({"theorem-a", "theorem-b", "theta", "reduction"}));
  add_common(verify_cmd);
  verify_cmd->add_option("-w,--w", w, "Calabi-Yau parameter")->check(CLI::PositiveNumber);
  verify_cmd->add_option("-t,--t", seed_objects,
                         "seed object for reduction (repeatable)");
  verify_cmd->add_option("--window", window, "degree window 0..N for reduction")
      ->check(CLI::NonNegativeNumber);
  verify_cmd
      ->add_option("--seed", seed_value,
                   "randomize internal choices and check invariance")
      ->each([&](const std::string&) { seed_set = true; });
  verify_cmd->add_flag("--timing", timing, "include elapsed_ms in the report");
  add_enum_opts(verify_cmd);

  // --- kronecker-example --------------------------------------------------------
  int n_lambda = 1, n_omega = 1;
  Int kron_window = 6;
  CLI::App* kron_cmd = app.add_subcommand(
      "kronecker-example", "check the tame example over the Kronecker quiver");
  kron_cmd->add_option("--lambda", n_lambda, "number of tube labels at degree 0")
      ->check(CLI::PositiveNumber);
  kron_cmd->add_option("--omega", n_omega, "number of tube labels at degree 1")
      ->check(CLI::PositiveNumber);
  kron_cmd->add_option("--window", kron_window, "candidate window for the scan")
      ->check(CLI::PositiveNumber);
  kron_cmd->add_option("-f,--format", format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  kron_cmd->add_flag("--timing", timing, "include elapsed_ms in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (seed_set) opts.seed = seed_value;

    if (*kron_cmd) {
      Timer timer;
      VerificationReport rep = verify_kronecker_example(n_lambda, n_omega, kron_window);
      if (timing) rep.elapsed_ms = timer.ms();
      print_report(rep, format, out);
      return rep.pass ? 0 : 1;
    }

    Quiver q = parse_quiver(slurp(quiver_path));

    if (*roots_cmd) {
      HomEngine engine(q);
      const auto& roots = engine.roots();
      auto marker = [&](bool is, int v, char c) {
        return is ? std::string(1, c) + std::to_string(v + 1) : std::string("-");
      };
      if (format == "json") {
        ordered_json j;
        j["quiver"] = q.type_name;
        j["count"] = roots.size();
        j["roots"] = ordered_json::array();
        for (std::size_t i = 0; i < roots.size(); ++i) {
          ordered_json r;
          r["dim"] = roots[i];
          int pv = -1, iv = -1;
          for (int v = 0; v < q.n; ++v) {
            if (engine.projective(v) == roots[i]) pv = v;
            if (engine.injective(v) == roots[i]) iv = v;
          }
          r["projective"] = pv >= 0 ? ordered_json(pv + 1) : ordered_json(nullptr);
          r["injective"] = iv >= 0 ? ordered_json(iv + 1) : ordered_json(nullptr);
          j["roots"].push_back(r);
        }
        out << j.dump(2) << "\n";
      } else if (format == "csv") {
        out << "root,projective,injective\n";
        for (const DimVector& r : roots) {
          int pv = -1, iv = -1;
          for (int v = 0; v < q.n; ++v) {
            if (engine.projective(v) == r) pv = v;
            if (engine.injective(v) == r) iv = v;
          }
          out << csv_quote(format_dim_vector(r)) << "," << marker(pv >= 0, pv, 'P') << ","
              << marker(iv >= 0, iv, 'I') << "\n";
        }
      } else {
        out << q.type_name << ": " << roots.size() << " positive roots\n";
        for (const DimVector& r : roots) {
          int pv = -1, iv = -1;
          for (int v = 0; v < q.n; ++v) {
            if (engine.projective(v) == r) pv = v;
            if (engine.injective(v) == r) iv = v;
          }
          out << "  " << format_dim_vector(r);
          if (pv >= 0) out << "  = P" << pv + 1;
          if (iv >= 0) out << "  = I" << iv + 1;
          out << "\n";
        }
      }
      return 0;
    }

    if (*hom_cmd) {
      HomEngine engine(q);
      DerivedObject x = parse_object(x_text), y = parse_object(y_text);
      Int d;
      if (hom_orbit) {
        OrbitCategory cat(engine, w);
        d = cat.dim_hom(x, y);
      } else {
        if (!engine.is_root(x.root))
          throw InvalidInput("not an indecomposable object: " + x_text);
        if (!engine.is_root(y.root))
          throw InvalidInput("not an indecomposable object: " + y_text);
        d = engine.dim_hom_derived(x, y);
      }
      if (format == "json") {
        ordered_json j;
        j["quiver"] = q.type_name;
        j["x"] = format_object(x);
        j["y"] = format_object(y);
        j["category"] = hom_orbit ? "orbit" : "derived";
        if (hom_orbit) j["w"] = w;
        j["dim"] = d;
        out << j.dump(2) << "\n";
      } else if (format == "csv") {
        out << "x,y,dim\n"
            << csv_quote(format_object(x)) << "," << csv_quote(format_object(y)) << "," << d
            << "\n";
      } else {
        out << "dim Hom" << (hom_orbit ? "_C" : "_D") << "(" << format_object(x) << ", "
            << format_object(y) << ") = " << d << "\n";
      }
      return 0;
    }

    if (*fd_cmd) {
      HomEngine engine(q);
      OrbitCategory cat(engine, w);
      const auto& dom = cat.domain();
      if (format == "json") {
        ordered_json j;
        j["quiver"] = q.type_name;
        j["w"] = w;
        j["count"] = dom.size();
        j["objects"] = ordered_json::array();
        for (const DerivedObject& x : dom) j["objects"].push_back(format_object(x));
        out << j.dump(2) << "\n";
      } else if (format == "csv") {
        out << "object\n";
        for (const DerivedObject& x : dom) out << csv_quote(format_object(x)) << "\n";
      } else {
        out << q.type_name << ", w=" << w << ": fundamental domain with " << dom.size()
            << " objects\n";
        for (const DerivedObject& x : dom) out << "  " << format_object(x) << "\n";
      }
      return 0;
    }

    if (*enum_cmd) {
      if (kind == "smc" || kind == "sms") {
        HomEngine engine(q);
        OrbitCategory cat(engine, w);
        std::vector<Collection> items =
            kind == "smc" ? enumerate_smc_in_fd(cat, opts) : enumerate_sms(cat, opts);
        if (format == "json") {
          ordered_json j;
          j["quiver"] = q.type_name;
          j["w"] = w;
          j["kind"] = kind;
          j["count"] = items.size();
          j["items"] = ordered_json::array();
          for (const Collection& c : items) j["items"].push_back(collection_json(c));
          out << j.dump(2) << "\n";
        } else if (format == "csv") {
          out << "objects\n";
          for (const Collection& c : items) out << csv_quote(join_collection(c)) << "\n";
        } else {
          out << q.type_name << ", w=" << w << ": " << items.size() << " " << kind
              << (kind == "smc" ? " in the fundamental domain" : "") << "\n";
          for (const Collection& c : items) out << "  " << format_collection(c) << "\n";
        }
      } else {
        WeylGroup W(q);
        std::vector<NCTuple> tuples = enumerate_nc(W, w);
        if (kind == "nc-positive") tuples = filter_positive(W, tuples);
        auto part_roots = [&](std::size_t u) {
          std::vector<std::string> rs;
          for (std::size_t t : W.t_reduced_expression(u))
            rs.push_back(format_dim_vector(W.reflection_root(t)));
          return rs;
        };
        auto part_str = [&](std::size_t u) {
          auto rs = part_roots(u);
          if (rs.empty()) return std::string("e");
          std::string s;
          for (std::size_t i = 0; i < rs.size(); ++i) {
            if (i) s += "*";
            s += "t" + rs[i];
          }
          return s;
        };
        if (format == "json") {
          ordered_json j;
          j["quiver"] = q.type_name;
          j["w"] = w;
          j["kind"] = kind;
          j["count"] = tuples.size();
          j["items"] = ordered_json::array();
          for (const NCTuple& t : tuples) {
            ordered_json tup = ordered_json::array();
            for (std::size_t u : t.parts) {
              ordered_json part;
              part["length"] = W.abs_length(u);
              part["reflections"] = part_roots(u);
              tup.push_back(part);
            }
            j["items"].push_back(tup);
          }
          out << j.dump(2) << "\n";
        } else if (format == "csv") {
          out << "tuple\n";
          for (const NCTuple& t : tuples) {
            std::string s;
            for (std::size_t i = 0; i < t.parts.size(); ++i) {
              if (i) s += " | ";
              s += part_str(t.parts[i]);
            }
            out << csv_quote(s) << "\n";
          }
        } else {
          out << q.type_name << ", w=" << w << ": " << tuples.size() << " " << kind
              << " tuples\n";
          for (const NCTuple& t : tuples) {
            out << "  (";
            for (std::size_t i = 0; i < t.parts.size(); ++i) {
              if (i) out << ", ";
              out << part_str(t.parts[i]);
            }
            out << ")\n";
          }
        }
      }
      return 0;
    }

    if (*verify_cmd) {
      HomEngine engine(q);
      Timer timer;
      VerificationReport rep;
      if (what == "reduction") {
        std::vector<DerivedObject> seeds;
        for (const std::string& s : seed_objects) seeds.push_back(parse_object(s));
        if (seeds.empty())
          throw InvalidInput("reduction needs at least one seed object (--t)");
        rep = verify_reduction(engine, Collection(std::move(seeds)), window, opts);
      } else {
        OrbitCategory cat(engine, w);
        if (what == "theorem-a") {
          rep = verify_theorem_a(cat, opts);
        } else if (what == "theorem-b") {
          WeylGroup W(q);
          rep = verify_theorem_b(engine, cat, W, opts);
        } else {
          rep = verify_theta(cat, opts);
        }
      }
      if (timing) rep.elapsed_ms = timer.ms();
      print_report(rep, format, out);
      return rep.pass ? 0 : 1;
    }

    err << "error: no subcommand selected\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (at offset " << e.position << ")\n";
    return 2;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "error: internal invariant violated: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace smindy
