// Copyright 2026 The OQL Authors
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


// oql: command-line checks for finite quantales and quantale-enriched lattices.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oql/cd.hpp"
#include "oql/girard.hpp"
#include "oql/io.hpp"
#include "oql/mining.hpp"
#include "oql/report.hpp"
#include "oql/structure.hpp"

using namespace oql;
using nlohmann::json;

namespace {

struct Common {
  std::string builtin_name;
  std::string file;
  std::uint64_t budget = Budget::standard().limit;
  std::string format = "text";
  std::string out;
  bool timing = false;
};

void add_common(CLI::App* cmd, Common& c, bool input = true) {
  if (input) {
    cmd->add_option("--builtin", c.builtin_name, "built-in quantale NAME[:n]");
    cmd->add_option("--file", c.file, "input file");
  }
  cmd->add_option("--budget", c.budget, "candidate cap")->capture_default_str();
  cmd->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", c.out, "write the report here instead of stdout");
  cmd->add_flag("--timing", c.timing, "include timings");
}

Budget budget_of(const Common& c) { return Budget{c.budget}; }

QuantalePtr quantale_of(const Common& c) {
  if (!c.file.empty()) return load_quantale(c.file);
  if (!c.builtin_name.empty()) return builtin(c.builtin_name);
  throw Error(ErrorKind::InvalidArgument, "give --builtin or --file");
}

// --builtin: canonical Omega over the quantale; --file: a category file.
OmegaCategory category_of(const Common& c) {
  if (!c.file.empty()) return load_category(c.file);
  if (!c.builtin_name.empty()) return canonical_omega(builtin(c.builtin_name));
  throw Error(ErrorKind::InvalidArgument, "give --builtin or --file");
}

// Runs `body`, timing it; a size bound skips the section and the run exits 3.
void section(Report& r, const std::string& name, const std::function<void()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SizeBound) throw;
    r.budget_skip(name, e);
  }
  r.timing(name, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

int emit(const Report& r, const Common& c) {
  const std::string body = c.format == "json" ? r.json(c.timing) : r.text(c.timing);
  if (c.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << c.out << "\n";
      return kExitParse;
    }
    f << body;
  }
  return r.exit_code();
}

json flags_json(const QuantaleClass& k) {
  return {{"commutative", k.commutative}, {"integral", k.integral}, {"divisible", k.divisible},
          {"prelinear", k.prelinear},     {"bl", k.bl},             {"girard", k.girard},
          {"mv", k.mv}};
}

std::string echo(int argc, char** argv) {
  std::string s = "oql";
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--format" || a == "--out") {
      ++i;
      continue;
    }
    if (a == "--timing" || a.rfind("--format=", 0) == 0 || a.rfind("--out=", 0) == 0) continue;
    s += " " + a;
  }
  return s;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      auto n = std::stoul(s);
      return {n, n};
    }
    return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "bad range \"" + s + "\", expected a..b");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oql: finite quantale-enriched order theory checks"};
  app.require_subcommand(1);
  Common c;
  const std::string command = echo(argc, argv);
  std::function<Report()> run;

  // quantale -----------------------------------------------------------------
  auto* quantale = app.add_subcommand("quantale", "quantale laws, classes and enumeration");
  quantale->require_subcommand(1);
  std::string qfile_positional;
  auto* qverify = quantale->add_subcommand("verify", "check the quantale laws");
  add_common(qverify, c);
  qverify->add_option("path", qfile_positional, "quantale file");
  qverify->callback([&] {
    run = [&] {
      Report r(command);
      section(r, "verify", [&] {
        QuantaleSpec spec;
        if (!qfile_positional.empty()) c.file = qfile_positional;
        if (!c.file.empty())
          spec = load_quantale_spec(c.file);
        else
          spec = builtin(c.builtin_name.empty() ? throw Error(ErrorKind::InvalidArgument, "give a quantale")
                                                : c.builtin_name)
                     ->spec();
        auto d = diagnose_quantale(spec);
        if (!d.ok()) {
          r.add({"laws", false, std::string(to_string(d.error->kind())) + ": " + join_names(d.error->witness()), false,
                 d.error->what()});
          return;
        }
        r.add({"laws", true, "", false, ""});
        auto q = verify_quantale(spec);
        r.add(check_residuation_laws(*q));
      });
      return r;
    };
  });

  auto* qclassify = quantale->add_subcommand("classify", "integral, divisible, prelinear, Girard, BL, MV");
  add_common(qclassify, c);
  qclassify->callback([&] {
    run = [&] {
      Report r(command);
      auto q = quantale_of(c);
      auto k = classify(*q);
      r.data()["classes"] = flags_json(k);
      for (const auto& [flag, w] : k.witnesses) r.data()["witnesses"][flag] = join_names(w);
      r.add({"bl_definition", k.bl == (k.integral && k.divisible && k.prelinear), "", false, ""});
      r.add({"mv_definition", k.mv == (k.bl && k.girard), "", false, ""});
      r.add({"girard_integral", !k.girard || k.integral, "", false, ""});
      return r;
    };
  });

  std::string chain_range, lattice_file;
  auto* qenum = quantale->add_subcommand("enumerate", "all quantales on a chain or lattice");
  add_common(qenum, c, false);
  qenum->add_option("--chain", chain_range, "chain size n or a..b");
  qenum->add_option("--lattice", lattice_file, "lattice file");
  qenum->callback([&] {
    run = [&] {
      Report r(command);
      std::vector<std::pair<std::string, FiniteLattice>> sources;
      if (!chain_range.empty()) {
        auto [lo, hi] = parse_range(chain_range);
        for (auto n = lo; n <= hi; ++n) sources.emplace_back("chain" + std::to_string(n), FiniteLattice::chain(n));
      }
      if (!lattice_file.empty()) {
        std::string name;
        auto lat = load_lattice(lattice_file, &name);
        sources.emplace_back(name, std::move(lat));
      }
      if (sources.empty()) throw Error(ErrorKind::InvalidArgument, "give --chain or --lattice");
      for (const auto& [name, lat] : sources)
        section(r, "enumerate." + name, [&] {
          EnumerateOptions eo;
          eo.size_bound = lat.size();
          eo.budget = budget_of(c);
          auto qs = enumerate_quantales(lat, eo, name);
          r.data()["structures"][name] = qs.size();
          for (const auto& q : qs) r.data()["quantales"][name].push_back(q->name());
          r.add({"enumerate." + name, true, "", false, std::to_string(qs.size()) + " structures"});
        });
      return r;
    };
  });

  // cat ----------------------------------------------------------------------
  auto* cat = app.add_subcommand("cat", "Omega-categories");
  cat->require_subcommand(1);
  bool dual_flag = false;
  auto* ccheck = cat->add_subcommand("check", "axioms, Yoneda and presheaf counts");
  add_common(ccheck, c);
  ccheck->add_flag("--dual", dual_flag, "use the dual category");
  ccheck->callback([&] {
    run = [&] {
      Report r(command);
      auto a = category_of(c);
      if (dual_flag) a = dual(a);
      r.add({"category", true, "", false, std::to_string(a.size()) + " objects"});
      r.stamp("category", a.label());
      section(r, "yoneda", [&] { r.add(yoneda_check(a, budget_of(c)), "yoneda."); });
      section(r, "closures", [&] { r.add(closure_check(a, budget_of(c)), "closures."); });
      section(r, "presheaves", [&] {
        r.data()["lower_presheaves"] = enumerate_presheaves(a, Variance::Lower, budget_of(c)).size();
        r.data()["upper_presheaves"] = enumerate_presheaves(a, Variance::Upper, budget_of(c)).size();
      });
      r.data()["antisymmetric"] = is_antisymmetric(a);
      return r;
    };
  });

  // lat ----------------------------------------------------------------------
  auto* lat = app.add_subcommand("lat", "complete Omega-lattices");
  lat->require_subcommand(1);
  auto* lcertify = lat->add_subcommand("certify", "completeness certificate and sup coherence");
  add_common(lcertify, c);
  lcertify->add_flag("--dual", dual_flag, "use the dual category");
  lcertify->callback([&] {
    run = [&] {
      Report r(command);
      auto a = category_of(c);
      if (dual_flag) a = dual(a);
      auto l = certify_complete(a, budget_of(c));
      r.stamp("route", l.route());
      r.add(l.certificate(), "certificate.");
      section(r, "coherence", [&] { r.add(sup_coherence_check(l, budget_of(c)), "coherence."); });
      json tensor = json::object();
      for (Elem e = 0; e < l.omega().size(); ++e)
        for (Index x = 0; x < l.size(); ++x)
          tensor[l.omega().elem_name(e) + "," + a.object(x)] = {{"tensor", a.object(l.tensor(e, x))},
                                                                {"cotensor", a.object(l.cotensor(e, x))}};
      r.data()["tensors"] = tensor;
      return r;
    };
  });

  // cd -----------------------------------------------------------------------
  auto* cd = app.add_subcommand("cd", "complete distributivity");
  cd->require_subcommand(1);
  bool down_flag = false;
  auto* cdcheck = cd->add_subcommand("check", "is the lattice completely distributive");
  add_common(cdcheck, c);
  cdcheck->add_flag("--dual", dual_flag, "check the dual lattice");
  cdcheck->add_flag("--down", down_flag, "print the totally-below table");
  cdcheck->callback([&] {
    run = [&] {
      Report r(command);
      auto base = certify_complete(category_of(c), budget_of(c));
      auto l = dual_flag ? dual_lattice(base, budget_of(c)) : base;
      section(r, "cd", [&] {
        auto v = is_cd(l, budget_of(c));
        Check chk{"cd", v.cd, v.cd ? "" : v.equation + " at " + v.witness, false,
                  std::to_string(v.presheaves) + " presheaves"};
        if (!v.cd && dual_flag && !classify(l.omega()).girard)
          chk.note = "predicted by non-Girard " + l.omega().name();
        r.add(chk);
        if (!v.cd) return;
        auto op = downarrow(l, budget_of(c));
        r.add(op.certificate, "down.");
        r.add(interpolate_check(l, op), "interpolate.");
        if (down_flag) r.data()["down"] = downarrow_json(l, op);
      });
      return r;
    };
  });

  // struct -------------------------------------------------------------------
  auto* st = app.add_subcommand("struct", "subalgebras, quotients, decompositions");
  st->require_subcommand(1);
  auto lattice_input = [&] { return certify_complete(category_of(c), budget_of(c)); };
  auto* rb = st->add_subcommand("raney-buchi", "L as a quotient of a subalgebra of a power of Omega");
  add_common(rb, c);
  rb->callback([&] {
    run = [&] {
      Report r(command);
      auto l = lattice_input();
      section(r, "raney_buchi", [&] {
        auto d = raney_buchi(l, budget_of(c));
        r.add(d.checks);
        r.data()["ambient"] = d.ambient.size();
        r.data()["presheaves"] = d.presheaves.size();
      });
      return r;
    };
  });
  auto* bij = st->add_subcommand("bijections", "subalgebras vs closures, quotients vs kernels");
  add_common(bij, c);
  bij->callback([&] {
    run = [&] {
      Report r(command);
      auto l = lattice_input();
      section(r, "closures", [&] {
        auto b = closure_bijection_check(l, budget_of(c));
        r.add(b.checks, "closures.");
        r.data()["subalgebras"] = b.left_count;
        r.data()["closures"] = b.right_count;
      });
      section(r, "kernels", [&] {
        auto b = kernel_bijection_check(l, budget_of(c));
        r.add(b.checks, "kernels.");
        r.data()["quotients"] = b.left_count;
        r.data()["kernels"] = b.right_count;
      });
      return r;
    };
  });
  auto* k63 = st->add_subcommand("kernel", "kernel operator on [L,L] and the left adjoints");
  add_common(k63, c);
  k63->callback([&] {
    run = [&] {
      Report r(command);
      auto l = lattice_input();
      section(r, "kernel", [&] {
        auto k = functor_kernel(l, l, budget_of(c));
        r.add(k.checks);
        r.data()["functors"] = k.left.functors.maps.size();
        r.data()["left_adjoints"] = k.left.left_adjoints.size();
      });
      return r;
    };
  });

  // girard -------------------------------------------------------------------
  auto* gi = app.add_subcommand("girard", "duality for Girard quantales");
  gi->require_subcommand(1);
  std::string corpus = "auto";
  std::vector<std::string> corpus_files;
  auto* t11 = gi->add_subcommand("duality", "Girard iff Omega^op Heyting iff duals of CD lattices are CD");
  add_common(t11, c);
  t11->add_option("--corpus", corpus, "auto or files")->capture_default_str();
  t11->add_option("--corpus-file", corpus_files, "category files added to the corpus");
  t11->callback([&] {
    run = [&] {
      Report r(command);
      auto q = quantale_of(c);
      std::vector<CompleteOmegaLattice> lattices;
      if (corpus == "auto") lattices = default_corpus(q, budget_of(c));
      for (const auto& f : corpus_files) lattices.push_back(certify_complete(load_category(f), budget_of(c)));
      auto rep = duality_check(q, lattices, budget_of(c));
      r.add(rep.checks);
      r.stamp("scope", rep.scope);
      r.data()["girard"] = rep.girard;
      r.data()["heyting_op"] = rep.heyting_op;
      for (const auto& [id, ok] : rep.corpus_dual_cd) r.data()["corpus_dual_cd"][id] = ok;
      if (rep.witness) r.data()["witness"] = q->elem_name(*rep.witness);
      return r;
    };
  });
  auto* ginf = gi->add_subcommand("inf", "inf on [Omega,Omega] and its right adjoint");
  add_common(ginf, c);
  ginf->callback([&] {
    run = [&] {
      Report r(command);
      r.add(girard_inf_check(quantale_of(c), budget_of(c)));
      return r;
    };
  });
  std::vector<std::string> generators{"x"};
  std::vector<std::string> images;
  bool experimental = false;
  auto* gfree = gi->add_subcommand("free", "free completely distributive lattice on a finite set");
  add_common(gfree, c);
  gfree->add_option("--generators", generators, "generator names")->delimiter(',');
  gfree->add_option("--map", images, "f(x) per generator as elements of canonical Omega")->delimiter(',');
  gfree->add_flag("--experimental", experimental, "allow non-Girard Omega and report what fails");
  gfree->callback([&] {
    run = [&] {
      Report r(command);
      auto q = quantale_of(c);
      auto f = free_cd(q, generators, experimental, budget_of(c));
      r.add(f.checks, "free.");
      r.data()["size"] = f.lattice.size();
      for (std::size_t x = 0; x < generators.size(); ++x)
        r.data()["unit"][generators[x]] = f.lattice.cat().object(f.unit[x]);
      auto target = certify_complete(canonical_omega(q), budget_of(c));
      std::vector<ObjectMap> maps;
      if (!images.empty()) {
        if (images.size() != generators.size())
          throw Error(ErrorKind::InvalidArgument, "--map needs one element per generator");
        ObjectMap m;
        for (const auto& e : images) m.push_back(q->elem(e));
        maps.push_back(m);
      } else {
        // every f: X -> Omega
        const std::size_t total = saturating_pow(q->size(), generators.size());
        if (total > c.budget) throw_size_bound("maps X -> Omega", total, budget_of(c));
        for (std::size_t code = 0; code < total; ++code) {
          ObjectMap m(generators.size());
          std::size_t rest = code;
          for (std::size_t x = generators.size(); x-- > 0;) {
            m[x] = static_cast<Index>(rest % q->size());
            rest /= q->size();
          }
          maps.push_back(m);
        }
      }
      for (const auto& m : maps) {
        std::string id = "extend." + map_name(target.cat(), m) + ".";
        section(r, id, [&] {
          auto e = extend(f, target, m, budget_of(c));
          r.add(e.checks, id);
        });
      }
      return r;
    };
  });

  // mine ---------------------------------------------------------------------
  MineOptions mine_opts;
  std::vector<std::string> mine_lattices;
  std::string mine_chain;
  auto* mn = app.add_subcommand("mine", "run the full theorem suite over enumerated quantales");
  add_common(mn, c, false);
  mn->add_option("--chain", mine_chain, "chain sizes a..b");
  mn->add_option("--lattice", mine_lattices, "lattice files");
  mn->add_option("--shards", mine_opts.shards, "concurrent shards")->check(CLI::PositiveNumber);
  mn->add_option("--repro", mine_opts.repro_dir, "directory for reproduction files");
  mn->callback([&] {
    run = [&] {
      if (!mine_chain.empty()) std::tie(mine_opts.chain_lo, mine_opts.chain_hi) = parse_range(mine_chain);
      if (mine_opts.chain_lo == 0 && !mine_chain.empty())
        throw Error(ErrorKind::InvalidArgument, "chains start at 1");
      mine_opts.lattice_files = mine_lattices;
      mine_opts.budget = budget_of(c);
      auto t0 = std::chrono::steady_clock::now();
      Report r = mine(mine_opts);
      r.timing("mine", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      return r;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitParse;
  }
  try {
    return emit(run(), c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Parse:
      case ErrorKind::InvalidArgument:
      case ErrorKind::BadSize:
        return kExitParse;
      case ErrorKind::SizeBound:
        return kExitBudget;
      default:
        return kExitFail;
    }
  }
}
