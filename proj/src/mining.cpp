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


#include "oql/mining.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <future>

#include <json.hpp>

#include "oql/cd.hpp"
#include "oql/girard.hpp"
#include "oql/io.hpp"
#include "oql/structure.hpp"

namespace oql {

std::vector<OmegaCategory> enumerate_categories(const QuantalePtr& omega, std::size_t n, const Budget& budget) {
  const Quantale& q = *omega;
  std::vector<Elem> diag, all;
  for (Elem e = 0; e < q.size(); ++e) {
    all.push_back(e);
    if (q.leq(q.unit(), e)) diag.push_back(e);
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    total = std::min<std::uint64_t>(total * ((i % (n + 1) == 0) ? diag.size() : all.size()), budget.limit + 1);
  }
  if (total > budget.limit) throw_size_bound("categories", total, budget);

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("o" + std::to_string(i));
  std::vector<OmegaCategory> out;
  std::vector<std::size_t> digit(n * n, 0);
  std::vector<Elem> hom(n * n);
  auto choices = [&](std::size_t i) -> const std::vector<Elem>& { return i % (n + 1) == 0 ? diag : all; };
  for (;;) {
    for (std::size_t i = 0; i < n * n; ++i) hom[i] = choices(i)[digit[i]];
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        for (std::size_t c = 0; c < n && ok; ++c)
          ok = q.leq(q.tensor(hom[a * n + b], hom[b * n + c]), hom[a * n + c]);
    if (ok) out.emplace_back(omega, names, hom, "cat" + std::to_string(n) + "#" + std::to_string(out.size()));
    std::size_t i = n * n;
    while (i > 0) {
      --i;
      if (++digit[i] < choices(i).size()) break;
      digit[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

namespace {

std::string names_of(const std::vector<std::string>* w) { return w ? join_names(*w) : std::string{}; }

// Runs one stage; a size bound marks it skipped, any other error is a failure.
void stage(Report& report, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SizeBound) {
      report.budget_skip(name, e);
    } else {
      Check c;
      c.name = name;
      c.ok = false;
      c.witness = std::string(to_string(e.kind())) + ": " + e.what();
      report.add(std::move(c));
    }
  }
}

}  // namespace

Report theorem_suite(const QuantalePtr& omega, const Budget& budget) {
  const Quantale& q = *omega;
  const std::string p = q.name() + "/";
  Report r;

  stage(r, p + "quantale", [&] {
    r.add(check_residuation_laws(q), p);
    const auto c = classify(q);
    r.add({p + "class.bl_definition", c.bl == (c.integral && c.divisible && c.prelinear), "", false, ""});
    r.add({p + "class.mv_definition", c.mv == (c.bl && c.girard), "", false, ""});
    r.add({p + "class.girard_integral", !c.girard || c.integral, names_of(c.witness("integral")), false, ""});
  });

  const auto canon_cat = canonical_omega(omega);
  stage(r, p + "yoneda", [&] {
    r.add(yoneda_check(canon_cat, budget), p + "yoneda.canonical.");
    r.add(closure_check(canon_cat, budget), p + "closures.canonical.");
    for (std::size_t n = 1; n <= 2; ++n)
      for (const auto& a : enumerate_categories(omega, n, budget)) {
        auto checks = yoneda_check(a, budget);
        r.add({p + "yoneda." + a.label(), checks.all_ok(), checks.all_ok() ? "" : a.label(), false, ""});
      }
  });

  std::optional<CompleteOmegaLattice> canon;
  stage(r, p + "complete", [&] {
    canon = certify_complete(canon_cat, budget);
    r.add(canon->certificate(), p + "complete.");
    r.add(sup_coherence_check(*canon, budget), p + "coherence.");
  });
  if (!canon) return r;

  std::optional<DownarrowOperator> down;
  stage(r, p + "cd", [&] {
    auto v = is_cd(*canon, budget);
    r.add({p + "cd.canonical", v.cd, v.equation + " " + v.witness, false, ""});
    down = downarrow(*canon, budget);
    r.add(down->certificate, p + "cd.down.");
    r.add(interpolate_check(*canon, *down), p + "cd.interpolate.");
  });

  stage(r, p + "presheaf_cd", [&] {
    r.add(presheaf_downarrow(terminal(omega), budget).checks, p + "presheaf_cd.terminal.");
    r.add(presheaf_downarrow(chain_category(omega, 2), budget).checks, p + "presheaf_cd.chain2.");
  });
  stage(r, p + "product_cd", [&] { r.add(product_downarrow(omega, {*canon, *canon}, budget).checks, p + "product_cd."); });

  stage(r, p + "bijection", [&] {
    r.add(closure_bijection_check(*canon, budget).checks, p + "closures.");
    r.add(kernel_bijection_check(*canon, budget).checks, p + "kernels.");
  });
  stage(r, p + "raney_buchi", [&] { r.add(raney_buchi(*canon, budget).checks, p + "raney_buchi."); });
  stage(r, p + "kernel_on_functors", [&] { r.add(functor_kernel(*canon, *canon, budget).checks, p + "kernel_on_functors."); });

  if (q.integral()) {
    stage(r, p + "duality", [&] {
      auto rep = duality_check(omega, default_corpus(omega, budget), budget);
      r.add(rep.checks, p + "duality.");
    });
  } else {
    r.add({p + "duality", true, "", true, "not integral"});
  }
  return r;
}

FiniteLattice load_lattice(const std::string& path, std::string* name) {
  const auto text = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j.contains("leq"))
    throw Error(ErrorKind::Parse, path + ": lattice files need \"elements\" and \"leq\"");
  try {
    auto names = j["elements"].get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& pr : j["leq"]) pairs.emplace_back(pr.at(0).get<std::string>(), pr.at(1).get<std::string>());
    if (name) *name = j.value("name", std::filesystem::path(path).stem().string());
    return FiniteLattice::from_relation(names, pairs);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

std::string quantale_to_json(const Quantale& q) {
  nlohmann::ordered_json j;
  j["name"] = q.name();
  j["elements"] = q.lattice().names();
  auto& leq = j["leq"] = nlohmann::ordered_json::array();
  for (Elem a = 0; a < q.size(); ++a)
    for (Elem b = 0; b < q.size(); ++b)
      if (a != b && q.leq(a, b)) leq.push_back({q.elem_name(a), q.elem_name(b)});
  j["unit"] = q.elem_name(q.unit());
  auto& t = j["tensor"] = nlohmann::ordered_json::object();
  for (Elem a = 0; a < q.size(); ++a)
    for (Elem b = a; b < q.size(); ++b) t[q.elem_name(a) + "," + q.elem_name(b)] = q.elem_name(q.tensor(a, b));
  return j.dump(2) + "\n";
}

namespace {

struct Source {
  std::string name;
  FiniteLattice lattice;
};

Report mine_shard(const std::vector<Source>& sources, const MineOptions& options, std::size_t shard) {
  Report out;
  for (const auto& src : sources) {
    EnumerateOptions eo;
    eo.size_bound = std::max<std::size_t>(src.lattice.size(), 1);
    eo.budget = options.budget;
    eo.shard = shard;
    eo.shards = options.shards;
    std::vector<QuantalePtr> found;
    try {
      found = enumerate_quantales(src.lattice, eo, src.name);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SizeBound) throw;
      if (shard == 0) out.budget_skip(src.name + "/enumerate", e);
      continue;
    }
    out.data()["structures"][src.name]["shard" + std::to_string(shard)] = found.size();
    for (const auto& q : found) {
      auto r = theorem_suite(q, options.budget);
      if (r.failed() > 0 && !options.repro_dir.empty()) {
        std::filesystem::create_directories(options.repro_dir);
        std::string file = q->name();
        for (char& ch : file)
          if (ch == '/' || ch == ',' || ch == '=') ch = '_';
        std::ofstream(std::filesystem::path(options.repro_dir) / (file + ".json")) << quantale_to_json(*q);
        std::ofstream failing(std::filesystem::path(options.repro_dir) / (file + ".failures.txt"));
        for (const auto& c : r.checks())
          if (!c.ok && !c.skipped) failing << c.name << ": " << c.witness << "\n";
      }
      out.merge(r);
    }
  }
  return out;
}

}  // namespace

Report mine(const MineOptions& options) {
  std::string command = "mine";
  std::vector<Source> sources;
  if (options.chain_lo > 0) {
    command += " --chain " + std::to_string(options.chain_lo) + ".." + std::to_string(options.chain_hi);
    for (std::size_t n = options.chain_lo; n <= options.chain_hi; ++n)
      sources.push_back({"chain" + std::to_string(n), FiniteLattice::chain(n)});
  }
  for (const auto& path : options.lattice_files) {
    std::string name;
    auto lat = load_lattice(path, &name);
    command += " --lattice " + std::filesystem::path(path).filename().string();
    sources.push_back({name, std::move(lat)});
  }
  const std::size_t shards = std::max<std::size_t>(options.shards, 1);
  MineOptions opts = options;
  opts.shards = shards;

  std::vector<std::future<Report>> jobs;
  for (std::size_t s = 0; s < shards; ++s)
    jobs.push_back(std::async(std::launch::async, [&, s] { return mine_shard(sources, opts, s); }));
  Report merged(command);
  nlohmann::json counts = nlohmann::json::object();
  for (auto& job : jobs) {
    Report r = job.get();
    const auto structures = r.data().value("structures", nlohmann::json::object());
    for (auto& [name, per] : structures.items())
      for (auto& [k, v] : per.items()) counts[name] = counts.value(name, 0) + v.get<std::size_t>();
    r.data().erase("structures");
    merged.merge(r);
  }
  for (const auto& src : sources)
    if (!counts.contains(src.name)) counts[src.name] = "budget";
  merged.data()["structures"] = counts;
  merged.stamp("budget", std::to_string(options.budget.limit));
  merged.stamp("sources", std::to_string(sources.size()));
  return merged;
}

}  // namespace oql
