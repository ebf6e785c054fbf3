#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "lm/charts.hpp"
#include "lm/json_io.hpp"
#include "lm/weyl.hpp"

namespace lmtool {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

void emit_output(const RunConfig& cfg, const std::string& name, const std::string& content) {
  if (cfg.out.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  fs::create_directories(cfg.out);
  fs::path path = fs::path(cfg.out) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  f << content;
  std::cout << path.string() << '\n';
}

namespace {

ordered_json elem_to_json(const lm::weyl::Group& G, const lm::weyl::Elem& w, bool extreme) {
  ordered_json j;
  j["t"] = w.t;
  j["perm"] = w.w.perm;
  j["signs"] = w.w.signs;
  j["length"] = G.length(w);
  j["extreme"] = extreme;
  auto [word, omega] = G.reduced_word(w);
  j["word"] = word;
  j["omega"] = omega;
  return j;
}

std::vector<int> resolve_index(const lm::weyl::Group& G,
                               const std::optional<std::vector<int>>& index) {
  std::vector<int> I;
  if (index) {
    I = *index;
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
  } else {
    for (int i = 0; i <= G.m(); ++i) I.push_back(i);  // Iwahori
  }
  auto all = G.all_parahoric_indices();
  if (std::find(all.begin(), all.end(), I) == all.end())
    throw UsageError("invalid parahoric index set for n = " + std::to_string(G.n()));
  return I;
}

void check_signature(const lm::weyl::Group& G, int r, int s) {
  if (s < 0 || r < s || r + s != G.n())
    throw UsageError("signature must satisfy r + s = n and 0 <= s <= r");
}

std::string tag(int n, int r, int s) {
  return "n" + std::to_string(n) + "_r" + std::to_string(r) + "_s" + std::to_string(s);
}

}  // namespace

int cmd_admissible(const RunConfig& cfg, int n, int r, int s,
                   const std::optional<std::vector<int>>& index, bool with_svg) {
  lm::weyl::Group G(n);
  check_signature(G, r, s);
  std::vector<int> I = resolve_index(G, index);
  if (with_svg && G.m() > 2) throw UsageError("--svg requires relative rank <= 2");

  std::set<lm::weyl::Elem> extremes;
  for (const auto& w : G.extreme_elements(r, s)) extremes.insert(G.project_double_coset(w, I));

  std::set<lm::weyl::Elem> seen;
  std::vector<lm::weyl::Elem> elems;
  for (const auto& w : G.admissible_set(r, s)) {
    lm::weyl::Elem p = G.project_double_coset(w, I);
    if (seen.insert(p).second) elems.push_back(p);
  }
  std::sort(elems.begin(), elems.end(), [&](const auto& a, const auto& b) {
    int la = G.length(a), lb = G.length(b);
    if (la != lb) return la < lb;
    return a < b;
  });

  ordered_json j;
  j["config"] = cfg.to_json();
  j["n"] = n;
  j["r"] = r;
  j["s"] = s;
  j["index"] = I;
  j["count"] = elems.size();
  std::map<int, int> hist;
  ordered_json arr = ordered_json::array();
  for (const auto& w : elems) {
    ++hist[G.length(w)];
    arr.push_back(elem_to_json(G, w, extremes.count(w) > 0));
  }
  j["elements"] = std::move(arr);
  ordered_json hj;
  for (auto [len, cnt] : hist) hj[std::to_string(len)] = cnt;
  j["length_histogram"] = std::move(hj);

  ordered_json chain = ordered_json::array();
  for (const auto& c : G.adm0(r, s)) chain.push_back(c.e);
  j["adm0"] = std::move(chain);

  if (with_svg) {
    std::string svg = G.emit_alcove_svg(r, s, I);
    if (cfg.out.empty()) {
      j["svg"] = svg;
    } else {
      std::string name = "admissible_" + tag(n, r, s) + ".svg";
      emit_output(cfg, name, svg);
      j["svg"] = name;
    }
  }
  emit_output(cfg, "admissible_" + tag(n, r, s) + ".json", j.dump(2));
  return kPass;
}

int cmd_svg(const RunConfig& cfg, int n, int r, int s,
            const std::optional<std::vector<int>>& index) {
  lm::weyl::Group G(n);
  check_signature(G, r, s);
  std::vector<int> I = resolve_index(G, index);
  if (G.m() > 2) throw UsageError("svg requires relative rank <= 2");
  emit_output(cfg, "alcoves_" + tag(n, r, s) + ".svg", G.emit_alcove_svg(r, s, I));
  return kPass;
}

int cmd_chart(const RunConfig& cfg, const std::string& kase, int n, int r, int s,
              const std::string& level) {
  using namespace lm::charts;
  Level lv;
  if (level == "naive") lv = Level::Naive;
  else if (level == "wedge") lv = Level::Wedge;
  else if (level == "spin") lv = Level::Spin;
  else throw UsageError("--level must be naive, wedge, or spin");

  std::optional<lm::Ideal> ideal;
  try {
    if (kase == "A" || kase == "B" || kase == "B1") {
      Case c = kase == "A" ? Case::A : (kase == "B" ? Case::B : Case::B1);
      ideal = chart_ideal({c, n, r, s, lv}, cfg.field());
    } else if (kase == "picard") {
      if (n && (n != 3 || r != 2 || s != 1))
        throw std::invalid_argument("the Picard chart has n = 3, (r, s) = (2, 1)");
      ideal = chart_ideal({Case::PicardI1, 3, 2, 1, lv}, cfg.field());
      n = 3; r = 2; s = 1;
    } else if (kase == "example1" || kase == "example2") {
      OrthExample w = kase == "example1" ? OrthExample::Example1 : OrthExample::Example2;
      ideal = orthogonal_chart_ideal(w, lv, cfg.field());
    } else {
      throw UsageError("--case must be A, B, B1, picard, example1, or example2");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid chart spec: ") + e.what());
  }
  ordered_json j;
  j["config"] = cfg.to_json();
  j["case"] = kase;
  j["n"] = n;
  j["r"] = r;
  j["s"] = s;
  j["level"] = level;
  j["num_gens"] = ideal->gens().size();
  j["ideal"] = lm::ideal_to_json(*ideal);
  std::string name = "chart_" + kase + (kase[0] == 'e' ? "" : "_" + tag(n, r, s)) +
                     "_" + level + ".json";
  emit_output(cfg, name, j.dump(2));
  return kPass;
}

int cmd_flatness(const RunConfig& cfg, const std::string& ideal_file, const std::string& var) {
  std::ifstream in(ideal_file, std::ios::binary);
  if (!in) throw UsageError("cannot read " + ideal_file);
  std::optional<lm::Ideal> ideal;
  try {
    nlohmann::json doc = nlohmann::json::parse(in);
    // accept both a bare ideal and a cmd_chart output wrapping one
    ideal = lm::ideal_from_json(doc.contains("ideal") ? doc["ideal"] : doc);
  } catch (const std::exception& e) {
    throw UsageError(std::string("cannot parse ideal: ") + e.what());
  }

  ordered_json j;
  j["config"] = cfg.to_json();
  j["input"] = fs::path(ideal_file).filename().string();
  j["uniformizer"] = var;
  int code = kPass;
  try {
    lm::FlatnessReport rep = lm::is_flat_over_dvr(*ideal, var, cfg.gb());
    j["status"] = "COMPLETE";
    j["flat"] = rep.flat;
    if (rep.witness) j["witness"] = rep.witness->str();
  } catch (const lm::BudgetExhausted& e) {
    j["status"] = "INCONCLUSIVE";
    j["detail"] = e.what();
    code = kInconclusive;
  }
  emit_output(cfg, "flatness.json", j.dump(2));
  return code;
}

}  // namespace lmtool
