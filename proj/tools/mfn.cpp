// Batch front end: parse an edge-list file, dispatch one analysis, print a
// human-readable or JSON report.  All computation happens in the library;
// this file only shuffles values in and out.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mfn/analysis.hpp"
#include "mfn/core.hpp"
#include "mfn/filters.hpp"
#include "mfn/graph_io.hpp"
#include "mfn/iterate.hpp"
#include "mfn/primes.hpp"
#include "mfn/setops.hpp"
#include "mfn/walks.hpp"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;

json set_to_json(const mfn::VertexSet& s) {
  json arr = json::array();
  for (mfn::Vertex v : s.elements()) arr.push_back(v);
  return arr;
}

std::string set_to_text(const mfn::VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (mfn::Vertex v : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

json distance_to_json(const mfn::Distance& d) {
  if (!d) return json("inf");
  return json(*d);
}

json classification_to_json(const mfn::PropertyReport& rep) {
  return json{{"everywhereloop", rep.everywhereloop},
              {"loopless", rep.loopless},
              {"nontrivial", rep.nontrivial},
              {"oriented", rep.oriented},
              {"orgraph", rep.orgraph},
              {"simple_graph", rep.simple_graph},
              {"strict", rep.strict},
              {"total", rep.total},
              {"transitive", rep.transitive},
              {"undirected", rep.undirected}};
}

std::vector<std::string> true_flags(const mfn::PropertyReport& rep) {
  std::vector<std::string> out;
  if (rep.everywhereloop) out.push_back("everywhereloop");
  if (rep.loopless) out.push_back("loopless");
  if (rep.nontrivial) out.push_back("nontrivial");
  if (rep.oriented) out.push_back("oriented");
  if (rep.orgraph) out.push_back("orgraph");
  if (rep.simple_graph) out.push_back("simple_graph");
  if (rep.strict) out.push_back("strict");
  if (rep.total) out.push_back("total");
  if (rep.transitive) out.push_back("transitive");
  if (rep.undirected) out.push_back("undirected");
  return out;
}

json input_block(const std::string& path, const mfn::ParsedGraph& g) {
  return json{{"directed", g.edges.directed},
              {"edges", g.edges.edges.size()},
              {"file", std::filesystem::path(path).filename().string()},
              {"vertices", g.edges.universe.size()}};
}

void emit(const json& report, bool as_json) {
  if (as_json) std::cout << report.dump(2) << "\n";
}

std::vector<mfn::Vertex> parse_vertex_list(const std::string& text) {
  std::vector<mfn::Vertex> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t used = 0;
    unsigned long value = std::stoul(text.substr(pos), &used);
    out.push_back(static_cast<mfn::Vertex>(value));
    pos += used;
    if (pos < text.size()) {
      if (text[pos] != ',') throw mfn::bad_argument("expected comma in list");
      ++pos;
    }
  }
  if (out.empty()) throw mfn::bad_argument("empty vertex list");
  return out;
}

mfn::IntegerSet parse_integer_set(const std::string& text) {
  if (text == "evens") return mfn::IntegerSet::evens();
  if (text == "odds") return mfn::IntegerSet::odds();
  if (text == "primes") return mfn::IntegerSet::all_primes();
  std::vector<std::uint64_t> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t used = 0;
    values.push_back(std::stoull(text.substr(pos), &used));
    pos += used;
    if (pos < text.size()) {
      if (text[pos] != ',') throw mfn::bad_argument("expected comma in list");
      ++pos;
    }
  }
  if (values.empty()) throw mfn::bad_argument("empty integer set");
  return mfn::IntegerSet::explicit_set(std::move(values));
}

int run_analyze(const std::string& path, bool as_json) {
  const mfn::ParsedGraph parsed = mfn::parse_graph_file(path);
  const mfn::MultiFunction f = parsed.to_multifunction();
  const mfn::PropertyReport rep = mfn::classify(f);

  json result;
  result["classification"] = classification_to_json(rep);
  result["connected"] = mfn::is_connected(f);
  result["domain"] = set_to_json(mfn::domain(f));
  result["codomain"] = set_to_json(mfn::codomain(f));

  std::optional<std::vector<mfn::VertexSet>> comps;
  if (rep.undirected) comps = mfn::components(f);
  if (comps) {
    json arr = json::array();
    for (const auto& c : *comps) arr.push_back(set_to_json(c));
    result["components"] = arr;
  } else {
    result["components"] = nullptr;
  }

  std::optional<mfn::Bipartition> split;
  const bool bipartite_defined = rep.simple_graph && rep.strict;
  if (bipartite_defined) {
    split = mfn::bipartition(f);
    result["bipartite"] = split.has_value();
    if (split)
      result["partition"] =
          json::array({set_to_json(split->side_u), set_to_json(split->side_w)});
    else
      result["partition"] = nullptr;
  } else {
    result["bipartite"] = nullptr;
    result["partition"] = nullptr;
  }

  if (as_json) {
    emit(json{{"command", json{{"name", "analyze"}}},
              {"input", input_block(path, parsed)},
              {"result", result}},
         true);
    return 0;
  }

  std::cout << "vertices: " << parsed.edges.universe.size() << "\n";
  std::cout << "edges: " << parsed.edges.edges.size() << "\n";
  std::cout << "directed: " << (parsed.edges.directed ? "true" : "false")
            << "\n";
  std::cout << "classification:";
  for (const auto& flag : true_flags(rep)) std::cout << " " << flag;
  std::cout << "\n";
  std::cout << "connected: " << (result["connected"].get<bool>() ? "true" : "false")
            << "\n";
  if (comps) {
    std::cout << "components:";
    for (const auto& c : *comps) std::cout << " " << set_to_text(c);
    std::cout << "\n";
  }
  if (bipartite_defined) {
    std::cout << "bipartite: " << (split ? "true" : "false") << "\n";
    if (split)
      std::cout << "partition: " << set_to_text(split->side_u) << " / "
                << set_to_text(split->side_w) << "\n";
  } else {
    std::cout << "bipartite: n/a\n";
  }
  return 0;
}

int run_iterate(const std::string& path, std::int64_t power,
                std::optional<mfn::Vertex> seed,
                const std::optional<std::string>& set_text, bool as_json) {
  const mfn::ParsedGraph parsed = mfn::parse_graph_file(path);
  const mfn::MultiFunction f = parsed.to_multifunction();

  json command{{"name", "iterate"}, {"power", power}};
  json result;
  std::string human;
  if (seed) {
    command["seed"] = *seed;
    if (!f.universe().contains(*seed))
      throw mfn::bad_argument("seed vertex outside universe");
    const mfn::VertexSet row = mfn::power_image(f, power)(*seed);
    result["row"] = set_to_json(row);
    human = set_to_text(row);
  } else if (set_text) {
    mfn::VertexSet a(f.universe());
    for (mfn::Vertex v : parse_vertex_list(*set_text)) a.insert(v);
    command["set"] = set_to_json(a);
    const mfn::VertexSet image = mfn::power_image_set(f, power, a);
    result["set"] = set_to_json(image);
    human = set_to_text(image);
  } else {
    const mfn::MultiFunction powered = mfn::power_image(f, power);
    json table = json::array();
    for (mfn::Vertex v = 0; v < f.universe().size(); ++v)
      table.push_back(set_to_json(powered(v)));
    result["table"] = table;
    for (mfn::Vertex v = 0; v < f.universe().size(); ++v)
      human += std::to_string(v) + ": " + set_to_text(powered(v)) + "\n";
  }

  if (as_json) {
    emit(json{{"command", command},
              {"input", input_block(path, parsed)},
              {"result", result}},
         true);
    return 0;
  }
  std::cout << human;
  if (!human.empty() && human.back() != '\n') std::cout << "\n";
  return 0;
}

int run_walks(const std::string& path, const mfn::WalkQuery& q, bool enumerate,
              bool as_json) {
  const mfn::ParsedGraph parsed = mfn::parse_graph_file(path);
  const mfn::MultiFunction f = parsed.to_multifunction();

  json command{{"enumerate", enumerate},
               {"from", q.from},
               {"length", q.length},
               {"name", "walks"},
               {"to", q.to}};
  json result;
  result["exists"] = mfn::walk_exists(f, q);
  std::vector<mfn::Word> walks;
  if (enumerate) {
    walks = mfn::enumerate_walks(f, q);
    json arr = json::array();
    for (const auto& w : walks) arr.push_back(w);
    result["walks"] = arr;
  }

  if (as_json) {
    emit(json{{"command", command},
              {"input", input_block(path, parsed)},
              {"result", result}},
         true);
    return 0;
  }
  std::cout << "exists: " << (result["exists"].get<bool>() ? "true" : "false")
            << "\n";
  if (enumerate) {
    std::cout << "walks: " << walks.size() << "\n";
    for (const auto& w : walks) {
      for (std::size_t i = 0; i < w.size(); ++i)
        std::cout << (i ? " " : "") << w[i];
      std::cout << "\n";
    }
  }
  return 0;
}

int run_metric(const std::string& path, bool as_json) {
  const mfn::ParsedGraph parsed = mfn::parse_graph_file(path);
  const mfn::MultiFunction f = parsed.to_multifunction();
  const mfn::DistanceMatrix dm = mfn::metric(f);
  const mfn::Distance diam =
      mfn::diameter(f, mfn::VertexSet::full(f.universe()));

  json rows = json::array();
  for (mfn::Vertex u = 0; u < f.universe().size(); ++u) {
    json row = json::array();
    for (mfn::Vertex w = 0; w < f.universe().size(); ++w)
      row.push_back(distance_to_json(dm.at(u, w)));
    rows.push_back(row);
  }

  if (as_json) {
    emit(json{{"command", json{{"name", "metric"}}},
              {"input", input_block(path, parsed)},
              {"result", json{{"diameter", distance_to_json(diam)},
                              {"distances", rows}}}},
         true);
    return 0;
  }
  for (mfn::Vertex u = 0; u < f.universe().size(); ++u) {
    for (mfn::Vertex w = 0; w < f.universe().size(); ++w) {
      const mfn::Distance d = dm.at(u, w);
      std::cout << (w ? " " : "") << (d ? std::to_string(*d) : "inf");
    }
    std::cout << "\n";
  }
  std::cout << "diameter: " << (diam ? std::to_string(*diam) : "inf") << "\n";
  return 0;
}

int run_filters(const std::string& path, const std::string& family,
                const std::optional<std::string>& set_text, bool as_json) {
  const mfn::ParsedGraph parsed = mfn::parse_graph_file(path);
  const mfn::MultiFunction f = parsed.to_multifunction();

  json command{{"family", family}, {"name", "filters"}};
  std::optional<mfn::VertexSet> a;
  if (family == "neigh" || family == "wall") {
    if (!set_text) {
      std::cerr << "error: --family " << family << " requires --set\n";
      return kExitUsage;
    }
    a = mfn::VertexSet(f.universe());
    for (mfn::Vertex v : parse_vertex_list(*set_text)) a->insert(v);
    command["set"] = set_to_json(*a);
  }

  mfn::SetFamily fam(f.universe());
  if (family == "neigh")
    fam = mfn::neigh_family(f, *a);
  else if (family == "wall")
    fam = mfn::wall_family(f, *a);
  else if (family == "isol")
    fam = mfn::isol_family(f);
  else if (family == "build")
    fam = mfn::build_family(f);
  else {
    std::cerr << "error: unknown family '" << family << "'\n";
    return kExitUsage;
  }

  json members = json::array();
  for (const auto& s : fam.members()) members.push_back(set_to_json(s));
  const bool ideal = mfn::is_ideal(fam);
  const bool filter = mfn::is_filter(fam);

  if (as_json) {
    emit(json{{"command", command},
              {"input", input_block(path, parsed)},
              {"result", json{{"family", members},
                              {"filter", filter},
                              {"ideal", ideal}}}},
         true);
    return 0;
  }
  for (const auto& s : fam.members()) std::cout << set_to_text(s) << "\n";
  std::cout << "ideal: " << (ideal ? "true" : "false") << "\n";
  std::cout << "filter: " << (filter ? "true" : "false") << "\n";
  return 0;
}

struct PrimesOptions {
  std::uint64_t bound = 0;
  std::optional<std::uint64_t> leaf;
  std::optional<std::uint64_t> divisors;
  std::optional<std::uint64_t> factor;
  std::optional<std::string> plus;
  std::optional<std::string> minus;
  std::optional<std::string> wall;
};

int run_primes(const PrimesOptions& opt, bool as_json) {
  json command{{"name", "primes"}};
  json result;
  std::string human;

  auto list_to_json = [](const std::vector<std::uint64_t>& xs) {
    json arr = json::array();
    for (auto x : xs) arr.push_back(x);
    return arr;
  };
  auto list_to_text = [](const std::vector<std::uint64_t>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
      out += (i ? " " : "") + std::to_string(xs[i]);
    return out;
  };

  const int actions = (opt.leaf ? 1 : 0) + (opt.divisors ? 1 : 0) +
                      (opt.factor ? 1 : 0) + (opt.plus ? 1 : 0) +
                      (opt.minus ? 1 : 0) + (opt.wall ? 1 : 0);
  if (actions != 1) {
    std::cerr << "error: primes needs exactly one of --leaf, --divisors, "
                 "--factor, --plus, --minus, --wall\n";
    return kExitUsage;
  }

  if (opt.wall) {
    command["wall"] = *opt.wall;
    const bool member =
        mfn::wall_aleph0_contains(mfn::SetDescription::parse(*opt.wall));
    result["wall_aleph0"] = member;
    human = member ? "true" : "false";
  } else {
    const mfn::PrimeWindow window(opt.bound);
    if (opt.leaf) {
      command["leaf"] = *opt.leaf;
      const auto xs = mfn::prime_leaf(*opt.leaf, window);
      result["leaf"] = list_to_json(xs);
      human = list_to_text(xs);
    } else if (opt.divisors) {
      command["divisors"] = *opt.divisors;
      const auto xs = mfn::prime_divisors(*opt.divisors);
      result["divisors"] = list_to_json(xs);
      human = list_to_text(xs);
    } else if (opt.factor) {
      command["factor"] = *opt.factor;
      const auto ev = mfn::factor_exponents(*opt.factor);
      json arr = json::array();
      for (auto [p, e] : ev.factors) arr.push_back(json::array({p, e}));
      result["factorization"] = arr;
      for (std::size_t i = 0; i < ev.factors.size(); ++i)
        human += (i ? " " : "") + std::to_string(ev.factors[i].first) + "^" +
                 std::to_string(ev.factors[i].second);
    } else if (opt.plus) {
      command["plus"] = *opt.plus;
      const auto xs = mfn::prime_plus(parse_integer_set(*opt.plus), window);
      result["plus"] = list_to_json(xs);
      human = list_to_text(xs);
    } else if (opt.minus) {
      command["minus"] = *opt.minus;
      const auto xs = mfn::prime_minus(parse_integer_set(*opt.minus), window);
      result["minus"] = list_to_json(xs);
      human = list_to_text(xs);
    }
  }

  if (as_json) {
    emit(json{{"command", command},
              {"input", json{{"bound", opt.bound}}},
              {"result", result}},
         true);
    return 0;
  }
  std::cout << human << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multifunction graph calculus"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a JSON report");

  std::string path;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", path, "edge list file")->required();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "classify and analyze");
  add_file(analyze);

  CLI::App* iterate = app.add_subcommand("iterate", "apply an image power");
  add_file(iterate);
  std::int64_t power = 0;
  std::optional<mfn::Vertex> seed;
  std::optional<std::string> set_text;
  iterate->add_option("--power", power, "exponent")->required();
  iterate->add_option("--seed", seed, "single source vertex");
  iterate->add_option("--set", set_text, "comma-separated vertex set");

  CLI::App* walks = app.add_subcommand("walks", "walk queries");
  add_file(walks);
  mfn::WalkQuery query;
  bool enumerate = false;
  walks->add_option("--from", query.from, "start vertex")->required();
  walks->add_option("--to", query.to, "end vertex")->required();
  walks->add_option("--length", query.length, "edge count")->required();
  walks->add_flag("--enumerate", enumerate, "list the walks");

  CLI::App* metric = app.add_subcommand("metric", "distance matrix");
  add_file(metric);

  CLI::App* filters = app.add_subcommand("filters", "set families");
  add_file(filters);
  std::string family;
  std::optional<std::string> family_set;
  filters->add_option("--family", family, "neigh|wall|isol|build")->required();
  filters->add_option("--set", family_set, "comma-separated vertex set");

  CLI::App* primes = app.add_subcommand("primes", "prime-divisor window");
  PrimesOptions popt;
  primes->add_option("--bound", popt.bound, "window upper bound")->required();
  primes->add_option("--leaf", popt.leaf, "powers of a prime");
  primes->add_option("--divisors", popt.divisors, "prime divisor set");
  primes->add_option("--factor", popt.factor, "full factorization");
  primes->add_option("--plus", popt.plus,
                     "integers with all divisors in the set");
  primes->add_option("--minus", popt.minus,
                     "integers with some divisor in the set");
  primes->add_option("--wall", popt.wall,
                     "cofinite wall membership for a set description");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(path, as_json);
    if (iterate->parsed()) {
      if (seed && set_text) {
        std::cerr << "error: --seed and --set are mutually exclusive\n";
        return kExitUsage;
      }
      return run_iterate(path, power, seed, set_text, as_json);
    }
    if (walks->parsed()) return run_walks(path, query, enumerate, as_json);
    if (metric->parsed()) return run_metric(path, as_json);
    if (filters->parsed())
      return run_filters(path, family, family_set, as_json);
    if (primes->parsed()) return run_primes(popt, as_json);
  } catch (const mfn::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const mfn::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
  return kExitUsage;
}
