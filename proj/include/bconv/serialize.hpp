#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bconv/algebra.hpp"
#include "bconv/convergence.hpp"
#include "bconv/finite_topology.hpp"
#include "bconv/forcing.hpp"
#include "bconv/omega_set.hpp"
#include "bconv/sequence.hpp"

namespace bconv {

using json = nlohmann::json;

inline json to_json(const Algebra& a) { return json{{"atoms", a.atoms()}}; }

inline Algebra algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("atoms") ||
      !j.at("atoms").is_number_integer())
    throw structural_error("algebra json must be {\"atoms\": n}");
  return Algebra(j.at("atoms").get<int>());
}

inline json to_json(const ElementSet& s) {
  json arr = json::array();
  for (word_t w : s.words()) arr.push_back(w);
  return arr;
}

inline json to_json(const OmegaSet& a) {
  json prefix = json::array(), cycle = json::array();
  for (auto b : a.prefix()) prefix.push_back(static_cast<int>(b));
  for (auto b : a.cycle()) cycle.push_back(static_cast<int>(b));
  return json{{"prefix", prefix}, {"cycle", cycle}};
}

inline OmegaSet omega_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("prefix") || !j.contains("cycle"))
    throw structural_error("omega set json must be {\"prefix\", \"cycle\"}");
  std::vector<std::uint8_t> prefix, cycle;
  for (const auto& b : j.at("prefix"))
    prefix.push_back(static_cast<std::uint8_t>(b.get<int>()));
  for (const auto& b : j.at("cycle"))
    cycle.push_back(static_cast<std::uint8_t>(b.get<int>()));
  return OmegaSet(std::move(prefix), std::move(cycle));
}

inline json to_json(const EpSequence& x) {
  json prefix = json::array(), cycle = json::array();
  for (word_t w : x.prefix()) prefix.push_back(w);
  for (word_t w : x.cycle()) cycle.push_back(w);
  return json{{"algebra", to_json(x.algebra())},
              {"prefix", prefix},
              {"cycle", cycle}};
}

inline EpSequence sequence_from_json(const json& j) {
  Algebra algebra = algebra_from_json(j.at("algebra"));
  std::vector<word_t> prefix, cycle;
  for (const auto& w : j.at("prefix")) prefix.push_back(w.get<word_t>());
  for (const auto& w : j.at("cycle")) cycle.push_back(w.get<word_t>());
  return EpSequence(algebra, std::move(prefix), std::move(cycle));
}

inline json to_json(const FiniteTopology& t) {
  json sets = json::array();
  for (mask_t c : t.closed_sets()) {
    json one = json::array();
    for (word_t w = 0; w <= t.algebra().top_word(); ++w)
      if ((c >> w) & 1u) one.push_back(w);
    sets.push_back(one);
  }
  return json{{"algebra", to_json(t.algebra())}, {"closed_sets", sets}};
}

inline FiniteTopology topology_from_json(const json& j) {
  Algebra algebra = algebra_from_json(j.at("algebra"));
  std::vector<mask_t> closed;
  for (const auto& set : j.at("closed_sets")) {
    mask_t m = 0;
    for (const auto& w : set) {
      word_t e = w.get<word_t>();
      if (e > algebra.top_word())
        throw structural_error("closed set element outside carrier");
      m |= mask_t(1) << e;
    }
    closed.push_back(m);
  }
  return FiniteTopology(algebra, std::move(closed));
}

/// Per-sequence report of the name semantics: truth values, iterated
/// limits, limit pair and the per-atom traces.
inline json forcing_report_json(const EpSequence& x) {
  auto bv = b_values(x);
  auto il = iterated_limits(x);
  auto [inf, sup] = lim_inf_sup(x);
  json b = json::array();
  for (const auto& e : bv) b.push_back(e.word);
  json traces = json::object();
  for (int i = 0; i < x.algebra().atoms(); ++i) {
    Element atom(x.algebra(), word_t(1) << i);
    traces[std::to_string(atom.word)] = to_json(atom_trace(x, atom));
  }
  return json{{"b", b},
              {"ax", il.lower.word},
              {"bx", il.upper.word},
              {"liminf", inf.word},
              {"limsup", sup.word},
              {"traces", traces},
              {"semantics",
               "atomic algebra: every set in the extension is a ground-model "
               "set, so the old/non-splitting qualifiers are trivial and "
               "b1 = b2 = b3 = b4"}};
}

/// Sequence literal "[p1,p2]|[c1,c2]" with integer element words.
inline EpSequence parse_sequence_literal(const std::string& text,
                                         const Algebra& algebra) {
  auto fail = [&]() -> EpSequence {
    throw structural_error("sequence literal must look like [1,2]|[3,0]: " +
                           text);
  };
  auto bar = text.find('|');
  if (bar == std::string::npos) return fail();
  auto parse_list = [&](std::string part) {
    std::vector<word_t> out;
    std::erase_if(part, [](char c) { return c == ' ' || c == '\t'; });
    if (part.size() < 2 || part.front() != '[' || part.back() != ']')
      fail();
    part = part.substr(1, part.size() - 2);
    if (part.empty()) return out;
    std::stringstream ss(part);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) fail();
      std::size_t pos = 0;
      unsigned long v = std::stoul(item, &pos);
      if (pos != item.size()) fail();
      out.push_back(static_cast<word_t>(v));
    }
    return out;
  };
  std::vector<word_t> prefix = parse_list(text.substr(0, bar));
  std::vector<word_t> cycle = parse_list(text.substr(bar + 1));
  return EpSequence(algebra, std::move(prefix), std::move(cycle));
}

/// Convergence names: s | ls | li | l0..l4 | star:<name> | bar:<name> |
/// meet:<name>,<name> | lim:<topology-file>.
inline Convergence parse_convergence(const std::string& name,
                                     const Algebra& algebra);

namespace detail {

inline bool try_parse_convergence(const std::string& name,
                                  const Algebra& algebra,
                                  Convergence* out) {
  try {
    *out = parse_convergence(name, algebra);
    return true;
  } catch (const structural_error&) {
    return false;
  }
}

}  // namespace detail

inline Convergence parse_convergence(const std::string& name,
                                     const Algebra& algebra) {
  if (name == "s") return Convergence::lambda_s();
  if (name == "ls") return Convergence::lambda_ls();
  if (name == "li") return Convergence::lambda_li();
  if (name.size() == 2 && name[0] == 'l' && name[1] >= '0' && name[1] <= '4')
    return Convergence::lambda_index(name[1] - '0');
  if (name.rfind("star:", 0) == 0)
    return Convergence::star(parse_convergence(name.substr(5), algebra));
  if (name.rfind("bar:", 0) == 0)
    return Convergence::bar(parse_convergence(name.substr(4), algebra));
  if (name.rfind("meet:", 0) == 0) {
    const std::string body = name.substr(5);
    // split at the first comma where both halves parse
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] != ',') continue;
      Convergence left = Convergence::lambda_s();
      Convergence right = Convergence::lambda_s();
      if (detail::try_parse_convergence(body.substr(0, i), algebra, &left) &&
          detail::try_parse_convergence(body.substr(i + 1), algebra, &right))
        return Convergence::meet_of(std::move(left), std::move(right));
    }
    throw structural_error("cannot parse meet convergence: " + name);
  }
  if (name.rfind("lim:", 0) == 0) {
    const std::string path = name.substr(4);
    std::ifstream in(path);
    if (!in) throw structural_error("cannot open topology file: " + path);
    json j = json::parse(in);
    FiniteTopology t = topology_from_json(j);
    detail::require_same_algebra(t.algebra(), algebra, "lim convergence");
    return Convergence::lim_of(std::move(t));
  }
  throw structural_error("unknown convergence name: " + name);
}

/// Specialization preorder of a topology in DOT form: an edge a -> b when a
/// lies in the closure of {b} (self-loops omitted).
inline std::string dot_export(const FiniteTopology& t) {
  std::ostringstream out;
  out << "digraph specialization {\n";
  for (word_t w = 0; w <= t.algebra().top_word(); ++w)
    out << "  \"" << w << "\";\n";
  for (word_t b = 0; b <= t.algebra().top_word(); ++b) {
    const mask_t closure = t.point_closure(b);
    for (word_t a = 0; a <= t.algebra().top_word(); ++a)
      if (a != b && ((closure >> a) & 1u))
        out << "  \"" << a << "\" -> \"" << b << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bconv
