// Copyright 2026 The salv Authors
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

#include "salv/commands.hpp"

#include <sstream>

#include <json.hpp>

namespace salv {

namespace {

constexpr const char* kModule = "cli";

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void no_dot(std::string_view command) {
  throw Error(ErrorKind::PreconditionViolated, kModule,
              "--format dot is not available for '" + std::string(command) + "'");
}

Json names_of(TypeSubset t, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (Gen s : t.members()) out.push_back(names[s]);
  return out;
}

Json word_of(const Elem& w) {
  Json out = Json::array();
  for (Gen s : w.word) out.push_back(s);
  return out;
}

std::string face_label(const Face& f, const std::vector<std::string>& names) {
  return format_elem(f.rep, names) + " | " + format_subset(f.type, names);
}

std::string cell_label(const SalCell& c, const std::vector<std::string>& names) {
  return "<" + format_subset(c.type, names) + ", " + format_elem(c.elem, names) + ">";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

// Hasse diagram with edges pointing upward.
std::string hasse_dot(std::string_view graph, const std::vector<std::string>& labels,
                      const std::vector<std::vector<std::uint32_t>>& above) {
  std::ostringstream out;
  out << "digraph " << graph << " {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << "  n" << i << " [label=\"" << dot_escape(labels[i]) << "\"];\n";
  }
  const auto cover = covers(above);
  for (std::size_t i = 0; i < cover.size(); ++i) {
    for (std::uint32_t j : cover[i]) out << "  n" << i << " -> n" << j << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json covers_json(const std::vector<std::vector<std::uint32_t>>& above) {
  Json out = Json::array();
  const auto cover = covers(above);
  for (std::size_t i = 0; i < cover.size(); ++i) {
    for (std::uint32_t j : cover[i]) out.push_back(Json::array({i, j}));
  }
  return out;
}

std::string integer_text(const Integer& v) { return v.str(); }

std::string group_text(const DegreeHomology& d) {
  std::string out;
  if (d.betti > 0) out = d.betti == 1 ? "Z" : "Z^" + std::to_string(d.betti);
  for (const Integer& t : d.torsion) out += (out.empty() ? "" : " + ") + std::string("Z/") + integer_text(t);
  return out.empty() ? "0" : out;
}

std::optional<std::size_t> bound(const Session& s, std::optional<std::size_t> override_bound) {
  return override_bound ? override_bound : s.spec().max_length;
}

}  // namespace

Format format_from_string(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "dot") return Format::Dot;
  throw Error(ErrorKind::ParseError, kModule, "unknown format '" + std::string(name) + "'");
}

Space space_from_string(std::string_view name) {
  if (name == "complement") return Space::Complement;
  if (name == "quotient") return Space::Quotient;
  if (name == "manifold") return Space::Manifold;
  if (name == "walls") return Space::Walls;
  throw Error(ErrorKind::ParseError, kModule, "unknown space '" + std::string(name) + "'");
}

std::string_view to_string(Space space) {
  switch (space) {
    case Space::Complement: return "complement";
    case Space::Quotient: return "quotient";
    case Space::Manifold: return "manifold";
    case Space::Walls: return "walls";
  }
  return "";
}

Session::Session(ArrangementSpec spec) : spec_(std::move(spec)), salvetti_(build_arrangement(spec_)) {}

int exit_code(ErrorClass c) {
  switch (c) {
    case ErrorClass::Validation: return 1;
    case ErrorClass::Infeasible: return 2;
    case ErrorClass::Internal: return 3;
  }
  return 3;
}

std::string cmd_validate(const Session& s, Format format) {
  if (format == Format::Dot) no_dot("validate");
  const auto& sys = s.system();
  const auto& chamber = s.arrangement().chamber_complex();
  const auto& names = s.names();
  const auto order = sys.parabolic_order(sys.generators());
  const auto components = sys.components(sys.generators());

  if (format == Format::Json) {
    Json j;
    j["valid"] = true;
    j["generators"] = names;
    Json comps = Json::array();
    for (const auto& c : components) {
      comps.push_back({{"members", names_of(c.members, names)},
                       {"type", c.name},
                       {"order", c.order ? Json(*c.order) : Json(nullptr)}});
    }
    j["components"] = comps;
    j["group_order"] = order ? Json(*order) : Json(nullptr);
    Json acc = Json::array();
    for (TypeSubset t : chamber.acceptable()) acc.push_back(names_of(t, names));
    j["acceptable"] = acc;
    j["dimension"] = chamber.dim();
    j["strict"] = chamber.strict();
    j["euler_sum"] = chamber.euler_sum();
    j["warnings"] = chamber.warnings();
    return dump(j);
  }

  std::ostringstream out;
  out << "valid\n";
  out << "generators:";
  for (const auto& n : names) out << ' ' << n;
  out << "\ncomponents:";
  for (const auto& c : components) {
    out << ' ' << c.name << ' ' << format_subset(c.members, names);
  }
  out << "\ngroup order: " << (order ? std::to_string(*order) : std::string("infinite")) << '\n';
  out << "acceptable:";
  for (TypeSubset t : chamber.acceptable()) out << ' ' << format_subset(t, names);
  out << "\ndimension: " << chamber.dim() << '\n';
  for (const auto& w : chamber.warnings()) out << "warning: " << w << '\n';
  return out.str();
}

std::string cmd_faces(const Session& s, Format format, std::optional<std::size_t> max_length) {
  const auto& names = s.names();
  const FacePoset poset = s.arrangement().build_faces(bound(s, max_length));
  if (format == Format::Dot) {
    std::vector<std::string> labels;
    for (const Face& f : poset.faces) labels.push_back(face_label(f, names));
    return hasse_dot("faces", labels, poset.above);
  }
  if (format == Format::Json) {
    Json j;
    j["count"] = poset.faces.size();
    j["truncated"] = poset.truncated;
    Json faces = Json::array();
    for (const Face& f : poset.faces) faces.push_back({{"rep", word_of(f.rep)}, {"type", names_of(f.type, names)}});
    j["faces"] = faces;
    j["covers"] = covers_json(poset.above);
    return dump(j);
  }
  std::ostringstream out;
  out << "faces: " << poset.faces.size() << (poset.truncated ? " (truncated)" : "") << '\n';
  for (const Face& f : poset.faces) out << face_label(f, names) << '\n';
  return out.str();
}

std::string cmd_salvetti(const Session& s, Format format) {
  const auto& names = s.names();
  const SalPoset poset = s.salvetti().build_sal();
  if (format == Format::Dot) {
    std::vector<std::string> labels;
    for (const SalCell& c : poset.cells) labels.push_back(cell_label(c, names));
    return hasse_dot("salvetti", labels, poset.above);
  }
  std::vector<std::size_t> by_dim;
  for (const SalCell& c : poset.cells) {
    const auto d = static_cast<std::size_t>(c.dimension());
    if (by_dim.size() <= d) by_dim.resize(d + 1);
    ++by_dim[d];
  }
  if (format == Format::Json) {
    Json j;
    j["count"] = poset.cells.size();
    j["cells_by_dimension"] = by_dim;
    Json cells = Json::array();
    for (const SalCell& c : poset.cells) cells.push_back({{"type", names_of(c.type, names)}, {"elem", word_of(c.elem)}});
    j["cells"] = cells;
    j["covers"] = covers_json(poset.above);
    return dump(j);
  }
  std::ostringstream out;
  out << "cells: " << poset.cells.size() << '\n' << "by dimension:";
  for (std::size_t n : by_dim) out << ' ' << n;
  out << '\n';
  for (const SalCell& c : poset.cells) out << cell_label(c, names) << '\n';
  return out.str();
}

std::string cmd_quotient(const Session& s, Format format) {
  if (format == Format::Dot) no_dot("quotient");
  const auto& names = s.names();
  const QuotientComplex q = s.salvetti().quotient_complex();
  const long long chi = euler(chain_complex(q.delta));
  auto chain_text = [&](const SalChain& chain) {
    std::string text;
    for (std::size_t i = 0; i < chain.size(); ++i) text += (i ? " < " : "") + cell_label(chain[i], names);
    return text;
  };
  if (format == Format::Json) {
    Json j;
    Json counts = Json::array();
    for (const auto& level : q.simplices) counts.push_back(level.size());
    j["cell_counts"] = counts;
    j["euler"] = chi;
    Json simplices = Json::array();
    for (std::size_t d = 0; d < q.simplices.size(); ++d) {
      Json level = Json::array();
      for (std::size_t k = 0; k < q.simplices[d].size(); ++k) {
        Json chain = Json::array();
        for (const SalCell& c : q.simplices[d][k]) chain.push_back({{"type", names_of(c.type, names)}, {"elem", word_of(c.elem)}});
        level.push_back({{"chain", chain}, {"faces", d == 0 ? Json::array() : Json(q.delta.faces[d][k])}});
      }
      simplices.push_back(level);
    }
    j["simplices"] = simplices;
    return dump(j);
  }
  std::ostringstream out;
  out << "cells:";
  for (const auto& level : q.simplices) out << ' ' << level.size();
  out << "\neuler: " << chi << '\n';
  for (std::size_t d = 0; d < q.simplices.size(); ++d) {
    for (const SalChain& chain : q.simplices[d]) out << d << ": " << chain_text(chain) << '\n';
  }
  return out.str();
}

HomologyResult space_homology(const Session& s, Space space, std::optional<std::size_t> max_length) {
  switch (space) {
    case Space::Complement: {
      const auto& sal = s.salvetti();
      return homology(chain_complex(sal.order_complex(sal.build_sal())));
    }
    case Space::Quotient:
      return homology(chain_complex(s.salvetti().quotient_complex().delta));
    case Space::Manifold: {
      const auto& arr = s.arrangement();
      return homology(chain_complex(arr.manifold_complex(arr.build_faces(bound(s, max_length)))));
    }
    case Space::Walls: {
      const auto& arr = s.arrangement();
      return homology(chain_complex(arr.walls_subcomplex(arr.build_faces(bound(s, max_length)))));
    }
  }
  return {};
}

std::string cmd_homology(const Session& s, Space space, Format format, std::optional<std::size_t> max_length) {
  if (format == Format::Dot) no_dot("homology");
  const HomologyResult h = space_homology(s, space, max_length);
  if (format == Format::Json) {
    Json j;
    j["space"] = std::string(to_string(space));
    j["betti"] = h.betti();
    Json torsion = Json::array();
    for (const auto& d : h.degrees) {
      Json factors = Json::array();
      for (const Integer& t : d.torsion) factors.push_back(integer_text(t));
      torsion.push_back(factors);
    }
    j["torsion"] = torsion;
    j["euler"] = h.euler;
    return dump(j);
  }
  std::ostringstream out;
  out << "space: " << to_string(space) << '\n';
  for (std::size_t d = 0; d < h.degrees.size(); ++d) out << 'H' << d << ": " << group_text(h.degrees[d]) << '\n';
  out << "betti: [";
  const auto betti = h.betti();
  for (std::size_t d = 0; d < betti.size(); ++d) out << (d ? ", " : "") << betti[d];
  out << "]\neuler: " << h.euler << '\n';
  return out.str();
}

std::string cmd_pi1(const Session& s, Format format) {
  if (format == Format::Dot) no_dot("pi1");
  const Presentation p = s.salvetti().pi1_presentation();
  const DegreeHomology h1 = h1_from_presentation(p);
  if (format == Format::Json) {
    Json j;
    Json gens = Json::array();
    for (int i = 0; i < p.generator_count; ++i) {
      gens.push_back({{"symbol", p.symbol(static_cast<Gen>(i))}, {"generator", s.names()[static_cast<std::size_t>(i)]}});
    }
    j["generators"] = gens;
    Json rels = Json::array();
    for (const Relation& r : p.relations) {
      Json left = Json::array(), right = Json::array();
      for (Gen g : r.left) left.push_back(g);
      for (Gen g : r.right) right.push_back(g);
      rels.push_back({{"left", left}, {"right", right}});
    }
    j["relations"] = rels;
    Json torsion = Json::array();
    for (const Integer& t : h1.torsion) torsion.push_back(integer_text(t));
    j["h1"] = {{"betti", h1.betti}, {"torsion", torsion}};
    return dump(j);
  }
  std::ostringstream out;
  out << "generators:";
  for (int i = 0; i < p.generator_count; ++i) out << ' ' << p.symbol(static_cast<Gen>(i));
  out << "\nrelations: " << p.relations.size() << '\n' << p.to_text();
  out << "H1: " << group_text(h1) << '\n';
  return out.str();
}

std::string cmd_euler(const Session& s, Format format) {
  if (format == Format::Dot) no_dot("euler");
  const SalPoset poset = s.salvetti().build_sal();
  const auto& sys = s.system();
  const auto& chamber = s.arrangement().chamber_complex();
  long long chi = 0;
  for (const SalCell& c : poset.cells) chi += c.dimension() % 2 == 0 ? 1 : -1;
  const auto order = static_cast<long long>(*sys.parabolic_order(sys.generators()));
  const long long expected = (chamber.dim() % 2 == 0 ? 1 : -1) * order;
  const long long quotient_chi = euler(chain_complex(s.salvetti().quotient_complex().delta));

  if (format == Format::Json) {
    Json j;
    j["euler"] = chi;
    j["group_order"] = order;
    j["dimension"] = chamber.dim();
    j["expected"] = expected;
    j["matches"] = chi == expected;
    j["quotient_euler"] = quotient_chi;
    return dump(j);
  }
  std::ostringstream out;
  out << "euler: " << chi << '\n'
      << "group order: " << order << '\n'
      << "dimension: " << chamber.dim() << '\n'
      << "(-1)^dim * |W|: " << expected << (chi == expected ? " (matches)" : " (differs)") << '\n'
      << "quotient euler: " << quotient_chi << '\n';
  return out.str();
}

}  // namespace salv
