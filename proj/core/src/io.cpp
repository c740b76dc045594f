#include "sturmkit/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sturmkit {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

Permutation read_permutation_text(const std::string& text) {
  std::string cleaned;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    cleaned += line;
    cleaned += ' ';
  }
  return parse_permutation(cleaned);
}

Permutation read_permutation_file(const std::string& path) {
  return read_permutation_text(read_text_file(path));
}

ComplexFile read_complex_json(const std::string& text) {
  const json j = json::parse(text);
  ComplexFile out;
  RegularCellComplex& c = out.complex;

  std::optional<int> ball;
  for (const auto& cell : j.at("cells")) {
    const int id = cell.at("id").get<int>();
    const int dim = cell.at("dim").get<int>();
    if (dim == 0)
      c.add_vertex(id);
    else if (dim == 3)
      ball = id;  // edges/faces carry their own records
  }
  for (const auto& e : j.value("edges", json::array()))
    c.add_edge(e.at("id").get<int>(), e.at("tail").get<int>(), e.at("head").get<int>());
  for (const auto& f : j.value("faces", json::array()))
    c.add_face(f.at("id").get<int>(), f.at("circuit").get<std::vector<int>>());
  if (j.contains("ball")) ball = j.at("ball").get<int>();
  if (ball) c.set_ball(*ball);

  if (j.contains("decoration")) {
    const auto& d = j.at("decoration");
    TemplateDecoration dec;
    dec.north = d.at("north").get<int>();
    dec.south = d.at("south").get<int>();
    dec.meridian_ew = d.at("meridian_ew").get<std::vector<int>>();
    dec.meridian_we = d.at("meridian_we").get<std::vector<int>>();
    dec.west = d.at("west").get<std::vector<int>>();
    dec.east = d.at("east").get<std::vector<int>>();
    out.decoration = std::move(dec);
  }
  return out;
}

ComplexFile read_complex_file(const std::string& path) {
  return read_complex_json(read_text_file(path));
}

std::string write_complex_json(const RegularCellComplex& c,
                               const std::optional<TemplateDecoration>& d) {
  json j;
  j["cells"] = json::array();
  for (int id : c.cells()) j["cells"].push_back({{"id", id}, {"dim", c.dim(id)}});
  j["edges"] = json::array();
  for (int e : c.cells_of_dim(1))
    j["edges"].push_back({{"id", e}, {"tail", c.tail(e)}, {"head", c.head(e)}});
  j["faces"] = json::array();
  for (int f : c.cells_of_dim(2)) j["faces"].push_back({{"id", f}, {"circuit", c.circuit(f)}});
  if (c.ball()) j["ball"] = *c.ball();
  if (d) {
    j["decoration"] = {{"north", d->north},
                       {"south", d->south},
                       {"meridian_ew", d->meridian_ew},
                       {"meridian_we", d->meridian_we},
                       {"west", d->west},
                       {"east", d->east}};
  }
  return j.dump(2) + "\n";
}

}  // namespace sturmkit
