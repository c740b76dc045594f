// sturmkit command line: validate meanders and cell complexes, derive the
// Hamiltonian path pairs and Sturm permutations of templates, run the scoop
// surgery, the octahedron enumeration, and SVG rendering.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sturmkit/enumeration.hpp"
#include "sturmkit/io.hpp"
#include "sturmkit/path_pairs.hpp"
#include "sturmkit/svg.hpp"
#include "sturmkit/zero_numbers.hpp"

using namespace sturmkit;

namespace {

int report_exit(const Report& r) {
  std::cout << r.to_string();
  return r.ok() ? 0 : 1;
}

int cmd_validate_meander(const std::string& file) {
  const Meander m = Meander::build(read_permutation_file(file));
  Report r;
  r.add("dissipative", m.is_dissipative());
  r.add("Morse", m.is_morse());
  r.add("meander", m.is_meander());
  r.add("Sturm", m.is_sturm());
  if (m.is_sturm()) {
    std::string profile;
    for (int i : m.morse()) profile += std::to_string(i) + " ";
    r.add("Morse numbers", true, profile);
    bool has_o = false;
    for (int i : m.morse()) has_o |= i == 3;
    if (has_o)
      r.merge(m.three_meander_template_report());
    else
      r.add("3-meander template", false, "no Morse-3 crossing");
  }
  return report_exit(r);
}

int cmd_validate_complex(const std::string& file) {
  const ComplexFile in = read_complex_file(file);
  Report r = validate_regular(in.complex);
  r.merge(validate_bipolar(in.complex));
  if (in.decoration) r.merge(validate_three_cell_template(in.complex, *in.decoration));
  return report_exit(r);
}

PathPair pair_of(const ComplexFile& in) {
  if (in.decoration && !in.decoration->meridian_ew.empty())
    return szs_pair({in.complex, *in.decoration});
  return zs_pair(in.complex);
}

int cmd_pair(const std::string& file, bool sigma_only) {
  const ComplexFile in = read_complex_file(file);
  const PathPair p = pair_of(in);
  const Permutation sigma = sigma_from_pair(p);
  if (!sigma_only) {
    auto print = [](const char* name, const std::vector<int>& h) {
      std::cout << name << ":";
      for (int id : h) std::cout << " " << id;
      std::cout << "\n";
    };
    print("h0", p.h0);
    print("h1", p.h1);
  }
  std::cout << "sigma: " << format_one_line(sigma) << "\n";
  std::cout << "cycles: " << format_cycles(sigma) << "\n";
  return 0;
}

int cmd_roundtrip(const std::string& file) {
  const ComplexFile in = read_complex_file(file);
  Report r;
  if (in.decoration && !in.decoration->meridian_ew.empty()) {
    const DecoratedComplex t{in.complex, *in.decoration};
    const Permutation sigma = sigma_from_pair(szs_pair(t));
    r.add("szs pair -> sigma", true, format_one_line(sigma));
    const auto zm = SignedZeroMatrix::from_sigma(sigma);
    const DecoratedComplex back = complex_from_signed_template(hemisphere_template(zm));

    // crossing ids are h0 positions; relabel to the source cells
    const PathPair p = szs_pair(t);
    std::map<int, int> to_cells;
    for (size_t k = 0; k < p.h0.size(); ++k) to_cells[static_cast<int>(k) + 1] = p.h0[k];
    const RegularCellComplex relabeled = back.complex.relabeled(to_cells);
    r.add("reconstruction matches source", relabeled == in.complex);
  } else {
    const Permutation sigma = sigma_from_pair(zs_pair(in.complex));
    r.add("zs pair -> sigma", true, format_one_line(sigma));
    r.add("sigma is Sturm", Meander::build(sigma).is_sturm());
  }
  return report_exit(r);
}

int cmd_scoop(const std::string& file, const std::string& side, const std::string& out) {
  const Meander m = Meander::build(read_permutation_file(file));
  const Meander scooped = scoop(m, side == "west" ? ScoopSide::west : ScoopSide::east);
  const std::string text = format_one_line(scooped.sigma());
  if (out.empty())
    std::cout << text << "\n";
  else
    write_text_file(out, text + "\n");
  return 0;
}

int cmd_enumerate_octahedron(const std::string& poles, bool exhaustive) {
  const PoleChoice choice = poles == "antipodal" ? PoleChoice::antipodal : PoleChoice::adjacent;
  const auto survivors = enumerate_octahedron_templates(choice);
  std::cout << "pole type: " << poles << "\n";
  std::cout << "valid decorated templates: " << survivors.size() << "\n";
  const auto orbits = bucket_by_orbit(survivors);
  std::cout << "orbits (up to trivial equivalences and octahedral symmetry): " << orbits.size()
            << "\n";
  for (const auto& [rep, size] : orbits) {
    int wf = 0, ef = 0;
    for (int id : rep.decoration.west) wf += rep.complex.dim(id) == 2;
    for (int id : rep.decoration.east) ef += rep.complex.dim(id) == 2;
    std::cout << "  orbit size " << size << ", hemisphere faces " << wf << "+" << ef
              << ", poles (" << rep.decoration.north << "," << rep.decoration.south << ")\n";
  }

  if (exhaustive) {
    const RegularCellComplex base = octahedron_base();
    const BarycenterGraph g = barycenter_graph(base);
    const std::pair<int, int> pp = choice == PoleChoice::antipodal ? std::make_pair(1, 6)
                                                                   : std::make_pair(1, 2);
    std::cout << "exhaustive pair scan between poles (" << pp.first << "," << pp.second
              << ")...\n";
    const ScanStats stats = scan_sturm_pairs(g, pp);
    std::cout << "hamiltonian paths: " << stats.path_count << "\n";
    std::cout << "ordered pairs tested: " << stats.pairs_tested << "\n";
    std::cout << "Sturm pairs: " << stats.sturm_pairs << "\n";
    if (choice == PoleChoice::antipodal && stats.sturm_pairs != 0) return 1;
    if (choice == PoleChoice::adjacent && stats.sturm_pairs == 0) return 1;
  }
  return 0;
}

int cmd_make_octahedron(const std::string& out) {
  const DecoratedComplex t = octahedron({1, 2}, {8, 11}, {10, 14});
  const std::string json = write_complex_json(t.complex, t.decoration);
  if (out.empty())
    std::cout << json;
  else
    write_text_file(out, json);
  return 0;
}

int cmd_render(const std::string& file, const std::string& out, int width, int height,
               bool no_labels) {
  RenderSpec spec;
  spec.width = width;
  spec.height = height;
  spec.labels = !no_labels;
  std::string svg;
  if (file.size() > 5 && file.substr(file.size() - 5) == ".json") {
    const ComplexFile in = read_complex_file(file);
    svg = render_complex_svg(in.complex, in.decoration, spec);
  } else {
    svg = render_meander_svg(Meander::build(read_permutation_file(file)), spec);
  }
  if (out.empty())
    std::cout << svg;
  else
    write_text_file(out, svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sturmkit: meander permutations, 3-cell templates, and Sturm path pairs"};
  app.require_subcommand(1);

  std::string file, out, side = "east", poles = "adjacent";
  bool exhaustive = false, no_labels = false;
  int width = 900, height = 420;

  auto* vm = app.add_subcommand("validate-meander", "classify a permutation file");
  vm->add_option("file", file)->required();

  auto* vc = app.add_subcommand("validate-complex", "validate a complex JSON file");
  vc->add_option("file", file)->required();

  auto* pr = app.add_subcommand("pair", "print h0, h1 and sigma of a complex");
  pr->add_option("file", file)->required();

  auto* sg = app.add_subcommand("sigma", "print sigma of a complex");
  sg->add_option("file", file)->required();

  auto* rt = app.add_subcommand("roundtrip", "sigma -> signed template -> complex round trip");
  rt->add_option("file", file)->required();

  auto* sc = app.add_subcommand("scoop", "remove O and one hemisphere from a 3-meander template");
  sc->add_option("file", file)->required();
  sc->add_option("--side", side)->check(CLI::IsMember({"east", "west"}));
  sc->add_option("--out", out);

  auto* en = app.add_subcommand("enumerate-octahedron", "octahedron template enumeration");
  en->add_option("--poles", poles)->check(CLI::IsMember({"adjacent", "antipodal"}));
  en->add_flag("--exhaustive", exhaustive, "also run the full Hamiltonian pair scan");

  auto* rd = app.add_subcommand("render", "render a meander or complex to SVG");
  rd->add_option("file", file)->required();
  rd->add_option("--out", out);
  rd->add_option("--width", width);
  rd->add_option("--height", height);
  rd->add_flag("--no-labels", no_labels);

  auto* mk = app.add_subcommand("make-octahedron", "write the reference solid octahedron JSON");
  mk->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (vm->parsed()) return cmd_validate_meander(file);
    if (vc->parsed()) return cmd_validate_complex(file);
    if (pr->parsed()) return cmd_pair(file, false);
    if (sg->parsed()) return cmd_pair(file, true);
    if (rt->parsed()) return cmd_roundtrip(file);
    if (sc->parsed()) return cmd_scoop(file, side, out);
    if (en->parsed()) return cmd_enumerate_octahedron(poles, exhaustive);
    if (rd->parsed()) return cmd_render(file, out, width, height, no_labels);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
