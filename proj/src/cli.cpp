#include "frieze/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "frieze/enumeration.hpp"
#include "frieze/io.hpp"
#include "frieze/propagation.hpp"
#include "frieze/ptolemy.hpp"
#include "frieze/render.hpp"
#include "frieze/triangle.hpp"

namespace frieze::cli {

namespace {

// Input rejected on semantic grounds rather than syntax.
struct Rejected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return json::parse(in);
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open " + path);
    return json::parse(file);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

Integer parse_integer(const std::string& s) {
  const Scalar v = Scalar::parse(s);
  if (!v.is_integer()) throw std::invalid_argument("expected an integer, got " + s);
  return v.numerator();
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const Scalar& v : parse_scalar_list(s)) {
    if (!v.is_integer() || !v.numerator().fits_sint_p()) {
      throw std::invalid_argument("expected small integers, got " + s);
    }
    out.push_back(static_cast<int>(v.numerator().get_si()));
  }
  return out;
}

ValidationReport full_report(const FriezeMap& f) {
  const PatternGrid g = PatternGrid::from_polygon(f);
  ValidationReport r = validate_local(g);
  r.append(validate_tame(g));
  r.append(verify_all_ptolemy(f));
  return r;
}

json scalars_json(const std::vector<Scalar>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Frieze patterns with coefficients", "frieze"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string boundary, quiddity, domain = "nat", file = "-", vertices, format = "ascii";
  std::vector<std::string> nums;
  bool serial = false;

  auto* build = app.add_subcommand("build", "Frieze from boundary and quiddity");
  build->add_option("--boundary", boundary, "d_0,...,d_{m-1}")->required();
  build->add_option("--quiddity", quiddity, "q_0,...,q_{m-1}")->required();
  build->callback([&] {
    action = [&] {
      const BoundarySequence b(parse_scalar_list(boundary));
      const QuiddityCycle q(parse_scalar_list(quiddity));
      const PatternGrid g = build_pattern(b, q);
      ValidationReport r = validate_local(g);
      r.append(validate_tame(g));
      if (!check_glide(g)) r.violations.push_back({"glide", {}, "c_{i,j} != c_{j,i+m}"});
      if (r.ok()) {
        const FriezeMap f = to_polygon(g);
        r.append(verify_all_ptolemy(f));
        if (r.ok()) {
          out << frieze_to_json(f).dump() << '\n';
          return 0;
        }
      }
      out << report_to_json(r).dump() << '\n';
      return 1;
    };
  });

  auto* validate = app.add_subcommand("validate", "Check a frieze JSON file");
  validate->add_option("file", file, "path or - for stdin");
  validate->callback([&] {
    action = [&] {
      const FriezeMap f = frieze_from_json(read_json(file, in));
      const ValidationReport r = full_report(f);
      json j = report_to_json(r);
      j["m"] = f.size();
      out << j.dump() << '\n';
      return r.ok() ? 0 : 1;
    };
  });

  auto* from_tri = app.add_subcommand("from-triangulation", "Frieze of a triangulation JSON file");
  from_tri->add_option("file", file, "path or - for stdin");
  from_tri->callback([&] {
    action = [&] {
      const Triangulation t = triangulation_from_json(read_json(file, in));
      out << frieze_to_json(frieze_from_triangulation(t)).dump() << '\n';
      return 0;
    };
  });

  auto* cut = app.add_subcommand("cut", "Restrict a frieze to a subpolygon");
  cut->add_option("file", file, "path or - for stdin");
  cut->add_option("--vertices", vertices, "increasing vertex list")->required();
  cut->callback([&] {
    action = [&] {
      const FriezeMap f = frieze_from_json(read_json(file, in));
      out << frieze_to_json(cut_subpolygon(f, parse_int_list(vertices))).dump() << '\n';
      return 0;
    };
  });

  auto* acc = app.add_subcommand("accordion", "Triangulation with c_{1,k} = a, c_{1,k+1} = b");
  acc->add_option("values", nums, "a b")->expected(2)->required();
  acc->callback([&] {
    action = [&] {
      const AccordionResult r = accordion(parse_integer(nums[0]), parse_integer(nums[1]));
      json j = triangulation_to_json(r.triangulation);
      j["k"] = r.k;
      out << j.dump() << '\n';
      return 0;
    };
  });

  auto* classify = app.add_subcommand("classify-triangle", "Can (a,b,c) label a triangle?");
  classify->add_option("values", nums, "a b c")->expected(3)->required();
  classify->callback([&] {
    action = [&] {
      const TriangleTriple tr{parse_integer(nums[0]), parse_integer(nums[1]),
                              parse_integer(nums[2])};
      out << (classify_triangle(tr) ? "true" : "false") << '\n';
      return 0;
    };
  });

  auto* realize = app.add_subcommand("realize-triangle", "Triangulation carrying (a,b,c)");
  realize->add_option("values", nums, "a b c")->expected(3)->required();
  realize->callback([&] {
    action = [&] {
      const TriangleTriple tr{parse_integer(nums[0]), parse_integer(nums[1]),
                              parse_integer(nums[2])};
      if (!classify_triangle(tr)) throw Rejected("triple is not realizable");
      const RealizedTriangle r = realize_triangle(tr);
      json j = triangulation_to_json(r.triangulation);
      j["vertices"] = {r.i, r.j, r.k};
      out << j.dump() << '\n';
      return 0;
    };
  });

  auto* enumerate = app.add_subcommand("enumerate", "All friezes with a given boundary");
  enumerate->add_option("--boundary", boundary, "d_0,...,d_{m-1}")->required();
  enumerate->add_option("--domain", domain,
                        "nat | nonzero-int | scaled:p/q | scaled-nat:p/q | set:v1,...");
  enumerate->add_flag("--serial", serial, "single-threaded search");
  enumerate->callback([&] {
    action = [&] {
      const BoundarySequence b(parse_scalar_list(boundary));
      const DomainSpec d = DomainSpec::parse(domain);
      const EnumerationPlan plan = plan_enumeration(b, d);
      const auto found = serial ? enumerate_friezes_serial(b, d) : enumerate_friezes(b, d);
      for (const auto& f : found) out << frieze_to_json(f).dump() << '\n';
      json summary{{"boundary", scalars_json(b.values())},
                   {"domain", d.to_string()},
                   {"count", found.size()},
                   {"bound", plan.bound.B.to_string()}};
      if (plan.scale != Scalar(1)) summary["scale"] = plan.scale.to_string();
      out << json{{"summary", summary}}.dump() << '\n';
      return 0;
    };
  });

  auto* render = app.add_subcommand("render", "Draw a frieze or triangulation");
  render->add_option("--format", format, "ascii | svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("file", file, "path or - for stdin");
  render->callback([&] {
    action = [&] {
      const json j = read_json(file, in);
      if (j.contains("entries")) {
        const FriezeMap f = frieze_from_json(j);
        out << (format == "ascii" ? render_ascii(f) : render_svg(f));
        return 0;
      }
      const Triangulation t = triangulation_from_json(j);
      if (format == "ascii") {
        out << render_ascii(frieze_from_triangulation(t));
        return 0;
      }
      std::optional<std::array<int, 3>> marked;
      if (j.contains("vertices")) marked = j.at("vertices").get<std::array<int, 3>>();
      out << render_svg(t, marked);
      return 0;
    };
  });

  auto error = [&](const std::string& kind, const std::string& message) {
    err << json{{"error", kind}, {"message", message}}.dump() << '\n';
  };
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    error("usage", e.what());
    return 2;
  }
  try {
    return action();
  } catch (const Rejected& e) {
    error("rejected", e.what());
    return 1;
  } catch (const json::exception& e) {
    error("parse", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    error("invalid-argument", e.what());
    return 2;
  } catch (const std::out_of_range& e) {
    error("out-of-range", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    error("domain", e.what());
    return 2;
  }
}

}  // namespace frieze::cli
