#include "instance_flags.hpp"

#include "wbary/error.hpp"
#include "wbary/instance_io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

namespace wbary::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool blank(std::string_view s) { return s.find_first_not_of(" \t") == std::string_view::npos; }

// Re-raises a wbary::Error with the offending flag in front.
template <class F>
auto with_flag(const char* flag, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(flag) + ": " + e.what());
  }
}

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::ParseError, "--input: cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace

void InstanceFlags::attach(CLI::App& command) {
  command.add_option("--chi-c", chi_c, "Euler characteristic with compact supports of X");
  command.add_option("--weights", weights, "comma-separated singular weights (p/q or decimals)");
  command.add_option("--rho", rho, "threshold rho (p/q or decimal)");
  command.add_option("--space", space, "compact | lc | even-interior | union");
  command.add_option("--components", components, "CHI:compact|open|even[:I,J];... (1-based points)");
  command.add_option("--input", input, "JSON instance document, or - for stdin");
}

std::vector<Rational> parse_weight_list(std::string_view csv) {
  std::vector<Rational> weights;
  if (blank(csv)) return weights;
  for (std::string_view item : split(csv, ',')) weights.push_back(parse_rational(item));
  return weights;
}

std::vector<ComponentSpec> parse_components(std::string_view spec) {
  std::vector<ComponentSpec> components;
  if (blank(spec)) return components;
  for (std::string_view item : split(spec, ';')) {
    const auto fields = split(item, ':');
    if (fields.size() < 2 || fields.size() > 3) {
      throw Error(ErrorCode::ParseError, "component '" + std::string(item) + "' is not CHI:KIND[:POINTS]");
    }
    ComponentSpec c;
    c.chi_c = parse_integer(fields[0]);
    if (fields[1] == "compact") {
      c.is_compact = true;
    } else if (fields[1] == "open") {
      c.is_compact = false;
    } else if (fields[1] == "even") {
      c.is_compact = false;
      c.even_dim_interior = true;
    } else {
      throw Error(ErrorCode::ParseError, "unknown component kind '" + std::string(fields[1]) + "'");
    }
    if (fields.size() == 3 && !blank(fields[2])) {
      for (std::string_view p : split(fields[2], ',')) {
        const BigInt position = parse_integer(p);
        if (position < 1) throw Error(ErrorCode::ParseError, "singular point positions start at 1");
        c.singular_indices.push_back(static_cast<std::size_t>(to_int64(position) - 1));
      }
    }
    components.push_back(std::move(c));
  }
  return components;
}

ProblemInstance build_instance(const InstanceFlags& flags, std::istream& in) {
  if (!flags.input.empty()) {
    if (!flags.chi_c.empty() || !flags.weights.empty() || !flags.rho.empty() || !flags.space.empty() ||
        !flags.components.empty()) {
      throw Error(ErrorCode::ParseError, "--input cannot be combined with instance flags");
    }
    const std::string text = read_all(flags.input, in);
    return with_flag("--input", [&] { return parse_instance_document(text); });
  }
  if (flags.chi_c.empty()) throw Error(ErrorCode::ParseError, "--chi-c is required");
  if (flags.rho.empty()) throw Error(ErrorCode::ParseError, "--rho is required");

  ProblemInstance instance;
  instance.chi_c = with_flag("--chi-c", [&] { return parse_integer(flags.chi_c); });
  instance.weights = with_flag("--weights", [&] { return parse_weight_list(flags.weights); });
  instance.rho = with_flag("--rho", [&] { return parse_rational(flags.rho); });
  instance.space.components = with_flag("--components", [&] { return parse_components(flags.components); });

  if (!flags.space.empty()) {
    const auto kind = space_kind_from_string(flags.space);
    if (!kind) throw Error(ErrorCode::ParseError, "--space: unknown kind '" + flags.space + "'");
    instance.space.kind = *kind;
  } else if (!instance.space.components.empty()) {
    instance.space.kind = SpaceKind::UnionOfBasic;
  }
  if (!instance.space.components.empty() && instance.space.kind != SpaceKind::UnionOfBasic) {
    throw Error(ErrorCode::ParseError, "--components requires --space union");
  }
  return instance;
}

}  // namespace wbary::cli
