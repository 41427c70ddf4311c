#include "fedosov/chart_examples.hpp"

#include <stdexcept>

#include "fedosov/errors.hpp"

namespace fedosov {

namespace {

Chart half_plane(const std::string& omega_text) {
  Chart c({"x", "y"});
  c.omega(0, 1) = c.parse(omega_text);
  c.omega(1, 0) = -c.omega(0, 1);
  c.fields["xi"] = vector_field(c, {RationalFunction(0), c.parse("x")});
  c.structure = {StructureSpec::Kind::LinearType, "xi"};
  c.excluded_locus = "x = 0";
  return c;
}

}  // namespace

Chart example1_with_signs(const std::array<int, 3>& signs) {
  Chart c = half_plane("1/(3*x^2)");
  // christoffel(i, j, k) holds Γᵏᵢⱼ
  c.christoffel(0, 0, 0) = RationalFunction(signs[0]) * c.parse("-4/(3*x)");
  c.christoffel(0, 1, 1) = RationalFunction(signs[1]) * c.parse("2/(3*x)");
  c.christoffel(1, 0, 1) = RationalFunction(signs[2]) * c.parse("-2/(3*x)");
  return c;
}

Chart load_example(int which) {
  if (which == 1) return example1_with_signs({1, 1, 1});
  if (which == 2) {
    Chart c = half_plane("1/x^2");
    c.christoffel(0, 0, 0) = c.parse("-2/x");
    c.fields["eta"] = vector_field(c, {c.parse("x"), c.parse("y")});
    return c;
  }
  throw SchemaError("there are only two built-in examples");
}

std::vector<SignPattern> example1_sign_search() {
  std::vector<SignPattern> out;
  for (int mask = 0; mask < 8; ++mask) {
    SignPattern p;
    for (int b = 0; b < 3; ++b) p.signs[b] = (mask >> b) & 1 ? -1 : 1;
    const Chart c = example1_with_signs(p.signs);
    p.torsion_free = chart_torsion(c).is_zero();
    p.parallel_omega = covariant_derivative(c, c.christoffel, c.omega).is_zero();
    out.push_back(p);
  }
  return out;
}

Chart load_example1_emended() {
  std::vector<SignPattern> passing;
  for (const auto& p : example1_sign_search()) {
    if (p.torsion_free && p.parallel_omega) passing.push_back(p);
  }
  if (passing.size() != 1) {
    throw std::logic_error("sign search found " + std::to_string(passing.size()) + " admissible patterns");
  }
  return example1_with_signs(passing.front().signs);
}

Chart flat_chart(std::size_t n) {
  std::vector<std::string> coords;
  for (std::size_t i = 0; i < 2 * n; ++i) coords.push_back("x" + std::to_string(i + 1));
  Chart c(coords);
  for (std::size_t i = 0; i < n; ++i) {
    c.omega(i, i + n) = RationalFunction(1);
    c.omega(i + n, i) = RationalFunction(-1);
  }
  return c;
}

Chart load_builtin(const std::string& name) {
  if (name == "example1") return load_example(1);
  if (name == "example1-emended") return load_example1_emended();
  if (name == "example2") return load_example(2);
  if (name == "flat") return flat_chart(1);
  throw SchemaError("unknown built-in chart '" + name + "'");
}

std::vector<ChartMutation> example2_mutations() {
  const Chart base = load_example(2);
  std::vector<ChartMutation> out;
  auto christoffel = [&](const std::string& what, std::size_t i, std::size_t j, std::size_t k,
                         const std::string& text) {
    Chart c = base;
    c.christoffel(i, j, k) = c.parse(text);
    out.push_back({what, std::move(c)});
  };
  auto omega = [&](const std::string& what, const std::string& text) {
    Chart c = base;
    c.omega(0, 1) = c.parse(text);
    c.omega(1, 0) = -c.omega(0, 1);
    out.push_back({what, std::move(c)});
  };
  auto xi = [&](const std::string& what, const std::string& xc, const std::string& yc) {
    Chart c = base;
    c.fields["xi"] = vector_field(c, {c.parse(xc), c.parse(yc)});
    out.push_back({what, std::move(c)});
  };
  christoffel("Gamma^1_11 = -3/x", 0, 0, 0, "-3/x");
  christoffel("Gamma^1_11 = -2/x + 1", 0, 0, 0, "-2/x + 1");
  christoffel("Gamma^2_22 = 1/x", 1, 1, 1, "1/x");
  christoffel("Gamma^1_22 = 1/x", 1, 1, 0, "1/x");
  christoffel("Gamma^2_12 = 1/x", 0, 1, 1, "1/x");
  christoffel("Gamma^1_12 = 1/x", 0, 1, 0, "1/x");
  omega("omega_12 = 2/x^2", "2/x^2");
  omega("omega_12 = 1/x^3", "1/x^3");
  xi("xi = d/dy", "0", "1");
  xi("xi = 2x d/dy", "0", "2*x");
  return out;
}

}  // namespace fedosov
