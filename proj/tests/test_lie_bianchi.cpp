#include <doctest.h>

#include "fedosov/errors.hpp"
#include "fedosov/lie_algebra.hpp"

using namespace fedosov;

namespace {

using Triple = std::tuple<std::size_t, std::size_t, std::vector<Rational>>;

LieAlgebraPresentation algebra3(const std::vector<Triple>& brackets) {
  LieAlgebraPresentation p({"e1", "e2", "e3"});
  for (const auto& [i, j, v] : brackets) p.set_bracket(i, j, v);
  return p;
}

std::vector<Rational> vec(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

}  // namespace

TEST_CASE("jacobi and antisymmetry") {
  const auto heis = algebra3({{0, 1, vec(0, 0, 1)}});
  CHECK_FALSE(heis.antisymmetry_failure());
  CHECK_FALSE(heis.jacobi_failure());
  CHECK(heis.c(1, 0, 2) == Rational(-1));
  // [e1,e2]=e2, [e2,e3]=e1, [e1,e3]=0 violates Jacobi:
  // [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = 0 + 0 + [e3,e2] = −e1.
  const auto bad = algebra3({{0, 1, vec(0, 1, 0)}, {1, 2, vec(1, 0, 0)}});
  CHECK(bad.jacobi_failure().has_value());
  CHECK_THROWS_AS(bianchi_classify(bad), PreconditionError);
}

TEST_CASE("bianchi types of standard presentations") {
  CHECK(bianchi_classify(algebra3({})).type == "I");
  CHECK(bianchi_classify(algebra3({{0, 1, vec(0, 0, 1)}})).type == "II");
  // [e1,e2] = e2: derived algebra is 1-dimensional and not central
  CHECK(bianchi_classify(algebra3({{0, 1, vec(0, 1, 0)}})).type == "III");
  // ad_{e3} on span{e1,e2} = [[1,1],[0,1]]
  CHECK(bianchi_classify(algebra3({{2, 0, vec(1, 0, 0)}, {2, 1, vec(1, 1, 0)}})).type == "IV");
  CHECK(bianchi_classify(algebra3({{2, 0, vec(1, 0, 0)}, {2, 1, vec(0, 1, 0)}})).type == "V");
  // ad_{e3} = diag(1, −1)
  CHECK(bianchi_classify(algebra3({{2, 0, vec(1, 0, 0)}, {2, 1, vec(0, -1, 0)}})).type == "VI_0");
  // ad_{e3} = rotation
  CHECK(bianchi_classify(algebra3({{2, 0, vec(0, 1, 0)}, {2, 1, vec(-1, 0, 0)}})).type == "VII_0");
  // ad_{e3} = diag(1, 3): ratio 3 and 1/3
  const auto vi = bianchi_classify(algebra3({{2, 0, vec(1, 0, 0)}, {2, 1, vec(0, 3, 0)}}));
  CHECK(vi.type == "VI_h");
  REQUIRE(vi.parameters.size() == 2);
  CHECK(vi.parameters[0] == Rational(1, 3));
  CHECK(vi.parameters[1] == Rational(3));
  CHECK(*vi.invariant == Rational(16, 3));
  // ad_{e3} = [[1,-1],[1,1]], eigenvalues 1 ± i
  const auto vii = bianchi_classify(algebra3({{2, 0, vec(1, 1, 0)}, {2, 1, vec(-1, 1, 0)}}));
  CHECK(vii.type == "VII_h");
  CHECK(*vii.invariant == Rational(2));
  // sl(2): [h,x]=2x, [h,y]=−2y, [x,y]=h
  CHECK(bianchi_classify(algebra3({{0, 1, vec(0, 2, 0)}, {0, 2, vec(0, 0, -2)}, {1, 2, vec(1, 0, 0)}})).type ==
        "VIII");
  // so(3)
  CHECK(bianchi_classify(algebra3({{0, 1, vec(0, 0, 1)}, {1, 2, vec(1, 0, 0)}, {2, 0, vec(0, 1, 0)}})).type ==
        "IX");
}

TEST_CASE("bianchi type is invariant under a change of basis") {
  // same VI_h algebra with basis f1 = e1 + e3, f2 = e2, f3 = e3 + e2
  const auto base = algebra3({{2, 0, vec(1, 0, 0)}, {2, 1, vec(0, 2, 0)}});
  Matrix<Rational> f(3, 3);
  f(0, 0) = f(2, 0) = Rational(1);
  f(1, 1) = Rational(1);
  f(2, 2) = f(1, 2) = Rational(1);
  const auto finv = *inverse(f);
  LieAlgebraPresentation other({"f1", "f2", "f3"});
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) other.set_bracket(i, j, finv * base.bracket(f.column(i), f.column(j)));
  }
  CHECK(is_lie_homomorphism(other, base, f));
  const auto t = bianchi_classify(other);
  CHECK(t.type == "VI_h");
  CHECK(t.parameters == std::vector<Rational>{Rational(1, 2), Rational(2)});
  CHECK(bianchi_classify(algebra3({{0, 1, vec(0, 0, 1)}})).derived_dimension == 1);
  CHECK_THROWS_AS(bianchi_classify(LieAlgebraPresentation({"a", "b"})), PreconditionError);
}
