#include <random>

#include "catch_amalgamated.hpp"
#include "samuel/samuel.hpp"

using namespace samuel;

namespace {

template <class F>
Matrix<F> random_matrix(const F& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 0) {
  Matrix<F> m(f, r, c);
  std::uniform_int_distribution<int> d(-5, 5);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      const int v = d(rng);
      m(i, j) = (std::abs(v) <= zero_bias) ? f.zero() : f.from_int(v);
    }
  }
  return m;
}

template <class F>
void check_nullspace(const Matrix<F>& m) {
  const auto basis = nullspace(m);
  CHECK(rank(m) + basis.size() == m.cols());
  for (const auto& v : basis) CHECK((m * v).is_zero());
}

}  // namespace

TEST_CASE("field_arith on the worked values") {
  const auto f5 = FieldConfig::prime(5);
  CHECK(field_arith(FieldOp::Inv, FieldElement::from_int(f5, 2)) == FieldElement::from_int(f5, 3));

  const auto qq = FieldConfig::rationals();
  CHECK(field_arith(FieldOp::Add, FieldElement::from_rational(qq, 1, 2), FieldElement::from_rational(qq, 1, 3)) ==
        FieldElement::from_rational(qq, 5, 6));

  const auto fp = FieldConfig::prime(32003);
  CHECK(field_arith(FieldOp::Mul, FieldElement::from_int(fp, 16001), FieldElement::from_int(fp, 2)).residue() == 32002);
  CHECK(field_arith(FieldOp::Mul, FieldElement::from_int(fp, 16002), FieldElement::from_int(fp, 2)).residue() == 1);
}

TEST_CASE("field_arith errors") {
  const auto fp = FieldConfig::prime(7);
  const auto qq = FieldConfig::rationals();
  try {
    field_arith(FieldOp::Inv, FieldElement::from_int(fp, 14));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  try {
    field_arith(FieldOp::Div, FieldElement::from_int(qq, 1), FieldElement::from_int(qq, 0));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  try {
    field_arith(FieldOp::Add, FieldElement::from_int(fp, 1), FieldElement::from_int(qq, 1));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MixedFields);
  }
}

TEST_CASE("canonical forms") {
  const auto qq = FieldConfig::rationals();
  const auto x = FieldElement::from_rational(qq, 2, -4);
  CHECK(x.rational().get_num() == -1);
  CHECK(x.rational().get_den() == 2);
  CHECK(FieldElement::from_int(FieldConfig::prime(7), -1).residue() == 6);
  CHECK(FieldElement::from_int(FieldConfig::prime(7), 15).residue() == 1);
}

TEST_CASE("field configuration") {
  CHECK_THROWS_AS(FieldConfig::prime(4), Error);
  CHECK_THROWS_AS(FieldConfig::prime(2), Error);
  CHECK_THROWS_AS(FieldConfig::prime(2147483659ULL), Error);
  CHECK(FieldConfig::prime(2147483647ULL).characteristic == 2147483647ULL);
  CHECK(FieldConfig::parse("qq").kind == FieldKind::Rationals);
  CHECK(FieldConfig::parse("fp:101").characteristic == 101);
  CHECK_THROWS_AS(FieldConfig::parse("fp:100"), Error);
  CHECK(is_prime(32003));
  CHECK(!is_prime(32001));
}

TEST_CASE("prime field inverse round trip") {
  const PrimeField f(32003);
  for (std::uint32_t a = 1; a < 32003; a += 97) CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("rank and nullspace small cases") {
  const RationalField qq;
  CHECK(nullspace(Matrix<RationalField>(qq, 2, 3)).size() == 3);
  CHECK(nullspace(Matrix<RationalField>::identity(qq, 4)).empty());
  CHECK(rank(Matrix<RationalField>::identity(qq, 3)) == 3);
  CHECK(rank(Matrix<RationalField>(qq, 3, 5)) == 0);
  CHECK(rank(Matrix<RationalField>::from_ints(qq, {{1, 2}, {2, 4}})) == 1);
  CHECK(nullity(Matrix<RationalField>::from_ints(qq, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("nullspace basis is in reduced echelon form") {
  const RationalField qq;
  const auto m = Matrix<RationalField>::from_ints(qq, {{1, 2, 3, 4}, {2, 4, 7, 9}});
  const auto basis = nullspace(m);
  REQUIRE(basis.size() == 2);
  // Free columns 1 and 3 carry a 1 in their own slot and 0 in the other.
  CHECK(basis[0](1, 0) == 1);
  CHECK(basis[0](3, 0) == 0);
  CHECK(basis[1](1, 0) == 0);
  CHECK(basis[1](3, 0) == 1);
  check_nullspace(m);
}

TEST_CASE("random matrices over F_p") {
  std::mt19937_64 rng(11);
  const PrimeField f(32003);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    const auto m = random_matrix(f, r, c, rng, static_cast<int>(rng() % 4));
    check_nullspace(m);
    CHECK(rank(m) == rank(m.transposed()));
    const auto sq = random_matrix(f, r, r, rng, static_cast<int>(rng() % 4));
    CHECK(rank(sq) == rank(sq.transposed()));
  }
}

TEST_CASE("random matrices over Q") {
  std::mt19937_64 rng(12);
  const RationalField qq;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    const auto m = random_matrix(qq, r, c, rng, static_cast<int>(rng() % 4));
    check_nullspace(m);
    CHECK(rank(m) == rank(m.transposed()));
  }
}

TEST_CASE("rank agrees between Q and F_p for small integer matrices") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    std::vector<std::vector<long long>> rows(r, std::vector<long long>(c));
    for (auto& row : rows) {
      for (auto& x : row) x = static_cast<long long>(rng() % 5) - 2;
    }
    CHECK(rank(Matrix<RationalField>::from_ints({}, rows)) == rank(Matrix<PrimeField>::from_ints(PrimeField(32003), rows)));
  }
}

TEST_CASE("solve") {
  const RationalField qq;
  const auto a = Matrix<RationalField>::from_ints(qq, {{2, 1}, {1, 3}});
  const auto x = solve(a, {mpq_class(3), mpq_class(5)});
  CHECK(x[0] == mpq_class(4, 5));
  CHECK(x[1] == mpq_class(7, 5));
  CHECK_THROWS_AS(solve(Matrix<RationalField>::from_ints(qq, {{1, 2}, {2, 4}}), {mpq_class(1), mpq_class(1)}), Error);
}

TEST_CASE("rational field axioms on random triples") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<long> d(-50, 50);
  auto pick = [&] {
    long den = d(rng);
    if (den == 0) den = 1;
    mpq_class q(d(rng), den);
    q.canonicalize();
    return q;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const mpq_class a = pick(), b = pick(), c = pick();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (sgn(b) != 0) CHECK((a / b) * b == a);
  }
}

TEST_CASE("prime field axioms on random triples") {
  std::mt19937_64 rng(15);
  const PrimeField f(101);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = f.from_int(static_cast<long long>(rng() % 101));
    const auto b = f.from_int(static_cast<long long>(rng() % 101));
    const auto c = f.from_int(static_cast<long long>(rng() % 101));
    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    CHECK(f.add(a, f.neg(a)) == 0);
    CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
  }
}
