#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "ejnf/spectral.hpp"
#include "ejnf/verify.hpp"
#include "test_support.hpp"

namespace ejnf {
namespace {

Scalar i() { return Scalar::i(); }

TEST(Polynomial, DivmodGcdLcm) {
  Polynomial a({-1, 0, 1});  // z² − 1
  Polynomial b({1, 1});      // z + 1
  auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, Polynomial({-1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(a, Polynomial({-1, 1})), Polynomial({-1, 1}));
  EXPECT_EQ(lcm(Polynomial({-1, 1}), Polynomial({1, 1})), a);
  EXPECT_EQ(lcm(Polynomial({1, -2, 1}), Polynomial({-1, 1})), Polynomial({1, -2, 1}));
  EXPECT_EQ(format_polynomial(Polynomial({-2, 0, 0, 1})), "z^3 - 2");
  EXPECT_EQ(format_polynomial(Polynomial({1, -2, 1})), "z^2 - 2z + 1");
}

TEST(PolyRoots, Examples) {
  EXPECT_EQ(poly_roots_exact(Polynomial({1, -2, 1})),
            (std::vector<RootMultiplicity>{{1, 2}}));
  EXPECT_EQ(poly_roots_exact(Polynomial({1, 0, 1})),
            (std::vector<RootMultiplicity>{{-i(), 1}, {i(), 1}}));
  try {
    (void)poly_roots_exact(Polynomial({-2, 0, 0, 1}));
    ADD_FAILURE();
  } catch (const SpectrumNotRepresentable& e) {
    EXPECT_EQ(e.unresolved(), Polynomial({-2, 0, 0, 1}));
    EXPECT_NE(std::string(e.what()).find("z^3 - 2"), std::string::npos);
  }
}

TEST(PolyRoots, RationalDeflation) {
  // 6(z − 1/2)(z + 2/3)²(z − 3)
  Polynomial p = Polynomial::linear_factor(Scalar(Rational(1, 2))) *
                 Polynomial::linear_factor(Scalar(Rational(-2, 3))) *
                 Polynomial::linear_factor(Scalar(Rational(-2, 3))) *
                 Polynomial::linear_factor(Scalar(3)) * Scalar(6);
  EXPECT_EQ(poly_roots_exact(p),
            (std::vector<RootMultiplicity>{{Scalar(Rational(-2, 3)), 2},
                                           {Scalar(Rational(1, 2)), 1},
                                           {Scalar(3), 1}}));
}

TEST(PolyRoots, QuadraticRemainderNotSquare) {
  // (z − 1)(z² − 2): rational root found, √2 left over.
  Polynomial p = Polynomial::linear_factor(1) * Polynomial({-2, 0, 1});
  try {
    (void)poly_roots_exact(p);
    ADD_FAILURE();
  } catch (const SpectrumNotRepresentable& e) {
    EXPECT_EQ(e.unresolved(), Polynomial({-2, 0, 1}));
  }
}

TEST(PolyRoots, GaussianRootsOfHigherDegree) {
  // (z² + 1)(z² + 4) has roots ±i, ±2i; degree 4 with no rational roots.
  Polynomial real = Polynomial({1, 0, 1}) * Polynomial({4, 0, 1});
  EXPECT_EQ(poly_roots_exact(real),
            (std::vector<RootMultiplicity>{{Scalar(0, -2), 1}, {-i(), 1}, {i(), 1}, {Scalar(0, 2), 1}}));
  // z(z − 1)(z + 1)(z − 2)(z − i): complex coefficients, degree 5.
  Polynomial complex = Polynomial::monomial(1);
  for (Scalar r : {Scalar(1), Scalar(-1), Scalar(2), i()}) complex = complex * Polynomial::linear_factor(r);
  EXPECT_EQ(poly_roots_exact(complex),
            (std::vector<RootMultiplicity>{{-1, 1}, {0, 1}, {i(), 1}, {1, 1}, {2, 1}}));
  // (z − (1/2 + 3/2 i))³ (z − 5)
  Scalar r(Rational(1, 2), Rational(3, 2));
  Polynomial mixed = Polynomial::linear_factor(r) * Polynomial::linear_factor(r) *
                     Polynomial::linear_factor(r) * Polynomial::linear_factor(5);
  EXPECT_EQ(poly_roots_exact(mixed), (std::vector<RootMultiplicity>{{r, 3}, {5, 1}}));
}

TEST(PolyRoots, ComplexQuadratic) {
  // (z − (1 + i))(z − (2 − i)) = z² − 3z + (3 + i)
  Polynomial p = Polynomial::linear_factor(Scalar(1, 1)) * Polynomial::linear_factor(Scalar(2, -1));
  EXPECT_EQ(poly_roots_exact(p),
            (std::vector<RootMultiplicity>{{Scalar(1, 1), 1}, {Scalar(2, -1), 1}}));
}

TEST(FindEigenvalue, Examples) {
  EXPECT_EQ(find_eigenvalue(Matrix{{1, 1}, {0, 1}}), Scalar(1));
  EXPECT_EQ(find_eigenvalue(Matrix{{2, 1, 1}, {-4, 5, 4}, {1, 0, 2}}), Scalar(3));
  EXPECT_EQ(find_eigenvalue(Matrix{{0, -1}, {1, 0}}), -i());
}

TEST(Spectrum, Examples) {
  EXPECT_EQ(spectrum(Matrix{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}).entries,
            (std::vector<SpectrumEntry>{{1, 3, 1, 3}}));
  EXPECT_EQ(spectrum(Matrix{{2, 0}, {0, 5}}).entries,
            (std::vector<SpectrumEntry>{{2, 1, 1, 1}, {5, 1, 1, 1}}));
  EXPECT_EQ(spectrum(Matrix{{2, 1, 1}, {-4, 5, 4}, {1, 0, 2}}).entries,
            (std::vector<SpectrumEntry>{{3, 3, 1, 3}}));
}

TEST(Spectrum, ProvidedEigenvalues) {
  Matrix a{{2, 1, 1}, {-4, 5, 4}, {1, 0, 2}};
  EXPECT_EQ(spectrum(a, std::vector<Scalar>{3}), spectrum(a));

  Matrix d{{2, 0}, {0, 5}};
  EXPECT_EQ(spectrum(d, std::vector<Scalar>{5, 2}), spectrum(d));

  auto expect_kind = [](auto&& f, ErrorKind kind) {
    try {
      f();
      ADD_FAILURE() << "no error";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), kind) << e.what();
    }
  };
  expect_kind([&] { (void)spectrum(a, std::vector<Scalar>{1}); }, ErrorKind::InvalidProvidedEigenvalue);
  expect_kind([&] { (void)spectrum(d, std::vector<Scalar>{2, 2, 5}); },
              ErrorKind::InvalidProvidedEigenvalue);
  expect_kind([&] { (void)spectrum(d, std::vector<Scalar>{2}); }, ErrorKind::IncompleteSpectrum);
}

TEST(Spectrum, ProvidedBypassesRootFinding) {
  // Companion matrix of z³ − 2 over a matrix with eigenvalue 1 appended:
  // the escape hatch cannot complete the spectrum either.
  Matrix cube{{0, 0, 2}, {1, 0, 0}, {0, 1, 0}};
  EXPECT_THROW((void)spectrum(cube), SpectrumNotRepresentable);
  try {
    (void)spectrum(cube, std::vector<Scalar>{1});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidProvidedEigenvalue);
  }
}

TEST(MinimalPolynomial, AnnihilatesAndIsMinimal) {
  testing::Gen gen(31);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = gen.integer(1, 5);
    JordanStructure s;
    // Random structure over a small palette.
    std::vector<Scalar> palette{0, 1, -1, 2, i()};
    std::size_t remaining = n;
    std::size_t e = 0;
    while (remaining > 0) {
      std::size_t len = gen.integer(1, static_cast<std::int64_t>(remaining));
      if (!s.eigenvalues.empty() && s.eigenvalues.back().lambda == palette[e] && gen.integer(0, 1)) {
        s.eigenvalues.back().chain_lengths.push_back(len);
      } else {
        if (!s.eigenvalues.empty()) ++e;
        s.eigenvalues.push_back({palette[e], {len}});
      }
      remaining -= len;
    }
    Matrix a = generate_case(s, trial, 2).A;
    Polynomial p = minimal_polynomial(a);
    ASSERT_TRUE(evaluate(p, a).is_zero());
    // Degree equals Σ over eigenvalues of the longest chain.
    std::size_t expected_degree = 0;
    for (const auto& ev : s.eigenvalues) {
      expected_degree += *std::max_element(ev.chain_lengths.begin(), ev.chain_lengths.end());
    }
    ASSERT_EQ(p.degree(), static_cast<int>(expected_degree)) << format_structure(s);
    for (const auto& [root, mult] : poly_roots_exact(p)) {
      Polynomial divisor = divmod(p, Polynomial::linear_factor(root)).first;
      ASSERT_FALSE(evaluate(divisor, a).is_zero());
    }
  }
}

std::map<Scalar, std::size_t> multiset(const Spectrum& s) {
  std::map<Scalar, std::size_t> out;
  for (const auto& e : s.entries) out[e.lambda] = e.multiplicity;
  return out;
}

TEST(SpectrumProperty, SimilarityInvariance) {
  testing::Gen gen(32);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = gen.integer(1, 5);
    Matrix a = gen.matrix(n, n);
    // Upper triangular keeps the spectrum rational.
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < r; ++c) a(r, c) = 0;
    auto [s, s_inv] = random_conjugator(n, trial, 3);
    ASSERT_EQ(s * s_inv, Matrix::identity(n));
    ASSERT_EQ(multiset(spectrum(a)), multiset(spectrum(s * a * s_inv)));
  }
}

TEST(SpectrumProperty, TriangularDiagonal) {
  testing::Gen gen(33);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = gen.integer(1, 5);
    Matrix a = gen.matrix(n, n, true);
    std::map<Scalar, std::size_t> diagonal;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < r; ++c) a(r, c) = 0;
      if (gen.integer(0, 2) == 0) a(r, r) = a(0, 0);  // force repeats
      ++diagonal[a(r, r)];
    }
    Spectrum s = spectrum(a);
    ASSERT_EQ(multiset(s), diagonal);
    for (const auto& e : s.entries) {
      ASSERT_FALSE(nullspace_basis(shifted(a, e.lambda)).empty());
      ASSERT_LE(1u, e.geometric_dim);
      ASSERT_LE(e.geometric_dim, e.multiplicity);
      ASSERT_LE(1u, e.max_stage);
      ASSERT_LE(e.max_stage, e.multiplicity);
    }
  }
}

}  // namespace
}  // namespace ejnf
