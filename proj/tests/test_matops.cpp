#include <doctest.h>

#include <cmath>

#include "discordlab/matops.hpp"
#include "discordlab/states.hpp"
#include "test_helpers.hpp"

using namespace discordlab;
using namespace test_helpers;

TEST_CASE("partial transpose of a product state transposes the B factor") {
    const DensityMatrix a = random_density(2, 2, 11);
    const DensityMatrix b = random_density(3, 3, 12);
    const DensityMatrix prod(kron(a.mat(), b.mat()), 2, 3);

    const BipartiteMatrix pt = partial_transpose(prod);
    ComplexMatrix bt(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) bt(i, j) = b.mat()(j, i);
    CHECK(max_entry_distance(pt.mat, kron(a.mat(), bt)) < 1e-14);
}

TEST_CASE("partial transpose is an involution preserving trace and Hermiticity") {
    for (auto [ma, nb] : standard_dims()) {
        for (int rep = 0; rep < 125; ++rep) {
            const DensityMatrix rho =
                random_bipartite(ma, nb, 1000 + static_cast<uint64_t>(rep) * 7 + ma * 100 + nb);
            const BipartiteMatrix pt = partial_transpose(rho);
            CHECK(pt.mat.is_hermitian());
            CHECK(std::abs(pt.mat.trace() - cplx{1.0, 0.0}) < 1e-12);
            const BipartiteMatrix ptpt = partial_transpose(pt);
            CHECK(max_entry_distance(ptpt.mat, rho.mat()) == 0.0);
        }
    }
}

TEST_CASE("partial transpose of the a=1 Werner state has spectrum (1/2,1/2,1/2,-1/2)") {
    const EigvalVector ev = eigenvalues_descending(partial_transpose(werner(1.0)).mat);
    REQUIRE(ev.size() == 4);
    CHECK(ev[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ev[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ev[3] == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("bipartite labels must match the matrix dimension") {
    CHECK_THROWS_AS(BipartiteMatrix(ComplexMatrix::identity(4), 3, 2), validation_error);
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::identity(4), 3, 2), validation_error);
}

TEST_CASE("partial traces of known states") {
    SUBCASE("Bell phi+ reduces to the maximally mixed qubit") {
        const ComplexMatrix ra = partial_trace_b(bell(BellKind::phi_plus));
        CHECK(std::abs(ra(0, 0) - cplx{0.5, 0.0}) < 1e-15);
        CHECK(std::abs(ra(1, 1) - cplx{0.5, 0.0}) < 1e-15);
        CHECK(std::abs(ra(0, 1)) < 1e-15);
    }
    SUBCASE("product state reduces to its factors") {
        const DensityMatrix a = random_density(2, 1, 21);
        const DensityMatrix b = random_density(4, 2, 22);
        const DensityMatrix prod(kron(a.mat(), b.mat()), 2, 4);
        CHECK(max_entry_distance(partial_trace_b(prod), a.mat()) < 1e-13);
        CHECK(max_entry_distance(partial_trace_a(prod), b.mat()) < 1e-13);
    }
    SUBCASE("uc corner u=1/2, c=0 reduces to diag(1/2, 1/2) on A") {
        // Direct summation over the family's terms: all mass sits on |02>,|12>.
        const ComplexMatrix ra = partial_trace_b(uc_family(0.5, 0.0));
        CHECK(std::abs(ra(0, 0) - cplx{0.5, 0.0}) < 1e-15);
        CHECK(std::abs(ra(1, 1) - cplx{0.5, 0.0}) < 1e-15);
        CHECK(std::abs(ra(0, 1)) < 1e-15);
    }
    SUBCASE("partial traces are unit-trace Hermitian PSD") {
        for (int rep = 0; rep < 20; ++rep) {
            const DensityMatrix rho = random_bipartite(2, 3, 300 + static_cast<uint64_t>(rep));
            for (const ComplexMatrix& red : {partial_trace_b(rho), partial_trace_a(rho)}) {
                CHECK(red.is_hermitian());
                CHECK(std::abs(red.trace() - cplx{1.0, 0.0}) < 1e-10);
                CHECK(eigenvalues_descending(red).back() >= -1e-10);
            }
        }
    }
}

TEST_CASE("eigenvalues of simple spectra") {
    SUBCASE("maximally mixed") {
        ComplexMatrix m = ComplexMatrix::identity(4);
        m *= 0.25;
        for (double v : eigenvalues_descending(m)) CHECK(v == doctest::Approx(0.25).epsilon(1e-14));
    }
    SUBCASE("pure Bell state") {
        const EigvalVector ev = eigenvalues_descending(bell(BellKind::phi_plus).mat());
        CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(ev[1]) < 1e-12);
        CHECK(std::abs(ev[2]) < 1e-12);
        CHECK(std::abs(ev[3]) < 1e-12);
    }
    SUBCASE("partial transpose of the d=3 maximally entangled state") {
        // PT of |phi+><phi+| is the swap operator over d, spectrum +-1/d with
        // multiplicities d(d+1)/2 and d(d-1)/2.
        const EigvalVector ev = eigenvalues_descending(partial_transpose(max_entangled(3)).mat);
        REQUIRE(ev.size() == 9);
        for (int i = 0; i < 6; ++i) CHECK(ev[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        for (int i = 6; i < 9; ++i) CHECK(ev[i] == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    }
}

TEST_CASE("eigensystem reconstructs the input") {
    for (auto [ma, nb] : standard_dims()) {
        const DensityMatrix rho = random_bipartite(ma, nb, 400 + ma * 10 + nb);
        for (const ComplexMatrix& h : {rho.mat(), partial_transpose(rho).mat}) {
            const EigenSystem es = hermitian_eigensystem(h);
            ComplexMatrix rebuilt(h.dim());
            for (int k = 0; k < h.dim(); ++k) {
                ComplexMatrix outer = ComplexMatrix::outer(es.vectors[k], es.vectors[k]);
                outer *= es.values[k];
                rebuilt += outer;
            }
            CHECK(frobenius_distance(rebuilt, h) < 1e-8);
        }
    }
}

TEST_CASE("eigenvalues of random states are a descending unit-mass spectrum") {
    for (auto [ma, nb] : standard_dims()) {
        for (int rep = 0; rep < 125; ++rep) {
            const DensityMatrix rho =
                random_bipartite(ma, nb, 5000 + static_cast<uint64_t>(rep) * 13 + ma + nb);
            const EigvalVector ev = eigenvalues_descending(rho.mat());
            double sum = 0.0;
            for (size_t i = 0; i < ev.size(); ++i) {
                if (i > 0) CHECK(ev[i] <= ev[i - 1]);
                CHECK(ev[i] >= -1e-10);
                CHECK(ev[i] <= 1.0 + 1e-10);
                sum += ev[i];
            }
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("eigensolver rejects non-Hermitian input") {
    ComplexMatrix m(2);
    m(0, 1) = cplx{1.0, 0.0};
    CHECK_THROWS_AS(eigenvalues_descending(m), validation_error);
}

TEST_CASE("von Neumann entropy") {
    SUBCASE("pure states carry no entropy") {
        for (BellKind k :
             {BellKind::psi_plus, BellKind::psi_minus, BellKind::phi_plus, BellKind::phi_minus})
            CHECK(von_neumann_entropy(bell(k)) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("maximally mixed two-qubit state has two bits") {
        ComplexMatrix m = ComplexMatrix::identity(4);
        m *= 0.25;
        CHECK(von_neumann_entropy(DensityMatrix(m, 2, 2)) == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("Werner a=1/2 matches the Shannon entropy of its closed-form spectrum") {
        const double expected = shannon_bits({5.0 / 8.0, 1.0 / 8.0, 1.0 / 8.0, 1.0 / 8.0});
        CHECK(von_neumann_entropy(werner(0.5)) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("relative entropy") {
    SUBCASE("zero exactly when the states coincide") {
        const DensityMatrix rho = random_bipartite(2, 2, 61);
        const DensityMatrix sig = random_bipartite(2, 2, 62);
        CHECK(relative_entropy(rho, rho) == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(relative_entropy(rho, sig) > 1e-3);
    }
    SUBCASE("pure state against maximally mixed gives ln 2") {
        ComplexMatrix pure(2);
        pure(0, 0) = 1.0;
        ComplexMatrix mixed = ComplexMatrix::identity(2);
        mixed *= 0.5;
        CHECK(relative_entropy(DensityMatrix(pure, 2, 1), DensityMatrix(mixed, 2, 1)) ==
              doctest::Approx(std::log(2.0)).epsilon(1e-12));
    }
    SUBCASE("support violation returns the infinity sentinel") {
        ComplexMatrix p0(2), p1(2);
        p0(0, 0) = 1.0;
        p1(1, 1) = 1.0;
        const double s = relative_entropy(DensityMatrix(p0, 2, 1), DensityMatrix(p1, 2, 1));
        CHECK(std::isinf(s));
    }
    SUBCASE("dimension mismatch is rejected") {
        CHECK_THROWS_AS(
            relative_entropy(random_bipartite(2, 2, 1), random_bipartite(2, 3, 2)),
            validation_error);
    }
    SUBCASE("quantum Pinsker inequality on random full-rank pairs") {
        for (int rep = 0; rep < 100; ++rep) {
            const DensityMatrix rho = random_bipartite(2, 2, 7000 + static_cast<uint64_t>(rep));
            const DensityMatrix sig = random_bipartite(2, 2, 8000 + static_cast<uint64_t>(rep));
            ComplexMatrix diff = rho.mat();
            diff -= sig.mat();
            const double tn = trace_norm(diff);
            CHECK(relative_entropy(rho, sig) >= tn * tn / (2.0 * std::log(2.0)) - 1e-12);
        }
        for (int rep = 0; rep < 100; ++rep) {
            const DensityMatrix rho = random_bipartite(2, 3, 9000 + static_cast<uint64_t>(rep));
            const DensityMatrix sig = random_bipartite(2, 3, 9500 + static_cast<uint64_t>(rep));
            ComplexMatrix diff = rho.mat();
            diff -= sig.mat();
            const double tn = trace_norm(diff);
            CHECK(relative_entropy(rho, sig) >= tn * tn / (2.0 * std::log(2.0)) - 1e-12);
        }
    }
}

TEST_CASE("norms") {
    SUBCASE("zero matrix") {
        const ComplexMatrix z(3);
        CHECK(hs_norm_sq(z) == 0.0);
        CHECK(trace_norm(z) == 0.0);
    }
    SUBCASE("diag(1,-1)") {
        ComplexMatrix m(2);
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
        CHECK(trace_norm(m) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(hs_norm_sq(m) == doctest::Approx(2.0).epsilon(1e-14));
    }
    SUBCASE("trace norm dominates the Hilbert-Schmidt norm") {
        for (int rep = 0; rep < 50; ++rep) {
            const DensityMatrix rho = random_bipartite(2, 3, 100 + static_cast<uint64_t>(rep));
            const DensityMatrix sig = random_bipartite(2, 3, 200 + static_cast<uint64_t>(rep));
            ComplexMatrix diff = rho.mat();
            diff -= sig.mat();
            CHECK(trace_norm(diff) >= std::sqrt(hs_norm_sq(diff)) - 1e-12);
        }
    }
    SUBCASE("non-Hermitian input to trace_norm is rejected") {
        ComplexMatrix m(2);
        m(0, 1) = cplx{0.0, 1.0};
        m(1, 0) = cplx{0.0, 1.0};  // Hermitian would need -i here
        CHECK_THROWS_AS(trace_norm(m), validation_error);
    }
}

TEST_CASE("eigenvalue-vector inequality for the Hilbert-Schmidt distance") {
    // ||A - B||_2^2 >= ||lambda(A) - lambda(B)||_2^2 on random unit-trace
    // Hermitian pairs: states and their partial transposes.
    int checked = 0;
    for (auto [ma, nb] : standard_dims()) {
        for (int rep = 0; rep < 125; ++rep) {
            const uint64_t s = 4000 + static_cast<uint64_t>(rep) * 11 + ma * 100 + nb;
            const DensityMatrix rho = random_bipartite(ma, nb, s);
            const DensityMatrix sig = random_bipartite(ma, nb, s + 500000);
            const ComplexMatrix a = (rep % 2 == 0) ? rho.mat() : partial_transpose(rho).mat;
            const ComplexMatrix b = (rep % 3 == 0) ? partial_transpose(sig).mat : sig.mat();
            ComplexMatrix diff = a;
            diff -= b;
            const EigvalVector la = eigenvalues_descending(a);
            const EigvalVector lb = eigenvalues_descending(b);
            double lam_dist = 0.0;
            for (size_t i = 0; i < la.size(); ++i)
                lam_dist += (la[i] - lb[i]) * (la[i] - lb[i]);
            CHECK(hs_norm_sq(diff) >= lam_dist - 1e-11);
            ++checked;
        }
    }
    CHECK(checked == 500);
}

TEST_CASE("second-order principal minors") {
    SUBCASE("identity gives 1 for every pair") {
        const ComplexMatrix id = ComplexMatrix::identity(6);
        for (int n = 1; n <= 6; ++n)
            for (int m = n + 1; m <= 6; ++m) CHECK(principal_minor_2(id, n, m) == 1.0);
    }
    SUBCASE("Werner family closed forms") {
        // Hand expansion: rho_11 = rho_44 = (1-a)/4, rho_14 = 0, rho_23 = -a/2.
        for (double a : {0.1, 0.3, 0.7, 1.0}) {
            const DensityMatrix rho = werner(a);
            const double diag_term = (1.0 - a) * (1.0 - a) / 16.0;
            CHECK(principal_minor_2(rho.mat(), 1, 4) ==
                  doctest::Approx(diag_term).epsilon(1e-12));
            CHECK(principal_minor_2(partial_transpose(rho).mat, 1, 4) ==
                  doctest::Approx(diag_term - a * a / 4.0).epsilon(1e-12));
        }
    }
    SUBCASE("agrees with the generic 2x2 determinant oracle") {
        for (int rep = 0; rep < 30; ++rep) {
            const DensityMatrix rho = random_bipartite(2, 3, 600 + static_cast<uint64_t>(rep));
            const ComplexMatrix& m = rho.mat();
            for (int n = 1; n <= 6; ++n)
                for (int mm = n + 1; mm <= 6; ++mm) {
                    const cplx det = det2_oracle(m, n, mm);
                    CHECK(principal_minor_2(m, n, mm) ==
                          doctest::Approx(det.real()).epsilon(1e-12));
                    CHECK(std::abs(det.imag()) < 1e-12);  // real for Hermitian input
                }
        }
    }
    SUBCASE("index validation") {
        const ComplexMatrix id = ComplexMatrix::identity(4);
        CHECK_THROWS_AS(principal_minor_2(id, 0, 2), validation_error);
        CHECK_THROWS_AS(principal_minor_2(id, 2, 2), validation_error);
        CHECK_THROWS_AS(principal_minor_2(id, 3, 2), validation_error);
        CHECK_THROWS_AS(principal_minor_2(id, 1, 5), validation_error);
    }
}
